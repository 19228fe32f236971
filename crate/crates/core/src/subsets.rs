//! Lexicographic k-subset enumeration and binomial coefficients.

/// C(n, k), exact. Panics on overflow past u64, which no supported
/// workload approaches (the checker guards C(v,t) at 10^7).
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
    }
    u64::try_from(acc).expect("binomial overflows u64")
}

/// Calls `f` once per k-subset of {0..n}, in lexicographic order, with the
/// subset as a sorted slice of indices. The slice is reused between calls.
pub fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        // Advance to the lexicographic successor: bump the rightmost index
        // that is not at its maximum, then reset everything after it.
        let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
