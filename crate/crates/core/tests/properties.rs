//! Randomized properties: the design file format round-trips, the reader
//! canonicalizes, the verifier's counting identity holds, and no
//! subfamily of the 132 blocks ever covers a five-set twice.

use std::sync::OnceLock;

use proptest::collection::vec;
use proptest::prelude::*;
use proptest::sample::subsequence;
use witt12::checker::{read_design, verify_steiner, write_design, Design};
use witt12::subsets::binomial;
use witt12::{Plane, WittDesign};

/// An arbitrary valid design: v points, uniform block size k ≤ 6, up to
/// twenty (possibly repeated) blocks.
fn arb_design(max_v: usize) -> impl Strategy<Value = Design> {
    (2usize..=max_v)
        .prop_flat_map(|v| (Just(v), 1..=v.min(6)))
        .prop_flat_map(|(v, k)| {
            let points: Vec<u16> = (0..v as u16).collect();
            vec(subsequence(points, k), 0..=20)
                .prop_map(move |blocks| Design::new(v, k, blocks).expect("sampled blocks fit"))
        })
}

fn w12_blocks() -> &'static [Vec<u16>] {
    static BLOCKS: OnceLock<Vec<Vec<u16>>> = OnceLock::new();
    BLOCKS.get_or_init(|| {
        let w = WittDesign::build(&Plane::build(3).unwrap(), 0).unwrap();
        w.to_design().blocks().to_vec()
    })
}

struct XorShift(u64);

impl XorShift {
    fn next(&mut self) -> u64 {
        self.0 ^= self.0 << 13;
        self.0 ^= self.0 >> 7;
        self.0 ^= self.0 << 17;
        self.0
    }
}

proptest! {
    #[test]
    fn file_round_trip_is_identity(design in arb_design(40)) {
        let text = write_design(&design);
        let back = read_design(&text).unwrap();
        prop_assert_eq!(&back, &design);
        prop_assert_eq!(write_design(&back), text);
    }

    /// Block order and comment lines are presentation, not content.
    #[test]
    fn reader_ignores_line_order_and_comments(design in arb_design(40), seed in 1u64..) {
        let text = write_design(&design);
        let mut rng = XorShift(seed);
        let (header, rest) = text.split_once('\n').unwrap();
        let mut lines: Vec<&str> = rest.lines().collect();
        for i in (1..lines.len()).rev() {
            lines.swap(i, rng.next() as usize % (i + 1));
        }
        let mut shuffled = format!("{header}\n");
        for line in lines {
            if rng.next() % 3 == 0 {
                shuffled.push_str("# noise\n");
            }
            shuffled.push_str(line);
            shuffled.push('\n');
        }
        prop_assert_eq!(read_design(&shuffled).unwrap(), design);
    }

    #[test]
    fn subfamilies_of_w12_never_double_cover(chosen in subsequence(w12_blocks().to_vec(), 0..=132)) {
        let b = chosen.len();
        let report = verify_steiner(&Design::new(12, 6, chosen).unwrap(), 5).unwrap();
        prop_assert!(report.r_max <= 1);
        // dropping blocks can only uncover five-sets, never double them
        prop_assert!(report.failures.iter().all(|(_, r)| *r == 0));
        prop_assert_eq!(report.is_steiner, b == 132);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Σ r(M) = b·C(k,t) and the histogram partitions all C(v,t) t-sets,
    /// Steiner or not.
    #[test]
    fn verifier_counting_identity(design in arb_design(14), t_pick in 1usize..=6) {
        let t = t_pick.min(design.k());
        let report = verify_steiner(&design, t).unwrap();
        prop_assert_eq!(report.sum_r, report.expected_sum);
        let t_sets = binomial(design.v() as u64, t as u64);
        prop_assert_eq!(report.histogram.values().sum::<u64>(), t_sets);
        let all_once = report.histogram.get(&1) == Some(&t_sets);
        prop_assert_eq!(report.is_steiner, all_once);
    }
}
