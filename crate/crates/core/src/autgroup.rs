//! Brute-force enumeration of the automorphism group of an S(5,6,12).
//!
//! Because every 5-set lies in exactly one block, an automorphism is
//! determined by the images of any 5 points: the sixth point of each
//! block through mapped points is forced. Enumerating all 12·11·10·9·8 =
//! 95040 ordered image tuples of a fixed base therefore finds the whole
//! group, and sharp 5-transitivity holds exactly when every tuple
//! extends to precisely one automorphism.

use std::collections::HashSet;
use std::fmt;

use crate::checker::Design;
use crate::error::Error;
use crate::subsets::for_each_subset;

/// A permutation of the 12 design points; `images[i]` is the image of i.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    pub images: [u8; 12],
}

impl Permutation {
    pub fn identity() -> Permutation {
        let mut images = [0u8; 12];
        for (i, x) in images.iter_mut().enumerate() {
            *x = i as u8;
        }
        Permutation { images }
    }

    pub fn apply(&self, p: u8) -> u8 {
        self.images[usize::from(p)]
    }

    /// `self` then `other`: (self.then(other)).apply(p) = other.apply(self.apply(p)).
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation { images: self.images.map(|x| other.apply(x)) }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = [0u8; 12];
        for (i, &x) in self.images.iter().enumerate() {
            images[usize::from(x)] = i as u8;
        }
        Permutation { images }
    }

    /// Bit-mask image: maps a 12-bit point set through the permutation.
    fn apply_mask(&self, mask: u16) -> u16 {
        let mut out = 0u16;
        let mut m = mask;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            out |= 1 << self.images[i];
            m &= m - 1;
        }
        out
    }
}

impl fmt::Display for Permutation {
    /// One-line image array: `0 1 2 ... 11`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut sep = "";
        for x in self.images {
            write!(f, "{sep}{x}")?;
            sep = " ";
        }
        Ok(())
    }
}

/// Bitmask lookup tables for one S(5,6,12): the block through any 5-set
/// and block membership, both indexed by 12-bit masks.
pub struct BlockTables {
    /// block mask for each 5-element mask; 0 = absent.
    five_block: Vec<u16>,
    is_block: Vec<bool>,
    block_masks: Vec<u16>,
}

impl BlockTables {
    /// Requires v=12, k=6 and the Steiner property (every 5-mask covered
    /// exactly once) — which pins b = 132.
    pub fn new(design: &Design) -> Result<BlockTables, Error> {
        if design.v() != 12 || design.k() != 6 {
            return Err(Error::WrongShape { v: design.v(), k: design.k() });
        }
        let mut five_block = vec![0u16; 1 << 12];
        let mut is_block = vec![false; 1 << 12];
        let mut block_masks = Vec::with_capacity(design.b());
        for block in design.blocks() {
            let mask = block.iter().fold(0u16, |m, &p| m | 1 << p);
            if is_block[usize::from(mask)] {
                return Err(Error::NotSteiner(format!("block {block:?} listed twice")));
            }
            is_block[usize::from(mask)] = true;
            block_masks.push(mask);
            for_each_subset(6, 5, |pick| {
                let five = pick.iter().fold(0u16, |m, &i| m | 1 << block[i]);
                if five_block[usize::from(five)] != 0 {
                    five_block[usize::from(five)] = u16::MAX; // conflict marker
                } else {
                    five_block[usize::from(five)] = mask;
                }
            });
        }
        let mut holes = 0u32;
        for mask in 0..1u16 << 12 {
            if mask.count_ones() == 5 {
                match five_block[usize::from(mask)] {
                    0 => holes += 1,
                    u16::MAX => {
                        return Err(Error::NotSteiner(format!(
                            "five-set mask {mask:#06x} lies in two blocks"
                        )))
                    }
                    _ => {}
                }
            }
        }
        if holes != 0 {
            return Err(Error::NotSteiner(format!("{holes} five-sets lie in no block")));
        }
        Ok(BlockTables { five_block, is_block, block_masks })
    }

    /// The block through a 5-set given as a mask with five bits.
    fn block_through(&self, five: u16) -> u16 {
        debug_assert_eq!(five.count_ones(), 5);
        self.five_block[usize::from(five)]
    }

    /// True iff the permutation maps every block onto a block. Since a
    /// bijection on pointsets is injective on the 132 block images, onto
    /// follows.
    pub fn is_automorphism(&self, p: &Permutation) -> bool {
        self.block_masks.iter().all(|&m| self.is_block[usize::from(p.apply_mask(m))])
    }
}

/// The sixth point of `block` beyond a contained 5-set.
fn sixth(block: u16, five: u16) -> u8 {
    debug_assert_eq!((block & five), five);
    (block ^ five).trailing_zeros() as u8
}

/// Partial point map with forward and backward injectivity tracking.
#[derive(Clone)]
struct PartialMap {
    fwd: [u8; 12],
    bwd: [u8; 12],
}

const UNSET: u8 = u8::MAX;

impl PartialMap {
    fn new() -> PartialMap {
        PartialMap { fwd: [UNSET; 12], bwd: [UNSET; 12] }
    }

    /// Records x ↦ y; false on any conflict with existing assignments.
    fn assign(&mut self, x: u8, y: u8) -> bool {
        match (self.fwd[usize::from(x)], self.bwd[usize::from(y)]) {
            (UNSET, UNSET) => {
                self.fwd[usize::from(x)] = y;
                self.bwd[usize::from(y)] = x;
                true
            }
            (fx, _) => fx == y,
        }
    }

    fn image_mask(&self, mask: u16) -> u16 {
        let mut out = 0;
        let mut m = mask;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            debug_assert_ne!(self.fwd[i], UNSET);
            out |= 1 << self.fwd[i];
            m &= m - 1;
        }
        out
    }
}

/// Extends base_i ↦ image_i to a full automorphism by forced propagation,
/// or reports that none exists. At most one automorphism can agree with
/// the given images; if propagation ever produced two fully-verified
/// candidates the design would violate sharpness, reported as an error.
pub fn extend_base_image(
    tables: &BlockTables,
    base: &[u8; 5],
    image: &[u8; 5],
) -> Result<Option<Permutation>, Error> {
    let mut map = PartialMap::new();
    let mut base_mask = 0u16;
    let mut image_mask = 0u16;
    for (&x, &y) in base.iter().zip(image) {
        if usize::from(x) >= 12 || usize::from(y) >= 12 || !map.assign(x, y) {
            return Err(Error::BadTuple);
        }
        base_mask |= 1 << x;
        image_mask |= 1 << y;
    }
    if base_mask.count_ones() != 5 || image_mask.count_ones() != 5 {
        return Err(Error::BadTuple);
    }

    // the sixth point of the base block is forced
    let b0 = tables.block_through(base_mask);
    let b0_image = tables.block_through(image_mask);
    if !map.assign(sixth(b0, base_mask), sixth(b0_image, image_mask)) {
        return Ok(None);
    }

    // Branch on the lowest point z outside the base block. For each
    // candidate image w, every block (F ∪ {z}) with F a 4-subset of the
    // base block forces a partner: in any S(5,6,12) each point beyond
    // B0 ∪ {z} lies in at least two such blocks, so the map completes.
    let z = (0..12u8).find(|&i| map.fwd[usize::from(i)] == UNSET).unwrap();
    let b0_points: Vec<u8> = (0..12u8).filter(|&i| b0 >> i & 1 == 1).collect();
    let mut survivor: Option<Permutation> = None;
    for w in 0..12u8 {
        if map.bwd[usize::from(w)] != UNSET {
            continue;
        }
        let mut cand = map.clone();
        let ok = cand.assign(z, w);
        debug_assert!(ok, "z and w are both fresh");
        let mut consistent = true;
        for_each_subset(6, 4, |pick| {
            if !consistent {
                return;
            }
            let f_mask: u16 = pick.iter().fold(0, |m, &i| m | 1 << b0_points[i]);
            let five = f_mask | 1 << z;
            let five_image = cand.image_mask(f_mask) | 1 << w;
            let partner = sixth(tables.block_through(five), five);
            let partner_image = sixth(tables.block_through(five_image), five_image);
            consistent = cand.assign(partner, partner_image);
        });
        if !consistent {
            continue;
        }
        if cand.fwd.contains(&UNSET) {
            return Err(Error::Invariant("forced propagation left points unmapped".into()));
        }
        let perm = Permutation { images: cand.fwd };
        if !tables.is_automorphism(&perm) {
            continue;
        }
        if survivor.is_some() {
            return Err(Error::Invariant(format!(
                "two automorphisms extend base {base:?} -> image {image:?}"
            )));
        }
        survivor = Some(perm);
    }
    Ok(survivor)
}

/// Result of a full base-image enumeration.
#[derive(Clone, Debug)]
pub struct Enumeration {
    pub base: [u8; 5],
    /// In lexicographic order of the image tuple that produced each.
    pub automorphisms: Vec<Permutation>,
    /// Ordered 5-tuples tried: 12·11·10·9·8.
    pub tuples_tried: u64,
}

/// Tries every ordered 5-tuple of distinct points as the image of `base`.
/// The design must verify as S(5,6,12) ([`BlockTables::new`] enforces it).
pub fn enumerate_automorphisms(design: &Design, base: [u8; 5]) -> Result<Enumeration, Error> {
    let tables = BlockTables::new(design)?;
    {
        let mut sorted = base;
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) || usize::from(sorted[4]) >= 12 {
            return Err(Error::BadTuple);
        }
    }
    let mut automorphisms = Vec::new();
    let mut tuples_tried = 0u64;
    let mut image = [0u8; 5];
    let mut used = [false; 12];
    fn rec(
        tables: &BlockTables,
        base: &[u8; 5],
        image: &mut [u8; 5],
        used: &mut [bool; 12],
        depth: usize,
        tuples: &mut u64,
        out: &mut Vec<Permutation>,
    ) -> Result<(), Error> {
        if depth == 5 {
            *tuples += 1;
            if let Some(p) = extend_base_image(tables, base, image)? {
                out.push(p);
            }
            return Ok(());
        }
        for y in 0..12u8 {
            if used[usize::from(y)] {
                continue;
            }
            used[usize::from(y)] = true;
            image[depth] = y;
            rec(tables, base, image, used, depth + 1, tuples, out)?;
            used[usize::from(y)] = false;
        }
        Ok(())
    }
    rec(&tables, &base, &mut image, &mut used, 0, &mut tuples_tried, &mut automorphisms)?;
    Ok(Enumeration { base, automorphisms, tuples_tried })
}

/// Summary of the group of an S(5,6,12).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct AutGroupSummary {
    pub base: [u8; 5],
    pub order: u64,
    /// True iff every ordered image tuple extended to exactly one
    /// automorphism (so the group acts regularly on 5-tuples).
    pub sharply_5_transitive: bool,
}

impl Enumeration {
    pub fn summary(&self) -> AutGroupSummary {
        let distinct: HashSet<[u8; 12]> = self.automorphisms.iter().map(|p| p.images).collect();
        let order = self.automorphisms.len() as u64;
        AutGroupSummary {
            base: self.base,
            order,
            sharply_5_transitive: order == self.tuples_tried && distinct.len() as u64 == order,
        }
    }
}

/// Enumerates from the fixed base (0,1,2,3,4) and summarizes.
pub fn aut_group_summary(design: &Design) -> Result<AutGroupSummary, Error> {
    Ok(enumerate_automorphisms(design, [0, 1, 2, 3, 4])?.summary())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plane::Plane;
    use crate::witt::WittDesign;

    fn w12_design() -> Design {
        WittDesign::build(&Plane::build(3).unwrap(), 0).unwrap().to_design()
    }

    /// Deterministic xorshift for sampling pairs.
    struct Rng(u64);
    impl Rng {
        fn next(&mut self) -> u64 {
            self.0 ^= self.0 << 13;
            self.0 ^= self.0 >> 7;
            self.0 ^= self.0 << 17;
            self.0
        }
    }

    #[test]
    fn permutation_algebra() {
        let id = Permutation::identity();
        let mut images = id.images;
        images.rotate_left(1);
        let rot = Permutation { images };
        assert_eq!(rot.then(&rot.inverse()), id);
        assert_eq!(rot.inverse().then(&rot), id);
        assert_eq!(id.then(&rot), rot);
        assert_eq!(rot.apply_mask(0b1), 0b10); // 0 maps to 1
        assert_eq!(rot.apply_mask(0b1000_0000_0000), 0b1); // 11 wraps to 0
        assert_eq!(format!("{id}"), "0 1 2 3 4 5 6 7 8 9 10 11");
    }

    #[test]
    fn identity_is_an_automorphism_and_transpositions_are_not() {
        let tables = BlockTables::new(&w12_design()).unwrap();
        assert!(tables.is_automorphism(&Permutation::identity()));
        let mut failures = 0;
        for i in 0..12u8 {
            for j in i + 1..12 {
                let mut images = Permutation::identity().images;
                images.swap(usize::from(i), usize::from(j));
                if !tables.is_automorphism(&Permutation { images }) {
                    failures += 1;
                }
            }
        }
        assert_eq!(failures, 66, "no transposition preserves the block set");
    }

    #[test]
    fn tables_reject_wrong_shapes_and_non_steiner_designs() {
        let fano = Design::from_plane(&Plane::build(2).unwrap());
        assert!(matches!(BlockTables::new(&fano), Err(Error::WrongShape { .. })));
        let empty = Design::new(12, 6, vec![]).unwrap();
        assert!(matches!(BlockTables::new(&empty), Err(Error::NotSteiner(_))));
        // tamper: drop one block
        let w = w12_design();
        let mut blocks = w.blocks().to_vec();
        blocks.pop();
        let broken = Design::new(12, 6, blocks).unwrap();
        assert!(matches!(BlockTables::new(&broken), Err(Error::NotSteiner(_))));
    }

    #[test]
    fn extension_of_identity_tuple_is_identity() {
        let tables = BlockTables::new(&w12_design()).unwrap();
        let t = [0, 1, 2, 3, 4];
        let p = extend_base_image(&tables, &t, &t).unwrap().unwrap();
        assert_eq!(p, Permutation::identity());
    }

    #[test]
    fn extension_rejects_malformed_tuples() {
        let tables = BlockTables::new(&w12_design()).unwrap();
        assert!(matches!(
            extend_base_image(&tables, &[0, 0, 2, 3, 4], &[0, 1, 2, 3, 4]),
            Err(Error::BadTuple)
        ));
        assert!(matches!(
            extend_base_image(&tables, &[0, 1, 2, 3, 4], &[0, 1, 2, 3, 12]),
            Err(Error::BadTuple)
        ));
    }

    #[test]
    fn full_enumeration_finds_the_whole_group() {
        let summary = aut_group_summary(&w12_design()).unwrap();
        assert_eq!(summary.order, 95040);
        assert!(summary.sharply_5_transitive);
    }

    #[test]
    fn order_is_base_independent() {
        let design = w12_design();
        for base in [[0, 1, 2, 3, 4], [7, 3, 11, 0, 5], [11, 10, 9, 8, 7]] {
            let e = enumerate_automorphisms(&design, base).unwrap();
            assert_eq!(e.automorphisms.len(), 95040, "base {base:?}");
            assert_eq!(e.tuples_tried, 95040);
        }
    }

    #[test]
    fn group_closure_and_inverses_on_sampled_pairs() {
        let design = w12_design();
        let e = enumerate_automorphisms(&design, [0, 1, 2, 3, 4]).unwrap();
        let members: HashSet<[u8; 12]> = e.automorphisms.iter().map(|p| p.images).collect();
        assert_eq!(members.len(), 95040);
        assert!(members.contains(&Permutation::identity().images));
        let mut rng = Rng(0xd1ce);
        for _ in 0..1000 {
            let a = &e.automorphisms[(rng.next() % 95040) as usize];
            let b = &e.automorphisms[(rng.next() % 95040) as usize];
            assert!(members.contains(&a.then(b).images));
            assert!(members.contains(&a.inverse().images));
        }
    }

    #[test]
    fn enumeration_rejects_bad_bases() {
        let design = w12_design();
        assert!(matches!(
            enumerate_automorphisms(&design, [0, 1, 2, 3, 3]),
            Err(Error::BadTuple)
        ));
        assert!(matches!(
            enumerate_automorphisms(&design, [0, 1, 2, 3, 12]),
            Err(Error::BadTuple)
        ));
    }
}
