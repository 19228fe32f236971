//! The projective plane PG(2,q) over GF(q), q a prime at most 7.
//!
//! Points and lines are homogeneous coordinate triples in canonical form:
//! the first nonzero coordinate equals 1. Indexing is by lexicographic
//! order of the canonical triples, so index 0 is always (0,0,1). Lines use
//! the same triples as points; point P lies on line l iff P·l = 0 in GF(q).

use crate::error::Error;
use crate::gf::Gf;

/// Homogeneous coordinates over GF(q), not necessarily canonical.
pub type Triple = [u8; 3];

#[derive(Clone, Debug)]
pub struct Plane {
    gf: Gf,
    /// Canonical triples in lexicographic order; lines reuse the same list.
    triples: Vec<Triple>,
    /// incidence[p * n + l] == true iff point p is on line l.
    incidence: Vec<bool>,
    points_on: Vec<Vec<u8>>,
    lines_through: Vec<Vec<u8>>,
    line_masks: Vec<u64>,
}

impl Plane {
    /// Builds PG(2,q). Errors unless q is a prime <= 7.
    pub fn build(q: u8) -> Result<Plane, Error> {
        let gf = Gf::new(q)?;
        let mut triples = Vec::with_capacity(Self::size_for(q));
        triples.push([0, 0, 1]);
        for c in 0..q {
            triples.push([0, 1, c]);
        }
        for b in 0..q {
            for c in 0..q {
                triples.push([1, b, c]);
            }
        }
        debug_assert_eq!(triples.len(), Self::size_for(q));
        debug_assert!(triples.windows(2).all(|w| w[0] < w[1]), "lex order");

        let n = triples.len();
        let mut incidence = vec![false; n * n];
        let mut points_on = vec![Vec::with_capacity(q as usize + 1); n];
        let mut lines_through = vec![Vec::with_capacity(q as usize + 1); n];
        let mut line_masks = vec![0u64; n];
        for (p, pt) in triples.iter().enumerate() {
            for (l, ln) in triples.iter().enumerate() {
                let dot = gf.add(gf.add(gf.mul(pt[0], ln[0]), gf.mul(pt[1], ln[1])), gf.mul(pt[2], ln[2]));
                if dot == 0 {
                    incidence[p * n + l] = true;
                    points_on[l].push(p as u8);
                    lines_through[p].push(l as u8);
                    line_masks[l] |= 1 << p;
                }
            }
        }
        debug_assert!(points_on.iter().all(|s| s.len() == q as usize + 1));
        debug_assert!(lines_through.iter().all(|s| s.len() == q as usize + 1));

        Ok(Plane { gf, triples, incidence, points_on, lines_through, line_masks })
    }

    fn size_for(q: u8) -> usize {
        let q = q as usize;
        q * q + q + 1
    }

    pub fn order(&self) -> u8 {
        self.gf.modulus()
    }

    pub fn gf(&self) -> Gf {
        self.gf
    }

    /// Number of points (= number of lines) = q^2 + q + 1.
    pub fn point_count(&self) -> usize {
        self.triples.len()
    }

    pub fn line_count(&self) -> usize {
        self.triples.len()
    }

    pub fn point(&self, p: u8) -> Triple {
        self.triples[p as usize]
    }

    pub fn line(&self, l: u8) -> Triple {
        self.triples[l as usize]
    }

    pub fn is_incident(&self, p: u8, l: u8) -> bool {
        self.incidence[p as usize * self.triples.len() + l as usize]
    }

    /// Point indices on line l, ascending.
    pub fn points_on(&self, l: u8) -> &[u8] {
        &self.points_on[l as usize]
    }

    /// Line indices through point p, ascending.
    pub fn lines_through(&self, p: u8) -> &[u8] {
        &self.lines_through[p as usize]
    }

    /// Bit i set iff point i lies on line l.
    pub fn line_mask(&self, l: u8) -> u64 {
        self.line_masks[l as usize]
    }

    /// Scales a triple so its first nonzero coordinate is 1.
    pub fn canonicalize(&self, t: Triple) -> Result<Triple, Error> {
        let lead = t.iter().copied().find(|&x| x % self.gf.modulus() != 0).ok_or(Error::ZeroTriple)?;
        let s = self.gf.inv(lead % self.gf.modulus())?;
        Ok(t.map(|x| self.gf.mul(x % self.gf.modulus(), s)))
    }

    /// Index of a triple under the lexicographic canonical ordering.
    pub fn index_of(&self, t: Triple) -> Result<u8, Error> {
        let c = self.canonicalize(t)?;
        let q = self.gf.modulus();
        let idx = match c {
            [0, 0, 1] => 0,
            [0, 1, x] => 1 + x,
            [1, b, x] => 1 + q + b * q + x,
            _ => unreachable!("canonical triple leads with 0 or 1"),
        };
        debug_assert_eq!(self.triples[idx as usize], c);
        Ok(idx)
    }

    /// The unique line through two distinct points.
    pub fn line_through(&self, a: u8, b: u8) -> Result<u8, Error> {
        if a == b {
            return Err(Error::EqualPoints);
        }
        self.index_of(self.cross(self.point(a), self.point(b)))
    }

    /// The unique point on two distinct lines.
    pub fn meet(&self, a: u8, b: u8) -> Result<u8, Error> {
        if a == b {
            return Err(Error::EqualLines);
        }
        self.index_of(self.cross(self.line(a), self.line(b)))
    }

    fn cross(&self, a: Triple, b: Triple) -> Triple {
        let p = i16::from(self.gf.modulus());
        let ai = a.map(i16::from);
        let bi = b.map(i16::from);
        [
            (ai[1] * bi[2] - ai[2] * bi[1]).rem_euclid(p) as u8,
            (ai[2] * bi[0] - ai[0] * bi[2]).rem_euclid(p) as u8,
            (ai[0] * bi[1] - ai[1] * bi[0]).rem_euclid(p) as u8,
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::SUPPORTED_PRIMES;

    #[test]
    fn sizes_per_order() {
        for (q, n, on_line) in [(2, 7, 3), (3, 13, 4), (5, 31, 6), (7, 57, 8)] {
            let pl = Plane::build(q).unwrap();
            assert_eq!(pl.point_count(), n);
            assert_eq!(pl.line_count(), n);
            for l in 0..n as u8 {
                assert_eq!(pl.points_on(l).len(), on_line);
            }
            for p in 0..n as u8 {
                assert_eq!(pl.lines_through(p).len(), on_line);
            }
        }
    }

    #[test]
    fn rejects_bad_orders() {
        for q in [0, 1, 4, 6, 9, 11, 13] {
            assert!(Plane::build(q).is_err());
        }
    }

    #[test]
    fn index_triple_bijection() {
        for q in SUPPORTED_PRIMES {
            let pl = Plane::build(q).unwrap();
            for i in 0..pl.point_count() as u8 {
                assert_eq!(pl.index_of(pl.point(i)).unwrap(), i);
            }
        }
    }

    #[test]
    fn canonicalize_scales_representatives() {
        let pl = Plane::build(3).unwrap();
        assert_eq!(pl.canonicalize([0, 2, 1]).unwrap(), [0, 1, 2]); // scale by inv(2)=2
        assert_eq!(pl.canonicalize([2, 2, 0]).unwrap(), [1, 1, 0]);
        assert!(matches!(pl.canonicalize([0, 0, 0]), Err(Error::ZeroTriple)));
    }

    #[test]
    fn line_through_named_examples() {
        let pl = Plane::build(3).unwrap();
        let a = pl.index_of([0, 0, 1]).unwrap();
        let b = pl.index_of([0, 1, 0]).unwrap();
        assert_eq!(pl.line(pl.line_through(a, b).unwrap()), [1, 0, 0]);
        let c = pl.index_of([1, 0, 0]).unwrap();
        assert_eq!(pl.line(pl.line_through(c, b).unwrap()), [0, 0, 1]);
        assert!(matches!(pl.line_through(a, a), Err(Error::EqualPoints)));
    }

    #[test]
    fn meet_dual_example() {
        let pl = Plane::build(3).unwrap();
        let a = pl.index_of([1, 0, 0]).unwrap();
        let b = pl.index_of([0, 1, 0]).unwrap();
        assert_eq!(pl.point(pl.meet(a, b).unwrap()), [0, 0, 1]);
        assert!(matches!(pl.meet(a, a), Err(Error::EqualLines)));
    }

    #[test]
    fn line_x_coordinate_contains_points_with_zero_first_coordinate() {
        let pl = Plane::build(3).unwrap();
        let l = pl.index_of([1, 0, 0]).unwrap();
        let pts: Vec<Triple> = pl.points_on(l).iter().map(|&p| pl.point(p)).collect();
        assert_eq!(pts.len(), 4);
        assert!(pts.iter().all(|t| t[0] == 0));
        assert_eq!(pl.points_on(l), &[0, 1, 2, 3]);
    }

    #[test]
    fn every_point_pair_has_a_unique_joining_line() {
        for q in SUPPORTED_PRIMES {
            let pl = Plane::build(q).unwrap();
            let n = pl.point_count() as u8;
            for a in 0..n {
                for b in a + 1..n {
                    // oracle: scan the incidence table rather than use cross products
                    let joint: Vec<u8> =
                        (0..n).filter(|&l| pl.is_incident(a, l) && pl.is_incident(b, l)).collect();
                    assert_eq!(joint.len(), 1);
                    assert_eq!(joint[0], pl.line_through(a, b).unwrap());
                }
            }
        }
    }

    #[test]
    fn every_line_pair_meets_in_a_unique_point() {
        for q in SUPPORTED_PRIMES {
            let pl = Plane::build(q).unwrap();
            let n = pl.line_count() as u8;
            for a in 0..n {
                for b in a + 1..n {
                    let common: Vec<u8> =
                        (0..n).filter(|&p| pl.is_incident(p, a) && pl.is_incident(p, b)).collect();
                    assert_eq!(common.len(), 1);
                    assert_eq!(common[0], pl.meet(a, b).unwrap());
                }
            }
        }
    }

    #[test]
    fn incidence_is_self_dual() {
        // Points and lines share one triple list, and the dot form is
        // symmetric, so the table must be symmetric.
        let pl = Plane::build(3).unwrap();
        for p in 0..13 {
            for l in 0..13 {
                assert_eq!(pl.is_incident(p, l), pl.is_incident(l, p));
            }
        }
    }

    #[test]
    fn deterministic_rebuild() {
        let a = Plane::build(3).unwrap();
        let b = Plane::build(3).unwrap();
        assert_eq!(a.triples, b.triples);
        assert_eq!(a.incidence, b.incidence);
        assert_eq!(a.line_masks, b.line_masks);
    }

    #[test]
    fn line_masks_match_point_lists() {
        let pl = Plane::build(7).unwrap();
        for l in 0..pl.line_count() as u8 {
            let from_list = pl.points_on(l).iter().fold(0u64, |m, &p| m | 1 << p);
            assert_eq!(from_list, pl.line_mask(l));
        }
    }
}
