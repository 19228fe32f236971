//! Arithmetic in the prime fields GF(p) for p in {2, 3, 5, 7}.

use crate::error::Error;

/// Plane orders (= field moduli) this crate supports.
pub const SUPPORTED_PRIMES: [u8; 4] = [2, 3, 5, 7];

/// Arithmetic context for a fixed small prime modulus.
///
/// Elements are canonical residues `0..p`; every operation returns a
/// canonical residue.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Gf {
    p: u8,
}

impl Gf {
    pub fn new(p: u8) -> Result<Self, Error> {
        if SUPPORTED_PRIMES.contains(&p) {
            Ok(Gf { p })
        } else {
            Err(Error::UnsupportedOrder(p))
        }
    }

    pub fn modulus(self) -> u8 {
        self.p
    }

    pub fn add(self, a: u8, b: u8) -> u8 {
        debug_assert!(a < self.p && b < self.p);
        (a + b) % self.p
    }

    pub fn sub(self, a: u8, b: u8) -> u8 {
        debug_assert!(a < self.p && b < self.p);
        (a + self.p - b) % self.p
    }

    pub fn neg(self, a: u8) -> u8 {
        debug_assert!(a < self.p);
        (self.p - a) % self.p
    }

    pub fn mul(self, a: u8, b: u8) -> u8 {
        debug_assert!(a < self.p && b < self.p);
        (u16::from(a) * u16::from(b) % u16::from(self.p)) as u8
    }

    /// Multiplicative inverse of a nonzero element.
    pub fn inv(self, a: u8) -> Result<u8, Error> {
        debug_assert!(a < self.p);
        if a == 0 {
            return Err(Error::ZeroInverse);
        }
        // p <= 7: a linear scan beats any cleverness.
        Ok((1..self.p)
            .find(|&x| self.mul(a, x) == 1)
            .expect("every unit mod a prime has an inverse"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_examples() {
        let g3 = Gf::new(3).unwrap();
        assert_eq!(g3.inv(1).unwrap(), 1);
        assert_eq!(g3.inv(2).unwrap(), 2); // 2*2 = 4 = 1 mod 3
        let g7 = Gf::new(7).unwrap();
        assert_eq!(g7.inv(3).unwrap(), 5); // 3*5 = 15 = 1 mod 7
    }

    #[test]
    fn zero_has_no_inverse() {
        for p in SUPPORTED_PRIMES {
            assert!(matches!(Gf::new(p).unwrap().inv(0), Err(Error::ZeroInverse)));
        }
    }

    #[test]
    fn every_unit_inverts() {
        for p in SUPPORTED_PRIMES {
            let g = Gf::new(p).unwrap();
            for a in 1..p {
                assert_eq!(g.mul(a, g.inv(a).unwrap()), 1);
            }
        }
    }

    #[test]
    fn field_axioms_exhaustive() {
        for p in SUPPORTED_PRIMES {
            let g = Gf::new(p).unwrap();
            for a in 0..p {
                assert_eq!(g.add(a, g.neg(a)), 0);
                for b in 0..p {
                    assert_eq!(g.add(a, b), g.add(b, a));
                    assert_eq!(g.mul(a, b), g.mul(b, a));
                    assert_eq!(g.sub(g.add(a, b), b), a);
                }
            }
        }
    }

    #[test]
    fn rejects_non_primes() {
        for p in [0, 1, 4, 6, 8, 9, 11] {
            assert!(matches!(Gf::new(p), Err(Error::UnsupportedOrder(_))));
        }
    }
}
