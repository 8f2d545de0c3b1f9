use crate::error::{Error, Result};

/// Reduction polynomial used when the extension degree is 16:
/// x^16 + x^5 + x^3 + x + 1.
pub const DEFAULT_POLY_16: u64 = 0x1_002B;

/// Element of GF(2^s), as the low `s` bits of the polynomial basis representation.
pub type Elem = u32;

/// The field GF(2^s) = GF(2)[x] / (reduction_poly), for 1 <= s <= 32.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExtField {
    degree: u32,
    poly: u64,
}

fn poly_degree(p: u64) -> u32 {
    63 - p.leading_zeros()
}

fn poly_rem(mut a: u64, b: u64) -> u64 {
    let db = poly_degree(b);
    while a != 0 && poly_degree(a) >= db {
        a ^= b << (poly_degree(a) - db);
    }
    a
}

/// Trial division by every polynomial of degree 1..=deg(p)/2.
pub fn is_irreducible(poly: u64) -> bool {
    if poly < 2 {
        return false;
    }
    let d = poly_degree(poly);
    let half = d / 2;
    (2u64..1 << (half + 1)).all(|divisor| poly_rem(poly, divisor) != 0)
}

impl ExtField {
    pub fn new(degree: u32, poly: u64) -> Result<Self> {
        if !(1..=32).contains(&degree) {
            return Err(Error::InvalidArgument(format!(
                "extension degree {degree} outside 1..=32"
            )));
        }
        if poly == 0 || poly_degree(poly) != degree {
            return Err(Error::InvalidArgument(format!(
                "reduction polynomial {poly:#x} does not have degree {degree}"
            )));
        }
        if !is_irreducible(poly) {
            return Err(Error::InvalidArgument(format!(
                "reduction polynomial {poly:#x} is reducible"
            )));
        }
        Ok(Self { degree, poly })
    }

    /// GF(2^16) with [`DEFAULT_POLY_16`] for `s = 16`; otherwise the
    /// numerically smallest irreducible polynomial of degree `s`.
    pub fn with_degree(degree: u32) -> Result<Self> {
        if degree == 16 {
            return Self::new(16, DEFAULT_POLY_16);
        }
        if !(1..=32).contains(&degree) {
            return Err(Error::InvalidArgument(format!(
                "extension degree {degree} outside 1..=32"
            )));
        }
        let lead = 1u64 << degree;
        // odd constant term is necessary for irreducibility when s > 1
        (lead..lead << 1)
            .filter(|p| degree == 1 || p & 1 == 1)
            .find(|&p| is_irreducible(p))
            .map(|poly| Self { degree, poly })
            .ok_or_else(|| Error::InvalidArgument(format!("no irreducible of degree {degree}")))
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    #[inline]
    pub fn poly(&self) -> u64 {
        self.poly
    }

    /// Number of elements minus one, i.e. the order of the multiplicative group.
    pub fn group_order(&self) -> u64 {
        (1u64 << self.degree) - 1
    }

    #[inline]
    pub fn mask(&self) -> Elem {
        self.group_order() as Elem
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        a ^ b
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        // 0/1 operands are common (embedded GF(2) entries)
        if a <= 1 || b <= 1 {
            return if a == 0 || b == 0 { 0 } else { a.max(b) };
        }
        let top = 1u64 << self.degree;
        let mut acc = 0u64;
        let mut x = a as u64;
        let mut y = b;
        while y != 0 {
            if y & 1 == 1 {
                acc ^= x;
            }
            y >>= 1;
            x <<= 1;
            if x & top != 0 {
                x ^= self.poly;
            }
        }
        acc as Elem
    }

    pub fn pow(&self, mut base: Elem, mut exp: u64) -> Elem {
        let mut acc = 1;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse as `a^(2^s - 2)`; panics on zero.
    pub fn inv(&self, a: Elem) -> Elem {
        assert!(a != 0, "inverse of zero");
        self.pow(a, self.group_order() - 1)
    }

    pub fn random<R: rand::Rng + ?Sized>(&self, rng: &mut R) -> Elem {
        rng.gen::<u32>() & self.mask()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn default_polynomial_is_irreducible() {
        assert!(is_irreducible(DEFAULT_POLY_16));
        let f = ExtField::with_degree(16).unwrap();
        assert_eq!(f.poly(), DEFAULT_POLY_16);
    }

    #[test]
    fn rejects_reducible_polynomials() {
        // x^2 + 1 = (x + 1)^2
        assert!(ExtField::new(2, 0b101).is_err());
        assert!(ExtField::new(2, 0b111).is_ok());
        assert!(ExtField::new(3, 0b111).is_err());
        assert!(ExtField::new(0, 1).is_err());
    }

    #[test]
    fn smallest_irreducibles() {
        assert_eq!(ExtField::with_degree(8).unwrap().poly(), 0x11B);
        for s in [8, 12, 20, 24, 32] {
            let f = ExtField::with_degree(s).unwrap();
            assert!(is_irreducible(f.poly()), "s = {s}");
        }
    }

    #[test]
    fn gf4_table() {
        // GF(4) with x^2 + x + 1: x * x = x + 1
        let f = ExtField::new(2, 0b111).unwrap();
        assert_eq!(f.mul(2, 2), 3);
        assert_eq!(f.mul(2, 3), 1);
        assert_eq!(f.inv(3), 2);
    }

    #[test]
    fn field_axioms_on_random_triples() {
        for s in [8, 16, 32] {
            let f = ExtField::with_degree(s).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(s as u64);
            for _ in 0..1000 {
                let (a, b, c) = (f.random(&mut rng), f.random(&mut rng), f.random(&mut rng));
                assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                if a != 0 {
                    assert_eq!(f.mul(a, f.pow(a, f.group_order() - 1)), 1);
                }
            }
        }
    }
}
