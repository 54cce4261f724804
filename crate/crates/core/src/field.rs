//! Arithmetic in GF(2^m) for 2 <= m <= 16.
//!
//! Elements are polynomial-basis bit vectors stored in a `u16`. Addition is
//! XOR; multiplication and inversion go through exp/log tables generated from
//! a primitive modulus, with `x` (the element `2`) as the generator.
//!
//! A [`Field`] is a cheap handle (`Arc` around the tables) so codes, decoders
//! and worker threads can share it freely.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Default primitive modulus for each extension degree, bit-mask encoded
/// with the `x^m` term included. Index `m - 2`.
const DEFAULT_MODULI: [u32; 15] = [
    0x7,     // m = 2:  x^2 + x + 1
    0xB,     // m = 3:  x^3 + x + 1
    0x13,    // m = 4:  x^4 + x + 1
    0x25,    // m = 5:  x^5 + x^2 + 1
    0x43,    // m = 6:  x^6 + x + 1
    0x89,    // m = 7:  x^7 + x^3 + 1
    0x11D,   // m = 8:  x^8 + x^4 + x^3 + x^2 + 1
    0x211,   // m = 9:  x^9 + x^4 + 1
    0x409,   // m = 10: x^10 + x^3 + 1
    0x805,   // m = 11: x^11 + x^2 + 1
    0x1053,  // m = 12: x^12 + x^6 + x^4 + x + 1
    0x201B,  // m = 13: x^13 + x^4 + x^3 + x + 1
    0x4443,  // m = 14: x^14 + x^10 + x^6 + x + 1
    0x8003,  // m = 15: x^15 + x + 1
    0x1100B, // m = 16: x^16 + x^12 + x^3 + x + 1
];

/// Returns the default primitive modulus for GF(2^m), if `m` is supported.
pub fn default_modulus(m: u32) -> Option<u32> {
    (2..=16).contains(&m).then(|| DEFAULT_MODULI[(m - 2) as usize])
}

/// An element of GF(2^m). Only meaningful together with the [`Field`] that
/// produced it.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gf(pub u16);

impl Gf {
    pub const ZERO: Gf = Gf(0);
    pub const ONE: Gf = Gf(1);

    #[inline]
    pub fn value(self) -> u16 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for Gf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#x}", self.0)
    }
}

impl std::ops::Add for Gf {
    type Output = Gf;
    #[inline]
    fn add(self, rhs: Gf) -> Gf {
        Gf(self.0 ^ rhs.0)
    }
}

impl std::ops::AddAssign for Gf {
    #[inline]
    fn add_assign(&mut self, rhs: Gf) {
        self.0 ^= rhs.0;
    }
}

struct Tables {
    m: u32,
    modulus: u32,
    order: usize,
    // exp has 2 * order entries so exp[log a + log b] needs no reduction.
    exp: Vec<u16>,
    log: Vec<u32>,
}

/// GF(2^m) with precomputed exp/log tables.
#[derive(Clone)]
pub struct Field {
    t: Arc<Tables>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF(2^{}; {:#x})", self.t.m, self.t.modulus)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.t.m == other.t.m && self.t.modulus == other.t.modulus
    }
}

impl Eq for Field {}

impl Field {
    /// Builds GF(2^m) from a modulus given as a bit mask including `x^m`.
    pub fn new(m: u32, modulus: u32) -> Result<Field> {
        if !(2..=16).contains(&m) {
            return Err(Error::InvalidDegree(m));
        }
        if modulus >> m != 1 {
            return Err(Error::ModulusDegree { m, modulus });
        }
        let q = 1usize << m;
        let order = q - 1;
        let mut exp = vec![0u16; 2 * order];
        let mut log = vec![0u32; q];
        let mut seen = vec![false; q];
        let mut x: u32 = 1;
        for i in 0..order {
            if seen[x as usize] {
                // x returned to an earlier power before visiting every
                // nonzero element, so its order is i.
                return Err(Error::NonPrimitiveModulus {
                    modulus,
                    order: i as u32,
                    expected: order as u32,
                });
            }
            seen[x as usize] = true;
            exp[i] = x as u16;
            log[x as usize] = i as u32;
            x <<= 1;
            if x & (1 << m) != 0 {
                x ^= modulus;
            }
            if x == 0 {
                return Err(Error::NonPrimitiveModulus {
                    modulus,
                    order: 0,
                    expected: order as u32,
                });
            }
        }
        if x != 1 {
            return Err(Error::NonPrimitiveModulus {
                modulus,
                order: 0,
                expected: order as u32,
            });
        }
        for i in 0..order {
            exp[order + i] = exp[i];
        }
        Ok(Field {
            t: Arc::new(Tables {
                m,
                modulus,
                order,
                exp,
                log,
            }),
        })
    }

    /// GF(2^m) with the default modulus for `m`.
    pub fn with_degree(m: u32) -> Result<Field> {
        let modulus = default_modulus(m).ok_or(Error::InvalidDegree(m))?;
        Field::new(m, modulus)
    }

    /// Bits per symbol.
    #[inline]
    pub fn m(&self) -> u32 {
        self.t.m
    }

    #[inline]
    pub fn modulus(&self) -> u32 {
        self.t.modulus
    }

    /// Field size `2^m`.
    #[inline]
    pub fn size(&self) -> usize {
        self.t.order + 1
    }

    /// Order of the multiplicative group, `q - 1`.
    #[inline]
    pub fn order(&self) -> usize {
        self.t.order
    }

    /// The element with the given integer representation, if it is in range.
    pub fn element(&self, value: u32) -> Option<Gf> {
        ((value as usize) < self.size()).then_some(Gf(value as u16))
    }

    /// Iterates every field element in increasing integer order.
    pub fn elements(&self) -> impl Iterator<Item = Gf> {
        (0..self.size()).map(|v| Gf(v as u16))
    }

    /// The primitive element `x`.
    #[inline]
    pub fn generator(&self) -> Gf {
        Gf(2)
    }

    #[inline]
    fn check(&self, a: Gf) {
        debug_assert!((a.0 as usize) < self.size(), "{a:?} is not an element of {self:?}");
    }

    #[inline]
    pub fn add(&self, a: Gf, b: Gf) -> Gf {
        self.check(a);
        self.check(b);
        Gf(a.0 ^ b.0)
    }

    /// Subtraction; identical to addition in characteristic 2.
    #[inline]
    pub fn sub(&self, a: Gf, b: Gf) -> Gf {
        self.add(a, b)
    }

    /// Additive inverse, which is the element itself.
    #[inline]
    pub fn neg(&self, a: Gf) -> Gf {
        self.check(a);
        a
    }

    #[inline]
    pub fn mul(&self, a: Gf, b: Gf) -> Gf {
        self.check(a);
        self.check(b);
        if a.0 == 0 || b.0 == 0 {
            return Gf::ZERO;
        }
        let t = &*self.t;
        Gf(t.exp[(t.log[a.0 as usize] + t.log[b.0 as usize]) as usize])
    }

    pub fn inv(&self, a: Gf) -> Result<Gf> {
        self.check(a);
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let t = &*self.t;
        let l = t.log[a.0 as usize] as usize;
        Ok(Gf(t.exp[(t.order - l) % t.order]))
    }

    pub fn div(&self, a: Gf, b: Gf) -> Result<Gf> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^e` for any integer exponent; `0^0 = 1`, `0^e = 0` for `e > 0`.
    /// Negative powers of zero are a division by zero.
    pub fn pow(&self, a: Gf, e: i64) -> Result<Gf> {
        self.check(a);
        if a.0 == 0 {
            return match e {
                0 => Ok(Gf::ONE),
                e if e > 0 => Ok(Gf::ZERO),
                _ => Err(Error::DivisionByZero),
            };
        }
        let t = &*self.t;
        let l = t.log[a.0 as usize] as i64 * e.rem_euclid(t.order as i64);
        Ok(Gf(t.exp[l.rem_euclid(t.order as i64) as usize]))
    }

    /// Discrete logarithm base `x`; `None` for zero.
    #[inline]
    pub fn log(&self, a: Gf) -> Option<u32> {
        self.check(a);
        (a.0 != 0).then(|| self.t.log[a.0 as usize])
    }

    /// `x^e`, with `e` reduced modulo `q - 1`.
    #[inline]
    pub fn exp(&self, e: u64) -> Gf {
        let t = &*self.t;
        Gf(t.exp[(e % t.order as u64) as usize])
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: Gf) -> Option<usize> {
        let l = self.log(a)? as usize;
        let order = self.order();
        Some(order / gcd(order, l))
    }

    /// `dst[i] += c * src[i]` over the common prefix.
    pub fn axpy(&self, dst: &mut [Gf], src: &[Gf], c: Gf) {
        if c.is_zero() {
            return;
        }
        let t = &*self.t;
        let lc = t.log[c.0 as usize] as usize;
        let (exp, log) = (&t.exp[..], &t.log[..]);
        for (d, &x) in dst.iter_mut().zip(src) {
            if x.0 != 0 {
                d.0 ^= exp[log[x.0 as usize] as usize + lc];
            }
        }
    }

    /// Horner evaluation of `coeffs[0] + coeffs[1] z + ... ` at `at`.
    pub fn poly_eval(&self, coeffs: &[Gf], at: Gf) -> Gf {
        coeffs
            .iter()
            .rev()
            .fold(Gf::ZERO, |acc, &c| self.mul(acc, at) + c)
    }
}

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf256() -> Field {
        Field::new(8, 0x11D).unwrap()
    }

    #[test]
    fn standard_moduli_build() {
        assert_eq!(gf256().size(), 256);
        assert_eq!(Field::new(4, 0x13).unwrap().size(), 16);
        for m in 2..=16 {
            let f = Field::with_degree(m).unwrap();
            assert_eq!(f.size(), 1 << m);
        }
    }

    #[test]
    fn reducible_modulus_is_rejected() {
        assert!(matches!(
            Field::new(8, 0x100),
            Err(Error::NonPrimitiveModulus { .. })
        ));
        // x^4 + x^3 + x^2 + x + 1 is irreducible but x has order 5.
        assert_eq!(
            Field::new(4, 0x1F).unwrap_err(),
            Error::NonPrimitiveModulus {
                modulus: 0x1F,
                order: 5,
                expected: 15
            }
        );
        assert!(matches!(Field::new(8, 0x13), Err(Error::ModulusDegree { .. })));
        assert!(matches!(Field::new(17, 0x2002D), Err(Error::InvalidDegree(17))));
    }

    #[test]
    fn table_products() {
        let f = gf256();
        let a = f.generator();
        let a7 = f.pow(a, 7).unwrap();
        assert_eq!(a7, Gf(0x80));
        assert_eq!(f.mul(a, a7), Gf(0x1D));
        assert_eq!(f.inv(Gf::ONE).unwrap(), Gf::ONE);
        assert_eq!(f.inv(Gf::ZERO), Err(Error::DivisionByZero));
    }

    #[test]
    fn exhaustive_inverse_and_log_roundtrip() {
        for m in 2..=8 {
            let f = Field::with_degree(m).unwrap();
            for a in f.elements().skip(1) {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), Gf::ONE);
                assert_eq!(f.exp(f.log(a).unwrap() as u64), a);
                assert_eq!(f.add(a, a), Gf::ZERO);
                assert_eq!(f.neg(a), a);
            }
        }
    }

    #[test]
    fn poly_eval_cases() {
        let f = Field::new(4, 0x13).unwrap();
        let a = f.generator();
        assert_eq!(f.poly_eval(&[Gf(9)], a), Gf(9));
        assert_eq!(f.poly_eval(&[Gf::ONE, Gf::ONE], a), Gf(1 ^ 2));
        // alpha^2 + 3 = 4 + 3
        assert_eq!(f.poly_eval(&[Gf(3), Gf(0), Gf(1)], a), Gf(7));
        assert_eq!(f.poly_eval(&[], a), Gf::ZERO);
    }

    #[test]
    fn pow_edge_cases() {
        let f = Field::with_degree(4).unwrap();
        assert_eq!(f.pow(Gf::ZERO, 0).unwrap(), Gf::ONE);
        assert_eq!(f.pow(Gf::ZERO, 3).unwrap(), Gf::ZERO);
        assert!(f.pow(Gf::ZERO, -1).is_err());
        let a = Gf(7);
        assert_eq!(f.mul(f.pow(a, -3).unwrap(), f.pow(a, 3).unwrap()), Gf::ONE);
        assert_eq!(f.pow(a, 15).unwrap(), Gf::ONE);
        assert_eq!(f.element_order(f.generator()), Some(15));
        assert_eq!(f.element_order(f.exp(5)), Some(3));
    }
}
