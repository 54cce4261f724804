//! Plain polynomial-remainder CRCs over serialized field words.
//!
//! A word of `n` symbols becomes an `n m`-bit string, each symbol written
//! most-significant bit first, symbols in index order. The first bit is the
//! highest-degree coefficient of the message polynomial `x(ξ)`, and the tag
//! is `x(ξ) mod g(ξ)`: no reflection, no initial value, no final XOR.

use crate::error::{Error, Result};
use crate::field::{Field, Gf};

/// CRC generator `g(ξ)`, bit-mask encoded with the `ξ^ρ` term included.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CrcSpec {
    generator: u64,
    rho: u32,
}

/// Remainder of a word modulo the generator.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CrcTag {
    pub remainder: u64,
}

impl CrcSpec {
    /// `ξ^12 + ξ^11 + ξ^3 + ξ^2 + ξ + 1`.
    pub const CRC12: CrcSpec = CrcSpec {
        generator: 0x180F,
        rho: 12,
    };

    /// No check bits: `g = 1`, every tag is zero.
    pub const NONE: CrcSpec = CrcSpec { generator: 1, rho: 0 };

    pub fn new(generator: u64, rho: u32) -> Result<CrcSpec> {
        if rho > 63 {
            return Err(Error::InvalidCrc {
                generator,
                reason: "at most 63 check bits are supported",
            });
        }
        if generator >> rho != 1 {
            return Err(Error::InvalidCrc {
                generator,
                reason: "degree differs from the number of check bits",
            });
        }
        if generator & 1 == 0 {
            return Err(Error::InvalidCrc {
                generator,
                reason: "constant term must be 1",
            });
        }
        Ok(CrcSpec { generator, rho })
    }

    /// Generator of degree `rho` given without its leading term, so `0x80F`
    /// with `rho = 12` is CRC-12.
    pub fn from_low_bits(low: u64, rho: u32) -> Result<CrcSpec> {
        if rho > 63 {
            return CrcSpec::new(low, rho);
        }
        CrcSpec::new((1u64 << rho) | low, rho)
    }

    pub fn generator(&self) -> u64 {
        self.generator
    }

    pub fn rho(&self) -> u32 {
        self.rho
    }
}

impl Default for CrcSpec {
    fn default() -> Self {
        CrcSpec::CRC12
    }
}

/// Remainder of the bit string `bits` (first bit = highest degree).
pub fn crc_bits(spec: &CrcSpec, bits: impl IntoIterator<Item = bool>) -> CrcTag {
    let top = 1u64 << spec.rho;
    let mut reg = 0u64;
    for bit in bits {
        reg = (reg << 1) | bit as u64;
        if reg & top != 0 {
            reg ^= spec.generator;
        }
    }
    CrcTag { remainder: reg }
}

/// MSB-first bits of each symbol, symbols in index order.
pub fn word_bits<'a>(word: &'a [Gf], field: &Field) -> impl Iterator<Item = bool> + 'a {
    let m = field.m();
    word.iter()
        .flat_map(move |s| (0..m).rev().map(move |i| (s.value() >> i) & 1 == 1))
}

pub fn crc_compute(spec: &CrcSpec, word: &[Gf], field: &Field) -> CrcTag {
    crc_bits(spec, word_bits(word, field))
}

/// Candidates whose tag equals `tag`, in their original order.
pub fn crc_filter(spec: &CrcSpec, candidates: &[Vec<Gf>], tag: CrcTag, field: &Field) -> Vec<Vec<Gf>> {
    candidates
        .iter()
        .filter(|c| crc_compute(spec, c, field) == tag)
        .cloned()
        .collect()
}
