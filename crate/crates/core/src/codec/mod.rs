//! The compressor and decompressor.
//!
//! The encoder sends the syndrome of `x` and its CRC. The decoder shifts its
//! side information `y` by a coset representative `a`, list-decodes
//! `y' = y - a` (XOR in characteristic 2), shifts the list back into the
//! coset and keeps the candidates whose CRC matches.

mod wire;

pub use wire::{pack_symbols, read_message, unpack_symbols, write_message, WireHeader, MAGIC, VERSION};

use std::fmt;

use crate::crc::{crc_compute, crc_filter, CrcSpec, CrcTag};
use crate::error::{Error, Result};
use crate::field::Gf;
use crate::gs::{certifies, gs_list_decode, min_multiplicity_for, radius_for_multiplicity};
use crate::rs::{add_words, hamming_distance, RsCode, Syndrome};

/// What is transmitted: `(n - k) m + ρ` bits in total.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EncodedMessage {
    pub syndrome: Syndrome,
    pub crc: CrcTag,
}

impl EncodedMessage {
    pub fn payload_bits(&self, m: u32, rho: u32) -> u64 {
        self.syndrome.len() as u64 * m as u64 + rho as u64
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DecodeStatus {
    /// Exactly one candidate matched the CRC.
    Recovered,
    /// No word of the coset lies within the radius of `y`.
    NoCandidate,
    /// Candidates exist but none has the transmitted CRC.
    NoCrcMatch,
    /// Two or more candidates share the transmitted CRC.
    Ambiguous,
}

impl DecodeStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            DecodeStatus::Recovered => "Recovered",
            DecodeStatus::NoCandidate => "NoCandidate",
            DecodeStatus::NoCrcMatch => "NoCrcMatch",
            DecodeStatus::Ambiguous => "Ambiguous",
        }
    }
}

impl fmt::Display for DecodeStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecodeOutcome {
    pub status: DecodeStatus,
    pub recovered: Option<Vec<Gf>>,
    /// The coset candidates within the radius of `y`, ordered by distance.
    pub candidates: Vec<Vec<Gf>>,
    /// Matching words when the status is `Ambiguous`.
    pub ambiguous_set: Vec<Vec<Gf>>,
    /// Radius of the list that produced the outcome.
    pub radius: usize,
    /// Interpolation multiplicity of that list.
    pub multiplicity: u32,
}

impl DecodeOutcome {
    pub fn list_size(&self) -> usize {
        self.candidates.len()
    }
}

/// How the decoder picks the interpolation multiplicity.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Multiplicity {
    /// The smallest multiplicity that certifies the radius.
    #[default]
    Auto,
    /// A given multiplicity; it must certify the radius.
    Fixed(u32),
    /// Decode with `m = 1, 2, ...`, each at the largest radius that `m`
    /// certifies (capped at the target), and stop at the first list with a
    /// CRC match or once the target radius is reached. Near the GS limit the
    /// multiplicity for the full radius is prohibitive while most words sit
    /// far closer to `y`.
    Escalating,
}

impl fmt::Display for Multiplicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Multiplicity::Auto => f.write_str("auto"),
            Multiplicity::Fixed(m) => write!(f, "{m}"),
            Multiplicity::Escalating => f.write_str("escalate"),
        }
    }
}

impl std::str::FromStr for Multiplicity {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "auto" => Ok(Multiplicity::Auto),
            "escalate" | "escalating" => Ok(Multiplicity::Escalating),
            _ => match s.parse::<u32>() {
                Ok(m) if m >= 1 => Ok(Multiplicity::Fixed(m)),
                _ => Err(format!("expected auto, escalate or a positive integer, got {s:?}")),
            },
        }
    }
}

pub fn scsi_encode(code: &RsCode, crc: &CrcSpec, x: &[Gf]) -> Result<EncodedMessage> {
    Ok(EncodedMessage {
        syndrome: code.syndrome(x)?,
        crc: crc_compute(crc, x, code.field()),
    })
}

pub fn scsi_decode(
    code: &RsCode,
    crc: &CrcSpec,
    msg: &EncodedMessage,
    y: &[Gf],
    tau: usize,
    multiplicity: Multiplicity,
) -> Result<DecodeOutcome> {
    let a = code.coset_representative(&msg.syndrome)?;
    decode_from(code, crc, msg, y, tau, multiplicity, &a)
}

/// Decodes with a caller-supplied coset representative. Any word with the
/// transmitted syndrome gives the same candidate list.
pub fn scsi_decode_with_representative(
    code: &RsCode,
    crc: &CrcSpec,
    msg: &EncodedMessage,
    y: &[Gf],
    tau: usize,
    multiplicity: Multiplicity,
    representative: &[Gf],
) -> Result<DecodeOutcome> {
    if code.syndrome(representative)? != msg.syndrome {
        return Err(Error::DomainError("representative is not in the transmitted coset".into()));
    }
    decode_from(code, crc, msg, y, tau, multiplicity, representative)
}

fn decode_from(
    code: &RsCode,
    crc: &CrcSpec,
    msg: &EncodedMessage,
    y: &[Gf],
    tau: usize,
    multiplicity: Multiplicity,
    a: &[Gf],
) -> Result<DecodeOutcome> {
    let (n, k) = (code.n(), code.k());
    if y.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            actual: y.len(),
        });
    }
    let shifted = add_words(y, a);
    let stages: Vec<(usize, u32)> = match multiplicity {
        Multiplicity::Auto => vec![(tau, min_multiplicity_for(n, k, tau)?)],
        Multiplicity::Fixed(m) => vec![(tau, m)],
        Multiplicity::Escalating => {
            let target = min_multiplicity_for(n, k, tau)?;
            let mut stages = Vec::new();
            for m in 1..=target {
                let r = radius_for_multiplicity(n, k, m).map_or(tau, |r| r.min(tau));
                if stages.last().is_none_or(|&(prev, _)| r > prev) {
                    stages.push((r, m));
                }
            }
            stages
        }
    };
    let field = code.field();
    let mut outcome = None;
    for (radius, m) in stages {
        if !certifies(n, k, radius, m) {
            return Err(Error::RadiusTooLarge {
                n,
                k,
                tau: radius,
                multiplicity: m,
            });
        }
        let list = gs_list_decode(code, &shifted, radius, m)?;
        let candidates: Vec<Vec<Gf>> = list.candidates.iter().map(|c| add_words(c, a)).collect();
        for c in &candidates {
            assert_eq!(code.syndrome(c)?, msg.syndrome, "candidate left the coset");
            assert!(hamming_distance(c, y) <= radius, "candidate outside the radius");
        }
        let matches = crc_filter(crc, &candidates, msg.crc, field);
        let (status, recovered, ambiguous_set) = match (candidates.len(), matches.len()) {
            (0, _) => (DecodeStatus::NoCandidate, None, Vec::new()),
            (_, 0) => (DecodeStatus::NoCrcMatch, None, Vec::new()),
            (_, 1) => (DecodeStatus::Recovered, matches.into_iter().next(), Vec::new()),
            _ => (DecodeStatus::Ambiguous, None, matches),
        };
        let done = matches!(status, DecodeStatus::Recovered | DecodeStatus::Ambiguous);
        outcome = Some(DecodeOutcome {
            status,
            recovered,
            candidates,
            ambiguous_set,
            radius,
            multiplicity: list.multiplicity,
        });
        if done {
            break;
        }
    }
    Ok(outcome.expect("at least one decoding stage"))
}

/// Compressed bits over source bits, kept as an exact fraction.
#[derive(Clone, Copy, Debug)]
pub struct Rate {
    pub payload_bits: u64,
    pub source_bits: u64,
}

impl Rate {
    pub fn value(&self) -> f64 {
        self.payload_bits as f64 / self.source_bits as f64
    }

    /// Exact comparison with `num / den`.
    pub fn equals(&self, num: u64, den: u64) -> bool {
        self.payload_bits as u128 * den as u128 == num as u128 * self.source_bits as u128
    }
}

impl PartialEq for Rate {
    fn eq(&self, other: &Rate) -> bool {
        self.equals(other.payload_bits, other.source_bits)
    }
}

impl Eq for Rate {}

impl fmt::Display for Rate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{} = {:.4}", self.payload_bits, self.source_bits, self.value())
    }
}

/// `((n - k) m + ρ) / (n m)` for any linear code over GF(2^m).
pub fn rate_for(n: usize, k: usize, m: u32, rho: u32) -> Rate {
    Rate {
        payload_bits: (n - k) as u64 * m as u64 + rho as u64,
        source_bits: n as u64 * m as u64,
    }
}

pub fn measured_rate(code: &RsCode, crc: &CrcSpec) -> Rate {
    rate_for(code.n(), code.k(), code.field().m(), crc.rho())
}
