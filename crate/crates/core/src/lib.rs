//! Source coding with side information by syndrome compression and
//! Reed-Solomon list decoding.
//!
//! A source word `x` over GF(2^m) is compressed to its syndrome under an
//! `(n, k)` Reed-Solomon code plus a short CRC. A decoder holding correlated
//! side information `y` list-decodes the coset named by the syndrome around
//! `y` and uses the CRC to pick `x` out of the list.
//!
//! - [`field`]: GF(2^m) table arithmetic
//! - [`rs`]: Reed-Solomon codes, syndromes, coset representatives
//! - [`gs`]: Guruswami-Sudan list decoding and an exhaustive reference decoder
//! - [`crc`]: plain polynomial-remainder CRCs over serialized words
//! - [`codec`]: the compressor/decompressor and its wire format
//! - [`design`]: code selection from a block length, correlation and target error rate
//! - [`sim`]: Monte Carlo evaluation
//! - [`tables`]: regeneration of the reference design tables
//! - [`cli`]: the `scsi` command-line front end

pub mod cli;
pub mod codec;
pub mod crc;
pub mod design;
pub mod error;
pub mod field;
pub mod gs;
pub mod rs;
pub mod sim;
pub mod tables;

pub use codec::{scsi_decode, scsi_encode, DecodeOutcome, DecodeStatus, EncodedMessage, Multiplicity};
pub use crc::{CrcSpec, CrcTag};
pub use error::{Error, Result};
pub use field::{Field, Gf};
pub use rs::{RsCode, Syndrome};
