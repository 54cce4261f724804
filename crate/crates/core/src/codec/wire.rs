//! Byte layouts for compressed messages and symbol files.
//!
//! Message (integers little-endian):
//!
//! ```text
//! offset  size  field
//! 0       4     magic "SCSI"
//! 4       1     version (1)
//! 5       1     m, bits per symbol
//! 6       4     n
//! 10      4     k
//! 14      4     b, first exponent of the parity-check rows
//! 18      1     rho, CRC bits
//! 19      8     CRC generator mask, including the x^rho term
//! 27      ...   n - k syndrome symbols, m bits each, MSB first,
//!               then rho CRC bits, MSB first, zero-padded to a byte
//! ```
//!
//! The field modulus is the default primitive polynomial for `m`.
//!
//! A symbol file is `n` symbols packed the same way: `m` bits each, MSB
//! first, zero-padded to a byte, exactly `ceil(n m / 8)` bytes.

use crate::codec::EncodedMessage;
use crate::crc::{CrcSpec, CrcTag};
use crate::error::{Error, Result};
use crate::field::{Field, Gf};
use crate::rs::{RsCode, Syndrome};

pub const MAGIC: &[u8; 4] = b"SCSI";
pub const VERSION: u8 = 1;
const HEADER_LEN: usize = 27;

#[derive(Default)]
struct BitWriter {
    bytes: Vec<u8>,
    used: u32,
}

impl BitWriter {
    fn push(&mut self, value: u64, width: u32) {
        for i in (0..width).rev() {
            if self.used % 8 == 0 {
                self.bytes.push(0);
            }
            if (value >> i) & 1 == 1 {
                *self.bytes.last_mut().unwrap() |= 0x80 >> (self.used % 8);
            }
            self.used += 1;
        }
    }
}

struct BitReader<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl BitReader<'_> {
    fn take(&mut self, width: u32) -> u64 {
        let mut v = 0u64;
        for _ in 0..width {
            let bit = (self.bytes[self.pos / 8] >> (7 - self.pos % 8)) & 1;
            v = (v << 1) | bit as u64;
            self.pos += 1;
        }
        v
    }

    fn rest_is_zero(&self) -> bool {
        let byte = self.pos / 8;
        let partial = self.pos % 8;
        let mut tail = &self.bytes[byte.min(self.bytes.len())..];
        if partial != 0 {
            if tail[0] & (0xFF >> partial) != 0 {
                return false;
            }
            tail = &tail[1..];
        }
        tail.iter().all(|&b| b == 0)
    }
}

fn packed_len(bits: usize) -> usize {
    bits.div_ceil(8)
}

pub fn pack_symbols(word: &[Gf], m: u32) -> Vec<u8> {
    let mut w = BitWriter::default();
    for s in word {
        w.push(s.value() as u64, m);
    }
    w.bytes
}

pub fn unpack_symbols(bytes: &[u8], m: u32, n: usize) -> Result<Vec<Gf>> {
    let bits = n * m as usize;
    if bytes.len() != packed_len(bits) {
        return Err(Error::Format(format!(
            "symbol file holds {} bits, expected {bits} bits ({n} symbols of {m} bits, {} bytes)",
            bytes.len() * 8,
            packed_len(bits)
        )));
    }
    let mut r = BitReader { bytes, pos: 0 };
    let word = (0..n).map(|_| Gf(r.take(m) as u16)).collect();
    if !r.rest_is_zero() {
        return Err(Error::Format("nonzero padding bits after the last symbol".into()));
    }
    Ok(word)
}

/// Code and CRC parameters carried in a message header.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WireHeader {
    pub m: u32,
    pub n: usize,
    pub k: usize,
    pub b: u32,
    pub rho: u32,
    pub generator: u64,
}

impl WireHeader {
    pub fn for_code(code: &RsCode, crc: &CrcSpec) -> WireHeader {
        WireHeader {
            m: code.field().m(),
            n: code.n(),
            k: code.k(),
            b: code.b(),
            rho: crc.rho(),
            generator: crc.generator(),
        }
    }

    pub fn code(&self) -> Result<RsCode> {
        RsCode::new(&Field::with_degree(self.m)?, self.n, self.k, self.b)
    }

    pub fn crc(&self) -> Result<CrcSpec> {
        CrcSpec::new(self.generator, self.rho)
    }

    fn body_bits(&self) -> usize {
        (self.n - self.k) * self.m as usize + self.rho as usize
    }
}

pub fn write_message(code: &RsCode, crc: &CrcSpec, msg: &EncodedMessage) -> Vec<u8> {
    let h = WireHeader::for_code(code, crc);
    assert!(h.m <= u8::MAX as u32 && h.rho <= u8::MAX as u32);
    let mut out = Vec::with_capacity(HEADER_LEN + packed_len(h.body_bits()));
    out.extend_from_slice(MAGIC);
    out.push(VERSION);
    out.push(h.m as u8);
    out.extend_from_slice(&(h.n as u32).to_le_bytes());
    out.extend_from_slice(&(h.k as u32).to_le_bytes());
    out.extend_from_slice(&h.b.to_le_bytes());
    out.push(h.rho as u8);
    out.extend_from_slice(&h.generator.to_le_bytes());
    let mut w = BitWriter::default();
    for s in msg.syndrome.values() {
        w.push(s.value() as u64, h.m);
    }
    w.push(msg.crc.remainder, h.rho);
    out.extend_from_slice(&w.bytes);
    out
}

fn le_u32(b: &[u8]) -> u32 {
    u32::from_le_bytes(b.try_into().unwrap())
}

/// Parses and validates a message, returning its header and contents.
pub fn read_message(bytes: &[u8]) -> Result<(WireHeader, EncodedMessage)> {
    if bytes.len() < HEADER_LEN {
        return Err(Error::Format(format!(
            "message is {} bytes, shorter than the {HEADER_LEN}-byte header",
            bytes.len()
        )));
    }
    if &bytes[..4] != MAGIC {
        return Err(Error::Format("bad magic, not a compressed message".into()));
    }
    if bytes[4] != VERSION {
        return Err(Error::Format(format!("unsupported version {}", bytes[4])));
    }
    let h = WireHeader {
        m: bytes[5] as u32,
        n: le_u32(&bytes[6..10]) as usize,
        k: le_u32(&bytes[10..14]) as usize,
        b: le_u32(&bytes[14..18]),
        rho: bytes[18] as u32,
        generator: u64::from_le_bytes(bytes[19..27].try_into().unwrap()),
    };
    // Validates m, n, k, b, rho and the generator before sizes are trusted.
    h.code()?;
    h.crc()?;
    let body = &bytes[HEADER_LEN..];
    let want = packed_len(h.body_bits());
    if body.len() != want {
        return Err(Error::Format(format!(
            "message body is {} bytes, expected {want} for {} syndrome symbols and {} CRC bits",
            body.len(),
            h.n - h.k,
            h.rho
        )));
    }
    let mut r = BitReader { bytes: body, pos: 0 };
    let syndrome: Vec<Gf> = (0..h.n - h.k).map(|_| Gf(r.take(h.m) as u16)).collect();
    let remainder = r.take(h.rho);
    if !r.rest_is_zero() {
        return Err(Error::Format("nonzero padding bits at the end of the message".into()));
    }
    Ok((
        h,
        EncodedMessage {
            syndrome: Syndrome(syndrome),
            crc: CrcTag { remainder },
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symbols_pack_msb_first() {
        assert_eq!(pack_symbols(&[Gf(0xA), Gf(0x5), Gf(0xF)], 4), vec![0xA5, 0xF0]);
        assert_eq!(pack_symbols(&[Gf(1), Gf(1), Gf(1)], 3), vec![0b0010_0100, 0b1000_0000]);
        let word = unpack_symbols(&[0b0010_0100, 0b1000_0000], 3, 3).unwrap();
        assert_eq!(word, vec![Gf(1); 3]);
    }

    #[test]
    fn symbol_file_errors_name_bit_lengths() {
        let err = unpack_symbols(&[0; 7], 4, 15).unwrap_err().to_string();
        assert!(err.contains("56 bits") && err.contains("60 bits"), "{err}");
        assert!(unpack_symbols(&[0xA5, 0xF1], 4, 3).is_err());
    }
}
