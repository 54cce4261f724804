//! A CRC-12 tag picks the source word out of a list of candidates.

use scsi_core::crc::{crc_compute, crc_filter};
use scsi_core::{CrcSpec, Field, Gf};

fn main() -> scsi_core::Result<()> {
    let f = Field::with_degree(4)?;
    let spec = CrcSpec::CRC12;
    println!("generator {:#x}, {} bits", spec.generator(), spec.rho());

    let x: Vec<Gf> = (1..=15).map(Gf).collect();
    let tag = crc_compute(&spec, &x, &f);
    println!("tag of 1..15 = {:#05x}", tag.remainder);

    let mut list: Vec<Vec<Gf>> = (0..5u16).map(|v| vec![Gf(v); 15]).collect();
    list.insert(3, x.clone());
    let kept = crc_filter(&spec, &list, tag, &f);
    println!("{} candidates, {} pass the CRC, source kept: {}", list.len(), kept.len(), kept == vec![x]);
    Ok(())
}
