//! Compress a source word to its syndrome plus CRC, then recover it from
//! noisy side information that a unique decoder could not handle.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use scsi_core::codec::measured_rate;
use scsi_core::design::CorrelationModel;
use scsi_core::rs::hamming_distance;
use scsi_core::sim::sample_pair;
use scsi_core::{scsi_decode, scsi_encode, CrcSpec, Field, Multiplicity, RsCode};

fn main() -> scsi_core::Result<()> {
    let code = RsCode::narrow_sense(&Field::with_degree(8)?, 255, 88)?;
    let crc = CrcSpec::CRC12;
    let model = CorrelationModel::new(256, 0.3)?;
    println!("RS(255, 88) with CRC-12, rate {}", measured_rate(&code, &crc));

    // draw until the noise is beyond half the minimum distance
    let unique = (code.d_min() - 1) / 2;
    let (x, y) = (0..)
        .map(|seed| sample_pair(255, &model, &mut ChaCha8Rng::seed_from_u64(seed)))
        .find(|(x, y)| hamming_distance(x, y) > unique)
        .expect("some draw exceeds the unique radius");
    let msg = scsi_encode(&code, &crc, &x)?;
    println!("x and y differ in {} of 255 symbols; unique decoding stops at {unique}", hamming_distance(&x, &y));

    let out = scsi_decode(&code, &crc, &msg, &y, 105, Multiplicity::Escalating)?;
    println!(
        "{} with {} candidates at radius {} (multiplicity {})",
        out.status,
        out.list_size(),
        out.radius,
        out.multiplicity
    );
    assert_eq!(out.recovered.as_deref(), Some(&x[..]));
    Ok(())
}
