//! Guruswami-Sudan list decoding of RS(15, 2) past half the minimum
//! distance, checked against exhaustive search.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use scsi_core::gs::{brute_force_list_decode, gs_list_decode, gs_radius, min_multiplicity_for};
use scsi_core::rs::hamming_distance;
use scsi_core::{Field, Gf, RsCode};

fn main() -> scsi_core::Result<()> {
    let code = RsCode::narrow_sense(&Field::with_degree(4)?, 15, 2)?;
    let tau = gs_radius(15, 2);
    let m = min_multiplicity_for(15, 2, tau)?;
    println!("RS(15, 2): unique radius {}, list radius {tau} at multiplicity {m}", (code.d_min() - 1) / 2);

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let c = code.encode_message(&[Gf(5), Gf(9)])?;
    let mut y = c.clone();
    for i in 0..tau {
        y[i] = y[i] + Gf(rng.random_range(1..16));
    }
    let list = gs_list_decode(&code, &y, tau, m)?;
    let exhaustive = brute_force_list_decode(&code, &y, tau)?;
    println!("{} errors, list of {} (exhaustive: {})", hamming_distance(&c, &y), list.len(), exhaustive.len());
    for cand in &list.candidates {
        println!("  distance {:>2}  sent: {}", hamming_distance(cand, &y), cand == &c);
    }
    assert_eq!(list.candidates, exhaustive.candidates);
    Ok(())
}
