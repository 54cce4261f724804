//! Code selection for the three families: RS over GF(256), binary BCH and
//! binary Reed-Muller.

use scsi_core::design::{binomial_tail_threshold, design, CorrelationModel};

fn main() -> scsi_core::Result<()> {
    println!("T_eps for n=1000, p=0.4, eps=1e-4: {}\n", binomial_tail_threshold(1000, 0.4, 1e-4)?);
    for (q, n, p) in [(256, 255, 0.3), (2, 1023, 0.2), (2, 1024, 0.3)] {
        let d = design(n, CorrelationModel::new(q, p)?, 1e-4, 12)?;
        println!("{d}");
        println!("gain over unique decoding: {:.4}\n", d.list_advantage());
    }
    Ok(())
}
