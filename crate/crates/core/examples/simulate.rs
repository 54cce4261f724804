//! Monte Carlo failure rate of RS(15, 5) against the binomial tail.

use scsi_core::design::CorrelationModel;
use scsi_core::sim::run_trials;
use scsi_core::{CrcSpec, Field, Multiplicity, RsCode};

fn main() -> scsi_core::Result<()> {
    let code = RsCode::narrow_sense(&Field::with_degree(4)?, 15, 5)?;
    let model = CorrelationModel::new(16, 0.25)?;
    let r = run_trials(&code, &CrcSpec::CRC12, &model, 7, Multiplicity::Escalating, 5000, 42)?;
    print!("{}", r.to_text());
    println!("failure fraction {:.4} vs Pr(d > tau) = {:.4}", r.failure_fraction(), r.exact_tail);
    println!("expected CRC collisions {:.4}, observed {}", r.expected_collisions(), r.collision_trials.len());
    Ok(())
}
