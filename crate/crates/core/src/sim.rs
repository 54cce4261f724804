//! Monte Carlo evaluation of the codec under the q-ary symmetric model.
//!
//! Trial `i` draws from a ChaCha8 stream selected by `(seed, i)`, so trials
//! run in any order on any number of threads and the report is identical.

use std::fmt::{self, Write as _};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::codec::{scsi_decode, scsi_encode, DecodeStatus, Multiplicity};
use crate::crc::CrcSpec;
use crate::design::{binomial_tail, CorrelationModel};
use crate::error::{Error, Result};
use crate::field::Gf;
use crate::rs::{hamming_distance, RsCode};

/// Draws `x` uniformly and `y` from `x` through the symmetric channel.
pub fn sample_pair<R: Rng + ?Sized>(n: usize, model: &CorrelationModel, rng: &mut R) -> (Vec<Gf>, Vec<Gf>) {
    let q = model.q;
    let x: Vec<Gf> = (0..n).map(|_| Gf(rng.random_range(0..q) as u16)).collect();
    let y = x
        .iter()
        .map(|&s| {
            if rng.random_bool(model.p) {
                // a nonzero shift mod q is uniform over the other q - 1 symbols
                let shift = rng.random_range(1..q);
                Gf(((s.value() as u64 + shift) % q) as u16)
            } else {
                s
            }
        })
        .collect();
    (x, y)
}

/// The generator for trial `index`.
pub fn trial_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrialReport {
    pub n: usize,
    pub k: usize,
    pub q: u64,
    pub p: f64,
    pub tau: usize,
    pub multiplicity: String,
    pub rho: u32,
    pub seed: u64,
    pub trials: u64,
    pub recovered: u64,
    pub no_candidate: u64,
    pub no_crc_match: u64,
    pub ambiguous: u64,
    /// Recovered, but not the source word.
    pub wrong_recovery: u64,
    /// Trials with `d(x, y) > tau`: misses the design budgets for.
    pub beyond_radius: u64,
    /// Trials with `d(x, y) <= tau` that ended without a match. The true word
    /// is in the coset, within the radius and carries the right CRC, so each
    /// one is a decoder defect.
    pub in_radius_failures: u64,
    /// Sum over trials of the list size minus one: the number of wrong
    /// candidates exposed to the CRC.
    pub wrong_candidates: u64,
    pub mean_list_size: f64,
    pub max_list_size: u64,
    /// Fraction of trials with `d(x, y) > tau`.
    pub empirical_tail: f64,
    /// `Pr(d > tau)` under Binomial(n, p).
    pub exact_tail: f64,
    /// Indices of trials that ended in a CRC collision (ambiguous or wrong).
    pub collision_trials: Vec<u64>,
}

impl TrialReport {
    /// Trials that did not recover the source word.
    pub fn failures(&self) -> u64 {
        self.trials - (self.recovered - self.wrong_recovery)
    }

    pub fn failure_fraction(&self) -> f64 {
        self.failures() as f64 / self.trials as f64
    }

    /// Wrong candidates expected to pass the CRC.
    pub fn expected_collisions(&self) -> f64 {
        self.wrong_candidates as f64 * 0.5f64.powi(self.rho as i32)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let mut kv = |k: &str, v: &dyn fmt::Display| {
            let _ = writeln!(s, "{k}: {v}");
        };
        kv("n", &self.n);
        kv("k", &self.k);
        kv("q", &self.q);
        kv("p", &self.p);
        kv("tau", &self.tau);
        kv("multiplicity", &self.multiplicity);
        kv("rho", &self.rho);
        kv("seed", &self.seed);
        kv("trials", &self.trials);
        kv("recovered", &self.recovered);
        kv("no_candidate", &self.no_candidate);
        kv("no_crc_match", &self.no_crc_match);
        kv("ambiguous", &self.ambiguous);
        kv("wrong_recovery", &self.wrong_recovery);
        kv("beyond_radius", &self.beyond_radius);
        kv("in_radius_failures", &self.in_radius_failures);
        kv("wrong_candidates", &self.wrong_candidates);
        kv("mean_list_size", &self.mean_list_size);
        kv("max_list_size", &self.max_list_size);
        kv("empirical_tail", &self.empirical_tail);
        kv("exact_tail", &self.exact_tail);
        let ids: Vec<String> = self.collision_trials.iter().map(u64::to_string).collect();
        kv("collision_trials", &ids.join(","));
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

struct Trial {
    status: DecodeStatus,
    correct: bool,
    distance: usize,
    list_size: usize,
}

pub fn run_trials(
    code: &RsCode,
    crc: &CrcSpec,
    model: &CorrelationModel,
    tau: usize,
    multiplicity: Multiplicity,
    trials: u64,
    seed: u64,
) -> Result<TrialReport> {
    let n = code.n();
    if model.q != code.field().size() as u64 {
        return Err(Error::DomainError(format!(
            "model alphabet {} differs from the code's field size {}",
            model.q,
            code.field().size()
        )));
    }
    let one = |i: u64| -> Result<Trial> {
        let mut rng = trial_rng(seed, i);
        let (x, y) = sample_pair(n, model, &mut rng);
        let msg = scsi_encode(code, crc, &x)?;
        let out = scsi_decode(code, crc, &msg, &y, tau, multiplicity)
            .map_err(|e| Error::DomainError(format!("trial {i} (seed {seed}): {e}")))?;
        Ok(Trial {
            status: out.status,
            correct: out.recovered.as_deref() == Some(&x[..]),
            distance: hamming_distance(&x, &y),
            list_size: out.list_size(),
        })
    };
    let results: Vec<Trial> = (0..trials).into_par_iter().map(one).collect::<Result<_>>()?;

    let mut r = TrialReport {
        n,
        k: code.k(),
        q: model.q,
        p: model.p,
        tau,
        multiplicity: multiplicity.to_string(),
        rho: crc.rho(),
        seed,
        trials,
        recovered: 0,
        no_candidate: 0,
        no_crc_match: 0,
        ambiguous: 0,
        wrong_recovery: 0,
        beyond_radius: 0,
        in_radius_failures: 0,
        wrong_candidates: 0,
        mean_list_size: 0.0,
        max_list_size: 0,
        empirical_tail: 0.0,
        exact_tail: binomial_tail(n, model.p, tau)?,
        collision_trials: Vec::new(),
    };
    let mut list_total = 0u64;
    for (i, t) in results.iter().enumerate() {
        match t.status {
            DecodeStatus::Recovered => r.recovered += 1,
            DecodeStatus::NoCandidate => r.no_candidate += 1,
            DecodeStatus::NoCrcMatch => r.no_crc_match += 1,
            DecodeStatus::Ambiguous => r.ambiguous += 1,
        }
        let wrong = t.status == DecodeStatus::Recovered && !t.correct;
        if wrong {
            r.wrong_recovery += 1;
        }
        if wrong || t.status == DecodeStatus::Ambiguous {
            r.collision_trials.push(i as u64);
        }
        if t.distance > tau {
            r.beyond_radius += 1;
        } else if matches!(t.status, DecodeStatus::NoCandidate | DecodeStatus::NoCrcMatch) {
            r.in_radius_failures += 1;
        }
        list_total += t.list_size as u64;
        r.wrong_candidates += t.list_size.saturating_sub(1) as u64;
        r.max_list_size = r.max_list_size.max(t.list_size as u64);
    }
    if trials > 0 {
        r.mean_list_size = list_total as f64 / trials as f64;
        r.empirical_tail = r.beyond_radius as f64 / trials as f64;
    }
    Ok(r)
}
