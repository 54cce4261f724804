//! Code selection for a target block length, correlation and error rate.
//!
//! The distance between source and side information is Binomial(n, p). The
//! designer picks a radius `T_eps` that the distance rarely reaches, then the
//! highest-rate code whose list-decoding radius covers it. Reed-Solomon
//! selection is exact; binary BCH and Reed-Muller rows are planning figures
//! from the published radius formulas.

use std::fmt;

use serde::Serialize;

use crate::codec::{rate_for, Rate};
use crate::error::{Error, Result};
use crate::gs::gs_radius;

/// Symbol-level correlation: `Pr(X_i != Y_i) = p`, with a disagreeing `Y_i`
/// uniform over the other `q - 1` symbols. For `q = 2` this is `Y = X ^ U`
/// with `U ~ Bernoulli(p)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CorrelationModel {
    pub q: u64,
    pub p: f64,
}

impl CorrelationModel {
    pub fn new(q: u64, p: f64) -> Result<CorrelationModel> {
        if q < 2 {
            return Err(Error::DomainError(format!("alphabet size {q} < 2")));
        }
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::DomainError(format!("probability {p} outside [0, 1]")));
        }
        Ok(CorrelationModel { q, p })
    }

    /// `0 < p < 1 - 1/q`, where list decoding is meaningful.
    pub fn in_list_decoding_regime(&self) -> bool {
        self.p > 0.0 && self.p < 1.0 - 1.0 / self.q as f64
    }
}

/// `ln Pr(d = j)` for `j = 0..=n`.
fn log_pmf(n: usize, p: f64) -> Vec<f64> {
    let (lp, lq) = (p.ln(), (1.0 - p).ln());
    let mut out = Vec::with_capacity(n + 1);
    let mut log_binom = 0.0f64;
    for j in 0..=n {
        if j > 0 {
            log_binom += ((n - j + 1) as f64).ln() - (j as f64).ln();
        }
        out.push(log_binom + j as f64 * lp + (n - j) as f64 * lq);
    }
    out
}

/// `ln sum_{j >= t} Pr(d = j)` for every `t = 0..=n+1`, by log-sum-exp from
/// the top.
fn log_upper_tails(n: usize, p: f64) -> Vec<f64> {
    let pmf = log_pmf(n, p);
    let mut tails = vec![f64::NEG_INFINITY; n + 2];
    for t in (0..=n).rev() {
        let (a, b) = (tails[t + 1], pmf[t]);
        let hi = a.max(b);
        tails[t] = if hi == f64::NEG_INFINITY {
            hi
        } else {
            hi + ((a - hi).exp() + (b - hi).exp()).ln()
        };
    }
    tails
}

fn check_p(p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::DomainError(format!("probability {p} outside [0, 1]")));
    }
    Ok(())
}

/// `Pr(d > t)` for `d ~ Binomial(n, p)`.
pub fn binomial_tail(n: usize, p: f64, t: usize) -> Result<f64> {
    check_p(p)?;
    if t >= n {
        return Ok(0.0);
    }
    if p == 0.0 {
        return Ok(0.0);
    }
    if p == 1.0 {
        return Ok(1.0);
    }
    Ok(log_upper_tails(n, p)[t + 1].exp())
}

/// Standard deviation of the distance, `sqrt(n p (1 - p))`.
pub fn distance_std_dev(n: usize, p: f64) -> f64 {
    (n as f64 * p * (1.0 - p)).sqrt()
}

/// `T_eps`: the smallest `T` with `Pr(d >= T) < eps`. Decoding to radius
/// `T_eps` then fails with probability `Pr(d > T_eps) < eps`. A vacuous
/// target (`eps >= 1`) or a noiseless model gives zero.
pub fn binomial_tail_threshold(n: usize, p: f64, eps: f64) -> Result<usize> {
    check_p(p)?;
    if eps.is_nan() || eps <= 0.0 {
        return Err(Error::DomainError(format!("target error rate {eps} must be positive")));
    }
    if eps >= 1.0 || p == 0.0 {
        return Ok(0);
    }
    if p == 1.0 {
        return Ok(n + 1);
    }
    let log_eps = eps.ln();
    let tails = log_upper_tails(n, p);
    Ok((0..=n + 1).find(|&t| tails[t] < log_eps).unwrap_or(n + 1))
}

/// Largest RS dimension whose radius `n (1 - sqrt(k / n))` is at least
/// `T_eps`, evaluated exactly as `(n - T)^2 >= k n`. The Guruswami-Sudan
/// decoder certifies every such radius.
pub fn select_rs_code(n: usize, t_eps: usize) -> Result<usize> {
    if t_eps >= n {
        return Err(Error::NoFeasibleCode(format!("radius {t_eps} is not below n = {n}")));
    }
    let slack = (n - t_eps) as u128;
    let k = (slack * slack / n as u128).min(n as u128) as usize;
    if k == 0 {
        return Err(Error::NoFeasibleCode(format!(
            "no RS code of length {n} list-decodes {t_eps} errors"
        )));
    }
    debug_assert!(gs_radius(n, k) >= t_eps);
    Ok(k)
}

/// MDS dimension with `d_min = 2 T_eps + 1`.
pub fn unique_decoding_k(n: usize, t_eps: usize) -> Result<usize> {
    if 2 * t_eps + 1 > n {
        return Err(Error::NoFeasibleCode(format!(
            "unique decoding of {t_eps} errors needs d_min = {} > n = {n}",
            2 * t_eps + 1
        )));
    }
    Ok(n - 2 * t_eps)
}

fn planning_radius(n: usize, d: f64, factor: f64, limit: f64) -> Result<usize> {
    if !(0.0..=limit).contains(&d) {
        return Err(Error::DomainError(format!("relative distance {d} outside [0, {limit}]")));
    }
    let tau = n as f64 / 2.0 * (1.0 - (1.0 - factor * d).max(0.0).sqrt());
    // absorb rounding at exact integers such as D = 1/2
    Ok((tau + 1e-9).floor() as usize)
}

/// Binary BCH radius `floor((n/2)(1 - sqrt(1 - 2D)))`, `0 <= D <= 1/2`.
pub fn bch_list_radius(n: usize, d: f64) -> Result<usize> {
    planning_radius(n, d, 2.0, 0.5)
}

/// Reed-Muller radius `floor((n/2)(1 - sqrt(1 - 4D)))`, `0 <= D <= 1/4`.
pub fn rm_list_radius(n: usize, d: f64) -> Result<usize> {
    planning_radius(n, d, 4.0, 0.25)
}

/// Smallest `d_min` whose BCH radius reaches `t`: `d n >= 2 t (n - t)`.
pub fn bch_required_distance(n: usize, t: usize) -> usize {
    let t = t.min(n / 2) as u64;
    (2 * t * (n as u64 - t)).div_ceil(n as u64) as usize
}

/// Smallest `d_min` whose RM radius reaches `t`: `d n >= t (n - t)`.
pub fn rm_required_distance(n: usize, t: usize) -> usize {
    let t = t.min(n / 2) as u64;
    (t * (n as u64 - t)).div_ceil(n as u64) as usize
}

/// `k(r, m) = sum_{i <= r} C(m, i)`.
pub fn rm_dimension(r: u32, m: u32) -> usize {
    assert!(r <= m, "order {r} exceeds m = {m}");
    let mut binom = 1usize;
    let mut sum = 1usize;
    for i in 1..=r as usize {
        binom = binom * (m as usize - i + 1) / i;
        sum += binom;
    }
    sum
}

pub fn rm_min_distance(r: u32, m: u32) -> usize {
    assert!(r <= m, "order {r} exceeds m = {m}");
    1 << (m - r)
}

/// A narrow-sense primitive binary BCH code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BchParams {
    pub n: usize,
    pub k: usize,
    /// Bose distance: the largest designed distance giving this dimension.
    pub d: usize,
}

/// Every narrow-sense BCH code of length `2^m - 1`, by decreasing dimension.
/// Dimensions come from the 2-cyclotomic cosets modulo `n`.
pub fn bch_table(m: u32) -> Vec<BchParams> {
    assert!((2..=16).contains(&m), "BCH length exponent {m} outside 2..=16");
    let n = (1usize << m) - 1;
    let mut in_generator = vec![false; n];
    let mut roots = 0usize;
    let mut table: Vec<BchParams> = vec![BchParams { n, k: n, d: 1 }];
    // designed distance delta puts alpha^1 .. alpha^{delta-1} in the zeros
    for delta in 2..=n {
        let i = delta - 1;
        if !in_generator[i] {
            let mut j = i;
            loop {
                in_generator[j] = true;
                roots += 1;
                j = j * 2 % n;
                if j == i {
                    break;
                }
            }
        }
        let k = n - roots;
        let last = table.last_mut().unwrap();
        if last.k == k {
            last.d = delta;
        } else {
            table.push(BchParams { n, k, d: delta });
        }
    }
    table
}

/// `H(p)` in bits.
pub fn entropy_binary(p: f64) -> f64 {
    entropy_q(p, 2)
}

/// `H_q(p) = p log_q(q - 1) - p log_q p - (1 - p) log_q(1 - p)`, with
/// `0 log 0 = 0`.
pub fn entropy_q(p: f64, q: u64) -> f64 {
    let xlx = |x: f64| if x <= 0.0 { 0.0 } else { x * x.ln() };
    let ln_q = (q as f64).ln();
    (p * ((q - 1) as f64).ln() - xlx(p) - xlx(1.0 - p)) / ln_q
}

/// `n H_q(p) - (n - k)`: log_q of the expected number of coset words in the
/// radius-`np` sphere. Positive values mean the rate is above `1 - H_q(p)`.
pub fn expected_log_list_size(n: usize, k: usize, p: f64, q: u64) -> f64 {
    n as f64 * entropy_q(p, q) - (n - k) as f64
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CodeFamily {
    ReedSolomon,
    Bch,
    ReedMuller { order: u32 },
}

impl fmt::Display for CodeFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CodeFamily::ReedSolomon => f.write_str("RS"),
            CodeFamily::Bch => f.write_str("BCH"),
            CodeFamily::ReedMuller { order } => write!(f, "RM(r={order})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DesignResult {
    pub family: CodeFamily,
    pub q: u64,
    pub p: f64,
    pub eps: f64,
    pub n: usize,
    pub k: usize,
    pub d_min: usize,
    /// List-decoding radius of the chosen code.
    pub tau: usize,
    pub t_eps: usize,
    /// Smallest `d_min` whose radius reaches `t_eps` (binary families).
    pub required_d_min: Option<usize>,
    pub rho: u32,
    #[serde(serialize_with = "ser_rate")]
    pub rate_no_crc: Rate,
    #[serde(serialize_with = "ser_rate")]
    pub rate_with_crc: Rate,
    pub expected_log_list: f64,
    /// Best dimension when decoding only up to half the minimum distance.
    pub unique_k: usize,
    pub unique_d_min: usize,
    #[serde(serialize_with = "ser_rate")]
    pub unique_rate: Rate,
}

fn ser_rate<S: serde::Serializer>(r: &Rate, s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeStruct;
    let mut st = s.serialize_struct("Rate", 3)?;
    st.serialize_field("payload_bits", &r.payload_bits)?;
    st.serialize_field("source_bits", &r.source_bits)?;
    st.serialize_field("value", &r.value())?;
    st.end()
}

impl DesignResult {
    /// Rate gained over unique decoding, in bits per source bit.
    pub fn list_advantage(&self) -> f64 {
        self.unique_rate.value() - self.rate_no_crc.value()
    }
}

impl fmt::Display for DesignResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "family: {}", self.family)?;
        writeln!(f, "model: q={} p={} eps={:e}", self.q, self.p, self.eps)?;
        writeln!(f, "t_eps: {}", self.t_eps)?;
        writeln!(f, "code: ({}, {}) d_min={}", self.n, self.k, self.d_min)?;
        writeln!(f, "tau: {}", self.tau)?;
        if let Some(d) = self.required_d_min {
            writeln!(f, "required_d_min: {d}")?;
        }
        writeln!(f, "rate_no_crc: {}", self.rate_no_crc)?;
        writeln!(f, "rate_with_crc: {} (rho={})", self.rate_with_crc, self.rho)?;
        writeln!(f, "expected_log_list: {:.4}", self.expected_log_list)?;
        if self.expected_log_list > 0.0 {
            writeln!(f, "warning: rate exceeds 1 - H_q(p); lists will be exponentially long")?;
        }
        write!(
            f,
            "unique_decoding: ({}, {}) d_min={} rate={}",
            self.n, self.unique_k, self.unique_d_min, self.unique_rate
        )
    }
}

/// Picks a code family from `(n, q)`: RS when `n` divides `q - 1` for
/// `q = 2^m > 2`; binary BCH for `n = 2^m - 1`; binary RM for `n = 2^m`.
pub fn design(n: usize, model: CorrelationModel, eps: f64, rho: u32) -> Result<DesignResult> {
    let CorrelationModel { q, p } = model;
    if !(q.is_power_of_two() && q >= 2 && q <= 1 << 16) {
        return Err(Error::DomainError(format!("alphabet size {q} is not 2^m with m <= 16")));
    }
    if model.p >= 1.0 - 1.0 / q as f64 {
        return Err(Error::DomainError(format!(
            "p = {p} is not below 1 - 1/q; side information carries no list-decodable structure"
        )));
    }
    let t_eps = binomial_tail_threshold(n, p, eps)?;
    let m = q.trailing_zeros();
    let base = |family, k: usize, d_min: usize, tau: usize, required: Option<usize>| DesignResult {
        family,
        q,
        p,
        eps,
        n,
        k,
        d_min,
        tau,
        t_eps,
        required_d_min: required,
        rho,
        rate_no_crc: rate_for(n, k, m, 0),
        rate_with_crc: rate_for(n, k, m, rho),
        expected_log_list: expected_log_list_size(n, k, p, q),
        unique_k: 0,
        unique_d_min: 0,
        unique_rate: rate_for(n, 0, m, 0),
    };
    let with_unique = |mut r: DesignResult, k: usize, d: usize| {
        r.unique_k = k;
        r.unique_d_min = d;
        r.unique_rate = rate_for(n, k, m, 0);
        r
    };
    if q > 2 {
        if n == 0 || (q as usize - 1) % n != 0 {
            return Err(Error::DomainError(format!("RS length {n} does not divide q - 1 = {}", q - 1)));
        }
        let k = select_rs_code(n, t_eps)?;
        let r = base(CodeFamily::ReedSolomon, k, n - k + 1, gs_radius(n, k), None);
        let uk = unique_decoding_k(n, t_eps)?;
        return Ok(with_unique(r, uk, n - uk + 1));
    }
    if (n + 1).is_power_of_two() && n >= 3 {
        let table = bch_table((n + 1).trailing_zeros());
        let need = bch_required_distance(n, t_eps);
        let pick = |min_d: usize| table.iter().find(|c| c.d >= min_d).copied();
        let best = pick(need).ok_or_else(|| {
            Error::NoFeasibleCode(format!("no BCH code of length {n} has d_min >= {need}"))
        })?;
        let tau = bch_list_radius(n, (best.d as f64 / n as f64).min(0.5))?;
        let r = base(CodeFamily::Bch, best.k, best.d, tau, Some(need));
        let unique = pick(2 * t_eps + 1).ok_or_else(|| {
            Error::NoFeasibleCode(format!("no BCH code of length {n} has d_min >= {}", 2 * t_eps + 1))
        })?;
        return Ok(with_unique(r, unique.k, unique.d));
    }
    if n.is_power_of_two() && n >= 2 {
        let mm = n.trailing_zeros();
        let need = rm_required_distance(n, t_eps);
        // higher order means higher dimension and lower distance
        let order_for = |min_d: usize| (0..=mm).rev().find(|&r| rm_min_distance(r, mm) >= min_d);
        let r = order_for(need).ok_or_else(|| {
            Error::NoFeasibleCode(format!("no RM code of length {n} has d_min >= {need}"))
        })?;
        let d = rm_min_distance(r, mm);
        let tau = rm_list_radius(n, (d as f64 / n as f64).min(0.25))?;
        let res = base(CodeFamily::ReedMuller { order: r }, rm_dimension(r, mm), d, tau, Some(need));
        let ur = order_for(2 * t_eps + 1);
        return Ok(match ur {
            Some(ur) => with_unique(res, rm_dimension(ur, mm), rm_min_distance(ur, mm)),
            // not even the repetition code decodes uniquely: send x raw
            None => with_unique(res, 0, 0),
        });
    }
    Err(Error::DomainError(format!(
        "binary designs need n = 2^m - 1 (BCH) or n = 2^m (RM), got {n}"
    )))
}
