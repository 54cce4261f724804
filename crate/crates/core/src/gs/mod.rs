//! Guruswami-Sudan list decoding of Reed-Solomon codes, plus an exhaustive
//! reference decoder.
//!
//! Decoding to radius `tau` means finding every message polynomial `u` of
//! degree `< k` whose evaluations agree with the received word in at least
//! `t = n - tau` positions. With multiplicity `m` the interpolation
//! polynomial has `(1, k-1)`-weighted degree budget `D = t m - 1`, and the
//! decode is certified whenever the number of monomials within that budget
//! exceeds the `n m (m + 1) / 2` linear constraints: then a nonzero `Q`
//! exists, and `Q(x, u(x))` has more zeros than its degree, so `y - u(x)`
//! divides `Q`.

mod bipoly;
mod interpolate;
mod roots;

pub use interpolate::Interpolator;

use crate::error::{Error, Result};
use crate::field::Gf;
use crate::rs::{hamming_distance, RsCode};

/// Codewords within a Hamming radius of a received word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecodeList {
    /// Distinct codewords, ordered by distance to the received word, then
    /// lexicographically.
    pub candidates: Vec<Vec<Gf>>,
    pub radius_used: usize,
    /// Interpolation multiplicity; zero for the exhaustive decoder.
    pub multiplicity: u32,
}

impl DecodeList {
    pub fn len(&self) -> usize {
        self.candidates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.candidates.is_empty()
    }

    pub fn contains(&self, word: &[Gf]) -> bool {
        self.candidates.iter().any(|c| c == word)
    }
}

/// Smallest agreement `t` for which some multiplicity certifies decoding:
/// `floor(sqrt((k - 1) n)) + 1`.
pub fn agreement_threshold(n: usize, k: usize) -> usize {
    ((k as u64 - 1) * n as u64).isqrt() as usize + 1
}

/// Largest radius the decoder can certify for an `(n, k)` code.
pub fn gs_radius(n: usize, k: usize) -> usize {
    assert!(1 <= k && k <= n, "need 1 <= k <= n");
    n.saturating_sub(agreement_threshold(n, k))
}

/// Number of monomials `x^i y^j` with `i + v j <= budget`.
fn monomial_count(budget: u128, v: u128) -> u128 {
    let jmax = budget / v;
    // sum_{j=0}^{jmax} (budget - v j + 1)
    (jmax + 1) * (budget + 1) - v * jmax * (jmax + 1) / 2
}

/// Whether multiplicity `m` certifies radius `tau` for an `(n, k)` code.
pub fn certifies(n: usize, k: usize, tau: usize, m: u32) -> bool {
    if tau >= n || m == 0 {
        return false;
    }
    if k == 1 {
        return true;
    }
    let t = (n - tau) as u128;
    let m = m as u128;
    let budget = t * m - 1;
    let constraints = n as u128 * m * (m + 1) / 2;
    monomial_count(budget, k as u128 - 1) > constraints
}

/// Smallest multiplicity that certifies radius `tau`.
pub fn min_multiplicity_for(n: usize, k: usize, tau: usize) -> Result<u32> {
    if tau > gs_radius(n, k) {
        return Err(Error::RadiusTooLarge {
            n,
            k,
            tau,
            multiplicity: 0,
        });
    }
    // terminates: t^2 > (k - 1) n makes the monomial count outgrow the
    // constraint count quadratically in m
    Ok((1..).find(|&m| certifies(n, k, tau, m)).unwrap())
}

/// Largest radius certified by multiplicity `m` (`None` if not even radius 0
/// is certified, which never happens for `m >= 1`).
pub fn radius_for_multiplicity(n: usize, k: usize, m: u32) -> Option<usize> {
    (0..n).rev().find(|&tau| certifies(n, k, tau, m))
}

/// Upper bound on the list size at radius `tau` and multiplicity `m`: the
/// `y`-degree bound `floor(D / (k - 1))` of the interpolation polynomial.
pub fn list_size_bound(n: usize, k: usize, tau: usize, m: u32) -> usize {
    if k == 1 {
        // constants agreeing in >= n - tau positions
        return n / (n - tau).max(1);
    }
    ((n - tau) * m as usize - 1) / (k - 1)
}

pub fn gs_list_decode(code: &RsCode, received: &[Gf], tau: usize, multiplicity: u32) -> Result<DecodeList> {
    gs_list_decode_with(code, received, tau, multiplicity, Interpolator::Koetter)
}

pub fn gs_list_decode_with(
    code: &RsCode,
    received: &[Gf],
    tau: usize,
    multiplicity: u32,
    method: Interpolator,
) -> Result<DecodeList> {
    let (n, k) = (code.n(), code.k());
    if received.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            actual: received.len(),
        });
    }
    if !certifies(n, k, tau, multiplicity) {
        return Err(Error::RadiusTooLarge {
            n,
            k,
            tau,
            multiplicity,
        });
    }
    let f = code.field();
    // strip the column multipliers so the targets are plain evaluations
    let ys: Vec<Gf> = received
        .iter()
        .zip(code.column_multipliers())
        .map(|(&r, &v)| f.div(r, v).expect("multipliers are nonzero"))
        .collect();

    let messages: Vec<Vec<Gf>> = if k == 1 {
        let mut counts = vec![0usize; f.size()];
        for y in &ys {
            counts[y.value() as usize] += 1;
        }
        f.elements()
            .filter(|g| counts[g.value() as usize] >= n - tau)
            .map(|g| vec![g])
            .collect()
    } else {
        let t = n - tau;
        let problem = interpolate::Problem {
            field: f,
            xs: code.eval_points(),
            ys: &ys,
            multiplicity: multiplicity as usize,
            v: k - 1,
            budget: t * multiplicity as usize - 1,
        };
        let q = problem.solve(method)?;
        roots::find_roots(f, &q, k)
    };

    let mut scored: Vec<(usize, Vec<Gf>)> = Vec::new();
    for u in messages {
        let c = code.encode_message(&u)?;
        let d = hamming_distance(&c, received);
        if d <= tau {
            scored.push((d, c));
        }
    }
    scored.sort();
    scored.dedup();
    Ok(DecodeList {
        candidates: scored.into_iter().map(|(_, c)| c).collect(),
        radius_used: tau,
        multiplicity: if k == 1 { 1 } else { multiplicity },
    })
}

/// Exhaustive list decoding over all `q^k` messages; the reference the
/// interpolation decoder is checked against.
pub fn brute_force_list_decode(code: &RsCode, received: &[Gf], tau: usize) -> Result<DecodeList> {
    const LIMIT: u128 = 1 << 24;
    let (n, k) = (code.n(), code.k());
    if received.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            actual: received.len(),
        });
    }
    let q = code.field().size() as u128;
    let total = q.checked_pow(k as u32).unwrap_or(u128::MAX);
    if total > LIMIT {
        return Err(Error::TooLargeToEnumerate(total));
    }
    let mut scored = Vec::new();
    let mut message = vec![Gf::ZERO; k];
    for idx in 0..total {
        let mut v = idx;
        for s in message.iter_mut() {
            *s = Gf((v % q) as u16);
            v /= q;
        }
        let c = code.encode_message(&message)?;
        let d = hamming_distance(&c, received);
        if d <= tau {
            scored.push((d, c));
        }
    }
    scored.sort();
    Ok(DecodeList {
        candidates: scored.into_iter().map(|(_, c)| c).collect(),
        radius_used: tau,
        multiplicity: 0,
    })
}
