//! Reed-Solomon codes in parity-check and evaluation form.
//!
//! An `(n, k)` code over GF(q) with `n | q - 1` is fixed by an element `alpha`
//! of order `n` and an offset `b`. Its parity-check matrix has rows
//! `(alpha^{(b+j) i})_{i < n}` for `j = 0..n-k`, and the same code is generated
//! by evaluating degree-`< k` message polynomials at `alpha^i`, scaled by the
//! column multiplier `alpha^{i (1 - b)}`. For the default narrow-sense offset
//! `b = 1` every multiplier is one and codewords are plain evaluations.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::field::{Field, Gf};

/// `H x^T` for a word `x`; exactly `n - k` symbols.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Syndrome(pub Vec<Gf>);

impl Syndrome {
    pub fn values(&self) -> &[Gf] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|s| s.is_zero())
    }
}

/// Row-reduction of `H`, computed once per code.
#[derive(Debug)]
struct CosetSolver {
    // transform * H is in reduced row echelon form with identity columns at `pivots`.
    transform: Vec<Vec<Gf>>,
    pivots: Vec<usize>,
}

#[derive(Debug)]
pub struct RsCode {
    field: Field,
    n: usize,
    k: usize,
    b: u32,
    // log_x(alpha) = (q - 1) / n
    alpha_log: u64,
    eval_points: Vec<Gf>,
    multipliers: Vec<Gf>,
    solver: OnceLock<CosetSolver>,
}

impl Clone for RsCode {
    fn clone(&self) -> Self {
        RsCode {
            field: self.field.clone(),
            n: self.n,
            k: self.k,
            b: self.b,
            alpha_log: self.alpha_log,
            eval_points: self.eval_points.clone(),
            multipliers: self.multipliers.clone(),
            solver: OnceLock::new(),
        }
    }
}

impl RsCode {
    pub fn new(field: &Field, n: usize, k: usize, b: u32) -> Result<RsCode> {
        let q = field.size();
        if !(1 <= k && k <= n && n < q) {
            return Err(Error::InvalidCode(format!(
                "need 1 <= k <= n < q, got n={n} k={k} q={q}"
            )));
        }
        if field.order() % n != 0 {
            return Err(Error::NoOrderNElement { n, q });
        }
        let alpha_log = (field.order() / n) as u64;
        let eval_points = (0..n as u64).map(|i| field.exp(alpha_log * i)).collect();
        // alpha^{i(1-b)} = alpha^{i (n + 1 - b mod n)}
        let shift = (n as u64 + 1 - (b as u64 % n as u64)) % n as u64;
        let multipliers = (0..n as u64)
            .map(|i| field.exp(alpha_log * ((i * shift) % n as u64)))
            .collect();
        Ok(RsCode {
            field: field.clone(),
            n,
            k,
            b,
            alpha_log,
            eval_points,
            multipliers,
            solver: OnceLock::new(),
        })
    }

    /// Narrow-sense code, `b = 1`.
    pub fn narrow_sense(field: &Field, n: usize, k: usize) -> Result<RsCode> {
        RsCode::new(field, n, k, 1)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    /// Number of parity-check rows, `n - k`.
    pub fn redundancy(&self) -> usize {
        self.n - self.k
    }

    pub fn d_min(&self) -> usize {
        self.n - self.k + 1
    }

    pub fn alpha(&self) -> Gf {
        self.field.exp(self.alpha_log)
    }

    /// Evaluation points `1, alpha, ..., alpha^{n-1}`.
    pub fn eval_points(&self) -> &[Gf] {
        &self.eval_points
    }

    /// Per-position scale factors of the evaluation form; all one when `b = 1`.
    pub fn column_multipliers(&self) -> &[Gf] {
        &self.multipliers
    }

    fn h_entry(&self, row: usize, col: usize) -> Gf {
        let e = (col as u64 * (self.b as u64 + row as u64)) % self.n as u64;
        self.field.exp(self.alpha_log * e)
    }

    pub fn parity_check_matrix(&self) -> Vec<Vec<Gf>> {
        (0..self.redundancy())
            .map(|j| (0..self.n).map(|i| self.h_entry(j, i)).collect())
            .collect()
    }

    /// Rows `(v_i alpha_i^j)_i` for `j = 0..k`.
    pub fn generator_matrix(&self) -> Vec<Vec<Gf>> {
        let f = &self.field;
        (0..self.k)
            .map(|j| {
                self.eval_points
                    .iter()
                    .zip(&self.multipliers)
                    .map(|(&x, &v)| f.mul(v, f.pow(x, j as i64).expect("nonzero point")))
                    .collect()
            })
            .collect()
    }

    pub fn encode_message(&self, message: &[Gf]) -> Result<Vec<Gf>> {
        if message.len() != self.k {
            return Err(Error::LengthMismatch {
                expected: self.k,
                actual: message.len(),
            });
        }
        Ok(self
            .eval_points
            .iter()
            .zip(&self.multipliers)
            .map(|(&x, &v)| self.field.mul(v, self.field.poly_eval(message, x)))
            .collect())
    }

    pub fn syndrome(&self, word: &[Gf]) -> Result<Syndrome> {
        self.check_len(word)?;
        let f = &self.field;
        let s = (0..self.redundancy())
            .map(|j| {
                word.iter()
                    .enumerate()
                    .fold(Gf::ZERO, |acc, (i, &x)| acc + f.mul(x, self.h_entry(j, i)))
            })
            .collect();
        Ok(Syndrome(s))
    }

    pub fn is_codeword(&self, word: &[Gf]) -> Result<bool> {
        Ok(self.syndrome(word)?.is_zero())
    }

    /// A word `a` with `H a^T = s`. Free positions are zero and pivots are
    /// chosen leftmost-first, so the result depends only on `s`.
    pub fn coset_representative(&self, s: &Syndrome) -> Result<Vec<Gf>> {
        if s.len() != self.redundancy() {
            return Err(Error::LengthMismatch {
                expected: self.redundancy(),
                actual: s.len(),
            });
        }
        let solver = self.solver.get_or_init(|| self.row_reduce());
        let f = &self.field;
        let mut a = vec![Gf::ZERO; self.n];
        for (row, &col) in solver.transform.iter().zip(&solver.pivots) {
            a[col] = row
                .iter()
                .zip(s.values())
                .fold(Gf::ZERO, |acc, (&t, &v)| acc + f.mul(t, v));
        }
        Ok(a)
    }

    fn row_reduce(&self) -> CosetSolver {
        let f = &self.field;
        let r = self.redundancy();
        let n = self.n;
        // [H | I]
        let mut rows: Vec<Vec<Gf>> = (0..r)
            .map(|j| {
                let mut row: Vec<Gf> = (0..n).map(|i| self.h_entry(j, i)).collect();
                row.extend((0..r).map(|c| if c == j { Gf::ONE } else { Gf::ZERO }));
                row
            })
            .collect();
        let mut pivots = Vec::with_capacity(r);
        let mut top = 0;
        for col in 0..n {
            if top == r {
                break;
            }
            let Some(p) = (top..r).find(|&i| !rows[i][col].is_zero()) else {
                continue;
            };
            rows.swap(top, p);
            let inv = f.inv(rows[top][col]).expect("pivot is nonzero");
            for v in rows[top].iter_mut() {
                *v = f.mul(*v, inv);
            }
            let pivot_row = rows[top].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                let factor = row[col];
                if i == top || factor.is_zero() {
                    continue;
                }
                for (v, &p) in row.iter_mut().zip(&pivot_row) {
                    *v += f.mul(factor, p);
                }
            }
            pivots.push(col);
            top += 1;
        }
        // RS parity-check matrices have full row rank (Vandermonde minors).
        assert_eq!(pivots.len(), r, "parity-check matrix is rank deficient");
        let transform = rows.into_iter().map(|row| row[n..].to_vec()).collect();
        CosetSolver { transform, pivots }
    }

    fn check_len(&self, word: &[Gf]) -> Result<()> {
        if word.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                actual: word.len(),
            });
        }
        Ok(())
    }
}

/// Number of positions where two words differ.
pub fn hamming_distance(a: &[Gf], b: &[Gf]) -> usize {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

/// Symbol-wise sum, which is also the difference in characteristic 2.
pub fn add_words(a: &[Gf], b: &[Gf]) -> Vec<Gf> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(&x, &y)| x + y).collect()
}

pub fn weight(a: &[Gf]) -> usize {
    a.iter().filter(|x| !x.is_zero()).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf16() -> Field {
        Field::new(4, 0x13).unwrap()
    }

    #[test]
    fn construction_errors() {
        let f = gf16();
        assert!(matches!(
            RsCode::new(&f, 14, 2, 1),
            Err(Error::NoOrderNElement { n: 14, q: 16 })
        ));
        assert!(matches!(RsCode::new(&f, 15, 0, 1), Err(Error::InvalidCode(_))));
        assert!(matches!(RsCode::new(&f, 16, 3, 1), Err(Error::InvalidCode(_))));
        let code = RsCode::new(&f, 5, 2, 1).unwrap();
        assert_eq!(f.element_order(code.alpha()), Some(5));
    }

    #[test]
    fn rate_one_code() {
        let f = gf16();
        let code = RsCode::new(&f, 15, 15, 1).unwrap();
        assert!(code.parity_check_matrix().is_empty());
        let w: Vec<Gf> = (0..15).map(|i| Gf(i as u16)).collect();
        assert!(code.is_codeword(&w).unwrap());
        assert!(code.coset_representative(&Syndrome(vec![])).unwrap().iter().all(|x| x.is_zero()));
    }

    #[test]
    fn encoding_examples() {
        let f = gf16();
        let code = RsCode::narrow_sense(&f, 15, 2).unwrap();
        assert!(code.encode_message(&[Gf(0), Gf(0)]).unwrap().iter().all(|x| x.is_zero()));
        assert_eq!(code.encode_message(&[Gf(9), Gf(0)]).unwrap(), vec![Gf(9); 15]);
        assert_eq!(
            code.encode_message(&[Gf(1)]),
            Err(Error::LengthMismatch { expected: 2, actual: 1 })
        );
        assert!(code.syndrome(&[Gf(1); 3]).is_err());
    }

    #[test]
    fn weight_one_syndrome_matches_formula() {
        let f = gf16();
        let code = RsCode::narrow_sense(&f, 15, 2).unwrap();
        let alpha = code.alpha();
        for i in 0..15 {
            let mut e = vec![Gf::ZERO; 15];
            e[i] = Gf::ONE;
            let s = code.syndrome(&e).unwrap();
            for (j, &sj) in s.values().iter().enumerate() {
                assert_eq!(sj, f.pow(alpha, (i * (1 + j)) as i64).unwrap());
            }
        }
    }

    #[test]
    fn generator_rows_are_codewords_for_any_offset() {
        let f = gf16();
        for b in [0u32, 1, 2, 7, 14, 20] {
            let code = RsCode::new(&f, 15, 4, b).unwrap();
            for row in code.generator_matrix() {
                assert!(code.is_codeword(&row).unwrap(), "b = {b}");
            }
        }
    }

    #[test]
    fn zero_syndrome_gives_zero_representative() {
        let f = gf16();
        let code = RsCode::narrow_sense(&f, 15, 11).unwrap();
        let a = code.coset_representative(&Syndrome(vec![Gf::ZERO; 4])).unwrap();
        assert_eq!(weight(&a), 0);
        assert!(code.coset_representative(&Syndrome(vec![Gf::ZERO; 3])).is_err());
    }

    #[test]
    fn representative_uses_leftmost_pivots() {
        let f = gf16();
        let code = RsCode::narrow_sense(&f, 15, 11).unwrap();
        let s = Syndrome(vec![Gf(3), Gf(9), Gf(1), Gf(14)]);
        let a = code.coset_representative(&s).unwrap();
        assert_eq!(code.syndrome(&a).unwrap(), s);
        assert!(a[4..].iter().all(|x| x.is_zero()));
    }

    #[test]
    fn coset_partition_on_rs_7_5() {
        // Equal syndromes iff the difference is a codeword, over all of GF(8)^7
        // paired against a fixed set of reference words.
        let f = Field::with_degree(3).unwrap();
        let code = RsCode::narrow_sense(&f, 7, 5).unwrap();
        let refs: Vec<Vec<Gf>> = vec![
            vec![Gf(0); 7],
            vec![Gf(1), Gf(2), Gf(3), Gf(4), Gf(5), Gf(6), Gf(7)],
            vec![Gf(7), Gf(0), Gf(7), Gf(0), Gf(7), Gf(0), Gf(1)],
        ];
        let ref_syn: Vec<Syndrome> = refs.iter().map(|r| code.syndrome(r).unwrap()).collect();
        let mut word = vec![Gf::ZERO; 7];
        for idx in 0..8usize.pow(7) {
            let mut v = idx;
            for w in word.iter_mut() {
                *w = Gf((v % 8) as u16);
                v /= 8;
            }
            let s = code.syndrome(&word).unwrap();
            for (r, rs) in refs.iter().zip(&ref_syn) {
                let diff_is_codeword = code.is_codeword(&add_words(&word, r)).unwrap();
                assert_eq!(s == *rs, diff_is_codeword);
            }
        }
    }
}
