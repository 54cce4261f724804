//! Construction of the interpolation polynomial `Q(x, y)`: nonzero, vanishing
//! with multiplicity `m` at every point, with `(1, k-1)`-weighted degree at
//! most the budget `D`.

use super::bipoly::{binom_odd, BiPoly};
use crate::error::{Error, Result};
use crate::field::{Field, Gf};

/// Interpolation method.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Interpolator {
    /// Koetter's iterative update over a group of `L + 1` polynomials.
    #[default]
    Koetter,
    /// Dense Gaussian elimination on the multiplicity constraints. Cubic in
    /// the number of constraints; only practical for small codes.
    Linear,
}

pub(crate) struct Problem<'a> {
    pub field: &'a Field,
    pub xs: &'a [Gf],
    pub ys: &'a [Gf],
    pub multiplicity: usize,
    /// Weight of `y`, i.e. `k - 1` (at least one).
    pub v: usize,
    /// Weighted-degree budget `D`.
    pub budget: usize,
}

impl Problem<'_> {
    fn max_y_degree(&self) -> usize {
        self.budget / self.v
    }

    fn powers(&self, base: Gf, len: usize) -> Vec<Gf> {
        let mut p = vec![Gf::ONE; len.max(1)];
        for e in 1..len {
            p[e] = self.field.mul(p[e - 1], base);
        }
        p
    }

    pub fn solve(&self, method: Interpolator) -> Result<BiPoly> {
        let q = match method {
            Interpolator::Koetter => self.koetter(),
            Interpolator::Linear => self.linear()?,
        };
        match q.leading(self.v) {
            Some((w, _)) if w <= self.budget => Ok(q),
            Some((w, _)) => Err(Error::InterpolationFailure(format!(
                "minimal weighted degree {w} exceeds budget {}",
                self.budget
            ))),
            None => Err(Error::InterpolationFailure("zero polynomial".into())),
        }
    }

    /// Coefficients of `X^r Y^s`, `r + s < m`, of `Q(X + a, Y + b)`, i.e.
    /// the Hasse derivatives `D_{r,s} Q(a, b)`, stored at `r * m + s`.
    fn taylor(&self, q: &BiPoly, a: Gf, b_pow: &[Gf]) -> Vec<Gf> {
        let f = self.field;
        let m = self.multiplicity;
        let mut out = vec![Gf::ZERO; m * m];
        let mut scratch: Vec<Gf> = Vec::new();
        for (j, row) in q.rows.iter().enumerate() {
            if row.is_empty() {
                continue;
            }
            // repeated synthetic division by (x + a) yields D_r q_j(a)
            scratch.clear();
            scratch.extend_from_slice(row);
            for r in 0..m.min(row.len()) {
                let mut carry = Gf::ZERO;
                for c in scratch.iter_mut().rev() {
                    let next = *c + f.mul(carry, a);
                    *c = carry;
                    carry = next;
                }
                // quotient now in place, with a zero top coefficient
                scratch.pop();
                let d = carry;
                if d.is_zero() {
                    continue;
                }
                for s in 0..(m - r).min(j + 1) {
                    if binom_odd(j, s) {
                        out[r * m + s] += f.mul(d, b_pow[j - s]);
                    }
                }
            }
        }
        out
    }

    fn koetter(&self) -> BiPoly {
        let f = self.field;
        let m = self.multiplicity;
        let l = self.max_y_degree();
        let mut group: Vec<BiPoly> = (0..=l).map(BiPoly::y_pow).collect();
        let mut keys: Vec<(usize, usize)> = group.iter().map(|p| p.leading(self.v).unwrap()).collect();
        for (&a, &b) in self.xs.iter().zip(self.ys) {
            let b_pow = self.powers(b, l + 1);
            let mut tables: Vec<Vec<Gf>> = group.iter().map(|p| self.taylor(p, a, &b_pow)).collect();
            // (r - 1, s) precedes (r, s) so that (x - a) Q keeps every
            // constraint already imposed at this point.
            for s in 0..m {
                for r in 0..m - s {
                    let idx = r * m + s;
                    let star = (0..group.len())
                        .filter(|&j| !tables[j][idx].is_zero())
                        .min_by_key(|&j| keys[j]);
                    let Some(star) = star else { continue };
                    let inv = f.inv(tables[star][idx]).expect("nonzero discrepancy");
                    let pivot = group[star].clone();
                    let pivot_table = tables[star].clone();
                    for j in 0..group.len() {
                        let d = tables[j][idx];
                        if j == star || d.is_zero() {
                            continue;
                        }
                        let lambda = f.mul(d, inv);
                        group[j].add_scaled(f, &pivot, lambda);
                        f.axpy(&mut tables[j], &pivot_table, lambda);
                    }
                    group[star].mul_x_plus(f, a);
                    keys[star].0 += 1;
                    // x + a is X in the shifted coordinates
                    let t = &mut tables[star];
                    for rr in (0..m).rev() {
                        for ss in 0..m - rr {
                            t[rr * m + ss] = if rr == 0 { Gf::ZERO } else { t[(rr - 1) * m + ss] };
                        }
                    }
                }
            }
        }
        let best = (0..group.len()).min_by_key(|&j| keys[j]).unwrap();
        group.swap_remove(best)
    }

    /// Monomials `x^i y^j` with `i + v j <= budget`, ordered by weighted degree.
    fn monomials(&self) -> Vec<(usize, usize)> {
        let mut mons: Vec<(usize, usize)> = (0..=self.max_y_degree())
            .flat_map(|j| (0..=self.budget - self.v * j).map(move |i| (i, j)))
            .collect();
        mons.sort_by_key(|&(i, j)| (i + self.v * j, j));
        mons
    }

    fn linear(&self) -> Result<BiPoly> {
        let f = self.field;
        let m = self.multiplicity;
        let mons = self.monomials();
        let cols = mons.len();
        let l = self.max_y_degree();
        let mut rows: Vec<Vec<Gf>> = Vec::new();
        for (&a, &b) in self.xs.iter().zip(self.ys) {
            let a_pow = self.powers(a, self.budget + 1);
            let b_pow = self.powers(b, l + 1);
            for s in 0..m {
                for r in 0..m - s {
                    let row = mons
                        .iter()
                        .map(|&(i, j)| {
                            if i >= r && j >= s && binom_odd(i, r) && binom_odd(j, s) {
                                f.mul(a_pow[i - r], b_pow[j - s])
                            } else {
                                Gf::ZERO
                            }
                        })
                        .collect();
                    rows.push(row);
                }
            }
        }
        // Reduced row echelon form; the first free column parametrizes the
        // kernel vector we return.
        let mut pivot_of_col = vec![None; cols];
        let mut top = 0;
        for col in 0..cols {
            let Some(p) = (top..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
                continue;
            };
            rows.swap(top, p);
            let inv = f.inv(rows[top][col])?;
            for v in rows[top].iter_mut() {
                *v = f.mul(*v, inv);
            }
            let prow = rows[top].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                let factor = row[col];
                if i != top && !factor.is_zero() {
                    for (v, &pv) in row.iter_mut().zip(&prow) {
                        *v += f.mul(factor, pv);
                    }
                }
            }
            pivot_of_col[col] = Some(top);
            top += 1;
            if top == rows.len() {
                break;
            }
        }
        let free = (0..cols)
            .find(|&c| pivot_of_col[c].is_none())
            .ok_or_else(|| Error::InterpolationFailure("constraint system has full column rank".into()))?;
        let mut sol = vec![Gf::ZERO; cols];
        sol[free] = Gf::ONE;
        for (c, p) in pivot_of_col.iter().enumerate() {
            if let Some(r) = *p {
                // pivot + coefficient * free = 0, minus = plus
                sol[c] = rows[r][free];
            }
        }
        let mut q = BiPoly {
            rows: vec![Vec::new(); l + 1],
        };
        for (&(i, j), &c) in mons.iter().zip(&sol) {
            if c.is_zero() {
                continue;
            }
            let row = &mut q.rows[j];
            if row.len() <= i {
                row.resize(i + 1, Gf::ZERO);
            }
            row[i] = c;
        }
        q.trim();
        Ok(q)
    }
}
