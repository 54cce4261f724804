use crate::field::{Field, Gf};

/// Bivariate polynomial `sum_j c_j(x) y^j`; `rows[j]` holds `c_j` with
/// ascending powers of `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiPoly {
    pub rows: Vec<Vec<Gf>>,
}

/// Binomial coefficient modulo 2 (Lucas): `C(n, r)` is odd iff `r` is a
/// bit-subset of `n`.
#[inline]
pub fn binom_odd(n: usize, r: usize) -> bool {
    n & r == r
}

impl BiPoly {
    /// The monomial `y^j`.
    pub fn y_pow(j: usize) -> BiPoly {
        let mut rows = vec![Vec::new(); j + 1];
        rows[j] = vec![Gf::ONE];
        BiPoly { rows }
    }

    #[cfg(test)]
    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.iter().all(|c| c.is_zero()))
    }

    /// Drops trailing zero coefficients and rows.
    pub fn trim(&mut self) {
        for r in self.rows.iter_mut() {
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        while self.rows.last().is_some_and(|r| r.is_empty()) {
            self.rows.pop();
        }
    }

    /// Leading monomial under the `(1, v)`-weighted order with ties broken by
    /// `y`-degree: returns `(weighted degree, y-degree)`, or `None` for zero.
    pub fn leading(&self, v: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for (j, r) in self.rows.iter().enumerate() {
            if let Some(i) = r.iter().rposition(|c| !c.is_zero()) {
                let key = (i + v * j, j);
                if best.is_none_or(|b| key > b) {
                    best = Some(key);
                }
            }
        }
        best
    }

    #[cfg(test)]
    /// Hasse derivative `D_{r,s} Q` evaluated at `(a, b)`, given the powers
    /// `a_pow[e] = a^e` and `b_pow[e] = b^e` (long enough for every term).
    pub fn hasse_at(&self, f: &Field, r: usize, s: usize, a_pow: &[Gf], b_pow: &[Gf]) -> Gf {
        let mut acc = Gf::ZERO;
        for (j, row) in self.rows.iter().enumerate().skip(s) {
            if !binom_odd(j, s) || row.len() <= r {
                continue;
            }
            let mut inner = Gf::ZERO;
            for (i, &c) in row.iter().enumerate().skip(r) {
                if !c.is_zero() && binom_odd(i, r) {
                    inner += f.mul(c, a_pow[i - r]);
                }
            }
            acc += f.mul(inner, b_pow[j - s]);
        }
        acc
    }

    /// `self <- self + c * other`.
    pub fn add_scaled(&mut self, f: &Field, other: &BiPoly, c: Gf) {
        if self.rows.len() < other.rows.len() {
            self.rows.resize(other.rows.len(), Vec::new());
        }
        for (row, orow) in self.rows.iter_mut().zip(&other.rows) {
            if row.len() < orow.len() {
                row.resize(orow.len(), Gf::ZERO);
            }
            f.axpy(row, orow, c);
        }
        self.trim();
    }

    /// `self <- (x + a) * self`.
    pub fn mul_x_plus(&mut self, f: &Field, a: Gf) {
        for row in self.rows.iter_mut() {
            if row.is_empty() {
                continue;
            }
            row.push(Gf::ZERO);
            for i in (0..row.len()).rev() {
                let lower = if i > 0 { row[i - 1] } else { Gf::ZERO };
                row[i] = f.mul(row[i], a) + lower;
            }
        }
        self.trim();
    }

    /// Largest `mu` with `x^mu | self` (zero polynomial gives `usize::MAX`).
    pub fn x_valuation(&self) -> usize {
        self.rows
            .iter()
            .filter_map(|r| r.iter().position(|c| !c.is_zero()))
            .min()
            .unwrap_or(usize::MAX)
    }

    /// Divides by the largest power of `x` dividing `self`.
    pub fn strip_x(&mut self) {
        let mu = self.x_valuation();
        if mu == 0 || mu == usize::MAX {
            return;
        }
        for r in self.rows.iter_mut() {
            if r.len() >= mu {
                r.drain(..mu);
            } else {
                r.clear();
            }
        }
        self.trim();
    }

    /// Coefficients of `Q(0, y)` in ascending powers of `y`.
    pub fn at_x_zero(&self) -> Vec<Gf> {
        self.rows
            .iter()
            .map(|r| r.first().copied().unwrap_or(Gf::ZERO))
            .collect()
    }

    /// `Q(x, x y + g)`.
    pub fn substitute_shift(&self, f: &Field, g: Gf) -> BiPoly {
        let deg_y = self.rows.len();
        let mut g_pow = vec![Gf::ONE; deg_y.max(1)];
        for e in 1..deg_y {
            g_pow[e] = f.mul(g_pow[e - 1], g);
        }
        let mut rows = Vec::with_capacity(deg_y);
        for l in 0..deg_y {
            // sum_{j >= l} C(j, l) g^{j-l} c_j(x), then times x^l
            let mut row: Vec<Gf> = vec![Gf::ZERO; l];
            for j in l..deg_y {
                if !binom_odd(j, l) {
                    continue;
                }
                let src = &self.rows[j];
                let w = g_pow[j - l];
                if w.is_zero() || src.is_empty() {
                    continue;
                }
                if row.len() < l + src.len() {
                    row.resize(l + src.len(), Gf::ZERO);
                }
                for (c, &s) in row[l..].iter_mut().zip(src) {
                    *c += f.mul(s, w);
                }
            }
            rows.push(row);
        }
        let mut out = BiPoly { rows };
        out.trim();
        out
    }

    #[cfg(test)]
    /// `Q(x, u(x))` as a univariate polynomial in `x`.
    pub fn eval_y_poly(&self, f: &Field, u: &[Gf]) -> Vec<Gf> {
        let mut acc: Vec<Gf> = Vec::new();
        for row in self.rows.iter().rev() {
            // acc <- acc * u + row
            let mut next = vec![Gf::ZERO; (acc.len() + u.len()).max(row.len())];
            for (i, &a) in acc.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (k, &b) in u.iter().enumerate() {
                    next[i + k] += f.mul(a, b);
                }
            }
            for (i, &c) in row.iter().enumerate() {
                next[i] += c;
            }
            while next.last().is_some_and(|c| c.is_zero()) {
                next.pop();
            }
            acc = next;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lucas_parity() {
        let pascal = |n: usize, r: usize| -> u64 {
            (0..r).fold(1u64, |acc, i| acc * (n - i) as u64 / (i as u64 + 1))
        };
        for n in 0..20 {
            for r in 0..=n {
                assert_eq!(binom_odd(n, r), pascal(n, r) % 2 == 1, "C({n},{r})");
            }
        }
    }

    #[test]
    fn shift_substitution_preserves_root() {
        let f = Field::with_degree(4).unwrap();
        // Q = (y - u(x)) * (y + 1) with u = 3 + 5x
        let u = [Gf(3), Gf(5)];
        let factor = BiPoly {
            rows: vec![vec![Gf(3), Gf(5)], vec![Gf::ONE]],
        };
        // multiply by (y + 1)
        let mut prod = BiPoly { rows: vec![Vec::new(); 3] };
        for (j, row) in factor.rows.iter().enumerate() {
            for (i, &c) in row.iter().enumerate() {
                for (dj, w) in [(0usize, Gf::ONE), (1, Gf::ONE)] {
                    let r = &mut prod.rows[j + dj];
                    if r.len() <= i {
                        r.resize(i + 1, Gf::ZERO);
                    }
                    r[i] += f.mul(c, w);
                }
            }
        }
        assert!(prod.eval_y_poly(&f, &u).is_empty());
        let mut shifted = prod.substitute_shift(&f, u[0]);
        shifted.strip_x();
        // next coefficient of u is a root of Q'(0, y)
        let h = shifted.at_x_zero();
        assert!(f.poly_eval(&h, u[1]).is_zero());
    }
}
