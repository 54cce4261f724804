//! Roth-Ruckenstein extraction of the `y`-roots `u(x)`, `deg u < k`, of
//! `Q(x, y)`.

use super::bipoly::BiPoly;
use crate::field::{Field, Gf};

/// Roots of a univariate polynomial by exhaustive evaluation.
fn univariate_roots(f: &Field, coeffs: &[Gf]) -> Vec<Gf> {
    if coeffs.iter().all(|c| c.is_zero()) {
        // Only reachable when Q(x, y) was identically zero.
        return Vec::new();
    }
    if coeffs.len() == 2 {
        // c0 + c1 y
        return f.div(coeffs[0], coeffs[1]).into_iter().collect();
    }
    f.elements().filter(|&g| f.poly_eval(coeffs, g).is_zero()).collect()
}

/// All coefficient vectors `(u_0, ..., u_{k-1})` reached by the recursion.
/// The result is a superset of the true roots; callers verify candidates.
pub(crate) fn find_roots(f: &Field, q: &BiPoly, k: usize) -> Vec<Vec<Gf>> {
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(k);
    let mut start = q.clone();
    start.strip_x();
    recurse(f, start, k, &mut prefix, &mut out);
    out
}

fn recurse(f: &Field, q: BiPoly, k: usize, prefix: &mut Vec<Gf>, out: &mut Vec<Vec<Gf>>) {
    let h = q.at_x_zero();
    for g in univariate_roots(f, &h) {
        prefix.push(g);
        if prefix.len() == k {
            out.push(prefix.clone());
        } else {
            let mut next = q.substitute_shift(f, g);
            next.strip_x();
            recurse(f, next, k, prefix, out);
        }
        prefix.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn product_of_linear_factors(f: &Field, roots: &[Vec<Gf>]) -> BiPoly {
        // prod_i (y - u_i(x))
        let mut q = BiPoly { rows: vec![vec![Gf::ONE]] };
        for u in roots {
            let deg = q.rows.len();
            let mut next = BiPoly { rows: vec![Vec::new(); deg + 1] };
            for (j, row) in q.rows.iter().enumerate() {
                // times y
                let r = &mut next.rows[j + 1];
                if r.len() < row.len() {
                    r.resize(row.len(), Gf::ZERO);
                }
                for (c, &a) in r.iter_mut().zip(row) {
                    *c += a;
                }
                // times u(x)
                let r = &mut next.rows[j];
                if r.len() < row.len() + u.len() {
                    r.resize(row.len() + u.len(), Gf::ZERO);
                }
                for (i, &a) in row.iter().enumerate() {
                    for (t, &b) in u.iter().enumerate() {
                        r[i + t] += f.mul(a, b);
                    }
                }
            }
            next.trim();
            q = next;
        }
        q
    }

    #[test]
    fn recovers_planted_roots() {
        let f = Field::with_degree(4).unwrap();
        let roots = vec![
            vec![Gf(3), Gf(5), Gf(0)],
            vec![Gf(3), Gf(7), Gf(1)],
            vec![Gf(0), Gf(0), Gf(9)],
        ];
        let q = product_of_linear_factors(&f, &roots);
        let mut found = find_roots(&f, &q, 3);
        found.sort();
        found.dedup();
        let mut want = roots.clone();
        want.sort();
        assert_eq!(found, want);
    }
}
