//! Determinants, minor ideals and ranks of polynomial matrices.

use crate::algebra::polynomial::Polynomial;
use crate::algebra::ring::RingRef;
use crate::groebner::GroebnerBasis;
use crate::error::Result;

use super::PolyMatrix;

/// Determinant of a square polynomial matrix by expansion over column
/// subsets (division free).
pub fn determinant(ring: &RingRef, m: &[Vec<Polynomial>]) -> Polynomial {
    let n = m.len();
    if n == 0 {
        return Polynomial::one(ring);
    }
    assert!(n <= 20, "determinant too large for subset expansion");
    let size = 1usize << n;
    let mut dp: Vec<Option<Polynomial>> = vec![None; size];
    dp[0] = Some(Polynomial::one(ring));
    // dp[S] = determinant of rows 0..|S| restricted to columns S
    for mask in 1..size {
        let row = mask.count_ones() as usize - 1;
        let mut acc = Polynomial::zero(ring);
        let mut any = false;
        for c in 0..n {
            if mask & (1 << c) == 0 {
                continue;
            }
            let a = &m[row][c];
            if a.is_zero() {
                continue;
            }
            let Some(sub) = &dp[mask & !(1 << c)] else {
                continue;
            };
            if sub.is_zero() {
                continue;
            }
            let above = (mask >> (c + 1)).count_ones();
            let t = a * sub;
            acc = if above % 2 == 0 { &acc + &t } else { &acc - &t };
            any = true;
        }
        if any {
            dp[mask] = Some(acc);
        }
    }
    dp[size - 1].clone().unwrap_or_else(|| Polynomial::zero(ring))
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// All nonzero `r × r` minors, without duplicates (up to sign), in
/// enumeration order.
pub fn minors(m: &PolyMatrix, r: usize) -> Vec<Polynomial> {
    let ring = m.ring();
    if r == 0 {
        return vec![Polynomial::one(ring)];
    }
    if r > m.rows() || r > m.cols() {
        return Vec::new();
    }
    let mut out: Vec<Polynomial> = Vec::new();
    let col_sets = combinations(m.cols(), r);
    for rows in combinations(m.rows(), r) {
        for cols in &col_sets {
            let sub: Vec<Vec<Polynomial>> = rows
                .iter()
                .map(|&i| cols.iter().map(|&j| m.get(i, j).clone()).collect())
                .collect();
            let d = determinant(ring, &sub);
            if d.is_zero() {
                continue;
            }
            let d = d.monic();
            if !out.contains(&d) {
                out.push(d);
            }
        }
    }
    out
}

/// Reduced Gröbner basis of the ideal `I_r(m)` of `r × r` minors; `I_0` is
/// the unit ideal.
pub fn minor_ideal(m: &PolyMatrix, r: usize) -> Result<GroebnerBasis> {
    GroebnerBasis::ideal(m.ring(), &minors(m, r))
}

/// Rank over the fraction field, by fraction-free (Bareiss) elimination.
pub fn rank(m: &PolyMatrix) -> usize {
    let mut a: Vec<Vec<Polynomial>> = m.entries().to_vec();
    let (rows, cols) = (m.rows(), m.cols());
    let mut prev = Polynomial::one(m.ring());
    let mut r = 0;
    let mut col_perm: Vec<usize> = (0..cols).collect();
    while r < rows && r < cols {
        // pivot search over the remaining block
        let mut found = None;
        'search: for j in r..cols {
            for i in r..rows {
                if !a[i][col_perm[j]].is_zero() {
                    found = Some((i, j));
                    break 'search;
                }
            }
        }
        let Some((pi, pj)) = found else { break };
        a.swap(r, pi);
        col_perm.swap(r, pj);
        let pc = col_perm[r];
        let pivot = a[r][pc].clone();
        for i in r + 1..rows {
            let factor = a[i][pc].clone();
            for jj in r + 1..cols {
                let j = col_perm[jj];
                let num = &(&pivot * &a[i][j]) - &(&factor * &a[r][j]);
                a[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            a[i][pc] = Polynomial::zero(m.ring());
        }
        prev = pivot;
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ring::Ring;

    fn mat(r: &RingRef, rows: &[&[&str]]) -> PolyMatrix {
        let entries: Vec<Vec<Polynomial>> = rows
            .iter()
            .map(|row| row.iter().map(|s| Polynomial::parse(r, s).unwrap()).collect())
            .collect();
        PolyMatrix::new(r, rows.len(), rows[0].len(), entries).unwrap()
    }

    #[test]
    fn determinant_small() {
        let r = Ring::grevlex(&["x", "y"]);
        let m = mat(&r, &[&["x", "y"], &["1", "x"]]);
        assert_eq!(determinant(&r, m.entries()).to_string(), "x^2 - y");
        let m3 = mat(&r, &[&["1", "2", "3"], &["4", "5", "6"], &["7", "8", "10"]]);
        assert_eq!(determinant(&r, m3.entries()).to_string(), "-3");
    }

    #[test]
    fn ranks() {
        let r = Ring::grevlex(&["x", "y"]);
        assert_eq!(rank(&mat(&r, &[&["x", "y"], &["x^2", "x*y"]])), 1);
        assert_eq!(rank(&mat(&r, &[&["x", "y"], &["y", "x"]])), 2);
        assert_eq!(rank(&mat(&r, &[&["0", "0"]])), 0);
        assert_eq!(rank(&mat(&r, &[&["0", "x"], &["0", "y"], &["1", "0"]])), 2);
    }

    #[test]
    fn minor_ideals() {
        let r = Ring::grevlex(&["x", "y"]);
        let m = mat(&r, &[&["y^2"], &["-x*y"]]);
        let i1 = minor_ideal(&m, 1).unwrap();
        assert_eq!(i1.codim(), 1);
        assert!(minor_ideal(&m, 0).unwrap().is_unit_ideal());
        assert!(minors(&m, 2).is_empty());
    }
}
