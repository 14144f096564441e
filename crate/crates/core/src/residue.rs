//! Zero-dimensional complete intersections: the quotient algebra, Hefer
//! matrices and the Bezoutian, the residue functional read off the
//! Bezoutian's dual bases, and the residue pairing.

use num_traits::{One, Zero};

use crate::algebra::linalg::{determinant as det_q, solve};
use crate::algebra::monomial::{Monomial, MonomialOrder};
use crate::algebra::polynomial::{rat, Polynomial, Rational};
use crate::algebra::ring::{check_same, Ring, RingRef};
use crate::error::{Error, Result};
use crate::groebner::GroebnerBasis;
use crate::resolution::minors::determinant;

/// `k[z]/J` with the standard-monomial basis of a reduced Gröbner basis,
/// listed in ascending monomial order.
#[derive(Clone, Debug)]
pub struct QuotientAlgebra {
    ring: RingRef,
    gens: Vec<Polynomial>,
    gb: GroebnerBasis,
    basis: Vec<Monomial>,
}

impl QuotientAlgebra {
    pub fn new(gens: &[Polynomial]) -> Result<Self> {
        let ring = gens
            .first()
            .ok_or(Error::NotZeroDimensional)?
            .ring()
            .clone();
        for g in gens {
            check_same(&ring, g.ring())?;
        }
        let gb = GroebnerBasis::ideal(&ring, gens)?;
        let basis = gb.standard_monomials().ok_or(Error::NotZeroDimensional)?;
        Ok(QuotientAlgebra {
            ring,
            gens: gens.to_vec(),
            gb,
            basis,
        })
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn groebner_basis(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn basis_polynomials(&self) -> Vec<Polynomial> {
        self.basis
            .iter()
            .map(|m| Polynomial::monomial(&self.ring, m.clone(), rat(1)))
            .collect()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn normal_form(&self, phi: &Polynomial) -> Result<Polynomial> {
        self.gb.reduce_poly(phi)
    }

    /// Coordinates of `φ mod J` in the standard basis.
    pub fn coordinates(&self, phi: &Polynomial) -> Result<Vec<Rational>> {
        let nf = self.normal_form(phi)?;
        Ok(self.basis.iter().map(|m| nf.coefficient(m)).collect())
    }

    /// Matrix of multiplication by `φ`; column `j` holds the coordinates of
    /// `φ·b_j`.
    pub fn multiplication_matrix(&self, phi: &Polynomial) -> Result<Vec<Vec<Rational>>> {
        let d = self.dim();
        let mut m = vec![vec![Rational::zero(); d]; d];
        for (j, b) in self.basis_polynomials().iter().enumerate() {
            for (i, c) in self.coordinates(&(phi * b))?.into_iter().enumerate() {
                m[i][j] = c;
            }
        }
        Ok(m)
    }

    pub fn trace(&self, phi: &Polynomial) -> Result<Rational> {
        let m = self.multiplication_matrix(phi)?;
        Ok((0..m.len()).fold(Rational::zero(), |acc, i| acc + &m[i][i]))
    }
}

fn require_ci(gens: &[Polynomial]) -> Result<RingRef> {
    let ring = gens
        .first()
        .ok_or_else(|| Error::NotCompleteIntersection("no generators".into()))?
        .ring()
        .clone();
    if gens.len() != ring.nvars() {
        return Err(Error::NotCompleteIntersection(format!(
            "{} generators in {} variables",
            gens.len(),
            ring.nvars()
        )));
    }
    Ok(ring)
}

/// `∂f^k/∂z_j`, determinant.
pub fn jacobian_determinant(gens: &[Polynomial]) -> Result<Polynomial> {
    let ring = require_ci(gens)?;
    let n = ring.nvars();
    let rows: Vec<Vec<Polynomial>> = (0..n)
        .map(|k| (0..n).map(|j| gens[k].derivative(j, 1)).collect())
        .collect();
    Ok(determinant(&ring, &rows))
}

/// `k[z, ζ]` with the `z` block first; `ζ_i` is named `z_i'`.
#[derive(Clone, Debug)]
pub struct DoubledRing {
    pub ring: RingRef,
    pub n: usize,
}

impl DoubledRing {
    pub fn new(base: &RingRef) -> Self {
        let n = base.nvars();
        let mut names: Vec<String> = base.vars().to_vec();
        for v in base.vars() {
            let mut name = format!("{v}'");
            while names.contains(&name) {
                name.push('\'');
            }
            names.push(name);
        }
        DoubledRing {
            ring: Ring::new(names, MonomialOrder::Grevlex),
            n,
        }
    }

    pub fn z(&self, p: &Polynomial) -> Polynomial {
        let map: Vec<Option<usize>> = (0..self.n).map(Some).collect();
        p.map_into(&self.ring, &map)
    }

    pub fn zeta(&self, p: &Polynomial) -> Polynomial {
        let map: Vec<Option<usize>> = (0..self.n).map(|i| Some(self.n + i)).collect();
        p.map_into(&self.ring, &map)
    }

    /// Inverse of [`DoubledRing::zeta`] on polynomials in `ζ` only.
    pub fn from_zeta(&self, p: &Polynomial, base: &RingRef) -> Polynomial {
        let map: Vec<Option<usize>> = (0..2 * self.n)
            .map(|i| if i >= self.n { Some(i - self.n) } else { None })
            .collect();
        p.map_into(base, &map)
    }
}

/// `h_{jk}(ζ, z)` with `Σ_j h_{jk} (ζ_j - z_j) = f^k(z) - f^k(ζ)`.
#[derive(Clone, Debug)]
pub struct HeferMatrix {
    pub doubled: DoubledRing,
    /// Row `j` (variable), column `k` (generator).
    pub entries: Vec<Vec<Polynomial>>,
    /// Order in which variables are switched from `ζ` to `z`.
    pub order: Vec<usize>,
}

impl HeferMatrix {
    /// Re-expands `Σ_j h_{jk} (ζ_j - z_j)` and compares with `f^k(z) - f^k(ζ)`.
    pub fn verify(&self, gens: &[Polynomial]) -> bool {
        let d = &self.doubled;
        let n = d.n;
        gens.iter().enumerate().all(|(k, f)| {
            let mut acc = Polynomial::zero(&d.ring);
            for j in 0..n {
                let diff = &Polynomial::var(&d.ring, n + j) - &Polynomial::var(&d.ring, j);
                acc = &acc + &(&self.entries[j][k] * &diff);
            }
            acc == &d.z(f) - &d.zeta(f)
        })
    }

    pub fn determinant(&self) -> Polynomial {
        determinant(&self.doubled.ring, &self.entries)
    }
}

pub fn hefer_matrix(gens: &[Polynomial]) -> Result<HeferMatrix> {
    let n = require_ci(gens)?.nvars();
    hefer_matrix_with_order(gens, &(0..n).collect::<Vec<_>>())
}

/// Telescoping `f(z) - f(ζ) = Σ_t [f(w_t) - f(w_{t-1})]` where `w_t` has the
/// first `t` variables of `order` switched to `z`.
pub fn hefer_matrix_with_order(gens: &[Polynomial], order: &[usize]) -> Result<HeferMatrix> {
    let ring = require_ci(gens)?;
    let n = ring.nvars();
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if sorted != (0..n).collect::<Vec<_>>() {
        return Err(Error::Internal("telescoping order is not a permutation".into()));
    }
    let d = DoubledRing::new(&ring);
    let mut entries = vec![vec![Polynomial::zero(&d.ring); n]; n];
    for (k, f) in gens.iter().enumerate() {
        let mut map: Vec<Option<usize>> = (0..n).map(|i| Some(n + i)).collect();
        let mut prev = f.map_into(&d.ring, &map);
        for &j in order {
            map[j] = Some(j);
            let next = f.map_into(&d.ring, &map);
            let step = &next - &prev;
            let lin = &Polynomial::var(&d.ring, j) - &Polynomial::var(&d.ring, n + j);
            let q = step.div_exact(&lin).ok_or(Error::InexactDivision)?;
            entries[j][k] = -&q;
            prev = next;
        }
    }
    let h = HeferMatrix {
        doubled: d,
        entries,
        order: order.to_vec(),
    };
    if !h.verify(gens) {
        return Err(Error::Internal("Hefer identity fails".into()));
    }
    Ok(h)
}

/// The residue functional of a zero-dimensional complete intersection,
/// normalized so that `res(det ∂f/∂z) = dim k[z]/J`.
#[derive(Clone, Debug)]
pub struct ResidueFunctional {
    pub algebra: QuotientAlgebra,
    pub hefer: HeferMatrix,
    /// `±det(h_{jk})` after normalization, in the doubled ring.
    pub bezoutian: Polynomial,
    /// `+1` or `-1`: the factor applied to `det(h_{jk})`.
    pub sign: i32,
    /// `a_i(ζ)`, moved to the `z` variables; paired with `basis()[i]`.
    pub dual_basis: Vec<Polynomial>,
    /// `res(b_i)` for the standard monomials `b_i`.
    pub values: Vec<Rational>,
}

/// Normal form of the Bezoutian modulo `J(z) + J(ζ)`, grouped as
/// `Σ_i a_i(ζ) b_i(z)`.
fn split_bezoutian(alg: &QuotientAlgebra, d: &DoubledRing, bez: &Polynomial) -> Result<Vec<Polynomial>> {
    let mut gens: Vec<Polynomial> = alg.gens.iter().map(|g| d.z(g)).collect();
    gens.extend(alg.gens.iter().map(|g| d.zeta(g)));
    let gb = GroebnerBasis::ideal(&d.ring, &gens)?;
    let nf = gb.reduce_poly(bez)?;
    let n = d.n;
    let mut parts: Vec<Vec<(Monomial, Rational)>> = vec![Vec::new(); alg.dim()];
    for (m, c) in nf.terms() {
        let e = m.exponents();
        let zpart = Monomial::new(e[..n].to_vec());
        let i = alg
            .basis
            .iter()
            .position(|b| *b == zpart)
            .ok_or_else(|| Error::Internal("normal form leaves the standard basis".into()))?;
        parts[i].push((Monomial::new(e[n..].to_vec()), c.clone()));
    }
    Ok(parts
        .into_iter()
        .map(|t| Polynomial::from_terms(alg.ring(), t))
        .collect())
}

pub fn residue_functional(gens: &[Polynomial]) -> Result<ResidueFunctional> {
    require_ci(gens)?;
    let algebra = QuotientAlgebra::new(gens)?;
    let hefer = hefer_matrix(gens)?;
    let raw = hefer.determinant();
    let a = split_bezoutian(&algebra, &hefer.doubled, &raw)?;
    // 1 = Σ c_i a_i determines res(b_i) = c_i
    let dim = algebra.dim();
    let coords: Vec<Vec<Rational>> = a
        .iter()
        .map(|p| algebra.coordinates(p))
        .collect::<Result<_>>()?;
    let transposed: Vec<Vec<Rational>> = (0..dim)
        .map(|r| (0..dim).map(|i| coords[i][r].clone()).collect())
        .collect();
    let one = algebra.coordinates(&Polynomial::one(algebra.ring()))?;
    let c = solve(&transposed, &one)
        .ok_or_else(|| Error::Internal("Bezoutian dual basis is degenerate".into()))?;

    let mut res = ResidueFunctional {
        hefer,
        bezoutian: raw,
        sign: 1,
        dual_basis: a,
        values: c,
        algebra,
    };
    let jac = jacobian_determinant(gens)?;
    let anchor = res.residue(&jac)?;
    let target = rat(dim as i64);
    if anchor == -target.clone() {
        res.sign = -1;
        res.bezoutian = -&res.bezoutian;
        res.dual_basis = res.dual_basis.iter().map(|p| -p).collect();
        res.values = res.values.iter().map(|v| -v).collect();
    } else if anchor != target {
        return Err(Error::Internal(format!("res(Jacobian) = {anchor}, expected ±{dim}")));
    }
    Ok(res)
}

impl ResidueFunctional {
    pub fn basis(&self) -> &[Monomial] {
        self.algebra.basis()
    }

    pub fn residue(&self, phi: &Polynomial) -> Result<Rational> {
        let coords = self.algebra.coordinates(phi)?;
        Ok(coords
            .iter()
            .zip(&self.values)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b))
    }

    /// `res(b_i b_j)` over the standard basis.
    pub fn gram(&self) -> Result<Vec<Vec<Rational>>> {
        let b = self.algebra.basis_polynomials();
        b.iter()
            .map(|bi| b.iter().map(|bj| self.residue(&(bi * bj))).collect())
            .collect()
    }

    /// `res(a_i b_j)`, which is the identity matrix.
    pub fn dual_pairing(&self) -> Result<Vec<Vec<Rational>>> {
        let b = self.algebra.basis_polynomials();
        self.dual_basis
            .iter()
            .map(|a| b.iter().map(|bj| self.residue(&(a * bj))).collect())
            .collect()
    }

    pub fn dual_basis_holds(&self) -> Result<bool> {
        let m = self.dual_pairing()?;
        Ok(m.iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, v)| if i == j { v.is_one() } else { v.is_zero() })
        }))
    }

    /// `Tr(M_b) = res(b · det ∂f/∂z)` for every basis element.
    pub fn trace_identity_holds(&self) -> Result<bool> {
        let jac = jacobian_determinant(self.algebra.generators())?;
        for b in self.algebra.basis_polynomials() {
            if self.algebra.trace(&b)? != self.residue(&(&b * &jac))? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// The normalized Bezoutian `±det(h_{jk})`.
pub fn bezoutian(gens: &[Polynomial]) -> Result<Polynomial> {
    Ok(residue_functional(gens)?.bezoutian)
}

/// `({a_i}, {b_i})` with `res(a_i b_j) = δ_ij`.
pub fn dual_bases(gens: &[Polynomial]) -> Result<(Vec<Polynomial>, Vec<Polynomial>)> {
    let r = residue_functional(gens)?;
    Ok((r.dual_basis.clone(), r.algebra.basis_polynomials()))
}

pub fn residue(phi: &Polynomial, gens: &[Polynomial]) -> Result<Rational> {
    residue_functional(gens)?.residue(phi)
}

/// Gram matrix of `(a, b) -> res(ab)` and its determinant.
pub fn pairing_gram(gens: &[Polynomial]) -> Result<(Vec<Vec<Rational>>, Rational)> {
    let g = residue_functional(gens)?.gram()?;
    let d = det_q(&g, &Rational::zero());
    Ok((g, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn polys(r: &RingRef, s: &[&str]) -> Vec<Polynomial> {
        s.iter().map(|x| Polynomial::parse(r, x).unwrap()).collect()
    }

    fn strings(m: &[Vec<Polynomial>]) -> Vec<Vec<String>> {
        m.iter()
            .map(|r| r.iter().map(|p| p.to_string()).collect())
            .collect()
    }

    #[test]
    fn hefer_examples() {
        let r = Ring::grevlex(&["z"]);
        let h = hefer_matrix(&polys(&r, &["z"])).unwrap();
        assert_eq!(strings(&h.entries), [["-1"]]);
        let h = hefer_matrix(&polys(&r, &["z^3"])).unwrap();
        assert_eq!(strings(&h.entries), [["-z^2 - z*z' - z'^2"]]);

        let r2 = Ring::grevlex(&["x", "y"]);
        let h = hefer_matrix(&polys(&r2, &["x", "y"])).unwrap();
        assert_eq!(strings(&h.entries), [["-1", "0"], ["0", "-1"]]);
    }

    #[test]
    fn bezoutian_examples() {
        let r2 = Ring::grevlex(&["x", "y"]);
        assert_eq!(bezoutian(&polys(&r2, &["x", "y"])).unwrap().to_string(), "1");
        let r = Ring::grevlex(&["z"]);
        let f = residue_functional(&polys(&r, &["z^2"])).unwrap();
        assert_eq!(f.bezoutian.to_string(), "z + z'");
        assert_eq!(f.sign, -1);
        assert_eq!(f.values, vec![rat(0), rat(1)]);
    }

    #[test]
    fn residues_of_powers() {
        let r = Ring::grevlex(&["z"]);
        let f = residue_functional(&polys(&r, &["z^4"])).unwrap();
        for k in 0..8 {
            let zk = Polynomial::var(&r, 0).pow(k);
            let expect = if k == 3 { rat(1) } else { rat(0) };
            assert_eq!(f.residue(&zk).unwrap(), expect, "z^{k}");
        }
        assert!(f.dual_basis_holds().unwrap());
    }

    #[test]
    fn simple_point_is_evaluation() {
        let r = Ring::grevlex(&["x", "y"]);
        let f = residue_functional(&polys(&r, &["x", "y"])).unwrap();
        let phi = Polynomial::parse(&r, "3 + x*y - 2*y").unwrap();
        assert_eq!(f.residue(&phi).unwrap(), rat(3));
        let (g, d) = pairing_gram(&polys(&r, &["x", "y"])).unwrap();
        assert_eq!((g, d), (vec![vec![rat(1)]], rat(1)));
    }

    #[test]
    fn tensor_product_case() {
        let r = Ring::grevlex(&["x", "y"]);
        let gens = polys(&r, &["x^2", "y^3"]);
        let f = residue_functional(&gens).unwrap();
        assert_eq!(f.algebra.dim(), 6);
        for b in f.algebra.basis_polynomials() {
            let expect = if b.to_string() == "x*y^2" { rat(1) } else { rat(0) };
            assert_eq!(f.residue(&b).unwrap(), expect, "{b}");
        }
        let jac = jacobian_determinant(&gens).unwrap();
        assert_eq!(jac.to_string(), "6*x*y^2");
        assert_eq!(f.residue(&jac).unwrap(), rat(6));
        assert!(f.dual_basis_holds().unwrap());
        assert!(f.trace_identity_holds().unwrap());
        let (_, d) = pairing_gram(&gens).unwrap();
        assert!(!d.is_zero());
    }

    #[test]
    fn non_monomial_intersection() {
        let r = Ring::grevlex(&["x", "y"]);
        let gens = polys(&r, &["x^2 + y^2 - 2", "x*y - 1"]);
        let f = residue_functional(&gens).unwrap();
        assert!(f.dual_basis_holds().unwrap());
        assert!(f.trace_identity_holds().unwrap());
        let d = det_q(&f.gram().unwrap(), &Rational::zero());
        assert!(!d.is_zero());
    }

    #[test]
    fn telescoping_order_changes_only_modulo_j() {
        let r = Ring::grevlex(&["x", "y"]);
        let gens = polys(&r, &["x^2 + x*y", "y^3 - x"]);
        let h01 = hefer_matrix_with_order(&gens, &[0, 1]).unwrap();
        let h10 = hefer_matrix_with_order(&gens, &[1, 0]).unwrap();
        assert!(h10.verify(&gens));
        let d = &h01.doubled;
        let mut j: Vec<Polynomial> = gens.iter().map(|g| d.z(g)).collect();
        j.extend(gens.iter().map(|g| d.zeta(g)));
        let gb = GroebnerBasis::ideal(&d.ring, &j).unwrap();
        let diff = &h01.determinant() - &h10.determinant();
        assert!(gb.reduce_poly(&diff).unwrap().is_zero());
    }

    #[test]
    fn rejections() {
        let r = Ring::grevlex(&["x", "y"]);
        assert!(matches!(
            residue_functional(&polys(&r, &["x*y"])),
            Err(Error::NotCompleteIntersection(_))
        ));
        assert_eq!(
            residue_functional(&polys(&r, &["x*y", "x^2"])).unwrap_err(),
            Error::NotZeroDimensional
        );
    }
}
