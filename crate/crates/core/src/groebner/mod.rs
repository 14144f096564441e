//! Gröbner bases of ideals and submodules of free modules, with the
//! operations built on them: normal forms, membership, syzygies, Krull
//! dimension, elimination and radical membership.

mod engine;
pub mod order;


pub(crate) use engine::{Ctx, Term, Vector};
pub use order::{ModuleOrder, SchreyerFrame};

use crate::algebra::monomial::{Monomial, MonomialOrder};
use crate::algebra::polynomial::Polynomial;
use crate::algebra::ring::{check_same, RingRef};
use crate::error::{Error, Result};
use crate::resolution::PolyMatrix;

/// Element of a free module `O^rank`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeModuleElement {
    ring: RingRef,
    components: Vec<Polynomial>,
}

impl FreeModuleElement {
    pub fn new(ring: &RingRef, components: Vec<Polynomial>) -> Result<Self> {
        for c in &components {
            check_same(ring, c.ring())?;
        }
        Ok(FreeModuleElement {
            ring: ring.clone(),
            components,
        })
    }

    pub fn from_poly(p: Polynomial) -> Self {
        FreeModuleElement {
            ring: p.ring().clone(),
            components: vec![p],
        }
    }

    pub fn zero(ring: &RingRef, rank: usize) -> Self {
        FreeModuleElement {
            ring: ring.clone(),
            components: vec![Polynomial::zero(ring); rank],
        }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn into_components(self) -> Vec<Polynomial> {
        self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Polynomial::is_zero)
    }

    pub(crate) fn to_vector(&self, ctx: &Ctx) -> Vector {
        let terms = self
            .components
            .iter()
            .enumerate()
            .flat_map(|(pos, p)| {
                p.terms().iter().map(move |(m, c)| Term {
                    m: m.clone(),
                    pos,
                    c: c.clone(),
                })
            })
            .collect();
        ctx.sorted(terms)
    }

    pub(crate) fn from_vector(ring: &RingRef, rank: usize, v: &Vector) -> Self {
        let mut parts: Vec<Vec<(Monomial, crate::Rational)>> = vec![Vec::new(); rank];
        for t in &v.terms {
            parts[t.pos].push((t.m.clone(), t.c.clone()));
        }
        FreeModuleElement {
            ring: ring.clone(),
            components: parts
                .into_iter()
                .map(|t| Polynomial::from_terms(ring, t))
                .collect(),
        }
    }
}

/// Reduced Gröbner basis of a submodule of `O^rank` (an ideal when rank 1).
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ctx: Ctx,
    rank: usize,
    basis: Vec<Vector>,
    generators: Vec<FreeModuleElement>,
}

/// Reduced Gröbner basis of the submodule generated by `gens`.
pub fn buchberger(
    ring: &RingRef,
    rank: usize,
    gens: &[FreeModuleElement],
    order: ModuleOrder,
) -> Result<GroebnerBasis> {
    let ctx = Ctx::new(ring.clone(), order);
    let mut vecs = Vec::with_capacity(gens.len());
    for g in gens {
        check_same(ring, g.ring())?;
        if g.rank() != rank {
            return Err(Error::RankMismatch {
                expected: rank,
                found: g.rank(),
            });
        }
        vecs.push(g.to_vector(&ctx));
    }
    let basis = ctx.groebner(&vecs);
    Ok(GroebnerBasis::from_parts(ctx, rank, basis))
}

impl GroebnerBasis {
    fn from_parts(ctx: Ctx, rank: usize, basis: Vec<Vector>) -> Self {
        let generators = basis
            .iter()
            .map(|v| FreeModuleElement::from_vector(&ctx.ring, rank, v))
            .collect();
        GroebnerBasis {
            ctx,
            rank,
            basis,
            generators,
        }
    }

    /// Gröbner basis of the ideal generated by `gens`, in the ring's order.
    pub fn ideal(ring: &RingRef, gens: &[Polynomial]) -> Result<Self> {
        let elems: Vec<FreeModuleElement> = gens
            .iter()
            .map(|p| FreeModuleElement::new(ring, vec![p.clone()]))
            .collect::<Result<_>>()?;
        buchberger(ring, 1, &elems, ModuleOrder::TermOverPosition)
    }

    pub fn ring(&self) -> &RingRef {
        &self.ctx.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> &ModuleOrder {
        &self.ctx.order
    }

    /// Always true: the engine returns interreduced monic bases.
    pub fn is_reduced(&self) -> bool {
        true
    }

    pub fn generators(&self) -> &[FreeModuleElement] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// Generators of an ideal basis as polynomials.
    pub fn polynomials(&self) -> Vec<Polynomial> {
        self.generators
            .iter()
            .map(|g| g.components()[0].clone())
            .collect()
    }

    /// Leading monomials with their positions.
    pub fn leading_terms(&self) -> Vec<(Monomial, usize)> {
        self.basis
            .iter()
            .map(|v| {
                let t = v.lead().expect("nonzero");
                (t.m.clone(), t.pos)
            })
            .collect()
    }

    pub fn normal_form(&self, phi: &FreeModuleElement) -> Result<FreeModuleElement> {
        check_same(self.ring(), phi.ring())?;
        if phi.rank() != self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                found: phi.rank(),
            });
        }
        let v = phi.to_vector(&self.ctx);
        let r = self.ctx.reduce(&v, &self.basis);
        Ok(FreeModuleElement::from_vector(self.ring(), self.rank, &r))
    }

    /// Normal form of a polynomial against an ideal basis.
    pub fn reduce_poly(&self, phi: &Polynomial) -> Result<Polynomial> {
        let nf = self.normal_form(&FreeModuleElement::new(self.ring(), vec![phi.clone()])?)?;
        Ok(nf.into_components().remove(0))
    }

    pub fn contains(&self, phi: &FreeModuleElement) -> Result<bool> {
        Ok(self.normal_form(phi)?.is_zero())
    }

    pub fn contains_poly(&self, phi: &Polynomial) -> Result<bool> {
        Ok(self.reduce_poly(phi)?.is_zero())
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.basis
            .iter()
            .any(|v| v.terms.len() == 1 && v.terms[0].m.is_one())
    }

    pub fn is_zero_module(&self) -> bool {
        self.basis.is_empty()
    }

    /// Buchberger criterion, checked from scratch.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        self.ctx.is_groebner(&self.basis)
    }

    /// Monomials outside the leading-term ideal; `None` if infinitely many.
    pub fn standard_monomials(&self) -> Option<Vec<Monomial>> {
        if self.rank != 1 || self.dimension() != 0 {
            return None;
        }
        let n = self.ring().nvars();
        let leads: Vec<Monomial> = self.leading_terms().into_iter().map(|t| t.0).collect();
        let standard = |m: &Monomial| !leads.iter().any(|l| l.divides(m));
        let mut out = Vec::new();
        let mut frontier = vec![Monomial::one(n)];
        let mut seen = std::collections::HashSet::new();
        while let Some(m) = frontier.pop() {
            if !seen.insert(m.clone()) || !standard(&m) {
                continue;
            }
            for v in 0..n {
                frontier.push(m.mul(&Monomial::var(n, v, 1)));
            }
            out.push(m);
        }
        let order = self.ring().order().clone();
        out.sort_by(|a, b| order.cmp(a, b));
        Some(out)
    }

    /// Krull dimension of `O/I` for an ideal basis: the largest set of
    /// variables independent modulo the leading-term ideal; `-1` for the unit
    /// ideal.
    pub fn dimension(&self) -> i64 {
        assert_eq!(self.rank, 1, "dimension is defined for ideals");
        if self.is_unit_ideal() {
            return -1;
        }
        let leads: Vec<Monomial> = self.leading_terms().into_iter().map(|t| t.0).collect();
        max_independent_set(self.ring().nvars(), &leads) as i64
    }

    /// `n - dim`, with `n + 1` for the unit ideal.
    pub fn codim(&self) -> usize {
        (self.ring().nvars() as i64 - self.dimension()) as usize
    }
}

/// Size of the largest variable subset `S` such that no monomial in `leads`
/// is supported inside `S`.
pub fn max_independent_set(nvars: usize, leads: &[Monomial]) -> usize {
    let masks: Vec<u64> = leads
        .iter()
        .map(|m| m.support().fold(0u64, |acc, v| acc | (1 << v)))
        .collect();
    let mut best = 0;
    for s in 0u64..(1u64 << nvars) {
        let size = s.count_ones() as usize;
        if size <= best {
            continue;
        }
        if masks.iter().all(|&m| m & !s != 0) {
            best = size;
        }
    }
    best
}

/// `φ ∈ I` for an ideal given by generators.
pub fn membership(phi: &Polynomial, gens: &[Polynomial]) -> Result<bool> {
    GroebnerBasis::ideal(phi.ring(), gens)?.contains_poly(phi)
}

/// Krull dimension of `O/(gens)`.
pub fn dimension(ring: &RingRef, gens: &[Polynomial]) -> Result<i64> {
    Ok(GroebnerBasis::ideal(ring, gens)?.dimension())
}

/// Codimension of `V(gens)`, `n + 1` when empty.
pub fn codim(ring: &RingRef, gens: &[Polynomial]) -> Result<usize> {
    Ok(GroebnerBasis::ideal(ring, gens)?.codim())
}

/// `I ∩ k[keep]`, returned as a reduced Gröbner basis in the original ring.
pub fn eliminate(ring: &RingRef, gens: &[Polynomial], keep: &[usize]) -> Result<Vec<Polynomial>> {
    let n = ring.nvars();
    let high: Vec<bool> = (0..n).map(|v| !keep.contains(&v)).collect();
    let elim_ring = ring.with_order(MonomialOrder::Block(high.clone()));
    let moved: Vec<Polynomial> = gens.iter().map(|g| g.with_ring(&elim_ring)).collect();
    let gb = GroebnerBasis::ideal(&elim_ring, &moved)?;
    let kept: Vec<Polynomial> = gb
        .polynomials()
        .into_iter()
        .filter(|p| p.variables().iter().all(|&v| !high[v]))
        .map(|p| p.with_ring(ring))
        .collect();
    Ok(GroebnerBasis::ideal(ring, &kept)?.polynomials())
}

/// `φ ∈ √I` by testing `1 ∈ I + (1 - tφ)` with a fresh variable `t`.
pub fn radical_membership(phi: &Polynomial, gens: &[Polynomial]) -> Result<bool> {
    let ring = phi.ring();
    for g in gens {
        check_same(ring, g.ring())?;
    }
    if phi.is_zero() {
        return Ok(true);
    }
    let t = ring.fresh_name("t");
    let ext = ring.extended(&[t], MonomialOrder::Grevlex);
    let n = ring.nvars();
    let map: Vec<Option<usize>> = (0..n).map(Some).collect();
    let mut moved: Vec<Polynomial> = gens.iter().map(|g| g.map_into(&ext, &map)).collect();
    let tphi = &Polynomial::var(&ext, n) * &phi.map_into(&ext, &map);
    moved.push(&Polynomial::one(&ext) - &tphi);
    Ok(GroebnerBasis::ideal(&ext, &moved)?.is_unit_ideal())
}

/// Generators of the kernel of `m: O^cols -> O^rows`, as the columns of a
/// `cols × k` matrix. The kernel is read off a Gröbner basis of the graph
/// `{(m v, v)}` under an order eliminating the target block; on the source
/// block the order is the Schreyer order induced by the columns of `m`.
pub fn syzygy_module(m: &PolyMatrix) -> Result<PolyMatrix> {
    let ring = m.ring().clone();
    let (r, s) = (m.rows(), m.cols());
    if s == 0 {
        return Ok(PolyMatrix::zero(&ring, 0, 0));
    }
    if r == 0 {
        return Ok(PolyMatrix::identity(&ring, s));
    }
    let top_ctx = Ctx::new(ring.clone(), ModuleOrder::TermOverPosition);
    let leads: Vec<(Monomial, usize)> = m
        .columns()
        .into_iter()
        .map(|col| {
            let v = FreeModuleElement::new(&ring, col)
                .expect("same ring")
                .to_vector(&top_ctx);
            v.lead()
                .map(|t| (t.m.clone(), t.pos))
                .unwrap_or_else(|| (Monomial::one(ring.nvars()), 0))
        })
        .collect();
    let order = ModuleOrder::Elimination {
        split: r,
        top: Box::new(ModuleOrder::TermOverPosition),
        bottom: Box::new(ModuleOrder::schreyer(ModuleOrder::TermOverPosition, leads)),
    };
    let gens: Vec<FreeModuleElement> = (0..s)
        .map(|j| {
            let mut comps = m.column(j);
            comps.extend((0..s).map(|k| {
                if k == j {
                    Polynomial::one(&ring)
                } else {
                    Polynomial::zero(&ring)
                }
            }));
            FreeModuleElement::new(&ring, comps).expect("same ring")
        })
        .collect();
    let gb = buchberger(&ring, r + s, &gens, order)?;
    let mut columns = Vec::new();
    for (g, (_, pos)) in gb.generators().iter().zip(gb.leading_terms()) {
        if pos < r {
            continue;
        }
        let comps = g.components();
        if comps[..r].iter().any(|p| !p.is_zero()) {
            return Err(Error::Internal("syzygy with nonzero image".into()));
        }
        columns.push(comps[r..].to_vec());
    }
    PolyMatrix::from_columns(&ring, s, columns)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ring::Ring;

    fn ring(vars: &[&str]) -> RingRef {
        Ring::grevlex(vars)
    }

    fn ps(r: &RingRef, src: &[&str]) -> Vec<Polynomial> {
        src.iter().map(|s| Polynomial::parse(r, s).unwrap()).collect()
    }

    fn gb_strings(r: &RingRef, src: &[&str]) -> Vec<String> {
        let gb = GroebnerBasis::ideal(r, &ps(r, src)).unwrap();
        assert!(gb.satisfies_buchberger_criterion());
        gb.polynomials().iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn buchberger_examples() {
        let r = ring(&["x", "y"]);
        assert_eq!(gb_strings(&r, &["x", "y"]), vec!["y", "x"]);
        assert_eq!(gb_strings(&r, &["y - x^2", "y"]), vec!["y", "x^2"]);
        assert_eq!(gb_strings(&r, &["x^2", "x*y"]), vec!["x*y", "x^2"]);
        let empty = GroebnerBasis::ideal(&r, &[]).unwrap();
        assert!(empty.is_zero_module());
    }

    #[test]
    fn normal_form_examples() {
        let r = ring(&["x", "y"]);
        let gx = GroebnerBasis::ideal(&r, &ps(&r, &["x"])).unwrap();
        assert!(gx.reduce_poly(&ps(&r, &["x^2"])[0]).unwrap().is_zero());
        assert_eq!(gx.reduce_poly(&ps(&r, &["y"])[0]).unwrap().to_string(), "y");
        let g3 = GroebnerBasis::ideal(&r, &ps(&r, &["x^2", "x*y", "y^2"])).unwrap();
        assert_eq!(g3.reduce_poly(&ps(&r, &["x^2 + y"])[0]).unwrap().to_string(), "y");
    }

    #[test]
    fn membership_examples() {
        let r = ring(&["x", "y"]);
        let p = |s| Polynomial::parse(&r, s).unwrap();
        assert!(membership(&p("x*y"), &[p("x")]).unwrap());
        assert!(!membership(&p("y"), &[p("x")]).unwrap());
        let q = p("(y - x^2)^2");
        assert!(membership(&(&q * &p("1 + x")), std::slice::from_ref(&q)).unwrap());
    }

    #[test]
    fn syzygy_examples() {
        let r = ring(&["x", "y"]);
        let m = PolyMatrix::row_vector(&r, &ps(&r, &["x", "y"])).unwrap();
        let s = syzygy_module(&m).unwrap();
        assert_eq!(s.to_strings(), vec![vec!["y"], vec!["-x"]]);
        let m = PolyMatrix::row_vector(&r, &ps(&r, &["x^2", "x*y"])).unwrap();
        let s = syzygy_module(&m).unwrap();
        assert_eq!(s.to_strings(), vec![vec!["y"], vec!["-x"]]);
        let m = PolyMatrix::row_vector(&r, &ps(&r, &["1"])).unwrap();
        assert_eq!(syzygy_module(&m).unwrap().cols(), 0);
    }

    #[test]
    fn dimension_examples() {
        let r2 = ring(&["x", "y"]);
        assert_eq!(dimension(&r2, &ps(&r2, &["x"])).unwrap(), 1);
        assert_eq!(codim(&r2, &ps(&r2, &["x"])).unwrap(), 1);
        assert_eq!(dimension(&r2, &ps(&r2, &["x", "y"])).unwrap(), 0);
        assert_eq!(codim(&r2, &ps(&r2, &["x", "y"])).unwrap(), 2);
        let r3 = ring(&["x", "y", "z"]);
        assert_eq!(dimension(&r3, &ps(&r3, &["x*z", "y*z"])).unwrap(), 2);
        assert_eq!(codim(&r3, &ps(&r3, &["x*z", "y*z"])).unwrap(), 1);
        assert_eq!(dimension(&r2, &ps(&r2, &["1 + x"])).unwrap(), 1);
        assert_eq!(dimension(&r2, &ps(&r2, &["x", "1 + x"])).unwrap(), -1);
        assert_eq!(codim(&r2, &ps(&r2, &["3"])).unwrap(), 3);
    }

    #[test]
    fn elimination_examples() {
        let r = ring(&["x", "y"]);
        assert!(eliminate(&r, &ps(&r, &["y - x^2"]), &[0]).unwrap().is_empty());
        let e = eliminate(&r, &ps(&r, &["x", "y"]), &[0]).unwrap();
        assert_eq!(e.iter().map(|p| p.to_string()).collect::<Vec<_>>(), vec!["x"]);
        assert!(eliminate(&r, &ps(&r, &["x*y - 1"]), &[0]).unwrap().is_empty());
    }

    #[test]
    fn radical_examples() {
        let r = ring(&["x", "y"]);
        let p = |s| Polynomial::parse(&r, s).unwrap();
        assert!(radical_membership(&p("x"), &[p("x^2")]).unwrap());
        assert!(!radical_membership(&p("y"), &[p("x^2")]).unwrap());
        assert!(radical_membership(&p("x + y"), &[p("x^2"), p("y^2")]).unwrap());
    }

    #[test]
    fn module_membership() {
        let r = ring(&["x", "y"]);
        let p = |s| Polynomial::parse(&r, s).unwrap();
        let gens = vec![
            FreeModuleElement::new(&r, vec![p("x"), p("y")]).unwrap(),
            FreeModuleElement::new(&r, vec![p("y"), p("0")]).unwrap(),
        ];
        let gb = buchberger(&r, 2, &gens, ModuleOrder::TermOverPosition).unwrap();
        assert!(gb.satisfies_buchberger_criterion());
        let inside = FreeModuleElement::new(&r, vec![p("x^2 + y^2"), p("x*y")]).unwrap();
        assert!(gb.contains(&inside).unwrap());
        let outside = FreeModuleElement::new(&r, vec![p("0"), p("x")]).unwrap();
        assert!(!gb.contains(&outside).unwrap());
        let wrong = FreeModuleElement::new(&r, vec![p("x")]).unwrap();
        assert!(gb.normal_form(&wrong).is_err());
    }
}
