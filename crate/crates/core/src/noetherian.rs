//! Noetherian operators for primary ideals whose variety is the graph of a
//! polynomial map `ω = g(ζ)`: the inverse system along the variety is
//! computed over `k(ζ)` from Macaulay matrices, then denominators are cleared.

use std::collections::BTreeMap;

use crate::algebra::diff::DiffOperator;
use crate::algebra::gcd::lcm;
use crate::algebra::linalg::nullspace;
use crate::algebra::monomial::{Monomial, MonomialOrder};
use crate::algebra::polynomial::{rat, Polynomial, Rational};
use crate::algebra::rational_function::RationalFunction;
use crate::algebra::ring::{check_same, RingRef};
use crate::error::{Error, Result};
use crate::groebner::{eliminate, membership, radical_membership, GroebnerBasis};

const MAX_ORDER: u32 = 64;

/// Partition of the variables into free `ζ` (coordinates on the variety) and
/// dependent `ω`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VariableSplit {
    pub free: Vec<usize>,
    pub dependent: Vec<usize>,
}

impl VariableSplit {
    pub fn new(ring: &RingRef, free: Vec<usize>, dependent: Vec<usize>) -> Result<Self> {
        let n = ring.nvars();
        let mut seen = vec![false; n];
        for &v in free.iter().chain(&dependent) {
            if v >= n {
                return Err(Error::InvalidSplit(format!("variable index {v} out of range")));
            }
            if seen[v] {
                return Err(Error::InvalidSplit(format!("{} listed twice", ring.vars()[v])));
            }
            seen[v] = true;
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidSplit(format!("{} is in neither block", ring.vars()[v])));
        }
        if dependent.is_empty() {
            return Err(Error::InvalidSplit("no dependent variables".into()));
        }
        Ok(VariableSplit { free, dependent })
    }

    pub fn from_names(ring: &RingRef, free: &[&str], dependent: &[&str]) -> Result<Self> {
        let idx = |names: &[&str]| -> Result<Vec<usize>> {
            names
                .iter()
                .map(|s| {
                    ring.var_index(s)
                        .ok_or_else(|| Error::InvalidSplit(format!("unknown variable {s}")))
                })
                .collect()
        };
        Self::new(ring, idx(free)?, idx(dependent)?)
    }

    /// All variables not named in `dependent` are free.
    pub fn with_dependent(ring: &RingRef, dependent: &[&str]) -> Result<Self> {
        let free: Vec<&str> = ring
            .vars()
            .iter()
            .map(String::as_str)
            .filter(|v| !dependent.contains(v))
            .collect();
        Self::from_names(ring, &free, dependent)
    }

    pub fn free_names(&self, ring: &RingRef) -> Vec<String> {
        self.free.iter().map(|&i| ring.vars()[i].clone()).collect()
    }

    pub fn dependent_names(&self, ring: &RingRef) -> Vec<String> {
        self.dependent.iter().map(|&i| ring.vars()[i].clone()).collect()
    }
}

/// `ω_i = g_i(ζ)`, listed in the order of `split.dependent`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSection {
    pub values: Vec<Polynomial>,
}

impl RationalSection {
    /// Generators `ω_i - g_i` of the variety ideal.
    pub fn variety_ideal(&self, split: &VariableSplit) -> Vec<Polynomial> {
        split
            .dependent
            .iter()
            .zip(&self.values)
            .map(|(&w, g)| &Polynomial::var(g.ring(), w) - g)
            .collect()
    }

    fn validate(&self, ring: &RingRef, split: &VariableSplit) -> Result<()> {
        if self.values.len() != split.dependent.len() {
            return Err(Error::NonGraphSection(format!(
                "section has {} components for {} dependent variables",
                self.values.len(),
                split.dependent.len()
            )));
        }
        for g in &self.values {
            check_same(ring, g.ring())?;
            if let Some(v) = g.variables().into_iter().find(|v| !split.free.contains(v)) {
                return Err(Error::NonGraphSection(format!(
                    "section component {g} involves dependent variable {}",
                    ring.vars()[v]
                )));
            }
        }
        Ok(())
    }
}

/// Both Noether position conditions: `Q ∩ k[ζ] = 0`, and with `ω` ordered
/// above `ζ` the leading-term ideal of `Q` holds a pure power of each `ω_i`.
pub fn check_noether_position(gens: &[Polynomial], split: &VariableSplit) -> Result<bool> {
    let Some(first) = gens.first() else {
        return Ok(false);
    };
    let ring = first.ring();
    let gb = GroebnerBasis::ideal(ring, gens)?;
    if gb.is_unit_ideal() || gb.is_zero_module() {
        return Ok(false);
    }
    if !split.free.is_empty() && !eliminate(ring, gens, &split.free)?.is_empty() {
        return Ok(false);
    }
    let mut mask = vec![false; ring.nvars()];
    for &w in &split.dependent {
        mask[w] = true;
    }
    let block = ring.with_order(MonomialOrder::Block(mask));
    let moved: Vec<Polynomial> = gens.iter().map(|g| g.with_ring(&block)).collect();
    let leads: Vec<Monomial> = GroebnerBasis::ideal(&block, &moved)?
        .leading_terms()
        .into_iter()
        .map(|(m, _)| m)
        .collect();
    Ok(split.dependent.iter().all(|&w| {
        leads.iter().any(|m| {
            let s: Vec<usize> = m.support().collect();
            s == [w]
        })
    }))
}

/// The section through the unique point of a zero-dimensional primary ideal,
/// read off the eliminants `(ω_i - a_i)^m`.
pub fn infer_point(gens: &[Polynomial], split: &VariableSplit) -> Result<RationalSection> {
    let ring = gens
        .first()
        .ok_or_else(|| Error::NonGraphSection("empty ideal".into()))?
        .ring();
    if !split.free.is_empty() {
        return Err(Error::NonGraphSection(
            "a section must be given when there are free variables".into(),
        ));
    }
    let mut values = Vec::new();
    for &w in &split.dependent {
        let elim = eliminate(ring, gens, &[w])?;
        let Some(e) = elim.first() else {
            return Err(Error::NotZeroDimensional);
        };
        let m = e.degree().unwrap_or(0);
        if m == 0 {
            return Err(Error::NonGraphSection("unit ideal".into()));
        }
        // (ω - a)^m has ω^{m-1} coefficient -m·a
        let sub = e.coefficient(&Monomial::var(ring.nvars(), w, m - 1));
        let a: Rational = -sub / rat(m as i64);
        let wa = &Polynomial::var(ring, w) - &Polynomial::constant(ring, a.clone());
        if *e != wa.pow(m) {
            return Err(Error::NonGraphSection(format!(
                "eliminant {e} is not a power of a rational linear form"
            )));
        }
        values.push(Polynomial::constant(ring, a));
    }
    Ok(RationalSection { values })
}

/// `√Q = P`: each `ω_i - g_i ∈ √Q` and each generator of `Q` lies in `P`.
pub fn check_section(gens: &[Polynomial], split: &VariableSplit, section: &RationalSection) -> Result<bool> {
    let ring = match gens.first() {
        Some(g) => g.ring().clone(),
        None => return Ok(false),
    };
    section.validate(&ring, split)?;
    let p = section.variety_ideal(split);
    for f in &p {
        if !radical_membership(f, gens)? {
            return Ok(false);
        }
    }
    let pgb = GroebnerBasis::ideal(&ring, &p)?;
    for q in gens {
        if !pgb.contains_poly(q)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A functional `Σ c_β(ζ) ∂^β_ω |_{ω = g(ζ)}` with coefficients in `k(ζ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalOperator {
    pub terms: Vec<(Vec<u32>, RationalFunction)>,
}

impl RationalOperator {
    pub fn order(&self) -> u32 {
        self.terms.iter().map(|(b, _)| b.iter().sum()).max().unwrap_or(0)
    }
}

/// Basis of the inverse system together with the dimension reached at each
/// derivative order `0, 1, …`.
#[derive(Clone, Debug)]
pub struct DualSpace {
    pub operators: Vec<RationalOperator>,
    pub dims: Vec<usize>,
    pub nil_index: u32,
}

fn multi_indices(k: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(k: usize, d: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for e in 0..=d {
            cur.push(e);
            rec(k, d - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, d, &mut Vec::with_capacity(k), &mut out);
    // highest order first, then descending lexicographic
    out.sort_by(|a, b| {
        let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
        db.cmp(&da).then_with(|| b.cmp(a))
    });
    out
}

fn factorial(beta: &[u32]) -> Rational {
    let mut acc = rat(1);
    for &b in beta {
        for i in 2..=b {
            acc *= rat(i as i64);
        }
    }
    acc
}

/// Expansion `q = Σ_α q_α(ζ) ω^α`.
fn omega_coefficients(q: &Polynomial, split: &VariableSplit) -> BTreeMap<Vec<u32>, Polynomial> {
    let ring = q.ring();
    let mut parts: BTreeMap<Vec<u32>, Vec<(Monomial, Rational)>> = BTreeMap::new();
    for (m, c) in q.terms() {
        let e = m.exponents();
        let alpha: Vec<u32> = split.dependent.iter().map(|&w| e[w]).collect();
        let mut rest = e.to_vec();
        for &w in &split.dependent {
            rest[w] = 0;
        }
        parts
            .entry(alpha)
            .or_default()
            .push((Monomial::new(rest), c.clone()));
    }
    parts
        .into_iter()
        .map(|(a, t)| (a, Polynomial::from_terms(ring, t)))
        .collect()
}

fn translate(gens: &[Polynomial], split: &VariableSplit, section: &RationalSection) -> Result<Vec<Polynomial>> {
    let bindings: Vec<(usize, Polynomial)> = split
        .dependent
        .iter()
        .zip(&section.values)
        .map(|(&w, g)| (w, &Polynomial::var(g.ring(), w) + g))
        .collect();
    gens.iter().map(|q| q.substitute(&bindings)).collect()
}

/// Inverse system of `Q` along `ω = g(ζ)`, by increasing derivative order
/// until the dimension stops growing.
pub fn dual_space(gens: &[Polynomial], split: &VariableSplit, section: &RationalSection) -> Result<DualSpace> {
    let ring = gens
        .first()
        .ok_or_else(|| Error::InvalidSplit("empty ideal".into()))?
        .ring()
        .clone();
    if !check_noether_position(gens, split)? {
        return Err(Error::NoetherPosition(format!(
            "free variables {:?}",
            split.free_names(&ring)
        )));
    }
    if !check_section(gens, split, section)? {
        return Err(Error::SectionMismatch(format!(
            "{:?}",
            section
                .variety_ideal(split)
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
        )));
    }
    let translated = translate(gens, split, section)?;
    let expansions: Vec<BTreeMap<Vec<u32>, Polynomial>> =
        translated.iter().map(|q| omega_coefficients(q, split)).collect();
    let k = split.dependent.len();
    let zero = RationalFunction::from_poly(Polynomial::zero(&ring));

    let mut dims: Vec<usize> = Vec::new();
    let mut prev: Option<(Vec<Vec<u32>>, Vec<Vec<RationalFunction>>)> = None;
    for d in 0..=MAX_ORDER {
        let cols = multi_indices(k, d);
        let facts: Vec<Rational> = cols.iter().map(|b| factorial(b)).collect();
        let mut rows: Vec<Vec<RationalFunction>> = Vec::new();
        for exp in &expansions {
            for gamma in multi_indices(k, d) {
                let row: Vec<RationalFunction> = cols
                    .iter()
                    .zip(&facts)
                    .map(|(beta, f)| {
                        let diff: Option<Vec<u32>> = beta
                            .iter()
                            .zip(&gamma)
                            .map(|(b, g)| b.checked_sub(*g))
                            .collect();
                        match diff.and_then(|a| exp.get(&a)) {
                            Some(c) => RationalFunction::from_poly(c.scale(f)),
                            None => zero.clone(),
                        }
                    })
                    .collect();
                if row.iter().any(|x| !crate::algebra::linalg::Scalar::is_zero(x)) {
                    rows.push(row);
                }
            }
        }
        let basis = nullspace(&rows, cols.len(), &zero);
        let dim = basis.len();
        if let Some((pcols, pbasis)) = prev.take() {
            if dims.last() == Some(&dim) {
                let operators = pbasis
                    .into_iter()
                    .rev()
                    .map(|v| RationalOperator {
                        terms: pcols
                            .iter()
                            .cloned()
                            .zip(v)
                            .filter(|(_, c)| !crate::algebra::linalg::Scalar::is_zero(c))
                            .collect(),
                    })
                    .collect();
                return Ok(DualSpace {
                    operators,
                    dims,
                    nil_index: d - 1,
                });
            }
        }
        dims.push(dim);
        prev = Some((cols, basis));
    }
    Err(Error::NonTermination(MAX_ORDER as usize))
}

/// Noetherian operators with polynomial coefficients for a primary ideal.
#[derive(Clone, Debug)]
pub struct NoetherianSystem {
    pub ring: RingRef,
    pub split: VariableSplit,
    pub section: RationalSection,
    pub ideal: Vec<Polynomial>,
    pub variety_ideal: Vec<Polynomial>,
    pub operators: Vec<DiffOperator>,
    pub nil_index: u32,
    /// Dual-space dimension by derivative order.
    pub dims: Vec<usize>,
    /// The multiplier `h` and its exponent `N`.
    pub h: Polynomial,
    pub h_power: u32,
}

/// Multiplies every operator by the least power `h^N` of the common
/// denominator `h` that makes all coefficients polynomial. A shear
/// `ω -> ω + g(ζ)` leaves `∂/∂ω` unchanged, so the result is already in the
/// original coordinates.
pub fn clear_denominators(ring: &RingRef, ops: &[RationalOperator], vars: &[usize]) -> Result<(Vec<DiffOperator>, Polynomial, u32)> {
    let mut h = Polynomial::one(ring);
    for op in ops {
        for (_, c) in &op.terms {
            h = lcm(&h, c.denominator());
        }
    }
    let n = if h.is_constant() { 0 } else { 1 };
    let hn = h.pow(n);
    let mut out = Vec::with_capacity(ops.len());
    for op in ops {
        let mut terms = Vec::with_capacity(op.terms.len());
        for (beta, c) in &op.terms {
            let num = c.numerator() * &hn;
            let coeff = num.div_exact(c.denominator()).ok_or(Error::InexactDivision)?;
            terms.push((beta.clone(), coeff));
        }
        out.push(DiffOperator::new(ring, vars.to_vec(), terms)?);
    }
    Ok((out, h, n))
}

/// Full pipeline: Noether position, section (inferred for a point if
/// absent), dual space, clearing, and the soundness check `ℒ_j q ∈ P`.
pub fn noetherian_operators(
    gens: &[Polynomial],
    split: &VariableSplit,
    section: Option<&RationalSection>,
) -> Result<NoetherianSystem> {
    let ring = gens
        .first()
        .ok_or_else(|| Error::InvalidSplit("empty ideal".into()))?
        .ring()
        .clone();
    for g in gens {
        check_same(&ring, g.ring())?;
    }
    let section = match section {
        Some(s) => s.clone(),
        None => {
            if !check_noether_position(gens, split)? {
                return Err(Error::NoetherPosition(format!(
                    "free variables {:?}",
                    split.free_names(&ring)
                )));
            }
            infer_point(gens, split)?
        }
    };
    let dual = dual_space(gens, split, &section)?;
    let (operators, h, h_power) = clear_denominators(&ring, &dual.operators, &split.dependent)?;
    let variety_ideal = section.variety_ideal(split);
    let system = NoetherianSystem {
        ring: ring.clone(),
        split: split.clone(),
        section,
        ideal: gens.to_vec(),
        variety_ideal,
        operators,
        nil_index: dual.nil_index,
        dims: dual.dims,
        h,
        h_power,
    };
    let pgb = system.variety_basis()?;
    for op in &system.operators {
        for q in gens {
            if !pgb.contains_poly(&op.apply(q)?)? {
                return Err(Error::Internal(format!("operator {op} does not annihilate {q} on the variety")));
            }
        }
    }
    Ok(system)
}

impl NoetherianSystem {
    pub fn variety_basis(&self) -> Result<GroebnerBasis> {
        GroebnerBasis::ideal(&self.ring, &self.variety_ideal)
    }

    /// Index of the order-zero operator (a nonzero multiple of evaluation).
    pub fn order_zero(&self) -> Option<usize> {
        self.operators.iter().position(|op| op.order() == 0)
    }
}

/// `φ ∈ Q` iff every `ℒ_j φ` vanishes on the variety, i.e. lies in `P`.
pub fn noetherian_membership(phi: &Polynomial, system: &NoetherianSystem) -> Result<bool> {
    let pgb = system.variety_basis()?;
    for op in &system.operators {
        if !pgb.contains_poly(&op.apply(phi)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Verdict of the order-zero operator alone (`φ ∈ P`).
pub fn order_zero_membership(phi: &Polynomial, system: &NoetherianSystem) -> Result<bool> {
    membership(phi, &system.variety_ideal)
}
