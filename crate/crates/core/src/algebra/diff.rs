use std::fmt;

use super::polynomial::Polynomial;
use super::ring::{check_same, RingRef};
use crate::error::{Error, Result};

/// Linear differential operator `Σ c_β ∂^β` with polynomial coefficients,
/// differentiating only in the `vars` directions. Derivatives are plain
/// partials (no `1/β!` normalization).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffOperator {
    ring: RingRef,
    vars: Vec<usize>,
    terms: Vec<(Vec<u32>, Polynomial)>,
}

impl DiffOperator {
    /// Builds an operator; zero coefficients are dropped and equal
    /// multi-indices merged.
    pub fn new(ring: &RingRef, vars: Vec<usize>, terms: Vec<(Vec<u32>, Polynomial)>) -> Result<Self> {
        for &v in &vars {
            if v >= ring.nvars() {
                return Err(Error::RingMismatch(format!("variable index {v} out of range")));
            }
        }
        let mut merged: Vec<(Vec<u32>, Polynomial)> = Vec::new();
        for (beta, c) in terms {
            if beta.len() != vars.len() {
                return Err(Error::RankMismatch {
                    expected: vars.len(),
                    found: beta.len(),
                });
            }
            check_same(ring, c.ring())?;
            match merged.iter_mut().find(|(b, _)| *b == beta) {
                Some(slot) => slot.1 = &slot.1 + &c,
                None => merged.push((beta, c)),
            }
        }
        merged.retain(|(_, c)| !c.is_zero());
        // highest order first, then lexicographically descending
        merged.sort_by(|a, b| {
            let da: u32 = a.0.iter().sum();
            let db: u32 = b.0.iter().sum();
            db.cmp(&da).then_with(|| b.0.cmp(&a.0))
        });
        Ok(DiffOperator {
            ring: ring.clone(),
            vars,
            terms: merged,
        })
    }

    pub fn identity(ring: &RingRef, vars: Vec<usize>) -> Self {
        let k = vars.len();
        DiffOperator::new(ring, vars, vec![(vec![0; k], Polynomial::one(ring))]).expect("valid")
    }

    /// Single pure derivative `∂^beta`.
    pub fn derivative(ring: &RingRef, vars: Vec<usize>, beta: Vec<u32>) -> Result<Self> {
        DiffOperator::new(ring, vars, vec![(beta, Polynomial::one(ring))])
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn vars(&self) -> &[usize] {
        &self.vars
    }

    pub fn terms(&self) -> &[(Vec<u32>, Polynomial)] {
        &self.terms
    }

    pub fn order(&self) -> u32 {
        self.terms
            .iter()
            .map(|(b, _)| b.iter().sum())
            .max()
            .unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &DiffOperator) -> Result<DiffOperator> {
        check_same(&self.ring, &other.ring)?;
        if self.vars != other.vars {
            return Err(Error::RingMismatch("operators act on different variables".into()));
        }
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        DiffOperator::new(&self.ring, self.vars.clone(), terms)
    }

    pub fn scale(&self, c: &Polynomial) -> DiffOperator {
        let terms = self.terms.iter().map(|(b, a)| (b.clone(), a * c)).collect();
        DiffOperator::new(&self.ring, self.vars.clone(), terms).expect("same shape")
    }

    /// `Σ c_β ∂^β φ`.
    pub fn apply(&self, phi: &Polynomial) -> Result<Polynomial> {
        check_same(&self.ring, phi.ring())?;
        let mut acc = Polynomial::zero(&self.ring);
        for (beta, c) in &self.terms {
            let mut d = phi.clone();
            for (&v, &k) in self.vars.iter().zip(beta) {
                d = d.derivative(v, k);
                if d.is_zero() {
                    break;
                }
            }
            if !d.is_zero() {
                acc = &acc + &(c * &d);
            }
        }
        Ok(acc)
    }

    pub fn display_derivative(&self, beta: &[u32]) -> String {
        let names = self.ring.vars();
        let parts: Vec<String> = self
            .vars
            .iter()
            .zip(beta)
            .filter(|(_, &k)| k > 0)
            .map(|(&v, &k)| {
                if k == 1 {
                    format!("d{}", names[v])
                } else {
                    format!("d{}^{}", names[v], k)
                }
            })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

/// `apply_diff(L, φ)`.
pub fn apply_diff(op: &DiffOperator, phi: &Polynomial) -> Result<Polynomial> {
    op.apply(phi)
}

impl fmt::Display for DiffOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(b, c)| {
                let d = self.display_derivative(b);
                let c_str = if c.len() == 1 { c.to_string() } else { format!("({c})") };
                match (c.is_one(), d.as_str()) {
                    (true, _) => d,
                    (false, "1") => c_str,
                    _ => format!("{c_str}*{d}"),
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
