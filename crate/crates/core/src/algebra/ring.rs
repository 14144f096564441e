use std::fmt;
use std::sync::Arc;

use super::monomial::MonomialOrder;
use crate::error::{Error, Result};

/// Coefficient field of a polynomial ring. Polynomials themselves always
/// carry rational coefficients; the function-field variant describes the
/// scalars of operators computed generically along a variety.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CoefficientField {
    Rationals,
    RationalFunctions { free: Vec<String> },
}

/// Polynomial ring over the rationals with named variables and an active order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    vars: Vec<String>,
    order: MonomialOrder,
}

pub type RingRef = Arc<Ring>;

impl Ring {
    pub fn new<S: Into<String>>(vars: Vec<S>, order: MonomialOrder) -> RingRef {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        if let MonomialOrder::Block(mask) = &order {
            assert_eq!(mask.len(), vars.len(), "block mask length");
        }
        Arc::new(Ring { vars, order })
    }

    pub fn grevlex<S: AsRef<str>>(vars: &[S]) -> RingRef {
        Ring::new(
            vars.iter().map(|s| s.as_ref().to_string()).collect(),
            MonomialOrder::Grevlex,
        )
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn require_var(&self, name: &str) -> Result<usize> {
        self.var_index(name)
            .ok_or_else(|| Error::RingMismatch(format!("unknown variable `{name}`")))
    }

    pub fn with_order(&self, order: MonomialOrder) -> RingRef {
        Ring::new(self.vars.clone(), order)
    }

    /// Same variables plus `extra` appended at the end.
    pub fn extended(&self, extra: &[String], order: MonomialOrder) -> RingRef {
        let mut vars = self.vars.clone();
        vars.extend(extra.iter().cloned());
        Ring::new(vars, order)
    }

    /// A variable name not already used in this ring.
    pub fn fresh_name(&self, stem: &str) -> String {
        let mut name = stem.to_string();
        while self.var_index(&name).is_some() {
            name.push('_');
        }
        name
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QQ[{}]", self.vars.join(","))
    }
}

pub(crate) fn same_ring(a: &RingRef, b: &RingRef) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

pub(crate) fn check_same(a: &RingRef, b: &RingRef) -> Result<()> {
    if same_ring(a, b) {
        Ok(())
    } else {
        Err(Error::RingMismatch(format!("{a} vs {b}")))
    }
}
