use std::cmp::Ordering;
use std::sync::Arc;

use crate::algebra::monomial::{Monomial, MonomialOrder};

/// Extension of a monomial order to terms `m·e_i` of a free module. Basis
/// vectors with smaller index count as larger.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleOrder {
    TermOverPosition,
    PositionOverTerm,
    /// Order induced by a map to another free module: `m·e_i` is compared via
    /// `m·lead_i` in `base`, ties broken by index.
    Schreyer(Arc<SchreyerFrame>),
    /// Positions `< split` dominate every position `>= split`; each block has
    /// its own order (bottom positions are renumbered from zero).
    Elimination {
        split: usize,
        top: Box<ModuleOrder>,
        bottom: Box<ModuleOrder>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchreyerFrame {
    pub base: ModuleOrder,
    pub leads: Vec<(Monomial, usize)>,
}

impl Default for ModuleOrder {
    fn default() -> Self {
        ModuleOrder::TermOverPosition
    }
}

impl ModuleOrder {
    pub fn schreyer(base: ModuleOrder, leads: Vec<(Monomial, usize)>) -> Self {
        ModuleOrder::Schreyer(Arc::new(SchreyerFrame { base, leads }))
    }

    pub fn cmp(
        &self,
        ring: &MonomialOrder,
        a: (&Monomial, usize),
        b: (&Monomial, usize),
    ) -> Ordering {
        match self {
            ModuleOrder::TermOverPosition => ring.cmp(a.0, b.0).then_with(|| b.1.cmp(&a.1)),
            ModuleOrder::PositionOverTerm => b.1.cmp(&a.1).then_with(|| ring.cmp(a.0, b.0)),
            ModuleOrder::Schreyer(frame) => {
                let (la, pa) = &frame.leads[a.1];
                let (lb, pb) = &frame.leads[b.1];
                let ma = a.0.mul(la);
                let mb = b.0.mul(lb);
                frame
                    .base
                    .cmp(ring, (&ma, *pa), (&mb, *pb))
                    .then_with(|| b.1.cmp(&a.1))
            }
            ModuleOrder::Elimination { split, top, bottom } => {
                match (a.1 < *split, b.1 < *split) {
                    (true, true) => top.cmp(ring, a, b),
                    (false, false) => bottom.cmp(ring, (a.0, a.1 - split), (b.0, b.1 - split)),
                    (true, false) => Ordering::Greater,
                    (false, true) => Ordering::Less,
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn schreyer_compares_through_leads() {
        let ring = MonomialOrder::Grevlex;
        // e_0 -> x, e_1 -> y in a rank-1 module
        let leads = vec![
            (Monomial::new(vec![1, 0]), 0),
            (Monomial::new(vec![0, 1]), 0),
        ];
        let o = ModuleOrder::schreyer(ModuleOrder::TermOverPosition, leads);
        let y = Monomial::new(vec![0, 1]);
        let x = Monomial::new(vec![1, 0]);
        // y*e_0 and x*e_1 both map to xy; tie broken towards e_0
        assert_eq!(o.cmp(&ring, (&y, 0), (&x, 1)), Ordering::Greater);
        // x*e_0 -> x^2 beats x*e_1 -> xy
        assert_eq!(o.cmp(&ring, (&x, 0), (&x, 1)), Ordering::Greater);
    }

    #[test]
    fn elimination_block_dominates() {
        let ring = MonomialOrder::Grevlex;
        let o = ModuleOrder::Elimination {
            split: 1,
            top: Box::new(ModuleOrder::TermOverPosition),
            bottom: Box::new(ModuleOrder::TermOverPosition),
        };
        let one = Monomial::one(1);
        let big = Monomial::new(vec![9]);
        assert_eq!(o.cmp(&ring, (&one, 0), (&big, 1)), Ordering::Greater);
    }
}
