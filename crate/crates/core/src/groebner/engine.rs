//! Buchberger's algorithm on sparse vectors of a free module.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_traits::{One, Zero};

use super::order::ModuleOrder;
use crate::algebra::monomial::Monomial;
use crate::algebra::polynomial::Rational;
use crate::algebra::ring::RingRef;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Term {
    pub m: Monomial,
    pub pos: usize,
    pub c: Rational,
}

/// Terms sorted descending in the context's module order, no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub(crate) struct Vector {
    pub terms: Vec<Term>,
}

impl Vector {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&Term> {
        self.terms.first()
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Ctx {
    pub ring: RingRef,
    pub order: ModuleOrder,
}

impl Ctx {
    pub fn new(ring: RingRef, order: ModuleOrder) -> Self {
        Ctx { ring, order }
    }

    pub fn cmp(&self, a: &Term, b: &Term) -> Ordering {
        self.order
            .cmp(self.ring.order(), (&a.m, a.pos), (&b.m, b.pos))
    }

    pub fn sorted(&self, terms: Vec<Term>) -> Vector {
        let mut terms: Vec<Term> = terms.into_iter().filter(|t| !t.c.is_zero()).collect();
        terms.sort_by(|a, b| self.cmp(b, a));
        // merge duplicates
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.pos == t.pos && last.m == t.m => last.c += t.c,
                _ => out.push(t),
            }
        }
        out.retain(|t| !t.c.is_zero());
        Vector { terms: out }
    }

    /// `a - c·m·b`.
    pub fn sub_mul(&self, a: &Vector, c: &Rational, m: &Monomial, b: &Vector) -> Vector {
        let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
        let mut i = 0;
        let scaled = b.terms.iter().map(|t| Term {
            m: t.m.mul(m),
            pos: t.pos,
            c: &t.c * c,
        });
        for s in scaled {
            while i < a.terms.len() && self.cmp(&a.terms[i], &s) == Ordering::Greater {
                out.push(a.terms[i].clone());
                i += 1;
            }
            if i < a.terms.len() && a.terms[i].pos == s.pos && a.terms[i].m == s.m {
                let c = &a.terms[i].c - &s.c;
                if !c.is_zero() {
                    out.push(Term { m: s.m, pos: s.pos, c });
                }
                i += 1;
            } else {
                out.push(Term {
                    m: s.m,
                    pos: s.pos,
                    c: -s.c,
                });
            }
        }
        out.extend(a.terms[i..].iter().cloned());
        Vector { terms: out }
    }

    pub fn monic(&self, v: &Vector) -> Vector {
        match v.lead() {
            Some(t) if !t.c.is_one() => {
                let inv = t.c.recip();
                Vector {
                    terms: v
                        .terms
                        .iter()
                        .map(|t| Term {
                            m: t.m.clone(),
                            pos: t.pos,
                            c: &t.c * &inv,
                        })
                        .collect(),
                }
            }
            _ => v.clone(),
        }
    }

    fn find_reducer<'a>(&self, t: &Term, basis: &'a [Vector]) -> Option<(&'a Vector, Monomial)> {
        basis.iter().find_map(|g| {
            let l = g.lead()?;
            if l.pos != t.pos {
                return None;
            }
            l.m.quotient_of(&t.m).map(|q| (g, q))
        })
    }

    /// Full reduction: no term of the result is divisible by a leading term
    /// of `basis`.
    pub fn reduce(&self, v: &Vector, basis: &[Vector]) -> Vector {
        let mut work = v.clone();
        let mut rem: Vec<Term> = Vec::new();
        while let Some(t) = work.terms.first() {
            match self.find_reducer(t, basis) {
                Some((g, q)) => {
                    let c = &t.c / &g.lead().expect("nonzero").c;
                    work = self.sub_mul(&work, &c, &q, g);
                }
                None => {
                    rem.push(work.terms.remove(0));
                }
            }
        }
        Vector { terms: rem }
    }

    pub fn s_vector(&self, f: &Vector, g: &Vector) -> Option<Vector> {
        let (lf, lg) = (f.lead()?, g.lead()?);
        if lf.pos != lg.pos {
            return None;
        }
        let l = lf.m.lcm(&lg.m);
        let qf = lf.m.quotient_of(&l).expect("lcm");
        let qg = lg.m.quotient_of(&l).expect("lcm");
        let a = self.sub_mul(&Vector::default(), &(-lf.c.recip()), &qf, f);
        Some(self.sub_mul(&a, &lg.c.recip(), &qg, g))
    }

    /// Reduced Gröbner basis, monic, sorted ascending by leading term.
    pub fn groebner(&self, gens: &[Vector]) -> Vec<Vector> {
        let ideal_case = gens
            .iter()
            .flat_map(|g| g.terms.iter())
            .all(|t| t.pos == 0);
        let mut basis: Vec<Vector> = Vec::new();
        let mut pending: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
        let mut live: BTreeSet<(usize, usize)> = BTreeSet::new();

        let add = |basis: &mut Vec<Vector>,
                       pending: &mut BTreeSet<(u32, usize, usize)>,
                       live: &mut BTreeSet<(usize, usize)>,
                       v: Vector| {
            let j = basis.len();
            let lj = v.lead().expect("nonzero").clone();
            for (i, g) in basis.iter().enumerate() {
                let li = g.lead().expect("nonzero");
                if li.pos == lj.pos {
                    let deg = li.m.lcm(&lj.m).degree();
                    pending.insert((deg, i, j));
                    live.insert((i, j));
                }
            }
            basis.push(v);
        };

        for g in gens {
            let r = self.monic(&self.reduce(g, &basis));
            if !r.is_zero() {
                add(&mut basis, &mut pending, &mut live, r);
            }
        }

        while let Some(&key) = pending.iter().next() {
            pending.remove(&key);
            let (_, i, j) = key;
            live.remove(&(i, j));
            let (li, lj) = (
                basis[i].lead().expect("nonzero"),
                basis[j].lead().expect("nonzero"),
            );
            if ideal_case && li.m.is_coprime(&lj.m) {
                continue;
            }
            let l = li.m.lcm(&lj.m);
            let pos = li.pos;
            let chain = (0..basis.len()).any(|k| {
                if k == i || k == j {
                    return false;
                }
                let lk = basis[k].lead().expect("nonzero");
                let pair = |a: usize, b: usize| (a.min(b), a.max(b));
                lk.pos == pos
                    && lk.m.divides(&l)
                    && !live.contains(&pair(i, k))
                    && !live.contains(&pair(j, k))
            });
            if chain {
                continue;
            }
            let s = self.s_vector(&basis[i], &basis[j]).expect("same position");
            let r = self.reduce(&s, &basis);
            if !r.is_zero() {
                let r = self.monic(&r);
                add(&mut basis, &mut pending, &mut live, r);
            }
        }
        self.interreduce(basis)
    }

    pub fn interreduce(&self, basis: Vec<Vector>) -> Vec<Vector> {
        let mut keep: Vec<Vector> = Vec::new();
        for (i, g) in basis.iter().enumerate() {
            let lg = g.lead().expect("nonzero");
            let redundant = basis.iter().enumerate().any(|(k, h)| {
                if k == i {
                    return false;
                }
                let lh = h.lead().expect("nonzero");
                lh.pos == lg.pos
                    && lh.m.divides(&lg.m)
                    && (lh.m != lg.m || k < i)
            });
            if !redundant {
                keep.push(g.clone());
            }
        }
        let mut out = Vec::with_capacity(keep.len());
        for i in 0..keep.len() {
            let others: Vec<Vector> = keep
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != i)
                .map(|(_, v)| v.clone())
                .collect();
            let head = Vector {
                terms: vec![keep[i].terms[0].clone()],
            };
            let tail = Vector {
                terms: keep[i].terms[1..].to_vec(),
            };
            let tail = self.reduce(&tail, &others);
            let mut terms = head.terms;
            terms.extend(tail.terms);
            out.push(self.monic(&Vector { terms }));
        }
        out.sort_by(|a, b| self.cmp(a.lead().expect("nonzero"), b.lead().expect("nonzero")));
        out
    }

    /// Buchberger criterion: every S-vector reduces to zero.
    pub fn is_groebner(&self, basis: &[Vector]) -> bool {
        for i in 0..basis.len() {
            for j in i + 1..basis.len() {
                if let Some(s) = self.s_vector(&basis[i], &basis[j]) {
                    if !self.reduce(&s, basis).is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }
}
