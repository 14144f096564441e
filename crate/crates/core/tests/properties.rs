use noether_core::algebra::polynomial::rat;
use noether_core::groebner::{buchberger, syzygy_module};
use noether_core::noetherian::{noetherian_membership, noetherian_operators};
use noether_core::residue::residue_functional;
use noether_core::resolution::{be_exactness, dualize, resolve_ideal, StepVerdict};
use noether_core::{
    DiffOperator, FreeModuleElement, GroebnerBasis, ModuleOrder, Monomial, PolyMatrix, Polynomial, Ring,
    RingRef, VariableSplit,
};
use proptest::prelude::*;

fn ring2() -> RingRef {
    Ring::grevlex(&["x", "y"])
}

fn ring3() -> RingRef {
    Ring::grevlex(&["x", "y", "z"])
}

fn poly(ring: RingRef, max_exp: u32, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    let n = ring.nvars();
    prop::collection::vec(
        (prop::collection::vec(0..=max_exp, n), -4i64..=4),
        0..=max_terms,
    )
    .prop_map(move |terms| {
        Polynomial::from_terms(
            &ring,
            terms.into_iter().map(|(e, c)| (Monomial::new(e), rat(c))),
        )
    })
}

fn monomial_gens(ring: RingRef, count: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Vec<Polynomial>> {
    let n = ring.nvars();
    prop::collection::vec(prop::collection::vec(0u32..=2, n), count).prop_map(move |es| {
        es.into_iter()
            .filter(|e| e.iter().any(|&x| x > 0))
            .map(|e| Polynomial::monomial(&ring, Monomial::new(e), rat(1)))
            .collect()
    })
}

/// Dimension of `k[x]/I` for a monomial ideal from its Hilbert function:
/// the number of standard monomials of degree exactly `d` is eventually a
/// polynomial of degree `dim - 1`.
fn hilbert_dimension(n: usize, gens: &[Monomial]) -> i64 {
    if gens.iter().any(Monomial::is_one) {
        return -1;
    }
    let top = 24u32;
    let mut counts = Vec::new();
    for d in 0..=top {
        let mut count = 0i64;
        let mut stack = vec![(Vec::<u32>::new(), d)];
        while let Some((prefix, left)) = stack.pop() {
            if prefix.len() == n - 1 {
                let mut e = prefix.clone();
                e.push(left);
                let m = Monomial::new(e);
                if !gens.iter().any(|g| g.divides(&m)) {
                    count += 1;
                }
                continue;
            }
            for a in 0..=left {
                let mut p = prefix.clone();
                p.push(a);
                stack.push((p, left - a));
            }
        }
        counts.push(count);
    }
    let mut seq: Vec<i64> = counts[12..].to_vec();
    let mut k = 0;
    while seq.iter().any(|&v| v != 0) {
        seq = seq.windows(2).map(|w| w[1] - w[0]).collect();
        k += 1;
    }
    k
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly(ring3(), 3, 4), b in poly(ring3(), 3, 4), c in poly(ring3(), 3, 4)) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn print_parse_round_trip(a in poly(ring3(), 4, 6)) {
        let text = a.to_string();
        let back = Polynomial::parse(a.ring(), &text).unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn diff_is_bilinear(
        a in poly(ring2(), 3, 4),
        b in poly(ring2(), 3, 4),
        c1 in poly(ring2(), 1, 2),
        c2 in poly(ring2(), 1, 2),
        beta in prop::collection::vec(0u32..=2, 2),
    ) {
        let r = ring2();
        let l1 = DiffOperator::new(&r, vec![0, 1], vec![(beta.clone(), c1.clone()), (vec![0, 0], c2.clone())]).unwrap();
        let l2 = DiffOperator::new(&r, vec![0, 1], vec![(vec![1, 0], c2)]).unwrap();
        prop_assert_eq!(l1.apply(&(&a + &b)).unwrap(), &l1.apply(&a).unwrap() + &l1.apply(&b).unwrap());
        let sum = l1.add(&l2).unwrap();
        prop_assert_eq!(sum.apply(&a).unwrap(), &l1.apply(&a).unwrap() + &l2.apply(&a).unwrap());
    }

    #[test]
    fn substitution_is_a_homomorphism(a in poly(ring2(), 3, 4), b in poly(ring2(), 3, 4), g in poly(ring2(), 2, 3)) {
        let bind = [(1usize, g)];
        let ab = (&a * &b).substitute(&bind).unwrap();
        prop_assert_eq!(ab, &a.substitute(&bind).unwrap() * &b.substitute(&bind).unwrap());
        let s = (&a + &b).substitute(&bind).unwrap();
        prop_assert_eq!(s, &a.substitute(&bind).unwrap() + &b.substitute(&bind).unwrap());
    }

    #[test]
    fn normal_form_is_a_section(
        gens in prop::collection::vec(poly(ring2(), 2, 3), 1..=3),
        phi in poly(ring2(), 3, 5),
        h in poly(ring2(), 2, 3),
    ) {
        let r = ring2();
        let gb = GroebnerBasis::ideal(&r, &gens).unwrap();
        prop_assert!(gb.satisfies_buchberger_criterion());
        let nf = gb.reduce_poly(&phi).unwrap();
        prop_assert!(gb.contains_poly(&(&phi - &nf)).unwrap());
        prop_assert_eq!(gb.reduce_poly(&nf).unwrap(), nf);
        // absorbency
        let member = &gens[0] * &h;
        prop_assert!(gb.contains_poly(&member).unwrap());
        prop_assert!(gb.contains_poly(&(&member * &phi)).unwrap());
    }

    #[test]
    fn module_basis_satisfies_criterion(
        cols in prop::collection::vec(prop::collection::vec(poly(ring2(), 2, 2), 2), 1..=3),
    ) {
        let r = ring2();
        let gens: Vec<FreeModuleElement> = cols.into_iter().map(|c| FreeModuleElement::new(&r, c).unwrap()).collect();
        for order in [ModuleOrder::TermOverPosition, ModuleOrder::PositionOverTerm] {
            let gb = buchberger(&r, 2, &gens, order).unwrap();
            prop_assert!(gb.satisfies_buchberger_criterion());
            for g in &gens {
                prop_assert!(gb.contains(g).unwrap());
            }
        }
    }

    #[test]
    fn syzygies_are_annihilated(entries in prop::collection::vec(poly(ring2(), 2, 2), 3)) {
        let r = ring2();
        let m = PolyMatrix::row_vector(&r, &entries).unwrap();
        let s = syzygy_module(&m).unwrap();
        prop_assert!(m.mul(&s).unwrap().is_zero());
        // Koszul relations are in the span
        let cols: Vec<FreeModuleElement> = s.columns().into_iter().map(|c| FreeModuleElement::new(&r, c).unwrap()).collect();
        let gb = buchberger(&r, 3, &cols, ModuleOrder::TermOverPosition).unwrap();
        let zero = Polynomial::zero(&r);
        let koszul = FreeModuleElement::new(&r, vec![entries[1].clone(), -&entries[0], zero]).unwrap();
        prop_assert!(gb.contains(&koszul).unwrap());
    }

    #[test]
    fn dimension_matches_hilbert_function(gens in monomial_gens(Ring::grevlex(&["a", "b", "c", "d"]), 1..=4)) {
        prop_assume!(!gens.is_empty());
        let r = gens[0].ring().clone();
        let gb = GroebnerBasis::ideal(&r, &gens).unwrap();
        let leads: Vec<Monomial> = gens.iter().map(|g| g.leading_monomial().unwrap().clone()).collect();
        prop_assert_eq!(gb.dimension(), hilbert_dimension(4, &leads));
    }

    #[test]
    fn betti_numbers_ignore_generator_order(gens in monomial_gens(ring3(), 2..=4), seed in 0usize..24) {
        prop_assume!(gens.len() >= 2);
        let r = ring3();
        let a = resolve_ideal(&r, &gens).unwrap();
        let mut perm = gens.clone();
        perm.rotate_left(seed % gens.len());
        if seed % 2 == 1 {
            perm.reverse();
        }
        perm.push(gens[0].clone());
        let b = resolve_ideal(&r, &perm).unwrap();
        prop_assert_eq!(a.betti(), b.betti());
        prop_assert!(a.is_minimal());
        a.complex().check_complex().unwrap();
        for step in be_exactness(a.complex()).unwrap() {
            prop_assert_eq!(step.verdict, StepVerdict::Exact);
            prop_assert!(step.codim >= step.k);
        }
        prop_assert_eq!(&dualize(&dualize(a.complex())), a.complex());
    }

    #[test]
    fn residue_is_invariant_under_j(phi in poly(ring2(), 3, 4), q1 in poly(ring2(), 2, 3), q2 in poly(ring2(), 2, 3)) {
        let r = ring2();
        let gens = vec![
            Polynomial::parse(&r, "x^2 - y").unwrap(),
            Polynomial::parse(&r, "y^2").unwrap(),
        ];
        let res = residue_functional(&gens).unwrap();
        let shifted = &(&phi + &(&gens[0] * &q1)) + &(&gens[1] * &q2);
        prop_assert_eq!(res.residue(&phi).unwrap(), res.residue(&shifted).unwrap());
    }

    #[test]
    fn operators_agree_with_groebner(phi in poly(ring2(), 3, 4)) {
        let r = ring2();
        let gens = vec![
            Polynomial::parse(&r, "x^2").unwrap(),
            Polynomial::parse(&r, "x*y").unwrap(),
            Polynomial::parse(&r, "y^2").unwrap(),
        ];
        let split = VariableSplit::from_names(&r, &[], &["x", "y"]).unwrap();
        let sys = noetherian_operators(&gens, &split, None).unwrap();
        let gb = GroebnerBasis::ideal(&r, &gens).unwrap();
        prop_assert_eq!(noetherian_membership(&phi, &sys).unwrap(), gb.contains_poly(&phi).unwrap());
    }
}

#[test]
fn regular_sequences_have_binomial_betti() {
    let r = Ring::grevlex(&["a", "b", "c", "d"]);
    let names = ["a", "b", "c", "d"];
    for p in 1..=4 {
        let gens: Vec<Polynomial> = names[..p].iter().map(|v| Polynomial::parse(&r, v).unwrap()).collect();
        let betti = resolve_ideal(&r, &gens).unwrap().betti();
        let binom: Vec<usize> = (0..=p)
            .map(|k| (0..k).fold(1usize, |acc, i| acc * (p - i) / (i + 1)))
            .collect();
        assert_eq!(betti, binom, "p = {p}");
    }
}
