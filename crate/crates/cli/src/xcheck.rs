//! Randomized agreement test between operator membership and Gröbner
//! reduction.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use noether_core::noetherian::{noetherian_membership, order_zero_membership};
use noether_core::{rat, GroebnerBasis, Monomial, Polynomial, RingRef};

use crate::commands::{noetherian_system, show, Options};
use crate::error::CliError;
use crate::problem::ProblemFile;

pub const DEFAULT_TRIALS: usize = 100;
pub const DEFAULT_SEED: u64 = 0;

const KINDS: [&str; 4] = ["multiple", "near-miss", "radical-power", "random"];

fn random_monomial(rng: &mut ChaCha8Rng, ring: &RingRef, max_exp: u32) -> Monomial {
    Monomial::new((0..ring.nvars()).map(|_| rng.gen_range(0..=max_exp)).collect())
}

fn random_poly(rng: &mut ChaCha8Rng, ring: &RingRef, max_exp: u32, max_terms: usize) -> Polynomial {
    let count = rng.gen_range(1..=max_terms);
    let terms: Vec<(Monomial, _)> = (0..count)
        .map(|_| {
            let m = random_monomial(rng, ring, max_exp);
            let mut c = rng.gen_range(-3i64..=3);
            if c == 0 {
                c = 1;
            }
            (m, rat(c))
        })
        .collect();
    Polynomial::from_terms(ring, terms)
}

fn combination(rng: &mut ChaCha8Rng, ring: &RingRef, gens: &[Polynomial]) -> Polynomial {
    let mut acc = Polynomial::zero(ring);
    for g in gens {
        if rng.gen_bool(0.6) {
            acc = &acc + &(g * &random_poly(rng, ring, 1, 2));
        }
    }
    if acc.is_zero() {
        let g = &gens[rng.gen_range(0..gens.len())];
        acc = g * &random_poly(rng, ring, 1, 2);
    }
    acc
}

pub fn run(problem: &ProblemFile, opts: &Options) -> Result<Value, CliError> {
    let sys = noetherian_system(problem, opts)?;
    let ring = problem.ring.clone();
    let gb = GroebnerBasis::ideal(&ring, &sys.ideal)?;
    let trials = opts.trials.unwrap_or(DEFAULT_TRIALS);
    let seed = opts.seed.unwrap_or(DEFAULT_SEED);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut agree = 0usize;
    let mut order0 = true;
    let mut members = 0usize;
    let mut disagreements = Vec::new();
    for i in 0..trials {
        let kind = KINDS[i % KINDS.len()];
        let phi = match kind {
            "multiple" => combination(&mut rng, &ring, &sys.ideal),
            "near-miss" => {
                let base = combination(&mut rng, &ring, &sys.ideal);
                let mut m = Polynomial::monomial(&ring, random_monomial(&mut rng, &ring, 2), rat(1));
                for _ in 0..20 {
                    if !gb.reduce_poly(&m)?.is_zero() {
                        break;
                    }
                    m = Polynomial::monomial(&ring, random_monomial(&mut rng, &ring, 2), rat(1));
                }
                let c = rat(rng.gen_range(1i64..=3));
                &base + &(&m * &Polynomial::constant(&ring, c))
            }
            "radical-power" => {
                let p = &sys.variety_ideal[rng.gen_range(0..sys.variety_ideal.len())];
                let e = rng.gen_range(1..=sys.nil_index + 1);
                let mut acc = Polynomial::monomial(&ring, random_monomial(&mut rng, &ring, 1), rat(1));
                for _ in 0..e {
                    acc = &acc * p;
                }
                acc
            }
            _ => random_poly(&mut rng, &ring, 3, 4),
        };
        let by_gb = gb.contains_poly(&phi)?;
        let by_ops = noetherian_membership(&phi, &sys)?;
        if by_gb {
            members += 1;
        }
        if by_gb == by_ops {
            agree += 1;
        } else {
            disagreements.push(json!({"trial": i, "kind": kind, "phi": show(&phi), "groebner": by_gb}));
        }
        if order_zero_membership(&phi, &sys)? != by_gb {
            order0 = false;
        }
    }
    let prime = gb.generators() == GroebnerBasis::ideal(&ring, &sys.variety_ideal)?.generators();
    Ok(json!({
        "trials": trials,
        "seed": seed,
        "agree": agree,
        "members": members,
        "disagreements": disagreements,
        "order0_suffices": order0,
        "prime": prime,
    }))
}
