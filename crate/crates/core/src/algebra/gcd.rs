//! Multivariate gcd over the rationals by recursive primitive remainder
//! sequences.

use super::polynomial::Polynomial;

/// Monic gcd; `gcd(0, 0) = 0`.
pub fn gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return Polynomial::one(a.ring());
    }
    let va = a.variables();
    let vb = b.variables();
    let v = *va.iter().chain(vb.iter()).max().expect("non-constant");
    if !va.contains(&v) {
        return gcd(a, &content(b, v));
    }
    if !vb.contains(&v) {
        return gcd(&content(a, v), b);
    }
    let ca = content(a, v);
    let cb = content(b, v);
    let c = gcd(&ca, &cb);
    let mut f = a.div_exact(&ca).expect("content divides");
    let mut g = b.div_exact(&cb).expect("content divides");
    if f.degree_in(v) < g.degree_in(v) {
        std::mem::swap(&mut f, &mut g);
    }
    while !g.is_zero() {
        let r = pseudo_remainder(&f, &g, v);
        f = g;
        g = if r.is_zero() {
            r
        } else {
            primitive_part(&r, v)
        };
    }
    (&c * &primitive_part(&f, v)).monic()
}

pub fn lcm(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a.is_zero() || b.is_zero() {
        return Polynomial::zero(a.ring());
    }
    let g = gcd(a, b);
    (&a.div_exact(&g).expect("gcd divides") * b).monic()
}

/// Gcd of the coefficients of `p` viewed as a polynomial in `v`.
fn content(p: &Polynomial, v: usize) -> Polynomial {
    let mut acc = Polynomial::zero(p.ring());
    for c in p.coefficients_in(v) {
        if c.is_zero() {
            continue;
        }
        acc = gcd(&acc, &c);
        if acc.is_one() {
            break;
        }
    }
    acc
}

fn primitive_part(p: &Polynomial, v: usize) -> Polynomial {
    let c = content(p, v);
    p.div_exact(&c).expect("content divides")
}

fn pseudo_remainder(f: &Polynomial, g: &Polynomial, v: usize) -> Polynomial {
    let dg = g.degree_in(v).unwrap_or(0);
    let lg = g.coefficients_in(v).pop().expect("nonzero");
    let ring = f.ring().clone();
    let mut f = f.clone();
    while !f.is_zero() {
        let df = f.degree_in(v).unwrap_or(0);
        if df < dg {
            break;
        }
        let lf = f.coefficients_in(v).pop().expect("nonzero");
        let shift = Polynomial::monomial(
            &ring,
            super::monomial::Monomial::var(ring.nvars(), v, df - dg),
            num_traits::One::one(),
        );
        f = &(&lg * &f) - &(&(&lf * &shift) * g);
    }
    f
}
