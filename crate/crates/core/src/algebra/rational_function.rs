use std::fmt;

use super::gcd::gcd;
use super::linalg::Scalar;
use super::polynomial::{Polynomial, Rational};
use super::ring::{same_ring, RingRef};

/// Element of the fraction field of a polynomial ring, kept as a reduced
/// fraction with monic denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        assert!(same_ring(num.ring(), den.ring()));
        if num.is_zero() {
            return Self::from_poly(num);
        }
        let g = gcd(&num, &den);
        let mut num = num.div_exact(&g).expect("gcd divides");
        let mut den = den.div_exact(&g).expect("gcd divides");
        let lc = den.leading_coeff().expect("nonzero").clone();
        if lc != num_traits::One::one() {
            let inv = lc.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RationalFunction { num, den }
    }

    pub fn from_poly(p: Polynomial) -> Self {
        let den = Polynomial::one(p.ring());
        RationalFunction { num: p, den }
    }

    pub fn constant(ring: &RingRef, c: Rational) -> Self {
        Self::from_poly(Polynomial::constant(ring, c))
    }

    pub fn ring(&self) -> &RingRef {
        self.num.ring()
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }
}

impl Scalar for RationalFunction {
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn zero_like(&self) -> Self {
        Self::from_poly(Polynomial::zero(self.ring()))
    }
    fn one_like(&self) -> Self {
        Self::from_poly(Polynomial::one(self.ring()))
    }
    fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return Self::new(&self.num + &o.num, self.den.clone());
        }
        Self::new(
            &(&self.num * &o.den) + &(&o.num * &self.den),
            &self.den * &o.den,
        )
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn mul(&self, o: &Self) -> Self {
        if self.num.is_zero() || o.num.is_zero() {
            return self.zero_like();
        }
        Self::new(&self.num * &o.num, &self.den * &o.den)
    }
    fn div(&self, o: &Self) -> Self {
        assert!(!o.num.is_zero(), "division by zero");
        Self::new(&self.num * &o.den, &self.den * &o.num)
    }
    fn neg(&self) -> Self {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
