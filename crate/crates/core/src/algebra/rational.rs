//! Arbitrary-precision rational scalars.
//!
//! `Rational` wraps `num_rational::BigRational`, which already maintains the
//! lowest-terms / positive-denominator invariants we need. The wrapper owns
//! the parsing and display conventions used by fixtures and reports and the
//! handful of number-theoretic helpers the rest of the engine relies on.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// `num/den` reduced to lowest terms with positive denominator.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        Rational(self.0.recip())
    }

    pub fn pow(&self, exp: i64) -> Self {
        if exp >= 0 {
            Rational(num_traits::pow::Pow::pow(&self.0, exp as u64))
        } else {
            Rational(num_traits::pow::Pow::pow(&self.0.recip(), (-exp) as u64))
        }
    }

    /// p-adic valuation v_p(self); `None` encodes v_p(0) = +inf.
    pub fn valuation(&self, p: u64) -> Option<i64> {
        assert!(p >= 2, "prime must be >= 2");
        if self.is_zero() {
            return None;
        }
        let p = BigInt::from(p);
        Some(int_valuation(self.numer(), &p) - int_valuation(self.denom(), &p))
    }

    /// |self|_p = p^{-v_p(self)} as an exact rational.
    pub fn padic_abs(&self, p: u64) -> Rational {
        match self.valuation(p) {
            None => Rational::zero(),
            Some(v) => Rational::from_int(p as i64).pow(-v),
        }
    }

    /// Canonical residue of a p-integral rational modulo p^m, in [0, p^m).
    pub fn residue_mod_prime_power(&self, p: u64, m: u32) -> Result<BigUint> {
        let modulus = BigInt::from(p).pow(m);
        let den = self.denom();
        if den.gcd(&BigInt::from(p)) != BigInt::one() {
            return Err(Error::Precision(format!(
                "denominator {den} not invertible modulo {p}^{m}"
            )));
        }
        let den_inv = mod_inverse(den, &modulus).expect("denominator coprime to modulus");
        let r = (self.numer() * den_inv).mod_floor(&modulus);
        Ok(r.to_biguint().expect("mod_floor is nonnegative"))
    }

    /// a = b modulo p^m, i.e. v_p(a - b) >= m.
    pub fn congruent_mod(&self, other: &Rational, p: u64, m: u32) -> bool {
        match (self.clone() - other.clone()).valuation(p) {
            None => true,
            Some(v) => v >= m as i64,
        }
    }
}

fn int_valuation(n: &BigInt, p: &BigInt) -> i64 {
    let mut n = n.abs();
    let mut v = 0i64;
    while (&n % p).is_zero() {
        n /= p;
        v += 1;
    }
    v
}

fn mod_inverse(a: &BigInt, modulus: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(modulus);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(modulus))
    } else {
        None
    }
}

/// n! as a rational.
pub fn factorial(n: u64) -> Rational {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    Rational::from_bigint(acc)
}

pub fn binomial(n: u64, k: u64) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Rational::from_bigint(acc)
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse_int = |t: &str| -> Result<BigInt> {
            t.parse::<BigInt>()
                .map_err(|_| Error::Parse(format!("bad integer `{t}`")))
        };
        match s.split_once('/') {
            Some((n, d)) => {
                let den = parse_int(d)?;
                if den.is_zero() {
                    return Err(Error::Parse(format!("zero denominator in `{s}`")));
                }
                Ok(Rational(BigRational::new(parse_int(n)?, den)))
            }
            None => Ok(Rational(BigRational::from_integer(parse_int(s)?))),
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero");
        Rational(self.0 / rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl AddAssign for Rational {
    fn add_assign(&mut self, rhs: Rational) {
        self.0 += rhs.0;
    }
}

impl SubAssign for Rational {
    fn sub_assign(&mut self, rhs: Rational) {
        self.0 -= rhs.0;
    }
}

impl MulAssign for Rational {
    fn mul_assign(&mut self, rhs: Rational) {
        self.0 *= rhs.0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_sign() {
        let r = Rational::new(4, -6);
        assert_eq!(r.to_string(), "-2/3");
        assert_eq!(r.denom(), &BigInt::from(3));
    }

    #[test]
    fn valuation_basics() {
        assert_eq!(Rational::new(36, 1).valuation(3), Some(2));
        assert_eq!(Rational::new(1, 9).valuation(3), Some(-2));
        assert_eq!(Rational::zero().valuation(5), None);
        assert_eq!(Rational::new(10, 3).padic_abs(5), Rational::new(1, 5));
    }

    #[test]
    fn residue_of_p_integral() {
        // -1/2 mod 5^2: inverse of 2 is 13, so -13 = 12 mod 25.
        let r = Rational::new(-1, 2);
        assert_eq!(r.residue_mod_prime_power(5, 2).unwrap(), BigUint::from(12u32));
    }

    #[test]
    fn factorial_and_binomial() {
        assert_eq!(factorial(5), Rational::from_int(120));
        assert_eq!(binomial(7, 3), Rational::from_int(35));
    }

    #[test]
    fn parse_round_trip() {
        for s in ["0", "-7", "3/2", "-11/17"] {
            let r: Rational = s.parse().unwrap();
            assert_eq!(r.to_string(), s);
        }
    }
}
