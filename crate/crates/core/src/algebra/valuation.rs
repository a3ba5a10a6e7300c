//! p-adic valuation bookkeeping for exact rationals.

use crate::algebra::Rational;
use std::fmt;

/// The valuation v_p of a rational, with +infinity for 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PAdicValuation {
    pub prime: u64,
    /// None encodes +infinity (the valuation of 0).
    pub value: Option<i64>,
}

impl PAdicValuation {
    pub fn of(x: &Rational, prime: u64) -> Self {
        PAdicValuation {
            prime,
            value: x.valuation(prime),
        }
    }

    pub fn is_infinite(&self) -> bool {
        self.value.is_none()
    }

    /// v(ab) = v(a) + v(b).
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.prime, other.prime);
        PAdicValuation {
            prime: self.prime,
            value: match (self.value, other.value) {
                (Some(a), Some(b)) => Some(a + b),
                _ => None,
            },
        }
    }

    /// Lower bound min(v(a), v(b)) for v(a + b).
    pub fn min(&self, other: &Self) -> Self {
        assert_eq!(self.prime, other.prime);
        PAdicValuation {
            prime: self.prime,
            value: match (self.value, other.value) {
                (Some(a), Some(b)) => Some(a.min(b)),
                (Some(a), None) => Some(a),
                (None, b) => b,
            },
        }
    }

    pub fn at_least(&self, bound: i64) -> bool {
        self.value.map(|v| v >= bound).unwrap_or(true)
    }
}

impl fmt::Display for PAdicValuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value {
            Some(v) => write!(f, "v_{}={}", self.prime, v),
            None => write!(f, "v_{}=+inf", self.prime),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiplicativity_and_ultrametric() {
        let a = Rational::new(18, 5);
        let b = Rational::new(3, 4);
        let va = PAdicValuation::of(&a, 3);
        let vb = PAdicValuation::of(&b, 3);
        let vab = PAdicValuation::of(&(&a * &b), 3);
        assert_eq!(vab, va.add(&vb));
        let vsum = PAdicValuation::of(&(&a + &b), 3);
        assert!(vsum.value.unwrap() >= va.min(&vb).value.unwrap());
    }
}
