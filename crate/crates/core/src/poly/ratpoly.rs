use std::fmt;
use std::ops::Add;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntPoly;
use crate::Rational;

/// A rational polynomial stored as `numerator / denominator` with a positive
/// denominator coprime to the numerator's content.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatPoly {
    numerator: IntPoly,
    denominator: BigInt,
}

impl RatPoly {
    /// Panics if `denominator` is zero.
    pub fn new(numerator: IntPoly, denominator: BigInt) -> Self {
        assert!(!denominator.is_zero(), "zero denominator");
        let (mut numerator, mut denominator) = (numerator, denominator);
        if denominator.is_negative() {
            numerator = -numerator;
            denominator = -denominator;
        }
        if numerator.is_zero() {
            return RatPoly {
                numerator,
                denominator: BigInt::one(),
            };
        }
        let g = numerator.content().gcd(&denominator);
        if !g.is_one() {
            numerator = IntPoly::new(numerator.coeffs().iter().map(|c| c / &g).collect());
            denominator /= &g;
        }
        RatPoly {
            numerator,
            denominator,
        }
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &BigInt {
        &self.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn degree(&self) -> Option<usize> {
        self.numerator.degree()
    }

    /// The polynomial itself when the denominator is 1.
    pub fn as_int_poly(&self) -> Option<&IntPoly> {
        self.denominator.is_one().then_some(&self.numerator)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.numerator.eval(x) / Rational::from_integer(self.denominator.clone())
    }

    pub fn sign_at(&self, x: &Rational) -> i32 {
        self.numerator.sign_at(x)
    }

    pub fn coeff(&self, i: usize) -> Rational {
        Rational::new(self.numerator.coeff(i), self.denominator.clone())
    }
}

impl From<IntPoly> for RatPoly {
    fn from(p: IntPoly) -> Self {
        RatPoly {
            numerator: p,
            denominator: BigInt::one(),
        }
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        let l = self.denominator.lcm(&rhs.denominator);
        let a = self.numerator.scale(&(&l / &self.denominator));
        let b = rhs.numerator.scale(&(&l / &rhs.denominator));
        RatPoly::new(&a + &b, l)
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatPoly({self})")
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator.is_one() {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "({}) / {}", self.numerator, self.denominator)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes() {
        let p = RatPoly::new(IntPoly::from_i64s(&[2, 4]), BigInt::from(-6));
        assert_eq!(p.numerator(), &IntPoly::from_i64s(&[-1, -2]));
        assert_eq!(p.denominator(), &BigInt::from(3));
        let z = RatPoly::new(IntPoly::zero(), BigInt::from(5));
        assert_eq!(z.denominator(), &BigInt::one());
        assert_eq!(
            RatPoly::new(IntPoly::from_i64s(&[2, 2]), BigInt::from(2)).as_int_poly(),
            Some(&IntPoly::from_i64s(&[1, 1]))
        );
    }

    #[test]
    fn add_and_eval() {
        let half_x = RatPoly::new(IntPoly::x(), BigInt::from(2));
        let third = RatPoly::new(IntPoly::one(), BigInt::from(3));
        let s = &half_x + &third;
        assert_eq!(s.denominator(), &BigInt::from(6));
        let x = Rational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(s.eval(&x), Rational::new(BigInt::from(7), BigInt::from(12)));
        assert_eq!(s.coeff(1), Rational::new(BigInt::from(1), BigInt::from(2)));
    }
}
