//! Exact univariate polynomials over ℤ and ℚ, plus the chromatic engine.

mod chromatic;
mod intpoly;
mod ratpoly;

pub(crate) use chromatic::{blocks_of, clique_star_reduced};
pub use chromatic::{chromatic, ear_formula, orbital_chromatic, suspension_formula};
pub use intpoly::IntPoly;
pub use ratpoly::RatPoly;

use crate::Rational;

/// Anything with the real-root set of an integer polynomial.
///
/// A `RatPoly` is a positive rational multiple of its numerator, so signs and
/// roots are those of the numerator.
pub trait RealPoly {
    fn numerator(&self) -> &IntPoly;
    fn eval(&self, x: &Rational) -> Rational;
}

impl RealPoly for IntPoly {
    fn numerator(&self) -> &IntPoly {
        self
    }
    fn eval(&self, x: &Rational) -> Rational {
        IntPoly::eval(self, x)
    }
}

impl RealPoly for RatPoly {
    fn numerator(&self) -> &IntPoly {
        RatPoly::numerator(self)
    }
    fn eval(&self, x: &Rational) -> Rational {
        RatPoly::eval(self, x)
    }
}

/// Exact value of `p` at `x` by Horner's rule.
pub fn eval_rational<P: RealPoly + ?Sized>(p: &P, x: &Rational) -> Rational {
    p.eval(x)
}
