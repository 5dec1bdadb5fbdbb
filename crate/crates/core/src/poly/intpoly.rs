use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::Rational;

/// Dense polynomial with big-integer coefficients in ascending degree.
/// No trailing zeros; the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Self::from_i64s(&[0, 1])
    }

    /// `x - a`
    pub fn x_minus(a: i64) -> Self {
        Self::from_i64s(&[-a, 1])
    }

    /// `x (x-1) ⋯ (x-n+1)`
    pub fn falling_factorial(n: usize) -> Self {
        (0..n as i64).fold(Self::one(), |acc, k| &acc * &Self::x_minus(k))
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Non-negative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content, keeping the sign of every coefficient.
    pub fn primitive(&self) -> Self {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        Self::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        match self.degree() {
            None => Rational::zero(),
            Some(deg) => Rational::new(self.scaled_value(x), x.denom().pow(deg as u32)),
        }
    }

    // d^deg * p(n/d), an integer with the sign of p(n/d).
    fn scaled_value(&self, x: &Rational) -> BigInt {
        let (num, den) = (x.numer(), x.denom());
        let mut acc = BigInt::zero();
        let mut dpow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * num + c * &dpow;
            dpow *= den;
        }
        acc
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Sign of `p(x)`: -1, 0 or 1.
    pub fn sign_at(&self, x: &Rational) -> i32 {
        sign(&self.scaled_value(x))
    }

    /// Quotient and remainder over ℤ when the division is exact; `None`
    /// otherwise.
    pub fn div_exact(&self, divisor: &IntPoly) -> Option<IntPoly> {
        let (q, r) = self.div_rem_checked(divisor)?;
        r.is_zero().then_some(q)
    }

    // Long division that fails as soon as a quotient coefficient is not integral.
    fn div_rem_checked(&self, divisor: &IntPoly) -> Option<(IntPoly, IntPoly)> {
        let dd = divisor.degree()?;
        let lead = divisor.leading()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Some((IntPoly::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &q * c;
            }
            quot[i] = q;
        }
        Some((IntPoly::new(quot), IntPoly::new(rem)))
    }

    /// Pseudo-remainder scaled so that it is a positive multiple of the true
    /// remainder over ℚ.
    pub fn positive_prem(&self, divisor: &IntPoly) -> IntPoly {
        let dd = divisor.degree().expect("nonzero divisor");
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.clone();
        let mut applied = 0usize;
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let top = rem.leading().unwrap().clone();
            let shift = rd - dd;
            let mut next: Vec<BigInt> = rem.coeffs.iter().map(|c| c * &lead).collect();
            for (j, c) in divisor.coeffs.iter().enumerate() {
                next[j + shift] -= &top * c;
            }
            rem = IntPoly::new(next);
            applied += 1;
        }
        if lead.is_negative() && applied % 2 == 1 {
            -rem
        } else {
            rem
        }
    }

    /// Primitive gcd with positive leading coefficient.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let (mut a, mut b) = (self.primitive(), other.primitive());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.positive_prem(&b).primitive();
            a = b;
            b = r;
        }
        if a.leading().is_some_and(Signed::is_negative) {
            a = -a;
        }
        a
    }

    /// The product of the distinct irreducible factors, primitive with
    /// positive leading coefficient.
    pub fn squarefree(&self) -> IntPoly {
        let p = self.primitive();
        let g = p.gcd(&p.derivative());
        let mut s = if g.degree().unwrap_or(0) == 0 {
            p
        } else {
            p.div_exact(&g).expect("gcd divides its argument")
        };
        if s.leading().is_some_and(Signed::is_negative) {
            s = -s;
        }
        s
    }

    /// Multiplicity of `x` as a root (0 if not a root). Zero polynomial → 0.
    pub fn root_multiplicity(&self, x: &Rational) -> usize {
        let mut p = self.clone();
        let mut m = 0;
        while !p.is_zero() && p.sign_at(x) == 0 {
            m += 1;
            p = p.derivative();
        }
        m
    }

    /// Whether every coefficient alternates in sign, skipping none.
    pub fn has_alternating_signs(&self) -> bool {
        let Some(deg) = self.degree() else {
            return true;
        };
        self.coeffs.iter().enumerate().all(|(i, c)| {
            if c.is_zero() {
                return true;
            }
            let expected_positive = (deg - i) % 2 == 0;
            c.is_positive() == expected_positive
        })
    }
}

pub(crate) fn sign(x: &BigInt) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_negative() {
        -1
    } else {
        1
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            }
            first = false;
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Add for IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: IntPoly) -> IntPoly {
        &self + &rhs
    }
}

impl Sub for IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: IntPoly) -> IntPoly {
        &self - &rhs
    }
}

impl Mul for IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: IntPoly) -> IntPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for IntPoly {
    fn sum<I: Iterator<Item = IntPoly>>(iter: I) -> IntPoly {
        iter.fold(IntPoly::zero(), |a, b| &a + &b)
    }
}

impl std::iter::Product for IntPoly {
    fn product<I: Iterator<Item = IntPoly>>(iter: I) -> IntPoly {
        iter.fold(IntPoly::one(), |a, b| &a * &b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn canonical_form() {
        let p = IntPoly::from_i64s(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(IntPoly::from_i64s(&[0, 0]), IntPoly::zero());
        assert_eq!(IntPoly::zero().degree(), None);
    }

    #[test]
    fn display() {
        assert_eq!(
            IntPoly::from_i64s(&[0, 2, -3, 1]).to_string(),
            "x^3 - 3x^2 + 2x"
        );
        assert_eq!(IntPoly::from_i64s(&[-2, 0, -1]).to_string(), "-x^2 - 2");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }

    #[test]
    fn evaluation() {
        let tri = IntPoly::falling_factorial(3);
        assert_eq!(tri.eval(&q(3, 2)), q(-3, 8));
        assert_eq!(tri.sign_at(&q(3, 2)), -1);
        assert_eq!(IntPoly::zero().eval(&q(7, 3)), q(0, 1));
        assert_eq!(IntPoly::zero().sign_at(&q(7, 3)), 0);
        assert_eq!(tri.eval_int(&BigInt::from(5)), BigInt::from(60));
    }

    #[test]
    fn exact_division() {
        let a = IntPoly::falling_factorial(4);
        let b = IntPoly::falling_factorial(2);
        assert_eq!(
            a.div_exact(&b).unwrap(),
            &IntPoly::x_minus(2) * &IntPoly::x_minus(3)
        );
        assert!(a.div_exact(&IntPoly::x_minus(7)).is_none());
        assert!(IntPoly::from_i64s(&[1, 1])
            .div_exact(&IntPoly::from_i64s(&[0, 2]))
            .is_none());
    }

    #[test]
    fn squarefree_and_gcd() {
        // (x-1)^3 (x+2)^2 x
        let p = &(&IntPoly::x_minus(1).pow(3) * &IntPoly::x_minus(-2).pow(2)) * &IntPoly::x();
        let expected = &(&IntPoly::x_minus(1) * &IntPoly::x_minus(-2)) * &IntPoly::x();
        assert_eq!(p.squarefree(), expected);
        let g = p.gcd(&IntPoly::x_minus(1).pow(5).scale(&BigInt::from(-6)));
        assert_eq!(g, IntPoly::x_minus(1).pow(3));
        assert_eq!(p.root_multiplicity(&q(1, 1)), 3);
        assert_eq!(p.root_multiplicity(&q(-2, 1)), 2);
        assert_eq!(p.root_multiplicity(&q(5, 1)), 0);
    }

    fn small_poly() -> impl Strategy<Value = IntPoly> {
        prop::collection::vec(-20i64..=20, 0..8).prop_map(|c| IntPoly::from_i64s(&c))
    }

    proptest! {
        #[test]
        fn ring_laws(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
        }

        #[test]
        fn eval_is_a_homomorphism(a in small_poly(), b in small_poly(), n in -9i64..9, d in 1i64..9) {
            let x = q(n, d);
            prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
            prop_assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
        }

        #[test]
        fn product_divides_exactly(a in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).div_exact(&b), Some(a));
        }
    }
}
