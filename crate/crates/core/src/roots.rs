//! Exact real-root isolation for integer polynomials.
//!
//! Roots are isolated on the square-free part with a Sturm sequence, by
//! bisection of the interval `(-B, B]` where `B` is the Cauchy bound. A root
//! `u/v` of a primitive polynomial has `v` dividing the leading coefficient
//! `c`, and two such rationals differ by at least `1/c²`; so once an
//! isolating interval is narrower than that, its simplest rational is the
//! only possible rational root and a single exact evaluation settles it.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{IntPoly, RealPoly};
use crate::Rational;

/// A half-open interval `(lo, hi]` holding exactly one root of a polynomial
/// of degree `poly_degree`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IsolatingInterval {
    pub lo: Rational,
    pub hi: Rational,
    pub poly_degree: usize,
}

impl IsolatingInterval {
    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo < x && x <= &self.hi
    }
}

impl fmt::Debug for IsolatingInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}]", self.lo, self.hi)
    }
}

/// A real algebraic number: exact when rational, otherwise an isolating
/// interval together with a square-free polynomial vanishing at it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RealRoot {
    Rational(Rational),
    Irrational {
        interval: IsolatingInterval,
        defining: IntPoly,
    },
}

impl RealRoot {
    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            RealRoot::Rational(r) => Some(r),
            RealRoot::Irrational { .. } => None,
        }
    }

    pub fn interval(&self) -> Option<&IsolatingInterval> {
        match self {
            RealRoot::Rational(_) => None,
            RealRoot::Irrational { interval, .. } => Some(interval),
        }
    }

    /// A rational upper bound for the root: the value itself or the interval end.
    pub fn upper(&self) -> &Rational {
        match self {
            RealRoot::Rational(r) => r,
            RealRoot::Irrational { interval, .. } => &interval.hi,
        }
    }

    /// Compares the root with a rational number exactly.
    pub fn cmp_rational(&self, x: &Rational) -> Ordering {
        match self {
            RealRoot::Rational(r) => r.cmp(x),
            RealRoot::Irrational { interval, defining } => {
                if x >= &interval.hi {
                    Ordering::Less
                } else if x <= &interval.lo {
                    Ordering::Greater
                } else if Sturm::new(defining.clone()).count(&interval.lo, x) == 1 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
        }
    }
}

impl fmt::Display for RealRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RealRoot::Rational(r) => write!(f, "{r}"),
            RealRoot::Irrational { interval, .. } => write!(f, "{interval:?}"),
        }
    }
}

/// All distinct real roots of a polynomial, in ascending order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootReport {
    pub roots: Vec<RealRoot>,
    /// Multiplicity of each entry of `roots` in the original polynomial.
    pub multiplicities: Vec<usize>,
}

impl RootReport {
    pub fn exact_rational_roots(&self) -> Vec<Rational> {
        self.roots
            .iter()
            .filter_map(|r| r.as_rational().cloned())
            .collect()
    }

    pub fn intervals(&self) -> Vec<IsolatingInterval> {
        self.roots
            .iter()
            .filter_map(|r| r.interval().cloned())
            .collect()
    }

    pub fn max(&self) -> Option<&RealRoot> {
        self.roots.last()
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }
}

pub fn default_width() -> Rational {
    Rational::new(BigInt::one(), BigInt::from(1024))
}

/// Isolates every distinct real root. Irrational roots get intervals no
/// wider than `width`.
pub fn isolate_real_roots(p: &IntPoly, width: &Rational) -> Result<RootReport> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !width.is_positive() {
        return Err(Error::InvalidArgument(format!(
            "isolation width must be positive, got {width}"
        )));
    }
    let q = p.squarefree();
    let sturm = Sturm::new(q.clone());
    let bound = cauchy_bound(&q);
    let lead = q.leading().unwrap().abs();
    let separation = Rational::new(BigInt::one(), &lead * &lead);

    let mut pieces = Vec::new();
    let total = sturm.count(&-bound.clone(), &bound);
    split(&sturm, -bound.clone(), bound, total, &mut pieces);

    let mut roots = Vec::with_capacity(pieces.len());
    for (lo, hi) in pieces {
        roots.push(refine_piece(&sturm, lo, hi, &separation, width));
    }
    let multiplicities = roots.iter().map(|r| multiplicity(p, r)).collect();
    Ok(RootReport {
        roots,
        multiplicities,
    })
}

/// The largest real root, or `None` if there is none.
pub fn max_real_root(p: &IntPoly) -> Result<Option<RealRoot>> {
    max_real_root_with(p, &default_width())
}

pub fn max_real_root_with(p: &IntPoly, width: &Rational) -> Result<Option<RealRoot>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let q = p.squarefree();
    let sturm = Sturm::new(q.clone());
    let mut hi = cauchy_bound(&q);
    let mut lo = -hi.clone();
    if sturm.count(&lo, &hi) == 0 {
        return Ok(None);
    }
    // shrink to an interval holding only the largest root
    loop {
        let above = sturm.count(&lo, &hi);
        if above == 1 {
            break;
        }
        let mid = (&lo + &hi) / Rational::from_integer(2.into());
        if sturm.count(&mid, &hi) >= 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let lead = q.leading().unwrap().abs();
    let separation = Rational::new(BigInt::one(), &lead * &lead);
    Ok(Some(refine_piece(&sturm, lo, hi, &separation, width)))
}

/// An isolating interval `(lo, hi]` with `lo >= x` for the smallest root
/// of `p` greater than `x`, narrowed to `width`.
pub fn first_root_above(
    p: &IntPoly,
    x: &Rational,
    width: &Rational,
) -> Result<Option<IsolatingInterval>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let q = p.squarefree();
    let sturm = Sturm::new(q.clone());
    if sturm.count_above(x) == 0 {
        return Ok(None);
    }
    let mut lo = x.clone();
    let mut hi = cauchy_bound(&q);
    if hi <= lo {
        hi = &lo + Rational::one();
    }
    while sturm.count(&lo, &hi) > 1 || &hi - &lo > *width {
        let mid = half(&lo, &hi);
        if sturm.count(&lo, &mid) >= 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(Some(IsolatingInterval {
        lo,
        hi,
        poly_degree: q.degree().unwrap_or(0),
    }))
}

/// Exact sign of `p(x)`.
pub fn sign_at<P: RealPoly + ?Sized>(p: &P, x: &Rational) -> i32 {
    p.numerator().sign_at(x)
}

/// Whether `p` has a real root strictly greater than `x`.
pub fn has_root_above<P: RealPoly + ?Sized>(p: &P, x: &Rational) -> Result<bool> {
    let num = p.numerator();
    if num.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let sturm = Sturm::new(num.squarefree());
    Ok(sturm.count_above(x) > 0)
}

/// Number of distinct real roots of `p` strictly greater than `r`.
pub fn count_roots_above<P: RealPoly + ?Sized>(p: &P, r: &RealRoot) -> Result<usize> {
    let num = p.numerator();
    if num.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let q = Sturm::new(num.squarefree());
    match r {
        RealRoot::Rational(x) => Ok(q.count_above(x)),
        RealRoot::Irrational { interval, defining } => {
            let d = Sturm::new(defining.clone());
            let shared = num.gcd(defining);
            let r_is_root = shared.degree().unwrap_or(0) > 0
                && Sturm::new(shared.squarefree()).count(&interval.lo, &interval.hi) == 1;
            let wanted = usize::from(r_is_root);
            let (mut lo, mut hi) = (interval.lo.clone(), interval.hi.clone());
            // narrow until the only root of p left in (lo, hi] is r itself, if any
            while q.count(&lo, &hi) > wanted {
                let mid = (&lo + &hi) / Rational::from_integer(2.into());
                if d.count(&lo, &mid) == 1 {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            Ok(q.count_above(&hi))
        }
    }
}

/// Whether `p` has a real root strictly greater than `r`.
pub fn has_root_above_root<P: RealPoly + ?Sized>(p: &P, r: &RealRoot) -> Result<bool> {
    Ok(count_roots_above(p, r)? > 0)
}

/// `1 + max|c_i| / |c_d|`; every real root lies strictly inside `(-B, B)`.
pub fn cauchy_bound(p: &IntPoly) -> Rational {
    let lead = p.leading().expect("nonzero polynomial").abs();
    let top = p.coeffs().iter().map(Signed::abs).max().unwrap_or_default();
    Rational::one() + Rational::new(top, lead)
}

/// Number of distinct real roots of the square-free part in `(a, b]`.
pub fn count_roots_between(p: &IntPoly, a: &Rational, b: &Rational) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(Sturm::new(p.squarefree()).count(a, b))
}

/// Number of distinct real roots.
pub fn count_real_roots(p: &IntPoly) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let s = Sturm::new(p.squarefree());
    Ok(s.variations_neg_inf() - s.variations_pos_inf())
}

/// The rational with the smallest denominator (then smallest magnitude) in `[a, b]`.
pub fn simplest_between(a: &Rational, b: &Rational) -> Rational {
    debug_assert!(a <= b);
    if !a.is_positive() && !b.is_negative() {
        return Rational::zero();
    }
    if b.is_negative() {
        return -simplest_between(&-b.clone(), &-a.clone());
    }
    let fl = a.floor();
    if &fl == a {
        return fl;
    }
    let up = &fl + Rational::one();
    if &up <= b {
        return up;
    }
    let inner = simplest_between(&(b - &fl).recip(), &(a - &fl).recip());
    fl + inner.recip()
}

/// A Sturm sequence of a square-free polynomial.
struct Sturm {
    seq: Vec<IntPoly>,
}

impl Sturm {
    fn new(p: IntPoly) -> Self {
        let mut seq = vec![p.clone()];
        let mut prev = p;
        let mut cur = prev.derivative();
        while !cur.is_zero() {
            let next = -prev.positive_prem(&cur).primitive();
            seq.push(cur.clone());
            prev = cur;
            cur = next;
        }
        Sturm { seq }
    }

    fn variations<I: Iterator<Item = i32>>(signs: I) -> usize {
        let mut last = 0;
        let mut count = 0;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    fn variations_at(&self, x: &Rational) -> usize {
        Self::variations(self.seq.iter().map(|p| p.sign_at(x)))
    }

    fn variations_pos_inf(&self) -> usize {
        Self::variations(self.seq.iter().map(lead_sign))
    }

    fn variations_neg_inf(&self) -> usize {
        Self::variations(self.seq.iter().map(|p| {
            let s = lead_sign(p);
            if p.degree().unwrap_or(0).is_odd() {
                -s
            } else {
                s
            }
        }))
    }

    /// Distinct roots in `(a, b]`.
    fn count(&self, a: &Rational, b: &Rational) -> usize {
        self.variations_at(a) - self.variations_at(b)
    }

    fn count_above(&self, x: &Rational) -> usize {
        self.variations_at(x) - self.variations_pos_inf()
    }

    fn poly(&self) -> &IntPoly {
        &self.seq[0]
    }
}

fn lead_sign(p: &IntPoly) -> i32 {
    p.leading()
        .map_or(0, |c| if c.is_negative() { -1 } else { 1 })
}

fn half(a: &Rational, b: &Rational) -> Rational {
    (a + b) / Rational::from_integer(2.into())
}

// Splits (lo, hi] holding `count` roots into single-root pieces, ascending.
fn split(s: &Sturm, lo: Rational, hi: Rational, count: usize, out: &mut Vec<(Rational, Rational)>) {
    match count {
        0 => {}
        1 => out.push((lo, hi)),
        _ => {
            let mid = half(&lo, &hi);
            let left = s.count(&lo, &mid);
            split(s, lo, mid.clone(), left, out);
            split(s, mid, hi, count - left, out);
        }
    }
}

fn refine_piece(
    s: &Sturm,
    mut lo: Rational,
    mut hi: Rational,
    separation: &Rational,
    width: &Rational,
) -> RealRoot {
    let q = s.poly();
    if q.sign_at(&hi) == 0 {
        return RealRoot::Rational(hi);
    }
    let mut tested = false;
    loop {
        let w = &hi - &lo;
        if !tested && &w < separation {
            tested = true;
            let c = simplest_between(&lo, &hi);
            if c > lo && q.sign_at(&c) == 0 {
                return RealRoot::Rational(c);
            }
        }
        if tested && &w <= width {
            break;
        }
        let mid = half(&lo, &hi);
        match q.sign_at(&mid) {
            0 => return RealRoot::Rational(mid),
            _ if s.count(&lo, &mid) == 1 => hi = mid,
            _ => lo = mid,
        }
    }
    RealRoot::Irrational {
        interval: IsolatingInterval {
            lo,
            hi,
            poly_degree: q.degree().unwrap_or(0),
        },
        defining: q.clone(),
    }
}

fn multiplicity(p: &IntPoly, r: &RealRoot) -> usize {
    match r {
        RealRoot::Rational(x) => p.root_multiplicity(x),
        RealRoot::Irrational { interval, .. } => {
            // r is a root of every gcd(p, p', …, p^(k-1)) for multiplicity k
            let mut g = p.clone();
            let mut m = 0;
            while g.degree().unwrap_or(0) > 0
                && Sturm::new(g.squarefree()).count(&interval.lo, &interval.hi) == 1
            {
                m += 1;
                g = g.gcd(&g.derivative());
            }
            m
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::poly::chromatic;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    fn ints(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| q(x, 1)).collect()
    }

    #[test]
    fn cycle_root_sets() {
        let w = default_width();
        let r6 = isolate_real_roots(&chromatic(&Graph::cycle(6).unwrap()), &w).unwrap();
        assert_eq!(r6.exact_rational_roots(), ints(&[0, 1]));
        assert!(r6.intervals().is_empty());
        assert_eq!(r6.multiplicities, vec![1, 1]);
        let r5 = isolate_real_roots(&chromatic(&Graph::cycle(5).unwrap()), &w).unwrap();
        assert_eq!(r5.exact_rational_roots(), ints(&[0, 1, 2]));
    }

    #[test]
    fn irrational_pair() {
        let p = IntPoly::from_i64s(&[-2, 0, 1]);
        let rep = isolate_real_roots(&p, &default_width()).unwrap();
        assert!(rep.exact_rational_roots().is_empty());
        let iv = rep.intervals();
        assert_eq!(iv.len(), 2);
        assert!(iv[1].contains(&q(1414, 1000)) || iv[1].contains(&q(1415, 1000)));
        assert!(iv.iter().all(|i| i.width() <= default_width()));
        assert!(iv[0].hi < iv[1].lo);
    }

    #[test]
    fn rational_non_integer_roots_are_exact() {
        // (2x - 3)(3x + 1)(x^2 - 5)
        let p = &(&IntPoly::from_i64s(&[-3, 2]) * &IntPoly::from_i64s(&[1, 3]))
            * &IntPoly::from_i64s(&[-5, 0, 1]);
        let rep = isolate_real_roots(&p, &default_width()).unwrap();
        assert_eq!(rep.exact_rational_roots(), vec![q(-1, 3), q(3, 2)]);
        assert_eq!(rep.len(), 4);
    }

    #[test]
    fn maxima() {
        let k4 = chromatic(&Graph::complete(4).unwrap());
        assert_eq!(
            max_real_root(&k4).unwrap().unwrap(),
            RealRoot::Rational(q(3, 1))
        );
        let c6 = chromatic(&Graph::cycle(6).unwrap().suspend(1, 1).unwrap());
        assert_eq!(
            max_real_root(&c6).unwrap().unwrap(),
            RealRoot::Rational(q(1, 1))
        );
        assert_eq!(
            max_real_root(&IntPoly::from_i64s(&[1, 0, 1])).unwrap(),
            None
        );
        assert_eq!(max_real_root(&IntPoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn signs_and_roots_above() {
        let p = IntPoly::falling_factorial(3);
        assert_eq!(sign_at(&p, &q(3, 2)), -1);
        assert_eq!(sign_at(&IntPoly::zero(), &q(7, 3)), 0);
        assert!(has_root_above(&IntPoly::x_minus(5), &q(4, 1)).unwrap());
        assert!(!has_root_above(&chromatic(&Graph::cycle(6).unwrap()), &q(3, 2)).unwrap());
        assert!(has_root_above(&IntPoly::zero(), &q(0, 1)).is_err());
    }

    #[test]
    fn roots_above_irrational_points() {
        let two = IntPoly::from_i64s(&[-2, 0, 1]);
        let sqrt2 = max_real_root(&two).unwrap().unwrap();
        assert!(sqrt2.as_rational().is_none());
        // x^2 - 2 itself: nothing above √2
        assert_eq!(count_roots_above(&two, &sqrt2).unwrap(), 0);
        // (x^2 - 2)(x - 1415/1000): the product has one root just above √2
        let p = &two * &IntPoly::from_i64s(&[-1415, 1000]);
        assert_eq!(count_roots_above(&p, &sqrt2).unwrap(), 1);
        let p = &two * &IntPoly::from_i64s(&[-1414, 1000]);
        assert_eq!(count_roots_above(&p, &sqrt2).unwrap(), 0);
        assert_eq!(sqrt2.cmp_rational(&q(1414, 1000)), Ordering::Greater);
        assert_eq!(sqrt2.cmp_rational(&q(1415, 1000)), Ordering::Less);
    }

    #[test]
    fn simplest_rationals() {
        assert_eq!(simplest_between(&q(1, 3), &q(1, 2)), q(1, 2));
        assert_eq!(simplest_between(&q(-12, 5), &q(-9, 4)), q(-7, 3));
        assert_eq!(simplest_between(&q(-1, 2), &q(1, 2)), q(0, 1));
        assert_eq!(simplest_between(&q(7, 5), &q(10, 7)), q(7, 5));
        assert_eq!(simplest_between(&q(141, 100), &q(142, 100)), q(17, 12));
    }

    #[test]
    fn multiplicities() {
        // x^3 (x - 1)^2 (x^2 - 3)^2
        let p = &(&IntPoly::x().pow(3) * &IntPoly::x_minus(1).pow(2))
            * &IntPoly::from_i64s(&[-3, 0, 1]).pow(2);
        let rep = isolate_real_roots(&p, &default_width()).unwrap();
        assert_eq!(rep.multiplicities, vec![2, 3, 2, 2]);
    }

    fn poly_strategy() -> impl Strategy<Value = IntPoly> {
        prop::collection::vec(-20i64..=20, 1..=13).prop_filter_map("nonzero", |c| {
            let p = IntPoly::from_i64s(&c);
            (!p.is_zero()).then_some(p)
        })
    }

    proptest! {
        #[test]
        fn intervals_bracket_sign_changes(p in poly_strategy()) {
            let rep = isolate_real_roots(&p, &default_width()).unwrap();
            let sf = p.squarefree();
            prop_assert_eq!(rep.len(), count_real_roots(&p).unwrap());
            for r in &rep.roots {
                match r {
                    RealRoot::Rational(x) => prop_assert_eq!(p.sign_at(x), 0),
                    RealRoot::Irrational { interval, .. } => {
                        prop_assert!(sf.sign_at(&interval.lo) * sf.sign_at(&interval.hi) <= 0);
                    }
                }
            }
            for w in rep.roots.windows(2) {
                prop_assert!(w[0].upper() < w[1].upper());
            }
        }

        #[test]
        fn max_root_is_monotone(p in poly_strategy(), shift in 1i64..5) {
            let Some(m) = max_real_root(&p).unwrap() else { return Ok(()) };
            // multiply by a factor whose only root lies below m
            let below = m.upper().floor() - Rational::from_integer(shift.into());
            let factor = IntPoly::new(vec![-below.to_integer(), BigInt::one()]);
            let product = &p * &factor;
            let m2 = max_real_root(&product).unwrap().unwrap();
            prop_assert_eq!(count_roots_above(&product, &m).unwrap(), 0);
            prop_assert_eq!(count_roots_above(&p, &m2).unwrap(), 0);
        }
    }
}
