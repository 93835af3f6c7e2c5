use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::RingError;

/// Coefficient ring of a [`LaurentPoly`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoeffRing {
    Integer,
    Rational,
}

impl CoeffRing {
    fn join(self, other: CoeffRing) -> CoeffRing {
        if self == CoeffRing::Rational || other == CoeffRing::Rational {
            CoeffRing::Rational
        } else {
            CoeffRing::Integer
        }
    }
}

/// An element of `Z[t, t^-1]` or `Q[t, t^-1]`.
///
/// Coefficients are stored as exact rationals keyed by exponent; zero
/// coefficients are never stored, so the zero polynomial is the empty map.
/// The ring tag records whether the value is known to be integral.
#[derive(Clone)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigRational>,
    ring: CoeffRing,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { coeffs: BTreeMap::new(), ring: CoeffRing::Integer }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * t^e`
    pub fn monomial(c: i64, e: i64) -> Self {
        Self::from_terms([(e, c)])
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(1, 1)
    }

    /// `t^-1`.
    pub fn t_inv() -> Self {
        Self::monomial(1, -1)
    }

    /// Integer polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, BigRational::from_integer(BigInt::from(c)));
        }
        p
    }

    /// Rational polynomial from `(exponent, coefficient)` pairs.
    pub fn from_rational_terms<I: IntoIterator<Item = (i64, BigRational)>>(terms: I) -> Self {
        let mut p = LaurentPoly { coeffs: BTreeMap::new(), ring: CoeffRing::Rational };
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: i64, c: BigRational) {
        if c.is_zero() {
            return;
        }
        if !c.is_integer() {
            self.ring = CoeffRing::Rational;
        }
        let slot = self.coeffs.entry(e).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn ring(&self) -> CoeffRing {
        self.ring
    }

    /// Reinterprets the polynomial over `Q`.
    pub fn into_rational(mut self) -> Self {
        self.ring = CoeffRing::Rational;
        self
    }

    /// Reinterprets the polynomial over `Z`, failing if any coefficient is
    /// not an integer.
    pub fn into_integer(mut self) -> Result<Self, RingError> {
        if self.coeffs.values().any(|c| !c.is_integer()) {
            return Err(RingError::NotIntegral);
        }
        self.ring = CoeffRing::Integer;
        Ok(self)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(|c| c.is_one())
    }

    /// Coefficient of `t^e` (zero if absent).
    pub fn coeff(&self, e: i64) -> BigRational {
        self.coeffs.get(&e).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect(),
            ring: self.ring,
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut ring = self.ring;
        if !c.is_integer() {
            ring = CoeffRing::Rational;
        }
        LaurentPoly { coeffs: self.coeffs.iter().map(|(e, x)| (*e, x * c)).collect(), ring }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        acc.ring = acc.ring.join(self.ring);
        acc
    }

    /// The involution `t -> t^-1`.
    pub fn bar(&self) -> Self {
        LaurentPoly { coeffs: self.coeffs.iter().map(|(e, c)| (-e, c.clone())).collect(), ring: self.ring }
    }

    /// Value at `t = 1`.
    pub fn eval_at_one(&self) -> BigRational {
        self.coeffs.values().fold(BigRational::zero(), |acc, c| acc + c)
    }

    /// Exact value at a rational point `t = x` (`x` nonzero if negative
    /// exponents are present).
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (e, c) in &self.coeffs {
            let p = if *e >= 0 {
                num_traits::pow(x.clone(), *e as usize)
            } else {
                num_traits::pow(x.recip(), (-*e) as usize)
            };
            acc += c * p;
        }
        acc
    }

    /// True if `p(t) = p(t^-1)`.
    pub fn is_symmetric(&self) -> bool {
        self.coeffs.iter().all(|(e, c)| self.coeffs.get(&-e) == Some(c))
    }

    /// Exact division in `Q[t, t^-1]`; `None` if `divisor` does not divide.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let d_lo = divisor.min_exponent().unwrap();
        let d_hi = divisor.max_exponent().unwrap();
        let lead = divisor.coeffs[&d_hi].clone();
        let mut rem = self.clone();
        let mut quot = LaurentPoly { coeffs: BTreeMap::new(), ring: self.ring.join(divisor.ring) };
        while let Some(r_hi) = rem.max_exponent() {
            let r_lo = rem.min_exponent().unwrap();
            // the remainder's span must stay at least the divisor's span
            if r_hi - r_lo < d_hi - d_lo {
                return None;
            }
            let q_c = &rem.coeffs[&r_hi] / &lead;
            let q_e = r_hi - d_hi;
            let step = divisor.shift(q_e).scale(&q_c);
            rem = &rem - &step;
            quot.add_term(q_e, q_c);
        }
        if self.ring == CoeffRing::Integer && divisor.ring == CoeffRing::Integer {
            if let Ok(q) = quot.clone().into_integer() {
                return Some(q);
            }
        }
        quot.ring = CoeffRing::Rational;
        Some(quot)
    }

    /// Integer coefficients, if the polynomial is integral.
    pub fn integer_terms(&self) -> Option<Vec<(i64, BigInt)>> {
        self.coeffs
            .iter()
            .map(|(e, c)| if c.is_integer() { Some((*e, c.to_integer())) } else { None })
            .collect()
    }

    fn leading_sign_positive(&self) -> bool {
        self.coeffs.values().next_back().map(|c| c.is_positive()).unwrap_or(true)
    }
}

// Equality is equality of elements of Q[t, t^-1]; the ring tag is ignored.
impl PartialEq for LaurentPoly {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl Eq for LaurentPoly {}

impl std::hash::Hash for LaurentPoly {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl Default for LaurentPoly {
    fn default() -> Self {
        Self::zero()
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out.ring = self.ring.join(rhs.ring);
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out.ring = self.ring.join(rhs.ring);
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly { coeffs: BTreeMap::new(), ring: self.ring.join(rhs.ring) };
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &rhs.coeffs {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c.clone())).collect(), ring: self.ring }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LaurentPoly {
    /// Terms in increasing exponent order, e.g. `-2t^-1 + 5 - 2t`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.coeffs.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let unit = abs.is_one();
            if *e == 0 {
                write!(f, "{abs}")?;
                continue;
            }
            if !unit {
                write!(f, "{abs}")?;
            }
            match e {
                1 => write!(f, "t")?,
                _ => write!(f, "t^{e}")?,
            }
        }
        Ok(())
    }
}

/// Normalizes a knot Alexander polynomial to the representative `q = ±t^k p`
/// with `q(t) = q(t^-1)` and `q(1) = 1`.
pub fn symmetric_normalize(p: &LaurentPoly) -> Result<LaurentPoly, RingError> {
    if p.is_zero() {
        return Err(RingError::NotAKnotPolynomial("zero polynomial".into()));
    }
    if p.ring == CoeffRing::Rational && p.integer_terms().is_none() {
        return Err(RingError::NotAKnotPolynomial("non-integral coefficients".into()));
    }
    let lo = p.min_exponent().unwrap();
    let hi = p.max_exponent().unwrap();
    if (lo + hi) % 2 != 0 {
        return Err(RingError::NotAKnotPolynomial(format!("odd span {lo}..{hi} cannot be centred")));
    }
    let centred = p.shift(-(lo + hi) / 2);
    let flipped = centred.bar();
    let q = if flipped == centred {
        centred
    } else if flipped == -&centred {
        return Err(RingError::NotAKnotPolynomial("antisymmetric polynomial".into()));
    } else {
        return Err(RingError::NotAKnotPolynomial("no unit multiple is symmetric".into()));
    };
    let v = q.eval_at_one();
    let q = if v == BigRational::one() {
        q
    } else if v == -BigRational::one() {
        -q
    } else {
        return Err(RingError::NotAKnotPolynomial(format!("value {v} at t = 1")));
    };
    q.into_integer()
}

/// True iff `p = ±t^k q` for some integer `k`.
pub fn unit_equivalent(p: &LaurentPoly, q: &LaurentPoly) -> bool {
    match (p.min_exponent(), q.min_exponent()) {
        (None, None) => true,
        (Some(a), Some(b)) => {
            if p.len() != q.len() {
                return false;
            }
            let q_shift = q.shift(a - b);
            if p.leading_sign_positive() == q_shift.leading_sign_positive() {
                *p == q_shift
            } else {
                *p == -&q_shift
            }
        }
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t() -> LaurentPoly {
        LaurentPoly::t()
    }

    #[test]
    fn zero_is_empty_map() {
        let p = &t() - &t();
        assert!(p.is_zero());
        assert_eq!(p.len(), 0);
        assert_eq!(p, LaurentPoly::zero());
    }

    #[test]
    fn display_orders_by_exponent() {
        let p = LaurentPoly::from_terms([(-1, -2), (0, 5), (1, -2)]);
        assert_eq!(p.to_string(), "-2t^-1 + 5 - 2t");
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(symmetric_normalize(&LaurentPoly::one()).unwrap(), LaurentPoly::one());
        let trefoil = LaurentPoly::from_terms([(2, 1), (1, -1), (0, 1)]);
        assert_eq!(
            symmetric_normalize(&trefoil).unwrap(),
            LaurentPoly::from_terms([(1, 1), (0, -1), (-1, 1)])
        );
        let a = LaurentPoly::from_terms([(2, 1), (1, -2)]);
        let prod = &a * &a.bar();
        assert_eq!(
            symmetric_normalize(&prod).unwrap(),
            LaurentPoly::from_terms([(0, 5), (1, -2), (-1, -2)])
        );
    }

    #[test]
    fn normalize_rejects_non_knot_polynomials() {
        assert!(symmetric_normalize(&LaurentPoly::zero()).is_err());
        // t - 1 has odd span
        assert!(symmetric_normalize(&(&t() - &LaurentPoly::one())).is_err());
        // t - t^-1 is antisymmetric
        assert!(symmetric_normalize(&(&t() - &LaurentPoly::t_inv())).is_err());
        // 3 is symmetric but 3(1) != ±1
        assert!(symmetric_normalize(&LaurentPoly::constant(3)).is_err());
    }

    #[test]
    fn unit_equivalence_examples() {
        let one = LaurentPoly::one();
        let a = &t() - &one;
        let b = &one - &LaurentPoly::t_inv();
        assert!(unit_equivalent(&a, &b));
        assert!(!unit_equivalent(&a, &(&t() + &one)));
        let lhs = LaurentPoly::from_terms([(2, 1), (1, -2)]);
        let one_minus_t = &one - &t();
        let rhs = -(&one - &one_minus_t.pow(2));
        assert!(unit_equivalent(&lhs, &rhs));
        assert!(unit_equivalent(&LaurentPoly::zero(), &LaurentPoly::zero()));
        assert!(!unit_equivalent(&LaurentPoly::zero(), &one));
    }

    #[test]
    fn exact_division() {
        let a = LaurentPoly::from_terms([(-1, 1), (0, -1)]);
        let b = LaurentPoly::from_terms([(3, 2), (1, 7), (0, -1)]);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a).unwrap(), b);
        assert_eq!(prod.div_exact(&b).unwrap(), a);
        let c = &t() + &LaurentPoly::one();
        assert!(b.div_exact(&c).is_none());
        assert!(a.div_exact(&LaurentPoly::zero()).is_none());
    }

    #[test]
    fn rational_ring_tag_propagates() {
        let half = BigRational::new(1.into(), 2.into());
        let p = LaurentPoly::t().scale(&half);
        assert_eq!(p.ring(), CoeffRing::Rational);
        assert!(p.clone().into_integer().is_err());
        let q = &p + &p;
        assert_eq!(q.ring(), CoeffRing::Rational);
        assert_eq!(q.into_integer().unwrap(), LaurentPoly::t());
    }

    #[test]
    fn eval_handles_negative_exponents() {
        let p = LaurentPoly::from_terms([(-1, 1), (1, 1)]);
        let two = BigRational::from_integer(2.into());
        assert_eq!(p.eval(&two), BigRational::new(5.into(), 2.into()));
    }
}
