use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{LaurentPoly, RingError};

/// A power series in `h` with exact rational coefficients, truncated after
/// `h^order`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PowerSeries {
    coeffs: Vec<BigRational>,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl PowerSeries {
    pub fn zero(order: usize) -> Self {
        PowerSeries { coeffs: vec![BigRational::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigRational::one();
        s
    }

    /// The series `h`.
    pub fn h(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = BigRational::one();
        }
        s
    }

    /// Builds a series from the given coefficients, padding with zeros or
    /// truncating to `order`.
    pub fn from_coeffs(mut coeffs: Vec<BigRational>, order: usize) -> Self {
        coeffs.resize(order + 1, BigRational::zero());
        PowerSeries { coeffs }
    }

    pub fn from_integers(coeffs: &[i64], order: usize) -> Self {
        Self::from_coeffs(coeffs.iter().map(|c| rat(*c)).collect(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Re-truncates to a lower order (or pads with zeros to a higher one,
    /// which is only meaningful for polynomials).
    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(self.coeffs.clone(), order)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        PowerSeries { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    fn common_order(&self, other: &Self) -> usize {
        self.order().min(other.order())
    }

    /// Formal derivative; the result has order one less (minimum 0).
    fn derivative(&self) -> Vec<BigRational> {
        self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c * rat(k as i64)).collect()
    }

    /// `log(s)` for a series with constant term 1.
    pub fn log(&self) -> Result<Self, RingError> {
        if !self.coeffs[0].is_one() {
            return Err(RingError::Domain(format!("log needs constant term 1, found {}", self.coeffs[0])));
        }
        // s * L' = s'  with L(0) = 0
        let n = self.order();
        let ds = self.derivative();
        let mut dl: Vec<BigRational> = Vec::with_capacity(n);
        for k in 0..n {
            let mut acc = ds[k].clone();
            for j in 1..=k {
                acc -= &self.coeffs[j] * &dl[k - j];
            }
            dl.push(acc);
        }
        let mut out = vec![BigRational::zero(); n + 1];
        for k in 1..=n {
            out[k] = &dl[k - 1] / rat(k as i64);
        }
        Ok(PowerSeries { coeffs: out })
    }

    /// `exp(s)` for a series with constant term 0.
    pub fn exp(&self) -> Result<Self, RingError> {
        if !self.coeffs[0].is_zero() {
            return Err(RingError::Domain(format!("exp needs constant term 0, found {}", self.coeffs[0])));
        }
        // E' = s' E with E(0) = 1
        let n = self.order();
        let ds = self.derivative();
        let mut out = vec![BigRational::zero(); n + 1];
        out[0] = BigRational::one();
        for k in 1..=n {
            let mut acc = BigRational::zero();
            for j in 0..k {
                acc += &ds[j] * &out[k - 1 - j];
            }
            out[k] = acc / rat(k as i64);
        }
        Ok(PowerSeries { coeffs: out })
    }

    /// Evaluates a polynomial (ascending coefficients) at this series by
    /// Horner's rule.
    pub fn compose_poly(&self, poly: &[BigRational]) -> Self {
        let order = self.order();
        let mut acc = Self::zero(order);
        for c in poly.iter().rev() {
            acc = &acc * self;
            acc.coeffs[0] += c;
        }
        acc
    }
}

/// `p(e^h)` truncated after `h^order`.
pub fn substitute_exp(p: &LaurentPoly, order: usize) -> PowerSeries {
    // sum_k a_k e^{kh} = sum_m h^m / m! * sum_k a_k k^m
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut factorial = BigInt::one();
    for m in 0..=order {
        if m > 0 {
            factorial *= BigInt::from(m);
        }
        let mut moment = BigRational::zero();
        for (k, a) in p.terms() {
            moment += a * BigRational::from_integer(num_traits::pow(BigInt::from(k), m));
        }
        coeffs.push(moment / BigRational::from_integer(factorial.clone()));
    }
    PowerSeries { coeffs }
}

impl<'a> Add<&'a PowerSeries> for &'a PowerSeries {
    type Output = PowerSeries;
    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.common_order(rhs);
        PowerSeries { coeffs: (0..=n).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect() }
    }
}

impl<'a> Sub<&'a PowerSeries> for &'a PowerSeries {
    type Output = PowerSeries;
    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.common_order(rhs);
        PowerSeries { coeffs: (0..=n).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect() }
    }
}

impl<'a> Mul<&'a PowerSeries> for &'a PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.common_order(rhs);
        let mut coeffs = vec![BigRational::zero(); n + 1];
        for i in 0..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(n - i) {
                coeffs[i + j] += &self.coeffs[i] * &rhs.coeffs[j];
            }
        }
        PowerSeries { coeffs }
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;
    fn neg(self) -> PowerSeries {
        PowerSeries { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl fmt::Debug for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for PowerSeries {
    /// e.g. `1 - 2h^2 - 1/6h^4 + O(h^6)`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            match (k, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => write!(f, "h")?,
                (1, false) => write!(f, "{abs}h")?,
                (_, true) => write!(f, "h^{k}")?,
                (_, false) => write!(f, "{abs}h^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(h^{})", self.order() + 1)
    }
}
