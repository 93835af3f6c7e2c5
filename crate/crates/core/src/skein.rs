//! Conway polynomials by skein resolution towards descending diagrams, and
//! the passage between `∇(z)`, `Δ(t)` and `C(h)`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::diagram::{ArcId, Crossing, DiagramError, LinkDiagram};
use crate::ring::{substitute_exp, symmetric_normalize, LaurentPoly, PowerSeries, RingError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SkeinError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("coefficient of h^{0} is nonzero but must vanish for a knot")]
    OddCoefficientNonzero(usize),
    #[error("polynomial is not in symmetric normal form")]
    NotNormalized,
    #[error("Conway polynomial has odd powers of z, so it is not a knot polynomial")]
    NotAKnot,
}

/// `∇(z)` as integer coefficients of `z^0, z^1, …` without trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ConwayPoly {
    coeffs: Vec<BigInt>,
}

impl ConwayPoly {
    pub fn zero() -> Self {
        ConwayPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_coeffs(vec![BigInt::one()])
    }

    pub fn z() -> Self {
        Self::from_coeffs(vec![BigInt::zero(), BigInt::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        ConwayPoly { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|c| BigInt::from(*c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in `z`; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lowest power of `z` with a nonzero coefficient.
    pub fn lowest_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Multiplies by `z^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        ConwayPoly { coeffs }
    }

    /// Drops every power above `z^max`.
    pub fn truncate(&self, max: usize) -> Self {
        Self::from_coeffs(self.coeffs.iter().take(max.saturating_add(1)).cloned().collect())
    }

    /// `Δ(t) = ∇(t^½ − t^-½)`, defined when only even powers occur, via
    /// `z² = t − 2 + t⁻¹`.
    pub fn to_alexander(&self) -> Result<LaurentPoly, SkeinError> {
        if self.coeffs.iter().skip(1).step_by(2).any(|c| !c.is_zero()) {
            return Err(SkeinError::NotAKnot);
        }
        let z2 = LaurentPoly::from_terms([(1, 1), (0, -2), (-1, 1)]);
        let mut acc = LaurentPoly::zero();
        let mut power = LaurentPoly::one();
        for c in self.coeffs.iter().step_by(2) {
            let term = power.scale(&BigRational::from_integer(c.clone()));
            acc = &acc + &term;
            power = &power * &z2;
        }
        Ok(acc)
    }
}

impl Add for &ConwayPoly {
    type Output = ConwayPoly;
    fn add(self, rhs: &ConwayPoly) -> ConwayPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ConwayPoly::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &ConwayPoly {
    type Output = ConwayPoly;
    fn sub(self, rhs: &ConwayPoly) -> ConwayPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ConwayPoly::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &ConwayPoly {
    type Output = ConwayPoly;
    fn mul(self, rhs: &ConwayPoly) -> ConwayPoly {
        if self.is_zero() || rhs.is_zero() {
            return ConwayPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        ConwayPoly::from_coeffs(coeffs)
    }
}

impl Neg for &ConwayPoly {
    type Output = ConwayPoly;
    fn neg(self) -> ConwayPoly {
        ConwayPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl fmt::Debug for ConwayPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ConwayPoly {
    /// e.g. `1 + z^2`, `2z - z^3`
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
                (1, true) => write!(f, "z")?,
                (1, false) => write!(f, "{abs}z")?,
                (_, true) => write!(f, "z^{k}")?,
                (_, false) => write!(f, "{abs}z^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// How the resolution tree picks component order and base points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum SkeinStrategy {
    /// Components in [`LinkDiagram::components`] order, each from its
    /// smallest arc.
    #[default]
    Standard,
    /// Random component order and base points from a seeded generator.
    Seeded(u64),
}

/// A skein solver with a memo table keyed by canonical diagram form.
pub struct ConwaySolver {
    strategy: SkeinStrategy,
    rng: Option<ChaCha8Rng>,
    memo: HashMap<(usize, (usize, Vec<Crossing>)), ConwayPoly>,
    memoize: bool,
}

impl ConwaySolver {
    pub fn new(strategy: SkeinStrategy) -> Self {
        let rng = match strategy {
            SkeinStrategy::Standard => None,
            SkeinStrategy::Seeded(s) => Some(ChaCha8Rng::seed_from_u64(s)),
        };
        ConwaySolver { strategy, rng, memo: HashMap::new(), memoize: true }
    }

    /// Turns the memo table off; results must not change.
    pub fn without_memo(mut self) -> Self {
        self.memoize = false;
        self
    }

    pub fn strategy(&self) -> SkeinStrategy {
        self.strategy
    }

    /// Full Conway polynomial.
    pub fn conway(&mut self, d: &LinkDiagram) -> Result<ConwayPoly, SkeinError> {
        self.conway_to_degree(d, usize::MAX)
    }

    /// Conway polynomial with every power above `z^max` dropped. Branches
    /// whose accumulated power of `z` already exceeds `max` are pruned.
    pub fn conway_to_degree(&mut self, d: &LinkDiagram, max: usize) -> Result<ConwayPoly, SkeinError> {
        d.validate().map_err(DiagramError::Invalid)?;
        Ok(self.solve(d.without_kinks(), max))
    }

    fn solve(&mut self, d: LinkDiagram, max: usize) -> ConwayPoly {
        if d.crossing_count() == 0 {
            return if d.loops() == 1 { ConwayPoly::one() } else { ConwayPoly::zero() };
        }
        if d.is_split() {
            return ConwayPoly::zero();
        }
        let key = if self.memoize { Some((max, d.canonical_key())) } else { None };
        if let Some(k) = &key {
            if let Some(v) = self.memo.get(k) {
                return v.clone();
            }
        }
        let result = self.descend(&d, max);
        if let Some(k) = key {
            self.memo.insert(k, result.clone());
        }
        result
    }

    /// Crossings to switch, in traversal order, so that every crossing is
    /// first met on its over-strand.
    fn switch_sequence(&mut self, d: &LinkDiagram) -> Vec<usize> {
        let mut comps = d.components();
        let bases: Vec<ArcId> = match &mut self.rng {
            None => comps.iter().map(|c| c[0]).collect(),
            Some(rng) => {
                comps.shuffle(rng);
                comps.iter().map(|c| c[rng.gen_range(0..c.len())]).collect()
            }
        };
        let mut seen = vec![false; d.crossing_count()];
        let mut out = Vec::new();
        for base in bases {
            for (_, ci, pos) in d.walk_from(base) {
                if !seen[ci] {
                    seen[ci] = true;
                    if pos == 0 {
                        out.push(ci);
                    }
                }
            }
        }
        out
    }

    /// `∇(D) = ∇(D_desc) + Σ_k ε_k z ∇(D_k smoothed at x_k)`, where `D_k` has
    /// the first `k − 1` switches applied and `ε_k` is the sign of `x_k`.
    fn descend(&mut self, d: &LinkDiagram, max: usize) -> ConwayPoly {
        let switches = self.switch_sequence(d);
        let mut acc = ConwayPoly::zero();
        let mut cur = d.clone();
        for ci in switches {
            if max >= 1 {
                let sign = cur.crossings()[ci].kind.sign().expect("no double points");
                let smoothed = cur.smooth_crossing(ci).expect("valid index").without_kinks();
                let sub = self.solve(smoothed, max - 1).shift(1);
                acc = if sign > 0 { &acc + &sub } else { &acc - &sub };
            }
            cur = cur.switch_crossing(ci).expect("valid index");
        }
        // a descending diagram is an unlink
        if cur.component_count() == 1 {
            acc = &acc + &ConwayPoly::one();
        }
        acc.truncate(max)
    }
}

/// Conway polynomial with the standard strategy.
pub fn conway(d: &LinkDiagram) -> Result<ConwayPoly, SkeinError> {
    ConwaySolver::new(SkeinStrategy::Standard).conway(d)
}

pub fn conway_with(d: &LinkDiagram, strategy: SkeinStrategy) -> Result<ConwayPoly, SkeinError> {
    ConwaySolver::new(strategy).conway(d)
}

/// `z = e^{h/2} − e^{-h/2}` to order `order`.
fn z_series(order: usize) -> PowerSeries {
    // 2 sinh(h/2) = Σ_{k odd} h^k / (2^{k-1} k!)
    let mut coeffs = vec![BigRational::zero(); order + 1];
    let mut factorial = BigInt::one();
    for (k, c) in coeffs.iter_mut().enumerate().skip(1) {
        factorial *= BigInt::from(k);
        if k % 2 == 1 {
            let denom = &factorial * (BigInt::one() << (k - 1));
            *c = BigRational::new(BigInt::one(), denom);
        }
    }
    PowerSeries::from_coeffs(coeffs, order)
}

/// `C(h)`: the Conway polynomial at `z = e^{h/2} − e^{-h/2}`.
pub fn c_series(p: &ConwayPoly, order: usize) -> PowerSeries {
    let poly: Vec<BigRational> = p.coeffs().iter().map(|c| BigRational::from_integer(c.clone())).collect();
    z_series(order).compose_poly(&poly)
}

/// Coefficients `c_0, c_1, …` of a knot's `C(h)`; the odd ones must vanish.
pub fn c_coeffs(s: &PowerSeries) -> Result<Vec<BigRational>, SkeinError> {
    if let Some(k) = s.coeffs().iter().enumerate().position(|(k, c)| k % 2 == 1 && !c.is_zero()) {
        return Err(SkeinError::OddCoefficientNonzero(k));
    }
    Ok(s.coeffs().to_vec())
}

/// `d_k = −½ [h^k] log C(h)`, indexed by the power of `h`, so that
/// `C(h) = exp(−2 Σ d_k h^k)`.
pub fn d_coeffs(s: &PowerSeries) -> Result<Vec<BigRational>, SkeinError> {
    let half = BigRational::new(BigInt::from(-1), BigInt::from(2));
    Ok(s.log()?.coeffs().iter().map(|c| c * &half).collect())
}

/// `C(h)` from a normalized Alexander polynomial by `t = e^h`.
pub fn alexander_to_c(p: &LaurentPoly, order: usize) -> Result<PowerSeries, SkeinError> {
    if symmetric_normalize(p)? != *p {
        return Err(SkeinError::NotNormalized);
    }
    Ok(substitute_exp(p, order))
}

/// Normalized Alexander polynomial of a knot from its Conway polynomial.
pub fn conway_to_alexander(p: &ConwayPoly) -> Result<LaurentPoly, SkeinError> {
    p.to_alexander()
}

/// `[h^k] C(h)` of a diagram; only `∇` up to `z^k` is computed.
pub fn c_coefficient(solver: &mut ConwaySolver, d: &LinkDiagram, k: usize) -> Result<BigRational, SkeinError> {
    let p = solver.conway_to_degree(d, k)?;
    Ok(c_series(&p, k).coeff(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::knots;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn basic_values() {
        assert_eq!(conway(&LinkDiagram::unknot()).unwrap(), ConwayPoly::one());
        assert_eq!(conway(&LinkDiagram::unlink(2)).unwrap(), ConwayPoly::zero());
        assert_eq!(conway(&knots::hopf_link()).unwrap(), ConwayPoly::z());
        assert_eq!(conway(&knots::trefoil()).unwrap(), ConwayPoly::from_integers(&[1, 0, 1]));
        assert_eq!(conway(&knots::figure_eight()).unwrap(), ConwayPoly::from_integers(&[1, 0, -1]));
        assert_eq!(conway(&knots::kink(true)).unwrap(), ConwayPoly::one());
        assert_eq!(conway(&knots::kink(false)).unwrap(), ConwayPoly::one());
    }

    #[test]
    fn mirror_of_hopf_is_minus_z() {
        assert_eq!(conway(&knots::mirror(&knots::hopf_link())).unwrap(), -&ConwayPoly::z());
    }

    #[test]
    fn truncation_agrees_with_full_polynomial() {
        for k in [knots::five_one(), knots::five_two(), knots::six_one(), knots::granny()] {
            let full = conway(&k).unwrap();
            for max in 0..6 {
                let mut s = ConwaySolver::new(SkeinStrategy::Standard);
                assert_eq!(s.conway_to_degree(&k, max).unwrap(), full.truncate(max));
            }
        }
    }

    #[test]
    fn memo_does_not_change_results() {
        for k in [knots::five_two(), knots::square(), knots::six_one()] {
            let a = ConwaySolver::new(SkeinStrategy::Standard).conway(&k).unwrap();
            let b = ConwaySolver::new(SkeinStrategy::Standard).without_memo().conway(&k).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn display() {
        assert_eq!(ConwayPoly::from_integers(&[1, 0, -1]).to_string(), "1 - z^2");
        assert_eq!(ConwayPoly::from_integers(&[0, 2, 0, -1]).to_string(), "2z - z^3");
        assert_eq!(ConwayPoly::zero().to_string(), "0");
    }

    #[test]
    fn c_series_examples() {
        assert_eq!(c_series(&ConwayPoly::one(), 5), PowerSeries::one(5));
        let t = c_series(&ConwayPoly::from_integers(&[1, 0, 1]), 5);
        assert_eq!(t.coeffs(), &[q(1, 1), q(0, 1), q(1, 1), q(0, 1), q(1, 12), q(0, 1)]);
        let f = c_series(&ConwayPoly::from_integers(&[1, 0, -1]), 5);
        assert_eq!(f.coeffs(), &[q(1, 1), q(0, 1), q(-1, 1), q(0, 1), q(-1, 12), q(0, 1)]);
    }

    #[test]
    fn odd_coefficients_are_rejected() {
        let s = c_series(&ConwayPoly::z(), 4);
        assert_eq!(c_coeffs(&s), Err(SkeinError::OddCoefficientNonzero(1)));
    }

    #[test]
    fn d_coefficients_of_five_minus_four_cosh() {
        let s = PowerSeries::from_coeffs(vec![q(1, 1), q(0, 1), q(-2, 1), q(0, 1), q(-1, 6)], 5);
        let d = d_coeffs(&s).unwrap();
        assert_eq!(d[2], q(1, 1));
        assert_eq!(d[4], q(13, 12));
        let back = PowerSeries::from_coeffs(d.iter().map(|c| c * q(-2, 1)).collect(), 5).exp().unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn alexander_round_trip() {
        let a = conway_to_alexander(&ConwayPoly::from_integers(&[1, 0, 1])).unwrap();
        assert_eq!(a, LaurentPoly::from_terms([(1, 1), (0, -1), (-1, 1)]));
        assert_eq!(alexander_to_c(&a, 5).unwrap(), c_series(&ConwayPoly::from_integers(&[1, 0, 1]), 5));
        assert_eq!(alexander_to_c(&a.shift(1), 5), Err(SkeinError::NotNormalized));
        assert_eq!(conway_to_alexander(&ConwayPoly::z()), Err(SkeinError::NotAKnot));
    }
}
