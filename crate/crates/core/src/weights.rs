//! The weight systems of the coefficients `c_k` of `C(h)`, evaluated on
//! chord diagrams by resolving double points, and on web diagrams through
//! STU rewriting.

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::clasper::{phi_terms, ClasperGraph};
use crate::covers::{wheel_c_series, CoverError};
use crate::diagram::{realize_chord_diagram_with, ChordDiagram, DiagramError, Realization};
use crate::skein::{c_coefficient, ConwaySolver, SkeinError, SkeinStrategy};
use crate::web::{diagram_connected_sum, stu_reduce_with, DiagramCombination, StuOrder, WebDiagram, WebError};

/// Environment variable capping the degree of brute-force sums.
pub const MAX_DEGREE_VAR: &str = "CLASPERKIT_MAX_DEGREE";
const DEFAULT_MAX_DEGREE: usize = 4;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WeightError {
    #[error("degree {degree} exceeds the brute-force cap {cap}")]
    DegreeTooLarge { degree: usize, cap: usize },
    #[error("diagram has degree {degree} but the weight of c_{index} was requested")]
    DegreeMismatch { degree: usize, index: usize },
    #[error(transparent)]
    Web(#[from] WebError),
    #[error(transparent)]
    Skein(#[from] SkeinError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Cover(#[from] CoverError),
}

/// Brute-force degree cap from the environment, defaulting to 4.
pub fn max_degree() -> usize {
    std::env::var(MAX_DEGREE_VAR).ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_MAX_DEGREE)
}

/// `Σ_{signs} (-1)^{#negative} c_k(resolution)` over all resolutions of a
/// realization of `cd`, where `k` is the degree of `cd`.
pub fn eval_chord_bruteforce(cd: &ChordDiagram, index: usize) -> Result<BigRational, WeightError> {
    eval_chord_with(cd, index, &Realization::default(), max_degree())
}

/// As [`eval_chord_bruteforce`] with an explicit realization and cap.
pub fn eval_chord_with(cd: &ChordDiagram, index: usize, how: &Realization, cap: usize) -> Result<BigRational, WeightError> {
    let degree = cd.degree();
    if degree != index {
        return Err(WeightError::DegreeMismatch { degree, index });
    }
    if degree > cap {
        return Err(WeightError::DegreeTooLarge { degree, cap });
    }
    let singular = realize_chord_diagram_with(cd, how);
    let terms: Result<Vec<BigRational>, WeightError> = (0u32..1 << degree)
        .into_par_iter()
        .map(|mask| {
            let signs: Vec<bool> = (0..degree).map(|i| mask >> i & 1 == 0).collect();
            let d = singular.resolve(&signs)?;
            let mut solver = ConwaySolver::new(SkeinStrategy::Standard);
            let c = c_coefficient(&mut solver, &d, index)?;
            Ok(if mask.count_ones() % 2 == 0 { c } else { -c })
        })
        .collect();
    Ok(terms?.into_iter().fold(BigRational::zero(), |a, b| a + b))
}

/// The weight of `c_k` with a cache over chord diagrams.
pub struct WeightFunctional {
    index: usize,
    realization: Realization,
    cap: usize,
    cache: HashMap<ChordDiagram, BigRational>,
}

impl WeightFunctional {
    pub fn new(index: usize) -> Self {
        WeightFunctional { index, realization: Realization::default(), cap: max_degree(), cache: HashMap::new() }
    }

    pub fn with_realization(mut self, how: Realization) -> Self {
        self.realization = how;
        self
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn eval_chord(&mut self, cd: &ChordDiagram) -> Result<BigRational, WeightError> {
        if let Some(v) = self.cache.get(cd) {
            return Ok(v.clone());
        }
        let v = eval_chord_with(cd, self.index, &self.realization, self.cap)?;
        self.cache.insert(cd.clone(), v.clone());
        Ok(v)
    }

    /// Linear extension to combinations, rewriting web diagrams by STU.
    pub fn eval_combination(&mut self, x: &DiagramCombination, order: StuOrder) -> Result<BigRational, WeightError> {
        let chords = stu_reduce_with(x, order)?;
        let mut acc = BigRational::zero();
        for (cd, c) in chords.chord_terms().expect("STU output is chord diagrams") {
            let v = self.eval_chord(&cd)?;
            acc += c * v;
        }
        Ok(acc)
    }

    pub fn eval_web(&mut self, d: &WebDiagram, order: StuOrder) -> Result<BigRational, WeightError> {
        let degree = d.degree();
        if degree != self.index {
            return Err(WeightError::DegreeMismatch { degree, index: self.index });
        }
        self.eval_combination(&DiagramCombination::single(d.clone()), order)
    }
}

/// Weight of `c_k` on a web diagram of degree `k`, by STU and brute force.
pub fn eval_web(d: &WebDiagram, index: usize) -> Result<BigRational, WeightError> {
    WeightFunctional::new(index).eval_web(d, StuOrder::default())
}

/// `(-1)^{l + deg} c_{2n}(U^{W_{2n}})` read off the cyclic cover.
pub fn eval_wheel_clasper(n: usize) -> Result<BigRational, WeightError> {
    let wheel = WebDiagram::wheel(2 * n)?;
    let sign = phi_terms(&ClasperGraph::from_web(&wheel)).overall_sign;
    let c = wheel_c_series(n, 2 * n)?.coeff(2 * n);
    Ok(if sign > 0 { c } else { -c })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multiplicativity {
    pub sum: BigRational,
    pub left: BigRational,
    pub right: BigRational,
}

impl Multiplicativity {
    pub fn holds(&self) -> bool {
        self.sum == &self.left * &self.right
    }
}

/// Compares the weight on `d1 # d2` with the product of the weights.
pub fn check_multiplicativity(d1: &WebDiagram, d2: &WebDiagram) -> Result<Multiplicativity, WeightError> {
    let (m1, m2) = (d1.degree(), d2.degree());
    let cap = max_degree();
    if m1 + m2 > cap {
        return Err(WeightError::DegreeTooLarge { degree: m1 + m2, cap });
    }
    let sum = eval_web(&diagram_connected_sum(d1, d2), m1 + m2)?;
    let left = eval_web(d1, m1)?;
    let right = eval_web(d2, m2)?;
    Ok(Multiplicativity { sum, left, right })
}

/// Closed form of the chord weight: 1 if smoothing every chord leaves a
/// single circle and the degree is even, else 0.
pub fn smoothing_weight(cd: &ChordDiagram) -> BigRational {
    if cd.degree() % 2 == 0 && cd.smoothing_circles() == 1 {
        BigRational::one()
    } else {
        BigRational::zero()
    }
}
