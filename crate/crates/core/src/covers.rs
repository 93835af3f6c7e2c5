//! Presentations of the first homology of the universal cyclic cover of an
//! unknot with a wheel clasper, and the checks on their orders.

use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::clasper::{reduce_negative_chi, ClasperError, ClasperGraph, ReductionTrace};
use crate::diagram::{fox_alexander, LinkDiagram};
use crate::ring::{substitute_exp, symmetric_normalize, unit_equivalent, LaurentPoly, PolyMatrix, PowerSeries, RingError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoverError {
    #[error("wheel index must be at least 1")]
    BadIndex,
    #[error("series order {order} is below 2n = {needed}")]
    OrderTooSmall { order: usize, needed: usize },
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Clasper(#[from] ClasperError),
}

/// Generators and a relation matrix over `Z[t, t^-1]`, one row per relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationMatrix {
    pub generators: Vec<String>,
    pub relations: PolyMatrix,
}

impl PresentationMatrix {
    pub fn empty() -> Self {
        PresentationMatrix { generators: Vec::new(), relations: PolyMatrix::zeros(0, 0) }
    }

    /// Reorders relations and generators: new row `i` is old row
    /// `rows[i]`, new column `j` is old column `cols[j]`.
    pub fn permuted(&self, rows: &[usize], cols: &[usize]) -> PresentationMatrix {
        PresentationMatrix {
            generators: cols.iter().map(|&j| self.generators[j].clone()).collect(),
            relations: self.relations.select(rows, cols),
        }
    }

    /// Splits rows and columns into the connected blocks of the nonzero
    /// pattern; each block is `(rows, cols)`, ascending.
    pub fn blocks(&self) -> Vec<(Vec<usize>, Vec<usize>)> {
        let (r, c) = (self.relations.rows(), self.relations.cols());
        // nodes: rows 0..r, columns r..r+c
        let mut comp = vec![usize::MAX; r + c];
        let mut out = Vec::new();
        for start in 0..r + c {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            comp[start] = id;
            let mut stack = vec![start];
            let (mut rows, mut cols) = (Vec::new(), Vec::new());
            while let Some(u) = stack.pop() {
                let neighbours: Vec<usize> = if u < r {
                    rows.push(u);
                    (0..c).filter(|&j| !self.relations.get(u, j).is_zero()).map(|j| r + j).collect()
                } else {
                    cols.push(u - r);
                    (0..r).filter(|&i| !self.relations.get(i, u - r).is_zero()).collect()
                };
                for w in neighbours {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        stack.push(w);
                    }
                }
            }
            rows.sort_unstable();
            cols.sort_unstable();
            out.push((rows, cols));
        }
        out
    }
}

/// The relations `(t-1)α_i + α_{i-1}` (one per `β_i`) followed by
/// `(t^-1-1)β_i + β_{i+1}` (one per `α_i`), indices mod `2n`.
pub fn wheel_presentation(n: usize) -> Result<PresentationMatrix, CoverError> {
    if n == 0 {
        return Err(CoverError::BadIndex);
    }
    let m = 2 * n;
    let mut rel = PolyMatrix::zeros(2 * m, 2 * m);
    let a = &LaurentPoly::t() - &LaurentPoly::one();
    let b = &LaurentPoly::t_inv() - &LaurentPoly::one();
    for i in 0..m {
        rel.set(i, i, &rel.get(i, i).clone() + &a);
        let prev = (i + m - 1) % m;
        rel.set(i, prev, rel.get(i, prev) + &LaurentPoly::one());
        let row = m + i;
        rel.set(row, m + i, &rel.get(row, m + i).clone() + &b);
        let next = m + (i + 1) % m;
        rel.set(row, next, rel.get(row, next) + &LaurentPoly::one());
    }
    let generators = (1..=m).map(|i| format!("a{i}")).chain((1..=m).map(|i| format!("b{i}"))).collect();
    Ok(PresentationMatrix { generators, relations: rel })
}

/// Order of the presented module: the determinant, defined up to units.
pub fn alexander_from_presentation(p: &PresentationMatrix) -> Result<LaurentPoly, CoverError> {
    Ok(p.relations.det()?)
}

/// `1 - (1 - t)^{2n}`.
pub fn cyclic_order(n: usize) -> LaurentPoly {
    let one_minus_t = &LaurentPoly::one() - &LaurentPoly::t();
    &LaurentPoly::one() - &one_minus_t.pow(2 * n as u32)
}

/// `(1 - (1-t)^{2n})(1 - (1-t^-1)^{2n})`, expanded.
pub fn wheel_alexander_closed(n: usize) -> LaurentPoly {
    let f = cyclic_order(n);
    &f * &f.bar()
}

/// The presentation splits into exactly two blocks whose determinants are
/// unit multiples of `1 - (1-t)^{2n}` and `1 - (1-t^-1)^{2n}`, in either order.
pub fn decomposition_check(p: &PresentationMatrix) -> bool {
    let size = p.relations.rows();
    if size == 0 || size != p.relations.cols() || size % 4 != 0 {
        return false;
    }
    let n = size / 4;
    let blocks = p.blocks();
    if blocks.len() != 2 {
        return false;
    }
    let mut dets = Vec::new();
    for (rows, cols) in &blocks {
        if rows.len() != cols.len() {
            return false;
        }
        match p.relations.select(rows, cols).det() {
            Ok(d) => dets.push(d),
            Err(_) => return false,
        }
    }
    let f = cyclic_order(n);
    let fb = f.bar();
    (unit_equivalent(&dets[0], &f) && unit_equivalent(&dets[1], &fb))
        || (unit_equivalent(&dets[0], &fb) && unit_equivalent(&dets[1], &f))
}

/// True iff the normalized form of `a` is exactly `f(t) f(t^-1)` with
/// `f = 1 - (1-t)^{2n}`.
pub fn slice_form_holds(a: &LaurentPoly, n: usize) -> bool {
    match symmetric_normalize(a) {
        Ok(q) => q == wheel_alexander_closed(n),
        Err(_) => false,
    }
}

/// Slice form of the presentation determinant for the wheel with `2n` spokes.
pub fn slice_form_check(n: usize) -> Result<bool, CoverError> {
    let a = alexander_from_presentation(&wheel_presentation(n)?)?;
    Ok(slice_form_holds(&a, n))
}

/// `C(h)` of the unknot after surgery on the wheel clasper with `2n` spokes.
pub fn wheel_c_series(n: usize, order: usize) -> Result<PowerSeries, CoverError> {
    if n == 0 {
        return Err(CoverError::BadIndex);
    }
    if order < 2 * n {
        return Err(CoverError::OrderTooSmall { order, needed: 2 * n });
    }
    let a = symmetric_normalize(&wheel_alexander_closed(n))?;
    Ok(substitute_exp(&a, order))
}

/// Checks that `s` starts `1 - 2h^{2n}` with nothing in between and no odd
/// coefficients.
pub fn expansion_ok(s: &PowerSeries, n: usize) -> bool {
    let two_n = 2 * n;
    let minus_two = -BigRational::from_integer(2.into());
    s.coeffs().iter().enumerate().all(|(k, c)| match k {
        0 => c.is_one(),
        k if k < two_n => c.is_zero(),
        k if k == two_n => *c == minus_two,
        k => k % 2 == 0 || c.is_zero(),
    })
}

/// `U^G` for a complete primitive graph with negative Euler characteristic
/// is the unknot: returns its Alexander polynomial, which is exactly 1, and
/// the reduction certifying it.
pub fn vanishing_alexander(g: &ClasperGraph) -> Result<(LaurentPoly, ReductionTrace), CoverError> {
    let trace = reduce_negative_chi(g)?;
    let host = LinkDiagram::unknot();
    let a = fox_alexander(&host).expect("unknot is a knot");
    Ok((symmetric_normalize(&a)?, trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn n_one_blocks() {
        let p = wheel_presentation(1).unwrap();
        let a = p.relations.select(&[0, 1], &[0, 1]);
        let b = p.relations.select(&[2, 3], &[2, 3]);
        let tm1 = lp(&[(1, 1), (0, -1)]);
        let tim1 = lp(&[(-1, 1), (0, -1)]);
        let one = LaurentPoly::one();
        assert_eq!(a, PolyMatrix::from_rows(vec![vec![tm1.clone(), one.clone()], vec![one.clone(), tm1]]).unwrap());
        assert_eq!(b, PolyMatrix::from_rows(vec![vec![tim1.clone(), one.clone()], vec![one, tim1]]).unwrap());
        assert!(wheel_presentation(0).is_err());
    }

    #[test]
    fn n_one_alexander() {
        let a = alexander_from_presentation(&wheel_presentation(1).unwrap()).unwrap();
        let expected = lp(&[(0, 5), (1, -2), (-1, -2)]);
        assert!(unit_equivalent(&a, &expected));
        assert_eq!(wheel_alexander_closed(1), expected);
        assert_eq!(alexander_from_presentation(&PresentationMatrix::empty()).unwrap(), LaurentPoly::one());
    }

    #[test]
    fn circulant_determinant() {
        // diagonal a, cyclic off-diagonal 1: det = a^{2n} - 1
        for n in 1..=4 {
            let p = wheel_presentation(n).unwrap();
            let m = 2 * n;
            let rows: Vec<usize> = (0..m).collect();
            let a = &LaurentPoly::t() - &LaurentPoly::one();
            let expected = &a.pow(m as u32) - &LaurentPoly::one();
            assert_eq!(p.relations.select(&rows, &rows).det().unwrap(), expected);
            assert!(unit_equivalent(&expected, &cyclic_order(n)));
        }
    }

    #[test]
    fn closed_form_properties() {
        for n in 1..=6 {
            let a = wheel_alexander_closed(n);
            assert_eq!(a.eval_at_one(), BigRational::one());
            assert!(a.is_symmetric());
        }
    }

    #[test]
    fn decomposition_and_shuffles() {
        for n in 1..=3 {
            let p = wheel_presentation(n).unwrap();
            assert!(decomposition_check(&p));
            let size = 4 * n;
            let rows: Vec<usize> = (0..size).map(|i| (i * 5 + 3) % size).collect();
            let cols: Vec<usize> = (0..size).rev().collect();
            assert!(decomposition_check(&p.permuted(&rows, &cols)));
        }
    }

    #[test]
    fn slice_form() {
        for n in 1..=4 {
            assert!(slice_form_check(n).unwrap());
            let perturbed = &wheel_alexander_closed(n) + &LaurentPoly::one();
            assert!(!slice_form_holds(&perturbed, n));
        }
        assert_eq!(cyclic_order(2).eval_at_one(), BigRational::one());
    }

    #[test]
    fn series_examples() {
        let q = |a: i64, b: i64| BigRational::new(BigInt::from(a), BigInt::from(b));
        let s = wheel_c_series(1, 5).unwrap();
        assert_eq!(s.coeffs(), &[q(1, 1), q(0, 1), q(-2, 1), q(0, 1), q(-1, 6), q(0, 1)]);
        let s = wheel_c_series(2, 4).unwrap();
        assert_eq!(s.coeffs(), &[q(1, 1), q(0, 1), q(0, 1), q(0, 1), q(-2, 1)]);
        assert_eq!(wheel_c_series(2, 3), Err(CoverError::OrderTooSmall { order: 3, needed: 4 }));
        for n in 1..=4 {
            assert!(expansion_ok(&wheel_c_series(n, 2 * n + 2).unwrap(), n));
        }
    }
}
