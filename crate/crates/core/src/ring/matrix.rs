use std::fmt;

use super::{LaurentPoly, RingError};

/// Square matrices at or below this size use cofactor expansion; larger ones
/// go through fraction-free elimination.
const COFACTOR_LIMIT: usize = 3;

/// A dense rectangular matrix of Laurent polynomials.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<LaurentPoly>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        PolyMatrix { rows, cols, entries: vec![LaurentPoly::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, LaurentPoly::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Result<Self, RingError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(RingError::Shape("ragged rows".into()));
        }
        Ok(PolyMatrix { rows: r, cols: c, entries: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: LaurentPoly) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[LaurentPoly] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    /// Submatrix on the given rows and columns, in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                entries.push(self.get(i, j).clone());
            }
        }
        PolyMatrix { rows: rows.len(), cols: cols.len(), entries }
    }

    /// Drops row `i` and column `j`.
    pub fn minor(&self, i: usize, j: usize) -> PolyMatrix {
        let rows: Vec<usize> = (0..self.rows).filter(|&r| r != i).collect();
        let cols: Vec<usize> = (0..self.cols).filter(|&c| c != j).collect();
        self.select(&rows, &cols)
    }

    /// Exact determinant.
    pub fn det(&self) -> Result<LaurentPoly, RingError> {
        if self.rows != self.cols {
            return Err(RingError::Shape(format!("determinant of a {}x{} matrix", self.rows, self.cols)));
        }
        if self.rows <= COFACTOR_LIMIT {
            Ok(self.det_cofactor())
        } else {
            Ok(self.det_bareiss())
        }
    }

    fn det_cofactor(&self) -> LaurentPoly {
        match self.rows {
            0 => LaurentPoly::one(),
            1 => self.get(0, 0).clone(),
            n => {
                let mut acc = LaurentPoly::zero();
                for j in 0..n {
                    let a = self.get(0, j);
                    if a.is_zero() {
                        continue;
                    }
                    let term = a * &self.minor(0, j).det_cofactor();
                    acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
                }
                acc
            }
        }
    }

    /// Bareiss fraction-free elimination; every division is exact.
    fn det_bareiss(&self) -> LaurentPoly {
        let n = self.rows;
        let mut a: Vec<Vec<LaurentPoly>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut negate = false;
        let mut prev = LaurentPoly::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                // prefer the sparsest available pivot
                let swap = (k + 1..n).filter(|&i| !a[i][k].is_zero()).min_by_key(|&i| a[i][k].len());
                match swap {
                    Some(i) => {
                        a.swap(i, k);
                        negate = !negate;
                    }
                    None => return LaurentPoly::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
                }
                a[i][k] = LaurentPoly::zero();
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        if negate {
            -d
        } else {
            d
        }
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|p| p.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
