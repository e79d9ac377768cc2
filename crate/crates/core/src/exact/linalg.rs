//! Exact Gaussian elimination.
//!
//! Over a field the elimination is the textbook one. As soon as a matrix
//! holds rational functions, rows are cleared of denominators and the
//! elimination switches to Bareiss' fraction-free scheme, whose divisions are
//! exact polynomial divisions. Pivots are always the first nonzero entry.

use super::scalar::{Field, Scalar};
use super::ExactError;

/// Dense row-major matrix of scalars.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl ExactMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self, ExactError> {
        if data.len() != rows * cols {
            return Err(ExactError::DimensionMismatch {
                expected: rows * cols,
                found: data.len(),
            });
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self, ExactError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(ExactError::DimensionMismatch {
                expected: c,
                found: bad.len(),
            });
        }
        Ok(Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>, ExactError> {
        if v.len() != self.cols {
            return Err(ExactError::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    /// The common ground field of all entries.
    pub fn field(&self) -> Result<Field, ExactError> {
        let mut f = Field::Rationals;
        for x in &self.data {
            f = f.join(&x.base_field()?)?;
        }
        Ok(f)
    }

    fn has_functions(&self) -> bool {
        self.data.iter().any(|x| !x.is_numeric())
    }

    fn to_rows(&self) -> Vec<Vec<Scalar>> {
        self.data.chunks(self.cols.max(1)).take(self.rows).map(<[Scalar]>::to_vec).collect()
    }
}

/// Multiply a row by the product of its distinct denominators so that every
/// entry becomes a polynomial.
fn clear_denominators(row: &mut [Scalar]) {
    let mut dens: Vec<Scalar> = Vec::new();
    for x in row.iter() {
        if let Some(f) = x.as_ratfunc() {
            if f.as_poly().is_none() {
                let d = Scalar::from_poly(f.denominator().clone());
                if !dens.contains(&d) {
                    dens.push(d);
                }
            }
        }
    }
    if dens.is_empty() {
        return;
    }
    let factor = dens.iter().fold(Scalar::one(), |a, d| a * d);
    for x in row.iter_mut() {
        if !x.is_zero() {
            *x = &*x * &factor;
        }
    }
}

/// Row echelon form (not reduced) restricted to the first `ncols` columns.
/// Returns the pivot column of each of the leading rows.
fn echelon(a: &mut [Vec<Scalar>], ncols: usize, fraction_free: bool) -> Vec<usize> {
    let nrows = a.len();
    let width = a.first().map_or(0, Vec::len);
    if fraction_free {
        for row in a.iter_mut() {
            clear_denominators(row);
        }
    }
    let mut pivots = Vec::new();
    let mut prev = Scalar::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (top, bottom) = a.split_at_mut(r + 1);
        let prow = &top[r];
        for row in bottom.iter_mut() {
            if fraction_free {
                let lead = row[c].clone();
                for j in c + 1..width {
                    let v = &prow[c] * &row[j] - &lead * &prow[j];
                    row[j] = if v.is_zero() {
                        v
                    } else {
                        v.div(&prev).expect("nonzero Bareiss pivot")
                    };
                }
                row[c] = Scalar::zero();
            } else {
                if row[c].is_zero() {
                    continue;
                }
                let f = row[c].div(&prow[c]).expect("nonzero pivot");
                for j in c + 1..width {
                    if !prow[j].is_zero() {
                        row[j] = &row[j] - &f * &prow[j];
                    }
                }
                row[c] = Scalar::zero();
            }
        }
        if fraction_free {
            prev = prow[c].clone();
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Solve the echelon system for the pivot unknowns, given values for the
/// free unknowns and (optionally) a right-hand side column.
fn back_substitute(
    a: &[Vec<Scalar>],
    pivots: &[usize],
    ncols: usize,
    x: &mut [Scalar],
    rhs_col: Option<usize>,
) {
    for (i, &p) in pivots.iter().enumerate().rev() {
        let mut s = match rhs_col {
            Some(col) => a[i][col].clone(),
            None => Scalar::zero(),
        };
        for j in p + 1..ncols {
            if !a[i][j].is_zero() && !x[j].is_zero() {
                s = s - &a[i][j] * &x[j];
            }
        }
        x[p] = s.div(&a[i][p]).expect("nonzero pivot");
    }
}

/// Reduced row echelon form of a list of vectors, zero rows dropped. Every
/// row has leading coordinate 1.
pub fn reduced_echelon(vectors: Vec<Vec<Scalar>>) -> Vec<Vec<Scalar>> {
    let mut a = vectors;
    let ncols = a.first().map_or(0, Vec::len);
    let pivots = echelon(&mut a, ncols, false);
    a.truncate(pivots.len());
    for (i, &p) in pivots.iter().enumerate().rev() {
        let inv = a[i][p].inv().expect("nonzero pivot");
        for j in p..ncols {
            if !a[i][j].is_zero() {
                a[i][j] = &a[i][j] * &inv;
            }
        }
        let (top, rest) = a.split_at_mut(i);
        let prow = &rest[0];
        for row in top.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for j in p..ncols {
                if !prow[j].is_zero() {
                    row[j] = &row[j] - &f * &prow[j];
                }
            }
        }
    }
    a
}

/// Basis of `{v : m v = 0}` in reduced echelon form.
pub fn kernel_basis(m: &ExactMatrix) -> Result<Vec<Vec<Scalar>>, ExactError> {
    m.field()?;
    let n = m.cols;
    let mut a = m.to_rows();
    let pivots = echelon(&mut a, n, m.has_functions());
    let mut basis = Vec::with_capacity(n - pivots.len());
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    for f in (0..n).filter(|&j| !is_pivot[j]) {
        let mut x = vec![Scalar::zero(); n];
        x[f] = Scalar::one();
        back_substitute(&a, &pivots, n, &mut x, None);
        basis.push(x);
    }
    Ok(reduced_echelon(basis))
}

pub fn rank(m: &ExactMatrix) -> Result<usize, ExactError> {
    m.field()?;
    let mut a = m.to_rows();
    Ok(echelon(&mut a, m.cols, m.has_functions()).len())
}

/// One solution of `m x = rhs` (free unknowns set to zero), or `None` if the
/// system is inconsistent.
pub fn solve_linear(m: &ExactMatrix, rhs: &[Scalar]) -> Result<Option<Vec<Scalar>>, ExactError> {
    if rhs.len() != m.rows {
        return Err(ExactError::DimensionMismatch {
            expected: m.rows,
            found: rhs.len(),
        });
    }
    m.field()?;
    let mut f = Field::Rationals;
    for x in rhs {
        f = f.join(&x.base_field()?)?;
    }
    let n = m.cols;
    let mut a: Vec<Vec<Scalar>> = m
        .to_rows()
        .into_iter()
        .zip(rhs)
        .map(|(mut row, b)| {
            row.truncate(n);
            row.push(b.clone());
            row
        })
        .collect();
    if m.rows == 0 {
        return Ok(Some(vec![Scalar::zero(); n]));
    }
    let fraction_free = m.has_functions() || rhs.iter().any(|x| !x.is_numeric());
    let pivots = echelon(&mut a, n, fraction_free);
    if a[pivots.len()..].iter().any(|row| !row[n].is_zero()) {
        return Ok(None);
    }
    let mut x = vec![Scalar::zero(); n];
    back_substitute(&a, &pivots, n, &mut x, Some(n));
    Ok(Some(x))
}
