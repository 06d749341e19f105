//! Dense rational vectors and matrices with exact Gaussian elimination.

use std::fmt;
use std::ops::Index;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Fixed-dimension vector of exact rationals.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QVector {
    coords: Vec<Rational>,
}

impl QVector {
    pub fn new(coords: Vec<Rational>) -> Self {
        QVector { coords }
    }

    pub fn zeros(dim: usize) -> Self {
        QVector {
            coords: vec![Rational::zero(); dim],
        }
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = QVector::zeros(dim);
        v.coords[i] = Rational::one();
        v
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        QVector {
            coords: coords.iter().map(|&c| Rational::from_int(c)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.coords.iter()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rational::is_zero)
    }

    pub fn is_integer(&self) -> bool {
        self.coords.iter().all(Rational::is_integer)
    }

    pub fn dot(&self, other: &QVector) -> Rational {
        debug_assert_eq!(self.dim(), other.dim());
        let mut acc = Rational::zero();
        for (a, b) in self.coords.iter().zip(other.coords.iter()) {
            acc = acc + a * b;
        }
        acc
    }

    pub fn add(&self, other: &QVector) -> QVector {
        debug_assert_eq!(self.dim(), other.dim());
        QVector {
            coords: self
                .coords
                .iter()
                .zip(other.coords.iter())
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &QVector) -> QVector {
        debug_assert_eq!(self.dim(), other.dim());
        QVector {
            coords: self
                .coords
                .iter()
                .zip(other.coords.iter())
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, factor: &Rational) -> QVector {
        QVector {
            coords: self.coords.iter().map(|a| a * factor).collect(),
        }
    }

    pub fn neg(&self) -> QVector {
        QVector {
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }

    /// `self + factor * other`.
    pub fn add_scaled(&self, factor: &Rational, other: &QVector) -> QVector {
        debug_assert_eq!(self.dim(), other.dim());
        QVector {
            coords: self
                .coords
                .iter()
                .zip(other.coords.iter())
                .map(|(a, b)| a + &(factor * b))
                .collect(),
        }
    }

    pub fn to_bigints(&self) -> Option<Vec<BigInt>> {
        self.coords.iter().map(Rational::to_bigint).collect()
    }
}

impl Index<usize> for QVector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.coords[i]
    }
}

impl fmt::Display for QVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for QVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Scales a nonzero rational vector by the unique positive factor that makes
/// it an integer vector with coprime entries. Direction is preserved.
pub fn primitive_vector(v: &QVector) -> Result<QVector> {
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    let mut lcm = BigInt::one();
    for c in v.iter() {
        lcm = lcm.lcm(c.denom());
    }
    let scaled: Vec<BigInt> = v
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let mut gcd = BigInt::zero();
    for n in &scaled {
        gcd = gcd.gcd(n);
    }
    debug_assert!(gcd.is_positive());
    Ok(QVector::new(
        scaled
            .into_iter()
            .map(|n| Rational::from_int(n / &gcd))
            .collect(),
    ))
}

/// Row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: &[QVector]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, QVector::dim);
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            debug_assert_eq!(row.dim(), c);
            entries.extend(row.iter().cloned());
        }
        QMatrix {
            rows: r,
            cols: c,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> QVector {
        QVector::new(self.entries[r * self.cols..(r + 1) * self.cols].to_vec())
    }

    pub fn transpose(&self) -> QMatrix {
        let mut t = QMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &QVector) -> QVector {
        debug_assert_eq!(self.cols, v.dim());
        QVector::new((0..self.rows).map(|r| self.row(r).dot(v)).collect())
    }

    pub fn mul_mat(&self, other: &QMatrix) -> QMatrix {
        debug_assert_eq!(self.cols, other.rows);
        let mut out = QMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = Rational::zero();
                for k in 0..self.cols {
                    acc = acc + self.get(r, k) * other.get(k, c);
                }
                out.set(r, c, acc);
            }
        }
        out
    }

    /// Rank via exact Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut work = self.clone();
        let mut pivot_row = 0;
        for col in 0..work.cols {
            if pivot_row == work.rows {
                break;
            }
            let Some(r) = (pivot_row..work.rows).find(|&r| !work.get(r, col).is_zero()) else {
                continue;
            };
            work.swap_rows(pivot_row, r);
            let inv = work.get(pivot_row, col).recip();
            for r2 in (pivot_row + 1)..work.rows {
                if work.get(r2, col).is_zero() {
                    continue;
                }
                let factor = -(work.get(r2, col) * &inv);
                work.add_scaled_row(r2, pivot_row, &factor);
            }
            pivot_row += 1;
        }
        pivot_row
    }

    /// Determinant of a square matrix via exact elimination.
    pub fn det(&self) -> Rational {
        assert_eq!(self.rows, self.cols);
        let mut work = self.clone();
        let mut det = Rational::one();
        for col in 0..work.cols {
            let Some(r) = (col..work.rows).find(|&r| !work.get(r, col).is_zero()) else {
                return Rational::zero();
            };
            if r != col {
                work.swap_rows(col, r);
                det = -det;
            }
            let pivot = work.get(col, col).clone();
            det = det * &pivot;
            let inv = pivot.recip();
            for r2 in (col + 1)..work.rows {
                if work.get(r2, col).is_zero() {
                    continue;
                }
                let factor = -(work.get(r2, col) * &inv);
                work.add_scaled_row(r2, col, &factor);
            }
        }
        det
    }

    /// Inverse of a square matrix, or `None` if singular.
    pub fn inverse(&self) -> Option<QMatrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut work = self.clone();
        let mut inv = QMatrix::identity(n);
        for col in 0..n {
            let r = (col..n).find(|&r| !work.get(r, col).is_zero())?;
            work.swap_rows(col, r);
            inv.swap_rows(col, r);
            let pivot_inv = work.get(col, col).recip();
            work.scale_row(col, &pivot_inv);
            inv.scale_row(col, &pivot_inv);
            for r2 in 0..n {
                if r2 == col || work.get(r2, col).is_zero() {
                    continue;
                }
                let factor = -work.get(r2, col).clone();
                work.add_scaled_row(r2, col, &factor);
                inv.add_scaled_row(r2, col, &factor);
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, factor: &Rational) {
        for c in 0..self.cols {
            let v = self.get(r, c) * factor;
            self.set(r, c, v);
        }
    }

    fn add_scaled_row(&mut self, target: usize, source: usize, factor: &Rational) {
        for c in 0..self.cols {
            let v = self.get(target, c) + &(factor * self.get(source, c));
            self.set(target, c, v);
        }
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "QMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {}", self.row(r))?;
        }
        f.write_str("]")
    }
}

/// Exact solution set of `A x = b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AffineSolution {
    /// `particular + span(null_basis)` describes all solutions.
    Solution {
        particular: QVector,
        null_basis: Vec<QVector>,
    },
    Infeasible,
}

/// Solves `A x = b` exactly, returning a particular solution (free variables
/// set to zero) and a basis of the null space of `A`.
pub fn solve_affine(a: &QMatrix, b: &QVector) -> Result<AffineSolution> {
    if a.rows() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.rows(),
            got: b.dim(),
        });
    }
    let rows = a.rows();
    let cols = a.cols();
    // Augmented matrix [A | b], reduced to row echelon form.
    let mut work = QMatrix::zeros(rows, cols + 1);
    for r in 0..rows {
        for c in 0..cols {
            work.set(r, c, a.get(r, c).clone());
        }
        work.set(r, cols, b[r].clone());
    }
    let mut pivot_cols = Vec::new();
    let mut pivot_row = 0;
    for col in 0..cols {
        if pivot_row == rows {
            break;
        }
        let Some(r) = (pivot_row..rows).find(|&r| !work.get(r, col).is_zero()) else {
            continue;
        };
        work.swap_rows(pivot_row, r);
        let inv = work.get(pivot_row, col).recip();
        work.scale_row(pivot_row, &inv);
        for r2 in 0..rows {
            if r2 == pivot_row || work.get(r2, col).is_zero() {
                continue;
            }
            let factor = -work.get(r2, col).clone();
            work.add_scaled_row(r2, pivot_row, &factor);
        }
        pivot_cols.push(col);
        pivot_row += 1;
    }
    // Rows of the form 0 = nonzero mean the system is infeasible.
    for r in pivot_row..rows {
        if !work.get(r, cols).is_zero() {
            return Ok(AffineSolution::Infeasible);
        }
    }
    let mut part_coords: Vec<Rational> = vec![Rational::zero(); cols];
    for (i, &pc) in pivot_cols.iter().enumerate() {
        part_coords[pc] = work.get(i, cols).clone();
    }
    let particular = QVector::new(part_coords);
    let mut null_basis = Vec::new();
    for free in 0..cols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut dir = vec![Rational::zero(); cols];
        dir[free] = Rational::one();
        for (i, &pc) in pivot_cols.iter().enumerate() {
            dir[pc] = -work.get(i, free).clone();
        }
        null_basis.push(QVector::new(dir));
    }
    Ok(AffineSolution::Solution {
        particular,
        null_basis,
    })
}

/// Rank of the span of a set of vectors.
pub fn span_rank(vectors: &[QVector]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    QMatrix::from_rows(vectors).rank()
}

/// Reduced row echelon basis for the span of `vectors`: each basis vector is
/// a primitive integer vector with positive leading entry, zero above and
/// below its pivot, sorted by pivot column.
pub fn rref_primitive_basis(vectors: &[QVector]) -> Vec<QVector> {
    let rows: Vec<QVector> = vectors.iter().filter(|v| !v.is_zero()).cloned().collect();
    if rows.is_empty() {
        return Vec::new();
    }
    let dim = rows[0].dim();
    let mut out: Vec<QVector> = Vec::new();
    let mut pivot = 0;
    let mut m = QMatrix::from_rows(&rows);
    for col in 0..dim {
        if pivot == m.rows() {
            break;
        }
        let Some(r) = (pivot..m.rows()).find(|&r| !m.get(r, col).is_zero()) else {
            continue;
        };
        m.swap_rows(pivot, r);
        let inv = m.get(pivot, col).recip();
        m.scale_row(pivot, &inv);
        for r2 in 0..m.rows() {
            if r2 == pivot || m.get(r2, col).is_zero() {
                continue;
            }
            let factor = -m.get(r2, col).clone();
            m.add_scaled_row(r2, pivot, &factor);
        }
        pivot += 1;
    }
    for r in 0..pivot {
        out.push(primitive_vector(&m.row(r)).expect("pivot rows are nonzero"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn primitive_vector_examples() {
        let v = QVector::new(vec![rat(1, 2), rat(1, 3)]);
        assert_eq!(primitive_vector(&v).unwrap(), QVector::from_ints(&[3, 2]));
        let w = QVector::from_ints(&[-4, 6]);
        assert_eq!(primitive_vector(&w).unwrap(), QVector::from_ints(&[-2, 3]));
        assert_eq!(
            primitive_vector(&QVector::zeros(3)),
            Err(crate::error::Error::ZeroVector)
        );
    }

    #[test]
    fn primitive_vector_is_idempotent() {
        let v = QVector::new(vec![rat(10, 4), rat(-15, 4), rat(0, 1)]);
        let p = primitive_vector(&v).unwrap();
        assert_eq!(primitive_vector(&p).unwrap(), p);
        assert!(p.is_integer());
    }

    #[test]
    fn solve_affine_line() {
        // x1 + x2 = 2 has particular (2,0) and a one-dimensional null space.
        let a = QMatrix::from_rows(&[QVector::from_ints(&[1, 1])]);
        let b = QVector::from_ints(&[2]);
        match solve_affine(&a, &b).unwrap() {
            AffineSolution::Solution {
                particular,
                null_basis,
            } => {
                assert_eq!(particular, QVector::from_ints(&[2, 0]));
                assert_eq!(null_basis.len(), 1);
                assert!(a.mul_vec(&null_basis[0]).is_zero());
            }
            AffineSolution::Infeasible => panic!("feasible system"),
        }
    }

    #[test]
    fn solve_affine_infeasible() {
        let a = QMatrix::from_rows(&[QVector::from_ints(&[1, 0]), QVector::from_ints(&[1, 0])]);
        let b = QVector::from_ints(&[0, 1]);
        assert_eq!(solve_affine(&a, &b).unwrap(), AffineSolution::Infeasible);
    }

    #[test]
    fn rank_equals_transpose_rank() {
        let m = QMatrix::from_rows(&[
            QVector::from_ints(&[1, 2, 3]),
            QVector::from_ints(&[2, 4, 6]),
            QVector::from_ints(&[0, 1, 1]),
        ]);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn determinant_and_inverse() {
        let m = QMatrix::from_rows(&[QVector::from_ints(&[2, 1]), QVector::from_ints(&[1, 1])]);
        assert_eq!(m.det(), rat(1, 1));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul_mat(&inv), QMatrix::identity(2));
    }

    #[test]
    fn rref_basis_is_canonical() {
        let basis = rref_primitive_basis(&[
            QVector::from_ints(&[0, 2, 2]),
            QVector::from_ints(&[0, 1, 1]),
            QVector::from_ints(&[2, 0, 4]),
        ]);
        assert_eq!(
            basis,
            vec![QVector::from_ints(&[1, 0, 2]), QVector::from_ints(&[0, 1, 1])]
        );
    }
}
