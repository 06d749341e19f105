//! Affine lattice symmetries and exact integer elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{QMatrix, QVector};
use crate::polyhedron::Polyhedron;
use crate::rational::Rational;

/// An affine map `x -> U x + shift` with integer `U`, `|det U| = 1` and an
/// integer shift; such maps send the integer lattice onto itself and preserve
/// max-facet-width and lattice-freeness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnimodularMap {
    matrix: QMatrix,
    inverse: QMatrix,
    shift: QVector,
}

impl UnimodularMap {
    pub fn new(matrix: QMatrix, shift: QVector) -> Result<Self> {
        if matrix.rows() != matrix.cols() || matrix.rows() != shift.dim() {
            return Err(Error::ShapeMismatch);
        }
        let integral = (0..matrix.rows())
            .all(|r| (0..matrix.cols()).all(|c| matrix.get(r, c).is_integer()));
        if !integral || !shift.is_integer() {
            return Err(Error::NotUnimodular);
        }
        if matrix.det().abs() != Rational::one() {
            return Err(Error::NotUnimodular);
        }
        let inverse = matrix.inverse().expect("unit determinant");
        Ok(UnimodularMap {
            matrix,
            inverse,
            shift,
        })
    }

    pub fn identity(dim: usize) -> Self {
        UnimodularMap::new(QMatrix::identity(dim), QVector::zeros(dim))
            .expect("identity is unimodular")
    }

    pub fn dim(&self) -> usize {
        self.shift.dim()
    }

    pub fn matrix(&self) -> &QMatrix {
        &self.matrix
    }

    pub fn shift(&self) -> &QVector {
        &self.shift
    }

    /// The inverse map `y -> U^{-1} (y - shift)`.
    pub fn inverse(&self) -> UnimodularMap {
        UnimodularMap {
            matrix: self.inverse.clone(),
            inverse: self.matrix.clone(),
            shift: self.inverse.mul_vec(&self.shift).neg(),
        }
    }

    pub fn apply_point(&self, x: &QVector) -> QVector {
        self.matrix.mul_vec(x).add(&self.shift)
    }

    /// Image polyhedron. A constraint `<a, x> <= alpha` pulls back through
    /// `x = U^{-1}(y - shift)` to `<U^{-T} a, y> <= alpha + <U^{-T} a, shift>`.
    pub fn apply(&self, p: &Polyhedron) -> Polyhedron {
        let inv_t = self.inverse.transpose();
        let raw: Vec<(QVector, Rational)> = p
            .constraints()
            .iter()
            .map(|c| {
                let a = inv_t.mul_vec(&c.normal);
                let alpha = &c.offset + &a.dot(&self.shift);
                (a, alpha)
            })
            .collect();
        Polyhedron::from_constraints(p.dim(), raw).expect("image of a polyhedron is well-formed")
    }
}

/// Image of a polyhedron under an affine lattice symmetry.
pub fn apply_unimodular(p: &Polyhedron, map: &UnimodularMap) -> Polyhedron {
    map.apply(p)
}

/// Extracts integer coordinates, or fails with `NotPrimitive`.
fn integer_coords(v: &QVector) -> Result<Vec<BigInt>> {
    v.to_bigints().ok_or(Error::NotPrimitive)
}

fn rows_to_matrix(rows: Vec<Vec<BigInt>>) -> QMatrix {
    let qrows: Vec<QVector> = rows
        .into_iter()
        .map(|r| QVector::new(r.into_iter().map(Rational::from_int).collect()))
        .collect();
    QMatrix::from_rows(&qrows)
}

/// One extended-gcd row operation: replaces rows `r0` and `r1` so that the
/// tracked column values become `(gcd, 0)`. The 2x2 operation matrix has
/// determinant one.
fn gcd_row_op(rows: &mut [Vec<BigInt>], v: &mut [BigInt], r0: usize, r1: usize) {
    let e = v[r0].extended_gcd(&v[r1]);
    if e.gcd.is_zero() {
        return;
    }
    let c0 = &v[r0] / &e.gcd;
    let c1 = &v[r1] / &e.gcd;
    let n = rows[r0].len();
    for j in 0..n {
        let a = rows[r0][j].clone();
        let b = rows[r1][j].clone();
        rows[r0][j] = &e.x * &a + &e.y * &b;
        rows[r1][j] = -&c1 * &a + &c0 * &b;
    }
    v[r0] = e.gcd;
    v[r1] = BigInt::zero();
}

/// A unimodular integer matrix `U` with `U a = e_1` for a primitive integer
/// vector `a`.
pub(crate) fn unimodular_to_e1(a: &QVector) -> Result<QMatrix> {
    let mut v = integer_coords(a)?;
    let d = v.len();
    let mut rows: Vec<Vec<BigInt>> = (0..d)
        .map(|i| {
            let mut r = vec![BigInt::zero(); d];
            r[i] = BigInt::one();
            r
        })
        .collect();
    for j in 1..d {
        if !v[j].is_zero() {
            gcd_row_op(&mut rows, &mut v, 0, j);
        }
    }
    if v[0].is_negative() {
        for x in rows[0].iter_mut() {
            *x = -&*x;
        }
        v[0] = -&v[0];
    }
    if !v[0].is_one() {
        return Err(Error::NotPrimitive);
    }
    Ok(rows_to_matrix(rows))
}

/// A unimodular integer matrix `U` mapping the span of the given linearly
/// independent integer vectors onto the span of the first `k` unit vectors:
/// the image of the `j`-th input is supported on coordinates `0..=j`.
pub(crate) fn elimination_map(columns: &[QVector]) -> Result<QMatrix> {
    assert!(!columns.is_empty());
    let d = columns[0].dim();
    let mut cols: Vec<Vec<BigInt>> = columns
        .iter()
        .map(integer_coords)
        .collect::<Result<_>>()?;
    let mut rows: Vec<Vec<BigInt>> = (0..d)
        .map(|i| {
            let mut r = vec![BigInt::zero(); d];
            r[i] = BigInt::one();
            r
        })
        .collect();
    for pivot in 0..columns.len() {
        for low in pivot + 1..d {
            if cols[pivot][low].is_zero() {
                continue;
            }
            // Mirror the row operation on every not-yet-finished column.
            let e = cols[pivot][pivot].extended_gcd(&cols[pivot][low]);
            let c0 = &cols[pivot][pivot] / &e.gcd;
            let c1 = &cols[pivot][low] / &e.gcd;
            for j in 0..d {
                let a = rows[pivot][j].clone();
                let b = rows[low][j].clone();
                rows[pivot][j] = &e.x * &a + &e.y * &b;
                rows[low][j] = -&c1 * &a + &c0 * &b;
            }
            for col in cols.iter_mut().skip(pivot) {
                let a = col[pivot].clone();
                let b = col[low].clone();
                col[pivot] = &e.x * &a + &e.y * &b;
                col[low] = -&c1 * &a + &c0 * &b;
            }
        }
        assert!(
            !cols[pivot][pivot].is_zero(),
            "elimination columns must be linearly independent"
        );
    }
    Ok(rows_to_matrix(rows))
}
