//! Exact volume of bounded full-dimensional polyhedra.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::linalg::{span_rank, QMatrix, QVector};
use crate::rational::Rational;

use super::Polyhedron;

impl Polyhedron {
    /// Exact d-dimensional volume of a bounded full-dimensional polyhedron,
    /// computed by fanning from the first vertex of every face recursively
    /// and summing `|det| / d!` over the resulting simplices.
    pub fn volume(&self) -> Result<Rational> {
        if !self.is_bounded() {
            return Err(Error::Unbounded);
        }
        if !self.is_full_dimensional() {
            return Err(Error::NotFullDimensional);
        }
        let d = self.dim();
        let all: Vec<usize> = (0..self.vertices().len()).collect();
        let mut total = Rational::zero();
        let mut d_factorial = Rational::one();
        for k in 1..=d {
            d_factorial = d_factorial * Rational::from_int(k as i64);
        }
        for simplex in self.fan_triangulate(&all, d) {
            let v0 = &self.vertices()[simplex[0]];
            let rows: Vec<QVector> = simplex[1..]
                .iter()
                .map(|&i| self.vertices()[i].sub(v0))
                .collect();
            total = total + QMatrix::from_rows(&rows).det().abs();
        }
        Ok(total / d_factorial)
    }

    /// Triangulates the face spanned by the given vertex indices (a
    /// `face_dim`-dimensional polytope) into index lists of length
    /// `face_dim + 1`, fanning from its first vertex.
    fn fan_triangulate(&self, face: &[usize], face_dim: usize) -> Vec<Vec<usize>> {
        if face_dim == 1 {
            debug_assert_eq!(face.len(), 2);
            return vec![face.to_vec()];
        }
        let apex = face[0];
        let mut simplices = Vec::new();
        for sub in self.proper_subfaces(face, face_dim) {
            if sub.contains(&apex) {
                continue;
            }
            for mut s in self.fan_triangulate(&sub, face_dim - 1) {
                s.insert(0, apex);
                simplices.push(s);
            }
        }
        simplices
    }

    /// Facets of the face spanned by the given vertex indices: for each
    /// constraint of the polyhedron not tight on the whole face, the tight
    /// subset of the face's vertices, kept when its affine rank drops by
    /// exactly one. Deduplicated by vertex set.
    fn proper_subfaces(&self, face: &[usize], face_dim: usize) -> Vec<Vec<usize>> {
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        for c in self.constraints() {
            let sub: Vec<usize> = face
                .iter()
                .filter(|&&i| c.normal.dot(&self.vertices()[i]) == c.offset)
                .copied()
                .collect();
            if sub.is_empty() || sub.len() == face.len() {
                continue;
            }
            if affine_rank(&sub, self.vertices()) == face_dim - 1 {
                seen.insert(sub);
            }
        }
        seen.into_iter().collect()
    }
}

fn affine_rank(indices: &[usize], vertices: &[QVector]) -> usize {
    let v0 = &vertices[indices[0]];
    let diffs: Vec<QVector> = indices[1..]
        .iter()
        .map(|&i| vertices[i].sub(v0))
        .collect();
    span_rank(&diffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn poly(cs: &[(&[i64], i64)]) -> Polyhedron {
        let dim = cs[0].0.len();
        Polyhedron::from_constraints(
            dim,
            cs.iter()
                .map(|(a, b)| (QVector::from_ints(a), Rational::from_int(*b)))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn unit_square_volume() {
        let sq = poly(&[(&[1, 0], 1), (&[-1, 0], 0), (&[0, 1], 1), (&[0, -1], 0)]);
        assert_eq!(sq.volume().unwrap(), rat(1, 1));
    }

    #[test]
    fn triangle_volume() {
        let t = poly(&[(&[-1, 0], 0), (&[0, -1], 0), (&[1, 1], 2)]);
        assert_eq!(t.volume().unwrap(), rat(2, 1));
    }

    #[test]
    fn scaled_cube_volume() {
        let cube = poly(&[
            (&[1, 0, 0], 3),
            (&[-1, 0, 0], 0),
            (&[0, 1, 0], 3),
            (&[0, -1, 0], 0),
            (&[0, 0, 1], 3),
            (&[0, 0, -1], 0),
        ]);
        assert_eq!(cube.volume().unwrap(), rat(27, 1));
    }

    #[test]
    fn octahedron_volume() {
        // conv{±e1, ±e2, ±e3} has volume 4/3.
        let oct = poly(&[
            (&[1, 1, 1], 1),
            (&[1, 1, -1], 1),
            (&[1, -1, 1], 1),
            (&[1, -1, -1], 1),
            (&[-1, 1, 1], 1),
            (&[-1, 1, -1], 1),
            (&[-1, -1, 1], 1),
            (&[-1, -1, -1], 1),
        ]);
        assert_eq!(oct.volume().unwrap(), rat(4, 3));
    }

    #[test]
    fn segment_length_in_dimension_one() {
        let seg = poly(&[(&[1], 5), (&[-1], 2)]);
        assert_eq!(seg.volume().unwrap(), rat(7, 1));
    }

    #[test]
    fn volume_preconditions() {
        let quad = poly(&[(&[-1, 0], 0), (&[0, -1], 0)]);
        assert_eq!(quad.volume(), Err(Error::Unbounded));
        let seg = Polyhedron::from_generators(
            2,
            vec![QVector::from_ints(&[0, 0]), QVector::from_ints(&[2, 0])],
            vec![],
            vec![],
        )
        .unwrap();
        assert_eq!(seg.volume(), Err(Error::NotFullDimensional));
        assert_eq!(Polyhedron::empty(2).volume(), Err(Error::NotFullDimensional));
    }
}
