//! 1-skeleton enumeration and facet-normal derived quantities.

use crate::error::{Error, Result};
use crate::linalg::{primitive_vector, QVector};
use crate::rational::ExtendedRational;

use super::Polyhedron;

/// A one-dimensional face. Endpoints are indices into the vertex list
/// returned alongside the edges; ray directions are primitive integer
/// vectors lying in the recession cone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Edge {
    Segment { v: usize, w: usize },
    Ray { v: usize, direction: QVector },
}

impl Edge {
    /// Whether the vertex with the given index is an endpoint.
    pub fn touches(&self, vertex: usize) -> bool {
        match self {
            Edge::Segment { v, w } => *v == vertex || *w == vertex,
            Edge::Ray { v, .. } => *v == vertex,
        }
    }

    /// Primitive direction of the edge leaving the given endpoint, or `None`
    /// when the vertex is not an endpoint of this edge.
    pub fn direction_from(&self, vertex: usize, vertices: &[QVector]) -> Option<QVector> {
        match self {
            Edge::Segment { v, w } => {
                let (from, to) = if *v == vertex {
                    (*v, *w)
                } else if *w == vertex {
                    (*w, *v)
                } else {
                    return None;
                };
                let u = vertices[to].sub(&vertices[from]);
                Some(primitive_vector(&u).expect("segment endpoints differ"))
            }
            Edge::Ray { v, direction } => (*v == vertex).then(|| direction.clone()),
        }
    }
}

impl Polyhedron {
    /// All 0- and 1-faces of a nonempty line-free polyhedron. Two vertices
    /// span a segment edge exactly when their common tight constraints have
    /// rank `dim - 1`; a vertex and an extreme ray span a ray edge under the
    /// same rank test on the constraints tight at the vertex and constant
    /// along the ray.
    pub fn skeleton_1(&self) -> Result<(Vec<QVector>, Vec<Edge>)> {
        if self.is_empty() {
            return Err(Error::EmptyPolyhedron);
        }
        if !self.is_line_free() {
            return Err(Error::NotLineFree);
        }
        let d = self.dim();
        let vertices = self.vertices().to_vec();
        let tight: Vec<Vec<usize>> = vertices.iter().map(|v| self.tight_at(v)).collect();
        let mut edges = Vec::new();
        for i in 0..vertices.len() {
            for j in i + 1..vertices.len() {
                let common: Vec<usize> = tight[i]
                    .iter()
                    .filter(|c| tight[j].contains(c))
                    .copied()
                    .collect();
                if self.tight_normal_rank(&common) == d - 1 {
                    edges.push(Edge::Segment { v: i, w: j });
                }
            }
        }
        for (i, _) in vertices.iter().enumerate() {
            for r in self.rays() {
                let common: Vec<usize> = tight[i]
                    .iter()
                    .filter(|&&c| self.constraints()[c].normal.dot(r).is_zero())
                    .copied()
                    .collect();
                if self.tight_normal_rank(&common) == d - 1 {
                    edges.push(Edge::Ray {
                        v: i,
                        direction: r.clone(),
                    });
                }
            }
        }
        Ok((vertices, edges))
    }

    /// One primitive integer outer normal per facet of a full-dimensional
    /// polyhedron; intersecting the halfspaces `<x, u> <= h(P, u)` over the
    /// returned normals reconstructs `P`.
    pub fn facet_normals_u(&self) -> Result<Vec<QVector>> {
        if !self.is_full_dimensional() {
            return Err(Error::NotFullDimensional);
        }
        Ok(self.constraints().iter().map(|c| c.normal.clone()).collect())
    }

    /// Maximum width over the facet normals of a full-dimensional
    /// polyhedron; finite exactly when the recession cone is a linear space.
    pub fn max_facet_width(&self) -> Result<ExtendedRational> {
        let normals = self.facet_normals_u()?;
        let mut best = ExtendedRational::zero();
        for u in &normals {
            let w = self.width(u)?;
            if w > best {
                best = w;
            }
        }
        Ok(best)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, Rational};

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
    fn triangle_skeleton() {
        let t = poly(&[(&[-1, 0], 0), (&[0, -1], 0), (&[1, 1], 2)]);
        let (vs, es) = t.skeleton_1().unwrap();
        assert_eq!(vs.len(), 3);
        assert_eq!(es.len(), 3);
        assert!(es.iter().all(|e| matches!(e, Edge::Segment { .. })));
    }

    #[test]
    fn orthant_skeleton() {
        let q = poly(&[(&[-1, 0], 0), (&[0, -1], 0)]);
        let (vs, es) = q.skeleton_1().unwrap();
        assert_eq!(vs, vec![QVector::from_ints(&[0, 0])]);
        let mut dirs: Vec<QVector> = es
            .iter()
            .map(|e| match e {
                Edge::Ray { v: 0, direction } => direction.clone(),
                other => panic!("unexpected edge {other:?}"),
            })
            .collect();
        dirs.sort();
        assert_eq!(dirs, vec![QVector::from_ints(&[0, 1]), QVector::from_ints(&[1, 0])]);
    }

    #[test]
    fn cube_skeleton_counts() {
        let cube = poly(&[
            (&[1, 0, 0], 1),
            (&[-1, 0, 0], 0),
            (&[0, 1, 0], 1),
            (&[0, -1, 0], 0),
            (&[0, 0, 1], 1),
            (&[0, 0, -1], 0),
        ]);
        let (vs, es) = cube.skeleton_1().unwrap();
        assert_eq!(vs.len(), 8);
        assert_eq!(es.len(), 12);
    }

    #[test]
    fn lower_dimensional_segment_skeleton() {
        let seg = Polyhedron::from_generators(
            2,
            vec![QVector::from_ints(&[0, 0]), QVector::from_ints(&[2, 0])],
            vec![],
            vec![],
        )
        .unwrap();
        let (vs, es) = seg.skeleton_1().unwrap();
        assert_eq!(vs.len(), 2);
        assert_eq!(es, vec![Edge::Segment { v: 0, w: 1 }]);
        assert_eq!(
            es[0].direction_from(0, &vs),
            Some(QVector::from_ints(&[1, 0]))
        );
        assert_eq!(
            es[0].direction_from(1, &vs),
            Some(QVector::from_ints(&[-1, 0]))
        );
    }

    #[test]
    fn skeleton_rejects_lines_and_empty() {
        let slab = poly(&[(&[1, 0], 1), (&[-1, 0], 0)]);
        assert_eq!(slab.skeleton_1(), Err(Error::NotLineFree));
        assert_eq!(
            Polyhedron::empty(2).skeleton_1(),
            Err(Error::EmptyPolyhedron)
        );
    }

    #[test]
    fn facet_normals_of_triangle() {
        let t = poly(&[(&[-1, 0], 0), (&[0, -1], 0), (&[1, 1], 2)]);
        let mut ns = t.facet_normals_u().unwrap();
        ns.sort();
        assert_eq!(
            ns,
            vec![
                QVector::from_ints(&[-1, 0]),
                QVector::from_ints(&[0, -1]),
                QVector::from_ints(&[1, 1]),
            ]
        );
    }

    #[test]
    fn facet_normals_reconstruct_the_polyhedron() {
        let sq = poly(&[(&[1, 0], 1), (&[-1, 0], 0), (&[0, 1], 1), (&[0, -1], 0)]);
        let mut raw = Vec::new();
        for u in sq.facet_normals_u().unwrap() {
            let h = sq.support(&u).unwrap().expect_finite().unwrap().clone();
            raw.push((u, h));
        }
        assert_eq!(Polyhedron::from_constraints(2, raw).unwrap(), sq);
    }

    #[test]
    fn facet_normals_require_full_dimension() {
        let seg = Polyhedron::from_generators(
            2,
            vec![QVector::from_ints(&[0, 0]), QVector::from_ints(&[2, 0])],
            vec![],
            vec![],
        )
        .unwrap();
        assert_eq!(seg.facet_normals_u(), Err(Error::NotFullDimensional));
        assert_eq!(seg.max_facet_width(), Err(Error::NotFullDimensional));
    }

    #[test]
    fn max_facet_width_examples() {
        let split = poly(&[(&[1, 0], 1), (&[-1, 0], 0)]);
        assert_eq!(
            split.max_facet_width().unwrap(),
            ExtendedRational::Finite(rat(1, 1))
        );
        let t = poly(&[(&[-1, 0], 0), (&[0, -1], 0), (&[1, 1], 2)]);
        assert_eq!(
            t.max_facet_width().unwrap(),
            ExtendedRational::Finite(rat(2, 1))
        );
        let quad = poly(&[(&[-1, 0], 0), (&[0, -1], 0)]);
        assert_eq!(quad.max_facet_width().unwrap(), ExtendedRational::PosInfinity);
    }
}
