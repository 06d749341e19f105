//! Rational polyhedra with paired half-space and generator descriptions.
//!
//! Every `Polyhedron` is stored canonically: an irredundant H-description
//! (primitive integer normals, sorted) and the matching V-description
//! (vertices modulo the lineality space, primitive extreme rays, echelon line
//! basis). Construction from either side runs both conversion directions, so
//! equality is plain structural comparison.

mod convert;
mod metrics;
mod skeleton;
mod volume;

pub use skeleton::Edge;

use crate::error::{Error, Result};
use crate::linalg::{primitive_vector, span_rank, QMatrix, QVector};
use crate::rational::Rational;

/// One inequality `<normal, x> <= offset` with a primitive integer normal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Constraint {
    pub normal: QVector,
    pub offset: Rational,
}

impl Constraint {
    pub fn new(normal: QVector, offset: Rational) -> Self {
        Constraint { normal, offset }
    }

    pub fn satisfied_by(&self, x: &QVector) -> bool {
        self.normal.dot(x) <= self.offset
    }

    pub fn strictly_satisfied_by(&self, x: &QVector) -> bool {
        self.normal.dot(x) < self.offset
    }

    /// The reversed closed half-space `<normal, x> >= offset`.
    pub fn complement(&self) -> Constraint {
        Constraint {
            normal: self.normal.neg(),
            offset: -&self.offset,
        }
    }
}

/// Inequality description. An empty constraint list denotes the whole space.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HPolyhedron {
    dim: usize,
    constraints: Vec<Constraint>,
}

impl HPolyhedron {
    pub fn new(dim: usize, constraints: Vec<Constraint>) -> Self {
        HPolyhedron { dim, constraints }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }
}

/// Generator description: convex hull of vertices plus conic hull of rays
/// plus the span of lines. No vertices means the empty set.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VPolyhedron {
    dim: usize,
    vertices: Vec<QVector>,
    rays: Vec<QVector>,
    lines: Vec<QVector>,
}

impl VPolyhedron {
    pub fn new(
        dim: usize,
        vertices: Vec<QVector>,
        rays: Vec<QVector>,
        lines: Vec<QVector>,
    ) -> Self {
        VPolyhedron {
            dim,
            vertices,
            rays,
            lines,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[QVector] {
        &self.vertices
    }

    pub fn rays(&self) -> &[QVector] {
        &self.rays
    }

    pub fn lines(&self) -> &[QVector] {
        &self.lines
    }
}

/// A rational polyhedron carrying both canonical descriptions and cached
/// structural flags.
#[derive(Clone, Eq, Debug)]
pub struct Polyhedron {
    dim: usize,
    hrep: HPolyhedron,
    vrep: VPolyhedron,
    is_empty: bool,
    is_bounded: bool,
    is_line_free: bool,
    affine_dim: Option<usize>,
}

impl PartialEq for Polyhedron {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim
            && self.is_empty == other.is_empty
            && self.hrep.constraints == other.hrep.constraints
    }
}

impl Polyhedron {
    /// Builds a polyhedron from inequality data. Normals are scaled to
    /// primitive integer vectors; redundancy is eliminated by a round trip
    /// through the generator description.
    pub fn from_constraints(dim: usize, raw: Vec<(QVector, Rational)>) -> Result<Polyhedron> {
        if dim == 0 {
            return Err(Error::InvalidPolyhedron("dimension must be positive".into()));
        }
        let mut cleaned: Vec<(QVector, Rational)> = Vec::new();
        for (a, alpha) in raw {
            if a.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: a.dim(),
                });
            }
            if a.is_zero() {
                if alpha.is_negative() {
                    return Ok(Polyhedron::empty(dim));
                }
                continue; // trivially true
            }
            let p = primitive_vector(&a)?;
            // p = lambda * a with lambda > 0; rescale the offset to match.
            let k = a.iter().position(|c| !c.is_zero()).expect("a is nonzero");
            let lambda = p[k].clone() / a[k].clone();
            cleaned.push((p, lambda * alpha));
        }
        cleaned.sort();
        cleaned.dedup();
        let vrep = convert::h_to_v(dim, &cleaned);
        Ok(match vrep {
            None => Polyhedron::empty(dim),
            Some(vrep) => {
                let hrep = convert::v_to_h(&vrep);
                Polyhedron::assemble(dim, hrep, vrep)
            }
        })
    }

    pub fn from_hrep(h: HPolyhedron) -> Result<Polyhedron> {
        let dim = h.dim;
        Polyhedron::from_constraints(
            dim,
            h.constraints
                .into_iter()
                .map(|c| (c.normal, c.offset))
                .collect(),
        )
    }

    /// Builds a polyhedron from generators. Rays and lines are normalized to
    /// primitive integer vectors; non-extreme generators are dropped by the
    /// round trip through the inequality description.
    pub fn from_generators(
        dim: usize,
        vertices: Vec<QVector>,
        rays: Vec<QVector>,
        lines: Vec<QVector>,
    ) -> Result<Polyhedron> {
        if dim == 0 {
            return Err(Error::InvalidPolyhedron("dimension must be positive".into()));
        }
        for v in vertices.iter().chain(rays.iter()).chain(lines.iter()) {
            if v.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: v.dim(),
                });
            }
        }
        if vertices.is_empty() {
            if rays.is_empty() && lines.is_empty() {
                return Ok(Polyhedron::empty(dim));
            }
            return Err(Error::InvalidPolyhedron(
                "rays or lines without a vertex".into(),
            ));
        }
        let mut vs = vertices;
        vs.sort();
        vs.dedup();
        let mut rs = Vec::new();
        for r in rays {
            rs.push(primitive_vector(&r)?);
        }
        rs.sort();
        rs.dedup();
        let mut ls = Vec::new();
        for l in lines {
            ls.push(primitive_vector(&l)?);
        }
        let seed = VPolyhedron::new(dim, vs, rs, ls);
        let hrep = convert::v_to_h(&seed);
        let vrep = convert::h_to_v(
            dim,
            &hrep
                .constraints
                .iter()
                .map(|c| (c.normal.clone(), c.offset.clone()))
                .collect::<Vec<_>>(),
        )
        .expect("generated polyhedron is nonempty");
        Ok(Polyhedron::assemble(dim, hrep, vrep))
    }

    pub fn from_vrep(v: VPolyhedron) -> Result<Polyhedron> {
        Polyhedron::from_generators(v.dim, v.vertices, v.rays, v.lines)
    }

    /// The canonical empty polyhedron of the given dimension.
    pub fn empty(dim: usize) -> Polyhedron {
        assert!(dim >= 1);
        let e1 = QVector::unit(dim, 0);
        let constraints = vec![
            Constraint::new(e1.neg(), -Rational::one()),
            Constraint::new(e1, Rational::zero()),
        ];
        Polyhedron {
            dim,
            hrep: HPolyhedron::new(dim, constraints),
            vrep: VPolyhedron::new(dim, Vec::new(), Vec::new(), Vec::new()),
            is_empty: true,
            is_bounded: true,
            is_line_free: true,
            affine_dim: None,
        }
    }

    pub fn full_space(dim: usize) -> Polyhedron {
        Polyhedron::from_constraints(dim, Vec::new()).expect("whole space is valid")
    }

    fn assemble(dim: usize, hrep: HPolyhedron, vrep: VPolyhedron) -> Polyhedron {
        debug_assert!(!vrep.vertices.is_empty());
        let is_bounded = vrep.rays.is_empty() && vrep.lines.is_empty();
        let is_line_free = vrep.lines.is_empty();
        let mut span: Vec<QVector> = Vec::new();
        let v0 = &vrep.vertices[0];
        for v in &vrep.vertices[1..] {
            span.push(v.sub(v0));
        }
        span.extend(vrep.rays.iter().cloned());
        span.extend(vrep.lines.iter().cloned());
        let affine_dim = Some(span_rank(&span));
        Polyhedron {
            dim,
            hrep,
            vrep,
            is_empty: false,
            is_bounded,
            is_line_free,
            affine_dim,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn hrep(&self) -> &HPolyhedron {
        &self.hrep
    }

    pub fn vrep(&self) -> &VPolyhedron {
        &self.vrep
    }

    pub fn constraints(&self) -> &[Constraint] {
        self.hrep.constraints()
    }

    pub fn vertices(&self) -> &[QVector] {
        self.vrep.vertices()
    }

    pub fn rays(&self) -> &[QVector] {
        self.vrep.rays()
    }

    pub fn lines(&self) -> &[QVector] {
        self.vrep.lines()
    }

    pub fn is_empty(&self) -> bool {
        self.is_empty
    }

    pub fn is_bounded(&self) -> bool {
        self.is_bounded
    }

    pub fn is_line_free(&self) -> bool {
        self.is_line_free
    }

    /// Dimension of the affine hull; `None` for the empty set.
    pub fn affine_dim(&self) -> Option<usize> {
        self.affine_dim
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.affine_dim == Some(self.dim)
    }

    pub fn contains(&self, x: &QVector) -> bool {
        debug_assert_eq!(x.dim(), self.dim);
        self.constraints().iter().all(|c| c.satisfied_by(x))
    }

    /// Membership in the topological interior (all inequalities strict).
    pub fn interior_contains(&self, x: &QVector) -> bool {
        debug_assert_eq!(x.dim(), self.dim);
        !self.is_empty && self.constraints().iter().all(|c| c.strictly_satisfied_by(x))
    }

    /// Set containment `other` inside `self`, exactly.
    pub fn contains_polyhedron(&self, other: &Polyhedron) -> bool {
        debug_assert_eq!(self.dim, other.dim);
        if other.is_empty {
            return true;
        }
        if self.is_empty {
            return false;
        }
        other.vertices().iter().all(|v| self.contains(v))
            && other.rays().iter().all(|r| {
                self.constraints()
                    .iter()
                    .all(|c| !c.normal.dot(r).is_positive())
            })
            && other.lines().iter().all(|l| {
                self.constraints().iter().all(|c| c.normal.dot(l).is_zero())
            })
    }

    pub fn intersect(&self, other: &Polyhedron) -> Result<Polyhedron> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: other.dim,
            });
        }
        let mut raw: Vec<(QVector, Rational)> = Vec::new();
        for c in self.constraints().iter().chain(other.constraints()) {
            raw.push((c.normal.clone(), c.offset.clone()));
        }
        Polyhedron::from_constraints(self.dim, raw)
    }

    /// Indices of constraints tight at `x`.
    pub(crate) fn tight_at(&self, x: &QVector) -> Vec<usize> {
        self.constraints()
            .iter()
            .enumerate()
            .filter(|(_, c)| c.normal.dot(x) == c.offset)
            .map(|(i, _)| i)
            .collect()
    }

    pub(crate) fn tight_normal_rank(&self, idxs: &[usize]) -> usize {
        if idxs.is_empty() {
            return 0;
        }
        let rows: Vec<QVector> = idxs
            .iter()
            .map(|&i| self.constraints()[i].normal.clone())
            .collect();
        QMatrix::from_rows(&rows).rank()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn ints(cs: &[(&[i64], i64)]) -> Vec<(QVector, Rational)> {
        cs.iter()
            .map(|(a, b)| (QVector::from_ints(a), Rational::from_int(*b)))
            .collect()
    }

    #[test]
    fn square_has_four_vertices_and_four_facets() {
        let p = Polyhedron::from_constraints(
            2,
            ints(&[(&[1, 0], 1), (&[-1, 0], 0), (&[0, 1], 1), (&[0, -1], 0)]),
        )
        .unwrap();
        assert_eq!(p.vertices().len(), 4);
        assert_eq!(p.constraints().len(), 4);
        assert!(p.is_bounded() && p.is_line_free() && !p.is_empty());
        assert_eq!(p.affine_dim(), Some(2));
    }

    #[test]
    fn redundant_constraint_is_dropped() {
        let p = Polyhedron::from_constraints(
            2,
            ints(&[
                (&[1, 0], 1),
                (&[-1, 0], 0),
                (&[0, 1], 1),
                (&[0, -1], 0),
                (&[1, 1], 5), // redundant
            ]),
        )
        .unwrap();
        assert_eq!(p.constraints().len(), 4);
    }

    #[test]
    fn non_primitive_normals_are_normalized() {
        let p = Polyhedron::from_constraints(2, ints(&[(&[2, 2], 3), (&[-1, 0], 0), (&[0, -1], 0)]))
            .unwrap();
        let norms: Vec<_> = p.constraints().iter().map(|c| c.normal.clone()).collect();
        assert!(norms.contains(&QVector::from_ints(&[1, 1])));
        let c = p
            .constraints()
            .iter()
            .find(|c| c.normal == QVector::from_ints(&[1, 1]))
            .unwrap();
        assert_eq!(c.offset, rat(3, 2));
    }

    #[test]
    fn infeasible_system_is_empty() {
        let p =
            Polyhedron::from_constraints(2, ints(&[(&[1, 0], 0), (&[-1, 0], -1)])).unwrap();
        assert!(p.is_empty());
        assert_eq!(p, Polyhedron::empty(2));
        assert_eq!(p.affine_dim(), None);
    }

    #[test]
    fn lineality_quotient_representatives() {
        // {x1 <= 1, -x1 <= 0} in the plane: a slab with a vertical line.
        let p =
            Polyhedron::from_constraints(2, ints(&[(&[1, 0], 1), (&[-1, 0], 0)])).unwrap();
        assert!(!p.is_line_free());
        assert_eq!(p.lines(), &[QVector::from_ints(&[0, 1])]);
        assert_eq!(
            p.vertices(),
            &[QVector::from_ints(&[0, 0]), QVector::from_ints(&[1, 0])]
        );
        assert!(p.rays().is_empty());
    }

    #[test]
    fn hull_drops_interior_points() {
        let square = Polyhedron::from_generators(
            2,
            vec![
                QVector::from_ints(&[0, 0]),
                QVector::from_ints(&[1, 0]),
                QVector::from_ints(&[0, 1]),
                QVector::from_ints(&[1, 1]),
                QVector::new(vec![rat(1, 2), rat(1, 2)]),
            ],
            vec![],
            vec![],
        )
        .unwrap();
        assert_eq!(square.vertices().len(), 4);
    }

    #[test]
    fn half_line_hrep() {
        let p = Polyhedron::from_generators(
            2,
            vec![QVector::from_ints(&[0, 0])],
            vec![QVector::from_ints(&[1, 0])],
            vec![],
        )
        .unwrap();
        // x2 = 0 (two inequalities) and x1 >= 0.
        assert_eq!(p.constraints().len(), 3);
        assert!(p.contains(&QVector::from_ints(&[5, 0])));
        assert!(!p.contains(&QVector::from_ints(&[-1, 0])));
        assert_eq!(p.affine_dim(), Some(1));
    }

    #[test]
    fn single_point_is_equality_pairs() {
        let p = Polyhedron::from_generators(
            3,
            vec![QVector::from_ints(&[1, 2, 3])],
            vec![],
            vec![],
        )
        .unwrap();
        assert_eq!(p.constraints().len(), 6);
        assert_eq!(p.affine_dim(), Some(0));
        assert!(p.is_bounded());
    }

    #[test]
    fn round_trip_membership_agrees() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..40 {
            let dim = rng.gen_range(1..=3);
            let n = rng.gen_range(1..=6);
            let raw: Vec<(QVector, Rational)> = (0..n)
                .map(|_| {
                    let a: Vec<i64> = (0..dim).map(|_| rng.gen_range(-3..=3)).collect();
                    (QVector::from_ints(&a), Rational::from_int(rng.gen_range(-2..=4)))
                })
                .collect();
            let filtered: Vec<_> = raw
                .iter()
                .filter(|(a, _)| !a.is_zero())
                .cloned()
                .collect();
            let direct = |x: &QVector| filtered.iter().all(|(a, b)| a.dot(x) <= *b);
            let p = Polyhedron::from_constraints(dim, filtered.clone()).unwrap();
            // Compare membership on a small grid of half-integer points.
            let mut grid = vec![QVector::zeros(dim)];
            for i in 0..dim {
                let mut next = Vec::new();
                for g in &grid {
                    for num in -4..=4i64 {
                        let mut c = g.coords().to_vec();
                        c[i] = rat(num, 2);
                        next.push(QVector::new(c));
                    }
                }
                grid = next;
            }
            for x in &grid {
                assert_eq!(p.contains(x), direct(x), "mismatch at {x} for {filtered:?}");
            }
        }
    }

    #[test]
    fn vrep_to_hrep_example_with_ray() {
        let p = Polyhedron::from_generators(
            2,
            vec![QVector::from_ints(&[0, 0])],
            vec![QVector::from_ints(&[1, 0])],
            vec![],
        )
        .unwrap();
        let mut normals: Vec<QVector> =
            p.constraints().iter().map(|c| c.normal.clone()).collect();
        normals.sort();
        assert_eq!(
            normals,
            vec![
                QVector::from_ints(&[-1, 0]),
                QVector::from_ints(&[0, -1]),
                QVector::from_ints(&[0, 1]),
            ]
        );
    }
}
