//! Support functions, widths, gauges, polars and exact Hausdorff distances.

use crate::error::{Error, Result};
use crate::linalg::QVector;
use crate::lp::{maximize, LpOutcome};
use crate::rational::{ExtendedRational, Rational};

use super::Polyhedron;

impl Polyhedron {
    /// Support function `h(P, u) = sup { <u, x> : x in P }`.
    pub fn support(&self, u: &QVector) -> Result<ExtendedRational> {
        if self.is_empty() {
            return Err(Error::EmptyPolyhedron);
        }
        for r in self.rays() {
            if u.dot(r).is_positive() {
                return Ok(ExtendedRational::PosInfinity);
            }
        }
        for l in self.lines() {
            if !u.dot(l).is_zero() {
                return Ok(ExtendedRational::PosInfinity);
            }
        }
        let best = self
            .vertices()
            .iter()
            .map(|v| u.dot(v))
            .max()
            .expect("nonempty polyhedron has a vertex");
        Ok(ExtendedRational::Finite(best))
    }

    /// Width `w(P, u) = h(P, u) + h(P, -u)`.
    pub fn width(&self, u: &QVector) -> Result<ExtendedRational> {
        let a = self.support(u)?;
        let b = self.support(&u.neg())?;
        Ok(a.add(&b))
    }

    /// Gauge of `u` with respect to `P - v`, requiring `v` interior and the
    /// recession cone of `P` to be a linear space.
    pub fn gauge(&self, v: &QVector, u: &QVector) -> Result<Rational> {
        if !self.rays().is_empty() {
            return Err(Error::RecessionNotLinear);
        }
        self.gauge_unchecked(v, u)
    }

    /// Gauge formula without the recession-cone restriction; still requires
    /// `v` in the interior. A positive value `rho` locates the boundary
    /// crossing `v + u / rho`.
    pub(crate) fn gauge_unchecked(&self, v: &QVector, u: &QVector) -> Result<Rational> {
        if u.is_zero() {
            return Err(Error::ZeroVector);
        }
        if !self.interior_contains(v) {
            return Err(Error::NotInterior);
        }
        let mut best = Rational::zero();
        for c in self.constraints() {
            let slack = &c.offset - &c.normal.dot(v);
            debug_assert!(slack.is_positive());
            let ratio = c.normal.dot(u) / slack;
            if ratio > best {
                best = ratio;
            }
        }
        Ok(best)
    }

    /// Recession cone `{ y : <a_i, y> <= 0 }`.
    pub fn recession_cone(&self) -> Result<Polyhedron> {
        if self.is_empty() {
            return Err(Error::EmptyPolyhedron);
        }
        Polyhedron::from_constraints(
            self.dim(),
            self.constraints()
                .iter()
                .map(|c| (c.normal.clone(), Rational::zero()))
                .collect(),
        )
    }

    /// Canonical primitive basis of the lineality space.
    pub fn lineality_space(&self) -> Result<Vec<QVector>> {
        if self.is_empty() {
            return Err(Error::EmptyPolyhedron);
        }
        Ok(self.lines().to_vec())
    }

    /// Polar body `{ y : <y, x> <= 1 for all x in P }`, computed as the hull
    /// of the scaled facet normals. Requires the origin interior, `P` a
    /// proper subset of space, and a linear recession cone.
    pub fn polar(&self) -> Result<Polyhedron> {
        if self.constraints().is_empty() {
            return Err(Error::FullSpace);
        }
        if !self.rays().is_empty() {
            return Err(Error::RecessionNotLinear);
        }
        let origin = QVector::zeros(self.dim());
        if !self.interior_contains(&origin) {
            return Err(Error::OriginNotInterior);
        }
        let mut points = Vec::new();
        for c in self.constraints() {
            debug_assert!(c.offset.is_positive());
            points.push(c.normal.scale(&c.offset.recip()));
        }
        Polyhedron::from_generators(self.dim(), points, Vec::new(), Vec::new())
    }

    /// Exact l-infinity distance from a point to a nonempty polyhedron.
    pub(crate) fn linf_distance_to(&self, x: &QVector) -> Rational {
        debug_assert!(!self.is_empty());
        let d = self.dim();
        // Variables (y, t): minimize t subject to y in P and |y - x|_inf <= t.
        let mut constraints: Vec<(QVector, Rational)> = Vec::new();
        let lift = |v: &QVector, t: i64| {
            let mut c = v.coords().to_vec();
            c.push(Rational::from_int(t));
            QVector::new(c)
        };
        for c in self.constraints() {
            constraints.push((lift(&c.normal, 0), c.offset.clone()));
        }
        for i in 0..d {
            let e = QVector::unit(d, i);
            constraints.push((lift(&e, -1), x[i].clone()));
            constraints.push((lift(&e.neg(), -1), -&x[i]));
        }
        let mut obj = vec![Rational::zero(); d + 1];
        obj[d] = -Rational::one();
        match maximize(&QVector::new(obj), &constraints) {
            LpOutcome::Optimal { value, .. } => -value,
            other => unreachable!("distance program is feasible and bounded: {other:?}"),
        }
    }

    /// Hausdorff distance in the l-infinity norm between two polyhedra of
    /// equal ambient dimension. `0` when both are empty, `+inf` when exactly
    /// one is empty or the recession cones differ; otherwise the finite exact
    /// maximum over vertex-to-body distances in both directions.
    pub fn hausdorff_distance(&self, other: &Polyhedron) -> Result<ExtendedRational> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: other.dim(),
            });
        }
        match (self.is_empty(), other.is_empty()) {
            (true, true) => return Ok(ExtendedRational::zero()),
            (true, false) | (false, true) => return Ok(ExtendedRational::PosInfinity),
            (false, false) => {}
        }
        if self.recession_cone()? != other.recession_cone()? {
            return Ok(ExtendedRational::PosInfinity);
        }
        let mut best = Rational::zero();
        for v in self.vertices() {
            let d = other.linf_distance_to(v);
            if d > best {
                best = d;
            }
        }
        for v in other.vertices() {
            let d = self.linf_distance_to(v);
            if d > best {
                best = d;
            }
        }
        Ok(ExtendedRational::Finite(best))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::QVector;
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
    fn support_of_triangle() {
        let t = poly(&[(&[-1, 0], 0), (&[0, -1], 0), (&[1, 1], 2)]);
        assert_eq!(
            t.support(&QVector::from_ints(&[1, 1])).unwrap(),
            ExtendedRational::Finite(rat(2, 1))
        );
        assert_eq!(
            t.support(&QVector::from_ints(&[-1, 2])).unwrap(),
            ExtendedRational::Finite(rat(4, 1))
        );
    }

    #[test]
    fn support_is_infinite_along_recession() {
        let p = poly(&[(&[-1, 0], 0), (&[0, -1], 0)]); // nonnegative quadrant
        assert_eq!(
            p.support(&QVector::from_ints(&[1, 0])).unwrap(),
            ExtendedRational::PosInfinity
        );
        assert_eq!(
            p.support(&QVector::from_ints(&[-1, -1])).unwrap(),
            ExtendedRational::Finite(rat(0, 1))
        );
    }

    #[test]
    fn width_of_split_slab() {
        // 0 <= x1 <= 1 has width 1 along (1,0) and +inf along (0,1).
        let s = poly(&[(&[1, 0], 1), (&[-1, 0], 0)]);
        assert_eq!(
            s.width(&QVector::from_ints(&[1, 0])).unwrap(),
            ExtendedRational::Finite(rat(1, 1))
        );
        assert_eq!(
            s.width(&QVector::from_ints(&[0, 1])).unwrap(),
            ExtendedRational::PosInfinity
        );
    }

    #[test]
    fn gauge_of_slab() {
        // |x1| <= 1, gauge at origin of (1,0) is 1, of (1/2,0) is 1/2,
        // and of (0,1) is 0 (the direction never leaves the slab).
        let s = poly(&[(&[1, 0], 1), (&[-1, 0], 1)]);
        let o = QVector::zeros(2);
        assert_eq!(s.gauge(&o, &QVector::from_ints(&[1, 0])).unwrap(), rat(1, 1));
        assert_eq!(
            s.gauge(&o, &QVector::new(vec![rat(1, 2), rat(0, 1)])).unwrap(),
            rat(1, 2)
        );
        assert_eq!(s.gauge(&o, &QVector::from_ints(&[0, 1])).unwrap(), rat(0, 1));
        // Boundary crossing property: v + u / rho on the boundary.
        let u = QVector::from_ints(&[3, 5]);
        let rho = s.gauge(&o, &u).unwrap();
        assert_eq!(rho, rat(3, 1));
        let crossing = u.scale(&rho.recip());
        assert!(s.contains(&crossing) && !s.interior_contains(&crossing));
    }

    #[test]
    fn gauge_requires_interior_point() {
        let s = poly(&[(&[1, 0], 1), (&[-1, 0], 1)]);
        let boundary = QVector::from_ints(&[1, 0]);
        assert_eq!(
            s.gauge(&boundary, &QVector::from_ints(&[1, 0])),
            Err(Error::NotInterior)
        );
        let quad = poly(&[(&[-1, 0], 1), (&[0, -1], 1)]);
        assert_eq!(
            quad.gauge(&QVector::zeros(2), &QVector::from_ints(&[1, 0])),
            Err(Error::RecessionNotLinear)
        );
    }

    #[test]
    fn recession_and_lineality() {
        let p = poly(&[(&[1, 0], 1), (&[-1, 0], 0)]);
        let rec = p.recession_cone().unwrap();
        assert_eq!(rec.lines(), &[QVector::from_ints(&[0, 1])]);
        assert!(rec.rays().is_empty());
        assert_eq!(p.lineality_space().unwrap(), vec![QVector::from_ints(&[0, 1])]);
    }

    #[test]
    fn polar_of_square_is_cross_polytope() {
        let sq = poly(&[(&[1, 0], 1), (&[-1, 0], 1), (&[0, 1], 1), (&[0, -1], 1)]);
        let polar = sq.polar().unwrap();
        let mut vs = polar.vertices().to_vec();
        vs.sort();
        assert_eq!(
            vs,
            vec![
                QVector::from_ints(&[-1, 0]),
                QVector::from_ints(&[0, -1]),
                QVector::from_ints(&[0, 1]),
                QVector::from_ints(&[1, 0]),
            ]
        );
        // Double polar returns the original body.
        assert_eq!(polar.polar().unwrap(), sq);
    }

    #[test]
    fn polar_of_slab_is_segment() {
        let s = poly(&[(&[1, 0], 1), (&[-1, 0], 1)]);
        let polar = s.polar().unwrap();
        assert_eq!(polar.affine_dim(), Some(1));
        assert_eq!(
            polar.vertices(),
            &[QVector::from_ints(&[-1, 0]), QVector::from_ints(&[1, 0])]
        );
    }

    #[test]
    fn hausdorff_cases() {
        let unit = poly(&[(&[1, 0], 1), (&[-1, 0], 0), (&[0, 1], 1), (&[0, -1], 0)]);
        let double = poly(&[(&[1, 0], 2), (&[-1, 0], 0), (&[0, 1], 2), (&[0, -1], 0)]);
        assert_eq!(
            unit.hausdorff_distance(&double).unwrap(),
            ExtendedRational::Finite(rat(1, 1))
        );
        let empty = Polyhedron::empty(2);
        assert_eq!(
            empty.hausdorff_distance(&unit).unwrap(),
            ExtendedRational::PosInfinity
        );
        assert_eq!(
            empty.hausdorff_distance(&Polyhedron::empty(2)).unwrap(),
            ExtendedRational::zero()
        );
        let quad = poly(&[(&[-1, 0], 0), (&[0, -1], 0)]);
        assert_eq!(
            unit.hausdorff_distance(&quad).unwrap(),
            ExtendedRational::PosInfinity
        );
        assert_eq!(
            unit.hausdorff_distance(&unit).unwrap(),
            ExtendedRational::zero()
        );
    }
}
