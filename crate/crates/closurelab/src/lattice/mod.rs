//! Integer-lattice constructions: splits, lattice-free bodies, Chvátal cuts,
//! mixed-integer hulls, and lattice symmetries.

mod unimodular;

pub use unimodular::{apply_unimodular, UnimodularMap};
pub(crate) use unimodular::{elimination_map, unimodular_to_e1};

use num_bigint::BigInt;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::linalg::QVector;
use crate::polyhedron::{Constraint, Polyhedron};
use crate::rational::{ExtendedRational, Rational};

/// The slab `{x : i <= <u, x> <= i + 1}` of lattice width one along a
/// primitive integer normal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Split {
    u: QVector,
    i: BigInt,
}

impl Split {
    pub fn new(u: QVector, i: impl Into<BigInt>) -> Result<Self> {
        require_primitive_integer(&u)?;
        Ok(Split { u, i: i.into() })
    }

    pub fn u(&self) -> &QVector {
        &self.u
    }

    pub fn i(&self) -> &BigInt {
        &self.i
    }

    pub fn to_polyhedron(&self) -> Polyhedron {
        make_split(&self.u, self.i.clone()).expect("split data is validated on construction")
    }
}

impl std::fmt::Display for Split {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} <= {} <= {}", self.i, self.u, &self.i + 1)
    }
}

/// The mixed-integer lattice `Z^m x R^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MixedIntegerSpace {
    m: usize,
    n: usize,
}

impl MixedIntegerSpace {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::PreconditionViolated(
                "mixed-integer space needs at least one integer coordinate".into(),
            ));
        }
        Ok(MixedIntegerSpace { m, n })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.m + self.n
    }

    /// Whether the first `m` coordinates of the point are integers.
    pub fn contains(&self, x: &QVector) -> bool {
        x.coords()[..self.m].iter().all(|c| c.is_integer())
    }
}

fn require_primitive_integer(u: &QVector) -> Result<()> {
    if u.is_zero() {
        return Err(Error::ZeroVector);
    }
    if !u.is_integer() || crate::linalg::primitive_vector(u)? != *u {
        return Err(Error::NotPrimitive);
    }
    Ok(())
}

/// Builds the split polyhedron `{x : i <= <u, x> <= i + 1}`.
pub fn make_split(u: &QVector, i: impl Into<BigInt>) -> Result<Polyhedron> {
    require_primitive_integer(u)?;
    let i: BigInt = i.into();
    Polyhedron::from_constraints(
        u.dim(),
        vec![
            (u.clone(), Rational::from_int(&i + 1)),
            (u.neg(), Rational::from_int(-i)),
        ],
    )
}

/// All integer vectors with l-infinity norm at most `bound`, in
/// lexicographic order (including the zero vector).
pub(crate) fn integer_vectors(dim: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..dim {
        let mut next = Vec::with_capacity(out.len() * (2 * bound as usize + 1));
        for prefix in &out {
            for c in -bound..=bound {
                let mut v = prefix.clone();
                v.push(c);
                next.push(v);
            }
        }
        out = next;
    }
    out
}

fn is_lex_positive(v: &[i64]) -> bool {
    for &c in v {
        if c != 0 {
            return c > 0;
        }
    }
    false
}

fn is_primitive_ints(v: &[i64]) -> bool {
    let mut g: i64 = 0;
    for &c in v {
        g = g.gcd(&c);
    }
    g == 1
}

/// All splits `(u, i)` with `|u|_inf <= norm_bound`, `u` primitive and
/// lexicographically positive, whose open slab meets `P`.
pub fn enumerate_splits(p: &Polyhedron, norm_bound: i64) -> Result<Vec<Split>> {
    if p.is_empty() {
        return Err(Error::EmptyPolyhedron);
    }
    let mut out = Vec::new();
    for cand in integer_vectors(p.dim(), norm_bound) {
        if !is_lex_positive(&cand) || !is_primitive_ints(&cand) {
            continue;
        }
        let u = QVector::from_ints(&cand);
        let hi = match p.support(&u)? {
            ExtendedRational::Finite(h) => h,
            ExtendedRational::PosInfinity => return Err(Error::UnboundedDirection),
        };
        let lo = match p.support(&u.neg())? {
            ExtendedRational::Finite(h) => -h,
            ExtendedRational::PosInfinity => return Err(Error::UnboundedDirection),
        };
        let mut i = lo.floor_int();
        let last = hi.ceil_int() - 1;
        while i <= last {
            // The open slab (i, i+1) meets the value range [lo, hi] of <u, x>
            // over the convex set P exactly when i < hi and lo < i + 1.
            if Rational::from_int(i.clone()) < hi && lo < Rational::from_int(&i + 1) {
                out.push(Split {
                    u: u.clone(),
                    i: i.clone(),
                });
            }
            i += 1;
        }
    }
    Ok(out)
}

/// All integer points of a bounded polyhedron, by exact bounding-box
/// enumeration, in lexicographic order.
pub fn integer_points(p: &Polyhedron) -> Result<Vec<QVector>> {
    if !p.is_bounded() {
        return Err(Error::Unbounded);
    }
    if p.is_empty() {
        return Ok(Vec::new());
    }
    let mut grid: Vec<Vec<BigInt>> = vec![Vec::new()];
    for axis in 0..p.dim() {
        let e = QVector::unit(p.dim(), axis);
        let hi = p.support(&e)?.expect_finite()?.floor_int();
        let lo = -p.support(&e.neg())?.expect_finite()?.floor_int();
        let mut next = Vec::new();
        for prefix in &grid {
            let mut z = lo.clone();
            while z <= hi {
                let mut v = prefix.clone();
                v.push(z.clone());
                next.push(v);
                z += 1;
            }
        }
        grid = next;
    }
    Ok(grid
        .into_iter()
        .map(|z| QVector::new(z.into_iter().map(Rational::from_int).collect()))
        .filter(|x| p.contains(x))
        .collect())
}

/// An integer point in the interior of a full-dimensional polyhedron, if one
/// exists. Unbounded inputs are handled by factoring out the lineality space
/// through a unimodular change of coordinates; if the quotient is still
/// unbounded the question is refused as `Undecidable`.
pub fn interior_integer_point(l: &Polyhedron) -> Result<Option<QVector>> {
    if !l.is_full_dimensional() {
        return Err(Error::NotFullDimensional);
    }
    if l.constraints().is_empty() {
        return Ok(Some(QVector::zeros(l.dim())));
    }
    if l.is_bounded() {
        for z in integer_points(l)? {
            if l.interior_contains(&z) {
                return Ok(Some(z));
            }
        }
        return Ok(None);
    }
    if l.lines().is_empty() {
        return Err(Error::Undecidable);
    }
    // l = U^{-1}(R^k x B): map the lineality space onto the first k
    // coordinates, decide on the bounded base B, and lift the witness back.
    let k = l.lines().len();
    let u = elimination_map(l.lines())?;
    let map = UnimodularMap::new(u, QVector::zeros(l.dim()))?;
    let image = map.apply(l);
    let base = drop_leading_coords(&image, k);
    if !base.is_bounded() {
        return Err(Error::Undecidable);
    }
    for z in integer_points(&base)? {
        if base.interior_contains(&z) {
            let mut coords = vec![Rational::zero(); k];
            coords.extend(z.coords().iter().cloned());
            return Ok(Some(map.inverse().apply_point(&QVector::new(coords))));
        }
    }
    Ok(None)
}

/// Projects away the first `k` coordinates of a polyhedron whose constraint
/// normals all vanish there (a product `R^k x B` in these coordinates).
pub(crate) fn drop_leading_coords(p: &Polyhedron, k: usize) -> Polyhedron {
    debug_assert!(k < p.dim());
    let raw: Vec<(QVector, Rational)> = p
        .constraints()
        .iter()
        .map(|c| {
            debug_assert!(c.normal.coords()[..k].iter().all(|x| x.is_zero()));
            (
                QVector::new(c.normal.coords()[k..].to_vec()),
                c.offset.clone(),
            )
        })
        .collect();
    Polyhedron::from_constraints(p.dim() - k, raw).expect("projection of a product is well-formed")
}

/// Whether no integer point lies strictly inside the full-dimensional body.
pub fn is_lattice_free(l: &Polyhedron) -> Result<bool> {
    Ok(interior_integer_point(l)?.is_none())
}

/// An integer point in the relative interior of the facet cut out by the
/// constraint with the given index, if one exists.
pub fn facet_relint_integer_point(l: &Polyhedron, facet: usize) -> Result<Option<QVector>> {
    if !l.is_full_dimensional() {
        return Err(Error::NotFullDimensional);
    }
    let c = &l.constraints()[facet];
    // The affine hull {<a, x> = alpha} with primitive integer a contains
    // integer points exactly when alpha is an integer.
    let alpha = match c.offset.to_bigint() {
        Some(a) => a,
        None => return Ok(None),
    };
    if l.dim() == 1 {
        let x = QVector::new(vec![&c.offset / &c.normal[0]]);
        return Ok(x.is_integer().then_some(x));
    }
    // Parametrize the integer points of the hull as x0 + B z, z in Z^(d-1):
    // with U a = e1 unimodular, x0 = alpha * row_0(U) and B's columns are the
    // remaining rows of U. Pulling the other constraints back turns the facet
    // question into an interior-integer-point question one dimension down.
    let u = unimodular_to_e1(&c.normal)?;
    let x0 = u.row(0).scale(&Rational::from_int(alpha));
    let basis: Vec<QVector> = (1..l.dim()).map(|r| u.row(r)).collect();
    let mut raw = Vec::new();
    for (j, other) in l.constraints().iter().enumerate() {
        if j == facet {
            continue;
        }
        let pulled = QVector::new(basis.iter().map(|b| other.normal.dot(b)).collect());
        let offset = &other.offset - &other.normal.dot(&x0);
        raw.push((pulled, offset));
    }
    let g = Polyhedron::from_constraints(l.dim() - 1, raw)
        .expect("facet pullback is a valid system");
    match interior_integer_point(&g)? {
        None => Ok(None),
        Some(z) => {
            let mut x = x0;
            for (b, zi) in basis.iter().zip(z.iter()) {
                x = x.add_scaled(zi, b);
            }
            debug_assert!(x.is_integer());
            Ok(Some(x))
        }
    }
}

/// Lattice-free with an integer point in the relative interior of every
/// facet: the characterization of lattice-free bodies that are maximal with
/// respect to inclusion.
pub fn is_maximal_lattice_free(l: &Polyhedron) -> Result<bool> {
    if !is_lattice_free(l)? {
        return Ok(false);
    }
    for facet in 0..l.constraints().len() {
        if facet_relint_integer_point(l, facet)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The rounded inequality `<u, x> <= floor(h(P, u))` for a primitive integer
/// direction with finite support.
pub fn chvatal_cut(p: &Polyhedron, u: &QVector) -> Result<Constraint> {
    require_primitive_integer(u)?;
    let h = match p.support(u)? {
        ExtendedRational::Finite(h) => h,
        ExtendedRational::PosInfinity => return Err(Error::UnboundedDirection),
    };
    Ok(Constraint::new(u.clone(), Rational::from_int(h.floor_int())))
}

/// Intersection of `P` with every rounded cut over primitive integer
/// directions of l-infinity norm at most `norm_bound`. A relaxation of the
/// full rounding closure: exact only when the bound captures all binding
/// directions.
pub fn chvatal_closure_bounded(p: &Polyhedron, norm_bound: i64) -> Result<Polyhedron> {
    if !p.is_bounded() {
        return Err(Error::Unbounded);
    }
    if p.is_empty() {
        return Ok(p.clone());
    }
    let mut raw: Vec<(QVector, Rational)> = p
        .constraints()
        .iter()
        .map(|c| (c.normal.clone(), c.offset.clone()))
        .collect();
    for cand in integer_vectors(p.dim(), norm_bound) {
        if !is_primitive_ints(&cand) {
            continue;
        }
        let cut = chvatal_cut(p, &QVector::from_ints(&cand))?;
        raw.push((cut.normal, cut.offset));
    }
    Polyhedron::from_constraints(p.dim(), raw)
}

/// Convex hull of the points of a bounded polyhedron whose first `m`
/// coordinates are integers, computed by slicing at every feasible integer
/// assignment of those coordinates.
pub fn mixed_integer_hull(p: &Polyhedron, space: MixedIntegerSpace) -> Result<Polyhedron> {
    if space.dim() != p.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            got: space.dim(),
        });
    }
    if !p.is_bounded() {
        return Err(Error::Unbounded);
    }
    if p.is_empty() {
        return Ok(p.clone());
    }
    let d = p.dim();
    let mut grid: Vec<Vec<BigInt>> = vec![Vec::new()];
    for axis in 0..space.m() {
        let e = QVector::unit(d, axis);
        let hi = p.support(&e)?.expect_finite()?.floor_int();
        let lo = -p.support(&e.neg())?.expect_finite()?.floor_int();
        let mut next = Vec::new();
        for prefix in &grid {
            let mut z = lo.clone();
            while z <= hi {
                let mut v = prefix.clone();
                v.push(z.clone());
                next.push(v);
                z += 1;
            }
        }
        grid = next;
    }
    let mut generators: Vec<QVector> = Vec::new();
    for z in grid {
        let mut raw: Vec<(QVector, Rational)> = p
            .constraints()
            .iter()
            .map(|c| (c.normal.clone(), c.offset.clone()))
            .collect();
        for (axis, zi) in z.iter().enumerate() {
            let e = QVector::unit(d, axis);
            raw.push((e.clone(), Rational::from_int(zi.clone())));
            raw.push((e.neg(), Rational::from_int(-zi)));
        }
        let slice = Polyhedron::from_constraints(d, raw)?;
        generators.extend(slice.vertices().iter().cloned());
    }
    if generators.is_empty() {
        return Ok(Polyhedron::empty(d));
    }
    Polyhedron::from_generators(d, generators, Vec::new(), Vec::new())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lp::strictly_feasible_point;
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

    fn worked_p() -> Polyhedron {
        poly(&[(&[-1, 0], 0), (&[0, -1], 0), (&[2, 2], 3)])
    }

    #[test]
    fn split_construction() {
        let s = make_split(&QVector::from_ints(&[1, 0]), 0).unwrap();
        assert_eq!(s.constraints().len(), 2);
        assert!(s.contains(&QVector::new(vec![rat(1, 2), rat(9, 1)])));
        assert!(!s.contains(&QVector::from_ints(&[2, 0])));
        assert_eq!(
            s.max_facet_width().unwrap(),
            ExtendedRational::Finite(rat(1, 1))
        );
        let diag = make_split(&QVector::from_ints(&[1, 1]), 1).unwrap();
        assert!(diag.contains(&QVector::new(vec![rat(3, 4), rat(3, 4)])));
        assert_eq!(
            make_split(&QVector::from_ints(&[2, 0]), 0),
            Err(Error::NotPrimitive)
        );
    }

    #[test]
    fn enumerate_splits_on_worked_instance() {
        let p = worked_p();
        let splits = enumerate_splits(&p, 1).unwrap();
        // Directions (0,1), (1,-1), (1,0), (1,1); value ranges [0,3/2],
        // [-3/2,3/2], [0,3/2], [0,3/2] give 2 + 4 + 2 + 2 slabs.
        assert_eq!(splits.len(), 10);
        for s in &splits {
            let body = s.to_polyhedron();
            // Independent check by exact LP: some point of P strictly
            // between the two split hyperplanes.
            let weak: Vec<(QVector, Rational)> = p
                .constraints()
                .iter()
                .map(|c| (c.normal.clone(), c.offset.clone()))
                .collect();
            let strict: Vec<(QVector, Rational)> = body
                .constraints()
                .iter()
                .map(|c| (c.normal.clone(), c.offset.clone()))
                .collect();
            assert!(
                strictly_feasible_point(&weak, &strict).is_some(),
                "open slab of {s} misses P"
            );
        }
        assert!(enumerate_splits(&p, 0).unwrap().is_empty());
    }

    #[test]
    fn enumerate_splits_needs_finite_width() {
        let quad = poly(&[(&[-1, 0], 0), (&[0, -1], 0)]);
        assert_eq!(enumerate_splits(&quad, 1), Err(Error::UnboundedDirection));
    }

    #[test]
    fn integer_points_of_triangle() {
        let t = poly(&[(&[-1, 0], 0), (&[0, -1], 0), (&[1, 1], 2)]);
        let pts = integer_points(&t).unwrap();
        assert_eq!(pts.len(), 6);
        assert!(pts.contains(&QVector::from_ints(&[1, 1])));
    }

    #[test]
    fn integer_points_of_thin_slab() {
        let thin = Polyhedron::from_constraints(
            2,
            vec![
                (QVector::from_ints(&[1, 0]), rat(1, 2)),
                (QVector::from_ints(&[-1, 0]), rat(-1, 4)),
                (QVector::from_ints(&[0, 1]), rat(1, 1)),
                (QVector::from_ints(&[0, -1]), rat(0, 1)),
            ],
        )
        .unwrap();
        assert!(integer_points(&thin).unwrap().is_empty());
    }

    #[test]
    fn lattice_free_classification() {
        let split = make_split(&QVector::from_ints(&[1, 0]), 0).unwrap();
        assert!(is_lattice_free(&split).unwrap());
        let box2 = poly(&[(&[1, 0], 1), (&[-1, 0], 1), (&[0, 1], 1), (&[0, -1], 1)]);
        assert!(!is_lattice_free(&box2).unwrap());
        assert_eq!(
            interior_integer_point(&box2).unwrap(),
            Some(QVector::from_ints(&[0, 0]))
        );
        let t = poly(&[(&[-1, 0], 0), (&[0, -1], 0), (&[1, 1], 2)]);
        assert!(is_lattice_free(&t).unwrap());
    }

    #[test]
    fn lattice_free_through_lineality_quotient() {
        // A diagonal split contains a line but quotients to a bounded base.
        let diag = make_split(&QVector::from_ints(&[1, 1]), 0).unwrap();
        assert!(is_lattice_free(&diag).unwrap());
        let wide = poly(&[(&[1, 1], 2), (&[-1, -1], 0)]);
        assert!(!is_lattice_free(&wide).unwrap());
        let witness = interior_integer_point(&wide).unwrap().unwrap();
        assert!(wide.interior_contains(&witness) && witness.is_integer());
    }

    #[test]
    fn lattice_free_undecidable_without_bounded_base() {
        let quad = poly(&[(&[-1, 0], 0), (&[0, -1], 0)]);
        assert_eq!(is_lattice_free(&quad), Err(Error::Undecidable));
    }

    #[test]
    fn maximality_examples() {
        let t = poly(&[(&[-1, 0], 0), (&[0, -1], 0), (&[1, 1], 2)]);
        assert!(is_maximal_lattice_free(&t).unwrap());
        let split = make_split(&QVector::from_ints(&[1, 0]), 0).unwrap();
        assert!(is_maximal_lattice_free(&split).unwrap());
        let narrow = poly(&[(&[4, 0], 3), (&[-1, 0], 0), (&[0, 1], 9), (&[0, -1], 9)]);
        assert!(is_lattice_free(&narrow).unwrap());
        assert!(!is_maximal_lattice_free(&narrow).unwrap());
    }

    #[test]
    fn facet_witness_points() {
        let t = poly(&[(&[-1, 0], 0), (&[0, -1], 0), (&[1, 1], 2)]);
        for facet in 0..3 {
            let w = facet_relint_integer_point(&t, facet).unwrap().unwrap();
            assert!(w.is_integer());
            assert!(t.contains(&w));
            let c = &t.constraints()[facet];
            assert_eq!(c.normal.dot(&w), c.offset);
        }
    }

    #[test]
    fn chvatal_cut_examples() {
        let p = worked_p();
        let cut = chvatal_cut(&p, &QVector::from_ints(&[1, 1])).unwrap();
        assert_eq!(cut.normal, QVector::from_ints(&[1, 1]));
        assert_eq!(cut.offset, rat(1, 1));
        let half = Polyhedron::from_constraints(
            2,
            vec![
                (QVector::from_ints(&[1, 0]), rat(1, 2)),
                (QVector::from_ints(&[-1, 0]), rat(0, 1)),
                (QVector::from_ints(&[0, 1]), rat(1, 1)),
                (QVector::from_ints(&[0, -1]), rat(0, 1)),
            ],
        )
        .unwrap();
        let cut = chvatal_cut(&half, &QVector::from_ints(&[1, 0])).unwrap();
        assert_eq!(cut.offset, rat(0, 1));
        assert_eq!(
            chvatal_cut(&p, &QVector::from_ints(&[0, 2])),
            Err(Error::NotPrimitive)
        );
    }

    #[test]
    fn chvatal_closure_on_worked_instance() {
        let p = worked_p();
        let closed = chvatal_closure_bounded(&p, 1).unwrap();
        let expected = Polyhedron::from_generators(
            2,
            vec![
                QVector::from_ints(&[0, 0]),
                QVector::from_ints(&[1, 0]),
                QVector::from_ints(&[0, 1]),
            ],
            vec![],
            vec![],
        )
        .unwrap();
        assert_eq!(closed, expected);
        assert_eq!(chvatal_closure_bounded(&p, 0).unwrap(), p);
        assert_eq!(chvatal_closure_bounded(&expected, 2).unwrap(), expected);
    }

    #[test]
    fn mixed_integer_hull_examples() {
        let p = worked_p();
        let hull = mixed_integer_hull(&p, MixedIntegerSpace::new(2, 0).unwrap()).unwrap();
        let expected = Polyhedron::from_generators(
            2,
            vec![
                QVector::from_ints(&[0, 0]),
                QVector::from_ints(&[1, 0]),
                QVector::from_ints(&[0, 1]),
            ],
            vec![],
            vec![],
        )
        .unwrap();
        assert_eq!(hull, expected);

        let mixed = mixed_integer_hull(&p, MixedIntegerSpace::new(1, 1).unwrap()).unwrap();
        let expected_mixed = Polyhedron::from_generators(
            2,
            vec![
                QVector::from_ints(&[0, 0]),
                QVector::new(vec![rat(0, 1), rat(3, 2)]),
                QVector::from_ints(&[1, 0]),
                QVector::new(vec![rat(1, 1), rat(1, 2)]),
            ],
            vec![],
            vec![],
        )
        .unwrap();
        assert_eq!(mixed, expected_mixed);
        for v in mixed.vertices() {
            assert!(MixedIntegerSpace::new(1, 1).unwrap().contains(v));
        }

        assert_eq!(
            mixed_integer_hull(&expected, MixedIntegerSpace::new(2, 0).unwrap()).unwrap(),
            expected
        );
    }

    #[test]
    fn mixed_integer_space_validation() {
        assert!(MixedIntegerSpace::new(0, 2).is_err());
        let p = worked_p();
        assert_eq!(
            mixed_integer_hull(&p, MixedIntegerSpace::new(1, 0).unwrap()),
            Err(Error::DimensionMismatch {
                expected: 2,
                got: 1
            })
        );
    }
}
