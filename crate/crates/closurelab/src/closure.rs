//! Closures over finite families of carved-out bodies: intersect the
//! reductions `reduce(P, L)` over all members `L`, iterate the closure to
//! drive a relaxation toward its mixed-integer hull, and prune redundant
//! members via remainder-matrix dominance.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::linalg::QVector;
use crate::polyhedron::{Edge, Polyhedron};
use crate::rational::{ExtendedRational, Rational};
use crate::reduction::reduce;

/// Per-vertex, per-edge record of how much of each edge of `P` survives a
/// reduction by `L`.
///
/// Rows are indexed by the vertices of `P`, columns by its skeleton edges.
/// The entry for `(v, e)` is `0` when `v` is not an endpoint of `e` or when
/// the whole edge sits inside the interior of `L`, `+inf` when `v` itself
/// is outside that interior (the vertex survives untouched), and otherwise
/// the gauge of the edge direction measured from `v` — the reciprocal of
/// the distance `v` can travel along `e` before leaving `L`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RemainderMatrix {
    vertices: Vec<QVector>,
    edges: Vec<Edge>,
    entries: Vec<ExtendedRational>,
}

impl RemainderMatrix {
    /// Builds a matrix from explicit row-major entries, one row per vertex
    /// and one column per edge. Entries must be nonnegative or `+inf`.
    pub fn new(
        vertices: Vec<QVector>,
        edges: Vec<Edge>,
        entries: Vec<ExtendedRational>,
    ) -> Result<Self> {
        if entries.len() != vertices.len() * edges.len() {
            return Err(Error::ShapeMismatch);
        }
        let negative = entries
            .iter()
            .any(|e| matches!(e, ExtendedRational::Finite(r) if r.is_negative()));
        if negative {
            return Err(Error::PreconditionViolated(
                "remainder entries must be nonnegative".into(),
            ));
        }
        Ok(RemainderMatrix {
            vertices,
            edges,
            entries,
        })
    }

    pub fn vertices(&self) -> &[QVector] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn entry(&self, vertex: usize, edge: usize) -> &ExtendedRational {
        &self.entries[vertex * self.edges.len() + edge]
    }

    fn same_shape(&self, other: &RemainderMatrix) -> bool {
        self.vertices == other.vertices && self.edges == other.edges
    }
}

/// Certified bounds attached to a [`CutFamily`]: `k` caps every member's
/// maximum facet width, `l` scales every facet hyperplane onto the integer
/// lattice, and `m` clears the denominators of the points gauges are
/// measured from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CutBounds {
    pub k: u32,
    pub l: u32,
    pub m: u32,
}

impl CutBounds {
    /// `(k * l * m)!` — the scaling factor that turns every gauge produced
    /// under these bounds into a nonnegative integer.
    pub fn scaling_factorial(&self) -> BigInt {
        let n = u64::from(self.k) * u64::from(self.l) * u64::from(self.m);
        let mut acc = BigInt::one();
        for i in 2..=n {
            acc *= i;
        }
        acc
    }
}

/// An ordered family of full-dimensional bodies to carve out, optionally
/// carrying certified width/lattice/denominator bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutFamily {
    members: Vec<Polyhedron>,
    bounds: Option<CutBounds>,
}

impl CutFamily {
    pub fn new(members: Vec<Polyhedron>, bounds: Option<CutBounds>) -> Result<Self> {
        for member in &members {
            if !member.is_full_dimensional() {
                return Err(Error::NotFullDimensional);
            }
        }
        if let Some(b) = &bounds {
            let k = Rational::from_int(i64::from(b.k));
            let l = Rational::from_int(i64::from(b.l));
            for (i, member) in members.iter().enumerate() {
                match member.max_facet_width()? {
                    ExtendedRational::Finite(w) if w <= k => {}
                    _ => {
                        return Err(Error::PreconditionViolated(format!(
                            "member {i} has maximum facet width above the bound k = {}",
                            b.k
                        )));
                    }
                }
                for c in member.constraints() {
                    if !(&l * &c.offset).is_integer() {
                        return Err(Error::PreconditionViolated(format!(
                            "member {i} has a facet hyperplane that l = {} does not scale onto \
                             the integer lattice",
                            b.l
                        )));
                    }
                }
            }
        }
        Ok(CutFamily { members, bounds })
    }

    pub fn members(&self) -> &[Polyhedron] {
        &self.members
    }

    pub fn bounds(&self) -> Option<&CutBounds> {
        self.bounds.as_ref()
    }
}

/// How an iterated closure run ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StopReason {
    /// The distance to the reference body dropped to the tolerance.
    Converged,
    /// The iteration budget ran out first.
    MaxIterations,
    /// Two consecutive iterates were identical.
    Fixpoint,
}

/// The iterates of a repeated closure, with optional distances to a
/// reference body, and the reason the run stopped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IterationTrace {
    pub iterates: Vec<Polyhedron>,
    pub distances: Option<Vec<ExtendedRational>>,
    pub stopped_because: StopReason,
}

/// Computes the remainder matrix of `P` against `L`: for each vertex and
/// incident skeleton edge, how far along the edge the reduction by `L`
/// lets the vertex travel.
pub fn remainder_matrix(p: &Polyhedron, l: &Polyhedron) -> Result<RemainderMatrix> {
    if !p.lines().is_empty() {
        return Err(Error::NotLineFree);
    }
    if !l.rays().is_empty() {
        return Err(Error::RecessionNotLinear);
    }
    let (vertices, edges) = p.skeleton_1()?;
    let mut entries = Vec::with_capacity(vertices.len() * edges.len());
    for (vi, v) in vertices.iter().enumerate() {
        let interior = l.interior_contains(v);
        for edge in &edges {
            let entry = if !edge.touches(vi) {
                ExtendedRational::zero()
            } else if !interior {
                ExtendedRational::PosInfinity
            } else if matches!(edge, Edge::Segment { v: a, w: b }
                if l.interior_contains(&vertices[if *a == vi { *b } else { *a }]))
            {
                // Both endpoints interior: the whole segment is swallowed.
                ExtendedRational::zero()
            } else {
                let direction = edge
                    .direction_from(vi, &vertices)
                    .expect("edge touches the vertex");
                ExtendedRational::Finite(l.gauge(v, &direction)?)
            };
            entries.push(entry);
        }
    }
    Ok(RemainderMatrix {
        vertices,
        edges,
        entries,
    })
}

/// Entrywise comparison: `first` dominates when every entry is at most the
/// corresponding entry of `second`, which makes `reduce(P, L_first)` a
/// subset of `reduce(P, L_second)`.
pub fn dominates(first: &RemainderMatrix, second: &RemainderMatrix) -> Result<bool> {
    if !first.same_shape(second) {
        return Err(Error::ShapeMismatch);
    }
    Ok(first
        .entries
        .iter()
        .zip(second.entries.iter())
        .all(|(a, b)| a <= b))
}

/// Indices of the entrywise-minimal matrices, first occurrence per
/// duplicate. Every input matrix is entrywise above some selected one, and
/// no selected matrix is strictly below another.
pub fn minimal_antichain(items: &[RemainderMatrix]) -> Result<Vec<usize>> {
    for item in items.iter().skip(1) {
        if !item.same_shape(&items[0]) {
            return Err(Error::ShapeMismatch);
        }
    }
    let mut representatives: Vec<usize> = Vec::new();
    for (i, item) in items.iter().enumerate() {
        if !representatives.iter().any(|&j| items[j] == *item) {
            representatives.push(i);
        }
    }
    let mut selected = Vec::new();
    for &i in &representatives {
        let minimal = representatives
            .iter()
            .all(|&j| j == i || !dominates(&items[j], &items[i]).unwrap_or(false));
        if minimal {
            selected.push(i);
        }
    }
    Ok(selected)
}

/// Thins a family down to the members whose remainder matrices against `P`
/// are minimal; the closure of `P` over the pruned family equals the
/// closure over the original. When the family carries bounds, every
/// retained finite remainder entry is checked to become a nonnegative
/// integer under the `(k*l*m)!` scaling, and `m` must clear the vertex
/// denominators.
pub fn prune_class(p: &Polyhedron, family: &CutFamily) -> Result<CutFamily> {
    let matrices: Vec<RemainderMatrix> = family
        .members()
        .iter()
        .map(|l| remainder_matrix(p, l))
        .collect::<Result<_>>()?;
    let keep = minimal_antichain(&matrices)?;
    if let Some(b) = family.bounds() {
        let m = Rational::from_int(i64::from(b.m));
        for (vi, v) in matrices
            .first()
            .map(|r| r.vertices())
            .unwrap_or(&[])
            .iter()
            .enumerate()
        {
            if !v.scale(&m).is_integer() {
                return Err(Error::PreconditionViolated(format!(
                    "denominator bound m = {} does not clear vertex {vi}",
                    b.m
                )));
            }
        }
        let factorial = Rational::from_int(b.scaling_factorial());
        for &i in &keep {
            for entry in &matrices[i].entries {
                if let ExtendedRational::Finite(r) = entry {
                    let scaled = &factorial * r;
                    if !scaled.is_integer() || scaled.is_negative() {
                        return Err(Error::PreconditionViolated(format!(
                            "remainder {r} of member {i} is not a nonnegative integer after \
                             scaling by (k*l*m)!"
                        )));
                    }
                }
            }
        }
    }
    Ok(CutFamily {
        members: keep.iter().map(|&i| family.members()[i].clone()).collect(),
        bounds: family.bounds().copied(),
    })
}

/// Verifies on a deterministic sample of integer directions that gauges of
/// `L` measured from `p` become nonnegative integers after scaling by
/// `(k*l*m)!`. The sample is every nonzero integer vector with entries in
/// `[-2, 2]`.
///
/// Preconditions, each reported by name when violated: `p` interior to `L`
/// with denominators cleared by `m`, maximum facet width of `L` at most
/// `k`, and every facet hyperplane scaled onto the integer lattice by `l`.
pub fn scaled_integrality_check(
    l: &Polyhedron,
    p: &QVector,
    k: u32,
    ell: u32,
    m: u32,
) -> Result<bool> {
    if !l.interior_contains(p) {
        return Err(Error::PreconditionViolated(
            "base point is not interior to the body".into(),
        ));
    }
    if !p.scale(&Rational::from_int(i64::from(m))).is_integer() {
        return Err(Error::PreconditionViolated(format!(
            "denominator bound m = {m} does not clear the base point"
        )));
    }
    match l.max_facet_width()? {
        ExtendedRational::Finite(w) if w <= Rational::from_int(i64::from(k)) => {}
        _ => {
            return Err(Error::PreconditionViolated(format!(
                "maximum facet width exceeds the bound k = {k}"
            )));
        }
    }
    let ell_rat = Rational::from_int(i64::from(ell));
    for c in l.constraints() {
        if !(&ell_rat * &c.offset).is_integer() {
            return Err(Error::PreconditionViolated(format!(
                "facet lattice bound l = {ell} does not place every facet hyperplane on the \
                 integer lattice"
            )));
        }
    }
    let factorial = Rational::from_int(
        CutBounds { k, l: ell, m }.scaling_factorial(),
    );
    for z in crate::lattice::integer_vectors(l.dim(), 2) {
        if z.iter().all(|&c| c == 0) {
            continue;
        }
        let gauge = l.gauge(p, &QVector::from_ints(&z))?;
        let scaled = &factorial * &gauge;
        if !scaled.is_integer() || scaled.is_negative() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The closure of `P` over a family: the intersection of the reductions
/// `reduce(P, L)` over all members `L`, assembled from the concatenated
/// constraint systems in one canonicalization pass.
pub fn closure(p: &Polyhedron, family: &CutFamily) -> Result<Polyhedron> {
    if family.members().is_empty() {
        return Err(Error::EmptyFamily);
    }
    let mut raw: Vec<(QVector, Rational)> = Vec::new();
    for member in family.members() {
        let reduced = reduce(p, member)?;
        if reduced.is_empty() {
            return Ok(Polyhedron::empty(p.dim()));
        }
        raw.extend(
            reduced
                .constraints()
                .iter()
                .map(|c| (c.normal.clone(), c.offset.clone())),
        );
    }
    Polyhedron::from_constraints(p.dim(), raw)
}

/// Repeats [`closure`] from `P`, recording every iterate. Stops when the
/// distance to `reference` drops to `tol` (`Converged`), two consecutive
/// iterates coincide (`Fixpoint`), or `max_iterations` closures have been
/// taken (`MaxIterations`). The reference body, when given, must be
/// contained in `P`.
pub fn iterate_closure(
    p: &Polyhedron,
    family: &CutFamily,
    max_iterations: usize,
    reference: Option<&Polyhedron>,
    tol: &Rational,
) -> Result<IterationTrace> {
    if let Some(r) = reference {
        if !p.contains_polyhedron(r) {
            return Err(Error::ReferenceNotContained);
        }
    }
    let tolerance = ExtendedRational::Finite(tol.clone());
    let mut iterates = vec![p.clone()];
    let mut distances = match reference {
        Some(r) => {
            let d = p.hausdorff_distance(r)?;
            let converged = d <= tolerance;
            let distances = vec![d];
            if converged {
                return Ok(IterationTrace {
                    iterates,
                    distances: Some(distances),
                    stopped_because: StopReason::Converged,
                });
            }
            Some(distances)
        }
        None => None,
    };
    for _ in 1..=max_iterations {
        let next = closure(iterates.last().expect("nonempty"), family)?;
        iterates.push(next);
        if let (Some(r), Some(ds)) = (reference, distances.as_mut()) {
            let d = iterates.last().expect("nonempty").hausdorff_distance(r)?;
            let converged = d <= tolerance;
            ds.push(d);
            if converged {
                return Ok(IterationTrace {
                    iterates,
                    distances,
                    stopped_because: StopReason::Converged,
                });
            }
        }
        let n = iterates.len();
        if iterates[n - 1] == iterates[n - 2] {
            return Ok(IterationTrace {
                iterates,
                distances,
                stopped_because: StopReason::Fixpoint,
            });
        }
    }
    Ok(IterationTrace {
        iterates,
        distances,
        stopped_because: StopReason::MaxIterations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{enumerate_splits, mixed_integer_hull, MixedIntegerSpace};
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

    fn hull(points: &[&[i64]]) -> Polyhedron {
        let dim = points[0].len();
        Polyhedron::from_generators(
            dim,
            points.iter().map(|p| QVector::from_ints(p)).collect(),
            Vec::new(),
            Vec::new(),
        )
        .unwrap()
    }

    fn triangle() -> Polyhedron {
        hull(&[&[0, 0], &[2, 0], &[0, 2]])
    }

    fn slab(lo: i64, hi: i64) -> Polyhedron {
        poly(&[(&[1, 0], hi), (&[-1, 0], -lo)])
    }

    fn worked_p() -> Polyhedron {
        poly(&[(&[-1, 0], 0), (&[0, -1], 0), (&[2, 2], 3)])
    }

    fn split_family(p: &Polyhedron, bound: i64) -> CutFamily {
        let members = enumerate_splits(p, bound)
            .unwrap()
            .into_iter()
            .map(|s| s.to_polyhedron())
            .collect();
        CutFamily::new(members, Some(CutBounds { k: 1, l: 1, m: 2 })).unwrap()
    }

    #[test]
    fn remainder_matrix_worked_entries() {
        let r = remainder_matrix(&triangle(), &slab(-1, 1)).unwrap();
        // Vertices sort as (0,0), (0,2), (2,0); edges pair them in index
        // order: [(0,0)-(0,2)], [(0,0)-(2,0)], [(0,2)-(2,0)].
        assert_eq!(r.vertices().len(), 3);
        assert_eq!(r.edges().len(), 3);
        let fin = |p: i64, q: i64| ExtendedRational::Finite(rat(p, q));
        assert_eq!(*r.entry(0, 0), ExtendedRational::zero()); // edge inside the slab
        assert_eq!(*r.entry(0, 1), fin(1, 1)); // exits at (1,0)
        assert_eq!(*r.entry(1, 2), fin(1, 1)); // exits at (1,1)
        assert_eq!(*r.entry(2, 1), ExtendedRational::PosInfinity); // (2,0) survives
        assert_eq!(*r.entry(2, 2), ExtendedRational::PosInfinity);
        assert_eq!(*r.entry(1, 1), ExtendedRational::zero()); // not incident
    }

    #[test]
    fn remainder_matrix_extreme_cases() {
        // Body misses P entirely: every incident entry is +inf.
        let far = remainder_matrix(&triangle(), &slab(50, 60)).unwrap();
        for vi in 0..far.vertices().len() {
            for ei in 0..far.edges().len() {
                if far.edges()[ei].touches(vi) {
                    assert_eq!(*far.entry(vi, ei), ExtendedRational::PosInfinity);
                }
            }
        }
        // P inside the interior: every entry is 0.
        let inside = remainder_matrix(&triangle(), &slab(-50, 60)).unwrap();
        for entry in &inside.entries {
            assert_eq!(*entry, ExtendedRational::zero());
        }
    }

    #[test]
    fn remainder_matrix_preconditions() {
        let strip = poly(&[(&[1, 0], 1), (&[-1, 0], 0)]);
        assert!(matches!(
            remainder_matrix(&strip, &slab(-1, 1)),
            Err(Error::NotLineFree)
        ));
        let corner = poly(&[(&[1, 0], 1), (&[0, 1], 1)]);
        assert!(matches!(
            remainder_matrix(&triangle(), &corner),
            Err(Error::RecessionNotLinear)
        ));
    }

    #[test]
    fn dominance_matches_containment() {
        let narrow = remainder_matrix(&triangle(), &slab(-1, 1)).unwrap();
        let wide = remainder_matrix(&triangle(), &slab(-2, 2)).unwrap();
        assert!(dominates(&wide, &narrow).unwrap());
        assert!(!dominates(&narrow, &wide).unwrap());
        assert!(dominates(&narrow, &narrow).unwrap());
        let r_wide = reduce(&triangle(), &slab(-2, 2)).unwrap();
        let r_narrow = reduce(&triangle(), &slab(-1, 1)).unwrap();
        assert!(r_narrow.contains_polyhedron(&r_wide));
    }

    #[test]
    fn dominance_requires_matching_shape() {
        let a = remainder_matrix(&triangle(), &slab(-1, 1)).unwrap();
        let square = hull(&[&[0, 0], &[3, 0], &[0, 3], &[3, 3]]);
        let b = remainder_matrix(&square, &slab(-1, 1)).unwrap();
        assert_eq!(dominates(&a, &b), Err(Error::ShapeMismatch));
    }

    #[test]
    fn antichain_selection() {
        let narrow = remainder_matrix(&triangle(), &slab(-1, 1)).unwrap();
        let wide = remainder_matrix(&triangle(), &slab(-2, 2)).unwrap();
        let far = remainder_matrix(&triangle(), &slab(50, 60)).unwrap();
        // wide <= narrow <= far, so only wide is minimal.
        assert_eq!(
            minimal_antichain(&[narrow.clone(), wide.clone(), far.clone()]).unwrap(),
            vec![1]
        );
        // Duplicates collapse to the first occurrence.
        assert_eq!(
            minimal_antichain(&[narrow.clone(), narrow.clone()]).unwrap(),
            vec![0]
        );
        assert_eq!(minimal_antichain(&[far.clone()]).unwrap(), vec![0]);
        // Incomparable pair: both stay.
        let left = remainder_matrix(&triangle(), &slab(-5, 1)).unwrap();
        let diag = remainder_matrix(&triangle(), &poly(&[(&[1, 1], 3), (&[-1, -1], 0)])).unwrap();
        assert_eq!(minimal_antichain(&[left, diag]).unwrap(), vec![0, 1]);
    }

    #[test]
    fn pruning_keeps_dominating_members() {
        let family = CutFamily::new(vec![slab(-1, 1), slab(50, 60), slab(-1, 1)], None).unwrap();
        let pruned = prune_class(&triangle(), &family).unwrap();
        assert_eq!(pruned.members(), &[slab(-1, 1)]);
        let c_full = closure(&triangle(), &family).unwrap();
        let c_pruned = closure(&triangle(), &pruned).unwrap();
        assert_eq!(c_full, c_pruned);
    }

    #[test]
    fn pruning_checks_certified_bounds() {
        let p = worked_p();
        let family = split_family(&p, 1);
        let pruned = prune_class(&p, &family).unwrap();
        assert!(!pruned.members().is_empty());
        assert_eq!(pruned.bounds(), family.bounds());
        // All vertices of P have halves at worst, so m = 2 clears them; a
        // bound of m = 1 leaves (3/2, 0) fractional and must be refused.
        let bad = CutFamily::new(
            family.members().to_vec(),
            Some(CutBounds { k: 1, l: 1, m: 1 }),
        )
        .unwrap();
        assert!(matches!(
            prune_class(&p, &bad),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn family_bounds_are_validated_on_construction() {
        // Facet width 2 > k = 1.
        assert!(matches!(
            CutFamily::new(vec![slab(0, 2)], Some(CutBounds { k: 1, l: 1, m: 1 })),
            Err(Error::PreconditionViolated(_))
        ));
        // Fractional facet offset needs l = 2.
        let half_slab = Polyhedron::from_constraints(
            2,
            vec![
                (QVector::from_ints(&[1, 0]), rat(1, 2)),
                (QVector::from_ints(&[-1, 0]), rat(1, 2)),
            ],
        )
        .unwrap();
        assert!(matches!(
            CutFamily::new(
                vec![half_slab.clone()],
                Some(CutBounds { k: 1, l: 1, m: 1 })
            ),
            Err(Error::PreconditionViolated(_))
        ));
        assert!(CutFamily::new(vec![half_slab], Some(CutBounds { k: 1, l: 2, m: 1 })).is_ok());
        // Lower-dimensional members are rejected outright.
        let segment = poly(&[(&[1, 0], 0), (&[-1, 0], 0), (&[0, 1], 1), (&[0, -1], 0)]);
        assert_eq!(
            CutFamily::new(vec![segment], None),
            Err(Error::NotFullDimensional)
        );
    }

    #[test]
    fn integrality_check_examples() {
        let split = poly(&[(&[1, 0], 1), (&[-1, 0], 0)]);
        let p = QVector::new(vec![rat(1, 2), rat(0, 1)]);
        assert!(scaled_integrality_check(&split, &p, 1, 1, 2).unwrap());
        let box2 = poly(&[(&[1, 0], 1), (&[-1, 0], 1), (&[0, 1], 1), (&[0, -1], 1)]);
        assert!(scaled_integrality_check(&box2, &QVector::zeros(2), 2, 1, 1).unwrap());
        assert!(matches!(
            scaled_integrality_check(&split, &QVector::from_ints(&[5, 0]), 1, 1, 2),
            Err(Error::PreconditionViolated(_))
        ));
        // An irrational-free but misaligned base point: gauges pick up
        // denominators the factorial cannot clear.
        let off = QVector::new(vec![rat(1, 7), rat(0, 1)]);
        assert!(matches!(
            scaled_integrality_check(&split, &off, 1, 1, 2),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn closure_of_worked_instance_is_fractional_hull() {
        let p = worked_p();
        let family = split_family(&p, 1);
        let closed = closure(&p, &family).unwrap();
        let expected = hull(&[&[0, 0], &[1, 0], &[0, 1]]);
        assert_eq!(closed, expected);
        assert_eq!(
            mixed_integer_hull(&p, MixedIntegerSpace::new(2, 0).unwrap()).unwrap(),
            expected
        );
    }

    #[test]
    fn closure_edge_cases() {
        let empty_family = CutFamily::new(Vec::new(), None).unwrap();
        assert_eq!(closure(&triangle(), &empty_family), Err(Error::EmptyFamily));
        let far = CutFamily::new(vec![slab(50, 60)], None).unwrap();
        assert_eq!(closure(&triangle(), &far).unwrap(), triangle());
        let everything = CutFamily::new(vec![slab(-50, 60)], None).unwrap();
        assert!(closure(&triangle(), &everything).unwrap().is_empty());
    }

    #[test]
    fn iteration_converges_on_worked_instance() {
        let p = worked_p();
        let family = split_family(&p, 1);
        let reference = hull(&[&[0, 0], &[1, 0], &[0, 1]]);
        let trace = iterate_closure(&p, &family, 10, Some(&reference), &rat(0, 1)).unwrap();
        assert_eq!(trace.stopped_because, StopReason::Converged);
        assert_eq!(trace.iterates.len(), 2);
        let ds = trace.distances.unwrap();
        assert_eq!(ds, vec![
            ExtendedRational::Finite(rat(1, 2)),
            ExtendedRational::zero(),
        ]);
    }

    #[test]
    fn iteration_stops_at_fixpoint_and_budget() {
        let far = CutFamily::new(vec![slab(50, 60)], None).unwrap();
        let trace = iterate_closure(&triangle(), &far, 5, None, &rat(0, 1)).unwrap();
        assert_eq!(trace.stopped_because, StopReason::Fixpoint);
        assert_eq!(trace.iterates.len(), 2);
        assert_eq!(trace.iterates[1], triangle());
        assert!(trace.distances.is_none());

        let trace = iterate_closure(&triangle(), &far, 0, None, &rat(0, 1)).unwrap();
        assert_eq!(trace.stopped_because, StopReason::MaxIterations);
        assert_eq!(trace.iterates.len(), 1);
    }

    #[test]
    fn iteration_rejects_escaping_reference() {
        let family = split_family(&worked_p(), 1);
        let outside = hull(&[&[5, 5], &[6, 5], &[5, 6]]);
        assert_eq!(
            iterate_closure(&worked_p(), &family, 3, Some(&outside), &rat(0, 1)),
            Err(Error::ReferenceNotContained)
        );
    }

    #[test]
    fn iterates_shrink() {
        let p = poly(&[(&[-1, 0], 0), (&[0, -1], 0), (&[2, 2], 7)]);
        let family = split_family(&p, 1);
        let trace = iterate_closure(&p, &family, 4, None, &rat(0, 1)).unwrap();
        assert!(trace.iterates.len() > 2, "closure should take several steps");
        for pair in trace.iterates.windows(2) {
            assert!(pair[0].contains_polyhedron(&pair[1]));
        }
        let last = trace.iterates.last().unwrap();
        let integral = hull(&[&[0, 0], &[3, 0], &[0, 3]]);
        assert!(last.contains_polyhedron(&integral));
    }
}
