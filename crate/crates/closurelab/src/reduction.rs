//! Carving a body out of a polyhedron: `reduce(P, L)` is the closed convex
//! hull of `P` minus the interior of `L`.
//!
//! Not every full-dimensional `L` keeps this operation inside the world of
//! polyhedra. [`classify_reducer`] separates the bodies that do — halfspaces,
//! and bodies whose recession cone is a linear space — from the rest, and
//! [`nonclosed_witness`] backs the negative classification with an explicit
//! polyhedron `K` for which the hull fails to be closed.

use crate::error::{Error, Result};
use crate::lattice::{drop_leading_coords, elimination_map, UnimodularMap};
use crate::linalg::{span_rank, QVector};
use crate::lp::strictly_feasible_point;
use crate::polyhedron::{Edge, Polyhedron};
use crate::rational::{rat, Rational};

/// How a full-dimensional body behaves as the carved-out region of a
/// reduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReducerClass {
    /// A single irredundant inequality. Reductions intersect with the
    /// complementary halfspace.
    Halfspace,
    /// The recession cone is a linear space, so every unbounded direction of
    /// the body is two-sided. Reductions of polyhedra stay polyhedral.
    RecLinear,
    /// Reductions can fail to be closed; see [`nonclosed_witness`].
    NonPreserving,
}

/// A polyhedron `K` whose reduction by a fixed body `L` is not closed,
/// together with the limit point that the hull misses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonClosedWitness {
    /// The reduced polyhedron.
    pub k: Polyhedron,
    /// A point in the closure of `conv(K \ int L)` but not in the hull
    /// itself.
    pub p: QVector,
    /// Primitive integer approach direction: `p - eps * u2` lies in the hull
    /// for every small rational `eps > 0`.
    pub u2: QVector,
}

/// Classifies a full-dimensional body by whether reductions with it preserve
/// polyhedrality.
pub fn classify_reducer(l: &Polyhedron) -> Result<ReducerClass> {
    if !l.is_full_dimensional() {
        return Err(Error::NotFullDimensional);
    }
    if l.constraints().len() == 1 {
        return Ok(ReducerClass::Halfspace);
    }
    if l.rays().is_empty() {
        return Ok(ReducerClass::RecLinear);
    }
    Ok(ReducerClass::NonPreserving)
}

fn require_same_dim(p: &Polyhedron, l: &Polyhedron) -> Result<()> {
    if p.dim() != l.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            got: l.dim(),
        });
    }
    Ok(())
}

/// Whether every vector in `contained` lies in the linear span of `container`.
fn span_contains_all(container: &[QVector], contained: &[QVector]) -> bool {
    let mut joint = container.to_vec();
    joint.extend(contained.iter().cloned());
    span_rank(&joint) == span_rank(container)
}

/// The convex hull of `P` with the interior of `L` removed.
///
/// `L` must be full-dimensional and classify as [`ReducerClass::Halfspace`]
/// or [`ReducerClass::RecLinear`]; those are exactly the bodies for which
/// the hull is again a polyhedron. The result is contained in `P`, shares
/// its recession cone whenever nonempty, and has no extreme point inside
/// `L`.
pub fn reduce(p: &Polyhedron, l: &Polyhedron) -> Result<Polyhedron> {
    require_same_dim(p, l)?;
    match classify_reducer(l)? {
        ReducerClass::NonPreserving => Err(Error::NonPreservingReducer),
        _ if p.is_empty() => Ok(p.clone()),
        ReducerClass::Halfspace => {
            let mut raw: Vec<(QVector, Rational)> = p
                .constraints()
                .iter()
                .map(|c| (c.normal.clone(), c.offset.clone()))
                .collect();
            let flipped = l.constraints()[0].complement();
            raw.push((flipped.normal, flipped.offset));
            Polyhedron::from_constraints(p.dim(), raw)
        }
        ReducerClass::RecLinear if p.lines().is_empty() => reduce_line_free(p, l),
        ReducerClass::RecLinear => {
            // A line of P that escapes L's lineality sweeps every point of P
            // back into the hull: nothing is removed.
            if !span_contains_all(l.lines(), p.lines()) {
                return Ok(p.clone());
            }
            // Otherwise quotient out P's lineality space: a unimodular map
            // sends it to the first k coordinates, where both P and L become
            // products R^k x (base), and the reduction happens on the bases.
            let d = p.dim();
            let k = p.lines().len();
            let map = UnimodularMap::new(elimination_map(p.lines())?, QVector::zeros(d))?;
            let p_base = drop_leading_coords(&map.apply(p), k);
            let l_base = drop_leading_coords(&map.apply(l), k);
            let r_base = reduce(&p_base, &l_base)?;
            if r_base.is_empty() {
                return Ok(Polyhedron::empty(d));
            }
            let lifted: Vec<(QVector, Rational)> = r_base
                .constraints()
                .iter()
                .map(|c| {
                    let mut coords = vec![Rational::zero(); k];
                    coords.extend(c.normal.coords().iter().cloned());
                    (QVector::new(coords), c.offset.clone())
                })
                .collect();
            let r_image = Polyhedron::from_constraints(d, lifted)?;
            Ok(map.inverse().apply(&r_image))
        }
    }
}

/// Core case: `P` line-free and `rec(L)` a linear space. Walks the vertices
/// and edges of `P`, keeps vertices outside the interior of `L`, replaces
/// each edge leaving the interior by its exit point on the boundary of `L`,
/// and rebuilds the hull with `P`'s recession cone attached.
fn reduce_line_free(p: &Polyhedron, l: &Polyhedron) -> Result<Polyhedron> {
    let d = p.dim();
    let (vertices, edges) = p.skeleton_1()?;
    let inside: Vec<bool> = vertices.iter().map(|v| l.interior_contains(v)).collect();
    let mut generators: Vec<QVector> = Vec::new();
    for (i, v) in vertices.iter().enumerate() {
        if !inside[i] {
            generators.push(v.clone());
        }
    }
    for edge in &edges {
        match edge {
            Edge::Segment { v, w } => {
                let (start, end) = match (inside[*v], inside[*w]) {
                    (true, false) => (*v, *w),
                    (false, true) => (*w, *v),
                    // Fully interior segments vanish; segments with both ends
                    // kept are covered by their endpoints.
                    _ => continue,
                };
                let dir = vertices[end].sub(&vertices[start]);
                let rho = l.gauge_unchecked(&vertices[start], &dir)?;
                debug_assert!(rho >= Rational::one());
                generators.push(vertices[start].add_scaled(&rho.recip(), &dir));
            }
            Edge::Ray { v, direction } => {
                if !inside[*v] {
                    continue;
                }
                let rho = l.gauge_unchecked(&vertices[*v], direction)?;
                if rho.is_positive() {
                    generators.push(vertices[*v].add_scaled(&rho.recip(), direction));
                }
                // rho = 0 means the whole edge stays interior to L.
            }
        }
    }
    if generators.is_empty() {
        return Ok(Polyhedron::empty(d));
    }
    Polyhedron::from_generators(d, generators, p.rays().to_vec(), Vec::new())
}

/// The extreme points of `reduce(P, L)` for line-free `P`: vertices of `P`
/// surviving outside the interior of `L` plus the boundary exit points of
/// clipped edges.
pub fn extreme_points_of_reduction(p: &Polyhedron, l: &Polyhedron) -> Result<Vec<QVector>> {
    if !p.lines().is_empty() {
        return Err(Error::NotLineFree);
    }
    let r = reduce(p, l)?;
    if r.is_empty() {
        return Err(Error::EmptyPolyhedron);
    }
    Ok(r.vertices().to_vec())
}

/// Brute-force planar reference for [`reduce`]: clips a bounded polygon
/// against the complement of each facet halfplane of `L` and hulls the
/// union of the resulting vertex sets. Independent of the skeleton-walking
/// implementation; used to cross-validate it.
pub fn reduce_oracle_2d(p: &Polyhedron, l: &Polyhedron) -> Result<Polyhedron> {
    if p.dim() != 2 || l.dim() != 2 {
        return Err(Error::DimensionNot2);
    }
    if !p.is_bounded() {
        return Err(Error::Unbounded);
    }
    let mut generators: Vec<QVector> = Vec::new();
    for c in l.constraints() {
        let mut raw: Vec<(QVector, Rational)> = p
            .constraints()
            .iter()
            .map(|pc| (pc.normal.clone(), pc.offset.clone()))
            .collect();
        let flipped = c.complement();
        raw.push((flipped.normal, flipped.offset));
        let piece = Polyhedron::from_constraints(2, raw)?;
        generators.extend(piece.vertices().iter().cloned());
    }
    if generators.is_empty() {
        return Ok(Polyhedron::empty(2));
    }
    Polyhedron::from_generators(2, generators, Vec::new(), Vec::new())
}

/// Exact membership of `x` in `conv(K \ int L)` — the hull itself, not its
/// closure.
///
/// The set difference splits into the pieces `K ∩ {<a_i, x> >= alpha_i}`,
/// one per constraint of `L`, and a point is in the hull of their union
/// exactly when some subset of pieces admits a convex combination with
/// strictly positive weights. Each subset is decided by one exact linear
/// program; with the weights `lambda_i` kept strict, limit points that every
/// finite combination misses are correctly excluded.
pub fn reduced_hull_contains(k: &Polyhedron, l: &Polyhedron, x: &QVector) -> Result<bool> {
    require_same_dim(k, l)?;
    if x.dim() != k.dim() {
        return Err(Error::DimensionMismatch {
            expected: k.dim(),
            got: x.dim(),
        });
    }
    if k.is_empty() {
        return Ok(false);
    }
    let d = k.dim();
    let mut pieces: Vec<Polyhedron> = Vec::new();
    for c in l.constraints() {
        let mut raw: Vec<(QVector, Rational)> = k
            .constraints()
            .iter()
            .map(|kc| (kc.normal.clone(), kc.offset.clone()))
            .collect();
        let flipped = c.complement();
        raw.push((flipped.normal, flipped.offset));
        let piece = Polyhedron::from_constraints(d, raw)?;
        if !piece.is_empty() {
            pieces.push(piece);
        }
    }
    if pieces.len() > 20 {
        return Err(Error::PreconditionViolated(
            "disjunctive membership supports at most 20 nonempty pieces".into(),
        ));
    }
    for mask in 1u64..(1u64 << pieces.len()) {
        let chosen: Vec<&Polyhedron> = pieces
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, piece)| piece)
            .collect();
        if combination_exists(&chosen, x) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Whether `x = sum_i y_i` with `y_i = lambda_i z_i`, `z_i` in the i-th
/// piece, `lambda_i > 0`, `sum lambda_i = 1`, has a solution.
fn combination_exists(pieces: &[&Polyhedron], x: &QVector) -> bool {
    let d = x.dim();
    let s = pieces.len();
    // Variables: s blocks of d coordinates (the scaled points y_i), then the
    // s weights lambda_i.
    let vars = s * d + s;
    let y_var = |i: usize, c: usize| i * d + c;
    let lambda_var = |i: usize| s * d + i;
    let mut weak: Vec<(QVector, Rational)> = Vec::new();
    let mut strict: Vec<(QVector, Rational)> = Vec::new();
    for c in 0..d {
        let mut row = vec![Rational::zero(); vars];
        for i in 0..s {
            row[y_var(i, c)] = Rational::one();
        }
        let row = QVector::new(row);
        weak.push((row.clone(), x[c].clone()));
        weak.push((row.neg(), -&x[c]));
    }
    let mut weight_row = vec![Rational::zero(); vars];
    for i in 0..s {
        weight_row[lambda_var(i)] = Rational::one();
    }
    let weight_row = QVector::new(weight_row);
    weak.push((weight_row.clone(), Rational::one()));
    weak.push((weight_row.neg(), -Rational::one()));
    for (i, piece) in pieces.iter().enumerate() {
        for pc in piece.constraints() {
            let mut row = vec![Rational::zero(); vars];
            for c in 0..d {
                row[y_var(i, c)] = pc.normal[c].clone();
            }
            row[lambda_var(i)] = -&pc.offset;
            weak.push((QVector::new(row), Rational::zero()));
        }
        let mut row = vec![Rational::zero(); vars];
        row[lambda_var(i)] = -Rational::one();
        strict.push((QVector::new(row), Rational::zero()));
    }
    strictly_feasible_point(&weak, &strict).is_some()
}

/// Builds a polyhedron whose reduction by `L` is not closed, valid whenever
/// `L` classifies as [`ReducerClass::NonPreserving`].
///
/// The construction picks a two-dimensional cross-section of `rec(L)`
/// spanned by directions `u1`, `u2` — the single unbounded direction plus an
/// escaping coordinate axis when `rec(L)` has only one extreme ray, or a
/// two-face of the recession cone otherwise. From an interior point `p` of
/// `L`, the apex `p - 2t*u1` is placed twice as far as the boundary in the
/// reversed direction, and `K` opens from it along `u1` and `-u2`. Points
/// `p - eps*u2` belong to `conv(K \ int L)` for every `eps > 0`, but their
/// limit `p` does not.
pub fn nonclosed_witness(l: &Polyhedron) -> Result<NonClosedWitness> {
    if classify_reducer(l)? != ReducerClass::NonPreserving {
        return Err(Error::PreservingReducer);
    }
    let d = l.dim();
    let rays = l.rays();
    let (u1, u2) = if rays.len() == 1 {
        let u1 = rays[0].clone();
        let mut spanned: Vec<QVector> = l.lines().to_vec();
        spanned.push(u1.clone());
        let base_rank = span_rank(&spanned);
        let mut pick = None;
        for axis in 0..d {
            let e = QVector::unit(d, axis);
            let mut trial = spanned.clone();
            trial.push(e.clone());
            if span_rank(&trial) > base_rank {
                pick = Some(e);
                break;
            }
        }
        // A body whose recession cone fills the whole space with a single
        // extreme ray is a halfspace, which was ruled out by classification.
        let u2 = pick.expect("recession cone of a multi-facet body leaves an axis free");
        (u1, u2)
    } else {
        two_face_pair(d, rays)?
    };
    let p = interior_point(l);
    let rho = l.gauge_unchecked(&p, &u1.neg())?;
    debug_assert!(rho.is_positive(), "reversed extreme ray must leave L");
    let t = rho.recip();
    let apex = p.add_scaled(&(-&t - &t), &u1);
    let k = Polyhedron::from_generators(d, vec![apex], vec![u1, u2.neg()], Vec::new())?;
    Ok(NonClosedWitness { k, p, u2 })
}

/// Two extreme rays spanning a two-dimensional face of the pointed cone
/// generated by `rays`; returns the lexicographically first such pair.
fn two_face_pair(d: usize, rays: &[QVector]) -> Result<(QVector, QVector)> {
    let cone = Polyhedron::from_generators(d, vec![QVector::zeros(d)], rays.to_vec(), Vec::new())?;
    let tight: Vec<Vec<usize>> = rays.iter().map(|r| cone.tight_at(r)).collect();
    for i in 0..rays.len() {
        for j in (i + 1)..rays.len() {
            let common: Vec<usize> = tight[i]
                .iter()
                .copied()
                .filter(|c| tight[j].contains(c))
                .collect();
            if cone.tight_normal_rank(&common) == d - 2 {
                return Ok((rays[i].clone(), rays[j].clone()));
            }
        }
    }
    unreachable!("every extreme ray of a pointed cone of dimension >= 2 lies on a two-face")
}

/// A rational interior point of a full-dimensional nonempty polyhedron:
/// the vertex centroid of the body clipped to a box slightly larger than
/// its vertex coordinates.
fn interior_point(l: &Polyhedron) -> QVector {
    let d = l.dim();
    let mut n = Rational::zero();
    for v in l.vertices() {
        for c in v.iter() {
            if c.abs() > n {
                n = c.abs();
            }
        }
    }
    let n = n + Rational::one();
    let mut raw: Vec<(QVector, Rational)> = l
        .constraints()
        .iter()
        .map(|c| (c.normal.clone(), c.offset.clone()))
        .collect();
    for axis in 0..d {
        let e = QVector::unit(d, axis);
        raw.push((e.clone(), n.clone()));
        raw.push((e.neg(), n.clone()));
    }
    let boxed = Polyhedron::from_constraints(d, raw).expect("box clip of a valid body");
    let verts = boxed.vertices();
    let mut sum = QVector::zeros(d);
    for v in verts {
        sum = sum.add(v);
    }
    sum.scale(&rat(1, verts.len() as i64))
}

/// Checks a witness: `p` must lie outside `conv(K \ int L)` while every
/// `p - eps*u2` lies inside, for each of the given positive offsets.
pub fn verify_witness(l: &Polyhedron, witness: &NonClosedWitness, epsilons: &[Rational]) -> Result<bool> {
    if reduced_hull_contains(&witness.k, l, &witness.p)? {
        return Ok(false);
    }
    for eps in epsilons {
        if !eps.is_positive() {
            return Err(Error::PreconditionViolated(
                "witness offsets must be positive".into(),
            ));
        }
        let approach = witness.p.add_scaled(&-eps, &witness.u2);
        if !reduced_hull_contains(&witness.k, l, &approach)? {
            return Ok(false);
        }
    }
    Ok(true)
}
