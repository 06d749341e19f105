//! Conversions between inequality and generator descriptions via the
//! double description method on the homogenization cone.

use crate::dd::dd_cone;
use crate::linalg::{primitive_vector, QVector};
use crate::rational::Rational;

use super::{Constraint, HPolyhedron, VPolyhedron};

fn lift(v: &QVector, last: Rational) -> QVector {
    let mut c = v.coords().to_vec();
    c.push(last);
    QVector::new(c)
}

fn split_last(v: &QVector) -> (QVector, Rational) {
    let d = v.dim() - 1;
    (
        QVector::new(v.coords()[..d].to_vec()),
        v[d].clone(),
    )
}

/// Vertex/ray/line description of `{ x : <a, x> <= alpha }`, or `None` when
/// the system is infeasible. Constraints must be primitive and sorted.
pub(super) fn h_to_v(dim: usize, constraints: &[(QVector, Rational)]) -> Option<VPolyhedron> {
    // Homogenize: { (x, t) : <a, x> - alpha t <= 0, t >= 0 }.
    let mut cone_constraints = Vec::with_capacity(constraints.len() + 1);
    let mut t_axis = vec![Rational::zero(); dim + 1];
    t_axis[dim] = -Rational::one();
    cone_constraints.push(QVector::new(t_axis));
    for (a, alpha) in constraints {
        cone_constraints.push(lift(a, -alpha.clone()));
    }
    let gens = dd_cone(dim + 1, &cone_constraints);
    let mut vertices = Vec::new();
    let mut rays = Vec::new();
    let mut lines = Vec::new();
    for r in &gens.rays {
        let (x, t) = split_last(r);
        debug_assert!(!t.is_negative());
        if t.is_zero() {
            rays.push(primitive_vector(&x).expect("recession ray is nonzero"));
        } else {
            vertices.push(x.scale(&t.recip()));
        }
    }
    for l in &gens.lines {
        let (x, t) = split_last(l);
        debug_assert!(t.is_zero(), "lines cannot leave the t = 0 hyperplane");
        lines.push(x);
    }
    if vertices.is_empty() {
        return None;
    }
    vertices.sort();
    rays.sort();
    Some(VPolyhedron::new(dim, vertices, rays, lines))
}

/// Irredundant inequality description of a nonempty generator description.
/// Implicit equalities come out as complementary constraint pairs.
pub(super) fn v_to_h(v: &VPolyhedron) -> HPolyhedron {
    debug_assert!(!v.vertices().is_empty());
    let dim = v.dim();
    // Feasible (a, beta) pairs of valid inequalities form a cone in R^{d+1}.
    let mut cone_constraints = Vec::new();
    for vertex in v.vertices() {
        cone_constraints.push(lift(vertex, -Rational::one()));
    }
    for ray in v.rays() {
        cone_constraints.push(lift(ray, Rational::zero()));
    }
    for line in v.lines() {
        cone_constraints.push(lift(line, Rational::zero()));
        cone_constraints.push(lift(&line.neg(), Rational::zero()));
    }
    cone_constraints.sort();
    cone_constraints.dedup();
    let gens = dd_cone(dim + 1, &cone_constraints);
    let mut out: Vec<Constraint> = Vec::new();
    let mut push = |a: QVector, beta: Rational| {
        if a.is_zero() {
            return; // the trivial inequality 0 <= beta
        }
        let p = primitive_vector(&a).expect("normal is nonzero");
        let k = a.iter().position(|c| !c.is_zero()).expect("nonzero");
        let lambda = p[k].clone() / a[k].clone();
        out.push(Constraint::new(p, lambda * beta));
    };
    for r in &gens.rays {
        let (a, beta) = split_last(r);
        push(a, beta);
    }
    for l in &gens.lines {
        let (a, beta) = split_last(l);
        push(a.neg(), -&beta);
        push(a, beta);
    }
    out.sort();
    out.dedup();
    HPolyhedron::new(dim, out)
}
