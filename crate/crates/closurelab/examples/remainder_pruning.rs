//! Remainder matrices: comparing cuts without computing them.
//!
//! The remainder matrix of `P` against `L` records, for each vertex of `P`
//! and each edge leaving it, how far along the edge one must travel to
//! escape `L` (0 if the vertex is already outside or the edge stays
//! interior, +inf if the vertex survives the cut). If one body's matrix is
//! entrywise <= another's, its reduction is automatically contained in the
//! other's — so dominated family members contribute nothing to a closure
//! and can be pruned. A factorial scaling bound certifies that the finite
//! entries are rationals of bounded complexity.
//!
//! Run with: `cargo run --example remainder_pruning`

use closurelab::{
    closure, dominates, prune_class, rat, reduce, remainder_matrix, scaled_integrality_check,
    CutBounds, CutFamily, Edge, Polyhedron, QVector, Rational, Result,
};

fn from_rows(dim: usize, rows: &[(&[i64], i64)]) -> Polyhedron {
    Polyhedron::from_constraints(
        dim,
        rows.iter()
            .map(|(a, b)| (QVector::from_ints(a), Rational::from_int(*b)))
            .collect(),
    )
    .expect("valid constraints")
}

fn main() -> Result<()> {
    let p = Polyhedron::from_generators(
        2,
        vec![
            QVector::from_ints(&[0, 0]),
            QVector::from_ints(&[2, 0]),
            QVector::from_ints(&[0, 2]),
        ],
        Vec::new(),
        Vec::new(),
    )?;
    let slab = from_rows(2, &[(&[1, 0], 1), (&[-1, 0], 1)]);
    println!("P = triangle (0,0), (2,0), (0,2); L = slab -1 <= x1 <= 1\n");

    let matrix = remainder_matrix(&p, &slab)?;
    println!("remainder matrix (rows: vertices, columns: edges):");
    let label = |e: &Edge| match e {
        Edge::Segment { v, w } => format!("{}--{}", matrix.vertices()[*v], matrix.vertices()[*w]),
        Edge::Ray { v, direction } => format!("{}+t*{}", matrix.vertices()[*v], direction),
    };
    print!("{:>8}", "");
    for e in matrix.edges() {
        print!(" {:>16}", label(e));
    }
    println!();
    for (vi, v) in matrix.vertices().iter().enumerate() {
        print!("{:>8}", v.to_string());
        for ei in 0..matrix.edges().len() {
            print!(" {:>16}", matrix.entry(vi, ei).to_string());
        }
        println!();
    }
    println!();

    // The wider body is escaped later along every edge, so its remainders
    // are entrywise smaller — and smaller remainders cut deeper: dominance
    // certifies containment of reductions without computing any hull.
    let narrow = from_rows(2, &[(&[1, 0], 1), (&[-1, 0], 0)]);
    let narrow_matrix = remainder_matrix(&p, &narrow)?;
    assert!(dominates(&matrix, &narrow_matrix)?);
    assert!(reduce(&p, &narrow)?.contains_polyhedron(&reduce(&p, &slab)?));
    println!("the slab dominates the split 0 <= x1 <= 1: its reduction is smaller");

    // Pruning a family down to the dominance antichain leaves the closure
    // untouched: dominated members contribute redundant intersections.
    let family = CutFamily::new(
        vec![narrow.clone(), slab.clone()],
        Some(CutBounds { k: 2, l: 1, m: 2 }),
    )?;
    let pruned = prune_class(&p, &family)?;
    println!(
        "prune keeps {} of {} members",
        pruned.members().len(),
        family.members().len()
    );
    assert_eq!(pruned.members(), &[slab.clone()]);
    assert_eq!(closure(&p, &pruned)?, closure(&p, &family)?);
    println!("closure over the pruned family is unchanged\n");

    // Integrality certificate: every finite remainder r of a body with
    // facet widths <= k, denominators <= l, and base points m-supported
    // satisfies (k*l*m)! * r in Z>=0. Here (1*1*2)! = 2 clears the
    // half-integer remainders of the split around p0 = (1/2, 0).
    let split = from_rows(2, &[(&[1, 0], 1), (&[-1, 0], 0)]);
    let p0 = QVector::new(vec![rat(1, 2), rat(0, 1)]);
    assert!(scaled_integrality_check(&split, &p0, 1, 1, 2)?);
    println!("(1*1*2)! scales every gauge of the split at (1/2, 0) to an integer");

    Ok(())
}
