//! Closing a fractional triangle over all unit splits, then iterating.
//!
//! A split is the band between two consecutive integer hyperplanes; its
//! reduction cuts off everything strictly between them. Intersecting the
//! reductions over a family of splits is one closure step. Iterating the
//! step drives the body toward its integer hull; here a single step already
//! lands exactly on it, and the run is traced as CSV with exact Hausdorff
//! distances.
//!
//! Run with: `cargo run --example split_closure_iteration`

use closurelab::{
    closure, enumerate_splits, iterate_closure, rat, trace_to_csv, CutFamily, Polyhedron, QVector,
    Rational, Result, StopReason,
};

fn from_rows(dim: usize, rows: &[(&[i64], Rational)]) -> Polyhedron {
    Polyhedron::from_constraints(
        dim,
        rows.iter()
            .map(|(a, b)| (QVector::from_ints(a), b.clone()))
            .collect(),
    )
    .expect("valid constraints")
}

fn main() -> Result<()> {
    // P = { x >= 0, x1 + x2 <= 3/2 }: a triangle whose top vertex
    // (0, 3/2) and right vertex (3/2, 0) are fractional.
    let p = from_rows(
        2,
        &[
            (&[-1, 0], rat(0, 1)),
            (&[0, -1], rat(0, 1)),
            (&[2, 2], rat(3, 1)),
        ],
    );
    println!("P = triangle with vertices {:?}", p.vertices());

    let splits = enumerate_splits(&p, 1)?;
    println!("splits with |u|_inf <= 1 meeting P's support: {}", splits.len());
    for s in &splits {
        println!("  {s}");
    }

    let family = CutFamily::new(splits.iter().map(|s| s.to_polyhedron()).collect(), None)?;
    let closed = closure(&p, &family)?;
    println!("one closure step gives vertices {:?}", closed.vertices());

    let integer_hull = Polyhedron::from_generators(
        2,
        vec![
            QVector::from_ints(&[0, 0]),
            QVector::from_ints(&[1, 0]),
            QVector::from_ints(&[0, 1]),
        ],
        Vec::new(),
        Vec::new(),
    )?;
    assert_eq!(closed, integer_hull);
    println!("= the integer hull conv{{(0,0),(1,0),(0,1)}}\n");

    // Iterate with the hull as reference: the trace logs each iterate's
    // size and exact distance to the reference, and stops on convergence.
    let trace = iterate_closure(&p, &family, 10, Some(&integer_hull), &rat(0, 1))?;
    assert_eq!(trace.stopped_because, StopReason::Converged);
    assert_eq!(trace.iterates.len(), 2);
    print!("{}", trace_to_csv(&trace));

    Ok(())
}
