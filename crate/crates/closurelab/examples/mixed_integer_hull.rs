//! Mixed-integer hulls: exact hulls of the integer-slice points.
//!
//! In a mixed-integer space only the first `m` coordinates must be
//! integer; the remaining `n` range freely. The mixed-integer hull of a
//! bounded `P` is the convex hull of the slices of `P` at integer values of
//! those leading coordinates. With `m = dim` it is the ordinary integer
//! hull. Split closures never cut below this hull, and iterating them here
//! reaches it exactly.
//!
//! Run with: `cargo run --example mixed_integer_hull`

use closurelab::{
    enumerate_splits, iterate_closure, mixed_integer_hull, rat, CutFamily, MixedIntegerSpace,
    Polyhedron, QVector, Rational, Result, StopReason,
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
    // P = { x >= 0, x1 + x2 <= 3/2 }: a triangle with fractional
    // vertices (3/2, 0) and (0, 3/2).
    let p = from_rows(
        2,
        &[
            (&[-1, 0], rat(0, 1)),
            (&[0, -1], rat(0, 1)),
            (&[2, 2], rat(3, 1)),
        ],
    );
    println!("P has vertices {:?}", p.vertices());

    // Mixed case: x1 integer, x2 continuous. The hull is spanned by the
    // slices at x1 = 0 (where x2 runs to 3/2) and x1 = 1 (x2 up to 1/2);
    // the fractional corner (3/2, 0) is cut off.
    let mixed = mixed_integer_hull(&p, MixedIntegerSpace::new(1, 1)?)?;
    println!("hull with x1 integer: vertices {:?}", mixed.vertices());
    assert!(mixed
        .vertices()
        .contains(&QVector::new(vec![rat(0, 1), rat(3, 2)])));
    assert!(!mixed.contains(&QVector::new(vec![rat(3, 2), rat(0, 1)])));

    // Pure integer case: both coordinates integer.
    let integer = mixed_integer_hull(&p, MixedIntegerSpace::new(2, 0)?)?;
    println!("hull with both integer: vertices {:?}", integer.vertices());
    assert!(mixed.contains_polyhedron(&integer));

    // The split closure iterates down to the pure integer hull.
    let splits = enumerate_splits(&p, 1)?;
    let family = CutFamily::new(splits.iter().map(|s| s.to_polyhedron()).collect(), None)?;
    let trace = iterate_closure(&p, &family, 10, Some(&integer), &rat(0, 1))?;
    assert_eq!(trace.stopped_because, StopReason::Converged);
    println!(
        "split closure converges to the integer hull in {} step(s)",
        trace.iterates.len() - 1
    );
    // Every iterate stays above the hull on the way down.
    for iterate in &trace.iterates {
        assert!(iterate.contains_polyhedron(&integer));
    }
    println!("every iterate contains the hull");

    Ok(())
}
