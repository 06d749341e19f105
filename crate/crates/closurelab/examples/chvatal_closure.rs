//! Chvátal-Gomory cuts: rounding support values down to integers.
//!
//! For a primitive integer direction `u`, every integer point of `P`
//! satisfies `<u, x> <= floor(max_{x in P} <u, x>)`, so the floored
//! inequality is a valid cut for the integer hull. Applying every cut with
//! `|u|_inf <= b` gives a bounded-norm relaxation of the Chvátal closure.
//! It always contains the integer hull; on this triangle bound 1 already
//! reaches it exactly.
//!
//! Run with: `cargo run --example chvatal_closure`

use closurelab::{
    chvatal_closure_bounded, chvatal_cut, mixed_integer_hull, rat, MixedIntegerSpace, Polyhedron,
    QVector, Rational, Result,
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
    let p = from_rows(
        2,
        &[
            (&[-1, 0], rat(0, 1)),
            (&[0, -1], rat(0, 1)),
            (&[2, 2], rat(3, 1)),
        ],
    );
    println!("P = triangle with vertices {:?}", p.vertices());

    // One cut: the support of P in direction (1,1) is 3/2, which no
    // integer point can attain, so it rounds down to 1.
    let cut = chvatal_cut(&p, &QVector::from_ints(&[1, 1]))?;
    println!(
        "cut in direction (1,1): <(1,1), x> <= {} (support was 3/2)",
        cut.offset
    );
    assert_eq!(cut.offset, rat(1, 1));

    // All cuts with |u|_inf <= 1 at once.
    let relaxation = chvatal_closure_bounded(&p, 1)?;
    println!(
        "norm-bound-1 relaxation has vertices {:?}",
        relaxation.vertices()
    );

    // The relaxation can never cut below the integer hull, and a larger
    // norm bound only tightens it.
    let hull = mixed_integer_hull(&p, MixedIntegerSpace::new(2, 0)?)?;
    assert!(relaxation.contains_polyhedron(&hull));
    let tighter = chvatal_closure_bounded(&p, 2)?;
    assert!(relaxation.contains_polyhedron(&tighter));

    // Here bound 1 is already exact.
    assert_eq!(relaxation, hull);
    println!("relaxation (norm bound 1) = integer hull of P");

    Ok(())
}
