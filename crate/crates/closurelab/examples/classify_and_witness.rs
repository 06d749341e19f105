//! Which bodies keep reductions polyhedral — and a certificate when they
//! don't.
//!
//! Reducing by `L` stays polyhedral in exactly two cases: `L` is a
//! halfspace, or `L` recedes in a linear space (no genuine rays). For any
//! other `L` there is a polyhedron `K` whose reduction is not closed:
//! a boundary point `p` is missing from `conv(K \ int L)` although the
//! whole segment `p - eps*u2` (eps > 0) lies inside. `nonclosed_witness`
//! builds such a `(K, p, u2)` triple and `reduced_hull_contains` checks
//! membership exactly, so the certificate can be verified independently.
//!
//! Run with: `cargo run --example classify_and_witness`

use closurelab::{
    classify_reducer, nonclosed_witness, rat, reduced_hull_contains, verify_witness, Polyhedron,
    QVector, Rational, ReducerClass, Result,
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
    let halfspace = from_rows(2, &[(&[0, 1], 0)]);
    let split = from_rows(2, &[(&[1, 0], 1), (&[-1, 0], 0)]);
    let orthant = from_rows(2, &[(&[1, 0], 0), (&[0, 1], 0)]);

    for (name, l) in [
        ("halfspace x2 <= 0", &halfspace),
        ("split 0 <= x1 <= 1", &split),
        ("nonpositive orthant", &orthant),
    ] {
        println!("{name}: {:?}", classify_reducer(l)?);
    }
    println!();

    // The orthant has two genuine rays, so some reduction fails to be
    // closed. Build the certificate.
    assert_eq!(classify_reducer(&orthant)?, ReducerClass::NonPreserving);
    let witness = nonclosed_witness(&orthant)?;
    println!("witness cone K has apex {:?}", witness.k.vertices());
    println!("  rays {:?}", witness.k.rays());
    println!("missing boundary point p = {}", witness.p);
    println!("approach direction    u2 = {}", witness.u2);

    // p itself is NOT in conv(K \ int L) ...
    assert!(!reduced_hull_contains(&witness.k, &orthant, &witness.p)?);
    println!("p is outside conv(K \\ int L)");

    // ... yet every point p - eps*u2 with eps > 0 is inside, so p is a
    // limit of members and the hull is not closed.
    for eps in [rat(1, 1), rat(1, 2), rat(1, 4), rat(1, 8)] {
        let probe = witness.p.add_scaled(&-&eps, &witness.u2);
        assert!(reduced_hull_contains(&witness.k, &orthant, &probe)?);
        println!("p - {eps} * u2 = {probe} is inside");
    }

    // The bundled checker runs the same verification in one call.
    let eps = [rat(1, 1), rat(1, 2), rat(1, 4), rat(1, 8)];
    assert!(verify_witness(&orthant, &witness, &eps)?);
    println!("witness verified: the reduction of K by L is not closed");

    Ok(())
}
