//! Gauges, crossing points, support values, and polar bodies.
//!
//! The gauge of a direction `u` at a base point `v` inside a body `L`
//! measures how quickly the ray `v + t*u` escapes: it is the largest
//! ratio `<a_i, u> / (alpha_i - <a_i, v>)` over the facets, clamped at 0.
//! A positive gauge `rho` puts the escape point exactly at `v + u/rho`;
//! gauge 0 means the ray never leaves. The same facet data yields support
//! values, lattice widths, and — for bodies with the origin interior —
//! the polar body.
//!
//! Run with: `cargo run --example polar_gauge_geometry`

use closurelab::{rat, ExtendedRational, Polyhedron, QVector, Rational, Result};

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
    // L = slab -1 <= x1 <= 1, unbounded vertically.
    let slab = from_rows(2, &[(&[1, 0], 1), (&[-1, 0], 1)]);
    let origin = QVector::from_ints(&[0, 0]);

    // Walking right from the origin: the facet x1 <= 1 is hit at distance
    // 1, so the gauge is 1 and the crossing point is (1, 0).
    let right = QVector::from_ints(&[1, 0]);
    let rho = slab.gauge(&origin, &right)?;
    println!("gauge of (1,0) at the origin in the slab: {rho}");
    assert_eq!(rho, rat(1, 1));
    let crossing = origin.add_scaled(&rho.recip(), &right);
    println!("crossing point: {crossing}");
    assert!(slab.contains(&crossing) && !slab.interior_contains(&crossing));

    // From a base point nearer the wall the same direction escapes twice
    // as fast.
    let base = QVector::new(vec![rat(1, 2), rat(0, 1)]);
    assert_eq!(slab.gauge(&base, &right)?, rat(2, 1));
    println!("gauge of (1,0) at (1/2,0): 2");

    // Straight up never leaves the slab: gauge 0.
    assert_eq!(slab.gauge(&origin, &QVector::from_ints(&[0, 1]))?, rat(0, 1));
    println!("gauge of (0,1) at the origin: 0 (the ray stays inside)\n");

    // Support and width read the same geometry globally: the slab has
    // horizontal width 2 and is unbounded vertically.
    assert_eq!(
        slab.width(&right)?,
        ExtendedRational::Finite(rat(2, 1))
    );
    assert_eq!(
        slab.width(&QVector::from_ints(&[0, 1]))?,
        ExtendedRational::PosInfinity
    );
    println!("slab width: 2 along (1,0), +inf along (0,1)\n");

    // The polar of the box [-1,1]^2 swaps facets and vertices: it is the
    // cross-polytope conv{(1,0),(-1,0),(0,1),(0,-1)}.
    let box2 = from_rows(
        2,
        &[(&[1, 0], 1), (&[-1, 0], 1), (&[0, 1], 1), (&[0, -1], 1)],
    );
    let polar = box2.polar()?;
    println!("polar of the box [-1,1]^2 has vertices {:?}", polar.vertices());
    let cross = Polyhedron::from_generators(
        2,
        vec![
            QVector::from_ints(&[1, 0]),
            QVector::from_ints(&[-1, 0]),
            QVector::from_ints(&[0, 1]),
            QVector::from_ints(&[0, -1]),
        ],
        Vec::new(),
        Vec::new(),
    )?;
    assert_eq!(polar, cross);

    // Polarity is an involution on such bodies.
    assert_eq!(polar.polar()?, box2);
    println!("polar of the polar is the box again");

    Ok(())
}
