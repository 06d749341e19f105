//! Reducing unbounded polyhedra: recession is preserved, lines factor out.
//!
//! When the body `L` recedes in a linear space, clipping its interior out
//! of an unbounded `P` never bends `P` at infinity: the reduction keeps
//! exactly the recession cone of `P` whenever it is nonempty. If `P`
//! contains full lines the computation drops to the quotient along them,
//! reduces there, and lifts back — unless `L` recedes along all of `P`'s
//! lines, in which case nothing at all can be removed.
//!
//! Run with: `cargo run --example reduce_unbounded`

use closurelab::{reduce, Polyhedron, QVector, Rational, Result};

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
    // P = first quadrant shifted to apex (0,0), receding along both axes.
    let quadrant = from_rows(2, &[(&[-1, 0], 0), (&[0, -1], 0)]);
    let split = from_rows(2, &[(&[1, 1], 2), (&[-1, -1], -1)]);
    println!("P = nonnegative quadrant; L = band 1 <= x1 + x2 <= 2");

    let reduced = reduce(&quadrant, &split)?;
    println!("reduction vertices: {:?}", reduced.vertices());
    println!("reduction rays:     {:?}", reduced.rays());

    // The hull of the survivors spans the removed band again (both flanks
    // remain), so here the reduction is all of P — and in general the rays
    // never change.
    assert_eq!(reduced, quadrant);
    assert_eq!(
        reduced.recession_cone()?,
        quadrant.recession_cone()?
    );
    println!("recession cone unchanged\n");

    // A band receding along the quadrant's inner diagonal does cut: only
    // points with |x1 - x2| >= 1 survive, and their hull loses the apex.
    let diagonal_band = from_rows(2, &[(&[1, -1], 1), (&[-1, 1], 1)]);
    let clipped = reduce(&quadrant, &diagonal_band)?;
    println!("reducing by the band -1 <= x1 - x2 <= 1:");
    println!("  vertices {:?}, rays {:?}", clipped.vertices(), clipped.rays());
    let expected = from_rows(2, &[(&[-1, 0], 0), (&[0, -1], 0), (&[-1, -1], -1)]);
    assert_eq!(clipped, expected);
    assert_eq!(clipped.recession_cone()?, quadrant.recession_cone()?);
    println!("  the apex corner is gone, the rays are untouched");

    // P with a full line: the vertical strip {0 <= x1 <= 3} contains the
    // line x1 = const. Reducing by a split across the strip works in the
    // quotient along that line and lifts back.
    let strip = from_rows(2, &[(&[1, 0], 3), (&[-1, 0], 0)]);
    let vertical_split = from_rows(2, &[(&[1, 0], 2), (&[-1, 0], -1)]);
    let cut = reduce(&strip, &vertical_split)?;
    println!("\nstrip 0 <= x1 <= 3 reduced by the band 1 <= x1 <= 2:");
    println!("  vertices {:?}", cut.vertices());
    println!("  lines    {:?}", cut.lines());
    // Both walls survive and their hull is the strip again; the line is
    // still there.
    assert_eq!(cut, strip);

    // If L recedes along P's line, no point of P can ever leave int L
    // by a bounded amount: the reduction removes nothing.
    let horizontal_band = from_rows(2, &[(&[0, 1], 1), (&[0, -1], 0)]);
    let unchanged = reduce(&strip, &horizontal_band)?;
    assert_eq!(unchanged, strip);
    println!("\na band receding along the strip's line removes nothing");

    Ok(())
}
