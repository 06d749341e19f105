//! Reducing a triangle by a split and by a wider slab.
//!
//! The reduction of `P` by a full-dimensional body `L` is the convex hull of
//! what survives once the open interior of `L` is removed:
//! `conv(P \ int L)`. Removing a split band leaves both flanks of `P`, so
//! taking the hull can give back all of `P`; a wider slab can swallow a
//! whole flank and genuinely shrink it.
//!
//! Run with: `cargo run --example reduce_triangle_split`

use closurelab::{extreme_points_of_reduction, reduce, Polyhedron, QVector, Result};

fn points(coords: &[&[i64]]) -> Vec<QVector> {
    coords.iter().map(|c| QVector::from_ints(c)).collect()
}

fn hull(coords: &[&[i64]]) -> Polyhedron {
    Polyhedron::from_generators(coords[0].len(), points(coords), Vec::new(), Vec::new())
        .expect("valid generators")
}

fn band(dim: usize, normal: &[i64], low: i64, high: i64) -> Polyhedron {
    let u = QVector::from_ints(normal);
    Polyhedron::from_constraints(
        dim,
        vec![
            (u.clone(), closurelab::rat(high, 1)),
            (u.neg(), closurelab::rat(-low, 1)),
        ],
    )
    .expect("valid band")
}

fn main() -> Result<()> {
    let triangle = hull(&[&[0, 0], &[2, 0], &[0, 2]]);
    println!("P  = triangle with vertices (0,0), (2,0), (0,2)");

    // A split: the band between two consecutive integer hyperplanes.
    let split = band(2, &[1, 0], 0, 1);
    println!("L1 = split 0 <= x1 <= 1");
    let reduced = reduce(&triangle, &split)?;
    let extreme = extreme_points_of_reduction(&triangle, &split)?;
    println!("extreme points of conv(P \\ int L1):");
    for v in &extreme {
        println!("  {v}");
    }
    // Both flanks survive: the left edge x1 = 0 and the right corner at
    // x1 >= 1. Their hull is the whole triangle again — the point (1,1)
    // lies on the hypotenuse, so it is extreme in the point set but not a
    // vertex of the hull.
    assert_eq!(reduced, triangle);
    println!("hull of the survivors = P itself\n");

    // A slab wide enough to swallow the left flank entirely.
    let slab = band(2, &[1, 0], -1, 1);
    println!("L2 = slab -1 <= x1 <= 1");
    let clipped = reduce(&triangle, &slab)?;
    println!("conv(P \\ int L2) has vertices:");
    for v in clipped.vertices() {
        println!("  {v}");
    }
    let expected = hull(&[&[1, 0], &[2, 0], &[1, 1]]);
    assert_eq!(clipped, expected);
    println!("= triangle (1,0), (2,0), (1,1): only the right flank is left");

    Ok(())
}
