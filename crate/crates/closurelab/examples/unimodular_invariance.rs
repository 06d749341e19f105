//! Lattice symmetries: shears and translations preserve lattice geometry.
//!
//! An affine map `x -> U x + t` with integer `U`, `|det U| = 1`, and
//! integer `t` permutes the integer lattice. Everything defined through
//! the lattice is invariant under such maps: splits go to splits,
//! lattice-free bodies stay lattice-free, and the maximal facet width is
//! unchanged — even though vertex coordinates and facet normals move.
//!
//! Run with: `cargo run --example unimodular_invariance`

use closurelab::{
    apply_unimodular, is_lattice_free, is_maximal_lattice_free, make_split, ExtendedRational,
    Polyhedron, QMatrix, QVector, Result, UnimodularMap,
};

fn hull(coords: &[&[i64]]) -> Polyhedron {
    Polyhedron::from_generators(
        coords[0].len(),
        coords.iter().map(|c| QVector::from_ints(c)).collect(),
        Vec::new(),
        Vec::new(),
    )
    .expect("valid generators")
}

fn maxfw(p: &Polyhedron) -> ExtendedRational {
    p.max_facet_width().expect("full-dimensional input")
}

fn main() -> Result<()> {
    // A shear along the first axis: (x1, x2) -> (x1 + x2, x2).
    let shear = UnimodularMap::new(
        QMatrix::from_rows(&[QVector::from_ints(&[1, 1]), QVector::from_ints(&[0, 1])]),
        QVector::from_ints(&[0, 0]),
    )?;

    // The split 0 <= x1 <= 1 maps to the band 0 <= x1 - x2 <= 1: again a
    // split, now along the direction (1, -1).
    let split = make_split(&QVector::from_ints(&[1, 0]), 0)?;
    let sheared = apply_unimodular(&split, &shear);
    println!("shear of the split 0 <= x1 <= 1:");
    for c in sheared.constraints() {
        println!("  <{}, x> <= {}", c.normal, c.offset);
    }
    assert_eq!(sheared, make_split(&QVector::from_ints(&[1, -1]), 0)?);
    assert_eq!(maxfw(&split), maxfw(&sheared));
    println!("still a split with facet width {}\n", maxfw(&sheared));

    // A maximal lattice-free triangle keeps both properties under the
    // shear plus an integer translation.
    let triangle = hull(&[&[0, 0], &[2, 0], &[0, 2]]);
    let map = UnimodularMap::new(
        QMatrix::from_rows(&[QVector::from_ints(&[1, 1]), QVector::from_ints(&[0, 1])]),
        QVector::from_ints(&[5, -3]),
    )?;
    let image = apply_unimodular(&triangle, &map);
    println!("triangle image has vertices {:?}", image.vertices());
    assert!(is_lattice_free(&image)?);
    assert!(is_maximal_lattice_free(&image)?);
    assert_eq!(maxfw(&triangle), maxfw(&image));
    println!(
        "image is still maximal lattice-free with facet width {}",
        maxfw(&image)
    );

    // The inverse map carries it back exactly.
    let back = apply_unimodular(&image, &map.inverse());
    assert_eq!(back, triangle);
    println!("inverse map restores the original triangle");

    Ok(())
}
