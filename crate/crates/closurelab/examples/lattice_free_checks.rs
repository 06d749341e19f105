//! Lattice-free bodies, maximality, and the facet-width volume bound.
//!
//! A full-dimensional body is lattice-free when its interior contains no
//! integer point. It is maximal among those exactly when every facet has
//! an integer point in its relative interior — any enlargement must then
//! swallow one. Maximal lattice-free polytopes cannot be large: their
//! volume is at most `maxfw^d`, where `maxfw` is the largest lattice width
//! over facet normals.
//!
//! Run with: `cargo run --example lattice_free_checks`

use closurelab::{
    facet_relint_integer_point, interior_integer_point, is_lattice_free, is_maximal_lattice_free,
    ExtendedRational, Polyhedron, QVector, Result,
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

fn report(name: &str, l: &Polyhedron) -> Result<()> {
    print!("{name}: ");
    if !is_lattice_free(l)? {
        let z = interior_integer_point(l)?.expect("interior point exists");
        println!("not lattice-free, interior integer point {z}");
        return Ok(());
    }
    if is_maximal_lattice_free(l)? {
        println!("maximal lattice-free");
        for f in 0..l.constraints().len() {
            let z = facet_relint_integer_point(l, f)?.expect("maximality");
            println!("  facet {f}: relint integer point {z}");
        }
    } else {
        println!("lattice-free but not maximal (some facet misses the lattice)");
    }
    Ok(())
}

fn main() -> Result<()> {
    // Two classic maximal lattice-free triangles.
    let t1 = hull(&[&[0, 0], &[2, 0], &[0, 2]]);
    let t2 = hull(&[&[-1, 0], &[1, 0], &[1, 2]]);
    // Shrinking T1 leaves a facet without an integer point: not maximal.
    let shrunk = hull(&[&[0, 0], &[1, 0], &[0, 2]]);
    // A fat box has (1,1) inside: not lattice-free at all.
    let fat = hull(&[&[0, 0], &[2, 0], &[0, 2], &[2, 2]]);

    report("T1 = conv{(0,0),(2,0),(0,2)}", &t1)?;
    report("T2 = conv{(-1,0),(1,0),(1,2)}", &t2)?;
    report("conv{(0,0),(1,0),(0,2)}", &shrunk)?;
    report("box [0,2]^2", &fat)?;
    println!();

    // Volume bound for the maximal ones: vol(L) <= maxfw(L)^2.
    for (name, l) in [("T1", &t1), ("T2", &t2)] {
        let volume = l.volume()?;
        let ExtendedRational::Finite(width) = l.max_facet_width()? else {
            unreachable!("bounded polytopes have finite facet width");
        };
        println!("{name}: volume {volume}, maxfw {width}");
        assert!(volume <= &width * &width);
    }
    println!("both satisfy volume <= maxfw^2");

    Ok(())
}
