//! Double description method for polyhedral cones, exact over the rationals.
//!
//! Maintains a minimal generator pair (lineality basis + extreme rays) of
//! `{ y : <c_i, y> <= 0 }` while constraints are inserted one at a time.
//! Adjacency of rays is decided combinatorially from tight-constraint sets,
//! which keeps the intermediate representations minimal.

use crate::linalg::{primitive_vector, rref_primitive_basis, QVector};

#[derive(Clone, Debug, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn empty(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn and(&self, other: &Bits) -> Bits {
        Bits(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a & b)
                .collect(),
        )
    }

    fn contains(&self, other: &Bits) -> bool {
        self.0
            .iter()
            .zip(other.0.iter())
            .all(|(a, b)| a & b == *b)
    }
}

#[derive(Clone)]
struct Ray {
    v: QVector,
    tight: Bits,
}

pub(crate) struct ConeGenerators {
    /// Primitive integer basis of the lineality space, in reduced echelon form.
    pub lines: Vec<QVector>,
    /// Primitive integer extreme rays modulo the lineality space, sorted.
    pub rays: Vec<QVector>,
}

/// Generators of the cone `{ y in R^dim : <c, y> <= 0 for all c }`.
///
/// Constraint order is significant only for performance; the canonical output
/// is order-independent.
pub(crate) fn dd_cone(dim: usize, constraints: &[QVector]) -> ConeGenerators {
    let total = constraints.len();
    let mut lines: Vec<QVector> = (0..dim).map(|i| QVector::unit(dim, i)).collect();
    let mut rays: Vec<Ray> = Vec::new();

    for (idx, c) in constraints.iter().enumerate() {
        debug_assert!(!c.is_zero(), "zero constraints must be filtered by callers");
        if let Some(j) = lines.iter().position(|l| !c.dot(l).is_zero()) {
            // A line crosses the constraint: it becomes a ray, the other
            // generators are projected onto the constraint hyperplane.
            let mut l0 = lines.swap_remove(j);
            if c.dot(&l0).is_positive() {
                l0 = l0.neg();
            }
            let d0 = c.dot(&l0);
            for l in lines.iter_mut() {
                let dl = c.dot(l);
                if !dl.is_zero() {
                    let adjusted = l.add_scaled(&-(dl / d0.clone()), &l0);
                    *l = primitive_vector(&adjusted).expect("lines stay nonzero");
                }
            }
            for r in rays.iter_mut() {
                let dr = c.dot(&r.v);
                if !dr.is_zero() {
                    let adjusted = r.v.add_scaled(&-(dr / d0.clone()), &l0);
                    r.v = primitive_vector(&adjusted).expect("rays stay nonzero");
                }
                // Every remaining ray now lies on the constraint hyperplane,
                // and previous tightness is unaffected because lines satisfy
                // all processed constraints with equality.
                r.tight.set(idx);
            }
            let mut tight = Bits::empty(total);
            for k in 0..idx {
                tight.set(k);
            }
            rays.push(Ray {
                v: primitive_vector(&l0).expect("line is nonzero"),
                tight,
            });
            continue;
        }

        let vals: Vec<_> = rays.iter().map(|r| c.dot(&r.v)).collect();
        if !vals.iter().any(|v| v.is_positive()) {
            for (r, v) in rays.iter_mut().zip(vals.iter()) {
                if v.is_zero() {
                    r.tight.set(idx);
                }
            }
            continue;
        }
        let mut next: Vec<Ray> = Vec::new();
        for (k, r) in rays.iter().enumerate() {
            if vals[k].is_negative() {
                next.push(r.clone());
            } else if vals[k].is_zero() {
                let mut r = r.clone();
                r.tight.set(idx);
                next.push(r);
            }
        }
        for (i, ri) in rays.iter().enumerate() {
            if !vals[i].is_negative() {
                continue;
            }
            for (j, rj) in rays.iter().enumerate() {
                if !vals[j].is_positive() {
                    continue;
                }
                let common = ri.tight.and(&rj.tight);
                let adjacent = !rays.iter().enumerate().any(|(k, rk)| {
                    k != i && k != j && rk.tight.contains(&common)
                });
                if !adjacent {
                    continue;
                }
                // Positive combination landing on the constraint hyperplane.
                let w = ri.v.scale(&vals[j]).add_scaled(&-vals[i].clone(), &rj.v);
                let w = primitive_vector(&w).expect("combined ray is nonzero");
                let mut tight = Bits::empty(total);
                for (k, ck) in constraints.iter().take(idx + 1).enumerate() {
                    if ck.dot(&w).is_zero() {
                        tight.set(k);
                    }
                }
                next.push(Ray { v: w, tight });
            }
        }
        rays = next;
    }

    let lines = rref_primitive_basis(&lines);
    let mut out_rays: Vec<QVector> = rays
        .into_iter()
        .map(|r| {
            let reduced = reduce_mod_lines(&r.v, &lines);
            primitive_vector(&reduced).expect("extreme rays are independent of lines")
        })
        .collect();
    out_rays.sort();
    out_rays.dedup();
    ConeGenerators {
        lines,
        rays: out_rays,
    }
}

/// Subtracts multiples of the echelon-form lines so the pivot coordinates of
/// `v` become zero. This is the canonical representative modulo the lines.
pub(crate) fn reduce_mod_lines(v: &QVector, lines: &[QVector]) -> QVector {
    let mut out = v.clone();
    for line in lines {
        let pivot = line
            .iter()
            .position(|c| !c.is_zero())
            .expect("lines are nonzero");
        if out[pivot].is_zero() {
            continue;
        }
        let factor = -(out[pivot].clone() / line[pivot].clone());
        out = out.add_scaled(&factor, line);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn halfspace_cone() {
        // { y : y1 <= 0 } in the plane.
        let gens = dd_cone(2, &[QVector::from_ints(&[1, 0])]);
        assert_eq!(gens.lines, vec![QVector::from_ints(&[0, 1])]);
        assert_eq!(gens.rays, vec![QVector::from_ints(&[-1, 0])]);
    }

    #[test]
    fn negative_orthant() {
        let gens = dd_cone(
            2,
            &[QVector::from_ints(&[1, 0]), QVector::from_ints(&[0, 1])],
        );
        assert!(gens.lines.is_empty());
        assert_eq!(
            gens.rays,
            vec![QVector::from_ints(&[-1, 0]), QVector::from_ints(&[0, -1])]
        );
    }

    #[test]
    fn full_space_has_only_lines() {
        let gens = dd_cone(3, &[]);
        assert_eq!(gens.lines.len(), 3);
        assert!(gens.rays.is_empty());
    }

    #[test]
    fn pointed_three_dim_cone() {
        // y <= 0 coordinatewise in R^3: three extreme rays, no lines.
        let gens = dd_cone(
            3,
            &[
                QVector::from_ints(&[1, 0, 0]),
                QVector::from_ints(&[0, 1, 0]),
                QVector::from_ints(&[0, 0, 1]),
            ],
        );
        assert!(gens.lines.is_empty());
        assert_eq!(gens.rays.len(), 3);
    }

    #[test]
    fn trivial_cone_is_origin() {
        // y <= 0 and y >= 0 coordinatewise: only the origin, no generators.
        let gens = dd_cone(
            2,
            &[
                QVector::from_ints(&[1, 0]),
                QVector::from_ints(&[0, 1]),
                QVector::from_ints(&[-1, 0]),
                QVector::from_ints(&[0, -1]),
            ],
        );
        assert!(gens.lines.is_empty());
        assert!(gens.rays.is_empty());
    }

    #[test]
    fn square_pyramid_cone_has_four_rays() {
        // Homogenization of the square [-1,1]^2: cone over a square.
        let gens = dd_cone(
            3,
            &[
                QVector::from_ints(&[1, 0, -1]),
                QVector::from_ints(&[-1, 0, -1]),
                QVector::from_ints(&[0, 1, -1]),
                QVector::from_ints(&[0, -1, -1]),
                QVector::from_ints(&[0, 0, -1]),
            ],
        );
        assert!(gens.lines.is_empty());
        assert_eq!(gens.rays.len(), 4);
        for r in &gens.rays {
            assert!(r[2].is_positive());
        }
    }
}
