//! Exact rational geometry for cutting-plane closures.
//!
//! The crate revolves around one operation: carving the interior of a
//! lattice-free body `L` out of a polyhedron `P` and taking the convex hull
//! of what is left. Intersecting such reductions over a family of bodies
//! gives a closure; iterating closures drives a relaxation toward its
//! mixed-integer hull. Everything is computed in exact arbitrary-precision
//! rational arithmetic: vertex enumeration, linear programs, gauges, volumes
//! and Hausdorff distances are all free of rounding.
//!
//! Entry points:
//! - [`Polyhedron`]: dual-description rational polyhedra with support,
//!   width, gauge, polar, skeleton, volume and distance queries.
//! - [`reduction`]: the carve-and-hull operation, its 2D brute-force oracle,
//!   the classification of bodies that keep results polyhedral, and explicit
//!   witnesses of non-closedness for the rest.
//! - [`closure`]: closures over finite families, remainder matrices,
//!   dominance pruning, and iteration traces with convergence diagnostics.
//! - [`lattice`]: splits, Chvátal cuts, lattice-free and maximality checks,
//!   mixed-integer hulls, and unimodular lattice symmetries.
//! - [`io`]: JSON/CSV schemas used by the `closurelab` command-line tool.

pub mod closure;
pub mod error;
pub mod io;
pub mod lattice;
pub mod linalg;
pub mod polyhedron;
pub mod rational;
pub mod reduction;

pub(crate) mod dd;
pub(crate) mod lp;

pub use closure::{
    closure, dominates, iterate_closure, minimal_antichain, prune_class, remainder_matrix,
    scaled_integrality_check, CutBounds, CutFamily, IterationTrace, RemainderMatrix, StopReason,
};
pub use error::{Error, Result};
pub use io::{
    family_to_json, integer_vector_to_json, parse_family, parse_polyhedron, parse_split,
    parse_unimodular, polyhedron_to_json, rational_vector_to_json, split_to_json, trace_to_csv,
    validate_family, validate_polyhedron, validate_split, validate_unimodular, ValidationIssue,
    ValidationReport,
};
pub use lattice::{
    apply_unimodular, chvatal_closure_bounded, chvatal_cut, enumerate_splits,
    facet_relint_integer_point, integer_points, interior_integer_point, is_lattice_free,
    is_maximal_lattice_free, make_split, mixed_integer_hull, MixedIntegerSpace, Split,
    UnimodularMap,
};
pub use linalg::{primitive_vector, solve_affine, AffineSolution, QMatrix, QVector};
pub use polyhedron::{Constraint, Edge, HPolyhedron, Polyhedron, VPolyhedron};
pub use rational::{rat, ExtendedRational, Rational};
pub use reduction::{
    classify_reducer, extreme_points_of_reduction, nonclosed_witness, reduce, reduce_oracle_2d,
    reduced_hull_contains, verify_witness, NonClosedWitness, ReducerClass,
};
