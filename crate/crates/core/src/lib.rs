//! Realizability and recognition for f-vectors of forests and quasi-forests.
//!
//! * [`complex`]: simplicial complexes by facets, f- and h-vectors.
//! * [`transforms`]: exact c-, b- and h-sequence transforms.
//! * [`characterize`]: the realizability tests, the (delta, e) decomposition and the explicit
//!   forest construction, plus the unimodality check.
//! * [`recognize`]: leaves, leaf orders and the forest property of a given complex.
//! * [`graphs`]: chordal and strongly chordal graphs and clique complexes.
//! * [`oracle`]: exhaustive enumeration of small instances and cross-validation.
//! * [`cli`]: the `qforest` command line.

pub mod characterize;
pub mod cli;
pub mod complex;
pub mod error;
pub mod graphs;
pub mod oracle;
pub mod recognize;
pub mod transforms;

pub use characterize::{
    check_unimodal, construct_forest, decompose, is_pure_quasi_forest_fvector, is_quasi_forest_fvector, realize,
    reduce_collisions, DeltaESequences, RealizabilityVerdict, UnimodalReport, Violation,
};
pub use complex::{f_vector, h_vector, parse_complex, FVector, Face, HVector, SimplicialComplex, Vertex};
pub use error::{Error, Result, SequenceDefect};
pub use graphs::{clique_complex, is_chordal, is_strongly_chordal, parse_graph, Graph};
pub use recognize::{branch_of, is_forest, leaf_order, verify_leaf_order, RecognitionReport};
pub use transforms::{
    b_from_c, b_from_h, b_sequence, c_from_h, c_sequence, facet_signature_polynomial, BSequence, CSequence,
    IntPolynomial,
};
