//! Exact computation of the interlace polynomial of a graph, and of Euler
//! circuits, circuit partitions and the Martin polynomial of 2-in/2-out
//! digraphs.
//!
//! ```
//! use interlace_core::{interlace_polynomial, Graph};
//!
//! let c5 = Graph::cycle(5).unwrap();
//! assert_eq!(interlace_polynomial(&c5).to_string(), "6x + 5x^2");
//! ```

pub mod error;
pub mod euler;
pub mod format;
pub mod graph;
pub mod interlace;
pub mod poly;
pub mod verify;

pub use error::{Error, Result};
pub use euler::{
    circuit_partition_polynomial, digraph_from_word, euler_circuit_count_best, interlace_graph,
    martin_polynomial, transposition_orbit, DoubleOccurrenceWord, EulerCircuit, EulerianDigraph,
    TwoInTwoOutDigraph,
};
pub use format::{parse_edge_list, parse_graph6, to_graph6, write_edge_list};
pub use graph::{Graph, GraphKey, VertexSet, BRUTE_FORCE_LIMIT, MAX_ORDER};
pub use interlace::{
    closed_form_complete, closed_form_complete_bipartite, closed_form_cycle,
    closed_form_edgeless, closed_form_path, closed_form_star, interlace_at,
    interlace_polynomial, pivot_edge, pivot_orbit, q_complete_multipartite,
    q_of_clique_substitution, q_of_vertex_duplication, q_of_vertex_multiplication, rotate,
    substitute, InterlaceSolver, MemoCache, Part, SolverOptions, SubstitutionSpec,
};
pub use poly::{
    coefficient_transform_a_from_r, coefficient_transform_r_from_a, is_signed_power_of_two,
    unimodality_report, IntPolynomial, UnimodalityReport,
};
pub use verify::{ConjectureReport, VerificationReport, Violation};
