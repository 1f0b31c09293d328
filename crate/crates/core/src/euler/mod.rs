//! Double occurrence words, Eulerian digraphs, circuit partitions and the
//! Martin polynomial.
//!
//! A word `w` traces a 2-in/2-out digraph `D(w)` and has an interlace graph
//! `H(w)`; then `x q(H; 1 + x) = r(D; x)`, and `q(H; 1)` counts the Euler
//! circuits of `D`.

mod best;
mod circuits;
mod digraph;
mod word;

pub use best::{bareiss_determinant, euler_circuit_count_best};
pub use circuits::{
    anti_circuit_count, circuit_partition_of, circuit_partition_polynomial, euler_circuits_brute,
    martin_polynomial, martin_value_at_minus_two, transition_system_count, transition_systems,
    transposition_orbit, CircuitPartition, EulerCircuit, TransitionSystem, ORBIT_SYMBOL_LIMIT,
    TRANSITION_LIMIT,
};
pub use digraph::{digraph_from_word, DigraphKey, EulerianDigraph, TwoInTwoOutDigraph};
pub use word::{interlace_graph, transpose, DoubleOccurrenceWord};
