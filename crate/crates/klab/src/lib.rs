//! Exact combinatorics of cones over Dirichlet (Kirchhoff) arrangements.
//!
//! A Dirichlet network is a finite connected simple graph together with a set
//! of at least two boundary nodes inducing no edges and an injective boundary
//! value map. The associated cone arrangement is indexed by the graph's edges
//! plus one cone element. This crate decides, with exact integer arithmetic
//! throughout:
//!
//! * supersolvability (fast path: chordality of the boundary-completed graph;
//!   oracle: modular chains in the lattice of flats),
//! * quadraticity of the Orlik-Solomon ideal (fast path: chordless circuit
//!   census; oracle: graded ranks of the ideal),
//! * hypersolvability at the graph and matroid level (subset DP),
//! * disjointness of minimal broken circuits over orderings,
//! * the Falk invariant phi_3 (nullity oracle and pattern-count formula),
//!
//! plus the crossing statistic chi(G, boundary), the join family construction,
//! and an exhaustive small-instance sweep that verifies the fast paths against
//! the oracles.

pub mod caps;
pub mod chordality;
pub mod exterior;
pub mod falk;
pub mod graph;
pub mod hypersolvable;
pub mod linalg;
pub mod matroid;
pub mod nbc;
pub mod network;
pub mod report;
pub mod samples;
pub mod sweep;

pub use caps::Caps;
pub use graph::Graph;
pub use network::Network;
