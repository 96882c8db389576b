//! Point partition numbers of multigraphs.
//!
//! `χ_t(G)` is the least number of classes in a vertex partition of `G` where
//! every class induces a strictly `t`-degenerate subgraph: one in which every
//! non-empty subgraph has a vertex of degree at most `t - 1`. For `t = 1` this
//! is the chromatic number, for `t = 2` the point arboricity.
//!
//! The crate covers exact computation of `χ_t`, criticality testing, the Dirac
//! and Hajós joins, factorization through the `t`-complement, and exhaustive
//! enumeration of critical multigraphs up to isomorphism.

pub mod bounds;
pub mod coloring;
pub mod constructions;
pub mod criticality;
pub mod decomposition;
pub mod degeneracy;
pub mod enumeration;
mod error;
pub mod multigraph;
mod vertex_set;

pub use coloring::{chi_t, validate, Coloring};
pub use error::{Error, Result};
pub use multigraph::{CanonicalLabel, DegreeStats, Multigraph, MAX_VERTICES};
pub use vertex_set::VertexSet;
