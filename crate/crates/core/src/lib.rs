//! Graph deficiency workbench.
//!
//! The deficiency of a graph is the number of vertices a maximum matching
//! misses. This crate computes it exactly, generates the named constructions
//! whose deficiencies are known in closed form, decides forbidden induced
//! subgraph questions, and runs constructive matching procedures that check
//! every claim of their own correctness argument while they go.
//!
//! ```
//! use deflab_core::families::{generate, predicted_deficiency, FamilySpec};
//! use deflab_core::matching::deficiency;
//!
//! let spec: FamilySpec = "frakK(3,1)".parse().unwrap();
//! let g = generate(&spec).graph;
//! assert_eq!(deficiency(&g), 3);
//! assert_eq!(predicted_deficiency(&spec), Some(3));
//! ```

pub mod canon;
pub mod certifier;
pub mod families;
pub mod graph;
pub mod lab;
pub mod matching;
pub mod subgraph;

pub use graph::{Graph, GraphError, VertexSet};
pub use matching::{deficiency, maximum_matching, Matching};
