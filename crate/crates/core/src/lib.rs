//! Triangle centrality for simple undirected graphs.
//!
//! A vertex is central when many triangles sit in its neighborhood: either
//! triangles through its triangle neighbors (its "core") or triangles on its
//! other neighbors. The main entry point is [`triangle_centrality`]; the crate
//! also provides hash-based, sparse-matrix, multi-threaded and simulated
//! MapReduce implementations that return identical scores, plus classical
//! centralities for comparison.
//!
//! ```
//! use tricent::{triangle_centrality, Graph};
//!
//! let g = Graph::from_labeled_edges(&[("a", "b"), ("b", "c"), ("c", "a"), ("c", "d")]);
//! let tc = triangle_centrality(&g);
//! assert_eq!(tc.scores[g.vertex("d").unwrap()], 1.0);
//! ```

pub mod algebraic;
pub mod centrality;
pub mod compare;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod io;
pub mod mapreduce;
pub mod parallel;
pub mod triangle;

pub use centrality::{triangle_centrality, triangle_centrality_basic, CentralityVector, Method};
pub use error::{Error, Result};
pub use graph::{average_degeneracy, Graph, OrderedAdjacency, VertexOrder};
