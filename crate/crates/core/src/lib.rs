//! List edge coloring of line perfect multigraphs.
//!
//! A line perfect multigraph is one whose blocks are all bipartite, `K_4`
//! variants on four vertices, or `K_{1,1,n}` variants. For such graphs the
//! list chromatic index equals the chromatic index, and this crate finds a
//! coloring constructively: given a list of at least `χ'` colors on every
//! edge, [`solve`] returns a proper edge coloring with every edge colored
//! from its own list.
//!
//! ```
//! use lichor_core::{solve, ColorLists, Instance, Multigraph};
//!
//! let graph = Multigraph::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap();
//! let lists = ColorLists::from_vecs([vec![1, 2, 3], vec![2, 3, 4], vec![1, 3, 4]]);
//! let report = solve(&Instance { graph, lists }).unwrap();
//! assert!(report.conforming);
//! ```

pub mod audit;
pub mod bipartite;
pub mod clique;
pub mod color;
pub mod error;
pub mod format;
pub mod graph;
pub mod solve;
pub mod structure;
pub mod transversal;
pub mod verify;

pub use audit::{Audit, Check, Step};
pub use color::{Color, ColorLists, ColorSet, EdgeColoring};
pub use error::{Error, InvariantViolation, Result};
pub use format::{emit_instance, emit_report, parse_instance, parse_report};
pub use graph::{EdgeId, EdgeSet, Multigraph, VertexId};
pub use solve::{forbidden_at_cut, solve, solve_with_root, BlockTrace, Instance, SolveReport};
pub use structure::{analyze, chromatic_index, classify_block, decompose_blocks, BlockClass};
