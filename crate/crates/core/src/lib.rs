//! Iterated line graphs, divalent path statistics and the Hamiltonian-type
//! indices they bound.
//!
//! The [`graph::MultiGraph`] type is shared by every module. Line graph
//! towers live in [`line`], the path statistics `l`, `l_1`, `l_2`, `l_3`
//! and the distance `d~` in [`divalent`], closed-form bounds in [`bounds`]
//! and [`triangular`], and exact deciders in [`oracles`].

pub mod analyze;
pub mod bounds;
pub mod caps;
pub mod corpus;
pub mod divalent;
pub mod error;
pub mod graph;
pub mod harness;
pub mod io;
pub mod line;
pub mod named;
pub mod oracles;
pub mod triangular;

pub use caps::Caps;
pub use error::{Error, Result};
pub use graph::{DegreeView, EdgeId, Element, GraphClass, MultiGraph, VertexId};
pub use line::{line_graph, LineGraph, LineTower, Subset};
pub use oracles::{OracleCertificate, Verdict, Witness};
