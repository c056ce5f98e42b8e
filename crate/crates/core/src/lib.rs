pub mod bench;
pub mod error;
pub mod fpt;
pub mod graph;
pub mod io;
pub mod kernel;
pub mod oracle;
pub mod poly;
pub mod problem;
pub mod reductions;
pub mod spectral;

pub use error::{Error, Result};
pub use graph::{ClusterProfile, EdgeSet, Graph};
pub use problem::{Edit, EditOp, Instance, Kind, Outcome, Solution};
