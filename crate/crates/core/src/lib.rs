pub mod analysis;
pub mod budget;
pub mod chromatic;
pub mod cli;
pub mod error;
pub mod families;
pub mod graph;
pub mod poly;

pub use budget::Budget;
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use poly::{IntPoly, Rat, RootRecord};
