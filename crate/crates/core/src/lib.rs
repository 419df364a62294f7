//! Odd colorings of graphs and the structures behind them: chord diagrams
//! and circle graphs, GF(2) matroids and their fundamental graphs, planar
//! rotation systems and duals, neighborhood complexity, and edge colorings
//! that are odd on fundamental cuts.
//!
//! Everything is deterministic: randomized routines take explicit seeds, and
//! all tie-breaks are by smallest id.

pub mod bits;
pub mod catalog;
pub mod error;
pub mod exact;
pub mod fundcut;
pub mod gen;
pub mod chord;
pub mod graph;
pub mod io;
pub mod matroid;
pub mod ncomplexity;
pub mod odd_color;
pub mod planar;

pub use error::{Error, Result};
