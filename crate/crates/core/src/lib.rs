pub mod automata;
pub mod cli;
pub mod engine;
pub mod error;
pub mod expr;
pub mod format;
pub mod semantics;
pub mod spec;

pub use error::{Error, Result};
