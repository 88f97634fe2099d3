//! File formats, rendering and the command-line harness for
//! [`matdivseq_core`].

pub mod cli;
pub mod input;
pub mod par;
pub mod render;

pub use input::{parse_matrix, InputError, MatrixDocument};
