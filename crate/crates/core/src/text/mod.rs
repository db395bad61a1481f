//! Plain-text document formats.
//!
//! Every document is a list of sections. A section starts with an
//! unindented header `key: value…` and continues with indented item lines.
//! Lines starting with `#` are comments. A bundle holds several documents,
//! each introduced by a line `--- <kind> <name>`; documents refer to each
//! other by name.
//!
//! Printers emit a canonical form with sorted entries; parsing a canonical
//! document and printing it again reproduces it byte for byte.

use thiserror::Error;

mod bundle;
mod category;
mod diagram;
mod groupoid;
mod sset;
mod syntax;

pub use bundle::{Bundle, BundleWriter, Document, Resolver};
pub use category::{parse_category, print_category, print_functor, print_system};
pub use diagram::{print_augmented, print_diagram, print_simplex_functor};
pub use groupoid::{parse_groupoid, print_groupoid};
pub use sset::{parse_sset, print_map, print_sset};

/// A parse or validation failure at a 1-based line and column.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError { line, column, message: message.into() }
    }
}
