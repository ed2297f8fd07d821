//! Input documents, the expression grammar, and structured output.

mod document;
mod expr;
pub mod json;

pub use document::{parse_system, render_system, Literal, SystemDocument};
pub use expr::{parse_poly, MAX_EXPONENT};
