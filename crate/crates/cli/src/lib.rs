//! Library side of the verification CLI: JSON shapes and the SVG emitter.

pub mod json;
pub mod svg;
