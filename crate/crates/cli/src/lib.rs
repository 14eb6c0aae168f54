//! File formats and command plumbing behind the `skewhad` binary. Kept as a
//! library so the formats can be tested directly.

pub mod familyfile;
pub mod matrixfile;
