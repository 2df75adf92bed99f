//! Latin squares whose transversals are forced through fixed entries, and the
//! machinery to check them: Δ-sum certificates, an exhaustive transversal
//! engine with per-cell classification, lower-bound sets of transversal-free
//! entries, and the 3x3 block square every transversal of which meets all
//! nine blocks.

pub mod blocks;
pub mod bounds;
pub mod classify;
pub mod constructions;
pub mod delta;
pub mod diagonal;
pub mod engine;
pub mod error;
pub mod format;
pub mod isotopism;
pub mod report;
pub mod square;

pub use classify::{classify, CellStatus, ClassificationReport, ClassifyOptions};
pub use constructions::FamilySpec;
pub use diagonal::{Diagonal, Transversal};
pub use engine::{SearchConstraints, SearchMode};
pub use error::{Error, Result};
pub use isotopism::{apply_isotopism, Isotopism, Permutation};
pub use square::{cayley_table, Entry, Family, LatinSquare};
