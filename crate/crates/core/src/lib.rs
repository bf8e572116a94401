//! Exact computation with the Koszul complex of the square of the maximal
//! ideal of a polynomial ring, together with the combinatorics (self-conjugate
//! partitions, Schur functions, matching complexes) that describes its homology.

pub mod cli;
pub mod cycles;
pub mod glaction;
pub mod koszul;
pub mod linalg;
pub mod matching;
pub mod partitions;
pub mod report;

pub use cycles::{hook_cycle, straighten, z_cycle, z_cycle_vars, CyclePair, LinearForm, TableauPair};
pub use koszul::{DegreeSlice, KoszulElement, QuadMonomial};
pub use linalg::{ExactField, Scalar, SparseMatrix};
pub use partitions::{FrobeniusForm, Partition};
pub use report::{Check, Report};
