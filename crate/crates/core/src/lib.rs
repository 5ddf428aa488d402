//! Exact characters `ζ^λ_μ(q)` of the Hecke-Clifford algebra and the spin bitrace.
//!
//! Characters are computed as polynomials in `q` with rational coefficients by
//! five independent routes (see [`Method`]); all of them must agree.

pub mod bitrace;
pub mod characters;
pub mod error;
pub mod gamma;
pub mod golden;
pub mod partitions;
pub mod pfaffian;
pub mod polyring;
pub mod vertex;

pub use characters::{CharTable, Engine, Method};
pub use error::{Error, Result};
pub use partitions::{Composition, Partition, PartitionClass, StrictPartition};
pub use polyring::{QPoly, Rat};
