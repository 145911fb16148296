//! Exact computer algebra for symmetric functions: Schur and hook Schur
//! functions, the doubling map onto doubly symmetric functions, and a
//! catalog of mechanically checked identities.

pub mod cli;
pub mod doubling;
pub mod error;
pub mod partitions;
pub mod polyring;
pub mod symring;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
pub use partitions::{Partition, SkewShape};
pub use polyring::{MultiPoly, Q};
pub use symring::{Basis, SymFunc};
