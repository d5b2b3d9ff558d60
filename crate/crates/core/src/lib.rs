//! Exact-arithmetic toolkit for the combinatorics of triangular partitions:
//! slope geometry, triangular Dyck path statistics (area / sim / deficit),
//! tableau constructions, (q,t)- and (q,t,r)-Schur enumeration, and the
//! nu-Tamari lattice on sub-partitions with its interval polynomials.
//!
//! All core arithmetic is exact: slopes are arbitrary-precision rationals and
//! polynomial coefficients are overflow-checked integers. Every enumeration
//! has a fixed deterministic order so outputs are reproducible byte for byte.

pub mod error;
pub mod lattice;
pub mod partition;
pub mod poly;
pub mod reference;
pub mod simsym;
pub mod tableau;
pub mod verify;

pub use error::{Error, Result};
pub use partition::{Cell, Partition, Rational, TriangularDyckPath};
pub use poly::{MultiPoly, SchurExpansion};
pub use tableau::{PathStatistics, StandardTableau};
