//! Exact combinatorics of Dellac configurations and their symplectic variant:
//! permutations under Bruhat order, restricted rook arrangements on skew boards,
//! the melt/blow bijections, Genocchi-type polynomial recursions, the type-C
//! embedding into even symmetric groups, and the fixed-point chain bijection
//! onto Dellac configurations.
//!
//! All arithmetic is exact (arbitrary-precision integers and rationals) and all
//! enumeration streams are lazy and canonically ordered, so counts and listings
//! are reproducible byte for byte.

pub mod boards;
pub mod dellac;
pub mod error;
pub mod flagfix;
pub mod genocchi;
pub mod perm;
pub mod symplectic;

pub use error::Error;
