//! Finite groups, semilattices and Clifford semigroups as validated tables.

mod clifford;
mod group;
mod hom;
mod semilattice;
mod table;

pub use clifford::{validate_clifford, CliffordError, CliffordTable};
pub use group::{gcd, lcm};
pub use group::{validate_group, FiniteGroupTable, GroupError};
pub use hom::{enumerate_group_homs, HomSearch};
pub use semilattice::{validate_semilattice, SemilatticeError, SemilatticeTable};
pub use table::{OpTable, TableError};
