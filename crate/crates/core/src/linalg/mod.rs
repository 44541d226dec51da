//! Exact integer linear algebra: Smith normal form, echelon lattices and
//! finitely generated abelian groups with explicit coordinates.

mod abelian;
mod lattice;
mod matrix;
mod snf;

pub use abelian::{
    cokernel, cokernel_direct, coordinate_matrix, induced_map, kernel_subgroup_lattice, subquotient, AbelianInvariants,
    FgAbGroup, InducedMap, Subquotient,
};
pub use lattice::{kernel_basis, Lattice};
pub use matrix::{big, vec_big, IntMatrix};
pub use snf::{smith_normal_form, SmithForm};
