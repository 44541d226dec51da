//! Character tables with exact cyclotomic values, class-function arithmetic
//! and λ-operations.
mod cyclotomic;
mod equiv;
mod prop2;
mod table;

pub use cyclotomic::{Cyc, Q};
pub use equiv::{family_entry, has_entry, tables_equivalent, tables_equivalent_with_power_maps};
pub use prop2::{verify_rep_ring_relations, RelationCheck, RepRingReport, SymbolAssignment, TwistCheck};
pub use table::{cyclic_homs, induce, subgroup_inner, CharacterTable, ClassFunction, ClassInfo, RepRingElement};
