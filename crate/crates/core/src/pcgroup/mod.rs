//! Finite 3-groups given by power-commutator presentations.

mod blackbox;
mod families;
mod group;
mod iso;
mod lie;
mod presentation;
mod structure;

pub use blackbox::{
    closure, normal_closure, pc_from_blackbox, quotient_presentation, subgroup_presentation, BlackboxPc, GroupOps,
    Quotient,
};
pub use families::{g_n_eps, make_group, Family};
pub use group::{PcGroup, ENUMERATION_BOUND};
pub use iso::{identify, isomorphic, subgroups_isomorphic, verify_isomorphism, IsoResult};
pub use lie::{
    family_embedding, kernel_generators, kernel_of_circle_hom, kernel_of_circle_hom_blackbox, CircleHom, LieElement,
    LieGroup,
};
pub use presentation::{word_commutator, word_inverse, word_simplify, PcPresentation, Word};
pub use structure::{
    abelianization, abelianization_matrix, center, center_subgroup, class_sizes, conjugacy_classes, derived_subgroup,
    exponent, fingerprint, frattini, generator_rank, intersection, maximal_subgroups, minimal_generators, quotient,
    quotient_map_images, Fingerprint, MaximalSubgroup, Subgroup, SEARCH_BOUND,
};
