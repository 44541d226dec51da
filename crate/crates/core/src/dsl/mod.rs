//! Text formats: `.ring` presentations of graded rings and `.grp`
//! power-commutator presentations, plus the builtin corpus.

mod group;
mod groups;
mod lexer;
mod maps;
mod ring;
mod rings;

pub use group::{parse_group, print_group};
pub use groups::{builtin_group, GROUP_BUILTINS};
pub use maps::{
    builtin_map, primed_map, restriction_to_m, restriction_to_m_from, restriction_to_p, restriction_to_p_from,
    scale3_map, MAP_BUILTINS,
};
pub use ring::{parse_poly, parse_ring, print_ring};
pub use rings::{
    builtin_ring, builtin_ring_text, g_finite_text, g_tilde_stated_text, g_tilde_text, lemma8_text, m_tilde_text,
    p_finite_text, p_tilde_text, Provenance, RING_BUILTINS,
};
