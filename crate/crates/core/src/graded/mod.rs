//! Finitely presented graded-commutative rings over ℤ.
//!
//! Each graded piece is computed exactly as a cokernel: the free abelian group
//! on the monomials of that degree modulo all products of relations with
//! monomials. Squares of odd-degree generators are set to zero.

mod action;
mod maps;
mod piece;
mod poly;
mod presentation;

pub use action::{Order3Action, PieceSubquotient};
pub use maps::{mult_kernel, DegreeMapReport, DegreeVerdict, MapVerification, MultKernel, RelationCheck, RingMap};
pub use piece::{degree_bound_from_env, GradedPiece, GradedRing, PieceSummary, DEFAULT_DEGREE_BOUND, DEGREE_BOUND_ENV};
pub use poly::{Monomial, Poly};
pub use presentation::{Generator, RingPresentation};
