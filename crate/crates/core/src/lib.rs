//! Exact computational algebra for a family of finite 3-groups of nilpotency
//! class three, the one-dimensional compact Lie group that contains them, and
//! the presented integral cohomology rings of both.

pub mod chartab;
pub mod cli;
pub mod dsl;
pub mod error;
pub mod graded;
pub mod linalg;
pub mod pcgroup;
pub mod pipeline;
pub mod report;

pub use error::{Error, Result};
