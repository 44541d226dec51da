//! Gysin sequences of circle bundles over `BG̃` and friends, Künneth for
//! finite abelian groups, and cohomological fingerprints that separate groups.

mod distinguish;
mod fingerprint;
mod gysin;
mod kunneth;

pub use distinguish::{
    distinguish, family_targets, fingerprint, order81_targets, Distinction, Target, ORDER81_NOT_COMPUTED,
};
pub use fingerprint::{Fingerprint, FingerprintEntry};
pub use gysin::{
    exactness_bookkeeping, family_class, gysin_segment, gysin_series, gysin_series_sub, kernel_is_ideal, m_class,
    p_class, ExactnessCheck, GysinSegment, IsoType,
};
pub use kunneth::{abelian_cohomology, cyclic_cohomology, kunneth_abelian, kunneth_product};
