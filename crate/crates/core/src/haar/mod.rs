//! Haar sampling on the compact classical groups and Monte Carlo estimates
//! of trace moments.
//!
//! The simulated groups are the compact real forms `U(n)`, `SO(N, R)` and
//! `Sp(n) = U(2n) ∩ Sp(2n, C)`.

mod estimate;
mod sample;
pub mod stats;

pub use estimate::{
    estimate_moments, pairwise_sum, trace_samples, EmpiricalMoments, EstimateConfig, Histogram, MomentEstimate,
};
pub use sample::{
    commutator_product_trace, sample, symplectic_form, GroupElement, MembershipResiduals, DET_TOL, SYMPLECTIC_TOL,
    UNITARY_TOL,
};
