//! Exact moments of traces of commutator products in the compact classical
//! groups, together with a Monte Carlo harness that checks them.
//!
//! For a Haar-random tuple `x_1, y_1, ..., x_k, y_k` in one of `Sp(2n)`,
//! `SO(2n)`, `SO(2n+1)` or `U(n)`, the moments of
//! `T = Tr([x_1, y_1] ... [x_k, y_k])` are finite sums over irreducible
//! representations:
//!
//! ```text
//! E[T^r]        = sum_λ f_r^λ / d_λ^(2k-1)        (Sp, SO)
//! E[T^r conj(T)^s] = sum_γ c_{r+s}^γ(ε) / d_γ^(2k-1)  (U)
//! ```
//!
//! where `f_r^λ` counts up-down tableaux, `c^γ(ε)` counts up-down staircase
//! tableaux of type `ε`, and `d` is the dimension of the irreducible
//! representation. The crate is organised as:
//!
//! - [`algebra`]: partitions, staircases, type vectors and exact rationals.
//! - [`tableaux`]: dynamic-programming counters plus brute-force oracles.
//! - [`repdims`]: Weyl and hook-content dimension formulas.
//! - [`moments`]: exact moment sums, Gaussian limits, gap reports and the
//!   finite-group commutator identity.
//! - [`haar`]: Haar samplers and a deterministic parallel moment estimator.
//! - [`cli`]: the `commtrace` command-line front end.
//!
//! Runnable examples, one per capability (`cargo run --example <name>`):
//! `tableau_counts`, `dimensions`, `exact_moments`, `clt_gaps`,
//! `finite_groups`, `haar_sampling` and `monte_carlo`.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod haar;
pub mod moments;
pub mod repdims;
pub mod tableaux;

pub use algebra::{ExactRational, Partition, Staircase, TypeVector};
pub use error::{Error, Result};
pub use repdims::{GroupFamily, GroupKind};
