//! Exact moments of `T = Tr([x_1, y_1] ⋯ [x_k, y_k])` for Haar-random
//! arguments, their Gaussian limits, and the finite-group analogue of the
//! commutator identity `∫ χ([y_1,z_1]⋯[y_k,z_k]) = 1/d_χ^(2k−1)`.
//!
//! Expanding `T^r` (or `T^r conj(T)^s` for `U(n)`) into irreducible
//! characters and integrating each term gives
//!
//! ```text
//! Sp(2n):          E[T^r]            = Σ_{l(λ)≤n} f_r^λ(n) / d_λ^(2k−1)
//! SO(2n), SO(2n+1): E[T^r]            = Σ_λ f_r^λ / d_λ^(2k−1)          (n > r)
//! U(n):            E[T^r conj(T)^s]  = Σ_γ c_{r+s}^γ(ε) / d_γ^(2k−1)
//! ```

mod finite;
mod gaussian;
mod report;

pub use finite::{finite_commutator_average, Character, FiniteGroup, FINITE_GUARD};
pub use gaussian::{complex_gaussian_moment, gaussian_moment};
pub use report::{clt_report, gaps_weakly_decreasing, limit_moment, moment_report, MomentReport};

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{ExactRational, TypeVector};
use crate::error::{Error, Result};
use crate::repdims::{self, GroupFamily, GroupKind};
use crate::tableaux;

/// Which moment to compute: `E[T^r conj(T)^s]` for `k` commutators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MomentQuery {
    pub group: GroupFamily,
    pub k: usize,
    pub r: usize,
    /// Power of the conjugate trace; must be zero outside `U(n)`.
    pub s: usize,
}

impl MomentQuery {
    pub fn new(group: GroupFamily, k: usize, r: usize, s: usize) -> Result<Self> {
        let q = MomentQuery { group, k, r, s };
        q.validate()?;
        Ok(q)
    }

    pub fn validate(&self) -> Result<()> {
        if self.k == 0 {
            return Err(Error::domain("k must be at least 1"));
        }
        if self.group.n == 0 {
            return Err(Error::domain("n must be at least 1"));
        }
        if self.s != 0 && self.group.kind.has_real_trace() {
            return Err(Error::domain(format!(
                "the trace is real for {}; use s = 0",
                self.group
            )));
        }
        Ok(())
    }
}

/// An exact moment and the number of labels that contributed to it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentSum {
    pub value: ExactRational,
    pub term_count: usize,
}

fn exponent(k: usize) -> u32 {
    (2 * k - 1) as u32
}

fn sum_terms<L: Sync>(
    terms: &[(L, BigUint)],
    k: usize,
    dim: impl Fn(&L) -> Result<BigUint> + Sync,
) -> Result<MomentSum> {
    let e = exponent(k);
    let value = terms
        .par_iter()
        .map(|(label, count)| {
            let d = dim(label)?;
            Ok::<_, Error>(ExactRational::from(count) * ExactRational::inverse_power(&d, e))
        })
        .try_reduce(ExactRational::zero, |a, b| Ok(a + b))?;
    Ok(MomentSum { value, term_count: terms.len() })
}

fn check_orthogonal_regime(group: &str, n: usize, r: usize) -> Result<()> {
    if n <= r {
        return Err(Error::Regime(format!(
            "{group} moment of order r = {r} needs n > r, got n = {n}"
        )));
    }
    Ok(())
}

fn check_common(n: usize, k: usize) -> Result<()> {
    if n == 0 || k == 0 {
        return Err(Error::domain("n and k must be at least 1"));
    }
    Ok(())
}

pub fn symplectic_sum(n: usize, k: usize, r: usize) -> Result<MomentSum> {
    check_common(n, k)?;
    let counts: Vec<_> = tableaux::updown_counts(r, Some(n))?.into_iter().collect();
    sum_terms(&counts, k, |lambda| repdims::dim_symplectic(lambda, n))
}

pub fn so_even_sum(n: usize, k: usize, r: usize) -> Result<MomentSum> {
    check_common(n, k)?;
    check_orthogonal_regime("SO(2n)", n, r)?;
    let counts: Vec<_> = tableaux::updown_counts(r, None)?.into_iter().collect();
    sum_terms(&counts, k, |lambda| repdims::dim_so_even(lambda, n))
}

pub fn so_odd_sum(n: usize, k: usize, r: usize) -> Result<MomentSum> {
    check_common(n, k)?;
    check_orthogonal_regime("SO(2n+1)", n, r)?;
    let counts: Vec<_> = tableaux::updown_counts(r, None)?.into_iter().collect();
    sum_terms(&counts, k, |lambda| repdims::dim_so_odd(lambda, n))
}

pub fn unitary_sum(n: usize, k: usize, r: usize, s: usize) -> Result<MomentSum> {
    check_common(n, k)?;
    // raises first, then lowers; any reordering gives the same counts
    let ty = TypeVector::canonical(r, s);
    let counts: Vec<_> = tableaux::staircase_counts(n, &ty)?.into_iter().collect();
    sum_terms(&counts, k, |gamma| repdims::dim_unitary(gamma, n))
}

/// `E[T^r]` over the compact symplectic group of rank `n`.
pub fn moment_symplectic(n: usize, k: usize, r: usize) -> Result<ExactRational> {
    symplectic_sum(n, k, r).map(|m| m.value)
}

/// `E[T^r]` over `SO(2n)`; requires `n > r`.
pub fn moment_so_even(n: usize, k: usize, r: usize) -> Result<ExactRational> {
    so_even_sum(n, k, r).map(|m| m.value)
}

/// `E[T^r]` over `SO(2n+1)`; requires `n > r`.
pub fn moment_so_odd(n: usize, k: usize, r: usize) -> Result<ExactRational> {
    so_odd_sum(n, k, r).map(|m| m.value)
}

/// Mixed moment `E[T^r conj(T)^s]` over `U(n)`.
pub fn moment_unitary(n: usize, k: usize, r: usize, s: usize) -> Result<ExactRational> {
    unitary_sum(n, k, r, s).map(|m| m.value)
}

/// Dispatches on the group family.
pub fn exact_moment(query: &MomentQuery) -> Result<MomentSum> {
    query.validate()?;
    let MomentQuery { group, k, r, s } = *query;
    match group.kind {
        GroupKind::Symplectic => symplectic_sum(group.n, k, r),
        GroupKind::SpecialOrthogonalEven => so_even_sum(group.n, k, r),
        GroupKind::SpecialOrthogonalOdd => so_odd_sum(group.n, k, r),
        GroupKind::Unitary => unitary_sum(group.n, k, r, s),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> ExactRational {
        s.parse().unwrap()
    }

    #[test]
    fn zeroth_moment_is_one() {
        for k in 1..=3 {
            for n in 1..=4 {
                assert_eq!(moment_symplectic(n, k, 0).unwrap(), ExactRational::one());
                assert_eq!(moment_so_even(n, k, 0).unwrap(), ExactRational::one());
                assert_eq!(moment_so_odd(n, k, 0).unwrap(), ExactRational::one());
                assert_eq!(moment_unitary(n, k, 0, 0).unwrap(), ExactRational::one());
            }
        }
    }

    #[test]
    fn first_moments() {
        for k in 1..=3u32 {
            for n in 1..=6u64 {
                let kk = k as usize;
                let nn = n as usize;
                let sp = ExactRational::inverse_power(&BigUint::from(2 * n), 2 * k - 1);
                assert_eq!(moment_symplectic(nn, kk, 1).unwrap(), sp);
                let u = ExactRational::inverse_power(&BigUint::from(n), 2 * k - 1);
                assert_eq!(moment_unitary(nn, kk, 1, 0).unwrap(), u);
            }
        }
        assert_eq!(moment_so_even(4, 1, 1).unwrap(), q("1/8"));
    }

    #[test]
    fn second_moment_examples() {
        // shapes ∅, (2), (1,1) with count 1 each
        assert_eq!(moment_symplectic(3, 1, 2).unwrap(), q("1") + q("1/21") + q("1/14"));
        assert_eq!(moment_symplectic(3, 1, 2).unwrap(), q("47/42"));
        assert_eq!(moment_so_even(4, 1, 2).unwrap(), q("1") + q("1/35") + q("1/28"));
        assert_eq!(moment_unitary(5, 1, 1, 1).unwrap(), q("25/24"));
    }

    #[test]
    fn orthogonal_regime_is_enforced() {
        assert!(matches!(moment_so_even(2, 1, 3), Err(Error::Regime(_))));
        assert!(matches!(moment_so_odd(3, 1, 3), Err(Error::Regime(_))));
        assert!(moment_so_odd(4, 1, 3).is_ok());
    }

    #[test]
    fn query_validation() {
        let sp = GroupFamily::symplectic(3).unwrap();
        assert!(MomentQuery::new(sp, 0, 1, 0).is_err());
        assert!(MomentQuery::new(sp, 1, 1, 1).is_err());
        let u = GroupFamily::unitary(3).unwrap();
        let m = exact_moment(&MomentQuery::new(u, 1, 1, 1).unwrap()).unwrap();
        // zeros and (1,0,-1)
        assert_eq!(m.term_count, 2);
        assert_eq!(m.value, q("1") + q("1/8"));
    }

    #[test]
    fn unitary_conjugation_symmetry() {
        for n in 1..=5 {
            for r in 0..=3 {
                for s in 0..=3 {
                    assert_eq!(
                        moment_unitary(n, 1, r, s).unwrap(),
                        moment_unitary(n, 1, s, r).unwrap()
                    );
                }
            }
        }
    }
}
