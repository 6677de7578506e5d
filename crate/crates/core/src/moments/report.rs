use serde::Serialize;

use super::{complex_gaussian_moment, exact_moment, gaussian_moment, MomentQuery};
use crate::algebra::ExactRational;
use crate::error::{Error, Result};
use crate::repdims::{GroupFamily, GroupKind};

/// Exact moment next to its Gaussian limit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MomentReport {
    pub query: MomentQuery,
    pub exact: ExactRational,
    pub limit: ExactRational,
    /// `|exact − limit|`
    pub gap: ExactRational,
    /// Labels with a nonzero tableau count.
    pub term_count: usize,
}

/// The `n → ∞` value of the moment: real normal for `Sp`/`SO`, standard
/// complex normal for `U`.
pub fn limit_moment(query: &MomentQuery) -> ExactRational {
    let v = match query.group.kind {
        GroupKind::Unitary => complex_gaussian_moment(query.r, query.s),
        _ => gaussian_moment(query.r),
    };
    ExactRational::from(&v)
}

pub fn moment_report(query: &MomentQuery) -> Result<MomentReport> {
    let sum = exact_moment(query)?;
    let limit = limit_moment(query);
    let gap = (&sum.value - &limit).abs();
    Ok(MomentReport {
        query: *query,
        exact: sum.value,
        limit,
        gap,
        term_count: sum.term_count,
    })
}

/// One report per `n`, in the order given. Stops at the first `n` outside
/// the family's regime.
pub fn clt_report(kind: GroupKind, k: usize, r: usize, s: usize, n_list: &[usize]) -> Result<Vec<MomentReport>> {
    if n_list.is_empty() {
        return Err(Error::domain("n list is empty"));
    }
    n_list
        .iter()
        .map(|&n| {
            let query = MomentQuery::new(GroupFamily::new(kind, n)?, k, r, s)?;
            moment_report(&query)
        })
        .collect()
}

/// True when the nonzero gaps never increase along the list.
pub fn gaps_weakly_decreasing(reports: &[MomentReport]) -> bool {
    let nonzero: Vec<_> = reports.iter().filter(|m| !m.gap.is_zero()).collect();
    nonzero.windows(2).all(|w| w[1].gap <= w[0].gap)
}
