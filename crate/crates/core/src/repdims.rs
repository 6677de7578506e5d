//! Dimensions of irreducible representations of the compact classical
//! groups.
//!
//! Each family has a Weyl product over positive roots, which is the route
//! the rest of the crate uses, and (for `Sp`, `SO`) an independent
//! hook-content product over the boxes of the diagram. The two are
//! implemented separately and checked against each other in tests.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::algebra::{Partition, Staircase};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GroupKind {
    /// Compact symplectic group of rank `n`, matrix size `2n`.
    Symplectic,
    /// `SO(2n)`.
    SpecialOrthogonalEven,
    /// `SO(2n+1)`.
    SpecialOrthogonalOdd,
    /// `U(n)`.
    Unitary,
}

impl GroupKind {
    pub const ALL: [GroupKind; 4] = [
        GroupKind::Symplectic,
        GroupKind::SpecialOrthogonalEven,
        GroupKind::SpecialOrthogonalOdd,
        GroupKind::Unitary,
    ];

    /// Short name used on the command line and in reports.
    pub fn short_name(self) -> &'static str {
        match self {
            GroupKind::Symplectic => "sp",
            GroupKind::SpecialOrthogonalEven => "so-even",
            GroupKind::SpecialOrthogonalOdd => "so-odd",
            GroupKind::Unitary => "u",
        }
    }

    /// Whether the trace is real for every element.
    pub fn has_real_trace(self) -> bool {
        self != GroupKind::Unitary
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl FromStr for GroupKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "sp" | "symplectic" => Ok(GroupKind::Symplectic),
            "so-even" | "so_even" | "soeven" => Ok(GroupKind::SpecialOrthogonalEven),
            "so-odd" | "so_odd" | "soodd" => Ok(GroupKind::SpecialOrthogonalOdd),
            "u" | "unitary" => Ok(GroupKind::Unitary),
            other => Err(Error::Parse(format!(
                "unknown group '{other}' (expected sp, so-even, so-odd or u)"
            ))),
        }
    }
}

/// A group family together with its rank parameter `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupFamily {
    pub kind: GroupKind,
    pub n: usize,
}

impl GroupFamily {
    pub fn new(kind: GroupKind, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("rank parameter n must be positive"));
        }
        Ok(GroupFamily { kind, n })
    }

    pub fn symplectic(n: usize) -> Result<Self> {
        Self::new(GroupKind::Symplectic, n)
    }

    pub fn so_even(n: usize) -> Result<Self> {
        Self::new(GroupKind::SpecialOrthogonalEven, n)
    }

    pub fn so_odd(n: usize) -> Result<Self> {
        Self::new(GroupKind::SpecialOrthogonalOdd, n)
    }

    pub fn unitary(n: usize) -> Result<Self> {
        Self::new(GroupKind::Unitary, n)
    }

    /// Size of the defining matrices.
    pub fn matrix_size(&self) -> usize {
        match self.kind {
            GroupKind::Symplectic | GroupKind::SpecialOrthogonalEven => 2 * self.n,
            GroupKind::SpecialOrthogonalOdd => 2 * self.n + 1,
            GroupKind::Unitary => self.n,
        }
    }
}

impl fmt::Display for GroupFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            GroupKind::Symplectic => write!(f, "Sp({})", 2 * self.n),
            GroupKind::SpecialOrthogonalEven => write!(f, "SO({})", 2 * self.n),
            GroupKind::SpecialOrthogonalOdd => write!(f, "SO({})", 2 * self.n + 1),
            GroupKind::Unitary => write!(f, "U({})", self.n),
        }
    }
}

/// Accumulates a product of integer ratios and divides once at the end.
struct RatioProduct {
    num: BigInt,
    den: BigInt,
}

impl RatioProduct {
    fn new() -> Self {
        RatioProduct { num: BigInt::one(), den: BigInt::one() }
    }

    fn push(&mut self, num: i64, den: i64) {
        self.num *= num;
        self.den *= den;
    }

    fn into_dimension(self, what: &str) -> BigUint {
        let (q, rem) = self.num.div_rem(&self.den);
        assert!(
            rem == BigInt::from(0) && q.is_positive(),
            "{what}: product {}/{} is not a positive integer",
            self.num,
            self.den
        );
        q.to_biguint().expect("positive")
    }
}

fn padded(lambda: &Partition, n: usize) -> Vec<i64> {
    (1..=n).map(|i| lambda.part(i) as i64).collect()
}

/// Weyl product for types B, C, D: `∏_{i<j} (l_i² − l_j²)/(ρ_i² − ρ_j²)`,
/// times `∏ l_i/ρ_i` when the short/long roots `e_i` or `2e_i` are present.
fn weyl_bcd(shifted: &[i64], rho: &[i64], include_linear: bool, what: &str) -> BigUint {
    let mut prod = RatioProduct::new();
    for i in 0..shifted.len() {
        if include_linear {
            prod.push(shifted[i], rho[i]);
        }
        for j in i + 1..shifted.len() {
            prod.push(
                (shifted[i] - shifted[j]) * (shifted[i] + shifted[j]),
                (rho[i] - rho[j]) * (rho[i] + rho[j]),
            );
        }
    }
    prod.into_dimension(what)
}

/// Dimension of the `Sp(2n)` irreducible labelled by `λ`, `l(λ) ≤ n`.
pub fn dim_symplectic(lambda: &Partition, n: usize) -> Result<BigUint> {
    if n == 0 || lambda.length() > n {
        return Err(Error::domain(format!(
            "Sp({}) has no irreducible labelled {lambda}: need 1 <= l(λ) <= n",
            2 * n
        )));
    }
    // ρ = (n, n-1, ..., 1)
    let rho: Vec<i64> = (0..n).map(|i| (n - i) as i64).collect();
    let shifted: Vec<i64> = padded(lambda, n).iter().zip(&rho).map(|(l, r)| l + r).collect();
    Ok(weyl_bcd(&shifted, &rho, true, "type C"))
}

/// Dimension of the `SO(2n)` irreducible labelled by `λ`. Labels with
/// `l(λ) = n` are refused since they split into two irreducibles.
pub fn dim_so_even(lambda: &Partition, n: usize) -> Result<BigUint> {
    if n == 0 || lambda.length() >= n {
        return Err(Error::domain(format!(
            "SO({}) label {lambda} refused: need l(λ) < n",
            2 * n
        )));
    }
    // ρ = (n-1, ..., 1, 0)
    let rho: Vec<i64> = (0..n).map(|i| (n - 1 - i) as i64).collect();
    let shifted: Vec<i64> = padded(lambda, n).iter().zip(&rho).map(|(l, r)| l + r).collect();
    Ok(weyl_bcd(&shifted, &rho, false, "type D"))
}

/// Dimension of the `SO(2n+1)` irreducible labelled by `λ`, `l(λ) ≤ n`.
pub fn dim_so_odd(lambda: &Partition, n: usize) -> Result<BigUint> {
    if n == 0 || lambda.length() > n {
        return Err(Error::domain(format!(
            "SO({}) has no irreducible labelled {lambda}: need l(λ) <= n",
            2 * n + 1
        )));
    }
    // ρ = (n-1/2, ..., 1/2), doubled to stay integral; the doubling cancels
    let rho: Vec<i64> = (0..n).map(|i| 2 * (n - 1 - i) as i64 + 1).collect();
    let shifted: Vec<i64> = padded(lambda, n)
        .iter()
        .zip(&rho)
        .map(|(l, r)| 2 * l + r)
        .collect();
    Ok(weyl_bcd(&shifted, &rho, true, "type B"))
}

/// Dimension of the `U(n)` irreducible with highest weight `γ`:
/// `∏_{i<j} (γ_i − γ_j + j − i)/(j − i)`.
pub fn dim_unitary(gamma: &Staircase, n: usize) -> Result<BigUint> {
    if gamma.height() != n {
        return Err(Error::domain(format!(
            "staircase {gamma} has height {}, expected {n}",
            gamma.height()
        )));
    }
    let e = gamma.entries();
    let mut prod = RatioProduct::new();
    for i in 0..n {
        for j in i + 1..n {
            prod.push(e[i] - e[j] + (j - i) as i64, (j - i) as i64);
        }
    }
    Ok(prod.into_dimension("type A"))
}

/// Hook-content products over the boxes of `λ`.
///
/// For `Sp(2n)` each box `(i, j)` contributes `(2n + r(i,j)) / h(i,j)` with
/// `r = λ_i + λ_j − i − j + 2` below the diagonal and
/// `r = i + j − λ'_i − λ'_j` on or above it. For `SO(N)` the factor is
/// `(N + s(i,j)) / h(i,j)` with `s = λ_i + λ_j − i − j` on or below the
/// diagonal and `s = i + j − λ'_i − λ'_j − 2` above it.
pub mod hook_content {
    use super::*;

    fn checked_product(lambda: &Partition, factor: impl Fn(usize, usize) -> i64, what: &str) -> BigUint {
        let mut prod = RatioProduct::new();
        for (i, j) in lambda.boxes() {
            let h = lambda.hook_length(i, j).expect("box from the diagram") as i64;
            prod.push(factor(i, j), h);
        }
        prod.into_dimension(what)
    }

    pub fn dim_symplectic(lambda: &Partition, n: usize) -> Result<BigUint> {
        if n == 0 || lambda.length() > n {
            return Err(Error::domain("need 1 <= l(λ) <= n"));
        }
        let conj = lambda.conjugate();
        let row = |i: usize| lambda.part(i) as i64;
        let col = |j: usize| conj.part(j) as i64;
        let two_n = 2 * n as i64;
        Ok(checked_product(
            lambda,
            |i, j| {
                let (ii, jj) = (i as i64, j as i64);
                let r = if i > j {
                    row(i) + row(j) - ii - jj + 2
                } else {
                    ii + jj - col(i) - col(j)
                };
                two_n + r
            },
            "symplectic hook-content",
        ))
    }

    /// `SO(N)` for either parity; `N` is the matrix size.
    pub fn dim_orthogonal(lambda: &Partition, matrix_size: usize) -> Result<BigUint> {
        let rank = matrix_size / 2;
        let ok = if matrix_size % 2 == 0 {
            lambda.length() < rank
        } else {
            lambda.length() <= rank
        };
        if rank == 0 || !ok {
            return Err(Error::domain(format!("label {lambda} not admissible for SO({matrix_size})")));
        }
        let conj = lambda.conjugate();
        let row = |i: usize| lambda.part(i) as i64;
        let col = |j: usize| conj.part(j) as i64;
        let size = matrix_size as i64;
        Ok(checked_product(
            lambda,
            |i, j| {
                let (ii, jj) = (i as i64, j as i64);
                let s = if i >= j {
                    row(i) + row(j) - ii - jj
                } else {
                    ii + jj - col(i) - col(j) - 2
                };
                size + s
            },
            "orthogonal hook-content",
        ))
    }

    pub fn dim_so_even(lambda: &Partition, n: usize) -> Result<BigUint> {
        dim_orthogonal(lambda, 2 * n)
    }

    pub fn dim_so_odd(lambda: &Partition, n: usize) -> Result<BigUint> {
        dim_orthogonal(lambda, 2 * n + 1)
    }
}

/// Dimension of the irreducible of a non-unitary family labelled by `λ`.
pub fn dim_partition(family: GroupFamily, lambda: &Partition) -> Result<BigUint> {
    match family.kind {
        GroupKind::Symplectic => dim_symplectic(lambda, family.n),
        GroupKind::SpecialOrthogonalEven => dim_so_even(lambda, family.n),
        GroupKind::SpecialOrthogonalOdd => dim_so_odd(lambda, family.n),
        GroupKind::Unitary => Err(Error::domain(
            "unitary irreducibles are labelled by staircases, not partitions",
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn symplectic_examples() {
        for n in 1..=8 {
            assert_eq!(dim_symplectic(&Partition::empty(), n).unwrap(), big(1));
            assert_eq!(dim_symplectic(&p(&[1]), n).unwrap(), big(2 * n as u64));
            let n64 = n as u64;
            assert_eq!(dim_symplectic(&p(&[2]), n).unwrap(), big(n64 * (2 * n64 + 1)));
            if n >= 2 {
                assert_eq!(dim_symplectic(&p(&[1, 1]), n).unwrap(), big((2 * n64 + 1) * (n64 - 1)));
            }
        }
        assert_eq!(dim_symplectic(&p(&[2]), 3).unwrap(), big(21));
        assert_eq!(dim_symplectic(&p(&[1, 1]), 3).unwrap(), big(14));
        assert!(dim_symplectic(&p(&[1, 1]), 1).is_err());
    }

    #[test]
    fn orthogonal_examples() {
        assert_eq!(dim_so_even(&Partition::empty(), 3).unwrap(), big(1));
        assert_eq!(dim_so_even(&p(&[1]), 4).unwrap(), big(8));
        assert_eq!(dim_so_even(&p(&[2]), 4).unwrap(), big(35));
        assert_eq!(dim_so_even(&p(&[1, 1]), 4).unwrap(), big(28));
        assert!(dim_so_even(&p(&[1, 1]), 2).is_err());
        assert!(dim_so_even(&p(&[1]), 1).is_err());

        assert_eq!(dim_so_odd(&p(&[1]), 3).unwrap(), big(7));
        assert_eq!(dim_so_odd(&p(&[1, 1]), 3).unwrap(), big(21));
        assert_eq!(dim_so_odd(&Partition::empty(), 2).unwrap(), big(1));
        assert!(dim_so_odd(&p(&[1, 1, 1, 1]), 3).is_err());
    }

    #[test]
    fn unitary_examples() {
        for n in 1..=7 {
            let zeros = Staircase::zeros(n).unwrap();
            assert_eq!(dim_unitary(&zeros, n).unwrap(), big(1));
            let mut e = vec![0i64; n];
            e[0] = 1;
            assert_eq!(dim_unitary(&Staircase::new(e).unwrap(), n).unwrap(), big(n as u64));
        }
        let adj = Staircase::new(vec![1, 0, 0, 0, -1]).unwrap();
        assert_eq!(dim_unitary(&adj, 5).unwrap(), big(24));
        assert!(dim_unitary(&adj, 4).is_err());
    }

    #[test]
    fn unitary_shift_invariance() {
        let g = Staircase::new(vec![3, 1, 1, 0, -2]).unwrap();
        let d = dim_unitary(&g, 5).unwrap();
        for c in -4..=4 {
            assert_eq!(dim_unitary(&g.shifted(c), 5).unwrap(), d);
        }
    }

    #[test]
    fn hook_content_examples() {
        assert_eq!(hook_content::dim_symplectic(&p(&[2]), 3).unwrap(), big(21));
        assert_eq!(hook_content::dim_symplectic(&p(&[1, 1]), 3).unwrap(), big(14));
        assert_eq!(hook_content::dim_so_even(&p(&[2]), 4).unwrap(), big(35));
        assert_eq!(hook_content::dim_so_odd(&p(&[1, 1]), 3).unwrap(), big(21));
    }

    #[test]
    fn group_names() {
        for kind in GroupKind::ALL {
            assert_eq!(kind.short_name().parse::<GroupKind>().unwrap(), kind);
        }
        assert!("gl".parse::<GroupKind>().is_err());
        assert_eq!(GroupFamily::so_odd(5).unwrap().matrix_size(), 11);
        assert_eq!(GroupFamily::symplectic(5).unwrap().to_string(), "Sp(10)");
        assert!(GroupFamily::unitary(0).is_err());
    }
}
