use num_bigint::BigUint;
use num_traits::{One, Zero};

/// `E[Z^r]` for a standard real normal: `(r−1)!!` for even `r`, else 0.
pub fn gaussian_moment(r: usize) -> BigUint {
    if r % 2 == 1 {
        return BigUint::zero();
    }
    (1..r).step_by(2).fold(BigUint::one(), |acc, m| acc * m)
}

/// `E[Z^r conj(Z)^s]` for a standard complex normal: `δ_{r,s} r!`.
pub fn complex_gaussian_moment(r: usize, s: usize) -> BigUint {
    if r != s {
        return BigUint::zero();
    }
    (1..=r).fold(BigUint::one(), |acc, m| acc * m)
}
