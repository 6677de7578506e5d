//! Counting up-down tableaux.
//!
//! An up-down tableau of length `r` is a walk `∅ = λ⁰, λ¹, …, λʳ` on Young
//! diagrams where each step adds or removes one box; `f_r^λ` counts those
//! ending at `λ` and `f_r^λ(n)` those whose shapes all have at most `n` rows.
//! The staircase variant walks on weakly decreasing integer vectors of a fixed
//! height, raising or lowering one entry per step according to a type vector.
//!
//! Both counters are forward dynamic programs over a layer of reachable
//! shapes. The [`oracle`] module holds independent brute-force enumerators.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::algebra::{Partition, Staircase, TypeVector};
use crate::error::{Error, Result};

fn check_bound(height_bound: Option<usize>) -> Result<()> {
    if height_bound == Some(0) {
        return Err(Error::domain("height bound must be positive"));
    }
    Ok(())
}

fn diagram_distance(a: &Partition, b: &Partition) -> u64 {
    let rows = a.length().max(b.length());
    (1..=rows).map(|i| a.part(i).abs_diff(b.part(i)) as u64).sum()
}

/// Every nonzero `f_r^λ` (or `f_r^λ(n)` with a height bound), keyed by shape.
pub fn updown_counts(r: usize, height_bound: Option<usize>) -> Result<BTreeMap<Partition, BigUint>> {
    check_bound(height_bound)?;
    let mut layer = BTreeMap::from([(Partition::empty(), BigUint::one())]);
    for _ in 0..r {
        let mut next: BTreeMap<Partition, BigUint> = BTreeMap::new();
        for (shape, count) in &layer {
            for mu in shape.neighbors(height_bound) {
                *next.entry(mu).or_default() += count;
            }
        }
        layer = next;
    }
    Ok(layer)
}

/// `f_r^λ` (unbounded) or `f_r^λ(n)` (every intermediate shape has at most
/// `n` rows).
pub fn count_updown(shape: &Partition, r: usize, height_bound: Option<usize>) -> Result<BigUint> {
    check_bound(height_bound)?;
    if let Some(n) = height_bound {
        if shape.length() > n {
            return Err(Error::domain(format!(
                "shape {shape} has {} rows, more than the bound {n}",
                shape.length()
            )));
        }
    }
    let size = shape.size() as usize;
    if size > r || (r - size) % 2 != 0 {
        return Ok(BigUint::zero());
    }

    let mut layer = BTreeMap::from([(Partition::empty(), BigUint::one())]);
    for step in 0..r {
        let remaining = (r - step - 1) as u64;
        let mut next: BTreeMap<Partition, BigUint> = BTreeMap::new();
        for (current, count) in &layer {
            for mu in current.neighbors(height_bound) {
                // a shape that cannot reach the target in the remaining steps is dropped
                if diagram_distance(&mu, shape) <= remaining {
                    *next.entry(mu).or_default() += count;
                }
            }
        }
        layer = next;
    }
    Ok(layer.remove(shape).unwrap_or_default())
}

/// Final layer of the staircase walk of the given type, starting at zeros.
pub fn staircase_counts(height: usize, ty: &TypeVector) -> Result<BTreeMap<Staircase, BigUint>> {
    let mut layer = BTreeMap::from([(Staircase::zeros(height)?, BigUint::one())]);
    for &step in ty.steps() {
        let mut next: BTreeMap<Staircase, BigUint> = BTreeMap::new();
        for (current, count) in &layer {
            let moves = if step > 0 { current.raises() } else { current.lowers() };
            for g in moves {
                *next.entry(g).or_default() += count;
            }
        }
        layer = next;
    }
    Ok(layer)
}

/// `c_j^γ(ε)`: staircase tableaux of shape `γ` and type `ε`, with `j = |ε|`
/// and the height taken from `γ`.
pub fn count_staircase(shape: &Staircase, ty: &TypeVector) -> BigUint {
    if shape.weight() != ty.total() {
        return BigUint::zero();
    }
    let height = shape.height();
    let mut layer = BTreeMap::from([(Staircase::zeros(height).expect("height >= 1"), BigUint::one())]);
    let steps = ty.steps();
    for (i, &step) in steps.iter().enumerate() {
        let remaining = (steps.len() - i - 1) as u64;
        let mut next: BTreeMap<Staircase, BigUint> = BTreeMap::new();
        for (current, count) in &layer {
            let moves = if step > 0 { current.raises() } else { current.lowers() };
            for g in moves {
                if g.distance(shape) <= remaining {
                    *next.entry(g).or_default() += count;
                }
            }
        }
        layer = next;
    }
    layer.remove(shape).unwrap_or_default()
}

/// Brute-force enumerators that share no move-generation code with the
/// dynamic programs above: every candidate step is tried on every row or
/// entry and kept only if the result is still a valid shape.
pub mod oracle {
    use std::collections::HashMap;

    use super::*;

    pub const MAX_UPDOWN_LENGTH: usize = 10;
    pub const MAX_STAIRCASE_LENGTH: usize = 10;

    fn is_partition(rows: &[i64]) -> bool {
        rows.iter().all(|&v| v >= 0) && rows.windows(2).all(|w| w[0] >= w[1])
    }

    fn nonzero_rows(rows: &[i64]) -> usize {
        rows.iter().filter(|&&v| v > 0).count()
    }

    fn check_updown_length(r: usize) -> Result<()> {
        if r > MAX_UPDOWN_LENGTH {
            return Err(Error::Refused(format!(
                "brute-force up-down enumeration is limited to r <= {MAX_UPDOWN_LENGTH}"
            )));
        }
        Ok(())
    }

    fn check_staircase_length(ty: &TypeVector) -> Result<()> {
        if ty.len() > MAX_STAIRCASE_LENGTH {
            return Err(Error::Refused(format!(
                "brute-force staircase enumeration is limited to length <= {MAX_STAIRCASE_LENGTH}"
            )));
        }
        Ok(())
    }

    /// Enumerates every length-`r` walk from `∅` and tallies the endpoints.
    pub fn brute_force_updown_layer(
        r: usize,
        height_bound: Option<usize>,
    ) -> Result<BTreeMap<Partition, BigUint>> {
        check_updown_length(r)?;
        check_bound(height_bound)?;
        // r + 1 rows is enough room for any walk of length r
        let width = r + 1;
        let max_rows = height_bound.unwrap_or(width);

        fn walk(rows: &mut Vec<i64>, left: usize, max_rows: usize, tally: &mut HashMap<Vec<i64>, u64>) {
            if left == 0 {
                *tally.entry(rows.clone()).or_default() += 1;
                return;
            }
            for i in 0..rows.len() {
                for delta in [1i64, -1] {
                    rows[i] += delta;
                    if is_partition(rows) && nonzero_rows(rows) <= max_rows {
                        walk(rows, left - 1, max_rows, tally);
                    }
                    rows[i] -= delta;
                }
            }
        }

        let mut tally = HashMap::new();
        walk(&mut vec![0i64; width], r, max_rows, &mut tally);
        tally
            .into_iter()
            .map(|(rows, count)| {
                let parts = rows.into_iter().map(|v| v as u32).collect();
                Ok((Partition::new(parts)?, BigUint::from(count)))
            })
            .collect()
    }

    pub fn brute_force_updown(shape: &Partition, r: usize, height_bound: Option<usize>) -> Result<BigUint> {
        check_updown_length(r)?;
        check_bound(height_bound)?;
        if height_bound.is_some_and(|n| shape.length() > n) {
            return Err(Error::domain("shape longer than height bound"));
        }
        Ok(brute_force_updown_layer(r, height_bound)?
            .remove(shape)
            .unwrap_or_default())
    }

    /// Enumerates every staircase walk of type `ty` from zeros and tallies
    /// the endpoints.
    pub fn brute_force_staircase_layer(height: usize, ty: &TypeVector) -> Result<BTreeMap<Staircase, BigUint>> {
        check_staircase_length(ty)?;

        fn walk(entries: &mut Vec<i64>, steps: &[i8], tally: &mut HashMap<Vec<i64>, u64>) {
            let Some((&step, rest)) = steps.split_first() else {
                *tally.entry(entries.clone()).or_default() += 1;
                return;
            };
            for i in 0..entries.len() {
                entries[i] += step as i64;
                if entries.windows(2).all(|w| w[0] >= w[1]) {
                    walk(entries, rest, tally);
                }
                entries[i] -= step as i64;
            }
        }

        let mut tally = HashMap::new();
        walk(&mut vec![0i64; height], ty.steps(), &mut tally);
        tally
            .into_iter()
            .map(|(e, count)| Ok((Staircase::new(e)?, BigUint::from(count))))
            .collect()
    }

    pub fn brute_force_staircase(shape: &Staircase, ty: &TypeVector) -> Result<BigUint> {
        Ok(brute_force_staircase_layer(shape.height(), ty)?
            .remove(shape)
            .unwrap_or_default())
    }
}
