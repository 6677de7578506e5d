use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An integer partition, stored as its positive parts in weakly decreasing
/// order. The empty partition has no parts.
///
/// Boxes are addressed English-style with 1-based `(row, col)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition from its parts. Trailing zeros are dropped; any
    /// other violation of weak decrease is a domain error.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::domain(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        if parts.contains(&0) {
            return Err(Error::domain(format!("parts {parts:?} contain an interior zero")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of boxes, `|λ|`.
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of nonzero parts, `l(λ)`.
    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (1-based), zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        let cols = (1..=width)
            .map(|j| self.0.iter().take_while(|&&p| p >= j).count() as u32)
            .collect();
        Partition(cols)
    }

    pub fn contains(&self, row: usize, col: usize) -> bool {
        row >= 1 && col >= 1 && (col as u32) <= self.part(row)
    }

    /// All boxes in row-major order.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p as usize).map(move |j| (i + 1, j)))
    }

    /// Arm plus leg plus one.
    pub fn hook_length(&self, row: usize, col: usize) -> Result<u32> {
        if !self.contains(row, col) {
            return Err(Error::domain(format!(
                "box ({row}, {col}) lies outside the diagram of {self}"
            )));
        }
        let arm = self.part(row) - col as u32;
        let leg = self.0[row..].iter().take_while(|&&p| p >= col as u32).count() as u32;
        Ok(arm + leg + 1)
    }

    /// All partitions obtained by removing or adding a single box, keeping
    /// at most `max_length` rows when a bound is given.
    ///
    /// Order: removals by increasing row, then additions by increasing row.
    pub fn neighbors(&self, max_length: Option<usize>) -> Vec<Partition> {
        let parts = &self.0;
        let len = parts.len();
        let mut out = Vec::with_capacity(2 * len + 1);

        for i in 0..len {
            // a box comes off row i only if row i+1 is strictly shorter
            if i + 1 == len || parts[i + 1] < parts[i] {
                let mut next = parts.clone();
                next[i] -= 1;
                if next[i] == 0 {
                    next.pop();
                }
                out.push(Partition(next));
            }
        }
        for i in 0..=len {
            let current = parts.get(i).copied().unwrap_or(0);
            if i == 0 || parts[i - 1] > current {
                let mut next = parts.clone();
                if i == len {
                    if max_length.is_some_and(|m| len + 1 > m) {
                        continue;
                    }
                    next.push(1);
                } else {
                    next[i] += 1;
                }
                out.push(Partition(next));
            }
        }
        out
    }

    /// Every partition of `m`, in reverse lexicographic order.
    pub fn all_of_size(m: u32) -> Vec<Partition> {
        fn go(rem: u32, cap: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(prefix.clone()));
                return;
            }
            for p in (1..=rem.min(cap)).rev() {
                prefix.push(p);
                go(rem - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(m, m, &mut Vec::new(), &mut out);
        out
    }

    /// Every partition of size at most `m`, grouped by increasing size.
    pub fn all_up_to_size(m: u32) -> Vec<Partition> {
        (0..=m).flat_map(Partition::all_of_size).collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Comma-separated positive parts; the empty string (or `()`) is `∅`.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if body.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = body
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                match tok.parse::<u32>() {
                    Ok(0) | Err(_) => Err(Error::Parse(format!(
                        "'{tok}' is not a positive integer part"
                    ))),
                    Ok(v) => Ok(v),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts).map_err(|e| Error::Parse(e.to_string()))
    }
}
