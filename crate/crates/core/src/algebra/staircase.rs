use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A weakly decreasing integer sequence of fixed height; these label the
/// irreducible representations of `U(n)` when the height is `n`.
///
/// All `height` entries are stored, zeros included.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Staircase(Vec<i64>);

impl Staircase {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::domain("a staircase needs height at least 1"));
        }
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::domain(format!(
                "entries {entries:?} are not weakly decreasing"
            )));
        }
        Ok(Staircase(entries))
    }

    /// The all-zeros staircase of the given height (the trivial representation).
    pub fn zeros(height: usize) -> Result<Self> {
        Staircase::new(vec![0; height])
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn height(&self) -> usize {
        self.0.len()
    }

    /// `|γ|`, which may be negative.
    pub fn weight(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Adds `c` to every entry (tensoring with a power of the determinant).
    pub fn shifted(&self, c: i64) -> Staircase {
        Staircase(self.0.iter().map(|&e| e + c).collect())
    }

    /// L1 distance between entry vectors; a lower bound on the number of
    /// single-entry moves separating two staircases of the same height.
    pub fn distance(&self, other: &Staircase) -> u64 {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.abs_diff(*b))
            .sum()
    }

    /// Staircases reached by raising one entry by one.
    pub fn raises(&self) -> Vec<Staircase> {
        let e = &self.0;
        (0..e.len())
            .filter(|&i| i == 0 || e[i - 1] > e[i])
            .map(|i| {
                let mut next = e.clone();
                next[i] += 1;
                Staircase(next)
            })
            .collect()
    }

    /// Staircases reached by lowering one entry by one.
    pub fn lowers(&self) -> Vec<Staircase> {
        let e = &self.0;
        (0..e.len())
            .filter(|&i| i + 1 == e.len() || e[i + 1] < e[i])
            .map(|i| {
                let mut next = e.clone();
                next[i] -= 1;
                Staircase(next)
            })
            .collect()
    }

    /// All staircases of the same height differing in one entry by one:
    /// raises (by position) followed by lowers (by position).
    pub fn neighbors(&self) -> Vec<Staircase> {
        let mut out = self.raises();
        out.extend(self.lowers());
        out
    }
}

impl fmt::Display for Staircase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Staircase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let entries = body
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("'{}' is not an integer", tok.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Staircase::new(entries).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// A sequence of `+1` / `-1` steps: the add/remove pattern of a staircase
/// tableau.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TypeVector(Vec<i8>);

impl TypeVector {
    pub fn new(steps: Vec<i8>) -> Result<Self> {
        if let Some(bad) = steps.iter().find(|&&s| s != 1 && s != -1) {
            return Err(Error::domain(format!("type entry {bad} is not ±1")));
        }
        Ok(TypeVector(steps))
    }

    /// `r` raises followed by `s` lowers.
    pub fn canonical(r: usize, s: usize) -> Self {
        let mut steps = vec![1; r];
        steps.extend(std::iter::repeat_n(-1, s));
        TypeVector(steps)
    }

    pub fn steps(&self) -> &[i8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn plus_count(&self) -> usize {
        self.0.iter().filter(|&&s| s == 1).count()
    }

    pub fn minus_count(&self) -> usize {
        self.0.len() - self.plus_count()
    }

    /// Net weight change, `Σ ε_i`.
    pub fn total(&self) -> i64 {
        self.0.iter().map(|&s| s as i64).sum()
    }
}

impl fmt::Display for TypeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tokens: Vec<&str> = self.0.iter().map(|&s| if s == 1 { "+1" } else { "-1" }).collect();
        write!(f, "{}", tokens.join(","))
    }
}

/// Comma-separated `+1`/`-1` (or bare `+`/`-`) tokens.
impl FromStr for TypeVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(TypeVector(Vec::new()));
        }
        let steps = s
            .split(',')
            .map(|tok| match tok.trim() {
                "+" | "+1" | "1" => Ok(1),
                "-" | "-1" => Ok(-1),
                other => Err(Error::Parse(format!("'{other}' is not a ±1 step"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(TypeVector(steps))
    }
}
