//! Brute-force check of the commutator identity on small finite groups:
//! `|G|^(−2k) Σ χ([y_1,z_1]⋯[y_k,z_k]) = 1/d_χ^(2k−1)` for every
//! irreducible `χ`.

use num_bigint::BigInt;

use crate::algebra::ExactRational;
use crate::error::{Error, Result};

/// Largest number of `2k`-tuples the brute-force average will enumerate.
pub const FINITE_GUARD: u64 = 100_000_000;

#[derive(Clone, Debug)]
pub struct Character {
    pub label: String,
    /// Value on each element, indexed like the multiplication table.
    pub values: Vec<i64>,
}

/// A finite group given by its Cayley table, with an integer-valued
/// character table.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    pub name: String,
    pub elements: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
    pub characters: Vec<Character>,
}

impl FiniteGroup {
    /// Builds the group from a multiplication table, validating the group
    /// axioms and the character table.
    pub fn new(
        name: impl Into<String>,
        elements: Vec<String>,
        table: Vec<Vec<usize>>,
        characters: Vec<Character>,
    ) -> Result<Self> {
        let order = elements.len();
        if order == 0 || table.len() != order || table.iter().any(|row| row.len() != order) {
            return Err(Error::domain("multiplication table has the wrong shape"));
        }
        if table.iter().flatten().any(|&g| g >= order) {
            return Err(Error::domain("multiplication table refers to a missing element"));
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or_else(|| Error::domain("no identity element"))?;
        let inverse = (0..order)
            .map(|g| {
                (0..order)
                    .find(|&h| table[g][h] == identity && table[h][g] == identity)
                    .ok_or_else(|| Error::domain(format!("element {g} has no inverse")))
            })
            .collect::<Result<Vec<_>>>()?;
        let group = FiniteGroup {
            name: name.into(),
            elements,
            table,
            identity,
            inverse,
            characters,
        };
        group.check_associative()?;
        group.check_characters()?;
        Ok(group)
    }

    fn check_associative(&self) -> Result<()> {
        let n = self.order();
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(Error::domain(format!("not associative at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        Ok(())
    }

    /// Class functions, `Σ d² = |G|`, and orthonormality under the group
    /// average (values are real integers here, so no conjugation).
    fn check_characters(&self) -> Result<()> {
        let n = self.order();
        for chi in &self.characters {
            if chi.values.len() != n {
                return Err(Error::domain(format!("character {} has the wrong length", chi.label)));
            }
            for g in 0..n {
                for h in 0..n {
                    let conj = self.mul(self.mul(self.inverse(h), g), h);
                    if chi.values[conj] != chi.values[g] {
                        return Err(Error::domain(format!("{} is not a class function", chi.label)));
                    }
                }
            }
        }
        let dim_sq: i64 = self.characters.iter().map(|c| c.values[self.identity].pow(2)).sum();
        if dim_sq != n as i64 {
            return Err(Error::domain(format!("sum of squared dimensions {dim_sq} != |G| = {n}")));
        }
        for (i, a) in self.characters.iter().enumerate() {
            for (j, b) in self.characters.iter().enumerate() {
                let inner: i64 = a.values.iter().zip(&b.values).map(|(x, y)| x * y).sum();
                let expected = if i == j { n as i64 } else { 0 };
                if inner != expected {
                    return Err(Error::domain(format!(
                        "characters {} and {} are not orthonormal",
                        a.label, b.label
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inverse[g]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    /// `x⁻¹ y⁻¹ x y`
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        let xi_yi = self.mul(self.inverse(x), self.inverse(y));
        self.mul(self.mul(xi_yi, x), y)
    }

    pub fn dimension(&self, character: usize) -> i64 {
        self.characters[character].values[self.identity]
    }

    /// The symmetric group on three letters; elements are permutations of
    /// `{0, 1, 2}` in lexicographic order, composed right to left.
    pub fn symmetric3() -> Self {
        let perms: Vec<[usize; 3]> = vec![
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).expect("closed");
        let table = perms
            .iter()
            .map(|a| perms.iter().map(|b| index([a[b[0]], a[b[1]], a[b[2]]])).collect())
            .collect();
        let fixed = |p: &[usize; 3]| (0..3).filter(|&i| p[i] == i).count() as i64;
        let sign = |p: &[usize; 3]| {
            let inversions = (0..3)
                .flat_map(|i| (i + 1..3).map(move |j| (i, j)))
                .filter(|&(i, j)| p[i] > p[j])
                .count();
            if inversions % 2 == 0 { 1 } else { -1 }
        };
        let characters = vec![
            Character { label: "trivial".into(), values: vec![1; 6] },
            Character { label: "sign".into(), values: perms.iter().map(sign).collect() },
            Character {
                label: "standard".into(),
                values: perms.iter().map(|p| fixed(p) - 1).collect(),
            },
        ];
        let names = perms.iter().map(|p| format!("{}{}{}", p[0], p[1], p[2])).collect();
        FiniteGroup::new("S3", names, table, characters).expect("S3 tables are consistent")
    }

    /// The quaternion group `{±1, ±i, ±j, ±k}`.
    pub fn quaternion8() -> Self {
        // element 2u + b is (-1)^b times unit u, units ordered 1, i, j, k
        let unit_product = |a: usize, b: usize| -> (usize, bool) {
            match (a, b) {
                (0, u) | (u, 0) => (u, false),
                (x, y) if x == y => (0, true),
                (1, 2) => (3, false),
                (2, 1) => (3, true),
                (2, 3) => (1, false),
                (3, 2) => (1, true),
                (3, 1) => (2, false),
                (1, 3) => (2, true),
                _ => unreachable!(),
            }
        };
        let table = (0..8)
            .map(|a| {
                (0..8)
                    .map(|b| {
                        let (u, neg) = unit_product(a / 2, b / 2);
                        let sign = (a % 2) ^ (b % 2) ^ usize::from(neg);
                        2 * u + sign
                    })
                    .collect()
            })
            .collect();
        let one_dim = |keep: usize| -> Vec<i64> {
            (0..8)
                .map(|g| if g / 2 == 0 || g / 2 == keep { 1 } else { -1 })
                .collect()
        };
        let two_dim = (0..8)
            .map(|g| match g {
                0 => 2,
                1 => -2,
                _ => 0,
            })
            .collect();
        let characters = vec![
            Character { label: "trivial".into(), values: vec![1; 8] },
            Character { label: "i".into(), values: one_dim(1) },
            Character { label: "j".into(), values: one_dim(2) },
            Character { label: "k".into(), values: one_dim(3) },
            Character { label: "two-dimensional".into(), values: two_dim },
        ];
        let names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        FiniteGroup::new("Q8", names, table, characters).expect("Q8 tables are consistent")
    }

    pub fn builtin(name: &str) -> Result<Self> {
        match name.trim().to_ascii_lowercase().as_str() {
            "s3" => Ok(Self::symmetric3()),
            "q8" => Ok(Self::quaternion8()),
            other => Err(Error::Parse(format!("unknown finite group '{other}' (expected s3 or q8)"))),
        }
    }
}

/// Averages `χ([y_1,z_1]⋯[y_k,z_k])` over all `|G|^(2k)` tuples.
pub fn finite_commutator_average(group: &FiniteGroup, character: usize, k: usize) -> Result<ExactRational> {
    if k == 0 {
        return Err(Error::domain("k must be at least 1"));
    }
    let chi = group
        .characters
        .get(character)
        .ok_or_else(|| Error::domain(format!("{} has no character {character}", group.name)))?;
    let order = group.order() as u64;
    let tuples = u32::try_from(2 * k)
        .ok()
        .and_then(|e| order.checked_pow(e))
        .filter(|&t| t <= FINITE_GUARD)
        .ok_or_else(|| {
            Error::Refused(format!(
                "|{}|^{} tuples exceeds the brute-force guard of {FINITE_GUARD}",
                group.name,
                2 * k
            ))
        })?;

    // hits[g] = number of tuples whose commutator product is g
    fn walk(group: &FiniteGroup, prefix: usize, left: usize, hits: &mut [u64]) {
        if left == 0 {
            hits[prefix] += 1;
            return;
        }
        for y in 0..group.order() {
            for z in 0..group.order() {
                walk(group, group.mul(prefix, group.commutator(y, z)), left - 1, hits);
            }
        }
    }

    let mut hits = vec![0u64; group.order()];
    walk(group, group.identity(), k, &mut hits);
    let total: BigInt = hits
        .iter()
        .zip(&chi.values)
        .map(|(&h, &v)| BigInt::from(h) * v)
        .sum();
    ExactRational::new(total, tuples)
}
