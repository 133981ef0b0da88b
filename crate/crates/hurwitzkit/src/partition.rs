//! Integer partitions and the numeric invariants built on them.
//!
//! A [`Partition`] is a weakly decreasing sequence of positive integers. It
//! doubles as a ramification profile (cycle type) and as a Young diagram, and
//! carries the quantities every other module consumes: weight, length,
//! colength, conjugation-stabilizer order `z_mu`, automorphism order,
//! hook-length product and cell contents.
//!
//! Partitions of a given weight are enumerated in reverse lexicographic
//! order, e.g. for 4: `(4), (3,1), (2,2), (2,1,1), (1,1,1,1)`. That order is
//! the canonical order used for every table and every piece of CLI output.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, One};

use crate::error::{Error, Result};
use crate::rational::big_factorial;

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, rejecting parts that are zero or out of order.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::InvalidPartition(format!("{parts:?}")));
            }
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?}")));
        }
        Ok(Self { parts })
    }

    /// Builds a partition from parts in any order, dropping zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    /// The empty partition (the unique partition of 0).
    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// `|λ|`, the sum of the parts.
    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// `ℓ(λ)`, the number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Colength `ℓ*(λ) = |λ| − ℓ(λ)`, the branching degeneracy of the profile.
    pub fn colength(&self) -> u32 {
        self.weight() - self.len() as u32
    }

    /// Multiplicities `m_i(λ)` keyed by part size.
    pub fn multiplicities(&self) -> BTreeMap<u32, u32> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// `z_λ = Π i^{m_i} m_i!`, the order of the conjugation stabilizer of any
    /// permutation with this cycle type.
    pub fn z_order(&self) -> BigInt {
        let mut acc = BigInt::one();
        for (i, m) in self.multiplicities() {
            acc *= BigInt::from(i).pow(m);
            acc *= big_factorial(u64::from(m));
        }
        acc
    }

    /// `|aut(λ)| = Π m_i(λ)!`.
    pub fn aut_order(&self) -> BigInt {
        let mut acc = BigInt::one();
        for (_, m) in self.multiplicities() {
            acc *= big_factorial(u64::from(m));
        }
        acc
    }

    /// The conjugate (transposed) diagram.
    fn conjugate_parts(&self) -> Vec<u32> {
        let cols = self.parts.first().copied().unwrap_or(0) as usize;
        let mut conj = vec![0u32; cols];
        for &p in &self.parts {
            for c in conj.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        conj
    }

    /// Product of the hook lengths over all cells of the diagram; equals
    /// `n!/dim(λ)` for the irreducible dimension. Empty partition gives 1.
    pub fn hook_product(&self) -> BigInt {
        let conj = self.conjugate_parts();
        let mut acc = BigInt::one();
        for (i, &row) in self.parts.iter().enumerate() {
            for (j, &col) in conj.iter().enumerate().take(row as usize) {
                let arm = row as u64 - (j as u64 + 1);
                let leg = u64::from(col) - (i as u64 + 1);
                acc *= BigInt::from(arm + leg + 1);
            }
        }
        acc
    }

    /// Irreducible dimension `n!/h_λ` (exact; the division has no remainder).
    pub fn dimension(&self) -> BigInt {
        big_factorial(u64::from(self.weight())) / self.hook_product()
    }

    /// Contents `j − i` of the cells `(i, j)` (1-indexed), row-major.
    pub fn contents(&self) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.weight() as usize);
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..i64::from(row) {
                out.push(j - i as i64);
            }
        }
        out
    }

    /// Class size `n!/z_λ` of the conjugacy class with this cycle type.
    pub fn class_size(&self) -> BigInt {
        big_factorial(u64::from(self.weight())) / self.z_order()
    }

    /// Parses a literal like `"[3,1,1]"`; `"[]"` is the empty partition.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::InvalidPartition(s.to_string()))?;
        let inner = inner.trim();
        if inner.is_empty() {
            return Ok(Self::empty());
        }
        let mut parts = Vec::new();
        for piece in inner.split(',') {
            let p: u32 = piece
                .trim()
                .parse()
                .map_err(|_| Error::InvalidPartition(s.to_string()))?;
            parts.push(p);
        }
        Self::new(parts).map_err(|_| Error::InvalidPartition(s.to_string()))
    }

    /// Canonical literal, e.g. `[3,1,1]` or `[]`.
    pub fn literal(&self) -> String {
        let body: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        format!("[{}]", body.join(","))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.literal())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.literal())
    }
}

/// Reverse lexicographic order within a weight, weights ascending across.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight().cmp(&other.weight()).then_with(|| {
            for (a, b) in self.parts.iter().zip(other.parts.iter()) {
                match b.cmp(a) {
                    Ordering::Equal => continue,
                    ord => return ord,
                }
            }
            self.parts.len().cmp(&other.parts.len())
        })
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All partitions of `n` in reverse lexicographic order. `p(0) = 1` (the
/// empty partition).
pub fn enumerate_partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        let hi = remaining.min(max_part);
        for p in (1..=hi).rev() {
            current.push(p);
            rec(remaining - p, p, current, out);
            current.pop();
        }
    }
    rec(n, n.max(1), &mut current, &mut out);
    out
}

/// Partitions of `n` with the given colength (equivalently, of length
/// `n − colength`).
pub fn partitions_with_colength(n: u32, colength: u32) -> Vec<Partition> {
    enumerate_partitions(n)
        .into_iter()
        .filter(|p| p.colength() == colength)
        .collect()
}

/// Euler characteristic `2n − Σ ℓ*(μ^{(i)})` of a branched cover with the
/// given profiles, all partitions of the same `n ≥ 1`.
pub fn euler_characteristic(profiles: &[Partition]) -> Result<i64> {
    let first = profiles.first().ok_or_else(|| {
        Error::InvalidInput("euler characteristic needs at least one profile".into())
    })?;
    let n = first.weight();
    if n == 0 {
        return Err(Error::InvalidInput(
            "euler characteristic needs profiles of positive weight".into(),
        ));
    }
    let mut colength_sum: i64 = 0;
    for p in profiles {
        if p.weight() != n {
            return Err(Error::WeightMismatch {
                expected: n,
                found: p.weight(),
            });
        }
        colength_sum += i64::from(p.colength());
    }
    Ok(2 * i64::from(n) - colength_sum)
}
