//! Exact irreducible character tables of the symmetric group.
//!
//! Characters are computed with the Murnaghan–Nakayama rule, memoized on
//! (remaining shape, remaining cycle list). Border strips are manipulated
//! through first-column hook lengths (beta numbers): removing a strip of
//! length `r` replaces a beta number `b` with `b − r`, and the sign is
//! `(−1)^h` where `h` counts the beta numbers strictly between the two.
//!
//! The table is dense: rows are indexed by the representation label `λ`,
//! columns by the class label `μ`, both in canonical partition order.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Partition};

/// Largest `n` accepted by [`character_table`] unless overridden.
pub const DEFAULT_MAX_N: u32 = 14;

/// Dense exact character table of `S_n`.
#[derive(Clone)]
pub struct CharacterTable {
    n: u32,
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    /// `values[lambda_index][mu_index] = χ_λ(μ)`
    values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Partitions of `n` in canonical (reverse lexicographic) order.
    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn partition_index(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// `χ_λ(μ)` by table position.
    pub fn value_by_index(&self, lambda: usize, mu: usize) -> i64 {
        self.values[lambda][mu]
    }

    /// `χ_λ(μ)`, checking that both labels are partitions of `n`.
    pub fn value(&self, lambda: &Partition, mu: &Partition) -> Result<i64> {
        let li = self.index.get(lambda).ok_or(Error::WeightMismatch {
            expected: self.n,
            found: lambda.weight(),
        })?;
        let mi = self.index.get(mu).ok_or(Error::WeightMismatch {
            expected: self.n,
            found: mu.weight(),
        })?;
        Ok(self.values[*li][*mi])
    }

    /// `χ_λ(1^n)`, the irreducible dimension.
    pub fn dimension(&self, lambda: &Partition) -> Result<i64> {
        let identity = Partition::new(vec![1; self.n as usize])?;
        self.value(lambda, &identity)
    }

    /// Flips the sign of one entry. Verification-harness hook used to prove
    /// the cross-check suites actually detect a corrupted table.
    pub fn corrupt_entry(&mut self, lambda: &Partition, mu: &Partition) -> Result<()> {
        let li = *self.index.get(lambda).ok_or(Error::WeightMismatch {
            expected: self.n,
            found: lambda.weight(),
        })?;
        let mi = *self.index.get(mu).ok_or(Error::WeightMismatch {
            expected: self.n,
            found: mu.weight(),
        })?;
        let v = self.values[li][mi];
        self.values[li][mi] = if v == 0 { 1 } else { -v };
        Ok(())
    }
}

/// Builds the full character table of `S_n` (guarded by [`DEFAULT_MAX_N`]).
pub fn character_table(n: u32) -> Result<CharacterTable> {
    character_table_with_max(n, DEFAULT_MAX_N)
}

/// Builds the table with an explicit guard, for callers that widen the limit.
pub fn character_table_with_max(n: u32, max_n: u32) -> Result<CharacterTable> {
    if n == 0 || n > max_n {
        return Err(Error::GuardExceeded {
            what: "character table n",
            limit: max_n,
            requested: n,
        });
    }
    let partitions = enumerate_partitions(n);
    let index: HashMap<Partition, usize> = partitions
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect();
    let mut memo: HashMap<(Vec<u32>, Vec<u32>), i64> = HashMap::new();
    let mut values = Vec::with_capacity(partitions.len());
    for lambda in &partitions {
        let mut row = Vec::with_capacity(partitions.len());
        for mu in &partitions {
            row.push(chi(lambda.parts(), mu.parts(), &mut memo));
        }
        values.push(row);
    }
    Ok(CharacterTable {
        n,
        partitions,
        index,
        values,
    })
}

/// Murnaghan–Nakayama recursion over the parts of `mu`.
fn chi(lambda: &[u32], mu: &[u32], memo: &mut HashMap<(Vec<u32>, Vec<u32>), i64>) -> i64 {
    if mu.is_empty() {
        return if lambda.is_empty() { 1 } else { 0 };
    }
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let r = mu[0];
    let rest = &mu[1..];
    let len = lambda.len();
    // beta numbers: strictly decreasing, beta[i] = lambda[i] + (len - 1 - i)
    let beta: Vec<u32> = lambda
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (len - 1 - i) as u32)
        .collect();
    let mut total = 0i64;
    for (i, &b) in beta.iter().enumerate() {
        if b < r {
            continue;
        }
        let nb = b - r;
        if beta.contains(&nb) {
            continue;
        }
        let height = beta.iter().filter(|&&x| x > nb && x < b).count();
        let sign = if height % 2 == 0 { 1 } else { -1 };
        let mut new_beta = beta.clone();
        new_beta[i] = nb;
        new_beta.sort_unstable_by(|a, b| b.cmp(a));
        let mut new_lambda: Vec<u32> = new_beta
            .iter()
            .enumerate()
            .map(|(k, &x)| x - (len - 1 - k) as u32)
            .collect();
        while new_lambda.last() == Some(&0) {
            new_lambda.pop();
        }
        total += sign * chi(&new_lambda, rest, memo);
    }
    memo.insert(key, total);
    total
}
