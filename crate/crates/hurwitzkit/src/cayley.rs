//! Transposition paths in the Cayley graph of `S_n`, their signatures, and
//! the combinatorial weighted Hurwitz numbers built from them.
//!
//! A `d`-step path acts on a start element `h` as the written product
//! `(a_1 b_1)(a_2 b_2)⋯(a_d b_d)·h` (rightmost factor applied first). Its
//! *signature* is the partition of `d` recording how often each second
//! element `b` repeats. A sequence is in *block order* when the `b_i` are
//! weakly increasing left to right, so equal second elements sit in
//! consecutive blocks and the blocks strictly increase; these block-ordered
//! sequences are exactly the terms in the expansion of the monomial symmetric
//! functions of the Jucys–Murphy elements, and they are what
//! [`PathCountTable`] counts.
//!
//! Counts are normalized over all start elements of the class: the stored
//! `m^λ_{μν}` is `|cyc(μ)|` times the count from one fixed representative,
//! which is what makes `F⁰(μ,ν) = δ_{μν}/z_μ` and the geometric/character
//! routes close exactly.

use std::collections::{BTreeMap, HashMap};

use num::{BigInt, One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::hurwitz::MultiDegree;
use crate::partition::{enumerate_partitions, Partition};
use crate::perm::{all_perms, all_transpositions, class_representative, Perm};
use crate::rational::{big_factorial, rational_pow, Rational};
use crate::symfun::{complete_eval, complete_geometric, elementary_eval, elementary_geometric};
use crate::weights::WeightSpec;

/// Enumeration guards: `(n(n−1)/2)^d` sequences per start class.
pub const MAX_PATH_N: u32 = 6;
pub const MAX_PATH_D: u32 = 5;

/// Signature of a transposition sequence: multiplicities of repeated second
/// elements, sorted decreasingly. Pairs must satisfy `a < b`.
pub fn signature_of(transpositions: &[(u8, u8)]) -> Result<Partition> {
    let mut counts: BTreeMap<u8, u32> = BTreeMap::new();
    for &(a, b) in transpositions {
        if a >= b {
            return Err(Error::InvalidInput(format!(
                "malformed transposition ({a},{b}): need a < b"
            )));
        }
        *counts.entry(b).or_insert(0) += 1;
    }
    Ok(Partition::from_unsorted(counts.into_values().collect()))
}

/// Block-ordered path counts `m^λ_{μν}` for all signatures `λ ⊢ d` and class
/// pairs of `S_n`.
#[derive(Clone)]
pub struct PathCountTable {
    n: u32,
    d: u32,
    classes: Vec<Partition>,
    signatures: Vec<Partition>,
    /// `counts[sig][mu][nu]`
    counts: Vec<Vec<Vec<u64>>>,
}

impl PathCountTable {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    /// Partitions of `n` (the class labels) in canonical order.
    pub fn classes(&self) -> &[Partition] {
        &self.classes
    }

    /// Partitions of `d` (the signatures) in canonical order.
    pub fn signatures(&self) -> &[Partition] {
        &self.signatures
    }

    pub fn count(&self, signature: &Partition, mu: &Partition, nu: &Partition) -> u64 {
        let si = self.signatures.iter().position(|s| s == signature);
        let mi = self.classes.iter().position(|c| c == mu);
        let ni = self.classes.iter().position(|c| c == nu);
        match (si, mi, ni) {
            (Some(s), Some(m), Some(n)) => self.counts[s][m][n],
            _ => 0,
        }
    }
}

fn check_path_guards(n: u32, d: u32) -> Result<()> {
    if n == 0 || n > MAX_PATH_N {
        return Err(Error::GuardExceeded {
            what: "path enumeration n",
            limit: MAX_PATH_N,
            requested: n,
        });
    }
    if d > MAX_PATH_D {
        return Err(Error::GuardExceeded {
            what: "path enumeration d",
            limit: MAX_PATH_D,
            requested: d,
        });
    }
    Ok(())
}

struct Enumerator {
    transpositions: Vec<(u8, u8)>,
    class_of: HashMap<Vec<u8>, usize>,
    sig_index: BTreeMap<Vec<u32>, usize>,
    n_classes: usize,
}

impl Enumerator {
    fn new(n: u32, d: u32) -> Self {
        let classes = enumerate_partitions(n);
        let class_index: HashMap<Partition, usize> = classes
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, c)| (c, i))
            .collect();
        let mut class_of = HashMap::new();
        for g in all_perms(n as usize) {
            let idx = class_index[&g.cycle_type()];
            class_of.insert(g.images().to_vec(), idx);
        }
        let sig_index: BTreeMap<Vec<u32>, usize> = enumerate_partitions(d)
            .iter()
            .enumerate()
            .map(|(i, s)| (s.parts().to_vec(), i))
            .collect();
        Enumerator {
            transpositions: all_transpositions(n as usize),
            class_of,
            sig_index,
            n_classes: classes.len(),
        }
    }

    fn signature_index(&self, bs: &[u8]) -> usize {
        let mut counts: BTreeMap<u8, u32> = BTreeMap::new();
        for &b in bs {
            *counts.entry(b).or_insert(0) += 1;
        }
        let mut parts: Vec<u32> = counts.into_values().collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        self.sig_index[&parts]
    }

    /// Runs the full `(n(n−1)/2)^d` enumeration from `start`, applying
    /// transpositions one at a time (application order is written order
    /// reversed). Bins every sequence into `free`, and the weakly-decreasing
    /// `b` ones (block order, read in application order) into `canonical`.
    fn enumerate(&self, start: &Perm, d: u32, free: &mut [Vec<u64>], canonical: &mut [Vec<u64>]) {
        let mut bs: Vec<u8> = Vec::with_capacity(d as usize);
        self.dfs(start.clone(), d, u8::MAX, true, &mut bs, free, canonical);
    }

    #[allow(clippy::too_many_arguments)]
    fn dfs(
        &self,
        g: Perm,
        remaining: u32,
        b_prev: u8,
        block_ordered: bool,
        bs: &mut Vec<u8>,
        free: &mut [Vec<u64>],
        canonical: &mut [Vec<u64>],
    ) {
        if remaining == 0 {
            let sig = self.signature_index(bs);
            let class = self.class_of[g.images()];
            free[sig][class] += 1;
            if block_ordered {
                canonical[sig][class] += 1;
            }
            return;
        }
        for &(a, b) in &self.transpositions {
            let next = g.left_mul_transposition(a, b);
            bs.push(b);
            self.dfs(
                next,
                remaining - 1,
                b,
                block_ordered && b <= b_prev,
                bs,
                free,
                canonical,
            );
            bs.pop();
        }
    }

    fn fresh_bins(&self, d: u32) -> Vec<Vec<u64>> {
        vec![vec![0u64; self.n_classes]; enumerate_partitions(d).len()]
    }
}

/// Builds the path-count table from explicit class representatives. Exposed
/// so the class-function property (independence of the representative) can
/// be verified directly.
pub fn path_counts_from_representatives(
    n: u32,
    d: u32,
    representatives: &[(Partition, Perm)],
) -> Result<PathCountTable> {
    check_path_guards(n, d)?;
    let classes = enumerate_partitions(n);
    let signatures = enumerate_partitions(d);
    let enumerator = Enumerator::new(n, d);
    let mut counts = vec![vec![vec![0u64; classes.len()]; classes.len()]; signatures.len()];
    for (mu, rep) in representatives {
        if rep.cycle_type() != *mu {
            return Err(Error::InvalidInput(format!(
                "representative has cycle type {}, expected {mu}",
                rep.cycle_type()
            )));
        }
        let mi = classes
            .iter()
            .position(|c| c == mu)
            .ok_or(Error::WeightMismatch {
                expected: n,
                found: mu.weight(),
            })?;
        let mut free = enumerator.fresh_bins(d);
        let mut canon = enumerator.fresh_bins(d);
        enumerator.enumerate(rep, d, &mut free, &mut canon);
        let class_size = mu.class_size().to_u64().expect("class size fits u64");
        for (s, row) in canon.iter().enumerate() {
            for (ni, &c) in row.iter().enumerate() {
                counts[s][mi][ni] = c * class_size;
            }
        }
    }
    Ok(PathCountTable {
        n,
        d,
        classes,
        signatures,
        counts,
    })
}

/// Exhaustive path counts from the standard representative of each class.
pub fn path_counts(n: u32, d: u32) -> Result<PathCountTable> {
    let reps: Vec<(Partition, Perm)> = enumerate_partitions(n)
        .into_iter()
        .map(|mu| {
            let rep = class_representative(&mu);
            (mu, rep)
        })
        .collect();
    path_counts_from_representatives(n, d, &reps)
}

/// Block-ordered counts `N_λ` and free-order counts `Ñ_λ` per class pair,
/// in the same normalization as [`path_counts`]. `N_λ` is enumerated
/// directly block by block (an independent route from the filtered full
/// enumeration), and the two satisfy `Ñ_λ = (|λ|!/∏ λ_i!) N_λ`.
pub struct MonotoneCounts {
    pub n: u32,
    pub d: u32,
    pub classes: Vec<Partition>,
    pub signatures: Vec<Partition>,
    /// block-ordered counts, `canonical[sig][mu][nu]`
    pub canonical: Vec<Vec<Vec<u64>>>,
    /// free-order counts, same indexing
    pub free: Vec<Vec<Vec<u64>>>,
}

pub fn monotone_counts(n: u32, d: u32) -> Result<MonotoneCounts> {
    check_path_guards(n, d)?;
    let classes = enumerate_partitions(n);
    let signatures = enumerate_partitions(d);
    let enumerator = Enumerator::new(n, d);
    let mut canonical = vec![vec![vec![0u64; classes.len()]; classes.len()]; signatures.len()];
    let mut free = vec![vec![vec![0u64; classes.len()]; classes.len()]; signatures.len()];
    for (mi, mu) in classes.iter().enumerate() {
        let rep = class_representative(mu);
        let class_size = mu.class_size().to_u64().expect("class size fits u64");
        // free counts from the full enumeration
        let mut free_bins = enumerator.fresh_bins(d);
        let mut scratch = enumerator.fresh_bins(d);
        enumerator.enumerate(&rep, d, &mut free_bins, &mut scratch);
        for (s, row) in free_bins.iter().enumerate() {
            for (ni, &c) in row.iter().enumerate() {
                free[s][mi][ni] = c * class_size;
            }
        }
        // block-ordered counts enumerated directly by block structure
        for (s, sig) in signatures.iter().enumerate() {
            let mut bins = vec![0u64; classes.len()];
            for arrangement in distinct_arrangements(sig) {
                assign_blocks(
                    &arrangement,
                    arrangement.len(),
                    n as u8,
                    &rep,
                    &enumerator,
                    &mut bins,
                );
            }
            for (ni, &c) in bins.iter().enumerate() {
                canonical[s][mi][ni] = c * class_size;
            }
        }
    }
    Ok(MonotoneCounts {
        n,
        d,
        classes,
        signatures,
        canonical,
        free,
    })
}

fn distinct_arrangements(sig: &Partition) -> Vec<Vec<u32>> {
    let mut counts: BTreeMap<u32, u32> = sig.multiplicities();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(sig.len());
    fn rec(
        counts: &mut BTreeMap<u32, u32>,
        cur: &mut Vec<u32>,
        len: usize,
        out: &mut Vec<Vec<u32>>,
    ) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        let keys: Vec<u32> = counts
            .iter()
            .filter(|&(_, &m)| m > 0)
            .map(|(&k, _)| k)
            .collect();
        for k in keys {
            *counts.get_mut(&k).unwrap() -= 1;
            cur.push(k);
            rec(counts, cur, len, out);
            cur.pop();
            *counts.get_mut(&k).unwrap() += 1;
        }
    }
    rec(&mut counts, &mut cur, sig.len(), &mut out);
    out
}

/// Assigns strictly increasing second elements to the blocks of
/// `arrangement` (written order; the last block acts first) and enumerates
/// every in-block ordered choice of first elements. `k` is the number of
/// blocks still to place, `ceiling` the exclusive bound on this block's
/// second element imposed by the block to its right.
fn assign_blocks(
    arrangement: &[u32],
    k: usize,
    ceiling: u8,
    acc: &Perm,
    enumerator: &Enumerator,
    bins: &mut [u64],
) {
    if k == 0 {
        bins[enumerator.class_of[acc.images()]] += 1;
        return;
    }
    let idx = k - 1;
    let size = arrangement[idx];
    // idx blocks remain to the left, each needing a distinct smaller b ≥ 1
    for b in (idx as u8 + 1)..ceiling {
        let mut stack = vec![(acc.clone(), 0u32)];
        while let Some((g, done)) = stack.pop() {
            if done == size {
                assign_blocks(arrangement, idx, b, &g, enumerator, bins);
                continue;
            }
            for a in 0..b {
                stack.push((g.left_mul_transposition(a, b), done + 1));
            }
        }
    }
}

/// Per-signature weight of a path under the given spec.
fn signature_weight(spec: &WeightSpec, sig: &Partition) -> Result<Rational> {
    match spec {
        WeightSpec::ClassI { params } => Ok(elementary_eval(sig, params)),
        WeightSpec::ClassII { params } => Ok(complete_eval(sig, params)),
        WeightSpec::QuantumE { q, .. } => {
            let mut acc = Rational::one();
            for &part in sig.parts() {
                acc *= elementary_geometric(part, q)?;
            }
            Ok(acc)
        }
        WeightSpec::QuantumEPrime { q, .. } => {
            let mut acc = rational_pow(q, i64::from(sig.weight()));
            for &part in sig.parts() {
                acc *= elementary_geometric(part, q)?;
            }
            Ok(acc)
        }
        WeightSpec::QuantumH { q, .. } => {
            let mut acc = Rational::one();
            for &part in sig.parts() {
                acc *= complete_geometric(part, q)?;
            }
            Ok(acc)
        }
        WeightSpec::QuantumQ { .. } => Err(Error::InvalidInput(
            "hybrid Q weights have no single-signature form; handled by degree splitting".into(),
        )),
    }
}

/// Combinatorial weighted Hurwitz number
/// `F^d(μ, ν) = (1/n!) Σ_{λ⊢d} w_λ m^λ_{μν}`.
///
/// Class I weighs a signature by `e_λ`, class II by `h_λ`; the quantum kinds
/// use the per-part closed forms `E_λ(q)`, `E′_λ(q)`, `H_λ(q)`. The hybrid
/// `Q(q,p)` factors as `E(q)·H(p)` and is evaluated by splitting the degree
/// across the two factors.
pub fn combinatorial_f(
    d: u32,
    mu: &Partition,
    nu: &Partition,
    spec: &WeightSpec,
    table: &PathCountTable,
) -> Result<Rational> {
    let n = table.n();
    if mu.weight() != n {
        return Err(Error::WeightMismatch {
            expected: n,
            found: mu.weight(),
        });
    }
    if nu.weight() != n {
        return Err(Error::WeightMismatch {
            expected: n,
            found: nu.weight(),
        });
    }
    if d != table.d() {
        return Err(Error::DimensionMismatch(format!(
            "table holds degree {}, requested {d}",
            table.d()
        )));
    }
    if let WeightSpec::QuantumQ { q, p, .. } = spec {
        let e_spec = WeightSpec::QuantumE {
            q: q.clone(),
            truncation: None,
        };
        let h_spec = WeightSpec::QuantumH {
            q: p.clone(),
            truncation: None,
        };
        let classes = table.classes().to_vec();
        let mi = classes.iter().position(|c| c == mu).unwrap();
        let ni = classes.iter().position(|c| c == nu).unwrap();
        let mut acc = Rational::zero();
        for d1 in 0..=d {
            let left = f_matrix(n, d1, &e_spec)?;
            let right = f_matrix(n, d - d1, &h_spec)?;
            let product = compose_f_matrices(&left, &right, &classes);
            acc += product[mi][ni].clone();
        }
        return Ok(acc);
    }
    let n_factorial = Rational::from_integer(big_factorial(u64::from(n)));
    let mut acc = Rational::zero();
    for sig in table.signatures() {
        let count = table.count(sig, mu, nu);
        if count == 0 {
            continue;
        }
        acc += signature_weight(spec, sig)? * Rational::from_integer(BigInt::from(count));
    }
    Ok(acc / n_factorial)
}

/// The `D_n × D_n` matrix of `F^d(μ, ν)` over the canonical class order.
pub fn f_matrix(n: u32, d: u32, spec: &WeightSpec) -> Result<Vec<Vec<Rational>>> {
    let table = path_counts(n, d)?;
    let classes = table.classes().to_vec();
    let mut out = vec![vec![Rational::zero(); classes.len()]; classes.len()];
    for (mi, mu) in classes.iter().enumerate() {
        for (ni, nu) in classes.iter().enumerate() {
            out[mi][ni] = combinatorial_f(d, mu, nu, spec, &table)?;
        }
    }
    Ok(out)
}

/// Operator composition of two F-matrices in the class-sum basis:
/// `(F₁ ∘ F₂)(μ, ρ) = Σ_ν F₁(μ, ν) · z_ν · F₂(ν, ρ)`.
pub fn compose_f_matrices(
    left: &[Vec<Rational>],
    right: &[Vec<Rational>],
    classes: &[Partition],
) -> Vec<Vec<Rational>> {
    let k = classes.len();
    let z: Vec<Rational> = classes
        .iter()
        .map(|c| Rational::from_integer(c.z_order()))
        .collect();
    let mut out = vec![vec![Rational::zero(); k]; k];
    for i in 0..k {
        for (j, zj) in z.iter().enumerate() {
            if left[i][j].is_zero() {
                continue;
            }
            let lz = &left[i][j] * zj;
            for l in 0..k {
                if right[j][l].is_zero() {
                    continue;
                }
                out[i][l] += &lz * &right[j][l];
            }
        }
    }
    out
}

/// Multispecies combinatorial weighted Hurwitz number: the `(μ, ν)` entry of
/// the composed single-species F-matrices (class I factors, then class II;
/// the factors commute).
pub fn multispecies_f(
    deg: &MultiDegree,
    mu: &Partition,
    nu: &Partition,
    specs_i: &[WeightSpec],
    specs_ii: &[WeightSpec],
    n: u32,
) -> Result<Rational> {
    if deg.class_i.len() != specs_i.len() || deg.class_ii.len() != specs_ii.len() {
        return Err(Error::DimensionMismatch(format!(
            "degree lists ({}, {}) do not match spec lists ({}, {})",
            deg.class_i.len(),
            deg.class_ii.len(),
            specs_i.len(),
            specs_ii.len()
        )));
    }
    let classes = enumerate_partitions(n);
    let mi = classes
        .iter()
        .position(|c| c == mu)
        .ok_or(Error::WeightMismatch {
            expected: n,
            found: mu.weight(),
        })?;
    let ni = classes
        .iter()
        .position(|c| c == nu)
        .ok_or(Error::WeightMismatch {
            expected: n,
            found: nu.weight(),
        })?;
    // start from the identity operator, i.e. F = diag(1/z_μ)
    let mut acc: Vec<Vec<Rational>> = classes
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let mut row = vec![Rational::zero(); classes.len()];
            row[i] = Rational::from_integer(c.z_order()).recip();
            row
        })
        .collect();
    let factors = specs_i
        .iter()
        .zip(deg.class_i.iter())
        .chain(specs_ii.iter().zip(deg.class_ii.iter()));
    for (spec, &d) in factors {
        let m = f_matrix(n, d, spec)?;
        acc = compose_f_matrices(&acc, &m, &classes);
    }
    Ok(acc[mi][ni].clone())
}

/// Per-species signatures of a path split into class I and class II
/// subsequences.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multisignature {
    pub class_i: Vec<Partition>,
    pub class_ii: Vec<Partition>,
}

/// Applies [`signature_of`] to each per-species subsequence.
pub fn multisignature_of(
    class_i_segments: &[Vec<(u8, u8)>],
    class_ii_segments: &[Vec<(u8, u8)>],
) -> Result<Multisignature> {
    Ok(Multisignature {
        class_i: class_i_segments
            .iter()
            .map(|s| signature_of(s))
            .collect::<Result<_>>()?,
        class_ii: class_ii_segments
            .iter()
            .map(|s| signature_of(s))
            .collect::<Result<_>>()?,
    })
}

pub mod group_algebra {
    //! Dense exact group algebra of `S_n` at desk scale, used to check the
    //! Jucys–Murphy identities `e_j(J) = Σ_{ℓ*(μ)=j} C_μ` and the transition
    //! coefficients of `m_λ(J)` on class sums.

    use super::*;

    pub struct GroupAlgebra {
        n: usize,
        perms: Vec<Perm>,
        index: HashMap<Vec<u8>, usize>,
    }

    /// Coefficient vectors over the group basis, integer coefficients.
    pub type Element = Vec<i64>;

    impl GroupAlgebra {
        pub fn new(n: u32) -> Result<Self> {
            if n == 0 || n > 5 {
                return Err(Error::GuardExceeded {
                    what: "group algebra n",
                    limit: 5,
                    requested: n,
                });
            }
            let perms = all_perms(n as usize);
            let index = perms
                .iter()
                .enumerate()
                .map(|(i, g)| (g.images().to_vec(), i))
                .collect();
            Ok(Self {
                n: n as usize,
                perms,
                index,
            })
        }

        pub fn order(&self) -> usize {
            self.perms.len()
        }

        pub fn zero(&self) -> Element {
            vec![0; self.perms.len()]
        }

        pub fn unit(&self) -> Element {
            let mut e = self.zero();
            e[self.index[&Perm::identity(self.n).images().to_vec()]] = 1;
            e
        }

        pub fn multiply(&self, a: &Element, b: &Element) -> Element {
            let mut out = self.zero();
            for (i, &ai) in a.iter().enumerate() {
                if ai == 0 {
                    continue;
                }
                for (j, &bj) in b.iter().enumerate() {
                    if bj == 0 {
                        continue;
                    }
                    let g = self.perms[i].compose(&self.perms[j]);
                    out[self.index[&g.images().to_vec()]] += ai * bj;
                }
            }
            out
        }

        pub fn add_assign(&self, a: &mut Element, b: &Element) {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
        }

        /// `J_b = Σ_{a<b} (a b)` (1-based `b`; `J_1 = 0`).
        pub fn jucys_murphy(&self, b: usize) -> Element {
            let mut e = self.zero();
            for a in 1..b {
                let t = Perm::transposition((a - 1) as u8, (b - 1) as u8, self.n);
                e[self.index[&t.images().to_vec()]] += 1;
            }
            e
        }

        /// `C_μ = Σ_{h ∈ cyc(μ)} h`.
        pub fn class_sum(&self, mu: &Partition) -> Element {
            let mut e = self.zero();
            for (i, g) in self.perms.iter().enumerate() {
                if &g.cycle_type() == mu {
                    e[i] += 1;
                }
            }
            e
        }

        /// `e_j(J_1, …, J_n)` via the standard elementary-symmetric recursion.
        pub fn elementary_jm(&self, j: usize) -> Element {
            let mut acc: Vec<Element> = (0..=j)
                .map(|k| if k == 0 { self.unit() } else { self.zero() })
                .collect();
            for b in 1..=self.n {
                let jb = self.jucys_murphy(b);
                for k in (1..=j).rev() {
                    let add = self.multiply(&acc[k - 1], &jb);
                    let target = &mut acc[k];
                    for (x, y) in target.iter_mut().zip(&add) {
                        *x += y;
                    }
                }
            }
            acc.swap_remove(j)
        }

        /// `m_λ(J_1, …, J_n)`: one product per distinct assignment of the
        /// parts of `λ` to distinct Jucys–Murphy elements.
        pub fn monomial_jm(&self, lambda: &Partition) -> Element {
            let k = lambda.len();
            let mut total = self.zero();
            if k == 0 {
                return self.unit();
            }
            let mut chosen: Vec<usize> = Vec::with_capacity(k);
            let arrangements = super::distinct_arrangements(lambda);
            // strictly increasing variable subsets of size k
            fn subsets(
                n: usize,
                k: usize,
                from: usize,
                cur: &mut Vec<usize>,
                out: &mut Vec<Vec<usize>>,
            ) {
                if cur.len() == k {
                    out.push(cur.clone());
                    return;
                }
                for b in from..=n {
                    cur.push(b);
                    subsets(n, k, b + 1, cur, out);
                    cur.pop();
                }
            }
            let mut all_subsets = Vec::new();
            subsets(self.n, k, 1, &mut chosen, &mut all_subsets);
            for subset in &all_subsets {
                for arrangement in &arrangements {
                    let mut prod = self.unit();
                    for (pos, &b) in subset.iter().enumerate() {
                        let jb = self.jucys_murphy(b);
                        for _ in 0..arrangement[pos] {
                            prod = self.multiply(&prod, &jb);
                        }
                    }
                    self.add_assign(&mut total, &prod);
                }
            }
            total
        }

        /// Reads off the coefficient of `C_ν` from an element known to lie in
        /// the span of the class sums; errors if it is not constant on the
        /// class.
        pub fn coefficient_on_class(&self, element: &Element, nu: &Partition) -> Result<i64> {
            let mut value: Option<i64> = None;
            for (i, g) in self.perms.iter().enumerate() {
                if &g.cycle_type() == nu {
                    match value {
                        None => value = Some(element[i]),
                        Some(v) if v == element[i] => {}
                        Some(v) => {
                            return Err(Error::InvalidInput(format!(
                                "element is not a class function on {nu}: {v} vs {}",
                                element[i]
                            )))
                        }
                    }
                }
            }
            value.ok_or_else(|| Error::InvalidInput(format!("empty class {nu}")))
        }
    }
}
