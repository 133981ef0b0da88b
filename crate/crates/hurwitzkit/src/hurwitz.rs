//! The Hurwitz-number engines.
//!
//! Three independent routes compute the same numbers:
//!
//! * [`frobenius_schur`] — the character sum
//!   `H(μ^{(1)},…,μ^{(k)}) = Σ_λ h_λ^{k−2} ∏ χ_λ(μ^{(i)})/z_{μ^{(i)}}`;
//! * [`brute_force_hurwitz`] — exhaustive counting of identity
//!   factorizations into class-constrained permutations;
//! * [`character_weighted`] — coefficient extraction from content products
//!   (the reference route for weighted sums), against
//!   [`geometric_weighted`] — the branch-configuration sum, and the Cayley
//!   path route in the `cayley` module.
//!
//! Weighted sums run over *unordered multisets* of nontrivial profiles; the
//! `1/|aut|` symmetry factor lives inside the configuration weight.

use num::{BigInt, One, Zero};

use crate::character::CharacterTable;
use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, partitions_with_colength, Partition};
use crate::perm::{class_elements, Perm};
use crate::rational::{big_factorial, rational_pow, Rational};
use crate::weights::{config_weight, content_product_poly, WeightSpec};

/// Brute-force enumeration guard: `n!` blows up past this.
pub const MAX_BRUTE_FORCE_N: u32 = 7;

/// Per-species degree bounds of a multispecies query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiDegree {
    pub class_i: Vec<u32>,
    pub class_ii: Vec<u32>,
}

impl MultiDegree {
    pub fn new(class_i: Vec<u32>, class_ii: Vec<u32>) -> Self {
        Self { class_i, class_ii }
    }

    pub fn total(&self) -> u32 {
        self.class_i.iter().sum::<u32>() + self.class_ii.iter().sum::<u32>()
    }
}

/// A multiset of nontrivial ramification profiles, all of the same weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchConfig {
    pub profiles: Vec<Partition>,
}

impl BranchConfig {
    pub fn total_colength(&self) -> u32 {
        self.profiles.iter().map(Partition::colength).sum()
    }
}

/// `H(μ^{(1)},…,μ^{(k)}) = Σ_{λ⊢n} h_λ^{k−2} ∏_i χ_λ(μ^{(i)})/z_{μ^{(i)}}`.
pub fn frobenius_schur(profiles: &[Partition], table: &CharacterTable) -> Result<Rational> {
    if profiles.is_empty() {
        return Err(Error::InvalidInput(
            "frobenius_schur needs at least one profile".into(),
        ));
    }
    let n = table.n();
    for p in profiles {
        if p.weight() != n {
            return Err(Error::WeightMismatch {
                expected: n,
                found: p.weight(),
            });
        }
    }
    let k = profiles.len() as i64;
    let mut acc = Rational::zero();
    for lambda in table.partitions() {
        let h = Rational::from_integer(lambda.hook_product());
        let mut term = rational_pow(&h, k - 2);
        for p in profiles {
            let chi = table.value(lambda, p)?;
            if chi == 0 {
                term = Rational::zero();
                break;
            }
            term *= Rational::new(BigInt::from(chi), p.z_order());
        }
        acc += term;
    }
    Ok(acc)
}

/// `(1/n!) · #{(g_1,…,g_k) : g_i ∈ cyc(μ^{(i)}), g_1⋯g_k = 1}` by exhaustive
/// enumeration. The last factor is forced as the inverse of the partial
/// product; branches whose parity cannot reach the identity are pruned.
pub fn brute_force_hurwitz(profiles: &[Partition], n: u32) -> Result<Rational> {
    if n == 0 || n > MAX_BRUTE_FORCE_N {
        return Err(Error::GuardExceeded {
            what: "brute force n",
            limit: MAX_BRUTE_FORCE_N,
            requested: n,
        });
    }
    if profiles.is_empty() {
        return Err(Error::InvalidInput(
            "brute_force_hurwitz needs at least one profile".into(),
        ));
    }
    for p in profiles {
        if p.weight() != n {
            return Err(Error::WeightMismatch {
                expected: n,
                found: p.weight(),
            });
        }
    }
    // total parity must be even, otherwise no factorization exists
    let total_colength: u32 = profiles.iter().map(Partition::colength).sum();
    if total_colength % 2 == 1 {
        return Ok(Rational::zero());
    }
    let classes: Vec<Vec<Perm>> = profiles
        .iter()
        .map(|p| class_elements(n as usize, p))
        .collect();
    // parity of the suffix product starting at position i
    let suffix_parity: Vec<u32> = {
        let mut acc = vec![0u32; profiles.len() + 1];
        for i in (0..profiles.len()).rev() {
            acc[i] = (acc[i + 1] + profiles[i].colength()) % 2;
        }
        acc
    };
    fn count(
        classes: &[Vec<Perm>],
        last: &Partition,
        suffix_parity: &[u32],
        position: usize,
        partial: &Perm,
    ) -> u64 {
        if position + 1 == classes.len() {
            // last factor forced: partial · g_k = 1
            let needed = partial.inverse();
            return u64::from(&needed.cycle_type() == last);
        }
        // remaining factors must supply exactly the parity of partial⁻¹
        if suffix_parity[position] != partial.cycle_type().colength() % 2 {
            return 0;
        }
        classes[position]
            .iter()
            .map(|g| {
                count(
                    classes,
                    last,
                    suffix_parity,
                    position + 1,
                    &partial.compose(g),
                )
            })
            .sum()
    }
    let last = profiles.last().unwrap();
    let total = count(
        &classes,
        last,
        &suffix_parity,
        0,
        &Perm::identity(n as usize),
    );
    Ok(Rational::new(
        BigInt::from(total),
        big_factorial(u64::from(n)),
    ))
}

/// Unordered multisets of nontrivial profiles of weight `n` with total
/// colength `d`, enumerated by colength pattern.
pub fn enumerate_branch_configs(n: u32, d: u32) -> Vec<BranchConfig> {
    let mut out = Vec::new();
    for pattern in enumerate_partitions(d) {
        // multiset choices per distinct colength value
        let mut per_value: Vec<Vec<Vec<Partition>>> = Vec::new();
        let mut feasible = true;
        for (colength, mult) in pattern.multiplicities() {
            let pool = partitions_with_colength(n, colength);
            if pool.is_empty() {
                feasible = false;
                break;
            }
            per_value.push(multichoose(&pool, mult as usize));
        }
        if !feasible {
            continue;
        }
        let mut stack: Vec<(usize, Vec<Partition>)> = vec![(0, Vec::new())];
        while let Some((level, chosen)) = stack.pop() {
            if level == per_value.len() {
                out.push(BranchConfig { profiles: chosen });
                continue;
            }
            for pick in &per_value[level] {
                let mut next = chosen.clone();
                next.extend(pick.iter().cloned());
                stack.push((level + 1, next));
            }
        }
    }
    out
}

/// Multisets of size `k` drawn from `pool` (combinations with repetition).
fn multichoose(pool: &[Partition], k: usize) -> Vec<Vec<Partition>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(
        pool: &[Partition],
        k: usize,
        from: usize,
        cur: &mut Vec<Partition>,
        out: &mut Vec<Vec<Partition>>,
    ) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in from..pool.len() {
            cur.push(pool[i].clone());
            rec(pool, k, i, cur, out);
            cur.pop();
        }
    }
    rec(pool, k, 0, &mut cur, &mut out);
    out
}

fn check_pair(mu: &Partition, nu: &Partition, table: &CharacterTable) -> Result<()> {
    for p in [mu, nu] {
        if p.weight() != table.n() {
            return Err(Error::WeightMismatch {
                expected: table.n(),
                found: p.weight(),
            });
        }
    }
    Ok(())
}

/// Geometric route: `H^d(μ,ν) = Σ' W(config) · H(config, μ, ν)` over
/// unordered branch configurations of total colength `d`.
pub fn geometric_weighted(
    d: u32,
    mu: &Partition,
    nu: &Partition,
    spec: &WeightSpec,
    table: &CharacterTable,
) -> Result<Rational> {
    check_pair(mu, nu, table)?;
    let mut acc = Rational::zero();
    for config in enumerate_branch_configs(table.n(), d) {
        let weight = config_weight(spec, &config.profiles)?;
        if weight.is_zero() {
            continue;
        }
        let mut profiles = config.profiles.clone();
        profiles.push(mu.clone());
        profiles.push(nu.clone());
        acc += weight * frobenius_schur(&profiles, table)?;
    }
    Ok(acc)
}

/// Character route (the reference implementation):
/// `H^d(μ,ν) = [z^d] Σ_λ r_λ(0)(z) χ_λ(μ) χ_λ(ν) / (z_μ z_ν)`.
pub fn character_weighted(
    d: u32,
    mu: &Partition,
    nu: &Partition,
    spec: &WeightSpec,
    table: &CharacterTable,
) -> Result<Rational> {
    check_pair(mu, nu, table)?;
    let mut acc = Rational::zero();
    for lambda in table.partitions() {
        let cm = table.value(lambda, mu)?;
        if cm == 0 {
            continue;
        }
        let cn = table.value(lambda, nu)?;
        if cn == 0 {
            continue;
        }
        let coeff = content_product_poly(lambda, spec, 0, d as usize)?
            .coeff(d as usize)
            .clone();
        acc += coeff * Rational::from_integer(BigInt::from(cm) * BigInt::from(cn));
    }
    Ok(acc / Rational::from_integer(mu.z_order() * nu.z_order()))
}

/// Multispecies weighted Hurwitz number by per-species coefficient
/// extraction:
/// `H^{(d,d̃)}(μ,ν) = Σ_λ ∏_α [w^{d_α}] r_λ^{G^α} ∏_β [z^{d̃_β}] r_λ^{G̃^β}
///  · χ_λ(μ) χ_λ(ν) / (z_μ z_ν)`.
pub fn multispecies_weighted(
    deg: &MultiDegree,
    mu: &Partition,
    nu: &Partition,
    specs_i: &[WeightSpec],
    specs_ii: &[WeightSpec],
    table: &CharacterTable,
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
    check_pair(mu, nu, table)?;
    let mut acc = Rational::zero();
    for lambda in table.partitions() {
        let cm = table.value(lambda, mu)?;
        if cm == 0 {
            continue;
        }
        let cn = table.value(lambda, nu)?;
        if cn == 0 {
            continue;
        }
        let mut coeff = Rational::one();
        let species = specs_i
            .iter()
            .zip(deg.class_i.iter())
            .chain(specs_ii.iter().zip(deg.class_ii.iter()));
        for (spec, &d) in species {
            coeff *= content_product_poly(lambda, spec, 0, d as usize)?
                .coeff(d as usize)
                .clone();
            if coeff.is_zero() {
                break;
            }
        }
        acc += coeff * Rational::from_integer(BigInt::from(cm) * BigInt::from(cn));
    }
    Ok(acc / Rational::from_integer(mu.z_order() * nu.z_order()))
}

/// Geometric (configuration-sum) route for multispecies queries: per-species
/// configuration enumeration with the product weight and a single Hurwitz
/// factor on the concatenated profiles. Quadratic in configuration counts;
/// intended as a desk-scale oracle for the coefficient-extraction route.
pub fn multispecies_geometric(
    deg: &MultiDegree,
    mu: &Partition,
    nu: &Partition,
    specs_i: &[WeightSpec],
    specs_ii: &[WeightSpec],
    table: &CharacterTable,
) -> Result<Rational> {
    if deg.class_i.len() != specs_i.len() || deg.class_ii.len() != specs_ii.len() {
        return Err(Error::DimensionMismatch(
            "degree lists do not match spec lists".into(),
        ));
    }
    check_pair(mu, nu, table)?;
    let n = table.n();
    let species: Vec<(&WeightSpec, u32)> = specs_i
        .iter()
        .zip(deg.class_i.iter().copied())
        .chain(specs_ii.iter().zip(deg.class_ii.iter().copied()))
        .collect();
    #[allow(clippy::too_many_arguments)]
    fn rec(
        species: &[(&WeightSpec, u32)],
        level: usize,
        n: u32,
        weight: Rational,
        profiles: &mut Vec<Partition>,
        mu: &Partition,
        nu: &Partition,
        table: &CharacterTable,
        acc: &mut Rational,
    ) -> Result<()> {
        if level == species.len() {
            let mut all = profiles.clone();
            all.push(mu.clone());
            all.push(nu.clone());
            *acc += weight * frobenius_schur(&all, table)?;
            return Ok(());
        }
        let (spec, d) = species[level];
        for config in enumerate_branch_configs(n, d) {
            let w = config_weight(spec, &config.profiles)?;
            if w.is_zero() {
                continue;
            }
            let len_before = profiles.len();
            profiles.extend(config.profiles.iter().cloned());
            rec(
                species,
                level + 1,
                n,
                weight.clone() * w,
                profiles,
                mu,
                nu,
                table,
                acc,
            )?;
            profiles.truncate(len_before);
        }
        Ok(())
    }
    let mut acc = Rational::zero();
    let mut profiles = Vec::new();
    rec(
        &species,
        0,
        n,
        Rational::one(),
        &mut profiles,
        mu,
        nu,
        table,
        &mut acc,
    )?;
    Ok(acc)
}

/// Total colength of a weighted query including the fixed pair `(μ, ν)`;
/// values with odd total are forced to vanish by the sign representation.
pub fn parity_obstructed(d: u32, mu: &Partition, nu: &Partition) -> bool {
    (d + mu.colength() + nu.colength()) % 2 == 1
}
