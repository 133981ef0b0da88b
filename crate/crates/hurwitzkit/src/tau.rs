//! Truncated hypergeometric 2D Toda τ-function data at fixed sector weight.
//!
//! The τ-function is never materialized in its flow variables. Its
//! degree-by-degree content is carried by two finite objects:
//!
//! * the Schur-basis data: per `λ ⊢ n`, one truncated series per species,
//!   `r_0(N) · ∏_{cells} G(z·(N + j − i))`;
//! * the power-sum-basis data: a [`SeriesTable`] of multispecies weighted
//!   Hurwitz numbers indexed by multi-degree and the profile pair `(μ, ν)`.
//!
//! [`tau_eval_check`] evaluates both on concrete alphabets and returns the
//! pair; at `N = 0` the two rationals must be equal, and the test suites
//! assert exactly that.

use std::collections::BTreeMap;

use num::Zero;

use crate::character::{character_table, CharacterTable, DEFAULT_MAX_N};
use crate::error::{Error, Result};
use crate::hurwitz::{multispecies_weighted, MultiDegree};
use crate::partition::{enumerate_partitions, Partition};
use crate::rational::Rational;
use crate::series::SeriesPoly;
use crate::symfun::{power_sum_eval, schur_eval};
use crate::weights::{content_product_poly, r0_prefactor, WeightSpec};

/// Schur-basis coefficients: for each `λ ⊢ n`, one truncated series per
/// species (class I factors first, then class II), prefactor included.
pub struct SchurCoeffs {
    pub n: u32,
    pub shift: i64,
    pub entries: Vec<(Partition, Vec<SeriesPoly>)>,
}

/// Power-sum-basis coefficients keyed by (class I degrees, class II degrees,
/// μ, ν); the entries are multispecies weighted Hurwitz numbers.
pub struct SeriesTable {
    pub n: u32,
    pub bounds: MultiDegree,
    pub entries: BTreeMap<(Vec<u32>, Vec<u32>, Partition, Partition), Rational>,
}

impl SeriesTable {
    pub fn get(
        &self,
        deg_i: &[u32],
        deg_ii: &[u32],
        mu: &Partition,
        nu: &Partition,
    ) -> Option<&Rational> {
        self.entries
            .get(&(deg_i.to_vec(), deg_ii.to_vec(), mu.clone(), nu.clone()))
    }
}

fn check_sector(n: u32) -> Result<()> {
    if n == 0 || n > DEFAULT_MAX_N {
        return Err(Error::GuardExceeded {
            what: "tau sector weight n",
            limit: DEFAULT_MAX_N,
            requested: n,
        });
    }
    Ok(())
}

fn check_species(
    bounds: &MultiDegree,
    specs_i: &[WeightSpec],
    specs_ii: &[WeightSpec],
) -> Result<()> {
    if bounds.class_i.len() != specs_i.len() || bounds.class_ii.len() != specs_ii.len() {
        return Err(Error::DimensionMismatch(format!(
            "degree bounds ({}, {}) do not match spec lists ({}, {})",
            bounds.class_i.len(),
            bounds.class_ii.len(),
            specs_i.len(),
            specs_ii.len()
        )));
    }
    Ok(())
}

/// The rectangular multi-degree lattice below the bounds.
pub fn degree_lattice(bounds: &MultiDegree) -> Vec<MultiDegree> {
    let mut lattice = vec![MultiDegree::new(
        vec![0; bounds.class_i.len()],
        vec![0; bounds.class_ii.len()],
    )];
    let all_bounds: Vec<u32> = bounds
        .class_i
        .iter()
        .chain(bounds.class_ii.iter())
        .copied()
        .collect();
    for (axis, &bound) in all_bounds.iter().enumerate() {
        let mut next = Vec::with_capacity(lattice.len() * (bound as usize + 1));
        for point in &lattice {
            for v in 0..=bound {
                let mut q = point.clone();
                if axis < bounds.class_i.len() {
                    q.class_i[axis] = v;
                } else {
                    q.class_ii[axis - bounds.class_i.len()] = v;
                }
                next.push(q);
            }
        }
        lattice = next;
    }
    lattice
}

/// Per-`λ` Schur coefficients `r_0(N) · r_λ(N)` truncated per species.
pub fn tau_schur_coeffs(
    n: u32,
    specs_i: &[WeightSpec],
    specs_ii: &[WeightSpec],
    shift: i64,
    bounds: &MultiDegree,
) -> Result<SchurCoeffs> {
    check_sector(n)?;
    check_species(bounds, specs_i, specs_ii)?;
    let mut entries = Vec::new();
    for lambda in enumerate_partitions(n) {
        let mut per_species = Vec::new();
        let species = specs_i
            .iter()
            .zip(bounds.class_i.iter())
            .chain(specs_ii.iter().zip(bounds.class_ii.iter()));
        for (spec, &bound) in species {
            let prefactor = r0_prefactor(spec, shift, bound as usize)?;
            let product = content_product_poly(&lambda, spec, shift, bound as usize)?;
            per_species.push(prefactor.mul(&product));
        }
        entries.push((lambda, per_species));
    }
    Ok(SchurCoeffs { n, shift, entries })
}

/// The full power-sum table at `N = 0`: one multispecies weighted Hurwitz
/// number per lattice point and profile pair.
pub fn tau_power_sum_table(
    n: u32,
    specs_i: &[WeightSpec],
    specs_ii: &[WeightSpec],
    bounds: &MultiDegree,
) -> Result<SeriesTable> {
    check_sector(n)?;
    check_species(bounds, specs_i, specs_ii)?;
    let table = character_table(n)?;
    let mut entries = BTreeMap::new();
    for deg in degree_lattice(bounds) {
        for mu in table.partitions() {
            for nu in table.partitions() {
                let value = multispecies_weighted(&deg, mu, nu, specs_i, specs_ii, &table)?;
                entries.insert(
                    (
                        deg.class_i.clone(),
                        deg.class_ii.clone(),
                        mu.clone(),
                        nu.clone(),
                    ),
                    value,
                );
            }
        }
    }
    Ok(SeriesTable {
        n,
        bounds: bounds.clone(),
        entries,
    })
}

fn check_alphabet(name: &str, alphabet: &[Rational]) -> Result<()> {
    if alphabet.len() > 3 {
        return Err(Error::InvalidInput(format!(
            "{name} alphabet limited to 3 entries, got {}",
            alphabet.len()
        )));
    }
    Ok(())
}

/// Evaluates the sector-`n` truncation of the τ-series on concrete alphabets
/// through both bases and returns `(schur_route, power_sum_route)`; the two
/// must be equal, and callers compare.
pub fn tau_eval_check(
    n: u32,
    specs_i: &[WeightSpec],
    specs_ii: &[WeightSpec],
    bounds: &MultiDegree,
    t_alphabet: &[Rational],
    s_alphabet: &[Rational],
) -> Result<(Rational, Rational)> {
    check_sector(n)?;
    check_species(bounds, specs_i, specs_ii)?;
    check_alphabet("t", t_alphabet)?;
    check_alphabet("s", s_alphabet)?;
    let table = character_table(n)?;
    let schur = tau_schur_coeffs(n, specs_i, specs_ii, 0, bounds)?;
    let power = tau_power_sum_table(n, specs_i, specs_ii, bounds)?;
    let mut schur_total = Rational::zero();
    let mut power_total = Rational::zero();
    for deg in degree_lattice(bounds) {
        schur_total += schur_route_value(&schur, &deg, t_alphabet, s_alphabet, &table)?;
        power_total += power_route_value(&power, &deg, t_alphabet, s_alphabet)?;
    }
    Ok((schur_total, power_total))
}

/// One lattice point of the Schur route:
/// `Σ_λ ∏_species [coeff at its degree] · s_λ(t) s_λ(s)`.
pub fn schur_route_value(
    schur: &SchurCoeffs,
    deg: &MultiDegree,
    t_alphabet: &[Rational],
    s_alphabet: &[Rational],
    table: &CharacterTable,
) -> Result<Rational> {
    let mut acc = Rational::zero();
    for (lambda, series) in &schur.entries {
        let mut coeff = num::One::one();
        let degrees = deg.class_i.iter().chain(deg.class_ii.iter());
        for (s, &d) in series.iter().zip(degrees) {
            coeff *= s.coeff(d as usize).clone();
            if Rational::is_zero(&coeff) {
                break;
            }
        }
        if Rational::is_zero(&coeff) {
            continue;
        }
        acc +=
            coeff * schur_eval(lambda, t_alphabet, table)? * schur_eval(lambda, s_alphabet, table)?;
    }
    Ok(acc)
}

/// One lattice point of the power-sum route:
/// `Σ_{μ,ν} H^{deg}(μ,ν) p_μ(t) p_ν(s)`.
pub fn power_route_value(
    power: &SeriesTable,
    deg: &MultiDegree,
    t_alphabet: &[Rational],
    s_alphabet: &[Rational],
) -> Result<Rational> {
    let mut acc = Rational::zero();
    for mu in enumerate_partitions(power.n).iter() {
        for nu in enumerate_partitions(power.n).iter() {
            let value = power
                .get(&deg.class_i, &deg.class_ii, mu, nu)
                .ok_or_else(|| Error::InvalidInput("degree outside table bounds".into()))?;
            if value.is_zero() {
                continue;
            }
            acc += value.clone() * power_sum_eval(mu, t_alphabet) * power_sum_eval(nu, s_alphabet);
        }
    }
    Ok(acc)
}
