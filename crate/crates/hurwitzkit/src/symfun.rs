//! Exact evaluation of symmetric functions on finite rational alphabets and
//! on the infinite geometric alphabet `(1, q, q², …)`.
//!
//! Four families drive the weight formulas: elementary `e_λ`, complete `h_λ`,
//! monomial `m_λ` and forgotten `f_λ`, all evaluated directly from their
//! defining summations. Power sums and Schur functions (via the Frobenius
//! character formula) support the τ-series checks.
//!
//! The geometric evaluations return the exact rational-function values of the
//! infinite specialization, e.g. `e_k(1,q,q²,…) = q^{k(k−1)/2} / ∏_{j≤k}(1−q^j)`;
//! these are the coefficients of the quantum weight generating functions.

use std::collections::BTreeMap;

use num::{BigInt, One, Zero};

use crate::character::CharacterTable;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rational::{big_binomial, big_factorial, rational_pow, Rational};

/// A finite list of exact rational parameters `(c_1, …, c_M)`.
pub type ParamVector = Vec<Rational>;

/// `e_k(c)`: sum over strictly increasing k-subsets. `e_0 = 1`, zero when
/// `k` exceeds the alphabet size.
pub fn elementary(k: usize, c: &[Rational]) -> Rational {
    // coefficients of ∏ (1 + c_i t) up to degree k
    let mut coeffs = vec![Rational::zero(); k + 1];
    coeffs[0] = Rational::one();
    for ci in c {
        for j in (1..=k).rev() {
            let add = &coeffs[j - 1] * ci;
            coeffs[j] += add;
        }
    }
    coeffs[k].clone()
}

/// `h_k(c)`: sum over weakly increasing k-tuples. `h_0 = 1`.
pub fn complete(k: usize, c: &[Rational]) -> Rational {
    // coefficients of ∏ (1 - c_i t)^{-1} up to degree k
    let mut coeffs = vec![Rational::zero(); k + 1];
    coeffs[0] = Rational::one();
    for ci in c {
        for j in 1..=k {
            let add = &coeffs[j - 1] * ci;
            coeffs[j] += add;
        }
    }
    coeffs[k].clone()
}

/// `e_λ(c) = ∏_i e_{λ_i}(c)`.
pub fn elementary_eval(lambda: &Partition, c: &[Rational]) -> Rational {
    lambda
        .parts()
        .iter()
        .map(|&p| elementary(p as usize, c))
        .product()
}

/// `h_λ(c) = ∏_i h_{λ_i}(c)`.
pub fn complete_eval(lambda: &Partition, c: &[Rational]) -> Rational {
    lambda
        .parts()
        .iter()
        .map(|&p| complete(p as usize, c))
        .product()
}

/// `p_μ(x) = ∏_i (Σ_a x_a^{μ_i})`.
pub fn power_sum_eval(mu: &Partition, x: &[Rational]) -> Rational {
    mu.parts()
        .iter()
        .map(|&p| {
            x.iter()
                .map(|xa| rational_pow(xa, i64::from(p)))
                .sum::<Rational>()
        })
        .product()
}

/// `m_λ(c)`: one term per distinct exponent vector obtained by distributing
/// the parts of `λ` over distinct variables. Zero when `ℓ(λ)` exceeds the
/// alphabet size.
pub fn monomial_eval(lambda: &Partition, c: &[Rational]) -> Rational {
    if lambda.is_empty() {
        return Rational::one();
    }
    let mults: Vec<(u32, u32)> = lambda.multiplicities().into_iter().collect();
    let radices: Vec<u32> = mults.iter().map(|&(_, m)| m + 1).collect();
    let states: usize = radices.iter().map(|&r| r as usize).product();
    let mut dp = vec![Rational::zero(); states];
    dp[0] = Rational::one();
    for ci in c {
        // each variable takes at most one part; iterate states downward so a
        // variable is not used twice
        let mut next = dp.clone();
        for (s, value) in dp.iter().enumerate() {
            if value.is_zero() {
                continue;
            }
            let mut digits = decode(s, &radices);
            for (k, &(part, mult)) in mults.iter().enumerate() {
                if digits[k] < mult {
                    digits[k] += 1;
                    let t = encode(&digits, &radices);
                    let add = value * rational_pow(ci, i64::from(part));
                    next[t] += add;
                    digits[k] -= 1;
                }
            }
        }
        dp = next;
    }
    dp[states - 1].clone()
}

/// `f_λ(c)`: the forgotten symmetric function, per the defining display
/// `((−1)^{ℓ*(λ)}/|aut(λ)|) Σ_{σ∈S_k} Σ_{i_1≤…≤i_k} ∏_a c_{i_σ(a)}^{λ_a}`.
///
/// Does not vanish when `ℓ(λ)` exceeds the alphabet size (indices repeat).
pub fn forgotten_eval(lambda: &Partition, c: &[Rational]) -> Rational {
    if lambda.is_empty() {
        return Rational::one();
    }
    // Regrouped by which exponent slots each variable receives: the inner sum
    // equals Σ over functions g: slots → variables of ∏_v |g⁻¹(v)|! c_v^{Σ exps}.
    let mults: Vec<(u32, u32)> = lambda.multiplicities().into_iter().collect();
    let radices: Vec<u32> = mults.iter().map(|&(_, m)| m + 1).collect();
    let states: usize = radices.iter().map(|&r| r as usize).product();
    let mut dp = vec![Rational::zero(); states];
    dp[0] = Rational::one();
    for ci in c {
        let mut next = vec![Rational::zero(); states];
        for (s, value) in dp.iter().enumerate() {
            if value.is_zero() {
                continue;
            }
            let digits = decode(s, &radices);
            // all ways to hand this variable t_k slots of each part size
            let mut choice = vec![0u32; mults.len()];
            loop {
                let taken: u32 = choice.iter().sum();
                let mut factor = Rational::from_integer(big_factorial(u64::from(taken)));
                let mut exponent = 0i64;
                for (k, &(part, mult)) in mults.iter().enumerate() {
                    let remaining = mult - digits[k];
                    factor *= Rational::from_integer(big_binomial(
                        u64::from(remaining),
                        u64::from(choice[k]),
                    ));
                    exponent += i64::from(part) * i64::from(choice[k]);
                }
                if !factor.is_zero() {
                    let mut digits2 = digits.clone();
                    for (k, &ck) in choice.iter().enumerate() {
                        digits2[k] += ck;
                    }
                    let t = encode(&digits2, &radices);
                    let add = value * factor * rational_pow(ci, exponent);
                    next[t] += add;
                }
                // next choice vector, bounded by remaining slots
                let mut k = 0;
                loop {
                    if k == mults.len() {
                        break;
                    }
                    choice[k] += 1;
                    if digits[k] + choice[k] <= mults[k].1 {
                        break;
                    }
                    choice[k] = 0;
                    k += 1;
                }
                if k == mults.len() {
                    break;
                }
            }
        }
        dp = next;
    }
    let total = dp[states - 1].clone();
    let sign = if lambda.colength().is_multiple_of(2) {
        1
    } else {
        -1
    };
    total * Rational::from_integer(BigInt::from(sign)) / Rational::from_integer(lambda.aut_order())
}

/// `s_λ(x) = Σ_{μ⊢n} χ_λ(μ) p_μ(x) / z_μ` (Frobenius character formula).
pub fn schur_eval(lambda: &Partition, x: &[Rational], table: &CharacterTable) -> Result<Rational> {
    if lambda.weight() != table.n() {
        return Err(Error::WeightMismatch {
            expected: table.n(),
            found: lambda.weight(),
        });
    }
    let mut acc = Rational::zero();
    for mu in table.partitions() {
        let chi = table.value(lambda, mu)?;
        if chi == 0 {
            continue;
        }
        acc += Rational::from_integer(BigInt::from(chi)) * power_sum_eval(mu, x)
            / Rational::from_integer(mu.z_order());
    }
    Ok(acc)
}

fn decode(mut s: usize, radices: &[u32]) -> Vec<u32> {
    let mut digits = vec![0u32; radices.len()];
    for (k, &r) in radices.iter().enumerate() {
        digits[k] = (s % r as usize) as u32;
        s /= r as usize;
    }
    digits
}

fn encode(digits: &[u32], radices: &[u32]) -> usize {
    let mut s = 0usize;
    for k in (0..radices.len()).rev() {
        s = s * radices[k] as usize + digits[k] as usize;
    }
    s
}

// ---------------------------------------------------------------------------
// Infinite geometric alphabet (1, q, q², …), exact closed forms
// ---------------------------------------------------------------------------

/// Errors unless `q^j ≠ 1` for all `1 ≤ j ≤ max_power`.
pub fn check_geometric_parameter(q: &Rational, max_power: u32) -> Result<()> {
    let one = Rational::one();
    let mut acc = Rational::one();
    for j in 1..=max_power {
        acc *= q;
        if acc == one {
            return Err(Error::VanishingDenominator { power: j });
        }
    }
    Ok(())
}

/// `(q; q)_k = ∏_{j=1}^k (1 − q^j)`.
fn q_pochhammer(q: &Rational, k: u32) -> Result<Rational> {
    check_geometric_parameter(q, k)?;
    let mut acc = Rational::one();
    let mut qj = Rational::one();
    for _ in 1..=k {
        qj *= q;
        acc *= Rational::one() - &qj;
    }
    Ok(acc)
}

/// `e_k(1, q, q², …) = q^{k(k−1)/2} / (q; q)_k`.
pub fn elementary_geometric(k: u32, q: &Rational) -> Result<Rational> {
    let num = rational_pow(q, i64::from(k) * (i64::from(k) - 1) / 2);
    Ok(num / q_pochhammer(q, k)?)
}

/// `h_k(1, q, q², …) = 1 / (q; q)_k`.
pub fn complete_geometric(k: u32, q: &Rational) -> Result<Rational> {
    Ok(Rational::one() / q_pochhammer(q, k)?)
}

/// Distinct rearrangements of the parts of a partition.
fn distinct_rearrangements(lambda: &Partition) -> Vec<Vec<u32>> {
    let mut counts: BTreeMap<u32, u32> = lambda.multiplicities();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(lambda.len());
    fn rec(
        counts: &mut BTreeMap<u32, u32>,
        current: &mut Vec<u32>,
        len: usize,
        out: &mut Vec<Vec<u32>>,
    ) {
        if current.len() == len {
            out.push(current.clone());
            return;
        }
        let keys: Vec<u32> = counts
            .iter()
            .filter(|&(_, &m)| m > 0)
            .map(|(&k, _)| k)
            .collect();
        for k in keys {
            *counts.get_mut(&k).unwrap() -= 1;
            current.push(k);
            rec(counts, current, len, out);
            current.pop();
            *counts.get_mut(&k).unwrap() += 1;
        }
    }
    rec(&mut counts, &mut current, lambda.len(), &mut out);
    out
}

/// `m_λ(1, q, q², …)`: summing each rearrangement `w` of the parts over
/// strictly increasing variable indices collapses to
/// `q^{Σ_a (a−1) w_a} / ∏_b (1 − q^{W_b})` with `W_b` the tail sums of `w`.
pub fn monomial_geometric(lambda: &Partition, q: &Rational) -> Result<Rational> {
    if lambda.is_empty() {
        return Ok(Rational::one());
    }
    check_geometric_parameter(q, lambda.weight())?;
    let mut acc = Rational::zero();
    for w in distinct_rearrangements(lambda) {
        let mut exponent = 0i64;
        for (a, &wa) in w.iter().enumerate() {
            exponent += a as i64 * i64::from(wa);
        }
        let mut denom = Rational::one();
        let mut tail: i64 = w.iter().map(|&x| i64::from(x)).sum();
        for &wb in &w {
            denom *= Rational::one() - rational_pow(q, tail);
            tail -= i64::from(wb);
        }
        acc += rational_pow(q, exponent) / denom;
    }
    Ok(acc)
}

/// `f_λ(1, q, q², …)`: the weakly increasing index sums collapse to
/// `(−1)^{ℓ*(λ)} Σ_u ∏_b 1/(1 − q^{U_b})` over distinct rearrangements `u`.
pub fn forgotten_geometric(lambda: &Partition, q: &Rational) -> Result<Rational> {
    if lambda.is_empty() {
        return Ok(Rational::one());
    }
    check_geometric_parameter(q, lambda.weight())?;
    let mut acc = Rational::zero();
    for u in distinct_rearrangements(lambda) {
        let mut denom = Rational::one();
        let mut tail: i64 = u.iter().map(|&x| i64::from(x)).sum();
        for &ub in &u {
            denom *= Rational::one() - rational_pow(q, tail);
            tail -= i64::from(ub);
        }
        acc += denom.recip();
    }
    let sign = if lambda.colength().is_multiple_of(2) {
        1
    } else {
        -1
    };
    Ok(acc * Rational::from_integer(BigInt::from(sign)))
}

/// The truncated geometric alphabet `(q^offset, q^{offset+1}, …)` with `m`
/// entries; the finite stand-in for the infinite specialization.
pub fn geometric_alphabet(q: &Rational, offset: u32, m: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(m);
    let mut cur = rational_pow(q, i64::from(offset));
    for _ in 0..m {
        out.push(cur.clone());
        cur *= q;
    }
    out
}
