//! Weight specifications and everything derived from them: series
//! coefficients of the generating function, configuration weights, content
//! products and the shifted-sector prefactor.
//!
//! Two classical kinds and four quantum kinds are supported. A class I
//! generator is `G(z) = ∏ (1 + c_i z)`, a class II generator is
//! `G̃(z) = ∏ (1 − c̃_i z)^{-1}`, both over a finite parameter list. The
//! quantum kinds specialize the parameters to powers of a deformation
//! parameter:
//!
//! * `E(q,z)  = ∏_{i≥0} (1 + q^i z)`      (class I at `c_i = q^{i−1}`)
//! * `E′(q,z) = ∏_{i≥1} (1 + q^i z)`      (class I at `c_i = q^i`)
//! * `H(q,z)  = ∏_{i≥0} (1 − q^i z)^{-1}` (class II at `c̃_i = q^{i−1}`)
//! * `Q(q,p,z) = E(q,z)·H(p,z)`
//!
//! Quantum evaluations use the exact closed forms of the infinite
//! specialization, e.g. `E_k(q) = q^{k(k−1)/2}/∏_{j≤k}(1−q^j)`. The finite
//! truncation of the geometric alphabet is kept available
//! ([`config_weight_truncated`]) as an independent stabilization oracle.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rational::{format_rational, parse_rational, rational_pow, Rational};
use crate::series::SeriesPoly;
use crate::symfun::{
    complete_geometric, elementary_geometric, forgotten_eval, forgotten_geometric,
    geometric_alphabet, monomial_eval, monomial_geometric,
};
use num::{BigInt, One, Zero};

/// One species' weight generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeightSpec {
    ClassI {
        params: Vec<Rational>,
    },
    ClassII {
        params: Vec<Rational>,
    },
    QuantumE {
        q: Rational,
        truncation: Option<u32>,
    },
    QuantumEPrime {
        q: Rational,
        truncation: Option<u32>,
    },
    QuantumH {
        q: Rational,
        truncation: Option<u32>,
    },
    QuantumQ {
        q: Rational,
        p: Rational,
        truncation: Option<u32>,
    },
}

impl WeightSpec {
    /// Kind tag used in the JSON schema.
    pub fn kind(&self) -> &'static str {
        match self {
            WeightSpec::ClassI { .. } => "class_i",
            WeightSpec::ClassII { .. } => "class_ii",
            WeightSpec::QuantumE { .. } => "e",
            WeightSpec::QuantumEPrime { .. } => "eprime",
            WeightSpec::QuantumH { .. } => "h",
            WeightSpec::QuantumQ { .. } => "q",
        }
    }

    /// Truncation order for the stabilization oracle; defaults to
    /// `2·max_degree + 8` when the spec does not pin one.
    pub fn truncation_or_default(&self, max_degree: u32) -> u32 {
        let stored = match self {
            WeightSpec::QuantumE { truncation, .. }
            | WeightSpec::QuantumEPrime { truncation, .. }
            | WeightSpec::QuantumH { truncation, .. }
            | WeightSpec::QuantumQ { truncation, .. } => *truncation,
            _ => None,
        };
        stored.unwrap_or(default_truncation(max_degree))
    }
}

/// Default stabilization truncation for degree-`d` computations.
pub fn default_truncation(max_degree: u32) -> u32 {
    2 * max_degree + 8
}

/// Serialized form: rationals as lowest-terms strings.
#[derive(Serialize, Deserialize)]
struct WeightSpecJson {
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    params: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    q: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    p: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    truncation: Option<u32>,
}

impl Serialize for WeightSpec {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        let json = match self {
            WeightSpec::ClassI { params } | WeightSpec::ClassII { params } => WeightSpecJson {
                kind: self.kind().to_string(),
                params: Some(params.iter().map(format_rational).collect()),
                q: None,
                p: None,
                truncation: None,
            },
            WeightSpec::QuantumE { q, truncation }
            | WeightSpec::QuantumEPrime { q, truncation }
            | WeightSpec::QuantumH { q, truncation } => WeightSpecJson {
                kind: self.kind().to_string(),
                params: None,
                q: Some(format_rational(q)),
                p: None,
                truncation: *truncation,
            },
            WeightSpec::QuantumQ { q, p, truncation } => WeightSpecJson {
                kind: self.kind().to_string(),
                params: None,
                q: Some(format_rational(q)),
                p: Some(format_rational(p)),
                truncation: *truncation,
            },
        };
        json.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for WeightSpec {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as DeError;
        let json = WeightSpecJson::deserialize(deserializer)?;
        let parse_list =
            |params: &Option<Vec<String>>| -> std::result::Result<Vec<Rational>, D::Error> {
                params
                    .as_deref()
                    .unwrap_or(&[])
                    .iter()
                    .map(|s| parse_rational(s).map_err(D::Error::custom))
                    .collect()
            };
        let need_q = |q: &Option<String>| -> std::result::Result<Rational, D::Error> {
            let s = q
                .as_deref()
                .ok_or_else(|| D::Error::custom("quantum weight spec needs field `q`"))?;
            parse_rational(s).map_err(D::Error::custom)
        };
        if let Some(m) = json.truncation {
            if m == 0 {
                return Err(D::Error::custom("truncation must be at least 1"));
            }
        }
        match json.kind.as_str() {
            "class_i" => Ok(WeightSpec::ClassI {
                params: parse_list(&json.params)?,
            }),
            "class_ii" => Ok(WeightSpec::ClassII {
                params: parse_list(&json.params)?,
            }),
            "e" => Ok(WeightSpec::QuantumE {
                q: need_q(&json.q)?,
                truncation: json.truncation,
            }),
            "eprime" => Ok(WeightSpec::QuantumEPrime {
                q: need_q(&json.q)?,
                truncation: json.truncation,
            }),
            "h" => Ok(WeightSpec::QuantumH {
                q: need_q(&json.q)?,
                truncation: json.truncation,
            }),
            "q" => {
                let p = json
                    .p
                    .as_deref()
                    .ok_or_else(|| D::Error::custom("kind `q` needs field `p`"))?;
                Ok(WeightSpec::QuantumQ {
                    q: need_q(&json.q)?,
                    p: parse_rational(p).map_err(D::Error::custom)?,
                    truncation: json.truncation,
                })
            }
            other => Err(D::Error::custom(format!("unknown weight kind `{other}`"))),
        }
    }
}

/// Degree-`≤ d` coefficients of the weight generating function.
///
/// Class I gives elementary symmetric coefficients, class II complete ones;
/// the quantum kinds use the exact closed forms
/// `E_i(q) = q^{i(i−1)/2}/(q;q)_i`, `E′_i(q) = q^i E_i(q)`,
/// `H_i(q) = 1/(q;q)_i`, `Q_i(q,p) = Σ_m E_m(q) H_{i−m}(p)`.
pub fn series_coeffs(spec: &WeightSpec, d: usize) -> Result<SeriesPoly> {
    match spec {
        WeightSpec::ClassI { params } => {
            let mut acc = SeriesPoly::one(d);
            for c in params {
                let factor = SeriesPoly::new(vec![Rational::one(), c.clone()], d);
                acc = acc.mul(&factor);
            }
            Ok(acc)
        }
        WeightSpec::ClassII { params } => {
            let mut acc = SeriesPoly::one(d);
            for c in params {
                let factor = SeriesPoly::new(vec![Rational::one(), -c.clone()], d).invert()?;
                acc = acc.mul(&factor);
            }
            Ok(acc)
        }
        WeightSpec::QuantumE { q, .. } => {
            let coeffs = (0..=d as u32)
                .map(|i| elementary_geometric(i, q))
                .collect::<Result<Vec<_>>>()?;
            Ok(SeriesPoly::new(coeffs, d))
        }
        WeightSpec::QuantumEPrime { q, .. } => {
            let coeffs = (0..=d as u32)
                .map(|i| Ok(rational_pow(q, i64::from(i)) * elementary_geometric(i, q)?))
                .collect::<Result<Vec<_>>>()?;
            Ok(SeriesPoly::new(coeffs, d))
        }
        WeightSpec::QuantumH { q, .. } => {
            let coeffs = (0..=d as u32)
                .map(|i| complete_geometric(i, q))
                .collect::<Result<Vec<_>>>()?;
            Ok(SeriesPoly::new(coeffs, d))
        }
        WeightSpec::QuantumQ { q, p, .. } => {
            let e_part = series_coeffs(
                &WeightSpec::QuantumE {
                    q: q.clone(),
                    truncation: None,
                },
                d,
            )?;
            let h_part = series_coeffs(
                &WeightSpec::QuantumH {
                    q: p.clone(),
                    truncation: None,
                },
                d,
            )?;
            Ok(e_part.mul(&h_part))
        }
    }
}

fn colength_pattern(profiles: &[Partition]) -> Result<Partition> {
    let mut colengths = Vec::with_capacity(profiles.len());
    for p in profiles {
        let c = p.colength();
        if c == 0 {
            return Err(Error::TrivialProfile);
        }
        colengths.push(c);
    }
    Ok(Partition::from_unsorted(colengths))
}

/// Sub-multiset splits of a profile multiset, as (left, right) pairs.
fn multiset_splits(profiles: &[Partition]) -> Vec<(Vec<Partition>, Vec<Partition>)> {
    let mut groups: Vec<(Partition, u32)> = Vec::new();
    let mut sorted = profiles.to_vec();
    sorted.sort();
    for p in sorted {
        match groups.last_mut() {
            Some((g, m)) if *g == p => *m += 1,
            _ => groups.push((p, 1)),
        }
    }
    let mut out = Vec::new();
    let mut take = vec![0u32; groups.len()];
    loop {
        let mut left = Vec::new();
        let mut right = Vec::new();
        for (k, (p, m)) in groups.iter().enumerate() {
            for _ in 0..take[k] {
                left.push(p.clone());
            }
            for _ in 0..(m - take[k]) {
                right.push(p.clone());
            }
        }
        out.push((left, right));
        let mut k = 0;
        loop {
            if k == groups.len() {
                return out;
            }
            take[k] += 1;
            if take[k] <= groups[k].1 {
                break;
            }
            take[k] = 0;
            k += 1;
        }
    }
}

/// Configuration weight `W(μ^{(1)}, …, μ^{(k)})`: a symmetric function of the
/// parameters evaluated at the colength pattern `λ*` of the profiles.
/// Monomial for class I kinds, forgotten for class II kinds; quantum kinds
/// use the geometric specialization in closed form. The hybrid `Q` weight
/// sums `m·f` products over every split of the profile multiset into the two
/// classes. Errors if any profile is trivial (colength 0).
pub fn config_weight(spec: &WeightSpec, profiles: &[Partition]) -> Result<Rational> {
    let pattern = colength_pattern(profiles)?;
    match spec {
        WeightSpec::ClassI { params } => Ok(monomial_eval(&pattern, params)),
        WeightSpec::ClassII { params } => Ok(forgotten_eval(&pattern, params)),
        WeightSpec::QuantumE { q, .. } => monomial_geometric(&pattern, q),
        WeightSpec::QuantumEPrime { q, .. } => {
            Ok(rational_pow(q, i64::from(pattern.weight())) * monomial_geometric(&pattern, q)?)
        }
        WeightSpec::QuantumH { q, .. } => forgotten_geometric(&pattern, q),
        WeightSpec::QuantumQ { q, p, .. } => {
            let mut acc = Rational::zero();
            for (left, right) in multiset_splits(profiles) {
                let lw = if left.is_empty() {
                    Rational::one()
                } else {
                    monomial_geometric(&colength_pattern(&left)?, q)?
                };
                let rw = if right.is_empty() {
                    Rational::one()
                } else {
                    forgotten_geometric(&colength_pattern(&right)?, p)?
                };
                acc += lw * rw;
            }
            Ok(acc)
        }
    }
}

/// Configuration weight evaluated on the geometric alphabet truncated at `m`
/// terms. For classical kinds this coincides with [`config_weight`]; for
/// quantum kinds it is the independent finite-truncation oracle that must
/// stabilize toward the closed form as `m` grows.
pub fn config_weight_truncated(
    spec: &WeightSpec,
    profiles: &[Partition],
    m: usize,
) -> Result<Rational> {
    let pattern = colength_pattern(profiles)?;
    match spec {
        WeightSpec::ClassI { .. } | WeightSpec::ClassII { .. } => config_weight(spec, profiles),
        WeightSpec::QuantumE { q, .. } => Ok(monomial_eval(&pattern, &geometric_alphabet(q, 0, m))),
        WeightSpec::QuantumEPrime { q, .. } => {
            Ok(monomial_eval(&pattern, &geometric_alphabet(q, 1, m)))
        }
        WeightSpec::QuantumH { q, .. } => {
            Ok(forgotten_eval(&pattern, &geometric_alphabet(q, 0, m)))
        }
        WeightSpec::QuantumQ { q, p, .. } => {
            let mut acc = Rational::zero();
            for (left, right) in multiset_splits(profiles) {
                let lw = if left.is_empty() {
                    Rational::one()
                } else {
                    monomial_eval(&colength_pattern(&left)?, &geometric_alphabet(q, 0, m))
                };
                let rw = if right.is_empty() {
                    Rational::one()
                } else {
                    forgotten_eval(&colength_pattern(&right)?, &geometric_alphabet(p, 0, m))
                };
                acc += lw * rw;
            }
            Ok(acc)
        }
    }
}

/// Content product `r_λ(N)(z) = ∏_{cells (i,j)} G(z·(N + j − i))` truncated
/// at degree `d`. The constant term is always 1.
pub fn content_product_poly(
    lambda: &Partition,
    spec: &WeightSpec,
    shift: i64,
    d: usize,
) -> Result<SeriesPoly> {
    let base = series_coeffs(spec, d)?;
    let mut acc = SeriesPoly::one(d);
    for content in lambda.contents() {
        let alpha = Rational::from_integer(BigInt::from(content + shift));
        acc = acc.mul(&base.scale_argument(&alpha));
    }
    Ok(acc)
}

/// Shifted-sector prefactor:
/// `r_0(N) = ∏_{j=1}^{N−1} G((N−j)z)^j` for `N ≥ 1`, `r_0(0) = 1`, and
/// `r_0(−N) = ∏_{j=1}^{N} G((j−N)z)^{−j}` for `N ≥ 1`.
pub fn r0_prefactor(spec: &WeightSpec, shift: i64, d: usize) -> Result<SeriesPoly> {
    let base = series_coeffs(spec, d)?;
    let mut acc = SeriesPoly::one(d);
    if shift >= 1 {
        for j in 1..shift {
            let alpha = Rational::from_integer(BigInt::from(shift - j));
            acc = acc.mul(&base.scale_argument(&alpha).powi(j)?);
        }
    } else if shift <= -1 {
        let n = -shift;
        for j in 1..=n {
            let alpha = Rational::from_integer(BigInt::from(j - n));
            acc = acc.mul(&base.scale_argument(&alpha).powi(-j)?);
        }
    }
    Ok(acc)
}

/// Bose occupancy `1/(e^{βε} − 1)` for `βε > 0`. The one floating-point
/// helper in the crate; it never feeds the exact pipelines.
pub fn bose_occupancy(beta_epsilon: f64) -> Result<f64> {
    if beta_epsilon <= 0.0 || beta_epsilon.is_nan() {
        return Err(Error::InvalidInput(
            "bose occupancy needs beta*epsilon > 0".into(),
        ));
    }
    Ok(1.0 / (beta_epsilon.exp() - 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn class_i_series_is_elementary() {
        let spec = WeightSpec::ClassI {
            params: vec![rat_int(2), rat_int(3)],
        };
        let s = series_coeffs(&spec, 3).unwrap();
        assert_eq!(
            s.coeffs(),
            &[rat_int(1), rat_int(5), rat_int(6), rat_int(0)]
        );
    }

    #[test]
    fn class_ii_series_is_complete() {
        let spec = WeightSpec::ClassII {
            params: vec![rat_int(1), rat_int(1)],
        };
        let s = series_coeffs(&spec, 2).unwrap();
        assert_eq!(s.coeffs(), &[rat_int(1), rat_int(2), rat_int(3)]);
    }

    #[test]
    fn quantum_series_closed_forms() {
        let q = rat(1, 3);
        let e = series_coeffs(
            &WeightSpec::QuantumE {
                q: q.clone(),
                truncation: None,
            },
            2,
        )
        .unwrap();
        // E_1 = 1/(1−q), E_2 = q/((1−q)(1−q²))
        let one = Rational::one();
        assert_eq!(e.coeff(1), &(one.clone() / (&one - &q)));
        assert_eq!(
            e.coeff(2),
            &(q.clone() / ((&one - &q) * (&one - &(&q * &q))))
        );
        let ep = series_coeffs(
            &WeightSpec::QuantumEPrime {
                q: q.clone(),
                truncation: None,
            },
            2,
        )
        .unwrap();
        assert_eq!(ep.coeff(1), &(&q * e.coeff(1)));
        assert_eq!(ep.coeff(2), &(&q * &q * e.coeff(2)));
        let h = series_coeffs(
            &WeightSpec::QuantumH {
                q: q.clone(),
                truncation: None,
            },
            2,
        )
        .unwrap();
        assert_eq!(h.coeff(1), &(one.clone() / (&one - &q)));
        assert_eq!(
            h.coeff(2),
            &(one.clone() / ((&one - &q) * (&one - &(&q * &q))))
        );
        // Q at degree 0 is the empty product
        let qq = series_coeffs(
            &WeightSpec::QuantumQ {
                q: rat(1, 3),
                p: rat(1, 5),
                truncation: None,
            },
            0,
        )
        .unwrap();
        assert_eq!(qq.coeffs(), &[rat_int(1)]);
    }

    #[test]
    fn quantum_q_series_matches_double_sum_display() {
        let (q, pp) = (rat(1, 3), rat(1, 5));
        let spec = WeightSpec::QuantumQ {
            q: q.clone(),
            p: pp.clone(),
            truncation: None,
        };
        let s = series_coeffs(&spec, 4).unwrap();
        for i in 0..=4u32 {
            let mut expected = Rational::zero();
            for m in 0..=i {
                expected +=
                    elementary_geometric(m, &q).unwrap() * complete_geometric(i - m, &pp).unwrap();
            }
            assert_eq!(s.coeff(i as usize), &expected, "Q_{i}");
        }
    }

    #[test]
    fn vanishing_denominator_propagates() {
        let spec = WeightSpec::QuantumE {
            q: rat_int(1),
            truncation: None,
        };
        assert!(matches!(
            series_coeffs(&spec, 1),
            Err(Error::VanishingDenominator { power: 1 })
        ));
    }

    #[test]
    fn config_weight_examples() {
        let spec = WeightSpec::ClassI {
            params: vec![rat_int(4), rat_int(9)],
        };
        // one colength-1 profile: m_(1)(c) = c1 + c2
        assert_eq!(config_weight(&spec, &[p(&[2, 1])]).unwrap(), rat_int(13));
        // two colength-1 profiles need two parameters: m_(1,1)((5)) = 0
        let single = WeightSpec::ClassI {
            params: vec![rat_int(5)],
        };
        assert_eq!(
            config_weight(&single, &[p(&[2, 1]), p(&[2, 1])]).unwrap(),
            rat_int(0)
        );
        // trivial profile rejected
        assert!(matches!(
            config_weight(&spec, &[p(&[1, 1, 1])]),
            Err(Error::TrivialProfile)
        ));
        // empty configuration weighs 1
        assert_eq!(config_weight(&spec, &[]).unwrap(), rat_int(1));
    }

    #[test]
    fn quantum_config_weight_stabilizes_to_closed_form() {
        let spec = WeightSpec::QuantumE {
            q: rat(1, 2),
            truncation: None,
        };
        // one colength-1 profile: closed form m_(1)(1,q,q²,…) = 1/(1−q) = 2
        let closed = config_weight(&spec, &[p(&[2])]).unwrap();
        assert_eq!(closed, rat_int(2));
        // truncation at m terms gives the geometric partial sum 2 − 2^{1−m}
        for m in [4usize, 8, 16] {
            let truncated = config_weight_truncated(&spec, &[p(&[2])], m).unwrap();
            let expected = rat_int(2) - rational_pow(&rat(1, 2), m as i64 - 1);
            assert_eq!(truncated, expected);
        }
        // monotone approach from below, closer at 2M than at M
        let at_m = config_weight_truncated(&spec, &[p(&[2])], 6).unwrap();
        let at_2m = config_weight_truncated(&spec, &[p(&[2])], 12).unwrap();
        assert!(at_m < at_2m && at_2m < closed);
    }

    #[test]
    fn quantum_q_weight_sums_over_splits() {
        let spec = WeightSpec::QuantumQ {
            q: rat(1, 3),
            p: rat(1, 5),
            truncation: None,
        };
        // single colength-1 profile: m_(1)(geo q) + f_(1)(geo p)
        let w = config_weight(&spec, &[p(&[2])]).unwrap();
        let expected = monomial_geometric(&p(&[1]), &rat(1, 3)).unwrap()
            + forgotten_geometric(&p(&[1]), &rat(1, 5)).unwrap();
        assert_eq!(w, expected);
        // two equal profiles: splits (2,0), (1,1), (0,2) — three terms
        let w2 = config_weight(&spec, &[p(&[2]), p(&[2])]).unwrap();
        let q3 = rat(1, 3);
        let p5 = rat(1, 5);
        let expected2 = monomial_geometric(&p(&[1, 1]), &q3).unwrap()
            + monomial_geometric(&p(&[1]), &q3).unwrap()
                * forgotten_geometric(&p(&[1]), &p5).unwrap()
            + forgotten_geometric(&p(&[1, 1]), &p5).unwrap();
        assert_eq!(w2, expected2);
    }

    #[test]
    fn content_product_examples() {
        let spec = WeightSpec::ClassI {
            params: vec![rat_int(7)],
        };
        // λ = (2), contents {0, 1}: G(0)·G(z) = 1 + 7z
        let s = content_product_poly(&p(&[2]), &spec, 0, 2).unwrap();
        assert_eq!(s.coeffs(), &[rat_int(1), rat_int(7), rat_int(0)]);
        // empty partition: empty product
        let e = content_product_poly(&Partition::empty(), &spec, 0, 2).unwrap();
        assert!(e.is_one());
        // λ = (1,1) class II with one parameter a: contents {0, −1},
        // G̃(0)·G̃(−z) = (1 + a z)^{-1} = 1 − a z + …
        let dual = WeightSpec::ClassII {
            params: vec![rat_int(5)],
        };
        let t = content_product_poly(&p(&[1, 1]), &dual, 0, 1).unwrap();
        assert_eq!(t.coeffs(), &[rat_int(1), rat_int(-5)]);
    }

    #[test]
    fn content_product_linearization() {
        // degree-1 coefficient = a_1(spec) · Σ contents(λ)
        let specs = [
            WeightSpec::ClassI {
                params: vec![rat(2, 3), rat(-1, 2)],
            },
            WeightSpec::ClassII {
                params: vec![rat(1, 4), rat(3, 5)],
            },
            WeightSpec::QuantumE {
                q: rat(1, 3),
                truncation: None,
            },
        ];
        for spec in &specs {
            let a1 = series_coeffs(spec, 1).unwrap().coeff(1).clone();
            for lambda in [p(&[3, 1]), p(&[2, 2]), p(&[4])] {
                let total: i64 = lambda.contents().iter().sum();
                let got = content_product_poly(&lambda, spec, 0, 1).unwrap();
                assert_eq!(got.coeff(0), &Rational::one());
                assert_eq!(
                    got.coeff(1),
                    &(a1.clone() * Rational::from_integer(BigInt::from(total)))
                );
            }
        }
        // all-zero parameters collapse to the constant series
        let zero = WeightSpec::ClassI {
            params: vec![rat_int(0), rat_int(0)],
        };
        let s = content_product_poly(&p(&[2, 1]), &zero, 0, 3).unwrap();
        assert!(s.is_one());
    }

    #[test]
    fn r0_prefactor_cases() {
        let spec = WeightSpec::ClassI {
            params: vec![rat_int(3)],
        };
        assert!(r0_prefactor(&spec, 0, 3).unwrap().is_one());
        assert!(r0_prefactor(&spec, 1, 3).unwrap().is_one());
        // N = 2: G(z)^1 = 1 + 3z
        let s = r0_prefactor(&spec, 2, 1).unwrap();
        assert_eq!(s.coeffs(), &[rat_int(1), rat_int(3)]);
        // N = −1: G(0)^{-1} = 1
        assert!(r0_prefactor(&spec, -1, 2).unwrap().is_one());
        // N = −2: G(−z)^{-1} = (1 − 3z)^{-1} = 1 + 3z + 9z² …
        let t = r0_prefactor(&spec, -2, 2).unwrap();
        assert_eq!(t.coeffs(), &[rat_int(1), rat_int(3), rat_int(9)]);
    }

    #[test]
    fn r0_prefactor_deeper_shifts() {
        // N = 3 with G(z) = 1 + cz: G(2z)·G(z)² = 1 + 4cz + 5c²z² + 2c³z³
        let c = rat(2, 3);
        let spec = WeightSpec::ClassI {
            params: vec![c.clone()],
        };
        let s = r0_prefactor(&spec, 3, 3).unwrap();
        let c2 = &c * &c;
        let c3 = &c2 * &c;
        assert_eq!(
            s.coeffs(),
            &[
                Rational::one(),
                rat_int(4) * &c,
                rat_int(5) * &c2,
                rat_int(2) * &c3
            ]
        );
        // N = −3: G(−2z)^{-1}·G(−z)^{-2}; its product with the mirrored
        // positive-shift prefactor at −z is exactly 1
        let neg = r0_prefactor(&spec, -3, 3).unwrap();
        let mirrored = s.scale_argument(&rat_int(-1));
        assert!(neg.mul(&mirrored).is_one());
    }

    #[test]
    fn shifted_content_products_scale_linearly() {
        // λ = (1) has a single cell of content 0: the degree-1 coefficient
        // of the shifted product is a_1 · N
        let spec = WeightSpec::ClassII {
            params: vec![rat(1, 2), rat(2, 7)],
        };
        let a1 = series_coeffs(&spec, 1).unwrap().coeff(1).clone();
        for shift in [-3i64, -1, 0, 2, 5] {
            let s = content_product_poly(&p(&[1]), &spec, shift, 1).unwrap();
            assert_eq!(
                s.coeff(1),
                &(a1.clone() * Rational::from_integer(BigInt::from(shift)))
            );
        }
    }

    #[test]
    fn bose_occupancy_examples() {
        assert!((bose_occupancy(2f64.ln()).unwrap() - 1.0).abs() < 1e-12);
        assert!((bose_occupancy(3f64.ln()).unwrap() - 0.5).abs() < 1e-12);
        assert!(bose_occupancy(40.0).unwrap() < 1e-12);
        assert!(bose_occupancy(0.0).is_err());
        assert!(bose_occupancy(-1.0).is_err());
    }

    #[test]
    fn weight_spec_json_round_trip() {
        let specs = vec![
            WeightSpec::ClassI {
                params: vec![rat(1, 2), rat_int(-3)],
            },
            WeightSpec::ClassII {
                params: vec![rat(2, 7)],
            },
            WeightSpec::QuantumE {
                q: rat(1, 3),
                truncation: Some(12),
            },
            WeightSpec::QuantumQ {
                q: rat(1, 3),
                p: rat(1, 5),
                truncation: None,
            },
        ];
        for spec in specs {
            let text = serde_json::to_string(&spec).unwrap();
            let back: WeightSpec = serde_json::from_str(&text).unwrap();
            assert_eq!(back, spec);
        }
        let parsed: WeightSpec =
            serde_json::from_str(r#"{"kind":"e","q":"1/3","truncation":10}"#).unwrap();
        assert_eq!(
            parsed,
            WeightSpec::QuantumE {
                q: rat(1, 3),
                truncation: Some(10)
            }
        );
        assert!(serde_json::from_str::<WeightSpec>(r#"{"kind":"e"}"#).is_err());
        assert!(serde_json::from_str::<WeightSpec>(r#"{"kind":"zzz"}"#).is_err());
        assert!(
            serde_json::from_str::<WeightSpec>(r#"{"kind":"e","q":"1/3","truncation":0}"#).is_err()
        );
    }
}
