//! Seeded cross-verification suites behind `hurwitzkit verify`.
//!
//! Every suite counts failures instead of panicking, so a corrupted build
//! (or the deliberate `--inject-fault` run) produces a readable FAIL report
//! and a nonzero exit. Reports are byte-identical for a fixed seed and
//! scale.

use std::fmt::Write as _;

use num::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hurwitzkit::cayley::{combinatorial_f, compose_f_matrices, f_matrix, path_counts};
use hurwitzkit::character::{character_table, CharacterTable};
use hurwitzkit::hurwitz::{
    brute_force_hurwitz, character_weighted, frobenius_schur, geometric_weighted,
    parity_obstructed, MultiDegree,
};
use hurwitzkit::partition::{enumerate_partitions, Partition};
use hurwitzkit::rational::{rat, rational_pow, Rational};
use hurwitzkit::symfun::{complete, elementary, geometric_alphabet};
use hurwitzkit::tau::{
    degree_lattice, power_route_value, schur_route_value, tau_power_sum_table, tau_schur_coeffs,
};
use hurwitzkit::weights::{config_weight, config_weight_truncated, series_coeffs, WeightSpec};

struct Suite {
    name: &'static str,
    instances: usize,
    failures: usize,
}

impl Suite {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            instances: 0,
            failures: 0,
        }
    }

    fn check(&mut self, ok: bool) {
        self.instances += 1;
        if !ok {
            self.failures += 1;
        }
    }
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    let numer = rng.gen_range(1..=9i64) * if rng.gen_bool(0.5) { 1 } else { -1 };
    rat(numer, rng.gen_range(1..=9i64))
}

fn random_params(rng: &mut ChaCha8Rng, count: usize) -> Vec<Rational> {
    (0..count).map(|_| random_rational(rng)).collect()
}

fn nontrivial_profiles(n: u32) -> Vec<Partition> {
    enumerate_partitions(n)
        .into_iter()
        .filter(|p| p.colength() >= 1)
        .collect()
}

fn table_for(n: u32, inject: bool) -> CharacterTable {
    let mut table = character_table(n).expect("table within guard");
    if inject {
        let first = table.partitions()[0].clone();
        table.corrupt_entry(&first, &first).unwrap();
    }
    table
}

pub fn run_verify(seed: u64, full: bool, inject: bool) -> (String, bool) {
    let mut suites = Vec::new();
    suites.push(classical_oracle(seed, full));
    suites.push(orthogonality(full, inject));
    let (triple, parity) = oracle_triple_and_parity(seed, full, inject);
    suites.push(triple);
    suites.push(stabilization(full));
    suites.push(commutativity(seed, full));
    suites.push(bridge(seed, full));
    suites.push(parity);

    let mut report = String::new();
    let scale = if full { "full" } else { "small" };
    writeln!(report, "hurwitzkit verify — seed {seed}, scale {scale}").unwrap();
    let mut ok = true;
    for s in &suites {
        let status = if s.failures == 0 { "PASS" } else { "FAIL" };
        writeln!(
            report,
            "{:<22} instances={:<6} failures={:<4} {status}",
            s.name, s.instances, s.failures
        )
        .unwrap();
        ok &= s.failures == 0;
    }
    writeln!(report, "result: {}", if ok { "PASS" } else { "FAIL" }).unwrap();
    (report, ok)
}

/// Frobenius–Schur character sums against brute-force factorization counts.
fn classical_oracle(seed: u64, full: bool) -> Suite {
    let mut suite = Suite::new("classical-oracle");
    let max_k = if full { 3 } else { 2 };
    for n in [2u32, 3] {
        let table = character_table(n).unwrap();
        let pool = nontrivial_profiles(n);
        let mut tuples: Vec<Vec<Partition>> = vec![Vec::new()];
        for _ in 0..max_k {
            let grown: Vec<Vec<Partition>> = tuples
                .iter()
                .flat_map(|t| {
                    pool.iter().map(move |p| {
                        let mut t2 = t.clone();
                        t2.push(p.clone());
                        t2
                    })
                })
                .collect();
            tuples.extend(grown);
        }
        for tuple in tuples.iter().filter(|t| !t.is_empty()) {
            let fs = frobenius_schur(tuple, &table).unwrap();
            let bf = brute_force_hurwitz(tuple, n).unwrap();
            suite.check(fs == bf);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(101));
    let draws = if full { 20 } else { 5 };
    for n in [4u32, 5] {
        let table = character_table(n).unwrap();
        let pool = nontrivial_profiles(n);
        for _ in 0..draws {
            let k = rng.gen_range(1..=3usize);
            let tuple: Vec<Partition> = (0..k)
                .map(|_| pool[rng.gen_range(0..pool.len())].clone())
                .collect();
            let fs = frobenius_schur(&tuple, &table).unwrap();
            let bf = brute_force_hurwitz(&tuple, n).unwrap();
            suite.check(fs == bf);
        }
    }
    suite
}

/// Row/column orthogonality and the dimension identity.
fn orthogonality(full: bool, inject: bool) -> Suite {
    let mut suite = Suite::new("orthogonality");
    let max_n = if full { 8 } else { 6 };
    for n in 1..=max_n {
        let table = table_for(n, inject);
        let parts = table.partitions().to_vec();
        for a in 0..parts.len() {
            for b in 0..parts.len() {
                let mut row_sum = Rational::zero();
                let mut col_sum = num::BigInt::zero();
                for (m, mu) in parts.iter().enumerate() {
                    let product = table.value_by_index(a, m) * table.value_by_index(b, m);
                    row_sum += Rational::new(product.into(), mu.z_order());
                    col_sum += table.value_by_index(m, a) * table.value_by_index(m, b);
                }
                let row_expected = if a == b {
                    Rational::one()
                } else {
                    Rational::zero()
                };
                let col_expected = if a == b {
                    parts[a].z_order()
                } else {
                    num::BigInt::zero()
                };
                suite.check(row_sum == row_expected && col_sum == col_expected);
            }
        }
        let mut dim_total = num::BigInt::zero();
        for lambda in table.partitions() {
            let d = num::BigInt::from(table.dimension(lambda).unwrap());
            dim_total += &d * &d;
        }
        suite.check(dim_total == hurwitzkit::rational::big_factorial(u64::from(n)));
    }
    suite
}

/// The three weighted routes against each other, plus the parity sweep
/// collected along the way.
fn oracle_triple_and_parity(seed: u64, full: bool, inject: bool) -> (Suite, Suite) {
    let mut suite = Suite::new("oracle-triple");
    let mut parity = Suite::new("parity-vanishing");
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(303));
    let sizes: &[u32] = if full { &[2, 3, 4] } else { &[2, 3] };
    let max_d = if full { 3 } else { 2 };
    for &n in sizes {
        let table = table_for(n, inject);
        let specs = [
            WeightSpec::ClassI {
                params: random_params(&mut rng, 3),
            },
            WeightSpec::ClassII {
                params: random_params(&mut rng, 3),
            },
            WeightSpec::QuantumE {
                q: rat(1, 3),
                truncation: None,
            },
            WeightSpec::QuantumH {
                q: rat(1, 5),
                truncation: None,
            },
        ];
        for d in 0..=max_d {
            let paths = path_counts(n, d).unwrap();
            for spec in &specs {
                for mu in table.partitions() {
                    for nu in table.partitions() {
                        let geometric = geometric_weighted(d, mu, nu, spec, &table).unwrap();
                        let character = character_weighted(d, mu, nu, spec, &table).unwrap();
                        let cayley = combinatorial_f(d, mu, nu, spec, &paths).unwrap();
                        suite.check(geometric == character && character == cayley);
                        if parity_obstructed(d, mu, nu) {
                            parity.check(
                                geometric.is_zero() && character.is_zero() && cayley.is_zero(),
                            );
                        }
                    }
                }
            }
        }
    }
    (suite, parity)
}

/// Quantum weights: truncation stabilizes monotonically toward the closed
/// forms, and the finite-alphabet q-binomial corrections hold exactly.
fn stabilization(full: bool) -> Suite {
    let mut suite = Suite::new("quantum-stabilization");
    let q = rat(1, 2);
    // default truncation for degree-2 data is 2·2 + 8 = 12; double at full scale
    let base = WeightSpec::QuantumE {
        q: q.clone(),
        truncation: None,
    }
    .truncation_or_default(2);
    let m = if full { 2 * base } else { base };
    // e/h on the finite geometric alphabet vs closed forms with the exact
    // correction factor
    let alphabet = geometric_alphabet(&q, 0, m as usize);
    let e_series = series_coeffs(
        &WeightSpec::QuantumE {
            q: q.clone(),
            truncation: None,
        },
        5,
    )
    .unwrap();
    let h_series = series_coeffs(
        &WeightSpec::QuantumH {
            q: q.clone(),
            truncation: None,
        },
        5,
    )
    .unwrap();
    let one = Rational::one();
    for i in 1..=5u32 {
        let mut e_corr = Rational::one();
        for j in (m - i + 1)..=m {
            e_corr *= &one - rational_pow(&q, i64::from(j));
        }
        suite.check(elementary(i as usize, &alphabet) == e_series.coeff(i as usize) * &e_corr);
        let mut h_corr = Rational::one();
        for j in m..=(m + i - 1) {
            h_corr *= &one - rational_pow(&q, i64::from(j));
        }
        suite.check(complete(i as usize, &alphabet) == h_series.coeff(i as usize) * &h_corr);
    }
    // configuration weights: |closed − truncated| shrinks from M to 2M
    let profile_sets: Vec<Vec<Partition>> = vec![
        vec![Partition::parse("[2,1]").unwrap()],
        vec![
            Partition::parse("[2,1]").unwrap(),
            Partition::parse("[3]").unwrap(),
        ],
        vec![
            Partition::parse("[3]").unwrap(),
            Partition::parse("[3]").unwrap(),
        ],
    ];
    let quantum_specs = [
        WeightSpec::QuantumE {
            q: rat(1, 2),
            truncation: None,
        },
        WeightSpec::QuantumEPrime {
            q: rat(1, 3),
            truncation: None,
        },
        WeightSpec::QuantumH {
            q: rat(1, 2),
            truncation: None,
        },
        WeightSpec::QuantumQ {
            q: rat(1, 2),
            p: rat(1, 3),
            truncation: None,
        },
    ];
    for spec in &quantum_specs {
        for profiles in &profile_sets {
            let closed = config_weight(spec, profiles).unwrap();
            let at_m = config_weight_truncated(spec, profiles, m as usize).unwrap();
            let at_2m = config_weight_truncated(spec, profiles, 2 * m as usize).unwrap();
            let gap_m = (&closed - &at_m).abs();
            let gap_2m = (&closed - &at_2m).abs();
            suite.check(gap_2m < gap_m || (gap_m.is_zero() && gap_2m.is_zero()));
        }
    }
    suite
}

/// F-matrices of any two specs commute under the class-sum composition.
fn commutativity(seed: u64, full: bool) -> Suite {
    let mut suite = Suite::new("commutativity");
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(505));
    let sizes: &[u32] = if full { &[2, 3, 4] } else { &[2, 3] };
    for &n in sizes {
        let classes = enumerate_partitions(n);
        for _ in 0..3 {
            let a = WeightSpec::ClassI {
                params: random_params(&mut rng, 2),
            };
            let b = WeightSpec::ClassII {
                params: random_params(&mut rng, 2),
            };
            let da = rng.gen_range(0..=2u32);
            let db = rng.gen_range(0..=2u32);
            let fa = f_matrix(n, da, &a).unwrap();
            let fb = f_matrix(n, db, &b).unwrap();
            let ab = compose_f_matrices(&fa, &fb, &classes);
            let ba = compose_f_matrices(&fb, &fa, &classes);
            suite.check(ab == ba);
        }
    }
    suite
}

/// Per-lattice-point equality of the Schur and power-sum evaluations.
fn bridge(seed: u64, full: bool) -> Suite {
    let mut suite = Suite::new("tau-bridge");
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(707));
    let draws = if full { 5 } else { 2 };
    let bound = if full { 2 } else { 1 };
    for _ in 0..draws {
        let n = rng.gen_range(1..=if full { 4u32 } else { 3 });
        let table = character_table(n).unwrap();
        let spec_i = WeightSpec::ClassI {
            params: random_params(&mut rng, 2),
        };
        let spec_ii = WeightSpec::ClassII {
            params: random_params(&mut rng, 2),
        };
        let bounds = MultiDegree::new(vec![bound], vec![bound]);
        let t_len = rng.gen_range(1..=3usize);
        let t_alphabet = random_params(&mut rng, t_len);
        let s_len = rng.gen_range(1..=3usize);
        let s_alphabet = random_params(&mut rng, s_len);
        let schur = tau_schur_coeffs(
            n,
            std::slice::from_ref(&spec_i),
            std::slice::from_ref(&spec_ii),
            0,
            &bounds,
        )
        .unwrap();
        let power = tau_power_sum_table(
            n,
            std::slice::from_ref(&spec_i),
            std::slice::from_ref(&spec_ii),
            &bounds,
        )
        .unwrap();
        for deg in degree_lattice(&bounds) {
            let lhs = schur_route_value(&schur, &deg, &t_alphabet, &s_alphabet, &table).unwrap();
            let rhs = power_route_value(&power, &deg, &t_alphabet, &s_alphabet).unwrap();
            suite.check(lhs == rhs);
        }
    }
    suite
}
