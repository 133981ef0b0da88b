//! Acceptance suite: one test per criterion, exact (zero-tolerance)
//! equalities throughout. Each test prints a PASS line with its instance
//! count; any mismatch fails the assertion with full context.

use num::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hurwitzkit::cayley::{
    combinatorial_f, compose_f_matrices, f_matrix, group_algebra::GroupAlgebra, monotone_counts,
    multispecies_f, path_counts,
};
use hurwitzkit::character::character_table;
use hurwitzkit::hurwitz::{
    brute_force_hurwitz, character_weighted, frobenius_schur, geometric_weighted,
    multispecies_weighted, parity_obstructed, MultiDegree,
};
use hurwitzkit::partition::{enumerate_partitions, Partition};
use hurwitzkit::rational::{big_factorial, rat, rational_pow, Rational};
use hurwitzkit::symfun::{
    complete, complete_geometric, elementary, elementary_geometric, geometric_alphabet,
};
use hurwitzkit::tau::{
    degree_lattice, power_route_value, schur_route_value, tau_eval_check, tau_power_sum_table,
    tau_schur_coeffs,
};
use hurwitzkit::weights::{series_coeffs, WeightSpec};

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    let numer = rng.gen_range(1..=9i64) * if rng.gen_bool(0.5) { 1 } else { -1 };
    let denom = rng.gen_range(1..=9i64);
    rat(numer, denom)
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

/// Criterion 1: the Frobenius–Schur character sum agrees with exhaustive
/// factorization counting — exhaustively for ≤ 3 nontrivial profiles at
/// n ∈ {2, 3}, and on 60 seeded random tuples at n ∈ {4, 5}.
#[test]
fn acceptance_1_classical_oracle() {
    let mut instances = 0usize;
    for n in [2u32, 3] {
        let table = character_table(n).unwrap();
        let pool = nontrivial_profiles(n);
        let mut tuples: Vec<Vec<Partition>> = vec![Vec::new()];
        for _ in 0..3 {
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
            assert_eq!(fs, bf, "n = {n}, profiles {tuple:?}");
            instances += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for n in [4u32, 5] {
        let table = character_table(n).unwrap();
        let pool = nontrivial_profiles(n);
        for _ in 0..30 {
            let k = rng.gen_range(1..=3usize);
            let tuple: Vec<Partition> = (0..k)
                .map(|_| pool[rng.gen_range(0..pool.len())].clone())
                .collect();
            let fs = frobenius_schur(&tuple, &table).unwrap();
            let bf = brute_force_hurwitz(&tuple, n).unwrap();
            assert_eq!(fs, bf, "n = {n}, profiles {tuple:?}");
            instances += 1;
        }
    }
    println!("ACCEPTANCE 1 (classical oracle, character sum = brute force): PASS — {instances} instances");
}

/// Criterion 2: the three weighted routes coincide — geometric
/// configuration sums, content-product coefficient extraction, and weighted
/// Cayley path counts — for all profile pairs at n ∈ {2, 3, 4}, d ≤ 3, with
/// seeded class I and class II specs of 3 parameters each.
#[test]
fn acceptance_2_single_species_oracle_triple() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut instances = 0usize;
    for n in [2u32, 3, 4] {
        let table = character_table(n).unwrap();
        let specs = [
            WeightSpec::ClassI {
                params: random_params(&mut rng, 3),
            },
            WeightSpec::ClassII {
                params: random_params(&mut rng, 3),
            },
        ];
        for d in 0..=3u32 {
            let paths = path_counts(n, d).unwrap();
            for spec in &specs {
                for mu in table.partitions() {
                    for nu in table.partitions() {
                        let geometric = geometric_weighted(d, mu, nu, spec, &table).unwrap();
                        let character = character_weighted(d, mu, nu, spec, &table).unwrap();
                        let combinatorial = combinatorial_f(d, mu, nu, spec, &paths).unwrap();
                        assert_eq!(
                            geometric, character,
                            "geometric vs character: n={n} d={d} {mu} {nu} {spec:?}"
                        );
                        assert_eq!(
                            character, combinatorial,
                            "character vs path route: n={n} d={d} {mu} {nu} {spec:?}"
                        );
                        instances += 1;
                    }
                }
            }
        }
    }
    println!("ACCEPTANCE 2 (single-species oracle triple): PASS — {instances} instances");
}

/// Criterion 3: multispecies equality of the eigenvalue route and the
/// F-matrix product route for l = m = 1, degrees ≤ (2, 2), n ∈ {2, 3},
/// with a classical pair and the quantum pair E(q = 1/3), H(p = 1/5).
#[test]
fn acceptance_3_multispecies_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let spec_pairs: Vec<(WeightSpec, WeightSpec)> = vec![
        (
            WeightSpec::ClassI {
                params: random_params(&mut rng, 3),
            },
            WeightSpec::ClassII {
                params: random_params(&mut rng, 3),
            },
        ),
        (
            WeightSpec::QuantumE {
                q: rat(1, 3),
                truncation: None,
            },
            WeightSpec::QuantumH {
                q: rat(1, 5),
                truncation: None,
            },
        ),
    ];
    let mut instances = 0usize;
    for n in [2u32, 3] {
        let table = character_table(n).unwrap();
        for (spec_i, spec_ii) in &spec_pairs {
            for d1 in 0..=2u32 {
                for d2 in 0..=2u32 {
                    let deg = MultiDegree::new(vec![d1], vec![d2]);
                    for mu in table.partitions() {
                        for nu in table.partitions() {
                            let eigen = multispecies_weighted(
                                &deg,
                                mu,
                                nu,
                                std::slice::from_ref(spec_i),
                                std::slice::from_ref(spec_ii),
                                &table,
                            )
                            .unwrap();
                            let matrix = multispecies_f(
                                &deg,
                                mu,
                                nu,
                                std::slice::from_ref(spec_i),
                                std::slice::from_ref(spec_ii),
                                n,
                            )
                            .unwrap();
                            assert_eq!(
                                eigen, matrix,
                                "n={n} deg=({d1};{d2}) {mu} {nu} {spec_i:?}/{spec_ii:?}"
                            );
                            instances += 1;
                        }
                    }
                }
            }
        }
    }
    println!(
        "ACCEPTANCE 3 (multispecies eigenvalue = F-matrix product): PASS — {instances} instances"
    );
}

/// Criterion 4: the generating-function bridge — the diagonal double Schur
/// expansion and the power-sum expansion evaluate identically on concrete
/// alphabets, per lattice point and in total, for n ≤ 4 and bounds (2; 2),
/// over 10 seeded spec/alphabet draws.
#[test]
fn acceptance_4_schur_power_sum_bridge() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut instances = 0usize;
    for draw in 0..10usize {
        let n = rng.gen_range(1..=4u32);
        let table = character_table(n).unwrap();
        let spec_i = WeightSpec::ClassI {
            params: random_params(&mut rng, 2),
        };
        let spec_ii = WeightSpec::ClassII {
            params: random_params(&mut rng, 2),
        };
        let bounds = MultiDegree::new(vec![2], vec![2]);
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
            let via_schur =
                schur_route_value(&schur, &deg, &t_alphabet, &s_alphabet, &table).unwrap();
            let via_power = power_route_value(&power, &deg, &t_alphabet, &s_alphabet).unwrap();
            assert_eq!(via_schur, via_power, "draw {draw}, n={n}, deg {deg:?}");
            instances += 1;
        }
        let (schur_total, power_total) = tau_eval_check(
            n,
            std::slice::from_ref(&spec_i),
            std::slice::from_ref(&spec_ii),
            &bounds,
            &t_alphabet,
            &s_alphabet,
        )
        .unwrap();
        assert_eq!(schur_total, power_total, "draw {draw} totals, n={n}");
        instances += 1;
    }
    println!("ACCEPTANCE 4 (Schur ↔ power-sum bridge): PASS — {instances} instances");
}

/// Criterion 5: character tables — row and column orthogonality exact for
/// n ≤ 8, and the dimension identity Σ dim² = n! for n ≤ 10.
#[test]
fn acceptance_5_character_table_orthogonality() {
    let mut instances = 0usize;
    for n in 1..=8u32 {
        let table = character_table(n).unwrap();
        let parts = table.partitions().to_vec();
        for a in 0..parts.len() {
            for b in 0..parts.len() {
                // rows: Σ_μ χ_a(μ) χ_b(μ) / z_μ = δ_ab
                let mut row_sum = Rational::zero();
                for (m, mu) in parts.iter().enumerate() {
                    let product = table.value_by_index(a, m) * table.value_by_index(b, m);
                    row_sum += Rational::new(product.into(), mu.z_order());
                }
                let expected = if a == b {
                    Rational::one()
                } else {
                    Rational::zero()
                };
                assert_eq!(row_sum, expected, "row orthogonality n={n} a={a} b={b}");
                // columns: Σ_λ χ_λ(μ_a) χ_λ(μ_b) = δ_ab z_{μ_a}
                let mut col_sum = num::BigInt::zero();
                for l in 0..parts.len() {
                    col_sum += table.value_by_index(l, a) * table.value_by_index(l, b);
                }
                let expected = if a == b {
                    parts[a].z_order()
                } else {
                    num::BigInt::zero()
                };
                assert_eq!(col_sum, expected, "column orthogonality n={n} a={a} b={b}");
                instances += 1;
            }
        }
    }
    for n in 1..=10u32 {
        let table = character_table(n).unwrap();
        let mut total = num::BigInt::zero();
        for lambda in table.partitions() {
            let dim = num::BigInt::from(table.dimension(lambda).unwrap());
            total += &dim * &dim;
        }
        assert_eq!(total, big_factorial(u64::from(n)), "Σ dim² = n! at n = {n}");
        instances += 1;
    }
    println!("ACCEPTANCE 5 (character orthogonality and dimension identity): PASS — {instances} instances");
}

/// Criterion 6: quantum coefficient closed forms at q = 1/2, D = 5, M = 20.
///
/// The displays pin `E_1 = 1/(1−q)`, `E_2 = q/((1−q)(1−q²))`,
/// `H_i = ∏_{j≤i} 1/(1−q^j)`, asserted exactly against `series_coeffs`. The
/// finite 20-variable geometric alphabet relates to those closed forms by
/// the exact q-binomial corrections
/// `e_i(1..q^{M−1}) = E_i · ∏_{j=M−i+1}^{M} (1−q^j)` and
/// `h_i(1..q^{M−1}) = H_i · ∏_{j=M}^{M+i−1} (1−q^j)`, which is the
/// zero-tolerance form of the finite-alphabet comparison (a polynomial in q
/// can never equal the rational-function closed form on the nose; the
/// correction factors converge to 1 as M grows).
#[test]
fn acceptance_6_quantum_closed_forms() {
    let q = rat(1, 2);
    let m = 20u32;
    let d = 5usize;
    let alphabet = geometric_alphabet(&q, 0, m as usize);
    let e_series = series_coeffs(
        &WeightSpec::QuantumE {
            q: q.clone(),
            truncation: None,
        },
        d,
    )
    .unwrap();
    let h_series = series_coeffs(
        &WeightSpec::QuantumH {
            q: q.clone(),
            truncation: None,
        },
        d,
    )
    .unwrap();
    let one = Rational::one();
    // display values
    assert_eq!(e_series.coeff(0), &one);
    assert_eq!(e_series.coeff(1), &(one.clone() / (&one - &q)));
    assert_eq!(
        e_series.coeff(2),
        &(q.clone() / ((&one - &q) * (&one - rational_pow(&q, 2))))
    );
    let mut instances = 3usize;
    for i in 1..=d as u32 {
        let mut h_display = Rational::one();
        for j in 1..=i {
            h_display /= &one - rational_pow(&q, i64::from(j));
        }
        assert_eq!(h_series.coeff(i as usize), &h_display, "H_{i} display");
        assert_eq!(
            e_series.coeff(i as usize),
            &elementary_geometric(i, &q).unwrap(),
            "E_{i} closed form"
        );
        assert_eq!(
            h_series.coeff(i as usize),
            &complete_geometric(i, &q).unwrap(),
            "H_{i} closed form"
        );
        // finite-alphabet comparison with exact correction factors
        let mut e_correction = Rational::one();
        for j in (m - i + 1)..=m {
            e_correction *= &one - rational_pow(&q, i64::from(j));
        }
        assert_eq!(
            elementary(i as usize, &alphabet),
            e_series.coeff(i as usize) * &e_correction,
            "e_{i} on 20 geometric variables vs E_{i}"
        );
        let mut h_correction = Rational::one();
        for j in m..=(m + i - 1) {
            h_correction *= &one - rational_pow(&q, i64::from(j));
        }
        assert_eq!(
            complete(i as usize, &alphabet),
            h_series.coeff(i as usize) * &h_correction,
            "h_{i} on 20 geometric variables vs H_{i}"
        );
        instances += 4;
    }
    println!("ACCEPTANCE 6 (quantum closed forms, exact finite-alphabet bridge): PASS — {instances} instances");
}

/// Criterion 7: combinatorial structure — the block-order multinomial
/// relation for all λ ⊢ d ≤ 4 at n ≤ 4, F-matrix commutativity for seeded
/// spec pairs at n ≤ 4, and the Jucys–Murphy identity
/// `e_j(J) = Σ_{ℓ*(μ)=j} C_μ` by full group-algebra computation at n ≤ 4.
#[test]
fn acceptance_7_combinatorial_structure() {
    let mut instances = 0usize;
    // multinomial relation between free and block-ordered counts
    for n in 2..=4u32 {
        for d in 0..=4u32 {
            let mono = monotone_counts(n, d).unwrap();
            for (s, sig) in mono.signatures.iter().enumerate() {
                let mut multinomial = big_factorial(u64::from(sig.weight()));
                for &part in sig.parts() {
                    multinomial /= big_factorial(u64::from(part));
                }
                let multinomial = multinomial.to_u64().unwrap();
                for mi in 0..mono.classes.len() {
                    for ni in 0..mono.classes.len() {
                        assert_eq!(
                            mono.free[s][mi][ni],
                            multinomial * mono.canonical[s][mi][ni],
                            "multinomial relation n={n} sig={sig}"
                        );
                        instances += 1;
                    }
                }
            }
        }
    }
    // F-matrix commutativity for random spec pairs
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in 2..=4u32 {
        let classes = enumerate_partitions(n);
        for _ in 0..3 {
            let a = WeightSpec::ClassI {
                params: random_params(&mut rng, 2),
            };
            let b = if rng.gen_bool(0.5) {
                WeightSpec::ClassII {
                    params: random_params(&mut rng, 2),
                }
            } else {
                WeightSpec::QuantumE {
                    q: rat(1, rng.gen_range(2..=7i64)),
                    truncation: None,
                }
            };
            let da = rng.gen_range(0..=2u32);
            let db = rng.gen_range(0..=2u32);
            let fa = f_matrix(n, da, &a).unwrap();
            let fb = f_matrix(n, db, &b).unwrap();
            let ab = compose_f_matrices(&fa, &fb, &classes);
            let ba = compose_f_matrices(&fb, &fa, &classes);
            assert_eq!(ab, ba, "commutativity n={n} {a:?} {b:?}");
            instances += 1;
        }
    }
    // Jucys–Murphy identity in the full group algebra
    for n in 2..=4u32 {
        let algebra = GroupAlgebra::new(n).unwrap();
        for j in 1..=3usize.min(n as usize - 1) {
            let lhs = algebra.elementary_jm(j);
            let mut rhs = algebra.zero();
            for mu in enumerate_partitions(n) {
                if mu.colength() == j as u32 {
                    let c = algebra.class_sum(&mu);
                    algebra.add_assign(&mut rhs, &c);
                }
            }
            assert_eq!(lhs, rhs, "e_{j}(J) = Σ C_μ at n = {n}");
            instances += 1;
        }
    }
    println!("ACCEPTANCE 7 (multinomial relation, commutativity, Jucys–Murphy): PASS — {instances} instances");
}

/// Criterion 8: parity vanishing — every Hurwitz value whose total colength
/// (branch degrees plus the colengths of μ and ν) is odd is exactly zero,
/// across all engines.
#[test]
fn acceptance_8_parity_vanishing() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut instances = 0usize;
    // plain Hurwitz numbers: all tuples of ≤ 3 nontrivial profiles at n = 3, 4
    for n in [3u32, 4] {
        let table = character_table(n).unwrap();
        let pool = nontrivial_profiles(n);
        let mut tuples: Vec<Vec<Partition>> = vec![Vec::new()];
        for _ in 0..3 {
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
            let total: u32 = tuple.iter().map(Partition::colength).sum();
            if total % 2 == 1 {
                assert!(
                    frobenius_schur(tuple, &table).unwrap().is_zero(),
                    "parity: {tuple:?}"
                );
                instances += 1;
            }
        }
    }
    // weighted engines across all kinds
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
        WeightSpec::QuantumQ {
            q: rat(1, 3),
            p: rat(1, 5),
            truncation: None,
        },
    ];
    for n in [2u32, 3, 4] {
        let table = character_table(n).unwrap();
        for d in 0..=3u32 {
            let paths = path_counts(n, d).unwrap();
            for mu in table.partitions() {
                for nu in table.partitions() {
                    if !parity_obstructed(d, mu, nu) {
                        continue;
                    }
                    for spec in &specs {
                        assert!(
                            character_weighted(d, mu, nu, spec, &table)
                                .unwrap()
                                .is_zero(),
                            "character route parity: n={n} d={d} {mu} {nu}"
                        );
                        assert!(
                            geometric_weighted(d, mu, nu, spec, &table)
                                .unwrap()
                                .is_zero(),
                            "geometric route parity: n={n} d={d} {mu} {nu}"
                        );
                        assert!(
                            combinatorial_f(d, mu, nu, spec, &paths).unwrap().is_zero(),
                            "path route parity: n={n} d={d} {mu} {nu}"
                        );
                        instances += 3;
                    }
                }
            }
        }
    }
    println!("ACCEPTANCE 8 (parity vanishing across engines): PASS — {instances} instances");
}
