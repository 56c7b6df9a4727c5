use std::collections::BTreeSet;
use std::sync::Arc;

use hopfideal_core::catalog;
use hopfideal_core::hopf::{random_element, sigma, verify_hopf_axioms, GroupAlgebraElement};
use hopfideal_core::ideals::{
    annihilator_formula_m, annihilator_formula_p, annihilator_oracle, central_idempotents,
    idempotent_sum, is_completely_prime, is_maximal, maximal_ideals, radical_of_quotient,
};
use hopfideal_core::modules::{build_m, build_p, compute_tau, partition_indices, simple_modules};
use hopfideal_core::{DatumKind, GroupDatum, HopfElement, Ideal};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn data() -> Vec<(&'static str, Arc<GroupDatum>)> {
    vec![
        ("klein", catalog::klein()),
        ("taft2", catalog::taft(2)),
        ("taft3", catalog::taft(3)),
        ("taft4", catalog::taft(4)),
        ("z4nn", catalog::z4_non_nilpotent()),
        ("z6nn", catalog::z6_non_nilpotent()),
        ("z9nn", catalog::z9_non_nilpotent()),
        ("s3z2", catalog::s3_times_z2()),
    ]
}

fn e(d: &Arc<GroupDatum>, i: usize) -> HopfElement {
    HopfElement::from_group_algebra(d, 0, &central_idempotents(d)[i].element)
}

#[test]
fn hopf_axioms_hold() {
    for (name, d) in data() {
        let report = verify_hopf_axioms(&d);
        assert!(report.all_passed(), "{name}: {:?}", report.checks);
    }
}

#[test]
fn multiplication_is_associative() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (name, d) in data() {
        for _ in 0..8 {
            let (a, b, c) = (
                random_element(&d, &mut rng),
                random_element(&d, &mut rng),
                random_element(&d, &mut rng),
            );
            assert_eq!(&(&a * &b) * &c, &a * &(&b * &c), "{name}");
        }
    }
}

#[test]
fn z_power_relation_and_twist() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (name, d) in data() {
        let z = HopfElement::z(&d);
        let expected = match d.kind() {
            DatumKind::Nilpotent => HopfElement::zero(&d),
            DatumKind::NonNilpotent => {
                &HopfElement::group_element(&d, d.g_pow_n()) - &HopfElement::one(&d)
            }
        };
        assert_eq!(z.pow(d.n()), expected, "{name}");
        for m in 0..d.n() {
            let h = random_element(&d, &mut rng).component(0);
            let lhs = &HopfElement::z_power(&d, m) * &HopfElement::from_group_algebra(&d, 0, &h);
            let rhs = &HopfElement::from_group_algebra(&d, 0, &sigma(&d, &h, m))
                * &HopfElement::z_power(&d, m);
            assert_eq!(lhs, rhs, "{name} m={m}");
        }
    }
}

#[test]
fn idempotents_are_orthogonal_central_and_complete() {
    for (name, d) in data() {
        let p = d.p();
        let es: Vec<HopfElement> = (0..p).map(|i| e(&d, i)).collect();
        let sum = es.iter().fold(HopfElement::zero(&d), |acc, x| &acc + x);
        assert_eq!(sum, HopfElement::one(&d), "{name}");
        for i in 0..p {
            for j in 0..p {
                let expected = if i == j {
                    es[i].clone()
                } else {
                    HopfElement::zero(&d)
                };
                assert_eq!(&es[i] * &es[j], expected, "{name} {i} {j}");
            }
            for h in 0..d.group().size() {
                let x = HopfElement::group_element(&d, h);
                assert_eq!(&es[i] * &x, &x * &es[i], "{name}");
            }
        }
    }
}

#[test]
fn z_powers_permute_idempotents() {
    for (name, d) in data() {
        let tau = compute_tau(&d).unwrap();
        for l in 0..d.n() {
            let zl = HopfElement::z_power(&d, l);
            for s in 0..d.p() {
                let t = tau.pow(s, l as i64);
                assert_eq!(&zl * &e(&d, s), &e(&d, t) * &zl, "{name} l={l} s={s}");
            }
        }
    }
}

#[test]
fn z_power_lies_in_shifted_ideal() {
    for (name, d) in data() {
        let one = HopfElement::one(&d);
        for s in 0..d.p() {
            for l in 0..d.n().saturating_sub(1) {
                let gen = &HopfElement::z_power(&d, l) * &(&one - &e(&d, s));
                let ideal = Ideal::from_elements(&d, &[gen]).unwrap();
                assert!(
                    ideal
                        .contains_element(&HopfElement::z_power(&d, l + 1))
                        .unwrap(),
                    "{name} s={s} l={l}"
                );
            }
        }
    }
}

#[test]
fn tau_orbits_have_length_n() {
    // every datum here has chi of order n
    for (name, d) in data() {
        let tau = compute_tau(&d).unwrap();
        assert_eq!(tau.order(), d.n(), "{name}");
        for s in 0..d.p() {
            assert_eq!(tau.orbit(s).len(), d.n(), "{name} s={s}");
        }
    }
}

#[test]
fn annihilator_formulas_match_oracle() {
    for (name, d) in data() {
        let partition = partition_indices(&d).unwrap();
        for &i in partition.m_indices() {
            for k in 1..=d.n() {
                let formula = annihilator_formula_m(&d, k, i).unwrap();
                let oracle = annihilator_oracle(&build_m(&d, k, i).unwrap()).unwrap();
                assert_eq!(formula, oracle, "{name} M({k},{i})");
            }
        }
        for &j in partition.lambda1() {
            let formula = annihilator_formula_p(&d, j).unwrap();
            let oracle = annihilator_oracle(&build_p(&d, j).unwrap()).unwrap();
            assert_eq!(formula, oracle, "{name} P_{j}");
        }
    }
}

#[test]
fn radical_of_nilpotent_algebra_is_z() {
    for (name, d) in data() {
        if d.kind() != DatumKind::Nilpotent {
            continue;
        }
        let rad = radical_of_quotient(&Ideal::zero(&d)).unwrap();
        let z = Ideal::from_elements(&d, &[HopfElement::z(&d)]).unwrap();
        assert_eq!(rad.preimage, z, "{name}");
    }
}

#[test]
fn maximal_ideals_pass_the_independent_test() {
    for (name, d) in data() {
        let max = maximal_ideals(&d).unwrap();
        let partition = partition_indices(&d).unwrap();
        assert_eq!(
            max.len(),
            partition.m_indices().len() + partition.orbits().len(),
            "{name}"
        );
        for m in &max {
            assert!(is_maximal(m).unwrap(), "{name} {}", m.generator_text());
        }
        for (a, x) in max.iter().enumerate() {
            for y in &max[a + 1..] {
                assert_ne!(x, y, "{name}");
            }
        }
    }
}

#[test]
fn lower_exponents_give_different_ideals() {
    // (h_0), (z h_1), ..., (z^{n-1} h_{n-1}) with nonzero h_i are pairwise different
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for (name, d) in data() {
        if d.kind() != DatumKind::Nilpotent {
            continue;
        }
        for _ in 0..3 {
            let ideals: Vec<Ideal> = (0..d.n())
                .map(|m| {
                    let mut h = random_element(&d, &mut rng).component(0);
                    if h.is_zero() {
                        h = GroupAlgebraElement::one(&d);
                    }
                    let x = HopfElement::from_group_algebra(&d, m, &h);
                    Ideal::from_elements(&d, &[x]).unwrap()
                })
                .collect();
            for a in 0..ideals.len() {
                for b in a + 1..ideals.len() {
                    assert_ne!(ideals[a], ideals[b], "{name} {a} {b}");
                }
            }
        }
    }
}

#[test]
fn single_exponent_families_are_distinct() {
    for (name, d) in data() {
        if d.kind() != DatumKind::Nilpotent || d.p() > 5 {
            continue;
        }
        let p = d.p();
        for m in 0..d.n() {
            let ideals: Vec<Ideal> = (1u32..(1 << p))
                .map(|mask| {
                    let support: BTreeSet<usize> =
                        (0..p).filter(|i| mask & (1 << i) != 0).collect();
                    let h = idempotent_sum(&d, &support).element;
                    Ideal::from_elements(&d, &[HopfElement::from_group_algebra(&d, m, &h)]).unwrap()
                })
                .collect();
            assert_eq!(ideals.len(), (1 << p) - 1);
            for a in 0..ideals.len() {
                for b in a + 1..ideals.len() {
                    assert_ne!(ideals[a], ideals[b], "{name} m={m}");
                }
            }
        }
    }
}

#[test]
fn completely_prime_on_nonabelian_input() {
    // (1 - e_i) is completely prime exactly when V_i is one-dimensional
    let d = catalog::s3_times_z2();
    let simples = simple_modules(&d);
    for info in &simples {
        let ideal =
            Ideal::from_elements(&d, &[&HopfElement::one(&d) - &e(&d, info.index)]).unwrap();
        assert!(is_maximal(&ideal).unwrap());
        assert_eq!(ideal.codim(), info.dim * info.dim);
        assert_eq!(
            is_completely_prime(&ideal).unwrap(),
            info.dim == 1,
            "e{}",
            info.index
        );
    }
    assert_eq!(simples.iter().filter(|s| s.dim == 2).count(), 2);
}
