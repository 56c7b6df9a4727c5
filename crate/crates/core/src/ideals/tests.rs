use std::sync::Arc;

use super::*;
use crate::groups::build_abelian_named;
use crate::hopf::{DatumInput, GroupAlgebraElement, GroupDatum, HopfElement};
use crate::modules::{build_m, build_p};

fn datum(factors: &[u64], names: &[&str], chi: usize, g: &str, alpha: i64) -> Arc<GroupDatum> {
    let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
    let (group, table) = build_abelian_named(factors, Some(&names)).unwrap();
    let g = group.index_of(g).unwrap();
    GroupDatum::validate(DatumInput {
        group,
        table,
        chi,
        g,
        alpha,
        irreps: Vec::new(),
    })
    .unwrap()
}

fn klein() -> Arc<GroupDatum> {
    datum(&[2, 2], &["b", "c"], 3, "b", 0)
}

fn ideal(d: &Arc<GroupDatum>, src: &[&str]) -> Ideal {
    let gens: Vec<HopfElement> = src.iter().map(|s| parse_element(d, s).unwrap()).collect();
    Ideal::from_elements(d, &gens).unwrap()
}

#[test]
fn klein_e0_matches_product_form() {
    let d = klein();
    let e0 = HopfElement::from_group_algebra(&d, 0, &central_idempotents(&d)[0].element);
    let expected = parse_element(&d, "1/4*(1 + b)*(1 + c)").unwrap();
    assert_eq!(e0, expected);
}

#[test]
fn idempotents_of_small_groups() {
    let d = datum(&[3], &["g"], 1, "g", 0);
    let e = central_idempotents(&d);
    let expected = parse_element(&d, "1/3*(1 + g + g^2)").unwrap();
    assert_eq!(
        HopfElement::from_group_algebra(&d, 0, &e[0].element),
        expected
    );
    let sum = e
        .iter()
        .fold(GroupAlgebraElement::zero(&d), |acc, x| acc.add(&x.element));
    assert_eq!(sum, GroupAlgebraElement::one(&d));
}

#[test]
fn trivial_ideals() {
    let d = klein();
    assert!(Ideal::from_elements(&d, &[HopfElement::zero(&d)])
        .unwrap()
        .is_zero());
    assert!(Ideal::from_elements(&d, &[HopfElement::one(&d)])
        .unwrap()
        .is_whole());
    assert_eq!(ideal(&d, &["1 - e0"]).dim(), 7);
}

#[test]
fn klein_memberships() {
    let d = klein();
    let z = HopfElement::z(&d);
    assert!(ideal(&d, &["1 + b"]).contains_element(&z).unwrap());
    let plus_b = ideal(&d, &["1 + b"]);
    assert_eq!(plus_b, ideal(&d, &["e0 + e1"]));
    // (z(e_k + e_tau(k)) + e_i) = (z + e_i) for k outside {i, tau(i)}
    assert_eq!(ideal(&d, &["z*(e1 + e2) + e0"]), ideal(&d, &["z + e0"]));
}

#[test]
fn support_examples() {
    let d = klein();
    let one = GroupAlgebraElement::one(&d);
    assert_eq!(kg_ideal_support(&d, &[one]), (0..4).collect());
    let e2 = central_idempotents(&d)[2].element.clone();
    assert_eq!(kg_ideal_support(&d, &[e2]), [2].into_iter().collect());
    let b = d.group().index_of("b").unwrap();
    let one_plus_b = GroupAlgebraElement::one(&d).add(&GroupAlgebraElement::group_element(&d, b));
    assert_eq!(
        kg_ideal_support(&d, &[one_plus_b]),
        [0, 1].into_iter().collect()
    );
}

#[test]
fn normal_form_merges_and_absorbs() {
    let d = klein();
    let e = |s: &[usize]| idempotent_sum(&d, &s.iter().copied().collect()).element;
    let merged = normal_form(&d, &[(1, e(&[0])), (1, e(&[2]))]).unwrap();
    assert_eq!(
        merged.normal_form().unwrap().terms(),
        &[(1, [0, 2].into_iter().collect())]
    );
    // i = 0, tau(i) = 3, k = 1
    let nf = normal_form(&d, &[(1, e(&[0, 3, 1])), (0, e(&[0, 3]))]).unwrap();
    assert_eq!(nf, ideal(&d, &["z*e1 + e0 + e3"]));
    assert!(nf.normal_form().unwrap().is_well_formed());
    assert_eq!(
        normal_form(&d, &[(2, e(&[0]))]).unwrap_err(),
        IdealError::ExponentOutOfRange { m: 2, n: 2 }
    );
}

#[test]
fn annihilators_klein() {
    let d = klein();
    let m10 = annihilator_oracle(&build_m(&d, 1, 0).unwrap()).unwrap();
    assert_eq!(m10, ideal(&d, &["1 - e0"]));
    assert_eq!(m10.dim(), 7);
    let m20 = annihilator_oracle(&build_m(&d, 2, 0).unwrap()).unwrap();
    assert_eq!(m20, ideal(&d, &["z*e3 + e1 + e2"]));
    let formula = annihilator_formula_m(&d, 2, 0).unwrap();
    assert_eq!(formula, m20);
    assert_eq!(formula.generator_text(), "z*(1 - e0), (1 - e0)*(1 - e3)");
    assert_eq!(formula.normal_form_text(), "z*e3 + e1 + e2");
    assert_eq!(
        annihilator_formula_m(&d, 1, 2).unwrap().generator_text(),
        "(1 - e2)"
    );
}

#[test]
fn annihilators_z4_non_nilpotent() {
    let d = datum(&[4], &["g"], 2, "g", 1);
    let ann = annihilator_formula_p(&d, 1).unwrap();
    assert_eq!(ann, ideal(&d, &["e0 + e2"]));
    assert_eq!(ann, annihilator_oracle(&build_p(&d, 1).unwrap()).unwrap());
    assert_eq!(ann, annihilator_formula_p(&d, 3).unwrap());
}

#[test]
fn maximal_and_completely_prime_klein() {
    let d = klein();
    let max = maximal_ideals(&d).unwrap();
    assert_eq!(max.len(), 4);
    for m in &max {
        assert!(is_maximal(m).unwrap());
        assert!(is_completely_prime(m).unwrap());
    }
    assert_eq!(max[0], ideal(&d, &["1 - b", "1 - c"]));
    assert_eq!(max[3], ideal(&d, &["1 + b", "1 + c"]));
    assert_eq!(max[3].normal_form_text(), "e0 + e1 + e2");
    assert!(!is_maximal(&Ideal::zero(&d)).unwrap());
    let z = ideal(&d, &["z"]);
    assert!(!is_maximal(&z).unwrap());
    assert!(!is_completely_prime(&z).unwrap());
    assert_eq!(is_maximal(&Ideal::whole(&d)), Err(IdealError::WholeAlgebra));
    assert_eq!(
        is_completely_prime(&Ideal::whole(&d)),
        Err(IdealError::WholeAlgebra)
    );
}

#[test]
fn radicals() {
    let d = klein();
    let rad = radical_of_quotient(&Ideal::zero(&d)).unwrap();
    assert_eq!(rad.preimage, ideal(&d, &["z"]));
    assert_eq!(rad.radical_dim, 4);
    let z = ideal(&d, &["z"]);
    assert_eq!(radical_of_quotient(&z).unwrap().radical_dim, 0);
    assert_eq!(
        radical_of_quotient(&ideal(&d, &["1 - e1"]))
            .unwrap()
            .radical_dim,
        0
    );
}

#[test]
fn klein_has_49_ideals() {
    let d = klein();
    let all = enumerate_ideals(&d, DEFAULT_CAP).unwrap();
    assert_eq!(all.len(), 49);
    for i in &all {
        let text = i.normal_form_text();
        assert_eq!(&ideal(&d, &[&text]), i, "{text}");
    }
}

#[test]
fn enumeration_refusals() {
    let d = klein();
    assert_eq!(
        enumerate_ideals(&d, 10).unwrap_err(),
        IdealError::CapExceeded { count: 80, cap: 10 }
    );
    let nn = datum(&[4], &["g"], 2, "g", 1);
    assert_eq!(
        enumerate_ideals(&nn, DEFAULT_CAP).unwrap_err(),
        IdealError::NotNilpotent
    );
}

#[test]
fn tau_agrees_with_commutation() {
    let d = klein();
    assert_eq!(
        tau_from_idempotents(&d).unwrap(),
        crate::modules::compute_tau(&d).unwrap()
    );
}

#[test]
fn parser_names() {
    let d = klein();
    assert_eq!(
        parse_element(&d, "ze1").unwrap(),
        parse_element(&d, "z*e1").unwrap()
    );
    assert_eq!(
        parse_element(&d, "bc").unwrap(),
        parse_element(&d, "b*c").unwrap()
    );
    assert_eq!(
        parse_element(&d, "b^-1").unwrap(),
        parse_element(&d, "b").unwrap()
    );
    assert!(matches!(
        parse_element(&d, "q + 1"),
        Err(IdealError::Parse(_))
    ));
    assert!(matches!(
        parse_element(&d, "zeta(3)"),
        Err(IdealError::Parse(_))
    ));
}

#[test]
fn datum_mismatch() {
    let a = Ideal::zero(&klein());
    let b = Ideal::zero(&klein());
    assert_eq!(a.sum(&b).unwrap_err(), IdealError::DatumMismatch);
}
