use std::sync::Arc;

use super::idempotents::{central_idempotents, idempotent_sum, Support};
use super::normal_form::{recover_normal_form, render_z};
use super::{Generator, Ideal, IdealError};
use crate::field::ExactMatrix;
use crate::hopf::{GroupDatum, HopfElement};
use crate::modules::{build_m, build_p, compute_tau, partition_indices, ModuleRep};

/// `Ann(M) = {a : a M = 0}`, computed as the kernel of `a -> rho(a)`.
pub fn annihilator_oracle(module: &ModuleRep) -> Result<Ideal, IdealError> {
    let datum = &module.datum;
    let actions = module.basis_actions();
    let entries = module.dim * module.dim;
    let rows = (0..entries)
        .map(|e| actions.iter().map(|m| m.entries()[e].clone()).collect())
        .collect();
    let map = ExactMatrix::from_rows(datum.field(), datum.dim(), rows);
    let ideal = Ideal::from_closed_space(datum, map.nullspace());
    if !ideal.is_closed() {
        return Err(IdealError::Internal(format!(
            "annihilator of {} is not a two-sided ideal",
            module.label
        )));
    }
    finish(ideal)
}

/// The ideal `(z^{k-1}(1-e_i), z^{k-2}(1-e_i)(1-e_{tau i}), ...,
/// (1-e_i)...(1-e_{tau^{k-1} i}))`.
pub fn annihilator_formula_m(
    datum: &Arc<GroupDatum>,
    k: usize,
    i: usize,
) -> Result<Ideal, IdealError> {
    build_m(datum, k, i)?;
    let tau = compute_tau(datum)?;
    let prims = central_idempotents(datum);
    let one = HopfElement::one(datum);
    let mut gens = Vec::with_capacity(k);
    let mut product = one.clone();
    let mut factors = Vec::with_capacity(k);
    for l in 0..k {
        let t = tau.pow(i, l as i64);
        let e_t = HopfElement::from_group_algebra(datum, 0, &prims[t].element);
        product = &product * &(&one - &e_t);
        factors.push(format!("(1 - e{t})"));
        let m = k - 1 - l;
        let element = &HopfElement::z_power(datum, m) * &product;
        let text = match render_z(m) {
            Some(z) => format!("{z}*{}", factors.join("*")),
            None => factors.join("*"),
        };
        gens.push(Generator::new(element, text));
    }
    finish(Ideal::from_generators(datum, gens)?)
}

/// The ideal `(sum_{i in Lambda_0} e_i + sum_{j' in Lambda_1 - Orb(j)} e_j')`.
pub fn annihilator_formula_p(datum: &Arc<GroupDatum>, j: usize) -> Result<Ideal, IdealError> {
    build_p(datum, j)?;
    let partition = partition_indices(datum)?;
    let orbit = partition.orbit_of(j).unwrap_or(&[]);
    let support: Support = partition
        .m_indices()
        .iter()
        .chain(partition.lambda1().iter().filter(|x| !orbit.contains(x)))
        .copied()
        .collect();
    let element =
        HopfElement::from_group_algebra(datum, 0, &idempotent_sum(datum, &support).element);
    let text = if support.is_empty() {
        "0".to_string()
    } else {
        support
            .iter()
            .map(|i| format!("e{i}"))
            .collect::<Vec<_>>()
            .join(" + ")
    };
    finish(Ideal::from_generators(
        datum,
        vec![Generator::new(element, text)],
    )?)
}

fn finish(ideal: Ideal) -> Result<Ideal, IdealError> {
    Ok(match recover_normal_form(&ideal) {
        Some(nf) => ideal.with_normal_form(nf),
        None => ideal,
    })
}
