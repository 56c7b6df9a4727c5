use std::collections::BTreeSet;
use std::sync::Arc;

use crate::field::Cyclotomic;
use crate::hopf::{GroupAlgebraElement, GroupDatum, HopfElement};
use crate::modules::{ModuleError, Tau};

/// A set of character indices.
pub type Support = BTreeSet<usize>;

/// `e_S = sum of e_i over i in S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralIdempotent {
    pub support: Support,
    pub element: GroupAlgebraElement,
}

/// The primitive central idempotents
/// `e_i = (chi_i(1) / |G|) sum_h chi_i(h) h^-1`, one per character.
pub fn central_idempotents(datum: &GroupDatum) -> Vec<CentralIdempotent> {
    let group = datum.group();
    let order = Cyclotomic::from_integer(datum.field(), group.size() as i64);
    let order_inv = order.inv().expect("group is nonempty");
    datum
        .table()
        .characters()
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let scale = &Cyclotomic::from_integer(datum.field(), c.degree() as i64) * &order_inv;
            let mut coeffs = vec![datum.zero_scalar(); group.size()];
            for h in 0..group.size() {
                coeffs[group.inv(h)] = &c.values()[h] * &scale;
            }
            CentralIdempotent {
                support: [i].into_iter().collect(),
                element: GroupAlgebraElement::from_coeffs(coeffs),
            }
        })
        .collect()
}

pub fn idempotent_sum(datum: &GroupDatum, support: &Support) -> CentralIdempotent {
    let prims = central_idempotents(datum);
    let mut acc = GroupAlgebraElement::zero(datum);
    for &i in support {
        acc = acc.add(&prims[i].element);
    }
    CentralIdempotent {
        support: support.clone(),
        element: acc,
    }
}

/// `{i : e_i h != 0 for some h}`; the `kG`-ideal generated by `hs` is the one
/// generated by `e_S` for this `S`.
pub fn kg_ideal_support(datum: &GroupDatum, hs: &[GroupAlgebraElement]) -> Support {
    let prims = central_idempotents(datum);
    prims
        .iter()
        .enumerate()
        .filter(|(_, e)| {
            hs.iter()
                .any(|h| !e.element.mul(h, datum.group()).is_zero())
        })
        .map(|(i, _)| i)
        .collect()
}

/// `tau` recovered from the algebra: `tau(s)` is the unique `t` with
/// `z e_s = e_t z`.
pub fn tau_from_idempotents(datum: &Arc<GroupDatum>) -> Result<Tau, ModuleError> {
    let prims: Vec<HopfElement> = central_idempotents(datum)
        .iter()
        .map(|e| HopfElement::from_group_algebra(datum, 0, &e.element))
        .collect();
    let z = HopfElement::z(datum);
    let perm = (0..prims.len())
        .map(|s| {
            let lhs = &z * &prims[s];
            (0..prims.len())
                .find(|&t| &prims[t] * &z == lhs)
                .ok_or(ModuleError::NoTauImage(s))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Tau::from_perm(perm))
}
