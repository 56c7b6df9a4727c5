use std::collections::BTreeMap;
use std::sync::Arc;

use super::idempotents::{idempotent_sum, kg_ideal_support, Support};
use super::{Generator, Ideal, IdealError};
use crate::hopf::{DatumKind, GroupAlgebraElement, GroupDatum, HopfElement};
use crate::modules::compute_tau;

/// Terms `(m_1, S_1), ..., (m_t, S_t)` with `m_1 > ... > m_t` and
/// `S_1 ⊋ ... ⊋ S_t ⊋ ∅`, standing for the ideal
/// `(z^{m_1} e_{S_1}, ..., z^{m_t} e_{S_t})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm {
    terms: Vec<(usize, Support)>,
}

impl NormalForm {
    pub fn zero() -> Self {
        NormalForm { terms: Vec::new() }
    }

    pub fn whole(datum: &GroupDatum) -> Self {
        NormalForm {
            terms: vec![(0, (0..datum.p()).collect())],
        }
    }

    /// Terms as given; [`NormalForm::is_well_formed`] tells whether they
    /// have the required shape.
    pub fn from_terms(terms: Vec<(usize, Support)>) -> Self {
        NormalForm { terms }
    }

    pub fn terms(&self) -> &[(usize, Support)] {
        &self.terms
    }

    pub fn is_well_formed(&self) -> bool {
        self.terms.iter().all(|(_, s)| !s.is_empty())
            && self.terms.windows(2).all(|w| {
                let ((m1, s1), (m2, s2)) = (&w[0], &w[1]);
                m1 > m2 && s1.is_superset(s2) && s1 != s2
            })
    }

    /// Printed summands `(m_s, B_s, full)`. `B_s` is `S_s` minus the indices
    /// `t` for which `z^{m_s} e_t` already follows from lower terms through
    /// `e_t z^b = z^b e_{tau^{-b}(t)}`. The sets `B_s` are disjoint, so right
    /// multiplication by `e_{B_s}` isolates a summand. `full` marks a top
    /// support equal to all indices in nilpotent type, printed as a bare
    /// `z^m`: there the other summands are recovered because `1 + z^d` is a
    /// unit.
    fn layers(&self, datum: &GroupDatum) -> Vec<(usize, Support, bool)> {
        let tau = compute_tau(datum).ok();
        let nilpotent = datum.kind() == DatumKind::Nilpotent;
        let mut out = Vec::new();
        for (s, (m, set)) in self.terms.iter().enumerate() {
            let mut implied = Support::new();
            for (m2, lower) in &self.terms[s + 1..] {
                for &t in lower {
                    implied.insert(t);
                    if let Some(tau) = &tau {
                        for b in 1..=(m - m2) {
                            implied.insert(tau.pow(t, -(b as i64)));
                        }
                    }
                }
            }
            let rest: Support = set.difference(&implied).copied().collect();
            if rest.is_empty() {
                continue;
            }
            let full = s == 0 && nilpotent && set.len() == datum.p();
            out.push((*m, if full { set.clone() } else { rest }, full));
        }
        out
    }

    /// The separate generators `z^{m_s} e_{S_s}`.
    pub fn generators(&self, datum: &Arc<GroupDatum>) -> Vec<Generator> {
        self.terms
            .iter()
            .map(|(m, s)| Generator::new(term_element(datum, *m, s), render_term(datum.p(), *m, s)))
            .collect()
    }

    /// One generator `sum_s z^{m_s} e_{B_s}` for the printed summands; it
    /// generates the same ideal as [`NormalForm::generators`].
    pub fn single_generator(&self, datum: &Arc<GroupDatum>) -> Generator {
        let mut acc = HopfElement::zero(datum);
        for (m, b, _) in self.layers(datum) {
            acc = &acc + &term_element(datum, m, &b);
        }
        Generator::new(acc, self.render(datum))
    }

    /// `sum_s z^{m_s} e_{S_s}` with the nested supports.
    pub fn nested_generator(&self, datum: &Arc<GroupDatum>) -> HopfElement {
        let mut acc = HopfElement::zero(datum);
        for (m, s) in &self.terms {
            acc = &acc + &term_element(datum, *m, s);
        }
        acc
    }

    /// Text of the single generator, e.g. `z*e3 + e1 + e2`.
    pub fn render(&self, datum: &GroupDatum) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.layers(datum)
            .iter()
            .map(|(m, b, _)| render_term(datum.p(), *m, b))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

fn term_element(datum: &Arc<GroupDatum>, m: usize, support: &Support) -> HopfElement {
    HopfElement::from_group_algebra(datum, m, &idempotent_sum(datum, support).element)
}

pub(crate) fn render_z(m: usize) -> Option<String> {
    match m {
        0 => None,
        1 => Some("z".into()),
        _ => Some(format!("z^{m}")),
    }
}

fn render_term(p: usize, m: usize, support: &Support) -> String {
    let zpart = render_z(m);
    if support.len() == p {
        return zpart.unwrap_or_else(|| "1".into());
    }
    let sum = support
        .iter()
        .map(|i| format!("e{i}"))
        .collect::<Vec<_>>()
        .join(" + ");
    match zpart {
        None => sum,
        Some(z) if support.len() == 1 => format!("{z}*{sum}"),
        Some(z) => format!("{z}*({sum})"),
    }
}

/// Bring the ideal `(z^{m_1} h_1, ..., z^{m_k} h_k)` to normal form.
///
/// Equal exponents are merged through the `kG`-support of their
/// coefficients, each support is enlarged by those of lower exponents
/// (`z^m e_T` lies in the ideal once `z^{m'} e_T` does, for `m' < m`), and a
/// term whose support equals that of the next lower term is dropped. The
/// result is checked against the closure of the raw generators.
pub fn normal_form(
    datum: &Arc<GroupDatum>,
    pairs: &[(usize, GroupAlgebraElement)],
) -> Result<Ideal, IdealError> {
    let n = datum.n();
    let mut by_exponent: BTreeMap<usize, Vec<GroupAlgebraElement>> = BTreeMap::new();
    for (m, h) in pairs {
        if *m >= n {
            return Err(IdealError::ExponentOutOfRange { m: *m, n });
        }
        by_exponent.entry(*m).or_default().push(h.clone());
    }
    let mut terms: Vec<(usize, Support)> = by_exponent
        .iter()
        .rev()
        .map(|(m, hs)| (*m, kg_ideal_support(datum, hs)))
        .filter(|(_, s)| !s.is_empty())
        .collect();
    for s in (1..terms.len()).rev() {
        let lower = terms[s].1.clone();
        terms[s - 1].1.extend(lower);
    }
    let nf = NormalForm {
        terms: dedup_lower(terms),
    };

    let raw: Vec<HopfElement> = pairs
        .iter()
        .map(|(m, h)| HopfElement::from_group_algebra(datum, *m, h))
        .collect();
    let raw_ideal = Ideal::from_elements(datum, &raw)?;
    let ideal = Ideal::from_generators(datum, nf.generators(datum))?;
    if ideal != raw_ideal {
        return Err(IdealError::Internal(format!(
            "normal form {} changed the ideal",
            nf.render(datum)
        )));
    }
    Ok(ideal.with_normal_form(nf))
}

/// `(m_t, S_t)` read off the subspace: `m_t` is the lowest `z`-degree
/// occurring in the ideal and `S_t` the `kG`-support of the degree-`m_t`
/// components. `None` for the zero ideal.
pub fn lowest_term_invariant(ideal: &Ideal) -> Option<(usize, Support)> {
    let datum = ideal.datum();
    let first = *ideal.space().pivots().first()?;
    let (m, _) = datum.basis_pair(first);
    let components: Vec<GroupAlgebraElement> = ideal
        .space()
        .basis_vectors()
        .into_iter()
        .map(|v| HopfElement::from_coeffs(datum, v).component(m))
        .collect();
    Some((m, kg_ideal_support(datum, &components)))
}

/// Normal form read off an arbitrary ideal: `S_m = {i : z^m e_i in I}`,
/// deduplicated as in [`normal_form`]. Returns `None` when these terms do
/// not generate the whole ideal.
pub fn recover_normal_form(ideal: &Ideal) -> Option<NormalForm> {
    let datum = ideal.datum();
    let prims = super::idempotents::central_idempotents(datum);
    let mut terms: Vec<(usize, Support)> = Vec::new();
    for m in (0..datum.n()).rev() {
        let support: Support = (0..prims.len())
            .filter(|&i| {
                let x = HopfElement::from_group_algebra(datum, m, &prims[i].element);
                ideal.space().contains_vector(x.coeffs())
            })
            .collect();
        if !support.is_empty() {
            terms.push((m, support));
        }
    }
    let generates = |terms: &[(usize, Support)]| {
        let nf = NormalForm {
            terms: terms.to_vec(),
        };
        Ideal::from_generators(datum, nf.generators(datum)).is_ok_and(|i| i == *ideal)
    };
    let terms = dedup_lower(terms);
    if !generates(&terms) {
        return None;
    }
    Some(NormalForm { terms })
}

/// Drop each term whose support equals that of the next lower term.
fn dedup_lower(terms: Vec<(usize, Support)>) -> Vec<(usize, Support)> {
    let mut kept: Vec<(usize, Support)> = Vec::with_capacity(terms.len());
    for term in terms.into_iter().rev() {
        if kept.last().map(|(_, s)| s) != Some(&term.1) {
            kept.push(term);
        }
    }
    kept.reverse();
    kept
}
