use std::collections::hash_map::Entry;
use std::collections::HashMap;
use std::sync::Arc;

use rayon::prelude::*;

use super::idempotents::Support;
use super::normal_form::NormalForm;
use super::{Ideal, IdealError};
use crate::field::Cyclotomic;
use crate::hopf::{DatumKind, GroupDatum};

pub const DEFAULT_CAP: u128 = 1_000_000;

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Strict chains `S_1 ⊋ ... ⊋ S_t ⊋ ∅` of subsets of a `p`-set: each element
/// gets one of `t + 1` levels (the last meaning "absent") with the first
/// `t` levels all used.
fn chain_count(t: u32, p: u32) -> Option<u128> {
    let mut total: i128 = 0;
    for i in 0..=t {
        let term = i128::try_from(binomial(t.into(), i.into()))
            .ok()?
            .checked_mul(i128::from(t + 1 - i).checked_pow(p)?)?;
        total = if i % 2 == 0 {
            total.checked_add(term)?
        } else {
            total.checked_sub(term)?
        };
    }
    u128::try_from(total).ok()
}

/// Number of normal-form candidates for nilpotent type with parameters `n`
/// and `p`, excluding the zero ideal. `None` on overflow.
pub fn candidate_count(n: usize, p: usize) -> Option<u128> {
    let mut total: u128 = 0;
    for t in 1..=n.min(p) {
        let c = binomial(n as u128, t as u128).checked_mul(chain_count(t as u32, p as u32)?)?;
        total = total.checked_add(c)?;
    }
    Some(total)
}

/// All `t`-element subsets of `0..n`, each listed in decreasing order.
fn exponent_sets(n: usize, t: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, t: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == t {
            let mut v = cur.clone();
            v.reverse();
            out.push(v);
            return;
        }
        for m in start..n {
            cur.push(m);
            rec(m + 1, n, t, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, t, &mut Vec::new(), &mut out);
    out
}

fn chains(t: usize, p: usize) -> Vec<Vec<Support>> {
    let base = t + 1;
    let total = base.pow(p as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut levels = Vec::with_capacity(p);
        let mut c = code;
        for _ in 0..p {
            levels.push(c % base);
            c /= base;
        }
        if (0..t).any(|l| !levels.contains(&l)) {
            continue;
        }
        out.push(
            (0..t)
                .map(|s| {
                    (0..p)
                        .filter(|&i| levels[i] >= s && levels[i] < t)
                        .collect()
                })
                .collect(),
        );
    }
    out
}

/// Every ideal of a nilpotent-type `H_D`, found by closing each normal-form
/// candidate and removing duplicates. Sorted by dimension, then by the
/// printed normal form.
pub fn enumerate_ideals(datum: &Arc<GroupDatum>, cap: u128) -> Result<Vec<Ideal>, IdealError> {
    if datum.kind() != DatumKind::Nilpotent {
        return Err(IdealError::NotNilpotent);
    }
    let (n, p) = (datum.n(), datum.p());
    let count = candidate_count(n, p).unwrap_or(u128::MAX);
    if count > cap {
        return Err(IdealError::CapExceeded { count, cap });
    }
    let mut candidates = Vec::new();
    for t in 1..=n.min(p) {
        let chain_list = chains(t, p);
        for exps in exponent_sets(n, t) {
            for chain in &chain_list {
                candidates.push(NormalForm::from_terms(
                    exps.iter().copied().zip(chain.iter().cloned()).collect(),
                ));
            }
        }
    }
    let built: Vec<(NormalForm, Ideal)> = candidates
        .into_par_iter()
        .map(|nf| {
            let ideal = Ideal::from_generators(datum, nf.generators(datum))?;
            Ok((nf, ideal))
        })
        .collect::<Result<_, IdealError>>()?;

    // among the candidates for one ideal keep the smallest presentation
    let mut best: HashMap<IdealKey, (String, NormalForm, Ideal)> = HashMap::new();
    for (nf, ideal) in built {
        let text = nf.render(datum);
        match best.entry(key(&ideal)) {
            Entry::Vacant(v) => {
                v.insert((text, nf, ideal));
            }
            Entry::Occupied(mut o) => {
                let cur = &o.get().0;
                if (text.len(), &text) < (cur.len(), cur) {
                    o.insert((text, nf, ideal));
                }
            }
        }
    }
    let mut out = vec![Ideal::zero(datum)];
    let whole = Ideal::whole(datum);
    let has_whole = best.contains_key(&key(&whole));
    best.remove(&key(&out[0]));
    for (_, nf, ideal) in best.into_values() {
        let single = nf.single_generator(datum);
        out.push(ideal.with_generators(vec![single]).with_normal_form(nf));
    }
    if !has_whole {
        out.push(whole);
    }
    out.sort_by_cached_key(|i| (i.dim(), i.normal_form_text()));
    Ok(out)
}

/// Pivots and echelon entries: equal exactly for equal ideals.
type IdealKey = (Vec<usize>, Vec<Cyclotomic>);

fn key(ideal: &Ideal) -> IdealKey {
    (
        ideal.space().pivots().to_vec(),
        ideal.space().basis().entries().to_vec(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(chain_count(1, 4), Some(15));
        assert_eq!(chain_count(2, 4), Some(50));
        assert_eq!(candidate_count(2, 4), Some(80));
        assert_eq!(candidate_count(2, 2), Some(2 * 3 + 2));
        assert_eq!(chains(2, 4).len(), 50);
        assert_eq!(
            exponent_sets(3, 2),
            vec![vec![1, 0], vec![2, 0], vec![2, 1]]
        );
    }

    #[test]
    fn chain_shapes() {
        for chain in chains(3, 4) {
            assert_eq!(chain.len(), 3);
            for w in chain.windows(2) {
                assert!(w[0].is_superset(&w[1]) && w[0] != w[1]);
            }
            assert!(!chain[2].is_empty());
        }
    }
}
