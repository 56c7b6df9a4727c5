//! Ready-made group data used by the tests, benchmarks and the command line.

use std::sync::Arc;

use crate::field::{Cyclotomic, CyclotomicField, ExactMatrix};
use crate::groups::{build_abelian_named, CharacterTable, FiniteGroup};
use crate::hopf::{DatumError, DatumInput, GroupDatum};

/// Datum over `Z_{n1} x Z_{n2} x ...` with named generators; `chi` indexes
/// characters in mixed radix and `g` is an element label.
pub fn abelian_datum(
    factors: &[u64],
    names: &[&str],
    chi: usize,
    g: &str,
    alpha: i64,
) -> Result<Arc<GroupDatum>, DatumError> {
    let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
    let (group, table) = build_abelian_named(factors, Some(&names))?;
    let g = group
        .index_of(g)
        .ok_or_else(|| DatumError::NotCentral(g.to_string()))?;
    GroupDatum::validate(DatumInput {
        group,
        table,
        chi,
        g,
        alpha,
        irreps: Vec::new(),
    })
}

/// `(K_4, chi, b, 0)` with `chi(b) = chi(c) = -1`: the eight-dimensional
/// algebra with 49 ideals.
pub fn klein() -> Arc<GroupDatum> {
    abelian_datum(&[2, 2], &["b", "c"], 3, "b", 0).expect("valid datum")
}

/// `(Z_m, chi, g, 0)` with `chi(g) = zeta_m`, the Taft algebra of dimension `m^2`.
pub fn taft(m: u64) -> Arc<GroupDatum> {
    abelian_datum(&[m], &["g"], 1, "g", 0).expect("valid datum")
}

/// `(Z_4, chi, g, 1)` with `chi(g) = -1`: non-nilpotent, `n = 2`, `r = 2`.
pub fn z4_non_nilpotent() -> Arc<GroupDatum> {
    abelian_datum(&[4], &["g"], 2, "g", 1).expect("valid datum")
}

/// `(Z_6, chi, g, 1)` with `chi(g) = -1`: non-nilpotent, `n = 2`, `r = 3`.
pub fn z6_non_nilpotent() -> Arc<GroupDatum> {
    abelian_datum(&[6], &["g"], 3, "g", 1).expect("valid datum")
}

/// `(Z_9, chi, g, 1)` with `chi(g) = zeta_3`: non-nilpotent, `n = 3`, `r = 3`.
pub fn z9_non_nilpotent() -> Arc<GroupDatum> {
    abelian_datum(&[9], &["g"], 3, "g", 1).expect("valid datum")
}

/// `S_3 x Z_2` as permutations of `{0, 1, 2}` paired with a sign bit.
/// Element `r^i s^j u^k` has index `6k + 3j + i`, where `r = (0 1 2)`,
/// `s = (0 1)` and `u` generates `Z_2`.
pub fn s3_times_z2_group() -> Arc<FiniteGroup> {
    let perm = |i: usize, j: usize| -> [usize; 3] {
        let r = [1, 2, 0];
        let s = [1, 0, 2];
        let mut p = [0, 1, 2];
        for _ in 0..j {
            p = [s[p[0]], s[p[1]], s[p[2]]];
        }
        for _ in 0..i {
            p = [r[p[0]], r[p[1]], r[p[2]]];
        }
        p
    };
    let perms: Vec<[usize; 3]> = (0..2)
        .flat_map(|j| (0..3).map(move |i| perm(i, j)))
        .collect();
    let find = |p: [usize; 3]| perms.iter().position(|q| *q == p).expect("closed");
    let table = (0..12)
        .map(|a| {
            (0..12)
                .map(|b| {
                    let (pa, pb) = (perms[a % 6], perms[b % 6]);
                    let composed = [pa[pb[0]], pa[pb[1]], pa[pb[2]]];
                    6 * ((a / 6 + b / 6) % 2) + find(composed)
                })
                .collect()
        })
        .collect();
    let labels = (0..12)
        .map(|x| {
            let (i, j, k) = (x % 3, (x % 6) / 3, x / 6);
            let mut s = String::new();
            match i {
                1 => s.push('r'),
                2 => s.push_str("r2"),
                _ => {}
            }
            if j == 1 {
                s.push('s');
            }
            if k == 1 {
                s.push('u');
            }
            if s.is_empty() {
                "1".into()
            } else {
                s
            }
        })
        .collect();
    Arc::new(FiniteGroup::from_table(table, Some(labels)).expect("valid table"))
}

/// Characters of `S_3 x Z_2` in the order (trivial, sign, standard) times
/// (trivial, sign on `Z_2`), the `Z_2` factor varying fastest, together with
/// matrices for every row.
pub fn s3_times_z2_table() -> (CharacterTable, Vec<Vec<ExactMatrix>>) {
    let group = s3_times_z2_group();
    let q = CyclotomicField::get(1);
    let int = |x: i64| Cyclotomic::from_integer(&q, x);
    // standard representation of S_3 on the basis (e0 - e1, e1 - e2)
    let std_rep = |x: usize| -> ExactMatrix {
        let (i, j) = (x % 3, (x % 6) / 3);
        let r = ExactMatrix::from_rows(&q, 2, vec![vec![int(0), int(-1)], vec![int(1), int(-1)]]);
        let s = ExactMatrix::from_rows(&q, 2, vec![vec![int(-1), int(1)], vec![int(0), int(1)]]);
        r.pow(i).matmul(&s.pow(j))
    };
    let mut rows = Vec::new();
    let mut reps = Vec::new();
    for a in 0..3 {
        for b in 0..2 {
            let mats: Vec<ExactMatrix> = (0..12)
                .map(|x| {
                    let z2 = if b == 1 && x / 6 == 1 { -1 } else { 1 };
                    match a {
                        0 => ExactMatrix::scalar(&q, 1, &int(z2)),
                        1 => ExactMatrix::scalar(
                            &q,
                            1,
                            &int(if (x % 6) / 3 == 1 { -z2 } else { z2 }),
                        ),
                        _ => std_rep(x).scaled(&int(z2)),
                    }
                })
                .collect();
            rows.push(mats.iter().map(ExactMatrix::trace).collect());
            reps.push(mats);
        }
    }
    let table = CharacterTable::new(group, rows).expect("valid rows");
    (table, reps)
}

/// `(S_3 x Z_2, chi, u, 0)` with `chi` the sign of the `Z_2` factor.
pub fn s3_times_z2() -> Arc<GroupDatum> {
    let (table, reps) = s3_times_z2_table();
    let group = table.group().clone();
    let u = group.index_of("u").expect("labelled");
    GroupDatum::validate(DatumInput {
        group,
        table,
        chi: 1,
        g: u,
        alpha: 0,
        irreps: reps.into_iter().map(Some).collect(),
    })
    .expect("valid datum")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::validate_table;
    use crate::hopf::DatumKind;

    #[test]
    fn catalog_invariants() {
        assert_eq!(klein().dim(), 8);
        assert_eq!(taft(5).n(), 5);
        let z6 = z6_non_nilpotent();
        assert_eq!(
            (z6.n(), z6.r(), z6.kind()),
            (2, Some(3), DatumKind::NonNilpotent)
        );
        let z9 = z9_non_nilpotent();
        assert_eq!(
            (z9.n(), z9.r(), z9.kind()),
            (3, Some(3), DatumKind::NonNilpotent)
        );
    }

    #[test]
    fn s3_times_z2_is_consistent() {
        let (table, _) = s3_times_z2_table();
        assert!(validate_table(&table).is_valid());
        let d = s3_times_z2();
        assert_eq!(
            (d.n(), d.kind(), d.dim(), d.p()),
            (2, DatumKind::Nilpotent, 24, 6)
        );
        assert!(!d.group().is_abelian());
    }
}
