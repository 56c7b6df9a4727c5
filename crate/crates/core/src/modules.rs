//! Explicit matrix models of the indecomposable modules `M(k, i)` and, for
//! non-nilpotent data, the simple modules `P_j`.
//!
//! A module of `k` blocks is laid out as `(V, xV, ..., x^(k-1) V)`, so `z`
//! acts by a strictly lower block shift (plus a wrap-around for `P_j`).

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::field::{Cyclotomic, ExactMatrix};
use crate::hopf::{DatumKind, GroupDatum, HopfElement};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModuleError {
    #[error("character index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("k = {k} outside 1..={n}")]
    LengthOutOfRange { k: usize, n: usize },
    #[error("index {0} lies in Lambda_1; use P:{0} instead")]
    InLambdaOne(usize),
    #[error("index {0} lies in Lambda_0, so P_{0} is not defined")]
    NotInLambdaOne(usize),
    #[error("P_j exists only for non-nilpotent data")]
    NilpotentDatum,
    #[error("no representation matrices supplied for character {0}")]
    MissingRepresentation(usize),
    #[error("no row of the character table equals chi^-1 * chi_{0}")]
    NoTauImage(usize),
}

/// Data attached to the simple `kG`-module `V_i`.
#[derive(Clone, Debug)]
pub struct SimpleModuleInfo {
    pub index: usize,
    pub dim: usize,
    /// `chi_i(g) / d_i`, the scalar by which the central element `g` acts.
    pub gamma: Cyclotomic,
    /// `chi_i(g^n) / d_i`.
    pub lambda: Cyclotomic,
    pub rep: Option<Vec<ExactMatrix>>,
}

pub fn simple_modules(datum: &GroupDatum) -> Vec<SimpleModuleInfo> {
    let table = datum.table();
    table
        .characters()
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let d = Cyclotomic::from_integer(datum.field(), c.degree() as i64);
            let d_inv = d.inv().expect("degree is positive");
            SimpleModuleInfo {
                index: i,
                dim: c.degree(),
                gamma: &c.values()[datum.g()] * &d_inv,
                lambda: &c.values()[datum.g_pow_n()] * &d_inv,
                rep: datum.irrep(i).map(<[ExactMatrix]>::to_vec),
            }
        })
        .collect()
}

/// The permutation `tau` with `chi_{tau(i)} = chi^-1 * chi_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tau {
    perm: Vec<usize>,
    inverse: Vec<usize>,
}

impl Tau {
    pub fn from_perm(perm: Vec<usize>) -> Self {
        let mut inverse = vec![0; perm.len()];
        for (i, &t) in perm.iter().enumerate() {
            inverse[t] = i;
        }
        Tau { perm, inverse }
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.perm[i]
    }

    pub fn apply_inverse(&self, i: usize) -> usize {
        self.inverse[i]
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    /// `tau^l(i)` for any integer `l`.
    pub fn pow(&self, i: usize, l: i64) -> usize {
        let step: &[usize] = if l >= 0 { &self.perm } else { &self.inverse };
        (0..l.unsigned_abs()).fold(i, |acc, _| step[acc])
    }

    pub fn orbit(&self, i: usize) -> Vec<usize> {
        let mut out = vec![i];
        let mut j = self.perm[i];
        while j != i {
            out.push(j);
            j = self.perm[j];
        }
        out
    }

    /// Order of the whole permutation.
    pub fn order(&self) -> usize {
        (0..self.perm.len())
            .map(|i| self.orbit(i).len())
            .fold(1, num_integer::lcm)
    }

    /// Disjoint cycles, each starting at its smallest element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for i in 0..self.perm.len() {
            if seen.insert(i) {
                let orbit = self.orbit(i);
                seen.extend(orbit.iter().copied());
                out.push(orbit);
            }
        }
        out
    }
}

impl fmt::Display for Tau {
    /// Non-trivial cycles; 2-cycles as `a<->b`, longer ones as `(a b c)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .cycles()
            .into_iter()
            .filter(|c| c.len() > 1)
            .map(|c| match c.as_slice() {
                [a, b] => format!("{a}<->{b}"),
                _ => format!(
                    "({})",
                    c.iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>()
                        .join(" ")
                ),
            })
            .collect();
        if parts.is_empty() {
            write!(f, "identity")
        } else {
            write!(f, "{}", parts.join(", "))
        }
    }
}

pub fn compute_tau(datum: &GroupDatum) -> Result<Tau, ModuleError> {
    let table = datum.table();
    let chi = datum.chi();
    let perm = (0..table.len())
        .map(|i| {
            let row: Vec<Cyclotomic> = table
                .character(i)
                .values()
                .iter()
                .enumerate()
                .map(|(h, v)| v * &chi.value(h).inv().expect("root of unity"))
                .collect();
            table.find_row(&row).ok_or(ModuleError::NoTauImage(i))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Tau::from_perm(perm))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IndexPartition {
    Nilpotent {
        omega0: Vec<usize>,
    },
    NonNilpotent {
        lambda0: Vec<usize>,
        lambda1: Vec<usize>,
        /// `tau`-orbits on `lambda1`, each listed from its smallest index.
        orbits: Vec<Vec<usize>>,
    },
}

impl IndexPartition {
    /// Indices `i` for which `M(k, i)` is defined.
    pub fn m_indices(&self) -> &[usize] {
        match self {
            IndexPartition::Nilpotent { omega0 } => omega0,
            IndexPartition::NonNilpotent { lambda0, .. } => lambda0,
        }
    }

    pub fn lambda1(&self) -> &[usize] {
        match self {
            IndexPartition::Nilpotent { .. } => &[],
            IndexPartition::NonNilpotent { lambda1, .. } => lambda1,
        }
    }

    pub fn orbits(&self) -> &[Vec<usize>] {
        match self {
            IndexPartition::Nilpotent { .. } => &[],
            IndexPartition::NonNilpotent { orbits, .. } => orbits,
        }
    }

    pub fn orbit_of(&self, j: usize) -> Option<&[usize]> {
        self.orbits()
            .iter()
            .find(|o| o.contains(&j))
            .map(Vec::as_slice)
    }
}

pub fn partition_indices(datum: &GroupDatum) -> Result<IndexPartition, ModuleError> {
    let p = datum.p();
    if datum.kind() == DatumKind::Nilpotent {
        return Ok(IndexPartition::Nilpotent {
            omega0: (0..p).collect(),
        });
    }
    let tau = compute_tau(datum)?;
    let simples = simple_modules(datum);
    let (lambda0, lambda1): (Vec<usize>, Vec<usize>) =
        (0..p).partition(|&i| simples[i].lambda.is_one());
    let mut orbits = Vec::new();
    let mut seen = BTreeSet::new();
    for &j in &lambda1 {
        if seen.insert(j) {
            let mut orbit = tau.orbit(j);
            seen.extend(orbit.iter().copied());
            orbit.sort_unstable();
            orbits.push(orbit);
        }
    }
    Ok(IndexPartition::NonNilpotent {
        lambda0,
        lambda1,
        orbits,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ModuleLabel {
    M { k: usize, i: usize },
    P { j: usize },
}

impl fmt::Display for ModuleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleLabel::M { k, i } => write!(f, "M({k},{i})"),
            ModuleLabel::P { j } => write!(f, "P_{j}"),
        }
    }
}

/// A finite-dimensional `H_D`-module given by the action of the generators.
#[derive(Clone)]
pub struct ModuleRep {
    pub datum: Arc<GroupDatum>,
    pub label: ModuleLabel,
    pub dim: usize,
    pub act_group: Vec<ExactMatrix>,
    pub act_z: ExactMatrix,
}

impl fmt::Debug for ModuleRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ModuleRep")
            .field("label", &self.label)
            .field("dim", &self.dim)
            .finish()
    }
}

impl ModuleRep {
    /// Matrices of all basis elements `z^l h`, in flat basis order.
    pub fn basis_actions(&self) -> Vec<ExactMatrix> {
        let d = &self.datum;
        let mut zl = ExactMatrix::identity(d.field(), self.dim);
        let mut out = Vec::with_capacity(d.dim());
        for _ in 0..d.n() {
            for h in 0..d.group().size() {
                out.push(zl.matmul(&self.act_group[h]));
            }
            zl = self.act_z.matmul(&zl);
        }
        out
    }

    /// The matrix by which `a` acts.
    pub fn action(&self, a: &HopfElement) -> ExactMatrix {
        let mut acc = ExactMatrix::zeros(self.datum.field(), self.dim, self.dim);
        for (c, m) in a.coeffs().iter().zip(self.basis_actions()) {
            if !c.is_zero() {
                acc = acc.add(&m.scaled(c));
            }
        }
        acc
    }
}

fn irrep_for(datum: &GroupDatum, i: usize) -> Result<&[ExactMatrix], ModuleError> {
    if i >= datum.p() {
        return Err(ModuleError::IndexOutOfRange(i));
    }
    datum.irrep(i).ok_or(ModuleError::MissingRepresentation(i))
}

/// Block-diagonal group action: `s` acts on block `l` by `chi^-l(s) rep(s)`.
fn block_group_action(datum: &GroupDatum, rep: &[ExactMatrix], blocks: usize) -> Vec<ExactMatrix> {
    let d = rep[0].rows();
    (0..datum.group().size())
        .map(|s| {
            let mut m = ExactMatrix::zeros(datum.field(), blocks * d, blocks * d);
            for l in 0..blocks {
                let f = datum.chi_inv_pow(s, l % datum.n());
                for r in 0..d {
                    for c in 0..d {
                        m.set(l * d + r, l * d + c, rep[s].get(r, c) * f);
                    }
                }
            }
            m
        })
        .collect()
}

/// Lower block shift with an optional scalar on the wrap from the top block to block 0.
fn block_shift(
    datum: &GroupDatum,
    d: usize,
    blocks: usize,
    wrap: Option<&Cyclotomic>,
) -> ExactMatrix {
    let mut z = ExactMatrix::zeros(datum.field(), blocks * d, blocks * d);
    for l in 0..blocks.saturating_sub(1) {
        for r in 0..d {
            z.set((l + 1) * d + r, l * d + r, datum.one_scalar());
        }
    }
    if let Some(w) = wrap {
        for r in 0..d {
            z.set(r, (blocks - 1) * d + r, w.clone());
        }
    }
    z
}

pub fn build_m(datum: &Arc<GroupDatum>, k: usize, i: usize) -> Result<ModuleRep, ModuleError> {
    let rep = irrep_for(datum, i)?;
    if k == 0 || k > datum.n() {
        return Err(ModuleError::LengthOutOfRange { k, n: datum.n() });
    }
    if let IndexPartition::NonNilpotent { lambda1, .. } = partition_indices(datum)? {
        if lambda1.contains(&i) {
            return Err(ModuleError::InLambdaOne(i));
        }
    }
    let d = rep[0].rows();
    Ok(ModuleRep {
        datum: datum.clone(),
        label: ModuleLabel::M { k, i },
        dim: k * d,
        act_group: block_group_action(datum, rep, k),
        act_z: block_shift(datum, d, k, None),
    })
}

pub fn build_p(datum: &Arc<GroupDatum>, j: usize) -> Result<ModuleRep, ModuleError> {
    if datum.kind() == DatumKind::Nilpotent {
        return Err(ModuleError::NilpotentDatum);
    }
    let rep = irrep_for(datum, j)?;
    let info = &simple_modules(datum)[j];
    if info.lambda.is_one() {
        return Err(ModuleError::NotInLambdaOne(j));
    }
    let n = datum.n();
    let d = rep[0].rows();
    let wrap = &info.lambda - &datum.one_scalar();
    Ok(ModuleRep {
        datum: datum.clone(),
        label: ModuleLabel::P { j },
        dim: n * d,
        act_group: block_group_action(datum, rep, n),
        act_z: block_shift(datum, d, n, Some(&wrap)),
    })
}

/// Outcome of [`module_verify`]: `failure` names the first relation that broke.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleCheck {
    pub failure: Option<String>,
}

impl ModuleCheck {
    pub fn ok(&self) -> bool {
        self.failure.is_none()
    }
}

/// Check that the matrices satisfy the defining relations of `H_D`.
pub fn module_verify(m: &ModuleRep) -> ModuleCheck {
    let d = &m.datum;
    let group = d.group();
    let fail = |s: String| ModuleCheck { failure: Some(s) };
    if m.act_group.len() != group.size() {
        return fail(format!(
            "{} group matrices for {} elements",
            m.act_group.len(),
            group.size()
        ));
    }
    let shape_ok = |x: &ExactMatrix| x.rows() == m.dim && x.cols() == m.dim;
    if !shape_ok(&m.act_z) || !m.act_group.iter().all(shape_ok) {
        return fail("matrix shape does not match the module dimension".into());
    }
    if m.act_group[group.identity()] != ExactMatrix::identity(d.field(), m.dim) {
        return fail("identity element does not act as the identity".into());
    }
    for x in 0..group.size() {
        for y in 0..group.size() {
            if m.act_group[x].matmul(&m.act_group[y]) != m.act_group[group.mul(x, y)] {
                return fail(format!(
                    "group action not multiplicative at ({}, {})",
                    group.label(x),
                    group.label(y)
                ));
            }
        }
    }
    for s in 0..group.size() {
        let lhs = m.act_z.matmul(&m.act_group[s]);
        let rhs = m.act_group[s].matmul(&m.act_z).scaled(d.chi().value(s));
        if lhs != rhs {
            return fail(format!("z {0} != chi({0}) {0} z", group.label(s)));
        }
    }
    let zn = m.act_z.pow(d.n());
    let expected = if d.alpha() == 0 {
        ExactMatrix::zeros(d.field(), m.dim, m.dim)
    } else {
        m.act_group[d.g_pow_n()].sub(&ExactMatrix::identity(d.field(), m.dim))
    };
    if zn != expected {
        return fail("z^n != alpha (g^n - 1)".into());
    }
    ModuleCheck { failure: None }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::build_abelian_named;
    use crate::hopf::DatumInput;

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

    #[test]
    fn klein_tau() {
        let tau = compute_tau(&klein()).unwrap();
        assert_eq!(tau.perm(), &[3, 2, 1, 0]);
        assert_eq!(tau.to_string(), "0<->3, 1<->2");
        assert_eq!(tau.order(), 2);
    }

    #[test]
    fn klein_partition_is_everything() {
        assert_eq!(
            partition_indices(&klein()).unwrap(),
            IndexPartition::Nilpotent {
                omega0: vec![0, 1, 2, 3]
            }
        );
    }

    #[test]
    fn z4_partition_and_p() {
        let d = datum(&[4], &["g"], 2, "g", 1);
        let part = partition_indices(&d).unwrap();
        assert_eq!(part.m_indices(), &[0, 2]);
        assert_eq!(part.lambda1(), &[1, 3]);
        assert_eq!(part.orbits(), &[vec![1, 3]]);
        let p = build_p(&d, 1).unwrap();
        assert_eq!(p.act_z.get(0, 1), &Cyclotomic::from_integer(d.field(), -2));
        assert!(module_verify(&p).ok());
        assert_eq!(build_m(&d, 1, 1).unwrap_err(), ModuleError::InLambdaOne(1));
        assert_eq!(build_p(&d, 0).unwrap_err(), ModuleError::NotInLambdaOne(0));
        assert_eq!(
            build_p(&klein(), 0).unwrap_err(),
            ModuleError::NilpotentDatum
        );
    }

    #[test]
    fn klein_m20_layout() {
        let d = klein();
        let m = build_m(&d, 2, 0).unwrap();
        let b = d.group().index_of("b").unwrap();
        let minus = Cyclotomic::from_integer(d.field(), -1);
        assert!(m.act_group[b].get(0, 0).is_one());
        assert_eq!(m.act_group[b].get(1, 1), &minus);
        assert!(m.act_z.get(1, 0).is_one());
        assert!(m.act_z.get(0, 1).is_zero());
    }

    #[test]
    fn klein_modules_verify() {
        let d = klein();
        for k in 1..=2 {
            for i in 0..4 {
                assert!(module_verify(&build_m(&d, k, i).unwrap()).ok());
            }
        }
        assert_eq!(
            build_m(&d, 3, 0).unwrap_err(),
            ModuleError::LengthOutOfRange { k: 3, n: 2 }
        );
    }

    #[test]
    fn transposed_z_is_rejected() {
        // for n = 2 the transpose still satisfies the relations, so use n = 3
        let d = datum(&[3], &["g"], 1, "g", 0);
        let mut m = build_m(&d, 2, 0).unwrap();
        assert!(module_verify(&m).ok());
        m.act_z = m.act_z.transpose();
        assert!(!module_verify(&m).ok());
    }

    #[test]
    fn trivial_simple_module() {
        let d = klein();
        let m = build_m(&d, 1, 0).unwrap();
        assert!(m.act_z.is_zero());
        assert!(m.act_group.iter().all(|x| x.get(0, 0).is_one()));
    }
}
