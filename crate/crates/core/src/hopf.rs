//! The Hopf algebra `H_D` attached to a group datum `(G, chi, g, alpha)`.
//!
//! As an algebra `H_D` is generated by `kG` and one extra element `z` with
//! `z^n = alpha (g^n - 1)` and `z s = chi(s) s z`. Elements are stored in the
//! basis `z^l h` (`0 <= l < n`, `h` in `G`), flattened with the exponent as the
//! major index.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use rand::Rng;

use crate::field::{Cyclotomic, CyclotomicField, ExactMatrix, Rational};
use crate::groups::{CharacterTable, FiniteGroup, GroupError, LinearCharacter};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DatumError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("g = {0} is not central in G")]
    NotCentral(String),
    #[error("n=1: chi(g) = 1, so H_D is just the group algebra")]
    TrivialOrder,
    #[error("alpha must be 0 or 1, got {0}")]
    BadAlpha(i64),
    #[error("neither alpha(g^n - 1) = 0 nor chi^n = 1 (n = {0})")]
    NoNilpotencyCondition(usize),
    #[error("g = {0} is not an element of G")]
    UnknownElement(usize),
    #[error("representation for character {index}: {reason}")]
    BadRepresentation { index: usize, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HopfError {
    #[error("elements belong to different group data")]
    DatumMismatch,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DatumKind {
    /// `z^n = 0`
    Nilpotent,
    /// `z^n = g^n - 1`, with `chi^n` trivial
    NonNilpotent,
}

impl fmt::Display for DatumKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DatumKind::Nilpotent => write!(f, "nilpotent"),
            DatumKind::NonNilpotent => write!(f, "non-nilpotent"),
        }
    }
}

/// Raw, unvalidated datum.
#[derive(Clone, Debug)]
pub struct DatumInput {
    pub group: Arc<FiniteGroup>,
    pub table: CharacterTable,
    /// Index of a degree-one row of the table.
    pub chi: usize,
    pub g: usize,
    pub alpha: i64,
    /// Matrices of each irreducible representation, one per group element.
    /// Built automatically for rows of degree one when missing.
    pub irreps: Vec<Option<Vec<ExactMatrix>>>,
}

/// A validated and normalized group datum.
pub struct GroupDatum {
    group: Arc<FiniteGroup>,
    table: CharacterTable,
    field: Arc<CyclotomicField>,
    chi_index: usize,
    chi: LinearCharacter,
    g: usize,
    alpha: u8,
    q: Cyclotomic,
    n: usize,
    r: Option<usize>,
    kind: DatumKind,
    irreps: Vec<Option<Vec<ExactMatrix>>>,
    /// `chi_inv_pow[h * n + b] = chi(h)^(-b)`
    chi_inv_pow: Vec<Cyclotomic>,
    g_pow_n: usize,
}

impl fmt::Debug for GroupDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupDatum")
            .field("order", &self.group.size())
            .field("chi", &self.chi_index)
            .field("g", &self.group.label(self.g))
            .field("alpha", &self.alpha)
            .field("n", &self.n)
            .field("kind", &self.kind)
            .finish()
    }
}

impl GroupDatum {
    /// Validate a datum and normalize `alpha` (nilpotent type forces 0).
    pub fn validate(input: DatumInput) -> Result<Arc<GroupDatum>, DatumError> {
        let DatumInput {
            group,
            table,
            chi,
            g,
            alpha,
            irreps,
        } = input;
        if g >= group.size() {
            return Err(DatumError::UnknownElement(g));
        }
        if alpha != 0 && alpha != 1 {
            return Err(DatumError::BadAlpha(alpha));
        }
        let field = CyclotomicField::get(table.field_order());
        let rows: Vec<Vec<Cyclotomic>> = table
            .characters()
            .iter()
            .map(|c| {
                c.values()
                    .iter()
                    .map(|v| v.promote(field.order()))
                    .collect()
            })
            .collect();
        let table = CharacterTable::new(group.clone(), rows)?;
        let chi_char = table.linear_character(chi)?;
        if !group.center().contains(&g) {
            return Err(DatumError::NotCentral(group.label(g).to_string()));
        }
        let q = chi_char.value(g).clone();
        let n = q.root_order().expect("character values are roots of unity") as usize;
        if n == 1 {
            return Err(DatumError::TrivialOrder);
        }
        let g_pow_n = group.pow(g, n as i64);
        let chi_n_trivial = chi_char.pow(n as i64).is_trivial();
        let (kind, alpha) = if alpha == 0 || g_pow_n == group.identity() {
            (DatumKind::Nilpotent, 0)
        } else if chi_n_trivial {
            (DatumKind::NonNilpotent, 1)
        } else {
            return Err(DatumError::NoNilpotencyCondition(n));
        };
        let r = match kind {
            DatumKind::NonNilpotent => Some(group.element_order(g) / n),
            DatumKind::Nilpotent => None,
        };
        let mut chi_inv_pow = Vec::with_capacity(group.size() * n);
        for h in 0..group.size() {
            let inv = chi_char.value(h).inv().expect("root of unity");
            let mut acc = Cyclotomic::one(&field);
            for _ in 0..n {
                chi_inv_pow.push(acc.clone());
                acc = &acc * &inv;
            }
        }
        let irreps = complete_irreps(&group, &table, &field, irreps)?;
        Ok(Arc::new(GroupDatum {
            group,
            table,
            field,
            chi_index: chi,
            chi: chi_char,
            g,
            alpha,
            q,
            n,
            r,
            kind,
            irreps,
            chi_inv_pow,
            g_pow_n,
        }))
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn table(&self) -> &CharacterTable {
        &self.table
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn chi(&self) -> &LinearCharacter {
        &self.chi
    }

    pub fn chi_index(&self) -> usize {
        self.chi_index
    }

    pub fn g(&self) -> usize {
        self.g
    }

    pub fn alpha(&self) -> u8 {
        self.alpha
    }

    /// `q = chi(g)`.
    pub fn q(&self) -> &Cyclotomic {
        &self.q
    }

    /// Multiplicative order of `q`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// `order(g) / n` for non-nilpotent data.
    pub fn r(&self) -> Option<usize> {
        self.r
    }

    pub fn kind(&self) -> DatumKind {
        self.kind
    }

    /// Number of irreducible characters.
    pub fn p(&self) -> usize {
        self.table.len()
    }

    /// `dim H_D = n |G|`.
    pub fn dim(&self) -> usize {
        self.n * self.group.size()
    }

    /// The element `g^n`.
    pub fn g_pow_n(&self) -> usize {
        self.g_pow_n
    }

    pub fn irrep(&self, i: usize) -> Option<&[ExactMatrix]> {
        self.irreps.get(i).and_then(|r| r.as_deref())
    }

    pub fn basis_index(&self, l: usize, h: usize) -> usize {
        l * self.group.size() + h
    }

    /// `(l, h)` for a flat basis index.
    pub fn basis_pair(&self, idx: usize) -> (usize, usize) {
        (idx / self.group.size(), idx % self.group.size())
    }

    pub fn basis_label(&self, idx: usize) -> String {
        let (l, h) = self.basis_pair(idx);
        let zpart = match l {
            0 => String::new(),
            1 => "z".to_string(),
            _ => format!("z^{l}"),
        };
        match (zpart.is_empty(), h == self.group.identity()) {
            (true, _) => self.group.label(h).to_string(),
            (false, true) => zpart,
            (false, false) => format!("{zpart}*{}", self.group.label(h)),
        }
    }

    pub(crate) fn chi_inv_pow(&self, h: usize, b: usize) -> &Cyclotomic {
        &self.chi_inv_pow[h * self.n + b]
    }

    pub fn zero_scalar(&self) -> Cyclotomic {
        Cyclotomic::zero(&self.field)
    }

    pub fn one_scalar(&self) -> Cyclotomic {
        Cyclotomic::one(&self.field)
    }

    /// Product of two basis elements as a sparse list of `(index, coefficient)`.
    ///
    /// `(z^a h)(z^b h') = chi(h)^(-b) z^(a+b) h h'`, and `z^(a+b)` with
    /// `a + b >= n` is rewritten through `z^n = alpha (g^n - 1)`.
    pub fn basis_product(&self, x: usize, y: usize) -> Vec<(usize, Cyclotomic)> {
        let (a, h) = self.basis_pair(x);
        let (b, h2) = self.basis_pair(y);
        let coeff = self.chi_inv_pow(h, b).clone();
        let hh = self.group.mul(h, h2);
        let total = a + b;
        if total < self.n {
            return vec![(self.basis_index(total, hh), coeff)];
        }
        if self.alpha == 0 {
            return Vec::new();
        }
        let c = total - self.n;
        let shifted = self.group.mul(self.g_pow_n, hh);
        vec![
            (self.basis_index(c, shifted), coeff.clone()),
            (self.basis_index(c, hh), -coeff),
        ]
    }
}

fn complete_irreps(
    group: &FiniteGroup,
    table: &CharacterTable,
    field: &Arc<CyclotomicField>,
    supplied: Vec<Option<Vec<ExactMatrix>>>,
) -> Result<Vec<Option<Vec<ExactMatrix>>>, DatumError> {
    let mut out = Vec::with_capacity(table.len());
    for (i, c) in table.characters().iter().enumerate() {
        let given = supplied.get(i).cloned().flatten();
        let rep = match given {
            Some(mats) => {
                let mats: Vec<ExactMatrix> = mats
                    .into_iter()
                    .map(|m| {
                        let rows = m
                            .row_vectors()
                            .into_iter()
                            .map(|r| r.iter().map(|x| x.promote(field.order())).collect())
                            .collect();
                        ExactMatrix::from_rows(field, m.cols(), rows)
                    })
                    .collect();
                check_irrep(group, c.values(), c.degree(), &mats)
                    .map_err(|reason| DatumError::BadRepresentation { index: i, reason })?;
                Some(mats)
            }
            None if c.degree() == 1 => Some(
                c.values()
                    .iter()
                    .map(|v| ExactMatrix::scalar(field, 1, v))
                    .collect(),
            ),
            None => None,
        };
        out.push(rep);
    }
    Ok(out)
}

/// Homomorphism and trace checks for a user-supplied representation.
fn check_irrep(
    group: &FiniteGroup,
    character: &[Cyclotomic],
    degree: usize,
    mats: &[ExactMatrix],
) -> Result<(), String> {
    if mats.len() != group.size() {
        return Err(format!(
            "{} matrices for {} elements",
            mats.len(),
            group.size()
        ));
    }
    if let Some(m) = mats
        .iter()
        .find(|m| m.rows() != degree || m.cols() != degree)
    {
        return Err(format!(
            "matrix of shape {}x{}, expected {degree}x{degree}",
            m.rows(),
            m.cols()
        ));
    }
    for x in 0..group.size() {
        if mats[x].trace() != character[x] {
            return Err(format!(
                "trace at {} does not match the character",
                group.label(x)
            ));
        }
        for y in 0..group.size() {
            if mats[x].matmul(&mats[y]) != mats[group.mul(x, y)] {
                return Err(format!(
                    "not a homomorphism at ({}, {})",
                    group.label(x),
                    group.label(y)
                ));
            }
        }
    }
    Ok(())
}

/// An element of the group algebra `kG`, one coefficient per group element.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    coeffs: Vec<Cyclotomic>,
}

impl GroupAlgebraElement {
    pub fn zero(datum: &GroupDatum) -> Self {
        GroupAlgebraElement {
            coeffs: vec![datum.zero_scalar(); datum.group.size()],
        }
    }

    pub fn one(datum: &GroupDatum) -> Self {
        Self::group_element(datum, datum.group.identity())
    }

    pub fn group_element(datum: &GroupDatum, h: usize) -> Self {
        let mut out = Self::zero(datum);
        out.coeffs[h] = datum.one_scalar();
        out
    }

    pub fn from_coeffs(coeffs: Vec<Cyclotomic>) -> Self {
        GroupAlgebraElement { coeffs }
    }

    pub fn coeffs(&self) -> &[Cyclotomic] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Cyclotomic::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        GroupAlgebraElement {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        GroupAlgebraElement {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        GroupAlgebraElement {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &Self, group: &FiniteGroup) -> Self {
        let field = self.coeffs[0].field().clone();
        let mut out = vec![Cyclotomic::zero(&field); group.size()];
        for (x, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (y, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[group.mul(x, y)] += &(a * b);
                }
            }
        }
        GroupAlgebraElement { coeffs: out }
    }
}

impl fmt::Debug for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(h, c)| format!("({c})*g{h}"))
            .collect();
        write!(
            f,
            "{}",
            if terms.is_empty() {
                "0".into()
            } else {
                terms.join(" + ")
            }
        )
    }
}

/// `sigma^m(h)`: `sigma(s) = chi(s) s` on group elements, extended linearly.
/// Satisfies `z^m h = sigma^m(h) z^m`.
pub fn sigma(datum: &GroupDatum, h: &GroupAlgebraElement, m: usize) -> GroupAlgebraElement {
    GroupAlgebraElement {
        coeffs: h
            .coeffs
            .iter()
            .enumerate()
            .map(|(x, c)| c * &datum.chi.value(x).pow(m as i64))
            .collect(),
    }
}

/// An element of `H_D`.
#[derive(Clone)]
pub struct HopfElement {
    datum: Arc<GroupDatum>,
    coeffs: Vec<Cyclotomic>,
}

impl PartialEq for HopfElement {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.datum, &other.datum) && self.coeffs == other.coeffs
    }
}

impl Eq for HopfElement {}

impl HopfElement {
    pub fn zero(datum: &Arc<GroupDatum>) -> Self {
        HopfElement {
            datum: datum.clone(),
            coeffs: vec![datum.zero_scalar(); datum.dim()],
        }
    }

    pub fn one(datum: &Arc<GroupDatum>) -> Self {
        Self::basis(datum, 0, datum.group.identity())
    }

    /// The basis element `z^l h`.
    pub fn basis(datum: &Arc<GroupDatum>, l: usize, h: usize) -> Self {
        let mut out = Self::zero(datum);
        out.coeffs[datum.basis_index(l, h)] = datum.one_scalar();
        out
    }

    pub fn from_index(datum: &Arc<GroupDatum>, idx: usize) -> Self {
        let mut out = Self::zero(datum);
        out.coeffs[idx] = datum.one_scalar();
        out
    }

    pub fn z(datum: &Arc<GroupDatum>) -> Self {
        Self::z_power(datum, 1)
    }

    /// `z^l` for any `l >= 0`, reduced through the defining relation.
    pub fn z_power(datum: &Arc<GroupDatum>, l: usize) -> Self {
        let z = if datum.n > 1 {
            Self::basis(datum, 1, datum.group.identity())
        } else {
            unreachable!("validated data have n >= 2")
        };
        let mut acc = Self::one(datum);
        for _ in 0..l {
            acc = &acc * &z;
        }
        acc
    }

    pub fn group_element(datum: &Arc<GroupDatum>, h: usize) -> Self {
        Self::basis(datum, 0, h)
    }

    pub fn scalar(datum: &Arc<GroupDatum>, c: &Cyclotomic) -> Self {
        Self::one(datum).scale(c)
    }

    /// `z^m h` for a group-algebra element `h`.
    pub fn from_group_algebra(datum: &Arc<GroupDatum>, m: usize, h: &GroupAlgebraElement) -> Self {
        assert!(m < datum.n, "exponent {m} out of range");
        let mut out = Self::zero(datum);
        for (x, c) in h.coeffs.iter().enumerate() {
            out.coeffs[datum.basis_index(m, x)] = c.clone();
        }
        out
    }

    pub fn from_coeffs(datum: &Arc<GroupDatum>, coeffs: Vec<Cyclotomic>) -> Self {
        assert_eq!(coeffs.len(), datum.dim());
        HopfElement {
            datum: datum.clone(),
            coeffs,
        }
    }

    pub fn datum(&self) -> &Arc<GroupDatum> {
        &self.datum
    }

    pub fn coeffs(&self) -> &[Cyclotomic] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Cyclotomic> {
        self.coeffs
    }

    pub fn coeff(&self, l: usize, h: usize) -> &Cyclotomic {
        &self.coeffs[self.datum.basis_index(l, h)]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Cyclotomic::is_zero)
    }

    /// The degree-`l` component as a group-algebra element.
    pub fn component(&self, l: usize) -> GroupAlgebraElement {
        let g = self.datum.group.size();
        GroupAlgebraElement::from_coeffs(self.coeffs[l * g..(l + 1) * g].to_vec())
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        HopfElement {
            datum: self.datum.clone(),
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    fn check_same(&self, other: &HopfElement) -> Result<(), HopfError> {
        if Arc::ptr_eq(&self.datum, &other.datum) {
            Ok(())
        } else {
            Err(HopfError::DatumMismatch)
        }
    }

    pub fn checked_add(&self, other: &HopfElement) -> Result<HopfElement, HopfError> {
        self.check_same(other)?;
        Ok(HopfElement {
            datum: self.datum.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn checked_sub(&self, other: &HopfElement) -> Result<HopfElement, HopfError> {
        self.check_same(other)?;
        Ok(HopfElement {
            datum: self.datum.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// The product in `H_D`.
    pub fn checked_mul(&self, other: &HopfElement) -> Result<HopfElement, HopfError> {
        self.check_same(other)?;
        Ok(HopfElement {
            datum: self.datum.clone(),
            coeffs: mul_coeffs(&self.datum, &self.coeffs, &other.coeffs),
        })
    }

    pub fn pow(&self, k: usize) -> HopfElement {
        let mut acc = HopfElement::one(&self.datum);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }
}

/// Product of coefficient vectors in the datum's basis.
pub(crate) fn mul_coeffs(
    datum: &GroupDatum,
    a: &[Cyclotomic],
    b: &[Cyclotomic],
) -> Vec<Cyclotomic> {
    let mut out = vec![datum.zero_scalar(); datum.dim()];
    for (x, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (y, cb) in b.iter().enumerate() {
            if cb.is_zero() {
                continue;
            }
            let ab = ca * cb;
            for (idx, c) in datum.basis_product(x, y) {
                out[idx] += &(&ab * &c);
            }
        }
    }
    out
}

/// `basis_element * v` for a single basis index.
pub(crate) fn left_mul_basis(datum: &GroupDatum, x: usize, v: &[Cyclotomic]) -> Vec<Cyclotomic> {
    let mut out = vec![datum.zero_scalar(); datum.dim()];
    for (y, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (idx, k) in datum.basis_product(x, y) {
            out[idx] += &(c * &k);
        }
    }
    out
}

/// `v * basis_element` for a single basis index.
pub(crate) fn right_mul_basis(datum: &GroupDatum, v: &[Cyclotomic], y: usize) -> Vec<Cyclotomic> {
    let mut out = vec![datum.zero_scalar(); datum.dim()];
    for (x, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (idx, k) in datum.basis_product(x, y) {
            out[idx] += &(c * &k);
        }
    }
    out
}

macro_rules! hopf_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&HopfElement> for &HopfElement {
            type Output = HopfElement;
            /// Panics when the operands come from different data; use the
            /// `checked_*` methods to get an error instead.
            fn $method(self, rhs: &HopfElement) -> HopfElement {
                self.$checked(rhs)
                    .expect("operands from different group data")
            }
        }
        impl $trait<HopfElement> for HopfElement {
            type Output = HopfElement;
            fn $method(self, rhs: HopfElement) -> HopfElement {
                (&self).$method(&rhs)
            }
        }
    };
}

hopf_binop!(Add, add, checked_add);
hopf_binop!(Sub, sub, checked_sub);
hopf_binop!(Mul, mul, checked_mul);

impl Neg for &HopfElement {
    type Output = HopfElement;
    fn neg(self) -> HopfElement {
        HopfElement {
            datum: self.datum.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for HopfElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (idx, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let label = self.datum.basis_label(idx);
            let text = c.to_string();
            let (neg, mag) = match text.strip_prefix('-') {
                Some(rest) if !rest.contains(' ') => (true, rest.to_string()),
                _ => (false, text),
            };
            let coeff = if mag.contains(' ') {
                format!("({mag})")
            } else {
                mag
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            match (coeff.as_str(), label.as_str()) {
                ("1", l) => write!(f, "{l}")?,
                (c, "1") => write!(f, "{c}")?,
                (c, l) => write!(f, "{c}*{l}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for HopfElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Random element with small integer coordinates on a random subset of
/// basis elements (about half of them), scaled into the datum's field by
/// random roots of unity.
pub fn random_element<R: Rng + ?Sized>(datum: &Arc<GroupDatum>, rng: &mut R) -> HopfElement {
    let order = datum.field.order();
    let coeffs = (0..datum.dim())
        .map(|_| {
            if rng.gen_bool(0.5) {
                return datum.zero_scalar();
            }
            let k: i64 = rng.gen_range(-2..=2);
            let root = Cyclotomic::root_of_unity(order, rng.gen_range(0..order as i64));
            root.scale(&Rational::from_integer(k.into()))
        })
        .collect();
    HopfElement::from_coeffs(datum, coeffs)
}

/// Element of `H (x) H`, sparse over pairs of basis indices.
#[derive(Clone)]
pub struct TensorElement {
    datum: Arc<GroupDatum>,
    terms: BTreeMap<(usize, usize), Cyclotomic>,
}

impl PartialEq for TensorElement {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.datum, &other.datum) && self.terms == other.terms
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .terms
            .iter()
            .map(|((a, b), c)| {
                format!(
                    "({c}) {} (x) {}",
                    self.datum.basis_label(*a),
                    self.datum.basis_label(*b)
                )
            })
            .collect();
        write!(
            f,
            "{}",
            if terms.is_empty() {
                "0".into()
            } else {
                terms.join(" + ")
            }
        )
    }
}

fn add_term<K: Ord>(map: &mut BTreeMap<K, Cyclotomic>, key: K, value: Cyclotomic) {
    if value.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(key) {
        Entry::Vacant(e) => {
            e.insert(value);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += &value;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

impl TensorElement {
    pub fn zero(datum: &Arc<GroupDatum>) -> Self {
        TensorElement {
            datum: datum.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// `x (x) y` for basis indices.
    pub fn basis(datum: &Arc<GroupDatum>, x: usize, y: usize) -> Self {
        let mut out = Self::zero(datum);
        out.terms.insert((x, y), datum.one_scalar());
        out
    }

    pub fn terms(&self) -> &BTreeMap<(usize, usize), Cyclotomic> {
        &self.terms
    }

    pub fn add(&self, other: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            add_term(&mut out.terms, *k, v.clone());
        }
        out
    }

    /// `(a (x) b)(c (x) d) = ac (x) bd`
    pub fn mul(&self, other: &TensorElement) -> TensorElement {
        let d = &self.datum;
        let mut out = TensorElement::zero(d);
        for (&(a, b), c1) in &self.terms {
            for (&(c, e), c2) in &other.terms {
                let left = d.basis_product(a, c);
                if left.is_empty() {
                    continue;
                }
                let right = d.basis_product(b, e);
                let c12 = c1 * c2;
                for (i, ci) in &left {
                    for (j, cj) in &right {
                        add_term(&mut out.terms, (*i, *j), &c12 * &(ci * cj));
                    }
                }
            }
        }
        out
    }
}

/// Comultiplication, counit and antipode on `H_D`.
///
/// `Delta(z) = z (x) g + 1 (x) z`, `Delta(s) = s (x) s`, `eps(z) = 0`,
/// `eps(s) = 1`, `S(z) = -z g^-1`, `S(s) = s^-1`. `Delta` on `z^l h` is
/// obtained by powering `Delta(z)` inside `H (x) H`.
pub struct Coalgebra {
    datum: Arc<GroupDatum>,
    delta_basis: Vec<TensorElement>,
    antipode_basis: Vec<HopfElement>,
}

impl Coalgebra {
    pub fn new(datum: &Arc<GroupDatum>) -> Self {
        let group = datum.group();
        let id = group.identity();
        let z = datum.basis_index(1, id);
        let g = datum.basis_index(0, datum.g());
        let one = datum.basis_index(0, id);
        let delta_z = TensorElement::basis(datum, z, g).add(&TensorElement::basis(datum, one, z));
        let mut delta_zl = vec![TensorElement::basis(datum, one, one)];
        for l in 1..datum.n() {
            delta_zl.push(delta_zl[l - 1].mul(&delta_z));
        }
        let mut delta_basis = Vec::with_capacity(datum.dim());
        for dl in &delta_zl {
            for h in 0..group.size() {
                let hh = datum.basis_index(0, h);
                delta_basis.push(dl.mul(&TensorElement::basis(datum, hh, hh)));
            }
        }
        let s_z =
            -&(&HopfElement::z(datum) * &HopfElement::group_element(datum, group.inv(datum.g())));
        let mut antipode_basis = Vec::with_capacity(datum.dim());
        for l in 0..datum.n() {
            let s_zl = s_z.pow(l);
            for h in 0..group.size() {
                // anti-multiplicative: S(z^l h) = S(h) S(z)^l
                antipode_basis.push(&HopfElement::group_element(datum, group.inv(h)) * &s_zl);
            }
        }
        Coalgebra {
            datum: datum.clone(),
            delta_basis,
            antipode_basis,
        }
    }

    pub fn delta(&self, a: &HopfElement) -> TensorElement {
        let mut out = TensorElement::zero(&self.datum);
        for (idx, c) in a.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (k, v) in &self.delta_basis[idx].terms {
                add_term(&mut out.terms, *k, c * v);
            }
        }
        out
    }

    pub fn counit(&self, a: &HopfElement) -> Cyclotomic {
        let mut acc = self.datum.zero_scalar();
        for h in 0..self.datum.group().size() {
            acc += a.coeff(0, h);
        }
        acc
    }

    pub fn antipode(&self, a: &HopfElement) -> HopfElement {
        let mut out = HopfElement::zero(&self.datum);
        for (idx, c) in a.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (dst, v) in out.coeffs.iter_mut().zip(&self.antipode_basis[idx].coeffs) {
                if !v.is_zero() {
                    *dst += &(c * v);
                }
            }
        }
        out
    }

    fn counit_basis(&self, idx: usize) -> Cyclotomic {
        let (l, _) = self.datum.basis_pair(idx);
        if l == 0 {
            self.datum.one_scalar()
        } else {
            self.datum.zero_scalar()
        }
    }

    fn coassociativity_holds(&self, idx: usize) -> bool {
        let mut left: BTreeMap<(usize, usize, usize), Cyclotomic> = BTreeMap::new();
        let mut right: BTreeMap<(usize, usize, usize), Cyclotomic> = BTreeMap::new();
        for (&(a, b), c) in &self.delta_basis[idx].terms {
            for (&(a1, a2), c1) in &self.delta_basis[a].terms {
                add_term(&mut left, (a1, a2, b), c * c1);
            }
            for (&(b1, b2), c2) in &self.delta_basis[b].terms {
                add_term(&mut right, (a, b1, b2), c * c2);
            }
        }
        left == right
    }

    fn counit_laws_hold(&self, idx: usize) -> bool {
        let d = &self.datum;
        let mut left = vec![d.zero_scalar(); d.dim()];
        let mut right = vec![d.zero_scalar(); d.dim()];
        for (&(a, b), c) in &self.delta_basis[idx].terms {
            left[b] += &(c * &self.counit_basis(a));
            right[a] += &(c * &self.counit_basis(b));
        }
        let unit = HopfElement::from_index(d, idx);
        left == unit.coeffs && right == unit.coeffs
    }

    fn antipode_laws_hold(&self, idx: usize) -> bool {
        let d = &self.datum;
        let mut left = HopfElement::zero(d);
        let mut right = HopfElement::zero(d);
        for (&(a, b), c) in &self.delta_basis[idx].terms {
            let sa = &self.antipode_basis[a] * &HopfElement::from_index(d, b);
            let sb = &HopfElement::from_index(d, a) * &self.antipode_basis[b];
            left = &left + &sa.scale(c);
            right = &right + &sb.scale(c);
        }
        let expected = HopfElement::scalar(d, &self.counit_basis(idx));
        left == expected && right == expected
    }
}

/// One named family of checks with the basis elements (or pairs) that failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub name: &'static str,
    pub checked: usize,
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl HopfAxiomReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.failures.is_empty())
    }
}

/// Exhaustive audit of the Hopf algebra axioms on basis elements and pairs.
pub fn verify_hopf_axioms(datum: &Arc<GroupDatum>) -> HopfAxiomReport {
    let co = Coalgebra::new(datum);
    let dim = datum.dim();
    let label = |i: usize| datum.basis_label(i);
    let mut checks = Vec::new();

    let singles = |name: &'static str, pred: &dyn Fn(usize) -> bool| AxiomCheck {
        name,
        checked: dim,
        failures: (0..dim).filter(|&i| !pred(i)).map(label).collect(),
    };
    checks.push(singles("coassociativity", &|i| co.coassociativity_holds(i)));
    checks.push(singles("counit", &|i| co.counit_laws_hold(i)));
    checks.push(singles("antipode", &|i| co.antipode_laws_hold(i)));

    let mut delta_mult = Vec::new();
    let mut counit_mult = Vec::new();
    let mut antipode_anti = Vec::new();
    for x in 0..dim {
        for y in 0..dim {
            let ex = HopfElement::from_index(datum, x);
            let ey = HopfElement::from_index(datum, y);
            let prod = &ex * &ey;
            if co.delta(&prod) != co.delta_basis[x].mul(&co.delta_basis[y]) {
                delta_mult.push(format!("({}, {})", label(x), label(y)));
            }
            if co.counit(&prod) != &co.counit_basis(x) * &co.counit_basis(y) {
                counit_mult.push(format!("({}, {})", label(x), label(y)));
            }
            if co.antipode(&prod) != &co.antipode_basis[y] * &co.antipode_basis[x] {
                antipode_anti.push(format!("({}, {})", label(x), label(y)));
            }
        }
    }
    checks.push(AxiomCheck {
        name: "delta multiplicative",
        checked: dim * dim,
        failures: delta_mult,
    });
    checks.push(AxiomCheck {
        name: "counit multiplicative",
        checked: dim * dim,
        failures: counit_mult,
    });
    checks.push(AxiomCheck {
        name: "antipode anti-multiplicative",
        checked: dim * dim,
        failures: antipode_anti,
    });
    HopfAxiomReport { checks }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::build_abelian_named;

    fn klein() -> Arc<GroupDatum> {
        let names = ["b".to_string(), "c".to_string()];
        let (group, table) = build_abelian_named(&[2, 2], Some(&names)).unwrap();
        let g = group.index_of("b").unwrap();
        GroupDatum::validate(DatumInput {
            group,
            table,
            chi: 3,
            g,
            alpha: 0,
            irreps: Vec::new(),
        })
        .unwrap()
    }

    fn cyclic(m: u64, chi: usize, alpha: i64) -> Result<Arc<GroupDatum>, DatumError> {
        let (group, table) = build_abelian_named(&[m], Some(&["g".to_string()])).unwrap();
        let g = group.index_of("g").unwrap();
        GroupDatum::validate(DatumInput {
            group,
            table,
            chi,
            g,
            alpha,
            irreps: Vec::new(),
        })
    }

    #[test]
    fn klein_datum_invariants() {
        let d = klein();
        assert_eq!(d.n(), 2);
        assert_eq!(d.kind(), DatumKind::Nilpotent);
        assert_eq!(d.dim(), 8);
        assert_eq!(d.r(), None);
    }

    #[test]
    fn non_nilpotent_z4() {
        // chi(g) = -1 is character index 2 of Z_4
        let d = cyclic(4, 2, 1).unwrap();
        assert_eq!(d.n(), 2);
        assert_eq!(d.r(), Some(2));
        assert_eq!(d.kind(), DatumKind::NonNilpotent);
        assert_eq!(d.alpha(), 1);
    }

    #[test]
    fn datum_rejections() {
        assert_eq!(cyclic(4, 0, 0).unwrap_err(), DatumError::TrivialOrder);
        assert_eq!(cyclic(4, 1, 3).unwrap_err(), DatumError::BadAlpha(3));
        // chi(g) = zeta_4, alpha = 1: g^4 = 1 so alpha normalizes to 0
        let d = cyclic(4, 1, 1).unwrap();
        assert_eq!(d.kind(), DatumKind::Nilpotent);
        assert_eq!(d.alpha(), 0);
        assert!(matches!(cyclic(4, 5, 0), Err(DatumError::Group(_))));
    }

    #[test]
    fn no_nilpotency_condition() {
        // Z_8, g = a^2, chi(a) = i: q = -1, g^2 != 1 and chi^2 != 1
        let (group, table) = build_abelian_named(&[8], Some(&["a".to_string()])).unwrap();
        let g = group.index_of("a^2").unwrap();
        let err = GroupDatum::validate(DatumInput {
            group,
            table,
            chi: 2,
            g,
            alpha: 1,
            irreps: Vec::new(),
        })
        .unwrap_err();
        assert_eq!(err, DatumError::NoNilpotencyCondition(2));
    }

    #[test]
    fn klein_relations() {
        let d = klein();
        let b = HopfElement::group_element(&d, d.group().index_of("b").unwrap());
        let z = HopfElement::z(&d);
        assert_eq!(&z * &b, -&(&b * &z));
        assert!((&z * &z).is_zero());
        let x = random_element(&d, &mut rand::thread_rng());
        assert_eq!(&HopfElement::one(&d) * &x, x);
    }

    #[test]
    fn sigma_examples() {
        let d = klein();
        let b = d.group().index_of("b").unwrap();
        let s = sigma(&d, &GroupAlgebraElement::group_element(&d, b), 1);
        assert_eq!(
            s,
            GroupAlgebraElement::group_element(&d, b).scale(&-d.one_scalar())
        );
        let id = GroupAlgebraElement::one(&d);
        assert_eq!(sigma(&d, &id, 3), id);

        // q = zeta_4: sigma^2(g) = -g
        let d = cyclic(4, 1, 0).unwrap();
        let g = GroupAlgebraElement::group_element(&d, d.g());
        assert_eq!(sigma(&d, &g, 2), g.scale(&-d.one_scalar()));
    }

    #[test]
    fn coalgebra_on_generators() {
        let d = klein();
        let co = Coalgebra::new(&d);
        let c = d.group().index_of("c").unwrap();
        let s = HopfElement::group_element(&d, c);
        let sx = d.basis_index(0, c);
        assert_eq!(co.delta(&s), TensorElement::basis(&d, sx, sx));
        let z = HopfElement::z(&d);
        let zi = d.basis_index(1, d.group().identity());
        let gi = d.basis_index(0, d.g());
        let one = d.basis_index(0, d.group().identity());
        let expected = TensorElement::basis(&d, zi, gi).add(&TensorElement::basis(&d, one, zi));
        assert_eq!(co.delta(&z), expected);
        assert!(co.counit(&z).is_zero());
        assert!(co.counit(&s).is_one());
        assert_eq!(
            co.antipode(&s),
            HopfElement::group_element(&d, d.group().inv(c))
        );
    }

    #[test]
    fn hopf_axioms_small_data() {
        assert!(verify_hopf_axioms(&klein()).all_passed());
        assert!(verify_hopf_axioms(&cyclic(2, 1, 0).unwrap()).all_passed());
        assert!(verify_hopf_axioms(&cyclic(4, 2, 1).unwrap()).all_passed());
    }

    #[test]
    fn cross_datum_arithmetic_is_refused() {
        let a = HopfElement::one(&klein());
        let b = HopfElement::one(&klein());
        assert_eq!(a.checked_mul(&b), Err(HopfError::DatumMismatch));
        assert_eq!(a.checked_add(&b), Err(HopfError::DatumMismatch));
    }
}
