//! Two-sided ideals of `H_D`.
//!
//! An ideal is stored as a canonical [`Subspace`] of the `n|G|`-dimensional
//! coordinate space, so equality of ideals is equality of data.

mod annihilator;
mod enumerate;
mod idempotents;
mod normal_form;
mod parse;
mod quotient;

use std::fmt;
use std::sync::Arc;

use crate::field::{Cyclotomic, EchelonBuilder, FieldError, Subspace};
use crate::hopf::{left_mul_basis, mul_coeffs, right_mul_basis, GroupDatum, HopfElement};

pub use annihilator::{annihilator_formula_m, annihilator_formula_p, annihilator_oracle};
pub use enumerate::{candidate_count, enumerate_ideals, DEFAULT_CAP};
pub use idempotents::{
    central_idempotents, idempotent_sum, kg_ideal_support, tau_from_idempotents, CentralIdempotent,
    Support,
};
pub use normal_form::{lowest_term_invariant, normal_form, recover_normal_form, NormalForm};
pub use parse::parse_element;
pub use quotient::{
    is_completely_prime, is_maximal, maximal_ideals, radical_of_quotient, QuotientAlgebra,
    RadicalInfo,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IdealError {
    #[error("ideals belong to different group data")]
    DatumMismatch,
    #[error("exponent {m} outside 0..{n}")]
    ExponentOutOfRange { m: usize, n: usize },
    #[error("the ideal is all of H")]
    WholeAlgebra,
    #[error("ideal enumeration needs a nilpotent datum")]
    NotNilpotent,
    #[error("{count} candidates exceed the enumeration cap of {cap} (raise it with --cap)")]
    CapExceeded { count: u128, cap: u128 },
    #[error(transparent)]
    Module(#[from] crate::modules::ModuleError),
    #[error(transparent)]
    Parse(#[from] crate::expr::ParseError),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

/// A generator together with how it should be printed.
#[derive(Clone, Debug)]
pub struct Generator {
    pub element: HopfElement,
    pub text: String,
}

impl Generator {
    pub fn new(element: HopfElement, text: impl Into<String>) -> Self {
        Generator {
            element,
            text: text.into(),
        }
    }

    /// Printed with the element's own coordinates.
    pub fn plain(element: HopfElement) -> Self {
        let text = element.to_string();
        Generator { element, text }
    }
}

#[derive(Clone)]
pub struct Ideal {
    datum: Arc<GroupDatum>,
    space: Subspace,
    generators: Vec<Generator>,
    normal_form: Option<NormalForm>,
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.datum, &other.datum) && self.space == other.space
    }
}

impl Eq for Ideal {}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal(dim {}; {})", self.dim(), self.normal_form_text())
    }
}

impl Ideal {
    pub fn zero(datum: &Arc<GroupDatum>) -> Self {
        Ideal {
            datum: datum.clone(),
            space: Subspace::zero(datum.field(), datum.dim()),
            generators: Vec::new(),
            normal_form: Some(NormalForm::zero()),
        }
    }

    pub fn whole(datum: &Arc<GroupDatum>) -> Self {
        Ideal {
            datum: datum.clone(),
            space: Subspace::full(datum.field(), datum.dim()),
            generators: vec![Generator::new(HopfElement::one(datum), "1")],
            normal_form: Some(NormalForm::whole(datum)),
        }
    }

    /// The two-sided ideal generated by `gens`.
    pub fn from_generators(
        datum: &Arc<GroupDatum>,
        gens: Vec<Generator>,
    ) -> Result<Self, IdealError> {
        if gens.iter().any(|g| !Arc::ptr_eq(g.element.datum(), datum)) {
            return Err(IdealError::DatumMismatch);
        }
        let seeds = gens.iter().map(|g| g.element.coeffs().to_vec()).collect();
        Ok(Ideal {
            datum: datum.clone(),
            space: close(datum, seeds),
            generators: gens,
            normal_form: None,
        })
    }

    /// Shorthand for generators printed by their coordinates.
    pub fn from_elements(
        datum: &Arc<GroupDatum>,
        gens: &[HopfElement],
    ) -> Result<Self, IdealError> {
        Self::from_generators(datum, gens.iter().cloned().map(Generator::plain).collect())
    }

    /// Wrap a subspace already known to be a two-sided ideal.
    pub(crate) fn from_closed_space(datum: &Arc<GroupDatum>, space: Subspace) -> Self {
        Ideal {
            datum: datum.clone(),
            space,
            generators: Vec::new(),
            normal_form: None,
        }
    }

    pub fn datum(&self) -> &Arc<GroupDatum> {
        &self.datum
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn codim(&self) -> usize {
        self.space.codim()
    }

    pub fn is_zero(&self) -> bool {
        self.space.is_zero()
    }

    pub fn is_whole(&self) -> bool {
        self.space.is_full()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn normal_form(&self) -> Option<&NormalForm> {
        self.normal_form.as_ref()
    }

    pub(crate) fn with_normal_form(mut self, nf: NormalForm) -> Self {
        self.normal_form = Some(nf);
        self
    }

    pub(crate) fn with_generators(mut self, gens: Vec<Generator>) -> Self {
        self.generators = gens;
        self
    }

    /// The generators joined by commas, falling back to the normal form.
    pub fn generator_text(&self) -> String {
        if self.generators.is_empty() {
            return self.normal_form_text();
        }
        self.generators
            .iter()
            .map(|g| g.text.clone())
            .collect::<Vec<_>>()
            .join(", ")
    }

    /// The single normal-form generator when known.
    pub fn normal_form_text(&self) -> String {
        match &self.normal_form {
            Some(nf) => nf.render(&self.datum),
            None if self.is_zero() => "0".into(),
            None => format!("<dim {}>", self.dim()),
        }
    }

    fn check_same(&self, other: &Ideal) -> Result<(), IdealError> {
        if Arc::ptr_eq(&self.datum, &other.datum) {
            Ok(())
        } else {
            Err(IdealError::DatumMismatch)
        }
    }

    pub fn contains_element(&self, a: &HopfElement) -> Result<bool, IdealError> {
        if !Arc::ptr_eq(a.datum(), &self.datum) {
            return Err(IdealError::DatumMismatch);
        }
        Ok(self.space.contains_vector(a.coeffs()))
    }

    pub fn contains(&self, other: &Ideal) -> Result<bool, IdealError> {
        self.check_same(other)?;
        Ok(self.space.contains(&other.space)?)
    }

    pub fn equals(&self, other: &Ideal) -> Result<bool, IdealError> {
        self.check_same(other)?;
        Ok(self.space == other.space)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal, IdealError> {
        self.check_same(other)?;
        Ok(Ideal::from_closed_space(
            &self.datum,
            self.space.sum(&other.space)?,
        ))
    }

    pub fn intersect(&self, other: &Ideal) -> Result<Ideal, IdealError> {
        self.check_same(other)?;
        Ok(Ideal::from_closed_space(
            &self.datum,
            self.space.intersect(&other.space)?,
        ))
    }

    /// `IJ`: the ideal spanned by all products `a b`, `a` in `I`, `b` in `J`.
    pub fn product(&self, other: &Ideal) -> Result<Ideal, IdealError> {
        self.check_same(other)?;
        let mut seeds = Vec::new();
        let right = other.space.basis_vectors();
        for a in self.space.basis_vectors() {
            for b in &right {
                seeds.push(mul_coeffs(&self.datum, &a, b));
            }
        }
        Ok(Ideal::from_closed_space(
            &self.datum,
            close(&self.datum, seeds),
        ))
    }

    /// Whether the stored space is closed under two-sided multiplication.
    pub fn is_closed(&self) -> bool {
        close(&self.datum, self.space.basis_vectors()) == self.space
    }
}

/// Basis indices of the algebra generators: `z` and a generating set of `G`.
pub(crate) fn algebra_generators(datum: &GroupDatum) -> Vec<usize> {
    let mut out = vec![datum.basis_index(1, datum.group().identity())];
    out.extend(
        datum
            .group()
            .generators()
            .into_iter()
            .map(|h| datum.basis_index(0, h)),
    );
    out
}

/// Smallest subspace containing `seeds` that is closed under left and right
/// multiplication by the algebra generators, hence a two-sided ideal.
pub(crate) fn close(datum: &GroupDatum, seeds: Vec<Vec<Cyclotomic>>) -> Subspace {
    let gens = algebra_generators(datum);
    let mut builder = EchelonBuilder::new(datum.field(), datum.dim());
    // Products are taken of the vectors as inserted, not of the reduced rows:
    // both span the same space, and the unreduced ones keep small coefficients.
    let mut work: Vec<_> = seeds
        .into_iter()
        .filter(|v| builder.insert(v.clone()).is_some())
        .collect();
    while let Some(v) = work.pop() {
        if builder.dim() == datum.dim() {
            break;
        }
        for &x in &gens {
            for w in [left_mul_basis(datum, x, &v), right_mul_basis(datum, &v, x)] {
                if builder.insert(w.clone()).is_some() {
                    work.push(w);
                }
            }
        }
    }
    builder.finish()
}

#[cfg(test)]
mod tests;
