use std::sync::Arc;

use super::annihilator::annihilator_formula_p;
use super::idempotents::central_idempotents;
use super::normal_form::recover_normal_form;
use super::{Generator, Ideal, IdealError};
use crate::field::{Cyclotomic, ExactMatrix, Subspace};
use crate::hopf::{GroupDatum, HopfElement};
use crate::modules::{partition_indices, IndexPartition};

/// `H / I` with structure constants in the basis of non-pivot coordinates.
pub struct QuotientAlgebra {
    datum: Arc<GroupDatum>,
    ideal: Subspace,
    /// Basis indices of `H` whose images form a basis of the quotient.
    complement: Vec<usize>,
    /// `structure[a][b]` holds the coordinates of `x_a x_b`.
    structure: Vec<Vec<Vec<Cyclotomic>>>,
}

impl QuotientAlgebra {
    pub fn new(ideal: &Ideal) -> Self {
        let datum = ideal.datum().clone();
        let space = ideal.space().clone();
        let complement: Vec<usize> = (0..datum.dim())
            .filter(|c| space.pivots().binary_search(c).is_err())
            .collect();
        let mut q = QuotientAlgebra {
            datum,
            ideal: space,
            complement,
            structure: Vec::new(),
        };
        q.structure = q
            .complement
            .iter()
            .map(|&a| {
                q.complement
                    .iter()
                    .map(|&b| {
                        let mut v = vec![q.datum.zero_scalar(); q.datum.dim()];
                        for (idx, c) in q.datum.basis_product(a, b) {
                            v[idx] += &c;
                        }
                        q.coordinates(&v)
                    })
                    .collect()
            })
            .collect();
        q
    }

    pub fn dim(&self) -> usize {
        self.complement.len()
    }

    /// Coordinates of the image of `v`.
    pub fn coordinates(&self, v: &[Cyclotomic]) -> Vec<Cyclotomic> {
        let r = self.ideal.reduce(v);
        self.complement.iter().map(|&c| r[c].clone()).collect()
    }

    /// A vector of `H` mapping to the given coordinates.
    pub fn lift(&self, coords: &[Cyclotomic]) -> Vec<Cyclotomic> {
        let mut v = vec![self.datum.zero_scalar(); self.datum.dim()];
        for (&c, x) in self.complement.iter().zip(coords) {
            v[c] = x.clone();
        }
        v
    }

    fn field(&self) -> &Arc<crate::field::CyclotomicField> {
        self.datum.field()
    }

    /// Trace of left multiplication by the basis element `a`.
    fn left_trace(&self, a: usize) -> Cyclotomic {
        let mut acc = Cyclotomic::zero(self.field());
        for b in 0..self.dim() {
            acc += &self.structure[a][b][b];
        }
        acc
    }

    /// Radical via the trace form `(x, y) -> Tr(L_{xy})`: in characteristic
    /// zero its kernel is the Jacobson radical.
    pub fn radical(&self) -> Subspace {
        let q = self.dim();
        let traces: Vec<Cyclotomic> = (0..q).map(|a| self.left_trace(a)).collect();
        let rows = (0..q)
            .map(|a| {
                (0..q)
                    .map(|b| {
                        let mut acc = Cyclotomic::zero(self.field());
                        for (c, t) in self.structure[a][b].iter().zip(&traces) {
                            if !c.is_zero() && !t.is_zero() {
                                acc += &(c * t);
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        ExactMatrix::from_rows(self.field(), q, rows).nullspace()
    }

    /// Center as the solution space of `x y_b = y_b x` for all basis `y_b`.
    pub fn center(&self) -> Subspace {
        let q = self.dim();
        let mut rows = Vec::with_capacity(q * q);
        for b in 0..q {
            for k in 0..q {
                rows.push(
                    (0..q)
                        .map(|a| &self.structure[a][b][k] - &self.structure[b][a][k])
                        .collect(),
                );
            }
        }
        ExactMatrix::from_rows(self.field(), q, rows).nullspace()
    }
}

/// Radical of `H / I` together with its preimage in `H`.
#[derive(Clone, Debug)]
pub struct RadicalInfo {
    pub quotient_dim: usize,
    pub radical_dim: usize,
    /// `I + lift(rad(H/I))`
    pub preimage: Ideal,
}

pub fn radical_of_quotient(ideal: &Ideal) -> Result<RadicalInfo, IdealError> {
    let q = QuotientAlgebra::new(ideal);
    let rad = q.radical();
    let lifted = Subspace::from_spanning(
        ideal.datum().field(),
        ideal.datum().dim(),
        rad.basis_vectors().iter().map(|v| q.lift(v)).collect(),
    );
    let preimage = Ideal::from_closed_space(ideal.datum(), ideal.space().sum(&lifted)?);
    if !preimage.is_closed() {
        return Err(IdealError::Internal(
            "preimage of the radical is not an ideal".into(),
        ));
    }
    let preimage = match recover_normal_form(&preimage) {
        Some(nf) => preimage.with_normal_form(nf),
        None => preimage,
    };
    Ok(RadicalInfo {
        quotient_dim: q.dim(),
        radical_dim: rad.dim(),
        preimage,
    })
}

/// Whether `H / I` is simple: zero radical and one-dimensional center.
pub fn is_maximal(ideal: &Ideal) -> Result<bool, IdealError> {
    if ideal.is_whole() {
        return Err(IdealError::WholeAlgebra);
    }
    let q = QuotientAlgebra::new(ideal);
    Ok(q.radical().is_zero() && q.center().dim() == 1)
}

/// Codimension-one test. A one-dimensional quotient is the base field. A
/// larger quotient of this split algebra has a nonzero radical, a matrix
/// block or two orthogonal blocks, and each of these gives zero divisors.
pub fn is_completely_prime(ideal: &Ideal) -> Result<bool, IdealError> {
    if ideal.is_whole() {
        return Err(IdealError::WholeAlgebra);
    }
    Ok(ideal.codim() == 1)
}

/// `(1 - e_i)` for `i` in `Omega_0` (nilpotent) or `Lambda_0`, plus
/// `Ann(P_j)` for one `j` per `tau`-orbit in `Lambda_1`.
pub fn maximal_ideals(datum: &Arc<GroupDatum>) -> Result<Vec<Ideal>, IdealError> {
    let prims = central_idempotents(datum);
    let partition = partition_indices(datum)?;
    let one = HopfElement::one(datum);
    let mut out = Vec::new();
    for &i in partition.m_indices() {
        let e = HopfElement::from_group_algebra(datum, 0, &prims[i].element);
        let ideal =
            Ideal::from_generators(datum, vec![Generator::new(&one - &e, format!("1 - e{i}"))])?;
        out.push(match recover_normal_form(&ideal) {
            Some(nf) => ideal.with_normal_form(nf),
            None => ideal,
        });
    }
    if let IndexPartition::NonNilpotent { orbits, .. } = &partition {
        for orbit in orbits {
            out.push(annihilator_formula_p(datum, orbit[0])?);
        }
    }
    Ok(out)
}
