//! Linear codes over GF(2) and GF(4): duality tests, distance engines,
//! 4-cycle analysis and quantum parameters.

mod cycles;
mod distance;
mod quantum;

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::constructions::{CodeFamilySpec, ConstructionError, FamilyInstance, InnerProduct};
use crate::field::{FieldElement, FieldSpec};
use crate::groupring::GroupRingElement;
use crate::linalg::{FieldMatrix, LinalgError};

pub use cycles::{four_cycle_report, FourCycleReport};
pub use distance::{
    enumeration_bits, macwilliams_transform, min_distance_exact, min_distance_exhaustive, min_distance_search,
    weight_distribution, weight_distribution_via_dual, ExactMethod, SearchOutcome, DEFAULT_EXHAUSTIVE_CAP,
    DEFAULT_SEED,
};
pub use quantum::{quantum_params, QuantumParams};

#[derive(Debug, Error)]
pub enum CodeError {
    #[error("expected rank {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("codes are supported over GF(2) and GF(4) only, not {0}")]
    UnsupportedField(String),
    #[error("the hermitian inner product needs GF(4), not {0}")]
    HermitianUnsupported(String),
    #[error("exhaustive search needs {bits} enumeration bits, above the cap of {cap}")]
    CapExceeded { bits: u32, cap: u32 },
    #[error("the zero code has no nonzero codewords")]
    ZeroCode,
    #[error("code is not dual-containing under the {0} inner product")]
    NotDualContaining(InnerProduct),
    #[error("generator times check transpose is nonzero")]
    CheckMismatch,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    Family(CodeFamilySpec),
    AdHoc,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Family(spec) => write!(f, "{spec}"),
            Provenance::AdHoc => f.write_str("ad hoc"),
        }
    }
}

/// A linear code given by a generator matrix with independent rows.
#[derive(Debug, Clone)]
pub struct LinearCode {
    generator: FieldMatrix,
    check: Option<FieldMatrix>,
    provenance: Provenance,
}

impl LinearCode {
    /// An ad hoc code; the rows of `generator` must be independent.
    pub fn new(generator: FieldMatrix) -> Result<Self, CodeError> {
        let f = generator.field();
        if !(f.is_gf2() || f.is_gf4()) {
            return Err(CodeError::UnsupportedField(f.to_string()));
        }
        let rank = generator.rank();
        if rank != generator.rows() {
            return Err(CodeError::RankMismatch {
                expected: generator.rows(),
                found: rank,
            });
        }
        Ok(LinearCode {
            generator,
            check: None,
            provenance: Provenance::AdHoc,
        })
    }

    /// Attaches a parity-check matrix after verifying `G Hᵀ = 0`.
    pub fn with_check(mut self, check: FieldMatrix) -> Result<Self, CodeError> {
        if !self.generator.mul(&check.transpose())?.is_zero() {
            return Err(CodeError::CheckMismatch);
        }
        self.check = Some(check);
        Ok(self)
    }

    pub fn with_provenance(mut self, provenance: Provenance) -> Self {
        self.provenance = provenance;
        self
    }

    /// The code `RG·u` of a validated family instance, with the check
    /// matrix taken from the check element.
    pub fn from_instance(inst: &FamilyInstance) -> Result<Self, CodeError> {
        let code = code_from_element(inst.generator(), inst.dimension())?;
        let check = select_independent(inst.check(), inst.length() - inst.dimension())?;
        Ok(code
            .with_check(check)?
            .with_provenance(Provenance::Family(*inst.spec())))
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        self.generator.field()
    }

    pub fn length(&self) -> usize {
        self.generator.cols()
    }

    pub fn dimension(&self) -> usize {
        self.generator.rows()
    }

    pub fn generator(&self) -> &FieldMatrix {
        &self.generator
    }

    pub fn check(&self) -> Option<&FieldMatrix> {
        self.check.as_ref()
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn contains(&self, word: &[FieldElement]) -> Result<bool, CodeError> {
        let row = FieldMatrix::from_rows(self.field().clone(), &[word.to_vec()])?;
        Ok(self.generator.rowspace_contains(&row)?)
    }

    /// `G · conj(G)ᵀ` (plain `G Gᵀ` for the euclidean product).
    fn gram(&self, ip: InnerProduct) -> Result<FieldMatrix, CodeError> {
        let other = self.twisted(ip)?;
        Ok(self.generator.mul(&other.transpose())?)
    }

    fn twisted(&self, ip: InnerProduct) -> Result<FieldMatrix, CodeError> {
        match ip {
            InnerProduct::Euclidean => Ok(self.generator.clone()),
            InnerProduct::Hermitian if self.field().is_gf4() => Ok(self.generator.conjugate()?),
            InnerProduct::Hermitian => Err(CodeError::HermitianUnsupported(self.field().to_string())),
        }
    }
}

fn select_independent(u: &GroupRingElement, k: usize) -> Result<FieldMatrix, CodeError> {
    let m = u.to_matrix();
    let rows = m.independent_rows(k).ok_or_else(|| CodeError::RankMismatch {
        expected: k,
        found: m.rank(),
    })?;
    Ok(m.select_rows(&rows))
}

/// The left ideal `RG·u` with generator the first `k` independent rows of
/// the matrix of `u`.
pub fn code_from_element(u: &GroupRingElement, k: usize) -> Result<LinearCode, CodeError> {
    let m = u.to_matrix();
    let rank = m.rank();
    if rank != k {
        return Err(CodeError::RankMismatch { expected: k, found: rank });
    }
    LinearCode::new(select_independent(u, k)?)
}

/// The dual code under `ip`.
pub fn dual_code(code: &LinearCode, ip: InnerProduct) -> Result<LinearCode, CodeError> {
    let basis = code.twisted(ip)?.nullspace();
    Ok(LinearCode::new(basis)?.with_check(code.twisted(ip)?)?)
}

pub fn is_self_orthogonal(code: &LinearCode, ip: InnerProduct) -> Result<bool, CodeError> {
    Ok(code.gram(ip)?.is_zero())
}

pub fn is_self_dual(code: &LinearCode, ip: InnerProduct) -> Result<bool, CodeError> {
    Ok(2 * code.dimension() == code.length() && is_self_orthogonal(code, ip)?)
}

pub fn is_dual_containing(code: &LinearCode, ip: InnerProduct) -> Result<bool, CodeError> {
    let dual = dual_code(code, ip)?;
    Ok(code.generator.rowspace_contains(dual.generator())?)
}
