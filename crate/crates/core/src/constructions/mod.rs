//! Generator and check elements for every code family, with their claimed
//! parameters and structured low-weight witnesses.
//!
//! Tower families live in `RG` with `G = C_{b n}^m × C_2` (or `× C_4` for
//! DC34b), listed with the cyclic factors varying fastest and the `h`
//! factor last, so the generator `u = 1 + h·u_m` has the block matrix
//! `[[I, B], [B, I]]`. Dihedral families use `u = 1 + b·D` built from
//! quadratic-residue difference sets.

mod diffset;
mod family;
mod witness;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::{FieldElement, FieldError, FieldSpec, OMEGA, OMEGA2};
use crate::group::{GroupError, GroupSpec};
use crate::groupring::GroupRingElement;

pub use diffset::{additive_group, diffset_char2_check, prime_power, qr_difference_set, DifferenceSet};
pub use family::{CodeFamily, CodeFamilySpec, MAX_GROUP_ORDER};
pub use witness::{search_witness, witness_codeword, Witness};

#[derive(Debug, Error)]
pub enum ConstructionError {
    #[error("unknown code family `{0}`")]
    UnknownFamily(String),
    #[error("cannot parse family spec `{0}`: {1}")]
    Parse(String, String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("{0} is not a prime power")]
    NotPrimePower(u32),
    #[error("group order {order} exceeds the construction limit of {limit}")]
    TooLarge { order: usize, limit: usize },
    #[error("family contract violated: {0}")]
    ContractViolation(String),
    #[error("witness search reached weight {found}, above the claimed distance {claim}")]
    WitnessAboveClaim { found: usize, claim: usize },
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Inner product under which duality is measured.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InnerProduct {
    Euclidean,
    Hermitian,
}

impl fmt::Display for InnerProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InnerProduct::Euclidean => "euclidean",
            InnerProduct::Hermitian => "hermitian",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Symmetry {
    /// `uᵀ = u`
    Transpose,
    /// `ū = u`
    Bar,
}

/// How the code relates to its dual.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Duality {
    SelfDual,
    DualContaining,
    /// `C ⊆ C⊥`
    SelfOrthogonal,
}

/// The algebraic conditions a family's generator must satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Contract {
    pub nilpotency: u64,
    pub symmetry: Symmetry,
    pub rank: usize,
    pub inner_product: InnerProduct,
    pub duality: Duality,
}

/// Measured values behind a [`Contract`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractCheck {
    pub expected: Contract,
    pub nilpotency: Option<u64>,
    pub symmetric: bool,
    pub rank: usize,
    pub check_rank: usize,
    /// `u · cᵀ = 0` for generator `u` and check element `c`.
    pub annihilates: bool,
}

impl ContractCheck {
    pub fn failures(&self, length: usize) -> Vec<String> {
        let mut out = Vec::new();
        if self.nilpotency != Some(self.expected.nilpotency) {
            out.push(format!(
                "nilpotency index {:?}, expected {}",
                self.nilpotency, self.expected.nilpotency
            ));
        }
        if !self.symmetric {
            out.push(format!("generator is not {:?}-symmetric", self.expected.symmetry));
        }
        if self.rank != self.expected.rank {
            out.push(format!("rank {}, expected {}", self.rank, self.expected.rank));
        }
        if self.check_rank + self.expected.rank != length {
            out.push(format!(
                "check element rank {}, expected {}",
                self.check_rank,
                length - self.expected.rank
            ));
        }
        if !self.annihilates {
            out.push("generator times transposed check element is nonzero".into());
        }
        out
    }

    pub fn passed(&self, length: usize) -> bool {
        self.failures(length).is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimStatus {
    Proven,
    Conjectured,
}

impl fmt::Display for ClaimStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClaimStatus::Proven => "proven",
            ClaimStatus::Conjectured => "conjectured",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClaimedParams {
    pub n: usize,
    pub k: usize,
    /// `None` when no distance is claimed for this instance.
    pub d: Option<usize>,
    pub status: ClaimStatus,
}

/// A constructed and validated family instance.
#[derive(Debug, Clone)]
pub struct FamilyInstance {
    spec: CodeFamilySpec,
    field: Arc<FieldSpec>,
    group: Arc<GroupSpec>,
    generator: GroupRingElement,
    check: GroupRingElement,
    contract: ContractCheck,
    /// Per-factor elements of the tower, lifted into `G`.
    factors: Vec<GroupRingElement>,
    /// `u_m` and the group element it is shifted by, for tower families.
    tower: Option<(GroupRingElement, usize)>,
    difference_set: Option<DifferenceSet>,
}

impl FamilyInstance {
    /// Builds the generator and check elements and verifies the family
    /// contract, failing if any condition does not hold.
    pub fn build(spec: &CodeFamilySpec) -> Result<Self, ConstructionError> {
        let inst = Self::build_unchecked(spec)?;
        let failures = inst.contract.failures(inst.length());
        if failures.is_empty() {
            Ok(inst)
        } else {
            Err(ConstructionError::ContractViolation(format!("{spec}: {}", failures.join("; "))))
        }
    }

    /// Like [`FamilyInstance::build`] but keeps the instance even when the
    /// contract fails, so the measurements can be reported.
    pub fn build_unchecked(spec: &CodeFamilySpec) -> Result<Self, ConstructionError> {
        spec.validate()?;
        let field = Arc::new(if spec.family.is_gf4() {
            FieldSpec::gf4()
        } else {
            FieldSpec::gf2()
        });
        let parts = if spec.family.is_dihedral() {
            dihedral_parts(spec, &field)?
        } else {
            tower_parts(spec, &field)?
        };
        let contract = expected_contract(spec);
        let (generator, check) = match spec.family {
            CodeFamily::DualOfDC34 => (parts.u.pow(3), parts.u.transpose(false).expect("plain")),
            _ => {
                let power = parts.u.pow(contract.nilpotency - 1);
                (parts.u.clone(), power.transpose(false).expect("plain"))
            }
        };
        let symmetric = match contract.symmetry {
            Symmetry::Transpose => generator.is_symmetric(),
            Symmetry::Bar => generator.is_bar_symmetric().unwrap_or(false),
        };
        let product = generator
            .mul(&check.transpose(false).expect("plain"))
            .expect("same ring");
        let measured = ContractCheck {
            expected: contract,
            nilpotency: generator.nilpotency_index(contract.nilpotency.max(8) + 1),
            symmetric,
            rank: generator.rank(),
            check_rank: check.rank(),
            annihilates: product.is_zero(),
        };
        Ok(FamilyInstance {
            spec: *spec,
            group: generator.group().clone(),
            field,
            generator,
            check,
            contract: measured,
            factors: parts.factors,
            tower: parts.tower,
            difference_set: parts.difference_set,
        })
    }

    pub fn spec(&self) -> &CodeFamilySpec {
        &self.spec
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    pub fn group(&self) -> &Arc<GroupSpec> {
        &self.group
    }

    pub fn generator(&self) -> &GroupRingElement {
        &self.generator
    }

    pub fn check(&self) -> &GroupRingElement {
        &self.check
    }

    pub fn contract(&self) -> &ContractCheck {
        &self.contract
    }

    pub fn length(&self) -> usize {
        self.group.order()
    }

    pub fn dimension(&self) -> usize {
        self.contract.expected.rank
    }

    pub fn inner_product(&self) -> InnerProduct {
        self.contract.expected.inner_product
    }

    pub fn duality(&self) -> Duality {
        self.contract.expected.duality
    }

    pub fn factors(&self) -> &[GroupRingElement] {
        &self.factors
    }

    pub fn tower(&self) -> Option<(&GroupRingElement, usize)> {
        self.tower.as_ref().map(|(t, h)| (t, *h))
    }

    pub fn difference_set(&self) -> Option<&DifferenceSet> {
        self.difference_set.as_ref()
    }

    pub fn claimed(&self) -> ClaimedParams {
        claimed_params(&self.spec)
    }

    /// For an intertwined instance, the generator rewritten in the `n = 1`
    /// group by mapping `a_i^{jn} ↦ a_i^j`. `None` if some term has an
    /// exponent that is not a multiple of `n`.
    pub fn contract_stretch(&self) -> Option<GroupRingElement> {
        if self.spec.family.is_dihedral() {
            return None;
        }
        let n = self.spec.n as usize;
        let base = tower_group(&CodeFamilySpec { n: 1, ..self.spec }, self.spec.m as usize);
        let mut out = GroupRingElement::zero(self.field.clone(), base.clone());
        let m = self.spec.m as usize;
        for g in self.generator.support_set() {
            let mut parts = self.group.decompose(g);
            for p in parts.iter_mut().take(m) {
                if *p % n != 0 {
                    return None;
                }
                *p /= n;
            }
            out.set_coeff(base.compose(&parts), self.generator.coeff(g));
        }
        Some(out)
    }
}

struct Parts {
    u: GroupRingElement,
    factors: Vec<GroupRingElement>,
    tower: Option<(GroupRingElement, usize)>,
    difference_set: Option<DifferenceSet>,
}

fn expected_contract(spec: &CodeFamilySpec) -> Contract {
    use CodeFamily::*;
    let nilpotency: u64 = match spec.family {
        Class1 | Class2 | DihedralQR | GenDihedral | GF4SelfDual | DualOfDC34 => 2,
        DC34 | DC34b | GF4DC34 => 4,
        DC78 | GF4DC78 => 8,
        General2t => 1 << spec.t,
    };
    let length = spec.length();
    let rank = match spec.family {
        DualOfDC34 => length / 4,
        _ => length - length / nilpotency as usize,
    };
    let (symmetry, inner_product) = match spec.family {
        GF4DC34 | GF4DC78 => (Symmetry::Bar, InnerProduct::Hermitian),
        _ => (Symmetry::Transpose, InnerProduct::Euclidean),
    };
    let duality = match (spec.family, nilpotency) {
        (DualOfDC34, _) => Duality::SelfOrthogonal,
        (_, 2) => Duality::SelfDual,
        _ => Duality::DualContaining,
    };
    Contract { nilpotency, symmetry, rank, inner_product, duality }
}

/// `C_{bn}^m × C_2` (or `× C_4`), the `h` factor last.
fn tower_group(spec: &CodeFamilySpec, m: usize) -> Arc<GroupSpec> {
    let order = spec.factor_order();
    let mut factors: Vec<GroupSpec> = (1..=m)
        .map(|i| GroupSpec::cyclic(order, &format!("a{i}")).expect("order >= 1"))
        .collect();
    let h = if spec.family == CodeFamily::DC34b { 4 } else { 2 };
    factors.push(GroupSpec::cyclic(h, "h").expect("order >= 1"));
    Arc::new(GroupSpec::direct_product(factors).expect("nonempty"))
}

/// Terms `(exponent multiplier, coefficient)` of one tower factor; the
/// exponents are scaled by the stretch `n`.
fn factor_terms(spec: &CodeFamilySpec) -> Vec<(usize, FieldElement)> {
    use CodeFamily::*;
    let one = FieldElement::ONE;
    match spec.family {
        Class1 => vec![(1, one), (2, one), (3, one)],
        Class2 => (1..=5).map(|j| (j, one)).collect(),
        DC34 | DC34b | DualOfDC34 => vec![(1, one), (4, one), (7, one)],
        DC78 => vec![(1, one), (8, one), (15, one)],
        General2t => vec![(1, one), (1 << spec.t, one), ((1 << (spec.t + 1)) - 1, one)],
        GF4SelfDual => vec![(1, OMEGA), (2, one), (3, OMEGA)],
        GF4DC34 => vec![(1, OMEGA), (3, OMEGA2)],
        GF4DC78 => vec![(1, OMEGA), (7, OMEGA2)],
        DihedralQR | GenDihedral => unreachable!("dihedral families have no tower"),
    }
}

fn tower_parts(spec: &CodeFamilySpec, field: &Arc<FieldSpec>) -> Result<Parts, ConstructionError> {
    let m = spec.m as usize;
    let n = spec.n as usize;
    let group = tower_group(spec, m);
    let terms = factor_terms(spec);
    let factors: Vec<GroupRingElement> = (0..m)
        .map(|i| {
            GroupRingElement::from_terms(
                field.clone(),
                group.clone(),
                terms.iter().map(|&(e, c)| (group.embed(i, e * n), c)),
            )
        })
        .collect();
    let mut tower = GroupRingElement::one(field.clone(), group.clone());
    for f in &factors {
        tower = tower.mul(f).expect("same ring");
    }
    let shift = group.embed(m, if spec.family == CodeFamily::DC34b { 2 } else { 1 });
    let shifted = GroupRingElement::monomial(field.clone(), group.clone(), shift, FieldElement::ONE)
        .mul(&tower)
        .expect("same ring");
    let u = GroupRingElement::one(field.clone(), group).add(&shifted).expect("same ring");
    Ok(Parts {
        u,
        factors,
        tower: Some((tower, shift)),
        difference_set: None,
    })
}

fn dihedral_parts(spec: &CodeFamilySpec, field: &Arc<FieldSpec>) -> Result<Parts, ConstructionError> {
    let ds = qr_difference_set(spec.q)?;
    if !diffset_char2_check(&ds) {
        return Err(ConstructionError::ContractViolation(format!(
            "Dᵀ D ≠ 1 over GF(2) for q = {}",
            spec.q
        )));
    }
    let t = if spec.family == CodeFamily::GenDihedral { spec.t as usize } else { 1 };
    let (p, k) = prime_power(spec.q).expect("validated");
    let gf_q = FieldSpec::new(p, k)?;
    // A = (additive group of GF(q))^t; for prime q and t = 1 the group is D_{2q}.
    let base = if t == 1 {
        additive_group(&gf_q, "a")
    } else {
        let copies = (1..=t).map(|c| additive_group(&gf_q, &format!("a{c}"))).collect();
        GroupSpec::direct_product(copies)?
    };
    let a_order = base.order();
    let group = Arc::new(if t == 1 && k == 1 {
        GroupSpec::dihedral(spec.q as usize)?
    } else {
        GroupSpec::generalized_dihedral(base.clone())?
    });
    let base = Arc::new(base);
    // D_1 D_2 ... D_t inside Z_2[A], as a set of listing indices of A.
    let mut product = GroupRingElement::one(field.clone(), base.clone());
    for c in 0..t {
        let lifted = GroupRingElement::from_terms(
            field.clone(),
            base.clone(),
            ds.elements.iter().map(|&d| {
                let idx = if t == 1 { d } else { base.embed(c, d) };
                (idx, FieldElement::ONE)
            }),
        );
        product = product.mul(&lifted).expect("same ring");
    }
    let mut u = GroupRingElement::one(field.clone(), group);
    for g in product.support_set() {
        u.set_coeff(a_order + g, product.coeff(g));
    }
    Ok(Parts {
        u,
        factors: Vec::new(),
        tower: None,
        difference_set: Some(ds),
    })
}

/// The validated generator element `u` of a family instance.
pub fn build_generator_element(spec: &CodeFamilySpec) -> Result<GroupRingElement, ConstructionError> {
    Ok(FamilyInstance::build(spec)?.generator)
}

/// The element whose matrix rows span the parity checks of the code.
pub fn check_element(spec: &CodeFamilySpec) -> Result<GroupRingElement, ConstructionError> {
    Ok(FamilyInstance::build(spec)?.check)
}

/// Length, dimension and claimed distance from the closed-form formulas.
pub fn claimed_params(spec: &CodeFamilySpec) -> ClaimedParams {
    use CodeFamily::*;
    let n = spec.length();
    let k = expected_contract(spec).rank;
    let m = spec.m;
    let class1 = |m: u32| {
        if m % 2 == 0 {
            2 * 3usize.pow(m / 2)
        } else {
            4 * 3usize.pow((m - 1) / 2)
        }
    };
    let qr = |q: u32| (q as usize + 1) / 4 + 3;
    let (d, status) = match spec.family {
        Class1 => (Some(class1(m)), ClaimStatus::Proven),
        Class2 | DC34b | GF4SelfDual => (Some(1 << (m + 1)), ClaimStatus::Proven),
        DC34 | DC78 | GF4DC34 | GF4DC78 => (Some(1 << m), ClaimStatus::Proven),
        General2t if spec.t == 1 => (Some(class1(m)), ClaimStatus::Proven),
        General2t => (Some(1 << m), ClaimStatus::Proven),
        DualOfDC34 => {
            let d = if m % 2 == 1 {
                2 * 4usize.pow((m + 1) / 2) * 3usize.pow((m - 1) / 2)
            } else {
                2 * 4usize.pow(m / 2) * 3usize.pow(m / 2)
            };
            (Some(d), ClaimStatus::Conjectured)
        }
        DihedralQR => (Some(qr(spec.q)), ClaimStatus::Conjectured),
        GenDihedral if spec.t == 1 => (Some(qr(spec.q)), ClaimStatus::Conjectured),
        GenDihedral if spec.q == 11 => (Some(2 * 3usize.pow(spec.t)), ClaimStatus::Conjectured),
        GenDihedral => (None, ClaimStatus::Conjectured),
    };
    ClaimedParams { n, k, d, status }
}

/// One row of the family catalogue.
#[derive(Debug, Clone, Serialize)]
pub struct CatalogEntry {
    pub family: CodeFamily,
    pub example: &'static str,
    pub field: &'static str,
    pub generator: &'static str,
    pub length: &'static str,
    pub dimension: &'static str,
    pub distance: &'static str,
    pub duality: Duality,
    pub inner_product: InnerProduct,
    pub status: ClaimStatus,
}

pub fn catalog() -> Vec<CatalogEntry> {
    use CodeFamily::*;
    let entry = |family, example, field, generator, length, dimension, distance, status| {
        let spec: CodeFamilySpec = CodeFamilySpec::from_str_unchecked(example);
        let c = expected_contract(&spec);
        CatalogEntry {
            family,
            example,
            field,
            generator,
            length,
            dimension,
            distance,
            duality: c.duality,
            inner_product: c.inner_product,
            status,
        }
    };
    use ClaimStatus::{Conjectured, Proven};
    vec![
        entry(Class1, "class1:m=2,n=1", "GF(2)", "1 + h*prod(a^n + a^2n + a^3n) in C_4n^m x C2", "2(4n)^m", "(4n)^m", "2*3^(m/2) (m even), 4*3^((m-1)/2) (m odd)", Proven),
        entry(Class2, "class2:m=1,n=1", "GF(2)", "1 + h*prod(a^n + ... + a^5n) in C_6n^m x C2", "2(6n)^m", "(6n)^m", "2^(m+1)", Proven),
        entry(DihedralQR, "dihedralqr:q=11", "GF(2)", "1 + b*D, D = squares of GF(q), q = 3 mod 8", "2q", "q", "(q+1)/4 + 3", Conjectured),
        entry(GenDihedral, "gendihedral:q=11,t=2", "GF(2)", "1 + b*D1...Dt in Dih(A^t)", "2q^t", "q^t", "2*3^t (q = 11)", Conjectured),
        entry(DC34, "dc34:m=1,n=1", "GF(2)", "1 + h*prod(a^n + a^4n + a^7n) in C_8n^m x C2", "2(8n)^m", "(3/2)(8n)^m", "2^m", Proven),
        entry(DC34b, "dc34b:m=1,n=1", "GF(2)", "1 + h^2*prod(a^n + a^4n + a^7n) in C_8n^m x C4", "4(8n)^m", "3(8n)^m", "2^(m+1)", Proven),
        entry(DC78, "dc78:m=1,n=1", "GF(2)", "1 + h*prod(a^n + a^8n + a^15n) in C_16n^m x C2", "2(16n)^m", "(7/4)(16n)^m", "2^m", Proven),
        entry(General2t, "general2t:m=1,n=1,t=2", "GF(2)", "1 + h*prod(a^n + a^(2^t)n + a^(2^(t+1)-1)n)", "2(2^(t+1)n)^m", "(2^t-1)/2^t of length", "as class1/dc34/dc78 for t = 1/2/3", Proven),
        entry(GF4SelfDual, "gf4selfdual:m=1,n=1", "GF(4)", "1 + h*prod(w a^n + a^2n + w a^3n) in C_4n^m x C2", "2(4n)^m", "(4n)^m", "2^(m+1)", Proven),
        entry(GF4DC34, "gf4dc34:m=1,n=1", "GF(4)", "1 + h*prod(w a^n + W a^3n) in C_4n^m x C2", "2(4n)^m", "(3/2)(4n)^m", "2^m", Proven),
        entry(GF4DC78, "gf4dc78:m=1,n=1", "GF(4)", "1 + h*prod(w a^n + W a^7n) in C_8n^m x C2", "2(8n)^m", "(7/4)(8n)^m", "2^m", Proven),
        entry(DualOfDC34, "dualofdc34:m=1,n=1", "GF(2)", "u^3 for the dc34 generator u", "2(8n)^m", "(1/2)(8n)^m", "2*4^((m+1)/2)*3^((m-1)/2) (m odd), 2*4^(m/2)*3^(m/2) (m even)", Conjectured),
    ]
}

impl CodeFamilySpec {
    fn from_str_unchecked(s: &str) -> Self {
        s.parse().expect("catalogue examples are valid")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(s: &str) -> CodeFamilySpec {
        s.parse().unwrap()
    }

    #[test]
    fn class1_hamming() {
        let inst = FamilyInstance::build(&spec("class1:m=1")).unwrap();
        assert_eq!(inst.generator().to_string(), "1 + h*(a1 + a1^2 + a1^3)");
        assert_eq!(inst.contract().rank, 4);
        assert_eq!(inst.check(), inst.generator());
    }

    #[test]
    fn dihedral_qr_11() {
        let inst = FamilyInstance::build(&CodeFamilySpec::dihedral_qr(11)).unwrap();
        assert_eq!(inst.group().to_string(), "D22");
        assert_eq!(inst.generator().support(), 6);
        assert_eq!(inst.contract().rank, 11);
        assert_eq!(inst.contract().nilpotency, Some(2));
    }

    #[test]
    fn dc78_ranks() {
        let inst = FamilyInstance::build(&spec("dc78:m=1")).unwrap();
        assert_eq!(inst.contract().nilpotency, Some(8));
        assert_eq!(inst.contract().rank, 28);
        assert_eq!(inst.check().rank(), 4);
    }

    #[test]
    fn dc34_check_is_u_cubed() {
        let inst = FamilyInstance::build(&spec("dc34:m=1")).unwrap();
        assert_eq!(*inst.check(), inst.generator().pow(3));
        assert_eq!(inst.check().rank(), 4);
    }

    #[test]
    fn dual_of_dc34() {
        let inst = FamilyInstance::build(&spec("dualofdc34:m=1,n=2")).unwrap();
        assert_eq!(inst.length(), 32);
        assert_eq!(inst.dimension(), 8);
        assert_eq!(inst.check().support(), 4);
    }

    #[test]
    fn gf4_families_validate() {
        for s in ["gf4selfdual:m=1", "gf4selfdual:m=2", "gf4dc34:m=1", "gf4dc34:m=2", "gf4dc78:m=1"] {
            FamilyInstance::build(&spec(s)).unwrap();
        }
        let inst = FamilyInstance::build(&spec("gf4dc34:m=1")).unwrap();
        assert!(inst.generator().is_bar_symmetric().unwrap());
        assert!(!inst.generator().is_symmetric());
    }

    #[test]
    fn general2t_matches_named_families() {
        for (t, named) in [(1, "class1:m=1"), (2, "dc34:m=1"), (3, "dc78:m=1")] {
            let g = build_generator_element(&spec(&format!("general2t:m=1,t={t}"))).unwrap();
            let h = build_generator_element(&spec(named)).unwrap();
            assert_eq!(g.coeffs(), h.coeffs());
        }
    }

    #[test]
    fn intertwined_restriction() {
        for family in ["class1", "class2", "dc34", "gf4dc34"] {
            for n in [2, 3] {
                let stretched = FamilyInstance::build(&spec(&format!("{family}:m=1,n={n}"))).unwrap();
                let base = build_generator_element(&spec(&format!("{family}:m=1"))).unwrap();
                let restricted = stretched.contract_stretch().unwrap();
                assert_eq!(restricted.coeffs(), base.coeffs(), "{family} n={n}");
            }
        }
    }

    #[test]
    fn claimed_examples() {
        let c = claimed_params(&spec("class1:m=2,n=1"));
        assert_eq!((c.n, c.k, c.d, c.status), (32, 16, Some(6), ClaimStatus::Proven));
        let c = claimed_params(&CodeFamilySpec::dihedral_qr(19));
        assert_eq!((c.n, c.k, c.d, c.status), (38, 19, Some(8), ClaimStatus::Conjectured));
        let c = claimed_params(&spec("dualofdc34:m=1"));
        assert_eq!((c.n, c.k, c.d), (16, 4, Some(8)));
        assert_eq!(claimed_params(&spec("class1:m=4")).d, Some(18));
        assert_eq!(claimed_params(&spec("class1:m=3")).d, Some(12));
        assert_eq!(claimed_params(&CodeFamilySpec::gen_dihedral(19, 2)).d, None);
    }

    #[test]
    fn catalog_covers_every_family() {
        let cat = catalog();
        assert_eq!(cat.len(), CodeFamily::ALL.len());
        for (entry, family) in cat.iter().zip(CodeFamily::ALL) {
            assert_eq!(entry.family, family);
        }
    }
}
