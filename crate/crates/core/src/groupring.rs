//! Group-ring elements `Σ α_g g` over a finite field.
//!
//! Coefficients are stored densely in listing order. The matrix of `u` has
//! entry `(i, j)` equal to the coefficient of `g_i^{-1} g_j`, so row `i` is
//! the element `g_i u` and the row space of the matrix is the left ideal
//! `RG·u`. With this convention `u ↦ U` is a ring homomorphism and the
//! transpose `uᵀ` maps to `Uᵀ`.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::field::{FieldElement, FieldSpec};
use crate::group::{GroupKind, GroupSpec};
use crate::linalg::FieldMatrix;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupRingError {
    #[error("group-ring elements live over different fields or groups")]
    MismatchedContext,
    #[error("the bar operator needs GF(4) coefficients, found {0}")]
    ConjugationUnsupported(String),
}

#[derive(Clone)]
pub struct GroupRingElement {
    field: Arc<FieldSpec>,
    group: Arc<GroupSpec>,
    coeffs: Vec<FieldElement>,
}

impl PartialEq for GroupRingElement {
    fn eq(&self, other: &Self) -> bool {
        self.same_ring(other) && self.coeffs == other.coeffs
    }
}

impl Eq for GroupRingElement {}

impl GroupRingElement {
    pub fn zero(field: Arc<FieldSpec>, group: Arc<GroupSpec>) -> Self {
        let n = group.order();
        GroupRingElement {
            field,
            group,
            coeffs: vec![FieldElement::ZERO; n],
        }
    }

    pub fn one(field: Arc<FieldSpec>, group: Arc<GroupSpec>) -> Self {
        Self::monomial(field, group, 0, FieldElement::ONE)
    }

    /// `c · g_index`.
    pub fn monomial(field: Arc<FieldSpec>, group: Arc<GroupSpec>, index: usize, c: FieldElement) -> Self {
        let mut u = Self::zero(field, group);
        u.coeffs[index] = c;
        u
    }

    /// Sum of `c · g` over the given terms; repeated group elements add up.
    pub fn from_terms(
        field: Arc<FieldSpec>,
        group: Arc<GroupSpec>,
        terms: impl IntoIterator<Item = (usize, FieldElement)>,
    ) -> Self {
        let mut u = Self::zero(field, group);
        for (g, c) in terms {
            u.coeffs[g] = u.field.add(u.coeffs[g], c);
        }
        u
    }

    pub fn from_coeffs(field: Arc<FieldSpec>, group: Arc<GroupSpec>, coeffs: Vec<FieldElement>) -> Self {
        assert_eq!(coeffs.len(), group.order(), "one coefficient per group element");
        GroupRingElement {
            field,
            group,
            coeffs,
        }
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    pub fn group(&self) -> &Arc<GroupSpec> {
        &self.group
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn coeff(&self, g: usize) -> FieldElement {
        self.coeffs[g]
    }

    pub fn set_coeff(&mut self, g: usize, c: FieldElement) {
        self.coeffs[g] = c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Number of nonzero coefficients.
    pub fn support(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Indices of the nonzero coefficients.
    pub fn support_set(&self) -> Vec<usize> {
        (0..self.coeffs.len()).filter(|&g| !self.coeffs[g].is_zero()).collect()
    }

    fn same_ring(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.field, &other.field) || self.field == other.field)
            && (Arc::ptr_eq(&self.group, &other.group) || self.group == other.group)
    }

    fn check(&self, other: &Self) -> Result<(), GroupRingError> {
        if self.same_ring(other) {
            Ok(())
        } else {
            Err(GroupRingError::MismatchedContext)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, GroupRingError> {
        self.check(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| self.field.add(a, b))
            .collect();
        Ok(GroupRingElement {
            coeffs,
            ..self.clone()
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, GroupRingError> {
        self.check(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| self.field.sub(a, b))
            .collect();
        Ok(GroupRingElement {
            coeffs,
            ..self.clone()
        })
    }

    pub fn scale(&self, c: FieldElement) -> Self {
        let coeffs = self.coeffs.iter().map(|&a| self.field.mul(a, c)).collect();
        GroupRingElement {
            coeffs,
            ..self.clone()
        }
    }

    /// Convolution `(uv)_g = Σ_{xy = g} u_x v_y`, iterating over the support
    /// of both factors.
    pub fn mul(&self, other: &Self) -> Result<Self, GroupRingError> {
        self.check(other)?;
        let f = &self.field;
        let mut out = vec![FieldElement::ZERO; self.coeffs.len()];
        let right: Vec<(usize, FieldElement)> = other
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(g, &c)| (g, c))
            .collect();
        for (x, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for &(y, b) in &right {
                let g = self.group.mul(x, y);
                out[g] = f.add(out[g], f.mul(a, b));
            }
        }
        Ok(GroupRingElement {
            coeffs: out,
            ..self.clone()
        })
    }

    /// `u^e` by repeated squaring; `u^0 = 1`.
    pub fn pow(&self, mut e: u64) -> Self {
        let mut result = Self::one(self.field.clone(), self.group.clone());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base).expect("same ring");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same ring");
            }
        }
        result
    }

    /// Smallest `e ≤ limit` with `u^e = 0`.
    pub fn nilpotency_index(&self, limit: u64) -> Option<u64> {
        let mut p = self.clone();
        for e in 1..=limit {
            if p.is_zero() {
                return Some(e);
            }
            if e < limit {
                p = p.mul(self).expect("same ring");
            }
        }
        None
    }

    /// `uᵀ`: the coefficient of `g` becomes the coefficient of `g^{-1}`.
    /// With `conjugate` the coefficients are also conjugated, giving the bar
    /// operator `ū` over GF(4).
    pub fn transpose(&self, conjugate: bool) -> Result<Self, GroupRingError> {
        if conjugate && !self.field.is_gf4() {
            return Err(GroupRingError::ConjugationUnsupported(self.field.to_string()));
        }
        let mut out = vec![FieldElement::ZERO; self.coeffs.len()];
        for (g, &c) in self.coeffs.iter().enumerate() {
            let c = if conjugate {
                self.field.mul(c, c)
            } else {
                c
            };
            out[self.group.inv(g)] = c;
        }
        Ok(GroupRingElement {
            coeffs: out,
            ..self.clone()
        })
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.coeffs.len()).all(|g| self.coeffs[g] == self.coeffs[self.group.inv(g)])
    }

    /// `ū = u` (GF(4) only).
    pub fn is_bar_symmetric(&self) -> Result<bool, GroupRingError> {
        Ok(self.transpose(true)? == *self)
    }

    /// The `|G| × |G|` matrix with entry `(i, j)` = coefficient of `g_i^{-1} g_j`.
    pub fn to_matrix(&self) -> FieldMatrix {
        let n = self.coeffs.len();
        let mut m = FieldMatrix::zeros(self.field.clone(), n, n);
        let support = self.support_set();
        for i in 0..n {
            // row i is g_i u
            for &x in &support {
                m.set(i, self.group.mul(i, x), self.coeffs[x]);
            }
        }
        m
    }

    pub fn rank(&self) -> usize {
        self.to_matrix().rank()
    }

    /// Lifts an element of factor `factor` of a direct product into the
    /// product group ring.
    pub fn embed_factor(&self, product: &Arc<GroupSpec>, factor: usize) -> Self {
        let mut u = Self::zero(self.field.clone(), product.clone());
        for (g, &c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                u.coeffs[product.embed(factor, g)] = c;
            }
        }
        u
    }

    /// Codeword vector of the element in listing order.
    pub fn to_vector(&self) -> Vec<FieldElement> {
        self.coeffs.clone()
    }

    fn term(&self, g: usize, c: FieldElement) -> String {
        let word = self.group.format_element(g);
        match (c == FieldElement::ONE, word == "1") {
            (true, _) => word,
            (false, true) => self.field.symbol(c),
            (false, false) => format!("{}*{}", self.field.symbol(c), word),
        }
    }
}

impl fmt::Display for GroupRingElement {
    /// Renders e.g. `1 + h*(a1 + a1^2 + a1^3)`: terms sharing the same
    /// element of the last direct-product factor are grouped.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let support = self.support_set();
        if support.is_empty() {
            return write!(f, "0");
        }
        let GroupKind::DirectProduct(factors) = self.group.kind() else {
            let terms: Vec<String> = support.iter().map(|&g| self.term(g, self.coeffs[g])).collect();
            return write!(f, "{}", terms.join(" + "));
        };
        let last = factors.last().unwrap();
        let inner_order = self.group.order() / last.order();
        let inner_factors = factors[..factors.len() - 1].to_vec();
        let inner_group = if inner_factors.is_empty() {
            None
        } else {
            Some(Arc::new(GroupSpec::direct_product(inner_factors).expect("nonempty")))
        };
        let mut parts = Vec::new();
        for coset in 0..last.order() {
            let members: Vec<usize> = support
                .iter()
                .copied()
                .filter(|&g| g / inner_order == coset)
                .collect();
            if members.is_empty() {
                continue;
            }
            if coset == 0 || members.len() == 1 || inner_group.is_none() {
                parts.extend(members.iter().map(|&g| self.term(g, self.coeffs[g])));
                continue;
            }
            let inner = GroupRingElement::from_terms(
                self.field.clone(),
                inner_group.clone().unwrap(),
                members.iter().map(|&g| (g % inner_order, self.coeffs[g])),
            );
            parts.push(format!("{}*({inner})", last.format_element(coset)));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupRingElement[{} over {}]({self})", self.field, self.group)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{OMEGA, OMEGA2};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn gf2() -> Arc<FieldSpec> {
        Arc::new(FieldSpec::gf2())
    }

    fn gf4() -> Arc<FieldSpec> {
        Arc::new(FieldSpec::gf4())
    }

    fn c4_c2() -> Arc<GroupSpec> {
        Arc::new(
            GroupSpec::direct_product(vec![
                GroupSpec::cyclic(4, "a1").unwrap(),
                GroupSpec::cyclic(2, "h").unwrap(),
            ])
            .unwrap(),
        )
    }

    fn ones(field: &Arc<FieldSpec>, group: &Arc<GroupSpec>, idx: &[usize]) -> GroupRingElement {
        GroupRingElement::from_terms(
            field.clone(),
            group.clone(),
            idx.iter().map(|&g| (g, FieldElement::ONE)),
        )
    }

    #[test]
    fn hamming_generator_squares_to_zero() {
        let (f, g) = (gf2(), c4_c2());
        // u = 1 + h(a + a^2 + a^3); h a^j has index 4 + j
        let u = ones(&f, &g, &[0, 5, 6, 7]);
        assert!(u.mul(&u).unwrap().is_zero());
        assert_eq!(u.mul(&GroupRingElement::one(f.clone(), g.clone())).unwrap(), u);
        assert!(u.is_symmetric());
        assert_eq!(u.support(), 4);
        assert_eq!(u.rank(), 4);
        assert_eq!(u.to_string(), "1 + h*(a1 + a1^2 + a1^3)");
        assert_eq!(u.nilpotency_index(8), Some(2));
    }

    #[test]
    fn hamming_matrix_block_form() {
        let (f, g) = (gf2(), c4_c2());
        let u = ones(&f, &g, &[0, 5, 6, 7]);
        let m = u.to_matrix();
        let b = [[0, 1, 1, 1], [1, 0, 1, 1], [1, 1, 0, 1], [1, 1, 1, 0]];
        for i in 0..8 {
            for j in 0..8 {
                let expected = if i / 4 == j / 4 {
                    (i == j) as u16
                } else {
                    b[i % 4][j % 4]
                };
                assert_eq!(m.get(i, j).0, expected, "entry ({i},{j})");
            }
        }
    }

    #[test]
    fn class2_factor_squares_to_one() {
        let f = gf2();
        let g = Arc::new(GroupSpec::cyclic(6, "a").unwrap());
        let u1 = ones(&f, &g, &[1, 2, 3, 4, 5]);
        assert_eq!(u1.mul(&u1).unwrap(), GroupRingElement::one(f, g));
    }

    #[test]
    fn rate_three_quarter_factor() {
        let f = gf2();
        let c8 = Arc::new(GroupSpec::cyclic(8, "a1").unwrap());
        let u1 = ones(&f, &c8, &[1, 4, 7]);
        assert_eq!(u1.pow(4), GroupRingElement::one(f.clone(), c8.clone()));
        let g = Arc::new(
            GroupSpec::direct_product(vec![
                GroupSpec::cyclic(8, "a1").unwrap(),
                GroupSpec::cyclic(2, "h").unwrap(),
            ])
            .unwrap(),
        );
        let u = ones(&f, &g, &[0, 9, 12, 15]);
        assert!(u.pow(4).is_zero());
        assert!(!u.pow(2).is_zero());
        assert_eq!(u.nilpotency_index(8), Some(4));
        assert!(u.pow(0) == GroupRingElement::one(f, g));
    }

    #[test]
    fn gf4_factor_fourth_power_and_bar() {
        let f = gf4();
        let c4 = Arc::new(GroupSpec::cyclic(4, "a").unwrap());
        let u1 = GroupRingElement::from_terms(f.clone(), c4.clone(), [(1, OMEGA), (3, OMEGA2)]);
        assert_eq!(u1.pow(4), GroupRingElement::one(f.clone(), c4.clone()));
        assert!(u1.is_bar_symmetric().unwrap());
        assert!(!u1.is_symmetric());
        let wa = GroupRingElement::monomial(f.clone(), c4.clone(), 1, OMEGA);
        let bar = wa.transpose(true).unwrap();
        assert_eq!(bar, GroupRingElement::monomial(f.clone(), c4.clone(), 3, OMEGA2));
        assert_eq!(bar.transpose(true).unwrap(), wa);
        assert_eq!(
            GroupRingElement::one(gf2(), c4).transpose(true),
            Err(GroupRingError::ConjugationUnsupported("GF(2)".into()))
        );
    }

    #[test]
    fn transpose_of_generator() {
        let f = gf2();
        let c4 = Arc::new(GroupSpec::cyclic(4, "a").unwrap());
        let a = GroupRingElement::monomial(f.clone(), c4.clone(), 1, FieldElement::ONE);
        assert_eq!(
            a.transpose(false).unwrap(),
            GroupRingElement::monomial(f, c4, 3, FieldElement::ONE)
        );
    }

    #[test]
    fn zero_element() {
        let z = GroupRingElement::zero(gf2(), c4_c2());
        assert_eq!(z.support(), 0);
        assert_eq!(z.rank(), 0);
        assert_eq!(z.to_string(), "0");
        assert_eq!(GroupRingElement::one(gf2(), c4_c2()).to_matrix().rank(), 8);
    }

    #[test]
    fn mismatched_rings_are_rejected() {
        let a = GroupRingElement::one(gf2(), c4_c2());
        let b = GroupRingElement::one(gf4(), c4_c2());
        assert_eq!(a.mul(&b), Err(GroupRingError::MismatchedContext));
        let c = GroupRingElement::one(gf2(), Arc::new(GroupSpec::cyclic(8, "a").unwrap()));
        assert_eq!(a.add(&c), Err(GroupRingError::MismatchedContext));
    }

    fn random_element(f: &Arc<FieldSpec>, g: &Arc<GroupSpec>, rng: &mut ChaCha8Rng) -> GroupRingElement {
        let coeffs = (0..g.order())
            .map(|_| FieldElement(rng.gen_range(0..f.order()) as u16))
            .collect();
        GroupRingElement::from_coeffs(f.clone(), g.clone(), coeffs)
    }

    #[test]
    fn matrix_map_is_a_homomorphism() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let groups = [
            c4_c2(),
            Arc::new(GroupSpec::dihedral(5).unwrap()),
            Arc::new(
                GroupSpec::generalized_dihedral(
                    GroupSpec::direct_product(vec![
                        GroupSpec::cyclic(3, "x").unwrap(),
                        GroupSpec::cyclic(3, "y").unwrap(),
                    ])
                    .unwrap(),
                )
                .unwrap(),
            ),
        ];
        for f in [gf2(), gf4()] {
            for g in &groups {
                for _ in 0..10 {
                    let u = random_element(&f, g, &mut rng);
                    let v = random_element(&f, g, &mut rng);
                    let uv = u.mul(&v).unwrap();
                    assert_eq!(uv.to_matrix(), u.to_matrix().mul(&v.to_matrix()).unwrap());
                    assert_eq!(u.transpose(false).unwrap().to_matrix(), u.to_matrix().transpose());
                }
            }
        }
    }
}
