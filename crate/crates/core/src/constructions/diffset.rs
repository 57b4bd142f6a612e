//! Quadratic-residue (Paley) difference sets.

use std::sync::Arc;

use crate::field::{FieldElement, FieldSpec};
use crate::group::GroupSpec;
use crate::groupring::GroupRingElement;

use super::ConstructionError;

/// A `(v, k, λ)` difference set inside a finite group.
#[derive(Debug, Clone)]
pub struct DifferenceSet {
    pub group: Arc<GroupSpec>,
    /// Listing indices of the members, increasing.
    pub elements: Vec<usize>,
    pub v: usize,
    pub k: usize,
    pub lambda: usize,
}

/// Factors `q = p^k` for a prime `p`, or `None` when `q` is not a prime power.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let (mut rest, mut k) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

/// The additive group of GF(p^k) listed by field index: `C_p` for prime
/// fields, `C_p^k` with the constant coefficient varying fastest otherwise.
pub fn additive_group(field: &FieldSpec, prefix: &str) -> GroupSpec {
    let (p, k) = (field.characteristic() as usize, field.degree() as usize);
    if k == 1 {
        return GroupSpec::cyclic(p, prefix).expect("p >= 2");
    }
    let factors = (1..=k)
        .map(|j| GroupSpec::cyclic(p, &format!("{prefix}{j}")).expect("p >= 2"))
        .collect();
    GroupSpec::direct_product(factors).expect("k >= 1")
}

impl DifferenceSet {
    /// Number of ways each group element arises as `d_i d_j^{-1}` with `i ≠ j`.
    pub fn difference_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.group.order()];
        for &x in &self.elements {
            for &y in &self.elements {
                if x != y {
                    counts[self.group.mul(x, self.group.inv(y))] += 1;
                }
            }
        }
        counts
    }

    /// True when every non-identity element arises exactly `λ` times.
    pub fn is_valid(&self) -> bool {
        let counts = self.difference_counts();
        counts[0] == 0 && counts[1..].iter().all(|&c| c == self.lambda)
    }

    /// `D` as an element of `Z_2[group]`.
    pub fn to_element(&self, field: Arc<FieldSpec>) -> GroupRingElement {
        GroupRingElement::from_terms(
            field,
            self.group.clone(),
            self.elements.iter().map(|&g| (g, FieldElement::ONE)),
        )
    }
}

/// The nonzero squares of GF(q), `q ≡ 3 (mod 4)`, as a
/// `(q, (q-1)/2, (q-3)/4)` difference set in the additive group of GF(q).
pub fn qr_difference_set(q: u32) -> Result<DifferenceSet, ConstructionError> {
    let (p, k) = prime_power(q).ok_or(ConstructionError::NotPrimePower(q))?;
    if q % 4 != 3 {
        return Err(ConstructionError::InvalidParameter(format!(
            "quadratic-residue difference sets need q ≡ 3 (mod 4), got q = {q}"
        )));
    }
    let field = FieldSpec::new(p, k)?;
    let group = Arc::new(additive_group(&field, "a"));
    let elements: Vec<usize> = field
        .nonzero_elements()
        .filter(|&a| field.is_nonzero_square(a))
        .map(|a| a.index())
        .collect();
    let ds = DifferenceSet {
        group,
        v: q as usize,
        k: elements.len(),
        lambda: (q as usize - 3) / 4,
        elements,
    };
    if !ds.is_valid() {
        return Err(ConstructionError::ContractViolation(format!(
            "squares of GF({q}) are not a difference set"
        )));
    }
    Ok(ds)
}

/// True iff `Dᵀ D = 1` in `Z_2[group]`.
pub fn diffset_char2_check(ds: &DifferenceSet) -> bool {
    let f = Arc::new(FieldSpec::gf2());
    let d = ds.to_element(f.clone());
    let dtd = d.transpose(false).expect("no conjugation").mul(&d).expect("same ring");
    dtd == GroupRingElement::one(f, ds.group.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Counts differences directly over the integers mod q (prime q only).
    fn brute_force_lambda(q: usize, set: &[usize]) -> Vec<usize> {
        let mut counts = vec![0; q];
        for &x in set {
            for &y in set {
                if x != y {
                    counts[(x + q - y) % q] += 1;
                }
            }
        }
        counts
    }

    #[test]
    fn paley_11() {
        let ds = qr_difference_set(11).unwrap();
        assert_eq!(ds.elements, vec![1, 3, 4, 5, 9]);
        assert_eq!((ds.v, ds.k, ds.lambda), (11, 5, 2));
        let counts = brute_force_lambda(11, &ds.elements);
        assert!(counts[1..].iter().all(|&c| c == 2));
        assert!(diffset_char2_check(&ds));
    }

    #[test]
    fn paley_parameters() {
        for (q, k, lambda, char2) in [
            (7, 3, 1, false),
            (11, 5, 2, true),
            (19, 9, 4, true),
            (23, 11, 5, false),
            (27, 13, 6, true),
        ] {
            let ds = qr_difference_set(q).unwrap();
            assert_eq!((ds.v, ds.k, ds.lambda), (q as usize, k, lambda));
            assert!(ds.is_valid());
            assert_eq!(diffset_char2_check(&ds), char2, "q = {q}");
        }
    }

    #[test]
    fn gf27_set_lives_in_elementary_abelian_group() {
        let ds = qr_difference_set(27).unwrap();
        assert_eq!(ds.group.to_string(), "C3xC3xC3");
        let counts = ds.difference_counts();
        assert_eq!(counts[0], 0);
        assert!(counts[1..].iter().all(|&c| c == 6));
    }

    #[test]
    fn rejects_bad_q() {
        assert!(matches!(qr_difference_set(13), Err(ConstructionError::InvalidParameter(_))));
        assert!(matches!(qr_difference_set(15), Err(ConstructionError::NotPrimePower(15))));
        assert_eq!(prime_power(27), Some((3, 3)));
        assert_eq!(prime_power(1), None);
    }
}
