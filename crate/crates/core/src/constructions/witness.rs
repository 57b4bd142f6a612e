//! Low-weight codewords from structured multipliers.
//!
//! For tower families the multiplier `s` ranges over products `∏ τ_i` with
//! each `τ_i` one of `1`, `1 + c·a_i^j` or the family factor `f_i`, plus the
//! shifted forms `∏ τ_i · (u_m + h)`. For dihedral families, whose code is
//! invariant under left multiplication by group elements, the multiplier
//! ranges over `1`, `1 + c·g` and `1 + g + g'`.

use rayon::prelude::*;

use crate::field::FieldElement;
use crate::groupring::GroupRingElement;

use super::{ConstructionError, FamilyInstance};

/// Upper limit on the number of tower multipliers enumerated.
const MAX_TOWER_CANDIDATES: usize = 1 << 18;
/// Dihedral three-term multipliers are tried up to this group order.
const MAX_TRIPLE_ORDER: usize = 512;

#[derive(Debug, Clone)]
pub struct Witness {
    pub weight: usize,
    pub codeword: Vec<FieldElement>,
    pub multiplier: GroupRingElement,
    /// Number of multipliers tried.
    pub candidates: usize,
}

/// Lowest-weight codeword `s·u` over the structured multiplier set.
pub fn search_witness(inst: &FamilyInstance) -> Witness {
    if inst.spec().family.is_dihedral() {
        dihedral_search(inst)
    } else {
        tower_search(inst)
    }
}

/// [`search_witness`], failing when the result exceeds the claimed distance.
pub fn witness_codeword(inst: &FamilyInstance) -> Result<Witness, ConstructionError> {
    let w = search_witness(inst);
    match inst.claimed().d {
        Some(claim) if w.weight > claim => Err(ConstructionError::WitnessAboveClaim {
            found: w.weight,
            claim,
        }),
        _ => Ok(w),
    }
}

fn tower_options(inst: &FamilyInstance, stride: usize) -> Vec<Vec<GroupRingElement>> {
    let field = inst.field();
    let group = inst.group();
    let order = inst.spec().factor_order();
    let one = GroupRingElement::one(field.clone(), group.clone());
    inst.factors()
        .iter()
        .enumerate()
        .map(|(i, factor)| {
            let mut opts = vec![one.clone()];
            for j in (stride..order).step_by(stride) {
                for c in field.nonzero_elements() {
                    let mut e = one.clone();
                    e.set_coeff(group.embed(i, j), c);
                    opts.push(e);
                }
            }
            opts.push(factor.clone());
            opts
        })
        .collect()
}

fn tower_search(inst: &FamilyInstance) -> Witness {
    let n = inst.spec().n as usize;
    let mut options = tower_options(inst, 1);
    if options.iter().map(Vec::len).product::<usize>() > MAX_TOWER_CANDIDATES {
        options = tower_options(inst, n);
    }
    let sizes: Vec<usize> = options.iter().map(Vec::len).collect();
    let total: usize = sizes.iter().product();
    let (tower, shift) = inst.tower().expect("tower family");
    let shifted = {
        let mut t = tower.clone();
        let c = inst.field().add(t.coeff(shift), FieldElement::ONE);
        t.set_coeff(shift, c);
        t
    };
    let u = inst.generator();
    let best = (0..total)
        .into_par_iter()
        .flat_map_iter(|idx| {
            let mut rest = idx;
            let mut s = options[0][rest % sizes[0]].clone();
            rest /= sizes[0];
            for (opts, &size) in options.iter().zip(&sizes).skip(1) {
                s = s.mul(&opts[rest % size]).expect("same ring");
                rest /= size;
            }
            let alt = s.mul(&shifted).expect("same ring");
            [(2 * idx, s), (2 * idx + 1, alt)]
        })
        .filter_map(|(key, s)| {
            let c = s.mul(u).expect("same ring");
            (!c.is_zero()).then(|| (c.support(), key, s, c))
        })
        .min_by_key(|(w, key, _, _)| (*w, *key))
        .expect("s = 1 gives a nonzero codeword");
    Witness {
        weight: best.0,
        codeword: best.3.to_vector(),
        multiplier: best.2,
        candidates: 2 * total,
    }
}

fn dihedral_search(inst: &FamilyInstance) -> Witness {
    let field = inst.field();
    let group = inst.group();
    let order = group.order();
    let u = inst.generator();
    let one = GroupRingElement::one(field.clone(), group.clone());
    let mut multipliers: Vec<(usize, usize, FieldElement)> = vec![(0, 0, FieldElement::ZERO)];
    for g in 1..order {
        for c in field.nonzero_elements() {
            multipliers.push((g, 0, c));
        }
    }
    if order <= MAX_TRIPLE_ORDER {
        for g in 1..order {
            for h in g + 1..order {
                multipliers.push((g, h, FieldElement::ONE));
            }
        }
    }
    let candidates = multipliers.len();
    let best = multipliers
        .into_par_iter()
        .enumerate()
        .filter_map(|(key, (g, h, c))| {
            let mut s = one.clone();
            if g != 0 {
                s.set_coeff(g, c);
            }
            if h != 0 {
                s.set_coeff(h, FieldElement::ONE);
            }
            let cw = s.mul(u).expect("same ring");
            (!cw.is_zero()).then(|| (cw.support(), key, s, cw))
        })
        .min_by_key(|(w, key, _, _)| (*w, *key))
        .expect("s = 1 gives a nonzero codeword");
    Witness {
        weight: best.0,
        codeword: best.3.to_vector(),
        multiplier: best.2,
        candidates,
    }
}
