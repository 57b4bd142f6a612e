//! Minimum distance: exhaustive Gray-code enumeration and randomized
//! information-set search.

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::field::FieldElement;
use crate::linalg::{scale_gf4_planes, FieldMatrix};

use crate::constructions::InnerProduct;

use super::{dual_code, CodeError, LinearCode};

pub const DEFAULT_EXHAUSTIVE_CAP: u32 = 28;
pub const DEFAULT_SEED: u64 = 0xC0DE;

/// Number of enumeration bits needed to visit every codeword: `k` over
/// GF(2), `2k` over GF(4).
pub fn enumeration_bits(code: &LinearCode) -> u32 {
    let per_row = if code.field().is_gf4() { 2 } else { 1 };
    (code.dimension() * per_row) as u32
}

/// Packed GF(2)-basis of the code viewed as a binary vector space.
struct Basis {
    planes: usize,
    words: usize,
    vectors: Vec<Vec<u64>>,
}

impl Basis {
    fn new(generator: &FieldMatrix) -> Self {
        let (planes, words) = generator.packing().expect("codes are packed");
        let reduced = generator.echelon().matrix;
        let mut vectors = Vec::new();
        for r in 0..reduced.rows() {
            let row = reduced.packed_row(r).expect("packed").to_vec();
            if planes == 2 {
                let mut w = row.clone();
                let (lo, hi) = w.split_at_mut(words);
                scale_gf4_planes(lo, hi, crate::field::OMEGA);
                vectors.push(row);
                vectors.push(w);
            } else {
                vectors.push(row);
            }
        }
        Basis { planes, words, vectors }
    }

    #[inline]
    fn weight(&self, v: &[u64]) -> usize {
        if self.planes == 1 {
            v.iter().map(|w| w.count_ones() as usize).sum()
        } else {
            let (lo, hi) = v.split_at(self.words);
            lo.iter().zip(hi).map(|(l, h)| (l | h).count_ones() as usize).sum()
        }
    }

    /// Visits the weight of every codeword with Gray-code index in
    /// `start..end` (index 0 is the zero word).
    fn scan(&self, start: u64, end: u64, mut visit: impl FnMut(usize)) {
        let width = self.planes * self.words;
        let mut cur = vec![0u64; width];
        let gray = start ^ (start >> 1);
        for (b, v) in self.vectors.iter().enumerate() {
            if gray >> b & 1 == 1 {
                xor_into(&mut cur, v);
            }
        }
        visit(self.weight(&cur));
        for i in start + 1..end {
            xor_into(&mut cur, &self.vectors[i.trailing_zeros() as usize]);
            visit(self.weight(&cur));
        }
    }

    /// Splits the full Gray sequence into ranges and folds each in parallel.
    fn par_fold<T: Send>(
        &self,
        init: impl Fn() -> T + Sync,
        visit: impl Fn(&mut T, usize) + Sync,
        merge: impl Fn(T, T) -> T + Sync + Send,
    ) -> T {
        let bits = self.vectors.len() as u32;
        let total = 1u64 << bits;
        let chunk_bits = bits.saturating_sub(12).max(bits.min(10));
        let chunk = 1u64 << chunk_bits.min(bits);
        let chunks = total / chunk;
        (0..chunks)
            .into_par_iter()
            .map(|c| {
                let mut acc = init();
                self.scan(c * chunk, (c + 1) * chunk, |w| visit(&mut acc, w));
                acc
            })
            .reduce(&init, merge)
    }
}

#[inline]
fn xor_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= s;
    }
}

fn check_cap(code: &LinearCode, cap: u32) -> Result<(), CodeError> {
    let bits = enumeration_bits(code);
    if bits > cap || bits >= 63 {
        return Err(CodeError::CapExceeded { bits, cap });
    }
    Ok(())
}

/// Exact minimum distance by enumerating all `q^k - 1` nonzero codewords.
pub fn min_distance_exhaustive(code: &LinearCode, cap: u32) -> Result<usize, CodeError> {
    check_cap(code, cap)?;
    if code.dimension() == 0 {
        return Err(CodeError::ZeroCode);
    }
    let basis = Basis::new(code.generator());
    let none = usize::MAX;
    let d = basis.par_fold(
        || none,
        |best, w| {
            if w != 0 && w < *best {
                *best = w;
            }
        },
        |a, b| a.min(b),
    );
    Ok(d)
}

/// Number of codewords of each weight `0..=n`; sums to `q^k`.
pub fn weight_distribution(code: &LinearCode, cap: u32) -> Result<Vec<u64>, CodeError> {
    check_cap(code, cap)?;
    let n = code.length();
    let basis = Basis::new(code.generator());
    Ok(basis.par_fold(
        || vec![0u64; n + 1],
        |hist, w| hist[w] += 1,
        |mut a, b| {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
            a
        },
    ))
}

/// Weight distribution of a code from that of its euclidean dual,
/// `A_j = |C⊥|^{-1} Σ_i B_i K_j(i)` with the q-ary Krawtchouk polynomials
/// `K_j(i) = Σ_s (-1)^s (q-1)^{j-s} C(i,s) C(n-i,j-s)`.
pub fn macwilliams_transform(dual_distribution: &[u64], q: u32, n: usize) -> Vec<u64> {
    assert_eq!(dual_distribution.len(), n + 1);
    let mut binom = vec![vec![BigInt::from(0); n + 1]; n + 1];
    for a in 0..=n {
        binom[a][0] = BigInt::from(1);
        for b in 1..=a {
            binom[a][b] = &binom[a - 1][b - 1] + &binom[a - 1][b];
        }
    }
    let qm1: Vec<BigInt> = (0..=n).map(|e| BigInt::from(q - 1).pow(e as u32)).collect();
    let size: BigInt = dual_distribution.iter().map(|&b| BigInt::from(b)).sum();
    (0..=n)
        .map(|j| {
            let mut total = BigInt::from(0);
            for (i, &b) in dual_distribution.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let mut k = BigInt::from(0);
                for s in 0..=j.min(i) {
                    if j - s > n - i {
                        continue;
                    }
                    let term = &qm1[j - s] * &binom[i][s] * &binom[n - i][j - s];
                    if s % 2 == 0 {
                        k += term;
                    } else {
                        k -= term;
                    }
                }
                total += k * BigInt::from(b);
            }
            assert!((&total % &size) == BigInt::from(0), "MacWilliams sum not divisible");
            u64::try_from(total / &size).expect("count fits in u64")
        })
        .collect()
}

/// Weight distribution computed by enumerating the euclidean dual and
/// applying the MacWilliams transform. Useful when `n - k` is small.
pub fn weight_distribution_via_dual(code: &LinearCode, cap: u32) -> Result<Vec<u64>, CodeError> {
    let dual = dual_code(code, InnerProduct::Euclidean)?;
    let b = weight_distribution(&dual, cap)?;
    Ok(macwilliams_transform(&b, code.field().order(), code.length()))
}

/// How an exact distance was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExactMethod {
    Exhaustive,
    MacWilliams,
}

/// Exact minimum distance by whichever of the code and its dual is within
/// the enumeration cap.
pub fn min_distance_exact(code: &LinearCode, cap: u32) -> Result<(usize, ExactMethod), CodeError> {
    if enumeration_bits(code) <= cap {
        return Ok((min_distance_exhaustive(code, cap)?, ExactMethod::Exhaustive));
    }
    let per_row = if code.field().is_gf4() { 2 } else { 1 };
    let dual_bits = ((code.length() - code.dimension()) * per_row) as u32;
    if dual_bits > cap {
        return Err(CodeError::CapExceeded {
            bits: enumeration_bits(code).min(dual_bits),
            cap,
        });
    }
    let hist = weight_distribution_via_dual(code, cap)?;
    let d = hist
        .iter()
        .enumerate()
        .skip(1)
        .find(|(_, &c)| c > 0)
        .map(|(w, _)| w)
        .ok_or(CodeError::ZeroCode)?;
    Ok((d, ExactMethod::MacWilliams))
}

/// Result of a randomized distance search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    /// Upper bound on the minimum distance (the code length if nothing
    /// was examined).
    pub weight: usize,
    pub codeword: Option<Vec<FieldElement>>,
    /// Codewords examined.
    pub examined: u64,
    pub seed: u64,
}

/// Randomized information-set search: permute the columns, reduce to
/// systematic form and examine every row and every combination of two
/// rows. `budget` bounds the number of codewords examined.
pub fn min_distance_search(code: &LinearCode, budget: u64, seed: u64) -> SearchOutcome {
    let n = code.length();
    let k = code.dimension();
    let mut out = SearchOutcome {
        weight: n,
        codeword: None,
        examined: 0,
        seed,
    };
    if k == 0 {
        return out;
    }
    let field = code.field().clone();
    let scalars: Vec<FieldElement> = field.nonzero_elements().collect();
    let (planes, words) = code.generator().packing().expect("codes are packed");
    let width = planes * words;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..n).collect();
    let mut scratch = vec![0u64; width];
    let weight = |v: &[u64]| -> usize {
        if planes == 1 {
            v.iter().map(|w| w.count_ones() as usize).sum()
        } else {
            let (lo, hi) = v.split_at(words);
            lo.iter().zip(hi).map(|(l, h)| (l | h).count_ones() as usize).sum()
        }
    };
    while out.examined < budget {
        perm.shuffle(&mut rng);
        let reduced = code.generator().select_columns(&perm).echelon().matrix;
        let rows: Vec<&[u64]> = (0..k).map(|r| reduced.packed_row(r).expect("packed")).collect();
        let record = |w: usize, i: usize, j: Option<(usize, FieldElement)>, out: &mut SearchOutcome| {
            if w < out.weight {
                let mut word = vec![FieldElement::ZERO; n];
                for (col, &orig) in perm.iter().enumerate() {
                    let mut v = reduced.get(i, col);
                    if let Some((j, c)) = j {
                        v = field.add(v, field.mul(c, reduced.get(j, col)));
                    }
                    word[orig] = v;
                }
                out.weight = w;
                out.codeword = Some(word);
            }
        };
        for i in 0..k {
            if out.examined >= budget {
                return out;
            }
            out.examined += 1;
            record(weight(rows[i]), i, None, &mut out);
        }
        for i in 0..k {
            for j in i + 1..k {
                for &c in &scalars {
                    if out.examined >= budget {
                        return out;
                    }
                    out.examined += 1;
                    scratch.copy_from_slice(rows[j]);
                    if planes == 2 {
                        let (lo, hi) = scratch.split_at_mut(words);
                        scale_gf4_planes(lo, hi, c);
                    }
                    xor_into(&mut scratch, rows[i]);
                    let w = weight(&scratch);
                    if w < out.weight {
                        record(w, i, Some((j, c)), &mut out);
                    }
                }
            }
        }
    }
    out
}
