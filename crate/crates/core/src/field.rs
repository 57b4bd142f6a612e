//! Arithmetic in small finite fields GF(p^k).
//!
//! Elements are stored as indices in `[0, q)`. The index of an element is the
//! base-`p` number formed by its polynomial coefficients, constant term least
//! significant, so for `p = 2` addition is XOR of indices. In GF(4) this gives
//! `0, 1, ω = 2, ω² = 3`.
//!
//! Multiplication goes through exp/log tables over a primitive element.

use std::fmt;

use thiserror::Error;

/// Largest field order supported.
pub const MAX_FIELD_ORDER: u32 = 1 << 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("characteristic {0} is not prime")]
    NotPrime(u32),
    #[error("degree must be at least 1")]
    ZeroDegree,
    #[error("field of order {p}^{k} exceeds the supported maximum of 2^16")]
    TooLarge { p: u32, k: u32 },
    #[error("zero has no multiplicative inverse")]
    InverseOfZero,
    #[error("conjugation is only defined here for GF(4), not GF({0})")]
    ConjugationUnsupported(u32),
}

/// An element of a [`FieldSpec`], identified by its index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FieldElement(pub u16);

impl FieldElement {
    pub const ZERO: Self = FieldElement(0);
    pub const ONE: Self = FieldElement(1);

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// GF(4) primitive element ω.
pub const OMEGA: FieldElement = FieldElement(2);
/// GF(4) element ω² = ω + 1.
pub const OMEGA2: FieldElement = FieldElement(3);

/// Binary operations accepted by [`FieldSpec::apply`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Mul,
    Inv,
    Neg,
}

/// Immutable arithmetic context for GF(p^k).
#[derive(Clone)]
pub struct FieldSpec {
    p: u32,
    k: u32,
    q: u32,
    /// Monic modulus, coefficients lowest degree first (length k + 1).
    modulus: Vec<u32>,
    /// `exp[i] = g^i` for `i in 0..q-1`.
    exp: Vec<u16>,
    /// `log[a]` for nonzero `a`; `log[0]` is unused.
    log: Vec<u16>,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec")
            .field("p", &self.p)
            .field("k", &self.k)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k
    }
}

impl Eq for FieldSpec {}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q)
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Coefficient vector of length `len` encoded by `value` in base `p`.
fn digits(mut value: u32, p: u32, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(value % p);
        value /= p;
    }
    out
}

/// Remainder of `a` modulo monic `b` over Z_p (coefficients lowest first).
fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - db;
        if lead != 0 {
            for (i, &bc) in b.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - (lead * bc) % p) % p;
            }
        }
        r.pop();
    }
    r
}

fn monic(p: u32, degree: usize, tail: u32) -> Vec<u32> {
    let mut c = digits(tail, p, degree);
    c.push(1);
    c
}

/// True when monic `f` has no monic factor of degree in `1..=deg/2`.
fn is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        let count = p.pow(d as u32);
        for tail in 0..count {
            let g = monic(p, d, tail);
            if poly_rem(f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl FieldSpec {
    /// Builds GF(p^k) with the lexicographically smallest irreducible monic
    /// modulus of degree `k` (compared on coefficients from `x^{k-1}` down).
    pub fn new(p: u32, k: u32) -> Result<Self, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if k == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let q = (p as u64).checked_pow(k).filter(|&q| q <= MAX_FIELD_ORDER as u64);
        let q = q.ok_or(FieldError::TooLarge { p, k })? as u32;

        let modulus = if k == 1 {
            vec![0, 1]
        } else {
            (0..q)
                .map(|tail| monic(p, k as usize, tail))
                .find(|f| is_irreducible(f, p))
                .expect("an irreducible polynomial exists in every degree")
        };

        let mut field = FieldSpec {
            p,
            k,
            q,
            modulus,
            exp: Vec::new(),
            log: Vec::new(),
        };
        let generator = (1..q)
            .find(|&g| field.slow_order(g) == q - 1)
            .expect("the multiplicative group of a finite field is cyclic");
        let mut exp = Vec::with_capacity((q - 1) as usize);
        let mut log = vec![0u16; q as usize];
        let mut x = 1u32;
        for i in 0..q - 1 {
            exp.push(x as u16);
            log[x as usize] = i as u16;
            x = field.slow_mul(x, generator);
        }
        field.exp = exp;
        field.log = log;
        Ok(field)
    }

    pub fn gf2() -> Self {
        Self::new(2, 1).expect("GF(2)")
    }

    pub fn gf4() -> Self {
        Self::new(2, 2).expect("GF(4)")
    }

    /// Multiplication by polynomial reduction, used only to build the tables.
    fn slow_mul(&self, a: u32, b: u32) -> u32 {
        let k = self.k as usize;
        let (p, da, db) = (self.p, digits(a, self.p, k), digits(b, self.p, k));
        let mut prod = vec![0u32; 2 * k - 1];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        let r = if k == 1 {
            prod
        } else {
            poly_rem(&prod, &self.modulus, p)
        };
        r.iter().rev().fold(0, |acc, &c| acc * p + c)
    }

    fn slow_order(&self, g: u32) -> u32 {
        let mut x = g;
        let mut n = 1;
        while x != 1 {
            x = self.slow_mul(x, g);
            n += 1;
            if n > self.q {
                return 0;
            }
        }
        n
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    /// Monic modulus coefficients, constant term first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn is_gf2(&self) -> bool {
        self.q == 2
    }

    pub fn is_gf4(&self) -> bool {
        self.q == 4
    }

    pub fn element(&self, index: u32) -> Option<FieldElement> {
        (index < self.q).then_some(FieldElement(index as u16))
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q).map(|i| FieldElement(i as u16))
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = FieldElement> {
        (1..self.q).map(|i| FieldElement(i as u16))
    }

    /// The primitive element used for the exp/log tables (ω in GF(4)).
    pub fn primitive(&self) -> FieldElement {
        FieldElement(self.exp[1 % self.exp.len()])
    }

    /// `g^e` for the table generator `g`.
    pub fn exp(&self, e: usize) -> FieldElement {
        FieldElement(self.exp[e % (self.q as usize - 1)])
    }

    /// Discrete log of a nonzero element.
    pub fn log(&self, a: FieldElement) -> Option<usize> {
        (!a.is_zero()).then(|| self.log[a.index()] as usize)
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.p == 2 {
            return FieldElement(a.0 ^ b.0);
        }
        if self.k == 1 {
            return FieldElement(((a.0 as u32 + b.0 as u32) % self.p) as u16);
        }
        let (mut x, mut y, mut out, mut place) = (a.0 as u32, b.0 as u32, 0u32, 1u32);
        for _ in 0..self.k {
            out += ((x % self.p + y % self.p) % self.p) * place;
            x /= self.p;
            y /= self.p;
            place *= self.p;
        }
        FieldElement(out as u16)
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        if self.p == 2 {
            return a;
        }
        let (mut x, mut out, mut place) = (a.0 as u32, 0u32, 1u32);
        for _ in 0..self.k {
            out += ((self.p - x % self.p) % self.p) * place;
            x /= self.p;
            place *= self.p;
        }
        FieldElement(out as u16)
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.is_zero() || b.is_zero() {
            return FieldElement::ZERO;
        }
        let e = self.log[a.index()] as usize + self.log[b.index()] as usize;
        FieldElement(self.exp[e % (self.q as usize - 1)])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement, FieldError> {
        if a.is_zero() {
            return Err(FieldError::InverseOfZero);
        }
        let n = self.q as usize - 1;
        Ok(FieldElement(self.exp[(n - self.log[a.index()] as usize) % n]))
    }

    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        if e == 0 {
            return FieldElement::ONE;
        }
        if a.is_zero() {
            return FieldElement::ZERO;
        }
        let n = self.q as u64 - 1;
        let l = self.log[a.index()] as u64;
        FieldElement(self.exp[((l * (e % n)) % n) as usize])
    }

    /// Dispatches one of the four basic operations; `b` is required for
    /// `Add` and `Mul` and ignored otherwise.
    pub fn apply(
        &self,
        op: FieldOp,
        a: FieldElement,
        b: Option<FieldElement>,
    ) -> Result<FieldElement, FieldError> {
        let b = b.unwrap_or(FieldElement::ZERO);
        match op {
            FieldOp::Add => Ok(self.add(a, b)),
            FieldOp::Mul => Ok(self.mul(a, b)),
            FieldOp::Neg => Ok(self.neg(a)),
            FieldOp::Inv => self.inv(a),
        }
    }

    /// Frobenius conjugation `a ↦ a²` of GF(4): swaps ω and ω².
    pub fn conj(&self, a: FieldElement) -> Result<FieldElement, FieldError> {
        if !self.is_gf4() {
            return Err(FieldError::ConjugationUnsupported(self.q));
        }
        Ok(self.mul(a, a))
    }

    /// Short textual symbol: digits for prime fields, `0 1 w W` for GF(4),
    /// `g^e` otherwise.
    pub fn symbol(&self, a: FieldElement) -> String {
        if self.k == 1 {
            return a.0.to_string();
        }
        if self.is_gf4() {
            return ["0", "1", "w", "W"][a.index()].to_string();
        }
        match self.log(a) {
            None => "0".to_string(),
            Some(0) => "1".to_string(),
            Some(e) => format!("g^{e}"),
        }
    }

    /// Inverse of [`FieldSpec::symbol`] for GF(2) and GF(4).
    pub fn parse_symbol(&self, s: &str) -> Option<FieldElement> {
        if self.is_gf4() {
            return match s {
                "0" => Some(FieldElement(0)),
                "1" => Some(FieldElement(1)),
                "w" => Some(OMEGA),
                "W" => Some(OMEGA2),
                _ => None,
            };
        }
        s.parse::<u32>().ok().and_then(|v| self.element(v))
    }

    /// True when `a` is a nonzero square.
    pub fn is_nonzero_square(&self, a: FieldElement) -> bool {
        match self.log(a) {
            None => false,
            Some(l) => self.p == 2 || l % 2 == 0,
        }
    }

    /// Coefficient vector of `a` over Z_p, constant term first.
    pub fn coefficients(&self, a: FieldElement) -> Vec<u32> {
        digits(a.0 as u32, self.p, self.k as usize)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf2_basics() {
        let f = FieldSpec::gf2();
        assert_eq!(f.order(), 2);
        assert_eq!(f.add(FieldElement::ONE, FieldElement::ONE), FieldElement::ZERO);
        assert_eq!(f.elements().count(), 2);
    }

    #[test]
    fn gf4_omega_relation() {
        let f = FieldSpec::gf4();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        assert_eq!(f.primitive(), OMEGA);
        assert_eq!(f.mul(OMEGA, OMEGA), OMEGA2);
        assert_eq!(f.add(OMEGA, OMEGA2), FieldElement::ONE);
        // ω² + ω + 1 = 0
        let s = f.add(f.add(f.mul(OMEGA, OMEGA), OMEGA), FieldElement::ONE);
        assert_eq!(s, FieldElement::ZERO);
    }

    #[test]
    fn gf4_conjugation() {
        let f = FieldSpec::gf4();
        assert_eq!(f.conj(OMEGA).unwrap(), OMEGA2);
        assert_eq!(f.conj(OMEGA2).unwrap(), OMEGA);
        assert_eq!(f.conj(FieldElement::ONE).unwrap(), FieldElement::ONE);
        assert_eq!(f.conj(FieldElement::ZERO).unwrap(), FieldElement::ZERO);
        for a in f.elements() {
            assert_eq!(f.conj(f.conj(a).unwrap()).unwrap(), a);
            for b in f.elements() {
                let lhs = f.conj(f.mul(a, b)).unwrap();
                let rhs = f.mul(f.conj(a).unwrap(), f.conj(b).unwrap());
                assert_eq!(lhs, rhs);
            }
        }
        assert_eq!(
            FieldSpec::gf2().conj(FieldElement::ONE),
            Err(FieldError::ConjugationUnsupported(2))
        );
    }

    #[test]
    fn gf27_tables_are_a_bijection() {
        let f = FieldSpec::new(3, 3).unwrap();
        assert_eq!(f.order(), 27);
        // x^3 + 2x + 1 is the first irreducible monic cubic in this ordering.
        assert_eq!(f.modulus(), &[1, 2, 0, 1]);
        let mut seen = vec![false; 27];
        for e in 0..26 {
            let a = f.exp(e);
            assert!(!a.is_zero());
            assert!(!seen[a.index()], "exp table repeats {a:?}");
            seen[a.index()] = true;
        }
        assert_eq!(seen.iter().filter(|&&s| s).count(), 26);
    }

    #[test]
    fn exp_log_round_trip() {
        for (p, k) in [(2, 1), (2, 2), (2, 4), (3, 3), (5, 2), (7, 1), (2, 8)] {
            let f = FieldSpec::new(p, k).unwrap();
            for a in f.nonzero_elements() {
                assert_eq!(f.exp(f.log(a).unwrap()), a);
            }
        }
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for (p, k) in [(2, 2), (2, 3), (3, 2), (5, 1), (7, 1), (2, 6), (3, 3)] {
            let f = FieldSpec::new(p, k).unwrap();
            let els: Vec<_> = f.elements().collect();
            for &a in &els {
                assert_eq!(f.add(a, f.neg(a)), FieldElement::ZERO);
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), FieldElement::ONE);
                }
                for &b in &els {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                }
            }
            // associativity and distributivity on a stride through the triples
            for (i, &a) in els.iter().enumerate() {
                for &b in els.iter().skip(i % 3).step_by(3) {
                    for &c in els.iter().skip(i % 5).step_by(5) {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(FieldSpec::new(4, 1), Err(FieldError::NotPrime(4)));
        assert_eq!(FieldSpec::new(2, 0), Err(FieldError::ZeroDegree));
        assert_eq!(FieldSpec::new(2, 17), Err(FieldError::TooLarge { p: 2, k: 17 }));
        assert_eq!(FieldSpec::new(257, 2), Err(FieldError::TooLarge { p: 257, k: 2 }));
        assert_eq!(FieldSpec::gf4().inv(FieldElement::ZERO), Err(FieldError::InverseOfZero));
    }

    #[test]
    fn apply_dispatch() {
        let f = FieldSpec::gf4();
        assert_eq!(f.apply(FieldOp::Mul, OMEGA, Some(OMEGA)).unwrap(), OMEGA2);
        assert_eq!(f.apply(FieldOp::Inv, OMEGA, None).unwrap(), OMEGA2);
        assert_eq!(f.apply(FieldOp::Neg, OMEGA, None).unwrap(), OMEGA);
        assert!(f.apply(FieldOp::Inv, FieldElement::ZERO, None).is_err());
    }

    #[test]
    fn squares_mod_11() {
        let f = FieldSpec::new(11, 1).unwrap();
        let squares: Vec<u16> = f
            .nonzero_elements()
            .filter(|&a| f.is_nonzero_square(a))
            .map(|a| a.0)
            .collect();
        assert_eq!(squares, vec![1, 3, 4, 5, 9]);
    }
}
