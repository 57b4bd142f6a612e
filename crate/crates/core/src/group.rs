//! Finite groups with explicit listings.
//!
//! Elements are addressed by their position in the listing. The listings are
//! the ones used for the code matrices:
//!
//! * `C_n` is `{1, a, a^2, ..., a^{n-1}}`;
//! * a direct product `H_1 × H_2 × ... × H_r` lists all of `H_1` first, then
//!   `k H_1` for the next element `k` of `H_2`, and so on, so the first factor
//!   varies fastest and the index is mixed-radix with factor 1 least
//!   significant;
//! * `D_{2m}` is `{1, a, ..., a^{m-1}, b, ba, ..., ba^{m-1}}` with `ab = ba^{-1}`;
//! * `Dih(A)` for abelian `A` is `A` followed by `bA`, with `b` inverting `A`.

use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

/// Groups up to this order get a cached multiplication table on first use.
pub const TABLE_LIMIT: usize = 4096;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("group order must be at least 1")]
    EmptyGroup,
    #[error("generalised dihedral group needs an abelian base group")]
    NonAbelianBase,
    #[error("direct product needs at least one factor")]
    NoFactors,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupKind {
    /// Cyclic group of order `n` with a named generator.
    Cyclic { n: usize, generator: String },
    DirectProduct(Vec<GroupSpec>),
    /// Dihedral group of order `2m`.
    Dihedral { m: usize },
    /// `A ⋊ C_2` with the involution acting by inversion.
    GeneralizedDihedral(Box<GroupSpec>),
}

/// A finite group with a fixed listing of its elements.
pub struct GroupSpec {
    kind: GroupKind,
    order: usize,
    table: OnceLock<Vec<u32>>,
}

impl Clone for GroupSpec {
    fn clone(&self) -> Self {
        GroupSpec {
            kind: self.kind.clone(),
            order: self.order,
            table: OnceLock::new(),
        }
    }
}

impl PartialEq for GroupSpec {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl Eq for GroupSpec {}

impl fmt::Debug for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupSpec({self})")
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            GroupKind::Cyclic { n, .. } => write!(f, "C{n}"),
            GroupKind::DirectProduct(fs) => {
                let parts: Vec<String> = fs.iter().map(|g| g.to_string()).collect();
                write!(f, "{}", parts.join("x"))
            }
            GroupKind::Dihedral { m } => write!(f, "D{}", 2 * m),
            GroupKind::GeneralizedDihedral(a) => write!(f, "Dih({a})"),
        }
    }
}

impl GroupSpec {
    fn from_kind(kind: GroupKind) -> Self {
        let order = match &kind {
            GroupKind::Cyclic { n, .. } => *n,
            GroupKind::DirectProduct(fs) => fs.iter().map(|g| g.order).product(),
            GroupKind::Dihedral { m } => 2 * m,
            GroupKind::GeneralizedDihedral(a) => 2 * a.order,
        };
        GroupSpec {
            kind,
            order,
            table: OnceLock::new(),
        }
    }

    pub fn cyclic(n: usize, generator: &str) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::EmptyGroup);
        }
        Ok(Self::from_kind(GroupKind::Cyclic {
            n,
            generator: generator.to_string(),
        }))
    }

    /// Direct product; the first factor varies fastest in the listing.
    pub fn direct_product(factors: Vec<GroupSpec>) -> Result<Self, GroupError> {
        if factors.is_empty() {
            return Err(GroupError::NoFactors);
        }
        Ok(Self::from_kind(GroupKind::DirectProduct(factors)))
    }

    /// Dihedral group of order `order = 2m`.
    pub fn dihedral(m: usize) -> Result<Self, GroupError> {
        if m == 0 {
            return Err(GroupError::EmptyGroup);
        }
        Ok(Self::from_kind(GroupKind::Dihedral { m }))
    }

    pub fn generalized_dihedral(base: GroupSpec) -> Result<Self, GroupError> {
        if !base.is_abelian() {
            return Err(GroupError::NonAbelianBase);
        }
        Ok(Self::from_kind(GroupKind::GeneralizedDihedral(Box::new(base))))
    }

    pub fn kind(&self) -> &GroupKind {
        &self.kind
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn is_abelian(&self) -> bool {
        match &self.kind {
            GroupKind::Cyclic { .. } => true,
            GroupKind::DirectProduct(fs) => fs.iter().all(|g| g.is_abelian()),
            GroupKind::Dihedral { m } => *m <= 2,
            GroupKind::GeneralizedDihedral(a) => (0..a.order).all(|x| a.inv(x) == x),
        }
    }

    /// Factors of a direct product (a single-element slice otherwise).
    pub fn factors(&self) -> &[GroupSpec] {
        match &self.kind {
            GroupKind::DirectProduct(fs) => fs,
            _ => std::slice::from_ref(self),
        }
    }

    /// Splits a direct-product index into per-factor indices.
    pub fn decompose(&self, mut index: usize) -> Vec<usize> {
        self.factors()
            .iter()
            .map(|f| {
                let d = index % f.order;
                index /= f.order;
                d
            })
            .collect()
    }

    /// Inverse of [`GroupSpec::decompose`].
    pub fn compose(&self, parts: &[usize]) -> usize {
        let fs = self.factors();
        debug_assert_eq!(parts.len(), fs.len());
        let mut index = 0;
        for (f, &d) in fs.iter().zip(parts).rev() {
            index = index * f.order + d;
        }
        index
    }

    /// Embeds element `index` of factor `factor` into the direct product.
    pub fn embed(&self, factor: usize, index: usize) -> usize {
        let fs = self.factors();
        let stride: usize = fs[..factor].iter().map(|f| f.order).product();
        index * stride
    }

    fn table(&self) -> Option<&[u32]> {
        if self.order > TABLE_LIMIT {
            return None;
        }
        Some(self.table.get_or_init(|| {
            let n = self.order;
            let mut t = vec![0u32; n * n];
            for i in 0..n {
                for j in 0..n {
                    t[i * n + j] = self.mul_uncached(i, j) as u32;
                }
            }
            t
        }))
    }

    /// Index of the product `g_i g_j`.
    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < self.order && j < self.order);
        match self.table() {
            Some(t) => t[i * self.order + j] as usize,
            None => self.mul_uncached(i, j),
        }
    }

    /// Product computed from the group structure without the table.
    pub fn mul_uncached(&self, i: usize, j: usize) -> usize {
        match &self.kind {
            GroupKind::Cyclic { n, .. } => (i + j) % n,
            GroupKind::DirectProduct(fs) => {
                let (mut x, mut y, mut out, mut place) = (i, j, 0, 1);
                for f in fs {
                    let (dx, dy) = (x % f.order, y % f.order);
                    out += f.mul_uncached(dx, dy) * place;
                    x /= f.order;
                    y /= f.order;
                    place *= f.order;
                }
                out
            }
            GroupKind::Dihedral { m } => {
                let m = *m;
                let (bi, ei) = (i / m, i % m);
                let (bj, ej) = (j / m, j % m);
                // a^e b = b a^{-e}
                let e = if bj == 1 { (ej + m - ei) % m } else { (ei + ej) % m };
                (bi ^ bj) * m + e
            }
            GroupKind::GeneralizedDihedral(a) => {
                let n = a.order;
                let (bi, xi) = (i / n, i % n);
                let (bj, xj) = (j / n, j % n);
                let x = if bj == 1 { a.inv(xi) } else { xi };
                (bi ^ bj) * n + a.mul_uncached(x, xj)
            }
        }
    }

    /// Index of the inverse of `g_i`.
    pub fn inv(&self, i: usize) -> usize {
        match &self.kind {
            GroupKind::Cyclic { n, .. } => (n - i) % n,
            GroupKind::DirectProduct(fs) => {
                let (mut x, mut out, mut place) = (i, 0, 1);
                for f in fs {
                    out += f.inv(x % f.order) * place;
                    x /= f.order;
                    place *= f.order;
                }
                out
            }
            GroupKind::Dihedral { m } => {
                if i < *m {
                    (m - i) % m
                } else {
                    i
                }
            }
            GroupKind::GeneralizedDihedral(a) => {
                if i < a.order {
                    a.inv(i)
                } else {
                    i
                }
            }
        }
    }

    /// Index of `g_i^e`.
    pub fn pow(&self, i: usize, e: usize) -> usize {
        (0..e).fold(0, |acc, _| self.mul(acc, i))
    }

    /// Multiplicative order of the element `g_i`.
    pub fn element_order(&self, i: usize) -> usize {
        let mut x = i;
        let mut n = 1;
        while x != 0 {
            x = self.mul(x, i);
            n += 1;
        }
        n
    }

    /// Human-readable word for `g_i`, e.g. `h*a2*a1^3` or `b*a^4`.
    pub fn format_element(&self, i: usize) -> String {
        let w = self.word(i);
        if w.is_empty() {
            "1".to_string()
        } else {
            w.join("*")
        }
    }

    fn word(&self, i: usize) -> Vec<String> {
        fn power(name: &str, e: usize) -> Vec<String> {
            match e {
                0 => vec![],
                1 => vec![name.to_string()],
                _ => vec![format!("{name}^{e}")],
            }
        }
        match &self.kind {
            GroupKind::Cyclic { generator, .. } => power(generator, i),
            GroupKind::DirectProduct(fs) => {
                let parts = self.decompose(i);
                fs.iter()
                    .zip(parts)
                    .rev()
                    .flat_map(|(f, d)| f.word(d))
                    .collect()
            }
            GroupKind::Dihedral { m } => {
                let mut w = if i >= *m { vec!["b".to_string()] } else { vec![] };
                w.extend(power("a", i % m));
                w
            }
            GroupKind::GeneralizedDihedral(a) => {
                let mut w = if i >= a.order { vec!["b".to_string()] } else { vec![] };
                w.extend(a.word(i % a.order));
                w
            }
        }
    }
}
