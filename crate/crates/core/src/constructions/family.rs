use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::diffset::prime_power;
use super::ConstructionError;

/// Largest group order a family instance may have. Construction verifies
/// the rank of the full `|G| × |G|` matrix, which is what bounds this.
pub const MAX_GROUP_ORDER: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CodeFamily {
    Class1,
    Class2,
    DihedralQR,
    GenDihedral,
    DC34,
    DC34b,
    DC78,
    General2t,
    GF4SelfDual,
    GF4DC34,
    GF4DC78,
    DualOfDC34,
}

impl CodeFamily {
    pub const ALL: [CodeFamily; 12] = [
        CodeFamily::Class1,
        CodeFamily::Class2,
        CodeFamily::DihedralQR,
        CodeFamily::GenDihedral,
        CodeFamily::DC34,
        CodeFamily::DC34b,
        CodeFamily::DC78,
        CodeFamily::General2t,
        CodeFamily::GF4SelfDual,
        CodeFamily::GF4DC34,
        CodeFamily::GF4DC78,
        CodeFamily::DualOfDC34,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CodeFamily::Class1 => "class1",
            CodeFamily::Class2 => "class2",
            CodeFamily::DihedralQR => "dihedralqr",
            CodeFamily::GenDihedral => "gendihedral",
            CodeFamily::DC34 => "dc34",
            CodeFamily::DC34b => "dc34b",
            CodeFamily::DC78 => "dc78",
            CodeFamily::General2t => "general2t",
            CodeFamily::GF4SelfDual => "gf4selfdual",
            CodeFamily::GF4DC34 => "gf4dc34",
            CodeFamily::GF4DC78 => "gf4dc78",
            CodeFamily::DualOfDC34 => "dualofdc34",
        }
    }

    /// Built from a difference set in a dihedral group rather than a tower
    /// of cyclic factors.
    pub fn is_dihedral(self) -> bool {
        matches!(self, CodeFamily::DihedralQR | CodeFamily::GenDihedral)
    }

    pub fn is_gf4(self) -> bool {
        matches!(
            self,
            CodeFamily::GF4SelfDual | CodeFamily::GF4DC34 | CodeFamily::GF4DC78
        )
    }
}

impl fmt::Display for CodeFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CodeFamily {
    type Err = ConstructionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim().to_ascii_lowercase().replace(['-', '_'], "");
        CodeFamily::ALL
            .into_iter()
            .find(|f| f.name() == key)
            .ok_or_else(|| ConstructionError::UnknownFamily(s.trim().to_string()))
    }
}

/// A family together with its parameters.
///
/// `m` is the number of cyclic factors in the tower, `n` the intertwining
/// stretch, `q` the difference-set field order and `t` the exponent of
/// General2t or the number of difference-set factors of GenDihedral.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CodeFamilySpec {
    pub family: CodeFamily,
    pub m: u32,
    pub n: u32,
    pub q: u32,
    pub t: u32,
}

impl CodeFamilySpec {
    /// A tower family with `n = 1` and `t = 1`.
    pub fn new(family: CodeFamily, m: u32) -> Self {
        CodeFamilySpec { family, m, n: 1, q: 0, t: 1 }
    }

    pub fn with_n(mut self, n: u32) -> Self {
        self.n = n;
        self
    }

    pub fn with_t(mut self, t: u32) -> Self {
        self.t = t;
        self
    }

    pub fn dihedral_qr(q: u32) -> Self {
        CodeFamilySpec { family: CodeFamily::DihedralQR, m: 1, n: 1, q, t: 1 }
    }

    pub fn gen_dihedral(q: u32, t: u32) -> Self {
        CodeFamilySpec { family: CodeFamily::GenDihedral, m: 1, n: 1, q, t }
    }

    /// Order of the cyclic factors of a tower family.
    pub fn factor_order(&self) -> usize {
        let base = match self.family {
            CodeFamily::Class1 | CodeFamily::GF4SelfDual | CodeFamily::GF4DC34 => 4,
            CodeFamily::Class2 => 6,
            CodeFamily::DC34 | CodeFamily::DC34b | CodeFamily::GF4DC78 | CodeFamily::DualOfDC34 => 8,
            CodeFamily::DC78 => 16,
            CodeFamily::General2t => 1 << (self.t + 1),
            CodeFamily::DihedralQR | CodeFamily::GenDihedral => return 0,
        };
        base * self.n as usize
    }

    /// Order of the group carrying the code, i.e. the code length.
    pub fn length(&self) -> usize {
        match self.family {
            CodeFamily::DihedralQR => 2 * self.q as usize,
            CodeFamily::GenDihedral => 2 * (self.q as usize).pow(self.t),
            CodeFamily::DC34b => 4 * self.factor_order().pow(self.m),
            _ => 2 * self.factor_order().pow(self.m),
        }
    }

    pub fn validate(&self) -> Result<(), ConstructionError> {
        let bad = |msg: String| Err(ConstructionError::InvalidParameter(msg));
        if self.family.is_dihedral() {
            let Some(_) = prime_power(self.q) else {
                return Err(ConstructionError::NotPrimePower(self.q));
            };
            if self.q % 8 != 3 {
                return bad(format!("{} needs q ≡ 3 (mod 8), got q = {}", self.family, self.q));
            }
            if self.n != 1 {
                return bad(format!("{} has no intertwined form", self.family));
            }
            if self.family == CodeFamily::GenDihedral && self.t == 0 {
                return bad("gendihedral needs t >= 1".into());
            }
        } else {
            if self.m == 0 {
                return bad("m must be at least 1".into());
            }
            if self.n == 0 {
                return bad("n must be at least 1".into());
            }
            if self.family == CodeFamily::General2t {
                if !(1..=3).contains(&self.t) {
                    return bad(format!("general2t supports t in 1..=3, got t = {}", self.t));
                }
                if self.m > 2 {
                    return bad(format!("general2t supports m <= 2, got m = {}", self.m));
                }
            }
        }
        let order = self.checked_length();
        match order {
            Some(o) if o <= MAX_GROUP_ORDER => Ok(()),
            _ => Err(ConstructionError::TooLarge {
                order: order.unwrap_or(usize::MAX),
                limit: MAX_GROUP_ORDER,
            }),
        }
    }

    fn checked_length(&self) -> Option<usize> {
        match self.family {
            CodeFamily::DihedralQR => (self.q as usize).checked_mul(2),
            CodeFamily::GenDihedral => (self.q as usize).checked_pow(self.t)?.checked_mul(2),
            CodeFamily::DC34b => self.factor_order().checked_pow(self.m)?.checked_mul(4),
            _ => self.factor_order().checked_pow(self.m)?.checked_mul(2),
        }
    }
}

impl fmt::Display for CodeFamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            CodeFamily::DihedralQR => write!(f, "{}:q={}", self.family, self.q),
            CodeFamily::GenDihedral => write!(f, "{}:q={},t={}", self.family, self.q, self.t),
            CodeFamily::General2t => {
                write!(f, "{}:m={},n={},t={}", self.family, self.m, self.n, self.t)
            }
            _ => write!(f, "{}:m={},n={}", self.family, self.m, self.n),
        }
    }
}

impl FromStr for CodeFamilySpec {
    type Err = ConstructionError;

    /// Parses `family[:key=value[,key=value...]]` with keys `m`, `n`, `q`, `t`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse_err = |msg: &str| ConstructionError::Parse(s.to_string(), msg.to_string());
        let (name, params) = match s.split_once(':') {
            Some((name, params)) => (name, params),
            None => (s, ""),
        };
        let family: CodeFamily = name.parse()?;
        let mut spec = CodeFamilySpec { family, m: 1, n: 1, q: 0, t: 1 };
        let mut seen_q = false;
        for item in params.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| parse_err(&format!("expected key=value, found `{item}`")))?;
            let value: u32 = value
                .trim()
                .parse()
                .map_err(|_| parse_err(&format!("`{}` is not a non-negative integer", value.trim())))?;
            match key.trim() {
                "m" if !family.is_dihedral() => spec.m = value,
                "n" => spec.n = value,
                "q" if family.is_dihedral() => {
                    spec.q = value;
                    seen_q = true;
                }
                "t" if matches!(family, CodeFamily::General2t | CodeFamily::GenDihedral) => {
                    spec.t = value
                }
                other => {
                    return Err(parse_err(&format!("key `{other}` does not apply to {family}")))
                }
            }
        }
        if family.is_dihedral() && !seen_q {
            return Err(parse_err("missing q"));
        }
        spec.validate()?;
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_examples() {
        let s: CodeFamilySpec = "class1:m=2,n=1".parse().unwrap();
        assert_eq!(s, CodeFamilySpec::new(CodeFamily::Class1, 2));
        assert_eq!(s.length(), 32);
        let s: CodeFamilySpec = "dihedralqr:q=19".parse().unwrap();
        assert_eq!(s.length(), 38);
        let s: CodeFamilySpec = "GF4DC34:m=2".parse().unwrap();
        assert_eq!((s.family, s.length()), (CodeFamily::GF4DC34, 32));
        let s: CodeFamilySpec = "gendihedral:q=11,t=2".parse().unwrap();
        assert_eq!(s.length(), 242);
        let s: CodeFamilySpec = "dc34b".parse().unwrap();
        assert_eq!(s.length(), 32);
    }

    #[test]
    fn display_round_trips() {
        for text in ["class2:m=2,n=1", "general2t:m=1,n=2,t=3", "gendihedral:q=11,t=2", "dihedralqr:q=27"] {
            let s: CodeFamilySpec = text.parse().unwrap();
            assert_eq!(s.to_string(), text);
            assert_eq!(s.to_string().parse::<CodeFamilySpec>().unwrap(), s);
        }
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(matches!("hamming:m=1".parse::<CodeFamilySpec>(), Err(ConstructionError::UnknownFamily(_))));
        assert!(matches!("class1:m=0".parse::<CodeFamilySpec>(), Err(ConstructionError::InvalidParameter(_))));
        assert!(matches!("class1:q=11".parse::<CodeFamilySpec>(), Err(ConstructionError::Parse(..))));
        assert!(matches!("class1:m".parse::<CodeFamilySpec>(), Err(ConstructionError::Parse(..))));
        assert!(matches!("dihedralqr".parse::<CodeFamilySpec>(), Err(ConstructionError::Parse(..))));
        assert!(matches!("dihedralqr:q=7".parse::<CodeFamilySpec>(), Err(ConstructionError::InvalidParameter(_))));
        assert!(matches!("dihedralqr:q=35".parse::<CodeFamilySpec>(), Err(ConstructionError::NotPrimePower(35))));
        assert!(matches!("dihedralqr:q=11,n=2".parse::<CodeFamilySpec>(), Err(ConstructionError::InvalidParameter(_))));
        assert!(matches!("general2t:m=3,t=2".parse::<CodeFamilySpec>(), Err(ConstructionError::InvalidParameter(_))));
        assert!(matches!("class1:m=7".parse::<CodeFamilySpec>(), Err(ConstructionError::TooLarge { .. })));
    }
}
