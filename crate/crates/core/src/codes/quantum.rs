use std::fmt;

use serde::{Deserialize, Serialize};

use crate::constructions::InnerProduct;

use super::{is_dual_containing, CodeError, LinearCode};

/// Parameters `[[n, 2k - n, d]]` of the stabilizer code obtained from a
/// dual-containing code. `d` is the classical distance, which bounds the
/// quantum distance from below.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuantumParams {
    pub n: usize,
    pub k: usize,
    pub d: Option<usize>,
    pub inner_product: InnerProduct,
    pub source: String,
}

impl fmt::Display for QuantumParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.d {
            Some(d) => write!(f, "[[{},{},{}]]", self.n, self.k, d),
            None => write!(f, "[[{},{}]]", self.n, self.k),
        }
    }
}

pub fn quantum_params(
    code: &LinearCode,
    ip: InnerProduct,
    d: Option<usize>,
) -> Result<QuantumParams, CodeError> {
    if !is_dual_containing(code, ip)? {
        return Err(CodeError::NotDualContaining(ip));
    }
    Ok(QuantumParams {
        n: code.length(),
        k: 2 * code.dimension() - code.length(),
        d,
        inner_product: ip,
        source: code.provenance().to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{CodeFamilySpec, FamilyInstance};

    fn params(s: &str, d: usize) -> Result<QuantumParams, CodeError> {
        let spec: CodeFamilySpec = s.parse().unwrap();
        let inst = FamilyInstance::build(&spec).unwrap();
        let code = LinearCode::from_instance(&inst).unwrap();
        quantum_params(&code, inst.inner_product(), Some(d))
    }

    #[test]
    fn published_parameter_lists() {
        assert_eq!(params("gf4dc34:m=1", 2).unwrap().to_string(), "[[8,4,2]]");
        assert_eq!(params("dc34:m=1", 2).unwrap().to_string(), "[[16,8,2]]");
        assert_eq!(params("gf4selfdual:m=1", 4).unwrap().to_string(), "[[8,0,4]]");
        assert_eq!(params("class1:m=1", 4).unwrap().k, 0);
    }

    #[test]
    fn rejects_non_dual_containing() {
        let spec: CodeFamilySpec = "dualofdc34:m=1".parse().unwrap();
        let code = LinearCode::from_instance(&FamilyInstance::build(&spec).unwrap()).unwrap();
        assert!(matches!(
            quantum_params(&code, InnerProduct::Euclidean, None),
            Err(CodeError::NotDualContaining(_))
        ));
    }
}
