//! JSON reports for checks against known identities.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::exact::Scalar;
use crate::tensor::{sign_relation, SignRelation, Tensor};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Identity {
    pub name: String,
    pub status: SignRelation,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sign: Option<i8>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CarrierSummary {
    pub dim: usize,
    pub matches_parabolic: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub construction: String,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub i: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub identities: Vec<Identity>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub carrier: Option<CarrierSummary>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty", default)]
    pub details: BTreeMap<String, Value>,
}

impl Report {
    pub fn new(construction: &str, n: usize, i: Option<usize>, seed: Option<u64>) -> Self {
        Report {
            construction: construction.to_string(),
            n,
            i,
            seed,
            identities: Vec::new(),
            carrier: None,
            details: BTreeMap::new(),
        }
    }

    /// Records a yes/no check as `exact` or `failed`.
    pub fn check(&mut self, name: &str, ok: bool) -> bool {
        let status = if ok { SignRelation::Exact } else { SignRelation::Failed };
        self.identities.push(Identity { name: name.to_string(), status, sign: None });
        ok
    }

    /// Records how `computed` compares with `expected`, including the sign.
    pub fn compare<const D: usize>(
        &mut self,
        name: &str,
        computed: &Tensor<Scalar, D>,
        expected: &Tensor<Scalar, D>,
    ) -> SignRelation {
        let status = sign_relation(computed, expected);
        let sign = match status {
            SignRelation::Exact => Some(1),
            SignRelation::UpToSign => Some(-1),
            SignRelation::Failed => None,
        };
        self.identities.push(Identity { name: name.to_string(), status, sign });
        status
    }

    pub fn detail(&mut self, key: &str, value: impl Into<Value>) {
        self.details.insert(key.to_string(), value.into());
    }

    /// No identity failed (sign flips are accepted).
    pub fn passed(&self) -> bool {
        self.identities.iter().all(|x| x.status != SignRelation::Failed)
    }

    pub fn identity(&self, name: &str) -> Option<&Identity> {
        self.identities.iter().find(|x| x.name == name)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;
    use crate::tensor::Tensor2;

    #[test]
    fn records_sign() {
        let a = Tensor2::from_terms(2, [([1, 2, 2, 1], q(1, 2)), ([2, 1, 1, 2], q(-1, 2))]);
        let mut r = Report::new("demo", 2, None, None);
        assert_eq!(r.compare("flip", &a, &a.neg()), SignRelation::UpToSign);
        r.check("trivial", true);
        assert!(r.passed());
        let json = r.to_json_string();
        assert!(json.contains("\"up-to-sign\""));
        assert!(json.contains("\"sign\": -1"));
        assert!(!json.contains("seed"));
        r.check("broken", false);
        assert!(!r.passed());
    }
}
