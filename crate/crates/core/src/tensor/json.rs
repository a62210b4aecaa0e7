//! Canonical JSON encoding for tensors.
//!
//! `{"n": 3, "ring": "Q", "terms": [{"idx": [1, 2, 3, 2], "coeff": "1/1"}]}`;
//! over `Q[t]` a coefficient is the list of its `t`-coefficients. Terms are
//! written in lexicographic index order and rationals always as `num/den`,
//! so decoding and re-encoding reproduces the input byte for byte.

use serde::{Deserialize, Serialize};

use super::Tensor;
use crate::error::{Error, Result};
use crate::exact::{format_scalar, parse_scalar, Poly, Ring, Scalar};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CoeffJson {
    Q(String),
    Poly(Vec<String>),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermJson {
    pub idx: Vec<usize>,
    pub coeff: CoeffJson,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TensorJson {
    pub n: usize,
    pub ring: String,
    pub terms: Vec<TermJson>,
}

/// Coefficient rings with a JSON encoding.
pub trait JsonCoeff: Ring {
    fn encode(&self) -> CoeffJson;
    fn decode(c: &CoeffJson) -> Result<Self>;
}

impl JsonCoeff for Scalar {
    fn encode(&self) -> CoeffJson {
        CoeffJson::Q(format_scalar(self))
    }

    fn decode(c: &CoeffJson) -> Result<Self> {
        match c {
            CoeffJson::Q(s) => parse_scalar(s),
            CoeffJson::Poly(_) => Err(Error::Parse("list coefficient in a Q tensor".into())),
        }
    }
}

impl JsonCoeff for Poly {
    fn encode(&self) -> CoeffJson {
        CoeffJson::Poly(self.coeffs().iter().map(format_scalar).collect())
    }

    fn decode(c: &CoeffJson) -> Result<Self> {
        match c {
            CoeffJson::Poly(v) => Ok(Poly::new(v.iter().map(|s| parse_scalar(s)).collect::<Result<_>>()?)),
            CoeffJson::Q(_) => Err(Error::Parse("scalar coefficient in a Q[t] tensor".into())),
        }
    }
}

impl<R: JsonCoeff, const D: usize> Tensor<R, D> {
    pub fn to_json(&self) -> TensorJson {
        TensorJson {
            n: self.n,
            ring: R::NAME.to_string(),
            terms: self.terms().map(|(idx, c)| TermJson { idx: idx.to_vec(), coeff: c.encode() }).collect(),
        }
    }

    pub fn from_json(j: &TensorJson) -> Result<Self> {
        if j.ring != R::NAME {
            return Err(Error::Parse(format!("expected ring {}, found {}", R::NAME, j.ring)));
        }
        let mut out = Self::zero(j.n);
        for term in &j.terms {
            let idx: [usize; D] = term
                .idx
                .as_slice()
                .try_into()
                .map_err(|_| Error::Parse(format!("expected {} indices, found {}", D, term.idx.len())))?;
            if idx.iter().any(|&k| k == 0 || k > j.n) {
                return Err(Error::OutOfRange(format!("index {:?} with n = {}", term.idx, j.n)));
            }
            out.add_term(idx, &R::decode(&term.coeff)?);
        }
        Ok(out)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("serializable")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let j: TensorJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json(&j)
    }
}

/// A decoded tensor of any supported rank and ring.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyTensor {
    Q2(Tensor<Scalar, 4>),
    Q3(Tensor<Scalar, 6>),
    Poly2(Tensor<Poly, 4>),
    Poly3(Tensor<Poly, 6>),
}

impl AnyTensor {
    pub fn from_json_str(s: &str) -> Result<Self> {
        let j: TensorJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let rank = j.terms.first().map_or(4, |t| t.idx.len());
        match (j.ring.as_str(), rank) {
            ("Q", 4) => Ok(AnyTensor::Q2(Tensor::from_json(&j)?)),
            ("Q", 6) => Ok(AnyTensor::Q3(Tensor::from_json(&j)?)),
            ("Q[t]", 4) => Ok(AnyTensor::Poly2(Tensor::from_json(&j)?)),
            ("Q[t]", 6) => Ok(AnyTensor::Poly3(Tensor::from_json(&j)?)),
            (ring, rank) => Err(Error::Parse(format!("unsupported tensor: ring {ring}, {rank} indices"))),
        }
    }

    pub fn to_json_string(&self) -> String {
        match self {
            AnyTensor::Q2(t) => t.to_json_string(),
            AnyTensor::Q3(t) => t.to_json_string(),
            AnyTensor::Poly2(t) => t.to_json_string(),
            AnyTensor::Poly3(t) => t.to_json_string(),
        }
    }

    pub fn n(&self) -> usize {
        match self {
            AnyTensor::Q2(t) => t.n(),
            AnyTensor::Q3(t) => t.n(),
            AnyTensor::Poly2(t) => t.n(),
            AnyTensor::Poly3(t) => t.n(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;
    use crate::tensor::{Tensor2, Tensor3};

    #[test]
    fn round_trip_q() {
        let t = Tensor2::from_terms(3, [([1, 2, 3, 2], q(2, 1)), ([3, 2, 1, 2], q(-2, 1)), ([1, 1, 2, 2], q(1, 3))]);
        let s = t.to_json_string();
        let back = Tensor2::from_json_str(&s).unwrap();
        assert_eq!(back, t);
        assert_eq!(back.to_json_string(), s);
        assert!(s.contains("\"2/1\""));
    }

    #[test]
    fn round_trip_poly() {
        let mut t = Tensor3::<Poly>::zero(2);
        t.add_term([1, 2, 2, 1, 1, 1], &Poly::new(vec![q(0, 1), q(1, 2), q(-3, 4)]));
        let s = t.to_json_string();
        assert_eq!(Tensor3::<Poly>::from_json_str(&s).unwrap().to_json_string(), s);
        assert!(matches!(AnyTensor::from_json_str(&s).unwrap(), AnyTensor::Poly3(_)));
    }

    #[test]
    fn rejects_bad_input() {
        let wrong_ring = r#"{"n":2,"ring":"Q[t]","terms":[{"idx":[1,2,2,1],"coeff":"1/1"}]}"#;
        assert!(Tensor2::<Poly>::from_json_str(wrong_ring).is_err());
        let out_of_range = r#"{"n":2,"ring":"Q","terms":[{"idx":[1,3,2,1],"coeff":"1/1"}]}"#;
        assert!(Tensor2::<Scalar>::from_json_str(out_of_range).is_err());
        let zero_den = r#"{"n":2,"ring":"Q","terms":[{"idx":[1,2,2,1],"coeff":"1/0"}]}"#;
        assert!(Tensor2::<Scalar>::from_json_str(zero_den).is_err());
    }
}
