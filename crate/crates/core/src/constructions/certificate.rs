use serde::Serialize;

use crate::error::Result;
use crate::exact::{decompose_sigma2, ExactScalar, TensorOperator};

/// `G = a·Id + b·(1,2)` at one point, with the invariant normalization.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct PointSample {
    /// `𝒯_d(X)𝒯_d(Y)`, or whatever normalizer the construction uses.
    pub norm: ExactScalar,
    pub a: ExactScalar,
    pub b: ExactScalar,
    pub residual_zero: bool,
}

impl PointSample {
    pub fn measure(g: &TensorOperator, norm: ExactScalar) -> Result<Self> {
        let dec = decompose_sigma2(g)?;
        Ok(PointSample {
            norm,
            a: dec.a,
            b: dec.b,
            residual_zero: dec.residual_zero,
        })
    }

    /// `(a, b) / norm`, when the normalizer is nonzero.
    pub fn normalized(&self) -> Option<(ExactScalar, ExactScalar)> {
        let r = self.norm.recip().ok()?;
        Some((&self.a * &r, &self.b * &r))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SwapCertificate {
    pub construction: String,
    pub coefficients: Vec<(String, ExactScalar)>,
    pub samples: Vec<PointSample>,
    /// Common value of `b / norm` when it is constant across points.
    pub multiplier: Option<ExactScalar>,
    pub valid: bool,
}

impl SwapCertificate {
    pub fn assemble(
        construction: impl Into<String>,
        coefficients: Vec<(String, ExactScalar)>,
        samples: Vec<PointSample>,
    ) -> Self {
        let ratios: Vec<Option<(ExactScalar, ExactScalar)>> =
            samples.iter().map(PointSample::normalized).collect();
        let multiplier = match ratios.first() {
            Some(Some((_, b0))) if ratios.iter().all(|r| matches!(r, Some((_, b)) if b == b0)) => {
                Some(b0.clone())
            }
            _ => None,
        };
        let valid = !samples.is_empty()
            && samples.iter().all(|s| s.residual_zero && s.a.is_zero())
            && samples.iter().any(|s| !s.b.is_zero())
            && multiplier.is_some();
        SwapCertificate {
            construction: construction.into(),
            coefficients,
            samples,
            multiplier,
            valid,
        }
    }
}

/// `(a, b)/norm` when it is the same at every sample and residuals vanish.
pub fn constant_normalized(samples: &[PointSample]) -> Option<(ExactScalar, ExactScalar)> {
    let first = samples.first()?.normalized()?;
    samples
        .iter()
        .all(|s| s.residual_zero && s.normalized().as_ref() == Some(&first))
        .then_some(first)
}
