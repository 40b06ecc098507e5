//! Affine forms `c₀ ⊞ c₁⊙X₁ ⊞ … ⊞ c_d⊙X_d` and the halfspaces they cut out.

use serde::Serialize;

use crate::algebra::{HElem, HSet, Hyperfield};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct AffineForm {
    pub constant: HElem,
    pub coeffs: Vec<HElem>,
}

impl AffineForm {
    pub fn new(constant: HElem, coeffs: Vec<HElem>) -> Self {
        AffineForm { constant, coeffs }
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_constant(&self, hf: &Hyperfield) -> bool {
        self.coeffs.iter().all(|c| hf.is_zero(c))
    }

    /// `φ(p)`.
    pub fn eval(&self, hf: &Hyperfield, p: &[HElem]) -> Result<HSet> {
        if p.len() != self.dim() {
            return Err(Error::Dimension { expected: self.dim(), got: p.len() });
        }
        let mut terms = Vec::with_capacity(p.len() + 1);
        terms.push(self.constant.clone());
        for (c, x) in self.coeffs.iter().zip(p) {
            hf.validate(x)?;
            terms.push(hf.mul(c, x));
        }
        hf.sum_many(&terms)
    }

    /// `0 ∈ φ(p)`.
    pub fn in_variety(&self, hf: &Hyperfield, p: &[HElem]) -> Result<bool> {
        if !hf.is_ordered() {
            return Err(Error::NoOrdering(hf.to_string()));
        }
        Ok(hf.set_contains_zero(&self.eval(hf, p)?))
    }

    /// `φ(p) ⊆ H⁺`.
    pub fn in_open_hs(&self, hf: &Hyperfield, p: &[HElem]) -> Result<bool> {
        hf.set_subset_positive(&self.eval(hf, p)?)
    }

    /// `φ(p) ∩ (H⁺ ∪ {0}) ≠ ∅`.
    pub fn in_closed_hs(&self, hf: &Hyperfield, p: &[HElem]) -> Result<bool> {
        hf.set_meets_nonnegative(&self.eval(hf, p)?)
    }

    pub fn scale(&self, hf: &Hyperfield, c: &HElem) -> AffineForm {
        AffineForm { constant: hf.mul(c, &self.constant), coeffs: self.coeffs.iter().map(|x| hf.mul(c, x)).collect() }
    }

    pub fn negate(&self, hf: &Hyperfield) -> AffineForm {
        AffineForm { constant: hf.neg(&self.constant), coeffs: self.coeffs.iter().map(|x| hf.neg(x)).collect() }
    }

    /// Representative of the ray `{ a⊙φ : a ∈ H⁺ }`. Over infinite
    /// instances the first nonzero variable coefficient (else the constant)
    /// is scaled to `±1`; over finite ones the least form of the orbit is
    /// chosen.
    pub fn canonical(&self, hf: &Hyperfield) -> Result<AffineForm> {
        if let Some(els) = hf.elements() {
            let mut best = self.clone();
            for a in els {
                if hf.is_positive(&a)? {
                    let f = self.scale(hf, &a);
                    if f < best {
                        best = f;
                    }
                }
            }
            return Ok(best);
        }
        let lead = self.coeffs.iter().chain(std::iter::once(&self.constant)).find(|c| !hf.is_zero(c));
        let Some(lead) = lead else { return Ok(self.clone()) };
        let abs = if hf.is_positive(lead)? { lead.clone() } else { hf.neg(lead) };
        Ok(self.scale(hf, &hf.inv(&abs)?))
    }

    /// Literal syntax, e.g. `1@X2 + 1`.
    pub fn display(&self, hf: &Hyperfield) -> String {
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if !hf.is_zero(c) {
                parts.push(format!("{}@X{}", hf.fmt_elem(c), i + 1));
            }
        }
        if !hf.is_zero(&self.constant) || parts.is_empty() {
            parts.push(hf.fmt_elem(&self.constant));
        }
        parts.join(" + ")
    }
}

/// Every form over a finite instance in dimension `d`.
pub fn all_forms(hf: &Hyperfield, d: usize) -> Result<Vec<AffineForm>> {
    let els = hf.elements().ok_or_else(|| Error::Unsupported(format!("{hf} is infinite")))?;
    let mut out = Vec::new();
    for v in crate::util::tuples(&els, d + 1) {
        let (constant, coeffs) = v.split_first().expect("d+1 > 0");
        out.push(AffineForm::new(constant.clone(), coeffs.to_vec()));
    }
    Ok(out)
}
