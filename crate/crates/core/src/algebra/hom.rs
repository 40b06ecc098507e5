use super::element::HElem;
use super::hyperfield::Hyperfield;
use crate::error::{Error, Result};
use crate::form::AffineForm;

/// Built-in hyperfield homomorphisms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Homomorphism {
    /// Ordered instance onto `S`. On `Q` this is the quotient by positive
    /// rationals.
    Sgn,
    /// Any instance onto `K`, sending every nonzero element to one.
    Collapse,
}

impl Homomorphism {
    pub fn target(&self) -> Hyperfield {
        match self {
            Homomorphism::Sgn => Hyperfield::Sign,
            Homomorphism::Collapse => Hyperfield::Krasner,
        }
    }

    pub fn apply(&self, hf: &Hyperfield, a: &HElem) -> Result<HElem> {
        match self {
            Homomorphism::Sgn => hf.sgn_hom(a),
            Homomorphism::Collapse => {
                hf.validate(a)?;
                Ok(if hf.is_zero(a) { HElem::Zero } else { HElem::One })
            }
        }
    }

    pub fn apply_point(&self, hf: &Hyperfield, p: &[HElem]) -> Result<Vec<HElem>> {
        p.iter().map(|a| self.apply(hf, a)).collect()
    }

    /// Coefficientwise image of a form.
    pub fn push_forward(&self, hf: &Hyperfield, phi: &AffineForm) -> Result<AffineForm> {
        if matches!(self, Homomorphism::Sgn) && !hf.is_ordered() {
            return Err(Error::Unsupported(format!("sgn is not defined on {hf}")));
        }
        Ok(AffineForm { constant: self.apply(hf, &phi.constant)?, coeffs: self.apply_point(hf, &phi.coeffs)? })
    }
}
