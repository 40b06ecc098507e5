//! Hull membership over infinite stringent instances, decided through the
//! Farkas dichotomy on the homogenized system.

use serde::Serialize;

use crate::algebra::{HElem, Hyperfield};
use crate::error::{Error, Result};
use crate::fm::{farkas_with, FarkasCertificate, RealisableMatrix};
use crate::form::AffineForm;

use super::point::HPoint;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum MembershipResult {
    /// `lambda` has one entry per point of `T` followed by the multiplier
    /// of `-q`.
    Member {
        lambda: Vec<HElem>,
    },
    /// `T ⊆ HS(form)` and `q ∉ HS(form)`.
    Separated {
        form: AffineForm,
    },
    Undecided,
}

/// Columns `(p, 1)` for each `p ∈ T` and `-(q, 1)`.
pub fn membership_matrix(hf: &Hyperfield, points: &[HPoint], q: &[HElem]) -> Result<RealisableMatrix> {
    let d = q.len();
    let mut rows: Vec<Vec<HElem>> = vec![Vec::with_capacity(points.len() + 1); d + 1];
    for p in points {
        if p.len() != d {
            return Err(Error::Dimension { expected: d, got: p.len() });
        }
        for (i, x) in p.iter().enumerate() {
            rows[i].push(x.clone());
        }
        rows[d].push(hf.one());
    }
    for (i, x) in q.iter().enumerate() {
        rows[i].push(hf.neg(x));
    }
    rows[d].push(hf.neg(&hf.one()));
    RealisableMatrix::from_rows(hf, &rows)
}

/// Checks `1 ∈ ⊞ μⱼ` and `qᵢ ∈ ⊞ⱼ μⱼ⊙p_ij` for `μⱼ = λⱼ / λ_{n+1}`.
pub fn verify_member(hf: &Hyperfield, points: &[HPoint], q: &[HElem], lambda: &[HElem]) -> Result<bool> {
    let Some((last, head)) = lambda.split_last() else { return Ok(false) };
    if head.len() != points.len() || hf.is_zero(last) {
        return Ok(false);
    }
    let inv = hf.inv(last)?;
    let mu: Vec<HElem> = head.iter().map(|l| hf.mul(l, &inv)).collect();
    if !hf.contains(&hf.sum_many(&mu)?, &hf.one()) {
        return Ok(false);
    }
    for (i, qi) in q.iter().enumerate() {
        let terms: Vec<HElem> = mu.iter().zip(points).map(|(m, p)| hf.mul(m, &p[i])).collect();
        if !hf.contains(&hf.sum_many(&terms)?, qi) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `q ∈ conv(T)`, with a kernel witness or a separating form.
pub fn member_conv_stringent(hf: &Hyperfield, points: &[HPoint], q: &[HElem]) -> Result<MembershipResult> {
    member_conv_stringent_with(hf, points, q, false)
}

pub fn member_conv_stringent_with(hf: &Hyperfield, points: &[HPoint], q: &[HElem], try_row_orders: bool) -> Result<MembershipResult> {
    hf.require_dense()?;
    for x in q {
        hf.validate(x)?;
    }
    let m = membership_matrix(hf, points, q)?;
    if let Some(j) = points.iter().position(|p| p.as_slice() == q) {
        let mut lambda = vec![hf.zero(); points.len() + 1];
        lambda[j] = hf.one();
        lambda[points.len()] = hf.one();
        debug_assert!(m.is_kernel(&lambda)?);
        return Ok(MembershipResult::Member { lambda });
    }
    match farkas_with(&m, try_row_orders)? {
        FarkasCertificate::Kernel(lambda) => {
            if !verify_member(hf, points, q, &lambda)? {
                return Err(Error::Internal("kernel vector does not express q".into()));
            }
            Ok(MembershipResult::Member { lambda })
        }
        FarkasCertificate::Separator(alpha) => {
            let (constant, coeffs) = alpha.split_last().expect("homogenized system has a row");
            let form = AffineForm::new(constant.clone(), coeffs.to_vec());
            for p in points {
                if !form.in_open_hs(hf, p)? {
                    return Err(Error::Internal("separator misses a point of T".into()));
                }
            }
            if form.in_open_hs(hf, q)? {
                return Err(Error::Internal("separator contains q".into()));
            }
            Ok(MembershipResult::Separated { form })
        }
        FarkasCertificate::UndecidedNonGeneric => Ok(MembershipResult::Undecided),
    }
}
