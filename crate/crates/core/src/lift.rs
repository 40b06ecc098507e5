//! Lifting sign configurations to the rationals, reading the sign
//! hyperfield as `Q / Q_{>0}` with quotient map `sgn`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::algebra::{HElem, Homomorphism, Hyperfield, Sgn};
use crate::convex::{member_conv_stringent, HPoint, MembershipResult};
use crate::error::{Error, Result};
use crate::form::AffineForm;

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn sign_of(x: &HElem) -> Result<i8> {
    match x {
        HElem::Zero => Ok(0),
        HElem::Sign(Sgn::Pos) => Ok(1),
        HElem::Sign(Sgn::Neg) => Ok(-1),
        _ => Err(Error::InstanceMismatch { instance: "S".into(), elem: x.to_string() }),
    }
}

fn require_sign(p: &[HElem]) -> Result<Vec<i8>> {
    p.iter().map(sign_of).collect()
}

/// Positive magnitudes for terms of the given signs so that their sum has
/// sign `target`. The target must lie in the sign-sum of the terms.
fn magnitudes(signs: &[i8], target: i8) -> Option<Vec<BigRational>> {
    let pos = signs.iter().filter(|&&s| s > 0).count() as i64;
    let neg = signs.iter().filter(|&&s| s < 0).count() as i64;
    let (wp, wn) = match (target, pos > 0, neg > 0) {
        (0, false, false) => (q(0), q(0)),
        (0, true, true) => (BigRational::new(1.into(), pos.into()), BigRational::new(1.into(), neg.into())),
        (1, true, _) => (BigRational::new(2.into(), pos.into()), if neg > 0 { BigRational::new(1.into(), neg.into()) } else { q(0) }),
        (-1, _, true) => (if pos > 0 { BigRational::new(1.into(), pos.into()) } else { q(0) }, BigRational::new(2.into(), neg.into())),
        _ => return None,
    };
    Some(
        signs
            .iter()
            .map(|&s| match s {
                1 => wp.clone(),
                -1 => wn.clone(),
                _ => BigRational::one(),
            })
            .collect(),
    )
}

fn rat(x: BigRational) -> HElem {
    HElem::from_rational(x)
}

fn signed(s: i8, m: &BigRational) -> BigRational {
    match s {
        1 => m.clone(),
        -1 => -m.clone(),
        _ => BigRational::zero(),
    }
}

/// Rational points and a rational target obtained from a sign hull witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FieldLift {
    pub points: Vec<HPoint>,
    pub target: HPoint,
    /// Kernel vector certifying `target ∈ conv(points)` over `Q`.
    pub lambda: Vec<HElem>,
}

/// Lifts `q̄ ∈ conv(T)` over `S` to rational data. `witness` lists indices
/// into `t` (repetitions allowed) with `q̄ ∈ ⊞ⱼ t[witness[j]]`; each use gets
/// its own lift, and the target is their average.
pub fn construct_field_lift(t: &[HPoint], qbar: &[HElem], witness: &[usize]) -> Result<FieldLift> {
    let d = qbar.len();
    let qs = require_sign(qbar)?;
    let ts: Vec<Vec<i8>> = t.iter().map(|p| require_sign(p)).collect::<Result<_>>()?;
    if ts.iter().any(|p| p.len() != d) {
        return Err(Error::Dimension { expected: d, got: ts.iter().map(Vec::len).find(|&l| l != d).unwrap_or(d) });
    }
    if witness.is_empty() || witness.iter().any(|&j| j >= t.len()) {
        return Err(Error::InvalidWitness("witness must be a nonempty list of point indices".into()));
    }
    let m = witness.len();
    let mut lifts: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); d]; m];
    for i in 0..d {
        let signs: Vec<i8> = witness.iter().map(|&j| ts[j][i]).collect();
        let mags =
            magnitudes(&signs, qs[i]).ok_or_else(|| Error::InvalidWitness(format!("coordinate {} cannot sum to {}", i + 1, qbar[i])))?;
        for (k, (&s, w)) in signs.iter().zip(&mags).enumerate() {
            lifts[k][i] = signed(s, w);
        }
    }
    let inv_m = BigRational::new(1.into(), (m as i64).into());
    let target: HPoint = (0..d).map(|i| rat(lifts.iter().map(|l| l[i].clone()).sum::<BigRational>() * &inv_m)).collect();
    let mut points: Vec<HPoint> = lifts.into_iter().map(|l| l.into_iter().map(rat).collect()).collect();
    for (j, p) in ts.iter().enumerate() {
        if !witness.contains(&j) {
            points.push(p.iter().map(|&s| rat(q(s as i64))).collect());
        }
    }
    points.dedup();
    let hq = Hyperfield::Rational;
    let lambda = match member_conv_stringent(&hq, &points, &target)? {
        MembershipResult::Member { lambda } => lambda,
        other => return Err(Error::Internal(format!("lifted target is not in the rational hull: {other:?}"))),
    };
    let sgn = Homomorphism::Sgn;
    if sgn.apply_point(&hq, &target)? != qbar {
        return Err(Error::Internal("lifted target has the wrong signs".into()));
    }
    for p in &points {
        if !t.contains(&sgn.apply_point(&hq, p)?) {
            return Err(Error::Internal("lifted point leaves T".into()));
        }
    }
    Ok(FieldLift { points, target, lambda })
}

/// A rational form and point over a sign form and point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LiftWitness {
    pub form: AffineForm,
    pub point: HPoint,
}

fn term_signs(phi: &AffineForm, p: &[i8]) -> Result<Vec<i8>> {
    let mut out = vec![sign_of(&phi.constant)?];
    for (c, &x) in phi.coeffs.iter().zip(p) {
        out.push(sign_of(c)? * x);
    }
    Ok(out)
}

fn check_witness(phibar: &AffineForm, pbar: &[HElem], w: &LiftWitness) -> Result<()> {
    let hq = Hyperfield::Rational;
    let sgn = Homomorphism::Sgn;
    if sgn.push_forward(&hq, &w.form)? != *phibar || sgn.apply_point(&hq, &w.point)? != pbar {
        return Err(Error::Internal("lift does not map onto the given data".into()));
    }
    Ok(())
}

/// For `p̄ ∉ HS(φ̄)`: a rational `ψ` with `sgn_*(ψ) = φ̄` and a lift `p` of
/// `p̄` outside `HS(ψ)`. A given lift is kept and only the coefficients are
/// rescaled.
pub fn open_hs_lift_witness(phibar: &AffineForm, pbar: &[HElem], lift: Option<&[HElem]>) -> Result<LiftWitness> {
    let s = Hyperfield::Sign;
    if phibar.dim() != pbar.len() {
        return Err(Error::Dimension { expected: phibar.dim(), got: pbar.len() });
    }
    if phibar.in_open_hs(&s, pbar)? {
        return Err(Error::Precondition("the point lies in the open halfspace".into()));
    }
    let ps = require_sign(pbar)?;
    let point: HPoint = match lift {
        Some(l) => l.to_vec(),
        None => ps.iter().map(|&x| rat(q(x as i64))).collect(),
    };
    let abs: Vec<BigRational> = point.iter().map(|x| x.as_rational().map(|r| r.abs()).unwrap_or_default()).collect();
    let signs = term_signs(phibar, &ps)?;
    // Terms of both signs cancel exactly; only negative terms stay negative.
    let target = if signs.contains(&-1) && !signs.contains(&1) { -1 } else { 0 };
    let mags = magnitudes(&signs, target).ok_or_else(|| Error::Internal("no magnitudes".into()))?;
    let coeff = |c: &HElem, m: &BigRational, a: Option<&BigRational>| -> Result<HElem> {
        let m = match a {
            Some(a) if !a.is_zero() => m / a,
            _ => BigRational::one(),
        };
        Ok(rat(signed(sign_of(c)?, &m)))
    };
    let form = AffineForm::new(
        coeff(&phibar.constant, &mags[0], Some(&BigRational::one()))?,
        phibar.coeffs.iter().enumerate().map(|(i, c)| coeff(c, &mags[i + 1], Some(&abs[i]))).collect::<Result<_>>()?,
    );
    let w = LiftWitness { form, point };
    check_witness(phibar, pbar, &w)?;
    if w.form.in_open_hs(&Hyperfield::Rational, &w.point)? {
        return Err(Error::Internal("lifted point is inside the lifted halfspace".into()));
    }
    Ok(w)
}

/// Which side a closed-halfspace lift should land on when both are possible.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClosedTarget {
    #[default]
    Positive,
    Zero,
}

/// For `p̄ ∈ cHS(φ̄)`: the sign pullback `ψ` of `φ̄` (unit coefficients,
/// rescaled constant) and a lift `q` of `p̄` with `ψ(q) ≥ 0`.
pub fn closed_hs_lift_witness(phibar: &AffineForm, pbar: &[HElem], prefer: ClosedTarget) -> Result<LiftWitness> {
    let s = Hyperfield::Sign;
    if phibar.dim() != pbar.len() {
        return Err(Error::Dimension { expected: phibar.dim(), got: pbar.len() });
    }
    if !phibar.in_closed_hs(&s, pbar)? {
        return Err(Error::Precondition("the point is outside the closed halfspace".into()));
    }
    let ps = require_sign(pbar)?;
    let signs = term_signs(phibar, &ps)?;
    let target = match prefer {
        ClosedTarget::Zero if magnitudes(&signs, 0).is_some() => 0,
        _ if signs.contains(&1) => 1,
        _ => 0,
    };
    let mags = magnitudes(&signs, target).ok_or_else(|| Error::Internal("no magnitudes".into()))?;
    let form = AffineForm::new(
        rat(signed(sign_of(&phibar.constant)?, &mags[0])),
        phibar.coeffs.iter().map(|c| Ok(rat(q(sign_of(c)? as i64)))).collect::<Result<_>>()?,
    );
    // A zero coefficient leaves the coordinate free; keep it at magnitude one.
    let point: HPoint = ps
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            let m = if signs[i + 1] == 0 { BigRational::one() } else { mags[i + 1].clone() };
            rat(signed(x, &m))
        })
        .collect();
    let w = LiftWitness { form, point };
    check_witness(phibar, pbar, &w)?;
    if !w.form.in_closed_hs(&Hyperfield::Rational, &w.point)? {
        return Err(Error::Internal("lifted point is outside the lifted closed halfspace".into()));
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_form, parse_point, parse_points};

    #[test]
    fn closed_lift_of_mixed_point() {
        let s = Hyperfield::Sign;
        let phi = parse_form(&s, "1@X1 + 1@X2", None).unwrap();
        let w = closed_hs_lift_witness(&phi, &parse_point(&s, "(+,-)").unwrap(), ClosedTarget::Positive).unwrap();
        assert_eq!(w.point, vec![HElem::rat(2, 1), HElem::rat(-1, 1)]);
        let z = closed_hs_lift_witness(&phi, &parse_point(&s, "(+,-)").unwrap(), ClosedTarget::Zero).unwrap();
        assert_eq!(z.point, vec![HElem::rat(1, 1), HElem::rat(-1, 1)]);
    }

    #[test]
    fn open_lift_keeps_given_point() {
        let s = Hyperfield::Sign;
        let phi = parse_form(&s, "1@X1 + 1@X2", None).unwrap();
        let lift = [HElem::rat(-3, 1), HElem::rat(5, 1)];
        let w = open_hs_lift_witness(&phi, &parse_point(&s, "(-,+)").unwrap(), Some(&lift)).unwrap();
        assert_eq!(w.point, lift.to_vec());
    }

    #[test]
    fn antipodal_lift() {
        let s = Hyperfield::Sign;
        let t = parse_points(&s, "(+,-);(-,+)").unwrap();
        for q in crate::util::tuples(&s.elements().unwrap(), 2) {
            let l = construct_field_lift(&t, &q, &[0, 1]).unwrap();
            assert_eq!(Homomorphism::Sgn.apply_point(&Hyperfield::Rational, &l.target).unwrap(), q);
        }
    }
}
