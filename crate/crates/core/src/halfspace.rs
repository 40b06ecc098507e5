//! Halfspaces of affine forms over finite instances.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::algebra::{HElem, Hyperfield};
use crate::convex::{FiniteSpace, HPoint, Mask, Mode};
use crate::error::{Error, Result};
use crate::form::{all_forms, AffineForm};

/// Which of the three point sets of a form is queried.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Region {
    Open,
    Closed,
    Variety,
}

impl Region {
    pub fn contains(self, hf: &Hyperfield, phi: &AffineForm, p: &[HElem]) -> Result<bool> {
        match self {
            Region::Open => phi.in_open_hs(hf, p),
            Region::Closed => phi.in_closed_hs(hf, p),
            Region::Variety => phi.in_variety(hf, p),
        }
    }
}

/// Mask of the points of `space` in the given region of `phi`.
pub fn region_mask(space: &FiniteSpace, phi: &AffineForm, region: Region) -> Result<Mask> {
    let mut m = 0;
    for (i, p) in space.points().iter().enumerate() {
        if region.contains(space.hyperfield(), phi, p)? {
            m |= 1 << i;
        }
    }
    Ok(m)
}

/// Non-constant forms in dimension `d`, one per positive-scaling class.
pub fn canonical_forms(hf: &Hyperfield, d: usize) -> Result<Vec<AffineForm>> {
    let mut seen = BTreeSet::new();
    for f in all_forms(hf, d)? {
        if !f.is_constant(hf) {
            seen.insert(f.canonical(hf)?);
        }
    }
    Ok(seen.into_iter().collect())
}

/// Every non-constant form (up to positive scaling) whose open halfspace
/// contains all of `points`.
pub fn enumerate_open_hs_containing(hf: &Hyperfield, points: &[HPoint], d: usize) -> Result<Vec<AffineForm>> {
    if !hf.is_ordered() {
        return Err(Error::NoOrdering(hf.to_string()));
    }
    let mut out = Vec::new();
    'forms: for f in canonical_forms(hf, d)? {
        for p in points {
            if !f.in_open_hs(hf, p)? {
                continue 'forms;
            }
        }
        out.push(f);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub holds: bool,
    pub checked: usize,
    /// First point where `cHS = HS ⊔ V` fails.
    pub witness: Option<HPoint>,
}

/// Checks `cHS(φ) = HS(φ) ⊔ V(φ)` on the given points.
pub fn stringent_decomposition_on(hf: &Hyperfield, phi: &AffineForm, points: &[HPoint]) -> Result<Decomposition> {
    for (k, p) in points.iter().enumerate() {
        let open = phi.in_open_hs(hf, p)?;
        let var = phi.in_variety(hf, p)?;
        let closed = phi.in_closed_hs(hf, p)?;
        if closed != (open || var) || (open && var) {
            return Ok(Decomposition { holds: false, checked: k + 1, witness: Some(p.clone()) });
        }
    }
    Ok(Decomposition { holds: true, checked: points.len(), witness: None })
}

/// As [`stringent_decomposition_on`], over every point of a finite instance.
pub fn stringent_decomposition_check(hf: &Hyperfield, phi: &AffineForm) -> Result<Decomposition> {
    let space = FiniteSpace::new(hf, phi.dim())?;
    stringent_decomposition_on(hf, phi, space.points())
}

/// A form whose closed halfspace contains `hull(points)` but not `p`, or
/// `None` when no such form exists.
pub fn closed_hs_separate_sign(hf: &Hyperfield, points: &[HPoint], p: &[HElem]) -> Result<Option<AffineForm>> {
    let space = FiniteSpace::new(hf, p.len())?;
    let hull = space.hull(space.mask_of(points)?, Mode::Convex);
    let pi = space.index(p).ok_or_else(|| Error::Precondition("point is not in the space".into()))?;
    if hull >> pi & 1 == 1 {
        return Err(Error::Precondition(format!("{p:?} lies in the hull")));
    }
    separate_mask_closed(&space, hull, pi)
}

/// Mask form of [`closed_hs_separate_sign`].
pub fn separate_mask_closed(space: &FiniteSpace, set: Mask, pi: usize) -> Result<Option<AffineForm>> {
    let hf = space.hyperfield();
    for f in all_forms(hf, space.dim())? {
        if f.in_closed_hs(hf, space.point(pi))? {
            continue;
        }
        if set & !region_mask(space, &f, Region::Closed)? == 0 {
            return Ok(Some(f));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_form, parse_point, parse_points};

    #[test]
    fn open_separation_fails_over_sign() {
        let s = Hyperfield::Sign;
        let t = parse_points(&s, "(-,+);(0,0);(0,+);(+,0);(+,+)").unwrap();
        let forms = enumerate_open_hs_containing(&s, &t, 2).unwrap();
        assert_eq!(forms.len(), 1, "{forms:?}");
        let x2_plus_one = parse_form(&s, "1@X2 + 1", Some(2)).unwrap();
        assert_eq!(forms[0], x2_plus_one.canonical(&s).unwrap());
        assert!(x2_plus_one.in_open_hs(&s, &parse_point(&s, "(-,0)").unwrap()).unwrap());
    }

    #[test]
    fn closed_halfspace_can_separate() {
        let s = Hyperfield::Sign;
        let t = parse_points(&s, "(-,+);(0,0);(0,+);(+,0);(+,+)").unwrap();
        let p = parse_point(&s, "(-,0)").unwrap();
        let f = closed_hs_separate_sign(&s, &t, &p).unwrap().expect("closed separator");
        assert!(!f.in_closed_hs(&s, &p).unwrap());
    }
}
