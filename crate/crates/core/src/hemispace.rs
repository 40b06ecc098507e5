//! Hemispaces (convex sets with convex complement), Kakutani separation and
//! the Pasch property over finite instances.

use std::collections::BTreeSet;

use crate::algebra::{HElem, Hyperfield};
use crate::convex::{FiniteSpace, HPoint, Mask, Mode};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hemispace {
    pub hyperfield: Hyperfield,
    pub points: BTreeSet<HPoint>,
}

pub fn is_hemispace_mask(space: &FiniteSpace, x: Mask) -> bool {
    space.is_convex(x, Mode::Convex) && space.is_convex(space.full() & !x, Mode::Convex)
}

pub fn is_hemispace(hf: &Hyperfield, dim: usize, points: &[HPoint]) -> Result<bool> {
    let space = FiniteSpace::new(hf, dim)?;
    Ok(is_hemispace_mask(&space, space.mask_of(points)?))
}

/// Grows `x ⊇ a` and `y ⊇ b`, both kept convex and disjoint, until they
/// partition the space. Free points go to `y` first, so the returned side is
/// as small as the search allows.
fn grow(space: &FiniteSpace, x: Mask, y: Mask) -> Option<Mask> {
    if x & y != 0 {
        return None;
    }
    let free = space.full() & !(x | y);
    if free == 0 {
        return Some(x);
    }
    let z: Mask = 1 << free.trailing_zeros();
    let y2 = space.hull(y | z, Mode::Convex);
    if y2 & x == 0 {
        if let Some(r) = grow(space, x, y2) {
            return Some(r);
        }
    }
    let x2 = space.hull(x | z, Mode::Convex);
    if x2 & y == 0 {
        return grow(space, x2, y);
    }
    None
}

/// A hemispace containing `a` and missing `b`.
pub fn kakutani_mask(space: &FiniteSpace, a: Mask, b: Mask) -> Result<Mask> {
    if a & b != 0 {
        return Err(Error::Precondition("the sets intersect".into()));
    }
    let (x, y) = (space.hull(a, Mode::Convex), space.hull(b, Mode::Convex));
    if x & y != 0 {
        return Err(Error::Precondition("the hulls of the sets intersect".into()));
    }
    grow(space, x, y).ok_or_else(|| Error::KakutaniCounterexample(format!("{:?} vs {:?}", space.points_of(a), space.points_of(b))))
}

pub fn kakutani_separate(hf: &Hyperfield, dim: usize, a: &[HPoint], b: &[HPoint]) -> Result<Hemispace> {
    let space = FiniteSpace::new(hf, dim)?;
    let x = kakutani_mask(&space, space.mask_of(a)?, space.mask_of(b)?)?;
    Ok(Hemispace { hyperfield: hf.clone(), points: space.points_of(x).into_iter().collect() })
}

/// Pasch on point indices: with `p1 ∈ conv(r, q1)` and `p2 ∈ conv(r, q2)`,
/// whether `conv(q1, p2)` meets `conv(q2, p1)`.
pub fn pasch_mask(space: &FiniteSpace, r: usize, q1: usize, q2: usize, p1: usize, p2: usize) -> Result<bool> {
    let seg = |i: usize, j: usize| space.hull(1 << i | 1 << j, Mode::Convex);
    if seg(r, q1) >> p1 & 1 == 0 || seg(r, q2) >> p2 & 1 == 0 {
        return Err(Error::Precondition("p1 or p2 is off its segment".into()));
    }
    Ok(seg(q1, p2) & seg(q2, p1) != 0)
}

pub fn pasch_check(hf: &Hyperfield, r: &[HElem], q1: &[HElem], q2: &[HElem], p1: &[HElem], p2: &[HElem]) -> Result<bool> {
    let space = FiniteSpace::new(hf, r.len())?;
    let idx = |p: &[HElem]| space.index(p).ok_or_else(|| Error::Precondition(format!("{p:?} is not in the space")));
    pasch_mask(&space, idx(r)?, idx(q1)?, idx(q2)?, idx(p1)?, idx(p2)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_point, parse_points};

    #[test]
    fn separates_opposite_corners() {
        let s = Hyperfield::Sign;
        let a = parse_points(&s, "(+,+)").unwrap();
        let b = parse_points(&s, "(-,-)").unwrap();
        let h = kakutani_separate(&s, 2, &a, &b).unwrap();
        assert!(h.points.contains(&a[0]) && !h.points.contains(&b[0]));
        let pts: Vec<HPoint> = h.points.into_iter().collect();
        assert!(is_hemispace(&s, 2, &pts).unwrap());
    }

    #[test]
    fn empty_side_is_empty_hemispace() {
        let s = Hyperfield::Sign;
        let h = kakutani_separate(&s, 2, &[], &parse_points(&s, "(+,+)").unwrap()).unwrap();
        assert!(h.points.is_empty());
    }

    #[test]
    fn pasch_figure() {
        let s = Hyperfield::Sign;
        let p = |x: &str| parse_point(&s, x).unwrap();
        assert!(pasch_check(&s, &p("(0,0)"), &p("(+,-)"), &p("(-,+)"), &p("(+,-)"), &p("(-,+)")).unwrap());
    }
}
