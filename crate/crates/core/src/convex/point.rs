use serde::Serialize;

use crate::algebra::{HElem, HSet, Hyperfield};
use crate::error::{Error, Result};

/// A point of `H^d`.
pub type HPoint = Vec<HElem>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Conic,
    Convex,
}

/// A set of points given coordinatewise: a vector belongs to it iff each
/// coordinate lies in the corresponding set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSetResult {
    pub coords: Vec<HSet>,
}

impl PointSetResult {
    pub fn contains(&self, hf: &Hyperfield, p: &[HElem]) -> bool {
        p.len() == self.coords.len() && self.coords.iter().zip(p).all(|(s, x)| hf.contains(s, x))
    }

    /// Explicit list of points, when every coordinate set is finite.
    pub fn enumerate(&self) -> Option<Vec<HPoint>> {
        let mut out: Vec<HPoint> = vec![Vec::new()];
        for s in &self.coords {
            let els = s.elements()?;
            out = out
                .iter()
                .flat_map(|prefix| {
                    els.iter().map(move |x| {
                        let mut v = prefix.clone();
                        v.push(x.clone());
                        v
                    })
                })
                .collect();
        }
        Some(out)
    }
}

fn dim_of(points: &[HPoint]) -> Result<usize> {
    let d = points.first().map_or(0, Vec::len);
    for p in points {
        if p.len() != d {
            return Err(Error::Dimension { expected: d, got: p.len() });
        }
    }
    Ok(d)
}

/// `⊞ᵢ aᵢ⊙pᵢ`. In convex mode the coefficients must satisfy `1 ∈ ⊞ᵢ aᵢ`.
pub fn combine(hf: &Hyperfield, points: &[HPoint], coeffs: &[HElem], mode: Mode) -> Result<PointSetResult> {
    if points.is_empty() {
        return Err(Error::Arity);
    }
    if points.len() != coeffs.len() {
        return Err(Error::Dimension { expected: points.len(), got: coeffs.len() });
    }
    for a in coeffs {
        if !hf.is_positive(a)? {
            return Err(Error::NonPositiveCoefficient(hf.fmt_elem(a)));
        }
    }
    if mode == Mode::Convex && !hf.contains(&hf.sum_many(coeffs)?, &hf.one()) {
        return Err(Error::NotConvex);
    }
    let d = dim_of(points)?;
    let mut coords = Vec::with_capacity(d);
    for i in 0..d {
        let terms: Vec<HElem> = points.iter().zip(coeffs).map(|(p, a)| hf.mul(a, &p[i])).collect();
        for p in points {
            hf.validate(&p[i])?;
        }
        coords.push(hf.sum_many(&terms)?);
    }
    Ok(PointSetResult { coords })
}

/// Appends a coordinate equal to one.
pub fn homogenize(hf: &Hyperfield, points: &[HPoint]) -> Vec<HPoint> {
    points
        .iter()
        .map(|p| {
            let mut v = p.clone();
            v.push(hf.one());
            v
        })
        .collect()
}

/// Drops coordinate `i` from every point.
pub fn project(points: &[HPoint], i: usize) -> Vec<HPoint> {
    let mut out: Vec<HPoint> =
        points.iter().map(|p| p.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, x)| x.clone()).collect()).collect();
    out.sort();
    out.dedup();
    out
}

/// `S × T`.
pub fn cartesian(s: &[HPoint], t: &[HPoint]) -> Vec<HPoint> {
    let mut out = Vec::with_capacity(s.len() * t.len());
    for p in s {
        for q in t {
            let mut v = p.clone();
            v.extend(q.iter().cloned());
            out.push(v);
        }
    }
    out.sort();
    out
}

pub fn intersect(sets: &[Vec<HPoint>]) -> Vec<HPoint> {
    let Some((first, rest)) = sets.split_first() else { return Vec::new() };
    let mut out: Vec<HPoint> = first.iter().filter(|p| rest.iter().all(|s| s.contains(p))).cloned().collect();
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::GroupKind;
    use crate::algebra::GroupVal;
    use num_rational::BigRational;

    fn qp(n: i64, d: i64, g: i64) -> HElem {
        HElem::qpair(BigRational::new(n.into(), d.into()), GroupVal::int(g))
    }

    #[test]
    fn sign_antipodes_fill_plane() {
        let s = Hyperfield::Sign;
        let p = vec![HElem::pos(), HElem::neg_one()];
        let q = vec![HElem::neg_one(), HElem::pos()];
        let r = combine(&s, &[p, q], &[HElem::pos(), HElem::pos()], Mode::Convex).unwrap();
        assert_eq!(r.enumerate().unwrap().len(), 9);
    }

    #[test]
    fn semidirect_segment_cases() {
        let h = Hyperfield::field_semidirect(GroupKind::Integer);
        let p = vec![qp(-1, 1, 0), qp(1, 1, 0)];
        let q = vec![qp(3, 1, 1), qp(-2, 1, -1)];
        let r = combine(&h, &[p.clone(), q.clone()], &[qp(1, 1, 0), qp(1, 5, -1)], Mode::Convex).unwrap();
        assert_eq!(r.coords, vec![HSet::single(qp(-2, 5, 0)), HSet::single(qp(1, 1, 0))]);
        let r = combine(&h, &[p, q], &[qp(1, 1, 0), qp(1, 3, -1)], Mode::Convex).unwrap();
        assert!(r.coords[0].is_balanced());
        // Cancellation happens at level 0, so everything strictly below it.
        assert!(r.contains(&h, &[qp(7, 1, -1), qp(1, 1, 0)]));
        assert!(!r.contains(&h, &[qp(7, 1, 0), qp(1, 1, 0)]));
    }

    #[test]
    fn convex_mode_checks_normalisation() {
        let h = Hyperfield::field_semidirect(GroupKind::Integer);
        let p = vec![qp(1, 1, 0)];
        let err = combine(&h, &[p.clone(), p], &[qp(1, 1, 0), qp(1, 1, 0)], Mode::Convex);
        assert_eq!(err, Err(Error::NotConvex));
    }
}
