//! Convexity over finite hyperfields, with point sets stored as bitmasks.

use std::collections::BTreeSet;

use crate::algebra::{HElem, HSet, Hyperfield};
use crate::error::{Error, Result};

use super::point::{combine, HPoint, Mode};

/// Point set of a [`FiniteSpace`], one bit per point.
pub type Mask = u128;

pub fn bits(m: Mask) -> impl Iterator<Item = usize> {
    let mut m = m;
    std::iter::from_fn(move || {
        if m == 0 {
            return None;
        }
        let i = m.trailing_zeros() as usize;
        m &= m - 1;
        Some(i)
    })
}

/// `H^d` for a finite ordered hyperfield, with precomputed two-point
/// combination sets.
#[derive(Clone, Debug)]
pub struct FiniteSpace {
    hf: Hyperfield,
    dim: usize,
    elems: Vec<HElem>,
    points: Vec<HPoint>,
    positives: Vec<HElem>,
    convex_pairs: Vec<(HElem, HElem)>,
    pair_convex: Vec<Mask>,
    pair_conic: Vec<Mask>,
    /// `add[a * |H| + b]`: element indices of `a ⊞ b`.
    add: Vec<Vec<usize>>,
    mul: Vec<usize>,
}

impl FiniteSpace {
    pub fn new(hf: &Hyperfield, dim: usize) -> Result<Self> {
        let elems = hf.elements().ok_or_else(|| Error::Unsupported(format!("{hf} is infinite")))?;
        if !hf.is_ordered() {
            return Err(Error::NoOrdering(hf.to_string()));
        }
        let n = elems.len().checked_pow(dim as u32).filter(|&n| n <= 128);
        let Some(n) = n else {
            return Err(Error::Unsupported(format!("{hf}^{dim} has more than 128 points")));
        };
        let points = crate::util::tuples(&elems, dim);
        debug_assert_eq!(points.len(), n);
        let positives: Vec<HElem> = elems.iter().filter(|a| hf.is_positive(a).unwrap()).cloned().collect();
        let mut convex_pairs = Vec::new();
        for a in &positives {
            for b in &positives {
                if hf.contains(&hf.add(a, b)?, &hf.one()) {
                    convex_pairs.push((a.clone(), b.clone()));
                }
            }
        }
        let mut space = FiniteSpace {
            hf: hf.clone(),
            dim,
            elems,
            points,
            positives,
            convex_pairs,
            pair_convex: Vec::new(),
            pair_conic: Vec::new(),
            add: Vec::new(),
            mul: Vec::new(),
        };
        let k = space.elems.len();
        for a in &space.elems {
            for b in &space.elems {
                let sum = hf.add(a, b)?;
                let els = sum.elements().expect("finite instance");
                space.add.push(els.iter().map(|x| space.elem_index(x).expect("closed")).collect());
                space.mul.push(space.elem_index(&hf.mul(a, b)).expect("closed"));
            }
        }
        debug_assert_eq!(space.add.len(), k * k);
        let mut conv = vec![0; n * n];
        let mut cone = vec![0; n * n];
        for i in 0..n {
            for j in i..n {
                let (p, q) = (&space.points[i], &space.points[j]);
                let pq = [p.clone(), q.clone()];
                let mut m = 0;
                for (a, b) in &space.convex_pairs {
                    m |= space.product_mask(&combine(hf, &pq, &[a.clone(), b.clone()], Mode::Convex)?.coords);
                }
                let mut c = 0;
                for a in &space.positives {
                    c |= space.product_mask(&combine(hf, &pq[..1], std::slice::from_ref(a), Mode::Conic)?.coords);
                    c |= space.product_mask(&combine(hf, &pq[1..], std::slice::from_ref(a), Mode::Conic)?.coords);
                    for b in &space.positives {
                        c |= space.product_mask(&combine(hf, &pq, &[a.clone(), b.clone()], Mode::Conic)?.coords);
                    }
                }
                conv[i * n + j] = m;
                conv[j * n + i] = m;
                cone[i * n + j] = c;
                cone[j * n + i] = c;
            }
        }
        space.pair_convex = conv;
        space.pair_conic = cone;
        Ok(space)
    }

    pub fn hyperfield(&self) -> &Hyperfield {
        &self.hf
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn elements(&self) -> &[HElem] {
        &self.elems
    }

    pub fn positives(&self) -> &[HElem] {
        &self.positives
    }

    /// Coefficient pairs `(a, b)` of positives with `1 ∈ a ⊞ b`.
    pub fn convex_pairs(&self) -> &[(HElem, HElem)] {
        &self.convex_pairs
    }

    pub fn full(&self) -> Mask {
        if self.len() == 128 {
            Mask::MAX
        } else {
            (1 << self.len()) - 1
        }
    }

    pub fn point(&self, i: usize) -> &HPoint {
        &self.points[i]
    }

    pub fn points(&self) -> &[HPoint] {
        &self.points
    }

    fn elem_index(&self, x: &HElem) -> Option<usize> {
        self.elems.iter().position(|e| e == x)
    }

    pub fn index(&self, p: &[HElem]) -> Option<usize> {
        if p.len() != self.dim {
            return None;
        }
        let mut i = 0;
        for x in p {
            i = i * self.elems.len() + self.elem_index(x)?;
        }
        Some(i)
    }

    pub fn mask_of(&self, pts: &[HPoint]) -> Result<Mask> {
        let mut m = 0;
        for p in pts {
            let i = self.index(p).ok_or_else(|| Error::Precondition(format!("{p:?} is not a point of the space")))?;
            m |= 1 << i;
        }
        Ok(m)
    }

    pub fn points_of(&self, m: Mask) -> Vec<HPoint> {
        bits(m).map(|i| self.points[i].clone()).collect()
    }

    /// Mask of the coordinate product of finite sets.
    pub fn product_mask(&self, coords: &[HSet]) -> Mask {
        let mut idx = vec![0usize];
        for s in coords {
            let els = s.elements().expect("finite instance");
            let mut next = Vec::with_capacity(idx.len() * els.len());
            for &i in &idx {
                for x in els {
                    next.push(i * self.elems.len() + self.elem_index(x).expect("element of space"));
                }
            }
            idx = next;
        }
        idx.into_iter().fold(0, |m, i| m | 1 << i)
    }

    /// All points of every two-point combination of `i` and `j`.
    pub fn pair(&self, i: usize, j: usize, mode: Mode) -> Mask {
        let n = self.len();
        match mode {
            Mode::Convex => self.pair_convex[i * n + j],
            Mode::Conic => self.pair_conic[i * n + j],
        }
    }

    /// Least superset of `m` closed under two-point combinations.
    pub fn hull(&self, m: Mask, mode: Mode) -> Mask {
        let mut cur = m;
        let mut frontier = m;
        while frontier != 0 {
            let mut new = 0;
            for i in bits(frontier) {
                for j in bits(cur) {
                    new |= self.pair(i, j, mode);
                }
            }
            new &= !cur;
            cur |= new;
            frontier = new;
        }
        cur
    }

    pub fn is_convex(&self, m: Mask, mode: Mode) -> bool {
        for i in bits(m) {
            for j in bits(m) {
                if j >= i && self.pair(i, j, mode) & !m != 0 {
                    return false;
                }
            }
        }
        true
    }

    /// Every convex (or conic) subset, including the empty set, listed in
    /// lectic order by Ganter's next-closure algorithm.
    pub fn closed_sets(&self, mode: Mode) -> Vec<Mask> {
        let n = self.len();
        let mut out = Vec::new();
        let mut a = self.hull(0, mode);
        out.push(a);
        'next: loop {
            for i in (0..n).rev() {
                let bit: Mask = 1 << i;
                if a & bit != 0 {
                    continue;
                }
                let below = bit - 1;
                let b = self.hull((a & below) | bit, mode);
                if b & below == a & below {
                    a = b;
                    out.push(a);
                    continue 'next;
                }
            }
            break;
        }
        out
    }

    /// Union of all combinations of the given multiset of points, over
    /// every admissible coefficient tuple.
    ///
    /// Tracks the reachable pairs `(s, x)` with `s ∈ ⊞ aᵢ` and
    /// `x ∈ ⊞ aᵢ pᵢ` for a common tuple `a`, one point at a time; convex
    /// combinations keep the pairs with `s = 1`.
    pub fn combination_mask(&self, idx: &[usize], mode: Mode) -> Result<Mask> {
        let k = self.elems.len();
        let coords = |i: usize| -> Vec<usize> {
            let mut c = vec![0; self.dim];
            let mut r = i;
            for slot in c.iter_mut().rev() {
                *slot = r % k;
                r /= k;
            }
            c
        };
        let pos: Vec<usize> = self.positives.iter().map(|a| self.elem_index(a).expect("element")).collect();
        let mut reach: Vec<Mask> = vec![0; k];
        for (step, &pi) in idx.iter().enumerate() {
            let p = coords(pi);
            let mut next: Vec<Mask> = vec![0; k];
            for &a in &pos {
                let ap: Vec<usize> = p.iter().map(|&c| self.mul[a * k + c]).collect();
                if step == 0 {
                    let x = ap.iter().fold(0, |i, &c| i * k + c);
                    next[a] |= 1 << x;
                    continue;
                }
                for (s, &xs) in reach.iter().enumerate() {
                    for x in bits(xs) {
                        let xc = coords(x);
                        let mut targets = vec![0usize];
                        for (c, &e) in xc.iter().zip(&ap) {
                            let sum = &self.add[c * k + e];
                            targets = targets.iter().flat_map(|&t| sum.iter().map(move |&y| t * k + y)).collect();
                        }
                        let m = targets.into_iter().fold(0, |m: Mask, t| m | 1 << t);
                        for &s2 in &self.add[s * k + a] {
                            next[s2] |= m;
                        }
                    }
                }
            }
            reach = next;
        }
        Ok(match mode {
            Mode::Convex => reach[self.elem_index(&self.hf.one()).expect("element")],
            Mode::Conic => reach.iter().fold(0, |m, &r| m | r),
        })
    }
}

/// A finite point set together with whether it is closed under
/// combinations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteConvexSet {
    pub hyperfield: Hyperfield,
    pub points: BTreeSet<HPoint>,
    pub closed: bool,
}

fn dim_of(points: &[HPoint]) -> Result<usize> {
    let d = points.first().map_or(0, Vec::len);
    if let Some(p) = points.iter().find(|p| p.len() != d) {
        return Err(Error::Dimension { expected: d, got: p.len() });
    }
    Ok(d)
}

/// Convex or conic hull of a finite point set.
pub fn hull_finite(hf: &Hyperfield, points: &[HPoint], mode: Mode) -> Result<FiniteConvexSet> {
    hull_finite_opts(hf, points, mode, false)
}

/// As [`hull_finite`]; `with_origin` adds the zero vector to a conic hull.
pub fn hull_finite_opts(hf: &Hyperfield, points: &[HPoint], mode: Mode, with_origin: bool) -> Result<FiniteConvexSet> {
    if !hf.is_finite() {
        return Err(Error::Unsupported(format!("{hf} is infinite; use member_conv_stringent")));
    }
    if points.is_empty() {
        return Ok(FiniteConvexSet { hyperfield: hf.clone(), points: BTreeSet::new(), closed: true });
    }
    let space = FiniteSpace::new(hf, dim_of(points)?)?;
    let mut m = space.mask_of(points)?;
    if with_origin && mode == Mode::Conic {
        m |= space.mask_of(&[vec![hf.zero(); space.dim()]])?;
    }
    let h = space.hull(m, mode);
    Ok(FiniteConvexSet { hyperfield: hf.clone(), points: space.points_of(h).into_iter().collect(), closed: true })
}

/// Whether a finite point set is convex.
pub fn is_convex(hf: &Hyperfield, points: &[HPoint]) -> Result<bool> {
    if points.is_empty() {
        return Ok(true);
    }
    let space = FiniteSpace::new(hf, dim_of(points)?)?;
    Ok(space.is_convex(space.mask_of(points)?, Mode::Convex))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: i8) -> HElem {
        match x {
            1 => HElem::pos(),
            -1 => HElem::neg_one(),
            _ => HElem::Zero,
        }
    }

    fn pt(a: i8, b: i8) -> HPoint {
        vec![s(a), s(b)]
    }

    #[test]
    fn antipodal_hull_is_everything() {
        let h = hull_finite(&Hyperfield::Sign, &[pt(1, -1), pt(-1, 1)], Mode::Convex).unwrap();
        assert_eq!(h.points.len(), 9);
        assert!(!is_convex(&Hyperfield::Sign, &[pt(1, -1), pt(-1, 1)]).unwrap());
    }

    #[test]
    fn axis_pair_hull() {
        let h = hull_finite(&Hyperfield::Sign, &[pt(1, 0), pt(0, 1)], Mode::Convex).unwrap();
        let want: BTreeSet<HPoint> = [pt(1, 0), pt(0, 1), pt(1, 1)].into_iter().collect();
        assert_eq!(h.points, want);
    }

    #[test]
    fn closed_sets_are_exactly_the_convex_subsets() {
        let sp = FiniteSpace::new(&Hyperfield::Sign, 2).unwrap();
        let listed: BTreeSet<Mask> = sp.closed_sets(Mode::Convex).into_iter().collect();
        let brute: BTreeSet<Mask> = (0..512u128).filter(|&m| sp.is_convex(m, Mode::Convex)).collect();
        assert_eq!(listed, brute);
    }

    #[test]
    fn infinite_instance_refused() {
        let h = Hyperfield::Rational;
        assert!(matches!(hull_finite(&h, &[vec![HElem::rat(1, 1)]], Mode::Convex), Err(Error::Unsupported(_))));
    }

    /// Coefficient tuples enumerated one by one.
    fn brute_combination(space: &FiniteSpace, idx: &[usize], mode: Mode) -> Mask {
        let hf = space.hyperfield();
        let pts: Vec<HPoint> = idx.iter().map(|&i| space.point(i).clone()).collect();
        let mut m = 0;
        for coeffs in crate::util::tuples(space.positives(), idx.len()) {
            if mode == Mode::Convex && !hf.contains(&hf.sum_many(&coeffs).unwrap(), &hf.one()) {
                continue;
            }
            m |= space.product_mask(&combine(hf, &pts, &coeffs, mode).unwrap().coords);
        }
        m
    }

    #[test]
    fn combination_mask_matches_tuple_enumeration() {
        for hf in [Hyperfield::Sign, Hyperfield::h5()] {
            let space = FiniteSpace::new(&hf, 2).unwrap();
            for k in 1..=3 {
                for ms in crate::util::multisets(space.len(), k).into_iter().step_by(7) {
                    for mode in [Mode::Convex, Mode::Conic] {
                        assert_eq!(space.combination_mask(&ms, mode).unwrap(), brute_combination(&space, &ms, mode), "{hf} {ms:?}");
                    }
                }
            }
        }
    }
}
