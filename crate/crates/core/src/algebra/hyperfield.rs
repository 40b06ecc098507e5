//! Hyperfield instances and their multivalued arithmetic.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::element::{HElem, HSet, Sgn, Unit};
use super::group::{GroupKind, GroupVal};
use super::table::{mask_iter, TableHyperfield};
use crate::error::{Error, Result};

/// Base of a semidirect extension `H ⋊ G`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Base {
    Krasner,
    Sign,
    /// The rationals, standing in for an ordered field.
    Field,
}

impl Base {
    pub fn one(self) -> Unit {
        match self {
            Base::Krasner => Unit::One,
            Base::Sign => Unit::Sign(Sgn::Pos),
            Base::Field => Unit::Rat(BigRational::one()),
        }
    }

    fn accepts(self, u: &Unit) -> bool {
        match (self, u) {
            (Base::Krasner, Unit::One) | (Base::Sign, Unit::Sign(_)) => true,
            (Base::Field, Unit::Rat(q)) => !q.is_zero(),
            _ => false,
        }
    }

    /// `u ⊞ v` in the base: `None` when the sum contains zero, otherwise
    /// the (single) unit it equals.
    fn add(self, u: &Unit, v: &Unit) -> Option<Unit> {
        match (u, v) {
            (Unit::One, Unit::One) => None,
            (Unit::Sign(a), Unit::Sign(b)) => (a == b).then(|| u.clone()),
            (Unit::Rat(a), Unit::Rat(b)) => {
                let s = a + b;
                (!s.is_zero()).then_some(Unit::Rat(s))
            }
            _ => unreachable!("validated units share a base"),
        }
    }

    /// Whether `(u, g)` lies in the balanced set at level `g` itself.
    fn level_in_balanced(self) -> bool {
        !matches!(self, Base::Field)
    }
}

/// A hyperfield instance. Elements are plain [`HElem`] values; every
/// operation takes the instance explicitly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Hyperfield {
    Krasner,
    Sign,
    Rational,
    /// `base ⋊ group`. Tropical is `Krasner ⋊ G`, signed tropical is
    /// `Sign ⋊ G`.
    Semidirect {
        base: Base,
        group: GroupKind,
    },
    Table(Arc<TableHyperfield>),
}

impl fmt::Display for Hyperfield {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Hyperfield::Krasner => write!(f, "K"),
            Hyperfield::Sign => write!(f, "S"),
            Hyperfield::Rational => write!(f, "Q"),
            Hyperfield::Semidirect { base, group } => {
                let g = group.name();
                match base {
                    Base::Krasner => write!(f, "T@{g}"),
                    Base::Sign => write!(f, "TR@{g}"),
                    Base::Field => write!(f, "Qx{g}"),
                }
            }
            Hyperfield::Table(t) => write!(f, "table[{}]", t.names().join(" ")),
        }
    }
}

impl Hyperfield {
    pub fn tropical(group: GroupKind) -> Self {
        Hyperfield::Semidirect { base: Base::Krasner, group }
    }

    pub fn signed_tropical(group: GroupKind) -> Self {
        Hyperfield::Semidirect { base: Base::Sign, group }
    }

    pub fn field_semidirect(group: GroupKind) -> Self {
        Hyperfield::Semidirect { base: Base::Field, group }
    }

    pub fn table(t: TableHyperfield) -> Self {
        Hyperfield::Table(Arc::new(t))
    }

    pub fn h5() -> Self {
        Hyperfield::table(TableHyperfield::h5())
    }

    pub fn zero(&self) -> HElem {
        match self {
            Hyperfield::Table(t) => HElem::Idx(t.zero()),
            _ => HElem::Zero,
        }
    }

    pub fn one(&self) -> HElem {
        match self {
            Hyperfield::Krasner => HElem::One,
            Hyperfield::Sign => HElem::pos(),
            Hyperfield::Rational => HElem::Rat(BigRational::one()),
            Hyperfield::Semidirect { base, group } => HElem::Pair(base.one(), group.zero()),
            Hyperfield::Table(t) => HElem::Idx(t.one()),
        }
    }

    pub fn is_zero(&self, a: &HElem) -> bool {
        *a == self.zero()
    }

    /// Checks that `a` is a well-formed element of this instance.
    pub fn validate(&self, a: &HElem) -> Result<()> {
        let ok = match (self, a) {
            (Hyperfield::Table(t), HElem::Idx(i)) => *i < t.len(),
            (Hyperfield::Table(_), _) => false,
            (_, HElem::Zero) => true,
            (Hyperfield::Krasner, HElem::One) => true,
            (Hyperfield::Sign, HElem::Sign(_)) => true,
            (Hyperfield::Rational, HElem::Rat(q)) => !q.is_zero(),
            (Hyperfield::Semidirect { base, group }, HElem::Pair(u, g)) => base.accepts(u) && group.accepts(g),
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InstanceMismatch { instance: self.to_string(), elem: format!("{a:?}") })
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Hyperfield::Krasner | Hyperfield::Sign | Hyperfield::Table(_))
    }

    /// All elements of a finite instance, in a fixed order.
    pub fn elements(&self) -> Option<Vec<HElem>> {
        match self {
            Hyperfield::Krasner => Some(vec![HElem::Zero, HElem::One]),
            Hyperfield::Sign => Some(vec![HElem::neg_one(), HElem::Zero, HElem::pos()]),
            Hyperfield::Table(t) => Some((0..t.len()).map(HElem::Idx).collect()),
            _ => None,
        }
    }

    pub fn is_ordered(&self) -> bool {
        match self {
            Hyperfield::Krasner => false,
            Hyperfield::Semidirect { base: Base::Krasner, .. } => false,
            Hyperfield::Table(t) => t.positive().is_some(),
            _ => true,
        }
    }

    pub fn is_stringent(&self) -> bool {
        match self {
            Hyperfield::Table(t) => t.is_stringent(),
            _ => true,
        }
    }

    /// Whether the ordering is dense.
    pub fn is_dense(&self) -> Result<bool> {
        self.require_ordered()?;
        Ok(match self {
            Hyperfield::Sign => false,
            Hyperfield::Rational => true,
            Hyperfield::Semidirect { base: Base::Field, .. } => true,
            Hyperfield::Semidirect { group, .. } => group.is_dense(),
            Hyperfield::Table(_) => {
                let els = self.elements().expect("finite");
                let mut dense = true;
                'outer: for a in &els {
                    for b in &els {
                        if self.lt(a, b)? && !els.iter().any(|c| self.lt(a, c).unwrap() && self.lt(c, b).unwrap()) {
                            dense = false;
                            break 'outer;
                        }
                    }
                }
                dense
            }
            Hyperfield::Krasner => unreachable!(),
        })
    }

    fn require_ordered(&self) -> Result<()> {
        if self.is_ordered() {
            Ok(())
        } else {
            Err(Error::NoOrdering(self.to_string()))
        }
    }

    pub fn require_dense(&self) -> Result<()> {
        if !self.is_stringent() {
            return Err(Error::Unsupported(format!("{self} is not stringent")));
        }
        if self.is_dense()? {
            Ok(())
        } else {
            Err(Error::NonDense(self.to_string()))
        }
    }

    fn balanced_at(&self, g: GroupVal) -> HSet {
        match self {
            Hyperfield::Semidirect { base, .. } => HSet::Balanced(HElem::Pair(base.one(), g)),
            _ => unreachable!("balanced sets only exist over semidirect instances"),
        }
    }

    /// `a ⊞ b`.
    pub fn add(&self, a: &HElem, b: &HElem) -> Result<HSet> {
        self.validate(a)?;
        self.validate(b)?;
        Ok(self.add_unchecked(a, b))
    }

    fn add_unchecked(&self, a: &HElem, b: &HElem) -> HSet {
        match self {
            Hyperfield::Table(t) => {
                let (HElem::Idx(i), HElem::Idx(j)) = (a, b) else { unreachable!() };
                HSet::finite(mask_iter(t.add_mask(*i, *j)).map(HElem::Idx))
            }
            _ => match (a, b) {
                (HElem::Zero, x) | (x, HElem::Zero) => HSet::single(x.clone()),
                (HElem::One, HElem::One) => HSet::finite([HElem::Zero, HElem::One]),
                (HElem::Sign(s), HElem::Sign(r)) => {
                    if s == r {
                        HSet::single(a.clone())
                    } else {
                        HSet::finite([HElem::neg_one(), HElem::Zero, HElem::pos()])
                    }
                }
                (HElem::Rat(p), HElem::Rat(q)) => HSet::single(HElem::from_rational(p + q)),
                (HElem::Pair(u, g), HElem::Pair(v, h)) => {
                    let Hyperfield::Semidirect { base, .. } = self else { unreachable!() };
                    match g.cmp(h) {
                        Ordering::Greater => HSet::single(a.clone()),
                        Ordering::Less => HSet::single(b.clone()),
                        Ordering::Equal => match base.add(u, v) {
                            Some(w) => HSet::single(HElem::Pair(w, g.clone())),
                            None => self.balanced_at(g.clone()),
                        },
                    }
                }
                _ => unreachable!("validated elements share an instance"),
            },
        }
    }

    /// Whether `x` lies in `s`.
    pub fn contains(&self, s: &HSet, x: &HElem) -> bool {
        match s {
            HSet::Finite(v) => v.binary_search(x).is_ok(),
            HSet::Balanced(HElem::Pair(_, g)) => match x {
                HElem::Zero => true,
                HElem::Pair(_, h) => match h.cmp(g) {
                    Ordering::Less => true,
                    Ordering::Equal => match self {
                        Hyperfield::Semidirect { base, .. } => base.level_in_balanced(),
                        _ => false,
                    },
                    Ordering::Greater => false,
                },
                _ => false,
            },
            HSet::Balanced(_) => false,
        }
    }

    /// `s ⊆ t`.
    pub fn subset(&self, s: &HSet, t: &HSet) -> bool {
        match (s, t) {
            (HSet::Finite(v), _) => v.iter().all(|x| self.contains(t, x)),
            (HSet::Balanced(HElem::Pair(_, g)), HSet::Balanced(HElem::Pair(_, h))) => g <= h,
            (HSet::Balanced(_), _) => false,
        }
    }

    /// Union of sets; over semidirect instances the result must again be a
    /// singleton-or-balanced set, or the union of finitely many singletons.
    fn union(&self, parts: Vec<HSet>) -> Result<HSet> {
        let top = parts
            .iter()
            .filter_map(|s| match s {
                HSet::Balanced(HElem::Pair(_, g)) => Some(g.clone()),
                _ => None,
            })
            .max();
        match top {
            None => Ok(HSet::finite(parts.into_iter().flat_map(|s| match s {
                HSet::Finite(v) => v,
                HSet::Balanced(_) => unreachable!(),
            }))),
            Some(g) => {
                let b = self.balanced_at(g);
                if parts.iter().all(|s| self.subset(s, &b)) {
                    Ok(b)
                } else {
                    Err(Error::Unsupported("sum is not a realisable set".into()))
                }
            }
        }
    }

    /// `s ⊞ t` for sets, as the union of elementwise sums.
    pub fn add_sets(&self, s: &HSet, t: &HSet) -> Result<HSet> {
        match (s, t) {
            (HSet::Finite(a), HSet::Finite(b)) => {
                let mut parts = Vec::with_capacity(a.len() * b.len());
                for x in a {
                    for y in b {
                        parts.push(self.add(x, y)?);
                    }
                }
                self.union(parts)
            }
            (HSet::Balanced(p), HSet::Balanced(q)) => {
                let (g, h) = (p.value().expect("pair"), q.value().expect("pair"));
                Ok(self.balanced_at(g.max(h).clone()))
            }
            (HSet::Balanced(p), HSet::Finite(v)) | (HSet::Finite(v), HSet::Balanced(p)) => {
                let g = p.value().expect("pair");
                let mut parts = Vec::with_capacity(v.len());
                for x in v {
                    self.validate(x)?;
                    parts.push(self.balanced_plus(g, x));
                }
                self.union(parts)
            }
        }
    }

    fn balanced_plus(&self, g: &GroupVal, x: &HElem) -> HSet {
        let Hyperfield::Semidirect { base, .. } = self else { unreachable!() };
        match x {
            HElem::Pair(_, h) => match h.cmp(g) {
                Ordering::Greater => HSet::single(x.clone()),
                Ordering::Equal if *base == Base::Field => HSet::single(x.clone()),
                _ => self.balanced_at(g.clone()),
            },
            _ => self.balanced_at(g.clone()),
        }
    }

    /// Sum of a nonempty list of elements.
    pub fn sum_many(&self, xs: &[HElem]) -> Result<HSet> {
        let (first, rest) = xs.split_first().ok_or(Error::Arity)?;
        self.validate(first)?;
        let mut acc = HSet::single(first.clone());
        for x in rest {
            self.validate(x)?;
            acc = self.add_sets(&acc, &HSet::single(x.clone()))?;
        }
        Ok(acc)
    }

    /// Sum of a nonempty list of sets.
    pub fn sum_sets(&self, xs: &[HSet]) -> Result<HSet> {
        let (first, rest) = xs.split_first().ok_or(Error::Arity)?;
        let mut acc = first.clone();
        for x in rest {
            acc = self.add_sets(&acc, x)?;
        }
        Ok(acc)
    }

    pub fn neg(&self, a: &HElem) -> HElem {
        match (self, a) {
            (Hyperfield::Table(t), HElem::Idx(i)) => HElem::Idx(t.neg(*i)),
            (_, HElem::Sign(s)) => HElem::Sign(s.flip()),
            (_, HElem::Rat(q)) => HElem::Rat(-q),
            (_, HElem::Pair(u, g)) => HElem::Pair(u.neg(), g.clone()),
            _ => a.clone(),
        }
    }

    pub fn mul(&self, a: &HElem, b: &HElem) -> HElem {
        match (self, a, b) {
            (Hyperfield::Table(t), HElem::Idx(i), HElem::Idx(j)) => HElem::Idx(t.mul(*i, *j)),
            (_, HElem::Zero, _) | (_, _, HElem::Zero) => HElem::Zero,
            (_, HElem::One, x) | (_, x, HElem::One) => x.clone(),
            (_, HElem::Sign(s), HElem::Sign(r)) => HElem::Sign(s.times(*r)),
            (_, HElem::Rat(p), HElem::Rat(q)) => HElem::Rat(p * q),
            (_, HElem::Pair(u, g), HElem::Pair(v, h)) => HElem::Pair(u.mul(v), g.add(h)),
            _ => unreachable!("mul of elements from different instances"),
        }
    }

    pub fn inv(&self, a: &HElem) -> Result<HElem> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        self.validate(a)?;
        Ok(match (self, a) {
            (Hyperfield::Table(t), HElem::Idx(i)) => {
                let j = (0..t.len())
                    .find(|&j| t.mul(*i, j) == t.one())
                    .ok_or_else(|| Error::Table(format!("{} has no inverse", t.names()[*i])))?;
                HElem::Idx(j)
            }
            (_, HElem::Rat(q)) => HElem::Rat(q.recip()),
            (_, HElem::Pair(u, g)) => HElem::Pair(u.inv(), g.neg()),
            _ => a.clone(),
        })
    }

    /// `c ⊙ s`.
    pub fn scale_set(&self, c: &HElem, s: &HSet) -> HSet {
        if self.is_zero(c) {
            return HSet::single(self.zero());
        }
        match s {
            HSet::Finite(v) => HSet::finite(v.iter().map(|x| self.mul(c, x))),
            HSet::Balanced(p) => {
                let g = p.value().expect("pair");
                let h = c.value().expect("pair");
                self.balanced_at(g.add(h))
            }
        }
    }

    pub fn neg_set(&self, s: &HSet) -> HSet {
        match s {
            HSet::Finite(v) => HSet::finite(v.iter().map(|x| self.neg(x))),
            b => b.clone(),
        }
    }

    /// Whether `a` is positive. Errors on unordered instances.
    pub fn is_positive(&self, a: &HElem) -> Result<bool> {
        self.require_ordered()?;
        self.validate(a)?;
        Ok(self.sign_unchecked(a) == Some(Sgn::Pos))
    }

    fn sign_unchecked(&self, a: &HElem) -> Option<Sgn> {
        match (self, a) {
            (Hyperfield::Table(t), HElem::Idx(i)) => {
                let p = t.positive().expect("ordered");
                if *i == t.zero() {
                    None
                } else if p >> i & 1 == 1 {
                    Some(Sgn::Pos)
                } else {
                    Some(Sgn::Neg)
                }
            }
            (_, HElem::Sign(s)) => Some(*s),
            (_, HElem::Rat(q)) => Some(if q.is_positive() { Sgn::Pos } else { Sgn::Neg }),
            (_, HElem::Pair(u, _)) => u.sign(),
            _ => None,
        }
    }

    /// Sign of `a`: `None` for zero.
    pub fn sign_of(&self, a: &HElem) -> Result<Option<Sgn>> {
        self.require_ordered()?;
        self.validate(a)?;
        Ok(self.sign_unchecked(a))
    }

    /// The sign homomorphism onto `S`.
    pub fn sgn_hom(&self, a: &HElem) -> Result<HElem> {
        Ok(match self.sign_of(a)? {
            None => HElem::Zero,
            Some(s) => HElem::Sign(s),
        })
    }

    pub fn set_contains_zero(&self, s: &HSet) -> bool {
        self.contains(s, &self.zero())
    }

    /// `s ⊆ H⁺`. Balanced sets always contain zero, so never qualify.
    pub fn set_subset_positive(&self, s: &HSet) -> Result<bool> {
        self.require_ordered()?;
        Ok(match s {
            HSet::Finite(v) => v.iter().all(|x| self.sign_unchecked(x) == Some(Sgn::Pos)),
            HSet::Balanced(_) => false,
        })
    }

    /// `s ∩ (H⁺ ∪ {0}) ≠ ∅`.
    pub fn set_meets_nonnegative(&self, s: &HSet) -> Result<bool> {
        self.require_ordered()?;
        Ok(match s {
            HSet::Finite(v) => v.iter().any(|x| self.sign_unchecked(x) != Some(Sgn::Neg)),
            HSet::Balanced(_) => true,
        })
    }

    /// Strict order: `b ⊞ -a ⊆ H⁺`.
    pub fn lt(&self, a: &HElem, b: &HElem) -> Result<bool> {
        self.require_ordered()?;
        let d = self.add(b, &self.neg(a))?;
        self.set_subset_positive(&d)
    }

    pub fn le(&self, a: &HElem, b: &HElem) -> Result<bool> {
        Ok(a == b || self.lt(a, b)?)
    }

    /// `s ⪯ t`: equal, or every element of `s` is `⪯` every element of `t`.
    pub fn le_sets(&self, s: &HSet, t: &HSet) -> Result<bool> {
        self.require_ordered()?;
        if s == t {
            return Ok(true);
        }
        match (s, t) {
            (HSet::Finite(a), HSet::Finite(b)) => {
                for x in a {
                    for y in b {
                        if !self.le(x, y)? {
                            return Ok(false);
                        }
                    }
                }
                Ok(true)
            }
            // Two distinct balanced sets both contain zero and elements of
            // both signs, so they are never comparable.
            (HSet::Balanced(_), HSet::Balanced(_)) => Ok(false),
            (HSet::Balanced(p), HSet::Finite(b)) => {
                let g = p.value().expect("pair");
                Ok(b.iter().all(|y| self.dominates_balanced(g, y, Sgn::Pos)))
            }
            (HSet::Finite(a), HSet::Balanced(p)) => {
                let g = p.value().expect("pair");
                Ok(a.iter().all(|x| self.dominates_balanced(g, x, Sgn::Neg)))
            }
        }
    }

    /// For `s = Pos`: whether every element of the balanced set at level
    /// `g` is `⪯ y`. For `s = Neg`: whether `y ⪯` every such element.
    fn dominates_balanced(&self, g: &GroupVal, y: &HElem, s: Sgn) -> bool {
        match y {
            HElem::Pair(u, h) => u.sign() == Some(s) && h >= g,
            _ => false,
        }
    }

    /// Parses an element literal of this instance.
    pub fn parse_elem(&self, s: &str) -> Result<HElem> {
        crate::parse::parse_elem(self, s)
    }

    /// Formats an element in the literal syntax accepted by [`Self::parse_elem`].
    pub fn fmt_elem(&self, a: &HElem) -> String {
        match (self, a) {
            (Hyperfield::Table(t), HElem::Idx(i)) => t.names()[*i].clone(),
            (Hyperfield::Semidirect { base: Base::Krasner, .. }, HElem::Zero) => "-inf".into(),
            _ => a.to_string(),
        }
    }

    pub fn fmt_set(&self, s: &HSet) -> String {
        match s {
            HSet::Finite(v) => format!("{{{}}}", v.iter().map(|x| self.fmt_elem(x)).collect::<Vec<_>>().join(", ")),
            HSet::Balanced(a) => format!("balanced({})", self.fmt_elem(a)),
        }
    }

    pub fn group(&self) -> Option<&GroupKind> {
        match self {
            Hyperfield::Semidirect { group, .. } => Some(group),
            _ => None,
        }
    }

    pub fn base(&self) -> Option<Base> {
        match self {
            Hyperfield::Semidirect { base, .. } => Some(*base),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tr() -> Hyperfield {
        Hyperfield::signed_tropical(GroupKind::Rational)
    }

    fn qz() -> Hyperfield {
        Hyperfield::field_semidirect(GroupKind::Integer)
    }

    fn sp(s: Sgn, n: i64) -> HElem {
        HElem::spair(s, GroupVal::rat(n, 1))
    }

    fn qp(k: i64, g: i64) -> HElem {
        HElem::qpair(BigRational::from_integer(k.into()), GroupVal::int(g))
    }

    #[test]
    fn sign_cancellation() {
        let s = Hyperfield::Sign;
        let r = s.add(&HElem::pos(), &HElem::neg_one()).unwrap();
        assert_eq!(r, HSet::finite([HElem::pos(), HElem::Zero, HElem::neg_one()]));
    }

    #[test]
    fn semidirect_examples() {
        assert_eq!(qz().add(&qp(3, 0), &qp(-1, 0)).unwrap(), HSet::single(qp(2, 0)));
        assert_eq!(qz().mul(&qp(3, 1), &qp(2, -1)), qp(6, 0));
        let b = tr().add(&sp(Sgn::Pos, 3), &sp(Sgn::Neg, 3)).unwrap();
        assert_eq!(b, HSet::Balanced(sp(Sgn::Pos, 3)));
        assert!(tr().contains(&b, &sp(Sgn::Neg, 3)));
        assert!(tr().contains(&b, &sp(Sgn::Pos, -7)));
        assert!(!tr().contains(&b, &sp(Sgn::Pos, 4)));
        assert_eq!(tr().inv(&sp(Sgn::Neg, 2)).unwrap(), sp(Sgn::Neg, -2));
    }

    #[test]
    fn field_balanced_excludes_its_level() {
        let b = qz().add(&qp(2, 0), &qp(-2, 0)).unwrap();
        assert!(!qz().contains(&b, &qp(5, 0)));
        assert!(qz().contains(&b, &qp(5, -1)));
        assert_eq!(qz().add_sets(&b, &HSet::single(qp(1, 0))).unwrap(), HSet::single(qp(1, 0)));
    }

    #[test]
    fn tropical_idempotent_sum_is_downset() {
        let t = Hyperfield::tropical(GroupKind::Rational);
        let a = HElem::Pair(Unit::One, GroupVal::rat(1, 1));
        let s = t.add(&a, &a).unwrap();
        assert!(t.contains(&s, &a));
        assert!(t.contains(&s, &HElem::Pair(Unit::One, GroupVal::rat(-3, 1))));
        assert!(t.contains(&s, &HElem::Zero));
        assert!(!t.is_ordered());
    }

    #[test]
    fn signed_tropical_order() {
        let h = tr();
        assert!(h.lt(&sp(Sgn::Neg, 9), &sp(Sgn::Pos, 0)).unwrap());
        // (-1,b1) ≺ (-1,b2) exactly when b1 > b2.
        assert!(h.lt(&sp(Sgn::Neg, 1), &sp(Sgn::Neg, -2)).unwrap());
        assert!(!h.lt(&sp(Sgn::Neg, 1), &sp(Sgn::Neg, 2)).unwrap());
        assert!(h.lt(&sp(Sgn::Neg, 2), &sp(Sgn::Neg, 1)).unwrap());
        assert!(!h.lt(&sp(Sgn::Pos, 1), &sp(Sgn::Pos, 1)).unwrap());
    }

    #[test]
    fn balanced_vs_singleton_order() {
        let h = tr();
        let b2 = HSet::Balanced(sp(Sgn::Pos, 2));
        let b3 = HSet::Balanced(sp(Sgn::Pos, 3));
        assert!(h.le_sets(&b2, &HSet::single(sp(Sgn::Pos, 3))).unwrap());
        assert!(h.le_sets(&b2, &HSet::single(sp(Sgn::Pos, 2))).unwrap());
        assert!(!h.le_sets(&b2, &HSet::single(sp(Sgn::Pos, 1))).unwrap());
        assert!(h.le_sets(&HSet::single(sp(Sgn::Neg, 5)), &b2).unwrap());
        assert!(!h.le_sets(&b2, &b3).unwrap());
        assert!(h.le_sets(&b3, &b3).unwrap());
    }

    #[test]
    fn unordered_and_mismatch_errors() {
        assert!(matches!(Hyperfield::Krasner.is_positive(&HElem::One), Err(Error::NoOrdering(_))));
        assert!(matches!(Hyperfield::Sign.add(&HElem::One, &HElem::Zero), Err(Error::InstanceMismatch { .. })));
        assert_eq!(Hyperfield::Sign.inv(&HElem::Zero), Err(Error::DivisionByZero));
        assert_eq!(Hyperfield::Sign.sum_many(&[]), Err(Error::Arity));
    }

    #[test]
    fn density() {
        assert!(!Hyperfield::Sign.is_dense().unwrap());
        assert!(tr().is_dense().unwrap());
        assert!(!Hyperfield::signed_tropical(GroupKind::Integer).is_dense().unwrap());
        assert!(qz().is_dense().unwrap());
        assert!(!Hyperfield::h5().is_dense().unwrap());
    }
}
