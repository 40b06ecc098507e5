use std::fmt;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::group::GroupVal;

/// Sign of a nonzero element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sgn {
    Neg,
    Pos,
}

impl Sgn {
    pub fn flip(self) -> Sgn {
        match self {
            Sgn::Neg => Sgn::Pos,
            Sgn::Pos => Sgn::Neg,
        }
    }

    pub fn times(self, other: Sgn) -> Sgn {
        if self == other {
            Sgn::Pos
        } else {
            Sgn::Neg
        }
    }
}

/// Nonzero element of the base hyperfield of a semidirect extension.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Unit {
    /// The only unit of the Krasner hyperfield.
    One,
    Sign(Sgn),
    Rat(BigRational),
}

impl Unit {
    pub fn neg(&self) -> Unit {
        match self {
            Unit::One => Unit::One,
            Unit::Sign(s) => Unit::Sign(s.flip()),
            Unit::Rat(q) => Unit::Rat(-q),
        }
    }

    pub fn mul(&self, other: &Unit) -> Unit {
        match (self, other) {
            (Unit::Sign(a), Unit::Sign(b)) => Unit::Sign(a.times(*b)),
            (Unit::Rat(a), Unit::Rat(b)) => Unit::Rat(a * b),
            (Unit::One, u) | (u, Unit::One) => u.clone(),
            (Unit::Sign(s), Unit::Rat(q)) | (Unit::Rat(q), Unit::Sign(s)) => match s {
                Sgn::Pos => Unit::Rat(q.clone()),
                Sgn::Neg => Unit::Rat(-q),
            },
        }
    }

    pub fn inv(&self) -> Unit {
        match self {
            Unit::Rat(q) => Unit::Rat(q.recip()),
            u => u.clone(),
        }
    }

    /// `None` for the unordered Krasner unit.
    pub fn sign(&self) -> Option<Sgn> {
        match self {
            Unit::One => None,
            Unit::Sign(s) => Some(*s),
            Unit::Rat(q) => Some(if q.is_positive() { Sgn::Pos } else { Sgn::Neg }),
        }
    }
}

/// An element of some hyperfield instance. The instance itself is passed
/// alongside to every operation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HElem {
    Zero,
    /// Nonzero element of the Krasner hyperfield.
    One,
    Sign(Sgn),
    Rat(BigRational),
    Pair(Unit, GroupVal),
    Idx(usize),
}

impl HElem {
    pub fn pos() -> Self {
        HElem::Sign(Sgn::Pos)
    }

    pub fn neg_one() -> Self {
        HElem::Sign(Sgn::Neg)
    }

    pub fn rat(n: i64, d: i64) -> Self {
        let q = BigRational::new(n.into(), d.into());
        if q.is_zero() {
            HElem::Zero
        } else {
            HElem::Rat(q)
        }
    }

    pub fn from_rational(q: BigRational) -> Self {
        if q.is_zero() {
            HElem::Zero
        } else {
            HElem::Rat(q)
        }
    }

    /// Semidirect pair with a rational coefficient.
    pub fn qpair(coeff: BigRational, g: GroupVal) -> Self {
        if coeff.is_zero() {
            HElem::Zero
        } else {
            HElem::Pair(Unit::Rat(coeff), g)
        }
    }

    /// Semidirect pair with a sign coefficient.
    pub fn spair(s: Sgn, g: GroupVal) -> Self {
        HElem::Pair(Unit::Sign(s), g)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, HElem::Zero)
    }

    pub fn value(&self) -> Option<&GroupVal> {
        match self {
            HElem::Pair(_, g) => Some(g),
            _ => None,
        }
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        match self {
            HElem::Zero => Some(BigRational::zero()),
            HElem::Rat(q) => Some(q.clone()),
            _ => None,
        }
    }
}

impl fmt::Display for HElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HElem::Zero => write!(f, "0"),
            HElem::One => write!(f, "1"),
            HElem::Sign(Sgn::Pos) => write!(f, "+"),
            HElem::Sign(Sgn::Neg) => write!(f, "-"),
            HElem::Rat(q) => write!(f, "{q}"),
            HElem::Pair(Unit::One, g) => write!(f, "{g}"),
            HElem::Pair(Unit::Sign(s), g) => {
                write!(f, "{}1@{g}", if *s == Sgn::Pos { "+" } else { "-" })
            }
            HElem::Pair(Unit::Rat(q), g) => write!(f, "({q},{g})"),
            HElem::Idx(i) => write!(f, "#{i}"),
        }
    }
}

/// Serialized through `Display`; table elements come out as `#index`.
impl serde::Serialize for HElem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Result of a hyperaddition: an explicit finite set, or the symbolic
/// balanced set `a ⊞ -a` of a semidirect instance.
///
/// Balanced sets are stored with the base one as coefficient, so equal sets
/// compare structurally equal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HSet {
    Finite(Vec<HElem>),
    Balanced(HElem),
}

impl HSet {
    pub fn single(x: HElem) -> Self {
        HSet::Finite(vec![x])
    }

    pub fn finite<I: IntoIterator<Item = HElem>>(it: I) -> Self {
        let mut v: Vec<HElem> = it.into_iter().collect();
        v.sort();
        v.dedup();
        HSet::Finite(v)
    }

    pub fn as_singleton(&self) -> Option<&HElem> {
        match self {
            HSet::Finite(v) if v.len() == 1 => Some(&v[0]),
            _ => None,
        }
    }

    pub fn elements(&self) -> Option<&[HElem]> {
        match self {
            HSet::Finite(v) => Some(v),
            HSet::Balanced(_) => None,
        }
    }

    pub fn is_balanced(&self) -> bool {
        matches!(self, HSet::Balanced(_))
    }
}

impl fmt::Display for HSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HSet::Finite(v) => {
                write!(f, "{{")?;
                for (i, x) in v.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, "}}")
            }
            HSet::Balanced(a) => write!(f, "bal({a})"),
        }
    }
}
