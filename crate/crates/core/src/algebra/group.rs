//! Exact totally ordered abelian groups: integers, rationals and
//! lexicographically ordered rational tuples.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupKind {
    Integer,
    Rational,
    /// Lexicographic tuples of the given length.
    Lex(usize),
}

impl GroupKind {
    pub fn is_dense(&self) -> bool {
        !matches!(self, GroupKind::Integer)
    }

    pub fn zero(&self) -> GroupVal {
        match self {
            GroupKind::Integer => GroupVal::Int(BigInt::zero()),
            GroupKind::Rational => GroupVal::Rat(BigRational::zero()),
            GroupKind::Lex(n) => GroupVal::Lex(vec![BigRational::zero(); *n]),
        }
    }

    /// A fixed positive element used to step away from a one-sided bound.
    pub fn unit_step(&self) -> GroupVal {
        match self {
            GroupKind::Integer => GroupVal::Int(BigInt::one()),
            GroupKind::Rational => GroupVal::Rat(BigRational::one()),
            GroupKind::Lex(n) => {
                let mut v = vec![BigRational::zero(); *n];
                if let Some(first) = v.first_mut() {
                    *first = BigRational::one();
                }
                GroupVal::Lex(v)
            }
        }
    }

    pub fn accepts(&self, g: &GroupVal) -> bool {
        match (self, g) {
            (GroupKind::Integer, GroupVal::Int(_)) => true,
            (GroupKind::Rational, GroupVal::Rat(_)) => true,
            (GroupKind::Lex(n), GroupVal::Lex(v)) => v.len() == *n,
            _ => false,
        }
    }

    /// Casts an integer-valued literal into this group.
    pub fn from_int(&self, k: i64) -> GroupVal {
        match self {
            GroupKind::Integer => GroupVal::Int(BigInt::from(k)),
            GroupKind::Rational => GroupVal::Rat(BigRational::from_integer(k.into())),
            GroupKind::Lex(n) => {
                let mut v = vec![BigRational::zero(); *n];
                if let Some(first) = v.first_mut() {
                    *first = BigRational::from_integer(k.into());
                }
                GroupVal::Lex(v)
            }
        }
    }

    /// Midpoint of `a < b`, for dense groups only.
    pub fn midpoint(&self, a: &GroupVal, b: &GroupVal) -> Option<GroupVal> {
        if !self.is_dense() {
            return None;
        }
        let two = BigRational::from_integer(2.into());
        let sum = a.add(b);
        Some(match sum {
            GroupVal::Int(k) => GroupVal::Rat(BigRational::from_integer(k) / two),
            GroupVal::Rat(q) => GroupVal::Rat(q / two),
            GroupVal::Lex(v) => GroupVal::Lex(v.into_iter().map(|q| q / &two).collect()),
        })
    }

    pub fn name(&self) -> String {
        match self {
            GroupKind::Integer => "Z".into(),
            GroupKind::Rational => "Q".into(),
            GroupKind::Lex(n) => format!("Q^{n}"),
        }
    }
}

/// Group element. Values of different variants compare as rational
/// tuples padded with zeros, so mixing variants never panics.
#[derive(Clone, Debug)]
pub enum GroupVal {
    Int(BigInt),
    Rat(BigRational),
    Lex(Vec<BigRational>),
}

impl GroupVal {
    pub fn int(k: i64) -> Self {
        GroupVal::Int(BigInt::from(k))
    }

    pub fn rat(n: i64, d: i64) -> Self {
        GroupVal::Rat(BigRational::new(n.into(), d.into()))
    }

    fn components(&self) -> Vec<BigRational> {
        match self {
            GroupVal::Int(k) => vec![BigRational::from_integer(k.clone())],
            GroupVal::Rat(q) => vec![q.clone()],
            GroupVal::Lex(v) => v.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            GroupVal::Int(k) => k.is_zero(),
            GroupVal::Rat(q) => q.is_zero(),
            GroupVal::Lex(v) => v.iter().all(Zero::is_zero),
        }
    }

    pub fn add(&self, other: &GroupVal) -> GroupVal {
        match (self, other) {
            (GroupVal::Int(a), GroupVal::Int(b)) => GroupVal::Int(a + b),
            (GroupVal::Rat(a), GroupVal::Rat(b)) => GroupVal::Rat(a + b),
            (GroupVal::Int(a), GroupVal::Rat(b)) | (GroupVal::Rat(b), GroupVal::Int(a)) => {
                GroupVal::Rat(BigRational::from_integer(a.clone()) + b)
            }
            _ => {
                let (x, y) = (self.components(), other.components());
                let n = x.len().max(y.len());
                let get = |v: &Vec<BigRational>, i: usize| v.get(i).cloned().unwrap_or_else(BigRational::zero);
                GroupVal::Lex((0..n).map(|i| get(&x, i) + get(&y, i)).collect())
            }
        }
    }

    pub fn neg(&self) -> GroupVal {
        match self {
            GroupVal::Int(a) => GroupVal::Int(-a),
            GroupVal::Rat(a) => GroupVal::Rat(-a),
            GroupVal::Lex(v) => GroupVal::Lex(v.iter().map(|q| -q).collect()),
        }
    }

    pub fn sub(&self, other: &GroupVal) -> GroupVal {
        self.add(&other.neg())
    }
}

impl Ord for GroupVal {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (GroupVal::Int(a), GroupVal::Int(b)) => a.cmp(b),
            (GroupVal::Rat(a), GroupVal::Rat(b)) => a.cmp(b),
            _ => {
                let (x, y) = (self.components(), other.components());
                let zero = BigRational::zero();
                for i in 0..x.len().max(y.len()) {
                    let a = x.get(i).unwrap_or(&zero);
                    let b = y.get(i).unwrap_or(&zero);
                    match a.cmp(b) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
        }
    }
}

impl PartialOrd for GroupVal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl PartialEq for GroupVal {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for GroupVal {}

impl Hash for GroupVal {
    fn hash<H: Hasher>(&self, state: &mut H) {
        let mut c = self.components();
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        c.hash(state);
    }
}

impl fmt::Display for GroupVal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupVal::Int(k) => write!(f, "{k}"),
            GroupVal::Rat(q) => write!(f, "{q}"),
            GroupVal::Lex(v) => {
                write!(f, "[")?;
                for (i, q) in v.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{q}")?;
                }
                write!(f, "]")
            }
        }
    }
}
