//! Back-substitution: rebuilding a solution variable by variable.

use std::cmp::Ordering;

use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::algebra::{Base, GroupKind, GroupVal, HElem, Hyperfield, Sgn, Unit};
use crate::error::{Error, Result};

use super::eliminate::{ColClass, Trace};
use super::system::{RealisableMatrix, RealisableSet};

/// A strict bound on the variable being solved for.
#[derive(Clone, Debug, PartialEq)]
enum Bound {
    Elem(HElem),
    /// Over `Q ⋊ G`: the balanced set at this level. As a lower bound it
    /// means "positive with value at least g", as an upper bound "negative
    /// with value at least g".
    Level(GroupVal),
}

fn two() -> BigRational {
    BigRational::from_integer(2.into())
}

fn coeff(x: &HElem) -> Option<&BigRational> {
    match x {
        HElem::Pair(Unit::Rat(k), _) => Some(k),
        _ => None,
    }
}

/// Reduces a realisable lower (or upper) bound set to a [`Bound`].
fn bound_of(hf: &Hyperfield, s: &RealisableSet, lower: bool) -> Bound {
    match s {
        RealisableSet::Singleton(x) => Bound::Elem(x.clone()),
        RealisableSet::Balanced(a) => {
            let g = a.value().expect("balanced sets live in semidirect instances").clone();
            match hf.base() {
                // Over S ⋊ G every element of the set lies between (-1,g) and
                // (+1,g), both of which belong to it.
                Some(Base::Sign) => Bound::Elem(HElem::spair(if lower { Sgn::Pos } else { Sgn::Neg }, g)),
                _ => Bound::Level(g),
            }
        }
    }
}

fn sign(hf: &Hyperfield, x: &HElem) -> Option<Sgn> {
    hf.sign_of(x).expect("ordered instance")
}

fn lt(hf: &Hyperfield, a: &HElem, b: &HElem) -> bool {
    hf.lt(a, b).expect("ordered instance")
}

/// Tightest of several bounds: the largest lower or the smallest upper.
fn tightest(hf: &Hyperfield, bounds: Vec<Bound>, lower: bool) -> Option<Bound> {
    let mut elem: Option<HElem> = None;
    let mut level: Option<GroupVal> = None;
    for b in bounds {
        match b {
            Bound::Elem(x) => {
                elem = Some(match elem {
                    None => x,
                    Some(y) => {
                        let x_wins = if lower { lt(hf, &y, &x) } else { lt(hf, &x, &y) };
                        if x_wins {
                            x
                        } else {
                            y
                        }
                    }
                })
            }
            Bound::Level(g) => level = Some(level.map_or(g.clone(), |h| h.max(g))),
        }
    }
    match (elem, level) {
        (None, None) => None,
        (Some(x), None) => Some(Bound::Elem(x)),
        (None, Some(g)) => Some(Bound::Level(g)),
        (Some(x), Some(g)) => {
            // The element wins when it already forces the level condition.
            let want = if lower { Sgn::Pos } else { Sgn::Neg };
            if sign(hf, &x) == Some(want) && x.value().is_some_and(|v| *v >= g) {
                Some(Bound::Elem(x))
            } else {
                Some(Bound::Level(g))
            }
        }
    }
}

fn shift(group: &GroupKind, g: &GroupVal, up: bool) -> GroupVal {
    let step = group.unit_step();
    if up {
        g.add(&step)
    } else {
        g.sub(&step)
    }
}

/// An element strictly between the bounds.
fn between(hf: &Hyperfield, lo: Option<Bound>, up: Option<Bound>) -> Result<HElem> {
    let infeasible = || Error::Infeasible;
    match hf {
        Hyperfield::Rational => {
            let q = |b: &Bound| match b {
                Bound::Elem(x) => x.as_rational().expect("rational"),
                Bound::Level(_) => unreachable!(),
            };
            let one = BigRational::one();
            Ok(HElem::from_rational(match (lo.as_ref().map(q), up.as_ref().map(q)) {
                (None, None) => one,
                (Some(l), None) => l + one,
                (None, Some(u)) => u - one,
                (Some(l), Some(u)) => {
                    if l >= u {
                        return Err(infeasible());
                    }
                    (l + u) / two()
                }
            }))
        }
        Hyperfield::Semidirect { base, group } => {
            let one_at = |s: Sgn, k: Option<&BigRational>, g: GroupVal| match base {
                Base::Sign => HElem::spair(s, g),
                _ => {
                    let k = k.cloned().unwrap_or_else(BigRational::one);
                    HElem::qpair(if s == Sgn::Pos { k.abs() } else { -k.abs() }, g)
                }
            };
            match (lo, up) {
                (None, None) => Ok(hf.one()),
                (Some(Bound::Elem(l)), None) => Ok(match (sign(hf, &l), l.value()) {
                    (None, _) => hf.one(),
                    (Some(s), Some(g)) => one_at(s, coeff(&l), shift(group, g, s == Sgn::Pos)),
                    _ => unreachable!(),
                }),
                (None, Some(Bound::Elem(u))) => Ok(match (sign(hf, &u), u.value()) {
                    (None, _) => hf.neg(&hf.one()),
                    (Some(s), Some(g)) => one_at(s, coeff(&u), shift(group, g, s == Sgn::Neg)),
                    _ => unreachable!(),
                }),
                (Some(Bound::Level(g)), None) => Ok(one_at(Sgn::Pos, None, g)),
                (None, Some(Bound::Level(g))) => Ok(one_at(Sgn::Neg, None, g)),
                (Some(Bound::Level(_)), Some(Bound::Level(_))) => Err(infeasible()),
                (Some(Bound::Level(g)), Some(Bound::Elem(u))) => {
                    let (Some(k), Some(h)) = (coeff(&u), u.value()) else { return Err(infeasible()) };
                    if !k.is_positive() || *h < g {
                        return Err(infeasible());
                    }
                    Ok(HElem::qpair(k / two(), h.clone()))
                }
                (Some(Bound::Elem(l)), Some(Bound::Level(g))) => {
                    let (Some(k), Some(h)) = (coeff(&l), l.value()) else { return Err(infeasible()) };
                    if !k.is_negative() || *h < g {
                        return Err(infeasible());
                    }
                    Ok(HElem::qpair(k / two(), h.clone()))
                }
                (Some(Bound::Elem(l)), Some(Bound::Elem(u))) => {
                    if !lt(hf, &l, &u) {
                        return Err(infeasible());
                    }
                    let (sl, su) = (sign(hf, &l), sign(hf, &u));
                    match (sl, su) {
                        (Some(Sgn::Neg), Some(Sgn::Pos)) => Ok(HElem::Zero),
                        (None, _) => {
                            let g = u.value().expect("nonzero");
                            Ok(match base {
                                Base::Sign => HElem::spair(Sgn::Pos, shift(group, g, false)),
                                _ => HElem::qpair(coeff(&u).expect("pair") / two(), g.clone()),
                            })
                        }
                        (_, None) => {
                            let g = l.value().expect("nonzero");
                            Ok(match base {
                                Base::Sign => HElem::spair(Sgn::Neg, shift(group, g, false)),
                                _ => HElem::qpair(coeff(&l).expect("pair") / two(), g.clone()),
                            })
                        }
                        (Some(s), Some(_)) => {
                            let (gl, gu) = (l.value().expect("pair"), u.value().expect("pair"));
                            match base {
                                Base::Sign => {
                                    let mid = group.midpoint(gl, gu).ok_or_else(|| Error::NonDense(hf.to_string()))?;
                                    Ok(HElem::spair(s, mid))
                                }
                                _ => {
                                    let (kl, ku) = (coeff(&l).expect("pair"), coeff(&u).expect("pair"));
                                    Ok(match gl.cmp(gu) {
                                        Ordering::Equal => HElem::qpair((kl + ku) / two(), gl.clone()),
                                        // The bound of larger value dominates; halve it.
                                        Ordering::Less => HElem::qpair(ku / two(), gu.clone()),
                                        Ordering::Greater => HElem::qpair(kl / two(), gl.clone()),
                                    })
                                }
                            }
                        }
                    }
                }
            }
        }
        _ => Err(Error::Unsupported(format!("back-substitution over {hf}"))),
    }
}

/// Chooses a value for the last variable of `m` given values `x` for the
/// others. `Both` columns are treated as their (+) and (−) copies.
pub fn solve_last(m: &RealisableMatrix, classes: &[ColClass], x: &[HElem]) -> Result<HElem> {
    let hf = m.hyperfield();
    let mut lows = Vec::new();
    let mut ups = Vec::new();
    for (j, class) in classes.iter().enumerate() {
        let l = m.column_value(j, x)?;
        let neg = super::system::realisable_scale(hf, &hf.neg(&hf.one()), &l);
        match class {
            ColClass::Plus => lows.push(bound_of(hf, &neg, true)),
            ColClass::Minus => ups.push(bound_of(hf, &l, false)),
            ColClass::Both => {
                lows.push(bound_of(hf, &neg, true));
                ups.push(bound_of(hf, &l, false));
            }
            ColClass::Zero => {}
        }
    }
    let lo = tightest(hf, lows, true);
    let up = tightest(hf, ups, false);
    between(hf, lo, up)
}

/// Rebuilds a solution of the original system from a full elimination.
pub fn back_substitute(m: &RealisableMatrix, trace: &Trace) -> Result<Vec<HElem>> {
    if trace.remainder().cols() != 0 {
        return Err(Error::Infeasible);
    }
    let mut x = Vec::with_capacity(m.rows());
    for step in trace.steps.iter().rev() {
        let c = solve_last(&step.normalized.matrix, &step.normalized.classes, &x)?;
        x.push(c);
    }
    Ok(x)
}
