//! Exhaustive checks of Radon, Helly, Carathéodory, Pasch and Kakutani over
//! finite spaces.

use std::time::Instant;

use crate::convex::{bits, FiniteSpace, HPoint, Mask, Mode};
use crate::error::{Error, Result};
use crate::hemispace::{is_hemispace_mask, kakutani_mask, pasch_mask};
use crate::parse::fmt_point;
use crate::util::{multisets, Exec};

use super::SuiteReport;

fn show(space: &FiniteSpace, idx: &[usize]) -> String {
    idx.iter().map(|&i| fmt_point(space.hyperfield(), space.point(i))).collect::<Vec<_>>().join(" ")
}

fn show_mask(space: &FiniteSpace, m: Mask) -> String {
    format!("{{{}}}", show(space, &bits(m).collect::<Vec<_>>()))
}

/// Union of every combination of at most `bound` points of `t` (with
/// repetition), over every admissible coefficient tuple.
pub fn oracle_hull(space: &FiniteSpace, t: &[HPoint], mode: Mode, bound: usize) -> Result<Mask> {
    let limit = space.elements().len() * space.dim().max(1);
    if bound > limit {
        return Err(Error::Precondition(format!("multiset bound {bound} exceeds |H|·d = {limit}")));
    }
    let idx: Vec<usize> =
        t.iter().map(|p| space.index(p).ok_or_else(|| Error::Precondition(format!("{p:?} is not in the space")))).collect::<Result<_>>()?;
    let mut m = 0;
    for k in 1..=bound {
        for ms in multisets(idx.len(), k) {
            let pts: Vec<usize> = ms.iter().map(|&j| idx[j]).collect();
            m |= space.combination_mask(&pts, mode)?;
        }
    }
    Ok(m)
}

fn multinomial(ms: &[usize]) -> u64 {
    let fact = |n: usize| (1..=n as u64).product::<u64>();
    let mut denom = 1;
    let mut run = 1;
    for w in ms.windows(2) {
        if w[0] == w[1] {
            run += 1;
        } else {
            denom *= fact(run);
            run = 1;
        }
    }
    denom *= fact(run);
    fact(ms.len()) / denom
}

/// Every `(d+2)`-tuple of points has a Radon partition. Tuples are judged
/// by their underlying multiset; `cases` counts ordered tuples.
pub fn run_radon(space: &FiniteSpace, exec: Exec) -> SuiteReport {
    let start = Instant::now();
    let k = space.dim() + 2;
    let all = multisets(space.len(), k);
    let verdicts = exec.map(&all, |ms| {
        let ok = (1..(1u32 << k) - 1).any(|sub| {
            let (mut a, mut b) = (0, 0);
            for (j, &i) in ms.iter().enumerate() {
                if sub >> j & 1 == 1 {
                    a |= 1 << i;
                } else {
                    b |= 1 << i;
                }
            }
            space.hull(a, Mode::Convex) & space.hull(b, Mode::Convex) != 0
        });
        (multinomial(ms), (!ok).then(|| format!("no Radon partition for {}", show(space, ms))))
    });
    let mut r = SuiteReport::new("radon", space.hyperfield());
    for (n, f) in verdicts {
        r.cases += n;
        r.failures.extend(f);
    }
    r.elapsed = start.elapsed();
    r
}

/// Nonempty convex subsets of the space.
pub fn convex_sets(space: &FiniteSpace) -> Vec<Mask> {
    space.closed_sets(Mode::Convex).into_iter().filter(|&m| m != 0).collect()
}

/// Helly on families of `d + 2` distinct nonempty convex sets: if every
/// `d + 1` of them meet, all of them do. Larger families reduce to this
/// size by the usual induction. Implemented for `d ≤ 2`; `cases` counts
/// families, including those skipped early because two members are
/// disjoint.
pub fn run_helly(space: &FiniteSpace, exec: Exec) -> SuiteReport {
    let start = Instant::now();
    let mut r = SuiteReport::new("helly", space.hyperfield());
    let sets = convex_sets(space);
    let n = sets.len();
    let d = space.dim();
    if d > 2 {
        r.failures.push(format!("helly suite supports d <= 2, got {d}"));
        return r;
    }
    let firsts: Vec<usize> = (0..n).collect();
    let per = exec.map(&firsts, |&i| {
        let mut fails = Vec::new();
        let a = sets[i];
        match d {
            0 => {}
            1 => {
                for j in i + 1..n {
                    if a & sets[j] == 0 {
                        continue;
                    }
                    for k in j + 1..n {
                        let c = sets[k];
                        if a & c != 0 && sets[j] & c != 0 && a & sets[j] & c == 0 {
                            fails.push(format!("{} {} {}", show_mask(space, a), show_mask(space, sets[j]), show_mask(space, c)));
                        }
                    }
                }
            }
            _ => {
                for j in i + 1..n {
                    let ab = a & sets[j];
                    if ab == 0 {
                        continue;
                    }
                    for k in j + 1..n {
                        let abc = ab & sets[k];
                        if abc == 0 {
                            continue;
                        }
                        for l in k + 1..n {
                            let e = sets[l];
                            if abc & e == 0 && ab & e != 0 && a & sets[k] & e != 0 && sets[j] & sets[k] & e != 0 {
                                fails.push(format!(
                                    "{} {} {} {}",
                                    show_mask(space, a),
                                    show_mask(space, sets[j]),
                                    show_mask(space, sets[k]),
                                    show_mask(space, e)
                                ));
                            }
                        }
                    }
                }
            }
        }
        fails
    });
    r.cases = binomial(n, d + 2);
    r.failures = per.into_iter().flatten().collect();
    r.elapsed = start.elapsed();
    r
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k as u64).fold(1, |acc, i| acc * (n as u64 - i) / (i + 1))
}

/// Every point of `conv(T)` is a convex combination of at most `d + 1`
/// points of `T` (repetition allowed), for every `T` of at most
/// `max_size` points (all subsets when `None`).
pub fn run_caratheodory(space: &FiniteSpace, max_size: Option<usize>, exec: Exec) -> SuiteReport {
    let start = Instant::now();
    let n = space.len();
    let k = space.dim() + 1;
    let cap = max_size.unwrap_or(n);
    let mut subsets: Vec<Vec<usize>> = Vec::new();
    let mut cur = Vec::new();
    fn go(n: usize, cap: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if cur.len() == cap {
            return;
        }
        for i in start..n {
            cur.push(i);
            go(n, cap, i + 1, cur, out);
            cur.pop();
        }
    }
    go(n, cap, 0, &mut cur, &mut subsets);
    // Combination masks of every multiset of at most k points, computed once.
    let mut small = std::collections::HashMap::new();
    for size in 1..=k {
        for ms in multisets(n, size) {
            let m = space.combination_mask(&ms, Mode::Convex).expect("finite space");
            small.insert(ms, m);
        }
    }
    let verdicts = exec.map(&subsets, |t| {
        let tm = t.iter().fold(0, |m, &i| m | 1 << i);
        let hull = space.hull(tm, Mode::Convex);
        let mut covered = 0;
        for size in 1..=k {
            for ms in multisets(t.len(), size) {
                let pts: Vec<usize> = ms.iter().map(|&j| t[j]).collect();
                covered |= small[&pts];
            }
        }
        let missing = hull & !covered;
        (missing != 0).then(|| format!("T = {}: {} needs more than {k} points", show(space, t), show_mask(space, missing)))
    });
    let mut r = SuiteReport::new("caratheodory", space.hyperfield());
    r.cases = subsets.len() as u64;
    r.failures = verdicts.into_iter().flatten().collect();
    r.elapsed = start.elapsed();
    r
}

/// Pasch for every `r, q1, q2` and every `p1 ∈ conv(r, q1)`,
/// `p2 ∈ conv(r, q2)`.
pub fn run_pasch(space: &FiniteSpace, exec: Exec) -> SuiteReport {
    let start = Instant::now();
    let n = space.len();
    let triples: Vec<(usize, usize, usize)> = (0..n).flat_map(|r| (0..n).flat_map(move |a| (0..n).map(move |b| (r, a, b)))).collect();
    let per = exec.map(&triples, |&(r, q1, q2)| {
        let s1 = space.hull(1 << r | 1 << q1, Mode::Convex);
        let s2 = space.hull(1 << r | 1 << q2, Mode::Convex);
        let mut cases = 0u64;
        let mut fails = Vec::new();
        for p1 in bits(s1) {
            for p2 in bits(s2) {
                cases += 1;
                if !pasch_mask(space, r, q1, q2, p1, p2).unwrap_or(false) {
                    fails.push(format!("r q1 q2 p1 p2 = {}", show(space, &[r, q1, q2, p1, p2])));
                }
            }
        }
        (cases, fails)
    });
    let mut rep = SuiteReport::new("pasch", space.hyperfield());
    for (c, f) in per {
        rep.cases += c;
        rep.failures.extend(f);
    }
    rep.elapsed = start.elapsed();
    rep
}

/// Every ordered pair of disjoint convex sets (the empty set included) is
/// separated by a hemispace, and the returned set is checked to be one.
pub fn run_kakutani(space: &FiniteSpace, exec: Exec) -> SuiteReport {
    let start = Instant::now();
    let sets = space.closed_sets(Mode::Convex);
    let per = exec.map(&sets, |&a| {
        let mut cases = 0u64;
        let mut fails = Vec::new();
        for &b in &sets {
            if a & b != 0 {
                continue;
            }
            cases += 1;
            match kakutani_mask(space, a, b) {
                Ok(x) if x & a == a && x & b == 0 && is_hemispace_mask(space, x) => {}
                Ok(x) => fails.push(format!(
                    "A = {} B = {}: returned {} is not a separating hemispace",
                    show_mask(space, a),
                    show_mask(space, b),
                    show_mask(space, x)
                )),
                Err(e) => fails.push(format!("A = {} B = {}: {e}", show_mask(space, a), show_mask(space, b))),
            }
        }
        (cases, fails)
    });
    let mut r = SuiteReport::new("kakutani", space.hyperfield());
    for (c, f) in per {
        r.cases += c;
        r.failures.extend(f);
    }
    r.elapsed = start.elapsed();
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Hyperfield;

    #[test]
    fn multinomial_counts() {
        assert_eq!(multinomial(&[0, 0, 1]), 3);
        assert_eq!(multinomial(&[0, 1, 2, 3]), 24);
        let total: u64 = multisets(9, 4).iter().map(|m| multinomial(m)).sum();
        assert_eq!(total, 6561);
    }

    #[test]
    fn radon_on_the_line() {
        let sp = FiniteSpace::new(&Hyperfield::Sign, 1).unwrap();
        let r = run_radon(&sp, Exec::Sequential);
        assert_eq!(r.cases, 27);
        assert!(r.passed(), "{:?}", r.failures);
    }
}
