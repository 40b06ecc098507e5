//! Seeded checks of the Farkas dichotomy, hull membership and elimination.

use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::algebra::{Base, GroupVal, HElem, HSet, Hyperfield, Sgn};
use crate::convex::membership::verify_member;
use crate::convex::{combine, member_conv_stringent, HPoint, MembershipResult, Mode};
use crate::error::Result;
use crate::fm::{
    eliminate_last_var, farkas, realisable_scale, solve_last, weak_duality_holds, FarkasCertificate, RealisableMatrix, RealisableSet,
};
use crate::parse::{fmt_point, fmt_system};
use crate::util::Exec;

use super::sampling::{random_elem, random_positive, Rng};
use super::SuiteReport;

/// A `d × n` system with random entries; over semidirect instances about one
/// entry in ten is balanced.
pub fn random_system(hf: &Hyperfield, d: usize, n: usize, rng: &mut Rng) -> Result<RealisableMatrix> {
    let mut columns = Vec::with_capacity(n);
    for _ in 0..n {
        let mut col = Vec::with_capacity(d);
        for _ in 0..d {
            let a = random_elem(hf, rng);
            let e = if hf.group().is_some() && !hf.is_zero(&a) && rng.chance(1, 10) {
                RealisableSet::balanced(hf, &a)?
            } else {
                RealisableSet::Singleton(a)
            };
            col.push(e);
        }
        columns.push(col);
    }
    RealisableMatrix::with_rows(hf, d, columns)
}

fn random_point(hf: &Hyperfield, d: usize, rng: &mut Rng) -> HPoint {
    (0..d).map(|_| random_elem(hf, rng)).collect()
}

fn random_nonneg(hf: &Hyperfield, n: usize, rng: &mut Rng) -> Result<Vec<HElem>> {
    let mut v = Vec::with_capacity(n);
    for _ in 0..n {
        v.push(if rng.chance(1, 4) { hf.zero() } else { random_positive(hf, rng)? });
    }
    Ok(v)
}

/// Refuses instances the suites are not defined for, with one failure line.
fn refuse(suite: &str, hf: &Hyperfield) -> Option<SuiteReport> {
    let why = match hf.require_dense() {
        Err(e) => e.to_string(),
        Ok(()) if hf.group().is_none() => format!("{hf} is not a semidirect instance"),
        Ok(()) => return None,
    };
    let mut r = SuiteReport::new(suite, hf);
    r.failures.push(why);
    Some(r)
}

fn per_trial_seeds(seed: u64, trials: usize) -> Vec<u64> {
    let mut rng = Rng::new(seed);
    (0..trials).map(|_| rng.next_u64()).collect()
}

enum Outcome {
    Ok,
    Skipped,
    Failed(String),
}

fn collect(r: &mut SuiteReport, outcomes: Vec<Result<Outcome>>) {
    for o in outcomes {
        r.cases += 1;
        match o {
            Ok(Outcome::Ok) => {}
            Ok(Outcome::Skipped) => r.skipped += 1,
            Ok(Outcome::Failed(s)) => r.failures.push(s),
            Err(e) => r.failures.push(format!("error: {e}")),
        }
    }
}

/// Random systems with `d, n ≤ 4`: each must produce one certificate that
/// verifies, and sampled opposite candidates must never verify alongside it.
pub fn farkas_dichotomy(hf: &Hyperfield, trials: usize, seed: u64, exec: Exec) -> SuiteReport {
    if let Some(r) = refuse("farkas", hf) {
        return r;
    }
    let start = Instant::now();
    let seeds = per_trial_seeds(seed, trials);
    let outcomes = exec.map(&seeds, |&s| -> Result<Outcome> {
        let mut rng = Rng::new(s);
        let d = rng.range(1, 4) as usize;
        let n = rng.range(1, 4) as usize;
        let m = random_system(hf, d, n, &mut rng)?;
        let cert = farkas(&m)?;
        if cert == FarkasCertificate::UndecidedNonGeneric {
            return Ok(Outcome::Skipped);
        }
        if !cert.verify(&m)? {
            return Ok(Outcome::Failed(format!("certificate {cert:?} fails for\n{}", fmt_system(&m))));
        }
        for _ in 0..16 {
            let ok = match &cert {
                FarkasCertificate::Kernel(l) => weak_duality_holds(&m, l, &random_point(hf, d, &mut rng))?,
                FarkasCertificate::Separator(a) => weak_duality_holds(&m, &random_nonneg(hf, n, &mut rng)?, a)?,
                FarkasCertificate::UndecidedNonGeneric => true,
            };
            if !ok {
                return Ok(Outcome::Failed(format!("weak duality violated for\n{}", fmt_system(&m))));
            }
        }
        Ok(Outcome::Ok)
    });
    let mut r = SuiteReport::new("farkas", hf);
    collect(&mut r, outcomes);
    r.elapsed = start.elapsed();
    r
}

/// Positive coefficients `aᵢ` with `1 ∈ ⊞ aᵢ`.
fn convex_coefficients(hf: &Hyperfield, n: usize, rng: &mut Rng) -> Vec<HElem> {
    let group = hf.group().expect("semidirect").clone();
    let top = rng.below(n as u64) as usize;
    let levels: Vec<GroupVal> =
        (0..n).map(|i| if i == top || rng.chance(1, 2) { group.zero() } else { group.from_int(-rng.range(1, 3)) }).collect();
    match hf.base() {
        Some(Base::Field) => {
            let at_top: Vec<usize> = (0..n).filter(|&i| levels[i] == group.zero()).collect();
            let weights: Vec<i64> = (0..n).map(|_| rng.range(1, 5)).collect();
            let total: i64 = at_top.iter().map(|&i| weights[i]).sum();
            (0..n)
                .map(|i| {
                    let k = if at_top.contains(&i) {
                        BigRational::new(BigInt::from(weights[i]), BigInt::from(total))
                    } else {
                        BigRational::from_integer(BigInt::from(weights[i]))
                    };
                    HElem::qpair(k, levels[i].clone())
                })
                .collect()
        }
        _ => levels.into_iter().map(|g| HElem::spair(Sgn::Pos, g)).collect(),
    }
}

/// A few concrete members of a coordinate set.
fn picks(hf: &Hyperfield, s: &HSet) -> Vec<HElem> {
    match s {
        HSet::Finite(v) => v.clone(),
        HSet::Balanced(a) => {
            let g = a.value().expect("semidirect").clone();
            let below = g.sub(&hf.group().expect("semidirect").unit_step());
            let one = hf.one();
            let unit = crate::algebra::HElem::Pair(
                match &one {
                    HElem::Pair(u, _) => u.clone(),
                    _ => unreachable!(),
                },
                below,
            );
            vec![hf.zero(), hf.neg(&unit), unit]
        }
    }
}

/// Membership against random hulls: kernel answers are re-verified as
/// combinations, separators are checked on `T`, on `q` and on sampled
/// points of random convex combinations of `T`. Undecided answers are
/// counted as skipped.
pub fn cross_check_separation(hf: &Hyperfield, trials: usize, seed: u64, exec: Exec) -> SuiteReport {
    if let Some(r) = refuse("separation", hf) {
        return r;
    }
    let start = Instant::now();
    let seeds = per_trial_seeds(seed, trials);
    let outcomes = exec.map(&seeds, |&s| -> Result<Outcome> {
        let mut rng = Rng::new(s);
        let d = 2;
        let n = rng.range(1, 4) as usize;
        let t: Vec<HPoint> = (0..n).map(|_| random_point(hf, d, &mut rng)).collect();
        let q = if rng.chance(1, 8) { t[rng.below(n as u64) as usize].clone() } else { random_point(hf, d, &mut rng) };
        let show = || format!("T = {} q = {}", t.iter().map(|p| fmt_point(hf, p)).collect::<Vec<_>>().join(";"), fmt_point(hf, &q));
        match member_conv_stringent(hf, &t, &q)? {
            MembershipResult::Undecided => Ok(Outcome::Skipped),
            MembershipResult::Member { lambda } => {
                if verify_member(hf, &t, &q, &lambda)? {
                    Ok(Outcome::Ok)
                } else {
                    Ok(Outcome::Failed(format!("bad kernel for {}", show())))
                }
            }
            MembershipResult::Separated { form } => {
                for p in &t {
                    if !form.in_open_hs(hf, p)? {
                        return Ok(Outcome::Failed(format!("separator misses T: {}", show())));
                    }
                }
                if form.in_open_hs(hf, &q)? {
                    return Ok(Outcome::Failed(format!("separator contains q: {}", show())));
                }
                for _ in 0..8 {
                    let coeffs = convex_coefficients(hf, n, &mut rng);
                    let comb = combine(hf, &t, &coeffs, Mode::Convex)?;
                    let choices: Vec<Vec<HElem>> = comb.coords.iter().map(|c| picks(hf, c)).collect();
                    for p in crate::util::tuples(&(0..3).collect::<Vec<usize>>(), d) {
                        let point: HPoint = p.iter().zip(&choices).map(|(&k, c)| c[k % c.len()].clone()).collect();
                        if !form.in_open_hs(hf, &point)? {
                            return Ok(Outcome::Failed(format!(
                                "hull point {} outside HS({}): {}",
                                fmt_point(hf, &point),
                                form.display(hf),
                                show()
                            )));
                        }
                    }
                }
                Ok(Outcome::Ok)
            }
        }
    });
    let mut r = SuiteReport::new("separation", hf);
    collect(&mut r, outcomes);
    r.elapsed = start.elapsed();
    r
}

/// A random system with a planted solution `x0`: columns that are negative
/// at `x0` are negated, columns that vanish there are redrawn.
fn planted_system(hf: &Hyperfield, d: usize, n: usize, rng: &mut Rng) -> Result<(RealisableMatrix, HPoint)> {
    let x0: HPoint =
        (0..d).map(|_| random_positive(hf, rng).map(|a| if rng.chance(1, 2) { a } else { hf.neg(&a) })).collect::<Result<_>>()?;
    let minus = hf.neg(&hf.one());
    let mut columns = Vec::with_capacity(n);
    let mut attempts = 0;
    while columns.len() < n && attempts < 64 * n {
        attempts += 1;
        let m = random_system(hf, d, 1, rng)?;
        let v = m.column_value(0, &x0)?;
        if hf.set_subset_positive(&v.to_hset())? {
            columns.push(m.column(0).to_vec());
        } else if !hf.set_contains_zero(&v.to_hset()) {
            columns.push(m.column(0).iter().map(|e| realisable_scale(hf, &minus, e)).collect());
        }
    }
    Ok((RealisableMatrix::with_rows(hf, d, columns)?, x0))
}

/// One elimination step against sampled solutions: solutions of the system
/// project to solutions of the reduced system, and solutions of the reduced
/// system extend through back-substitution.
pub fn fm_sampling_soundness(hf: &Hyperfield, trials: usize, seed: u64, exec: Exec) -> SuiteReport {
    if let Some(r) = refuse("fm-soundness", hf) {
        return r;
    }
    let start = Instant::now();
    let seeds = per_trial_seeds(seed, trials);
    let outcomes = exec.map(&seeds, |&s| -> Result<Outcome> {
        let mut rng = Rng::new(s);
        let d = rng.range(2, 3) as usize;
        let n = rng.range(2, 4) as usize;
        let (m, x0) = planted_system(hf, d, n, &mut rng)?;
        let step = eliminate_last_var(&m)?;
        let tag = if step.generic() { "" } else { " (non-generic)" };
        let mut sols = vec![x0.clone()];
        for _ in 0..32 {
            let x = random_point(hf, d, &mut rng);
            if m.solves(&x)? {
                sols.push(x);
            }
        }
        for x in &sols {
            if !step.reduced.solves(&x[..d - 1])? {
                return Ok(Outcome::Failed(format!("solution {} does not project{tag}:\n{}", fmt_point(hf, x), fmt_system(&m))));
            }
        }
        let mut reduced_sols: Vec<HPoint> = sols.iter().map(|x| x[..d - 1].to_vec()).collect();
        for _ in 0..32 {
            let y = random_point(hf, d - 1, &mut rng);
            if step.reduced.solves(&y)? {
                reduced_sols.push(y);
            }
        }
        for y in &reduced_sols {
            let lifted = solve_last(&step.normalized.matrix, &step.normalized.classes, y)
                .map(|c| {
                    let mut x = y.clone();
                    x.push(c);
                    x
                })
                .ok();
            let ok = match &lifted {
                Some(x) => m.solves(x)?,
                None => false,
            };
            if !ok {
                return Ok(Outcome::Failed(format!("reduced solution {} does not lift{tag}:\n{}", fmt_point(hf, y), fmt_system(&m))));
            }
        }
        Ok(Outcome::Ok)
    });
    let mut r = SuiteReport::new("fm-soundness", hf);
    collect(&mut r, outcomes);
    r.elapsed = start.elapsed();
    r
}
