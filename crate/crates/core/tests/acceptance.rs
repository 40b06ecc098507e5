//! The twelve acceptance criteria, one PASS/FAIL line each.
//!
//! Runtime limits are pinned below and compared against wall time of the
//! test binary (built with the workspace test profile).

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use hyperconvex::algebra::{HElem, Hyperfield, TableHyperfield};
use hyperconvex::convex::{bits, hull_finite, membership_matrix, FiniteSpace, Mode};
use hyperconvex::fm::{farkas, FarkasCertificate};
use hyperconvex::form::{all_forms, AffineForm};
use hyperconvex::halfspace::{
    enumerate_open_hs_containing, separate_mask_closed, stringent_decomposition_check, stringent_decomposition_on,
};
use hyperconvex::lift::{closed_hs_lift_witness, open_hs_lift_witness, ClosedTarget};
use hyperconvex::oracle::{
    cross_check_separation, farkas_dichotomy, fm_sampling_soundness, run_caratheodory, run_helly, run_kakutani, run_pasch, run_radon,
};
use hyperconvex::parse::{parse_form, parse_instance, parse_point, parse_points};
use hyperconvex::svg::plot_grid;
use hyperconvex::util::Exec;

const AXIOMS_LIMIT: Duration = Duration::from_secs(1);
const CLOSED_SEPARATION_LIMIT: Duration = Duration::from_secs(10);
const RADON_HELLY_CARATHEODORY_LIMIT: Duration = Duration::from_secs(60);
const PASCH_KAKUTANI_LIMIT: Duration = Duration::from_secs(60);
const FARKAS_LIMIT: Duration = Duration::from_secs(30);
const LIFT_LIMIT: Duration = Duration::from_secs(5);

const FARKAS_TRIALS: usize = 1000;
const FM_TRIALS: usize = 500;
const SEED: u64 = 20240601;
/// Generating sets tried by Carathéodory over the 25-point H5²; every subset
/// is tried over 𝕊².
const H5_CARATHEODORY_MAX_SIZE: usize = 5;

fn within(t: Instant, limit: Duration) {
    let e = t.elapsed();
    assert!(e <= limit, "took {e:?}, limit {limit:?}");
}

fn sign() -> Hyperfield {
    Hyperfield::Sign
}

/// Exact sign of `Σ cᵢ` over ℚ.
fn q_sign(terms: &[BigRational]) -> i32 {
    let s: BigRational = terms.iter().cloned().fold(BigRational::zero(), |a, b| a + b);
    if s.is_zero() {
        0
    } else if s.is_positive() {
        1
    } else {
        -1
    }
}

fn as_q(x: &HElem) -> BigRational {
    x.as_rational().unwrap_or_else(BigRational::zero)
}

fn sign_elem(x: &BigRational) -> HElem {
    if x.is_zero() {
        HElem::Zero
    } else if x.is_positive() {
        HElem::pos()
    } else {
        HElem::neg_one()
    }
}

/// Value of a rational form at a rational point, computed directly.
fn eval_q(f: &AffineForm, p: &[HElem]) -> i32 {
    let mut terms = vec![as_q(&f.constant)];
    terms.extend(f.coeffs.iter().zip(p).map(|(c, x)| as_q(c) * as_q(x)));
    q_sign(&terms)
}

fn c1_axioms() {
    let t = Instant::now();
    for (name, table) in [("S", TableHyperfield::sign()), ("K", TableHyperfield::krasner()), ("H5", TableHyperfield::h5())] {
        let r = table.check_axioms();
        assert!(r.passed(), "{name}: {r}");
    }
    within(t, AXIOMS_LIMIT);
}

fn c2_conv_not_pf() {
    let s = sign();
    let h = hull_finite(&s, &parse_points(&s, "(+,-);(-,+)").unwrap(), Mode::Convex).unwrap();
    assert_eq!(h.points.len(), 9);
}

fn c3_no_open_separation() {
    let s = sign();
    let t = parse_points(&s, "(-,+);(0,0);(0,+);(+,0);(+,+)").unwrap();
    let forms = enumerate_open_hs_containing(&s, &t, 2).unwrap();
    let phi = parse_form(&s, "1@X2 + 1", Some(2)).unwrap();
    assert_eq!(forms, vec![phi.canonical(&s).unwrap()]);
    assert!(phi.in_open_hs(&s, &parse_point(&s, "(-,0)").unwrap()).unwrap());
}

fn c4_closed_separation() {
    let t = Instant::now();
    let s = sign();
    let space = FiniteSpace::new(&s, 2).unwrap();
    let mut pairs = 0;
    for set in space.closed_sets(Mode::Convex) {
        for p in bits(space.full() & !set) {
            let f = separate_mask_closed(&space, set, p).unwrap().unwrap_or_else(|| panic!("no closed separator for {set:#b} / {p}"));
            for x in bits(set) {
                assert!(f.in_closed_hs(&s, space.point(x)).unwrap());
            }
            assert!(!f.in_closed_hs(&s, space.point(p)).unwrap());
            pairs += 1;
        }
    }
    assert!(pairs > 0);
    within(t, CLOSED_SEPARATION_LIMIT);
}

fn c5_radon_helly_caratheodory() {
    let t = Instant::now();
    for hf in [sign(), Hyperfield::h5()] {
        let space = FiniteSpace::new(&hf, 2).unwrap();
        let radon = run_radon(&space, Exec::Parallel);
        if hf == sign() {
            assert_eq!(radon.cases, 6561);
        }
        let cap = (space.len() > 9).then_some(H5_CARATHEODORY_MAX_SIZE);
        for r in [radon, run_helly(&space, Exec::Parallel), run_caratheodory(&space, cap, Exec::Parallel)] {
            assert!(r.cases > 0 && r.passed(), "{} over {hf}: {:?}", r.suite, r.failures);
        }
    }
    within(t, RADON_HELLY_CARATHEODORY_LIMIT);
}

fn c6_pasch_kakutani() {
    let t = Instant::now();
    let space = FiniteSpace::new(&sign(), 2).unwrap();
    for r in [run_pasch(&space, Exec::Parallel), run_kakutani(&space, Exec::Parallel)] {
        assert!(r.cases > 0 && r.passed(), "{}: {:?}", r.suite, r.failures);
    }
    within(t, PASCH_KAKUTANI_LIMIT);
}

fn c7_decomposition() {
    let h5 = Hyperfield::h5();
    let phi = parse_form(&h5, "1@X1 + 1@X2", Some(2)).unwrap();
    let d = stringent_decomposition_check(&h5, &phi).unwrap();
    assert!(!d.holds);
    // The scan reports the first failing point in table order; the
    // published witness (t, -1) must fail as well.
    let first = d.witness.expect("witness");
    assert!(!stringent_decomposition_on(&h5, &phi, &[first]).unwrap().holds);
    let published = parse_point(&h5, "(t,-1)").unwrap();
    let at_published = stringent_decomposition_on(&h5, &phi, std::slice::from_ref(&published)).unwrap();
    assert_eq!(at_published.witness, Some(published));
    let s = sign();
    let forms = all_forms(&s, 2).unwrap();
    assert_eq!(forms.len(), 27);
    for f in &forms {
        assert!(stringent_decomposition_check(&s, f).unwrap().holds, "{}", f.display(&s));
    }
}

fn c8_farkas() {
    let t = Instant::now();
    let tr = parse_instance("TR@Q").unwrap();
    let r = farkas_dichotomy(&tr, FARKAS_TRIALS, SEED, Exec::Parallel);
    assert_eq!(r.cases, FARKAS_TRIALS as u64);
    assert_eq!(r.skipped, 0, "undecided certificates over a signed tropical instance");
    assert!(r.passed(), "{:?}", r.failures);
    within(t, FARKAS_LIMIT);
}

fn c9_rxz_separator() {
    let h = parse_instance("QxZ").unwrap();
    let p = parse_point(&h, "((-1,0),(1,0))").unwrap();
    let minus_p = parse_point(&h, "((1,0),(-1,0))").unwrap();
    let q = parse_point(&h, "((1,0),(1,0))").unwrap();
    let t = vec![p.clone(), minus_p.clone()];
    let m = membership_matrix(&h, &t, &q).unwrap();
    let FarkasCertificate::Separator(alpha) = farkas(&m).unwrap() else { panic!("expected a separator") };
    let (c, coeffs) = alpha.split_last().unwrap();
    let found = AffineForm::new(c.clone(), coeffs.to_vec());
    assert!(found.in_open_hs(&h, &p).unwrap() && found.in_open_hs(&h, &minus_p).unwrap());
    assert!(!found.in_open_hs(&h, &q).unwrap());
    // Its negation is X₁ ⊞ X₂ ⊞ (−k, 0) with k > 0, up to a positive factor.
    let neg = found.negate(&h);
    let unit = neg.coeffs[0].clone();
    assert_eq!(neg.coeffs[1], unit);
    let scaled = neg.scale(&h, &h.inv(&unit).unwrap());
    assert_eq!(scaled.coeffs, vec![h.one(), h.one()]);
    let k = match &scaled.constant {
        HElem::Pair(hyperconvex::algebra::Unit::Rat(k), g) => {
            assert!(g.is_zero());
            -k.clone()
        }
        other => panic!("constant {other:?}"),
    };
    assert!(k.is_positive());
    for phi in [scaled, parse_form(&h, "(1,0)@X1 + (1,0)@X2 + (-1/2,0)", Some(2)).unwrap()] {
        assert!(h.set_subset_positive(&phi.eval(&h, &q).unwrap()).unwrap());
        assert!(!phi.in_open_hs(&h, &p).unwrap());
        assert!(!phi.in_open_hs(&h, &minus_p).unwrap());
    }
}

fn c10_fm_soundness() {
    for spec in ["QxQ", "TR@Q"] {
        let hf = parse_instance(spec).unwrap();
        let r = fm_sampling_soundness(&hf, FM_TRIALS, SEED, Exec::Parallel);
        assert_eq!(r.cases, FM_TRIALS as u64);
        assert!(r.passed(), "{spec}: {:?}", r.failures);
    }
}

fn c11_lifts() {
    let t = Instant::now();
    let s = sign();
    let space = FiniteSpace::new(&s, 2).unwrap();
    let forms = all_forms(&s, 2).unwrap();
    let (mut open, mut closed) = (0, 0);
    for f in &forms {
        for p in space.points() {
            let back_to_sign = |w: &hyperconvex::lift::LiftWitness| {
                assert_eq!(sign_elem(&as_q(&w.form.constant)), f.constant);
                for (c, cbar) in w.form.coeffs.iter().zip(&f.coeffs) {
                    assert_eq!(&sign_elem(&as_q(c)), cbar);
                }
                for (x, xbar) in w.point.iter().zip(p) {
                    assert_eq!(&sign_elem(&as_q(x)), xbar);
                }
            };
            if !f.in_open_hs(&s, p).unwrap() {
                let w = open_hs_lift_witness(f, p, None).unwrap();
                back_to_sign(&w);
                assert!(eval_q(&w.form, &w.point) <= 0, "{} at {p:?}", f.display(&s));
                open += 1;
            }
            if f.in_closed_hs(&s, p).unwrap() {
                for target in [ClosedTarget::Positive, ClosedTarget::Zero] {
                    let w = closed_hs_lift_witness(f, p, target).unwrap();
                    back_to_sign(&w);
                    assert!(eval_q(&w.form, &w.point) >= 0, "{} at {p:?}", f.display(&s));
                }
                closed += 1;
            }
        }
    }
    assert!(open > 0 && closed > 0);
    within(t, LIFT_LIMIT);
}

fn c12_determinism() {
    let tr = parse_instance("TR@Q").unwrap();
    let qq = parse_instance("QxQ").unwrap();
    let s2 = FiniteSpace::new(&sign(), 2).unwrap();
    let h5 = FiniteSpace::new(&Hyperfield::h5(), 2).unwrap();
    type Run<'a> = Box<dyn Fn(Exec) -> String + 'a>;
    let runs: Vec<Run> = vec![
        Box::new(|e| run_radon(&s2, e).to_json()),
        Box::new(|e| run_helly(&h5, e).to_json()),
        Box::new(|e| run_caratheodory(&s2, None, e).to_json()),
        Box::new(|e| run_pasch(&s2, e).to_json()),
        Box::new(|e| run_kakutani(&h5, e).to_json()),
        Box::new(|e| farkas_dichotomy(&tr, 200, SEED, e).to_json()),
        Box::new(|e| fm_sampling_soundness(&qq, 100, SEED, e).to_json()),
        Box::new(|e| cross_check_separation(&tr, 100, SEED, e).to_json()),
    ];
    for run in &runs {
        let first = run(Exec::Parallel);
        assert_eq!(first, run(Exec::Parallel));
        assert_eq!(first, run(Exec::Sequential));
    }
    let s = sign();
    let hull = hull_finite(&s, &parse_points(&s, "(+,-);(0,+)").unwrap(), Mode::Convex).unwrap();
    let sets = vec![
        ("T".to_string(), parse_points(&s, "(-,+);(0,0);(0,+);(+,0);(+,+)").unwrap()),
        ("q".to_string(), parse_points(&s, "(-,0)").unwrap()),
        ("hull".to_string(), hull.points.into_iter().collect()),
    ];
    assert_eq!(plot_grid(&s, &sets).unwrap(), plot_grid(&s, &sets).unwrap());
}

fn main() {
    let criteria: [(&str, fn()); 12] = [
        ("1 axiom suites for S, K, H5", c1_axioms),
        ("2 hull of (+,-),(-,+) is all of S^2", c2_conv_not_pf),
        ("3 only X2 + 1 contains T; it contains (-,0)", c3_no_open_separation),
        ("4 closed separation over S^2", c4_closed_separation),
        ("5 Radon, Helly, Caratheodory over S^2 and H5^2", c5_radon_helly_caratheodory),
        ("6 Pasch and Kakutani over S^2", c6_pasch_kakutani),
        ("7 decomposition fails over H5, holds over S", c7_decomposition),
        ("8 Farkas dichotomy over TR@Q", c8_farkas),
        ("9 RxZ separator", c9_rxz_separator),
        ("10 FM sampling soundness", c10_fm_soundness),
        ("11 lift witnesses over S^2", c11_lifts),
        ("12 determinism of reports and SVG", c12_determinism),
    ];
    let mut failed = Vec::new();
    for (name, check) in criteria {
        let t = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check));
        let verdict = if outcome.is_ok() { "PASS" } else { "FAIL" };
        println!("{verdict} criterion {name} ({:.2?})", t.elapsed());
        if outcome.is_err() {
            failed.push(name);
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
