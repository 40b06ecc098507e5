use std::fs;
use std::path::Path;

use serde_json::{json, Value};

use hyperconvex::algebra::{HElem, Hyperfield, TableHyperfield};
use hyperconvex::convex::{hull_finite, member_conv_stringent_with, FiniteSpace, HPoint, MembershipResult, Mode};
use hyperconvex::fm::{back_substitute, eliminate_all, eliminate_k, farkas_with, feasible_strict, FarkasCertificate, RealisableMatrix};
use hyperconvex::form::AffineForm;
use hyperconvex::halfspace::{closed_hs_separate_sign, enumerate_open_hs_containing, Region};
use hyperconvex::hemispace::kakutani_separate;
use hyperconvex::oracle::{self, effective_seed, SuiteReport};
use hyperconvex::parse::{fmt_point, fmt_system, parse_elem, parse_form, parse_instance, parse_point, parse_points, parse_system};
use hyperconvex::svg::plot_grid;
use hyperconvex::util::{with_jobs, Exec};
use hyperconvex::{Error, Result};

use crate::{Command, Format, InstanceArg, Query, SuiteName};

pub struct Output {
    pub stdout: String,
    pub code: u8,
}

fn ok(v: Value) -> Result<Output> {
    Ok(Output { stdout: pretty(&v), code: 0 })
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value");
    s.push('\n');
    s
}

/// The instance named by `--hyperfield`, or by the tag of the first literal.
fn instance(arg: &InstanceArg, literals: &[&str]) -> Result<Hyperfield> {
    if let Some(spec) = &arg.hyperfield {
        return parse_instance(spec);
    }
    let tag = literals
        .iter()
        .find_map(|l| {
            let l = l.trim();
            let i = l.find(':')?;
            let head = &l[..i];
            (!head.is_empty() && !head.contains(['(', '@'])).then_some(head)
        })
        .ok_or_else(|| Error::Parse("give --hyperfield or tag a literal, e.g. \"S:(+,-)\"".into()))?;
    match tag {
        "TR" => parse_instance("TR@Q"),
        "T" => parse_instance("T@Q"),
        t => parse_instance(t),
    }
}

fn elems(hf: &Hyperfield, v: &[HElem]) -> Vec<String> {
    v.iter().map(|x| hf.fmt_elem(x)).collect()
}

fn points_json<'a>(hf: &Hyperfield, pts: impl IntoIterator<Item = &'a HPoint>) -> Vec<String> {
    pts.into_iter().map(|p| fmt_point(hf, p)).collect()
}

fn dim_of(points: &[HPoint], fallback: usize) -> Result<usize> {
    let d = points.first().map_or(fallback, Vec::len);
    match points.iter().find(|p| p.len() != d) {
        Some(p) => Err(Error::Dimension { expected: d, got: p.len() }),
        None => Ok(d),
    }
}

fn form_json(hf: &Hyperfield, f: &AffineForm) -> Value {
    json!({ "form": f.display(hf), "constant": hf.fmt_elem(&f.constant), "coeffs": elems(hf, &f.coeffs) })
}

fn certificate_json(hf: &Hyperfield, c: &FarkasCertificate) -> Value {
    match c {
        FarkasCertificate::Kernel(l) => json!({ "kind": "kernel", "vector": elems(hf, l) }),
        FarkasCertificate::Separator(a) => json!({ "kind": "separator", "vector": elems(hf, a) }),
        FarkasCertificate::UndecidedNonGeneric => json!({ "kind": "undecided_non_generic" }),
    }
}

fn parse_certificate(hf: &Hyperfield, text: &str) -> Result<FarkasCertificate> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(format!("certificate: {e}")))?;
    let vector = || -> Result<Vec<HElem>> {
        v["vector"]
            .as_array()
            .ok_or_else(|| Error::Parse("certificate has no vector".into()))?
            .iter()
            .map(|x| parse_elem(hf, x.as_str().ok_or_else(|| Error::Parse("vector entries are strings".into()))?))
            .collect()
    };
    match v["kind"].as_str() {
        Some("kernel") => Ok(FarkasCertificate::Kernel(vector()?)),
        Some("separator") => Ok(FarkasCertificate::Separator(vector()?)),
        Some("undecided_non_generic") => Ok(FarkasCertificate::UndecidedNonGeneric),
        _ => Err(Error::Parse("certificate kind must be kernel, separator or undecided_non_generic".into())),
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn load_system(path: &Path) -> Result<RealisableMatrix> {
    parse_system(&read(path)?, path.parent())
}

pub fn run(cmd: &Command) -> Result<Output> {
    match cmd {
        Command::Hull { instance: i, points, conic, format } => {
            let hf = instance(i, &[points])?;
            let pts = parse_points(&hf, points)?;
            let mode = if *conic { Mode::Conic } else { Mode::Convex };
            let h = hull_finite(&hf, &pts, mode)?;
            match format {
                Format::Json => ok(json!({
                    "instance": hf.to_string(),
                    "mode": if *conic { "conic" } else { "convex" },
                    "size": h.points.len(),
                    "points": points_json(&hf, &h.points),
                })),
                Format::Literal => Ok(Output { stdout: points_json(&hf, &h.points).join(";") + "\n", code: 0 }),
            }
        }
        Command::Member { instance: i, points, query, try_row_orders } => {
            let hf = instance(i, &[points, query])?;
            let pts = parse_points(&hf, points)?;
            let q = parse_point(&hf, query)?;
            if hf.is_finite() {
                let h = hull_finite(&hf, &pts, Mode::Convex)?;
                let status = if h.points.contains(&q) { "member" } else { "not_member" };
                return ok(json!({ "status": status }));
            }
            match member_conv_stringent_with(&hf, &pts, &q, *try_row_orders)? {
                MembershipResult::Member { lambda } => ok(json!({ "status": "member", "lambda": elems(&hf, &lambda) })),
                MembershipResult::Separated { form } => ok(json!({ "status": "separated", "separator": form_json(&hf, &form) })),
                MembershipResult::Undecided => ok(json!({ "status": "undecided" })),
            }
        }
        Command::Separate { instance: i, points, query, closed } => {
            let hf = instance(i, &[points, query])?;
            let pts = parse_points(&hf, points)?;
            let q = parse_point(&hf, query)?;
            let found = if hf.is_finite() {
                if hull_finite(&hf, &pts, Mode::Convex)?.points.contains(&q) {
                    return ok(json!({ "status": "member" }));
                }
                if *closed {
                    closed_hs_separate_sign(&hf, &pts, &q)?
                } else {
                    let mut found = None;
                    for f in enumerate_open_hs_containing(&hf, &pts, q.len())? {
                        if !f.in_open_hs(&hf, &q)? {
                            found = Some(f);
                            break;
                        }
                    }
                    found
                }
            } else {
                match member_conv_stringent_with(&hf, &pts, &q, false)? {
                    MembershipResult::Member { .. } => return ok(json!({ "status": "member" })),
                    MembershipResult::Separated { form } => Some(form),
                    MembershipResult::Undecided => return ok(json!({ "status": "undecided" })),
                }
            };
            let region = if *closed { "closed" } else { "open" };
            match found {
                Some(f) => ok(json!({ "status": "separated", "region": region, "separator": form_json(&hf, &f) })),
                None => ok(json!({ "status": "no_separator", "region": region })),
            }
        }
        Command::Halfspace { instance: i, form, point, query } => {
            let hf = instance(i, &[point, form])?;
            let p = parse_point(&hf, point)?;
            let f = parse_form(&hf, form, Some(p.len()))?;
            let region = match query {
                Query::Open => Region::Open,
                Query::Closed => Region::Closed,
                Query::Variety => Region::Variety,
            };
            ok(json!({
                "form": f.display(&hf),
                "point": fmt_point(&hf, &p),
                "value": hf.fmt_set(&f.eval(&hf, &p)?),
                "contains": region.contains(&hf, &f, &p)?,
            }))
        }
        Command::Kakutani { instance: i, a, b } => {
            let hf = instance(i, &[a, b])?;
            let pa = parse_points(&hf, a)?;
            let pb = parse_points(&hf, b)?;
            let d = dim_of(&pa, dim_of(&pb, 1)?)?;
            let h = kakutani_separate(&hf, d, &pa, &pb)?;
            ok(json!({ "size": h.points.len(), "hemispace": points_json(&hf, &h.points) }))
        }
        Command::Fm { system, eliminate, feasible, farkas, verify, try_row_orders } => {
            let m = load_system(system)?;
            let hf = m.hyperfield().clone();
            if let Some(k) = eliminate {
                let steps = eliminate_k(&m, *k)?;
                let reduced = steps.last().map_or(&m, |s| &s.reduced);
                return ok(json!({
                    "eliminated": k,
                    "generic": steps.iter().all(|s| s.generic()),
                    "system": fmt_system(reduced),
                }));
            }
            if *feasible {
                if !feasible_strict(&m)? {
                    return ok(json!({ "feasible": false }));
                }
                let x = back_substitute(&m, &eliminate_all(&m)?)?;
                return ok(json!({ "feasible": true, "solution": elems(&hf, &x), "verified": m.solves(&x)? }));
            }
            if let Some(cert) = verify {
                let c = parse_certificate(&hf, &read(cert)?)?;
                if !c.verify(&m)? {
                    return Err(Error::InvalidWitness(format!("{} does not certify the system", cert.display())));
                }
                return ok(json!({ "verified": true, "kind": certificate_json(&hf, &c)["kind"] }));
            }
            if *farkas {
                return ok(certificate_json(&hf, &farkas_with(&m, *try_row_orders)?));
            }
            Err(Error::Precondition("choose one of --eliminate, --feasible, --farkas, --verify".into()))
        }
        Command::CheckAxioms { hyperfield } => {
            let table = match hyperfield.as_str() {
                "S" => TableHyperfield::sign(),
                "K" => TableHyperfield::krasner(),
                "H5" => TableHyperfield::h5(),
                s => match s.strip_prefix("table:") {
                    Some(p) => TableHyperfield::load(Path::new(p))?,
                    None => return Err(Error::Unsupported(format!("{s} has no finite table"))),
                },
            };
            let report = table.check_axioms();
            let v = json!({
                "elements": table.names(),
                "passed": report.passed(),
                "stringent": table.is_stringent(),
                "violations": report.violations,
            });
            Ok(Output { stdout: pretty(&v), code: if report.passed() { 0 } else { 2 } })
        }
        Command::Suite { name, d, hyperfield, seed, jobs, trials, max_size } => {
            let hf = parse_instance(hyperfield)?;
            let seed = effective_seed(*seed);
            let exec = if *jobs == 1 { Exec::Sequential } else { Exec::Parallel };
            let report = with_jobs(*jobs, || run_suite(*name, &hf, *d, seed, exec, *trials, *max_size))?;
            let mut v = serde_json::to_value(&report).expect("report serializes");
            if report.suite == "farkas" || report.suite == "separation" || report.suite == "fm-soundness" {
                v["seed"] = json!(seed);
                v["trials"] = json!(trials);
            } else {
                v["d"] = json!(d);
            }
            Ok(Output { stdout: pretty(&v), code: if report.passed() { 0 } else { 2 } })
        }
        Command::Plot { instance: i, sets, hulls, out } => {
            let literals: Vec<&str> = sets.iter().filter_map(|s| s.split_once('=').map(|(_, p)| p)).collect();
            let hf = instance(i, &literals)?;
            let mut named = Vec::new();
            for s in sets {
                let (name, pts) = s.split_once('=').ok_or_else(|| Error::Parse(format!("--set {s:?} must be NAME=POINTS")))?;
                let pts = parse_points(&hf, pts)?;
                if *hulls {
                    let h = hull_finite(&hf, &pts, Mode::Convex)?;
                    named.push((format!("conv({name})"), h.points.into_iter().collect()));
                }
                named.push((name.to_string(), pts));
            }
            let svg = plot_grid(&hf, &named)?;
            match out {
                Some(p) => {
                    fs::write(p, &svg).map_err(|e| Error::Parse(format!("{}: {e}", p.display())))?;
                    ok(json!({ "written": p.display().to_string(), "bytes": svg.len() }))
                }
                None => Ok(Output { stdout: svg, code: 0 }),
            }
        }
    }
}

fn run_suite(
    name: SuiteName,
    hf: &Hyperfield,
    d: usize,
    seed: u64,
    exec: Exec,
    trials: usize,
    max_size: Option<usize>,
) -> Result<SuiteReport> {
    let space = || FiniteSpace::new(hf, d);
    Ok(match name {
        SuiteName::Radon => oracle::run_radon(&space()?, exec),
        SuiteName::Helly => oracle::run_helly(&space()?, exec),
        SuiteName::Caratheodory => oracle::run_caratheodory(&space()?, max_size, exec),
        SuiteName::Pasch => oracle::run_pasch(&space()?, exec),
        SuiteName::Kakutani => oracle::run_kakutani(&space()?, exec),
        SuiteName::Farkas => oracle::farkas_dichotomy(hf, trials, seed, exec),
        SuiteName::Separation => oracle::cross_check_separation(hf, trials, seed, exec),
        SuiteName::FmSoundness => oracle::fm_sampling_soundness(hf, trials, seed, exec),
    })
}
