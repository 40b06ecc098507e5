//! Literal syntax for instances, elements, points, forms and systems.
//!
//! ```text
//! instance  = "S" | "K" | "Q" | "H5" | "table:" path
//!           | ("T" | "TR" | "S") "@" group | ("Qx" | "Sx") group
//! group     = "Z" | "Q" | "Q^" digits
//! elem      = sign-elem | rational | trop-elem | strop-elem | qpair | name
//! sign-elem = "+" | "-" | "0" | "1" | "-1" | "+1"
//! trop-elem = "-inf" | gval
//! strop-elem= "0" | ("+" | "-") ["1"] "@" gval
//! qpair     = "0" | "(" rational "," gval ")"
//! gval      = rational | "[" rational { "," rational } "]"
//! point     = [tag ":"] "(" elem { "," elem } ")"
//! points    = point { ";" point }
//! form      = [tag ":"] term { " + " term }
//! term      = elem "@X" digits | elem
//! ```

use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::algebra::{Base, GroupKind, GroupVal, HElem, Hyperfield, Sgn, TableHyperfield, Unit};
use crate::convex::HPoint;
use crate::error::{Error, Result};
use crate::fm::{RealisableMatrix, RealisableSet};
use crate::form::AffineForm;

fn perr(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn parse_group_kind(s: &str) -> Result<GroupKind> {
    match s {
        "Z" => Ok(GroupKind::Integer),
        "Q" | "R" => Ok(GroupKind::Rational),
        _ => {
            let n = s
                .strip_prefix("Q^")
                .and_then(|k| k.parse::<usize>().ok())
                .filter(|&k| k >= 1)
                .ok_or_else(|| perr(format!("unknown group {s:?}")))?;
            Ok(GroupKind::Lex(n))
        }
    }
}

/// Parses an instance spec; `table:` paths are resolved against `base_dir`.
pub fn parse_instance_in(spec: &str, base_dir: Option<&Path>) -> Result<Hyperfield> {
    let spec = spec.trim();
    if let Some(path) = spec.strip_prefix("table:") {
        let mut p = Path::new(path).to_path_buf();
        if let (Some(dir), true) = (base_dir, p.is_relative()) {
            p = dir.join(p);
        }
        let t = TableHyperfield::load(&p)?;
        let report = t.check_axioms();
        if !report.passed() {
            return Err(Error::Table(format!("axioms fail: {}", report.to_string().trim())));
        }
        return Ok(Hyperfield::table(t));
    }
    match spec {
        "S" => return Ok(Hyperfield::Sign),
        "K" => return Ok(Hyperfield::Krasner),
        "Q" => return Ok(Hyperfield::Rational),
        "H5" => return Ok(Hyperfield::h5()),
        _ => {}
    }
    if let Some((head, g)) = spec.split_once('@') {
        let group = parse_group_kind(g)?;
        return match head {
            "T" => Ok(Hyperfield::tropical(group)),
            "TR" | "S" => Ok(Hyperfield::signed_tropical(group)),
            _ => Err(perr(format!("unknown instance {spec:?}"))),
        };
    }
    if let Some(g) = spec.strip_prefix("Qx") {
        return Ok(Hyperfield::field_semidirect(parse_group_kind(g)?));
    }
    if let Some(g) = spec.strip_prefix("Sx") {
        return Ok(Hyperfield::signed_tropical(parse_group_kind(g)?));
    }
    Err(perr(format!("unknown instance {spec:?}")))
}

pub fn parse_instance(spec: &str) -> Result<Hyperfield> {
    parse_instance_in(spec, None)
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || perr(format!("bad rational {s:?}"));
    let s = s.strip_prefix('+').unwrap_or(s);
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

fn parse_gval(kind: &GroupKind, s: &str) -> Result<GroupVal> {
    let s = s.trim();
    let g = if let Some(inner) = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
        GroupVal::Lex(inner.split(',').map(parse_rational).collect::<Result<_>>()?)
    } else {
        let q = parse_rational(s)?;
        match kind {
            GroupKind::Integer => {
                if !q.is_integer() {
                    return Err(perr(format!("{s} is not an integer group value")));
                }
                GroupVal::Int(q.to_integer())
            }
            GroupKind::Rational => GroupVal::Rat(q),
            GroupKind::Lex(n) => {
                let mut v = vec![BigRational::zero(); *n];
                v[0] = q;
                GroupVal::Lex(v)
            }
        }
    };
    if !kind.accepts(&g) {
        return Err(perr(format!("{s} is not a value of the group {}", kind.name())));
    }
    Ok(g)
}

/// Splits on `sep` outside of brackets.
fn split_top(s: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push(&s[start..i]);
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

pub fn parse_elem(hf: &Hyperfield, s: &str) -> Result<HElem> {
    let s = s.trim();
    let bad = || perr(format!("{s:?} is not an element of {hf}"));
    let e = match hf {
        Hyperfield::Sign => match s {
            "+" | "1" | "+1" => HElem::pos(),
            "-" | "-1" => HElem::neg_one(),
            "0" => HElem::Zero,
            _ => return Err(bad()),
        },
        Hyperfield::Krasner => match s {
            "1" => HElem::One,
            "0" => HElem::Zero,
            _ => return Err(bad()),
        },
        Hyperfield::Rational => HElem::from_rational(parse_rational(s)?),
        Hyperfield::Table(t) => HElem::Idx(t.index_of(s).ok_or_else(bad)?),
        Hyperfield::Semidirect { base, group } => {
            if s == "-inf" || (s == "0" && *base != Base::Krasner) {
                return Ok(HElem::Zero);
            }
            match base {
                Base::Krasner => HElem::Pair(Unit::One, parse_gval(group, s)?),
                Base::Sign => {
                    let (c, g) = s.split_once('@').ok_or_else(bad)?;
                    let sg = match c.trim() {
                        "+" | "+1" | "1" => Sgn::Pos,
                        "-" | "-1" => Sgn::Neg,
                        _ => return Err(bad()),
                    };
                    HElem::spair(sg, parse_gval(group, g)?)
                }
                Base::Field => {
                    let inner = s.strip_prefix('(').and_then(|r| r.strip_suffix(')')).ok_or_else(bad)?;
                    let parts = split_top(inner, ',');
                    if parts.len() != 2 {
                        return Err(bad());
                    }
                    HElem::qpair(parse_rational(parts[0])?, parse_gval(group, parts[1])?)
                }
            }
        }
    };
    hf.validate(&e)?;
    Ok(e)
}

/// Strips an optional `tag:` prefix.
fn strip_tag(s: &str) -> &str {
    let s = s.trim();
    match s.find(':') {
        Some(i) if !s[..i].contains('(') && !s[..i].contains('@') => s[i + 1..].trim(),
        _ => s,
    }
}

pub fn parse_point(hf: &Hyperfield, s: &str) -> Result<HPoint> {
    let s = strip_tag(s);
    let inner = s.strip_prefix('(').and_then(|r| r.strip_suffix(')')).ok_or_else(|| perr(format!("point {s:?} must be parenthesised")))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    split_top(inner, ',').into_iter().map(|e| parse_elem(hf, e)).collect()
}

pub fn parse_points(hf: &Hyperfield, s: &str) -> Result<Vec<HPoint>> {
    let s = strip_tag(s);
    if s.is_empty() {
        return Ok(Vec::new());
    }
    split_top(s, ';').into_iter().map(|p| parse_point(hf, p)).collect()
}

pub fn fmt_point(hf: &Hyperfield, p: &[HElem]) -> String {
    format!("({})", p.iter().map(|x| hf.fmt_elem(x)).collect::<Vec<_>>().join(","))
}

/// Parses a form; `dim` pads the coefficient list (defaults to the largest
/// variable index used).
pub fn parse_form(hf: &Hyperfield, s: &str, dim: Option<usize>) -> Result<AffineForm> {
    let s = strip_tag(s);
    let mut constant = None;
    let mut coeffs: Vec<Option<HElem>> = Vec::new();
    for term in s.split(" + ") {
        let term = term.trim();
        let var = term.rfind("@X").and_then(|i| term[i + 2..].parse::<usize>().ok().map(|k| (i, k)));
        match var {
            Some((i, k)) if k >= 1 => {
                if coeffs.len() < k {
                    coeffs.resize(k, None);
                }
                if coeffs[k - 1].is_some() {
                    return Err(perr(format!("X{k} appears twice")));
                }
                coeffs[k - 1] = Some(parse_elem(hf, &term[..i])?);
            }
            Some(_) => return Err(perr("variables are numbered from X1")),
            None => {
                if constant.is_some() {
                    return Err(perr("two constant terms"));
                }
                constant = Some(parse_elem(hf, term)?);
            }
        }
    }
    let d = dim.unwrap_or(coeffs.len());
    if coeffs.len() > d {
        return Err(Error::Dimension { expected: d, got: coeffs.len() });
    }
    coeffs.resize(d, None);
    Ok(AffineForm {
        constant: constant.unwrap_or_else(|| hf.zero()),
        coeffs: coeffs.into_iter().map(|c| c.unwrap_or_else(|| hf.zero())).collect(),
    })
}

/// System file: a line `instance: <spec>`, then one inequality per line,
/// each a whitespace-separated list of `singleton:<elem>` or
/// `balanced:<elem>` entries (one per variable). `#` starts a comment.
pub fn parse_system(text: &str, base_dir: Option<&Path>) -> Result<RealisableMatrix> {
    let mut hf = None;
    let mut columns: Vec<Vec<RealisableSet>> = Vec::new();
    for raw in text.lines() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(spec) = line.strip_prefix("instance:") {
            hf = Some(parse_instance_in(spec, base_dir)?);
            continue;
        }
        let h = hf.as_ref().ok_or_else(|| perr("system file must start with `instance: <spec>`"))?;
        let mut col = Vec::new();
        for entry in line.split_whitespace() {
            let e = if let Some(x) = entry.strip_prefix("singleton:") {
                RealisableSet::Singleton(parse_elem(h, x)?)
            } else if let Some(x) = entry.strip_prefix("balanced:") {
                RealisableSet::balanced(h, &parse_elem(h, x)?)?
            } else {
                return Err(perr(format!("entry {entry:?} must start with singleton: or balanced:")));
            };
            col.push(e);
        }
        columns.push(col);
    }
    let hf = hf.ok_or_else(|| perr("missing instance header"))?;
    RealisableMatrix::from_columns(&hf, columns)
}

pub fn fmt_system(m: &RealisableMatrix) -> String {
    let hf = m.hyperfield();
    let mut out = format!("instance: {}\n", instance_spec(hf));
    for j in 0..m.cols() {
        let entries: Vec<String> = (0..m.rows())
            .map(|i| match m.get(i, j) {
                RealisableSet::Singleton(x) => format!("singleton:{}", hf.fmt_elem(x)),
                RealisableSet::Balanced(x) => format!("balanced:{}", hf.fmt_elem(x)),
            })
            .collect();
        out.push_str(&entries.join(" "));
        out.push('\n');
    }
    out
}

/// Spec string accepted by [`parse_instance`], where one exists.
pub fn instance_spec(hf: &Hyperfield) -> String {
    match hf {
        Hyperfield::Table(_) => "table:<file>".into(),
        _ => hf.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn instances() {
        assert_eq!(parse_instance("S").unwrap(), Hyperfield::Sign);
        let tr = parse_instance("TR@Q").unwrap();
        assert_eq!(tr, Hyperfield::signed_tropical(GroupKind::Rational));
        assert!(tr.is_dense().unwrap());
        assert_eq!(parse_instance("SxQ").unwrap(), tr);
        assert_eq!(parse_instance("QxZ").unwrap(), Hyperfield::field_semidirect(GroupKind::Integer));
        assert!(parse_instance("W").is_err());
    }

    #[test]
    fn point_literals() {
        let s = Hyperfield::Sign;
        assert_eq!(parse_point(&s, "S:(+,-,0)").unwrap(), vec![HElem::pos(), HElem::neg_one(), HElem::Zero]);
        let tr = parse_instance("TR@Q").unwrap();
        let p = parse_point(&tr, "TR:(+1@3/2, -1@0)").unwrap();
        assert_eq!(p[0], HElem::spair(Sgn::Pos, GroupVal::rat(3, 2)));
        let qz = parse_instance("QxZ").unwrap();
        let p = parse_point(&qz, "QxZ:((3,1),(-2,-1))").unwrap();
        assert_eq!(p[1], HElem::qpair(BigRational::from_integer((-2).into()), GroupVal::int(-1)));
        assert_eq!(parse_points(&s, "(+,-);(-,+)").unwrap().len(), 2);
    }

    #[test]
    fn form_literals_round_trip() {
        let s = Hyperfield::Sign;
        let f = parse_form(&s, "S:1@X2 + 1", None).unwrap();
        assert_eq!(f, AffineForm::new(HElem::pos(), vec![HElem::Zero, HElem::pos()]));
        assert_eq!(parse_form(&s, &f.display(&s), Some(2)).unwrap(), f);
        let qz = parse_instance("QxZ").unwrap();
        let g = parse_form(&qz, "(1,0)@X1 + (1,0)@X2 + (-1/2,0)", None).unwrap();
        assert_eq!(parse_form(&qz, &g.display(&qz), None).unwrap(), g);
    }
}
