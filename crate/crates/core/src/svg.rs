//! SVG schematics of `H²` for finite `H`.
//!
//! Cells form an `|H| × |H|` grid: `x₁` grows to the right, `x₂` upwards,
//! each axis listing negative elements, zero, then positive elements (table
//! order when the instance has no ordering). A cell belonging to several
//! sets is split into vertical stripes, one per set, in legend order.

use std::fmt::Write;

use crate::algebra::{HElem, Hyperfield, Sgn};
use crate::convex::HPoint;
use crate::error::{Error, Result};

const CELL: usize = 60;
const MARGIN: usize = 40;
const LEGEND_ROW: usize = 20;
const PALETTE: [&str; 8] = ["#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948", "#b07aa1", "#9c755f"];

/// Axis order of the elements.
pub fn axis_order(hf: &Hyperfield) -> Result<Vec<HElem>> {
    let els = hf.elements().ok_or_else(|| Error::Unsupported(format!("{hf} is infinite")))?;
    if !hf.is_ordered() {
        return Ok(els);
    }
    let mut keyed = Vec::with_capacity(els.len());
    for (i, a) in els.into_iter().enumerate() {
        let rank = match hf.sign_of(&a)? {
            Some(Sgn::Neg) => 0,
            None => 1,
            Some(Sgn::Pos) => 2,
        };
        keyed.push((rank, i, a));
    }
    keyed.sort_by_key(|(r, i, _)| (*r, *i));
    Ok(keyed.into_iter().map(|(_, _, a)| a).collect())
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

/// Renders named point sets of `H²`. Output depends only on the input.
pub fn plot_grid(hf: &Hyperfield, sets: &[(String, Vec<HPoint>)]) -> Result<String> {
    let axis = axis_order(hf)?;
    for (_, pts) in sets {
        for p in pts {
            if p.len() != 2 {
                return Err(Error::Dimension { expected: 2, got: p.len() });
            }
            for x in p {
                hf.validate(x)?;
            }
        }
    }
    let n = axis.len();
    let grid = n * CELL;
    let width = grid + 2 * MARGIN;
    let height = grid + 2 * MARGIN + sets.len() * LEGEND_ROW;
    let pos = |a: &HElem| axis.iter().position(|b| b == a).expect("validated element");

    let mut out = String::new();
    writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#).unwrap();
    writeln!(out, r#"<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>"#).unwrap();
    for col in 0..n {
        for row in 0..n {
            let x = MARGIN + col * CELL;
            let y = MARGIN + (n - 1 - row) * CELL;
            let members: Vec<usize> = sets
                .iter()
                .enumerate()
                .filter(|(_, (_, pts))| pts.iter().any(|p| pos(&p[0]) == col && pos(&p[1]) == row))
                .map(|(i, _)| i)
                .collect();
            for (k, &i) in members.iter().enumerate() {
                let x0 = x + k * CELL / members.len();
                let x1 = x + (k + 1) * CELL / members.len();
                let color = PALETTE[i % PALETTE.len()];
                writeln!(out, r#"<rect x="{x0}" y="{y}" width="{}" height="{CELL}" fill="{color}" fill-opacity="0.8"/>"#, x1 - x0).unwrap();
            }
            writeln!(out, r#"<rect x="{x}" y="{y}" width="{CELL}" height="{CELL}" fill="none" stroke="black"/>"#).unwrap();
        }
    }
    for (i, a) in axis.iter().enumerate() {
        let label = escape(&hf.fmt_elem(a));
        let cx = MARGIN + i * CELL + CELL / 2;
        let cy = MARGIN + (n - 1 - i) * CELL + CELL / 2;
        writeln!(out, r#"<text x="{cx}" y="{}" font-size="14" text-anchor="middle">{label}</text>"#, MARGIN + grid + 20).unwrap();
        writeln!(out, r#"<text x="{}" y="{}" font-size="14" text-anchor="end">{label}</text>"#, MARGIN - 8, cy + 5).unwrap();
    }
    for (i, (name, _)) in sets.iter().enumerate() {
        let y = MARGIN + grid + 30 + i * LEGEND_ROW;
        let color = PALETTE[i % PALETTE.len()];
        writeln!(out, r#"<rect x="{MARGIN}" y="{y}" width="12" height="12" fill="{color}"/>"#).unwrap();
        writeln!(out, r#"<text x="{}" y="{}" font-size="13">{}</text>"#, MARGIN + 18, y + 11, escape(name)).unwrap();
    }
    out.push_str("</svg>\n");
    Ok(out)
}
