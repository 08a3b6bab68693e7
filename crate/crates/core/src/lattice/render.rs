//! Dot diagrams of finite lattice sets: `r` grows to the right, `s` upward.

use std::fmt::Write;

use super::LatticeSet;
use crate::error::{Error, Result};

const MEMBER: char = '●';
const ABSENT: char = '·';
const SPACING: usize = 11;
const MARGIN: usize = 22;

fn finite_cap(q: &LatticeSet) -> Result<usize> {
    q.cap()
        .finite()
        .ok_or_else(|| Error::Precondition("cannot draw a set with an infinite cap".into()))
}

/// Text grid over `r + s <= cap`; an empty set draws the axes only.
pub fn render_ascii(q: &LatticeSet) -> Result<String> {
    let n = finite_cap(q)?;
    let w = n.to_string().len();
    let mut out = String::new();
    for s in (0..=n).rev() {
        write!(out, "{s:>w$} │").unwrap();
        if !q.is_empty() {
            for r in 0..=n - s {
                let mark = if q.contains(r, s) { MEMBER } else { ABSENT };
                write!(out, " {mark:>w$}").unwrap();
            }
        }
        out.push('\n');
    }
    writeln!(out, "{:w$} └{}", "", "─".repeat((w + 1) * (n + 1) + 1)).unwrap();
    write!(out, "{:w$}  ", "").unwrap();
    for r in 0..=n {
        write!(out, " {r:>w$}").unwrap();
    }
    out.push('\n');
    Ok(out)
}

/// SVG grid with fixed 11-unit spacing between lattice points.
pub fn render_svg(q: &LatticeSet) -> Result<String> {
    let n = finite_cap(q)?;
    let size = 2 * MARGIN + SPACING * n;
    let x = |r: usize| MARGIN + SPACING * r;
    let y = |s: usize| size - MARGIN - SPACING * s;
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
    )
    .unwrap();
    let (x0, y0) = (x(0), y(0));
    let end = SPACING * n + SPACING / 2;
    writeln!(
        out,
        r#"  <g stroke="black" stroke-width="0.6"><line x1="{x0}" y1="{y0}" x2="{}" y2="{y0}"/><line x1="{x0}" y1="{y0}" x2="{x0}" y2="{}"/></g>"#,
        x0 + end,
        y0 - end
    )
    .unwrap();
    writeln!(out, r#"  <g font-family="sans-serif" font-size="7" text-anchor="middle">"#).unwrap();
    for i in 0..=n {
        writeln!(out, r#"    <text x="{}" y="{}">{i}</text>"#, x(i), y0 + 12).unwrap();
        writeln!(out, r#"    <text x="{}" y="{}">{i}</text>"#, x0 - 10, y(i) + 2).unwrap();
    }
    writeln!(out, "  </g>").unwrap();
    if !q.is_empty() {
        for s in 0..=n {
            for r in 0..=n - s {
                let (cx, cy) = (x(r), y(s));
                if q.contains(r, s) {
                    writeln!(out, r#"  <circle cx="{cx}" cy="{cy}" r="3" fill="black"/>"#).unwrap();
                } else {
                    writeln!(out, r##"  <circle cx="{cx}" cy="{cy}" r="1" fill="#999"/>"##).unwrap();
                }
            }
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}
