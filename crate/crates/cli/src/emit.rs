//! Renderers for graphs, labels, crossing sets and path plots.

use std::fmt::Write as _;

use gallery_crystal::affine::{AffineRoot, AppendixReport, CrossingSets};
use gallery_crystal::graph::CrystalGraph;
use gallery_crystal::mv::MvLabel;
use gallery_crystal::{Gallery, LatticePoint};
use serde_json::{json, Value};

use crate::{CliError, Format};

/// Pixels per unit step in the SVG plot.
const SCALE: f64 = 40.0;
/// Plane directions of `ε_1, ε_2, ε_3`, in degrees.
const DIRECTIONS: [f64; 3] = [60.0, 180.0, 300.0];

pub fn graph(g: &CrystalGraph, format: Format) -> String {
    match format {
        Format::Json => {
            let value = json!({
                "rank": g.rank().get(),
                "vertices": g.vertices().iter().map(ToString::to_string).collect::<Vec<_>>(),
                "edges": g.edges().iter().map(|e| json!({ "from": e.from, "to": e.to, "i": e.i })).collect::<Vec<_>>(),
            });
            format!("{value}\n")
        }
        Format::Dot => {
            let mut out = String::from("digraph crystal {\n");
            for (k, v) in g.vertices().iter().enumerate() {
                let _ = writeln!(out, "  v{k} [label=\"{v}\"];");
            }
            for e in g.edges() {
                let _ = writeln!(out, "  v{} -> v{} [label=\"{}\"];", e.from, e.to, e.i);
            }
            out.push_str("}\n");
            out
        }
        _ => {
            let mut out = format!("vertices {}\n", g.len());
            for (k, v) in g.vertices().iter().enumerate() {
                let _ = writeln!(out, "{k}: {v}");
            }
            let _ = writeln!(out, "edges {}", g.edges().len());
            for e in g.edges() {
                let _ = writeln!(out, "{} -{}-> {}", e.from, e.i, e.to);
            }
            out
        }
    }
}

pub fn label_json(label: &MvLabel) -> Value {
    json!({
        "lambda": label.lambda().coords(),
        "tableau": label.tableau().to_string(),
        "mu": label.mu().counts(),
    })
}

pub fn label_text(label: &MvLabel) -> String {
    format!("lambda {} tableau {} mu {}", label.lambda(), label.tableau(), label.mu())
}

fn root_json(r: &AffineRoot) -> Value {
    json!({ "a": r.a, "b": r.b, "m": r.level })
}

pub fn crossings_json(sets: &CrossingSets) -> Value {
    Value::Array(
        sets.segments
            .iter()
            .enumerate()
            .map(|(k, s)| json!({ "segment": k, "roots": s.iter().map(root_json).collect::<Vec<_>>() }))
            .collect(),
    )
}

pub fn appendix_json(gamma: &Gallery, delta: &Gallery, report: &AppendixReport) -> Value {
    let d = &report.disjointness;
    let s = &report.stabilizer;
    json!({
        "gamma": gamma.to_string(),
        "delta": delta.to_string(),
        "holds": report.holds(),
        "disjointness": {
            "holds": d.holds,
            "inserted": d.inserted.iter().map(|set| set.iter().map(root_json).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "witness": d.witness.map(|(p, q, r)| json!({ "first": p, "second": q, "root": root_json(&r) })),
        },
        "stabilizer": {
            "holds": s.holds,
            "start": s.start.coords(),
            "witness": s.witness.map(|(p, r)| json!({ "segment": p, "root": root_json(&r) })),
        },
        "truncation": {
            "holds": report.truncation.holds,
            "witness": report.truncation.witness,
        },
    })
}

pub fn appendix_text(gamma: &Gallery, delta: &Gallery, report: &AppendixReport) -> String {
    let mut out = format!("gamma \"{gamma}\" delta \"{delta}\"\n");
    for (k, set) in report.disjointness.inserted.iter().enumerate() {
        let roots: Vec<String> = set.iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "{}", format!("inserted {k}: {}", roots.join(" ")).trim_end());
    }
    let _ = writeln!(out, "disjointness {}", report.disjointness.holds);
    if let Some((p, q, r)) = report.disjointness.witness {
        let _ = writeln!(out, "  segments {p} and {q} share {r}");
    }
    let _ = writeln!(out, "stabilizer {}", report.stabilizer.holds);
    if let Some((p, r)) = report.stabilizer.witness {
        let _ = writeln!(out, "  segment {p}: {r} lies above the block start");
    }
    let _ = writeln!(out, "truncation {}", report.truncation.holds);
    if let Some(s) = report.truncation.witness {
        let _ = writeln!(out, "  segment {s} differs");
    }
    out
}

fn project(p: &LatticePoint) -> (f64, f64) {
    let (mut x, mut y) = (0.0, 0.0);
    for (c, deg) in p.coords().iter().zip(DIRECTIONS) {
        let rad = deg.to_radians();
        x += *c as f64 * rad.cos();
        y += *c as f64 * rad.sin();
    }
    // SVG's y axis points down
    (x * SCALE, -y * SCALE)
}

/// Two decimals, without a negative zero.
fn num(v: f64) -> String {
    let r = (v * 100.0).round() / 100.0;
    format!("{:.2}", if r == 0.0 { 0.0 } else { r })
}

/// Plane plot of the path of a rank-3 gallery over the shaded dominant
/// chamber, the cone between the images of `ε_1` and `ε_1 + ε_2`.
pub fn svg_path(g: &Gallery) -> Result<String, CliError> {
    let n = g.rank().get();
    if n != 3 {
        return Err(CliError::SvgRankUnsupported(n));
    }
    let points: Vec<(f64, f64)> = g.path_vertices().iter().map(project).collect();
    let reach = points.iter().map(|&(x, y)| x.abs().max(y.abs())).fold(0.0, f64::max);
    let half = reach + 2.0 * SCALE;
    let ray = |deg: f64| {
        let rad = deg.to_radians();
        (2.0 * half * rad.cos(), -2.0 * half * rad.sin())
    };
    let (a, b) = (ray(60.0), ray(120.0));
    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\">",
        num(-half),
        num(-half),
        num(2.0 * half),
        num(2.0 * half)
    );
    let _ = writeln!(
        out,
        "  <polygon points=\"0.00,0.00 {},{} {},{}\" fill=\"#dddddd\" stroke=\"none\"/>",
        num(a.0),
        num(a.1),
        num(b.0),
        num(b.1)
    );
    let coords: Vec<String> = points.iter().map(|&(x, y)| format!("{},{}", num(x), num(y))).collect();
    let _ = writeln!(
        out,
        "  <polyline points=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>",
        coords.join(" ")
    );
    let _ = writeln!(out, "  <circle cx=\"0.00\" cy=\"0.00\" r=\"3.00\" fill=\"black\"/>");
    out.push_str("</svg>\n");
    Ok(out)
}
