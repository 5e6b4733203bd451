//! Deterministic SVG rendering of the weight lattice.
//!
//! The picture shows the lattice in the standard hexagonal embedding, shades
//! one polygon per block of weights carrying two nonzero cohomology groups,
//! draws the fundamental line `r + s = -1`, and annotates nonzero values of
//! `S^i` at the points `(pr, ps)` and of `T^i` at `(p-2+pr, p-2+ps)`.

use crate::cohomology::DimEngine;
use crate::identities::{check_degree, st_values};
use crate::weights::Weight;
use crate::{check_prime, Error, Int};

/// Default bound on `|r|, |s|` for the annotated `S`/`T` arguments.
pub const DEFAULT_BOX: Int = 5;

/// The rendered lattice extends to coordinates of size `p * (box + 1)`; this
/// caps that extent so a single SVG stays a reasonable size.
const MAX_LATTICE_EXTENT: Int = 96;

/// Euclidean length of one lattice step.
const UNIT: f64 = 20.0;

const SQRT3_2: f64 = 0.866_025_403_784_438_6;

/// Map a lattice weight to Euclidean picture coordinates (y grows downward).
fn euclid(w: Weight) -> (f64, f64) {
    let x = (w.r as f64 + w.s as f64 / 2.0) * UNIT;
    let y = -(w.s as f64) * SQRT3_2 * UNIT;
    (x, y)
}

fn fmt(v: f64) -> String {
    let v = if v.abs() < 5e-4 { 0.0 } else { v };
    format!("{v:.3}")
}

fn polygon(points: &[Weight], fill: &str, out: &mut String) {
    let coords: Vec<String> = points
        .iter()
        .map(|&w| {
            let (x, y) = euclid(w);
            format!("{},{}", fmt(x), fmt(y))
        })
        .collect();
    out.push_str(&format!(
        "  <polygon points=\"{}\" fill=\"{fill}\" fill-opacity=\"0.75\" stroke=\"none\"/>\n",
        coords.join(" ")
    ));
}

/// One shaded block: the weights `(a,b) + p^n(t, -t-1)` with
/// `0 <= a, b <= p^n - 2`, or its transpose mirror.
struct Block {
    n: u32,
    base: Weight,
    side: Int,
    mirrored: bool,
}

impl Block {
    fn corners(&self) -> [Weight; 4] {
        let b = self.base;
        let d = self.side;
        let raw = [
            Weight::new(b.r, b.s),
            Weight::new(b.r + d, b.s),
            Weight::new(b.r + d, b.s + d),
            Weight::new(b.r, b.s + d),
        ];
        if self.mirrored {
            raw.map(Weight::swap)
        } else {
            raw
        }
    }
}

/// Enumerate the shaded blocks whose anchor lies within the lattice extent.
fn blocks(p: Int, extent: Int) -> Vec<Block> {
    let mut out = Vec::new();
    let mut pn: Int = p;
    let mut n = 1u32;
    while pn <= extent {
        for t in 1..p {
            if pn * t > extent {
                break;
            }
            let base = Weight::new(pn * t, -pn * (t + 1));
            for mirrored in [false, true] {
                out.push(Block { n, base, side: pn - 2, mirrored });
            }
        }
        pn *= p;
        n += 1;
    }
    out
}

fn block_fill(n: u32) -> &'static str {
    match n {
        1 => "#b5e0b5",
        2 => "#b5cde0",
        _ => "#e8d3a8",
    }
}

/// Render the lattice picture for the prime `p` as an SVG 1.1 document.
///
/// `box_bound` limits the annotated arguments to `|r|, |s| <= box_bound`
/// (defaulting to [`DEFAULT_BOX`]); `degree` selects which `S^i`/`T^i`
/// values are annotated. For `p = 2` the `S`/`T` annotations are omitted
/// and only the lattice, the shaded blocks, and the fundamental line are
/// drawn.
pub fn render_figure(p: Int, box_bound: Option<Int>, degree: usize) -> Result<String, Error> {
    check_prime(p)?;
    check_degree(degree)?;
    let b = box_bound.unwrap_or(DEFAULT_BOX);
    let cap = MAX_LATTICE_EXTENT / p - 1;
    if !(0..=cap).contains(&b) {
        return Err(Error::BoxTooLarge(b, cap));
    }
    let extent = p * (b + 1);

    let half_w = 1.5 * extent as f64 * UNIT;
    let half_h = extent as f64 * SQRT3_2 * UNIT;
    let margin = 2.0 * UNIT;
    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{} {} {} {}\">\n",
        fmt(-half_w - margin),
        fmt(-half_h - margin),
        fmt(2.0 * (half_w + margin)),
        fmt(2.0 * (half_h + margin)),
    ));

    svg.push_str("  <g fill=\"#c4c4c4\">\n");
    for s in -extent..=extent {
        for r in -extent..=extent {
            let (x, y) = euclid(Weight::new(r, s));
            svg.push_str(&format!(
                "    <circle cx=\"{}\" cy=\"{}\" r=\"1.2\"/>\n",
                fmt(x),
                fmt(y)
            ));
        }
    }
    svg.push_str("  </g>\n");

    for block in blocks(p, extent) {
        if block.side == 0 {
            // A single-point block (p = 2, n = 1): mark it with a small
            // diamond around the point so the region stays visible.
            let (x, y) = euclid(block.corners()[0]);
            let r = 0.3 * UNIT;
            let pts = [(x, y - r), (x + r, y), (x, y + r), (x - r, y)]
                .map(|(px, py)| format!("{},{}", fmt(px), fmt(py)));
            svg.push_str(&format!(
                "  <polygon points=\"{}\" fill=\"{}\" fill-opacity=\"0.75\" stroke=\"none\"/>\n",
                pts.join(" "),
                block_fill(block.n)
            ));
        } else {
            polygon(&block.corners(), block_fill(block.n), &mut svg);
        }
    }

    let (x0, y0) = euclid(Weight::new(-extent - 1, extent));
    let (x1, y1) = euclid(Weight::new(extent, -extent - 1));
    svg.push_str(&format!(
        "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#cc3333\" stroke-width=\"1.5\"/>\n",
        fmt(x0),
        fmt(y0),
        fmt(x1),
        fmt(y1),
    ));

    if p >= 3 {
        let engine = DimEngine::new(p)?;
        let mut labels: Vec<(Weight, &'static str, Int)> = Vec::new();
        for r in -b..=b {
            for s in -b..=b {
                let rec = st_values(&engine, degree, Weight::new(r, s))?;
                if rec.s != 0 {
                    labels.push((Weight::new(p * r, p * s), "S", rec.s));
                }
                if rec.t != 0 {
                    labels.push((Weight::new(p - 2 + p * r, p - 2 + p * s), "T", rec.t));
                }
            }
        }
        labels.sort_by_key(|&(w, kind, _)| (w.r, w.s, kind));
        svg.push_str("  <g font-family=\"monospace\" font-size=\"8\" fill=\"#111111\" text-anchor=\"middle\">\n");
        for (anchor, kind, value) in labels {
            let (x, y) = euclid(anchor);
            svg.push_str(&format!(
                "    <text x=\"{}\" y=\"{}\" dy=\"0.35em\" data-weight=\"{},{}\" data-kind=\"{kind}\">{value}</text>\n",
                fmt(x),
                fmt(y),
                anchor.r,
                anchor.s,
            ));
        }
        svg.push_str("  </g>\n");
    }

    svg.push_str("</svg>\n");
    Ok(svg)
}
