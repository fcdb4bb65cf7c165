//! Standalone SVG rendering of a [`MindMap`].
//!
//! Output is a pure function of the map: fixed number formatting, nodes and
//! edges in creation order. Each edge is drawn so its rendered length equals
//! the node's `path_length`: a straight segment when the endpoints are that far
//! apart, otherwise a circular arc (clamping against the canvas border can only
//! bring endpoints closer), or an out-and-back spur when the endpoints
//! coincide.

use std::fmt::Write;

use crate::generator::MindMap;
use crate::layout::Point;
use crate::mixer::Provenance;

const STYLE: &str = "\
.frame{fill:#f6f1e4;stroke:#6b5b45;stroke-width:2}\
.edge{fill:none;stroke:#8a7a62;stroke-width:1.5}\
.edge.semantic-similarity{stroke:#3b6e8f}\
.edge.linguistic-feature{stroke:#2f8f5b}\
.edge.dadaism{stroke:#b0413e;stroke-dasharray:6 3}\
.edge.author-style{stroke:#7a4fa0}\
.glyph{fill:#d9cfb8;stroke:#4a3f30;stroke-width:1.2}\
.glyph.line{fill:none}\
.label{font-family:serif;font-size:14px;fill:#2b241b;text-anchor:middle}\
.seed .label{font-size:18px;font-weight:bold}";

/// Fixed three-decimal formatting without negative zero.
fn num(x: f64) -> String {
    let s = format!("{x:.3}");
    if s == "-0.000" {
        "0.000".to_string()
    } else {
        s
    }
}

fn escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for c in text.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            c => out.push(c),
        }
    }
    out
}

/// Solves `sin(h) / h = ratio` for the half central angle `h` in `(0, π)`.
fn arc_half_angle(ratio: f64) -> f64 {
    let (mut lo, mut hi) = (1e-12, std::f64::consts::PI - 1e-12);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid.sin() / mid > ratio {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// SVG path data from `from` to `to` whose length is `length`.
pub fn edge_path(from: Point, to: Point, length: f64) -> String {
    let chord = from.distance(to);
    let start = format!("M {} {}", num(from.x), num(from.y));
    if chord + 1e-6 >= length {
        return format!("{start} L {} {}", num(to.x), num(to.y));
    }
    if chord < 1e-6 {
        let half = length / 2.0;
        return format!("{start} l {} 0 l {} 0", num(half), num(-half));
    }
    let h = arc_half_angle(chord / length);
    let radius = chord / (2.0 * h.sin());
    let large = u8::from(2.0 * h > std::f64::consts::PI);
    format!(
        "{start} A {} {} 0 {large} 1 {} {}",
        num(radius),
        num(radius),
        num(to.x),
        num(to.y)
    )
}

fn glyph(id: &str, s: f64) -> String {
    let h = s / 2.0;
    match id {
        "pagoda" => format!(
            r#"<path class="glyph" d="M {} {} L {} {} L {} {} L 0 {} L {} {} Z"/>"#,
            num(-h),
            num(h / 2.0),
            num(h),
            num(h / 2.0),
            num(h),
            num(-h / 4.0),
            num(-h),
            num(-h),
            num(-h / 4.0)
        ),
        "triangle-ridge" => format!(
            r#"<path class="glyph" d="M {} {} L {} {} L {} {} Z M {} {} L {} {} L {} {} Z"/>"#,
            num(-h),
            num(h / 2.0),
            num(-h / 3.0),
            num(-h),
            num(h / 4.0),
            num(h / 2.0),
            num(-h / 4.0),
            num(h / 2.0),
            num(h / 2.5),
            num(-h / 2.0),
            num(h),
            num(h / 2.0)
        ),
        "wave" => format!(
            r#"<path class="glyph line" d="M {} 0 Q {} {} 0 0 T {} 0"/>"#,
            num(-h),
            num(-h / 2.0),
            num(-h / 2.0),
            num(h)
        ),
        "grass-tuft" => format!(
            r#"<path class="glyph line" d="M {} {} L {} {} M 0 {} L 0 {} M {} {} L {} {}"/>"#,
            num(-h / 2.0),
            num(h / 2.0),
            num(-h),
            num(-h / 2.0),
            num(h / 2.0),
            num(-h),
            num(h / 2.0),
            num(h / 2.0),
            num(h),
            num(-h / 2.0)
        ),
        "dashed-path" => format!(
            r#"<path class="glyph line" stroke-dasharray="4 3" d="M {} {} L {} {}"/>"#,
            num(-h),
            num(h / 3.0),
            num(h),
            num(-h / 3.0)
        ),
        "ellipse" => format!(
            r#"<ellipse class="glyph" cx="0" cy="0" rx="{}" ry="{}"/>"#,
            num(h),
            num(h / 2.0)
        ),
        _ => format!(
            r#"<circle class="glyph" cx="0" cy="0" r="{}"/>"#,
            num(h / 2.0)
        ),
    }
}

pub fn render_svg(map: &MindMap) -> String {
    let (w, h) = (map.canvas.width, map.canvas.height);
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{0}" height="{1}" viewBox="0 0 {0} {1}">"#,
        num(w),
        num(h)
    );
    let _ = writeln!(out, "<style>{STYLE}</style>");
    let _ = writeln!(
        out,
        r#"<rect class="frame" x="0" y="0" width="{}" height="{}"/>"#,
        num(w),
        num(h)
    );

    out.push_str("<g class=\"edges\">\n");
    for (id, node) in map.nodes.iter().enumerate() {
        let Some(parent) = node.parent else { continue };
        let class = node.provenance.map(Provenance::slug).unwrap_or_default();
        let _ = writeln!(
            out,
            r#"<path class="edge {class}" data-from="{parent}" data-to="{id}" data-length="{}" d="{}"/>"#,
            num(node.path_length),
            edge_path(map.nodes[parent].position, node.position, node.path_length)
        );
    }
    out.push_str("</g>\n<g class=\"nodes\">\n");
    for (id, node) in map.nodes.iter().enumerate() {
        let role = if node.parent.is_none() {
            "node seed"
        } else {
            "node"
        };
        let _ = writeln!(
            out,
            r#"<g class="{role}" id="n{id}" data-domain="{}" transform="translate({} {})">{}<text class="label" x="0" y="{}">{}</text></g>"#,
            node.domain,
            num(node.position.x),
            num(node.position.y),
            glyph(&node.element.id, node.element.size),
            num(node.element.size / 2.0 + 16.0),
            escape(&node.word)
        );
    }
    out.push_str("</g>\n</svg>\n");
    out
}
