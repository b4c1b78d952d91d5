//! Deterministic SVG drawings of lattice embeddings with at most three
//! axes. The third axis is drawn axonometrically: a unit step in z shifts
//! the image point by 0.4 of a unit step in both x and y. All arithmetic
//! is integer (scale 40, depth shift 16), so output bytes depend only on
//! the input.

use latdim::{Graph, LatticeEmbedding};

const SCALE: i64 = 40;
const DEPTH: i64 = 16; // 0.4 * SCALE
const MARGIN: i64 = 30;
const RADIUS: i64 = 6;

fn axis(emb: &LatticeEmbedding, v: usize, i: usize) -> i64 {
    if i < emb.dim() {
        emb.coord(v)[i]
    } else {
        0
    }
}

fn axis_max(emb: &LatticeEmbedding, i: usize) -> i64 {
    if i < emb.dim() {
        emb.ranges()[i].1
    } else {
        0
    }
}

/// Renders `emb` (dimension 0 to 3, normalized so every axis starts at 0)
/// over the edges of `g`.
pub fn render(g: &Graph, emb: &LatticeEmbedding) -> String {
    assert!(emb.dim() <= 3, "svg rendering is limited to three axes");
    let (xmax, ymax, zmax) = (axis_max(emb, 0), axis_max(emb, 1), axis_max(emb, 2));
    let width = 2 * MARGIN + SCALE * xmax + DEPTH * zmax;
    let height = 2 * MARGIN + SCALE * ymax + DEPTH * zmax;
    let place = |v: usize| -> (i64, i64) {
        let (x, y, z) = (axis(emb, v, 0), axis(emb, v, 1), axis(emb, v, 2));
        let px = MARGIN + SCALE * x + DEPTH * z;
        // svg y grows downward; flip so the y axis points up in the image
        let py = MARGIN + SCALE * (ymax - y) + DEPTH * (zmax - z);
        (px, py)
    };

    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" \
         viewBox=\"0 0 {width} {height}\">\n"
    ));
    for &(u, v) in g.edges() {
        let (x1, y1) = place(u);
        let (x2, y2) = place(v);
        out.push_str(&format!(
            "  <line x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\" \
             stroke=\"#555555\" stroke-width=\"2\"/>\n"
        ));
    }
    for v in 0..emb.vertex_count() {
        let (cx, cy) = place(v);
        out.push_str(&format!(
            "  <circle cx=\"{cx}\" cy=\"{cy}\" r=\"{RADIUS}\" \
             fill=\"#4a90d9\" stroke=\"#1c3d5a\" stroke-width=\"1\"/>\n"
        ));
        out.push_str(&format!(
            "  <text x=\"{}\" y=\"{}\" font-size=\"11\" \
             font-family=\"monospace\" fill=\"#111111\">{v}</text>\n",
            cx + RADIUS + 2,
            cy - RADIUS - 2,
        ));
    }
    out.push_str("</svg>\n");
    out
}
