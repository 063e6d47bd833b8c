//! SVG emitter for fan traces on the plane where the coordinates sum to one.
//! A ray projects to the point of its barycentric normalization; every
//! two-dimensional cone projects to a segment. Output bytes are
//! deterministic: exact rational projection, fixed rounding, fixed element
//! order.

use adetoric::lattice::{Fan, LatticeVector, Rat};

const WIDTH: i64 = 640;
const HEIGHT: i64 = 620;
// triangle corners for the first, second and third coordinate directions
const CORNERS: [[i64; 2]; 3] = [[60, 540], [580, 540], [320, 60]];

fn project(v: &LatticeVector) -> [i64; 2] {
    let total: i128 = v.0.iter().map(|&c| c as i128).sum();
    let mut coords = [Rat::from_integer(0); 2];
    for (corner, &c) in CORNERS.iter().zip(&v.0) {
        let w = Rat::new(c as i128, total);
        coords[0] += w * Rat::from_integer(corner[0] as i128);
        coords[1] += w * Rat::from_integer(corner[1] as i128);
    }
    [round(coords[0]), round(coords[1])]
}

// floor(x + 1/2) rounds halves up; exact, hence deterministic
fn round(r: Rat) -> i64 {
    (r + Rat::new(1, 2)).floor().to_integer() as i64
}

/// Renders the fan trace. Rays named in `highlight` (the inserted weight
/// vectors) are drawn in a distinct style from the dual-fan rays.
pub fn render(fan: &Fan, highlight: &[LatticeVector], title: &str) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" viewBox=\"0 0 {WIDTH} {HEIGHT}\">\n"
    ));
    out.push_str(&format!(
        "  <title>{title}</title>\n  <rect width=\"{WIDTH}\" height=\"{HEIGHT}\" fill=\"white\"/>\n"
    ));
    // segments first, one per two-dimensional cone
    out.push_str("  <g stroke=\"#555555\" stroke-width=\"1\">\n");
    for wall in fan.walls() {
        let a = project(&wall.rays()[0]);
        let b = project(&wall.rays()[1]);
        out.push_str(&format!(
            "    <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>\n",
            a[0], a[1], b[0], b[1]
        ));
    }
    out.push_str("  </g>\n");
    // labeled points, one per ray, in the fan's deterministic ray order
    for ray in fan.rays() {
        let p = project(ray);
        let (class, fill) = if highlight.contains(ray) {
            ("inserted", "#c0392b")
        } else {
            ("gamma", "#1a1a66")
        };
        out.push_str(&format!(
            "  <circle class=\"{class}\" cx=\"{}\" cy=\"{}\" r=\"4\" fill=\"{fill}\"/>\n",
            p[0], p[1]
        ));
        out.push_str(&format!(
            "  <text x=\"{}\" y=\"{}\" font-size=\"11\" font-family=\"monospace\">{}</text>\n",
            p[0] + 6,
            p[1] - 6,
            ray
        ));
    }
    out.push_str("</svg>\n");
    out
}
