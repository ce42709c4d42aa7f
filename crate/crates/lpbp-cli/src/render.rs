//! SVG rendering of boundaries and paths on the lattice grid.
//!
//! Mathematical orientation: the origin sits at the bottom left and y grows
//! upward, so every lattice y is flipped into screen coordinates. Output is a
//! pure function of the inputs, byte for byte.

use std::fmt::Write;

use lpbp::{Composition, Error, Step};

const UNIT: i64 = 40;
const MARGIN: i64 = 40;

const BOUNDARY_COLORS: [&str; 4] = ["#c22f2f", "#d4772b", "#b13fa8", "#7a5230"];
const PATH_COLORS: [&str; 4] = ["#2b6fd4", "#2f9c4f", "#7048c2", "#1196a0"];

/// Lay out `a`'s boundary (optionally every distinct shift of it) and the
/// given origin-anchored paths. Paths must fit inside the `n` by `m` grid.
pub fn render_svg(a: &Composition, all_shifts: bool, paths: &[Vec<Step>]) -> Result<String, Error> {
    let n = a.total();
    let m = a.part_count();

    for steps in paths {
        let rights = steps.iter().filter(|s| **s == Step::Right).count() as u64;
        let ups = steps.iter().filter(|s| **s == Step::Up).count();
        if rights > n || ups > m {
            return Err(Error::TerminusOutsideGrid {
                x: rights as i64,
                y: ups as i64,
                n,
                m,
            });
        }
    }

    let mut boundaries: Vec<Composition> = Vec::new();
    if all_shifts {
        for j in 0..m as i64 {
            let b = a.shift(j);
            if !boundaries.contains(&b) {
                boundaries.push(b);
            }
        }
    } else {
        boundaries.push(a.clone());
    }

    let px = |x: i64| MARGIN + x * UNIT;
    let py = |y: i64| MARGIN + (m as i64 - y) * UNIT;
    let width = 2 * MARGIN + n as i64 * UNIT;
    let height = 2 * MARGIN + m as i64 * UNIT;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">"
    );
    let _ = writeln!(svg, "<rect width=\"{width}\" height=\"{height}\" fill=\"#ffffff\"/>");

    let _ = writeln!(svg, "<g stroke=\"#d4d4d4\" stroke-width=\"1\">");
    for x in 0..=n as i64 {
        let _ = writeln!(
            svg,
            "<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\"/>",
            px(x),
            py(0),
            py(m as i64)
        );
    }
    for y in 0..=m as i64 {
        let _ = writeln!(
            svg,
            "<line x1=\"{0}\" y1=\"{2}\" x2=\"{1}\" y2=\"{2}\"/>",
            px(0),
            px(n as i64),
            py(y)
        );
    }
    let _ = writeln!(svg, "</g>");

    for (idx, b) in boundaries.iter().enumerate() {
        let mut pts = String::new();
        for y in 0..=m as i64 {
            if y > 0 {
                pts.push(' ');
            }
            let _ = write!(pts, "{},{}", px(b.boundary_x(y)? as i64), py(y));
        }
        let color = BOUNDARY_COLORS[idx % BOUNDARY_COLORS.len()];
        let _ = writeln!(
            svg,
            "<polyline class=\"boundary\" fill=\"none\" stroke=\"{color}\" stroke-width=\"3\" points=\"{pts}\"/>"
        );
    }

    for (idx, steps) in paths.iter().enumerate() {
        let mut pts = String::new();
        let (mut x, mut y) = (0i64, 0i64);
        let _ = write!(pts, "{},{}", px(x), py(y));
        for s in steps {
            let (dx, dy) = s.offset();
            x += dx;
            y += dy;
            let _ = write!(pts, " {},{}", px(x), py(y));
        }
        let color = PATH_COLORS[idx % PATH_COLORS.len()];
        let _ = writeln!(
            svg,
            "<polyline class=\"path\" fill=\"none\" stroke=\"{color}\" stroke-width=\"2\" points=\"{pts}\"/>"
        );
    }

    svg.push_str("</svg>\n");
    Ok(svg)
}
