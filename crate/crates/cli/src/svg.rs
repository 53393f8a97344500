//! Plain SVG 1.1 renderings of Dyck paths and boards. Coordinates are
//! integers so output is byte-identical everywhere.

use std::fmt::Write;

use dumont::bijections::lower_board_to_path;
use dumont::objects::{is_lower_board, BoardKind};
use dumont::{DyckPath, Permutation, Step};

const CELL: i64 = 20;
const MARGIN: i64 = 10;

fn header(out: &mut String, width: i64, height: i64) {
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
}

pub fn dyck(path: &DyckPath) -> String {
    let len = path.len() as i64;
    let h = path.height() as i64;
    let width = 2 * MARGIN + CELL * len.max(1);
    let height = 2 * MARGIN + CELL * h.max(1);
    let mut out = String::new();
    header(&mut out, width, height);
    let base = height - MARGIN;
    let _ = writeln!(
        out,
        r##"<line x1="{MARGIN}" y1="{base}" x2="{}" y2="{base}" stroke="#999999" stroke-width="1"/>"##,
        width - MARGIN
    );
    let mut points = vec![(MARGIN, base)];
    let mut level = 0i64;
    for (i, s) in path.steps().iter().enumerate() {
        level += if *s == Step::U { 1 } else { -1 };
        points.push((MARGIN + CELL * (i as i64 + 1), base - CELL * level));
    }
    let coords: Vec<String> = points.iter().map(|(x, y)| format!("{x},{y}")).collect();
    let _ = writeln!(
        out,
        r##"<polyline points="{}" fill="none" stroke="#1f4e99" stroke-width="2"/>"##,
        coords.join(" ")
    );
    for (x, y) in &points {
        let _ = writeln!(out, r##"<circle cx="{x}" cy="{y}" r="3" fill="#1f4e99"/>"##);
    }
    out.push_str("</svg>\n");
    out
}

/// The `n x n` grid with one dot per entry, cells allowed for a lower board
/// shaded, and for lower boards the northwest path drawn on top.
pub fn board(sigma: &Permutation) -> String {
    let n = sigma.len() as i64;
    let side = 2 * MARGIN + CELL * n.max(1);
    let mut out = String::new();
    header(&mut out, side, side);
    // Row r (value) counts from the bottom, column c (position) from the left.
    let cell_x = |c: i64| MARGIN + CELL * (c - 1);
    let cell_y = |r: i64| side - MARGIN - CELL * r;
    for c in 1..=n {
        for r in 1..=n {
            let fill = if BoardKind::Lower.cell_allowed(n as usize, c as usize, r as u32) { "#dde6f5" } else { "#ffffff" };
            let _ = writeln!(
                out,
                r##"<rect x="{}" y="{}" width="{CELL}" height="{CELL}" fill="{fill}" stroke="#999999" stroke-width="1"/>"##,
                cell_x(c),
                cell_y(r)
            );
        }
    }
    for (i, &v) in sigma.word().iter().enumerate() {
        let cx = cell_x(i as i64 + 1) + CELL / 2;
        let cy = cell_y(v as i64) + CELL / 2;
        let _ = writeln!(out, r##"<circle cx="{cx}" cy="{cy}" r="5" fill="#000000"/>"##);
    }
    if n > 0 && is_lower_board(sigma) {
        if let Ok(path) = lower_board_to_path(sigma) {
            // Lattice point (x, y) is the corner right of column x, above row y.
            let coords: Vec<String> = path
                .points()
                .iter()
                .map(|&(x, y)| format!("{},{}", MARGIN + CELL * x, side - MARGIN - CELL * y))
                .collect();
            let _ = writeln!(
                out,
                r##"<polyline points="{}" fill="none" stroke="#c0392b" stroke-width="3"/>"##,
                coords.join(" ")
            );
        }
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use dumont::dyck::dyck as path;
    use dumont::perm;

    #[test]
    fn deterministic_and_well_formed() {
        let a = dyck(&path("UUDUDD"));
        assert_eq!(a, dyck(&path("UUDUDD")));
        assert!(a.starts_with("<?xml") && a.trim_end().ends_with("</svg>"));
        assert_eq!(a.matches("<circle").count(), 7);
        assert!(a.contains(r#"<polyline points="10,50 30,30 50,10 70,30 90,10 110,30 130,50""#));
        let b = board(&perm("1342"));
        assert_eq!(b.matches("<circle").count(), 4);
        assert!(b.contains("#c0392b"));
        assert_eq!(board(&perm("4321")).matches("#c0392b").count(), 0);
    }
}
