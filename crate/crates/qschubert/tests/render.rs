//! Diagram geometry checked against hand-transcribed reference drawings.
//!
//! Drawing points are `(x, y)` in units of 10 with `y` pointing up; for `k = 5`
//! they map to lattice points `(5 - y/10, x/10)`.

use qschubert::render::{self, Fill, Style};
use qschubert_core::*;

fn ctx() -> RectContext {
    RectContext::new(5, 11).unwrap()
}

fn bp(parts: &[usize]) -> BoundedPartition {
    BoundedPartition::new(parts.to_vec(), ctx()).unwrap()
}

fn drawing(points: &[(i64, i64)]) -> Vec<LatticePoint> {
    points.iter().map(|&(x, y)| LatticePoint::new(5 - y / 10, x / 10)).collect()
}

/// Every lattice point along the path, one unit step at a time.
fn unit_steps(points: &[LatticePoint]) -> Vec<LatticePoint> {
    let mut out = vec![points[0]];
    for w in points.windows(2) {
        let (mut p, q) = (w[0], w[1]);
        assert!(p.row == q.row || p.col == q.col, "diagonal segment {p:?} -> {q:?}");
        while p != q {
            p = LatticePoint::new(p.row + (q.row - p.row).signum(), p.col + (q.col - p.col).signum());
            out.push(p);
        }
    }
    out
}

fn is_contiguous_run(needle: &[LatticePoint], hay: &[LatticePoint]) -> bool {
    hay.windows(needle.len()).any(|w| w == needle)
}

const LOOP_0: &[(i64, i64)] = &[
    (-20, -30),
    (-20, -20),
    (-10, -20),
    (-10, -10),
    (0, -10),
    (0, 0),
    (0, 10),
    (20, 10),
    (20, 20),
    (40, 20),
    (40, 30),
    (50, 30),
    (50, 40),
    (60, 40),
    (60, 50),
    (60, 60),
    (80, 60),
    (80, 70),
    (100, 70),
    (100, 80),
];
const LOOP_1: &[(i64, i64)] = &[
    (-10, -40),
    (-10, -30),
    (0, -30),
    (0, -20),
    (10, -20),
    (10, -10),
    (10, 0),
    (30, 0),
    (30, 10),
    (50, 10),
    (50, 20),
    (60, 20),
    (60, 30),
    (70, 30),
    (70, 40),
    (70, 50),
    (90, 50),
    (90, 60),
    (110, 60),
    (110, 70),
];
const LOOP_2: &[(i64, i64)] = &[
    (0, -50),
    (0, -40),
    (10, -40),
    (10, -30),
    (20, -30),
    (20, -20),
    (20, -10),
    (40, -10),
    (40, 0),
    (60, 0),
    (60, 10),
    (70, 10),
    (70, 20),
    (80, 20),
    (80, 30),
    (80, 40),
    (100, 40),
    (100, 50),
    (120, 50),
    (120, 60),
];

#[test]
fn loops_match_the_drawing() {
    let d = render::loops(&bp(&[6, 5, 4, 2]), &[0, 1, 2]);
    let lines = &d.panels[0].polylines;
    assert_eq!(lines.len(), 3);
    for (line, fig) in lines.iter().zip([LOOP_0, LOOP_1, LOOP_2]) {
        assert_eq!(unit_steps(&line.points), unit_steps(&drawing(fig)), "{}", line.label);
    }
    assert_eq!(lines[0].points[0], LatticePoint::new(8, -2));
    assert_eq!(*lines[0].points.last().unwrap(), LatticePoint::new(-3, 10));
}

#[test]
fn frame_after_two_steps() {
    let d = render::frames(&bp(&[6, 5, 4, 2]), 2);
    let p = &d.panels[0];
    assert_eq!(p.marks[0].at, LatticePoint::new(5, 0));
    assert_eq!(p.marks[1].at, LatticePoint::new(4, 1));
    let home = &p.rects[0];
    assert_eq!((home.top, home.left, home.bottom, home.right), (0, 0, 5, 6));
    let moved = &p.rects[1];
    assert_eq!((moved.top, moved.left, moved.bottom, moved.right), (-1, 1, 4, 7));
    // the rotated partition read off the moved frame
    assert_eq!(bp(&[6, 5, 4, 2]).cyclic_shift(2).parts(), &[5, 5, 4, 3, 1]);
}

#[test]
fn toric_strip_matches_the_drawing() {
    let (l, m) = (bp(&[6, 5, 4, 2]), bp(&[4, 3, 3, 2]));
    let d = render::toric(&m, 2, &l);
    let p = &d.panels[0];
    assert!(p.cells.iter().all(|c| c.fill == Fill::Strip));
    assert_eq!(p.cells.len(), 17);
    let mut col0: Vec<i64> = p.cells.iter().filter(|c| c.col == 0).map(|c| c.row).collect();
    col0.sort_unstable();
    assert_eq!(col0, [4, 5, 6]);

    let upper = drawing(&[
        (-20, -20),
        (-10, -20),
        (-10, -10),
        (0, -10),
        (0, 0),
        (0, 10),
        (20, 10),
        (20, 20),
        (40, 20),
        (40, 30),
        (50, 30),
        (50, 40),
        (60, 40),
        (60, 50),
        (60, 60),
        (80, 60),
    ]);
    let lower = drawing(&[
        (-10, -30),
        (0, -30),
        (0, -20),
        (20, -20),
        (20, -10),
        (40, -10),
        (40, 0),
        (50, 0),
        (50, 20),
        (60, 20),
        (60, 30),
        (80, 30),
    ]);
    let moved = drawing(&[
        (-10, -60),
        (0, -60),
        (0, -50),
        (0, -40),
        (20, -40),
        (20, -30),
        (40, -30),
        (40, -20),
        (50, -20),
        (50, -10),
        (60, -10),
        (60, 0),
        (60, 10),
        (80, 10),
        (80, 20),
        (100, 20),
    ]);
    for (line, fig) in p.polylines.iter().zip([upper, lower, moved]) {
        assert!(is_contiguous_run(&unit_steps(&fig), &unit_steps(&line.points)), "{}", line.label);
    }
    assert!(p.polylines[2].dashed);
}

#[test]
fn strip_cells_agree_with_the_loops() {
    let (l, m) = (bp(&[6, 5, 4, 2]), bp(&[4, 3, 3, 2]));
    let cells = render::toric(&m, 2, &l).panels[0].cells.clone();
    let (upper, lower) = (CylindricLoop::new(l, 0), CylindricLoop::new(m, 2));
    for c in 0..6 {
        let n = cells.iter().filter(|x| x.col == c).count() as i64;
        assert_eq!(n, lower.edge_row(c) - upper.edge_row(c));
    }
}

#[test]
fn quantum_slide_setup() {
    let d = render::slide_panels(&bp(&[6, 5, 4, 2]), &bp(&[6, 4, 3, 3, 2]), Some(2)).unwrap();
    assert_eq!(d.panels.len(), 4);
    let setup = &d.panels[0];
    let at = |label: &str| setup.marks.iter().find(|m| m.label == label).unwrap().at;
    assert_eq!(at("anchor"), LatticePoint::new(5, 0));
    assert_eq!(at("A"), LatticePoint::new(7, 2));
    assert_eq!(at("P"), LatticePoint::new(4, 2));
    let bx = setup.rects.iter().find(|r| r.label == "box").unwrap();
    assert_eq!((bx.top, bx.left, bx.bottom, bx.right), (-1, 2, 7, 8));
    let titles: Vec<&str> = d.panels[1..].iter().map(|p| p.title.as_str()).collect();
    assert_eq!(titles, ["initial", "slid up", "left-justified"]);
    // each row of the final panel fills out the left-justified box rows
    let qs = quantum_slide(&bp(&[6, 5, 4, 2]), &bp(&[6, 4, 3, 3, 2]), 2).unwrap();
    assert_eq!(qs.nu_tilde, [6, 6, 6, 6, 6, 1, 0, 0]);
    let last = &d.panels[3];
    let width = |r: i64| last.cells.iter().filter(|c| c.row == r).count();
    let widths: Vec<usize> = (-1..7).map(width).collect();
    assert_eq!(widths, qs.nu_tilde);
}

#[test]
fn classical_slide_panels() {
    let d = render::slide_panels(&bp(&[4, 3, 1]), &bp(&[5, 4, 4]), None).unwrap();
    assert_eq!(d.panels.len(), 3);
    let last = &d.panels[2];
    let mut rows = vec![vec![]; 5];
    for c in &last.cells {
        if let Fill::Label(v) = c.fill {
            rows[c.row as usize].push((c.col, v));
        }
    }
    let rows: Vec<Vec<u32>> = rows
        .into_iter()
        .map(|mut r| {
            r.sort_unstable();
            r.into_iter().map(|(_, v)| v).collect()
        })
        .collect();
    assert_eq!(rows, [vec![1, 1], vec![1, 2, 2], vec![1, 1, 2, 3, 3], vec![2, 3], vec![3]]);
}

#[test]
fn output_is_deterministic() {
    let l = bp(&[6, 5, 4, 2]);
    let m = bp(&[6, 4, 3, 3, 2]);
    for style in [Style::Ascii, Style::Svg] {
        let a = render::slide_panels(&l, &m, Some(2)).unwrap().write(style);
        let b = render::slide_panels(&l, &m, Some(2)).unwrap().write(style);
        assert_eq!(a, b);
        assert_eq!(render::loops(&l, &[0, 1, 2]).write(style), render::loops(&l, &[0, 1, 2]).write(style));
    }
    let svg = render::toric(&bp(&[4, 3, 3, 2]), 2, &l).to_svg();
    assert!(svg.starts_with("<svg"));
    assert!(svg.matches("<rect").count() >= 17);
    assert!(svg.contains("<polyline"));
}
