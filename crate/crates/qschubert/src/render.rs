//! Diagrams of loops, frames, toric shapes and slides.
//!
//! Everything is first built as a [`Diagram`] in matrix coordinates (row
//! down, column right, `R_kn` with SW corner `(k, 0)`), then written out as
//! text with one character per lattice box, or as SVG on a unit grid.

use std::fmt::Write as _;
use std::str::FromStr;

use qschubert_core::{
    quantum_slide, slide, BoundedPartition, ColumnDiagram, CylindricLoop, Frame, LatticePoint, Result,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagramKind {
    Loops,
    Toric,
    Slide,
    Frames,
}

impl DiagramKind {
    pub fn name(self) -> &'static str {
        match self {
            DiagramKind::Loops => "loops",
            DiagramKind::Toric => "toric",
            DiagramKind::Slide => "slide",
            DiagramKind::Frames => "frames",
        }
    }
}

impl FromStr for DiagramKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "loops" => Ok(DiagramKind::Loops),
            "toric" => Ok(DiagramKind::Toric),
            "slide" => Ok(DiagramKind::Slide),
            "frames" => Ok(DiagramKind::Frames),
            _ => Err(format!("unknown diagram `{s}` (expected loops, toric, slide or frames)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Style {
    Ascii,
    Svg,
}

impl Style {
    pub fn name(self) -> &'static str {
        match self {
            Style::Ascii => "ascii",
            Style::Svg => "svg",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fill {
    /// Boxes of the inner partition.
    Shaded,
    /// Boxes of a cylindric strip.
    Strip,
    /// A labeled box of the slide.
    Label(u32),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cell {
    pub row: i64,
    pub col: i64,
    pub fill: Fill,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polyline {
    pub label: String,
    pub points: Vec<LatticePoint>,
    pub dashed: bool,
    /// Character used in text output.
    pub glyph: char,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rect {
    pub label: String,
    pub top: i64,
    pub left: i64,
    pub bottom: i64,
    pub right: i64,
    pub dashed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mark {
    pub label: String,
    pub at: LatticePoint,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Panel {
    pub title: String,
    pub cells: Vec<Cell>,
    pub polylines: Vec<Polyline>,
    pub rects: Vec<Rect>,
    pub marks: Vec<Mark>,
}

impl Panel {
    /// Half-open box range `(top, left, bottom, right)` covering everything.
    fn bounds(&self) -> (i64, i64, i64, i64) {
        let mut b = (i64::MAX, i64::MAX, i64::MIN, i64::MIN);
        let mut add = |r0: i64, c0: i64, r1: i64, c1: i64| {
            b = (b.0.min(r0), b.1.min(c0), b.2.max(r1), b.3.max(c1));
        };
        for c in &self.cells {
            add(c.row, c.col, c.row + 1, c.col + 1);
        }
        for p in &self.polylines {
            for q in &p.points {
                add(q.row, q.col, q.row, q.col);
            }
        }
        for r in &self.rects {
            add(r.top, r.left, r.bottom, r.right);
        }
        for m in &self.marks {
            add(m.at.row, m.at.col, m.at.row, m.at.col);
        }
        if b.0 > b.2 {
            (0, 0, 0, 0)
        } else {
            b
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Diagram {
    pub panels: Vec<Panel>,
}

impl Diagram {
    pub fn write(&self, style: Style) -> String {
        match style {
            Style::Ascii => self.to_ascii(),
            Style::Svg => self.to_svg(),
        }
    }

    /// One character per lattice box. A loop marks the boxes lying directly
    /// below its horizontal steps and directly right of its vertical steps.
    pub fn to_ascii(&self) -> String {
        let mut out = String::new();
        for (i, panel) in self.panels.iter().enumerate() {
            if i > 0 {
                out.push('\n');
            }
            let (top, left, bottom, right) = panel.bounds();
            let (h, w) = ((bottom - top).max(0) as usize, (right - left).max(0) as usize);
            let mut grid = vec![vec!['.'; w]; h];
            let mut put = |r: i64, c: i64, ch: char| {
                if (top..bottom).contains(&r) && (left..right).contains(&c) {
                    grid[(r - top) as usize][(c - left) as usize] = ch;
                }
            };
            for rect in &panel.rects {
                let ch = if rect.dashed { ':' } else { '|' };
                for r in rect.top..rect.bottom {
                    put(r, rect.left, ch);
                    put(r, rect.right - 1, ch);
                }
            }
            for cell in &panel.cells {
                let ch = match cell.fill {
                    Fill::Shaded => '#',
                    Fill::Strip => '*',
                    Fill::Label(v) => char::from_digit(v % 36, 36).unwrap_or('?'),
                };
                put(cell.row, cell.col, ch);
            }
            for line in &panel.polylines {
                for seg in line.points.windows(2) {
                    let (a, b) = (seg[0], seg[1]);
                    if a.row == b.row {
                        for c in a.col.min(b.col)..a.col.max(b.col) {
                            put(a.row, c, line.glyph);
                        }
                    } else {
                        for r in a.row.min(b.row)..a.row.max(b.row) {
                            put(r, a.col, line.glyph);
                        }
                    }
                }
            }
            let _ = writeln!(out, "{} (rows {}..{}, cols {}..{})", panel.title, top, bottom, left, right);
            for line in &panel.polylines {
                let _ = writeln!(out, "  {} = {}", line.glyph, line.label);
            }
            for m in &panel.marks {
                let _ = writeln!(out, "  {} at ({}, {})", m.label, m.at.row, m.at.col);
            }
            for row in grid {
                out.extend(row);
                out.push('\n');
            }
        }
        out
    }

    pub fn to_svg(&self) -> String {
        const UNIT: i64 = 20;
        const GAP: i64 = 2;
        let frames: Vec<(i64, i64, i64, i64)> = self.panels.iter().map(Panel::bounds).collect();
        let width: i64 = frames.iter().map(|f| f.3 - f.1 + GAP).sum::<i64>() + GAP;
        let height: i64 = frames.iter().map(|f| f.2 - f.0).max().unwrap_or(0) + 2 * GAP;
        let mut out = String::new();
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="0 0 {} {}">"#,
            width * UNIT,
            height * UNIT,
            width * UNIT,
            height * UNIT
        );
        let mut x0 = GAP;
        for (panel, f) in self.panels.iter().zip(&frames) {
            // shift so that the panel's top-left box lands at (x0, GAP)
            let (dx, dy) = ((x0 - f.1) * UNIT, (GAP - f.0) * UNIT);
            let _ = writeln!(out, r#"<g transform="translate({dx},{dy})">"#);
            let _ = writeln!(
                out,
                r#"<text x="{}" y="{}" font-size="12">{}</text>"#,
                f.1 * UNIT,
                (f.0 - 1) * UNIT,
                escape(&panel.title)
            );
            for cell in &panel.cells {
                let (x, y) = (cell.col * UNIT, cell.row * UNIT);
                let fill = match cell.fill {
                    Fill::Shaded => "#bbbbbb",
                    Fill::Strip => "#dde8f5",
                    Fill::Label(_) => "#ffffff",
                };
                let _ = writeln!(
                    out,
                    r#"<rect x="{x}" y="{y}" width="{UNIT}" height="{UNIT}" fill="{fill}" stroke="gray" stroke-width="1"/>"#
                );
                if let Fill::Label(v) = cell.fill {
                    let _ = writeln!(
                        out,
                        r#"<text x="{}" y="{}" font-size="12" text-anchor="middle">{v}</text>"#,
                        x + UNIT / 2,
                        y + UNIT * 3 / 4
                    );
                }
            }
            for rect in &panel.rects {
                let dash = if rect.dashed { r#" stroke-dasharray="4,3""# } else { "" };
                let _ = writeln!(
                    out,
                    r#"<rect x="{}" y="{}" width="{}" height="{}" fill="none" stroke="black" stroke-width="1"{dash}/>"#,
                    rect.left * UNIT,
                    rect.top * UNIT,
                    (rect.right - rect.left) * UNIT,
                    (rect.bottom - rect.top) * UNIT
                );
            }
            for line in &panel.polylines {
                let pts: Vec<String> =
                    line.points.iter().map(|p| format!("{},{}", p.col * UNIT, p.row * UNIT)).collect();
                let dash = if line.dashed { r#" stroke-dasharray="6,4""# } else { "" };
                let _ = writeln!(
                    out,
                    r#"<polyline points="{}" fill="none" stroke="black" stroke-width="3"{dash}><title>{}</title></polyline>"#,
                    pts.join(" "),
                    escape(&line.label)
                );
            }
            for m in &panel.marks {
                let _ = writeln!(
                    out,
                    r#"<circle cx="{}" cy="{}" r="4" fill="black"><title>{}</title></circle>"#,
                    m.at.col * UNIT,
                    m.at.row * UNIT,
                    escape(&m.label)
                );
            }
            out.push_str("</g>\n");
            x0 += f.3 - f.1 + GAP;
        }
        out.push_str("</svg>\n");
        out
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Vertices of `lp` from step `from` to step `to`, keeping only corners.
pub fn loop_polyline(lp: &CylindricLoop, from: i64, to: i64) -> Vec<LatticePoint> {
    let raw: Vec<LatticePoint> = (from..=to).map(|j| lp.vertex(j)).collect();
    corners(&raw)
}

/// Drops points lying in the middle of a straight run.
pub fn corners(points: &[LatticePoint]) -> Vec<LatticePoint> {
    let mut out: Vec<LatticePoint> = Vec::with_capacity(points.len());
    for &p in points {
        if out.last() == Some(&p) {
            continue;
        }
        if out.len() >= 2 {
            let (a, b) = (out[out.len() - 2], out[out.len() - 1]);
            let collinear = (a.row == b.row && b.row == p.row) || (a.col == b.col && b.col == p.col);
            if collinear {
                out.pop();
            }
        }
        out.push(p);
    }
    out
}

/// The step window used by default: half a period either side of one period.
pub fn default_window(n: usize) -> (i64, i64) {
    let n = n as i64;
    (-(n / 2), n + (n + 1) / 2 + 1)
}

fn rect_of(frame: Frame, label: &str, dashed: bool) -> Rect {
    let (top, bottom) = frame.rows();
    let (left, right) = frame.cols();
    Rect { label: label.to_string(), top, left, bottom, right, dashed }
}

fn home_frame(lambda: &BoundedPartition) -> Frame {
    Frame { anchor: LatticePoint::new(lambda.ctx().k() as i64, 0), ctx: lambda.ctx() }
}

/// `lambda[d]` for each requested shift, over the default window.
pub fn loops(lambda: &BoundedPartition, shifts: &[i64]) -> Diagram {
    let (from, to) = default_window(lambda.ctx().n());
    let polylines = shifts
        .iter()
        .enumerate()
        .map(|(i, &d)| Polyline {
            label: format!("{lambda}[{d}]"),
            points: loop_polyline(&CylindricLoop::new(lambda.clone(), d), from, to),
            dashed: false,
            glyph: char::from_digit((i % 10) as u32, 10).unwrap(),
        })
        .collect();
    Diagram {
        panels: vec![Panel {
            title: format!("cylindric loops of {lambda}"),
            polylines,
            rects: vec![rect_of(home_frame(lambda), "R", false)],
            ..Panel::default()
        }],
    }
}

/// `lambda[0]` with the home frame and the frame whose anchor has moved `i`
/// steps along the loop.
pub fn frames(lambda: &BoundedPartition, i: i64) -> Diagram {
    let lp = CylindricLoop::new(lambda.clone(), 0);
    let anchor = lp.vertex(i);
    let home = home_frame(lambda);
    let n = lambda.ctx().n() as i64;
    Diagram {
        panels: vec![Panel {
            title: format!("frame moved {i} steps along {lambda}[0]"),
            polylines: vec![Polyline {
                label: format!("{lambda}[0]"),
                points: loop_polyline(&lp, -1, i.max(0) + n / 2 + 1),
                dashed: false,
                glyph: '0',
            }],
            rects: vec![
                rect_of(home, "R", true),
                rect_of(Frame { anchor, ctx: lambda.ctx() }, &format!("S^{i}"), false),
            ],
            marks: vec![
                Mark { label: "anchor".into(), at: home.anchor },
                Mark { label: format!("anchor after {i} steps"), at: anchor },
            ],
            ..Panel::default()
        }],
    }
}

/// The strip `mu / d / lambda` between `lambda[0]` and `mu[d]`, with the lower
/// boundary `lambda[0]` translated by `(k, 0)`.
pub fn toric(mu: &BoundedPartition, d: i64, lambda: &BoundedPartition) -> Diagram {
    let ctx = lambda.ctx();
    let (k, w) = (ctx.k() as i64, ctx.width() as i64);
    let upper = CylindricLoop::new(lambda.clone(), 0);
    let lower = CylindricLoop::new(mu.clone(), d);
    let mut cells = Vec::new();
    for c in 0..w {
        for r in upper.edge_row(c)..lower.edge_row(c) {
            cells.push(Cell { row: r, col: c, fill: Fill::Strip });
        }
    }
    let (from, to) = default_window(ctx.n());
    let down = |p: LatticePoint| LatticePoint::new(p.row + k, p.col);
    Diagram {
        panels: vec![Panel {
            title: format!("{mu}/{d}/{lambda}"),
            cells,
            polylines: vec![
                Polyline {
                    label: format!("{lambda}[0]"),
                    points: loop_polyline(&upper, from, to),
                    dashed: false,
                    glyph: '0',
                },
                Polyline {
                    label: format!("{mu}[{d}]"),
                    points: loop_polyline(&lower, from, to),
                    dashed: false,
                    glyph: '1',
                },
                Polyline {
                    label: format!("{lambda}[0] moved down by {k}"),
                    points: loop_polyline(&upper, from, to).into_iter().map(down).collect(),
                    dashed: true,
                    glyph: '2',
                },
            ],
            rects: vec![rect_of(home_frame(lambda), "R", false)],
            ..Panel::default()
        }],
    }
}

fn column_panel(title: &str, diagram: &ColumnDiagram, top: i64, left: i64) -> Panel {
    let mut cells = Vec::new();
    for c in 0..diagram.width() {
        for r in 0..diagram.height {
            let fill = if let Some(v) = diagram.label(r, c) {
                Fill::Label(v)
            } else if diagram.is_inner(r, c) {
                Fill::Shaded
            } else {
                continue;
            };
            cells.push(Cell { row: top + r as i64, col: left + c as i64, fill });
        }
    }
    Panel {
        title: title.to_string(),
        cells,
        rects: vec![Rect {
            label: "box".into(),
            top,
            left,
            bottom: top + diagram.height as i64,
            right: left + diagram.width() as i64,
            dashed: true,
        }],
        ..Panel::default()
    }
}

/// The three stages of the slide; with `d`, preceded by the setup inside the
/// union of two frames.
pub fn slide_panels(lambda: &BoundedPartition, mu: &BoundedPartition, d: Option<i64>) -> Result<Diagram> {
    let ctx = lambda.ctx();
    let Some(d) = d else {
        let s = slide(lambda, mu)?;
        let panels = s.trace.stages.iter().map(|(name, diagram)| column_panel(name, diagram, 0, 0)).collect();
        return Ok(Diagram { panels });
    };
    let qs = quantum_slide(lambda, mu, d)?;
    let upper = CylindricLoop::new(lambda.clone(), 0);
    let lower = CylindricLoop::new(mu.complement(), d);
    let (from, to) = default_window(ctx.n());
    let window = |p: &LatticePoint| p.col >= -1 && p.col <= qs.origin.col + ctx.width() as i64 + 1;
    let setup = Panel {
        title: format!("setup for d = {d}"),
        polylines: vec![
            Polyline {
                label: format!("{lambda}[0]"),
                points: loop_polyline(&upper, from, to).into_iter().filter(window).collect(),
                dashed: false,
                glyph: '0',
            },
            Polyline {
                label: format!("{}[{d}]", mu.complement()),
                points: loop_polyline(&lower, from, to).into_iter().filter(window).collect(),
                dashed: false,
                glyph: '1',
            },
        ],
        rects: vec![
            rect_of(home_frame(lambda), "R", false),
            Rect {
                label: "box".into(),
                top: qs.origin.row,
                left: qs.origin.col,
                bottom: qs.anchor.row,
                right: qs.origin.col + ctx.width() as i64,
                dashed: true,
            },
        ],
        marks: vec![
            Mark { label: "anchor".into(), at: home_frame(lambda).anchor },
            Mark { label: "A".into(), at: qs.anchor },
            Mark { label: "P".into(), at: qs.upper_anchor },
        ],
        ..Panel::default()
    };
    let mut panels = vec![setup];
    for (name, diagram) in &qs.trace.stages {
        panels.push(column_panel(name, diagram, qs.origin.row, qs.origin.col));
    }
    Ok(Diagram { panels })
}
