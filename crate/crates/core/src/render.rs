//! Deterministic SVG and TikZ pictures of paths (with the shifted diagram
//! between the path and the top), tableaux and multichains.

use std::fmt::Write;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::Multichain;
use crate::paths::Path;
use crate::tableaux::{cell_point, ShiftedTableau};

const UNIT: i64 = 24;
const MARGIN: i64 = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FigureFormat {
    Svg,
    Tikz,
}

impl FromStr for FigureFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<FigureFormat> {
        match s.to_ascii_lowercase().as_str() {
            "svg" => Ok(FigureFormat::Svg),
            "tikz" => Ok(FigureFormat::Tikz),
            other => Err(Error::Parse(format!("unknown figure format {:?} (expected svg or tikz)", other))),
        }
    }
}

/// Anything that can be drawn.
#[derive(Clone, Debug)]
pub enum Figure<'a> {
    Path(&'a Path),
    Tableau(&'a ShiftedTableau),
    Multichain(&'a Multichain),
}

pub fn render(figure: &Figure<'_>, format: FigureFormat) -> String {
    let scene = match figure {
        Figure::Path(p) => path_scene(p, None),
        Figure::Tableau(t) => tableau_scene(t),
        Figure::Multichain(c) => multichain_scene(c),
    };
    match format {
        FigureFormat::Svg => scene.to_svg(),
        FigureFormat::Tikz => scene.to_tikz(),
    }
}

/// Primitives in lattice coordinates (y pointing up).
#[derive(Default)]
struct Scene {
    lines: Vec<(Vec<(i64, i64)>, Stroke)>,
    polygons: Vec<Vec<(i64, i64)>>,
    labels: Vec<(f64, f64, String)>,
    min: (i64, i64),
    max: (i64, i64),
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Stroke {
    Grid,
    Path,
    Top,
}

impl Stroke {
    fn svg(self) -> &'static str {
        match self {
            Stroke::Grid => r##"stroke="#d0d0d0" stroke-width="0.5""##,
            Stroke::Path => r##"stroke="#1f4e9c" stroke-width="2.5""##,
            Stroke::Top => r##"stroke="#808080" stroke-width="1.5" stroke-dasharray="4 3""##,
        }
    }

    fn tikz(self) -> &'static str {
        match self {
            Stroke::Grid => "very thin, gray!40",
            Stroke::Path => "very thick, blue!70!black",
            Stroke::Top => "thick, dashed, gray",
        }
    }
}

impl Scene {
    fn fit(&mut self, x: i64, y: i64) {
        self.min = (self.min.0.min(x), self.min.1.min(y));
        self.max = (self.max.0.max(x), self.max.1.max(y));
    }

    fn line(&mut self, pts: Vec<(i64, i64)>, stroke: Stroke) {
        for &(x, y) in &pts {
            self.fit(x, y);
        }
        self.lines.push((pts, stroke));
    }

    fn polygon(&mut self, pts: Vec<(i64, i64)>) {
        for &(x, y) in &pts {
            self.fit(x, y);
        }
        self.polygons.push(pts);
    }

    fn label(&mut self, x: f64, y: f64, text: String) {
        self.labels.push((x, y, text));
    }

    /// Shifts everything so that the bounding box starts at `(dx, dy)`.
    fn translate(&mut self, dx: i64, dy: i64) {
        for (pts, _) in &mut self.lines {
            pts.iter_mut().for_each(|p| *p = (p.0 + dx, p.1 + dy));
        }
        for pts in &mut self.polygons {
            pts.iter_mut().for_each(|p| *p = (p.0 + dx, p.1 + dy));
        }
        for l in &mut self.labels {
            l.0 += dx as f64;
            l.1 += dy as f64;
        }
        self.min = (self.min.0 + dx, self.min.1 + dy);
        self.max = (self.max.0 + dx, self.max.1 + dy);
    }

    fn absorb(&mut self, other: Scene) {
        self.fit(other.min.0, other.min.1);
        self.fit(other.max.0, other.max.1);
        self.lines.extend(other.lines);
        self.polygons.extend(other.polygons);
        self.labels.extend(other.labels);
    }

    fn to_svg(&self) -> String {
        let width = (self.max.0 - self.min.0) * UNIT + 2 * MARGIN;
        let height = (self.max.1 - self.min.1) * UNIT + 2 * MARGIN;
        let px = |x: i64| (x - self.min.0) * UNIT + MARGIN;
        let py = |y: i64| (self.max.1 - y) * UNIT + MARGIN;
        let fx = |x: f64| (x - self.min.0 as f64) * UNIT as f64 + MARGIN as f64;
        let fy = |y: f64| (self.max.1 as f64 - y) * UNIT as f64 + MARGIN as f64;
        let mut out = String::new();
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
            w = width,
            h = height
        );
        let _ = writeln!(out, r#"<rect width="{}" height="{}" fill="white"/>"#, width, height);
        for pts in &self.polygons {
            let coords: Vec<String> = pts.iter().map(|&(x, y)| format!("{},{}", px(x), py(y))).collect();
            let _ = writeln!(out, r##"<polygon points="{}" fill="#f3e3b5" stroke="#8a7440" stroke-width="0.75"/>"##, coords.join(" "));
        }
        for (pts, stroke) in &self.lines {
            let coords: Vec<String> = pts.iter().map(|&(x, y)| format!("{},{}", px(x), py(y))).collect();
            let _ = writeln!(out, r#"<polyline points="{}" fill="none" {}/>"#, coords.join(" "), stroke.svg());
        }
        for (x, y, text) in &self.labels {
            let _ = writeln!(
                out,
                r#"<text x="{:.1}" y="{:.1}" font-family="monospace" font-size="11" text-anchor="middle" dominant-baseline="central">{}</text>"#,
                fx(*x),
                fy(*y),
                escape(text)
            );
        }
        out.push_str("</svg>\n");
        out
    }

    fn to_tikz(&self) -> String {
        let mut out = String::from("\\documentclass[tikz,border=4pt]{standalone}\n\\begin{document}\n\\begin{tikzpicture}[x=0.5cm,y=0.5cm]\n");
        for pts in &self.polygons {
            let coords: Vec<String> = pts.iter().map(|&(x, y)| format!("({},{})", x, y)).collect();
            let _ = writeln!(out, "\\filldraw[fill=yellow!25, draw=brown!70] {} -- cycle;", coords.join(" -- "));
        }
        for (pts, stroke) in &self.lines {
            let coords: Vec<String> = pts.iter().map(|&(x, y)| format!("({},{})", x, y)).collect();
            let _ = writeln!(out, "\\draw[{}] {};", stroke.tikz(), coords.join(" -- "));
        }
        for (x, y, text) in &self.labels {
            let _ = writeln!(out, "\\node[font=\\scriptsize] at ({:.1},{:.1}) {{{}}};", x, y, tex_escape(text));
        }
        out.push_str("\\end{tikzpicture}\n\\end{document}\n");
        out
    }
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

fn tex_escape(text: &str) -> String {
    text.replace('\\', "\\textbackslash{}").replace('_', "\\_").replace('&', "\\&").replace('#', "\\#")
}

fn polyline(p: &Path) -> Vec<(i64, i64)> {
    p.heights().points().iter().enumerate().map(|(x, &h)| (x as i64, h as i64)).collect()
}

/// The path drawn against the lattice grid and the top `u^n`, with the
/// cells of the shifted diagram between them; cell labels come from `t`.
fn path_scene(p: &Path, t: Option<&ShiftedTableau>) -> Scene {
    let mut scene = Scene::default();
    let n = p.len() as i64;
    let low = p.min_height().min(0) as i64;
    for x in 0..=n {
        scene.line(vec![(x, low), (x, n)], Stroke::Grid);
    }
    for y in low..=n {
        scene.line(vec![(0, y), (n, y)], Stroke::Grid);
    }
    let q = p.strip_leading_ups();
    let shift = (p.len() - q.len()) as i64;
    if !q.is_empty() {
        let shape = crate::tableaux::Shape::of_path(&q).expect("the path starts with d");
        for (i, j) in shape.cells() {
            let (x, y) = cell_point(q.len(), i, j).expect("cells of λ lie in range");
            let (x, y) = (x + shift, y + shift);
            scene.polygon(vec![(x, y), (x + 1, y + 1), (x, y + 2), (x - 1, y + 1)]);
            if let Some(v) = t.and_then(|t| t.get(i, j)) {
                scene.label(x as f64, y as f64 + 1.0, v.to_string());
            }
        }
    }
    scene.line(polyline(&Path::all_up(p.len())), Stroke::Top);
    scene.line(polyline(p), Stroke::Path);
    scene.label(n as f64 / 2.0, low as f64 - 0.8, p.to_string());
    scene
}

/// The shifted diagram as square cells, row `i` indented by `i - 1`.
fn tableau_scene(t: &ShiftedTableau) -> Scene {
    let mut scene = Scene::default();
    let rows = t.shape().rows() as i64;
    for (i, j) in t.shape().cells() {
        let (x, y) = (j as i64 - 1, rows - i as i64);
        scene.polygon(vec![(x, y), (x + 1, y), (x + 1, y + 1), (x, y + 1)]);
        scene.label(x as f64 + 0.5, y as f64 + 0.5, t.at(i, j).to_string());
    }
    scene.fit(0, 0);
    scene
}

/// One panel per member, stacked from the bottom member upwards.
fn multichain_scene(c: &Multichain) -> Scene {
    let mut scene = Scene::default();
    let mut offset = 0;
    for (idx, p) in c.paths().iter().enumerate() {
        let mut panel = path_scene(p, None);
        panel.label(-1.0, (panel.min.1 + panel.max.1) as f64 / 2.0, format!("P{}", idx));
        let dy = offset - panel.min.1;
        panel.translate(0, dy);
        offset = panel.max.1 + 2;
        scene.absorb(panel);
    }
    scene.fit(-2, 0);
    scene
}

/// A path with the entries of a tableau of shape `λ(P)` written in its cells.
pub fn render_labelled_path(p: &Path, t: &ShiftedTableau, format: FigureFormat) -> String {
    let scene = path_scene(p, Some(t));
    match format {
        FigureFormat::Svg => scene.to_svg(),
        FigureFormat::Tikz => scene.to_tikz(),
    }
}
