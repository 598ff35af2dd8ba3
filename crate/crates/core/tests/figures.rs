//! Rendered figures compared byte for byte against checked-in files.

use shifted_chains::render::{render, render_labelled_path, Figure, FigureFormat};
use shifted_chains::{Multichain, Path, ShiftedTableau};

fn golden(name: &str) -> String {
    std::fs::read_to_string(format!("{}/tests/fixtures/golden/{}", env!("CARGO_MANIFEST_DIR"), name)).unwrap()
}

fn staircase() -> ShiftedTableau {
    ShiftedTableau::new(vec![vec![1, 2, 6, 7, 8, 9], vec![6, 6, 9, 11], vec![8]]).unwrap()
}

#[test]
fn path_svg() {
    let p: Path = "duduud".parse().unwrap();
    assert_eq!(render(&Figure::Path(&p), FigureFormat::Svg), golden("path_duduud.svg"));
}

#[test]
fn labelled_path_tikz() {
    let p: Path = "duduud".parse().unwrap();
    let out = render_labelled_path(&p, &staircase(), FigureFormat::Tikz);
    assert_eq!(out, golden("path_duduud_labelled.tex"));
    assert_eq!(out.matches("\\node").count(), 12);
}

#[test]
fn tableau_tikz() {
    assert_eq!(render(&Figure::Tableau(&staircase()), FigureFormat::Tikz), golden("tableau_duduud_k11.tex"));
}

#[test]
fn multichain_svg() {
    let c = Multichain::parse_text("dudu\nduud\nuudu\n").unwrap();
    let out = render(&Figure::Multichain(&c), FigureFormat::Svg);
    assert_eq!(out, golden("multichain.svg"));
    assert_eq!(out.matches(">P").count(), 3);
}
