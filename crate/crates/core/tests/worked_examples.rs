//! Worked examples checked through the public API.

use std::path::PathBuf;

use qwl_core::bijections::{omega, psi_inv, psi_inv_inverse, psi_quinv, psi_quinv_inverse};
use qwl_core::clbasis::b_stat;
use qwl_core::fillings::{Filling, Stat};
use qwl_core::lattice::{build_ensemble, declutter, extract_overlays, mark_circles, render, TileType};
use qwl_core::patterns::{GTPattern, Overlay, Pop};
use qwl_core::splice::{dsplice, dsplice_confluent};

fn digits(s: &str) -> Vec<usize> {
    s.chars().map(|c| c.to_digit(10).unwrap() as usize).collect()
}

fn rows(n: usize, rs: &[&str]) -> Filling {
    Filling::from_rows(n, rs.iter().map(|r| digits(r)).collect()).unwrap()
}

fn running_example() -> Filling {
    rows(4, &["1121212443", "223334", "3344"])
}

fn small_example() -> Filling {
    rows(4, &["1212", "34"])
}

fn running_pop() -> Pop {
    let gt = GTPattern::new(4, vec![vec![4], vec![7, 2], vec![8, 5, 2], vec![10, 6, 4, 0]]).unwrap();
    let overlay: Overlay = [
        ((1, 1), vec![2, 1, 0]),
        ((1, 2), vec![2]),
        ((1, 3), vec![1, 1]),
        ((2, 2), vec![0, 0, 0]),
        ((2, 3), vec![1]),
        ((3, 3), vec![2, 2]),
    ]
    .into_iter()
    .collect();
    Pop::new(gt, overlay).unwrap()
}

#[test]
fn running_example_statistics() {
    let f = running_example();
    assert_eq!(f.inv().unwrap(), 5);
    assert_eq!(f.quinv().unwrap(), 12);
    assert_eq!(
        f.z_grid(Stat::Quinv).unwrap(),
        vec![vec![0, 0, 0, 0, 1, 0, 2, 1, 1, 2], vec![0, 0, 0, 0, 0, 1], vec![0, 0, 2, 2]]
    );
}

#[test]
fn running_example_bijections() {
    let f = running_example();
    assert_eq!(psi_quinv(&f).unwrap(), running_pop());
    assert_eq!(psi_quinv_inverse(&running_pop()).unwrap().to_string(), "1121212443/223334/3344");
    assert_eq!(psi_inv_inverse(&running_pop()).unwrap().to_string(), "2111321442/332243/4433");
    assert_eq!(psi_inv(&f).unwrap(), running_pop().bcomp());
    assert_eq!(omega(&f).unwrap().to_string(), "2111321442/332243/4433");
}

#[test]
fn dsplice_example() {
    let f = rows(6, &["1121232465", "22323635", "43465", "645"]);
    assert_eq!(f.partition_shape().unwrap().parts(), &[10, 8, 5, 3]);
    let g = dsplice(&f).unwrap();
    assert_eq!(g.to_string(), "112122345/2232335/3445/45");
    assert!(dsplice_confluent(&f, 100_000).unwrap());
}

#[test]
fn cl_words_modulo_constant_atoms() {
    let small = small_example();
    assert_eq!(
        b_stat(&small, Stat::Quinv).unwrap().without_constant_atoms().render(),
        "(E_{2,1} ⊗ t^2)(E_{2,1} ⊗ t)(E_{4,2} ⊗ t)"
    );
    assert_eq!(
        b_stat(&running_example(), Stat::Quinv).unwrap().without_constant_atoms().render(),
        "(E_{2,1} ⊗ t^2)(E_{2,1} ⊗ t)(E_{3,1} ⊗ t^2)(E_{4,1} ⊗ t)^2(E_{4,2} ⊗ t)(E_{4,3} ⊗ t^2)^2"
    );
}

#[test]
fn single_column_lattice_path() {
    let f = Filling::from_columns(4, vec![vec![1, 3, 4]]).unwrap();
    let e = build_ensemble(&f).unwrap();
    let kinds: Vec<TileType> = e.strands()[0].occupancies.iter().map(|o| o.kind).collect();
    assert_eq!(kinds.iter().filter(|&&k| k == TileType::II).count(), 3);
    assert_eq!(kinds.first(), Some(&TileType::II));
    let svg = render(&e, "svg").unwrap();
    assert_eq!(svg.matches("<path").count(), 1);
    assert!(!svg.contains("<circle"));
}

#[test]
fn running_example_lattice_readout() {
    let e = declutter(&build_ensemble(&running_example()).unwrap());
    let circles = mark_circles(&e);
    let solid: usize = circles.values().map(|c| c.solid.len()).sum();
    let open: usize = circles.values().map(|c| c.open.len()).sum();
    assert_eq!((solid, open), (12, 5));
    let x11 = &circles[&(1, 2)];
    assert_eq!((x11.solid.len(), x11.open.len()), (3, 3));
    let (q, i) = extract_overlays(&e, &circles).unwrap();
    assert_eq!(q, running_pop());
    assert_eq!(i.part(1, 1), &[2, 1, 0]);
    assert_eq!(i.part(3, 3), &[0, 0]);
}

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

/// Set `QWL_BLESS=1` to rewrite the file from the current output.
fn check_golden(name: &str, actual: &str) {
    let path = golden(name);
    if std::env::var_os("QWL_BLESS").is_some() {
        std::fs::write(&path, actual).unwrap();
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(actual, expected, "golden file {name} differs");
}

#[test]
fn small_example_text_render_matches_golden() {
    let e = build_ensemble(&small_example()).unwrap();
    let text = render(&e, "text").unwrap();
    assert_eq!(text.matches('●').count(), 4);
    assert_eq!(text.matches('○').count(), 1);
    check_golden("small_example.txt", &text);
    check_golden("small_example_decluttered.txt", &render(&declutter(&e), "text").unwrap());
}
