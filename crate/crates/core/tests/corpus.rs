mod common;

use flatband::bands::sample_bands;
use flatband::catalog::{self, BUNDLED_FILES};
use flatband::eigvec::{cayley_hamilton_column, support_bound, support_extent, synthesize_eigenvector, unfold, verify_eigenvector};
use flatband::io::{graph_from_json, graph_to_json, read_graph};
use flatband::perturbation::detect_with_potential;
use flatband::singlecell::neighborhood_flat_band;
use flatband::{detect_flat_bands, detect_flat_bands_with, DetectOptions, FlatBandError, PeriodicGraph};

fn graphs_dir() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/graphs")
}

fn flat(g: &PeriodicGraph) -> Vec<String> {
    detect_flat_bands(g).unwrap().values().iter().map(|v| v.to_string()).collect()
}

#[test]
fn bundled_files_hold_their_catalog_graphs() {
    for (file, name) in BUNDLED_FILES {
        let path = graphs_dir().join(format!("{file}.json"));
        let text = std::fs::read_to_string(&path).unwrap();
        let g = graph_from_json(&text).unwrap();
        assert_eq!(g, catalog::by_name(name).unwrap(), "{file}");
        assert_eq!(graph_to_json(&g), text, "{file} is not in canonical form");
    }
    let on_disk = std::fs::read_dir(graphs_dir()).unwrap().count();
    assert_eq!(on_disk, BUNDLED_FILES.len());
}

#[test]
fn bundled_flat_sets() {
    let expect: [(&str, &[&str]); 11] = [
        ("fig1-left", &["-1"]),
        ("fig1-right", &["0"]),
        ("creutz", &["-2", "2"]),
        ("pyrochlore-1d", &["-2", "0"]),
        ("ladder", &[]),
        ("honeycomb", &[]),
        ("sawtooth-fig10", &[]),
        ("sheared-fig7", &["0"]),
        ("fivecell-fig8", &["-2"]),
        ("lieb-like-fig9-right", &["0"]),
        ("korsa-counterexample", &["0"]),
    ];
    for (file, values) in expect {
        let g = read_graph(graphs_dir().join(format!("{file}.json"))).unwrap();
        assert_eq!(flat(&g), values, "{file}");
    }
}

#[test]
fn creutz_bands_are_numerically_flat() {
    let s = sample_bands(&catalog::creutz_ladder(), 32);
    assert!(s.bands.iter().all(|b| b.flat && b.max - b.min < 1e-9));
}

#[test]
fn sawtooth_potential_switches_on_the_band() {
    let g = catalog::sawtooth();
    assert!(flat(&g).is_empty());
    let r = detect_with_potential(&g, &catalog::sawtooth_flat_potential()).unwrap();
    assert_eq!(r.values().iter().map(|v| v.to_string()).collect::<Vec<_>>(), ["-2"]);
}

#[test]
fn sheared_eigenvector_spans_two_cells() {
    let g = catalog::sheared_chains();
    let v = unfold(&synthesize_eigenvector(&g, &detect_flat_bands(&g).unwrap().flat_bands[0].value).unwrap());
    assert!(verify_eigenvector(&g, &v));
    assert_eq!(support_extent(&v), [2]);
}

#[test]
fn five_cell_eigenvector_in_window() {
    let g = catalog::five_cell_chain();
    let lambda = detect_flat_bands(&g).unwrap().flat_bands[0].value.clone();
    let raw = unfold(&cayley_hamilton_column(&g, &lambda).unwrap());
    assert!(verify_eigenvector(&g, &raw));
    assert_eq!(support_extent(&raw), [5]);
    let bound = support_bound(&g)[0];
    assert!(raw.cells().iter().all(|c| c[0].abs() <= bound));
    let v = unfold(&synthesize_eigenvector(&g, &lambda).unwrap());
    assert!(verify_eigenvector(&g, &v) && support_extent(&v)[0] <= 5);
}

#[test]
fn single_cell_property_depends_on_the_cell() {
    // Shifting one vertex of the diagonal chains gives the sheared chains.
    let diag = catalog::double_chain_diagonals();
    let sheared = diag.shift_cell(1, &[1]);
    assert_eq!(sheared, catalog::sheared_chains());
    assert!(neighborhood_flat_band(&diag, 0, 1).unwrap().is_some());
    assert!(neighborhood_flat_band(&sheared, 0, 1).unwrap().is_none());
    assert_eq!(flat(&diag), flat(&sheared));
}

#[test]
fn sublattice_quotient_is_refused() {
    let g = catalog::even_sublattice();
    let c = g.connectivity();
    assert!(c.quotient_connected && !c.lattice_generated);
    assert!(matches!(detect_flat_bands(&g), Err(FlatBandError::Disconnected)));
    assert!(detect_flat_bands_with(&g, DetectOptions { force_disconnected: true }).is_ok());
}

#[test]
fn corpus_eigenvectors_verify() {
    for (name, g) in common::corpus() {
        let bound = support_bound(&g);
        for band in detect_flat_bands(&g).unwrap().flat_bands {
            let v = unfold(&synthesize_eigenvector(&g, &band.value).unwrap());
            assert!(verify_eigenvector(&g, &v), "{name} {}", band.value);
            assert!(v.cells().iter().all(|c| c.iter().zip(&bound).all(|(x, b)| x.abs() <= *b)), "{name}");
        }
    }
}

#[test]
fn translated_eigenvectors_verify() {
    for (name, g) in common::corpus() {
        for band in detect_flat_bands(&g).unwrap().flat_bands {
            let v = unfold(&synthesize_eigenvector(&g, &band.value).unwrap());
            let by: Vec<i64> = (0..g.dim()).map(|t| t as i64 * 2 - 1).collect();
            let mut moved = v.clone();
            moved.values = v.values.iter().map(|((i, r), x)| ((*i, r.iter().zip(&by).map(|(a, b)| a + b).collect()), x.clone())).collect();
            assert!(verify_eigenvector(&g, &moved), "{name} {}", band.value);
        }
    }
}
