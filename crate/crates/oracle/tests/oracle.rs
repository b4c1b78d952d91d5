use latdim::generate::{cycle, grid, hypercube, path};
use latdim::{all_pairs_distances, recognize, run_pipeline, semicubes, Graph};
use latdim_oracle::{
    enumerate_connected_bipartite, is_partial_cube, min_lattice_dim, random_connected_bipartite,
    semicube_count_distance, OracleBudget, OracleError,
};

fn star(leaves: usize) -> Graph {
    Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).unwrap()
}

fn k23() -> Graph {
    Graph::from_edges(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap()
}

#[test]
fn recognizes_small_partial_cubes() {
    let b = OracleBudget::default();
    for g in [
        path(4).unwrap(),
        cycle(4).unwrap(),
        cycle(6).unwrap(),
        hypercube(3).unwrap(),
        star(3),
        grid(2, 3).unwrap(),
    ] {
        assert_eq!(is_partial_cube(&g, &b), Ok(true));
    }
}

#[test]
fn rejects_non_partial_cubes() {
    let b = OracleBudget::default();
    let triangle = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
    let two_edges = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
    for g in [k23(), triangle, cycle(5).unwrap(), two_edges] {
        assert_eq!(is_partial_cube(&g, &b), Ok(false));
    }
}

#[test]
fn budget_is_enforced() {
    let b = OracleBudget::default();
    let g = path(9).unwrap();
    assert_eq!(
        is_partial_cube(&g, &b),
        Err(OracleError::TooLarge { size: 9, max: 8 })
    );
    assert_eq!(
        min_lattice_dim(&g, &b),
        Err(OracleError::TooLarge { size: 9, max: 8 })
    );
    let wide = OracleBudget { max_vertices: 9 };
    assert_eq!(is_partial_cube(&g, &wide), Ok(true));
}

#[test]
fn minimum_dimensions_of_known_graphs() {
    let b = OracleBudget::default();
    let single = Graph::from_edges(1, []).unwrap();
    assert_eq!(min_lattice_dim(&single, &b), Ok(0));
    assert_eq!(min_lattice_dim(&path(2).unwrap(), &b), Ok(1));
    assert_eq!(min_lattice_dim(&path(5).unwrap(), &b), Ok(1));
    assert_eq!(min_lattice_dim(&cycle(4).unwrap(), &b), Ok(2));
    assert_eq!(min_lattice_dim(&cycle(6).unwrap(), &b), Ok(3));
    assert_eq!(min_lattice_dim(&cycle(8).unwrap(), &b), Ok(4));
    assert_eq!(min_lattice_dim(&star(3), &b), Ok(2));
    assert_eq!(min_lattice_dim(&star(5), &b), Ok(3));
    assert_eq!(min_lattice_dim(&star(7), &b), Ok(4));
    assert_eq!(min_lattice_dim(&grid(2, 3).unwrap(), &b), Ok(2));
    assert_eq!(min_lattice_dim(&hypercube(3).unwrap(), &b), Ok(3));
    assert_eq!(min_lattice_dim(&k23(), &b), Err(OracleError::NotEmbeddable));
}

#[test]
fn semicube_counts_reproduce_distances() {
    for g in [path(3).unwrap(), cycle(6).unwrap(), grid(2, 3).unwrap()] {
        let lab = recognize(&g).unwrap();
        let fam = semicubes(&lab);
        let dm = all_pairs_distances(&g);
        for u in 0..g.vertex_count() {
            for v in 0..g.vertex_count() {
                assert_eq!(semicube_count_distance(&fam, u, v), dm.get(u, v));
            }
        }
    }
}

#[test]
fn enumeration_counts_are_stable() {
    assert_eq!(enumerate_connected_bipartite(2).len(), 1);
    assert_eq!(enumerate_connected_bipartite(3).len(), 3);
    for g in enumerate_connected_bipartite(4) {
        assert_eq!(g.vertex_count(), 4);
        assert!(g.validate().is_ok());
    }
}

#[test]
fn random_corpus_is_deterministic() {
    let a = random_connected_bipartite(7, 5, 42);
    let b = random_connected_bipartite(7, 5, 42);
    assert_eq!(a.len(), 5);
    for (x, y) in a.iter().zip(&b) {
        assert_eq!(x.render_edge_list(), y.render_edge_list());
        assert!(x.validate().is_ok());
    }
}

/// The pipeline and the oracles must agree on every connected bipartite
/// graph with at most five vertices, both on recognition and, when the
/// graph qualifies, on the minimum dimension.
#[test]
fn pipeline_agrees_with_oracles_on_small_graphs() {
    let b = OracleBudget::default();
    let mut cubes = 0;
    for g in enumerate_connected_bipartite(5) {
        let oracle_says = is_partial_cube(&g, &b).unwrap();
        let pipeline = run_pipeline(&g);
        assert_eq!(pipeline.is_ok(), oracle_says, "{:?}", g);
        if let Ok(out) = pipeline {
            cubes += 1;
            assert_eq!(out.dimension(), min_lattice_dim(&g, &b).unwrap(), "{:?}", g);
        }
    }
    assert!(cubes > 10);
}
