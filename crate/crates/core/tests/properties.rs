//! Randomized invariants over generated graph families.

use latdim::generate::{grid, path, product, random_tree};
use latdim::{run_pipeline, Graph};
use proptest::prelude::*;

proptest! {
    /// Rendering an edge list and parsing it back is lossless whenever every
    /// vertex id actually appears in some edge (trees qualify).
    #[test]
    fn render_parse_round_trip(n in 2usize..60, seed in any::<u64>()) {
        let g = random_tree(n, seed).unwrap();
        let text = g.render_edge_list();
        let (back, warnings) = Graph::parse_edge_list(&text).unwrap();
        prop_assert!(warnings.is_empty());
        prop_assert_eq!(back.vertex_count(), g.vertex_count());
        prop_assert_eq!(back.edges(), g.edges());
    }

    /// A tree needs exactly half its leaves, rounded up, as axes.
    #[test]
    fn tree_dimension_is_half_the_leaves(n in 2usize..50, seed in any::<u64>()) {
        let g = random_tree(n, seed).unwrap();
        let leaves = (0..n).filter(|&v| g.degree(v) == 1).count();
        let out = run_pipeline(&g).unwrap();
        prop_assert_eq!(out.tau(), n - 1);
        prop_assert_eq!(out.dimension(), leaves.div_ceil(2));
    }

    /// Relabeling the vertices changes neither the cube dimension nor the
    /// lattice dimension.
    #[test]
    fn dimension_is_relabeling_invariant(n in 2usize..30, seed in any::<u64>(), shuffle in any::<u64>()) {
        let g = random_tree(n, seed).unwrap();
        // Fisher-Yates driven by a splitmix-style scramble
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = shuffle;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = (s >> 33) as usize % (i + 1);
            perm.swap(i, j);
        }
        let relabeled = Graph::from_edges(
            n,
            g.edges().iter().map(|&(u, v)| (perm[u], perm[v])),
        ).unwrap();
        let a = run_pipeline(&g).unwrap();
        let b = run_pipeline(&relabeled).unwrap();
        prop_assert_eq!(a.tau(), b.tau());
        prop_assert_eq!(a.dimension(), b.dimension());
        prop_assert_eq!(a.matching.size(), b.matching.size());
    }

    /// Rectangular grids always flatten to two axes.
    #[test]
    fn grid_invariants(a in 2usize..8, b in 2usize..8) {
        let out = run_pipeline(&grid(a, b).unwrap()).unwrap();
        prop_assert_eq!(out.tau(), a + b - 2);
        prop_assert_eq!(out.matching.size(), a + b - 4);
        prop_assert_eq!(out.dimension(), 2);
    }

    /// A box product of paths needs one axis per factor.
    #[test]
    fn path_products_use_one_axis_per_factor(lens in prop::collection::vec(2usize..6, 1..4)) {
        let factors: Vec<Graph> = lens.iter().map(|&l| path(l).unwrap()).collect();
        let out = run_pipeline(&product(&factors).unwrap()).unwrap();
        prop_assert_eq!(out.dimension(), lens.len());
        let tau: usize = lens.iter().map(|&l| l - 1).sum();
        prop_assert_eq!(out.tau(), tau);
    }
}
