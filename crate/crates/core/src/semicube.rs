//! Semicubes and the semicube graph.
//!
//! Coordinate `i` of a labeling splits the vertices into two *semicubes*:
//! the vertices with bit `i` clear and those with it set. The semicube
//! graph joins two semicubes (never a semicube and its own complement) when
//! together they cover every vertex while still overlapping. A maximum
//! matching here is what collapses hypercube coordinates into lattice axes.

use crate::bitset::Bitset;
use crate::cube::HypercubeLabeling;

/// The `2 * tau` semicubes of a labeling, as bitsets over the vertices.
///
/// Semicube `(i, side)` lives at id `2 * i + side`, so an id's complement
/// is `id ^ 1`.
#[derive(Clone, Debug)]
pub struct SemicubeFamily {
    n: usize,
    tau: usize,
    sets: Vec<Bitset>,
}

impl SemicubeFamily {
    pub fn id(coordinate: usize, side: usize) -> usize {
        2 * coordinate + side
    }

    pub fn complement(id: usize) -> usize {
        id ^ 1
    }

    /// The coordinate and side an id stands for.
    pub fn coordinate_side(id: usize) -> (usize, usize) {
        (id / 2, id % 2)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn tau(&self) -> usize {
        self.tau
    }

    pub fn semicube_count(&self) -> usize {
        self.sets.len()
    }

    pub fn set(&self, id: usize) -> &Bitset {
        &self.sets[id]
    }

    pub fn contains(&self, id: usize, v: usize) -> bool {
        self.sets[id].contains(v)
    }
}

/// Collects both sides of every coordinate in `O(n * tau)`.
pub fn semicubes(lab: &HypercubeLabeling) -> SemicubeFamily {
    let n = lab.vertex_count();
    let tau = lab.tau();
    let mut sets = vec![Bitset::new(n); 2 * tau];
    for v in 0..n {
        for i in 0..tau {
            let side = lab.bit(v, i) as usize;
            sets[SemicubeFamily::id(i, side)].insert(v);
        }
    }
    SemicubeFamily { n, tau, sets }
}

/// The graph on semicube ids whose edges are the cover-and-overlap pairs.
///
/// Also serves as the host graph for the matching routines; edges are
/// sorted and adjacency lists deterministic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemicubeGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl SemicubeGraph {
    /// Builds directly from an edge list; used by tests and the matching
    /// brute force, which need arbitrary host graphs.
    pub fn from_edges(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut norm: Vec<(usize, usize)> = edges
            .into_iter()
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect();
        norm.sort_unstable();
        norm.dedup();
        let mut adj = vec![Vec::new(); vertex_count];
        for &(u, v) in &norm {
            debug_assert!(u != v && v < vertex_count);
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        SemicubeGraph {
            vertex_count,
            edges: norm,
            adj,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Sorted degree sequence; handy as an isomorphism invariant in tests.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.vertex_count).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }
}

/// Tests every unordered pair of semicubes except complements: an edge
/// needs the union to cover all vertices and the intersection to be
/// non-empty. Both tests are word loops over the bitsets, so the whole
/// build is `O(tau^2 * n / w)` words.
pub fn build_semicube_graph(fam: &SemicubeFamily) -> SemicubeGraph {
    let k = fam.semicube_count();
    let mut edges = Vec::new();
    for a in 0..k {
        for b in a + 1..k {
            if b == SemicubeFamily::complement(a) {
                continue;
            }
            let (sa, sb) = (fam.set(a), fam.set(b));
            if sa.union_is_full(sb) && sa.intersects(sb) {
                edges.push((a, b));
            }
        }
    }
    SemicubeGraph::from_edges(k, edges)
}

/// Renders the semicube graph in DOT form. Vertices are named
/// `coordinate:side` and listed before the (sorted) edges, so isolated
/// semicubes stay visible.
pub fn export_dot(sg: &SemicubeGraph) -> String {
    let mut out = String::from("graph semicubes {\n");
    for id in 0..sg.vertex_count() {
        let (i, side) = SemicubeFamily::coordinate_side(id);
        out.push_str(&format!("  \"{i}:{side}\";\n"));
    }
    for &(a, b) in sg.edges() {
        let (ai, aside) = SemicubeFamily::coordinate_side(a);
        let (bi, bside) = SemicubeFamily::coordinate_side(b);
        out.push_str(&format!("  \"{ai}:{aside}\" -- \"{bi}:{bside}\";\n"));
    }
    out.push_str("}\n");
    out
}
