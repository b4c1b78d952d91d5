//! Brute-force oracles for cross-checking the embedding pipeline.
//!
//! Everything here answers the same questions as the main crate but by
//! exhaustive search, sharing no code with the algorithms under test: the
//! hypercube oracle assigns bit addresses vertex by vertex, and the lattice
//! oracle tries every dimension from zero upward, placing vertices anywhere
//! in a diameter-sized box. Both are capped at small vertex counts and only
//! make sense in tests.

#![forbid(unsafe_code)]

use std::fmt;

use latdim::{all_pairs_distances, DistanceMatrix, Graph, SemicubeFamily};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Size caps for the exhaustive searches.
#[derive(Clone, Copy, Debug)]
pub struct OracleBudget {
    pub max_vertices: usize,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget { max_vertices: 8 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleError {
    /// The graph exceeds the search budget.
    TooLarge { size: usize, max: usize },
    /// No isometric lattice embedding exists in any dimension.
    NotEmbeddable,
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::TooLarge { size, max } => {
                write!(f, "graph with {size} vertices exceeds the oracle cap {max}")
            }
            OracleError::NotEmbeddable => write!(f, "graph embeds in no integer lattice"),
        }
    }
}

impl std::error::Error for OracleError {}

fn bfs_order(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut order = vec![0];
    seen[0] = true;
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        for &w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                order.push(w);
            }
        }
    }
    order
}

/// Searches for an isometric bit-address assignment. Vertex addresses are
/// `u32` masks; the first vertex is pinned at zero and fresh bits must be
/// introduced lowest-first, which kills the coordinate symmetries without
/// losing any labeling.
fn search_addresses(g: &Graph, dm: &DistanceMatrix) -> Option<Vec<u32>> {
    let n = g.vertex_count();
    let order = bfs_order(g);
    let max_bits = n - 1;
    let mut labels = vec![0u32; n];

    fn rec(
        idx: usize,
        used: usize,
        order: &[usize],
        labels: &mut Vec<u32>,
        dm: &DistanceMatrix,
        max_bits: usize,
    ) -> bool {
        if idx == order.len() {
            return true;
        }
        let v = order[idx];
        let want = dm.get(v, order[0]);
        for fresh in 0..=want.min(max_bits.saturating_sub(used)) {
            let new_part: u32 = ((1u32 << fresh) - 1) << used;
            let old_count = want - fresh;
            // all old-bit subsets of the right size
            for old_part in 0u32..(1u32 << used) {
                if old_part.count_ones() as usize != old_count {
                    continue;
                }
                let cand = old_part | new_part;
                let ok = order[..idx]
                    .iter()
                    .all(|&u| (cand ^ labels[u]).count_ones() as usize == dm.get(v, u));
                if ok {
                    labels[v] = cand;
                    if rec(idx + 1, used + fresh, order, labels, dm, max_bits) {
                        return true;
                    }
                }
            }
        }
        false
    }

    if rec(1, 0, &order, &mut labels, dm, max_bits) {
        Some(labels)
    } else {
        None
    }
}

/// Does `g` embed isometrically into some hypercube? Disconnected and
/// non-bipartite graphs never do.
pub fn is_partial_cube(g: &Graph, budget: &OracleBudget) -> Result<bool, OracleError> {
    let n = g.vertex_count();
    if n > budget.max_vertices {
        return Err(OracleError::TooLarge {
            size: n,
            max: budget.max_vertices,
        });
    }
    if g.validate().is_err() {
        return Ok(false);
    }
    let dm = all_pairs_distances(g);
    Ok(search_addresses(g, &dm).is_some())
}

/// Can the vertices be placed in `Z^d` with L1 distances equal to graph
/// distances? Exhaustive over a `[0, diam]^d` box; the first vertex is
/// forced into the lower-left half with sorted coordinates, which are the
/// reflection and axis-swap symmetries of the box.
fn embeds_in_dimension(g: &Graph, dm: &DistanceMatrix, d: usize) -> bool {
    let n = g.vertex_count();
    if d == 0 {
        return n == 1;
    }
    let diam = dm.max() as i32;
    let order = bfs_order(g);
    let mut coords = vec![vec![0i32; d]; n];

    fn next_point(point: &mut [i32], caps: &[i32]) -> bool {
        for i in (0..point.len()).rev() {
            if point[i] < caps[i] {
                point[i] += 1;
                for p in point.iter_mut().skip(i + 1) {
                    *p = 0;
                }
                return true;
            }
        }
        false
    }

    fn rec(
        idx: usize,
        order: &[usize],
        coords: &mut Vec<Vec<i32>>,
        dm: &DistanceMatrix,
        d: usize,
        diam: i32,
    ) -> bool {
        if idx == order.len() {
            return true;
        }
        let v = order[idx];
        let caps = vec![diam; d];
        let mut point = vec![0i32; d];
        loop {
            let ok = order[..idx].iter().all(|&u| {
                let l1: i32 = point
                    .iter()
                    .zip(&coords[u])
                    .map(|(&a, &b)| (a - b).abs())
                    .sum();
                l1 == dm.get(v, u) as i32
            });
            if ok {
                coords[v] = point.clone();
                if rec(idx + 1, order, coords, dm, d, diam) {
                    return true;
                }
            }
            if !next_point(&mut point, &caps) {
                return false;
            }
        }
    }

    // canonical positions for the first vertex
    let caps = vec![diam / 2; d];
    let mut point = vec![0i32; d];
    loop {
        if point.windows(2).all(|w| w[0] >= w[1]) {
            coords[order[0]] = point.clone();
            if rec(1, &order, &mut coords, dm, d, diam) {
                return true;
            }
        }
        if !next_point(&mut point, &caps) {
            return false;
        }
    }
}

/// Minimum `d` such that `g` embeds isometrically into `Z^d`, by trying
/// every dimension from zero up to the hypercube dimension.
pub fn min_lattice_dim(g: &Graph, budget: &OracleBudget) -> Result<usize, OracleError> {
    let n = g.vertex_count();
    if n > budget.max_vertices {
        return Err(OracleError::TooLarge {
            size: n,
            max: budget.max_vertices,
        });
    }
    if g.validate().is_err() {
        return Err(OracleError::NotEmbeddable);
    }
    let dm = all_pairs_distances(g);
    let Some(labels) = search_addresses(g, &dm) else {
        return Err(OracleError::NotEmbeddable);
    };
    let tau = labels.iter().fold(0u32, |acc, &l| acc | l).count_ones() as usize;
    for d in 0..=tau {
        if embeds_in_dimension(g, &dm, d) {
            return Ok(d);
        }
    }
    // the bit addresses themselves are a Z^tau embedding
    Ok(tau)
}

/// Counts the semicubes containing `u` but not `v`, one vertex at a time.
/// On a partial cube this equals the graph distance between `u` and `v`.
pub fn semicube_count_distance(fam: &SemicubeFamily, u: usize, v: usize) -> usize {
    (0..fam.semicube_count())
        .filter(|&id| fam.contains(id, u) && !fam.contains(id, v))
        .count()
}

/// Every connected bipartite graph on exactly `n` labeled vertices, by
/// sweeping all edge subsets. Exponential in `n^2`; keep `n <= 6`.
pub fn enumerate_connected_bipartite(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        let Ok(g) = Graph::from_edges(n, edges) else {
            continue;
        };
        if g.vertex_count() == n && g.validate().is_ok() {
            out.push(g);
        }
    }
    out
}

/// `count` random connected bipartite graphs on `n` vertices, by sampling
/// a bipartition and cross edges until connectivity holds. Deterministic
/// in `seed`.
pub fn random_connected_bipartite(n: usize, count: usize, seed: u64) -> Vec<Graph> {
    assert!(n >= 2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let probs = [0.3, 0.5, 0.8];
    while out.len() < count {
        let p = probs[out.len() % probs.len()];
        let mut side: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
        side[0] = false;
        side[n - 1] = true;
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if side[u] != side[v] && rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let Ok(g) = Graph::from_edges(n, edges) else {
            continue;
        };
        if g.validate().is_ok() {
            out.push(g);
        }
    }
    out
}
