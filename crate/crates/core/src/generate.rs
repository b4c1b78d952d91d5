//! Deterministic graph generators for tests, benchmarks, and the CLI.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::graph::Graph;

/// The path on `n >= 1` vertices.
pub fn path(n: usize) -> Result<Graph, Error> {
    if n == 0 {
        return Err(Error::InvalidParameter("path needs n >= 1".into()));
    }
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

/// The cycle on `n >= 3` vertices. Odd cycles are legal output: they make
/// useful rejection fixtures downstream.
pub fn cycle(n: usize) -> Result<Graph, Error> {
    if n < 3 {
        return Err(Error::InvalidParameter("cycle needs n >= 3".into()));
    }
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)).chain([(0, n - 1)]))
}

/// The hypercube with `2^k` vertices; ids are adjacent when they differ in
/// one bit. `k = 0` is a single vertex.
pub fn hypercube(k: u32) -> Result<Graph, Error> {
    if k > 20 {
        return Err(Error::InvalidParameter("hypercube needs k <= 20".into()));
    }
    let n = 1usize << k;
    let edges = (0..n).flat_map(|v| (0..k).map(move |b| (v, v ^ (1 << b))).filter(|&(u, w)| u < w));
    Graph::from_edges(n, edges)
}

/// The `a x b` grid, vertex `(i, j)` at id `i * b + j`.
pub fn grid(a: usize, b: usize) -> Result<Graph, Error> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidParameter("grid needs a, b >= 1".into()));
    }
    let mut edges = Vec::new();
    for i in 0..a {
        for j in 0..b {
            if i + 1 < a {
                edges.push((i * b + j, (i + 1) * b + j));
            }
            if j + 1 < b {
                edges.push((i * b + j, i * b + j + 1));
            }
        }
    }
    Graph::from_edges(a * b, edges)
}

/// A uniformly random labeled tree on `n` vertices, decoded from a random
/// length-`n-2` sequence. Identical seeds give identical trees everywhere.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph, Error> {
    if n == 0 {
        return Err(Error::InvalidParameter("random-tree needs n >= 1".into()));
    }
    if n <= 2 {
        return Graph::from_edges(n, (1..n).map(|i| (0, i)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &a in &seq {
        degree[a] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut ptr = degree.iter().position(|&d| d == 1).unwrap();
    let mut leaf = ptr;
    for &a in &seq {
        edges.push((leaf, a));
        degree[a] -= 1;
        if degree[a] == 1 && a < ptr {
            leaf = a;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    Graph::from_edges(n, edges)
}

/// The Cartesian product of the factors: vertices are coordinate tuples,
/// and a step moves along exactly one factor.
pub fn product(factors: &[Graph]) -> Result<Graph, Error> {
    let Some((first, rest)) = factors.split_first() else {
        return Err(Error::InvalidParameter("product needs at least one factor".into()));
    };
    let mut acc = first.clone();
    for h in rest {
        acc = product_pair(&acc, h)?;
    }
    Ok(acc)
}

fn product_pair(g: &Graph, h: &Graph) -> Result<Graph, Error> {
    let (ng, nh) = (g.vertex_count(), h.vertex_count());
    let mut edges = Vec::new();
    for &(u, v) in g.edges() {
        for i in 0..nh {
            edges.push((u * nh + i, v * nh + i));
        }
    }
    for &(i, j) in h.edges() {
        for u in 0..ng {
            edges.push((u * nh + i, u * nh + j));
        }
    }
    Graph::from_edges(ng * nh, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_and_cycle_shapes() {
        assert_eq!(path(1).unwrap().edge_count(), 0);
        assert_eq!(path(5).unwrap().edge_count(), 4);
        assert_eq!(cycle(6).unwrap().edge_count(), 6);
        assert!(path(0).is_err());
        assert!(cycle(2).is_err());
    }

    #[test]
    fn hypercube_shape() {
        let q3 = hypercube(3).unwrap();
        assert_eq!(q3.vertex_count(), 8);
        assert_eq!(q3.edge_count(), 12);
        assert!(q3.neighbors(0).iter().eq([1, 2, 4].iter()));
    }

    #[test]
    fn grid_is_a_product_of_paths() {
        let g = grid(3, 4).unwrap();
        let p = product(&[path(3).unwrap(), path(4).unwrap()]).unwrap();
        assert_eq!(g, p);
        assert_eq!(g.vertex_count(), 12);
        assert_eq!(g.edge_count(), 2 * 4 + 3 * 3);
    }

    #[test]
    fn hypercube_is_a_product_of_edges(){
        let q = hypercube(3).unwrap();
        let k2 = path(2).unwrap();
        let p = product(&[k2.clone(), k2.clone(), k2]).unwrap();
        // identical up to the bit order both use
        assert_eq!(q.vertex_count(), p.vertex_count());
        assert_eq!(q.edge_count(), p.edge_count());
        assert_eq!(
            crate::graph::all_pairs_distances(&q).max(),
            crate::graph::all_pairs_distances(&p).max()
        );
    }

    #[test]
    fn random_tree_is_a_deterministic_tree() {
        for n in [1, 2, 3, 10, 57] {
            let t = random_tree(n, 7).unwrap();
            assert_eq!(t.edge_count(), n.saturating_sub(1));
            assert!(t.validate().is_ok(), "n={n} must be connected");
            assert_eq!(t, random_tree(n, 7).unwrap());
        }
        assert_ne!(random_tree(20, 1).unwrap(), random_tree(20, 2).unwrap());
    }
}
