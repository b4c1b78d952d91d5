//! Maximum cardinality matching in the semicube graph.
//!
//! The search is the classic blossom algorithm: grow an alternating tree
//! from each exposed vertex, contract odd cycles on the fly by rebasing
//! their vertices onto the cycle's root, and flip the matching along any
//! augmenting path found. Each exposed vertex is searched once, giving
//! `O(V^3)` overall; a greedy pass seeds the matching so most searches
//! terminate quickly.

use crate::error::Error;
use crate::semicube::SemicubeGraph;

const NONE: usize = usize::MAX;

/// A set of vertex-disjoint edges, kept with a partner lookup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    vertex_count: usize,
    pairs: Vec<(usize, usize)>,
    partner: Vec<Option<usize>>,
}

impl Matching {
    /// Validates disjointness; overlapping pairs are `NotAMatching`.
    pub fn from_pairs(
        vertex_count: usize,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Matching, Error> {
        let mut partner = vec![None; vertex_count];
        let mut norm = Vec::new();
        for (u, v) in pairs {
            debug_assert!(u != v && u < vertex_count && v < vertex_count);
            for w in [u, v] {
                if partner[w].is_some() {
                    return Err(Error::NotAMatching { vertex: w });
                }
            }
            partner[u] = Some(v);
            partner[v] = Some(u);
            norm.push((u.min(v), u.max(v)));
        }
        norm.sort_unstable();
        Ok(Matching {
            vertex_count,
            pairs: norm,
            partner,
        })
    }

    pub fn size(&self) -> usize {
        self.pairs.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn partner(&self, v: usize) -> Option<usize> {
        self.partner[v]
    }
}

struct Blossom<'a> {
    sg: &'a SemicubeGraph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    queue: Vec<usize>,
    in_queue: Vec<bool>,
    in_blossom: Vec<bool>,
    lca_mark: Vec<bool>,
}

impl<'a> Blossom<'a> {
    fn new(sg: &'a SemicubeGraph) -> Self {
        let n = sg.vertex_count();
        let mut mate = vec![NONE; n];
        // greedy seed over the sorted edge list
        for &(u, v) in sg.edges() {
            if mate[u] == NONE && mate[v] == NONE {
                mate[u] = v;
                mate[v] = u;
            }
        }
        Blossom {
            sg,
            mate,
            parent: vec![NONE; n],
            base: (0..n).collect(),
            queue: Vec::with_capacity(n),
            in_queue: vec![false; n],
            in_blossom: vec![false; n],
            lca_mark: vec![false; n],
        }
    }

    /// First common ancestor of the tree paths from `a` and `b`, measured
    /// on blossom bases.
    fn lca(&mut self, a: usize, b: usize) -> usize {
        self.lca_mark.fill(false);
        let mut v = self.base[a];
        loop {
            self.lca_mark[v] = true;
            if self.mate[v] == NONE {
                break; // reached the root
            }
            v = self.base[self.parent[self.mate[v]]];
        }
        let mut v = self.base[b];
        loop {
            if self.lca_mark[v] {
                return v;
            }
            v = self.base[self.parent[self.mate[v]]];
        }
    }

    /// Walks from `v` up to the blossom base `b`, marking the cycle
    /// vertices and pointing their tree parents across the cycle to
    /// `child`, the vertex on the other branch.
    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Alternating-tree search from the exposed vertex `root`; returns the
    /// far end of an augmenting path if one exists.
    fn find_augmenting(&mut self, root: usize) -> Option<usize> {
        let n = self.sg.vertex_count();
        self.parent.fill(NONE);
        self.in_queue.fill(false);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.queue.clear();
        self.queue.push(root);
        self.in_queue[root] = true;
        let mut head = 0;
        while head < self.queue.len() {
            let v = self.queue[head];
            head += 1;
            for &u in self.sg.neighbors(v) {
                if self.base[v] == self.base[u] || self.mate[v] == u {
                    continue;
                }
                if u == root || (self.mate[u] != NONE && self.parent[self.mate[u]] != NONE) {
                    // two even-level vertices meet: contract the blossom
                    let b = self.lca(v, u);
                    self.in_blossom.fill(false);
                    self.mark_path(v, b, u);
                    self.mark_path(u, b, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = b;
                            if !self.in_queue[i] {
                                self.in_queue[i] = true;
                                self.queue.push(i);
                            }
                        }
                    }
                } else if self.parent[u] == NONE {
                    self.parent[u] = v;
                    if self.mate[u] == NONE {
                        return Some(u);
                    }
                    let w = self.mate[u];
                    if !self.in_queue[w] {
                        self.in_queue[w] = true;
                        self.queue.push(w);
                    }
                }
            }
        }
        None
    }

    /// Flips matched and unmatched edges along the parent chain ending at
    /// the exposed vertex `end`.
    fn augment(&mut self, mut end: usize) {
        while end != NONE {
            let p = self.parent[end];
            let next = self.mate[p];
            self.mate[end] = p;
            self.mate[p] = end;
            end = next;
        }
    }

    fn run(mut self) -> Matching {
        let n = self.sg.vertex_count();
        for root in 0..n {
            if self.mate[root] != NONE || self.sg.degree(root) == 0 {
                continue;
            }
            if let Some(end) = self.find_augmenting(root) {
                self.augment(end);
            }
        }
        let pairs: Vec<(usize, usize)> = (0..n)
            .filter(|&v| self.mate[v] != NONE && v < self.mate[v])
            .map(|v| (v, self.mate[v]))
            .collect();
        Matching::from_pairs(n, pairs).expect("mates are disjoint by construction")
    }
}

/// Maximum cardinality matching. Deterministic: vertices are scanned in
/// ascending order and adjacency lists are sorted.
pub fn maximum_matching(sg: &SemicubeGraph) -> Matching {
    Blossom::new(sg).run()
}

/// Exhaustive maximum matching size, for cross-checking the blossom search.
/// Refuses graphs with more than 24 vertices.
pub fn brute_force_matching_size(sg: &SemicubeGraph) -> Result<usize, Error> {
    let n = sg.vertex_count();
    const MAX: usize = 24;
    if n > MAX {
        return Err(Error::TooLarge { size: n, max: MAX });
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| sg.neighbors(v).iter().fold(0u32, |m, &u| m | 1 << u))
        .collect();

    fn rec(adj: &[u32], decided: u32, from: usize, best_seen: &mut usize, have: usize) -> usize {
        let n = adj.len();
        let mut v = from;
        while v < n && (decided >> v & 1 == 1 || adj[v] & !decided == 0) {
            v += 1;
        }
        if v == n {
            *best_seen = (*best_seen).max(have);
            return 0;
        }
        // everything undecided can contribute at most half its count
        let free = (!decided & ((1u32 << n) - 1)).count_ones() as usize;
        if have + free / 2 <= *best_seen {
            return 0;
        }
        let mut best = 0;
        let mut options = adj[v] & !decided;
        while options != 0 {
            let u = options.trailing_zeros() as usize;
            options &= options - 1;
            let take = 1 + rec(
                adj,
                decided | 1 << v | 1 << u,
                v + 1,
                best_seen,
                have + 1,
            );
            best = best.max(take);
        }
        best.max(rec(adj, decided | 1 << v, v + 1, best_seen, have))
    }

    let mut best_seen = 0;
    Ok(rec(&adj, 0, 0, &mut best_seen, 0))
}

/// Checks that `m` really is a matching of `sg` (edges exist, vertices
/// disjoint) and that no larger matching exists. Maximality is checked by
/// re-running the search from scratch.
pub fn verify_matching(sg: &SemicubeGraph, m: &Matching) -> Result<(), Error> {
    if m.vertex_count() != sg.vertex_count() {
        return Err(Error::VertexCountMismatch {
            graph: sg.vertex_count(),
            embedding: m.vertex_count(),
        });
    }
    let mut seen = vec![false; sg.vertex_count()];
    for &(u, v) in m.pairs() {
        if !sg.has_edge(u, v) {
            return Err(Error::NotAMatching { vertex: u });
        }
        for w in [u, v] {
            if seen[w] {
                return Err(Error::NotAMatching { vertex: w });
            }
            seen[w] = true;
        }
    }
    let best = maximum_matching(sg);
    if best.size() > m.size() {
        return Err(Error::NotMaximum {
            found: m.size(),
            maximum: best.size(),
        });
    }
    Ok(())
}
