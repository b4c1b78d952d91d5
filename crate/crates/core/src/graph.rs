//! Undirected simple graphs: edge-list parsing, validation, and all-pairs
//! shortest-path distances.

use crate::error::Error;

/// An undirected simple graph on vertices `0..n`.
///
/// Edges are normalized to `u < v`, deduplicated, and kept sorted, so edge
/// indices and every downstream scan order are deterministic. Instances are
/// immutable once built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

/// Non-fatal oddity noticed while parsing an edge list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseWarning {
    DuplicateEdge { line: usize, u: usize, v: usize },
}

impl std::fmt::Display for ParseWarning {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ParseWarning::DuplicateEdge { line, u, v } => {
                write!(f, "duplicate edge {u} {v} on line {line}")
            }
        }
    }
}

impl Graph {
    /// Builds a graph on `n` vertices. Endpoints are normalized and
    /// duplicate edges collapse silently; self-loops are rejected.
    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Graph, Error> {
        if n == 0 {
            return Err(Error::EmptyInput);
        }
        let mut norm: Vec<(usize, usize)> = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            let e = (u.min(v), u.max(v));
            if e.1 >= n {
                return Err(Error::VertexOutOfRange { vertex: e.1, n });
            }
            norm.push(e);
        }
        norm.sort_unstable();
        norm.dedup();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &norm {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: norm,
            adj,
        })
    }

    /// Parses whitespace-separated `u v` lines. `#` starts a comment and
    /// blank lines are skipped. The vertex count is one past the largest id
    /// seen. Duplicate edges collapse and are reported as warnings.
    pub fn parse_edge_list(text: &str) -> Result<(Graph, Vec<ParseWarning>), Error> {
        let mut raw: Vec<(usize, usize, usize)> = Vec::new(); // (line, u, v)
        for (idx, line) in text.lines().enumerate() {
            let line_no = idx + 1;
            let body = line.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let mut it = body.split_whitespace();
            let (a, b, rest) = (it.next(), it.next(), it.next());
            let (Some(a), Some(b), None) = (a, b, rest) else {
                return Err(Error::MalformedLine {
                    line: line_no,
                    content: line.to_string(),
                });
            };
            let (Ok(u), Ok(v)) = (a.parse::<usize>(), b.parse::<usize>()) else {
                return Err(Error::MalformedLine {
                    line: line_no,
                    content: line.to_string(),
                });
            };
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            raw.push((line_no, u.min(v), u.max(v)));
        }
        if raw.is_empty() {
            return Err(Error::EmptyInput);
        }
        let n = raw.iter().map(|&(_, _, v)| v).max().unwrap() + 1;
        let mut seen = std::collections::BTreeSet::new();
        let mut warnings = Vec::new();
        for &(line, u, v) in &raw {
            if !seen.insert((u, v)) {
                warnings.push(ParseWarning::DuplicateEdge { line, u, v });
            }
        }
        let g = Graph::from_edges(n, raw.iter().map(|&(_, u, v)| (u, v)))?;
        Ok((g, warnings))
    }

    /// Renders the canonical edge list: one `u v` line per edge, sorted
    /// lexicographically. `parse_edge_list` round-trips it.
    pub fn render_edge_list(&self) -> String {
        let mut out = String::new();
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn vertex_count(&self) -> usize {
        self.n
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

    /// Checks the two structural preconditions of the pipeline: the graph
    /// must be connected (which also rules out gap ids with no edges) and
    /// bipartite. A single vertex passes both.
    pub fn validate(&self) -> Result<(), Error> {
        let mut color = vec![u8::MAX; self.n];
        color[0] = 0;
        let mut queue = vec![0usize];
        let mut head = 0;
        while head < queue.len() {
            let v = queue[head];
            head += 1;
            for &w in &self.adj[v] {
                if color[w] == u8::MAX {
                    color[w] = 1 - color[v];
                    queue.push(w);
                } else if color[w] == color[v] {
                    return Err(Error::NotBipartite { vertex: w });
                }
            }
        }
        if queue.len() < self.n {
            let vertex = color.iter().position(|&c| c == u8::MAX).unwrap();
            return Err(Error::Disconnected { vertex });
        }
        Ok(())
    }
}

/// Hop distances between all vertex pairs, row-major.
///
/// Entries are 16-bit, which bounds supported graphs at 65535 vertices; the
/// matrix itself costs `2 * n^2` bytes, which is the real ceiling and why
/// the CLI guards vertex counts behind `--max-n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u16>,
}

impl DistanceMatrix {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> usize {
        self.dist[u * self.n + v] as usize
    }

    pub fn max(&self) -> usize {
        self.dist.iter().copied().max().unwrap_or(0) as usize
    }
}

/// Runs a breadth-first search from every vertex. The graph must be
/// connected (see [`Graph::validate`]); unreachable vertices panic.
pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.vertex_count();
    assert!(n <= u16::MAX as usize, "distance entries are 16-bit");
    let mut dist = vec![u16::MAX; n * n];
    let mut queue: Vec<usize> = Vec::with_capacity(n);
    for src in 0..n {
        let row = &mut dist[src * n..(src + 1) * n];
        row[src] = 0;
        queue.clear();
        queue.push(src);
        let mut head = 0;
        while head < queue.len() {
            let v = queue[head];
            head += 1;
            let dv = row[v];
            for &w in g.neighbors(v) {
                if row[w] == u16::MAX {
                    row[w] = dv + 1;
                    queue.push(w);
                }
            }
        }
        assert_eq!(queue.len(), n, "graph must be connected");
    }
    DistanceMatrix { n, dist }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_simple_path() {
        let (g, warnings) = Graph::parse_edge_list("0 1\n1 2\n").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
        assert!(warnings.is_empty());
    }

    #[test]
    fn parse_collapses_duplicates_with_warning() {
        let (g, warnings) = Graph::parse_edge_list("0 1\n1 0\n").unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(
            warnings,
            vec![ParseWarning::DuplicateEdge { line: 2, u: 0, v: 1 }]
        );
    }

    #[test]
    fn parse_skips_comments_and_blanks() {
        let (g, _) = Graph::parse_edge_list("# a path\n\n0 1  # first\n1 2\n").unwrap();
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn parse_rejects_self_loop() {
        assert_eq!(
            Graph::parse_edge_list("0 0\n").unwrap_err(),
            Error::SelfLoop { vertex: 0 }
        );
    }

    #[test]
    fn parse_rejects_garbage() {
        let err = Graph::parse_edge_list("0 1\n1 x\n").unwrap_err();
        assert_eq!(err.name(), "MalformedLine");
        let err = Graph::parse_edge_list("0 1 2\n").unwrap_err();
        assert_eq!(err.name(), "MalformedLine");
    }

    #[test]
    fn parse_rejects_empty() {
        assert_eq!(Graph::parse_edge_list("# nothing\n").unwrap_err(), Error::EmptyInput);
    }

    #[test]
    fn render_is_canonical_and_round_trips() {
        let (g, _) = Graph::parse_edge_list("2 1\n1 0\n").unwrap();
        assert_eq!(g.render_edge_list(), "0 1\n1 2\n");
        let (again, _) = Graph::parse_edge_list(&g.render_edge_list()).unwrap();
        assert_eq!(g, again);
    }

    #[test]
    fn validate_accepts_single_vertex() {
        let g = Graph::from_edges(1, []).unwrap();
        assert!(g.validate().is_ok());
    }

    #[test]
    fn validate_rejects_odd_cycle() {
        let (g, _) = Graph::parse_edge_list("0 1\n1 2\n0 2\n").unwrap();
        assert_eq!(g.validate().unwrap_err().name(), "NotBipartite");
    }

    #[test]
    fn validate_rejects_disconnected() {
        let (g, _) = Graph::parse_edge_list("0 1\n2 3\n").unwrap();
        assert_eq!(g.validate().unwrap_err().name(), "Disconnected");
    }

    #[test]
    fn validate_rejects_gap_ids() {
        // vertex 1 never appears in an edge, so ids 0..=2 leave a gap
        let (g, _) = Graph::parse_edge_list("0 2\n").unwrap();
        assert_eq!(g.validate().unwrap_err(), Error::Disconnected { vertex: 1 });
    }

    /// Floyd-Warshall, as an independent check on the BFS sweep.
    #[allow(clippy::needless_range_loop)]
    fn floyd_warshall(g: &Graph) -> Vec<Vec<usize>> {
        let n = g.vertex_count();
        let inf = usize::MAX / 2;
        let mut d = vec![vec![inf; n]; n];
        for v in 0..n {
            d[v][v] = 0;
        }
        for &(u, v) in g.edges() {
            d[u][v] = 1;
            d[v][u] = 1;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    d[i][j] = d[i][j].min(d[i][k] + d[k][j]);
                }
            }
        }
        d
    }

    #[allow(clippy::needless_range_loop)]
    fn assert_distance_invariants(g: &Graph, dm: &DistanceMatrix) {
        let n = g.vertex_count();
        let fw = floyd_warshall(g);
        for u in 0..n {
            assert_eq!(dm.get(u, u), 0);
            for v in 0..n {
                assert_eq!(dm.get(u, v), fw[u][v]);
                assert_eq!(dm.get(u, v), dm.get(v, u));
                assert_eq!(dm.get(u, v) == 1, g.has_edge(u, v));
                for w in 0..n {
                    assert!(dm.get(u, v) <= dm.get(u, w) + dm.get(w, v));
                }
            }
        }
    }

    #[test]
    fn distances_match_floyd_warshall() {
        let cases = [
            "0 1\n1 2\n",                               // path
            "0 1\n0 5\n1 2\n2 3\n3 4\n4 5\n",           // six-cycle
            "0 1\n0 2\n0 3\n",                          // star
        ];
        for text in cases {
            let (g, _) = Graph::parse_edge_list(text).unwrap();
            let dm = all_pairs_distances(&g);
            assert_distance_invariants(&g, &dm);
        }
    }

    #[test]
    fn cube_distances() {
        let g = crate::generate::hypercube(3).unwrap();
        let dm = all_pairs_distances(&g);
        assert_distance_invariants(&g, &dm);
        assert_eq!(dm.max(), 3);
        assert_eq!(dm.get(0, 7), 3);
        assert_eq!(dm.get(1, 6), 3);
        assert_eq!(dm.get(2, 4), 2);
    }
}
