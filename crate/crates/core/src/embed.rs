//! From a matching to lattice coordinates, and back again.
//!
//! Add to the matched semicube pairs the complement pairs `(id, id ^ 1)`.
//! Every semicube then has degree one or two, and the components are paths
//! (a cycle would force an infinite strictly-ascending chain of semicubes,
//! because following a complement edge and then a matched edge always
//! lands in a superset). Each path becomes one lattice axis: walking a path
//! of length `l`, the intersections of consecutive odd/even semicubes
//! `S[2x-1] & S[2x]` slice the vertices into `ceil(l/2) + 1` layers, and a
//! vertex's layer index along axis `i` is its coordinate there.

use std::collections::HashMap;

use crate::bitset::Bitset;
use crate::cube::HypercubeLabeling;
use crate::error::Error;
use crate::graph::{DistanceMatrix, Graph};
use crate::matching::Matching;
use crate::semicube::SemicubeFamily;

/// The matched-plus-complement edges of the semicube ids, split into paths.
///
/// Paths alternate complement and matched edges, starting and ending with a
/// complement edge, so every length is odd. Each path is oriented to start
/// at its lower endpoint id, and paths are sorted by the lowest id they
/// contain. The number of paths is the lattice dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathDecomposition {
    semicube_count: usize,
    paths: Vec<Vec<usize>>,
}

impl PathDecomposition {
    pub fn dimension(&self) -> usize {
        self.paths.len()
    }

    pub fn paths(&self) -> &[Vec<usize>] {
        &self.paths
    }

    /// Edge count of path `i`; always odd.
    pub fn path_length(&self, i: usize) -> usize {
        self.paths[i].len() - 1
    }

    pub fn semicube_count(&self) -> usize {
        self.semicube_count
    }
}

/// Splits semicube ids into paths along complement and matched edges.
/// `CycleDetected` means some component has every vertex matched, which a
/// matching in a real semicube graph can never produce.
pub fn path_decomposition(semicube_count: usize, m: &Matching) -> Result<PathDecomposition, Error> {
    debug_assert_eq!(semicube_count, m.vertex_count());
    debug_assert_eq!(semicube_count % 2, 0);
    let mut visited = vec![false; semicube_count];
    let mut paths = Vec::new();
    for start in 0..semicube_count {
        // path endpoints are exactly the unmatched ids
        if visited[start] || m.partner(start).is_some() {
            continue;
        }
        let mut path = vec![start];
        visited[start] = true;
        let mut at = start;
        loop {
            // complement edge first: every id has exactly one
            let twin = SemicubeFamily::complement(at);
            debug_assert!(!visited[twin]);
            visited[twin] = true;
            path.push(twin);
            match m.partner(twin) {
                Some(next) => {
                    debug_assert!(!visited[next]);
                    visited[next] = true;
                    path.push(next);
                    at = next;
                }
                None => break,
            }
        }
        if path[0] > *path.last().unwrap() {
            path.reverse();
        }
        paths.push(path);
    }
    if visited.iter().any(|&v| !v) {
        return Err(Error::CycleDetected);
    }
    paths.sort_by_key(|p| p.iter().min().copied());
    Ok(PathDecomposition {
        semicube_count,
        paths,
    })
}

/// Structural checks on a decomposition against its family and matching:
/// partition into paths, odd lengths, alternation, and the ascending-chain
/// property that every second step lands in a superset.
pub fn verify_decomposition(
    pd: &PathDecomposition,
    fam: &SemicubeFamily,
    m: &Matching,
) -> Result<(), Error> {
    let mut seen = vec![false; pd.semicube_count()];
    for path in pd.paths() {
        if path.len() % 2 != 0 {
            return Err(Error::CycleDetected);
        }
        for &id in path {
            if seen[id] {
                return Err(Error::CycleDetected);
            }
            seen[id] = true;
        }
        for (j, pair) in path.windows(2).enumerate() {
            let ok = if j % 2 == 0 {
                pair[1] == SemicubeFamily::complement(pair[0])
            } else {
                m.partner(pair[0]) == Some(pair[1])
            };
            if !ok {
                return Err(Error::CycleDetected);
            }
        }
        for step in path.chunks_exact(2).collect::<Vec<_>>().windows(2) {
            if !fam.set(step[0][0]).is_subset_of(fam.set(step[1][0])) {
                return Err(Error::CycleDetected);
            }
        }
    }
    if seen.iter().any(|&s| !s) {
        return Err(Error::CycleDetected);
    }
    Ok(())
}

/// Integer coordinates for every vertex, one column per lattice axis.
///
/// Pipeline output is normalized so every axis starts at 0; embeddings read
/// back from files may sit anywhere in the lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeEmbedding {
    dim: usize,
    coords: Vec<Vec<i64>>,
    ranges: Vec<(i64, i64)>,
}

impl LatticeEmbedding {
    pub fn from_coords(coords: Vec<Vec<i64>>) -> Result<Self, Error> {
        if coords.is_empty() {
            return Err(Error::EmptyInput);
        }
        let dim = coords[0].len();
        for row in &coords {
            if row.len() != dim {
                return Err(Error::VertexCountMismatch {
                    graph: dim,
                    embedding: row.len(),
                });
            }
        }
        let ranges = (0..dim)
            .map(|i| {
                let lo = coords.iter().map(|c| c[i]).min().unwrap();
                let hi = coords.iter().map(|c| c[i]).max().unwrap();
                (lo, hi)
            })
            .collect();
        Ok(LatticeEmbedding { dim, coords, ranges })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertex_count(&self) -> usize {
        self.coords.len()
    }

    pub fn coord(&self, v: usize) -> &[i64] {
        &self.coords[v]
    }

    /// Smallest and largest value taken along each axis.
    pub fn ranges(&self) -> &[(i64, i64)] {
        &self.ranges
    }

    pub fn is_normalized(&self) -> bool {
        self.ranges.iter().all(|&(lo, hi)| lo == 0 && hi >= 1)
    }

    /// L1 distance between two embedded vertices.
    pub fn l1(&self, u: usize, v: usize) -> u64 {
        self.coords[u]
            .iter()
            .zip(&self.coords[v])
            .map(|(&a, &b)| a.abs_diff(b))
            .sum()
    }

    /// One `vertex_id c_0 .. c_{d-1}` line per vertex, in id order.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (v, row) in self.coords.iter().enumerate() {
            out.push_str(&v.to_string());
            for c in row {
                out.push(' ');
                out.push_str(&c.to_string());
            }
            out.push('\n');
        }
        out
    }

    /// Parses the `render` format. Vertex ids may arrive in any order but
    /// must cover `0..n` exactly once, all with the same width.
    pub fn parse(text: &str) -> Result<Self, Error> {
        let mut rows: Vec<(usize, Vec<i64>)> = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            let line_no = idx + 1;
            let body = line.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let mut nums = Vec::new();
            for tok in body.split_whitespace() {
                let Ok(x) = tok.parse::<i64>() else {
                    return Err(Error::MalformedLine {
                        line: line_no,
                        content: line.to_string(),
                    });
                };
                nums.push(x);
            }
            let vertex = nums.remove(0);
            if vertex < 0 {
                return Err(Error::MalformedLine {
                    line: line_no,
                    content: line.to_string(),
                });
            }
            rows.push((vertex as usize, nums));
        }
        if rows.is_empty() {
            return Err(Error::EmptyInput);
        }
        let n = rows.len();
        let mut coords: Vec<Option<Vec<i64>>> = vec![None; n];
        for (v, row) in rows {
            if v >= n || coords[v].is_some() {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            coords[v] = Some(row);
        }
        LatticeEmbedding::from_coords(coords.into_iter().map(|c| c.unwrap()).collect())
    }
}

/// Reads one coordinate per path off the decomposition. For each path the
/// slices `S[2x-1] & S[2x]` (with the full set standing in beyond both
/// ends) must partition the vertices; the slice a vertex falls in is its
/// coordinate along that axis.
pub fn coordinates(pd: &PathDecomposition, fam: &SemicubeFamily) -> Result<LatticeEmbedding, Error> {
    let n = fam.vertex_count();
    let full = Bitset::full(n);
    let mut coords = vec![vec![0i64; pd.dimension()]; n];
    for (axis, path) in pd.paths().iter().enumerate() {
        let l = path.len() - 1;
        let top = l.div_ceil(2);
        let mut covered = Bitset::new(n);
        for x in 0..=top {
            let lo = if x == 0 { &full } else { fam.set(path[2 * x - 1]) };
            let hi = if 2 * x > l { &full } else { fam.set(path[2 * x]) };
            let slice = lo.intersection(hi);
            if slice.intersects(&covered) {
                let vertex = slice.intersection(&covered).iter_ones().next().unwrap();
                return Err(Error::NonUniqueCoordinate { path: axis, vertex });
            }
            covered.or_assign(&slice);
            for v in slice.iter_ones() {
                coords[v][axis] = x as i64;
            }
        }
        if covered != full {
            let miss = (0..n).find(|&v| !covered.contains(v)).unwrap();
            return Err(Error::NoCoordinate { path: axis, vertex: miss });
        }
    }
    let emb = LatticeEmbedding::from_coords(coords)?;
    debug_assert!(emb.is_normalized() || pd.dimension() == 0);
    Ok(emb)
}

/// Compares L1 distance against graph distance on every pair.
pub fn verify_isometry(
    g: &Graph,
    dm: &DistanceMatrix,
    emb: &LatticeEmbedding,
) -> Result<(), Error> {
    let n = g.vertex_count();
    if emb.vertex_count() != n {
        return Err(Error::VertexCountMismatch {
            graph: n,
            embedding: emb.vertex_count(),
        });
    }
    for u in 0..n {
        for v in u + 1..n {
            let l1 = emb.l1(u, v);
            let distance = dm.get(u, v);
            if l1 != distance as u64 {
                return Err(Error::IsometryViolation { u, v, l1, distance });
            }
        }
    }
    Ok(())
}

/// Recovers a maximum matching of the semicube graph from any isometric
/// embedding: for each axis `i` and each interior threshold `g`, the sets
/// `{v : coord_i(v) >= g}` and `{v : coord_i(v) <= g}` are semicubes that
/// cover and overlap, and distinct thresholds touch distinct semicubes.
pub fn matching_from_embedding(
    emb: &LatticeEmbedding,
    fam: &SemicubeFamily,
) -> Result<Matching, Error> {
    let n = emb.vertex_count();
    let mut lookup: HashMap<&Bitset, usize> = HashMap::new();
    for id in 0..fam.semicube_count() {
        lookup.insert(fam.set(id), id);
    }
    let mut pairs = Vec::new();
    for (axis, &(lo, hi)) in emb.ranges().iter().enumerate() {
        for g in lo + 1..hi {
            let mut upper = Bitset::new(n);
            let mut lower = Bitset::new(n);
            for v in 0..n {
                let c = emb.coord(v)[axis];
                if c >= g {
                    upper.insert(v);
                }
                if c <= g {
                    lower.insert(v);
                }
            }
            let &u = lookup
                .get(&upper)
                .ok_or(Error::SemicubeLookupFailed { axis, threshold: g })?;
            let &l = lookup
                .get(&lower)
                .ok_or(Error::SemicubeLookupFailed { axis, threshold: g })?;
            pairs.push((u.min(l), u.max(l)));
        }
    }
    Matching::from_pairs(fam.semicube_count(), pairs)
}

/// Expands an isometric lattice embedding back into a hypercube labeling:
/// axis `i` of width `w` contributes `w` coordinates, bit `g` of which is
/// set when the vertex sits strictly above threshold `g` on that axis.
pub fn hypercube_from_embedding(emb: &LatticeEmbedding) -> HypercubeLabeling {
    let n = emb.vertex_count();
    let tau: usize = emb
        .ranges()
        .iter()
        .map(|&(lo, hi)| (hi - lo) as usize)
        .sum();
    let mut labels = vec![Bitset::new(tau); n];
    let mut offset = 0;
    for (axis, &(lo, hi)) in emb.ranges().iter().enumerate() {
        let width = (hi - lo) as usize;
        for (v, label) in labels.iter_mut().enumerate() {
            let c = emb.coord(v)[axis];
            for g in 0..width {
                if c > lo + g as i64 {
                    label.insert(offset + g);
                }
            }
        }
        offset += width;
    }
    HypercubeLabeling::from_labels(tau, labels)
}
