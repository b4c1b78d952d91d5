//! Partial-cube recognition: edge classes, hypercube labelings, and the
//! isometry check that accepts or rejects a graph.
//!
//! Two edges are related when they "cut" the vertex set the same way: for an
//! edge `uv`, let `W(u,v)` be the vertices strictly closer to `u` than to
//! `v`. Every edge with exactly one endpoint in `W(u,v)` cuts along the same
//! side split as `uv`. On a partial cube these classes partition the edges,
//! one class per hypercube coordinate, and the side containing a vertex
//! gives that vertex's bit.

use crate::bitset::Bitset;
use crate::error::Error;
use crate::graph::{DistanceMatrix, Graph};

/// The edge partition produced by [`theta_classes`].
#[derive(Clone, Debug)]
pub struct ThetaClasses {
    /// Edge indices per class, in discovery order.
    pub classes: Vec<Vec<usize>>,
    /// The edge whose side split defines each class.
    pub defining: Vec<(usize, usize)>,
}

impl ThetaClasses {
    pub fn count(&self) -> usize {
        self.classes.len()
    }
}

/// Partitions the edges by their side splits in `O(m * n)`: pick the first
/// unclassified edge, compute its `W` side from two distance rows, sweep all
/// edges for those with exactly one endpoint inside, repeat.
///
/// On graphs that are not partial cubes an edge may qualify for several
/// splits; the first one wins and [`verify_labeling`] catches the fallout.
pub fn theta_classes(g: &Graph, dm: &DistanceMatrix) -> ThetaClasses {
    let m = g.edge_count();
    let mut class_of = vec![usize::MAX; m];
    let mut classes = Vec::new();
    let mut defining = Vec::new();
    let mut side = vec![false; g.vertex_count()];
    for e in 0..m {
        if class_of[e] != usize::MAX {
            continue;
        }
        let (u, v) = g.edges()[e];
        for (w, s) in side.iter_mut().enumerate() {
            *s = dm.get(w, u) < dm.get(w, v);
        }
        let id = classes.len();
        let mut members = Vec::new();
        for (f, &(x, y)) in g.edges().iter().enumerate() {
            if class_of[f] == usize::MAX && side[x] != side[y] {
                class_of[f] = id;
                members.push(f);
            }
        }
        classes.push(members);
        defining.push((u, v));
    }
    ThetaClasses { classes, defining }
}

/// A vertex-to-hypercube-address map: `tau` bits per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypercubeLabeling {
    tau: usize,
    labels: Vec<Bitset>,
}

impl HypercubeLabeling {
    pub fn from_labels(tau: usize, labels: Vec<Bitset>) -> Self {
        debug_assert!(labels.iter().all(|l| l.len() == tau));
        HypercubeLabeling { tau, labels }
    }

    /// Number of hypercube coordinates.
    pub fn tau(&self) -> usize {
        self.tau
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, v: usize) -> &Bitset {
        &self.labels[v]
    }

    pub fn bit(&self, v: usize, coordinate: usize) -> bool {
        self.labels[v].contains(coordinate)
    }

    /// Number of coordinates where the labels of `u` and `v` differ.
    pub fn hamming(&self, u: usize, v: usize) -> usize {
        self.labels[u].hamming(&self.labels[v])
    }

    /// Groups the graph's edges by the coordinate they flip. Errors if some
    /// edge flips zero or several coordinates, which cannot happen on a
    /// labeling that passed [`verify_labeling`].
    pub fn edge_classes(&self, g: &Graph) -> Result<Vec<Vec<(usize, usize)>>, Error> {
        let mut out = vec![Vec::new(); self.tau];
        for &(u, v) in g.edges() {
            let mut flipped = None;
            for i in 0..self.tau {
                if self.bit(u, i) != self.bit(v, i) {
                    if flipped.is_some() {
                        return Err(Error::NotPartialCube {
                            u,
                            v,
                            hamming: self.hamming(u, v),
                            distance: 1,
                        });
                    }
                    flipped = Some(i);
                }
            }
            match flipped {
                Some(i) => out[i].push((u, v)),
                None => {
                    return Err(Error::NotPartialCube {
                        u,
                        v,
                        hamming: 0,
                        distance: 1,
                    })
                }
            }
        }
        Ok(out)
    }
}

/// Derives the labeling from an edge partition: coordinate `i` of vertex
/// `w` is 0 exactly when `w` falls on `base`'s side of class `i`'s split,
/// so `base` maps to the all-zeros address.
///
/// Adjacent vertices are never equidistant from a third vertex in a
/// bipartite graph; the `InconsistentClass` error guards that assumption.
pub fn labeling_from_classes(
    g: &Graph,
    dm: &DistanceMatrix,
    theta: &ThetaClasses,
    base: usize,
) -> Result<HypercubeLabeling, Error> {
    let n = g.vertex_count();
    let tau = theta.count();
    let mut labels = vec![Bitset::new(tau); n];
    for (i, &(u, v)) in theta.defining.iter().enumerate() {
        let (nearer, farther) = match dm.get(base, u).cmp(&dm.get(base, v)) {
            std::cmp::Ordering::Less => (u, v),
            std::cmp::Ordering::Greater => (v, u),
            std::cmp::Ordering::Equal => {
                return Err(Error::InconsistentClass { class: i, vertex: base })
            }
        };
        for (w, label) in labels.iter_mut().enumerate() {
            match dm.get(w, nearer).cmp(&dm.get(w, farther)) {
                std::cmp::Ordering::Less => {}
                std::cmp::Ordering::Greater => label.insert(i),
                std::cmp::Ordering::Equal => {
                    return Err(Error::InconsistentClass { class: i, vertex: w })
                }
            }
        }
    }
    Ok(HypercubeLabeling::from_labels(tau, labels))
}

/// Checks that label distance equals graph distance on every vertex pair
/// and that every coordinate takes both values somewhere.
pub fn verify_labeling(
    g: &Graph,
    dm: &DistanceMatrix,
    lab: &HypercubeLabeling,
) -> Result<(), Error> {
    let n = g.vertex_count();
    if lab.vertex_count() != n {
        return Err(Error::VertexCountMismatch {
            graph: n,
            embedding: lab.vertex_count(),
        });
    }
    for i in 0..lab.tau() {
        let ones = (0..n).filter(|&v| lab.bit(v, i)).count();
        if ones == 0 || ones == n {
            return Err(Error::NotFullDimensional { coordinate: i });
        }
    }
    for u in 0..n {
        for v in u + 1..n {
            let hamming = lab.hamming(u, v);
            let distance = dm.get(u, v);
            if hamming != distance {
                return Err(Error::NotPartialCube {
                    u,
                    v,
                    hamming,
                    distance,
                });
            }
        }
    }
    Ok(())
}

/// Decides whether `g` is a partial cube. On success returns the labeling
/// with base vertex 0 at the all-zeros address; otherwise reports why the
/// graph cannot embed.
pub fn recognize(g: &Graph) -> Result<HypercubeLabeling, Error> {
    g.validate()?;
    let dm = crate::graph::all_pairs_distances(g);
    let theta = theta_classes(g, &dm);
    let lab = labeling_from_classes(g, &dm, &theta, 0)?;
    verify_labeling(g, &dm, &lab)?;
    Ok(lab)
}
