//! One-call driver for the full embedding pipeline, with per-stage timing.

use std::time::{Duration, Instant};

use crate::cube::{labeling_from_classes, theta_classes, verify_labeling, HypercubeLabeling};
use crate::embed::{coordinates, path_decomposition, verify_isometry, LatticeEmbedding, PathDecomposition};
use crate::error::Error;
use crate::graph::{all_pairs_distances, DistanceMatrix, Graph};
use crate::matching::{maximum_matching, Matching};
use crate::semicube::{build_semicube_graph, semicubes, SemicubeFamily, SemicubeGraph};

/// Wall-clock cost of each pipeline stage.
///
/// `recognition` covers validation, the distance matrix, edge classes and
/// the labeling check; `semicube_graph` the family and its pair sweep;
/// `coordinates` the path decomposition and coordinate extraction. The
/// final isometry check is deliberately outside all four buckets: it
/// re-validates the output rather than producing it.
#[derive(Clone, Copy, Debug, Default)]
pub struct StageTimings {
    pub recognition: Duration,
    pub semicube_graph: Duration,
    pub matching: Duration,
    pub coordinates: Duration,
}

/// Every intermediate artifact of a successful run.
#[derive(Clone, Debug)]
pub struct PipelineOutput {
    pub distances: DistanceMatrix,
    pub labeling: HypercubeLabeling,
    pub family: SemicubeFamily,
    pub semicube_graph: SemicubeGraph,
    pub matching: Matching,
    pub decomposition: PathDecomposition,
    pub embedding: LatticeEmbedding,
    pub timings: StageTimings,
}

impl PipelineOutput {
    pub fn tau(&self) -> usize {
        self.labeling.tau()
    }

    pub fn dimension(&self) -> usize {
        self.embedding.dim()
    }
}

/// Runs recognition, the semicube graph, the matching, and coordinate
/// extraction, then re-checks the result against the distance matrix.
pub fn run_pipeline(g: &Graph) -> Result<PipelineOutput, Error> {
    let t = Instant::now();
    g.validate()?;
    let distances = all_pairs_distances(g);
    let theta = theta_classes(g, &distances);
    let labeling = labeling_from_classes(g, &distances, &theta, 0)?;
    verify_labeling(g, &distances, &labeling)?;
    let recognition = t.elapsed();

    let t = Instant::now();
    let family = semicubes(&labeling);
    let semicube_graph = build_semicube_graph(&family);
    let semicube_graph_time = t.elapsed();

    let t = Instant::now();
    let matching = maximum_matching(&semicube_graph);
    let matching_time = t.elapsed();

    let t = Instant::now();
    let decomposition = path_decomposition(family.semicube_count(), &matching)?;
    let embedding = coordinates(&decomposition, &family)?;
    let coordinates_time = t.elapsed();

    assert_eq!(
        embedding.dim(),
        labeling.tau() - matching.size(),
        "dimension must be tau minus the matching size"
    );
    verify_isometry(g, &distances, &embedding)?;

    Ok(PipelineOutput {
        distances,
        labeling,
        family,
        semicube_graph,
        matching,
        decomposition,
        embedding,
        timings: StageTimings {
            recognition,
            semicube_graph: semicube_graph_time,
            matching: matching_time,
            coordinates: coordinates_time,
        },
    })
}

/// The minimum-dimension lattice embedding of `g`, already verified
/// against all pairwise distances.
pub fn embed(g: &Graph) -> Result<LatticeEmbedding, Error> {
    run_pipeline(g).map(|out| out.embedding)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex_embeds_in_dimension_zero() {
        let g = Graph::from_edges(1, []).unwrap();
        let out = run_pipeline(&g).unwrap();
        assert_eq!(out.tau(), 0);
        assert_eq!(out.dimension(), 0);
        assert_eq!(out.embedding.coord(0), &[] as &[i64]);
    }

    #[test]
    fn single_edge_embeds_on_a_line() {
        let (g, _) = Graph::parse_edge_list("0 1\n").unwrap();
        let emb = embed(&g).unwrap();
        assert_eq!(emb.dim(), 1);
    }

    #[test]
    fn dimension_is_tau_minus_matching() {
        for text in [
            "0 1\n1 2\n2 3\n",
            "0 1\n0 2\n0 3\n",
            "0 1\n0 5\n1 2\n2 3\n3 4\n4 5\n",
        ] {
            let (g, _) = Graph::parse_edge_list(text).unwrap();
            let out = run_pipeline(&g).unwrap();
            assert_eq!(out.dimension(), out.tau() - out.matching.size());
        }
    }

    #[test]
    fn rejects_non_partial_cubes() {
        let (g, _) = Graph::parse_edge_list("0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n").unwrap();
        assert_eq!(embed(&g).unwrap_err().name(), "NotPartialCube");
    }
}
