use std::fmt;

/// Everything that can go wrong across the pipeline.
///
/// [`Error::name`] returns a stable, machine-readable tag for each variant;
/// the CLI prints it as the first token of every diagnostic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// An edge-list line that is not two vertex ids.
    MalformedLine { line: usize, content: String },
    /// An edge from a vertex to itself.
    SelfLoop { vertex: usize },
    /// No edges at all in the input.
    EmptyInput,
    /// An edge endpoint at or beyond the declared vertex count.
    VertexOutOfRange { vertex: usize, n: usize },
    /// A generator or command was handed unusable parameters.
    InvalidParameter(String),
    /// `vertex` is unreachable from vertex 0.
    Disconnected { vertex: usize },
    /// An odd cycle was found through `vertex`.
    NotBipartite { vertex: usize },
    /// A vertex came out equidistant from a class's defining edge, so the
    /// side split is ill-defined. Bipartite inputs never trigger this.
    InconsistentClass { class: usize, vertex: usize },
    /// The labeling is not an isometry: label distance and graph distance
    /// disagree on the pair `(u, v)`.
    NotPartialCube {
        u: usize,
        v: usize,
        hamming: usize,
        distance: usize,
    },
    /// Some label coordinate never takes both values.
    NotFullDimensional { coordinate: usize },
    /// A claimed matching reuses `vertex`.
    NotAMatching { vertex: usize },
    /// A claimed maximum matching is beaten by a larger one.
    NotMaximum { found: usize, maximum: usize },
    /// An exhaustive search was asked to exceed its size cap.
    TooLarge { size: usize, max: usize },
    /// Matching plus complement edges closed a cycle instead of forming
    /// paths; impossible for matchings that come out of a semicube graph.
    CycleDetected,
    /// A vertex landed in two coordinate slots of one path.
    NonUniqueCoordinate { path: usize, vertex: usize },
    /// A vertex landed in no coordinate slot of some path.
    NoCoordinate { path: usize, vertex: usize },
    /// L1 distance and graph distance disagree on the pair `(u, v)`.
    IsometryViolation {
        u: usize,
        v: usize,
        l1: u64,
        distance: usize,
    },
    /// A set derived from an embedding matches no semicube.
    SemicubeLookupFailed { axis: usize, threshold: i64 },
    /// An embedding covers a different number of vertices than the graph.
    VertexCountMismatch { graph: usize, embedding: usize },
}

impl Error {
    /// Stable diagnostic tag, one per variant.
    pub fn name(&self) -> &'static str {
        match self {
            Error::MalformedLine { .. } => "MalformedLine",
            Error::SelfLoop { .. } => "SelfLoop",
            Error::EmptyInput => "EmptyInput",
            Error::VertexOutOfRange { .. } => "VertexOutOfRange",
            Error::InvalidParameter(_) => "InvalidParameter",
            Error::Disconnected { .. } => "Disconnected",
            Error::NotBipartite { .. } => "NotBipartite",
            Error::InconsistentClass { .. } => "InconsistentClass",
            Error::NotPartialCube { .. } => "NotPartialCube",
            Error::NotFullDimensional { .. } => "NotFullDimensional",
            Error::NotAMatching { .. } => "NotAMatching",
            Error::NotMaximum { .. } => "NotMaximum",
            Error::TooLarge { .. } => "TooLarge",
            Error::CycleDetected => "CycleDetected",
            Error::NonUniqueCoordinate { .. } => "NonUniqueCoordinate",
            Error::NoCoordinate { .. } => "NoCoordinate",
            Error::IsometryViolation { .. } => "IsometryViolation",
            Error::SemicubeLookupFailed { .. } => "SemicubeLookupFailed",
            Error::VertexCountMismatch { .. } => "VertexCountMismatch",
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::MalformedLine { line, content } => {
                write!(f, "line {line} is not an edge: {content:?}")
            }
            Error::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            Error::EmptyInput => write!(f, "no edges in input"),
            Error::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for {n} vertices")
            }
            Error::InvalidParameter(msg) => write!(f, "{msg}"),
            Error::Disconnected { vertex } => {
                write!(f, "vertex {vertex} is unreachable from vertex 0")
            }
            Error::NotBipartite { vertex } => {
                write!(f, "graph has an odd cycle through vertex {vertex}")
            }
            Error::InconsistentClass { class, vertex } => write!(
                f,
                "vertex {vertex} is equidistant from the defining edge of class {class}"
            ),
            Error::NotPartialCube {
                u,
                v,
                hamming,
                distance,
            } => write!(
                f,
                "label distance {hamming} != graph distance {distance} for pair ({u}, {v})"
            ),
            Error::NotFullDimensional { coordinate } => {
                write!(f, "label coordinate {coordinate} is constant")
            }
            Error::NotAMatching { vertex } => {
                write!(f, "vertex {vertex} appears in more than one matched edge")
            }
            Error::NotMaximum { found, maximum } => {
                write!(f, "matching of size {found} beaten by one of size {maximum}")
            }
            Error::TooLarge { size, max } => {
                write!(f, "size {size} exceeds the exhaustive-search cap {max}")
            }
            Error::CycleDetected => {
                write!(f, "matching and complement edges close a cycle")
            }
            Error::NonUniqueCoordinate { path, vertex } => {
                write!(f, "vertex {vertex} has two coordinates along path {path}")
            }
            Error::NoCoordinate { path, vertex } => {
                write!(f, "vertex {vertex} has no coordinate along path {path}")
            }
            Error::IsometryViolation {
                u,
                v,
                l1,
                distance,
            } => write!(
                f,
                "L1 distance {l1} != graph distance {distance} for pair ({u}, {v})"
            ),
            Error::SemicubeLookupFailed { axis, threshold } => write!(
                f,
                "no semicube matches axis {axis} at threshold {threshold}"
            ),
            Error::VertexCountMismatch { graph, embedding } => write!(
                f,
                "graph has {graph} vertices but embedding covers {embedding}"
            ),
        }
    }
}

impl std::error::Error for Error {}
