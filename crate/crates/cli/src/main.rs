//! Command-line front end: embed graphs into integer lattices, draw the
//! result, verify embeddings, generate test graphs, and time the stages.
//!
//! Exit codes: 0 success, 1 usage/IO/other failures, 2 the input is not a
//! partial cube (so no embedding exists), 3 a checked embedding is not
//! isometric.

use std::fmt;
use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use latdim::generate;
use latdim::{
    all_pairs_distances, run_pipeline, verify_isometry, Error, Graph, LatticeEmbedding,
    PipelineOutput,
};

mod svg;

#[derive(Parser)]
#[command(
    name = "latdim",
    version,
    about = "Isometric embeddings of graphs into integer lattices under L1"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    /// Commented header plus one `vertex x0 x1 ..` line per vertex.
    Text,
    /// A single structured object with coordinates and stage statistics.
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute the minimum-dimension lattice embedding of an edge list.
    Embed {
        /// Edge-list file, or `-` for standard input.
        input: String,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
        /// Write here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Refuse graphs with more vertices than this (the distance matrix
        /// needs 2n^2 bytes).
        #[arg(long, default_value_t = 20_000)]
        max_n: usize,
    },
    /// Draw the embedding as a deterministic SVG (up to three axes).
    Render {
        /// Edge-list file, or `-` for standard input.
        input: String,
        #[arg(long)]
        out: Option<PathBuf>,
        /// When the dimension exceeds 3, draw the first three axes anyway.
        #[arg(long)]
        project: bool,
        #[arg(long, default_value_t = 20_000)]
        max_n: usize,
    },
    /// Check that an embedding file reproduces all graph distances.
    Verify {
        /// Edge-list file, or `-` for standard input.
        graph: String,
        /// Coordinate file: `vertex x0 x1 ..` per line.
        embedding: String,
        #[arg(long, default_value_t = 20_000)]
        max_n: usize,
    },
    /// Print the edge list of a named graph family.
    Gen {
        /// path N | cycle N | hypercube K | grid A B | random-tree N [SEED]
        /// | product FACTOR.. (factors like path:3, cycle:6, grid:3x4,
        /// hypercube:2)
        family: String,
        args: Vec<String>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the pipeline over a size sweep and print stage timings.
    Bench {
        /// grids (sizes are side lengths) | trees (sizes are vertex
        /// counts) | k2
        family: String,
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

enum CliError {
    Core(Error),
    Io { path: String, source: std::io::Error },
    DimensionTooHigh { dim: usize },
    Usage(String),
}

impl CliError {
    fn name(&self) -> &'static str {
        match self {
            CliError::Core(e) => e.name(),
            CliError::Io { .. } => "Io",
            CliError::DimensionTooHigh { .. } => "DimensionTooHigh",
            CliError::Usage(_) => "Usage",
        }
    }

    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) => match e {
                Error::Disconnected { .. }
                | Error::NotBipartite { .. }
                | Error::InconsistentClass { .. }
                | Error::NotPartialCube { .. }
                | Error::NotFullDimensional { .. } => 2,
                Error::IsometryViolation { .. } => 3,
                _ => 1,
            },
            _ => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io { path, source } => write!(f, "{path}: {source}"),
            CliError::DimensionTooHigh { dim } => write!(
                f,
                "the embedding needs {dim} axes but svg output stops at 3 \
                 (pass --project to draw the first three axes only)"
            ),
            CliError::Usage(msg) => write!(f, "{msg}"),
        }
    }
}

fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|source| CliError::Io {
                path: "<stdin>".into(),
                source,
            })?;
        Ok(text)
    } else {
        fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.into(),
            source,
        })
    }
}

fn load_graph(path: &str, max_n: usize) -> Result<Graph, CliError> {
    let text = read_input(path)?;
    let (g, warnings) = Graph::parse_edge_list(&text).map_err(CliError::Core)?;
    for w in &warnings {
        eprintln!("warning: {w}");
    }
    if g.vertex_count() > max_n {
        return Err(CliError::Core(Error::TooLarge {
            size: g.vertex_count(),
            max: max_n,
        }));
    }
    Ok(g)
}

fn write_output(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn embed_report_text(g: &Graph, r: &PipelineOutput) -> String {
    let mut s = format!(
        "# vertices {}\n# edges {}\n# tau {}\n# matching {}\n# dimension {}\n",
        g.vertex_count(),
        g.edge_count(),
        r.tau(),
        r.matching.size(),
        r.embedding.dim(),
    );
    s.push_str(&r.embedding.render());
    s
}

fn embed_report_json(g: &Graph, r: &PipelineOutput) -> String {
    // serde_json objects are ordered maps keyed alphabetically, so the
    // bytes are reproducible; stage times are deliberately left out for
    // the same reason
    let value = serde_json::json!({
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "tau": r.tau(),
        "matching_size": r.matching.size(),
        "dimension": r.embedding.dim(),
        "ranges": r.embedding.ranges(),
        "paths": r.decomposition.paths(),
        "coordinates": (0..g.vertex_count())
            .map(|v| r.embedding.coord(v).to_vec())
            .collect::<Vec<_>>(),
    });
    let mut s = serde_json::to_string_pretty(&value).expect("static json structure");
    s.push('\n');
    s
}

fn cmd_embed(
    input: &str,
    format: OutputFormat,
    out: Option<&Path>,
    max_n: usize,
) -> Result<(), CliError> {
    let g = load_graph(input, max_n)?;
    let r = run_pipeline(&g).map_err(CliError::Core)?;
    let text = match format {
        OutputFormat::Text => embed_report_text(&g, &r),
        OutputFormat::Json => embed_report_json(&g, &r),
    };
    write_output(out, &text)
}

fn cmd_render(
    input: &str,
    out: Option<&Path>,
    project: bool,
    max_n: usize,
) -> Result<(), CliError> {
    let g = load_graph(input, max_n)?;
    let r = run_pipeline(&g).map_err(CliError::Core)?;
    let emb = if r.embedding.dim() <= 3 {
        r.embedding
    } else if project {
        let coords = (0..g.vertex_count())
            .map(|v| r.embedding.coord(v)[..3].to_vec())
            .collect();
        LatticeEmbedding::from_coords(coords).map_err(CliError::Core)?
    } else {
        return Err(CliError::DimensionTooHigh {
            dim: r.embedding.dim(),
        });
    };
    write_output(out, &svg::render(&g, &emb))
}

fn cmd_verify(graph: &str, embedding: &str, max_n: usize) -> Result<(), CliError> {
    let g = load_graph(graph, max_n)?;
    g.validate().map_err(CliError::Core)?;
    let emb = LatticeEmbedding::parse(&read_input(embedding)?).map_err(CliError::Core)?;
    let dm = all_pairs_distances(&g);
    verify_isometry(&g, &dm, &emb).map_err(CliError::Core)?;
    println!(
        "ok: {} vertices, dimension {}, all pairwise distances match",
        g.vertex_count(),
        emb.dim()
    );
    Ok(())
}

fn usize_arg(args: &[String], i: usize, what: &str) -> Result<usize, CliError> {
    args.get(i)
        .ok_or_else(|| CliError::Usage(format!("missing {what}")))?
        .parse()
        .map_err(|_| CliError::Usage(format!("{what} must be a non-negative integer")))
}

/// Parses a product factor such as `path:4`, `cycle:6`, `hypercube:2`,
/// or `grid:3x4`.
fn parse_factor(token: &str) -> Result<Graph, CliError> {
    let bad = || CliError::Usage(format!("bad product factor '{token}'"));
    let (family, params) = token.split_once(':').ok_or_else(bad)?;
    let g = match family {
        "path" => generate::path(params.parse().map_err(|_| bad())?),
        "cycle" => generate::cycle(params.parse().map_err(|_| bad())?),
        "hypercube" => generate::hypercube(params.parse().map_err(|_| bad())?),
        "grid" => {
            let (a, b) = params.split_once('x').ok_or_else(bad)?;
            generate::grid(
                a.parse().map_err(|_| bad())?,
                b.parse().map_err(|_| bad())?,
            )
        }
        _ => return Err(bad()),
    };
    g.map_err(CliError::Core)
}

fn cmd_gen(
    family: &str,
    args: &[String],
    seed: Option<u64>,
    out: Option<&Path>,
) -> Result<(), CliError> {
    let g = match family {
        "path" => generate::path(usize_arg(args, 0, "path length N")?),
        "cycle" => generate::cycle(usize_arg(args, 0, "cycle length N")?),
        "hypercube" => {
            generate::hypercube(usize_arg(args, 0, "hypercube dimension K")? as u32)
        }
        "grid" => generate::grid(
            usize_arg(args, 0, "grid width A")?,
            usize_arg(args, 1, "grid height B")?,
        ),
        "random-tree" => {
            let n = usize_arg(args, 0, "tree size N")?;
            let s = match args.get(1) {
                Some(tok) => tok
                    .parse()
                    .map_err(|_| CliError::Usage("tree seed must be an integer".into()))?,
                None => seed.unwrap_or(0),
            };
            generate::random_tree(n, s)
        }
        "product" => {
            if args.is_empty() {
                return Err(CliError::Usage(
                    "product needs at least one factor such as path:3".into(),
                ));
            }
            let factors = args
                .iter()
                .map(|s| parse_factor(s))
                .collect::<Result<Vec<_>, _>>()?;
            generate::product(&factors)
        }
        other => {
            return Err(CliError::Usage(format!(
                "unknown family '{other}' (expected path, cycle, hypercube, grid, \
                 random-tree, or product)"
            )))
        }
    }
    .map_err(CliError::Core)?;
    write_output(out, &g.render_edge_list())
}

fn bench_row(label: &str, g: &Graph) {
    let n = g.vertex_count();
    let m = g.edge_count();
    match run_pipeline(g) {
        Ok(r) => {
            let rec = r.timings.recognition.as_micros();
            let sc = r.timings.semicube_graph.as_micros();
            let mat = r.timings.matching.as_micros();
            let coo = r.timings.coordinates.as_micros();
            println!(
                "{label} {n} {m} {tau} {msize} {dim} {rec} {sc} {mat} {coo} {total} ok",
                tau = r.tau(),
                msize = r.matching.size(),
                dim = r.embedding.dim(),
                total = rec + sc + mat + coo,
            );
        }
        Err(e) => {
            println!("{label} {n} {m} 0 0 0 0 0 0 0 0 {}", e.name());
        }
    }
}

fn cmd_bench(family: &str, sizes: &[usize], seed: u64) -> Result<(), CliError> {
    println!(
        "family n m tau matching dim recognize_us scgraph_us matching_us coords_us total_us status"
    );
    match family {
        "grids" => {
            for &a in sizes {
                let g = generate::grid(a, a).map_err(CliError::Core)?;
                bench_row("grid", &g);
            }
        }
        "trees" => {
            for &n in sizes {
                let g = generate::random_tree(n, seed).map_err(CliError::Core)?;
                bench_row("tree", &g);
            }
        }
        "k2" => {
            let g = generate::path(2).map_err(CliError::Core)?;
            bench_row("k2", &g);
        }
        other => {
            return Err(CliError::Usage(format!(
                "unknown bench family '{other}' (expected grids, trees, or k2)"
            )))
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.cmd {
        Cmd::Embed {
            input,
            format,
            out,
            max_n,
        } => cmd_embed(&input, format, out.as_deref(), max_n),
        Cmd::Render {
            input,
            out,
            project,
            max_n,
        } => cmd_render(&input, out.as_deref(), project, max_n),
        Cmd::Verify {
            graph,
            embedding,
            max_n,
        } => cmd_verify(&graph, &embedding, max_n),
        Cmd::Gen {
            family,
            args,
            seed,
            out,
        } => cmd_gen(&family, &args, seed, out.as_deref()),
        Cmd::Bench {
            family,
            sizes,
            seed,
        } => cmd_bench(&family, &sizes, seed),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let ok = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let _ = e.print();
            return ExitCode::from(if ok { 0 } else { 1 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}: {e}", e.name());
            ExitCode::from(e.exit_code())
        }
    }
}
