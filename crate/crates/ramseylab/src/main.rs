use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use ramseylab::search::RamseyCertificate;
use ramseylab::{
    arrows, balance_report, balanced_trace, chase_trace, greedy_embed, pentagon_coloring,
    product_coloring, ramsey_number, random_coloring, random_lb_witness, turan_coloring,
    verify_free_in_family, ArrowsOutcome, EdgeColoring, FreeTranscript, Graph, PatternSpec,
    SearchError, SearchLimits, DEFAULT_ATTEMPTS,
};

const PATTERN_HELP: &str = "\
Pattern specs take the form kind:params.
  clique:K     complete graph K_K
  path:N       path on N vertices
  cycle:N      cycle on N >= 3 vertices
  hkn:K,N      K-clique plus N-K isolated vertices
  gkn:K,N      hkn:K,N plus an apex joined to all N of its vertices
  hprime:K,N   N/K disjoint K-cliques (K divides N)
  file:PATH    graph read from PATH in GRAPH text format";

#[derive(Parser)]
#[command(
    name = "ramseylab",
    version,
    about = "Ramsey witnesses, arrowing searches, and balance analytics",
    after_help = PATTERN_HELP
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named coloring family
    Construct {
        #[command(subcommand)]
        family: ConstructCmd,
    },
    /// Check a coloring for monochromatic copies of a pattern
    Verify {
        /// RCOL coloring file
        #[arg(long)]
        coloring: PathBuf,
        /// Pattern spec (see --help)
        #[arg(long)]
        pattern: String,
    },
    /// Decide whether K_n arrows the pattern in q colors
    Arrow {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u8,
        /// Search size cap (default RAMSEYLAB_MAX_N, then 16)
        #[arg(long)]
        max_n: Option<usize>,
        /// Worker threads for the decision search
        #[arg(long)]
        workers: Option<usize>,
        /// Write the avoiding coloring here when one exists
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Compute the Ramsey number of the pattern with a certificate
    Ramsey {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        q: u8,
        /// Search size cap (default RAMSEYLAB_MAX_N, then 16)
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        workers: Option<usize>,
        /// Write the certificate directory here
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Sample random colorings for a deletion lower-bound witness
    LbRandom {
        #[arg(long)]
        pattern: String,
        /// Minimum-degree parameter; samples use N = ceil(2^(d/2))
        #[arg(long)]
        d: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        attempts: Option<usize>,
        #[arg(long)]
        max_n: Option<usize>,
        /// Write the witness coloring here when one is found
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print the balance report of a 2-coloring
    Analyze {
        #[arg(long)]
        coloring: PathBuf,
        /// Also run the common-neighborhood trace against this pattern
        #[arg(long)]
        pattern: Option<String>,
    },
    /// Print the neighborhood-chase trace of a 2-coloring
    Chase {
        #[arg(long)]
        coloring: PathBuf,
    },
    /// Greedily embed a d-degenerate guest into a dense host
    Embed {
        #[arg(long)]
        guest: String,
        #[arg(long)]
        host: String,
        #[arg(long)]
        d: usize,
    },
    /// Run the vertex-deletion gap pipeline end to end
    ReproduceMain {
        /// Directory for certificates and colorings
        #[arg(long, default_value = ".")]
        workdir: PathBuf,
        #[arg(long, requires = "n")]
        k: Option<usize>,
        #[arg(long, requires = "k")]
        n: Option<usize>,
        /// Use the 3-color product pipeline instead
        #[arg(long, conflicts_with_all = ["k", "n"])]
        multicolor: bool,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        workers: Option<usize>,
    },
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// k blocks of n vertices: within-block red, cross-block blue
    Turan {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Blow each base vertex up to an n-block, within-block edges in a fresh color
    Product {
        /// RCOL file with the base coloring
        #[arg(long)]
        base: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Uniform seeded coloring
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u8,
        #[arg(long)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

struct Failure {
    code: u8,
    message: String,
}

fn input_err(e: impl std::fmt::Display) -> Failure {
    Failure {
        code: 2,
        message: e.to_string(),
    }
}

fn search_err(e: SearchError) -> Failure {
    let code = match e {
        SearchError::LimitExceeded { .. } | SearchError::NoArrowingWithinLimit { .. } => 3,
        _ => 2,
    };
    Failure {
        code,
        message: e.to_string(),
    }
}

fn file_err(path: &Path, e: impl std::fmt::Display) -> Failure {
    Failure {
        code: 2,
        message: format!("{}: {}", path.display(), e),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(Failure { code, message }) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}

fn parse_pattern(spec: &str) -> Result<(PatternSpec, Graph), Failure> {
    let spec: PatternSpec = spec.parse().map_err(input_err)?;
    let graph = spec.build().map_err(input_err)?;
    Ok((spec, graph))
}

fn read_coloring(path: &Path) -> Result<EdgeColoring, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| file_err(path, e))?;
    EdgeColoring::parse(&text).map_err(|e| file_err(path, e))
}

fn resolve_limits(max_n: Option<usize>, workers: Option<usize>) -> Result<SearchLimits, Failure> {
    let mut limits = SearchLimits::default();
    match max_n {
        Some(m) => limits.max_n = m,
        None => {
            if let Ok(raw) = std::env::var("RAMSEYLAB_MAX_N") {
                limits.max_n = raw.parse().map_err(|_| {
                    input_err(format!("RAMSEYLAB_MAX_N: `{raw}` is not a vertex count"))
                })?;
            }
        }
    }
    if let Some(w) = workers {
        limits.workers = w;
    }
    if limits.max_n == 0 || limits.workers == 0 {
        return Err(input_err("limits must be positive"));
    }
    Ok(limits)
}

fn write_artifact(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| file_err(path, e))?;
    println!("wrote: {}", path.display());
    Ok(())
}

fn print_coloring_summary(c: &EdgeColoring) {
    println!("vertices: {}", c.vertex_count());
    println!("colors: {}", c.color_count());
    let counts = c
        .color_counts()
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ");
    println!("color_counts: {counts}");
}

fn print_transcript(transcript: &FreeTranscript) {
    for (c, copy) in transcript.per_color.iter().enumerate() {
        match copy {
            None => println!("color {c}: free"),
            Some(emb) => {
                let map = emb
                    .map
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(" ");
                println!("color {c}: copy {map}");
            }
        }
    }
    println!(
        "verdict: {}",
        if transcript.free() { "free" } else { "copy" }
    );
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Construct { family } => run_construct(family),
        Command::Verify { coloring, pattern } => {
            let c = read_coloring(&coloring)?;
            let (spec, _) = parse_pattern(&pattern)?;
            let transcript = verify_free_in_family(&c, &spec).map_err(input_err)?;
            println!("vertices: {}", c.vertex_count());
            println!("pattern: {spec}");
            print_transcript(&transcript);
            Ok(if transcript.free() { 0 } else { 1 })
        }
        Command::Arrow {
            pattern,
            n,
            q,
            max_n,
            workers,
            output,
        } => {
            let (spec, graph) = parse_pattern(&pattern)?;
            let limits = resolve_limits(max_n, workers)?;
            let outcome = arrows(n, &graph, q, &limits).map_err(search_err)?;
            println!("pattern: {spec}");
            println!("n: {n}");
            println!("q: {q}");
            match outcome {
                ArrowsOutcome::Arrows => {
                    println!("arrows: true");
                    Ok(0)
                }
                ArrowsOutcome::Avoidable(witness) => {
                    println!("arrows: false");
                    if let Some(path) = output {
                        write_artifact(&path, &witness.to_text())?;
                    }
                    Ok(1)
                }
            }
        }
        Command::Ramsey {
            pattern,
            q,
            max_n,
            workers,
            output,
        } => {
            let (spec, graph) = parse_pattern(&pattern)?;
            let limits = resolve_limits(max_n, workers)?;
            let cert = ramsey_number(&graph, q, &limits).map_err(search_err)?;
            println!("pattern: {spec}");
            println!("q: {q}");
            println!("value: {}", cert.value);
            println!("witness_vertices: {}", cert.witness.vertex_count());
            if let Some(dir) = output {
                cert.write_dir(&dir).map_err(|e| file_err(&dir, e))?;
                println!("wrote: {}", dir.display());
            }
            Ok(0)
        }
        Command::LbRandom {
            pattern,
            d,
            seed,
            attempts,
            max_n,
            output,
        } => {
            let (spec, graph) = parse_pattern(&pattern)?;
            let limits = resolve_limits(max_n, None)?;
            let attempts = attempts.unwrap_or(DEFAULT_ATTEMPTS);
            if attempts == 0 {
                return Err(input_err("limits must be positive"));
            }
            let witness =
                random_lb_witness(&graph, d, attempts, seed, &limits).map_err(search_err)?;
            println!("pattern: {spec}");
            println!("d: {d}");
            match witness {
                Some(w) => {
                    println!("witness: found");
                    println!("witness_vertices: {}", w.vertex_count());
                    if let Some(path) = output {
                        write_artifact(&path, &w.to_text())?;
                    }
                    Ok(0)
                }
                None => {
                    println!("witness: none");
                    Ok(1)
                }
            }
        }
        Command::Analyze { coloring, pattern } => {
            let c = read_coloring(&coloring)?;
            let report = balance_report(&c).map_err(input_err)?;
            println!("{report}");
            if let Some(pattern) = pattern {
                let (spec, graph) = parse_pattern(&pattern)?;
                let trace = balanced_trace(&c, &graph).map_err(input_err)?;
                println!();
                println!("pattern: {spec}");
                println!("{trace}");
            }
            Ok(0)
        }
        Command::Chase { coloring } => {
            let c = read_coloring(&coloring)?;
            let trace = chase_trace(&c).map_err(input_err)?;
            println!("{trace}");
            Ok(0)
        }
        Command::Embed { guest, host, d } => {
            let (guest_spec, guest) = parse_pattern(&guest)?;
            let (host_spec, host) = parse_pattern(&host)?;
            let emb = greedy_embed(&guest, &host, d).map_err(input_err)?;
            println!("guest: {guest_spec}");
            println!("host: {host_spec}");
            println!("d: {d}");
            let map = emb
                .map
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" ");
            println!("map: {map}");
            Ok(0)
        }
        Command::ReproduceMain {
            workdir,
            k,
            n,
            multicolor,
            max_n,
            workers,
        } => {
            let limits = resolve_limits(max_n, workers)?;
            run_reproduce_main(&workdir, k.unwrap_or(3), n.unwrap_or(6), multicolor, &limits)
        }
    }
}

fn run_construct(family: ConstructCmd) -> Result<u8, Failure> {
    let (coloring, output) = match family {
        ConstructCmd::Turan { k, n, output } => {
            (turan_coloring(k, n).map_err(input_err)?, output)
        }
        ConstructCmd::Product { base, n, output } => {
            let base = read_coloring(&base)?;
            (product_coloring(&base, n).map_err(input_err)?, output)
        }
        ConstructCmd::Random { n, q, seed, output } => {
            (random_coloring(n, q, seed).map_err(input_err)?, output)
        }
    };
    print_coloring_summary(&coloring);
    if let Some(path) = output {
        write_artifact(&path, &coloring.to_text())?;
    }
    Ok(0)
}

/// The gap pipeline. Certifies r(H) by search, builds the counterexample
/// coloring, verifies it pattern-free, then recomputes every printed
/// inequality from the files on disk rather than in-memory values.
fn run_reproduce_main(
    workdir: &Path,
    k: usize,
    n: usize,
    multicolor: bool,
    limits: &SearchLimits,
) -> Result<u8, Failure> {
    std::fs::create_dir_all(workdir).map_err(|e| file_err(workdir, e))?;
    let (q, h_spec, g_spec) = if multicolor {
        (
            3u8,
            PatternSpec::Hkn { k: 2, n: 3 },
            PatternSpec::Gkn { k: 2, n: 3 },
        )
    } else {
        (2u8, PatternSpec::Hkn { k, n }, PatternSpec::Gkn { k, n })
    };
    let h = h_spec.build().map_err(input_err)?;

    let cert_dir = workdir.join("cert-h");
    ramsey_number(&h, q, limits)
        .map_err(search_err)?
        .write_dir(&cert_dir)
        .map_err(|e| file_err(&cert_dir, e))?;

    let rcol_path = workdir.join(if multicolor {
        "product.rcol"
    } else {
        "turan.rcol"
    });
    let built = if multicolor {
        product_coloring(&pentagon_coloring(), 3).map_err(input_err)?
    } else {
        turan_coloring(k, n).map_err(input_err)?
    };
    std::fs::write(&rcol_path, built.to_text()).map_err(|e| file_err(&rcol_path, e))?;
    drop(built);

    // everything below reads back from disk: the certificate files are the
    // source of truth for the final inequalities
    let cert = RamseyCertificate::read_dir(&cert_dir).map_err(|e| file_err(&cert_dir, e))?;
    if !cert.verify_witness() {
        return Err(Failure {
            code: 1,
            message: format!("certificate in {} fails verification", cert_dir.display()),
        });
    }
    let coloring = read_coloring(&rcol_path)?;
    let transcript = verify_free_in_family(&coloring, &g_spec).map_err(input_err)?;

    println!("pipeline: {}", if multicolor { "multicolor" } else { "main" });
    if multicolor {
        println!("construction: product(pentagon, 3)");
    } else {
        println!("k: {k}");
        println!("n: {n}");
        println!("construction: turan({k}, {n})");
    }
    println!("q: {q}");
    println!("r_H: {}", cert.value);
    println!("construction_vertices: {}", coloring.vertex_count());
    println!("free_of: {g_spec}");
    print_transcript(&transcript);
    if !transcript.free() {
        return Ok(1);
    }
    let r_h = cert.value;
    let r_g_lb = coloring.vertex_count() + 1;
    println!("r_G_lower_bound: {r_g_lb}");
    if multicolor {
        println!("comparison: {r_g_lb} > {r_h} = r_H");
    } else if r_g_lb > k * r_h {
        println!("comparison: {r_g_lb} > {} = k * r_H", k * r_h);
    } else {
        println!("comparison: {r_g_lb} <= {} = k * r_H (no gap at this scale)", k * r_h);
    }
    println!("ratio_lb: {:.4}", r_g_lb as f64 / r_h as f64);
    Ok(0)
}
