//! `luvgraph` command-line interface.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 verification failure,
//! 3 solver inconclusive.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};

use luvgraph::args::{
    parse_component_groups, parse_list_of_lists, parse_u32_list, parse_vertex_pairs,
};
use luvgraph::document::{load_file, save, GraphDocument, HistoryEntry, Metadata};
use luvgraph::dot::export_dot;
use luvgraph::lau::{build_lau, canonical_labeling, expected_spectrum, LauParams, LauSpec};
use luvgraph::solver::{chi_la_exact, SearchConfig, SolveOutcome};
use luvgraph::transform::{
    build_gcl, contiguous_groups, edge_swap, find_swap_sets, merge_across, merge_within,
    ClassColors, MergeFamily,
};
use luvgraph::{connected_components, LabeledGraph, VertexId};

const EXIT_USAGE: u8 = 1;
const EXIT_INVALID: u8 = 2;
const EXIT_INCONCLUSIVE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "luvgraph",
    version,
    about = "Build, label, transform and verify local antimagic LAU graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build an LAU graph and apply the canonical labeling.
    Construct {
        #[arg(long)]
        t: u32,
        #[arg(long)]
        p: u32,
        #[arg(long)]
        n: Option<u32>,
        /// Path steps, starting with 1 (e.g. `1,3,5`). Defaults to the smallest valid steps.
        #[arg(long)]
        steps: Option<String>,
        /// Attachment values per component, `;`-separated (e.g. `1,4;1,3`).
        #[arg(long)]
        attach: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a labeled document; exit 0 iff the labeling is local antimagic.
    Verify { file: PathBuf },
    /// Print the predicted colors and multiplicities of the canonical labeling.
    Spectrum {
        #[arg(long)]
        t: u32,
        #[arg(long)]
        p: u32,
        #[arg(long)]
        n: u32,
    },
    /// Exchange equal-sum incident edge sets between two equal-sum vertices.
    Swap {
        file: PathBuf,
        #[arg(long)]
        x: VertexId,
        #[arg(long)]
        y: VertexId,
        #[arg(long, default_value_t = 2)]
        size: usize,
        /// Index into the ranked candidate list.
        #[arg(long, default_value_t = 0)]
        candidate: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Apply one of the GL1..GL6 vertex merges.
    Merge {
        file: PathBuf,
        #[arg(long)]
        family: MergeFamily,
        /// gl1-gl3: component groups `1,2;3,4` (default: one group of all components).
        /// gl4/gl5: pairs `m:i=m:j,...` (default: searched). gl6: unused.
        #[arg(long)]
        groups: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a generalized circulant LAU graph from groups of sizes s_1,...,s_t.
    Gcl {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        s: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute the local antimagic chromatic number exactly.
    Solve {
        file: PathBuf,
        #[arg(long, default_value_t = 12)]
        max_edges: usize,
        /// Wall-clock limit in seconds.
        #[arg(long)]
        time_limit: Option<f64>,
    },
    /// Re-emit a document as Graphviz or as a canonical document.
    Export {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Doc,
}

/// Failure with the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl ToString) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.to_string(),
        }
    }
}

impl<E: std::error::Error> From<E> for Failure {
    fn from(e: E) -> Self {
        Self::usage(e)
    }
}

type CmdResult = Result<u8, Failure>;

fn emit(text: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::usage(format!("{}: {e}", path.display()))),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn write_doc(doc: &GraphDocument, out: Option<&Path>) -> Result<(), Failure> {
    emit(&save(doc), out)
}

/// Step `k` of a k-step sequence: the second entry minus one.
fn step_of(seq: &luvgraph::lau::JSequence) -> u32 {
    seq.order()[1] - 1
}

fn construct(
    t: u32,
    p: u32,
    n: Option<u32>,
    steps: Option<&str>,
    attach: Option<&str>,
    out: Option<&Path>,
) -> CmdResult {
    let steps = match steps {
        Some(s) => parse_u32_list(s)?,
        None => {
            let n = n.ok_or_else(|| Failure::usage("either --n or --steps is required"))?;
            let spec = LauSpec::default_for(t, p, n)?;
            spec.components()[0].sequences.iter().map(step_of).collect()
        }
    };
    if let Some(n) = n {
        if n as usize != steps.len() {
            return Err(Failure::usage(format!(
                "--n {n} does not match {} steps",
                steps.len()
            )));
        }
    }
    let attachments = match attach {
        Some(a) => parse_list_of_lists(a)?,
        None => Vec::new(),
    };
    let spec = LauSpec::from_steps(t, p, &steps, &attachments)?;
    let params = spec
        .homogeneous()
        .expect("steps are shared by all components");
    let pg = build_lau(&spec)?;
    let f = canonical_labeling(&pg)?;
    let mut meta = Metadata::for_lau(params, "lau");
    meta.history.push(HistoryEntry::Construct {
        t,
        p,
        n: params.n,
        steps,
        attachments: spec
            .components()
            .iter()
            .map(|c| c.attachments.clone())
            .collect(),
    });
    write_doc(
        &GraphDocument::from_graph(&pg.graph, Some(&f), Some(meta)),
        out,
    )?;
    Ok(0)
}

fn verify(file: &Path) -> CmdResult {
    let doc = load_file(file)?;
    let Some(f) = doc.edge_labeling()? else {
        println!("valid: no");
        println!("document has no labeling");
        return Ok(EXIT_INVALID);
    };
    let g = doc.graph()?;
    let report = luvgraph::verify_local_antimagic(&g, &f)?;
    let valid = report.is_local_antimagic();
    println!("valid: {}", if valid { "yes" } else { "no" });
    println!(
        "bijection: {}",
        if report.is_bijection { "yes" } else { "no" }
    );
    println!(
        "vertices: {}  edges: {}  components: {}",
        g.vertex_count(),
        g.edge_count(),
        connected_components(&g).len()
    );
    println!("colors: {}", report.color_count);
    for (color, mult) in &report.spectrum {
        println!("  {color} x{mult}");
    }
    if !report.conflicts.is_empty() {
        println!("conflicts:");
        for id in &report.conflicts {
            let e = g.edge(*id).unwrap();
            println!("  {id} {}-{} (sum {})", e.u, e.v, report.sums[&e.u]);
        }
    }
    Ok(if valid { 0 } else { EXIT_INVALID })
}

fn spectrum(t: u32, p: u32, n: u32) -> CmdResult {
    let params = LauParams { t, p, n };
    if t == 0 || p < 9 || p.is_multiple_of(2) || n < 2 || n > (p - 3) / 2 {
        return Err(Failure::usage(format!(
            "invalid parameters {params}: need t >= 1, odd p >= 9, 2 <= n <= (p-3)/2"
        )));
    }
    let s = expected_spectrum(t, p, n);
    println!("{params} q={}", params.size());
    for (name, c) in [
        ("even", s.even),
        ("odd", s.odd),
        ("attachment", s.attachment),
    ] {
        println!(
            "{:<10} color {:>8}  multiplicity {:>4} ({} per component)  degree {}",
            name,
            c.color,
            c.multiplicity,
            c.multiplicity / t as u64,
            c.degree
        );
    }
    println!(
        "pair sums {} / {}",
        params.pair_sum_odd_first(),
        params.pair_sum_even_first()
    );
    println!("endpoint pair sum {}", params.endpoint_pair_sum());
    Ok(0)
}

fn doc_params(doc: &GraphDocument) -> Option<LauParams> {
    doc.metadata.as_ref().and_then(Metadata::params)
}

fn swap(
    file: &Path,
    x: VertexId,
    y: VertexId,
    size: usize,
    candidate: usize,
    out: Option<&Path>,
) -> CmdResult {
    let doc = load_file(file)?;
    let lg = doc.labeled()?;
    let candidates = find_swap_sets(&lg, x, y, size, doc_params(&doc))?;
    let Some(spec) = candidates.get(candidate) else {
        return Err(Failure::usage(format!(
            "no swap candidate #{candidate} for {x} and {y} ({} available)",
            candidates.len()
        )));
    };
    let swapped = edge_swap(&lg, spec)?;
    let mut meta = doc.metadata.clone().unwrap_or_default();
    meta.family = Some("cl".into());
    meta.history.push(HistoryEntry::Swap(spec.clone()));
    write_doc(&GraphDocument::from_labeled(&swapped, Some(meta)), out)?;
    Ok(0)
}

fn classes_of(doc: &GraphDocument) -> Result<ClassColors, Failure> {
    let meta = doc.metadata.as_ref();
    if let Some(c) = meta.and_then(|m| m.classes) {
        return Ok(c);
    }
    doc_params(doc)
        .map(|p| ClassColors::from(expected_spectrum(p.t, p.p, p.n)))
        .ok_or_else(|| Failure::usage("document metadata lacks color classes or (t, p, n)"))
}

fn merge(file: &Path, family: MergeFamily, groups: Option<&str>, out: Option<&Path>) -> CmdResult {
    let doc = load_file(file)?;
    let lg: LabeledGraph = doc.labeled()?;
    let classes = classes_of(&doc)?;
    let outcome = if family.is_across() {
        let groups = match groups {
            Some(g) => parse_component_groups(g)?,
            None => {
                let t = connected_components(&lg.graph).len();
                contiguous_groups(t, t)?
            }
        };
        merge_across(&lg, classes, family, &groups)?
    } else {
        let pairs = match (family, groups) {
            (MergeFamily::Gl6, _) | (_, None) => None,
            (_, Some(g)) => Some(parse_vertex_pairs(g)?),
        };
        merge_within(&lg, classes, family, pairs.as_deref())?
    };
    let report = outcome.result.verify()?;
    let mut meta = doc.metadata.clone().unwrap_or_default();
    meta.family = Some(family.to_string());
    meta.classes = None;
    meta.set_spectrum(&report.spectrum);
    meta.history.push(HistoryEntry::Merge {
        family,
        groups: outcome.groups.clone(),
    });
    write_doc(
        &GraphDocument::from_labeled(&outcome.result, Some(meta)),
        out,
    )?;
    Ok(0)
}

fn gcl(p: u32, n: u32, s: &str, out: Option<&Path>) -> CmdResult {
    let s_list = parse_u32_list(s)?;
    let built = build_gcl(p, n, &s_list, None)?;
    let mut meta = Metadata::for_lau(built.params, "gcl");
    meta.history.push(HistoryEntry::Gcl { p, n, s: s_list });
    meta.history
        .extend(built.swaps.iter().cloned().map(HistoryEntry::Swap));
    write_doc(
        &GraphDocument::from_labeled(&built.labeled, Some(meta)),
        out,
    )?;
    Ok(0)
}

fn solve(file: &Path, max_edges: usize, time_limit: Option<f64>) -> CmdResult {
    let doc = load_file(file)?;
    let g = doc.graph()?;
    let mut cfg = SearchConfig::new(max_edges);
    cfg.time_budget = time_limit.map(Duration::from_secs_f64);
    match chi_la_exact(&g, &cfg)? {
        SolveOutcome::Exact { value, witness } => {
            println!("{value}");
            let labels: Vec<String> = witness.iter().map(|(id, l)| format!("{id}={l}")).collect();
            println!("witness: {}", labels.join(" "));
            Ok(0)
        }
        SolveOutcome::Inconclusive {
            reason,
            best,
            lower_bound,
        } => {
            match best {
                Some((v, _)) => println!("inconclusive: {reason}; {lower_bound} <= chi_la <= {v}"),
                None => println!("inconclusive: {reason}; chi_la >= {lower_bound}"),
            }
            Ok(EXIT_INCONCLUSIVE)
        }
    }
}

fn export(file: &Path, format: Format, out: Option<&Path>) -> CmdResult {
    let doc = load_file(file)?;
    let text = match format {
        Format::Dot => export_dot(&doc)?,
        Format::Doc => save(&doc),
    };
    emit(&text, out)?;
    Ok(0)
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Construct {
            t,
            p,
            n,
            steps,
            attach,
            out,
        } => construct(t, p, n, steps.as_deref(), attach.as_deref(), out.as_deref()),
        Command::Verify { file } => verify(&file),
        Command::Spectrum { t, p, n } => spectrum(t, p, n),
        Command::Swap {
            file,
            x,
            y,
            size,
            candidate,
            out,
        } => swap(&file, x, y, size, candidate, out.as_deref()),
        Command::Merge {
            file,
            family,
            groups,
            out,
        } => merge(&file, family, groups.as_deref(), out.as_deref()),
        Command::Gcl { p, n, s, out } => gcl(p, n, &s, out.as_deref()),
        Command::Solve {
            file,
            max_edges,
            time_limit,
        } => solve(&file, max_edges, time_limit),
        Command::Export { file, format, out } => export(&file, format, out.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
