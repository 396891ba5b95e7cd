//! Command-line front end. `run` returns the process exit code:
//! 0 all checks pass, 1 counterexample found, 2 input or limit error.

pub mod report;

use std::fs;
use std::io::{self, Write as _};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linext::{
    collect_extensions, linear_extensions, min_maj_extension, min_stat_bruteforce,
    DEFAULT_MAX_EXTENSIONS,
};
use crate::newton::newton_polygon;
use crate::poset::{enumerate_posets, random_poset, EdgeProb, Poset, MAX_ENUMERATE};
use crate::qehrhart::{compute_qehrhart_with_cap, LatticeLimits};

pub use report::{verify_poset, CheckOutcome, Counterexample, RunReport, VerifyOptions};

pub const EXIT_PASS: u8 = 0;
pub const EXIT_COUNTEREXAMPLE: u8 = 1;
pub const EXIT_ERROR: u8 = 2;

#[derive(Parser, Debug)]
#[command(name = "qnewton", version, about = "q-Ehrhart polynomials of order polytopes and their Newton polygons")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute F, N, phi, D and E for a poset file; prints JSON.
    Ehrhart {
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_MAX_EXTENSIONS)]
        max_extensions: u64,
    },
    /// Run the full check suite; one JSON report per poset.
    Verify(VerifyArgs),
    /// Newton polygons of F and N.
    Newton {
        input: PathBuf,
        /// SVG for F; N goes to the same path with a `_numerator` suffix.
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Vertex TSV for F; N goes to the same path with a `_numerator` suffix.
        #[arg(long)]
        tsv: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_MAX_EXTENSIONS)]
        max_extensions: u64,
    },
    /// List linear extensions with Des, maj and des.
    Extensions {
        input: PathBuf,
        /// Also print the minimum of maj - k des for k = 0..m.
        #[arg(long)]
        stats: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_EXTENSIONS)]
        max_extensions: u64,
    },
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Poset JSON file.
    #[arg(conflicts_with_all = ["all", "random", "replay"])]
    pub input: Option<PathBuf>,
    /// Every poset on m elements (m <= 5).
    #[arg(long, value_name = "M", conflicts_with_all = ["random", "replay"])]
    pub all: Option<usize>,
    /// COUNT random posets on M elements from SEED.
    #[arg(long, num_args = 3, value_names = ["COUNT", "M", "SEED"], conflicts_with = "replay")]
    pub random: Option<Vec<u64>>,
    /// Edge probability for --random, as `num/den`.
    #[arg(long, default_value = "1/2")]
    pub edge_prob: String,
    /// Re-run the posets of a previous report (JSON or JSON lines).
    #[arg(long)]
    pub replay: Option<PathBuf>,
    /// Write reports here instead of stdout.
    #[arg(long)]
    pub report: Option<PathBuf>,
    #[arg(long, env = "QNEWTON_JOBS")]
    pub jobs: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_MAX_EXTENSIONS)]
    pub max_extensions: u64,
    /// Largest dilation used by lattice-point oracles.
    #[arg(long, default_value_t = LatticeLimits::default().max_n)]
    pub max_n: u32,
    /// Include per-poset wall time in reports.
    #[arg(long)]
    pub timings: bool,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_ERROR } else { EXIT_PASS };
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_ERROR
        }
    }
}

fn dispatch(cmd: Command) -> Result<u8> {
    match cmd {
        Command::Ehrhart { input, output, max_extensions } => {
            let p = read_poset(&input)?;
            let r = compute_qehrhart_with_cap(&p, max_extensions)?;
            let text = serde_json::to_string_pretty(&r.to_json()).expect("serializable") + "\n";
            emit(output.as_deref(), &text)?;
            Ok(EXIT_PASS)
        }
        Command::Verify(args) => verify(args),
        Command::Newton { input, svg, tsv, max_extensions } => {
            let p = read_poset(&input)?;
            let r = compute_qehrhart_with_cap(&p, max_extensions)?;
            let nf = newton_polygon(&r.f)?;
            let nn = newton_polygon(&r.n)?;
            if let Some(path) = &tsv {
                write_file(path, &nf.to_tsv())?;
                write_file(&numerator_path(path), &nn.to_tsv())?;
            }
            if let Some(path) = &svg {
                write_file(path, &nf.to_svg(&support(&r.f)))?;
                write_file(&numerator_path(path), &nn.to_svg(&support(&r.n)))?;
            }
            let summary = serde_json::json!({ "F": nf, "N": nn });
            println!("{summary}");
            Ok(EXIT_PASS)
        }
        Command::Extensions { input, stats, max_extensions } => {
            let p = read_poset(&input)?;
            extensions(&p, stats, max_extensions)
        }
    }
}

fn support(f: &crate::poly::BivarPoly) -> Vec<(i64, i64)> {
    f.support().collect()
}

/// `out.tsv` -> `out_numerator.tsv`.
pub fn numerator_path(path: &Path) -> PathBuf {
    let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let name = match path.extension() {
        Some(ext) => format!("{stem}_numerator.{}", ext.to_string_lossy()),
        None => format!("{stem}_numerator"),
    };
    path.with_file_name(name)
}

fn read_poset(path: &Path) -> Result<Poset> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    Poset::from_json_str(&text)
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn emit(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => write_file(p, text),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())
                .map_err(|e| Error::Input(format!("stdout: {e}")))
        }
    }
}

fn extensions(p: &Poset, stats: bool, cap: u64) -> Result<u8> {
    let set = |v: &[usize]| {
        let items: Vec<String> = v.iter().map(usize::to_string).collect();
        format!("{{{}}}", items.join(","))
    };
    let mut out = String::from("pi\tDes\tmaj\tdes\tblocks\n");
    for pi in linear_extensions(p).with_cap(cap) {
        let pi = pi?;
        let blocks: Vec<String> = pi.descent_blocks().blocks.iter().map(|b| set(b)).collect();
        out += &format!("{pi}\t{}\t{}\t{}\t{}\n", set(&pi.des_set), pi.maj, pi.des, blocks.join(" "));
    }
    if stats {
        // Minima are stated for naturally labeled posets; relabel if needed.
        let (natural, relabel) = p.naturalize();
        if !relabel.is_identity() {
            out += &format!("# relabeled to a natural labeling: {:?}\n", relabel.images());
        }
        let cs = natural.chain_stats();
        let chain = natural.is_chain();
        // Touch the extension list once so an over-budget poset fails early.
        collect_extensions(&natural, cap)?;
        out += "k\tb_sum\tmin\tmin_des_ge_1\tminimizer\n";
        for k in 0..=natural.len() {
            let brute = min_stat_bruteforce(&natural, k, false, cap)?;
            let restricted = if !chain && k >= 1 {
                min_stat_bruteforce(&natural, k, true, cap)?.to_string()
            } else {
                "-".into()
            };
            let (pi, _) = min_maj_extension(&natural, k)?;
            out += &format!("{k}\t{}\t{brute}\t{restricted}\t{pi}\n", cs.b_prefix_sum(k));
        }
    }
    emit(None, &out)?;
    Ok(EXIT_PASS)
}

fn parse_edge_prob(s: &str) -> Result<EdgeProb> {
    let bad = || Error::Input(format!("edge probability `{s}` is not of the form num/den"));
    let (a, b) = s.split_once('/').ok_or_else(bad)?;
    EdgeProb::new(a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?)
}

/// Reads the posets of a report file: either one JSON document (a report
/// or an array of reports) or JSON lines.
fn replay_posets(path: &Path) -> Result<Vec<Poset>> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    let parse = |s: &str| -> Result<Vec<RunReport>> {
        if let Ok(many) = serde_json::from_str::<Vec<RunReport>>(s) {
            return Ok(many);
        }
        serde_json::from_str::<RunReport>(s)
            .map(|r| vec![r])
            .map_err(|e| Error::Input(format!("{}: {e}", path.display())))
    };
    let reports = match parse(&text) {
        Ok(r) => r,
        Err(_) => {
            let mut all = Vec::new();
            for line in text.lines().filter(|l| !l.trim().is_empty()) {
                all.extend(parse(line)?);
            }
            all
        }
    };
    if reports.is_empty() {
        return Err(Error::Input(format!("{}: no reports", path.display())));
    }
    reports.iter().map(|r| Poset::try_from(&r.poset)).collect()
}

fn collect_posets(args: &VerifyArgs) -> Result<Vec<Poset>> {
    if let Some(path) = &args.input {
        return Ok(vec![read_poset(path)?]);
    }
    if let Some(m) = args.all {
        if m > MAX_ENUMERATE {
            return Err(Error::Size(format!("--all {m} exceeds the enumeration limit {MAX_ENUMERATE}")));
        }
        return Ok(enumerate_posets(m)?.collect());
    }
    if let Some(spec) = &args.random {
        let [count, m, seed] = spec[..] else {
            return Err(Error::Input("--random takes COUNT M SEED".into()));
        };
        let prob = parse_edge_prob(&args.edge_prob)?;
        return (0..count)
            .map(|i| random_poset(m as usize, prob, seed.wrapping_add(i)))
            .collect();
    }
    if let Some(path) = &args.replay {
        return replay_posets(path);
    }
    Err(Error::Input("verify needs a poset file, --all, --random or --replay".into()))
}

fn verify(args: VerifyArgs) -> Result<u8> {
    let posets = collect_posets(&args)?;
    let limits = LatticeLimits { max_n: args.max_n, ..LatticeLimits::default() };
    if let Some(p) = posets.iter().find(|p| p.len() > limits.max_m) {
        return Err(Error::Size(format!(
            "poset with {} elements exceeds the lattice oracle limit {}",
            p.len(),
            limits.max_m
        )));
    }
    let opts = VerifyOptions {
        max_extensions: args.max_extensions,
        limits,
        timings: args.timings,
        ..VerifyOptions::default()
    };
    let reports = run_parallel(&posets, &opts, args.jobs)?;

    let mut text = String::new();
    for r in &reports {
        text += &serde_json::to_string(r).expect("serializable");
        text.push('\n');
    }
    emit(args.report.as_deref(), &text)?;

    let failed: Vec<&RunReport> = reports.iter().filter(|r| !r.pass).collect();
    if failed.is_empty() {
        eprintln!("{} poset(s) verified, all checks pass", reports.len());
        Ok(EXIT_PASS)
    } else {
        for r in &failed {
            let names: Vec<&str> = r.failed_checks().map(|c| c.name.as_str()).collect();
            eprintln!(
                "COUNTEREXAMPLE #{}: m={} covers={:?} failed: {}",
                r.index,
                r.poset.m,
                r.poset.covers,
                names.join(", ")
            );
        }
        Ok(EXIT_COUNTEREXAMPLE)
    }
}

/// Verifies in parallel; results keep input order.
pub fn run_parallel(posets: &[Poset], opts: &VerifyOptions, jobs: Option<usize>) -> Result<Vec<RunReport>> {
    let work = || -> Result<Vec<RunReport>> {
        posets
            .par_iter()
            .enumerate()
            .map(|(i, p)| verify_poset(i, p, opts))
            .collect()
    };
    match jobs {
        Some(0) => Err(Error::Input("--jobs must be at least 1".into())),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::Input(format!("thread pool: {e}")))?
            .install(work),
        None => work(),
    }
}
