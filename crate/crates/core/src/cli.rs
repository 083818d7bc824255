//! The `regulus` command line. Every subcommand parses its inputs, calls one
//! library routine and prints the result; [`run`] returns the exit code.
//!
//! Exit codes: 0 success, 1 negative answer under `--expect-found` (or an
//! invalid certificate), 2 usage or input error, 3 budget exhausted.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use itertools::Itertools;
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::extremal::{classify_3sets, count_wedges, extremal_search, SearchOptions, SEARCH_MAX_EDGES};
use crate::gadgets::{
    construction_64, example_a, example_b, example_b_threshold, full_star, gadget_h, gadget_hprime,
    gadget_hprime_split, star_plus, ExampleAVariant, GadgetDescriptor,
};
use crate::hypercore::{Edge, Hypergraph};
use crate::patterns::{find_gadget_copy, find_same_union, find_sunflower, sunflower_free_family, SunflowerSearch};
use crate::regdetect::{find_regular, find_regular_parallel, verify_certificate, Certificate, Detection, SolverBudget};
use crate::util::binomial;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "regulus", version, about = "Regular subgraphs of uniform hypergraphs")]
pub struct RunConfig {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Write a construction as `.hg` plus a `.desc` sidecar.
    Generate(GenerateArgs),
    /// Search a hypergraph for an r-regular subgraph.
    Detect(DetectArgs),
    /// Check a certificate against a hypergraph.
    Verify(VerifyArgs),
    /// Look for a sunflower, a same-union quad, or a gadget copy.
    Find(FindArgs),
    /// Exhaustive search for ex(n, k, r).
    Search(SearchArgs),
    /// Count wedges around a vertex.
    Wedges(WedgesArgs),
    /// Split the 3-sets avoiding a vertex into good and bad.
    Classify(ClassifyArgs),
    /// Reproduce a table of small-case checks.
    Table(TableArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenerateKind {
    Star,
    StarPlus,
    Hkl,
    HklPrime,
    ExampleA,
    ExampleB,
    C64,
}

#[derive(Args, Debug)]
pub struct GenerateArgs {
    #[arg(long, value_enum)]
    pub kind: GenerateKind,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub l: Option<usize>,
    #[arg(long)]
    pub c: Option<usize>,
    /// `r_eq_k` or `r_eq_k_plus_1`, for example-a.
    #[arg(long)]
    pub variant: Option<String>,
    /// `|A ∩ C|` for hkl-prime; defaults to ⌊(k−l)/2⌋.
    #[arg(long)]
    pub split: Option<usize>,
    /// Output path; the descriptor goes next to it with extension `.desc`.
    /// Without it the hypergraph is printed.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct BudgetArgs {
    #[arg(long)]
    pub max_nodes: Option<u64>,
    #[arg(long, env = "REGULUS_MAX_MILLIS")]
    pub max_millis: Option<u64>,
}

impl BudgetArgs {
    fn budget(&self) -> SolverBudget {
        SolverBudget {
            max_nodes: self.max_nodes,
            max_millis: self.max_millis,
        }
    }
}

#[derive(Args, Debug)]
pub struct DetectArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub r: usize,
    #[arg(long)]
    pub certificate: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    pub workers: usize,
    #[arg(long)]
    pub expect_found: bool,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub certificate: PathBuf,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum PatternKind {
    Sunflower,
    SameUnion,
    Gadget,
}

#[derive(Args, Debug)]
pub struct FindArgs {
    #[arg(long, value_enum)]
    pub pattern: PatternKind,
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub l: Option<usize>,
    #[arg(long)]
    pub prime: bool,
    /// Also write the printed structure to this file.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub expect_found: bool,
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub r: usize,
    #[arg(long)]
    pub isomorph_reject: bool,
    /// Write the witness hypergraph here.
    #[arg(long)]
    pub witness: Option<PathBuf>,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

#[derive(Args, Debug)]
pub struct WedgesArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub v: usize,
    #[arg(long)]
    pub r: usize,
}

#[derive(Args, Debug)]
pub struct ClassifyArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub v: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Claim {
    MvConjecture,
    StarExtremal,
    ExampleB,
    SunflowerBounds,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    #[arg(long, value_enum)]
    pub claim: Claim,
    /// Uniformity (mv-conjecture).
    #[arg(long, default_value_t = 3)]
    pub k: usize,
    #[arg(long)]
    pub n_min: Option<usize>,
    #[arg(long, default_value_t = 6)]
    pub n_max: usize,
    #[arg(long, default_value_t = 4)]
    pub k_max: usize,
    #[arg(long, default_value_t = 4)]
    pub r_max: usize,
    #[arg(long, default_value_t = 3)]
    pub c_max: usize,
    #[arg(long, default_value_t = 3)]
    pub p_max: usize,
    /// Random families per (k, p) row of sunflower-bounds.
    #[arg(long, default_value_t = 100)]
    pub samples: u64,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

/// A failure that maps to exit code 2.
#[derive(Debug)]
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Usage {
        Usage(e.to_string())
    }
}

type Outcome = Result<(String, i32), Usage>;

/// Parses `argv` (including the program name), runs the command, and writes
/// results to `out` and diagnostics to `err`.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&config, err) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn execute(config: &RunConfig, err: &mut dyn Write) -> Outcome {
    let csv = config.format == Format::Csv;
    match &config.command {
        Command::Generate(a) => generate(a, config.seed),
        Command::Detect(a) => detect(a, csv),
        Command::Verify(a) => verify(a, csv),
        Command::Find(a) => find(a),
        Command::Search(a) => search(a, csv, err),
        Command::Wedges(a) => wedges(a, csv),
        Command::Classify(a) => classify(a, csv),
        Command::Table(a) => table(a, csv, config.seed),
    }
}

fn read_hg(path: &Path) -> Result<Hypergraph, Usage> {
    let text = std::fs::read_to_string(path).map_err(|e| Usage(format!("{}: {e}", path.display())))?;
    Hypergraph::parse(&text).map_err(|e| Usage(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<(), Usage> {
    std::fs::write(path, text).map_err(|e| Usage(format!("{}: {e}", path.display())))
}

fn need(value: Option<usize>, flag: &str) -> Result<usize, Usage> {
    value.ok_or_else(|| Usage(format!("--{flag} is required here")))
}

fn generate(a: &GenerateArgs, seed: u64) -> Outcome {
    let n = || need(a.n, "n");
    let (h, desc): (Hypergraph, GadgetDescriptor) = match a.kind {
        GenerateKind::Star => full_star(n()?, a.k)?,
        GenerateKind::StarPlus => star_plus(n()?, a.k, need(a.r, "r")?)?,
        GenerateKind::Hkl | GenerateKind::HklPrime => {
            let l = need(a.l, "l")?;
            if a.n.is_some_and(|n| n != 2 * a.k) {
                return Err(Usage(format!("H(k,l) has 2k = {} vertices", 2 * a.k)));
            }
            match (a.kind, a.split) {
                (GenerateKind::Hkl, None) => gadget_h(a.k, l)?,
                (GenerateKind::Hkl, Some(_)) => return Err(Usage("--split only applies to hkl-prime".into())),
                (_, None) => gadget_hprime(a.k, l)?,
                (_, Some(s)) => gadget_hprime_split(a.k, l, s)?,
            }
        }
        GenerateKind::ExampleA => {
            let variant: ExampleAVariant = a
                .variant
                .as_deref()
                .ok_or_else(|| Usage("--variant is required for example-a".into()))?
                .parse()?;
            example_a(n()?, a.k, variant)?
        }
        GenerateKind::ExampleB => example_b(n()?, a.k, need(a.c, "c")?)?,
        GenerateKind::C64 => construction_64(n()?, a.k, need(a.r, "r")?, seed)?,
    };
    let hg = h.to_hg_string();
    match &a.out {
        None => Ok((hg, EXIT_OK)),
        Some(path) => {
            let desc_path = path.with_extension("desc");
            write_file(path, &hg)?;
            write_file(&desc_path, &desc.to_desc_string())?;
            let text = format!(
                "wrote {} ({} vertices, {} edges) and {}\n",
                path.display(),
                h.n(),
                h.num_edges(),
                desc_path.display()
            );
            Ok((text, EXIT_OK))
        }
    }
}

fn detect(a: &DetectArgs, csv: bool) -> Outcome {
    let h = read_hg(&a.input)?;
    let budget = a.budget.budget();
    let det = if a.workers > 1 {
        find_regular_parallel(&h, a.r, budget, a.workers)?
    } else {
        find_regular(&h, a.r, budget)?
    };
    let (verdict, size, code) = match &det {
        Detection::Found(c) => ("found", c.len(), EXIT_OK),
        Detection::NoneExists => ("none", 0, if a.expect_found { EXIT_NEGATIVE } else { EXIT_OK }),
        Detection::BudgetExhausted { .. } => ("budget", 0, EXIT_BUDGET),
    };
    if let (Some(path), Some(c)) = (&a.certificate, det.certificate()) {
        write_file(path, &c.to_cert_string())?;
    }
    let text = if csv {
        format!("r,verdict,edges\n{},{verdict},{size}\n", a.r)
    } else {
        match &det {
            Detection::Found(c) => format!("FOUND {} edges\nedges {}\n", c.len(), c.edge_indices.iter().join(" ")),
            Detection::NoneExists => "NONE (search complete)\n".to_string(),
            Detection::BudgetExhausted { nodes } => format!("BUDGET EXHAUSTED after {nodes} nodes\n"),
        }
    };
    Ok((text, code))
}

fn verify(a: &VerifyArgs, csv: bool) -> Outcome {
    let h = read_hg(&a.input)?;
    let text = std::fs::read_to_string(&a.certificate).map_err(|e| Usage(format!("{}: {e}", a.certificate.display())))?;
    let cert = Certificate::parse(&text).map_err(|e| Usage(format!("{}: {e}", a.certificate.display())))?;
    let result = verify_certificate(&h, &cert);
    let out = match (&result, csv) {
        (Ok(()), true) => format!("r,valid\n{},true\n", cert.r),
        (Err(_), true) => format!("r,valid\n{},false\n", cert.r),
        (Ok(()), false) => format!("VALID {}-regular subgraph with {} edges\n", cert.r, cert.len()),
        (Err(fault), false) => format!("INVALID: {fault}\n"),
    };
    Ok((out, if result.is_ok() { EXIT_OK } else { EXIT_NEGATIVE }))
}

fn find(a: &FindArgs) -> Outcome {
    let h = read_hg(&a.input)?;
    let (text, found) = match a.pattern {
        PatternKind::Sunflower => {
            let p = need(a.p, "p")?;
            let result = find_sunflower(&h, p)?;
            let text = match &result {
                SunflowerSearch::Greedy(s) | SunflowerSearch::Exhaustive(s) => {
                    let how = if matches!(result, SunflowerSearch::Greedy(_)) { "greedy" } else { "exhaustive" };
                    format!("SUNFLOWER {how}\npetals {}\ncore {}\n", s.petals.iter().join(" "), s.core)
                }
                SunflowerSearch::Absent => "NONE (exhaustive)\n".to_string(),
                SunflowerSearch::Undetermined => "UNDETERMINED (greedy failed, too large for exhaustive search)\n".to_string(),
            };
            (text, result.sunflower().is_some())
        }
        PatternKind::SameUnion => match find_same_union(&h) {
            Some(q) => {
                let mut text = String::from("QUAD\n");
                for (name, i) in [("a", q.a), ("b", q.b), ("c", q.c), ("d", q.d)] {
                    writeln!(text, "{name} {i} {}", h[i]).unwrap();
                }
                (text, true)
            }
            None => ("NONE\n".to_string(), false),
        },
        PatternKind::Gadget => {
            let k = need(a.k, "k")?;
            let l = need(a.l, "l")?;
            match find_gadget_copy(&h, k, l, a.prime)? {
                Some(copy) => {
                    let name = if a.prime { "H'" } else { "H" };
                    let mut text = format!("COPY {name}({k},{l})\n");
                    if let Some(s) = copy.split {
                        writeln!(text, "split {s}").unwrap();
                    }
                    writeln!(text, "mapping {}", copy.mapping.iter().join(" ")).unwrap();
                    writeln!(text, "edges {}", copy.host_edges.iter().join(" ")).unwrap();
                    (text, true)
                }
                None => ("NONE\n".to_string(), false),
            }
        }
    };
    if let Some(path) = &a.out {
        write_file(path, &text)?;
    }
    let code = if !found && a.expect_found { EXIT_NEGATIVE } else { EXIT_OK };
    Ok((text, code))
}

fn search(a: &SearchArgs, csv: bool, err: &mut dyn Write) -> Outcome {
    let options = SearchOptions {
        budget: a.budget.budget(),
        isomorph_reject: a.isomorph_reject,
    };
    let rep = extremal_search(a.n, a.k, a.r, options)?;
    // Timing is nondeterministic, so it stays off the result stream.
    let _ = writeln!(err, "elapsed {:.3}s", rep.elapsed.as_secs_f64());
    if let Some(path) = &a.witness {
        write_file(path, &rep.witness.to_hg_string())?;
    }
    let text = if csv {
        format!(
            "n,k,r,optimum,complete,nodes,witness_verified\n{},{},{},{},{},{},{}\n",
            rep.n, rep.k, rep.r, rep.optimum, rep.complete, rep.nodes, rep.witness_verified
        )
    } else {
        let mut t = String::new();
        for (key, value) in [
            ("n", rep.n.to_string()),
            ("k", rep.k.to_string()),
            ("r", rep.r.to_string()),
            ("optimum", rep.optimum.to_string()),
            ("complete", rep.complete.to_string()),
            ("nodes", rep.nodes.to_string()),
            ("solver nodes", rep.solver_nodes.to_string()),
            ("witness verified", rep.witness_verified.to_string()),
        ] {
            writeln!(t, "{key:<17}{value}").unwrap();
        }
        t
    };
    Ok((text, if rep.complete { EXIT_OK } else { EXIT_BUDGET }))
}

fn wedges(a: &WedgesArgs, csv: bool) -> Outcome {
    let h = read_hg(&a.input)?;
    let w = count_wedges(&h, a.v, a.r)?;
    let bound = w.meets_lower_bound(h.n());
    let text = if csv {
        format!(
            "v,r,k,k_prime,h_star,lambda,meets_bound\n{},{},{},{},{},{},{bound}\n",
            w.v,
            w.r,
            w.k,
            w.k_prime,
            w.h_star(),
            w.lambda
        )
    } else {
        let mut t = format!(
            "v {} r {} k {} k' {}\nedges avoiding v {}\nlambda {}\nmeets lower bound {bound}\n",
            w.v,
            w.r,
            w.k,
            w.k_prime,
            w.h_star(),
            w.lambda
        );
        for &(i, c) in &w.per_edge {
            writeln!(t, "edge {i} {} wedges {c}", h[i]).unwrap();
        }
        t
    };
    Ok((text, EXIT_OK))
}

fn classify(a: &ClassifyArgs, csv: bool) -> Outcome {
    let h = read_hg(&a.input)?;
    let c = classify_3sets(&h, a.v)?;
    let show = |t: &[usize; 3]| t.iter().join(" ");
    let text = if csv {
        let mut t = String::from("a,b,c,class\n");
        let rows = c.good.iter().map(|s| (s, "good")).chain(c.bad.iter().map(|s| (s, "bad")));
        for (s, class) in rows.sorted() {
            writeln!(t, "{},{},{},{class}", s[0], s[1], s[2]).unwrap();
        }
        t
    } else {
        let mut t = format!(
            "threshold {}\nnon-edges through v {}\ngood {}\nbad {}\n",
            c.threshold,
            c.h_tilde,
            c.good.len(),
            c.bad.len()
        );
        for s in &c.bad {
            writeln!(t, "bad {}", show(s)).unwrap();
        }
        t
    };
    Ok((text, EXIT_OK))
}

/// Rows as `(header, cells)`, rendered as CSV or as aligned text.
fn render(header: &[&str], rows: &[Vec<String>], csv: bool) -> String {
    let mut out = String::new();
    if csv {
        writeln!(out, "{}", header.join(",")).unwrap();
        for row in rows {
            writeln!(out, "{}", row.join(",")).unwrap();
        }
        return out;
    }
    let widths: Vec<usize> = (0..header.len())
        .map(|j| rows.iter().map(|r| r[j].len()).chain([header[j].len()]).max().unwrap())
        .collect();
    let line = |cells: Vec<&str>| {
        cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .join("  ")
    };
    writeln!(out, "{}", line(header.to_vec())).unwrap();
    for row in rows {
        writeln!(out, "{}", line(row.iter().map(String::as_str).collect())).unwrap();
    }
    out
}

fn table(a: &TableArgs, csv: bool, seed: u64) -> Outcome {
    let budget = a.budget.budget();
    let options = SearchOptions {
        budget,
        isomorph_reject: true,
    };
    let mut rows: Vec<Vec<String>> = Vec::new();
    let header: &[&str] = match a.claim {
        Claim::MvConjecture => {
            if a.k < 2 {
                return Err(Usage("--k must be at least 2".into()));
            }
            for n in a.n_min.unwrap_or(a.k + 1)..=a.n_max {
                let conjectured = binomial(n - 1, a.k - 1) + ((n - 1) / a.k) as u128;
                let rep = extremal_search(n, a.k, 2, options)?;
                let method = if rep.complete { "exhaustive" } else { "partial" };
                rows.push(vec![
                    n.to_string(),
                    conjectured.to_string(),
                    rep.optimum.to_string(),
                    (rep.complete && rep.optimum as u128 == conjectured).to_string(),
                    method.to_string(),
                ]);
            }
            &["n", "conjectured", "searched", "match", "method"]
        }
        Claim::StarExtremal => {
            for n in a.n_min.unwrap_or(3)..=a.n_max {
                for k in 2..=a.k_max.min(n - 1) {
                    for r in 2..=a.r_max {
                        let star = binomial(n - 1, k - 1);
                        let (h, _) = full_star(n, k)?;
                        let free = find_regular(&h, r, budget)?;
                        let (optimum, method) = if binomial(n, k) <= SEARCH_MAX_EDGES as u128 {
                            let rep = extremal_search(n, k, r, options)?;
                            let method = if rep.complete { "exhaustive" } else { "partial" };
                            (rep.optimum as u128, method)
                        } else {
                            (star, "solver")
                        };
                        rows.push(vec![
                            n.to_string(),
                            k.to_string(),
                            r.to_string(),
                            star.to_string(),
                            optimum.to_string(),
                            free.is_none().to_string(),
                            (free.is_none() && optimum >= star).to_string(),
                            method.to_string(),
                        ]);
                    }
                }
            }
            &["n", "k", "r", "star", "optimum", "star_free", "ok", "method"]
        }
        Claim::ExampleB => {
            for n in a.n_min.unwrap_or(4)..=a.n_max {
                for k in 2..=a.k_max {
                    for c in 2..=a.c_max {
                        let Ok((h, _)) = example_b(n, k, c) else { continue };
                        let formula = c as u128 * binomial(n - c, k - 1);
                        let r = example_b_threshold(k, c) + 1;
                        let verdict = match find_regular(&h, r as usize, budget)? {
                            Detection::Found(_) => "found",
                            Detection::NoneExists => "none",
                            Detection::BudgetExhausted { .. } => "budget",
                        };
                        rows.push(vec![
                            n.to_string(),
                            k.to_string(),
                            c.to_string(),
                            formula.to_string(),
                            h.num_edges().to_string(),
                            r.to_string(),
                            verdict.to_string(),
                            "solver".to_string(),
                        ]);
                    }
                }
            }
            &["n", "k", "c", "formula", "edges", "r", "verdict", "method"]
        }
        Claim::SunflowerBounds => {
            for k in 1..=a.k_max.min(3) {
                for p in 2..=a.p_max {
                    let lower = (p as u128 - 1).pow(k as u32);
                    let upper = lower * (1..=k as u128).product::<u128>();
                    let free = matches!(find_sunflower(&sunflower_free_family(k, p)?, p)?, SunflowerSearch::Absent);
                    let size = upper as usize + 1;
                    let n = (k..).find(|&n| binomial(n, k) >= 2 * size as u128).unwrap();
                    let mut greedy = 0u64;
                    for s in 0..a.samples {
                        let h = random_family(n, k, size, seed.wrapping_add(s));
                        if matches!(find_sunflower(&h, p)?, SunflowerSearch::Greedy(_)) {
                            greedy += 1;
                        }
                    }
                    rows.push(vec![
                        k.to_string(),
                        p.to_string(),
                        lower.to_string(),
                        upper.to_string(),
                        free.to_string(),
                        n.to_string(),
                        format!("{greedy}/{}", a.samples),
                        "exhaustive".to_string(),
                    ]);
                }
            }
            &["k", "p", "lower", "upper", "lower_free", "n", "greedy_above_upper", "method"]
        }
    };
    Ok((render(header, &rows, csv), EXIT_OK))
}

/// `size` distinct random `k`-subsets of `0..n`.
pub(crate) fn random_family(n: usize, k: usize, size: usize, seed: u64) -> Hypergraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = std::collections::BTreeSet::new();
    while edges.len() < size {
        edges.insert(Edge::from_vertices(sample(&mut rng, n, k)));
    }
    Hypergraph::new(n, edges.into_iter().map(|e| e.to_vec())).expect("distinct in-range edges")
}
