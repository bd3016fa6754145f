use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use streamcert::cert::Scheme;
use streamcert::gadgets::{self, Gadget, InstanceSpace};
use streamcert::generators;
use streamcert::graph::Graph;
use streamcert::harness::{self, CorpusEntry, FuzzMode, FuzzPolicy, Params};
use streamcert::io::parse_graph_file;
use streamcert::provers::{self, ProveError};
use streamcert::stream::{make_stream, OrderSpec};
use streamcert::verifiers;

const EXIT_REJECT: u8 = 1;
const EXIT_NOT_CERTIFIABLE: u8 = 2;
const EXIT_USAGE: u8 = 3;
const EXIT_COUNTEREXAMPLE: u8 = 4;

#[derive(Parser)]
#[command(name = "streamcert", version, about = "Certify graph properties for one-pass streaming verifiers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the honest certificate for a legal instance.
    Prove {
        #[command(flatten)]
        scheme: SchemeArg,
        #[command(flatten)]
        input: GraphArgs,
        #[arg(long)]
        out: PathBuf,
    },
    /// Stream a graph past a certificate and print the verdict.
    Verify {
        #[command(flatten)]
        scheme: SchemeArg,
        #[command(flatten)]
        input: GraphArgs,
        #[arg(long)]
        cert: PathBuf,
        /// given | rev | lex | shuffle:SEED | split:IDX
        #[arg(long, default_value = "given")]
        order: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print every graph parameter computed by the exact oracles.
    Oracle {
        #[command(flatten)]
        input: GraphArgs,
    },
    /// Sweep a gadget family and compare the graph predicate with f(x, y).
    Gadget {
        /// disj_matching | disj_degeneracy | disj_diameter8 | holzer | bitgadget_vc | perm_coloring
        name: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        /// exhaustive | sample:COUNT
        #[arg(long, default_value = "exhaustive")]
        check: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also replay each instance with Alice's edges streamed first.
        #[arg(long)]
        split: bool,
        /// Print one line per input pair.
        #[arg(long)]
        verbose: bool,
    },
    /// Try to get a certificate accepted on an illegal instance.
    Fuzz {
        #[command(flatten)]
        scheme: SchemeArg,
        #[command(flatten)]
        input: GraphArgs,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        trials: usize,
    },
    /// Measure verifier space on growing legal instances.
    Scale {
        #[command(flatten)]
        scheme: SchemeArg,
        /// Comma-separated node counts.
        #[arg(long, value_delimiter = ',', default_value = "256,1024,4096,16384")]
        sizes: Vec<usize>,
    },
}

#[derive(Args)]
struct SchemeArg {
    /// Scheme id, e.g. mm_atmost or eq_degeneracy.
    #[arg(value_name = "SCHEME")]
    positional: Option<String>,
    #[arg(long = "scheme", conflicts_with = "positional")]
    flag: Option<String>,
}

impl SchemeArg {
    fn get(&self) -> Result<Scheme> {
        let name = self.flag.as_ref().or(self.positional.as_ref()).ok_or_else(|| anyhow!("missing scheme"))?;
        Scheme::from_name(name).ok_or_else(|| anyhow!("unknown scheme `{name}`"))
    }
}

#[derive(Args)]
struct GraphArgs {
    /// A graph file, or a builtin: Kn, Cn, Pn (n nodes), Sn (n leaves), En (edgeless).
    #[arg(long)]
    graph: String,
    /// Threshold; must match the file header when both are present.
    #[arg(long)]
    k: Option<usize>,
}

fn builtin(name: &str) -> Option<Graph> {
    let (kind, size) = name.split_at(1);
    let n: usize = size.parse().ok()?;
    Some(match kind {
        "K" => generators::complete(n),
        "C" if n >= 3 => generators::cycle(n),
        "P" => generators::path(n),
        "S" => generators::star(n),
        "E" => generators::edgeless(n),
        _ => return None,
    })
}

impl GraphArgs {
    /// The graph and the threshold, or an error for a missing or
    /// contradictory threshold.
    fn load(&self, need_k: bool) -> Result<(Graph, Option<usize>)> {
        let path = Path::new(&self.graph);
        if !path.exists() {
            if let Some(g) = builtin(&self.graph) {
                if need_k && self.k.is_none() {
                    bail!("builtin graphs need --k");
                }
                return Ok((g, self.k));
            }
        }
        let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let file = parse_graph_file(&text).with_context(|| format!("parsing {}", path.display()))?;
        if let Some(k) = self.k {
            if k != file.k {
                bail!("--k {k} contradicts the file header (k = {})", file.k);
            }
        }
        Ok((file.graph, Some(file.k)))
    }
}

fn cmd_prove(scheme: Scheme, input: &GraphArgs, out: &Path) -> Result<u8> {
    let (g, k) = input.load(true)?;
    let k = k.unwrap();
    match provers::prove(scheme, &g, k) {
        Ok(cert) => {
            fs::write(out, cert.to_bytes()).with_context(|| format!("writing {}", out.display()))?;
            println!("scheme={scheme} n={} k={k} semantic_bits={}", g.node_count(), cert.semantic_bits);
            Ok(0)
        }
        Err(ProveError::NotCertifiable) => {
            println!("scheme={scheme} k={k}: instance is not certifiable");
            Ok(EXIT_NOT_CERTIFIABLE)
        }
        Err(e @ ProveError::TooLarge(_)) => {
            println!("scheme={scheme} k={k}: {e}");
            Ok(EXIT_NOT_CERTIFIABLE)
        }
    }
}

fn cmd_verify(scheme: Scheme, input: &GraphArgs, cert: &Path, order: &str, seed: u64) -> Result<u8> {
    let (g, k) = input.load(true)?;
    let order = OrderSpec::parse(order, seed)?;
    let bytes = fs::read(cert).with_context(|| format!("reading {}", cert.display()))?;
    let stream = make_stream(&g, k.unwrap(), order);
    let (verdict, report) = verifiers::run_bytes(scheme, g.node_count(), &bytes, &stream);
    println!(
        "verdict={} reason={} peak_state_bits={} certificate_bits={}",
        if verdict.is_accept() { "accept" } else { "reject" },
        verdict.reason.code(),
        report.peak_state_bits,
        report.certificate_bits
    );
    Ok(if verdict.is_accept() { 0 } else { EXIT_REJECT })
}

fn cmd_oracle(input: &GraphArgs) -> Result<u8> {
    let (g, _) = input.load(false)?;
    let params = Params::compute(&g)?;
    println!("n={} m={} {params}", g.node_count(), g.edge_count());
    Ok(0)
}

fn parse_gadget(name: &str, n: Option<usize>, p: Option<usize>, r: Option<usize>) -> Result<Gadget> {
    Ok(match name {
        "disj_matching" => Gadget::DisjMatching { n: n.unwrap_or(4) },
        "disj_degeneracy" => Gadget::DisjDegeneracy { n: n.unwrap_or(4) },
        "disj_diameter8" | "diam8" => Gadget::DisjDiameter8 { n: n.unwrap_or(3) },
        "holzer" | "holzer_diameter2" => Gadget::Holzer { p: p.unwrap_or(4) },
        "bitgadget_vc" => Gadget::BitgadgetVc { n: n.unwrap_or(2) },
        "perm_coloring" => Gadget::PermColoring { r: r.unwrap_or(3) },
        other => bail!("unknown gadget `{other}`"),
    })
}

fn parse_space(check: &str, seed: u64) -> Result<InstanceSpace> {
    if check == "exhaustive" {
        return Ok(InstanceSpace::Exhaustive);
    }
    let count = check
        .strip_prefix("sample:")
        .and_then(|c| c.parse().ok())
        .ok_or_else(|| anyhow!("--check expects exhaustive or sample:COUNT"))?;
    Ok(InstanceSpace::Sampled { count, seed })
}

fn cmd_gadget(gadget: Gadget, space: InstanceSpace, seed: u64, split: bool, verbose: bool) -> Result<u8> {
    // Building one instance validates the family's size parameter up front.
    let inputs = gadget.inputs();
    if let Some(x) = inputs.first() {
        gadget.build(x, x)?;
    }
    let report = gadgets::check_gadget_equivalence(&gadget, space)?;
    for line in report.lines.iter().filter(|l| verbose || !l.matches()) {
        println!("{line}");
    }
    let mismatches = report.mismatches();
    println!("gadget={} pairs={} mismatches={mismatches}", report.gadget, report.lines.len());
    let mut bad = mismatches;
    if split {
        let records = harness::run_split_stream(&gadget, space, seed)?;
        let inconsistent: Vec<_> = records.iter().filter(|r| !r.consistent()).collect();
        for r in records.iter().filter(|r| verbose || !r.consistent()) {
            println!("{r}");
        }
        println!("split_stream pairs={} inconsistent={}", records.len(), inconsistent.len());
        bad += inconsistent.len();
    }
    Ok(if bad == 0 { 0 } else { EXIT_COUNTEREXAMPLE })
}

fn cmd_fuzz(scheme: Scheme, input: &GraphArgs, seed: u64, trials: usize) -> Result<u8> {
    let (graph, k) = input.load(true)?;
    let k = k.unwrap();
    let params = Params::compute(&graph)?;
    if params.is_legal(scheme, k) {
        bail!("({scheme}, k = {k}) holds on this graph; fuzzing needs an illegal instance");
    }
    let entry = CorpusEntry { id: input.graph.clone(), graph, params, split: None };
    let mut policy = FuzzPolicy::standard(seed);
    policy.trials = trials;
    policy.modes.push(FuzzMode::Exhaustive);
    let (summary, breaches) = harness::fuzz_instance(scheme, &entry, k, &policy, &harness::soundness_orders(seed));
    for b in &breaches {
        println!("{b}");
    }
    println!("{summary}");
    Ok(if breaches.is_empty() { 0 } else { EXIT_COUNTEREXAMPLE })
}

fn cmd_scale(scheme: Scheme, sizes: &[usize]) -> Result<u8> {
    let (family, k) = harness::scaling_setup(scheme);
    let table = harness::run_space_scaling(scheme, family, k, sizes)?;
    println!("{table}");
    Ok(if table.within_bounds() { 0 } else { EXIT_COUNTEREXAMPLE })
}

fn dispatch(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Prove { scheme, input, out } => cmd_prove(scheme.get()?, &input, &out),
        Command::Verify { scheme, input, cert, order, seed } => cmd_verify(scheme.get()?, &input, &cert, &order, seed),
        Command::Oracle { input } => cmd_oracle(&input),
        Command::Gadget { name, n, p, r, check, seed, split, verbose } => {
            cmd_gadget(parse_gadget(&name, n, p, r)?, parse_space(&check, seed)?, seed, split, verbose)
        }
        Command::Fuzz { scheme, input, seed, trials } => cmd_fuzz(scheme.get()?, &input, seed, trials),
        Command::Scale { scheme, sizes } => cmd_scale(scheme.get()?, &sizes),
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
    match dispatch(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
