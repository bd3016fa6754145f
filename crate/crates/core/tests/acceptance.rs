//! Release gate. Each check prints one `PASS` or `FAIL` line; the process
//! exits nonzero if any check fails.

mod common;

use std::collections::HashMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use streamcert::cert::{self, Scheme};
use streamcert::gadgets::{check_gadget_equivalence, Gadget, InstanceSpace};
use streamcert::generators;
use streamcert::graph::Graph;
use streamcert::harness::{self, build_corpus, Corpus, FuzzPolicy};
use streamcert::oracles;
use streamcert::provers;
use streamcert::stream::{make_stream, OrderSpec};
use streamcert::verifiers::{run, space_bound};

const SEED: u64 = 2024;

const CORPUS: &str = "paths n=2..16; cycles n=3..16; cliques n=1..10; stars n=2..16; matchings n=2..16; \
    empty n=1..6; trees n=2..16 count=40; gnp n=2..16 p=0.15 count=70; gnp n=2..16 p=0.3 count=70; \
    gnp n=2..16 p=0.5 count=60; gadgets count=4";

const MIN_LEGAL: usize = 500;
const MIN_ILLEGAL: usize = 300;
const BATTERY_ORDERS: usize = 23;
const SOUNDNESS_ORDERS: usize = 5;
const FUZZ_TRIALS: usize = 200;

const COMPLETENESS_BUDGET: Duration = Duration::from_secs(5 * 60);
const SOUNDNESS_BUDGET: Duration = Duration::from_secs(10 * 60);
const TUTTE_BERGE_BUDGET: Duration = Duration::from_secs(2 * 60);
const GADGET_BUDGET: Duration = Duration::from_secs(15 * 60);
const SPACE_BUDGET: Duration = Duration::from_secs(5 * 60);

const TUTTE_BERGE_GRAPHS: u64 = 1000;
const TUTTE_BERGE_MAX_N: usize = 12;

const SCALING_SIZES: [usize; 4] = [1 << 8, 1 << 10, 1 << 12, 1 << 14];

const COLORING_GRAPHS: u64 = 500;
const COLORING_MAX_N: usize = 200;
const COLORING_MAX_DEGREE: usize = 6;

const EQUALITY_MAX_N: usize = 12;

struct Outcome {
    pass: bool,
    detail: String,
}

fn check(name: &str, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let o = f();
    println!(
        "{} {name}: {} elapsed={:.1}s",
        if o.pass { "PASS" } else { "FAIL" },
        o.detail,
        start.elapsed().as_secs_f64()
    );
    o.pass
}

fn within(start: Instant, budget: Duration) -> bool {
    start.elapsed() <= budget
}

fn completeness(corpus: &Corpus) -> Outcome {
    let start = Instant::now();
    let battery = OrderSpec::battery();
    assert_eq!(battery.len(), BATTERY_ORDERS);
    let mut pass = true;
    let mut parts = Vec::new();
    for scheme in Scheme::ALL {
        let r = harness::run_completeness(scheme, corpus, &battery);
        let failures: Vec<_> = r.failures().collect();
        for f in failures.iter().take(5) {
            println!("  {f}");
        }
        // The instance floor applies to the basic schemes; the equality
        // schemes have one legal threshold per graph.
        let enough = !Scheme::BASIC.contains(&scheme) || r.instances >= MIN_LEGAL;
        pass &= failures.is_empty() && enough;
        parts.push(format!("{scheme}={}/{}", r.instances, failures.len()));
    }
    let ok_time = within(start, COMPLETENESS_BUDGET);
    Outcome { pass: pass && ok_time, detail: format!("legal/failures {}", parts.join(" ")) }
}

fn soundness(corpus: &Corpus) -> Outcome {
    let start = Instant::now();
    let orders = harness::soundness_orders(SEED);
    assert_eq!(orders.len(), SOUNDNESS_ORDERS);
    let mut policy = FuzzPolicy::standard(SEED);
    policy.trials = FUZZ_TRIALS;
    let mut pass = true;
    let mut parts = Vec::new();
    let mut trials = 0;
    for scheme in Scheme::ALL {
        let r = harness::run_soundness(scheme, corpus, &policy, &orders);
        for b in r.breaches.iter().take(5) {
            println!("  {b}");
        }
        trials += r.trials();
        let enough = !Scheme::BASIC.contains(&scheme) || r.summaries.len() >= MIN_ILLEGAL;
        pass &= r.breaches.is_empty() && enough;
        parts.push(format!("{scheme}={}/{}", r.summaries.len(), r.breaches.len()));
    }
    let ok_time = within(start, SOUNDNESS_BUDGET);
    Outcome { pass: pass && ok_time, detail: format!("trials={trials} illegal/accepts {}", parts.join(" ")) }
}

fn tutte_berge() -> Outcome {
    let start = Instant::now();
    let mut bad = Vec::new();
    for seed in 0..TUTTE_BERGE_GRAPHS {
        let g = common::random_graph(seed, TUTTE_BERGE_MAX_N);
        let (value, witness) = oracles::tutte_berge(&g).expect("n is below the oracle limit");
        let mut in_u = vec![false; g.node_count()];
        for v in witness {
            in_u[v as usize - 1] = true;
        }
        let nu = oracles::max_matching(&g);
        if value != nu || nu != common::matching(&g) || oracles::tutte_berge_bound(&g, &in_u) != value {
            bad.push(seed);
        }
    }
    let ok_time = within(start, TUTTE_BERGE_BUDGET);
    Outcome { pass: bad.is_empty() && ok_time, detail: format!("graphs={TUTTE_BERGE_GRAPHS} mismatches={bad:?}") }
}

fn gadget_sweeps() -> Outcome {
    let start = Instant::now();
    let sweeps = [
        (Gadget::Holzer { p: 4 }, InstanceSpace::Exhaustive, 4096),
        (Gadget::DisjMatching { n: 4 }, InstanceSpace::Exhaustive, 36),
        (Gadget::DisjDegeneracy { n: 4 }, InstanceSpace::Exhaustive, 256),
        (Gadget::PermColoring { r: 3 }, InstanceSpace::Exhaustive, 36),
        (Gadget::BitgadgetVc { n: 2 }, InstanceSpace::Exhaustive, 256),
        (Gadget::DisjDiameter8 { n: 3 }, InstanceSpace::Sampled { count: 1000, seed: SEED }, 1000),
    ];
    let mut pass = true;
    let mut parts = Vec::new();
    for (gadget, space, pairs) in sweeps {
        let r = check_gadget_equivalence(&gadget, space).expect("sweep runs");
        for l in r.lines.iter().filter(|l| !l.matches()).take(5) {
            println!("  {} {l}", r.gadget);
        }
        pass &= r.lines.len() == pairs && r.mismatches() == 0;
        parts.push(format!("{}={}/{}", r.gadget, r.lines.len(), r.mismatches()));
    }
    let ok_time = within(start, GADGET_BUDGET);
    Outcome { pass: pass && ok_time, detail: format!("pairs/mismatches {}", parts.join(" ")) }
}

/// Bits to write every value in `0..=x`, by repeated halving.
fn width(mut x: u64) -> u64 {
    let mut w = 0;
    while x > 0 {
        x >>= 1;
        w += 1;
    }
    w
}

/// Smallest `w` with `2^w >= x`.
fn ceil_log2(x: u64) -> u64 {
    let mut w = 0;
    while (1u64 << w) < x {
        w += 1;
    }
    w
}

/// Declared peak state: 64 registers of `⌈log2(n + 2)⌉` bits plus counters.
fn expected_bound(scheme: Scheme, n: u64, k: u64) -> u64 {
    let regs = 64 * ceil_log2(n + 2);
    match scheme {
        Scheme::MmAtLeastList | Scheme::IsAtLeast | Scheme::VcAtMost => regs,
        Scheme::CliqueAtLeast => {
            let s = k.min(n + 1);
            regs + width(s * s.saturating_sub(1) / 2)
        }
        Scheme::DiamAtLeast | Scheme::ColoringAtMost => regs + width(k),
        Scheme::MmAtLeastColoring => regs + n,
        Scheme::DegAtMost | Scheme::DegAtLeast => regs + n * width(k + 1),
        Scheme::MmAtMost => regs + 2 * (n - 1) * width(n) + n * width(n),
        Scheme::EqMatching => expected_bound(Scheme::MmAtMost, n, k) + expected_bound(Scheme::MmAtLeastList, n, k),
        Scheme::EqDegeneracy => expected_bound(Scheme::DegAtMost, n, k) + expected_bound(Scheme::DegAtLeast, n, k),
    }
}

/// Certificate size on the scaling family: ids take `⌈log2 n⌉` bits, counts
/// `⌈log2(n + 1)⌉`.
fn expected_cert_bits(scheme: Scheme, n: u64, k: u64) -> u64 {
    let id = ceil_log2(n);
    let count = ceil_log2(n + 1);
    match scheme {
        Scheme::MmAtLeastList => count + 2 * k * id,
        // Maximum degree 1 leaves a single colour of width 0 after the header.
        Scheme::MmAtLeastColoring => 6,
        Scheme::MmAtMost => n,
        Scheme::DegAtMost => n * id,
        Scheme::DegAtLeast => 1 + n,
        Scheme::DiamAtLeast => n * ceil_log2(k + 2),
        Scheme::ColoringAtMost => n * ceil_log2(k),
        Scheme::IsAtLeast | Scheme::CliqueAtLeast | Scheme::VcAtMost => count + k * id,
        Scheme::EqMatching => expected_cert_bits(Scheme::MmAtMost, n, k) + expected_cert_bits(Scheme::MmAtLeastList, n, k),
        Scheme::EqDegeneracy => expected_cert_bits(Scheme::DegAtMost, n, k) + expected_cert_bits(Scheme::DegAtLeast, n, k),
    }
}

fn space() -> Outcome {
    let start = Instant::now();
    let mut pass = true;
    let mut parts = Vec::new();
    for scheme in Scheme::ALL {
        let (family, threshold) = harness::scaling_setup(scheme);
        let table = harness::run_space_scaling(scheme, family, threshold, &SCALING_SIZES).expect("legal family");
        for r in &table.rows {
            let (n, k) = (r.n as u64, r.k as u64);
            let bound = expected_bound(scheme, n, k);
            let ok = r.verdict.is_accept()
                && r.bound == bound
                && space_bound(scheme, r.n, r.k) == bound
                && r.peak_state_bits <= bound
                && r.certificate_bits == expected_cert_bits(scheme, n, k);
            if !ok {
                println!("  scheme={scheme} {r} expected_bound={bound} expected_cert={}", expected_cert_bits(scheme, n, k));
            }
            pass &= ok;
        }
        parts.push(format!("{scheme}:slope={:.2}", table.peak_slope()));
    }
    let ok_time = within(start, SPACE_BUDGET);
    Outcome { pass: pass && ok_time, detail: format!("sizes={SCALING_SIZES:?} {}", parts.join(" ")) }
}

fn coloring_construction() -> Outcome {
    let battery = OrderSpec::battery();
    let mut failures = Vec::new();
    for seed in 0..COLORING_GRAPHS {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(1..=COLORING_MAX_N);
        let cap = rng.gen_range(1..=COLORING_MAX_DEGREE);
        let g = generators::bounded_degree(n, cap, n * cap, &mut rng);
        let delta = g.max_degree();
        let k = oracles::max_matching(&g);
        let c = provers::prove(Scheme::MmAtLeastColoring, &g, k).expect("k = ν is legal");
        let fields = cert::decode_matching_coloring(n, &c.as_ref()).expect("honest certificate decodes");
        let color: Vec<u64> = (0..n).map(|i| fields.raw(i) + 1).collect();
        let palette = (2 * delta).saturating_sub(1).max(1) as u64;
        let mut same = vec![0usize; n];
        let mut mono = 0;
        for e in g.edges() {
            let (a, b) = (e.u() as usize - 1, e.v() as usize - 1);
            if color[a] == color[b] {
                mono += 1;
                same[a] += 1;
                same[b] += 1;
            }
        }
        let accepted = battery.iter().all(|&o| run(Scheme::MmAtLeastColoring, n, c.as_ref(), &make_stream(&g, k, o)).0.is_accept());
        let ok = color.iter().all(|&x| x <= palette) && mono >= k && same.iter().all(|&s| s <= 1) && accepted;
        if !ok {
            failures.push(seed);
        }
    }
    Outcome {
        pass: failures.is_empty(),
        detail: format!("graphs={COLORING_GRAPHS} max_degree<={COLORING_MAX_DEGREE} failures={failures:?}"),
    }
}

fn equality(corpus: &Corpus) -> Outcome {
    let graphs: HashMap<&str, &Graph> = corpus.entries.iter().map(|e| (e.id.as_str(), &e.graph)).collect();
    let records = harness::run_equality_agreement(corpus, EQUALITY_MAX_N, SEED);
    let mut bad = 0;
    for r in &records {
        let g = graphs[r.graph.as_str()];
        let truth = match r.scheme {
            Scheme::EqMatching => common::matching(g),
            _ => common::degeneracy(g),
        };
        if !r.agrees() || r.value != truth {
            println!("  {r} reference={truth}");
            bad += 1;
        }
    }
    let graphs_in_range = corpus.entries.iter().filter(|e| e.graph.node_count() <= EQUALITY_MAX_N).count();
    Outcome {
        pass: bad == 0 && !records.is_empty(),
        detail: format!("graphs={graphs_in_range} records={} disagreements={bad}", records.len()),
    }
}

fn main() -> ExitCode {
    let corpus = build_corpus(CORPUS, SEED).expect("corpus builds");
    println!("corpus graphs={} seed={SEED}", corpus.entries.len());
    let results = [
        check("completeness", || completeness(&corpus)),
        check("soundness", || soundness(&corpus)),
        check("tutte_berge_equality", tutte_berge),
        check("gadget_equivalences", gadget_sweeps),
        check("space_bounds", space),
        check("matching_coloring_construction", coloring_construction),
        check("equality_combinator", || equality(&corpus)),
    ];
    let failed = results.iter().filter(|&&p| !p).count();
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
