use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use prepermuto::betti::{BettiTable, Method};
use prepermuto::chains::{cone_of_chain, Chain};
use prepermuto::charseries::{
    ch_from_codes, complete_graph, csf_bruteforce, csf_complete, csf_lollipop, csf_path,
    lollipop_graph, path_graph, series_a, verify_identity, MAX_COLORING_N,
};
use prepermuto::codes::{enumerate_codes, orbits};
use prepermuto::fan::{fan_json, maximal_chains};
use prepermuto::flags::verify_flags;
use prepermuto::verify::run_all;
use prepermuto::{MonomialExpansion, SymSeries};

/// Largest `n` accepted where enumeration grows like `n!`.
const MAX_N: usize = 9;
const MAX_VERIFY_N: usize = 6;

#[derive(Parser)]
#[command(
    name = "prepermuto",
    version,
    about = "Fans, Betti numbers, codes and character series of prepermutohedral varieties"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, default_value_t = 500)]
    trials: usize,
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the document here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Args)]
struct NK {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Descents,
    Recursion,
    Codes,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum Source {
    Recursion,
    Codes,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphKind {
    Lollipop,
    Path,
    Complete,
}

#[derive(Subcommand)]
enum Command {
    /// Maximal cones of the fan, with their chains and generators.
    Fan(NK),
    /// Even Betti numbers.
    Betti {
        #[command(flatten)]
        nk: NK,
        #[arg(long, value_enum, default_value_t = MethodArg::All)]
        method: MethodArg,
    },
    /// Codes of length n with at least `min-mu` copies of their maximum.
    Codes {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        min_mu: usize,
        /// Group into symmetric-group orbits.
        #[arg(long)]
        orbits: bool,
    },
    /// Graded Frobenius characteristic of the cohomology.
    Charseries {
        #[command(flatten)]
        nk: NK,
        #[arg(long, value_enum, default_value_t = Source::Recursion)]
        source: Source,
    },
    /// Chromatic quasisymmetric function of a graph.
    Csf {
        #[arg(long, value_enum)]
        graph: GraphKind,
        #[arg(long)]
        n: usize,
        /// Lollipop tail length; ignored for other graphs.
        #[arg(long, default_value_t = 0)]
        k: usize,
        /// Count proper colorings instead of using the closed formula.
        #[arg(long)]
        bruteforce: bool,
    },
    /// Seeded Krylov-flag checks.
    Flags {
        #[command(subcommand)]
        action: FlagsAction,
    },
    /// Single identity checks.
    Verify {
        #[command(subcommand)]
        action: VerifyAction,
    },
    /// Run the full self-check suite.
    VerifyAll {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
    },
}

#[derive(Subcommand)]
enum FlagsAction {
    Verify {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand)]
enum VerifyAction {
    /// The lollipop identity for one (n, k).
    Identity(NK),
}

/// A rendered document plus whether the command's checks passed.
struct Output {
    json: Value,
    table: String,
    ok: bool,
}

impl Output {
    fn ok(json: Value, table: String) -> Self {
        Output {
            json,
            table,
            ok: true,
        }
    }
}

enum Failure {
    Usage(String),
    Io(String),
}

impl From<prepermuto::Error> for Failure {
    fn from(e: prepermuto::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn check_n(n: usize, lo: usize, hi: usize) -> Result<(), Failure> {
    if n < lo || n > hi {
        return Err(usage(format!("n must be in {lo}..={hi}, got {n}")));
    }
    Ok(())
}

fn series_json(s: &SymSeries) -> Value {
    serde_json::to_value(s).expect("series serializes")
}

fn monomials_json(m: &MonomialExpansion) -> Value {
    Value::Array(
        m.iter()
            .map(|(exp, c)| json!({ "exponents": exp, "coeff": c }))
            .collect(),
    )
}

fn fan(n: usize, k: usize) -> Result<Output, Failure> {
    check_n(n, 2, MAX_N)?;
    let chains: Vec<Chain> = maximal_chains(n, k)?;
    let mut table = format!("n={n} k={k} maximal cones: {}\n", chains.len());
    let width = chains
        .iter()
        .map(|c| c.to_string().chars().count())
        .max()
        .unwrap_or(0);
    for c in &chains {
        let s = c.to_string();
        let pad = width - s.chars().count();
        let gens: Vec<String> = cone_of_chain(c)
            .generators
            .iter()
            .map(|g| format!("{g:?}"))
            .collect();
        let _ = writeln!(table, "{s}{}  {}", " ".repeat(pad), gens.join(" "));
    }
    Ok(Output::ok(fan_json(n, k)?, table))
}

fn betti_row(t: &BettiTable) -> String {
    t.betti.iter().map(|b| format!("{b:>6}")).collect()
}

fn betti(n: usize, k: usize, method: MethodArg) -> Result<Output, Failure> {
    check_n(n, 2, MAX_N)?;
    let methods: Vec<Method> = match method {
        MethodArg::Descents => vec![Method::Descents],
        MethodArg::Recursion => vec![Method::Recursion],
        MethodArg::Codes => vec![Method::Codes],
        MethodArg::All => Method::ALL.to_vec(),
    };
    let tables = methods
        .iter()
        .map(|m| m.compute(n, k))
        .collect::<prepermuto::Result<Vec<_>>>()?;
    let agree = tables.windows(2).all(|w| w[0] == w[1]);
    let mut table = String::new();
    for (m, t) in methods.iter().zip(&tables) {
        let name = serde_json::to_value(m).expect("method serializes");
        let _ = writeln!(table, "{:<10}{}", name.as_str().unwrap_or(""), betti_row(t));
    }
    let json = if methods.len() == 1 {
        json!({ "n": n, "k": k, "betti": tables[0].betti, "method": methods[0] })
    } else {
        let _ = writeln!(table, "agree: {agree}");
        json!({ "n": n, "k": k, "betti": tables[0].betti, "method": "all", "agree": agree })
    };
    Ok(Output {
        json,
        table,
        ok: agree,
    })
}

fn codes(n: usize, min_mu: usize, group: bool) -> Result<Output, Failure> {
    check_n(n, 1, MAX_N)?;
    let mut table = String::new();
    let json = if group {
        let data = orbits(n, min_mu);
        for o in &data {
            let ty: Vec<String> = o.stabilizer_type.iter().map(|p| p.to_string()).collect();
            let _ = writeln!(
                table,
                "size {:>6}  type {:<12}  {}",
                o.orbit_size,
                ty.join(","),
                o.representative
            );
        }
        serde_json::to_value(&data).expect("orbits serialize")
    } else {
        let all = enumerate_codes(n, min_mu);
        for c in &all {
            let _ = writeln!(table, "{c}  mu {}  ind {}", c.mu(), c.ind());
        }
        serde_json::to_value(&all).expect("codes serialize")
    };
    Ok(Output::ok(
        json!({ "n": n, "min_mu": min_mu, "codes": json }),
        table,
    ))
}

fn charseries(n: usize, k: usize, source: Source) -> Result<Output, Failure> {
    check_n(n, 2, MAX_N)?;
    let s = match source {
        Source::Recursion => series_a(n, k)?,
        Source::Codes => ch_from_codes(n, k)?,
    };
    Ok(Output::ok(series_json(&s), format!("{s}\n")))
}

fn csf(kind: GraphKind, n: usize, k: usize, bruteforce: bool) -> Result<Output, Failure> {
    check_n(n, 1, MAX_N)?;
    let formula = match kind {
        GraphKind::Lollipop => csf_lollipop(n, k)?,
        GraphKind::Path => csf_path(n)?,
        GraphKind::Complete => csf_complete(n),
    };
    if !bruteforce {
        return Ok(Output::ok(series_json(&formula), format!("{formula}\n")));
    }
    check_n(n, 1, MAX_COLORING_N)?;
    let g = match kind {
        GraphKind::Lollipop => lollipop_graph(n, k)?,
        GraphKind::Path => path_graph(n),
        GraphKind::Complete => complete_graph(n),
    };
    let brute = csf_bruteforce(&g, true)?;
    let agree = brute == formula.expand_monomials(n);
    let mut table = String::new();
    for (exp, c) in &brute {
        let _ = writeln!(table, "{exp:?}  {c}");
    }
    let _ = writeln!(table, "agrees with formula: {agree}");
    let json = json!({ "monomials": monomials_json(&brute), "agrees_with_formula": agree });
    Ok(Output {
        json,
        table,
        ok: agree,
    })
}

fn flags_verify(n: usize, trials: usize, seed: u64) -> Result<Output, Failure> {
    check_n(n, 1, 12)?;
    let r = verify_flags(n, trials, seed);
    let table = format!(
        "n={} seed={} trials={} violations={}\n",
        r.n, r.seed, r.trials, r.violations
    );
    let ok = r.violations == 0;
    let json = serde_json::to_value(&r).expect("report serializes");
    Ok(Output { json, table, ok })
}

fn identity(n: usize, k: usize) -> Result<Output, Failure> {
    check_n(n, 4, MAX_N)?;
    let holds = verify_identity(n, k)?;
    Ok(Output {
        json: json!({ "n": n, "k": k, "holds": holds }),
        table: format!("n={n} k={k} identity holds: {holds}\n"),
        ok: holds,
    })
}

fn verify_all(max_n: usize, trials: usize, seed: u64) -> Result<Output, Failure> {
    check_n(max_n, 2, MAX_VERIFY_N)?;
    let r = run_all(max_n, seed, trials);
    let mut table = String::new();
    for c in &r.checks {
        let status = if c.passed { "PASS" } else { "FAIL" };
        let _ = writeln!(table, "{:<22}{status}  {:>5} cases", c.name, c.cases);
        for f in &c.failures {
            let _ = writeln!(table, "    {f}");
        }
    }
    let ok = r.all_ok();
    let json = serde_json::to_value(&r).expect("report serializes");
    Ok(Output { json, table, ok })
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::Fan(nk) => fan(nk.n, nk.k),
        Command::Betti { nk, method } => betti(nk.n, nk.k, *method),
        Command::Codes { n, min_mu, orbits } => codes(*n, *min_mu, *orbits),
        Command::Charseries { nk, source } => charseries(nk.n, nk.k, *source),
        Command::Csf {
            graph,
            n,
            k,
            bruteforce,
        } => csf(*graph, *n, *k, *bruteforce),
        Command::Flags {
            action: FlagsAction::Verify { n },
        } => flags_verify(*n, cli.trials, cli.seed),
        Command::Verify {
            action: VerifyAction::Identity(nk),
        } => identity(nk.n, nk.k),
        Command::VerifyAll { max_n } => verify_all(*max_n, cli.trials, cli.seed),
    }
}

fn emit(cli: &Cli, out: &Output) -> Result<(), Failure> {
    let text = match cli.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&out.json).expect("json renders");
            s.push('\n');
            s
        }
        Format::Table => out.table.clone(),
    };
    match &cli.out {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|out| emit(&cli, &out).map(|()| out.ok));
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
