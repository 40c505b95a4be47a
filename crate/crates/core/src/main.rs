use clap::{Parser, Subcommand, ValueEnum};
use geography::constructor::{build_nimber_position, build_tree_nimber_capped, DEFAULT_TREE_CAP};
use geography::graph::{parse_directed, parse_position, serialize_position, Format, Position};
use geography::grundy::{exact_grundy, grundy_bab, grundy_degree3, BabConfig, Nimber, SolveBudget};
use geography::matching::winning_move;
use geography::reductions::{
    add_prelude, build_separation_instance, gg_to_ug, label_for_uno, shift_nimber_chain, uno_from_labeling,
};
use geography::service::{advise, serve, AdviceReason, ServeConfig, Store, StoreConfig};
use geography::variants::{fast_variant_solve, parse_variant, variant_to_json, VariantMove, VariantState};
use geography::verify::{self, Suite};
use serde_json::json;
use std::io::{BufRead, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

#[derive(Parser)]
#[command(name = "geo", version, about = "Undirected Geography solver and toolkit")]
struct Cli {
    /// Report results and errors as JSON on stdout.
    #[arg(long, global = true)]
    json: bool,

    /// State limit for exponential searches.
    #[arg(long, global = true, default_value_t = SolveBudget::default().max_states)]
    max_states: u64,

    /// Time limit for exponential searches, in milliseconds.
    #[arg(long, global = true, default_value_t = SolveBudget::default().max_millis)]
    max_millis: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide who wins and name a winning move. Accepts a board or a variant envelope.
    Solve { input: String },
    /// Grundy value of a board.
    Grundy {
        input: String,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
    },
    /// Build a position with a prescribed value.
    Construct {
        #[arg(long)]
        nimber: u32,
        /// Use the exponential tree instead of the polynomial construction.
        #[arg(long)]
        tree: bool,
        /// Print vertex labels as a second JSON line.
        #[arg(long)]
        labels: bool,
    },
    /// Transform instances between Geography variants.
    Reduce {
        #[command(subcommand)]
        kind: Reduce,
    },
    /// Value of the disjunctive sum of several boards.
    Sum {
        #[arg(required = true)]
        inputs: Vec<String>,
    },
    /// Run built-in consistency checks.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Play a variant envelope in the terminal.
    Play {
        input: String,
        /// Players controlled by the engine (0 moves first).
        #[arg(long = "ai", value_parser = clap::value_parser!(u8).range(0..=1))]
        ai: Vec<u8>,
    },
    /// Run the HTTP game service.
    Serve {
        #[arg(long, env = "GEO_PORT", default_value_t = 8080)]
        port: u16,
        #[arg(long, env = "GEO_SNAPSHOT_DIR")]
        snapshot_dir: Option<PathBuf>,
        #[arg(long, env = "GEO_CORS_ORIGIN")]
        cors_origin: Option<String>,
    },
}

#[derive(Subcommand)]
enum Reduce {
    /// Directed board to undirected board via arc gadgets.
    Gg2ug {
        input: String,
        #[arg(long)]
        prelude: bool,
    },
    /// Lift a board of value *(from-1) or *from to *(to-1) or *to.
    Chain {
        input: String,
        #[arg(long)]
        from: u32,
        #[arg(long)]
        to: u32,
    },
    /// Send *k to *target and *(k-1) to *k.
    Separate {
        input: String,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        target: u32,
    },
    /// Directed board to a Swap Uno deal through the arc gadgets.
    Uno { input: String },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Auto,
    Exact,
    Degree3,
    Bab,
}

enum CliError {
    /// Bad invocation: exit code 2.
    Usage(String),
    /// Input parsed but the request failed: exit code 1.
    Domain(String),
}

fn domain(e: impl std::fmt::Display) -> CliError {
    CliError::Domain(e.to_string())
}

type CliResult<T> = Result<T, CliError>;

fn read_input(path: &str) -> CliResult<Vec<u8>> {
    if path == "-" {
        let mut buf = Vec::new();
        std::io::stdin()
            .read_to_end(&mut buf)
            .map_err(|e| CliError::Usage(format!("stdin: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read(path).map_err(|e| CliError::Usage(format!("{path}: {e}")))
    }
}

fn read_board(path: &str) -> CliResult<Position> {
    let text = read_input(path)?;
    parse_position(&text, Format::detect(&text)).map_err(|e| domain(format!("{path}: {e}")))
}

fn emit(value: serde_json::Value) {
    println!("{value}");
}

fn grundy_of(p: &Position, method: Method, budget: SolveBudget) -> CliResult<Nimber> {
    let method = match method {
        Method::Auto if p.graph().max_degree() <= 3 => Method::Degree3,
        Method::Auto => Method::Bab,
        m => m,
    };
    match method {
        Method::Exact => exact_grundy(p, &p.fresh_mask(), budget).map_err(domain),
        Method::Degree3 => grundy_degree3(p).map_err(domain),
        Method::Bab => grundy_bab(
            p,
            BabConfig {
                budget: Some(budget),
                ..BabConfig::default()
            },
        )
        .map_err(domain),
        Method::Auto => unreachable!("resolved above"),
    }
}

fn solve(input: &str, budget: SolveBudget) -> CliResult<()> {
    let text = read_input(input)?;
    let is_envelope = serde_json::from_slice::<serde_json::Value>(&text)
        .ok()
        .is_some_and(|v| v.get("variant").is_some());
    if is_envelope {
        let state = parse_variant(&text).map_err(domain)?;
        let fast = fast_variant_solve(&state, budget);
        let advice = advise(&state, budget);
        emit(json!({
            "winnable": fast.winnable,
            "value": fast.value,
            "method": fast.method,
            "winning_move": advice.mv,
            "advice_quality": advice.quality,
        }));
        return Ok(());
    }
    let p = parse_position(&text, Format::detect(&text)).map_err(|e| domain(format!("{input}: {e}")))?;
    let mv = winning_move(&p, &p.fresh_mask());
    emit(json!({ "winnable": mv.is_some(), "winning_move": mv }));
    Ok(())
}

fn construct(nimber: u32, tree: bool, labels: bool) -> CliResult<()> {
    let c = if tree {
        build_tree_nimber_capped(nimber, DEFAULT_TREE_CAP).map_err(domain)?
    } else {
        build_nimber_position(nimber)
    };
    println!("{}", serialize_position(&c.position));
    if labels {
        let names: Vec<String> = c.labels.iter().map(ToString::to_string).collect();
        emit(json!({ "target": c.target, "labels": names }));
    }
    Ok(())
}

fn reduce(kind: Reduce) -> CliResult<()> {
    let out = match kind {
        Reduce::Gg2ug { input, prelude } => {
            let text = read_input(&input)?;
            let dp = parse_directed(&text, Format::detect(&text)).map_err(|e| domain(format!("{input}: {e}")))?;
            let (p, _) = gg_to_ug(&dp);
            if prelude {
                add_prelude(&p)
            } else {
                p
            }
        }
        Reduce::Chain { input, from, to } => shift_nimber_chain(&read_board(&input)?, from, to).map_err(domain)?,
        Reduce::Separate { input, k, target } => {
            build_separation_instance(&read_board(&input)?, k, target).map_err(domain)?
        }
        Reduce::Uno { input } => {
            let text = read_input(&input)?;
            let dp = parse_directed(&text, Format::detect(&text)).map_err(|e| domain(format!("{input}: {e}")))?;
            let (p, map) = gg_to_ug(&dp);
            let labeling = label_for_uno(&p, &map).map_err(domain)?;
            let deal = VariantState::SwapUno(uno_from_labeling(&labeling));
            emit(serde_json::to_value(variant_to_json(&deal)).expect("envelopes serialize"));
            return Ok(());
        }
    };
    println!("{}", serialize_position(&out));
    Ok(())
}

fn sum(inputs: &[String], budget: SolveBudget) -> CliResult<()> {
    let mut values = Vec::with_capacity(inputs.len());
    for input in inputs {
        values.push(grundy_of(&read_board(input)?, Method::Auto, budget)?);
    }
    let total = values.iter().fold(Nimber::ZERO, |acc, &v| acc ^ v);
    emit(json!({ "nimber": total, "components": values }));
    Ok(())
}

fn run_verify(suite: Suite, seed: u64, as_json: bool) -> CliResult<bool> {
    let reports = verify::run(suite, seed).map_err(domain)?;
    if as_json {
        emit(serde_json::to_value(&reports).expect("reports serialize"));
    } else {
        for r in &reports {
            let verdict = if r.passed { "PASS" } else { "FAIL" };
            println!("{verdict} {:?}: {} checks", r.suite, r.checked);
            for f in &r.failures {
                println!("    {f}");
            }
        }
    }
    Ok(reports.iter().all(|r| r.passed))
}

fn describe(mv: &VariantMove) -> String {
    serde_json::to_string(mv).expect("moves serialize")
}

/// Terminal game loop over the same session store the HTTP service uses.
fn play(input: &str, ai: Vec<u8>, budget: SolveBudget) -> CliResult<()> {
    let state = parse_variant(&read_input(input)?).map_err(domain)?;
    let store = Store::new(StoreConfig {
        snapshot_dir: None,
        budget,
    });
    let created = store.create_session(state, ai).map_err(domain)?;
    let id = created.game.id.clone();
    let mut ai_moves = created.ai_moves;
    let stdin = std::io::stdin();
    let mut lines = stdin.lock().lines();
    loop {
        for m in &ai_moves {
            println!("player {} (engine) plays {} [{:?}]", m.player, describe(&m.mv), m.advice_quality);
        }
        let view = store.get(&id).map_err(domain)?;
        println!("board: {}", serde_json::to_string(&view.board).expect("views serialize"));
        if view.terminal {
            println!("player {} wins", view.winner.expect("terminal games have a winner"));
            return Ok(());
        }
        println!("player {} to move:", view.to_move);
        for (i, mv) in view.legal_moves.iter().enumerate() {
            println!("  {i}: {}", describe(mv));
        }
        print!("move number, 'hint' or 'quit'> ");
        std::io::stdout().flush().ok();
        let Some(line) = lines.next() else {
            return Ok(());
        };
        let line = line.map_err(|e| CliError::Usage(e.to_string()))?;
        let line = line.trim();
        match line {
            "quit" | "q" => return Ok(()),
            "hint" | "h" => {
                let hint = store.hint(&id).map_err(domain)?;
                match (hint.mv, hint.reason) {
                    (Some(mv), _) => println!("hint: {}", describe(&mv)),
                    (None, AdviceReason::NeedsNimber) => println!("hint: not affordable within budget"),
                    (None, _) => println!("hint: no winning move"),
                }
                ai_moves = Vec::new();
                continue;
            }
            _ => {}
        }
        let mv = match line.parse::<usize>() {
            Ok(i) if i < view.legal_moves.len() => view.legal_moves[i],
            _ => match serde_json::from_str::<VariantMove>(line) {
                Ok(mv) => mv,
                Err(_) => {
                    println!("unrecognized input");
                    ai_moves = Vec::new();
                    continue;
                }
            },
        };
        match store.apply_move(&id, mv) {
            Ok(r) => ai_moves = r.ai_moves,
            Err(e) => {
                println!("{e}");
                ai_moves = Vec::new();
            }
        }
    }
}

fn run(cli: Cli) -> CliResult<bool> {
    let budget = SolveBudget {
        max_states: cli.max_states,
        max_millis: cli.max_millis,
    };
    match cli.command {
        Command::Solve { input } => solve(&input, budget)?,
        Command::Grundy { input, method } => {
            let v = grundy_of(&read_board(&input)?, method, budget)?;
            emit(json!({ "nimber": v }));
        }
        Command::Construct { nimber, tree, labels } => construct(nimber, tree, labels)?,
        Command::Reduce { kind } => reduce(kind)?,
        Command::Sum { inputs } => sum(&inputs, budget)?,
        Command::Verify { suite, seed } => return run_verify(suite, seed, cli.json),
        Command::Play { input, ai } => play(&input, ai, budget)?,
        Command::Serve {
            port,
            snapshot_dir,
            cors_origin,
        } => {
            tracing_subscriber::fmt()
                .with_env_filter(
                    tracing_subscriber::EnvFilter::try_from_default_env().unwrap_or_else(|_| "info".into()),
                )
                .init();
            let store = Arc::new(Store::new(StoreConfig {
                snapshot_dir,
                ..StoreConfig::default()
            }));
            let restored = store.load_snapshots().map_err(domain)?;
            if restored > 0 {
                tracing::info!(restored, "sessions restored from snapshots");
            }
            let runtime = tokio::runtime::Runtime::new().map_err(domain)?;
            runtime
                .block_on(serve(store, ServeConfig { port, cors_origin }))
                .map_err(domain)?;
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let as_json = cli.json;
    let (code, message) = match run(cli) {
        Ok(true) => return ExitCode::SUCCESS,
        Ok(false) => return ExitCode::from(1),
        Err(CliError::Domain(m)) => (1, m),
        Err(CliError::Usage(m)) => (2, m),
    };
    if as_json {
        emit(json!({ "error": message, "exit_code": code }));
    } else {
        eprintln!("geo: {message}");
    }
    ExitCode::from(code)
}
