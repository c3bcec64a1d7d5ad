//! The `condev` command line. [`run`] takes the argument list and writes to
//! the given sinks, returning the process exit code: 0 on success, 2 for
//! malformed input, 3 for invalid distributions, 4 when an internal cap is
//! exceeded.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::automata::{
    compile, is_counter_free, minimize, transition_monoid_size, MooreMachine, DEFAULT_MONOID_CAP,
};
use crate::chains::{format_f64, to_f64, Dist, MarkovChain};
use crate::connectives::Connective;
use crate::logic::{
    parse_conditional, parse_formula, trace_conditional, CondPair, EventSet, Formula,
};
use crate::probability::{
    classify_event, event_report, simulate_pr_n, CondEvent, EventReport, HeuristicConfig, PrnValue,
};
use crate::{Error, Result};

#[derive(Debug, Parser)]
#[command(
    name = "condev",
    version,
    about = "Conditional events over past-time temporal logic"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Global {
    /// Event names, space separated, e.g. "a b c".
    #[arg(short, long, global = true)]
    events: Option<String>,
    /// Distribution file.
    #[arg(short, long, global = true)]
    dist: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Number of exact Pr_n values searched for a periodic pattern.
    #[arg(long, default_value_t = 256, global = true)]
    window: usize,
    #[arg(long, default_value_t = 64, global = true)]
    max_period: usize,
    #[arg(long, default_value_t = 128, global = true)]
    max_preperiod: usize,
    /// Rows of the Pr_n table.
    #[arg(long, default_value_t = 20, global = true)]
    table_n: usize,
    #[arg(long, default_value_t = 100_000, global = true,
          value_parser = clap::value_parser!(u64).range(1..))]
    samples: u64,
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    /// Time index for `simulate`.
    #[arg(long, default_value_t = 10, global = true,
          value_parser = clap::value_parser!(u64).range(1..))]
    n: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ExportKind {
    Machine,
    Chain,
    Report,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse and print a formula or conditional in canonical form.
    Parse {
        formula: String,
    },
    /// Compile a conditional to its minimal machine.
    Compile {
        formula: String,
    },
    /// Minimize a machine given as JSON.
    Minimize {
        machine: PathBuf,
    },
    /// Check whether the transition monoid is aperiodic.
    Counterfree {
        formula: Option<String>,
        #[arg(long, conflicts_with = "formula")]
        machine: Option<PathBuf>,
    },
    /// Value of a conditional at the end of a word like "{a,b} {} {b}".
    Eval {
        formula: String,
        word: String,
    },
    /// Value after every letter of a word.
    Trace {
        formula: String,
        word: String,
    },
    /// Classification, asymptotic probability, Bayes check and Pr_n table.
    Prob {
        formula: String,
    },
    /// Exact Pr_n for n = 1..table-n.
    Prn {
        formula: String,
    },
    Classify {
        formula: String,
    },
    /// Monte Carlo estimate of Pr_n.
    Simulate {
        formula: String,
    },
    /// Combine conditionals with a connective.
    Connect {
        op: String,
        first: String,
        second: Option<String>,
        /// Also compile the result.
        #[arg(long)]
        compile: bool,
    },
    /// JSON export of the machine, the induced chain or the full report.
    Export {
        formula: String,
        #[arg(long, value_enum, default_value_t = ExportKind::Report)]
        what: ExportKind,
    },
}

/// Runs the command line on `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            sink.write_all(text.as_bytes()).ok();
            return code;
        }
    };
    match execute(&cli) {
        Ok(text) => {
            out.write_all(text.as_bytes()).ok();
            0
        }
        Err(e) => {
            writeln!(err, "error: {e}").ok();
            e.exit_code()
        }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Usage(format!("cannot read {}: {e}", path.display())))
}

struct Inputs {
    events: EventSet,
    dist: Option<Dist>,
}

fn inputs(g: &Global) -> Result<Inputs> {
    let declared = g.events.as_deref().map(EventSet::parse).transpose()?;
    let dist = match &g.dist {
        Some(path) => Some(Dist::parse(&read(path)?, declared.as_ref())?),
        None => None,
    };
    let events = match (declared, &dist) {
        (Some(e), _) => e,
        (None, Some(d)) => d.events().clone(),
        (None, None) => {
            return Err(Error::Usage(
                "no events: pass -e/--events or a distribution file with an `events` line".into(),
            ))
        }
    };
    Ok(Inputs { events, dist })
}

fn needs_dist(i: &Inputs) -> Result<Dist> {
    i.dist
        .clone()
        .ok_or_else(|| Error::Usage("this command needs -d/--dist".into()))
}

/// A conditional, or a plain formula read as `(φ | true)`.
fn pair(text: &str, events: &EventSet) -> Result<CondPair> {
    Ok(if text.contains('|') {
        parse_conditional(text, events)?
    } else {
        CondPair::unconditional(parse_formula(text, events)?)
    })
}

fn heuristic(g: &Global) -> HeuristicConfig {
    HeuristicConfig {
        window: g.window,
        max_period: g.max_period,
        max_preperiod: g.max_preperiod,
    }
}

fn json(value: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn machine_text(m: &MooreMachine) -> String {
    let e = m.events();
    let mut s = format!("events: {e}\ninitial: {}\n", m.initial());
    for q in 0..m.num_states() {
        let row: Vec<String> = e
            .atoms()
            .map(|a| format!("{} -> {}", e.show_atom(a), m.step(q, a)))
            .collect();
        writeln!(s, "state {q} [{}]: {}", m.output(q), row.join(", ")).unwrap();
    }
    s
}

fn show_machine(m: &MooreMachine, format: Format) -> String {
    match format {
        Format::Text => machine_text(m),
        Format::Json => m.to_json(),
        Format::Dot => m.to_dot(),
    }
}

fn report_text(r: &EventReport) -> String {
    let mut s = String::new();
    writeln!(s, "formula: {}", r.formula).unwrap();
    writeln!(s, "dist: sha256 {}", r.dist_digest).unwrap();
    writeln!(s, "class: {}", r.class).unwrap();
    let a = &r.asymptotic;
    match &a.value {
        Some(v) => writeln!(s, "verdict: Value {v}"),
        None => writeln!(s, "verdict: {}", a.verdict),
    }
    .unwrap();
    if let Some(note) = &a.note {
        writeln!(s, "note: {note}").unwrap();
    }
    writeln!(s, "method: {}", a.method).unwrap();
    if let (Some(p), Some(start), Some(values)) = (a.period, a.start, &a.residues) {
        let parts: Vec<String> = values
            .iter()
            .enumerate()
            .map(|(r, v)| format!("n≡{r} → {v}"))
            .collect();
        writeln!(
            s,
            "residues (period {p}, n ≥ {start}): [{}]",
            parts.join(", ")
        )
        .unwrap();
    }
    if let Some(b) = &r.bayes {
        let side = |x: &Option<String>| x.clone().unwrap_or_else(|| "undefined".into());
        let eq = match b.equal {
            Some(true) => "equal",
            Some(false) => "DIFFERENT",
            None => "not comparable",
        };
        let lhs = b.lhs.clone().unwrap_or_else(|| a.verdict.clone());
        writeln!(s, "bayes: lhs {lhs}, rhs {} ({eq})", side(&b.rhs)).unwrap();
    }
    s
}

fn table_text(rows: &[(usize, String)]) -> String {
    let mut s = String::from("n\tPr_n\n");
    for (n, v) in rows {
        writeln!(s, "{n}\t{v}").unwrap();
    }
    s
}

fn execute(cli: &Cli) -> Result<String> {
    let g = &cli.global;
    let fmt = g.format;
    match &cli.command {
        Command::Parse { formula } => {
            let i = inputs(g)?;
            if formula.contains('|') {
                let c = parse_conditional(formula, &i.events)?;
                Ok(match fmt {
                    Format::Json => json(&serde_json::json!({
                        "consequent": c.consequent.show(&i.events).to_string(),
                        "antecedent": c.antecedent.show(&i.events).to_string(),
                    })),
                    _ => format!("{}\n", c.show(&i.events)),
                })
            } else {
                let f: Formula = parse_formula(formula, &i.events)?;
                Ok(match fmt {
                    Format::Json => {
                        json(&serde_json::json!({ "formula": f.show(&i.events).to_string() }))
                    }
                    _ => format!("{}\n", f.show(&i.events)),
                })
            }
        }
        Command::Compile { formula } => {
            let i = inputs(g)?;
            Ok(show_machine(
                &compile(&pair(formula, &i.events)?, &i.events)?,
                fmt,
            ))
        }
        Command::Minimize { machine } => {
            let m = MooreMachine::from_json(&read(machine)?)?;
            Ok(show_machine(&minimize(&m), fmt))
        }
        Command::Counterfree { formula, machine } => {
            let m = match (formula, machine) {
                (_, Some(path)) => MooreMachine::from_json(&read(path)?)?,
                (Some(text), None) => {
                    let i = inputs(g)?;
                    compile(&pair(text, &i.events)?, &i.events)?
                }
                (None, None) => {
                    return Err(Error::Usage("give a formula or --machine FILE".into()))
                }
            };
            let free = is_counter_free(&m, DEFAULT_MONOID_CAP)?;
            let size = transition_monoid_size(&m, DEFAULT_MONOID_CAP)?;
            Ok(match fmt {
                Format::Json => json(&serde_json::json!({
                    "counter_free": free,
                    "states": m.num_states(),
                    "monoid_size": size,
                })),
                _ => format!(
                    "counter-free: {free}\nstates: {}\nmonoid size: {size}\n",
                    m.num_states()
                ),
            })
        }
        Command::Eval { formula, word } | Command::Trace { formula, word } => {
            let i = inputs(g)?;
            let c = pair(formula, &i.events)?;
            let w = i.events.parse_word(word)?;
            let trace = trace_conditional(&c, &w);
            let values: Vec<String> = if matches!(cli.command, Command::Eval { .. }) {
                vec![trace.last().unwrap().to_string()]
            } else {
                trace.iter().map(ToString::to_string).collect()
            };
            Ok(match fmt {
                Format::Json => json(&values),
                _ => format!("{}\n", values.join(" ")),
            })
        }
        Command::Prob { formula }
        | Command::Export {
            formula,
            what: ExportKind::Report,
        } => {
            let e = event(g, formula)?;
            let r = event_report(&e, &heuristic(g), g.table_n)?;
            Ok(match (fmt, &cli.command) {
                (Format::Json, _) | (_, Command::Export { .. }) => json(&r),
                _ => format!("{}\n{}", report_text(&r), table_text(&r.pr_n_table)),
            })
        }
        Command::Prn { formula } => {
            let e = event(g, formula)?;
            let rows: Vec<(usize, String)> = e
                .pr_n_table(g.table_n)
                .iter()
                .enumerate()
                .map(|(k, v)| (k + 1, v.to_string()))
                .collect();
            Ok(match fmt {
                Format::Json => json(&rows),
                _ => table_text(&rows),
            })
        }
        Command::Classify { formula } => {
            let e = event(g, formula)?;
            let class = classify_event(&e)?;
            Ok(match fmt {
                Format::Json => json(&serde_json::json!({ "class": class })),
                _ => format!("{class}\n"),
            })
        }
        Command::Simulate { formula } => {
            let e = event(g, formula)?;
            simulate(g, &e)
        }
        Command::Connect {
            op,
            first,
            second,
            compile: also_compile,
        } => {
            let op: Connective = op.parse().map_err(Error::Usage)?;
            let i = inputs(g)?;
            let x = pair(first, &i.events)?;
            let y = match (op.arity(), second) {
                (1, None) => None,
                (2, Some(text)) => Some(pair(text, &i.events)?),
                (n, _) => return Err(Error::Usage(format!("`{op}` takes {n} argument(s)"))),
            };
            let result = op.apply(&x, y.as_ref());
            let mut s = format!("{}\n", result.show(&i.events));
            if *also_compile {
                s.push_str(&show_machine(&compile(&result, &i.events)?, fmt));
            }
            Ok(s)
        }
        Command::Export { formula, what } => {
            let i = inputs(g)?;
            let m = compile(&pair(formula, &i.events)?, &i.events)?;
            match what {
                ExportKind::Machine => Ok(m.to_json()),
                ExportKind::Chain => {
                    let chain = MarkovChain::induce(&m, &needs_dist(&i)?)?;
                    Ok(json(&chain.to_json_value()))
                }
                ExportKind::Report => unreachable!("handled with `prob`"),
            }
        }
    }
}

fn event(g: &Global, formula: &str) -> Result<CondEvent> {
    let i = inputs(g)?;
    let c = pair(formula, &i.events)?;
    CondEvent::new(c, needs_dist(&i)?)
}

fn simulate(g: &Global, e: &CondEvent) -> Result<String> {
    let n = g.n as usize;
    let sim = simulate_pr_n(e, n, g.samples as usize, g.seed);
    let exact = e.pr_n(n);
    let z = match (&exact, sim.estimate, sim.stderr) {
        (PrnValue::Value(q), Some(p), Some(se)) if se > 0.0 => Some((p - to_f64(q)) / se),
        _ => None,
    };
    let f = |x: Option<f64>| x.map(format_f64);
    if g.format == Format::Json {
        return Ok(json(&serde_json::json!({
            "n": n,
            "samples": sim.samples,
            "seed": g.seed,
            "ones": sim.ones,
            "zeros": sim.zeros,
            "undefined": sim.undefined,
            "estimate": f(sim.estimate),
            "stderr": f(sim.stderr),
            "exact": exact.to_string(),
            "z": f(z),
        })));
    }
    let mut s = format!(
        "n: {n}\nsamples: {} (seed {})\noutcomes: 1: {}, 0: {}, ⊥: {}\n",
        sim.samples, g.seed, sim.ones, sim.zeros, sim.undefined
    );
    match (sim.estimate, sim.stderr) {
        (Some(p), Some(se)) => {
            writeln!(s, "estimate: {}\nstderr: {}", format_f64(p), format_f64(se)).unwrap()
        }
        _ => s.push_str("estimate: all samples undefined\n"),
    }
    match &exact {
        PrnValue::Value(q) => writeln!(s, "exact: {q} ({})", format_f64(to_f64(q))).unwrap(),
        PrnValue::Undefined => s.push_str("exact: undefined\n"),
    }
    if let Some(z) = z {
        writeln!(s, "z: {}", format_f64(z)).unwrap();
    }
    Ok(s)
}
