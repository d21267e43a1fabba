use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qmick::mickelsson::generator_set;
use qmick::render::{algebra_json, algebra_latex};
use qmick::report::{all_pass, check_member, Mode};
use qmick::rmatrix::{closed_form_table, raw_diff, Provenance, RTable};
use qmick::rootdata::Family;
use qmick::serre::dim_cap_from_env;
use qmick::suites::{run, Instance, Suite};
use qmick::Error;

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAP: u8 = 3;

#[derive(Parser)]
#[command(name = "qmick", version, about = "R-matrix entries and step-algebra generators for quantum groups of types B, C, D")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the step-algebra generators z_0 and z_{±t}.
    Generators(Common),
    /// Print the lower (or upper) entry table.
    Rtable {
        #[command(flatten)]
        common: Common,
        /// Take every entry from the intertwining recursion instead of the
        /// closed forms.
        #[arg(long)]
        oracle: bool,
        /// Print the entries where closed forms and recursion differ before
        /// Serre reduction, and whether each difference vanishes modulo Serre.
        #[arg(long)]
        diff: bool,
        /// Print the upper table g_ji instead.
        #[arg(long)]
        upper: bool,
    },
    /// Run a verification suite and print a JSON report.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "all")]
        suite: Suite,
    },
}

#[derive(Args)]
struct Common {
    /// Family: B, C or D.
    #[arg(long = "type")]
    family: Family,
    #[arg(long)]
    rank: usize,
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long, value_enum, default_value = "exact")]
    mode: ModeArg,
    /// Comma-separated seeds for sampled mode.
    #[arg(long, value_delimiter = ',')]
    seeds: Vec<u64>,
    /// Largest graded component solved exactly (default: $QMICK_DIM_CAP or 5000).
    #[arg(long)]
    dim_cap: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Latex,
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Exact,
    Sampled,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::TooLarge { .. } => EXIT_CAP,
            Error::RankOutOfRange { .. } | Error::UnknownFamily(_) => EXIT_USAGE,
            _ => EXIT_FAIL,
        };
        let hint = if code == EXIT_CAP { "; rerun with --mode sampled --seeds …" } else { "" };
        Failure { code, message: format!("{e}{hint}") }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

impl Common {
    fn mode(&self) -> Result<Mode, Failure> {
        match self.mode {
            ModeArg::Exact => Ok(Mode::Exact),
            ModeArg::Sampled if self.seeds.is_empty() => Err(usage("sampled mode needs at least one seed (--seeds)")),
            ModeArg::Sampled => Ok(Mode::Sampled(self.seeds.clone())),
        }
    }

    fn instance(&self) -> Result<Instance, Failure> {
        let cap = self.dim_cap.unwrap_or_else(dim_cap_from_env);
        Ok(Instance::new(self.family, self.rank, cap)?)
    }
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn cmd_generators(c: &Common) -> Result<bool, Failure> {
    let inst = c.instance()?;
    let gens = generator_set(&inst.alg, &inst.tables)?;
    let rank = c.rank;
    match c.format.unwrap_or(Format::Text) {
        Format::Json => print_json(&json!({
            "family": c.family.to_string(),
            "rank": rank,
            "generators": gens.iter().map(|g| json!({
                "name": g.name(),
                "index": g.index,
                "weight": g.weight.0.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                "element": algebra_json(&g.element, rank),
            })).collect::<Vec<_>>(),
        })),
        Format::Latex => {
            println!("\\begin{{align*}}");
            for g in &gens {
                println!("{} &= {} \\\\", g.name(), algebra_latex(&g.element));
            }
            println!("\\end{{align*}}");
        }
        Format::Text => {
            for g in &gens {
                println!("{} [weight {}] = {}", g.name(), g.weight, g.element);
            }
        }
    }
    Ok(true)
}

fn render_table(t: &RTable, format: Format, rank: usize, extra: Value) {
    match format {
        Format::Json => {
            let mut v = t.to_json(rank);
            if let (Some(obj), Value::Object(more)) = (v.as_object_mut(), extra) {
                obj.extend(more);
            }
            print_json(&v);
        }
        Format::Latex => print!("{}", t.to_latex()),
        Format::Text => {
            for ((i, j), x) in &t.entries {
                println!("({i},{j}) = {x}");
            }
        }
    }
}

fn cmd_rtable(c: &Common, oracle: bool, diff: bool, upper: bool) -> Result<bool, Failure> {
    let inst = c.instance()?;
    let format = c.format.unwrap_or(Format::Text);
    let closed = closed_form_table(&inst.alg, &inst.tables.f, false);
    if diff {
        let mode = c.mode()?;
        let mut rows = Vec::new();
        let mut ok = true;
        for ((i, j), d) in raw_diff(&closed.table, &inst.tables.f) {
            let r = check_member(&inst.serre, &d, &[], &mode, format!("({i},{j})"))?;
            ok &= r.verdict;
            rows.push((i, j, d, r.verdict));
        }
        match format {
            Format::Json => print_json(&json!({
                "mode": mode.name(),
                "entries": rows.iter().map(|(i, j, d, z)| json!({
                    "position": format!("({i},{j})"),
                    "difference": algebra_json(d, c.rank),
                    "zero_mod_serre": z,
                })).collect::<Vec<_>>(),
            })),
            _ => {
                for (i, j, d, z) in &rows {
                    let tag = if *z { "zero mod Serre" } else { "NONZERO mod Serre" };
                    println!("({i},{j}) [{tag}] {d}");
                }
                println!("{} raw differences, all vanish modulo Serre: {ok}", rows.len());
            }
        }
        return Ok(ok);
    }
    let f = if oracle { inst.tables.f.clone() } else { closed.table.clone() };
    let deferred: Vec<String> = if oracle {
        Vec::new()
    } else {
        closed.positions(Provenance::Deferred).iter().map(|(i, j)| format!("({i},{j})")).collect()
    };
    let source = if oracle { "recursion" } else { "closed" };
    let t = if upper { qmick::rmatrix::g_table(&inst.alg, &f) } else { f };
    render_table(&t, format, c.rank, json!({ "source": source, "deferred": deferred }));
    Ok(true)
}

fn cmd_verify(c: &Common, suite: Suite) -> Result<bool, Failure> {
    let mode = c.mode()?;
    let inst = c.instance()?;
    let reports = run(&inst, suite, &mode)?;
    let pass = all_pass(&reports);
    match c.format.unwrap_or(Format::Json) {
        Format::Text => {
            for r in &reports {
                println!("{} {}", if r.verdict { "PASS" } else { "FAIL" }, r.claim);
            }
            println!("{}", if pass { "all claims pass" } else { "some claims fail" });
        }
        _ => print_json(&json!({
            "family": c.family.to_string(),
            "rank": c.rank,
            "suite": suite.name(),
            "mode": mode.name(),
            "seeds": mode.seeds(),
            "pass": pass,
            "reports": reports,
        })),
    }
    Ok(pass)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Generators(c) => cmd_generators(c),
        Command::Rtable { common, oracle, diff, upper } => cmd_rtable(common, *oracle, *diff, *upper),
        Command::Verify { common, suite } => cmd_verify(common, *suite),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_FAIL),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
