//! Command-line interface. Output is compact JSON by default and readable
//! text with `--pretty`. Usage errors exit with 2, domain errors with 1 and
//! an error object on stderr.

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::generate::{InstanceSpec, Mode};
use super::verify::{verify, TheoremId, VerifyReport};
use crate::combinatorics::{normalize_partition, render_abacus, Multipartition, Partition, Symbol};
use crate::cores::{
    a_of_symbol, a_value_with_charge, dt_core, e_abacus, es_core, es_core_symbol, quotient_data,
    CoreResult,
};
use crate::error::Result;
use crate::hooks::{
    charged_scaled_hooks_of_symbol, enumerate_hooks, injection_f, scaled_hooks, split_lengths,
    Hook, HookKind, IntMultiset,
};
use crate::schur::{
    ariki_semisimple_at_root, divisibility_check, factorization_check, schur_element,
    semisimplicity_via_schur, specialized_lengths, specialized_schur_tilde, valuation_and_sign,
};

#[derive(Parser, Debug)]
#[command(
    name = "genhooks",
    version,
    about = "Generalised hooks, cores and Schur elements of l-symbols"
)]
pub struct Cli {
    /// Compact JSON output (the default).
    #[arg(long, global = true, conflicts_with = "pretty")]
    json: bool,
    /// Human-readable output.
    #[arg(long, global = true)]
    pretty: bool,
    /// Seed for random instance generation.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads for verification sweeps.
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    jobs: Option<u32>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Hooks of a symbol, optionally scaled by k and charged by s.
    Hooks {
        #[arg(long, value_parser = parse_symbol)]
        symbol: RawSymbol,
        #[arg(long, default_value = "cj")]
        kind: HookKind,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_parser = parse_json::<Vec<usize>>)]
        s: Option<Ints>,
    },
    /// The injection from CJ-hooks to BGO-hooks.
    Inject {
        #[arg(long, value_parser = parse_symbol)]
        symbol: RawSymbol,
    },
    /// Multiply every entry of a symbol by k.
    Scale {
        #[arg(long, value_parser = parse_symbol)]
        symbol: RawSymbol,
        #[arg(long)]
        k: usize,
    },
    /// Shift component j of a symbol by s_j.
    Shift {
        #[arg(long, value_parser = parse_symbol)]
        symbol: RawSymbol,
        #[arg(long, value_parser = parse_json::<Vec<usize>>)]
        s: Ints,
    },
    /// e-quotient and abacus multicharge of a partition.
    Quotient(PartitionE),
    /// e-core, e-quotient and multicharge of a partition.
    Core(PartitionE),
    /// [d,t]-core of a symbol.
    Dtcore {
        #[arg(long, value_parser = parse_symbol)]
        symbol: RawSymbol,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        t: usize,
    },
    /// (e,s)-core of a multipartition, or of a symbol.
    Escore {
        #[command(flatten)]
        input: MultiOrSymbol,
        #[arg(long)]
        e: usize,
        #[arg(long, value_parser = parse_json::<Vec<usize>>)]
        s: Option<Ints>,
    },
    /// a-function of a symbol, or a_{s,k} of a multipartition.
    Afn {
        #[command(flatten)]
        input: MultiOrSymbol,
        #[arg(long, value_parser = parse_json::<Vec<usize>>)]
        s: Option<Ints>,
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Common charge of the equal-charge symbol.
        #[arg(long)]
        charge: Option<usize>,
    },
    /// Schur element and s̃ of a multipartition.
    Schur {
        #[arg(long, value_parser = parse_multipartition)]
        multipartition: RawMulti,
    },
    /// θ_{k,s}(s̃) with its valuation and sign.
    Specialize {
        #[arg(long, value_parser = parse_multipartition)]
        multipartition: RawMulti,
        #[arg(long)]
        k: usize,
        #[arg(long, value_parser = parse_json::<Vec<i64>>, allow_hyphen_values = true)]
        s: Json<Vec<i64>>,
    },
    /// Semisimplicity at a primitive e-th root of unity, decided two ways.
    Semisimple {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        e: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_parser = parse_json::<Vec<usize>>)]
        s: Ints,
    },
    /// Sign relating s̃ of a partition to its core and quotient.
    Factorize(PartitionE),
    /// Divisibility of a specialised Schur element by that of its (e,s)-core.
    Divide {
        #[arg(long, value_parser = parse_multipartition)]
        multipartition: RawMulti,
        #[arg(long)]
        e: usize,
        #[arg(long, value_parser = parse_json::<Vec<usize>>)]
        s: Ints,
    },
    /// Run a verification sweep.
    Verify(VerifyArgs),
    /// Text abacus of a symbol, or the e-abacus of a partition.
    Abacus {
        #[arg(long, value_parser = parse_symbol, conflicts_with = "partition", required_unless_present = "partition")]
        symbol: Option<RawSymbol>,
        #[arg(long, value_parser = parse_raw_partition, requires = "e")]
        partition: Option<RawPartition>,
        #[arg(long)]
        e: Option<usize>,
        #[arg(long)]
        width: Option<usize>,
    },
}

#[derive(Args, Debug)]
struct PartitionE {
    #[arg(long, value_parser = parse_raw_partition)]
    partition: RawPartition,
    #[arg(long)]
    e: usize,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct MultiOrSymbol {
    #[arg(long, value_parser = parse_multipartition)]
    multipartition: Option<RawMulti>,
    #[arg(long, value_parser = parse_symbol)]
    symbol: Option<RawSymbol>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// count-equality, count-formulas, injection, equal-gap-lemma, scaled-hooks,
    /// translation, charged-scaled, particore, particore-bgo, bgo-decomposition,
    /// dt-containment, es-containment, dt-componentwise, dt-order, a-identity,
    /// two-path, valuation, bgo-unit, semisimplicity, main-type-a, divisibility,
    /// oracle-hooks, oracle-cores (case, '-' and '_' ignored)
    #[arg(long)]
    theorem: String,
    #[arg(long)]
    nmax: Option<usize>,
    #[arg(long)]
    lmin: Option<usize>,
    #[arg(long)]
    lmax: Option<usize>,
    /// Inclusive range such as `2..4`, or a single value.
    #[arg(long, value_parser = parse_range)]
    e: Option<(usize, usize)>,
    #[arg(long, value_parser = parse_range)]
    k: Option<(usize, usize)>,
    #[arg(long)]
    sbound: Option<usize>,
    #[arg(long)]
    entry_max: Option<usize>,
    /// Draw this many random instances instead of the default mode.
    #[arg(long, conflicts_with = "exhaustive")]
    count: Option<usize>,
    #[arg(long)]
    exhaustive: bool,
    #[arg(long, value_parser = parse_raw_partition, conflicts_with = "multipartition")]
    partition: Option<RawPartition>,
    #[arg(long, value_parser = parse_multipartition)]
    multipartition: Option<RawMulti>,
    /// Include wall-clock time in the output.
    #[arg(long)]
    timing: bool,
}

/// A JSON-valued argument. Domain validation happens when the command runs,
/// so malformed JSON is a usage error and an invalid value a domain error.
#[derive(Clone, Debug)]
struct Json<T>(T);

impl<T> std::ops::Deref for Json<T> {
    type Target = T;

    fn deref(&self) -> &T {
        &self.0
    }
}

fn parse_json<T: DeserializeOwned>(s: &str) -> std::result::Result<Json<T>, String> {
    serde_json::from_str(s).map(Json).map_err(|e| e.to_string())
}

type Ints = Json<Vec<usize>>;
type RawPartition = Json<Vec<i64>>;
type RawMulti = Json<Vec<Vec<i64>>>;

fn parse_raw_partition(s: &str) -> std::result::Result<RawPartition, String> {
    parse_json(s)
}

fn parse_multipartition(s: &str) -> std::result::Result<RawMulti, String> {
    parse_json(s)
}

#[derive(Deserialize)]
#[serde(untagged)]
enum SymbolRepr {
    Bare(Vec<Vec<usize>>),
    Wrapped { components: Vec<Vec<usize>> },
}

/// Symbol entries as parsed; validated when the command runs.
#[derive(Clone, Debug)]
struct RawSymbol(Vec<Vec<usize>>);

/// Accepts `{"components": [[...]]}` or a bare array of arrays.
fn parse_symbol(s: &str) -> std::result::Result<RawSymbol, String> {
    match parse_json::<SymbolRepr>(s)?.0 {
        SymbolRepr::Bare(c) | SymbolRepr::Wrapped { components: c } => Ok(RawSymbol(c)),
    }
}

fn symbol(raw: &RawSymbol) -> Result<Symbol> {
    Symbol::from_entries(raw.0.clone())
}

fn multipartition(raw: &RawMulti) -> Result<Multipartition> {
    Multipartition::new(
        raw.0
            .iter()
            .map(|c| normalize_partition(c))
            .collect::<Result<_>>()?,
    )
}

fn parse_range(s: &str) -> std::result::Result<(usize, usize), String> {
    let num = |x: &str| {
        x.trim()
            .parse::<usize>()
            .map_err(|e| format!("bad bound `{x}`: {e}"))
    };
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (num(lo)?, num(hi.strip_prefix('=').unwrap_or(hi))?),
        None => (num(s)?, num(s)?),
    };
    if lo > hi {
        return Err(format!("empty range {s}"));
    }
    Ok((lo, hi))
}

struct Output {
    json: Value,
    text: String,
    code: i32,
}

impl Output {
    fn new(value: impl Serialize, text: String) -> Output {
        Output {
            json: json!(value),
            text,
            code: 0,
        }
    }
}

/// Parses `args` (program name first), runs the command and prints the result.
pub fn cli_main<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let result = match cli.jobs {
        Some(n) => match rayon::ThreadPoolBuilder::new()
            .num_threads(n as usize)
            .build()
        {
            Ok(pool) => pool.install(|| execute(&cli)),
            Err(e) => {
                eprintln!("error: {e}");
                return 2;
            }
        },
        None => execute(&cli),
    };
    match result {
        Ok(out) => {
            if cli.pretty {
                print!("{}", out.text);
            } else {
                println!("{}", out.json);
            }
            out.code
        }
        Err(e) => {
            eprintln!("{}", json!({"error": e.kind(), "message": e.to_string()}));
            1
        }
    }
}

fn partition(raw: &RawPartition) -> Result<Partition> {
    normalize_partition(&raw.0)
}

fn abacus_text(x: &Symbol) -> Result<String> {
    render_abacus(x, x.max_entry().map_or(1, |m| m + 2))
}

fn show_lengths(name: &str, hooks: &[Hook]) -> String {
    let (diag, cross) = split_lengths(hooks);
    let list = |m: &IntMultiset| {
        m.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    format!("{name} = {{{} | {}}}\n", list(&diag), list(&cross))
}

fn show_hooks(hooks: &[Hook]) -> String {
    hooks
        .iter()
        .map(|h| h.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn execute(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Hooks {
            symbol: raw,
            kind,
            k,
            s,
        } => {
            let symbol = &symbol(raw)?;
            let hooks = match (k, s) {
                (None, None) => enumerate_hooks(symbol, *kind),
                (Some(k), None) => scaled_hooks(symbol, *k, *kind)?,
                (k, Some(s)) => charged_scaled_hooks_of_symbol(symbol, k.unwrap_or(1), s, *kind)?,
            };
            let (diagonal, cross) = split_lengths(&hooks);
            let lengths: IntMultiset = hooks.iter().map(Hook::length).collect();
            let text = format!(
                "{}{}{}\n",
                abacus_text(symbol)?,
                show_lengths(&format!("HL^{}", kind.name().to_uppercase()), &hooks),
                show_hooks(&hooks)
            );
            Ok(Output::new(
                json!({"kind": kind, "hooks": hooks, "lengths": lengths, "diagonal": diagonal, "cross": cross}),
                text,
            ))
        }
        Command::Inject { symbol: raw } => {
            let symbol = &symbol(raw)?;
            let pairs = injection_f(symbol)?;
            let text = pairs.iter().map(|(s, t)| format!("{s} -> {t}\n")).collect();
            let json: Vec<Value> = pairs
                .iter()
                .map(|(s, t)| json!({"source": s, "target": t}))
                .collect();
            Ok(Output::new(json!({"pairs": json}), text))
        }
        Command::Scale { symbol: raw, k } => {
            let y = symbol(raw)?.scale(*k)?;
            Ok(Output::new(&y, format!("{y}\n{}", abacus_text(&y)?)))
        }
        Command::Shift { symbol: raw, s } => {
            let y = symbol(raw)?.shift(s)?;
            Ok(Output::new(&y, format!("{y}\n{}", abacus_text(&y)?)))
        }
        Command::Quotient(PartitionE { partition: raw, e }) => {
            let qd = quotient_data(&partition(raw)?, *e)?;
            let text = format!(
                "quotient {} multicharge {:?}\n",
                qd.quotient, qd.multicharge
            );
            Ok(Output::new(
                json!({"quotient": qd.quotient, "multicharge": qd.multicharge}),
                text,
            ))
        }
        Command::Core(PartitionE { partition: raw, e }) => {
            let lambda = partition(raw)?;
            let qd = quotient_data(&lambda, *e)?;
            let text = format!(
                "core {} quotient {} multicharge {:?}\n{}",
                qd.core,
                qd.quotient,
                qd.multicharge,
                abacus_text(&e_abacus(&lambda, *e)?)?
            );
            Ok(Output::new(&qd, text))
        }
        Command::Dtcore { symbol: raw, d, t } => {
            let res = dt_core(&symbol(raw)?, *d, *t)?;
            Ok(Output::new(&res, core_text(&res)?))
        }
        Command::Escore { input, e, s } => match (&input.multipartition, &input.symbol) {
            (Some(raw), _) => {
                let lambda = &multipartition(raw)?;
                let zeros = vec![0; lambda.l()];
                let (core, s0) = es_core(lambda, *e, s.as_deref().unwrap_or(&zeros))?;
                let text = format!("core {core} multicharge {s0:?}\n");
                Ok(Output::new(json!({"core": core, "multicharge": s0}), text))
            }
            (None, Some(raw)) => {
                let res = es_core_symbol(&symbol(raw)?, *e)?;
                Ok(Output::new(&res, core_text(&res)?))
            }
            (None, None) => unreachable!("clap requires one input"),
        },
        Command::Afn {
            input,
            s,
            k,
            charge,
        } => {
            let a = match (&input.multipartition, &input.symbol) {
                (Some(raw), _) => {
                    let lambda = &multipartition(raw)?;
                    let zeros = vec![0; lambda.l()];
                    a_value_with_charge(lambda, s.as_deref().unwrap_or(&zeros), *k, *charge)?
                }
                (None, Some(raw)) => a_of_symbol(&symbol(raw)?) as i64,
                (None, None) => unreachable!("clap requires one input"),
            };
            Ok(Output::new(json!({"a": a}), format!("{a}\n")))
        }
        Command::Schur {
            multipartition: raw,
        } => {
            let datum = schur_element(&multipartition(raw)?)?;
            let text = format!(
                "s~ = {}\ns  = {}\nn = {}, N = {}\n",
                datum.schur_tilde, datum.schur, datum.n, datum.n_bar
            );
            Ok(Output::new(&datum, text))
        }
        Command::Specialize {
            multipartition: raw,
            k,
            s,
        } => {
            let multipartition = &multipartition(raw)?;
            let p = specialized_schur_tilde(multipartition, *k, s)?;
            let lengths = specialized_lengths(multipartition, *k, s)?;
            let (valuation, sign) = if p.is_zero() {
                (Value::Null, Value::Null)
            } else {
                let (v, e) = valuation_and_sign(multipartition, *k, s)?;
                (json!(v), json!(e))
            };
            let text =
                format!("{p}\nfactor exponents {lengths}\nvaluation {valuation} sign {sign}\n");
            Ok(Output::new(
                json!({"schur_tilde": p, "lengths": lengths, "valuation": valuation, "sign": sign}),
                text,
            ))
        }
        Command::Semisimple { n, l, e, k, s } => {
            let ariki = ariki_semisimple_at_root(*n, *l, *e, *k, s)?;
            let schur = semisimplicity_via_schur(*n, *l, *e, *k, s)?;
            let text = format!("semisimple: {ariki} (criterion), {schur} (Schur elements)\n");
            Ok(Output::new(
                json!({"semisimple": ariki && schur, "criterion": ariki, "schur": schur}),
                text,
            ))
        }
        Command::Factorize(PartitionE { partition: raw, e }) => {
            let lambda = partition(raw)?;
            let qd = quotient_data(&lambda, *e)?;
            let sign = factorization_check(&lambda, *e)?;
            let text = format!(
                "sign {sign}: core {} quotient {} s~ {:?}\n",
                qd.core,
                qd.quotient,
                qd.tilde_s()
            );
            Ok(Output::new(
                json!({"sign": sign, "core": qd.core, "quotient": qd.quotient, "charge": qd.tilde_s()}),
                text,
            ))
        }
        Command::Divide {
            multipartition: raw,
            e,
            s,
        } => {
            let report = divisibility_check(&multipartition(raw)?, *e, s)?;
            let text = format!(
                "core {} multicharge {:?}\n({}) / ({}) = {}\n",
                report.core,
                report.core_multicharge,
                report.dividend,
                report.divisor,
                report.quotient
            );
            Ok(Output::new(&report, text))
        }
        Command::Verify(args) => run_verify(args, cli.seed),
        Command::Abacus {
            symbol: symbol_arg,
            partition: raw,
            e,
            width,
        } => {
            let x = match (symbol_arg, raw, e) {
                (Some(x), _, _) => symbol(x)?,
                (None, Some(raw), Some(e)) => e_abacus(&partition(raw)?, *e)?,
                _ => unreachable!("clap enforces the argument groups"),
            };
            let text = match width {
                Some(w) => render_abacus(&x, *w)?,
                None => abacus_text(&x)?,
            };
            Ok(Output::new(json!({"symbol": x, "abacus": text}), text))
        }
    }
}

fn core_text(res: &CoreResult) -> Result<String> {
    Ok(format!(
        "{} multicharge {:?}\n{}trace {}\n",
        res.core,
        res.multicharge,
        abacus_text(&res.core)?,
        show_hooks(&res.trace)
    ))
}

fn run_verify(args: &VerifyArgs, seed: u64) -> Result<Output> {
    let theorem: TheoremId = args.theorem.parse()?;
    let mut spec = theorem.default_spec();
    spec.seed = seed;
    if let Some(n) = args.nmax {
        spec.n_max = n;
    }
    if let Some(l) = args.lmin {
        spec.l_min = l;
    }
    if let Some(l) = args.lmax {
        spec.l_max = l;
    }
    if let Some(e) = args.e {
        spec.e_range = e;
    }
    if let Some(k) = args.k {
        spec.k_range = k;
    }
    if let Some(s) = args.sbound {
        spec.s_bound = s;
    }
    if let Some(m) = args.entry_max {
        spec.entry_max = m;
    }
    if let Some(c) = args.count {
        spec.mode = Mode::Random(c);
    }
    if args.exhaustive {
        spec.mode = Mode::Exhaustive;
    }
    if let Some(raw) = &args.partition {
        spec.lambda = Some(Multipartition::single(partition(raw)?));
    }
    if let Some(raw) = &args.multipartition {
        let m = multipartition(raw)?;
        spec.l_min = m.l();
        spec.l_max = m.l();
        spec.lambda = Some(m);
    }
    let report = verify(theorem, &spec)?;
    let text = verify_text(&report, &spec);
    let mut json = json!(report);
    if !args.timing {
        json.as_object_mut()
            .expect("report is an object")
            .remove("elapsed");
    }
    let code = if report.passed() { 0 } else { 1 };
    Ok(Output { json, text, code })
}

fn verify_text(report: &VerifyReport, spec: &InstanceSpec) -> String {
    let status = if report.passed() { "PASS" } else { "FAIL" };
    let mut out = format!(
        "{}: {status} ({} instances, {} failures, seed {})\n",
        report.theorem,
        report.instances_checked,
        report.failures.len(),
        spec.seed
    );
    for f in report.failures.iter().take(5) {
        out.push_str(&format!(
            "  input {}\n    expected {}\n    actual   {}\n",
            f.input, f.expected, f.actual
        ));
    }
    out
}
