//! `mincode` command-line front end.
//!
//! Exit codes: 0 success, 1 negative domain verdict (not minimal, hypotheses
//! violated, verification mismatch), 2 usage or input errors, 3 capacity or
//! budget exhaustion.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use mincode::hwconstruct::{self, HWParams};
use mincode::kraw::{self, KrawParams};
use mincode::minimality::{self, CheckOptions, Method, MinimalityVerdict, StopPolicy};
use mincode::{golden, par, CodeSpec, EnumeratorReport, Error, TernaryFunction};

#[derive(Parser, Debug)]
#[command(name = "mincode", version, about = "Minimal ternary codes from two functions")]
struct Cli {
    /// Worker threads (0 = all cores).
    #[arg(long, global = true, env = "MINCODE_THREADS", default_value_t = 0)]
    threads: usize,
    /// Output format; each subcommand has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Wall-clock cap in seconds for the minimality sweeps.
    #[arg(long, global = true)]
    budget: Option<f64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Fg,
    Weights,
    Cwe,
    Report,
    Lemmas,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Oracle,
    Theorem2,
    Both,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Krawtchouk value K_t(x, m), or the Lloyd partial sum with --lloyd.
    Kraw {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        x: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 3)]
        h: i64,
        #[arg(long)]
        lloyd: bool,
    },
    /// Doubled real parts of a function's transform, grouped by shift weight.
    Spectrum {
        #[arg(long)]
        f: PathBuf,
    },
    /// Weight-ball construction with its closed forms.
    Construct {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k1: usize,
        #[arg(long)]
        k2: usize,
        #[arg(long, value_enum, default_value_t = Emit::Report)]
        emit: Emit,
        /// Emit the closed-form weights or enumerator instead of the transform path.
        #[arg(long)]
        closed_form: bool,
    },
    /// Weight distribution of C(f, g).
    Weights {
        #[command(flatten)]
        pair: PairArgs,
    },
    /// Complete weight enumerator of C(f, g).
    Cwe {
        #[command(flatten)]
        pair: PairArgs,
    },
    /// Minimality of C(f, g).
    Minimality {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
        /// Collect up to this many spectral witnesses instead of stopping at the first.
        #[arg(long)]
        all_witnesses: Option<usize>,
    },
    /// Recompute the (9, 2, 4) example and compare with the embedded listing.
    VerifyExample,
}

#[derive(clap::Args, Debug)]
struct PairArgs {
    /// Expected dimension; checked against the tables.
    #[arg(long)]
    m: Option<usize>,
    /// Function table for f (a file may also hold both f and g).
    #[arg(long)]
    f: PathBuf,
    #[arg(long)]
    g: Option<PathBuf>,
}

enum Failure {
    Negative(String),
    Usage(String),
    Capacity(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            e if e.is_capacity() => Failure::Capacity(e.to_string()),
            Error::Hypothesis(h) => Failure::Negative(json!({ "error": "hypotheses violated", "violation": h }).to_string()),
            e => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<(String, bool), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let deadline = cli.budget.map(|s| Instant::now() + Duration::from_secs_f64(s.max(0.0)));
    let result = par::with_threads(cli.threads, || run(&cli, deadline));
    match result {
        Ok((out, ok)) => {
            print!("{out}");
            if !out.ends_with('\n') {
                println!();
            }
            ExitCode::from(if ok { 0 } else { 1 })
        }
        Err(Failure::Negative(msg)) => {
            println!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Capacity(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: &Cli, deadline: Option<Instant>) -> Outcome {
    match &cli.command {
        Command::Kraw { t, x, m, h, lloyd } => {
            let value = if *lloyd {
                if *h != 3 {
                    return Err(Failure::Usage("--lloyd is defined for h = 3 only".into()));
                }
                kraw::lloyd(*t, *x, *m)?
            } else {
                kraw::krawtchouk(&KrawParams::new(*t, *x, *m, *h)?)?
            };
            let out = match cli.format.unwrap_or(Format::Text) {
                Format::Text => value.to_string(),
                Format::Json => json!({ "t": t, "x": x, "m": m, "h": h, "lloyd": lloyd, "value": value }).to_string(),
                Format::Csv => format!("t,x,m,h,lloyd,value\n{t},{x},{m},{h},{lloyd},{value}\n"),
            };
            Ok((out, true))
        }
        Command::Spectrum { f } => {
            let f = read_functions(f)?.into_iter().next().ok_or_else(|| Failure::Usage("no function table".into()))?;
            let s = mincode::transform(&f)?;
            let classes = s.weight_classes();
            let out = match cli.format.unwrap_or(Format::Json) {
                Format::Json => {
                    let rows: Vec<_> = classes
                        .iter()
                        .enumerate()
                        .map(|(i, c)| json!({ "weight": i, "re_doubled": c.iter().map(|(&v, &n)| [v, n as i64]).collect::<Vec<_>>() }))
                        .collect();
                    json!({ "m": f.dim(), "classes": rows }).to_string()
                }
                Format::Csv | Format::Text => {
                    let mut out = String::from("weight,re_doubled,count\n");
                    for (i, c) in classes.iter().enumerate() {
                        for (v, n) in c {
                            writeln!(out, "{i},{v},{n}").unwrap();
                        }
                    }
                    out
                }
            };
            Ok((out, true))
        }
        Command::Construct { m, k1, k2, emit, closed_form } => construct(cli, HWParams::new(*m, *k1, *k2)?, *emit, *closed_form, deadline),
        Command::Weights { pair } => {
            let spec = load_pair(pair)?;
            let wd = spec.weight_distribution();
            Ok((emit_report(cli, &EnumeratorReport::new(spec.m(), spec.dimension(), Some(&wd), None)), true))
        }
        Command::Cwe { pair } => {
            let spec = load_pair(pair)?;
            let cwe = spec.cwe();
            Ok((emit_report(cli, &EnumeratorReport::new(spec.m(), spec.dimension(), None, Some(&cwe))), true))
        }
        Command::Minimality { pair, method, all_witnesses } => {
            let spec = load_pair(pair)?;
            let stop = match all_witnesses {
                Some(k) => StopPolicy::Exhaustive { max_witnesses: *k },
                None => StopPolicy::FirstOverall,
            };
            let opts = CheckOptions { stop, deadline };
            let mut verdicts: Vec<MinimalityVerdict> = Vec::new();
            if matches!(method, MethodArg::Oracle | MethodArg::Both) {
                verdicts.push(minimality::is_minimal_bruteforce(&spec)?);
            }
            if matches!(method, MethodArg::Theorem2 | MethodArg::Both) {
                verdicts.push(minimality::theorem2_check(&spec, &opts)?);
            }
            let agree = verdicts.windows(2).all(|w| w[0].minimal == w[1].minimal);
            let minimal = verdicts.iter().all(|v| v.minimal);
            let out = match cli.format.unwrap_or(Format::Json) {
                Format::Json => json!({ "m": spec.m(), "agree": agree, "minimal": minimal, "verdicts": verdicts }).to_string(),
                Format::Csv => {
                    let mut out = String::from("method,minimal,witnesses\n");
                    for v in &verdicts {
                        writeln!(out, "{},{},{}", method_name(v.method), v.minimal, v.witnesses.len()).unwrap();
                    }
                    out
                }
                Format::Text => {
                    let mut out = String::new();
                    for v in &verdicts {
                        writeln!(out, "{}: {}", method_name(v.method), if v.minimal { "minimal" } else { "not minimal" }).unwrap();
                        for w in &v.witnesses {
                            let (a, b) = w.covering_pair();
                            writeln!(out, "  ({}, {}, {}) covers ({}, {}, {})", a.u, a.r, a.v, b.u, b.r, b.v).unwrap();
                        }
                    }
                    if verdicts.len() > 1 {
                        writeln!(out, "verdicts {}", if agree { "agree" } else { "DISAGREE" }).unwrap();
                    }
                    out
                }
            };
            Ok((out, agree && minimal))
        }
        Command::VerifyExample => verify_example(cli),
    }
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::CoverOracle => "cover-oracle",
        Method::Theorem2 => "theorem2",
    }
}

fn read_functions(path: &Path) -> Result<Vec<TernaryFunction>, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    TernaryFunction::parse_many(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load_pair(pair: &PairArgs) -> Result<CodeSpec, Failure> {
    let mut fs = read_functions(&pair.f)?;
    if let Some(g) = &pair.g {
        fs.extend(read_functions(g)?);
    }
    let [f, g]: [TernaryFunction; 2] = fs
        .try_into()
        .map_err(|v: Vec<_>| Failure::Usage(format!("expected two function tables, found {}", v.len())))?;
    if let Some(m) = pair.m {
        if f.dim() != m || g.dim() != m {
            return Err(Failure::Usage(format!("--m {m} does not match tables of dimension {} and {}", f.dim(), g.dim())));
        }
    }
    Ok(CodeSpec::validate(f, g)?)
}

fn emit_report(cli: &Cli, r: &EnumeratorReport) -> String {
    match cli.format.unwrap_or(Format::Json) {
        Format::Json => r.to_json(),
        Format::Csv => r.to_csv(),
        Format::Text => r.to_text(),
    }
}

#[derive(Serialize)]
struct ConstructReport {
    m: usize,
    k1: usize,
    k2: usize,
    sets: BTreeMap<&'static str, i64>,
    length: u64,
    dimension: usize,
    wmin: u64,
    wmax: u64,
    ab_satisfied: bool,
    ratio_le_two_thirds: bool,
    closed_form_weights_match: bool,
    closed_form_cwe_match: bool,
}

fn construct(cli: &Cli, p: HWParams, emit: Emit, closed_form: bool, deadline: Option<Instant>) -> Outcome {
    let format = cli.format.unwrap_or(Format::Json);
    match emit {
        Emit::Fg => {
            let (f, g) = hwconstruct::build_fg(&p)?;
            Ok((format!("{}{}", f.to_table_text(), g.to_table_text()), true))
        }
        Emit::Weights | Emit::Cwe => {
            let (wd, cwe, dim) = if closed_form {
                let wd = (emit == Emit::Weights).then(|| hwconstruct::closed_form_weight_distribution(&p)).transpose()?;
                let cwe = (emit == Emit::Cwe).then(|| hwconstruct::closed_form_cwe(&p)).transpose()?;
                (wd, cwe, p.m + 2)
            } else {
                let spec = hwconstruct::build_spec(&p)?;
                let wd = (emit == Emit::Weights).then(|| spec.weight_distribution());
                let cwe = (emit == Emit::Cwe).then(|| spec.cwe());
                (wd, cwe, spec.dimension())
            };
            Ok((emit_report(cli, &EnumeratorReport::new(p.m, dim, wd.as_ref(), cwe.as_ref())), true))
        }
        Emit::Report => {
            let spec = hwconstruct::build_spec(&p)?;
            let wd = spec.weight_distribution();
            let t4 = hwconstruct::theorem4_report(&p);
            let r = ConstructReport {
                m: p.m,
                k1: p.k1,
                k2: p.k2,
                sets: BTreeMap::from([("a", p.a()), ("b", p.b()), ("c", p.c()), ("d", p.d()), ("e", p.e())]),
                length: spec.length(),
                dimension: spec.dimension(),
                wmin: wd.min_nonzero().unwrap_or(0),
                wmax: wd.max().unwrap_or(0),
                ab_satisfied: t4.ab_satisfied,
                ratio_le_two_thirds: t4.ratio_le_two_thirds,
                closed_form_weights_match: wd == hwconstruct::closed_form_weight_distribution(&p)?,
                closed_form_cwe_match: spec.cwe() == hwconstruct::closed_form_cwe(&p)?,
            };
            let ok = r.closed_form_weights_match && r.closed_form_cwe_match && r.wmin == t4.wmin && r.wmax == t4.wmax;
            let out = match format {
                Format::Json => serde_json::to_string(&r).expect("report serialises"),
                Format::Csv => format!(
                    "m,k1,k2,length,dimension,wmin,wmax,ab_satisfied,ratio_le_two_thirds,closed_form_weights_match,closed_form_cwe_match\n{},{},{},{},{},{},{},{},{},{},{}\n",
                    r.m, r.k1, r.k2, r.length, r.dimension, r.wmin, r.wmax, r.ab_satisfied, r.ratio_le_two_thirds,
                    r.closed_form_weights_match, r.closed_form_cwe_match
                ),
                Format::Text => format!(
                    "[{}, {}, {}] code, wmax {}, wmin/wmax {} 2/3, closed forms {}\n",
                    r.length,
                    r.dimension,
                    r.wmin,
                    r.wmax,
                    if r.ab_satisfied { ">" } else { "<=" },
                    if r.closed_form_weights_match && r.closed_form_cwe_match { "match" } else { "DIFFER" }
                ),
            };
            Ok((out, ok))
        }
        Emit::Lemmas => {
            let checks = hwconstruct::lemma_checks(&p, deadline)?;
            let ok = checks.lemma6 && checks.lemma7 && checks.lemma8;
            let out = match format {
                Format::Json => serde_json::to_string(&checks).expect("report serialises"),
                Format::Csv => format!("lemma6,lemma7,lemma8\n{},{},{}\n", checks.lemma6, checks.lemma7, checks.lemma8),
                Format::Text => {
                    format!("lemma6 {}\nlemma7 {}\nlemma8 {}\n", pass(checks.lemma6), pass(checks.lemma7), pass(checks.lemma8))
                }
            };
            Ok((out, ok))
        }
    }
}

fn pass(b: bool) -> &'static str {
    if b {
        "holds"
    } else {
        "FAILS"
    }
}

fn verify_example(cli: &Cli) -> Outcome {
    let (m, k1, k2) = golden::EXAMPLE1_PARAMS;
    let p = HWParams::new(m, k1, k2)?;
    let spec = hwconstruct::build_spec(&p)?;
    let wd = spec.weight_distribution();
    let cwe = spec.cwe();
    let golden = golden::example1_cwe();
    let (wmin, wmax) = (wd.min_nonzero().unwrap_or(0), wd.max().unwrap_or(0));
    let dimension = spec.dimension();
    let checks = [
        ("length", spec.length() == 19682),
        ("dimension", dimension == 11),
        ("minimum distance", wmin == 834),
        ("maximum weight", wmax == 14226),
        ("ratio test violated", !minimality::ashikhmin_barg(wmin, wmax)),
        ("enumerator", cwe == golden),
    ];
    let ok = checks.iter().all(|c| c.1);
    let out = match cli.format.unwrap_or(Format::Json) {
        Format::Json => json!({
            "parameters": [spec.length(), dimension, wmin],
            "wmax": wmax,
            "cwe_terms": cwe.terms.len(),
            "golden_terms": golden.terms.len(),
            "checks": checks.iter().map(|(k, v)| (k.to_string(), *v)).collect::<BTreeMap<_, _>>(),
            "ok": ok,
        })
        .to_string(),
        Format::Csv => {
            let mut out = String::from("check,ok\n");
            for (k, v) in checks {
                writeln!(out, "{k},{v}").unwrap();
            }
            out
        }
        Format::Text => {
            let mut out = format!("[{}, {}, {}], wmax {}\n", spec.length(), dimension, wmin, wmax);
            for (k, v) in checks {
                writeln!(out, "{k}: {}", if v { "ok" } else { "MISMATCH" }).unwrap();
            }
            out
        }
    };
    Ok((out, ok))
}
