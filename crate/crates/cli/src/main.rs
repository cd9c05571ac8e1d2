use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use salem_core::construct::{self, ConstructionPlan, SearchOptions, SearchReport};
use salem_core::salem::{self, SalemCertificate, DEFAULT_PRECISION_DIGITS};
use salem_core::selftest::{self, Fault, SelftestConfig};
use salem_core::trigpolys::{cheb, ctrace};
use salem_core::IntPoly;

const EXIT_BAD_ARGS: u8 = 2;
const EXIT_HYPOTHESIS: u8 = 3;
const EXIT_EMPTY_SEARCH: u8 = 4;
const EXIT_CERTIFY: u8 = 5;
const EXIT_SELFTEST: u8 = 1;

/// Salem numbers α with α^n - 1 a unit: generators, constructions and certificates.
#[derive(Debug, Parser)]
#[command(name = "salem", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Kind {
    /// Reciprocal polynomials of even degree are min-polys, anything else a trace polynomial.
    Auto,
    Trace,
    MinPoly,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum InjectFault {
    CorruptCtrace,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print t_k, with t_k(2cos θ) = 2cos kθ.
    Cheb {
        #[arg(long)]
        k: u64,
    },
    /// Print C_n, the trace polynomial of (x^n - 1)/(x - 1) or (x^n - 1)/(x^2 - 1).
    Ctrace {
        #[arg(long)]
        n: u64,
    },
    /// Show the construction chosen for (n, t).
    Plan {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        t: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Sweep the parameter a and certify candidates.
    Search {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        t: usize,
        #[arg(long, default_value_t = 3)]
        a_min: i64,
        #[arg(long, default_value_t = 200)]
        a_max: i64,
        #[arg(long, default_value_t = 5)]
        want: usize,
        #[arg(long, default_value_t = DEFAULT_PRECISION_DIGITS)]
        precision: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
        /// Use the linear-factor construction with this monic D instead of the dispatcher.
        #[arg(long)]
        d: Option<String>,
    },
    /// Certify a polynomial, or replay every certificate of a search report.
    Certify {
        /// Polynomial "c0,c1,...,cd" or a file containing one.
        #[arg(required_unless_present = "from_report")]
        poly: Option<String>,
        #[arg(long, required_unless_present = "from_report")]
        n: Option<u64>,
        #[arg(long, value_enum, default_value = "auto")]
        kind: Kind,
        #[arg(long, conflicts_with = "poly")]
        from_report: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_PRECISION_DIGITS)]
        precision: u32,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run the identity, gcd and root-count suites.
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, hide = true)]
        inject_fault: Option<InjectFault>,
    },
}

struct Failure {
    code: u8,
    message: String,
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure { code, message: message.into() }
}

fn io_fail(e: io::Error) -> Failure {
    fail(EXIT_BAD_ARGS, format!("i/o error: {e}"))
}

fn emit(output: Option<&Path>, text: &str) -> Result<(), Failure> {
    match output {
        Some(path) => fs::write(path, text).map_err(io_fail),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes()).map_err(io_fail)
        }
    }
}

fn parse_poly(arg: &str) -> Result<IntPoly, Failure> {
    let path = Path::new(arg);
    let text = if path.is_file() {
        fs::read_to_string(path).map_err(io_fail)?
    } else {
        arg.to_string()
    };
    text.trim()
        .parse()
        .map_err(|e| fail(EXIT_BAD_ARGS, format!("cannot parse polynomial: {e}")))
}

fn check_precision(p: u32) -> Result<(), Failure> {
    if p == 0 {
        return Err(fail(EXIT_BAD_ARGS, "precision must be at least 1"));
    }
    Ok(())
}

fn plan_text(plan: &ConstructionPlan) -> String {
    let mut s = format!("{}\n", plan.summary());
    s += &format!("n = {}, t = {}", plan.n, plan.t);
    if let Some(l) = plan.l {
        s += &format!(", l = {l}");
    }
    s += "\nfactors:\n";
    for f in &plan.factors {
        s += &format!("  {} = {}\n", f.name, f.poly.pretty());
    }
    let a_factor = match plan.a_factor {
        construct::AFactorShape::Reciprocal => "x^2 - a*x + 1",
        construct::AFactorShape::Shifted => "x^2 - a*x + (a - 2)",
        construct::AFactorShape::Linear => "x - a",
    };
    s += &format!("a-factor: {a_factor}\n");
    if let Some(ev) = &plan.parity_evidence {
        s += &format!(
            "parity evidence: r_(2+4k) = {}, r_4k = {}, C_n roots in (0,1) = {}, \
             C_n*t_(2+4k) roots in (0,1) = {}, fixed factors roots in (0,1) = {}\n",
            ev.r_2_plus_4k,
            ev.r_4k,
            ev.cn_in_unit_interval,
            ev.cn_t_2_plus_4k_in_unit_interval,
            ev.plan_factors_in_unit_interval
        );
    }
    s
}

fn report_text(report: &SearchReport) -> String {
    let mut s = format!(
        "{} for n = {}, t = {}, a in [{}, {}]: {} certificates, {} distinct\n",
        report.plan.summary(),
        report.n,
        report.t,
        report.a_range[0],
        report.a_range[1],
        report.certificates.len(),
        report.distinct_salem_count
    );
    for c in &report.certificates {
        s += &format!("a = {}: alpha = {}\n", c.a.unwrap_or_default(), c.alpha);
    }
    for f in &report.failures {
        s += &format!("a = {}: rejected at {}: {}\n", f.a, f.check, f.reason);
    }
    s
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn cmd_search(
    n: u64,
    t: usize,
    opts: SearchOptions,
    d: Option<String>,
    format: Format,
    output: Option<PathBuf>,
) -> Result<(), Failure> {
    if opts.a_min < 3 {
        return Err(fail(EXIT_BAD_ARGS, "a-min must be at least 3"));
    }
    check_precision(opts.precision_digits)?;
    let plan = match d {
        Some(d) => construct::plan_theorem11(n, t, &parse_poly(&d)?),
        None => construct::dispatch(n, t),
    }
    .map_err(|e| fail(EXIT_HYPOTHESIS, format!("hypothesis violated: {e}")))?;
    let report = construct::search_plan(&plan, &opts);
    let text = match format {
        Format::Json => to_json(&report),
        Format::Text => report_text(&report),
        Format::Csv => {
            let mut buf = Vec::new();
            report
                .write_csv(&mut buf)
                .map_err(|e| fail(EXIT_BAD_ARGS, format!("csv: {e}")))?;
            String::from_utf8(buf).expect("csv output is UTF-8")
        }
    };
    emit(output.as_deref(), &text)?;
    if report.certificates.is_empty() {
        return Err(fail(
            EXIT_EMPTY_SEARCH,
            format!("no certificate for a in [{}, {}]", report.a_range[0], report.a_range[1]),
        ));
    }
    Ok(())
}

fn cmd_certify(
    poly: Option<String>,
    n: Option<u64>,
    kind: Kind,
    from_report: Option<PathBuf>,
    precision: u32,
    output: Option<PathBuf>,
) -> Result<(), Failure> {
    check_precision(precision)?;
    if let Some(path) = from_report {
        let text = fs::read_to_string(&path).map_err(io_fail)?;
        let report: SearchReport = serde_json::from_str(&text)
            .map_err(|e| fail(EXIT_BAD_ARGS, format!("cannot read report: {e}")))?;
        construct::verify_report(&report).map_err(|e| fail(EXIT_CERTIFY, e.to_string()))?;
        return emit(
            output.as_deref(),
            &format!("{} certificates replayed\n", report.certificates.len()),
        );
    }
    let p = parse_poly(poly.as_deref().expect("required by clap"))?;
    let n = n.expect("required by clap");
    if n == 0 {
        return Err(fail(EXIT_BAD_ARGS, "n must be positive"));
    }
    let as_min_poly = match kind {
        Kind::MinPoly => true,
        Kind::Trace => false,
        Kind::Auto => p.is_reciprocal() && p.degree().is_some_and(|d| d >= 2 && d % 2 == 0),
    };
    let result = if as_min_poly {
        salem::certify_min_poly(&p, n, precision)
    } else {
        salem::certify_trace_with(&p, n, precision)
    };
    let cert: SalemCertificate = result.map_err(|e| {
        fail(EXIT_CERTIFY, format!("certification failed at {}: {e}", e.check_name()))
    })?;
    emit(output.as_deref(), &to_json(&cert))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Cheb { k } => emit(None, &format!("{}\n", cheb(k))),
        Command::Ctrace { n } => {
            let c = ctrace(n).map_err(|e| fail(EXIT_BAD_ARGS, e.to_string()))?;
            emit(None, &format!("{c}\n"))
        }
        Command::Plan { n, t, format } => {
            let plan = construct::dispatch(n, t)
                .map_err(|e| fail(EXIT_HYPOTHESIS, format!("hypothesis violated: {e}")))?;
            match format {
                Format::Json => emit(None, &to_json(&plan)),
                Format::Text => emit(None, &plan_text(&plan)),
                Format::Csv => Err(fail(EXIT_BAD_ARGS, "plan has no CSV form")),
            }
        }
        Command::Search { n, t, a_min, a_max, want, precision, format, output, d } => {
            let opts = SearchOptions { a_min, a_max, want, precision_digits: precision };
            cmd_search(n, t, opts, d, format, output)
        }
        Command::Certify { poly, n, kind, from_report, precision, output } => {
            cmd_certify(poly, n, kind, from_report, precision, output)
        }
        Command::Selftest { seed, inject_fault } => {
            let config = SelftestConfig {
                seed,
                fault: inject_fault.map(|InjectFault::CorruptCtrace| Fault::CorruptCtrace),
                ..SelftestConfig::default()
            };
            let report = selftest::run(&config);
            emit(None, &format!("{report}\n"))?;
            if report.passed() {
                Ok(())
            } else {
                let names: Vec<_> = report.failed_checks().map(|c| c.name).collect();
                Err(fail(EXIT_SELFTEST, format!("failed: {}", names.join("; "))))
            }
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
