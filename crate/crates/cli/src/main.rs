use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use covtree::asympt::{convergence_report, AsymptoticProfile};
use covtree::corpus::{self, Flag};
use covtree::format::{parse_file, parse_str, to_text};
use covtree::genfunc::{generating_function_for, to_u_form, DEFAULT_BOUND_CAP};
use covtree::tau::{TauFamily, TauResult, DEFAULT_VERTEX_CAP};
use covtree::verify::{verify, VerifyOptions};
use covtree::{Error, VoltageGraph};

#[derive(Parser)]
#[command(name = "covtree", version, about = "Spanning trees of cyclic coverings of voltage graphs")]
struct Cli {
    /// Voltage graph file; `-` or absent reads standard input.
    #[arg(short = 'f', long = "file", global = true)]
    file: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Largest covering (in vertices) handed to the Matrix-Tree route.
    #[arg(long, default_value_t = DEFAULT_VERTEX_CAP, global = true)]
    cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Route {
    Exact,
    Chebyshev,
    Bruteforce,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Check connectivity and the voltage gcd condition.
    Validate,
    /// Voltage polynomial P, reduced polynomial R, Chebyshev transform Q.
    Poly,
    /// Number of spanning trees of the n-fold covering.
    Tau {
        #[arg(short = 'n')]
        n: u64,
        #[arg(long, value_enum, default_value_t = Route::Exact)]
        route: Route,
    },
    /// τ(1..=max).
    TauTable {
        #[arg(long)]
        max: u64,
    },
    /// Generating function Σ τ(n) x^n.
    Genfunc {
        /// Also print F in u = (a0 x + 1/(a0 x)) / 2.
        #[arg(long)]
        u_form: bool,
    },
    /// Mahler measure, growth constant, and convergence table.
    Asym {
        #[arg(long, default_value_t = 20)]
        max: u64,
    },
    /// Run every cross-check.
    Verify {
        #[arg(long, default_value_t = 10)]
        max: u64,
    },
    /// Print a built-in graph in file format.
    Example {
        name: String,
        #[arg(allow_negative_numbers = true)]
        params: Vec<i64>,
    },
}

/// Exit codes: 0 ok, 1 verification failure, 2 validation error, 3 parse error.
fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. }
        | Error::Io(_)
        | Error::Json(_)
        | Error::UnknownExample(_)
        | Error::BadArity { .. } => 3,
        Error::DisconnectedBase
        | Error::Disconnected
        | Error::GcdNotOne(_)
        | Error::InvalidN(_)
        | Error::TooLarge { .. }
        | Error::DegreeCapExceeded { .. } => 2,
        _ => 1,
    }
}

fn read_graph(file: Option<&str>) -> Result<VoltageGraph, Error> {
    match file {
        Some(path) if path != "-" => parse_file(path),
        _ => {
            let mut text = String::new();
            std::io::stdin().read_to_string(&mut text)?;
            parse_str(&text)
        }
    }
}

fn tau_json(rows: &[TauResult]) -> Value {
    Value::Array(
        rows.iter()
            .map(|t| json!({ "n": t.n, "value": t.value.to_string() }))
            .collect(),
    )
}

fn emit(format: Format, text: String, value: Value) {
    match format {
        Format::Text => println!("{text}"),
        Format::Json => println!("{}", serde_json::to_string_pretty(&value).expect("serializable")),
    }
}

/// Returns whether everything that was checked passed.
fn run(cli: &Cli) -> Result<bool, Error> {
    if let Command::Example { name, params } = &cli.command {
        let spec = corpus::example(name, params)?;
        let mut text = format!("# {}\n", spec.notes);
        for v in &spec.printed_values {
            let flag = match v.flag {
                Flag::Verified => "verified".to_string(),
                Flag::Erratum => format!("erratum: {}", v.comment),
            };
            text.push_str(&format!("# printed {} [{flag}]\n", v.printed));
        }
        text.push_str(&to_text(&spec.graph));
        let printed: Vec<Value> = spec
            .printed_values
            .iter()
            .map(|v| {
                json!({
                    "printed": v.printed,
                    "flag": if v.flag == Flag::Verified { "verified" } else { "erratum" },
                    "comment": v.comment,
                })
            })
            .collect();
        emit(
            cli.format,
            text.trim_end().to_string(),
            json!({
                "name": spec.name,
                "params": spec.params,
                "notes": spec.notes,
                "printed": printed,
                "graph": to_text(&spec.graph),
            }),
        );
        return Ok(true);
    }

    let g = read_graph(cli.file.as_deref())?;
    g.validate()?;
    if let Command::Validate = cli.command {
        let cycles = g.fundamental_cycle_voltages()?;
        emit(
            cli.format,
            format!(
                "valid: {} vertices, {} edges, fundamental cycle voltages {:?}",
                g.vertex_count(),
                g.edges().len(),
                cycles
            ),
            json!({
                "valid": true,
                "vertices": g.vertex_count(),
                "edges": g.edges().len(),
                "cycle_voltages": cycles,
            }),
        );
        return Ok(true);
    }
    if let Command::Verify { max } = cli.command {
        let opts = VerifyOptions {
            vertex_cap: cli.cap,
            bound_cap: DEFAULT_BOUND_CAP,
        };
        let report = verify(&g, max, opts)?;
        emit(cli.format, report.to_string(), report.to_json());
        return Ok(report.passed());
    }

    let fam = TauFamily::new(&g)?;
    let b = fam.bundle();
    match &cli.command {
        Command::Poly => {
            let text = format!(
                "P(z) = {}\ns = {}\na0 = {}\nR(z) = {}\nQ(w) = {}\nP''(1) = {}",
                b.p,
                b.s,
                b.a0,
                b.r.display_with("z"),
                b.q.display_with("w"),
                b.p_dd_1
            );
            emit(
                cli.format,
                text,
                json!({
                    "P": b.p.to_json(),
                    "Q": b.q.to_json(),
                    "R": b.r.to_json(),
                    "s": b.s,
                    "a0": b.a0.to_string(),
                    "Pdd1": b.p_dd_1.to_string(),
                }),
            );
        }
        Command::Tau { n, route } => {
            let n = *n;
            let mut lines = Vec::new();
            let mut out = serde_json::Map::new();
            if matches!(route, Route::Exact | Route::All) {
                let t = fam.exact(n)?;
                lines.push(format!("tau({n}) = {}", t.value));
                out.insert("tau".into(), tau_json(std::slice::from_ref(&t)));
                out.insert("epsilon".into(), json!(t.epsilon));
            }
            if matches!(route, Route::Chebyshev | Route::All) {
                let c = fam.chebyshev(n)?;
                lines.push(format!("tau({n}) ~ {c:.17e} (chebyshev)"));
                out.insert("chebyshev".into(), json!(c));
            }
            if matches!(route, Route::Bruteforce | Route::All) {
                let t = fam.bruteforce(n, cli.cap)?;
                lines.push(format!("tau({n}) = {} (bruteforce)", t.value));
                out.insert("bruteforce".into(), json!(t.value.to_string()));
            }
            emit(cli.format, lines.join("\n"), Value::Object(out));
        }
        Command::TauTable { max } => {
            let rows = fam.exact_table(*max)?;
            let text = rows
                .iter()
                .map(|t| format!("{} {}", t.n, t.value))
                .collect::<Vec<_>>()
                .join("\n");
            emit(cli.format, text, json!({ "tau": tau_json(&rows) }));
        }
        Command::Genfunc { u_form } => {
            let gf = generating_function_for(&fam, DEFAULT_BOUND_CAP)?;
            let mut text = format!(
                "F(x) = {}\nN(x) = {}\nD(x) = {}\nverified terms: {}\nsymmetry F(y/a0) = F(1/(a0 y)): {}",
                gf.f,
                gf.f.num(),
                gf.f.den(),
                gf.verified_terms,
                gf.symmetry_ok
            );
            let mut out = json!({
                "F": gf.f.to_json(),
                "verified_terms": gf.verified_terms,
                "symmetry_ok": gf.symmetry_ok,
            });
            if *u_form {
                let u = to_u_form(&gf.f, &b.a0)?;
                text.push_str(&format!(
                    "\nF(u) = {}, u = ({a0} x + 1/({a0} x)) / 2",
                    u.display_with("u"),
                    a0 = b.a0
                ));
                out["U"] = u.to_json();
            }
            emit(cli.format, text, out);
            return Ok(gf.symmetry_ok);
        }
        Command::Asym { max } => {
            let p = AsymptoticProfile::new(&fam)?;
            let rows = convergence_report(&fam, (*max).max(2))?;
            let mut text = format!(
                "A = {:.15}\nA (integral) = {:.15}\nq = {}\ntau(H) = {}\nlog A = {:.15}\nn,ratio,log_gap",
                p.a, p.a_integral, p.q, p.tau_h, p.log_a
            );
            for r in &rows {
                text.push_str(&format!("\n{},{:.12},{:.12e}", r.n, r.ratio, r.log_gap));
            }
            emit(
                cli.format,
                text,
                json!({
                    "A": p.a,
                    "A_integral": p.a_integral,
                    "q": p.q.to_string(),
                    "tau_H": p.tau_h.to_string(),
                    "log_A": p.log_a,
                    "roots_outside": p.roots_outside.iter().map(|z| json!([z.re, z.im])).collect::<Vec<_>>(),
                    "convergence": rows.iter().map(|r| json!({
                        "n": r.n, "ratio": r.ratio, "log_gap": r.log_gap,
                    })).collect::<Vec<_>>(),
                }),
            );
        }
        Command::Validate | Command::Verify { .. } | Command::Example { .. } => unreachable!(),
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
