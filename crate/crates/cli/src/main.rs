use std::io::BufRead;
use std::process::ExitCode;

use algebra_core::{format_multivector, Metric, Side};
use clap::{Parser, Subcommand};
use linfunc::LinFunc;
use pga_cli::{
    compare_expected, eval_str, render_json, render_text, run_suite, Context, Value, SUITE_NAMES,
};

#[derive(Parser)]
#[command(name = "pga", about = "Plane-based geometric algebra calculator", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

fn parse_dim(s: &str) -> Result<u8, String> {
    match s.parse::<u8>() {
        Ok(v @ 1..=4) => Ok(v),
        _ => Err("dimension must be 1, 2, 3 or 4".into()),
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate an expression (or stdin lines) in a chosen dimension and metric
    Eval {
        /// Dimension of the modelled space
        #[arg(short = 'n', long = "n", value_parser = parse_dim, default_value = "2")]
        n: u8,
        /// euclidean, elliptic, hyperbolic, minkowski, de_sitter or anti_de_sitter
        #[arg(short = 'm', long = "metric", default_value = "euclidean")]
        metric: String,
        /// Emit a JSON record instead of plain text
        #[arg(long)]
        json: bool,
        /// Comparison tolerance for `expr :: expected` lines
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        /// Read one input per line from stdin
        #[arg(long)]
        stdin: bool,
        expr: Option<String>,
    },
    /// Run a named fixture suite, or all of them
    Check {
        #[arg(default_value = "all")]
        suite: String,
    },
    /// Inspect a linear function given as a row-major (n+1)x(n+1) matrix
    Linfunc {
        #[arg(short = 'n', long = "n", value_parser = parse_dim, default_value = "2")]
        n: u8,
        #[arg(short = 'm', long = "metric", default_value = "euclidean")]
        metric: String,
        /// Matrix as a JSON row-major array, e.g. [[1,0,0],[0,1,0],[0,0,1]]
        #[arg(long)]
        matrix: String,
        /// Expression whose value the function is applied to
        #[arg(long)]
        apply: Option<String>,
    },
}

fn context(n: u8, metric: &str) -> Result<Context, String> {
    let metric = Metric::from_name(metric).ok_or_else(|| format!("unknown metric '{metric}'"))?;
    Context::new(n, metric).map_err(|e| e.to_string())
}

fn eval_line(line: &str, ctx: &Context, json: bool, tol: f64) -> Result<bool, String> {
    let line = line.trim();
    if line.is_empty() || line.starts_with('#') {
        return Ok(true);
    }
    // a `::` makes the line a check; otherwise print the value
    if let Some((lhs, rhs)) = line.split_once("::") {
        let expr = lhs.trim();
        let expected = rhs.trim();
        let outcome = eval_str(expr, ctx);
        let (pass, actual) = compare_expected(&outcome, expected, ctx.sig.n(), tol);
        if pass {
            println!("pass  {expr} => {actual}");
        } else {
            println!("FAIL  {expr} => {actual} (expected {expected})");
        }
        return Ok(pass);
    }
    let v = eval_str(line, ctx).map_err(|e| e.to_string())?;
    if json {
        println!("{}", render_json(&v, ctx));
    } else {
        println!("{}", render_text(&v));
    }
    Ok(true)
}

fn run_eval(
    n: u8,
    metric: &str,
    json: bool,
    tol: f64,
    use_stdin: bool,
    expr: Option<String>,
) -> Result<ExitCode, String> {
    let ctx = context(n, metric)?;
    let mut all_pass = true;
    if use_stdin {
        for line in std::io::stdin().lock().lines() {
            let line = line.map_err(|e| e.to_string())?;
            match eval_line(&line, &ctx, json, tol) {
                Ok(pass) => all_pass &= pass,
                Err(msg) => {
                    println!("error: {msg}");
                    all_pass = false;
                }
            }
        }
    } else {
        let expr = expr.ok_or("missing expression; pass one or use --stdin")?;
        all_pass = eval_line(&expr, &ctx, json, tol)?;
    }
    Ok(if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn run_check(suite: &str) -> Result<ExitCode, String> {
    let names: Vec<&str> = if suite == "all" {
        SUITE_NAMES.to_vec()
    } else {
        vec![suite]
    };
    let mut total = 0usize;
    let mut failed = 0usize;
    for name in names {
        let report = run_suite(name).map_err(|e| e.to_string())?;
        for r in &report.results {
            total += 1;
            if r.pass {
                println!("pass  {name}:{}  {} => {}", r.line, r.expr, r.actual);
            } else {
                failed += 1;
                println!(
                    "FAIL  {name}:{}  {} => {} (expected {})",
                    r.line, r.expr, r.actual, r.expected
                );
            }
        }
    }
    println!("{total} fixtures, {} passed, {failed} failed", total - failed);
    Ok(if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn run_linfunc(
    n: u8,
    metric: &str,
    matrix: &str,
    apply: Option<String>,
) -> Result<ExitCode, String> {
    let ctx = context(n, metric)?;
    let rows: Vec<Vec<f64>> =
        serde_json::from_str(matrix).map_err(|e| format!("bad --matrix JSON: {e}"))?;
    let f = LinFunc::from_matrix(n, Side::Dual, &rows).map_err(|e| e.to_string())?;
    let mut obj = serde_json::Map::new();
    obj.insert("n".into(), serde_json::json!(n));
    obj.insert("metric".into(), serde_json::json!(ctx.metric.name()));
    obj.insert("matrix".into(), serde_json::json!(f.matrix_repr()));
    obj.insert("det".into(), serde_json::json!(f.determinant()));
    obj.insert("trace".into(), serde_json::json!(f.trace()));
    obj.insert(
        "adjoint".into(),
        serde_json::json!(f.adjoint().matrix_repr()),
    );
    obj.insert(
        "inverse".into(),
        match f.inverse() {
            Ok(g) => serde_json::json!(g.matrix_repr()),
            Err(_) => serde_json::Value::Null,
        },
    );
    if let Some(src) = apply {
        let v = eval_str(&src, &ctx).map_err(|e| e.to_string())?;
        let m = match v {
            Value::Mv(m) => m,
            _ => return Err("--apply must evaluate to a multivector".into()),
        };
        let image = f.apply(&m).map_err(|e| e.to_string())?;
        obj.insert(
            "applied".into(),
            serde_json::json!(format_multivector(&image)),
        );
    }
    println!("{}", serde_json::Value::Object(obj));
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.cmd {
        Cmd::Eval {
            n,
            metric,
            json,
            tol,
            stdin,
            expr,
        } => run_eval(n, &metric, json, tol, stdin, expr),
        Cmd::Check { suite } => run_check(&suite),
        Cmd::Linfunc {
            n,
            metric,
            matrix,
            apply,
        } => run_linfunc(n, &metric, &matrix, apply),
    };
    match outcome {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}
