mod eval;
mod parse;

pub use eval::{eval_program, Context, Value};
pub use parse::{parse_program, Expr, Stmt, Token};

use algebra_core::{format_multivector, format_scalar, parse_multivector, Metric};
use geometry::{entity_json, Entity};

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum CliError {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("{0}")]
    Eval(String),
    #[error("unknown suite '{0}'")]
    UnknownSuite(String),
}

/// Parse and evaluate one input in the given context.
pub fn eval_str(src: &str, ctx: &Context) -> Result<Value, CliError> {
    eval_program(&parse_program(src)?, ctx)
}

pub fn render_text(v: &Value) -> String {
    match v {
        Value::Mv(m) => format_multivector(m),
        Value::Num(x) => format_scalar(*x),
        Value::Text(s) => s.clone(),
    }
}

/// Result record: text form plus, where they apply, the scalar value, the
/// entity reading, or the classification.
pub fn render_json(v: &Value, ctx: &Context) -> serde_json::Value {
    let mut obj = serde_json::Map::new();
    obj.insert("n".into(), serde_json::json!(ctx.sig.n()));
    obj.insert("metric".into(), serde_json::json!(ctx.metric.name()));
    obj.insert("text".into(), serde_json::json!(render_text(v)));
    match v {
        Value::Num(x) => {
            obj.insert("scalar".into(), serde_json::json!(x));
        }
        Value::Text(s) => {
            obj.insert("kind".into(), serde_json::json!(s));
        }
        Value::Mv(m) => {
            let entity = match Entity::from_multivector(m.clone()) {
                Ok(e) => entity_json(&e, Some(&ctx.sig)),
                Err(_) => serde_json::Value::Null,
            };
            obj.insert("entity".into(), entity);
        }
    }
    serde_json::Value::Object(obj)
}

/// Compare an evaluation outcome against a fixture expectation. `!error`
/// expects a failed evaluation; otherwise numbers compare at `tol`, text
/// exactly, and multivectors coefficient by coefficient at `tol`. Returns
/// the verdict and the actual value's text form.
pub fn compare_expected(
    outcome: &Result<Value, CliError>,
    expected: &str,
    n: u8,
    tol: f64,
) -> (bool, String) {
    let v = match outcome {
        Err(e) => return (expected == "!error", format!("error: {e}")),
        Ok(v) => v,
    };
    let actual = render_text(v);
    if expected == "!error" {
        return (false, actual);
    }
    let pass = match v {
        Value::Text(s) => s == expected,
        Value::Num(x) => expected
            .parse::<f64>()
            .is_ok_and(|want| (x - want).abs() <= tol),
        Value::Mv(m) => match parse_multivector(expected, n) {
            Ok(mut want) => {
                // a pure scalar carries no side letter; read it on the
                // value's side
                if want.side() != m.side() && want.is_scalar(0.0) {
                    want = want.with_side(m.side());
                }
                want.side() == m.side()
                    && want.n() == m.n()
                    && m.coeffs()
                        .iter()
                        .zip(want.coeffs())
                        .all(|(a, b)| (a - b).abs() <= tol)
            }
            Err(_) => false,
        },
    };
    (pass, actual)
}

pub const SUITE_NAMES: [&str; 4] = [
    "e2-worked-examples",
    "e3-worked-examples",
    "j-tables",
    "linfunc",
];

fn suite_body(name: &str) -> Option<&'static str> {
    match name {
        "e2-worked-examples" => Some(include_str!("../fixtures/e2-worked-examples.txt")),
        "e3-worked-examples" => Some(include_str!("../fixtures/e3-worked-examples.txt")),
        "j-tables" => Some(include_str!("../fixtures/j-tables.txt")),
        "linfunc" => Some(include_str!("../fixtures/linfunc.txt")),
        _ => None,
    }
}

#[derive(Debug)]
pub struct FixtureOutcome {
    pub line: usize,
    pub expr: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Debug)]
pub struct SuiteReport {
    pub name: String,
    pub results: Vec<FixtureOutcome>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        !self.results.is_empty() && self.results.iter().all(|r| r.pass)
    }
}

/// Run one fixture suite. Lines are `expr :: expected`; `@n`, `@metric` and
/// `@tol` directives apply to everything below them; '#' starts a comment.
pub fn run_suite(name: &str) -> Result<SuiteReport, CliError> {
    let body = suite_body(name).ok_or_else(|| CliError::UnknownSuite(name.to_string()))?;
    let mut n = 2u8;
    let mut metric = Metric::Euclidean;
    let mut tol = 1e-9;
    let mut results = Vec::new();
    for (idx, raw) in body.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let lineno = idx + 1;
        if let Some(rest) = line.strip_prefix('@') {
            let mut parts = rest.split_whitespace();
            let key = parts.next().unwrap_or("");
            let val = parts.next().unwrap_or("");
            let ok = match key {
                "n" => val.parse::<u8>().map(|v| n = v).is_ok(),
                "metric" => Metric::from_name(val).map(|m| metric = m).is_some(),
                "tol" => val.parse::<f64>().map(|v| tol = v).is_ok(),
                _ => false,
            };
            if !ok {
                results.push(FixtureOutcome {
                    line: lineno,
                    expr: line.to_string(),
                    expected: "a valid directive".into(),
                    actual: "malformed directive".into(),
                    pass: false,
                });
            }
            continue;
        }
        let Some((lhs, rhs)) = line.split_once("::") else {
            results.push(FixtureOutcome {
                line: lineno,
                expr: line.to_string(),
                expected: "a line of the form 'expr :: expected'".into(),
                actual: "missing '::'".into(),
                pass: false,
            });
            continue;
        };
        let expr = lhs.trim().to_string();
        let expected = rhs.trim().to_string();
        let outcome = Context::new(n, metric).and_then(|ctx| eval_str(&expr, &ctx));
        let (pass, actual) = compare_expected(&outcome, &expected, n, tol);
        results.push(FixtureOutcome {
            line: lineno,
            expr,
            expected,
            actual,
            pass,
        });
    }
    Ok(SuiteReport {
        name: name.to_string(),
        results,
    })
}
