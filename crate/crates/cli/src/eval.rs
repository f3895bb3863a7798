use std::collections::HashMap;

use algebra_core::{
    commutator, exp_trig, geometric, inner, inverse, norm, outer, parse_blade_label, reverse,
    Metric, Multivector, Side, Signature, TrigFn,
};
use duality_join::{dual_j, dual_j_inv, join};
use euclid_ops::{angle, distance, project, reflect, reject, scale, View};
use geometry::{central_point, classify, hyperplane, point, polar, Entity};
use motions::{apply_sandwich, rotor, screw_e3, translator};

use crate::parse::{Expr, Stmt};
use crate::CliError;

#[derive(Debug, Clone)]
pub enum Value {
    Mv(Multivector),
    Num(f64),
    Text(String),
}

/// Evaluation context: dimension and metric, fixed per invocation.
#[derive(Debug, Clone)]
pub struct Context {
    pub sig: Signature,
    pub metric: Metric,
}

impl Context {
    pub fn new(n: u8, metric: Metric) -> Result<Context, CliError> {
        let sig = Signature::new(n, metric).map_err(wrap)?;
        Ok(Context { sig, metric })
    }
}

fn wrap<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Eval(e.to_string())
}

pub fn eval_program(stmts: &[Stmt], ctx: &Context) -> Result<Value, CliError> {
    let mut env: HashMap<String, Value> = HashMap::new();
    let mut last = None;
    for stmt in stmts {
        match stmt {
            Stmt::Bind { name, value } => {
                let v = eval(value, ctx, &env)?;
                env.insert(name.clone(), v);
            }
            Stmt::Value(e) => last = Some(eval(e, ctx, &env)?),
        }
    }
    last.ok_or_else(|| CliError::Eval("input binds names but never evaluates anything".into()))
}

fn eval(e: &Expr, ctx: &Context, env: &HashMap<String, Value>) -> Result<Value, CliError> {
    match e {
        Expr::Num(v) => Ok(Value::Num(*v)),
        Expr::Blade {
            coeff,
            target,
            indices,
            pos,
        } => {
            let (mask, sign) = parse_blade_label(indices, ctx.sig.n()).map_err(|e| {
                CliError::Parse {
                    pos: *pos,
                    msg: e.to_string(),
                }
            })?;
            let side = if *target { Side::Target } else { Side::Dual };
            Ok(Value::Mv(Multivector::from_terms(
                ctx.sig.n(),
                side,
                &[(mask, coeff * sign)],
            )))
        }
        Expr::Var { name, pos } => env.get(name).cloned().ok_or_else(|| CliError::Parse {
            pos: *pos,
            msg: format!("unknown name '{name}'"),
        }),
        Expr::Unary { op, arg } => unary(*op, eval(arg, ctx, env)?, ctx),
        Expr::Binary { op, lhs, rhs } => {
            binary(*op, eval(lhs, ctx, env)?, eval(rhs, ctx, env)?, ctx)
        }
        Expr::Call { name, args, pos } => {
            let vals = args
                .iter()
                .map(|a| eval(a, ctx, env))
                .collect::<Result<Vec<_>, _>>()?;
            call(name, &vals, *pos, ctx)
        }
    }
}

fn unary(op: char, v: Value, ctx: &Context) -> Result<Value, CliError> {
    match (op, v) {
        ('-', Value::Num(x)) => Ok(Value::Num(-x)),
        ('-', Value::Mv(m)) => Ok(Value::Mv(m.scaled(-1.0))),
        ('~', Value::Num(x)) => Ok(Value::Num(x)),
        ('~', Value::Mv(m)) => Ok(Value::Mv(reverse(&m))),
        ('!', Value::Num(x)) => {
            if x == 0.0 {
                Err(CliError::Eval("cannot invert zero".into()))
            } else {
                Ok(Value::Num(1.0 / x))
            }
        }
        ('!', Value::Mv(m)) => Ok(Value::Mv(inverse(&m, &ctx.sig).map_err(wrap)?)),
        (op, Value::Text(_)) => Err(CliError::Eval(format!("'{op}' cannot act on text"))),
        _ => unreachable!("parser only emits -, ~, !"),
    }
}

fn binary(op: char, a: Value, b: Value, ctx: &Context) -> Result<Value, CliError> {
    if let (Value::Num(x), Value::Num(y)) = (&a, &b) {
        match op {
            '+' => return Ok(Value::Num(x + y)),
            '-' => return Ok(Value::Num(x - y)),
            '*' => return Ok(Value::Num(x * y)),
            _ => {}
        }
    }
    let side = match (&a, &b) {
        (Value::Mv(m), _) => m.side(),
        (_, Value::Mv(m)) => m.side(),
        _ => Side::Dual,
    };
    let x = as_mv(&a, ctx, side)?;
    let y = as_mv(&b, ctx, side)?;
    x.check_compatible(&y).map_err(wrap)?;
    let sig = &ctx.sig;
    let out = match op {
        '+' => &x + &y,
        '-' => &x + &y.scaled(-1.0),
        '*' => geometric(&x, &y, sig).map_err(wrap)?,
        '^' => outer(&x, &y).map_err(wrap)?,
        '|' => inner(&x, &y, sig).map_err(wrap)?,
        'x' => commutator(&x, &y, sig).map_err(wrap)?,
        '&' => join(&x, &y).map_err(wrap)?,
        _ => unreachable!("parser only emits the five products and +/-"),
    };
    Ok(Value::Mv(out))
}

fn as_mv(v: &Value, ctx: &Context, side: Side) -> Result<Multivector, CliError> {
    match v {
        Value::Mv(m) => Ok(m.clone()),
        Value::Num(x) => Ok(Multivector::scalar(ctx.sig.n(), side, *x)),
        Value::Text(t) => Err(CliError::Eval(format!(
            "expected a multivector, got the text '{t}'"
        ))),
    }
}

fn as_num(v: &Value) -> Result<f64, CliError> {
    match v {
        Value::Num(x) => Ok(*x),
        Value::Mv(m) if m.is_scalar(0.0) => Ok(m.scalar_part()),
        Value::Mv(_) => Err(CliError::Eval("expected a number, got a multivector".into())),
        Value::Text(t) => Err(CliError::Eval(format!("expected a number, got '{t}'"))),
    }
}

fn as_entity(v: &Value, what: &str) -> Result<Entity, CliError> {
    match v {
        Value::Mv(m) => Entity::from_multivector(m.clone()).map_err(wrap),
        _ => Err(CliError::Eval(format!("{what} must be a multivector"))),
    }
}

fn arity(name: &str, args: &[Value], want: usize, pos: usize) -> Result<(), CliError> {
    if args.len() == want {
        Ok(())
    } else {
        Err(CliError::Parse {
            pos,
            msg: format!("{name}() takes {want} argument(s), got {}", args.len()),
        })
    }
}

fn call(name: &str, args: &[Value], pos: usize, ctx: &Context) -> Result<Value, CliError> {
    let sig = &ctx.sig;
    let n = sig.n();
    match name {
        "dual" => {
            arity(name, args, 1, pos)?;
            let m = as_mv(&args[0], ctx, Side::Dual)?;
            Ok(Value::Mv(dual_j(&m).map_err(wrap)?))
        }
        "undual" => {
            arity(name, args, 1, pos)?;
            let m = as_mv(&args[0], ctx, Side::Target)?;
            Ok(Value::Mv(dual_j_inv(&m).map_err(wrap)?))
        }
        "exp" | "sin" | "cos" => {
            arity(name, args, 1, pos)?;
            let m = as_mv(&args[0], ctx, Side::Dual)?;
            let f = match name {
                "exp" => TrigFn::Exp,
                "sin" => TrigFn::Sin,
                _ => TrigFn::Cos,
            };
            Ok(Value::Mv(exp_trig(&m, sig, f).map_err(wrap)?))
        }
        "norm" => {
            arity(name, args, 1, pos)?;
            let m = as_mv(&args[0], ctx, Side::Dual)?;
            Ok(Value::Num(norm(&m, sig).map_err(wrap)?))
        }
        "polar" => {
            arity(name, args, 1, pos)?;
            let e = as_entity(&args[0], "polar argument")?;
            match polar(&e, sig).map_err(wrap)? {
                Some(p) => Ok(Value::Mv(p.mv().clone())),
                None => Err(CliError::Eval("polar is undefined for this entity".into())),
            }
        }
        "point" => {
            arity(name, args, n as usize, pos)?;
            let coords = args.iter().map(as_num).collect::<Result<Vec<_>, _>>()?;
            let p = point(n, &coords, 1.0, 1.0).map_err(wrap)?;
            Ok(Value::Mv(p.mv().clone()))
        }
        "plane" => {
            arity(name, args, n as usize + 1, pos)?;
            let nums = args.iter().map(as_num).collect::<Result<Vec<_>, _>>()?;
            let h = hyperplane(n, nums[0], &nums[1..]).map_err(wrap)?;
            Ok(Value::Mv(h.mv().clone()))
        }
        "rotor" => {
            arity(name, args, 2, pos)?;
            let axis = as_entity(&args[0], "rotor axis")?;
            let s = rotor(&axis, as_num(&args[1])?, sig).map_err(wrap)?;
            Ok(Value::Mv(s.mv().clone()))
        }
        "translator" => {
            arity(name, args, 2, pos)?;
            let dir = as_entity(&args[0], "translator hyperplane")?;
            let s = translator(&dir, as_num(&args[1])?, sig).map_err(wrap)?;
            Ok(Value::Mv(s.mv().clone()))
        }
        "screw" => {
            arity(name, args, 3, pos)?;
            let axis = as_entity(&args[0], "screw axis")?;
            let s = screw_e3(&axis, as_num(&args[1])?, as_num(&args[2])?, sig).map_err(wrap)?;
            Ok(Value::Mv(s.mv().clone()))
        }
        "reflect_td" | "reflect_bu" => {
            arity(name, args, 2, pos)?;
            let obj = as_mv(&args[0], ctx, Side::Dual)?;
            let mirror = as_mv(&args[1], ctx, Side::Dual)?;
            let view = if name == "reflect_td" {
                View::TopDown
            } else {
                View::BottomUp
            };
            Ok(Value::Mv(reflect(&obj, &mirror, view, sig).map_err(wrap)?))
        }
        "project" => {
            arity(name, args, 2, pos)?;
            let a = as_mv(&args[0], ctx, Side::Dual)?;
            let b = as_mv(&args[1], ctx, Side::Dual)?;
            Ok(Value::Mv(project(&a, &b, sig).map_err(wrap)?))
        }
        "reject" => {
            arity(name, args, 2, pos)?;
            let a = as_mv(&args[0], ctx, Side::Dual)?;
            let b = as_mv(&args[1], ctx, Side::Dual)?;
            Ok(Value::Mv(reject(&a, &b, sig).map_err(wrap)?))
        }
        "scale" => {
            arity(name, args, 3, pos)?;
            let a = as_mv(&args[0], ctx, Side::Dual)?;
            let b = as_mv(&args[1], ctx, Side::Dual)?;
            Ok(Value::Mv(
                scale(&a, &b, as_num(&args[2])?, sig).map_err(wrap)?,
            ))
        }
        "distance" => {
            arity(name, args, 2, pos)?;
            let a = as_entity(&args[0], "distance argument")?;
            let b = as_entity(&args[1], "distance argument")?;
            Ok(Value::Num(distance(&a, &b, sig).map_err(wrap)?))
        }
        "angle" => {
            arity(name, args, 2, pos)?;
            let a = as_entity(&args[0], "angle argument")?;
            let b = as_entity(&args[1], "angle argument")?;
            Ok(Value::Num(angle(&a, &b, sig).map_err(wrap)?))
        }
        "central" => {
            arity(name, args, 1, pos)?;
            let e = as_entity(&args[0], "central argument")?;
            let coords = central_point(&e).map_err(wrap)?;
            let p = point(n, &coords, 1.0, 1.0).map_err(wrap)?;
            Ok(Value::Mv(p.mv().clone()))
        }
        "classify" => {
            arity(name, args, 1, pos)?;
            let m = as_mv(&args[0], ctx, Side::Dual)?;
            Ok(Value::Text(classify(&m).map_err(wrap)?.name().to_string()))
        }
        "apply" => {
            arity(name, args, 2, pos)?;
            let s = as_mv(&args[0], ctx, Side::Dual)?;
            let m = as_mv(&args[1], ctx, Side::Dual)?;
            Ok(Value::Mv(apply_sandwich(&s, &m, sig).map_err(wrap)?))
        }
        _ => Err(CliError::Parse {
            pos,
            msg: format!("unknown function '{name}'"),
        }),
    }
}
