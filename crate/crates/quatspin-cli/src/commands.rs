//! One function per subcommand. Each takes a parsed JSON request (or the
//! command-line options, for `verify`) and returns a report together with
//! its outcome.

use std::time::Instant;

use anyhow::{anyhow, bail, Result};
use quatspin::clifford::{pdet, redundant_residual, CliffordMatrix};
use quatspin::horosphere::{
    boundary_hyperboloid_to_disc, boundary_to_uhs, decorated_horosphere_from_spinor, disc_boundary_to_uhs, hyperboloid_to_disc,
};
use quatspin::lambda::{lambda_geometric, lambda_pdet, signed_match_residual, QuaternionicDistance};
use quatspin::minkowski::{act_minkowski, minkowski_inner};
use quatspin::quaternion::{Quaternion, DEFAULT_TOL};
use quatspin::spinor::{Spinor, SpinorResiduals};
use quatspin::verify::{run_suite, Suite};
use quatspin::Error;
use serde_json::{json, Map, Value};

use crate::json::{extended, field, mat, num, para, parse_extended, parse_mat, parse_pair, parse_point, point, quat};

/// Result classification, mapped to the process exit code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Outcome {
    Pass = 0,
    Violation = 1,
    InputError = 2,
}

pub struct Report {
    pub body: Value,
    pub outcome: Outcome,
}

impl Report {
    fn new(body: Value, pass: bool) -> Self {
        Report { body, outcome: if pass { Outcome::Pass } else { Outcome::Violation } }
    }
}

fn object(v: &Value) -> Result<&Map<String, Value>> {
    v.as_object().ok_or_else(|| anyhow!("request must be a JSON object"))
}

/// A spinor from request data, validated at the library default tolerance.
fn spinor(v: &Value, what: &str) -> Result<Spinor> {
    let (xi, eta) = parse_pair(v, what)?;
    Spinor::new(xi, eta).map_err(|e| anyhow!("{what}: {e}"))
}

fn clifford(v: &Value) -> Result<CliffordMatrix> {
    CliffordMatrix::validate(parse_mat(v)?, DEFAULT_TOL).map_err(|e| anyhow!("matrix: {e}"))
}

fn residuals_json(xi: Quaternion, eta: Quaternion) -> Value {
    let r = SpinorResiduals::of(xi, eta);
    json!({"coordinate": num(r.coordinate), "xi_eta_bar": num(r.xi_eta_bar), "xi_star_eta": num(r.xi_star_eta)})
}

/// Validates a spinor `{"xi", "eta"}` or a matrix `{"matrix"}`.
pub fn validate(input: &Value, tol: f64) -> Result<Report> {
    let obj = object(input)?;
    if let Some(m) = obj.get("matrix") {
        let m = parse_mat(m)?;
        let (failed, detail) = match CliffordMatrix::validate(m, tol) {
            Ok(_) => (Value::Null, Value::Null),
            Err(e @ Error::ColumnNotSpinor { column, residual }) => {
                (Value::from(format!("column {column} is a spinor")), json!({"message": e.to_string(), "residual": num(residual)}))
            }
            Err(e @ Error::PdetNotOne(dev)) => (Value::from("pdet = 1"), json!({"message": e.to_string(), "residual": num(dev)})),
            Err(e) => bail!(e),
        };
        let pass = failed.is_null();
        let body = json!({
            "command": "validate",
            "kind": "clifford",
            "input": input,
            "tol": num(tol),
            "valid": pass,
            "failed_condition": failed,
            "failure": detail,
            "residuals": {
                "column1": residuals_json(m.a, m.c),
                "column2": residuals_json(m.b, m.d),
                "pdet": quat(pdet(&m)),
                "redundant_conditions": num(redundant_residual(&m)),
            },
        });
        return Ok(Report::new(body, pass));
    }
    let (xi, eta) = parse_pair(input, "spinor")?;
    let (failed, residual) = match Spinor::validate(xi, eta, tol) {
        Ok(_) => (Value::Null, Value::Null),
        Err(Error::NotSpinor { condition, residual }) => (Value::from(condition), num(residual)),
        Err(Error::ZeroSpinor) => (Value::from("(xi, eta) != (0, 0)"), num(0.0)),
        Err(e) => bail!(e),
    };
    let pass = failed.is_null();
    let body = json!({
        "command": "validate",
        "kind": "spinor",
        "input": input,
        "tol": num(tol),
        "valid": pass,
        "failed_condition": failed,
        "residual": residual,
        "residuals": residuals_json(xi, eta),
    });
    Ok(Report::new(body, pass))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Method {
    Pdet,
    Geometric,
    Both,
}

fn distance_json(lambda: Quaternion) -> Value {
    match QuaternionicDistance::from_lambda(lambda) {
        Ok(d) => json!({"rho": num(d.rho), "theta": num(d.theta), "axis": para(d.axis)}),
        Err(_) => Value::Null,
    }
}

/// Lambda length of `{"k1", "k2"}`.
pub fn lambda(input: &Value, method: Method, tol: f64) -> Result<Report> {
    let obj = object(input)?;
    let k1 = spinor(field(obj, "k1")?, "k1")?;
    let k2 = spinor(field(obj, "k2")?, "k2")?;
    let mut body = json!({"command": "lambda", "input": input, "method": format!("{method:?}").to_lowercase()});
    let out = body.as_object_mut().expect("object literal");
    let p = lambda_pdet(&k1, &k2);
    if method != Method::Geometric {
        out.insert("pdet".into(), quat(p));
        out.insert("distance".into(), distance_json(p));
    }
    if method == Method::Pdet {
        return Ok(Report::new(body, true));
    }
    let g = lambda_geometric(&k1, &k2).map_err(|e| anyhow!("geometric lambda length: {e}"))?;
    out.insert("geometric".into(), quat(g));
    if method == Method::Geometric {
        out.insert("distance".into(), distance_json(g));
        return Ok(Report::new(body, true));
    }
    let residual = signed_match_residual(p, g);
    out.insert("residual".into(), num(residual));
    out.insert("tol".into(), num(tol));
    let pass = residual <= tol;
    out.insert("pass".into(), Value::from(pass));
    Ok(Report::new(body, pass))
}

/// Decorated horosphere of a spinor `{"xi", "eta"}`.
pub fn horosphere(input: &Value) -> Result<Report> {
    let k = spinor(input, "spinor")?;
    let h = decorated_horosphere_from_spinor(&k, 1e-12);
    let body = json!({
        "command": "horosphere",
        "input": input,
        "center": extended(h.center),
        "size": num(h.size),
        "size_kind": if h.center.is_infinite() { "height" } else { "diameter" },
        "dir_i": para(h.dir_i),
        "dir_j": para(h.dir_j),
    });
    Ok(Report::new(body, true))
}

/// Model conversion `{"from", "to", "point"}`.
pub fn convert(input: &Value, tol: f64) -> Result<Report> {
    let obj = object(input)?;
    let from = field(obj, "from")?.as_str().ok_or_else(|| anyhow!("`from` must be a string"))?;
    let to = field(obj, "to")?.as_str().ok_or_else(|| anyhow!("`to` must be a string"))?;
    let pt = field(obj, "point")?;
    let result = match (from, to) {
        ("hyperboloid", "disc") => json!(hyperboloid_to_disc(&parse_point(pt, "point")?, tol)?.map(num)),
        ("light_cone", "disc") => json!(boundary_hyperboloid_to_disc(&parse_point(pt, "point")?, tol)?.map(num)),
        ("light_cone", "uhs") => {
            let p = parse_point(pt, "point")?;
            if !p.is_future() || !p.is_null(tol) {
                bail!("point is not null and future");
            }
            extended(boundary_to_uhs(&p, tol))
        }
        ("disc_boundary", "uhs") => {
            let u: [f64; 4] = serde_json::from_value(pt.clone()).map_err(|_| anyhow!("point must be 4 numbers"))?;
            extended(disc_boundary_to_uhs(u, tol)?)
        }
        _ => bail!(
            "unsupported conversion {from} -> {to}; expected hyperboloid->disc, light_cone->disc, light_cone->uhs or disc_boundary->uhs"
        ),
    };
    let body = json!({"command": "convert", "input": input, "result": result});
    Ok(Report::new(body, true))
}

/// Applies `{"matrix"}` to one of `"spinor"`, `"point"` or `"paravector"`.
pub fn act(input: &Value, tol: f64) -> Result<Report> {
    let obj = object(input)?;
    let a = clifford(field(obj, "matrix")?)?;
    let (kind, result) = if let Some(k) = obj.get("spinor") {
        let k = a.act_spinor(&spinor(k, "spinor")?)?;
        ("spinor", json!({"xi": quat(k.xi()), "eta": quat(k.eta())}))
    } else if let Some(p) = obj.get("point") {
        let p = parse_point(p, "point")?;
        let q = act_minkowski(&a, &p);
        ("point", json!({"point": point(q), "inner_product_change": num(minkowski_inner(&q, &q) - minkowski_inner(&p, &p))}))
    } else if let Some(v) = obj.get("paravector") {
        ("paravector", extended(a.mobius_apply(parse_extended(v, "paravector")?, tol)))
    } else {
        bail!("expected one of `spinor`, `point` or `paravector`");
    };
    let body = json!({"command": "act", "input": input, "kind": kind, "matrix": mat(&a.matrix()), "result": result});
    Ok(Report::new(body, true))
}

/// Runs the selected suites; `suite = None` means all of them.
pub fn verify(suite: Option<Suite>, trials: u64, seed: u64, tol: Option<f64>, timing: bool) -> Report {
    let suites: Vec<Suite> = suite.map_or_else(|| Suite::ALL.to_vec(), |s| vec![s]);
    let mut results = Vec::new();
    let mut pass = true;
    for s in suites {
        let start = Instant::now();
        let rep = run_suite(s, trials, seed, tol.unwrap_or(s.default_tol()));
        pass &= rep.pass();
        let mut entry = json!({
            "suite": s.name(),
            "identity": s.identity(),
            "trials": rep.trials,
            "max_residual": num(rep.max_residual),
            "worst_seed": rep.worst_seed,
            "tol": num(rep.tol),
            "pass": rep.pass(),
        });
        if timing {
            entry["wall_time_s"] = num(start.elapsed().as_secs_f64());
        }
        results.push(entry);
    }
    let body = json!({
        "command": "verify",
        "seed": seed,
        "rng": "ChaCha8Rng::seed_from_u64(seed + trial)",
        "suites": results,
        "pass": pass,
    });
    Report::new(body, pass)
}
