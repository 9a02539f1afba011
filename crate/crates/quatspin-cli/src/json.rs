//! JSON input parsing and deterministic output.

use std::io::{self, Write};

use anyhow::{anyhow, bail, Context, Result};
use quatspin::clifford::{ExtendedParavector, Mat2};
use quatspin::minkowski::MinkowskiPoint;
use quatspin::quaternion::{Paravector, Quaternion};
use serde_json::ser::Formatter;
use serde_json::{json, Map, Value};

/// Writes every float as `d.dddddddddddddddde±x`: 17 significant digits,
/// enough to round-trip any `f64`.
struct SignificantDigits;

impl Formatter for SignificantDigits {
    fn write_f64<W: ?Sized + Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        write!(writer, "{value:.16e}")
    }
}

/// Serializes `v` on one line.
pub fn to_line(v: &Value) -> String {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, SignificantDigits);
    serde::Serialize::serialize(v, &mut ser).expect("serializing a Value cannot fail");
    String::from_utf8(buf).expect("serde_json writes UTF-8")
}

/// A float as JSON; non-finite values become the strings `"inf"`, `"-inf"`
/// or `"nan"` since JSON has no literal for them.
pub fn num(x: f64) -> Value {
    if x.is_finite() {
        Value::from(x)
    } else if x.is_nan() {
        Value::from("nan")
    } else if x > 0.0 {
        Value::from("inf")
    } else {
        Value::from("-inf")
    }
}

pub fn quat(q: Quaternion) -> Value {
    Value::Array(q.to_array().into_iter().map(num).collect())
}

pub fn para(p: Paravector) -> Value {
    Value::Array(p.to_array().into_iter().map(num).collect())
}

pub fn point(p: MinkowskiPoint) -> Value {
    Value::Array(p.to_array().into_iter().map(num).collect())
}

pub fn extended(z: ExtendedParavector) -> Value {
    match z {
        ExtendedParavector::Infinity => Value::from("inf"),
        ExtendedParavector::Finite(p) => para(p),
    }
}

pub fn mat(m: &Mat2) -> Value {
    json!([[quat(m.a), quat(m.b)], [quat(m.c), quat(m.d)]])
}

pub fn field<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| anyhow!("missing field `{key}`"))
}

fn floats<const N: usize>(v: &Value, what: &str) -> Result<[f64; N]> {
    let arr = v.as_array().ok_or_else(|| anyhow!("{what} must be an array of {N} numbers"))?;
    if arr.len() != N {
        bail!("{what} must have {N} entries, found {}", arr.len());
    }
    let mut out = [0.0; N];
    for (o, x) in out.iter_mut().zip(arr) {
        *o = x.as_f64().ok_or_else(|| anyhow!("{what} entries must be numbers"))?;
        if !o.is_finite() {
            bail!("{what} entries must be finite");
        }
    }
    Ok(out)
}

pub fn parse_quat(v: &Value, what: &str) -> Result<Quaternion> {
    floats::<4>(v, what).map(Quaternion::from_array)
}

pub fn parse_para(v: &Value, what: &str) -> Result<Paravector> {
    floats::<3>(v, what).map(Paravector::from_array)
}

pub fn parse_point(v: &Value, what: &str) -> Result<MinkowskiPoint> {
    floats::<5>(v, what).map(MinkowskiPoint::from_array)
}

/// `"inf"` or a 3-array.
pub fn parse_extended(v: &Value, what: &str) -> Result<ExtendedParavector> {
    if v.as_str() == Some("inf") {
        return Ok(ExtendedParavector::Infinity);
    }
    parse_para(v, what).map(ExtendedParavector::Finite)
}

/// `{"xi": [..4], "eta": [..4]}`.
pub fn parse_pair(v: &Value, what: &str) -> Result<(Quaternion, Quaternion)> {
    let obj = v.as_object().ok_or_else(|| anyhow!("{what} must be an object with `xi` and `eta`"))?;
    let xi = parse_quat(field(obj, "xi")?, "xi").with_context(|| what.to_string())?;
    let eta = parse_quat(field(obj, "eta")?, "eta").with_context(|| what.to_string())?;
    Ok((xi, eta))
}

/// `[[a, b], [c, d]]` with quaternion entries.
pub fn parse_mat(v: &Value) -> Result<Mat2> {
    let rows = v.as_array().filter(|r| r.len() == 2).ok_or_else(|| anyhow!("matrix must be [[a, b], [c, d]]"))?;
    let row = |r: &Value| -> Result<(Quaternion, Quaternion)> {
        let e = r.as_array().filter(|e| e.len() == 2).ok_or_else(|| anyhow!("matrix rows must have two entries"))?;
        Ok((parse_quat(&e[0], "matrix entry")?, parse_quat(&e[1], "matrix entry")?))
    };
    let (a, b) = row(&rows[0])?;
    let (c, d) = row(&rows[1])?;
    Ok(Mat2::new(a, b, c, d))
}
