//! Coefficient algebras selectable with `--algebra`, and their JSON forms.

use std::fmt;
use std::str::FromStr;

use coloop::algebras::{parse_cd, CdElement, Matrix};
use coloop::freealg::NcPoly;
use coloop::seriesloops::{SeriesFlavor, TruncatedSeries};
use coloop::{Q, Ring};
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgebraSpec {
    /// Free algebra; coefficients are polynomials in `x_n, y_n, z_n`.
    Free,
    Rational,
    /// Rational matrices of the given size.
    MatQ(usize),
    /// Cayley–Dickson algebra of the given level.
    Cd(u32),
    /// Matrices over a Cayley–Dickson algebra.
    MatCd(usize, u32),
}

impl FromStr for AlgebraSpec {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let cd = |t: &str| match t {
            "c" | "complex" => Some(1),
            "h" | "quat" => Some(2),
            "oct" => Some(3),
            "sed" => Some(4),
            _ => None,
        };
        match s {
            "free" => return Ok(AlgebraSpec::Free),
            "q" => return Ok(AlgebraSpec::Rational),
            _ => {}
        }
        if let Some(l) = cd(s) {
            return Ok(AlgebraSpec::Cd(l));
        }
        let bad = || format!("unknown algebra {s:?} (free, q, m<k>q, quat, oct, sed, m<k>quat, m<k>oct, m<k>sed)");
        let rest = s.strip_prefix('m').ok_or_else(bad)?;
        let split = rest.find(|c: char| !c.is_ascii_digit()).ok_or_else(bad)?;
        let (k, base) = rest.split_at(split);
        let k: usize = k.parse().map_err(|_| bad())?;
        if k == 0 {
            return Err(bad());
        }
        match base {
            "q" => Ok(AlgebraSpec::MatQ(k)),
            b => cd(b).map(|l| AlgebraSpec::MatCd(k, l)).ok_or_else(bad),
        }
    }
}

/// A coefficient type the CLI can read and print.
pub trait Elem: Ring + fmt::Display {
    fn parse(v: &Value, spec: AlgebraSpec) -> Result<Self, String>;
    fn emit(&self) -> Value;
}

fn as_text(v: &Value) -> Result<String, String> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) => Ok(n.to_string()),
        _ => Err(format!("expected a string or number, got {v}")),
    }
}

impl Elem for Q {
    fn parse(v: &Value, _: AlgebraSpec) -> Result<Self, String> {
        let s = as_text(v)?;
        Q::from_str(s.trim()).map_err(|_| format!("bad rational {s:?}"))
    }
    fn emit(&self) -> Value {
        json!(self.to_string())
    }
}

impl Elem for NcPoly {
    fn parse(v: &Value, _: AlgebraSpec) -> Result<Self, String> {
        NcPoly::parse(&as_text(v)?).map_err(|e| e.to_string())
    }
    fn emit(&self) -> Value {
        json!(self.to_string())
    }
}

impl Elem for CdElement {
    fn parse(v: &Value, spec: AlgebraSpec) -> Result<Self, String> {
        let level = match spec {
            AlgebraSpec::Cd(l) | AlgebraSpec::MatCd(_, l) => l,
            _ => return Err("not a Cayley-Dickson algebra".into()),
        };
        parse_cd(&as_text(v)?, level).map_err(|e| e.to_string())
    }
    fn emit(&self) -> Value {
        json!(self.to_string())
    }
}

impl<A: Elem> Elem for Matrix<A> {
    fn parse(v: &Value, spec: AlgebraSpec) -> Result<Self, String> {
        let size = match spec {
            AlgebraSpec::MatQ(k) | AlgebraSpec::MatCd(k, _) => k,
            _ => return Err("not a matrix algebra".into()),
        };
        let rows = v.as_array().ok_or_else(|| format!("expected a matrix (array of rows), got {v}"))?;
        let rows = rows
            .iter()
            .map(|r| {
                r.as_array()
                    .ok_or_else(|| format!("expected a row array, got {r}"))?
                    .iter()
                    .map(|x| A::parse(x, spec))
                    .collect::<Result<Vec<A>, String>>()
            })
            .collect::<Result<Vec<_>, String>>()?;
        if rows.len() != size {
            return Err(format!("expected a {size}x{size} matrix, got {} rows", rows.len()));
        }
        Matrix::from_rows(rows).map_err(|e| e.to_string())
    }
    fn emit(&self) -> Value {
        Value::Array(self.rows().iter().map(|r| Value::Array(r.iter().map(Elem::emit).collect())).collect())
    }
}

/// Read `{"flavor": .., "order": .., "coeffs": [..]}`; missing trailing
/// coefficients are zero.
pub fn parse_series<A: Elem>(
    text: &str,
    spec: AlgebraSpec,
    flavor: SeriesFlavor,
    order: usize,
) -> Result<TruncatedSeries<A>, String> {
    let v: Value = serde_json::from_str(text).map_err(|e| format!("bad series JSON: {e}"))?;
    if let Some(f) = v.get("flavor") {
        let f: SeriesFlavor = f.as_str().ok_or("flavor must be a string")?.parse().map_err(|e: coloop::Error| e.to_string())?;
        if f != flavor {
            return Err(format!("series flavor {f} does not match --flavor {flavor}"));
        }
    }
    if let Some(o) = v.get("order") {
        if o.as_u64() != Some(order as u64) {
            return Err(format!("series order {o} does not match --order {order}"));
        }
    }
    let coeffs = v.get("coeffs").and_then(Value::as_array).ok_or("series JSON needs a \"coeffs\" array")?;
    let coeffs = coeffs.iter().map(|c| A::parse(c, spec)).collect::<Result<Vec<A>, String>>()?;
    if coeffs.is_empty() {
        return Err("a series needs at least one coefficient".into());
    }
    TruncatedSeries::padded(flavor, order, coeffs).map_err(|e| e.to_string())
}

pub fn emit_series<A: Elem>(s: &TruncatedSeries<A>) -> Value {
    json!({
        "flavor": s.flavor().name(),
        "order": s.order(),
        "coeffs": s.coeffs().iter().map(Elem::emit).collect::<Vec<_>>(),
    })
}
