//! Output formats for polynomials and computed values.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};
use serde_json::json;

use crate::error::{Error, Result};
use crate::invariants::CompSeries;
use crate::poly::{MPoly, Var};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Latex,
    Text,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Format> {
        Ok(match s {
            "json" => Format::Json,
            "csv" => Format::Csv,
            "latex" => Format::Latex,
            "text" => Format::Text,
            other => return Err(Error::InvalidArgument(format!("unknown format {other:?}"))),
        })
    }
}

/// A computed quantity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Poly(MPoly),
    Int(BigInt),
    Series(CompSeries),
}

impl Value {
    pub fn max_total_degree(&self) -> i64 {
        match self {
            Value::Poly(p) => p.max_total_degree(),
            Value::Int(_) => 0,
            Value::Series(s) => s
                .entries
                .values()
                .map(MPoly::max_total_degree)
                .max()
                .unwrap_or(0),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Value::Poly(p) => serde_json::to_value(p).expect("polynomials serialize"),
            Value::Int(n) => int_json(n),
            Value::Series(s) => {
                let map: serde_json::Map<String, serde_json::Value> = s
                    .entries
                    .iter()
                    .map(|(k, v)| (k.to_string(), serde_json::to_value(v).expect("serialize")))
                    .collect();
                serde_json::Value::Object(map)
            }
        }
    }

    pub fn text(&self) -> String {
        match self {
            Value::Poly(p) => p.to_string(),
            Value::Int(n) => n.to_string(),
            Value::Series(s) => s
                .entries
                .iter()
                .map(|(k, v)| format!("{k}: {v}"))
                .collect::<Vec<_>>()
                .join("; "),
        }
    }

    pub fn latex(&self) -> String {
        match self {
            Value::Poly(p) => latex(p),
            Value::Int(n) => n.to_string(),
            Value::Series(s) => s
                .entries
                .iter()
                .map(|(k, v)| format!("D_{{{k}}}: {}", latex(v)))
                .collect::<Vec<_>>()
                .join(", "),
        }
    }

    /// Single-cell serialization used inside CSV tables.
    pub fn cell(&self) -> String {
        match self {
            Value::Int(n) => n.to_string(),
            other => other.to_json().to_string(),
        }
    }
}

fn int_json(n: &BigInt) -> serde_json::Value {
    match n.to_i64() {
        Some(v) => json!(v),
        None => json!(n.to_string()),
    }
}

/// LaTeX with ascending exponents: `q^{3} w^{4}`, `q^{-2}`.
pub fn latex(p: &MPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (e, c)) in p.terms().enumerate() {
        let mut vars = String::new();
        for v in Var::ALL {
            let x = e[v.index()];
            if x != 0 {
                if !vars.is_empty() {
                    vars.push(' ');
                }
                if x == 1 {
                    vars.push_str(v.name());
                } else {
                    let _ = write!(vars, "{}^{{{x}}}", v.name());
                }
            }
        }
        let neg = c.is_negative();
        let mag = c.abs();
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        if vars.is_empty() {
            let _ = write!(out, "{mag}");
        } else if mag.is_one() {
            out.push_str(&vars);
        } else {
            let _ = write!(out, "{mag} {vars}");
        }
    }
    out
}

/// CSV rows `e_q,e_w,e_t,c` for a single polynomial.
pub fn poly_csv(p: &MPoly) -> Result<String> {
    let mut w = csv::Writer::from_writer(vec![]);
    w.write_record(["e_q", "e_w", "e_t", "c"])
        .map_err(csv_err)?;
    for (e, c) in p.terms() {
        w.write_record([
            e[0].to_string(),
            e[1].to_string(),
            e[2].to_string(),
            c.to_string(),
        ])
        .map_err(csv_err)?;
    }
    finish_csv(w)
}

pub(crate) fn csv_err(e: csv::Error) -> Error {
    Error::InvalidArgument(format!("csv output: {e}"))
}

pub(crate) fn finish_csv(w: csv::Writer<Vec<u8>>) -> Result<String> {
    let bytes = w
        .into_inner()
        .map_err(|e| Error::InvalidArgument(format!("csv output: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn render(value: &Value, format: Format) -> Result<String> {
    Ok(match (format, value) {
        (Format::Json, v) => v.to_json().to_string(),
        (Format::Text, v) => v.text(),
        (Format::Latex, v) => v.latex(),
        (Format::Csv, Value::Poly(p)) => poly_csv(p)?.trim_end().to_string(),
        (Format::Csv, Value::Int(n)) => format!("value\n{n}"),
        (Format::Csv, Value::Series(s)) => {
            let mut w = csv::Writer::from_writer(vec![]);
            w.write_record(["s", "e_q", "e_w", "e_t", "c"])
                .map_err(csv_err)?;
            for (k, p) in &s.entries {
                for (e, c) in p.terms() {
                    w.write_record([
                        k.to_string(),
                        e[0].to_string(),
                        e[1].to_string(),
                        e[2].to_string(),
                        c.to_string(),
                    ])
                    .map_err(csv_err)?;
                }
            }
            finish_csv(w)?.trim_end().to_string()
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn latex_examples() {
        let p = MPoly::from_terms([([3, 0, 0], 1), ([4, 0, 0], 1), ([6, 0, 0], 1)]);
        assert_eq!(latex(&p), "q^{3} + q^{4} + q^{6}");
        let mixed = MPoly::from_terms([([-2, 0, 0], -1), ([0, 0, 0], 2), ([1, 4, 0], 3)]);
        assert_eq!(latex(&mixed), "-q^{-2} + 2 + 3 q w^{4}");
        assert_eq!(latex(&MPoly::zero()), "0");
    }

    #[test]
    fn json_and_csv() {
        let p = MPoly::from_terms([([6, 6, 0], 1)]);
        assert_eq!(
            render(&Value::Poly(p.clone()), Format::Json).unwrap(),
            r#"[{"e":[6,6,0],"c":"1"}]"#
        );
        assert_eq!(
            render(&Value::Poly(p), Format::Csv).unwrap(),
            "e_q,e_w,e_t,c\n6,6,0,1"
        );
        assert_eq!(
            render(&Value::Int(BigInt::from(12)), Format::Json).unwrap(),
            "12"
        );
    }
}
