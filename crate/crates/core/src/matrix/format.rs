//! Text (`0 2 -2; -2 0 2; 2 -2 0`) and JSON (`{"n":3,"rows":[...]}`) forms.

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Number, Value};

use super::ExchangeMatrix;
use crate::scalar::IntScalar;
use crate::Error;

impl<T: IntScalar> fmt::Display for ExchangeMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.entries().chunks(self.n()).enumerate() {
            if r > 0 {
                write!(f, "; ")?;
            }
            for (c, v) in row.iter().enumerate() {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

/// Parse the text form. Blank lines and newlines between rows are accepted
/// in place of `;`.
pub fn parse_matrix<T: IntScalar>(src: &str) -> Result<ExchangeMatrix<T>, Error> {
    let rows: Vec<Vec<T>> = src
        .split(|c| c == ';' || c == '\n')
        .map(str::trim)
        .filter(|r| !r.is_empty())
        .map(|r| {
            r.split_whitespace()
                .map(|tok| {
                    T::from_str_radix(tok, 10)
                        .map_err(|_| Error::Parse(format!("bad matrix entry {tok:?}")))
                })
                .collect()
        })
        .collect::<Result<_, _>>()?;
    ExchangeMatrix::from_rows(rows)
}

impl<T: IntScalar> FromStr for ExchangeMatrix<T> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let t = s.trim_start();
        if t.starts_with('{') {
            let v: Value = serde_json::from_str(t).map_err(|e| Error::Parse(e.to_string()))?;
            matrix_from_json(&v)
        } else {
            parse_matrix(s)
        }
    }
}

pub(crate) fn int_to_json<T: fmt::Display>(v: &T) -> Value {
    Value::Number(Number::from_str(&v.to_string()).expect("integer is a valid JSON number"))
}

pub(crate) fn int_from_json<T: IntScalar>(v: &Value) -> Result<T, Error> {
    match v {
        Value::Number(n) => T::from_str_radix(&n.to_string(), 10)
            .map_err(|_| Error::Parse(format!("not an integer: {n}"))),
        other => Err(Error::Parse(format!("expected integer, found {other}"))),
    }
}

pub fn matrix_to_json<T: IntScalar>(m: &ExchangeMatrix<T>) -> Value {
    let rows: Vec<Value> = m
        .entries()
        .chunks(m.n())
        .map(|r| Value::Array(r.iter().map(int_to_json).collect()))
        .collect();
    json!({ "n": m.n(), "rows": rows })
}

pub fn matrix_from_json<T: IntScalar>(v: &Value) -> Result<ExchangeMatrix<T>, Error> {
    let rows = v
        .get("rows")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("matrix JSON needs a \"rows\" array".into()))?;
    let rows: Vec<Vec<T>> = rows
        .iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| Error::Parse("row is not an array".into()))?
                .iter()
                .map(int_from_json)
                .collect()
        })
        .collect::<Result<_, _>>()?;
    if let Some(n) = v.get("n") {
        let n = n
            .as_u64()
            .ok_or_else(|| Error::Parse("\"n\" is not a count".into()))? as usize;
        if n != rows.len() {
            return Err(Error::Dimension {
                expected: n,
                got: rows.len(),
            });
        }
    }
    ExchangeMatrix::from_rows(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::IntMatrix;

    #[test]
    fn text_round_trip() {
        let m: IntMatrix = "0 2 -2; -2 0 2; 2 -2 0".parse().unwrap();
        assert_eq!(m.to_string(), "0 2 -2; -2 0 2; 2 -2 0");
        assert_eq!(m.to_string().parse::<IntMatrix>().unwrap(), m);
    }

    #[test]
    fn json_round_trip() {
        let m: IntMatrix = "0 1; -4 0".parse().unwrap();
        let v = matrix_to_json(&m);
        assert_eq!(v.to_string(), r#"{"n":2,"rows":[[0,1],[-4,0]]}"#);
        assert_eq!(matrix_from_json::<num_bigint::BigInt>(&v).unwrap(), m);
    }

    #[test]
    fn rejects_ragged_and_non_skew() {
        assert!("0 1; -1".parse::<IntMatrix>().is_err());
        assert!("0 1; 1 0".parse::<IntMatrix>().is_err());
    }
}
