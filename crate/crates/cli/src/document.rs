//! JSON tensor files.
//!
//! ```json
//! {
//!   "shape": [2, 2, 2],
//!   "entries": [[[1, 0], [0, 0]], [[0, 0], [0, "1/2"]]],
//!   "note": "optional free text",
//!   "hints": ["z:0,1"]
//! }
//! ```
//!
//! `entries[i][j][k]` is `a_ijk` (0-based here). Values are integers or
//! `"num/den"` strings.

use hypermat::polyalg::{format_rational, parse_rational, Rational};
use hypermat::schemes::ProjPoint;
use hypermat::tensor::{Axis, Tensor3};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TensorDocument {
    pub shape: [usize; 3],
    pub entries: Vec<Vec<Vec<Value>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub hints: Vec<String>,
}

fn value_to_rational(v: &Value, at: &str) -> Result<Rational, CliError> {
    let bad = |why: String| CliError::Input(format!("{at}: {why}"));
    match v {
        Value::Number(n) if n.is_i64() || n.is_u64() => parse_rational(&n.to_string()).map_err(|e| bad(e.to_string())),
        Value::Number(n) => Err(bad(format!("{n} is not an integer; write rationals as \"num/den\""))),
        Value::String(s) => parse_rational(s).map_err(|e| bad(e.to_string())),
        other => Err(bad(format!("expected an integer or \"num/den\" string, found {other}"))),
    }
}

fn rational_to_value(x: &Rational) -> Value {
    let s = format_rational(x);
    match s.parse::<i64>() {
        Ok(n) => Value::from(n),
        Err(_) => Value::String(s),
    }
}

/// Parses `axis:c1,c2,...`, e.g. `z:0,1,1,0`.
pub fn parse_hint(s: &str) -> Result<(Axis, ProjPoint), CliError> {
    let (axis, coords) = s
        .split_once(':')
        .ok_or_else(|| CliError::Input(format!("hint {s:?} should look like z:0,1,1,0")))?;
    let axis: Axis = axis.parse().map_err(|e: hypermat::error::Error| CliError::Input(e.to_string()))?;
    let point = ProjPoint::parse(coords).map_err(|e| CliError::Input(format!("hint {s:?}: {e}")))?;
    Ok((axis, point))
}

impl TensorDocument {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Json {
            line: e.line(),
            column: e.column(),
            msg: e.to_string(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    pub fn tensor(&self) -> Result<Tensor3, CliError> {
        let [p, q, r] = self.shape;
        if p == 0 || q == 0 || r == 0 {
            return Err(CliError::Input(format!("shape {:?} has a zero extent", self.shape)));
        }
        let shape_err = |at: String, want: usize, got: usize| {
            CliError::Input(format!("{at} has {got} entries, shape {:?} needs {want}", self.shape))
        };
        if self.entries.len() != p {
            return Err(shape_err("entries".into(), p, self.entries.len()));
        }
        let mut nested = Vec::with_capacity(p);
        for (i, plane) in self.entries.iter().enumerate() {
            if plane.len() != q {
                return Err(shape_err(format!("entries[{i}]"), q, plane.len()));
            }
            let mut rows = Vec::with_capacity(q);
            for (j, row) in plane.iter().enumerate() {
                if row.len() != r {
                    return Err(shape_err(format!("entries[{i}][{j}]"), r, row.len()));
                }
                let vals = row
                    .iter()
                    .enumerate()
                    .map(|(k, v)| value_to_rational(v, &format!("entries[{i}][{j}][{k}]")))
                    .collect::<Result<Vec<_>, _>>()?;
                rows.push(vals);
            }
            nested.push(rows);
        }
        Tensor3::from_nested(nested).map_err(CliError::Core)
    }

    pub fn parsed_hints(&self) -> Result<Vec<(Axis, ProjPoint)>, CliError> {
        self.hints.iter().map(|h| parse_hint(h)).collect()
    }

    pub fn from_tensor(a: &Tensor3, note: Option<String>, hints: Vec<String>) -> Self {
        TensorDocument {
            shape: a.dims(),
            entries: a
                .to_nested()
                .iter()
                .map(|plane| plane.iter().map(|row| row.iter().map(rational_to_value).collect()).collect())
                .collect(),
            note,
            hints,
        }
    }
}
