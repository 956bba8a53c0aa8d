//! Plain-text instance format.
//!
//! ```text
//! # a_count b_count r
//! 2 2 2
//! # U_1 .. U_r
//! 1 2
//! # a b u_1 .. u_r
//! 0 0 1 0
//! 0 1 0 2
//! ```
//!
//! Fields are whitespace separated; `#` starts a comment that runs to the end
//! of the line.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::model::Instance;

/// Non-empty lines with comments stripped, paired with 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

pub(crate) fn parse_field<T: FromStr>(line: usize, field: &str, what: &str) -> Result<T> {
    field.parse().map_err(|_| Error::Parse {
        line,
        message: format!("invalid {what} `{field}`"),
    })
}

impl Instance {
    pub fn parse(text: &str) -> Result<Instance> {
        let mut lines = content_lines(text);
        let (line, header) = lines.next().ok_or(Error::Parse {
            line: 0,
            message: "missing header `a_count b_count r`".into(),
        })?;
        let header: Vec<usize> = header
            .split_whitespace()
            .map(|f| parse_field(line, f, "header field"))
            .collect::<Result<_>>()?;
        let [a_count, b_count, r] = header[..] else {
            return Err(Error::Parse {
                line,
                message: "header must be `a_count b_count r`".into(),
            });
        };

        let (line, bounds) = lines.next().ok_or(Error::Parse {
            line,
            message: "missing bounds line".into(),
        })?;
        let bounds: Vec<u64> = bounds
            .split_whitespace()
            .map(|f| parse_field(line, f, "bound"))
            .collect::<Result<_>>()?;
        if bounds.len() != r {
            return Err(Error::Parse {
                line,
                message: format!("expected {r} bounds, found {}", bounds.len()),
            });
        }

        let mut inst = Instance::new(a_count, b_count, bounds).map_err(|e| Error::Parse {
            line,
            message: e.to_string(),
        })?;
        let mut utilities = Vec::with_capacity(r);
        for (line, text) in lines {
            let mut fields = text.split_whitespace();
            let a: usize = parse_field(line, fields.next().unwrap_or(""), "a index")?;
            let b: usize = parse_field(line, fields.next().unwrap_or(""), "b index")?;
            utilities.clear();
            for f in fields {
                utilities.push(parse_field(line, f, "utility")?);
            }
            inst.add_edge(a, b, &utilities).map_err(|e| Error::Parse {
                line,
                message: e.to_string(),
            })?;
        }
        Ok(inst)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {} {}", self.a_count(), self.b_count(), self.r());
        out.push_str(&join(self.bounds()));
        out.push('\n');
        for ((a, b), u) in self.edges() {
            let _ = writeln!(out, "{a} {b} {}", join(u));
        }
        out
    }
}

fn join(values: &[u64]) -> String {
    values
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

impl FromStr for Instance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Instance::parse(s)
    }
}
