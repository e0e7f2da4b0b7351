//! The versioned JSON result document.

use std::fmt;

use macpieri::algebra::Coeff;
use macpieri::comb::Composition;
use macpieri::ZPolynomial;
use serde::{Deserialize, Serialize};

pub const SCHEMA: &str = "1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    E,
    Estar,
    Pieri,
    Binom,
    Norm,
    Psi,
    Innerprod,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::E => "e",
            Kind::Estar => "estar",
            Kind::Pieri => "pieri",
            Kind::Binom => "binom",
            Kind::Norm => "norm",
            Kind::Psi => "psi",
            Kind::Innerprod => "innerprod",
        }
    }
}

/// A coefficient as a reduced fraction of canonical texts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fraction {
    pub num: String,
    pub den: String,
}

impl Fraction {
    pub fn of<F: Coeff>(c: &F) -> Fraction {
        let (num, den) = c.text_pair();
        Fraction { num, den }
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == "1" {
            return f.write_str(&self.num);
        }
        let wrap = |s: &str| if s.contains(' ') { format!("({s})") } else { s.to_string() };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub label: String,
    pub coeff: Fraction,
}

/// Polynomials are their canonical text; tables list labels in decreasing
/// lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Payload {
    Polynomial(String),
    Scalar(Fraction),
    Table(Vec<Entry>),
}

impl Payload {
    pub fn polynomial<F: Coeff>(p: &ZPolynomial<F>) -> Payload {
        Payload::Polynomial(p.to_string())
    }

    pub fn table<'a, F: Coeff + 'a>(entries: impl IntoIterator<Item = (&'a Composition, &'a F)>) -> Payload {
        let mut v: Vec<_> = entries.into_iter().collect();
        v.sort_by(|a, b| b.0.cmp(a.0));
        Payload::Table(v.into_iter().map(|(l, c)| Entry { label: l.to_string(), coeff: Fraction::of(c) }).collect())
    }
}

/// Everything that identifies a result, in schema order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Header {
    pub schema: String,
    pub kind: Kind,
    pub n: usize,
    pub input: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    pub mode: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultDocument {
    #[serde(flatten)]
    pub header: Header,
    pub payload: Payload,
}

impl ResultDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    pub fn from_json(s: &str) -> serde_json::Result<ResultDocument> {
        serde_json::from_str(s)
    }

    /// The human-readable rendering used by `--format text`.
    pub fn to_text(&self) -> String {
        let h = &self.header;
        let mut out = format!("{} [{}] n={} mode={}", h.kind.name(), h.input.join(" ; "), h.n, h.mode);
        if let Some(r) = h.r {
            out += &format!(" r={r}");
        }
        if let Some(k) = h.k {
            out += &format!(" k={k}");
        }
        out.push('\n');
        match &self.payload {
            Payload::Polynomial(p) => out += &format!("{p}\n"),
            Payload::Scalar(c) => out += &format!("{c}\n"),
            Payload::Table(es) => {
                for e in es {
                    out += &format!("{}: {}\n", e.label, e.coeff);
                }
            }
        }
        out
    }
}
