//! Serialized forms of generated models: JSON (lossless, round-trips),
//! LaTeX `bmatrix` blocks and a plain-text listing.

use serde::{Deserialize, Serialize};

use crate::descent::{MinimalModel, RingTag};
use crate::error::{Error, Result};
use crate::exact_number::{CycElt, QuadCoord};
use crate::heisenberg::QuadForm;
use crate::linalg::{latex_matrix, ExactMatrix, Matrix, Ring};
use crate::weil::Series;

pub const SCHEMA_VERSION: u32 = 1;

/// A matrix entry: `{a, b}` for `a + b(1 + √εp)/2`, or the power-basis
/// coefficients of an element of Q(ζ_p) as `"num/den"` strings.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Quad { a: i64, b: i64 },
    Cyc(Vec<String>),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModelDoc {
    pub schema_version: u32,
    pub p: u32,
    pub c: u32,
    pub epsilon: i64,
    pub series: Series,
    pub ring: String,
    #[serde(rename = "S")]
    pub s: Vec<Vec<Entry>>,
    #[serde(rename = "T")]
    pub t: Vec<Vec<Entry>>,
}

fn quad_rows(m: &Matrix<QuadCoord>) -> Vec<Vec<Entry>> {
    m.to_rows().into_iter().map(|r| r.into_iter().map(|x| Entry::Quad { a: x.a, b: x.b }).collect()).collect()
}

fn cyc_rows(m: &ExactMatrix) -> Vec<Vec<Entry>> {
    m.to_rows()
        .into_iter()
        .map(|r| {
            r.into_iter()
                .map(|x| Entry::Cyc(x.coeffs().iter().map(crate::exact_number::format_rational).collect()))
                .collect()
        })
        .collect()
}

impl ModelDoc {
    pub fn from_minimal(m: &MinimalModel) -> Self {
        let p = m.q.p();
        ModelDoc {
            schema_version: SCHEMA_VERSION,
            p,
            c: m.q.c(),
            epsilon: m.q.epsilon(),
            series: Series::Principal,
            ring: m.ring.describe(p),
            s: quad_rows(&m.s),
            t: quad_rows(&m.t),
        }
    }

    pub fn from_cyclotomic(q: &QuadForm, series: Series, s: &ExactMatrix, t: &ExactMatrix, ring: RingTag) -> Self {
        ModelDoc {
            schema_version: SCHEMA_VERSION,
            p: q.p(),
            c: q.c(),
            epsilon: q.epsilon(),
            series,
            ring: ring.describe(q.p()),
            s: cyc_rows(s),
            t: cyc_rows(t),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("model documents always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: ModelDoc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if doc.schema_version != SCHEMA_VERSION {
            return Err(Error::Parse(format!("unsupported schema_version {}", doc.schema_version)));
        }
        QuadForm::new(doc.p as u64, doc.c as i64)?;
        Ok(doc)
    }

    pub fn form(&self) -> Result<QuadForm> {
        QuadForm::new(self.p as u64, self.c as i64)
    }

    fn decode(&self, rows: &[Vec<Entry>]) -> Result<ExactMatrix> {
        let p = self.p;
        let rows = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|e| match e {
                        Entry::Quad { a, b } => Ok(QuadCoord::new(p, *a, *b)?.to_cyc()),
                        Entry::Cyc(coeffs) => {
                            if coeffs.len() + 1 != p as usize {
                                return Err(Error::Parse(format!("expected {} coefficients", p - 1)));
                            }
                            let qs = coeffs
                                .iter()
                                .map(|s| crate::exact_number::parse_rational(s))
                                .collect::<Result<Vec<_>>>()?;
                            CycElt::from_coeffs(p, &qs)
                        }
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_rows(p, rows)
    }

    /// Generator matrices as elements of Q(ζ_p), whatever the entry encoding.
    pub fn matrices(&self) -> Result<(ExactMatrix, ExactMatrix)> {
        Ok((self.decode(&self.s)?, self.decode(&self.t)?))
    }

    /// The quadratic-integer matrices, if every entry is `{a, b}`.
    pub fn quadratic(&self) -> Option<(Matrix<QuadCoord>, Matrix<QuadCoord>)> {
        let conv = |rows: &[Vec<Entry>]| -> Option<Matrix<QuadCoord>> {
            let rows = rows
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|e| match e {
                            Entry::Quad { a, b } => Some(QuadCoord { a: *a, b: *b, p: self.p }),
                            Entry::Cyc(_) => None,
                        })
                        .collect::<Option<Vec<_>>>()
                })
                .collect::<Option<Vec<_>>>()?;
            Matrix::from_rows(self.p, rows).ok()
        };
        Some((conv(&self.s)?, conv(&self.t)?))
    }
}

/// `S' = \begin{bmatrix}…\end{bmatrix}` and likewise for T'.
pub fn minimal_latex(m: &MinimalModel) -> String {
    format!("S' = {}\n\nT' = {}\n", latex_matrix(&m.s, QuadCoord::to_latex), latex_matrix(&m.t, QuadCoord::to_latex))
}

pub fn cyclotomic_latex(s: &ExactMatrix, t: &ExactMatrix) -> String {
    format!("S = {}\n\nT = {}\n", s.to_latex(), t.to_latex())
}

fn text_matrix<R: Ring>(name: &str, m: &Matrix<R>) -> String {
    let mut out = format!("{name} =\n");
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(|x| x.to_string()).collect();
        out.push_str(&format!("  [ {} ]\n", row.join(", ")));
    }
    out
}

pub fn minimal_text(m: &MinimalModel) -> String {
    let p = m.q.p();
    format!(
        "p = {p}, c = {}, ring = {}\n{}{}",
        m.q.c(),
        m.ring.describe(p),
        text_matrix("S'", &m.s),
        text_matrix("T'", &m.t)
    )
}

pub fn cyclotomic_text(q: &QuadForm, series: Series, s: &ExactMatrix, t: &ExactMatrix, ring: RingTag) -> String {
    format!(
        "p = {}, c = {}, series = {series}, ring = {}\n{}{}",
        q.p(),
        q.c(),
        ring.describe(q.p()),
        text_matrix("S", s),
        text_matrix("T", t)
    )
}
