//! Generator matrices of the Weil representation ρ_Q and of its even
//! (principal series) and odd (cuspidal) constituents.
//!
//! The full model uses `S = g_Q⁻¹·[ζ^{-B(j,k)}]` and `T = diag(ζ^{Q(j)})` on
//! the delta basis δ₀, …, δ_{p-1}, with `g_Q = Σ_x ζ^{c·x²}`. The sign in the
//! exponent of S is the one for which `S² = (ST)³` holds with this T; the
//! even restriction is the same for either sign.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_number::CycElt;
use crate::heisenberg::QuadForm;
use crate::linalg::{ExactMatrix, Matrix, Ring};
use crate::report::{Check, Report, Witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Series {
    Full,
    Principal,
    Cuspidal,
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Series::Full => "full",
            Series::Principal => "principal",
            Series::Cuspidal => "cuspidal",
        })
    }
}

impl std::str::FromStr for Series {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "full" => Ok(Series::Full),
            "principal" => Ok(Series::Principal),
            "cuspidal" => Ok(Series::Cuspidal),
            other => Err(Error::Parse(format!("unknown series {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WeilModel {
    pub q: QuadForm,
    pub series: Series,
    #[serde(rename = "S")]
    pub s: ExactMatrix,
    #[serde(rename = "T")]
    pub t: ExactMatrix,
}

impl WeilModel {
    pub fn dim(&self) -> usize {
        self.s.rows()
    }

    pub fn check_relations(&self) -> Result<Report> {
        check_relations(&self.s, &self.t)
    }

    fn require(&self, series: Series) -> Result<()> {
        if self.series == series {
            Ok(())
        } else {
            Err(Error::WrongSeries { expected: series.to_string(), found: self.series.to_string() })
        }
    }
}

pub fn weil_full(q: &QuadForm) -> WeilModel {
    let p = q.p();
    let n = p as usize;
    let g_inv = q.gauss_sum().inv().expect("Gauss sums are nonzero");
    let s = Matrix::from_fn(p, n, n, |j, k| &g_inv * &CycElt::zeta_pow(p, -(q.b_exp(j as i64, k as i64) as i64)));
    let t = Matrix::diagonal(p, (0..n as i64).map(|j| q.theta(j)).collect());
    WeilModel { q: *q, series: Series::Full, s, t }
}

/// Restriction to even functions in the basis δ₀, δ₁ + δ_{p-1}, …,
/// δ_r + δ_{r+1}.
pub fn restrict_even(m: &WeilModel) -> Result<WeilModel> {
    m.require(Series::Full)?;
    let q = m.q;
    let p = q.p();
    let n = q.r() + 1;
    let g_inv = q.gauss_sum().inv()?;
    let two_g_inv = g_inv.scale_int(2);
    let s = Matrix::from_fn(p, n, n, |j, k| match (j, k) {
        (_, 0) => g_inv.clone(),
        (0, _) => two_g_inv.clone(),
        _ => {
            let e = q.b_exp(j as i64, k as i64) as i64;
            &g_inv * &(&CycElt::zeta_pow(p, -e) + &CycElt::zeta_pow(p, e))
        }
    });
    let t = Matrix::diagonal(p, (0..n as i64).map(|j| q.theta(j)).collect());
    Ok(WeilModel { q, series: Series::Principal, s, t })
}

/// Restriction to odd functions in the basis δ₁ - δ_{p-1}, …, δ_r - δ_{r+1}.
pub fn restrict_odd(m: &WeilModel) -> Result<WeilModel> {
    m.require(Series::Full)?;
    let q = m.q;
    let p = q.p();
    let n = q.r();
    let g_inv = q.gauss_sum().inv()?;
    let s = Matrix::from_fn(p, n, n, |j, k| {
        let e = q.b_exp(j as i64 + 1, k as i64 + 1) as i64;
        &g_inv * &(&CycElt::zeta_pow(p, -e) - &CycElt::zeta_pow(p, e))
    });
    let t = Matrix::diagonal(p, (1..=n as i64).map(|j| q.theta(j)).collect());
    Ok(WeilModel { q, series: Series::Cuspidal, s, t })
}

/// Builds the model for `series` directly from the form.
pub fn weil_model(q: &QuadForm, series: Series) -> Result<WeilModel> {
    let full = weil_full(q);
    match series {
        Series::Full => Ok(full),
        Series::Principal => restrict_even(&full),
        Series::Cuspidal => restrict_odd(&full),
    }
}

fn relation_check<R: Ring>(name: &str, lhs: &Matrix<R>, rhs: &Matrix<R>) -> Check {
    let witness = lhs.first_difference(rhs).map(|(i, j)| Witness {
        matrix: name.to_string(),
        row: i,
        col: j,
        value: format!("{} vs {}", lhs.get(i, j), rhs.get(i, j)),
    });
    Check::from_bool(name, witness.is_none()).with_witness(witness)
}

/// Checks the SL₂(F_p) presentation relations `S⁴ = I`, `S² = (ST)³`,
/// `T^p = I`, and that `S²` (the image of -I) commutes with `T`.
pub fn check_relations<R: Ring>(s: &Matrix<R>, t: &Matrix<R>) -> Result<Report> {
    if !s.is_square() || (s.rows(), s.cols()) != (t.rows(), t.cols()) {
        return Err(Error::ShapeMismatch("S and T must be square of equal size".into()));
    }
    let p = s.p();
    let n = s.rows();
    let id = Matrix::<R>::identity(p, n);
    let s2 = s.mul(s)?;
    let st3 = s.mul(t)?.pow(3)?;
    let mut report = Report::new();
    report.push(relation_check("S^4=I", &s2.mul(&s2)?, &id));
    report.push(relation_check("S^2=(ST)^3", &s2, &st3));
    report.push(relation_check("T^p=I", &t.pow(p as u64)?, &id));
    report.push(relation_check("S^2T=TS^2", &s2.mul(t)?, &t.mul(&s2)?));
    Ok(report)
}
