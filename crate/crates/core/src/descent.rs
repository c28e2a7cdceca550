//! Vandermonde change of basis for the principal-series model and the exact
//! checks that the conjugated generators have entries in Z[ζ_p], and in fact
//! in the ring of integers Z[(1 + √εp)/2] of the quadratic subfield.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_number::{to_quadratic, CycElt, GaloisElt, QuadCoord};
use crate::heisenberg::QuadForm;
use crate::linalg::{ExactMatrix, Matrix, Polynomial};
use crate::report::{Check, Report, Witness};
use crate::weil::{restrict_odd, weil_full, weil_model, Series, WeilModel};

/// Rings in the chain Z ⊂ Z[ω] ⊂ Z[ζ_p] ⊂ Z[1/p, ζ_p], plus a catch-all.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RingTag {
    Integers,
    QuadraticIntegers,
    CyclotomicIntegers,
    CyclotomicIntegersInvP,
    Other,
}

impl RingTag {
    /// Human-readable name such as `Z[(1+sqrt(-7))/2]`.
    pub fn describe(&self, p: u32) -> String {
        let eps_p = crate::exact_number::eps_p(p);
        match self {
            RingTag::Integers => "Z".to_string(),
            RingTag::QuadraticIntegers => format!("Z[(1+sqrt({eps_p}))/2]"),
            RingTag::CyclotomicIntegers => format!("Z[zeta_{p}]"),
            RingTag::CyclotomicIntegersInvP => format!("Z[1/{p}, zeta_{p}]"),
            RingTag::Other => "other".to_string(),
        }
    }
}

impl fmt::Display for RingTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RingTag::Integers => "integers",
            RingTag::QuadraticIntegers => "quadratic-integers",
            RingTag::CyclotomicIntegers => "cyclotomic-integers",
            RingTag::CyclotomicIntegersInvP => "cyclotomic-integers-inv-p",
            RingTag::Other => "other",
        })
    }
}

/// The smallest ring of the chain that contains every entry, with the first
/// entry that keeps the answer from being smaller.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingVerdict {
    pub ring: RingTag,
    pub witness: Option<Witness>,
}

fn is_power_of(n: &BigInt, p: u32) -> bool {
    let p = BigInt::from(p);
    let mut n = n.clone();
    while !n.is_one() {
        let (q, r) = n.div_rem(&p);
        if r != BigInt::from(0) {
            return false;
        }
        n = q;
    }
    true
}

/// Smallest ring of the chain containing `x`.
pub fn classify(x: &CycElt) -> RingTag {
    if x.as_rational().is_some_and(|q| q.is_integer()) {
        RingTag::Integers
    } else if to_quadratic(x).is_ok() {
        RingTag::QuadraticIntegers
    } else if x.is_integral() {
        RingTag::CyclotomicIntegers
    } else if is_power_of(x.denominator(), x.p()) {
        RingTag::CyclotomicIntegersInvP
    } else {
        RingTag::Other
    }
}

pub fn ring_of_definition(m: &ExactMatrix) -> RingVerdict {
    ring_of_definition_named("M", m)
}

pub fn ring_of_definition_named(name: &str, m: &ExactMatrix) -> RingVerdict {
    let mut best = RingTag::Integers;
    let mut witness = None;
    for (i, j, e) in m.iter_indexed() {
        let tag = classify(e);
        if tag > best {
            best = tag;
            witness = Some(Witness { matrix: name.to_string(), row: i, col: j, value: e.to_string() });
        }
    }
    RingVerdict { ring: best, witness }
}

/// Smallest ring of the chain containing all entries of every matrix.
pub fn joint_ring(named: &[(&str, &ExactMatrix)]) -> RingVerdict {
    named
        .iter()
        .map(|(n, m)| ring_of_definition_named(n, m))
        .max_by_key(|v| v.ring)
        .unwrap_or(RingVerdict { ring: RingTag::Integers, witness: None })
}

/// Rows `(1, θ_j, θ_j², …, θ_j^r)` for `θ_j = ζ^{c·j²}`, `j = 0..=r`.
pub fn vandermonde(q: &QuadForm) -> ExactMatrix {
    let n = q.r() + 1;
    vandermonde_of(q.p(), &(0..n as i64).map(|j| q.q_exp(j) as i64).collect::<Vec<_>>())
}

fn vandermonde_of(p: u32, exponents: &[i64]) -> ExactMatrix {
    let n = exponents.len();
    Matrix::from_fn(p, n, n, |j, k| CycElt::zeta_pow(p, exponents[j] * k as i64))
}

fn conjugate(s: &ExactMatrix, t: &ExactMatrix, v: &ExactMatrix) -> Result<(ExactMatrix, ExactMatrix)> {
    let v_inv = v.inverse()?;
    let s_prime = v_inv.mul(s)?.mul(v)?;
    let t_prime = v_inv.mul(t)?.mul(v)?;
    Ok((s_prime, t_prime))
}

/// `(V⁻¹SV, V⁻¹TV)` for a principal-series model.
pub fn conjugate_model(m: &WeilModel, v: &ExactMatrix) -> Result<(ExactMatrix, ExactMatrix)> {
    if m.series != Series::Principal {
        return Err(Error::WrongSeries { expected: Series::Principal.to_string(), found: m.series.to_string() });
    }
    conjugate(&m.s, &m.t, v)
}

/// The even model together with its Vandermonde conjugate.
#[derive(Clone, Debug)]
pub struct ConjugatedModel {
    pub even: WeilModel,
    pub v: ExactMatrix,
    pub s_prime: ExactMatrix,
    pub t_prime: ExactMatrix,
}

pub fn conjugated_model(q: &QuadForm) -> Result<ConjugatedModel> {
    let even = weil_model(q, Series::Principal)?;
    let v = vandermonde(q);
    let (s_prime, t_prime) = conjugate_model(&even, &v)?;
    Ok(ConjugatedModel { even, v, s_prime, t_prime })
}

/// Principal-series model with entries in Z[(1 + √εp)/2].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MinimalModel {
    pub q: QuadForm,
    #[serde(rename = "S")]
    pub s: Matrix<QuadCoord>,
    #[serde(rename = "T")]
    pub t: Matrix<QuadCoord>,
    pub ring: RingTag,
}

impl MinimalModel {
    pub fn from_conjugated(w: &ConjugatedModel) -> Result<Self> {
        let convert = |name: &str, m: &ExactMatrix| -> Result<Matrix<QuadCoord>> {
            for (i, j, e) in m.iter_indexed() {
                if let Err(why) = to_quadratic(e) {
                    return Err(Error::Consistency(format!("{name}({i},{j}) = {e} is {why}")));
                }
            }
            m.try_map(|e| to_quadratic(e).map_err(|why| Error::Consistency(why.to_string())))
        };
        let s = convert("S'", &w.s_prime)?;
        let t = convert("T'", &w.t_prime)?;
        let ring = joint_ring(&[("S'", &w.s_prime), ("T'", &w.t_prime)]).ring;
        Ok(MinimalModel { q: w.even.q, s, t, ring })
    }

    pub fn dim(&self) -> usize {
        self.s.rows()
    }

    pub fn to_exact(&self) -> (ExactMatrix, ExactMatrix) {
        (self.s.map(QuadCoord::to_cyc), self.t.map(QuadCoord::to_cyc))
    }
}

pub fn minimal_model(q: &QuadForm) -> Result<MinimalModel> {
    MinimalModel::from_conjugated(&conjugated_model(q)?)
}

/// Records `τ(V_Q) = P·V_Q` for the row permutation `P`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaloisCertificate {
    /// `perm[i] = j` when row `i` of τ(V_Q) is row `j` of V_Q.
    pub perm: Vec<usize>,
    pub order: usize,
    /// Cycle lengths of `perm`, longest first.
    pub cycle_type: Vec<usize>,
}

impl GaloisCertificate {
    pub fn matrix(&self, p: u32) -> ExactMatrix {
        Matrix::permutation(p, &self.perm)
    }
}

fn cycle_type(perm: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; perm.len()];
    let mut lens = Vec::new();
    for start in 0..perm.len() {
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        if len > 0 {
            lens.push(len);
        }
    }
    lens.sort_unstable_by(|a, b| b.cmp(a));
    lens
}

pub fn galois_perm(q: &QuadForm) -> Result<GaloisCertificate> {
    let p = q.p();
    let tau = GaloisElt::tau(p);
    let v = vandermonde(q);
    let tv = v.galois(&tau)?;
    let ratio = tv.mul(&v.inverse()?)?;
    let perm = ratio
        .detect_permutation()
        .ok_or_else(|| Error::Consistency("tau(V)·V^-1 is not a permutation matrix".into()))?;
    if perm[0] != 0 {
        return Err(Error::Consistency("tau permutation moves the first row".into()));
    }
    if Matrix::permutation(p, &perm).mul(&v)? != tv {
        return Err(Error::Consistency("tau(V) != P·V".into()));
    }
    let cycles = cycle_type(&perm);
    let order = cycles.iter().fold(1usize, |acc, &l| acc.lcm(&l));
    Ok(GaloisCertificate { perm, order, cycle_type: cycles })
}

fn equality_check(name: &str, lhs: &ExactMatrix, rhs: &ExactMatrix) -> Check {
    let witness = lhs.first_difference(rhs).map(|(i, j)| Witness {
        matrix: name.to_string(),
        row: i,
        col: j,
        value: format!("{} vs {}", lhs.get(i, j), rhs.get(i, j)),
    });
    Check::from_bool(name, witness.is_none()).with_witness(witness)
}

/// Checks `P·S·P⁻¹ = τ(S)` and `P·T·P⁻¹ = τ(T)` on the principal-series
/// generators, which determines `ξ^τ(g) = P·ξ(g)·P⁻¹` on all of SL₂(F_p).
pub fn verify_theorem2(m: &WeilModel, cert: &GaloisCertificate) -> Result<Report> {
    if m.series != Series::Principal {
        return Err(Error::WrongSeries { expected: Series::Principal.to_string(), found: m.series.to_string() });
    }
    verify_galois_conjugation(m, &cert.matrix(m.q.p()))
}

/// As [`verify_theorem2`] with an arbitrary candidate `P` (invertible).
pub fn verify_galois_conjugation(m: &WeilModel, perm: &ExactMatrix) -> Result<Report> {
    let tau = GaloisElt::tau(m.q.p());
    let perm_inv = perm.inverse()?;
    let mut report = Report::new();
    for (name, x) in [("thm2-S", &m.s), ("thm2-T", &m.t)] {
        let lhs = perm.mul(x)?.mul(&perm_inv)?;
        report.push(equality_check(name, &lhs, &x.galois(&tau)?));
    }
    Ok(report)
}

/// Every entry of every matrix has integer power-basis coefficients.
pub fn verify_integrality(named: &[(&str, &ExactMatrix)]) -> Report {
    let mut report = Report::new();
    for (name, m) in named {
        let bad = m.iter_indexed().find(|(_, _, e)| !e.is_integral());
        let witness = bad.map(|(i, j, e)| Witness { matrix: name.to_string(), row: i, col: j, value: e.to_string() });
        report.push(Check::from_bool(format!("wang-integrality-{name}"), witness.is_none()).with_witness(witness));
    }
    report
}

/// Ring of definition of each matrix is Z[ω] (or smaller) and τ fixes every
/// entry.
pub fn verify_minimality(named: &[(&str, &ExactMatrix)]) -> Result<Report> {
    let mut report = Report::new();
    for (name, m) in named {
        let verdict = ring_of_definition_named(name, m);
        let ok = verdict.ring <= RingTag::QuadraticIntegers;
        report.push(
            Check::from_bool(format!("minimality-{name}"), ok)
                .with_detail(verdict.ring.describe(m.p()))
                .with_witness(if ok { None } else { verdict.witness }),
        );
        let tau = GaloisElt::tau(m.p());
        report.push(equality_check(&format!("tau-fixed-{name}"), &m.galois(&tau)?, m));
    }
    Ok(report)
}

/// `char_poly(T') = ∏_{j=0}^{r} (x - θ_j)`, its coefficients lie in Z[ω], and
/// `T'` is the companion matrix of that polynomial.
pub fn verify_charpoly_factorization(q: &QuadForm, t_prime: &ExactMatrix) -> Result<Report> {
    let p = q.p();
    let n = q.r() + 1;
    if (t_prime.rows(), t_prime.cols()) != (n, n) {
        return Err(Error::ShapeMismatch(format!("T' must be {n}x{n}")));
    }
    let thetas: Vec<CycElt> = (0..n as i64).map(|j| q.theta(j)).collect();
    let poly = t_prime.char_poly()?;
    let expected = Polynomial::from_roots(p, &thetas);
    let mut report = Report::new();
    report.push(Check::from_bool("charpoly-roots", poly == expected));

    let bad = poly.coeffs().iter().enumerate().find(|(_, c)| to_quadratic(c).is_err());
    report.push(Check::from_bool("charpoly-quadratic", bad.is_none()).with_witness(bad.map(|(i, c)| Witness {
        matrix: "m(x)".into(),
        row: i,
        col: 0,
        value: c.to_string(),
    })));

    let companion = Matrix::from_fn(p, n, n, |i, j| {
        if j == n - 1 {
            -poly.coeffs().get(i).cloned().unwrap_or_else(|| CycElt::zero(p))
        } else if i == j + 1 {
            CycElt::one(p)
        } else {
            CycElt::zero(p)
        }
    });
    report.push(equality_check("charpoly-companion", t_prime, &companion));
    Ok(report)
}

/// Conjugates the cuspidal model by the Vandermonde matrix of its own
/// T-eigenvalues and reports the observed ring. Nothing is asserted.
pub fn explore_cuspidal(q: &QuadForm) -> Result<(RingVerdict, RingVerdict)> {
    let odd = restrict_odd(&weil_full(q))?;
    let exps: Vec<i64> = (1..=q.r() as i64).map(|j| q.q_exp(j) as i64).collect();
    let v = vandermonde_of(q.p(), &exps);
    let (s, t) = conjugate(&odd.s, &odd.t, &v)?;
    Ok((ring_of_definition_named("S'", &s), ring_of_definition_named("T'", &t)))
}
