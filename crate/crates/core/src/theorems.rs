//! Executable checks. Each returns a [`Report`] with both sides rendered
//! canonically, the number of terms left in their difference and the
//! wall-clock time spent.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::qmatrix::{build_word, generator, mat_trace, t_zero, word_product, word_shift, Triangular, WordSpec};
use crate::qplane::{rho_closed_triangular, rho_matrix, rho_trace};
use crate::qscalar::{cheb, cyclo_reduce, qbinom, ChebKind, CycloContext};
use crate::qtensor::{poly_eval, TElement};
use crate::ring::Ring;
use crate::sl2q::tautological_point;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
}

impl Status {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn is_pass(self) -> bool {
        self == Status::Pass
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub check: String,
    pub params: BTreeMap<String, Value>,
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
    pub residual_terms: u64,
    pub elapsed_ms: u64,
}

impl Report {
    fn new(check: &str, params: &[(&str, Value)], residual_terms: usize, lhs: String, rhs: String, start: Instant) -> Self {
        Self {
            check: check.to_string(),
            params: params.iter().map(|(k, v)| ((*k).to_string(), v.clone())).collect(),
            status: Status::from_bool(residual_terms == 0),
            lhs,
            rhs,
            residual_terms: residual_terms as u64,
            elapsed_ms: start.elapsed().as_millis() as u64,
        }
    }

    /// Copy with `elapsed_ms` zeroed, for byte-stable comparisons.
    pub fn without_timing(&self) -> Self {
        Self {
            elapsed_ms: 0,
            ..self.clone()
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        writeln!(f, "{} {} [{}] ({} ms)", self.status, self.check, params.join(", "), self.elapsed_ms)?;
        writeln!(f, "  lhs: {}", self.lhs)?;
        writeln!(f, "  rhs: {}", self.rhs)?;
        write!(f, "  residual_terms: {}", self.residual_terms)
    }
}

fn plane_names(_: usize) -> (String, String) {
    ("X".to_string(), "Y".to_string())
}

/// `(X+Y)^n - X^n - Y^n` with `YX = qXY` and `q` a root of `Φ_m`.
/// The left side is the reduced difference and the right side is `0`.
pub fn check_frobenius(n: u32, m: u32) -> Result<Report> {
    let start = Instant::now();
    if n < 2 {
        return Err(Error::InvalidParameter(format!("n must be at least 2, got {n}")));
    }
    let ctx = CycloContext::new(m)?;
    let x = TElement::a(1, 0, Some(ctx.clone()));
    let y = TElement::b(1, 0, Some(ctx.clone()));
    let sum = x.add(&y).pow(n);
    let diff = sum.sub(&x.pow(n)).sub(&y.pow(n));
    let rhs = TElement::zero(1, Some(ctx));
    Ok(Report::new(
        "frobenius",
        &[("n", n.into()), ("m", m.into())],
        diff.len(),
        diff.render_with(&plane_names),
        rhs.render_with(&plane_names),
        start,
    ))
}

/// Trace of `ρ_n` at the tautological point against `S_n(a + d)`, both in
/// PBW normal form.
pub fn check_sn_trace(n: u32) -> Result<Report> {
    let start = Instant::now();
    let t = tautological_point();
    let lhs = rho_trace(&rho_matrix(n as usize, &t));
    let rhs = poly_eval(&cheb(n, ChebKind::Second), &t.e11.add(&t.e22));
    let residual = lhs.sub(&rhs);
    Ok(Report::new("sn-trace", &[("n", n.into())], residual.len(), lhs.render(), rhs.render(), start))
}

fn word_trace(spec: &WordSpec, ctx: Option<&CycloContext>) -> Result<(Vec<crate::Matrix2<TElement>>, TElement)> {
    let word = build_word(spec, ctx);
    let trace = mat_trace(&word_product(&word)?);
    Ok((word, trace))
}

/// `T_n(Trace A_1⋯A_k)` against `Trace A_1^{(n)}⋯A_k^{(n)}` with `q²` a
/// primitive `n`-th root of unity, `q` a root of `Φ_m`.
pub fn check_main(spec: &WordSpec, n: u32, m: u32) -> Result<Report> {
    let ctx = CycloContext::for_q_squared_order(n, m)?;
    check_main_in(spec, n, &ctx)
}

/// [`check_main`] without validating `(n, m)`. Invalid pairs are expected to
/// produce a nonzero residual in general.
pub fn check_main_in(spec: &WordSpec, n: u32, ctx: &CycloContext) -> Result<Report> {
    let start = Instant::now();
    if n < 1 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    let (word, trace) = word_trace(spec, Some(ctx))?;
    let lhs = poly_eval(&cheb(n, ChebKind::First), &trace);
    let rhs = mat_trace(&word_product(&word_shift(&word, n)?)?);
    let residual = lhs.sub(&rhs);
    Ok(Report::new(
        "main",
        &[("word", spec.to_string().into()), ("n", n.into()), ("m", ctx.m().into())],
        residual.len(),
        lhs.render(),
        rhs.render(),
        start,
    ))
}

/// Number of monomials in `T_n(Trace)` at generic `q`, counted with
/// multiplicity, against `T_n(t₀)`.
pub fn check_count(spec: &WordSpec, n: u32) -> Result<Report> {
    let start = Instant::now();
    if n < 1 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    let (_, trace) = word_trace(spec, None)?;
    let tn = cheb(n, ChebKind::First);
    let lhs = poly_eval(&tn, &trace).eval_counting()?;
    let rhs: BigInt = tn.eval_int(&t_zero(spec));
    Ok(Report::new(
        "count",
        &[("word", spec.to_string().into()), ("n", n.into())],
        usize::from(lhs != rhs),
        lhs.to_string(),
        rhs.to_string(),
        start,
    ))
}

/// Sign check of `T_n(Trace)` and `S_n(Trace)` at generic `q`. The two sides
/// are the terms with a negative coefficient in each, so a pass shows `0`
/// on both.
pub fn check_positivity(spec: &WordSpec, n: u32) -> Result<Report> {
    let start = Instant::now();
    if n < 1 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    let (_, trace) = word_trace(spec, None)?;
    let tn = poly_eval(&cheb(n, ChebKind::First), &trace).negative_part();
    let sn = poly_eval(&cheb(n, ChebKind::Second), &trace).negative_part();
    Ok(Report::new(
        "positivity",
        &[("word", spec.to_string().into()), ("n", n.into())],
        tn.len() + sn.len(),
        tn.render(),
        sn.render(),
        start,
    ))
}

/// Closed-form `ρ_n` entries of a single triangular generator against direct
/// substitution.
pub fn check_rho_oracle(kind: Triangular, n: u32) -> Result<Report> {
    let start = Instant::now();
    let g = generator(kind, 1, 0, None);
    let n = n as usize;
    let closed = rho_closed_triangular(n, &g)?;
    let direct = rho_matrix(n, &g);
    let residual: usize = (0..=n)
        .flat_map(|v| (0..=n).map(move |u| (v, u)))
        .map(|(v, u)| closed.entry(v, u).sub(direct.entry(v, u)).len())
        .sum();
    Ok(Report::new(
        "rho-oracle",
        &[("gen", kind.letter().to_string().into()), ("n", n.into())],
        residual,
        closed.render(),
        direct.render(),
        start,
    ))
}

/// `[n choose k]_q` for `0 < k < n` reduced modulo `Φ_n`.
pub fn check_qbinom_vanishing(n: u32) -> Result<Report> {
    let start = Instant::now();
    if n < 2 {
        return Err(Error::InvalidParameter(format!("n must be at least 2, got {n}")));
    }
    let ctx = CycloContext::new(n)?;
    let reduced = (1..n)
        .map(|k| Ok(cyclo_reduce(&qbinom(n, k, 1)?, &ctx)))
        .collect::<Result<Vec<_>>>()?;
    let residual = reduced.iter().map(|x| x.len()).sum();
    let lhs: Vec<String> = reduced.iter().map(ToString::to_string).collect();
    let rhs = vec!["0"; reduced.len()];
    Ok(Report::new(
        "qbinom",
        &[("n", n.into())],
        residual,
        format!("[{}]", lhs.join(", ")),
        format!("[{}]", rhs.join(", ")),
        start,
    ))
}
