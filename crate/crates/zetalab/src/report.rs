//! Machine-readable check reports.
//!
//! JSON schema: {check, params, points: [{x, lhs, rhs, abs_err}],
//! max_abs_err, budget, runtime_ms}; complex values serialize as [re, im]
//! pairs. CSV exports format numbers with the shortest round-trip
//! representation so identical runs produce identical bytes.

use std::fmt::Write as _;

use serde::Serialize;

use crate::specfun::Cx;

#[derive(Debug, Clone, Copy, Serialize)]
#[serde(untagged)]
pub enum ReportValue {
    Real(f64),
    Complex([f64; 2]),
}

impl From<f64> for ReportValue {
    fn from(v: f64) -> Self {
        ReportValue::Real(v)
    }
}

impl From<Cx> for ReportValue {
    fn from(v: Cx) -> Self {
        ReportValue::Complex([v.re, v.im])
    }
}

impl ReportValue {
    pub fn re(&self) -> f64 {
        match self {
            ReportValue::Real(v) => *v,
            ReportValue::Complex([re, _]) => *re,
        }
    }

    pub fn im(&self) -> f64 {
        match self {
            ReportValue::Real(_) => 0.0,
            ReportValue::Complex([_, im]) => *im,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckPoint {
    pub x: ReportValue,
    pub lhs: ReportValue,
    pub rhs: ReportValue,
    pub abs_err: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityReport {
    pub check: String,
    pub params: serde_json::Value,
    pub points: Vec<CheckPoint>,
    pub max_abs_err: f64,
    pub budget: String,
    pub runtime_ms: u64,
}

impl IdentityReport {
    pub fn new(check: impl Into<String>) -> Self {
        IdentityReport {
            check: check.into(),
            params: serde_json::Value::Null,
            points: Vec::new(),
            max_abs_err: 0.0,
            budget: String::new(),
            runtime_ms: 0,
        }
    }

    pub fn with_params(mut self, params: serde_json::Value) -> Self {
        self.params = params;
        self
    }

    pub fn push(
        &mut self,
        x: impl Into<ReportValue>,
        lhs: impl Into<ReportValue>,
        rhs: impl Into<ReportValue>,
        abs_err: f64,
    ) {
        self.points.push(CheckPoint {
            x: x.into(),
            lhs: lhs.into(),
            rhs: rhs.into(),
            abs_err,
        });
        if abs_err > self.max_abs_err {
            self.max_abs_err = abs_err;
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }

    /// CSV of the check points with deterministic numeric formatting.
    pub fn points_csv(&self) -> String {
        let mut out = String::from("x_re,x_im,lhs_re,lhs_im,rhs_re,rhs_im,abs_err\n");
        for p in &self.points {
            writeln!(
                out,
                "{},{},{},{},{},{},{}",
                p.x.re(),
                p.x.im(),
                p.lhs.re(),
                p.lhs.im(),
                p.rhs.re(),
                p.rhs.im(),
                p.abs_err
            )
            .expect("string write");
        }
        out
    }
}

/// CSV of a zero-series trace: (block_index, T_n, partial_re, partial_im,
/// block_abs).
pub fn trace_csv(bounds: &[f64], partials: &[Cx], block_abs: &[f64]) -> String {
    let mut out = String::from("block_index,T_n,partial_re,partial_im,block_abs\n");
    for (i, (p, a)) in partials.iter().zip(block_abs).enumerate() {
        let t_n = bounds.get(i).copied().unwrap_or(f64::NAN);
        writeln!(out, "{},{},{},{},{}", i, t_n, p.re, p.im, a).expect("string write");
    }
    out
}

/// CSV of a zero table: (index, gamma, zeta_prime_re, zeta_prime_im).
pub fn zeros_csv(zeros: &crate::zeta::ZeroTable) -> String {
    let mut out = String::from("index,gamma,zeta_prime_re,zeta_prime_im\n");
    for z in &zeros.zeros {
        writeln!(
            out,
            "{},{},{},{}",
            z.index, z.gamma, z.zeta_prime.re, z.zeta_prime.im
        )
        .expect("string write");
    }
    out
}
