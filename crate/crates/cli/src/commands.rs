//! The `gw`, `moduli` and `baseline` subcommands.

use clap::ValueEnum;
use ktgw_core::arith::{count_sublattices_hnf, sigma};
use ktgw_core::geometry::{cr_residual, symplectic_area};
use ktgw_core::gwcount::{gw_closed_form, gw_enumerated, moduli_component};
use ktgw_core::homs::enumerate_fully_reduced;
use ktgw_core::{Error, GwResult, HomologyClass, ModuliComponent};
use rayon::prelude::*;

use crate::output::{Document, Table, Value};

/// Inputs beyond this magnitude are refused to keep all products in `i64`.
pub const INPUT_BOUND: i64 = 1_000_000;

/// Invalid input; maps to exit code 2. Cross-check failures are reported
/// through [`Report::ok`] instead, since their data is still printed.
#[derive(Debug)]
pub enum Failure {
    Invalid(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

/// A document plus whether every internal cross-check held.
pub struct Report {
    pub doc: Document,
    pub ok: bool,
    pub first_failure: Option<String>,
}

fn bounded(name: &str, v: i64) -> Result<i64, Failure> {
    if v.abs() > INPUT_BOUND {
        return Err(Failure::Invalid(format!(
            "{name} = {v} exceeds the supported bound {INPUT_BOUND}"
        )));
    }
    Ok(v)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GwMethod {
    Closed,
    Enumerate,
    Both,
}

pub const GW_COLUMNS: [&str; 11] = [
    "method", "a13", "a23", "a14", "a24", "m", "n", "e134", "e234", "e124", "agrees",
];

fn gw_row(r: &GwResult, agrees: Value) -> Vec<Value> {
    let a = r.input_class;
    vec![
        r.method.to_string().into(),
        a.a13.into(),
        a.a23.into(),
        a.a14.into(),
        a.a24.into(),
        r.m.into(),
        r.n.into(),
        (&r.gw.e134).into(),
        (&r.gw.e234).into(),
        (&r.gw.e124).into(),
        agrees,
    ]
}

pub fn gw(a: HomologyClass, method: GwMethod) -> Result<Report, Failure> {
    for (name, v) in [("A13", a.a13), ("A23", a.a23), ("A14", a.a14), ("A24", a.a24)] {
        bounded(name, v)?;
    }
    if !a.plucker_holds() {
        return Err(Error::Plucker(a).into());
    }
    let closed = matches!(method, GwMethod::Closed | GwMethod::Both)
        .then(|| gw_closed_form(&a))
        .transpose()?;
    let counted = matches!(method, GwMethod::Enumerate | GwMethod::Both)
        .then(|| gw_enumerated(&a))
        .transpose()?;
    let agrees = match (&closed, &counted) {
        (Some(c), Some(e)) => Some(c.gw == e.gw),
        _ => None,
    };
    let flag = agrees.map_or(Value::Null, Value::Bool);
    let mut table = Table::new(GW_COLUMNS.to_vec());
    for r in closed.iter().chain(counted.iter()) {
        table.push(gw_row(r, flag.clone()));
    }
    let ok = agrees != Some(false);
    Ok(Report {
        doc: Document {
            command: "gw",
            args: vec![
                ("class", a.to_string()),
                ("method", format!("{method:?}").to_lowercase()),
            ],
            table,
        },
        ok,
        first_failure: (!ok).then(|| format!("closed form and enumeration disagree on {a}")),
    })
}

pub const MODULI_COLUMNS: [&str; 27] = [
    "m", "n", "d", "k", "l", "aut_k", "aut_l", "dp_h1", "dp_h2", "dp_h3", "dp_h4", "dq_h1",
    "dq_h2", "dq_h3", "dq_h4", "tau1", "tau2", "theta", "c0_n2", "lambda_period", "aut_size",
    "e134", "e234", "e124", "cr_residual", "area", "regular",
];

fn moduli_row(c: &ModuliComponent, residual: f64, area: f64) -> Vec<Value> {
    let s = &c.solution;
    let mut row: Vec<Value> = vec![
        c.m.into(),
        c.n.into(),
        c.d.into(),
        c.k.into(),
        c.l.into(),
        c.aut_k.into(),
        c.aut_l.into(),
    ];
    row.extend((1..=4).map(|i| Value::from(c.hom.p(i))));
    row.extend((1..=4).map(|i| Value::from(c.hom.q(i))));
    row.extend([
        s.modulus.tau1.into(),
        s.modulus.tau2.into(),
        s.psi.theta().into(),
        (&s.c0.x).into(),
        (&s.lambda_period).into(),
        c.aut_size.into(),
        (&c.eval_class.e134).into(),
        (&c.eval_class.e234).into(),
        (&c.eval_class.e124).into(),
        residual.into(),
        area.into(),
        (residual < 1e-9 && area > 0.0).into(),
    ]);
    row
}

pub fn moduli(m: i64, n: i64) -> Result<Report, Failure> {
    bounded("m", m)?;
    bounded("n", n)?;
    if m == 0 {
        return Err(Failure::Invalid(
            "m = 0: the moduli space is obstructed and such classes do not contribute".into(),
        ));
    }
    let labels = enumerate_fully_reduced(m, n)?;
    let rows: Vec<(Vec<Value>, bool)> = labels
        .par_iter()
        .map(|e| -> Result<_, Error> {
            let c: ModuliComponent = moduli_component(m, n, e.d, e.k, e.l)?;
            let residual = cr_residual(&c.solution, 8)?;
            let area = symplectic_area(&HomologyClass::normal(m, n), &c.solution.psi);
            let ok = residual < 1e-9 && area > 0.0;
            Ok((moduli_row(&c, residual, area), ok))
        })
        .collect::<Result<_, _>>()?;
    let mut table = Table::new(MODULI_COLUMNS.to_vec());
    let mut first_failure = None;
    for (i, (row, ok)) in rows.into_iter().enumerate() {
        if !ok && first_failure.is_none() {
            let e = &labels[i];
            first_failure = Some(format!(
                "component (d, k, l) = ({}, {}, {}) fails the CR or area check",
                e.d, e.k, e.l
            ));
        }
        table.push(row);
    }
    Ok(Report {
        doc: Document {
            command: "moduli",
            args: vec![("m", m.to_string()), ("n", n.to_string())],
            table,
        },
        ok: first_failure.is_none(),
        first_failure,
    })
}

pub const BASELINE_COLUMNS: [&str; 4] = ["l", "count_hnf", "sigma1", "equal"];

pub fn baseline(lmax: i64) -> Result<Report, Failure> {
    if lmax < 1 {
        return Err(Error::NonPositive {
            what: "ℓmax",
            value: lmax,
        }
        .into());
    }
    bounded("lmax", lmax)?;
    let rows: Vec<(i64, i64, i64)> = (1..=lmax)
        .into_par_iter()
        .map(|l| Ok((l, count_sublattices_hnf(l)?, sigma(1, l)?)))
        .collect::<Result<_, Error>>()?;
    let mut table = Table::new(BASELINE_COLUMNS.to_vec());
    let mut first_failure = None;
    for (l, count, s1) in rows {
        if count != s1 && first_failure.is_none() {
            first_failure = Some(format!("ℓ = {l}: {count} sublattices but σ₁ = {s1}"));
        }
        table.push(vec![l.into(), count.into(), s1.into(), (count == s1).into()]);
    }
    Ok(Report {
        doc: Document {
            command: "baseline",
            args: vec![("lmax", lmax.to_string())],
            table,
        },
        ok: first_failure.is_none(),
        first_failure,
    })
}
