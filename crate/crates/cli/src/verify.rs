//! Verification sweeps behind `ktgw verify`.

use clap::ValueEnum;
use ktgw_core::arith::{
    cesaro_identity_check, count_sublattices_hnf, dagger_closed_form, dagger_sum, divisors, gcd,
    sigma,
};
use ktgw_core::geometry::{cr_residual, eval_class_integrate, symplectic_area};
use ktgw_core::gwcount::{
    aut_size_formula, aut_size_smith, component_eval_class, gw_closed_form, gw_enumerated,
    aut_labels, moduli_component,
};
use ktgw_core::homs::enumerate_fully_reduced;
use ktgw_core::{HomologyClass, ModuliComponent, Rational};
use rayon::prelude::*;

use crate::commands::{Failure, Report};
use crate::output::{Document, Table};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Identities,
    Oracle,
    Geometry,
    All,
}

impl Suite {
    pub fn default_max(self) -> i64 {
        match self {
            Suite::Identities => 200,
            Suite::Oracle => 8,
            Suite::Geometry => 4,
            Suite::All => 0,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Suite::Identities => "identities",
            Suite::Oracle => "oracle",
            Suite::Geometry => "geometry",
            Suite::All => "all",
        }
    }
}

pub struct Check {
    pub suite: &'static str,
    pub name: &'static str,
    pub passed: u64,
    pub failed: u64,
    pub first_failure: Option<String>,
}

/// Runs `f` on every case in parallel; `Some(msg)` marks a failure. The
/// reported counterexample is the first failing case in input order.
fn check<T, F>(suite: &'static str, name: &'static str, cases: Vec<T>, f: F) -> Check
where
    T: Sync,
    F: Fn(&T) -> Option<String> + Sync,
{
    let outcomes: Vec<Option<String>> = cases.par_iter().map(&f).collect();
    let failed = outcomes.iter().filter(|o| o.is_some()).count() as u64;
    Check {
        suite,
        name,
        passed: outcomes.len() as u64 - failed,
        failed,
        first_failure: outcomes.into_iter().flatten().next(),
    }
}

fn nonzero_range(max: i64) -> impl Iterator<Item = i64> {
    (-max..=max).filter(|&m| m != 0)
}

fn mn_pairs(max: i64) -> Vec<(i64, i64)> {
    nonzero_range(max)
        .flat_map(|m| (-max..=max).map(move |n| (m, n)))
        .collect()
}

fn identities(max: i64) -> Vec<Check> {
    const S: &str = "identities";
    let ns: Vec<i64> = (1..=max).collect();
    let cesaro = |name, f: fn(i64) -> i64| {
        check(S, name, ns.clone(), move |&n| match cesaro_identity_check(f, n) {
            Ok(c) if c.equal => None,
            Ok(c) => Some(format!("n = {n}: {} ≠ {}", c.lhs, c.rhs)),
            Err(e) => Some(format!("n = {n}: {e}")),
        })
    };
    vec![
        check(S, "dagger_sum_closed_form", mn_pairs(max), |&(m, n)| {
            match (dagger_sum(m, n), dagger_closed_form(m, n)) {
                (Ok(a), Ok(b)) if a == b => None,
                (a, b) => Some(format!("(m, n) = ({m}, {n}): {a:?} vs {b:?}")),
            }
        }),
        cesaro("cesaro_one", |_| 1),
        cesaro("cesaro_id", |x| x),
        cesaro("cesaro_square", |x| x * x),
        check(S, "sublattice_count", ns.clone(), |&l| {
            match (count_sublattices_hnf(l), sigma(1, l)) {
                (Ok(a), Ok(b)) if a == b => None,
                (a, b) => Some(format!("ℓ = {l}: {a:?} vs {b:?}")),
            }
        }),
    ]
}

fn torus_classes(max: i64) -> Vec<HomologyClass> {
    let mut out = Vec::new();
    for m in nonzero_range(max) {
        for n in -max..=max {
            for a in -3i64..=3 {
                for b in -3i64..=3 {
                    if gcd(a, b) == 1 {
                        out.push(HomologyClass::new(m * a, m * b, n * a, n * b));
                    }
                }
            }
        }
    }
    out
}

fn oracle(max: i64) -> Vec<Check> {
    const S: &str = "oracle";
    let classes = torus_classes(max);
    let gw_check = check(S, "gw_closed_vs_enumerated", classes.clone(), |a| {
        match (gw_closed_form(a), gw_enumerated(a)) {
            (Ok(c), Ok(e)) if c.gw == e.gw => None,
            (c, e) => Some(format!("{a}: closed {c:?}, enumerated {e:?}")),
        }
    });
    let integral = check(S, "gw_integrality", classes, |a| match gw_closed_form(a) {
        Ok(r) if r.gw.is_integral() && r.gw.e124 == Rational::from_integer(0.into()) => None,
        r => Some(format!("{a}: {r:?}")),
    });
    let aut = check(S, "aut_formula_vs_smith", mn_pairs(max), |&(m, n)| {
        let list = match enumerate_fully_reduced(m, n) {
            Ok(l) => l,
            Err(e) => return Some(format!("(m, n) = ({m}, {n}): {e}")),
        };
        list.iter().find_map(|e| {
            let smith = aut_size_smith(&e.h);
            let formula = aut_labels(&e.h, m, n)
                .and_then(|(k, l)| aut_size_formula(e.d, k, l, m, n));
            match (smith, formula) {
                (Ok(s), Ok(f)) if s == f => None,
                (s, f) => Some(format!(
                    "(m, n, d, k, l) = ({m}, {n}, {}, {}, {}): smith {s:?}, formula {f:?}",
                    e.d, e.k, e.l
                )),
            }
        })
    });
    let count = check(S, "component_count", mn_pairs(max), |&(m, n)| {
        let len = enumerate_fully_reduced(m, n).map(|l| l.len() as i64);
        let expected = divisors(gcd(m, n)).map(|d| m.abs() * d.len() as i64);
        match (len, expected) {
            (Ok(a), Ok(b)) if a == b => None,
            (a, b) => Some(format!("(m, n) = ({m}, {n}): {a:?} vs {b:?}")),
        }
    });
    let mut zero_cases = vec![HomologyClass::ZERO];
    for n in nonzero_range(max) {
        zero_cases.push(HomologyClass::new(0, 0, n, 0));
        zero_cases.push(HomologyClass::new(0, 0, 0, n));
        zero_cases.push(HomologyClass::new(0, 0, n, n));
    }
    let zero = check(S, "zero_classes", zero_cases, |a| {
        match (gw_closed_form(a), gw_enumerated(a)) {
            (Ok(c), Ok(e)) if c.gw.is_zero() && e.gw.is_zero() => None,
            (c, e) => Some(format!("{a}: closed {c:?}, enumerated {e:?}")),
        }
    });
    vec![gw_check, integral, aut, count, zero]
}

fn geometry(max: i64) -> Result<Vec<Check>, Failure> {
    const S: &str = "geometry";
    let comps: Vec<ModuliComponent> = mn_pairs(max)
        .par_iter()
        .map(|&(m, n)| {
            enumerate_fully_reduced(m, n)?
                .into_iter()
                .map(|e| moduli_component(m, n, e.d, e.k, e.l))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<Vec<_>>, _>>()?
        .into_iter()
        .flatten()
        .collect();
    let label = |c: &ModuliComponent| {
        format!("(m, n, d, k, l) = ({}, {}, {}, {}, {})", c.m, c.n, c.d, c.k, c.l)
    };
    let residual = |c: &ModuliComponent| cr_residual(&c.solution, 8).unwrap_or(f64::INFINITY);
    Ok(vec![
        check(S, "cr_residual", comps.clone(), |c| {
            let r = residual(c);
            (r >= 1e-9).then(|| format!("{}: residual {r:e}", label(c)))
        }),
        check(S, "perturbed_c0_detected", comps.clone(), |c| {
            let mut bad = c.clone();
            bad.solution.c0.x += Rational::new(1.into(), 10.into());
            let r = cr_residual(&bad.solution, 8).unwrap_or(0.0);
            (r <= 1e-3).then(|| format!("{}: residual {r:e}", label(c)))
        }),
        check(S, "perturbed_tau1_detected", comps.clone(), |c| {
            let mut bad = c.clone();
            bad.solution.modulus.tau1 += 0.1;
            let r = cr_residual(&bad.solution, 8).unwrap_or(0.0);
            (r <= 1e-3).then(|| format!("{}: residual {r:e}", label(c)))
        }),
        check(S, "area_positive", comps.clone(), |c| {
            let a = symplectic_area(&HomologyClass::normal(c.m, c.n), &c.solution.psi);
            (a <= 0.0).then(|| format!("{}: area {a}", label(c)))
        }),
        check(S, "eval_class", comps, |c| {
            let got = eval_class_integrate(&c.solution);
            match component_eval_class(c.m, c.n) {
                Ok(want) if want == got => None,
                want => Some(format!("{}: integrated {got}, expected {want:?}", label(c))),
            }
        }),
    ])
}

pub const VERIFY_COLUMNS: [&str; 6] =
    ["suite", "check", "passed", "failed", "ok", "first_counterexample"];

pub fn verify(suite: Suite, max: Option<i64>) -> Result<Report, Failure> {
    if let Some(m) = max {
        if m < 1 {
            return Err(Failure::Invalid(format!("--max must be at least 1, got {m}")));
        }
        if m > 10_000 {
            return Err(Failure::Invalid(format!("--max {m} exceeds the supported bound 10000")));
        }
    }
    let pick = |s: Suite| max.unwrap_or(s.default_max());
    let mut checks = Vec::new();
    if matches!(suite, Suite::Identities | Suite::All) {
        checks.extend(identities(pick(Suite::Identities)));
    }
    if matches!(suite, Suite::Oracle | Suite::All) {
        checks.extend(oracle(pick(Suite::Oracle)));
    }
    if matches!(suite, Suite::Geometry | Suite::All) {
        checks.extend(geometry(pick(Suite::Geometry))?);
    }
    let mut table = Table::new(VERIFY_COLUMNS.to_vec());
    let mut first_failure = None;
    for c in &checks {
        if first_failure.is_none() {
            first_failure = c
                .first_failure
                .as_ref()
                .map(|f| format!("{}/{}: {f}", c.suite, c.name));
        }
        table.push(vec![
            c.suite.into(),
            c.name.into(),
            (c.passed as i64).into(),
            (c.failed as i64).into(),
            (c.failed == 0).into(),
            c.first_failure.clone().unwrap_or_default().into(),
        ]);
    }
    let mut args = vec![("suite", suite.name().to_string())];
    if let Some(m) = max {
        args.push(("max", m.to_string()));
    }
    Ok(Report {
        doc: Document {
            command: "verify",
            args,
            table,
        },
        ok: first_failure.is_none(),
        first_failure,
    })
}
