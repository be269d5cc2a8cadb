//! The verification suites behind `weylres verify`, returning flat check records.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exponent::{
    classify_zero_exponents, expexp_all, is_paper_witness, regularity_pairing, regularity_quadratic,
    regularity_scan, regularity_violations, ResidueContext,
};
use crate::meromorphy::{gk_product_wlm, normalized_gk_product, residue_order, surviving_residue_terms, AnalyticAxioms, GkRecipe};
use crate::parabolic::{relevant_parabolics, restriction_bijection_check, table_bijection_check};
use crate::roots::{int, is_negative_exponent, GroupKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Bijections,
    Expexp,
    ExpZeros,
    Regularity,
    Survivors,
    GkOrder,
    All,
}

impl Suite {
    pub const EACH: [Suite; 6] = [Suite::Bijections, Suite::Expexp, Suite::ExpZeros, Suite::Regularity, Suite::Survivors, Suite::GkOrder];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Bijections => "bijections",
            Suite::Expexp => "expexp",
            Suite::ExpZeros => "exp-zeros",
            Suite::Regularity => "regularity",
            Suite::Survivors => "survivors",
            Suite::GkOrder => "gk-order",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Emitted for comparison only.
    Reported,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub suite: &'static str,
    pub check: &'static str,
    pub instance: String,
    pub status: Status,
    pub data: Value,
}

impl CheckRecord {
    fn new(suite: Suite, check: &'static str, instance: impl Into<String>, pass: bool, data: Value) -> Self {
        let status = if pass { Status::Pass } else { Status::Fail };
        Self { suite: suite.name(), check, instance: instance.into(), status, data }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteParams {
    /// `(m, n)` instances for the residue suites.
    pub instances: Vec<ResidueContext>,
    /// Largest `N = a + b` for the matrix-level table checks, per group.
    pub sp_rank: usize,
    pub gl_rank: usize,
    pub seed: u64,
    pub axioms: AnalyticAxioms,
}

impl SuiteParams {
    /// `m ∈ [0, m_max]`, `n ∈ [1, n_max]`.
    pub fn grid(m_max: usize, n_max: usize) -> Result<Vec<ResidueContext>> {
        (0..=m_max).flat_map(|m| (1..=n_max).map(move |n| ResidueContext::new(m, n))).collect()
    }

    /// The desk ranges: `m ≤ 2`, `n ≤ 2`, matrix checks up to `N = 3`.
    pub fn desk() -> Self {
        Self { instances: Self::grid(2, 2).expect("n ≥ 1"), sp_rank: 3, gl_rank: 3, seed: 0, axioms: AnalyticAxioms::default() }
    }
}

#[derive(Clone, Debug, Default)]
pub struct SuiteOutcome {
    pub records: Vec<CheckRecord>,
    pub axioms_consumed: BTreeSet<String>,
}

impl SuiteOutcome {
    pub fn failures(&self) -> usize {
        self.records.iter().filter(|r| r.status == Status::Fail).count()
    }

    pub fn passed(&self) -> bool {
        self.failures() == 0
    }

    fn extend(&mut self, other: SuiteOutcome) {
        self.records.extend(other.records);
        self.axioms_consumed.extend(other.axioms_consumed);
    }
}

fn label(ctx: &ResidueContext) -> String {
    format!("m={} n={}", ctx.m, ctx.n)
}

pub fn run_suite(suite: Suite, params: &SuiteParams) -> Result<SuiteOutcome> {
    match suite {
        Suite::All => {
            let mut out = SuiteOutcome::default();
            for s in Suite::EACH {
                out.extend(run_suite(s, params)?);
            }
            Ok(out)
        }
        Suite::Bijections => bijections(params),
        Suite::Expexp => per_instance(params, expexp),
        Suite::ExpZeros => per_instance(params, exp_zeros),
        Suite::Regularity => per_instance(params, regularity),
        Suite::Survivors => per_instance(params, survivors),
        Suite::GkOrder => {
            let mut out = SuiteOutcome::default();
            for ctx in &params.instances {
                out.extend(gk_order(ctx, params)?);
            }
            Ok(out)
        }
    }
}

fn per_instance(params: &SuiteParams, f: fn(&ResidueContext) -> Result<Vec<CheckRecord>>) -> Result<SuiteOutcome> {
    let mut records = Vec::new();
    for ctx in &params.instances {
        records.extend(f(ctx)?);
    }
    Ok(SuiteOutcome { records, axioms_consumed: BTreeSet::new() })
}

/// Table bijections and restriction bijections for every `(a, b)` with `a + b ≤ N`.
pub fn bijections(params: &SuiteParams) -> Result<SuiteOutcome> {
    let mut records = Vec::new();
    for (kind, max) in [(GroupKind::Gl, params.gl_rank), (GroupKind::Sp, params.sp_rank)] {
        for n in 1..=max {
            for a in 0..=n {
                let b = n - a;
                for rep in table_bijection_check(a, b, kind)? {
                    let inst = format!("{kind} a={a} b={b} P={}", rep.base);
                    records.push(CheckRecord::new(Suite::Bijections, "table-bijection", inst, rep.passed(), serde_json::to_value(&rep).expect("json")));
                }
                for (t, _) in relevant_parabolics(a, b, kind)? {
                    let rep = restriction_bijection_check(&t)?;
                    let inst = format!("{kind} a={a} b={b} T={t}");
                    let data = json!({
                        "q": rep.q.conjugator.to_string(),
                        "contained": rep.contained,
                        "levi_parabolics": rep.levi_parabolics,
                        "parameterized": rep.parameterized,
                    });
                    records.push(CheckRecord::new(Suite::Bijections, "restriction-bijection", inst, rep.bijective, data));
                }
            }
        }
    }
    Ok(SuiteOutcome { records, axioms_consumed: BTreeSet::new() })
}

pub fn expexp(ctx: &ResidueContext) -> Result<Vec<CheckRecord>> {
    Ok(expexp_all(ctx)?
        .into_iter()
        .map(|r| {
            let inst = format!("{} Q={} w={}", label(ctx), r.q, r.w);
            CheckRecord::new(Suite::Expexp, "exponent-identity", inst, r.holds, serde_json::to_value(&r).expect("json"))
        })
        .collect())
}

pub fn exp_zeros(ctx: &ResidueContext) -> Result<Vec<CheckRecord>> {
    Ok(classify_zero_exponents(ctx)?
        .into_iter()
        .map(|r| {
            let inst = format!("{} Q={} w={}", label(ctx), r.q, r.w);
            CheckRecord::new(Suite::ExpZeros, "zero-classification", inst, r.consistent, serde_json::to_value(&r).expect("json"))
        })
        .collect())
}

pub fn regularity(ctx: &ResidueContext) -> Result<Vec<CheckRecord>> {
    let mut out = Vec::new();
    let scan = regularity_scan(ctx);
    let negative = scan.iter().all(|&(_, f)| f < 0);
    out.push(CheckRecord::new(Suite::Regularity, "quadratic-negative", label(ctx), negative, json!({ "scan": scan })));
    for &(a1, f) in &scan {
        let p = regularity_pairing(ctx, a1)?;
        let inst = format!("{} a1={a1}", label(ctx));
        let data = json!({ "pairing": crate::roots::RationalVector(vec![p]), "f": f });
        out.push(CheckRecord::new(Suite::Regularity, "pairing-is-2f", inst, p == int(2 * regularity_quadratic(ctx, a1 as i64)), data));
    }
    let violations = regularity_violations(ctx)?;
    let witness = violations.iter().any(|v| is_paper_witness(ctx, v) && v.exponent_q.is_zero());
    let pass = if ctx.m == 0 { violations.is_empty() } else { witness };
    let data = json!({ "violations": violations, "witness_found": witness });
    out.push(CheckRecord::new(Suite::Regularity, "non-regular-witness", label(ctx), pass, data));
    Ok(out)
}

pub fn survivors(ctx: &ResidueContext) -> Result<Vec<CheckRecord>> {
    let mut out = Vec::new();
    for i in 0..=ctx.m {
        let q = ctx.q_i(i);
        let found = surviving_residue_terms(ctx, &q)?;
        let expected = ctx.rho_i(i).compose(&ctx.w_lm());
        let exponent = ctx.cuspidal_exponent(i);
        let negative = is_negative_exponent(&exponent, &q)?;
        let pass = found == [expected.clone()] && negative;
        let data = json!({ "q": q, "survivors": found, "expected": expected, "exponent": exponent, "negative": negative });
        out.push(CheckRecord::new(Suite::Survivors, "singleton-survivor", format!("{} i={i}", label(ctx)), pass, data));
    }
    Ok(out)
}

/// Axioms allowed for `q·f` at `λ₀`: the three point facts and the zero-free half-planes.
pub const RESIDUE_AXIOMS: [&str; 6] =
    ["L_pi_wedge2:point:1", "L_pi:point:1/2", "zeta:point:1", "zeta:halfplane:>=1", "L_pi:halfplane:>1", "L_pi_wedge2:halfplane:>1"];

pub fn gk_order(ctx: &ResidueContext, params: &SuiteParams) -> Result<SuiteOutcome> {
    let mut out = SuiteOutcome::default();
    for recipe in GkRecipe::ALL {
        let r = residue_order(ctx, recipe, &params.axioms, params.seed)?;
        let within = r.consumed.iter().all(|id| RESIDUE_AXIOMS.contains(&id.as_str()));
        let mut rec = CheckRecord::new(
            Suite::GkOrder,
            "residue-order",
            format!("{} recipe={recipe}", label(ctx)),
            r.order == Some(0) && within,
            json!({
                "recipe": recipe,
                "f": gk_product_wlm(ctx, recipe).to_string(),
                "factors": normalized_gk_product(ctx, recipe).len(),
                "order": r,
            }),
        );
        if recipe == GkRecipe::Displayed {
            rec.status = Status::Reported;
        }
        out.axioms_consumed.extend(r.consumed);
        out.records.push(rec);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_parse_by_name() {
        for s in Suite::EACH {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn small_suites_pass() {
        let params = SuiteParams { instances: SuiteParams::grid(1, 1).unwrap(), sp_rank: 2, gl_rank: 2, ..SuiteParams::desk() };
        for s in [Suite::Bijections, Suite::Expexp, Suite::ExpZeros, Suite::Regularity, Suite::Survivors] {
            let o = run_suite(s, &params).unwrap();
            assert!(!o.records.is_empty(), "{s}");
            assert!(o.passed(), "{s}: {:?}", o.records.iter().find(|r| r.status == Status::Fail));
        }
    }

    #[test]
    fn gk_order_marks_the_augmented_gap() {
        let params = SuiteParams::desk();
        let o = gk_order(&ResidueContext::new(1, 1).unwrap(), &params).unwrap();
        let status: Vec<Status> = o.records.iter().map(|r| r.status).collect();
        assert_eq!(status, [Status::Reported, Status::Fail, Status::Pass]);
        let o = gk_order(&ResidueContext::new(0, 1).unwrap(), &params).unwrap();
        assert!(o.passed());
    }
}
