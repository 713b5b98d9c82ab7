use hdx_core::cochain::Chain;
use hdx_core::expansion::{
    certify_exact, distance_formula_audit, eta, large_cuts_audit, local_view_bounds_audit,
    outgoing_edges_identity, sum_coboundaries_audit, LemmaContext,
};
use hdx_core::spectral::{
    cheeger_inequality_audit, edge_graph_floor_audit, mixing_lemma_audit, underlying_graph,
};
use hdx_core::walk::path_seed;
use hdx_core::{Complex2, HdxError, Verdict};
use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::args::{AuditArgs, GlobalFlags, Lemma};
use crate::commands::tolerances;
use crate::report::{load, CliError, Invocation, Output};

const PER_SET: [Lemma; 4] = [
    Lemma::Outgoing,
    Lemma::Distance,
    Lemma::LocalViews,
    Lemma::Sum,
];
const ALL: [Lemma; 5] = [
    Lemma::Outgoing,
    Lemma::LargeCuts,
    Lemma::Distance,
    Lemma::LocalViews,
    Lemma::Sum,
];

/// Which edge sets are audited.
enum Sets {
    Single(Vec<usize>),
    Sampled { count: u64, seed: u64 },
    All { edges: usize },
}

impl Sets {
    fn count(&self) -> u64 {
        match self {
            Sets::Single(_) => 1,
            Sets::Sampled { count, .. } => *count,
            Sets::All { edges } => 1 << edges,
        }
    }

    /// Set number `i`: the edges whose bits are set in `i`, or in the
    /// SplitMix64 stream seeded with `path_seed(seed, i)` for sampled sets.
    fn get(&self, i: u64, num_edges: usize) -> Chain {
        match self {
            Sets::Single(members) => Chain::edges(members.iter().copied()),
            Sets::All { .. } => Chain::from_mask(1, i),
            Sets::Sampled { seed, .. } => {
                let mut rng = SplitMix64::seed_from_u64(path_seed(*seed, i));
                let mut members = Vec::new();
                let mut word = 0;
                for e in 0..num_edges {
                    if e % 64 == 0 {
                        word = rng.next_u64();
                    }
                    if word >> (e % 64) & 1 == 1 {
                        members.push(e);
                    }
                }
                Chain::edges(members)
            }
        }
    }

    fn describe(&self) -> Value {
        match self {
            Sets::Single(m) => json!({ "mode": "single", "count": 1, "set": m }),
            Sets::Sampled { count, seed } => {
                json!({ "mode": "sampled", "count": count, "seed": seed })
            }
            Sets::All { .. } => json!({ "mode": "all", "count": self.count() }),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
struct Violation {
    index: u64,
    set: Chain,
    verdict: Verdict,
    detail: Value,
}

#[derive(Debug, Clone, Default, Serialize)]
struct Tally {
    checked: u64,
    skipped: u64,
    pass: u64,
    fail: u64,
    not_applicable: u64,
    /// Lowest-numbered set on which the inequality does not hold.
    first_violation: Option<Violation>,
}

impl Tally {
    fn record(&mut self, index: u64, set: &Chain, outcome: Option<(Verdict, bool, Value)>) {
        let Some((verdict, holds, detail)) = outcome else {
            self.skipped += 1;
            return;
        };
        self.checked += 1;
        match verdict {
            Verdict::Pass => self.pass += 1,
            Verdict::Fail => self.fail += 1,
            Verdict::NotApplicable => self.not_applicable += 1,
        }
        if !holds
            && self
                .first_violation
                .as_ref()
                .is_none_or(|v| index < v.index)
        {
            self.first_violation = Some(Violation {
                index,
                set: set.clone(),
                verdict,
                detail,
            });
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.checked += other.checked;
        self.skipped += other.skipped;
        self.pass += other.pass;
        self.fail += other.fail;
        self.not_applicable += other.not_applicable;
        if let Some(v) = other.first_violation {
            if self
                .first_violation
                .as_ref()
                .is_none_or(|w| v.index < w.index)
            {
                self.first_violation = Some(v);
            }
        }
        self
    }

    fn verdict(&self) -> Verdict {
        if self.fail > 0 {
            Verdict::Fail
        } else if self.pass > 0 {
            Verdict::Pass
        } else {
            Verdict::NotApplicable
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("audit reports serialize")
}

/// Outcome of one per-set lemma on `f`: verdict, whether the inequality
/// holds numerically, and the evidence. `None` when `f` is outside the
/// statement's range.
fn evaluate(
    lemma: Lemma,
    x: &Complex2,
    ctx: Option<&LemmaContext>,
    eta_value: f64,
    f: &Chain,
) -> hdx_core::Result<Option<(Verdict, bool, Value)>> {
    Ok(match lemma {
        Lemma::Outgoing => {
            let (lhs, rhs) = outgoing_edges_identity(x, f)?;
            let holds = lhs == rhs;
            Some((
                Verdict::from_check(holds, true),
                holds,
                json!({ "cut": lhs, "sum": rhs }),
            ))
        }
        Lemma::Distance => {
            let r = distance_formula_audit(ctx.expect("context"), f)?;
            let holds = r.vertices.iter().all(|v| v.equal);
            Some((r.verdict, holds, to_json(&r)))
        }
        Lemma::LocalViews => {
            let r = local_view_bounds_audit(ctx.expect("context"), f, eta_value)?;
            let holds = r.vertices.iter().all(|v| v.holds);
            Some((r.verdict, holds, to_json(&r)))
        }
        Lemma::Sum => {
            if 2 * f.len() > x.num_edges() {
                None
            } else {
                let r = sum_coboundaries_audit(ctx.expect("context"), f)?;
                Some((r.verdict, r.passes, to_json(&r)))
            }
        }
        _ => unreachable!("graph-level lemma"),
    })
}

fn not_applicable(lemma: Lemma, reason: &str) -> Value {
    json!({ "lemma": lemma, "verdict": Verdict::NotApplicable, "reason": reason })
}

/// Runs a graph-level audit, mapping unmet hypotheses to not-applicable.
fn graph_level<T: Serialize>(
    lemma: Lemma,
    result: hdx_core::Result<T>,
    verdict_of: impl Fn(&T) -> Verdict,
) -> Result<(Verdict, Value), CliError> {
    match result {
        Ok(r) => {
            let v = verdict_of(&r);
            Ok((v, json!({ "lemma": lemma, "verdict": v, "report": r })))
        }
        Err(e @ (HdxError::NotRegular(_) | HdxError::Domain(_))) => Ok((
            Verdict::NotApplicable,
            not_applicable(lemma, &e.to_string()),
        )),
        Err(e) => Err(e.into()),
    }
}

pub fn audit(inv: &Invocation, g: &GlobalFlags, a: &AuditArgs) -> Result<Output, CliError> {
    let (x, digest) = load(&a.file)?;
    let tol = tolerances(g);
    let lemmas: Vec<Lemma> = match a.lemma {
        Lemma::All => ALL.to_vec(),
        l => vec![l],
    };
    let m = x.num_edges();
    let sets = match (&a.set, a.samples) {
        (Some(members), _) => {
            Chain::edges(members.iter().copied()).check(&x, 1)?;
            Sets::Single(members.clone())
        }
        (None, Some(count)) => Sets::Sampled {
            count,
            seed: a.seed.unwrap_or(0),
        },
        (None, None) => {
            let per_set = lemmas.iter().any(|l| PER_SET.contains(l));
            if per_set && m > a.max_bits.min(63) {
                return Err(HdxError::capacity("number of edges", m, a.max_bits.min(63)).into());
            }
            Sets::All { edges: m }
        }
    };

    let needs_context = lemmas
        .iter()
        .any(|l| matches!(l, Lemma::Distance | Lemma::LocalViews | Lemma::Sum));
    let context = if needs_context {
        Some(build_context(&x, a.max_bits, tol)?)
    } else {
        None
    };
    let ctx = context.as_ref().and_then(|c| c.as_ref().ok());
    let eta_value = ctx.map(|c| eta(c.lambda2)).transpose()?.unwrap_or(f64::NAN);

    let mut verdicts = Vec::new();
    let mut entries = Vec::new();
    let mut per_set = Vec::new();
    for &lemma in &lemmas {
        match lemma {
            Lemma::LargeCuts => {
                let (v, e) =
                    graph_level(lemma, large_cuts_audit(&underlying_graph(&x), tol), |r| {
                        r.verdict
                    })?;
                verdicts.push(v);
                entries.push(e);
            }
            Lemma::Mixing => {
                let (v, e) =
                    graph_level(lemma, mixing_lemma_audit(&underlying_graph(&x), tol), |r| {
                        Verdict::from_check(r.passes, true)
                    })?;
                verdicts.push(v);
                entries.push(e);
            }
            Lemma::CheegerInequality => {
                let (v, e) = graph_level(
                    lemma,
                    cheeger_inequality_audit(&underlying_graph(&x), tol),
                    |r| Verdict::from_check(r.passes, true),
                )?;
                verdicts.push(v);
                entries.push(e);
            }
            Lemma::EdgeFloor => {
                let (v, e) = graph_level(lemma, edge_graph_floor_audit(&x, tol), |r| {
                    Verdict::from_check(r.passes, true)
                })?;
                verdicts.push(v);
                entries.push(e);
            }
            Lemma::Outgoing => per_set.push(lemma),
            _ => match &context {
                Some(Err(reason)) => {
                    verdicts.push(Verdict::NotApplicable);
                    entries.push(not_applicable(lemma, reason));
                }
                _ => per_set.push(lemma),
            },
        }
    }

    if !per_set.is_empty() {
        let tallies = (0..sets.count())
            .into_par_iter()
            .try_fold(
                || vec![Tally::default(); per_set.len()],
                |mut acc, i| {
                    let f = sets.get(i, m);
                    for (tally, &lemma) in acc.iter_mut().zip(&per_set) {
                        tally.record(i, &f, evaluate(lemma, &x, ctx, eta_value, &f)?);
                    }
                    Ok::<_, HdxError>(acc)
                },
            )
            .try_reduce(
                || vec![Tally::default(); per_set.len()],
                |a, b| Ok(a.into_iter().zip(b).map(|(x, y)| x.merge(y)).collect()),
            )?;
        for (lemma, tally) in per_set.iter().zip(tallies) {
            let v = tally.verdict();
            verdicts.push(v);
            entries.push(json!({ "lemma": lemma, "verdict": v, "tally": tally }));
        }
    }
    entries.sort_by_key(|e| lemmas.iter().position(|l| json!(l) == e["lemma"]));

    let context_summary = match &context {
        None => Value::Null,
        Some(Err(reason)) => json!({ "reason": reason }),
        Some(Ok(c)) => json!({
            "k0": c.k0,
            "k1": c.k1,
            "lambda2": c.lambda2,
            "epsilon": c.epsilon,
            "mu": c.mu,
            "eta": eta_value,
            "conditions": c.conditions,
        }),
    };
    let verdict = Verdict::combine(verdicts);
    let results = json!({
        "edges": m,
        "sets": sets.describe(),
        "context": context_summary,
        "lemmas": entries,
    });
    inv.report(g, a, vec![digest], results, verdict.into())
}

/// The lemma context, or why its hypotheses fail.
fn build_context(
    x: &Complex2,
    max_bits: usize,
    tol: hdx_core::spectral::Tolerances,
) -> Result<Result<LemmaContext<'_>, String>, CliError> {
    let certificate = match certify_exact(x, max_bits) {
        Ok(c) => c,
        Err(e @ (HdxError::NotRegular(_) | HdxError::Degenerate(_))) => {
            return Ok(Err(e.to_string()))
        }
        Err(e) => return Err(e.into()),
    };
    match LemmaContext::new(x, &certificate, tol) {
        Ok(c) => Ok(Ok(c)),
        Err(e @ (HdxError::NotRegular(_) | HdxError::Domain(_))) => Ok(Err(e.to_string())),
        Err(e) => Err(e.into()),
    }
}
