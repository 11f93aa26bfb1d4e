//! Completion of associative rewrite systems.
//!
//! Ambiguities sit in an ordered set keyed by `(w, kind, parents, position)`
//! and are processed smallest `w` first. A batch of ambiguities that share
//! the length of the current smallest `w` is reduced in parallel against
//! a frozen snapshot of the system. The batch is then merged one entry at a
//! time in canonical order, so results do not depend on the worker count.
//!
//! Every relation ever created keeps an id in `history` together with a
//! [`ProvenanceRecord`] explaining where it came from.

use std::collections::BTreeSet;
use std::collections::VecDeque;

use num_traits::One;
use serde::Serialize;
use thiserror::Error;

use crate::composition::{
    nontrivial_compositions, pair_ambiguities, Ambiguity, Composition, CompositionKind,
};
use crate::par::Parallelism;
use crate::poly::{JsonTerm, NcPolynomial, Rational};
use crate::rewrite::{ReductionTrace, Relation, RewriteError, RewriteSystem};
use crate::word::{Alphabet, Order};

/// Ambiguities reduced per parallel batch. Fixed so that batching does not
/// depend on the worker count.
const BATCH: usize = 256;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CompletionError {
    #[error("budget field `{0}` must be positive")]
    InvalidBudget(&'static str),
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CompletionBudget {
    /// Ambiguities with `|w|` above this are not processed.
    pub max_deg: usize,
    pub max_relations: usize,
    pub max_steps: usize,
}

impl Default for CompletionBudget {
    fn default() -> Self {
        CompletionBudget {
            max_deg: 10,
            max_relations: 5000,
            max_steps: 1_000_000,
        }
    }
}

impl CompletionBudget {
    pub fn with_max_deg(max_deg: usize) -> Self {
        CompletionBudget {
            max_deg,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<(), CompletionError> {
        if self.max_deg == 0 {
            return Err(CompletionError::InvalidBudget("max_deg"));
        }
        if self.max_relations == 0 {
            return Err(CompletionError::InvalidBudget("max_relations"));
        }
        if self.max_steps == 0 {
            return Err(CompletionError::InvalidBudget("max_steps"));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "degree", rename_all = "snake_case")]
pub enum CompletionStatus {
    Complete,
    /// Finished every ambiguity up to this length, but longer ones existed.
    TruncatedAtDegree(usize),
    BudgetExhausted,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "origin", rename_all = "snake_case")]
pub enum Origin {
    /// The `index`-th input relation.
    Input { index: usize },
    /// A reduced composition of two earlier relations.
    Composition {
        kind: CompositionKind,
        f_id: usize,
        g_id: usize,
        position: usize,
    },
    /// An earlier relation re-reduced after a newer one made it reducible.
    Rereduced { from: usize },
}

/// How relation `id` was obtained:
/// `unreduced = scale · relation + Σ trace steps`, and `unreduced` is
/// determined by `origin` from earlier relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProvenanceRecord {
    pub id: usize,
    pub origin: Origin,
    pub unreduced: NcPolynomial,
    pub trace: ReductionTrace,
    pub scale: Rational,
    pub relation: NcPolynomial,
}

#[derive(Clone, Debug)]
pub struct CompletionResult {
    /// Final relations, interreduced, ascending by leading word.
    pub system: RewriteSystem,
    pub status: CompletionStatus,
    pub added: Vec<ProvenanceRecord>,
    /// Every relation ever created, indexed by history id.
    pub history: Vec<NcPolynomial>,
    /// History id of each relation of `system`.
    pub final_ids: Vec<usize>,
    /// Input indices whose relation reduced to zero.
    pub dropped_inputs: Vec<usize>,
    pub steps: usize,
}

impl CompletionResult {
    pub fn is_complete(&self) -> bool {
        self.status == CompletionStatus::Complete
    }

    /// Recomputes the unreduced polynomial of `rec` from its origin.
    pub fn origin_value(
        &self,
        rec: &ProvenanceRecord,
        inputs: &[NcPolynomial],
    ) -> Option<NcPolynomial> {
        match &rec.origin {
            Origin::Input { index } => inputs
                .get(*index)
                .and_then(|p| p.make_monic(Order::DegLex).ok()),
            Origin::Composition {
                kind,
                f_id,
                g_id,
                position,
            } => {
                let f = self.history.get(*f_id)?;
                let g = self.history.get(*g_id)?;
                let fl = f.leading_word(Order::DegLex).ok()?;
                let gl = g.leading_word(Order::DegLex).ok()?;
                let w = match kind {
                    CompositionKind::Inclusion => fl.clone(),
                    CompositionKind::Intersection => {
                        fl.concat(&gl.suffix_from(fl.len() - position))
                    }
                };
                let amb = Ambiguity {
                    w,
                    kind: *kind,
                    f_id: *f_id,
                    g_id: *g_id,
                    position: *position,
                };
                Some(amb.value(f, g))
            }
            Origin::Rereduced { from } => self.history.get(*from).cloned(),
        }
    }

    /// Checks every provenance record: the origin rebuilds `unreduced`, and
    /// replaying the trace from the relation gives `unreduced` back.
    pub fn verify_provenance(&self, inputs: &[NcPolynomial]) -> Result<(), usize> {
        for rec in &self.added {
            let Some(origin) = self.origin_value(rec, inputs) else {
                return Err(rec.id);
            };
            if origin != rec.unreduced {
                return Err(rec.id);
            }
            let replayed = rec
                .trace
                .replay_with(&rec.relation.scale(&rec.scale), |i| &self.history[i]);
            if replayed != rec.unreduced || self.history[rec.id] != rec.relation {
                return Err(rec.id);
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> serde_json::Value {
        let alpha = self.system.alphabet();
        let relations: Vec<String> = self.system.render();
        let log: Vec<serde_json::Value> = self
            .added
            .iter()
            .map(|r| {
                serde_json::json!({
                    "id": r.id,
                    "origin": r.origin,
                    "relation": r.relation.to_json_terms(alpha),
                    "scale": crate::poly::format_rational(&r.scale),
                    "unreduced": r.unreduced.to_json_terms(alpha),
                    "trace": r.trace.to_json(alpha),
                })
            })
            .collect();
        serde_json::json!({
            "status": self.status,
            "relations": relations,
            "final_ids": self.final_ids,
            "dropped_inputs": self.dropped_inputs,
            "steps": self.steps,
            "provenance": log,
        })
    }
}

struct Candidate {
    origin: Origin,
    unreduced: NcPolynomial,
    current: NcPolynomial,
    trace: ReductionTrace,
}

struct Engine<'a> {
    budget: CompletionBudget,
    par: &'a Parallelism,
    work: RewriteSystem,
    history: Vec<NcPolynomial>,
    records: Vec<ProvenanceRecord>,
    queue: BTreeSet<Ambiguity>,
    truncated: bool,
    dropped: Vec<usize>,
    steps: usize,
}

impl<'a> Engine<'a> {
    fn add(&mut self, first: Candidate) {
        let mut pending = VecDeque::from([first]);
        while let Some(mut c) = pending.pop_front() {
            let (h, t) = self.work.normal_form(&c.current);
            c.trace.extend(t);
            if h.is_zero() {
                if let Origin::Input { index } = c.origin {
                    self.dropped.push(index);
                }
                continue;
            }
            let scale = h.leading(Order::DegLex).expect("nonzero").1.clone();
            let monic = if scale.is_one() {
                h
            } else {
                h.scale(&scale.recip())
            };
            let rel = Relation::new(monic.clone()).expect("monic");
            let lead = rel.lead.clone();
            let id = self.work.push(rel);
            debug_assert_eq!(id, self.history.len());
            self.history.push(monic.clone());
            self.records.push(ProvenanceRecord {
                id,
                origin: c.origin,
                unreduced: c.unreduced,
                trace: c.trace,
                scale,
                relation: monic,
            });

            // The new leading word may reduce older relations.
            let stale: Vec<usize> = self
                .work
                .relations()
                .filter(|&(j, r)| {
                    j != id
                        && (r.lead.contains(&lead)
                            || r.tail.terms().any(|(w, _)| w.contains(&lead)))
                })
                .map(|(j, _)| j)
                .collect();
            for j in stale {
                let old = self.work.retire(j).expect("live");
                pending.push_back(Candidate {
                    origin: Origin::Rereduced { from: j },
                    unreduced: old.poly.clone(),
                    current: old.poly.clone(),
                    trace: ReductionTrace::default(),
                });
            }

            let live: Vec<(usize, crate::word::Word)> = self
                .work
                .relations()
                .map(|(j, r)| (j, r.lead.clone()))
                .collect();
            for (j, other) in &live {
                let mut ambs = pair_ambiguities(id, &lead, *j, other);
                if *j != id {
                    ambs.extend(pair_ambiguities(*j, other, id, &lead));
                }
                for a in ambs {
                    if a.w.len() > self.budget.max_deg {
                        self.truncated = true;
                    } else {
                        self.queue.insert(a);
                    }
                }
            }
        }
    }

    fn run(&mut self) -> CompletionStatus {
        let mut steps = 0usize;
        while let Some(first) = self.queue.first() {
            let deg = first.w.len();
            let mut batch = Vec::new();
            while batch.len() < BATCH {
                match self.queue.first() {
                    Some(a) if a.w.len() == deg => {
                        let a = self.queue.pop_first().expect("nonempty");
                        if self.work.relation(a.f_id).is_some()
                            && self.work.relation(a.g_id).is_some()
                        {
                            batch.push(a);
                        }
                    }
                    _ => break,
                }
            }
            let work = &self.work;
            let reduced = self.par.map(&batch, |a| {
                let f = &work.relation(a.f_id).expect("live").poly;
                let g = &work.relation(a.g_id).expect("live").poly;
                let v = a.value(f, g);
                let (h, t) = work.normal_form(&v);
                (v, h, t)
            });
            for (a, (v, h, t)) in batch.into_iter().zip(reduced) {
                if steps >= self.budget.max_steps {
                    self.steps = steps;
                    return CompletionStatus::BudgetExhausted;
                }
                steps += 1;
                if h.is_zero() {
                    continue;
                }
                self.add(Candidate {
                    origin: Origin::Composition {
                        kind: a.kind,
                        f_id: a.f_id,
                        g_id: a.g_id,
                        position: a.position,
                    },
                    unreduced: v,
                    current: h,
                    trace: t,
                });
                if self.work.len() > self.budget.max_relations {
                    self.steps = steps;
                    return CompletionStatus::BudgetExhausted;
                }
            }
        }
        self.steps = steps;
        if self.truncated {
            CompletionStatus::TruncatedAtDegree(self.budget.max_deg)
        } else {
            CompletionStatus::Complete
        }
    }
}

/// Completes `relations` (made monic first) with the default worker setup.
pub fn complete(
    alphabet: &Alphabet,
    relations: &[NcPolynomial],
    budget: CompletionBudget,
) -> Result<CompletionResult, CompletionError> {
    complete_with(alphabet, relations, budget, &Parallelism::sequential())
}

pub fn complete_system(
    system: &RewriteSystem,
    budget: CompletionBudget,
) -> Result<CompletionResult, CompletionError> {
    complete_with(
        system.alphabet(),
        &system.polynomials(),
        budget,
        &Parallelism::sequential(),
    )
}

pub fn complete_with(
    alphabet: &Alphabet,
    relations: &[NcPolynomial],
    budget: CompletionBudget,
    par: &Parallelism,
) -> Result<CompletionResult, CompletionError> {
    budget.validate()?;
    for p in relations {
        p.check(alphabet).map_err(RewriteError::from)?;
    }
    let mut engine = Engine {
        budget,
        par,
        work: RewriteSystem::empty(alphabet.clone()),
        history: Vec::new(),
        records: Vec::new(),
        queue: BTreeSet::new(),
        truncated: false,
        dropped: Vec::new(),
        steps: 0,
    };
    for (index, p) in relations.iter().enumerate() {
        if p.is_zero() {
            engine.dropped.push(index);
            continue;
        }
        let m = p.make_monic(Order::DegLex).expect("nonzero");
        engine.add(Candidate {
            origin: Origin::Input { index },
            unreduced: m.clone(),
            current: m,
            trace: ReductionTrace::default(),
        });
    }
    let status = engine.run();

    let mut ids: Vec<usize> = engine.work.relations().map(|(i, _)| i).collect();
    ids.sort_by(|&a, &b| {
        let ra = engine.work.relation(a).expect("live");
        let rb = engine.work.relation(b).expect("live");
        ra.lead.cmp(&rb.lead).then_with(|| a.cmp(&b))
    });
    let system = engine.work.compacted(&ids);
    engine.dropped.sort_unstable();
    Ok(CompletionResult {
        system,
        status,
        added: engine.records,
        history: engine.history,
        final_ids: ids,
        dropped_inputs: engine.dropped,
        steps: engine.steps,
    })
}

/// Whether every composition (with `|w| <= max_deg` when given) reduces to
/// zero, plus the failing compositions in canonical order.
pub fn is_gsb(system: &RewriteSystem, max_deg: Option<usize>) -> (bool, Vec<Composition>) {
    is_gsb_with(system, max_deg, &Parallelism::sequential())
}

pub fn is_gsb_with(
    system: &RewriteSystem,
    max_deg: Option<usize>,
    par: &Parallelism,
) -> (bool, Vec<Composition>) {
    let failures = nontrivial_compositions(system, max_deg, par);
    (failures.is_empty(), failures)
}

/// Fully interreduced equivalent system: monic, no leading word contains
/// another, tails irreducible. Ascending by leading word.
pub fn interreduce(system: &RewriteSystem) -> RewriteSystem {
    let mut polys = system.polynomials();
    loop {
        polys.sort_by(|p, q| {
            let a = p.leading_word(Order::DegLex).expect("nonzero");
            let b = q.leading_word(Order::DegLex).expect("nonzero");
            a.cmp(b).then_with(|| p.len().cmp(&q.len()))
        });
        let mut acc = RewriteSystem::empty(system.alphabet().clone());
        let mut out: Vec<NcPolynomial> = Vec::new();
        for p in &polys {
            let h = acc.reduce(p);
            if h.is_zero() {
                continue;
            }
            let m = h.make_monic(Order::DegLex).expect("nonzero");
            acc.push(Relation::new(m.clone()).expect("monic"));
            out.push(m);
        }
        // A relation placed early can have its tail hit by a later one whose
        // leading word dropped during reduction; iterate to a fixed point.
        let settled = acc.relations().all(|(i, r)| {
            acc.reducers_of(&r.lead).iter().all(|&(j, _)| j == i)
                && r.tail.terms().all(|(w, _)| !acc.is_reducible(w))
        });
        if settled {
            out.sort_by(|p, q| {
                p.leading_word(Order::DegLex)
                    .expect("nonzero")
                    .cmp(q.leading_word(Order::DegLex).expect("nonzero"))
            });
            return RewriteSystem::new(system.alphabet().clone(), Order::DegLex, out)
                .expect("interreduced");
        }
        polys = out;
    }
}

/// JSON terms for a relation list, used by exporters.
pub fn relations_json(system: &RewriteSystem) -> Vec<Vec<JsonTerm>> {
    system
        .relations()
        .map(|(_, r)| r.poly.to_json_terms(system.alphabet()))
        .collect()
}
