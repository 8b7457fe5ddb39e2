//! Exhaustive search over purification/swap interleavings on a repeater chain.
//!
//! Every link of the chain holds identically distributed pairs, so a plan
//! acts on a single Bell-diagonal state: `P` purifies the pairs at the current
//! nesting level and `S` swaps one level up. A plan must contain exactly the
//! required number of swaps; purifications may appear anywhere.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::qec::binomial;
use crate::state::{purify_step, swap_step, BellDiagonalState};

/// Upper bound on `b + s` accepted by [`exhaustive_search`].
pub const MAX_SEARCH_LENGTH: u32 = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Op {
    Purify,
    Swap,
}

impl Op {
    fn symbol(self) -> char {
        match self {
            Op::Purify => 'P',
            Op::Swap => 'S',
        }
    }
}

/// Ordered list of operations. Ordering is lexicographic with `P < S`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SchedulePlan(pub Vec<Op>);

impl SchedulePlan {
    /// All purifications first: the Burst plan.
    pub fn burst(b: u32, s: u32) -> Self {
        let mut ops = vec![Op::Purify; b as usize];
        ops.extend(std::iter::repeat_n(Op::Swap, s as usize));
        Self(ops)
    }

    pub fn ops(&self) -> &[Op] {
        &self.0
    }

    pub fn purifications(&self) -> u32 {
        self.0.iter().filter(|o| **o == Op::Purify).count() as u32
    }

    pub fn swaps(&self) -> u32 {
        self.0.iter().filter(|o| **o == Op::Swap).count() as u32
    }

    pub fn is_burst(&self) -> bool {
        !self.0.windows(2).any(|w| w == [Op::Swap, Op::Purify])
    }
}

impl fmt::Display for SchedulePlan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|o| write!(f, "{}", o.symbol()))
    }
}

impl FromStr for SchedulePlan {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .filter(|c| !matches!(c, ',' | ' ' | '[' | ']'))
            .map(|c| match c.to_ascii_uppercase() {
                'P' => Ok(Op::Purify),
                'S' => Ok(Op::Swap),
                other => Err(Error::Invalid {
                    what: "plan",
                    reason: format!("unexpected symbol `{other}` in `{s}`"),
                }),
            })
            .collect::<Result<Vec<_>>>()
            .map(SchedulePlan)
    }
}

impl Serialize for SchedulePlan {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Outcome of running a plan on a uniform chain.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PlanEvaluation {
    pub final_state: BellDiagonalState,
    pub final_error: f64,
    /// Product of the purification success probabilities along the plan.
    pub success_product: f64,
    /// Elementary pairs per end-to-end pair when every purification succeeds.
    pub nominal_raw_pairs: f64,
    /// Elementary pairs per end-to-end pair, averaged over purification failures.
    pub expected_raw_pairs: f64,
}

pub fn evaluate_plan_detail(
    plan: &SchedulePlan,
    initial: &BellDiagonalState,
) -> Result<PlanEvaluation> {
    let mut state = *initial;
    let mut success_product = 1.0;
    for op in plan.ops() {
        match op {
            Op::Purify => {
                let (next, n) = purify_step(&state)?;
                state = next;
                success_product *= n;
            }
            Op::Swap => state = swap_step(&state),
        }
    }
    let nominal_raw_pairs = 2f64.powi(plan.ops().len() as i32);
    Ok(PlanEvaluation {
        final_state: state,
        final_error: state.error(),
        success_product,
        nominal_raw_pairs,
        expected_raw_pairs: nominal_raw_pairs / success_product,
    })
}

/// Final error probability `ρ` after running `plan`.
pub fn evaluate_plan(plan: &SchedulePlan, initial: &BellDiagonalState) -> Result<f64> {
    evaluate_plan_detail(plan, initial).map(|e| e.final_error)
}

/// The `index`-th plan, in lexicographic order, among those with `b`
/// purifications and `s` swaps.
fn nth_plan(mut index: u128, mut b: u32, mut s: u32) -> SchedulePlan {
    let mut ops = Vec::with_capacity((b + s) as usize);
    while b + s > 0 {
        // Plans starting with P come first; there are C(b-1+s, s) of them.
        let with_p = if b > 0 { binomial(b - 1 + s, s) } else { 0 };
        if index < with_p {
            ops.push(Op::Purify);
            b -= 1;
        } else {
            index -= with_p;
            ops.push(Op::Swap);
            s -= 1;
        }
    }
    SchedulePlan(ops)
}

/// Every interleaving of `b` purifications and `s` swaps, in lexicographic order.
pub fn enumerate_plans(b: u32, s: u32) -> impl Iterator<Item = SchedulePlan> {
    (0..binomial(b + s, s)).map(move |i| nth_plan(i, b, s))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchReport {
    pub purifications: u32,
    pub swaps: u32,
    pub best_plan: SchedulePlan,
    pub best_final_error: f64,
    pub burst_plan: SchedulePlan,
    pub burst_plan_error: f64,
    /// True when the Burst plan attains the minimum.
    pub burst_is_optimal: bool,
    pub all_plans_evaluated: u64,
    pub best_expected_raw_pairs: f64,
    pub burst_expected_raw_pairs: f64,
    /// Identical for every plan: each level of either kind doubles the pairs.
    pub nominal_raw_pairs: f64,
}

/// Evaluates every interleaving and reports the one with the lowest final `ρ`.
///
/// Ties go to the lexicographically first plan. Plans are evaluated in
/// parallel; the reduction is a total order, so the result does not depend on
/// the thread count.
pub fn exhaustive_search(
    b_budget: u32,
    s_required: u32,
    initial: &BellDiagonalState,
) -> Result<SearchReport> {
    let len = b_budget + s_required;
    if len > MAX_SEARCH_LENGTH {
        return Err(Error::TooLarge {
            what: "b + s",
            value: len as usize,
            limit: MAX_SEARCH_LENGTH as usize,
        });
    }
    let total = binomial(len, s_required);
    let best = (0..total as u64)
        .into_par_iter()
        .map(|i| {
            let plan = nth_plan(i as u128, b_budget, s_required);
            evaluate_plan_detail(&plan, initial).map(|e| (e, plan))
        })
        .try_reduce_with(|x, y| {
            let keep_x = match x.0.final_error.total_cmp(&y.0.final_error) {
                std::cmp::Ordering::Less => true,
                std::cmp::Ordering::Greater => false,
                std::cmp::Ordering::Equal => x.1 <= y.1,
            };
            Ok(if keep_x { x } else { y })
        })
        .expect("at least one plan")?;

    let burst_plan = SchedulePlan::burst(b_budget, s_required);
    let burst = evaluate_plan_detail(&burst_plan, initial)?;
    let (best_eval, best_plan) = best;
    Ok(SearchReport {
        purifications: b_budget,
        swaps: s_required,
        burst_is_optimal: burst.final_error <= best_eval.final_error,
        best_final_error: best_eval.final_error,
        best_expected_raw_pairs: best_eval.expected_raw_pairs,
        best_plan,
        burst_plan,
        burst_plan_error: burst.final_error,
        burst_expected_raw_pairs: burst.expected_raw_pairs,
        all_plans_evaluated: total as u64,
        nominal_raw_pairs: burst.nominal_raw_pairs,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProbeCell {
    pub f0: f64,
    pub report: SearchReport,
}

/// Burst-optimality sweep over initial Werner fidelities and budgets.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConjectureProbe {
    pub cells: Vec<ProbeCell>,
    /// Cells where some interleaving beats the Burst plan.
    pub counterexamples: Vec<ProbeCell>,
}

impl ConjectureProbe {
    pub fn burst_always_optimal(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

pub fn conjecture_probe(f0s: &[f64], b_max: u32, s_max: u32) -> Result<ConjectureProbe> {
    let mut cells = Vec::new();
    for &f0 in f0s {
        let initial = crate::state::werner(f0)?;
        for b in 0..=b_max {
            for s in 0..=s_max {
                let report = exhaustive_search(b, s, &initial)?;
                cells.push(ProbeCell { f0, report });
            }
        }
    }
    let counterexamples = cells
        .iter()
        .filter(|c| !c.report.burst_is_optimal)
        .cloned()
        .collect();
    Ok(ConjectureProbe {
        cells,
        counterexamples,
    })
}
