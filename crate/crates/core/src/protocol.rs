//! Burst-b link protocols: `b` rounds of single-link purification followed by
//! `s` nested swapping levels covering `2^s` hops.

use std::fmt;
use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qec::{logical_error_by_asymmetry, CodeSpec};
use crate::state::{purify_step, swap_step, BellDiagonalState};
use crate::table::fmt_f64;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BurstSchedule {
    pub purifications: u32,
    pub swaps: u32,
    pub initial_state: BellDiagonalState,
}

impl BurstSchedule {
    pub fn new(purifications: u32, swaps: u32, initial_state: BellDiagonalState) -> Self {
        Self {
            purifications,
            swaps,
            initial_state,
        }
    }

    pub fn hops(&self) -> u64 {
        1u64 << self.swaps
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Phase {
    Initial,
    Purify,
    Swap,
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Phase::Initial => "initial",
            Phase::Purify => "purify",
            Phase::Swap => "swap",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TrajectoryPoint {
    pub step_index: u32,
    pub phase: Phase,
    pub state: BellDiagonalState,
    pub rho: f64,
    pub a_eq: f64,
    /// Probability that this step succeeded; 1 for the initial point and swaps.
    pub success_prob: f64,
}

impl TrajectoryPoint {
    fn new(step_index: u32, phase: Phase, state: BellDiagonalState, success_prob: f64) -> Self {
        Self {
            step_index,
            phase,
            state,
            rho: state.error(),
            a_eq: state.asymmetry(),
            success_prob,
        }
    }
}

/// Applies `b` purifications and then `s` swaps, returning every intermediate
/// point starting with the initial state.
pub fn run_burst(schedule: &BurstSchedule) -> Result<Vec<TrajectoryPoint>> {
    let mut state = schedule.initial_state;
    let mut points = Vec::with_capacity((1 + schedule.purifications + schedule.swaps) as usize);
    points.push(TrajectoryPoint::new(0, Phase::Initial, state, 1.0));
    for i in 1..=schedule.purifications {
        let (next, n) = purify_step(&state)?;
        state = next;
        points.push(TrajectoryPoint::new(i, Phase::Purify, state, n));
    }
    for i in 1..=schedule.swaps {
        state = swap_step(&state);
        points.push(TrajectoryPoint::new(
            schedule.purifications + i,
            Phase::Swap,
            state,
            1.0,
        ));
    }
    Ok(points)
}

/// Final state of a Burst schedule.
pub fn final_state(schedule: &BurstSchedule) -> Result<BellDiagonalState> {
    let mut state = schedule.initial_state;
    for _ in 0..schedule.purifications {
        state = purify_step(&state)?.0;
    }
    for _ in 0..schedule.swaps {
        state = swap_step(&state);
    }
    Ok(state)
}

/// Logical error after teleporting a codeword over the pairs produced by `schedule`.
///
/// The uncoded pseudo-code (`n = 1`, no correction) yields `1 − A` of the
/// final state.
pub fn coded_burst_error(schedule: &BurstSchedule, code: &CodeSpec) -> Result<f64> {
    let state = final_state(schedule)?;
    if code.n == 1 && code.e_g == 0 && code.e_z == 0 {
        return Ok(1.0 - state.a());
    }
    logical_error_by_asymmetry(code, state.error(), state.asymmetry())
}

/// Number of classical messages a protocol needs before data can be teleported.
pub trait LatencyModel {
    fn messages_for_burst(&self, b: u32) -> u32;
    fn label(&self) -> &str;
}

/// Forward protocol with pipelined nested purification.
///
/// Anchored on two facts: a single purification completes in three messages
/// (request plus EPR stream, keep message with the first measurements, final
/// measurements), and two or three nested rounds share the same message count.
/// Each message after the keep can carry one more round's results from
/// alternating ends, giving `3 + ⌈(b−1)/2⌉`. The arrow-level diagram behind
/// this is a reconstruction; swap in another model if a different pipelining
/// is assumed.
#[derive(Debug, Clone, Copy, Default)]
pub struct PipelinedForward;

impl LatencyModel for PipelinedForward {
    fn messages_for_burst(&self, b: u32) -> u32 {
        match b {
            // Stream plus the mandatory keep message.
            0 => 2,
            1 => 3,
            b => 3 + (b - 1).div_ceil(2),
        }
    }

    fn label(&self) -> &str {
        "pipelined-forward"
    }
}

/// Back-and-forward variant: one additional message returns the processed
/// qubit over the back-link built from the second EPR stream.
#[derive(Debug, Clone, Copy, Default)]
pub struct BackAndForward<M = PipelinedForward>(pub M);

impl<M: LatencyModel> LatencyModel for BackAndForward<M> {
    fn messages_for_burst(&self, b: u32) -> u32 {
        self.0.messages_for_burst(b) + 1
    }

    fn label(&self) -> &str {
        "back-and-forward"
    }
}

pub fn classical_messages(b: u32, model: &dyn LatencyModel) -> u32 {
    model.messages_for_burst(b)
}

/// Smallest number of purification rounds bringing `ρ` to `target_error` or
/// below, or `None` if `max_steps` rounds are not enough.
pub fn required_purification_steps(
    initial: &BellDiagonalState,
    target_error: f64,
    max_steps: u32,
) -> Result<Option<u32>> {
    if !(target_error > 0.0 && target_error < 1.0) {
        return Err(Error::Domain {
            name: "target_error",
            value: target_error,
            range: "(0, 1)",
        });
    }
    let mut state = *initial;
    for i in 0..=max_steps {
        if state.error() <= target_error {
            return Ok(Some(i));
        }
        if i < max_steps {
            state = purify_step(&state)?.0;
        }
    }
    Ok(None)
}

pub const TRAJECTORY_CSV_HEADER: &str = "step,phase,A,B,C,D,rho,a_eq,success_prob,messages";

/// Writes a trajectory as CSV. `messages` is the classical message count
/// needed to reach each point under `model`; swaps do not add to it.
pub fn write_trajectory_csv<W: Write>(
    out: W,
    points: &[TrajectoryPoint],
    model: &dyn LatencyModel,
) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(TRAJECTORY_CSV_HEADER.split(','))?;
    let mut purifications = 0;
    for p in points {
        if p.phase == Phase::Purify {
            purifications += 1;
        }
        let [a, b, c, d] = p.state.components();
        w.write_record([
            p.step_index.to_string(),
            p.phase.to_string(),
            fmt_f64(a),
            fmt_f64(b),
            fmt_f64(c),
            fmt_f64(d),
            fmt_f64(p.rho),
            fmt_f64(p.a_eq),
            fmt_f64(p.success_prob),
            model.messages_for_burst(purifications).to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}
