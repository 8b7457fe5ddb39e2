//! Seeded comparison of the fast recursions and closed forms against the
//! brute-force references.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{dm_purify_step, dm_swap_step, dm_teleport_channel};
use crate::error::Result;
use crate::qec::{
    brute_force_logical_error, logical_error_asymmetric, logical_error_by_asymmetry, CodeCatalog,
};
use crate::state::{channel_of, purify_step, swap_step, BellDiagonalState, PauliChannel};

pub const STATE_TOL: f64 = 1e-10;
pub const QEC_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub cases: usize,
    pub max_deviation: f64,
    pub tolerance: f64,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.max_deviation <= self.tolerance
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EquivalenceReport {
    pub seed: u64,
    pub checks: Vec<CheckResult>,
}

impl EquivalenceReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }
}

/// Bell-diagonal state with independent uniform weights, normalized.
pub fn random_bell_state<R: Rng + ?Sized>(rng: &mut R) -> BellDiagonalState {
    loop {
        let w: [f64; 4] = std::array::from_fn(|_| rng.random::<f64>());
        if w.iter().sum::<f64>() > 1e-6 {
            return BellDiagonalState::from_weights(w).expect("positive weights");
        }
    }
}

/// Pauli channel with total error below 0.5 split unevenly over X, Y, Z.
pub fn random_channel<R: Rng + ?Sized>(rng: &mut R) -> PauliChannel {
    let rho = 0.5 * rng.random::<f64>();
    let w: [f64; 3] = std::array::from_fn(|_| rng.random::<f64>() + 1e-9);
    let total: f64 = w.iter().sum();
    PauliChannel::new(rho * w[0] / total, rho * w[1] / total, rho * w[2] / total)
        .expect("weights sum to rho")
}

/// Runs `states` random Bell-diagonal states through the density-matrix
/// circuits and `channels` random channels through every catalog code.
pub fn check_equivalence(
    states: usize,
    channels: usize,
    seed: u64,
    catalog: &CodeCatalog,
) -> Result<EquivalenceReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut purify = 0.0f64;
    let mut swap = 0.0f64;
    let mut teleport = 0.0f64;
    for _ in 0..states {
        let s = random_bell_state(&mut rng);
        let (fast, n_fast) = purify_step(&s)?;
        let (slow, n_slow) = dm_purify_step(&s)?;
        purify = purify.max(fast.max_abs_diff(&slow)).max((n_fast - n_slow).abs());
        swap = swap.max(swap_step(&s).max_abs_diff(&dm_swap_step(&s)?));
        let (want, got) = (channel_of(&s), dm_teleport_channel(&s)?);
        teleport = teleport
            .max((want.p_x - got.p_x).abs())
            .max((want.p_y - got.p_y).abs())
            .max((want.p_z - got.p_z).abs());
    }

    let mut general = 0.0f64;
    let mut by_asymmetry = 0.0f64;
    for _ in 0..channels {
        let ch = random_channel(&mut rng);
        for code in catalog.entries() {
            let brute = brute_force_logical_error(code, &ch)?;
            general = general.max((logical_error_asymmetric(code, &ch)? - brute).abs());
            by_asymmetry = by_asymmetry
                .max((logical_error_by_asymmetry(code, ch.rho(), ch.asymmetry())? - brute).abs());
        }
    }

    let qec_cases = channels * catalog.entries().len();
    let check = |name, cases, max_deviation, tolerance| CheckResult {
        name,
        cases,
        max_deviation,
        tolerance,
    };
    Ok(EquivalenceReport {
        seed,
        checks: vec![
            check("purification", states, purify, STATE_TOL),
            check("swapping", states, swap, STATE_TOL),
            check("teleportation channel", states, teleport, STATE_TOL),
            check("logical error, general channel", qec_cases, general, QEC_TOL),
            check("logical error, asymmetry form", qec_cases, by_asymmetry, QEC_TOL),
        ],
    })
}
