//! Monte Carlo model of single-link pair distribution and nested purification.
//!
//! Each trial draws the number of detected qubits `n₀ ~ Binomial(M, p)`.
//! Every purification round pairs the current survivors in memory order,
//! discards the last one if the count is odd, and keeps each pair with the
//! round's success probability `N_i`.
//!
//! Trial `t` draws from ChaCha8 stream `t` under the run seed, so results are
//! bit-identical however trials are split across threads.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Binomial, Distribution};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{check_probability, Error, Result};
use crate::state::{purify_step, BellDiagonalState};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LinkSimConfig {
    /// EPR pairs sent per attempt (memory size `M`).
    pub m: u64,
    /// Probability that a sent qubit is detected and entangled.
    pub p: f64,
    /// Purification rounds.
    pub b: u32,
    pub initial_state: BellDiagonalState,
    pub trials: u64,
    pub seed: u64,
}

impl LinkSimConfig {
    pub fn validate(&self) -> Result<()> {
        check_probability("p", self.p)?;
        if self.m == 0 {
            return Err(Error::Invalid {
                what: "link simulation",
                reason: "m must be positive".into(),
            });
        }
        if self.trials == 0 {
            return Err(Error::Invalid {
                what: "link simulation",
                reason: "trials must be at least 1".into(),
            });
        }
        Ok(())
    }

    /// Success probabilities `N_1 … N_b` of the purification chain.
    pub fn success_probabilities(&self) -> Result<Vec<f64>> {
        let mut state = self.initial_state;
        (0..self.b)
            .map(|_| {
                let (next, n) = purify_step(&state)?;
                state = next;
                Ok(n)
            })
            .collect()
    }
}

/// What happened to the pairs in one purification round of one trial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoundOutcome {
    pub input: u64,
    pub pairs: u64,
    pub discarded: u64,
    pub survivors: u64,
}

/// Runs the purification rounds on `n0` detected qubits.
pub fn purification_rounds<R: Rng + ?Sized>(
    n0: u64,
    success: &[f64],
    rng: &mut R,
) -> Vec<RoundOutcome> {
    let mut current = n0;
    success
        .iter()
        .map(|&n| {
            let pairs = current / 2;
            let survivors = if pairs == 0 {
                0
            } else {
                Binomial::new(pairs, n)
                    .expect("success probability in [0, 1]")
                    .sample(rng)
            };
            let outcome = RoundOutcome {
                input: current,
                pairs,
                discarded: current % 2,
                survivors,
            };
            current = survivors;
            outcome
        })
        .collect()
}

pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Per-trial counts: entry 0 is `n₀`, entry `i` the survivors of round `i`.
pub fn simulate_trial(config: &LinkSimConfig, success: &[f64], trial: u64) -> (Vec<u64>, Vec<RoundOutcome>) {
    let mut rng = trial_rng(config.seed, trial);
    let n0 = Binomial::new(config.m, config.p)
        .expect("p validated")
        .sample(&mut rng);
    let rounds = purification_rounds(n0, success, &mut rng);
    let mut counts = Vec::with_capacity(rounds.len() + 1);
    counts.push(n0);
    counts.extend(rounds.iter().map(|r| r.survivors));
    (counts, rounds)
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
struct Accumulator {
    histograms: Vec<BTreeMap<u64, u64>>,
    sums: Vec<u128>,
    sum_squares: Vec<u128>,
    pairs: Vec<u128>,
    halving_violations: u64,
}

impl Accumulator {
    fn new(rounds: usize) -> Self {
        Self {
            histograms: vec![BTreeMap::new(); rounds + 1],
            sums: vec![0; rounds + 1],
            sum_squares: vec![0; rounds + 1],
            pairs: vec![0; rounds],
            halving_violations: 0,
        }
    }

    fn record(&mut self, counts: &[u64], rounds: &[RoundOutcome]) {
        for (i, &c) in counts.iter().enumerate() {
            *self.histograms[i].entry(c).or_default() += 1;
            self.sums[i] += c as u128;
            self.sum_squares[i] += (c as u128) * (c as u128);
        }
        for (i, r) in rounds.iter().enumerate() {
            self.pairs[i] += r.pairs as u128;
            if r.survivors > r.input / 2 {
                self.halving_violations += 1;
            }
        }
    }

    fn merge(mut self, other: Self) -> Self {
        for (h, o) in self.histograms.iter_mut().zip(other.histograms) {
            for (k, v) in o {
                *h.entry(k).or_default() += v;
            }
        }
        for (a, b) in self.sums.iter_mut().zip(other.sums) {
            *a += b;
        }
        for (a, b) in self.sum_squares.iter_mut().zip(other.sum_squares) {
            *a += b;
        }
        for (a, b) in self.pairs.iter_mut().zip(other.pairs) {
            *a += b;
        }
        self.halving_violations += other.halving_violations;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LinkSimResult {
    pub trials: u64,
    /// Histogram of surviving pairs per round; round 0 is the detected count `n₀`.
    pub yield_histogram: Vec<BTreeMap<u64, u64>>,
    pub mean_yield: Vec<f64>,
    pub yield_variance: Vec<f64>,
    /// Pairs formed in round `i` (index `i − 1`) over all trials.
    pub pairs_formed: Vec<u64>,
    /// Surviving fraction of the pairs formed in each round.
    pub empirical_success: Vec<f64>,
    /// `N_i` from the purification recursion.
    pub analytic_success: Vec<f64>,
    /// Trials in which a round kept more than half of its input; always 0.
    pub halving_violations: u64,
}

impl LinkSimResult {
    /// Distance of the empirical success rate of round `i` (1-based) from the
    /// analytic one, in binomial standard deviations.
    pub fn success_z_score(&self, round: usize) -> f64 {
        let n = self.analytic_success[round - 1];
        let pairs = self.pairs_formed[round - 1] as f64;
        let sigma = (n * (1.0 - n) / pairs).sqrt();
        let diff = self.empirical_success[round - 1] - n;
        if sigma == 0.0 {
            if diff == 0.0 {
                0.0
            } else {
                f64::INFINITY
            }
        } else {
            diff.abs() / sigma
        }
    }
}

pub fn simulate_link(config: &LinkSimConfig) -> Result<LinkSimResult> {
    config.validate()?;
    let success = config.success_probabilities()?;
    let rounds = success.len();
    let acc = (0..config.trials)
        .into_par_iter()
        .fold(
            || Accumulator::new(rounds),
            |mut acc, t| {
                let (counts, outcomes) = simulate_trial(config, &success, t);
                acc.record(&counts, &outcomes);
                acc
            },
        )
        .reduce(|| Accumulator::new(rounds), Accumulator::merge);

    let trials = config.trials as f64;
    let mean_yield: Vec<f64> = acc.sums.iter().map(|&s| s as f64 / trials).collect();
    let yield_variance = acc
        .sum_squares
        .iter()
        .zip(&mean_yield)
        .map(|(&sq, &mean)| {
            if config.trials > 1 {
                (sq as f64 - trials * mean * mean) / (trials - 1.0)
            } else {
                0.0
            }
        })
        .collect();
    let empirical_success = acc
        .pairs
        .iter()
        .zip(&acc.sums[1..])
        .map(|(&pairs, &kept)| {
            if pairs == 0 {
                f64::NAN
            } else {
                kept as f64 / pairs as f64
            }
        })
        .collect();
    Ok(LinkSimResult {
        trials: config.trials,
        yield_histogram: acc.histograms,
        mean_yield,
        yield_variance,
        pairs_formed: acc.pairs.iter().map(|&p| p as u64).collect(),
        empirical_success,
        analytic_success: success,
        halving_violations: acc.halving_violations,
    })
}

/// Binomial PMF over `0..=trials`, computed in log space.
fn binomial_pmf(trials: u64, p: f64, ln_fact: &[f64]) -> Vec<f64> {
    let n = trials as usize;
    if p <= 0.0 || p >= 1.0 {
        let mut pmf = vec![0.0; n + 1];
        pmf[if p >= 1.0 { n } else { 0 }] = 1.0;
        return pmf;
    }
    let (lp, lq) = (p.ln(), (1.0 - p).ln());
    (0..=n)
        .map(|k| {
            (ln_fact[n] - ln_fact[k] - ln_fact[n - k] + k as f64 * lp + (n - k) as f64 * lq).exp()
        })
        .collect()
}

/// Exact distribution of the survivor count after each round.
///
/// Entry 0 is the distribution of `n₀`; entry `i` that of the survivors of
/// round `i`. Costs `O(b·M²)`.
pub fn analytic_yield_pmf(config: &LinkSimConfig) -> Result<Vec<Vec<f64>>> {
    config.validate()?;
    let success = config.success_probabilities()?;
    let m = config.m as usize;
    let mut ln_fact = vec![0.0; m + 1];
    for i in 1..=m {
        ln_fact[i] = ln_fact[i - 1] + (i as f64).ln();
    }
    let mut pmfs = vec![binomial_pmf(config.m, config.p, &ln_fact)];
    for &n in &success {
        let prev = pmfs.last().expect("round 0 present");
        let mut next = vec![0.0; prev.len() / 2 + 1];
        for (count, &weight) in prev.iter().enumerate() {
            if weight == 0.0 {
                continue;
            }
            let pairs = count / 2;
            for (k, q) in binomial_pmf(pairs as u64, n, &ln_fact).into_iter().enumerate() {
                next[k] += weight * q;
            }
        }
        pmfs.push(next);
    }
    Ok(pmfs)
}

/// Expected survivors per round, including the floor of odd counts.
pub fn analytic_mean_yield(config: &LinkSimConfig) -> Result<Vec<f64>> {
    Ok(analytic_yield_pmf(config)?
        .iter()
        .map(|pmf| pmf.iter().enumerate().map(|(k, q)| k as f64 * q).sum())
        .collect())
}
