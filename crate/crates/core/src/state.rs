//! Bell-diagonal two-qubit states and their evolution.
//!
//! A state is the probability vector `(A, B, C, D)` over the Bell basis in
//! the order `Φ⁺, Ψ⁻, Ψ⁺, Φ⁻`. `A` is the fidelity of the pair and
//! `B + C + D` the error probability of the teleportation channel it induces.
//!
//! The step functions keep the exact floating-point evaluation order of the
//! reference recursions: figure tables downstream are compared at relative
//! precision where a single reordered addition is visible.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{check_probability, Error, Result};

/// Tolerance on `A + B + C + D = 1` accepted by [`BellDiagonalState::new`].
pub const NORMALIZATION_TOLERANCE: f64 = 1e-12;

/// Largest drift of `A+B+C+D` from one that [`swap_step`] lets through.
pub const SWAP_DRIFT_GUARD: f64 = 1e-13;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BellDiagonalState {
    a: f64,
    b: f64,
    c: f64,
    d: f64,
}

impl BellDiagonalState {
    /// The perfect pair `|Φ⁺⟩`.
    pub const PERFECT: Self = Self {
        a: 1.0,
        b: 0.0,
        c: 0.0,
        d: 0.0,
    };

    /// The maximally mixed two-qubit state.
    pub const MAXIMALLY_MIXED: Self = Self {
        a: 0.25,
        b: 0.25,
        c: 0.25,
        d: 0.25,
    };

    /// Builds a state from its Bell coefficients, checking range and normalization.
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        for (name, v) in [("A", a), ("B", b), ("C", c), ("D", d)] {
            check_probability(name, v)?;
        }
        let sum = a + b + c + d;
        if (sum - 1.0).abs() > NORMALIZATION_TOLERANCE {
            return Err(Error::Invalid {
                what: "Bell-diagonal state",
                reason: format!("coefficients sum to {sum}, expected 1"),
            });
        }
        Ok(Self { a, b, c, d })
    }

    /// Normalizes non-negative weights into a state.
    pub fn from_weights(weights: [f64; 4]) -> Result<Self> {
        if weights.iter().any(|w| !w.is_finite() || *w < 0.0) {
            return Err(Error::Invalid {
                what: "Bell-diagonal weights",
                reason: format!("{weights:?} must be finite and non-negative"),
            });
        }
        let total: f64 = weights.iter().sum();
        if total <= 0.0 {
            return Err(Error::Invalid {
                what: "Bell-diagonal weights",
                reason: "weights sum to zero".into(),
            });
        }
        let [a, b, c, d] = weights.map(|w| w / total);
        Ok(Self { a, b, c, d })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn d(&self) -> f64 {
        self.d
    }

    /// Coefficients in `Φ⁺, Ψ⁻, Ψ⁺, Φ⁻` order.
    pub fn components(&self) -> [f64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn fidelity(&self) -> f64 {
        self.a
    }

    /// Error probability `ρ = B + C + D`.
    ///
    /// Summed from the error coefficients rather than taken as `1 − A`, which
    /// would flush to zero once the pair is within an ulp of perfect.
    pub fn error(&self) -> f64 {
        self.b + self.c + self.d
    }

    /// Equivalent asymmetry of the induced teleportation channel.
    pub fn asymmetry(&self) -> f64 {
        self.channel().asymmetry()
    }

    pub fn channel(&self) -> PauliChannel {
        channel_of(self)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.components()
            .iter()
            .zip(other.components())
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max)
    }
}

impl fmt::Display for BellDiagonalState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(A={}, B={}, C={}, D={})",
            self.a, self.b, self.c, self.d
        )
    }
}

/// Pauli error probabilities of a single-qubit channel.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PauliChannel {
    pub p_x: f64,
    pub p_y: f64,
    pub p_z: f64,
}

impl PauliChannel {
    pub const IDENTITY: Self = Self {
        p_x: 0.0,
        p_y: 0.0,
        p_z: 0.0,
    };

    pub fn new(p_x: f64, p_y: f64, p_z: f64) -> Result<Self> {
        check_probability("p_x", p_x)?;
        check_probability("p_y", p_y)?;
        check_probability("p_z", p_z)?;
        let rho = p_x + p_y + p_z;
        if rho > 1.0 + NORMALIZATION_TOLERANCE {
            return Err(Error::Domain {
                name: "p_x + p_y + p_z",
                value: rho,
                range: "[0, 1]",
            });
        }
        Ok(Self { p_x, p_y, p_z })
    }

    pub fn depolarizing(rho: f64) -> Result<Self> {
        check_probability("rho", rho)?;
        Self::new(rho / 3.0, rho / 3.0, rho / 3.0)
    }

    /// Channel with `p_x = p_y` and `p_z = a_eq·ρ/(a_eq + 2)`.
    ///
    /// `a_eq = +∞` yields the pure phase-flip channel.
    pub fn from_asymmetry(rho: f64, a_eq: f64) -> Result<Self> {
        check_probability("rho", rho)?;
        if a_eq.is_nan() || a_eq < 0.0 {
            return Err(Error::Domain {
                name: "a_eq",
                value: a_eq,
                range: "[0, +inf]",
            });
        }
        if a_eq.is_infinite() {
            return Self::new(0.0, 0.0, rho);
        }
        let generic = rho / (a_eq + 2.0);
        Self::new(generic, generic, a_eq * rho / (a_eq + 2.0))
    }

    /// Total error probability `ρ = p_x + p_y + p_z`.
    pub fn rho(&self) -> f64 {
        self.p_x + self.p_y + self.p_z
    }

    /// `A_eq = 2·p_z/(p_x + p_y)`.
    ///
    /// Returns 1 for the identity channel and `+∞` when only Z errors occur.
    pub fn asymmetry(&self) -> f64 {
        let generic = self.p_x + self.p_y;
        if generic == 0.0 {
            if self.p_z > 0.0 {
                f64::INFINITY
            } else {
                1.0
            }
        } else {
            2.0 * self.p_z / generic
        }
    }
}

/// Werner state `(F, (1−F)/3, (1−F)/3, (1−F)/3)`.
pub fn werner(fidelity: f64) -> Result<BellDiagonalState> {
    check_probability("fidelity", fidelity)?;
    let e = (1.0 - fidelity) / 3.0;
    Ok(BellDiagonalState {
        a: fidelity,
        b: e,
        c: e,
        d: e,
    })
}

/// One round of symmetric DEJMPS purification.
///
/// Returns the surviving pair's state and the success probability
/// `N = (A+B)² + (C+D)²`.
pub fn purify_step(state: &BellDiagonalState) -> Result<(BellDiagonalState, f64)> {
    let BellDiagonalState { a, b, c, d } = *state;
    let ab = a + b;
    let cd = c + d;
    let n = ab * ab + cd * cd;
    if !(n > 0.0) {
        return Err(Error::Degenerate(n));
    }
    let next = BellDiagonalState {
        a: (a * a + b * b) / n,
        b: 2.0 * c * d / n,
        c: (c * c + d * d) / n,
        d: 2.0 * a * b / n,
    };
    Ok((next, n))
}

/// Entanglement swapping of two identically distributed pairs.
///
/// The raw output sums to `(A+B+C+D)²`, so rounding drift in the sum doubles
/// at every level. Once the drift exceeds [`SWAP_DRIFT_GUARD`] the output is
/// divided by that square; below it the products are returned untouched, which
/// keeps short chains bit-identical to the plain recursion.
pub fn swap_step(state: &BellDiagonalState) -> BellDiagonalState {
    let BellDiagonalState { a, b, c, d } = *state;
    let next = BellDiagonalState {
        a: a * a + b * b + c * c + d * d,
        b: 2.0 * a * b + 2.0 * c * d,
        c: 2.0 * a * c + 2.0 * b * d,
        d: 2.0 * a * d + 2.0 * c * b,
    };
    let total = a + b + c + d;
    if (total - 1.0).abs() <= SWAP_DRIFT_GUARD {
        return next;
    }
    let norm = total * total;
    BellDiagonalState {
        a: next.a / norm,
        b: next.b / norm,
        c: next.c / norm,
        d: next.d / norm,
    }
}

/// Teleporting over the pair is a Pauli channel with `(p_x, p_y, p_z) = (C, B, D)`.
pub fn channel_of(state: &BellDiagonalState) -> PauliChannel {
    PauliChannel {
        p_x: state.c,
        p_y: state.b,
        p_z: state.d,
    }
}

/// Asymmetry after one purification of a Werner pair with error `rho0`.
pub fn one_step_asymmetry(rho0: f64) -> Result<f64> {
    if !(rho0 > 0.0 && rho0 < 1.0) {
        return Err(Error::Domain {
            name: "rho0",
            value: rho0,
            range: "(0, 1)",
        });
    }
    Ok(3.0 * (1.0 / rho0 - 1.0))
}

/// Error probability after one purification of a Werner pair with error `rho0`.
pub fn one_step_error(rho0: f64) -> Result<f64> {
    check_open_unit_right(rho0)?;
    Ok(2.0 * rho0 * (3.0 - rho0) / (9.0 - 12.0 * rho0 + 8.0 * rho0 * rho0))
}

/// The state reached by one purification of a Werner pair with error `rho0`.
pub fn one_step_werner_components(rho0: f64) -> Result<BellDiagonalState> {
    check_open_unit_right(rho0)?;
    let f0 = 1.0 - rho0;
    let e2 = rho0 * rho0;
    BellDiagonalState::from_weights([
        f0 * f0 + e2 / 9.0,
        2.0 * e2 / 9.0,
        2.0 * e2 / 9.0,
        2.0 * f0 * rho0 / 3.0,
    ])
}

fn check_open_unit_right(rho0: f64) -> Result<()> {
    if (0.0..1.0).contains(&rho0) {
        Ok(())
    } else {
        Err(Error::Domain {
            name: "rho0",
            value: rho0,
            range: "[0, 1)",
        })
    }
}
