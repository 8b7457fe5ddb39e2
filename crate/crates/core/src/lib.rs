//! Hybrid entanglement purification and quantum error correction over
//! teleportation links.
//!
//! Noisy EPR pairs are Bell-diagonal states. Teleporting over such a pair acts
//! on the data qubit as a Pauli channel, and purification turns a symmetric
//! channel into a strongly Z-biased one. This crate tracks that evolution and
//! evaluates how symmetric and asymmetric codes perform on the result:
//!
//! - [`state`]: Bell-diagonal states, the purification and swapping
//!   recursions, and the induced Pauli channel.
//! - [`qec`]: bounded-distance logical error probability of `[[n,k]]` codes
//!   with `(e_g, e_z)` correction capability, plus an enumeration oracle.
//! - [`protocol`]: Burst-b schedules (purify `b` times, then swap), coded
//!   error of a schedule, and classical-message latency.
//! - [`scheduler`]: exhaustive search over purify/swap interleavings.
//! - [`mc_sim`]: seeded Monte Carlo of pair detection and purification yield.
//! - [`oracle`]: exact density-matrix simulation of the same circuits.
//! - [`table`]: sweeps and CSV output.
//!
//! ```
//! use telequec::{protocol::{coded_burst_error, BurstSchedule}, qec::CodeCatalog, state::werner};
//!
//! let catalog = CodeCatalog::builtin();
//! let schedule = BurstSchedule::new(1, 0, werner(0.95).unwrap());
//! let rho_l = coded_burst_error(&schedule, catalog.get("[[13,1]](1,2)").unwrap()).unwrap();
//! assert!(rho_l < 1e-3);
//! ```

pub mod error;
pub mod mc_sim;
pub mod oracle;
pub mod protocol;
pub mod qec;
pub mod scheduler;
pub mod state;
pub mod table;

pub use error::{Error, Result};
pub use state::{BellDiagonalState, PauliChannel};
