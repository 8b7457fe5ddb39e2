//! Exact density-matrix reference for teleportation, purification and swapping.
//!
//! Everything here is deliberately brute force: states are full `2^q × 2^q`
//! complex matrices, circuits are products of embedded unitaries, and
//! measurements are projections summed over every outcome. The results serve
//! as an independent check on the closed-form recursions in [`crate::state`].

pub mod equivalence;
pub mod gates;
pub mod matrix;

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2};

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::state::{BellDiagonalState, PauliChannel};

pub use matrix::CMatrix;

pub const MAX_QUBITS: usize = 4;
const HERMITIAN_TOL: f64 = 1e-12;
const TRACE_TOL: f64 = 1e-12;
const PSD_TOL: f64 = -1e-10;
const FIT_TOL: f64 = 1e-10;
const MIN_PROJECTION: f64 = 1e-14;

#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    qubits: usize,
    m: CMatrix,
}

impl DensityMatrix {
    pub fn new(m: CMatrix) -> Result<Self> {
        let dim = m.dim();
        if !dim.is_power_of_two() || dim < 2 {
            return Err(Error::Invalid {
                what: "density matrix",
                reason: format!("dimension {dim} is not 2^q"),
            });
        }
        let qubits = dim.trailing_zeros() as usize;
        if qubits > MAX_QUBITS {
            return Err(Error::TooLarge {
                what: "qubits",
                value: qubits,
                limit: MAX_QUBITS,
            });
        }
        let dm = Self { qubits, m };
        dm.check()?;
        Ok(dm)
    }

    fn unchecked(m: CMatrix) -> Self {
        Self {
            qubits: m.dim().trailing_zeros() as usize,
            m,
        }
    }

    pub fn qubits(&self) -> usize {
        self.qubits
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.m
    }

    /// Hermitian, unit trace and positive semidefinite within tolerance.
    pub fn check(&self) -> Result<()> {
        let herm = self.m.max_abs_diff(&self.m.adjoint());
        if herm > HERMITIAN_TOL {
            return Err(Error::Numerical(format!("not Hermitian (deviation {herm:e})")));
        }
        let tr = self.m.trace();
        if (tr - C64::new(1.0, 0.0)).norm() > TRACE_TOL {
            return Err(Error::Numerical(format!("trace {tr} differs from 1")));
        }
        let min = self.m.hermitian_eigenvalues()[0];
        if min < PSD_TOL {
            return Err(Error::Numerical(format!("negative eigenvalue {min:e}")));
        }
        Ok(())
    }

    pub fn tensor(&self, other: &Self) -> Result<Self> {
        Self::new(self.m.kron(&other.m))
    }

    pub fn apply(&self, u: &CMatrix) -> Self {
        Self::unchecked(self.m.conjugate_by(u))
    }

    /// Reduced state on `keep`, in the given order.
    pub fn partial_trace(&self, keep: &[usize]) -> Self {
        Self::unchecked(partial_trace(&self.m, self.qubits, keep))
    }
}

/// Partial trace of an unnormalized `n`-qubit operator, keeping `keep`.
fn partial_trace(m: &CMatrix, n: usize, keep: &[usize]) -> CMatrix {
    let k = keep.len();
    let traced: Vec<usize> = (0..n).filter(|q| !keep.contains(q)).collect();
    let bit = |idx: usize, q: usize| (idx >> (n - 1 - q)) & 1;
    let reduced_index = |idx: usize| keep.iter().fold(0, |acc, &q| (acc << 1) | bit(idx, q));
    let mut out = CMatrix::zeros(1 << k);
    let dim = 1 << n;
    for i in 0..dim {
        for j in 0..dim {
            if traced.iter().all(|&q| bit(i, q) == bit(j, q)) {
                out[(reduced_index(i), reduced_index(j))] += m[(i, j)];
            }
        }
    }
    out
}

/// Bell vectors in `Φ⁺, Ψ⁻, Ψ⁺, Φ⁻` order over basis `|00⟩, |01⟩, |10⟩, |11⟩`.
pub fn bell_basis() -> [[C64; 4]; 4] {
    let s = FRAC_1_SQRT_2;
    let v = |a: f64, b: f64, c: f64, d: f64| {
        [C64::new(a, 0.0), C64::new(b, 0.0), C64::new(c, 0.0), C64::new(d, 0.0)]
    };
    [
        v(s, 0.0, 0.0, s),
        v(0.0, s, -s, 0.0),
        v(0.0, s, s, 0.0),
        v(s, 0.0, 0.0, -s),
    ]
}

pub fn dm_from_bell_diagonal(state: &BellDiagonalState) -> DensityMatrix {
    let basis = bell_basis();
    let m = state
        .components()
        .iter()
        .zip(&basis)
        .fold(CMatrix::zeros(4), |acc, (&p, v)| {
            &acc + &CMatrix::outer(v).scale(C64::new(p, 0.0))
        });
    DensityMatrix::unchecked(m)
}

/// Bell-basis diagonal of a two-qubit state, and the largest off-diagonal
/// Bell-basis element.
pub fn bell_coefficients(dm: &DensityMatrix) -> ([f64; 4], f64) {
    assert_eq!(dm.qubits(), 2, "Bell coefficients need a two-qubit state");
    let basis = bell_basis();
    let mut diag = [0.0; 4];
    let mut off: f64 = 0.0;
    for (i, u) in basis.iter().enumerate() {
        for (j, v) in basis.iter().enumerate() {
            let e = dm.matrix().sandwich(u, v);
            if i == j {
                diag[i] = e.re;
                off = off.max(e.im.abs());
            } else {
                off = off.max(e.norm());
            }
        }
    }
    (diag, off)
}

fn to_bell_state(dm: &DensityMatrix) -> Result<BellDiagonalState> {
    dm.check()?;
    let (diag, off) = bell_coefficients(dm);
    if off > FIT_TOL {
        return Err(Error::Numerical(format!(
            "state is not Bell-diagonal (off-diagonal {off:e})"
        )));
    }
    BellDiagonalState::from_weights(diag.map(|x| x.max(0.0)))
}

/// One DEJMPS round simulated on the full four-qubit register.
///
/// Pairs (0,1) and (2,3) both hold `state`. Rotations `R_x(π/2)` and
/// `R_x(−π/2)` are applied on each side, then CNOTs 0→2 and 1→3; the pair is
/// kept when qubits 2 and 3 agree.
pub fn dm_purify_step(state: &BellDiagonalState) -> Result<(BellDiagonalState, f64)> {
    let pair = dm_from_bell_diagonal(state);
    let rho = pair.tensor(&pair)?;
    let n = 4;
    let circuit = [
        gates::on_qubit(&gates::rx(FRAC_PI_2), 0, n),
        gates::on_qubit(&gates::rx(-FRAC_PI_2), 1, n),
        gates::on_qubit(&gates::rx(FRAC_PI_2), 2, n),
        gates::on_qubit(&gates::rx(-FRAC_PI_2), 3, n),
        gates::cnot(0, 2, n),
        gates::cnot(1, 3, n),
    ];
    let evolved = circuit.iter().fold(rho, |r, u| r.apply(u));

    let mut kept = CMatrix::zeros(4);
    let mut success = 0.0;
    for bits in [[0u8, 0], [1, 1]] {
        let p = gates::projector(&[2, 3], &bits, n);
        let projected = evolved.m.conjugate_by(&p);
        success += projected.trace().re;
        kept = &kept + &partial_trace(&projected, n, &[0, 1]);
    }
    if success < MIN_PROJECTION {
        return Err(Error::Numerical(format!(
            "purification success probability {success:e} too small"
        )));
    }
    let out = DensityMatrix::unchecked(kept.scale(C64::new(1.0 / success, 0.0)));
    Ok((to_bell_state(&out)?, success))
}

/// Teleports a qubit through the pair: qubit 0 is the input, (1,2) the pair.
///
/// Applies `CX_{0,1}` then `H_0`, measures qubits 0 and 1 and corrects qubit
/// 2 with `X^{m₁} Z^{m₀}`, summing over all four outcomes.
fn teleport(input: &CMatrix, pair: &DensityMatrix) -> CMatrix {
    let n = 3;
    let rho = input.kron(pair.matrix());
    let u = &gates::on_qubit(&gates::h(), 0, n) * &gates::cnot(0, 1, n);
    let evolved = rho.conjugate_by(&u);
    let mut out = CMatrix::zeros(2);
    for m0 in 0..2u8 {
        for m1 in 0..2u8 {
            let p = gates::projector(&[0, 1], &[m0, m1], n);
            let mut correction = CMatrix::identity(8);
            if m1 == 1 {
                correction = &gates::on_qubit(&gates::x(), 2, n) * &correction;
            }
            if m0 == 1 {
                correction = &gates::on_qubit(&gates::z(), 2, n) * &correction;
            }
            let branch = evolved.conjugate_by(&p).conjugate_by(&correction);
            out = &out + &partial_trace(&branch, n, &[2]);
        }
    }
    out
}

/// Pauli channel realized by teleporting over the pair, fitted from
/// process tomography on `|0⟩, |1⟩, |+⟩, |+i⟩`.
pub fn dm_teleport_channel(state: &BellDiagonalState) -> Result<PauliChannel> {
    let pair = dm_from_bell_diagonal(state);
    let half = C64::new(0.5, 0.0);
    let ket = |a: C64, b: C64| CMatrix::outer(&[a, b]);
    let one = C64::new(1.0, 0.0);
    let zero = C64::new(0.0, 0.0);
    let s = C64::new(FRAC_1_SQRT_2, 0.0);
    let e0 = teleport(&ket(one, zero), &pair);
    let e1 = teleport(&ket(zero, one), &pair);
    let e_plus = teleport(&ket(s, s), &pair);
    let e_plus_i = teleport(&ket(s, C64::new(0.0, FRAC_1_SQRT_2)), &pair);

    // Channel images of the Pauli basis, by linearity.
    let e_i = &e0 + &e1;
    let e_z = &e0 - &e1;
    let e_x = &e_plus.scale(C64::new(2.0, 0.0)) - &e_i;
    let e_y = &e_plus_i.scale(C64::new(2.0, 0.0)) - &e_i;

    let paulis = [gates::i2(), gates::x(), gates::y(), gates::z()];
    let images = [e_i, e_x, e_y, e_z];
    let mut ptm = [[0.0; 4]; 4];
    let mut residual: f64 = 0.0;
    for (k, sk) in paulis.iter().enumerate() {
        for (l, el) in images.iter().enumerate() {
            let v = (sk * el).trace() * half;
            ptm[k][l] = v.re;
            residual = residual.max(v.im.abs());
            if k != l {
                residual = residual.max(v.re.abs());
            }
        }
    }
    residual = residual.max((ptm[0][0] - 1.0).abs());
    if residual > FIT_TOL {
        return Err(Error::Numerical(format!(
            "teleportation map is not a Pauli channel (residual {residual:e})"
        )));
    }
    let (lx, ly, lz) = (ptm[1][1], ptm[2][2], ptm[3][3]);
    let clamp = |p: f64| p.clamp(0.0, 1.0);
    PauliChannel::new(
        clamp((1.0 + lx - ly - lz) / 4.0),
        clamp((1.0 - lx + ly - lz) / 4.0),
        clamp((1.0 - lx - ly + lz) / 4.0),
    )
}

/// Entanglement swapping on the full four-qubit register.
///
/// Pairs (0,1) and (2,3) both hold `state`; qubit 1 is teleported through
/// pair (2,3) with a Bell measurement on (1,2) and corrections on qubit 3.
/// Returns the Bell-diagonal state of pair (0,3).
pub fn dm_swap_step(state: &BellDiagonalState) -> Result<BellDiagonalState> {
    let pair = dm_from_bell_diagonal(state);
    let rho = pair.tensor(&pair)?;
    let n = 4;
    let u = &gates::on_qubit(&gates::h(), 1, n) * &gates::cnot(1, 2, n);
    let evolved = rho.m.conjugate_by(&u);
    let mut out = CMatrix::zeros(4);
    let mut total = 0.0;
    for m1 in 0..2u8 {
        for m2 in 0..2u8 {
            let p = gates::projector(&[1, 2], &[m1, m2], n);
            let mut correction = CMatrix::identity(16);
            if m2 == 1 {
                correction = &gates::on_qubit(&gates::x(), 3, n) * &correction;
            }
            if m1 == 1 {
                correction = &gates::on_qubit(&gates::z(), 3, n) * &correction;
            }
            let branch = evolved.conjugate_by(&p);
            total += branch.trace().re;
            let corrected = branch.conjugate_by(&correction);
            out = &out + &partial_trace(&corrected, n, &[0, 3]);
        }
    }
    if total < MIN_PROJECTION {
        return Err(Error::Numerical(format!("swap outcome mass {total:e} too small")));
    }
    to_bell_state(&DensityMatrix::unchecked(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::state::{purify_step, swap_step, werner};

    #[test]
    fn perfect_pair_is_phi_plus() {
        let dm = dm_from_bell_diagonal(&BellDiagonalState::PERFECT);
        let phi = CMatrix::outer(&bell_basis()[0]);
        assert!(dm.matrix().max_abs_diff(&phi) < 1e-15);
        dm.check().unwrap();
    }

    #[test]
    fn maximally_mixed_is_identity_over_four() {
        let dm = dm_from_bell_diagonal(&BellDiagonalState::MAXIMALLY_MIXED);
        let id = CMatrix::identity(4).scale(C64::new(0.25, 0.0));
        assert!(dm.matrix().max_abs_diff(&id) < 1e-15);
    }

    #[test]
    fn werner_bell_diagonal_reads_back() {
        let w = werner(0.8).unwrap();
        let (diag, off) = bell_coefficients(&dm_from_bell_diagonal(&w));
        for (x, y) in diag.iter().zip(w.components()) {
            assert!((x - y).abs() < 1e-15);
        }
        assert!(off < 1e-15);
    }

    #[test]
    fn purification_circuit_matches_recursion() {
        let (s, n) = dm_purify_step(&BellDiagonalState::PERFECT).unwrap();
        assert!(s.max_abs_diff(&BellDiagonalState::PERFECT) < 1e-12);
        assert!((n - 1.0).abs() < 1e-12);

        for f in [0.8, 0.9] {
            let w = werner(f).unwrap();
            let (dm, dn) = dm_purify_step(&w).unwrap();
            let (rec, rn) = purify_step(&w).unwrap();
            assert!(dm.max_abs_diff(&rec) < 1e-10, "{dm} vs {rec}");
            assert!((dn - rn).abs() < 1e-10);
        }
        let (dm, _) = dm_purify_step(&werner(0.8).unwrap()).unwrap();
        assert!((dm.a() - 0.838150289017341).abs() < 1e-10);
    }

    #[test]
    fn asymmetric_state_purifies_like_recursion() {
        let s = BellDiagonalState::from_weights([0.6, 0.05, 0.15, 0.2]).unwrap();
        let (dm, dn) = dm_purify_step(&s).unwrap();
        let (rec, rn) = purify_step(&s).unwrap();
        assert!(dm.max_abs_diff(&rec) < 1e-10, "{dm} vs {rec}");
        assert!((dn - rn).abs() < 1e-10);
    }

    #[test]
    fn teleport_channels() {
        let ch = dm_teleport_channel(&BellDiagonalState::PERFECT).unwrap();
        assert!(ch.rho() < 1e-12);

        let psi_plus = BellDiagonalState::new(0.0, 0.0, 1.0, 0.0).unwrap();
        let ch = dm_teleport_channel(&psi_plus).unwrap();
        assert!((ch.p_x - 1.0).abs() < 1e-12 && ch.p_y < 1e-12 && ch.p_z < 1e-12);

        let ch = dm_teleport_channel(&werner(0.9).unwrap()).unwrap();
        for p in [ch.p_x, ch.p_y, ch.p_z] {
            assert!((p - 1.0 / 30.0).abs() < 1e-12);
        }

        let s = BellDiagonalState::from_weights([0.7, 0.05, 0.1, 0.15]).unwrap();
        let ch = dm_teleport_channel(&s).unwrap();
        assert!((ch.p_x - s.c()).abs() < 1e-10);
        assert!((ch.p_y - s.b()).abs() < 1e-10);
        assert!((ch.p_z - s.d()).abs() < 1e-10);
    }

    #[test]
    fn swap_circuit_matches_recursion() {
        let out = dm_swap_step(&BellDiagonalState::PERFECT).unwrap();
        assert!(out.max_abs_diff(&BellDiagonalState::PERFECT) < 1e-12);

        let (p, _) = purify_step(&werner(0.9).unwrap()).unwrap();
        let out = dm_swap_step(&p).unwrap();
        assert!(out.max_abs_diff(&swap_step(&p)) < 1e-10);
        assert!((out.asymmetry() - 25.1428571428571).abs() < 1e-9);

        let s = BellDiagonalState::from_weights([0.55, 0.1, 0.2, 0.15]).unwrap();
        assert!(dm_swap_step(&s).unwrap().max_abs_diff(&swap_step(&s)) < 1e-10);
    }

    #[test]
    fn density_matrix_validation() {
        let bad = CMatrix::from_real(&[&[0.5, 0.0], &[0.0, 0.4]]);
        assert!(DensityMatrix::new(bad).is_err());
        let neg = CMatrix::from_real(&[&[1.2, 0.0], &[0.0, -0.2]]);
        assert!(DensityMatrix::new(neg).is_err());
        let big = CMatrix::identity(32).scale(C64::new(1.0 / 32.0, 0.0));
        assert!(matches!(DensityMatrix::new(big), Err(Error::TooLarge { .. })));
        let ok = CMatrix::identity(2).scale(C64::new(0.5, 0.0));
        assert_eq!(DensityMatrix::new(ok).unwrap().qubits(), 1);
    }

    #[test]
    fn partial_trace_of_product() {
        let a = dm_from_bell_diagonal(&werner(0.7).unwrap());
        let b = dm_from_bell_diagonal(&werner(0.9).unwrap());
        let ab = a.tensor(&b).unwrap();
        assert!(ab.partial_trace(&[0, 1]).matrix().max_abs_diff(a.matrix()) < 1e-15);
        assert!(ab.partial_trace(&[2, 3]).matrix().max_abs_diff(b.matrix()) < 1e-15);
    }
}
