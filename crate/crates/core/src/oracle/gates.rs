//! Unitaries on indexed qubits of a small register.
//!
//! Qubit 0 is the most significant bit of the basis index.

use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64 as C64;

use super::matrix::CMatrix;

pub fn i2() -> CMatrix {
    CMatrix::identity(2)
}

pub fn x() -> CMatrix {
    CMatrix::from_real(&[&[0.0, 1.0], &[1.0, 0.0]])
}

pub fn y() -> CMatrix {
    let z = C64::new(0.0, 0.0);
    CMatrix::from_rows(&[&[z, C64::new(0.0, -1.0)], &[C64::new(0.0, 1.0), z]])
}

pub fn z() -> CMatrix {
    CMatrix::from_real(&[&[1.0, 0.0], &[0.0, -1.0]])
}

/// `H = (X + Z)/√2`
pub fn h() -> CMatrix {
    CMatrix::from_real(&[&[FRAC_1_SQRT_2, FRAC_1_SQRT_2], &[FRAC_1_SQRT_2, -FRAC_1_SQRT_2]])
}

/// `R_x(θ) = cos(θ/2) I − i sin(θ/2) X`
pub fn rx(theta: f64) -> CMatrix {
    let c = C64::new((theta / 2.0).cos(), 0.0);
    let s = C64::new(0.0, -(theta / 2.0).sin());
    CMatrix::from_rows(&[&[c, s], &[s, c]])
}

/// Embeds a single-qubit gate acting on `target` of an `n`-qubit register.
pub fn on_qubit(gate: &CMatrix, target: usize, n: usize) -> CMatrix {
    assert!(target < n, "qubit {target} outside {n}-qubit register");
    (0..n).fold(CMatrix::identity(1), |acc, q| {
        acc.kron(if q == target { gate } else { &IDENTITY_2 })
    })
}

static IDENTITY_2: std::sync::LazyLock<CMatrix> = std::sync::LazyLock::new(i2);

/// CNOT with the given control and target on an `n`-qubit register.
pub fn cnot(control: usize, target: usize, n: usize) -> CMatrix {
    assert!(control != target && control < n && target < n);
    let dim = 1 << n;
    let cbit = 1 << (n - 1 - control);
    let tbit = 1 << (n - 1 - target);
    let mut m = CMatrix::zeros(dim);
    for col in 0..dim {
        let row = if col & cbit != 0 { col ^ tbit } else { col };
        m[(row, col)] = C64::new(1.0, 0.0);
    }
    m
}

/// Projector onto computational-basis values `bits` of `qubits`.
pub fn projector(qubits: &[usize], bits: &[u8], n: usize) -> CMatrix {
    let dim = 1 << n;
    let mut m = CMatrix::zeros(dim);
    for idx in 0..dim {
        let hit = qubits
            .iter()
            .zip(bits)
            .all(|(&q, &b)| ((idx >> (n - 1 - q)) & 1) as u8 == b);
        if hit {
            m[(idx, idx)] = C64::new(1.0, 0.0);
        }
    }
    m
}
