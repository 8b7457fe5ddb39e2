//! Tabular sweeps and their CSV encodings.
//!
//! Every table starts with a header row; floats are written with 17
//! significant digits so values survive a round trip unchanged.

use std::io::Write;

use serde::Serialize;

use crate::error::Result;
use crate::protocol::{coded_burst_error, BurstSchedule};
use crate::qec::CodeSpec;
use crate::state::{purify_step, swap_step, werner};

/// Schema version of the CSV tables written by this module.
pub const CSV_SCHEMA_VERSION: u32 = 1;

pub fn fmt_f64(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else if x.is_nan() {
        "nan".into()
    } else if x > 0.0 {
        "inf".into()
    } else {
        "-inf".into()
    }
}

/// One point of a swap-level sweep under a Burst schedule.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BurstRow {
    pub f0: f64,
    pub burst: u32,
    /// Swap level; 0 is the raw Werner pair before any purification.
    pub step: u32,
    pub rho: f64,
    pub a_eq: f64,
}

/// `ρ_i` and `A_eq,i` against swap level for every `(f0, b)` combination.
pub fn burst_series(f0s: &[f64], bursts: &[u32], s_max: u32) -> Result<Vec<BurstRow>> {
    let mut rows = Vec::new();
    for &f0 in f0s {
        let raw = werner(f0)?;
        for &b in bursts {
            rows.push(BurstRow {
                f0,
                burst: b,
                step: 0,
                rho: raw.error(),
                a_eq: raw.asymmetry(),
            });
            let mut state = raw;
            for _ in 0..b {
                state = purify_step(&state)?.0;
            }
            for step in 1..=s_max {
                state = swap_step(&state);
                rows.push(BurstRow {
                    f0,
                    burst: b,
                    step,
                    rho: state.error(),
                    a_eq: state.asymmetry(),
                });
            }
        }
    }
    Ok(rows)
}

pub fn write_burst_csv<W: Write>(out: W, rows: &[BurstRow]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["f0", "burst", "step", "hops", "rho", "a_eq"])?;
    for r in rows {
        w.write_record([
            fmt_f64(r.f0),
            r.burst.to_string(),
            r.step.to_string(),
            (1u64 << r.step).to_string(),
            fmt_f64(r.rho),
            fmt_f64(r.a_eq),
        ])?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CodeRow {
    pub rho0: f64,
    pub code: String,
    pub rho_l: f64,
}

/// Logical error of each code against the initial error `ρ₀`, after `b`
/// purifications and `s` swaps of a Werner pair. An uncoded column comes first.
pub fn code_curves(rho0s: &[f64], b: u32, s: u32, codes: &[CodeSpec]) -> Result<Vec<CodeRow>> {
    let uncoded = CodeSpec::uncoded();
    let mut rows = Vec::new();
    for code in std::iter::once(&uncoded).chain(codes) {
        for &rho0 in rho0s {
            let schedule = BurstSchedule::new(b, s, werner(1.0 - rho0)?);
            rows.push(CodeRow {
                rho0,
                code: code.label.clone(),
                rho_l: coded_burst_error(&schedule, code)?,
            });
        }
    }
    Ok(rows)
}

pub fn write_code_csv<W: Write>(out: W, rows: &[CodeRow]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["rho0", "code", "rho_l"])?;
    for r in rows {
        w.write_record([fmt_f64(r.rho0), r.code.clone(), fmt_f64(r.rho_l)])?;
    }
    w.flush()?;
    Ok(())
}
