//! Logical error probability of `[[n,k]]` codes under bounded-distance decoding.
//!
//! A code is modelled only by its correction capability `(e_g, e_z)`: it
//! corrects any pattern of up to `e_g` generic Pauli errors plus up to `e_z`
//! further errors provided those are Z errors. Symmetric codes are the
//! `e_z = 0` case with `t = e_g`.

use std::collections::HashSet;
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{check_probability, Error, Result};
use crate::state::PauliChannel;

/// Largest block length accepted by [`brute_force_logical_error`].
pub const BRUTE_FORCE_MAX_N: u32 = 15;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeSpec {
    pub label: String,
    pub n: u32,
    pub k: u32,
    pub e_g: u32,
    pub e_z: u32,
    /// Minimum distance, when known. Informational only.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub distance: Option<u32>,
}

impl CodeSpec {
    pub fn new(label: impl Into<String>, n: u32, k: u32, e_g: u32, e_z: u32) -> Result<Self> {
        let label = label.into();
        let invalid = |reason: String| Error::Invalid {
            what: "code",
            reason,
        };
        if n == 0 || k == 0 {
            return Err(invalid(format!("{label}: n and k must be positive")));
        }
        if k > n {
            return Err(invalid(format!("{label}: k = {k} exceeds n = {n}")));
        }
        if e_g + e_z > n {
            return Err(invalid(format!(
                "{label}: e_g + e_z = {} exceeds n = {n}",
                e_g + e_z
            )));
        }
        Ok(Self {
            label,
            n,
            k,
            e_g,
            e_z,
            distance: None,
        })
    }

    /// Symmetric `[[n,k,d]]` code correcting `t = ⌊(d−1)/2⌋` generic errors.
    pub fn symmetric(label: impl Into<String>, n: u32, k: u32, d: u32) -> Result<Self> {
        let mut code = Self::new(label, n, k, d.saturating_sub(1) / 2, 0)?;
        code.distance = Some(d);
        Ok(code)
    }

    /// Pseudo-code for unencoded transmission: one qubit, no correction.
    pub fn uncoded() -> Self {
        Self {
            label: "Uncoded".into(),
            n: 1,
            k: 1,
            e_g: 0,
            e_z: 0,
            distance: None,
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.e_z == 0
    }

    /// Guaranteed correction capability implied by the distance metadata.
    pub fn t_from_distance(&self) -> Option<u32> {
        self.distance.map(|d| d.saturating_sub(1) / 2)
    }
}

impl fmt::Display for CodeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CodeCatalog {
    entries: Vec<CodeSpec>,
}

impl CodeCatalog {
    pub fn new(entries: Vec<CodeSpec>) -> Result<Self> {
        let mut seen = HashSet::new();
        for e in &entries {
            if !seen.insert(e.label.as_str()) {
                return Err(Error::Invalid {
                    what: "code catalog",
                    reason: format!("duplicate label `{}`", e.label),
                });
            }
        }
        Ok(Self { entries })
    }

    /// Repetition codes, the 5-qubit code, a `t = 2` symmetric code and two
    /// asymmetric codes.
    pub fn builtin() -> Self {
        let entries = [
            ("[[3,1]](0,1)", 3, 0, 1),
            ("[[5,1]](0,2)", 5, 0, 2),
            ("[[5,1]](1,0)", 5, 1, 0),
            ("[[9,1]](1,1)", 9, 1, 1),
            ("[[11,1]](2,0)", 11, 2, 0),
            ("[[13,1]](1,2)", 13, 1, 2),
        ]
        .into_iter()
        .map(|(label, n, e_g, e_z)| CodeSpec::new(label, n, 1, e_g, e_z).expect("builtin code"))
        .collect();
        Self { entries }
    }

    /// Parses one code per line: `label, n, k, e_g, e_z`.
    ///
    /// The four numbers are taken from the right so labels may themselves
    /// contain commas. Blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |reason: String| Error::Invalid {
                what: "catalog line",
                reason: format!("line {}: {reason}", lineno + 1),
            };
            let fields: Vec<&str> = line.rsplitn(5, ',').collect();
            if fields.len() != 5 {
                return Err(bad(format!("expected `label, n, k, e_g, e_z`, got `{line}`")));
            }
            let num = |s: &str| {
                s.trim()
                    .parse::<u32>()
                    .map_err(|e| bad(format!("`{}`: {e}", s.trim())))
            };
            let e_z = num(fields[0])?;
            let e_g = num(fields[1])?;
            let k = num(fields[2])?;
            let n = num(fields[3])?;
            let label = fields[4].trim().trim_matches('"').to_string();
            if label.is_empty() {
                return Err(bad("empty label".into()));
            }
            entries.push(CodeSpec::new(label, n, k, e_g, e_z)?);
        }
        Self::new(entries)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn entries(&self) -> &[CodeSpec] {
        &self.entries
    }

    pub fn get(&self, label: &str) -> Result<&CodeSpec> {
        self.entries
            .iter()
            .find(|c| c.label == label)
            .or_else(|| {
                self.entries
                    .iter()
                    .find(|c| c.label.eq_ignore_ascii_case(label))
            })
            .ok_or_else(|| Error::UnknownCode(label.to_string()))
    }
}

/// Exact binomial coefficient.
pub fn binomial(n: u32, k: u32) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k) as u128;
    let n = n as u128;
    (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

fn binom_f64(n: u32, k: u32) -> f64 {
    binomial(n, k) as f64
}

/// `1 − Σ_{j≤t} C(n,j) ρ^j (1−ρ)^{n−j}` for a code correcting `t` generic errors.
pub fn logical_error_symmetric(n: u32, t: u32, rho: f64) -> Result<f64> {
    check_probability("rho", rho)?;
    if t > n {
        return Err(Error::Invalid {
            what: "symmetric code",
            reason: format!("t = {t} exceeds n = {n}"),
        });
    }
    let ok: f64 = (0..=t)
        .map(|j| binom_f64(n, j) * rho.powf(j as f64) * (1.0 - rho).powf((n - j) as f64))
        .sum();
    Ok((1.0 - ok).max(0.0))
}

/// Logical error probability over a general Pauli channel.
pub fn logical_error_asymmetric(code: &CodeSpec, channel: &PauliChannel) -> Result<f64> {
    let rho = channel.rho();
    check_probability("rho", rho.min(1.0))?;
    if code.e_z == 0 {
        // The inner sum is the binomial expansion of ρ^j.
        return logical_error_symmetric(code.n, code.e_g, rho);
    }
    let p_z = channel.p_z;
    let mut generic = rho - p_z;
    if generic < 0.0 {
        if generic < -1e-15 {
            return Err(Error::Domain {
                name: "rho - p_z",
                value: generic,
                range: "[0, 1]",
            });
        }
        generic = 0.0;
    }
    let n = code.n;
    let mut ok = 0.0;
    for j in 0..=(code.e_g + code.e_z).min(n) {
        let inner: f64 = (j.saturating_sub(code.e_g)..=j)
            .map(|i| binom_f64(j, i) * p_z.powf(i as f64) * generic.powf((j - i) as f64))
            .sum();
        ok += binom_f64(n, j) * (1.0 - rho).powf((n - j) as f64) * inner;
    }
    Ok((1.0 - ok).max(0.0))
}

/// Logical error probability parameterized by `ρ` and the equivalent asymmetry.
///
/// Evaluated term by term as `C(n,j)·(1−ρ)^{n−j}·ρ^j·(2/(A+2))^j·Σ C(j,i)(A/2)^i`
/// and subtracted from one. Tabulated reference curves were produced by this
/// exact order of operations; keep it when editing.
pub fn logical_error_by_asymmetry(code: &CodeSpec, rho: f64, a_eq: f64) -> Result<f64> {
    check_probability("rho", rho)?;
    if a_eq.is_nan() || a_eq < 0.0 {
        return Err(Error::Domain {
            name: "a_eq",
            value: a_eq,
            range: "[0, +inf]",
        });
    }
    let n = code.n;
    let mut ok = 0.0;
    for j in 0..=(code.e_g + code.e_z).min(n) {
        let term = binom_f64(n, j) * (1.0 - rho).powf((n - j) as f64) * rho.powf(j as f64);
        if a_eq.is_infinite() {
            // Only the all-Z pattern (i = j) survives the limit.
            ok += term;
            continue;
        }
        let inner: f64 = (j.saturating_sub(code.e_g)..=j)
            .map(|i| binom_f64(j, i) * (a_eq / 2.0).powf(i as f64))
            .sum();
        ok += term * (2.0 / (a_eq + 2.0)).powf(j as f64) * inner;
    }
    Ok((1.0 - ok).max(0.0))
}

/// Independent oracle: sums the multinomial probability of every uncorrectable
/// `(count_X, count_Y, count_Z)` configuration.
///
/// A configuration is correctable iff `count_X + count_Y ≤ e_g` and
/// `count_X + count_Y + count_Z ≤ e_g + e_z`. X and Y errors can only be
/// absorbed by the generic budget; Z errors fill the Z-only budget first and
/// overflow into whatever generic budget is left. This is the only predicate
/// whose success mass equals the closed-form double sum.
pub fn brute_force_logical_error(code: &CodeSpec, channel: &PauliChannel) -> Result<f64> {
    let n = code.n;
    if n > BRUTE_FORCE_MAX_N {
        return Err(Error::TooLarge {
            what: "n",
            value: n as usize,
            limit: BRUTE_FORCE_MAX_N as usize,
        });
    }
    let p_i = 1.0 - channel.rho();
    check_probability("1 - rho", p_i.max(0.0))?;
    let p_i = p_i.max(0.0);
    let fact: Vec<f64> = (0..=n)
        .scan(1u64, |acc, i| {
            if i > 0 {
                *acc *= i as u64;
            }
            Some(*acc as f64)
        })
        .collect();
    let mut fail = 0.0;
    for x in 0..=n {
        for y in 0..=(n - x) {
            for z in 0..=(n - x - y) {
                let generic = x + y;
                if generic <= code.e_g && generic + z <= code.e_g + code.e_z {
                    continue;
                }
                let w = n - x - y - z;
                let multinomial =
                    fact[n as usize] / (fact[x as usize] * fact[y as usize] * fact[z as usize] * fact[w as usize]);
                fail += multinomial
                    * channel.p_x.powi(x as i32)
                    * channel.p_y.powi(y as i32)
                    * channel.p_z.powi(z as i32)
                    * p_i.powi(w as i32);
            }
        }
    }
    Ok(fail)
}
