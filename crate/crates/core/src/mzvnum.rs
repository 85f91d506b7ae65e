//! Double-precision truncated multiple zeta sums and a numeric check that the
//! double shuffle generators evaluate to (nearly) zero.

use num::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hcore::{Composition, HVector};
use crate::report::Status;
use crate::stuffle::{eds_generators, is_admissible};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum SumMode {
    /// `Σ_{N ≥ n_1 > ⋯ > n_k ≥ 1}`, cost `O(N·k)`.
    #[default]
    Nested,
    /// Free summation of the Chen fraction over `[1, N]^k`, depth ≤ 2 only.
    Fractions,
}

#[derive(Clone, Debug, PartialEq)]
pub struct NumericConfig {
    pub terms: u64,
    pub tolerance: f64,
    pub mode: SumMode,
}

impl Default for NumericConfig {
    fn default() -> Self {
        NumericConfig { terms: 2000, tolerance: 5e-3, mode: SumMode::Nested }
    }
}

impl NumericConfig {
    pub fn new(terms: u64, tolerance: f64, mode: SumMode) -> Result<Self> {
        if terms < 10 {
            return Err(Error::Domain(format!("truncation must be ≥ 10, got {terms}")));
        }
        if tolerance.is_nan() || tolerance <= 0.0 {
            return Err(Error::Domain(format!("tolerance must be positive, got {tolerance}")));
        }
        Ok(NumericConfig { terms, tolerance, mode })
    }
}

fn require_admissible(s: &Composition) -> Result<()> {
    if s.is_unit() || !is_admissible(s) {
        return Err(Error::Domain(format!("{s} is not admissible; the series diverges")));
    }
    Ok(())
}

/// `ζ_N(s) = Σ_{N ≥ n_1 > ⋯ > n_k ≥ 1} n_1^{−s_1}⋯n_k^{−s_k}`.
pub fn zeta_truncated(s: &Composition, cfg: &NumericConfig) -> Result<f64> {
    require_admissible(s)?;
    let n = cfg.terms as usize;
    let e = s.entries()[0] as i32;
    let inner = tail_sums(&s.entries()[1..], n);
    // Outermost sum runs largest n first, so the small terms are added first.
    Ok((1..=n).rev().map(|m| inner[m - 1] * (m as f64).powi(-e)).sum())
}

/// `ζ_m(entries)` for `m = 0..=n` by prefix accumulation, with `ζ_m(∅) = 1`.
fn tail_sums(entries: &[u32], n: usize) -> Vec<f64> {
    let mut inner = vec![1.0f64; n + 1];
    for &e in entries.iter().rev() {
        let mut next = vec![0.0f64; n + 1];
        for m in 1..=n {
            next[m] = next[m - 1] + inner[m - 1] * (m as f64).powi(-(e as i32));
        }
        inner = next;
    }
    inner
}

/// Sums `⟨s; x_{i_1},…,x_{i_k}⟩` with every variable running over `[1, N]`
/// independently. The variable labels do not affect the value.
pub fn zeta_via_fractions(s: &Composition, vars: &[u32], cfg: &NumericConfig) -> Result<f64> {
    require_admissible(s)?;
    if vars.len() != s.depth() {
        return Err(Error::InvalidFraction(format!("{} variables for {s}", vars.len())));
    }
    let n = cfg.terms;
    match *s.entries() {
        [a] => Ok((1..=n).rev().map(|x| (x as f64).powi(-(a as i32))).sum()),
        [a, b] => Ok((1..=n)
            .rev()
            .map(|x| {
                (1..=n)
                    .rev()
                    .map(|y| ((x + y) as f64).powi(-(a as i32)) * (y as f64).powi(-(b as i32)))
                    .sum::<f64>()
            })
            .sum()),
        _ => Err(Error::Domain(format!("fraction summation is limited to depth ≤ 2, got {s}"))),
    }
}

fn zeta_with_mode(s: &Composition, cfg: &NumericConfig) -> Result<f64> {
    if s.is_unit() {
        return Ok(1.0);
    }
    match cfg.mode {
        SumMode::Nested => zeta_truncated(s, cfg),
        SumMode::Fractions => {
            let vars: Vec<u32> = (1..=s.depth() as u32).collect();
            zeta_via_fractions(s, &vars, cfg)
        }
    }
}

/// Linear extension of the truncated zeta map, with `𝟏 ↦ 1`.
pub fn zeta_star_numeric(v: &HVector, cfg: &NumericConfig) -> Result<f64> {
    if let Some(bad) = v.support().find(|s| !s.is_unit() && !is_admissible(s)) {
        return Err(Error::Domain(format!("{bad} is not admissible; the series diverges")));
    }
    let mut total = 0.0;
    for (s, c) in v.iter() {
        total += c.to_f64().expect("rational coefficient fits in f64") * zeta_with_mode(s, cfg)?;
    }
    Ok(total)
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationCheck {
    pub generator: String,
    pub value: f64,
    pub tolerance: f64,
    pub status: Status,
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationReport {
    pub max_abs: f64,
    pub status: Status,
    pub entries: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

pub const MAX_RELATION_WEIGHT: u32 = 7;

/// Evaluates every generator of `eds_generators(max_weight)` numerically.
pub fn check_relations_numeric(max_weight: u32, cfg: &NumericConfig) -> Result<RelationReport> {
    if max_weight > MAX_RELATION_WEIGHT {
        return Err(Error::Domain(format!("numeric relation checks are limited to weight ≤ {MAX_RELATION_WEIGHT}")));
    }
    let gens = eds_generators(max_weight)?;
    let entries = gens
        .par_iter()
        .map(|g| {
            let value = zeta_star_numeric(&g.value, cfg)?;
            let status = if value.abs() < cfg.tolerance { Status::Pass } else { Status::Fail };
            Ok(RelationCheck {
                generator: crate::parserio::format_hvector(&g.value),
                value,
                tolerance: cfg.tolerance,
                status,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let max_abs = entries.iter().map(|e| e.value.abs()).fold(0.0, f64::max);
    let status = if entries.iter().all(|e| e.status == Status::Pass) { Status::Pass } else { Status::Fail };
    Ok(RelationReport { max_abs, status, entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: &[u32]) -> Composition {
        Composition::new(v.to_vec()).unwrap()
    }

    fn cfg(n: u64) -> NumericConfig {
        NumericConfig { terms: n, ..NumericConfig::default() }
    }

    #[test]
    fn zeta_two() {
        let z = zeta_truncated(&c(&[2]), &cfg(1000)).unwrap();
        assert!((z - std::f64::consts::PI.powi(2) / 6.0).abs() < 1.1e-3);
        assert!(zeta_truncated(&c(&[1]), &cfg(50)).is_err());
    }

    #[test]
    fn euler_identity() {
        let a = zeta_truncated(&c(&[2, 1]), &cfg(2000)).unwrap();
        let b = zeta_truncated(&c(&[3]), &cfg(2000)).unwrap();
        assert!((a - b).abs() < 5e-3);
    }

    #[test]
    fn nested_matches_brute_force() {
        let s = c(&[3, 1, 2]);
        let n = 30u64;
        let mut brute = 0.0;
        for a in 1..=n {
            for b in 1..a {
                for d in 1..b {
                    brute += 1.0 / ((a * a * a) as f64 * b as f64 * (d * d) as f64);
                }
            }
        }
        assert!((zeta_truncated(&s, &cfg(n)).unwrap() - brute).abs() < 1e-14);
    }

    #[test]
    fn fraction_sums() {
        let d1 = zeta_via_fractions(&c(&[2]), &[1], &cfg(1000)).unwrap();
        assert!((d1 - zeta_truncated(&c(&[2]), &cfg(1000)).unwrap()).abs() < 1e-6);
        let z3 = zeta_truncated(&c(&[3]), &cfg(2000)).unwrap();
        // The square [1,N]^2 misses a tail of size about log N / N: 0.0219 at N = 300.
        let d300 = zeta_via_fractions(&c(&[2, 1]), &[1, 2], &cfg(300)).unwrap();
        assert!((z3 - d300 - 0.02193).abs() < 1e-4, "{}", z3 - d300);
        let d400 = zeta_via_fractions(&c(&[2, 1]), &[1, 2], &cfg(400)).unwrap();
        assert!((d400 - z3).abs() < 2e-2);
        assert!(zeta_via_fractions(&c(&[1, 1]), &[1, 2], &cfg(100)).is_err());
        assert!(zeta_via_fractions(&c(&[2, 1, 1]), &[1, 2, 3], &cfg(100)).is_err());
    }

    #[test]
    fn star_examples() {
        let one = HVector::basis(Composition::unit());
        assert_eq!(zeta_star_numeric(&one, &cfg(100)).unwrap(), 1.0);
        let bad = HVector::basis(c(&[1])) + HVector::basis(c(&[2]));
        assert!(zeta_star_numeric(&bad, &cfg(100)).is_err());
    }

    #[test]
    fn relation_reports() {
        assert!(check_relations_numeric(3, &cfg(2000)).unwrap().passed());
        let strict = NumericConfig { terms: 10, tolerance: 1e-9, mode: SumMode::Nested };
        let r = check_relations_numeric(3, &strict).unwrap();
        assert!(!r.passed());
        assert!(r.max_abs > 1e-9);
        assert!(check_relations_numeric(8, &cfg(100)).is_err());
    }
}
