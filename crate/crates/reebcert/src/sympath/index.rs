//! The Robbin-Salamon index: half the signature of the crossing form at each
//! endpoint crossing plus the full signature at interior crossings.

use super::crossings::{find_crossings, Crossing, CrossingPosition};
use super::path::{integrate_path, SymplecticPath};
use crate::error::{Error, Result};
use crate::half_int::HalfInt;

const PERTURB_EPS: f64 = 1e-7;
const PERTURB_RETRIES: u32 = 4;

/// Default crossing-time tolerance for a path.
pub fn default_time_tol(path: &SymplecticPath) -> f64 {
    1e-12 * path.duration()
}

/// Robbin-Salamon index of a path of symplectic matrices.
///
/// Interior crossings must be regular; an isolated degenerate interior
/// crossing is resolved by re-integrating with a small multiple of the
/// identity added to the generator on a window around it (the index is
/// unchanged by such fixed-end homotopies). Endpoint crossing forms count
/// eigenvalues at zero as zero.
pub fn rs_index(path: &SymplecticPath) -> Result<HalfInt> {
    let tol = default_time_tol(path);
    let crossings = find_crossings(path, tol)?;
    let mut total = HalfInt::ZERO;
    let mut degenerate: Vec<Crossing> = Vec::new();
    for c in crossings {
        match c.position {
            CrossingPosition::Start | CrossingPosition::End => {
                total += HalfInt::half_of(c.signature);
            }
            CrossingPosition::Interior => {
                if c.regular {
                    total += HalfInt::from_int(c.signature);
                } else {
                    degenerate.push(c);
                }
            }
        }
    }
    for c in degenerate {
        total += resolve_degenerate_crossing(path, c.t, tol)?;
    }
    Ok(total)
}

/// Replace the contribution of a degenerate interior crossing by the summed
/// signatures of the regular crossings of a locally perturbed path.
fn resolve_degenerate_crossing(path: &SymplecticPath, t_star: f64, tol: f64) -> Result<HalfInt> {
    let gen = match path.generator() {
        Some(g) => g,
        None => {
            return Err(Error::UnresolvableDegeneracy {
                t: t_star,
                retries: 0,
            })
        }
    };
    let duration = path.duration();
    let spacing = duration / path.steps() as f64;
    let margin = spacing.max(1e-3 * duration);
    let half_width = (5.0 * spacing).max(2e-3 * duration);
    let lo = (t_star - path.start_time() - half_width).max(margin);
    let hi = (t_star - path.start_time() + half_width).min(duration - margin);
    if lo >= hi {
        return Err(Error::UnresolvableDegeneracy {
            t: t_star,
            retries: 0,
        });
    }

    for attempt in 0..=PERTURB_RETRIES {
        let eps = PERTURB_EPS * f64::powi(2.0, attempt as i32);
        let perturbed = gen.perturbed(eps, (lo, hi));
        let ppath = integrate_path(&perturbed, path.steps())?;
        let crossings = find_crossings(&ppath, tol)?;
        let in_window: Vec<&Crossing> = crossings
            .iter()
            .filter(|c| {
                c.position == CrossingPosition::Interior && c.t >= lo && c.t <= hi
            })
            .collect();
        if in_window.iter().all(|c| c.regular) {
            let sum: i64 = in_window.iter().map(|c| c.signature).sum();
            return Ok(HalfInt::from_int(sum));
        }
    }
    Err(Error::UnresolvableDegeneracy {
        t: t_star,
        retries: PERTURB_RETRIES,
    })
}

/// RS index of the shear path Psi(t) = [[1, 0], [t b, 1]] on [0, T]:
/// sign(b)/2, independently of T. This is the closed form the crossing sum
/// cannot reach because the shear is degenerate for all t.
pub fn rs_shear(b: f64, _duration: f64) -> HalfInt {
    if b > 0.0 {
        HalfInt::from_doubled(1)
    } else if b < 0.0 {
        HalfInt::from_doubled(-1)
    } else {
        HalfInt::ZERO
    }
}

/// Closed integer interval of Conley-Zehnder indices attainable by
/// nondegenerate perturbations of an orbit with the given RS index and
/// kernel dimension: |CZ - RS| <= kernel_dim / 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IndexWindow {
    pub lo: i64,
    pub hi: i64,
}

impl IndexWindow {
    pub fn contains(&self, cz: i64) -> bool {
        self.lo <= cz && cz <= self.hi
    }

    pub fn values(&self) -> impl Iterator<Item = i64> {
        self.lo..=self.hi
    }
}

/// Integers j with |j - rs| <= kernel_dim / 2.
pub fn perturbed_index_window(rs: HalfInt, kernel_dim: u32) -> IndexWindow {
    let d = rs.doubled();
    let k = kernel_dim as i64;
    // 2j in [d - k, d + k]
    let lo = (d - k).div_euclid(2) + if (d - k).rem_euclid(2) == 0 { 0 } else { 1 };
    let hi = (d + k).div_euclid(2);
    IndexWindow { lo, hi }
}
