//! Analytic domain models (ellipsoids, polytopal convex/concave toric
//! profiles, sphere disks) and their Reeb orbit tables: actions, contact
//! Conley-Zehnder indices or index ranges, and lattice orbit surrogates.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sympath::{integrate_path, SymmetricGenerator, SymplecticPath};

/// Tolerance for resonance detection on axis ratios.
const RESONANCE_TOL: f64 = 1e-9;
/// Largest denominator scanned when testing a ratio for rationality.
const RESONANCE_MAX_DEN: u64 = 64;
/// Slack when comparing actions against the enumeration cutoff.
const CUTOFF_SLACK: f64 = 1e-12;

// ---------------------------------------------------------------------------
// records and tables

/// One row of a domain's spectrum table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReebOrbitRecord {
    pub label: String,
    /// Integral of the contact form over the orbit (= period), in area units.
    pub action: f64,
    /// Contact CZ range; `cz_lo == cz_hi` for exactly-indexed models.
    pub cz_lo: i64,
    pub cz_hi: i64,
    pub multiplicity: u32,
}

impl ReebOrbitRecord {
    pub fn exact(label: impl Into<String>, action: f64, cz: i64, multiplicity: u32) -> Self {
        ReebOrbitRecord {
            label: label.into(),
            action,
            cz_lo: cz,
            cz_hi: cz,
            multiplicity,
        }
    }

    pub fn has_exact_index(&self) -> bool {
        self.cz_lo == self.cz_hi
    }

    fn validate(&self) -> Result<()> {
        if !(self.action > 0.0) {
            return Err(Error::InvalidInput {
                detail: format!("orbit {} has non-positive action {}", self.label, self.action),
            });
        }
        if self.cz_lo > self.cz_hi {
            return Err(Error::InvalidInput {
                detail: format!("orbit {} has cz_lo > cz_hi", self.label),
            });
        }
        if self.multiplicity == 0 {
            return Err(Error::InvalidInput {
                detail: format!("orbit {} has zero multiplicity", self.label),
            });
        }
        Ok(())
    }
}

/// All orbits of action at most `cutoff`, sorted by (action, label).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpectrumTable {
    /// Half-dimension of the ambient manifold.
    pub n: usize,
    pub orbits: Vec<ReebOrbitRecord>,
    pub cutoff: f64,
}

impl SpectrumTable {
    pub fn new(n: usize, mut orbits: Vec<ReebOrbitRecord>, cutoff: f64) -> Result<Self> {
        for rec in &orbits {
            rec.validate()?;
        }
        orbits.sort_by(|a, b| {
            a.action
                .partial_cmp(&b.action)
                .unwrap()
                .then_with(|| a.label.cmp(&b.label))
        });
        Ok(SpectrumTable { n, orbits, cutoff })
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    pub fn min_action(&self) -> Option<f64> {
        self.orbits.first().map(|r| r.action)
    }

    pub fn actions(&self) -> impl Iterator<Item = f64> + '_ {
        self.orbits.iter().map(|r| r.action)
    }

    /// True when every record carries an exact index.
    pub fn all_exact(&self) -> bool {
        self.orbits.iter().all(|r| r.has_exact_index())
    }
}

// ---------------------------------------------------------------------------
// ellipsoids

/// E(a_1, ..., a_n) with axes stored ascending.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Ellipsoid {
    axes: Vec<f64>,
}

impl Ellipsoid {
    pub fn new(mut axes: Vec<f64>) -> Result<Self> {
        if axes.len() < 2 {
            return Err(Error::InvalidInput {
                detail: "an ellipsoid needs at least two axes".into(),
            });
        }
        if axes.iter().any(|a| !(*a > 0.0) || !a.is_finite()) {
            return Err(Error::InvalidInput {
                detail: "ellipsoid axes must be positive and finite".into(),
            });
        }
        axes.sort_by(|a, b| a.partial_cmp(b).unwrap());
        Ok(Ellipsoid { axes })
    }

    pub fn axes(&self) -> &[f64] {
        &self.axes
    }

    pub fn n(&self) -> usize {
        self.axes.len()
    }

    pub fn min_axis(&self) -> f64 {
        self.axes[0]
    }

    /// A pair ratio a_i/a_j within 1e-9 of a rational with denominator <= 64
    /// makes the Reeb flow (numerically) degenerate.
    pub fn is_resonant(&self) -> bool {
        for i in 0..self.axes.len() {
            for j in 0..self.axes.len() {
                if i != j && is_near_rational(self.axes[i] / self.axes[j]) {
                    return true;
                }
            }
        }
        false
    }

    pub fn ensure_nonresonant(&self) -> Result<()> {
        if self.is_resonant() {
            return Err(Error::ResonantEllipsoid {
                detail: format!("axes {:?} have a rational pair ratio", self.axes),
            });
        }
        Ok(())
    }
}

fn is_near_rational(r: f64) -> bool {
    for q in 1..=RESONANCE_MAX_DEN {
        let p = (r * q as f64).round();
        if (r - p / q as f64).abs() <= RESONANCE_TOL {
            return true;
        }
    }
    false
}

/// All orbits gamma_{k,l} of E with action a_k * l <= cutoff. The index is
/// the closed form CZ = n - 1 + 2 * sum_j floor(l * a_k / a_j).
pub fn ellipsoid_orbits(e: &Ellipsoid, cutoff: f64) -> Result<SpectrumTable> {
    e.ensure_nonresonant()?;
    if !(cutoff > 0.0 && cutoff.is_finite()) {
        return Err(Error::InvalidInput {
            detail: "cutoff must be positive".into(),
        });
    }
    let n = e.n();
    let mut orbits = Vec::new();
    for (k0, &ak) in e.axes().iter().enumerate() {
        let k = k0 + 1;
        let mut l = 1u32;
        while ak * l as f64 <= cutoff + CUTOFF_SLACK {
            let action = ak * l as f64;
            let mut floor_sum = 0i64;
            for (j0, &aj) in e.axes().iter().enumerate() {
                let ratio = l as f64 * ak / aj;
                if j0 != k0 && (ratio - ratio.round()).abs() <= RESONANCE_TOL {
                    return Err(Error::ResonantEllipsoid {
                        detail: format!("l*a_{k}/a_{} = {ratio} is within 1e-9 of an integer", j0 + 1),
                    });
                }
                floor_sum += ratio.floor() as i64;
            }
            let cz = n as i64 - 1 + 2 * floor_sum;
            orbits.push(ReebOrbitRecord::exact(
                format!("gamma[k={k},l={l}]"),
                action,
                cz,
                l,
            ));
            l += 1;
        }
    }
    SpectrumTable::new(n, orbits, cutoff)
}

/// Linearized Reeb flow of gamma_{k,l} restricted to the contact
/// distribution in a constant unitary frame: the direct sum over j != k of
/// rotations at rate 2*pi/a_j over duration l * a_k. The returned framing
/// correction 2l accounts for the difference between this constant frame
/// and the boundary framing of the closed-form index.
pub fn ellipsoid_linearized_path(
    e: &Ellipsoid,
    k: usize,
    l: u32,
) -> Result<(SymplecticPath, i64)> {
    e.ensure_nonresonant()?;
    if k == 0 || k > e.n() || l == 0 {
        return Err(Error::InvalidInput {
            detail: format!("orbit indices out of range: k = {k}, l = {l}"),
        });
    }
    let ak = e.axes()[k - 1];
    let duration = ak * l as f64;
    let mut blocks = Vec::new();
    let mut total_angle = 0.0;
    for (j0, &aj) in e.axes().iter().enumerate() {
        if j0 == k - 1 {
            continue;
        }
        let rate = 2.0 * std::f64::consts::PI / aj;
        total_angle += rate * duration;
        blocks.push(SymmetricGenerator::rotation(rate, duration)?);
    }
    let gen = SymmetricGenerator::block_diag(&blocks)?;
    let steps = 1000usize.max(250 * (total_angle / (2.0 * std::f64::consts::PI)).ceil() as usize);
    let path = integrate_path(&gen, steps)?;
    Ok((path, 2 * l as i64))
}

// ---------------------------------------------------------------------------
// toric profiles

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ToricKind {
    Convex,
    Concave,
}

/// Polytopal moment-image profile of a toric domain.
///
/// Convex: `vertices` generate the closure of Omega (which must be convex
/// and downward closed so that the symmetrized region is convex). Concave:
/// `vertices` are the vertices of the bounded boundary face of the convex
/// orthant-complement. Structural validation is exact for n = 2; for n >= 3
/// only coordinate-level checks run and the caller is responsible for the
/// shape conditions.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ToricProfile {
    kind: ToricKind,
    n: usize,
    vertices: Vec<Vec<f64>>,
}

impl ToricProfile {
    pub fn convex(vertices: Vec<Vec<f64>>) -> Result<Self> {
        let p = Self::validated(ToricKind::Convex, vertices)?;
        if p.n == 2 {
            p.check_convex_2d()?;
        }
        Ok(p)
    }

    pub fn concave(vertices: Vec<Vec<f64>>) -> Result<Self> {
        let p = Self::validated(ToricKind::Concave, vertices)?;
        if p.n == 2 {
            p.check_concave_2d()?;
        }
        Ok(p)
    }

    fn validated(kind: ToricKind, vertices: Vec<Vec<f64>>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidInput {
                detail: "toric profile needs at least one vertex".into(),
            });
        }
        let n = vertices[0].len();
        if n < 2 {
            return Err(Error::InvalidInput {
                detail: "toric profile needs dimension at least 2".into(),
            });
        }
        for v in &vertices {
            if v.len() != n {
                return Err(Error::InvalidInput {
                    detail: "toric profile vertices have mixed dimensions".into(),
                });
            }
            if v.iter().any(|x| !x.is_finite() || *x < 0.0) {
                return Err(Error::InvalidInput {
                    detail: "toric profile vertices must be finite and non-negative".into(),
                });
            }
        }
        Ok(ToricProfile { kind, n, vertices })
    }

    /// Downward closure of the hull on vertex generators: for every vertex,
    /// each axis projection must stay inside the hull. Equivalent to the
    /// symmetrized region being convex.
    fn check_convex_2d(&self) -> Result<()> {
        let pts: Vec<(f64, f64)> = self.vertices.iter().map(|v| (v[0], v[1])).collect();
        let hull = convex_hull_2d(&pts);
        let scale = pts
            .iter()
            .map(|p| p.0.abs().max(p.1.abs()))
            .fold(0.0_f64, f64::max)
            .max(1.0);
        let tol = 1e-9 * scale;
        for &(x, y) in &pts {
            for probe in [(x, 0.0), (0.0, y), (0.0, 0.0)] {
                if !point_in_hull_2d(&hull, probe, tol) {
                    return Err(Error::InvalidInput {
                        detail: format!(
                            "convex profile is not downward closed: projection {probe:?} of vertex ({x}, {y}) leaves the hull"
                        ),
                    });
                }
            }
        }
        Ok(())
    }

    /// The bounded face must be the graph of a convex strictly-decreasing
    /// function, so that the orthant complement is convex.
    fn check_concave_2d(&self) -> Result<()> {
        let mut pts: Vec<(f64, f64)> = self.vertices.iter().map(|v| (v[0], v[1])).collect();
        pts.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        for w in pts.windows(2) {
            if !(w[1].0 > w[0].0) || !(w[1].1 < w[0].1) {
                return Err(Error::InvalidInput {
                    detail: "concave face vertices must be strictly decreasing in y as x grows".into(),
                });
            }
        }
        for w in pts.windows(3) {
            let s01 = (w[1].1 - w[0].1) / (w[1].0 - w[0].0);
            let s12 = (w[2].1 - w[1].1) / (w[2].0 - w[1].0);
            if s12 < s01 - 1e-12 {
                return Err(Error::InvalidInput {
                    detail: "concave face is not convex toward the origin".into(),
                });
            }
        }
        Ok(())
    }

    pub fn kind(&self) -> ToricKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> &[Vec<f64>] {
        &self.vertices
    }

    fn ensure_kind(&self, kind: ToricKind, expected: &'static str) -> Result<()> {
        if self.kind != kind {
            return Err(Error::WrongKind { expected });
        }
        Ok(())
    }
}

fn dot(v: &[i64], w: &[f64]) -> f64 {
    v.iter().zip(w).map(|(a, b)| *a as f64 * b).sum()
}

/// Support function ||v||*_Omega = max over Omega of <v, .>; exact on the
/// vertex list for polytopal profiles.
pub fn support_function(omega: &ToricProfile, v: &[i64]) -> Result<f64> {
    omega.ensure_kind(ToricKind::Convex, "convex")?;
    check_vector(omega, v, false)?;
    Ok(omega
        .vertices()
        .iter()
        .map(|w| dot(v, w))
        .fold(f64::NEG_INFINITY, f64::max))
}

/// Inner value [v]_Omega = inf over the orthant complement of <v, .>; for
/// strictly positive v the infimum is attained at a vertex of the bounded
/// boundary face.
pub fn inner_value(omega: &ToricProfile, v: &[i64]) -> Result<f64> {
    omega.ensure_kind(ToricKind::Concave, "concave")?;
    check_vector(omega, v, true)?;
    Ok(omega
        .vertices()
        .iter()
        .map(|w| dot(v, w))
        .fold(f64::INFINITY, f64::min))
}

fn check_vector(omega: &ToricProfile, v: &[i64], strictly_positive: bool) -> Result<()> {
    if v.len() != omega.dim() {
        return Err(Error::InvalidInput {
            detail: format!("vector length {} != profile dimension {}", v.len(), omega.dim()),
        });
    }
    for (i, &c) in v.iter().enumerate() {
        if strictly_positive && c < 1 {
            return Err(Error::NonPositiveV {
                component: i,
                value: c,
            });
        }
        if !strictly_positive && c < 0 {
            return Err(Error::InvalidInput {
                detail: format!("vector component {i} = {c} is negative"),
            });
        }
    }
    Ok(())
}

/// Orbit surrogates of a convex toric domain: one record per nonzero
/// v in N^n with ||v||*_Omega <= cutoff; the index range is
/// [Z(v) + 2 sum v_i, n - 1 + 2 sum v_i] with Z(v) the number of zero
/// entries.
pub fn convex_toric_surrogates(omega: &ToricProfile, cutoff: f64) -> Result<SpectrumTable> {
    omega.ensure_kind(ToricKind::Convex, "convex")?;
    if !(cutoff > 0.0 && cutoff.is_finite()) {
        return Err(Error::InvalidInput {
            detail: "cutoff must be positive".into(),
        });
    }
    let n = omega.dim();
    // Axis reach bounds the box: ||v||* >= v_i * support(e_i).
    let mut reach = vec![0.0f64; n];
    for (i, r) in reach.iter_mut().enumerate() {
        let mut e = vec![0i64; n];
        e[i] = 1;
        *r = support_function(omega, &e)?;
        if !(*r > 0.0) {
            return Err(Error::DegenerateProfile {
                detail: format!("support in coordinate direction {i} is not positive; enumeration would not terminate"),
            });
        }
    }
    let bounds: Vec<i64> = reach
        .iter()
        .map(|r| ((cutoff + CUTOFF_SLACK) / r).floor() as i64)
        .collect();

    let mut records = Vec::new();
    let mut v = vec![0i64; n];
    enumerate_box(&bounds, &mut v, 0, &mut |v| {
        if v.iter().all(|&c| c == 0) {
            return Ok(());
        }
        let action = support_function(omega, v)?;
        if action <= cutoff + CUTOFF_SLACK {
            let sum: i64 = v.iter().sum();
            let zeros = v.iter().filter(|&&c| c == 0).count() as i64;
            records.push(ReebOrbitRecord {
                label: label_for(v),
                action,
                cz_lo: zeros + 2 * sum,
                cz_hi: n as i64 - 1 + 2 * sum,
                multiplicity: 1,
            });
        }
        Ok(())
    })?;
    SpectrumTable::new(n, records, cutoff)
}

/// Orbit surrogates of a concave toric domain: one record per v >= (1,..,1)
/// inside the coercivity box with [v]_Omega <= cutoff; the index range is
/// [1 - n + 2 sum v_i, 2 sum v_i]. Surrogates with larger v exist at the
/// same actions but carry indices too large to matter below the cutoff.
pub fn concave_toric_surrogates(omega: &ToricProfile, cutoff: f64) -> Result<SpectrumTable> {
    omega.ensure_kind(ToricKind::Concave, "concave")?;
    if !(cutoff > 0.0 && cutoff.is_finite()) {
        return Err(Error::InvalidInput {
            detail: "cutoff must be positive".into(),
        });
    }
    let n = omega.dim();
    let min_vertex_sum = omega
        .vertices()
        .iter()
        .map(|w| w.iter().sum::<f64>())
        .fold(f64::INFINITY, f64::min);
    if !(min_vertex_sum > 0.0) {
        return Err(Error::DegenerateProfile {
            detail: "a face vertex has zero coordinate sum".into(),
        });
    }
    let bound = ((cutoff + CUTOFF_SLACK) / min_vertex_sum).floor() as i64;
    let bounds = vec![bound; n];

    let mut records = Vec::new();
    let mut v = vec![0i64; n];
    enumerate_box(&bounds, &mut v, 0, &mut |v| {
        if v.iter().any(|&c| c < 1) {
            return Ok(());
        }
        let action = inner_value(omega, v)?;
        if action <= cutoff + CUTOFF_SLACK {
            let sum: i64 = v.iter().sum();
            records.push(ReebOrbitRecord {
                label: label_for(v),
                action,
                cz_lo: 1 - n as i64 + 2 * sum,
                cz_hi: 2 * sum,
                multiplicity: 1,
            });
        }
        Ok(())
    })?;
    SpectrumTable::new(n, records, cutoff)
}

fn label_for(v: &[i64]) -> String {
    let coords: Vec<String> = v.iter().map(|c| c.to_string()).collect();
    format!("v=({})", coords.join(","))
}

fn enumerate_box(
    bounds: &[i64],
    v: &mut Vec<i64>,
    pos: usize,
    f: &mut impl FnMut(&[i64]) -> Result<()>,
) -> Result<()> {
    if pos == bounds.len() {
        return f(v);
    }
    for c in 0..=bounds[pos] {
        v[pos] = c;
        enumerate_box(bounds, v, pos + 1, f)?;
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// sphere disks

/// A round disk on the sphere with total area normalized to 1.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct SphereDisk {
    area: f64,
}

impl SphereDisk {
    pub fn new(area: f64) -> Result<Self> {
        if !(area > 0.0 && area < 1.0) {
            return Err(Error::InvalidInput {
                detail: format!("sphere disk area must lie in (0, 1), got {area}"),
            });
        }
        Ok(SphereDisk { area })
    }

    pub fn area(&self) -> f64 {
        self.area
    }
}

/// Actions attainable by index -1 capped orbits of killers on a sphere
/// disk: {0} plus k * (1/2 - area) for even k (the minimal Chern number of
/// the sphere is 2), 2 <= k <= k_max. Sorted with duplicates merged.
pub fn sphere_disk_index_actions(disk: &SphereDisk, k_max: u32) -> Result<Vec<f64>> {
    if k_max < 2 {
        return Err(Error::InvalidInput {
            detail: format!("k_max must be at least 2, got {k_max}"),
        });
    }
    let mut values = vec![0.0];
    let mut k = 2;
    while k <= k_max {
        values.push(k as f64 * (0.5 - disk.area));
        k += 2;
    }
    values.sort_by(|a, b| a.partial_cmp(b).unwrap());
    values.dedup_by(|a, b| (*a - *b).abs() <= 1e-12);
    Ok(values)
}

// ---------------------------------------------------------------------------
// inclusion capacity

/// Largest c with the moment simplex Delta(c) contained in the profile (the
/// Gromov-width surrogate; the ball B(c) has moment image Delta(c)).
///
/// For a downward-closed convex profile this is the minimal axis reach; for
/// a concave profile it is the inner value of (1, ..., 1).
pub fn simplex_inclusion_capacity(omega: &ToricProfile) -> Result<f64> {
    match omega.kind() {
        ToricKind::Convex => {
            let n = omega.dim();
            let mut best = f64::INFINITY;
            for i in 0..n {
                let mut e = vec![0i64; n];
                e[i] = 1;
                best = best.min(support_function(omega, &e)?);
            }
            Ok(best)
        }
        ToricKind::Concave => inner_value(omega, &vec![1i64; omega.dim()]),
    }
}

// ---------------------------------------------------------------------------
// 2d hull helpers

/// Monotone-chain hull, counterclockwise, collinear points dropped.
fn convex_hull_2d(pts: &[(f64, f64)]) -> Vec<(f64, f64)> {
    let mut p: Vec<(f64, f64)> = pts.to_vec();
    p.sort_by(|a, b| a.partial_cmp(b).unwrap());
    p.dedup_by(|a, b| (a.0 - b.0).abs() < 1e-15 && (a.1 - b.1).abs() < 1e-15);
    if p.len() < 3 {
        return p;
    }
    let cross = |o: (f64, f64), a: (f64, f64), b: (f64, f64)| {
        (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
    };
    let mut lower: Vec<(f64, f64)> = Vec::new();
    for &pt in &p {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], pt) <= 0.0
        {
            lower.pop();
        }
        lower.push(pt);
    }
    let mut upper: Vec<(f64, f64)> = Vec::new();
    for &pt in p.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], pt) <= 0.0
        {
            upper.pop();
        }
        upper.push(pt);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

fn point_in_hull_2d(hull: &[(f64, f64)], p: (f64, f64), tol: f64) -> bool {
    match hull.len() {
        0 => false,
        1 => (p.0 - hull[0].0).abs() <= tol && (p.1 - hull[0].1).abs() <= tol,
        2 => {
            // distance from the segment
            let (a, b) = (hull[0], hull[1]);
            let (dx, dy) = (b.0 - a.0, b.1 - a.1);
            let len2 = dx * dx + dy * dy;
            let t = (((p.0 - a.0) * dx + (p.1 - a.1) * dy) / len2).clamp(0.0, 1.0);
            let (cx, cy) = (a.0 + t * dx, a.1 + t * dy);
            ((p.0 - cx).powi(2) + (p.1 - cy).powi(2)).sqrt() <= tol
        }
        _ => {
            // hull is counterclockwise; inside iff left of every edge
            for i in 0..hull.len() {
                let a = hull[i];
                let b = hull[(i + 1) % hull.len()];
                let cross = (b.0 - a.0) * (p.1 - a.1) - (b.1 - a.1) * (p.0 - a.0);
                if cross < -tol * (1.0 + (b.0 - a.0).abs() + (b.1 - a.1).abs()) {
                    return false;
                }
            }
            true
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const PHI: f64 = 1.618033988749894848;

    #[test]
    fn golden_ellipsoid_orbits_to_cutoff_two() {
        let e = Ellipsoid::new(vec![1.0, PHI]).unwrap();
        let tbl = ellipsoid_orbits(&e, 2.0).unwrap();
        let rows: Vec<(&str, f64, i64)> = tbl
            .orbits
            .iter()
            .map(|r| (r.label.as_str(), r.action, r.cz_lo))
            .collect();
        assert_eq!(rows.len(), 3);
        assert_eq!(rows[0], ("gamma[k=1,l=1]", 1.0, 3));
        assert_eq!(rows[1].2, 5);
        assert!((rows[1].1 - PHI).abs() < 1e-12);
        assert_eq!(rows[2], ("gamma[k=1,l=2]", 2.0, 7));
    }

    #[test]
    fn equal_axes_are_resonant() {
        let e = Ellipsoid::new(vec![1.0, 1.0]).unwrap();
        assert!(e.is_resonant());
        assert!(matches!(
            ellipsoid_orbits(&e, 1.0),
            Err(Error::ResonantEllipsoid { .. })
        ));
    }

    #[test]
    fn three_axis_ellipsoid_first_orbit() {
        let e = Ellipsoid::new(vec![1.0, PHI, PHI * PHI]).unwrap();
        let tbl = ellipsoid_orbits(&e, 1.0).unwrap();
        assert_eq!(tbl.orbits.len(), 1);
        assert_eq!(tbl.orbits[0].cz_lo, 4);
        assert_eq!(tbl.orbits[0].action, 1.0);
    }

    #[test]
    fn support_function_examples() {
        let square = ToricProfile::convex(vec![
            vec![0.0, 0.0],
            vec![1.0, 0.0],
            vec![0.0, 1.0],
            vec![1.0, 1.0],
        ])
        .unwrap();
        assert_eq!(support_function(&square, &[2, 1]).unwrap(), 3.0);
        assert_eq!(support_function(&square, &[0, 0]).unwrap(), 0.0);
        let simplex = ToricProfile::convex(vec![vec![0.0, 0.0], vec![2.5, 0.0], vec![0.0, 2.5]]).unwrap();
        assert_eq!(support_function(&simplex, &[1, 1]).unwrap(), 2.5);
    }

    #[test]
    fn inner_value_examples() {
        // moment image of E(2, 1): region under x + 2y = 2
        let omega = ToricProfile::concave(vec![vec![2.0, 0.0], vec![0.0, 1.0]]).unwrap();
        assert_eq!(inner_value(&omega, &[1, 1]).unwrap(), 1.0);
        assert_eq!(inner_value(&omega, &[1, 2]).unwrap(), 2.0);
        assert_eq!(inner_value(&omega, &[2, 1]).unwrap(), 1.0);
        assert!(matches!(
            inner_value(&omega, &[1, 0]),
            Err(Error::NonPositiveV { .. })
        ));
    }

    #[test]
    fn convex_surrogates_on_unit_square() {
        let square = ToricProfile::convex(vec![
            vec![0.0, 0.0],
            vec![1.0, 0.0],
            vec![0.0, 1.0],
            vec![1.0, 1.0],
        ])
        .unwrap();
        let tbl = convex_toric_surrogates(&square, 2.0).unwrap();
        let labels: Vec<&str> = tbl.orbits.iter().map(|r| r.label.as_str()).collect();
        assert_eq!(labels.len(), 5);
        let v11 = tbl.orbits.iter().find(|r| r.label == "v=(1,1)").unwrap();
        assert_eq!(v11.action, 2.0);
        assert_eq!((v11.cz_lo, v11.cz_hi), (4, 5));
    }

    #[test]
    fn convex_surrogates_on_simplex() {
        let simplex =
            ToricProfile::convex(vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![0.0, 1.0]]).unwrap();
        let tbl = convex_toric_surrogates(&simplex, 1.0).unwrap();
        let labels: Vec<&str> = tbl.orbits.iter().map(|r| r.label.as_str()).collect();
        assert_eq!(labels, vec!["v=(0,1)", "v=(1,0)", "v=(1,1)"]);
        let v10 = tbl.orbits.iter().find(|r| r.label == "v=(1,0)").unwrap();
        assert_eq!((v10.cz_lo, v10.cz_hi), (3, 3));
    }

    #[test]
    fn empty_tables_below_minimal_action() {
        let simplex =
            ToricProfile::convex(vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![0.0, 1.0]]).unwrap();
        let tbl = convex_toric_surrogates(&simplex, 0.5).unwrap();
        assert!(tbl.is_empty());
        let omega = ToricProfile::concave(vec![vec![2.0, 0.0], vec![0.0, 1.0]]).unwrap();
        let tbl = concave_toric_surrogates(&omega, 0.5).unwrap();
        assert!(tbl.is_empty());
    }

    #[test]
    fn concave_surrogates_under_line() {
        let omega = ToricProfile::concave(vec![vec![2.0, 0.0], vec![0.0, 1.0]]).unwrap();
        let tbl = concave_toric_surrogates(&omega, 2.0).unwrap();
        // index range [1 - n + 2 sum v, 2 sum v]
        let v11 = tbl.orbits.iter().find(|r| r.label == "v=(1,1)").unwrap();
        assert_eq!(v11.action, 1.0);
        assert_eq!((v11.cz_lo, v11.cz_hi), (3, 4));
        let v12 = tbl.orbits.iter().find(|r| r.label == "v=(1,2)").unwrap();
        assert_eq!(v12.action, 2.0);
        assert_eq!((v12.cz_lo, v12.cz_hi), (5, 6));
    }

    #[test]
    fn sphere_disk_actions() {
        let d = SphereDisk::new(0.25).unwrap();
        assert_eq!(
            sphere_disk_index_actions(&d, 6).unwrap(),
            vec![0.0, 0.5, 1.0, 1.5]
        );
        let d = SphereDisk::new(0.5).unwrap();
        assert_eq!(sphere_disk_index_actions(&d, 6).unwrap(), vec![0.0]);
        let d = SphereDisk::new(0.6).unwrap();
        let a = sphere_disk_index_actions(&d, 4).unwrap();
        assert_eq!(a.len(), 3);
        assert!((a[0] + 0.4).abs() < 1e-12 && (a[1] + 0.2).abs() < 1e-12 && a[2] == 0.0);
    }

    #[test]
    fn inclusion_capacity_examples() {
        let omega = ToricProfile::concave(vec![vec![2.0, 0.0], vec![0.0, 1.0]]).unwrap();
        assert_eq!(simplex_inclusion_capacity(&omega).unwrap(), 1.0);
        let simplex =
            ToricProfile::convex(vec![vec![0.0, 0.0], vec![1.5, 0.0], vec![0.0, 1.5]]).unwrap();
        assert_eq!(simplex_inclusion_capacity(&simplex).unwrap(), 1.5);
        let square = ToricProfile::convex(vec![
            vec![0.0, 0.0],
            vec![1.0, 0.0],
            vec![0.0, 1.0],
            vec![1.0, 1.0],
        ])
        .unwrap();
        assert_eq!(simplex_inclusion_capacity(&square).unwrap(), 1.0);
    }

    #[test]
    fn rejects_non_downward_closed_convex_profile() {
        // triangle missing the origin region
        let bad = ToricProfile::convex(vec![vec![1.0, 0.0], vec![0.0, 1.0], vec![1.0, 1.0]]);
        assert!(bad.is_err());
    }

    #[test]
    fn rejects_non_convex_concave_face() {
        // polyline bulging away from the origin
        let bad = ToricProfile::concave(vec![vec![2.0, 0.0], vec![1.5, 0.9], vec![0.0, 1.0]]);
        assert!(bad.is_err());
    }

    #[test]
    fn table_monotone_under_cutoff_growth() {
        let e = Ellipsoid::new(vec![1.0, PHI]).unwrap();
        let small = ellipsoid_orbits(&e, 2.0).unwrap();
        let large = ellipsoid_orbits(&e, 4.0).unwrap();
        for rec in &small.orbits {
            let found = large.orbits.iter().find(|r| r.label == rec.label).unwrap();
            assert_eq!(found.action, rec.action);
            assert_eq!(found.cz_lo, rec.cz_lo);
        }
        assert!(large.orbits.len() > small.orbits.len());
    }
}
