//! Index bounds for geodesics between complex submanifolds and the
//! resulting homotopy connectivity ranges.
//!
//! Throughout, `v` is the complex dimension of the ambient space, `ℓ` its
//! complex positivity and `m`, `n` the complex dimensions of `M`, `N`.

use serde::Serialize;

use crate::curvature::complex_positivity;
use crate::error::{Error, Result};
use crate::hss_catalog::{HermitianSpace, SpaceId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CurvatureMode {
    Positive,
    Nonnegative,
}

fn check_dims(m: usize, n: usize, v: usize) -> Result<()> {
    if m > v || n > v {
        return Err(Error::Argument(format!("submanifold dimensions m = {m}, n = {n} must not exceed v = {v}")));
    }
    Ok(())
}

/// Lower bound on the index of a geodesic from `M` to `N`.
pub fn index_bound(m: usize, n: usize, v: usize, ell: usize, mode: CurvatureMode) -> Result<i64> {
    check_dims(m, n, v)?;
    if ell > v {
        return Err(Error::Argument(format!("ℓ = {ell} exceeds v = {v}")));
    }
    let base = m as i64 + n as i64 - (v as i64 - 1);
    Ok(match mode {
        CurvatureMode::Positive => base,
        CurvatureMode::Nonnegative => base - (v - ell) as i64,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConnectivityReport {
    pub space_id: SpaceId,
    pub v: usize,
    pub ell: usize,
    pub m: usize,
    pub n: usize,
    /// `π_j(N, N∩M) → π_j(V, M)` is an isomorphism for `j ≤ lambda0`.
    pub lambda0: i64,
    pub iso_max: i64,
    pub surj_at: i64,
    /// `π_j(V, M) = 0` for `j ≤ pi_vanish_max`.
    pub pi_vanish_max: i64,
    /// `π_j(N, N∩M) = 0` for `j ≤ pair_vanish_max`.
    pub pair_vanish_max: i64,
    /// Set when `lambda0 < 0`, so that no range is asserted.
    pub vacuous: bool,
}

impl ConnectivityReport {
    pub fn new(space_id: SpaceId, v: usize, ell: usize, m: usize, n: usize) -> Result<Self> {
        check_dims(m, n, v)?;
        if ell > v {
            return Err(Error::Argument(format!("ℓ = {ell} exceeds v = {v}")));
        }
        let defect = (v - ell) as i64;
        let (v_, m_, n_) = (v as i64, m as i64, n as i64);
        let lambda0 = n_ + m_ - v_ - defect;
        let pi_vanish_max = 2 * m_ - v_ - defect + 1;
        Ok(Self {
            space_id,
            v,
            ell,
            m,
            n,
            lambda0,
            iso_max: lambda0,
            surj_at: lambda0 + 1,
            pi_vanish_max,
            pair_vanish_max: pi_vanish_max.min(lambda0),
            vacuous: lambda0 < 0,
        })
    }
}

/// Connectivity ranges for `space`; `ell_override` replaces ℓ by a larger
/// cone dimension known to hold along the normal directions in question.
pub fn connectivity(
    space: &HermitianSpace,
    m: usize,
    n: usize,
    ell_override: Option<usize>,
) -> Result<ConnectivityReport> {
    let ell = complex_positivity(space)?;
    connectivity_with_ell(space.id(), space.v(), ell, m, n, ell_override)
}

/// As [`connectivity`], with `v` and ℓ already known.
pub fn connectivity_with_ell(
    id: SpaceId,
    v: usize,
    ell: usize,
    m: usize,
    n: usize,
    ell_override: Option<usize>,
) -> Result<ConnectivityReport> {
    let effective = match ell_override {
        None => ell,
        Some(e) if e < ell => {
            return Err(Error::Argument(format!("ℓ₀ = {e} is below the complex positivity ℓ = {ell} of {id}")));
        }
        Some(e) if e > v => return Err(Error::Argument(format!("ℓ₀ = {e} exceeds v = {v}"))),
        Some(e) => e,
    };
    ConnectivityReport::new(id, v, effective, m, n)
}

/// Closed-form isomorphism bound `j ≤ iso` for each family, written in the
/// family parameters rather than `v` and ℓ. Surjectivity holds at `iso + 1`.
pub fn closed_form_iso_max(id: SpaceId, m: usize, n: usize) -> i64 {
    let s = m as i64 + n as i64;
    match id {
        SpaceId::Grassmannian { p, q } => {
            let (p, q) = (p as i64, q as i64);
            s - 2 * p * q + p + q - 1
        }
        SpaceId::Quadric { p } => s - p as i64 - 1,
        SpaceId::Lagrangian { r } => s - (r * r) as i64,
        SpaceId::Spinor { r } => {
            let r = r as i64;
            s - r * r + 3 * r - 3
        }
        SpaceId::E6 => s - 21,
        SpaceId::E7 => s - 37,
    }
}

/// Compares the closed form with the first-principles report.
pub fn matches_closed_form(report: &ConnectivityReport) -> bool {
    let iso = closed_form_iso_max(report.space_id, report.m, report.n);
    report.iso_max == iso && report.surj_at == iso + 1
}

pub fn closed_form_check(space: &HermitianSpace, m: usize, n: usize) -> Result<bool> {
    Ok(matches_closed_form(&connectivity(space, m, n, None)?))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GridReport {
    pub space_id: SpaceId,
    pub v: usize,
    pub ell: usize,
    pub points: usize,
    pub mismatches: Vec<(usize, usize)>,
}

/// `closed_form_check` over every `0 ≤ m, n ≤ v`, with ℓ computed once.
pub fn closed_form_grid(space: &HermitianSpace) -> Result<GridReport> {
    let ell = complex_positivity(space)?;
    let v = space.v();
    let mut mismatches = Vec::new();
    for m in 0..=v {
        for n in 0..=v {
            let report = connectivity_with_ell(space.id(), v, ell, m, n, None)?;
            if !matches_closed_form(&report) {
                mismatches.push((m, n));
            }
        }
    }
    Ok(GridReport { space_id: space.id(), v, ell, points: (v + 1) * (v + 1), mismatches })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankRefinement {
    pub p: usize,
    pub q: usize,
    pub r: usize,
    /// Cone dimension when every normal vector has rank at least `r`.
    pub ell0: usize,
    /// `ell0 − (p+q−1)`: the gain in every connectivity range over `r = 1`.
    pub increase: usize,
    /// `r − 1`, kept for comparison with `increase`.
    pub stated_increase: usize,
}

pub fn grassmann_rank_refinement(p: usize, q: usize, r: usize) -> Result<RankRefinement> {
    SpaceId::Grassmannian { p, q }.validate()?;
    if r == 0 || r > p.min(q) {
        return Err(Error::Argument(format!("rank {r} is outside 1..={}", p.min(q))));
    }
    let ell0 = p * q - (p - r) * (q - r);
    Ok(RankRefinement { p, q, r, ell0, increase: ell0 - (p + q - 1), stated_increase: r - 1 })
}
