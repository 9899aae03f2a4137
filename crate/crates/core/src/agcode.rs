//! Parameters of residue AG codes supported on the totally ramified
//! points.
//!
//! For a divisor `G = sum c_i P_i` over distinct rational points and
//! `D` the sum of all remaining rational points, the residue code
//! `C(D, G)` has length `n = #points - #supp(G)`, dimension
//! `k = n - deg G + g - 1` whenever `2g - 2 < deg G < n`, and designed
//! minimum distance `deg G - (2g - 2)`. When `G` is built from a pair
//! of pure gaps `(a_i)`, `(b_i)` as `G = sum (a_i + b_i - 1) P_i`, the
//! designed distance improves to `deg G - (2g - 2) + #supp(G)`.

use crate::curves::Curve;
use crate::puregaps::{self, curve_kummer_model, is_pure_gap, Place};
use std::cmp::Ordering;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{which} is not a pure gap at the selected points")]
    NotPureGap { which: &'static str },
    #[error("invalid query: {reason}")]
    InvalidQuery { reason: String },
    #[error("arithmetic overflow")]
    Overflow,
    #[error(transparent)]
    PureGaps(#[from] puregaps::Error),
}

/// Where the reported minimum-distance bound comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundSource {
    /// Designed distance `deg G - (2g - 2)`.
    Goppa,
    /// Pure-gap improvement `deg G - (2g - 2) + #supp(G)`.
    PureGap,
    /// Supplied from outside (e.g. an exact distance computed
    /// elsewhere); not derived here.
    External,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeParams {
    /// Code length.
    pub n: u64,
    /// Dimension, when `2g - 2 < deg G < n` pins it down.
    pub k: Option<u128>,
    /// Lower bound on the minimum distance (at least 1).
    pub d_lower: u128,
    pub bound_source: BoundSource,
    pub genus: u128,
    pub deg_g: u128,
    /// Number of points supporting `G`.
    pub support_points: u32,
    /// Alphabet size `q^(2n)` of the curve's field of definition.
    pub alphabet: u128,
}

impl CodeParams {
    /// Replaces the distance bound with an externally computed value.
    pub fn with_external_distance(mut self, d: u128) -> CodeParams {
        self.d_lower = d;
        self.bound_source = BoundSource::External;
        self
    }

    /// `k + d <= n + 1`.
    pub fn satisfies_singleton(&self) -> bool {
        match self.k {
            Some(k) => k + self.d_lower <= self.n as u128 + 1,
            None => true,
        }
    }
}

fn alphabet_size(curve: &Curve) -> Result<u128, Error> {
    (curve.q as u128)
        .checked_pow(2 * curve.n)
        .ok_or(Error::Overflow)
}

fn assemble(
    curve: &Curve,
    deg_g: u128,
    support_points: u32,
    improvement: u128,
    bound_source: BoundSource,
) -> Result<CodeParams, Error> {
    let points = curve.rational_point_count();
    let n = points
        .checked_sub(support_points as u128)
        .ok_or(Error::Overflow)?;
    let n = u64::try_from(n).map_err(|_| Error::Overflow)?;
    let two_g_minus_2 = 2 * curve.genus - 2;
    let k = if deg_g > two_g_minus_2 && deg_g < n as u128 {
        Some(n as u128 - deg_g + curve.genus - 1)
    } else {
        None
    };
    let d_signed = deg_g as i128 - two_g_minus_2 as i128 + improvement as i128;
    let d_lower = if d_signed < 1 { 1 } else { d_signed as u128 };
    Ok(CodeParams {
        n,
        k,
        d_lower,
        bound_source,
        genus: curve.genus,
        deg_g,
        support_points,
        alphabet: alphabet_size(curve)?,
    })
}

fn check_support(places: &[Place]) -> Result<(), Error> {
    if places.is_empty() {
        return Err(Error::InvalidQuery {
            reason: "empty support".into(),
        });
    }
    for (i, p) in places.iter().enumerate() {
        if places[i + 1..].contains(p) {
            return Err(Error::InvalidQuery {
                reason: format!("duplicate place {p:?} in the support"),
            });
        }
    }
    Ok(())
}

/// Residue code on `G = sum (alpha_i + beta_i - 1) P_i` where both
/// `alpha` and `beta` are pure gaps at `places`; the distance bound
/// gains the support size.
pub fn code_from_pure_gaps(
    curve: &Curve,
    alpha: &[u64],
    beta: &[u64],
    places: &[Place],
) -> Result<CodeParams, Error> {
    check_support(places)?;
    if alpha.len() != places.len() || beta.len() != places.len() {
        return Err(Error::InvalidQuery {
            reason: format!(
                "support has {} points but the gap vectors have {} and {} coordinates",
                places.len(),
                alpha.len(),
                beta.len()
            ),
        });
    }
    let model = curve_kummer_model(curve)?;
    if !is_pure_gap(&model, places, alpha)? {
        return Err(Error::NotPureGap { which: "alpha" });
    }
    if !is_pure_gap(&model, places, beta)? {
        return Err(Error::NotPureGap { which: "beta" });
    }
    let mut deg_g: u128 = 0;
    for (&a, &b) in alpha.iter().zip(beta) {
        deg_g += a as u128 + b as u128 - 1; // both >= 1 for pure gaps
    }
    assemble(
        curve,
        deg_g,
        places.len() as u32,
        places.len() as u128,
        BoundSource::PureGap,
    )
}

/// Residue code on `G = sum c_i P_i` with the designed distance bound.
/// Zero coefficients are dropped from the support.
pub fn code_goppa(curve: &Curve, coeffs: &[(Place, u64)]) -> Result<CodeParams, Error> {
    let live: Vec<(Place, u64)> = coeffs.iter().copied().filter(|&(_, c)| c > 0).collect();
    let places: Vec<Place> = live.iter().map(|&(p, _)| p).collect();
    check_support(&places)?;
    // Validate the place indices against the curve.
    let model = curve_kummer_model(curve)?;
    is_pure_gap(&model, &places, &vec![1; places.len()])?;
    let deg_g: u128 = live.iter().map(|&(_, c)| c as u128).sum();
    assemble(
        curve,
        deg_g,
        places.len() as u32,
        0,
        BoundSource::Goppa,
    )
}

/// Outcome of comparing two codes by rate `k/n` and relative distance
/// `d/n`, computed exactly by cross-multiplication.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Comparison {
    pub rate: Ordering,
    pub relative_distance: Ordering,
    /// True when the first code is at least as good on both measures
    /// and strictly better on at least one.
    pub first_dominates: bool,
}

pub fn compare_relative(a: &CodeParams, b: &CodeParams) -> Result<Comparison, Error> {
    let (Some(ka), Some(kb)) = (a.k, b.k) else {
        return Err(Error::InvalidQuery {
            reason: "both codes need a determined dimension to compare rates".into(),
        });
    };
    let rate = (ka * b.n as u128).cmp(&(kb * a.n as u128));
    let relative_distance =
        (a.d_lower * b.n as u128).cmp(&(b.d_lower * a.n as u128));
    let first_dominates = rate != Ordering::Less
        && relative_distance != Ordering::Less
        && (rate == Ordering::Greater || relative_distance == Ordering::Greater);
    Ok(Comparison {
        rate,
        relative_distance,
        first_dominates,
    })
}
