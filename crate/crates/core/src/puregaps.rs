//! Pure gaps at collections of totally ramified points.
//!
//! `(n_1, ..., n_s)` is a pure gap at `(P_1, ..., P_s)` when every
//! divisor `sum n_i P_i - P_j` cuts the same function space as
//! `sum n_i P_i`. Both curve families are Kummer covers of the
//! projective line of exponent `e = q^n + 1`, branched over
//!
//! * the `q/pb` totally ramified affine points, each with multiplicity 1,
//! * `(q/pb)(q - 1)` points of multiplicity `q + 1` (not totally
//!   ramified, since `q + 1` divides `e` for odd `n`),
//! * the infinite point with multiplicity `-q^3/pb`.
//!
//! Membership test: `(n_1, ..., n_s)` is a pure gap if and only if for
//! every `t` in `0..e`, at least one of
//!
//! 1. `sum_i floor((n_i + t l_i)/e) + sum_unselected floor(t l/e) < 0`,
//! 2. `floor((n_i + t l_i)/e) = floor((n_i - 1 + t l_i)/e)` for all
//!    selected `i`,
//!
//! holds, where `l_i` is the branching multiplicity and floors round
//! toward minus infinity. The two conditions can hold simultaneously
//! (already for a single place and `n_1 = 1`), so this is an inclusive
//! or, not an exclusive one.
//!
//! The closed families below produce specific pure-gap vectors; each
//! result is confirmed against the membership test before it is
//! returned.

use crate::curves::{Curve, Family};
use thiserror::Error;

/// Ceiling on `box_cells * exponent` for [`enumerate_pure_gaps`].
pub const ENUM_WORK_CAP: u128 = 1 << 31;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("pure-gap machinery requires s = 1, got s = {s}")]
    UnsupportedS { s: u64 },
    #[error("invalid query: {reason}")]
    InvalidQuery { reason: String },
    #[error("k = {k} outside the valid range {lo}..={hi}")]
    KOutOfRange { k: u64, lo: u64, hi: u64 },
    #[error("alpha = {alpha} exceeds the maximum {max}")]
    AlphaOutOfRange { alpha: u64, max: u64 },
    #[error("{what} = {value} exceeds the maximum {max}")]
    ParamOutOfRange {
        what: &'static str,
        value: u64,
        max: u64,
    },
    #[error("n = {n} is unsupported here (need n >= {min})")]
    UnsupportedN { n: u32, min: u32 },
    #[error("enumeration work {work} exceeds the cap {cap}")]
    BoxTooLarge { work: u128, cap: u128 },
    #[error("arithmetic overflow")]
    Overflow,
}

/// Branching data of the Kummer cover underlying a curve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KummerModel {
    /// Kummer exponent `q^n + 1`.
    pub exponent: u64,
    /// Number of totally ramified affine points (multiplicity 1).
    pub affine_count: u64,
    /// Multiplicity at the infinite point (negative).
    pub pole_lambda: i64,
    /// Remaining branch points as `(count, multiplicity)`; not totally
    /// ramified, so they only ever contribute to the floor sums.
    pub other_places: Vec<(u64, i64)>,
}

/// A selectable totally ramified point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Place {
    PInfty,
    /// 1-based index among the `q/pb` totally ramified affine points.
    P(u32),
}

/// Branching model for a curve with `s = 1`.
pub fn curve_kummer_model(curve: &Curve) -> Result<KummerModel, Error> {
    if curve.s != 1 {
        return Err(Error::UnsupportedS { s: curve.s });
    }
    let qn = curve
        .q
        .checked_pow(curve.n)
        .ok_or(Error::Overflow)?;
    let exponent = qn.checked_add(1).ok_or(Error::Overflow)?;
    let affine_count = curve.q / curve.pb;
    let pole = -((curve.q.pow(3) / curve.pb) as i64);
    let model = KummerModel {
        exponent,
        affine_count,
        pole_lambda: pole,
        other_places: vec![(affine_count * (curve.q - 1), (curve.q + 1) as i64)],
    };
    // The multiplicities of a principal divisor sum to zero.
    let balance: i64 = affine_count as i64
        + pole
        + model
            .other_places
            .iter()
            .map(|&(c, l)| c as i64 * l)
            .sum::<i64>();
    debug_assert_eq!(balance, 0);
    Ok(model)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl KummerModel {
    /// Genus of the cover by Riemann-Hurwitz over the rational function
    /// field; agrees with the curve genus.
    pub fn genus(&self) -> u128 {
        let e = self.exponent as i128;
        let contrib = |l: i64| e - gcd(l.unsigned_abs() % self.exponent, self.exponent) as i128;
        let mut total = self.affine_count as i128 * contrib(1) + contrib(self.pole_lambda);
        for &(c, l) in &self.other_places {
            total += c as i128 * contrib(l);
        }
        let two_g = -2 * e + 2 + total;
        debug_assert!(two_g >= 0 && two_g % 2 == 0);
        (two_g / 2) as u128
    }

    fn lambda_of(&self, place: Place) -> Result<i64, Error> {
        match place {
            Place::PInfty => Ok(self.pole_lambda),
            Place::P(i) => {
                if i == 0 || i as u64 > self.affine_count {
                    Err(Error::InvalidQuery {
                        reason: format!(
                            "affine place index {i} outside 1..={}",
                            self.affine_count
                        ),
                    })
                } else {
                    Ok(1)
                }
            }
        }
    }

    fn check_selection(&self, selected: &[Place], ns: &[u64]) -> Result<Vec<i64>, Error> {
        if selected.is_empty() {
            return Err(Error::InvalidQuery {
                reason: "no places selected".into(),
            });
        }
        if selected.len() != ns.len() {
            return Err(Error::InvalidQuery {
                reason: format!(
                    "{} places selected but {} pole orders given",
                    selected.len(),
                    ns.len()
                ),
            });
        }
        for (i, a) in selected.iter().enumerate() {
            if selected[i + 1..].contains(a) {
                return Err(Error::InvalidQuery {
                    reason: format!("duplicate place {a:?}"),
                });
            }
        }
        selected.iter().map(|&p| self.lambda_of(p)).collect()
    }

    /// Floor-sum contribution at `t` of every branch point that is not
    /// selected (their pole orders are zero).
    fn unselected_sum(&self, selected: &[Place], t: u64) -> i128 {
        let e = self.exponent as i128;
        let t = t as i128;
        let mut sum: i128 = 0;
        let sel_affine = selected
            .iter()
            .filter(|p| matches!(p, Place::P(_)))
            .count() as i128;
        sum += (self.affine_count as i128 - sel_affine) * (t / e); // lambda = 1, floor(t/e)
        if !selected.contains(&Place::PInfty) {
            sum += (t * self.pole_lambda as i128).div_euclid(e);
        }
        for &(c, l) in &self.other_places {
            sum += c as i128 * (t * l as i128).div_euclid(e);
        }
        sum
    }
}

/// One row of [`pure_gap_trace`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceRow {
    pub t: u64,
    /// `sum_i floor((n_i + t l_i)/e)` over the selected places.
    pub selected_sum: i128,
    /// Floor sum over all unselected branch points.
    pub unselected_sum: i128,
    pub condition1: bool,
    pub condition2: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PureGapTrace {
    pub pure: bool,
    pub rows: Vec<TraceRow>,
}

fn trace_impl(
    model: &KummerModel,
    selected: &[Place],
    ns: &[u64],
    keep_rows: bool,
) -> Result<PureGapTrace, Error> {
    let lambdas = model.check_selection(selected, ns)?;
    let e = model.exponent as i128;
    let mut pure = true;
    let mut rows = Vec::new();
    for t in 0..model.exponent {
        let mut selected_sum: i128 = 0;
        let mut condition2 = true;
        for (&n, &l) in ns.iter().zip(&lambdas) {
            let shifted = n as i128 + t as i128 * l as i128;
            selected_sum += shifted.div_euclid(e);
            if shifted.div_euclid(e) != (shifted - 1).div_euclid(e) {
                condition2 = false;
            }
        }
        let unselected_sum = model.unselected_sum(selected, t);
        let condition1 = selected_sum + unselected_sum < 0;
        if !(condition1 || condition2) {
            pure = false;
            if !keep_rows {
                break;
            }
        }
        if keep_rows {
            rows.push(TraceRow {
                t,
                selected_sum,
                unselected_sum,
                condition1,
                condition2,
            });
        }
    }
    Ok(PureGapTrace { pure, rows })
}

/// Decides whether `ns` is a pure gap at `selected`.
pub fn is_pure_gap(model: &KummerModel, selected: &[Place], ns: &[u64]) -> Result<bool, Error> {
    Ok(trace_impl(model, selected, ns, false)?.pure)
}

/// Like [`is_pure_gap`], but returns the per-`t` floor sums and
/// condition flags.
pub fn pure_gap_trace(
    model: &KummerModel,
    selected: &[Place],
    ns: &[u64],
) -> Result<PureGapTrace, Error> {
    trace_impl(model, selected, ns, true)
}

/// All pure gaps `(n_1, ..., n_s)` with `n_i <= bound_i`, in
/// lexicographic order.
pub fn enumerate_pure_gaps(
    model: &KummerModel,
    selected: &[Place],
    bound: &[u64],
) -> Result<Vec<Vec<u64>>, Error> {
    model.check_selection(selected, &vec![0; selected.len()])?;
    if bound.len() != selected.len() {
        return Err(Error::InvalidQuery {
            reason: format!(
                "{} places selected but {} bounds given",
                selected.len(),
                bound.len()
            ),
        });
    }
    let cells: u128 = bound.iter().map(|&b| b as u128 + 1).product();
    let work = cells * model.exponent as u128;
    if work > ENUM_WORK_CAP {
        return Err(Error::BoxTooLarge {
            work,
            cap: ENUM_WORK_CAP,
        });
    }
    let mut out = Vec::new();
    let mut ns = vec![0u64; selected.len()];
    'outer: loop {
        if is_pure_gap(model, selected, &ns)? {
            out.push(ns.clone());
        }
        // Odometer in lexicographic order: bump the last coordinate.
        for d in (0..ns.len()).rev() {
            if ns[d] < bound[d] {
                ns[d] += 1;
                for v in ns[d + 1..].iter_mut() {
                    *v = 0;
                }
                continue 'outer;
            }
        }
        break;
    }
    Ok(out)
}

fn confirm(curve: &Curve, selected: &[Place], ns: &[u64]) -> Result<(), Error> {
    let model = curve_kummer_model(curve)?;
    if is_pure_gap(&model, selected, ns)? {
        Ok(())
    } else {
        Err(Error::InvalidQuery {
            reason: format!("{ns:?} fails the membership test at {selected:?}"),
        })
    }
}

fn curve_qn1(curve: &Curve) -> Result<u64, Error> {
    curve
        .q
        .checked_pow(curve.n)
        .and_then(|v| v.checked_add(1))
        .ok_or(Error::Overflow)
}

/// Pure gap `((q^2/pb - m)(q^n+1) - k q^3, k, ..., k, k-1)` at
/// `(P_infty, P_1, ..., P_m)`, defined for `2 <= k <= M` as long as the
/// first coordinate stays positive.
pub fn pure_gap_k_family(curve: &Curve, m: u32, k: u64) -> Result<Vec<u64>, Error> {
    if curve.s != 1 {
        return Err(Error::UnsupportedS { s: curve.s });
    }
    let max_m = curve.q / curve.pb;
    if m == 0 || m as u64 > max_m {
        return Err(Error::ParamOutOfRange {
            what: "m",
            value: m as u64,
            max: max_m,
        });
    }
    let qn1 = curve_qn1(curve)? as u128;
    let q3 = (curve.q as u128).pow(3);
    let lead = (curve.q as u128 * curve.q as u128 / curve.pb as u128 - m as u128) * qn1;
    // Positive first coordinate caps k below M itself on small curves.
    let hi = (curve.m as u128).min((lead - 1) / q3);
    let hi = u64::try_from(hi).map_err(|_| Error::Overflow)?;
    if k < 2 || k > hi {
        return Err(Error::KOutOfRange { k, lo: 2, hi });
    }
    let c0 = u64::try_from(lead - k as u128 * q3).map_err(|_| Error::Overflow)?;
    let mut ns = vec![c0];
    ns.extend(std::iter::repeat(k).take(m as usize - 1));
    ns.push(k - 1);
    let mut selected = vec![Place::PInfty];
    selected.extend((1..=m).map(Place::P));
    confirm(curve, &selected, &ns)?;
    Ok(ns)
}

/// Witness for [`pure_gap_alpha_ones`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaOnesWitness {
    /// The pure gap `(alpha, 1, ..., 1)` at `(P_infty, P_1, ..., P_m)`.
    pub vector: Vec<u64>,
    /// Which sufficient condition fired (1 or 2).
    pub condition: u8,
    /// `lambda (q^n+1) + beta q M + gamma q^3 = 2g - 1 - alpha`, with
    /// `lambda >= m` for condition 1 and `lambda = 0` for condition 2.
    pub lambda: u64,
    pub beta: u64,
    pub gamma: u64,
}

/// Tests the two sufficient conditions for `(alpha, 1, ..., 1)` to be a
/// pure gap at `(P_infty, P_1, ..., P_m)`:
///
/// 1. `lambda (q^n+1) + beta q M + gamma q^3 = 2g - 1 - alpha` has a
///    solution with `lambda >= m`, or
/// 2. `2g - 2 - alpha >= (m-1)(q^n+1)` and
///    `beta q M + gamma q^3 = 2g - 1 - alpha` has a solution.
///
/// Returns `None` when neither condition applies (the vector may still
/// be a pure gap). A returned witness is confirmed against the
/// membership test.
pub fn pure_gap_alpha_ones(
    curve: &Curve,
    m: u32,
    alpha: u64,
) -> Result<Option<AlphaOnesWitness>, Error> {
    if curve.s != 1 {
        return Err(Error::UnsupportedS { s: curve.s });
    }
    let max_m = curve.q / curve.pb;
    if m == 0 || m as u64 > max_m {
        return Err(Error::ParamOutOfRange {
            what: "m",
            value: m as u64,
            max: max_m,
        });
    }
    let two_g = 2 * curve.genus;
    let max_alpha = u64::try_from(two_g - 2).map_err(|_| Error::Overflow)?;
    if alpha as u128 >= two_g - 1 {
        return Err(Error::AlphaOutOfRange {
            alpha,
            max: max_alpha,
        });
    }
    let qn1 = curve_qn1(curve)? as u128;
    let qm = curve.q as u128 * curve.m as u128;
    let q3 = (curve.q as u128).pow(3);
    let target = two_g - 1 - alpha as u128;

    let solve_two_term = |rest: u128| -> Option<(u64, u64)> {
        // beta * qM + gamma * q^3 = rest with beta, gamma >= 0.
        let mut gamma = 0u128;
        while gamma * q3 <= rest {
            let rem = rest - gamma * q3;
            if rem % qm == 0 {
                return Some(((rem / qm) as u64, gamma as u64));
            }
            gamma += 1;
        }
        None
    };

    let mut witness: Option<AlphaOnesWitness> = None;
    let mut lambda = m as u128;
    while lambda * qn1 <= target {
        if let Some((beta, gamma)) = solve_two_term(target - lambda * qn1) {
            witness = Some(AlphaOnesWitness {
                vector: Vec::new(),
                condition: 1,
                lambda: lambda as u64,
                beta,
                gamma,
            });
            break;
        }
        lambda += 1;
    }
    if witness.is_none() && two_g - 2 - alpha as u128 >= (m as u128 - 1) * qn1 {
        if let Some((beta, gamma)) = solve_two_term(target) {
            witness = Some(AlphaOnesWitness {
                vector: Vec::new(),
                condition: 2,
                lambda: 0,
                beta,
                gamma,
            });
        }
    }
    let Some(mut w) = witness else {
        return Ok(None);
    };
    let mut ns = vec![alpha];
    ns.extend(std::iter::repeat(1).take(m as usize));
    let mut selected = vec![Place::PInfty];
    selected.extend((1..=m).map(Place::P));
    confirm(curve, &selected, &ns)?;
    w.vector = ns;
    Ok(Some(w))
}

/// Pure gap pair at two totally ramified affine points `(P_1, P_2)` for
/// `n >= 5`:
///
/// ```text
/// n_1 = (beta + 1) q^(n-3) (q^2 - q + 1) + alpha (q^n + 1)
/// n_2 = (q^2/pb - 3)(q^n + 1) + 3 q^(n-3) (q^2 - q + 1) - n_1
/// ```
///
/// with `alpha <= q^2/pb - 3` and `beta <= 1`.
pub fn pure_gap_pair_affine(curve: &Curve, alpha: u64, beta: u64) -> Result<(u64, u64), Error> {
    if curve.s != 1 {
        return Err(Error::UnsupportedS { s: curve.s });
    }
    if curve.n < 5 {
        return Err(Error::UnsupportedN { n: curve.n, min: 5 });
    }
    if curve.q / curve.pb < 2 {
        return Err(Error::ParamOutOfRange {
            what: "affine point count",
            value: curve.q / curve.pb,
            max: 1,
        });
    }
    let q2pb = curve.q * curve.q / curve.pb;
    if q2pb < 3 || alpha > q2pb - 3 {
        return Err(Error::AlphaOutOfRange {
            alpha,
            max: q2pb.saturating_sub(3),
        });
    }
    if beta > 1 {
        return Err(Error::ParamOutOfRange {
            what: "beta",
            value: beta,
            max: 1,
        });
    }
    let qn1 = curve_qn1(curve)? as u128;
    let block = (curve.q as u128).pow(curve.n - 3) * (curve.q as u128 * curve.q as u128
        - curve.q as u128
        + 1);
    let n1 = (beta as u128 + 1) * block + alpha as u128 * qn1;
    let n2 = (q2pb as u128 - 3) * qn1 + 3 * block - n1;
    let n1 = u64::try_from(n1).map_err(|_| Error::Overflow)?;
    let n2 = u64::try_from(n2).map_err(|_| Error::Overflow)?;
    confirm(curve, &[Place::P(1), Place::P(2)], &[n1, n2])?;
    Ok((n1, n2))
}

/// Pure gap pair at `(P_infty, P_1)` on the second curve family,
/// returned in that place order:
///
/// ```text
/// at P_1:     1 + alpha (q^n + 1)
/// at P_infty: (q^2 - 2)(q^n + 1) + q^n - 2 q^3 + 2 - (value at P_1)
/// ```
///
/// with `alpha <= q^2 - 2`. The sourced statement lists the pair in the
/// opposite order; with the place identifications fixed by the
/// one-point semigroups, the larger coordinate of the pair sits at
/// `P_infty` (already for `alpha = 0` the affine value would otherwise
/// land on a semigroup member), so the membership test forces this
/// order.
pub fn pure_gap_pair_infty(curve: &Curve, alpha: u64) -> Result<(u64, u64), Error> {
    if curve.s != 1 {
        return Err(Error::UnsupportedS { s: curve.s });
    }
    if curve.family != Family::Y {
        return Err(Error::InvalidQuery {
            reason: "this pair family is only available on the second curve family".into(),
        });
    }
    let q2 = curve.q * curve.q;
    if alpha > q2 - 2 {
        return Err(Error::AlphaOutOfRange {
            alpha,
            max: q2 - 2,
        });
    }
    let qn1 = curve_qn1(curve)? as u128;
    let qn = qn1 - 1;
    let q3 = (curve.q as u128).pow(3);
    let at_p1 = 1 + alpha as u128 * qn1;
    let total = (q2 as u128 - 2) * qn1 + qn + 2 - 2 * q3;
    let at_pinfty = total
        .checked_sub(at_p1)
        .filter(|&v| v > 0)
        .ok_or_else(|| Error::InvalidQuery {
            reason: format!("alpha = {alpha} leaves no positive coordinate at the infinite point"),
        })?;
    let at_pinfty = u64::try_from(at_pinfty).map_err(|_| Error::Overflow)?;
    let at_p1 = u64::try_from(at_p1).map_err(|_| Error::Overflow)?;
    confirm(curve, &[Place::PInfty, Place::P(1)], &[at_pinfty, at_p1])?;
    Ok((at_pinfty, at_p1))
}
