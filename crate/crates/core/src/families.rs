//! Two auxiliary families of numerical semigroups with closed-form
//! invariants, block decompositions of their member sets, and
//! independent oracles that audit every closed form.
//!
//! # The `spnk` family
//!
//! For parameters `(P, N, K)` with `P | N - 1`, `P | K - 1`, `K < N`,
//! the semigroup is generated by `{ K N + a N - j : 0 <= j <= a <= P }`.
//! Its members split into disjoint blocks: block `M >= 1` is the part of
//! the semigroup inside the window `[(M-1)(K+P)N + 1, M(K+P)N]`, and the
//! block cardinalities, conductor, Frobenius number, and genus all have
//! closed forms. With `N = (q^3 + 1)/(q + 1)`, `K = q + 1 - pb`,
//! `P = pb`, this family realizes the `n = 3` point semigroups of the
//! curves in [`crate::curves`].
//!
//! # The `sprime` family
//!
//! For a prime power `q`, a power `pb` of the same prime dividing `q`,
//! and odd `n >= 3`, the semigroup is generated by
//! `{ q^n + 1 - i M - j : i M + j q^2 <= q^{n-1} pb }` with
//! `M = (q^n + 1)/(q + 1)`. An equivalent reparametrized generator set
//! is `{ k A + l : k0 <= k <= k1, l0 <= l <= k l1 }` where
//! `A = q^{n-1} - q^{n-2}`, `k0 = q + 1 - pb`, `k1 = q + 1`,
//! `l0 = q^{n-3}(q - pb) + 1`, `l1 = (q^{n-2} + 1)/(q + 1)`. Members
//! split into windows of length `q^n + 1`; inside window `m` the m-fold
//! sums of generators form overlapping runs
//! `S_{m,k} = [k A + m l0, k (A + l1)]`, and the gaps of the semigroup
//! are exactly the positions between consecutive runs plus, for small
//! `m`, a leading segment at the start of the window. Summing the
//! per-window counts recovers the genus
//! `(q^{n+2} - pb q^n - q^3 + q^2) / (2 pb)`.

use crate::numsg;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid (P, N, K) parameters: {reason}")]
    InvalidSPNK { reason: String },
    #[error("invalid parameters: {reason}")]
    InvalidParams { reason: String },
    #[error("{what} is not an integer for these parameters")]
    NonIntegerResult { what: &'static str },
    #[error("arithmetic overflow")]
    Overflow,
    #[error(transparent)]
    Semigroup(#[from] numsg::Error),
}

// ---------------------------------------------------------------------
// spnk
// ---------------------------------------------------------------------

/// Parameters `(P, N, K)` with `P | N - 1`, `P | K - 1`, `1 <= K < N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpnkParams {
    pub p: u64,
    pub n: u64,
    pub k: u64,
}

impl SpnkParams {
    pub fn new(p: u64, n: u64, k: u64) -> Result<Self, Error> {
        let fail = |reason: String| Err(Error::InvalidSPNK { reason });
        if p == 0 || n < 2 || k == 0 {
            return fail(format!("need P >= 1, N >= 2, K >= 1, got ({p}, {n}, {k})"));
        }
        if k >= n {
            return fail(format!("need K < N, got K = {k}, N = {n}"));
        }
        if (n - 1) % p != 0 {
            return fail(format!("P = {p} does not divide N - 1 = {}", n - 1));
        }
        if (k - 1) % p != 0 {
            return fail(format!("P = {p} does not divide K - 1 = {}", k - 1));
        }
        Ok(SpnkParams { p, n, k })
    }
}

/// Exact division helper for closed forms that are divisible by design.
fn exact_div(num: i128, den: i128, what: &'static str) -> Result<u128, Error> {
    if den == 0 || num % den != 0 {
        return Err(Error::NonIntegerResult { what });
    }
    let v = num / den;
    if v < 0 {
        return Err(Error::Overflow);
    }
    Ok(v as u128)
}

/// Generators `{ K N + a N - j : 0 <= j <= a <= P }`, ascending, dedup.
pub fn spnk_generators(params: &SpnkParams) -> Vec<u64> {
    let SpnkParams { p, n, k } = *params;
    let mut gens = Vec::with_capacity(((p + 1) * (p + 2) / 2) as usize);
    for a in 0..=p {
        for j in 0..=a {
            gens.push(k * n + a * n - j);
        }
    }
    gens.sort_unstable();
    gens.dedup();
    gens
}

/// Conductor `(N^2 K + N K^2 + N^2 P - 2 N K - 3 N P + 2 P) / P`.
pub fn spnk_conductor_closed(params: &SpnkParams) -> Result<u128, Error> {
    let (p, n, k) = (params.p as i128, params.n as i128, params.k as i128);
    exact_div(
        n * n * k + n * k * k + n * n * p - 2 * n * k - 3 * n * p + 2 * p,
        p,
        "conductor",
    )
}

/// Genus `(N^2 K + N K^2 + N^2 P + N K P - 3 N K - 3 N P + P + 1) / (2 P)`.
pub fn spnk_genus_closed(params: &SpnkParams) -> Result<u128, Error> {
    let (p, n, k) = (params.p as i128, params.n as i128, params.k as i128);
    exact_div(
        n * n * k + n * k * k + n * n * p + n * k * p - 3 * n * k - 3 * n * p + p + 1,
        2 * p,
        "genus",
    )
}

/// Frobenius number in structural form, `M_F K N + N^2 - 3 N + 1` with
/// `M_F = (K + N - 2) / P` the index of the last gapped block.
pub fn spnk_frobenius_structural(params: &SpnkParams) -> Result<u128, Error> {
    let (p, n, k) = (params.p as i128, params.n as i128, params.k as i128);
    let m_f = exact_div(k + n - 2, p, "M_F")? as i128;
    let v = m_f * k * n + n * n - 3 * n + 1;
    if v < 0 {
        return Err(Error::Overflow);
    }
    Ok(v as u128)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpnkThresholds {
    /// Below `M0 = (K-1)/P + 1` a block is a full triangle.
    pub m0: u64,
    /// `M1 = (N-1)/P`; blocks switch shape above it.
    pub m1: u64,
    /// `M_F = (K+N-2)/P = M0 + M1 - 1`, the last block with gaps.
    pub m_f: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Block {
    pub m: u64,
    /// Inclusive window `[(m-1) W + 1, m W]` this block lives in.
    pub window: (u64, u64),
    /// Number of semigroup members inside the window.
    pub cardinality: u128,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpnkBlocks {
    pub thresholds: SpnkThresholds,
    pub blocks: Vec<Block>,
}

/// Closed-form block cardinalities for `M = 1 ..= m_max`.
pub fn spnk_blocks(params: &SpnkParams, m_max: u64) -> Result<SpnkBlocks, Error> {
    let (p, n, k) = (params.p as i128, params.n as i128, params.k as i128);
    let thresholds = SpnkThresholds {
        m0: ((k - 1) / p + 1) as u64,
        m1: ((n - 1) / p) as u64,
        m_f: ((k + n - 2) / p) as u64,
    };
    let tri = |t: i128| -> i128 { t * (t + 1) / 2 };
    let w = (k + p) * n;
    let mut blocks = Vec::new();
    for m in 1..=m_max as i128 {
        let cardinality = if m <= thresholds.m0 as i128 {
            tri(m * p + 1)
        } else if m <= thresholds.m1 as i128 {
            tri(m * p + 1) - tri(m * p - p - k + 1)
        } else {
            // Complement inside the window: a triangle that shrinks to
            // empty one past M_F.
            w - tri((n - m * p + p + k - 2).max(0))
        };
        assert!((0..=w).contains(&cardinality));
        blocks.push(Block {
            m: m as u64,
            window: (((m - 1) * w + 1) as u64, (m * w) as u64),
            cardinality: cardinality as u128,
        });
    }
    Ok(SpnkBlocks { thresholds, blocks })
}

/// Gap statistics computed without the closed forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GapOracle {
    pub conductor: u128,
    pub genus: u128,
}

/// Independent oracle for the spnk family.
///
/// Sums of `t` generators are `t K N + A N - B` with `0 <= A <= t P`,
/// `0 <= B <= A` (each of the `t` summands contributes `a_i <= P` to `A`
/// and `j_i <= a_i` to `B`, and every intermediate `B` is attainable).
/// The member set is therefore a union of intervals
/// `[t K N + A(N-1), t K N + A N]`, which this routine enumerates up to
/// a self-certifying completeness bound and merges. No generating
/// function or closed form is involved.
pub fn spnk_gap_oracle(params: &SpnkParams) -> Result<GapOracle, Error> {
    let p = params.p as u128;
    let n = params.n as u128;
    let kn = params.k as u128 * n;

    // For A >= N - 2 consecutive intervals touch, so each t >= (N-2)/P
    // contributes one contiguous tail [t K N + (N-2)(N-1), t(K+P)N].
    // Consecutive tails overlap once t P N >= K N + (N-2)(N-1) - 1.
    let a_merge = n.saturating_sub(2);
    let t_tail = a_merge.div_ceil(p).max(1);
    let t_overlap = (kn + a_merge * (n - 1)).div_ceil(p * n).max(1);
    let t0 = t_tail.max(t_overlap);
    // Everything at or above `limit` is a member.
    let limit = t0 * kn + a_merge * (n - 1);
    let limit: u64 = limit.try_into().map_err(|_| Error::Overflow)?;
    if limit > 1 << 33 {
        return Err(Error::InvalidParams {
            reason: format!("oracle scan bound {limit} exceeds 2^33"),
        });
    }
    let (p, n, kn) = (p as u64, n as u64, kn as u64);
    let a_merge = a_merge as u64;

    let mut intervals: Vec<(u64, u64)> = Vec::new();
    let mut t = 1u64;
    while t * kn <= limit {
        let base = t * kn;
        let a_hi = (t * p).min((limit - base) / (n - 1).max(1));
        let split = a_merge.min(a_hi + 1);
        for a in 0..split {
            intervals.push((base + a * (n - 1), base + a * n));
        }
        if a_hi >= a_merge {
            intervals.push((base + a_merge * (n - 1), base + a_hi * n));
        }
        t += 1;
    }
    intervals.sort_unstable();

    let mut covered_end: u64 = 0; // position 0 is a member
    let mut genus: u128 = 0;
    let mut last_gap: Option<u64> = None;
    for (s, e) in intervals {
        if s > covered_end + 1 {
            genus += (s - 1 - covered_end) as u128;
            last_gap = Some(s - 1);
        }
        covered_end = covered_end.max(e);
    }
    debug_assert!(covered_end + 1 >= limit, "tail must certify completeness");
    Ok(GapOracle {
        conductor: last_gap.map_or(0, |g| g as u128 + 1),
        genus,
    })
}

/// The spnk parameters realizing the `n = 3` point semigroup of a curve
/// with parameters `(q, pb)`: `P = pb`, `N = (q^3+1)/(q+1)`,
/// `K = q + 1 - pb`. Requires `q = pb^r` with `r >= 2`.
pub fn spnk_from_curve(q: u64, pb: u64) -> Result<SpnkParams, Error> {
    let invalid = |reason: String| Err(Error::InvalidParams { reason });
    if pb < 2 {
        return invalid(format!("need pb >= 2, got {pb}"));
    }
    let mut v = pb;
    let mut r = 1u32;
    while v < q {
        v = v.checked_mul(pb).ok_or(Error::Overflow)?;
        r += 1;
    }
    if v != q || r < 2 {
        return invalid(format!("q = {q} is not pb^r with r >= 2 for pb = {pb}"));
    }
    let n = (q * q * q + 1) / (q + 1);
    SpnkParams::new(pb, n, q + 1 - pb)
}

/// Genus of [`spnk_from_curve`] parameters in curve variables:
/// `(q^5 - q^3 pb - q^3 + q^2) / (2 pb)`.
pub fn spnk_curve_genus_closed(q: u64, pb: u64) -> Result<u128, Error> {
    let (q, pb) = (q as i128, pb as i128);
    exact_div(
        q * q * q * q * q - q * q * q * pb - q * q * q + q * q,
        2 * pb,
        "genus",
    )
}

/// Conductor of [`spnk_from_curve`] parameters in curve variables.
pub fn spnk_curve_conductor_closed(q: u64, pb: u64) -> Result<u128, Error> {
    let (q, pb) = (q as i128, pb as i128);
    let q2 = q * q;
    let q3 = q2 * q;
    let q5 = q3 * q2;
    exact_div(
        q5 - 2 * q3 * pb + q2 * pb * pb - q2 * pb - q * pb * pb + q2 + q * pb + pb * pb - pb,
        pb,
        "conductor",
    )
}

// ---------------------------------------------------------------------
// sprime
// ---------------------------------------------------------------------

/// Parameters `(q, pb, n)`: `q` a prime power, `pb` a power of the same
/// prime dividing `q` (1 allowed), `n >= 3` odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SprimeParams {
    pub q: u64,
    pub pb: u64,
    pub n: u32,
}

fn smallest_prime_factor(v: u64) -> u64 {
    let mut d = 2;
    while d * d <= v {
        if v % d == 0 {
            return d;
        }
        d += 1;
    }
    v
}

impl SprimeParams {
    pub fn new(q: u64, pb: u64, n: u32) -> Result<Self, Error> {
        let invalid = |reason: String| Err(Error::InvalidParams { reason });
        if n < 3 || n % 2 == 0 {
            return invalid(format!("need n >= 3 odd, got {n}"));
        }
        if q < 2 {
            return invalid(format!("need q >= 2, got {q}"));
        }
        let p = smallest_prime_factor(q);
        let is_power_of = |mut v: u64, base: u64| {
            while v % base == 0 {
                v /= base;
            }
            v == 1
        };
        if !is_power_of(q, p) {
            return invalid(format!("q = {q} is not a prime power"));
        }
        if pb == 0 || q % pb != 0 || (pb > 1 && !is_power_of(pb, p)) {
            return invalid(format!("pb = {pb} is not a power of {p} dividing q = {q}"));
        }
        Ok(SprimeParams { q, pb, n })
    }

    fn m(&self) -> u128 {
        ((self.q as u128).pow(self.n) + 1) / (self.q as u128 + 1)
    }
}

/// Generators `{ q^n + 1 - i M - j : i M + j q^2 <= q^{n-1} pb }`,
/// ascending, dedup.
pub fn sprime_generators(params: &SprimeParams) -> Result<Vec<u64>, Error> {
    let q = params.q as u128;
    let m = params.m();
    let qn1 = q.pow(params.n) + 1;
    let budget = q.pow(params.n - 1) * params.pb as u128;
    let q2 = q * q;
    let mut gens: Vec<u64> = Vec::new();
    let mut i = 0u128;
    while i * m <= budget {
        let jmax = (budget - i * m) / q2;
        for j in 0..=jmax {
            let v = qn1 - i * m - j;
            gens.push(v.try_into().map_err(|_| Error::Overflow)?);
        }
        i += 1;
    }
    gens.sort_unstable();
    gens.dedup();
    Ok(gens)
}

/// The same set written as `{ k A + l : k0 <= k <= k1, l0 <= l <= k l1 }`.
pub fn sprime_generators_reparam(params: &SprimeParams) -> Result<Vec<u64>, Error> {
    let q = params.q as u128;
    let pb = params.pb as u128;
    let n = params.n;
    let a = q.pow(n - 1) - q.pow(n - 2);
    let (k0, k1) = (q + 1 - pb, q + 1);
    let l0 = q.pow(n - 3) * (q - pb) + 1;
    let l1 = (q.pow(n - 2) + 1) / (q + 1);
    let mut gens: Vec<u64> = Vec::new();
    for k in k0..=k1 {
        for l in l0..=(k * l1) {
            let v = k * a + l;
            gens.push(v.try_into().map_err(|_| Error::Overflow)?);
        }
    }
    gens.sort_unstable();
    gens.dedup();
    Ok(gens)
}

/// Genus `(q^{n+2} - pb q^n - q^3 + q^2) / (2 pb)`.
pub fn sprime_genus_closed(params: &SprimeParams) -> Result<u128, Error> {
    let q = params.q as i128;
    let pb = params.pb as i128;
    let qn: i128 = (params.q as u128)
        .pow(params.n)
        .try_into()
        .map_err(|_| Error::Overflow)?;
    exact_div(qn * q * q - pb * qn - q * q * q + q * q, 2 * pb, "genus")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SprimeThresholds {
    /// `M1 = q / pb`: last window with a leading gap segment.
    pub m1: u64,
    /// `M2 = (q - 1) q / pb`: where the inter-run gap bound switches.
    pub m2: u64,
    /// `M2 - 1`: the alternative switch point; totals are invariant.
    pub m2_alt: u64,
    /// `M3 = q^2 / pb - 1`: the last window containing any gap.
    pub m3: u64,
}

pub fn sprime_thresholds(params: &SprimeParams) -> SprimeThresholds {
    let m1 = params.q / params.pb;
    let m2 = (params.q - 1) * m1;
    SprimeThresholds {
        m1,
        m2,
        m2_alt: m2 - 1,
        m3: params.q * m1 - 1,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CensusRow {
    pub m: u64,
    /// Gaps between the window start and the first run of m-fold sums.
    pub leading: u128,
    /// Gaps between consecutive runs inside the window.
    pub internal: u128,
    pub total: u128,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapCensus {
    pub thresholds: SprimeThresholds,
    pub rows: Vec<CensusRow>,
    pub total: u128,
}

struct SprimeScaffold {
    qn1: i128,
    k0: i128,
    k1: i128,
    l0: i128,
    l1: i128,
    m_cap: i128,
    lead_w: i128,
}

fn sprime_scaffold(params: &SprimeParams) -> Result<SprimeScaffold, Error> {
    let q = params.q as i128;
    let pb = params.pb as i128;
    let n = params.n;
    let pw = |e: u32| -> Result<i128, Error> {
        (params.q as u128)
            .pow(e)
            .try_into()
            .map_err(|_| Error::Overflow)
    };
    Ok(SprimeScaffold {
        qn1: pw(n)? + 1,
        k0: q + 1 - pb,
        k1: q + 1,
        l0: pw(n - 3)? * (q - pb) + 1,
        l1: (pw(n - 2)? + 1) / (q + 1),
        m_cap: pw(n)?.checked_add(1).ok_or(Error::Overflow)? / (q + 1),
        lead_w: pb * (pw(n - 1)? - pw(n - 2)? + pw(n - 3)?),
    })
}

/// Per-window gap counts.
///
/// Window `m` (covering `((m-1)(q^n+1), m(q^n+1)]`) has
/// `q^n - m pb (q^{n-1} - q^{n-2} + q^{n-3})` leading gaps while
/// `m <= M1`, plus, for each `k` from
/// `max(m k0 + 1, m(q+1) - q)` to `m k1`, the
/// `max(0, m l0 - k l1 + M - 1)` integers between runs `S_{m,k-1}` and
/// `S_{m,k}`.
pub fn sprime_gap_census(params: &SprimeParams) -> Result<GapCensus, Error> {
    let th = sprime_thresholds(params);
    let sc = sprime_scaffold(params)?;
    let q = params.q as i128;
    let mut rows = Vec::new();
    let mut total: u128 = 0;
    for m in 1..=th.m3 as i128 {
        let leading = if m <= th.m1 as i128 {
            let v = sc.qn1 - 1 - m * sc.lead_w;
            assert!(v >= 0);
            v as u128
        } else {
            0
        };
        let mut internal: u128 = 0;
        let lo = (m * sc.k0 + 1).max(m * (q + 1) - q);
        for k in lo..=(m * sc.k1) {
            let c = m * sc.l0 - k * sc.l1 + sc.m_cap - 1;
            if c > 0 {
                internal += c as u128;
            }
        }
        rows.push(CensusRow {
            m: m as u64,
            leading,
            internal,
            total: leading + internal,
        });
        total += leading + internal;
    }
    Ok(GapCensus {
        thresholds: th,
        rows,
        total,
    })
}

/// Window bounds and member counts per window, `m = 1 ..= M3 + 1`
/// (the final row demonstrates a fully member-filled window).
pub fn sprime_blocks(params: &SprimeParams) -> Result<(SprimeThresholds, Vec<Block>), Error> {
    let census = sprime_gap_census(params)?;
    let qn1 = (params.q as u128).pow(params.n) + 1;
    let window_len: u64 = qn1.try_into().map_err(|_| Error::Overflow)?;
    let mut blocks = Vec::new();
    for m in 1..=census.thresholds.m3 + 1 {
        let gaps = census
            .rows
            .iter()
            .find(|r| r.m == m)
            .map_or(0, |r| r.total);
        blocks.push(Block {
            m,
            window: ((m - 1) * window_len + 1, m * window_len),
            cardinality: window_len as u128 - gaps,
        });
    }
    Ok((census.thresholds, blocks))
}

/// The nine partial sums of the genus derivation, each evaluated by
/// literal summation over its `(m, k)` index range, plus the regrouped
/// total. `counts`, `m_weighted`, and `k_weighted` hold
/// `sum 1`, `sum m`, and `sum k` over the three ranges:
///
/// * range 1: `1 <= m <= M1`, `m k0 + 1 <= k <= m k1`;
/// * range 2: `M1 < m <= M2`, `m(q+1) - q <= k <= m k1`;
/// * range 3: `M2 < m <= M3`, `m(q+1) - q <= k <= q^2 - q + m(q - pb + 1)`.
///
/// With `alt_m2` the split between ranges 2 and 3 moves from `M2` to
/// `M2 - 1`; the boundary window contributes the same either way, so the
/// total is invariant. The alternative split is rejected for `q = 2`,
/// where `M2 - 1 < M1` would make the ranges overlap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PartialSums {
    pub counts: [u128; 3],
    pub m_weighted: [u128; 3],
    pub k_weighted: [u128; 3],
    pub total: u128,
}

pub fn sprime_partial_sums(params: &SprimeParams, alt_m2: bool) -> Result<PartialSums, Error> {
    let th = sprime_thresholds(params);
    let sc = sprime_scaffold(params)?;
    let q = params.q as i128;
    let pb = params.pb as i128;
    let m2_sel = if alt_m2 {
        if th.m2_alt < th.m1 {
            return Err(Error::InvalidParams {
                reason: format!(
                    "alternative split M2 - 1 = {} is below M1 = {}; ranges would overlap",
                    th.m2_alt, th.m1
                ),
            });
        }
        th.m2_alt
    } else {
        th.m2
    };

    let ranges: [(i128, i128); 3] = [
        (1, th.m1 as i128),
        (th.m1 as i128 + 1, m2_sel as i128),
        (m2_sel as i128 + 1, th.m3 as i128),
    ];
    let mut counts = [0i128; 3];
    let mut m_weighted = [0i128; 3];
    let mut k_weighted = [0i128; 3];
    for (idx, &(m_lo, m_hi)) in ranges.iter().enumerate() {
        for m in m_lo..=m_hi {
            let k_lo = if idx == 0 {
                m * sc.k0 + 1
            } else {
                m * (q + 1) - q
            };
            let k_hi = if idx == 2 {
                q * q - q + m * (q - pb + 1)
            } else {
                m * sc.k1
            };
            for k in k_lo..=k_hi {
                counts[idx] += 1;
                m_weighted[idx] += m;
                k_weighted[idx] += k;
            }
        }
    }

    let m1 = th.m1 as i128;
    let qn = sc.qn1 - 1;
    let total = m1 * qn - sc.lead_w * m1 * (m1 + 1) / 2
        + (sc.m_cap - 1) * counts.iter().sum::<i128>()
        + sc.l0 * m_weighted.iter().sum::<i128>()
        - sc.l1 * k_weighted.iter().sum::<i128>();
    assert!(total >= 0);
    let cv = |a: [i128; 3]| a.map(|v| v as u128);
    Ok(PartialSums {
        counts: cv(counts),
        m_weighted: cv(m_weighted),
        k_weighted: cv(k_weighted),
        total: total as u128,
    })
}
