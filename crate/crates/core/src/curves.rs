//! The two towers of maximal curves the crate works with.
//!
//! Family X is indexed by a prime power `q = p^a`, a divisor `b` of `a`,
//! an odd `n >= 3`, and a divisor `s` of `(q^n + 1) / (q + 1)`. Family Y
//! is the specialization with `p^b = 1` (it exists for every prime power
//! `q`). Both are maximal over the field with `q^{2n}` elements.
//!
//! Throughout, `M = (q^n + 1) / (s (q + 1))` and `pb = p^b`. The common
//! pole of the coordinate functions `x`, `y`, `z` is written `P_infty`;
//! the `q/pb` affine points with `y = z = 0` are the totally ramified
//! points used by the rest of the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("n must be odd and at least 3, got {n}")]
    InvalidN { n: u32 },
    #[error("b must be a positive divisor of a, got b = {b}, a = {a}")]
    BNotDividingA { a: u32, b: u32 },
    #[error("s must divide (q^n + 1)/(q + 1) = {m0}, got s = {s}")]
    SNotDividingM0 { s: u64, m0: u128 },
    #[error("{value} is not a {expected}")]
    NotPrime { value: u64, expected: &'static str },
    #[error("curve parameters overflow 128-bit arithmetic")]
    Overflow,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    X,
    Y,
}

/// A fully validated member of one of the two families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Curve {
    pub family: Family,
    /// Characteristic.
    pub p: u64,
    /// `q = p^a`.
    pub a: u32,
    /// Exponent of the subfield degree; 0 for family Y.
    pub b: u32,
    pub n: u32,
    pub s: u64,
    pub q: u64,
    /// `p^b` (1 for family Y).
    pub pb: u64,
    /// `(q^n + 1) / (s (q + 1))`.
    pub m: u64,
    pub genus: u128,
}

fn is_prime(v: u64) -> bool {
    if v < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= v {
        if v % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Writes `v` as `p^a` for a prime `p`, if possible.
fn prime_power(v: u64) -> Option<(u64, u32)> {
    if v < 2 {
        return None;
    }
    let mut p = 2u64;
    while p * p <= v {
        if v % p == 0 {
            let mut rest = v;
            let mut a = 0u32;
            while rest % p == 0 {
                rest /= p;
                a += 1;
            }
            return if rest == 1 { Some((p, a)) } else { None };
        }
        p += 1;
    }
    Some((v, 1)) // v itself is prime
}

fn pow_u128(base: u64, exp: u32) -> Result<u128, Error> {
    (base as u128).checked_pow(exp).ok_or(Error::Overflow)
}

fn validate_common(q: u64, pb: u64, n: u32, s: u64) -> Result<(u64, u128), Error> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::InvalidN { n });
    }
    let qn = pow_u128(q, n)?;
    let m0 = (qn + 1) / (q as u128 + 1);
    debug_assert_eq!((qn + 1) % (q as u128 + 1), 0, "n odd makes q+1 | q^n+1");
    if s == 0 || m0 % s as u128 != 0 {
        return Err(Error::SNotDividingM0 { s, m0 });
    }
    let m = m0 / s as u128;
    let m: u64 = m.try_into().map_err(|_| Error::Overflow)?;

    // genus = (q^{n+2} - pb q^n - s q^3 + q^2 + (s-1) pb) / (2 s pb);
    // individual terms can exceed the partial sums, so accumulate signed.
    let q2 = q as i128 * q as i128;
    let q3 = q2 * q as i128;
    let qn2: i128 = pow_u128(q, n + 2)?.try_into().map_err(|_| Error::Overflow)?;
    let num = qn2
        .checked_sub(pb as i128 * qn as i128)
        .and_then(|v| v.checked_sub(s as i128 * q3))
        .and_then(|v| v.checked_add(q2))
        .and_then(|v| v.checked_add((s as i128 - 1) * pb as i128))
        .ok_or(Error::Overflow)?;
    let den = 2 * s as i128 * pb as i128;
    assert!(num >= 0, "genus must be non-negative");
    assert_eq!(num % den, 0, "genus numerator must be divisible by 2*s*pb");
    Ok((m, (num / den) as u128))
}

/// Curve X with parameters `(p, a, b, n, s)`; requires `p` prime,
/// `b | a`, `n >= 3` odd, and `s | (q^n+1)/(q+1)` where `q = p^a`.
pub fn make_curve_x(p: u64, a: u32, b: u32, n: u32, s: u64) -> Result<Curve, Error> {
    if !is_prime(p) {
        return Err(Error::NotPrime {
            value: p,
            expected: "prime",
        });
    }
    if a == 0 || b == 0 || b > a || a % b != 0 {
        return Err(Error::BNotDividingA { a, b });
    }
    let q: u64 = pow_u128(p, a)?.try_into().map_err(|_| Error::Overflow)?;
    let pb: u64 = pow_u128(p, b)?.try_into().map_err(|_| Error::Overflow)?;
    let (m, genus) = validate_common(q, pb, n, s)?;
    Ok(Curve {
        family: Family::X,
        p,
        a,
        b,
        n,
        s,
        q,
        pb,
        m,
        genus,
    })
}

/// Curve Y with parameters `(q, n, s)`; requires `q` a prime power,
/// `n >= 3` odd, and `s | (q^n+1)/(q+1)`.
pub fn make_curve_y(q: u64, n: u32, s: u64) -> Result<Curve, Error> {
    let (p, a) = prime_power(q).ok_or(Error::NotPrime {
        value: q,
        expected: "prime power",
    })?;
    let (m, genus) = validate_common(q, 1, n, s)?;
    Ok(Curve {
        family: Family::Y,
        p,
        a,
        b: 0,
        n,
        s,
        q,
        pb: 1,
        m,
        genus,
    })
}

/// One coordinate function together with its principal divisor, given as
/// orbits of zeros plus the pole order at `P_infty`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorTemplate {
    pub function: &'static str,
    /// `(number_of_points, coefficient)` per orbit of zeros.
    pub zeros: Vec<(u128, u128)>,
    /// Pole order at `P_infty`.
    pub pole_coefficient: u128,
}

impl Curve {
    /// Short display label, e.g. `X(p=2,a=2,b=1,n=3,s=1)`.
    pub fn label(&self) -> String {
        match self.family {
            Family::X => format!(
                "X(p={},a={},b={},n={},s={})",
                self.p, self.a, self.b, self.n, self.s
            ),
            Family::Y => format!("Y(q={},n={},s={})", self.q, self.n, self.s),
        }
    }

    /// Number of rational points over the field with `q^{2n}` elements;
    /// the curves are maximal, so it is `q^{2n} + 1 + 2 q^n g`.
    pub fn rational_point_count(&self) -> u128 {
        let qn = (self.q as u128).pow(self.n);
        qn * qn + 1 + 2 * qn * self.genus
    }

    /// Generators of the Weierstrass semigroup at `P_infty`, sorted
    /// ascending: `(q/pb) M`, `q^3 / pb`, `(q+1) M`.
    pub fn pinfty_generators(&self) -> Vec<u64> {
        let q = self.q;
        let mut gens = vec![
            (q / self.pb) * self.m,
            q * q * (q / self.pb),
            (q + 1) * self.m,
        ];
        gens.sort_unstable();
        gens.dedup();
        gens
    }

    /// Principal divisors of the three coordinate functions.
    pub fn divisor_templates(&self) -> Vec<DivisorTemplate> {
        let q = self.q as u128;
        let pb = self.pb as u128;
        let m = self.m as u128;
        vec![
            DivisorTemplate {
                function: "x - alpha",
                zeros: vec![(1, (q + 1) * m)],
                pole_coefficient: (q + 1) * m,
            },
            DivisorTemplate {
                function: "y - beta",
                zeros: vec![(q / pb, m)],
                pole_coefficient: (q / pb) * m,
            },
            DivisorTemplate {
                function: "z",
                zeros: vec![(q * q * q / pb, 1)],
                pole_coefficient: q * q * q / pb,
            },
        ]
    }

    /// The two affine equations cutting out the curve, as display strings.
    pub fn affine_equations(&self) -> [String; 2] {
        let first = match self.family {
            Family::X => {
                // y^{q+1} = x^{p^{a-b}} + ... + x^{p^b} + x, exponents
                // p^{ib} for i = a/b - 1 down to 0.
                let mut terms = Vec::new();
                for i in (0..self.a / self.b).rev() {
                    let e = (self.p as u128).pow(i * self.b);
                    terms.push(if e == 1 {
                        "x".to_string()
                    } else {
                        format!("x^{e}")
                    });
                }
                format!("y^{} = {}", self.q + 1, terms.join(" + "))
            }
            Family::Y => format!("y^{} = x^{} + x", self.q + 1, self.q),
        };
        let second = format!("z^{} = y^{} - y", self.m, self.q as u128 * self.q as u128);
        [first, second]
    }
}
