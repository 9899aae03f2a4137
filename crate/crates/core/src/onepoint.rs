//! Weierstrass semigroup generators at a totally ramified affine point.
//!
//! For `s = 1`, the semigroup at any of the `q/pb` points with
//! `y = z = 0` has three published generator descriptions that cut out
//! the same set: a closed range form valid for every odd `n >= 3`
//! ([`GeneratorForm::Stated`]), a triangular form specific to `n = 3`
//! ([`GeneratorForm::ProofN3`]), and a weighted-constraint form
//! ([`GeneratorForm::ProofN5`]) that also generates the auxiliary family
//! studied in [`crate::families`]. [`verify_point_semigroup`] builds
//! each applicable form and checks they agree with each other and with
//! the curve genus.

use crate::curves::Curve;
use crate::numsg::{self, NumericalSemigroup};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("one-point semigroup descriptions require s = 1, got s = {s}")]
    UnsupportedS { s: u64 },
    #[error("form {form:?} does not apply to n = {n}")]
    FormMismatch { form: GeneratorForm, n: u32 },
    #[error("generator values overflow u64")]
    Overflow,
    #[error(transparent)]
    Semigroup(#[from] numsg::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorForm {
    /// `q^n + 1 - i M - j` for `0 <= i <= pb`,
    /// `0 <= j <= q^{n-3} pb - i (q^{n-2}+1)/(q+1)`.
    Stated,
    /// `q^3 + 1 - i M - j` for `i + j <= pb` (only `n = 3`).
    ProofN3,
    /// `q^n + 1 - i M - j` for `i M + j q^2 <= q^{n-1} pb`.
    ProofN5,
}

/// Generators of the point semigroup in the requested form, sorted
/// descending and deduplicated.
pub fn point_generators(curve: &Curve, form: GeneratorForm) -> Result<Vec<u64>, Error> {
    if curve.s != 1 {
        return Err(Error::UnsupportedS { s: curve.s });
    }
    let q = curve.q as u128;
    let pb = curve.pb as u128;
    let n = curve.n;
    let m = curve.m as u128;
    let qn1 = q.pow(n) + 1;

    let mut gens: Vec<u64> = Vec::new();
    let mut push = |v: u128| -> Result<(), Error> {
        gens.push(v.try_into().map_err(|_| Error::Overflow)?);
        Ok(())
    };

    match form {
        GeneratorForm::Stated => {
            // Both subtracted quantities are integers: n-2 is odd, so
            // q+1 | q^{n-2}+1.
            let quot = (q.pow(n - 2) + 1) / (q + 1);
            for i in 0..=pb {
                let jmax = q.pow(n - 3) * pb - i * quot;
                for j in 0..=jmax {
                    push(qn1 - i * m - j)?;
                }
            }
        }
        GeneratorForm::ProofN3 => {
            if n != 3 {
                return Err(Error::FormMismatch { form, n });
            }
            for i in 0..=pb {
                for j in 0..=(pb - i) {
                    push(qn1 - i * m - j)?;
                }
            }
        }
        GeneratorForm::ProofN5 => {
            let budget = q.pow(n - 1) * pb;
            let q2 = q * q;
            let mut i = 0u128;
            while i * m <= budget {
                let jmax = (budget - i * m) / q2;
                for j in 0..=jmax {
                    push(qn1 - i * m - j)?;
                }
                i += 1;
            }
        }
    }
    gens.sort_unstable_by(|a, b| b.cmp(a));
    gens.dedup();
    Ok(gens)
}

/// Result of cross-checking the generator forms against each other and
/// against the curve genus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Verification {
    pub genus_match: bool,
    pub forms_equal: bool,
}

/// Builds every form applicable to `curve.n`, compares the resulting
/// semigroups as sets, and compares their genus with the curve genus.
pub fn verify_point_semigroup(curve: &Curve) -> Result<Verification, Error> {
    let mut forms = vec![GeneratorForm::Stated, GeneratorForm::ProofN5];
    if curve.n == 3 {
        forms.push(GeneratorForm::ProofN3);
    }
    let semis: Vec<NumericalSemigroup> = forms
        .iter()
        .map(|&f| Ok(NumericalSemigroup::from_generators(&point_generators(curve, f)?)?))
        .collect::<Result<_, Error>>()?;
    let forms_equal = semis.windows(2).all(|w| w[0].eq_members(&w[1]));
    let genus_match = semis.iter().all(|s| s.genus() as u128 == curve.genus);
    Ok(Verification {
        genus_match,
        forms_equal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::{make_curve_x, make_curve_y};

    #[test]
    fn stated_generators_match_reference_lists() {
        let x231 = make_curve_x(2, 2, 1, 3, 1).unwrap();
        assert_eq!(
            point_generators(&x231, GeneratorForm::Stated).unwrap(),
            vec![65, 64, 63, 52, 51, 39]
        );

        let y31 = make_curve_y(3, 3, 1).unwrap();
        assert_eq!(
            point_generators(&y31, GeneratorForm::Stated).unwrap(),
            vec![28, 27, 21]
        );

        let y51 = make_curve_y(2, 5, 1).unwrap();
        assert_eq!(
            point_generators(&y51, GeneratorForm::Stated).unwrap(),
            vec![33, 32, 31, 30, 29, 22, 21]
        );

        let x131 = make_curve_x(2, 1, 1, 3, 1).unwrap();
        assert_eq!(
            point_generators(&x131, GeneratorForm::Stated).unwrap(),
            vec![9, 8, 7, 6, 5, 3]
        );

        // Three descending runs: 1025..993, 820..801, 615..609.
        let x251 = make_curve_x(2, 2, 1, 5, 1).unwrap();
        let gens = point_generators(&x251, GeneratorForm::Stated).unwrap();
        let mut expected: Vec<u64> = (993..=1025).rev().collect();
        expected.extend((801..=820).rev());
        expected.extend((609..=615).rev());
        assert_eq!(gens, expected);
    }

    #[test]
    fn all_forms_agree_and_match_genus() {
        for curve in [
            make_curve_x(2, 2, 1, 3, 1).unwrap(),
            make_curve_x(2, 2, 1, 5, 1).unwrap(),
            make_curve_x(2, 1, 1, 3, 1).unwrap(),
            make_curve_x(2, 2, 2, 3, 1).unwrap(),
            make_curve_y(3, 3, 1).unwrap(),
            make_curve_y(2, 5, 1).unwrap(),
            make_curve_y(4, 3, 1).unwrap(),
            make_curve_y(5, 3, 1).unwrap(),
        ] {
            let v = verify_point_semigroup(&curve).unwrap();
            assert!(v.genus_match, "genus mismatch for {}", curve.label());
            assert!(v.forms_equal, "forms disagree for {}", curve.label());
        }
    }

    #[test]
    fn form_and_s_restrictions() {
        let y51 = make_curve_y(2, 5, 1).unwrap();
        assert_eq!(
            point_generators(&y51, GeneratorForm::ProofN3).unwrap_err(),
            Error::FormMismatch {
                form: GeneratorForm::ProofN3,
                n: 5
            }
        );
        let y37 = make_curve_y(3, 3, 7).unwrap();
        assert_eq!(
            point_generators(&y37, GeneratorForm::Stated).unwrap_err(),
            Error::UnsupportedS { s: 7 }
        );
    }
}
