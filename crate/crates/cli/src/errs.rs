//! Process-level error object: a kebab-case code, a message, and the
//! exit status. Validation problems exit 2, verification mismatches 3,
//! resource caps 4.

use curvegaps_core::{agcode, curves, families, multipoint, numsg, onepoint, puregaps};

pub const EXIT_VALIDATION: u8 = 2;
pub const EXIT_MISMATCH: u8 = 3;
pub const EXIT_RESOURCE: u8 = 4;

#[derive(Debug)]
pub struct CliError {
    pub code: &'static str,
    pub message: String,
    pub exit: u8,
}

impl CliError {
    pub fn validation(code: &'static str, message: impl Into<String>) -> Self {
        CliError {
            code,
            message: message.into(),
            exit: EXIT_VALIDATION,
        }
    }

    fn resource(code: &'static str, message: impl Into<String>) -> Self {
        CliError {
            code,
            message: message.into(),
            exit: EXIT_RESOURCE,
        }
    }

    /// Machine-readable error object printed on failure.
    pub fn render_json(&self) -> String {
        let value = serde_json::json!({
            "schema": 1,
            "error": { "code": self.code, "message": self.message },
        });
        let mut s = serde_json::to_string_pretty(&value).expect("static shape");
        s.push('\n');
        s
    }
}

impl From<curves::Error> for CliError {
    fn from(e: curves::Error) -> Self {
        use curves::Error::*;
        let code = match e {
            InvalidN { .. } => "invalid-n",
            BNotDividingA { .. } => "b-not-dividing-a",
            SNotDividingM0 { .. } => "s-not-dividing-m0",
            NotPrime { .. } => "not-prime",
            Overflow => return CliError::resource("overflow", e.to_string()),
        };
        CliError::validation(code, e.to_string())
    }
}

impl From<numsg::Error> for CliError {
    fn from(e: numsg::Error) -> Self {
        use numsg::Error::*;
        let code = match e {
            EmptyGenerators => "empty-generators",
            NonCoprimeGenerators { .. } => "non-coprime-generators",
            NotAMember { .. } => "not-a-member",
            Overflow => return CliError::resource("overflow", e.to_string()),
            CapExceeded { .. } => return CliError::resource("cap-exceeded", e.to_string()),
        };
        CliError::validation(code, e.to_string())
    }
}

impl From<onepoint::Error> for CliError {
    fn from(e: onepoint::Error) -> Self {
        use onepoint::Error::*;
        let code = match e {
            UnsupportedS { .. } => "unsupported-s",
            FormMismatch { .. } => "form-mismatch",
            Overflow => return CliError::resource("overflow", e.to_string()),
            Semigroup(inner) => return inner.into(),
        };
        CliError::validation(code, e.to_string())
    }
}

impl From<families::Error> for CliError {
    fn from(e: families::Error) -> Self {
        use families::Error::*;
        let code = match e {
            InvalidSPNK { .. } => "invalid-spnk",
            InvalidParams { .. } => "invalid-params",
            NonIntegerResult { .. } => "non-integer-result",
            Overflow => return CliError::resource("overflow", e.to_string()),
            Semigroup(inner) => return inner.into(),
        };
        CliError::validation(code, e.to_string())
    }
}

impl From<multipoint::Error> for CliError {
    fn from(e: multipoint::Error) -> Self {
        use multipoint::Error::*;
        let code = match e {
            ArityMismatch { .. } => "arity-mismatch",
            EmptyInput => "empty-input",
            MTooLarge { .. } => "m-too-large",
            UnsupportedS { .. } => "unsupported-s",
            MissingGammaSubset { .. } => "missing-gamma-subset",
            InsufficientBox { .. } => {
                return CliError::resource("insufficient-box", e.to_string())
            }
            Overflow => return CliError::resource("overflow", e.to_string()),
            OnePoint(inner) => return inner.into(),
            Semigroup(inner) => return inner.into(),
        };
        CliError::validation(code, e.to_string())
    }
}

impl From<puregaps::Error> for CliError {
    fn from(e: puregaps::Error) -> Self {
        use puregaps::Error::*;
        let code = match e {
            UnsupportedS { .. } => "unsupported-s",
            InvalidQuery { .. } => "invalid-query",
            KOutOfRange { .. } => "k-out-of-range",
            AlphaOutOfRange { .. } => "alpha-out-of-range",
            ParamOutOfRange { .. } => "param-out-of-range",
            UnsupportedN { .. } => "unsupported-n",
            BoxTooLarge { .. } => return CliError::resource("box-too-large", e.to_string()),
            Overflow => return CliError::resource("overflow", e.to_string()),
        };
        CliError::validation(code, e.to_string())
    }
}

impl From<agcode::Error> for CliError {
    fn from(e: agcode::Error) -> Self {
        use agcode::Error::*;
        let code = match e {
            NotPureGap { .. } => "not-pure-gap",
            InvalidQuery { .. } => "invalid-query",
            Overflow => return CliError::resource("overflow", e.to_string()),
            PureGaps(inner) => return inner.into(),
        };
        CliError::validation(code, e.to_string())
    }
}
