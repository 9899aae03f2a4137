//! Committed expected outputs for the reference examples. `verify
//! --examples` re-executes each flag line and compares bytes.

use clap::Parser;

use crate::errs::CliError;
use crate::{execute, Cli, Cmd};

pub struct Fixture {
    pub name: &'static str,
    /// Space-separated flags, without the binary name.
    pub args: &'static str,
    pub expected: &'static str,
}

macro_rules! fixture {
    ($name:literal, $args:literal) => {
        Fixture {
            name: $name,
            args: $args,
            expected: include_str!(concat!("../fixtures/", $name, ".json")),
        }
    };
}

pub const FIXTURES: &[Fixture] = &[
    fixture!(
        "curve-info-x231",
        "curve-info --family X --p 2 --a 2 --b 1 --n 3 --s 1"
    ),
    fixture!(
        "curve-info-x251",
        "curve-info --family X --p 2 --a 2 --b 1 --n 5 --s 1"
    ),
    fixture!("curve-info-y31", "curve-info --family Y --q 3 --n 3"),
    fixture!("curve-info-y51", "curve-info --family Y --q 2 --n 5"),
    fixture!(
        "curve-info-x131",
        "curve-info --family X --p 2 --a 1 --b 1 --n 3 --s 1"
    ),
    fixture!(
        "gamma-x231",
        "gamma --family X --p 2 --a 2 --b 1 --n 3 --s 1 --m 1 --limit 64"
    ),
    fixture!(
        "gamma-x251",
        "gamma --family X --p 2 --a 2 --b 1 --n 5 --s 1 --m 1 --limit 64"
    ),
    fixture!("gamma-y31-m3", "gamma --family Y --q 3 --n 3 --m 3 --limit 64"),
    fixture!("gamma-y51", "gamma --family Y --q 2 --n 5 --m 1 --limit 64"),
    fixture!(
        "puregaps-check-y51",
        "puregaps --family Y --q 2 --n 5 --op check --at 50,34 --points inf,1"
    ),
    fixture!(
        "puregaps-pair-infty-y51",
        "puregaps --family Y --q 2 --n 5 --op pair-infty --alpha 1"
    ),
    fixture!(
        "puregaps-pair-affine-y51",
        "puregaps --family Y --q 2 --n 5 --op pair-affine --alpha 0 --beta 0"
    ),
    fixture!(
        "puregaps-k-family-x231",
        "puregaps --family X --p 2 --a 2 --b 1 --n 3 --s 1 --op k-family --m 1 --k 2"
    ),
    fixture!(
        "puregaps-alpha-ones-x231",
        "puregaps --family X --p 2 --a 2 --b 1 --n 3 --s 1 --op alpha-ones --m 1 --alpha 230"
    ),
    fixture!(
        "code-two-point-y51",
        "code --family Y --q 2 --n 5 --pure-gap 50,34 --points inf,1"
    ),
    fixture!("code-baseline-y51", "code --family Y --q 2 --n 5 --goppa inf:167"),
    fixture!(
        "code-two-point-x231",
        "code --family X --p 2 --a 2 --b 1 --n 3 --s 1 --pure-gap 230,1 --points inf,1"
    ),
    fixture!(
        "code-baseline-x231",
        "code --family X --p 2 --a 2 --b 1 --n 3 --s 1 --goppa inf:461"
    ),
    fixture!(
        "code-quasi-perfect-x131",
        "code --family X --p 2 --a 1 --b 1 --n 3 --s 1 --goppa inf:4,1:1 --annotate-external-d 3"
    ),
];

/// Re-runs one fixture; `None` means the bytes matched.
pub fn replay(fixture: &Fixture) -> Result<Option<String>, CliError> {
    let argv = std::iter::once("curvegaps").chain(fixture.args.split_whitespace());
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => return Ok(Some(format!("{}: flags no longer parse: {e}", fixture.name))),
    };
    if matches!(cli.cmd, Cmd::Verify(_)) {
        return Ok(Some(format!("{}: fixtures may not invoke verify", fixture.name)));
    }
    let rendered = match execute(&cli.cmd) {
        Ok((env, _)) => env.render(false),
        Err(e) => return Ok(Some(format!("{}: execution failed: {}", fixture.name, e.message))),
    };
    Ok(if rendered == fixture.expected {
        None
    } else {
        Some(format!("{}: output drifted", fixture.name))
    })
}
