//! Built-in verification suites: closed forms against oracles, family
//! operations against the membership criterion, reference code
//! parameters, and byte-for-byte fixture replay.

use curvegaps_core::agcode::{code_from_pure_gaps, code_goppa, compare_relative};
use curvegaps_core::curves::{make_curve_x, make_curve_y, Curve};
use curvegaps_core::families::{
    spnk_conductor_closed, spnk_gap_oracle, spnk_genus_closed, sprime_gap_census,
    sprime_generators, sprime_genus_closed, sprime_thresholds, SpnkParams, SprimeParams,
};
use curvegaps_core::numsg::NumericalSemigroup;
use curvegaps_core::onepoint::verify_point_semigroup;
use curvegaps_core::puregaps::{
    curve_kummer_model, is_pure_gap, pure_gap_alpha_ones, pure_gap_k_family,
    pure_gap_pair_affine, pure_gap_pair_infty, Place,
};
use serde_json::{json, Value};

use crate::envelope::Envelope;
use crate::errs::{CliError, EXIT_MISMATCH};
use crate::fixtures;
use crate::VerifyArgs;

struct Group {
    name: &'static str,
    checked: u64,
    skipped: u64,
    mismatches: Vec<String>,
}

impl Group {
    fn new(name: &'static str) -> Self {
        Group {
            name,
            checked: 0,
            skipped: 0,
            mismatches: Vec::new(),
        }
    }

    fn expect(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.mismatches.push(describe());
        }
    }
}

fn reference_curves() -> Vec<Curve> {
    vec![
        make_curve_x(2, 2, 1, 3, 1).expect("reference"),
        make_curve_x(2, 2, 1, 5, 1).expect("reference"),
        make_curve_y(3, 3, 1).expect("reference"),
        make_curve_y(2, 5, 1).expect("reference"),
        make_curve_x(2, 1, 1, 3, 1).expect("reference"),
    ]
}

fn group_one_point() -> Result<Group, CliError> {
    let mut g = Group::new("one-point");
    for curve in reference_curves() {
        let report = verify_point_semigroup(&curve)?;
        g.expect(report.genus_match, || {
            format!("{}: point-semigroup genus disagrees with the curve genus", curve.label())
        });
        g.expect(report.forms_equal, || {
            format!("{}: generator descriptions disagree", curve.label())
        });
        let pinf = NumericalSemigroup::from_generators(&curve.pinfty_generators())?;
        g.expect(pinf.genus() as u128 == curve.genus, || {
            format!("{}: semigroup at infinity has the wrong genus", curve.label())
        });
    }
    Ok(g)
}

/// All valid (P, N, K) tuples with N at most `max_n`, in scan order.
fn spnk_tuples(max_n: u64) -> Vec<(u64, u64, u64)> {
    let mut tuples = Vec::new();
    for n in 2..=max_n {
        let d = n - 1;
        for p in (1..=d).filter(|p| d % p == 0) {
            for k in (1..n).step_by(p as usize) {
                tuples.push((p, n, k));
            }
        }
    }
    tuples
}

fn check_spnk_tuple(
    (p, n, k): (u64, u64, u64),
    max_conductor: Option<u128>,
) -> Result<Option<String>, CliError> {
    let params = SpnkParams::new(p, n, k)?;
    let conductor = spnk_conductor_closed(&params)?;
    if max_conductor.is_some_and(|cap| conductor > cap) {
        return Ok(Some(String::new())); // marker: skipped
    }
    let genus = spnk_genus_closed(&params)?;
    let oracle = spnk_gap_oracle(&params)?;
    if oracle.conductor != conductor || oracle.genus != genus {
        return Ok(Some(format!(
            "({p},{n},{k}): closed form ({conductor}, {genus}) vs oracle ({}, {})",
            oracle.conductor, oracle.genus
        )));
    }
    Ok(None)
}

fn group_grids(args: &VerifyArgs) -> Result<Group, CliError> {
    let mut g = Group::new("grids");

    let tuples = spnk_tuples(args.spnk_max_n);
    let threads = args.threads.max(1).min(tuples.len().max(1));
    let chunk = tuples.len().div_ceil(threads);
    let worker = |slice: &[(u64, u64, u64)]| -> Result<(u64, u64, Vec<String>), CliError> {
        let (mut checked, mut skipped, mut bad) = (0, 0, Vec::new());
        for &t in slice {
            match check_spnk_tuple(t, args.max_conductor)? {
                None => checked += 1,
                Some(msg) if msg.is_empty() => skipped += 1,
                Some(msg) => {
                    checked += 1;
                    bad.push(msg);
                }
            }
        }
        Ok((checked, skipped, bad))
    };
    let merged: Vec<Result<(u64, u64, Vec<String>), CliError>> = if threads <= 1 {
        vec![worker(&tuples)]
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = tuples
                .chunks(chunk)
                .map(|slice| scope.spawn(move || worker(slice)))
                .collect();
            // Joining in spawn order keeps the merged report deterministic.
            handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
        })
    };
    for part in merged {
        let (checked, skipped, bad) = part?;
        g.checked += checked;
        g.skipped += skipped;
        g.mismatches.extend(bad);
    }

    for q in [2u64, 3, 4, 5, 7, 8, 9] {
        for pb in (1..q).filter(|pb| SprimeParams::new(q, *pb, 3).is_ok()) {
            for n in [3u32, 5] {
                let params = SprimeParams::new(q, pb, n)?;
                let th = sprime_thresholds(&params);
                let window = (q as u128).pow(n) + 1;
                if args
                    .max_conductor
                    .is_some_and(|cap| th.m3 as u128 * window > cap)
                {
                    g.skipped += 1;
                    continue;
                }
                let genus = sprime_genus_closed(&params)?;
                let sg = NumericalSemigroup::from_generators(&sprime_generators(&params)?)?;
                g.expect(sg.genus() as u128 == genus, || {
                    format!("({q},{pb},{n}): closed genus {genus} vs membership {}", sg.genus())
                });
                let census = sprime_gap_census(&params)?;
                g.expect(census.total == genus, || {
                    format!("({q},{pb},{n}): census total {} vs genus {genus}", census.total)
                });
            }
        }
    }
    Ok(g)
}

fn group_families() -> Result<Group, CliError> {
    let mut g = Group::new("families");
    let y51 = make_curve_y(2, 5, 1)?;
    let x231 = make_curve_x(2, 2, 1, 3, 1)?;

    for curve in [&x231, &y51] {
        let model = curve_kummer_model(curve)?;
        let max_m = (curve.q / curve.pb) as u32;
        for m in 1..=max_m {
            let selected: Vec<Place> =
                std::iter::once(Place::PInfty).chain((1..=m).map(Place::P)).collect();
            for k in 2.. {
                match pure_gap_k_family(curve, m, k) {
                    Ok(v) => g.expect(is_pure_gap(&model, &selected, &v)?, || {
                        format!("{} k-family m={m} k={k} rejected", curve.label())
                    }),
                    Err(_) => break,
                }
            }
            for alpha in 0..=(2 * curve.genus - 2) as u64 {
                if let Some(w) = pure_gap_alpha_ones(curve, m, alpha)? {
                    g.expect(is_pure_gap(&model, &selected, &w.vector)?, || {
                        format!("{} alpha-ones m={m} alpha={alpha} rejected", curve.label())
                    });
                }
            }
        }
    }
    let my = curve_kummer_model(&y51)?;
    for alpha in 0..=2 {
        let (a, b) = pure_gap_pair_infty(&y51, alpha)?;
        g.expect(
            is_pure_gap(&my, &[Place::PInfty, Place::P(1)], &[a, b])?,
            || format!("pair-infty alpha={alpha} rejected"),
        );
    }
    for (alpha, beta) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
        let (a, b) = pure_gap_pair_affine(&y51, alpha, beta)?;
        g.expect(
            is_pure_gap(&my, &[Place::P(1), Place::P(2)], &[a, b])?,
            || format!("pair-affine alpha={alpha} beta={beta} rejected"),
        );
    }

    // Reference code parameters and their one-point baselines.
    let pair = [Place::PInfty, Place::P(1)];
    let two_y = code_from_pure_gaps(&y51, &[50, 34], &[50, 34], &pair)?;
    g.expect(
        (two_y.n, two_y.k, two_y.d_lower) == (3967, Some(3846), 78),
        || "two-point code on the n=5 small curve drifted".to_string(),
    );
    let one_y = code_goppa(&y51, &[(Place::PInfty, 167)])?;
    g.expect(
        (one_y.n, one_y.k, one_y.d_lower) == (3968, Some(3846), 77),
        || "one-point baseline on the n=5 small curve drifted".to_string(),
    );
    let two_x = code_from_pure_gaps(&x231, &[230, 1], &[230, 1], &pair)?;
    g.expect(
        (two_x.n, two_x.k, two_x.d_lower) == (31231, Some(30982), 40),
        || "two-point code on the n=3 curve drifted".to_string(),
    );
    let one_x = code_goppa(&x231, &[(Place::PInfty, 461)])?;
    g.expect(
        (one_x.n, one_x.k, one_x.d_lower) == (31232, Some(30982), 39),
        || "one-point baseline on the n=3 curve drifted".to_string(),
    );
    for (two, one) in [(&two_y, &one_y), (&two_x, &one_x)] {
        g.expect(compare_relative(two, one)?.first_dominates, || {
            "two-point code no longer dominates its baseline".to_string()
        });
    }
    Ok(g)
}

fn group_examples() -> Result<Group, CliError> {
    let mut g = Group::new("examples");
    for fixture in fixtures::FIXTURES {
        g.expect(fixtures::replay(fixture)?.is_none(), || {
            format!("fixture {} no longer replays byte-identically", fixture.name)
        });
    }
    Ok(g)
}

pub fn run(args: &VerifyArgs) -> Result<(Envelope, u8), CliError> {
    let mut env = Envelope::new("verify");
    let all = !(args.examples || args.grids || args.one_point || args.families);
    env.param("threads", args.threads);
    env.param("spnk_max_n", args.spnk_max_n);
    if let Some(cap) = args.max_conductor {
        env.param("max_conductor", cap);
    }

    let mut groups = Vec::new();
    if all || args.one_point {
        groups.push(group_one_point()?);
    }
    if all || args.grids {
        groups.push(group_grids(args)?);
    }
    if all || args.families {
        groups.push(group_families()?);
    }
    if args.examples {
        groups.push(group_examples()?);
    }

    let failed: u64 = groups.iter().map(|g| g.mismatches.len() as u64).sum();
    env.result = json!({
        "groups": groups
            .iter()
            .map(|g| {
                json!({
                    "name": g.name,
                    "checked": g.checked,
                    "skipped": g.skipped,
                    "mismatches": g.mismatches,
                })
            })
            .collect::<Vec<Value>>(),
        "status": if failed == 0 { "pass" } else { "fail" },
    });
    for g in &groups {
        let source = if g.name == "examples" { "reference-example" } else { "oracle" };
        env.claim(g.name, source);
    }
    Ok((env, if failed == 0 { 0 } else { EXIT_MISMATCH }))
}
