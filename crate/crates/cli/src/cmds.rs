//! Query command implementations. Each builds one envelope; parameter
//! echoing is restricted to flags that were actually set so identical
//! invocations render identical bytes.

use curvegaps_core::curves::{make_curve_x, make_curve_y, Curve, Family};
use curvegaps_core::multipoint::{gamma_set, max_affine_points};
use curvegaps_core::numsg::NumericalSemigroup;
use curvegaps_core::onepoint::{point_generators, GeneratorForm};
use curvegaps_core::puregaps::{
    curve_kummer_model, is_pure_gap, pure_gap_alpha_ones, pure_gap_k_family,
    pure_gap_pair_affine, pure_gap_pair_infty, Place,
};
use curvegaps_core::agcode::{code_from_pure_gaps, code_goppa, BoundSource, CodeParams};
use serde_json::{json, Value};

use crate::envelope::{jnum, jvec, Envelope};
use crate::errs::CliError;
use crate::{CodeArgs, CurveArgs, CurveInfoArgs, GammaArgs, PureOp, PuregapsArgs};

impl CurveArgs {
    pub fn build(&self) -> Result<Curve, CliError> {
        let need = |flag: &str| {
            CliError::validation(
                "missing-flag",
                format!("family {} requires --{flag}", self.family),
            )
        };
        match self.family.to_ascii_lowercase().as_str() {
            "x" => {
                let p = self.p.ok_or_else(|| need("p"))?;
                let a = self.a.ok_or_else(|| need("a"))?;
                let b = self.b.ok_or_else(|| need("b"))?;
                Ok(make_curve_x(p, a, b, self.n, self.s)?)
            }
            "y" => {
                let q = self.q.ok_or_else(|| need("q"))?;
                Ok(make_curve_y(q, self.n, self.s)?)
            }
            other => Err(CliError::validation(
                "unknown-family",
                format!("unknown curve family {other:?}; expected X or Y"),
            )),
        }
    }

    fn echo(&self, env: &mut Envelope) {
        env.param("family", &self.family);
        env.param("n", self.n);
        env.param("s", self.s);
        if let Some(p) = self.p {
            env.param("p", p);
        }
        if let Some(a) = self.a {
            env.param("a", a);
        }
        if let Some(b) = self.b {
            env.param("b", b);
        }
        if let Some(q) = self.q {
            env.param("q", q);
        }
    }
}

fn parse_u64_list(flag: &str, raw: &str) -> Result<Vec<u64>, CliError> {
    raw.split(',')
        .map(|part| {
            part.trim().parse::<u64>().map_err(|_| {
                CliError::validation(
                    "bad-number",
                    format!("--{flag}: {part:?} is not a nonnegative integer"),
                )
            })
        })
        .collect()
}

fn parse_places(raw: &str) -> Result<Vec<Place>, CliError> {
    raw.split(',')
        .map(|part| match part.trim() {
            "inf" => Ok(Place::PInfty),
            other => other.parse::<u32>().map(Place::P).map_err(|_| {
                CliError::validation(
                    "bad-place",
                    format!("--points: {other:?} is neither `inf` nor an affine index"),
                )
            }),
        })
        .collect()
}

fn place_name(place: Place) -> String {
    match place {
        Place::PInfty => "inf".to_string(),
        Place::P(i) => i.to_string(),
    }
}

fn places_value(places: &[Place]) -> Value {
    Value::Array(places.iter().map(|&p| Value::String(place_name(p))).collect())
}

fn family_name(curve: &Curve) -> &'static str {
    match curve.family {
        Family::X => "X",
        Family::Y => "Y",
    }
}

pub fn curve_info(args: &CurveInfoArgs) -> Result<Envelope, CliError> {
    let curve = args.curve.build()?;
    let mut env = Envelope::new("curve-info");
    args.curve.echo(&mut env);

    let point_gens = if curve.s == 1 {
        jvec(&point_generators(&curve, GeneratorForm::Stated)?)
    } else {
        Value::Null
    };
    let eqs = curve.affine_equations();
    env.result = json!({
        "label": curve.label(),
        "family": family_name(&curve),
        "p": jnum(curve.p as u128),
        "a": curve.a,
        "b": curve.b,
        "n": curve.n,
        "s": jnum(curve.s as u128),
        "q": jnum(curve.q as u128),
        "subfield_size": jnum(curve.pb as u128),
        "m": jnum(curve.m as u128),
        "genus": jnum(curve.genus),
        "rational_points": jnum(curve.rational_point_count()),
        "pinfty_generators": jvec(&curve.pinfty_generators()),
        "point_generators": point_gens,
        "affine_equations": [eqs[0].clone(), eqs[1].clone()],
        "max_affine_places": jnum(max_affine_points(&curve) as u128),
    });
    env.claim("genus", "closed-form");
    env.claim("rational_points", "closed-form");
    env.claim("pinfty_generators", "closed-form");
    env.claim("point_generators", "closed-form");
    Ok(env)
}

pub fn gamma(args: &GammaArgs) -> Result<Envelope, CliError> {
    let curve = args.curve.build()?;
    let mut env = Envelope::new("gamma");
    args.curve.echo(&mut env);
    env.param("m", args.m);

    let bound = match &args.bound {
        Some(raw) => {
            env.param("bound", raw);
            parse_u64_list("bound", raw)?
        }
        None => {
            // Coordinates of generating-set elements are gaps at their
            // place, so conductor - 1 per axis encloses everything.
            let pinf = NumericalSemigroup::from_generators(&curve.pinfty_generators())?;
            let paff = NumericalSemigroup::from_generators(&point_generators(
                &curve,
                GeneratorForm::Stated,
            )?)?;
            let mut b = vec![pinf.conductor().saturating_sub(1)];
            b.extend(std::iter::repeat(paff.conductor().saturating_sub(1)).take(args.m as usize));
            b
        }
    };
    if let Some(limit) = args.limit {
        env.param("limit", limit);
    }

    let set = gamma_set(&curve, args.m, &bound)?;
    let total = set.elements.len();
    let shown = args.limit.unwrap_or(total).min(total);
    env.result = json!({
        "m": args.m,
        "bound": jvec(&bound),
        "complete": args.bound.is_none(),
        "total_elements": total,
        "shown": shown,
        "elements": Value::Array(set.elements[..shown].iter().map(|v| jvec(v)).collect()),
    });
    env.claim("elements", "oracle");
    env.claim("bound", "closed-form");
    Ok(env)
}

fn require<T: Copy>(opt: Option<T>, op: &str, flag: &'static str) -> Result<T, CliError> {
    opt.ok_or_else(|| {
        CliError::validation("missing-flag", format!("--op {op} requires --{flag}"))
    })
}

pub fn puregaps(args: &PuregapsArgs) -> Result<Envelope, CliError> {
    let curve = args.curve.build()?;
    let mut env = Envelope::new("puregaps");
    args.curve.echo(&mut env);

    match args.op {
        PureOp::Check => {
            env.param("op", "check");
            let at = args
                .at
                .as_deref()
                .ok_or_else(|| CliError::validation("missing-flag", "--op check requires --at"))?;
            let points = args.points.as_deref().ok_or_else(|| {
                CliError::validation("missing-flag", "--op check requires --points")
            })?;
            env.param("at", at);
            env.param("points", points);
            let ns = parse_u64_list("at", at)?;
            let places = parse_places(points)?;
            let model = curve_kummer_model(&curve)?;
            let pure = is_pure_gap(&model, &places, &ns)?;
            env.result = json!({
                "vector": jvec(&ns),
                "places": places_value(&places),
                "pure": pure,
            });
            env.claim("pure", "oracle");
        }
        PureOp::KFamily => {
            env.param("op", "k-family");
            let m = args.m.unwrap_or(1);
            let k = require(args.k, "k-family", "k")?;
            env.param("m", m);
            env.param("k", k);
            let vector = pure_gap_k_family(&curve, m, k)?;
            let places: Vec<Place> =
                std::iter::once(Place::PInfty).chain((1..=m).map(Place::P)).collect();
            env.result = json!({
                "vector": jvec(&vector),
                "places": places_value(&places),
                "confirmed": true,
            });
            env.claim("vector", "closed-form");
            env.claim("confirmed", "oracle");
        }
        PureOp::AlphaOnes => {
            env.param("op", "alpha-ones");
            let m = args.m.unwrap_or(1);
            let alpha = require(args.alpha, "alpha-ones", "alpha")?;
            env.param("m", m);
            env.param("alpha", alpha);
            let places: Vec<Place> =
                std::iter::once(Place::PInfty).chain((1..=m).map(Place::P)).collect();
            env.result = match pure_gap_alpha_ones(&curve, m, alpha)? {
                Some(w) => json!({
                    "found": true,
                    "vector": jvec(&w.vector),
                    "places": places_value(&places),
                    "witness": {
                        "condition": w.condition,
                        "lambda": jnum(w.lambda as u128),
                        "beta": jnum(w.beta as u128),
                        "gamma": jnum(w.gamma as u128),
                    },
                }),
                None => json!({
                    "found": false,
                    "places": places_value(&places),
                }),
            };
            env.claim("found", "oracle");
            env.claim("witness", "closed-form");
        }
        PureOp::PairAffine => {
            env.param("op", "pair-affine");
            let alpha = require(args.alpha, "pair-affine", "alpha")?;
            let beta = require(args.beta, "pair-affine", "beta")?;
            env.param("alpha", alpha);
            env.param("beta", beta);
            let (n1, n2) = pure_gap_pair_affine(&curve, alpha, beta)?;
            env.result = json!({
                "vector": jvec(&[n1, n2]),
                "places": places_value(&[Place::P(1), Place::P(2)]),
                "confirmed": true,
            });
            env.claim("vector", "closed-form");
            env.claim("confirmed", "oracle");
        }
        PureOp::PairInfty => {
            env.param("op", "pair-infty");
            let alpha = require(args.alpha, "pair-infty", "alpha")?;
            env.param("alpha", alpha);
            let (at_inf, at_p1) = pure_gap_pair_infty(&curve, alpha)?;
            env.result = json!({
                "vector": jvec(&[at_inf, at_p1]),
                "places": places_value(&[Place::PInfty, Place::P(1)]),
                "confirmed": true,
            });
            env.claim("vector", "closed-form");
            env.claim("confirmed", "oracle");
        }
    }
    Ok(env)
}

fn parse_goppa(raw: &str) -> Result<Vec<(Place, u64)>, CliError> {
    raw.split(',')
        .map(|pair| {
            let (place, coeff) = pair.split_once(':').ok_or_else(|| {
                CliError::validation(
                    "bad-divisor",
                    format!("--goppa: {pair:?} is not place:coefficient"),
                )
            })?;
            let place = parse_places(place)?[0];
            let coeff = coeff.trim().parse::<u64>().map_err(|_| {
                CliError::validation(
                    "bad-divisor",
                    format!("--goppa: coefficient {coeff:?} is not a nonnegative integer"),
                )
            })?;
            Ok((place, coeff))
        })
        .collect()
}

fn code_result(env: &mut Envelope, code: &CodeParams) {
    let source = match code.bound_source {
        BoundSource::Goppa => "goppa",
        BoundSource::PureGap => "pure-gap",
        BoundSource::External => "external",
    };
    env.result = json!({
        "n": jnum(code.n as u128),
        "k": code.k.map(jnum).unwrap_or(Value::Null),
        "d_lower": jnum(code.d_lower),
        "bound_source": source,
        "deg_g": jnum(code.deg_g),
        "genus": jnum(code.genus),
        "support_points": code.support_points,
        "alphabet": jnum(code.alphabet),
        "singleton_ok": code.satisfies_singleton(),
    });
    env.claim("n", "closed-form");
    env.claim("k", "closed-form");
    env.claim("d_lower", "closed-form");
}

pub fn code(args: &CodeArgs) -> Result<Envelope, CliError> {
    let curve = args.curve.build()?;
    let mut env = Envelope::new("code");
    args.curve.echo(&mut env);

    let pure_input = args.pure_gap.is_some() || args.alpha.is_some() || args.beta.is_some();
    let code = match (&args.goppa, pure_input) {
        (Some(_), true) | (None, false) => {
            return Err(CliError::validation(
                "bad-query",
                "pass either --goppa or a pure-gap description (--pure-gap / --alpha --beta)",
            ));
        }
        (Some(raw), false) => {
            env.param("goppa", raw);
            code_goppa(&curve, &parse_goppa(raw)?)?
        }
        (None, true) => {
            let (alpha_raw, beta_raw) = match (&args.pure_gap, &args.alpha, &args.beta) {
                (Some(v), None, None) => (v.clone(), v.clone()),
                (None, Some(a), Some(b)) => (a.clone(), b.clone()),
                _ => {
                    return Err(CliError::validation(
                        "bad-query",
                        "use --pure-gap alone, or --alpha and --beta together",
                    ));
                }
            };
            let points = args.points.as_deref().ok_or_else(|| {
                CliError::validation("missing-flag", "pure-gap codes require --points")
            })?;
            if args.pure_gap.is_some() {
                env.param("pure_gap", args.pure_gap.as_deref().unwrap());
            } else {
                env.param("alpha", &alpha_raw);
                env.param("beta", &beta_raw);
            }
            env.param("points", points);
            let alpha = parse_u64_list("alpha", &alpha_raw)?;
            let beta = parse_u64_list("beta", &beta_raw)?;
            let places = parse_places(points)?;
            code_from_pure_gaps(&curve, &alpha, &beta, &places)?
        }
    };
    code_result(&mut env, &code);
    if let Some(d) = args.annotate_external_d {
        env.param("annotate_external_d", d);
        // Carried alongside the derived bound, never replacing it.
        env.result["external_d"] = jnum(d as u128);
        env.claim("external_d", "external");
    }
    Ok(env)
}
