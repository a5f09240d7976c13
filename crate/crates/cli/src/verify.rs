use std::collections::BTreeSet;
use std::path::Path;

use kostant_core::exactalg::json::{rational_from_str, rational_to_string};
use kostant_core::exactalg::parse_poly;
use kostant_core::hccenter::InvariantBasis;
use kostant_core::kostant::rank1::normalize_rank1;
use kostant_core::kostant::{
    center_components, center_ideal_rank1, change_presentation, fiber_dimension, graded_medium, membership_test,
    rozhkovskaya_presentation, CenterPresentation, CoordSystem, KleinAction,
};
use kostant_core::liecore::{dot_action, Bounds, RootSystem, Weight};
use kostant_core::sampling::Sampler;
use kostant_core::verma::{discriminant_sl2, linkage_decomposition_sl2, operator_relation_check, tensor_characters};
use kostant_core::{q, Poly, Rational};
use serde::{Deserialize, Serialize};

use crate::error::CliError;
use crate::{Cli, Format, Suite};

const BUILTIN_GOLDENS: &str = include_str!("goldens.json");

#[derive(Deserialize)]
struct Goldens {
    k: u32,
    tilde: Vec<String>,
    rozhkovskaya: Vec<String>,
    graded: Vec<String>,
    discriminant: Vec<String>,
    decompositions: Vec<GoldenDecomposition>,
    characters: Vec<GoldenCharacters>,
    fiber_dimensions: Vec<GoldenFiber>,
    component_counts: Vec<GoldenCount>,
}

#[derive(Deserialize)]
struct GoldenDecomposition {
    lambda: i64,
    blocks: Vec<String>,
}

#[derive(Deserialize)]
struct GoldenCharacters {
    lambda: i64,
    values: Vec<String>,
}

#[derive(Deserialize)]
struct GoldenFiber {
    algebra: String,
    mu: Vec<i64>,
    dim: u64,
}

#[derive(Deserialize)]
struct GoldenCount {
    algebra: String,
    mu: Vec<i64>,
    count: usize,
}

#[derive(Serialize)]
struct CheckResult {
    name: String,
    passed: bool,
    detail: String,
}

#[derive(Serialize)]
struct Report {
    suite: &'static str,
    seed: u64,
    passed: usize,
    failed: usize,
    checks: Vec<CheckResult>,
}

type Outcome = Result<String, String>;

struct Checks(Vec<CheckResult>);

impl Checks {
    fn add(&mut self, name: impl Into<String>, outcome: Outcome) {
        let (passed, detail) = match outcome {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        self.0.push(CheckResult { name: name.into(), passed, detail });
    }
}

fn err(e: impl ToString) -> String {
    e.to_string()
}

fn bounds() -> Bounds {
    Bounds::default()
}

fn basis(name: &str) -> Result<InvariantBasis, String> {
    let rs: RootSystem = name.parse().map_err(err)?;
    InvariantBasis::new(&rs, &bounds()).map_err(err)
}

fn show(p: &CenterPresentation) -> String {
    p.factored_string()
}

/// Golden factor is one of the computed factors; otherwise a seeded point on
/// some component where it does not vanish.
fn factor_check(golden: &str, pres: &CenterPresentation, k: u32, seed: u64) -> Outcome {
    let g = normalize_rank1(&parse_poly(golden, &pres.vars).map_err(err)?);
    if pres.factor_set().contains(&g) {
        return Ok(format!("({golden}) is a factor"));
    }
    let a1 = basis("A1")?;
    let comps = center_components(&a1, &Weight::from_ints(&[i64::from(k)]), &bounds()).map_err(err)?;
    let mut s = Sampler::new(seed);
    let shift = q(i64::from(k) * i64::from(k) + 2 * i64::from(k));
    if pres.coords != CoordSystem::Graded {
        for c in &comps {
            let lambda = s.weight(1);
            let p = c.flat_point(&a1, &lambda);
            let point = match pres.coords {
                CoordSystem::Tilde => p.clone(),
                _ => vec![p[0].clone(), &p[1] - &p[0] - &shift],
            };
            let value = g.evaluate(&point).map_err(err)?;
            if value != q(0) {
                return Err(format!(
                    "({golden}) is not a factor of {}; at λ={lambda} on orbit {} it takes value {value}",
                    show(pres),
                    c.orbit_rep
                ));
            }
        }
    }
    Err(format!("({golden}) is not a factor of {}", show(pres)))
}

fn paper_suite(g: &Goldens, seed: u64) -> Result<Vec<CheckResult>, CliError> {
    let mut out = Checks(Vec::new());
    let k = g.k;
    let tilde = center_ideal_rank1(k);
    let rozh = rozhkovskaya_presentation(k);
    let graded = graded_medium(&rozh)?;
    for (kind, goldens, pres) in [("tilde", &g.tilde, &tilde), ("rozhkovskaya", &g.rozhkovskaya, &rozh), ("graded", &g.graded, &graded)] {
        if goldens.len() != pres.factors.len() {
            out.add(
                format!("{kind} factor count, k={k}"),
                Err(format!("expected {} factors, computed {}", goldens.len(), pres.factors.len())),
            );
        }
        for (i, text) in goldens.iter().enumerate() {
            out.add(format!("{kind} factor {}, k={k}", i + 1), factor_check(text, pres, k, seed + i as u64));
        }
    }
    let changed = change_presentation(&tilde, CoordSystem::Rozhkovskaya)?;
    out.add(
        format!("tilde to rozhkovskaya change of coordinates, k={k}"),
        if changed.factor_set() == rozh.factor_set() {
            Ok(show(&changed))
        } else {
            Err(format!("{} vs {}", show(&changed), show(&rozh)))
        },
    );

    let disc: BTreeSet<Rational> = discriminant_sl2(k).into_iter().collect();
    let want = g.discriminant.iter().map(|s| rational_from_str(s)).collect::<Result<BTreeSet<_>, _>>()?;
    let shown: Vec<String> = disc.iter().map(rational_to_string).collect();
    out.add(
        format!("discriminant, k={k}"),
        if disc == want { Ok(shown.join(", ")) } else { Err(format!("computed {{{}}}", shown.join(", "))) },
    );

    for d in &g.decompositions {
        let outcome = linkage_decomposition_sl2(d.lambda, k).map_err(err).and_then(|dec| {
            let got: Vec<String> = dec.blocks.iter().map(|b| b.label.as_ref().map_or("?".into(), |l| l.to_string())).collect();
            let sum = dec.labeled_sum().unwrap_or_default();
            if got == d.blocks {
                Ok(sum)
            } else {
                Err(format!("computed {sum}, expected [{}]", d.blocks.join(" ")))
            }
        });
        out.add(format!("decomposition, λ={}, k={k}", d.lambda), outcome);
    }

    let a1 = basis("A1").map_err(CliError::Usage)?;
    for c in &g.characters {
        let chars = tensor_characters(&a1, &Weight::from_ints(&[c.lambda]), &Weight::from_ints(&[i64::from(k)]), &bounds())?;
        let got: BTreeSet<Rational> = chars.into_iter().map(|(p, _)| p.0[0].clone()).collect();
        let want = c.values.iter().map(|s| rational_from_str(s)).collect::<Result<BTreeSet<_>, _>>()?;
        let shown: Vec<String> = got.iter().map(rational_to_string).collect();
        out.add(
            format!("characters, λ={}, k={k}", c.lambda),
            if got == want { Ok(shown.join(", ")) } else { Err(format!("computed {{{}}}", shown.join(", "))) },
        );
    }

    for f in &g.fiber_dimensions {
        let outcome = f
            .algebra
            .parse::<RootSystem>()
            .and_then(|rs| fiber_dimension(&rs, &Weight::from_ints(&f.mu), &bounds()))
            .map_err(err)
            .and_then(|d| if d == f.dim { Ok(d.to_string()) } else { Err(format!("computed {d}, expected {}", f.dim)) });
        out.add(format!("fiber dimension, {} μ={:?}", f.algebra, f.mu), outcome);
    }

    for c in &g.component_counts {
        let outcome = basis(&c.algebra)
            .and_then(|b| center_components(&b, &Weight::from_ints(&c.mu), &bounds()).map_err(err))
            .and_then(|comps| {
                let reps: Vec<String> = comps.iter().map(|x| format!("({})", x.orbit_rep)).collect();
                if comps.len() == c.count {
                    Ok(reps.join(" "))
                } else {
                    Err(format!("computed {} components {}, expected {}", comps.len(), reps.join(" "), c.count))
                }
            });
        out.add(format!("component count, {} μ={:?}", c.algebra, c.mu), outcome);
    }
    Ok(out.0)
}

fn properties_suite(seed: u64) -> Vec<CheckResult> {
    let mut out = Checks(Vec::new());
    let mut s = Sampler::new(seed);

    for name in ["A1", "A2", "B2", "G2"] {
        let outcome = basis(name).and_then(|b| {
            for _ in 0..10 {
                let lambda = s.weight(b.rank());
                let i = s.int(0, b.group().len() as i64 - 1) as usize;
                let moved = dot_action(b.root_system(), &b.group()[i], &lambda);
                if b.character_point(&moved) != b.character_point(&lambda) {
                    return Err(format!("invariants differ at λ=({lambda}) and w•λ=({moved})"));
                }
            }
            Ok("10 sampled pairs".into())
        });
        out.add(format!("dot-invariance of generators, {name}"), outcome);
    }

    let agree = (0..=7u32).try_for_each(|k| {
        let t = center_ideal_rank1(k);
        let r = change_presentation(&t, CoordSystem::Rozhkovskaya).map_err(err)?;
        if r.factor_set() == rozhkovskaya_presentation(k).factor_set() {
            Ok(())
        } else {
            Err(format!("k={k}: {} vs {}", show(&r), show(&rozhkovskaya_presentation(k))))
        }
    });
    out.add("presentations agree, k<=7", agree.map(|_| "8 values of k".into()));

    let vanish = basis("A1").and_then(|a1| {
        for k in 0..=7u32 {
            let comps = center_components(&a1, &Weight::from_ints(&[i64::from(k)]), &bounds()).map_err(err)?;
            let report = membership_test(&a1, &comps, &center_ideal_rank1(k).product(), 5, s.int(0, 1 << 30) as u64)
                .map_err(err)?;
            if let Some(w) = report.witness {
                return Err(format!("k={k}: value {} at λ={}", w.value, w.lambda));
            }
        }
        Ok("tilde relation vanishes on all components".into())
    });
    out.add("membership on sampled points, k<=7", vanish);

    let mutation = basis("A1").and_then(|a1| {
        let comps = center_components(&a1, &Weight::from_ints(&[5]), &bounds()).map_err(err)?;
        let prod = center_ideal_rank1(5).product();
        let bumped = &prod + &Poly::constant(2, q(1));
        let report = membership_test(&a1, &comps, &bumped, 5, s.int(0, 1 << 30) as u64).map_err(err)?;
        match report.witness {
            Some(w) => Ok(format!("mutated relation rejected at λ={}", w.lambda)),
            None => Err("mutated relation accepted".into()),
        }
    });
    out.add("membership rejects a mutated relation, k=5", mutation);

    let ops = (0..=4u32).try_for_each(|k| {
        for _ in 0..2 {
            let lambda = s.rational();
            if !operator_relation_check(&lambda, k, k + 3).map_err(err)? {
                return Err(format!("k={k}, λ={lambda}"));
            }
        }
        Ok(())
    });
    out.add("operator relation on weight blocks, k<=4", ops.map(|_| "10 sampled λ".into()));

    let klein = basis("A1").and_then(|a1| {
        let action = KleinAction::new(&a1, &Weight::from_ints(&[5]), &bounds()).map_err(err)?;
        for _ in 0..5 {
            let lambda = s.weight(1);
            let psi = &lambda + &Weight::from_ints(&[2 * s.int(0, 5) - 5]);
            if !action.composition_table_holds(&lambda, &psi) {
                return Err(format!("fails at λ=({lambda}), ψ=({psi})"));
            }
        }
        Ok("5 sampled points".into())
    });
    out.add("Klein group composition table, k=5", klein);

    let disc = basis("A1").and_then(|a1| {
        for k in 0..=5u32 {
            let mut hits = BTreeSet::new();
            for twice in -2 * (i64::from(k) + 2)..=2 * i64::from(k) {
                let lambda = Weight::new(vec![Rational::new(twice.into(), 2.into())]);
                let chars = tensor_characters(&a1, &lambda, &Weight::from_ints(&[i64::from(k)]), &bounds()).map_err(err)?;
                if chars.iter().any(|(_, m)| *m >= 2) {
                    hits.insert(a1.character_point(&lambda).0[0].clone());
                }
            }
            if hits != discriminant_sl2(k).into_iter().collect() {
                return Err(format!("k={k}"));
            }
        }
        Ok("collisions match discriminant".into())
    });
    out.add("discriminant equals tensor collisions, k<=5", disc);

    out.0
}

fn load_goldens(path: Option<&Path>) -> Result<Goldens, CliError> {
    let text = match path {
        Some(p) => std::fs::read_to_string(p).map_err(|e| CliError::Usage(format!("{}: {e}", p.display())))?,
        None => BUILTIN_GOLDENS.to_string(),
    };
    serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("golden file: {e}")))
}

pub fn run(cli: &Cli, suite: Suite, goldens: Option<&Path>) -> Result<(), CliError> {
    let (name, checks) = match suite {
        Suite::Paper => ("paper", paper_suite(&load_goldens(goldens)?, cli.seed)?),
        Suite::Properties => ("properties", properties_suite(cli.seed)),
    };
    let failed = checks.iter().filter(|c| !c.passed).count();
    let report = Report { suite: name, seed: cli.seed, passed: checks.len() - failed, failed, checks };
    let text = match cli.format.unwrap_or(Format::Json) {
        Format::Json => serde_json::to_string_pretty(&report)? + "\n",
        Format::Text => {
            let mut s = String::new();
            for c in &report.checks {
                s += &format!("{} {}: {}\n", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
            }
            s + &format!("{} passed, {} failed\n", report.passed, report.failed)
        }
    };
    cli.emit(&text)?;
    if failed > 0 {
        return Err(CliError::Verification(format!("{failed} of {} checks failed", report.checks.len())));
    }
    Ok(())
}
