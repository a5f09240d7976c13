use kostant_core::exactalg::PolyJson;
use kostant_core::hccenter::InvariantBasis;
use kostant_core::kostant::{
    center_components, center_ideal_rank1, change_presentation, fiber_dimension, ComponentJson, CoordSystem,
};
use kostant_core::liecore::{weight_system, Bounds, WeightEntryJson};
use serde::Serialize;

use crate::error::CliError;
use crate::{CenterCoords, Cli, Format};

#[derive(Serialize)]
struct ComponentsReport {
    algebra: String,
    mu: Vec<String>,
    generator_vars: Vec<String>,
    generators: Vec<PolyJson>,
    degrees: Vec<u32>,
    components: Vec<ComponentJson>,
    fiber_dimension: u64,
    multiplicity_free: bool,
    weights: Vec<WeightEntryJson>,
}

pub fn run(cli: &Cli, coords: Option<CenterCoords>) -> Result<(), CliError> {
    let rs = cli.root_system()?;
    let mu = cli.mu(&rs)?;
    let coords = coords.unwrap_or(if rs.rank() == 1 { CenterCoords::Tilde } else { CenterCoords::Components });
    let target = match coords {
        CenterCoords::Components => return components(cli, &rs, &mu),
        CenterCoords::Tilde => CoordSystem::Tilde,
        CenterCoords::Rozhkovskaya => CoordSystem::Rozhkovskaya,
        CenterCoords::Graded => CoordSystem::Graded,
    };
    if rs.rank() != 1 {
        return Err(CliError::Usage(format!(
            "--coords {target} needs --algebra A1; use --coords components for {}",
            rs.name()
        )));
    }
    let k = mu.to_ints().expect("dominant integral")[0] as u32;
    let tilde = center_ideal_rank1(k);
    let pres = if target == CoordSystem::Tilde { tilde } else { change_presentation(&tilde, target)? };
    let text = match cli.format.unwrap_or(Format::Json) {
        Format::Json => serde_json::to_string_pretty(&pres.to_json())? + "\n",
        Format::Text => {
            let vars = pres.vars.join(", ");
            let mut s = format!("Spec Z^{{{k}}}(sl2) in ({vars}) [{target}]\n");
            s += &format!("relation: {} = 0\n", pres.factored_string());
            for (c, f) in pres.components.iter().zip(&pres.factors) {
                s += &format!("  orbit {:?} (stabilizer {}): {} = 0\n", c.rep, c.stab, f.display_with(&pres.vars));
            }
            s
        }
    };
    cli.emit(&text)
}

fn components(cli: &Cli, rs: &kostant_core::liecore::RootSystem, mu: &kostant_core::liecore::Weight) -> Result<(), CliError> {
    let bounds = Bounds::default();
    let basis = InvariantBasis::new(rs, &bounds)?;
    let comps = center_components(&basis, mu, &bounds)?;
    let ws = weight_system(rs, mu, &bounds)?;
    let vars: Vec<String> = (1..=rs.rank()).map(|i| format!("l{i}")).collect();
    let report = ComponentsReport {
        algebra: rs.name(),
        mu: mu.to_strings(),
        generators: basis.generators().iter().map(|g| PolyJson::from_poly(g, &vars)).collect(),
        generator_vars: vars,
        degrees: basis.degrees().to_vec(),
        components: comps.iter().map(|c| c.to_json()).collect(),
        fiber_dimension: fiber_dimension(rs, mu, &bounds)?,
        multiplicity_free: ws.is_multiplicity_free(),
        weights: ws.to_json(),
    };
    let text = match cli.format.unwrap_or(Format::Json) {
        Format::Json => serde_json::to_string_pretty(&report)? + "\n",
        Format::Text => {
            let mut s = format!("Spec Z^μ({}) for μ = ({})\n", report.algebra, report.mu.join(","));
            s += &format!("components: {}\n", report.components.len());
            for c in &report.components {
                s += &format!("  λ ↦ (χ_λ, χ_(λ+{:?}))  stabilizer {}\n", c.rep, c.stab);
            }
            s += &format!("fiber dimension: {}\n", report.fiber_dimension);
            s += &format!("multiplicity free: {}\n", report.multiplicity_free);
            for (g, d) in basis.generators().iter().zip(&report.degrees) {
                s += &format!("  invariant of degree {d}: {}\n", g.display_with(&report.generator_vars));
            }
            s
        }
    };
    cli.emit(&text)
}
