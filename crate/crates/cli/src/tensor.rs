use kostant_core::hccenter::InvariantBasis;
use kostant_core::liecore::Bounds;
use kostant_core::verma::{linkage_decomposition, linkage_decomposition_sl2, LinkageDecomposition};

use crate::error::CliError;
use crate::{Cli, Format};

/// Labeled sl2 form when λ is an integer ≥ −1, else unlabeled blocks.
fn decompose(cli: &Cli) -> Result<LinkageDecomposition, CliError> {
    let rs = cli.root_system()?;
    let mu = cli.mu(&rs)?;
    let lambda = cli.lambda(&rs)?;
    if rs.rank() == 1 {
        if let Some(l) = lambda.to_ints().map(|v| v[0]).filter(|&l| l >= -1) {
            return Ok(linkage_decomposition_sl2(l, mu.to_ints().expect("integral")[0] as u32)?);
        }
    }
    let bounds = Bounds::default();
    let basis = InvariantBasis::new(&rs, &bounds)?;
    Ok(linkage_decomposition(&basis, &lambda, &mu, &bounds)?)
}

pub fn run(cli: &Cli) -> Result<(), CliError> {
    let d = decompose(cli)?;
    let text = match cli.format.unwrap_or(Format::Json) {
        Format::Json => serde_json::to_string_pretty(&d)? + "\n",
        Format::Text => {
            let mut s = format!("M_({}) ⊗ V^({})", d.lambda, d.mu);
            match d.labeled_sum() {
                Some(sum) => s += &format!(" = {sum}\n"),
                None => s += &format!(": {} blocks\n", d.blocks.len()),
            }
            for b in &d.blocks {
                let mus: Vec<String> = b.weights.iter().map(|w| format!("({w})")).collect();
                let chi: Vec<String> = b.character.values().iter().map(|v| v.to_string()).collect();
                s += &format!("  χ = ({})  mult {}  from μ_i {}\n", chi.join(", "), b.mult, mus.join(" "));
            }
            s
        }
    };
    cli.emit(&text)
}
