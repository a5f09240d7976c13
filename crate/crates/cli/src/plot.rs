use std::fmt::Write as _;
use std::path::Path;

use kostant_core::exactalg::json::rational_from_str;
use kostant_core::kostant::rank1::{casimir_value, tilde_factor};
use kostant_core::kostant::{center_ideal_rank1, change_presentation, CoordSystem};
use kostant_core::{q, Poly, Rational};
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::CliError;
use crate::{Cli, Figure, Format};

pub struct PlotArgs<'a> {
    pub figure: Figure,
    pub range: &'a str,
    pub samples: usize,
    pub cutoff: u32,
    pub svg: Option<&'a Path>,
}

#[derive(Serialize)]
struct Row {
    figure: &'static str,
    curve_id: String,
    color_index: u32,
    x_num: String,
    x_den: String,
    y_num: String,
    y_den: String,
}

#[derive(Serialize)]
struct PlotJson<'a> {
    figure: &'static str,
    axes: [&'static str; 2],
    #[serde(skip_serializing_if = "Option::is_none")]
    interpretation: Option<&'static str>,
    points: &'a [Row],
}

struct Curve {
    id: String,
    color: u32,
    points: Vec<(Rational, Rational)>,
}

const HC_COLORING: &str =
    "color_index is the least odd m' <= cutoff whose tilde conic passes through the point (exact test)";

fn figure_name(f: Figure) -> &'static str {
    match f {
        Figure::Lines => "lines",
        Figure::CenterTilde => "center-tilde",
        Figure::CenterRozhkovskaya => "center-rozhkovskaya",
        Figure::Graded => "graded",
        Figure::HcCategory => "hc-category",
    }
}

fn axes(f: Figure) -> [&'static str; 2] {
    match f {
        Figure::Lines => ["lambda", "psi"],
        Figure::CenterTilde | Figure::HcCategory => ["C2", "Mt1"],
        Figure::CenterRozhkovskaya => ["C2", "M1"],
        Figure::Graded => ["c2", "M1"],
    }
}

fn parse_range(text: &str) -> Result<(Rational, Rational), CliError> {
    let (a, b) = text.split_once(':').ok_or_else(|| CliError::Usage(format!("--range {text}: expected a:b")))?;
    let (a, b) = (rational_from_str(a.trim())?, rational_from_str(b.trim())?);
    if a >= b {
        return Err(CliError::Usage(format!("--range {text}: empty interval")));
    }
    Ok((a, b))
}

fn parameters(a: &Rational, b: &Rational, n: usize) -> Vec<Rational> {
    let step = (b - a) / q(n as i64 - 1);
    (0..n).map(|i| a + &step * q(i as i64)).collect()
}

/// `(λ(λ+2), (λ+m)(λ+m+2))`.
fn tilde_point(lambda: &Rational, m: i64) -> (Rational, Rational) {
    let c = |v: Rational| &v * &(&v + q(2));
    (c(lambda.clone()), c(lambda + q(m)))
}

fn vanishes(f: &Poly, p: &(Rational, Rational)) -> bool {
    f.evaluate(&[p.0.clone(), p.1.clone()]).map(|v| v == q(0)).unwrap_or(false)
}

fn exactness_error(figure: Figure, id: &str, p: &(Rational, Rational)) -> CliError {
    CliError::Verification(format!("{} curve {id}: point ({}, {}) is off its curve", figure_name(figure), p.0, p.1))
}

fn curves(figure: Figure, k: u32, params: &[Rational], cutoff: u32) -> Result<Vec<Curve>, CliError> {
    let ki = i64::from(k);
    let mut out = Vec::new();
    match figure {
        Figure::Lines => {
            for (j, m) in (0..=ki).map(|j| ki - 2 * j).enumerate() {
                let id = format!("m={m}");
                let points: Vec<_> = params.iter().map(|l| (l.clone(), l + q(m))).collect();
                if let Some(p) = points.iter().find(|p| &p.1 - &p.0 != q(m)) {
                    return Err(exactness_error(figure, &id, p));
                }
                out.push(Curve { id, color: j as u32, points });
            }
        }
        Figure::CenterTilde | Figure::CenterRozhkovskaya | Figure::Graded => {
            let tilde = center_ideal_rank1(k);
            let pres = match figure {
                Figure::CenterTilde => tilde.clone(),
                Figure::CenterRozhkovskaya => change_presentation(&tilde, CoordSystem::Rozhkovskaya)?,
                _ => change_presentation(&tilde, CoordSystem::Graded)?,
            };
            let shift = q(casimir_value(ki));
            for (j, (c, f)) in pres.components.iter().zip(&pres.factors).enumerate() {
                let m = c.rep[0];
                let id = format!("m={m}");
                let points: Vec<_> = params
                    .iter()
                    .map(|l| match figure {
                        Figure::CenterTilde => tilde_point(l, m),
                        Figure::CenterRozhkovskaya => {
                            let (x, y) = tilde_point(l, m);
                            let m1 = &y - &x - &shift;
                            (x, m1)
                        }
                        _ if m == 0 => (l.clone(), q(0)),
                        _ => (l * l, l * q(2 * m)),
                    })
                    .collect();
                if let Some(p) = points.iter().find(|p| !vanishes(f, p)) {
                    return Err(exactness_error(figure, &id, p));
                }
                out.push(Curve { id, color: j as u32, points });
            }
        }
        Figure::HcCategory => {
            let odd: Vec<u32> = (1..=cutoff).step_by(2).collect();
            if odd.is_empty() {
                return Err(CliError::Usage("--cutoff must be at least 1".into()));
            }
            let conics: Vec<Poly> = odd.iter().map(|&m| tilde_factor(m)).collect();
            for (m, conic) in odd.iter().zip(&conics) {
                let id = format!("m={m}");
                for l in params {
                    let p = tilde_point(l, i64::from(*m));
                    if !vanishes(conic, &p) {
                        return Err(exactness_error(figure, &id, &p));
                    }
                    let color = odd.iter().zip(&conics).find(|(_, f)| vanishes(f, &p)).map(|(c, _)| *c).expect("own conic");
                    out.push(Curve { id: id.clone(), color, points: vec![p] });
                }
            }
        }
    }
    Ok(out)
}

fn rows(figure: Figure, curves: &[Curve]) -> Vec<Row> {
    curves
        .iter()
        .flat_map(|c| {
            c.points.iter().map(move |(x, y)| Row {
                figure: figure_name(figure),
                curve_id: c.id.clone(),
                color_index: c.color,
                x_num: x.numer().to_string(),
                x_den: x.denom().to_string(),
                y_num: y.numer().to_string(),
                y_den: y.denom().to_string(),
            })
        })
        .collect()
}

fn csv_text(rows: &[Row]) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).map_err(|e| CliError::Io(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Io(e.to_string()))
}

const PALETTE: [&str; 8] = ["#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf"];

fn svg_text(figure: Figure, curves: &[Curve], note: Option<&str>) -> String {
    let pts = || curves.iter().flat_map(|c| c.points.iter()).map(|(x, y)| (x.to_f64().unwrap_or(0.0), y.to_f64().unwrap_or(0.0)));
    let (mut x0, mut x1, mut y0, mut y1) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for (x, y) in pts() {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    let sx = if x1 > x0 { 560.0 / (x1 - x0) } else { 1.0 };
    let sy = if y1 > y0 { 560.0 / (y1 - y0) } else { 1.0 };
    let map = |x: f64, y: f64| (20.0 + (x - x0) * sx, 580.0 - (y - y0) * sy);
    let mut s = String::from("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" viewBox=\"0 0 600 600\">\n");
    let [ax, ay] = axes(figure);
    let _ = writeln!(s, "<title>{} ({ax}, {ay})</title>", figure_name(figure));
    if let Some(n) = note {
        let _ = writeln!(s, "<desc>interpretation: {n}</desc>");
    }
    s += "<rect width=\"600\" height=\"600\" fill=\"white\"/>\n";
    for c in curves {
        let color = PALETTE[c.color as usize % PALETTE.len()];
        let coords: Vec<String> = c
            .points
            .iter()
            .map(|(x, y)| {
                let (px, py) = map(x.to_f64().unwrap_or(0.0), y.to_f64().unwrap_or(0.0));
                format!("{px:.2},{py:.2}")
            })
            .collect();
        if coords.len() == 1 {
            let (px, py) = coords[0].split_once(',').expect("pair");
            let _ = writeln!(s, "<circle cx=\"{px}\" cy=\"{py}\" r=\"2.5\" fill=\"{color}\"><title>{}</title></circle>", c.id);
        } else {
            let _ = writeln!(
                s,
                "<polyline fill=\"none\" stroke=\"{color}\" stroke-width=\"1.5\" points=\"{}\"><title>{}</title></polyline>",
                coords.join(" "),
                c.id
            );
        }
    }
    s + "</svg>\n"
}

pub fn run(cli: &Cli, args: &PlotArgs) -> Result<(), CliError> {
    if args.samples < 2 {
        return Err(CliError::Usage("--samples must be at least 2".into()));
    }
    let (a, b) = parse_range(args.range)?;
    let k = match &cli.mu {
        None => 5,
        Some(_) => {
            let rs = cli.root_system()?;
            if rs.rank() != 1 {
                return Err(CliError::Usage("plots are available for --algebra A1 only".into()));
            }
            cli.mu(&rs)?.to_ints().expect("integral")[0] as u32
        }
    };
    let params = parameters(&a, &b, args.samples);
    let curves = curves(args.figure, k, &params, args.cutoff)?;
    let note = (args.figure == Figure::HcCategory).then_some(HC_COLORING);
    let rows = rows(args.figure, &curves);
    let text = match cli.format.unwrap_or(Format::Text) {
        Format::Text => csv_text(&rows)?,
        Format::Json => {
            let j = PlotJson { figure: figure_name(args.figure), axes: axes(args.figure), interpretation: note, points: &rows };
            serde_json::to_string_pretty(&j)? + "\n"
        }
    };
    cli.emit(&text)?;
    if let Some(path) = args.svg {
        std::fs::write(path, svg_text(args.figure, &curves, note))
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}
