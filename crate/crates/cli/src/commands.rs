use std::path::PathBuf;

use anyhow::{Context, Result};
use sharp_resolvent::atlas::{parse_rational, ExponentPair};
use sharp_resolvent::harness::{
    atlas_svg, classify_record, figure_gallery, gamma_record, region_record, run_eigenbox, run_sweep, shapes_table,
    EigenboxConfig, EigenboxReport, Experiment, ShapeRow, SweepPlan,
};
use sharp_resolvent::spectral::{RegionQuery, Window};
use sharp_resolvent::{Pair, Rational};

use crate::emit::{choose, json, write};
use crate::{Cli, Command, ExperimentArg, Format, PairArgs, Verdict};

use Format::{Csv, Json, Svg};

fn rational(s: &str) -> Result<Rational> {
    parse_rational(s).with_context(|| format!("reading {s:?}"))
}

fn pair(x: &str, y: &str) -> Result<Pair> {
    Ok(ExponentPair::new(rational(x)?, rational(y)?)?)
}

impl PairArgs {
    fn parts(&self) -> Result<(u32, Rational, Pair)> {
        Ok((self.dim, rational(&self.order)?, pair(&self.x, &self.y)?))
    }
}

pub fn run(cli: &Cli) -> Result<Verdict> {
    let out = cli.out.as_deref();
    match &cli.command {
        Command::Classify(args) => {
            choose(cli.format, &[Json], "classify")?;
            let (d, s, p) = args.parts()?;
            write(out, "classify", Json, &json(&classify_record(d, &s, &p)?)?)?;
        }
        Command::Gamma { dim, x, y } => {
            choose(cli.format, &[Json], "gamma")?;
            write(out, "gamma", Json, &json(&gamma_record(*dim, &pair(x, y)?)?)?)?;
        }
        Command::Region { pair: args, ell, window, samples } => {
            let format = choose(cli.format, &[Json, Csv, Svg], "region")?;
            let (d, s, p) = args.parts()?;
            let query = RegionQuery::new(d, s, p, *ell)?;
            let rec = region_record(&query, Window::square(*window)?, *samples)?;
            let body = match format {
                Json => json(&rec)?,
                Csv => rec.to_csv(),
                Svg => rec.to_svg(),
            };
            write(out, "region", format, &body)?;
        }
        Command::Shapes { dim, order, ell } => {
            let format = choose(cli.format, &[Json, Csv], "shapes")?;
            let rows = shapes_table(*dim, &rational(order)?, ell)?;
            let body = if format == Json { json(&rows)? } else { shapes_csv(&rows) };
            write(out, "shapes", format, &body)?;
        }
        Command::Scaling { experiment, pair: args, deltas, expected } => {
            let format = choose(cli.format, &[Json, Csv], "scaling")?;
            let (d, s, p) = args.parts()?;
            let kind = match experiment {
                ExperimentArg::Knapp => Experiment::Knapp,
                ExperimentArg::Spherical => Experiment::Spherical,
                ExperimentArg::Kernel1d => Experiment::Kernel1d,
            };
            let deltas = deltas.clone().unwrap_or_else(|| kind.default_deltas());
            let plan = SweepPlan::new(kind, d, s, p, deltas)?.with_tolerance(cli.tol);
            let mut report = run_sweep(&plan)?;
            if expected != "auto" {
                report.fit = report.fit.clone().judge(&rational(expected)?, cli.tol);
            }
            match format {
                Json => write(out, "scaling", Json, &json(&report)?)?,
                _ => {
                    write(out, "scaling", Csv, &report.to_csv())?;
                    if out.is_some() && !report.radial.is_empty() {
                        write(out, "scaling_radial", Csv, &report.radial_csv())?;
                    }
                }
            }
            let fit = &report.fit;
            eprintln!(
                "slope {:.6} expected {} tolerance {} -> {}",
                fit.slope,
                fit.expected.as_deref().unwrap_or("-"),
                cli.tol,
                if fit.pass == Some(true) { "PASS" } else { "FAIL" }
            );
            if fit.pass != Some(true) {
                return Ok(Verdict::Fail);
            }
        }
        Command::Eigenbox { x, y, ell, c, t, preset, amplitude, n, length } => {
            let format = choose(cli.format, &[Json, Csv], "eigenbox")?;
            let mut cfg = EigenboxConfig::new(pair(x, y)?, *ell, *c, *t, preset.parse()?, *amplitude);
            cfg.n = *n;
            cfg.length = *length;
            let report = run_eigenbox(&cfg)?;
            let body = if format == Json { json(&report)? } else { eigen_csv(&report) };
            write(out, "eigenbox", format, &body)?;
            if report.admissible && report.violations > 0 {
                return Ok(Verdict::Fail);
            }
        }
        Command::Figures => {
            choose(cli.format, &[Svg], "figures")?;
            let dir = out.map(PathBuf::from).unwrap_or_else(|| PathBuf::from("figures"));
            let mut written = Vec::new();
            for (name, query, window) in figure_gallery()? {
                let rec = region_record(&query, window, 200)?;
                write(Some(&dir), &name, Svg, &rec.to_svg())?;
                write(Some(&dir), &name, Csv, &rec.to_csv())?;
                write(Some(&dir), &name, Json, &json(&rec.shape)?)?;
                written.push(name);
            }
            for d in 2..=4 {
                let name = format!("atlas_d{d}");
                write(Some(&dir), &name, Svg, &atlas_svg(d)?)?;
                written.push(name);
            }
            println!("{}", serde_json::json!({ "directory": dir, "figures": written }));
        }
    }
    Ok(Verdict::Ok)
}

fn shapes_csv(rows: &[ShapeRow]) -> String {
    let mut s = String::from("label,ell,shape,gamma,omega,region,parameters\n");
    for r in rows {
        let params: Vec<String> = r.report.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect();
        s.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            r.label,
            r.report.ell,
            r.report.shape,
            r.report.gamma,
            r.report.omega,
            r.report.region.as_deref().unwrap_or(""),
            params.join(";")
        ));
    }
    s
}

fn eigen_csv(report: &EigenboxReport) -> String {
    let mut s = String::from("re,im,dist,kappa,in_region,violation\n");
    for e in &report.off_ray {
        s.push_str(&format!("{},{},{},{},{},{}\n", e.re, e.im, e.dist, e.kappa, e.in_region, e.violation));
    }
    s
}
