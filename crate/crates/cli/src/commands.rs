use std::fs;
use std::io::Write;
use std::path::Path;

use anyhow::{bail, Context};
use graphcord_core::{
    build_state_phase, classify_by_concurrence, enumerate_labeled_graphs, lc_orbits,
    lc_unitary_apply, purity_spectrum, verify, CanonicalTable, Graph,
};

use crate::render;
use crate::{Command, Format, Output};

#[derive(Debug)]
pub enum Failure {
    Usage(anyhow::Error),
    Verification,
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(e)
    }
}

impl From<graphcord_core::Error> for Failure {
    fn from(e: graphcord_core::Error) -> Self {
        Failure::Usage(e.into())
    }
}

fn parse_graph(text: &str) -> anyhow::Result<Graph> {
    text.parse::<Graph>().map_err(Into::into)
}

fn emit(out: &Output, body: &str) -> anyhow::Result<()> {
    match &out.output {
        Some(path) => fs::write(path, body).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(body.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

pub fn run(command: &Command) -> Result<(), Failure> {
    match command {
        Command::Enumerate { n, out } => {
            let table = CanonicalTable::new(*n)?;
            let graphs: Vec<Graph> = enumerate_labeled_graphs(*n)?.collect();
            emit(out, &render::enumeration(&graphs, &table, out.format)?)?;
        }
        Command::State { graph, lc, out } => {
            let g = parse_graph(graph)?;
            let body = match lc {
                None => render::state(&g, &build_state_phase(&g), out.format)?,
                Some(0) => bail_usage("vertices are numbered from 1")?,
                Some(a) => render::dense_state(&g, *a, &lc_unitary_apply(&g, a - 1)?, out.format)?,
            };
            emit(out, &body)?;
        }
        Command::Concurrence { graph, out } => {
            let g = parse_graph(graph)?;
            let spectrum = purity_spectrum(&build_state_phase(&g));
            let value = graphcord_core::concurrence::concurrence_from_spectrum(&spectrum)?;
            emit(
                out,
                &render::concurrence(&g, &spectrum, &value, out.format)?,
            )?;
        }
        Command::Classify { n, out } => {
            let classification = classify_by_concurrence(*n)?;
            emit(out, &render::classification(&classification, out.format)?)?;
        }
        Command::Orbits { n, quotient, out } => {
            let report = lc_orbits(*n, *quotient)?;
            if *quotient {
                if let Some(expected) = reference_lc_count(*n) {
                    if report.partition.len() != expected {
                        eprintln!(
                            "warning: found {} LC classes for n={n}, reference count is {expected}",
                            report.partition.len()
                        );
                    }
                }
            }
            emit(out, &render::orbits(&report, out.format)?)?;
        }
        Command::Verify { n, out } => {
            let mut all = Vec::new();
            for &k in n {
                all.push((k, verify::run_suites(k)?));
            }
            emit(out, &render::verification(&all, out.format)?)?;
            if all.iter().flat_map(|(_, r)| r).any(|r| !r.passed) {
                return Err(Failure::Verification);
            }
        }
        Command::Export { n, out } => {
            let dir = out
                .output
                .as_deref()
                .context("export needs an output directory (-o <dir>)")?;
            let format = match out.format {
                Format::Text => Format::Csv,
                f => f,
            };
            for path in export(n, dir, format)? {
                println!("{}", path);
            }
        }
    }
    Ok(())
}

fn bail_usage(msg: &str) -> anyhow::Result<String> {
    bail!("{msg}")
}

/// Known LC class counts (up to relabeling) for the sizes covered by the
/// published tables.
fn reference_lc_count(n: usize) -> Option<usize> {
    match n {
        3 => Some(3),
        4 => Some(6),
        5 => Some(11),
        _ => None,
    }
}

fn export(ns: &[usize], dir: &Path, format: Format) -> anyhow::Result<Vec<String>> {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let ext = if format == Format::Json {
        "json"
    } else {
        "csv"
    };
    let mut written = Vec::new();
    for &n in ns {
        let classification = classify_by_concurrence(n)?;
        let report = lc_orbits(n, true)?;
        for (stem, body) in [
            ("classify", render::classification(&classification, format)?),
            ("orbits", render::orbits(&report, format)?),
        ] {
            let path = dir.join(format!("{stem}_n{n}.{ext}"));
            fs::write(&path, body).with_context(|| format!("writing {}", path.display()))?;
            written.push(path.display().to_string());
        }
    }
    Ok(written)
}
