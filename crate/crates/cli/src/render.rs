//! Text, CSV and JSON renderings of command results. Graphs are printed in
//! the 1-based `n=..;edges=..` format.

use std::fmt::Write as _;

use anyhow::Result;
use graphcord_core::concurrence::subset_qubits;
use graphcord_core::verify::SuiteResult;
use graphcord_core::{
    CanonicalTable, ClassRow, ConcurrenceClassification, ConcurrenceValue, DenseState, Graph,
    GraphState, OrbitReport, PuritySpectrum,
};
use serde::Serialize;

use crate::Format;

fn csv_string<F>(header: &[&str], fill: F) -> Result<String>
where
    F: FnOnce(&mut csv::Writer<Vec<u8>>) -> Result<()>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    fill(&mut w)?;
    Ok(String::from_utf8(w.into_inner()?)?)
}

fn json_string<T: Serialize + ?Sized>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn graph_of(n: usize, code: u32) -> Graph {
    Graph::from_code(n, code).expect("codes come from the enumeration")
}

fn subset_label(mask: u32) -> String {
    let qs: Vec<String> = subset_qubits(mask)
        .iter()
        .map(|q| (q + 1).to_string())
        .collect();
    format!("{{{}}}", qs.join(","))
}

pub fn enumeration(graphs: &[Graph], table: &CanonicalTable, format: Format) -> Result<String> {
    #[derive(Serialize)]
    struct Entry {
        code: u32,
        graph: String,
        canonical_code: u32,
    }
    #[derive(Serialize)]
    struct IsoClass {
        representative_code: u32,
        representative: String,
        size: usize,
    }
    let n = table.n();
    let entries: Vec<Entry> = graphs
        .iter()
        .map(|g| Entry {
            code: g.code(),
            graph: g.to_string(),
            canonical_code: table.canonical(g.code()),
        })
        .collect();
    let classes: Vec<IsoClass> = table
        .representatives()
        .into_iter()
        .map(|r| IsoClass {
            representative_code: r,
            representative: graph_of(n, r).to_string(),
            size: entries.iter().filter(|e| e.canonical_code == r).count(),
        })
        .collect();
    match format {
        Format::Text => {
            let mut s = String::new();
            for e in &entries {
                writeln!(s, "{} {} canonical={}", e.code, e.graph, e.canonical_code)?;
            }
            writeln!(s, "labeled graphs: {}", entries.len())?;
            writeln!(s, "isomorphism classes: {}", classes.len())?;
            for c in &classes {
                writeln!(s, "iso representative={} size={}", c.representative, c.size)?;
            }
            Ok(s)
        }
        Format::Csv => csv_string(&["code", "graph", "canonical_code"], |w| {
            for e in &entries {
                w.serialize(e)?;
            }
            Ok(())
        }),
        Format::Json => {
            #[derive(Serialize)]
            struct Doc<'a> {
                n: usize,
                graphs: &'a [Entry],
                isomorphism_classes: &'a [IsoClass],
            }
            json_string(&Doc {
                n,
                graphs: &entries,
                isomorphism_classes: &classes,
            })
        }
    }
}

pub fn state(g: &Graph, s: &GraphState, format: Format) -> Result<String> {
    match format {
        Format::Text => Ok(s.dump()),
        Format::Csv => csv_string(&["basis", "sign"], |w| {
            for (label, line) in s.dump().lines().enumerate() {
                let basis = line.split_whitespace().next().unwrap_or_default();
                w.write_record([basis.to_string(), format!("{:+}", s.signs()[label])])?;
            }
            Ok(())
        }),
        Format::Json => {
            #[derive(Serialize)]
            struct Doc<'a> {
                graph: String,
                n: usize,
                signs: &'a [i8],
            }
            json_string(&Doc {
                graph: g.to_string(),
                n: s.n(),
                signs: s.signs(),
            })
        }
    }
}

pub fn dense_state(g: &Graph, vertex: usize, s: &DenseState, format: Format) -> Result<String> {
    match format {
        Format::Text => Ok(s.dump()),
        Format::Csv => csv_string(&["basis", "re", "im"], |w| {
            for line in s.dump().lines() {
                let (basis, amp) = line.split_once(' ').unwrap_or((line, "0,0"));
                let (re, im) = amp.split_once(',').unwrap_or((amp, "0"));
                w.write_record([basis, re, im])?;
            }
            Ok(())
        }),
        Format::Json => {
            #[derive(Serialize)]
            struct Doc {
                graph: String,
                lc_vertex: usize,
                amplitudes: Vec<[f64; 2]>,
            }
            json_string(&Doc {
                graph: g.to_string(),
                lc_vertex: vertex,
                amplitudes: s.amplitudes().iter().map(|a| [a.re, a.im]).collect(),
            })
        }
    }
}

pub fn concurrence(
    g: &Graph,
    spectrum: &PuritySpectrum,
    value: &ConcurrenceValue,
    format: Format,
) -> Result<String> {
    let sum = spectrum.sum();
    match format {
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "graph={g}")?;
            for (mask, p) in spectrum.iter() {
                writeln!(s, "purity {} = {}", subset_label(mask), p)?;
            }
            writeln!(s, "purity_sum={sum}")?;
            writeln!(s, "radicand={}", value.radicand())?;
            writeln!(s, "concurrence_squared={}", value.squared())?;
            writeln!(s, "concurrence={}", value.fixed4())?;
            Ok(s)
        }
        Format::Csv => csv_string(
            &[
                "graph",
                "purity_sum",
                "radicand_num",
                "radicand_den",
                "concurrence_float",
            ],
            |w| {
                w.write_record([
                    g.to_string(),
                    sum.to_string(),
                    value.radicand().numer().to_string(),
                    value.radicand().denom().to_string(),
                    value.fixed4(),
                ])?;
                Ok(())
            },
        ),
        Format::Json => {
            #[derive(Serialize)]
            struct Purity {
                subset: Vec<usize>,
                value: String,
            }
            #[derive(Serialize)]
            struct Doc {
                graph: String,
                purities: Vec<Purity>,
                purity_sum: String,
                radicand_num: i64,
                radicand_den: i64,
                concurrence_float: f64,
            }
            json_string(&Doc {
                graph: g.to_string(),
                purities: spectrum
                    .iter()
                    .map(|(m, p)| Purity {
                        subset: subset_qubits(m).iter().map(|q| q + 1).collect(),
                        value: p.to_string(),
                    })
                    .collect(),
                purity_sum: sum.to_string(),
                radicand_num: *value.radicand().numer(),
                radicand_den: *value.radicand().denom(),
                concurrence_float: value.rounded4(),
            })
        }
    }
}

pub fn classification(c: &ConcurrenceClassification, format: Format) -> Result<String> {
    let rows = c.rows();
    match format {
        Format::Text => {
            let mut s = String::new();
            for (row, class) in rows.iter().zip(c.classes()) {
                writeln!(
                    s,
                    "class={} concurrence={:.4} radicand={} labeled={} representatives={} representative={}",
                    row.class_index,
                    row.concurrence_float,
                    class.value.radicand(),
                    row.labeled_count,
                    row.representative_count,
                    graph_of(c.n(), row.representative_code)
                )?;
            }
            Ok(s)
        }
        Format::Csv => csv_string(&ClassRow::HEADER, |w| {
            for row in &rows {
                w.write_record(row.to_record())?;
            }
            Ok(())
        }),
        Format::Json => json_string(&rows),
    }
}

#[derive(Serialize)]
struct OrbitRow {
    class: usize,
    size_labeled: usize,
    size_representatives: usize,
    concurrence: f64,
    radicand_num: i64,
    radicand_den: i64,
    representative_code: u32,
    representative: String,
}

fn orbit_rows(report: &OrbitReport) -> Vec<OrbitRow> {
    let n = report.partition.n();
    report
        .partition
        .classes()
        .iter()
        .enumerate()
        .map(|(k, class)| {
            let value = report.concurrence[k];
            OrbitRow {
                class: k + 1,
                size_labeled: class.len(),
                size_representatives: report.representative_counts[k],
                concurrence: value.rounded4(),
                radicand_num: *value.radicand().numer(),
                radicand_den: *value.radicand().denom(),
                representative_code: class.representative.code(),
                representative: graph_of(n, class.representative.code()).to_string(),
            }
        })
        .collect()
}

pub fn orbits(report: &OrbitReport, format: Format) -> Result<String> {
    let rows = orbit_rows(report);
    match format {
        Format::Text => {
            let mut s = String::new();
            for r in &rows {
                writeln!(
                    s,
                    "class={} size_labeled={} size_representatives={} concurrence={:.4} representative={}",
                    r.class, r.size_labeled, r.size_representatives, r.concurrence, r.representative
                )?;
            }
            for m in &report.refinement.merges {
                let classes: Vec<String> =
                    m.lc_classes.iter().map(|k| (k + 1).to_string()).collect();
                writeln!(
                    s,
                    "shared concurrence={:.4} classes={}",
                    rows[m.lc_classes[0]].concurrence,
                    classes.join(",")
                )?;
            }
            Ok(s)
        }
        Format::Csv => csv_string(
            &[
                "class",
                "size_labeled",
                "size_representatives",
                "concurrence",
                "radicand_num",
                "radicand_den",
                "representative_code",
                "representative",
            ],
            |w| {
                for r in &rows {
                    w.write_record([
                        r.class.to_string(),
                        r.size_labeled.to_string(),
                        r.size_representatives.to_string(),
                        format!("{:.4}", r.concurrence),
                        r.radicand_num.to_string(),
                        r.radicand_den.to_string(),
                        r.representative_code.to_string(),
                        r.representative.clone(),
                    ])?;
                }
                Ok(())
            },
        ),
        Format::Json => {
            #[derive(Serialize)]
            struct Doc<'a> {
                n: usize,
                kind: graphcord_core::PartitionKind,
                classes: &'a [OrbitRow],
                refinement: &'a graphcord_core::RefinementTable,
            }
            json_string(&Doc {
                n: report.partition.n(),
                kind: report.partition.kind(),
                classes: &rows,
                refinement: &report.refinement,
            })
        }
    }
}

pub fn verification(results: &[(usize, Vec<SuiteResult>)], format: Format) -> Result<String> {
    match format {
        Format::Text => {
            let mut s = String::new();
            for (n, suites) in results {
                for r in suites {
                    writeln!(
                        s,
                        "n={n} suite={:?} result={} ({})",
                        r.name,
                        if r.passed { "pass" } else { "fail" },
                        r.detail
                    )?;
                }
            }
            Ok(s)
        }
        Format::Csv => csv_string(&["n", "suite", "passed", "detail"], |w| {
            for (n, suites) in results {
                for r in suites {
                    w.write_record([
                        n.to_string(),
                        r.name.to_string(),
                        r.passed.to_string(),
                        r.detail.clone(),
                    ])?;
                }
            }
            Ok(())
        }),
        Format::Json => {
            #[derive(Serialize)]
            struct Doc<'a> {
                n: usize,
                suites: &'a [SuiteResult],
            }
            let docs: Vec<Doc> = results
                .iter()
                .map(|(n, suites)| Doc { n: *n, suites })
                .collect();
            json_string(&docs)
        }
    }
}
