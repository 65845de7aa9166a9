use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde_json::{json, Value};
use stringcone::strings::{inequality_json, pretty_inequality};
use stringcone::verify::{check_cone, check_conjecture, check_theorem, describe, run_suite};
use stringcone::{
    ArQuiver, ConeSpec, LusztigCrystal, Quiver, ReducedWord, StringCrystal, VerificationReport,
    WiringDiagram,
};

use crate::{Failure, Format, Instance, Output, Param, Source};

type Run = Result<Output, Failure>;

fn load(i: &Instance) -> Result<(Quiver, ReducedWord), Failure> {
    let q = Quiver::parse(&i.quiver)?;
    let w = ReducedWord::parse(&i.word, &q)?;
    Ok((q, w))
}

fn adapted(i: &Instance) -> Result<(Quiver, ArQuiver), Failure> {
    let (q, w) = load(i)?;
    let ar = ArQuiver::build(&q, &w)?;
    Ok((q, ar))
}

fn unsupported(what: &str, f: Format) -> Failure {
    let name = format!("{f:?}").to_lowercase();
    Failure::Usage(format!("format `{name}` is not available for {what}"))
}

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn coords(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

pub fn roots(i: &Instance, f: Format) -> Run {
    let (_, w) = load(i)?;
    let rows = w.letters().iter().zip(w.roots()).enumerate();
    let text = match f {
        Format::Json => json_text(&Value::Array(
            rows.map(|(k, (l, r))| {
                json!({"position": k + 1, "letter": l, "root": r.coords(), "label": r.label()})
            })
            .collect(),
        )),
        Format::Tsv => {
            let mut s = String::from("position\tletter\troot\tlabel\n");
            for (k, (l, r)) in rows {
                let _ = writeln!(s, "{}\t{l}\t{}\t{}", k + 1, coords(r.coords()), r.label());
            }
            s
        }
        Format::Pretty => {
            let mut s = String::new();
            for (k, (l, r)) in rows {
                let _ = writeln!(s, "β{:<3} s{l}  {}", k + 1, r.label());
            }
            s
        }
        Format::Dot => return Err(unsupported("roots", f)),
    };
    Ok(Output::ok(text))
}

pub fn ar(i: &Instance, f: Format) -> Run {
    let (_, ar) = adapted(i)?;
    let text = match f {
        Format::Dot => ar.to_dot(),
        Format::Json => json_text(&json!({
            "positions": (0..ar.len()).map(|k| json!({
                "position": k + 1,
                "level": ar.level(k),
                "root": ar.root(k).coords(),
                "tau": ar.tau(k).map(|t| t + 1),
            })).collect::<Vec<_>>(),
            "arrows": ar.arrows().iter().map(|&(a, b)| [a + 1, b + 1]).collect::<Vec<_>>(),
        })),
        Format::Tsv => {
            let mut s = String::from("from\tto\n");
            for &(a, b) in ar.arrows() {
                let _ = writeln!(s, "{}\t{}", a + 1, b + 1);
            }
            s
        }
        Format::Pretty => {
            let mut s = String::new();
            for level in 1..=ar.quiver().rank() {
                let row: Vec<String> = ar
                    .positions_on_level(level)
                    .iter()
                    .map(|&k| format!("{}:{}", k + 1, ar.root(k).label()))
                    .collect();
                let _ = writeln!(s, "level {level}: {}", row.join("  "));
            }
            s
        }
    };
    Ok(Output::ok(text))
}

pub fn hammock(i: &Instance, type_index: usize, f: Format) -> Run {
    let (q, ar) = adapted(i)?;
    q.diagram().check_letter(type_index)?;
    let grid = ar.grid_a(type_index)?;
    let text = match f {
        Format::Json => json_text(&json!({
            "type": type_index,
            "segmented": [grid.left, grid.right],
            "cells": grid.cells.iter().map(|c| json!({
                "k": c.k, "l": c.l, "position": c.position + 1, "root": c.root.coords(),
            })).collect::<Vec<_>>(),
        })),
        Format::Tsv => {
            let mut s = String::from("k\tl\tposition\tlabel\n");
            for c in &grid.cells {
                let _ = writeln!(
                    s,
                    "{}\t{}\t{}\t{}",
                    c.k,
                    c.l,
                    c.position + 1,
                    c.root.label()
                );
            }
            s
        }
        Format::Pretty => {
            let mut s = String::new();
            let left: Vec<String> = grid.left.iter().map(|j| j.to_string()).collect();
            let right: Vec<String> = grid.right.iter().map(|j| j.to_string()).collect();
            let _ = writeln!(s, "c = ({} | {})", left.join(""), right.join(""));
            let width = grid
                .cells
                .iter()
                .map(|c| c.root.label().chars().count())
                .max()
                .unwrap_or(1);
            for k in 1..=grid.left.len() {
                let row: Vec<String> = grid
                    .cells
                    .iter()
                    .filter(|c| c.k == k)
                    .map(|c| format!("{:>width$}", c.root.label()))
                    .collect();
                let _ = writeln!(s, "{}", row.join("  "));
            }
            s
        }
        Format::Dot => return Err(unsupported("hammock", f)),
    };
    Ok(Output::ok(text))
}

pub fn moves(i: &Instance, f: Format) -> Run {
    let (_, ar) = adapted(i)?;
    let crystal = LusztigCrystal::new(&ar);
    let text = match f {
        Format::Tsv => crystal.moves_tsv(),
        Format::Json => json_text(&Value::Array(
            crystal.moves_typed().iter().map(|m| m.to_json()).collect(),
        )),
        Format::Pretty => {
            let mut s = String::new();
            for m in crystal.moves_typed() {
                let labels: Vec<String> = m.antichain.iter().map(|&k| ar.root(k).label()).collect();
                let _ = writeln!(
                    s,
                    "{}  {:<16} {}",
                    m.type_index,
                    labels.join(","),
                    pretty_inequality(&m.vector)
                );
            }
            s
        }
        Format::Dot => return Err(unsupported("moves", f)),
    };
    Ok(Output::ok(text))
}

fn wiring_of(i: &Instance) -> Result<(Quiver, ReducedWord, WiringDiagram), Failure> {
    let (q, w) = load(i)?;
    let wd = WiringDiagram::new(q.diagram(), &w)?;
    Ok((q, w, wd))
}

pub fn gp(i: &Instance, type_index: Option<usize>, f: Format) -> Run {
    let (q, _, wd) = wiring_of(i)?;
    let types: Vec<usize> = match type_index {
        Some(t) => {
            q.diagram().check_letter(t)?;
            vec![t]
        }
        None => (1..=q.rank()).collect(),
    };
    if f == Format::Dot {
        let [t] = types[..] else {
            return Err(Failure::Usage(
                "format `dot` draws one graph G(w0, i) and needs --type-index".into(),
            ));
        };
        return Ok(Output::ok(wd.oriented_dot(t)));
    }
    let mut paths = Vec::new();
    for t in types {
        paths.extend(wd.gp_paths(t)?);
    }
    let text = match f {
        Format::Json => json_text(&Value::Array(paths.iter().map(|p| p.to_json()).collect())),
        Format::Tsv => {
            let mut s = String::from("type\tpath\tk\n");
            for p in &paths {
                let _ = writeln!(s, "{}\t{}\t{}", p.type_index, p.describe(&wd), coords(&p.k));
            }
            s
        }
        Format::Pretty => {
            let mut s = String::new();
            for p in &paths {
                let _ = writeln!(
                    s,
                    "{}  {}  k={}",
                    p.type_index,
                    p.describe(&wd),
                    coords(&p.k)
                );
            }
            s
        }
        Format::Dot => unreachable!("handled above"),
    };
    Ok(Output::ok(text))
}

/// `(type, normal)` pairs, the first type that produces a normal kept.
fn typed_normals(i: &Instance, source: Source) -> Result<Vec<(usize, Vec<i64>)>, Failure> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let all: Vec<(usize, Vec<i64>)> = match source {
        Source::Moves => {
            let (_, ar) = adapted(i)?;
            LusztigCrystal::new(&ar)
                .moves_typed()
                .into_iter()
                .map(|m| (m.type_index, m.vector))
                .collect()
        }
        Source::Gp => {
            let (q, _, wd) = wiring_of(i)?;
            let mut v = Vec::new();
            for t in 1..=q.rank() {
                let mut ks: Vec<Vec<i64>> = wd.gp_paths(t)?.into_iter().map(|p| p.k).collect();
                ks.sort();
                v.extend(ks.into_iter().map(|k| (t, k)));
            }
            v
        }
    };
    for (t, normal) in all {
        if seen.insert(normal.clone()) {
            out.push((t, normal));
        }
    }
    Ok(out)
}

pub fn inequalities(i: &Instance, source: Source, f: Format) -> Run {
    let normals = typed_normals(i, source)?;
    let text = match f {
        Format::Pretty => normals
            .iter()
            .map(|(_, n)| pretty_inequality(n) + "\n")
            .collect(),
        Format::Tsv => {
            let mut s = String::from("type\tinequality\n");
            for (t, n) in &normals {
                let _ = writeln!(s, "{t}\t{}", pretty_inequality(n));
            }
            s
        }
        Format::Json => json_text(&Value::Array(
            normals
                .iter()
                .map(|(t, n)| inequality_json(*t, n))
                .collect(),
        )),
        Format::Dot => return Err(unsupported("inequalities", f)),
    };
    Ok(Output::ok(text))
}

fn check_bound(bound: i64) -> Result<(), Failure> {
    if bound < 0 {
        return Err(Failure::Usage(format!(
            "box bound must be nonnegative, got `{bound}`"
        )));
    }
    Ok(())
}

pub fn strings(i: &Instance, bound: i64, f: Format) -> Run {
    check_bound(bound)?;
    let (q, w) = load(i)?;
    let points = StringCrystal::new(q.diagram(), &w).generate(bound);
    let text = match f {
        Format::Json => json_text(&json!(points)),
        Format::Tsv | Format::Pretty => points.iter().map(|p| coords(p) + "\n").collect(),
        Format::Dot => return Err(unsupported("strings", f)),
    };
    Ok(Output::ok(text))
}

pub fn crystal(i: &Instance, depth: usize, param: Param, f: Format) -> Run {
    let graph = match param {
        Param::Lusztig => {
            let (_, ar) = adapted(i)?;
            LusztigCrystal::new(&ar).crystal(depth)?
        }
        Param::String => {
            let (q, w) = load(i)?;
            StringCrystal::new(q.diagram(), &w).crystal(depth)?
        }
    };
    let text = match f {
        Format::Json => json_text(&graph.to_json()),
        Format::Tsv | Format::Pretty => graph.to_tsv(),
        Format::Dot => graph.to_dot(),
    };
    Ok(Output::ok(text))
}

pub fn wiring(i: &Instance, f: Format) -> Run {
    let (_, _, wd) = wiring_of(i)?;
    let text = match f {
        Format::Dot => wd.to_dot(),
        Format::Json => json_text(&wd.to_json()),
        Format::Tsv => {
            let mut s = String::from("position\tlevel\tcrossing\tleft\tright\n");
            for c in wd.crossings() {
                let label = |ch: &stringcone::wiring::Chamber| -> String {
                    ch.label.iter().map(|w| w.to_string()).collect()
                };
                let _ = writeln!(
                    s,
                    "{}\t{}\t{}\t{}\t{}",
                    c.position + 1,
                    c.level,
                    c.name(),
                    label(wd.left_chamber(c.position)),
                    label(wd.right_chamber(c.position))
                );
            }
            s
        }
        Format::Pretty => {
            let names: Vec<String> = wd.crossings().iter().map(|c| c.name()).collect();
            let levels: Vec<String> = wd.crossings().iter().map(|c| c.level.to_string()).collect();
            format!(
                "crossings {}\nlevels    {}\n",
                names.join(" "),
                levels.join(" ")
            )
        }
    };
    Ok(Output::ok(text))
}

fn report(r: VerificationReport, f: Format) -> Run {
    let text = match f {
        Format::Json => json_text(&r.to_json()),
        Format::Pretty | Format::Tsv => {
            let verdict = if r.pass { "PASS" } else { "FAIL" };
            let mut s = format!("{verdict}\t{}\t{}\n", r.check, r.instance);
            if let Some(w) = &r.witness {
                let _ = writeln!(s, "witness\t{w}");
            }
            s
        }
        Format::Dot => return Err(unsupported("verify", f)),
    };
    Ok(Output { text, pass: r.pass })
}

pub fn verify_theorem(i: &Instance, typed: bool, f: Format) -> Run {
    let (q, w) = load(i)?;
    report(check_theorem(&q, &w, typed)?, f)
}

pub fn verify_cone(i: &Instance, bound: i64, source: Source, f: Format) -> Run {
    check_bound(bound)?;
    let (q, w) = load(i)?;
    let normals = typed_normals(i, source)?.into_iter().map(|(_, n)| n);
    let crystal = StringCrystal::new(q.diagram(), &w);
    report(
        check_cone(&describe(&q, &w), &crystal, &ConeSpec::new(normals), bound)?,
        f,
    )
}

pub fn verify_conjecture(i: &Instance, bound: i64, f: Format) -> Run {
    check_bound(bound)?;
    let (q, w) = load(i)?;
    report(check_conjecture(&q, &w, bound)?, f)
}

pub fn verify_suite(max_rank: usize, bound: i64, f: Format) -> Run {
    check_bound(bound)?;
    let summary = run_suite(max_rank, bound)?;
    let text = match f {
        Format::Json => json_text(&summary.to_json()),
        Format::Pretty | Format::Tsv => {
            let mut s = String::new();
            for r in summary.reports.iter().filter(|r| !r.pass) {
                let _ = writeln!(
                    s,
                    "FAIL\t{}\t{}\t{}",
                    r.check,
                    r.instance,
                    r.to_json()["witness"]
                );
            }
            for skipped in &summary.skipped {
                let _ = writeln!(s, "skipped cone checks\t{skipped}");
            }
            if summary.all_passed() {
                let _ = writeln!(s, "all checks passed ({} checks)", summary.passed());
            } else {
                let _ = writeln!(
                    s,
                    "{} of {} checks failed",
                    summary.failed(),
                    summary.reports.len()
                );
            }
            s
        }
        Format::Dot => return Err(unsupported("verify", f)),
    };
    Ok(Output {
        text,
        pass: summary.all_passed(),
    })
}
