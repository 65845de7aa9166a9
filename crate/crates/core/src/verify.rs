//! End-to-end checks: moves against GP paths, string sets against cones, and
//! the structural facts the correspondence rests on. Every check returns a
//! report carrying a witness on failure instead of an error.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::arquiver::ArQuiver;
use crate::cartan::{DynkinDiagram, Letter};
use crate::error::{Error, Result};
use crate::lusztig::{antichains, LusztigCrystal};
use crate::quiver::{condition_l_violation, Quiver, ReducedWord};
use crate::strings::{strings_by_filter, ConeSpec, StringCrystal};
use crate::wiring::WiringDiagram;

#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub instance: String,
    pub check: String,
    pub pass: bool,
    /// Present exactly when `pass` is false.
    pub witness: Option<Value>,
}

impl VerificationReport {
    fn new(instance: &str, check: &str, witness: Option<Value>) -> Self {
        Self {
            instance: instance.to_string(),
            check: check.to_string(),
            pass: witness.is_none(),
            witness,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "instance": self.instance,
            "check": self.check,
            "pass": self.pass,
            "witness": self.witness,
        })
    }
}

/// `A3 2>1,2>3 w=1,3,2,1,3,2`.
pub fn describe(q: &Quiver, word: &ReducedWord) -> String {
    let letters: Vec<String> = word.letters().iter().map(|l| l.to_string()).collect();
    format!(
        "{} {} w={}",
        q.diagram().name(),
        q.spec_string(),
        letters.join(",")
    )
}

fn difference(a: &BTreeSet<Vec<i64>>, b: &BTreeSet<Vec<i64>>) -> Vec<Vec<i64>> {
    a.difference(b).cloned().collect()
}

/// `K^GP = L` for a type A quiver and a word adapted to it, as sets of
/// vectors and, if `typed`, type by type.
pub fn check_theorem(q: &Quiver, word: &ReducedWord, typed: bool) -> Result<VerificationReport> {
    if !q.diagram().is_type_a() {
        return Err(Error::NotTypeA);
    }
    let ar = ArQuiver::build(q, word)?;
    let wd = WiringDiagram::new(q.diagram(), word)?;
    let lusztig = LusztigCrystal::new(&ar);
    let instance = describe(q, word);
    let mut witness = None;
    if typed {
        for i in 1..=q.rank() {
            let moves: BTreeSet<Vec<i64>> = lusztig
                .antichains(i)
                .iter()
                .map(|a| a.move_vector(&ar))
                .collect();
            let gp: BTreeSet<Vec<i64>> = wd.gp_paths(i)?.into_iter().map(|p| p.k).collect();
            if moves != gp {
                witness = Some(json!({
                    "type": i,
                    "moves_only": difference(&moves, &gp),
                    "gp_only": difference(&gp, &moves),
                }));
                break;
            }
        }
    } else {
        let moves = lusztig.moves();
        let gp = wd.k_gp()?;
        if moves != gp {
            witness = Some(json!({
                "moves_only": difference(&moves, &gp),
                "gp_only": difference(&gp, &moves),
            }));
        }
    }
    let check = if typed { "theorem-typed" } else { "theorem" };
    Ok(VerificationReport::new(&instance, check, witness))
}

/// The three descriptions of the strings in `[0, bound]^N` agree: closure of
/// `0` under `ẽ_i`, the membership test, and the integer points of `cone`.
pub fn check_cone(
    instance: &str,
    crystal: &StringCrystal,
    cone: &ConeSpec,
    bound: i64,
) -> Result<VerificationReport> {
    let reached = crystal.generate(bound);
    let filtered = strings_by_filter(crystal, bound);
    let points = cone.points(crystal.len(), bound)?;
    let mut witness = None;
    if reached != filtered || reached != points {
        let odd = reached
            .symmetric_difference(&points)
            .chain(reached.symmetric_difference(&filtered))
            .min()
            .expect("sets differ");
        witness = Some(json!({
            "point": odd,
            "reached": reached.contains(odd),
            "is_string": filtered.contains(odd),
            "in_cone": points.contains(odd),
            "violated": cone.violated_by(odd),
        }));
    }
    Ok(VerificationReport::new(
        &format!("{instance} box={bound}"),
        "cone",
        witness,
    ))
}

/// The cone cut out by the Lusztig moves is the string cone, inside a box.
/// Only meaningful under condition (L).
pub fn check_conjecture(q: &Quiver, word: &ReducedWord, bound: i64) -> Result<VerificationReport> {
    let ar = ArQuiver::build(q, word)?;
    if let Some((k, i, value)) = condition_l_violation(&ar) {
        return Err(Error::ConditionLFails(format!(
            "(β_{}, ρ_{i}) = {value}",
            k + 1
        )));
    }
    let moves = ConeSpec::new(LusztigCrystal::new(&ar).moves());
    let crystal = StringCrystal::new(q.diagram(), word);
    let mut report = check_cone(&describe(q, word), &crystal, &moves, bound)?;
    report.check = "conjecture".into();
    Ok(report)
}

/// Facts about AR quivers, hammocks and wiring diagrams that the
/// correspondence between moves and GP paths relies on. Wiring checks are
/// skipped outside type A.
pub fn structural_checks(q: &Quiver) -> Result<Vec<VerificationReport>> {
    let ar = ArQuiver::from_quiver(q);
    let instance = describe(q, ar.word());
    let d = q.diagram();
    let ringel = q.ringel();
    let mut out = Vec::new();
    let mut push = |check: &str, witness: Option<Value>| {
        out.push(VerificationReport::new(&instance, check, witness));
    };

    push(
        "meshes",
        ar.mesh_violations()
            .first()
            .map(|(k, e, g)| json!({"position": k + 1, "ends": e.coords(), "middle": g.coords()})),
    );

    push(
        "coxeter-rho",
        (1..=q.rank()).find_map(|i| {
            let image = q.coxeter_act_weight(&ringel.rho(i));
            let target = ringel.rho_t(i).neg();
            (image != target)
                .then(|| json!({"i": i, "c_rho": image.coords(), "minus_rho_t": target.coords()}))
        }),
    );

    // the τ-orbit of P(i) runs to I(i*)
    let star = d.w0_involution();
    push(
        "level-endpoints",
        (1..=q.rank()).find_map(|i| {
            let level = ar.positions_on_level(i);
            let (first, last) = (level[0], level[level.len() - 1]);
            (ar.root(first) != &q.projective_dim(i)
                || ar.root(last) != &q.injective_dim(star[i - 1]))
                .then(|| json!({"level": i, "first": ar.root(first).coords(), "last": ar.root(last).coords()}))
        }),
    );

    if !d.is_type_a() {
        return Ok(out);
    }
    let wd = WiringDiagram::new(d, ar.word())?;

    push(
        "lambda-plus-phi",
        (0..ar.len()).find_map(|k| {
            let lp = wd.lambda_plus(k);
            let phi = ringel.phi(ar.root(k));
            (lp != phi).then(
                || json!({"position": k + 1, "lambda_plus": lp.coords(), "phi": phi.coords()}),
            )
        }),
    );

    let mut grid_witness = None;
    for i in 1..=q.rank() {
        let grid = ar.grid_a(i)?;
        let hammock = ar.hammock(i);
        let cells: BTreeSet<usize> = grid.cells.iter().map(|c| c.position).collect();
        let mismatch = cells.len() != grid.cells.len()
            || cells != hammock.iter().copied().collect()
            || hammock.iter().any(|&a| {
                hammock
                    .iter()
                    .any(|&b| grid.leq(a, b) != Some(ar.leq(a, b)))
            })
            || ar.root(grid.min_position()) != &q.projective_dim(i)
            || ar.root(grid.max_position()) != &q.injective_dim(i);
        if mismatch {
            grid_witness = Some(json!({"i": i}));
            break;
        }
    }
    push("hammock-grid", grid_witness);

    let wiring_edges = wd.edges();
    let ar_edges: BTreeSet<(usize, usize)> = ar
        .arrows()
        .iter()
        .map(|&(a, b)| (a.min(b), a.max(b)))
        .collect();
    push(
        "hammock-isomorphism",
        (1..=q.rank()).find_map(|i| {
            let h: BTreeSet<usize> = ar.hammock(i).into_iter().collect();
            let inside = |e: &&(usize, usize)| h.contains(&e.0) && h.contains(&e.1);
            let a: BTreeSet<_> = ar_edges.iter().filter(inside).collect();
            let w: BTreeSet<_> = wiring_edges.iter().filter(inside).collect();
            (a != w).then(|| {
                let show = |s: &BTreeSet<&(usize, usize)>| -> Vec<[usize; 2]> {
                    s.iter().map(|e| [e.0 + 1, e.1 + 1]).collect()
                };
                json!({"i": i, "ar": show(&a), "wiring": show(&w)})
            })
        }),
    );

    let mut zone_reports: [Option<Value>; 5] = Default::default();
    for i in 1..=q.rank() {
        let zones = wd.zones(i)?;
        let p: BTreeSet<usize> = ar.p_set(i).into_iter().collect();
        if zone_reports[0].is_none() && zones.right_ends != p {
            zone_reports[0] =
                Some(json!({"i": i, "z": plus_one(&zones.right_ends), "p": plus_one(&p)}));
        }
        if zone_reports[1].is_none() && !wd.is_gp_path(&zones.delta) {
            zone_reports[1] = Some(json!({"i": i, "delta": zones.delta.describe(&wd)}));
        }
        let delta: BTreeSet<usize> = zones.delta.crossings().into_iter().collect();
        let paths = wd.gp_paths(i)?;
        if zone_reports[2].is_none() {
            if let Some(p) = paths
                .iter()
                .find(|p| p.crossings().iter().any(|k| !zones.boundary.contains(k)))
            {
                zone_reports[2] = Some(json!({"i": i, "path": p.describe(&wd)}));
            }
        }
        if zone_reports[3].is_none() {
            let extra: Vec<usize> = zones
                .boundary
                .difference(&zones.right_ends)
                .filter(|k| !delta.contains(k))
                .map(|k| k + 1)
                .collect();
            if !extra.is_empty() {
                zone_reports[3] = Some(json!({"i": i, "outside_delta": extra}));
            }
        }
        if zone_reports[4].is_none() && !wd.is_acyclic(i) {
            zone_reports[4] = Some(json!({"i": i}));
        }
    }
    let [z, delta, inside, frontier, acyclic] = zone_reports;
    push("right-ends-are-p", z);
    push("delta-is-gp", delta);
    push("paths-stay-inside", inside);
    push("boundary-on-delta", frontier);
    push("acyclic", acyclic);

    Ok(out)
}

fn plus_one(s: &BTreeSet<usize>) -> Vec<usize> {
    s.iter().map(|k| k + 1).collect()
}

/// `ẽ_i` adds `α_i` to the weight in both parametrizations, up to `depth`.
pub fn check_weight_increments(q: &Quiver, depth: usize) -> Result<VerificationReport> {
    let ar = ArQuiver::from_quiver(q);
    let d = q.diagram();
    let lusztig = LusztigCrystal::new(&ar);
    let strings = StringCrystal::new(d, ar.word());
    let mut witness = None;
    let graphs = [
        ("lusztig", lusztig.crystal(depth)?, true),
        ("string", strings.crystal(depth)?, false),
    ];
    'outer: for (name, graph, is_lusztig) in &graphs {
        for &(v, i, w) in &graph.edges {
            let (a, b) = (&graph.vertices[v], &graph.vertices[w]);
            let (wa, wb) = if *is_lusztig {
                (lusztig.weight(a), lusztig.weight(b))
            } else {
                (strings.weight(a), strings.weight(b))
            };
            let step: Vec<i64> = wb
                .coords()
                .iter()
                .zip(wa.coords())
                .map(|(x, y)| x - y)
                .collect();
            if step != d.simple_root(i).coords() {
                witness = Some(json!({"parametrization": name, "from": a, "i": i, "to": b}));
                break 'outer;
            }
        }
    }
    Ok(VerificationReport::new(
        &format!("{} depth={depth}", describe(q, ar.word())),
        "weight-increment",
        witness,
    ))
}

/// `ẽ_i (t_{U_A}) = t_{U_A} + l_A` for every antichain `A` of type `i`.
pub fn check_witness_property(q: &Quiver) -> Result<VerificationReport> {
    let ar = ArQuiver::from_quiver(q);
    let lusztig = LusztigCrystal::new(&ar);
    let mut witness = None;
    'outer: for i in 1..=q.rank() {
        for a in lusztig.antichains(i) {
            let u = a.u_vector(&ar);
            let raised = lusztig.e(i, &u)?;
            let expected: Vec<i64> = u
                .iter()
                .zip(a.move_vector(&ar))
                .map(|(x, y)| x + y)
                .collect();
            if raised != expected {
                witness = Some(
                    json!({"type": i, "antichain": plus_one(&a.members.iter().copied().collect()), "got": raised, "expected": expected}),
                );
                break 'outer;
            }
        }
    }
    Ok(VerificationReport::new(
        &describe(q, ar.word()),
        "witness-property",
        witness,
    ))
}

/// `f̃_i ẽ_i a = a` on all strings in the box, and `ẽ_i f̃_i a = a` where
/// `f̃_i a` is defined.
pub fn check_string_inversion(q: &Quiver, bound: i64) -> Result<VerificationReport> {
    let word = q.adapted_word();
    let crystal = StringCrystal::new(q.diagram(), &word);
    let letters: BTreeSet<Letter> = word.letters().iter().copied().collect();
    let mut witness = None;
    'outer: for a in crystal.generate(bound) {
        for &i in &letters {
            let up = crystal.e(i, &a)?;
            if crystal.f(i, &up)?.as_deref() != Some(&a[..]) {
                witness = Some(json!({"point": a, "i": i, "direction": "f after e"}));
                break 'outer;
            }
            if let Some(down) = crystal.f(i, &a)? {
                if crystal.e(i, &down)? != a {
                    witness = Some(json!({"point": a, "i": i, "direction": "e after f"}));
                    break 'outer;
                }
            }
        }
    }
    Ok(VerificationReport::new(
        &format!("{} box={bound}", describe(q, &word)),
        "string-inversion",
        witness,
    ))
}

/// Each antichain has exactly one GP path turning positively at its members,
/// the path's vector is the antichain's move, and reading the path back
/// returns the antichain.
pub fn check_path_bijection(q: &Quiver) -> Result<VerificationReport> {
    let ar = ArQuiver::from_quiver(q);
    let wd = WiringDiagram::new(q.diagram(), ar.word())?;
    let mut witness = None;
    'outer: for i in 1..=q.rank() {
        let family = antichains(&ar, i);
        let paths = wd.gp_paths(i)?;
        if family.len() != paths.len() {
            witness = Some(json!({"type": i, "antichains": family.len(), "paths": paths.len()}));
            break;
        }
        for a in &family {
            let members = plus_one(&a.members.iter().copied().collect());
            let path = match wd.antichain_path(&ar, a) {
                Ok(p) => p,
                Err(e) => {
                    witness =
                        Some(json!({"type": i, "antichain": members, "error": e.to_string()}));
                    break 'outer;
                }
            };
            let back = wd.path_antichain(&ar, &path)?;
            if path.k != a.move_vector(&ar) || &back != a {
                witness = Some(json!({"type": i, "antichain": members, "k": path.k}));
                break 'outer;
            }
        }
    }
    Ok(VerificationReport::new(
        &describe(q, ar.word()),
        "path-bijection",
        witness,
    ))
}

#[derive(Clone, Debug, Default)]
pub struct SuiteSummary {
    pub reports: Vec<VerificationReport>,
    /// Cone sweeps left out because the box held more than
    /// [`SUITE_BOX_LIMIT`] points.
    pub skipped: Vec<String>,
}

impl SuiteSummary {
    pub fn passed(&self) -> usize {
        self.reports.iter().filter(|r| r.pass).count()
    }

    pub fn failed(&self) -> usize {
        self.reports.len() - self.passed()
    }

    pub fn all_passed(&self) -> bool {
        self.failed() == 0
    }

    pub fn to_json(&self) -> Value {
        json!({
            "passed": self.passed(),
            "failed": self.failed(),
            "skipped": self.skipped,
            "reports": self.reports.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
        })
    }
}

pub const SUITE_BOX_LIMIT: u64 = 1 << 20;

/// Every check on every orientation of `A_n`, `n ≤ max_rank`, with canonical
/// adapted words.
pub fn run_suite(max_rank: usize, bound: i64) -> Result<SuiteSummary> {
    let quivers: Vec<Quiver> = (1..=max_rank)
        .flat_map(|n| Quiver::all_orientations(&DynkinDiagram::type_a(n)))
        .collect();
    let per_quiver: Vec<Result<(Vec<VerificationReport>, Option<String>)>> = quivers
        .par_iter()
        .map(|q| {
            let word = q.adapted_word();
            let mut reports = vec![
                check_theorem(q, &word, false)?,
                check_theorem(q, &word, true)?,
            ];
            reports.extend(structural_checks(q)?);
            reports.push(check_witness_property(q)?);
            reports.push(check_path_bijection(q)?);
            let side = (bound + 1) as u64;
            let fits = side
                .checked_pow(word.len() as u32)
                .is_some_and(|points| points <= SUITE_BOX_LIMIT);
            let mut skipped = None;
            if fits {
                let crystal = StringCrystal::new(q.diagram(), &word);
                let wd = WiringDiagram::new(q.diagram(), &word)?;
                let gp = ConeSpec::new(wd.k_gp()?);
                reports.push(check_cone(&describe(q, &word), &crystal, &gp, bound)?);
                reports.push(check_conjecture(q, &word, bound)?);
                reports.push(check_string_inversion(q, bound)?);
            } else {
                skipped = Some(format!("{} box={bound}", describe(q, &word)));
            }
            Ok((reports, skipped))
        })
        .collect();
    let mut summary = SuiteSummary::default();
    for item in per_quiver {
        let (reports, skipped) = item?;
        summary.reports.extend(reports);
        summary.skipped.extend(skipped);
    }
    Ok(summary)
}
