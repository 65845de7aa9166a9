//! Wiring diagrams of reduced words in type A, their chambers, the oriented
//! graphs `G(w₀, i)` and Gleizer-Postnikov paths.
//!
//! Tracks are numbered `1..=n+1` from top to bottom; wire `L_w` starts on
//! track `w`. A crossing on level `j` swaps the occupants of tracks `j` and
//! `j+1`. Wires `≤ i` travel right to left in `G(w₀, i)`, the others left to
//! right.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::arquiver::ArQuiver;
use crate::cartan::{DynkinDiagram, Letter, Weight};
use crate::error::{Error, Result};
use crate::lusztig::{antichains, Antichain};
use crate::quiver::ReducedWord;

/// Crossing `position` on level `level` of wires `upper < lower`; `upper`
/// occupies track `level` just left of it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Crossing {
    pub position: usize,
    pub level: Letter,
    pub upper: usize,
    pub lower: usize,
}

impl Crossing {
    pub fn other(&self, wire: usize) -> usize {
        if wire == self.upper {
            self.lower
        } else {
            self.upper
        }
    }

    pub fn name(&self) -> String {
        format!("v{}{}", self.upper, self.lower)
    }
}

/// A region on level `level` between two consecutive crossings of that level
/// (`None` at the borders), labelled by the wires passing above it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chamber {
    pub level: Letter,
    pub left: Option<usize>,
    pub right: Option<usize>,
    pub label: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Vertex {
    /// `l_w`, the left end of wire `w`.
    Left(usize),
    /// `r_w`, the right end of wire `w`.
    Right(usize),
    Crossing(usize),
}

impl Vertex {
    fn name(&self, wd: &WiringDiagram) -> String {
        match *self {
            Vertex::Left(w) => format!("l{w}"),
            Vertex::Right(w) => format!("r{w}"),
            Vertex::Crossing(k) => wd.crossings[k].name(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct WiringDiagram {
    diagram: DynkinDiagram,
    letters: Vec<Letter>,
    crossings: Vec<Crossing>,
    /// Crossings met by wire `w` from left to right, at index `w - 1`.
    on_wire: Vec<Vec<usize>>,
    chambers: Vec<Chamber>,
    left_chamber: Vec<usize>,
    right_chamber: Vec<usize>,
}

impl WiringDiagram {
    pub fn new(diagram: &DynkinDiagram, word: &ReducedWord) -> Result<Self> {
        if !diagram.is_type_a() {
            return Err(Error::NotTypeA);
        }
        let n = diagram.rank();
        let letters = word.letters().to_vec();
        let mut tracks: Vec<usize> = (1..=n + 1).collect();
        let mut crossings = Vec::with_capacity(letters.len());
        let mut on_wire = vec![Vec::new(); n + 1];
        // labels of the chambers opening on each level, and where they opened
        let mut open: Vec<(Option<usize>, Vec<usize>)> =
            (0..=n).map(|j| (None, (1..=j).collect())).collect();
        let mut chambers = Vec::new();
        let mut left_chamber = Vec::with_capacity(letters.len());
        let mut right_chamber = Vec::with_capacity(letters.len());
        for (k, &j) in letters.iter().enumerate() {
            diagram.check_letter(j)?;
            let (upper, lower) = (tracks[j - 1], tracks[j]);
            // a reduced word for w₀ crosses every pair exactly once, always
            // from the natural order to the reversed one
            if upper > lower {
                return Err(Error::NotReducedW0(format!(
                    "wires {lower} and {upper} cross twice (position {})",
                    k + 1
                )));
            }
            tracks.swap(j - 1, j);
            crossings.push(Crossing {
                position: k,
                level: j,
                upper,
                lower,
            });
            on_wire[upper - 1].push(k);
            on_wire[lower - 1].push(k);
            let (left, label) = std::mem::replace(
                &mut open[j],
                (Some(k), {
                    let mut l = tracks[..j].to_vec();
                    l.sort_unstable();
                    l
                }),
            );
            left_chamber.push(chambers.len());
            chambers.push(Chamber {
                level: j,
                left,
                right: Some(k),
                label,
            });
        }
        if crossings.len() != n * (n + 1) / 2 {
            return Err(Error::NotReducedW0(format!(
                "{} letters, expected {}",
                crossings.len(),
                n * (n + 1) / 2
            )));
        }
        for (j, (left, label)) in open.into_iter().enumerate().skip(1) {
            chambers.push(Chamber {
                level: j,
                left,
                right: None,
                label,
            });
        }
        for k in 0..crossings.len() {
            let c = chambers
                .iter()
                .position(|ch| ch.left == Some(k))
                .expect("every crossing opens a chamber");
            right_chamber.push(c);
        }
        Ok(Self {
            diagram: diagram.clone(),
            letters,
            crossings,
            on_wire,
            chambers,
            left_chamber,
            right_chamber,
        })
    }

    pub fn rank(&self) -> usize {
        self.diagram.rank()
    }

    pub fn len(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.crossings.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing(&self, k: usize) -> &Crossing {
        &self.crossings[k]
    }

    /// Crossings along wire `w`, left to right.
    pub fn wire(&self, w: usize) -> &[usize] {
        &self.on_wire[w - 1]
    }

    pub fn chambers(&self) -> &[Chamber] {
        &self.chambers
    }

    pub fn left_chamber(&self, k: usize) -> &Chamber {
        &self.chambers[self.left_chamber[k]]
    }

    pub fn right_chamber(&self, k: usize) -> &Chamber {
        &self.chambers[self.right_chamber[k]]
    }

    /// Position of the crossing of `L_a` and `L_b`.
    pub fn crossing_of(&self, a: usize, b: usize) -> Option<usize> {
        let (a, b) = (a.min(b), a.max(b));
        self.crossings
            .iter()
            .position(|c| c.upper == a && c.lower == b)
    }

    /// `Σ_{w ∈ label} ν_w` with `ν_w = ω_w - ω_{w-1}` (and `ω_0 = ω_{n+1} = 0`).
    pub fn chamber_weight(&self, label: &[usize]) -> Weight {
        let n = self.rank();
        let mut v = vec![0; n];
        for &w in label {
            if w <= n {
                v[w - 1] += 1;
            }
            if w >= 2 {
                v[w - 2] -= 1;
            }
        }
        Weight(v)
    }

    pub fn lambda_minus(&self, k: usize) -> Weight {
        self.chamber_weight(&self.left_chamber(k).label)
    }

    pub fn lambda_plus(&self, k: usize) -> Weight {
        self.chamber_weight(&self.right_chamber(k).label)
    }

    /// Unordered edges of `G°(w₀)`: consecutive crossings along a wire.
    pub fn edges(&self) -> BTreeSet<(usize, usize)> {
        self.on_wire
            .iter()
            .flat_map(|seq| seq.windows(2).map(|p| (p[0].min(p[1]), p[0].max(p[1]))))
            .collect()
    }

    fn backward(w: usize, i: Letter) -> bool {
        w <= i
    }

    /// The vertex after crossing-or-border index `idx` along wire `w` in its
    /// travel direction for type `i`. Indices run over `l_w, crossings, r_w`.
    fn next_on_wire(&self, w: usize, idx: usize, i: Letter) -> (Vertex, usize) {
        let seq = &self.on_wire[w - 1];
        let to = if Self::backward(w, i) {
            idx - 1
        } else {
            idx + 1
        };
        let v = if to == 0 {
            Vertex::Left(w)
        } else if to == seq.len() + 1 {
            Vertex::Right(w)
        } else {
            Vertex::Crossing(seq[to - 1])
        };
        (v, to)
    }

    fn index_on_wire(&self, w: usize, k: usize) -> usize {
        1 + self.on_wire[w - 1]
            .iter()
            .position(|&c| c == k)
            .expect("wire passes the crossing")
    }

    /// Going straight along `h` through crossing `k` is forbidden iff both
    /// wires travel the same way and `h` climbs a track doing so.
    pub fn is_forbidden(&self, k: usize, h: usize, i: Letter) -> bool {
        let c = &self.crossings[k];
        let o = c.other(h);
        if Self::backward(h, i) != Self::backward(o, i) {
            return false;
        }
        // left of the crossing `upper` is on top
        if Self::backward(h, i) {
            h == c.upper
        } else {
            h == c.lower
        }
    }

    /// Arcs of `G(w₀, i)` as `(from, to, wire)`.
    pub fn oriented_arcs(&self, i: Letter) -> Vec<(Vertex, Vertex, usize)> {
        let mut arcs = Vec::new();
        for w in 1..=self.rank() + 1 {
            let m = self.on_wire[w - 1].len();
            let range: Vec<usize> = if Self::backward(w, i) {
                (1..=m + 1).rev().collect()
            } else {
                (0..=m).collect()
            };
            for idx in range {
                let from = self.vertex_at(w, idx);
                let (to, _) = self.next_on_wire(w, idx, i);
                arcs.push((from, to, w));
            }
        }
        arcs
    }

    fn vertex_at(&self, w: usize, idx: usize) -> Vertex {
        let seq = &self.on_wire[w - 1];
        if idx == 0 {
            Vertex::Left(w)
        } else if idx == seq.len() + 1 {
            Vertex::Right(w)
        } else {
            Vertex::Crossing(seq[idx - 1])
        }
    }

    /// Whether `G(w₀, i)` has no directed cycle, by Kahn's algorithm.
    pub fn is_acyclic(&self, i: Letter) -> bool {
        let arcs = self.oriented_arcs(i);
        let mut vertices: Vec<Vertex> = arcs.iter().flat_map(|&(a, b, _)| [a, b]).collect();
        vertices.sort();
        vertices.dedup();
        let index = |v: &Vertex| vertices.binary_search(v).expect("listed");
        let mut indegree = vec![0usize; vertices.len()];
        let mut out = vec![Vec::new(); vertices.len()];
        for (a, b, _) in &arcs {
            out[index(a)].push(index(b));
            indegree[index(b)] += 1;
        }
        let mut ready: Vec<usize> = (0..vertices.len()).filter(|&v| indegree[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = ready.pop() {
            seen += 1;
            for &u in &out[v] {
                indegree[u] -= 1;
                if indegree[u] == 0 {
                    ready.push(u);
                }
            }
        }
        seen == vertices.len()
    }

    /// All GP paths of type `i`.
    pub fn gp_paths(&self, i: Letter) -> Result<Vec<GpPath>> {
        self.check_type(i)?;
        Ok(self.search(i, &|_, _| true))
    }

    /// Paths of type `i` whose turns pass `accept(position, contribution)`.
    fn search(&self, i: Letter, accept: &dyn Fn(usize, i64) -> bool) -> Vec<GpPath> {
        let mut found = Vec::new();
        let mut vertices = vec![Vertex::Left(i + 1)];
        let mut wires = Vec::new();
        self.extend(i, i + 1, 0, &mut vertices, &mut wires, accept, &mut found);
        found
    }

    #[allow(clippy::too_many_arguments)]
    fn extend(
        &self,
        i: Letter,
        w: usize,
        idx: usize,
        vertices: &mut Vec<Vertex>,
        wires: &mut Vec<usize>,
        accept: &dyn Fn(usize, i64) -> bool,
        found: &mut Vec<GpPath>,
    ) {
        let (next, to) = self.next_on_wire(w, idx, i);
        vertices.push(next);
        wires.push(w);
        match next {
            Vertex::Left(end) if end == i => {
                found.push(GpPath::from_parts(self, i, vertices.clone(), wires.clone()));
            }
            Vertex::Left(_) | Vertex::Right(_) => {}
            Vertex::Crossing(k) => {
                if !self.is_forbidden(k, w, i) && accept(k, 0) {
                    self.extend(i, w, to, vertices, wires, accept, found);
                }
                let o = self.crossings[k].other(w);
                if accept(k, contribution(w, o)) {
                    let at = self.index_on_wire(o, k);
                    self.extend(i, o, at, vertices, wires, accept, found);
                }
            }
        }
        vertices.pop();
        wires.pop();
    }

    fn check_type(&self, i: Letter) -> Result<()> {
        self.diagram.check_letter(i)
    }

    /// Whether `path` is a GP path of its type: it runs along wires in their
    /// orientation from `l_{i+1}` to `l_i` and passes no forbidden crossing.
    pub fn is_gp_path(&self, path: &GpPath) -> bool {
        let i = path.type_index;
        if self.check_type(i).is_err()
            || path.vertices.first() != Some(&Vertex::Left(i + 1))
            || path.vertices.last() != Some(&Vertex::Left(i))
            || path.wires.len() + 1 != path.vertices.len()
            || path.wires.first() != Some(&(i + 1))
        {
            return false;
        }
        let mut idx = 0;
        for (step, &w) in path.wires.iter().enumerate() {
            let here = path.vertices[step];
            if step > 0 {
                let Vertex::Crossing(k) = here else {
                    return false;
                };
                let h = path.wires[step - 1];
                let c = &self.crossings[k];
                if w != c.upper && w != c.lower || h != c.upper && h != c.lower {
                    return false;
                }
                if w == h && self.is_forbidden(k, h, i) {
                    return false;
                }
                idx = self.index_on_wire(w, k);
            }
            let (next, _) = self.next_on_wire(w, idx, i);
            if next != path.vertices[step + 1] {
                return false;
            }
        }
        true
    }

    /// All `k_π` over all types, deduplicated.
    pub fn k_gp(&self) -> Result<BTreeSet<Vec<i64>>> {
        let mut out = BTreeSet::new();
        for i in 1..=self.rank() {
            out.extend(self.gp_paths(i)?.into_iter().map(|p| p.k));
        }
        Ok(out)
    }

    pub fn zones(&self, i: Letter) -> Result<Zones> {
        self.check_type(i)?;
        let apex = self.crossing_of(i, i + 1).expect("every pair crosses");
        let mut vertices = vec![Vertex::Left(i + 1)];
        let mut wires = Vec::new();
        for &k in self.wire(i + 1) {
            vertices.push(Vertex::Crossing(k));
            wires.push(i + 1);
            if k == apex {
                break;
            }
        }
        for &k in self
            .wire(i)
            .iter()
            .rev()
            .skip_while(|&&k| k != apex)
            .skip(1)
        {
            vertices.push(Vertex::Crossing(k));
            wires.push(i);
        }
        vertices.push(Vertex::Left(i));
        wires.push(i);
        let delta = GpPath::from_parts(self, i, vertices, wires);

        // left of the apex `L_i` runs above `L_{i+1}`, right of it below
        let chambers: Vec<usize> = (0..self.chambers.len())
            .filter(|&c| {
                let label = &self.chambers[c].label;
                label.contains(&i) && !label.contains(&(i + 1))
            })
            .collect();
        let right_ends: BTreeSet<usize> = chambers
            .iter()
            .map(|&c| self.chambers[c].right.expect("bounded by the apex"))
            .collect();
        let mut boundary = BTreeSet::new();
        for &c in &chambers {
            let ch = &self.chambers[c];
            let lo = ch.left.map_or(0, |k| k + 1);
            let hi = ch.right.expect("bounded by the apex");
            boundary.extend(ch.left);
            boundary.insert(hi);
            for k in lo..hi {
                if self.crossings[k].level.abs_diff(ch.level) == 1 {
                    boundary.insert(k);
                }
            }
        }
        Ok(Zones {
            type_index: i,
            delta,
            chambers,
            right_ends,
            boundary,
        })
    }

    /// The antichain of `ar` read off the `+1` turns of `path`; crossings
    /// and AR positions are identified through the word.
    pub fn path_antichain(&self, ar: &ArQuiver, path: &GpPath) -> Result<Antichain> {
        self.check_word(ar)?;
        let members: Vec<usize> = (0..self.len()).filter(|&k| path.k[k] == 1).collect();
        antichains(ar, path.type_index)
            .into_iter()
            .find(|a| a.members == members)
            .ok_or_else(|| {
                Error::Internal(format!(
                    "positive turns {members:?} of a type {} path form no antichain",
                    path.type_index
                ))
            })
    }

    /// The unique GP path whose `+1` turns are exactly the members of `a`.
    pub fn antichain_path(&self, ar: &ArQuiver, a: &Antichain) -> Result<GpPath> {
        self.check_word(ar)?;
        let members: BTreeSet<usize> = a.members.iter().copied().collect();
        let mut paths = self.search(a.type_index, &|k, c| c != 1 || members.contains(&k));
        paths.retain(|p| (0..self.len()).all(|k| (p.k[k] == 1) == members.contains(&k)));
        match paths.len() {
            1 => Ok(paths.pop().expect("one path")),
            m => Err(Error::Internal(format!(
                "{m} GP paths turn positively exactly at {:?}",
                a.members
            ))),
        }
    }

    fn check_word(&self, ar: &ArQuiver) -> Result<()> {
        if ar.word().letters() != self.letters {
            return Err(Error::NotAdapted {
                position: 1 + ar
                    .word()
                    .letters()
                    .iter()
                    .zip(&self.letters)
                    .position(|(a, b)| a != b)
                    .unwrap_or(0),
                letter: self.letters.first().copied().unwrap_or(0),
            });
        }
        Ok(())
    }

    /// Tracks as rows, crossings as nodes, wire segments as edges.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph wiring {\n  rankdir=LR;\n  node [shape=point];\n");
        for w in 1..=self.rank() + 1 {
            let _ = writeln!(s, "  l{w} [shape=plaintext,label=\"l{w}\"];");
            let _ = writeln!(s, "  r{w} [shape=plaintext,label=\"r{w}\"];");
        }
        for c in &self.crossings {
            let _ = writeln!(
                s,
                "  c{} [shape=circle,label=\"{}\",xlabel=\"{}\"];",
                c.position + 1,
                c.name(),
                c.level
            );
        }
        for w in 1..=self.rank() + 1 {
            let m = self.on_wire[w - 1].len();
            let names: Vec<String> = (0..=m + 1)
                .map(|idx| match self.vertex_at(w, idx) {
                    Vertex::Left(x) => format!("l{x}"),
                    Vertex::Right(x) => format!("r{x}"),
                    Vertex::Crossing(k) => format!("c{}", k + 1),
                })
                .collect();
            for pair in names.windows(2) {
                let _ = writeln!(
                    s,
                    "  {} -> {} [label=\"L{w}\",arrowhead=none];",
                    pair[0], pair[1]
                );
            }
        }
        s.push_str("}\n");
        s
    }

    /// `G(w₀, i)` with its orientation.
    pub fn oriented_dot(&self, i: Letter) -> String {
        let mut s = format!("digraph G{i} {{\n  rankdir=LR;\n");
        for (a, b, w) in self.oriented_arcs(i) {
            let _ = writeln!(
                s,
                "  \"{}\" -> \"{}\" [label=\"L{w}\"];",
                a.name(self),
                b.name(self)
            );
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> Value {
        json!({
            "crossings": self.crossings.iter().map(|c| json!({
                "position": c.position + 1,
                "level": c.level,
                "wires": [c.upper, c.lower],
            })).collect::<Vec<_>>(),
            "chambers": self.chambers.iter().map(|ch| json!({
                "level": ch.level,
                "left": ch.left.map(|k| k + 1),
                "right": ch.right.map(|k| k + 1),
                "label": ch.label,
            })).collect::<Vec<_>>(),
        })
    }
}

/// `+1` when leaving on a smaller wire index, `-1` on a larger one.
fn contribution(h: usize, l: usize) -> i64 {
    match h.cmp(&l) {
        std::cmp::Ordering::Greater => 1,
        std::cmp::Ordering::Less => -1,
        std::cmp::Ordering::Equal => 0,
    }
}

/// A path of `G(w₀, i)`: `wires[s]` carries the step from `vertices[s]` to
/// `vertices[s + 1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GpPath {
    pub type_index: Letter,
    pub vertices: Vec<Vertex>,
    pub wires: Vec<usize>,
    pub k: Vec<i64>,
}

impl GpPath {
    fn from_parts(wd: &WiringDiagram, i: Letter, vertices: Vec<Vertex>, wires: Vec<usize>) -> Self {
        let mut k = vec![0; wd.len()];
        for s in 1..wires.len() {
            if let Vertex::Crossing(c) = vertices[s] {
                k[c] = contribution(wires[s - 1], wires[s]);
            }
        }
        Self {
            type_index: i,
            vertices,
            wires,
            k,
        }
    }

    pub fn crossings(&self) -> Vec<usize> {
        self.vertices
            .iter()
            .filter_map(|v| match v {
                Vertex::Crossing(k) => Some(*k),
                _ => None,
            })
            .collect()
    }

    /// `l3 -> v34 -> v13 -> l2`.
    pub fn describe(&self, wd: &WiringDiagram) -> String {
        self.vertices
            .iter()
            .map(|v| v.name(wd))
            .collect::<Vec<_>>()
            .join(" -> ")
    }

    pub fn to_json(&self) -> Value {
        json!({
            "type": self.type_index,
            "crossings": self.crossings().iter().map(|k| k + 1).collect::<Vec<_>>(),
            "k": self.k,
        })
    }
}

/// The limiting path `δ_i`, the chambers `𝒵_i` enclosed by it, their right
/// ends `Z_i` and all crossings on their boundaries `Y_i`.
#[derive(Clone, Debug)]
pub struct Zones {
    pub type_index: Letter,
    pub delta: GpPath,
    /// Indices into [`WiringDiagram::chambers`].
    pub chambers: Vec<usize>,
    pub right_ends: BTreeSet<usize>,
    pub boundary: BTreeSet<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::Quiver;

    fn figure() -> WiringDiagram {
        let d = DynkinDiagram::type_a(3);
        WiringDiagram::new(&d, &ReducedWord::new(&d, vec![1, 3, 2, 1, 3, 2]).unwrap()).unwrap()
    }

    #[test]
    fn crossing_sequence() {
        let wd = figure();
        let names: Vec<String> = wd.crossings().iter().map(|c| c.name()).collect();
        assert_eq!(names, ["v12", "v34", "v14", "v24", "v13", "v23"]);
        let levels: Vec<usize> = wd.crossings().iter().map(|c| c.level).collect();
        assert_eq!(levels, [1, 3, 2, 1, 3, 2]);
        let d = DynkinDiagram::type_a(2);
        let a2 = WiringDiagram::new(&d, &ReducedWord::new(&d, vec![1, 2, 1]).unwrap()).unwrap();
        let names: Vec<String> = a2.crossings().iter().map(|c| c.name()).collect();
        assert_eq!(names, ["v12", "v13", "v23"]);
    }

    #[test]
    fn rejects_type_d() {
        let d = DynkinDiagram::type_d(4);
        let q = Quiver::parse("4>3,3>1,3>2").unwrap();
        assert_eq!(
            WiringDiagram::new(&d, &q.adapted_word()).unwrap_err(),
            Error::NotTypeA
        );
    }

    #[test]
    fn chamber_labels_and_weights() {
        let wd = figure();
        let v14 = wd.crossing_of(1, 4).unwrap();
        assert_eq!(wd.left_chamber(v14).label, [1, 2]);
        assert_eq!(wd.right_chamber(v14).label, [2, 4]);
        let labels: BTreeSet<Vec<usize>> = wd.chambers().iter().map(|c| c.label.clone()).collect();
        assert!(labels.contains(&vec![1, 2, 4]));
        // ν_1 + ν_2 = ω_2
        assert_eq!(wd.lambda_minus(v14), Weight(vec![0, 1, 0]));
    }

    #[test]
    fn lambda_minus_is_a_weyl_image() {
        let wd = figure();
        let d = DynkinDiagram::type_a(3);
        for k in 0..wd.len() {
            let w = &wd.letters()[..k];
            let expected = d
                .act_weight(w, &d.fundamental_weight(wd.letters()[k]))
                .unwrap();
            assert_eq!(wd.lambda_minus(k), expected);
            let w = &wd.letters()[..=k];
            let expected = d
                .act_weight(w, &d.fundamental_weight(wd.letters()[k]))
                .unwrap();
            assert_eq!(wd.lambda_plus(k), expected);
        }
    }

    #[test]
    fn five_paths_of_type_two() {
        let wd = figure();
        let paths = wd.gp_paths(2).unwrap();
        assert_eq!(paths.len(), 5);
        let example = paths
            .iter()
            .find(|p| p.describe(&wd) == "l3 -> v34 -> v13 -> v14 -> v24 -> v12 -> l2")
            .expect("example path");
        assert_eq!(example.k, [0, 0, -1, 1, 1, 0]);
        let ks: BTreeSet<Vec<i64>> = paths.iter().map(|p| p.k.clone()).collect();
        let expected: BTreeSet<Vec<i64>> = [
            vec![-1, -1, 1, 0, 0, 0],
            vec![0, -1, 0, 1, 0, 0],
            vec![-1, 0, 0, 0, 1, 0],
            vec![0, 0, -1, 1, 1, 0],
            vec![0, 0, 0, 0, 0, 1],
        ]
        .into();
        assert_eq!(ks, expected);
        assert!(paths.iter().all(|p| wd.is_gp_path(p)));
    }

    #[test]
    fn a2_cone_normals() {
        let d = DynkinDiagram::type_a(2);
        let wd = WiringDiagram::new(&d, &ReducedWord::new(&d, vec![1, 2, 1]).unwrap()).unwrap();
        let expected: BTreeSet<Vec<i64>> = [vec![1, 0, 0], vec![-1, 1, 0], vec![0, 0, 1]].into();
        assert_eq!(wd.k_gp().unwrap(), expected);
    }

    #[test]
    fn graphs_are_acyclic() {
        let wd = figure();
        assert!((1..=3).all(|i| wd.is_acyclic(i)));
    }

    #[test]
    fn zones_of_type_two() {
        let wd = figure();
        let z = wd.zones(2).unwrap();
        assert_eq!(
            z.delta.describe(&wd),
            "l3 -> v34 -> v13 -> v23 -> v24 -> v12 -> l2"
        );
        assert!(wd.is_gp_path(&z.delta));
        assert_eq!(z.right_ends, BTreeSet::from([2, 3, 4, 5]));
    }

    #[test]
    fn a_broken_path_is_rejected() {
        let wd = figure();
        let mut p = wd.gp_paths(2).unwrap().remove(0);
        p.vertices.swap(1, 2);
        assert!(!wd.is_gp_path(&p));
    }

    #[test]
    fn antichains_and_paths_correspond() {
        let q = Quiver::parse("2>1,2>3").unwrap();
        let ar = ArQuiver::from_quiver(&q);
        let wd = WiringDiagram::new(q.diagram(), ar.word()).unwrap();
        let example = wd
            .gp_paths(2)
            .unwrap()
            .into_iter()
            .find(|p| p.k == [0, 0, -1, 1, 1, 0])
            .unwrap();
        // the turns at v14 and v24
        assert_eq!(wd.path_antichain(&ar, &example).unwrap().members, [3, 4]);
        for i in 1..=3 {
            for a in antichains(&ar, i) {
                let p = wd.antichain_path(&ar, &a).unwrap();
                assert_eq!(p.k, a.move_vector(&ar));
                assert_eq!(wd.path_antichain(&ar, &p).unwrap(), a);
            }
        }
    }
}
