//! Reineke's description of the crystal operators `ẽ_i` in the Lusztig
//! parametrization attached to an adapted word: antichains of `P_i(Q)`, the
//! moves they define, and the `F_A` functions that select the move.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::arquiver::ArQuiver;
use crate::cartan::{Letter, Root};
use crate::error::{Error, Result};

/// A nonempty antichain of `(P_i(Q), ≼_Q)` with its order ideal `J(A)` and
/// `C_A`, the minimal elements of `P_i(Q) ∖ J(A)`. All position lists are
/// sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Antichain {
    pub type_index: Letter,
    pub members: Vec<usize>,
    pub ideal: Vec<usize>,
    pub cover: Vec<usize>,
}

impl Antichain {
    /// `l_A = t_{V_A} - t_{U_A}`: +1 on members, -1 on `τ` of each element of
    /// `C_A` (projectives in `C_A` contribute nothing).
    pub fn move_vector(&self, ar: &ArQuiver) -> Vec<i64> {
        let mut v = vec![0; ar.len()];
        for &m in &self.members {
            v[m] += 1;
        }
        for &c in &self.cover {
            if let Some(prev) = ar.tau(c) {
                v[prev] -= 1;
            }
        }
        v
    }

    /// `F_A(t) = Σ_{X ∈ J(A)} (t_X - t_{τX})`, the second term being 0 on
    /// projectives.
    pub fn f_value(&self, ar: &ArQuiver, t: &[i64]) -> i64 {
        self.ideal
            .iter()
            .map(|&x| t[x] - ar.tau(x).map_or(0, |p| t[p]))
            .sum()
    }

    /// Parameter vector of `U_A = ⊕_{M ∈ C_A} τM`.
    pub fn u_vector(&self, ar: &ArQuiver) -> Vec<i64> {
        let mut v = vec![0; ar.len()];
        for &c in &self.cover {
            if let Some(prev) = ar.tau(c) {
                v[prev] += 1;
            }
        }
        v
    }
}

/// All antichains of `P_i(Q)`, ordered by the size of their ideal and then by
/// their members.
pub fn antichains(ar: &ArQuiver, i: Letter) -> Vec<Antichain> {
    let poset = ar.p_set(i);
    let mut found = Vec::new();
    let mut current = Vec::new();
    extend_antichains(ar, &poset, 0, &mut current, &mut found);

    let mut result: Vec<Antichain> = found
        .into_iter()
        .map(|members| {
            let ideal: Vec<usize> = poset
                .iter()
                .copied()
                .filter(|&x| members.iter().any(|&a| ar.leq(x, a)))
                .collect();
            let rest: Vec<usize> = poset
                .iter()
                .copied()
                .filter(|x| !ideal.contains(x))
                .collect();
            let cover = rest
                .iter()
                .copied()
                .filter(|&x| !rest.iter().any(|&y| y != x && ar.leq(y, x)))
                .collect();
            Antichain {
                type_index: i,
                members,
                ideal,
                cover,
            }
        })
        .collect();
    result.sort_by(|a, b| (a.ideal.len(), &a.members).cmp(&(b.ideal.len(), &b.members)));
    result
}

fn extend_antichains(
    ar: &ArQuiver,
    poset: &[usize],
    from: usize,
    current: &mut Vec<usize>,
    found: &mut Vec<Vec<usize>>,
) {
    for idx in from..poset.len() {
        let x = poset[idx];
        if current.iter().all(|&y| !ar.comparable(x, y)) {
            current.push(x);
            found.push(current.clone());
            extend_antichains(ar, poset, idx + 1, current, found);
            current.pop();
        }
    }
}

/// A Lusztig move together with the antichain producing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypedMove {
    pub type_index: Letter,
    pub antichain: Vec<usize>,
    pub vector: Vec<i64>,
}

impl TypedMove {
    pub fn to_json(&self) -> Value {
        json!({
            "type": self.type_index,
            "antichain": self.antichain.iter().map(|k| k + 1).collect::<Vec<_>>(),
            "vector": self.vector,
        })
    }
}

/// The crystal `B(∞)` in the Lusztig parametrization of an adapted word, with
/// the antichains of every type precomputed.
#[derive(Clone, Debug)]
pub struct LusztigCrystal {
    ar: ArQuiver,
    antichains: Vec<Vec<Antichain>>,
}

impl LusztigCrystal {
    pub fn new(ar: &ArQuiver) -> Self {
        let antichains = (1..=ar.quiver().rank())
            .map(|i| antichains(ar, i))
            .collect();
        Self {
            ar: ar.clone(),
            antichains,
        }
    }

    pub fn ar(&self) -> &ArQuiver {
        &self.ar
    }

    pub fn rank(&self) -> usize {
        self.antichains.len()
    }

    pub fn antichains(&self, i: Letter) -> &[Antichain] {
        &self.antichains[i - 1]
    }

    /// Index into [`antichains`](Self::antichains) of `A_max`: among the
    /// maximizers of `F_A(t)` the one whose ideal contains all the others.
    pub fn maximal_antichain(&self, i: Letter, t: &[i64]) -> Result<usize> {
        self.ar.quiver().diagram().check_letter(i)?;
        if t.len() != self.ar.len() {
            return Err(Error::DimensionMismatch {
                expected: self.ar.len(),
                got: t.len(),
            });
        }
        let family = self.antichains(i);
        let values: Vec<i64> = family.iter().map(|a| a.f_value(&self.ar, t)).collect();
        let zeta = *values.iter().max().expect("P_i(Q) contains [α_i]");
        let maximizers: Vec<usize> = (0..family.len()).filter(|&a| values[a] == zeta).collect();
        let union: BTreeSet<usize> = maximizers
            .iter()
            .flat_map(|&a| family[a].ideal.iter().copied())
            .collect();
        maximizers
            .into_iter()
            .find(|&a| family[a].ideal.len() == union.len())
            .ok_or(Error::AmbiguousMaximum { type_index: i })
    }

    /// `ẽ_i t = t + l_{A_max}`.
    pub fn e(&self, i: Letter, t: &[i64]) -> Result<Vec<i64>> {
        let a = self.maximal_antichain(i, t)?;
        let step = self.antichains(i)[a].move_vector(&self.ar);
        let out: Vec<i64> = t.iter().zip(&step).map(|(x, y)| x + y).collect();
        if out.iter().any(|&x| x < 0) {
            return Err(Error::Internal(format!(
                "ẽ_{i} left the positive orthant at {t:?}"
            )));
        }
        Ok(out)
    }

    /// `Σ t_k β_k`.
    pub fn weight(&self, t: &[i64]) -> Root {
        let mut v = vec![0; self.rank()];
        for (k, &tk) in t.iter().enumerate() {
            for (x, y) in v.iter_mut().zip(self.ar.root(k).coords()) {
                *x += tk * y;
            }
        }
        Root(v)
    }

    /// Moves of every type in antichain order.
    pub fn moves_typed(&self) -> Vec<TypedMove> {
        self.antichains
            .iter()
            .flatten()
            .map(|a| TypedMove {
                type_index: a.type_index,
                antichain: a.members.clone(),
                vector: a.move_vector(&self.ar),
            })
            .collect()
    }

    /// `L_{w_0}`: the set of all moves, forgetting types.
    pub fn moves(&self) -> BTreeSet<Vec<i64>> {
        self.moves_typed().into_iter().map(|m| m.vector).collect()
    }

    pub fn crystal(&self, depth: usize) -> Result<CrystalGraph> {
        CrystalGraph::generate(self.rank(), self.ar.len(), depth, |i, t| self.e(i, t))
    }

    /// A tab-separated table: type, antichain, `U_A`, `V_A`, move.
    pub fn moves_tsv(&self) -> String {
        let label = |ks: &[usize]| -> String {
            if ks.is_empty() {
                "0".into()
            } else {
                ks.iter()
                    .map(|&k| self.ar.root(k).label())
                    .collect::<Vec<_>>()
                    .join("+")
            }
        };
        let mut out = String::from("type\tantichain\tU_A\tV_A\tmove\n");
        for a in self.antichains.iter().flatten() {
            let u: Vec<usize> = a.cover.iter().filter_map(|&c| self.ar.tau(c)).collect();
            let v = a.move_vector(&self.ar);
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{}\t({})",
                a.type_index,
                a.members
                    .iter()
                    .map(|&k| self.ar.root(k).label())
                    .collect::<Vec<_>>()
                    .join(","),
                label(&u),
                label(&a.members),
                crate::cartan::join_coords(&v)
            );
        }
        out
    }
}

/// The part of a crystal graph reachable from the zero vector within a given
/// number of raising steps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrystalGraph {
    pub vertices: Vec<Vec<i64>>,
    pub depths: Vec<usize>,
    /// `(v, i, w)` with `ẽ_i v = w`; present for every vertex below the
    /// maximal depth.
    pub edges: Vec<(usize, Letter, usize)>,
}

impl CrystalGraph {
    /// Breadth-first closure of `0` under `op(i, ·)`, `i = 1..=rank`.
    pub fn generate<F>(rank: usize, len: usize, depth: usize, op: F) -> Result<Self>
    where
        F: Fn(Letter, &[i64]) -> Result<Vec<i64>> + Sync,
    {
        let mut graph = CrystalGraph {
            vertices: vec![vec![0; len]],
            depths: vec![0],
            edges: Vec::new(),
        };
        let mut index: HashMap<Vec<i64>, usize> = HashMap::from([(vec![0; len], 0)]);
        let mut frontier = vec![0usize];
        for d in 0..depth {
            let images: Vec<Vec<Vec<i64>>> = frontier
                .par_iter()
                .map(|&v| {
                    (1..=rank)
                        .map(|i| op(i, &graph.vertices[v]))
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            let mut next = Vec::new();
            for (&v, row) in frontier.iter().zip(images) {
                for (i, w) in (1..=rank).zip(row) {
                    let target = match index.get(&w) {
                        Some(&t) => t,
                        None => {
                            let t = graph.vertices.len();
                            index.insert(w.clone(), t);
                            graph.vertices.push(w);
                            graph.depths.push(d + 1);
                            next.push(t);
                            t
                        }
                    };
                    graph.edges.push((v, i, target));
                }
            }
            frontier = next;
        }
        Ok(graph)
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn index_of(&self, v: &[i64]) -> Option<usize> {
        self.vertices.iter().position(|w| w == v)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "vertices": self.vertices,
            "edges": self.edges.iter().map(|&(v, i, w)| json!([v, i, w])).collect::<Vec<_>>(),
        })
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from("source\ttype\ttarget\n");
        for &(v, i, w) in &self.edges {
            let _ = writeln!(
                out,
                "({})\t{}\t({})",
                crate::cartan::join_coords(&self.vertices[v]),
                i,
                crate::cartan::join_coords(&self.vertices[w])
            );
        }
        out
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph crystal {\n");
        for (k, v) in self.vertices.iter().enumerate() {
            let _ = writeln!(out, "  n{k} [label=\"{}\"];", crate::cartan::join_coords(v));
        }
        for &(v, i, w) in &self.edges {
            let _ = writeln!(out, "  n{v} -> n{w} [label=\"{i}\"];");
        }
        out.push_str("}\n");
        out
    }
}
