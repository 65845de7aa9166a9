//! The Auslander-Reiten quiver of a quiver of type A or D, read off an adapted
//! reduced word: position `k` is the indecomposable with dimension vector
//! `β_k`, sitting on level `i_k`.

use std::fmt::Write as _;

use crate::cartan::{Letter, Root};
use crate::error::{Error, Result};
use crate::quiver::{Quiver, ReducedWord};

#[derive(Clone, Debug)]
pub struct ArQuiver {
    quiver: Quiver,
    word: ReducedWord,
    arrows: Vec<(usize, usize)>,
    successors: Vec<Vec<usize>>,
    predecessors: Vec<Vec<usize>>,
    tau: Vec<Option<usize>>,
    // reach[a][b] iff there is a path a ⇝ b (reflexive)
    reach: Vec<Vec<bool>>,
}

impl ArQuiver {
    pub fn build(quiver: &Quiver, word: &ReducedWord) -> Result<Self> {
        quiver.check_adapted(word.letters())?;
        let d = quiver.diagram();
        let letters = word.letters();
        let n = letters.len();

        let mut arrows = Vec::new();
        for k in 0..n {
            let a = letters[k];
            let mut blocked = Vec::new();
            for (k2, &b) in letters.iter().enumerate().skip(k + 1) {
                if b == a {
                    break;
                }
                if d.adjacent(a, b) && !blocked.contains(&b) {
                    arrows.push((k, k2));
                }
                blocked.push(b);
            }
        }

        let mut successors = vec![Vec::new(); n];
        let mut predecessors = vec![Vec::new(); n];
        for &(a, b) in &arrows {
            successors[a].push(b);
            predecessors[b].push(a);
        }
        let tau = (0..n)
            .map(|k| (0..k).rev().find(|&j| letters[j] == letters[k]))
            .collect();

        let mut reach = vec![vec![false; n]; n];
        for k in (0..n).rev() {
            reach[k][k] = true;
            for &s in &successors[k] {
                let (head, tail) = reach.split_at_mut(s);
                for (x, &y) in head[k].iter_mut().zip(&tail[0]) {
                    *x |= y;
                }
            }
        }

        Ok(Self {
            quiver: quiver.clone(),
            word: word.clone(),
            arrows,
            successors,
            predecessors,
            tau,
            reach,
        })
    }

    /// Builds with the canonical adapted word of `quiver`.
    pub fn from_quiver(quiver: &Quiver) -> Self {
        Self::build(quiver, &quiver.adapted_word()).expect("canonical word is adapted")
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn word(&self) -> &ReducedWord {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn level(&self, k: usize) -> Letter {
        self.word.letter(k)
    }

    pub fn root(&self, k: usize) -> &Root {
        &self.word.roots()[k]
    }

    pub fn roots(&self) -> &[Root] {
        self.word.roots()
    }

    /// Irreducible maps `k → k'`, always with `k < k'`.
    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn successors(&self, k: usize) -> &[usize] {
        &self.successors[k]
    }

    pub fn predecessors(&self, k: usize) -> &[usize] {
        &self.predecessors[k]
    }

    /// `k⁻`: the previous position with the same letter. Absent exactly on
    /// projectives.
    pub fn tau(&self, k: usize) -> Option<usize> {
        self.tau[k]
    }

    pub fn tau_inverse(&self, k: usize) -> Option<usize> {
        let letter = self.level(k);
        (k + 1..self.len()).find(|&j| self.level(j) == letter)
    }

    /// `[β_a] ≼_Q [β_b]`: a path from `a` to `b` exists.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.reach[a][b]
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.reach[a][b] || self.reach[b][a]
    }

    pub fn position_of(&self, root: &Root) -> Option<usize> {
        self.word.position_of_root(root)
    }

    pub fn position_of_simple(&self, i: Letter) -> usize {
        self.position_of(&self.quiver.diagram().simple_root(i))
            .expect("every simple root occurs")
    }

    pub fn positions_on_level(&self, i: Letter) -> Vec<usize> {
        (0..self.len()).filter(|&k| self.level(k) == i).collect()
    }

    /// `H_i(Q)`: positions whose root involves `α_i`.
    pub fn hammock(&self, i: Letter) -> Vec<usize> {
        (0..self.len())
            .filter(|&k| self.root(k).coeff(i) > 0)
            .collect()
    }

    /// `P_i(Q)`: positions `X` with `Hom(X, S_i) ≠ 0`, i.e. `X ≼ [α_i]` and
    /// `(β_X, α_i)_R > 0`.
    pub fn p_set(&self, i: Letter) -> Vec<usize> {
        let simple = self.position_of_simple(i);
        let ringel = self.quiver.ringel();
        let alpha = self.quiver.diagram().simple_root(i);
        (0..self.len())
            .filter(|&k| self.leq(k, simple) && ringel.form(self.root(k), &alpha) > 0)
            .collect()
    }

    /// `dim Hom(X_a, X_b)` for `a ≼ b`, which the Ringel form computes since
    /// `Ext¹` vanishes on such pairs; 0 for incomparable or reversed pairs.
    pub fn hom_dim(&self, a: usize, b: usize) -> i64 {
        if self.leq(a, b) {
            self.quiver.ringel().form(self.root(a), self.root(b))
        } else {
            0
        }
    }

    /// Meshes `k⁻ → m → k` whose dimension vectors are not additive, as
    /// `(k, expected, got)`.
    pub fn mesh_violations(&self) -> Vec<(usize, Root, Root)> {
        let mut bad = Vec::new();
        for k in 0..self.len() {
            let Some(prev) = self.tau(k) else { continue };
            let rank = self.quiver.rank();
            let mut middle = vec![0i64; rank];
            for &m in &self.predecessors[k] {
                if self.successors[prev].contains(&m) {
                    for (x, y) in middle.iter_mut().zip(self.root(m).coords()) {
                        *x += y;
                    }
                }
            }
            let ends: Vec<i64> = self
                .root(k)
                .coords()
                .iter()
                .zip(self.root(prev).coords())
                .map(|(a, b)| a + b)
                .collect();
            if ends != middle {
                bad.push((k, Root(ends), Root(middle)));
            }
        }
        bad
    }

    /// The rectangular grid structure of `H_i(Q)` in type A.
    pub fn grid_a(&self, i: Letter) -> Result<HammockGrid> {
        let (left, right) = self.quiver.segmented(i)?;
        let n = self.quiver.rank();
        let mut cells = Vec::with_capacity(left.len() * right.len());
        for (k, &jk) in left.iter().enumerate() {
            for (l, &jl) in right.iter().enumerate() {
                let mut v = vec![0i64; n];
                v[jk - 1..jl - 1].iter_mut().for_each(|x| *x = 1);
                let root = Root(v);
                let position = self.position_of(&root).ok_or_else(|| {
                    Error::Internal(format!("grid root {root} missing from the word"))
                })?;
                cells.push(GridCell {
                    k: k + 1,
                    l: i + l + 1,
                    root,
                    position,
                });
            }
        }
        Ok(HammockGrid {
            i,
            left,
            right,
            cells,
        })
    }

    /// Graphviz rendering: one rank per level, nodes `v<k>` (1-based).
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph ar {\n  rankdir=LR;\n");
        for i in 1..=self.quiver.rank() {
            let nodes: Vec<String> = self
                .positions_on_level(i)
                .iter()
                .map(|k| format!("v{}", k + 1))
                .collect();
            let _ = writeln!(out, "  {{ rank=same; {} }}", nodes.join("; "));
        }
        for k in 0..self.len() {
            let _ = writeln!(
                out,
                "  v{} [label=\"{}\"];",
                k + 1,
                self.root(k).coord_string()
            );
        }
        for &(a, b) in &self.arrows {
            let _ = writeln!(out, "  v{} -> v{};", a + 1, b + 1);
        }
        for k in 0..self.len() {
            if let Some(prev) = self.tau(k) {
                let _ = writeln!(out, "  v{} -> v{} [style=dashed];", k + 1, prev + 1);
            }
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridCell {
    /// Row index `1..=i`.
    pub k: usize,
    /// Column index `i+1..=n+1`.
    pub l: usize,
    pub root: Root,
    pub position: usize,
}

/// `H_i(Q) ≅ [i] × [n+1-i]` in type A; the cell `(k, l)` holds
/// `α_{j_k} + .. + α_{j_l - 1}` for the `i`-segmented Coxeter cycle `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HammockGrid {
    pub i: Letter,
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    pub cells: Vec<GridCell>,
}

impl HammockGrid {
    pub fn cell_of(&self, position: usize) -> Option<&GridCell> {
        self.cells.iter().find(|c| c.position == position)
    }

    /// `(k1, l1) ≤ (k2, l2)` iff `k1 ≥ k2` and `l1 ≥ l2`.
    pub fn leq(&self, a: usize, b: usize) -> Option<bool> {
        let (x, y) = (self.cell_of(a)?, self.cell_of(b)?);
        Some(x.k >= y.k && x.l >= y.l)
    }

    /// The projective cover of `S_i`, at `(i, n+1)`.
    pub fn min_position(&self) -> usize {
        let n1 = self.i + self.right.len();
        self.cells
            .iter()
            .find(|c| c.k == self.i && c.l == n1)
            .expect("grid corner")
            .position
    }

    /// The injective envelope of `S_i`, at `(1, i+1)`.
    pub fn max_position(&self) -> usize {
        self.cells
            .iter()
            .find(|c| c.k == 1 && c.l == self.i + 1)
            .expect("grid corner")
            .position
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::DynkinDiagram;

    fn a3() -> ArQuiver {
        ArQuiver::from_quiver(&Quiver::parse("2>1,2>3").unwrap())
    }

    fn d4() -> ArQuiver {
        ArQuiver::from_quiver(&Quiver::parse("4>3,3>1,3>2").unwrap())
    }

    fn r(v: &[i64]) -> Root {
        Root(v.to_vec())
    }

    #[test]
    fn a3_arrows_and_tau() {
        let ar = a3();
        assert_eq!(
            ar.arrows(),
            &[(0, 2), (1, 2), (2, 3), (2, 4), (3, 5), (4, 5)]
        );
        assert_eq!(ar.tau(5), Some(2));
        assert_eq!(ar.tau(0), None);
        assert_eq!(ar.tau(2), None);
        assert_eq!(ar.tau_inverse(2), Some(5));
    }

    #[test]
    fn d4_tau_of_simple_three() {
        let ar = d4();
        assert_eq!(ar.root(9), &r(&[0, 0, 1, 0]));
        // [α_3] sits on level 4, next to [α_1+α_2+α_3+α_4]
        assert_eq!(ar.level(9), 4);
        assert_eq!(ar.tau(9), Some(5));
        assert_eq!(ar.root(5), &r(&[1, 1, 1, 1]));
        assert_eq!(ar.tau(6), Some(2));
    }

    #[test]
    fn a3_order() {
        let ar = a3();
        assert!(ar.leq(2, 5));
        assert!(!ar.comparable(0, 1));
        assert!((0..6).all(|k| ar.leq(k, k)));
        assert!(!ar.leq(5, 2));
    }

    #[test]
    fn p_sets() {
        let ar = a3();
        assert_eq!(ar.p_set(2), vec![2, 3, 4, 5]);
        let d = d4();
        assert_eq!(d.p_set(1), vec![0]);
        let p3: Vec<String> = d.p_set(3).iter().map(|&k| d.root(k).label()).collect();
        assert_eq!(p3, ["123", "23", "13", "123\u{305}4", "3"]);
        let p4: Vec<String> = d.p_set(4).iter().map(|&k| d.root(k).label()).collect();
        assert_eq!(p4, ["1234", "123\u{305}4", "134", "234", "34", "4"]);
    }

    #[test]
    fn hammock_is_support() {
        let ar = a3();
        assert_eq!(ar.hammock(2), vec![2, 3, 4, 5]);
        assert_eq!(ar.hammock(1), vec![0, 2, 4]);
    }

    #[test]
    fn a4_grid_cell() {
        let ar = ArQuiver::from_quiver(&Quiver::parse("2>1,2>3,4>3").unwrap());
        let grid = ar.grid_a(3).unwrap();
        let cell = grid.cells.iter().find(|c| c.k == 1 && c.l == 4).unwrap();
        assert_eq!(cell.root, r(&[0, 1, 1, 1]));
    }

    #[test]
    fn a3_grid_corners() {
        let ar = a3();
        let grid = ar.grid_a(2).unwrap();
        assert_eq!(ar.root(grid.min_position()), &r(&[1, 1, 1]));
        assert_eq!(ar.root(grid.max_position()), &r(&[0, 1, 0]));
        assert!(matches!(d4().grid_a(1), Err(Error::NotTypeA)));
    }

    #[test]
    fn meshes_are_additive() {
        let mut diagrams: Vec<_> = (1..=6).map(DynkinDiagram::type_a).collect();
        diagrams.extend((4..=6).map(DynkinDiagram::type_d));
        for d in diagrams {
            for q in Quiver::all_orientations(&d) {
                assert!(
                    ArQuiver::from_quiver(&q).mesh_violations().is_empty(),
                    "{q}"
                );
            }
        }
    }

    #[test]
    fn rejects_non_adapted_words() {
        let q = Quiver::parse("2>1,2>3").unwrap();
        let w = ReducedWord::new(q.diagram(), vec![2, 1, 3, 2, 1, 3]).unwrap();
        assert!(matches!(
            ArQuiver::build(&q, &w),
            Err(Error::NotAdapted {
                position: 1,
                letter: 2
            })
        ));
    }

    #[test]
    fn dot_output_names_nodes_by_position() {
        let dot = a3().to_dot();
        assert!(dot.contains("v1 -> v3;"));
        assert!(dot.contains("v6 [label=\"0,1,0\"];"));
    }
}
