//! Root systems, weights and Weyl group actions for the simply-laced types
//! `A_n` and `D_n`.
//!
//! Roots are stored in the basis of simple roots, weights in the basis of
//! fundamental weights. The two are related by the Cartan matrix `C`: the
//! `ω`-coordinate `i` of a root `β` is `Σ_j c_ij β_j`.
//!
//! Vertex labels (letters) are 1-based everywhere in the public API, while
//! coordinate vectors are ordinary 0-based `Vec`s: coordinate `i - 1` holds
//! the coefficient of `α_i` (or `ω_i`).

use std::cmp::Ordering;
use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// A vertex of the Dynkin diagram, numbered from 1.
pub type Letter = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum DynkinType {
    A,
    D,
}

/// A simply-laced Dynkin diagram of type `A_n` or `D_n`.
///
/// Type `A` diagrams must be labelled along the path `1 - 2 - .. - n`; the
/// wiring diagram and Coxeter cycle constructions depend on that labelling.
/// Type `D` diagrams may carry any labelling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DynkinDiagram {
    rank: usize,
    edges: Vec<(Letter, Letter)>,
    kind: DynkinType,
    cartan: Vec<Vec<i64>>,
}

impl DynkinDiagram {
    pub fn new(rank: usize, edges: &[(Letter, Letter)]) -> Result<Self> {
        if rank == 0 {
            return Err(Error::UnsupportedDiagram("rank must be positive".into()));
        }
        let mut canonical = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            for v in [a, b] {
                if v == 0 || v > rank {
                    return Err(Error::LetterOutOfRange { letter: v, rank });
                }
            }
            if a == b {
                return Err(Error::UnsupportedDiagram(format!("loop at vertex {a}")));
            }
            canonical.push((a.min(b), a.max(b)));
        }
        canonical.sort_unstable();
        let before = canonical.len();
        canonical.dedup();
        if canonical.len() != before {
            return Err(Error::UnsupportedDiagram("multiple edges".into()));
        }
        if canonical.len() + 1 != rank {
            return Err(Error::NotATree(format!(
                "{} edges for {} vertices",
                canonical.len(),
                rank
            )));
        }

        let mut adjacency = vec![Vec::new(); rank + 1];
        for &(a, b) in &canonical {
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        let mut seen = vec![false; rank + 1];
        let mut stack = vec![1];
        seen[1] = true;
        while let Some(v) = stack.pop() {
            for &w in &adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        if let Some(v) = (1..=rank).find(|&v| !seen[v]) {
            return Err(Error::NotATree(format!("vertex {v} is disconnected")));
        }

        let branch_points: Vec<Letter> = (1..=rank).filter(|&v| adjacency[v].len() >= 3).collect();
        let kind = match branch_points.as_slice() {
            [] => {
                let standard = canonical
                    .iter()
                    .enumerate()
                    .all(|(k, &e)| e == (k + 1, k + 2));
                if !standard {
                    return Err(Error::UnsupportedDiagram(
                        "type A diagrams must be labelled along the path 1-2-..-n".into(),
                    ));
                }
                DynkinType::A
            }
            [centre] => {
                if adjacency[*centre].len() > 3 {
                    return Err(Error::UnsupportedDiagram(format!(
                        "vertex {centre} has degree {}",
                        adjacency[*centre].len()
                    )));
                }
                let mut lengths: Vec<usize> = adjacency[*centre]
                    .iter()
                    .map(|&start| branch_length(&adjacency, *centre, start))
                    .collect();
                lengths.sort_unstable();
                if lengths[0] != 1 || lengths[1] != 1 {
                    return Err(Error::UnsupportedDiagram(format!(
                        "branch lengths {lengths:?} describe an exceptional type"
                    )));
                }
                DynkinType::D
            }
            _ => {
                return Err(Error::UnsupportedDiagram(
                    "more than one branch point".into(),
                ))
            }
        };

        let mut cartan = vec![vec![0i64; rank]; rank];
        for (i, row) in cartan.iter_mut().enumerate() {
            row[i] = 2;
        }
        for &(a, b) in &canonical {
            cartan[a - 1][b - 1] = -1;
            cartan[b - 1][a - 1] = -1;
        }
        Ok(Self {
            rank,
            edges: canonical,
            kind,
            cartan,
        })
    }

    /// `A_n` labelled along the path.
    pub fn type_a(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        Self::new(n, &edges).expect("type A diagram")
    }

    /// `D_n` (`n >= 4`) in Bourbaki labelling: a path `1 - .. - (n-2)` with
    /// `n - 1` and `n` both attached to `n - 2`.
    pub fn type_d(n: usize) -> Self {
        assert!(n >= 4, "D_n needs n >= 4");
        let mut edges: Vec<_> = (1..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((n - 2, n));
        Self::new(n, &edges).expect("type D diagram")
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn edges(&self) -> &[(Letter, Letter)] {
        &self.edges
    }

    pub fn kind(&self) -> DynkinType {
        self.kind
    }

    pub fn is_type_a(&self) -> bool {
        self.kind == DynkinType::A
    }

    /// Short name such as `A3` or `D4`.
    pub fn name(&self) -> String {
        match self.kind {
            DynkinType::A => format!("A{}", self.rank),
            DynkinType::D => format!("D{}", self.rank),
        }
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Cartan entry `c_ij` for 1-based letters.
    pub fn cartan(&self, i: Letter, j: Letter) -> i64 {
        self.cartan[i - 1][j - 1]
    }

    pub fn adjacent(&self, i: Letter, j: Letter) -> bool {
        i != j && self.cartan(i, j) == -1
    }

    pub fn neighbours(&self, i: Letter) -> impl Iterator<Item = Letter> + '_ {
        (1..=self.rank).filter(move |&j| self.adjacent(i, j))
    }

    pub fn check_letter(&self, letter: Letter) -> Result<()> {
        if letter == 0 || letter > self.rank {
            Err(Error::LetterOutOfRange {
                letter,
                rank: self.rank,
            })
        } else {
            Ok(())
        }
    }

    /// `|Φ⁺|`, the length of the longest Weyl group element.
    pub fn num_positive_roots(&self) -> usize {
        match self.kind {
            DynkinType::A => self.rank * (self.rank + 1) / 2,
            DynkinType::D => self.rank * (self.rank - 1),
        }
    }

    pub fn simple_root(&self, i: Letter) -> Root {
        let mut v = vec![0; self.rank];
        v[i - 1] = 1;
        Root(v)
    }

    pub fn fundamental_weight(&self, i: Letter) -> Weight {
        let mut v = vec![0; self.rank];
        v[i - 1] = 1;
        Weight(v)
    }

    /// The Cartan scalar product of two roots.
    pub fn pairing(&self, a: &Root, b: &Root) -> i64 {
        let mut total = 0;
        for (i, &x) in a.0.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.0.iter().enumerate() {
                total += x * self.cartan[i][j] * y;
            }
        }
        total
    }

    /// Expresses a root in the fundamental-weight basis.
    pub fn root_to_weight(&self, root: &Root) -> Weight {
        Weight(
            (0..self.rank)
                .map(|i| (0..self.rank).map(|j| self.cartan[i][j] * root.0[j]).sum())
                .collect(),
        )
    }

    pub fn reflect_root(&self, i: Letter, root: &Root) -> Root {
        let p: i64 = (0..self.rank)
            .map(|j| root.0[j] * self.cartan[j][i - 1])
            .sum();
        let mut v = root.0.clone();
        v[i - 1] -= p;
        Root(v)
    }

    /// `s_i(λ) = λ - λ_i α_i`.
    pub fn reflect_weight(&self, i: Letter, weight: &Weight) -> Weight {
        let c = weight.0[i - 1];
        Weight(
            weight
                .0
                .iter()
                .enumerate()
                .map(|(j, &x)| x - c * self.cartan[i - 1][j])
                .collect(),
        )
    }

    /// Applies `s_{w_1} s_{w_2} .. s_{w_m}` to a root. The last letter acts
    /// first, so `act_root(&[1, 2], α_1) = s_1 s_2 α_1`.
    pub fn act_root(&self, word: &[Letter], root: &Root) -> Result<Root> {
        self.check_dim(root.0.len())?;
        let mut v = root.clone();
        for &letter in word.iter().rev() {
            self.check_letter(letter)?;
            v = self.reflect_root(letter, &v);
        }
        Ok(v)
    }

    /// Weight counterpart of [`act_root`](Self::act_root), same letter order.
    pub fn act_weight(&self, word: &[Letter], weight: &Weight) -> Result<Weight> {
        self.check_dim(weight.0.len())?;
        let mut v = weight.clone();
        for &letter in word.iter().rev() {
            self.check_letter(letter)?;
            v = self.reflect_weight(letter, &v);
        }
        Ok(v)
    }

    fn check_dim(&self, got: usize) -> Result<()> {
        if got == self.rank {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.rank,
                got,
            })
        }
    }

    /// All positive roots, ordered by height and then with `α_1` before `α_2`
    /// (coordinate vectors compared in decreasing lexicographic order).
    pub fn positive_roots(&self) -> Vec<Root> {
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut queue = VecDeque::new();
        for i in 1..=self.rank {
            let a = self.simple_root(i);
            seen.insert(a.0.clone());
            queue.push_back(a);
        }
        while let Some(beta) = queue.pop_front() {
            for i in 1..=self.rank {
                let gamma = self.reflect_root(i, &beta);
                if gamma.is_positive() && seen.insert(gamma.0.clone()) {
                    queue.push_back(gamma);
                }
            }
        }
        let mut roots: Vec<Root> = seen.into_iter().map(Root).collect();
        roots.sort_by(Root::canonical_cmp);
        roots
    }

    /// A reduced word of `w_0`, built by greedily appending the smallest
    /// letter that lengthens the current element.
    pub fn longest_word(&self) -> Vec<Letter> {
        let mut prefix = PrefixElement::identity(self);
        let mut word = Vec::new();
        while let Some(i) = (1..=self.rank).find(|&i| prefix.image_of_simple(i).is_positive()) {
            prefix.push(self, i);
            word.push(i);
        }
        debug_assert_eq!(word.len(), self.num_positive_roots());
        word
    }

    /// The reflection ordering `β_k = s_{i_1} .. s_{i_{k-1}} (α_{i_k})` of a
    /// word, failing unless the word is a reduced expression of `w_0`.
    pub fn reflection_ordering(&self, word: &[Letter]) -> Result<Vec<Root>> {
        let expected = self.num_positive_roots();
        if word.len() != expected {
            return Err(Error::NotReducedW0(format!(
                "length {} but w0 has length {}",
                word.len(),
                expected
            )));
        }
        let mut prefix = PrefixElement::identity(self);
        let mut seen = BTreeSet::new();
        let mut betas = Vec::with_capacity(word.len());
        for (k, &letter) in word.iter().enumerate() {
            self.check_letter(letter)?;
            let beta = prefix.image_of_simple(letter);
            if !beta.is_positive() {
                return Err(Error::NotReducedW0(format!(
                    "root at position {} is negative",
                    k + 1
                )));
            }
            if !seen.insert(beta.0.clone()) {
                return Err(Error::NotReducedW0(format!(
                    "root at position {} repeats",
                    k + 1
                )));
            }
            betas.push(beta);
            prefix.push(self, letter);
        }
        Ok(betas)
    }

    /// The diagram automorphism `i ↦ i*` with `w_0(α_i) = -α_{i*}`, as a
    /// vector indexed by `i - 1`.
    pub fn w0_involution(&self) -> Vec<Letter> {
        let w0 = self.longest_word();
        (1..=self.rank)
            .map(|i| {
                let image = self
                    .act_root(&w0, &self.simple_root(i))
                    .expect("letters in range");
                let star = image
                    .0
                    .iter()
                    .position(|&x| x == -1)
                    .expect("w0 maps simple roots to negative simple roots");
                star + 1
            })
            .collect()
    }
}

fn branch_length(adjacency: &[Vec<usize>], from: usize, start: usize) -> usize {
    let (mut prev, mut cur, mut len) = (from, start, 1);
    loop {
        let next: Vec<_> = adjacency[cur]
            .iter()
            .copied()
            .filter(|&w| w != prev)
            .collect();
        match next.as_slice() {
            [only] => {
                prev = cur;
                cur = *only;
                len += 1;
            }
            _ => return len,
        }
    }
}

/// The Weyl group element `s_{i_1} .. s_{i_k}` as a matrix on root coordinates,
/// column `j` being the image of `α_j`.
pub(crate) struct PrefixElement {
    columns: Vec<Vec<i64>>,
}

impl PrefixElement {
    pub(crate) fn identity(d: &DynkinDiagram) -> Self {
        Self {
            columns: (1..=d.rank).map(|i| d.simple_root(i).0).collect(),
        }
    }

    pub(crate) fn image_of_simple(&self, i: Letter) -> Root {
        Root(self.columns[i - 1].clone())
    }

    /// `w ← w s_i`, using `s_i(α_j) = α_j - c_ji α_i`.
    pub(crate) fn push(&mut self, d: &DynkinDiagram, i: Letter) {
        let col_i = self.columns[i - 1].clone();
        for (j, col) in self.columns.iter_mut().enumerate() {
            let c = d.cartan[j][i - 1];
            if c != 0 {
                for (x, y) in col.iter_mut().zip(&col_i) {
                    *x -= c * y;
                }
            }
        }
    }
}

/// A root in the simple-root basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    /// Coefficient of `α_i`.
    pub fn coeff(&self, i: Letter) -> i64 {
        self.0[i - 1]
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&x| x >= 0) && self.0.iter().any(|&x| x > 0)
    }

    /// Height first, then `α_1` before `α_2` and so on.
    pub fn canonical_cmp(a: &Root, b: &Root) -> Ordering {
        a.height().cmp(&b.height()).then_with(|| b.0.cmp(&a.0))
    }

    /// Compact support notation: `123` for `α_1+α_2+α_3`, with a combining
    /// overline marking a coefficient of 2 (`123̄4`).
    pub fn label(&self) -> String {
        let mut s = String::new();
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if self.0.len() > 9 && !s.is_empty() {
                s.push('.');
            }
            s.push_str(&(i + 1).to_string());
            match c {
                1 => {}
                2 => s.push('\u{0305}'),
                _ => s.push_str(&format!("^{c}")),
            }
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }

    /// The coordinate string, e.g. `1,1,2,1`.
    pub fn coord_string(&self) -> String {
        join_coords(&self.0)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.abs();
            if mag == 1 {
                write!(f, "{sign}a{}", i + 1)?;
            } else {
                write!(f, "{sign}{mag}a{}", i + 1)?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// An integral weight in the fundamental-weight basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    /// Coefficient of `ω_i`.
    pub fn coeff(&self, i: Letter) -> i64 {
        self.0[i - 1]
    }

    /// The natural pairing `(β, λ) = Σ β_i λ_i` between a root and a weight.
    pub fn pair_with_root(&self, root: &Root) -> i64 {
        self.0.iter().zip(&root.0).map(|(x, y)| x * y).sum()
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|x| -x).collect())
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(x, y)| x + y).collect())
    }

    pub fn scaled(&self, c: i64) -> Weight {
        Weight(self.0.iter().map(|x| c * x).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", join_coords(&self.0))
    }
}

pub(crate) fn join_coords(v: &[i64]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d4_paper() -> DynkinDiagram {
        DynkinDiagram::new(4, &[(1, 3), (2, 3), (3, 4)]).unwrap()
    }

    #[test]
    fn root_counts() {
        for n in 1..=7 {
            let a = DynkinDiagram::type_a(n);
            assert_eq!(a.positive_roots().len(), n * (n + 1) / 2);
        }
        for n in 4..=7 {
            let d = DynkinDiagram::type_d(n);
            assert_eq!(d.positive_roots().len(), n * (n - 1));
        }
    }

    #[test]
    fn a2_roots_in_canonical_order() {
        let roots = DynkinDiagram::type_a(2).positive_roots();
        assert_eq!(
            roots,
            vec![Root(vec![1, 0]), Root(vec![0, 1]), Root(vec![1, 1])]
        );
    }

    #[test]
    fn d4_highest_root() {
        let roots = d4_paper().positive_roots();
        assert_eq!(roots.len(), 12);
        assert_eq!(roots.last().unwrap(), &Root(vec![1, 1, 2, 1]));
    }

    #[test]
    fn a4_roots_are_intervals() {
        for root in DynkinDiagram::type_a(4).positive_roots() {
            let support: Vec<usize> = (0..4).filter(|&i| root.0[i] != 0).collect();
            assert!(root.0.iter().all(|&c| c == 0 || c == 1));
            assert_eq!(support.last().unwrap() - support[0] + 1, support.len());
        }
    }

    #[test]
    fn rejects_non_ad_diagrams() {
        // E6
        let e6 = DynkinDiagram::new(6, &[(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)]);
        assert!(matches!(e6, Err(Error::UnsupportedDiagram(_))));
        // cycle
        assert!(matches!(
            DynkinDiagram::new(3, &[(1, 2), (2, 3), (1, 3)]),
            Err(Error::NotATree(_))
        ));
        // disconnected with right edge count is impossible, but a star of degree 4 is not
        assert!(DynkinDiagram::new(5, &[(1, 2), (1, 3), (1, 4), (1, 5)]).is_err());
        assert!(matches!(
            DynkinDiagram::new(3, &[(1, 3), (3, 2)]),
            Err(Error::UnsupportedDiagram(_))
        ));
    }

    #[test]
    fn weyl_action_on_roots() {
        let a2 = DynkinDiagram::type_a(2);
        assert_eq!(
            a2.act_root(&[1], &a2.simple_root(2)).unwrap(),
            Root(vec![1, 1])
        );
        // s_1 s_2 (α_1) = α_2, the third root of w0 = s_1 s_2 s_1
        assert_eq!(
            a2.act_root(&[1, 2], &a2.simple_root(1)).unwrap(),
            Root(vec![0, 1])
        );
        assert!(matches!(
            a2.act_root(&[3], &a2.simple_root(1)),
            Err(Error::LetterOutOfRange { .. })
        ));
    }

    #[test]
    fn reflecting_fundamental_weight() {
        for d in [DynkinDiagram::type_a(4), d4_paper()] {
            for i in 1..=d.rank() {
                let got = d.act_weight(&[i], &d.fundamental_weight(i)).unwrap();
                let expected = d
                    .fundamental_weight(i)
                    .add(&d.root_to_weight(&d.simple_root(i)).neg());
                assert_eq!(got, expected);
            }
        }
    }

    #[test]
    fn reflection_orderings() {
        let a2 = DynkinDiagram::type_a(2);
        assert_eq!(
            a2.reflection_ordering(&[1, 2, 1]).unwrap(),
            vec![Root(vec![1, 0]), Root(vec![1, 1]), Root(vec![0, 1])]
        );
        let a3 = DynkinDiagram::type_a(3);
        let expected: Vec<Root> = [
            [1, 0, 0],
            [0, 0, 1],
            [1, 1, 1],
            [0, 1, 1],
            [1, 1, 0],
            [0, 1, 0],
        ]
        .iter()
        .map(|v| Root(v.to_vec()))
        .collect();
        assert_eq!(
            a3.reflection_ordering(&[1, 3, 2, 1, 3, 2]).unwrap(),
            expected
        );

        let d4 = d4_paper();
        let betas = d4
            .reflection_ordering(&[1, 2, 3, 1, 2, 4, 3, 1, 2, 4, 3, 4])
            .unwrap();
        let expected: Vec<Root> = [
            [1, 0, 0, 0],
            [0, 1, 0, 0],
            [1, 1, 1, 0],
            [0, 1, 1, 0],
            [1, 0, 1, 0],
            [1, 1, 1, 1],
            [1, 1, 2, 1],
            [1, 0, 1, 1],
            [0, 1, 1, 1],
            [0, 0, 1, 0],
            [0, 0, 1, 1],
            [0, 0, 0, 1],
        ]
        .iter()
        .map(|v| Root(v.to_vec()))
        .collect();
        assert_eq!(betas, expected);
    }

    #[test]
    fn non_reduced_words_rejected() {
        let a2 = DynkinDiagram::type_a(2);
        assert!(matches!(
            a2.reflection_ordering(&[1, 1, 2]),
            Err(Error::NotReducedW0(_))
        ));
        assert!(matches!(
            a2.reflection_ordering(&[1, 2]),
            Err(Error::NotReducedW0(_))
        ));
    }

    #[test]
    fn involutions() {
        assert_eq!(DynkinDiagram::type_a(2).w0_involution(), vec![2, 1]);
        assert_eq!(DynkinDiagram::type_a(3).w0_involution(), vec![3, 2, 1]);
        assert_eq!(d4_paper().w0_involution(), vec![1, 2, 3, 4]);
        // D5 swaps the two short legs
        assert_eq!(
            DynkinDiagram::type_d(5).w0_involution(),
            vec![1, 2, 3, 5, 4]
        );
    }

    #[test]
    fn w0_negates_simple_roots_up_to_star() {
        for d in [
            DynkinDiagram::type_a(5),
            DynkinDiagram::type_d(5),
            DynkinDiagram::type_d(6),
        ] {
            let w0 = d.longest_word();
            let star = d.w0_involution();
            for i in 1..=d.rank() {
                let image = d.act_root(&w0, &d.simple_root(i)).unwrap();
                let expected = Root(d.simple_root(star[i - 1]).0.iter().map(|x| -x).collect());
                assert_eq!(image, expected);
            }
            let as_set: BTreeSet<_> = d.reflection_ordering(&w0).unwrap().into_iter().collect();
            let all: BTreeSet<_> = d.positive_roots().into_iter().collect();
            assert_eq!(as_set, all);
        }
    }

    #[test]
    fn root_weight_conversion() {
        let d = d4_paper();
        for beta in d.positive_roots() {
            let w = d.root_to_weight(&beta);
            for i in 1..=4 {
                let expected: i64 = (1..=4).map(|j| d.cartan(i, j) * beta.coeff(j)).sum();
                assert_eq!(w.coeff(i), expected);
                assert_eq!(w.coeff(i), d.pairing(&beta, &d.simple_root(i)));
            }
        }
    }

    #[test]
    fn labels() {
        assert_eq!(Root(vec![1, 1, 2, 1]).label(), "123\u{0305}4");
        assert_eq!(Root(vec![0, 1, 1, 0]).label(), "23");
        assert_eq!(Root(vec![1, 0, -1]).to_string(), "a1-a3");
    }
}
