//! Quivers on Dynkin diagrams: sink reflections, adapted reduced words, the
//! Ringel form and the Coxeter element of an orientation.

use std::fmt;

use crate::arquiver::ArQuiver;
use crate::cartan::{DynkinDiagram, Letter, PrefixElement, Root, Weight};
use crate::error::{Error, Result};

/// An orientation of a Dynkin diagram. Arrows are `(source, target)` pairs,
/// stored in the order of the diagram's canonical edge list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    diagram: DynkinDiagram,
    arrows: Vec<(Letter, Letter)>,
}

impl Quiver {
    pub fn new(diagram: DynkinDiagram, arrows: &[(Letter, Letter)]) -> Result<Self> {
        let mut oriented = Vec::with_capacity(diagram.edges().len());
        for &(a, b) in diagram.edges() {
            let matching: Vec<_> = arrows
                .iter()
                .copied()
                .filter(|&(s, t)| (s, t) == (a, b) || (s, t) == (b, a))
                .collect();
            match matching.as_slice() {
                [arrow] => oriented.push(*arrow),
                [] => {
                    return Err(Error::UnsupportedDiagram(format!(
                        "edge {a}-{b} has no orientation"
                    )))
                }
                _ => {
                    return Err(Error::UnsupportedDiagram(format!(
                        "edge {a}-{b} is oriented more than once"
                    )))
                }
            }
        }
        if arrows.len() != oriented.len() {
            return Err(Error::UnsupportedDiagram(
                "arrow outside the underlying diagram".into(),
            ));
        }
        Ok(Self {
            diagram,
            arrows: oriented,
        })
    }

    /// Parses `"a>b,c>d,.."` (arrow `a → b`). A bare integer token declares an
    /// isolated vertex, which is only useful for `A_1` (`"1"`).
    pub fn parse(spec: &str) -> Result<Self> {
        let compact: String = spec.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse {
                what: "quiver",
                token: String::new(),
                reason: "empty quiver specification".into(),
            });
        }
        let parse_vertex = |tok: &str, full: &str| -> Result<Letter> {
            match tok.parse::<Letter>() {
                Ok(v) if v > 0 => Ok(v),
                _ => Err(Error::Parse {
                    what: "quiver",
                    token: full.to_string(),
                    reason: "vertices must be positive integers".into(),
                }),
            }
        };
        let mut arrows = Vec::new();
        let mut vertices = Vec::new();
        for token in compact.split(',') {
            match token.split_once('>') {
                Some((a, b)) => {
                    let (a, b) = (parse_vertex(a, token)?, parse_vertex(b, token)?);
                    arrows.push((a, b));
                    vertices.extend([a, b]);
                }
                None => vertices.push(parse_vertex(token, token)?),
            }
        }
        let rank = *vertices.iter().max().expect("nonempty");
        if let Some(missing) = (1..=rank).find(|v| !vertices.contains(v)) {
            return Err(Error::VertexGap { rank, missing });
        }
        let edges: Vec<_> = arrows.clone();
        let diagram = DynkinDiagram::new(rank, &edges)?;
        Self::new(diagram, &arrows)
    }

    /// Every orientation of `diagram`, in a fixed order: orientation `m` points
    /// edge `e` from its larger endpoint to its smaller one when bit `e` of `m`
    /// is set.
    pub fn all_orientations(diagram: &DynkinDiagram) -> Vec<Quiver> {
        let edges = diagram.edges();
        (0..1usize << edges.len())
            .map(|mask| {
                let arrows: Vec<_> = edges
                    .iter()
                    .enumerate()
                    .map(|(e, &(a, b))| if mask >> e & 1 == 1 { (b, a) } else { (a, b) })
                    .collect();
                Quiver {
                    diagram: diagram.clone(),
                    arrows,
                }
            })
            .collect()
    }

    pub fn diagram(&self) -> &DynkinDiagram {
        &self.diagram
    }

    pub fn rank(&self) -> usize {
        self.diagram.rank()
    }

    pub fn arrows(&self) -> &[(Letter, Letter)] {
        &self.arrows
    }

    pub fn has_arrow(&self, from: Letter, to: Letter) -> bool {
        self.arrows.contains(&(from, to))
    }

    pub fn is_sink(&self, i: Letter) -> bool {
        self.arrows.iter().all(|&(s, _)| s != i)
    }

    pub fn is_source(&self, i: Letter) -> bool {
        self.arrows.iter().all(|&(_, t)| t != i)
    }

    /// `s_i Q`: reverses every arrow ending at the sink `i`.
    pub fn reflect_sink(&self, i: Letter) -> Result<Quiver> {
        self.diagram.check_letter(i)?;
        if !self.is_sink(i) {
            return Err(Error::NotASink(i));
        }
        let arrows = self
            .arrows
            .iter()
            .map(|&(s, t)| if t == i { (t, s) } else { (s, t) })
            .collect();
        Ok(Quiver {
            diagram: self.diagram.clone(),
            arrows,
        })
    }

    /// The canonical adapted reduced word of `w_0`: at every step the smallest
    /// sink of the reflected quiver whose reflection still lengthens the prefix.
    pub fn adapted_word(&self) -> ReducedWord {
        let d = &self.diagram;
        let total = d.num_positive_roots();
        let mut q = self.clone();
        let mut prefix = PrefixElement::identity(d);
        let mut letters = Vec::with_capacity(total);
        let mut roots = Vec::with_capacity(total);
        while letters.len() < total {
            let i = (1..=d.rank())
                .find(|&i| q.is_sink(i) && prefix.image_of_simple(i).is_positive())
                .expect("every quiver admits an adapted word of w0");
            roots.push(prefix.image_of_simple(i));
            prefix.push(d, i);
            letters.push(i);
            q = q.reflect_sink(i).expect("letter is a sink");
        }
        ReducedWord { letters, roots }
    }

    /// Checks that each letter is a sink of the successively reflected quiver.
    pub fn check_adapted(&self, word: &[Letter]) -> Result<()> {
        let mut q = self.clone();
        for (k, &letter) in word.iter().enumerate() {
            self.diagram.check_letter(letter)?;
            q = q.reflect_sink(letter).map_err(|_| Error::NotAdapted {
                position: k + 1,
                letter,
            })?;
        }
        Ok(())
    }

    pub fn is_adapted(&self, word: &[Letter]) -> bool {
        self.check_adapted(word).is_ok()
    }

    /// Each vertex once, always the smallest sink of the partially reflected
    /// quiver. The Coxeter element `c` acts by applying these reflections
    /// first to last.
    pub fn sink_order(&self) -> Vec<Letter> {
        let mut q = self.clone();
        let mut order = Vec::with_capacity(self.rank());
        while order.len() < self.rank() {
            let i = (1..=self.rank())
                .find(|&i| !order.contains(&i) && q.is_sink(i))
                .expect("a quiver on a tree always has a sink");
            order.push(i);
            q = q.reflect_sink(i).expect("sink");
        }
        order
    }

    /// `c·β`, which equals the dimension vector of `τM` when `β = dim M`.
    pub fn coxeter_act_root(&self, root: &Root) -> Root {
        self.sink_order()
            .into_iter()
            .fold(root.clone(), |v, i| self.diagram.reflect_root(i, &v))
    }

    pub fn coxeter_act_weight(&self, weight: &Weight) -> Weight {
        self.sink_order()
            .into_iter()
            .fold(weight.clone(), |v, i| self.diagram.reflect_weight(i, &v))
    }

    /// The `(n+1)`-cycle of the Coxeter element in type `A_n`, built by
    /// inserting `n, n-1, .., 2` to the right (arrow `i → i-1`) or to the left
    /// (arrow `i-1 → i`) of `n+1`, and finally `1` on the left.
    pub fn coxeter_cycle(&self) -> Result<Vec<usize>> {
        if !self.diagram.is_type_a() {
            return Err(Error::NotTypeA);
        }
        let n = self.rank();
        let mut cycle = std::collections::VecDeque::from([n + 1]);
        for i in (2..=n).rev() {
            if self.has_arrow(i, i - 1) {
                cycle.push_back(i);
            } else {
                cycle.push_front(i);
            }
        }
        cycle.push_front(1);
        Ok(cycle.into_iter().collect())
    }

    /// The rotation of the Coxeter cycle whose first `i` entries are
    /// `{1, .., i}` in some order, split after position `i`.
    pub fn segmented(&self, i: Letter) -> Result<(Vec<usize>, Vec<usize>)> {
        let cycle = self.coxeter_cycle()?;
        self.diagram.check_letter(i)?;
        let len = cycle.len();
        for start in 0..len {
            let rotated: Vec<usize> = (0..len).map(|k| cycle[(start + k) % len]).collect();
            if rotated[..i].iter().all(|&j| j <= i) {
                return Ok((rotated[..i].to_vec(), rotated[i..].to_vec()));
            }
        }
        Err(Error::Internal(format!(
            "Coxeter cycle {cycle:?} has no {i}-segmented rotation"
        )))
    }

    pub fn ringel(&self) -> RingelMatrix {
        let n = self.rank();
        let mut entries = vec![vec![0i64; n]; n];
        for (i, row) in entries.iter_mut().enumerate() {
            row[i] = 1;
        }
        for &(s, t) in &self.arrows {
            entries[s - 1][t - 1] = -1;
        }
        RingelMatrix { entries }
    }

    /// Number of directed paths from `from` to `to` (0 or 1 on a tree).
    pub fn path_count(&self, from: Letter, to: Letter) -> i64 {
        if from == to {
            return 1;
        }
        self.arrows
            .iter()
            .filter(|&&(s, _)| s == from)
            .map(|&(_, t)| self.path_count(t, to))
            .sum()
    }

    /// Dimension vector of the indecomposable projective `P(i)`.
    pub fn projective_dim(&self, i: Letter) -> Root {
        Root((1..=self.rank()).map(|j| self.path_count(i, j)).collect())
    }

    /// Dimension vector of the indecomposable injective `I(i)`.
    pub fn injective_dim(&self, i: Letter) -> Root {
        Root((1..=self.rank()).map(|j| self.path_count(j, i)).collect())
    }

    /// The `"a>b,.."` form accepted by [`Quiver::parse`].
    pub fn spec_string(&self) -> String {
        if self.arrows.is_empty() {
            return "1".into();
        }
        self.arrows
            .iter()
            .map(|(s, t)| format!("{s}>{t}"))
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]", self.diagram.name(), self.spec_string())
    }
}

/// A reduced expression of the longest Weyl group element together with its
/// reflection ordering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedWord {
    letters: Vec<Letter>,
    roots: Vec<Root>,
}

impl ReducedWord {
    pub fn new(diagram: &DynkinDiagram, letters: Vec<Letter>) -> Result<Self> {
        let roots = diagram.reflection_ordering(&letters)?;
        Ok(Self { letters, roots })
    }

    /// Parses `"i1,i2,.."` or the token `auto`, which selects the canonical
    /// word adapted to `quiver`.
    pub fn parse(spec: &str, quiver: &Quiver) -> Result<Self> {
        let compact: String = spec.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.eq_ignore_ascii_case("auto") {
            return Ok(quiver.adapted_word());
        }
        let letters = compact
            .split(',')
            .map(|tok| {
                tok.parse::<Letter>().map_err(|_| Error::Parse {
                    what: "word",
                    token: tok.to_string(),
                    reason: "letters must be positive integers".into(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(quiver.diagram(), letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// `β_1, .., β_N`.
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Letter at 0-based position `k`.
    pub fn letter(&self, k: usize) -> Letter {
        self.letters[k]
    }

    pub fn position_of_root(&self, root: &Root) -> Option<usize> {
        self.roots.iter().position(|r| r == root)
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

/// The matrix of the Ringel form: 1 on the diagonal, -1 at `(i, j)` for each
/// arrow `i → j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingelMatrix {
    entries: Vec<Vec<i64>>,
}

impl RingelMatrix {
    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn entry(&self, i: Letter, j: Letter) -> i64 {
        self.entries[i - 1][j - 1]
    }

    /// `(β_1, β_2)_R = β_1ᵀ R β_2`; equals `dim Hom - dim Ext¹`.
    pub fn form(&self, a: &Root, b: &Root) -> i64 {
        let mut total = 0;
        for (i, &x) in a.0.iter().enumerate() {
            if x != 0 {
                total += x * self.entries[i]
                    .iter()
                    .zip(&b.0)
                    .map(|(r, y)| r * y)
                    .sum::<i64>();
            }
        }
        total
    }

    /// `ρ_i`, whose `ω`-coordinates are column `i` of `R`.
    pub fn rho(&self, i: Letter) -> Weight {
        Weight(self.entries.iter().map(|row| row[i - 1]).collect())
    }

    /// `ρ_i^t`, row `i` of `R`.
    pub fn rho_t(&self, i: Letter) -> Weight {
        Weight(self.entries[i - 1].clone())
    }

    /// `φ_R(β) = -Σ m_i ρ_i` for `β = Σ m_i α_i`.
    pub fn phi(&self, root: &Root) -> Weight {
        let n = self.entries.len();
        root.0
            .iter()
            .enumerate()
            .fold(Weight::zero(n), |acc, (i, &m)| {
                acc.add(&self.rho(i + 1).scaled(-m))
            })
    }
}

/// Reineke's condition (L): `dim Hom(X, S_i) <= 1` for every indecomposable
/// `X` and every `i`. Hom dimensions come from the Ringel form, which computes
/// them exactly when `[β] ≼ [α_i]`; other pairs have no morphisms.
pub fn condition_l(ar: &ArQuiver) -> bool {
    condition_l_violation(ar).is_none()
}

/// The first `(position, i, dim Hom)` breaking condition (L), if any.
pub fn condition_l_violation(ar: &ArQuiver) -> Option<(usize, Letter, i64)> {
    let ringel = ar.quiver().ringel();
    let d = ar.quiver().diagram();
    for i in 1..=d.rank() {
        let simple = ar.position_of_simple(i);
        for k in 0..ar.len() {
            if ar.leq(k, simple) {
                let hom = ringel.form(ar.root(k), &d.simple_root(i));
                if hom > 1 {
                    return Some((k, i, hom));
                }
            }
        }
    }
    None
}
