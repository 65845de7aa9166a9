//! Kashiwara's string parametrization: the operators `ẽ_i`, `f̃_i` on `ℕ^N`,
//! the membership test for string parameters, and integer points of cones.

use std::collections::{BTreeSet, HashSet, VecDeque};

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::cartan::{DynkinDiagram, Letter, Root};
use crate::error::{Error, Result};
use crate::lusztig::CrystalGraph;
use crate::quiver::ReducedWord;

/// The string crystal of a reduced word; coordinate `k` of a parameter is
/// attached to the letter `i_k`.
#[derive(Clone, Debug)]
pub struct StringCrystal {
    diagram: DynkinDiagram,
    letters: Vec<Letter>,
}

impl StringCrystal {
    pub fn new(diagram: &DynkinDiagram, word: &ReducedWord) -> Self {
        Self {
            diagram: diagram.clone(),
            letters: word.letters().to_vec(),
        }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// `r_k = a_k + Σ_{j<k} c_{i_j, i_k} a_j`.
    pub fn r(&self, a: &[i64]) -> Vec<i64> {
        (0..self.len())
            .map(|k| {
                let ik = self.letters[k];
                a[k] + (0..k)
                    .map(|j| self.diagram.cartan(self.letters[j], ik) * a[j])
                    .sum::<i64>()
            })
            .collect()
    }

    /// First and last positions carrying `i` where `r` is maximal.
    fn extremal_positions(&self, i: Letter, a: &[i64]) -> Result<(usize, usize)> {
        self.diagram.check_letter(i)?;
        if a.len() != self.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                got: a.len(),
            });
        }
        let r = self.r(a);
        let on_i: Vec<usize> = (0..self.len()).filter(|&k| self.letters[k] == i).collect();
        let xi = on_i
            .iter()
            .map(|&k| r[k])
            .max()
            .ok_or(Error::LetterAbsent(i))?;
        let first = *on_i.iter().find(|&&k| r[k] == xi).expect("max attained");
        let last = *on_i
            .iter()
            .rev()
            .find(|&&k| r[k] == xi)
            .expect("max attained");
        Ok((first, last))
    }

    pub fn e(&self, i: Letter, a: &[i64]) -> Result<Vec<i64>> {
        let (_, last) = self.extremal_positions(i, a)?;
        let mut out = a.to_vec();
        out[last] += 1;
        Ok(out)
    }

    /// `None` stands for the zero of the crystal, which is never a vector.
    pub fn f(&self, i: Letter, a: &[i64]) -> Result<Option<Vec<i64>>> {
        let (first, _) = self.extremal_positions(i, a)?;
        if a[first] == 0 {
            return Ok(None);
        }
        let mut out = a.to_vec();
        out[first] -= 1;
        Ok(Some(out))
    }

    /// `a` is a string parameter iff `a = 0` or some `f̃_i a` is one.
    ///
    /// Sound because `ẽ_i f̃_i a = a` wherever `f̃_i a` is defined, complete
    /// because `f̃_i ẽ_i b = b` for every `b`. Greedy descent is not enough:
    /// `f̃_i` of a string can be defined and still fail to be a string.
    pub fn is_string(&self, a: &[i64]) -> bool {
        if a.len() != self.len() || a.iter().any(|&x| x < 0) {
            return false;
        }
        let present = self.present_letters();
        // depth-first over descents; `dead` holds points known not to reach 0
        let mut dead: HashSet<Vec<i64>> = HashSet::new();
        let mut stack: Vec<(Vec<i64>, usize)> = vec![(a.to_vec(), 0)];
        while let Some((b, next)) = stack.pop() {
            if b.iter().all(|&x| x == 0) {
                return true;
            }
            if next == present.len() {
                dead.insert(b);
                continue;
            }
            let below = self.f(present[next], &b).expect("letter present");
            stack.push((b, next + 1));
            if let Some(c) = below {
                if !dead.contains(&c) {
                    stack.push((c, 0));
                }
            }
        }
        false
    }

    fn present_letters(&self) -> Vec<Letter> {
        (1..=self.diagram.rank())
            .filter(|i| self.letters.contains(i))
            .collect()
    }

    /// String parameters inside the box `[0, bound]^N`, by breadth-first
    /// closure of `0` under all `ẽ_i`. Pruning at the box is exact: `ẽ_i`
    /// only ever increments a coordinate, so every path to a point inside
    /// the box stays inside it.
    pub fn generate(&self, bound: i64) -> BTreeSet<Vec<i64>> {
        let present = self.present_letters();
        let zero = vec![0; self.len()];
        let mut seen: HashSet<Vec<i64>> = HashSet::from([zero.clone()]);
        let mut queue = VecDeque::from([zero]);
        while let Some(a) = queue.pop_front() {
            for &i in &present {
                let b = self.e(i, &a).expect("letter present");
                if b.iter().all(|&x| x <= bound) && seen.insert(b.clone()) {
                    queue.push_back(b);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// `Σ a_k α_{i_k}`.
    pub fn weight(&self, a: &[i64]) -> Root {
        let mut v = vec![0; self.diagram.rank()];
        for (&letter, &x) in self.letters.iter().zip(a) {
            v[letter - 1] += x;
        }
        Root(v)
    }

    pub fn crystal(&self, depth: usize) -> Result<CrystalGraph> {
        CrystalGraph::generate(self.diagram.rank(), self.len(), depth, |i, a| self.e(i, a))
    }
}

/// A finite set of inequality normals `k`, each standing for `k · a ≥ 0`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConeSpec {
    normals: BTreeSet<Vec<i64>>,
}

impl ConeSpec {
    pub fn new<I: IntoIterator<Item = Vec<i64>>>(normals: I) -> Self {
        Self {
            normals: normals.into_iter().collect(),
        }
    }

    pub fn normals(&self) -> &BTreeSet<Vec<i64>> {
        &self.normals
    }

    pub fn len(&self) -> usize {
        self.normals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.normals.is_empty()
    }

    pub fn contains(&self, a: &[i64]) -> Result<bool> {
        for k in &self.normals {
            if k.len() != a.len() {
                return Err(Error::DimensionMismatch {
                    expected: k.len(),
                    got: a.len(),
                });
            }
            if dot(k, a) < 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The first normal violated by `a`.
    pub fn violated_by(&self, a: &[i64]) -> Option<&Vec<i64>> {
        self.normals.iter().find(|k| dot(k, a) < 0)
    }

    /// Integer points of the cone inside `[0, bound]^dim`.
    pub fn points(&self, dim: usize, bound: i64) -> Result<BTreeSet<Vec<i64>>> {
        if let Some(k) = self.normals.iter().find(|k| k.len() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: k.len(),
            });
        }
        Ok(box_points(dim, bound)
            .filter(|a| self.violated_by(a).is_none())
            .collect::<Vec<_>>()
            .into_iter()
            .collect())
    }
}

fn dot(k: &[i64], a: &[i64]) -> i64 {
    k.iter().zip(a).map(|(x, y)| x * y).sum()
}

/// All points of `[0, bound]^dim` as a parallel iterator, in no particular
/// order.
pub fn box_points(dim: usize, bound: i64) -> impl ParallelIterator<Item = Vec<i64>> {
    let side = (bound + 1) as u64;
    let total = side.checked_pow(dim as u32).expect("box too large");
    (0..total).into_par_iter().map(move |mut code| {
        let mut a = vec![0; dim];
        for x in a.iter_mut() {
            *x = (code % side) as i64;
            code /= side;
        }
        a
    })
}

/// Box points that are string parameters, by the membership test alone.
///
/// The descent test of [`StringCrystal::is_string`] is evaluated for the
/// whole box at once, level by level in `Σ a_k`, so that each point only
/// looks up its `f̃_i`-images in the previous level. `f̃_i` never leaves the
/// box since it only decrements.
pub fn strings_by_filter(crystal: &StringCrystal, bound: i64) -> BTreeSet<Vec<i64>> {
    let present = crystal.present_letters();
    let n = crystal.len();
    let top = bound.max(0) as usize * n;
    let mut levels: Vec<Vec<Vec<i64>>> = vec![Vec::new(); top + 1];
    for a in box_points(n, bound).collect::<Vec<_>>() {
        let s = a.iter().sum::<i64>() as usize;
        levels[s].push(a);
    }
    let mut out: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut previous: HashSet<Vec<i64>> = HashSet::from([vec![0; n]]);
    out.insert(vec![0; n]);
    for level in levels.into_iter().skip(1) {
        let current: HashSet<Vec<i64>> = level
            .into_par_iter()
            .filter(|a| {
                present.iter().any(|&i| {
                    crystal
                        .f(i, a)
                        .expect("letter present")
                        .is_some_and(|b| previous.contains(&b))
                })
            })
            .collect();
        out.extend(current.iter().cloned());
        previous = current;
    }
    out
}

/// `t3-t1-t2>=0`: positive terms first, then negative ones, indices ascending
/// within each group, coefficients other than ±1 written in front.
pub fn pretty_inequality(normal: &[i64]) -> String {
    let term = |k: usize, c: i64| -> String {
        match c.abs() {
            1 => format!("t{}", k + 1),
            m => format!("{m}t{}", k + 1),
        }
    };
    let mut s = String::new();
    for (k, &c) in normal.iter().enumerate() {
        if c > 0 {
            if !s.is_empty() {
                s.push('+');
            }
            s.push_str(&term(k, c));
        }
    }
    for (k, &c) in normal.iter().enumerate() {
        if c < 0 {
            s.push('-');
            s.push_str(&term(k, c));
        }
    }
    if s.is_empty() {
        s.push('0');
    }
    s.push_str(">=0");
    s
}

pub fn inequality_json(type_index: Letter, normal: &[i64]) -> Value {
    json!({
        "type": type_index,
        "normal": normal,
        "pretty": pretty_inequality(normal),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> StringCrystal {
        let d = DynkinDiagram::type_a(2);
        StringCrystal::new(&d, &ReducedWord::new(&d, vec![1, 2, 1]).unwrap())
    }

    fn a3() -> StringCrystal {
        let d = DynkinDiagram::type_a(3);
        StringCrystal::new(&d, &ReducedWord::new(&d, vec![1, 3, 2, 1, 3, 2]).unwrap())
    }

    #[test]
    fn r_vectors() {
        let c = a2();
        assert_eq!(c.r(&[0, 0, 0]), vec![0, 0, 0]);
        // r_3 = a_3 + c_11 a_1 + c_21 a_2 = 0 + 2 - 1
        assert_eq!(c.r(&[1, 1, 0]), vec![1, 0, 1]);
        assert_eq!(c.r(&[0, 1, 0]), vec![0, 1, -1]);
    }

    #[test]
    fn operators_at_zero() {
        let c = a2();
        assert_eq!(c.e(1, &[0, 0, 0]).unwrap(), vec![0, 0, 1]);
        assert_eq!(c.e(2, &[0, 0, 0]).unwrap(), vec![0, 1, 0]);
        assert_eq!(c.f(1, &[0, 0, 0]).unwrap(), None);
        assert!(matches!(
            c.e(3, &[0, 0, 0]),
            Err(Error::LetterOutOfRange { .. })
        ));
    }

    #[test]
    fn absent_letter() {
        let d = DynkinDiagram::type_a(2);
        let c = StringCrystal {
            diagram: d,
            letters: vec![1],
        };
        assert_eq!(c.e(2, &[0]), Err(Error::LetterAbsent(2)));
    }

    #[test]
    fn a2_membership() {
        let c = a2();
        assert!(!c.is_string(&[1, 0, 0]));
        assert!(c.is_string(&[1, 1, 0]));
        assert!(!c.is_string(&[2, 1, 0]));
        for m in 0..3 {
            assert!(c.is_string(&[0, 0, m]));
        }
    }

    #[test]
    fn a2_generation_box_two() {
        let got = a2().generate(2);
        let mut expected = BTreeSet::new();
        for a1 in 0..=2 {
            for a2 in a1..=2 {
                for a3 in 0..=2 {
                    expected.insert(vec![a1, a2, a3]);
                }
            }
        }
        assert_eq!(expected.len(), 18);
        assert_eq!(got, expected);
        assert_eq!(a3().generate(0), BTreeSet::from([vec![0; 6]]));
    }

    #[test]
    fn generation_matches_filter() {
        for c in [a2(), a3()] {
            assert_eq!(c.generate(2), strings_by_filter(&c, 2));
        }
    }

    #[test]
    fn pointwise_test_matches_level_filter() {
        let c = a3();
        let filtered = strings_by_filter(&c, 1);
        for a in box_points(6, 1).collect::<Vec<_>>() {
            assert_eq!(c.is_string(&a), filtered.contains(&a), "{a:?}");
        }
        // reachable from 0, but not by applying the letter blocks in order
        assert!(c.is_string(&[0, 1, 1, 1, 0, 0]));
        assert!(c.is_string(&[0, 1, 2, 1, 1, 1]));
    }

    #[test]
    fn cone_membership() {
        let k = ConeSpec::new([vec![1, 0, 0], vec![-1, 1, 0], vec![0, 0, 1]]);
        assert!(k.contains(&[1, 2, 0]).unwrap());
        assert!(!k.contains(&[1, 0, 0]).unwrap());
        assert!(k.contains(&[1, 0]).is_err());
        let empty = ConeSpec::default();
        assert_eq!(empty.points(2, 1).unwrap().len(), 4);
    }

    #[test]
    fn pretty_printing() {
        let mut v = vec![0; 12];
        v[6] = 1;
        v[5] = -1;
        assert_eq!(pretty_inequality(&v), "t7-t6>=0");
        assert_eq!(pretty_inequality(&[-1, -1, 1, 0]), "t3-t1-t2>=0");
        assert_eq!(pretty_inequality(&[0, 0, 0, 1, 1, -1]), "t4+t5-t6>=0");
        assert_eq!(pretty_inequality(&[2, -3]), "2t1-3t2>=0");
    }

    #[test]
    fn e_and_f_are_inverse() {
        let c = a3();
        for a in c.generate(2) {
            for i in 1..=3 {
                let up = c.e(i, &a).unwrap();
                assert_eq!(c.f(i, &up).unwrap(), Some(a.clone()));
                if let Some(down) = c.f(i, &a).unwrap() {
                    assert_eq!(c.e(i, &down).unwrap(), a);
                }
            }
        }
    }
}
