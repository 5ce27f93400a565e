//! Weyl group elements as integer matrices acting on simple-root coordinates.
//!
//! A word `[a1, a2, ..., am]` denotes the product `s_{a1} s_{a2} ... s_{am}`,
//! so its rightmost letter acts first. A game play `(i_1, ..., i_t)` therefore
//! corresponds to the word `[i_t, ..., i_1]`.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsystem::{checked_dot, CartanMatrix, DynkinDiagram, RootSystem, RootVector};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeylWord(pub Vec<usize>);

impl WeylWord {
    pub fn new(letters: impl Into<Vec<usize>>) -> Self {
        WeylWord(letters.into())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> WeylWord {
        WeylWord(self.0.iter().rev().copied().collect())
    }

    fn check_range(&self, rank: usize) -> Result<()> {
        match self.0.iter().find(|&&a| a == 0 || a > rank) {
            Some(&vertex) => Err(Error::IndexOutOfRange { vertex, rank }),
            None => Ok(()),
        }
    }
}

impl fmt::Display for WeylWord {
    /// `s1s2s1`, or `e` for the empty word.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "e");
        }
        for a in &self.0 {
            write!(f, "s{a}")?;
        }
        Ok(())
    }
}

/// Row-major integer matrix of the action on simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    rank: usize,
    matrix: Vec<i64>,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        let mut matrix = vec![0; rank * rank];
        (0..rank).for_each(|k| matrix[k * rank + k] = 1);
        WeylElement { rank, matrix }
    }

    /// Matrix of `s_i`: the identity with row `i` replaced by `e_i - A_{i,*}`.
    pub fn simple(i: usize, a: &CartanMatrix) -> Self {
        let mut w = WeylElement::identity(a.rank());
        let r = a.rank();
        for j in 1..=r {
            w.matrix[(i - 1) * r + (j - 1)] -= a.get(i, j);
        }
        w
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.matrix.chunks(self.rank).map(<[i64]>::to_vec).collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == WeylElement::identity(self.rank)
    }

    pub fn mul(&self, other: &WeylElement) -> WeylElement {
        let r = self.rank;
        let mut matrix = vec![0; r * r];
        for i in 0..r {
            for j in 0..r {
                let col: Vec<i64> = (0..r).map(|k| other.matrix[k * r + j]).collect();
                matrix[i * r + j] = checked_dot(&self.matrix[i * r..(i + 1) * r], &col);
            }
        }
        WeylElement { rank: r, matrix }
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        self.matrix
            .chunks(self.rank)
            .map(|row| checked_dot(row, v))
            .collect()
    }

    /// Image of the simple root `alpha_j`.
    pub fn image_of_simple(&self, j: usize) -> Vec<i64> {
        (0..self.rank)
            .map(|i| self.matrix[i * self.rank + (j - 1)])
            .collect()
    }

    /// `w(alpha_j) > 0`, equivalently `l(w s_j) > l(w)`.
    pub fn ascends_at(&self, j: usize) -> bool {
        self.image_of_simple(j).iter().all(|&c| c >= 0)
    }
}

impl Serialize for WeylElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows().serialize(s)
    }
}

/// A subset `J` of the vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ParabolicSubset(BTreeSet<usize>);

impl ParabolicSubset {
    pub fn new(vertices: impl IntoIterator<Item = usize>, rank: usize) -> Result<Self> {
        let set: BTreeSet<usize> = vertices.into_iter().collect();
        if let Some(&vertex) = set.iter().find(|&&v| v == 0 || v > rank) {
            return Err(Error::IndexOutOfRange { vertex, rank });
        }
        Ok(ParabolicSubset(set))
    }

    pub fn empty() -> Self {
        ParabolicSubset(BTreeSet::new())
    }

    pub fn full(rank: usize) -> Self {
        ParabolicSubset((1..=rank).collect())
    }

    pub fn complement(&self, rank: usize) -> Self {
        ParabolicSubset((1..=rank).filter(|v| !self.0.contains(v)).collect())
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_set(&self) -> &BTreeSet<usize> {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Every subset of `1..=rank`.
    pub fn all(rank: usize) -> Vec<ParabolicSubset> {
        (0u32..(1 << rank))
            .map(|mask| ParabolicSubset((1..=rank).filter(|v| mask & (1 << (v - 1)) != 0).collect()))
            .collect()
    }
}

impl RootSystem {
    pub fn simple_element(&self, i: usize) -> WeylElement {
        WeylElement::simple(i, self.cartan())
    }

    pub fn element_of(&self, word: &WeylWord) -> Result<WeylElement> {
        word.check_range(self.rank())?;
        let mut w = WeylElement::identity(self.rank());
        for &a in word.letters() {
            w = w.mul(&self.simple_element(a));
        }
        Ok(w)
    }

    pub fn inversion_set(&self, w: &WeylElement) -> Vec<RootVector> {
        self.positive_roots()
            .iter()
            .filter(|a| w.apply(a.coeffs()).iter().any(|&c| c < 0))
            .cloned()
            .collect()
    }

    pub fn length(&self, w: &WeylElement) -> usize {
        self.positive_roots()
            .iter()
            .filter(|a| w.apply(a.coeffs()).iter().any(|&c| c < 0))
            .count()
    }

    pub fn is_reduced(&self, word: &WeylWord) -> Result<bool> {
        word.check_range(self.rank())?;
        let mut w = WeylElement::identity(self.rank());
        for &a in word.letters() {
            if !w.ascends_at(a) {
                return Ok(false);
            }
            w = w.mul(&self.simple_element(a));
        }
        Ok(true)
    }

    /// Membership in `W^J`, checked through lengths and through inversion sets.
    pub fn is_min_rep(&self, w: &WeylElement, j: &ParabolicSubset) -> Result<bool> {
        let len = self.length(w);
        let by_length = j
            .iter()
            .all(|s| self.length(&w.mul(&self.simple_element(s))) > len);
        let parabolic: BTreeSet<RootVector> =
            self.parabolic_positive_roots(j.as_set()).into_iter().collect();
        let by_inversions = self
            .inversion_set(w)
            .iter()
            .all(|a| !parabolic.contains(a));
        if by_length != by_inversions {
            return Err(Error::InternalInconsistency(format!(
                "length test says {by_length}, inversion test says {by_inversions}"
            )));
        }
        Ok(by_length)
    }

    /// `w = u * v` with `u` in `W^J` and `v` in `W_J`.
    pub fn parabolic_decompose(
        &self,
        w: &WeylElement,
        j: &ParabolicSubset,
    ) -> (WeylElement, WeylElement) {
        let mut u = w.clone();
        let mut v = WeylElement::identity(self.rank());
        while let Some(s) = j.iter().find(|&s| !u.ascends_at(s)) {
            let gen = self.simple_element(s);
            u = u.mul(&gen);
            v = gen.mul(&v);
        }
        (u, v)
    }

    /// Greedy reduced word for the longest element of `W_J`.
    pub fn longest_word(&self, j: &ParabolicSubset) -> WeylWord {
        let mut w = WeylElement::identity(self.rank());
        let mut word = Vec::new();
        while let Some(s) = j.iter().find(|&s| w.ascends_at(s)) {
            w = w.mul(&self.simple_element(s));
            word.push(s);
        }
        WeylWord(word)
    }

    pub fn longest_element(&self, j: &ParabolicSubset) -> WeylElement {
        self.element_of(&self.longest_word(j))
            .expect("letters come from J")
    }

    pub fn complete_to_longest(&self, word: &WeylWord, j: &ParabolicSubset) -> Result<WeylWord> {
        word.check_range(self.rank())?;
        if let Some(&a) = word.letters().iter().find(|&&a| !j.contains(a)) {
            return Err(Error::LetterOutsideJ(a));
        }
        if !self.is_reduced(word)? {
            return Err(Error::NotReduced(word.0.clone()));
        }
        let mut w = self.element_of(word)?;
        let mut out = word.0.clone();
        while let Some(s) = j.iter().find(|&s| w.ascends_at(s)) {
            w = w.mul(&self.simple_element(s));
            out.push(s);
        }
        Ok(WeylWord(out))
    }

    /// All reduced words of `w`, sorted.
    pub fn reduced_words(&self, w: &WeylElement) -> Vec<WeylWord> {
        let mut memo = HashMap::new();
        let mut out = self.reduced_words_memo(w, &mut memo);
        out.sort();
        out
    }

    fn reduced_words_memo(
        &self,
        w: &WeylElement,
        memo: &mut HashMap<WeylElement, Vec<WeylWord>>,
    ) -> Vec<WeylWord> {
        if w.is_identity() {
            return vec![WeylWord::default()];
        }
        if let Some(hit) = memo.get(w) {
            return hit.clone();
        }
        let mut out = Vec::new();
        for s in 1..=self.rank() {
            if w.ascends_at(s) {
                continue;
            }
            let shorter = w.mul(&self.simple_element(s));
            for mut prefix in self.reduced_words_memo(&shorter, memo) {
                prefix.0.push(s);
                out.push(prefix);
            }
        }
        memo.insert(w.clone(), out.clone());
        out
    }
}

/// The whole group, enumerated breadth-first by right multiplication.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    elements: Vec<WeylElement>,
    words: Vec<WeylWord>,
    index: HashMap<WeylElement, usize>,
}

impl WeylGroup {
    pub const DEFAULT_LIMIT: usize = 200_000;

    pub fn enumerate(rs: &RootSystem, limit: usize) -> Result<WeylGroup> {
        let r = rs.rank();
        let gens: Vec<WeylElement> = (1..=r).map(|i| rs.simple_element(i)).collect();
        let id = WeylElement::identity(r);
        let mut elements = vec![id.clone()];
        let mut words = vec![WeylWord::default()];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(k) = queue.pop_front() {
            for (g, gen) in gens.iter().enumerate() {
                let next = elements[k].mul(gen);
                if index.contains_key(&next) {
                    continue;
                }
                if elements.len() >= limit {
                    return Err(Error::GroupTooLarge(limit));
                }
                let mut word = words[k].clone();
                word.0.push(g + 1);
                index.insert(next.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(next);
                words.push(word);
            }
        }
        Ok(WeylGroup {
            elements,
            words,
            index,
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    /// A shortest word for each element; its length is the Cayley-graph distance.
    pub fn shortest_word(&self, k: usize) -> &WeylWord {
        &self.words[k]
    }

    pub fn position(&self, w: &WeylElement) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&WeylElement, &WeylWord)> {
        self.elements.iter().zip(&self.words)
    }
}

pub fn element_of(word: &WeylWord, d: &DynkinDiagram) -> Result<WeylElement> {
    RootSystem::new(d).element_of(word)
}

pub fn inversion_set(w: &WeylElement, d: &DynkinDiagram) -> Vec<RootVector> {
    RootSystem::new(d).inversion_set(w)
}

pub fn length(w: &WeylElement, d: &DynkinDiagram) -> usize {
    RootSystem::new(d).length(w)
}

pub fn is_reduced(word: &WeylWord, d: &DynkinDiagram) -> Result<bool> {
    RootSystem::new(d).is_reduced(word)
}

pub fn minimal_coset_reps(d: &DynkinDiagram, j: &ParabolicSubset) -> Result<Vec<WeylElement>> {
    let rs = RootSystem::new(d);
    let group = WeylGroup::enumerate(&rs, WeylGroup::DEFAULT_LIMIT)?;
    let mut out = Vec::new();
    for w in group.elements() {
        if rs.is_min_rep(w, j)? {
            out.push(w.clone());
        }
    }
    Ok(out)
}

pub fn is_min_rep(w: &WeylElement, j: &ParabolicSubset, d: &DynkinDiagram) -> Result<bool> {
    RootSystem::new(d).is_min_rep(w, j)
}

pub fn parabolic_decompose(
    w: &WeylElement,
    j: &ParabolicSubset,
    d: &DynkinDiagram,
) -> (WeylElement, WeylElement) {
    RootSystem::new(d).parabolic_decompose(w, j)
}

pub fn longest_element(j: &ParabolicSubset, d: &DynkinDiagram) -> WeylElement {
    RootSystem::new(d).longest_element(j)
}

pub fn complete_to_longest(
    word: &WeylWord,
    j: &ParabolicSubset,
    d: &DynkinDiagram,
) -> Result<WeylWord> {
    RootSystem::new(d).complete_to_longest(word, j)
}

pub fn reduced_words(w: &WeylElement, d: &DynkinDiagram) -> Vec<WeylWord> {
    RootSystem::new(d).reduced_words(w)
}
