//! Dynkin diagrams, Cartan matrices and positive roots of finite type.
//!
//! Vertex numbering per family:
//! - `A_n`: path `1 - 2 - ... - n`.
//! - `B_n`: vertex 1 is short, double bond between 1 and 2, then the path `2 - ... - n`.
//! - `C_n`: the dual of `B_n` (vertex 1 long).
//! - `D_n`: path `1 - ... - (n-2)`, with `n-1` and `n` both attached to `n-2`.
//! - `E_n`: path `1 - ... - (n-1)`, with `n` attached to 3.
//! - `F_4`: path `1 - 2 => 3 - 4`, vertices 3 and 4 short.
//! - `G_2`: vertex 1 short, triple bond.
//!
//! Arrow multiplicities are stored as `n(i, j)`, the number of arrows pointing
//! from `j` to `i`. The short end of a multiple bond carries the multiplicity.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];

    pub fn rank_is_legal(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }

    pub fn is_simply_laced(self) -> bool {
        matches!(self, Family::A | Family::D | Family::E)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        };
        write!(f, "{c}")
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            other => Err(Error::Parse(format!("unknown family {other:?}"))),
        }
    }
}

/// Finite-type Dynkin diagram with asymmetric arrow multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DynkinDiagram {
    family: Family,
    rank: usize,
    // row-major, arrows[(i-1)*rank + (j-1)] = n(i, j)
    arrows: Vec<i64>,
}

impl DynkinDiagram {
    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of arrows pointing from `j` to `i` (1-based).
    pub fn arrows(&self, i: usize, j: usize) -> i64 {
        self.arrows[(i - 1) * self.rank + (j - 1)]
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        1..=self.rank
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.vertices()
            .filter(|&u| u != v && self.arrows(v, u) > 0)
            .collect()
    }

    pub fn is_adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.arrows(i, j) > 0
    }

    pub fn is_simply_laced(&self) -> bool {
        self.arrows.iter().all(|&n| n <= 1)
    }

    /// Undirected edges `(i, j)` with `i < j`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in self.vertices() {
            for j in (i + 1)..=self.rank {
                if self.arrows(i, j) > 0 {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Nonzero `(i, j, n(i, j))` triples, sorted.
    pub fn arrow_list(&self) -> Vec<[i64; 3]> {
        let mut out = Vec::new();
        for i in self.vertices() {
            for j in self.vertices() {
                let n = self.arrows(i, j);
                if n > 0 {
                    out.push([i as i64, j as i64, n]);
                }
            }
        }
        out
    }

    pub fn name(&self) -> String {
        format!("{}_{}", self.family, self.rank)
    }

    /// Rebuild from a family, rank and arrow triples, validating against the
    /// family's shape.
    pub fn from_arrows(family: Family, rank: usize, triples: &[[i64; 3]]) -> Result<Self> {
        let standard = build_diagram(family, rank)?;
        let mut arrows = vec![0i64; rank * rank];
        for &[i, j, n] in triples {
            let in_range = |x: i64| x >= 1 && x as usize <= rank;
            if !in_range(i) || !in_range(j) {
                return Err(Error::InvalidDiagram(format!(
                    "arrow ({i},{j}) outside 1..={rank}"
                )));
            }
            if i == j || n < 0 {
                return Err(Error::InvalidDiagram(format!("bad arrow ({i},{j},{n})")));
            }
            arrows[(i as usize - 1) * rank + (j as usize - 1)] = n;
        }
        let candidate = DynkinDiagram {
            family,
            rank,
            arrows,
        };
        candidate.check_invariants()?;
        let dual_standard = dual(&standard);
        let accepted = candidate == standard
            || (matches!(family, Family::F | Family::G) && candidate.arrows == dual_standard.arrows);
        if !accepted {
            return Err(Error::InvalidDiagram(format!(
                "arrows do not match the shape of {}",
                standard.name()
            )));
        }
        Ok(candidate)
    }

    fn check_invariants(&self) -> Result<()> {
        for i in self.vertices() {
            for j in self.vertices() {
                let (a, b) = (self.arrows(i, j), self.arrows(j, i));
                if (a > 0) != (b > 0) {
                    return Err(Error::InvalidDiagram(format!(
                        "adjacency between {i} and {j} is not symmetric"
                    )));
                }
                if !(0..=3).contains(&(a * b)) {
                    return Err(Error::InvalidDiagram(format!(
                        "bond between {i} and {j} has multiplicity {}",
                        a * b
                    )));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for DynkinDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

#[derive(Serialize, Deserialize)]
struct DiagramJson {
    family: Family,
    rank: usize,
    arrows: Vec<[i64; 3]>,
}

impl Serialize for DynkinDiagram {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DiagramJson {
            family: self.family,
            rank: self.rank,
            arrows: self.arrow_list(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for DynkinDiagram {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = DiagramJson::deserialize(d)?;
        DynkinDiagram::from_arrows(raw.family, raw.rank, &raw.arrows)
            .map_err(serde::de::Error::custom)
    }
}

pub fn build_diagram(family: Family, rank: usize) -> Result<DynkinDiagram> {
    if !family.rank_is_legal(rank) {
        return Err(Error::IllegalRank {
            family: family.to_string(),
            rank,
        });
    }
    let mut arrows = vec![0i64; rank * rank];
    let mut bond = |i: usize, j: usize, n_ij: i64, n_ji: i64| {
        arrows[(i - 1) * rank + (j - 1)] = n_ij;
        arrows[(j - 1) * rank + (i - 1)] = n_ji;
    };
    match family {
        Family::A => (1..rank).for_each(|k| bond(k, k + 1, 1, 1)),
        Family::B => {
            bond(1, 2, 2, 1);
            (2..rank).for_each(|k| bond(k, k + 1, 1, 1));
        }
        Family::C => {
            bond(1, 2, 1, 2);
            (2..rank).for_each(|k| bond(k, k + 1, 1, 1));
        }
        Family::D => {
            (1..rank - 2).for_each(|k| bond(k, k + 1, 1, 1));
            bond(rank - 2, rank - 1, 1, 1);
            bond(rank - 2, rank, 1, 1);
        }
        Family::E => {
            (1..rank - 1).for_each(|k| bond(k, k + 1, 1, 1));
            bond(3, rank, 1, 1);
        }
        Family::F => {
            bond(1, 2, 1, 1);
            bond(3, 2, 2, 1);
            bond(3, 4, 1, 1);
        }
        Family::G => bond(1, 2, 3, 1),
    }
    Ok(DynkinDiagram {
        family,
        rank,
        arrows,
    })
}

/// Every finite-type diagram up to the given rank, ordered by family then rank.
pub fn all_diagrams(max_rank: usize) -> Vec<DynkinDiagram> {
    let mut out = Vec::new();
    for family in Family::ALL {
        for rank in 1..=max_rank {
            if let Ok(d) = build_diagram(family, rank) {
                out.push(d);
            }
        }
    }
    out
}

/// Reverse every arrow. `B_n` and `C_n` swap families.
pub fn dual(d: &DynkinDiagram) -> DynkinDiagram {
    let r = d.rank;
    let mut arrows = vec![0i64; r * r];
    for i in 0..r {
        for j in 0..r {
            arrows[i * r + j] = d.arrows[j * r + i];
        }
    }
    let family = match d.family {
        Family::B => Family::C,
        Family::C => Family::B,
        f => f,
    };
    DynkinDiagram {
        family,
        rank: r,
        arrows,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CartanMatrix {
    rank: usize,
    entries: Vec<i64>,
}

impl CartanMatrix {
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let rank = rows.len();
        if rows.iter().any(|r| r.len() != rank) {
            return Err(Error::InvalidDiagram("Cartan matrix must be square".into()));
        }
        let m = CartanMatrix {
            rank,
            entries: rows.concat(),
        };
        m.check_invariants()?;
        Ok(m)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Entry `A_{ij}` (1-based).
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[(i - 1) * self.rank + (j - 1)]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.rank).map(<[i64]>::to_vec).collect()
    }

    pub fn transpose(&self) -> CartanMatrix {
        let r = self.rank;
        let mut entries = vec![0; r * r];
        for i in 0..r {
            for j in 0..r {
                entries[i * r + j] = self.entries[j * r + i];
            }
        }
        CartanMatrix { rank: r, entries }
    }

    pub fn check_invariants(&self) -> Result<()> {
        for i in 1..=self.rank {
            if self.get(i, i) != 2 {
                return Err(Error::InvalidDiagram(format!("A_{i}{i} != 2")));
            }
            for j in 1..=self.rank {
                if i == j {
                    continue;
                }
                let (a, b) = (self.get(i, j), self.get(j, i));
                if a > 0 || (a == 0) != (b == 0) || !(0..=3).contains(&(a * b)) {
                    return Err(Error::InvalidDiagram(format!(
                        "bad off-diagonal pair A_{i}{j}={a}, A_{j}{i}={b}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// `<beta, alpha_i^vee> = sum_j beta_j A_{ij}`. Panics when `i` is out of range.
    pub fn pairing(&self, beta: &[i64], i: usize) -> i64 {
        let row = &self.entries[(i - 1) * self.rank..i * self.rank];
        checked_dot(beta, row)
    }

    /// `s_i(beta) = beta - <beta, alpha_i^vee> alpha_i`.
    pub fn reflect(&self, i: usize, beta: &[i64]) -> Vec<i64> {
        let k = self.pairing(beta, i);
        let mut out = beta.to_vec();
        out[i - 1] = out[i - 1].checked_sub(k).expect("integer overflow");
        out
    }
}

pub(crate) fn checked_dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter()
        .zip(b)
        .try_fold(0i64, |acc, (&x, &y)| acc.checked_add(x.checked_mul(y)?))
        .expect("integer overflow")
}

pub fn cartan_matrix(d: &DynkinDiagram) -> CartanMatrix {
    let r = d.rank;
    let entries = (0..r * r)
        .map(|k| if k / r == k % r { 2 } else { -d.arrows[k] })
        .collect();
    CartanMatrix { rank: r, entries }
}

/// Coefficients of a root in the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RootVector(pub Vec<i64>);

impl RootVector {
    pub fn zero(rank: usize) -> Self {
        RootVector(vec![0; rank])
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i - 1] = 1;
        RootVector(v)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn is_negative(&self) -> bool {
        self.0.iter().all(|&c| c <= 0) && self.0.iter().any(|&c| c < 0)
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn neg(&self) -> Self {
        RootVector(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &RootVector) -> Self {
        RootVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_add(*b).expect("integer overflow"))
                .collect(),
        )
    }
}

impl fmt::Display for RootVector {
    /// Renders as e.g. `2a1+a2`; the zero vector is `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let mag = c.abs();
            let coef = if mag == 1 { String::new() } else { mag.to_string() };
            write!(f, "{sign}{coef}a{}", k + 1)?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn check_vertex(i: usize, rank: usize) -> Result<()> {
    if i == 0 || i > rank {
        Err(Error::IndexOutOfRange { vertex: i, rank })
    } else {
        Ok(())
    }
}

pub fn coroot_pairing(beta: &RootVector, i: usize, a: &CartanMatrix) -> Result<i64> {
    check_vertex(i, a.rank())?;
    if beta.rank() != a.rank() {
        return Err(Error::ShapeMismatch {
            got: beta.rank(),
            rank: a.rank(),
        });
    }
    Ok(a.pairing(&beta.0, i))
}

pub fn simple_reflection(i: usize, beta: &RootVector, a: &CartanMatrix) -> Result<RootVector> {
    coroot_pairing(beta, i, a)?;
    Ok(RootVector(a.reflect(i, &beta.0)))
}

/// Positive roots sorted by height, then by decreasing coefficients.
pub fn positive_roots(d: &DynkinDiagram) -> Vec<RootVector> {
    let a = cartan_matrix(d);
    let r = d.rank();
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue = VecDeque::new();
    for i in 1..=r {
        let v = RootVector::simple(r, i).0;
        seen.insert(v.clone());
        queue.push_back(v);
    }
    while let Some(beta) = queue.pop_front() {
        for i in 1..=r {
            let image = a.reflect(i, &beta);
            if image.iter().all(|&c| c >= 0) && seen.insert(image.clone()) {
                queue.push_back(image);
            }
        }
    }
    let mut roots: Vec<RootVector> = seen.into_iter().map(RootVector).collect();
    roots.sort_by_key(|v| (v.height(), std::cmp::Reverse(v.0.clone())));
    roots
}

/// A diagram together with its Cartan matrix and indexed positive roots.
#[derive(Debug, Clone)]
pub struct RootSystem {
    diagram: DynkinDiagram,
    cartan: CartanMatrix,
    positive: Vec<RootVector>,
    index: HashMap<Vec<i64>, usize>,
}

impl RootSystem {
    pub fn new(d: &DynkinDiagram) -> Self {
        let positive = positive_roots(d);
        let index = positive
            .iter()
            .enumerate()
            .map(|(k, v)| (v.0.clone(), k))
            .collect();
        RootSystem {
            diagram: d.clone(),
            cartan: cartan_matrix(d),
            positive,
            index,
        }
    }

    pub fn diagram(&self) -> &DynkinDiagram {
        &self.diagram
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.diagram.rank()
    }

    pub fn positive_roots(&self) -> &[RootVector] {
        &self.positive
    }

    pub fn is_root(&self, v: &[i64]) -> bool {
        self.index.contains_key(v) || self.index.contains_key(&v.iter().map(|c| -c).collect::<Vec<_>>())
    }

    pub fn root_index(&self, v: &[i64]) -> Option<usize> {
        self.index.get(v).copied()
    }

    /// Positive roots supported on `subset` (1-based vertices).
    pub fn parabolic_positive_roots(&self, subset: &BTreeSet<usize>) -> Vec<RootVector> {
        self.positive
            .iter()
            .filter(|v| {
                v.0.iter()
                    .enumerate()
                    .all(|(k, &c)| c == 0 || subset.contains(&(k + 1)))
            })
            .cloned()
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn d(f: Family, n: usize) -> DynkinDiagram {
        build_diagram(f, n).unwrap()
    }

    #[test]
    fn builds_listed_examples() {
        let a4 = d(Family::A, 4);
        assert_eq!(a4.edges(), vec![(1, 2), (2, 3), (3, 4)]);
        assert!(a4.edges().iter().all(|&(i, j)| a4.arrows(i, j) == 1));
        let b2 = d(Family::B, 2);
        assert_eq!((b2.arrows(1, 2), b2.arrows(2, 1)), (2, 1));
        assert!(d(Family::A, 1).edges().is_empty());
        assert_eq!(d(Family::D, 4).neighbors(2), vec![1, 3, 4]);
        assert_eq!(d(Family::E, 6).neighbors(3), vec![2, 4, 6]);
    }

    #[test]
    fn illegal_ranks() {
        for (f, n) in [
            (Family::A, 0),
            (Family::B, 1),
            (Family::D, 3),
            (Family::E, 5),
            (Family::E, 9),
            (Family::F, 3),
            (Family::G, 3),
        ] {
            assert!(matches!(build_diagram(f, n), Err(Error::IllegalRank { .. })));
        }
    }

    #[test]
    fn cartan_examples() {
        let rows = |f, n| cartan_matrix(&d(f, n)).rows();
        assert_eq!(rows(Family::A, 2), vec![vec![2, -1], vec![-1, 2]]);
        assert_eq!(rows(Family::B, 2), vec![vec![2, -2], vec![-1, 2]]);
        assert_eq!(rows(Family::G, 2), vec![vec![2, -3], vec![-1, 2]]);
    }

    #[test]
    fn cartan_invariants_all_families() {
        for dg in all_diagrams(8) {
            cartan_matrix(&dg).check_invariants().unwrap();
        }
    }

    #[test]
    fn duals() {
        for n in 2..=6 {
            assert_eq!(dual(&d(Family::B, n)), d(Family::C, n));
            assert_eq!(dual(&d(Family::A, n)), d(Family::A, n));
        }
        let f4 = d(Family::F, 4);
        let f4d = dual(&f4);
        assert_eq!(f4d.family(), Family::F);
        assert_eq!((f4d.arrows(2, 3), f4d.arrows(3, 2)), (2, 1));
        for dg in all_diagrams(8) {
            assert_eq!(dual(&dual(&dg)), dg);
            assert_eq!(cartan_matrix(&dual(&dg)), cartan_matrix(&dg).transpose());
        }
    }

    #[test]
    fn pairing_examples() {
        let a2 = cartan_matrix(&d(Family::A, 2));
        assert_eq!(coroot_pairing(&RootVector(vec![1, 0]), 1, &a2).unwrap(), 2);
        assert_eq!(coroot_pairing(&RootVector(vec![1, 2]), 1, &a2).unwrap(), 0);
        let b2 = cartan_matrix(&d(Family::B, 2));
        assert_eq!(coroot_pairing(&RootVector(vec![2, 1]), 2, &b2).unwrap(), 0);
        assert!(matches!(
            coroot_pairing(&RootVector(vec![1, 0]), 3, &a2),
            Err(Error::IndexOutOfRange { vertex: 3, rank: 2 })
        ));
    }

    #[test]
    fn reflection_examples() {
        let a2 = cartan_matrix(&d(Family::A, 2));
        let s = |i, v: Vec<i64>, a: &CartanMatrix| simple_reflection(i, &RootVector(v), a).unwrap().0;
        assert_eq!(s(1, vec![1, 0], &a2), vec![-1, 0]);
        assert_eq!(s(1, vec![0, 1], &a2), vec![1, 1]);
        let b2 = cartan_matrix(&d(Family::B, 2));
        assert_eq!(s(1, vec![0, 1], &b2), vec![2, 1]);
    }

    #[test]
    fn positive_root_examples() {
        let b2: Vec<_> = positive_roots(&d(Family::B, 2)).into_iter().map(|v| v.0).collect();
        assert_eq!(b2, vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![2, 1]]);
        assert_eq!(positive_roots(&d(Family::A, 1)), vec![RootVector(vec![1])]);
    }

    // e_i - e_j with i < j, expanded as a_i + ... + a_{j-1}
    fn type_a_oracle(n: usize) -> BTreeSet<Vec<i64>> {
        let mut out = BTreeSet::new();
        for i in 0..=n {
            for j in (i + 1)..=n {
                let mut v = vec![0; n];
                v[i..j].iter_mut().for_each(|c| *c = 1);
                out.insert(v);
            }
        }
        out
    }

    #[test]
    fn type_a_roots_match_oracle() {
        for n in 1..=6 {
            let got: BTreeSet<_> = positive_roots(&d(Family::A, n)).into_iter().map(|v| v.0).collect();
            assert_eq!(got.len(), n * (n + 1) / 2);
            assert_eq!(got, type_a_oracle(n));
        }
    }

    #[test]
    fn root_counts_by_type() {
        let expected = [
            (Family::B, 3, 9),
            (Family::C, 4, 16),
            (Family::D, 4, 12),
            (Family::D, 5, 20),
            (Family::E, 6, 36),
            (Family::E, 7, 63),
            (Family::E, 8, 120),
            (Family::F, 4, 24),
            (Family::G, 2, 6),
        ];
        for (f, n, count) in expected {
            assert_eq!(positive_roots(&d(f, n)).len(), count, "{f}{n}");
        }
    }

    #[test]
    fn reflections_permute_signed_roots() {
        for dg in all_diagrams(4) {
            let a = cartan_matrix(&dg);
            let roots: BTreeSet<_> = positive_roots(&dg).into_iter().map(|v| v.0).collect();
            for i in dg.vertices() {
                let simple = RootVector::simple(dg.rank(), i).0;
                let mut image = BTreeSet::new();
                for r in &roots {
                    let s = a.reflect(i, r);
                    if *r == simple {
                        assert_eq!(s, simple.iter().map(|c| -c).collect::<Vec<_>>());
                    } else {
                        image.insert(s);
                    }
                }
                let mut rest = roots.clone();
                rest.remove(&simple);
                assert_eq!(image, rest, "{dg} s_{i}");
            }
        }
    }

    #[test]
    fn json_round_trip() {
        for dg in all_diagrams(5) {
            let text = serde_json::to_string(&dg).unwrap();
            let back: DynkinDiagram = serde_json::from_str(&text).unwrap();
            assert_eq!(back, dg);
        }
        let text = r#"{"family":"B","rank":2,"arrows":[[1,2,2],[2,1,1]]}"#;
        assert_eq!(serde_json::from_str::<DynkinDiagram>(text).unwrap(), d(Family::B, 2));
        let f4d = serde_json::to_string(&dual(&d(Family::F, 4))).unwrap();
        assert!(serde_json::from_str::<DynkinDiagram>(&f4d).is_ok());
    }

    #[test]
    fn json_rejects_bad_shapes() {
        for text in [
            r#"{"family":"B","rank":2,"arrows":[[1,2,1],[2,1,2]]}"#,
            r#"{"family":"A","rank":3,"arrows":[[1,2,1],[2,1,1]]}"#,
            r#"{"family":"A","rank":2,"arrows":[[1,2,1]]}"#,
            r#"{"family":"A","rank":2,"arrows":[[1,3,1],[3,1,1]]}"#,
        ] {
            assert!(serde_json::from_str::<DynkinDiagram>(text).is_err(), "{text}");
        }
    }

    #[test]
    fn root_display() {
        assert_eq!(RootVector(vec![2, 1]).to_string(), "2a1+a2");
        assert_eq!(RootVector(vec![-1, 0]).to_string(), "-a1");
        assert_eq!(RootVector(vec![0, 0]).to_string(), "0");
    }

    proptest! {
        #[test]
        fn roots_never_mixed_sign(idx in 0usize..30) {
            let all = all_diagrams(6);
            let dg = &all[idx % all.len()];
            for r in positive_roots(dg) {
                prop_assert!(r.is_positive());
            }
        }

        #[test]
        fn reflection_is_involution(idx in 0usize..30, coeffs in proptest::collection::vec(-5i64..6, 6), i in 1usize..7) {
            let all = all_diagrams(6);
            let dg = &all[idx % all.len()];
            let a = cartan_matrix(dg);
            let beta = RootVector(coeffs[..dg.rank()].to_vec());
            let i = 1 + (i - 1) % dg.rank();
            let once = simple_reflection(i, &beta, &a).unwrap();
            prop_assert_eq!(simple_reflection(i, &once, &a).unwrap(), beta);
        }
    }
}
