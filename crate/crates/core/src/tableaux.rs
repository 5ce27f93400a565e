//! Standard Young tableaux built from plays on `A_{n-1}` with one source `k`.
//!
//! Cells are `(row, column)`, 1-based, inside the `k x (n-k)` rectangle. A move
//! on `k` fills a cell on the main diagonal (`row == column`), a move on a
//! vertex left of `k` a cell below it, one right of `k` a cell above it. The
//! cell must have its left and upper neighbours filled already.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::correspondence::{enumerate_plays, verify_play, word_of_play};
use crate::error::{Error, Result};
use crate::rootsystem::{build_diagram, DynkinDiagram, Family};
use crate::weyl::WeylWord;

/// Weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: impl Into<Vec<usize>>) -> Result<Self> {
        let mut parts = parts.into();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::Parse(format!("{parts:?} is not a partition")));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn fits_in(&self, rows: usize, cols: usize) -> bool {
        self.0.len() <= rows && self.0.iter().all(|&p| p <= cols)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A filling stored row by row. JSON is the list of rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Self {
        Tableau { rows }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Row lengths; not necessarily a partition for a non-standard filling.
    pub fn shape(&self) -> Partition {
        Partition(self.rows.iter().map(Vec::len).collect())
    }

    pub fn cell_count(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn get(&self, row: usize, col: usize) -> Option<usize> {
        self.rows.get(row.checked_sub(1)?)?.get(col.checked_sub(1)?).copied()
    }

    pub fn to_ascii(&self) -> String {
        if self.rows.is_empty() {
            return "(empty)\n".to_string();
        }
        let width = self.cell_count().to_string().len();
        let border = |cells: usize| format!("+{}\n", format!("{}+", "-".repeat(width + 2)).repeat(cells));
        let mut out = border(self.rows[0].len());
        for row in &self.rows {
            out.push('|');
            for e in row {
                out.push_str(&format!(" {e:>width$} |"));
            }
            out.push('\n');
            out.push_str(&border(row.len()));
        }
        out
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| format!("[{}]", r.iter().map(usize::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

impl Serialize for Tableau {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Tableau {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(Tableau::from_rows(Vec::deserialize(d)?))
    }
}

/// Rows and columns strictly increase, row lengths weakly decrease, and the
/// entries are exactly `1..=cells`.
pub fn is_standard(t: &Tableau) -> bool {
    let rows = t.rows();
    if rows.iter().any(Vec::is_empty) || rows.windows(2).any(|w| w[0].len() < w[1].len()) {
        return false;
    }
    let rows_ok = rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
    let cols_ok = rows
        .windows(2)
        .all(|w| w[1].iter().zip(&w[0]).all(|(below, above)| above < below));
    let entries: BTreeSet<usize> = rows.iter().flatten().copied().collect();
    let n = t.cell_count();
    rows_ok && cols_ok && entries.len() == n && entries.iter().copied().eq(1..=n)
}

fn check_parameters(n: usize, k: usize) -> Result<DynkinDiagram> {
    if n < 2 {
        return Err(Error::IllegalRank {
            family: "A".into(),
            rank: n.saturating_sub(1),
        });
    }
    if k == 0 || k >= n {
        return Err(Error::IndexOutOfRange { vertex: k, rank: n - 1 });
    }
    build_diagram(Family::A, n - 1)
}

/// One-line notation of the permutation `s_{a1} ... s_{am}` in `S_n`.
fn one_line(word: &WeylWord, n: usize) -> Result<Vec<usize>> {
    let mut perm: Vec<usize> = (1..=n).collect();
    for &a in word.letters() {
        if a == 0 || a >= n {
            return Err(Error::IndexOutOfRange { vertex: a, rank: n - 1 });
        }
        perm.swap(a - 1, a);
    }
    Ok(perm)
}

fn inversions(perm: &[usize]) -> usize {
    (0..perm.len())
        .flat_map(|i| (i + 1..perm.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| perm[i] > perm[j])
        .count()
}

/// Shape of a Grassmannian permutation with its only descent at `k`:
/// `part_i = w(k-i+1) - (k-i+1)`, zero parts dropped.
pub fn grassmannian_shape(word: &WeylWord, k: usize, n: usize) -> Result<Partition> {
    check_parameters(n, k)?;
    let perm = one_line(word, n)?;
    if inversions(&perm) != word.len() {
        return Err(Error::NotReduced(word.0.clone()));
    }
    if (1..n).any(|p| p != k && perm[p - 1] > perm[p]) {
        return Err(Error::NotGrassmannian(word.0.clone()));
    }
    let parts: Vec<usize> = (1..=k).map(|i| perm[k - i] - (k - i + 1)).collect();
    Partition::new(parts)
}

/// How a move picks its cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum PlacementRule {
    /// The cell on the diagonal `col - row = vertex - k`.
    #[default]
    Diagonal,
    /// The first cell in row-major order strictly below, on, or strictly
    /// above the main diagonal. Merges distinct plays on the `2 x 4` rectangle.
    RegionScan,
}

impl PlacementRule {
    fn admits(self, row: usize, col: usize, vertex: usize, k: usize) -> bool {
        match self {
            PlacementRule::Diagonal => col as i64 - row as i64 == vertex as i64 - k as i64,
            PlacementRule::RegionScan => match vertex.cmp(&k) {
                Ordering::Equal => row == col,
                Ordering::Less => row > col,
                Ordering::Greater => row < col,
            },
        }
    }
}

/// Fill the rectangle step by step from a valid play.
pub fn play_to_tableau(moves: &[usize], k: usize, n: usize) -> Result<Tableau> {
    play_to_tableau_with(PlacementRule::default(), moves, k, n)
}

pub fn play_to_tableau_with(rule: PlacementRule, moves: &[usize], k: usize, n: usize) -> Result<Tableau> {
    let d = check_parameters(n, k)?;
    if let Some(step) = moves.iter().position(|&v| v == 0 || v >= n) {
        return Err(Error::InvalidPlay {
            step: step + 1,
            reason: format!("vertex {} is not on A_{}", moves[step], n - 1),
        });
    }
    verify_play(&d, &BTreeSet::from([k]), moves).map_err(|e| match e {
        Error::InvalidMoveAt { step, vertex } => Error::InvalidPlay {
            step,
            reason: format!("vertex {vertex} is not sad"),
        },
        Error::NotMinRep(_) => Error::InvalidPlay {
            step: moves.len(),
            reason: "play does not give a minimal coset representative".into(),
        },
        other => other,
    })?;

    let (rows, cols) = (k, n - k);
    let mut grid = vec![vec![0usize; cols]; rows];
    for (idx, &v) in moves.iter().enumerate() {
        let step = idx + 1;
        let cell = (1..=rows)
            .flat_map(|r| (1..=cols).map(move |c| (r, c)))
            .find(|&(r, c)| {
                rule.admits(r, c, v, k)
                    && grid[r - 1][c - 1] == 0
                    && (c == 1 || grid[r - 1][c - 2] != 0)
                    && (r == 1 || grid[r - 2][c - 1] != 0)
            })
            .ok_or(Error::PlacementImpossible { step })?;
        grid[cell.0 - 1][cell.1 - 1] = step;
    }

    let filled: Vec<Vec<usize>> = grid
        .into_iter()
        .map(|row| row.into_iter().take_while(|&e| e != 0).collect::<Vec<_>>())
        .filter(|row| !row.is_empty())
        .collect();
    let tableau = Tableau::from_rows(filled);
    let shape = grassmannian_shape(&word_of_play(moves), k, n)?;
    if tableau.shape() != shape || tableau.cell_count() != moves.len() {
        return Err(Error::PlacementImpossible { step: moves.len() });
    }
    Ok(tableau)
}

/// Tableau of every terminal play, paired with the play.
pub fn tableaux_by_play(n: usize, k: usize) -> Result<Vec<(Vec<usize>, Tableau)>> {
    tableaux_by_play_with(PlacementRule::default(), n, k)
}

pub fn tableaux_by_play_with(
    rule: PlacementRule,
    n: usize,
    k: usize,
) -> Result<Vec<(Vec<usize>, Tableau)>> {
    let d = check_parameters(n, k)?;
    enumerate_plays(&d, &BTreeSet::from([k]), true)?
        .into_iter()
        .map(|p| {
            let t = play_to_tableau_with(rule, &p.moves, k, n)?;
            Ok((p.moves, t))
        })
        .collect()
}

pub fn enumerate_tableaux(n: usize, k: usize) -> Result<BTreeSet<Tableau>> {
    Ok(tableaux_by_play(n, k)?.into_iter().map(|(_, t)| t).collect())
}
