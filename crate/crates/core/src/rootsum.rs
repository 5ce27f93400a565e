//! Root-sum identities computed from single-source games.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::game::{board_from_diagram, run, Configuration, Limits, Mode, Strategy};
use crate::rootsystem::{DynkinDiagram, RootSystem, RootVector};
use crate::weyl::ParabolicSubset;

fn terminal(d: &DynkinDiagram, sources: impl IntoIterator<Item = usize>) -> Result<Configuration> {
    let board = board_from_diagram(d, Mode::Modified, sources)?;
    let trace = run(
        &board,
        &Configuration::zero(d.rank()),
        Strategy::FirstSad,
        Limits::for_board(&board),
    )?;
    Ok(trace.current().clone())
}

/// Terminal configuration of the game with a single source at `j`.
pub fn single_vertex_final(d: &DynkinDiagram, j: usize) -> Result<Configuration> {
    terminal(d, [j])
}

/// Sum of the single-source terminal configurations.
pub fn positive_root_sum(d: &DynkinDiagram) -> Result<RootVector> {
    let mut sum = RootVector::zero(d.rank());
    for j in d.vertices() {
        sum = sum.add(&RootVector(single_vertex_final(d, j)?.0));
    }
    Ok(sum)
}

/// `sum` of the positive roots, straight from the root list.
pub fn direct_root_sum(d: &DynkinDiagram) -> RootVector {
    RootSystem::new(d)
        .positive_roots()
        .iter()
        .fold(RootVector::zero(d.rank()), |acc, r| acc.add(r))
}

/// `j -> I(w_j)`, `w_j` being the longest element of `W^J` for `J = S \ {j}`.
pub fn inversion_partition(d: &DynkinDiagram) -> BTreeMap<usize, Vec<RootVector>> {
    let rs = RootSystem::new(d);
    let w0 = rs.longest_element(&ParabolicSubset::full(d.rank()));
    d.vertices()
        .map(|j| {
            let sub = ParabolicSubset::new([j], d.rank())
                .expect("vertex in range")
                .complement(d.rank());
            let (top, _) = rs.parabolic_decompose(&w0, &sub);
            (j, rs.inversion_set(&top))
        })
        .collect()
}

/// Whether the blocks of [`inversion_partition`] are pairwise disjoint.
pub fn blocks_disjoint(blocks: &BTreeMap<usize, Vec<RootVector>>) -> bool {
    let mut seen = BTreeSet::new();
    blocks.values().flatten().all(|r| seen.insert(r.clone()))
}

/// Whether the blocks of [`inversion_partition`] cover every positive root.
pub fn blocks_cover(d: &DynkinDiagram, blocks: &BTreeMap<usize, Vec<RootVector>>) -> bool {
    let union: BTreeSet<&RootVector> = blocks.values().flatten().collect();
    let all = RootSystem::new(d);
    all.positive_roots().iter().all(|r| union.contains(r))
}

/// Terminal configuration with every vertex a source, against the sum of the
/// single-source terminals.
pub fn full_modification_identity(d: &DynkinDiagram) -> Result<bool> {
    if !d.is_simply_laced() {
        return Err(Error::NotSimplyLaced(d.name()));
    }
    let (all, sum) = full_modification_sides(d)?;
    Ok(all == sum)
}

/// `(c_S, sum_j c_j)` for any diagram.
pub fn full_modification_sides(d: &DynkinDiagram) -> Result<(Configuration, Configuration)> {
    let all = terminal(d, d.vertices())?;
    let sum = positive_root_sum(d)?;
    Ok((all, Configuration(sum.0)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HeightProfile {
    pub per_vertex: BTreeMap<usize, Configuration>,
    /// Total chips of each single-source terminal configuration.
    pub heights: BTreeMap<usize, i64>,
}

impl HeightProfile {
    /// Heights shifted down by one.
    pub fn offsets(&self) -> BTreeMap<usize, i64> {
        self.heights.iter().map(|(&j, &h)| (j, h - 1)).collect()
    }
}

pub fn height_profile(d: &DynkinDiagram) -> Result<HeightProfile> {
    let mut per_vertex = BTreeMap::new();
    let mut heights = BTreeMap::new();
    for j in d.vertices() {
        let c = single_vertex_final(d, j)?;
        heights.insert(j, c.total());
        per_vertex.insert(j, c);
    }
    Ok(HeightProfile {
        per_vertex,
        heights,
    })
}
