//! Orbit combinatorics of the ten components of the five split fibres of a
//! conic bundle structure on a cubic surface over `C(t)`.
//!
//! If the Picard rank of the surface exceeded 2, some Galois-invariant proper
//! subset of the components would consist of pairwise disjoint curves. Since
//! the group acts through the orbit partition, invariant subsets are unions of
//! orbits and a brute-force search over them settles the question.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveSystem {
    size: usize,
    orbits: Vec<Vec<usize>>,
    /// Unordered pairs `(i, j)` with `i < j`.
    meets: BTreeSet<(usize, usize)>,
}

impl CurveSystem {
    /// Curves are indexed `0..size`. `orbits` must partition the index set;
    /// `meets` lists intersecting pairs in either order.
    pub fn new(
        size: usize,
        orbits: Vec<Vec<usize>>,
        meets: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        if orbits.len() > 63 {
            return Err(Error::CurveSystem(format!("{} orbits is too many", orbits.len())));
        }
        let mut seen = vec![false; size];
        for &i in orbits.iter().flatten() {
            match seen.get_mut(i) {
                None => return Err(Error::CurveSystem(format!("curve {i} out of range"))),
                Some(true) => return Err(Error::CurveSystem(format!("curve {i} in two orbits"))),
                Some(s) => *s = true,
            }
        }
        if let Some(i) = seen.iter().position(|s| !s) {
            return Err(Error::CurveSystem(format!("curve {i} in no orbit")));
        }
        if orbits.iter().any(Vec::is_empty) {
            return Err(Error::CurveSystem("empty orbit".into()));
        }
        let mut pairs = BTreeSet::new();
        for (i, j) in meets {
            if i == j {
                return Err(Error::CurveSystem(format!("self-intersection pair at {i}")));
            }
            if i >= size || j >= size {
                return Err(Error::CurveSystem(format!("pair ({i}, {j}) out of range")));
            }
            pairs.insert((i.min(j), i.max(j)));
        }
        Ok(Self { size, orbits, meets: pairs })
    }

    /// The ten components `F~1..F~5` (indices 0..5) and `F-1..F-5`
    /// (indices 5..10). Galois orbits are `{F~i, F-i : i <= 3}`,
    /// `{F~4, F-4}` and `{F~5, F-5}`. The two components of one split fibre
    /// meet; components of different fibres are disjoint.
    pub fn split_fibres() -> Self {
        let orbits = vec![vec![0, 1, 2, 5, 6, 7], vec![3, 8], vec![4, 9]];
        Self::new(10, orbits, (0..5).map(|i| (i, i + 5))).expect("well-formed")
    }

    pub fn label(i: usize) -> String {
        if i < 5 {
            format!("F~{}", i + 1)
        } else {
            format!("F-{}", i - 4)
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    pub fn meeting_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.meets.iter().copied()
    }

    pub fn meets(&self, i: usize, j: usize) -> bool {
        self.meets.contains(&(i.min(j), i.max(j)))
    }

    pub fn without_meeting(&self, i: usize, j: usize) -> Self {
        let mut out = self.clone();
        out.meets.remove(&(i.min(j), i.max(j)));
        out
    }

    /// Replaces orbit `k` by singleton orbits.
    pub fn with_split_orbit(&self, k: usize) -> Self {
        let mut out = self.clone();
        let block = out.orbits.remove(k);
        out.orbits.extend(block.into_iter().map(|i| vec![i]));
        out
    }

    fn pairwise_disjoint(&self, curves: &[usize]) -> bool {
        curves
            .iter()
            .enumerate()
            .all(|(k, &i)| curves[k + 1..].iter().all(|&j| !self.meets(i, j)))
    }

    /// Every nonempty proper union of orbits whose curves are pairwise
    /// disjoint, each sorted, listed by orbit bitmask.
    pub fn invariant_disjoint_subsets(&self) -> Vec<Vec<usize>> {
        let m = self.orbits.len();
        let full = (1u64 << m) - 1;
        (1..full)
            .filter_map(|mask| {
                let mut curves: Vec<usize> = (0..m)
                    .filter(|k| mask >> k & 1 == 1)
                    .flat_map(|k| self.orbits[k].iter().copied())
                    .collect();
                curves.sort_unstable();
                self.pairwise_disjoint(&curves).then_some(curves)
            })
            .collect()
    }
}

pub fn invariant_disjoint_subsets(sys: &CurveSystem) -> Vec<Vec<usize>> {
    sys.invariant_disjoint_subsets()
}

/// True when the split-fibre system admits no invariant disjoint subset, so
/// the generic fibre keeps Picard rank 2.
pub fn picard_rank_two_witness() -> bool {
    CurveSystem::split_fibres().invariant_disjoint_subsets().is_empty()
}
