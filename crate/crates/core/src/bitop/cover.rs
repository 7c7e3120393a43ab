//! Pairwise soft covers, exact minimum subcovers and the slice transfer of
//! compactness.

use serde::Serialize;

use crate::bits::SubsetBits;
use crate::error::{Error, Result};
use crate::sets::SoftSet;

use super::{Origin, SoftBitopSpace};

/// A target `H ⊆_s F` and a list of soft opens, each tagged with the
/// topology it is claimed to belong to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverProblem {
    pub target: SoftSet,
    pub cover: Vec<(SoftSet, Origin)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverReport {
    pub holds: bool,
    /// First uncovered `(parameter, element)` of the target.
    pub uncovered: Option<(usize, usize)>,
}

fn flatten_problem(
    space: &SoftBitopSpace,
    problem: &CoverProblem,
) -> Result<(SubsetBits, Vec<SubsetBits>)> {
    let layout = space.index().layout();
    let target = layout.flatten(&problem.target)?;
    let sets = problem
        .cover
        .iter()
        .enumerate()
        .map(|(i, (h, which))| {
            let flat = layout.flatten(h)?;
            if !space.tau(*which).flat().is_open(&flat) {
                return Err(Error::NotMember { index: i });
            }
            Ok(flat)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((target, sets))
}

/// `H ⊆_s ⋃ C`, after checking each member against its declared topology.
pub fn verify_cover(space: &SoftBitopSpace, problem: &CoverProblem) -> Result<CoverReport> {
    let (target, sets) = flatten_problem(space, problem)?;
    let mut union = SubsetBits::new();
    for s in &sets {
        union.union_with(s);
    }
    let uncovered = target.difference(&union).first().map(|p| {
        let layout = space.index().layout();
        let (t, q) = layout.locate(p);
        (t, layout.element(t, q))
    });
    Ok(CoverReport {
        holds: uncovered.is_none(),
        uncovered,
    })
}

/// Indices of a minimum-cardinality subfamily covering `H`; among minimum
/// subfamilies, the lexicographically first index list. `None` when the
/// whole family does not cover.
pub fn minimal_subcover(
    space: &SoftBitopSpace,
    problem: &CoverProblem,
) -> Result<Option<Vec<usize>>> {
    let (target, sets) = flatten_problem(space, problem)?;
    Ok(minimal_subcover_flat(&target, &sets))
}

/// Exact minimum set cover by branch and bound.
///
/// Depth-first, taking each set before skipping it, and only replacing the
/// incumbent by strictly smaller covers; the first minimum reached is the
/// lexicographically smallest index list.
pub fn minimal_subcover_flat(target: &SubsetBits, sets: &[SubsetBits]) -> Option<Vec<usize>> {
    let sets: Vec<SubsetBits> = sets.iter().map(|s| s.intersection(target)).collect();
    let n = sets.len();
    let mut reach = vec![SubsetBits::new(); n + 1];
    let mut widest = vec![0usize; n + 1];
    for i in (0..n).rev() {
        reach[i] = reach[i + 1].union(&sets[i]);
        widest[i] = widest[i + 1].max(sets[i].len());
    }
    if !target.is_subset(&reach[0]) {
        return None;
    }

    struct Search<'a> {
        sets: &'a [SubsetBits],
        reach: &'a [SubsetBits],
        widest: &'a [usize],
        chosen: Vec<usize>,
        best: Option<Vec<usize>>,
    }

    impl Search<'_> {
        fn run(&mut self, i: usize, left: &SubsetBits) {
            if left.is_empty() {
                if self
                    .best
                    .as_ref()
                    .is_none_or(|b| self.chosen.len() < b.len())
                {
                    self.best = Some(self.chosen.clone());
                }
                return;
            }
            if i == self.sets.len() || !left.is_subset(&self.reach[i]) || self.widest[i] == 0 {
                return;
            }
            let lower = left.len().div_ceil(self.widest[i]);
            if let Some(b) = &self.best {
                if self.chosen.len() + lower >= b.len() {
                    return;
                }
            }
            if !self.sets[i].is_disjoint(left) {
                self.chosen.push(i);
                self.run(i + 1, &left.difference(&self.sets[i]));
                self.chosen.pop();
            }
            self.run(i + 1, left);
        }
    }

    let mut search = Search {
        sets: &sets,
        reach: &reach,
        widest: &widest,
        chosen: Vec::new(),
        best: None,
    };
    search.run(0, target);
    search.best
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompactnessTransferReport {
    /// Slice covers by minimal neighbourhoods, lifted to cylinders, reduced
    /// to a finite soft subcover and projected back still cover each
    /// slice. `None` unless both topologies are canonical.
    pub cylinder_lift: Option<bool>,
    /// Per-slice subcovers of the cover by minimal soft opens combine into a
    /// finite soft subcover of `H`.
    pub slice_union: bool,
    /// Size of the combined soft subcover.
    pub subcover_size: usize,
    pub notes: Vec<String>,
}

impl CompactnessTransferReport {
    pub fn holds(&self) -> bool {
        self.cylinder_lift.unwrap_or(true) && self.slice_union
    }
}

/// Runs both compactness transfers between the soft space and its slices on
/// the target `h`.
pub fn slice_compactness_transfer(
    space: &SoftBitopSpace,
    h: &SoftSet,
) -> Result<CompactnessTransferReport> {
    let layout = space.index().layout();
    let target = layout.flatten(h)?;
    let params = layout.params();
    let full = SubsetBits::full(layout.total());
    let mut notes = Vec::new();

    let cylinder_lift = if space.is_canonical() {
        let mut ok = true;
        for t in 0..params {
            let slice_target = layout.dense_section(&target, t);
            if slice_target.is_empty() {
                continue;
            }
            let mut slice_cover = Vec::new();
            for which in Origin::BOTH {
                let comp = space.tau(which).component(t);
                for p in &slice_target {
                    slice_cover.push((comp.neighborhood(p).clone(), which));
                }
            }
            let lifted: Vec<SubsetBits> = slice_cover
                .iter()
                .map(|(u, _)| {
                    let mut c = full.difference(&layout.block(t));
                    c.union_with(&layout.lift_section(t, u));
                    c
                })
                .collect();
            let members_ok = lifted
                .iter()
                .zip(&slice_cover)
                .all(|(c, (_, which))| space.tau(*which).flat().is_open(c));
            let projected = minimal_subcover_flat(&target, &lifted).map(|idx| {
                let mut u = SubsetBits::new();
                for i in idx {
                    u.union_with(&slice_cover[i].0);
                }
                u
            });
            ok &= members_ok && projected.is_some_and(|u| slice_target.is_subset(&u));
        }
        Some(ok)
    } else {
        notes.push("not canonical: cylinder lifting skipped".to_string());
        None
    };

    let mut cover = Vec::new();
    for which in Origin::BOTH {
        for p in &target {
            cover.push(space.tau(which).flat().neighborhood(p).clone());
        }
    }
    let mut chosen = SubsetBits::new();
    for t in 0..params {
        let slice_target = layout.dense_section(&target, t);
        let slice_sets: Vec<SubsetBits> =
            cover.iter().map(|c| layout.dense_section(c, t)).collect();
        match minimal_subcover_flat(&slice_target, &slice_sets) {
            Some(idx) => chosen.union_with(&idx.into_iter().collect()),
            None => notes.push(format!("slice #{t} not covered")),
        }
    }
    let mut union = SubsetBits::new();
    for i in &chosen {
        union.union_with(&cover[i]);
    }
    Ok(CompactnessTransferReport {
        cylinder_lift,
        slice_union: target.is_subset(&union),
        subcover_size: chosen.len(),
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;
    use crate::soft_topology::{SoftTopology, DEFAULT_CANONICAL_CAP};
    use proptest::prelude::*;

    fn d8_space() -> (SoftBitopSpace, gallery::D8Example) {
        let ex = gallery::d8_example();
        let space = SoftBitopSpace::new(ex.tau1.clone(), ex.tau2.clone()).unwrap();
        (space, ex)
    }

    #[test]
    fn d8_covers() {
        let (space, ex) = d8_space();
        let f = ex.carrier();
        let p = CoverProblem {
            target: f.clone(),
            cover: vec![(ex.f1.clone(), Origin::Tau1), (ex.f2.clone(), Origin::Tau1)],
        };
        assert!(verify_cover(&space, &p).unwrap().holds);
        assert_eq!(minimal_subcover(&space, &p).unwrap(), Some(vec![0, 1]));
        let p = CoverProblem {
            target: f.clone(),
            cover: vec![
                (ex.f1.clone(), Origin::Tau1),
                (ex.f2.clone(), Origin::Tau1),
                (f.clone(), Origin::Tau1),
            ],
        };
        assert_eq!(minimal_subcover(&space, &p).unwrap(), Some(vec![2]));
        let p = CoverProblem {
            target: f.clone(),
            cover: vec![(f.clone(), Origin::Tau1)],
        };
        assert_eq!(minimal_subcover(&space, &p).unwrap(), Some(vec![0]));
        let p = CoverProblem {
            target: f.clone(),
            cover: vec![(ex.f1.clone(), Origin::Tau1)],
        };
        let r = verify_cover(&space, &p).unwrap();
        assert_eq!(r.uncovered, Some((0, 1)));
        assert_eq!(minimal_subcover(&space, &p).unwrap(), None);
    }

    #[test]
    fn undeclared_member_is_rejected() {
        let (space, ex) = d8_space();
        let odd = SoftSet::new(8, vec![SubsetBits::singleton(0), SubsetBits::new()]).unwrap();
        let p = CoverProblem {
            target: ex.f1.clone(),
            cover: vec![(ex.f1.clone(), Origin::Tau1), (odd.clone(), Origin::Tau1)],
        };
        assert_eq!(verify_cover(&space, &p), Err(Error::NotMember { index: 1 }));
        let p = CoverProblem {
            target: ex.f1.clone(),
            cover: vec![(odd, Origin::Tau2)],
        };
        assert!(!verify_cover(&space, &p).unwrap().holds);
    }

    #[test]
    fn transfer_on_canonical_enlargement() {
        let ex = gallery::d8_example();
        let can = ex
            .tau1
            .canonical_enlargement(DEFAULT_CANONICAL_CAP)
            .unwrap();
        let space = SoftBitopSpace::new(can, ex.tau2.clone()).unwrap();
        let r = slice_compactness_transfer(&space, &ex.f1).unwrap();
        assert_eq!(r.cylinder_lift, Some(true));
        assert!(r.slice_union && r.holds());
        let phi = SoftSet::empty(8, 2);
        let r = slice_compactness_transfer(&space, &phi).unwrap();
        assert!(r.holds());
        assert_eq!(r.subcover_size, 0);
    }

    #[test]
    fn transfer_skips_lift_when_not_canonical() {
        let (space, ex) = d8_space();
        let r = slice_compactness_transfer(&space, &ex.f1).unwrap();
        assert_eq!(r.cylinder_lift, None);
        assert!(r.slice_union);
    }

    #[test]
    fn single_parameter_transfer() {
        let f = SoftSet::new(3, vec![SubsetBits::full(3)]).unwrap();
        let tau = SoftTopology::generated(
            &f,
            &[SoftSet::new(3, vec![SubsetBits::singleton(0)]).unwrap()],
        )
        .unwrap();
        let space = SoftBitopSpace::new(tau, SoftTopology::indiscrete(&f)).unwrap();
        let r = slice_compactness_transfer(&space, &f).unwrap();
        assert_eq!(r.cylinder_lift, Some(true));
        assert!(r.slice_union);
    }

    fn exhaustive_min(target: &SubsetBits, sets: &[SubsetBits]) -> Option<Vec<usize>> {
        let n = sets.len();
        let mut best: Option<Vec<usize>> = None;
        for mask in 0u32..(1 << n) {
            let idx: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            let mut u = SubsetBits::new();
            for &i in &idx {
                u.union_with(&sets[i]);
            }
            if target.is_subset(&u) {
                let better = match &best {
                    None => true,
                    Some(b) => idx.len() < b.len() || (idx.len() == b.len() && idx < *b),
                };
                if better {
                    best = Some(idx);
                }
            }
        }
        best
    }

    proptest! {
        #[test]
        fn branch_and_bound_is_exact(
            target in 0u64..(1 << 10),
            sets in proptest::collection::vec(0u64..(1 << 10), 0..=12),
        ) {
            let target = SubsetBits::from_u64(target);
            let sets: Vec<SubsetBits> = sets.into_iter().map(SubsetBits::from_u64).collect();
            prop_assert_eq!(minimal_subcover_flat(&target, &sets), exhaustive_min(&target, &sets));
        }
    }
}
