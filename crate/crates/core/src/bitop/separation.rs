//! Pairwise soft separation and its slice-by-slice counterpart.
//!
//! Every quantifier over soft opens reduces to the minimal soft open `M_i(a)`
//! around a soft element: if some `H ∈ τ_i` contains `a` and avoids a point,
//! so does `M_i(a) ⊆ H`.

use serde::Serialize;

use crate::bits::SubsetBits;
use crate::topology::{
    pairwise_separation_classify, pairwise_t0_failure, pairwise_t1_failure, pairwise_t2_failure,
    FiniteTopology, SeparationLevel, SeparationReport,
};

use super::{Origin, SoftBitopSpace};

/// How the two opens of a level-2 separation must be disjoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Disjointness {
    /// `H ∩_s K = Φ`.
    Sectionwise,
    /// `SE(H) ∩ SE(K) = ∅`, i.e. some section of `H ∩_s K` is empty.
    SoftElement,
}

impl Disjointness {
    pub fn other(self) -> Self {
        match self {
            Self::Sectionwise => Self::SoftElement,
            Self::SoftElement => Self::Sectionwise,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SoftSeparationReport {
    pub level: SeparationLevel,
    pub mode: Disjointness,
    pub holds: bool,
    /// First pair of soft element indices left unseparated.
    pub witness: Option<(usize, usize)>,
    /// Verdict under the other disjointness mode (differs only at level 2).
    pub other_mode_holds: bool,
}

impl SoftSeparationReport {
    pub fn modes_disagree(&self) -> bool {
        self.holds != self.other_mode_holds
    }
}

struct MinimalOpens<'a> {
    space: &'a SoftBitopSpace,
    m1: Vec<SubsetBits>,
    m2: Vec<SubsetBits>,
    blocks: Vec<SubsetBits>,
}

impl<'a> MinimalOpens<'a> {
    fn new(space: &'a SoftBitopSpace) -> Self {
        let index = space.index();
        let opens = |which| {
            (0..index.len())
                .map(|a| space.tau(which).minimal_open(index, a))
                .collect::<Vec<_>>()
        };
        let layout = index.layout();
        Self {
            m1: opens(Origin::Tau1),
            m2: opens(Origin::Tau2),
            blocks: (0..layout.params()).map(|t| layout.block(t)).collect(),
            space,
        }
    }

    fn has(&self, flat: &SubsetBits, a: usize) -> bool {
        self.space.index().in_flat(a, flat)
    }

    fn t0_fails(&self, a: usize, b: usize) -> bool {
        self.has(&self.m1[a], b)
            && self.has(&self.m2[a], b)
            && self.has(&self.m1[b], a)
            && self.has(&self.m2[b], a)
    }

    fn t1_fails(&self, a: usize, b: usize) -> bool {
        self.has(&self.m1[a], b) || self.has(&self.m2[b], a)
    }

    fn t2_fails(&self, a: usize, b: usize, mode: Disjointness) -> bool {
        let meet = self.m1[a].intersection(&self.m2[b]);
        match mode {
            Disjointness::Sectionwise => !meet.is_empty(),
            Disjointness::SoftElement => self.blocks.iter().all(|blk| !meet.is_disjoint(blk)),
        }
    }

    fn failure(&self, level: SeparationLevel, mode: Disjointness) -> Option<(usize, usize)> {
        let n = self.space.index().len();
        let unordered = || (0..n).flat_map(move |a| (a + 1..n).map(move |b| (a, b)));
        let ordered = || {
            (0..n)
                .flat_map(move |a| (0..n).map(move |b| (a, b)))
                .filter(|(a, b)| a != b)
        };
        match level {
            SeparationLevel::None => None,
            SeparationLevel::T0 => unordered().find(|&(a, b)| self.t0_fails(a, b)),
            SeparationLevel::T1 => ordered().find(|&(a, b)| self.t1_fails(a, b)),
            SeparationLevel::T2 => ordered().find(|&(a, b)| self.t2_fails(a, b, mode)),
        }
    }
}

/// Pairwise soft `T_j` over all pairs of distinct soft elements.
pub fn pairwise_soft_separation(
    space: &SoftBitopSpace,
    level: SeparationLevel,
    mode: Disjointness,
) -> SoftSeparationReport {
    let m = MinimalOpens::new(space);
    let witness = m.failure(level, mode);
    let other_mode_holds = if level == SeparationLevel::T2 {
        m.failure(level, mode.other()).is_none()
    } else {
        witness.is_none()
    };
    SoftSeparationReport {
        level,
        mode,
        holds: witness.is_none(),
        witness,
        other_mode_holds,
    }
}

/// Highest pairwise soft level reached, with the first pair failing the next.
pub fn soft_separation_classify(space: &SoftBitopSpace, mode: Disjointness) -> SeparationReport {
    let m = MinimalOpens::new(space);
    for level in [
        SeparationLevel::T0,
        SeparationLevel::T1,
        SeparationLevel::T2,
    ] {
        if let Some(w) = m.failure(level, mode) {
            let below = match level {
                SeparationLevel::T0 => SeparationLevel::None,
                SeparationLevel::T1 => SeparationLevel::T0,
                _ => SeparationLevel::T1,
            };
            return SeparationReport {
                level: below,
                witness: Some(w),
            };
        }
    }
    SeparationReport {
        level: SeparationLevel::T2,
        witness: None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SliceSeparation {
    pub holds: bool,
    /// First unseparated pair, dense positions in `F(t)`.
    pub witness: Option<(usize, usize)>,
    pub classification: SeparationReport,
}

fn slice_failure(
    c1: &FiniteTopology,
    c2: &FiniteTopology,
    level: SeparationLevel,
) -> Option<(usize, usize)> {
    match level {
        SeparationLevel::None => None,
        SeparationLevel::T0 => pairwise_t0_failure(c1, c2),
        SeparationLevel::T1 => pairwise_t1_failure(c1, c2),
        SeparationLevel::T2 => pairwise_t2_failure(c1, c2),
    }
}

/// Classical pairwise `T_j` of `(F(t), (τ1)_t, (τ2)_t)` for each `t`.
pub fn slices_pairwise_separation(
    space: &SoftBitopSpace,
    level: SeparationLevel,
) -> Vec<SliceSeparation> {
    let params = space.index().params();
    (0..params)
        .map(|t| {
            let c1 = space.tau(Origin::Tau1).component(t);
            let c2 = space.tau(Origin::Tau2).component(t);
            let witness = slice_failure(&c1, &c2, level);
            SliceSeparation {
                holds: witness.is_none(),
                witness,
                classification: pairwise_separation_classify(&c1, &c2).expect("same carrier"),
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SliceEquivalenceReport {
    pub level: SeparationLevel,
    /// Level 2 is always evaluated with soft-element disjointness here.
    pub mode: Disjointness,
    pub soft_holds: bool,
    pub soft_witness: Option<(usize, usize)>,
    pub slices: Vec<SliceSeparation>,
    pub slices_hold: bool,
    /// Soft `T_j` implies every slice `T_j`.
    pub forward: bool,
    /// Every slice `T_j` implies soft `T_j`; `None` unless both topologies
    /// are canonical.
    pub backward: Option<bool>,
    /// The separating cylinders built from slice opens were all checked.
    pub construction_verified: Option<bool>,
    pub notes: Vec<String>,
}

impl SliceEquivalenceReport {
    pub fn holds(&self) -> bool {
        self.forward && self.backward.unwrap_or(true) && self.construction_verified.unwrap_or(true)
    }
}

/// Compares pairwise soft `T_j` with slice-wise pairwise `T_j`.
pub fn slice_separation_equivalence(
    space: &SoftBitopSpace,
    level: SeparationLevel,
) -> SliceEquivalenceReport {
    let mode = Disjointness::SoftElement;
    let soft = pairwise_soft_separation(space, level, mode);
    let slices = slices_pairwise_separation(space, level);
    let slices_hold = slices.iter().all(|s| s.holds);
    let mut notes = Vec::new();
    if level == SeparationLevel::T2 {
        notes.push("level 2 evaluated with soft-element disjointness".to_string());
    }
    let (backward, construction_verified) = if space.is_canonical() {
        let construction = slices_hold.then(|| verify_cylinders(space, level));
        (Some(!slices_hold || soft.holds), construction)
    } else {
        notes.push("not canonical: slice-to-soft direction skipped".to_string());
        (None, None)
    };
    SliceEquivalenceReport {
        level,
        mode,
        soft_holds: soft.holds,
        soft_witness: soft.witness,
        slices,
        slices_hold,
        forward: !soft.holds || slices_hold,
        backward,
        construction_verified,
        notes,
    }
}

/// For each pair of distinct soft elements, picks the first parameter where
/// they differ, separates the two values with slice neighbourhoods `U`, `V`
/// and checks the cylinders (`U` at that parameter, `F(s)` elsewhere) are
/// soft opens that separate the pair.
fn verify_cylinders(space: &SoftBitopSpace, level: SeparationLevel) -> bool {
    let index = space.index();
    let layout = index.layout();
    let n = index.len();
    let params = index.params();
    let comps: Vec<[FiniteTopology; 2]> = (0..params)
        .map(|t| {
            [
                space.tau(Origin::Tau1).component(t),
                space.tau(Origin::Tau2).component(t),
            ]
        })
        .collect();
    let full = SubsetBits::full(layout.total());
    let cylinder = |t: usize, dense: &SubsetBits| {
        let mut c = full.difference(&layout.block(t));
        c.union_with(&layout.lift_section(t, dense));
        c
    };
    let is_open = |which: Origin, c: &SubsetBits| space.tau(which).flat().is_open(c);
    let separates = |which: Origin, c: &SubsetBits, inside: usize, outside: usize| {
        is_open(which, c) && index.in_flat(inside, c) && !index.in_flat(outside, c)
    };
    for a in 0..n {
        for b in 0..n {
            if a == b || (level == SeparationLevel::T0 && b < a) {
                continue;
            }
            let t = (0..params)
                .find(|&t| index.coord(a, t) != index.coord(b, t))
                .expect("distinct");
            let (x, y) = (index.coord(a, t), index.coord(b, t));
            let [c1, c2] = &comps[t];
            let ok = match level {
                SeparationLevel::None => true,
                SeparationLevel::T0 => {
                    [(Origin::Tau1, c1), (Origin::Tau2, c2)]
                        .iter()
                        .any(|(w, c)| {
                            (!c.neighborhood(x).contains(y)
                                && separates(*w, &cylinder(t, c.neighborhood(x)), a, b))
                                || (!c.neighborhood(y).contains(x)
                                    && separates(*w, &cylinder(t, c.neighborhood(y)), b, a))
                        })
                }
                SeparationLevel::T1 => {
                    separates(Origin::Tau1, &cylinder(t, c1.neighborhood(x)), a, b)
                        && separates(Origin::Tau2, &cylinder(t, c2.neighborhood(y)), b, a)
                }
                SeparationLevel::T2 => {
                    let h = cylinder(t, c1.neighborhood(x));
                    let k = cylinder(t, c2.neighborhood(y));
                    is_open(Origin::Tau1, &h)
                        && is_open(Origin::Tau2, &k)
                        && index.in_flat(a, &h)
                        && index.in_flat(b, &k)
                        && h.intersection(&k).is_disjoint(&layout.block(t))
                }
            };
            if !ok {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sets::SoftSet;
    use crate::soft_topology::SoftTopology;

    fn z2(params: usize) -> SoftSet {
        SoftSet::constant(2, params, SubsetBits::full(2))
    }

    #[test]
    fn discrete_indiscrete_pair() {
        let f = z2(1);
        let space =
            SoftBitopSpace::new(SoftTopology::discrete(&f), SoftTopology::indiscrete(&f)).unwrap();
        let t0 = pairwise_soft_separation(&space, SeparationLevel::T0, Disjointness::Sectionwise);
        assert!(t0.holds);
        let t2 = pairwise_soft_separation(&space, SeparationLevel::T2, Disjointness::Sectionwise);
        assert!(!t2.holds);
        assert_eq!(t2.witness, Some((0, 1)));
        let c = soft_separation_classify(&space, Disjointness::Sectionwise);
        assert_eq!(c.level, SeparationLevel::T0);
    }

    #[test]
    fn single_soft_element() {
        let f = SoftSet::constant(3, 2, SubsetBits::singleton(1));
        let space = SoftBitopSpace::new(SoftTopology::indiscrete(&f), SoftTopology::indiscrete(&f))
            .unwrap();
        for level in [
            SeparationLevel::T0,
            SeparationLevel::T1,
            SeparationLevel::T2,
        ] {
            for mode in [Disjointness::Sectionwise, Disjointness::SoftElement] {
                assert!(pairwise_soft_separation(&space, level, mode).holds);
            }
        }
    }

    #[test]
    fn indiscrete_fails_t0() {
        let f = z2(2);
        let space = SoftBitopSpace::new(SoftTopology::indiscrete(&f), SoftTopology::indiscrete(&f))
            .unwrap();
        let r = pairwise_soft_separation(&space, SeparationLevel::T0, Disjointness::Sectionwise);
        assert_eq!(r.witness, Some((0, 1)));
    }

    #[test]
    fn modes_disagree_on_discrete_pair() {
        // two parameters, both discrete: every soft element is its own minimal
        // open, and distinct elements may still share a point
        let f = z2(2);
        let space =
            SoftBitopSpace::new(SoftTopology::discrete(&f), SoftTopology::discrete(&f)).unwrap();
        let sw = pairwise_soft_separation(&space, SeparationLevel::T2, Disjointness::Sectionwise);
        let se = pairwise_soft_separation(&space, SeparationLevel::T2, Disjointness::SoftElement);
        assert!(!sw.holds);
        assert_eq!(sw.witness, Some((0, 1)));
        assert!(se.holds);
        assert!(sw.modes_disagree() && se.modes_disagree());
        let eq = slice_separation_equivalence(&space, SeparationLevel::T2);
        assert!(eq.slices_hold && eq.soft_holds);
        assert_eq!(eq.backward, Some(true));
        assert_eq!(eq.construction_verified, Some(true));
    }

    #[test]
    fn noncanonical_skips_backward() {
        let f = z2(2);
        let space =
            SoftBitopSpace::new(SoftTopology::indiscrete(&f), SoftTopology::discrete(&f)).unwrap();
        let eq = slice_separation_equivalence(&space, SeparationLevel::T0);
        assert_eq!(eq.backward, None);
        assert!(eq.forward);
        assert!(eq.notes.iter().any(|n| n.contains("not canonical")));
    }
}
