//! Searches for concrete counterexamples to tempting converses.

use std::collections::HashMap;

use serde::Serialize;

use crate::bits::SubsetBits;
use crate::error::{Error, Result};
use crate::sets::{strict_union_witness, SeIndex, SeSubset, SoftElement, SoftSet};
use crate::soft_topology::{materialize_tau_star, SoftTopology, DEFAULT_CANONICAL_CAP};
use crate::topology::{pairwise_satisfies, SeparationLevel, DEFAULT_OPEN_CAP};

use super::{pairwise_soft_separation, Disjointness, SoftBitopSpace};

/// Largest flattened carrier for which all soft subsets are tried.
const AUTO_SUBSETS_MAX_POINTS: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StrictUnionWitness {
    pub f: SoftSet,
    pub h: SoftSet,
    /// In `SE(F ∪_s H)` but in neither `SE(F)` nor `SE(H)`.
    pub element: SoftElement,
}

fn all_soft_subsets(ambient: &SoftSet) -> Option<Vec<SoftSet>> {
    let layout = crate::sets::SectionLayout::new(ambient);
    if layout.total() > AUTO_SUBSETS_MAX_POINTS {
        return None;
    }
    let mut out: Vec<SoftSet> = (0u64..1 << layout.total())
        .map(|m| layout.unflatten(&SubsetBits::from_u64(m)))
        .collect();
    out.sort();
    Some(out)
}

/// First pair (canonical order) among `candidates`, then among all soft
/// subsets of `ambient` when it is small, whose soft union has a soft
/// element in neither operand.
pub fn strict_union_search(
    candidates: &[SoftSet],
    ambient: &SoftSet,
) -> Result<Option<StrictUnionWitness>> {
    let mut sorted = candidates.to_vec();
    sorted.sort();
    sorted.dedup();
    if let Some(w) = scan_pairs(&sorted)? {
        return Ok(Some(w));
    }
    match all_soft_subsets(ambient) {
        Some(all) => scan_pairs(&all),
        None => Ok(None),
    }
}

fn scan_pairs(sets: &[SoftSet]) -> Result<Option<StrictUnionWitness>> {
    for (i, f) in sets.iter().enumerate() {
        for h in &sets[i + 1..] {
            match strict_union_witness(f, h) {
                Ok(Some(element)) => {
                    return Ok(Some(StrictUnionWitness {
                        f: f.clone(),
                        h: h.clone(),
                        element,
                    }))
                }
                Ok(None) | Err(Error::EmptySection(_)) => {}
                Err(e) => return Err(e),
            }
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NonProductOpen {
    /// The two members whose soft-element sets were joined, if found that way.
    pub from: Option<(SoftSet, SoftSet)>,
    pub members: SeSubset,
}

/// A member of `τ*` that is not `SE(H)` for any soft set `H`.
///
/// Unions `SE(H) ∪ SE(K)` of members are tried first; when none works and
/// `SE(F)` is within `cap_se`, the materialized `τ*` is scanned.
pub fn non_product_open(
    tau: &SoftTopology,
    index: &SeIndex,
    cap_se: usize,
) -> Result<Option<NonProductOpen>> {
    let members = tau.members(DEFAULT_OPEN_CAP)?;
    let se: Vec<SeSubset> = members
        .iter()
        .map(|m| index.se_of(m))
        .collect::<Result<_>>()?;
    for i in 0..members.len() {
        for j in i + 1..members.len() {
            let t = SeSubset::new(se[i].bits().union(se[j].bits()));
            if !index.is_section_product_closed(&t) {
                debug_assert!(tau.is_open_star(index, &t).unwrap_or(false));
                return Ok(Some(NonProductOpen {
                    from: Some((members[i].clone(), members[j].clone())),
                    members: t,
                }));
            }
        }
    }
    if index.len() > cap_se {
        return Ok(None);
    }
    let star = materialize_tau_star(tau, index, cap_se)?;
    Ok(star
        .family
        .iter()
        .map(|b| SeSubset::new(b.clone()))
        .find(|t| !index.is_section_product_closed(t))
        .map(|members| NonProductOpen {
            from: None,
            members,
        }))
}

/// A member of the canonical enlargement missing from `τ`, preferring
/// members with every section nonempty.
pub fn noncanonical_gap(tau: &SoftTopology) -> Result<Option<SoftSet>> {
    let can = tau.canonical_enlargement(DEFAULT_CANONICAL_CAP)?;
    let members = can.members(DEFAULT_CANONICAL_CAP)?;
    let missing = |h: &&SoftSet| !tau.contains(h).unwrap_or(true);
    let gap = members
        .iter()
        .filter(|h| h.is_eligible())
        .find(missing)
        .or_else(|| members.iter().find(missing));
    Ok(gap.cloned())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConverseWitness {
    pub level: SeparationLevel,
    /// `τ1` is generated by this soft set together with `Φ` and `F`.
    pub generator1: SoftSet,
    pub generator2: SoftSet,
}

/// Searches pairs of soft topologies on `ambient`, each generated by a single
/// soft subset, for one whose induced pair on `SE(F)` is pairwise `T_j` while
/// the soft pair is not.
pub fn separation_converse_search(
    ambient: &SoftSet,
    levels: &[SeparationLevel],
    mode: Disjointness,
    cap_se: usize,
) -> Result<Option<ConverseWitness>> {
    let Some(gens) = all_soft_subsets(ambient) else {
        return Err(Error::CapExceeded {
            what: "converse search carrier",
            size: crate::sets::SectionLayout::new(ambient).total(),
            cap: AUTO_SUBSETS_MAX_POINTS,
        });
    };
    let index = SeIndex::with_cap(ambient, cap_se)?;
    let mut induced = HashMap::new();
    let mut topologies = Vec::with_capacity(gens.len());
    for g in &gens {
        let tau = SoftTopology::generated(ambient, std::slice::from_ref(g))?;
        if !induced.contains_key(tau.flat()) {
            induced.insert(tau.flat().clone(), tau.induced_topology(&index)?);
        }
        topologies.push(tau);
    }
    for &level in levels {
        for (i, t1) in topologies.iter().enumerate() {
            for (j, t2) in topologies.iter().enumerate() {
                if !pairwise_satisfies(&induced[t1.flat()], &induced[t2.flat()], level) {
                    continue;
                }
                let space = SoftBitopSpace::with_cap(t1.clone(), t2.clone(), cap_se)?;
                if !pairwise_soft_separation(&space, level, mode).holds {
                    return Ok(Some(ConverseWitness {
                        level,
                        generator1: gens[i].clone(),
                        generator2: gens[j].clone(),
                    }));
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;
    use crate::soft_topology::DEFAULT_TAU_STAR_CAP;

    fn s(a: &[usize], b: &[usize]) -> SoftSet {
        SoftSet::new(
            2,
            vec![a.iter().copied().collect(), b.iter().copied().collect()],
        )
        .unwrap()
    }

    #[test]
    fn strict_union_on_two_parameters() {
        let full = s(&[0, 1], &[0, 1]);
        let w = strict_union_search(&[s(&[0], &[0, 1]), s(&[0, 1], &[0])], &full)
            .unwrap()
            .unwrap();
        assert_eq!(w.element, SoftElement::new(vec![1, 1]));
        assert_eq!(w.f, s(&[0], &[0, 1]));
    }

    #[test]
    fn strict_union_falls_back_to_all_subsets() {
        let full = s(&[0, 1], &[0, 1]);
        let w = strict_union_search(std::slice::from_ref(&full), &full)
            .unwrap()
            .unwrap();
        assert!(!w.f.contains_element(&w.element) && !w.h.contains_element(&w.element));
        let one = SoftSet::new(2, vec![SubsetBits::full(2)]).unwrap();
        assert_eq!(strict_union_search(&[], &one).unwrap(), None);
    }

    #[test]
    fn d8_witnesses() {
        let ex = gallery::d8_example();
        let index = SeIndex::new(ex.carrier()).unwrap();
        let w = non_product_open(&ex.tau1, &index, DEFAULT_TAU_STAR_CAP)
            .unwrap()
            .unwrap();
        assert_eq!(w.from, Some((ex.f1.clone(), ex.f2.clone())));
        assert_eq!(w.members.len(), 16);
        assert_eq!(index.sections_of(&w.members), ex.carrier().clone());

        let gap = noncanonical_gap(&ex.tau1).unwrap().unwrap();
        // ⟨r²⟩ at t1, s⟨r⟩ at t2
        assert_eq!(
            gap,
            SoftSet::new(
                8,
                vec![SubsetBits::from_iter([0, 2]), SubsetBits::from_iter(4..8)]
            )
            .unwrap()
        );
        let can = ex
            .tau1
            .canonical_enlargement(DEFAULT_CANONICAL_CAP)
            .unwrap();
        assert_eq!(noncanonical_gap(&can).unwrap(), None);
    }

    #[test]
    fn converse_search_finds_something_on_two_by_two() {
        let full = s(&[0, 1], &[0, 1]);
        let w = separation_converse_search(
            &full,
            &[
                SeparationLevel::T0,
                SeparationLevel::T1,
                SeparationLevel::T2,
            ],
            Disjointness::Sectionwise,
            DEFAULT_TAU_STAR_CAP,
        )
        .unwrap();
        let w = w.unwrap();
        let t1 = SoftTopology::generated(&full, std::slice::from_ref(&w.generator1)).unwrap();
        let t2 = SoftTopology::generated(&full, std::slice::from_ref(&w.generator2)).unwrap();
        let space = SoftBitopSpace::new(t1, t2).unwrap();
        assert!(!pairwise_soft_separation(&space, w.level, Disjointness::Sectionwise).holds);
    }
}
