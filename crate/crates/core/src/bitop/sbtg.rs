//! Soft (bi)topological group checks: slice by slice, and directly on the
//! induced topologies of `SE(F)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::SeGroup;
use crate::soft_topology::SoftTopology;
use crate::topology::{is_topological_group, GroupMapKind, TopGroupReport, TopGroupWitness};

use super::{InstanceDump, Origin, SbtgInstance};

/// Default cap on `|SE(F)|` for the induced-topology check.
pub const DEFAULT_ORACLE_CAP: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StgReport {
    pub holds: bool,
    /// `(F(t), τ_t)` checked as a topological group, per parameter.
    pub slices: Vec<TopGroupReport>,
    /// First failing parameter and its witness.
    pub witness: Option<(usize, TopGroupWitness)>,
}

/// Every slice `(F(t), τ_t)` is a topological group.
pub fn is_stg_componentwise(group: &SeGroup, tau: &SoftTopology) -> Result<StgReport> {
    if group.soft_group().carrier() != tau.ambient() {
        return Err(Error::ShapeMismatch(
            "soft topology is not on the soft group's carrier".into(),
        ));
    }
    let slices = group
        .slices()
        .iter()
        .enumerate()
        .map(|(t, g)| is_topological_group(g, &tau.component(t)))
        .collect::<Result<Vec<_>>>()?;
    let witness = slices
        .iter()
        .enumerate()
        .find_map(|(t, r)| r.witness.clone().map(|w| (t, w)));
    Ok(StgReport {
        holds: witness.is_none(),
        slices,
        witness,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SbtgWitness {
    pub param: usize,
    pub topology: Origin,
    pub map: GroupMapKind,
    /// Dense positions in `F(t)`.
    pub point: (usize, usize),
    pub open: crate::bits::SubsetBits,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SbtgReport {
    pub holds: bool,
    pub first: StgReport,
    pub second: StgReport,
    pub witness: Option<SbtgWitness>,
}

/// Both topologies pass [`is_stg_componentwise`].
pub fn is_sbtg_componentwise(inst: &SbtgInstance) -> Result<SbtgReport> {
    let first = is_stg_componentwise(inst.group(), inst.space().tau(Origin::Tau1))?;
    let second = is_stg_componentwise(inst.group(), inst.space().tau(Origin::Tau2))?;
    let witness = [(Origin::Tau1, &first), (Origin::Tau2, &second)]
        .into_iter()
        .find_map(|(which, r)| {
            r.witness.clone().map(|(param, w)| SbtgWitness {
                param,
                topology: which,
                map: w.map,
                point: w.point,
                open: w.open,
            })
        });
    Ok(SbtgReport {
        holds: first.holds && second.holds,
        first,
        second,
        witness,
    })
}

/// The slice verdict and the induced-topology verdict disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Incident {
    pub message: String,
    pub instance: InstanceDump,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub holds: bool,
    /// `Δ(a, b) = a∗b⁻¹` on the topology `SE(F)` inherits from `τ1`.
    pub first: TopGroupReport,
    pub second: TopGroupReport,
    /// Whether each `(τ_i)*` family satisfied the topology axioms as is.
    pub family_is_topology: [bool; 2],
    pub componentwise: bool,
    pub incident: Option<Incident>,
}

/// Materializes both induced topologies and tests `Δ` for continuity on
/// `SE(F) × SE(F)`, then compares with the slice verdict.
pub fn is_sbtg_oracle(inst: &SbtgInstance, cap_se: usize) -> Result<OracleReport> {
    let n = inst.group().len();
    if n > cap_se {
        return Err(Error::CapExceeded {
            what: "induced group check",
            size: n,
            cap: cap_se,
        });
    }
    let g = inst.group().to_group();
    let s1 = inst.space().tau_star(Origin::Tau1, cap_se)?;
    let s2 = inst.space().tau_star(Origin::Tau2, cap_se)?;
    let first = is_topological_group(&g, &s1.topology)?;
    let second = is_topological_group(&g, &s2.topology)?;
    let holds = first.holds && second.holds;
    let componentwise = is_sbtg_componentwise(inst)?.holds;
    let incident = (holds != componentwise).then(|| Incident {
        message: format!(
            "induced-topology verdict {} disagrees with slice verdict {}",
            verdict(holds),
            verdict(componentwise)
        ),
        instance: inst.dump(),
    });
    Ok(OracleReport {
        holds,
        first,
        second,
        family_is_topology: [s1.axioms.holds, s2.axioms.holds],
        componentwise,
        incident,
    })
}

fn verdict(b: bool) -> &'static str {
    if b {
        "SBTG"
    } else {
        "not SBTG"
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::SubsetBits;
    use crate::gallery;
    use crate::group::{FiniteGroup, SoftGroup};
    use crate::sets::SoftSet;

    #[test]
    fn d8_is_sbtg() {
        let ex = gallery::d8_example();
        let inst = SbtgInstance::new(ex.group.clone(), ex.tau1.clone(), ex.tau2.clone()).unwrap();
        let r = is_sbtg_componentwise(&inst).unwrap();
        assert!(r.holds);
        assert_eq!(r.first.slices.len(), 2);
        assert!(is_sbtg_oracle(&inst, DEFAULT_ORACLE_CAP).is_err());
    }

    #[test]
    fn discrete_indiscrete_is_sbtg() {
        for params in [1, 2] {
            let (g, disc, ind) = gallery::z2_discrete_indiscrete(params);
            let inst = SbtgInstance::new(g, disc, ind).unwrap();
            assert!(is_sbtg_componentwise(&inst).unwrap().holds);
        }
    }

    #[test]
    fn z4_sierpinski_slice_fails() {
        let z4 = FiniteGroup::cyclic(4);
        let f = SoftSet::constant(4, 2, SubsetBits::full(4));
        let g = SoftGroup::new(z4, f.clone()).unwrap();
        let s0 = SoftSet::new(4, vec![SubsetBits::full(4), SubsetBits::singleton(0)]).unwrap();
        let tau1 = SoftTopology::generated(&f, &[s0]).unwrap();
        let inst = SbtgInstance::new(g, tau1, SoftTopology::discrete(&f)).unwrap();
        let r = is_sbtg_componentwise(&inst).unwrap();
        assert!(!r.holds);
        let w = r.witness.unwrap();
        assert_eq!((w.param, w.topology), (1, Origin::Tau1));
        assert_eq!(w.map, GroupMapKind::Delta);
        assert_eq!(w.point, (1, 1));
        assert_eq!(w.open, SubsetBits::singleton(0));
    }

    #[test]
    fn trivial_and_z2_agree() {
        let f = SoftSet::constant(1, 2, SubsetBits::full(1));
        let g = SoftGroup::new(FiniteGroup::trivial(), f.clone()).unwrap();
        let inst =
            SbtgInstance::new(g, SoftTopology::indiscrete(&f), SoftTopology::discrete(&f)).unwrap();
        let r = is_sbtg_oracle(&inst, DEFAULT_ORACLE_CAP).unwrap();
        assert!(r.holds && r.componentwise && r.incident.is_none());

        let (g, disc, ind) = gallery::z2_discrete_indiscrete(1);
        let inst = SbtgInstance::new(g, ind, disc).unwrap();
        let r = is_sbtg_oracle(&inst, DEFAULT_ORACLE_CAP).unwrap();
        assert!(r.holds && r.componentwise && r.incident.is_none());
    }

    #[test]
    fn literal_family_defect_does_not_change_the_verdict() {
        // Sierpiński at the first parameter, discrete at the second: the
        // literal family is not a topology and the slice check fails
        let z2 = FiniteGroup::cyclic(2);
        let f = SoftSet::constant(2, 2, SubsetBits::full(2));
        let g = SoftGroup::new(z2, f.clone()).unwrap();
        let s = |a: &[usize], b: &[usize]| {
            SoftSet::new(
                2,
                vec![a.iter().copied().collect(), b.iter().copied().collect()],
            )
            .unwrap()
        };
        let tau = SoftTopology::generated(&f, &[s(&[0], &[]), s(&[], &[0]), s(&[], &[1])]).unwrap();
        let inst = SbtgInstance::new(g, tau.clone(), tau).unwrap();
        let r = is_sbtg_oracle(&inst, DEFAULT_ORACLE_CAP).unwrap();
        assert!(!r.componentwise && !r.holds);
        assert_eq!(r.family_is_topology, [false, false]);
        assert!(r.incident.is_none());
        assert_eq!(inst.dump().sections, vec![vec![0, 1], vec![0, 1]]);
    }
}
