//! Ready-made instances used by tests and benches.

use crate::bits::SubsetBits;
use crate::group::{FiniteGroup, SoftGroup};
use crate::sets::SoftSet;
use crate::soft_topology::SoftTopology;

/// `F = (⟨r⟩, D8)` with `τ1 = {Φ, F, F1, F2}` and `τ2` soft discrete, where
/// `F1 = (⟨r²⟩, ⟨r⟩)` and `F2 = (r⟨r²⟩, s⟨r⟩)`.
#[derive(Debug, Clone)]
pub struct D8Example {
    pub group: SoftGroup,
    pub f1: SoftSet,
    pub f2: SoftSet,
    pub tau1: SoftTopology,
    pub tau2: SoftTopology,
}

impl D8Example {
    pub fn carrier(&self) -> &SoftSet {
        self.group.carrier()
    }
}

pub fn d8_example() -> D8Example {
    let d8 = FiniteGroup::dihedral(4);
    let set = |a: &[usize], b: &[usize]| {
        SoftSet::new(
            8,
            vec![a.iter().copied().collect(), b.iter().copied().collect()],
        )
        .expect("inside D8")
    };
    let f = set(&[0, 1, 2, 3], &[0, 1, 2, 3, 4, 5, 6, 7]);
    let f1 = set(&[0, 2], &[0, 1, 2, 3]);
    let f2 = set(&[1, 3], &[4, 5, 6, 7]);
    let tau1 = SoftTopology::new(
        &f,
        &[SoftSet::empty(8, 2), f.clone(), f1.clone(), f2.clone()],
    )
    .expect("valid soft topology");
    let tau2 = SoftTopology::discrete(&f);
    D8Example {
        group: SoftGroup::new(d8, f).expect("sections are subgroups"),
        f1,
        f2,
        tau1,
        tau2,
    }
}

/// `ℤ2` on every parameter with the soft discrete and soft indiscrete
/// topologies.
pub fn z2_discrete_indiscrete(params: usize) -> (SoftGroup, SoftTopology, SoftTopology) {
    let f = SoftSet::constant(2, params, SubsetBits::full(2));
    let disc = SoftTopology::discrete(&f);
    let ind = SoftTopology::indiscrete(&f);
    (
        SoftGroup::new(FiniteGroup::cyclic(2), f).expect("whole group"),
        disc,
        ind,
    )
}
