//! Soft bitopological spaces and groups.

mod connected;
mod cover;
mod hom;
mod sbtg;
mod separation;
mod witness;

pub use connected::{bi_soft_connected, BiConnectedReport, InducedConnectedness};
pub use cover::{
    minimal_subcover, minimal_subcover_flat, slice_compactness_transfer, verify_cover,
    CompactnessTransferReport, CoverProblem, CoverReport,
};
pub use hom::{check_sbtg_hom, connected_hom_constant_check, ConstantHomReport, HomReport};
pub use sbtg::{
    is_sbtg_componentwise, is_sbtg_oracle, is_stg_componentwise, Incident, OracleReport,
    SbtgReport, SbtgWitness, StgReport, DEFAULT_ORACLE_CAP,
};
pub use separation::{
    pairwise_soft_separation, slice_separation_equivalence, slices_pairwise_separation,
    soft_separation_classify, Disjointness, SliceEquivalenceReport, SliceSeparation,
    SoftSeparationReport,
};
pub use witness::{
    non_product_open, noncanonical_gap, separation_converse_search, strict_union_search,
    ConverseWitness, NonProductOpen, StrictUnionWitness,
};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{SeGroup, SoftGroup};
use crate::sets::{SeIndex, DEFAULT_SE_CAP};
use crate::soft_topology::{materialize_tau_star, SoftTopology, TauStar};

/// Which of the two topologies of a bitopological space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Origin {
    Tau1,
    Tau2,
}

impl Origin {
    pub const BOTH: [Origin; 2] = [Origin::Tau1, Origin::Tau2];

    pub fn number(self) -> u8 {
        match self {
            Origin::Tau1 => 1,
            Origin::Tau2 => 2,
        }
    }
}

/// `(F, τ1, τ2)` with `SE(F)` enumerated.
#[derive(Debug, Clone)]
pub struct SoftBitopSpace {
    tau1: SoftTopology,
    tau2: SoftTopology,
    index: SeIndex,
}

impl SoftBitopSpace {
    pub fn new(tau1: SoftTopology, tau2: SoftTopology) -> Result<Self> {
        Self::with_cap(tau1, tau2, DEFAULT_SE_CAP)
    }

    pub fn with_cap(tau1: SoftTopology, tau2: SoftTopology, cap_se: usize) -> Result<Self> {
        if tau1.ambient() != tau2.ambient() {
            return Err(Error::ShapeMismatch(
                "the two soft topologies live on different soft sets".into(),
            ));
        }
        let index = SeIndex::with_cap(tau1.ambient(), cap_se)?;
        Ok(Self { tau1, tau2, index })
    }

    pub fn tau(&self, which: Origin) -> &SoftTopology {
        match which {
            Origin::Tau1 => &self.tau1,
            Origin::Tau2 => &self.tau2,
        }
    }

    pub fn index(&self) -> &SeIndex {
        &self.index
    }

    pub fn is_canonical(&self) -> bool {
        self.tau1.is_canonical() && self.tau2.is_canonical()
    }

    pub fn tau_star(&self, which: Origin, cap_se: usize) -> Result<TauStar> {
        materialize_tau_star(self.tau(which), &self.index, cap_se)
    }
}

/// A soft group carrying two soft topologies.
#[derive(Debug, Clone)]
pub struct SbtgInstance {
    group: SeGroup,
    space: SoftBitopSpace,
}

impl SbtgInstance {
    pub fn new(soft_group: SoftGroup, tau1: SoftTopology, tau2: SoftTopology) -> Result<Self> {
        Self::with_cap(soft_group, tau1, tau2, DEFAULT_SE_CAP)
    }

    pub fn with_cap(
        soft_group: SoftGroup,
        tau1: SoftTopology,
        tau2: SoftTopology,
        cap_se: usize,
    ) -> Result<Self> {
        if soft_group.carrier() != tau1.ambient() {
            return Err(Error::ShapeMismatch(
                "soft topologies are not on the soft group's carrier".into(),
            ));
        }
        let space = SoftBitopSpace::with_cap(tau1, tau2, cap_se)?;
        let group = SeGroup::with_cap(soft_group, cap_se)?;
        Ok(Self { group, space })
    }

    pub fn group(&self) -> &SeGroup {
        &self.group
    }

    pub fn space(&self) -> &SoftBitopSpace {
        &self.space
    }

    /// Plain-index description of the instance, for incident reports.
    pub fn dump(&self) -> InstanceDump {
        let sg = self.group.soft_group();
        let generators = |which: Origin| {
            let tau = self.space.tau(which);
            let layout = tau.layout();
            tau.flat()
                .neighborhoods()
                .iter()
                .map(|n| {
                    layout
                        .unflatten(n)
                        .sections()
                        .iter()
                        .map(|s| s.iter().collect())
                        .collect()
                })
                .collect()
        };
        InstanceDump {
            group_table: sg.group().rows(),
            identity: sg.group().identity(),
            labels: sg.group().labels().to_vec(),
            sections: sg
                .carrier()
                .sections()
                .iter()
                .map(|s| s.iter().collect())
                .collect(),
            tau1_generators: generators(Origin::Tau1),
            tau2_generators: generators(Origin::Tau2),
        }
    }
}

/// Everything needed to rebuild an instance; each topology is given by the
/// minimal soft opens of the points of the flattened carrier.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InstanceDump {
    pub labels: Vec<String>,
    pub group_table: Vec<Vec<usize>>,
    pub identity: usize,
    pub sections: Vec<Vec<usize>>,
    pub tau1_generators: Vec<Vec<Vec<usize>>>,
    pub tau2_generators: Vec<Vec<Vec<usize>>>,
}
