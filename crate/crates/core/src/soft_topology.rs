//! Soft topologies on a soft set `F`, their component topologies, the
//! canonical enlargement and the induced family `τ*` on `SE(F)`.
//!
//! A soft topology on `F` is stored as a classical topology on the flattened
//! carrier `⊔_t F(t)` (see [`SectionLayout`]): sectionwise union and
//! intersection are plain union and intersection there, so the soft axioms
//! are the classical ones. The minimal soft open around a soft element `a` is
//! the union of the neighbourhoods of its points `(t, a(t))`.

use serde::Serialize;

use crate::bits::SubsetBits;
use crate::error::{Error, Result};
use crate::sets::{SeIndex, SeSubset, SectionLayout, SoftSet};
use crate::topology::{
    check_topology_axioms, generate_topology, is_continuous, AxiomReport, AxiomViolation,
    CarrierMap, ContinuityWitness, FiniteTopology, DEFAULT_OPEN_CAP,
};

/// Default cap on `|SE(F)|` for materializing `τ*`.
pub const DEFAULT_TAU_STAR_CAP: usize = 16;
/// Default cap on `∏_t |τ_t|` for the canonical enlargement.
pub const DEFAULT_CANONICAL_CAP: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SoftTopology {
    layout: SectionLayout,
    flat: FiniteTopology,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum SoftAxiomViolation {
    MissingEmpty,
    MissingFull,
    Union {
        left: SoftSet,
        right: SoftSet,
        missing: SoftSet,
    },
    Intersection {
        left: SoftSet,
        right: SoftSet,
        missing: SoftSet,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SoftAxiomReport {
    pub holds: bool,
    pub witness: Option<SoftAxiomViolation>,
}

/// Checks `Φ, F ∈ τ` and closure under sectionwise union and intersection.
pub fn check_soft_topology(members: &[SoftSet], f: &SoftSet) -> Result<SoftAxiomReport> {
    let layout = SectionLayout::new(f);
    let flat = members
        .iter()
        .map(|h| layout.flatten(h))
        .collect::<Result<Vec<_>>>()?;
    let report = check_topology_axioms(&flat, layout.total());
    let lift = |s: &SubsetBits| layout.unflatten(s);
    let witness = report.witness.map(|w| match w {
        AxiomViolation::MissingEmpty => SoftAxiomViolation::MissingEmpty,
        AxiomViolation::MissingFull => SoftAxiomViolation::MissingFull,
        AxiomViolation::Union {
            left,
            right,
            missing,
        } => SoftAxiomViolation::Union {
            left: lift(&left),
            right: lift(&right),
            missing: lift(&missing),
        },
        AxiomViolation::Intersection {
            left,
            right,
            missing,
        } => SoftAxiomViolation::Intersection {
            left: lift(&left),
            right: lift(&right),
            missing: lift(&missing),
        },
        AxiomViolation::OutsideCarrier { .. } => unreachable!("flattened members stay inside F"),
    });
    Ok(SoftAxiomReport {
        holds: report.holds,
        witness,
    })
}

impl SoftTopology {
    /// Validates an explicit member list.
    pub fn new(f: &SoftSet, members: &[SoftSet]) -> Result<Self> {
        let report = check_soft_topology(members, f)?;
        if let Some(w) = report.witness {
            return Err(Error::InvalidTopology(format!("{w:?}")));
        }
        Self::generated(f, members)
    }

    /// Smallest soft topology on `f` containing `subbasis`.
    pub fn generated(f: &SoftSet, subbasis: &[SoftSet]) -> Result<Self> {
        let layout = SectionLayout::new(f);
        let flat = subbasis
            .iter()
            .map(|h| layout.flatten(h))
            .collect::<Result<Vec<_>>>()?;
        let flat = generate_topology(&flat, layout.total());
        Ok(Self { layout, flat })
    }

    /// All soft subsets of `f`.
    pub fn discrete(f: &SoftSet) -> Self {
        let layout = SectionLayout::new(f);
        let flat = FiniteTopology::discrete(layout.total());
        Self { layout, flat }
    }

    /// `{Φ, F}`.
    pub fn indiscrete(f: &SoftSet) -> Self {
        let layout = SectionLayout::new(f);
        let flat = FiniteTopology::indiscrete(layout.total());
        Self { layout, flat }
    }

    /// Wraps a topology on the flattened carrier of `f`.
    pub fn from_flat(f: &SoftSet, flat: FiniteTopology) -> Result<Self> {
        let layout = SectionLayout::new(f);
        if flat.size() != layout.total() {
            return Err(Error::ShapeMismatch(format!(
                "flattened carrier has {} points, topology has {}",
                layout.total(),
                flat.size()
            )));
        }
        Ok(Self { layout, flat })
    }

    pub fn ambient(&self) -> &SoftSet {
        self.layout.ambient()
    }

    pub fn layout(&self) -> &SectionLayout {
        &self.layout
    }

    /// The classical topology on the flattened carrier.
    pub fn flat(&self) -> &FiniteTopology {
        &self.flat
    }

    pub fn contains(&self, h: &SoftSet) -> Result<bool> {
        Ok(self.flat.is_open(&self.layout.flatten(h)?))
    }

    /// Members sorted by their section lists, capped.
    pub fn members(&self, cap: usize) -> Result<Vec<SoftSet>> {
        let mut out: Vec<SoftSet> = self
            .flat
            .opens(cap)?
            .iter()
            .map(|u| self.layout.unflatten(u))
            .collect();
        out.sort();
        Ok(out)
    }

    /// Smallest member containing the flattened set `s`.
    pub fn hull_flat(&self, s: &SubsetBits) -> SubsetBits {
        self.flat.open_hull(s)
    }

    /// Minimal member containing soft element `i` of `index`, flattened.
    pub fn minimal_open(&self, index: &SeIndex, i: usize) -> SubsetBits {
        self.flat.open_hull(&index.points(i))
    }

    /// `τ_t` on the dense carrier of `F(t)`.
    pub fn component(&self, t: usize) -> FiniteTopology {
        let off = self.layout.offset(t);
        let nbhd = (0..self.layout.block_len(t))
            .map(|p| {
                self.layout
                    .dense_section(self.flat.neighborhood(off + p), t)
            })
            .collect();
        FiniteTopology::from_neighborhoods(self.layout.block_len(t), nbhd)
    }

    /// Opens of `τ_t` in universe indices, ascending.
    pub fn component_opens(&self, t: usize, cap: usize) -> Result<Vec<SubsetBits>> {
        let mut out: Vec<SubsetBits> = self
            .component(t)
            .opens(cap)?
            .iter()
            .map(|u| self.layout.universe_section(t, u))
            .collect();
        out.sort();
        Ok(out)
    }

    /// Flattened neighbourhoods restricted to their own block: the topology
    /// of the canonical enlargement.
    fn canonical_flat(&self) -> FiniteTopology {
        let nbhd = (0..self.layout.total())
            .map(|x| {
                let (t, _) = self.layout.locate(x);
                self.flat
                    .neighborhood(x)
                    .intersection(&self.layout.block(t))
            })
            .collect();
        FiniteTopology::from_neighborhoods(self.layout.total(), nbhd)
    }

    /// `τ = τ_can`: every neighbourhood stays inside its own section.
    pub fn is_canonical(&self) -> bool {
        (0..self.layout.total()).all(|x| {
            let (t, _) = self.layout.locate(x);
            self.flat.neighborhood(x).is_subset(&self.layout.block(t))
        })
    }

    /// Every soft subset whose sections are all component-open.
    pub fn canonical_enlargement(&self, cap: usize) -> Result<Self> {
        let mut size: usize = 1;
        for t in 0..self.layout.params() {
            let count = self.component(t).opens(cap)?.len();
            size = size.saturating_mul(count);
            if size > cap {
                return Err(Error::CapExceeded {
                    what: "canonical enlargement",
                    size,
                    cap,
                });
            }
        }
        Ok(Self {
            layout: self.layout.clone(),
            flat: self.canonical_flat(),
        })
    }

    fn check_shape(&self, index: &SeIndex) -> Result<()> {
        if index.ambient() != self.ambient() {
            return Err(Error::ShapeMismatch(
                "soft-element index built over a different soft set".into(),
            ));
        }
        Ok(())
    }

    /// `T(t) ∈ τ_t` for every `t`.
    pub fn is_open_star(&self, index: &SeIndex, t: &SeSubset) -> Result<bool> {
        self.check_shape(index)?;
        Ok(self.sections_open(&index.sections_flat(t)))
    }

    /// Whether every section of a flattened soft subset is component-open.
    pub fn sections_open(&self, flat: &SubsetBits) -> bool {
        flat.iter().all(|x| {
            let (t, _) = self.layout.locate(x);
            self.flat
                .neighborhood(x)
                .iter()
                .filter(|&y| self.layout.locate(y).0 == t)
                .all(|y| flat.contains(y))
        })
    }

    /// The product of the component topologies on `SE(F)`: the minimal open
    /// around `a` is `∏_t N_t(a(t))`.
    pub fn induced_topology(&self, index: &SeIndex) -> Result<FiniteTopology> {
        self.check_shape(index)?;
        let canon = self.canonical_flat();
        let nbhd = (0..index.len())
            .map(|a| {
                index
                    .se_of_flat(&canon.open_hull(&index.points(a)))
                    .bits()
                    .clone()
            })
            .collect();
        Ok(FiniteTopology::from_neighborhoods(index.len(), nbhd))
    }
}

/// The family `τ*` written out, its axiom check and the topologies built
/// from it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TauStar {
    /// Members as bitmasks over `SE(F)`, ascending.
    pub family: Vec<SubsetBits>,
    /// Topology axioms checked on `family` itself.
    pub axioms: AxiomReport,
    /// Product of the component topologies; contained in `family`, and equal
    /// to it whenever `family` is a topology.
    pub topology: FiniteTopology,
    /// Smallest topology containing `family`.
    pub generated: FiniteTopology,
}

impl TauStar {
    pub fn contains(&self, t: &SubsetBits) -> bool {
        self.family.binary_search(t).is_ok()
    }
}

/// Filters all `2^|SE(F)|` subsets by [`SoftTopology::is_open_star`].
pub fn materialize_tau_star(tau: &SoftTopology, index: &SeIndex, cap_se: usize) -> Result<TauStar> {
    tau.check_shape(index)?;
    let n = index.len();
    if n > cap_se || n >= 64 {
        return Err(Error::CapExceeded {
            what: "induced topology materialization",
            size: n,
            cap: cap_se,
        });
    }
    let points: Vec<SubsetBits> = (0..n).map(|i| index.points(i)).collect();
    let mut family = Vec::new();
    for mask in 0..(1u64 << n) {
        let members = SubsetBits::from_u64(mask);
        let mut sections = SubsetBits::new();
        for i in &members {
            sections.union_with(&points[i]);
        }
        if tau.sections_open(&sections) {
            family.push(members);
        }
    }
    let axioms = check_topology_axioms(&family, n);
    let generated = generate_topology(&family, n);
    Ok(TauStar {
        family,
        axioms,
        topology: tau.induced_topology(index)?,
        generated,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SoftContinuityReport {
    /// Continuity between the induced topologies on `SE(F)` and `SE(G)`.
    pub holds: bool,
    /// Every `V ∈ σ` has an open preimage `f⁻¹(SE(V))`.
    pub member_only: bool,
    pub member_witness: Option<SoftSet>,
    pub witness: Option<ContinuityWitness>,
}

impl SoftContinuityReport {
    /// Member-only test passed while the full test failed.
    pub fn discrepancy(&self) -> bool {
        self.member_only != self.holds
    }
}

/// Soft continuity of `f: SE(F) → SE(G)` from `τ` to `σ`.
pub fn soft_continuous(
    f: &CarrierMap,
    tau: &SoftTopology,
    src: &SeIndex,
    sigma: &SoftTopology,
    dst: &SeIndex,
    cap_se: usize,
) -> Result<SoftContinuityReport> {
    tau.check_shape(src)?;
    sigma.check_shape(dst)?;
    for n in [src.len(), dst.len()] {
        if n > cap_se {
            return Err(Error::CapExceeded {
                what: "soft continuity",
                size: n,
                cap: cap_se,
            });
        }
    }
    if f.source_size() != src.len() || f.target_size() != dst.len() {
        return Err(Error::ShapeMismatch(format!(
            "map {}→{} against soft-element sets {}→{}",
            f.source_size(),
            f.target_size(),
            src.len(),
            dst.len()
        )));
    }
    let source = tau.induced_topology(src)?;
    let target = sigma.induced_topology(dst)?;

    let mut member_witness = None;
    for v in sigma.members(DEFAULT_OPEN_CAP)? {
        let se = dst.se_of(&v)?;
        if !source.is_open(&f.preimage(se.bits())) {
            member_witness = Some(v);
            break;
        }
    }
    let full = is_continuous(f, &source, &target)?;
    Ok(SoftContinuityReport {
        holds: full.holds,
        member_only: member_witness.is_none(),
        member_witness,
        witness: full.witness,
    })
}
