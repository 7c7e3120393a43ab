use serde::Serialize;

use crate::bits::SubsetBits;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::sets::SeSubset;
use crate::soft_topology::{soft_continuous, SoftContinuityReport};
use crate::topology::{is_connected, CarrierMap, DEFAULT_OPEN_CAP};

use super::{bi_soft_connected, Origin, SbtgInstance};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomReport {
    /// Group homomorphism, continuous for both pairs of topologies.
    pub holds: bool,
    pub is_hom: bool,
    /// First pair `(a, b)` with `f(a∗b) ≠ f(a)∗f(b)`.
    pub hom_failure: Option<(usize, usize)>,
    pub continuity: [SoftContinuityReport; 2],
    pub kernel: SeSubset,
    pub image: SeSubset,
    pub kernel_normal: bool,
    pub image_subgroup: bool,
    pub surjective: bool,
    /// For a surjective homomorphism: the target is bi-soft connected
    /// whenever the source is. `None` when not applicable or over the cap.
    pub connectedness_transfer: Option<bool>,
}

/// Soft bitopological group homomorphism `f: SE(F) → SE(G)`.
pub fn check_sbtg_hom(
    src: &SbtgInstance,
    dst: &SbtgInstance,
    f: &CarrierMap,
    cap_se: usize,
) -> Result<HomReport> {
    let (sg, dg) = (src.group(), dst.group());
    if f.source_size() != sg.len() || f.target_size() != dg.len() {
        return Err(Error::ShapeMismatch(format!(
            "map {}→{} against soft-element groups of order {} and {}",
            f.source_size(),
            f.target_size(),
            sg.len(),
            dg.len()
        )));
    }
    let hom_failure = sg.hom_failure(f, dg);
    let cont = |which: Origin| {
        soft_continuous(
            f,
            src.space().tau(which),
            src.space().index(),
            dst.space().tau(which),
            dst.space().index(),
            cap_se,
        )
    };
    let continuity = [cont(Origin::Tau1)?, cont(Origin::Tau2)?];
    let kernel = sg.kernel(f, dg);
    let image = sg.image(f);
    let surjective = image.len() == dg.len();
    let holds = hom_failure.is_none() && continuity.iter().all(|c| c.holds);
    let connectedness_transfer = if holds && surjective {
        match (
            bi_soft_connected(src.space(), DEFAULT_OPEN_CAP),
            bi_soft_connected(dst.space(), DEFAULT_OPEN_CAP),
        ) {
            (Ok(a), Ok(b)) => Some(!a.holds || b.holds),
            _ => None,
        }
    } else {
        None
    };
    Ok(HomReport {
        holds,
        is_hom: hom_failure.is_none(),
        hom_failure,
        kernel_normal: sg.is_normal(&kernel),
        image_subgroup: dg.is_subgroup(&image),
        continuity,
        kernel,
        image,
        surjective,
        connectedness_transfer,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstantHomReport {
    /// Hypothesis unmet, or met and the map is constant.
    pub holds: bool,
    pub hypothesis_met: bool,
    pub connected: bool,
    pub is_hom: bool,
    pub continuous: bool,
    pub constant: bool,
    pub image_size: usize,
    pub notes: Vec<String>,
}

/// A continuous homomorphism from a connected induced space into a discrete
/// group must be constant.
pub fn connected_hom_constant_check(
    src: &SbtgInstance,
    which: Origin,
    dst: &FiniteGroup,
    f: &CarrierMap,
    cap_se: usize,
) -> Result<ConstantHomReport> {
    let sg = src.group();
    let n = sg.len();
    if f.source_size() != n || f.target_size() != dst.order() {
        return Err(Error::ShapeMismatch(format!(
            "map {}→{} against groups of order {n} and {}",
            f.source_size(),
            f.target_size(),
            dst.order()
        )));
    }
    let star = src.space().tau_star(which, cap_se)?;
    let connected = is_connected(&star.topology).holds;
    let is_hom =
        (0..n).all(|a| (0..n).all(|b| f.apply(sg.mul(a, b)) == dst.mul(f.apply(a), f.apply(b))));
    let continuous = (0..dst.order()).all(|y| {
        star.topology
            .is_open(&f.preimage(&SubsetBits::singleton(y)))
    });
    let image_size = f.image(&SubsetBits::full(n)).len();
    let hypothesis_met = connected && is_hom && continuous;
    let mut notes = Vec::new();
    if !connected {
        notes.push("source not connected: hypothesis unmet".to_string());
    }
    if !is_hom {
        notes.push("not a homomorphism: hypothesis unmet".to_string());
    }
    if !continuous {
        notes.push("not continuous into the discrete group: hypothesis unmet".to_string());
    }
    Ok(ConstantHomReport {
        holds: !hypothesis_met || image_size == 1,
        hypothesis_met,
        connected,
        is_hom,
        continuous,
        constant: image_size == 1,
        image_size,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;
    use crate::group::SoftGroup;
    use crate::sets::SoftSet;
    use crate::soft_topology::{SoftTopology, DEFAULT_TAU_STAR_CAP};

    #[test]
    fn identity_and_trivial_maps() {
        let (g, disc, ind) = gallery::z2_discrete_indiscrete(2);
        let inst = SbtgInstance::new(g, disc, ind).unwrap();
        let n = inst.group().len();
        let id = CarrierMap::identity(n);
        let r = check_sbtg_hom(&inst, &inst, &id, DEFAULT_TAU_STAR_CAP).unwrap();
        assert!(r.holds && r.surjective && r.kernel.len() == 1);
        assert_eq!(r.connectedness_transfer, Some(true));

        let e = CarrierMap::constant(n, n, inst.group().identity()).unwrap();
        let r = check_sbtg_hom(&inst, &inst, &e, DEFAULT_TAU_STAR_CAP).unwrap();
        assert!(r.is_hom && r.holds);
        assert_eq!(r.kernel.len(), n);
        assert!(r.kernel_normal && r.image_subgroup);
    }

    #[test]
    fn non_hom_is_caught() {
        let (g, disc, _) = gallery::z2_discrete_indiscrete(1);
        let inst = SbtgInstance::new(g, disc.clone(), disc).unwrap();
        let swap = CarrierMap::new(2, vec![1, 0]).unwrap();
        let r = check_sbtg_hom(&inst, &inst, &swap, DEFAULT_TAU_STAR_CAP).unwrap();
        assert!(!r.is_hom && !r.holds);
        assert_eq!(r.hom_failure, Some((0, 0)));
    }

    #[test]
    fn constant_into_discrete() {
        let z2 = FiniteGroup::cyclic(2);
        let f = SoftSet::constant(2, 1, SubsetBits::full(2));
        let g = SoftGroup::new(z2.clone(), f.clone()).unwrap();
        let ind = SbtgInstance::new(
            g,
            SoftTopology::indiscrete(&f),
            SoftTopology::indiscrete(&f),
        )
        .unwrap();
        let zero = CarrierMap::constant(2, 2, 0).unwrap();
        let r = connected_hom_constant_check(&ind, Origin::Tau1, &z2, &zero, DEFAULT_TAU_STAR_CAP)
            .unwrap();
        assert!(r.hypothesis_met && r.constant && r.holds);
        assert_eq!(r.image_size, 1);

        let id = CarrierMap::identity(2);
        let r = connected_hom_constant_check(&ind, Origin::Tau1, &z2, &id, DEFAULT_TAU_STAR_CAP)
            .unwrap();
        assert!(r.is_hom && !r.continuous && !r.hypothesis_met && r.holds);

        let (g, disc, ind) = gallery::z2_discrete_indiscrete(1);
        let split = SbtgInstance::new(g, disc, ind).unwrap();
        let r = connected_hom_constant_check(&split, Origin::Tau1, &z2, &id, DEFAULT_TAU_STAR_CAP)
            .unwrap();
        assert!(!r.connected && !r.hypothesis_met && r.holds);
        assert_eq!(r.image_size, 2);
    }
}
