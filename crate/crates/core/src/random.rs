//! Seeded random instances for property checks and benches.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bitop::{SbtgInstance, SoftBitopSpace};
use crate::bits::SubsetBits;
use crate::group::{FiniteGroup, SoftGroup};
use crate::sets::SoftSet;
use crate::soft_topology::{SoftTopology, DEFAULT_CANONICAL_CAP};

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// One of `ℤ1, ℤ2, ℤ3, ℤ4` and the Klein group.
pub fn small_group<R: Rng>(rng: &mut R) -> FiniteGroup {
    match rng.gen_range(0..5) {
        4 => FiniteGroup::klein(),
        k => FiniteGroup::cyclic(k + 1),
    }
}

/// Each member of `of` kept with probability one half.
pub fn random_subset<R: Rng>(rng: &mut R, of: &SubsetBits) -> SubsetBits {
    of.iter().filter(|_| rng.gen_bool(0.5)).collect()
}

pub fn random_soft_subset<R: Rng>(rng: &mut R, f: &SoftSet) -> SoftSet {
    let sections = f.sections().iter().map(|s| random_subset(rng, s)).collect();
    SoftSet::new(f.universe_size(), sections).expect("inside F")
}

/// Generated by up to `max_generators` random soft subsets.
pub fn random_soft_topology<R: Rng>(
    rng: &mut R,
    f: &SoftSet,
    max_generators: usize,
) -> SoftTopology {
    let k = rng.gen_range(0..=max_generators);
    let gens: Vec<SoftSet> = (0..k).map(|_| random_soft_subset(rng, f)).collect();
    SoftTopology::generated(f, &gens).expect("inside F")
}

/// A soft topology whose every component is the coset topology of a random
/// subgroup of the section, so each slice is a topological group when the
/// group is abelian.
pub fn random_coset_soft_topology<R: Rng>(rng: &mut R, g: &SoftGroup) -> SoftTopology {
    let group = g.group();
    let f = g.carrier();
    let cosets: Vec<Vec<SubsetBits>> = f
        .sections()
        .iter()
        .map(|sec| {
            let subs: Vec<SubsetBits> = group
                .subgroups()
                .into_iter()
                .filter(|h| h.is_subset(sec))
                .collect();
            let n = subs.choose(rng).expect("trivial subgroup").clone();
            let mut out: Vec<SubsetBits> = Vec::new();
            for x in sec {
                let c: SubsetBits = n.iter().map(|y| group.mul(x, y)).collect();
                if !out.contains(&c) {
                    out.push(c);
                }
            }
            out
        })
        .collect();
    let union_of_cosets = |rng: &mut R, t: usize| {
        let mut u = SubsetBits::new();
        for c in &cosets[t] {
            if rng.gen_bool(0.5) {
                u.union_with(c);
            }
        }
        u
    };
    let mut gens = Vec::new();
    for (t, cs) in cosets.iter().enumerate() {
        for c in cs {
            let sections = (0..f.params())
                .map(|s| {
                    if s == t {
                        c.clone()
                    } else {
                        union_of_cosets(rng, s)
                    }
                })
                .collect();
            gens.push(SoftSet::new(f.universe_size(), sections).expect("inside F"));
        }
    }
    SoftTopology::generated(f, &gens).expect("inside F")
}

/// A soft group over a small group with at most two parameters and
/// `|SE(F)| ≤ max_se`.
pub fn random_soft_group<R: Rng>(rng: &mut R, max_se: usize) -> SoftGroup {
    loop {
        let group = small_group(rng);
        let subs = group.subgroups();
        let params = rng.gen_range(1..=2);
        let sections: Vec<SubsetBits> = (0..params)
            .map(|_| subs.choose(rng).expect("nonempty").clone())
            .collect();
        let f = SoftSet::new(group.order(), sections).expect("inside the group");
        if f.se_count() <= max_se {
            return SoftGroup::new(group, f).expect("sections are subgroups");
        }
    }
}

/// Soft group plus two topologies, each either generated from random soft
/// subsets or built from subgroup cosets, with equal odds.
pub fn random_sbtg_instance<R: Rng>(rng: &mut R, max_se: usize) -> SbtgInstance {
    let g = random_soft_group(rng, max_se);
    let pick = |rng: &mut R| {
        if rng.gen_bool(0.5) {
            random_coset_soft_topology(rng, &g)
        } else {
            random_soft_topology(rng, g.carrier(), 3)
        }
    };
    let tau1 = pick(rng);
    let tau2 = pick(rng);
    SbtgInstance::new(g.clone(), tau1, tau2).expect("within caps")
}

/// Canonical soft bitopological space over a universe of at most four points,
/// at most three parameters and `|SE(F)| ≤ max_se`.
pub fn random_canonical_space<R: Rng>(rng: &mut R, max_se: usize) -> SoftBitopSpace {
    loop {
        let n = rng.gen_range(1..=4);
        let params = rng.gen_range(1..=3);
        let sections: Vec<SubsetBits> = (0..params)
            .map(|_| loop {
                let s = random_subset(rng, &SubsetBits::full(n));
                if !s.is_empty() {
                    break s;
                }
            })
            .collect();
        let f = SoftSet::new(n, sections).expect("inside the universe");
        if f.se_count() > max_se {
            continue;
        }
        let can = |rng: &mut R| {
            random_soft_topology(rng, &f, 3)
                .canonical_enlargement(DEFAULT_CANONICAL_CAP)
                .expect("small components")
        };
        let tau1 = can(rng);
        let tau2 = can(rng);
        return SoftBitopSpace::new(tau1, tau2).expect("within caps");
    }
}
