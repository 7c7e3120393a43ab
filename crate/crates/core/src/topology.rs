//! Finite topologies in their Alexandrov form.
//!
//! Every finite topology is determined by its minimal open neighbourhoods
//! `N(x)`: a set is open iff it contains `N(x)` for each of its points. The
//! open family itself can be enumerated on demand, but products of even small
//! spaces have far too many opens to store, so [`FiniteTopology`] keeps only
//! the neighbourhoods.

use std::collections::{BTreeSet, HashSet};

use serde::Serialize;

use crate::bits::SubsetBits;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// Default cap on the number of opens enumerated by [`FiniteTopology::opens`].
pub const DEFAULT_OPEN_CAP: usize = 65536;
/// Default cap on a product carrier.
pub const DEFAULT_PRODUCT_CAP: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteTopology {
    size: usize,
    nbhd: Vec<SubsetBits>,
}

impl FiniteTopology {
    pub fn discrete(n: usize) -> Self {
        Self {
            size: n,
            nbhd: (0..n).map(SubsetBits::singleton).collect(),
        }
    }

    pub fn indiscrete(n: usize) -> Self {
        Self {
            size: n,
            nbhd: vec![SubsetBits::full(n); n],
        }
    }

    /// Validates an explicit open family.
    pub fn from_opens(n: usize, opens: &[SubsetBits]) -> Result<Self> {
        let report = check_topology_axioms(opens, n);
        match report.witness {
            None => Ok(generate_topology(opens, n)),
            Some(w) => Err(Error::InvalidTopology(w.to_string())),
        }
    }

    /// Trusts the caller that `nbhd` is a valid neighbourhood system
    /// (`x ∈ N(x)` and `y ∈ N(x) ⇒ N(y) ⊆ N(x)`).
    pub(crate) fn from_neighborhoods(size: usize, nbhd: Vec<SubsetBits>) -> Self {
        debug_assert_eq!(nbhd.len(), size);
        debug_assert!(nbhd
            .iter()
            .enumerate()
            .all(|(x, n)| n.contains(x) && n.iter().all(|y| nbhd[y].is_subset(n))));
        Self { size, nbhd }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Minimal open neighbourhood `N(x)`.
    pub fn neighborhood(&self, x: usize) -> &SubsetBits {
        &self.nbhd[x]
    }

    pub fn neighborhoods(&self) -> &[SubsetBits] {
        &self.nbhd
    }

    pub fn full(&self) -> SubsetBits {
        SubsetBits::full(self.size)
    }

    pub fn is_open(&self, u: &SubsetBits) -> bool {
        u.bound() <= self.size && u.iter().all(|x| self.nbhd[x].is_subset(u))
    }

    pub fn is_closed(&self, u: &SubsetBits) -> bool {
        self.is_open(&u.complement(self.size))
    }

    /// Smallest open set containing `s`.
    pub fn open_hull(&self, s: &SubsetBits) -> SubsetBits {
        let mut out = SubsetBits::new();
        for x in s {
            out.union_with(&self.nbhd[x]);
        }
        out
    }

    /// Topological closure of `s`.
    pub fn closure(&self, s: &SubsetBits) -> SubsetBits {
        (0..self.size)
            .filter(|&y| !self.nbhd[y].is_disjoint(s))
            .collect()
    }

    pub fn is_discrete(&self) -> bool {
        self.nbhd.iter().all(|n| n.len() == 1)
    }

    /// All opens, ascending by bitmask.
    pub fn opens(&self, cap: usize) -> Result<Vec<SubsetBits>> {
        let mut seen: BTreeSet<SubsetBits> = BTreeSet::new();
        seen.insert(SubsetBits::new());
        let mut queue = vec![SubsetBits::new()];
        while let Some(u) = queue.pop() {
            for x in 0..self.size {
                if u.contains(x) {
                    continue;
                }
                let v = u.union(&self.nbhd[x]);
                if seen.insert(v.clone()) {
                    if seen.len() > cap {
                        return Err(Error::CapExceeded {
                            what: "open enumeration",
                            size: seen.len(),
                            cap,
                        });
                    }
                    queue.push(v);
                }
            }
        }
        Ok(seen.into_iter().collect())
    }

    /// Whether every open of `self` is open in `other`.
    pub fn is_coarser_than(&self, other: &Self) -> bool {
        self.size == other.size
            && self
                .nbhd
                .iter()
                .zip(&other.nbhd)
                .all(|(mine, theirs)| theirs.is_subset(mine))
    }

    /// Subspace topology on `s`, re-indexed densely in ascending order.
    pub fn subspace(&self, s: &SubsetBits) -> Self {
        let points: Vec<usize> = s.iter().collect();
        let dense = |u: &SubsetBits| -> SubsetBits {
            points
                .iter()
                .enumerate()
                .filter(|(_, &p)| u.contains(p))
                .map(|(i, _)| i)
                .collect()
        };
        Self {
            size: points.len(),
            nbhd: points.iter().map(|&p| dense(&self.nbhd[p])).collect(),
        }
    }
}

/// What went wrong in an open family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AxiomViolation {
    MissingEmpty,
    MissingFull,
    OutsideCarrier {
        set: SubsetBits,
    },
    Union {
        left: SubsetBits,
        right: SubsetBits,
        missing: SubsetBits,
    },
    Intersection {
        left: SubsetBits,
        right: SubsetBits,
        missing: SubsetBits,
    },
}

impl std::fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::MissingEmpty => write!(f, "empty set missing"),
            Self::MissingFull => write!(f, "full carrier missing"),
            Self::OutsideCarrier { set } => write!(f, "{set:?} leaves the carrier"),
            Self::Union {
                left,
                right,
                missing,
            } => write!(f, "union of {left:?} and {right:?} = {missing:?} missing"),
            Self::Intersection {
                left,
                right,
                missing,
            } => write!(
                f,
                "intersection of {left:?} and {right:?} = {missing:?} missing"
            ),
        }
    }
}

impl serde::Serialize for SubsetBits {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub holds: bool,
    pub witness: Option<AxiomViolation>,
}

/// Checks `∅`, the full carrier and closure under pairwise union and
/// intersection.
///
/// A family passing the neighbourhood test below (contains every `N(x)` and
/// every `U ∪ N(x)`) equals the topology it generates. When the test fails the
/// pairs are scanned in canonical order so the reported witness is the first
/// violating pair.
pub fn check_topology_axioms(opens: &[SubsetBits], n: usize) -> AxiomReport {
    let fail = |w| AxiomReport {
        holds: false,
        witness: Some(w),
    };
    let family: BTreeSet<SubsetBits> = opens.iter().cloned().collect();
    if let Some(bad) = family.iter().find(|u| u.bound() > n) {
        return fail(AxiomViolation::OutsideCarrier { set: bad.clone() });
    }
    if !family.contains(&SubsetBits::new()) {
        return fail(AxiomViolation::MissingEmpty);
    }
    if !family.contains(&SubsetBits::full(n)) {
        return fail(AxiomViolation::MissingFull);
    }
    let lookup: HashSet<&SubsetBits> = family.iter().collect();
    let nbhd = generate_topology(opens, n).nbhd;
    let closed = nbhd.iter().all(|nx| lookup.contains(nx))
        && family
            .iter()
            .all(|u| nbhd.iter().all(|nx| lookup.contains(&u.union(nx))));
    if closed {
        return AxiomReport {
            holds: true,
            witness: None,
        };
    }
    let sorted: Vec<&SubsetBits> = family.iter().collect();
    for (i, u) in sorted.iter().enumerate() {
        for v in &sorted[i..] {
            let join = u.union(v);
            if !lookup.contains(&join) {
                return fail(AxiomViolation::Union {
                    left: (*u).clone(),
                    right: (*v).clone(),
                    missing: join,
                });
            }
            let meet = u.intersection(v);
            if !lookup.contains(&meet) {
                return fail(AxiomViolation::Intersection {
                    left: (*u).clone(),
                    right: (*v).clone(),
                    missing: meet,
                });
            }
        }
    }
    unreachable!("neighbourhood test failed but every pair is closed")
}

/// Smallest topology containing `subbasis`.
pub fn generate_topology(subbasis: &[SubsetBits], n: usize) -> FiniteTopology {
    let full = SubsetBits::full(n);
    let mut nbhd = vec![full.clone(); n];
    for s in subbasis {
        let s = s.intersection(&full);
        for x in &s {
            nbhd[x].intersect_with(&s);
        }
    }
    FiniteTopology { size: n, nbhd }
}

pub fn minimal_open_neighborhood(tau: &FiniteTopology, x: usize) -> &SubsetBits {
    tau.neighborhood(x)
}

/// Row-major pairing used for every product carrier.
pub fn pair_index(x: usize, y: usize, right_size: usize) -> usize {
    x * right_size + y
}

pub fn product_topology(a: &FiniteTopology, b: &FiniteTopology) -> Result<FiniteTopology> {
    product_topology_with_cap(a, b, DEFAULT_PRODUCT_CAP)
}

pub fn product_topology_with_cap(
    a: &FiniteTopology,
    b: &FiniteTopology,
    cap: usize,
) -> Result<FiniteTopology> {
    let size = a.size * b.size;
    if size > cap {
        return Err(Error::CapExceeded {
            what: "product carrier",
            size,
            cap,
        });
    }
    let mut nbhd = Vec::with_capacity(size);
    for x in 0..a.size {
        for y in 0..b.size {
            let mut n = SubsetBits::new();
            for u in a.neighborhood(x) {
                for v in b.neighborhood(y) {
                    n.insert(pair_index(u, v, b.size));
                }
            }
            nbhd.push(n);
        }
    }
    Ok(FiniteTopology { size, nbhd })
}

/// A total function between finite carriers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CarrierMap {
    target_size: usize,
    table: Vec<usize>,
}

impl CarrierMap {
    pub fn new(target_size: usize, table: Vec<usize>) -> Result<Self> {
        if let Some(&bad) = table.iter().find(|&&y| y >= target_size) {
            return Err(Error::OutOfCarrier {
                index: bad,
                size: target_size,
            });
        }
        Ok(Self { target_size, table })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            target_size: n,
            table: (0..n).collect(),
        }
    }

    pub fn constant(source_size: usize, target_size: usize, y: usize) -> Result<Self> {
        Self::new(target_size, vec![y; source_size])
    }

    pub fn source_size(&self) -> usize {
        self.table.len()
    }

    pub fn target_size(&self) -> usize {
        self.target_size
    }

    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn image(&self, s: &SubsetBits) -> SubsetBits {
        s.iter().map(|x| self.table[x]).collect()
    }

    pub fn preimage(&self, s: &SubsetBits) -> SubsetBits {
        (0..self.table.len())
            .filter(|&x| s.contains(self.table[x]))
            .collect()
    }

    /// `self` after `first`.
    pub fn compose(&self, first: &CarrierMap) -> Result<Self> {
        if first.target_size != self.table.len() {
            return Err(Error::ShapeMismatch(format!(
                "cannot compose a map into {} points with a map from {} points",
                first.target_size,
                self.table.len()
            )));
        }
        Ok(Self {
            target_size: self.target_size,
            table: first.table.iter().map(|&y| self.table[y]).collect(),
        })
    }

    pub fn is_bijection(&self) -> bool {
        self.table.len() == self.target_size && {
            let img: SubsetBits = self.table.iter().copied().collect();
            img.len() == self.target_size
        }
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_bijection() {
            return None;
        }
        let mut table = vec![0; self.target_size];
        for (x, &y) in self.table.iter().enumerate() {
            table[y] = x;
        }
        Some(Self {
            target_size: self.table.len(),
            table,
        })
    }

    pub fn is_identity(&self) -> bool {
        self.table.iter().enumerate().all(|(x, &y)| x == y) && self.is_bijection()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContinuityWitness {
    /// Source point where continuity breaks.
    pub point: usize,
    /// A target open whose preimage is not open.
    pub open: SubsetBits,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContinuityReport {
    pub holds: bool,
    pub witness: Option<ContinuityWitness>,
}

impl ContinuityReport {
    fn ok() -> Self {
        Self {
            holds: true,
            witness: None,
        }
    }
}

fn check_map_shape(f: &CarrierMap, src: &FiniteTopology, tgt: &FiniteTopology) -> Result<()> {
    if f.source_size() != src.size || f.target_size != tgt.size {
        return Err(Error::ShapeMismatch(format!(
            "map {}→{} against carriers {}→{}",
            f.source_size(),
            f.target_size,
            src.size,
            tgt.size
        )));
    }
    Ok(())
}

/// Continuity via `f(N(x)) ⊆ N(f(x))`; the witness is the first failing
/// point together with the open `N(f(x))`.
pub fn is_continuous(
    f: &CarrierMap,
    src: &FiniteTopology,
    tgt: &FiniteTopology,
) -> Result<ContinuityReport> {
    check_map_shape(f, src, tgt)?;
    for x in 0..src.size {
        let target_nbhd = tgt.neighborhood(f.apply(x));
        if !src
            .neighborhood(x)
            .iter()
            .all(|u| target_nbhd.contains(f.apply(u)))
        {
            return Ok(ContinuityReport {
                holds: false,
                witness: Some(ContinuityWitness {
                    point: x,
                    open: target_nbhd.clone(),
                }),
            });
        }
    }
    Ok(ContinuityReport::ok())
}

/// Continuity straight from the definition: every target open has an open
/// preimage. The witness is the first such open in canonical order.
pub fn is_continuous_by_preimages(
    f: &CarrierMap,
    src: &FiniteTopology,
    tgt: &FiniteTopology,
    cap: usize,
) -> Result<ContinuityReport> {
    check_map_shape(f, src, tgt)?;
    for v in tgt.opens(cap)? {
        let pre = f.preimage(&v);
        if !src.is_open(&pre) {
            let point = pre
                .iter()
                .find(|&x| !src.neighborhood(x).is_subset(&pre))
                .expect("non-open preimage has a bad point");
            return Ok(ContinuityReport {
                holds: false,
                witness: Some(ContinuityWitness { point, open: v }),
            });
        }
    }
    Ok(ContinuityReport::ok())
}

pub fn is_homeomorphism(
    f: &CarrierMap,
    src: &FiniteTopology,
    tgt: &FiniteTopology,
) -> Result<bool> {
    let Some(inv) = f.inverse() else {
        return Ok(false);
    };
    Ok(is_continuous(f, src, tgt)?.holds && is_continuous(&inv, tgt, src)?.holds)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum SeparationLevel {
    None,
    T0,
    T1,
    T2,
}

impl SeparationLevel {
    pub fn from_index(j: u8) -> Option<Self> {
        match j {
            0 => Some(Self::T0),
            1 => Some(Self::T1),
            2 => Some(Self::T2),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::None => "none",
            Self::T0 => "T0",
            Self::T1 => "T1",
            Self::T2 => "T2",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeparationReport {
    /// Highest level satisfied.
    pub level: SeparationLevel,
    /// First pair failing the next level up, if any.
    pub witness: Option<(usize, usize)>,
}

/// First pair `x < y` with `x, y` topologically indistinguishable.
pub fn t0_failure(tau: &FiniteTopology) -> Option<(usize, usize)> {
    let n = tau.size;
    (0..n)
        .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
        .find(|&(x, y)| tau.nbhd[x].contains(y) && tau.nbhd[y].contains(x))
}

/// First ordered pair `(x, y)` with every open around `x` containing `y`.
pub fn t1_failure(tau: &FiniteTopology) -> Option<(usize, usize)> {
    let n = tau.size;
    (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .find(|&(x, y)| x != y && tau.nbhd[x].contains(y))
}

/// First pair `x < y` whose minimal neighbourhoods meet.
pub fn t2_failure(tau: &FiniteTopology) -> Option<(usize, usize)> {
    let n = tau.size;
    (0..n)
        .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
        .find(|&(x, y)| !tau.nbhd[x].is_disjoint(&tau.nbhd[y]))
}

pub fn separation_classify(tau: &FiniteTopology) -> SeparationReport {
    classify(t0_failure(tau), t1_failure(tau), t2_failure(tau))
}

fn classify(
    t0: Option<(usize, usize)>,
    t1: Option<(usize, usize)>,
    t2: Option<(usize, usize)>,
) -> SeparationReport {
    let (level, witness) = match (t0, t1, t2) {
        (Some(w), _, _) => (SeparationLevel::None, Some(w)),
        (None, Some(w), _) => (SeparationLevel::T0, Some(w)),
        (None, None, Some(w)) => (SeparationLevel::T1, Some(w)),
        (None, None, None) => (SeparationLevel::T2, None),
    };
    SeparationReport { level, witness }
}

fn check_same_carrier(a: &FiniteTopology, b: &FiniteTopology) -> Result<()> {
    if a.size != b.size {
        return Err(Error::ShapeMismatch(format!(
            "carriers of size {} and {}",
            a.size, b.size
        )));
    }
    Ok(())
}

/// First pair `x < y` that no open of either topology tells apart.
pub fn pairwise_t0_failure(t1: &FiniteTopology, t2: &FiniteTopology) -> Option<(usize, usize)> {
    let n = t1.size;
    (0..n)
        .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
        .find(|&(x, y)| {
            t1.nbhd[x].contains(y)
                && t2.nbhd[x].contains(y)
                && t1.nbhd[y].contains(x)
                && t2.nbhd[y].contains(x)
        })
}

/// First ordered pair `(a, b)` lacking a `t1`-open around `a` missing `b`
/// together with a `t2`-open around `b` missing `a`.
pub fn pairwise_t1_failure(t1: &FiniteTopology, t2: &FiniteTopology) -> Option<(usize, usize)> {
    let n = t1.size;
    (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .find(|&(a, b)| a != b && (t1.nbhd[a].contains(b) || t2.nbhd[b].contains(a)))
}

/// First ordered pair `(a, b)` with no disjoint `t1`-open around `a` and
/// `t2`-open around `b`.
pub fn pairwise_t2_failure(t1: &FiniteTopology, t2: &FiniteTopology) -> Option<(usize, usize)> {
    let n = t1.size;
    (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .find(|&(a, b)| a != b && !t1.nbhd[a].is_disjoint(&t2.nbhd[b]))
}

pub fn pairwise_separation_classify(
    t1: &FiniteTopology,
    t2: &FiniteTopology,
) -> Result<SeparationReport> {
    check_same_carrier(t1, t2)?;
    Ok(classify(
        pairwise_t0_failure(t1, t2),
        pairwise_t1_failure(t1, t2),
        pairwise_t2_failure(t1, t2),
    ))
}

/// Whether the pair `(t1, t2)` is pairwise `T_j`.
pub fn pairwise_satisfies(
    t1: &FiniteTopology,
    t2: &FiniteTopology,
    level: SeparationLevel,
) -> bool {
    match level {
        SeparationLevel::None => true,
        SeparationLevel::T0 => pairwise_t0_failure(t1, t2).is_none(),
        SeparationLevel::T1 => pairwise_t1_failure(t1, t2).is_none(),
        SeparationLevel::T2 => pairwise_t2_failure(t1, t2).is_none(),
    }
}

pub fn satisfies(tau: &FiniteTopology, level: SeparationLevel) -> bool {
    match level {
        SeparationLevel::None => true,
        SeparationLevel::T0 => t0_failure(tau).is_none(),
        SeparationLevel::T1 => t1_failure(tau).is_none(),
        SeparationLevel::T2 => t2_failure(tau).is_none(),
    }
}

/// Connected components, ordered by least member.
pub fn components(tau: &FiniteTopology) -> Vec<SubsetBits> {
    let n = tau.size;
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for x in 0..n {
        for y in tau.neighborhood(x) {
            let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
            if rx != ry {
                parent[rx.max(ry)] = rx.min(ry);
            }
        }
    }
    let mut out: Vec<SubsetBits> = Vec::new();
    let mut slot = vec![usize::MAX; n];
    for x in 0..n {
        let r = find(&mut parent, x);
        if slot[r] == usize::MAX {
            slot[r] = out.len();
            out.push(SubsetBits::new());
        }
        out[slot[r]].insert(x);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConnectedReport {
    pub holds: bool,
    /// A proper nonempty clopen set (the component of point 0).
    pub witness: Option<SubsetBits>,
}

pub fn is_connected(tau: &FiniteTopology) -> ConnectedReport {
    let comps = components(tau);
    if comps.len() <= 1 {
        ConnectedReport {
            holds: true,
            witness: None,
        }
    } else {
        ConnectedReport {
            holds: false,
            witness: Some(comps[0].clone()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupMapKind {
    /// `(x, y) ↦ x y⁻¹`
    Delta,
    Multiplication,
    Inversion,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TopGroupWitness {
    pub map: GroupMapKind,
    /// Failing source point; pairs are `(x, y)`, inversion uses `(x, x)`.
    pub point: (usize, usize),
    pub open: SubsetBits,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TopGroupReport {
    /// Continuity of `Δ(x, y) = x y⁻¹` on the product space.
    pub holds: bool,
    pub multiplication: bool,
    pub inversion: bool,
    pub witness: Option<TopGroupWitness>,
}

impl TopGroupReport {
    /// `Δ` continuous exactly when multiplication and inversion both are.
    pub fn is_consistent(&self) -> bool {
        self.holds == (self.multiplication && self.inversion)
    }
}

pub fn is_topological_group(g: &FiniteGroup, tau: &FiniteTopology) -> Result<TopGroupReport> {
    let n = g.order();
    if tau.size != n {
        return Err(Error::ShapeMismatch(format!(
            "topology on {} points for a group of order {n}",
            tau.size
        )));
    }
    let square = product_topology(tau, tau)?;
    let binary = |op: &dyn Fn(usize, usize) -> usize| {
        let table = (0..n * n).map(|p| op(p / n, p % n)).collect();
        CarrierMap::new(n, table)
    };
    let delta = binary(&|x, y| g.mul(x, g.inv(y)))?;
    let mul = binary(&|x, y| g.mul(x, y))?;
    let inv = CarrierMap::new(n, (0..n).map(|x| g.inv(x)).collect())?;

    let d = is_continuous(&delta, &square, tau)?;
    let m = is_continuous(&mul, &square, tau)?;
    let i = is_continuous(&inv, tau, tau)?;
    let witness = d.witness.map(|w| TopGroupWitness {
        map: GroupMapKind::Delta,
        point: (w.point / n, w.point % n),
        open: w.open,
    });
    Ok(TopGroupReport {
        holds: d.holds,
        multiplication: m.holds,
        inversion: i.holds,
        witness,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BitopGroupReport {
    pub holds: bool,
    pub first: TopGroupReport,
    pub second: TopGroupReport,
}

pub fn is_bitopological_group(
    g: &FiniteGroup,
    t1: &FiniteTopology,
    t2: &FiniteTopology,
) -> Result<BitopGroupReport> {
    let first = is_topological_group(g, t1)?;
    let second = is_topological_group(g, t2)?;
    Ok(BitopGroupReport {
        holds: first.holds && second.holds,
        first,
        second,
    })
}
