//! Cayley-table groups, soft groups and the soft-element group `(SE(F), ∗)`.

use serde::Serialize;

use crate::bits::SubsetBits;
use crate::error::{Error, Result};
use crate::sets::{SeIndex, SeSubset, SoftSet};
use crate::topology::CarrierMap;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverses: Vec<usize>,
    labels: Vec<String>,
}

impl FiniteGroup {
    /// Validates a product table `rows[x][y] = x·y`.
    ///
    /// Errors name the violated axiom with a concrete row, column or triple.
    pub fn from_table(labels: Vec<String>, rows: &[Vec<usize>], identity: usize) -> Result<Self> {
        let n = labels.len();
        let bad = |msg: String| Err(Error::InvalidGroup(msg));
        if n == 0 {
            return bad("empty group".into());
        }
        if rows.len() != n {
            return bad(format!("{} rows for {n} elements", rows.len()));
        }
        if let Some(r) = rows.iter().position(|row| row.len() != n) {
            return bad(format!("row `{}` has {} entries", labels[r], rows[r].len()));
        }
        if let Some(&v) = rows.iter().flatten().find(|&&v| v >= n) {
            return bad(format!("entry {v} outside the element list"));
        }
        if identity >= n {
            return bad(format!("identity index {identity} out of range"));
        }
        for x in 0..n {
            let row: SubsetBits = rows[x].iter().copied().collect();
            if row.len() != n {
                return bad(format!("row `{}` repeats an entry", labels[x]));
            }
            let col: SubsetBits = (0..n).map(|y| rows[y][x]).collect();
            if col.len() != n {
                return bad(format!("column `{}` repeats an entry", labels[x]));
            }
        }
        if let Some(x) = (0..n).find(|&x| rows[identity][x] != x || rows[x][identity] != x) {
            return bad(format!(
                "`{}` is not an identity: fails at `{}`",
                labels[identity], labels[x]
            ));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if rows[rows[a][b]][c] != rows[a][rows[b][c]] {
                        return bad(format!(
                            "associativity fails at ({}, {}, {})",
                            labels[a], labels[b], labels[c]
                        ));
                    }
                }
            }
        }
        let table: Vec<usize> = rows.iter().flatten().copied().collect();
        let inverses = (0..n)
            .map(|x| {
                (0..n)
                    .find(|&y| table[x * n + y] == identity)
                    .expect("latin row")
            })
            .collect();
        Ok(Self {
            order: n,
            table,
            identity,
            inverses,
            labels,
        })
    }

    /// Builds a group from a table written with labels.
    pub fn from_labeled_table(
        labels: &[String],
        rows: &[Vec<String>],
        identity: &str,
    ) -> Result<Self> {
        let find = |l: &str| {
            labels
                .iter()
                .position(|x| x == l)
                .ok_or_else(|| Error::UnknownLabel(l.to_string()))
        };
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|l| find(l)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_table(labels.to_vec(), &rows, find(identity)?)
    }

    fn from_op(labels: Vec<String>, op: impl Fn(usize, usize) -> usize) -> Self {
        let n = labels.len();
        let rows: Vec<Vec<usize>> = (0..n).map(|x| (0..n).map(|y| op(x, y)).collect()).collect();
        Self::from_table(labels, &rows, 0).expect("built-in group")
    }

    /// `ℤ_n` with labels `0..n`.
    pub fn cyclic(n: usize) -> Self {
        Self::from_op((0..n).map(|i| i.to_string()).collect(), |x, y| (x + y) % n)
    }

    pub fn trivial() -> Self {
        Self::from_op(vec!["e".into()], |_, _| 0)
    }

    /// Dihedral group of order `2n`; element `i·n + j` is `s^i r^j`, labelled
    /// `e, r, r2, .., s, sr, sr2, ..`.
    pub fn dihedral(n: usize) -> Self {
        let rot = |j: usize| match j {
            0 => String::new(),
            1 => "r".to_string(),
            _ => format!("r{j}"),
        };
        let labels = (0..2 * n)
            .map(|k| {
                let (i, j) = (k / n, k % n);
                match (i, j) {
                    (0, 0) => "e".to_string(),
                    (0, _) => rot(j),
                    _ => format!("s{}", rot(j)),
                }
            })
            .collect();
        Self::from_op(labels, |x, y| {
            let (a, b) = (x / n, x % n);
            let (c, d) = (y / n, y % n);
            let b = if c == 0 { b } else { (n - b) % n };
            ((a + c) % 2) * n + (b + d) % n
        })
    }

    /// `ℤ_2 × ℤ_2`.
    pub fn klein() -> Self {
        Self::from_op(["e", "a", "b", "c"].map(String::from).to_vec(), |x, y| {
            x ^ y
        })
    }

    pub fn direct_product(a: &Self, b: &Self) -> Self {
        let m = b.order;
        let labels = (0..a.order * m)
            .map(|k| format!("({},{})", a.labels[k / m], b.labels[k % m]))
            .collect();
        Self::from_op(labels, |x, y| a.mul(x / m, y / m) * m + b.mul(x % m, y % m))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x * self.order + y]
    }

    pub fn inv(&self, x: usize) -> usize {
        self.inverses[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.order)
            .map(<[usize]>::to_vec)
            .collect()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|x| (0..self.order).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    pub fn check_subgroup(&self, s: &SubsetBits) -> SubgroupCheck {
        if !s.contains(self.identity) {
            return SubgroupCheck::MissingIdentity;
        }
        for x in s {
            if !s.contains(self.inv(x)) {
                return SubgroupCheck::MissingInverse { element: x };
            }
            for y in s {
                if !s.contains(self.mul(x, y)) {
                    return SubgroupCheck::NotClosed { left: x, right: y };
                }
            }
        }
        SubgroupCheck::Subgroup
    }

    pub fn is_subgroup(&self, s: &SubsetBits) -> bool {
        s.bound() <= self.order && self.check_subgroup(s) == SubgroupCheck::Subgroup
    }

    pub fn is_normal(&self, s: &SubsetBits) -> bool {
        self.is_subgroup(s)
            && (0..self.order).all(|g| {
                s.iter()
                    .all(|h| s.contains(self.mul(self.mul(g, h), self.inv(g))))
            })
    }

    /// Smallest subgroup containing `gens`.
    pub fn generated(&self, gens: &SubsetBits) -> SubsetBits {
        let mut s = SubsetBits::singleton(self.identity);
        s.union_with(gens);
        loop {
            let mut next = s.clone();
            for x in &s {
                next.insert(self.inv(x));
                for y in &s {
                    next.insert(self.mul(x, y));
                }
            }
            if next == s {
                return s;
            }
            s = next;
        }
    }

    /// Every subgroup, ascending by bitmask.
    pub fn subgroups(&self) -> Vec<SubsetBits> {
        let mut found = std::collections::BTreeSet::new();
        let mut frontier = vec![SubsetBits::singleton(self.identity)];
        found.insert(frontier[0].clone());
        while let Some(h) = frontier.pop() {
            for g in 0..self.order {
                if h.contains(g) {
                    continue;
                }
                let mut gens = h.clone();
                gens.insert(g);
                let k = self.generated(&gens);
                if found.insert(k.clone()) {
                    frontier.push(k);
                }
            }
        }
        found.into_iter().collect()
    }

    /// The subgroup `s` as a group of its own, elements re-indexed in
    /// ascending order.
    pub fn restrict(&self, s: &SubsetBits) -> Result<Self> {
        if !self.is_subgroup(s) {
            return Err(Error::InvalidGroup(format!("{s:?} is not a subgroup")));
        }
        let elems: Vec<usize> = s.iter().collect();
        let pos = |x: usize| elems.binary_search(&x).expect("closed");
        let rows: Vec<Vec<usize>> = elems
            .iter()
            .map(|&x| elems.iter().map(|&y| pos(self.mul(x, y))).collect())
            .collect();
        let labels = elems.iter().map(|&x| self.labels[x].clone()).collect();
        Self::from_table(labels, &rows, pos(self.identity))
    }

    /// Whether `f` (a table from `self` into `target`) preserves products.
    pub fn is_homomorphism(&self, f: &[usize], target: &Self) -> bool {
        (0..self.order)
            .all(|x| (0..self.order).all(|y| f[self.mul(x, y)] == target.mul(f[x], f[y])))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum SubgroupCheck {
    Subgroup,
    MissingIdentity,
    MissingInverse { element: usize },
    NotClosed { left: usize, right: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SoftGroupReport {
    pub holds: bool,
    pub per_parameter: Vec<SubgroupCheck>,
}

pub fn is_soft_group(f: &SoftSet, g: &FiniteGroup) -> Result<SoftGroupReport> {
    if f.universe_size() != g.order() {
        return Err(Error::ShapeMismatch(format!(
            "soft set over {} elements for a group of order {}",
            f.universe_size(),
            g.order()
        )));
    }
    let per_parameter: Vec<_> = f.sections().iter().map(|s| g.check_subgroup(s)).collect();
    Ok(SoftGroupReport {
        holds: per_parameter.iter().all(|c| *c == SubgroupCheck::Subgroup),
        per_parameter,
    })
}

/// A soft set whose every section is a subgroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SoftGroup {
    group: FiniteGroup,
    carrier: SoftSet,
}

impl SoftGroup {
    pub fn new(group: FiniteGroup, carrier: SoftSet) -> Result<Self> {
        let report = is_soft_group(&carrier, &group)?;
        if let Some(t) = report
            .per_parameter
            .iter()
            .position(|c| *c != SubgroupCheck::Subgroup)
        {
            return Err(Error::NotSoftGroup(t));
        }
        Ok(Self { group, carrier })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn carrier(&self) -> &SoftSet {
        &self.carrier
    }

    /// `F(t)` as a group in its own right, dense indices matching the section
    /// layout of the carrier.
    pub fn slice(&self, t: usize) -> FiniteGroup {
        self.group
            .restrict(self.carrier.section(t))
            .expect("validated soft group")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeOp {
    Mul,
    Inv,
    Identity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
    Inversion,
}

/// `(SE(F), ∗)` with pointwise operations on canonical indices.
#[derive(Debug, Clone)]
pub struct SeGroup {
    soft_group: SoftGroup,
    index: SeIndex,
    slices: Vec<FiniteGroup>,
    identity: usize,
}

impl SeGroup {
    pub fn new(soft_group: SoftGroup) -> Result<Self> {
        Self::with_cap(soft_group, crate::sets::DEFAULT_SE_CAP)
    }

    pub fn with_cap(soft_group: SoftGroup, cap: usize) -> Result<Self> {
        let index = SeIndex::with_cap(soft_group.carrier(), cap)?;
        let slices: Vec<FiniteGroup> = (0..index.params()).map(|t| soft_group.slice(t)).collect();
        let coords: Vec<usize> = slices.iter().map(FiniteGroup::identity).collect();
        let identity = index.index_of_coords(&coords);
        Ok(Self {
            soft_group,
            index,
            slices,
            identity,
        })
    }

    pub fn soft_group(&self) -> &SoftGroup {
        &self.soft_group
    }

    pub fn index(&self) -> &SeIndex {
        &self.index
    }

    pub fn slices(&self) -> &[FiniteGroup] {
        &self.slices
    }

    pub fn len(&self) -> usize {
        self.index.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Index of the constant soft element `e_F`.
    pub fn identity(&self) -> usize {
        self.identity
    }

    fn pointwise(&self, f: impl Fn(usize, &FiniteGroup) -> usize) -> usize {
        let coords: Vec<usize> = self
            .slices
            .iter()
            .enumerate()
            .map(|(t, g)| f(t, g))
            .collect();
        self.index.index_of_coords(&coords)
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.pointwise(|t, g| g.mul(self.index.coord(a, t), self.index.coord(b, t)))
    }

    pub fn inv(&self, a: usize) -> usize {
        self.pointwise(|t, g| g.inv(self.index.coord(a, t)))
    }

    fn check(&self, a: usize) -> Result<()> {
        if a >= self.len() {
            return Err(Error::IndexOutOfRange {
                index: a,
                size: self.len(),
            });
        }
        Ok(())
    }

    pub fn op(&self, kind: SeOp, operands: &[usize]) -> Result<usize> {
        for &a in operands {
            self.check(a)?;
        }
        let arity = match kind {
            SeOp::Mul => 2,
            SeOp::Inv => 1,
            SeOp::Identity => 0,
        };
        if operands.len() != arity {
            return Err(Error::ShapeMismatch(format!(
                "{kind:?} takes {arity} operands, got {}",
                operands.len()
            )));
        }
        Ok(match kind {
            SeOp::Mul => self.mul(operands[0], operands[1]),
            SeOp::Inv => self.inv(operands[0]),
            SeOp::Identity => self.identity,
        })
    }

    /// `x ↦ a∗x`, `x ↦ x∗a` or `x ↦ x⁻¹` as a permutation of `SE(F)`.
    pub fn translation_map(&self, a: usize, side: Side) -> Result<CarrierMap> {
        self.check(a)?;
        let n = self.len();
        let table = (0..n)
            .map(|x| match side {
                Side::Left => self.mul(a, x),
                Side::Right => self.mul(x, a),
                Side::Inversion => self.inv(x),
            })
            .collect();
        CarrierMap::new(n, table)
    }

    /// `SE(F)` as a Cayley-table group on canonical indices.
    pub fn to_group(&self) -> FiniteGroup {
        let n = self.len();
        let rows: Vec<Vec<usize>> = (0..n)
            .map(|a| (0..n).map(|b| self.mul(a, b)).collect())
            .collect();
        let labels = (0..n).map(|i| i.to_string()).collect();
        FiniteGroup::from_table(labels, &rows, self.identity).expect("pointwise product of groups")
    }

    pub fn is_subgroup(&self, s: &SeSubset) -> bool {
        s.contains(self.identity)
            && s.iter()
                .all(|x| s.contains(self.inv(x)) && s.iter().all(|y| s.contains(self.mul(x, y))))
    }

    pub fn is_normal(&self, s: &SeSubset) -> bool {
        self.is_subgroup(s)
            && (0..self.len()).all(|g| {
                let gi = self.inv(g);
                s.iter().all(|h| s.contains(self.mul(self.mul(g, h), gi)))
            })
    }

    /// First pair `(a, b)` with `f(a∗b) ≠ f(a)∗f(b)`.
    pub fn hom_failure(&self, f: &CarrierMap, target: &SeGroup) -> Option<(usize, usize)> {
        let n = self.len();
        (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .find(|&(a, b)| f.apply(self.mul(a, b)) != target.mul(f.apply(a), f.apply(b)))
    }

    pub fn kernel(&self, f: &CarrierMap, target: &SeGroup) -> SeSubset {
        (0..self.len())
            .filter(|&x| f.apply(x) == target.identity())
            .collect()
    }

    pub fn image(&self, f: &CarrierMap) -> SeSubset {
        (0..self.len()).map(|x| f.apply(x)).collect()
    }
}

pub fn se_group_op(kind: SeOp, g: &SeGroup, operands: &[usize]) -> Result<usize> {
    g.op(kind, operands)
}

pub fn translation_map(g: &SeGroup, a: usize, side: Side) -> Result<CarrierMap> {
    g.translation_map(a, side)
}

#[derive(Debug, Clone)]
pub struct ParameterwiseHom {
    pub map: CarrierMap,
    pub is_hom: bool,
    pub kernel: SeSubset,
    pub image: SeSubset,
    pub kernel_normal: bool,
    pub image_subgroup: bool,
}

/// Assembles `(φ(a))(t) = φ_t(a(t))` from per-parameter maps on group
/// elements; `phis[t][x]` is consulted only for `x ∈ F(t)`.
pub fn parameterwise_hom(
    phis: &[Vec<usize>],
    src: &SeGroup,
    dst: &SeGroup,
) -> Result<ParameterwiseHom> {
    let (si, di) = (src.index(), dst.index());
    if phis.len() != si.params() || di.params() != si.params() {
        return Err(Error::SectionCount {
            expected: si.params(),
            found: phis.len(),
        });
    }
    let mut dense_maps = Vec::with_capacity(phis.len());
    let mut is_hom = true;
    for (t, phi) in phis.iter().enumerate() {
        let section = src.soft_group().carrier().section(t);
        let mut dense = Vec::with_capacity(section.len());
        for x in section {
            let y = *phi.get(x).ok_or_else(|| {
                Error::InvalidMap(format!("no value for element {x} at parameter #{t}"))
            })?;
            let p = di.layout().position(t, y).ok_or_else(|| {
                Error::InvalidMap(format!(
                    "image of element {x} leaves the target section at parameter #{t}"
                ))
            })?;
            dense.push(p);
        }
        is_hom &= src.slices()[t].is_homomorphism(&dense, &dst.slices()[t]);
        dense_maps.push(dense);
    }
    let table = (0..src.len())
        .map(|a| {
            let coords: Vec<usize> = dense_maps
                .iter()
                .enumerate()
                .map(|(t, m)| m[si.coord(a, t)])
                .collect();
            di.index_of_coords(&coords)
        })
        .collect();
    let map = CarrierMap::new(dst.len(), table)?;
    let kernel = src.kernel(&map, dst);
    let image = src.image(&map);
    Ok(ParameterwiseHom {
        kernel_normal: src.is_normal(&kernel),
        image_subgroup: dst.is_subgroup(&image),
        map,
        is_hom,
        kernel,
        image,
    })
}
