//! Finite soft sets, soft elements and the canonical enumeration of `SE(F)`.
//!
//! A soft set is stored sectionwise: one [`SubsetBits`] over the universe per
//! parameter. Soft elements of an eligible soft set (all sections nonempty)
//! are enumerated in mixed-radix order with the last parameter varying
//! fastest, each coordinate ranked by ascending universe index.

use std::collections::HashMap;

use crate::bits::SubsetBits;
use crate::error::{Error, Result};

/// Default cap on `|SE(F)|` for enumeration.
pub const DEFAULT_SE_CAP: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq)]
struct Labels {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl Labels {
    fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(Self { labels, index })
    }

    fn get(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }
}

/// The finite universe `X`, elements addressed by index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Universe(Labels);

impl Universe {
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        Labels::new(labels).map(Self)
    }

    pub fn len(&self) -> usize {
        self.0.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.labels.is_empty()
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.0.get(label)
    }

    pub fn label(&self, i: usize) -> &str {
        &self.0.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.0.labels
    }

    pub fn subset(&self, labels: &[&str]) -> Result<SubsetBits> {
        labels.iter().map(|l| self.index_of(l)).collect()
    }
}

/// The parameter set `A`; nonempty with distinct labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParameterSet(Labels);

impl ParameterSet {
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels = Labels::new(labels)?;
        if labels.labels.is_empty() {
            return Err(Error::NoParameters);
        }
        Ok(Self(labels))
    }

    pub fn len(&self) -> usize {
        self.0.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.0.get(label)
    }

    pub fn label(&self, t: usize) -> &str {
        &self.0.labels[t]
    }

    pub fn labels(&self) -> &[String] {
        &self.0.labels
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetOp {
    Union,
    Intersection,
}

/// A map from parameters to subsets of the universe.
///
/// Sections may be empty; only soft-element operations require all of them to
/// be nonempty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub struct SoftSet {
    sections: Vec<SubsetBits>,
    universe_size: usize,
}

impl SoftSet {
    pub fn new(universe_size: usize, sections: Vec<SubsetBits>) -> Result<Self> {
        if sections.is_empty() {
            return Err(Error::NoParameters);
        }
        for s in &sections {
            if s.bound() > universe_size {
                return Err(Error::OutOfCarrier {
                    index: s.bound() - 1,
                    size: universe_size,
                });
            }
        }
        Ok(Self {
            sections,
            universe_size,
        })
    }

    /// The empty soft set `Φ`.
    pub fn empty(universe_size: usize, params: usize) -> Self {
        Self {
            sections: vec![SubsetBits::new(); params],
            universe_size,
        }
    }

    pub fn constant(universe_size: usize, params: usize, section: SubsetBits) -> Self {
        Self {
            sections: vec![section; params],
            universe_size,
        }
    }

    pub fn sections(&self) -> &[SubsetBits] {
        &self.sections
    }

    pub fn section(&self, t: usize) -> &SubsetBits {
        &self.sections[t]
    }

    pub fn params(&self) -> usize {
        self.sections.len()
    }

    pub fn universe_size(&self) -> usize {
        self.universe_size
    }

    pub fn is_null(&self) -> bool {
        self.sections.iter().all(SubsetBits::is_empty)
    }

    /// All sections nonempty, i.e. `SE(F)` is nonempty.
    pub fn is_eligible(&self) -> bool {
        self.sections.iter().all(|s| !s.is_empty())
    }

    /// `∏_t |F(t)|`, saturating.
    pub fn se_count(&self) -> usize {
        self.sections
            .iter()
            .fold(1usize, |acc, s| acc.saturating_mul(s.len()))
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if self.sections.len() != other.sections.len() || self.universe_size != other.universe_size
        {
            return Err(Error::ShapeMismatch(format!(
                "{} sections over {} elements vs {} sections over {} elements",
                self.sections.len(),
                self.universe_size,
                other.sections.len(),
                other.universe_size
            )));
        }
        Ok(())
    }

    /// `self ⊆_s other`.
    pub fn is_soft_subset(&self, other: &Self) -> Result<bool> {
        self.check_shape(other)?;
        Ok(self
            .sections
            .iter()
            .zip(&other.sections)
            .all(|(a, b)| a.is_subset(b)))
    }

    pub fn combine(&self, op: SetOp, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let sections = self
            .sections
            .iter()
            .zip(&other.sections)
            .map(|(a, b)| match op {
                SetOp::Union => a.union(b),
                SetOp::Intersection => a.intersection(b),
            })
            .collect();
        Ok(Self {
            sections,
            universe_size: self.universe_size,
        })
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.combine(SetOp::Union, other)
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.combine(SetOp::Intersection, other)
    }

    /// `a ∈_s self`.
    pub fn contains_element(&self, a: &SoftElement) -> bool {
        a.choices.len() == self.sections.len()
            && a.choices
                .iter()
                .zip(&self.sections)
                .all(|(&x, s)| s.contains(x))
    }
}

/// Builds a soft set from per-parameter label lists.
pub fn make_soft_set(
    universe: &Universe,
    params: &ParameterSet,
    sections: &[Vec<&str>],
) -> Result<SoftSet> {
    if sections.len() != params.len() {
        return Err(Error::SectionCount {
            expected: params.len(),
            found: sections.len(),
        });
    }
    let sections = sections
        .iter()
        .map(|labels| universe.subset(labels))
        .collect::<Result<Vec<_>>>()?;
    SoftSet::new(universe.len(), sections)
}

/// A choice function: one universe index per parameter.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
#[serde(transparent)]
pub struct SoftElement {
    pub choices: Vec<usize>,
}

impl SoftElement {
    pub fn new(choices: Vec<usize>) -> Self {
        Self { choices }
    }

    pub fn constant(params: usize, x: usize) -> Self {
        Self {
            choices: vec![x; params],
        }
    }
}

/// Dense re-indexing of the sections of an ambient soft set `F`.
///
/// Block `t` holds the elements of `F(t)` in ascending universe order; the
/// flattened carrier is the disjoint union of the blocks. Soft subsets of `F`
/// are exactly subsets of that carrier, with sectionwise union and
/// intersection becoming plain set operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectionLayout {
    ambient: SoftSet,
    blocks: Vec<Vec<usize>>,
    offsets: Vec<usize>,
    positions: Vec<HashMap<usize, usize>>,
    total: usize,
}

impl SectionLayout {
    pub fn new(ambient: &SoftSet) -> Self {
        let blocks: Vec<Vec<usize>> = ambient
            .sections
            .iter()
            .map(|s| s.iter().collect())
            .collect();
        let mut offsets = Vec::with_capacity(blocks.len());
        let mut total = 0;
        for b in &blocks {
            offsets.push(total);
            total += b.len();
        }
        let positions = blocks
            .iter()
            .map(|b| b.iter().enumerate().map(|(p, &x)| (x, p)).collect())
            .collect();
        Self {
            ambient: ambient.clone(),
            blocks,
            offsets,
            positions,
            total,
        }
    }

    pub fn ambient(&self) -> &SoftSet {
        &self.ambient
    }

    pub fn params(&self) -> usize {
        self.blocks.len()
    }

    /// Size of the flattened carrier, `Σ_t |F(t)|`.
    pub fn total(&self) -> usize {
        self.total
    }

    pub fn block_len(&self, t: usize) -> usize {
        self.blocks[t].len()
    }

    pub fn offset(&self, t: usize) -> usize {
        self.offsets[t]
    }

    /// Universe index of dense position `p` in block `t`.
    pub fn element(&self, t: usize, p: usize) -> usize {
        self.blocks[t][p]
    }

    /// Dense position of universe element `x` in block `t`.
    pub fn position(&self, t: usize, x: usize) -> Option<usize> {
        self.positions[t].get(&x).copied()
    }

    /// Flattened index of `(t, x)`.
    pub fn point(&self, t: usize, x: usize) -> Option<usize> {
        self.position(t, x).map(|p| self.offsets[t] + p)
    }

    /// Parameter and dense position of a flattened index.
    pub fn locate(&self, flat: usize) -> (usize, usize) {
        let t = self.offsets.partition_point(|&o| o <= flat) - 1;
        (t, flat - self.offsets[t])
    }

    pub fn block(&self, t: usize) -> SubsetBits {
        (self.offsets[t]..self.offsets[t] + self.blocks[t].len()).collect()
    }

    pub fn flatten(&self, h: &SoftSet) -> Result<SubsetBits> {
        if !h.is_soft_subset(&self.ambient)? {
            return Err(Error::NotSoftSubset);
        }
        let mut out = SubsetBits::new();
        for (t, s) in h.sections.iter().enumerate() {
            for x in s {
                out.insert(self.offsets[t] + self.positions[t][&x]);
            }
        }
        Ok(out)
    }

    pub fn unflatten(&self, flat: &SubsetBits) -> SoftSet {
        let mut sections = vec![SubsetBits::new(); self.blocks.len()];
        for i in flat {
            let (t, p) = self.locate(i);
            sections[t].insert(self.blocks[t][p]);
        }
        SoftSet {
            sections,
            universe_size: self.ambient.universe_size,
        }
    }

    /// The `t`-section of a flattened soft set, in dense positions of `F(t)`.
    pub fn dense_section(&self, flat: &SubsetBits, t: usize) -> SubsetBits {
        let lo = self.offsets[t];
        let hi = lo + self.blocks[t].len();
        flat.iter()
            .skip_while(|&i| i < lo)
            .take_while(|&i| i < hi)
            .map(|i| i - lo)
            .collect()
    }

    /// Lifts a dense subset of `F(t)` into the flattened carrier.
    pub fn lift_section(&self, t: usize, dense: &SubsetBits) -> SubsetBits {
        dense.iter().map(|p| p + self.offsets[t]).collect()
    }

    /// Dense `t`-section translated back to universe indices.
    pub fn universe_section(&self, t: usize, dense: &SubsetBits) -> SubsetBits {
        dense.iter().map(|p| self.blocks[t][p]).collect()
    }
}

/// Canonical enumeration of `SE(F)` with its index/unindex bijection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeIndex {
    layout: SectionLayout,
    strides: Vec<usize>,
    len: usize,
}

impl SeIndex {
    pub fn new(f: &SoftSet) -> Result<Self> {
        Self::with_cap(f, DEFAULT_SE_CAP)
    }

    pub fn with_cap(f: &SoftSet, cap: usize) -> Result<Self> {
        if let Some(t) = f.sections.iter().position(SubsetBits::is_empty) {
            return Err(Error::EmptySection(t));
        }
        let len = f.se_count();
        if len > cap {
            return Err(Error::CapExceeded {
                what: "soft-element enumeration",
                size: len,
                cap,
            });
        }
        let layout = SectionLayout::new(f);
        let mut strides = vec![1; f.params()];
        for t in (0..f.params().saturating_sub(1)).rev() {
            strides[t] = strides[t + 1] * layout.block_len(t + 1);
        }
        Ok(Self {
            layout,
            strides,
            len,
        })
    }

    pub fn layout(&self) -> &SectionLayout {
        &self.layout
    }

    pub fn ambient(&self) -> &SoftSet {
        self.layout.ambient()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn params(&self) -> usize {
        self.strides.len()
    }

    /// Dense position of coordinate `t` of soft element `i`.
    pub fn coord(&self, i: usize, t: usize) -> usize {
        (i / self.strides[t]) % self.layout.block_len(t)
    }

    /// Universe element chosen at `t` by soft element `i`.
    pub fn value(&self, i: usize, t: usize) -> usize {
        self.layout.element(t, self.coord(i, t))
    }

    pub fn index_of_coords(&self, coords: &[usize]) -> usize {
        coords.iter().zip(&self.strides).map(|(c, s)| c * s).sum()
    }

    pub fn index(&self, a: &SoftElement) -> Result<usize> {
        if a.choices.len() != self.params() {
            return Err(Error::SectionCount {
                expected: self.params(),
                found: a.choices.len(),
            });
        }
        let mut i = 0;
        for (t, &x) in a.choices.iter().enumerate() {
            let p = self.layout.position(t, x).ok_or(Error::NotSoftSubset)?;
            i += p * self.strides[t];
        }
        Ok(i)
    }

    pub fn unindex(&self, i: usize) -> Result<SoftElement> {
        if i >= self.len {
            return Err(Error::IndexOutOfRange {
                index: i,
                size: self.len,
            });
        }
        Ok(SoftElement::new(
            (0..self.params()).map(|t| self.value(i, t)).collect(),
        ))
    }

    pub fn elements(&self) -> impl Iterator<Item = SoftElement> + '_ {
        (0..self.len)
            .map(|i| SoftElement::new((0..self.params()).map(|t| self.value(i, t)).collect()))
    }

    /// Flattened point set `{(t, a(t))}` of soft element `i`.
    pub fn points(&self, i: usize) -> SubsetBits {
        (0..self.params())
            .map(|t| self.layout.offset(t) + self.coord(i, t))
            .collect()
    }

    /// `a ∈_s H` for a flattened soft subset `H`.
    pub fn in_flat(&self, i: usize, flat: &SubsetBits) -> bool {
        (0..self.params()).all(|t| flat.contains(self.layout.offset(t) + self.coord(i, t)))
    }

    /// `SE(H)` for `H ⊆_s F`.
    pub fn se_of(&self, h: &SoftSet) -> Result<SeSubset> {
        let flat = self.layout.flatten(h)?;
        Ok(self.se_of_flat(&flat))
    }

    pub fn se_of_flat(&self, flat: &SubsetBits) -> SeSubset {
        SeSubset::new((0..self.len).filter(|&i| self.in_flat(i, flat)).collect())
    }

    pub fn full(&self) -> SeSubset {
        SeSubset::new(SubsetBits::full(self.len))
    }

    /// Sections of a subset of `SE(F)`, flattened.
    pub fn sections_flat(&self, t: &SeSubset) -> SubsetBits {
        let mut out = SubsetBits::new();
        for i in t.iter() {
            out.union_with(&self.points(i));
        }
        out
    }

    /// The soft set `t ↦ T(t)`.
    pub fn sections_of(&self, t: &SeSubset) -> SoftSet {
        self.layout.unflatten(&self.sections_flat(t))
    }

    /// Whether `T = SE(sections_of(T))`.
    pub fn is_section_product_closed(&self, t: &SeSubset) -> bool {
        let flat = self.sections_flat(t);
        let product = (0..self.params())
            .map(|p| self.layout.dense_section(&flat, p).len())
            .product::<usize>();
        product == t.len()
    }
}

/// Convenience wrapper for [`SeIndex::new`].
pub fn enumerate_se(f: &SoftSet) -> Result<SeIndex> {
    SeIndex::new(f)
}

/// A subset of `SE(F)`, as canonical indices.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
#[serde(transparent)]
pub struct SeSubset {
    members: SubsetBits,
}

impl SeSubset {
    pub fn new(members: SubsetBits) -> Self {
        Self { members }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn bits(&self) -> &SubsetBits {
        &self.members
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.contains(i)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter()
    }
}

impl FromIterator<usize> for SeSubset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Self::new(iter.into_iter().collect())
    }
}

/// First soft element (canonical order of `SE(F ∪_s H)`) lying in neither
/// `SE(F)` nor `SE(H)`, if the union inclusion is strict.
pub fn strict_union_witness(f: &SoftSet, h: &SoftSet) -> Result<Option<SoftElement>> {
    let u = f.union(h)?;
    let index = SeIndex::new(&u)?;
    let witness = index
        .elements()
        .find(|a| !f.contains_element(a) && !h.contains_element(a));
    Ok(witness)
}

#[cfg(test)]
mod tests {
    use super::*;

    const D8: [&str; 8] = ["e", "r", "r2", "r3", "s", "sr", "sr2", "sr3"];

    fn setup() -> (Universe, ParameterSet) {
        (
            Universe::new(D8).unwrap(),
            ParameterSet::new(["t1", "t2"]).unwrap(),
        )
    }

    fn d8() -> (SoftSet, SoftSet, SoftSet) {
        let (u, p) = setup();
        let f = make_soft_set(&u, &p, &[vec!["e", "r", "r2", "r3"], D8.to_vec()]).unwrap();
        let f1 = make_soft_set(&u, &p, &[vec!["e", "r2"], vec!["e", "r", "r2", "r3"]]).unwrap();
        let f2 = make_soft_set(&u, &p, &[vec!["r", "r3"], vec!["s", "sr", "sr2", "sr3"]]).unwrap();
        (f, f1, f2)
    }

    #[test]
    fn make_soft_set_d8() {
        let (f, _, _) = d8();
        assert_eq!(f.section(0).len(), 4);
        assert_eq!(f.section(1).len(), 8);
        assert!(f.is_eligible());
    }

    #[test]
    fn make_soft_set_errors() {
        let (u, p) = setup();
        assert_eq!(
            make_soft_set(&u, &p, &[vec!["e"]]),
            Err(Error::SectionCount {
                expected: 2,
                found: 1
            })
        );
        assert_eq!(
            make_soft_set(&u, &p, &[vec!["e"], vec!["x"]]),
            Err(Error::UnknownLabel("x".into()))
        );
        let phi = make_soft_set(&u, &p, &[vec![], vec![]]).unwrap();
        assert!(phi.is_null());
        assert!(!phi.is_eligible());
        assert_eq!(phi, SoftSet::empty(8, 2));
    }

    #[test]
    fn labels_must_be_distinct() {
        assert_eq!(
            Universe::new(["a", "a"]),
            Err(Error::DuplicateLabel("a".into()))
        );
        assert_eq!(
            ParameterSet::new(Vec::<String>::new()),
            Err(Error::NoParameters)
        );
    }

    #[test]
    fn soft_subset_examples() {
        let (f, f1, _) = d8();
        assert!(f1.is_soft_subset(&f).unwrap());
        assert!(SoftSet::empty(8, 2).is_soft_subset(&f).unwrap());
        assert!(!f.is_soft_subset(&f1).unwrap());
        assert!(matches!(
            f.is_soft_subset(&SoftSet::empty(8, 3)),
            Err(Error::ShapeMismatch(_))
        ));
    }

    #[test]
    fn combine_examples() {
        let (f, f1, f2) = d8();
        assert_eq!(f1.union(&f2).unwrap(), f);
        assert_eq!(f1.intersection(&f2).unwrap(), SoftSet::empty(8, 2));
        assert_eq!(f.union(&SoftSet::empty(8, 2)).unwrap(), f);
    }

    #[test]
    fn enumeration_counts() {
        let (f, f1, _) = d8();
        let idx = enumerate_se(&f).unwrap();
        // independent count: brute force over all choice functions in X^A
        let brute = (0..8)
            .flat_map(|x| (0..8).map(move |y| SoftElement::new(vec![x, y])))
            .filter(|a| f.contains_element(a))
            .count();
        assert_eq!(brute, 32);
        assert_eq!(idx.len(), 32);
        assert_eq!(enumerate_se(&f1).unwrap().len(), 8);
        let single =
            SoftSet::new(8, vec![SubsetBits::singleton(3), SubsetBits::singleton(5)]).unwrap();
        assert_eq!(enumerate_se(&single).unwrap().len(), 1);
    }

    #[test]
    fn enumeration_order_is_mixed_radix_last_fastest() {
        let (f, _, _) = d8();
        let idx = enumerate_se(&f).unwrap();
        assert_eq!(idx.unindex(0).unwrap().choices, vec![0, 0]);
        assert_eq!(idx.unindex(1).unwrap().choices, vec![0, 1]);
        assert_eq!(idx.unindex(8).unwrap().choices, vec![1, 0]);
        assert_eq!(idx.index(&SoftElement::new(vec![3, 7])).unwrap(), 31);
        for i in 0..idx.len() {
            assert_eq!(idx.index(&idx.unindex(i).unwrap()).unwrap(), i);
        }
        assert!(idx.unindex(32).is_err());
    }

    #[test]
    fn enumeration_errors() {
        let (u, p) = setup();
        let g = make_soft_set(&u, &p, &[vec![], D8.to_vec()]).unwrap();
        assert_eq!(enumerate_se(&g).unwrap_err(), Error::EmptySection(0));
        let (f, _, _) = d8();
        assert!(matches!(
            SeIndex::with_cap(&f, 31),
            Err(Error::CapExceeded { size: 32, .. })
        ));
    }

    #[test]
    fn sections_of_examples() {
        let (f, _, _) = d8();
        let idx = enumerate_se(&f).unwrap();
        assert_eq!(idx.sections_of(&idx.full()), f);
        let a = idx.unindex(13).unwrap();
        let single = idx.sections_of(&SeSubset::from_iter([13]));
        for t in 0..2 {
            assert_eq!(single.section(t), &SubsetBits::singleton(a.choices[t]));
        }
        // diagonal {(e,e), (r2,r2)} in {e,r2} x {e,r2}
        let g = SoftSet::constant(8, 2, SubsetBits::from_iter([0, 2]));
        let gi = enumerate_se(&g).unwrap();
        let diag: SeSubset = [
            gi.index(&SoftElement::new(vec![0, 0])).unwrap(),
            gi.index(&SoftElement::new(vec![2, 2])).unwrap(),
        ]
        .into_iter()
        .collect();
        assert_eq!(gi.sections_of(&diag), g);
        assert!(!gi.is_section_product_closed(&diag));
        assert!(gi.is_section_product_closed(&SeSubset::empty()));
    }

    #[test]
    fn se_of_subsets_are_product_closed() {
        let (f, f1, _) = d8();
        let idx = enumerate_se(&f).unwrap();
        let t = idx.se_of(&f1).unwrap();
        assert_eq!(t.len(), 8);
        assert!(idx.is_section_product_closed(&t));
    }

    #[test]
    fn strict_union() {
        let f = SoftSet::new(
            2,
            vec![SubsetBits::from_iter([0]), SubsetBits::from_iter([0, 1])],
        )
        .unwrap();
        let h = SoftSet::new(
            2,
            vec![SubsetBits::from_iter([0, 1]), SubsetBits::from_iter([0])],
        )
        .unwrap();
        let w = strict_union_witness(&f, &h).unwrap().unwrap();
        assert_eq!(w.choices, vec![1, 1]);
        assert_eq!(strict_union_witness(&f, &f).unwrap(), None);
    }

    #[test]
    fn layout_round_trip() {
        let (f, f1, f2) = d8();
        let layout = SectionLayout::new(&f);
        assert_eq!(layout.total(), 12);
        for h in [&f, &f1, &f2] {
            assert_eq!(&layout.unflatten(&layout.flatten(h).unwrap()), h);
        }
        assert_eq!(layout.locate(4), (1, 0));
        assert_eq!(
            layout.flatten(&f2).unwrap(),
            SubsetBits::from_iter([1, 3, 8, 9, 10, 11])
        );
    }
}
