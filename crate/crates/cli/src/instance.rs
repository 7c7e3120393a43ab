//! Instance files: loading, validation and label rendering.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::Deserialize;
use serde_json::{Map, Value};

use sbtg_core::sets::DEFAULT_SE_CAP;
use sbtg_core::soft_topology::{check_soft_topology, SoftAxiomViolation};
use sbtg_core::{
    CarrierMap, FiniteGroup, ParameterSet, SeIndex, SeSubset, SoftElement, SoftSet, SoftTopology,
    SubsetBits, Universe,
};

use crate::error::{CliError, Result};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInstance {
    universe: Vec<String>,
    #[serde(default)]
    group: Option<RawGroup>,
    parameters: Vec<String>,
    soft_set: BTreeMap<String, Vec<String>>,
    #[serde(default)]
    topologies: Map<String, Value>,
    #[serde(default)]
    maps: Map<String, Value>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGroup {
    table: Vec<Vec<String>>,
    identity: String,
}

/// How a topology was declared.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Declared {
    /// Full member list, axiom-checked at load.
    Members(usize),
    /// Smallest soft topology containing the listed soft sets.
    Generated(usize),
    Discrete,
    Indiscrete,
}

#[derive(Debug, Clone)]
pub struct NamedTopology {
    pub name: String,
    pub declared: Declared,
    pub tau: SoftTopology,
}

#[derive(Debug, Clone)]
pub struct Instance {
    pub path: PathBuf,
    pub universe: Universe,
    pub parameters: ParameterSet,
    pub soft_set: SoftSet,
    pub group: Option<FiniteGroup>,
    pub topologies: Vec<NamedTopology>,
    pub maps: Vec<(String, CarrierMap)>,
}

pub fn parse_instance(path: &Path) -> Result<Instance> {
    parse_instance_with_cap(path, DEFAULT_SE_CAP)
}

/// Loads and validates an instance; `cap_se` bounds the soft-element
/// enumeration needed to resolve maps.
pub fn parse_instance_with_cap(path: &Path, cap_se: usize) -> Result<Instance> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_instance_str(&text, path, cap_se)
}

pub fn parse_instance_str(text: &str, path: &Path, cap_se: usize) -> Result<Instance> {
    let raw: RawInstance = serde_json::from_str(text).map_err(|e| CliError::Parse {
        path: path.to_path_buf(),
        line: e.line(),
        column: e.column(),
        message: strip_position(&e.to_string()),
    })?;
    let universe =
        Universe::new(raw.universe.iter().cloned()).map_err(CliError::core("universe"))?;
    let parameters =
        ParameterSet::new(raw.parameters.iter().cloned()).map_err(CliError::core("parameters"))?;
    let group = raw
        .group
        .map(|g| FiniteGroup::from_labeled_table(universe.labels(), &g.table, &g.identity))
        .transpose()
        .map_err(CliError::core("group"))?;

    let mut inst = Instance {
        path: path.to_path_buf(),
        soft_set: SoftSet::empty(universe.len(), parameters.len()),
        universe,
        parameters,
        group,
        topologies: Vec::new(),
        maps: Vec::new(),
    };
    inst.soft_set = inst.soft_set_from(&raw.soft_set, "soft_set")?;

    for (name, decl) in &raw.topologies {
        let named = inst.topology_from(name, decl)?;
        inst.topologies.push(named);
    }
    if !raw.maps.is_empty() {
        let index =
            SeIndex::with_cap(&inst.soft_set, cap_se).map_err(CliError::core("soft elements"))?;
        for (name, decl) in &raw.maps {
            let map = inst.map_from(&index, name, decl)?;
            inst.maps.push((name.clone(), map));
        }
    }
    Ok(inst)
}

fn strip_position(msg: &str) -> String {
    match msg.rfind(" at line ") {
        Some(i) => msg[..i].to_string(),
        None => msg.to_string(),
    }
}

impl Instance {
    fn soft_set_from(&self, sections: &BTreeMap<String, Vec<String>>, at: &str) -> Result<SoftSet> {
        for key in sections.keys() {
            self.parameters
                .index_of(key)
                .map_err(CliError::core(format!("{at}: parameter")))?;
        }
        let sections = self
            .parameters
            .labels()
            .iter()
            .map(|p| match sections.get(p) {
                Some(labels) => {
                    let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
                    self.universe
                        .subset(&refs)
                        .map_err(CliError::core(format!("{at}.{p}")))
                }
                None => Ok(SubsetBits::new()),
            })
            .collect::<Result<Vec<_>>>()?;
        SoftSet::new(self.universe.len(), sections).map_err(CliError::core(at.to_string()))
    }

    fn topology_from(&self, name: &str, decl: &Value) -> Result<NamedTopology> {
        let at = format!("topologies.{name}");
        let (declared, tau) = match decl {
            Value::String(s) if s == "discrete" => {
                (Declared::Discrete, SoftTopology::discrete(&self.soft_set))
            }
            Value::String(s) if s == "indiscrete" => (
                Declared::Indiscrete,
                SoftTopology::indiscrete(&self.soft_set),
            ),
            Value::Array(items) => {
                let members = self.soft_sets_from(items, &at)?;
                let report = check_soft_topology(&members, &self.soft_set)
                    .map_err(CliError::core(at.clone()))?;
                if let Some(w) = report.witness {
                    return Err(CliError::Invalid(format!(
                        "{at}: {}",
                        self.violation_text(&w)
                    )));
                }
                let tau = SoftTopology::generated(&self.soft_set, &members)
                    .map_err(CliError::core(at))?;
                (Declared::Members(members.len()), tau)
            }
            Value::Object(m) if m.len() == 1 && m.contains_key("generated_by") => {
                let Value::Array(items) = &m["generated_by"] else {
                    return Err(CliError::Invalid(format!(
                        "{at}.generated_by: expected a list of soft sets"
                    )));
                };
                let subbasis = self.soft_sets_from(items, &format!("{at}.generated_by"))?;
                let tau = SoftTopology::generated(&self.soft_set, &subbasis)
                    .map_err(CliError::core(at))?;
                (Declared::Generated(subbasis.len()), tau)
            }
            _ => {
                return Err(CliError::Invalid(format!(
                    "{at}: expected a list of soft sets, {{\"generated_by\": [...]}}, \"discrete\" or \"indiscrete\""
                )))
            }
        };
        Ok(NamedTopology {
            name: name.to_string(),
            declared,
            tau,
        })
    }

    fn soft_sets_from(&self, items: &[Value], at: &str) -> Result<Vec<SoftSet>> {
        let mut out = Vec::with_capacity(items.len());
        for (i, item) in items.iter().enumerate() {
            let at = format!("{at}[{i}]");
            let sections: BTreeMap<String, Vec<String>> = serde_json::from_value(item.clone())
                .map_err(|e| CliError::Invalid(format!("{at}: {e}")))?;
            let h = self.soft_set_from(&sections, &at)?;
            if !h
                .is_soft_subset(&self.soft_set)
                .map_err(CliError::core(at.clone()))?
            {
                return Err(CliError::Invalid(format!(
                    "{at}: {} is not a soft subset of the soft set",
                    self.soft_set_text(&h)
                )));
            }
            out.push(h);
        }
        Ok(out)
    }

    fn violation_text(&self, w: &SoftAxiomViolation) -> String {
        match w {
            SoftAxiomViolation::MissingEmpty => "null soft set Φ missing".to_string(),
            SoftAxiomViolation::MissingFull => "the soft set itself is missing".to_string(),
            SoftAxiomViolation::Union {
                left,
                right,
                missing,
            } => format!(
                "union of {} and {} missing: {}",
                self.soft_set_text(left),
                self.soft_set_text(right),
                self.soft_set_text(missing)
            ),
            SoftAxiomViolation::Intersection {
                left,
                right,
                missing,
            } => format!(
                "intersection of {} and {} missing: {}",
                self.soft_set_text(left),
                self.soft_set_text(right),
                self.soft_set_text(missing)
            ),
        }
    }

    fn tuple_from(&self, value: &Value, at: &str) -> Result<Vec<String>> {
        let labels: Vec<String> = match value {
            Value::Array(_) => serde_json::from_value(value.clone())
                .map_err(|e| CliError::Invalid(format!("{at}: {e}")))?,
            Value::String(s) if s.trim_start().starts_with('[') => {
                serde_json::from_str(s).map_err(|e| CliError::Invalid(format!("{at}: {e}")))?
            }
            Value::String(s) => s.split(',').map(|l| l.trim().to_string()).collect(),
            _ => {
                return Err(CliError::Invalid(format!(
                    "{at}: expected a tuple of labels"
                )))
            }
        };
        if labels.len() != self.parameters.len() {
            return Err(CliError::Invalid(format!(
                "{at}: tuple has {} labels for {} parameters",
                labels.len(),
                self.parameters.len()
            )));
        }
        Ok(labels)
    }

    fn element_from(&self, index: &SeIndex, labels: &[String], at: &str) -> Result<usize> {
        let choices = labels
            .iter()
            .map(|l| self.universe.index_of(l))
            .collect::<sbtg_core::Result<Vec<_>>>()
            .map_err(CliError::core(at.to_string()))?;
        index.index(&SoftElement::new(choices)).map_err(|_| {
            CliError::Invalid(format!(
                "{at}: ({}) is not a soft element",
                labels.join(", ")
            ))
        })
    }

    fn map_from(&self, index: &SeIndex, name: &str, decl: &Value) -> Result<CarrierMap> {
        let at = format!("maps.{name}");
        let Value::Object(entries) = decl else {
            return Err(CliError::Invalid(format!(
                "{at}: expected an object of tuples"
            )));
        };
        let mut table = vec![None; index.len()];
        for (key, value) in entries {
            let src = self.tuple_from(&Value::String(key.clone()), &format!("{at} key `{key}`"))?;
            let src = self.element_from(index, &src, &format!("{at} key `{key}`"))?;
            let dst = self.tuple_from(value, &format!("{at}[{key}]"))?;
            let dst = self.element_from(index, &dst, &format!("{at}[{key}]"))?;
            if table[src].replace(dst).is_some() {
                return Err(CliError::Invalid(format!(
                    "{at}: soft element `{key}` mapped twice"
                )));
            }
        }
        let table = table
            .into_iter()
            .enumerate()
            .map(|(i, y)| {
                y.ok_or_else(|| {
                    let e = index.unindex(i).expect("in range");
                    CliError::Invalid(format!("{at}: no image for {}", self.element_text(&e)))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        CarrierMap::new(index.len(), table).map_err(CliError::core(at))
    }

    pub fn topology(&self, name: &str) -> Result<&NamedTopology> {
        self.topologies
            .iter()
            .find(|t| t.name == name)
            .ok_or_else(|| CliError::Invalid(format!("no topology named `{name}`")))
    }

    pub fn map(&self, name: &str) -> Result<&CarrierMap> {
        self.maps
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, m)| m)
            .ok_or_else(|| CliError::Invalid(format!("no map named `{name}`")))
    }

    pub fn group(&self, check: &'static str) -> Result<&FiniteGroup> {
        self.group.as_ref().ok_or(CliError::NoGroup(check))
    }

    pub fn param(&self, t: usize) -> &str {
        self.parameters.label(t)
    }

    pub fn labels(&self, s: &SubsetBits) -> Value {
        Value::Array(
            s.iter()
                .map(|x| Value::from(self.universe.label(x)))
                .collect(),
        )
    }

    /// Labels of dense positions inside `F(t)`.
    pub fn dense_labels(&self, t: usize, s: &SubsetBits) -> Value {
        let layout = sbtg_core::SectionLayout::new(&self.soft_set);
        self.labels(&layout.universe_section(t, s))
    }

    pub fn dense_label(&self, t: usize, p: usize) -> &str {
        let layout = sbtg_core::SectionLayout::new(&self.soft_set);
        self.universe.label(layout.element(t, p))
    }

    pub fn soft_set_value(&self, h: &SoftSet) -> Value {
        let mut m = Map::new();
        for (t, s) in h.sections().iter().enumerate() {
            m.insert(self.param(t).to_string(), self.labels(s));
        }
        Value::Object(m)
    }

    pub fn element_value(&self, e: &SoftElement) -> Value {
        let mut m = Map::new();
        for (t, &x) in e.choices.iter().enumerate() {
            m.insert(
                self.param(t).to_string(),
                Value::from(self.universe.label(x)),
            );
        }
        Value::Object(m)
    }

    pub fn se_value(&self, index: &SeIndex, i: usize) -> Value {
        self.element_value(&index.unindex(i).expect("in range"))
    }

    pub fn se_subset_value(&self, index: &SeIndex, s: &SeSubset) -> Value {
        Value::Array(s.iter().map(|i| self.se_value(index, i)).collect())
    }

    pub fn soft_set_text(&self, h: &SoftSet) -> String {
        crate::report::render(&self.soft_set_value(h))
    }

    pub fn element_text(&self, e: &SoftElement) -> String {
        crate::report::render(&self.element_value(e))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn load(text: &str) -> Result<Instance> {
        parse_instance_str(text, Path::new("inline.json"), DEFAULT_SE_CAP)
    }

    const BASE: &str = r#"{
        "universe": ["0", "1"],
        "group": {"table": [["0", "1"], ["1", "0"]], "identity": "0"},
        "parameters": ["a", "b"],
        "soft_set": {"a": ["0", "1"], "b": ["0", "1"]},
        "topologies": {"d": "discrete", "i": "indiscrete"},
        "maps": {"swap": {"0,0": ["0", "0"], "0,1": ["1", "0"], "[\"1\",\"0\"]": "0,1", "1,1": ["1", "1"]}}
    }"#;

    #[test]
    fn loads_shorthands_and_maps() {
        let inst = load(BASE).unwrap();
        assert_eq!(inst.topologies.len(), 2);
        assert_eq!(inst.topologies[0].declared, Declared::Discrete);
        assert_eq!(inst.map("swap").unwrap().table(), &[0, 2, 1, 3]);
    }

    #[test]
    fn syntax_errors_carry_position() {
        let err = load("{\n  \"universe\": [\"0\",\n}").unwrap_err();
        match err {
            CliError::Parse { line, column, .. } => assert_eq!((line, column), (3, 1)),
            other => panic!("{other}"),
        }
    }

    #[test]
    fn unknown_labels_are_named() {
        let bad = BASE.replace(r#""b": ["0", "1"]}"#, r#""b": ["0", "7"]}"#);
        let err = load(&bad).unwrap_err().to_string();
        assert!(err.contains("soft_set.b") && err.contains('7'), "{err}");
    }

    #[test]
    fn missing_union_is_a_load_error() {
        let bad = BASE.replace(
            r#""d": "discrete""#,
            r#""d": [{}, {"a": ["0"]}, {"b": ["1"]}, {"a": ["0", "1"], "b": ["0", "1"]}]"#,
        );
        let err = load(&bad).unwrap_err().to_string();
        assert!(
            err.contains("union of (a: {0}, b: {}) and (a: {}, b: {1}) missing"),
            "{err}"
        );
    }

    #[test]
    fn incomplete_map_is_rejected() {
        let bad = BASE.replace(r#", "1,1": ["1", "1"]"#, "");
        let err = load(&bad).unwrap_err().to_string();
        assert!(err.contains("no image for (a: 1, b: 1)"), "{err}");
    }
}
