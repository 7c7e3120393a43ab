//! Dispatch from parsed arguments onto the library checks.

use clap::ValueEnum;
use serde_json::{json, Value};

use sbtg_core::bitop::{
    bi_soft_connected, check_sbtg_hom, is_sbtg_componentwise, is_sbtg_oracle, is_stg_componentwise,
    minimal_subcover, non_product_open, noncanonical_gap, pairwise_soft_separation,
    separation_converse_search, slice_compactness_transfer, slices_pairwise_separation,
    soft_separation_classify, strict_union_search, verify_cover, CoverProblem, Disjointness,
    InducedConnectedness, DEFAULT_ORACLE_CAP,
};
use sbtg_core::group::{is_soft_group, SubgroupCheck};
use sbtg_core::sets::DEFAULT_SE_CAP;
use sbtg_core::soft_topology::{check_soft_topology, DEFAULT_TAU_STAR_CAP};
use sbtg_core::topology::{GroupMapKind, TopGroupWitness, DEFAULT_OPEN_CAP};
use sbtg_core::{Origin, SbtgInstance, SeIndex, SeparationLevel, SoftBitopSpace, SoftGroup};

use crate::error::{CliError, Result};
use crate::instance::{Declared, Instance, NamedTopology};
use crate::report::{Outcome, Report};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Check {
    Axioms,
    SoftGroup,
    Stg,
    Sbtg,
    SbtgOracle,
    Separation,
    Compactness,
    Connected,
    Hom,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    StrictUnion,
    NonProductOpen,
    NoncanonicalGap,
    #[value(alias = "prop3-converse")]
    SeparationConverse,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Mode {
    #[default]
    Sectionwise,
    SoftElement,
}

impl From<Mode> for Disjointness {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Sectionwise => Disjointness::Sectionwise,
            Mode::SoftElement => Disjointness::SoftElement,
        }
    }
}

/// Flags shared by all commands.
#[derive(Debug, Clone, Default)]
pub struct Options {
    pub topologies: Option<String>,
    pub level: Option<u8>,
    pub mode: Mode,
    pub map: Option<String>,
    pub cap_se: Option<usize>,
}

impl Options {
    fn cap(&self, default: usize) -> usize {
        self.cap_se.unwrap_or(default)
    }

    fn level(&self) -> Result<Option<SeparationLevel>> {
        self.level
            .map(|j| {
                SeparationLevel::from_index(j)
                    .ok_or_else(|| CliError::Invalid(format!("level {j} is not 0, 1 or 2")))
            })
            .transpose()
    }
}

/// The two topologies a command works on: `--topologies A,B`, `--topologies
/// A` for `(A, A)`, or the first two declared.
fn pair<'a>(inst: &'a Instance, opts: &Options) -> Result<(&'a NamedTopology, &'a NamedTopology)> {
    match &opts.topologies {
        Some(arg) => {
            let names: Vec<&str> = arg.split(',').map(str::trim).collect();
            match names.as_slice() {
                [a] => Ok((inst.topology(a)?, inst.topology(a)?)),
                [a, b] => Ok((inst.topology(a)?, inst.topology(b)?)),
                _ => Err(CliError::Invalid(format!(
                    "--topologies takes one or two names, got `{arg}`"
                ))),
            }
        }
        None => match inst.topologies.as_slice() {
            [] => Err(CliError::Invalid("instance declares no topologies".into())),
            [a] => Ok((a, a)),
            [a, b, ..] => Ok((a, b)),
        },
    }
}

fn space(inst: &Instance, opts: &Options) -> Result<(SoftBitopSpace, [String; 2])> {
    let (a, b) = pair(inst, opts)?;
    let space = SoftBitopSpace::with_cap(a.tau.clone(), b.tau.clone(), opts.cap(DEFAULT_SE_CAP))
        .map_err(CliError::core("soft bitopological space"))?;
    Ok((space, [a.name.clone(), b.name.clone()]))
}

fn soft_group(
    inst: &Instance,
    check: &'static str,
) -> Result<std::result::Result<SoftGroup, Report>> {
    let g = inst.group(check)?;
    let report = is_soft_group(&inst.soft_set, g).map_err(CliError::core("soft group"))?;
    if report.holds {
        let sg = SoftGroup::new(g.clone(), inst.soft_set.clone())
            .map_err(CliError::core("soft group"))?;
        return Ok(Ok(sg));
    }
    let mut r = Report::new(String::new(), false, "not a soft group");
    subgroup_findings(inst, &report.per_parameter, &mut r);
    Ok(Err(r))
}

fn subgroup_findings(inst: &Instance, checks: &[SubgroupCheck], r: &mut Report) {
    let label = |x: usize| Value::from(inst.universe.label(x));
    for (t, c) in checks.iter().enumerate() {
        let p = inst.param(t);
        r.slice(p, "subgroup", Value::Bool(*c == SubgroupCheck::Subgroup));
        let param = ("param", Value::from(p));
        match *c {
            SubgroupCheck::Subgroup => {}
            SubgroupCheck::MissingIdentity => r.witness("missing-identity", [param]),
            SubgroupCheck::MissingInverse { element } => {
                r.witness("missing-inverse", [param, ("element", label(element))])
            }
            SubgroupCheck::NotClosed { left, right } => r.witness(
                "not-closed",
                [param, ("left", label(left)), ("right", label(right))],
            ),
        }
    }
}

fn sbtg_instance(
    inst: &Instance,
    opts: &Options,
    check: &'static str,
) -> Result<std::result::Result<(SbtgInstance, [String; 2]), Report>> {
    let sg = match soft_group(inst, check)? {
        Ok(sg) => sg,
        Err(r) => return Ok(Err(r)),
    };
    let (a, b) = pair(inst, opts)?;
    let si = SbtgInstance::with_cap(sg, a.tau.clone(), b.tau.clone(), opts.cap(DEFAULT_SE_CAP))
        .map_err(CliError::core("soft bitopological group"))?;
    Ok(Ok((si, [a.name.clone(), b.name.clone()])))
}

fn map_name(kind: GroupMapKind) -> &'static str {
    match kind {
        GroupMapKind::Delta => "x*y^-1",
        GroupMapKind::Multiplication => "multiplication",
        GroupMapKind::Inversion => "inversion",
    }
}

fn group_witness(
    inst: &Instance,
    t: usize,
    topology: &str,
    w: &TopGroupWitness,
) -> Vec<(&'static str, Value)> {
    let point = match w.map {
        GroupMapKind::Inversion => json!([inst.dense_label(t, w.point.0)]),
        _ => json!([
            inst.dense_label(t, w.point.0),
            inst.dense_label(t, w.point.1)
        ]),
    };
    vec![
        ("param", Value::from(inst.param(t))),
        ("topology", Value::from(topology)),
        ("map", Value::from(map_name(w.map))),
        ("point", point),
        ("open", inst.dense_labels(t, &w.open)),
    ]
}

pub fn run_check(inst: &Instance, check: Check, opts: &Options) -> Result<Report> {
    match check {
        Check::Axioms => axioms(inst, opts),
        Check::SoftGroup => {
            let g = inst.group("soft-group")?;
            let report = is_soft_group(&inst.soft_set, g).map_err(CliError::core("soft group"))?;
            let verdict = if report.holds {
                "soft group"
            } else {
                "not a soft group"
            };
            let mut r = Report::new(String::new(), report.holds, verdict);
            subgroup_findings(inst, &report.per_parameter, &mut r);
            Ok(r)
        }
        Check::Stg => stg(inst, opts),
        Check::Sbtg => sbtg(inst, opts),
        Check::SbtgOracle => oracle(inst, opts),
        Check::Separation => separation(inst, opts),
        Check::Compactness => compactness(inst, opts),
        Check::Connected => connected(inst, opts),
        Check::Hom => hom(inst, opts),
    }
}

fn axioms(inst: &Instance, opts: &Options) -> Result<Report> {
    let (a, b) = pair(inst, opts)?;
    let chosen: Vec<&NamedTopology> = if a.name == b.name {
        vec![a]
    } else {
        vec![a, b]
    };
    let mut holds = true;
    let mut r = Report::new(String::new(), true, "");
    for nt in &chosen {
        let tau = &nt.tau;
        let verdict = match nt.declared {
            Declared::Members(_) => {
                let members = tau
                    .members(DEFAULT_OPEN_CAP)
                    .map_err(CliError::core(nt.name.clone()))?;
                let report = check_soft_topology(&members, &inst.soft_set)
                    .map_err(CliError::core(nt.name.clone()))?;
                holds &= report.holds;
                json!({"axioms": report.holds, "members": members.len(), "canonical": tau.is_canonical()})
            }
            Declared::Generated(n) => {
                json!({"axioms": true, "generated_by": n, "canonical": tau.is_canonical()})
            }
            Declared::Discrete | Declared::Indiscrete => {
                let kind = if nt.declared == Declared::Discrete {
                    "discrete"
                } else {
                    "indiscrete"
                };
                json!({"axioms": true, "shorthand": kind, "canonical": tau.is_canonical()})
            }
        };
        r.detail(&nt.name, verdict);
        for t in 0..inst.parameters.len() {
            let opens = tau
                .component_opens(t, DEFAULT_OPEN_CAP)
                .map_err(CliError::core(format!("{} component", nt.name)))?;
            let opens: Vec<Value> = opens.iter().map(|u| inst.labels(u)).collect();
            r.slice(inst.param(t), &nt.name, Value::Array(opens));
        }
    }
    r.outcome = Outcome::of(holds);
    r.verdict = if holds {
        "soft topology axioms hold"
    } else {
        "soft topology axioms fail"
    }
    .into();
    r.cap("opens", DEFAULT_OPEN_CAP);
    Ok(r)
}

fn stg(inst: &Instance, opts: &Options) -> Result<Report> {
    let (si, names) = match sbtg_instance(inst, opts, "stg")? {
        Ok(x) => x,
        Err(r) => return Ok(r),
    };
    let report = is_stg_componentwise(si.group(), si.space().tau(Origin::Tau1))
        .map_err(CliError::core("stg"))?;
    let verdict = if report.holds {
        "soft topological group"
    } else {
        "not a soft topological group"
    };
    let mut r = Report::new(String::new(), report.holds, verdict);
    for (t, s) in report.slices.iter().enumerate() {
        r.slice(inst.param(t), &names[0], Value::Bool(s.holds));
    }
    if let Some((t, w)) = &report.witness {
        r.witness("discontinuity", group_witness(inst, *t, &names[0], w));
    }
    r.cap("se", opts.cap(DEFAULT_SE_CAP));
    Ok(r)
}

fn sbtg(inst: &Instance, opts: &Options) -> Result<Report> {
    let (si, names) = match sbtg_instance(inst, opts, "sbtg")? {
        Ok(x) => x,
        Err(r) => return Ok(r),
    };
    let report = is_sbtg_componentwise(&si).map_err(CliError::core("sbtg"))?;
    let verdict = if report.holds { "SBTG" } else { "not SBTG" };
    let mut r = Report::new(String::new(), report.holds, verdict);
    for t in 0..inst.parameters.len() {
        let p = inst.param(t);
        r.slice(p, &names[0], Value::Bool(report.first.slices[t].holds));
        r.slice(p, &names[1], Value::Bool(report.second.slices[t].holds));
    }
    if let Some(w) = &report.witness {
        let name = &names[w.topology.number() as usize - 1];
        let tw = TopGroupWitness {
            map: w.map,
            point: w.point,
            open: w.open.clone(),
        };
        r.witness("discontinuity", group_witness(inst, w.param, name, &tw));
    }
    r.cap("se", opts.cap(DEFAULT_SE_CAP));
    Ok(r)
}

fn oracle(inst: &Instance, opts: &Options) -> Result<Report> {
    let (si, names) = match sbtg_instance(inst, opts, "sbtg-oracle")? {
        Ok(x) => x,
        Err(r) => return Ok(r),
    };
    let cap = opts.cap(DEFAULT_ORACLE_CAP);
    let report = is_sbtg_oracle(&si, cap).map_err(CliError::core("sbtg-oracle"))?;
    let verdict = |b: bool| if b { "SBTG" } else { "not SBTG" };
    let mut r = Report::new(
        String::new(),
        report.holds,
        format!(
            "{} (oracle), {} (componentwise)",
            verdict(report.holds),
            verdict(report.componentwise)
        ),
    );
    r.detail("oracle", Value::Bool(report.holds));
    r.detail("componentwise", Value::Bool(report.componentwise));
    for (i, (name, tg)) in names
        .iter()
        .zip([&report.first, &report.second])
        .enumerate()
    {
        r.detail(
            name,
            json!({"delta_continuous": tg.holds, "family_is_topology": report.family_is_topology[i]}),
        );
        if let Some(w) = &tg.witness {
            let index = si.space().index();
            let point = match w.map {
                GroupMapKind::Inversion => json!([inst.se_value(index, w.point.0)]),
                _ => json!([
                    inst.se_value(index, w.point.0),
                    inst.se_value(index, w.point.1)
                ]),
            };
            r.witness(
                "discontinuity",
                [
                    ("topology", Value::from(name.as_str())),
                    ("map", Value::from(map_name(w.map))),
                    ("point", point),
                    (
                        "open",
                        inst.se_subset_value(index, &w.open.iter().collect()),
                    ),
                ],
            );
        }
    }
    if let Some(incident) = &report.incident {
        r.outcome = Outcome::Incident;
        r.witness(
            "incident",
            [
                ("message", Value::from(incident.message.as_str())),
                (
                    "instance",
                    serde_json::to_value(&incident.instance).expect("plain data"),
                ),
            ],
        );
    }
    r.cap("se", cap);
    Ok(r)
}

fn separation(inst: &Instance, opts: &Options) -> Result<Report> {
    let (space, names) = space(inst, opts)?;
    let level = opts.level()?.unwrap_or(SeparationLevel::T2);
    let mode: Disjointness = opts.mode.into();
    let report = pairwise_soft_separation(&space, level, mode);
    let verdict = format!(
        "{}pairwise soft {}",
        if report.holds { "" } else { "not " },
        level.name()
    );
    let mut r = Report::new(String::new(), report.holds, verdict);
    let index = space.index();
    for (t, s) in slices_pairwise_separation(&space, level).iter().enumerate() {
        let p = inst.param(t);
        r.slice(p, "holds", Value::Bool(s.holds));
        r.slice(p, "level", Value::from(s.classification.level.name()));
    }
    let classified = soft_separation_classify(&space, mode);
    r.detail("topologies", json!([names[0], names[1]]));
    r.detail("mode", Value::from(mode_name(mode)));
    r.detail("highest_level", Value::from(classified.level.name()));
    if level == SeparationLevel::T2 {
        r.detail("other_mode_holds", Value::Bool(report.other_mode_holds));
    }
    if let Some((a, b)) = report.witness {
        r.witness(
            "unseparated",
            [
                ("left", inst.se_value(index, a)),
                ("right", inst.se_value(index, b)),
            ],
        );
    }
    r.cap("se", opts.cap(DEFAULT_SE_CAP));
    Ok(r)
}

fn mode_name(m: Disjointness) -> &'static str {
    match m {
        Disjointness::Sectionwise => "sectionwise",
        Disjointness::SoftElement => "soft-element",
    }
}

fn compactness(inst: &Instance, opts: &Options) -> Result<Report> {
    let (space, names) = space(inst, opts)?;
    let mut cover = Vec::new();
    for which in Origin::BOTH {
        for h in space
            .tau(which)
            .members(DEFAULT_OPEN_CAP)
            .map_err(CliError::core("cover"))?
        {
            cover.push((h, which));
        }
    }
    let problem = CoverProblem {
        target: inst.soft_set.clone(),
        cover,
    };
    let covered = verify_cover(&space, &problem).map_err(CliError::core("cover"))?;
    let sub = minimal_subcover(&space, &problem).map_err(CliError::core("subcover"))?;
    let transfer =
        slice_compactness_transfer(&space, &inst.soft_set).map_err(CliError::core("slices"))?;
    let holds = covered.holds && sub.is_some() && transfer.holds();
    let verdict = if holds {
        "pairwise soft compact"
    } else {
        "compactness check failed"
    };
    let mut r = Report::new(String::new(), holds, verdict);
    r.detail("cover_size", Value::from(problem.cover.len()));
    if let Some(idx) = &sub {
        let members: Vec<Value> = idx
            .iter()
            .map(|&i| {
                let (h, which) = &problem.cover[i];
                json!({"topology": names[which.number() as usize - 1], "soft_set": inst.soft_set_value(h)})
            })
            .collect();
        r.detail("minimal_subcover", Value::Array(members));
    }
    r.detail(
        "slice_transfer",
        json!({"cylinder_lift": transfer.cylinder_lift, "slice_union": transfer.slice_union, "subcover_size": transfer.subcover_size}),
    );
    for note in &transfer.notes {
        r.detail("note", Value::from(note.as_str()));
    }
    if let Some((t, x)) = covered.uncovered {
        r.witness(
            "uncovered",
            [
                ("param", Value::from(inst.param(t))),
                ("element", Value::from(inst.universe.label(x))),
            ],
        );
    }
    r.cap("opens", DEFAULT_OPEN_CAP);
    Ok(r)
}

fn connected(inst: &Instance, opts: &Options) -> Result<Report> {
    let (space, names) = space(inst, opts)?;
    let report =
        bi_soft_connected(&space, DEFAULT_OPEN_CAP).map_err(CliError::core("connectedness"))?;
    let verdict = if report.holds {
        "bi-soft connected"
    } else {
        "not bi-soft connected"
    };
    let mut r = Report::new(String::new(), report.holds, verdict);
    let index = space.index();
    let describe =
        |c: &InducedConnectedness| json!({"connected": c.connected, "clopen_free": c.clopen_free});
    r.detail(&names[0], describe(&report.first));
    if names[1] != names[0] {
        r.detail(&names[1], describe(&report.second));
    }
    for (name, c) in names.iter().zip([&report.first, &report.second]) {
        if let Some(clopen) = &c.clopen {
            r.witness(
                "clopen",
                [
                    ("topology", Value::from(name.as_str())),
                    ("size", Value::from(clopen.len())),
                    ("of", Value::from(index.len())),
                    (
                        "members",
                        inst.se_subset_value(index, &clopen.iter().collect()),
                    ),
                ],
            );
            if names[1] == names[0] {
                break;
            }
        }
    }
    r.cap("opens", DEFAULT_OPEN_CAP);
    Ok(r)
}

fn hom(inst: &Instance, opts: &Options) -> Result<Report> {
    let name = opts
        .map
        .as_deref()
        .ok_or_else(|| CliError::Invalid("hom needs --map NAME".into()))?;
    let f = inst.map(name)?;
    let (si, names) = match sbtg_instance(inst, opts, "hom")? {
        Ok(x) => x,
        Err(r) => return Ok(r),
    };
    let cap = opts.cap(DEFAULT_SE_CAP);
    let report = check_sbtg_hom(&si, &si, f, cap).map_err(CliError::core("hom"))?;
    let verdict = if report.holds {
        "SBTG homomorphism"
    } else {
        "not an SBTG homomorphism"
    };
    let mut r = Report::new(String::new(), report.holds, verdict);
    let index = si.space().index();
    r.detail("homomorphism", Value::Bool(report.is_hom));
    for (n, c) in names.iter().zip(&report.continuity) {
        r.detail(
            n,
            json!({"continuous": c.holds, "member_preimages_open": c.member_only}),
        );
    }
    r.detail("kernel", inst.se_subset_value(index, &report.kernel));
    r.detail("kernel_normal", Value::Bool(report.kernel_normal));
    r.detail("image_size", Value::from(report.image.len()));
    r.detail("image_subgroup", Value::Bool(report.image_subgroup));
    r.detail("surjective", Value::Bool(report.surjective));
    if let Some(c) = report.connectedness_transfer {
        r.detail("connectedness_transfer", Value::Bool(c));
    }
    if let Some((a, b)) = report.hom_failure {
        r.witness(
            "not-homomorphic",
            [
                ("left", inst.se_value(index, a)),
                ("right", inst.se_value(index, b)),
            ],
        );
    }
    for (n, c) in names.iter().zip(&report.continuity) {
        if let Some(w) = &c.witness {
            r.witness(
                "discontinuity",
                [
                    ("topology", Value::from(n.as_str())),
                    ("point", inst.se_value(index, w.point)),
                    (
                        "open",
                        inst.se_subset_value(index, &w.open.iter().collect()),
                    ),
                ],
            );
        }
    }
    r.cap("se", cap);
    Ok(r)
}

pub fn run_witness(inst: &Instance, target: Target, opts: &Options) -> Result<Report> {
    match target {
        Target::StrictUnion => {
            let mut candidates = vec![inst.soft_set.clone()];
            for nt in &inst.topologies {
                if let Declared::Members(_) = nt.declared {
                    candidates.extend(
                        nt.tau
                            .members(DEFAULT_OPEN_CAP)
                            .map_err(CliError::core(nt.name.clone()))?,
                    );
                }
            }
            let found = strict_union_search(&candidates, &inst.soft_set)
                .map_err(CliError::core("strict union"))?;
            let mut r = Report::new(String::new(), found.is_some(), "");
            match found {
                Some(w) => {
                    let union = w.f.union(&w.h).map_err(CliError::core("strict union"))?;
                    let verified = union.contains_element(&w.element)
                        && !w.f.contains_element(&w.element)
                        && !w.h.contains_element(&w.element);
                    r.outcome = Outcome::of(verified);
                    r.verdict = "soft element of the union in neither operand".into();
                    r.witness(
                        "strict-union",
                        [
                            ("f", inst.soft_set_value(&w.f)),
                            ("h", inst.soft_set_value(&w.h)),
                            ("element", inst.element_value(&w.element)),
                            ("verified", Value::Bool(verified)),
                        ],
                    );
                }
                None => r.verdict = "none found".into(),
            }
            Ok(r)
        }
        Target::NonProductOpen => {
            let (a, _) = pair(inst, opts)?;
            let cap = opts.cap(DEFAULT_TAU_STAR_CAP);
            let index = SeIndex::new(&inst.soft_set).map_err(CliError::core("soft elements"))?;
            let found = non_product_open(&a.tau, &index, cap)
                .map_err(CliError::core("non-product open"))?;
            let mut r = Report::new(String::new(), found.is_some(), "none found within caps");
            if let Some(w) = found {
                r.verdict = "induced open that is no SE(H)".into();
                let mut fields = vec![
                    ("topology", Value::from(a.name.as_str())),
                    ("size", Value::from(w.members.len())),
                    ("of", Value::from(index.len())),
                    (
                        "sections",
                        inst.soft_set_value(&index.sections_of(&w.members)),
                    ),
                ];
                if let Some((f, h)) = &w.from {
                    fields.push((
                        "union_of",
                        json!([inst.soft_set_value(f), inst.soft_set_value(h)]),
                    ));
                }
                fields.push(("members", inst.se_subset_value(&index, &w.members)));
                r.witness("non-product-open", fields);
            }
            r.cap("se", cap);
            Ok(r)
        }
        Target::NoncanonicalGap => {
            let (a, _) = pair(inst, opts)?;
            let gap = noncanonical_gap(&a.tau).map_err(CliError::core("canonical enlargement"))?;
            let mut r = Report::new(String::new(), gap.is_some(), "canonical, no gap");
            if let Some(h) = gap {
                r.verdict = "member of the canonical enlargement missing from the topology".into();
                r.witness(
                    "noncanonical-gap",
                    [
                        ("topology", Value::from(a.name.as_str())),
                        ("soft_set", inst.soft_set_value(&h)),
                    ],
                );
            }
            Ok(r)
        }
        Target::SeparationConverse => {
            let levels = match opts.level()? {
                Some(l) => vec![l],
                None => vec![
                    SeparationLevel::T0,
                    SeparationLevel::T1,
                    SeparationLevel::T2,
                ],
            };
            let cap = opts.cap(DEFAULT_TAU_STAR_CAP);
            let mode: Disjointness = opts.mode.into();
            let found = separation_converse_search(&inst.soft_set, &levels, mode, cap)
                .map_err(CliError::core("converse search"))?;
            let mut r = Report::new(String::new(), found.is_some(), "none found within caps");
            if let Some(w) = found {
                r.verdict = format!(
                    "induced pair pairwise {} while the soft pair is not",
                    w.level.name()
                );
                r.witness(
                    "separation-converse",
                    [
                        ("level", Value::from(w.level.name())),
                        ("generator1", inst.soft_set_value(&w.generator1)),
                        ("generator2", inst.soft_set_value(&w.generator2)),
                    ],
                );
            }
            r.detail("mode", Value::from(mode_name(mode)));
            r.cap("se", cap);
            Ok(r)
        }
    }
}

pub fn run_enumerate(inst: &Instance, opts: &Options) -> Result<Report> {
    let cap = opts.cap(DEFAULT_SE_CAP);
    let index = SeIndex::with_cap(&inst.soft_set, cap).map_err(CliError::core("soft elements"))?;
    let mut r = Report::new(
        String::new(),
        true,
        format!("{} soft elements", index.len()),
    );
    let items = index.elements().map(|e| inst.element_value(&e)).collect();
    r.listing = Some(("soft_elements".into(), items));
    r.cap("se", cap);
    Ok(r)
}
