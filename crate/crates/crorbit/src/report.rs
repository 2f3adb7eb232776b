//! Orbit specification documents and the full analysis report.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::arc::{arc_flag_type, arc_report, ArcRelation, ArcReport};
use crate::error::Error;
use crate::lattice::{Chamber, DynkinSpec, Node, RootSystem};
use crate::parabolic::{find_fit_chamber, CrAlgebraSpec, IsotropyDims, ParabolicSet};
use crate::realform::{catalog, CayleySet, Conjugation, SatakeEntry};
use crate::reduce::{
    cr_weakening, fiber_structure_report, fibration_predicates, fundamental_reduction,
    is_holomorphically_nondegenerate, is_strictly_nondegenerate, maximal_cr_structures,
    real_core, weak_reduction, FiberReport, StageTag,
};
use crate::topo::{
    euler_complex_flag, fiber_component_count, pi1_orbit, pi1_real_flag, GroupPresentation,
    SubgroupDescription,
};
use crate::Result;

pub const SCHEMA_VERSION: u32 = 1;

/// Default Weyl-group size bound for exhaustive chamber enumeration.
pub const ENUMERATION_LIMIT: u64 = 1200;

/// A root in a document: either coordinates in the simple-root basis or,
/// for a single type-A component, a difference `"ei-ej"`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RootSpec {
    Coords(Vec<i64>),
    EDiff(String),
}

impl RootSpec {
    pub fn resolve(&self, rs: &RootSystem) -> Result<Vec<i64>> {
        match self {
            RootSpec::Coords(c) => Ok(c.clone()),
            RootSpec::EDiff(s) => parse_e_diff(rs, s),
        }
    }
}

fn parse_e_diff(rs: &RootSystem, s: &str) -> Result<Vec<i64>> {
    if !rs.spec().is_single_type_a() {
        return Err(Error::Schema(format!(
            "e-basis notation `{s}` needs a single type-A component, got {}",
            rs.spec()
        )));
    }
    let n = rs.rank() + 1;
    let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let parts: Vec<&str> = cleaned.split('-').collect();
    let parse_idx = |p: &str| -> Result<usize> {
        let p = p
            .strip_prefix('e')
            .ok_or_else(|| Error::Schema(format!("bad e-basis root `{s}`")))?;
        let i: usize = p
            .parse()
            .map_err(|_| Error::Schema(format!("bad e-basis root `{s}`")))?;
        if i == 0 || i > n {
            return Err(Error::Schema(format!("index out of range in `{s}`")));
        }
        Ok(i)
    };
    if parts.len() != 2 {
        return Err(Error::Schema(format!("bad e-basis root `{s}`")));
    }
    let (a, b) = (parse_idx(parts[0])?, parse_idx(parts[1])?);
    if a == b {
        return Err(Error::Schema(format!("zero root `{s}`")));
    }
    Ok(catalog::e_diff_coords(n, a, b))
}

/// The real form of a document: a catalog name or an inline entry.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RealFormSpec {
    Name(String),
    Inline(Box<SatakeEntry>),
}

/// One orbit of a real form in a complex flag manifold.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OrbitDocument {
    #[serde(default = "default_version")]
    pub schema_version: u32,
    pub dynkin: String,
    pub real_form: RealFormSpec,
    #[serde(default)]
    pub cayley: Vec<RootSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi: Option<Vec<Node>>,
    /// Type-A convenience: flag dimension signature `d₁ < … < d_r`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub flag: Option<Vec<usize>>,
    /// Optional regular covector selecting the chamber Φ refers to.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chamber: Option<Vec<i64>>,
}

fn default_version() -> u32 {
    SCHEMA_VERSION
}

impl OrbitDocument {
    pub fn from_json(text: &str) -> Result<OrbitDocument> {
        let doc: OrbitDocument =
            serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
        if doc.schema_version != SCHEMA_VERSION {
            return Err(Error::Schema(format!(
                "unsupported schema_version {}",
                doc.schema_version
            )));
        }
        Ok(doc)
    }

    /// Build the root system and orbit spec the document describes.
    pub fn resolve(&self) -> Result<(RootSystem, CrAlgebraSpec)> {
        let dynkin = DynkinSpec::parse(&self.dynkin)?;
        let rs = RootSystem::build(dynkin)?;
        let entry = match &self.real_form {
            RealFormSpec::Name(name) => catalog::find(name)?,
            RealFormSpec::Inline(e) => (**e).clone(),
        };
        let base = Conjugation::from_entry(&rs, &entry)?;
        let conj = if self.cayley.is_empty() {
            base
        } else {
            let roots: Vec<Vec<i64>> = self
                .cayley
                .iter()
                .map(|r| r.resolve(&rs))
                .collect::<Result<_>>()?;
            base.apply_cayley(&rs, &CayleySet::new(roots))?
        };
        let phi: BTreeSet<Node> = match (&self.phi, &self.flag) {
            (Some(_), Some(_)) => {
                return Err(Error::Schema("phi and flag are mutually exclusive".into()))
            }
            (Some(p), None) => p.iter().copied().collect(),
            (None, Some(f)) => flag_to_phi(&rs, f)?,
            (None, None) => return Err(Error::Schema("one of phi or flag is required".into())),
        };
        let chamber = match &self.chamber {
            Some(cov) => Chamber::from_covector(&rs, cov.clone())?,
            None => Chamber::standard(&rs),
        };
        let q = ParabolicSet::from_phi(&rs, &chamber, &phi)?;
        Ok((rs, CrAlgebraSpec::new(conj, q)))
    }
}

/// Type-A flag signature `{d₁ < … < d_r}` of `F^n` ↦ `Φ = {α_{d₁}, …}`.
pub fn flag_to_phi(rs: &RootSystem, flag: &[usize]) -> Result<BTreeSet<Node>> {
    if !rs.spec().is_single_type_a() {
        return Err(Error::Schema(format!(
            "flag signatures need a single type-A component, got {}",
            rs.spec()
        )));
    }
    let mut out = BTreeSet::new();
    let mut prev = 0usize;
    for &d in flag {
        if d <= prev || d > rs.rank() {
            return Err(Error::Schema(format!(
                "flag signature {flag:?} is not strictly increasing within 1..={}",
                rs.rank()
            )));
        }
        prev = d;
        out.insert(d);
    }
    Ok(out)
}

/// Flag-type readout of a parabolic set: Φ in one of its fit chambers
/// (for type A this is the flag dimension signature).
pub fn flag_type(rs: &RootSystem, q: &ParabolicSet) -> Vec<Node> {
    let chamber = find_fit_chamber(rs, q);
    q.phi(rs, &chamber)
        .expect("own fit chamber")
        .into_iter()
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct StageReport {
    pub tag: StageTag,
    pub phi: Vec<Node>,
    pub flag_type: Vec<Node>,
    pub cr_dim: usize,
    pub cr_codim: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub dynkin: String,
    pub real_form: String,
    pub cayley: Vec<Vec<i64>>,
    pub flag_type: Vec<Node>,
    pub cr_dim: usize,
    pub cr_codim: usize,
    pub totally_real: bool,
    pub totally_complex: bool,
    pub isotropy: IsotropyDims,
    pub is_fundamental: bool,
    pub is_holomorphically_nondegenerate: bool,
    pub is_strictly_nondegenerate: bool,
    pub is_maximal_cr: bool,
    pub maximal_cr_psis: Vec<Vec<Node>>,
    pub fundamental_reduction_flag_type: Vec<Node>,
    pub weak_reduction_flag_type: Vec<Node>,
    pub weakening_flag_type: Vec<Node>,
    pub trace: Vec<StageReport>,
    pub core_flag_type: Vec<Node>,
    pub core_iteration: usize,
    pub core_to_orbit_fiber: FiberReportSummary,
    pub pi1_core: GroupPresentation,
    pub pi1_orbit: SubgroupDescription,
    pub fiber_components_to_core: u64,
    pub cartan_heuristic_ok: bool,
    pub arc: ArcSummary,
    pub euler_ambient_flag: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct FiberReportSummary {
    /// Fiber structure of the weakly nondegenerate reduction (a CR
    /// fibration), when the reduction is proper.
    pub weak_reduction_fiber: Option<FiberReport>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ArcSummary {
    pub report: ArcReport,
    pub flag_type: Vec<Node>,
}

/// Full analysis of an orbit document.  Pure: byte-identical output for
/// identical documents.
pub fn analyze(doc: &OrbitDocument) -> Result<AnalysisReport> {
    let (rs, spec) = doc.resolve()?;
    let report = analyze_spec(&rs, &spec)?;
    validate(&rs, &spec, &report)?;
    Ok(report)
}

pub fn analyze_spec(rs: &RootSystem, spec: &CrAlgebraSpec) -> Result<AnalysisReport> {
    let own_flag = flag_type(rs, &spec.parabolic);
    let (_, _, fred) = fundamental_reduction(rs, spec);
    let (_, _, wred) = weak_reduction(rs, spec);
    let weakening = cr_weakening(rs, spec);
    let (core, trace) = real_core(rs, spec);
    let (is_max, max_psis) = maximal_cr_structures(rs, spec);

    let weak_reduction_fiber = if wred.parabolic != spec.parabolic {
        let preds = fibration_predicates(spec, &wred)?;
        debug_assert!(preds.is_cr_submersion);
        Some(fiber_structure_report(rs, spec, &wred)?)
    } else {
        None
    };

    let pi1_core = pi1_real_flag(rs, &core)?;
    let sub = pi1_orbit(rs, spec)?;
    let fc = fiber_component_count(rs, spec, &core)?;

    let arc = arc_report(rs, spec, ENUMERATION_LIMIT)?;
    let arc_q = crate::arc::arc_parabolic(rs, spec);

    let stage_reports: Vec<StageReport> = trace
        .stages
        .iter()
        .map(|st| StageReport {
            tag: st.tag,
            phi: st.phi.iter().copied().collect(),
            flag_type: flag_type(rs, &st.spec.parabolic),
            cr_dim: st.spec.cr_dim(),
            cr_codim: st.spec.cr_codim(),
        })
        .collect();

    let std_chamber = Chamber::standard(rs);
    let ambient_phi = spec
        .parabolic
        .phi(rs, &std_chamber)
        .unwrap_or_else(|_| flag_type(rs, &spec.parabolic).into_iter().collect());

    Ok(AnalysisReport {
        schema_version: SCHEMA_VERSION,
        dynkin: rs.spec().to_string(),
        real_form: spec.conj.name().unwrap_or("inline").to_string(),
        cayley: spec
            .conj
            .cayley()
            .iter()
            .map(|&i| rs.root(i).to_vec())
            .collect(),
        flag_type: own_flag,
        cr_dim: spec.cr_dim(),
        cr_codim: spec.cr_codim(),
        totally_real: spec.is_totally_real(),
        totally_complex: spec.is_totally_complex(),
        isotropy: spec.isotropy_dims(rs),
        is_fundamental: crate::reduce::is_fundamental(rs, spec),
        is_holomorphically_nondegenerate: is_holomorphically_nondegenerate(rs, spec),
        is_strictly_nondegenerate: is_strictly_nondegenerate(rs, spec),
        is_maximal_cr: is_max,
        maximal_cr_psis: max_psis
            .into_iter()
            .map(|s| s.into_iter().collect())
            .collect(),
        fundamental_reduction_flag_type: flag_type(rs, &fred.parabolic),
        weak_reduction_flag_type: flag_type(rs, &wred.parabolic),
        weakening_flag_type: flag_type(rs, &weakening.parabolic),
        trace: stage_reports,
        core_flag_type: flag_type(rs, &core.parabolic),
        core_iteration: trace.core_iteration,
        core_to_orbit_fiber: FiberReportSummary {
            weak_reduction_fiber,
        },
        pi1_core,
        pi1_orbit: sub,
        fiber_components_to_core: fc.count,
        cartan_heuristic_ok: fc.cartan_heuristic_ok,
        arc: ArcSummary {
            report: arc,
            flag_type: arc_flag_type(rs, &arc_q),
        },
        euler_ambient_flag: euler_complex_flag(rs, &ambient_phi.iter().copied().collect())?,
    })
}

/// Internal consistency of a report; failures map to exit code 5.
pub fn validate(rs: &RootSystem, spec: &CrAlgebraSpec, report: &AnalysisReport) -> Result<()> {
    let mut problems: Vec<String> = Vec::new();
    let (core, _) = real_core(rs, spec);
    if !core.is_totally_real() {
        problems.push("core is not totally real".into());
    }
    if report.pi1_orbit.index != report.fiber_components_to_core {
        problems.push("π₁ index differs from the fiber component count".into());
    }
    if let (Some(sub), Some(amb)) = (
        report.pi1_orbit.subgroup_order(),
        report.pi1_core.abelianization_order(),
    ) {
        if report.pi1_orbit.index * sub != amb {
            problems.push("index × |subgroup| ≠ |ambient|".into());
        }
    }
    let q = spec.q();
    let sq = spec.sigma_q();
    if report.cr_dim + q.intersection(&sq).len() != q.len() {
        problems.push("CR dimension identity fails".into());
    }
    if report.cr_codim + q.union(&sq).len() != rs.num_roots() {
        problems.push("CR codimension identity fails".into());
    }
    for sig in [&report.flag_type, &report.core_flag_type, &report.arc.flag_type] {
        if sig.windows(2).any(|w| w[0] >= w[1]) || sig.iter().any(|&d| d == 0 || d > rs.rank()) {
            problems.push(format!("malformed flag signature {sig:?}"));
        }
    }
    if report.arc.report.kj_condition == crate::arc::KjStatus::Holds
        && report.arc.report.relation != ArcRelation::Equal
    {
        problems.push("chamber condition holds but arc ≠ core".into());
    }
    if problems.is_empty() {
        Ok(())
    } else {
        Err(Error::Inconsistent(problems.join("; ")))
    }
}
