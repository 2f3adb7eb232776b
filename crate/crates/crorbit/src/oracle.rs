//! Brute-force oracles: exhaustive verification of the reduction formulas,
//! chamber independence, and arc invariance at small rank, by enumeration of
//! Weyl chambers and parabolic sets.  These deliberately avoid the fast
//! Φ-formula code paths they certify.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::Error;
use crate::lattice::{enumerate_chambers, Chamber, RootSystem};
use crate::parabolic::{is_s_fit, is_v_fit, CrAlgebraSpec, ParabolicSet};
use crate::realform::Conjugation;
use crate::Result;

/// All parabolic sets of the root system, each as `(chamber, Φ)` for some
/// enumerated chamber, deduplicated.
pub fn all_parabolic_sets(rs: &RootSystem, limit: u64) -> Result<Vec<ParabolicSet>> {
    let chambers = enumerate_chambers(rs, limit)?;
    let mut seen: BTreeSet<crate::bitset::RootSet> = BTreeSet::new();
    let mut out = Vec::new();
    for chamber in &chambers {
        for mask in 0..(1u64 << rs.rank()) {
            let phi: BTreeSet<usize> = (0..rs.rank())
                .filter(|k| mask >> k & 1 == 1)
                .map(|k| k + 1)
                .collect();
            let q = ParabolicSet::from_phi(rs, chamber, &phi)?;
            if seen.insert(q.members().clone()) {
                out.push(q);
            }
        }
    }
    Ok(out)
}

/// Brute-force smallest parabolic set containing `Q ∪ σ*Q`: the
/// intersection of all parabolic supersets (verified to be one of them).
pub fn brute_fundamental_reduction(
    rs: &RootSystem,
    spec: &CrAlgebraSpec,
    limit: u64,
) -> Result<ParabolicSet> {
    brute_fundamental_in(spec, &all_parabolic_sets(rs, limit)?)
}

pub fn brute_fundamental_in(spec: &CrAlgebraSpec, all: &[ParabolicSet]) -> Result<ParabolicSet> {
    let target = spec.q().union(&spec.sigma_q());
    let supersets: Vec<&ParabolicSet> = all
        .iter()
        .filter(|p| target.is_subset(p.members()))
        .collect();
    let mut inter = crate::bitset::RootSet::full(spec.q().universe());
    for p in &supersets {
        inter = inter.intersection(p.members());
    }
    let smallest = supersets
        .iter()
        .find(|p| *p.members() == inter)
        .ok_or_else(|| {
            Error::Inconsistent("intersection of parabolic supersets is not parabolic".into())
        })?;
    Ok((*smallest).clone())
}

/// Brute-force largest parabolic set between `Q` and `Q ∪ σ*Q` (verified
/// unique).
pub fn brute_weak_reduction(
    rs: &RootSystem,
    spec: &CrAlgebraSpec,
    limit: u64,
) -> Result<ParabolicSet> {
    brute_weak_in(spec, &all_parabolic_sets(rs, limit)?)
}

pub fn brute_weak_in(spec: &CrAlgebraSpec, all: &[ParabolicSet]) -> Result<ParabolicSet> {
    let lower = spec.q();
    let upper = lower.union(&spec.sigma_q());
    let candidates: Vec<&ParabolicSet> = all
        .iter()
        .filter(|p| lower.is_subset(p.members()) && p.members().is_subset(&upper))
        .collect();
    let largest = candidates
        .iter()
        .max_by_key(|p| p.len())
        .expect("Q itself is a candidate");
    for p in &candidates {
        if !p.members().is_subset(largest.members()) {
            return Err(Error::Inconsistent(
                "largest parabolic between Q and Q ∪ σ*Q is not unique".into(),
            ));
        }
    }
    Ok((*largest).clone())
}

/// Brute-force maximal strengthenings: maximal parabolic supersets of `Q`
/// with the same `Q ∩ σ*Q`.
pub fn brute_maximal_strengthenings(
    rs: &RootSystem,
    spec: &CrAlgebraSpec,
    limit: u64,
) -> Result<Vec<ParabolicSet>> {
    let target = spec.q().intersection(&spec.sigma_q());
    let all = all_parabolic_sets(rs, limit)?;
    let candidates: Vec<&ParabolicSet> = all
        .iter()
        .filter(|p| {
            spec.q().is_subset(p.members()) && {
                let q2 = CrAlgebraSpec::new(spec.conj.clone(), (*p).clone());
                q2.q().intersection(&q2.sigma_q()) == target
            }
        })
        .collect();
    Ok(candidates
        .iter()
        .filter(|p| {
            !candidates
                .iter()
                .any(|other| other.members() != p.members() && p.members().is_subset(other.members()))
        })
        .map(|p| (*p).clone())
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OracleCheck {
    Parabolicity,
    ReductionsMinimality,
    ChamberIndependence,
    ArcInvariance,
}

impl OracleCheck {
    pub const ALL: [OracleCheck; 4] = [
        OracleCheck::Parabolicity,
        OracleCheck::ReductionsMinimality,
        OracleCheck::ChamberIndependence,
        OracleCheck::ArcInvariance,
    ];

    pub fn parse(s: &str) -> Option<OracleCheck> {
        match s {
            "parabolicity" => Some(OracleCheck::Parabolicity),
            "reductions-minimality" => Some(OracleCheck::ReductionsMinimality),
            "chamber-independence" => Some(OracleCheck::ChamberIndependence),
            "arc-invariance" => Some(OracleCheck::ArcInvariance),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            OracleCheck::Parabolicity => "parabolicity",
            OracleCheck::ReductionsMinimality => "reductions-minimality",
            OracleCheck::ChamberIndependence => "chamber-independence",
            OracleCheck::ArcInvariance => "arc-invariance",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleOutcome {
    pub check: OracleCheck,
    pub cases: usize,
    pub passed: bool,
    pub counterexample: Option<String>,
}

/// Run one exhaustive oracle over every Φ of every enumerated chamber for
/// a fixed conjugation.  Results are deterministic (cases sorted by chamber
/// covector and Φ mask).
pub fn run_oracle(
    rs: &RootSystem,
    conj: &Conjugation,
    check: OracleCheck,
    limit: u64,
) -> Result<OracleOutcome> {
    let chambers = enumerate_chambers(rs, limit)?;
    let all_sets = match check {
        OracleCheck::ReductionsMinimality => Some(all_parabolic_sets(rs, limit)?),
        _ => None,
    };
    let mut cases = 0usize;
    let mut counterexample: Option<String> = None;

    let mut specs: Vec<(Chamber, BTreeSet<usize>, CrAlgebraSpec)> = Vec::new();
    for chamber in &chambers {
        for mask in 0..(1u64 << rs.rank()) {
            let phi: BTreeSet<usize> = (0..rs.rank())
                .filter(|k| mask >> k & 1 == 1)
                .map(|k| k + 1)
                .collect();
            let q = ParabolicSet::from_phi(rs, chamber, &phi)?;
            specs.push((chamber.clone(), phi, CrAlgebraSpec::new(conj.clone(), q)));
        }
    }

    'cases: for (chamber, phi, spec) in &specs {
        cases += 1;
        match check {
            OracleCheck::Parabolicity => {
                // re-validate construction, the Φ round trip, and the arc set
                if ParabolicSet::new(rs, spec.q().clone()).is_err() {
                    counterexample = Some(format!("Φ = {phi:?}: invariants fail"));
                    break 'cases;
                }
                if spec.parabolic.phi(rs, chamber).ok() != Some(phi.clone()) {
                    counterexample = Some(format!("Φ = {phi:?}: round trip fails"));
                    break 'cases;
                }
                let arc = crate::arc::arc_parabolic(rs, spec);
                if arc.sigma_image(&spec.conj) != arc {
                    counterexample = Some(format!("Φ = {phi:?}: arc set not σ*-stable"));
                    break 'cases;
                }
            }
            OracleCheck::ReductionsMinimality => {
                let (_, _, fast_f) = crate::reduce::fundamental_reduction(rs, spec);
                let brute_f = brute_fundamental_in(spec, all_sets.as_ref().unwrap())?;
                if fast_f.parabolic != brute_f {
                    counterexample =
                        Some(format!("Φ = {phi:?}: fundamental reduction ≠ brute force"));
                    break 'cases;
                }
                let (_, _, fast_w) = crate::reduce::weak_reduction(rs, spec);
                let brute_w = brute_weak_in(spec, all_sets.as_ref().unwrap())?;
                if fast_w.parabolic != brute_w {
                    counterexample = Some(format!("Φ = {phi:?}: weak reduction ≠ brute force"));
                    break 'cases;
                }
            }
            OracleCheck::ChamberIndependence => {
                // every S-fit chamber gives the same fundamental reduction;
                // every V-fit chamber gives the same weak reduction
                let (_, _, fast_f) = crate::reduce::fundamental_reduction(rs, spec);
                let (_, _, fast_w) = crate::reduce::weak_reduction(rs, spec);
                for c in &chambers {
                    if !c.positives().is_subset(spec.q()) {
                        continue;
                    }
                    if is_s_fit(rs, spec, c) {
                        let alt = reduction_in_chamber(rs, spec, c, true);
                        if alt != fast_f.parabolic {
                            counterexample = Some(format!(
                                "Φ = {phi:?}: fundamental reduction depends on the S-fit chamber"
                            ));
                            break 'cases;
                        }
                    }
                    if is_v_fit(rs, spec, c) {
                        let alt = reduction_in_chamber(rs, spec, c, false);
                        if alt != fast_w.parabolic {
                            counterexample = Some(format!(
                                "Φ = {phi:?}: weak reduction depends on the V-fit chamber"
                            ));
                            break 'cases;
                        }
                    }
                }
            }
            OracleCheck::ArcInvariance => {
                let (_, _, red) = crate::reduce::weak_reduction(rs, spec);
                if crate::arc::arc_parabolic(rs, spec) != crate::arc::arc_parabolic(rs, &red) {
                    counterexample =
                        Some(format!("Φ = {phi:?}: arc set changes under weak reduction"));
                    break 'cases;
                }
            }
        }
    }

    Ok(OracleOutcome {
        check,
        cases,
        passed: counterexample.is_none(),
        counterexample,
    })
}

/// The Ψ-formula evaluated in a *given* fit chamber (S-fit when
/// `fundamental`, else V-fit), used to test chamber independence.
fn reduction_in_chamber(
    rs: &RootSystem,
    spec: &CrAlgebraSpec,
    chamber: &Chamber,
    fundamental: bool,
) -> ParabolicSet {
    let phi = spec.parabolic.phi(rs, chamber).expect("chamber is fit");
    let nil = spec.parabolic.nil(rs);
    let psi: BTreeSet<usize> = if fundamental {
        let mut banned: BTreeSet<usize> = BTreeSet::new();
        for (k, &b) in chamber.basis().iter().enumerate() {
            let node = k + 1;
            let bar = spec.conj.apply(b);
            if !phi.contains(&node) || !chamber.is_positive(bar) {
                banned.extend(chamber.support(rs, bar));
            }
        }
        phi.iter()
            .copied()
            .filter(|&node| {
                let b = chamber.basis()[node - 1];
                nil.contains(spec.conj.apply(b)) && !banned.contains(&node)
            })
            .collect()
    } else {
        phi.iter()
            .copied()
            .filter(|&node| chamber.is_positive(spec.conj.apply(chamber.basis()[node - 1])))
            .collect()
    };
    ParabolicSet::from_phi(rs, chamber, &psi).expect("valid nodes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::DynkinSpec;
    use crate::realform::catalog;

    fn setup(dynkin: &str, form: &str) -> (RootSystem, Conjugation) {
        let rs = RootSystem::build(DynkinSpec::parse(dynkin).unwrap()).unwrap();
        let conj = Conjugation::from_entry(&rs, &catalog::find(form).unwrap()).unwrap();
        (rs, conj)
    }

    #[test]
    fn parabolic_set_counts_at_small_rank() {
        let (rs, _) = setup("A2", "sl3R");
        // A2: 1 full + 6 Borel + 6 maximal = 13 parabolic sets
        assert_eq!(all_parabolic_sets(&rs, 100).unwrap().len(), 13);
    }

    #[test]
    fn oracles_pass_on_a2_sweep() {
        for form in ["sl3R", "su21", "compact_a2"] {
            let (rs, conj) = setup("A2", form);
            for check in OracleCheck::ALL {
                let out = run_oracle(&rs, &conj, check, 100).unwrap();
                assert!(out.passed, "{form} {:?}: {:?}", check, out.counterexample);
                assert_eq!(out.cases, 6 * 4);
            }
        }
    }

    #[test]
    fn oracle_bound_is_enforced() {
        let (rs, conj) = setup("A4", "sl5R");
        assert!(matches!(
            run_oracle(&rs, &conj, OracleCheck::Parabolicity, 100),
            Err(Error::EnumerationBound { .. })
        ));
    }

    #[test]
    fn brute_reductions_match_named_examples() {
        let (rs, conj) = setup("A2", "su21");
        let c = Chamber::standard(&rs);
        let q = ParabolicSet::from_phi(&rs, &c, &BTreeSet::from([1])).unwrap();
        let spec = CrAlgebraSpec::new(conj, q);
        // the hypersurface orbit is fundamental: smallest superset of
        // Q ∪ σ*Q is everything
        let f = brute_fundamental_reduction(&rs, &spec, 100).unwrap();
        assert_eq!(f.len(), rs.num_roots());
        // and weakly nondegenerate: largest between Q and Q ∪ σ*Q is Q
        let w = brute_weak_reduction(&rs, &spec, 100).unwrap();
        assert_eq!(w, spec.parabolic);
    }
}
