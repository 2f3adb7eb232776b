//! Canonical constructions on parabolic CR algebras: CR-weakening, the
//! fundamental and weakly nondegenerate reductions, the real-core tower,
//! fibration predicates, fiber structure reports, and maximal CR structures.

use std::collections::BTreeSet;

use crate::bitset::RootSet;
use crate::error::Error;
use crate::lattice::{Chamber, Node, RootSystem, SimpleType};
use crate::parabolic::{find_s_fit, find_v_fit, CrAlgebraSpec, ParabolicSet};
use crate::Result;

/// How a stage of the reduction tower arose from its predecessor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StageTag {
    Initial,
    WeakReduction,
    Weakening,
    Core,
}

#[derive(Debug, Clone)]
pub struct Stage {
    pub tag: StageTag,
    pub spec: CrAlgebraSpec,
    /// Fit chamber in which Φ was read off.
    pub chamber: Chamber,
    pub phi: BTreeSet<Node>,
}

/// The tower of weak reductions and weakenings ending at the real core.
#[derive(Debug, Clone)]
pub struct ReductionTrace {
    pub stages: Vec<Stage>,
    /// Index `h` such that the core is `M⁽ʰ⁾` of the alternating sequence.
    pub core_iteration: usize,
}

impl ReductionTrace {
    pub fn core(&self) -> &Stage {
        self.stages.last().expect("trace has at least one stage")
    }
}

fn stage(rs: &RootSystem, tag: StageTag, spec: CrAlgebraSpec) -> Stage {
    let chamber = crate::parabolic::find_fit_chamber(rs, &spec.parabolic);
    let phi = spec
        .parabolic
        .phi(rs, &chamber)
        .expect("own fit chamber is fit");
    Stage {
        tag,
        spec,
        chamber,
        phi,
    }
}

/// `Q_w = Qⁿ ∪ (Qʳ ∩ σ*Q)`: the minimal parabolic inside `Q` with the same
/// `Q ∩ σ*Q`.
pub fn cr_weakening(rs: &RootSystem, spec: &CrAlgebraSpec) -> CrAlgebraSpec {
    let nil = spec.parabolic.nil(rs);
    let red = spec.parabolic.reductive(rs);
    let members = nil.union(&red.intersection(&spec.sigma_q()));
    let parabolic = ParabolicSet::new(rs, members).expect("weakening is parabolic");
    CrAlgebraSpec::new(spec.conj.clone(), parabolic)
}

/// Weakly nondegenerate reduction, computed in a V-fit chamber:
/// `Ψ = {α ∈ Φ : σ*α ≻ 0}`.  Returns the chamber, Ψ, and the reduced spec.
pub fn weak_reduction(rs: &RootSystem, spec: &CrAlgebraSpec) -> (Chamber, BTreeSet<Node>, CrAlgebraSpec) {
    let chamber = find_v_fit(rs, spec);
    let phi = spec
        .parabolic
        .phi(rs, &chamber)
        .expect("V-fit chamber is fit");
    let psi: BTreeSet<Node> = phi
        .iter()
        .copied()
        .filter(|&node| {
            let b = chamber.basis()[node - 1];
            chamber.is_positive(spec.conj.apply(b))
        })
        .collect();
    let parabolic = ParabolicSet::from_phi(rs, &chamber, &psi).expect("Ψ nodes are valid");
    (chamber, psi, CrAlgebraSpec::new(spec.conj.clone(), parabolic))
}

/// Is the spec holomorphically nondegenerate (`Ψ = Φ` in a V-fit chamber)?
pub fn is_holomorphically_nondegenerate(rs: &RootSystem, spec: &CrAlgebraSpec) -> bool {
    let (chamber, psi, _) = weak_reduction(rs, spec);
    let phi = spec.parabolic.phi(rs, &chamber).expect("fit");
    psi == phi
}

/// Basis of the fundamental reduction, computed in an S-fit chamber:
/// `Ψ = (Φ ∩ σ*(Qⁿ)) ∖ ⋃ supp(σ*β)` over `β ∈ (B∖Φ) ∪ Φ⁻`.  The induced
/// fibration onto the reduced orbit is CR with finite-type fiber
/// components.
pub fn fundamental_reduction(
    rs: &RootSystem,
    spec: &CrAlgebraSpec,
) -> (Chamber, BTreeSet<Node>, CrAlgebraSpec) {
    let chamber = find_s_fit(rs, spec);
    let phi = spec
        .parabolic
        .phi(rs, &chamber)
        .expect("S-fit chamber is fit");
    let nil = spec.parabolic.nil(rs);

    let mut banned: BTreeSet<Node> = BTreeSet::new();
    for (k, &b) in chamber.basis().iter().enumerate() {
        let node = k + 1;
        let in_phi = phi.contains(&node);
        let bar = spec.conj.apply(b);
        let bar_negative = !chamber.is_positive(bar);
        // β ranges over (B∖Φ) ∪ Φ⁻, where Φ⁻ = {α ∈ Φ : σ*α ≺ 0}
        if !in_phi || bar_negative {
            banned.extend(chamber.support(rs, bar));
        }
    }
    let psi: BTreeSet<Node> = phi
        .iter()
        .copied()
        .filter(|&node| {
            let b = chamber.basis()[node - 1];
            nil.contains(spec.conj.apply(b)) && !banned.contains(&node)
        })
        .collect();
    let parabolic = ParabolicSet::from_phi(rs, &chamber, &psi).expect("Ψ nodes are valid");
    (chamber, psi, CrAlgebraSpec::new(spec.conj.clone(), parabolic))
}

/// Is the spec fundamental (finite type), i.e. `Ψ = ∅`?
pub fn is_fundamental(rs: &RootSystem, spec: &CrAlgebraSpec) -> bool {
    fundamental_reduction(rs, spec).1.is_empty()
}

/// Levi-nondegeneracy at root level: no root `α ∈ Q ∖ σ*Q` has
/// `α + β ∈ Q ∪ σ*Q` (or a non-root) for every `β ∈ σ*Q`.
pub fn is_strictly_nondegenerate(rs: &RootSystem, spec: &CrAlgebraSpec) -> bool {
    let q = spec.q();
    let sq = spec.sigma_q();
    let allowed = q.union(&sq);
    !q.difference(&sq).iter().any(|alpha| {
        sq.iter().all(|beta| {
            let sum: Vec<i64> = rs
                .root(alpha)
                .iter()
                .zip(rs.root(beta))
                .map(|(&x, &y)| x + y)
                .collect();
            match rs.root_index(&sum) {
                Ok(c) => allowed.contains(c),
                Err(_) => true,
            }
        })
    })
}

/// The real core: alternate weak reductions and weakenings until both fix
/// the spec.  Termination: the orbit dimension strictly decreases until the
/// spec is polarized and weakly nondegenerate.
pub fn real_core(rs: &RootSystem, spec: &CrAlgebraSpec) -> (CrAlgebraSpec, ReductionTrace) {
    let mut stages = vec![stage(rs, StageTag::Initial, spec.clone())];
    let mut cur = spec.clone();

    let (_, _, wr0) = weak_reduction(rs, &cur);
    if wr0.parabolic != cur.parabolic {
        stages.push(stage(rs, StageTag::WeakReduction, wr0.clone()));
        cur = wr0;
    }
    let mut iteration = 0usize;
    loop {
        let wk = cr_weakening(rs, &cur);
        let (_, _, wr) = weak_reduction(rs, &wk);
        if wk.parabolic == cur.parabolic && wr.parabolic == cur.parabolic {
            break;
        }
        if wk.parabolic != cur.parabolic {
            stages.push(stage(rs, StageTag::Weakening, wk.clone()));
        }
        if wr.parabolic != wk.parabolic {
            stages.push(stage(rs, StageTag::WeakReduction, wr.clone()));
        }
        cur = wr;
        iteration += 1;
        assert!(
            iteration <= rs.num_roots(),
            "core iteration did not stabilize"
        );
    }
    if stages.len() > 1 {
        stages.last_mut().expect("nonempty").tag = StageTag::Core;
    }
    debug_assert_eq!(cur.sigma_q(), *cur.q(), "core is σ*-stable");
    (
        cur,
        ReductionTrace {
            stages,
            core_iteration: iteration,
        },
    )
}

/// Predicates of the equivariant fibration `M_total → M_base` attached to a
/// nested pair `Q_total ⊆ Q_base`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct FibrationPredicates {
    pub is_cr_map: bool,
    pub is_cr_submersion: bool,
    pub has_complex_fibers: bool,
}

fn check_pair(total: &CrAlgebraSpec, base: &CrAlgebraSpec) -> Result<()> {
    if total.conj.matrix() != base.conj.matrix() {
        return Err(Error::Unsupported(
            "fibration pair must share one conjugation".into(),
        ));
    }
    if !total.q().is_subset(base.q()) {
        return Err(Error::NotNested);
    }
    Ok(())
}

pub fn fibration_predicates(
    total: &CrAlgebraSpec,
    base: &CrAlgebraSpec,
) -> Result<FibrationPredicates> {
    check_pair(total, base)?;
    let q = base.q();
    let q_total = total.q();
    let is_cr_map = q_total.is_subset(q);
    let is_cr_submersion = q.is_subset(&q_total.union(&q.intersection(&base.sigma_q())));
    let has_complex_fibers = q.is_subset(&q_total.union(&total.sigma_q()));
    Ok(FibrationPredicates {
        is_cr_map,
        is_cr_submersion,
        has_complex_fibers,
    })
}

/// Classify a closed subsystem of roots into simple components, e.g. "A1xA2".
pub fn classify_subsystem(rs: &RootSystem, roots: &RootSet) -> Vec<(SimpleType, usize)> {
    if roots.is_empty() {
        return Vec::new();
    }
    let std = Chamber::standard(rs);
    let positives: Vec<usize> = roots.iter().filter(|&i| std.is_positive(i)).collect();
    let simple: Vec<usize> = positives
        .iter()
        .copied()
        .filter(|&a| {
            !positives.iter().any(|&b| {
                positives.iter().any(|&c| {
                    let sum: Vec<i64> = rs
                        .root(b)
                        .iter()
                        .zip(rs.root(c))
                        .map(|(&x, &y)| x + y)
                        .collect();
                    sum == rs.root(a)
                })
            })
        })
        .collect();
    // connected components of the Coxeter graph on the simples
    let n = simple.len();
    let mut comp = vec![usize::MAX; n];
    let mut ncomp = 0;
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let mut stack = vec![start];
        comp[start] = ncomp;
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if comp[j] == usize::MAX
                    && rs.bilinear(rs.root(simple[i]), rs.root(simple[j])) != 0
                {
                    comp[j] = ncomp;
                    stack.push(j);
                }
            }
        }
        ncomp += 1;
    }
    let mut out = Vec::new();
    for c in 0..ncomp {
        let nodes: Vec<usize> = (0..n).filter(|&i| comp[i] == c).map(|i| simple[i]).collect();
        out.push(classify_component(rs, &nodes));
    }
    out.sort();
    out
}

fn classify_component(rs: &RootSystem, nodes: &[usize]) -> (SimpleType, usize) {
    let r = nodes.len();
    let weight = |a: usize, b: usize| -> i64 {
        let x = rs.root(nodes[a]);
        let y = rs.root(nodes[b]);
        rs.cartan_pairing(x, y) * rs.cartan_pairing(y, x)
    };
    let degree = |a: usize| (0..r).filter(|&b| b != a && weight(a, b) != 0).count();
    let max_weight = (0..r)
        .flat_map(|a| (a + 1..r).map(move |b| (a, b)))
        .map(|(a, b)| weight(a, b))
        .max()
        .unwrap_or(0);
    if max_weight == 3 {
        return (SimpleType::G, 2);
    }
    if max_weight == 2 {
        // doubled edge: B, C, or F4
        let (a, b) = (0..r)
            .flat_map(|a| (a + 1..r).map(move |b| (a, b)))
            .find(|&(a, b)| weight(a, b) == 2)
            .expect("doubled edge exists");
        let internal = degree(a) > 1 && degree(b) > 1;
        if internal {
            return (SimpleType::F, 4);
        }
        // short end: B; long end: C (only matters for ranks ≥ 3)
        let end = if degree(a) == 1 { a } else { b };
        let short_end = rs.norm(rs.root(nodes[end])) < rs.norm(rs.root(nodes[if end == a { b } else { a }]));
        if r >= 3 && !short_end {
            return (SimpleType::C, r);
        }
        return (SimpleType::B, r);
    }
    if let Some(branch) = (0..r).find(|&a| degree(a) == 3) {
        // arm lengths from the branch node
        let mut arms: Vec<usize> = Vec::new();
        for s in (0..r).filter(|&b| b != branch && weight(branch, b) != 0) {
            let mut len = 1;
            let mut prev = branch;
            let mut cur = s;
            loop {
                let next = (0..r)
                    .find(|&x| x != prev && x != cur && weight(cur, x) != 0);
                match next {
                    Some(x) => {
                        len += 1;
                        prev = cur;
                        cur = x;
                    }
                    None => break,
                }
            }
            arms.push(len);
        }
        arms.sort();
        if arms[0] == 1 && arms[1] == 1 {
            return (SimpleType::D, r);
        }
        return (SimpleType::E, r);
    }
    (SimpleType::A, r)
}

pub fn component_types_string(types: &[(SimpleType, usize)]) -> String {
    if types.is_empty() {
        return String::new();
    }
    types
        .iter()
        .map(|&(t, n)| format!("{}{}", t.letter(), n))
        .collect::<Vec<_>>()
        .join("x")
}

/// Structure of the typical fiber of a CR fibration `M_total → M_base`:
/// the parabolic CR algebra of the Levi factor of the base isotropy, plus
/// the complex dimension of the Euclidean (nilpotent) factor.
#[derive(Debug, Clone, serde::Serialize)]
pub struct FiberReport {
    /// Roots of the base's Levi isotropy factor, in ambient coordinates.
    pub levi_roots: Vec<Vec<i64>>,
    pub levi_component_types: String,
    /// Roots of the induced parabolic `Q_total ∩ levi`.
    pub induced_parabolic: Vec<Vec<i64>>,
    /// CR dimension / codimension of the Levi-factor orbit.
    pub cr_dim: usize,
    pub cr_codim: usize,
    /// Complex dimension of the Euclidean factor.
    pub nil_complex_dim: usize,
}

impl FiberReport {
    pub fn total_cr_dim(&self) -> usize {
        self.cr_dim + self.nil_complex_dim
    }
}

pub fn fiber_structure_report(
    rs: &RootSystem,
    total: &CrAlgebraSpec,
    base: &CrAlgebraSpec,
) -> Result<FiberReport> {
    check_pair(total, base)?;
    let levi = base.levi_isotropy_roots(rs);
    let q_f = total.q().intersection(&levi);
    let sigma_q_f = base.conj.map_set(&q_f);
    debug_assert!(sigma_q_f.is_subset(&levi));
    let nil_roots = base.nil_isotropy_roots(rs);
    let nil_complex_dim = nil_roots.difference(total.q()).len();
    let types = classify_subsystem(rs, &levi);
    Ok(FiberReport {
        levi_roots: levi.iter().map(|i| rs.root(i).to_vec()).collect(),
        levi_component_types: component_types_string(&types),
        induced_parabolic: q_f.iter().map(|i| rs.root(i).to_vec()).collect(),
        cr_dim: q_f.len() - q_f.intersection(&sigma_q_f).len(),
        cr_codim: levi.len() - q_f.union(&sigma_q_f).len(),
        nil_complex_dim,
    })
}

/// Is the CR structure maximal, and which `Ψ ⊆ Φ` give maximal
/// strengthenings with the same `Q ∩ σ*Q`?
pub fn maximal_cr_structures(
    rs: &RootSystem,
    spec: &CrAlgebraSpec,
) -> (bool, Vec<BTreeSet<Node>>) {
    let chamber = find_s_fit(rs, spec);
    let phi = spec.parabolic.phi(rs, &chamber).expect("fit");
    // eq-el test: α ∈ Φ with σ*α ≻ 0 must have supp(σ*α) ∩ Φ ⊆ {α}
    let is_maximal = phi.iter().all(|&node| {
        let b = chamber.basis()[node - 1];
        let bar = spec.conj.apply(b);
        if !chamber.is_positive(bar) {
            return true;
        }
        chamber
            .support(rs, bar)
            .intersection(&phi)
            .all(|&m| m == node)
    });

    let target = spec.q().intersection(&spec.sigma_q());
    let phi_vec: Vec<Node> = phi.iter().copied().collect();
    let mut candidates: Vec<BTreeSet<Node>> = Vec::new();
    for mask in 0..(1u64 << phi_vec.len()) {
        let psi: BTreeSet<Node> = phi_vec
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &n)| n)
            .collect();
        let q_psi = ParabolicSet::from_phi(rs, &chamber, &psi).expect("valid nodes");
        let spec_psi = CrAlgebraSpec::new(spec.conj.clone(), q_psi);
        if spec_psi.q().intersection(&spec_psi.sigma_q()) == target {
            candidates.push(psi);
        }
    }
    // a strengthening enlarges the parabolic, so maximal CR structures
    // correspond to the minimal candidate Ψ sets
    let maximal: Vec<BTreeSet<Node>> = candidates
        .iter()
        .filter(|psi| {
            !candidates
                .iter()
                .any(|other| *other != **psi && other.is_subset(psi))
        })
        .cloned()
        .collect();
    (is_maximal, maximal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::DynkinSpec;
    use crate::realform::{catalog, CayleySet, Conjugation};

    fn setup(dynkin: &str, form: &str) -> (RootSystem, Conjugation) {
        let rs = RootSystem::build(DynkinSpec::parse(dynkin).unwrap()).unwrap();
        let conj = Conjugation::from_entry(&rs, &catalog::find(form).unwrap()).unwrap();
        (rs, conj)
    }

    fn spec_of(rs: &RootSystem, conj: &Conjugation, nodes: &[usize]) -> CrAlgebraSpec {
        let c = Chamber::standard(rs);
        let q = ParabolicSet::from_phi(rs, &c, &nodes.iter().copied().collect()).unwrap();
        CrAlgebraSpec::new(conj.clone(), q)
    }

    /// All specs over the standard chamber for a list of forms.
    fn sweep(dynkin: &str, forms: &[&str]) -> Vec<(RootSystem, CrAlgebraSpec)> {
        let mut out = Vec::new();
        for form in forms {
            let (rs, conj) = setup(dynkin, form);
            for mask in 0..(1u32 << rs.rank()) {
                let nodes: Vec<usize> = (0..rs.rank())
                    .filter(|k| mask >> k & 1 == 1)
                    .map(|k| k + 1)
                    .collect();
                out.push((rs.clone(), spec_of(&rs, &conj, &nodes)));
            }
        }
        out
    }

    fn kf_spec() -> (RootSystem, CrAlgebraSpec) {
        let (rs, conj) = setup("A6", "sl7R");
        let cayley = CayleySet::new(vec![vec![1, 1, 1, 1, 1, 1], vec![0, 0, 1, 1, 1, 0]]);
        let t = conj.apply_cayley(&rs, &cayley).unwrap();
        let spec = spec_of(&rs, &t, &[1, 2, 3, 4, 5, 6]);
        (rs, spec)
    }

    fn kg_spec() -> (RootSystem, CrAlgebraSpec) {
        let (rs, conj) = setup("A6", "sl7R");
        let cayley = CayleySet::new(vec![vec![1, 1, 1, 1, 1, 1]]);
        let t = conj.apply_cayley(&rs, &cayley).unwrap();
        let spec = spec_of(&rs, &t, &[2, 3]);
        (rs, spec)
    }

    /// Flag signature of a spec: Φ read in a fit chamber of the spec itself.
    fn flag_type(rs: &RootSystem, spec: &CrAlgebraSpec) -> Vec<usize> {
        let c = crate::parabolic::find_fit_chamber(rs, &spec.parabolic);
        spec.parabolic.phi(rs, &c).unwrap().into_iter().collect()
    }

    #[test]
    fn weakening_fixes_sigma_stable_specs() {
        let (rs, conj) = setup("A2", "su21");
        let borel = spec_of(&rs, &conj, &[1, 2]);
        // σ*Q = Q for the su21 Borel
        assert_eq!(borel.sigma_q(), *borel.q());
        let w = cr_weakening(&rs, &borel);
        assert_eq!(w.parabolic, borel.parabolic);
    }

    #[test]
    fn su21_weakening_of_phi1_is_borel() {
        let (rs, conj) = setup("A2", "su21");
        let spec = spec_of(&rs, &conj, &[1]);
        let w = cr_weakening(&rs, &spec);
        let positives: RootSet = Chamber::standard(&rs).positives().clone();
        assert_eq!(*w.q(), positives);
    }

    #[test]
    fn weakening_identities_exhaustive_on_rank_2() {
        // eq-ef: Q_w ∩ σ*Q_w = Q ∩ σ*Q and Q_w ⊆ Q; the weakening is
        // polarized and a fixed point of weakening; Prop-ee dichotomy.
        for (dynkin, forms) in [
            ("A2", vec!["sl3R", "su21", "compact_a2"]),
            ("B2", vec!["so23", "so41", "compact_b2"]),
            ("G2", vec!["g2_2", "compact_g2"]),
            ("A3", vec!["su22", "su31", "sl2H"]),
        ] {
            for (rs, spec) in sweep(dynkin, &forms) {
                let w = cr_weakening(&rs, &spec);
                assert!(w.q().is_subset(spec.q()));
                assert_eq!(
                    w.q().intersection(&w.sigma_q()),
                    spec.q().intersection(&spec.sigma_q())
                );
                // polarized: Q_wʳ = σ*(Q_wʳ)
                let wr = w.parabolic.reductive(&rs);
                assert_eq!(spec.conj.map_set(&wr), wr);
                // fixed point
                assert_eq!(cr_weakening(&rs, &w).parabolic, w.parabolic);
                // dichotomy: totally real or weakly degenerate
                let (_, psi, red) = weak_reduction(&rs, &w);
                let degenerate = red.parabolic != w.parabolic;
                assert!(w.is_totally_real() || degenerate, "psi {psi:?}");
            }
        }
    }

    #[test]
    fn weakening_phi_formula_agrees_with_the_set_formula() {
        // second route: in an S-fit chamber, Φ_w = Φ ∪ {α ∈ B : σ*α ≻ 0,
        // supp(σ*α) ∩ Φ ≠ ∅}
        for (dynkin, forms) in [
            ("A2", vec!["sl3R", "su21", "compact_a2"]),
            ("A3", vec!["su22", "su31", "sl2H"]),
            ("B2", vec!["so41"]),
        ] {
            for (rs, spec) in sweep(dynkin, &forms) {
                let chamber = crate::parabolic::find_s_fit(&rs, &spec);
                let phi = spec.parabolic.phi(&rs, &chamber).unwrap();
                let mut phi_w = phi.clone();
                for (k, &b) in chamber.basis().iter().enumerate() {
                    let bar = spec.conj.apply(b);
                    if chamber.is_positive(bar)
                        && !chamber.support(&rs, bar).is_disjoint(&phi)
                    {
                        phi_w.insert(k + 1);
                    }
                }
                let via_phi = ParabolicSet::from_phi(&rs, &chamber, &phi_w).unwrap();
                assert_eq!(via_phi, cr_weakening(&rs, &spec).parabolic, "{dynkin}");
            }
        }
    }

    #[test]
    fn split_weak_reduction_is_identity() {
        for (rs, spec) in sweep("A3", &["sl4R"]) {
            let (_, _, red) = weak_reduction(&rs, &spec);
            assert_eq!(red.parabolic, spec.parabolic);
            assert!(is_holomorphically_nondegenerate(&rs, &spec));
        }
    }

    #[test]
    fn split_fundamental_reduction_keeps_phi() {
        let (rs, conj) = setup("A6", "sl7R");
        let borel = spec_of(&rs, &conj, &[1, 2, 3, 4, 5, 6]);
        let (_, psi, red) = fundamental_reduction(&rs, &borel);
        assert_eq!(psi.len(), 6);
        assert_eq!(red.parabolic, borel.parabolic);
        assert!(!is_fundamental(&rs, &borel));
        let full = spec_of(&rs, &conj, &[]);
        assert!(is_fundamental(&rs, &full));
    }

    #[test]
    fn su21_phi1_is_fundamental() {
        let (rs, conj) = setup("A2", "su21");
        let spec = spec_of(&rs, &conj, &[1]);
        let (_, psi, _) = fundamental_reduction(&rs, &spec);
        assert!(psi.is_empty());
        assert!(is_fundamental(&rs, &spec));
    }

    #[test]
    fn kf_weak_reduction_has_flag_type_2_4() {
        let (rs, spec) = kf_spec();
        let (_, _, red) = weak_reduction(&rs, &spec);
        assert_eq!(flag_type(&rs, &red), vec![2, 4]);
    }

    #[test]
    fn kf_tower_reaches_core_1_2_4_6_at_iteration_2() {
        let (rs, spec) = kf_spec();
        let (core, trace) = real_core(&rs, &spec);
        assert_eq!(flag_type(&rs, &core), vec![1, 2, 4, 6]);
        assert_eq!(trace.core_iteration, 2);
        // middle stage M⁽¹⁾ has flag type {1,3,5,6}
        let wr_stages: Vec<&Stage> = trace
            .stages
            .iter()
            .filter(|s| matches!(s.tag, StageTag::WeakReduction | StageTag::Core))
            .collect();
        assert_eq!(wr_stages.len(), 3);
        assert_eq!(flag_type(&rs, &wr_stages[0].spec), vec![2, 4]);
        assert_eq!(flag_type(&rs, &wr_stages[1].spec), vec![1, 3, 5, 6]);
        // the core is σ*-stable and idempotent
        assert_eq!(core.sigma_q(), *core.q());
        let (core2, trace2) = real_core(&rs, &core);
        assert_eq!(core2.parabolic, core.parabolic);
        assert_eq!(trace2.stages.len(), 1);
        assert_eq!(trace2.core_iteration, 0);
    }

    #[test]
    fn kg_core_is_1_4_at_iteration_1() {
        let (rs, spec) = kg_spec();
        let (core, trace) = real_core(&rs, &spec);
        assert_eq!(flag_type(&rs, &core), vec![1, 4]);
        assert_eq!(trace.core_iteration, 1);
    }

    #[test]
    fn totally_real_core_is_input_with_trace_length_1() {
        let (rs, conj) = setup("A3", "sl4R");
        let spec = spec_of(&rs, &conj, &[1, 3]);
        let (core, trace) = real_core(&rs, &spec);
        assert_eq!(core.parabolic, spec.parabolic);
        assert_eq!(trace.stages.len(), 1);
        assert_eq!(trace.core_iteration, 0);
    }

    #[test]
    fn core_invariants_exhaustive_at_rank_2() {
        for (dynkin, forms) in [
            ("A2", vec!["sl3R", "su21", "compact_a2"]),
            ("B2", vec!["so41", "compact_b2"]),
        ] {
            for (rs, spec) in sweep(dynkin, &forms) {
                let (core, trace) = real_core(&rs, &spec);
                assert_eq!(core.sigma_q(), *core.q());
                let (core2, _) = real_core(&rs, &core);
                assert_eq!(core2.parabolic, core.parabolic);
                // trace tags alternate: no two consecutive equal tags after
                // the initial stage
                for pair in trace.stages.windows(2) {
                    assert_ne!(pair[0].tag, pair[1].tag);
                }
                // stage inclusions: weakening stages shrink, reductions grow;
                // the core stage arose from one of the two maps
                for pair in trace.stages.windows(2) {
                    match pair[1].tag {
                        StageTag::Weakening => {
                            assert!(pair[1].spec.q().is_subset(pair[0].spec.q()))
                        }
                        StageTag::WeakReduction => {
                            assert!(pair[0].spec.q().is_subset(pair[1].spec.q()))
                        }
                        StageTag::Core => {
                            assert!(
                                pair[0].spec.q().is_subset(pair[1].spec.q())
                                    || pair[1].spec.q().is_subset(pair[0].spec.q())
                            )
                        }
                        StageTag::Initial => unreachable!(),
                    }
                }
            }
        }
    }

    #[test]
    fn fibration_predicates_identity_pair() {
        let (rs, conj) = setup("A2", "su21");
        let spec = spec_of(&rs, &conj, &[1]);
        let p = fibration_predicates(&spec, &spec).unwrap();
        assert!(p.is_cr_map && p.is_cr_submersion && p.has_complex_fibers);
    }

    #[test]
    fn fibration_predicates_weakening_pair() {
        // the weakening inclusion is a CR map; the submersion and
        // complex-fiber predicates are decided by the root formulas
        let (rs, conj) = setup("A2", "su21");
        let spec = spec_of(&rs, &conj, &[1]);
        let w = cr_weakening(&rs, &spec);
        let p = fibration_predicates(&w, &spec).unwrap();
        assert!(p.is_cr_map);
        // here Q ∖ Q_w = {−α2} with −α2 ∉ Q_w ∪ (Q ∩ σ*Q): not a submersion
        assert!(!p.is_cr_submersion);
        assert!(!p.has_complex_fibers);
    }

    #[test]
    fn kf_weak_reduction_pair_has_complex_fibers() {
        let (rs, spec) = kf_spec();
        let (_, _, red) = weak_reduction(&rs, &spec);
        let p = fibration_predicates(&spec, &red).unwrap();
        assert!(p.is_cr_map);
        assert!(p.is_cr_submersion);
        assert!(p.has_complex_fibers);
        // the next stage: the weakening of the reduction maps onto its own
        // weak reduction with complex fibers
        let w0 = cr_weakening(&rs, &red);
        let (_, _, m1) = weak_reduction(&rs, &w0);
        assert_eq!(flag_type(&rs, &m1), vec![1, 3, 5, 6]);
        let p1 = fibration_predicates(&w0, &m1).unwrap();
        assert!(p1.is_cr_map && p1.is_cr_submersion && p1.has_complex_fibers);
    }

    #[test]
    fn nested_pair_is_required() {
        let (rs, conj) = setup("A2", "su21");
        let a = spec_of(&rs, &conj, &[1]);
        let b = spec_of(&rs, &conj, &[2]);
        assert!(matches!(
            fibration_predicates(&a, &b),
            Err(Error::NotNested)
        ));
    }

    #[test]
    fn fiber_report_identity_pair_is_point() {
        let (rs, conj) = setup("A2", "su21");
        let spec = spec_of(&rs, &conj, &[1]);
        let r = fiber_structure_report(&rs, &spec, &spec).unwrap();
        assert_eq!(r.nil_complex_dim, 0);
        assert_eq!(r.cr_dim, 0);
        assert_eq!(r.cr_codim, 0);
        // the induced parabolic is the whole Levi subsystem: a point orbit
        assert_eq!(r.induced_parabolic.len(), r.levi_roots.len());
    }

    #[test]
    fn fiber_report_su21_borel_over_phi1() {
        let (rs, conj) = setup("A2", "su21");
        let base = spec_of(&rs, &conj, &[1]);
        let total = spec_of(&rs, &conj, &[1, 2]);
        let r = fiber_structure_report(&rs, &total, &base).unwrap();
        // Qʳ ∩ σ*Qʳ = ∅
        assert!(r.levi_roots.is_empty());
        assert_eq!(r.levi_component_types, "");
        // the nilpotent isotropy roots of the base all lie in the Borel, so
        // the Euclidean factor is a point (the two isotropies have equal
        // dimension: the fibers are finite)
        assert_eq!(r.nil_complex_dim, 0);
        let di_base = base.isotropy_dims(&rs);
        let di_total = total.isotropy_dims(&rs);
        assert_eq!(di_base.dim_n + di_base.dim_l, di_total.dim_n + di_total.dim_l);
    }

    #[test]
    fn fiber_cr_dim_bookkeeping_for_cr_submersions() {
        // for CR submersions: cr_dim(total) = cr_dim(base) + cr_dim(fiber)
        for (dynkin, forms) in [
            ("A3", vec!["sl4R", "su22", "su31", "sl2H"]),
            ("A2", vec!["su21"]),
        ] {
            for (rs, base) in sweep(dynkin, &forms) {
                // totals: weak reduction pairs (total = spec, base = red)
                let (_, _, red) = weak_reduction(&rs, &base);
                if red.parabolic == base.parabolic {
                    continue;
                }
                let p = fibration_predicates(&base, &red).unwrap();
                assert!(p.is_cr_submersion);
                let r = fiber_structure_report(&rs, &base, &red).unwrap();
                assert_eq!(
                    base.cr_dim(),
                    red.cr_dim() + r.total_cr_dim(),
                    "{dynkin} {:?}",
                    flag_type(&rs, &base)
                );
            }
        }
    }

    #[test]
    fn classify_subsystem_examples() {
        let (rs, conj) = setup("A6", "sl7R");
        let spec = spec_of(&rs, &conj, &[2, 4]);
        let levi = spec.levi_isotropy_roots(&rs);
        let types = classify_subsystem(&rs, &levi);
        assert_eq!(component_types_string(&types), "A1xA1xA2");
        let (rsb, cb) = setup("B3", "so34");
        let sb = spec_of(&rsb, &cb, &[1]);
        let types_b = classify_subsystem(&rsb, &sb.levi_isotropy_roots(&rsb));
        assert_eq!(component_types_string(&types_b), "B2");
    }

    #[test]
    fn split_specs_are_always_maximal() {
        for (rs, spec) in sweep("A3", &["sl4R"]) {
            let (is_max, list) = maximal_cr_structures(&rs, &spec);
            assert!(is_max);
            // the only maximal Ψ with the same intersection is Φ itself
            let c = find_s_fit(&rs, &spec);
            let phi = spec.parabolic.phi(&rs, &c).unwrap();
            assert_eq!(list, vec![phi]);
        }
    }

    #[test]
    fn su21_borel_is_not_maximal() {
        let (rs, conj) = setup("A2", "su21");
        let borel = spec_of(&rs, &conj, &[1, 2]);
        let (is_max, list) = maximal_cr_structures(&rs, &borel);
        assert!(!is_max);
        // both singletons strengthen the Borel with the same Q ∩ σ*Q
        assert_eq!(
            list,
            vec![BTreeSet::from([1]), BTreeSet::from([2])]
        );
    }

    #[test]
    fn maximality_matches_brute_force_at_small_rank() {
        for (dynkin, forms) in [
            ("A2", vec!["sl3R", "su21", "compact_a2"]),
            ("A3", vec!["su22", "su31", "sl2H"]),
            ("B2", vec!["so41"]),
        ] {
            for (rs, spec) in sweep(dynkin, &forms) {
                let (is_max, list) = maximal_cr_structures(&rs, &spec);
                let c = find_s_fit(&rs, &spec);
                let phi = spec.parabolic.phi(&rs, &c).unwrap();
                // maximal ⇔ the only maximal candidate is Φ itself
                assert_eq!(is_max, list == vec![phi.clone()], "{phi:?}");
                // the Ψ list matches the set-level brute force over all
                // parabolic supersets
                let brute =
                    crate::oracle::brute_maximal_strengthenings(&rs, &spec, 100).unwrap();
                let from_psi: std::collections::BTreeSet<crate::bitset::RootSet> = list
                    .iter()
                    .map(|psi| {
                        ParabolicSet::from_phi(&rs, &c, psi).unwrap().members().clone()
                    })
                    .collect();
                let from_brute: std::collections::BTreeSet<crate::bitset::RootSet> =
                    brute.iter().map(|p| p.members().clone()).collect();
                assert_eq!(from_psi, from_brute, "{dynkin} {phi:?}");
            }
        }
    }

    #[test]
    fn strict_nondegeneracy_examples() {
        let (rs, conj) = setup("A2", "su21");
        // the hypersurface orbit is Levi-nondegenerate
        let spec = spec_of(&rs, &conj, &[1]);
        assert!(is_strictly_nondegenerate(&rs, &spec));
        // a totally real spec is vacuously nondegenerate (Q ∖ σ*Q = ∅)
        let (rs2, split) = setup("A2", "sl3R");
        let s2 = spec_of(&rs2, &split, &[1]);
        assert!(is_strictly_nondegenerate(&rs2, &s2));
    }
}
