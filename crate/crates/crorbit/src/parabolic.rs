//! Parabolic sets, their Φ-representations, fit chambers, and the exact
//! dimension counts of an orbit's CR structure and isotropy decomposition.

use std::collections::BTreeSet;

use crate::bitset::RootSet;
use crate::error::Error;
use crate::lattice::{Chamber, Node, RootSystem};
use crate::linalg::int_rank;
use crate::realform::Conjugation;
use crate::Result;

/// A parabolic set of roots: closed under root addition, with `Q ∪ −Q = R`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParabolicSet {
    members: RootSet,
}

impl ParabolicSet {
    pub fn new(rs: &RootSystem, members: RootSet) -> Result<ParabolicSet> {
        let q = ParabolicSet { members };
        q.validate(rs)?;
        Ok(q)
    }

    fn validate(&self, rs: &RootSystem) -> Result<()> {
        let neg = self.negated(rs);
        if self.members.union(&neg).len() != rs.num_roots() {
            return Err(Error::Schema(
                "parabolic set does not cover R together with its negative".into(),
            ));
        }
        for a in self.members.iter() {
            for b in self.members.iter() {
                let sum: Vec<i64> = rs
                    .root(a)
                    .iter()
                    .zip(rs.root(b))
                    .map(|(&x, &y)| x + y)
                    .collect();
                if let Ok(c) = rs.root_index(&sum) {
                    if !self.members.contains(c) {
                        return Err(Error::Schema(format!(
                            "parabolic set is not closed: {:?} + {:?}",
                            rs.root(a),
                            rs.root(b)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn members(&self) -> &RootSet {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, root: usize) -> bool {
        self.members.contains(root)
    }

    fn negated(&self, rs: &RootSystem) -> RootSet {
        let table: Vec<usize> = (0..rs.num_roots()).map(|i| rs.neg(i)).collect();
        self.members.map(&table)
    }

    /// Nilpotent part `Qⁿ = {α ∈ Q : −α ∉ Q}`.
    pub fn nil(&self, rs: &RootSystem) -> RootSet {
        self.members.difference(&self.negated(rs))
    }

    /// Reductive part `Qʳ = {α ∈ Q : −α ∈ Q}`.
    pub fn reductive(&self, rs: &RootSystem) -> RootSet {
        self.members.intersection(&self.negated(rs))
    }

    /// Image under the conjugation (an isometric root permutation, so the
    /// result is parabolic by construction).
    pub fn sigma_image(&self, conj: &Conjugation) -> ParabolicSet {
        ParabolicSet {
            members: conj.map_set(&self.members),
        }
    }

    /// `Q = {α ≻ 0} ∪ {α ≺ 0 : supp(α) ∩ Φ = ∅}` for a set Φ of 1-based
    /// node labels of the chamber.
    pub fn from_phi(rs: &RootSystem, chamber: &Chamber, phi: &BTreeSet<Node>) -> Result<ParabolicSet> {
        for &node in phi {
            if node == 0 || node > rs.rank() {
                return Err(Error::Schema(format!(
                    "node {node} out of range 1..={}",
                    rs.rank()
                )));
            }
        }
        let mut members = chamber.positives().clone();
        for i in 0..rs.num_roots() {
            if chamber.is_positive(i) {
                continue;
            }
            if chamber.support(rs, i).is_disjoint(phi) {
                members.insert(i);
            }
        }
        ParabolicSet::new(rs, members)
    }

    /// `Φ = Qⁿ ∩ B(chamber)`, the inverse of [`ParabolicSet::from_phi`] on
    /// fit chambers.
    pub fn phi(&self, rs: &RootSystem, chamber: &Chamber) -> Result<BTreeSet<Node>> {
        if !chamber.positives().is_subset(&self.members) {
            return Err(Error::ChamberNotFit);
        }
        let nil = self.nil(rs);
        Ok(chamber
            .basis()
            .iter()
            .enumerate()
            .filter(|&(_, &b)| nil.contains(b))
            .map(|(k, _)| k + 1)
            .collect())
    }
}

/// The pair (conjugation, parabolic set): one orbit of the real form in the
/// flag manifold of the parabolic.
#[derive(Debug, Clone)]
pub struct CrAlgebraSpec {
    pub conj: Conjugation,
    pub parabolic: ParabolicSet,
}

/// Complex dimensions of the isotropy decomposition `i = n ⊕ s ⊕ z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct IsotropyDims {
    pub dim_n: usize,
    pub dim_l: usize,
    pub dim_s: usize,
    pub dim_z: usize,
}

impl CrAlgebraSpec {
    pub fn new(conj: Conjugation, parabolic: ParabolicSet) -> CrAlgebraSpec {
        CrAlgebraSpec { conj, parabolic }
    }

    pub fn q(&self) -> &RootSet {
        self.parabolic.members()
    }

    pub fn sigma_q(&self) -> RootSet {
        self.conj.map_set(self.parabolic.members())
    }

    /// `CR-dim = |Q| − |Q ∩ σ*Q|`.
    pub fn cr_dim(&self) -> usize {
        let q = self.q();
        q.len() - q.intersection(&self.sigma_q()).len()
    }

    /// `CR-codim = |R| − |Q ∪ σ*Q|`.
    pub fn cr_codim(&self) -> usize {
        let q = self.q();
        q.universe() - q.union(&self.sigma_q()).len()
    }

    pub fn is_totally_real(&self) -> bool {
        self.cr_dim() == 0
    }

    pub fn is_totally_complex(&self) -> bool {
        self.cr_codim() == 0
    }

    /// Roots of the nilpotent isotropy ideal: `(Qⁿ ∩ σ*Q) ∪ (Q ∩ σ*Qⁿ)`.
    pub fn nil_isotropy_roots(&self, rs: &RootSystem) -> RootSet {
        let q = self.q();
        let qn = self.parabolic.nil(rs);
        let sq = self.sigma_q();
        let sqn = self.conj.map_set(&qn);
        qn.intersection(&sq).union(&q.intersection(&sqn))
    }

    /// Roots of the reductive isotropy factor: `Qʳ ∩ σ*Qʳ`.
    pub fn levi_isotropy_roots(&self, rs: &RootSystem) -> RootSet {
        let qr = self.parabolic.reductive(rs);
        qr.intersection(&self.conj.map_set(&qr))
    }

    pub fn isotropy_dims(&self, rs: &RootSystem) -> IsotropyDims {
        let levi = self.levi_isotropy_roots(rs);
        let span: Vec<Vec<i64>> = levi.iter().map(|i| rs.root(i).to_vec()).collect();
        let span_rank = int_rank(&span);
        IsotropyDims {
            dim_n: self.nil_isotropy_roots(rs).len(),
            dim_l: rs.rank() + levi.len(),
            dim_s: levi.len() + span_rank,
            dim_z: rs.rank() - span_rank,
        }
    }
}

/// Some fit chamber for a parabolic set (one always exists).  Deterministic:
/// the covector is `N·(δ_Q|·) + u₀` with `δ_Q` the sum of the nilpotent
/// roots, `u₀` the standard generic covector, and `N` large enough that the
/// sign on `Qⁿ` is decided by `δ_Q`.
pub fn find_fit_chamber(rs: &RootSystem, q: &ParabolicSet) -> Chamber {
    let mut delta = vec![0i64; rs.rank()];
    for i in q.nil(rs).iter() {
        for (k, &c) in rs.root(i).iter().enumerate() {
            delta[k] += c;
        }
    }
    let u_delta = rs.covector_of(&delta);
    let u0 = rs.generic_covector();
    let n = 1 + rs
        .roots()
        .iter()
        .map(|r| rs.pair_covector(&u0, r).abs())
        .max()
        .unwrap_or(0);
    let u: Vec<i64> = u_delta
        .iter()
        .zip(&u0)
        .map(|(&a, &b)| n * a + b)
        .collect();
    let chamber = Chamber::from_covector(rs, u).expect("fit seed covector is regular");
    assert!(
        chamber.positives().is_subset(q.members()),
        "fit chamber seed failed; parabolic set invalid?"
    );
    chamber
}

/// Does the chamber satisfy `σ*α ≻ 0` for every simple α outside Φ that is
/// not imaginary?
pub fn is_s_fit(rs: &RootSystem, spec: &CrAlgebraSpec, chamber: &Chamber) -> bool {
    let nil = spec.parabolic.nil(rs);
    chamber.basis().iter().all(|&b| {
        nil.contains(b) || spec.conj.is_imaginary(rs, b) || chamber.is_positive(spec.conj.apply(b))
    })
}

/// Does the chamber satisfy `σ*α ≺ 0` for every simple α outside Φ that is
/// not real?
pub fn is_v_fit(rs: &RootSystem, spec: &CrAlgebraSpec, chamber: &Chamber) -> bool {
    let nil = spec.parabolic.nil(rs);
    chamber.basis().iter().all(|&b| {
        nil.contains(b) || spec.conj.is_real(b) || !chamber.is_positive(spec.conj.apply(b))
    })
}

/// Root-level form of the S-fit condition: every complex positive root with
/// a negative conjugate lies in `Qⁿ` together with `−σ*α`.
pub fn is_s_fit_root_form(rs: &RootSystem, spec: &CrAlgebraSpec, chamber: &Chamber) -> bool {
    let nil = spec.parabolic.nil(rs);
    chamber.positives().iter().all(|i| {
        if spec.conj.is_real(i) || spec.conj.is_imaginary(rs, i) {
            return true;
        }
        let bar = spec.conj.apply(i);
        chamber.is_positive(bar) || (nil.contains(i) && nil.contains(rs.neg(bar)))
    })
}

/// Root-level form of the V-fit condition: every complex positive root with
/// a positive conjugate lies in `Qⁿ` together with `σ*α`.
pub fn is_v_fit_root_form(rs: &RootSystem, spec: &CrAlgebraSpec, chamber: &Chamber) -> bool {
    let nil = spec.parabolic.nil(rs);
    chamber.positives().iter().all(|i| {
        if spec.conj.is_real(i) || spec.conj.is_imaginary(rs, i) {
            return true;
        }
        let bar = spec.conj.apply(i);
        !chamber.is_positive(bar) || (nil.contains(i) && nil.contains(bar))
    })
}

fn fit_walk(rs: &RootSystem, spec: &CrAlgebraSpec, want_positive_bar: bool) -> Chamber {
    let mut chamber = find_fit_chamber(rs, &spec.parabolic);
    let bound = 4 * rs.num_roots() + 4;
    for _ in 0..bound {
        let nil = spec.parabolic.nil(rs);
        // violating simple roots: complex, outside Φ, conjugate on the wrong side
        let violating = chamber
            .basis()
            .iter()
            .copied()
            .filter(|&b| {
                if nil.contains(b) || spec.conj.is_real(b) || spec.conj.is_imaginary(rs, b) {
                    return false;
                }
                let bar_positive = chamber.is_positive(spec.conj.apply(b));
                bar_positive != want_positive_bar
            })
            .min_by_key(|&b| rs.root(b).to_vec());
        let Some(b) = violating else {
            return chamber;
        };
        chamber = chamber.reflect_at(rs, b);
        debug_assert!(chamber.positives().is_subset(spec.parabolic.members()));
    }
    unreachable!("fit walk did not terminate");
}

/// An S-fit chamber, found by the local reflection walk from a fit chamber.
pub fn find_s_fit(rs: &RootSystem, spec: &CrAlgebraSpec) -> Chamber {
    let c = fit_walk(rs, spec, true);
    debug_assert!(is_s_fit(rs, spec, &c));
    c
}

/// A V-fit chamber, found by the local reflection walk from a fit chamber.
pub fn find_v_fit(rs: &RootSystem, spec: &CrAlgebraSpec) -> Chamber {
    let c = fit_walk(rs, spec, false);
    debug_assert!(is_v_fit(rs, spec, &c));
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{enumerate_chambers, DynkinSpec};
    use crate::realform::{catalog, Conjugation};

    fn setup(dynkin: &str, form: &str) -> (RootSystem, Conjugation) {
        let rs = RootSystem::build(DynkinSpec::parse(dynkin).unwrap()).unwrap();
        let conj = Conjugation::from_entry(&rs, &catalog::find(form).unwrap()).unwrap();
        (rs, conj)
    }

    fn phi(nodes: &[usize]) -> BTreeSet<usize> {
        nodes.iter().copied().collect()
    }

    fn spec_of(rs: &RootSystem, conj: &Conjugation, nodes: &[usize]) -> CrAlgebraSpec {
        let c = Chamber::standard(rs);
        let q = ParabolicSet::from_phi(rs, &c, &phi(nodes)).unwrap();
        CrAlgebraSpec::new(conj.clone(), q)
    }

    #[test]
    fn phi_examples_on_a2() {
        let (rs, _) = setup("A2", "sl3R");
        let c = Chamber::standard(&rs);
        // Φ = ∅ → Q = R
        let q0 = ParabolicSet::from_phi(&rs, &c, &phi(&[])).unwrap();
        assert_eq!(q0.len(), 6);
        // Φ = {1} → Qⁿ = {α1, α1+α2}, Qʳ = {±α2}
        let q1 = ParabolicSet::from_phi(&rs, &c, &phi(&[1])).unwrap();
        let nil: Vec<Vec<i64>> = q1.nil(&rs).iter().map(|i| rs.root(i).to_vec()).collect();
        assert_eq!(nil, vec![vec![1, 0], vec![1, 1]]);
        assert_eq!(q1.reductive(&rs).len(), 2);
        // Φ = {1,2} → Borel
        let q2 = ParabolicSet::from_phi(&rs, &c, &phi(&[1, 2])).unwrap();
        assert_eq!(q2.members(), c.positives());
    }

    #[test]
    fn phi_round_trips_everywhere_at_small_rank() {
        for s in ["A2", "A3", "B2"] {
            let rs = RootSystem::build(DynkinSpec::parse(s).unwrap()).unwrap();
            for chamber in enumerate_chambers(&rs, 100).unwrap() {
                for mask in 0..(1u32 << rs.rank()) {
                    let nodes: BTreeSet<usize> =
                        (0..rs.rank()).filter(|k| mask >> k & 1 == 1).map(|k| k + 1).collect();
                    let q = ParabolicSet::from_phi(&rs, &chamber, &nodes).unwrap();
                    assert_eq!(q.phi(&rs, &chamber).unwrap(), nodes);
                    let q2 = ParabolicSet::from_phi(&rs, &chamber, &q.phi(&rs, &chamber).unwrap())
                        .unwrap();
                    assert_eq!(q, q2);
                }
            }
        }
    }

    #[test]
    fn phi_from_other_fit_chambers_round_trips() {
        // A different fit chamber reads off a different Φ′, but rebuilding
        // from it yields the same parabolic set.
        let (rs, _) = setup("A3", "sl4R");
        let std = Chamber::standard(&rs);
        let q = ParabolicSet::from_phi(&rs, &std, &phi(&[2])).unwrap();
        let mut found_alternate = false;
        for chamber in enumerate_chambers(&rs, 100).unwrap() {
            if !chamber.positives().is_subset(q.members()) {
                assert!(q.phi(&rs, &chamber).is_err());
                continue;
            }
            let p = q.phi(&rs, &chamber).unwrap();
            let rebuilt = ParabolicSet::from_phi(&rs, &chamber, &p).unwrap();
            assert_eq!(rebuilt, q);
            if chamber.positives() != std.positives() {
                found_alternate = true;
            }
        }
        assert!(found_alternate);
    }

    #[test]
    fn a6_phi_2_4_round_trips_through_another_fit_chamber() {
        // reflecting at a Levi root keeps the chamber fit; the Φ' it reads
        // off rebuilds the same parabolic set
        let (rs, _) = setup("A6", "sl7R");
        let std = Chamber::standard(&rs);
        let q = ParabolicSet::from_phi(&rs, &std, &phi(&[2, 4])).unwrap();
        let a1 = rs.root_index(&[1, 0, 0, 0, 0, 0]).unwrap();
        let other = std.reflect_at(&rs, a1);
        assert_ne!(other.positives(), std.positives());
        let p2 = q.phi(&rs, &other).unwrap();
        assert_eq!(ParabolicSet::from_phi(&rs, &other, &p2).unwrap(), q);
    }

    #[test]
    fn fit_chamber_for_full_set_is_standard() {
        let (rs, _) = setup("A2", "sl3R");
        let q = ParabolicSet::new(&rs, crate::bitset::RootSet::full(6)).unwrap();
        let c = find_fit_chamber(&rs, &q);
        assert_eq!(c.positives(), Chamber::standard(&rs).positives());
        // Borel: the standard chamber is the fit chamber
        let b = ParabolicSet::from_phi(&rs, &Chamber::standard(&rs), &phi(&[1, 2])).unwrap();
        let cb = find_fit_chamber(&rs, &b);
        assert_eq!(cb.positives(), Chamber::standard(&rs).positives());
    }

    #[test]
    fn fit_chamber_found_for_reflected_parabolic() {
        // Act on Q by s_{α1}; a (non-standard) fit chamber must be found.
        let (rs, _) = setup("A2", "sl3R");
        let q = ParabolicSet::from_phi(&rs, &Chamber::standard(&rs), &phi(&[1])).unwrap();
        let a1 = rs.root_index(&[1, 0]).unwrap();
        let table: Vec<usize> = (0..rs.num_roots()).map(|i| rs.reflect(i, a1)).collect();
        let moved = ParabolicSet::new(&rs, q.members().map(&table)).unwrap();
        let c = find_fit_chamber(&rs, &moved);
        assert!(c.positives().is_subset(moved.members()));
        assert_ne!(c.positives(), Chamber::standard(&rs).positives());
    }

    #[test]
    fn fit_chambers_exist_for_all_parabolics_at_rank_3() {
        let rs = RootSystem::build(DynkinSpec::parse("A3").unwrap()).unwrap();
        for chamber in enumerate_chambers(&rs, 100).unwrap() {
            for mask in 0..(1u32 << 3) {
                let nodes: BTreeSet<usize> =
                    (0..3).filter(|k| mask >> k & 1 == 1).map(|k| k + 1).collect();
                let q = ParabolicSet::from_phi(&rs, &chamber, &nodes).unwrap();
                let fit = find_fit_chamber(&rs, &q);
                assert!(fit.positives().is_subset(q.members()));
            }
        }
    }

    #[test]
    fn split_forms_make_every_fit_chamber_s_and_v_fit() {
        let (rs, conj) = setup("A3", "sl4R");
        for chamber in enumerate_chambers(&rs, 100).unwrap() {
            for mask in 0..(1u32 << 3) {
                let nodes: BTreeSet<usize> =
                    (0..3).filter(|k| mask >> k & 1 == 1).map(|k| k + 1).collect();
                let q = ParabolicSet::from_phi(&rs, &chamber, &nodes).unwrap();
                let spec = CrAlgebraSpec::new(conj.clone(), q);
                assert!(is_s_fit(&rs, &spec, &chamber));
                assert!(is_v_fit(&rs, &spec, &chamber));
            }
        }
    }

    #[test]
    fn su21_standard_chamber_is_s_fit_for_phi1() {
        let (rs, conj) = setup("A2", "su21");
        let spec = spec_of(&rs, &conj, &[1]);
        let std = Chamber::standard(&rs);
        assert!(is_s_fit(&rs, &spec, &std));
        let found = find_s_fit(&rs, &spec);
        assert!(is_s_fit(&rs, &spec, &found));
        assert!(is_s_fit_root_form(&rs, &spec, &found));
    }

    #[test]
    fn s_and_v_fit_conditions_are_equivalent_on_all_fit_chambers() {
        // eq-level and root-level forms agree on every fit chamber, for
        // every Φ and every catalog conjugation on A2 and B2.
        for (dynkin, forms) in [
            ("A2", vec!["sl3R", "su21", "compact_a2"]),
            ("B2", vec!["so23", "so41", "compact_b2"]),
        ] {
            let rs = RootSystem::build(DynkinSpec::parse(dynkin).unwrap()).unwrap();
            for form in forms {
                let conj =
                    Conjugation::from_entry(&rs, &catalog::find(form).unwrap()).unwrap();
                for chamber in enumerate_chambers(&rs, 100).unwrap() {
                    for mask in 0..(1u32 << rs.rank()) {
                        let nodes: BTreeSet<usize> = (0..rs.rank())
                            .filter(|k| mask >> k & 1 == 1)
                            .map(|k| k + 1)
                            .collect();
                        let q = ParabolicSet::from_phi(&rs, &chamber, &nodes).unwrap();
                        let spec = CrAlgebraSpec::new(conj.clone(), q);
                        assert_eq!(
                            is_s_fit(&rs, &spec, &chamber),
                            is_s_fit_root_form(&rs, &spec, &chamber),
                            "{form} S {nodes:?}"
                        );
                        assert_eq!(
                            is_v_fit(&rs, &spec, &chamber),
                            is_v_fit_root_form(&rs, &spec, &chamber),
                            "{form} V {nodes:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn fit_walk_outputs_satisfy_postconditions() {
        for (dynkin, forms) in [
            ("A2", vec!["sl3R", "su21", "compact_a2"]),
            ("A3", vec!["su22", "su31", "sl2H"]),
            ("B2", vec!["so41"]),
        ] {
            let rs = RootSystem::build(DynkinSpec::parse(dynkin).unwrap()).unwrap();
            for form in forms {
                let conj =
                    Conjugation::from_entry(&rs, &catalog::find(form).unwrap()).unwrap();
                for mask in 0..(1u32 << rs.rank()) {
                    let nodes: BTreeSet<usize> = (0..rs.rank())
                        .filter(|k| mask >> k & 1 == 1)
                        .map(|k| k + 1)
                        .collect();
                    let q =
                        ParabolicSet::from_phi(&rs, &Chamber::standard(&rs), &nodes).unwrap();
                    let spec = CrAlgebraSpec::new(conj.clone(), q);
                    let s = find_s_fit(&rs, &spec);
                    assert!(is_s_fit(&rs, &spec, &s), "{form} {nodes:?}");
                    assert!(s.positives().is_subset(spec.parabolic.members()));
                    let v = find_v_fit(&rs, &spec);
                    assert!(is_v_fit(&rs, &spec, &v), "{form} {nodes:?}");
                    assert!(v.positives().is_subset(spec.parabolic.members()));
                }
            }
        }
    }

    #[test]
    fn cr_dims_on_su21() {
        let (rs, conj) = setup("A2", "su21");
        let spec = spec_of(&rs, &conj, &[1]);
        assert_eq!(spec.cr_dim(), 1);
        assert_eq!(spec.cr_codim(), 1);
        assert!(!spec.is_totally_real());
        assert!(!spec.is_totally_complex());
    }

    #[test]
    fn split_forms_are_totally_real_and_compact_totally_complex() {
        let (rs, split) = setup("A2", "sl3R");
        let (_, compact) = setup("A2", "compact_a2");
        for mask in 0..4u32 {
            let nodes: Vec<usize> = (0..2).filter(|k| mask >> k & 1 == 1).map(|k| k + 1).collect();
            let s = spec_of(&rs, &split, &nodes);
            assert_eq!(s.cr_dim(), 0);
            assert!(s.is_totally_real());
            let c = spec_of(&rs, &compact, &nodes);
            assert_eq!(c.cr_codim(), 0);
            assert!(c.is_totally_complex());
        }
    }

    #[test]
    fn isotropy_dims_examples() {
        // Q = R: n = 0, l = g
        let (rs, conj) = setup("A2", "su21");
        let spec = spec_of(&rs, &conj, &[]);
        let d = spec.isotropy_dims(&rs);
        assert_eq!(d.dim_n, 0);
        assert_eq!(d.dim_l, 8);
        assert_eq!(d.dim_s, 6 + 2);
        assert_eq!(d.dim_z, 0);

        // su21, Φ = {1}
        let spec1 = spec_of(&rs, &conj, &[1]);
        let d1 = spec1.isotropy_dims(&rs);
        assert_eq!(
            d1,
            IsotropyDims {
                dim_n: 3,
                dim_l: 2,
                dim_s: 0,
                dim_z: 2
            }
        );
        // cross-check: dim i0 = dim n + dim l = |Q ∩ σ*Q| + rank
        let q = spec1.q();
        assert_eq!(
            d1.dim_n + d1.dim_l,
            q.intersection(&spec1.sigma_q()).len() + rs.rank()
        );

        // split Borel: n = positives, z = rank, s = 0
        let (rs3, split) = setup("A3", "sl4R");
        let b = spec_of(&rs3, &split, &[1, 2, 3]);
        let db = b.isotropy_dims(&rs3);
        assert_eq!(db.dim_n, 6);
        assert_eq!(db.dim_z, 3);
        assert_eq!(db.dim_s, 0);
    }

    #[test]
    fn isotropy_identity_holds_exhaustively_at_rank_2() {
        for form in ["sl3R", "su21", "compact_a2"] {
            let (rs, conj) = setup("A2", form);
            for mask in 0..4u32 {
                let nodes: Vec<usize> =
                    (0..2).filter(|k| mask >> k & 1 == 1).map(|k| k + 1).collect();
                let spec = spec_of(&rs, &conj, &nodes);
                let d = spec.isotropy_dims(&rs);
                assert_eq!(
                    d.dim_n + d.dim_l,
                    spec.q().intersection(&spec.sigma_q()).len() + rs.rank()
                );
                assert_eq!(d.dim_l, d.dim_s + d.dim_z);
                assert_eq!(
                    spec.cr_dim() + spec.q().intersection(&spec.sigma_q()).len(),
                    spec.q().len()
                );
                assert_eq!(
                    spec.cr_codim() + spec.q().union(&spec.sigma_q()).len(),
                    rs.num_roots()
                );
            }
        }
    }

    #[test]
    fn dims_are_equivariant_under_commuting_reflections() {
        // s_γ commutes with σ* when σ*γ = ±γ; all dimension counts must be
        // invariant under transporting Q by such a reflection.
        let (rs, conj) = setup("A2", "su21");
        let gamma = rs.root_index(&[1, 1]).unwrap(); // real root
        assert!(conj.is_real(gamma));
        let table: Vec<usize> = (0..rs.num_roots()).map(|i| rs.reflect(i, gamma)).collect();
        for mask in 0..4u32 {
            let nodes: Vec<usize> = (0..2).filter(|k| mask >> k & 1 == 1).map(|k| k + 1).collect();
            let spec = spec_of(&rs, &conj, &nodes);
            let moved = CrAlgebraSpec::new(
                conj.clone(),
                ParabolicSet::new(&rs, spec.q().map(&table)).unwrap(),
            );
            assert_eq!(spec.cr_dim(), moved.cr_dim());
            assert_eq!(spec.cr_codim(), moved.cr_codim());
            assert_eq!(spec.isotropy_dims(&rs), moved.isotropy_dims(&rs));
        }
    }

    #[test]
    fn invalid_phi_node_is_rejected() {
        let (rs, _) = setup("A2", "sl3R");
        let c = Chamber::standard(&rs);
        assert!(ParabolicSet::from_phi(&rs, &c, &phi(&[3])).is_err());
        assert!(ParabolicSet::from_phi(&rs, &c, &phi(&[0])).is_err());
    }
}
