//! Topological invariants: fundamental-group presentations of real flag
//! manifolds, the orbit's π₁ subgroup via Cayley/Weyl-group conditions over
//! GF(2), fiber component counts, and Euler characteristics of complex flag
//! manifolds.

pub mod gf2;
pub mod snf;

use std::collections::BTreeSet;

use num_rational::Ratio;
use num_traits::Zero;

use crate::bitset::RootSet;
use crate::error::Error;
use crate::lattice::{Chamber, Node, RootSystem};
use crate::linalg::{int_rank, solve_rational, Rat};
use crate::parabolic::{find_s_fit, CrAlgebraSpec, ParabolicSet};
use crate::realform::{Compactness, Conjugation};
use crate::reduce::{classify_subsystem, real_core};
use crate::Result;

/// Presentation of the fundamental group of a real flag manifold: one
/// generator per multiplicity-one real simple root, killed outside `Φ`,
/// with sign-commutation relations driven by the Cartan pairings.
#[derive(Debug, Clone, serde::Serialize)]
pub struct GroupPresentation {
    /// Node labels of the generator set Γ.
    pub generators: Vec<Node>,
    pub generator_roots: Vec<Vec<i64>>,
    /// Generators killed by `ξ_α = 1` (nodes outside Φ).
    pub killed: Vec<Node>,
    /// Cartan pairing matrix `(α_i | α_j∨)` over Γ.
    pub pairing: Vec<Vec<i64>>,
    /// Surviving generators (Γ ∖ killed), with their roots.
    pub survivors: Vec<Node>,
    pub survivor_roots: Vec<Vec<i64>>,
    /// Abelianization invariant factors: each 2 (torsion) or 0 (free).
    pub invariant_factors: Vec<i64>,
}

impl GroupPresentation {
    pub fn is_trivial(&self) -> bool {
        self.survivors.is_empty()
    }

    /// Order of the abelianization, when finite.
    pub fn abelianization_order(&self) -> Option<u64> {
        let mut ord = 1u64;
        for &f in &self.invariant_factors {
            if f == 0 {
                return None;
            }
            ord *= f as u64;
        }
        Some(ord)
    }
}

/// The π₁ subgroup of an orbit inside the fundamental group of its real
/// core, cut out by GF(2) conditions indexed by the Cayley roots.
#[derive(Debug, Clone, serde::Serialize)]
pub struct SubgroupDescription {
    pub ambient: GroupPresentation,
    /// Condition rows over the surviving generators.
    pub condition_rows: Vec<Vec<u8>>,
    /// Exponent vectors generating the subgroup modulo squares.
    pub kernel_exponents: Vec<Vec<u8>>,
    /// The same generators as words, e.g. `x1`, `x2*x4*x6`.
    pub kernel_words: Vec<String>,
    /// Index in the ambient group: `2^rank(conditions)`.
    pub index: u64,
    /// Invariant factors of the subgroup (2s and 0s).
    pub subgroup_invariant_factors: Vec<i64>,
    /// Free rank of the subgroup.
    pub subgroup_free_rank: usize,
    /// Heuristic check that the Cartan subalgebra is maximally noncompact
    /// in the orbit isotropy: no imaginary roots in `Qʳ`.
    pub cartan_heuristic_ok: bool,
}

impl SubgroupDescription {
    pub fn subgroup_order(&self) -> Option<u64> {
        if self.subgroup_free_rank > 0 {
            return None;
        }
        Some(
            self.subgroup_invariant_factors
                .iter()
                .map(|&f| f as u64)
                .product(),
        )
    }
}

fn presentation_with_chamber(
    rs: &RootSystem,
    conj: &Conjugation,
    e: &ParabolicSet,
) -> Result<(GroupPresentation, Chamber)> {
    let base = conj.satake_base(rs);
    if base.map_set(e.members()) != *e.members() {
        return Err(Error::Inconsistent(
            "core parabolic set is not stable under the base conjugation".into(),
        ));
    }
    let spec = CrAlgebraSpec::new(base.clone(), e.clone());
    let chamber = find_s_fit(rs, &spec);
    // Satake property: conjugates of positive non-imaginary roots are positive
    for i in chamber.positives().iter() {
        if !base.is_imaginary(rs, i) && !chamber.is_positive(base.apply(i)) {
            return Err(Error::Inconsistent(
                "S-fit chamber for the core lacks the Satake property".into(),
            ));
        }
    }
    let phi = e.phi(rs, &chamber).expect("S-fit chamber is fit");

    let mut generators = Vec::new();
    let mut generator_roots = Vec::new();
    for (k, &b) in chamber.basis().iter().enumerate() {
        if base.is_real(b) && base.satake_multiplicity(rs, b)? == 1 {
            generators.push(k + 1);
            generator_roots.push(rs.root(b).to_vec());
        }
    }
    let killed: Vec<Node> = generators
        .iter()
        .copied()
        .filter(|n| !phi.contains(n))
        .collect();
    let pairing: Vec<Vec<i64>> = generator_roots
        .iter()
        .map(|a| {
            generator_roots
                .iter()
                .map(|b| rs.cartan_pairing(a, b))
                .collect()
        })
        .collect();
    let survivors: Vec<Node> = generators
        .iter()
        .copied()
        .filter(|n| !killed.contains(n))
        .collect();
    let survivor_roots: Vec<Vec<i64>> = survivors
        .iter()
        .map(|n| rs.root(chamber.basis()[n - 1]).to_vec())
        .collect();

    // abelianized relations: ξ_i² = 1 whenever (α_i|α_j∨) is odd for some
    // other j in Γ (killed generators still impose their squares)
    let torsion: Vec<bool> = survivors
        .iter()
        .map(|&n| {
            let i = generators.iter().position(|&g| g == n).expect("survivor in Γ");
            generators
                .iter()
                .enumerate()
                .any(|(j, _)| j != i && pairing[i][j] % 2 != 0)
        })
        .collect();
    let relation_cols: Vec<Vec<i128>> = torsion
        .iter()
        .enumerate()
        .filter(|(_, &t)| t)
        .map(|(i, _)| {
            let mut col = vec![0i128; survivors.len()];
            col[i] = 2;
            col
        })
        .collect();
    let (raw, free) = snf::cokernel_structure(survivors.len(), &relation_cols);
    let mut factors: Vec<i64> = raw.iter().map(|&f| f as i64).collect();
    factors.extend(std::iter::repeat_n(0, free));

    Ok((
        GroupPresentation {
            generators,
            generator_roots,
            killed,
            pairing,
            survivors,
            survivor_roots,
            invariant_factors: factors,
        },
        chamber,
    ))
}

/// Fundamental group presentation of a totally real parabolic CR algebra
/// (a real flag manifold), in the base-Cartan picture.
pub fn pi1_real_flag(rs: &RootSystem, spec: &CrAlgebraSpec) -> Result<GroupPresentation> {
    if !spec.is_totally_real() {
        return Err(Error::Unsupported(
            "fundamental-group presentation requires a totally real spec".into(),
        ));
    }
    presentation_with_chamber(rs, &spec.conj, &spec.parabolic).map(|(p, _)| p)
}

/// Exponent vector `((α_1|β∨), …, (α_m|β∨)) mod 2` of a generator root
/// against the Cayley roots.
pub fn cayley_weyl_exponents(rs: &RootSystem, cayley: &[Vec<i64>], beta: &[i64]) -> Result<Vec<u8>> {
    if !rs.is_root(beta) {
        return Err(Error::NotARoot(beta.to_vec()));
    }
    cayley
        .iter()
        .map(|alpha| {
            if !rs.is_root(alpha) {
                return Err(Error::NotARoot(alpha.clone()));
            }
            Ok((rs.cartan_pairing(alpha, beta).rem_euclid(2)) as u8)
        })
        .collect()
}

/// Per-ideal GF(2) membership data for the analytic Weyl group kernel.
struct IdealConditions {
    /// Positions into the conjugation's Cayley list.
    cayley_positions: Vec<usize>,
    /// Annihilator rows over those positions: `m` is allowed iff every row
    /// dots to zero with `m`.
    annihilator: Vec<u64>,
}

fn coroot(rs: &RootSystem, root: &[i64]) -> Vec<Rat> {
    let norm = rs.norm(root);
    root.iter()
        .map(|&c| Ratio::new(2 * c as i128, norm as i128))
        .collect()
}

/// Orthogonal projection onto the span of `basis` (roots), applied to `u`.
fn project(rs: &RootSystem, basis: &[Vec<i64>], u: &[Rat]) -> Vec<Rat> {
    if basis.is_empty() {
        return vec![Rat::zero(); u.len()];
    }
    let gram: Vec<Vec<Rat>> = basis
        .iter()
        .map(|a| {
            basis
                .iter()
                .map(|b| Rat::from_integer(rs.bilinear(a, b) as i128))
                .collect()
        })
        .collect();
    // (a|u) by bilinearity: u = Σ u_k α_k
    let rhs: Vec<Rat> = basis
        .iter()
        .map(|a| {
            u.iter()
                .enumerate()
                .map(|(k, &uk)| uk * Rat::from_integer(rs.bilinear(a, &rs.simple_root(k)) as i128))
                .fold(Rat::zero(), |acc, x| acc + x)
        })
        .collect();
    let c = solve_rational(&gram, &rhs).expect("Gram matrix of independent roots is invertible");
    let mut out = vec![Rat::zero(); u.len()];
    for (ci, b) in c.iter().zip(basis) {
        for (k, &bk) in b.iter().enumerate() {
            out[k] += *ci * Rat::from_integer(bk as i128);
        }
    }
    out
}

/// Does `v` (rational, simple coordinates) lie in the lattice spanned by
/// the given rational generators?
fn in_lattice(gens: &[Vec<Rat>], v: &[Rat]) -> bool {
    if gens.is_empty() {
        return v.iter().all(Rat::is_zero);
    }
    let dim = v.len();
    // clear denominators across the whole system
    let mut denom: i128 = 1;
    for g in gens.iter().chain(std::iter::once(&v.to_vec())) {
        for x in g {
            denom = denom / crate::linalg::gcd(denom, *x.denom()) * *x.denom();
        }
    }
    let a: Vec<Vec<i128>> = (0..dim)
        .map(|r| {
            gens.iter()
                .map(|g| (g[r] * Rat::from_integer(denom)).to_integer())
                .collect()
        })
        .collect();
    let b: Vec<i128> = (0..dim)
        .map(|r| (v[r] * Rat::from_integer(denom)).to_integer())
        .collect();
    snf::solve(&a, &b).is_some()
}

/// Connected components of a (closed) root subsystem.
fn subsystem_components(rs: &RootSystem, set: &RootSet) -> Vec<RootSet> {
    let elems: Vec<usize> = set.iter().collect();
    let mut comp: Vec<usize> = (0..elems.len()).collect();
    fn find(comp: &mut Vec<usize>, i: usize) -> usize {
        if comp[i] != i {
            let r = find(comp, comp[i]);
            comp[i] = r;
        }
        comp[i]
    }
    for i in 0..elems.len() {
        for j in i + 1..elems.len() {
            if rs.bilinear(rs.root(elems[i]), rs.root(elems[j])) != 0 {
                let (a, b) = (find(&mut comp, i), find(&mut comp, j));
                comp[a] = b;
            }
        }
    }
    let mut out: Vec<(usize, RootSet)> = Vec::new();
    for (i, &e) in elems.iter().enumerate() {
        let r = find(&mut comp, i);
        if let Some((_, s)) = out.iter_mut().find(|(root, _)| *root == r) {
            s.insert(e);
        } else {
            let mut s = RootSet::empty(rs.num_roots());
            s.insert(e);
            out.push((r, s));
        }
    }
    out.into_iter().map(|(_, s)| s).collect()
}

/// Build the per-ideal kernel-membership data for the Cayley roots of a
/// conjugation, relative to a core parabolic set and its S-fit chamber.
fn ideal_conditions(
    rs: &RootSystem,
    conj: &Conjugation,
    e: &ParabolicSet,
    chamber: &Chamber,
) -> Result<Vec<IdealConditions>> {
    let cayley = conj.cayley();
    if cayley.is_empty() {
        return Ok(Vec::new());
    }
    // flattened chains must still be pairwise strongly orthogonal
    for i in 0..cayley.len() {
        for j in i + 1..cayley.len() {
            if !rs.strongly_orthogonal(rs.root(cayley[i]), rs.root(cayley[j])) {
                return Err(Error::Unsupported(
                    "chained Cayley roots are not pairwise strongly orthogonal".into(),
                ));
            }
        }
    }
    let red = e.reductive(rs);
    for &c in cayley {
        if !red.contains(c) {
            return Err(Error::Inconsistent(
                "Cayley root does not lie in the reductive part of the core".into(),
            ));
        }
    }

    let mut out = Vec::new();
    for comp in subsystem_components(rs, &red) {
        let positions: Vec<usize> = cayley
            .iter()
            .enumerate()
            .filter(|(_, &c)| comp.contains(c))
            .map(|(pos, _)| pos)
            .collect();
        if positions.is_empty() {
            continue;
        }
        let positives: Vec<usize> = comp.iter().filter(|&i| chamber.is_positive(i)).collect();
        // imaginary roots of the ideal, with compactness marks
        let mut compact_sum = vec![0i64; rs.rank()];
        let mut noncompact_pos: Vec<usize> = Vec::new();
        let mut imaginary_pos: Vec<usize> = Vec::new();
        for &i in &positives {
            if conj.is_imaginary(rs, i) {
                imaginary_pos.push(i);
                match conj.compactness(rs, i)? {
                    Compactness::Compact => {
                        for (k, &c) in rs.root(i).iter().enumerate() {
                            compact_sum[k] += c;
                        }
                    }
                    Compactness::Noncompact => noncompact_pos.push(i),
                }
            }
        }
        // E: positive noncompact imaginary roots orthogonal to ρ₀
        let e_set: Vec<usize> = noncompact_pos
            .iter()
            .copied()
            .filter(|&i| rs.bilinear(rs.root(i), &compact_sum) == 0)
            .collect();
        // the ideal's Cayley roots (positive representatives) must lie in E
        let cayley_pos_reps: Vec<usize> = positions
            .iter()
            .map(|&p| {
                let c = cayley[p];
                if chamber.is_positive(c) {
                    c
                } else {
                    rs.neg(c)
                }
            })
            .collect();
        for &c in &cayley_pos_reps {
            if !e_set.contains(&c) {
                return Err(Error::Inconsistent(
                    "Cayley root is not a noncompact imaginary root orthogonal to ρ₀".into(),
                ));
            }
        }
        // simple roots of the ideal: indecomposable positives
        let simples: Vec<usize> = positives
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
        // span basis of the imaginary roots
        let mut im_basis: Vec<Vec<i64>> = Vec::new();
        for &i in &imaginary_pos {
            let mut trial = im_basis.clone();
            trial.push(rs.root(i).to_vec());
            if int_rank(&trial) > im_basis.len() {
                im_basis.push(rs.root(i).to_vec());
            }
        }
        // lattice generators 2·ϖ(γ∨) for ideal simple roots γ
        let lattice_gens: Vec<Vec<Rat>> = simples
            .iter()
            .map(|&g| {
                let cr = coroot(rs, rs.root(g));
                project(rs, &im_basis, &cr)
                    .into_iter()
                    .map(|x| x * Rat::from_integer(2))
                    .collect()
            })
            .collect();
        // membership of Σ m_j α_j∨ in 2ϖ(Λ), for every 0/1 vector m
        let t = positions.len();
        let member = |mask: u64| -> bool {
            let mut v = vec![Rat::zero(); rs.rank()];
            for (j, &c) in cayley_pos_reps.iter().enumerate() {
                if mask >> j & 1 == 1 {
                    for (k, x) in coroot(rs, rs.root(c)).into_iter().enumerate() {
                        v[k] += x;
                    }
                }
            }
            in_lattice(&lattice_gens, &v)
        };
        let k2: Vec<u64> = (0..(1u64 << t)).filter(|&m| member(m)).collect();
        // the member set is a subgroup of F₂^t
        debug_assert!(k2.contains(&0));
        debug_assert!(k2.iter().all(|&a| k2.iter().all(|&b| k2.contains(&(a ^ b)))));
        let k2_basis: Vec<u64> = {
            let (ech, _) = gf2::rref(&k2, t);
            ech
        };
        let annihilator = gf2::kernel_basis(&k2_basis, t);
        out.push(IdealConditions {
            cayley_positions: positions,
            annihilator,
        });
    }
    Ok(out)
}

/// Does an exponent assignment over the Cayley roots land in the analytic
/// Weyl group of the core's semisimple isotropy factor?  True iff, per
/// simple ideal, `Σ m_j α_j∨ ∈ 2ϖ(Λ)` on that ideal.
pub fn weyl_kernel_test(
    rs: &RootSystem,
    spec: &CrAlgebraSpec,
    core: &ParabolicSet,
    exponents: &[i64],
) -> Result<bool> {
    if exponents.len() != spec.conj.cayley().len() {
        return Err(Error::Schema(
            "one exponent per Cayley root is required".into(),
        ));
    }
    let (_, chamber) = presentation_with_chamber(rs, &spec.conj, core)?;
    let ideals = ideal_conditions(rs, &spec.conj, core, &chamber)?;
    for ideal in &ideals {
        let mut m = 0u64;
        for (j, &pos) in ideal.cayley_positions.iter().enumerate() {
            if exponents[pos].rem_euclid(2) == 1 {
                m |= 1 << j;
            }
        }
        for &row in &ideal.annihilator {
            if (row & m).count_ones() & 1 == 1 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Condition rows over the surviving generators for the fibration onto a
/// totally real base.
fn condition_rows_over(
    rs: &RootSystem,
    conj: &Conjugation,
    base: &ParabolicSet,
    pres: &GroupPresentation,
    chamber: &Chamber,
) -> Result<Vec<u64>> {
    let ideals = ideal_conditions(rs, conj, base, chamber)?;
    let mut rows: Vec<u64> = Vec::new();
    for ideal in &ideals {
        // m_j = Σ_l k_l (α_j | β_l∨): row of parities per survivor l
        let p: Vec<u64> = ideal
            .cayley_positions
            .iter()
            .map(|&pos| {
                let alpha = rs.root(conj.cayley()[pos]);
                let mut mask = 0u64;
                for (l, beta) in pres.survivor_roots.iter().enumerate() {
                    if rs.cartan_pairing(alpha, beta).rem_euclid(2) == 1 {
                        mask |= 1 << l;
                    }
                }
                mask
            })
            .collect();
        for &ann in &ideal.annihilator {
            let mut row = 0u64;
            for (j, &pj) in p.iter().enumerate() {
                if ann >> j & 1 == 1 {
                    row ^= pj;
                }
            }
            rows.push(row);
        }
    }
    Ok(rows)
}

fn cartan_heuristic(rs: &RootSystem, spec: &CrAlgebraSpec) -> bool {
    spec.parabolic
        .reductive(rs)
        .iter()
        .all(|i| !spec.conj.is_imaginary(rs, i))
}

fn subgroup_from_rows(
    rs: &RootSystem,
    spec: &CrAlgebraSpec,
    pres: GroupPresentation,
    rows: Vec<u64>,
) -> SubgroupDescription {
    let s = pres.survivors.len();
    let rank = gf2::rank(&rows, s);
    let kernel = gf2::kernel_basis(&rows, s);
    let kernel_exponents: Vec<Vec<u8>> = kernel
        .iter()
        .map(|&v| (0..s).map(|l| (v >> l & 1) as u8).collect())
        .collect();
    let kernel_words: Vec<String> = kernel
        .iter()
        .map(|&v| {
            let parts: Vec<String> = (0..s)
                .filter(|l| v >> l & 1 == 1)
                .map(|l| format!("x{}", pres.survivors[l]))
                .collect();
            parts.join("*")
        })
        .collect();

    // subgroup structure: K̃/L where K̃ = {k ∈ Z^s : rows·k ≡ 0 (2)} and L
    // is spanned by 2e_i for the torsion generators
    let torsion: Vec<bool> = pres
        .invariant_factors
        .iter()
        .map(|&f| f == 2)
        .collect();
    let (ech, pivots) = gf2::rref(&rows, s);
    let mut basis: Vec<Vec<i128>> = Vec::new();
    for free in 0..s {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![0i128; s];
        v[free] = 1;
        for (row, &p) in ech.iter().zip(&pivots) {
            if row & (1 << free) != 0 {
                v[p] = 1;
            }
        }
        basis.push(v);
    }
    for &p in &pivots {
        let mut v = vec![0i128; s];
        v[p] = 2;
        basis.push(v);
    }
    // solve B x = 2e_i for each torsion generator
    let b_rows: Vec<Vec<Rat>> = (0..s)
        .map(|r| basis.iter().map(|col| Rat::from_integer(col[r])).collect())
        .collect();
    let mut rel_cols: Vec<Vec<i128>> = Vec::new();
    for (i, &t) in torsion.iter().enumerate() {
        if !t {
            continue;
        }
        let mut target = vec![Rat::zero(); s];
        target[i] = Rat::from_integer(2);
        let x = solve_rational(&b_rows, &target).expect("K-lattice basis is full rank");
        rel_cols.push(
            x.iter()
                .map(|r| {
                    debug_assert!(r.is_integer());
                    r.to_integer()
                })
                .collect(),
        );
    }
    let (raw_factors, free_rank) = snf::cokernel_structure(s, &rel_cols);
    let factors: Vec<i64> = raw_factors.iter().map(|&f| f as i64).collect();

    let cartan_heuristic_ok = cartan_heuristic(rs, spec);
    SubgroupDescription {
        ambient: pres,
        condition_rows: rows
            .iter()
            .map(|&r| (0..s).map(|l| (r >> l & 1) as u8).collect())
            .collect(),
        kernel_exponents,
        kernel_words,
        index: 1u64 << rank,
        subgroup_invariant_factors: factors,
        subgroup_free_rank: free_rank,
        cartan_heuristic_ok,
    }
}

/// π₁ of the orbit as a subgroup of π₁ of its real core.
pub fn pi1_orbit(rs: &RootSystem, spec: &CrAlgebraSpec) -> Result<SubgroupDescription> {
    let (core, _) = real_core(rs, spec);
    let (pres, chamber) = presentation_with_chamber(rs, &spec.conj, &core.parabolic)?;
    // a trivial ambient group needs no kernel conditions
    let rows = if pres.survivors.is_empty() {
        Vec::new()
    } else {
        condition_rows_over(rs, &spec.conj, &core.parabolic, &pres, &chamber)?
    };
    Ok(subgroup_from_rows(rs, spec, pres, rows))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct FiberComponents {
    pub count: u64,
    /// Heuristic Cartan check on the total-space spec (see module docs).
    pub cartan_heuristic_ok: bool,
}

/// Number of connected components of the typical fiber of
/// `M_total → M_base` for nested parabolic sets sharing one conjugation.
pub fn fiber_component_count(
    rs: &RootSystem,
    total: &CrAlgebraSpec,
    base: &CrAlgebraSpec,
) -> Result<FiberComponents> {
    if total.conj.matrix() != base.conj.matrix() {
        return Err(Error::Unsupported(
            "fibration pair must share one conjugation".into(),
        ));
    }
    // the equivariant fibration needs the isotropy inclusion i₀' ⊆ i₀,
    // which is weaker than Q' ⊆ Q (the tower map onto the core is not CR)
    let iso_total = total.q().intersection(&total.sigma_q());
    let iso_base = base.q().intersection(&base.sigma_q());
    if !iso_total.is_subset(&iso_base) {
        return Err(Error::NotNested);
    }
    let cartan_heuristic_ok = cartan_heuristic(rs, total);
    if total.q() == base.q() {
        return Ok(FiberComponents {
            count: 1,
            cartan_heuristic_ok,
        });
    }
    if base.is_totally_real() {
        let (pres, chamber) = presentation_with_chamber(rs, &total.conj, &base.parabolic)?;
        let rows = if pres.survivors.is_empty() {
            Vec::new()
        } else {
            condition_rows_over(rs, &total.conj, &base.parabolic, &pres, &chamber)?
        };
        let rank = gf2::rank(&rows, pres.survivors.len());
        return Ok(FiberComponents {
            count: 1 << rank,
            cartan_heuristic_ok,
        });
    }
    // general nested pair: compare the two π₁ subgroups inside the shared core
    let (core_t, _) = real_core(rs, total);
    let (core_b, _) = real_core(rs, base);
    if core_t.parabolic != core_b.parabolic {
        return Err(Error::Unsupported(
            "fiber components for bases with a different real core are not computed".into(),
        ));
    }
    let sub_t = pi1_orbit(rs, total)?;
    let sub_b = pi1_orbit(rs, base)?;
    let s = sub_t.ambient.survivors.len();
    let pack = |rows: &[Vec<u8>]| -> Vec<u64> {
        rows.iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .fold(0u64, |m, (l, &x)| m | ((x as u64) << l))
            })
            .collect()
    };
    let rows_t = pack(&sub_t.condition_rows);
    let rows_b = pack(&sub_b.condition_rows);
    if !gf2::rowspace_contained(&rows_b, &rows_t, s) {
        return Err(Error::Unsupported(
            "π₁ subgroups of the pair are not nested".into(),
        ));
    }
    let rank_t = gf2::rank(&rows_t, s);
    let rank_b = gf2::rank(&rows_b, s);
    Ok(FiberComponents {
        count: 1 << (rank_t - rank_b),
        cartan_heuristic_ok,
    })
}

/// Euler characteristic of the complex flag manifold `G/Q_Φ`: the Weyl
/// group order divided by the order of the Levi's Weyl group.
pub fn euler_complex_flag(rs: &RootSystem, phi: &BTreeSet<Node>) -> Result<u64> {
    for &node in phi {
        if node == 0 || node > rs.rank() {
            return Err(Error::Schema(format!(
                "node {node} out of range 1..={}",
                rs.rank()
            )));
        }
    }
    let std = Chamber::standard(rs);
    let mut levi = RootSet::empty(rs.num_roots());
    for i in 0..rs.num_roots() {
        if std.support(rs, i).is_disjoint(phi) {
            levi.insert(i);
        }
    }
    let mut levi_order: u64 = 1;
    for (t, n) in classify_subsystem(rs, &levi) {
        levi_order *= t.weyl_order(n);
    }
    let total = rs.spec().weyl_order();
    debug_assert_eq!(total % levi_order, 0);
    Ok(total / levi_order)
}
