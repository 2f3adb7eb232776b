//! Real forms as involutions of the root lattice.
//!
//! A real form of `g`, relative to a Cartan subalgebra, acts on the root
//! lattice through an involutive isometry `σ*` that permutes the roots.  The
//! induced partition into real (`σ*α = α`), imaginary (`σ*α = −α`) and
//! complex roots, together with compactness marks on imaginary roots and
//! restricted multiplicities on real roots, is all the real-form data the
//! rest of the crate consumes.
//!
//! Catalog entries describe `σ*` for a maximally noncompact Cartan
//! subalgebra (Satake data); other Cartan subalgebras are reached by Cayley
//! transforms, realized on the lattice as composition with the commuting
//! reflections of a strongly orthogonal set of real roots.

pub mod catalog;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::bitset::RootSet;
use crate::error::Error;
use crate::lattice::{DynkinSpec, RootSystem};
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Compactness {
    Compact,
    Noncompact,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootClass {
    Real,
    /// Compactness is `None` when the mark is not derivable.
    Imaginary(Option<Compactness>),
    Complex,
}

/// Catalog / inline description of a real form: one JSON document per form.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SatakeEntry {
    #[serde(default = "default_schema_version")]
    pub schema_version: u32,
    pub name: String,
    pub dynkin: DynkinSpec,
    /// Row-major matrix of `σ*` acting on simple-root coordinates.
    pub sigma_star: Vec<Vec<i64>>,
    /// Imaginary roots that are noncompact; unlisted imaginary roots are
    /// compact.
    #[serde(default)]
    pub noncompact_marks: Vec<Vec<i64>>,
    /// Restricted multiplicities of real roots, as `[root, m]` pairs.
    #[serde(default)]
    pub real_multiplicities: Vec<(Vec<i64>, u32)>,
    /// Membership in the simply-connectedness lists: "a", "b", or absent.
    #[serde(default)]
    pub cor_id_list: Option<String>,
}

fn default_schema_version() -> u32 {
    1
}

/// An ordered set of pairwise strongly orthogonal real roots, the data of a
/// Cayley transform between Cartan subalgebras.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleySet {
    pub roots: Vec<Vec<i64>>,
}

impl CayleySet {
    pub fn new(roots: Vec<Vec<i64>>) -> CayleySet {
        CayleySet { roots }
    }
}

/// The lattice action of a real-form conjugation, together with the Satake
/// base data it was constructed from and the Cayley chain applied on top.
#[derive(Debug, Clone)]
pub struct Conjugation {
    name: Option<String>,
    cor_id_list: Option<String>,
    /// Effective `σ*` (row-major) and the root permutation it induces.
    matrix: Vec<Vec<i64>>,
    perm: Vec<usize>,
    /// Base Satake `σ*`.
    satake_matrix: Vec<Vec<i64>>,
    satake_perm: Vec<usize>,
    /// Compactness marks for the imaginary roots of the effective `σ*`.
    marks: BTreeMap<usize, Compactness>,
    /// Restricted multiplicities of Satake-real roots (base Cartan data).
    multiplicities: BTreeMap<usize, u32>,
    /// Flattened Cayley chain (root indices), in application order.
    cayley: Vec<usize>,
}

fn apply_matrix(m: &[Vec<i64>], x: &[i64]) -> Vec<i64> {
    m.iter()
        .map(|row| row.iter().zip(x).map(|(&a, &b)| a * b).sum())
        .collect()
}

fn matrix_product(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut out = vec![vec![0i64; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] == 0 {
                continue;
            }
            for j in 0..n {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    out
}

fn identity_matrix(n: usize) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    m
}

/// Build the root permutation induced by a lattice map, verifying that it
/// permutes the roots.
fn root_permutation(rs: &RootSystem, m: &[Vec<i64>]) -> Result<Vec<usize>> {
    let mut perm = Vec::with_capacity(rs.num_roots());
    for r in rs.roots() {
        let image = apply_matrix(m, r);
        let idx = rs
            .root_index(&image)
            .map_err(|_| Error::InvalidSatake(format!("σ* maps root {r:?} to non-root {image:?}")))?;
        perm.push(idx);
    }
    Ok(perm)
}

impl Conjugation {
    /// Validate an entry against a root system and build the conjugation.
    pub fn from_entry(rs: &RootSystem, entry: &SatakeEntry) -> Result<Conjugation> {
        if &entry.dynkin != rs.spec() {
            return Err(Error::InvalidSatake(format!(
                "entry `{}` is for {}, root system is {}",
                entry.name,
                entry.dynkin,
                rs.spec()
            )));
        }
        let n = rs.rank();
        let m = &entry.sigma_star;
        if m.len() != n || m.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidSatake(format!(
                "σ* matrix of `{}` is not {n}×{n}",
                entry.name
            )));
        }
        let square = matrix_product(m, m);
        if square != identity_matrix(n) {
            let k = (0..n)
                .find(|&k| (0..n).any(|i| square[i][k] != i64::from(i == k)))
                .unwrap_or(0);
            return Err(Error::InvalidSatake(format!(
                "σ* of `{}` is not an involution: σ*σ*(α_{}) = {:?}",
                entry.name,
                k + 1,
                (0..n).map(|i| square[i][k]).collect::<Vec<_>>()
            )));
        }
        let perm = root_permutation(rs, m)?;
        // isometry: check on simple pairs, which spans everything bilinearly
        for i in 0..n {
            for j in 0..n {
                let a = rs.simple_root(i);
                let b = rs.simple_root(j);
                if rs.bilinear(&apply_matrix(m, &a), &apply_matrix(m, &b)) != rs.bilinear(&a, &b) {
                    return Err(Error::InvalidSatake(format!(
                        "σ* of `{}` does not preserve the bilinear form at (α_{}, α_{})",
                        entry.name,
                        i + 1,
                        j + 1
                    )));
                }
            }
        }

        let mut marks = BTreeMap::new();
        for (idx, &img) in perm.iter().enumerate() {
            if img == rs.neg(idx) {
                marks.insert(idx, Compactness::Compact);
            }
        }
        for coords in &entry.noncompact_marks {
            let idx = rs.root_index(coords)?;
            if perm[idx] != rs.neg(idx) {
                return Err(Error::InvalidSatake(format!(
                    "noncompact mark on non-imaginary root {coords:?} in `{}`",
                    entry.name
                )));
            }
            marks.insert(idx, Compactness::Noncompact);
        }

        let mut multiplicities = BTreeMap::new();
        for (coords, mult) in &entry.real_multiplicities {
            let idx = rs.root_index(coords)?;
            if perm[idx] != idx {
                return Err(Error::InvalidSatake(format!(
                    "multiplicity on non-real root {coords:?} in `{}`",
                    entry.name
                )));
            }
            if *mult == 0 {
                return Err(Error::InvalidSatake(format!(
                    "zero multiplicity on {coords:?} in `{}`",
                    entry.name
                )));
            }
            multiplicities.insert(idx, *mult);
        }

        if let Some(flag) = &entry.cor_id_list {
            if flag != "a" && flag != "b" {
                return Err(Error::InvalidSatake(format!(
                    "cor_id_list of `{}` must be \"a\" or \"b\"",
                    entry.name
                )));
            }
        }

        Ok(Conjugation {
            name: Some(entry.name.clone()),
            cor_id_list: entry.cor_id_list.clone(),
            matrix: m.clone(),
            perm: perm.clone(),
            satake_matrix: m.clone(),
            satake_perm: perm,
            marks,
            multiplicities,
            cayley: Vec::new(),
        })
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn cor_id_list(&self) -> Option<&str> {
        self.cor_id_list.as_deref()
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    /// Effective `σ*` on a root index.
    pub fn apply(&self, root: usize) -> usize {
        self.perm[root]
    }

    /// Base Satake `σ*` on a root index.
    pub fn satake_apply(&self, root: usize) -> usize {
        self.satake_perm[root]
    }

    pub fn apply_coords(&self, coords: &[i64]) -> Vec<i64> {
        apply_matrix(&self.matrix, coords)
    }

    /// Image of a root set under the effective `σ*`.
    pub fn map_set(&self, set: &RootSet) -> RootSet {
        set.map(&self.perm)
    }

    pub fn cayley(&self) -> &[usize] {
        &self.cayley
    }

    pub fn is_real(&self, root: usize) -> bool {
        self.perm[root] == root
    }

    pub fn is_imaginary(&self, rs: &RootSystem, root: usize) -> bool {
        self.perm[root] == rs.neg(root)
    }

    pub fn is_satake_real(&self, root: usize) -> bool {
        self.satake_perm[root] == root
    }

    pub fn class(&self, rs: &RootSystem, root: usize) -> RootClass {
        if self.is_real(root) {
            RootClass::Real
        } else if self.is_imaginary(rs, root) {
            RootClass::Imaginary(self.marks.get(&root).copied())
        } else {
            RootClass::Complex
        }
    }

    /// Compactness of an imaginary root; erroring when the mark cannot be
    /// derived beats guessing.
    pub fn compactness(&self, rs: &RootSystem, root: usize) -> Result<Compactness> {
        if !self.is_imaginary(rs, root) {
            return Err(Error::WrongRootClass(rs.root(root).to_vec(), "imaginary"));
        }
        self.marks
            .get(&root)
            .copied()
            .ok_or_else(|| Error::MissingCompactness(rs.root(root).to_vec()))
    }

    /// Restricted multiplicity of a real root, read from the base-Cartan
    /// (Satake) table.  Never guesses: unrecorded data is an error.
    pub fn multiplicity(&self, rs: &RootSystem, root: usize) -> Result<u32> {
        if !self.is_real(root) {
            return Err(Error::WrongRootClass(rs.root(root).to_vec(), "real"));
        }
        self.multiplicities
            .get(&root)
            .copied()
            .ok_or_else(|| Error::MissingMultiplicity(rs.root(root).to_vec()))
    }

    /// Multiplicity lookup for Satake-real roots (used by the fundamental
    /// group machinery, which works in the base-Cartan picture).
    pub fn satake_multiplicity(&self, rs: &RootSystem, root: usize) -> Result<u32> {
        if !self.is_satake_real(root) {
            return Err(Error::WrongRootClass(rs.root(root).to_vec(), "real"));
        }
        self.multiplicities
            .get(&root)
            .copied()
            .ok_or_else(|| Error::MissingMultiplicity(rs.root(root).to_vec()))
    }

    /// The real / imaginary / complex partition as index sets.
    pub fn partition(&self, rs: &RootSystem) -> (RootSet, RootSet, RootSet) {
        let n = rs.num_roots();
        let mut re = RootSet::empty(n);
        let mut im = RootSet::empty(n);
        let mut cpx = RootSet::empty(n);
        for i in 0..n {
            if self.is_real(i) {
                re.insert(i);
            } else if self.is_imaginary(rs, i) {
                im.insert(i);
            } else {
                cpx.insert(i);
            }
        }
        (re, im, cpx)
    }

    /// The conjugation of the base (Satake) Cartan subalgebra, with the
    /// catalog marking convention: every imaginary root compact.
    pub fn satake_base(&self, rs: &RootSystem) -> Conjugation {
        let mut marks = BTreeMap::new();
        for (idx, &img) in self.satake_perm.iter().enumerate() {
            if img == rs.neg(idx) {
                marks.insert(idx, Compactness::Compact);
            }
        }
        Conjugation {
            name: self.name.clone(),
            cor_id_list: self.cor_id_list.clone(),
            matrix: self.satake_matrix.clone(),
            perm: self.satake_perm.clone(),
            satake_matrix: self.satake_matrix.clone(),
            satake_perm: self.satake_perm.clone(),
            marks,
            multiplicities: self.multiplicities.clone(),
            cayley: Vec::new(),
        }
    }

    /// Cayley transform along a strongly orthogonal set of real roots:
    /// `σ*_new = s_{α_1} ∘ … ∘ s_{α_m} ∘ σ*_old`.  The transformed roots
    /// become imaginary and are marked noncompact; marks of other imaginary
    /// roots are inherited only when derivable (strong orthogonality with
    /// the whole set), otherwise dropped.
    pub fn apply_cayley(&self, rs: &RootSystem, set: &CayleySet) -> Result<Conjugation> {
        let mut indices = Vec::with_capacity(set.roots.len());
        for coords in &set.roots {
            let idx = rs.root_index(coords)?;
            if !self.is_real(idx) {
                return Err(Error::InvalidCayley(format!(
                    "root {coords:?} is not real for the conjugation"
                )));
            }
            indices.push(idx);
        }
        for i in 0..indices.len() {
            for j in i + 1..indices.len() {
                let a = rs.root(indices[i]);
                let b = rs.root(indices[j]);
                if !rs.strongly_orthogonal(a, b) {
                    return Err(Error::InvalidCayley(format!(
                        "roots {a:?} and {b:?} are not strongly orthogonal"
                    )));
                }
            }
        }

        // reflection matrix product (the reflections commute)
        let n = rs.rank();
        let mut refl = identity_matrix(n);
        for &idx in &indices {
            let beta = rs.root(idx);
            let mut r = identity_matrix(n);
            for j in 0..n {
                let p = rs.cartan_pairing(&rs.simple_root(j), beta);
                for (i, row) in r.iter_mut().enumerate() {
                    row[j] -= beta[i] * p;
                }
            }
            refl = matrix_product(&refl, &r);
        }
        let matrix = matrix_product(&refl, &self.matrix);
        if matrix_product(&matrix, &matrix) != identity_matrix(n) {
            return Err(Error::InvalidCayley(
                "transformed σ* is not an involution".into(),
            ));
        }
        let perm = root_permutation(rs, &matrix)
            .map_err(|e| Error::InvalidCayley(format!("transformed σ*: {e}")))?;

        // marks on the new imaginary roots
        let mut marks = BTreeMap::new();
        for (idx, &img) in perm.iter().enumerate() {
            if img != rs.neg(idx) {
                continue;
            }
            if indices.contains(&idx) || indices.contains(&rs.neg(idx)) {
                marks.insert(idx, Compactness::Noncompact);
            } else if let Some(&mark) = self.marks.get(&idx) {
                let fixed = indices
                    .iter()
                    .all(|&c| rs.strongly_orthogonal(rs.root(idx), rs.root(c)));
                if fixed && self.perm[idx] == rs.neg(idx) {
                    marks.insert(idx, mark);
                }
            }
        }

        let mut cayley = self.cayley.clone();
        cayley.extend(&indices);

        Ok(Conjugation {
            name: self.name.clone(),
            cor_id_list: self.cor_id_list.clone(),
            matrix,
            perm,
            satake_matrix: self.satake_matrix.clone(),
            satake_perm: self.satake_perm.clone(),
            marks,
            multiplicities: self.multiplicities.clone(),
            cayley,
        })
    }
}
