//! Exact root-system engine.
//!
//! Roots are integer coordinate vectors in the simple-root basis of the
//! standard chamber.  The symmetrized bilinear form is normalized so that
//! short roots have squared length 2, which makes `(α|β∨)` the Cartan
//! integer.  Chambers are represented by regular integer covectors; a
//! covector `u` pairs with a root `α` by the plain dot product with the
//! coordinates of `α`.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bitset::RootSet;
use crate::error::Error;
use crate::Result;

/// 1-based label of a simple root node of the standard diagram.
pub type Node = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SimpleType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl SimpleType {
    pub fn letter(self) -> char {
        match self {
            SimpleType::A => 'A',
            SimpleType::B => 'B',
            SimpleType::C => 'C',
            SimpleType::D => 'D',
            SimpleType::E => 'E',
            SimpleType::F => 'F',
            SimpleType::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<SimpleType> {
        match c.to_ascii_uppercase() {
            'A' => Some(SimpleType::A),
            'B' => Some(SimpleType::B),
            'C' => Some(SimpleType::C),
            'D' => Some(SimpleType::D),
            'E' => Some(SimpleType::E),
            'F' => Some(SimpleType::F),
            'G' => Some(SimpleType::G),
            _ => None,
        }
    }

    pub fn rank_valid(self, rank: usize) -> bool {
        match self {
            SimpleType::A => rank >= 1,
            SimpleType::B => rank >= 2,
            SimpleType::C => rank >= 3,
            SimpleType::D => rank >= 4,
            SimpleType::E => (6..=8).contains(&rank),
            SimpleType::F => rank == 4,
            SimpleType::G => rank == 2,
        }
    }

    /// Classified number of roots.
    pub fn root_count(self, n: usize) -> usize {
        match self {
            SimpleType::A => n * (n + 1),
            SimpleType::B | SimpleType::C => 2 * n * n,
            SimpleType::D => 2 * n * (n - 1),
            SimpleType::E => match n {
                6 => 72,
                7 => 126,
                _ => 240,
            },
            SimpleType::F => 48,
            SimpleType::G => 12,
        }
    }

    /// Classified Weyl group order.
    pub fn weyl_order(self, n: usize) -> u64 {
        let fact = |k: usize| (1..=k as u64).product::<u64>();
        match self {
            SimpleType::A => fact(n + 1),
            SimpleType::B | SimpleType::C => (1u64 << n) * fact(n),
            SimpleType::D => (1u64 << (n - 1)) * fact(n),
            SimpleType::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            SimpleType::F => 1152,
            SimpleType::G => 12,
        }
    }

    /// Cartan block `a[i][j] = (α_i | α_j∨)` and half-norms `d_i = (α_i|α_i)/2`,
    /// normalized so short roots have squared length 2.
    fn cartan_block(self, n: usize) -> (Vec<Vec<i64>>, Vec<i64>) {
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let chain = |a: &mut Vec<Vec<i64>>, edges: &[(usize, usize)]| {
            for &(i, j) in edges {
                a[i][j] = -1;
                a[j][i] = -1;
            }
        };
        let mut d = vec![1i64; n];
        match self {
            SimpleType::A => {
                chain(&mut a, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>());
            }
            SimpleType::B => {
                chain(&mut a, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>());
                // α_n is short
                a[n - 2][n - 1] = -2;
                for di in d.iter_mut().take(n - 1) {
                    *di = 2;
                }
            }
            SimpleType::C => {
                chain(&mut a, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>());
                // α_n is long
                a[n - 1][n - 2] = -2;
                d[n - 1] = 2;
            }
            SimpleType::D => {
                // chain α_1 … α_{n-1}, with α_n forking off α_{n-2}
                chain(&mut a, &(0..n - 2).map(|i| (i, i + 1)).collect::<Vec<_>>());
                a[n - 3][n - 1] = -1;
                a[n - 1][n - 3] = -1;
            }
            SimpleType::E => {
                // Bourbaki numbering: chain 1-3-4-5-6(-7)(-8), node 2 attached to 4.
                let mut edges = vec![(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)];
                if n >= 7 {
                    edges.push((5, 6));
                }
                if n == 8 {
                    edges.push((6, 7));
                }
                chain(&mut a, &edges);
            }
            SimpleType::F => {
                chain(&mut a, &[(0, 1), (1, 2), (2, 3)]);
                // α1, α2 long; α3, α4 short
                a[1][2] = -2;
                d[0] = 2;
                d[1] = 2;
            }
            SimpleType::G => {
                // α1 short, α2 long
                a[0][1] = -1;
                a[1][0] = -3;
                d[1] = 3;
            }
        }
        (a, d)
    }
}

/// A product of simple types, e.g. `A6` or `A2xA1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DynkinSpec {
    components: Vec<(SimpleType, usize)>,
}

impl DynkinSpec {
    pub fn new(components: Vec<(SimpleType, usize)>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidDynkin("empty component list".into()));
        }
        for &(t, n) in &components {
            if !t.rank_valid(n) {
                return Err(Error::InvalidDynkin(format!(
                    "rank {n} is not valid for type {}",
                    t.letter()
                )));
            }
        }
        Ok(DynkinSpec { components })
    }

    pub fn simple(t: SimpleType, n: usize) -> Result<Self> {
        Self::new(vec![(t, n)])
    }

    pub fn parse(s: &str) -> Result<Self> {
        let mut comps = Vec::new();
        for part in s.split(['x', 'X']) {
            let part = part.trim();
            let mut chars = part.chars();
            let letter = chars
                .next()
                .and_then(SimpleType::from_letter)
                .ok_or_else(|| Error::InvalidDynkin(format!("bad component `{part}`")))?;
            let rank: usize = chars
                .as_str()
                .parse()
                .map_err(|_| Error::InvalidDynkin(format!("bad rank in `{part}`")))?;
            comps.push((letter, rank));
        }
        Self::new(comps)
    }

    pub fn components(&self) -> &[(SimpleType, usize)] {
        &self.components
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(|&(_, n)| n).sum()
    }

    pub fn root_count(&self) -> usize {
        self.components.iter().map(|&(t, n)| t.root_count(n)).sum()
    }

    pub fn weyl_order(&self) -> u64 {
        self.components
            .iter()
            .map(|&(t, n)| t.weyl_order(n))
            .product()
    }

    /// Is this a single type-A component? (Enables flag-signature notation.)
    pub fn is_single_type_a(&self) -> bool {
        self.components.len() == 1 && self.components[0].0 == SimpleType::A
    }
}

impl fmt::Display for DynkinSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|&(t, n)| format!("{}{}", t.letter(), n))
            .collect();
        write!(f, "{}", parts.join("x"))
    }
}

impl Serialize for DynkinSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for DynkinSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        DynkinSpec::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// The full root system of a Dynkin specification, with the standard chamber's
/// simple-root basis as the ambient coordinate system.
#[derive(Debug, Clone)]
pub struct RootSystem {
    spec: DynkinSpec,
    rank: usize,
    /// `cartan[i][j] = (α_i | α_j∨)`.
    cartan: Vec<Vec<i64>>,
    /// `d[i] = (α_i | α_i)/2 ∈ {1,2,3}`.
    half_norm: Vec<i64>,
    roots: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
    neg: Vec<usize>,
}

impl RootSystem {
    /// Build the root system by closing the simple roots under simple
    /// reflections, then verify the classified root count.
    pub fn build(spec: DynkinSpec) -> Result<RootSystem> {
        let rank = spec.rank();
        let mut cartan = vec![vec![0i64; rank]; rank];
        let mut half_norm = vec![1i64; rank];
        let mut off = 0;
        for &(t, n) in spec.components() {
            let (block, d) = t.cartan_block(n);
            for i in 0..n {
                half_norm[off + i] = d[i];
                for j in 0..n {
                    cartan[off + i][off + j] = block[i][j];
                }
            }
            off += n;
        }

        // Closure under simple reflections: s_k(α) = α − (α|α_k∨) α_k,
        // with (α|α_k∨) = Σ_j c_j(α)·cartan[j][k].
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for k in 0..rank {
            let mut alpha = vec![0i64; rank];
            alpha[k] = 1;
            seen.insert(alpha.clone());
            queue.push_back(alpha);
        }
        while let Some(alpha) = queue.pop_front() {
            for k in 0..rank {
                let p: i64 = (0..rank).map(|j| alpha[j] * cartan[j][k]).sum();
                let mut beta = alpha.clone();
                beta[k] -= p;
                if seen.insert(beta.clone()) {
                    queue.push_back(beta);
                }
            }
        }

        let mut roots: Vec<Vec<i64>> = seen.into_iter().collect();
        roots.sort_by_key(|r| (r.iter().sum::<i64>(), r.clone()));
        if roots.len() != spec.root_count() {
            return Err(Error::Inconsistent(format!(
                "closure produced {} roots for {spec}, classification says {}",
                roots.len(),
                spec.root_count()
            )));
        }

        let index: HashMap<Vec<i64>, usize> = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), i))
            .collect();
        let neg = roots
            .iter()
            .map(|r| {
                let m: Vec<i64> = r.iter().map(|c| -c).collect();
                index[&m]
            })
            .collect();

        Ok(RootSystem {
            spec,
            rank,
            cartan,
            half_norm,
            roots,
            index,
            neg,
        })
    }

    pub fn spec(&self) -> &DynkinSpec {
        &self.spec
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn root(&self, i: usize) -> &[i64] {
        &self.roots[i]
    }

    pub fn neg(&self, i: usize) -> usize {
        self.neg[i]
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn root_index(&self, coords: &[i64]) -> Result<usize> {
        self.index
            .get(coords)
            .copied()
            .ok_or_else(|| Error::NotARoot(coords.to_vec()))
    }

    pub fn is_root(&self, coords: &[i64]) -> bool {
        self.index.contains_key(coords)
    }

    pub fn simple_root(&self, k: usize) -> Vec<i64> {
        let mut v = vec![0i64; self.rank];
        v[k] = 1;
        v
    }

    /// Symmetrized inner product `(a|b)`, an integer in this normalization.
    pub fn bilinear(&self, a: &[i64], b: &[i64]) -> i64 {
        // (α_i|α_j) = d_j·a_ij
        let mut s = 0i64;
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj != 0 {
                    s += ai * bj * self.half_norm[j] * self.cartan[i][j];
                }
            }
        }
        s
    }

    pub fn norm(&self, a: &[i64]) -> i64 {
        self.bilinear(a, a)
    }

    /// Cartan integer `(a|b∨) = 2(a|b)/(b|b)`.
    pub fn cartan_pairing(&self, a: &[i64], b: &[i64]) -> i64 {
        let num = 2 * self.bilinear(a, b);
        let den = self.norm(b);
        debug_assert!(den > 0 && num % den == 0, "non-integral Cartan pairing");
        num / den
    }

    /// `s_b(a) = a − (a|b∨) b` on coordinates.
    pub fn reflect_coords(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        let p = self.cartan_pairing(a, b);
        a.iter().zip(b).map(|(&x, &y)| x - p * y).collect()
    }

    /// `s_{β}(α)` on root indices.
    pub fn reflect(&self, alpha: usize, beta: usize) -> usize {
        let c = self.reflect_coords(&self.roots[alpha], &self.roots[beta]);
        self.index[&c]
    }

    /// Strong orthogonality: `(a|b) = 0` and `a ± b` are not roots.
    pub fn strongly_orthogonal(&self, a: &[i64], b: &[i64]) -> bool {
        if self.bilinear(a, b) != 0 {
            return false;
        }
        let sum: Vec<i64> = a.iter().zip(b).map(|(&x, &y)| x + y).collect();
        let dif: Vec<i64> = a.iter().zip(b).map(|(&x, &y)| x - y).collect();
        !self.is_root(&sum) && !self.is_root(&dif)
    }

    /// Pair a covector with root coordinates.
    pub fn pair_covector(&self, u: &[i64], coords: &[i64]) -> i64 {
        u.iter().zip(coords).map(|(&a, &b)| a * b).sum()
    }

    /// Covector of the bilinear pairing with `v`: `u_k = (v|α_k)`.
    pub fn covector_of(&self, v: &[i64]) -> Vec<i64> {
        (0..self.rank)
            .map(|k| self.bilinear(v, &self.simple_root(k)))
            .collect()
    }

    /// A deterministic strictly dominant generic covector: `u_k = base^k`
    /// with `base` large enough that no root pairs to zero.
    pub fn generic_covector(&self) -> Vec<i64> {
        let max_coeff = self
            .roots
            .iter()
            .flat_map(|r| r.iter().map(|c| c.abs()))
            .max()
            .unwrap_or(1);
        let base = 2 * max_coeff + 2;
        let mut u = Vec::with_capacity(self.rank);
        let mut p = 1i64;
        for _ in 0..self.rank {
            u.push(p);
            p *= base;
        }
        u
    }
}

/// A word in the simple reflections of the standard chamber.  Acting on a
/// root applies the leftmost letter last.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WeylWord(pub Vec<usize>);

impl WeylWord {
    pub fn apply(&self, rs: &RootSystem, coords: &[i64]) -> Vec<i64> {
        let mut x = coords.to_vec();
        for &k in self.0.iter().rev() {
            x = rs.reflect_coords(&x, &rs.simple_root(k));
        }
        x
    }

    pub fn apply_inverse(&self, rs: &RootSystem, coords: &[i64]) -> Vec<i64> {
        let mut x = coords.to_vec();
        for &k in &self.0 {
            x = rs.reflect_coords(&x, &rs.simple_root(k));
        }
        x
    }
}

/// A Weyl chamber, represented by a regular integer covector.  The basis is
/// node-labeled by transport from the standard chamber: `basis[k] = w(α_k)`
/// where `C = w(C_std)`.
#[derive(Debug, Clone)]
pub struct Chamber {
    covector: Vec<i64>,
    positives: RootSet,
    basis: Vec<usize>,
    word: WeylWord,
}

impl Chamber {
    pub fn standard(rs: &RootSystem) -> Chamber {
        Self::from_covector(rs, rs.generic_covector()).expect("generic covector is regular")
    }

    pub fn from_covector(rs: &RootSystem, covector: Vec<i64>) -> Result<Chamber> {
        if covector.len() != rs.rank() {
            return Err(Error::Schema(format!(
                "chamber covector has length {}, rank is {}",
                covector.len(),
                rs.rank()
            )));
        }
        let mut positives = RootSet::empty(rs.num_roots());
        for (i, r) in rs.roots().iter().enumerate() {
            match rs.pair_covector(&covector, r) {
                0 => {
                    return Err(Error::Schema(format!(
                        "covector {covector:?} is not regular: vanishes on root {r:?}"
                    )))
                }
                v if v > 0 => positives.insert(i),
                _ => {}
            }
        }
        // Walk the covector to the dominant one, recording the word.
        let mut u = covector.clone();
        let mut word = Vec::new();
        loop {
            match (0..rs.rank()).find(|&k| u[k] < 0) {
                None => break,
                Some(k) => {
                    word.push(k);
                    // u ← u∘s_k:  u'_j = u_j − a[j][k]·u_k
                    let uk = u[k];
                    for j in 0..rs.rank() {
                        u[j] -= rs.cartan_matrix()[j][k] * uk;
                    }
                }
            }
            if word.len() > 16 * rs.num_roots() {
                return Err(Error::Inconsistent("chamber walk did not terminate".into()));
            }
        }
        let word = WeylWord(word);
        let basis: Vec<usize> = (0..rs.rank())
            .map(|k| {
                let b = word.apply(rs, &rs.simple_root(k));
                rs.root_index(&b).expect("basis image is a root")
            })
            .collect();
        debug_assert!(basis.iter().all(|&b| positives.contains(b)));
        Ok(Chamber {
            covector,
            positives,
            basis,
            word,
        })
    }

    pub fn covector(&self) -> &[i64] {
        &self.covector
    }

    pub fn positives(&self) -> &RootSet {
        &self.positives
    }

    pub fn is_positive(&self, root: usize) -> bool {
        self.positives.contains(root)
    }

    /// Node-labeled simple basis: `basis()[k]` is the root w(α_{k+1}).
    pub fn basis(&self) -> &[usize] {
        &self.basis
    }

    pub fn word(&self) -> &WeylWord {
        &self.word
    }

    /// Node label (1-based) of a root if it is simple in this chamber.
    pub fn node_of(&self, root: usize) -> Option<Node> {
        self.basis.iter().position(|&b| b == root).map(|k| k + 1)
    }

    /// Coordinates of a root in this chamber's simple basis.
    pub fn coords_in_basis(&self, rs: &RootSystem, root: usize) -> Vec<i64> {
        self.word.apply_inverse(rs, rs.root(root))
    }

    /// Support of a root with respect to this chamber's basis, as 1-based
    /// node labels.
    pub fn support(&self, rs: &RootSystem, root: usize) -> BTreeSet<Node> {
        self.coords_in_basis(rs, root)
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, _)| k + 1)
            .collect()
    }

    /// The adjacent chamber across the wall of a basis root.
    pub fn reflect_at(&self, rs: &RootSystem, root: usize) -> Chamber {
        let b = rs.root(root);
        let ub = rs.pair_covector(&self.covector, b);
        let u: Vec<i64> = (0..rs.rank())
            .map(|j| self.covector[j] - rs.cartan_pairing(&rs.simple_root(j), b) * ub)
            .collect();
        Chamber::from_covector(rs, u).expect("reflected covector is regular")
    }
}

/// All Weyl chambers, one per group element.  Errors out (so callers can fall
/// back to local search) when `|W|` exceeds `limit`.
pub fn enumerate_chambers(rs: &RootSystem, limit: u64) -> Result<Vec<Chamber>> {
    let order = rs.spec().weyl_order();
    if order > limit {
        return Err(Error::EnumerationBound { order, limit });
    }
    let mut out: Vec<Chamber> = Vec::with_capacity(order as usize);
    let mut seen: BTreeSet<RootSet> = BTreeSet::new();
    let mut queue: VecDeque<Chamber> = VecDeque::new();
    let std = Chamber::standard(rs);
    seen.insert(std.positives().clone());
    queue.push_back(std);
    while let Some(c) = queue.pop_front() {
        for k in 0..rs.rank() {
            let next = c.reflect_at(rs, c.basis()[k]);
            if seen.insert(next.positives().clone()) {
                queue.push_back(next);
            }
        }
        out.push(c);
    }
    if out.len() as u64 != order {
        return Err(Error::Inconsistent(format!(
            "chamber enumeration found {} chambers, |W| = {order}",
            out.len()
        )));
    }
    Ok(out)
}
