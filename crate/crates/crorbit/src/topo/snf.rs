//! Integer Smith normal form with transform matrices.

#[derive(Debug, Clone)]
pub struct Snf {
    /// Diagonal entries `d_1 | d_2 | …`, padded form of `U·A·V`.
    pub diag: Vec<i128>,
    pub u: Vec<Vec<i128>>,
    pub v: Vec<Vec<i128>>,
    pub rows: usize,
    pub cols: usize,
}

fn identity(n: usize) -> Vec<Vec<i128>> {
    let mut m = vec![vec![0i128; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    m
}

/// Compute `U·A·V = D` with `U`, `V` unimodular and `D` in Smith form.
pub fn snf(a: &[Vec<i128>]) -> Snf {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<i128>> = a.to_vec();
    let mut u = identity(rows);
    let mut v = identity(cols);

    let mut t = 0;
    while t < rows && t < cols {
        // find a pivot of minimal nonzero absolute value
        let mut pivot: Option<(usize, usize)> = None;
        for r in t..rows {
            for c in t..cols {
                if m[r][c] != 0
                    && pivot.is_none_or(|(pr, pc)| m[r][c].abs() < m[pr][pc].abs())
                {
                    pivot = Some((r, c));
                }
            }
        }
        let Some((pr, pc)) = pivot else { break };
        m.swap(t, pr);
        u.swap(t, pr);
        for row in m.iter_mut() {
            row.swap(t, pc);
        }
        for row in v.iter_mut() {
            row.swap(t, pc);
        }

        // clear row and column t
        let mut clean = true;
        for r in t + 1..rows {
            if m[r][t] != 0 {
                let q = div_round(m[r][t], m[t][t]);
                for c in 0..cols {
                    m[r][c] -= q * m[t][c];
                }
                for c in 0..rows {
                    u[r][c] -= q * u[t][c];
                }
                if m[r][t] != 0 {
                    clean = false;
                }
            }
        }
        for c in t + 1..cols {
            if m[t][c] != 0 {
                let q = div_round(m[t][c], m[t][t]);
                for row in m.iter_mut() {
                    row[c] -= q * row[t];
                }
                for row in v.iter_mut() {
                    row[c] -= q * row[t];
                }
                if m[t][c] != 0 {
                    clean = false;
                }
            }
        }
        if !clean {
            continue;
        }
        // divisibility: d_t must divide the remaining submatrix
        let mut fixed = true;
        'scan: for r in t + 1..rows {
            for c in t + 1..cols {
                if m[r][c] % m[t][t] != 0 {
                    for cc in 0..cols {
                        m[t][cc] += m[r][cc];
                    }
                    for cc in 0..rows {
                        u[t][cc] += u[r][cc];
                    }
                    fixed = false;
                    break 'scan;
                }
            }
        }
        if fixed {
            if m[t][t] < 0 {
                for c in 0..cols {
                    m[t][c] = -m[t][c];
                }
                for c in 0..rows {
                    u[t][c] = -u[t][c];
                }
            }
            t += 1;
        }
    }

    let diag: Vec<i128> = (0..rows.min(cols)).map(|i| m[i][i]).collect();
    Snf {
        diag,
        u,
        v,
        rows,
        cols,
    }
}

fn div_round(a: i128, b: i128) -> i128 {
    // quotient minimizing the remainder's absolute value
    let q = a / b;
    let r = a - q * b;
    if 2 * r.abs() > b.abs() {
        q + if (r > 0) == (b > 0) { 1 } else { -1 }
    } else {
        q
    }
}

/// Nonzero invariant factors followed by nothing; use together with the
/// column count to infer the free rank of a cokernel.
pub fn invariant_factors(a: &[Vec<i128>]) -> Vec<i128> {
    snf(a).diag.into_iter().filter(|&d| d != 0).collect()
}

/// One integer solution of `A·x = b`, if any.
pub fn solve(a: &[Vec<i128>], b: &[i128]) -> Option<Vec<i128>> {
    let s = snf(a);
    // D·y = U·b, x = V·y
    let ub: Vec<i128> = s
        .u
        .iter()
        .map(|row| row.iter().zip(b).map(|(&u, &x)| u * x).sum())
        .collect();
    let mut y = vec![0i128; s.cols];
    for r in 0..s.rows {
        let d = if r < s.diag.len() { s.diag[r] } else { 0 };
        if d == 0 {
            if ub[r] != 0 {
                return None;
            }
        } else {
            if ub[r] % d != 0 {
                return None;
            }
            y[r] = ub[r] / d;
        }
    }
    Some(
        s.v.iter()
            .map(|row| row.iter().zip(&y).map(|(&v, &x)| v * x).sum())
            .collect(),
    )
}

/// Invariant factors and free rank of `Z^n / column-span(A)` where `A` is
/// given as a list of column vectors of length `n`.
pub fn cokernel_structure(n: usize, columns: &[Vec<i128>]) -> (Vec<i128>, usize) {
    if columns.is_empty() {
        return (Vec::new(), n);
    }
    let rows: Vec<Vec<i128>> = (0..n)
        .map(|r| columns.iter().map(|c| c[r]).collect())
        .collect();
    let factors: Vec<i128> = invariant_factors(&rows)
        .into_iter()
        .filter(|&d| d.abs() != 1)
        .collect();
    let rank = invariant_factors(&rows).len();
    (factors, n - rank)
}
