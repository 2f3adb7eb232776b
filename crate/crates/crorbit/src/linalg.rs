//! Small exact linear algebra helpers over the integers and rationals.

use num_rational::Ratio;

pub type Rat = Ratio<i128>;

/// Rank of an integer matrix (rows of equal length), by fraction-free
/// Gaussian elimination.
pub fn int_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        for r in rank + 1..m.len() {
            if m[r][col] != 0 {
                let (a, b) = (m[rank][col], m[r][col]);
                let g = gcd(a, b);
                let (fa, fb) = (b / g, a / g);
                for c in 0..ncols {
                    m[r][c] = m[r][c] * fb - m[rank][c] * fa;
                }
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

pub fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.max(1)
}

/// Solve `A·x = b` over the rationals (A given by rows).  Returns one
/// solution if the system is consistent.
pub fn solve_rational(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, &bi)| {
            let mut r = row.clone();
            r.push(bi);
            r
        })
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..nrows).find(|&r| m[r][col] != Rat::from_integer(0)) else {
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][col];
        for c in col..=ncols {
            m[rank][c] /= inv;
        }
        for r in 0..nrows {
            if r != rank && m[r][col] != Rat::from_integer(0) {
                let f = m[r][col];
                for c in col..=ncols {
                    let sub = f * m[rank][c];
                    m[r][c] -= sub;
                }
            }
        }
        pivots.push((rank, col));
        rank += 1;
    }
    // consistency: zero rows must have zero rhs
    for r in rank..nrows {
        if m[r][ncols] != Rat::from_integer(0) {
            return None;
        }
    }
    let mut x = vec![Rat::from_integer(0); ncols];
    for &(r, c) in &pivots {
        x[c] = m[r][ncols];
    }
    Some(x)
}
