//! Dense GF(2) linear algebra on up to 64 columns (generator counts here
//! are bounded by the rank, so a machine word per row is plenty).

/// Reduced row echelon form; returns the nonzero rows and their pivot
/// columns, in column order.
pub fn rref(rows: &[u64], ncols: usize) -> (Vec<u64>, Vec<usize>) {
    let mut work: Vec<u64> = rows.to_vec();
    let mut out: Vec<u64> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for col in 0..ncols {
        let bit = 1u64 << col;
        let Some(pos) = work.iter().position(|&r| r & bit != 0) else {
            continue;
        };
        let row = work.swap_remove(pos);
        for r in work.iter_mut() {
            if *r & bit != 0 {
                *r ^= row;
            }
        }
        for r in out.iter_mut() {
            if *r & bit != 0 {
                *r ^= row;
            }
        }
        out.push(row);
        pivots.push(col);
    }
    (out, pivots)
}

pub fn rank(rows: &[u64], ncols: usize) -> usize {
    rref(rows, ncols).0.len()
}

/// Basis of the right kernel `{x : A·x = 0}`, one vector per free column,
/// in ascending column order.
pub fn kernel_basis(rows: &[u64], ncols: usize) -> Vec<u64> {
    let (echelon, pivots) = rref(rows, ncols);
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = 1u64 << free;
        for (row, &p) in echelon.iter().zip(&pivots) {
            if row & (1 << free) != 0 {
                v |= 1 << p;
            }
        }
        basis.push(v);
    }
    basis
}

/// Row space containment: every row of `a` lies in the row space of `b`.
pub fn rowspace_contained(a: &[u64], b: &[u64], ncols: usize) -> bool {
    let rank_b = rank(b, ncols);
    let mut both: Vec<u64> = b.to_vec();
    both.extend_from_slice(a);
    rank(&both, ncols) == rank_b
}
