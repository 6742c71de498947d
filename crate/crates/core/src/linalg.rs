//! Exact linear algebra over `Scalar`: reduced row echelon form, rank,
//! nullspaces, linear solves and row-space comparisons.
//!
//! Everything here is deterministic for a fixed row order: pivots are chosen
//! as the first nonzero entry in column order, so echelon forms are canonical
//! and reports built on them are reproducible byte for byte.

use crate::scalar::Scalar;

pub type Row = Vec<Scalar>;

pub fn zero_row(n: usize) -> Row {
    vec![Scalar::zero(); n]
}

fn is_zero_row(r: &Row) -> bool {
    r.iter().all(Scalar::is_zero)
}

/// In-place reduced row echelon form. Returns the pivot column of each
/// surviving row, in order. Zero rows are removed.
pub fn rref(rows: &mut Vec<Row>) -> Vec<usize> {
    rows.retain(|r| !is_zero_row(r));
    if rows.is_empty() {
        return Vec::new();
    }
    let ncols = rows[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for c2 in 0..ncols {
                    let delta = &f * &rows[r][c2];
                    rows[i][c2] -= &delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Canonical basis of the row space.
pub fn row_space(mut rows: Vec<Row>) -> Vec<Row> {
    rref(&mut rows);
    rows
}

pub fn rank(rows: Vec<Row>) -> usize {
    row_space(rows).len()
}

/// Reduce `v` against an echelonized basis; returns the residue.
pub fn reduce_against(basis: &[Row], pivots: &[usize], v: &Row) -> Row {
    let mut v = v.clone();
    for (row, &p) in basis.iter().zip(pivots) {
        if !v[p].is_zero() {
            let f = v[p].clone();
            for (x, b) in v.iter_mut().zip(row) {
                let delta = &f * b;
                *x -= &delta;
            }
        }
    }
    v
}

/// Does `v` lie in the span of the (echelonized) basis?
pub fn in_span(basis: &[Row], pivots: &[usize], v: &Row) -> bool {
    is_zero_row(&reduce_against(basis, pivots, v))
}

/// Are two spans equal as subspaces?
pub fn same_span(a: Vec<Row>, b: Vec<Row>) -> bool {
    row_space(a) == row_space(b)
}

/// Is span(a) contained in span(b)?
pub fn span_contained(a: &[Row], b: Vec<Row>) -> bool {
    let mut basis = b;
    let pivots = rref(&mut basis);
    a.iter().all(|v| in_span(&basis, &pivots, v))
}

/// Nullspace basis of the matrix whose rows are `rows` (unknowns indexed by
/// column). Each basis vector is scaled so its first nonzero entry is 1;
/// vectors are ordered by their free column.
pub fn nullspace(rows: Vec<Row>, ncols: usize) -> Vec<Row> {
    let mut rows = rows;
    let pivots = rref(&mut rows);
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = zero_row(ncols);
        v[free] = Scalar::one();
        for (row, &p) in rows.iter().zip(&pivots) {
            if !row[free].is_zero() {
                v[p] = -&row[free];
            }
        }
        normalize_leading(&mut v);
        basis.push(v);
    }
    basis
}

/// Scale so the first nonzero coordinate equals 1.
pub fn normalize_leading(v: &mut Row) {
    if let Some(lead) = v.iter().find(|x| !x.is_zero()).cloned() {
        let inv = lead.recip();
        for x in v.iter_mut() {
            *x *= &inv;
        }
    }
}

/// Solve `sum_j c_j * cols[j] = rhs` exactly. Returns one solution (free
/// coefficients set to 0), or None when inconsistent.
pub fn solve_columns(cols: &[Row], rhs: &Row) -> Option<Vec<Scalar>> {
    let n = rhs.len();
    let m = cols.len();
    debug_assert!(cols.iter().all(|c| c.len() == n));
    // Augmented system, one row per coordinate.
    let mut aug: Vec<Row> = (0..n)
        .map(|i| {
            let mut row: Row = cols.iter().map(|c| c[i].clone()).collect();
            row.push(rhs[i].clone());
            row
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.contains(&m) {
        return None; // pivot in the rhs column: inconsistent
    }
    let mut sol = vec![Scalar::zero(); m];
    for (row, &p) in aug.iter().zip(&pivots) {
        sol[p] = row[m].clone();
    }
    Some(sol)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    fn rows(data: &[&[i64]]) -> Vec<Row> {
        data.iter().map(|r| r.iter().map(|&x| s(x)).collect()).collect()
    }

    #[test]
    fn rref_canonical() {
        let mut m = rows(&[&[2, 4, 2], &[1, 2, 3], &[0, 0, 4]]);
        let pivots = rref(&mut m);
        assert_eq!(pivots, vec![0, 2]);
        assert_eq!(m, rows(&[&[1, 2, 0], &[0, 0, 1]]));
    }

    #[test]
    fn nullspace_normalized() {
        // x + 2y = 0 over 3 unknowns: nullspace is 2-dimensional.
        let m = rows(&[&[1, 2, 0]]);
        let ns = nullspace(m, 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert_eq!(
                v.iter().find(|x| !x.is_zero()),
                Some(&Scalar::one()),
                "leading coefficient must be 1"
            );
            // check it solves the system
            let dot = &v[0] + &(&s(2) * &v[1]);
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn span_comparisons() {
        let a = rows(&[&[1, 0, 1], &[0, 1, 1]]);
        let b = rows(&[&[1, 1, 2], &[1, -1, 0]]);
        assert!(same_span(a.clone(), b));
        assert!(span_contained(&rows(&[&[2, 2, 4]]), a.clone()));
        assert!(!span_contained(&rows(&[&[0, 0, 1]]), a));
    }

    #[test]
    fn solve_columns_exact() {
        let cols = rows(&[&[1, 0, 1], &[0, 1, 1]]);
        let rhs: Row = vec![s(3), s(5), s(8)];
        let sol = solve_columns(&cols, &rhs).unwrap();
        assert_eq!(sol, vec![s(3), s(5)]);
        let bad: Row = vec![s(3), s(5), s(9)];
        assert!(solve_columns(&cols, &bad).is_none());
    }
}
