//! Row reduction shared by matrices, subspaces and matrix spaces.

use valued_field::FieldElement;

use crate::Vector;

/// Reduced row-echelon form of `rows` in place; returns the pivot columns.
///
/// Zero rows are dropped, so on return `rows.len()` is the rank and
/// `rows[i]` has a 1 in column `pivots[i]` and zeros in all other pivot
/// columns.
pub(crate) fn rref(rows: &mut Vec<Vector>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(k) = (r..rows.len()).find(|&k| !rows[k][c].is_zero()) else {
            continue;
        };
        rows.swap(r, k);
        let inv = rows[r][c].inv().expect("pivot is nonzero");
        if !inv.is_one() {
            rows[r] = rows[r].iter().map(|x| x * &inv).collect();
        }
        for k in 0..rows.len() {
            if k == r || rows[k][c].is_zero() {
                continue;
            }
            let f = rows[k][c].clone();
            let (pivot_row, other) = if k < r {
                let (a, b) = rows.split_at_mut(r);
                (&b[0], &mut a[k])
            } else {
                let (a, b) = rows.split_at_mut(k);
                (&a[r], &mut b[0])
            };
            for (x, y) in other.iter_mut().zip(pivot_row) {
                if !y.is_zero() {
                    *x = &*x - &(&f * y);
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

/// A basis of `{x : rows * x = 0}` where `rows` has `ncols` columns.
///
/// The basis is canonical: one vector per free column, with a 1 in that
/// column and zeros in the other free columns.
pub(crate) fn nullspace(rows: &[Vector], ncols: usize, zero: &FieldElement) -> Vec<Vector> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![zero.clone(); ncols];
            v[f] = FieldElement::one(zero.spec());
            for (row, &p) in m.iter().zip(&pivots) {
                v[p] = -&row[f];
            }
            v
        })
        .collect()
}
