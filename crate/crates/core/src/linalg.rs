//! Exact rational linear algebra in integer arithmetic.
//!
//! Implements the fraction-free Gauss-Jordan scheme (Bareiss-Montante): at
//! every step each non-pivot row is updated as
//! `(row * pivot - row[c] * pivot_row) / previous_pivot`, and the division
//! is exact because every intermediate entry is a minor of the original
//! matrix. All products are checked; overflowing 128 bits surfaces as
//! [`Error::ArithmeticOverflow`] rather than a wrong answer.
//!
//! Everything answers questions over the rationals. Kernel vectors are
//! returned as primitive integer vectors (content one, first nonzero entry
//! positive).

use num_integer::Integer;

use crate::error::{Error, Result};

/// Outcome of a fraction-free Gauss-Jordan pass.
struct Reduced {
    rows: Vec<Vec<i128>>,
    /// `(row, column)` of each pivot, in elimination order.
    pivots: Vec<(usize, usize)>,
    /// The last pivot value; every pivot row carries it at its pivot column.
    /// `1` when there are no pivots.
    denom: i128,
}

fn checked_mul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or(Error::ArithmeticOverflow)
}

fn checked_sub(a: i128, b: i128) -> Result<i128> {
    a.checked_sub(b).ok_or(Error::ArithmeticOverflow)
}

/// Runs the elimination with pivots restricted to the first `pivot_cols`
/// columns; trailing columns are carried along (used for consistency
/// checks with a right-hand side in the last column).
fn eliminate(mut m: Vec<Vec<i128>>, pivot_cols: usize) -> Result<Reduced> {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    debug_assert!(m.iter().all(|r| r.len() == ncols));
    debug_assert!(pivot_cols <= ncols);
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut prev: i128 = 1;
    let mut next_row = 0;
    for c in 0..pivot_cols {
        let Some(pr) = (next_row..nrows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(next_row, pr);
        let p = m[next_row][c];
        for i in 0..nrows {
            if i == next_row {
                continue;
            }
            let factor = m[i][c];
            for j in 0..ncols {
                let t1 = checked_mul(m[i][j], p)?;
                let t2 = checked_mul(factor, m[next_row][j])?;
                let num = checked_sub(t1, t2)?;
                debug_assert_eq!(num % prev, 0, "fraction-free division must be exact");
                m[i][j] = num / prev;
            }
        }
        pivots.push((next_row, c));
        prev = p;
        next_row += 1;
        if next_row == nrows {
            break;
        }
    }
    Ok(Reduced {
        rows: m,
        pivots,
        denom: prev,
    })
}

/// Rank over the rationals.
#[cfg(test)]
pub(crate) fn rank(matrix: &[Vec<i128>]) -> Result<usize> {
    let ncols = matrix.first().map_or(0, Vec::len);
    Ok(eliminate(matrix.to_vec(), ncols)?.pivots.len())
}

/// Divides a vector by its content and makes the first nonzero entry
/// positive; the zero vector passes through.
fn normalize_primitive(v: &mut [i128]) {
    let content = v.iter().fold(0i128, |acc, &x| acc.gcd(&x));
    if content > 1 {
        for x in v.iter_mut() {
            *x /= content;
        }
    }
    if let Some(first) = v.iter().find(|&&x| x != 0) {
        if *first < 0 {
            for x in v.iter_mut() {
                *x = -*x;
            }
        }
    }
}

/// A basis of the rational kernel `{v : matrix . v = 0}` as primitive
/// integer vectors, one per free column, in ascending column order.
/// `ncols` disambiguates the width when `matrix` has no rows.
pub(crate) fn kernel_basis(matrix: &[Vec<i128>], ncols: usize) -> Result<Vec<Vec<i128>>> {
    debug_assert!(matrix.iter().all(|r| r.len() == ncols));
    if matrix.is_empty() {
        return Ok((0..ncols)
            .map(|f| {
                let mut v = vec![0i128; ncols];
                v[f] = 1;
                v
            })
            .collect());
    }
    let red = eliminate(matrix.to_vec(), ncols)?;
    let mut is_pivot_col = vec![false; ncols];
    for &(_, c) in &red.pivots {
        is_pivot_col[c] = true;
    }
    let mut basis = Vec::with_capacity(ncols - red.pivots.len());
    for f in (0..ncols).filter(|&c| !is_pivot_col[c]) {
        let mut v = vec![0i128; ncols];
        v[f] = red.denom;
        for &(r, c) in &red.pivots {
            v[c] = -red.rows[r][f];
        }
        normalize_primitive(&mut v);
        basis.push(v);
    }
    Ok(basis)
}
