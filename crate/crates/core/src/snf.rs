//! Smith normal form over the integers with unimodular transform tracking.
//!
//! All intermediate arithmetic uses arbitrary-precision integers; entry
//! growth during elimination never wraps. The transforms satisfy
//! `U * A * V = S` with `U`, `V` products of elementary integer operations,
//! hence unimodular.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Result of a Smith normal form computation for an `r x c` matrix.
#[derive(Debug, Clone)]
pub struct SmithNormalForm {
    pub rank: usize,
    /// Nonzero invariant factors `d_1 | d_2 | ... | d_rank`, all positive.
    pub diagonal: Vec<BigInt>,
    /// `U`, an `r x r` unimodular matrix.
    pub left: Vec<Vec<BigInt>>,
    /// `V`, a `c x c` unimodular matrix.
    pub right: Vec<Vec<BigInt>>,
}

fn to_big(a: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    a.iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

fn identity(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect()
}

/// Computes `U A V = S` with `S` in Smith normal form.
pub fn smith_normal_form(a: &[Vec<i64>]) -> SmithNormalForm {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    debug_assert!(a.iter().all(|r| r.len() == cols));
    let mut m = to_big(a);
    let mut u = identity(rows);
    let mut v = identity(cols);

    let mut t = 0usize;
    while t < rows.min(cols) {
        let Some((pr, pc)) = pivot_position(&m, t) else {
            break;
        };
        swap_rows(&mut m, &mut u, t, pr);
        swap_cols(&mut m, &mut v, t, pc);

        loop {
            // Clear column t below and above the pivot.
            let mut dirty = false;
            for i in 0..rows {
                if i != t && !m[i][t].is_zero() {
                    let q = div_nearest(&m[i][t], &m[t][t]);
                    if !q.is_zero() {
                        row_sub(&mut m, &mut u, i, t, &q);
                    }
                    if !m[i][t].is_zero() {
                        // Remainder smaller than the pivot: swap it up and
                        // restart with the smaller pivot.
                        swap_rows(&mut m, &mut u, t, i);
                        dirty = true;
                    }
                }
            }
            for j in 0..cols {
                if j != t && !m[t][j].is_zero() {
                    let q = div_nearest(&m[t][j], &m[t][t]);
                    if !q.is_zero() {
                        col_sub(&mut m, &mut v, j, t, &q);
                    }
                    if !m[t][j].is_zero() {
                        swap_cols(&mut m, &mut v, t, j);
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue;
            }
            // Pivot now divides its whole row and column (both are zero).
            // Enforce divisibility of the remaining block.
            match first_nondivisible(&m, t) {
                Some((i, _)) => {
                    // Add row i to row t; its entries are not all divisible
                    // by the pivot, so the reduction loop will shrink it.
                    let minus_one = -BigInt::one();
                    row_sub(&mut m, &mut u, t, i, &minus_one);
                }
                None => break,
            }
        }
        if m[t][t].is_negative() {
            negate_row(&mut m, &mut u, t);
        }
        t += 1;
    }

    let rank = t;
    let diagonal: Vec<BigInt> = (0..rank).map(|i| m[i][i].clone()).collect();
    for w in diagonal.windows(2) {
        debug_assert!(
            (&w[1] % &w[0]).is_zero(),
            "invariant factors must divide in order"
        );
    }
    SmithNormalForm {
        rank,
        diagonal,
        left: u,
        right: v,
    }
}

/// Entry of smallest nonzero absolute value in the trailing block.
fn pivot_position(m: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in m.iter().enumerate().skip(t) {
        for (j, x) in row.iter().enumerate().skip(t) {
            if x.is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if m[bi][bj].abs() <= x.abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

/// Quotient rounded to nearest, so remainders satisfy `|r| <= |d|/2`.
fn div_nearest(n: &BigInt, d: &BigInt) -> BigInt {
    let (mut q, r) = n.div_rem(d);
    if r.abs() * 2 > d.abs() {
        if (n.is_negative()) == (d.is_negative()) {
            q += 1;
        } else {
            q -= 1;
        }
    }
    q
}

fn swap_rows(m: &mut [Vec<BigInt>], u: &mut [Vec<BigInt>], a: usize, b: usize) {
    if a != b {
        m.swap(a, b);
        u.swap(a, b);
    }
}

fn swap_cols(m: &mut [Vec<BigInt>], v: &mut [Vec<BigInt>], a: usize, b: usize) {
    if a != b {
        for row in m.iter_mut() {
            row.swap(a, b);
        }
        for row in v.iter_mut() {
            row.swap(a, b);
        }
    }
}

/// `row_i -= q * row_t` on the working matrix and on `U`.
fn row_sub(m: &mut [Vec<BigInt>], u: &mut [Vec<BigInt>], i: usize, t: usize, q: &BigInt) {
    for j in 0..m[i].len() {
        let delta = q * &m[t][j];
        m[i][j] -= delta;
    }
    for j in 0..u[i].len() {
        let delta = q * &u[t][j];
        u[i][j] -= delta;
    }
}

/// `col_j -= q * col_t` on the working matrix and on `V`.
fn col_sub(m: &mut [Vec<BigInt>], v: &mut [Vec<BigInt>], j: usize, t: usize, q: &BigInt) {
    for row in m.iter_mut() {
        let delta = q * &row[t];
        row[j] -= delta;
    }
    for row in v.iter_mut() {
        let delta = q * &row[t];
        row[j] -= delta;
    }
}

fn negate_row(m: &mut [Vec<BigInt>], u: &mut [Vec<BigInt>], t: usize) {
    for x in m[t].iter_mut() {
        *x = -std::mem::take(x);
    }
    for x in u[t].iter_mut() {
        *x = -std::mem::take(x);
    }
}

/// First entry of the trailing block not divisible by the pivot.
fn first_nondivisible(m: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let p = &m[t][t];
    for (i, row) in m.iter().enumerate().skip(t + 1) {
        for (j, x) in row.iter().enumerate().skip(t + 1) {
            if !(x % p).is_zero() {
                return Some((i, j));
            }
        }
    }
    None
}

/// Solves `A x = b` over the integers, if possible.
///
/// With `U A V = S`, the system becomes `S y = U b`, solvable iff each
/// transformed entry is divisible by the matching invariant factor and the
/// entries beyond the rank vanish; then `x = V y`.
pub fn solve_integer(a: &[Vec<i64>], b: &[i64]) -> Result<Option<Vec<BigInt>>> {
    let rows = a.len();
    if b.len() != rows {
        return Err(Error::DimensionMismatch {
            left: rows,
            right: b.len(),
        });
    }
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let snf = smith_normal_form(a);
    let c: Vec<BigInt> = snf
        .left
        .iter()
        .map(|row| {
            row.iter()
                .zip(b)
                .map(|(u, &x)| u * BigInt::from(x))
                .sum::<BigInt>()
        })
        .collect();
    let mut y = vec![BigInt::zero(); cols];
    for (i, ci) in c.iter().enumerate() {
        if i < snf.rank {
            let (q, r) = ci.div_rem(&snf.diagonal[i]);
            if !r.is_zero() {
                return Ok(None);
            }
            y[i] = q;
        } else if !ci.is_zero() {
            return Ok(None);
        }
    }
    let x = (0..cols)
        .map(|i| {
            (0..cols)
                .map(|j| &snf.right[i][j] * &y[j])
                .sum::<BigInt>()
        })
        .collect();
    Ok(Some(x))
}
