//! Exact integer linear algebra for small square matrices.
//!
//! Determinants and linear solves use fraction-free (Bareiss) elimination on
//! `i128` followed by rational back-substitution, so no intermediate value is
//! ever rounded. All matrices in scope are tiny (n <= 6), so asymptotics are
//! irrelevant; overflow is checked and reported rather than assumed away.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::rational::Rat;

fn overflow() -> Error {
    Error::Internal("integer overflow during exact elimination".into())
}

fn checked_mul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or_else(overflow)
}

fn checked_sub(a: i128, b: i128) -> Result<i128> {
    a.checked_sub(b).ok_or_else(overflow)
}

/// Determinant by Bareiss elimination. Exact for any integer matrix.
pub fn determinant(matrix: &[Vec<i128>]) -> Result<i128> {
    let n = matrix.len();
    if n == 0 {
        return Ok(1);
    }
    debug_assert!(matrix.iter().all(|row| row.len() == n));
    let mut m: Vec<Vec<i128>> = matrix.to_vec();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return Ok(0),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = checked_sub(
                    checked_mul(m[i][j], m[k][k])?,
                    checked_mul(m[i][k], m[k][j])?,
                )?;
                // Bareiss: division by the previous pivot is exact.
                m[i][j] = num / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    Ok(sign * m[n - 1][n - 1])
}

/// Solve `A x = b` exactly. Returns `None` when `A` is singular.
pub fn solve(matrix: &[Vec<i128>], rhs: &[i128]) -> Result<Option<Vec<Rat>>> {
    let n = matrix.len();
    debug_assert_eq!(rhs.len(), n);
    let det = determinant(matrix)?;
    if det == 0 {
        return Ok(None);
    }
    // Cramer's rule, one Bareiss determinant per column. For n <= 6 this is
    // a handful of microseconds and keeps every intermediate an integer.
    let mut solution = Vec::with_capacity(n);
    for col in 0..n {
        let mut m = matrix.to_vec();
        for (row, entry) in m.iter_mut().zip(rhs) {
            row[col] = *entry;
        }
        let num = determinant(&m)?;
        solution.push(ratio_to_rat(Ratio::new(num, det))?);
    }
    Ok(Some(solution))
}

/// Columns of `A^{-1}` as exact rationals. `None` when singular.
pub fn inverse_columns(matrix: &[Vec<i128>]) -> Result<Option<Vec<Vec<Rat>>>> {
    let n = matrix.len();
    let mut columns = Vec::with_capacity(n);
    for j in 0..n {
        let mut unit = vec![0i128; n];
        unit[j] = 1;
        match solve(matrix, &unit)? {
            Some(col) => columns.push(col),
            None => return Ok(None),
        }
    }
    Ok(Some(columns))
}

fn ratio_to_rat(value: Ratio<i128>) -> Result<Rat> {
    let numer = i64::try_from(*value.numer()).map_err(|_| overflow())?;
    let denom = i64::try_from(*value.denom()).map_err(|_| overflow())?;
    Ok(Rat::new(numer, denom))
}
