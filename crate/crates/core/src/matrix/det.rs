use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::IntMatrix;
use crate::error::{Error, Result};

fn require_square(m: &IntMatrix) -> Result<()> {
    if m.is_square() {
        Ok(())
    } else {
        Err(Error::NotSquare { rows: m.rows(), cols: m.cols() })
    }
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn det_bareiss(m: &IntMatrix) -> Result<BigInt> {
    require_square(m)?;
    let n = m.rows();
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a = m.to_rows();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    negate = !negate;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { -d } else { d })
}

/// Classical adjugate (transposed cofactor matrix), so `adj(M)·M = det(M)·I`.
pub fn adjugate(m: &IntMatrix) -> Result<IntMatrix> {
    require_square(m)?;
    let n = m.rows();
    if n == 0 {
        return Err(Error::InvalidInput("adjugate of an empty matrix".into()));
    }
    if n == 1 {
        return Ok(IntMatrix::identity(1));
    }
    let mut out = IntMatrix::zeros(n, n);
    let all: Vec<usize> = (0..n).collect();
    for i in 0..n {
        let rows: Vec<usize> = all.iter().copied().filter(|&r| r != i).collect();
        for j in 0..n {
            let cols: Vec<usize> = all.iter().copied().filter(|&c| c != j).collect();
            let minor = det_bareiss(&m.select(&rows, &cols))?;
            let cof = if (i + j) % 2 == 0 { minor } else { -minor };
            out.set(j, i, cof);
        }
    }
    Ok(out)
}

/// Solves `x · M = rhs` for the row vector `x` over the rationals.
pub fn solve_row_exact(m: &IntMatrix, rhs: &[BigInt]) -> Result<Vec<BigRational>> {
    require_square(m)?;
    let n = m.rows();
    if rhs.len() != n {
        return Err(Error::ShapeMismatch(format!("rhs has length {}, expected {n}", rhs.len())));
    }
    // x M = rhs  <=>  M^T x^T = rhs^T; eliminate on [M^T | rhs].
    let mut a: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let mut row: Vec<BigInt> = (0..n).map(|j| m.get(j, i).clone()).collect();
            row.push(rhs[i].clone());
            row
        })
        .collect();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let i = (k + 1..n).find(|&i| !a[i][k].is_zero()).ok_or(Error::SingularMatrix)?;
            a.swap(i, k);
        }
        for i in k + 1..n {
            for j in k + 1..=n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let mut x = vec![BigRational::zero(); n];
    for i in (0..n).rev() {
        let mut acc = BigRational::from_integer(a[i][n].clone());
        for j in i + 1..n {
            acc -= BigRational::from_integer(a[i][j].clone()) * &x[j];
        }
        x[i] = acc / BigRational::from_integer(a[i][i].clone());
    }
    Ok(x)
}
