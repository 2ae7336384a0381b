use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{det_bareiss, IntMatrix};
use crate::error::{Error, Result};

pub const DEFAULT_MINOR_CAP: u128 = 2_000_000;

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc.saturating_mul((n - i) as u128) / (i as u128 + 1))
}

/// Advances `idx` to the next k-combination of `0..n` in lexicographic order.
fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    for i in (0..k).rev() {
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// `γ_1, …, γ_max_order` as gcds of all k×k minors.
pub fn determinantal_divisors_bruteforce(m: &IntMatrix, max_order: usize) -> Result<Vec<BigInt>> {
    determinantal_divisors_bruteforce_with_cap(m, max_order, DEFAULT_MINOR_CAP)
}

pub fn determinantal_divisors_bruteforce_with_cap(
    m: &IntMatrix,
    max_order: usize,
    cap: u128,
) -> Result<Vec<BigInt>> {
    let (r, c) = (m.rows(), m.cols());
    if max_order > r.min(c) {
        return Err(Error::IndexOutOfRange { index: max_order, limit: r.min(c) });
    }
    for k in 1..=max_order {
        let needed = binomial(r, k).saturating_mul(binomial(c, k));
        if needed > cap {
            return Err(Error::EnumerationLimit { needed, cap });
        }
    }
    let mut out = Vec::with_capacity(max_order);
    for k in 1..=max_order {
        let mut g = BigInt::zero();
        let mut rows: Vec<usize> = (0..k).collect();
        'outer: loop {
            let mut cols: Vec<usize> = (0..k).collect();
            loop {
                let d = det_bareiss(&m.select(&rows, &cols))?;
                g = g.gcd(&d);
                if g.is_one() {
                    break 'outer;
                }
                if !next_combination(&mut cols, c) {
                    break;
                }
            }
            if !next_combination(&mut rows, r) {
                break;
            }
        }
        out.push(g.abs());
    }
    Ok(out)
}
