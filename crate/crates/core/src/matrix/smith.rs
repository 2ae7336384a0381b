use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{det_bareiss, IntMatrix};
use crate::error::{Error, Result};

/// Smith normal form data: invariant factors in a divisor chain, the matching
/// determinantal divisors, and optionally unimodular `U`, `V` with `U·M·V = D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub invariant_factors: Vec<BigInt>,
    pub determinantal_divisors: Vec<BigInt>,
    pub rank: usize,
    pub transforms: Option<(IntMatrix, IntMatrix)>,
}

impl SmithDecomposition {
    /// Wraps an already canonical chain; panics if the chain is malformed.
    pub fn from_invariant_factors(invariant_factors: Vec<BigInt>) -> Self {
        assert!(is_divisor_chain(&invariant_factors), "not a Smith chain: {invariant_factors:?}");
        let rank = invariant_factors.iter().take_while(|s| !s.is_zero()).count();
        let mut acc = BigInt::one();
        let determinantal_divisors = invariant_factors
            .iter()
            .map(|s| {
                acc *= s;
                acc.clone()
            })
            .collect();
        SmithDecomposition { invariant_factors, determinantal_divisors, rank, transforms: None }
    }

    /// Number of invariant factors that are not ±1, zeros included.
    pub fn nonunit_count(&self) -> usize {
        self.invariant_factors.iter().filter(|s| !s.is_one()).count()
    }

    pub fn zero_count(&self) -> usize {
        self.invariant_factors.len() - self.rank
    }
}

fn is_divisor_chain(s: &[BigInt]) -> bool {
    s.iter().all(|x| !x.is_negative())
        && s.windows(2).all(|w| if w[0].is_zero() { w[1].is_zero() } else { w[1].is_multiple_of(&w[0]) })
}

/// Canonical Smith chain of a diagonal matrix with the given entries.
pub fn smith_from_diagonal(diag: &[BigInt]) -> SmithDecomposition {
    let mut d: Vec<BigInt> = diag.iter().map(Signed::abs).collect();
    // pairwise gcd/lcm exchange; zeros behave as the lattice top
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            let (a, b) = (&d[i], &d[j]);
            let g = a.gcd(b);
            let l = if a.is_zero() || b.is_zero() { BigInt::zero() } else { a.lcm(b) };
            d[i] = g;
            d[j] = l;
        }
    }
    SmithDecomposition::from_invariant_factors(d)
}

struct Work {
    a: Vec<Vec<BigInt>>,
    u: Option<Vec<Vec<BigInt>>>,
    v: Option<Vec<Vec<BigInt>>>,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap(i, j);
        if let Some(u) = &mut self.u {
            u.swap(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for row in &mut self.a {
            row.swap(i, j);
        }
        if let Some(v) = &mut self.v {
            for row in v {
                row.swap(i, j);
            }
        }
    }

    /// row_i -= q·row_k
    fn row_axpy(&mut self, i: usize, k: usize, q: &BigInt, from: usize) {
        let (src, dst) = pick(&mut self.a, k, i);
        for j in from..src.len() {
            if !src[j].is_zero() {
                dst[j] -= q * &src[j];
            }
        }
        if let Some(u) = &mut self.u {
            let (src, dst) = pick(u, k, i);
            for j in 0..src.len() {
                dst[j] -= q * &src[j];
            }
        }
    }

    /// col_j -= q·col_k
    fn col_axpy(&mut self, j: usize, k: usize, q: &BigInt, from: usize) {
        for row in self.a.iter_mut().skip(from) {
            if !row[k].is_zero() {
                let d = q * &row[k];
                row[j] -= d;
            }
        }
        if let Some(v) = &mut self.v {
            for row in v.iter_mut() {
                let d = q * &row[k];
                row[j] -= d;
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in &mut self.a[i] {
            *x = -&*x;
        }
        if let Some(u) = &mut self.u {
            for x in &mut u[i] {
                *x = -&*x;
            }
        }
    }
}

fn pick<T>(rows: &mut [T], src: usize, dst: usize) -> (&T, &mut T) {
    assert_ne!(src, dst);
    if src < dst {
        let (lo, hi) = rows.split_at_mut(dst);
        (&lo[src], &mut hi[0])
    } else {
        let (lo, hi) = rows.split_at_mut(src);
        (&hi[0], &mut lo[dst])
    }
}

/// Classical Smith normal form by elimination with minimal-magnitude pivots.
pub fn smith_form(m: &IntMatrix, want_transforms: bool) -> SmithDecomposition {
    let (rows, cols) = (m.rows(), m.cols());
    let ident = |n: usize| IntMatrix::identity(n).to_rows();
    let mut w = Work {
        a: m.to_rows(),
        u: want_transforms.then(|| ident(rows)),
        v: want_transforms.then(|| ident(cols)),
    };
    let steps = rows.min(cols);
    let mut rank = steps;
    for t in 0..steps {
        // global minimal pivot in the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                let x = &w.a[i][j];
                if !x.is_zero() && best.is_none_or(|(bi, bj)| x.magnitude() < w.a[bi][bj].magnitude()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else {
            rank = t;
            break;
        };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if !w.a[i][t].is_zero() {
                    let q = &w.a[i][t] / &w.a[t][t];
                    if !q.is_zero() {
                        w.row_axpy(i, t, &q, t);
                    }
                    dirty |= !w.a[i][t].is_zero();
                }
            }
            for j in t + 1..cols {
                if !w.a[t][j].is_zero() {
                    let q = &w.a[t][j] / &w.a[t][t];
                    if !q.is_zero() {
                        w.col_axpy(j, t, &q, t);
                    }
                    dirty |= !w.a[t][j].is_zero();
                }
            }
            if dirty {
                // a remainder smaller than the pivot appeared; move it in
                let mut best = (t, t);
                for i in t + 1..rows {
                    if !w.a[i][t].is_zero() && w.a[i][t].magnitude() < w.a[best.0][best.1].magnitude() {
                        best = (i, t);
                    }
                }
                for j in t + 1..cols {
                    if !w.a[t][j].is_zero() && w.a[t][j].magnitude() < w.a[best.0][best.1].magnitude() {
                        best = (t, j);
                    }
                }
                if best.0 != t {
                    w.swap_rows(t, best.0);
                } else if best.1 != t {
                    w.swap_cols(t, best.1);
                }
                continue;
            }
            let p = w.a[t][t].clone();
            let bad = (t + 1..rows).find(|&i| w.a[i][t + 1..].iter().any(|x| !x.is_multiple_of(&p)));
            match bad {
                Some(i) => {
                    w.row_axpy(t, i, &-BigInt::one(), t);
                }
                None => break,
            }
        }
        if w.a[t][t].is_negative() {
            w.negate_row(t);
        }
    }
    let invariant_factors: Vec<BigInt> =
        (0..steps).map(|i| if i < rank { w.a[i][i].clone() } else { BigInt::zero() }).collect();
    let mut out = SmithDecomposition::from_invariant_factors(invariant_factors);
    if let (Some(u), Some(v)) = (w.u, w.v) {
        let u = IntMatrix::from_rows(u).expect("square");
        let v = IntMatrix::from_rows(v).expect("square");
        verify_transforms(m, &u, &v, &out.invariant_factors);
        out.transforms = Some((u, v));
    }
    out
}

fn verify_transforms(m: &IntMatrix, u: &IntMatrix, v: &IntMatrix, diag: &[BigInt]) {
    let unimodular = |x: &IntMatrix| det_bareiss(x).map(|d| d.abs().is_one()).unwrap_or(false);
    assert!(unimodular(u) && unimodular(v), "Smith transforms are not unimodular");
    let d = IntMatrix::diagonal(m.rows(), m.cols(), diag);
    assert_eq!(&(u * m) * v, d, "U·M·V differs from the Smith diagonal");
}

/// True iff `m` and `n` have the same invariant factors.
pub fn equivalent(m: &IntMatrix, n: &IntMatrix) -> Result<bool> {
    if (m.rows(), m.cols()) != (n.rows(), n.cols()) {
        return Err(Error::ShapeMismatch(format!(
            "{}x{} vs {}x{}",
            m.rows(),
            m.cols(),
            n.rows(),
            n.cols()
        )));
    }
    Ok(smith_form(m, false).invariant_factors == smith_form(n, false).invariant_factors)
}
