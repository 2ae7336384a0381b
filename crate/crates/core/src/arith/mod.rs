//! Integer and polynomial arithmetic over `Z` and `F_p`.

mod factor;
mod gcd;
mod modp;
mod parse;
mod poly;

pub use factor::{factor_integer, is_prime, Factorization, DEFAULT_FACTOR_BUDGET};
pub use gcd::monic_gcd;
pub use modp::{gcd_mod_p, reduce_mod_p, ModPoly};
pub use parse::parse_poly;
pub use poly::{Degree, IntPoly};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::companion::element_matrix;
use crate::error::Result;
use crate::matrix::{det_bareiss, IntMatrix};

/// Content of `f`: the non-negative gcd of its coefficients.
pub fn content(f: &IntPoly) -> BigInt {
    f.content()
}

pub fn poly_divmod(f: &IntPoly, g: &IntPoly) -> Result<(IntPoly, IntPoly)> {
    f.div_rem(g)
}

pub fn poly_compose(f: &IntPoly, h: &IntPoly) -> IntPoly {
    f.compose(h)
}

pub fn horner_shift(h: &IntPoly, k: usize) -> Result<IntPoly> {
    h.horner_shift(k)
}

/// `det f(C_g)` for monic `g`, i.e. the product of `f(θ)` over the roots of `g`.
pub fn resultant(f: &IntPoly, g: &IntPoly) -> Result<BigInt> {
    g.require_monic()?;
    let phi = f.rem(g)?;
    let m = element_matrix(&phi, g);
    Ok(det_bareiss(&m).expect("companion elements are square"))
}

/// Sylvester matrix of `f` (degree m) and `g` (degree n), size (m+n)x(m+n).
/// Rows of shifted `f` coefficients come first, highest degree on the left.
pub fn sylvester_matrix(f: &IntPoly, g: &IntPoly) -> IntMatrix {
    let m = f.degree().finite().unwrap_or(0);
    let n = g.degree().finite().unwrap_or(0);
    let size = m + n;
    let mut out = IntMatrix::zeros(size, size);
    for i in 0..n {
        for (k, c) in f.coeffs().iter().enumerate() {
            out.set(i, i + m - k, c.clone());
        }
    }
    for i in 0..m {
        for (k, c) in g.coeffs().iter().enumerate() {
            out.set(n + i, i + n - k, c.clone());
        }
    }
    out
}

/// Resultant through the Sylvester determinant. Unlike [`resultant`] it
/// accepts non-monic `g`; the two agree up to sign for monic `g`.
pub fn sylvester_resultant(f: &IntPoly, g: &IntPoly) -> BigInt {
    if f.is_zero() || g.is_zero() {
        return BigInt::zero();
    }
    det_bareiss(&sylvester_matrix(f, g)).expect("square")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    /// Product of `f` over the n-th roots of unity in floating point;
    /// independent of the matrix route.
    fn prod_over_roots_of_unity(f: &[i64], n: usize) -> f64 {
        let mut re = 1.0f64;
        let mut im = 0.0f64;
        for j in 0..n {
            let ang = 2.0 * std::f64::consts::PI * j as f64 / n as f64;
            let (mut vr, mut vi) = (0.0, 0.0);
            for (k, &c) in f.iter().enumerate() {
                vr += c as f64 * (ang * k as f64).cos();
                vi += c as f64 * (ang * k as f64).sin();
            }
            let nr = re * vr - im * vi;
            im = re * vi + im * vr;
            re = nr;
        }
        assert!(im.abs() < 1e-6);
        re
    }

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn resultant_examples() {
        let g4 = IntPoly::binomial(4, -1);
        let r = resultant(&p(&[1, 3, -2]), &g4).unwrap();
        assert_eq!(r, BigInt::from(-144));
        assert!(resultant(&p(&[-1, 1]), &IntPoly::binomial(7, -1)).unwrap().is_zero());
        // brute-force root product: (1-2)(w-2)(w^2-2) = -7
        let brute = prod_over_roots_of_unity(&[-2, 1], 3);
        assert!((brute + 7.0).abs() < 1e-9);
        assert_eq!(resultant(&p(&[-2, 1]), &IntPoly::binomial(3, -1)).unwrap(), BigInt::from(-7));
        assert!(resultant(&p(&[1]), &p(&[1, 2])).is_err());
    }

    #[test]
    fn resultant_matches_root_product() {
        let cases: &[(&[i64], usize)] = &[(&[1, 3, -2], 4), (&[2, 1, 1], 3), (&[-1, -1, 1], 5), (&[1, 1, 0, 1], 6)];
        for &(f, n) in cases {
            let exact = resultant(&p(f), &IntPoly::binomial(n, -1)).unwrap();
            let approx = prod_over_roots_of_unity(f, n);
            assert!((approx - exact.to_string().parse::<f64>().unwrap()).abs() < 1e-6, "{f:?} {n}");
        }
    }

    #[test]
    fn sylvester_agrees_up_to_sign() {
        let f = p(&[1, 3, -2]);
        let g = IntPoly::binomial(4, -1);
        let a = resultant(&f, &g).unwrap();
        let b = sylvester_resultant(&f, &g);
        assert_eq!(a.abs(), b.abs());
        // non-monic g: res(t - 1, 2t - 1) = ±(1/2 - 1)·2 = ±1
        assert_eq!(sylvester_resultant(&p(&[-1, 1]), &p(&[-1, 2])).abs(), BigInt::from(1));
    }
}
