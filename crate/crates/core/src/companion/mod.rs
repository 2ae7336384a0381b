//! Companion matrices, elements `f(C_g)` of the companion ring, and the
//! structural Smith pipeline built on them.

mod nonunit;
mod pipeline;
mod reduce;

pub use nonunit::{gamma_second_last_is_unit, nonunit_count, nonunit_lower_bound};
pub use pipeline::{smith_fast, smith_fast_traced, FastTrace};
pub use reduce::{compose_reduce, split_f, split_g, swap_reduce, CompositionReduction};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::{factor_integer, monic_gcd, resultant, IntPoly};
use crate::error::{Error, Result};
use crate::matrix::{solve_row_exact, IntMatrix};

fn deg(f: &IntPoly) -> usize {
    f.degree().finite().unwrap_or(0)
}

/// `C_g`: negated coefficients `-g_{n-1}, …, -g_0` along the top row and
/// ones on the subdiagonal.
pub fn companion_matrix(g: &IntPoly) -> Result<IntMatrix> {
    g.require_monic()?;
    let n = deg(g);
    if n == 0 {
        return Err(Error::InvalidInput("companion matrix needs deg g >= 1".into()));
    }
    let mut c = IntMatrix::zeros(n, n);
    for j in 0..n {
        c.set(0, j, -g.coeff(n - 1 - j));
    }
    for i in 1..n {
        c.set(i, i - 1, BigInt::one());
    }
    Ok(c)
}

/// `φ(C_g)` for monic `g` and `deg φ < deg g`. The bottom row is `φ` reversed;
/// each row above is the row below multiplied by `t` and reduced mod `g`.
pub fn element_matrix(phi: &IntPoly, g: &IntPoly) -> IntMatrix {
    let n = deg(g);
    let mut out = IntMatrix::zeros(n, n);
    let mut r: Vec<BigInt> = (0..n).map(|k| phi.coeff(k)).collect();
    for i in (0..n).rev() {
        for (j, c) in r.iter().enumerate() {
            out.set(i, n - 1 - j, c.clone());
        }
        if i == 0 {
            break;
        }
        let top = r[n - 1].clone();
        for k in (1..n).rev() {
            r[k] = &r[k - 1] - &top * g.coeff(k);
        }
        r[0] = -&top * g.coeff(0);
    }
    out
}

/// An element `f(C_g)` stored through its residue `φ = f mod g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompanionElement {
    g: IntPoly,
    phi: IntPoly,
    original_f: Option<IntPoly>,
}

impl CompanionElement {
    pub fn new(f: &IntPoly, g: &IntPoly) -> Result<Self> {
        g.require_monic()?;
        let phi = f.rem(g)?;
        Ok(CompanionElement { g: g.clone(), phi, original_f: Some(f.clone()) })
    }

    pub fn g(&self) -> &IntPoly {
        &self.g
    }

    pub fn phi(&self) -> &IntPoly {
        &self.phi
    }

    pub fn original_f(&self) -> Option<&IntPoly> {
        self.original_f.as_ref()
    }

    pub fn dim(&self) -> usize {
        deg(&self.g)
    }

    pub fn to_matrix(&self) -> IntMatrix {
        element_matrix(&self.phi, &self.g)
    }

    /// `γ_1(f(C_g))`: the content of the residue.
    pub fn gamma_first(&self) -> BigInt {
        self.phi.content()
    }
}

pub fn element(f: &IntPoly, g: &IntPoly) -> Result<CompanionElement> {
    CompanionElement::new(f, g)
}

pub fn to_matrix(e: &CompanionElement) -> IntMatrix {
    e.to_matrix()
}

pub fn gamma_first(e: &CompanionElement) -> BigInt {
    e.gamma_first()
}

/// `f = z·F`, `g = z·G` with `z` the monic gcd.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GcdSplit {
    pub z: IntPoly,
    pub f_cofactor: IntPoly,
    pub g_cofactor: IntPoly,
}

impl GcdSplit {
    /// `deg G`, the rank of `f(C_g)`.
    pub fn rank(&self) -> usize {
        deg(&self.g_cofactor)
    }

    pub fn zero_count(&self) -> usize {
        deg(&self.z)
    }
}

pub fn gcd_split(f: &IntPoly, g: &IntPoly) -> Result<GcdSplit> {
    g.require_monic()?;
    let z = monic_gcd(f, g)?;
    let f_cofactor = f.div_exact(&z).expect("gcd divides f");
    let g_cofactor = g.div_exact(&z).expect("gcd divides g");
    Ok(GcdSplit { z, f_cofactor, g_cofactor })
}

/// `γ_r = |res(F, G)|`, the last nonzero determinantal divisor.
pub fn gamma_last(split: &GcdSplit) -> Result<BigInt> {
    if split.f_cofactor.is_zero() {
        return Err(Error::ZeroNumerator);
    }
    Ok(resultant(&split.f_cofactor, &split.g_cofactor)?.abs())
}

/// `γ_{r-1} = cont(Q)` where `Q·F ≡ res(F, G) mod G`. `Q` is read off the row
/// solution of `x·F(C_G) = det·e_r`, which is the bottom row of the adjugate.
pub fn gamma_second_last(split: &GcdSplit) -> Result<BigInt> {
    if split.f_cofactor.is_zero() {
        return Err(Error::ZeroNumerator);
    }
    let r = split.rank();
    if r <= 1 {
        return Ok(BigInt::one());
    }
    let phi = split.f_cofactor.rem(&split.g_cofactor)?;
    let m = element_matrix(&phi, &split.g_cofactor);
    let det = crate::matrix::det_bareiss(&m)?;
    if det.is_zero() {
        return Err(Error::NotCoprime);
    }
    let mut rhs = vec![BigInt::zero(); r];
    rhs[r - 1] = det;
    let x = solve_row_exact(&m, &rhs)?;
    let mut g = BigInt::zero();
    for v in &x {
        assert!(v.is_integer(), "adjugate row is not integral: {v}");
        g = num_integer::Integer::gcd(&g, v.numer());
    }
    Ok(g)
}

/// Determinantal data available without a full Smith computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaProfile {
    pub rank: usize,
    pub gamma_first: BigInt,
    pub gamma_last: BigInt,
    pub gamma_second_last: Option<BigInt>,
    pub nonunit_count: Option<usize>,
}

/// Collects `γ_1`, `γ_{r-1}`, `γ_r` and, when `γ_r` factors within `budget`,
/// the non-unit count. The `γ` values refer to `F(C_G)` except `γ_1`, which is
/// that of `f(C_g)`.
pub fn gamma_profile(f: &IntPoly, g: &IntPoly, budget: u64) -> Result<GammaProfile> {
    let e = element(f, g)?;
    let split = gcd_split(e.phi(), g)?;
    let gamma_last = gamma_last(&split)?;
    let gamma_second_last = (split.rank() >= 1).then(|| gamma_second_last(&split)).transpose()?;
    let nonunit_count = match nonunit_count(f, g, budget) {
        Ok(k) => Some(k),
        Err(Error::FactorizationLimit(_)) => None,
        Err(e) => return Err(e),
    };
    Ok(GammaProfile { rank: split.rank(), gamma_first: e.gamma_first(), gamma_last, gamma_second_last, nonunit_count })
}

pub(crate) fn prime_divisors(n: &BigInt, budget: u64) -> Result<Vec<BigInt>> {
    if n.abs() <= BigInt::one() {
        return Ok(Vec::new());
    }
    Ok(factor_integer(n, budget)?.primes().cloned().collect())
}
