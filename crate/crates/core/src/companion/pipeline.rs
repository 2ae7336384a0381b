use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::{deg, element_matrix, gamma_second_last, gcd_split, prime_divisors, GcdSplit};
use crate::arith::{monic_gcd, resultant, IntPoly};
use crate::error::{Error, Result};
use crate::matrix::{smith_form, smith_from_diagonal, SmithDecomposition};

/// Largest dimension at which the assembled answer is always compared with
/// the elimination oracle in debug builds.
const CROSS_CHECK_DIM: usize = 12;

/// Which reductions the pipeline applied, and how many blocks needed the
/// elimination oracle.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct FastTrace {
    pub steps: Vec<String>,
    pub oracle_blocks: usize,
    pub cross_checked: bool,
}

struct Ctx {
    budget: u64,
    trace: FastTrace,
}

/// Smith form of `f(C_g)` through structural reductions, falling back to
/// elimination only on blocks the reductions cannot resolve.
pub fn smith_fast(f: &IntPoly, g: &IntPoly, budget: u64) -> Result<SmithDecomposition> {
    smith_fast_traced(f, g, budget).map(|(s, _)| s)
}

pub fn smith_fast_traced(f: &IntPoly, g: &IntPoly, budget: u64) -> Result<(SmithDecomposition, FastTrace)> {
    g.require_monic()?;
    let n = deg(g);
    let mut ctx = Ctx { budget, trace: FastTrace::default() };
    let phi = f.rem(g)?;
    let s = if phi.is_zero() {
        ctx.trace.steps.push("zero residue".into());
        vec![BigInt::zero(); n]
    } else {
        let GcdSplit { z, f_cofactor, g_cofactor } = gcd_split(&phi, g)?;
        let zeros = deg(&z);
        if zeros > 0 {
            ctx.trace.steps.push(format!("gcd split: {zeros} zeros"));
        }
        let reduced = f_cofactor.rem(&g_cofactor)?;
        let mut s = block(&reduced, &g_cofactor, &mut ctx)?;
        s.extend(std::iter::repeat_n(BigInt::zero(), zeros));
        s
    };
    let out = SmithDecomposition::from_invariant_factors(s);
    if should_cross_check(n, &phi, g) {
        let oracle = smith_form(&element_matrix(&phi, g), false);
        assert_eq!(
            oracle.invariant_factors, out.invariant_factors,
            "structural Smith form disagrees with elimination for f = {f}, g = {g}"
        );
        ctx.trace.cross_checked = true;
    }
    Ok((out, ctx.trace))
}

fn should_cross_check(n: usize, phi: &IntPoly, g: &IntPoly) -> bool {
    if n > CROSS_CHECK_DIM {
        return false;
    }
    if cfg!(debug_assertions) {
        return true;
    }
    let mut h = DefaultHasher::new();
    phi.coeffs().hash(&mut h);
    g.coeffs().hash(&mut h);
    h.finish().is_multiple_of(16)
}

/// Smith chain of `φ(C_G)` with `G` monic and `res(φ, G) ≠ 0`.
fn block(phi: &IntPoly, g: &IntPoly, ctx: &mut Ctx) -> Result<Vec<BigInt>> {
    let r = deg(g);
    if r == 0 {
        return Ok(Vec::new());
    }
    let c = phi.content();
    debug_assert!(!c.is_zero());
    if !c.is_one() {
        ctx.trace.steps.push(format!("content {c} factored out"));
        let inner = block(&phi.div_exact_scalar(&c), g, ctx)?;
        return Ok(inner.into_iter().map(|x| x * &c).collect());
    }
    if deg(phi) == 0 {
        return Ok(vec![BigInt::one(); r]);
    }
    let gamma_r = resultant(phi, g)?.abs();
    if r == 1 {
        return Ok(vec![gamma_r]);
    }
    if gamma_r.is_one() {
        ctx.trace.steps.push("unit resultant".into());
        return Ok(vec![BigInt::one(); r]);
    }
    if phi.is_unit_leading() {
        let f = if phi.is_monic() { phi.clone() } else { -phi };
        let m = deg(&f);
        ctx.trace.steps.push(format!("swap: {} units", r - m));
        let mut out = vec![BigInt::one(); r - m];
        out.extend(block(&g.rem(&f)?, &f, ctx)?);
        return Ok(out);
    }
    if let Some(out) = try_split_g(phi, g, ctx)? {
        return Ok(out);
    }
    if let Some(out) = try_split_f(phi, g, ctx)? {
        return Ok(out);
    }
    let split = GcdSplit { z: IntPoly::one(), f_cofactor: phi.clone(), g_cofactor: g.clone() };
    let gamma_prev = gamma_second_last(&split)?;
    if gamma_prev.is_one() {
        ctx.trace.steps.push("second-last divisor is a unit".into());
        let mut out = vec![BigInt::one(); r - 1];
        out.push(gamma_r);
        return Ok(out);
    }
    match nonunits_in_block(phi, g, &gamma_r, ctx.budget) {
        Ok(k) if k <= 2 => {
            ctx.trace.steps.push(format!("{k} non-units from prime reduction"));
            let mut out = vec![BigInt::one(); r - 2];
            out.push(gamma_prev.clone());
            out.push(&gamma_r / &gamma_prev);
            return Ok(out);
        }
        Ok(_) | Err(Error::FactorizationLimit(_)) => {}
        Err(e) => return Err(e),
    }
    ctx.trace.steps.push(format!("elimination on {r}x{r} block"));
    ctx.trace.oracle_blocks += 1;
    Ok(smith_form(&element_matrix(phi, g), false).invariant_factors)
}

fn nonunits_in_block(phi: &IntPoly, g: &IntPoly, gamma_r: &BigInt, budget: u64) -> Result<usize> {
    let mut count = 0;
    for p in prime_divisors(gamma_r, budget)? {
        let fp = crate::arith::reduce_mod_p(phi, &p)?;
        let gp = crate::arith::reduce_mod_p(g, &p)?;
        let d = if fp.is_zero() { deg(g) } else { crate::arith::gcd_mod_p(&fp, &gp)?.degree().finite().unwrap_or(0) };
        count = count.max(d);
    }
    Ok(count)
}

/// Candidate monic factors `gcd(q, t^d ± 1)` of a polynomial `q`.
fn binomial_factors(q: &IntPoly, max_d: usize) -> Result<Vec<IntPoly>> {
    let dq = deg(q);
    let mut out: Vec<IntPoly> = Vec::new();
    for d in 1..=max_d {
        for sign in [-1, 1] {
            let z = monic_gcd(q, &IntPoly::binomial(d, sign))?;
            let dz = deg(&z);
            if dz > 0 && dz < dq && !out.contains(&z) {
                out.push(z);
            }
        }
    }
    Ok(out)
}

fn try_split_g(phi: &IntPoly, g: &IntPoly, ctx: &mut Ctx) -> Result<Option<Vec<BigInt>>> {
    if !g.is_monic() {
        return Ok(None);
    }
    for g1 in binomial_factors(g, deg(g))? {
        let g2 = g.div_exact(&g1).expect("factor divides");
        let r1 = resultant(phi, &g1)?;
        let r2 = resultant(phi, &g2)?;
        if r1.gcd(&r2).is_one() {
            ctx.trace.steps.push(format!("split g = ({g1})({g2})"));
            let mut diag = block(&phi.rem(&g1)?, &g1, ctx)?;
            diag.extend(block(&phi.rem(&g2)?, &g2, ctx)?);
            return Ok(Some(smith_from_diagonal(&diag).invariant_factors));
        }
    }
    Ok(None)
}

fn try_split_f(phi: &IntPoly, g: &IntPoly, ctx: &mut Ctx) -> Result<Option<Vec<BigInt>>> {
    for f1 in binomial_factors(phi, 2 * deg(g))? {
        let Some(f2) = phi.div_exact(&f1) else { continue };
        let r1 = resultant(&f1, g)?;
        let r2 = resultant(&f2, g)?;
        if r1.gcd(&r2).is_one() {
            ctx.trace.steps.push(format!("split f = ({f1})({f2})"));
            let a = block(&f1.rem(g)?, g, ctx)?;
            let b = block(&f2.rem(g)?, g, ctx)?;
            return Ok(Some(a.iter().zip(&b).map(|(x, y)| x * y).collect()));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::DEFAULT_FACTOR_BUDGET;
    use crate::companion::element;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn fast(f: &IntPoly, g: &IntPoly) -> Vec<BigInt> {
        smith_fast(f, g, DEFAULT_FACTOR_BUDGET).unwrap().invariant_factors
    }

    #[test]
    fn pipeline_examples() {
        assert_eq!(fast(&p(&[1, 3, -2]), &IntPoly::binomial(4, -1)), ints(&[1, 1, 3, 48]));
        let f = &IntPoly::binomial(3, 1) * &p(&[1, 1]);
        assert_eq!(fast(&f, &IntPoly::binomial(6, -1)), ints(&[1, 1, 2, 0, 0, 0]));
        assert_eq!(fast(&p(&[-1, -1, 1]), &IntPoly::binomial(5, -1)), ints(&[1, 1, 1, 1, 11]));
        assert_eq!(fast(&IntPoly::zero(), &IntPoly::binomial(3, -1)), ints(&[0, 0, 0]));
        assert_eq!(fast(&p(&[6, 6]), &IntPoly::binomial(3, -1)), ints(&[6, 6, 12]));
    }

    #[test]
    fn trace_reports_steps() {
        let (s, trace) = smith_fast_traced(&p(&[-1, -1, 1]), &IntPoly::binomial(5, -1), 1000).unwrap();
        assert_eq!(s.invariant_factors, ints(&[1, 1, 1, 1, 11]));
        assert!(trace.steps.iter().any(|s| s.starts_with("swap")));
        assert_eq!(trace.oracle_blocks, 0);
    }

    #[test]
    fn larger_than_cross_check_dimension() {
        // 1 + t + t^8 over t^16 - 1
        let mut c = vec![0i64; 9];
        c[0] = 1;
        c[1] = 1;
        c[8] = 1;
        assert_eq!(fast(&p(&c), &IntPoly::binomial(16, -1)), ints(&[1; 15].iter().copied().chain([255]).collect::<Vec<_>>()));
    }

    fn poly_strategy(max_deg: usize) -> impl Strategy<Value = IntPoly> {
        proptest::collection::vec(-9i64..=9, 0..=max_deg + 1).prop_map(|v| IntPoly::from_i64s(&v))
    }

    fn monic_strategy(max_deg: usize) -> impl Strategy<Value = IntPoly> {
        (1..=max_deg).prop_flat_map(|d| {
            proptest::collection::vec(-9i64..=9, d).prop_map(|mut v| {
                v.push(1);
                IntPoly::from_i64s(&v)
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn matches_oracle(f in poly_strategy(9), g in monic_strategy(9)) {
            let oracle = smith_form(&element(&f, &g).unwrap().to_matrix(), false);
            prop_assert_eq!(fast(&f, &g), oracle.invariant_factors);
        }

        #[test]
        fn matches_oracle_on_binomial_moduli(f in poly_strategy(8), n in 1usize..=10, plus in any::<bool>()) {
            let g = IntPoly::binomial(n, if plus { 1 } else { -1 });
            let oracle = smith_form(&element(&f, &g).unwrap().to_matrix(), false);
            prop_assert_eq!(fast(&f, &g), oracle.invariant_factors);
        }
    }
}
