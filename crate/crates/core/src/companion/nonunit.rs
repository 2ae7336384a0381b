use num_bigint::BigInt;
use num_traits::Zero;

use super::{deg, gamma_last, gcd_split, prime_divisors};
use crate::arith::{gcd_mod_p, is_prime, reduce_mod_p, resultant, IntPoly, ModPoly};
use crate::error::{Error, Result};

fn gcd_degree_mod(f: &IntPoly, g: &IntPoly, p: &BigInt) -> Result<usize> {
    let fp = reduce_mod_p(f, p)?;
    let gp = reduce_mod_p(g, p)?;
    if fp.is_zero() {
        return Ok(deg(g));
    }
    let d: ModPoly = gcd_mod_p(&fp, &gp)?;
    Ok(d.degree().finite().unwrap_or(0))
}

/// Number of invariant factors of `f(C_g)` that are not units, zeros included:
/// `max(deg z, max_{p | γ_r} deg gcd(f_p, g_p))`.
pub fn nonunit_count(f: &IntPoly, g: &IntPoly, budget: u64) -> Result<usize> {
    let phi = f.rem(g)?;
    if phi.is_zero() {
        return Ok(deg(g));
    }
    let split = gcd_split(&phi, g)?;
    let gr = gamma_last(&split)?;
    let mut count = split.zero_count();
    for p in prime_divisors(&gr, budget)? {
        count = count.max(gcd_degree_mod(&phi, g, &p)?);
    }
    Ok(count)
}

/// `deg gcd(f_p, g_p)`, a lower bound on the non-unit count for any prime `p`.
pub fn nonunit_lower_bound(f: &IntPoly, g: &IntPoly, p: &BigInt) -> Result<usize> {
    g.require_monic()?;
    if !is_prime(p) || p <= &BigInt::from(1) {
        return Err(Error::NotPrime(p.clone()));
    }
    gcd_degree_mod(f, g, p)
}

/// True iff `gcd(f_p, g_p)` is linear for every prime `p` dividing the
/// resultant, which is equivalent to `γ_{n-1}(f(C_g)) = 1`.
pub fn gamma_second_last_is_unit(f: &IntPoly, g: &IntPoly, budget: u64) -> Result<bool> {
    let res = resultant(f, g)?;
    if res.is_zero() {
        return Err(Error::HypothesisViolation("resultant is zero".into()));
    }
    for p in prime_divisors(&res, budget)? {
        if gcd_degree_mod(f, g, &p)? != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::DEFAULT_FACTOR_BUDGET;
    use crate::companion::element;
    use crate::matrix::smith_form;
    use num_traits::One;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    const B: u64 = DEFAULT_FACTOR_BUDGET;

    #[test]
    fn count_examples() {
        let g4 = IntPoly::binomial(4, -1);
        assert_eq!(nonunit_count(&p(&[1, 3, -2]), &g4, B).unwrap(), 2);
        assert_eq!(nonunit_count(&g4, &g4, B).unwrap(), 4);
        for n in 1..8 {
            assert_eq!(nonunit_count(&p(&[-1, 1]), &IntPoly::binomial(n, -1), B).unwrap(), 1);
        }
        // gcd split with unit resultant still counts the zeros
        let f = &IntPoly::binomial(3, 1) * &p(&[1, 1]);
        assert_eq!(nonunit_count(&f, &IntPoly::binomial(6, -1), B).unwrap(), 4);
    }

    #[test]
    fn lower_bound_examples() {
        let f = p(&[1, 3, -2]);
        let g4 = IntPoly::binomial(4, -1);
        assert_eq!(nonunit_lower_bound(&f, &g4, &BigInt::from(3)).unwrap(), 2);
        assert_eq!(nonunit_lower_bound(&f, &g4, &BigInt::from(2)).unwrap(), 1);
        assert_eq!(nonunit_lower_bound(&f, &g4, &BigInt::from(7)).unwrap(), 0);
        assert_eq!(nonunit_lower_bound(&p(&[3, 6]), &g4, &BigInt::from(3)).unwrap(), 4);
        assert!(matches!(nonunit_lower_bound(&f, &g4, &BigInt::from(9)), Err(Error::NotPrime(_))));
    }

    #[test]
    fn predicate_examples() {
        assert!(!gamma_second_last_is_unit(&p(&[1, 3, -2]), &IntPoly::binomial(4, -1), B).unwrap());
        assert!(gamma_second_last_is_unit(&p(&[-2, 1]), &IntPoly::binomial(3, -1), B).unwrap());
        assert!(gamma_second_last_is_unit(&IntPoly::t(), &IntPoly::binomial(5, -1), B).unwrap());
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
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn count_matches_oracle(f in poly_strategy(7), g in monic_strategy(6)) {
            let s = smith_form(&element(&f, &g).unwrap().to_matrix(), false);
            prop_assert_eq!(nonunit_count(&f, &g, B).unwrap(), s.nonunit_count());
            for q in [2i64, 3, 5, 7, 11, 13] {
                prop_assert!(nonunit_lower_bound(&f, &g, &BigInt::from(q)).unwrap() <= s.nonunit_count());
            }
            if let Ok(unit) = gamma_second_last_is_unit(&f, &g, B) {
                let n = s.invariant_factors.len();
                let gamma = if n >= 2 { s.determinantal_divisors[n - 2].clone() } else { BigInt::one() };
                prop_assert_eq!(unit, gamma.is_one());
            }
        }
    }
}
