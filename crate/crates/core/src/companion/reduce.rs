use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::{deg, element, CompanionElement};
use crate::arith::{resultant, IntPoly};
use crate::error::{Error, Result};
use crate::matrix::{smith_form, SmithDecomposition};

/// `f(C_g) ~ I_{n-m} ⊕ g(C_f)` for monic `f`, `g` with `1 <= deg f <= deg g`.
/// Returns the identity count `n - m` and the element `g(C_f)`.
pub fn swap_reduce(f: &IntPoly, g: &IntPoly) -> Result<(usize, CompanionElement)> {
    f.require_monic()?;
    g.require_monic()?;
    let (m, n) = (deg(f), deg(g));
    if m == 0 {
        return Err(Error::InvalidInput("swap needs deg f >= 1".into()));
    }
    if m > n {
        return Err(Error::DegreeOrder { deg_f: m, deg_g: n });
    }
    Ok((n - m, element(g, f)?))
}

/// Smith form of `(f∘h)(C_{g∘h})` is that of `f(C_g)` with every invariant
/// factor repeated `multiplicity = deg h` times.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositionReduction {
    pub factor: CompanionElement,
    pub multiplicity: usize,
}

impl CompositionReduction {
    /// Expands a Smith form of the factor into that of the composed element.
    pub fn expand(&self, factor_smith: &SmithDecomposition) -> SmithDecomposition {
        let s = factor_smith
            .invariant_factors
            .iter()
            .flat_map(|x| std::iter::repeat_n(x.clone(), self.multiplicity))
            .collect();
        SmithDecomposition::from_invariant_factors(s)
    }

    pub fn smith(&self) -> SmithDecomposition {
        self.expand(&smith_form(&self.factor.to_matrix(), false))
    }
}

pub fn compose_reduce(f: &IntPoly, g: &IntPoly, h: &IntPoly) -> Result<CompositionReduction> {
    g.require_monic()?;
    h.require_monic()?;
    let k = deg(h);
    if k == 0 {
        return Err(Error::InvalidInput("composition needs deg h >= 1".into()));
    }
    Ok(CompositionReduction { factor: element(f, g)?, multiplicity: k })
}

fn coprime(a: &BigInt, b: &BigInt) -> bool {
    a.gcd(b).is_one()
}

/// Splits `f(C_{g1·g2})` into `f(C_{g1}) ⊕ f(C_{g2})` when the two resultants
/// are coprime; otherwise `NotCoprime`.
pub fn split_g(f: &IntPoly, g1: &IntPoly, g2: &IntPoly) -> Result<(CompanionElement, CompanionElement)> {
    let r1 = resultant(f, g1)?;
    let r2 = resultant(f, g2)?;
    if !coprime(&r1, &r2) {
        return Err(Error::NotCoprime);
    }
    Ok((element(f, g1)?, element(f, g2)?))
}

/// Smith form of `(f1·f2)(C_g)` as the entrywise product of the two Smith
/// forms, when the resultants are coprime.
pub fn split_f(f1: &IntPoly, f2: &IntPoly, g: &IntPoly) -> Result<SmithDecomposition> {
    let r1 = resultant(f1, g)?;
    let r2 = resultant(f2, g)?;
    if !coprime(&r1, &r2) {
        return Err(Error::NotCoprime);
    }
    let s1 = smith_form(&element(f1, g)?.to_matrix(), false);
    let s2 = smith_form(&element(f2, g)?.to_matrix(), false);
    Ok(SmithDecomposition::from_invariant_factors(
        s1.invariant_factors.iter().zip(&s2.invariant_factors).map(|(a, b)| a * b).collect(),
    ))
}
