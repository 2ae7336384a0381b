//! Cyclically presented groups: defining words, relation matrices,
//! abelianizations, and the closed forms known for several families.

mod abelian;
pub mod families;
pub mod sequences;
mod word;

pub use abelian::{d_ab, AbelianGroup};
pub use families::{CrsBound, CrsParams, FamilyParams, HrnsRoute, Length3Variant};
pub use sequences::{fibonacci, frac_fib, lucas, SequenceTables};
pub use word::{exponent_polynomial, parse_word, CyclicWord};

use crate::arith::IntPoly;
use crate::companion::{element_matrix, smith_fast};
use crate::error::Result;
use crate::matrix::{smith_form, IntMatrix};

/// Relation matrix `f(C_g)^T` of the presentation, `g = t^n - 1`.
pub fn relation_matrix(w: &CyclicWord) -> IntMatrix {
    let g = IntPoly::binomial(w.n(), -1);
    element_matrix(&w.exponent_polynomial(), &g).transpose()
}

/// Abelianization through the structural Smith pipeline.
pub fn abelianization(w: &CyclicWord, budget: u64) -> Result<AbelianGroup> {
    abelianization_of_poly(&w.exponent_polynomial(), &IntPoly::binomial(w.n(), -1), budget)
}

/// Abelianization by full elimination on the relation matrix.
pub fn abelianization_oracle(w: &CyclicWord) -> AbelianGroup {
    AbelianGroup::from_smith(&smith_form(&relation_matrix(w), false))
}

/// Group presented by the relation matrix `f(C_g)^T`.
pub fn abelianization_of_poly(f: &IntPoly, g: &IntPoly, budget: u64) -> Result<AbelianGroup> {
    Ok(AbelianGroup::from_smith(&smith_fast(f, g, budget)?))
}

pub fn oracle_abelianization(f: &IntPoly, g: &IntPoly) -> Result<AbelianGroup> {
    let phi = f.rem(g)?;
    Ok(AbelianGroup::from_smith(&smith_form(&element_matrix(&phi, g).transpose(), false)))
}
