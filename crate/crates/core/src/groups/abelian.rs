use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::matrix::{smith_from_diagonal, SmithDecomposition};

/// Finitely generated abelian group `Z_{t_1} + … + Z_{t_k} + Z^betti` in
/// canonical form: every `t_i >= 2` and `t_i | t_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct AbelianGroup {
    torsion: Vec<BigInt>,
    betti: usize,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        AbelianGroup::default()
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroup { torsion: Vec::new(), betti: rank }
    }

    pub fn cyclic(order: BigInt) -> Self {
        Self::from_cyclic_factors(&[order])
    }

    /// Group presented by the invariant factors of a relation matrix.
    pub fn from_smith(s: &SmithDecomposition) -> Self {
        Self::from_chain(&s.invariant_factors)
    }

    /// Direct sum of the cyclic groups `Z_{c}` (`Z_0 = Z`, `Z_{±1} = 0`),
    /// in any order.
    pub fn from_cyclic_factors(orders: &[BigInt]) -> Self {
        Self::from_chain(&smith_from_diagonal(orders).invariant_factors)
    }

    fn from_chain(chain: &[BigInt]) -> Self {
        let betti = chain.iter().filter(|x| x.is_zero()).count();
        let torsion = chain.iter().filter(|x| !x.is_zero() && !x.is_one()).cloned().collect();
        AbelianGroup { torsion, betti }
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn betti(&self) -> usize {
        self.betti
    }

    /// Minimum number of generators.
    pub fn d(&self) -> usize {
        self.torsion.len() + self.betti
    }

    pub fn is_finite(&self) -> bool {
        self.betti == 0
    }

    pub fn is_trivial(&self) -> bool {
        self.d() == 0
    }

    /// Order, or `None` for an infinite group.
    pub fn order(&self) -> Option<BigInt> {
        self.is_finite().then(|| self.torsion.iter().product())
    }

    /// `self` repeated `k` times as a direct sum.
    pub fn power(&self, k: usize) -> Self {
        let mut orders: Vec<BigInt> = Vec::new();
        for _ in 0..k {
            orders.extend(self.torsion.iter().cloned());
        }
        let mut g = Self::from_cyclic_factors(&orders);
        g.betti = self.betti * k;
        g
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let orders: Vec<BigInt> = self.torsion.iter().chain(&other.torsion).cloned().collect();
        let mut g = Self::from_cyclic_factors(&orders);
        g.betti = self.betti + other.betti;
        g
    }
}

pub fn d_ab(g: &AbelianGroup) -> usize {
    g.d()
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.torsion.iter().map(|t| format!("Z_{t}")).collect();
        match self.betti {
            0 => {}
            1 => parts.push("Z".into()),
            b => parts.push(format!("Z^{b}")),
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}
