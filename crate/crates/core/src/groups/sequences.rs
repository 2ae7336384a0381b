use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Memoized Fibonacci, Lucas and fractional Fibonacci values.
///
/// Tables only grow; each instance is owned by one caller, so concurrent
/// tasks keep their own copy.
#[derive(Debug, Clone, Default)]
pub struct SequenceTables {
    fib: Vec<BigInt>,
    lucas: Vec<BigInt>,
    frac: HashMap<u64, Vec<BigInt>>,
}

fn extend(table: &mut Vec<BigInt>, a0: BigInt, a1: BigInt, k: &BigInt, j: usize) -> BigInt {
    if table.is_empty() {
        table.push(a0);
        table.push(a1);
    }
    while table.len() <= j {
        let n = table.len();
        let next = k * &table[n - 1] + &table[n - 2];
        table.push(next);
    }
    table[j].clone()
}

impl SequenceTables {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn fib(&mut self, j: usize) -> BigInt {
        extend(&mut self.fib, BigInt::zero(), BigInt::one(), &BigInt::one(), j)
    }

    pub fn lucas(&mut self, j: usize) -> BigInt {
        extend(&mut self.lucas, BigInt::from(2), BigInt::one(), &BigInt::one(), j)
    }

    /// `F_j^k` with `F_0^k = 0`, `F_1^k = 1`, `F_{j+2}^k = k F_{j+1}^k + F_j^k`.
    pub fn frac_fib(&mut self, k: u64, j: usize) -> BigInt {
        let table = self.frac.entry(k).or_default();
        extend(table, BigInt::zero(), BigInt::one(), &BigInt::from(k), j)
    }
}

pub fn fibonacci(j: usize) -> BigInt {
    frac_fib(1, j)
}

pub fn lucas(j: usize) -> BigInt {
    SequenceTables::new().lucas(j)
}

pub fn frac_fib(k: u64, j: usize) -> BigInt {
    SequenceTables::new().frac_fib(k, j)
}
