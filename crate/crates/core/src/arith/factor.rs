//! Primality testing and integer factorization.
//!
//! Deterministic Miller-Rabin below 2^64, Baillie-PSW above. Factoring is
//! trial division by the primes below 2^16 followed by Brent's variant of
//! Pollard rho, charged against a caller-supplied iteration budget.

use std::fmt;
use std::sync::OnceLock;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

const TRIAL_LIMIT: u32 = 1 << 16;

/// Default number of Pollard rho iterations granted to a single factorization.
pub const DEFAULT_FACTOR_BUDGET: u64 = 5_000_000;

fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let n = TRIAL_LIMIT as usize;
        let mut sieve = vec![true; n + 1];
        sieve[0] = false;
        sieve[1] = false;
        let mut i = 2;
        while i * i <= n {
            if sieve[i] {
                let mut j = i * i;
                while j <= n {
                    sieve[j] = false;
                    j += i;
                }
            }
            i += 1;
        }
        (0..=n).filter(|&k| sieve[k]).map(|k| k as u32).collect()
    })
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

fn miller_rabin_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn strong_probable_prime_base2(n: &BigInt) -> bool {
    let n1: BigInt = n - 1u32;
    let s = n1.trailing_zeros().unwrap_or(0);
    let d = &n1 >> s;
    let mut x = BigInt::from(2u32).modpow(&d, n);
    if x.is_one() || x == n1 {
        return true;
    }
    for _ in 1..s {
        x = (&x * &x) % n;
        if x == n1 {
            return true;
        }
    }
    false
}

/// Jacobi symbol (a/n) for odd positive n.
fn jacobi(a: &BigInt, n: &BigInt) -> i32 {
    let mut a = a.mod_floor(n);
    let mut n = n.clone();
    let mut result = 1;
    while !a.is_zero() {
        while a.is_even() {
            a >>= 1;
            let r = (&n % 8u32).to_u32().unwrap();
            if r == 3 || r == 5 {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if (&a % 4u32).to_u32() == Some(3) && (&n % 4u32).to_u32() == Some(3) {
            result = -result;
        }
        a = a.mod_floor(&n);
    }
    if n.is_one() {
        result
    } else {
        0
    }
}

fn half_mod(x: BigInt, n: &BigInt) -> BigInt {
    let x = if x.is_odd() { x + n } else { x };
    let half: BigInt = x >> 1u32;
    half.mod_floor(n)
}

/// Strong Lucas probable-prime test with Selfridge parameters.
fn strong_lucas(n: &BigInt) -> bool {
    let root = n.sqrt();
    if &(&root * &root) == n {
        return false;
    }
    let mut d_abs = 5i64;
    let d = loop {
        let cand = if (d_abs / 2) % 2 == 0 { d_abs } else { -d_abs };
        let cand_big = BigInt::from(cand);
        match jacobi(&cand_big, n) {
            -1 => break cand_big,
            0 if cand_big.abs() != *n => return false,
            _ => {}
        }
        d_abs += 2;
    };
    let p = BigInt::one();
    let q: BigInt = (BigInt::one() - &d) / 4;
    let n1: BigInt = n + 1u32;
    let s = n1.trailing_zeros().unwrap_or(0);
    let k = &n1 >> s;

    let mut u = BigInt::one();
    let mut v = p.clone();
    let mut qk = q.mod_floor(n);
    let bits = k.bits();
    for i in (0..bits - 1).rev() {
        u = (&u * &v).mod_floor(n);
        v = (&v * &v - &qk * 2u32).mod_floor(n);
        qk = (&qk * &qk).mod_floor(n);
        if k.bit(i) {
            let nu = half_mod(&p * &u + &v, n);
            let nv = half_mod(&d * &u + &p * &v, n);
            u = nu;
            v = nv;
            qk = (&qk * &q).mod_floor(n);
        }
    }
    if u.is_zero() || v.is_zero() {
        return true;
    }
    for _ in 1..s {
        v = (&v * &v - &qk * 2u32).mod_floor(n);
        if v.is_zero() {
            return true;
        }
        qk = (&qk * &qk).mod_floor(n);
    }
    false
}

/// Primality of `|n|`.
pub fn is_prime(n: &BigInt) -> bool {
    let n = n.abs();
    if let Some(small) = n.to_u64() {
        return miller_rabin_u64(small);
    }
    for &p in &small_primes()[..100] {
        if (&n % p).is_zero() {
            return false;
        }
    }
    strong_probable_prime_base2(&n) && strong_lucas(&n)
}

/// Prime factorization of `|base|`; primes strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub base: BigInt,
    pub factors: Vec<(BigInt, u32)>,
}

impl Factorization {
    pub fn primes(&self) -> impl Iterator<Item = &BigInt> {
        self.factors.iter().map(|(p, _)| p)
    }

    pub fn product(&self) -> BigInt {
        self.factors
            .iter()
            .fold(BigInt::one(), |acc, (p, e)| acc * num_traits::pow(p.clone(), *e as usize))
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(p, e)| if *e == 1 { p.to_string() } else { format!("{p}^{e}") })
            .collect();
        write!(f, "{}", parts.join(" * "))
    }
}

struct Budget {
    left: u64,
}

impl Budget {
    fn spend(&mut self, n: u64) -> bool {
        if self.left < n {
            self.left = 0;
            false
        } else {
            self.left -= n;
            true
        }
    }
}

/// Brent's cycle-finding rho with `x -> x^2 + c`. `Ok(None)` means this `c` failed.
fn rho(n: &BigInt, c: u32, budget: &mut Budget) -> Result<Option<BigInt>> {
    const BATCH: u64 = 128;
    let step = |x: &BigInt| (x * x + c).mod_floor(n);
    let mut y = BigInt::from(2u32);
    let mut x = y.clone();
    let mut ys = y.clone();
    let mut q = BigInt::one();
    let mut g = BigInt::one();
    let mut r: u64 = 1;
    while g.is_one() {
        x = y.clone();
        for _ in 0..r {
            y = step(&y);
        }
        let mut k = 0;
        while k < r && g.is_one() {
            ys = y.clone();
            let m = BATCH.min(r - k);
            if !budget.spend(m) {
                return Err(Error::FactorizationLimit(n.clone()));
            }
            for _ in 0..m {
                y = step(&y);
                q = (&q * (&x - &y).abs()).mod_floor(n);
            }
            g = q.gcd(n);
            k += m;
        }
        r *= 2;
    }
    if &g == n {
        loop {
            if !budget.spend(1) {
                return Err(Error::FactorizationLimit(n.clone()));
            }
            ys = step(&ys);
            g = (&x - &ys).abs().gcd(n);
            if !g.is_one() {
                break;
            }
        }
    }
    Ok(if &g == n { None } else { Some(g) })
}

fn split_composite(n: BigInt, budget: &mut Budget, out: &mut Vec<BigInt>) -> Result<()> {
    if n.is_one() {
        return Ok(());
    }
    if is_prime(&n) {
        out.push(n);
        return Ok(());
    }
    let root = n.sqrt();
    if &root * &root == n {
        split_composite(root.clone(), budget, out)?;
        return split_composite(root, budget, out);
    }
    for c in 1u32.. {
        if let Some(d) = rho(&n, c, budget)? {
            let other = &n / &d;
            split_composite(d, budget, out)?;
            return split_composite(other, budget, out);
        }
    }
    unreachable!()
}

/// Complete prime factorization of `|n|`, spending at most `budget` rho iterations.
pub fn factor_integer(n: &BigInt, budget: u64) -> Result<Factorization> {
    let base = n.abs();
    if base <= BigInt::one() {
        return Err(Error::InvalidInput(format!("cannot factor {n}")));
    }
    let mut rest = base.clone();
    let mut primes: Vec<BigInt> = Vec::new();
    for &p in small_primes() {
        let pb = BigInt::from(p);
        if &pb * &pb > rest {
            break;
        }
        while (&rest % p).is_zero() {
            rest /= p;
            primes.push(pb.clone());
        }
    }
    let mut budget = Budget { left: budget };
    split_composite(rest, &mut budget, &mut primes)?;
    primes.sort();
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    for p in primes {
        match factors.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => factors.push((p, 1)),
        }
    }
    debug_assert_eq!(base.sign(), Sign::Plus);
    Ok(Factorization { base, factors })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fac(n: u64) -> Vec<(u64, u32)> {
        factor_integer(&BigInt::from(n), DEFAULT_FACTOR_BUDGET)
            .unwrap()
            .factors
            .into_iter()
            .map(|(p, e)| (p.to_u64().unwrap(), e))
            .collect()
    }

    #[test]
    fn examples() {
        assert_eq!(fac(144), vec![(2, 4), (3, 2)]);
        assert_eq!(fac(255), vec![(3, 1), (5, 1), (17, 1)]);
        assert_eq!(fac(11), vec![(11, 1)]);
    }

    #[test]
    fn rejects_units() {
        assert!(factor_integer(&BigInt::from(1), 10).is_err());
        assert!(factor_integer(&BigInt::from(-1), 10).is_err());
        assert!(factor_integer(&BigInt::zero(), 10).is_err());
    }

    #[test]
    fn negative_input_factors_absolute_value() {
        let f = factor_integer(&BigInt::from(-12), 10).unwrap();
        assert_eq!(f.base, BigInt::from(12));
    }

    #[test]
    fn primality_against_trial_division() {
        for n in 0u64..5000 {
            let brute = n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0);
            assert_eq!(is_prime(&BigInt::from(n)), brute, "n = {n}");
        }
    }

    #[test]
    fn large_primes_and_pseudoprimes() {
        let m61: BigInt = (BigInt::one() << 61) - 1;
        let m89: BigInt = (BigInt::one() << 89) - 1;
        let m127: BigInt = (BigInt::one() << 127) - 1;
        assert!(is_prime(&m61));
        assert!(is_prime(&m89));
        assert!(is_prime(&m127));
        assert!(!is_prime(&(&m89 * &m61)));
        // strong pseudoprime to bases 2..=37 (Arnault)
        assert!(!is_prime(&BigInt::from(3825123056546413051u64)));
        // Carmichael numbers
        assert!(!is_prime(&BigInt::from(561)));
        assert!(!is_prime(&BigInt::from(41041)));
    }

    #[test]
    fn large_semiprime_is_split() {
        let p = BigInt::from(1_000_003u64);
        let q = BigInt::from(998_244_353u64);
        let f = factor_integer(&(&p * &q * &q), DEFAULT_FACTOR_BUDGET).unwrap();
        assert_eq!(f.factors, vec![(p, 1), (q, 2)]);
    }

    #[test]
    fn mersenne_composite() {
        // 2^64 - 1 = 3 * 5 * 17 * 257 * 641 * 65537 * 6700417
        let n: BigInt = (BigInt::one() << 64) - 1;
        let f = factor_integer(&n, DEFAULT_FACTOR_BUDGET).unwrap();
        assert_eq!(f.product(), n);
        assert_eq!(f.factors.len(), 7);
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        // product of two ~2^40 primes needs far more than 10 rho steps
        let p = BigInt::from(1_099_511_627_791u64);
        let q = BigInt::from(1_099_511_627_803u64);
        assert!(is_prime(&p) && is_prime(&q));
        assert!(matches!(factor_integer(&(&p * &q), 10), Err(Error::FactorizationLimit(_))));
    }
}
