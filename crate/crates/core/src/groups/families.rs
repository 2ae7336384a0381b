use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::sequences::SequenceTables;
use super::{abelianization_of_poly, oracle_abelianization, AbelianGroup};
use crate::arith::IntPoly;
use crate::error::{Error, Result};
use crate::matrix::SmithDecomposition;

fn violation(msg: impl Into<String>) -> Error {
    Error::HypothesisViolation(msg.into())
}

fn big(x: impl Into<BigInt>) -> BigInt {
    x.into()
}

/// `Σ_{i<len} c·t^{start + i·step}`.
fn progression(c: &BigInt, start: usize, step: usize, len: usize) -> IntPoly {
    let mut out = IntPoly::zero();
    for i in 0..len {
        out = &out + &IntPoly::monomial(c.clone(), start + i * step);
    }
    out
}

fn reduce_cyclic(f: &IntPoly, n: usize) -> IntPoly {
    f.rem(&IntPoly::binomial(n, -1)).expect("t^n - 1 is monic")
}

/// Parameters for the cyclically presented families with closed forms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum FamilyParams {
    /// Fractional Fibonacci groups, exponent polynomial `t^2 - k t - 1`.
    FracFib { k: u64, n: usize },
    /// Two-value circulant: coefficient `b` on `t^0..t^{s-1}`, `a` on `t^s..t^{n-1}`.
    Neuwirth { n: usize, s: usize, a: i64, b: i64 },
    /// `G_n((x_0^β … x_{n-1}^β)^ℓ x_{n-1}^{-α})`.
    Periodic { n: usize, alpha: u64, beta: u64, l: u64 },
    Hrns { r: usize, n: usize, s: usize },
    /// `G_n(x_0 x_k x_l)`.
    Length3 { n: usize, k: usize, l: usize },
    Crs(CrsParams),
    Cocktail { m: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrsParams {
    pub n: usize,
    pub h: usize,
    pub k: i64,
    pub m: usize,
    pub q: usize,
    pub r: usize,
    pub s: usize,
    pub l: i64,
}

impl FamilyParams {
    /// Exponent polynomial `f` and modulus `g` whose element `f(C_g)` has the
    /// relation matrix of the family's abelianization as transpose.
    pub fn companion_pair(&self) -> Result<(IntPoly, IntPoly)> {
        let cyc = |n: usize| IntPoly::binomial(n, -1);
        Ok(match *self {
            FamilyParams::FracFib { k, n } => {
                require_positive(&[("k", k as usize), ("n", n)])?;
                (fracfib_poly(k, n), cyc(n))
            }
            FamilyParams::Neuwirth { n, s, a, b } => {
                check_two_value(n, s)?;
                (two_value_poly(n, s, a, b), cyc(n))
            }
            FamilyParams::Periodic { n, alpha, beta, l } => {
                check_periodic(n, alpha, beta, l)?;
                (periodic_poly(n, alpha, beta, l), cyc(n))
            }
            FamilyParams::Hrns { r, n, s } => {
                require_positive(&[("r", r), ("n", n), ("s", s)])?;
                (hrns_poly(r, n, s), cyc(n))
            }
            FamilyParams::Length3 { n, k, l } => {
                require_positive(&[("n", n)])?;
                (length3_poly(n, k, l), cyc(n))
            }
            FamilyParams::Crs(p) => (crs_exponent_poly(&p)?, cyc(p.n)),
            FamilyParams::Cocktail { m } => {
                require_positive(&[("m", m)])?;
                (cocktail_poly(m), cyc(2 * m))
            }
        })
    }

    /// Abelianization through the general companion-ring pipeline.
    pub fn general(&self, budget: u64) -> Result<AbelianGroup> {
        let (f, g) = self.companion_pair()?;
        abelianization_of_poly(&f, &g, budget)
    }

    /// Abelianization by elimination on the full relation matrix.
    pub fn oracle(&self) -> Result<AbelianGroup> {
        let (f, g) = self.companion_pair()?;
        oracle_abelianization(&f, &g)
    }

    /// Closed-form abelianization where a theorem applies to the parameters.
    pub fn closed_form(&self, budget: u64) -> Result<AbelianGroup> {
        match *self {
            FamilyParams::FracFib { k, n } => ff_abelianization_closed(k, n),
            FamilyParams::Neuwirth { n, s, a, b } => {
                Ok(AbelianGroup::from_smith(&two_value_circulant_smith(n, s, a, b)?))
            }
            FamilyParams::Periodic { n, alpha, beta, l } => neuwirth_homology(n, alpha, beta, l),
            FamilyParams::Hrns { r, n, s } => match hrns_abelianization(r, n, s, budget)? {
                (_, HrnsRoute::General) => Err(violation("no closed form covers these H(r,n,s) parameters")),
                (g, _) => Ok(g),
            },
            FamilyParams::Length3 { n, k, l } => {
                if k == 1 && n % 16 == 0 && (l == n / 2 || l == n / 4) {
                    let v = if l == n / 2 { Length3Variant::Half } else { Length3Variant::Quarter };
                    length3_power16_ab(n, v)
                } else if k == 1 && n >= 2 && l == n / 2 - 1 && n % 2 == 0 {
                    length3_halfminus1_ab(n)
                } else {
                    Err(violation("no closed form covers these length-3 parameters"))
                }
            }
            FamilyParams::Crs(_) => Err(violation("CRS groups have a lower bound only")),
            FamilyParams::Cocktail { m } => Ok(AbelianGroup::from_smith(&cocktail_smith(m)?)),
        }
    }
}

fn require_positive(vals: &[(&str, usize)]) -> Result<()> {
    for (name, v) in vals {
        if *v == 0 {
            return Err(violation(format!("{name} must be at least 1")));
        }
    }
    Ok(())
}

// ---- cocktail party ----

/// `(t^m + 1)(1 + t + … + t^{m-2})`; zero for `m = 1`.
pub fn cocktail_poly(m: usize) -> IntPoly {
    let one = BigInt::one();
    &IntPoly::binomial(m, 1) * &progression(&one, 0, 1, m.saturating_sub(1))
}

/// Invariant factors `1` (m-1 times), `m-1`, `0` (m times) of the
/// cocktail-party element over `t^{2m} - 1`.
pub fn cocktail_smith(m: usize) -> Result<SmithDecomposition> {
    require_positive(&[("m", m)])?;
    let mut s = vec![BigInt::one(); m - 1];
    s.push(big(m as u64 - 1));
    s.extend(std::iter::repeat_n(BigInt::zero(), m));
    Ok(SmithDecomposition::from_invariant_factors(s))
}

// ---- fractional Fibonacci ----

pub fn fracfib_poly(k: u64, n: usize) -> IntPoly {
    let f = IntPoly::new(vec![big(-1), -big(k), BigInt::one()]);
    reduce_cyclic(&f, n)
}

/// `Z_α + Z_{ord/α}` with `α = gcd(F_n, F_{n-1} - 1)` and
/// `ord = F_{n+1} + F_{n-1} - 1 - (-1)^n`.
pub fn ff_abelianization(k: u64, n: usize) -> Result<AbelianGroup> {
    require_positive(&[("k", k as usize), ("n", n)])?;
    let mut t = SequenceTables::new();
    let alpha = t.frac_fib(k, n).gcd(&(t.frac_fib(k, n - 1) - 1));
    let order = ff_order(&mut t, k, n);
    if order.is_zero() {
        return Ok(AbelianGroup::from_cyclic_factors(&[alpha, BigInt::zero()]));
    }
    let beta = &order / &alpha;
    Ok(AbelianGroup::from_cyclic_factors(&[alpha, beta]))
}

/// `F_{n+1}^k + F_{n-1}^k - 1 - (-1)^n`.
pub fn ff_order(t: &mut SequenceTables, k: u64, n: usize) -> BigInt {
    let sign = if n.is_multiple_of(2) { 1 } else { -1 };
    t.frac_fib(k, n + 1) + t.frac_fib(k, n - 1) - 1 - sign
}

/// The case split by `n mod 12`.
pub fn ff_abelianization_closed(k: u64, n: usize) -> Result<AbelianGroup> {
    require_positive(&[("k", k as usize), ("n", n)])?;
    let mut t = SequenceTables::new();
    let kb = big(k);
    let two = big(2);
    let orders = match n % 12 {
        1 | 5 | 7 | 11 => vec![t.frac_fib(k, n + 1) + t.frac_fib(k, n - 1)],
        3 | 9 => {
            let e = (&kb + 1u32).gcd(&two);
            let total = t.frac_fib(k, n + 1) + t.frac_fib(k, n - 1);
            vec![e.clone(), total / e]
        }
        2 | 6 | 10 => {
            let h = n / 2;
            let x = t.frac_fib(k, h + 1) + t.frac_fib(k, h - 1);
            vec![x.clone(), x]
        }
        _ => {
            let e = kb.gcd(&two);
            let fh = t.frac_fib(k, n / 2);
            vec![&e * &fh, (&kb * &kb + 4u32) * fh / e]
        }
    };
    Ok(AbelianGroup::from_cyclic_factors(&orders))
}

// ---- two-value circulants and Neuwirth's groups ----

fn check_two_value(n: usize, s: usize) -> Result<()> {
    if s == 0 || s >= n {
        return Err(violation(format!("need n > s >= 1, got n = {n}, s = {s}")));
    }
    if n.gcd(&s) != 1 {
        return Err(Error::NotCoprime);
    }
    Ok(())
}

/// `a (t^n - 1)/(t - 1) + (b - a)(t^s - 1)/(t - 1)`.
pub fn two_value_poly(n: usize, s: usize, a: i64, b: i64) -> IntPoly {
    IntPoly::new((0..n).map(|i| big(if i < s { b } else { a })).collect())
}

/// Invariant factors `gcd(a,b)`, `|a-b|` (n-2 times), `k|a-b|` with
/// `k = |a(n-s) + sb| / gcd(a,b)`; rank one when `a = b`.
pub fn two_value_circulant_smith(n: usize, s: usize, a: i64, b: i64) -> Result<SmithDecomposition> {
    check_two_value(n, s)?;
    let (a, b) = (big(a), big(b));
    let mut out = Vec::with_capacity(n);
    if a == b {
        out.push(a.abs());
        out.extend(std::iter::repeat_n(BigInt::zero(), n - 1));
        return Ok(SmithDecomposition::from_invariant_factors(out));
    }
    let g = a.gcd(&b);
    let diff = (&a - &b).abs();
    let k = (&a * big(n as u64 - s as u64) + big(s as u64) * &b).abs() / &g;
    out.push(g);
    out.extend(std::iter::repeat_n(diff.clone(), n - 2));
    out.push(k * diff);
    Ok(SmithDecomposition::from_invariant_factors(out))
}

fn check_periodic(n: usize, alpha: u64, beta: u64, l: u64) -> Result<()> {
    if n < 2 {
        return Err(violation("need n >= 2"));
    }
    if alpha == 0 || beta == 0 || l == 0 {
        return Err(violation("need alpha, beta, l >= 1"));
    }
    if alpha.gcd(&beta) != 1 {
        return Err(violation("need gcd(alpha, beta) = 1"));
    }
    if alpha.gcd(&l) != 1 {
        return Err(violation("need gcd(alpha, l) = 1"));
    }
    Ok(())
}

/// Exponent polynomial of `(x_0^β … x_{n-1}^β)^ℓ x_{n-1}^{-α}`: the two-value
/// circulant with `s = n - 1`, `b = ℓβ`, `a = ℓβ - α`.
pub fn periodic_poly(n: usize, alpha: u64, beta: u64, l: u64) -> IntPoly {
    let b = (l * beta) as i64;
    two_value_poly(n, n - 1, b - alpha as i64, b)
}

/// `Z_α^{n-2} + Z_{α|nℓβ - α|}`.
pub fn neuwirth_homology(n: usize, alpha: u64, beta: u64, l: u64) -> Result<AbelianGroup> {
    check_periodic(n, alpha, beta, l)?;
    let a = big(alpha);
    let mut orders = vec![a.clone(); n - 2];
    let last = (big(n as u64) * big(l) * big(beta) - &a).abs();
    orders.push(a * last);
    Ok(AbelianGroup::from_cyclic_factors(&orders))
}

/// Coefficients `q_0, …, q_{n-1}` of the inverse of `1 + t + … + t^{s-1}`
/// in `Q[t]/(t^n - 1)`.
pub fn ones_block_inverse(n: usize, s: usize) -> Result<Vec<BigRational>> {
    if s < 2 || s >= n {
        return Err(violation(format!("need n > s > 1, got n = {n}, s = {s}")));
    }
    if n.gcd(&s) != 1 {
        return Err(Error::NotCoprime);
    }
    let v = (1..s).find(|v| (v * n) % s == 1).expect("n is invertible mod s");
    let r = n % s;
    let frac = |num: i64| BigRational::new(big(num), big(s as u64));
    let mut base = vec![BigRational::zero(); s];
    for j in 1..=s {
        let value = if j <= v { frac(v as i64 - s as i64) } else { frac(v as i64) };
        base[(r * j) % s] = value;
    }
    Ok((0..n).map(|i| base[i % s].clone()).collect())
}

// ---- H(r, n, s) ----

pub fn hrns_poly(r: usize, n: usize, s: usize) -> IntPoly {
    let one = BigInt::one();
    let f = &progression(&one, 0, 1, r) - &progression(&one, r, 1, s);
    reduce_cyclic(&f, n)
}

/// Which route produced an `H(r,n,s)` abelianization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HrnsRoute {
    /// `s = r`: `Z_N^{d-1} + Z^d`.
    EqualLengths,
    /// `S - R = 1`: `(H(R,N,S)^ab)^d + Z^{d-1}`.
    ScaledDown,
    General,
}

pub fn hrns_abelianization(r: usize, n: usize, s: usize, budget: u64) -> Result<(AbelianGroup, HrnsRoute)> {
    require_positive(&[("r", r), ("n", n), ("s", s)])?;
    if n >= 2 && s == r {
        let d = n.gcd(&r);
        let torsion = AbelianGroup::cyclic(big((n / d) as u64)).power(d - 1);
        return Ok((torsion.direct_sum(&AbelianGroup::free(d)), HrnsRoute::EqualLengths));
    }
    let d = r.gcd(&n).gcd(&s);
    if n >= 2 && s > r && d > 1 && s / d - r / d == 1 {
        let (inner, _) = hrns_abelianization(r / d, n / d, s / d, budget)?;
        let g = inner.power(d).direct_sum(&AbelianGroup::free(d - 1));
        return Ok((g, HrnsRoute::ScaledDown));
    }
    Ok((hrns_general(r, n, s, budget)?, HrnsRoute::General))
}

pub fn hrns_general(r: usize, n: usize, s: usize, budget: u64) -> Result<AbelianGroup> {
    FamilyParams::Hrns { r, n, s }.general(budget)
}

// ---- length three ----

/// Exponent polynomial `1 + t^k + t^l` of `x_0 x_k x_l`, reduced mod `t^n - 1`.
pub fn length3_poly(n: usize, k: usize, l: usize) -> IntPoly {
    let f = &(&IntPoly::one() + &IntPoly::monomial(BigInt::one(), k)) + &IntPoly::monomial(BigInt::one(), l);
    reduce_cyclic(&f, n)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Length3Variant {
    /// `x_0 x_1 x_{n/2}`
    Half,
    /// `x_0 x_1 x_{n/4}`
    Quarter,
}

impl Length3Variant {
    pub fn third_index(self, n: usize) -> usize {
        match self {
            Length3Variant::Half => n / 2,
            Length3Variant::Quarter => n / 4,
        }
    }
}

/// `Z_{2^{n/2} - 1}` for `16 | n`.
pub fn length3_power16_ab(n: usize, _variant: Length3Variant) -> Result<AbelianGroup> {
    if n == 0 || !n.is_multiple_of(16) {
        return Err(violation(format!("need 16 | n, got n = {n}")));
    }
    Ok(AbelianGroup::cyclic((BigInt::one() << (n / 2)) - 1))
}

/// Abelianization of `G_n(x_0 x_1 x_{n/2-1})` for `gcd(n, 6) = 2`.
pub fn length3_halfminus1_ab(n: usize) -> Result<AbelianGroup> {
    if n.gcd(&6) != 2 {
        return Err(violation(format!("need gcd(n, 6) = 2, got n = {n}")));
    }
    let mut t = SequenceTables::new();
    let three = big(3);
    let orders = match n.gcd(&16) {
        2 => vec![&three * t.lucas(n / 2)],
        4 => {
            let f = t.fib(n / 4);
            vec![f.clone(), big(15) * f]
        }
        8 => {
            let l = t.lucas(n / 4);
            vec![three, l.clone(), l]
        }
        _ => {
            let l = t.lucas(n / 4);
            vec![l.clone(), three * l]
        }
    };
    Ok(AbelianGroup::from_cyclic_factors(&orders))
}

/// Generator count of `G_n(x_0 x_1 x_{n/2-1})^ab` predicted by the residue
/// of `n` mod 16: 1, 2, 3, 2 for `gcd(n,16) = 2, 4, 8, 16`.
pub fn halfminus1_predicted_d(n: usize) -> Result<usize> {
    if n.gcd(&6) != 2 {
        return Err(violation(format!("need gcd(n, 6) = 2, got n = {n}")));
    }
    Ok(match n.gcd(&16) {
        2 => 1,
        8 => 3,
        _ => 2,
    })
}

// ---- CRS groups ----

fn check_crs(p: &CrsParams) -> Result<()> {
    require_positive(&[("n", p.n), ("m", p.m), ("q", p.q), ("r", p.r), ("s", p.s)])
}

/// `ℓ(t^{rm} - 1)/(t^m - 1) - k t^h (t^{sq} - 1)/(t^q - 1)` mod `t^n - 1`.
pub fn crs_exponent_poly(p: &CrsParams) -> Result<IntPoly> {
    check_crs(p)?;
    let f = &progression(&big(p.l), 0, p.m, p.r) - &progression(&big(p.k), p.h, p.q, p.s);
    Ok(reduce_cyclic(&f, p.n))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrsBound {
    /// `gcd(n, mr) - gcd(n, m)`.
    pub bound: usize,
    /// Whether `|k| != 1`, under which the bound is guaranteed.
    pub hypothesis_holds: bool,
}

pub fn crs_lower_bound(p: &CrsParams) -> Result<CrsBound> {
    check_crs(p)?;
    let bound = p.n.gcd(&(p.m * p.r)) - p.n.gcd(&p.m);
    Ok(CrsBound { bound, hypothesis_holds: p.k.abs() != 1 })
}

/// Sieradski group `S(2, n)` as a CRS group.
pub fn sieradski(n: usize) -> CrsParams {
    CrsParams { n, h: 1, k: 1, m: 2, q: 2, r: 2, s: 1, l: 1 }
}
