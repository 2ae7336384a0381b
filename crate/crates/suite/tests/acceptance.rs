use std::time::Duration;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use compring::arith::{resultant, DEFAULT_FACTOR_BUDGET};
use compring::companion::{companion_matrix, element_matrix, smith_fast};
use compring::groups::families::{
    cocktail_poly, cocktail_smith, crs_lower_bound, ff_abelianization, ff_abelianization_closed, ff_order,
    halfminus1_predicted_d, hrns_abelianization, length3_halfminus1_ab, length3_poly, length3_power16_ab,
    ones_block_inverse, sieradski, two_value_circulant_smith, two_value_poly,
};
use compring::groups::{fibonacci, lucas, AbelianGroup, FamilyParams, HrnsRoute, Length3Variant, SequenceTables};
use compring::matrix::{smith_form, SmithDecomposition};
use compring::IntPoly;
use compring_cli::verify_suite;
use compring_suite::Runner;

const B: u64 = DEFAULT_FACTOR_BUDGET;

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn cyclic_modulus(n: usize) -> IntPoly {
    IntPoly::binomial(n, -1)
}

fn oracle(f: &IntPoly, g: &IntPoly) -> SmithDecomposition {
    smith_form(&element_matrix(&f.rem(g).unwrap(), g), false)
}

fn oracle_group(f: &IntPoly, n: usize) -> AbelianGroup {
    AbelianGroup::from_smith(&oracle(f, &cyclic_modulus(n)))
}

fn first_mismatch(bad: Vec<String>, ok: String) -> Result<String, String> {
    if bad.is_empty() {
        Ok(ok)
    } else {
        Err(format!("{} mismatches, first: {}", bad.len(), bad[0]))
    }
}

fn worked_example() -> Result<String, String> {
    let f = IntPoly::from_i64s(&[1, 3, -2]);
    let g = cyclic_modulus(4);
    let expected = ints(&[1, 1, 3, 48]);
    let o = oracle(&f, &g).invariant_factors;
    let fast = smith_fast(&f, &g, B).map_err(|e| e.to_string())?.invariant_factors;
    if o == expected && fast == expected {
        Ok("oracle and fast path give (1,1,3,48)".into())
    } else {
        Err(format!("oracle {o:?}, fast {fast:?}"))
    }
}

fn cocktail() -> Result<String, String> {
    let mut bad = Vec::new();
    for m in 2..=40 {
        let closed = cocktail_smith(m).unwrap().invariant_factors;
        let o = oracle(&cocktail_poly(m), &cyclic_modulus(2 * m)).invariant_factors;
        if closed != o {
            bad.push(format!("m={m}: closed {closed:?}, oracle {o:?}"));
        }
    }
    first_mismatch(bad, "m = 2..40 match the oracle on 2m x 2m matrices".into())
}

fn fractional_fibonacci() -> Result<String, String> {
    let mut bad = Vec::new();
    let mut t = SequenceTables::new();
    let mut checked_orders = 0;
    for n in 1..=24usize {
        for k in 1..=6u64 {
            let p = FamilyParams::FracFib { k, n };
            let o = p.oracle().unwrap();
            let a = ff_abelianization(k, n).unwrap();
            let c = ff_abelianization_closed(k, n).unwrap();
            let g = p.general(B).map_err(|e| e.to_string())?;
            if a != o || c != o || g != o {
                bad.push(format!("k={k}, n={n}: gcd form {a}, case form {c}, pipeline {g}, oracle {o}"));
            }
            if let Some(order) = o.order() {
                checked_orders += 1;
                let expected = ff_order(&mut t, k, n);
                if order != expected {
                    bad.push(format!("k={k}, n={n}: order {order}, formula {expected}"));
                }
            }
        }
    }
    first_mismatch(bad, format!("144 pairs agree four ways; {checked_orders} finite orders match"))
}

fn two_value() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut bad = Vec::new();
    let mut equal_cases = 0;
    for case in 0..200 {
        let (n, s) = loop {
            let n = rng.gen_range(3..=16usize);
            let s = rng.gen_range(1..n);
            if n.gcd(&s) == 1 {
                break (n, s);
            }
        };
        let a = rng.gen_range(-9..=9i64);
        let b = if case % 10 == 0 { a } else { rng.gen_range(-9..=9i64) };
        if a == b {
            equal_cases += 1;
        }
        let closed = two_value_circulant_smith(n, s, a, b).unwrap().invariant_factors;
        let o = oracle(&two_value_poly(n, s, a, b), &cyclic_modulus(n)).invariant_factors;
        if closed != o {
            bad.push(format!("n={n}, s={s}, a={a}, b={b}: closed {closed:?}, oracle {o:?}"));
        }
    }
    first_mismatch(bad, format!("200 seeded cases match ({equal_cases} with a = b)"))
}

fn ones_inverse() -> Result<String, String> {
    let mut pairs = 0;
    for n in 4..=30usize {
        let g = cyclic_modulus(n);
        let c = companion_matrix(&g).unwrap();
        for s in 3..n {
            if n.gcd(&s) != 1 {
                continue;
            }
            pairs += 1;
            let q = ones_block_inverse(n, s).map_err(|e| e.to_string())?;
            let l = element_matrix(&IntPoly::geometric(s), &g);
            // q(C_g) = Σ q_i C_g^i over the rationals
            let mut qc = vec![vec![BigRational::zero(); n]; n];
            let mut power = compring::IntMatrix::identity(n);
            for qi in &q {
                for (r, row) in qc.iter_mut().enumerate() {
                    for (col, x) in row.iter_mut().enumerate() {
                        *x += qi * BigRational::from_integer(power.get(r, col).clone());
                    }
                }
                power = &power * &c;
            }
            for i in 0..n {
                for j in 0..n {
                    let mut acc = BigRational::zero();
                    for k in 0..n {
                        acc += BigRational::from_integer(l.get(i, k).clone()) * &qc[k][j];
                    }
                    let want = if i == j { BigRational::one() } else { BigRational::zero() };
                    if acc != want {
                        return Err(format!("n={n}, s={s}: entry ({i},{j}) is {acc}"));
                    }
                }
            }
        }
    }
    Ok(format!("L q(C_g) = I for all {pairs} coprime pairs 2 < s < n <= 30"))
}

fn hrns() -> Result<String, String> {
    let mut bad = Vec::new();
    let (mut equal, mut scaled) = (0, 0);
    for r in 1..=8usize {
        for s in 1..=8usize {
            for n in 2..=20usize {
                let d = r.gcd(&n).gcd(&s);
                let covered = s == r || (s > r && d > 1 && s / d - r / d == 1);
                if !covered {
                    continue;
                }
                let (g, route) = hrns_abelianization(r, n, s, B).map_err(|e| e.to_string())?;
                match route {
                    HrnsRoute::EqualLengths => equal += 1,
                    HrnsRoute::ScaledDown => scaled += 1,
                    HrnsRoute::General => bad.push(format!("H({r},{n},{s}) took the general route")),
                }
                let o = FamilyParams::Hrns { r, n, s }.oracle().unwrap();
                if g != o {
                    bad.push(format!("H({r},{n},{s}): closed {g}, oracle {o}"));
                }
            }
        }
    }
    let h242 = hrns_abelianization(2, 4, 2, B).unwrap().0;
    if h242.to_string() != "Z_2 + Z^2" {
        bad.push(format!("H(2,4,2) = {h242}"));
    }
    for n in 1..=20usize {
        let h = hrns_abelianization(1, n, 2, B).unwrap().0;
        let f = ff_abelianization(1, n).unwrap();
        if h != f {
            bad.push(format!("H(1,{n},2) = {h} but F(1,{n}) = {f}"));
        }
    }
    first_mismatch(bad, format!("{equal} equal-length and {scaled} scaled-down cases match; H(2,4,2) = Z_2 + Z^2; H(1,n,2) = F(n)"))
}

fn power16() -> Result<String, String> {
    let mut bad = Vec::new();
    let expected = [(16usize, 255u64), (32, 65535), (48, 16777215)];
    for (n, order) in expected {
        for v in [Length3Variant::Half, Length3Variant::Quarter] {
            let closed = length3_power16_ab(n, v).unwrap();
            let o = oracle_group(&length3_poly(n, 1, v.third_index(n)), n);
            let want = AbelianGroup::cyclic(BigInt::from(order));
            if closed != want || o != want {
                bad.push(format!("n={n}, {v:?}: closed {closed}, oracle {o}, expected Z_{order}"));
            }
        }
    }
    first_mismatch(bad, "Z_255, Z_65535, Z_16777215 for both variants, oracle-confirmed".into())
}

fn halfminus1() -> Result<String, String> {
    let mut bad = Vec::new();
    let mut classes = std::collections::BTreeSet::new();
    for n in (2..=50usize).filter(|n| n.gcd(&6) == 2) {
        classes.insert(n.gcd(&16));
        let closed = length3_halfminus1_ab(n).unwrap();
        let o = oracle_group(&length3_poly(n, 1, n / 2 - 1), n);
        if closed != o {
            bad.push(format!("n={n}: closed {closed}, oracle {o}"));
        }
        let predicted = halfminus1_predicted_d(n).unwrap();
        if o.d() != predicted {
            bad.push(format!("n={n}: d({o}) = {}, case value {predicted}", o.d()));
        }
    }
    if classes.len() != 4 {
        bad.push(format!("covered gcd(n,16) classes {classes:?}"));
    }
    first_mismatch(bad, "closed form = oracle and d matches the 1/2/3 case values for all n <= 50".into())
}

fn suite(name: &str, seed: u64, cases: usize) -> Result<String, String> {
    let report = verify_suite(name, seed, cases)?;
    if report.failures.is_empty() {
        Ok(report.to_string())
    } else {
        Err(report.to_string().lines().take(3).collect::<Vec<_>>().join(" | "))
    }
}

fn crs() -> Result<String, String> {
    let summary = suite("bounds", 13, 300)?;
    for n in [12usize, 24] {
        let p = sieradski(n);
        let g = FamilyParams::Crs(p).general(B).map_err(|e| e.to_string())?;
        let o = FamilyParams::Crs(p).oracle().unwrap();
        let bound = crs_lower_bound(&p).unwrap().bound;
        if g != o || g.d() != 2 || bound != 2 {
            return Err(format!("S(2,{n}): pipeline {g}, oracle {o}, bound {bound}"));
        }
    }
    Ok(format!("{summary}; S(2,12) and S(2,24) have d = bound = 2"))
}

fn sequences() -> Result<String, String> {
    let mut bad = Vec::new();
    let quad = IntPoly::from_i64s(&[-1, 1, 1]);
    for n in 1..=60usize {
        let res = resultant(&quad, &cyclic_modulus(n)).unwrap().abs();
        let sign = if n % 2 == 0 { 1 } else { -1 };
        if lucas(n) != res + 1 + sign {
            bad.push(format!("Lucas-resultant identity fails at n={n}"));
        }
    }
    let (mut lemma, mut squares) = (0, 0);
    for n in 1..=200usize {
        let c16 = n.gcd(&16);
        if n.gcd(&6) == 2 && [2, 4, 16].contains(&c16) {
            lemma += 1;
            let h = n / 2;
            let eps = if h % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            let lhs = fibonacci(h).gcd(&(BigInt::one() + eps * fibonacci(h - 1)));
            let rhs = match c16 {
                2 => BigInt::one(),
                4 => fibonacci(n / 4),
                _ => lucas(n / 4),
            };
            if lhs != rhs {
                bad.push(format!("gcd lemma fails at n={n}: {lhs} vs {rhs}"));
            }
        }
        if c16 == 4 || c16 == 16 {
            squares += 1;
            let lhs = lucas(n / 2) + 2;
            let rhs = if c16 == 4 { BigInt::from(5) * fibonacci(n / 4).pow(2) } else { lucas(n / 4).pow(2) };
            if lhs != rhs {
                bad.push(format!("Lucas square identity fails at n={n}"));
            }
        }
    }
    first_mismatch(bad, format!("resultant identity n <= 60; gcd lemma at {lemma} n; square identities at {squares} n"))
}

fn main() {
    let mut r = Runner::new();
    r.run(1, "worked example (1,1,3,48) by oracle and fast path", Duration::from_millis(10), worked_example);
    r.run(2, "cocktail party m in [2,40]", secs(60), cocktail);
    r.run(3, "fractional Fibonacci n <= 24, k <= 6", secs(60), fractional_fibonacci);
    r.run(4, "two-value circulants, 200 seeded cases", secs(60), two_value);
    r.run(5, "inverse of the ones block, n <= 30", secs(30), ones_inverse);
    r.run(6, "H(r,n,s) closed forms, r,s <= 8, n <= 20", secs(120), hrns);
    r.run(7, "x0 x1 x_{n/2} and x0 x1 x_{n/4}, n in {16,32,48}", secs(60), power16);
    r.run(8, "x0 x1 x_{n/2-1}, gcd(n,6) = 2, n <= 50", secs(60), halfminus1);
    r.run(9, "swap reduction, 300 seeded pairs", secs(60), || suite("swap", 9, 300));
    r.run(10, "composition reduction, 150 seeded triples", secs(60), || suite("compose", 10, 150));
    r.run(11, "non-unit count, bounds and linear-gcd predicate, 300 pairs", secs(120), || suite("nonunit", 11, 300));
    r.run(12, "second-last determinantal divisor vs minors, deg g <= 7", secs(60), || suite("gamma", 12, 300));
    r.run(13, "CRS lower bound, 300 tuples with |k| >= 2; Sieradski equality", secs(120), crs);
    r.run(14, "Lucas and Fibonacci identities", secs(10), sequences);
    let total = r.elapsed();
    r.run(15, "full suite wall-clock", secs(600), move || {
        let msg = format!("total {:.1} s", total.as_secs_f64());
        if total <= secs(600) {
            Ok(msg)
        } else {
            Err(msg)
        }
    });
    std::process::exit(r.finish());
}
