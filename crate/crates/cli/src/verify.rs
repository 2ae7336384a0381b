//! Seeded property suites. Every case draws from its own ChaCha stream, so a
//! report depends only on `(suite, seed, cases)`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use compring::arith::{resultant, DEFAULT_FACTOR_BUDGET};
use compring::companion::{
    compose_reduce, element_matrix, gamma_last, gamma_second_last, gamma_second_last_is_unit, gcd_split, nonunit_count,
    nonunit_lower_bound, swap_reduce,
};
use compring::groups::families::{crs_exponent_poly, crs_lower_bound};
use compring::groups::{AbelianGroup, CrsParams, FamilyParams};
use compring::matrix::{det_bareiss, determinantal_divisors_bruteforce, smith_form, SmithDecomposition};
use compring::IntPoly;

pub const SUITES: [&str; 6] = ["swap", "compose", "nonunit", "gamma", "families", "bounds"];

const SMALL_PRIMES: [u32; 6] = [2, 3, 5, 7, 11, 13];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseFailure {
    pub case: usize,
    pub detail: String,
    pub repro: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub suite: String,
    pub seed: u64,
    pub cases: usize,
    pub failures: Vec<CaseFailure>,
}

impl Report {
    pub fn passed(&self) -> usize {
        self.cases - self.failures.len()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite,
            "seed": self.seed,
            "cases": self.cases,
            "passed": self.passed(),
            "failures": self.failures.iter().map(|f| json!({"case": f.case, "detail": f.detail, "repro": f.repro})).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "suite {} (seed {}): {}/{} pass", self.suite, self.seed, self.passed(), self.cases)?;
        for c in &self.failures {
            write!(f, "\nFAIL case {}: {}\n  reproduce: {}", c.case, c.detail, c.repro)?;
        }
        Ok(())
    }
}

struct Case {
    repro: String,
    outcome: Result<(), String>,
}

fn fail(repro: String, detail: impl Into<String>) -> Case {
    Case { repro, outcome: Err(detail.into()) }
}

fn check(repro: String, cond: bool, detail: impl FnOnce() -> String) -> Case {
    Case { repro, outcome: if cond { Ok(()) } else { Err(detail()) } }
}

/// Runs `cases` seeded cases of the named suite.
pub fn verify_suite(name: &str, seed: u64, cases: usize) -> Result<Report, String> {
    let run: fn(&mut ChaCha8Rng, usize) -> Case = match name {
        "swap" => swap_case,
        "compose" => compose_case,
        "nonunit" => nonunit_case,
        "gamma" => gamma_case,
        "families" => families_case,
        "bounds" => bounds_case,
        _ => return Err(format!("unknown suite {name:?}; expected one of {}", SUITES.join(", "))),
    };
    let mut failures = Vec::new();
    for i in 0..cases {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(i as u64);
        let c = run(&mut rng, i);
        if let Err(detail) = c.outcome {
            failures.push(CaseFailure { case: i, detail, repro: c.repro });
        }
    }
    Ok(Report { suite: name.to_string(), seed, cases, failures })
}

pub fn random_poly(rng: &mut ChaCha8Rng, max_deg: usize, c: i64) -> IntPoly {
    let d = rng.gen_range(0..=max_deg);
    IntPoly::new((0..=d).map(|_| BigInt::from(rng.gen_range(-c..=c))).collect())
}

pub fn random_monic(rng: &mut ChaCha8Rng, deg: usize, c: i64) -> IntPoly {
    let mut v: Vec<BigInt> = (0..deg).map(|_| BigInt::from(rng.gen_range(-c..=c))).collect();
    v.push(BigInt::one());
    IntPoly::new(v)
}

fn smith_of(f: &IntPoly, g: &IntPoly) -> SmithDecomposition {
    let phi = f.rem(g).expect("monic modulus");
    smith_form(&element_matrix(&phi, g), false)
}

fn smith_repro(f: &IntPoly, g: &IntPoly) -> String {
    format!("compring smith --f '{f}' --g '{g}' --verify")
}

fn swap_case(rng: &mut ChaCha8Rng, _: usize) -> Case {
    let df = rng.gen_range(1..=8);
    let dg = rng.gen_range(df..=8);
    let f = random_monic(rng, df, 5);
    let g = random_monic(rng, dg, 5);
    let repro = smith_repro(&f, &g);
    let (units, e) = match swap_reduce(&f, &g) {
        Ok(x) => x,
        Err(err) => return fail(repro, err.to_string()),
    };
    let mut swapped = vec![BigInt::one(); units];
    swapped.extend(smith_form(&e.to_matrix(), false).invariant_factors);
    let direct = smith_of(&f, &g).invariant_factors;
    check(repro, direct == swapped, || format!("f(C_g) gives {direct:?}, swap gives {swapped:?}"))
}

fn compose_case(rng: &mut ChaCha8Rng, _: usize) -> Case {
    let f = random_poly(rng, 3, 4);
    let dg = rng.gen_range(1..=4);
    let g = random_monic(rng, dg, 4);
    let dh = rng.gen_range(1..=3);
    let h = random_monic(rng, dh, 3);
    let (fh, gh) = (f.compose(&h), g.compose(&h));
    let repro = smith_repro(&fh, &gh);
    let reduced = match compose_reduce(&f, &g, &h) {
        Ok(c) => c.smith().invariant_factors,
        Err(err) => return fail(repro, err.to_string()),
    };
    let direct = smith_of(&fh, &gh).invariant_factors;
    check(repro, direct == reduced, || format!("composed element gives {direct:?}, repetition gives {reduced:?}"))
}

fn nonunit_case(rng: &mut ChaCha8Rng, _: usize) -> Case {
    let dg = rng.gen_range(1..=8);
    let g = random_monic(rng, dg, 5);
    let f = random_poly(rng, 7, 5);
    let repro = smith_repro(&f, &g);
    let oracle = smith_of(&f, &g);
    let expected = oracle.nonunit_count();
    match nonunit_count(&f, &g, DEFAULT_FACTOR_BUDGET) {
        Ok(k) if k == expected => {}
        Ok(k) => return fail(repro, format!("nonunit_count {k}, oracle {expected}")),
        Err(err) => return fail(repro, err.to_string()),
    }
    for p in SMALL_PRIMES {
        match nonunit_lower_bound(&f, &g, &BigInt::from(p)) {
            Ok(b) if b <= expected => {}
            Ok(b) => return fail(repro, format!("bound {b} at p = {p} exceeds oracle count {expected}")),
            Err(err) => return fail(repro, err.to_string()),
        }
    }
    let res = resultant(&f, &g).expect("monic modulus");
    if !res.is_zero() {
        let n = oracle.invariant_factors.len();
        let oracle_unit = n < 2 || oracle.invariant_factors[n - 2].is_one();
        match gamma_second_last_is_unit(&f, &g, DEFAULT_FACTOR_BUDGET) {
            Ok(u) if u == oracle_unit => {}
            Ok(u) => return fail(repro, format!("linear-gcd predicate {u}, oracle says {oracle_unit}")),
            Err(err) => return fail(repro, err.to_string()),
        }
    }
    Case { repro, outcome: Ok(()) }
}

fn gamma_case(rng: &mut ChaCha8Rng, _: usize) -> Case {
    let dg = rng.gen_range(1..=7);
    let (f, g) = loop {
        let g = random_monic(rng, dg, 5);
        let f = random_poly(rng, dg - 1, 5);
        if !resultant(&f, &g).expect("monic modulus").is_zero() {
            break (f, g);
        }
    };
    let repro = smith_repro(&f, &g);
    let split = gcd_split(&f, &g).expect("monic modulus");
    let m = element_matrix(&f.rem(&g).expect("monic modulus"), &g);
    let brute = match determinantal_divisors_bruteforce(&m, dg - 1) {
        Ok(d) => d.last().cloned().unwrap_or_else(BigInt::one),
        Err(err) => return fail(repro, err.to_string()),
    };
    let second = match gamma_second_last(&split) {
        Ok(x) => x,
        Err(err) => return fail(repro, err.to_string()),
    };
    if second != brute {
        return fail(repro, format!("content of adjugate row {second}, minors give {brute}"));
    }
    let last = gamma_last(&split).expect("nonzero numerator");
    let det = det_bareiss(&m).expect("square");
    check(repro, last == det.magnitude().clone().into(), || format!("|res| = {last}, |det| = {det}"))
}

fn random_family(rng: &mut ChaCha8Rng, which: usize) -> FamilyParams {
    match which % 7 {
        0 => FamilyParams::FracFib { k: rng.gen_range(1..=6), n: rng.gen_range(1..=16) },
        1 => loop {
            let n = rng.gen_range(3..=12);
            let s = rng.gen_range(1..n);
            let (a, b) = (rng.gen_range(-9..=9), rng.gen_range(-9..=9));
            if n.gcd(&s) == 1 {
                break FamilyParams::Neuwirth { n, s, a, b };
            }
        },
        2 => loop {
            let (alpha, beta, l) = (rng.gen_range(1..=6u64), rng.gen_range(1..=5u64), rng.gen_range(1..=4u64));
            if alpha.gcd(&beta) == 1 && alpha.gcd(&l) == 1 {
                break FamilyParams::Periodic { n: rng.gen_range(2..=8), alpha, beta, l };
            }
        },
        3 => FamilyParams::Hrns { r: rng.gen_range(1..=6), n: rng.gen_range(1..=14), s: rng.gen_range(1..=6) },
        4 => {
            if rng.gen_bool(0.25) {
                let n = 16 * rng.gen_range(1..=2);
                let l = if rng.gen_bool(0.5) { n / 2 } else { n / 4 };
                FamilyParams::Length3 { n, k: 1, l }
            } else {
                let n = loop {
                    let n = 2 * rng.gen_range(1..=20);
                    if n.gcd(&6) == 2 {
                        break n;
                    }
                };
                FamilyParams::Length3 { n, k: 1, l: n / 2 - 1 }
            }
        }
        5 => FamilyParams::Cocktail { m: rng.gen_range(1..=10) },
        _ => FamilyParams::Crs(random_crs(rng)),
    }
}

/// CRS tuple with `n <= 18`, other parameters in `1..=6`, `2 <= |k| <= 6`.
pub fn random_crs(rng: &mut ChaCha8Rng) -> CrsParams {
    let k = rng.gen_range(2..=6) * if rng.gen_bool(0.5) { 1 } else { -1 };
    CrsParams {
        n: rng.gen_range(1..=18),
        h: rng.gen_range(1..=6),
        k,
        m: rng.gen_range(1..=6),
        q: rng.gen_range(1..=6),
        r: rng.gen_range(1..=6),
        s: rng.gen_range(1..=6),
        l: rng.gen_range(1..=6),
    }
}

fn families_case(rng: &mut ChaCha8Rng, i: usize) -> Case {
    let p = random_family(rng, i);
    let repro = format!("compring family --params '{}' --verify", serde_json::to_string(&p).expect("params serialize"));
    let oracle = match p.oracle() {
        Ok(g) => g,
        Err(err) => return fail(repro, err.to_string()),
    };
    let general = match p.general(DEFAULT_FACTOR_BUDGET) {
        Ok(g) => g,
        Err(err) => return fail(repro, err.to_string()),
    };
    if general != oracle {
        return fail(repro, format!("pipeline {general}, oracle {oracle}"));
    }
    match p.closed_form(DEFAULT_FACTOR_BUDGET) {
        Ok(c) => check(repro, c == oracle, || format!("closed form {c}, oracle {oracle}")),
        Err(compring::Error::HypothesisViolation(_)) => Case { repro, outcome: Ok(()) },
        Err(err) => fail(repro, err.to_string()),
    }
}

fn bounds_case(rng: &mut ChaCha8Rng, _: usize) -> Case {
    let p = random_crs(rng);
    let repro = format!(
        "compring bound --n {} --h {} --k {} --m {} --q {} --r {} --s {} --l {}",
        p.n, p.h, p.k, p.m, p.q, p.r, p.s, p.l
    );
    let f = crs_exponent_poly(&p).expect("valid parameters");
    let g = IntPoly::binomial(p.n, -1);
    let oracle = smith_of(&f, &g);
    let group = AbelianGroup::from_smith(&oracle);
    let bound = crs_lower_bound(&p).expect("valid parameters").bound;
    if group.d() < bound {
        return fail(repro, format!("d({group}) = {} below bound {bound}", group.d()));
    }
    match FamilyParams::Crs(p).general(DEFAULT_FACTOR_BUDGET) {
        Ok(fast) if fast == group => {}
        Ok(fast) => return fail(repro, format!("pipeline {fast}, oracle {group}")),
        Err(err) => return fail(repro, err.to_string()),
    }
    for q in SMALL_PRIMES {
        match nonunit_lower_bound(&f, &g, &BigInt::from(q)) {
            Ok(b) if b <= oracle.nonunit_count() => {}
            Ok(b) => return fail(repro, format!("bound {b} at p = {q} exceeds {}", oracle.nonunit_count())),
            Err(err) => return fail(repro, err.to_string()),
        }
    }
    Case { repro, outcome: Ok(()) }
}
