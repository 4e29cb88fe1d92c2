//! Acceptance criteria, one PASS/FAIL line each. Exits non-zero if any fail.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use nct_core::addcomb::{
    is_free, known_construction, max_extremal, popular_sums, sumset, ExtremalProblem, Variant,
};
use nct_core::arith::{divisors, is_prime, repunit_forms};
use nct_core::bounds::{
    best_family, classify_degenerate_cubes, classify_restricted_triples, gamma_bracket,
    item_is_covered,
};
use nct_core::coverage::{covers_imprimitive_exact, imprimitive_shortcut_small_k};
use nct_core::families::{build_family, verify_family, Provenance};
use nct_core::{enumerate_cycle_types, invariant_set_sizes, CycleType, Group};

const S: Group = Group::Symmetric;
const A: Group = Group::Alternating;

type Check = Result<String, String>;

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    if t > limit {
        Err(format!("took {t:.1?}, limit {limit:?}"))
    } else {
        Ok(())
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn non_repunit_prime(p: u32) -> bool {
    is_prime(p.into()) && repunit_forms(p.into()).is_empty()
}

/// 1. Every applicable built-in family covers for n in [5, 60], plus P22 at
///    primes 1 mod 3 up to 199, with sizes matching their formulas.
fn families_sweep() -> Check {
    let start = Instant::now();
    let mut checked = 0;
    let mut cases: Vec<(Provenance, u32, Group)> = Vec::new();
    for n in 5..=60 {
        for g in [S, A] {
            for p in Provenance::BUILT_IN {
                if p.violated_hypothesis(n, g).is_none() {
                    cases.push((p, n, g));
                }
            }
        }
    }
    for p in (61..=199).filter(|&p| is_prime(p.into()) && p % 3 == 1) {
        cases.push((Provenance::PrimeOneModThree, p, A));
    }
    for (p, n, g) in cases {
        let f = build_family(p, n, g).map_err(|e| e.to_string())?;
        let r = verify_family(&f);
        ensure(r.covered, || {
            format!("{p} at {g}{n} leaves {} types uncovered", r.uncovered_count)
        })?;
        let formula = p.size_formula(n, g).map_err(|e| e.to_string())?;
        let exact_required = matches!(
            p,
            Provenance::AltOdd | Provenance::Even | Provenance::PrimeOneModThree
        ) || (p == Provenance::SymOdd && is_prime(n.into()));
        ensure(
            formula.admits(f.len()) && (!exact_required || formula.exact),
            || format!("{p} at {g}{n}: size {} vs formula {:?}", f.len(), formula),
        )?;
        checked += 1;
    }
    within(start, Duration::from_secs(300))?;
    Ok(format!(
        "{checked} families verified in {:.1?}",
        start.elapsed()
    ))
}

/// 2. Symmetric groups of degree 2p and 2^k.
fn symmetric_brackets() -> Check {
    let mut out = Vec::new();
    for n in [38u32, 46, 58, 62, 64] {
        let start = Instant::now();
        let b = gamma_bracket(n, S).map_err(|e| e.to_string())?;
        let want = u64::from(n / 4 + 1);
        ensure(b.certified && b.lower_sound, || {
            format!("S{n} not certified")
        })?;
        ensure(b.lower == want && b.upper == want, || {
            format!("S{n}: [{}, {}] expected {want}", b.lower, b.upper)
        })?;
        within(start, Duration::from_secs(60)).map_err(|e| format!("S{n}: {e}"))?;
        out.push(format!("S{n}={want}"));
    }
    Ok(out.join(" "))
}

/// 3. Alternating groups of prime degree in [37, 97], repunit degrees excluded.
fn alternating_brackets() -> Check {
    let start = Instant::now();
    let mut out = Vec::new();
    for p in (37..=97).filter(|&p| non_repunit_prime(p)) {
        let b = gamma_bracket(p, A).map_err(|e| e.to_string())?;
        let want = u64::from((p + 1) / 3);
        ensure(b.certified && b.lower_sound, || {
            format!("A{p} not certified")
        })?;
        ensure(b.lower == want && b.upper == want, || {
            format!("A{p}: [{}, {}] expected {want}", b.lower, b.upper)
        })?;
        if p % 3 == 1 {
            let w = &b.upper_witness;
            ensure(
                w.provenance == Provenance::PrimeOneModThree && w.len() as u32 == (p - 1) / 3,
                || format!("A{p}: upper witness {} of size {}", w.provenance, w.len()),
            )?;
        }
        out.push(p.to_string());
    }
    Ok(format!(
        "primes {} in {:.1?}",
        out.join(","),
        start.elapsed()
    ))
}

/// 4. Sum-free maxima against 2n/3.
fn sum_free_bound() -> Check {
    let start = Instant::now();
    let mut at_multiples_of_six = Vec::new();
    for n in 3..=30u32 {
        let r = max_extremal(&ExtremalProblem::new(Variant::CoprimeSumFree, n))
            .map_err(|e| e.to_string())?;
        let cap = (2 * n / 3) as usize;
        ensure(r.certified && r.maximum <= cap, || {
            format!("coprime n={n}: {} > {cap}", r.maximum)
        })?;
        if n % 6 == 0 {
            ensure(r.maximum == cap, || {
                format!("coprime n={n}: {} != {cap}", r.maximum)
            })?;
            at_multiples_of_six.push(r.maximum.to_string());
        }
        if n <= 24 {
            let t = max_extremal(&ExtremalProblem::new(Variant::RestrictedTripleFree, n))
                .map_err(|e| e.to_string())?;
            ensure(t.certified && t.maximum <= cap, || {
                format!("restricted n={n}: {} > {cap}", t.maximum)
            })?;
            ensure(t.maximum >= r.maximum, || {
                format!("restricted n={n} below coprime")
            })?;
        }
    }
    within(start, Duration::from_secs(180))?;
    Ok(format!("maxima at 6|n: {}", at_multiples_of_six.join(",")))
}

/// 5. Cube-free maxima against 5n/6 + 6 and 8n/9 + 6.
fn cube_free_bound() -> Check {
    let start = Instant::now();
    for n in 6..=30u32 {
        for v in [Variant::CoprimeCubeFree, Variant::DegenerateCubeFree] {
            let r = max_extremal(&ExtremalProblem::new(v, n)).map_err(|e| e.to_string())?;
            ensure(
                r.certified && (r.maximum as f64) <= 5.0 * f64::from(n) / 6.0 + 6.0,
                || format!("{v} n={n}: {}", r.maximum),
            )?;
            if v == Variant::CoprimeCubeFree && n % 3 == 0 {
                let c = known_construction("no-mult-3", n).map_err(|e| e.to_string())?;
                let p = ExtremalProblem::new(v, n);
                ensure(
                    is_free(&c, &p).map_err(|e| e.to_string())?.is_none(),
                    || format!("no-mult-3 not free at {n}"),
                )?;
                ensure(r.maximum >= c.len(), || {
                    format!("max below construction at {n}")
                })?;
                if n == 9 {
                    ensure(r.maximum == 6 && c.len() == 6, || {
                        format!("n=9: max {}", r.maximum)
                    })?;
                }
            }
        }
        if n % 2 == 0 {
            let r = max_extremal(&ExtremalProblem::new(Variant::DegenerateCubeEvenFree, n))
                .map_err(|e| e.to_string())?;
            ensure(
                r.certified && (r.maximum as f64) <= 8.0 * f64::from(n) / 9.0 + 6.0,
                || format!("even-x n={n}: {}", r.maximum),
            )?;
        }
    }
    within(start, Duration::from_secs(300))?;
    Ok(format!("n in [6, 30] in {:.1?}", start.elapsed()))
}

/// 6. The small-k shortcut equals the exact block search.
fn shortcut_oracle() -> Check {
    let mut types = 0;
    for n in (4..=24u32).filter(|&n| !is_prime(n.into())) {
        for t in enumerate_cycle_types(n, Some(4), None).map_err(|e| e.to_string())? {
            if !(2..=4).contains(&t.k()) || t.parts_gcd() != 1 {
                continue;
            }
            let exact = divisors(n.into())
                .into_iter()
                .map(|b| b as u32)
                .filter(|&b| b > 1 && b < n)
                .any(|b| covers_imprimitive_exact(b, &t).unwrap());
            let fast = imprimitive_shortcut_small_k(&t).map_err(|e| e.to_string())?;
            ensure(exact == fast, || {
                format!("{t}: exact {exact}, shortcut {fast}")
            })?;
            types += 1;
        }
    }
    Ok(format!("{types} types, 0 discrepancies"))
}

/// 7. Classifier counts against their ceilings, items re-verified up to 60.
fn classifier_ceilings() -> Check {
    let mut items = 0;
    for n in 9..=200u32 {
        let g = if n % 2 == 1 { S } else { A };
        let t = classify_restricted_triples(n).map_err(|e| e.to_string())?;
        let c = classify_degenerate_cubes(n, g).map_err(|e| e.to_string())?;
        for r in [&t, &c] {
            ensure(r.count <= r.ceiling, || {
                format!(
                    "{} n={n}: count {} > ceiling {}",
                    r.kind, r.count, r.ceiling
                )
            })?;
            if n <= 60 {
                for i in &r.items {
                    ensure(item_is_covered(i).map_err(|e| e.to_string())?, || {
                        format!("{} n={n}: {} not covered", r.kind, i.cycle_type)
                    })?;
                    items += 1;
                }
            }
        }
    }
    Ok(format!("{items} items re-verified"))
}

/// 8. Ratio table for the three sweeps.
fn limits_table() -> Check {
    let start = Instant::now();
    let mut rows = 0;
    for n in (6..=200u32).filter(|&n| n % 2 == 0 && is_prime(u64::from(n / 2))) {
        let (f, _) = best_family(n, S).map_err(|e| e.to_string())?;
        let r = f.len() as f64 / f64::from(n);
        ensure((0.25..=0.25 + 2.0 / f64::from(n)).contains(&r), || {
            format!("S{n}: {r}")
        })?;
        rows += 1;
    }
    for p in (5..=199u32).filter(|&p| non_repunit_prime(p)) {
        let b = gamma_bracket(p, A).map_err(|e| e.to_string())?;
        let pf = f64::from(p);
        let band = (1.0 / 3.0 - 2.0 / pf)..=(1.0 / 3.0 + 2.0 / pf);
        for v in [b.lower, b.upper] {
            ensure(band.contains(&(v as f64 / pf)), || {
                format!("A{p}: [{}, {}] outside band", b.lower, b.upper)
            })?;
        }
        rows += 1;
    }
    for n in (6..=120u32).step_by(6) {
        let f = build_family(Provenance::TwoPrimes, n, S).map_err(|e| e.to_string())?;
        ensure(verify_family(&f).covered, || format!("P23 fails at S{n}"))?;
        let r = f.len() as f64 / f64::from(n);
        ensure(r <= 1.0 / 6.0 + 2.5 / f64::from(n), || {
            format!("S{n}: P23 ratio {r}")
        })?;
        rows += 1;
    }
    within(start, Duration::from_secs(120))?;
    Ok(format!("{rows} rows in {:.1?}", start.elapsed()))
}

/// 9. Randomized identities with a fixed seed.
fn property_suites() -> Check {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let random_subset = |rng: &mut StdRng, n: u32| -> Vec<u32> {
        loop {
            let s: Vec<u32> = (0..n).filter(|_| rng.gen_bool(0.4)).collect();
            if !s.is_empty() {
                return s;
            }
        }
    };
    for p in [5u32, 7, 11, 13] {
        for _ in 0..200 {
            let a = random_subset(&mut rng, p);
            let b = random_subset(&mut rng, p);
            let s = sumset(&a, &b, p);
            ensure(s.len() >= (a.len() + b.len() - 1).min(p as usize), || {
                format!("Cauchy-Davenport fails for {a:?} + {b:?} mod {p}")
            })?;
        }
    }
    for _ in 0..200 {
        let n = rng.gen_range(2..30);
        let a = random_subset(&mut rng, n);
        let b = random_subset(&mut rng, n);
        ensure(popular_sums(&a, &b, n, 1) == sumset(&a, &b, n), || {
            "K = 1".into()
        })?;
        for k in 1..6 {
            let hi: BTreeSet<u32> = popular_sums(&a, &b, n, k + 1).into_iter().collect();
            let lo: BTreeSet<u32> = popular_sums(&a, &b, n, k).into_iter().collect();
            ensure(hi.is_subset(&lo), || {
                format!("antitonicity fails at K = {k}")
            })?;
        }
    }
    for _ in 0..500 {
        let n = rng.gen_range(1..=30u32);
        let mut left = n;
        let mut parts = Vec::new();
        while left > 0 {
            let x = rng.gen_range(1..=left);
            parts.push(x);
            left -= x;
        }
        // Sign from the parity of the number of transpositions in a cycle decomposition.
        let transpositions: u32 = parts.iter().map(|x| x - 1).sum();
        let t = CycleType::new(parts).map_err(|e| e.to_string())?;
        let expected = if transpositions % 2 == 0 { 1 } else { -1 };
        ensure(t.sign().as_i8() == expected, || format!("sign of {t}"))?;
        let sizes: BTreeSet<u32> = invariant_set_sizes(&t).into_iter().collect();
        ensure(sizes.iter().all(|s| sizes.contains(&(n - s))), || {
            format!("subset sums of {t} not symmetric")
        })?;
    }
    Ok("Cauchy-Davenport, popular sums, subset sums, sign".into())
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Check);
    let criteria: [Criterion; 9] = [
        ("family sweep", families_sweep),
        ("S_n brackets at 2p and 2^k", symmetric_brackets),
        ("A_p brackets at primes", alternating_brackets),
        ("sum-free 2n/3 bound", sum_free_bound),
        ("cube-free 5n/6 and 8n/9 bounds", cube_free_bound),
        ("imprimitive shortcut oracle", shortcut_oracle),
        ("classifier ceilings", classifier_ceilings),
        ("limits table", limits_table),
        ("property suites", property_suites),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let t = start.elapsed();
        match result {
            Ok(detail) => println!("PASS criterion {}: {name} ({t:.1?}) {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name} ({t:.1?}) {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
