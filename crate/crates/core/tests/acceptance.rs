//! Acceptance gate: one line per criterion, nonzero exit if any fails.

use std::time::Instant;

use hermquot::agc::{brute_min_distance, build_cl, designed_distances, gkl_bound_cl, DEFAULT_BRUTE_BUDGET};
use hermquot::cli::{reproduce, run, strip_timing};
use hermquot::curves::{audit, build_curve, build_dp_group, enumerate_points, verify_cover, Budget, Family, PresetCase};
use hermquot::numsg::{gcd, is_telescopic, NumericalSemigroup};
use hermquot::rrspace::cab_parameters;
use serde_json::Value;

type Outcome = (bool, String);

fn example_one() -> Outcome {
    let r = reproduce(1, &Budget::default()).expect("example 1 runs");
    let failed: Vec<&str> = r.checks.iter().filter(|c| !c.pass).map(|c| c.name).collect();
    (failed.is_empty(), format!("{}/{} checks; failed {:?}", r.passed, r.checks.len(), failed))
}

fn example_two() -> Outcome {
    let r = reproduce(2, &Budget::default()).expect("example 2 runs");
    let failed: Vec<String> = r
        .checks
        .iter()
        .filter(|c| !c.pass)
        .map(|c| format!("{} (expected {}, got {})", c.name, c.expected, compact(&c.actual)))
        .collect();
    (failed.is_empty(), format!("{}/{} checks; failed {}", r.passed, r.checks.len(), failed.join("; ")))
}

fn compact(v: &Value) -> String {
    match v.as_array() {
        Some(a) if a.len() > 4 => format!("[{}, .., {}] ({} values)", a[0], a[a.len() - 1], a.len()),
        _ => v.to_string(),
    }
}

fn maximality() -> Outcome {
    let mut bad = vec![];
    for (p, h) in [(5, 1), (7, 1), (11, 1), (5, 2)] {
        let spec = build_curve(Family::Hermitian, p, h, None, false).unwrap();
        let q = spec.q;
        let (set, _) = audit(&spec, &Budget::default()).unwrap();
        if set.points.len() as u64 + 1 != q * q * q + 1 {
            bad.push(format!("hermitian q={q}: {}", set.points.len() + 1));
        }
    }
    for (p, h, d) in [(7, 2, 5), (5, 2, 13), (5, 3, 3)] {
        let spec = build_curve(Family::FamilyI, p, h, Some(d), false).unwrap();
        let q = spec.q;
        let (_, r) = audit(&spec, &Budget::default()).unwrap();
        if r.expected_total != q * q + 2 * spec.genus() * q + 1 || r.deficit != 1 {
            bad.push(format!("I({p},{h},{d}): deficit {}", r.deficit));
        }
    }
    (bad.is_empty(), format!("4 hermitian + 3 family I audits; mismatches {bad:?}"))
}

fn genus_cross_check() -> Outcome {
    let mut n = 0;
    let mut bad = vec![];
    for (p, h) in [(3u32, 2u32), (3, 3), (5, 1), (5, 2), (5, 3), (7, 1), (7, 2), (11, 1), (13, 1)] {
        let q = (p as u64).pow(h);
        let mut cases = vec![(Family::Hermitian, None), (Family::IntermediateCenter, None)];
        for d in (2..=q + 1).filter(|&d| (q + 1) % d == 0 && hermquot::gf::is_prime(d)) {
            cases.push((Family::FamilyI, Some(d as u32)));
        }
        for (family, d) in cases {
            let spec = build_curve(family, p, h, d, false).unwrap();
            let shape = cab_parameters(&spec).unwrap();
            let s = NumericalSemigroup::from_generators(&[shape.a, shape.b]).unwrap();
            let closed = (shape.a - 1) * (shape.b - 1) / 2;
            n += 1;
            if spec.genus() != closed || s.genus() != closed {
                bad.push(format!("{family}({p},{h},{d:?})"));
            }
        }
    }
    (bad.is_empty(), format!("{n} instances; mismatches {bad:?}"))
}

fn covers() -> Outcome {
    let mut parts = vec![];
    let mut ok = true;
    for (family, p, h, d) in [(Family::FamilyI, 5, 2, 13), (Family::FamilyII, 11, 2, 5), (Family::FamilyIII, 11, 1, 5)] {
        let spec = build_curve(family, p, h, Some(d), false).unwrap();
        let r = verify_cover(&spec, &Budget::default()).unwrap();
        let dp = (d * p) as u64;
        let divides = r.fiber_histogram.keys().all(|s| dp.is_multiple_of(*s));
        ok &= r.violations == 0 && divides;
        parts.push(format!("{family}: {} violations, fibers {:?}", r.violations, r.fiber_histogram));
    }
    (ok, parts.join("; "))
}

fn presets() -> Outcome {
    let mut parts = vec![];
    let mut ok = true;
    for (case, p, h, d) in [(PresetCase::I, 7, 2, 5), (PresetCase::II, 11, 2, 5), (PresetCase::III, 11, 1, 5)] {
        let g = build_dp_group(case, p, h, d).unwrap();
        let m = &g.model;
        let conj = g.conjugate_s_by_t();
        let in_s = (1..p as u64).any(|i| m.power(&g.s, i).unwrap() == conj);
        let relation = match case {
            PresetCase::I => g.is_abelian(),
            _ => in_s && conj != g.s,
        };
        let mut iterated = m.identity();
        let mut closed = true;
        for i in 1..=p as u64 {
            iterated = m.compose(&g.s, &iterated).unwrap();
            closed &= m.closed_form_power(&g.s, i).unwrap() == iterated;
        }
        ok &= g.order() == (d * p) as usize && relation && closed;
        parts.push(format!("{case:?}: order {}, relation {relation}, closed form {closed}", g.order()));
    }
    (ok, parts.join("; "))
}

fn sieve(gens: &[u64], limit: usize) -> Vec<bool> {
    let mut m = vec![false; limit];
    m[0] = true;
    for n in 1..limit {
        m[n] = gens.iter().any(|&g| g as usize <= n && m[n - g as usize]);
    }
    m
}

fn semigroup_oracles() -> Outcome {
    let mut pairs = 0;
    let mut bad = vec![];
    for a in 1..=60u64 {
        for b in a..=60 {
            if gcd(a, b) != 1 || a == 1 {
                continue;
            }
            pairs += 1;
            let s = NumericalSemigroup::from_generators(&[a, b]).unwrap();
            if s.frobenius() != (a * b - a - b) as i64 || s.genus() != (a - 1) * (b - 1) / 2 {
                bad.push(format!("<{a},{b}>"));
            }
        }
    }
    let mut telescopic = 0;
    for a in 2..=60u64 {
        for b in 2..=60u64 {
            if gcd(a, b) == 1 {
                continue;
            }
            for c in 2..=60u64 {
                if gcd(gcd(a, b), c) != 1 {
                    continue;
                }
                let r = is_telescopic(&[a, b, c]).unwrap();
                let (Some(l), Some(g)) = (r.l_g, r.g) else { continue };
                telescopic += 1;
                let mem = sieve(&[a, b, c], (l + a as i64 + 2) as usize);
                let largest = mem.iter().rposition(|&m| !m).map_or(-1, |i| i as i64);
                let gaps = mem.iter().filter(|&&m| !m).count() as i64;
                if largest != l || gaps != g {
                    bad.push(format!("({a},{b},{c})"));
                }
            }
        }
    }
    (bad.is_empty(), format!("{pairs} coprime pairs, {telescopic} telescopic triples; mismatches {bad:?}"))
}

fn desk_codes() -> Outcome {
    let spec = build_curve(Family::FamilyI, 5, 2, Some(13), false).unwrap();
    let shape = cab_parameters(&spec).unwrap();
    let s = NumericalSemigroup::from_generators(&[shape.a, shape.b]).unwrap();
    let pts: Vec<_> = enumerate_points(&spec, &Budget::default()).unwrap().points.into_iter().take(20).collect();
    let n = pts.len() as i64;
    let mut parts = vec![];
    let mut ok = true;
    for gamma in (0..=13).filter(|&g| s.is_gap(g)) {
        let code = build_cl(&spec, gamma, Some(pts.clone()), &Budget::default()).unwrap();
        let d = brute_min_distance(&code, DEFAULT_BRUTE_BUDGET).unwrap().value;
        let k = code.k as i64;
        let gkl = gkl_bound_cl(&s, gamma, n as u64).ok().map(|c| c.value);
        let designed = designed_distances(n as u64, gamma, spec.genus()).d_cl;
        ok &= d >= designed
            && gkl.is_none_or(|b| d >= b)
            && k as u64 == s.nongaps_up_to(gamma)
            && k <= gamma as i64
            && d <= n - k + 1;
        parts.push(format!("gamma {gamma}: k {k}, d {d}, designed {designed}, gkl {gkl:?}"));
    }
    (ok, parts.join("; "))
}

fn determinism() -> Outcome {
    let once = || {
        let mut v: Value = serde_json::from_str(&run(["hermq", "reproduce", "1"]).stdout).unwrap();
        strip_timing(&mut v);
        serde_json::to_string(&v).unwrap()
    };
    let (a, b) = (once(), once());
    (a == b, format!("{} bytes each, identical {}", a.len(), a == b))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("example 1 end to end", example_one),
        ("example 2 end to end", example_two),
        ("maximality audits", maximality),
        ("genus cross-check", genus_cross_check),
        ("cover verification", covers),
        ("group presets", presets),
        ("semigroup oracles", semigroup_oracles),
        ("desk-scale code properties", desk_codes),
        ("determinism of reproduce 1", determinism),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (pass, detail) = check();
        if !pass {
            failures += 1;
        }
        println!(
            "criterion {}: {} {name} [{:.2}s] {detail}",
            i + 1,
            if pass { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64()
        );
    }
    println!("acceptance: {} passed, {failures} failed", criteria.len() - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
