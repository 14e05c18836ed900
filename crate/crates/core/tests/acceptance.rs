//! Acceptance suite: one pass/fail line per criterion.
//!
//! The report goes to stderr uncaptured: `cargo test -p farey-contact --test acceptance`.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use farey_contact::bypass::{bypass_attach, imbalance_bypass_exists, twist_of, AttachmentSide, TwistValue};
use farey_contact::curves::{apply, curve_of_slope, intersection, invert, slope_of, CurveClass, MappingClass};
use farey_contact::oracle;
use farey_contact::seifert::{count_chord_diagrams, normalize, DividingSet};
use farey_contact::slices::{make_stack, refinement_verdict, Envelope, Sign};
use farey_contact::slopes::{farey_path, has_edge, mediant, FareyPath, Half, Slope};
use farey_contact::trace::{Context, DiscFixture, StepVerdict};
use farey_contact::verdict::{
    classify_surgery, classify_xi, mountain_range, mountain_range_bfs, walkthrough, walkthrough_with, Coefficient,
    LegendrianFigureEight,
};

/// Reference values are integers and exact rationals: zero tolerance throughout.
const EXACT: i64 = 0;
const BUDGET_1: Duration = Duration::from_secs(1);
const BUDGET_2: Duration = Duration::from_secs(30);
const BUDGET_3: Duration = Duration::from_secs(60);
const BUDGET_4: Duration = Duration::from_secs(5);

const FAREY_BOX: i64 = 12;
const BYPASS_PAIRS: usize = 500;
const BYPASS_BOX: i64 = 50;
const MAX_CHORDS: u32 = 8;
const MIN_TB: i64 = -12;
const PROPERTY_CASES: u32 = 10_000;
const COEFFICIENTS: [&str; 5] = ["1/2", "1", "3/2", "2", "7"];

type Outcome = Result<String, String>;

fn s(t: &str) -> Slope {
    t.parse().unwrap()
}

fn c(a: i64, b: i64) -> CurveClass {
    CurveClass::new(a, b).unwrap()
}

fn exact(what: &str, got: i64, want: i64, errs: &mut Vec<String>) {
    if (got - want).abs() > EXACT {
        errs.push(format!("{what}: got {got}, want {want}"));
    }
}

fn check(what: &str, ok: bool, errs: &mut Vec<String>) {
    if !ok {
        errs.push(what.to_string());
    }
}

fn finish(errs: Vec<String>, detail: String) -> Outcome {
    if errs.is_empty() {
        Ok(detail)
    } else {
        Err(errs.join("; "))
    }
}

fn criterion_1() -> Outcome {
    let mut errs = Vec::new();
    let i1 = intersection(c(5, 4), c(1, 2)) as i64;
    exact("(5,4).(1,2)", i1, 6, &mut errs);
    exact("2 x (5,4).(1,2)", 2 * i1, 12, &mut errs);
    let i2 = intersection(c(5, 4), c(4, 3)) as i64;
    exact("(5,4).(4,3)", i2, 1, &mut errs);
    exact("2 x (5,4).(4,3)", 2 * i2, 2, &mut errs);
    check("phi (1,2) = (4,3)", apply(&MappingClass::PHI, c(1, 2)).ok() == Some(c(4, 3)), &mut errs);
    let inv = invert(&MappingClass::PHI).unwrap();
    check("phi^-1 (1,1) = (0,1)", apply(&inv, c(1, 1)).ok() == Some(c(0, 1)), &mut errs);
    check(
        "bypass(2, 4/5, front) = 1",
        bypass_attach(s("2"), s("4/5"), AttachmentSide::Front).ok() == Some(s("1")),
        &mut errs,
    );
    check(
        "imbalance(-6, -1)",
        imbalance_bypass_exists(TwistValue::integer(-6), TwistValue::integer(-1)),
        &mut errs,
    );
    // three arcs meet the boundary 6 times; Seifert longitude against framing -3
    let tb = twist_of(curve_of_slope(Slope::ZERO), s("-3"), 2).unwrap();
    exact("tb of the three-arc boundary", tb.as_integer().unwrap_or(i64::MAX), -3, &mut errs);
    exact("boundary points of three arcs", DividingSet::initial_three_arcs().boundary_points() as i64, 6, &mut errs);
    check("edge -3 ~ inf", has_edge(s("-3"), Slope::INFINITY), &mut errs);
    check("edge -2 ~ inf", has_edge(s("-2"), Slope::INFINITY), &mut errs);
    finish(errs, "12 exact values".into())
}

fn criterion_2() -> Outcome {
    let mut errs = Vec::new();

    // shortest paths against BFS on the bounded graph
    let verts = oracle::bounded_slopes(FAREY_BOX);
    let mut pairs = 0usize;
    for &a in &verts {
        let dist = oracle::bfs_distances(a, FAREY_BOX);
        for &b in verts.iter().filter(|&&b| b != a) {
            pairs += 1;
            match farey_path(a, b) {
                Ok(p) if Some(&p.len()) == dist.get(&b) => {}
                Ok(p) => errs.push(format!("path {a} -> {b}: length {} vs BFS {:?}", p.len(), dist.get(&b))),
                Err(e) => errs.push(format!("path {a} -> {b}: {e}")),
            }
        }
    }

    // bypasses against the brute-force scan
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let random_slope = |rng: &mut StdRng| loop {
        let q = rng.gen_range(0..=BYPASS_BOX);
        let p = rng.gen_range(-BYPASS_BOX..=BYPASS_BOX);
        if let Ok(x) = Slope::new(p, q) {
            if x.numerator().abs() <= BYPASS_BOX {
                return x;
            }
        }
    };
    let mut done = 0;
    while done < BYPASS_PAIRS {
        let (a, r) = (random_slope(&mut rng), random_slope(&mut rng));
        if a == r {
            continue;
        }
        for side in [AttachmentSide::Front, AttachmentSide::Back] {
            let got = bypass_attach(a, r, side);
            let want = oracle::bypass_scan(a, r, side, BYPASS_BOX);
            if got.as_ref().ok() != want.as_ref().ok() {
                errs.push(format!("bypass {side} {a} {r}: {got:?} vs scan {want:?}"));
            }
        }
        done += 1;
    }

    // chord diagrams
    for n in 1..=MAX_CHORDS {
        let got = count_chord_diagrams(n).map(|x| x as u64).ok();
        let want = oracle::chord_diagrams_brute(n);
        if got != Some(want) {
            errs.push(format!("chords({n}): {got:?} vs brute force {want}"));
        }
    }

    // mountain range
    let reachable = mountain_range_bfs(MIN_TB);
    for tb in MIN_TB..=-3 {
        let want: BTreeSet<i64> = reachable.iter().filter(|k| k.tb == tb).map(|k| k.rot).collect();
        match mountain_range(tb) {
            Ok(got) if got == want => {}
            other => errs.push(format!("mountain range at {tb}: {other:?} vs BFS {want:?}")),
        }
    }
    errs.truncate(10);
    finish(errs, format!("{pairs} path pairs, {BYPASS_PAIRS} bypass pairs x 2 sides, chords n <= {MAX_CHORDS}, tb >= {MIN_TB}"))
}

fn slope_strategy(bound: i64) -> impl Strategy<Value = Slope> {
    (-bound..=bound, 0..=bound).prop_filter_map("zero vector", |(p, q)| Slope::new(p, q).ok())
}

fn curve_strategy(bound: i64) -> impl Strategy<Value = CurveClass> {
    slope_strategy(bound).prop_map(curve_of_slope)
}

/// Random words in the generators of SL(2, Z).
fn unimodular_strategy() -> impl Strategy<Value = MappingClass> {
    let gens = [
        MappingClass::new(1, 1, 0, 1).unwrap(),
        MappingClass::new(1, -1, 0, 1).unwrap(),
        MappingClass::new(0, -1, 1, 0).unwrap(),
        MappingClass::new(1, 0, 1, 1).unwrap(),
    ];
    proptest::collection::vec(0..gens.len(), 0..10)
        .prop_map(move |word| word.iter().fold(MappingClass::IDENTITY, |m, &i| m.compose(&gens[i])))
}

fn map_slope(m: &MappingClass, x: Slope) -> Slope {
    slope_of(apply(m, curve_of_slope(x)).unwrap())
}

fn criterion_3() -> Outcome {
    let config = Config { cases: PROPERTY_CASES, failure_persistence: None, ..Config::default() };
    let mut errs = Vec::new();
    let mut run = |name: &str, result: std::result::Result<(), String>| {
        if let Err(e) = result {
            errs.push(format!("{name}: {e}"));
        }
    };

    run(
        "unimodular invariance of intersection",
        TestRunner::new(config.clone())
            .run(&(unimodular_strategy(), curve_strategy(200), curve_strategy(200)), |(m, a, b)| {
                let (ma, mb) = (apply(&m, a).unwrap(), apply(&m, b).unwrap());
                prop_assert_eq!(intersection(ma, mb), intersection(a, b));
                Ok(())
            })
            .map_err(|e| e.to_string()),
    );

    run(
        "edge iff intersection one",
        TestRunner::new(config.clone())
            .run(&(slope_strategy(40), slope_strategy(40)), |(a, b)| {
                let one = intersection(curve_of_slope(a), curve_of_slope(b)) == 1;
                prop_assert_eq!(has_edge(a, b), one);
                Ok(())
            })
            .map_err(|e| e.to_string()),
    );

    run(
        "mediant adjacency",
        TestRunner::new(config.clone())
            .run(&(unimodular_strategy(), 0i64..6), |(m, n)| {
                // an edge from the integer fan moved by a unimodular map
                let (a, b) = (map_slope(&m, Slope::integer(n)), map_slope(&m, Slope::integer(n + 1)));
                let mut found = 0;
                for half in [Half::Upper, Half::Lower] {
                    if let Ok(x) = mediant(a, b, half) {
                        prop_assert!(has_edge(x, a) && has_edge(x, b) && x != a && x != b);
                        found += 1;
                    }
                }
                prop_assert!(found >= 1);
                Ok(())
            })
            .map_err(|e| e.to_string()),
    );

    run(
        "mixed-sign refinement is overtwisted in any order",
        TestRunner::new(config.clone())
            .run(
                &(unimodular_strategy(), 1usize..8)
                    .prop_flat_map(|(m, k)| {
                        let signs = proptest::collection::vec(any::<bool>(), k + 1)
                            .prop_filter("mixed", |v| v.iter().any(|&x| x) && v.iter().any(|&x| !x))
                            .prop_shuffle();
                        (Just(m), Just(k), signs)
                    }),
                |(m, k, signs)| {
                    // 0 -> 1 -> ... -> k -> inf subdivides the edge 0 -> inf
                    let mut slopes: Vec<Slope> = (0..=k as i64).map(Slope::integer).collect();
                    slopes.push(Slope::INFINITY);
                    let slopes: Vec<Slope> = slopes.iter().map(|&x| map_slope(&m, x)).collect();
                    let path = FareyPath::new(slopes.clone()).unwrap();
                    let signs: Vec<Sign> = signs.iter().map(|&p| if p { Sign::Positive } else { Sign::Negative }).collect();
                    let stack = make_stack(&path, &signs).unwrap();
                    for outer_sign in [None, Some(Sign::Positive), Some(Sign::Negative)] {
                        let outer = Envelope { s0: slopes[0], s1: *slopes.last().unwrap(), sign: outer_sign };
                        prop_assert!(refinement_verdict(&outer, &stack).unwrap().is_overtwisted());
                    }
                    Ok(())
                },
            )
            .map_err(|e| e.to_string()),
    );

    run(
        "normalize idempotence",
        TestRunner::new(config.clone())
            .run(&(0usize..4, -4i32..=4, -20i64..=20), |(shape, k, holonomy)| {
                let base = [c(0, 1), c(1, 1), c(1, 2)];
                let d = if shape == 3 {
                    DividingSet::boundary_parallel(1).unwrap()
                } else {
                    let m = MappingClass::PHI.power(k).unwrap();
                    DividingSet::arc_plus_closed(apply(&m, base[shape]).unwrap(), 1)
                }
                .with_holonomy(holonomy);
                let once = normalize(&d).unwrap();
                let twice = normalize(&once.result).unwrap();
                prop_assert!(once.result.is_normal_form());
                prop_assert_eq!(&twice.result, &once.result);
                prop_assert!(once.trace.is_sound() && twice.trace.is_sound());
                Ok(())
            })
            .map_err(|e| e.to_string()),
    );

    run(
        "amphichiral mirror symmetry",
        TestRunner::new(config)
            .run(&(-40i64..=-3).prop_flat_map(|tb| (Just(tb), 0..=(-tb - 3))), |(tb, i)| {
                let rot = 2 * i - (-tb - 3);
                let (v1, t1) = classify_xi(LegendrianFigureEight::new(tb, rot).unwrap(), Sign::Negative).unwrap();
                let (v2, t2) = classify_xi(LegendrianFigureEight::new(tb, -rot).unwrap(), Sign::Positive).unwrap();
                prop_assert_eq!(v1.status, v2.status);
                let shape = |t: &farey_contact::trace::ProofTrace| -> Vec<(String, StepVerdict)> {
                    t.steps().iter().filter(|s| s.id != "xi/mirror").map(|s| (s.id.clone(), s.verdict)).collect()
                };
                prop_assert_eq!(shape(&t1), shape(&t2));
                Ok(())
            })
            .map_err(|e| e.to_string()),
    );

    finish(errs, format!("6 properties x {PROPERTY_CASES} cases"))
}

fn criterion_4() -> Outcome {
    let mut errs = Vec::new();
    let t = walkthrough();
    check("walkthrough is sound", t.is_sound(), &mut errs);
    exact("failed steps", t.failed().count() as i64, 0, &mut errs);
    for section in ["a/", "b/", "c/", "d/", "e/", "f/"] {
        check(
            &format!("section {section} present"),
            t.steps().iter().any(|s| s.id.starts_with(section)),
            &mut errs,
        );
    }
    let mut cases = 0;
    for tb in MIN_TB..=-3 {
        for rot in mountain_range(tb).unwrap() {
            let knot = LegendrianFigureEight::new(tb, rot).unwrap();
            for r in COEFFICIENTS {
                let coefficient: Coefficient = r.parse().unwrap();
                match classify_surgery(knot, coefficient) {
                    Ok((v, trace)) if v.is_overtwisted() && trace.is_sound() => {}
                    Ok((v, _)) => errs.push(format!("{knot} r = {r}: {:?}", v.status)),
                    Err(e) => errs.push(format!("{knot} r = {r}: {e}")),
                }
                cases += 1;
            }
        }
    }
    finish(errs, format!("{} walkthrough steps, {cases} surgeries overtwisted", t.steps().len()))
}

fn criterion_5() -> Outcome {
    let mut errs = Vec::new();
    let standard = Context::standard();

    let mut corruptions: Vec<(String, Context)> = Vec::new();
    for (i, j) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
        for delta in [-1, 1] {
            let mut e = MappingClass::PHI.entries();
            e[i][j] += delta;
            let mut ctx = standard.clone();
            ctx.phi = MappingClass::unchecked(e[0][0], e[0][1], e[1][0], e[1][1]);
            corruptions.push((format!("phi entry ({i},{j}) {delta:+}"), ctx));
        }
    }
    for k in 0..standard.discs.len() {
        for points in [0, 1, 4, 6] {
            let mut ctx = standard.clone();
            ctx.discs[k] = DiscFixture { id: standard.discs[k].id.clone(), points };
            corruptions.push((format!("disc fixture {} = {points}", standard.discs[k].id), ctx));
        }
    }
    for k in 0..standard.ledger.facts().len() {
        let mut ctx = standard.clone();
        let id = &mut ctx.ledger.facts_mut()[k].id;
        let original = id.clone();
        id.push('~');
        corruptions.push((format!("cited fact id {original}"), ctx));
    }

    let total = corruptions.len();
    for (what, ctx) in corruptions {
        let t = walkthrough_with(&ctx);
        if t.is_sound() {
            errs.push(format!("{what} went unnoticed"));
        }
    }
    finish(errs, format!("{total} corruptions, each caught"))
}

// Written straight to the stream so the report shows without --nocapture.
macro_rules! report {
    ($($arg:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stderr(), $($arg)*);
    }};
}

#[test]
fn acceptance() {
    type Criterion = (&'static str, fn() -> Outcome, Duration);
    let criteria: [Criterion; 5] = [
        ("1 reference values", criterion_1, BUDGET_1),
        ("2 oracle equivalence", criterion_2, BUDGET_2),
        ("3 property suites", criterion_3, BUDGET_3),
        ("4 end-to-end", criterion_4, BUDGET_4),
        ("5 negative control", criterion_5, Duration::MAX),
    ];
    let mut failed = Vec::new();
    for (name, run, budget) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let timing = if budget == Duration::MAX {
            format!("{:.2?}", elapsed)
        } else {
            format!("{:.2?} / budget {:?}", elapsed, budget)
        };
        match outcome {
            Ok(detail) => report!("criterion {name}: PASS ({detail}; {timing})"),
            Err(why) => {
                report!("criterion {name}: FAIL ({why}; {timing})");
                failed.push(name);
            }
        }
        if elapsed > budget {
            report!("criterion {name}: FAIL (over time budget)");
            failed.push(name);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
