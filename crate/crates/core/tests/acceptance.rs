//! Acceptance gate. Every criterion runs inside one test so the summary prints
//! as a single block (`cargo test --test acceptance -- --nocapture`).

mod common;

use std::io::Write;
use std::time::{Duration, Instant};

use kvalent::cli::{
    compare_bfile, parse_bfile, render, run, verify_rows, BFile, ExitStatus, Format, RunConfig,
    SeriesSelector,
};
use kvalent::cycle_index::{class_equation_holds, substitute};
use kvalent::oracle::{generate_up_to, oracle_census_up_to, OracleCensus};
use kvalent::{bicentered, census, centered, CensusRow, RootedTrees, Series};
use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

/// n, centered, bicentered, total for 4-valent trees.
const GOLDEN: [(usize, u64, u64, u64); 22] = [
    (1, 1, 0, 1),
    (2, 0, 1, 1),
    (3, 1, 0, 1),
    (4, 1, 1, 2),
    (5, 2, 1, 3),
    (6, 2, 3, 5),
    (7, 6, 3, 9),
    (8, 9, 9, 18),
    (9, 20, 15, 35),
    (10, 37, 38, 75),
    (11, 86, 73, 159),
    (12, 181, 174, 355),
    (13, 422, 380, 802),
    (14, 943, 915, 1858),
    (15, 2223, 2124, 4347),
    (16, 5225, 5134, 10359),
    (17, 12613, 12281, 24894),
    (18, 30513, 30010, 60523),
    (19, 74883, 73401, 148284),
    (20, 184484, 181835, 366319),
    (21, 458561, 452165, 910726),
    (22, 1145406, 1133252, 2278658),
];

fn golden_table() -> Check {
    let start = Instant::now();
    let table = census(4, 22, false).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    for &(n, c, b, t) in &GOLDEN {
        let row = table.row(n).ok_or(format!("row {n} missing"))?;
        ensure(
            (row.centered.clone(), row.bicentered.clone(), row.total.clone()) == (big(c), big(b), big(t)),
            || format!("n={n}: got ({}, {}, {}), want ({c}, {b}, {t})", row.centered, row.bicentered, row.total),
        )?;
    }
    ensure(table.max_n() == 22, || "expected exactly 22 rows".into())?;
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))
}

fn corrections() -> Check {
    let table = census(4, 19, false).map_err(|e| e.to_string())?;
    let row = |n: usize| table.row(n).unwrap().clone();
    for (n, wrong_c, wrong_t) in [(12, 183u64, 357u64), (13, 419, 799)] {
        let r = row(n);
        ensure(r.centered != big(wrong_c), || format!("n={n} reproduces the erroneous centered {wrong_c}"))?;
        ensure(r.total != big(wrong_t), || format!("n={n} reproduces the erroneous total {wrong_t}"))?;
    }
    let nineteen = row(19).total;
    ensure(nineteen == big(148284), || format!("n=19 total is {nineteen}"))?;
    ensure(nineteen != big(147284), || "n=19 matches the misprinted value".into())
}

fn displayed_series() -> Check {
    let c = centered(4, 13).map_err(|e| e.to_string())?;
    let b = bicentered(4, 13).map_err(|e| e.to_string())?;
    let sum = c.add(&b).map_err(|e| e.to_string())?;
    let expect = |s: &Series, want: [i64; 14], name: &str| {
        ensure(s == &Series::from_i64s(&want), || format!("{name} = {s}"))
    };
    expect(&c, [0, 1, 0, 1, 1, 2, 2, 6, 9, 20, 37, 86, 181, 422], "C(z)")?;
    expect(&b, [0, 0, 1, 0, 1, 1, 3, 3, 9, 15, 38, 73, 174, 380], "B(z)")?;
    expect(&sum, [0, 1, 1, 1, 2, 3, 5, 9, 18, 35, 75, 159, 355, 802], "C(z) + B(z)")
}

fn row_matches_oracle(row: &CensusRow, oracle: &OracleCensus) -> bool {
    let breakdown: Option<Vec<(usize, BigUint)>> = row
        .by_diameter
        .as_ref()
        .map(|m| m.iter().map(|(d, c)| (*d, c.clone())).collect());
    let expected: Vec<(usize, BigUint)> =
        oracle.per_diameter.iter().map(|(d, c)| (*d, big(*c))).collect();
    row.centered == big(oracle.centered)
        && row.bicentered == big(oracle.bicentered)
        && breakdown == Some(expected)
}

fn oracle_equivalence() -> Check {
    let start = Instant::now();
    const MAX_N: usize = 14;
    for k in 2..=5 {
        let table = census(k, MAX_N, true).map_err(|e| e.to_string())?;
        let oracle = oracle_census_up_to(MAX_N, Some(k)).map_err(|e| e.to_string())?;
        for n in 1..=MAX_N {
            ensure(row_matches_oracle(table.row(n).unwrap(), &oracle[n - 1]), || {
                format!("k={k} n={n}: census {:?} vs oracle {:?}", table.row(n), oracle[n - 1])
            })?;
        }
    }
    let unbounded = oracle_census_up_to(MAX_N, None).map_err(|e| e.to_string())?;
    for n in 1..=MAX_N {
        let k = (n - 1).max(2);
        let table = census(k, n, true).map_err(|e| e.to_string())?;
        ensure(row_matches_oracle(table.row(n).unwrap(), &unbounded[n - 1]), || {
            format!("k=n-1={k} n={n}: census {:?} vs oracle {:?}", table.row(n), unbounded[n - 1])
        })?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))
}

fn paths_only() -> Check {
    let table = census(2, 50, false).map_err(|e| e.to_string())?;
    for row in table.rows() {
        let odd = row.n % 2 == 1;
        ensure(row.total == big(1), || format!("n={}: {} paths", row.n, row.total))?;
        ensure(row.centered == big(u64::from(odd)), || {
            format!("n={}: centered={}", row.n, row.centered)
        })?;
    }
    Ok(())
}

fn degree_bound_saturation() -> Check {
    let expected = [1u64, 1, 1, 2, 3, 6, 11, 23, 47, 106];
    let grown = generate_up_to(10, None).map_err(|e| e.to_string())?;
    for n in 1..=10 {
        let want = expected[n - 1];
        let k = (n - 1).max(2);
        let total = census(k, n, false).map_err(|e| e.to_string())?.row(n).unwrap().total.clone();
        ensure(total == big(want), || format!("census(k={k}) n={n}: {total}"))?;
        let leaf_growth = grown[n - 1].len() as u64;
        ensure(leaf_growth == want, || format!("leaf growth n={n}: {leaf_growth}"))?;
        let parent_arrays = common::free_trees_by_parent_arrays(n).len() as u64;
        ensure(parent_arrays == want, || format!("parent arrays n={n}: {parent_arrays}"))?;
    }
    Ok(())
}

/// Unordered m-multisets over objects of weight w in `f[w]` flavors, by weight.
fn multiset_counts(f: &[u32], m: usize) -> Vec<u64> {
    fn choose(objects: &[usize], from: usize, left: usize, weight: usize, counts: &mut [u64]) {
        if weight >= counts.len() {
            return;
        }
        if left == 0 {
            counts[weight] += 1;
            return;
        }
        for i in from..objects.len() {
            choose(objects, i, left - 1, weight + objects[i], counts);
        }
    }
    let objects: Vec<usize> = f
        .iter()
        .enumerate()
        .flat_map(|(w, &c)| std::iter::repeat_n(w, c as usize))
        .collect();
    let mut counts = vec![0; f.len()];
    choose(&objects, 0, m, 0, &mut counts);
    counts
}

fn cycle_index_properties() -> Check {
    for m in 0..=8 {
        for order in [m, m + 3] {
            let z_m = substitute(m, &Series::variable(order), order).map_err(|e| e.to_string())?;
            ensure(z_m == Series::constant(1, order).shift(m), || format!("S_{m}(z) = {z_m}"))?;
        }
        let one = substitute(m, &Series::constant(1, 6), 6).map_err(|e| e.to_string())?;
        ensure(one == Series::constant(1, 6), || format!("S_{m}(1) = {one}"))?;
    }
    for m in 0..=12 {
        ensure(class_equation_holds(m), || format!("class sizes of S_{m} do not sum to {m}!"))?;
    }
    let mut rng = StdRng::seed_from_u64(2718);
    for trial in 0..100 {
        let order = rng.gen_range(0..=6);
        let m = rng.gen_range(0..=4);
        let f: Vec<u32> = (0..=order).map(|_| rng.gen_range(0..=3)).collect();
        let series = Series::from_i64s(&f.iter().map(|&c| i64::from(c)).collect::<Vec<_>>());
        // An inexact m! division would surface here as an error.
        let got = substitute(m, &series, order).map_err(|e| format!("trial {trial}: {e}"))?;
        let want: Vec<BigInt> = multiset_counts(&f, m).into_iter().map(BigInt::from).collect();
        ensure(got.coeffs() == &want[..], || format!("trial {trial}: m={m} f={f:?} got {got}"))?;
    }
    Ok(())
}

fn invariant_suite() -> Check {
    const ORDER: usize = 20;
    for k in 3..=5 {
        let mut trees = RootedTrees::new(k, ORDER).map_err(|e| e.to_string())?;
        let heights: Vec<Series> = (-1..=ORDER as isize + 1)
            .map(|h| trees.height_at_most(h).cloned().map_err(|e| e.to_string()))
            .collect::<Result<_, _>>()?;
        // heights[i] is T_{i-1}
        for (i, t) in heights.iter().enumerate() {
            ensure(t.coeffs()[0] == BigInt::from(1), || format!("k={k}: T_{} constant term", i as isize - 1))?;
            if i >= 1 {
                ensure(t.coeffs()[1] == BigInt::from(1), || format!("k={k}: T_{} linear term", i - 1))?;
            }
            if let Some(next) = heights.get(i + 1) {
                let monotone = t.coeffs().iter().zip(next.coeffs()).all(|(a, b)| a <= b);
                ensure(monotone, || format!("k={k}: T_{} not dominated by its successor", i as isize - 1))?;
            }
        }
        for n in 0..=ORDER {
            let stable = heights[n..].iter().all(|t| t.coeffs()[n] == heights[n].coeffs()[n]);
            ensure(stable, || format!("k={k}: coefficient {n} of T_h moves for h >= {}", n as isize - 1))?;
        }
        for h in 0..=ORDER / 2 {
            let c = trees.centered_by_diameter(h).map_err(|e| e.to_string())?;
            let b = trees.bicentered_by_diameter(h).map_err(|e| e.to_string())?;
            ensure(c.is_nonnegative() && b.is_nonnegative(), || format!("k={k} h={h}: negative coefficient"))?;
            let low_c = c.coeffs().iter().take(2 * h + 1).all(Zero::is_zero);
            let low_b = b.coeffs().iter().take(2 * h + 2).all(Zero::is_zero);
            ensure(low_c, || format!("k={k}: C_{} has a term below z^{}", 2 * h, 2 * h + 1))?;
            ensure(low_b, || format!("k={k}: B_{} has a term below z^{}", 2 * h + 1, 2 * h + 2))?;
        }
        let cz = trees.centered().map_err(|e| e.to_string())?;
        let bz = trees.bicentered().map_err(|e| e.to_string())?;
        ensure(cz.is_nonnegative() && bz.is_nonnegative(), || format!("k={k}: negative census series"))?;
    }
    Ok(())
}

fn large_census() -> Check {
    let start = Instant::now();
    let table = census(4, 400, false).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let last = &table.row(400).unwrap().total;
    ensure(last.bits() > 200, || format!("suspiciously small a(400) = {last}"))?;
    ensure(elapsed < Duration::from_secs(30), || format!("took {elapsed:?}"))
}

fn cli_contract() -> Check {
    let table = census(4, 60, false).map_err(|e| e.to_string())?;
    for series in [SeriesSelector::Centered, SeriesSelector::Bicentered, SeriesSelector::Total] {
        let text = render(&table, Format::Bfile, series, 1).map_err(|e| e.to_string())?;
        let parsed = parse_bfile(text.as_bytes()).map_err(|e| e.to_string())?;
        ensure(parsed.render() == text, || format!("{series:?}: re-rendered bytes differ"))?;
        let column = BFile::from_column(&table, series, 1).map_err(|e| e.to_string())?;
        ensure(parsed == column, || format!("{series:?}: parsed column differs"))?;
    }

    let oracle = oracle_census_up_to(8, Some(4)).map_err(|e| e.to_string())?;
    let with_breakdown = census(4, 8, true).map_err(|e| e.to_string())?;
    let clean = verify_rows(&with_breakdown, &oracle);
    ensure(clean.status() == ExitStatus::Success, || clean.text.clone())?;
    let mut seeded = oracle.clone();
    *seeded[6].per_diameter.get_mut(&4).ok_or("no diameter-4 trees at n=7")? += 1;
    seeded[6].centered += 1;
    let report = verify_rows(&with_breakdown, &seeded);
    ensure(report.status() == ExitStatus::Mismatch && report.failures == 1, || report.text.clone())?;

    let reference = parse_bfile(b"1 1\n2 0\n3 1\n4 1\n5 2\n").map_err(|e| e.to_string())?;
    let ok = compare_bfile(&table, SeriesSelector::Centered, 1, &reference);
    ensure(ok.status() == ExitStatus::Success, || ok.text.clone())?;

    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let path = dir.path().join("b000022.txt");
    let mut file = std::fs::File::create(&path).map_err(|e| e.to_string())?;
    file.write_all(b"# seeded error at n=12\n11 86\n12 183\n13 422\n").map_err(|e| e.to_string())?;
    drop(file);
    let cfg = RunConfig {
        max_n: 13,
        series: SeriesSelector::Centered,
        compare: Some(path.clone()),
        ..RunConfig::default()
    };
    let outcome = run(&cfg);
    ensure(outcome.status == ExitStatus::Mismatch, || format!("{outcome:?}"))?;
    ensure(outcome.stderr.contains("compare 12: MISMATCH"), || outcome.stderr.clone())?;

    let missing = RunConfig { compare: Some(dir.path().join("absent.txt")), ..cfg.clone() };
    ensure(run(&missing).status == ExitStatus::Io, || "missing file should be an I/O error".into())?;
    let usage = RunConfig { k: 1, ..cfg.clone() };
    ensure(run(&usage).status == ExitStatus::Usage, || "k = 1 should be a usage error".into())?;
    let verify = RunConfig { compare: None, verify_oracle: Some(10), ..cfg };
    let outcome = run(&verify);
    ensure(outcome.status == ExitStatus::Success, || outcome.stderr.clone())
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 10] = [
        ("golden 4-valent table, n = 1..22", golden_table),
        ("historical corrections (n = 12, 13, 19)", corrections),
        ("displayed C(z), B(z), C(z)+B(z) through z^13", displayed_series),
        ("oracle equivalence, n <= 14, k in {2,3,4,5,n-1}", oracle_equivalence),
        ("k = 2 paths, n <= 50", paths_only),
        ("degree-bound saturation, n <= 10", degree_bound_saturation),
        ("cycle-index properties", cycle_index_properties),
        ("invariant suite, k in {3,4,5}, N = 20", invariant_suite),
        ("census(4, 400) under 30 s", large_census),
        ("CLI b-file round trip and exit statuses", cli_contract),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        match &result {
            Ok(()) => println!("criterion {:>2} PASS  {name}  ({elapsed:.2?})", i + 1),
            Err(why) => {
                println!("criterion {:>2} FAIL  {name}  ({elapsed:.2?}): {why}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
