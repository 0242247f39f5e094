//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Criterion 11 asks for the partial sum up to k = 80 to be within 1e-12 of
//! 2 F_n for every n <= 10. The tail of that series is about 80^n / 2^80, which
//! exceeds 1e-12 from n = 7 on, so the criterion is evaluated as stated and is
//! expected to fail. The run succeeds when exactly the expected criteria fail.

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use fubini_core::apostol::{
    apostol_bernoulli, apostol_explicit_guoqi, apostol_explicit_split, apostol_moment_integral,
    apostol_product_integral, apostol_sum_of_products, apostol_via_fubini,
    improper_quadrature_oracle, moment_integrand, product_integrand,
};
use fubini_core::bernoulli::{
    bernoulli, bernoulli_via_integral, double_sum_identity, fubini_moment_parity,
    fubini_product_integral, moment_integral_exact, moment_integral_formula, p_bernoulli,
    p_bernoulli_even_explicit, p_bernoulli_odd_explicit, product_integral_formula,
};
use fubini_core::combinatorics::{binomial, lemma2_lhs, stirling_inverse_entry};
use fubini_core::fubini::{
    fubini_explicit_reflection, fubini_explicit_split_poly, fubini_number,
    fubini_number_bruteforce, fubini_number_split, fubini_number_split_neg2, fubini_poly,
    fubini_poly_recurrence, geometric_moment_partial_sum, ordered_partition_counts,
};
use fubini_core::verifier::{
    check_witness, find_identity, lambda_grid, list_identities, verify, Bounds,
};
use fubini_core::Rat;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Criteria that are expected to fail as stated.
const EXPECTED_FAILURES: [usize; 1] = [11];

const EQ1_TERMS: usize = 80;
const EQ1_TOLERANCE: f64 = 1e-12;
const QUADRATURE_TOLERANCE: f64 = 1e-9;
const ROUTE_BUDGET: Duration = Duration::from_secs(1);
const FULL_BUDGET: Duration = Duration::from_secs(60);
const QUICK_BUDGET: Duration = Duration::from_secs(5);

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Akiyama-Tanigawa with the sign of `B_1` flipped to `-1/2`.
fn bernoulli_oracle(n: usize) -> Rat {
    let mut a: Vec<Rat> = (0..=n).map(|m| Rat::frac(1, m as i64 + 1)).collect();
    for m in 1..=n {
        for j in 0..=n - m {
            a[j] = Rat::int(j as i64 + 1) * (&a[j] - &a[j + 1]);
        }
    }
    if n == 1 {
        -a[0].clone()
    } else {
        a[0].clone()
    }
}

fn criterion_1() -> Check {
    let start = Instant::now();
    for n in 0..=40 {
        ensure(fubini_poly(n) == fubini_poly_recurrence(n), || {
            format!("routes differ at n = {n}")
        })?;
    }
    let took = start.elapsed();
    ensure(took < ROUTE_BUDGET, || format!("took {took:?}"))?;
    Ok(format!("n <= 40 in {took:?}"))
}

fn criterion_2() -> Check {
    for n in 0..=10 {
        let brute = fubini_number_bruteforce(n).map_err(|e| e.to_string())?;
        ensure(brute == fubini_number(n), || format!("F_{n}: {brute}"))?;
    }
    for n in 0..=8 {
        let counts = ordered_partition_counts(n, 8).map_err(|e| e.to_string())?;
        let poly = fubini_poly(n);
        for (k, c) in counts.iter().enumerate() {
            ensure(poly.poly().coeff(k) == BigInt::from(*c), || {
                format!("[y^{k}] F_{n}")
            })?;
        }
    }
    Ok("n <= 10 counts, n <= 8 block counts".into())
}

fn criterion_3() -> Check {
    for n in 1..=30 {
        let v = bernoulli_via_integral(n).map_err(|e| e.to_string())?;
        ensure(v == bernoulli_oracle(n) && v == bernoulli(n), || {
            format!("n = {n}: {v}")
        })?;
    }
    let pinned = [
        (1, Rat::frac(-1, 2)),
        (2, Rat::frac(1, 6)),
        (4, Rat::frac(-1, 30)),
    ];
    for (n, want) in pinned {
        let got = bernoulli_via_integral(n).map_err(|e| e.to_string())?;
        ensure(got == want, || format!("B_{n} = {got}"))?;
    }
    Ok("1 <= n <= 30".into())
}

fn criterion_4() -> Check {
    let mut cases = 0;
    for k in 0..=10 {
        for n in 0..=20 {
            ensure(
                moment_integral_exact(k, n) == moment_integral_formula(k, n),
                || format!("k = {k}, n = {n}"),
            )?;
            cases += 1;
        }
    }
    ensure(cases == 231, || format!("{cases} cases"))?;
    Ok(format!("{cases} cases"))
}

fn criterion_5() -> Check {
    for m in 0..=12 {
        for n in 1..=12 {
            let (exact, formula) = fubini_product_integral(m, n).map_err(|e| e.to_string())?;
            ensure(exact == formula, || format!("m = {m}, n = {n}"))?;
            if m >= 1 {
                ensure(formula == product_integral_formula(n, m), || {
                    format!("symmetry at m = {m}, n = {n}")
                })?;
            }
            let (a, b) = double_sum_identity(n, m).map_err(|e| e.to_string())?;
            ensure(a == b, || format!("double sum at n = {n}, m = {m}"))?;
        }
    }
    Ok("m <= 12, 1 <= n <= 12".into())
}

fn criterion_6() -> Check {
    for m in 0..=40 {
        for j in 0..=m {
            let want = if m % 2 == 0 {
                binomial(m, j)
            } else {
                -binomial(m, j)
            };
            let got = lemma2_lhs(m, j).map_err(|e| e.to_string())?;
            ensure(got == want, || format!("m = {m}, j = {j}"))?;
        }
    }
    for n in 0..=40 {
        for m in 0..=40 {
            let delta = if n == m {
                BigInt::one()
            } else {
                BigInt::zero()
            };
            ensure(stirling_inverse_entry(n, m) == delta, || {
                format!("inverse at ({n}, {m})")
            })?;
        }
    }
    Ok("j <= m <= 40, n, m <= 40".into())
}

fn criterion_7() -> Check {
    for n in 1..=25 {
        let p = fubini_explicit_reflection(n).map_err(|e| e.to_string())?;
        ensure(p == fubini_poly(n), || {
            format!("reflection form at n = {n}")
        })?;
    }
    for n in 0..=10 {
        let p = fubini_explicit_split_poly(n).map_err(|e| e.to_string())?;
        ensure(p == fubini_poly(n), || format!("split collapse at n = {n}"))?;
    }
    for n in 0..=20 {
        let f = Rat::from(fubini_number(n));
        ensure(fubini_number_split(n) == f, || {
            format!("y = 1 split at n = {n}")
        })?;
        if n >= 1 {
            let v = fubini_number_split_neg2(n).map_err(|e| e.to_string())?;
            ensure(v == f, || format!("y = -2 split at n = {n}"))?;
        }
    }
    Ok("n <= 25, n <= 10, F_0..F_20".into())
}

const GRID_SUITE: [&str; 15] = [
    "eq4_shift",
    "eq5_binomial",
    "eq6_alt_binomial",
    "eq7_x1",
    "eq9_xneg1",
    "eq12_products_numbers",
    "eq13_products_poly",
    "eq13_general_xy",
    "eq15_special_values",
    "eq17_alt_products",
    "eq18_two_var_reflection",
    "eq19_reflection",
    "eq23_two_y",
    "eq23_two_var",
    "eq24_corrected_split",
];

fn criterion_8() -> Check {
    let bounds = Bounds {
        n_max: Some(15),
        samples: Some(25),
        ..Bounds::default()
    };
    let mut reports = 0;
    for id in GRID_SUITE {
        for r in verify(id, &bounds).map_err(|e| e.to_string())? {
            ensure(r.status.as_str() != "fail", || {
                format!("{id} at {}", r.params)
            })?;
            reports += 1;
        }
    }
    let mut witnesses = 0;
    for e in list_identities().iter().filter(|e| e.corrected) {
        let w = check_witness(e.identity)
            .map_err(|e| e.to_string())?
            .ok_or_else(|| format!("{} has no witness", e.identity))?;
        ensure(w.refuted, || format!("{} printed form holds", e.identity))?;
        witnesses += 1;
    }
    ensure(
        find_identity("eq24_corrected_split").is_ok_and(|e| e.corrected),
        || "eq24_corrected_split not flagged".into(),
    )?;
    Ok(format!(
        "{reports} reports, {witnesses} printed forms refuted"
    ))
}

fn criterion_9() -> Check {
    for p in 1..=10 {
        for n in 1..=10 {
            let odd = p_bernoulli_odd_explicit(n, p).map_err(|e| e.to_string())?;
            ensure(odd == p_bernoulli(2 * n - 1, p), || {
                format!("B_({},{p})", 2 * n - 1)
            })?;
            let even = p_bernoulli_even_explicit(n, p).map_err(|e| e.to_string())?;
            ensure(even == p_bernoulli(2 * n, p), || {
                format!("B_({},{p})", 2 * n)
            })?;
        }
    }
    for n in 0..=20 {
        ensure(p_bernoulli(n, 0) == bernoulli_oracle(n), || {
            format!("B_({n},0)")
        })?;
    }
    for p in 0..=8 {
        for n in 2..=15 {
            let (integral, parity) = fubini_moment_parity(p, n).map_err(|e| e.to_string())?;
            ensure(
                integral == parity && parity == moment_integral_formula(p, n),
                || format!("parity at p = {p}, n = {n}"),
            )?;
        }
    }
    Ok("index <= 20, 1 <= p <= 10; parity p <= 8, 2 <= n <= 15".into())
}

fn criterion_10() -> Check {
    for n in 1..=20 {
        let b = apostol_bernoulli(n);
        ensure(
            apostol_via_fubini(n).map_err(|e| e.to_string())? == b,
            || format!("Fubini route at n = {n}"),
        )?;
        if n >= 2 {
            ensure(
                apostol_explicit_guoqi(n - 1).map_err(|e| e.to_string())? == b,
                || format!("explicit route at n = {n}"),
            )?;
        }
    }
    let grid = lambda_grid(25);
    for n in 0..=10 {
        for l in &grid {
            let split = apostol_explicit_split(n, l).map_err(|e| e.to_string())?;
            let direct = apostol_bernoulli(n + 1)
                .eval(l)
                .map_err(|e| e.to_string())?
                .checked_div(&Rat::int(n as i64 + 1))
                .map_err(|e| e.to_string())?;
            ensure(split == direct, || format!("split at n = {n}, λ = {l}"))?;
            let (a, b) = apostol_sum_of_products(n, l).map_err(|e| e.to_string())?;
            ensure(a == b, || format!("sum of products at n = {n}, λ = {l}"))?;
        }
    }
    for n in 1..=8 {
        for k in 0..=6 {
            let (a, b) = apostol_moment_integral(k, n).map_err(|e| e.to_string())?;
            ensure(a == b, || format!("moment at k = {k}, n = {n}"))?;
        }
        for m in 0..=8 {
            let (a, b) = apostol_product_integral(m, n).map_err(|e| e.to_string())?;
            ensure(a == b, || format!("product at m = {m}, n = {n}"))?;
        }
    }
    let b1b2 = apostol_product_integral(0, 1).map_err(|e| e.to_string())?.0;
    ensure(b1b2 == Rat::int(-1), || {
        format!("integral B_1 B_2 = {b1b2}")
    })?;
    let b2b2 = apostol_product_integral(1, 1).map_err(|e| e.to_string())?.0;
    ensure(b2b2 == Rat::frac(4, 3), || {
        format!("integral B_2 B_2 = {b2b2}")
    })?;

    let spots = [
        (moment_integrand(0, 1), apostol_moment_integral(0, 1)),
        (moment_integrand(2, 3), apostol_moment_integral(2, 3)),
        (moment_integrand(4, 2), apostol_moment_integral(4, 2)),
        (product_integrand(0, 1), apostol_product_integral(0, 1)),
        (product_integrand(1, 1), apostol_product_integral(1, 1)),
        (product_integrand(3, 2), apostol_product_integral(3, 2)),
    ];
    let mut worst = 0f64;
    for (i, (f, exact)) in spots.iter().enumerate() {
        let exact = exact.as_ref().map_err(|e| e.to_string())?.0.to_f64();
        let approx = improper_quadrature_oracle(f, QUADRATURE_TOLERANCE / 10.0)
            .map_err(|e| e.to_string())?;
        let err = (approx - exact).abs();
        worst = worst.max(err);
        ensure(err <= QUADRATURE_TOLERANCE, || {
            format!("spot {i}: error {err:e}")
        })?;
    }
    Ok(format!(
        "{} quadrature spots, worst error {worst:.1e}",
        spots.len()
    ))
}

fn criterion_11() -> Check {
    let half = Rat::frac(1, 2);
    let mut bad = Vec::new();
    let mut worst = 0f64;
    for n in 0..=10 {
        let partial =
            geometric_moment_partial_sum(n, &half, EQ1_TERMS).map_err(|e| e.to_string())?;
        let gap = (Rat::from(fubini_number(n) * 2) - partial).to_f64().abs();
        worst = worst.max(gap);
        if gap > EQ1_TOLERANCE {
            bad.push(n);
        }
    }
    if bad.is_empty() {
        Ok(format!("N = {EQ1_TERMS}, worst gap {worst:.1e}"))
    } else {
        Err(format!(
            "N = {EQ1_TERMS}: gap above {EQ1_TOLERANCE:e} for n in {bad:?}, worst {worst:.1e}"
        ))
    }
}

fn run_profile(profile: &str) -> Result<(Duration, String), String> {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_fubini"))
        .args(["verify-all", "--profile", profile, "--format", "json"])
        .output()
        .map_err(|e| e.to_string())?;
    let took = start.elapsed();
    ensure(out.status.code() == Some(0), || {
        format!("{profile} exited with {:?}", out.status.code())
    })?;
    let mut run: serde_json::Value =
        serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    for r in run["reports"].as_array_mut().into_iter().flatten() {
        r.as_object_mut().map(|o| o.remove("elapsed_us"));
    }
    Ok((took, run.to_string()))
}

fn criterion_12() -> Check {
    let (full, first) = run_profile("full")?;
    ensure(full < FULL_BUDGET, || format!("full took {full:?}"))?;
    let (quick, _) = run_profile("quick")?;
    ensure(quick < QUICK_BUDGET, || format!("quick took {quick:?}"))?;
    let (_, second) = run_profile("full")?;
    ensure(first == second, || {
        "full reports differ between runs".into()
    })?;
    Ok(format!("full {full:.1?}, quick {quick:.1?}, deterministic"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("Fubini polynomial routes agree", criterion_1),
        ("ordered partition counts", criterion_2),
        ("integral of F_n gives B_n", criterion_3),
        ("moment integral routes", criterion_4),
        ("product integral, symmetry and double sum", criterion_5),
        ("Stirling inverse laws", criterion_6),
        ("explicit Fubini formulas", criterion_7),
        (
            "identity grid suite and printed-form witnesses",
            criterion_8,
        ),
        ("p-Bernoulli formulas", criterion_9),
        (
            "Apostol-Bernoulli routes, identities and integrals",
            criterion_10,
        ),
        ("geometric series at N = 80", criterion_11),
        ("verify-all timing, exit code and determinism", criterion_12),
    ];
    let mut failed = BTreeSet::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let id = i + 1;
        match check() {
            Ok(detail) => println!("PASS {id:>2} {name}: {detail}"),
            Err(detail) => {
                println!("FAIL {id:>2} {name}: {detail}");
                failed.insert(id);
            }
        }
    }
    let expected: BTreeSet<usize> = EXPECTED_FAILURES.into_iter().collect();
    println!(
        "{} of {} criteria passed; expected failures: {expected:?}",
        criteria.len() - failed.len(),
        criteria.len()
    );
    if failed == expected {
        ExitCode::SUCCESS
    } else {
        println!("unexpected outcome: failed {failed:?}");
        ExitCode::FAILURE
    }
}
