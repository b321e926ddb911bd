//! Acceptance criteria. Every test writes one `PASS`/`FAIL` line to stdout.

use std::io::Write;
use std::time::{Duration, Instant};

use polyhermite::hermite::{build_expansion, hermite_diagonal, hermite_form, HermiteForm};
use polyhermite::kernel::minimal_kernel_basis;
use polyhermite::oracle::{brute_kernel, default_kernel_bound, module_equal, naive_hermite};
use polyhermite::series::{remainder_power, reverse_columns, truncated_inverse};
use polyhermite::{ConstMatrix, PolyMatrix, Polynomial, PrimeModulus, Shift, Side};
use polyhermite_cli::bench::bench_cell;
use polyhermite_cli::random::{random_matrix, random_nonsingular};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const GOLDEN_LIMIT: Duration = Duration::from_secs(1);
const ORACLE_LIMIT: Duration = Duration::from_secs(60);
const LARGE_LIMIT: Duration = Duration::from_secs(30);

fn report(number: u32, title: &str, outcome: Result<String, String>) {
    let line = match &outcome {
        Ok(detail) => format!("PASS criterion {number:>2}: {title} ({detail})"),
        Err(detail) => format!("FAIL criterion {number:>2}: {title} ({detail})"),
    };
    let mut out = std::io::stdout().lock();
    writeln!(out, "{line}").unwrap();
    out.flush().unwrap();
    if let Err(detail) = outcome {
        panic!("criterion {number} failed: {detail}");
    }
}

fn z7() -> PrimeModulus {
    PrimeModulus::new(7).unwrap()
}

fn parse(rows: &[&[&str]]) -> PolyMatrix {
    PolyMatrix::parse_rows(rows, z7()).unwrap()
}

fn polys(entries: &[&str]) -> Vec<Polynomial> {
    entries.iter().map(|e| Polynomial::parse(e, z7()).unwrap()).collect()
}

fn show(v: &[Polynomial]) -> String {
    let parts: Vec<String> = v.iter().map(|p| p.to_pretty_string()).collect();
    format!("({})", parts.join(", "))
}

fn example1_f() -> PolyMatrix {
    parse(&[
        &["x", "-x^3", "-2x^4", "2x", "-x^2"],
        &["1", "-1", "-2x", "2", "-x"],
        &["-3", "3x^2 + x", "2x^2", "-x^4 + 1", "3x"],
    ])
}

fn example2_f() -> PolyMatrix {
    parse(&[
        &["x", "-x^3", "-2x^4", "2x", "-x^2"],
        &["1", "-1", "-2x", "2", "-x"],
        &["-3", "3x^2 + x", "2x^2", "-x^4 + 1", "3x"],
        &["0", "1", "x^2 + 2x - 2", "x^3 + 2x - 2", "0"],
        &["1", "-x^2 + 2", "-2x^3 - 3x + 3", "2x + 2", "0"],
    ])
}

fn example3_f() -> PolyMatrix {
    parse(&[
        &["2x^3 - 2x^2 + 3x - 3", "-2x^3 + 2x^2", "-2x + 2"],
        &["x^3 + 3x^2 - x + 2", "-2x^2 + x + 1", "-x^3 - x^2 - 2"],
        &["-3x^3 + x - 1", "-x", "1"],
    ])
}

/// Random size, degree and field for the oracle trials.
fn oracle_instance(rng: &mut ChaCha8Rng, trial: u64) -> PolyMatrix {
    let p = if trial.is_multiple_of(2) { 7 } else { 65521 };
    let n = rng.gen_range(1..=6);
    let deg = rng.gen_range(0..=5);
    random_nonsingular(n, deg, PrimeModulus::new(p).unwrap(), rng.gen()).unwrap()
}

fn elementary_product(rng: &mut ChaCha8Rng, n: usize, count: usize, m: PrimeModulus) -> PolyMatrix {
    let mut v = PolyMatrix::identity(n, m);
    for _ in 0..count {
        let mut e = PolyMatrix::identity(n, m);
        let i = rng.gen_range(0..n);
        match rng.gen_range(0..3) {
            0 if n > 1 => {
                let j = (i + rng.gen_range(1..n)) % n;
                let coeffs = (0..=rng.gen_range(0..3)).map(|_| rng.gen_range(0..m.value())).collect();
                e.set(j, i, Polynomial::from_coeffs(coeffs, m));
            }
            1 if n > 1 => {
                let j = (i + rng.gen_range(1..n)) % n;
                e.set(i, i, Polynomial::zero(m));
                e.set(j, j, Polynomial::zero(m));
                e.set(i, j, Polynomial::one(m));
                e.set(j, i, Polynomial::one(m));
            }
            _ => e.set(i, i, Polynomial::constant(rng.gen_range(1..m.value()), m)),
        }
        v = v.matmul(&e).unwrap();
    }
    v
}

// ---------------------------------------------------------------- golden values

#[test]
fn criterion_01_golden_diagonals() {
    let start = Instant::now();
    let diagonal = hermite_diagonal(&example2_f()).unwrap();
    let elapsed = start.elapsed();
    let expected = polys(&["x", "x^2 - 1", "x^3", "x^3 - 1", "x"]);
    let outcome = if diagonal != expected {
        Err(format!("got {}", show(&diagonal)))
    } else if elapsed >= GOLDEN_LIMIT {
        Err(format!("took {elapsed:?}"))
    } else {
        Ok(format!("{} in {elapsed:?}", show(&diagonal)))
    };
    report(1, "Hermite diagonal of the 5x5 example", outcome);
}

#[test]
fn criterion_02_golden_full_form() {
    let start = Instant::now();
    let h = hermite_form(&example3_f()).unwrap();
    let elapsed = start.elapsed();
    let expected = parse(&[
        &["x - 1", "0", "0"],
        &["1", "x + 1", "0"],
        &["-3x^3", "x^5 - x", "x^7 + 1"],
    ]);
    let outcome = if h.matrix() != &expected {
        Err(format!("got {}", h.matrix()))
    } else if elapsed >= GOLDEN_LIMIT {
        Err(format!("took {elapsed:?}"))
    } else {
        Ok(format!("exact match in {elapsed:?}"))
    };
    report(2, "Hermite form of the 3x3 example", outcome);
}

#[test]
fn criterion_03_golden_series_and_remainder() {
    let f = example3_f();
    let inverse = truncated_inverse(&reverse_columns(&f).unwrap(), 1).unwrap();
    let expected_inverse = PolyMatrix::from_const(&ConstMatrix::from_signed(&[vec![0, 0, 2], vec![3, 0, 2], vec![0, -1, 2]], z7()));
    let (g, c) = remainder_power(&f, 4, 2).unwrap();
    let expected_g = polys(&["2x", "2x", "2x"]);
    let expected_c = polys(&["-2x + 2", "-2", "0"]);
    let mut problems = Vec::new();
    if inverse.g != expected_inverse {
        problems.push(format!("inverse {}", inverse.g));
    }
    if g != expected_g {
        problems.push(format!("g = {}", show(&g)));
    }
    if c != expected_c {
        problems.push(format!("c = {} where {} was expected", show(&c), show(&expected_c)));
    }
    let outcome = if problems.is_empty() {
        Ok("inverse, g and c match".into())
    } else {
        Err(problems.join("; "))
    };
    report(3, "truncated inverse and x^4 e_3 remainder of the 3x3 example", outcome);
}

#[test]
fn criterion_04_golden_expansion() {
    let plan = build_expansion(&[1, 1, 7], 3, z7()).unwrap();
    let expected = parse(&[
        &["1", "0", "0", "0", "0"],
        &["0", "1", "0", "0", "0"],
        &["0", "0", "1", "x", "x^4"],
    ]);
    let outcome = if plan.e != expected {
        Err(format!("E = {}", plan.e))
    } else if plan.sstar.values() != [1, 1, 1, 3, 3] {
        Err(format!("shift {:?}", plan.sstar.values()))
    } else if plan.e.cols() != 5 {
        Err(format!("{} columns", plan.e.cols()))
    } else {
        Ok("E, shift (1, 1, 1, 3, 3), 5 columns".into())
    };
    report(4, "expansion for degrees (1, 1, 7) and d_max 3", outcome);
}

// ---------------------------------------------------------------- random trials

#[test]
fn criterion_05_oracle_equivalence() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let start = Instant::now();
    let mut outcome = Ok(());
    for trial in 0..200 {
        let f = oracle_instance(&mut rng, trial);
        let fast = hermite_form(&f).unwrap();
        let slow = naive_hermite(&f).unwrap();
        if fast != slow {
            outcome = Err(format!("trial {trial} differs on {f}"));
            break;
        }
    }
    let elapsed = start.elapsed();
    let outcome = outcome.and_then(|()| {
        if elapsed < ORACLE_LIMIT {
            Ok(format!("200 trials in {elapsed:?}"))
        } else {
            Err(format!("took {elapsed:?}"))
        }
    });
    report(5, "fast form equals elimination oracle", outcome);
}

#[test]
fn criterion_06_conservation_and_structure() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut outcome = Ok("200 trials".to_string());
    for trial in 0..200 {
        let f = oracle_instance(&mut rng, trial);
        let h = hermite_form(&f).unwrap();
        let total: usize = h.diagonal_degrees().iter().sum();
        let det = f.determinant().unwrap().deg().unwrap();
        if total != det {
            outcome = Err(format!("trial {trial}: diagonal degrees sum to {total}, det has degree {det}"));
            break;
        }
        if let Err(e) = HermiteForm::check(h.matrix()) {
            outcome = Err(format!("trial {trial}: {e}"));
            break;
        }
    }
    report(6, "degree conservation and Hermite shape", outcome);
}

#[test]
fn criterion_07_unimodular_invariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut outcome = Ok("50 trials".to_string());
    for trial in 0..50 {
        let m = PrimeModulus::new(if trial % 2 == 0 { 7 } else { 65521 }).unwrap();
        let n = rng.gen_range(1..=5);
        let deg = rng.gen_range(0..=4);
        let f = random_nonsingular(n, deg, m, rng.gen()).unwrap();
        let v = elementary_product(&mut rng, n, 10, m);
        let fv = f.matmul(&v).unwrap();
        if hermite_form(&fv).unwrap() != hermite_form(&f).unwrap() {
            outcome = Err(format!("trial {trial} changed under {v}"));
            break;
        }
    }
    report(7, "invariance under elementary column operations", outcome);
}

fn kernel_problem(f: &PolyMatrix, shift: &Shift) -> Option<String> {
    let k = minimal_kernel_basis(f, shift).unwrap();
    if !f.matmul(&k.basis).unwrap().is_zero() {
        return Some("nonzero residual".into());
    }
    let expected = f.cols() - f.rank();
    if k.basis.cols() != expected {
        return Some(format!("{} columns, expected {expected}", k.basis.cols()));
    }
    if k.basis.cols() > 0 && !k.basis.is_reduced(shift, Side::Column).unwrap() {
        return Some("basis is not shift reduced".into());
    }
    let brute = brute_kernel(f, default_kernel_bound(f).max(1));
    if !brute.is_empty() {
        let vectors = PolyMatrix::from_columns(f.cols(), brute, f.modulus());
        let joined = k.basis.hstack(&vectors).unwrap();
        if !module_equal(&k.basis, &joined).unwrap() {
            return Some("brute force kernel vector outside the span".into());
        }
    }
    None
}

#[test]
fn criterion_08_kernel_bases() {
    let f = example1_f();
    let shift = Shift::new(vec![1, 3, 4, 4, 2]);
    let mut outcome = match kernel_problem(&f, &shift) {
        Some(problem) => Err(format!("example: {problem}")),
        None => {
            let mut degrees = minimal_kernel_basis(&f, &shift).unwrap().degrees;
            degrees.sort_unstable();
            if degrees == [2, 5] {
                Ok("example degrees {2, 5} and 100 random instances".to_string())
            } else {
                Err(format!("example degrees {degrees:?}"))
            }
        }
    };
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for trial in 0..100 {
        if outcome.is_err() {
            break;
        }
        let m = PrimeModulus::new(if trial % 2 == 0 { 7 } else { 65521 }).unwrap();
        let rows = rng.gen_range(1..=3);
        let cols = rng.gen_range(1..=5);
        let deg = rng.gen_range(0..=3);
        let mut f = random_matrix(rows, cols, deg, m, rng.gen());
        if trial % 5 == 0 && rows > 1 {
            let top = f.submatrix(0..1, 0..cols);
            f = f.submatrix(0..rows - 1, 0..cols).vstack(&top).unwrap();
        }
        let shift = Shift::new((0..cols).map(|_| rng.gen_range(-2..=3)).collect());
        if let Some(problem) = kernel_problem(&f, &shift) {
            outcome = Err(format!("trial {trial}: {problem}"));
        }
    }
    report(8, "minimal kernel bases", outcome);
}

#[test]
fn criterion_09_predictable_degrees() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut checked = 0;
    let mut failures = 0;
    while checked < 100 {
        let m = PrimeModulus::new(if rng.gen() { 7 } else { 65521 }).unwrap();
        let n = rng.gen_range(1..=5);
        let k = rng.gen_range(1..=n);
        let l = rng.gen_range(1..=5);
        let a = random_matrix(n, k, rng.gen_range(0..=4), m, rng.gen());
        let u = Shift::new((0..n).map(|_| rng.gen_range(-2..=4)).collect());
        if a.nonzero_columns().len() < k || !a.is_reduced(&u, Side::Column).unwrap() {
            continue;
        }
        let b = random_matrix(k, l, rng.gen_range(0..=4), m, rng.gen());
        if b.nonzero_columns().len() < l {
            continue;
        }
        let v: Vec<i64> = a.cdeg(Some(&u)).unwrap().iter().map(|d| d.finite().unwrap()).collect();
        let ab = a.matmul(&b).unwrap();
        if ab.cdeg(Some(&u)).unwrap() != b.cdeg(Some(&Shift::new(v))).unwrap() {
            failures += 1;
        }
        checked += 1;
    }
    let outcome = if failures == 0 {
        Ok("100 instances".into())
    } else {
        Err(format!("{failures} of 100 instances"))
    };
    report(9, "predictable degree property", outcome);
}

// ---------------------------------------------------------------- scale

#[test]
fn criterion_10_desk_scale_performance() {
    let m = PrimeModulus::new(65521).unwrap();
    let f = random_nonsingular(24, 4, m, 10).unwrap();
    let start = Instant::now();
    let h = hermite_form(&f).unwrap();
    let large = start.elapsed();
    let degree_ok = h.diagonal_degrees().iter().sum::<usize>() == f.determinant().unwrap().deg().unwrap();
    let row = bench_cell(16, 4, m, 1, 3).unwrap();
    let outcome = if !degree_ok {
        Err("n = 24 form has the wrong determinant degree".into())
    } else if large >= LARGE_LIMIT {
        Err(format!("n = 24 took {large:?}"))
    } else if row.ratio() >= 1.0 {
        Err(format!("ratio {:.3} at n = 16, d = 4", row.ratio()))
    } else {
        Ok(format!(
            "n = 24 in {large:?}; n = 16, d = 4: fast {:?}, naive {:?}, ratio {:.3}",
            row.fast,
            row.naive,
            row.ratio()
        ))
    };
    report(10, "desk scale timing", outcome);
}
