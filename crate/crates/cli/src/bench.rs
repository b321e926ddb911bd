//! Wall-clock comparison of the fast form against the elimination oracle.

use std::time::{Duration, Instant};

use polyhermite::hermite::hermite_form;
use polyhermite::oracle::naive_hermite;
use polyhermite::{Error, PrimeModulus};

use crate::random::random_nonsingular;

#[derive(Clone, Debug)]
pub struct BenchRow {
    pub n: usize,
    pub deg: usize,
    pub fast: Duration,
    pub naive: Duration,
}

impl BenchRow {
    pub fn ratio(&self) -> f64 {
        self.fast.as_secs_f64() / self.naive.as_secs_f64().max(f64::MIN_POSITIVE)
    }
}

/// Times both methods on one random instance, keeping the best of `repeat`
/// runs each. Fails if the two results differ.
pub fn bench_cell(n: usize, deg: usize, modulus: PrimeModulus, seed: u64, repeat: usize) -> Result<BenchRow, Error> {
    let f = random_nonsingular(n, deg, modulus, seed)
        .ok_or_else(|| Error::InvalidInput("no nonsingular instance found".into()))?;
    let mut fast = Duration::MAX;
    let mut naive = Duration::MAX;
    let mut results = None;
    for _ in 0..repeat.max(1) {
        let t = Instant::now();
        let h = hermite_form(&f)?;
        fast = fast.min(t.elapsed());
        let t = Instant::now();
        let g = naive_hermite(&f)?;
        naive = naive.min(t.elapsed());
        results = Some((h, g));
    }
    let (h, g) = results.expect("at least one run");
    if h != g {
        return Err(Error::Inconsistent(format!("methods disagree at n = {n}, deg = {deg}")));
    }
    Ok(BenchRow { n, deg, fast, naive })
}

pub fn render_table(rows: &[BenchRow]) -> String {
    let mut out = format!("{:>4} {:>4} {:>12} {:>12} {:>8}\n", "n", "deg", "fast (s)", "naive (s)", "ratio");
    for r in rows {
        out.push_str(&format!(
            "{:>4} {:>4} {:>12.6} {:>12.6} {:>8.3}\n",
            r.n,
            r.deg,
            r.fast.as_secs_f64(),
            r.naive.as_secs_f64(),
            r.ratio()
        ));
    }
    out
}
