//! Factorials, compensated sums and the mod-3 exponential series
//! `F_k(s) = sum_n s^n / (3n + k)!` shared by the coherent-state code.

/// Neumaier-compensated running sum.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    carry: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.carry
    }
}

impl std::iter::FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = CompensatedSum::new();
        for x in iter {
            acc.add(x);
        }
        acc
    }
}

/// Exact `n!` for `n <= 34` (the largest factorial that fits a `u128`).
pub fn factorial_exact(n: u32) -> Option<u128> {
    (1..=n as u128).try_fold(1u128, |acc, k| acc.checked_mul(k))
}

/// `n!` as a double. Exact products for `n <= 34`, plain product beyond.
pub fn factorial(n: u32) -> f64 {
    match factorial_exact(n) {
        Some(v) => v as f64,
        None => (1..=n).fold(1.0, |acc, k| acc * k as f64),
    }
}

/// Relative tail target used when summing the series to convergence.
pub const SERIES_REL_TAIL: f64 = 1e-17;

/// `sum_{n >= 0} s^n / (3n + k)!` for `s >= 0`, summed in ascending order
/// with compensation until the next term drops below `SERIES_REL_TAIL`
/// of the partial sum on the decreasing side of the peak.
pub fn mod3_series(k: u32, s: f64) -> f64 {
    debug_assert!(s >= 0.0);
    let mut term = 1.0 / factorial(k);
    let mut acc = CompensatedSum::new();
    let mut n: u32 = 0;
    loop {
        acc.add(term);
        let m = 3 * n + k;
        let ratio = s / ((m + 1) as f64 * (m + 2) as f64 * (m + 3) as f64);
        term *= ratio;
        n += 1;
        if ratio < 1.0 && term <= SERIES_REL_TAIL * acc.value() {
            break;
        }
        if !term.is_finite() || n > 100_000 {
            break;
        }
    }
    acc.value()
}
