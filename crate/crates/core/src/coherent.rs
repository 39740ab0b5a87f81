//! Eigenstates of `a_g = a^3`: one coherent-state family per ladder.
//!
//! `|alpha>_j = sum_n alpha^n / sqrt((3n+j)!) |3n+j>`, normalized by
//! `F_j(|alpha|^2) = sum_n |alpha|^{2n} / (3n+j)!`. With `alpha = z^3` the
//! non-normalized form `|z>_j = sum_n z^{3n+j} / sqrt((3n+j)!) |3n+j>` is a
//! superposition of three standard coherent states on an equilateral
//! triangle `z, z w, z w^2` (`w = exp(2 pi i / 3)`).

use std::f64::consts::PI;

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::fock::{
    build_deformed_ladders, build_hamiltonian, build_momentum, build_position, FockVector, LadderIndex,
    MIN_DEFORMED_TRUNCATION,
};
use crate::series::{factorial, factorial_exact, mod3_series, CompensatedSum};

/// The first dropped term of the normalization series must fall below this
/// fraction of the partial sum.
pub const TAIL_TARGET: f64 = 1e-28;

/// Parameters of one coherent state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoherentSpec {
    pub ladder: LadderIndex,
    pub alpha: C64,
    pub truncation: usize,
}

impl CoherentSpec {
    /// Spec with the smallest truncation satisfying the tail rule.
    pub fn new(ladder: LadderIndex, alpha: C64) -> Result<Self> {
        let truncation = minimal_truncation(ladder, alpha.norm())?;
        Ok(Self { ladder, alpha, truncation })
    }

    pub fn with_truncation(self, truncation: usize) -> Self {
        Self { truncation, ..self }
    }

    pub fn is_adequate(&self) -> Result<bool> {
        Ok(self.truncation >= minimal_truncation(self.ladder, self.alpha.norm())?)
    }
}

/// Smallest `N = 3m + j + 1` whose next series term
/// `|alpha|^{2(m+1)} / (3(m+1)+j)!` is below [`TAIL_TARGET`] times the
/// partial sum, on the decreasing side of the series.
pub fn minimal_truncation(ladder: LadderIndex, abs_alpha: f64) -> Result<usize> {
    let s = abs_alpha * abs_alpha;
    let j = ladder.residue() as usize;
    let mut term = 1.0 / factorial(j as u32);
    let mut partial = CompensatedSum::new();
    let mut m = 0usize;
    loop {
        partial.add(term);
        let k = 3 * m + j;
        let ratio = s / ((k + 1) as f64 * (k + 2) as f64 * (k + 3) as f64);
        term *= ratio;
        if !term.is_finite() || !partial.value().is_finite() {
            return Err(Error::Overflow(abs_alpha));
        }
        if ratio < 1.0 && term < TAIL_TARGET * partial.value() {
            return Ok(3 * m + j + 1);
        }
        m += 1;
    }
}

/// `F_j(|alpha|^2)`, the squared norm of the non-normalized state.
pub fn normalization_series(ladder: LadderIndex, abs_alpha: f64) -> f64 {
    mod3_series(ladder.residue() as u32, abs_alpha * abs_alpha)
}

/// Coefficients `alpha^n / sqrt((3n+j)!) / sqrt(F_j)` for every ladder
/// index below the truncation, without checking the tail rule.
pub fn build_cs_truncated(spec: &CoherentSpec) -> Result<FockVector> {
    let j = spec.ladder.residue() as usize;
    let norm = normalization_series(spec.ladder, spec.alpha.norm());
    if !norm.is_finite() {
        return Err(Error::Overflow(spec.alpha.norm()));
    }
    let mut v = FockVector::zeros(spec.truncation);
    let mut amp = C64::new(1.0 / (factorial(j as u32) * norm).sqrt(), 0.0);
    let coeffs = v.coeffs_mut();
    let mut k = j;
    while k < spec.truncation {
        coeffs[k] = amp;
        let growth = ((k + 1) as f64 * (k + 2) as f64 * (k + 3) as f64).sqrt();
        amp = amp * spec.alpha / growth;
        k += 3;
    }
    Ok(v)
}

/// Normalized coherent state; fails when the truncation is below the tail rule.
pub fn build_cs(spec: &CoherentSpec) -> Result<FockVector> {
    let minimal = minimal_truncation(spec.ladder, spec.alpha.norm())?;
    if spec.truncation < minimal {
        return Err(Error::Truncation { requested: spec.truncation, minimal });
    }
    build_cs_truncated(spec)
}

/// `|| a_g |alpha>_j - alpha |alpha>_j ||` with the truncated operators.
/// No adequacy check is made, so an undersized truncation shows up here.
pub fn eigen_residual(spec: &CoherentSpec) -> Result<f64> {
    let dim = spec.truncation.max(MIN_DEFORMED_TRUNCATION);
    let v = build_cs_truncated(spec)?.resized(dim);
    let (lower, _) = build_deformed_ladders(dim)?;
    let lv = lower.apply(&v)?;
    Ok(lv
        .coeffs()
        .iter()
        .zip(v.coeffs())
        .map(|(l, c)| (l - spec.alpha * c).norm_sqr())
        .sum::<f64>()
        .sqrt())
}

/// Norm of the defect the truncation leaves in the eigenvalue equation:
/// the top kept coefficient is not fed from above, so the residual is
/// `|alpha| |c_top|`, plus a rounding allowance.
pub fn truncation_tail_bound(spec: &CoherentSpec) -> Result<f64> {
    let v = build_cs_truncated(spec)?;
    let top = v.coeffs().iter().rev().find(|c| c.norm() > 0.0).copied().unwrap_or_default();
    let rounding = 64.0 * f64::EPSILON * (1.0 + spec.alpha.norm()) * (spec.truncation as f64).powf(1.5);
    Ok(spec.alpha.norm() * top.norm() + rounding)
}

/// `|a |alpha>_j|^2 = <a+ a>` from the ratio of mod-3 series.
pub fn a_norm_squared(ladder: LadderIndex, abs_alpha: f64) -> f64 {
    let s = abs_alpha * abs_alpha;
    match ladder.residue() {
        0 => s * mod3_series(2, s) / mod3_series(0, s),
        1 => mod3_series(0, s) / mod3_series(1, s),
        _ => mod3_series(1, s) / mod3_series(2, s),
    }
}

/// Position and momentum moments of a coherent state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CsStatistics {
    pub mean_x: f64,
    pub mean_p: f64,
    pub mean_x2: f64,
    pub mean_p2: f64,
    pub mean_h: f64,
    /// `<a+ a>`.
    pub mean_number: f64,
    pub uncertainty_product: f64,
}

/// Moments as quadratic forms with the Fock-space operators. The state is
/// padded by two levels so that `x^2` and `p^2` act without truncation loss.
pub fn statistics(spec: &CoherentSpec) -> Result<CsStatistics> {
    let v = build_cs(spec)?;
    let dim = spec.truncation + 2;
    let v = v.resized(dim);
    let x = build_position(dim)?;
    let p = build_momentum(dim)?;
    let h = build_hamiltonian(dim)?;
    let xv = x.apply(&v)?;
    let pv = p.apply(&v)?;
    let mean_x = v.inner(&xv)?.re;
    let mean_p = v.inner(&pv)?.re;
    let mean_x2 = xv.norm_sqr();
    let mean_p2 = pv.norm_sqr();
    let mean_h = h.expectation(&v)?.re;
    let mean_number = mean_h - 0.5 * v.norm_sqr();
    let var_x = mean_x2 - mean_x * mean_x;
    let var_p = mean_p2 - mean_p * mean_p;
    Ok(CsStatistics {
        mean_x,
        mean_p,
        mean_x2,
        mean_p2,
        mean_h,
        mean_number,
        uncertainty_product: (var_x * var_p).sqrt(),
    })
}

/// `<a^2>`; it vanishes identically on a single mod-3 ladder.
pub fn mean_a_squared(spec: &CoherentSpec) -> Result<C64> {
    let dim = spec.truncation.max(3);
    let v = build_cs(spec)?.resized(dim);
    let a = crate::fock::build_annihilation(dim)?;
    a.matmul(&a)?.expectation(&v)
}

/// `U(t)|alpha>_j = exp(-i(j+1/2)t) |alpha exp(-3it)>_j`.
pub fn evolve(spec: &CoherentSpec, t: f64) -> (C64, CoherentSpec) {
    let j = spec.ladder.residue() as f64;
    let phase = C64::from_polar(1.0, -(j + 0.5) * t);
    let alpha = spec.alpha * C64::from_polar(1.0, -3.0 * t);
    (phase, CoherentSpec { alpha, ..*spec })
}

/// `exp(-iHt)` applied coefficientwise.
pub fn evolve_coefficients(v: &FockVector, t: f64) -> FockVector {
    let coeffs = v
        .coeffs()
        .iter()
        .enumerate()
        .map(|(n, c)| c * C64::from_polar(1.0, -(n as f64 + 0.5) * t))
        .collect();
    FockVector::from_coeffs(coeffs)
}

/// Smallest truncation for `sum z^n/sqrt(n!) |n>` by the same tail rule.
pub fn standard_minimal_truncation(abs_z: f64) -> Result<usize> {
    let s = abs_z * abs_z;
    let mut term = 1.0;
    let mut partial = CompensatedSum::new();
    let mut n = 0usize;
    loop {
        partial.add(term);
        let ratio = s / (n + 1) as f64;
        term *= ratio;
        if !term.is_finite() || !partial.value().is_finite() {
            return Err(Error::Overflow(abs_z));
        }
        if ratio < 1.0 && term < TAIL_TARGET * partial.value() {
            return Ok(n + 1);
        }
        n += 1;
    }
}

/// `sum_n z^n / sqrt(n!) |n>` up to the truncation, unchecked.
pub fn standard_cs_truncated(z: C64, truncation: usize) -> FockVector {
    let mut coeffs = Vec::with_capacity(truncation);
    let mut amp = C64::new(1.0, 0.0);
    for n in 0..truncation {
        coeffs.push(amp);
        amp = amp * z / ((n + 1) as f64).sqrt();
    }
    FockVector::from_coeffs(coeffs)
}

/// Non-normalized standard coherent state `|z>`.
pub fn standard_cs_nonnorm(z: C64, truncation: usize) -> Result<FockVector> {
    let minimal = standard_minimal_truncation(z.norm())?;
    if truncation < minimal {
        return Err(Error::Truncation { requested: truncation, minimal });
    }
    Ok(standard_cs_truncated(z, truncation))
}

/// Non-normalized ladder state `|z>_j = sum_n z^{3n+j}/sqrt((3n+j)!) |3n+j>`.
pub fn ladder_cs_nonnorm(z: C64, ladder: LadderIndex, truncation: usize) -> FockVector {
    let full = standard_cs_truncated(z, truncation);
    let coeffs = full
        .coeffs()
        .iter()
        .enumerate()
        .map(|(n, c)| if n % 3 == ladder.residue() as usize { *c } else { C64::new(0.0, 0.0) })
        .collect();
    FockVector::from_coeffs(coeffs)
}

/// `|| |z>_j ||^2 = |z|^{2j} F_j(|z|^6)`.
pub fn ladder_norm_sqr(z: C64, ladder: LadderIndex) -> f64 {
    let r2 = z.norm_sqr();
    r2.powi(ladder.residue() as i32) * mod3_series(ladder.residue() as u32, r2 * r2 * r2)
}

/// Principal cube root, so that `alpha = z^3`.
pub fn principal_cube_root(alpha: C64) -> C64 {
    if alpha.norm() == 0.0 {
        C64::new(0.0, 0.0)
    } else {
        C64::from_polar(alpha.norm().cbrt(), alpha.arg() / 3.0)
    }
}

/// Normalization shared by the three triangle weights.
pub const TRIANGLE_WEIGHT: f64 = 1.0 / 3.0;

/// `|z>_j` as a weighted sum of the standard states at `z`, `z w`, `z w^2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriangleDecomposition {
    pub ladder: LadderIndex,
    pub z: C64,
    pub weights: [C64; 3],
    pub labels: [C64; 3],
}

/// Weights `N_j (1, 1, 1)`, `N_j (1, -e^{i pi/3}, e^{2 i pi/3})` and
/// `N_j (1, e^{2 i pi/3}, e^{4 i pi/3})` with `N_j = 1/3`.
pub fn triangle_decompose(z: C64, ladder: LadderIndex) -> TriangleDecomposition {
    let e = |angle: f64| C64::from_polar(1.0, angle);
    let phases = match ladder.residue() {
        0 => [e(0.0), e(0.0), e(0.0)],
        1 => [e(0.0), -e(PI / 3.0), e(2.0 * PI / 3.0)],
        _ => [e(0.0), e(2.0 * PI / 3.0), e(4.0 * PI / 3.0)],
    };
    let weights = phases.map(|p| p * TRIANGLE_WEIGHT);
    let labels = [0.0, 1.0, 2.0].map(|k| z * e(2.0 * PI * k / 3.0));
    TriangleDecomposition { ladder, z, weights, labels }
}

/// One coefficient of a reconstruction report.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecompositionRow {
    pub n: usize,
    pub target: C64,
    pub reconstructed: C64,
    pub abs_error: f64,
}

impl TriangleDecomposition {
    /// `sum_k c_k |z_k>` truncated to `truncation` levels.
    pub fn reconstruct(&self, truncation: usize) -> FockVector {
        let mut out = vec![C64::new(0.0, 0.0); truncation];
        for (w, label) in self.weights.iter().zip(self.labels) {
            let v = standard_cs_truncated(label, truncation);
            for (o, c) in out.iter_mut().zip(v.coeffs()) {
                *o += w * c;
            }
        }
        FockVector::from_coeffs(out)
    }

    /// Coefficientwise comparison against `ladder_cs_nonnorm`.
    pub fn report(&self, truncation: usize) -> Vec<DecompositionRow> {
        let target = ladder_cs_nonnorm(self.z, self.ladder, truncation);
        let rebuilt = self.reconstruct(truncation);
        target
            .coeffs()
            .iter()
            .zip(rebuilt.coeffs())
            .enumerate()
            .map(|(n, (t, r))| DecompositionRow { n, target: *t, reconstructed: *r, abs_error: (t - r).norm() })
            .collect()
    }
}

/// How a moment row pairs the power of `x` with its factorial target.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MomentIndexing {
    /// Row `n = 1, 2, ...` compares `int x^{n-1} w(x) dx` with
    /// `Gamma(3(n-1) + j + 1)`: the moment problem for the radial weight
    /// `w(x) = f_j(x) / x`.
    #[default]
    Shifted,
    /// Row `n` compares `int x^{n-1} f_j(x) dx` with `Gamma(3n + j + 1)`,
    /// the condition on `f_j` itself.
    Measure,
}

/// Largest row supported with exact factorial targets.
pub const MAX_MOMENT_ROW: usize = 10;

/// Exact factorial target of row `n`.
pub fn moment_target(ladder: LadderIndex, n: usize, indexing: MomentIndexing) -> Option<u128> {
    let j = ladder.residue() as usize;
    let arg = match indexing {
        MomentIndexing::Shifted => 3 * n.checked_sub(1)? + j,
        MomentIndexing::Measure => 3 * n + j,
    };
    factorial_exact(arg as u32)
}

/// One row of a moment comparison.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentRow {
    pub n: usize,
    pub computed: f64,
    pub target: f64,
    pub rel_error: f64,
}

impl MomentRow {
    pub fn passes(&self, rel_tol: f64) -> bool {
        self.rel_error <= rel_tol
    }
}

/// Default relative tolerance for a moment to count as matched.
pub const MOMENT_REL_TOL: f64 = 1e-4;

/// Trapezoid moments of tabulated weight samples against their factorial
/// targets, for rows `1..=n_max`.
pub fn moment_check(
    ladder: LadderIndex,
    samples: &[(f64, f64)],
    n_max: usize,
    indexing: MomentIndexing,
) -> Result<Vec<MomentRow>> {
    if samples.len() < 2 {
        return Err(Error::InvalidMeasure("need at least two samples".into()));
    }
    if let Some((x, f)) = samples.iter().find(|(x, f)| *x < 0.0 || *f < 0.0 || !x.is_finite() || !f.is_finite()) {
        return Err(Error::InvalidMeasure(format!("sample ({x}, {f}) is negative or not finite")));
    }
    if samples.windows(2).any(|w| w[1].0 <= w[0].0) {
        return Err(Error::InvalidMeasure("abscissae must be strictly increasing".into()));
    }
    if n_max == 0 || n_max > MAX_MOMENT_ROW {
        return Err(Error::InvalidMeasure(format!("n_max must lie in 1..={MAX_MOMENT_ROW}")));
    }
    (1..=n_max)
        .map(|n| {
            let power = (n - 1) as i32;
            let mut acc = CompensatedSum::new();
            for w in samples.windows(2) {
                let (x0, f0) = w[0];
                let (x1, f1) = w[1];
                acc.add(0.5 * (x1 - x0) * (x0.powi(power) * f0 + x1.powi(power) * f1));
            }
            let computed = acc.value();
            let target = moment_target(ladder, n, indexing).expect("within exact range") as f64;
            Ok(MomentRow { n, computed, target, rel_error: (computed - target).abs() / target })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn j(k: u8) -> LadderIndex {
        LadderIndex::coherent(k).unwrap()
    }

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn build_examples() {
        let v = build_cs(&CoherentSpec::new(j(0), c(0.0, 0.0)).unwrap()).unwrap();
        assert_eq!(v.coeffs(), &[c(1.0, 0.0)]);
        let spec = CoherentSpec::new(j(2), c(0.0, 0.0)).unwrap().with_truncation(5);
        assert_eq!(build_cs(&spec).unwrap(), FockVector::basis(5, 2).unwrap());

        let v = build_cs(&CoherentSpec::new(j(0), c(1.0, 0.0)).unwrap()).unwrap();
        let ratio = v.coeffs()[3] / v.coeffs()[0];
        assert!((ratio - c(1.0 / 6f64.sqrt(), 0.0)).norm() < 1e-15);
        assert!((v.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn undersized_truncation_reports_minimum() {
        let spec = CoherentSpec::new(j(2), c(5.0, 0.0)).unwrap();
        let small = spec.with_truncation(6);
        assert_eq!(build_cs(&small), Err(Error::Truncation { requested: 6, minimal: spec.truncation }));
        assert!(!small.is_adequate().unwrap());
    }

    #[test]
    fn eigen_residual_examples() {
        let spec = CoherentSpec::new(j(1), c(2.0, 0.0)).unwrap();
        assert!(eigen_residual(&spec).unwrap() < 1e-10);
        assert_eq!(eigen_residual(&CoherentSpec::new(j(0), c(0.0, 0.0)).unwrap()).unwrap(), 0.0);
        let small = CoherentSpec::new(j(2), c(5.0, 0.0)).unwrap().with_truncation(9);
        assert!(eigen_residual(&small).unwrap() > 1e-3);
    }

    #[test]
    fn residual_matches_tail_bound() {
        for (k, a) in [(0, 0.5), (1, 2.0), (2, 5.0)] {
            let spec = CoherentSpec::new(j(k), c(a, 0.3)).unwrap();
            let r = eigen_residual(&spec).unwrap();
            assert!(r <= truncation_tail_bound(&spec).unwrap() * 10.0);
        }
    }

    #[test]
    fn a_norm_examples() {
        assert_eq!(a_norm_squared(j(0), 0.0), 0.0);
        assert_eq!(a_norm_squared(j(1), 0.0), 1.0);
        assert_eq!(a_norm_squared(j(2), 0.0), 2.0);
    }

    #[test]
    fn statistics_examples() {
        let s = statistics(&CoherentSpec::new(j(0), c(0.0, 0.0)).unwrap()).unwrap();
        assert!((s.uncertainty_product - 0.5).abs() < 1e-15);
        let s = statistics(&CoherentSpec::new(j(1), c(0.0, 0.0)).unwrap()).unwrap();
        assert!((s.uncertainty_product - 1.5).abs() < 1e-15);
        let s = statistics(&CoherentSpec::new(j(0), c(1.0, 1.0)).unwrap()).unwrap();
        let series = a_norm_squared(j(0), 2f64.sqrt()) + 0.5;
        assert!((s.uncertainty_product - series).abs() < 1e-12);
    }

    #[test]
    fn evolution_examples() {
        let spec = CoherentSpec::new(j(1), c(0.7, -0.2)).unwrap();
        let (phase, out) = evolve(&spec, 2.0 * PI / 3.0);
        assert!((out.alpha - spec.alpha).norm() < 1e-15);
        assert!((phase - C64::from_polar(1.0, -1.5 * 2.0 * PI / 3.0)).norm() < 1e-15);
        let (phase, out) = evolve(&spec, 0.0);
        assert_eq!((phase, out), (c(1.0, 0.0), spec));
        let (_, out) = evolve(&CoherentSpec::new(j(0), c(1.0, 0.0)).unwrap(), PI / 3.0);
        assert!((out.alpha - c(-1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn standard_cs_examples() {
        assert_eq!(standard_cs_nonnorm(c(0.0, 0.0), 1).unwrap().coeffs(), &[c(1.0, 0.0)]);
        let v = standard_cs_nonnorm(c(1.0, 0.0), 30).unwrap();
        assert!((v.coeffs()[2] - c(0.5f64.sqrt(), 0.0)).norm() < 1e-15);
        let n = standard_minimal_truncation(2.0).unwrap();
        let v = standard_cs_nonnorm(c(2.0, 0.0), n).unwrap();
        assert!((v.norm_sqr() / 4f64.exp() - 1.0).abs() < 1e-10);
        assert!(matches!(standard_cs_nonnorm(c(2.0, 0.0), 5), Err(Error::Truncation { .. })));
    }

    // Oracle: the roots-of-unity filter (1/3) sum_k w^{-jk} |w^k z> keeps
    // exactly the n = j (mod 3) coefficients.
    #[test]
    fn triangle_weights_match_filter() {
        for k in 0..3u8 {
            let d = triangle_decompose(c(1.0, 0.0), j(k));
            for (m, w) in d.weights.iter().enumerate() {
                let filter = C64::from_polar(1.0 / 3.0, -2.0 * PI * (k as f64) * (m as f64) / 3.0);
                assert!((w - filter).norm() < 1e-15, "j {k} weight {m}");
            }
            assert!(d.weights.iter().all(|w| (w.norm() - 1.0 / 3.0).abs() < 1e-15));
        }
    }

    #[test]
    fn triangle_examples() {
        let d = triangle_decompose(c(1.0, 0.0), j(1));
        let v = d.reconstruct(30);
        for (n, coef) in v.coeffs().iter().enumerate() {
            if n % 3 != 1 {
                assert!(coef.norm() < 1e-12);
            }
        }
        let worst = d.report(30).iter().map(|r| r.abs_error).fold(0.0, f64::max);
        assert!(worst < 1e-12);
    }

    #[test]
    fn moment_examples() {
        let samples: Vec<(f64, f64)> = (0..=60_000).map(|i| i as f64 * 1e-3).map(|x| (x, (-x).exp())).collect();
        let rows = moment_check(j(0), &samples, 2, MomentIndexing::Shifted).unwrap();
        assert!(rows[0].passes(MOMENT_REL_TOL));
        assert!(!rows[1].passes(MOMENT_REL_TOL));
        assert_eq!(rows[1].target, 6.0);
        assert!((rows[1].computed - 1.0).abs() < 1e-6);

        for (k, want) in [(0, 1), (1, 1), (2, 2)] {
            assert_eq!(moment_target(j(k), 1, MomentIndexing::Shifted), Some(want));
        }
        assert_eq!(moment_target(j(1), 3, MomentIndexing::Measure), Some(3_628_800));
        assert_eq!(moment_target(j(2), 10, MomentIndexing::Measure).unwrap(), factorial_exact(32).unwrap());
    }

    #[test]
    fn moment_rejects_bad_samples() {
        assert!(moment_check(j(0), &[], 1, MomentIndexing::Shifted).is_err());
        assert!(moment_check(j(0), &[(0.0, 1.0), (1.0, -1.0)], 1, MomentIndexing::Shifted).is_err());
        assert!(moment_check(j(0), &[(1.0, 1.0), (0.5, 1.0)], 1, MomentIndexing::Shifted).is_err());
        assert!(moment_check(j(0), &[(0.0, 1.0), (1.0, 1.0)], 11, MomentIndexing::Shifted).is_err());
    }

    #[test]
    fn cube_root() {
        let z = principal_cube_root(c(0.0, 8.0));
        assert!((z * z * z - c(0.0, 8.0)).norm() < 1e-14);
        assert_eq!(principal_cube_root(c(0.0, 0.0)), c(0.0, 0.0));
    }
}
