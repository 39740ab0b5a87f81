//! The invariant suite behind `pha verify`.
//!
//! Every check reports its worst measured error against a fixed tolerance.
//! Each [`Fault`] swaps one deliberately wrong ingredient into exactly one
//! check, so that the failure path of that check can be exercised.

use std::f64::consts::PI;

use num_complex::Complex64 as C64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::coherent::{
    a_norm_squared, build_cs, eigen_residual, evolve, evolve_coefficients, ladder_cs_nonnorm,
    ladder_norm_sqr, mean_a_squared, minimal_truncation, statistics, triangle_decompose, CoherentSpec,
};
use crate::error::Result;
use crate::fock::{
    build_deformed_ladders, build_hamiltonian, commutator, ladder_state, number_analogue, number_analogue_shifted,
    spectrum_decomposition, FockVector, LadderIndex,
};
use crate::grid::{Grid1, GridSpec};
use crate::painleve::{
    max_abs_residual, piv_parameters_exact, residual_scan, solution_from_extremal, Derivatives, ExtremalSeed,
    Fraction, ParameterSign, DEFAULT_DELTA,
};
use crate::wavepacket::{
    half_period_parity_check, hermite_functions, shift_check, FockPacket, GaussianPacket, DEFORMED_PERIOD,
};

/// Fixed seed for every randomized check.
pub const DEFAULT_SEED: u64 = 0x5eed_0003;

/// Tolerances of the suite.
pub mod tol {
    /// Interior commutator identities, relative to the largest entry of `a_g`.
    pub const COMMUTATOR_REL: f64 = 1e-12;
    /// `a_g+ a_g` against the cubic, in units of machine epsilon times the norm.
    pub const NUMBER_ANALOGUE_EPS: f64 = 10.0;
    pub const LADDER_STATE: f64 = 1e-12;
    pub const PIV_RESIDUAL: f64 = 1e-10;
    pub const PIV_FD_SHIFT: f64 = 1e-5;
    pub const EIGEN_RESIDUAL: f64 = 1e-10;
    pub const MINIMA: f64 = 1e-12;
    pub const STAT_IDENTITY: f64 = 1e-12;
    pub const STAT_SERIES: f64 = 1e-10;
    pub const EVOLUTION: f64 = 1e-12;
    pub const TRIANGLE: f64 = 1e-12;
    pub const PARTITION_REL: f64 = 1e-10;
    pub const HERMITE: f64 = 1e-8;
    pub const DUAL_PATH: f64 = 1e-8;
    pub const NORMALIZATION: f64 = 1e-6;
    pub const PERIOD: f64 = 1e-10;
    /// The half period must *fail* to be a period by at least this much.
    pub const NOT_A_PERIOD: f64 = 1e-3;
    pub const PARITY: f64 = 1e-10;
}

/// One deliberately wrong ingredient per check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum Fault {
    /// `[H, a_g]` compared with `+3 a_g`.
    CommutatorSign,
    /// `N(H + 2)` in place of `N(H + 3)`.
    LadderShift,
    /// Last root of the cubic moved from 5/2 to 7/2.
    NumberRoot,
    /// Ladder seeded at `|j>` instead of `|j - 1>`.
    LadderLabel,
    /// `a` with the `+2 E~_1` sign.
    PivSign,
    /// Solutions shifted by 0.01.
    PivOffset,
    /// Finite differences with step 1e-9.
    FdStep,
    /// Coherent states built at half the truncation the tail rule asks for.
    EigenTruncation,
    /// Uncertainty product read off `<a+ a>` without the 1/2.
    MinimaOffset,
    /// Series formula of the neighbouring ladder.
    SeriesBranch,
    /// Evolution phase `exp(-ijt)`, missing the zero-point term.
    EvolutionPhase,
    /// Middle weight of the j = 1 triangle with the wrong sign.
    TriangleWeight,
    /// Partition summed over two ladders only.
    PartitionDrop,
    /// Hermite functions without the `pi^{-1/4}` factor.
    HermiteNorm,
    /// Gaussian labels rotated at the deformed rate `exp(-3it)`.
    DualPathRotation,
    /// Ladder density normalized by the full exponential `exp(|z|^2)`.
    NormalizationDenominator,
    /// Period taken as `2 pi / 6`.
    PeriodSixth,
    /// Half-period comparison without the reflection `x -> -x`.
    ParityReflection,
}

/// Inputs of a `verify` run.
#[derive(Debug, Clone, Default)]
pub struct VerifyConfig {
    pub faults: Vec<Fault>,
    /// Extra eigen-residual probe `(ladder, alpha, truncation override)`.
    pub probe: Option<(LadderIndex, C64, Option<usize>)>,
    pub seed: Option<u64>,
}

impl VerifyConfig {
    fn has(&self, fault: Fault) -> bool {
        self.faults.contains(&fault)
    }
}

/// Outcome of one check.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub worst: f64,
    pub tolerance: f64,
    pub detail: String,
}

impl CheckResult {
    fn below(name: &'static str, worst: f64, tolerance: f64, detail: impl Into<String>) -> Self {
        Self { name, passed: worst < tolerance, worst, tolerance, detail: detail.into() }
    }

    fn error(name: &'static str, tolerance: f64, err: crate::Error) -> Self {
        Self { name, passed: false, worst: f64::NAN, tolerance, detail: format!("error: {err}") }
    }
}

fn run(name: &'static str, tolerance: f64, f: impl FnOnce() -> Result<CheckResult>) -> CheckResult {
    f().unwrap_or_else(|e| CheckResult::error(name, tolerance, e))
}

/// Random `alpha` with `|alpha| <= max_abs`, uniform in the disk.
pub fn random_alpha(rng: &mut StdRng, max_abs: f64) -> C64 {
    let r = max_abs * rng.gen::<f64>().sqrt();
    C64::from_polar(r, 2.0 * PI * rng.gen::<f64>())
}

pub fn random_ladder(rng: &mut StdRng) -> LadderIndex {
    LadderIndex::ALL[rng.gen_range(0..3)]
}

pub const ALGEBRA_TRUNCATION: usize = 60;

fn check_commutator_h(cfg: &VerifyConfig) -> CheckResult {
    let name = "fock.commutator_h";
    run(name, tol::COMMUTATOR_REL, || {
        let n = ALGEBRA_TRUNCATION;
        let h = build_hamiltonian(n)?;
        let (ag, agp) = build_deformed_ladders(n)?;
        let sign = if cfg.has(Fault::CommutatorSign) { -3.0 } else { 3.0 };
        let lower = commutator(&h, &ag)?.add(&ag.scaled(C64::new(sign, 0.0)))?;
        let raise = commutator(&h, &agp)?.sub(&agp.scaled(C64::new(sign, 0.0)))?;
        let last = lower.interior_limit();
        let worst = lower.interior_max_abs(last).max(raise.interior_max_abs(last)) / ag.max_abs();
        Ok(CheckResult::below(name, worst, tol::COMMUTATOR_REL, format!("N={n}, indices <= {last}")))
    })
}

fn check_commutator_ladders(cfg: &VerifyConfig) -> CheckResult {
    let name = "fock.commutator_ladders";
    run(name, tol::COMMUTATOR_REL, || {
        let n = ALGEBRA_TRUNCATION;
        let (ag, agp) = build_deformed_ladders(n)?;
        let shift = if cfg.has(Fault::LadderShift) { 2.0 } else { 3.0 };
        let rhs = number_analogue_shifted(n, shift)?.sub(&number_analogue(n)?)?;
        let comm = commutator(&ag, &agp)?;
        let diff = comm.sub(&rhs)?;
        let last = diff.interior_limit();
        let worst = diff.interior_max_abs(last) / comm.interior_max_abs(last);
        Ok(CheckResult::below(name, worst, tol::COMMUTATOR_REL, format!("N={n}, indices <= {last}")))
    })
}

fn check_number_analogue(cfg: &VerifyConfig) -> CheckResult {
    let name = "fock.number_analogue";
    let tolerance = tol::NUMBER_ANALOGUE_EPS * f64::EPSILON;
    run(name, tolerance, || {
        let n = ALGEBRA_TRUNCATION;
        let (ag, agp) = build_deformed_ladders(n)?;
        let product = agp.matmul(&ag)?;
        let cubic = if cfg.has(Fault::NumberRoot) {
            crate::fock::FockOperator::diagonal(n, |k| {
                let e = k as f64 + 0.5;
                (e - 0.5) * (e - 1.5) * (e - 3.5)
            })
        } else {
            number_analogue(n)?
        };
        let worst = product.sub(&cubic)?.max_abs() / cubic.max_abs();
        Ok(CheckResult::below(name, worst, tolerance, format!("N={n}, full space, relative to max entry")))
    })
}

fn check_ladders(cfg: &VerifyConfig) -> CheckResult {
    let name = "fock.ladders";
    run(name, tol::LADDER_STATE, || {
        let n = 16;
        let (_, raise) = build_deformed_ladders(n)?;
        let mut worst: f64 = 0.0;
        for j_ext in 1..=3u8 {
            let ladder = LadderIndex::extremal(j_ext)?;
            let seed_level = if cfg.has(Fault::LadderLabel) { j_ext as usize } else { ladder.residue() as usize };
            for rung in 0..=3 {
                // brute force: repeated application, then normalization
                let mut v = FockVector::basis(n, seed_level)?;
                for _ in 0..rung {
                    v = raise.apply(&v)?;
                }
                let v = v.normalized();
                let got = ladder_state(ladder, rung, n)?;
                worst = worst.max(v.max_abs_diff(&got)?);
                worst = worst.max((got.norm() - 1.0).abs());
            }
        }
        let ladders = spectrum_decomposition(n)?;
        let mut seen = vec![0usize; n];
        for l in &ladders {
            for e in l {
                seen[(e - 0.5) as usize] += 1;
            }
        }
        let partition_ok = seen.iter().all(|&c| c == 1);
        let mut r = CheckResult::below(name, worst, tol::LADDER_STATE, format!("rungs 0..=3, partition ok: {partition_ok}"));
        r.passed &= partition_ok;
        Ok(r)
    })
}

fn check_piv_parameters(cfg: &VerifyConfig) -> CheckResult {
    let name = "piv.parameters";
    run(name, 1e-15, || {
        let sign = if cfg.has(Fault::PivSign) { ParameterSign::AsPrinted } else { ParameterSign::Consistent };
        let table = [
            (Fraction::new(0, 1), Fraction::new(-2, 9)),
            (Fraction::new(-1, 1), Fraction::new(-8, 9)),
            (Fraction::new(-2, 1), Fraction::new(-2, 9)),
        ];
        let mut worst: f64 = 0.0;
        let mut got = Vec::new();
        for (seed, (a, b)) in ExtremalSeed::standard().iter().zip(table) {
            let (ga, gb) = piv_parameters_exact(seed, sign);
            worst = worst.max((ga.to_f64() - a.to_f64()).abs()).max((gb.to_f64() - b.to_f64()).abs());
            got.push(format!("({ga}, {gb})"));
        }
        Ok(CheckResult::below(name, worst, 1e-15, got.join(" ")))
    })
}

/// The scan grid used for residual certificates: `|y| <= 10`, step 0.01.
pub fn piv_grid() -> Grid1 {
    Grid1::with_step(-10.0, 10.0, 0.01).expect("valid grid")
}

fn check_piv_residuals(cfg: &VerifyConfig) -> CheckResult {
    let name = "piv.residuals";
    run(name, tol::PIV_RESIDUAL, || {
        let grid = piv_grid();
        let mut worst: f64 = 0.0;
        for seed in ExtremalSeed::standard() {
            let mut sol = solution_from_extremal(&seed);
            if cfg.has(Fault::PivOffset) {
                sol = sol.with_offset(0.01);
            }
            let scan = residual_scan(&sol, &grid, DEFAULT_DELTA, Derivatives::Analytic)?;
            worst = worst.max(max_abs_residual(&scan));
        }
        Ok(CheckResult::below(name, worst, tol::PIV_RESIDUAL, "3 solutions, |y| <= 10, step 0.01, delta 0.1"))
    })
}

fn check_piv_finite_difference(cfg: &VerifyConfig) -> CheckResult {
    let name = "piv.finite_difference";
    run(name, tol::PIV_FD_SHIFT, || {
        let grid = piv_grid();
        let h = if cfg.has(Fault::FdStep) { 1e-9 } else { 1e-4 };
        let mut worst: f64 = 0.0;
        for seed in ExtremalSeed::standard() {
            let sol = solution_from_extremal(&seed);
            let exact = residual_scan(&sol, &grid, DEFAULT_DELTA, Derivatives::Analytic)?;
            let fd = residual_scan(&sol, &grid, DEFAULT_DELTA, Derivatives::FiniteDifference(h))?;
            for (a, b) in exact.iter().zip(&fd) {
                if let (Some(ra), Some(rb)) = (a.residual, b.residual) {
                    worst = worst.max((ra - rb).abs());
                }
            }
        }
        Ok(CheckResult::below(name, worst, tol::PIV_FD_SHIFT, format!("5-point differences, h = {h}")))
    })
}

fn check_eigen(cfg: &VerifyConfig, rng: &mut StdRng) -> CheckResult {
    let name = "cs.eigen_residual";
    run(name, tol::EIGEN_RESIDUAL, || {
        let mut worst: f64 = 0.0;
        for _ in 0..50 {
            let mut spec = CoherentSpec::new(random_ladder(rng), random_alpha(rng, 5.0))?;
            if cfg.has(Fault::EigenTruncation) {
                spec = spec.with_truncation((spec.truncation / 2).max(1));
            }
            worst = worst.max(eigen_residual(&spec)?);
        }
        Ok(CheckResult::below(name, worst, tol::EIGEN_RESIDUAL, "50 random (j, alpha), |alpha| <= 5"))
    })
}

fn check_eigen_probe(ladder: LadderIndex, alpha: C64, truncation: Option<usize>) -> CheckResult {
    let name = "cs.eigen_probe";
    run(name, tol::EIGEN_RESIDUAL, || {
        let minimal = minimal_truncation(ladder, alpha.norm())?;
        let n = truncation.unwrap_or(minimal);
        let spec = CoherentSpec { ladder, alpha, truncation: n };
        let worst = eigen_residual(&spec)?;
        let mut detail = format!("{ladder}, alpha = {alpha}, N = {n}");
        if worst >= tol::EIGEN_RESIDUAL || n < minimal {
            detail.push_str(&format!("; suggested N = {minimal}"));
        }
        Ok(CheckResult::below(name, worst, tol::EIGEN_RESIDUAL, detail))
    })
}

fn check_minima(cfg: &VerifyConfig) -> CheckResult {
    let name = "cs.minima";
    run(name, tol::MINIMA, || {
        let mut worst: f64 = 0.0;
        let mut got = Vec::new();
        for (ladder, want) in LadderIndex::ALL.iter().zip([0.5, 1.5, 2.5]) {
            let s = statistics(&CoherentSpec::new(*ladder, C64::new(0.0, 0.0))?)?;
            let v = if cfg.has(Fault::MinimaOffset) { s.mean_number } else { s.uncertainty_product };
            worst = worst.max((v - want).abs());
            got.push(format!("{v}"));
        }
        Ok(CheckResult::below(name, worst, tol::MINIMA, format!("minima {}", got.join(", "))))
    })
}

fn check_statistics(cfg: &VerifyConfig, rng: &mut StdRng) -> CheckResult {
    let name = "cs.statistics";
    run(name, tol::STAT_SERIES, || {
        let mut identity: f64 = 0.0;
        let mut series: f64 = 0.0;
        for _ in 0..50 {
            let ladder = random_ladder(rng);
            let spec = CoherentSpec::new(ladder, random_alpha(rng, 5.0))?;
            let s = statistics(&spec)?;
            identity = identity
                .max(s.mean_x.abs())
                .max(s.mean_p.abs())
                .max((s.mean_x2 - s.mean_p2).abs())
                .max((s.mean_x2 - s.mean_h).abs())
                .max((s.uncertainty_product - s.mean_h).abs())
                .max(mean_a_squared(&spec)?.norm());
            let branch = if cfg.has(Fault::SeriesBranch) {
                LadderIndex::ALL[(ladder.residue() as usize + 1) % 3]
            } else {
                ladder
            };
            let formula = a_norm_squared(branch, spec.alpha.norm()) + 0.5;
            series = series.max((s.uncertainty_product - formula).abs());
        }
        let mut r = CheckResult::below(
            name,
            series,
            tol::STAT_SERIES,
            format!("identity chain worst {identity:e}; series vs quadratic form worst {series:e}"),
        );
        r.passed &= identity < tol::STAT_IDENTITY;
        Ok(r)
    })
}

fn check_evolution(cfg: &VerifyConfig, rng: &mut StdRng) -> CheckResult {
    let name = "cs.evolution";
    run(name, tol::EVOLUTION, || {
        let mut worst: f64 = 0.0;
        for _ in 0..20 {
            let spec = CoherentSpec::new(random_ladder(rng), random_alpha(rng, 3.0))?;
            let t = rng.gen_range(-2.0 * PI..2.0 * PI);
            let direct = evolve_coefficients(&build_cs(&spec)?, t);
            let (mut phase, evolved) = evolve(&spec, t);
            if cfg.has(Fault::EvolutionPhase) {
                phase = C64::from_polar(1.0, -(spec.ladder.residue() as f64) * t);
            }
            let rebuilt = build_cs(&evolved)?.scaled(phase);
            worst = worst.max(direct.max_abs_diff(&rebuilt)?);
        }
        Ok(CheckResult::below(name, worst, tol::EVOLUTION, "20 random (j, alpha, t)"))
    })
}

fn check_triangle(cfg: &VerifyConfig, rng: &mut StdRng) -> CheckResult {
    let name = "cs.triangle";
    run(name, tol::TRIANGLE, || {
        let n = 40;
        let mut worst: f64 = 0.0;
        for _ in 0..10 {
            let z = random_alpha(rng, 3.0);
            for ladder in LadderIndex::ALL {
                let mut d = triangle_decompose(z, ladder);
                if cfg.has(Fault::TriangleWeight) && ladder.residue() == 1 {
                    d.weights[1] = -d.weights[1];
                }
                let err = d.report(n).iter().map(|r| r.abs_error).fold(0.0, f64::max);
                worst = worst.max(err);
            }
        }
        // disjoint Fock support makes the families exactly orthogonal
        let z = C64::new(1.3, -0.4);
        let states: Vec<FockVector> = LadderIndex::ALL.iter().map(|l| ladder_cs_nonnorm(z, *l, n)).collect();
        let mut orthogonal = true;
        for a in 0..3 {
            for b in (a + 1)..3 {
                orthogonal &= states[a].inner(&states[b])? == C64::new(0.0, 0.0);
            }
        }
        let mut r = CheckResult::below(name, worst, tol::TRIANGLE, format!("|z| <= 3, N = {n}, orthogonal: {orthogonal}"));
        r.passed &= orthogonal;
        Ok(r)
    })
}

fn check_partition(cfg: &VerifyConfig, rng: &mut StdRng) -> CheckResult {
    let name = "cs.partition";
    run(name, tol::PARTITION_REL, || {
        let mut worst: f64 = 0.0;
        for _ in 0..20 {
            let z = random_alpha(rng, 3.0);
            let families = if cfg.has(Fault::PartitionDrop) { 2 } else { 3 };
            let total: f64 = LadderIndex::ALL[..families].iter().map(|l| ladder_norm_sqr(z, *l)).sum();
            let e = z.norm_sqr().exp();
            worst = worst.max((total - e).abs() / e);
        }
        Ok(CheckResult::below(name, worst, tol::PARTITION_REL, "sum_j || |z>_j ||^2 = exp(|z|^2), |z| <= 3"))
    })
}

fn check_hermite(cfg: &VerifyConfig) -> CheckResult {
    let name = "wave.hermite";
    run(name, tol::HERMITE, || {
        let h = 1e-3;
        let n_max = 7;
        let scale = if cfg.has(Fault::HermiteNorm) { PI.powf(0.25) } else { 1.0 };
        let mut gram = vec![vec![0.0; n_max + 1]; n_max + 1];
        for i in 0..=30_000 {
            let x = -15.0 + i as f64 * h;
            let psi: Vec<f64> = hermite_functions(n_max, x).into_iter().map(|p| p * scale).collect();
            for a in 0..=n_max {
                for b in 0..=n_max {
                    gram[a][b] += psi[a] * psi[b] * h;
                }
            }
        }
        let mut worst: f64 = 0.0;
        for (a, row) in gram.iter().enumerate() {
            for (b, v) in row.iter().enumerate() {
                let want = if a == b { 1.0 } else { 0.0 };
                worst = worst.max((v - want).abs());
            }
        }
        Ok(CheckResult::below(name, worst, tol::HERMITE, "psi_0..psi_7 Gram matrix on [-15, 15], step 1e-3"))
    })
}

/// The `(j, z)` combinations used by the dual-path comparison.
pub fn dual_path_cases() -> Vec<(LadderIndex, C64)> {
    LadderIndex::ALL
        .iter()
        .flat_map(|l| [1.0, 2.0, 2.5].map(|z| (*l, C64::new(z, 0.0))))
        .collect()
}

/// Largest `|rho_fock - rho_gauss|` at `points` random `(x, t)` with
/// `|x| <= 8`, `0 <= t <= 2 pi`.
pub fn dual_path_worst(
    ladder: LadderIndex,
    z: C64,
    points: usize,
    rng: &mut StdRng,
    wrong_rate: bool,
) -> Result<f64> {
    let fock = FockPacket::new(ladder, z)?;
    let gauss = GaussianPacket::new(ladder, z)?;
    let mut worst: f64 = 0.0;
    for _ in 0..points {
        let x = rng.gen_range(-8.0..8.0);
        let t = rng.gen_range(0.0..2.0 * PI);
        let tg = if wrong_rate { 3.0 * t } else { t };
        worst = worst.max((fock.density(x, t)? - gauss.density(x, tg)).abs());
    }
    Ok(worst)
}

fn check_dual_path(cfg: &VerifyConfig, rng: &mut StdRng) -> CheckResult {
    let name = "wave.dual_path";
    run(name, tol::DUAL_PATH, || {
        let mut worst: f64 = 0.0;
        for (ladder, z) in dual_path_cases() {
            worst = worst.max(dual_path_worst(ladder, z, 500, rng, cfg.has(Fault::DualPathRotation))?);
        }
        Ok(CheckResult::below(name, worst, tol::DUAL_PATH, "j in {0,1,2}, z in {1, 2, 2.5}, 500 points each"))
    })
}

fn check_normalization(cfg: &VerifyConfig) -> CheckResult {
    let name = "wave.normalization";
    run(name, tol::NORMALIZATION, || {
        let grid = GridSpec { t_steps: 13, ..GridSpec::default() };
        let mut worst: f64 = 0.0;
        let mut nonnegative = true;
        for ladder in LadderIndex::ALL {
            let z = C64::new(2.0, 0.0);
            let mut field = GaussianPacket::new(ladder, z)?.field(&grid)?;
            if cfg.has(Fault::NormalizationDenominator) {
                let wrong = z.norm_sqr().exp() / crate::wavepacket::ladder_exponential(ladder, z.norm_sqr());
                field.values.mapv_inplace(|v| v / wrong);
            }
            nonnegative &= field.min_value() >= 0.0;
            worst = worst.max(field.max_normalization_error());
        }
        let mut r = CheckResult::below(name, worst, tol::NORMALIZATION, format!("default x grid, z = 2, nonnegative: {nonnegative}"));
        r.passed &= nonnegative;
        Ok(r)
    })
}

fn check_period(cfg: &VerifyConfig) -> CheckResult {
    let name = "wave.period";
    run(name, tol::PERIOD, || {
        let grid = GridSpec { t_steps: 25, ..GridSpec::default() };
        let period = if cfg.has(Fault::PeriodSixth) { PI / 3.0 } else { DEFORMED_PERIOD };
        let z = C64::new(2.0, 0.0);
        let mut worst: f64 = 0.0;
        for ladder in LadderIndex::ALL {
            worst = worst.max(shift_check(ladder, z, &grid, period)?);
        }
        let half = shift_check(LadderIndex::ALL[0], z, &grid, PI / 3.0)?;
        let mut r = CheckResult::below(
            name,
            worst,
            tol::PERIOD,
            format!("shift {period}; shift pi/3 gives {half:e} (must exceed {:e})", tol::NOT_A_PERIOD),
        );
        r.passed &= half > tol::NOT_A_PERIOD;
        Ok(r)
    })
}

fn check_parity(cfg: &VerifyConfig) -> CheckResult {
    let name = "wave.half_period_parity";
    run(name, tol::PARITY, || {
        let grid = GridSpec { x_steps: 81, t_steps: 9, ..GridSpec::default() };
        let z = C64::new(1.7, 0.6);
        let mut worst: f64 = 0.0;
        for ladder in LadderIndex::ALL {
            let w = if cfg.has(Fault::ParityReflection) {
                shift_check(ladder, z, &grid, PI / 3.0)?
            } else {
                half_period_parity_check(ladder, z, &grid)?
            };
            worst = worst.max(w);
        }
        Ok(CheckResult::below(name, worst, tol::PARITY, "rho(x, t + pi/3) = rho(-x, t)"))
    })
}

/// Runs the whole suite in a fixed order.
pub fn run_checks(cfg: &VerifyConfig) -> Vec<CheckResult> {
    let mut rng = StdRng::seed_from_u64(cfg.seed.unwrap_or(DEFAULT_SEED));
    let mut out = vec![
        check_commutator_h(cfg),
        check_commutator_ladders(cfg),
        check_number_analogue(cfg),
        check_ladders(cfg),
        check_piv_parameters(cfg),
        check_piv_residuals(cfg),
        check_piv_finite_difference(cfg),
        check_eigen(cfg, &mut rng),
    ];
    if let Some((ladder, alpha, truncation)) = cfg.probe {
        out.push(check_eigen_probe(ladder, alpha, truncation));
    }
    out.extend([
        check_minima(cfg),
        check_statistics(cfg, &mut rng),
        check_evolution(cfg, &mut rng),
        check_triangle(cfg, &mut rng),
        check_partition(cfg, &mut rng),
        check_hermite(cfg),
        check_dual_path(cfg, &mut rng),
        check_normalization(cfg),
        check_period(cfg),
        check_parity(cfg),
    ]);
    out
}

/// The check each fault is aimed at.
pub fn target_of(fault: Fault) -> &'static str {
    match fault {
        Fault::CommutatorSign => "fock.commutator_h",
        Fault::LadderShift => "fock.commutator_ladders",
        Fault::NumberRoot => "fock.number_analogue",
        Fault::LadderLabel => "fock.ladders",
        Fault::PivSign => "piv.parameters",
        Fault::PivOffset => "piv.residuals",
        Fault::FdStep => "piv.finite_difference",
        Fault::EigenTruncation => "cs.eigen_residual",
        Fault::MinimaOffset => "cs.minima",
        Fault::SeriesBranch => "cs.statistics",
        Fault::EvolutionPhase => "cs.evolution",
        Fault::TriangleWeight => "cs.triangle",
        Fault::PartitionDrop => "cs.partition",
        Fault::HermiteNorm => "wave.hermite",
        Fault::DualPathRotation => "wave.dual_path",
        Fault::NormalizationDenominator => "wave.normalization",
        Fault::PeriodSixth => "wave.period",
        Fault::ParityReflection => "wave.half_period_parity",
    }
}
