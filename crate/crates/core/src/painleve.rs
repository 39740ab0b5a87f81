//! Painlevé IV solutions generated by the oscillator extremal states.
//!
//! The equation is
//!
//! ```text
//! g'' = (g')^2 / (2g) + (3/2) g^3 + 4 y g^2 + 2 (y^2 - a) g + b / g
//! ```
//!
//! and each extremal state `phi(y) = P(y) exp(-y^2/6)` (with `y = sqrt(3) x`)
//! yields the solution `g = -y - (ln phi)' = -2y/3 - P'/P`. Solutions are
//! therefore stored as `slope * y + offset - P'(y)/P(y)` with `P` at most
//! quadratic, which makes every derivative available in closed form.

use std::fmt;

use crate::error::{Error, Result};
use crate::fock::LadderIndex;
use crate::grid::Grid1;

/// Default exclusion radius around poles of `g`.
pub const DEFAULT_DELTA: f64 = 0.1;

/// Below this `|g|` the scan evaluates the residual as a symmetric limit.
pub const REMOVABLE_G: f64 = 1e-6;

/// Half-width used for the symmetric limit at zeros of `g`.
pub const LIMIT_HALF_WIDTH: f64 = 1e-3;

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Small exact fraction, used for the PIV parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fraction {
    pub num: i64,
    pub den: i64,
}

impl Fraction {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        let g = gcd(num, den).max(1);
        let sign = if den < 0 { -1 } else { 1 };
        Self { num: sign * num / g, den: sign * den / g }
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Which extremal state plays the role of `phi_1`, and the order of the
/// other two.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExtremalSeed {
    ordering: [LadderIndex; 3],
}

impl ExtremalSeed {
    /// `ordering` lists extremal labels (`1, 2, 3`); the first one is `phi_1`.
    pub fn new(ordering: [u8; 3]) -> Result<Self> {
        let mut seen = [false; 3];
        for &j in &ordering {
            if !(1..=3).contains(&j) || seen[(j - 1) as usize] {
                return Err(Error::InvalidOrdering(ordering));
            }
            seen[(j - 1) as usize] = true;
        }
        let [a, b, c] = ordering;
        Ok(Self {
            ordering: [LadderIndex::extremal(a)?, LadderIndex::extremal(b)?, LadderIndex::extremal(c)?],
        })
    }

    /// The three orderings giving the three distinct solutions: each
    /// extremal state in turn as `phi_1`, the others in ascending order.
    pub fn standard() -> [ExtremalSeed; 3] {
        [[1, 2, 3], [2, 1, 3], [3, 1, 2]].map(|o| Self::new(o).expect("valid permutation"))
    }

    pub fn ordering(&self) -> [u8; 3] {
        self.ordering.map(|l| l.extremal_label())
    }

    pub fn first(&self) -> LadderIndex {
        self.ordering[0]
    }

    /// Same seed with the second and third labels exchanged; `b` is
    /// unchanged by this swap and so is `a`.
    pub fn swapped_tail(&self) -> Self {
        let [a, b, c] = self.ordering;
        Self { ordering: [a, c, b] }
    }

    /// `E_j / 3` for the seed's ordering, as sixths: `6 E~_j = 2j - 1`.
    fn sixths(&self) -> [i64; 3] {
        self.ordering.map(|l| 2 * l.extremal_label() as i64 - 1)
    }

    /// Scaled energies `E~_j = E_j / 3`, in the seed's ordering.
    pub fn energies_tilde(&self) -> [f64; 3] {
        self.sixths().map(|s| s as f64 / 6.0)
    }
}

/// Sign of the `E~_1` term in `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ParameterSign {
    /// `a = E~_2 + E~_3 - 2 E~_1 - 1`; reproduces the three tabulated pairs.
    #[default]
    Consistent,
    /// `a = E~_2 + E~_3 + 2 E~_1 - 1` as typeset in the source; kept as a probe.
    AsPrinted,
}

/// Exact `(a, b)` for a seed.
pub fn piv_parameters_exact(seed: &ExtremalSeed, sign: ParameterSign) -> (Fraction, Fraction) {
    let [e1, e2, e3] = seed.sixths();
    let first = match sign {
        ParameterSign::Consistent => -2 * e1,
        ParameterSign::AsPrinted => 2 * e1,
    };
    let a = Fraction::new(e2 + e3 + first - 6, 6);
    // b = -2 ((e2 - e3)/6)^2
    let d = e2 - e3;
    let b = Fraction::new(-2 * d * d, 36);
    (a, b)
}

/// `(a, b)` for a seed, with the consistent sign.
pub fn piv_parameters(seed: &ExtremalSeed) -> (f64, f64) {
    let (a, b) = piv_parameters_exact(seed, ParameterSign::Consistent);
    (a.to_f64(), b.to_f64())
}

/// A closed-form PIV candidate `g(y) = slope*y + offset - P'(y)/P(y)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PivSolution {
    slope: f64,
    offset: f64,
    poly: [f64; 3],
    a: f64,
    b: f64,
    singularities: Vec<f64>,
}

fn real_roots(poly: [f64; 3]) -> Vec<f64> {
    let [c0, c1, c2] = poly;
    let mut roots = if c2 != 0.0 {
        let disc = c1 * c1 - 4.0 * c2 * c0;
        if disc < 0.0 {
            vec![]
        } else if disc == 0.0 {
            vec![-c1 / (2.0 * c2)]
        } else {
            let sgn = if c1 >= 0.0 { 1.0 } else { -1.0 };
            let q = -0.5 * (c1 + sgn * disc.sqrt());
            vec![q / c2, c0 / q]
        }
    } else if c1 != 0.0 {
        vec![-c0 / c1]
    } else {
        vec![]
    };
    roots.sort_by(f64::total_cmp);
    roots
}

impl PivSolution {
    /// `poly` holds ascending coefficients of `P`; it must not vanish identically.
    pub fn new(slope: f64, offset: f64, poly: [f64; 3], a: f64, b: f64) -> Self {
        assert!(poly.iter().any(|&c| c != 0.0), "P must not vanish identically");
        Self { slope, offset, poly, a, b, singularities: real_roots(poly) }
    }

    /// Same function shifted by a constant; for residual-sensitivity probes.
    pub fn with_offset(&self, offset: f64) -> Self {
        Self { offset, ..self.clone() }
    }

    pub fn with_parameters(&self, a: f64, b: f64) -> Self {
        Self { a, b, ..self.clone() }
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn singularities(&self) -> &[f64] {
        &self.singularities
    }

    fn poly_derivs(&self, y: f64) -> (f64, f64, f64) {
        let [c0, c1, c2] = self.poly;
        (c0 + y * (c1 + y * c2), c1 + 2.0 * c2 * y, 2.0 * c2)
    }

    /// `q = P'/P` and its first two derivatives.
    fn log_derivs(&self, y: f64) -> (f64, f64, f64) {
        let (p, dp, ddp) = self.poly_derivs(y);
        let q = dp / p;
        let r = ddp / p;
        (q, r - q * q, -3.0 * q * r + 2.0 * q * q * q)
    }

    pub fn g(&self, y: f64) -> f64 {
        self.slope * y + self.offset - self.log_derivs(y).0
    }

    pub fn g_prime(&self, y: f64) -> f64 {
        self.slope - self.log_derivs(y).1
    }

    pub fn g_double_prime(&self, y: f64) -> f64 {
        -self.log_derivs(y).2
    }

    /// Nearest pole within `delta` of `y`, if any.
    pub fn nearby_singularity(&self, y: f64, delta: f64) -> Option<f64> {
        self.singularities.iter().copied().find(|p| (y - p).abs() < delta)
    }
}

/// The solution obtained by taking `seed.first()` as `phi_1`.
pub fn solution_from_extremal(seed: &ExtremalSeed) -> PivSolution {
    let (a, b) = piv_parameters(seed);
    PivSolution::new(-2.0 / 3.0, 0.0, extremal_polynomial(seed.first()), a, b)
}

/// Polynomial part of the extremal state `H_k(y / sqrt 3)`, `k = j - 1`,
/// as ascending coefficients in `y`.
pub fn extremal_polynomial(ladder: LadderIndex) -> [f64; 3] {
    let s = 1.0 / 3f64.sqrt();
    match ladder.residue() {
        0 => [1.0, 0.0, 0.0],
        1 => [0.0, 2.0 * s, 0.0],
        _ => [-2.0, 0.0, 4.0 * s * s],
    }
}

/// How `g'` and `g''` are obtained when evaluating the residual.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum Derivatives {
    #[default]
    Analytic,
    /// Five-point central differences with the given step.
    FiniteDifference(f64),
}

fn derivatives(sol: &PivSolution, y: f64, mode: Derivatives) -> (f64, f64) {
    match mode {
        Derivatives::Analytic => (sol.g_prime(y), sol.g_double_prime(y)),
        Derivatives::FiniteDifference(h) => {
            let gm2 = sol.g(y - 2.0 * h);
            let gm1 = sol.g(y - h);
            let g0 = sol.g(y);
            let gp1 = sol.g(y + h);
            let gp2 = sol.g(y + 2.0 * h);
            let d1 = (gm2 - 8.0 * gm1 + 8.0 * gp1 - gp2) / (12.0 * h);
            let d2 = (-gm2 + 16.0 * gm1 - 30.0 * g0 + 16.0 * gp1 - gp2) / (12.0 * h * h);
            (d1, d2)
        }
    }
}

fn residual_unchecked(sol: &PivSolution, y: f64, mode: Derivatives) -> f64 {
    let g = sol.g(y);
    let (dg, ddg) = derivatives(sol, y, mode);
    // the two 1/g terms are combined before dividing
    let inv_terms = (0.5 * dg * dg + sol.b) / g;
    let poly_terms = g * (1.5 * g * g + 4.0 * y * g + 2.0 * (y * y - sol.a));
    ddg - (inv_terms + poly_terms)
}

/// `g'' - [(g')^2/(2g) + (3/2)g^3 + 4yg^2 + 2(y^2 - a)g + b/g]` at `y`.
pub fn piv_residual(sol: &PivSolution, y: f64) -> Result<f64> {
    piv_residual_with(sol, y, DEFAULT_DELTA, Derivatives::Analytic)
}

pub fn piv_residual_with(sol: &PivSolution, y: f64, delta: f64, mode: Derivatives) -> Result<f64> {
    if let Some(pole) = sol.nearby_singularity(y, delta) {
        return Err(Error::SingularPoint { y, pole, delta });
    }
    if sol.g(y) == 0.0 {
        return Err(Error::DivisionByZero { y });
    }
    Ok(residual_unchecked(sol, y, mode))
}

/// Symmetric limit `(R(y - h) + R(y + h)) / 2`, for points where `g`
/// vanishes and the residual has a removable singularity.
pub fn piv_residual_limit(sol: &PivSolution, y: f64, half_width: f64, mode: Derivatives) -> f64 {
    0.5 * (residual_unchecked(sol, y - half_width, mode) + residual_unchecked(sol, y + half_width, mode))
}

/// One sample of a residual scan. `residual` is `None` inside an excluded
/// neighbourhood of a pole.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanPoint {
    pub y: f64,
    pub g: f64,
    pub residual: Option<f64>,
}

impl ScanPoint {
    pub fn excluded(&self) -> bool {
        self.residual.is_none()
    }
}

/// Residuals on every grid point outside the `delta` neighbourhoods of the
/// poles of `g`. Zeros of `g` are handled with [`piv_residual_limit`].
pub fn residual_scan(sol: &PivSolution, grid: &Grid1, delta: f64, mode: Derivatives) -> Result<Vec<ScanPoint>> {
    grid.validate()?;
    Ok(grid
        .iter()
        .map(|y| {
            let g = sol.g(y);
            let residual = if sol.nearby_singularity(y, delta).is_some() {
                None
            } else if g.abs() < REMOVABLE_G {
                Some(piv_residual_limit(sol, y, LIMIT_HALF_WIDTH, mode))
            } else {
                Some(residual_unchecked(sol, y, mode))
            };
            ScanPoint { y, g, residual }
        })
        .collect())
}

/// Largest `|residual|` over the non-excluded points of a scan.
pub fn max_abs_residual(scan: &[ScanPoint]) -> f64 {
    scan.iter().filter_map(|p| p.residual).map(f64::abs).fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;

    // Closed forms as tabulated, used as the oracle for the generated solutions.
    fn tabulated(id: usize, y: f64) -> f64 {
        match id {
            0 => -2.0 * y / 3.0,
            1 => -2.0 * y / 3.0 - 1.0 / y,
            _ => -2.0 * y / 3.0 - 4.0 * y / (2.0 * y * y - 3.0),
        }
    }

    #[test]
    fn parameter_table_is_exact() {
        let expected = [
            (Fraction::new(0, 1), Fraction::new(-2, 9)),
            (Fraction::new(-1, 1), Fraction::new(-8, 9)),
            (Fraction::new(-2, 1), Fraction::new(-2, 9)),
        ];
        for (seed, want) in ExtremalSeed::standard().iter().zip(expected) {
            assert_eq!(piv_parameters_exact(seed, ParameterSign::Consistent), want);
        }
        let (a, b) = piv_parameters(&ExtremalSeed::new([2, 1, 3]).unwrap());
        assert_eq!((a, b), (-1.0, -8.0 / 9.0));
    }

    #[test]
    fn printed_sign_disagrees_for_ground_state() {
        let seed = ExtremalSeed::new([1, 2, 3]).unwrap();
        let (a, _) = piv_parameters_exact(&seed, ParameterSign::AsPrinted);
        assert_eq!(a, Fraction::new(2, 3));
    }

    #[test]
    fn tail_swap_leaves_parameters() {
        for seed in ExtremalSeed::standard() {
            assert_eq!(piv_parameters(&seed), piv_parameters(&seed.swapped_tail()));
        }
    }

    #[test]
    fn seed_validation() {
        assert!(ExtremalSeed::new([1, 1, 2]).is_err());
        assert!(ExtremalSeed::new([0, 1, 2]).is_err());
        let seed = ExtremalSeed::new([3, 1, 2]).unwrap();
        assert_eq!(seed.energies_tilde(), [5.0 / 6.0, 1.0 / 6.0, 0.5]);
    }

    #[test]
    fn generated_solutions_match_closed_forms() {
        for (id, seed) in ExtremalSeed::standard().iter().enumerate() {
            let sol = solution_from_extremal(seed);
            for k in -40..=40 {
                let y = 0.25 * k as f64 + 0.01;
                let want = tabulated(id, y);
                assert!((sol.g(y) - want).abs() <= 1e-12 * want.abs().max(1.0), "id {id} y {y}");
            }
        }
    }

    #[test]
    fn singularity_sets() {
        let sols: Vec<_> = ExtremalSeed::standard().iter().map(solution_from_extremal).collect();
        assert!(sols[0].singularities().is_empty());
        assert_eq!(sols[1].singularities(), &[0.0]);
        let r = 1.5f64.sqrt();
        let s = sols[2].singularities();
        assert_eq!(s.len(), 2);
        assert!((s[0] + r).abs() < 1e-15 && (s[1] - r).abs() < 1e-15);
    }

    #[test]
    fn residual_examples() {
        let sols: Vec<_> = ExtremalSeed::standard().iter().map(solution_from_extremal).collect();
        assert!(piv_residual(&sols[0], 1.0).unwrap().abs() < 1e-12);
        assert!(piv_residual(&sols[1], 2.0).unwrap().abs() < 1e-12);
        assert_eq!(piv_residual(&sols[0], 0.0), Err(Error::DivisionByZero { y: 0.0 }));
        assert!(piv_residual_limit(&sols[0], 0.0, 1e-3, Derivatives::Analytic).abs() < 1e-12);
        assert!(matches!(piv_residual(&sols[1], 0.05), Err(Error::SingularPoint { .. })));
    }

    #[test]
    fn scan_examples() {
        let grid = Grid1::with_step(-5.0, 5.0, 0.01).unwrap();
        let sols: Vec<_> = ExtremalSeed::standard().iter().map(solution_from_extremal).collect();
        let scan = residual_scan(&sols[0], &grid, DEFAULT_DELTA, Derivatives::Analytic).unwrap();
        assert!(scan.iter().all(|p| !p.excluded()));
        assert!(max_abs_residual(&scan) < 1e-10);

        let scan = residual_scan(&sols[2], &grid, DEFAULT_DELTA, Derivatives::Analytic).unwrap();
        for p in &scan {
            let near = sols[2].singularities().iter().any(|s| (p.y - s).abs() < DEFAULT_DELTA);
            assert_eq!(p.excluded(), near, "y = {}", p.y);
        }

        let perturbed = sols[0].with_offset(0.01);
        let scan = residual_scan(&perturbed, &grid, DEFAULT_DELTA, Derivatives::Analytic).unwrap();
        assert!(max_abs_residual(&scan) > 1e-3);
    }

    #[test]
    fn hand_cancellation_at_origin() {
        // For g = -2y/3 the cubic terms cancel identically and the two 1/g
        // terms are -1/(3y) and +1/(3y).
        let y: f64 = 0.37;
        let g = -2.0 * y / 3.0;
        let cubic = 1.5 * g.powi(3) + 4.0 * y * g * g + 2.0 * y * y * g;
        assert!(cubic.abs() < 1e-15);
        let inv = (4.0 / 9.0) / (2.0 * g) + (-2.0 / 9.0) / g;
        assert!(inv.abs() < 1e-15);
    }

    #[test]
    fn root_finder() {
        assert_eq!(real_roots([1.0, 0.0, 1.0]), Vec::<f64>::new());
        assert_eq!(real_roots([-6.0, 1.0, 1.0]), vec![-3.0, 2.0]);
        assert_eq!(real_roots([2.0, 4.0, 0.0]), vec![-0.5]);
        assert_eq!(real_roots([1.0, 0.0, 0.0]), Vec::<f64>::new());
    }
}
