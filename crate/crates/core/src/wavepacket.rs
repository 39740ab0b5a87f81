//! Position-space densities of the evolving ladder coherent states.
//!
//! Two independent routes give `rho(x, t)`:
//!
//! * [`FockPacket`] sums `c_n(t) psi_n(x)` over the truncated Fock expansion,
//!   with Hermite functions from the normalized three-term recurrence;
//! * [`GaussianPacket`] superposes the three Gaussian standard-state wave
//!   functions at the triangle labels `z_k exp(-it)`, with no truncation.

use std::f64::consts::PI;

use ndarray::Array2;
use num_complex::Complex64 as C64;

use crate::coherent::{build_cs, evolve, triangle_decompose, CoherentSpec, TriangleDecomposition};
use crate::error::{Error, Result};
use crate::fock::LadderIndex;
use crate::grid::GridSpec;
use crate::series::mod3_series;

/// Fundamental period of every ladder density.
pub const DEFORMED_PERIOD: f64 = 2.0 * PI / 3.0;

/// Default triangle size used for figure data.
pub const DEFAULT_Z: f64 = 2.0;

/// `psi_n(x) = pi^{-1/4} (2^n n!)^{-1/2} H_n(x) exp(-x^2/2)`.
pub fn hermite_function(n: i64, x: f64) -> Result<f64> {
    if n < 0 {
        return Err(Error::Domain(n));
    }
    Ok(*hermite_functions(n as usize, x).last().expect("at least psi_0"))
}

/// `psi_0(x) .. psi_{n_max}(x)` by
/// `psi_{n+1} = sqrt(2/(n+1)) x psi_n - sqrt(n/(n+1)) psi_{n-1}`.
pub fn hermite_functions(n_max: usize, x: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(PI.powf(-0.25) * (-0.5 * x * x).exp());
    if n_max >= 1 {
        out.push(2f64.sqrt() * x * out[0]);
    }
    for n in 1..n_max {
        let nf = n as f64;
        let next = (2.0 / (nf + 1.0)).sqrt() * x * out[n] - (nf / (nf + 1.0)).sqrt() * out[n - 1];
        out.push(next);
    }
    out
}

/// Which of the two routes produced a density.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DensityPath {
    Fock,
    Gaussian,
}

/// Fock-sum evaluation of a ladder coherent state and its evolution.
#[derive(Debug, Clone)]
pub struct FockPacket {
    spec: CoherentSpec,
}

impl FockPacket {
    /// Packet for `|z>_j`, i.e. `alpha = z^3`, with the automatic truncation.
    pub fn new(ladder: LadderIndex, z: C64) -> Result<Self> {
        Self::from_spec(CoherentSpec::new(ladder, z * z * z)?)
    }

    pub fn from_spec(spec: CoherentSpec) -> Result<Self> {
        build_cs(&spec)?;
        Ok(Self { spec })
    }

    pub fn spec(&self) -> &CoherentSpec {
        &self.spec
    }

    /// Fock coefficients at time `t`, global phase included.
    pub fn coefficients(&self, t: f64) -> Result<Vec<C64>> {
        let (phase, evolved) = evolve(&self.spec, t);
        Ok(build_cs(&evolved)?.coeffs().iter().map(|c| c * phase).collect())
    }

    fn amplitude_with(coeffs: &[C64], hermite: &[f64], residue: usize) -> C64 {
        coeffs
            .iter()
            .zip(hermite)
            .skip(residue)
            .step_by(3)
            .map(|(c, h)| c * *h)
            .sum()
    }

    pub fn amplitude(&self, x: f64, t: f64) -> Result<C64> {
        let coeffs = self.coefficients(t)?;
        let h = hermite_functions(coeffs.len().saturating_sub(1), x);
        Ok(Self::amplitude_with(&coeffs, &h, self.spec.ladder.residue() as usize))
    }

    pub fn density(&self, x: f64, t: f64) -> Result<f64> {
        Ok(self.amplitude(x, t)?.norm_sqr())
    }

    pub fn field(&self, grid: &GridSpec) -> Result<DensityField> {
        grid.validate()?;
        let xs: Vec<f64> = grid.x_grid().iter().collect();
        let n = self.spec.truncation;
        let residue = self.spec.ladder.residue() as usize;
        let table: Vec<Vec<f64>> = xs.iter().map(|&x| hermite_functions(n.saturating_sub(1), x)).collect();
        let mut values = Array2::zeros((grid.t_steps, grid.x_steps));
        for (it, t) in grid.t_grid().iter().enumerate() {
            let coeffs = self.coefficients(t)?;
            for (ix, h) in table.iter().enumerate() {
                values[(it, ix)] = Self::amplitude_with(&coeffs, h, residue).norm_sqr();
            }
        }
        Ok(DensityField { grid: *grid, values, path: DensityPath::Fock })
    }
}

/// `sum_{n = j mod 3} s^n / n!` in closed form,
/// `(1/3) sum_k w^{-jk} exp(w^k s)`, for `s >= 1`; below that the
/// exponentials cancel badly and the series is used instead.
pub fn ladder_exponential(ladder: LadderIndex, s: f64) -> f64 {
    let j = ladder.residue() as i32;
    if s >= 1.0 {
        (0..3)
            .map(|k| {
                let w = C64::from_polar(1.0, 2.0 * PI * k as f64 / 3.0);
                C64::from_polar(1.0, -2.0 * PI * (j * k) as f64 / 3.0) * (w * s).exp()
            })
            .sum::<C64>()
            .re
            / 3.0
    } else {
        s.powi(j) * mod3_series(j as u32, s * s * s)
    }
}

/// Closed-form superposition of three Gaussian wave functions.
#[derive(Debug, Clone)]
pub struct GaussianPacket {
    decomposition: TriangleDecomposition,
    norm_sqr: f64,
}

/// `<x|z>` for the non-normalized standard state `sum z^n/sqrt(n!) |n>`.
pub fn standard_wavefunction(z: C64, x: f64) -> C64 {
    let exponent = C64::new(-0.5 * x * x, 0.0) + z * (2f64.sqrt() * x) - 0.5 * z * z;
    PI.powf(-0.25) * exponent.exp()
}

impl GaussianPacket {
    pub fn new(ladder: LadderIndex, z: C64) -> Result<Self> {
        let norm_sqr = ladder_exponential(ladder, z.norm_sqr());
        if !(norm_sqr > 0.0) {
            return Err(Error::DegenerateState { j: ladder.residue() });
        }
        Ok(Self { decomposition: triangle_decompose(z, ladder), norm_sqr })
    }

    pub fn decomposition(&self) -> &TriangleDecomposition {
        &self.decomposition
    }

    /// Normalized amplitude at time `t`, without the global phase
    /// `exp(-it/2)`.
    pub fn amplitude(&self, x: f64, t: f64) -> C64 {
        let rot = C64::from_polar(1.0, -t);
        let d = &self.decomposition;
        let sum: C64 = d
            .weights
            .iter()
            .zip(d.labels)
            .map(|(w, label)| w * standard_wavefunction(label * rot, x))
            .sum();
        sum / self.norm_sqr.sqrt()
    }

    pub fn density(&self, x: f64, t: f64) -> f64 {
        self.amplitude(x, t).norm_sqr()
    }

    pub fn field(&self, grid: &GridSpec) -> Result<DensityField> {
        grid.validate()?;
        let xs: Vec<f64> = grid.x_grid().iter().collect();
        let mut values = Array2::zeros((grid.t_steps, grid.x_steps));
        for (it, t) in grid.t_grid().iter().enumerate() {
            for (ix, &x) in xs.iter().enumerate() {
                values[(it, ix)] = self.density(x, t);
            }
        }
        Ok(DensityField { grid: *grid, values, path: DensityPath::Gaussian })
    }
}

/// Sampled `rho(x_i, t_k)`, stored with time as the row index.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityField {
    pub grid: GridSpec,
    pub values: Array2<f64>,
    pub path: DensityPath,
}

impl DensityField {
    /// Trapezoid integral over `x` of time slice `it`.
    pub fn slice_integral(&self, it: usize) -> f64 {
        let dx = self.grid.x_grid().step();
        let row = self.values.row(it);
        let n = row.len();
        if n < 2 {
            return 0.0;
        }
        dx * (row.iter().sum::<f64>() - 0.5 * (row[0] + row[n - 1]))
    }

    /// Worst deviation of any slice integral from 1.
    pub fn max_normalization_error(&self) -> f64 {
        (0..self.grid.t_steps).map(|it| (self.slice_integral(it) - 1.0).abs()).fold(0.0, f64::max)
    }

    pub fn min_value(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max_abs_diff(&self, other: &DensityField) -> f64 {
        self.values.iter().zip(other.values.iter()).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
    }

    /// `(t, x, rho)` rows, time-major.
    pub fn rows(&self) -> impl Iterator<Item = (f64, f64, f64)> + '_ {
        let ts: Vec<f64> = self.grid.t_grid().iter().collect();
        let xs: Vec<f64> = self.grid.x_grid().iter().collect();
        self.values.indexed_iter().map(move |((it, ix), &v)| (ts[it], xs[ix], v))
    }
}

/// `rho` on the Fock route.
pub fn density_fock(ladder: LadderIndex, z: C64, grid: &GridSpec) -> Result<DensityField> {
    FockPacket::new(ladder, z)?.field(grid)
}

/// `rho` on the Gaussian route.
pub fn density_gaussian(ladder: LadderIndex, z: C64, grid: &GridSpec) -> Result<DensityField> {
    GaussianPacket::new(ladder, z)?.field(grid)
}

/// `max |rho(x, t + shift) - rho(x, t)|` over the grid, on the Fock route.
pub fn shift_check(ladder: LadderIndex, z: C64, grid: &GridSpec, shift: f64) -> Result<f64> {
    grid.validate()?;
    let packet = FockPacket::new(ladder, z)?;
    let mut worst: f64 = 0.0;
    for t in grid.t_grid().iter() {
        let now = packet.coefficients(t)?;
        let later = packet.coefficients(t + shift)?;
        let residue = ladder.residue() as usize;
        for x in grid.x_grid().iter() {
            let h = hermite_functions(now.len().saturating_sub(1), x);
            let a = FockPacket::amplitude_with(&now, &h, residue).norm_sqr();
            let b = FockPacket::amplitude_with(&later, &h, residue).norm_sqr();
            worst = worst.max((a - b).abs());
        }
    }
    Ok(worst)
}

/// [`shift_check`] at the deformed period `2 pi / 3`.
pub fn period_check(ladder: LadderIndex, z: C64, grid: &GridSpec) -> Result<f64> {
    shift_check(ladder, z, grid, DEFORMED_PERIOD)
}

/// `max |rho(x, t + pi/3) - rho(-x, t)|`: half a deformed period maps the
/// state onto its parity image.
pub fn half_period_parity_check(ladder: LadderIndex, z: C64, grid: &GridSpec) -> Result<f64> {
    grid.validate()?;
    let packet = FockPacket::new(ladder, z)?;
    let mut worst: f64 = 0.0;
    for t in grid.t_grid().iter() {
        for x in grid.x_grid().iter() {
            let a = packet.density(x, t + PI / 3.0)?;
            let b = packet.density(-x, t)?;
            worst = worst.max((a - b).abs());
        }
    }
    Ok(worst)
}
