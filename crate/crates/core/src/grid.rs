//! Uniform sampling descriptors.

use crate::error::{Error, Result};

/// Uniform 1-D grid of `points` samples from `min` to `max` inclusive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid1 {
    pub min: f64,
    pub max: f64,
    pub points: usize,
}

impl Grid1 {
    pub fn new(min: f64, max: f64, points: usize) -> Result<Self> {
        let g = Self { min, max, points };
        g.validate()?;
        Ok(g)
    }

    /// Grid with spacing `step`; `max` is rounded to the nearest whole step.
    pub fn with_step(min: f64, max: f64, step: f64) -> Result<Self> {
        if !(step > 0.0) || !step.is_finite() {
            return Err(Error::InvalidGrid(format!("step must be positive, got {step}")));
        }
        let intervals = ((max - min) / step).round();
        if !(intervals >= 0.0) {
            return Err(Error::InvalidGrid(format!("empty range [{min}, {max}]")));
        }
        Self::new(min, min + intervals * step, intervals as usize + 1)
    }

    pub fn validate(&self) -> Result<()> {
        if self.points == 0 {
            return Err(Error::InvalidGrid("grid has no points".into()));
        }
        if !self.min.is_finite() || !self.max.is_finite() {
            return Err(Error::InvalidGrid("grid bounds must be finite".into()));
        }
        if self.max < self.min {
            return Err(Error::InvalidGrid(format!("min {} exceeds max {}", self.min, self.max)));
        }
        Ok(())
    }

    pub fn step(&self) -> f64 {
        if self.points > 1 {
            (self.max - self.min) / (self.points - 1) as f64
        } else {
            0.0
        }
    }

    /// Sample `i`, computed as `min + i * step` so that integer multiples of
    /// a decimal step land where a hand-written loop would put them.
    pub fn point(&self, i: usize) -> f64 {
        if i + 1 == self.points && self.points > 1 {
            self.max
        } else {
            self.min + i as f64 * self.step()
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.points).map(|i| self.point(i))
    }
}

/// Space-time sampling for density fields. `*_steps` counts samples.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub x_min: f64,
    pub x_max: f64,
    pub x_steps: usize,
    pub t_min: f64,
    pub t_max: f64,
    pub t_steps: usize,
}

impl Default for GridSpec {
    /// `x` in `[-8, 8]` with 401 samples, `t` in `[0, 2 pi]` with 241 samples.
    fn default() -> Self {
        Self {
            x_min: -8.0,
            x_max: 8.0,
            x_steps: 401,
            t_min: 0.0,
            t_max: 2.0 * std::f64::consts::PI,
            t_steps: 241,
        }
    }
}

impl GridSpec {
    pub fn validate(&self) -> Result<()> {
        if !(self.x_min < self.x_max) {
            return Err(Error::InvalidGrid(format!(
                "x_min {} must be below x_max {}",
                self.x_min, self.x_max
            )));
        }
        if !(self.t_min <= self.t_max) {
            return Err(Error::InvalidGrid(format!(
                "t_min {} must not exceed t_max {}",
                self.t_min, self.t_max
            )));
        }
        if self.x_steps == 0 || self.t_steps == 0 {
            return Err(Error::InvalidGrid("step counts must be at least 1".into()));
        }
        self.x_grid().validate()?;
        self.t_grid().validate()
    }

    pub fn x_grid(&self) -> Grid1 {
        Grid1 { min: self.x_min, max: self.x_max, points: self.x_steps }
    }

    pub fn t_grid(&self) -> Grid1 {
        Grid1 { min: self.t_min, max: self.t_max, points: self.t_steps }
    }
}
