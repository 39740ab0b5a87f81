//! Truncated Fock-space linear algebra for the oscillator and its cubed
//! ladder operators.
//!
//! Units are `hbar = m = omega = 1`, with `x = (a + a+)/sqrt(2)` and
//! `p = i(a+ - a)/sqrt(2)`. Operators are stored densely; the truncations
//! used here are at most a few hundred states.

use std::fmt;

use ndarray::{s, Array1, Array2};
use num_complex::Complex64 as C64;

use crate::error::{Error, Result};

/// Smallest truncation for which `a^3` is not identically zero.
pub const MIN_DEFORMED_TRUNCATION: usize = 4;

/// Ladder step of the deformed operators.
pub const LADDER_STEP: usize = 3;

/// Which of the two ladder labelings a [`LadderIndex`] was created from.
///
/// Extremal labels run over `1, 2, 3` and name the extremal states
/// `|0>, |1>, |2>`; coherent-state labels run over `0, 1, 2` and name the
/// residue of the Fock number modulo 3. The two are related by
/// `coherent = extremal - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Labeling {
    Extremal,
    Coherent,
}

/// One of the three invariant subspaces of `a^3`, tagged with the labeling
/// it was given in.
#[derive(Debug, Clone, Copy, Eq)]
pub struct LadderIndex {
    residue: u8,
    labeling: Labeling,
}

impl LadderIndex {
    /// All three ladders, in residue order.
    pub const ALL: [LadderIndex; 3] = [
        LadderIndex { residue: 0, labeling: Labeling::Coherent },
        LadderIndex { residue: 1, labeling: Labeling::Coherent },
        LadderIndex { residue: 2, labeling: Labeling::Coherent },
    ];

    /// Ladder seeded by the extremal state with label `j` in `{1, 2, 3}`.
    pub fn extremal(j: u8) -> Result<Self> {
        if (1..=3).contains(&j) {
            Ok(Self { residue: j - 1, labeling: Labeling::Extremal })
        } else {
            Err(Error::InvalidLadder { label: j, convention: "extremal (1..=3)" })
        }
    }

    /// Ladder `j` in `{0, 1, 2}` of the coherent-state labeling.
    pub fn coherent(j: u8) -> Result<Self> {
        if j <= 2 {
            Ok(Self { residue: j, labeling: Labeling::Coherent })
        } else {
            Err(Error::InvalidLadder { label: j, convention: "coherent (0..=2)" })
        }
    }

    /// Fock numbers on this ladder are `3n + residue()`.
    pub fn residue(self) -> u8 {
        self.residue
    }

    pub fn coherent_label(self) -> u8 {
        self.residue
    }

    pub fn extremal_label(self) -> u8 {
        self.residue + 1
    }

    pub fn labeling(self) -> Labeling {
        self.labeling
    }

    /// Energy of the extremal state, `E_j = j - 1/2` in the extremal labeling.
    pub fn extremal_energy(self) -> f64 {
        self.residue as f64 + 0.5
    }

    /// Fock number of rung `n`.
    pub fn fock_number(self, rung: usize) -> usize {
        LADDER_STEP * rung + self.residue as usize
    }
}

impl PartialEq for LadderIndex {
    fn eq(&self, other: &Self) -> bool {
        self.residue == other.residue
    }
}

impl std::hash::Hash for LadderIndex {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.residue.hash(state);
    }
}

impl fmt::Display for LadderIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.labeling {
            Labeling::Extremal => write!(f, "extremal j={}", self.extremal_label()),
            Labeling::Coherent => write!(f, "j={}", self.coherent_label()),
        }
    }
}

fn check_truncation(n: usize, min: usize) -> Result<()> {
    if n < min {
        Err(Error::InvalidTruncation { got: n, min })
    } else {
        Ok(())
    }
}

/// State vector over the truncated number basis `|0> .. |N-1>`.
#[derive(Debug, Clone, PartialEq)]
pub struct FockVector {
    coeffs: Array1<C64>,
}

impl FockVector {
    pub fn zeros(truncation: usize) -> Self {
        Self { coeffs: Array1::zeros(truncation) }
    }

    /// Unit vector `|k>`.
    pub fn basis(truncation: usize, k: usize) -> Result<Self> {
        if k >= truncation {
            return Err(Error::OutOfRange { index: k, truncation });
        }
        let mut v = Self::zeros(truncation);
        v.coeffs[k] = C64::new(1.0, 0.0);
        Ok(v)
    }

    pub fn from_coeffs(coeffs: Vec<C64>) -> Self {
        Self { coeffs: Array1::from(coeffs) }
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[C64] {
        self.coeffs.as_slice().expect("contiguous")
    }

    pub fn coeffs_mut(&mut self) -> &mut [C64] {
        self.coeffs.as_slice_mut().expect("contiguous")
    }

    pub fn as_array(&self) -> &Array1<C64> {
        &self.coeffs
    }

    pub fn norm_sqr(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn normalized(&self) -> Self {
        let n = self.norm();
        Self { coeffs: self.coeffs.mapv(|c| c / n) }
    }

    /// `<self|other>`, antilinear in `self`.
    pub fn inner(&self, other: &FockVector) -> Result<C64> {
        if self.truncation() != other.truncation() {
            return Err(Error::ShapeMismatch { left: self.truncation(), right: other.truncation() });
        }
        Ok(self.coeffs.iter().zip(other.coeffs.iter()).map(|(a, b)| a.conj() * b).sum())
    }

    /// Copy into a larger space, padding with zeros, or cut down to a smaller one.
    pub fn resized(&self, truncation: usize) -> Self {
        let mut v = Self::zeros(truncation);
        let m = truncation.min(self.truncation());
        v.coeffs.slice_mut(s![..m]).assign(&self.coeffs.slice(s![..m]));
        v
    }

    pub fn scaled(&self, factor: C64) -> Self {
        Self { coeffs: self.coeffs.mapv(|c| c * factor) }
    }

    /// Largest coefficientwise distance to `other`.
    pub fn max_abs_diff(&self, other: &FockVector) -> Result<f64> {
        if self.truncation() != other.truncation() {
            return Err(Error::ShapeMismatch { left: self.truncation(), right: other.truncation() });
        }
        Ok(self
            .coeffs
            .iter()
            .zip(other.coeffs.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    /// True when every coefficient off the given ladder is exactly zero.
    pub fn is_on_ladder(&self, ladder: LadderIndex) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(n, c)| n % LADDER_STEP == ladder.residue() as usize || *c == C64::new(0.0, 0.0))
    }
}

/// Lower/upper bandwidth annotation of a banded operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Band {
    pub lower: usize,
    pub upper: usize,
}

/// Dense square operator on the truncated Fock space.
#[derive(Debug, Clone, PartialEq)]
pub struct FockOperator {
    entries: Array2<C64>,
    band: Option<Band>,
}

impl FockOperator {
    pub fn from_entries(entries: Array2<C64>) -> Result<Self> {
        let (r, c) = entries.dim();
        if r != c {
            return Err(Error::ShapeMismatch { left: r, right: c });
        }
        Ok(Self { entries, band: None })
    }

    pub fn zeros(truncation: usize) -> Self {
        Self { entries: Array2::zeros((truncation, truncation)), band: None }
    }

    /// Diagonal operator `f(n)` on `|n>`.
    pub fn diagonal(truncation: usize, f: impl Fn(usize) -> f64) -> Self {
        let mut entries = Array2::zeros((truncation, truncation));
        for n in 0..truncation {
            entries[(n, n)] = C64::new(f(n), 0.0);
        }
        Self { entries, band: Some(Band { lower: 0, upper: 0 }) }
    }

    pub fn with_band(mut self, band: Band) -> Self {
        self.band = Some(band);
        self
    }

    pub fn truncation(&self) -> usize {
        self.entries.nrows()
    }

    pub fn entries(&self) -> &Array2<C64> {
        &self.entries
    }

    pub fn band(&self) -> Option<Band> {
        self.band
    }

    pub fn get(&self, row: usize, col: usize) -> C64 {
        self.entries[(row, col)]
    }

    fn same_shape(&self, other: &FockOperator) -> Result<()> {
        if self.truncation() != other.truncation() {
            Err(Error::ShapeMismatch { left: self.truncation(), right: other.truncation() })
        } else {
            Ok(())
        }
    }

    pub fn apply(&self, v: &FockVector) -> Result<FockVector> {
        if self.truncation() != v.truncation() {
            return Err(Error::ShapeMismatch { left: self.truncation(), right: v.truncation() });
        }
        Ok(FockVector { coeffs: self.entries.dot(v.as_array()) })
    }

    pub fn matmul(&self, other: &FockOperator) -> Result<FockOperator> {
        self.same_shape(other)?;
        let band = match (self.band, other.band) {
            (Some(a), Some(b)) => Some(Band { lower: a.lower + b.lower, upper: a.upper + b.upper }),
            _ => None,
        };
        Ok(FockOperator { entries: self.entries.dot(&other.entries), band })
    }

    pub fn adjoint(&self) -> FockOperator {
        let band = self.band.map(|b| Band { lower: b.upper, upper: b.lower });
        FockOperator { entries: self.entries.t().mapv(|c| c.conj()), band }
    }

    pub fn add(&self, other: &FockOperator) -> Result<FockOperator> {
        self.same_shape(other)?;
        Ok(FockOperator { entries: &self.entries + &other.entries, band: None })
    }

    pub fn sub(&self, other: &FockOperator) -> Result<FockOperator> {
        self.same_shape(other)?;
        Ok(FockOperator { entries: &self.entries - &other.entries, band: None })
    }

    pub fn scaled(&self, factor: C64) -> FockOperator {
        FockOperator { entries: self.entries.mapv(|c| c * factor), band: self.band }
    }

    /// `<v|self|v>`.
    pub fn expectation(&self, v: &FockVector) -> Result<C64> {
        v.inner(&self.apply(v)?)
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Largest entry modulus restricted to rows and columns `0..=last`.
    pub fn interior_max_abs(&self, last: usize) -> f64 {
        let m = (last + 1).min(self.truncation());
        self.entries
            .slice(s![..m, ..m])
            .iter()
            .map(|c| c.norm())
            .fold(0.0, f64::max)
    }

    /// Largest index of the block unaffected by cubing a truncated ladder
    /// operator: `N - 4`.
    pub fn interior_limit(&self) -> usize {
        self.truncation().saturating_sub(MIN_DEFORMED_TRUNCATION)
    }
}

/// Annihilation operator `a`, with `<n-1|a|n> = sqrt(n)`.
pub fn build_annihilation(truncation: usize) -> Result<FockOperator> {
    check_truncation(truncation, 1)?;
    let mut entries = Array2::zeros((truncation, truncation));
    for n in 1..truncation {
        entries[(n - 1, n)] = C64::new((n as f64).sqrt(), 0.0);
    }
    Ok(FockOperator { entries, band: Some(Band { lower: 0, upper: 1 }) })
}

/// Creation operator `a+`.
pub fn build_creation(truncation: usize) -> Result<FockOperator> {
    Ok(build_annihilation(truncation)?.adjoint())
}

/// Oscillator Hamiltonian, diagonal with entries `n + 1/2`.
pub fn build_hamiltonian(truncation: usize) -> Result<FockOperator> {
    check_truncation(truncation, 1)?;
    Ok(FockOperator::diagonal(truncation, |n| n as f64 + 0.5))
}

/// Position operator `(a + a+)/sqrt(2)`.
pub fn build_position(truncation: usize) -> Result<FockOperator> {
    let a = build_annihilation(truncation)?;
    let x = a.add(&a.adjoint())?.scaled(C64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0));
    Ok(x.with_band(Band { lower: 1, upper: 1 }))
}

/// Momentum operator `i(a+ - a)/sqrt(2)`.
pub fn build_momentum(truncation: usize) -> Result<FockOperator> {
    let a = build_annihilation(truncation)?;
    let p = a.adjoint().sub(&a)?.scaled(C64::new(0.0, std::f64::consts::FRAC_1_SQRT_2));
    Ok(p.with_band(Band { lower: 1, upper: 1 }))
}

/// The deformed ladder pair `(a_g, a_g+) = (a^3, (a+)^3)`, computed as the
/// product of three truncated annihilation matrices and its adjoint.
pub fn build_deformed_ladders(truncation: usize) -> Result<(FockOperator, FockOperator)> {
    check_truncation(truncation, MIN_DEFORMED_TRUNCATION)?;
    let a = build_annihilation(truncation)?;
    let lower = a.matmul(&a)?.matmul(&a)?;
    let raise = lower.adjoint();
    Ok((lower, raise))
}

/// `[A, B] = AB - BA`.
pub fn commutator(a: &FockOperator, b: &FockOperator) -> Result<FockOperator> {
    a.matmul(b)?.sub(&b.matmul(a)?)
}

/// `N(E) = (E - 1/2)(E - 3/2)(E - 5/2)`; its roots are the extremal energies.
pub fn number_polynomial(energy: f64) -> f64 {
    (energy - 0.5) * (energy - 1.5) * (energy - 2.5)
}

/// The number analogue `N(H) = a_g+ a_g` as the diagonal cubic in `H`.
pub fn number_analogue(truncation: usize) -> Result<FockOperator> {
    number_analogue_shifted(truncation, 0.0)
}

/// `N(H + shift)`; with `shift = 3` this is the first term of `[a_g, a_g+]`.
pub fn number_analogue_shifted(truncation: usize, shift: f64) -> Result<FockOperator> {
    check_truncation(truncation, MIN_DEFORMED_TRUNCATION)?;
    Ok(FockOperator::diagonal(truncation, |n| number_polynomial(n as f64 + 0.5 + shift)))
}

/// Rung `n` of the ladder seeded by extremal state `ladder`:
/// `sqrt((j-1)! / (3n+j-1)!) (a_g+)^n |j-1>`.
///
/// The factorial prefactor is applied one rung at a time so that large
/// rungs do not overflow.
pub fn ladder_state(ladder: LadderIndex, rung: usize, truncation: usize) -> Result<FockVector> {
    let top = ladder.fock_number(rung);
    if top >= truncation {
        return Err(Error::OutOfRange { index: top, truncation });
    }
    let mut state = FockVector::basis(truncation, ladder.residue() as usize)?;
    if rung == 0 {
        return Ok(state);
    }
    let (_, raise) = build_deformed_ladders(truncation)?;
    for step in 0..rung {
        let m = ladder.fock_number(step) as f64;
        let scale = 1.0 / ((m + 1.0) * (m + 2.0) * (m + 3.0)).sqrt();
        state = raise.apply(&state)?.scaled(C64::new(scale, 0.0));
    }
    Ok(state)
}

/// The three ladders of the truncated spectrum, indexed by residue:
/// energies `E_j + 3n` for every rung that fits.
pub fn spectrum_decomposition(truncation: usize) -> Result<[Vec<f64>; 3]> {
    check_truncation(truncation, 3)?;
    Ok(LadderIndex::ALL.map(|ladder| {
        (0..)
            .map(|rung| ladder.fock_number(rung))
            .take_while(|&n| n < truncation)
            .map(|n| n as f64 + 0.5)
            .collect()
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    #[test]
    fn annihilation_examples() {
        let a = build_annihilation(6).unwrap();
        let v = a.apply(&FockVector::basis(6, 1).unwrap()).unwrap();
        assert_eq!(v, FockVector::basis(6, 0).unwrap());
        let v = a.apply(&FockVector::basis(6, 0).unwrap()).unwrap();
        assert_eq!(v, FockVector::zeros(6));
        let v = a.apply(&FockVector::basis(6, 3).unwrap()).unwrap();
        assert_eq!(v, FockVector::basis(6, 2).unwrap().scaled(c(3f64.sqrt())));
        assert_eq!(build_annihilation(0), Err(Error::InvalidTruncation { got: 0, min: 1 }));
    }

    #[test]
    fn annihilation_has_only_first_superdiagonal() {
        let a = build_annihilation(9).unwrap();
        for r in 0..9 {
            for col in 0..9 {
                let expected = if col == r + 1 { (col as f64).sqrt() } else { 0.0 };
                assert_eq!(a.get(r, col), c(expected));
            }
        }
    }

    #[test]
    fn hamiltonian_examples() {
        let h = build_hamiltonian(8).unwrap();
        for (k, e) in [(0, 0.5), (2, 2.5), (7, 7.5)] {
            let v = FockVector::basis(8, k).unwrap();
            assert_eq!(h.apply(&v).unwrap(), v.scaled(c(e)));
        }
        assert!(build_hamiltonian(0).is_err());
    }

    #[test]
    fn deformed_ladder_examples() {
        let (ag, agp) = build_deformed_ladders(8).unwrap();
        let six = 6f64.sqrt();
        let v = ag.apply(&FockVector::basis(8, 3).unwrap()).unwrap();
        assert!(v.max_abs_diff(&FockVector::basis(8, 0).unwrap().scaled(c(six))).unwrap() < 1e-15);
        let v = ag.apply(&FockVector::basis(8, 2).unwrap()).unwrap();
        assert_eq!(v, FockVector::zeros(8));
        let v = agp.apply(&FockVector::basis(8, 0).unwrap()).unwrap();
        assert!(v.max_abs_diff(&FockVector::basis(8, 3).unwrap().scaled(c(six))).unwrap() < 1e-15);
        assert_eq!(build_deformed_ladders(3).unwrap_err(), Error::InvalidTruncation { got: 3, min: 4 });
    }

    #[test]
    fn deformed_lowering_is_third_superdiagonal() {
        let (ag, _) = build_deformed_ladders(10).unwrap();
        for r in 0..10 {
            for col in 0..10 {
                if col != r + 3 {
                    assert_eq!(ag.get(r, col), c(0.0));
                }
            }
        }
        assert_eq!(ag.band(), Some(Band { lower: 0, upper: 3 }));
    }

    #[test]
    fn commutator_examples() {
        let h = build_hamiltonian(10).unwrap();
        assert_eq!(commutator(&h, &h).unwrap().max_abs(), 0.0);

        let (ag, agp) = build_deformed_ladders(10).unwrap();
        let k = commutator(&ag, &agp).unwrap();
        let v = k.apply(&FockVector::basis(10, 0).unwrap()).unwrap();
        assert!(v.max_abs_diff(&FockVector::basis(10, 0).unwrap().scaled(c(6.0))).unwrap() < 1e-13);

        let other = build_hamiltonian(9).unwrap();
        assert!(matches!(commutator(&h, &other), Err(Error::ShapeMismatch { .. })));
    }

    #[test]
    fn number_analogue_examples() {
        let nh = number_analogue(8).unwrap();
        assert_eq!(nh.get(0, 0), c(0.0));
        assert_eq!(nh.get(2, 2), c(0.0));
        assert_eq!(nh.get(3, 3), c(6.0));
        assert!(number_analogue(3).is_err());
    }

    #[test]
    fn ladder_state_examples() {
        let l1 = LadderIndex::extremal(1).unwrap();
        let l2 = LadderIndex::extremal(2).unwrap();
        let l3 = LadderIndex::extremal(3).unwrap();
        assert_eq!(ladder_state(l1, 0, 10).unwrap(), FockVector::basis(10, 0).unwrap());

        let h = build_hamiltonian(10).unwrap();
        let v = ladder_state(l2, 1, 10).unwrap();
        assert!(v.max_abs_diff(&FockVector::basis(10, 4).unwrap()).unwrap() < 1e-14);
        assert!(h.apply(&v).unwrap().max_abs_diff(&v.scaled(c(4.5))).unwrap() < 1e-13);

        let v = ladder_state(l3, 0, 10).unwrap();
        assert_eq!(v, FockVector::basis(10, 2).unwrap());
        assert_eq!(l3.extremal_energy(), 2.5);

        assert_eq!(
            ladder_state(l3, 3, 10).unwrap_err(),
            Error::OutOfRange { index: 11, truncation: 10 }
        );
    }

    #[test]
    fn ladder_labelings() {
        let e = LadderIndex::extremal(2).unwrap();
        let cs = LadderIndex::coherent(1).unwrap();
        assert_eq!(e, cs);
        assert_eq!(e.labeling(), Labeling::Extremal);
        assert_eq!(e.coherent_label(), 1);
        assert_eq!(cs.extremal_label(), 2);
        assert!(LadderIndex::extremal(0).is_err());
        assert!(LadderIndex::extremal(4).is_err());
        assert!(LadderIndex::coherent(3).is_err());
    }

    #[test]
    fn spectrum_examples() {
        let [l0, l1, l2] = spectrum_decomposition(6).unwrap();
        assert_eq!(l0, vec![0.5, 3.5]);
        assert_eq!(l1, vec![1.5, 4.5]);
        assert_eq!(l2, vec![2.5, 5.5]);
        let mut all: Vec<f64> = [l0, l1, l2].concat();
        all.sort_by(f64::total_cmp);
        assert_eq!(all, vec![0.5, 1.5, 2.5, 3.5, 4.5, 5.5]);
        assert!(spectrum_decomposition(2).is_err());
    }

    #[test]
    fn ladder_membership() {
        let v = FockVector::basis(9, 7).unwrap();
        assert!(v.is_on_ladder(LadderIndex::coherent(1).unwrap()));
        assert!(!v.is_on_ladder(LadderIndex::coherent(0).unwrap()));
    }
}
