//! Weights of `so(2k+4, C)` in the orthonormal basis `e_1, ..., e_{k+2}`.
//!
//! Coordinates are half-integers, so a [`Weight`] stores twice each coordinate.
//! Every operation here is exact integer arithmetic.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which nodes of the Dynkin diagram carry a cross.
///
/// `P` crosses node `k`, `Q` crosses nodes `k` and `k+1`, `R` crosses node
/// `k+1` and `G` crosses nothing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ParabolicMarking {
    P,
    Q,
    R,
    G,
}

impl fmt::Display for ParabolicMarking {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ParabolicMarking::P => "p",
            ParabolicMarking::Q => "q",
            ParabolicMarking::R => "r",
            ParabolicMarking::G => "g",
        };
        f.write_str(s)
    }
}

/// A weight `[l_1, ..., l_{k+2}]`, stored as the doubled coordinates `2 l_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    k: usize,
    coords2: Vec<i64>,
}

impl Weight {
    /// Builds a weight from doubled coordinates. The vector must have `k + 2` entries.
    pub fn from_doubled(k: usize, coords2: Vec<i64>) -> Result<Self> {
        if k < 1 {
            return Err(Error::InvalidParameter(format!("k must be at least 1, got {k}")));
        }
        if coords2.len() != k + 2 {
            return Err(Error::InvalidParameter(format!(
                "a weight for k = {k} needs {} coordinates, got {}",
                k + 2,
                coords2.len()
            )));
        }
        Ok(Self { k, coords2 })
    }

    /// Builds a weight from integer (not doubled) coordinates.
    pub fn from_integers(k: usize, coords: &[i64]) -> Result<Self> {
        Self::from_doubled(k, coords.iter().map(|c| 2 * c).collect())
    }

    pub fn zero(k: usize) -> Result<Self> {
        Self::from_doubled(k, vec![0; k + 2])
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Doubled coordinates, index 0 holds `2 l_1`.
    pub fn doubled(&self) -> &[i64] {
        &self.coords2
    }

    /// Doubled coordinate `2 l_m` for a 1-based index `m`.
    pub fn coord2(&self, m: usize) -> i64 {
        self.coords2[m - 1]
    }

    /// True when all coordinates are integers or all are half-odd-integers,
    /// i.e. the weight integrates to the spin group.
    pub fn is_integral(&self) -> bool {
        let parity = self.coords2[0].rem_euclid(2);
        self.coords2.iter().all(|c| c.rem_euclid(2) == parity)
    }

    fn check_rank(&self, other: &Weight) -> Result<()> {
        if self.k != other.k {
            return Err(Error::RankMismatch {
                left: self.k,
                right: other.k,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Weight) -> Result<Weight> {
        self.check_rank(other)?;
        let coords2 = self
            .coords2
            .iter()
            .zip(&other.coords2)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow("weight sum")))
            .collect::<Result<Vec<_>>>()?;
        Ok(Weight { k: self.k, coords2 })
    }

    pub fn checked_sub(&self, other: &Weight) -> Result<Weight> {
        self.check_rank(other)?;
        let coords2 = self
            .coords2
            .iter()
            .zip(&other.coords2)
            .map(|(a, b)| a.checked_sub(*b).ok_or(Error::Overflow("weight difference")))
            .collect::<Result<Vec<_>>>()?;
        Ok(Weight { k: self.k, coords2 })
    }

    /// Sum of the first `k` doubled coordinates (the `gl_k` grading, doubled).
    pub fn leading_sum2(&self) -> i64 {
        self.coords2[..self.k].iter().sum()
    }

    pub fn is_dominant(&self, marking: ParabolicMarking) -> bool {
        self.dominance_violation(marking).is_none()
    }

    /// The first inequality of the dominance condition for `marking` that
    /// fails, rendered for humans, or `None` when the weight is dominant.
    pub fn dominance_violation(&self, marking: ParabolicMarking) -> Option<String> {
        let k = self.k;
        let c = |m: usize| self.coord2(m);
        let chain_end = match marking {
            ParabolicMarking::P | ParabolicMarking::Q => k,
            ParabolicMarking::R | ParabolicMarking::G => k + 1,
        };
        for m in 1..chain_end {
            if c(m) < c(m + 1) {
                return Some(format!(
                    "l_{m} >= l_{} fails ({} < {})",
                    m + 1,
                    half(c(m)),
                    half(c(m + 1))
                ));
            }
        }
        let (a, b) = (c(k + 1), c(k + 2));
        match marking {
            ParabolicMarking::P | ParabolicMarking::G => {
                if a < b.abs() {
                    return Some(format!(
                        "l_{} >= |l_{}| fails ({} < {})",
                        k + 1,
                        k + 2,
                        half(a),
                        half(b.abs())
                    ));
                }
            }
            ParabolicMarking::Q | ParabolicMarking::R => {
                if a < -b {
                    return Some(format!(
                        "l_{} >= -l_{} fails ({} < {})",
                        k + 1,
                        k + 2,
                        half(a),
                        half(-b)
                    ));
                }
            }
        }
        None
    }

    /// `Ok(())` when dominant, otherwise a [`Error::DominanceViolation`].
    pub fn require_dominant(&self, marking: ParabolicMarking) -> Result<()> {
        match self.dominance_violation(marking) {
            None => Ok(()),
            Some(inequality) => Err(Error::DominanceViolation { marking, inequality }),
        }
    }

    /// Renders the weight in bracket notation with separators after coordinate
    /// `k` and/or `k+1` according to `marking`. With `half == false` the
    /// doubled values are printed, i.e. the common factor 1/2 is omitted.
    pub fn render(&self, marking: ParabolicMarking, half_units: bool) -> String {
        let k = self.k;
        let mut out = String::from("[");
        for (idx, &c) in self.coords2.iter().enumerate() {
            let m = idx + 1;
            if m > 1 {
                let sep = match marking {
                    ParabolicMarking::P if m == k + 1 => "|",
                    ParabolicMarking::Q if m == k + 1 || m == k + 2 => "|",
                    ParabolicMarking::R if m == k + 2 => "|",
                    _ => ",",
                };
                out.push_str(sep);
            }
            if half_units {
                out.push_str(&half(c));
            } else {
                out.push_str(&c.to_string());
            }
        }
        out.push(']');
        out
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(ParabolicMarking::G, false))
    }
}

/// Formats a doubled value in true units: `3 -> "3/2"`, `4 -> "2"`.
pub fn half(c2: i64) -> String {
    if c2 % 2 == 0 {
        (c2 / 2).to_string()
    } else {
        format!("{c2}/2")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RootKind {
    Alpha,
    Beta,
}

/// The positive root `alpha_ij = e_i - e_j` or `beta_ij = e_i + e_j`, `i < j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootLabel {
    pub kind: RootKind,
    pub i: usize,
    pub j: usize,
}

impl RootLabel {
    pub fn alpha(i: usize, j: usize) -> Self {
        Self { kind: RootKind::Alpha, i, j }
    }

    pub fn beta(i: usize, j: usize) -> Self {
        Self { kind: RootKind::Beta, i, j }
    }

    pub fn validate(&self, k: usize) -> Result<()> {
        if !(1 <= self.i && self.i < self.j && self.j <= k + 2) {
            return Err(Error::InvalidParameter(format!(
                "root indices ({}, {}) must satisfy 1 <= i < j <= {}",
                self.i,
                self.j,
                k + 2
            )));
        }
        Ok(())
    }
}

impl fmt::Display for RootLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            RootKind::Alpha => 'a',
            RootKind::Beta => 'b',
        };
        write!(f, "{name}({},{})", self.i, self.j)
    }
}

/// The root as a weight: `e_i - e_j` or `e_i + e_j`.
pub fn root_vector(label: RootLabel, k: usize) -> Result<Weight> {
    label.validate(k)?;
    let mut coords2 = vec![0; k + 2];
    coords2[label.i - 1] = 2;
    coords2[label.j - 1] = match label.kind {
        RootKind::Alpha => -2,
        RootKind::Beta => 2,
    };
    Weight::from_doubled(k, coords2)
}

/// `delta = [k+1, k, ..., 1, 0]`, the sum of the fundamental weights.
pub fn delta(k: usize) -> Result<Weight> {
    if k < 1 {
        return Err(Error::InvalidParameter(format!("k must be at least 1, got {k}")));
    }
    let coords2 = (0..k + 2).map(|idx| 2 * (k + 1 - idx) as i64).collect();
    Weight::from_doubled(k, coords2)
}

/// Fundamental weight `omega_m`, `1 <= m <= k+2`.
pub fn fundamental_weight(k: usize, m: usize) -> Result<Weight> {
    if k < 1 {
        return Err(Error::InvalidParameter(format!("k must be at least 1, got {k}")));
    }
    if m < 1 || m > k + 2 {
        return Err(Error::InvalidParameter(format!(
            "fundamental weight index {m} outside 1..={}",
            k + 2
        )));
    }
    let coords2 = if m <= k {
        (1..=k + 2).map(|idx| if idx <= m { 2 } else { 0 }).collect()
    } else {
        let last = if m == k + 1 { -1 } else { 1 };
        (1..=k + 2).map(|idx| if idx == k + 2 { last } else { 1 }).collect()
    };
    Weight::from_doubled(k, coords2)
}

/// `phi(l) = w(l + delta) - delta`, where `w` swaps the last two coordinates.
///
/// With `l + delta` ending in `(l_{k+1} + 1, l_{k+2})` the result ends in
/// `(l_{k+2} - 1, l_{k+1} + 1)`; the first `k` coordinates are untouched.
pub fn affine_last_reflection(w: &Weight) -> Weight {
    let k = w.k;
    let mut coords2 = w.coords2.clone();
    let (a, b) = (w.coords2[k], w.coords2[k + 1]);
    coords2[k] = b - 2;
    coords2[k + 1] = a + 2;
    Weight { k, coords2 }
}
