//! Quaternion units as 2x2 matrices over the Gaussian rationals.

use std::ops::{Add, Mul, Neg};

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Gaussian = Complex<BigRational>;

pub fn gaussian(re: i64, im: i64) -> Gaussian {
    Complex::new(
        BigRational::from_integer(BigInt::from(re)),
        BigRational::from_integer(BigInt::from(im)),
    )
}

/// A value in `C^2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spinor(pub [Gaussian; 2]);

impl Spinor {
    pub fn zero() -> Self {
        Spinor([Gaussian::zero(), Gaussian::zero()])
    }

    /// `e_0 = (1, 0)` for `c = 0`, `e_1 = (0, 1)` for `c = 1`.
    pub fn basis(c: usize) -> Self {
        let mut v = Self::zero();
        v.0[c] = Gaussian::one();
        v
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, by: &Gaussian) -> Self {
        Spinor([&self.0[0] * by, &self.0[1] * by])
    }
}

impl Add for &Spinor {
    type Output = Spinor;

    fn add(self, rhs: &Spinor) -> Spinor {
        Spinor([&self.0[0] + &rhs.0[0], &self.0[1] + &rhs.0[1]])
    }
}

impl Neg for &Spinor {
    type Output = Spinor;

    fn neg(self) -> Spinor {
        Spinor([-self.0[0].clone(), -self.0[1].clone()])
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat2(pub [[Gaussian; 2]; 2]);

impl Mat2 {
    pub fn from_ints(m: [[(i64, i64); 2]; 2]) -> Self {
        Mat2(m.map(|row| row.map(|(re, im)| gaussian(re, im))))
    }

    pub fn identity() -> Self {
        Self::from_ints([[(1, 0), (0, 0)], [(0, 0), (1, 0)]])
    }

    pub fn scaled(&self, by: i64) -> Self {
        let s = gaussian(by, 0);
        Mat2(self.0.clone().map(|row| row.map(|x| x * &s)))
    }
}

impl Mul for &Mat2 {
    type Output = Mat2;

    fn mul(self, rhs: &Mat2) -> Mat2 {
        let e = |r: usize, c: usize| &self.0[r][0] * &rhs.0[0][c] + &self.0[r][1] * &rhs.0[1][c];
        Mat2([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }
}

impl Add for &Mat2 {
    type Output = Mat2;

    fn add(self, rhs: &Mat2) -> Mat2 {
        let e = |r: usize, c: usize| &self.0[r][c] + &rhs.0[r][c];
        Mat2([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }
}

impl Mul<&Spinor> for &Mat2 {
    type Output = Spinor;

    fn mul(self, v: &Spinor) -> Spinor {
        let e = |r: usize| &self.0[r][0] * &v.0[0] + &self.0[r][1] * &v.0[1];
        Spinor([e(0), e(1)])
    }
}

/// `e_0 = 1` and the quaternion units `e_1, e_2, e_3` with `e_1 e_2 = e_3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliffordBasis {
    units: [Mat2; 4],
    conjugates: [Mat2; 4],
}

impl CliffordBasis {
    pub fn standard() -> Self {
        let units = [
            Mat2::identity(),
            Mat2::from_ints([[(0, 1), (0, 0)], [(0, 0), (0, -1)]]),
            Mat2::from_ints([[(0, 0), (1, 0)], [(-1, 0), (0, 0)]]),
            Mat2::from_ints([[(0, 0), (0, 1)], [(0, 1), (0, 0)]]),
        ];
        let conjugates = [
            units[0].clone(),
            units[1].scaled(-1),
            units[2].scaled(-1),
            units[3].scaled(-1),
        ];
        Self { units, conjugates }
    }

    pub fn unit(&self, a: usize) -> &Mat2 {
        &self.units[a]
    }

    /// `ebar_0 = e_0`, `ebar_a = -e_a` otherwise.
    pub fn conjugate(&self, a: usize) -> &Mat2 {
        &self.conjugates[a]
    }
}

impl Default for CliffordBasis {
    fn default() -> Self {
        Self::standard()
    }
}
