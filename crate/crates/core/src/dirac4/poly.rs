//! Polynomial maps from `M(4, k, R)` (coordinates `x_{l,a}`) to `C^2`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::clifford::{Gaussian, Mat2, Spinor};

/// Exponents of the `4k` variables, `x_{l,a}` at index `4(l-1) + a`.
pub type Monomial = Vec<u32>;

pub fn var_index(l: usize, a: usize) -> usize {
    4 * (l - 1) + a
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolySpinorField {
    k: usize,
    // no zero coefficients are stored
    terms: BTreeMap<Monomial, Spinor>,
}

impl PolySpinorField {
    pub fn zero(k: usize) -> Self {
        Self {
            k,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(k: usize, v: Spinor) -> Self {
        let mut f = Self::zero(k);
        f.add_term(vec![0; 4 * k], v);
        f
    }

    /// `x_{l,a} v`.
    pub fn linear(k: usize, l: usize, a: usize, v: Spinor) -> Self {
        let mut exps = vec![0; 4 * k];
        exps[var_index(l, a)] = 1;
        let mut f = Self::zero(k);
        f.add_term(exps, v);
        f
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Spinor)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.iter().sum()).max()
    }

    /// Adds `v` to the coefficient of `monomial`. Panics if the monomial has the wrong arity.
    pub fn add_term(&mut self, monomial: Monomial, v: Spinor) {
        assert_eq!(monomial.len(), 4 * self.k, "monomial arity");
        if v.is_zero() {
            return;
        }
        match self.terms.get_mut(&monomial) {
            Some(c) => {
                *c = &*c + &v;
                if c.is_zero() {
                    self.terms.remove(&monomial);
                }
            }
            None => {
                self.terms.insert(monomial, v);
            }
        }
    }

    pub fn add(&self, other: &PolySpinorField) -> PolySpinorField {
        let mut out = self.clone();
        for (m, v) in &other.terms {
            out.add_term(m.clone(), v.clone());
        }
        out
    }

    pub fn sub(&self, other: &PolySpinorField) -> PolySpinorField {
        let mut out = self.clone();
        for (m, v) in &other.terms {
            out.add_term(m.clone(), -v);
        }
        out
    }

    pub fn scale(&self, by: &Gaussian) -> PolySpinorField {
        let mut out = Self::zero(self.k);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v.scale(by));
        }
        out
    }

    /// Left multiplication of every coefficient by `m`.
    pub fn apply(&self, m: &Mat2) -> PolySpinorField {
        let mut out = Self::zero(self.k);
        for (mono, v) in &self.terms {
            out.add_term(mono.clone(), m * v);
        }
        out
    }

    /// Partial derivative in the variable with flat index `var`.
    pub fn partial(&self, var: usize) -> PolySpinorField {
        let mut out = Self::zero(self.k);
        for (mono, v) in &self.terms {
            let e = mono[var];
            if e == 0 {
                continue;
            }
            let mut lowered = mono.clone();
            lowered[var] = e - 1;
            let factor = Gaussian::new(
                BigRational::from_integer(BigInt::from(e)),
                BigRational::from_integer(BigInt::from(0)),
            );
            out.add_term(lowered, v.scale(&factor));
        }
        out
    }
}
