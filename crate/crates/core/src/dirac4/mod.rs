//! The Dirac operator in `k` variables in dimension 4, acting on polynomial
//! spinor fields with exact Gaussian-rational coefficients.
//!
//! `D_l f = sum_a e_a df/dx_{l,a}` where `e_0 = 1` and `e_1, e_2, e_3` are the
//! quaternion units. All identities are checked coefficient by coefficient.

mod clifford;
mod poly;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub use clifford::{gaussian, CliffordBasis, Gaussian, Mat2, Spinor};
pub use poly::{var_index, Monomial, PolySpinorField};

use crate::error::{Error, Result};
use crate::linalg;
use crate::pushdown::ModuleDescriptor;

fn check_variable(f: &PolySpinorField, l: usize) -> Result<()> {
    if l < 1 || l > f.k() {
        return Err(Error::InvalidParameter(format!(
            "variable index {l} outside 1..={}",
            f.k()
        )));
    }
    Ok(())
}

fn clifford_derivative(f: &PolySpinorField, l: usize, conjugate: bool) -> Result<PolySpinorField> {
    check_variable(f, l)?;
    let basis = CliffordBasis::standard();
    let mut out = PolySpinorField::zero(f.k());
    for a in 0..4 {
        let e = if conjugate { basis.conjugate(a) } else { basis.unit(a) };
        out = out.add(&f.partial(var_index(l, a)).apply(e));
    }
    Ok(out)
}

/// `D_l f = sum_a e_a df/dx_{l,a}`.
pub fn dirac_component(f: &PolySpinorField, l: usize) -> Result<PolySpinorField> {
    clifford_derivative(f, l, false)
}

/// `Dbar_l f = sum_a ebar_a df/dx_{l,a}`.
pub fn conjugate_dirac_component(f: &PolySpinorField, l: usize) -> Result<PolySpinorField> {
    clifford_derivative(f, l, true)
}

/// `D_k f = (D_1 f, ..., D_k f)`.
pub fn dirac_k(f: &PolySpinorField) -> Vec<PolySpinorField> {
    (1..=f.k())
        .map(|l| dirac_component(f, l).expect("index in range"))
        .collect()
}

/// `sum_a d^2 f / dx_{l,a} dx_{m,a}`; equals `Delta_l f` when `l == m`.
pub fn polarized_laplacian(f: &PolySpinorField, l: usize, m: usize) -> Result<PolySpinorField> {
    check_variable(f, l)?;
    check_variable(f, m)?;
    Ok((0..4).fold(PolySpinorField::zero(f.k()), |acc, a| {
        acc.add(&f.partial(var_index(m, a)).partial(var_index(l, a)))
    }))
}

/// `Delta_l f = sum_a d^2 f / dx_{l,a}^2`.
pub fn laplacian_component(f: &PolySpinorField, l: usize) -> Result<PolySpinorField> {
    check_variable(f, l)?;
    Ok((0..4).fold(PolySpinorField::zero(f.k()), |acc, a| {
        let v = var_index(l, a);
        acc.add(&f.partial(v).partial(v))
    }))
}

fn random_gaussian<R: Rng>(rng: &mut R) -> Gaussian {
    let mut part = || {
        BigRational::new(
            BigInt::from(rng.random_range(-6i64..=6)),
            BigInt::from(rng.random_range(1i64..=4)),
        )
    };
    Complex::new(part(), part())
}

/// A field with up to `terms` random monomials of total degree at most
/// `max_degree` and small random Gaussian-rational coefficients.
pub fn random_field<R: Rng>(k: usize, max_degree: u32, terms: usize, rng: &mut R) -> PolySpinorField {
    let mut f = PolySpinorField::zero(k);
    for _ in 0..terms {
        let mut mono = vec![0u32; 4 * k];
        for _ in 0..rng.random_range(0..=max_degree) {
            mono[rng.random_range(0..4 * k)] += 1;
        }
        let v = Spinor([random_gaussian(rng), random_gaussian(rng)]);
        f.add_term(mono, v);
    }
    f
}

/// Degree-one monogenic fields in the variable block `l`:
/// `(x_{l,a} - x_{l,0} e_a) v` for `a = 1, 2, 3` and both basis spinors `v`.
pub fn monogenic_linear_family(k: usize, l: usize) -> Vec<PolySpinorField> {
    let basis = CliffordBasis::standard();
    let mut out = Vec::new();
    for a in 1..4 {
        for c in 0..2 {
            let v = Spinor::basis(c);
            let f = PolySpinorField::linear(k, l, a, v.clone())
                .sub(&PolySpinorField::linear(k, l, 0, basis.unit(a) * &v));
            out.push(f);
        }
    }
    out
}

/// Complex dimension of the span of `D_k` applied to all degree-one fields,
/// i.e. of the target of the first operator at the constant level.
pub fn target_dimension(k: usize) -> usize {
    let mut rows = Vec::new();
    for l in 1..=k {
        for a in 0..4 {
            for c in 0..2 {
                let f = PolySpinorField::linear(k, l, a, Spinor::basis(c));
                let mut row = Vec::with_capacity(2 * k);
                for component in dirac_k(&f) {
                    let value = component
                        .terms()
                        .find(|(m, _)| m.iter().all(|&e| e == 0))
                        .map(|(_, v)| v.clone())
                        .unwrap_or_else(Spinor::zero);
                    row.extend(value.0);
                }
                rows.push(row);
            }
        }
    }
    linalg::rank(rows)
}

/// `dim(C^k (x) Sp_+)`, the module the first operator maps into.
pub fn expected_target_dimension(k: usize) -> Result<u64> {
    let mut hw = vec![1; k];
    hw[k - 1] = 0;
    Ok(ModuleDescriptor::new(hw, (0, 1))?.dim)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Tally {
    pub passed: usize,
    pub total: usize,
}

impl Tally {
    fn record(&mut self, ok: bool) {
        self.total += 1;
        if ok {
            self.passed += 1;
        }
    }

    pub fn all_passed(&self) -> bool {
        self.passed == self.total
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    pub factorization: Tally,
    pub polarization: Tally,
    pub monogenic: Tally,
    pub target_dimension: usize,
    pub expected_target_dimension: u64,
}

impl PropertyReport {
    pub fn all_passed(&self) -> bool {
        self.factorization.all_passed()
            && self.polarization.all_passed()
            && self.monogenic.all_passed()
            && self.target_dimension as u64 == self.expected_target_dimension
    }
}

/// Runs `trials` random checks of `Dbar_l D_l = Delta_l` (and, when `k >= 2`,
/// of `D_l Dbar_m + D_m Dbar_l = 2 sum_a d_{l,a} d_{m,a}` for `l != m`), the
/// degree-one monogenic families and the target dimension. Deterministic for
/// a given `seed`.
///
/// `D_l` and `D_m` themselves do not commute: their coefficients are
/// quaternion units.
pub fn run_property_suite(k: usize, max_degree: u32, trials: usize, seed: u64) -> Result<PropertyReport> {
    if k < 1 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = PropertyReport {
        factorization: Tally::default(),
        polarization: Tally::default(),
        monogenic: Tally::default(),
        target_dimension: target_dimension(k),
        expected_target_dimension: expected_target_dimension(k)?,
    };
    for _ in 0..trials {
        let f = random_field(k, max_degree, 8, &mut rng);
        let l = rng.random_range(1..=k);
        let lhs = conjugate_dirac_component(&dirac_component(&f, l)?, l)?;
        report.factorization.record(lhs == laplacian_component(&f, l)?);
        if k >= 2 {
            let m = loop {
                let m = rng.random_range(1..=k);
                if m != l {
                    break m;
                }
            };
            let lhs = dirac_component(&conjugate_dirac_component(&f, m)?, l)?
                .add(&dirac_component(&conjugate_dirac_component(&f, l)?, m)?);
            let rhs = polarized_laplacian(&f, l, m)?.scale(&gaussian(2, 0));
            report.polarization.record(lhs == rhs);
        }
    }
    for l in 1..=k {
        for f in monogenic_linear_family(k, l) {
            report.monogenic.record(dirac_k(&f).iter().all(PolySpinorField::is_zero));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v() -> Spinor {
        Spinor([gaussian(2, -1), gaussian(0, 3)])
    }

    #[test]
    fn constants_are_annihilated() {
        let f = PolySpinorField::constant(2, v());
        assert!(dirac_component(&f, 1).unwrap().is_zero());
        assert!(dirac_k(&f).iter().all(PolySpinorField::is_zero));
        assert!(conjugate_dirac_component(&dirac_component(&f, 2).unwrap(), 2).unwrap().is_zero());
    }

    #[test]
    fn single_derivative() {
        let f = PolySpinorField::linear(2, 1, 0, v());
        let d = dirac_k(&f);
        assert_eq!(d[0], PolySpinorField::constant(2, v()));
        assert!(d[1].is_zero());
    }

    #[test]
    fn degree_one_monogenic() {
        let b = CliffordBasis::standard();
        for l in 1..=3 {
            let f = PolySpinorField::linear(3, l, 1, v())
                .sub(&PolySpinorField::linear(3, l, 0, b.unit(1) * &v()));
            assert!(dirac_component(&f, l).unwrap().is_zero());
        }
    }

    #[test]
    fn x0_squared() {
        let mut f = PolySpinorField::zero(1);
        f.add_term(vec![2, 0, 0, 0], v());
        let lhs = conjugate_dirac_component(&dirac_component(&f, 1).unwrap(), 1).unwrap();
        let two_v = PolySpinorField::constant(1, v().scale(&gaussian(2, 0)));
        assert_eq!(lhs, two_v);
        assert_eq!(laplacian_component(&f, 1).unwrap(), two_v);
    }

    #[test]
    fn components_do_not_commute() {
        let b = CliffordBasis::standard();
        let mut f = PolySpinorField::zero(2);
        f.add_term(vec![0, 1, 0, 0, 0, 0, 1, 0], v());
        let d12 = dirac_component(&dirac_component(&f, 2).unwrap(), 1).unwrap();
        let d21 = dirac_component(&dirac_component(&f, 1).unwrap(), 2).unwrap();
        assert_eq!(d12, PolySpinorField::constant(2, &(b.unit(1) * b.unit(2)) * &v()));
        assert_eq!(d21, PolySpinorField::constant(2, &(b.unit(2) * b.unit(1)) * &v()));
        assert_ne!(d12, d21);
        assert_eq!(d12.add(&d21), PolySpinorField::zero(2));
    }

    #[test]
    fn variable_index_checked() {
        let f = PolySpinorField::constant(2, v());
        assert!(dirac_component(&f, 0).is_err());
        assert!(dirac_component(&f, 3).is_err());
        assert!(conjugate_dirac_component(&f, 3).is_err());
        assert!(laplacian_component(&f, 3).is_err());
    }

    #[test]
    fn target_dimension_matches_module() {
        for k in 1..=4 {
            assert_eq!(target_dimension(k), 2 * k);
            assert_eq!(expected_target_dimension(k).unwrap(), 2 * k as u64);
        }
    }

    #[test]
    fn suite_is_deterministic() {
        let a = run_property_suite(2, 3, 20, 7).unwrap();
        let b = run_property_suite(2, 3, 20, 7).unwrap();
        assert_eq!(a, b);
        assert!(a.all_passed());
        assert_eq!(a.factorization, Tally { passed: 20, total: 20 });
        assert_eq!(a.monogenic.total, 12);
    }
}
