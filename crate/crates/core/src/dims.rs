//! Dimensions of the inducing modules via the Weyl dimension formula.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pushdown::ModuleDescriptor;

/// Highest weight of `sl_n` in e-coordinates: nonincreasing, nonnegative.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SlHighestWeight(Vec<u32>);

impl SlHighestWeight {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidParameter("empty sl highest weight".into()));
        }
        if entries.windows(2).any(|p| p[0] < p[1]) {
            return Err(Error::InvalidParameter(format!(
                "sl highest weight {entries:?} is not nonincreasing"
            )));
        }
        Ok(Self(entries))
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    /// Same weight shifted so that its last entry is 0.
    pub fn normalized(&self) -> Self {
        let min = *self.0.last().expect("nonempty");
        Self(self.0.iter().map(|e| e - min).collect())
    }
}

/// `prod_{a<b} (l_a - l_b + b - a) / (b - a)`.
pub fn weyl_dim_sl(hw: &SlHighestWeight) -> Result<u64> {
    let l = hw.entries();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for a in 0..l.len() {
        for b in a + 1..l.len() {
            let gap = (b - a) as u64;
            num *= u64::from(l[a] - l[b]) + gap;
            den *= gap;
        }
    }
    let (q, r) = (&num / &den, &num % &den);
    if !r.is_zero() {
        return Err(Error::Structural(format!("Weyl dimension of {l:?} is not an integer")));
    }
    q.to_u64().ok_or(Error::Overflow("sl dimension"))
}

/// `so_4 = sl_2 x sl_2`, so the weight `a w'_{k+1} + b w'_{k+2}` has dimension `(a+1)(b+1)`.
pub fn dim_so4(a: u32, b: u32) -> Result<u64> {
    (u64::from(a) + 1)
        .checked_mul(u64::from(b) + 1)
        .ok_or(Error::Overflow("so4 dimension"))
}

pub fn dim_module(m: &ModuleDescriptor) -> Result<u64> {
    let sl = weyl_dim_sl(&SlHighestWeight::new(m.slk_hw.clone())?)?;
    let (a, b) = m.so4_hw;
    sl.checked_mul(dim_so4(a, b)?).ok_or(Error::Overflow("module dimension"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sl(e: &[u32]) -> SlHighestWeight {
        SlHighestWeight::new(e.to_vec()).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(weyl_dim_sl(&sl(&[1, 1, 0])).unwrap(), 3);
        assert_eq!(weyl_dim_sl(&sl(&[0, 0, 0, 0])).unwrap(), 1);
        assert_eq!(weyl_dim_sl(&sl(&[2, 1, 0])).unwrap(), 8);
        assert_eq!(weyl_dim_sl(&sl(&[1, 0, 0, 0, 0])).unwrap(), 5);
        assert_eq!(dim_so4(1, 0).unwrap(), 2);
        assert_eq!(dim_so4(0, 0).unwrap(), 1);
        assert_eq!(dim_so4(3, 0).unwrap(), 4);
    }

    #[test]
    fn rejects_increasing_weight() {
        assert!(SlHighestWeight::new(vec![0, 1]).is_err());
        assert!(SlHighestWeight::new(vec![]).is_err());
    }

    #[test]
    fn module_dims() {
        let u11 = ModuleDescriptor::new(vec![1, 1, 1, 1, 0], (0, 1)).unwrap();
        assert_eq!(dim_module(&u11).unwrap(), 10);
        let u00 = ModuleDescriptor::new(vec![0, 0, 0], (1, 0)).unwrap();
        assert_eq!(dim_module(&u00).unwrap(), 2);
        let u31 = ModuleDescriptor::new(vec![2, 1, 0], (0, 1)).unwrap();
        assert_eq!(dim_module(&u31).unwrap(), 16);
    }

    #[test]
    fn largest_supported_rank_fits() {
        // the biggest closed-form modules for k = 16
        for i in 3..=32usize {
            for j in (i % 2..=i.min(32 - i)).step_by(2) {
                let twos = 16 - (i + j) / 2;
                let mut hw = vec![2; twos];
                hw.extend(std::iter::repeat_n(1, j));
                hw.extend(std::iter::repeat_n(0, (i - j) / 2));
                weyl_dim_sl(&sl(&hw)).unwrap();
            }
        }
    }

    proptest! {
        #[test]
        fn shift_invariance(mut e in proptest::collection::vec(0u32..6, 1..6), c in 0u32..10) {
            e.sort_unstable_by(|a, b| b.cmp(a));
            let base = weyl_dim_sl(&sl(&e)).unwrap();
            let shifted: Vec<u32> = e.iter().map(|x| x + c).collect();
            prop_assert_eq!(weyl_dim_sl(&sl(&shifted)).unwrap(), base);
            prop_assert_eq!(weyl_dim_sl(&sl(&e).normalized()).unwrap(), base);
        }
    }
}
