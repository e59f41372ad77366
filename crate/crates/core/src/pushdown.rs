//! Direct images of the relative BGG weights and the resulting complex on `G/P`.
//!
//! Each `q`-dominant weight either is already `p`-dominant (image in degree 0),
//! becomes `p`-dominant after the affine reflection in `alpha_{k+1,k+2}`
//! (image in degree 1), or is fixed by that reflection (no image). For the
//! canonical seed rows 0 and 1 land in degree 1, row 2 vanishes and every
//! later row lands in degree 0.

use serde::{Deserialize, Serialize};

use crate::bgg::{build_bgg, canonical_seed, BggDiagram};
use crate::dims;
use crate::error::{Error, Result};
use crate::hasse::{self, HasseVertex};
use crate::weights::{affine_last_reflection, ParabolicMarking, Weight};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DirectImage {
    Degree0(Weight),
    Degree1(Weight),
    NoImage,
}

impl DirectImage {
    pub fn degree(&self) -> Option<u8> {
        match self {
            DirectImage::Degree0(_) => Some(0),
            DirectImage::Degree1(_) => Some(1),
            DirectImage::NoImage => None,
        }
    }

    pub fn weight(&self) -> Option<&Weight> {
        match self {
            DirectImage::Degree0(w) | DirectImage::Degree1(w) => Some(w),
            DirectImage::NoImage => None,
        }
    }
}

pub fn direct_image(weight: &Weight) -> Result<DirectImage> {
    weight.require_dominant(ParabolicMarking::Q)?;
    if !weight.is_integral() {
        return Err(Error::InvalidParameter(format!(
            "{weight} mixes integer and half-integer coordinates"
        )));
    }
    if weight.is_dominant(ParabolicMarking::P) {
        return Ok(DirectImage::Degree0(weight.clone()));
    }
    let reflected = affine_last_reflection(weight);
    if &reflected == weight {
        return Ok(DirectImage::NoImage);
    }
    if reflected.is_dominant(ParabolicMarking::P) {
        return Ok(DirectImage::Degree1(reflected));
    }
    Err(Error::Structural(format!(
        "no direct-image case applies to the q-dominant weight {weight}"
    )))
}

/// `U = V (x) W`: an `sl_k` highest weight (last entry 0) and an `so_4`
/// highest weight `a w'_{k+1} + b w'_{k+2}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ModuleDescriptor {
    #[serde(rename = "slk")]
    pub slk_hw: Vec<u32>,
    #[serde(rename = "so4")]
    pub so4_hw: (u32, u32),
    pub dim: u64,
}

impl ModuleDescriptor {
    /// Normalizes `slk_hw` to end in 0 and fills in the dimension.
    pub fn new(slk_hw: Vec<u32>, so4_hw: (u32, u32)) -> Result<Self> {
        let hw = dims::SlHighestWeight::new(slk_hw)?.normalized();
        let mut m = Self {
            slk_hw: hw.entries().to_vec(),
            so4_hw,
            dim: 0,
        };
        m.dim = dims::dim_module(&m)?;
        Ok(m)
    }

    pub fn is_trivial_slk(&self) -> bool {
        self.slk_hw.iter().all(|&e| e == 0)
    }
}

/// Reads the `sl_k x so_4` highest weights off a `p`-weight.
///
/// The first `k` coordinates are shifted by a common constant so the smallest
/// is 0 (e.g. `1/2 [-3,-3,-5|` becomes `[1,1,0|`); the last two give
/// `a = l_{k+1} - l_{k+2}`, `b = l_{k+1} + l_{k+2}`.
pub fn descriptor_from_weight(weight: &Weight) -> Result<ModuleDescriptor> {
    let k = weight.k();
    let lead = &weight.doubled()[..k];
    if lead.windows(2).any(|p| p[0] < p[1]) {
        return Err(Error::DominanceViolation {
            marking: ParabolicMarking::P,
            inequality: format!("first {k} coordinates of {weight} are not nonincreasing"),
        });
    }
    let min = lead[k - 1];
    let slk_hw = lead
        .iter()
        .map(|&c| {
            let d = c - min;
            if d % 2 != 0 {
                return Err(Error::InvalidParameter(format!(
                    "{weight} has a non-integral sl_{k} part"
                )));
            }
            u32::try_from(d / 2).map_err(|_| Error::Overflow("sl_k highest weight"))
        })
        .collect::<Result<Vec<_>>>()?;

    let (x, y) = (weight.coord2(k + 1), weight.coord2(k + 2));
    let (a2, b2) = (x - y, x + y);
    if a2 < 0 || b2 < 0 || a2 % 2 != 0 || b2 % 2 != 0 {
        return Err(Error::DominanceViolation {
            marking: ParabolicMarking::P,
            inequality: format!("so_4 part of {weight} is not a dominant integral weight"),
        });
    }
    let to_u32 = |v: i64| u32::try_from(v / 2).map_err(|_| Error::Overflow("so_4 highest weight"));
    ModuleDescriptor::new(slk_hw, (to_u32(a2)?, to_u32(b2)?))
}

/// Closed form of `U_ij`: `sl_k` weight `[2^{k-(i+j)/2}, 1^j, 0^{(i-j)/2}]`
/// and `so_4` weight `(i-3, j)` for rows `i >= 3`; `Sp_-` at `(0,0)` and
/// `C^k (x) Sp_+` at `(1,1)`.
pub fn closed_descriptor(i: usize, j: usize, k: usize) -> Result<ModuleDescriptor> {
    hasse::check_rank(k)?;
    match (i, j) {
        (0, 0) => return ModuleDescriptor::new(vec![0; k], (1, 0)),
        (1, 1) => {
            let mut hw = vec![1; k];
            hw[k - 1] = 0;
            return ModuleDescriptor::new(hw, (0, 1));
        }
        (2, _) => {
            return Err(Error::InvalidParameter(
                "row 2 has no direct image".to_string(),
            ))
        }
        _ => {}
    }
    let v = HasseVertex::from_row_col(i, j, k)?;
    if v.row() < 3 {
        return Err(Error::InvalidParameter(format!("no module at row {i}, column {j}")));
    }
    let mut hw = vec![2; k - v.s];
    hw.extend(std::iter::repeat_n(1, j));
    hw.extend(std::iter::repeat_n(0, v.t));
    let to_u32 = |x: usize| u32::try_from(x).map_err(|_| Error::Overflow("so_4 highest weight"));
    ModuleDescriptor::new(hw, (to_u32(i - 3)?, to_u32(j)?))
}

/// Order of a homogeneous operator between two terms: the drop of the
/// `gl_k` grading, i.e. of the sum of the first `k` coordinates.
pub fn operator_order(src: &Weight, dst: &Weight) -> Result<u32> {
    if src.k() != dst.k() {
        return Err(Error::RankMismatch { left: src.k(), right: dst.k() });
    }
    let drop2 = src.leading_sum2() - dst.leading_sum2();
    if drop2 <= 0 || drop2 % 2 != 0 {
        return Err(Error::Structural(format!(
            "no operator of positive integral order from {src} to {dst}"
        )));
    }
    u32::try_from(drop2 / 2).map_err(|_| Error::Overflow("operator order"))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexImage {
    pub vertex: HasseVertex,
    pub weight: Weight,
    pub image: DirectImage,
}

/// Direct image of every vertex weight, in row/column order.
pub fn direct_images(d: &BggDiagram) -> Result<Vec<VertexImage>> {
    d.entries()
        .map(|(vertex, weight)| {
            Ok(VertexImage {
                vertex,
                weight: weight.clone(),
                image: direct_image(weight)?,
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermEntry {
    pub vertex: HasseVertex,
    /// The `p`-weight after pushing down.
    pub weight: Weight,
    pub descriptor: ModuleDescriptor,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexTerm {
    pub position: usize,
    pub entries: Vec<TermEntry>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComplexArrow {
    pub from: HasseVertex,
    pub to: HasseVertex,
    pub order: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexDescriptor {
    pub k: usize,
    pub terms: Vec<ComplexTerm>,
    /// `operator_orders[n]` is the order of the map out of `terms[n]`.
    pub operator_orders: Vec<u32>,
    pub arrows: Vec<ComplexArrow>,
}

impl ComplexDescriptor {
    pub fn positions(&self) -> Vec<usize> {
        self.terms.iter().map(|t| t.position).collect()
    }

    pub fn widths(&self) -> Vec<usize> {
        self.terms.iter().map(|t| t.entries.len()).collect()
    }
}

fn expected_degree(row: usize) -> Option<u8> {
    match row {
        0 | 1 => Some(1),
        2 => None,
        _ => Some(0),
    }
}

/// Pushes the canonical relative BGG diagram down to `G/P`.
///
/// Every descriptor is computed twice, from its image weight and from the
/// closed form, and the two must agree.
pub fn build_complex(k: usize) -> Result<ComplexDescriptor> {
    let bgg = build_bgg(k, &canonical_seed(k)?)?;
    let images = direct_images(&bgg)?;

    let mut terms: Vec<ComplexTerm> = Vec::new();
    for img in images {
        let row = img.vertex.row();
        if img.image.degree() != expected_degree(row) {
            return Err(Error::Structural(format!(
                "{} has direct image degree {:?}, expected {:?}",
                img.vertex.name(),
                img.image.degree(),
                expected_degree(row)
            )));
        }
        let Some(weight) = img.image.weight() else {
            continue;
        };
        let descriptor = descriptor_from_weight(weight)?;
        let closed = closed_descriptor(row, img.vertex.col(), k)?;
        if descriptor != closed {
            return Err(Error::Structural(format!(
                "{}: weight gives {descriptor:?}, closed form gives {closed:?}",
                img.vertex.name()
            )));
        }
        let entry = TermEntry {
            vertex: img.vertex,
            weight: weight.clone(),
            descriptor,
        };
        match terms.last_mut() {
            Some(term) if term.position == row => term.entries.push(entry),
            _ => terms.push(ComplexTerm {
                position: row,
                entries: vec![entry],
            }),
        }
    }

    let mut operator_orders = Vec::with_capacity(terms.len().saturating_sub(1));
    let mut arrows = Vec::new();
    for pair in terms.windows(2) {
        let (src, dst) = (&pair[0], &pair[1]);
        let mut order = None;
        for a in &src.entries {
            for b in &dst.entries {
                let o = operator_order(&a.weight, &b.weight)?;
                if *order.get_or_insert(o) != o {
                    return Err(Error::Structural(format!(
                        "orders out of position {} disagree",
                        src.position
                    )));
                }
                if b.vertex.s >= a.vertex.s && b.vertex.t >= a.vertex.t {
                    arrows.push(ComplexArrow {
                        from: a.vertex,
                        to: b.vertex,
                        order: o,
                    });
                }
            }
        }
        operator_orders.push(order.expect("terms are nonempty"));
    }

    Ok(ComplexDescriptor {
        k,
        terms,
        operator_orders,
        arrows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w3(c: [i64; 5]) -> Weight {
        Weight::from_doubled(3, c.to_vec()).unwrap()
    }

    #[test]
    fn direct_image_examples() {
        assert_eq!(
            direct_image(&w3([-3, -3, -3, -3, 3])).unwrap(),
            DirectImage::Degree1(w3([-3, -3, -3, 1, -1]))
        );
        assert_eq!(direct_image(&w3([-3, -3, -7, -1, 1])).unwrap(), DirectImage::NoImage);
        assert_eq!(
            direct_image(&w3([-3, -5, -7, 1, 1])).unwrap(),
            DirectImage::Degree0(w3([-3, -5, -7, 1, 1]))
        );
    }

    #[test]
    fn direct_image_preconditions() {
        assert!(matches!(
            direct_image(&w3([-3, -1, -3, -3, 3])),
            Err(Error::DominanceViolation { .. })
        ));
        // mixed parity: none of the three cases can fire
        assert!(matches!(
            direct_image(&w3([0, 0, 0, -1, 2])),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn descriptors_from_weights() {
        let m = descriptor_from_weight(&w3([-3, -3, -5, 1, 1])).unwrap();
        assert_eq!((m.slk_hw.as_slice(), m.so4_hw, m.dim), (&[1, 1, 0][..], (0, 1), 6));
        let m = descriptor_from_weight(&w3([-3, -3, -3, 1, -1])).unwrap();
        assert_eq!((m.slk_hw.as_slice(), m.so4_hw), (&[0, 0, 0][..], (1, 0)));
        let m = descriptor_from_weight(&w3([-5, -5, -5, 3, 3])).unwrap();
        assert_eq!((m.slk_hw.as_slice(), m.so4_hw), (&[0, 0, 0][..], (0, 3)));
        assert_eq!(m, closed_descriptor(3, 3, 3).unwrap());
        assert!(descriptor_from_weight(&w3([-3, -3, -3, -3, 3])).is_err());
    }

    #[test]
    fn closed_forms() {
        let m = closed_descriptor(3, 1, 3).unwrap();
        assert_eq!((m.slk_hw, m.so4_hw), (vec![2, 1, 0], (0, 1)));
        let m = closed_descriptor(6, 0, 3).unwrap();
        assert_eq!((m.slk_hw.clone(), m.so4_hw), (vec![0, 0, 0], (3, 0)));
        assert_eq!(m, descriptor_from_weight(&w3([-7, -7, -7, 3, -3])).unwrap());
        let m = closed_descriptor(1, 1, 5).unwrap();
        assert_eq!((m.slk_hw.clone(), m.so4_hw, m.dim), (vec![1, 1, 1, 1, 0], (0, 1), 10));
        assert!(closed_descriptor(2, 0, 3).is_err());
        assert!(closed_descriptor(2, 2, 3).is_err());
        assert!(closed_descriptor(3, 2, 3).is_err());
        assert!(closed_descriptor(7, 1, 3).is_err());
        assert!(closed_descriptor(1, 1, 1).is_err());
    }

    #[test]
    fn operator_orders() {
        let sp_minus = w3([-3, -3, -3, 1, -1]);
        let ck_sp_plus = w3([-3, -3, -5, 1, 1]);
        let u31 = w3([-3, -5, -7, 1, 1]);
        let u40 = w3([-3, -7, -7, 1, -1]);
        assert_eq!(operator_order(&sp_minus, &ck_sp_plus).unwrap(), 1);
        assert_eq!(operator_order(&ck_sp_plus, &u31).unwrap(), 2);
        assert_eq!(operator_order(&u31, &u40).unwrap(), 1);
        assert!(operator_order(&u31, &ck_sp_plus).is_err());
        assert!(operator_order(&u31, &u31).is_err());
    }

    #[test]
    fn complex_shapes() {
        let c3 = build_complex(3).unwrap();
        assert_eq!(c3.positions(), vec![0, 1, 3, 4, 5, 6]);
        assert_eq!(c3.widths(), vec![1, 1, 2, 2, 1, 1]);
        assert_eq!(c3.operator_orders, vec![1, 2, 1, 1, 1]);

        let c2 = build_complex(2).unwrap();
        assert_eq!(c2.positions(), vec![0, 1, 3, 4]);
        assert_eq!(c2.widths(), vec![1, 1, 1, 1]);

        let c5 = build_complex(5).unwrap();
        assert_eq!(c5.positions(), vec![0, 1, 3, 4, 5, 6, 7, 8, 9, 10]);
        assert_eq!(c5.widths(), vec![1, 1, 2, 3, 3, 3, 2, 2, 1, 1]);
        assert_eq!(c5.terms[1].entries[0].descriptor, closed_descriptor(1, 1, 5).unwrap());
        let doubles: Vec<_> = c5.arrows.iter().filter(|a| a.order == 2).collect();
        assert_eq!(doubles.len(), 2);
        assert!(doubles.iter().all(|a| a.from == HasseVertex::new(1, 0)));
    }

    #[test]
    fn degree_pattern_for_all_ranks() {
        for k in 2..=12 {
            let d = build_bgg(k, &canonical_seed(k).unwrap()).unwrap();
            for img in direct_images(&d).unwrap() {
                assert_eq!(img.image.degree(), expected_degree(img.vertex.row()));
                match &img.image {
                    DirectImage::Degree0(w) => assert_eq!(w, &img.weight),
                    DirectImage::Degree1(w) => {
                        assert_eq!(w.doubled()[..k], img.weight.doubled()[..k]);
                        assert!(w.is_dominant(ParabolicMarking::P));
                    }
                    DirectImage::NoImage => {}
                }
            }
            let c = build_complex(k).unwrap();
            let mut orders = vec![1; 2 * k - 1];
            orders[1] = 2;
            assert_eq!(c.operator_orders, orders);
            assert_eq!(c.terms.len(), 2 * k);
        }
    }
}
