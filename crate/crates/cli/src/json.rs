//! JSON records. Weights are always doubled integers (`weight2`).

use serde::{Deserialize, Serialize};

use kdirac_core::bgg::BggDiagram;
use kdirac_core::pushdown::{ComplexDescriptor, VertexImage};
use kdirac_core::{HasseDiagram, HasseVertex, ModuleDescriptor, Weight};

pub fn to_string<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("records serialize");
    s.push('\n');
    s
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImageRecord {
    pub degree: Option<u8>,
    pub weight2: Option<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexRecord {
    pub s: usize,
    pub t: usize,
    pub i: usize,
    pub j: usize,
    pub weight2: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub image: Option<ImageRecord>,
}

impl VertexRecord {
    fn new(v: HasseVertex, w: &Weight) -> Self {
        Self {
            s: v.s,
            t: v.t,
            i: v.row(),
            j: v.col(),
            weight2: w.doubled().to_vec(),
            image: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexRecord {
    pub positions: Vec<usize>,
    pub terms: Vec<Vec<ModuleDescriptor>>,
    pub orders: Vec<u32>,
}

impl ComplexRecord {
    pub fn new(c: &ComplexDescriptor) -> Self {
        Self {
            positions: c.positions(),
            terms: c
                .terms
                .iter()
                .map(|t| t.entries.iter().map(|e| e.descriptor.clone()).collect())
                .collect(),
            orders: c.operator_orders.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub k: usize,
    pub seed: Vec<i64>,
    pub vertices: Vec<VertexRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub complex: Option<ComplexRecord>,
}

impl Report {
    pub fn bgg(d: &BggDiagram) -> Self {
        Self {
            k: d.k(),
            seed: d.seed().doubled().to_vec(),
            vertices: d.entries().map(|(v, w)| VertexRecord::new(v, w)).collect(),
            complex: None,
        }
    }

    pub fn full(d: &BggDiagram, images: &[VertexImage], complex: &ComplexDescriptor) -> Self {
        let vertices = images
            .iter()
            .map(|img| VertexRecord {
                image: Some(ImageRecord {
                    degree: img.image.degree(),
                    weight2: img.image.weight().map(|w| w.doubled().to_vec()),
                }),
                ..VertexRecord::new(img.vertex, &img.weight)
            })
            .collect();
        Self {
            k: d.k(),
            seed: d.seed().doubled().to_vec(),
            vertices,
            complex: Some(ComplexRecord::new(complex)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeRecord {
    pub source: String,
    pub target: String,
    pub label: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HasseVertexRecord {
    pub s: usize,
    pub t: usize,
    pub i: usize,
    pub j: usize,
    pub name: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HasseRecord {
    pub k: usize,
    pub vertices: Vec<HasseVertexRecord>,
    pub edges: Vec<EdgeRecord>,
}

impl HasseRecord {
    pub fn new(d: &HasseDiagram) -> Self {
        Self {
            k: d.k(),
            vertices: d
                .vertices()
                .iter()
                .map(|v| HasseVertexRecord {
                    s: v.s,
                    t: v.t,
                    i: v.row(),
                    j: v.col(),
                    name: v.name(),
                })
                .collect(),
            edges: d
                .edges()
                .iter()
                .map(|e| EdgeRecord {
                    source: e.source.name(),
                    target: e.target.name(),
                    label: e.label.to_string(),
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use kdirac_core::{build_bgg, build_complex, canonical_seed, direct_images};

    #[test]
    fn report_round_trips() {
        for k in 2..=6 {
            let d = build_bgg(k, &canonical_seed(k).unwrap()).unwrap();
            let r = Report::full(&d, &direct_images(&d).unwrap(), &build_complex(k).unwrap());
            let back: Report = serde_json::from_str(&to_string(&r)).unwrap();
            assert_eq!(back, r);
            let b = Report::bgg(&d);
            let back: Report = serde_json::from_str(&to_string(&b)).unwrap();
            assert_eq!(back, b);
        }
    }

    #[test]
    fn no_image_serializes_as_nulls() {
        let d = build_bgg(3, &canonical_seed(3).unwrap()).unwrap();
        let r = Report::full(&d, &direct_images(&d).unwrap(), &build_complex(3).unwrap());
        let v: serde_json::Value = serde_json::from_str(&to_string(&r)).unwrap();
        let a20 = &v["vertices"][2];
        assert_eq!(a20["i"], 2);
        assert!(a20["image"]["degree"].is_null());
        assert!(a20["image"]["weight2"].is_null());
        assert_eq!(v["complex"]["terms"][0][0]["so4"], serde_json::json!([1, 0]));
    }
}
