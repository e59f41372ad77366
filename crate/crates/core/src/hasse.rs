//! Relative Hasse diagram of the fibration whose fibre is the Grassmannian of
//! 2-planes in `C^{k+2}`.
//!
//! A vertex is a pair `(s, t)` with `0 <= t <= s <= k`: `s` counts the
//! `alpha_{m,k+1}` roots and `t` the `beta_{m,k+2}` roots collected on the way
//! down from the source. The displayed labels are row `i = s + t` and column
//! `j = s - t`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weights::RootLabel;

/// Smallest rank for which the diagram (and the dead row 2 below it) makes sense.
pub const MIN_RANK: usize = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HasseVertex {
    pub s: usize,
    pub t: usize,
}

impl HasseVertex {
    pub fn new(s: usize, t: usize) -> Self {
        Self { s, t }
    }

    /// Vertex at row `i`, column `j`, if those indices describe one.
    pub fn from_row_col(i: usize, j: usize, k: usize) -> Result<Self> {
        if j > i || !(i - j).is_multiple_of(2) {
            return Err(Error::InvalidParameter(format!(
                "no vertex at row {i}, column {j}: need j <= i and i - j even"
            )));
        }
        let v = Self::new((i + j) / 2, (i - j) / 2);
        v.validate(k)?;
        Ok(v)
    }

    pub fn row(&self) -> usize {
        self.s + self.t
    }

    pub fn col(&self) -> usize {
        self.s - self.t
    }

    pub fn validate(&self, k: usize) -> Result<()> {
        if self.t > self.s || self.s > k {
            return Err(Error::InvalidParameter(format!(
                "vertex (s, t) = ({}, {}) violates 0 <= t <= s <= {k}",
                self.s, self.t
            )));
        }
        Ok(())
    }

    /// `A00`, `A31`, or `A10,0` once an index has two digits.
    pub fn name(&self) -> String {
        let (i, j) = (self.row(), self.col());
        if i < 10 && j < 10 {
            format!("A{i}{j}")
        } else {
            format!("A{i},{j}")
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HasseEdge {
    pub source: HasseVertex,
    pub target: HasseVertex,
    pub label: RootLabel,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HasseDiagram {
    k: usize,
    vertices: Vec<HasseVertex>,
    edges: Vec<HasseEdge>,
}

/// Label of the edge `(s, t) -> (s + 1, t)`.
pub fn alpha_step(s: usize, k: usize) -> RootLabel {
    RootLabel::alpha(k - s, k + 1)
}

/// Label of the edge `(s, t) -> (s, t + 1)`.
pub fn beta_step(t: usize, k: usize) -> RootLabel {
    RootLabel::beta(k - t, k + 2)
}

pub fn check_rank(k: usize) -> Result<()> {
    if k < MIN_RANK {
        return Err(Error::UnsupportedRank { k, min: MIN_RANK });
    }
    Ok(())
}

pub fn build_hasse(k: usize) -> Result<HasseDiagram> {
    check_rank(k)?;
    let mut vertices: Vec<HasseVertex> = (0..=k)
        .flat_map(|s| (0..=s).map(move |t| HasseVertex::new(s, t)))
        .collect();
    vertices.sort_by_key(|v| (v.row(), v.col()));

    let mut edges = Vec::new();
    for &v in &vertices {
        if v.s < k {
            edges.push(HasseEdge {
                source: v,
                target: HasseVertex::new(v.s + 1, v.t),
                label: alpha_step(v.s, k),
            });
        }
        if v.t < v.s {
            edges.push(HasseEdge {
                source: v,
                target: HasseVertex::new(v.s, v.t + 1),
                label: beta_step(v.t, k),
            });
        }
    }
    Ok(HasseDiagram { k, vertices, edges })
}

/// Roots collected on any path from the source to `v`.
pub fn inversion_set(v: HasseVertex, k: usize) -> Result<Vec<RootLabel>> {
    v.validate(k)?;
    let alphas = (k - v.s + 1..=k).map(|m| RootLabel::alpha(m, k + 1));
    let betas = (k - v.t + 1..=k).map(|m| RootLabel::beta(m, k + 2));
    let mut set: Vec<RootLabel> = alphas.chain(betas).collect();
    set.sort();
    Ok(set)
}

impl HasseDiagram {
    pub fn k(&self) -> usize {
        self.k
    }

    /// Vertices ordered by row, then column.
    pub fn vertices(&self) -> &[HasseVertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[HasseEdge] {
        &self.edges
    }

    pub fn source(&self) -> HasseVertex {
        HasseVertex::new(0, 0)
    }

    pub fn sink(&self) -> HasseVertex {
        HasseVertex::new(self.k, self.k)
    }

    pub fn row_count(&self) -> usize {
        2 * self.k + 1
    }

    /// Vertices of row `i`, by increasing column.
    pub fn row(&self, i: usize) -> impl Iterator<Item = HasseVertex> + '_ {
        self.vertices.iter().copied().filter(move |v| v.row() == i)
    }

    pub fn outgoing(&self, v: HasseVertex) -> impl Iterator<Item = &HasseEdge> + '_ {
        self.edges.iter().filter(move |e| e.source == v)
    }

    pub fn index_of(&self, v: HasseVertex) -> Option<usize> {
        self.vertices.iter().position(|&u| u == v)
    }
}
