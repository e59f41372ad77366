//! Weight-labelled relative BGG diagram and its row bundles.

use crate::error::{Error, Result};
use crate::hasse::{self, HasseDiagram, HasseEdge, HasseVertex};
use crate::weights::{root_vector, ParabolicMarking, Weight};

/// Order of every operator in the relative BGG sequence.
pub const RELATIVE_OPERATOR_ORDER: u32 = 1;

/// `1/2 [-3, ..., -3 | -3 | 3]`.
pub fn canonical_seed(k: usize) -> Result<Weight> {
    hasse::check_rank(k)?;
    let mut coords2 = vec![-3; k + 2];
    coords2[k + 1] = 3;
    Weight::from_doubled(k, coords2)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BggDiagram {
    hasse: HasseDiagram,
    seed: Weight,
    // parallel to `hasse.vertices()`
    weights: Vec<Weight>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowBundle {
    pub row: usize,
    pub summands: Vec<(HasseVertex, Weight)>,
}

/// Labels every vertex `v` with `seed - sum of the roots in inversion_set(v)`.
///
/// The seed must be `q`-dominant. The result is checked against the edge
/// recurrence `weight(target) = weight(source) - root(label)`.
pub fn build_bgg(k: usize, seed: &Weight) -> Result<BggDiagram> {
    let hasse = hasse::build_hasse(k)?;
    if seed.k() != k {
        return Err(Error::RankMismatch { left: k, right: seed.k() });
    }
    seed.require_dominant(ParabolicMarking::Q)?;

    let weights = hasse
        .vertices()
        .iter()
        .map(|&v| {
            hasse::inversion_set(v, k)?
                .into_iter()
                .try_fold(seed.clone(), |acc, r| acc.checked_sub(&root_vector(r, k)?))
        })
        .collect::<Result<Vec<_>>>()?;

    let diagram = BggDiagram {
        hasse,
        seed: seed.clone(),
        weights,
    };
    for edge in diagram.hasse.edges() {
        let expected = diagram.weight(edge.source).checked_sub(&root_vector(edge.label, k)?)?;
        if &expected != diagram.weight(edge.target) {
            return Err(Error::Structural(format!(
                "edge {} -> {} breaks the weight recurrence",
                edge.source.name(),
                edge.target.name()
            )));
        }
    }
    Ok(diagram)
}

impl BggDiagram {
    pub fn k(&self) -> usize {
        self.hasse.k()
    }

    pub fn seed(&self) -> &Weight {
        &self.seed
    }

    pub fn hasse(&self) -> &HasseDiagram {
        &self.hasse
    }

    pub fn edges(&self) -> &[HasseEdge] {
        self.hasse.edges()
    }

    /// Panics if `v` is not a vertex of this diagram.
    pub fn weight(&self, v: HasseVertex) -> &Weight {
        let idx = self
            .hasse
            .index_of(v)
            .unwrap_or_else(|| panic!("({}, {}) is not a vertex for k = {}", v.s, v.t, self.k()));
        &self.weights[idx]
    }

    /// `(vertex, weight)` pairs ordered by row, then column.
    pub fn entries(&self) -> impl Iterator<Item = (HasseVertex, &Weight)> + '_ {
        self.hasse.vertices().iter().copied().zip(&self.weights)
    }
}

/// One bundle per row `0..=2k`, summands ordered by column.
pub fn row_bundles(d: &BggDiagram) -> Vec<RowBundle> {
    (0..d.hasse.row_count())
        .map(|row| RowBundle {
            row,
            summands: d.hasse.row(row).map(|v| (v, d.weight(v).clone())).collect(),
        })
        .collect()
}
