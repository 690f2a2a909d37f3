//! Graphs with a nested edge filtration E₀ ⊆ E₁ ⊆ … ⊆ E_l.

use std::collections::BTreeSet;

use super::decorated::DecoratedGraph;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MarkedGraph {
    pub graph: DecoratedGraph,
    /// Sets of edge indices (positions in [`DecoratedGraph::edges`]). Empty means l = −1.
    pub filtration: Vec<BTreeSet<usize>>,
}

impl MarkedGraph {
    pub fn new(graph: DecoratedGraph, filtration: Vec<BTreeSet<usize>>) -> Result<Self> {
        let m = MarkedGraph { graph, filtration };
        m.validate()?;
        Ok(m)
    }

    /// The graph with the empty filtration.
    pub fn bare(graph: DecoratedGraph) -> Self {
        MarkedGraph { graph, filtration: vec![] }
    }

    pub fn validate(&self) -> Result<()> {
        self.graph.ensure_valid()?;
        let k = self.graph.edge_count();
        for (i, set) in self.filtration.iter().enumerate() {
            if let Some(&e) = set.iter().find(|&&e| e >= k) {
                return Err(Error::InvalidGraph(format!("E_{i} contains unknown edge {e}")));
            }
            if i > 0 && !self.filtration[i - 1].is_subset(set) {
                return Err(Error::InvalidGraph(format!("E_{} is not contained in E_{i}", i - 1)));
            }
        }
        Ok(())
    }

    /// l, with −1 for the empty filtration.
    pub fn length(&self) -> isize {
        self.filtration.len() as isize - 1
    }

    /// ∂_i: deletes E_i.
    pub fn remove_face(&self, i: usize) -> Result<MarkedGraph> {
        if i >= self.filtration.len() {
            return Err(Error::IndexOutOfRange { index: i, len: self.filtration.len() });
        }
        let mut m = self.clone();
        m.filtration.remove(i);
        Ok(m)
    }

    /// First filtration index containing each edge; `filtration.len()` for edges in no E_i.
    pub fn edge_levels(&self) -> Vec<usize> {
        (0..self.graph.edge_count())
            .map(|e| {
                self.filtration.iter().position(|s| s.contains(&e)).unwrap_or(self.filtration.len())
            })
            .collect()
    }

    /// |E₀|, …, |E_l|.
    pub fn signature(&self) -> Vec<usize> {
        self.filtration.iter().map(|s| s.len()).collect()
    }

    /// Edges outside E_l (all edges when the filtration is empty).
    pub fn free_edges(&self) -> Vec<usize> {
        let last = self.filtration.last();
        (0..self.graph.edge_count()).filter(|e| last.is_none_or(|s| !s.contains(e))).collect()
    }
}
