//! Blackboard cabling: n parallel copies of a diagram, with one projector
//! marker per component.
//!
//! Each base crossing becomes an n x n grid of cabled crossings; each base
//! component receives exactly one projector of width n, placed on the
//! cable of its lowest-numbered edge (any point of the component is
//! equivalent by isotopy; the fixed choice keeps runs deterministic).

use crate::diagram::Diagram;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrossingNode {
    pub base_crossing: usize,
    /// Lane of the under-bundle, 0-based from the left of the grid.
    pub under_lane: usize,
    /// Lane of the over-bundle, 0-based from the top of the grid.
    pub over_lane: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProjectorNode {
    pub component: usize,
    /// Base edge carrying the projector; None for a free circle.
    pub base_edge: Option<usize>,
    pub width: usize,
}

#[derive(Debug, Clone)]
pub struct CabledDiagram {
    pub base: Diagram,
    pub cable_width: usize,
    pub nodes: Vec<CrossingNode>,
    pub projectors: Vec<ProjectorNode>,
    /// Cabled crossings arising from a designated base crossing, as indices
    /// into `nodes`.
    pub loop_set: Option<Vec<usize>>,
}

impl CabledDiagram {
    pub fn crossing_count(&self) -> usize {
        self.nodes.len()
    }

    /// Tag the cabled crossings coming from the given base crossing.
    pub fn designate_loop_crossing(&mut self, base_crossing: usize) -> Result<()> {
        if base_crossing >= self.base.crossing_count() {
            return Err(Error::IndexOutOfRange {
                index: base_crossing,
                width: self.base.crossing_count(),
            });
        }
        self.loop_set = Some(
            self.nodes
                .iter()
                .enumerate()
                .filter(|(_, n)| n.base_crossing == base_crossing)
                .map(|(i, _)| i)
                .collect(),
        );
        Ok(())
    }
}

pub fn cable(d: &Diagram, n: usize) -> Result<CabledDiagram> {
    if n < 1 {
        return Err(Error::InvalidWidth(n));
    }
    let mut nodes = Vec::with_capacity(n * n * d.crossing_count());
    for ci in 0..d.crossing_count() {
        for under_lane in 0..n {
            for over_lane in 0..n {
                nodes.push(CrossingNode {
                    base_crossing: ci,
                    under_lane,
                    over_lane,
                });
            }
        }
    }
    let mut projectors = Vec::with_capacity(d.component_count());
    for (comp, lowest) in d.component_lowest_edges().iter().enumerate() {
        projectors.push(ProjectorNode {
            component: comp,
            base_edge: Some(*lowest),
            width: n,
        });
    }
    for k in 0..d.free_circles {
        projectors.push(ProjectorNode {
            component: d.edge_components + k,
            base_edge: None,
            width: n,
        });
    }
    Ok(CabledDiagram {
        base: d.clone(),
        cable_width: n,
        nodes,
        projectors,
        loop_set: None,
    })
}
