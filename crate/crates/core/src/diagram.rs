//! Planar link diagrams given as PD codes.
//!
//! A crossing `X a b c d` lists its four edge labels counterclockwise
//! starting from the incoming under-strand, and edges are numbered
//! sequentially along each component's orientation. `O` lines record
//! crossing-free circles. The parser validates the double-occurrence
//! condition, the component cycle structure, orientation consistency, and
//! planarity of the combinatorial map (Euler characteristic per connected
//! piece), and computes crossing signs.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Slot indices within a crossing tuple: 0 = a (incoming under), then
/// counterclockwise 1 = b, 2 = c (outgoing under), 3 = d.
pub type Slot = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Crossing {
    pub edges: [usize; 4],
    /// +1 or -1, derived from the orientation of the two strands.
    pub sign: i8,
}

/// Where an edge meets a crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeEnd {
    pub crossing: usize,
    pub slot: Slot,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeInfo {
    /// The two slot occurrences of this edge, in input order.
    pub ends: [EdgeEnd; 2],
    /// Index into `ends` of the head (the occurrence where the edge arrives).
    pub head: usize,
    pub component: usize,
}

impl EdgeInfo {
    pub fn head_end(&self) -> EdgeEnd {
        self.ends[self.head]
    }

    pub fn tail_end(&self) -> EdgeEnd {
        self.ends[1 - self.head]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    pub crossings: Vec<Crossing>,
    /// Count of crossing-free closed components.
    pub free_circles: usize,
    /// Edge metadata indexed by edge label - 1.
    pub edges: Vec<EdgeInfo>,
    /// Number of components that pass through crossings.
    pub edge_components: usize,
}

/// JSON mirror of the PD text format.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DiagramJson {
    pub crossings: Vec<[usize; 4]>,
    pub free_circles: usize,
}

impl Diagram {
    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Total components including free circles.
    pub fn component_count(&self) -> usize {
        self.edge_components + self.free_circles
    }

    /// Component index of each edge.
    pub fn component_of_edge(&self, edge: usize) -> usize {
        self.edges[edge - 1].component
    }

    /// The successor of an edge along its component's orientation.
    pub fn succ(&self, edge: usize) -> usize {
        let comp = self.edges[edge - 1].component;
        let (lo, hi) = self.component_range(comp);
        if edge == hi {
            lo
        } else {
            edge + 1
        }
    }

    /// Lowest and highest edge label of a crossing-component.
    pub fn component_range(&self, component: usize) -> (usize, usize) {
        let mut lo = usize::MAX;
        let mut hi = 0;
        for (i, e) in self.edges.iter().enumerate() {
            if e.component == component {
                lo = lo.min(i + 1);
                hi = hi.max(i + 1);
            }
        }
        (lo, hi)
    }

    /// Lowest edge label of each crossing-component, in component order.
    pub fn component_lowest_edges(&self) -> Vec<usize> {
        (0..self.edge_components)
            .map(|c| self.component_range(c).0)
            .collect()
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign as i64).sum()
    }

    /// Mirror image: over and under strands exchanged at every crossing,
    /// component orientations kept. The tuple is rotated so the old incoming
    /// over-strand becomes the new incoming under-strand; every sign flips.
    pub fn mirror(&self) -> Diagram {
        let mut crossings = Vec::with_capacity(self.crossings.len());
        // new slot occupied by each old slot, per crossing
        let mut slot_map: Vec<[usize; 4]> = Vec::with_capacity(self.crossings.len());
        for c in &self.crossings {
            let e = c.edges;
            let (rotated, perm) = if c.sign > 0 {
                // over runs d -> b, so the incoming over is at slot 3
                ([e[3], e[0], e[1], e[2]], [1usize, 2, 3, 0])
            } else {
                // over runs b -> d
                ([e[1], e[2], e[3], e[0]], [3usize, 0, 1, 2])
            };
            crossings.push(Crossing {
                edges: rotated,
                sign: -c.sign,
            });
            slot_map.push(perm);
        }
        let mut occurrences: Vec<Vec<EdgeEnd>> = vec![Vec::new(); self.edges.len() + 1];
        for (ci, c) in crossings.iter().enumerate() {
            for (slot, &e) in c.edges.iter().enumerate() {
                occurrences[e].push(EdgeEnd { crossing: ci, slot });
            }
        }
        let edges: Vec<EdgeInfo> = self
            .edges
            .iter()
            .enumerate()
            .map(|(i, info)| {
                let old_head = info.head_end();
                let new_head = EdgeEnd {
                    crossing: old_head.crossing,
                    slot: slot_map[old_head.crossing][old_head.slot],
                };
                let ends = [occurrences[i + 1][0], occurrences[i + 1][1]];
                let head = ends.iter().position(|&e| e == new_head).expect("head end");
                EdgeInfo {
                    ends,
                    head,
                    component: info.component,
                }
            })
            .collect();
        Diagram {
            crossings,
            free_circles: self.free_circles,
            edges,
            edge_components: self.edge_components,
        }
    }

    /// PD text serialization.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        for c in &self.crossings {
            out.push_str(&format!(
                "X {} {} {} {}\n",
                c.edges[0], c.edges[1], c.edges[2], c.edges[3]
            ));
        }
        for _ in 0..self.free_circles {
            out.push_str("O\n");
        }
        out
    }

    pub fn to_json(&self) -> DiagramJson {
        DiagramJson {
            crossings: self.crossings.iter().map(|c| c.edges).collect(),
            free_circles: self.free_circles,
        }
    }

    pub fn from_json(json: &DiagramJson) -> Result<Diagram> {
        let mut text = String::new();
        for e in &json.crossings {
            text.push_str(&format!("X {} {} {} {}\n", e[0], e[1], e[2], e[3]));
        }
        for _ in 0..json.free_circles {
            text.push_str("O\n");
        }
        parse_pd(&text)
    }
}

/// Parse the PD text format: `X a b c d` lines, `O` lines for free circles,
/// `/` accepted as a crossing separator, `#` starts a comment.
pub fn parse_pd(text: &str) -> Result<Diagram> {
    let mut tuples: Vec<[usize; 4]> = Vec::new();
    let mut free_circles = 0usize;
    for (lineno, raw_line) in text.lines().enumerate() {
        let line = match raw_line.find('#') {
            Some(i) => &raw_line[..i],
            None => raw_line,
        };
        for chunk in line.split('/') {
            let tokens: Vec<&str> = chunk.split_whitespace().collect();
            if tokens.is_empty() {
                continue;
            }
            match tokens[0] {
                "O" | "o" => {
                    if tokens.len() != 1 {
                        return Err(Error::MalformedLine {
                            line: lineno + 1,
                            reason: "O takes no arguments".into(),
                        });
                    }
                    free_circles += 1;
                }
                "X" | "x" => {
                    if tokens.len() != 5 {
                        return Err(Error::MalformedLine {
                            line: lineno + 1,
                            reason: format!("expected 4 edge labels, got {}", tokens.len() - 1),
                        });
                    }
                    let mut edges = [0usize; 4];
                    for (i, t) in tokens[1..].iter().enumerate() {
                        edges[i] = t.parse::<usize>().map_err(|_| Error::MalformedLine {
                            line: lineno + 1,
                            reason: format!("bad edge label {t:?}"),
                        })?;
                        if edges[i] == 0 {
                            return Err(Error::MalformedLine {
                                line: lineno + 1,
                                reason: "edge labels start at 1".into(),
                            });
                        }
                    }
                    tuples.push(edges);
                }
                other => {
                    return Err(Error::MalformedLine {
                        line: lineno + 1,
                        reason: format!("unknown record {other:?}"),
                    });
                }
            }
        }
    }
    build_diagram(tuples, free_circles)
}

fn build_diagram(mut tuples: Vec<[usize; 4]>, free_circles: usize) -> Result<Diagram> {
    let n_cross = tuples.len();
    // normalize labels to 1..=2c by rank
    let mut labels: Vec<usize> = tuples.iter().flatten().copied().collect();
    labels.sort_unstable();
    labels.dedup();
    if !labels.is_empty() {
        let rank: std::collections::HashMap<usize, usize> =
            labels.iter().enumerate().map(|(i, &l)| (l, i + 1)).collect();
        for t in tuples.iter_mut() {
            for e in t.iter_mut() {
                *e = rank[e];
            }
        }
    }
    let n_edges = labels.len();
    if n_cross > 0 && n_edges != 2 * n_cross {
        // some label count is off; find a witness
        let mut counts = vec![0usize; n_edges + 1];
        for t in &tuples {
            for &e in t {
                counts[e] += 1;
            }
        }
        for (label, &count) in counts.iter().enumerate().skip(1) {
            if count != 2 {
                return Err(Error::EdgeLabelCountNotTwo { label, count });
            }
        }
        return Err(Error::DisconnectedCycleInconsistency(
            "edge label set is not 1..=2c".into(),
        ));
    }
    let mut occurrences: Vec<Vec<EdgeEnd>> = vec![Vec::new(); n_edges + 1];
    for (ci, t) in tuples.iter().enumerate() {
        for (slot, &e) in t.iter().enumerate() {
            occurrences[e].push(EdgeEnd { crossing: ci, slot });
        }
    }
    for (label, occ) in occurrences.iter().enumerate().skip(1) {
        if occ.len() != 2 {
            return Err(Error::EdgeLabelCountNotTwo {
                label,
                count: occ.len(),
            });
        }
    }

    // components: union edges joined through a crossing (a-c and b-d pairs)
    let mut parent: Vec<usize> = (0..=n_edges).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for t in &tuples {
        let (a, b, c, d) = (t[0], t[1], t[2], t[3]);
        for (x, y) in [(a, c), (b, d)] {
            let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
            if rx != ry {
                parent[rx] = ry;
            }
        }
    }
    let mut component_of = vec![usize::MAX; n_edges + 1];
    let mut comp_count = 0usize;
    for e in 1..=n_edges {
        let r = find(&mut parent, e);
        if component_of[r] == usize::MAX {
            component_of[r] = comp_count;
            comp_count += 1;
        }
        component_of[e] = component_of[r];
    }
    // each component's labels must form a consecutive block
    let mut lo = vec![usize::MAX; comp_count];
    let mut hi = vec![0usize; comp_count];
    let mut size = vec![0usize; comp_count];
    for e in 1..=n_edges {
        let c = component_of[e];
        lo[c] = lo[c].min(e);
        hi[c] = hi[c].max(e);
        size[c] += 1;
    }
    for c in 0..comp_count {
        if hi[c] - lo[c] + 1 != size[c] {
            return Err(Error::DisconnectedCycleInconsistency(format!(
                "component edges {{{}..{}}} are not consecutive",
                lo[c], hi[c]
            )));
        }
    }
    let succ = |e: usize| -> usize {
        let c = component_of[e];
        if e == hi[c] {
            lo[c]
        } else {
            e + 1
        }
    };

    // orientation: determine each edge's head occurrence.
    // a-slots are heads, c-slots are tails; propagate through over-strands.
    const UNKNOWN: u8 = 2;
    let mut head_of: Vec<[u8; 1]> = vec![[UNKNOWN]; n_edges + 1]; // index into occurrences
    let set_head = |head_of: &mut Vec<[u8; 1]>, e: usize, occ_idx: usize| -> Result<()> {
        let cur = head_of[e][0];
        if cur == UNKNOWN {
            head_of[e][0] = occ_idx as u8;
            Ok(())
        } else if cur as usize == occ_idx {
            Ok(())
        } else {
            Err(Error::DisconnectedCycleInconsistency(format!(
                "edge {e} is oriented inconsistently"
            )))
        }
    };
    for (ci, t) in tuples.iter().enumerate() {
        // slot 0 (a): incoming under = head of edge t[0]
        let a_occ = occurrences[t[0]]
            .iter()
            .position(|o| o.crossing == ci && o.slot == 0)
            .unwrap();
        set_head(&mut head_of, t[0], a_occ)?;
        // slot 2 (c): outgoing under = tail, so head is the other occurrence
        let c_occ = occurrences[t[2]]
            .iter()
            .position(|o| o.crossing == ci && o.slot == 2)
            .unwrap();
        set_head(&mut head_of, t[2], 1 - c_occ)?;
    }
    // propagate over-strand orientations until settled
    let mut signs: Vec<Option<i8>> = vec![None; n_cross];
    loop {
        let mut progressed = false;
        for (ci, t) in tuples.iter().enumerate() {
            if signs[ci].is_some() {
                continue;
            }
            let (b, d) = (t[1], t[3]);
            let b_occ = occurrences[b]
                .iter()
                .position(|o| o.crossing == ci && o.slot == 1)
                .unwrap();
            let d_occ = occurrences[d]
                .iter()
                .position(|o| o.crossing == ci && o.slot == 3)
                .unwrap();
            let b_role = head_of[b][0];
            let d_role = head_of[d][0];
            let b_is_head = b_role != UNKNOWN && b_role as usize == b_occ;
            let b_is_tail = b_role != UNKNOWN && b_role as usize != b_occ;
            let d_is_head = d_role != UNKNOWN && d_role as usize == d_occ;
            let d_is_tail = d_role != UNKNOWN && d_role as usize != d_occ;
            // over-in must be a head and over-out its successor
            let choose = if d_is_head || b_is_tail {
                Some(1) // over runs d -> b: positive
            } else if b_is_head || d_is_tail {
                Some(-1) // over runs b -> d: negative
            } else {
                None
            };
            if let Some(s) = choose {
                let (over_in, over_out, in_occ, out_occ) = if s > 0 {
                    (d, b, d_occ, b_occ)
                } else {
                    (b, d, b_occ, d_occ)
                };
                if succ(over_in) != over_out {
                    return Err(Error::DisconnectedCycleInconsistency(format!(
                        "over-strand at crossing {} does not follow the edge numbering",
                        ci + 1
                    )));
                }
                set_head(&mut head_of, over_in, in_occ)?;
                set_head(&mut head_of, over_out, 1 - out_occ)?;
                signs[ci] = Some(s);
                progressed = true;
            }
        }
        if progressed {
            continue;
        }
        // components passing over everywhere leave a free orientation choice;
        // fix it deterministically at the lowest-index unresolved crossing.
        let Some(ci) = signs.iter().position(|s| s.is_none()) else {
            break;
        };
        let t = tuples[ci];
        let (b, d) = (t[1], t[3]);
        let s = if succ(d) == b {
            1
        } else if succ(b) == d {
            -1
        } else {
            return Err(Error::DisconnectedCycleInconsistency(format!(
                "over-strand at crossing {} does not follow the edge numbering",
                ci + 1
            )));
        };
        let (over_in, in_occ_slot) = if s > 0 { (d, 3) } else { (b, 1) };
        let in_occ = occurrences[over_in]
            .iter()
            .position(|o| o.crossing == ci && o.slot == in_occ_slot)
            .unwrap();
        set_head(&mut head_of, over_in, in_occ)?;
        signs[ci] = Some(s);
    }
    // under-strand consistency: c must follow a
    for (ci, t) in tuples.iter().enumerate() {
        if succ(t[0]) != t[2] {
            return Err(Error::DisconnectedCycleInconsistency(format!(
                "under-strand at crossing {} does not follow the edge numbering",
                ci + 1
            )));
        }
    }

    // planarity of the combinatorial map: Euler characteristic 2 per
    // connected piece of the 4-valent graph.
    if n_cross > 0 {
        validate_planarity(&tuples, &occurrences)?;
    }

    let edges: Vec<EdgeInfo> = (1..=n_edges)
        .map(|e| EdgeInfo {
            ends: [occurrences[e][0], occurrences[e][1]],
            head: head_of[e][0] as usize,
            component: component_of[e],
        })
        .collect();
    let crossings: Vec<Crossing> = tuples
        .iter()
        .zip(signs.iter())
        .map(|(t, s)| Crossing {
            edges: *t,
            sign: s.expect("all signs resolved"),
        })
        .collect();
    Ok(Diagram {
        crossings,
        free_circles,
        edges,
        edge_components: comp_count,
    })
}

/// Check V - E + F = 2 on every connected piece of the rotation system.
fn validate_planarity(tuples: &[[usize; 4]], occurrences: &[Vec<EdgeEnd>]) -> Result<()> {
    let n_cross = tuples.len();
    // darts: (crossing, slot); alpha maps a dart to the other end of its edge
    let dart_id = |end: EdgeEnd| end.crossing * 4 + end.slot;
    let mut alpha = vec![0usize; 4 * n_cross];
    for occ in occurrences.iter().skip(1) {
        let (u, v) = (occ[0], occ[1]);
        alpha[dart_id(u)] = dart_id(v);
        alpha[dart_id(v)] = dart_id(u);
    }
    // faces: orbits of dart -> next-CCW-slot(alpha(dart))
    let phi = |d: usize| -> usize {
        let a = alpha[d];
        (a / 4) * 4 + (a % 4 + 1) % 4
    };
    let mut face_seen = vec![false; 4 * n_cross];
    let mut faces_of_piece = std::collections::HashMap::new();
    // connected pieces of the crossing graph
    let mut piece = vec![usize::MAX; n_cross];
    let mut piece_count = 0;
    for start in 0..n_cross {
        if piece[start] != usize::MAX {
            continue;
        }
        let mut stack = vec![start];
        piece[start] = piece_count;
        while let Some(c) = stack.pop() {
            for slot in 0..4 {
                let other = alpha[c * 4 + slot] / 4;
                if piece[other] == usize::MAX {
                    piece[other] = piece_count;
                    stack.push(other);
                }
            }
        }
        piece_count += 1;
    }
    for d in 0..4 * n_cross {
        if face_seen[d] {
            continue;
        }
        let mut cur = d;
        loop {
            face_seen[cur] = true;
            cur = phi(cur);
            if cur == d {
                break;
            }
        }
        *faces_of_piece.entry(piece[d / 4]).or_insert(0usize) += 1;
    }
    for p in 0..piece_count {
        let v = piece.iter().filter(|&&x| x == p).count() as i64;
        let e = 2 * v; // 4 darts per vertex, 2 per edge
        let f = *faces_of_piece.get(&p).unwrap_or(&0) as i64;
        if v - e + f != 2 {
            return Err(Error::DisconnectedCycleInconsistency(format!(
                "PD code is not planar (V-E+F = {} on one piece)",
                v - e + f
            )));
        }
    }
    Ok(())
}
