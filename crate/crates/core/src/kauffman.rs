//! Kauffman states: resolutions, state circles, state graphs, adequacy,
//! and the brute-force bracket as a sum over all states.
//!
//! At a crossing `(a, b, c, d)` with `a` the incoming under-strand, the
//! A-resolution joins a-b and c-d, the B-resolution joins a-d and b-c.
//! The bracket weights a state by `q^{(#B - #A)/2}` and every circle by
//! delta = -q - q^{-1}; a single positive kink then contributes the factor
//! `-q^{-3/2}` that the writhe normalization cancels, and a negative kink
//! contributes `-q^{3/2}`.

use num_bigint::BigInt;

use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::poly::{HalfInt, LaurentPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Resolution {
    A,
    B,
}

/// A choice of resolution on a subset of the crossings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KauffmanState {
    choices: Vec<Option<Resolution>>,
}

impl KauffmanState {
    pub fn new(crossings: usize) -> Self {
        KauffmanState {
            choices: vec![None; crossings],
        }
    }

    pub fn all_a(crossings: usize) -> Self {
        KauffmanState {
            choices: vec![Some(Resolution::A); crossings],
        }
    }

    pub fn all_b(crossings: usize) -> Self {
        KauffmanState {
            choices: vec![Some(Resolution::B); crossings],
        }
    }

    /// State from a bitmask: bit i set means the B-resolution at crossing i.
    pub fn from_mask(crossings: usize, mask: u64) -> Self {
        KauffmanState {
            choices: (0..crossings)
                .map(|i| {
                    Some(if mask >> i & 1 == 1 {
                        Resolution::B
                    } else {
                        Resolution::A
                    })
                })
                .collect(),
        }
    }

    pub fn set(&mut self, crossing: usize, r: Resolution) {
        self.choices[crossing] = Some(r);
    }

    pub fn choice(&self, crossing: usize) -> Option<Resolution> {
        self.choices[crossing]
    }

    pub fn len(&self) -> usize {
        self.choices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.choices.is_empty()
    }

    fn count(&self, r: Resolution) -> usize {
        self.choices.iter().filter(|c| **c == Some(r)).count()
    }

    /// Half the number of A-choices.
    pub fn sgn_a(&self) -> HalfInt {
        HalfInt::from_twice(self.count(Resolution::A) as i64)
    }

    /// Half the number of B-choices.
    pub fn sgn_b(&self) -> HalfInt {
        HalfInt::from_twice(self.count(Resolution::B) as i64)
    }

    /// sgn = sgn_B - sgn_A.
    pub fn sgn(&self) -> HalfInt {
        self.sgn_b() - self.sgn_a()
    }
}

/// The graph whose vertices are state circles and whose edges are the
/// crossing segments left behind by the resolutions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateGraph {
    pub circle_count: usize,
    /// (crossing index, circle, circle) per resolved crossing.
    pub edges: Vec<(usize, usize, usize)>,
    /// Crossing indices whose segment has equal endpoints.
    pub loops: Vec<usize>,
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }
    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

/// Resolve every crossing of `d` according to `state`.
pub fn resolve(d: &Diagram, state: &KauffmanState) -> Result<(usize, StateGraph)> {
    if state.len() != d.crossing_count() {
        return Err(Error::IncompleteState(state.len().min(d.crossing_count())));
    }
    let n_edges = d.edge_count();
    let mut dsu = Dsu::new(n_edges + 1);
    for (ci, c) in d.crossings.iter().enumerate() {
        let [a, b, cc, dd] = c.edges;
        match state.choice(ci).ok_or(Error::IncompleteState(ci))? {
            Resolution::A => {
                dsu.union(a, b);
                dsu.union(cc, dd);
            }
            Resolution::B => {
                dsu.union(a, dd);
                dsu.union(b, cc);
            }
        }
    }
    // canonical circle ids in order of first appearance
    let mut circle_id = std::collections::HashMap::new();
    for e in 1..=n_edges {
        let r = dsu.find(e);
        let next = circle_id.len();
        circle_id.entry(r).or_insert(next);
    }
    let mut edges = Vec::with_capacity(d.crossing_count());
    let mut loops = Vec::new();
    for (ci, c) in d.crossings.iter().enumerate() {
        let [a, _, cc, _] = c.edges;
        // the segment connects the circle through the a-b (or a-d) arc to
        // the one through c-d (or b-c); both arcs contain a and cc
        let u = circle_id[&dsu.find(a)];
        let v = circle_id[&dsu.find(cc)];
        edges.push((ci, u, v));
        if u == v {
            loops.push(ci);
        }
    }
    let circle_count = circle_id.len() + d.free_circles;
    Ok((
        circle_count,
        StateGraph {
            circle_count,
            edges,
            loops,
        },
    ))
}

pub fn all_a_graph(d: &Diagram) -> StateGraph {
    resolve(d, &KauffmanState::all_a(d.crossing_count()))
        .expect("all-A state is complete")
        .1
}

pub fn all_b_graph(d: &Diagram) -> StateGraph {
    resolve(d, &KauffmanState::all_b(d.crossing_count()))
        .expect("all-B state is complete")
        .1
}

pub fn is_a_adequate(d: &Diagram) -> bool {
    all_a_graph(d).loops.is_empty()
}

pub fn is_b_adequate(d: &Diagram) -> bool {
    all_b_graph(d).loops.is_empty()
}

/// The number of crossings whose all-A segments are one-edged loops.
pub fn loop_crossing_count(d: &Diagram) -> usize {
    all_a_graph(d).loops.len()
}

pub const DEFAULT_BRUTE_LIMIT: usize = 24;

/// The Kauffman bracket as an exact sum over all 2^c states:
/// sum of q^{(#B - #A)/2} * delta^{circles}.
pub fn bracket_oracle(d: &Diagram) -> Result<LaurentPoly> {
    bracket_oracle_with_limit(d, DEFAULT_BRUTE_LIMIT)
}

pub fn bracket_oracle_with_limit(d: &Diagram, limit: usize) -> Result<LaurentPoly> {
    let c = d.crossing_count();
    if c > limit {
        return Err(Error::TooManyCrossings {
            crossings: c,
            limit,
        });
    }
    // tally states by (#B - #A, circles), then expand
    let mut counts: std::collections::HashMap<(i64, usize), BigInt> =
        std::collections::HashMap::new();
    for mask in 0u64..(1u64 << c) {
        let state = KauffmanState::from_mask(c, mask);
        let (circles, _) = resolve(d, &state)?;
        let nb = mask.count_ones() as i64;
        let key = (2 * nb - c as i64, circles);
        *counts.entry(key).or_insert_with(|| BigInt::from(0u32)) += 1;
    }
    let delta = LaurentPoly::delta();
    let max_circles = counts.keys().map(|&(_, r)| r).max().unwrap_or(0);
    let mut delta_pows = vec![LaurentPoly::one()];
    for _ in 0..max_circles {
        let next = delta_pows.last().unwrap() * &delta;
        delta_pows.push(next);
    }
    let mut out = LaurentPoly::zero();
    for ((v_exp, circles), count) in counts {
        out += &delta_pows[circles].scale(&count).shift(v_exp);
    }
    Ok(out)
}

/// Independent circle counter used as a second oracle: traces each circle
/// through explicit edge ends instead of union-find over edge labels.
pub fn circle_count_by_tracing(d: &Diagram, state: &KauffmanState) -> Result<usize> {
    // nodes are edge ends: (edge, end index 0/1); the interior of an edge
    // connects its two ends; a resolution arc connects two specific ends.
    let n_edges = d.edge_count();
    let end_id = |edge: usize, which: usize| 2 * (edge - 1) + which;
    // which end of the edge sits at (crossing, slot)
    let end_at = |edge: usize, ci: usize, slot: usize| -> usize {
        let info = &d.edges[edge - 1];
        let pos = info
            .ends
            .iter()
            .position(|e| e.crossing == ci && e.slot == slot)
            .expect("edge end exists");
        end_id(edge, pos)
    };
    let mut arc: Vec<Option<usize>> = vec![None; 2 * n_edges];
    let connect = |x: usize, y: usize, arc: &mut Vec<Option<usize>>| {
        debug_assert!(arc[x].is_none() && arc[y].is_none());
        arc[x] = Some(y);
        arc[y] = Some(x);
    };
    for (ci, c) in d.crossings.iter().enumerate() {
        let [a, b, cc, dd] = c.edges;
        let (pairs, _) = match state.choice(ci).ok_or(Error::IncompleteState(ci))? {
            Resolution::A => ([(a, 0usize, b, 1usize), (cc, 2, dd, 3)], ()),
            Resolution::B => ([(a, 0, dd, 3), (b, 1, cc, 2)], ()),
        };
        for (e1, s1, e2, s2) in pairs {
            let x = end_at(e1, ci, s1);
            let y = end_at(e2, ci, s2);
            connect(x, y, &mut arc);
        }
    }
    let mut seen = vec![false; 2 * n_edges];
    let mut circles = 0;
    for start in 0..2 * n_edges {
        if seen[start] {
            continue;
        }
        circles += 1;
        let mut cur = start;
        loop {
            seen[cur] = true;
            // cross the edge interior
            let other = cur ^ 1;
            seen[other] = true;
            // follow the resolution arc
            cur = arc[other].expect("closed curves");
            if cur == start {
                break;
            }
        }
    }
    Ok(circles + d.free_circles)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_pd;
    use proptest::prelude::*;

    fn poly(pairs: &[(i64, i64)]) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for (e, c) in pairs {
            p.add_term(*e, BigInt::from(*c));
        }
        p
    }

    #[test]
    fn unknot_resolve() {
        let d = parse_pd("O").unwrap();
        let (circles, graph) = resolve(&d, &KauffmanState::new(0)).unwrap();
        assert_eq!(circles, 1);
        assert_eq!(graph.edges.len(), 0);
    }

    #[test]
    fn kink_chirality_split() {
        // the two kink chiralities produce one loop-graph and one path-graph
        let neg = parse_pd("X 1 2 2 1").unwrap();
        let pos = parse_pd("X 2 2 1 1").unwrap();
        let ga = all_a_graph(&neg);
        assert_eq!((ga.circle_count, ga.loops.len()), (1, 1));
        let gb = all_a_graph(&pos);
        assert_eq!((gb.circle_count, gb.loops.len()), (2, 0));
    }

    #[test]
    fn trefoil_adequate() {
        let d = parse_pd("X 1 4 2 5 / X 3 6 4 1 / X 5 2 6 3").unwrap();
        let a = all_a_graph(&d);
        let b = all_b_graph(&d);
        assert_eq!(a.circle_count + b.circle_count, 5);
        assert_eq!(a.circle_count, 3);
        assert!(a.loops.is_empty() && b.loops.is_empty());
        assert!(is_a_adequate(&d) && is_b_adequate(&d));
        assert_eq!(loop_crossing_count(&d), 0);
    }

    #[test]
    fn adequacy_mirrors() {
        for text in [
            "X 1 2 2 1",
            "X 2 2 1 1",
            "X 1 4 2 5 / X 3 6 4 1 / X 5 2 6 3",
            "X 4 2 3 1 / X 3 2 4 1",
            "X 4 2 5 1 / X 8 6 1 5 / X 6 3 7 4 / X 2 7 3 8",
        ] {
            let d = parse_pd(text).unwrap();
            assert_eq!(is_a_adequate(&d), is_b_adequate(&d.mirror()), "{text}");
            assert_eq!(is_b_adequate(&d), is_a_adequate(&d.mirror()), "{text}");
            // mirror swaps circle counts
            assert_eq!(
                all_a_graph(&d).circle_count,
                all_b_graph(&d.mirror()).circle_count,
                "{text}"
            );
        }
    }

    #[test]
    fn clasp_loops() {
        let d = parse_pd("X 4 2 3 1 / X 3 2 4 1").unwrap();
        let g = all_a_graph(&d);
        assert_eq!(g.circle_count, 1);
        assert_eq!(g.loops.len(), 2);
        assert!(!is_a_adequate(&d));
        assert!(!is_b_adequate(&d));
        assert_eq!(loop_crossing_count(&d), 2);
    }

    #[test]
    fn bracket_unknot() {
        let d = parse_pd("O").unwrap();
        assert_eq!(bracket_oracle(&d).unwrap(), LaurentPoly::delta());
    }

    #[test]
    fn bracket_kinks() {
        // negative kink: delta * (-q^{3/2}); positive kink: delta * (-q^{-3/2})
        let neg = parse_pd("X 1 2 2 1").unwrap();
        let kneg = bracket_oracle(&neg).unwrap();
        assert_eq!(
            kneg,
            &LaurentPoly::delta() * &LaurentPoly::monomial(3, BigInt::from(-1))
        );
        assert_eq!(kneg, poly(&[(1, 1), (5, 1)]));
        let pos = parse_pd("X 2 2 1 1").unwrap();
        assert_eq!(
            bracket_oracle(&pos).unwrap(),
            &LaurentPoly::delta() * &LaurentPoly::monomial(-3, BigInt::from(-1))
        );
    }

    #[test]
    fn bracket_one_crossing_definition() {
        // any 1-crossing diagram: bracket = q^{-1/2}<A> + q^{1/2}<B>
        for text in ["X 1 2 2 1", "X 2 2 1 1"] {
            let d = parse_pd(text).unwrap();
            let (ca, _) = resolve(&d, &KauffmanState::all_a(1)).unwrap();
            let (cb, _) = resolve(&d, &KauffmanState::all_b(1)).unwrap();
            let delta = LaurentPoly::delta();
            let expect = &delta.pow(ca as u32).shift(-1) + &delta.pow(cb as u32).shift(1);
            assert_eq!(bracket_oracle(&d).unwrap(), expect, "{text}");
        }
    }

    #[test]
    fn bracket_r2_invariance() {
        let clasp = parse_pd("X 4 2 3 1 / X 3 2 4 1").unwrap();
        let unlink = parse_pd("O / O").unwrap();
        assert_eq!(
            bracket_oracle(&clasp).unwrap(),
            bracket_oracle(&unlink).unwrap()
        );
    }

    #[test]
    fn brute_limit() {
        let d = parse_pd("X 1 2 2 1").unwrap();
        assert!(matches!(
            bracket_oracle_with_limit(&d, 0),
            Err(Error::TooManyCrossings { .. })
        ));
    }

    #[test]
    fn state_sgn_bookkeeping() {
        let mut s = KauffmanState::new(3);
        s.set(0, Resolution::A);
        s.set(1, Resolution::B);
        s.set(2, Resolution::B);
        assert_eq!(s.sgn_a(), HalfInt::from_twice(1));
        assert_eq!(s.sgn_b(), HalfInt::from_twice(2));
        assert_eq!(s.sgn(), HalfInt::from_twice(1));
        assert_eq!(s.sgn_a() + s.sgn_b(), HalfInt::from_twice(3));
    }

    proptest! {
        #[test]
        fn two_oracle_circle_agreement(mask in 0u64..32,
                                       which in 0usize..5) {
            let texts = [
                "X 1 2 2 1",
                "X 2 2 1 1",
                "X 1 4 2 5 / X 3 6 4 1 / X 5 2 6 3",
                "X 4 2 3 1 / X 3 2 4 1",
                "X 4 2 5 1 / X 8 6 1 5 / X 6 3 7 4 / X 2 7 3 8",
            ];
            let d = parse_pd(texts[which]).unwrap();
            let c = d.crossing_count();
            let state = KauffmanState::from_mask(c, mask & ((1 << c) - 1));
            let (fast, _) = resolve(&d, &state).unwrap();
            let slow = circle_count_by_tracing(&d, &state).unwrap();
            prop_assert_eq!(fast, slow);
        }
    }
}
