//! Brute-force reference evaluation of projector-decorated cables.
//!
//! Expands each component's Jones-Wenzl projector into its matching basis,
//! then sums the Kauffman bracket over all resolutions of every cabled
//! crossing, counting circles on an explicit port graph. Exponential in
//! n^2 * c; used as the independent oracle against the transfer evaluation.


use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::jw;
use crate::poly::LaurentPoly;
use crate::ratfn::RationalFn;
use crate::tl::Matching;

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }
    fn reset(&mut self) {
        for (i, p) in self.parent.iter_mut().enumerate() {
            *p = i;
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

/// Node layout per base crossing: 4n^2 mini-crossing ports followed by 4n
/// boundary ports (n per slot, indexed counterclockwise within the slot).
struct PortGraph {
    n: usize,
    per_crossing: usize,
    crossings: usize,
    proj_base: usize,
    components: usize,
}

const S: usize = 0;
const E: usize = 1;
const N: usize = 2;
const W: usize = 3;

impl PortGraph {
    fn new(crossings: usize, n: usize, components: usize) -> Self {
        let per_crossing = 4 * n * n + 4 * n;
        PortGraph {
            n,
            per_crossing,
            crossings,
            proj_base: crossings * per_crossing,
            components,
        }
    }

    fn total_nodes(&self) -> usize {
        self.proj_base + 2 * self.n * self.components
    }

    /// Port `dir` of the mini-crossing at (under lane x, over lane height h).
    fn mini(&self, ci: usize, x: usize, h: usize, dir: usize) -> usize {
        ci * self.per_crossing + 4 * (x * self.n + h) + dir
    }

    /// Boundary port k (counterclockwise within the slot) of a base slot.
    fn boundary(&self, ci: usize, slot: usize, k: usize) -> usize {
        ci * self.per_crossing + 4 * self.n * self.n + slot * self.n + k
    }

    /// Projector points: bottom j, then top position j (left to right).
    fn proj_bottom(&self, comp: usize, j: usize) -> usize {
        self.proj_base + 2 * self.n * comp + j
    }

    fn proj_top(&self, comp: usize, j: usize) -> usize {
        self.proj_base + 2 * self.n * comp + self.n + j
    }

    /// Wiring that does not depend on the state: the grid mesh and the
    /// edge bundles (with projector boxes spliced in).
    fn fixed_unions(&self, d: &Diagram, proj_edge_of_comp: &[Option<usize>]) -> Vec<(usize, usize)> {
        let n = self.n;
        let mut out = Vec::new();
        for ci in 0..self.crossings {
            for x in 0..n {
                for h in 0..n {
                    // vertical neighbors: south of (x,h) meets north of (x,h+1)
                    if h + 1 < n {
                        out.push((self.mini(ci, x, h, S), self.mini(ci, x, h + 1, N)));
                    } else {
                        // a_x sits at horizontal position x (CCW runs west to east)
                        out.push((self.mini(ci, x, h, S), self.boundary(ci, 0, x)));
                    }
                    if h == 0 {
                        // c ports run east to west: position x is c_{n-1-x}
                        out.push((self.mini(ci, x, h, N), self.boundary(ci, 2, n - 1 - x)));
                    }
                    // horizontal neighbors: west of (x,h) meets east of (x-1,h)
                    if x > 0 {
                        out.push((self.mini(ci, x, h, W), self.mini(ci, x - 1, h, E)));
                    } else {
                        // d ports run north to south: height h is d_h
                        out.push((self.mini(ci, x, h, W), self.boundary(ci, 3, h)));
                    }
                    if x == n - 1 {
                        // b ports run south to north: height h is b_{n-1-h}
                        out.push((self.mini(ci, x, h, E), self.boundary(ci, 1, n - 1 - h)));
                    }
                }
            }
        }
        // edge bundles: tail port s_k meets head port t_{n-1-k}, except on
        // the projector-carrying edge where the box is spliced in
        for (ei, info) in d.edges.iter().enumerate() {
            let edge = ei + 1;
            let tail = info.tail_end();
            let head = info.head_end();
            let carries = proj_edge_of_comp[info.component] == Some(edge);
            for k in 0..n {
                if carries {
                    // tail side faces the box bottom, head side its top
                    out.push((
                        self.boundary(tail.crossing, tail.slot, k),
                        self.proj_bottom(info.component, n - 1 - k),
                    ));
                    out.push((
                        self.proj_top(info.component, k),
                        self.boundary(head.crossing, head.slot, k),
                    ));
                } else {
                    out.push((
                        self.boundary(tail.crossing, tail.slot, k),
                        self.boundary(head.crossing, head.slot, n - 1 - k),
                    ));
                }
            }
        }
        out
    }
}

/// Evaluate the projector-decorated n-cable of `d` by brute force.
/// `state_limit` caps the number of cabled crossings (the sum ranges over
/// 2^(n^2 c) resolutions).
pub fn cabled_bracket_brute(d: &Diagram, n: usize, state_limit: usize) -> Result<RationalFn> {
    if n < 1 {
        return Err(Error::InvalidWidth(n));
    }
    let c = d.crossing_count();
    let cabled = n * n * c;
    if cabled > state_limit {
        return Err(Error::TooManyCrossings {
            crossings: cabled,
            limit: state_limit,
        });
    }
    let cleared = jw::jw_cleared(n)?;
    let comps = d.edge_components;
    let proj_edges: Vec<Option<usize>> = d.component_lowest_edges().iter().map(|&e| Some(e)).collect();
    let graph = PortGraph::new(c, n, comps);
    let fixed = graph.fixed_unions(d, &proj_edges);
    let delta = LaurentPoly::delta();
    let mut delta_pows = vec![LaurentPoly::one()];

    // iterate over all combinations of projector basis terms
    let term_count = cleared.terms.len().max(1);
    let mut term_choice = vec![0usize; comps];
    let mut numerator = LaurentPoly::zero();
    let mut dsu = Dsu::new(graph.total_nodes());
    loop {
        // coefficient product of the chosen terms (cleared numerators)
        let mut term_coeff = LaurentPoly::one();
        let mut matchings: Vec<&Matching> = Vec::with_capacity(comps);
        for comp in 0..comps {
            let (m, num) = &cleared.terms[term_choice[comp]];
            term_coeff = &term_coeff * num;
            matchings.push(m);
        }
        for mask in 0u64..(1u64 << cabled) {
            dsu.reset();
            for &(a, b) in &fixed {
                dsu.union(a, b);
            }
            for (comp, m) in matchings.iter().enumerate() {
                for (p, q) in m.pairs() {
                    let node = |pt: usize| {
                        if pt < n {
                            graph.proj_bottom(comp, pt)
                        } else {
                            graph.proj_top(comp, 2 * n - 1 - pt)
                        }
                    };
                    dsu.union(node(p), node(q));
                }
            }
            // resolve every mini-crossing; bit index = position in the cable
            let mut bit = 0usize;
            let mut b_count = 0i64;
            for ci in 0..c {
                for x in 0..n {
                    for h in 0..n {
                        if mask >> bit & 1 == 1 {
                            // B joins S-W and N-E
                            dsu.union(graph.mini(ci, x, h, S), graph.mini(ci, x, h, W));
                            dsu.union(graph.mini(ci, x, h, N), graph.mini(ci, x, h, E));
                            b_count += 1;
                        } else {
                            // A joins S-E and N-W
                            dsu.union(graph.mini(ci, x, h, S), graph.mini(ci, x, h, E));
                            dsu.union(graph.mini(ci, x, h, N), graph.mini(ci, x, h, W));
                        }
                        bit += 1;
                    }
                }
            }
            let mut circles = 0usize;
            for node in 0..graph.total_nodes() {
                if dsu.find(node) == node {
                    circles += 1;
                }
            }
            while delta_pows.len() <= circles {
                let next = delta_pows.last().unwrap() * &delta;
                delta_pows.push(next);
            }
            let weight = 2 * b_count - cabled as i64;
            numerator += &(&term_coeff * &delta_pows[circles]).shift(weight);
        }
        // advance the mixed-radix term choice
        let mut pos = 0;
        loop {
            if pos == comps {
                break;
            }
            term_choice[pos] += 1;
            if term_choice[pos] < term_count {
                break;
            }
            term_choice[pos] = 0;
            pos += 1;
        }
        if pos == comps {
            break;
        }
    }
    // divide by the cleared denominator once per component projector,
    // and close a projector around each free circle
    let mut denom = LaurentPoly::one();
    for _ in 0..comps {
        denom = &denom * &cleared.denominator;
    }
    let mut value = RationalFn::new(numerator, denom);
    if d.free_circles > 0 {
        let per_circle = RationalFn::from_poly(jw::jw_closure_value(n as i64)?);
        for _ in 0..d.free_circles {
            value *= &per_circle;
        }
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_pd;
    use crate::kauffman::bracket_oracle;
    use num_bigint::BigInt;

    #[test]
    fn width_one_matches_plain_bracket() {
        for text in [
            "O",
            "X 1 2 2 1",
            "X 2 2 1 1",
            "X 4 2 3 1 / X 3 2 4 1",
            "X 1 4 2 5 / X 3 6 4 1 / X 5 2 6 3",
        ] {
            let d = parse_pd(text).unwrap();
            let brute = cabled_bracket_brute(&d, 1, 24).unwrap();
            let plain = RationalFn::from_poly(bracket_oracle(&d).unwrap());
            assert_eq!(brute, plain, "{text}");
        }
    }

    #[test]
    fn cabled_unknot_closes_projector() {
        // the n-cable of the zero-crossing unknot evaluates to (-1)^n [n]
        let d = parse_pd("O").unwrap();
        for n in 1..=4 {
            let v = cabled_bracket_brute(&d, n, 24).unwrap();
            assert_eq!(
                v,
                RationalFn::from_poly(jw::jw_closure_value(n as i64).unwrap()),
                "n={n}"
            );
        }
    }

    #[test]
    fn cabled_kink_framing_factor() {
        // a negative kink multiplies the cabled evaluation by (-1)^n q^{(n^2+2n)/2}
        let d = parse_pd("X 1 2 2 1").unwrap();
        for n in 1..=2 {
            let v = cabled_bracket_brute(&d, n, 24).unwrap();
            let nn = n as i64;
            let factor = LaurentPoly::monomial(
                nn * nn + 2 * nn,
                if n % 2 == 1 {
                    BigInt::from(-1)
                } else {
                    BigInt::from(1)
                },
            );
            let expect = RationalFn::from_poly(
                &factor * &jw::jw_closure_value(nn).unwrap(),
            );
            assert_eq!(v, expect, "n={n}");
        }
    }
}
