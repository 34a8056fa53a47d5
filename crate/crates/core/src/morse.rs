//! Morse presentations of cabled diagrams and their transfer evaluation.
//!
//! A diagram is swept bottom to top. The sweep front is the ordered list of
//! strand ends crossing the current level; a crossing can be attached when
//! the front ends heading into it form a contiguous block whose slots read,
//! left to right, as a counterclockwise-consecutive run around the
//! crossing. Each attachment emits cup/cap/crossing slices; the base word
//! is then expanded n-fold into the cabled word with one projector slice
//! per component.
//!
//! Evaluation keeps a state vector over crossingless matchings of the
//! current boundary with Laurent-polynomial coefficients; projector
//! denominators are accumulated separately and divided out at the end.

use std::collections::BTreeMap;


use crate::cable::CabledDiagram;
use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::jw;
use crate::poly::LaurentPoly;
use crate::ratfn::RationalFn;
use crate::tl::{CrossingKind, Matching};

/// One slice of a Morse word. Positions are 1-based strand indices;
/// `Cup(p)` inserts a minimum whose two new ends sit at positions p, p+1,
/// `Cap(p)` joins the ends at positions p, p+1, `Crossing(p, _)` crosses
/// strands p and p+1, and `Projector(p, w)` applies a width-w Jones-Wenzl
/// projector to strands p..p+w-1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Slice {
    Cup(usize),
    Cap(usize),
    Crossing(usize, CrossingKind),
    Projector(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorseWord {
    pub slices: Vec<Slice>,
    pub peak_width: usize,
}

impl MorseWord {
    pub fn crossing_slices(&self) -> usize {
        self.slices
            .iter()
            .filter(|s| matches!(s, Slice::Crossing(..)))
            .count()
    }

    pub fn projector_slices(&self) -> usize {
        self.slices
            .iter()
            .filter(|s| matches!(s, Slice::Projector(..)))
            .count()
    }

    fn validate(&self) -> Result<()> {
        let mut width = 0usize;
        let mut peak = 0usize;
        for s in &self.slices {
            match *s {
                Slice::Cup(p) => {
                    if p < 1 || p > width + 1 {
                        return Err(Error::MorseizationFailed(format!(
                            "cup at {p} on width {width}"
                        )));
                    }
                    width += 2;
                }
                Slice::Cap(p) => {
                    if p < 1 || p + 1 > width {
                        return Err(Error::MorseizationFailed(format!(
                            "cap at {p} on width {width}"
                        )));
                    }
                    width -= 2;
                }
                Slice::Crossing(p, _) => {
                    if p < 1 || p + 1 > width {
                        return Err(Error::MorseizationFailed(format!(
                            "crossing at {p} on width {width}"
                        )));
                    }
                }
                Slice::Projector(p, w) => {
                    if w < 1 || p < 1 || p + w - 1 > width {
                        return Err(Error::MorseizationFailed(format!(
                            "projector ({p},{w}) on width {width}"
                        )));
                    }
                }
            }
            peak = peak.max(width);
        }
        if width != 0 {
            return Err(Error::MorseizationFailed(format!(
                "word ends at width {width}"
            )));
        }
        if peak != self.peak_width {
            return Err(Error::MorseizationFailed(format!(
                "peak {} does not match recorded {}",
                peak, self.peak_width
            )));
        }
        Ok(())
    }
}

// Base-word slices carry 1-based positions on the base front.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum BaseSlice {
    Cup(usize),
    Cap(usize),
    Cross(usize, CrossingKind),
    Mark(usize, usize), // (position, component)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Dart {
    edge: usize,
    to_crossing: usize,
    to_slot: usize,
}

/// Greedy sweep of the base diagram into a sequence of base slices.
fn base_morse(d: &Diagram) -> Result<Vec<BaseSlice>> {
    let mut slices: Vec<BaseSlice> = Vec::new();
    // free circles first: each is a cup, a projector mark, and a cap
    for k in 0..d.free_circles {
        slices.push(BaseSlice::Cup(1));
        slices.push(BaseSlice::Mark(1, d.edge_components + k));
        slices.push(BaseSlice::Cap(1));
    }
    let c = d.crossing_count();
    let mut front: Vec<Dart> = Vec::new();
    let mut processed = vec![false; c];
    let mut marked = vec![false; d.edge_components];
    let proj_edges = d.component_lowest_edges();

    // dart for the upward half of `edge` emitted at (crossing, slot)
    let dart_from = |edge: usize, at_crossing: usize, at_slot: usize| -> Dart {
        let info = &d.edges[edge - 1];
        let other = *info
            .ends
            .iter()
            .find(|e| !(e.crossing == at_crossing && e.slot == at_slot))
            .expect("every edge has two distinct ends");
        Dart {
            edge,
            to_crossing: other.crossing,
            to_slot: other.slot,
        }
    };

    // record projector marks for darts that just appeared at `positions`
    let mark_new = |front: &Vec<Dart>,
                    positions: std::ops::Range<usize>,
                    marked: &mut Vec<bool>,
                    slices: &mut Vec<BaseSlice>,
                    d: &Diagram,
                    proj_edges: &[usize]| {
        for pos in positions {
            let dart = front[pos];
            let comp = d.component_of_edge(dart.edge);
            if !marked[comp] && proj_edges[comp] == dart.edge {
                marked[comp] = true;
                slices.push(BaseSlice::Mark(pos + 1, comp));
            }
        }
    };

    loop {
        // caps for adjacent ends of the same edge
        let mut capped = false;
        let mut i = 0;
        while i + 1 < front.len() {
            if front[i].edge == front[i + 1].edge {
                slices.push(BaseSlice::Cap(i + 1));
                front.drain(i..i + 2);
                capped = true;
                i = i.saturating_sub(1);
            } else {
                i += 1;
            }
        }
        if capped {
            continue;
        }

        // attachable crossings: front darts into the crossing must be one
        // contiguous block whose slots run counterclockwise left to right
        let mut best: Option<(usize, usize, usize)> = None; // (k, crossing, block start)
        for ci in 0..c {
            if processed[ci] {
                continue;
            }
            let positions: Vec<usize> = front
                .iter()
                .enumerate()
                .filter(|(_, dart)| dart.to_crossing == ci)
                .map(|(i, _)| i)
                .collect();
            let k = positions.len();
            if k == 0 {
                continue;
            }
            if positions.windows(2).any(|w| w[1] != w[0] + 1) {
                continue;
            }
            let start = positions[0];
            let u = front[start].to_slot;
            let ccw_run = (0..k).all(|j| front[start + j].to_slot == (u + j) % 4);
            if !ccw_run {
                continue;
            }
            if best.is_none_or(|(bk, _, _)| k > bk) {
                best = Some((k, ci, start));
            }
        }

        if let Some((k, ci, start)) = best {
            processed[ci] = true;
            let t = &d.crossings[ci];
            let u = front[start].to_slot;
            // within the emitted crossing box, the counterclockwise corner
            // order (SW, SE, NE, NW) holds slots (w, w+1, w+2, w+3)
            let w = match k {
                1 | 2 => u,
                3 | 4 => (u + 1) % 4,
                _ => unreachable!(),
            };
            // the ascending (SW-NE) strand holds slots {w, w+2}, and the
            // over-strand occupies the odd slots {1, 3}
            let kind = if w % 2 == 1 {
                CrossingKind::AscendingOver
            } else {
                CrossingKind::DescendingOver
            };
            let up_dart = |slot: usize| dart_from(t.edges[slot], ci, slot);
            match k {
                2 => {
                    // new ends: slot u+3 on the left, u+2 on the right
                    slices.push(BaseSlice::Cross(start + 1, kind));
                    front[start] = up_dart((u + 3) % 4);
                    front[start + 1] = up_dart((u + 2) % 4);
                    mark_new(&front, start..start + 2, &mut marked, &mut slices, d, &proj_edges);
                }
                3 => {
                    slices.push(BaseSlice::Cross(start + 2, kind));
                    slices.push(BaseSlice::Cap(start + 1));
                    front[start] = up_dart((u + 3) % 4);
                    front.drain(start + 1..start + 3);
                    mark_new(&front, start..start + 1, &mut marked, &mut slices, d, &proj_edges);
                }
                4 => {
                    slices.push(BaseSlice::Cross(start + 2, kind));
                    slices.push(BaseSlice::Cap(start + 1));
                    slices.push(BaseSlice::Cap(start + 1));
                    front.drain(start..start + 4);
                }
                1 => {
                    // cup to the right of the single leg, then cross
                    slices.push(BaseSlice::Cup(start + 2));
                    slices.push(BaseSlice::Cross(start + 1, kind));
                    front[start] = up_dart((u + 3) % 4);
                    front.insert(start + 1, up_dart((u + 2) % 4));
                    front.insert(start + 2, up_dart((u + 1) % 4));
                    mark_new(&front, start..start + 3, &mut marked, &mut slices, d, &proj_edges);
                }
                _ => unreachable!(),
            }
            continue;
        }

        // fresh start for a crossing with no front presence
        if let Some(ci) = (0..c).find(|&ci| {
            !processed[ci] && front.iter().all(|dart| dart.to_crossing != ci)
        }) {
            processed[ci] = true;
            let t = &d.crossings[ci];
            let base = front.len();
            // two cups side by side, then cross the middle pair; the box
            // corners (SW, SE, NE, NW) hold slots (0, 1, 2, 3)
            slices.push(BaseSlice::Cup(base + 1));
            slices.push(BaseSlice::Cup(base + 3));
            slices.push(BaseSlice::Cross(base + 2, CrossingKind::DescendingOver));
            let up_dart = |slot: usize| dart_from(t.edges[slot], ci, slot);
            front.push(up_dart(0));
            front.push(up_dart(3));
            front.push(up_dart(2));
            front.push(up_dart(1));
            mark_new(&front, base..base + 4, &mut marked, &mut slices, d, &proj_edges);
            continue;
        }

        if processed.iter().all(|&p| p) && front.is_empty() {
            break;
        }
        if processed.iter().all(|&p| p) && !front.is_empty() {
            // only cap pairs remain but none adjacent: stuck
            return Err(Error::MorseizationFailed(
                "remaining strand ends cannot be capped planarly".into(),
            ));
        }
        return Err(Error::MorseizationFailed(
            "no crossing is attachable to the sweep front".into(),
        ));
    }
    Ok(slices)
}

/// Expand the base word n-fold into the cabled Morse word.
fn cable_word(base: &[BaseSlice], n: usize) -> MorseWord {
    let mut slices = Vec::new();
    let mut width = 0usize;
    let mut peak = 0usize;
    let at = |p: usize| (p - 1) * n + 1;
    for s in base {
        match *s {
            BaseSlice::Cup(p) => {
                // nested cups make n parallel strands
                for i in 0..n {
                    slices.push(Slice::Cup(at(p) + i));
                }
                width += 2 * n;
            }
            BaseSlice::Cap(p) => {
                for i in 0..n {
                    slices.push(Slice::Cap(at(p) + n - 1 - i));
                }
                width -= 2 * n;
            }
            BaseSlice::Cross(p, kind) => {
                // block transposition of two n-strand bundles
                let offset = at(p) - 1;
                for r in 1..=n {
                    for j in (r..=(n + r - 1)).rev() {
                        slices.push(Slice::Crossing(offset + j, kind));
                    }
                }
            }
            BaseSlice::Mark(p, _comp) => {
                slices.push(Slice::Projector(at(p), n));
            }
        }
        peak = peak.max(width);
    }
    MorseWord {
        slices,
        peak_width: peak,
    }
}

/// Build the Morse word of a cabled diagram.
pub fn morseize(cd: &CabledDiagram) -> Result<MorseWord> {
    let base = base_morse(&cd.base)?;
    let word = cable_word(&base, cd.cable_width);
    word.validate()?;
    Ok(word)
}

pub const DEFAULT_WIDTH_CAP: usize = 16;

#[derive(Debug, Clone, Copy)]
pub struct EvalConfig {
    pub width_cap: usize,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig {
            width_cap: DEFAULT_WIDTH_CAP,
        }
    }
}

type StateVec = BTreeMap<Matching, LaurentPoly>;

fn add_into(state: &mut StateVec, m: Matching, c: LaurentPoly) {
    if c.is_zero() {
        return;
    }
    match state.entry(m) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += &c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// Insert a matched pair at 0-based positions (i, i+1).
fn matching_cup(m: &Matching, i: usize) -> Matching {
    let old = m.points();
    let mut pairs: Vec<(usize, usize)> = Vec::with_capacity(old / 2 + 1);
    let lift = |p: usize| if p >= i { p + 2 } else { p };
    for (a, b) in m.pairs() {
        pairs.push((lift(a), lift(b)));
    }
    pairs.push((i, i + 1));
    Matching::from_pairs(old + 2, &pairs).expect("cup keeps planarity")
}

/// Join the points at 0-based positions (i, i+1); returns the new matching
/// and whether a closed loop (delta factor) appeared.
fn matching_cap(m: &Matching, i: usize) -> (Matching, bool) {
    let old = m.points();
    let drop = |p: usize| if p > i + 1 { p - 2 } else { p };
    let mut pairs: Vec<(usize, usize)> = Vec::with_capacity(old / 2 - 1);
    if m.partner(i) == i + 1 {
        for (a, b) in m.pairs() {
            if a != i {
                pairs.push((drop(a), drop(b)));
            }
        }
        return (
            Matching::from_pairs(old - 2, &pairs).expect("cap keeps planarity"),
            true,
        );
    }
    let pa = m.partner(i);
    let pb = m.partner(i + 1);
    for (a, b) in m.pairs() {
        if a == i || a == i + 1 || b == i || b == i + 1 {
            continue;
        }
        pairs.push((drop(a), drop(b)));
    }
    pairs.push((drop(pa.min(pb)), drop(pa.max(pb))));
    (
        Matching::from_pairs(old - 2, &pairs).expect("cap keeps planarity"),
        false,
    )
}

/// Glue a TL_w basis matching onto state positions p..p+w-1 (0-based p).
/// Returns the resulting boundary matching and the number of closed loops.
fn glue_block(state: &Matching, term: &Matching, p: usize) -> (Matching, usize) {
    let wpts = state.points();
    let w = term.points() / 2;
    let total = wpts + 2 * w;
    let mut parent: Vec<usize> = (0..total).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let union = |a: usize, b: usize, parent: &mut Vec<usize>| {
        let (ra, rb) = (find(parent, a), find(parent, b));
        if ra != rb {
            parent[ra] = rb;
        }
    };
    for (a, b) in state.pairs() {
        union(a, b, &mut parent);
    }
    for (a, b) in term.pairs() {
        union(wpts + a, wpts + b, &mut parent);
    }
    // bottom point j of the block glues to state position p+j
    for j in 0..w {
        union(p + j, wpts + j, &mut parent);
    }
    // composite boundary, left to right: state points outside the block,
    // with the block replaced by the term's top (top position j is point
    // 2w-1-j of the term)
    let boundary: Vec<usize> = (0..wpts)
        .map(|pos| {
            if pos < p || pos >= p + w {
                pos
            } else {
                wpts + (2 * w - 1 - (pos - p))
            }
        })
        .collect();
    let mut rep_first: BTreeMap<usize, usize> = BTreeMap::new();
    let mut pairs = Vec::with_capacity(wpts / 2);
    for (idx, &node) in boundary.iter().enumerate() {
        let r = find(&mut parent, node);
        if let Some(&other) = rep_first.get(&r) {
            pairs.push((other, idx));
            rep_first.remove(&r);
        } else {
            rep_first.insert(r, idx);
        }
    }
    debug_assert!(rep_first.is_empty());
    let mut roots = std::collections::BTreeSet::new();
    for x in 0..total {
        roots.insert(find(&mut parent, x));
    }
    let mut boundary_roots = std::collections::BTreeSet::new();
    for &b in &boundary {
        boundary_roots.insert(find(&mut parent, b));
    }
    let loops = roots.len() - boundary_roots.len();
    (
        Matching::from_pairs(wpts, &pairs).expect("glue keeps planarity"),
        loops,
    )
}

/// Transfer evaluation of a Morse word. The result is exact; projector
/// denominators are accumulated and divided out at the end.
pub fn evaluate_morse(word: &MorseWord, config: &EvalConfig) -> Result<RationalFn> {
    if word.peak_width > config.width_cap {
        return Err(Error::WidthOverflow {
            width: word.peak_width,
            cap: config.width_cap,
        });
    }
    word.validate()?;
    let delta = LaurentPoly::delta();
    let mut state: StateVec = BTreeMap::new();
    state.insert(Matching::from_pairs(0, &[]).unwrap(), LaurentPoly::one());
    let mut denominator = LaurentPoly::one();
    for slice in &word.slices {
        let mut next: StateVec = BTreeMap::new();
        match *slice {
            Slice::Cup(p) => {
                for (m, c) in state {
                    add_into(&mut next, matching_cup(&m, p - 1), c);
                }
            }
            Slice::Cap(p) => {
                for (m, c) in state {
                    let (res, looped) = matching_cap(&m, p - 1);
                    let coeff = if looped { &c * &delta } else { c };
                    add_into(&mut next, res, coeff);
                }
            }
            Slice::Crossing(p, kind) => {
                let (id_w, cap_w) = kind.weights();
                for (m, c) in state {
                    // identity smoothing keeps the matching
                    add_into(&mut next, m.clone(), &c * &id_w);
                    // cap-cup smoothing: cap then re-cup at the same spot
                    let (capped, looped) = matching_cap(&m, p - 1);
                    let recupped = matching_cup(&capped, p - 1);
                    let mut coeff = &c * &cap_w;
                    if looped {
                        coeff = &coeff * &delta;
                    }
                    add_into(&mut next, recupped, coeff);
                }
            }
            Slice::Projector(p, w) => {
                let cleared = jw::jw_cleared(w)?;
                denominator = &denominator * &cleared.denominator;
                for (m, c) in state {
                    for (term, num) in &cleared.terms {
                        let (res, loops) = glue_block(&m, term, p - 1);
                        let mut coeff = &c * num;
                        for _ in 0..loops {
                            coeff = &coeff * &delta;
                        }
                        add_into(&mut next, res, coeff);
                    }
                }
            }
        }
        state = next;
    }
    let scalar = state
        .get(&Matching::from_pairs(0, &[]).unwrap())
        .cloned()
        .unwrap_or_else(LaurentPoly::zero);
    debug_assert!(state.len() <= 1);
    Ok(RationalFn::new(scalar, denominator))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cable::cable;
    use crate::diagram::parse_pd;
    use crate::kauffman::bracket_oracle;
    use crate::oracle::cabled_bracket_brute;

    fn eval(text: &str, n: usize, cap: usize) -> RationalFn {
        let d = parse_pd(text).unwrap();
        let cd = cable(&d, n).unwrap();
        let word = morseize(&cd).unwrap();
        evaluate_morse(&word, &EvalConfig { width_cap: cap }).unwrap()
    }

    #[test]
    fn bare_circle() {
        let v = eval("O", 1, 16);
        assert_eq!(v, RationalFn::from_poly(LaurentPoly::delta()));
    }

    #[test]
    fn cabled_unknot_gives_closure() {
        for n in 1..=5 {
            let v = eval("O", n, 16);
            assert_eq!(
                v,
                RationalFn::from_poly(jw::jw_closure_value(n as i64).unwrap()),
                "n={n}"
            );
        }
    }

    #[test]
    fn word_shapes() {
        let d = parse_pd("X 1 2 2 1").unwrap();
        let w1 = morseize(&cable(&d, 1).unwrap()).unwrap();
        assert_eq!(w1.crossing_slices(), 1);
        assert_eq!(w1.projector_slices(), 1);

        let t = parse_pd("X 1 4 2 5 / X 3 6 4 1 / X 5 2 6 3").unwrap();
        let w2 = morseize(&cable(&t, 2).unwrap()).unwrap();
        assert_eq!(w2.crossing_slices(), 12);
        assert_eq!(w2.projector_slices(), 1);
        assert!(w2.peak_width <= 8, "peak {}", w2.peak_width);
    }

    #[test]
    fn transfer_matches_bracket_at_width_one() {
        for text in [
            "O",
            "O / O",
            "X 1 2 2 1",
            "X 2 2 1 1",
            "X 4 2 3 1 / X 3 2 4 1",
            "X 1 4 2 5 / X 3 6 4 1 / X 5 2 6 3",
            "X 4 2 5 1 / X 8 6 1 5 / X 6 3 7 4 / X 2 7 3 8",
            "X 1 6 2 7 / X 7 2 8 3 / X 3 8 4 9 / X 4 10 5 9 / X 5 10 6 1",
        ] {
            let d = parse_pd(text).unwrap();
            let transfer = eval(text, 1, 16);
            let brute = RationalFn::from_poly(bracket_oracle(&d).unwrap());
            assert_eq!(transfer, brute, "{text}");
        }
    }

    #[test]
    fn transfer_matches_cabled_brute_at_width_two() {
        for text in [
            "X 1 2 2 1",
            "X 2 2 1 1",
            "X 4 2 3 1 / X 3 2 4 1",
            "X 1 4 2 5 / X 3 6 4 1 / X 5 2 6 3",
        ] {
            let d = parse_pd(text).unwrap();
            let transfer = eval(text, 2, 16);
            let brute = cabled_bracket_brute(&d, 2, 12).unwrap();
            assert_eq!(transfer, brute, "{text}");
        }
    }

    #[test]
    fn unlink_squares_the_closure() {
        for n in 1..=3 {
            let v = eval("O / O", n, 16);
            let one = jw::jw_closure_value(n as i64).unwrap();
            assert_eq!(v, RationalFn::from_poly(&one * &one), "n={n}");
        }
    }

    #[test]
    fn width_cap_enforced() {
        let d = parse_pd("X 1 2 2 1").unwrap();
        let cd = cable(&d, 3).unwrap();
        let word = morseize(&cd).unwrap();
        assert!(matches!(
            evaluate_morse(&word, &EvalConfig { width_cap: 8 }),
            Err(Error::WidthOverflow { .. })
        ));
    }
}
