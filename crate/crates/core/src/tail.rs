//! Stabilization, gap, and vanishing-window analysis of the low-degree
//! coefficients of the colored Jones polynomial.
//!
//! The stabilization comparison normalizes each polynomial by the sign of
//! its lowest coefficient: the evaluation carries a global sign `(-1)^n`
//! (already visible on the unknot, where it equals `(-1)^n [n]`), so raw
//! coefficients alternate while the normalized sequence stabilizes with
//! leading coefficient 1.

use num_bigint::BigInt;
use num_traits::Signed;
use serde::Serialize;

use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::jones::{colored_jones, writhe_factor, ColoredJonesResult};
use crate::kauffman::{all_a_graph, is_a_adequate, loop_crossing_count};
use crate::morse::EvalConfig;
use crate::poly::{HalfInt, LaurentPoly};

/// The diagrammatic lower bound
/// `h_n(D) = -(n^2/2) c(D) - n |s_A(D)| + w(D) (n^2+2n)/2`.
pub fn h_n(d: &Diagram, n: usize) -> HalfInt {
    let nn = n as i64;
    let c = d.crossing_count() as i64;
    let s_a = all_a_graph(d).circle_count as i64;
    let w = d.writhe();
    HalfInt::from_twice(-nn * nn * c - 2 * nn * s_a + w * (nn * nn + 2 * nn))
}

#[derive(Debug, Clone, Serialize)]
pub struct PerColor {
    pub n: usize,
    pub d_n: String,
    pub d_n_twice: i64,
    /// Coefficients of q^{d(n) + 2(i-2)} for i = 2..window+1, normalized by
    /// the sign of the lowest coefficient.
    pub low_coefficients: Vec<String>,
    pub lowest_sign: i8,
}

#[derive(Debug, Clone, Serialize)]
pub struct BetaEntry {
    pub i: usize,
    pub value: String,
    /// The colors over which the coefficient was checked to agree.
    pub checked_n: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct StabilizationReport {
    pub a_adequate: bool,
    /// True when the diagram was replaced by its mirror (head analysis).
    pub via_mirror: bool,
    pub n_max: usize,
    pub window: usize,
    pub per_n: Vec<PerColor>,
    pub betas: Vec<BetaEntry>,
    pub stabilization_ok: bool,
}

fn low_coefficients(r: &ColoredJonesResult, window: usize) -> (i8, Vec<BigInt>) {
    let minv = r
        .polynomial
        .min_v_degree()
        .expect("colored Jones is nonzero");
    let lowest = r.polynomial.coeff(minv);
    let sign: i8 = if lowest.is_negative() { -1 } else { 1 };
    let coeffs = (0..window)
        .map(|i| {
            let c = r.polynomial.coeff(minv + 4 * i as i64);
            if sign < 0 {
                -c
            } else {
                c
            }
        })
        .collect();
    (sign, coeffs)
}

/// Check coefficient stabilization at the tail for colors 2..=n_max.
///
/// For a diagram that is only adequate after mirroring, the analysis runs
/// on the mirror (the head of the original). A diagram adequate neither way
/// is still processed but flagged.
pub fn stabilization_check(
    d: &Diagram,
    n_max: usize,
    window: usize,
    config: &EvalConfig,
) -> Result<StabilizationReport> {
    if n_max < 2 {
        return Err(Error::InvalidArgument("n_max must be at least 2".into()));
    }
    let (target, via_mirror) = if !is_a_adequate(d) && is_a_adequate(&d.mirror()) {
        (d.mirror(), true)
    } else {
        (d.clone(), false)
    };
    let a_adequate = is_a_adequate(&target);
    // coefficient i is only expected to agree for colors n >= i
    let window = window.min(n_max.saturating_sub(1)).max(1);
    let mut per_n = Vec::new();
    let mut results = Vec::new();
    for n in 2..=n_max {
        let r = colored_jones(&target, n, config)
            .map_err(|e| Error::EvaluationLimit(e.to_string()))?;
        let (sign, coeffs) = low_coefficients(&r, window);
        per_n.push(PerColor {
            n,
            d_n: r.d_n.to_string(),
            d_n_twice: r.d_n.twice(),
            low_coefficients: coeffs.iter().map(|c| c.to_string()).collect(),
            lowest_sign: sign,
        });
        results.push(r);
    }
    let mut betas = Vec::new();
    let mut stabilization_ok = true;
    for i in 2..=window + 1 {
        // coefficient index i sits at offset i-2 and is guaranteed for n >= i
        let applicable: Vec<usize> = (2..=n_max).filter(|&n| n >= i).collect();
        if applicable.is_empty() {
            continue;
        }
        let mut value: Option<BigInt> = None;
        let mut agree = true;
        for &n in &applicable {
            let r = &results[n - 2];
            let (_, coeffs) = low_coefficients(r, window);
            let c = coeffs[i - 2].clone();
            match &value {
                None => value = Some(c),
                Some(v) => {
                    if *v != c {
                        agree = false;
                    }
                }
            }
        }
        if !agree {
            stabilization_ok = false;
        }
        betas.push(BetaEntry {
            i,
            value: value.unwrap().to_string(),
            checked_n: applicable,
        });
    }
    Ok(StabilizationReport {
        a_adequate,
        via_mirror,
        n_max,
        window,
        per_n,
        betas,
        stabilization_ok,
    })
}

/// The truncated tail series: sum of beta_i q^{2(i-2)} over stabilized i.
pub fn tail_truncation(report: &StabilizationReport) -> Result<LaurentPoly> {
    if !report.stabilization_ok {
        return Err(Error::NotStabilized);
    }
    let mut p = LaurentPoly::zero();
    for b in &report.betas {
        let coeff: BigInt = b.value.parse().expect("beta is an integer");
        p.add_term(4 * (b.i as i64 - 2), coeff);
    }
    Ok(p)
}

#[derive(Debug, Clone, Serialize)]
pub struct GapReport {
    pub n: usize,
    pub d_n: String,
    pub d_n_twice: i64,
    pub h_n: String,
    pub h_n_twice: i64,
    pub gap_twice: i64,
    pub required_twice: i64,
    pub ok: bool,
}

/// Degree-gap statement for a non-A-adequate diagram:
/// `d(n) >= h_n(D) + 2(n-1)` for n > 1.
pub fn gap_check(d: &Diagram, n: usize, config: &EvalConfig) -> Result<GapReport> {
    if is_a_adequate(d) {
        return Err(Error::DiagramIsAdequate);
    }
    if n < 2 {
        return Err(Error::InvalidArgument("gap check needs n > 1".into()));
    }
    let r = colored_jones(d, n, config).map_err(|e| Error::EvaluationLimit(e.to_string()))?;
    let h = h_n(d, n);
    let gap = r.d_n - h;
    let required = HalfInt::from_int(2 * (n as i64 - 1));
    Ok(GapReport {
        n,
        d_n: r.d_n.to_string(),
        d_n_twice: r.d_n.twice(),
        h_n: h.to_string(),
        h_n_twice: h.twice(),
        gap_twice: gap.twice(),
        required_twice: required.twice(),
        ok: gap >= required,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct WindowReport {
    pub n: usize,
    /// q-degree threshold `n/2 - c(D)/2 - (3/2) c(D)^l` (doubled).
    pub threshold_twice: i64,
    /// Lowest q-degree of the normalized polynomial (doubled).
    pub normalized_min_twice: i64,
    pub ok: bool,
}

/// Vanishing-window statement for a non-A-adequate diagram: after the
/// normalization `q^{n^2 c/2 + n |s_A|} * writhe_factor^{-1} * J`, all
/// coefficients strictly below `q^{n/2 - c/2 - 3 c^l / 2}` vanish.
pub fn window_check(d: &Diagram, n: usize, config: &EvalConfig) -> Result<WindowReport> {
    if is_a_adequate(d) {
        return Err(Error::DiagramIsAdequate);
    }
    if n < 2 {
        return Err(Error::InvalidArgument("window check needs n >= 2".into()));
    }
    let r = colored_jones(d, n, config).map_err(|e| Error::EvaluationLimit(e.to_string()))?;
    let nn = n as i64;
    let c = d.crossing_count() as i64;
    let s_a = all_a_graph(d).circle_count as i64;
    let loops = loop_crossing_count(d) as i64;
    // multiply by q^{n^2 c / 2 + n s_A} and divide by the writhe factor
    let shift = LaurentPoly::monomial(nn * nn * c + 2 * nn * s_a, BigInt::from(1));
    let unwind = writhe_factor(n, -d.writhe());
    let normalized = &(&r.polynomial * &shift) * &unwind;
    let min_twice = normalized
        .min_v_degree()
        .ok_or(Error::ZeroPolynomial)?;
    let threshold_twice = nn - c - 3 * loops;
    Ok(WindowReport {
        n,
        threshold_twice,
        normalized_min_twice: min_twice,
        ok: min_twice >= threshold_twice,
    })
}

/// Combined per-diagram report for the CLI.
#[derive(Debug, Clone, Serialize)]
pub struct TailReport {
    pub a_adequate: bool,
    pub b_adequate: bool,
    pub stabilization: Option<StabilizationReport>,
    pub tail: Option<Vec<(i64, String)>>,
    pub tail_pretty: Option<String>,
    pub gaps: Vec<GapReport>,
    pub windows: Vec<WindowReport>,
    pub sharp: Vec<SharpnessReport>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SharpnessReport {
    pub n: usize,
    pub d_n_twice: i64,
    pub h_n_twice: i64,
    pub equal: bool,
}

/// `d(n) = h_n(D)` comparison (meaningful for A-adequate diagrams).
pub fn sharpness_check(d: &Diagram, n: usize, config: &EvalConfig) -> Result<SharpnessReport> {
    let r = colored_jones(d, n, config).map_err(|e| Error::EvaluationLimit(e.to_string()))?;
    let h = h_n(d, n);
    Ok(SharpnessReport {
        n,
        d_n_twice: r.d_n.twice(),
        h_n_twice: h.twice(),
        equal: r.d_n == h,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_pd;

    fn config() -> EvalConfig {
        EvalConfig { width_cap: 16 }
    }

    #[test]
    fn h_n_values() {
        let unknot = parse_pd("O").unwrap();
        let kink = parse_pd("X 1 2 2 1").unwrap();
        let trefoil = parse_pd("X 1 4 2 5 / X 3 6 4 1 / X 5 2 6 3").unwrap();
        for n in 1..=5 {
            let nn = n as i64;
            assert_eq!(h_n(&unknot, n), HalfInt::from_int(-nn));
            assert_eq!(h_n(&kink, n), HalfInt::from_int(-nn * nn - 2 * nn));
            assert_eq!(h_n(&trefoil, n), HalfInt::from_int(-3 * nn * nn - 6 * nn));
        }
    }

    #[test]
    fn h_n_is_label_invariant() {
        // relabeling the trefoil's edges cyclically gives the same h_n
        let a = parse_pd("X 1 4 2 5 / X 3 6 4 1 / X 5 2 6 3").unwrap();
        let b = parse_pd("X 3 6 4 1 / X 5 2 6 3 / X 1 4 2 5").unwrap();
        for n in 1..=4 {
            assert_eq!(h_n(&a, n), h_n(&b, n));
        }
    }

    #[test]
    fn unknot_stabilizes_with_unit_betas() {
        let d = parse_pd("O").unwrap();
        let report = stabilization_check(&d, 5, 3, &config()).unwrap();
        assert!(report.a_adequate);
        assert!(report.stabilization_ok);
        for b in &report.betas {
            assert_eq!(b.value, "1", "beta_{}", b.i);
        }
        let t = tail_truncation(&report).unwrap();
        // 1 + q^2 + q^4 truncated at the window
        let mut expect = LaurentPoly::zero();
        for i in 0..report.betas.len() {
            expect.add_term(4 * i as i64, BigInt::from(1));
        }
        assert_eq!(t, expect);
    }

    #[test]
    fn trefoil_stabilizes() {
        let d = parse_pd("X 1 4 2 5 / X 3 6 4 1 / X 5 2 6 3").unwrap();
        let report = stabilization_check(&d, 4, 2, &config()).unwrap();
        assert!(report.a_adequate && !report.via_mirror);
        assert!(report.stabilization_ok, "report: {report:?}");
    }

    #[test]
    fn all_adequate_corpus_diagrams_stabilize() {
        for name in [
            "unknot-0",
            "unknot-kink-pos",
            "unlink-0x2",
            "trefoil-std",
            "figure8-std",
        ] {
            let d = crate::corpus::load(name).unwrap();
            let report = stabilization_check(&d, 3, 2, &config()).unwrap();
            assert!(report.a_adequate, "{name}");
            assert!(report.stabilization_ok, "{name}: {report:?}");
        }
    }

    #[test]
    fn mirror_reduction_for_b_adequate_only() {
        // the positive kink is A-adequate; its mirror the negative kink is
        // B-adequate only and must be analyzed through the mirror
        let d = parse_pd("X 1 2 2 1").unwrap();
        let report = stabilization_check(&d, 3, 2, &config()).unwrap();
        assert!(report.via_mirror);
        assert!(report.a_adequate);
        assert!(report.stabilization_ok);
    }

    #[test]
    fn gap_on_negative_kink() {
        let d = parse_pd("X 1 2 2 1").unwrap();
        for n in 2..=3 {
            let g = gap_check(&d, n, &config()).unwrap();
            assert!(g.ok, "n={n}: {g:?}");
            let nn = n as i64;
            assert_eq!(g.d_n_twice, -2 * nn);
            assert_eq!(g.h_n_twice, 2 * (-nn * nn - 2 * nn));
        }
        // n = 2: d = -2, h = -8, gap 6 >= 2
        let g2 = gap_check(&d, 2, &config()).unwrap();
        assert_eq!(g2.gap_twice, 12);
        assert_eq!(g2.required_twice, 4);
    }

    #[test]
    fn gap_on_clasp_is_tight_at_two() {
        let d = parse_pd("X 4 2 3 1 / X 3 2 4 1").unwrap();
        let g = gap_check(&d, 2, &config()).unwrap();
        assert!(g.ok);
        assert_eq!(g.gap_twice, g.required_twice, "equality case");
        let g3 = gap_check(&d, 3, &config()).unwrap();
        assert!(g3.ok && g3.gap_twice > g3.required_twice);
    }

    #[test]
    fn gap_rejects_adequate_diagrams() {
        let d = parse_pd("O").unwrap();
        assert!(matches!(
            gap_check(&d, 2, &config()),
            Err(Error::DiagramIsAdequate)
        ));
        let t = parse_pd("X 1 4 2 5 / X 3 6 4 1 / X 5 2 6 3").unwrap();
        assert!(matches!(
            window_check(&t, 2, &config()),
            Err(Error::DiagramIsAdequate)
        ));
    }

    #[test]
    fn window_on_kink() {
        let d = parse_pd("X 1 2 2 1").unwrap();
        for n in 2..=4 {
            let w = window_check(&d, n, &config()).unwrap();
            // threshold in q-units is n/2 - 2 for c = 1, loops = 1
            assert_eq!(w.threshold_twice, n as i64 - 4);
            assert!(w.ok, "n={n}: {w:?}");
        }
    }

    #[test]
    fn window_on_clasp() {
        let d = parse_pd("X 4 2 3 1 / X 3 2 4 1").unwrap();
        for n in 2..=3 {
            let w = window_check(&d, n, &config()).unwrap();
            assert!(w.ok, "n={n}: {w:?}");
        }
    }

    #[test]
    fn sharpness_for_adequate() {
        let trefoil = parse_pd("X 1 4 2 5 / X 3 6 4 1 / X 5 2 6 3").unwrap();
        let fig8 = parse_pd("X 4 2 5 1 / X 8 6 1 5 / X 6 3 7 4 / X 2 7 3 8").unwrap();
        for n in 1..=2 {
            assert!(sharpness_check(&trefoil, n, &config()).unwrap().equal);
            assert!(sharpness_check(&fig8, n, &config()).unwrap().equal);
        }
    }

    #[test]
    fn mirror_head_duality() {
        // tail coefficients of d equal head coefficients of mirror(d)
        let d = parse_pd("X 1 4 2 5 / X 3 6 4 1 / X 5 2 6 3").unwrap();
        let m = d.mirror();
        for n in 2..=2 {
            let a = colored_jones(&d, n, &config()).unwrap().polynomial;
            let b = colored_jones(&m, n, &config()).unwrap().polynomial;
            assert_eq!(b, a.invert_variable(), "n={n}");
        }
    }
}
