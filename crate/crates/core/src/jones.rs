//! The unreduced colored Jones polynomial by cabled skein evaluation.
//!
//! `J(q; n)` is the transfer evaluation of the projector-decorated n-cable
//! multiplied by the writhe factor `((-1)^n q^{(n^2+2n)/2})^w`. The result
//! must clear to a genuine Laurent polynomial; anything else signals a
//! convention or algebra bug and is a hard error.

use num_bigint::BigInt;
use serde::Serialize;

use crate::cable::cable;
use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::morse::{evaluate_morse, morseize, EvalConfig};
use crate::poly::{HalfInt, LaurentPoly};

#[derive(Debug, Clone)]
pub struct ColoredJonesResult {
    pub polynomial: LaurentPoly,
    pub n: usize,
    pub writhe: i64,
    pub writhe_factor_applied: bool,
    /// Minimum degree in q-units.
    pub d_n: HalfInt,
    pub peak_width: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ColoredJonesJson {
    pub n: usize,
    pub writhe: i64,
    pub writhe_factor_applied: bool,
    pub polynomial: Vec<(i64, String)>,
    pub pretty: String,
    pub min_degree: String,
    pub min_degree_twice: i64,
    pub peak_width: usize,
    pub integer_q_powers_only: bool,
}

impl ColoredJonesResult {
    pub fn to_json(&self) -> ColoredJonesJson {
        ColoredJonesJson {
            n: self.n,
            writhe: self.writhe,
            writhe_factor_applied: self.writhe_factor_applied,
            polynomial: self.polynomial.to_pairs(),
            pretty: self.polynomial.pretty_q(),
            min_degree: self.d_n.to_string(),
            min_degree_twice: self.d_n.twice(),
            peak_width: self.peak_width,
            integer_q_powers_only: self.polynomial.has_only_integer_q_powers(),
        }
    }
}

/// The writhe factor `((-1)^n q^{(n^2+2n)/2})^w` as a Laurent monomial.
pub fn writhe_factor(n: usize, writhe: i64) -> LaurentPoly {
    let nn = n as i64;
    let sign = if (nn * writhe) % 2 == 0 { 1 } else { -1 };
    LaurentPoly::monomial((nn * nn + 2 * nn) * writhe, BigInt::from(sign))
}

pub fn colored_jones(d: &Diagram, n: usize, config: &EvalConfig) -> Result<ColoredJonesResult> {
    colored_jones_inner(d, n, config, true)
}

/// The un-normalized cabled evaluation (no writhe factor).
pub fn colored_jones_raw(d: &Diagram, n: usize, config: &EvalConfig) -> Result<ColoredJonesResult> {
    colored_jones_inner(d, n, config, false)
}

fn colored_jones_inner(
    d: &Diagram,
    n: usize,
    config: &EvalConfig,
    apply_writhe: bool,
) -> Result<ColoredJonesResult> {
    if n < 1 {
        return Err(Error::InvalidWidth(n));
    }
    let cd = cable(d, n)?;
    let word = morseize(&cd)?;
    let peak_width = word.peak_width;
    let raw = evaluate_morse(&word, config)?;
    let value = if apply_writhe {
        let factor = writhe_factor(n, d.writhe());
        &raw * &crate::ratfn::RationalFn::from_poly(factor)
    } else {
        raw
    };
    let polynomial = value.to_laurent()?;
    let d_n = polynomial.min_q_degree()?;
    Ok(ColoredJonesResult {
        polynomial,
        n,
        writhe: d.writhe(),
        writhe_factor_applied: apply_writhe,
        d_n,
        peak_width,
    })
}

/// Minimum q-degree of a nonzero evaluation.
pub fn min_degree(r: &ColoredJonesResult) -> Result<HalfInt> {
    r.polynomial.min_q_degree()
}
