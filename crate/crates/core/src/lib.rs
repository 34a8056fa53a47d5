//! Exact skein-theoretic calculator.
//!
//! The crate computes, in exact integer/rational arithmetic throughout:
//! Kauffman state combinatorics and adequacy of planar link diagrams given
//! as PD codes, the Temperley-Lieb algebra and Jones-Wenzl projectors,
//! cabled colored Jones polynomials via a Morse-word transfer evaluation,
//! and the stabilization/gap/window analysis of their low-degree tails.

pub mod acceptance;
pub mod cable;
pub mod corpus;
pub mod diagram;
pub mod error;
pub mod jones;
pub mod jw;
pub mod kauffman;
pub mod morse;
pub mod oracle;
pub mod poly;
pub mod ratfn;
pub mod tail;
pub mod tl;

pub use cable::{cable, CabledDiagram};
pub use diagram::{parse_pd, Crossing, Diagram, DiagramJson};
pub use error::{Error, Result};
pub use jones::{colored_jones, colored_jones_raw, min_degree, ColoredJonesResult};
pub use jw::{cap_kills_projector, jw, quantum_integer, verify_jw};
pub use kauffman::{
    all_a_graph, all_b_graph, bracket_oracle, is_a_adequate, is_b_adequate, loop_crossing_count,
    resolve, KauffmanState, Resolution, StateGraph,
};
pub use morse::{evaluate_morse, morseize, EvalConfig, MorseWord, Slice};
pub use poly::{HalfInt, LaurentPoly};
pub use ratfn::RationalFn;
pub use tail::{
    gap_check, h_n, sharpness_check, stabilization_check, tail_truncation, window_check,
    GapReport, StabilizationReport, TailReport, WindowReport,
};
pub use tl::{
    close, delta, expand_crossing_tangle, tl_generator, tl_identity, tl_multiply, CrossingKind,
    Matching, TLElement, TangleLetter, TangleWord,
};
