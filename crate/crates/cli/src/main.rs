//! skeintail: adequacy, brackets, Jones-Wenzl projectors, cabled colored
//! Jones polynomials, and tail reports for link diagrams in PD form.

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use skeintail_core::diagram::{parse_pd, Diagram};
use skeintail_core::error::Error;
use skeintail_core::jones::{colored_jones, colored_jones_raw};
use skeintail_core::jw;
use skeintail_core::kauffman::{
    all_a_graph, all_b_graph, bracket_oracle_with_limit, is_a_adequate, is_b_adequate,
};
use skeintail_core::morse::EvalConfig;
use skeintail_core::tail::{
    gap_check, sharpness_check, stabilization_check, tail_truncation, window_check, GapReport,
    SharpnessReport, TailReport, WindowReport,
};
use skeintail_core::{acceptance, corpus};

#[derive(Parser)]
#[command(
    name = "skeintail",
    about = "Exact Kauffman-state, Temperley-Lieb and colored-Jones calculator",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// State-circle counts, adequacy verdicts and loop crossings.
    Adequacy {
        /// PD file path or bundled corpus name.
        file: String,
        #[arg(long)]
        json: bool,
    },
    /// Brute-force Kauffman bracket (sum over all states).
    Bracket {
        file: String,
        /// Crossing-count cap for the 2^c state sum.
        #[arg(long, default_value_t = 24)]
        brute_limit: usize,
        #[arg(long)]
        json: bool,
    },
    /// Jones-Wenzl projector in the matching basis.
    Jw {
        #[arg(long)]
        n: usize,
        /// Also verify the defining properties.
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        json: bool,
    },
    /// Colored Jones polynomial of a diagram.
    Jones {
        file: String,
        #[arg(long)]
        n: usize,
        /// Skip the writhe normalization factor.
        #[arg(long)]
        raw: bool,
        #[arg(long, default_value_t = 16)]
        width_cap: usize,
        #[arg(long)]
        json: bool,
    },
    /// Tail stabilization report.
    Tail {
        file: String,
        #[arg(long, default_value_t = 4)]
        n_max: usize,
        #[arg(long, default_value_t = 3)]
        window: usize,
        #[arg(long, default_value_t = 16)]
        width_cap: usize,
        #[arg(long)]
        json: bool,
    },
    /// Degree bounds: gap and window checks (sharpness when adequate).
    Bounds {
        file: String,
        /// Color range, e.g. `2..4` (inclusive) or a single color.
        #[arg(long, default_value = "2..4")]
        n: String,
        #[arg(long, default_value_t = 16)]
        width_cap: usize,
        #[arg(long)]
        json: bool,
    },
    /// Run the full acceptance suite.
    Selftest {
        #[arg(long)]
        json: bool,
    },
}

fn load_diagram(file: &str) -> Result<Diagram, Error> {
    if let Ok(text) = std::fs::read_to_string(file) {
        return parse_pd(&text);
    }
    corpus::load(file.trim_end_matches(".pd"))
}

fn parse_range(s: &str) -> Result<(usize, usize), Error> {
    let parts: Vec<&str> = s.split("..").collect();
    let bad = || Error::InvalidArgument(format!("bad color range {s:?}"));
    match parts.as_slice() {
        [one] => {
            let n = one.parse::<usize>().map_err(|_| bad())?;
            Ok((n, n))
        }
        [lo, hi] => {
            let lo = lo.parse::<usize>().map_err(|_| bad())?;
            let hi = hi.parse::<usize>().map_err(|_| bad())?;
            if lo > hi {
                return Err(bad());
            }
            Ok((lo, hi))
        }
        _ => Err(bad()),
    }
}

#[derive(Serialize)]
struct AdequacyJson {
    crossings: usize,
    components: usize,
    writhe: i64,
    s_a: usize,
    s_b: usize,
    a_adequate: bool,
    b_adequate: bool,
    loop_crossing_count: usize,
    loop_crossings: Vec<usize>,
}

fn cmd_adequacy(file: &str, json: bool) -> Result<(), Error> {
    let d = load_diagram(file)?;
    let a = all_a_graph(&d);
    let b = all_b_graph(&d);
    let report = AdequacyJson {
        crossings: d.crossing_count(),
        components: d.component_count(),
        writhe: d.writhe(),
        s_a: a.circle_count,
        s_b: b.circle_count,
        a_adequate: a.loops.is_empty(),
        b_adequate: b.loops.is_empty(),
        loop_crossing_count: a.loops.len(),
        loop_crossings: a.loops.clone(),
    };
    if json {
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    } else {
        println!("crossings: {}", report.crossings);
        println!("components: {}", report.components);
        println!("writhe: {}", report.writhe);
        println!("|s_A| = {}, |s_B| = {}", report.s_a, report.s_b);
        println!(
            "A-adequate: {}, B-adequate: {}, c^l = {}",
            if report.a_adequate { "yes" } else { "no" },
            if report.b_adequate { "yes" } else { "no" },
            report.loop_crossing_count
        );
        if !report.loop_crossings.is_empty() {
            println!("loop crossings (0-based): {:?}", report.loop_crossings);
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct BracketJson {
    crossings: usize,
    polynomial: Vec<(i64, String)>,
    pretty: String,
}

fn cmd_bracket(file: &str, brute_limit: usize, json: bool) -> Result<(), Error> {
    let d = load_diagram(file)?;
    let p = bracket_oracle_with_limit(&d, brute_limit)?;
    if json {
        let report = BracketJson {
            crossings: d.crossing_count(),
            polynomial: p.to_pairs(),
            pretty: p.pretty_q(),
        };
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    } else {
        println!("bracket = {}", p.pretty_q());
    }
    Ok(())
}

#[derive(Serialize)]
struct JwJson {
    n: usize,
    terms: Vec<JwTermJson>,
    verification: Option<JwVerifyJson>,
}

#[derive(Serialize)]
struct JwTermJson {
    pairs: Vec<(usize, usize)>,
    coefficient: String,
}

#[derive(Serialize)]
struct JwVerifyJson {
    annihilated_by_generators: bool,
    identity_coefficient_one: bool,
    idempotent: bool,
    closure_matches: bool,
    caps_kill: bool,
}

fn cmd_jw(n: usize, verify: bool, json: bool) -> Result<(), Error> {
    let p = jw::jw(n)?;
    let verification = if verify {
        let r = jw::verify_jw(n)?;
        Some(JwVerifyJson {
            annihilated_by_generators: r.annihilated_by_generators,
            identity_coefficient_one: r.identity_coefficient_one,
            idempotent: r.idempotent,
            closure_matches: r.closure_matches,
            caps_kill: r.caps_kill,
        })
    } else {
        None
    };
    let verify_ok = verification.as_ref().is_none_or(|v| {
        v.annihilated_by_generators
            && v.identity_coefficient_one
            && v.idempotent
            && v.closure_matches
            && v.caps_kill
    });
    if json {
        let report = JwJson {
            n,
            terms: p
                .terms()
                .map(|(m, c)| JwTermJson {
                    pairs: m.pairs().map(|(a, b)| (a + 1, b + 1)).collect(),
                    coefficient: c.to_string(),
                })
                .collect(),
            verification,
        };
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    } else {
        println!("jw({n}) with {} basis terms:", p.num_terms());
        for (m, c) in p.terms() {
            let pairs: Vec<String> = m
                .pairs()
                .map(|(a, b)| format!("{}-{}", a + 1, b + 1))
                .collect();
            println!("  [{}]  *  {}", pairs.join(" "), c);
        }
        if let Some(v) = &verification {
            println!(
                "verification: annihilation {}, identity coefficient {}, idempotent {}, closure {}, caps {}",
                v.annihilated_by_generators,
                v.identity_coefficient_one,
                v.idempotent,
                v.closure_matches,
                v.caps_kill
            );
        }
    }
    if !verify_ok {
        return Err(Error::InvalidArgument("projector verification failed".into()));
    }
    Ok(())
}

fn cmd_jones(file: &str, n: usize, raw: bool, width_cap: usize, json: bool) -> Result<(), Error> {
    let d = load_diagram(file)?;
    let config = EvalConfig { width_cap };
    let r = if raw {
        colored_jones_raw(&d, n, &config)?
    } else {
        colored_jones(&d, n, &config)?
    };
    if json {
        println!("{}", serde_json::to_string_pretty(&r.to_json()).unwrap());
    } else {
        println!("J(q; {n}) = {}", r.polynomial.pretty_q());
        println!("d({n}) = {}", r.d_n);
        println!("writhe = {}, writhe factor applied: {}", r.writhe, !raw);
        println!("peak transfer width = {}", r.peak_width);
    }
    Ok(())
}

fn cmd_tail(
    file: &str,
    n_max: usize,
    window: usize,
    width_cap: usize,
    json: bool,
) -> Result<bool, Error> {
    let d = load_diagram(file)?;
    let config = EvalConfig { width_cap };
    let a_adequate = is_a_adequate(&d);
    let b_adequate = is_b_adequate(&d);
    let stab = stabilization_check(&d, n_max, window, &config)?;
    let tail = if stab.stabilization_ok {
        Some(tail_truncation(&stab)?)
    } else {
        None
    };
    let ok = stab.stabilization_ok;
    let report = TailReport {
        a_adequate,
        b_adequate,
        stabilization: Some(stab),
        tail_pretty: tail.as_ref().map(|t| t.pretty_q()),
        tail: tail.map(|t| t.to_pairs()),
        gaps: Vec::new(),
        windows: Vec::new(),
        sharp: Vec::new(),
    };
    if json {
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    } else {
        let stab = report.stabilization.as_ref().unwrap();
        println!(
            "A-adequate: {}, B-adequate: {}{}",
            if report.a_adequate { "yes" } else { "no" },
            if report.b_adequate { "yes" } else { "no" },
            if stab.via_mirror {
                " (analyzing the mirror: head coefficients)"
            } else {
                ""
            }
        );
        println!("n    d(n)    normalized low coefficients");
        for p in &stab.per_n {
            println!("{:<4} {:<7} {:?}", p.n, p.d_n, p.low_coefficients);
        }
        for b in &stab.betas {
            println!(
                "beta_{} = {} (checked for n in {:?})",
                b.i, b.value, b.checked_n
            );
        }
        println!(
            "stabilization: {}",
            if stab.stabilization_ok { "pass" } else { "FAIL" }
        );
        if let Some(t) = &report.tail_pretty {
            println!("tail truncation: {t}");
        }
    }
    Ok(ok)
}

#[derive(Serialize)]
struct BoundsJson {
    a_adequate: bool,
    gaps: Vec<GapReport>,
    windows: Vec<WindowReport>,
    sharp: Vec<SharpnessReport>,
}

fn cmd_bounds(file: &str, range: &str, width_cap: usize, json: bool) -> Result<bool, Error> {
    let d = load_diagram(file)?;
    let config = EvalConfig { width_cap };
    let (lo, hi) = parse_range(range)?;
    let a_adequate = is_a_adequate(&d);
    let mut gaps = Vec::new();
    let mut windows = Vec::new();
    let mut sharp = Vec::new();
    let mut ok = true;
    for n in lo.max(2)..=hi {
        if a_adequate {
            let s = sharpness_check(&d, n, &config)?;
            ok &= s.equal;
            sharp.push(s);
        } else {
            let g = gap_check(&d, n, &config)?;
            ok &= g.ok;
            gaps.push(g);
            let w = window_check(&d, n, &config)?;
            ok &= w.ok;
            windows.push(w);
        }
    }
    let report = BoundsJson {
        a_adequate,
        gaps,
        windows,
        sharp,
    };
    if json {
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    } else if a_adequate {
        println!("A-adequate diagram: checking d(n) = h_n(D)");
        println!("n    2*d(n)   2*h_n    equal");
        for s in &report.sharp {
            println!(
                "{:<4} {:<8} {:<8} {}",
                s.n, s.d_n_twice, s.h_n_twice, s.equal
            );
        }
    } else {
        println!("non-A-adequate diagram: gap and window checks");
        println!("n    d(n)     h_n      2*gap   2*required  pass");
        for g in &report.gaps {
            println!(
                "{:<4} {:<8} {:<8} {:<7} {:<11} {}",
                g.n, g.d_n, g.h_n, g.gap_twice, g.required_twice, g.ok
            );
        }
        println!("n    2*min(normalized)   2*threshold   pass");
        for w in &report.windows {
            println!(
                "{:<4} {:<19} {:<13} {}",
                w.n, w.normalized_min_twice, w.threshold_twice, w.ok
            );
        }
    }
    Ok(ok)
}

fn cmd_selftest(json: bool) -> bool {
    let checks = acceptance::run_all();
    let all_pass = checks.iter().all(|c| c.pass);
    if json {
        #[derive(Serialize)]
        struct CheckJson<'a> {
            id: &'a str,
            title: &'a str,
            pass: bool,
            details: &'a [String],
        }
        let out: Vec<CheckJson> = checks
            .iter()
            .map(|c| CheckJson {
                id: c.id,
                title: c.title,
                pass: c.pass,
                details: &c.details,
            })
            .collect();
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
    } else {
        print!("{}", acceptance::canonical_report(&checks));
        // timings go to stderr so stdout stays byte-identical across runs
        for c in &checks {
            let _ = writeln!(std::io::stderr(), "{} took {} ms", c.id, c.millis);
        }
    }
    all_pass
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome: Result<bool, Error> = match &cli.command {
        Command::Adequacy { file, json } => cmd_adequacy(file, *json).map(|_| true),
        Command::Bracket {
            file,
            brute_limit,
            json,
        } => cmd_bracket(file, *brute_limit, *json).map(|_| true),
        Command::Jw { n, verify, json } => cmd_jw(*n, *verify, *json).map(|_| true),
        Command::Jones {
            file,
            n,
            raw,
            width_cap,
            json,
        } => cmd_jones(file, *n, *raw, *width_cap, *json).map(|_| true),
        Command::Tail {
            file,
            n_max,
            window,
            width_cap,
            json,
        } => cmd_tail(file, *n_max, *window, *width_cap, *json),
        Command::Bounds {
            file,
            n,
            width_cap,
            json,
        } => cmd_bounds(file, n, *width_cap, *json),
        Command::Selftest { json } => Ok(cmd_selftest(*json)),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            let _ = writeln!(std::io::stderr(), "error: {e}");
            ExitCode::from(2)
        }
    }
}
