//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Exits 0 when every criterion passes or fails only through identities listed in
//! `tricolor::verify::KNOWN_UNATTAINABLE`; any other failure exits 1.

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use tricolor::coloring::{
    census, enumerate_colorings, enumerate_dwbc_colorings, lenard_map, BoundaryCondition,
    FaceWeightParams,
};
use tricolor::report::VerificationReport;
use tricolor::sixvertex::enumerate_dwbc_states;
use tricolor::verify::{run_suite, Suite, VerifyConfig};
use tricolor::Color;

const SEED: u64 = 2024;

struct Outcome {
    pass: bool,
    /// Failed only through known-unattainable identities.
    known: bool,
    detail: String,
}

impl Outcome {
    fn judged(pass: bool, detail: String) -> Self {
        Outcome {
            pass,
            known: false,
            detail,
        }
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn suite(s: Suite) -> (VerificationReport, Duration) {
    let (r, t) = timed(|| run_suite(s, SEED, None, &VerifyConfig::default()));
    (
        r.unwrap_or_else(|e| panic!("{s} suite could not run: {e}")),
        t,
    )
}

/// Verdict over the cases whose identity is in `ids`, with a time budget.
fn judge(
    report: &VerificationReport,
    ids: &[&str],
    elapsed: Duration,
    budget: Option<Duration>,
) -> Outcome {
    let cases: Vec<_> = report
        .cases
        .iter()
        .filter(|c| ids.contains(&c.identity.as_str()))
        .collect();
    let failing: Vec<_> = cases.iter().filter(|c| !c.pass).collect();
    let in_time = budget.is_none_or(|b| elapsed <= b);
    let mut parts = Vec::new();
    for id in ids {
        let worst = report.worst(|x| x == *id).unwrap_or(f64::NAN);
        let failed = failing.iter().filter(|c| c.identity == *id).count();
        parts.push(if failed == 0 {
            format!("{id} max {worst:.1e}")
        } else {
            format!("{id} max {worst:.1e} ({failed} failing)")
        });
    }
    let mut detail = format!(
        "{} cases; {}; {:.2?}",
        cases.len(),
        parts.join(", "),
        elapsed
    );
    if let Some(b) = budget {
        detail.push_str(&format!(" (budget {b:?})"));
    }
    let pass = failing.is_empty() && in_time;
    let known = !pass && in_time && failing.iter().all(|c| c.known_unattainable);
    Outcome {
        pass,
        known,
        detail,
    }
}

fn enumeration() -> Outcome {
    let (result, elapsed) = timed(|| -> Result<Vec<String>, String> {
        let mut notes = Vec::new();
        for n in 1..=5 {
            let states = enumerate_dwbc_states(n).map_err(|e| e.to_string())?;
            let state_set: HashSet<_> = states.iter().cloned().collect();
            for corner in Color::ALL {
                let colorings = enumerate_dwbc_colorings(n, corner).map_err(|e| e.to_string())?;
                if colorings.len() != states.len() {
                    return Err(format!(
                        "n={n} corner {corner}: {} colorings vs {} states",
                        colorings.len(),
                        states.len()
                    ));
                }
                let mut image = HashSet::new();
                for c in &colorings {
                    image.insert(lenard_map(c).map_err(|e| e.to_string())?);
                }
                if image != state_set {
                    return Err(format!(
                        "n={n} corner {corner}: arrow image is not the state set"
                    ));
                }
            }
            notes.push(states.len().to_string());
        }
        Ok(notes)
    });
    match result {
        Ok(counts) => Outcome::judged(
            elapsed <= Duration::from_secs(10),
            format!(
                "counts {} for n=1..5, bijective for every corner; {elapsed:.2?} (budget 10s)",
                counts.join(", ")
            ),
        ),
        Err(e) => Outcome::judged(false, e),
    }
}

/// Independent scan of all `3^(rows*cols)` arrays under free or toroidal rules.
fn scan(rows: usize, cols: usize, toroidal: bool) -> usize {
    let cells = rows * cols;
    let mut count = 0;
    for code in 0..3usize.pow(cells as u32) {
        let at = |i: usize, j: usize| code / 3usize.pow((i * cols + j) as u32) % 3;
        let mut ok = true;
        for i in 0..rows {
            for j in 0..cols {
                if j + 1 < cols && at(i, j) == at(i, j + 1)
                    || i + 1 < rows && at(i, j) == at(i + 1, j)
                {
                    ok = false;
                }
            }
        }
        if toroidal {
            for i in 0..rows {
                ok &= at(i, 0) != at(i, cols - 1);
            }
            for j in 0..cols {
                ok &= at(0, j) != at(rows - 1, j);
            }
        }
        count += ok as usize;
    }
    count
}

fn census_check() -> Outcome {
    let count = |r, c, bc| {
        enumerate_colorings(r, c, bc)
            .map(|v| v.len())
            .unwrap_or(usize::MAX)
    };
    let free11 = (count(1, 1, BoundaryCondition::Free), scan(1, 1, false));
    let tor22 = (count(2, 2, BoundaryCondition::Toroidal), scan(2, 2, true));
    let mut pass = free11 == (3, 3) && tor22 == (18, 18);
    let shapes = [
        (1, 1, BoundaryCondition::Free),
        (2, 2, BoundaryCondition::Toroidal),
        (2, 3, BoundaryCondition::Free),
        (3, 3, BoundaryCondition::Toroidal),
        (3, 4, BoundaryCondition::Free),
        (4, 4, BoundaryCondition::Toroidal),
        (4, 4, BoundaryCondition::Dwbc),
        (5, 5, BoundaryCondition::Dwbc),
    ];
    let mut mismatches = Vec::new();
    for (r, c, bc) in shapes {
        let ok = census(r, c, bc)
            .map(|cen| {
                let gf = cen.generating_function(&FaceWeightParams::unit());
                gf.im == 0.0
                    && gf.re == cen.total() as f64
                    && cen.total() as usize == count(r, c, bc)
            })
            .unwrap_or(false);
        if !ok {
            mismatches.push(format!("{r}x{c} {bc}"));
        }
    }
    pass &= mismatches.is_empty();
    Outcome::judged(
        pass,
        format!(
            "1x1 free {} (scan {}), 2x2 toroidal {} (scan {}); unit-weight generating function equals count for {} shapes{}",
            free11.0,
            free11.1,
            tor22.0,
            tor22.1,
            shapes.len(),
            if mismatches.is_empty() { String::new() } else { format!("; mismatches: {}", mismatches.join(", ")) }
        ),
    )
}

fn main() -> ExitCode {
    let mut rows: Vec<(usize, &str, Outcome)> = Vec::new();
    rows.push((1, "enumeration cross-check", enumeration()));

    let (r, t) = suite(Suite::Theta);
    let ids = [
        "theta1_odd",
        "theta4_even",
        "theta1_pi_shift",
        "theta4_pi_shift",
        "theta1_quasi_period",
        "theta4_quasi_period",
        "theta4_half_period",
        "theta_cubic",
        "zeta_product",
    ];
    rows.push((
        2,
        "theta suite",
        judge(&r, &ids, t, Some(Duration::from_secs(1))),
    ));

    let (r, t) = suite(Suite::Ybe);
    let ids = [
        "ybe_raw",
        "ybe_tilde",
        "ybe_half_period",
        "ybe_theta1",
        "ybe_sixvertex",
    ];
    rows.push((
        3,
        "Yang-Baxter suite",
        judge(&r, &ids, t, Some(Duration::from_secs(30))),
    ));

    let (r, t) = suite(Suite::Recursion6v);
    rows.push((
        4,
        "six-vertex recursions",
        judge(
            &r,
            &["recursion6v_plus", "recursion6v_minus", "recursion6v_f"],
            t,
            Some(Duration::from_secs(60)),
        ),
    ));

    let (r, t) = suite(Suite::Functional6v);
    rows.push((
        5,
        "six-vertex functional equations",
        judge(
            &r,
            &["functional6v_chi", "functional6v_psi", "parity6v"],
            t,
            None,
        ),
    ));

    let (r, t) = suite(Suite::Recursion3c);
    rows.push((
        6,
        "three-coloring recursions",
        judge(
            &r,
            &[
                "recursion3c_plus",
                "recursion3c_minus",
                "recursion3c_f_plus",
                "recursion3c_f_minus",
            ],
            t,
            None,
        ),
    ));

    let (r, t) = suite(Suite::Functional3c);
    rows.push((
        7,
        "three-coloring functional equations",
        judge(
            &r,
            &["functional3c_chi", "functional3c_psi", "f_one_terms"],
            t,
            None,
        ),
    ));
    rows.push((
        8,
        "small-nome degeneration",
        judge(&r, &["degeneration"], t, None),
    ));

    let (r, t) = suite(Suite::Appendix);
    let ids = [
        "half_period_substitution",
        "theta1_match_literal",
        "theta1_match_non_beta",
        "theta1_match_beta_sign_free",
        "theta1_match_beta_sign_product",
        "constraint_reducing",
        "constraint_theta1_reducing",
    ];
    rows.push((9, "half-period weight chain", judge(&r, &ids, t, None)));

    rows.push((10, "census", census_check()));

    let mut unexpected = 0;
    for (k, name, o) in &rows {
        let verdict = if o.pass { "PASS" } else { "FAIL" };
        let note = if o.known {
            " [known unattainable, see README]"
        } else {
            ""
        };
        println!("criterion {k:>2} {verdict} {name}{note}: {}", o.detail);
        if !o.pass && !o.known {
            unexpected += 1;
        }
    }
    let passed = rows.iter().filter(|(_, _, o)| o.pass).count();
    println!(
        "acceptance: {passed}/{} criteria pass, {unexpected} unexpected failures",
        rows.len()
    );
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
