//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test -p monopos-harness --test acceptance -- --nocapture`
//! to see the table.

use std::io::Write;
use std::time::{Duration, Instant};

use monopos::families::{heawood, mcgee, petersen, FamilySpec};
use monopos::graph::{complement, hypercube};
use monopos::io::parse_graph6;
use monopos::position::{compute_parameter, position_number, Parameter, PathMode, SolverOptions};
use monopos_harness::report::{RunReport, Status};
use monopos_harness::run_suite;

const CAGE_LIMIT: Duration = Duration::from_secs(60);
const PETERSEN_GP_LIMIT: Duration = Duration::from_secs(10);
const REDUCTION_LIMIT_MS: f64 = 5.0 * 60.0 * 1000.0;
const SUITE_LIMIT_MS: f64 = 10.0 * 60.0 * 1000.0;

struct Criterion {
    number: usize,
    title: &'static str,
    pass: bool,
    detail: String,
}

fn checks_pass(report: &RunReport, ids: &[&str]) -> (bool, String) {
    let mut bad = Vec::new();
    let mut instances = 0;
    for id in ids {
        let results: Vec<_> = report.results(id).collect();
        assert!(!results.is_empty(), "check {id} missing from the report");
        for r in results {
            instances += r.instances;
            if r.status != Status::Pass {
                bad.push(format!("{id} {} ({} failures)", r.status, r.failures.len()));
            }
        }
    }
    if bad.is_empty() {
        (true, format!("{} checks, {instances} instances", ids.len()))
    } else {
        (false, bad.join("; "))
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let t = Instant::now();
    let v = f();
    (v, t.elapsed())
}

/// A failure on an R-graph with first parameter zero, where gp2 came out one
/// above the claimed b. R(0, b) is the complete graph K_{b+1}, whose gp2 is
/// b + 1, so the claim cannot hold there.
fn is_r_zero_gp2_failure(label: &str, what: &str, expected: &str, actual: &str) -> bool {
    let Some(rest) = label.strip_prefix("R_graph:0,") else {
        return false;
    };
    let Ok(b) = rest.parse::<usize>() else {
        return false;
    };
    let spec: FamilySpec = label.parse().expect("labels are specs");
    let g = monopos::families::generate(&spec).unwrap().graph;
    what.starts_with("gp2")
        && g.is_complete()
        && g.order() == b + 1
        && expected == b.to_string()
        && actual == (b + 1).to_string()
}

#[test]
fn acceptance() {
    let (report, wall) = timed(|| run_suite(&[], &[]).expect("suite runs"));
    let mut out = Vec::new();

    // 1: cage values, each solved directly and timed
    let mut detail = Vec::new();
    let mut ok = true;
    for (name, g, want) in [("petersen", petersen(), 3), ("heawood", heawood(), 3), ("mcgee", mcgee(), 2)] {
        let (r, t) = timed(|| position_number(&g, PathMode::Monophonic, &SolverOptions::default()).unwrap());
        ok &= r.value == want && t < CAGE_LIMIT;
        detail.push(format!("{name} mp={} in {:.2}s", r.value, t.as_secs_f64()));
    }
    let (suite_ok, _) = checks_pass(&report, &["cubic-cages"]);
    out.push(Criterion {
        number: 1,
        title: "cage values",
        pass: ok && suite_ok,
        detail: detail.join(", "),
    });

    // 2: Petersen gp and the position chain
    let (gp, t) = timed(|| compute_parameter(&petersen(), Parameter::Gp, &SolverOptions::default()).unwrap());
    let (suite_ok, d) = checks_pass(&report, &["petersen-general-position", "position-chain"]);
    out.push(Criterion {
        number: 2,
        title: "Petersen gp = 6 and mp <= gp chain",
        pass: suite_ok && gp.value == 6 && t < PETERSEN_GP_LIMIT,
        detail: format!("gp={} in {:.3}s; {d}", gp.value, t.as_secs_f64()),
    });

    // 3: oracle equivalence
    let (pass, d) = checks_pass(&report, &["solver-oracle-agreement"]);
    let n = report.results("solver-oracle-agreement").map(|r| r.instances).sum::<usize>();
    out.push(Criterion {
        number: 3,
        title: "branch and bound equals subset oracle",
        pass: pass && n >= 500,
        detail: d,
    });

    // 4: family formulas, plus the named complement of Q3
    let (pass, d) = checks_pass(
        &report,
        &[
            "block-graph-simplicial",
            "complete-multipartite",
            "unicyclic-five-case",
            "corona-formula",
            "join-formula",
            "bipartite-complement",
            "split-separated",
            "split-saturating-equality",
            "distance-hereditary-mp-equals-gp",
        ],
    );
    let q3c = complement(&hypercube(3).unwrap());
    let q3 = position_number(&q3c, PathMode::Monophonic, &SolverOptions::default()).unwrap().value;
    out.push(Criterion {
        number: 4,
        title: "family formula agreement",
        pass: pass && q3 == 4,
        detail: format!("{d}; mp(complement of Q3)={q3}"),
    });

    // 5: bounds
    let (pass, d) = checks_pass(
        &report,
        &[
            "longest-induced-path-bound",
            "rho-bound",
            "cut-vertex-bound",
            "simplicial-bound",
            "triangle-free-alpha-bound",
            "cubic-bound",
            "mp-set-clique-structure",
            "mp-range-complete",
            "mp-n-minus-one-structure",
        ],
    );
    out.push(Criterion {
        number: 5,
        title: "bound suite",
        pass,
        detail: d,
    });

    // 6: pendant vertices
    let (pass, d) = checks_pass(&report, &["pendant-increment", "pendant-at-simplicial"]);
    let n = report.results("pendant-increment").map(|r| r.instances).sum::<usize>();
    out.push(Criterion {
        number: 6,
        title: "pendant vertices",
        pass: pass && n >= 300,
        detail: d,
    });

    // 7: realization tables
    let ids7 = [
        "mp-gp-realization",
        "igp-mp-realization",
        "r-graph-dissociation-2-position",
        "hull-realization",
        "family-predictors",
    ];
    let (pass, d) = checks_pass(&report, &ids7);
    out.push(Criterion {
        number: 7,
        title: "realization tables",
        pass,
        detail: d,
    });

    // 8: reduction
    let (pass, d) = checks_pass(&report, &["clique-reduction", "reduction-join-formula"]);
    let ms = report.results("clique-reduction").map(|r| r.ms).sum::<f64>();
    let n = report.results("clique-reduction").map(|r| r.instances).sum::<usize>();
    out.push(Criterion {
        number: 8,
        title: "clique reduction",
        pass: pass && n >= 100 && ms < REDUCTION_LIMIT_MS,
        detail: format!("{d}; {ms:.0} ms"),
    });

    // 9: hull machinery
    let (pass, d) = checks_pass(&report, &["hull-below-mp", "tree-hull-leaves"]);
    out.push(Criterion {
        number: 9,
        title: "hull machinery",
        pass,
        detail: d,
    });

    // 10: determinism, format, wall time
    let again = run_suite(&[], &[]).expect("suite runs");
    let stable = report.without_timing().to_json() == again.without_timing().to_json();
    let (pass, d) = checks_pass(&report, &["graph6-round-trip", "generator-determinism"]);
    let wall_ms = wall.as_secs_f64() * 1000.0;
    out.push(Criterion {
        number: 10,
        title: "determinism and format",
        pass: pass && stable && wall_ms < SUITE_LIMIT_MS,
        detail: format!("{d}; byte-stable={stable}; suite wall {:.1}s", wall_ms / 1000.0),
    });

    // written to the real stdout so the table shows without --nocapture
    let mut table = String::from("\n");
    for c in &out {
        table += &format!(
            "{} criterion {:>2}: {:<40} {}\n",
            if c.pass { "PASS" } else { "FAIL" },
            c.number,
            c.title,
            c.detail
        );
    }

    // Criterion 7 fails on exactly one family of instances; anything else
    // failing there, or anywhere else, fails the test.
    let mut unexplained = Vec::new();
    let mut explained = 0;
    for id in ids7 {
        for r in report.results(id) {
            for f in &r.failures {
                if is_r_zero_gp2_failure(&f.label, &f.what, &f.expected, &f.actual) {
                    explained += 1;
                    parse_graph6(&f.graph6).expect("failure carries a valid graph6");
                } else {
                    unexplained.push(format!("{id}: {} {} expected {} got {}", f.label, f.what, f.expected, f.actual));
                }
            }
        }
    }
    if !out[6].pass {
        table += &format!(
            "\ncriterion 7 analysis: {explained} failures, all of the form gp2(R(0,b)) = b + 1 against a claimed b.\n\
             R(0,b) is K_(b+1), and in a complete graph no two vertices are at distance two, so the whole\n\
             vertex set is a 2-position set. The claim gp2(R(a-2, b-a+2)) = b therefore cannot hold at a = 2.\n\
             Every other row of the table (mp/gp, igp/mp, hull/mp, diss/gp2 for a >= 3) is realized exactly.\n"
        );
    }
    std::io::stdout().write_all(table.as_bytes()).unwrap();
    assert!(unexplained.is_empty(), "unexplained failures: {unexplained:#?}");
    for c in &out {
        if c.number != 7 {
            assert!(c.pass, "criterion {} failed: {}", c.number, c.detail);
        }
    }
    let other_failures: Vec<_> = report
        .checks
        .iter()
        .filter(|c| c.status == Status::Fail && !ids7.contains(&c.id.as_str()))
        .map(|c| c.id.clone())
        .collect();
    assert!(other_failures.is_empty(), "{other_failures:?}");
}
