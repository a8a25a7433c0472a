//! One pass/fail line per acceptance criterion. Runs without the test
//! harness so the lines show up in plain `cargo test` output.

use std::process::Command;
use std::time::{Duration, Instant};

use dchase_core::suite::{Suite, SuiteReport};

const SEEDS: u64 = 200;

struct Line {
    number: usize,
    title: &'static str,
    passed: bool,
    detail: String,
}

fn stat(r: &SuiteReport, key: &str) -> u64 {
    r.stats.get(key).copied().unwrap_or(0)
}

fn summary(r: &SuiteReport) -> String {
    let mut s = format!("{} instances, {} failed", r.instances, r.failures.len());
    if let Some((seed, msg)) = r.failures.first() {
        s += &format!("; first failure seed {seed}: {msg}");
    }
    for (check, ok) in &r.checks {
        if !ok {
            s += &format!("; check failed: {check}");
        }
    }
    s
}

fn timed(suite: Suite) -> (SuiteReport, Duration) {
    let start = Instant::now();
    let r = suite.run(SEEDS);
    (r, start.elapsed())
}

fn selftest_json() -> Vec<u8> {
    let out = Command::new(env!("CARGO_BIN_EXE_dchase"))
        .args(["selftest", "--seeds", "200", "--json", "--no-timing"])
        .output()
        .expect("run dchase");
    assert!(out.status.success(), "selftest exited with {:?}", out.status.code());
    out.stdout
}

fn main() {
    let mut lines = Vec::new();

    let (kcl, t) = timed(Suite::Kcl);
    lines.push(Line {
        number: 1,
        title: "KCL suite",
        passed: kcl.passed() && kcl.instances == 200 && stat(&kcl, "enumerated") > 0 && t < Duration::from_secs(30),
        detail: format!("{}; {} admissible positions; {:.2?}", summary(&kcl), stat(&kcl, "positions"), t),
    });

    let (ccl, _) = timed(Suite::Ccl);
    lines.push(Line {
        number: 2,
        title: "CCL suite",
        passed: ccl.passed() && ccl.instances == 200 && stat(&ccl, "direct_compared") >= 50,
        detail: format!("{}; {} small F2 grids compared with the direct computation", summary(&ccl), stat(&ccl, "direct_compared")),
    });

    let (cross, _) = timed(Suite::Cross);
    lines.push(Line {
        number: 3,
        title: "cross lemma suite",
        passed: cross.passed() && cross.instances == 100 && stat(&cross, "enumerated") >= 50,
        detail: format!("{}; {} enumerated over F2", summary(&cross), stat(&cross, "enumerated")),
    });

    let (cor, _) = timed(Suite::Corollary);
    lines.push(Line {
        number: 4,
        title: "corollary suite",
        passed: cor.passed() && cor.instances == 200,
        detail: format!("{}; {} with nonzero homology", summary(&cor), stat(&cor, "nonzero_homology")),
    });

    let (sn, _) = timed(Suite::Snake);
    let combos = ["monic_epi", "monic_not_epi", "not_monic_epi", "not_monic_not_epi"];
    lines.push(Line {
        number: 5,
        title: "snake suite",
        passed: sn.passed() && sn.instances == 200 && combos.iter().all(|k| stat(&sn, k) >= 10) && stat(&sn, "enumerated") > 0,
        detail: format!(
            "{}; delta enumerated on {}; combinations {:?}",
            summary(&sn),
            stat(&sn, "enumerated"),
            combos.map(|k| stat(&sn, k))
        ),
    });

    let (hom, _) = timed(Suite::Hom);
    lines.push(Line {
        number: 6,
        title: "Hom suite",
        passed: hom.passed() && hom.instances == 50 && hom.checks.len() == 2,
        detail: summary(&hom),
    });

    let (oracle, _) = timed(Suite::Oracle);
    lines.push(Line {
        number: 7,
        title: "oracle equivalence",
        passed: oracle.passed() && oracle.instances >= 500,
        detail: summary(&oracle),
    });

    let (a, b) = (selftest_json(), selftest_json());
    lines.push(Line {
        number: 8,
        title: "determinism",
        passed: a == b && !a.is_empty(),
        detail: format!("two runs of {} bytes, identical: {}", a.len(), a == b),
    });

    for l in &lines {
        println!("criterion {} [{}] {}: {}", l.number, if l.passed { "PASS" } else { "FAIL" }, l.title, l.detail);
    }
    let failed: Vec<usize> = lines.iter().filter(|l| !l.passed).map(|l| l.number).collect();
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
