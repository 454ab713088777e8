//! Acceptance gate: one test per criterion, each printing one PASS/FAIL line.
//!
//! Criteria 1..=9 run the shared implementations behind `verify-all` at full
//! scale. Criterion 10 runs the release gate itself: the binary twice on
//! `verify-all --scale small`, byte-comparing reports.

use std::process::Command;
use std::time::{Duration, Instant};

use fqlab_cli::verify::{Scale, CRITERIA};

fn run_criterion(index: usize) {
    let (name, criterion) = CRITERIA[index];
    match criterion(Scale::Full, 42) {
        Ok(detail) => println!("criterion {} ({name}): PASS - {detail}", index + 1),
        Err(detail) => {
            println!("criterion {} ({name}): FAIL - {detail}", index + 1);
            panic!("criterion {name} failed: {detail}");
        }
    }
}

#[test]
fn criterion_01_projective_counts() {
    run_criterion(0);
}

#[test]
fn criterion_02_stirling_identity() {
    run_criterion(1);
}

#[test]
fn criterion_03_hermitian_maximality() {
    run_criterion(2);
}

#[test]
fn criterion_04_genus_agreement() {
    run_criterion(3);
}

#[test]
fn criterion_05_zeta_roundtrip() {
    run_criterion(4);
}

#[test]
fn criterion_06_point_count_bounds() {
    run_criterion(5);
}

#[test]
fn criterion_07_pgl_structure() {
    run_criterion(6);
}

#[test]
fn criterion_08_census_consistency() {
    run_criterion(7);
}

#[test]
fn criterion_09_quotient_invariants() {
    run_criterion(8);
}

#[test]
fn criterion_10_report_determinism() {
    let invoke = || {
        Command::new(env!("CARGO_BIN_EXE_fqlab"))
            .args(["verify-all", "--scale", "small"])
            .output()
            .expect("binary runs")
    };
    let start = Instant::now();
    let first = invoke();
    let second = invoke();
    let elapsed = start.elapsed();

    let mut failures = Vec::new();
    if !first.status.success() || !second.status.success() {
        failures.push(format!(
            "exit codes {:?} and {:?}",
            first.status.code(),
            second.status.code()
        ));
    }
    if first.stdout != second.stdout {
        failures.push("reports differ between runs".into());
    }
    if elapsed >= Duration::from_secs(60) {
        failures.push(format!("two runs took {elapsed:?}"));
    }
    if failures.is_empty() {
        println!(
            "criterion 10 (report-determinism): PASS - two byte-identical passing runs in {elapsed:?}"
        );
    } else {
        let detail = failures.join("; ");
        println!("criterion 10 (report-determinism): FAIL - {detail}");
        panic!("criterion report-determinism failed: {detail}");
    }
}
