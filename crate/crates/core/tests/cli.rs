//! Front-end checks: the printer/parser round trip and the observable
//! behavior of the `opirw` binary (exit codes, report determinism).

use opirw::parse::{parse_polynomial, parse_word};
use opirw::sample::{random_poly, rng_from_seed};
use std::process::{Command, Output};

fn opirw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_opirw"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn printer_parser_round_trip() {
    let alphabet = ["x", "y", "z", "a", "b"];
    let mut rng = rng_from_seed(0xC11);
    for _ in 0..1000 {
        let f = random_poly(&mut rng, &alphabet, 3, 3, 6, true);
        let printed = f.to_string();
        let back = parse_polynomial(&printed).unwrap_or_else(|e| {
            panic!("reparse of {:?} failed: {}", printed, e);
        });
        assert_eq!(back, f, "round trip changed {}", printed);
    }
}

#[test]
fn word_round_trip_and_errors() {
    for text in ["1", "x", "x y", "x[y]z", "[1]", "[x[y x]]x"] {
        let w = parse_word(text).unwrap();
        assert_eq!(parse_word(&w.to_string()).unwrap(), w);
    }
    assert!(parse_word("[x").is_err());
    assert!(parse_word("x]").is_err());
    assert!(parse_word("lam").is_err());
    assert!(parse_polynomial("2*").is_err());
    assert!(parse_polynomial("1/0").is_err());
}

#[test]
fn check_exit_codes() {
    let pos = opirw(&["check", "--opi", "catalog:nijenhuis"]);
    assert_eq!(pos.status.code(), Some(0), "{:?}", pos);
    assert!(String::from_utf8_lossy(&pos.stdout).contains("RotaBaxterType"));

    let neg = opirw(&["check", "--opi", "inline:y[x]"]);
    assert_eq!(neg.status.code(), Some(1), "{:?}", neg);
    let report = String::from_utf8_lossy(&neg.stdout);
    assert!(report.contains("-w[u[v]] + w[v[u]]"), "{}", report);

    let usage = opirw(&["check", "--opi", "inline:[x"]);
    assert_eq!(usage.status.code(), Some(2), "{:?}", usage);
}

#[test]
fn reduce_prints_normal_form() {
    let out = opirw(&["reduce", "--opi", "catalog:average", "[u][v][w]"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "[u[v[w]]]");
}

#[test]
fn same_seed_gives_identical_reports() {
    let args = [
        "compose", "--opi", "catalog:rota-baxter", "--samples", "5", "--depth", "1",
        "--seed", "42",
    ];
    let a = opirw(&args);
    let b = opirw(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let other = opirw(&[
        "compose", "--opi", "catalog:rota-baxter", "--samples", "5", "--depth", "1",
        "--seed", "43",
    ]);
    assert_ne!(a.stdout, other.stdout);
}
