use std::process::{Command, Output};

use mtdyck::closedform::{family_polynomial, FormulaFamily};
use mtdyck::polynomial::{BivarPoly, PolyRecord};

fn mtdyck(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mtdyck"))
        .args(args)
        .env("MTDYCK_THREADS", "2")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = mtdyck(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn counts_dyck_paths() {
    assert_eq!(stdout(&["paths", "count", "--m", "2", "--n", "4", "--t", "2"]), "25\n");
    assert_eq!(
        stdout(&[
            "paths",
            "count",
            "--m",
            "2",
            "--n",
            "4",
            "--t",
            "2",
            "--kind",
            "positive-mdiv"
        ]),
        "37\n"
    );
}

#[test]
fn lists_paths_in_order() {
    let out = stdout(&["paths", "list", "--m", "1", "--n", "2"]);
    assert_eq!(out, "NNEE\nNENE\n");
}

#[test]
fn prints_canonical_polynomial() {
    let args = ["poly", "--family", "A", "--m", "2", "--n", "3", "--t", "1"];
    assert_eq!(stdout(&args), "x^2*y^2 + 4*x*y + 2*x + 5\n");
    for source in ["brute", "series"] {
        let mut with_source = args.to_vec();
        with_source.extend(["--source", source]);
        assert_eq!(stdout(&with_source), "x^2*y^2 + 4*x*y + 2*x + 5\n");
    }
}

#[test]
fn json_round_trips_through_parser() {
    for family in FormulaFamily::ALL {
        let out = stdout(&[
            "poly",
            "--family",
            family.name(),
            "--m",
            "-2",
            "--n",
            "5",
            "--t",
            "2",
            "--format",
            "json",
        ]);
        let record = PolyRecord::from_json(out.trim()).unwrap();
        let expected = family_polynomial(family, -2, 5, 2).unwrap();
        assert_eq!(record.polynomial().unwrap(), expected);
        let plain = stdout(&["poly", "--family", family.name(), "--m", "-2", "--n", "5", "--t", "2"]);
        assert_eq!(plain.trim().parse::<BivarPoly>().unwrap(), expected);
    }
}

#[test]
fn verify_all_passes() {
    let out = mtdyck(&["verify", "--suite", "all", "--max-m", "2", "--max-n", "5"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 6);
    assert!(text.lines().all(|l| l.contains("PASS")), "{text}");
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec![
            "verify", "--suite", "all", "--max-m", "2", "--max-n", "4", "--format", "json",
        ],
        vec![
            "table",
            "--families",
            "N,Sm,Pm",
            "--m",
            "-2,3",
            "--max-n",
            "4",
            "--format",
            "csv",
        ],
        vec![
            "paths", "list", "--m", "2", "--n", "4", "--kind", "small", "--format", "json",
        ],
    ] {
        let first = mtdyck(&args);
        let second = mtdyck(&args);
        assert!(first.status.success());
        assert_eq!(first.stdout, second.stdout, "{args:?}");
    }
}

#[test]
fn limits_need_explicit_flag() {
    let out = mtdyck(&["paths", "count", "--m", "4", "--n", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(
        stdout(&["paths", "count", "--m", "4", "--n", "3", "--unsafe-scale"]),
        "35\n"
    );
}

#[test]
fn simplex_report_matches_narayana() {
    let out = stdout(&["simplex", "--m", "2", "--n", "3", "--format", "csv"]);
    assert!(out.starts_with("dilation,walls,points,expected\n7,0,5,5\n"), "{out}");
}

#[test]
fn bad_input_is_an_error() {
    assert_eq!(
        mtdyck(&["poly", "--family", "Q", "--m", "2", "--n", "3"]).status.code(),
        Some(2)
    );
    assert_eq!(
        mtdyck(&["poly", "--family", "N", "--m", "2", "--n", "3", "--t", "4"])
            .status
            .code(),
        Some(2)
    );
}
