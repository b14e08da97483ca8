use std::process::{Command, Output};

use rampoly_core::ramanujan::{r_poly, RRoute};
use rampoly_core::BiPoly;

fn rampoly(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rampoly"))
        .args(args)
        .output()
        .expect("spawn rampoly")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

#[test]
fn assoc_triangle_csv() {
    let out = rampoly(&[
        "triangle", "--family", "assoc", "--max-n", "4", "--format", "csv",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "1\n0,0\n0,1,0\n0,1,0,0\n0,1,3,0,0\n");
}

#[test]
fn triangle_formats() {
    let out = rampoly(&[
        "triangle",
        "--family",
        "eulerian2",
        "--max-n",
        "2",
        "--format",
        "bfile",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "0 1\n1 1\n2 0\n3 1\n4 2\n5 0\n");
    let out = rampoly(&[
        "triangle",
        "--family",
        "stirling2",
        "--max-n",
        "3",
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["rows"][3], serde_json::json!(["0", "1", "3", "1"]));
}

#[test]
fn triangle_over_limit_is_usage_error() {
    let out = rampoly(&["triangle", "--family", "stirling2", "--max-n", "501"]);
    assert_eq!(code(&out), 2);
    let out = rampoly(&[
        "triangle",
        "--family",
        "stirling2",
        "--max-n",
        "3",
        "--cap",
        "2",
    ]);
    assert_eq!(code(&out), 2);
}

#[test]
fn rpoly_json_round_trips() {
    for route in ["triple", "q"] {
        let out = rampoly(&["rpoly", "--m", "3", "--route", route, "--format", "json"]);
        assert_eq!(code(&out), 0);
        let p = BiPoly::from_json(stdout(&out).trim()).unwrap();
        assert_eq!(p, r_poly(3, RRoute::TripleSum).unwrap());
    }
}

#[test]
fn rpoly_pretty_and_csv() {
    let out = rampoly(&["rpoly", "--m", "2", "--format", "pretty"]);
    assert_eq!(stdout(&out), "x^2 + (1 + 3x - 2x^2)u + (2 - 3x + x^2)u^2\n");
    let out = rampoly(&["rpoly", "--m", "1", "--format", "csv"]);
    assert_eq!(stdout(&out), "0,1\n1,-1\n");
}

#[test]
fn series_json() {
    let out = rampoly(&["series", "--kind", "gm", "--m", "1", "--order", "2"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["order"], 2);
    assert_eq!(v["coeffs"][2]["coeffs"], serde_json::json!(["3/1", "3/1"]));
}

#[test]
fn partitions_count_and_json() {
    let out = rampoly(&["partitions", "--m", "2", "--k", "1", "--i", "0", "--pi0"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "3\n");
    let out = rampoly(&[
        "partitions",
        "--m",
        "2",
        "--k",
        "1",
        "--i",
        "1",
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(v.is_array());
    let count = rampoly(&["partitions", "--m", "2", "--k", "1", "--i", "1"]);
    assert_eq!(
        stdout(&count).trim().parse::<usize>().unwrap(),
        v.as_array().unwrap().len()
    );
}

#[test]
fn partitions_over_cap_is_usage_error() {
    let out = rampoly(&["partitions", "--m", "8", "--k", "6", "--i", "0"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn verify_is_deterministic() {
    let args = ["verify", "--max-m", "3", "--order", "6"];
    let a = rampoly(&args);
    let b = rampoly(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(text.lines().all(|l| l.starts_with("PASS ")), "{text}");
    assert!(String::from_utf8_lossy(&a.stderr).contains("0 failed"));
}

#[test]
fn verify_bad_bounds_exit_2() {
    assert_eq!(
        code(&rampoly(&[
            "verify", "--suite", "series", "--max-m", "1", "--order", "0"
        ])),
        2
    );
    assert_eq!(
        code(&rampoly(&[
            "verify",
            "--suite",
            "partitions",
            "--max-m",
            "7"
        ])),
        2
    );
    assert_eq!(code(&rampoly(&["verify", "--max-m", "-1"])), 2);
    assert_eq!(code(&rampoly(&["rpoly"])), 2);
}

#[test]
fn bench_csv() {
    for target in ["r_routes", "triangles"] {
        let out = rampoly(&[
            "bench",
            "--target",
            target,
            "--max-m",
            "4",
            "--repetitions",
            "3",
        ]);
        assert_eq!(code(&out), 0);
        let text = stdout(&out);
        let mut lines = text.lines();
        assert_eq!(
            lines.next(),
            Some("target,route,size,repetitions,median_ns")
        );
        let rows: Vec<&str> = lines.collect();
        assert_eq!(rows.len(), 2);
        for row in rows {
            let f: Vec<&str> = row.split(',').collect();
            assert_eq!(f[0], target);
            assert_eq!(f[2], "4");
            assert_eq!(f[3], "3");
            f[4].parse::<u128>().unwrap();
        }
    }
    let out = rampoly(&[
        "bench",
        "--target",
        "r_routes",
        "--max-m",
        "2",
        "--repetitions",
        "0",
    ]);
    assert_eq!(code(&out), 2);
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("rampoly-out-{}.csv", std::process::id()));
    let p = path.to_str().unwrap();
    let out = rampoly(&["triangle", "--family", "assoc", "--max-n", "4", "--out", p]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        "1\n0,0\n0,1,0\n0,1,0,0\n0,1,3,0,0\n"
    );
    std::fs::remove_file(&path).unwrap();
}
