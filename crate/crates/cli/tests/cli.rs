use std::process::{Command, Output};

use serde_json::Value;

use lrfaces::{Partition, SchubertIndex, Weight};

const BIN: &str = env!("CARGO_BIN_EXE_lrfaces");
const VERSION: &str = env!("CARGO_PKG_VERSION");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("binary runs")
}

fn run_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(BIN)
        .args(args)
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = run(&full);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

fn result(args: &[&str]) -> Value {
    json(args)["result"].clone()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

const X6: &str = "1,1,0,0,-1,-1";
const X3: &str = "1,0,-1";

#[test]
fn lr_examples() {
    assert_eq!(
        result(&["lr", "--lambda", "2,1", "--mu", "2,1", "--nu", "3,2,1"])["coefficient"],
        2
    );
    assert_eq!(
        result(&["lr", "--lambda", "", "--mu", "", "--nu", ""])["coefficient"],
        1
    );
    assert_eq!(
        result(&["lr", "--lambda", "1", "--mu", "1", "--nu", "3"])["coefficient"],
        0
    );
}

#[test]
fn lr_golden_json() {
    let out = run(&[
        "--format", "json", "lr", "--lambda", "2,1", "--mu", "2,1", "--nu", "3,2,1",
    ]);
    let expected = format!(
        "{{\n  \"command\": \"lr\",\n  \"inputs\": {{\n    \"lambda\": \"2,1\",\n    \"mu\": \"2,1\",\n    \"nu\": \"3,2,1\"\n  }},\n  \"result\": {{\n    \"coefficient\": 2\n  }},\n  \"version\": \"{VERSION}\"\n}}\n"
    );
    assert_eq!(String::from_utf8(out.stdout).unwrap(), expected);
}

#[test]
fn lr_golden_text() {
    let out = run(&["lr", "--lambda", "2,1", "--mu", "2,1", "--nu", "3,2,1"]);
    let expected =
        format!("# lr (lrfaces {VERSION})\ninputs: lambda=2,1 mu=2,1 nu=3,2,1\ncoefficient: 2\n");
    assert_eq!(String::from_utf8(out.stdout).unwrap(), expected);
}

#[test]
fn triple_examples() {
    assert_eq!(
        result(&["triple", "--n", "6", "--lambda", X6, "--mu", X6, "--nu", X6])["value"],
        3
    );
    assert_eq!(
        result(&["triple", "--n", "1", "--lambda", "2", "--mu", "-5", "--nu", "3"])["value"],
        1
    );
    assert_eq!(
        result(&["triple", "--n", "2", "--lambda", "1,0", "--mu", "1,0", "--nu", "0,0"])["value"],
        0
    );
}

#[test]
fn triple_oracle_flag_and_bound_override() {
    let args = [
        "--format", "json", "triple", "--n", "3", "--lambda", X3, "--mu", X3, "--nu", X3,
        "--oracle",
    ];
    let out = run(&args);
    assert_eq!(code(&out), 0);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["result"]["value"], 2);
    assert_eq!(v["result"]["oracle"], 2);

    let out = run_env(&args, "LR_REDUCE_ORACLE_BOUND", "2");
    assert_eq!(code(&out), 3);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(
        err.starts_with("error: ") && err.trim_end().lines().count() == 1,
        "{err}"
    );

    let six = [
        "triple", "--n", "6", "--lambda", X6, "--mu", X6, "--nu", X6, "--oracle",
    ];
    assert_eq!(code(&run(&six)), 3);
}

#[test]
fn schubert_examples() {
    let deg = result(&[
        "schubert", "degree", "--r", "3", "--n", "6", "--I", "1,3,5", "--J", "1,3,5", "--K",
        "1,3,5",
    ]);
    assert_eq!(deg["degree"], 2);
    let faces = result(&["schubert", "faces", "--r", "1", "--n", "2"]);
    assert_eq!(faces["count"], 3);
    assert_eq!(faces["triples"].as_array().unwrap().len(), 3);
    let empty = result(&[
        "schubert", "expand", "--r", "1", "--n", "2", "--I", "2", "--J", "2",
    ]);
    assert_eq!(empty["expansion"], Value::Array(vec![]));
    let sq = result(&[
        "schubert", "expand", "--r", "3", "--n", "6", "--I", "1,3,5", "--J", "1,3,5",
    ]);
    let two = sq["expansion"]
        .as_array()
        .unwrap()
        .iter()
        .find(|e| e["index"] == "2,4,6")
        .unwrap();
    assert_eq!(two["coefficient"], 2);
}

#[test]
fn horn_examples() {
    let r = result(&["horn", "--n", "6", "--lambda", X6, "--mu", X6, "--nu", X6]);
    assert_eq!(r["member"], true);
    assert_eq!(r["violated"], Value::Null);
    let r = result(&[
        "horn",
        "--n",
        "3",
        "--lambda",
        "0,0,0",
        "--mu",
        "0,0,0",
        "--nu",
        "0,0,0",
        "--d-variant",
    ]);
    assert_eq!(r["member"], true);
    let r = result(&[
        "horn", "--n", "2", "--lambda", "1,0", "--mu", "0,0", "--nu", "0,0",
    ]);
    assert_eq!(r["member"], false);
    assert_eq!(r["trace"], 1);
}

#[test]
fn reduce_examples() {
    let r = result(&[
        "reduce", "--n", "6", "--lambda", X6, "--mu", X6, "--nu", X6, "--I", "1,3,5", "--J",
        "1,3,5", "--K", "1,3,5",
    ]);
    assert_eq!(r["lhs"], 3);
    assert_eq!(r["factor_small"], 2);
    assert_eq!(r["factor_large"], 2);
    assert_eq!(r["degree"], 2);
    assert_eq!(r["on_face"], true);
    assert_eq!(r["verdict"], "lhs_leq_product");

    let r = result(&[
        "reduce", "--n", "2", "--lambda", "1,-1", "--mu", "0,0", "--nu", "1,-1", "--I", "2", "--J",
        "1", "--K", "1",
    ]);
    assert_eq!(
        (r["lhs"].clone(), r["product"].clone(), r["verdict"].clone()),
        (1.into(), 1.into(), "equal".into())
    );

    let r = result(&[
        "reduce", "--n", "3", "--lambda", "0,0,0", "--mu", "0,0,0", "--nu", "0,0,0", "--I", "1",
        "--J", "1", "--K", "3",
    ]);
    assert_eq!(r["verdict"], "equal");
    assert_eq!(r["lhs"], 1);
}

#[test]
fn reduce_sweep() {
    let r = result(&["reduce", "--n", "3", "--sweep", "--bound", "2"]);
    let count = r["count"].as_u64().unwrap();
    assert!(count > 0);
    assert_eq!(r["verdicts"]["equal"].as_u64().unwrap(), count);
    let r = result(&[
        "reduce",
        "--n",
        "3",
        "--sweep",
        "--bound",
        "1",
        "--r",
        "1",
        "--d-variant",
    ]);
    for rep in r["reports"].as_array().unwrap() {
        assert_eq!(rep["I"].as_str().unwrap().split(',').count(), 1);
    }
}

#[test]
fn kron_examples() {
    let t = result(&["kron", "table", "--n", "3"]);
    let labels: Vec<&str> = t["partitions"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    let row = labels.iter().position(|&p| p == "2,1").unwrap();
    let values = &t["values"][row];
    let col = |p: &str| labels.iter().position(|&q| q == p).unwrap();
    assert_eq!(
        (
            values[col("1,1,1")].clone(),
            values[col("2,1")].clone(),
            values[col("3")].clone()
        ),
        (2.into(), 0.into(), (-1).into())
    );
    assert_eq!(
        result(&["kron", "coeff", "--alpha", "2,1", "--beta", "2,1", "--gamma", "2,1"])["value"],
        1
    );
    let ml = result(&[
        "kron", "ml-check", "--alpha", "4,1", "--beta", "4,1", "--gamma", "3,2",
    ]);
    assert_eq!(ml["equality_case"], true);
    assert_eq!(ml["k"], 1);
    assert_eq!(ml["lr"], 1);
}

#[test]
fn exit_codes() {
    let malformed = run(&["lr", "--lambda", "2,x", "--mu", "1", "--nu", "3"]);
    assert_eq!(code(&malformed), 2);
    let err = String::from_utf8(malformed.stderr).unwrap();
    assert_eq!(err.trim_end().lines().count(), 1, "{err}");
    assert_eq!(
        code(&run(&["lr", "--lambda", "1,2", "--mu", "1", "--nu", "3"])),
        2
    );
    assert_eq!(
        code(&run(&[
            "triple", "--n", "3", "--lambda", "1,0", "--mu", "0,0,0", "--nu", "0,0,0"
        ])),
        3
    );
    assert_eq!(
        code(&run(&[
            "schubert", "degree", "--r", "2", "--n", "4", "--I", "1,5", "--J", "1,2", "--K", "1,2"
        ])),
        2
    );
    assert_eq!(
        code(&run(&[
            "schubert", "degree", "--r", "2", "--n", "4", "--I", "3,1", "--J", "1,2", "--K", "1,2"
        ])),
        2
    );
    assert_eq!(
        code(&run(&[
            "schubert", "degree", "--r", "2", "--n", "4", "--I", "1,2,3", "--J", "1,2", "--K",
            "1,2"
        ])),
        3
    );
    assert_eq!(
        code(&run(&["schubert", "faces", "--r", "3", "--n", "3"])),
        3
    );
    assert_eq!(code(&run(&["kron", "table", "--n", "40"])), 3);
    assert_eq!(code(&run(&["bogus"])), 2);
}

#[test]
fn output_is_byte_identical() {
    for format in ["text", "json"] {
        let args = [
            "--format",
            format,
            "reduce",
            "--n",
            "3",
            "--sweep",
            "--bound",
            "1",
            "--d-variant",
        ];
        let a = run(&args);
        let b = run(&args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn echoed_inputs_reparse() {
    let v = json(&[
        "triple", "--n", "3", "--lambda", "+1,0,-1", "--mu", X3, "--nu", X3,
    ]);
    let inputs = &v["inputs"];
    assert_eq!(
        inputs["lambda"]
            .as_str()
            .unwrap()
            .parse::<Weight>()
            .unwrap(),
        X3.parse::<Weight>().unwrap()
    );
    assert_eq!(inputs["n"], 3);

    let v = json(&["lr", "--lambda", "2,1,0", "--mu", "", "--nu", "2,1"]);
    let inputs = &v["inputs"];
    assert_eq!(
        inputs["lambda"]
            .as_str()
            .unwrap()
            .parse::<Partition>()
            .unwrap(),
        Partition::new(vec![2, 1]).unwrap()
    );
    assert_eq!(
        inputs["mu"].as_str().unwrap().parse::<Partition>().unwrap(),
        Partition::empty()
    );

    let v = json(&[
        "schubert", "degree", "--r", "3", "--n", "6", "--I", "1,3,5", "--J", "1,3,5", "--K",
        "1,3,5",
    ]);
    let i = SchubertIndex::parse(v["inputs"]["I"].as_str().unwrap(), 6).unwrap();
    assert_eq!(i, SchubertIndex::parse("1,3,5", 6).unwrap());
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("lr.json");
    let args = ["lr", "--lambda", "2,1", "--mu", "2,1", "--nu", "3,2,1"];
    let mut with_out = vec!["--format", "json", "--out", path.to_str().unwrap()];
    with_out.extend_from_slice(&args);
    let out = run(&with_out);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let mut direct = vec!["--format", "json"];
    direct.extend_from_slice(&args);
    assert_eq!(std::fs::read(&path).unwrap(), run(&direct).stdout);
}
