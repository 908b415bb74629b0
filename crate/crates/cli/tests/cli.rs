use std::process::{Command, Output};

fn hcx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hcx"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn exit_codes() {
    assert_eq!(
        hcx(&["classify", "--t", "-1", "0,1,0,0"]).status.code(),
        Some(0)
    );
    assert_eq!(hcx(&["inv", "--t", "1", "1,0,1,0"]).status.code(), Some(3));
    assert_eq!(hcx(&["polar", "--t", "0", "0,2"]).status.code(), Some(3));
    assert_eq!(
        hcx(&["classify", "--t", "1", "1,0,q,0"]).status.code(),
        Some(2)
    );
    assert_eq!(hcx(&["classify", "1,0,0,0"]).status.code(), Some(2));
    assert_eq!(
        hcx(&["moments", "--t", "1", "1,0,0,0", "--n", "13"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        hcx(&["unitset", "--t", "-1", "--count", "5", "--range", "3:4"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        hcx(&["classify", "--t", "1", "--precision", "0", "1,0,0,0"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn malformed_input_never_panics() {
    let cases: &[&[&str]] = &[
        &["classify", "--t", "inf", "1,0,0,0"],
        &["classify", "--t", "1", ""],
        &["classify", "--t", "1", ",,,"],
        &["mul", "--t", "1", "1,0,0,0"],
        &["act", "--t", "1", "1,0,0", "1,0"],
        &["act", "--t", "1", "1,0,0,1", "1e400,0"],
        &["exp", "--t", "1", "--theta", "nan"],
        &["unitset", "--t", "1", "--count", "-4"],
        &["unitset", "--t", "1", "--count", "10", "--range", "1"],
        &["moments", "--t", "1", "1,0,0,0", "--n", "-1"],
        &["norm", "--t", "1", "--tol", "-1", "1,0,0,0"],
        &["bogus"],
    ];
    for args in cases {
        let code = hcx(args).status.code();
        assert_eq!(code, Some(2), "{args:?}");
    }
}

#[test]
fn output_is_deterministic() {
    let args = [
        "unitset", "--t", "1.5", "--count", "77", "--range", "-3:2", "--format", "csv",
    ];
    let a = hcx(&args);
    let b = hcx(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);

    let args = ["moments", "--t", "-2", "0.3,-1.2,0.8,0.5", "--n", "5"];
    assert_eq!(hcx(&args).stdout, hcx(&args).stdout);
}

#[test]
fn csv_uses_lf_and_header() {
    let o = hcx(&["unitset", "--t", "-1", "--count", "12", "--format", "csv"]);
    let text = stdout(&o);
    assert!(!text.contains('\r'));
    assert!(text.starts_with("x,y,branch\n"));
    assert_eq!(text.lines().count(), 13);
}

#[test]
fn csv_header_matches_json_fields() {
    let json = stdout(&hcx(&["spec", "--t", "1", "0.5,2,1,0.5"]));
    let csv = stdout(&hcx(&[
        "spec",
        "--t",
        "1",
        "0.5,2,1,0.5",
        "--format",
        "csv",
    ]));
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    let header: Vec<&str> = csv.lines().next().unwrap().split(',').collect();
    assert_eq!(keys, header);
}

#[test]
fn precision_17_round_trip() {
    let o = hcx(&["spec", "--t", "-0.7", "1.3,0.2,-0.4,2", "--precision", "17"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let t = scaled_hypercomplex::Scale::new(-0.7).unwrap();
    let h = scaled_hypercomplex::Hypercomplex::from_coords([1.3, 0.2, -0.4, 2.0], t);
    let sigma = scaled_hypercomplex::spectral::spectralize(&h).value;
    assert_eq!(v["sigma_re"].as_f64().unwrap(), sigma.re);
    assert_eq!(v["sigma_im"].as_f64().unwrap(), sigma.im);

    let o = hcx(&[
        "exp",
        "--t",
        "2",
        "--theta",
        "0.3",
        "--precision",
        "17",
        "--format",
        "csv",
    ]);
    let text = stdout(&o);
    let row: Vec<f64> = text
        .lines()
        .nth(1)
        .unwrap()
        .split(',')
        .map(|c| c.parse().unwrap())
        .collect();
    let e =
        scaled_hypercomplex::hyperbolic::exp_jt(0.3, scaled_hypercomplex::Scale::new(2.0).unwrap());
    assert_eq!((row[1], row[2]), (e.x, e.y));
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("points.csv");
    let o = hcx(&[
        "unitset",
        "--t",
        "0",
        "--count",
        "10",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    for line in text.lines().skip(1) {
        let x: f64 = line.split(',').next().unwrap().parse().unwrap();
        assert_eq!(x.abs(), 1.0);
    }
}

#[test]
fn act_reports_lines() {
    let text = stdout(&hcx(&[
        "act", "--t", "1", "1,0,0,1", "1,0", "--format", "csv",
    ]));
    let row = text.lines().nth(1).unwrap();
    assert!(row.contains("y=1x;y=-1x"));
    assert!(row.contains("true"));
    let text = stdout(&hcx(&["act", "--t", "-1", "1,2,2,4", "1,1"]));
    assert!(text.contains("WholeSpaceIfSingularMatrix"));
}

#[test]
fn moments_mark_not_applicable() {
    let text = stdout(&hcx(&[
        "moments", "--t", "1", "1,0,1,0", "--n", "2", "--format", "csv",
    ]));
    assert!(text.lines().skip(1).all(|l| l.ends_with("n/a,n/a")));
    let json = stdout(&hcx(&["moments", "--t", "-1", "0,1,0,0", "--n", "2"]));
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    let pp = v
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["word"] == "PP")
        .unwrap();
    assert_eq!(pp["direct"], -1.0);
    assert_eq!(pp["closed"], -1.0);
}
