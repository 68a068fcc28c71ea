use std::path::PathBuf;

use lieforge::builder::format::parse;
use lieforge::cli::run_args;
use lieforge::linalg::Rational;
use serde_json::Value;

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("lieforge-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn lieforge(args: &[&str]) -> (i32, String) {
    let mut full = vec!["lieforge"];
    full.extend_from_slice(args);
    let o = run_args(full);
    (o.code, o.stdout)
}

fn json(args: &[&str]) -> Value {
    let (code, out) = lieforge(args);
    assert_eq!(code, 0, "{args:?}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn build_export_import_verify_round_trip() {
    for target in ["G2", "F4", "E6", "E7", "E8", "so(9)", "su(5)", "sp(3)"] {
        let built = json(&["build", target]);
        assert_eq!(built["payload"]["jacobi"]["violations"], 0, "{target}");
        let path = scratch(&format!("{}.lie", target.replace(['(', ')'], "_")));
        let p = path.to_str().unwrap();
        let exported = json(&["export", target, "--out", p]);
        assert_eq!(exported["payload"]["dim"], built["payload"]["dim"]);
        let imported = json(&["import", p]);
        assert_eq!(imported["payload"]["well_formed"], true);
        assert_eq!(imported["payload"]["jacobi"]["violations"], 0);
        let verified = json(&["verify", p, "--workers", "3"]);
        assert_eq!(verified["payload"]["jacobi"]["violations"], 0, "{target}");
        assert_eq!(
            verified["payload"]["jacobi"]["triples_checked"],
            built["payload"]["jacobi"]["triples_checked"]
        );
    }
}

#[test]
fn export_without_out_prints_the_file() {
    let (code, out) = lieforge(&["export", "so(3)"]);
    assert_eq!(code, 0);
    assert_eq!(out, "# lie-structure v1 so(3) dim=3\n0 1 2 -1 1\n0 2 1 1 1\n1 2 0 -1 1\n");
}

#[test]
fn corrupted_file_exits_two_with_first_violation() {
    let (_, text) = lieforge(&["export", "so(5)"]);
    let bad = text.replacen("0 2 1 1 1\n", "0 2 1 2 1\n", 1);
    assert_ne!(bad, text);
    let path = scratch("so5-bad.lie");
    std::fs::write(&path, &bad).unwrap();
    let (code, out) = lieforge(&["verify", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    let v: Value = serde_json::from_str(&out).unwrap();
    let first = &v["payload"]["jacobi"]["first_violation"];
    assert!(first.is_object());

    // Recompute the Jacobiator of the reported triple by vector brackets.
    let t = parse(&bad).unwrap();
    let idx = |k: &str| first[k].as_u64().unwrap() as usize;
    let (i, j, k) = (idx("i"), idx("j"), idx("k"));
    let e = |a: usize| {
        let mut v = vec![Rational::from_integer(0.into()); t.dim()];
        v[a] = Rational::from_integer(1.into());
        v
    };
    let b = |x: &[Rational], y: &[Rational]| t.bracket_vectors(x, y);
    let terms = [
        b(&e(i), &b(&e(j), &e(k))),
        b(&e(j), &b(&e(k), &e(i))),
        b(&e(k), &b(&e(i), &e(j))),
    ];
    let sum: Vec<Rational> = (0..t.dim())
        .map(|c| terms.iter().map(|v| v[c].clone()).sum())
        .collect();
    let expected: Vec<Value> = sum
        .iter()
        .enumerate()
        .filter(|(_, c)| **c != Rational::from_integer(0.into()))
        .map(|(c, v)| serde_json::json!([c, v.to_string()]))
        .collect();
    assert!(!expected.is_empty());
    assert_eq!(first["defect"], Value::Array(expected));
}

#[test]
fn json_is_identical_across_runs_and_workers() {
    for args in [
        vec!["build", "E8", "--verify"],
        vec!["build", "F4", "--verify"],
        vec!["build", "so(10)"],
        vec!["kostant", "F4", "B4"],
    ] {
        let mut outs = Vec::new();
        for w in ["1", "8", "1"] {
            let mut a = args.clone();
            a.extend(["--workers", w]);
            let (code, out) = lieforge(&a);
            assert_eq!(code, 0);
            outs.push(out);
        }
        assert!(outs.windows(2).all(|p| p[0] == p[1]), "{args:?}");
    }
}

#[test]
fn spec_examples() {
    let v = json(&["build", "F4", "--verify", "--format", "json"]);
    assert_eq!(v["payload"]["dim"], 52);
    assert_eq!(v["payload"]["jacobi"]["violations"], 0);
    assert_eq!(v["payload"]["killing"]["cartan_rank"], 4);

    let v = json(&["kostant", "F4", "B4"]);
    let dims: Vec<u64> = v["payload"]["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["dimension"].as_u64().unwrap())
        .collect();
    assert_eq!(dims, vec![44, 128, 84]);

    let v = json(&["exponents", "E8"]);
    assert_eq!(v["payload"]["exponents"], serde_json::json!([1, 7, 11, 13, 17, 19, 23, 29]));
}

#[test]
fn classical_names_are_accepted() {
    assert_eq!(json(&["roots", "SO(16)"])["payload"]["group"], "D8");
    assert_eq!(json(&["dims", "Spin(9)"])["payload"]["fundamental_dims"], serde_json::json!([9, 36, 84, 16]));
    assert_eq!(json(&["kostant", "SU(5)", "U(4)"])["payload"]["euler_number"], 5);
    assert_eq!(json(&["coset", "OP2"])["payload"]["cosets"][0]["dim"], 16);
    assert_eq!(json(&["spinsplit", "1"])["payload"]["entries"].as_array().unwrap().len(), 2);
}

#[test]
fn text_and_tsv_formats() {
    let (code, out) = lieforge(&["exponents", "G2", "--format", "tsv"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l == "payload.exponents\t1,5"));
    let (code, out) = lieforge(&["topology", "A2", "--format", "text"]);
    assert_eq!(code, 0);
    assert!(out.contains("unique non-trivial SU(2)-bundle over S^5"));
}

#[test]
fn unknown_verbs_and_bad_targets_exit_one() {
    assert_eq!(lieforge(&["explode", "E8"]).0, 1);
    assert_eq!(lieforge(&["build", "H4"]).0, 1);
    assert_eq!(lieforge(&["build", "so(11)+spin"]).0, 1);
    assert_eq!(lieforge(&["verify", "/nonexistent/file"]).0, 1);
    assert_eq!(lieforge(&["--help"]).0, 0);
}
