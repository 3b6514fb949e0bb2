use std::process::Command;

use chowwitt::VerificationReport;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_chowwitt")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn mw_eval_names_h() {
    let (code, out, _) = run(&["mw", "eval", "2 + eta*[-1]"]);
    assert_eq!((code, out.as_str()), (0, "h = <1,-1>\n"));
    let (_, out, _) = run(&["mw", "eval", "1 + eta*[2]"]);
    assert_eq!(out, "<2>\n");
}

#[test]
fn mw_equal_exit_codes() {
    assert_eq!(run(&["mw", "equal", "--", "[2,3]", "-<-1>*[3,2]"]).0, 0);
    assert_eq!(run(&["mw", "equal", "[2]", "[3]"]).0, 1);
    assert_eq!(run(&["mw", "equal", "--field", "F5", "eta*[2]", "eta*[3]"]).0, 0);
}

#[test]
fn mw_normalize_with_and_without_eps() {
    let (_, plain, _) = run(&["mw", "normalize", "[3,2]"]);
    let (_, sorted, _) = run(&["--enable-eps-commute", "mw", "normalize", "[3,2]"]);
    assert_eq!(plain, "[3,2]\n");
    assert_ne!(plain, sorted);
    assert_eq!(run(&["mw", "normalize", "[-1,-1]"]).1, "[-1,-1]\n");
    assert_eq!(run(&["mw", "normalize", "[2,-1]"]).1, "0\n");
    assert_eq!(run(&["mw", "normalize", "[1/2,1/2]"]).1, "0\n");
}

#[test]
fn form_commands() {
    assert_eq!(run(&["form", "eval", "<1,-1>"]).1, "h = <1,-1>\n");
    assert_eq!(run(&["form", "equal", "<1,1>", "<2,2>"]).0, 0);
    assert_eq!(run(&["form", "equal", "--field", "F3", "<1,1>", "<2,2>"]).0, 0);
    assert_eq!(run(&["form", "equal", "<1>", "<2>"]).0, 1);
    let (code, out, _) = run(&["form", "invariants", "<1,1,-3>"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("rank 3\n"), "{out}");
    assert!(out.contains("signature 1"), "{out}");
}

#[test]
fn residue_command() {
    let (code, out, _) = run(&["residue", "--divisor", "t", "eta*[t^-1]"]);
    assert_eq!((code, out.as_str()), (0, "(eta ⊗ t^∨)·[t]\n"));
    let (_, out, _) = run(&[
        "residue", "--field", "Q(a,b)", "--divisor", "4*a^3 + 27*b^2", "--label", "Delta", "--json",
        "eta*[(4*a^3 + 27*b^2)^-1]",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["value"], "eta");
    assert_eq!(v["twist"][0], "Delta^∨");
}

#[test]
fn ring_table_mbar() {
    let (code, out, _) = run(&["ring", "table", "--preset", "mbar", "--field", "C", "--max-degree", "4"]);
    assert_eq!(code, 0);
    assert!(out.contains("strictly commutative"));
    assert!(out.contains("(2,O)  Z/24  [T^2]"), "{out}");
    assert!(out.contains("(1,O)  Z/2 + Z  [V, T*H]"), "{out}");
    let (_, json, _) = run(&["--json", "ring", "table", "--preset", "mbar", "--field", "C", "--max-degree", "4"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    let cells = v["cells"].as_array().unwrap();
    assert_eq!(cells.len(), 10);
    assert_eq!(cells[4]["factors"], serde_json::json!([24]));
    assert_eq!(cells[2]["free"], 1);
}

#[test]
fn ring_reduce_and_presets() {
    let (code, out, _) = run(&["ring", "reduce", "--preset", "mbar", "12*H*T^2 + V*T"]);
    assert_eq!((code, out.as_str()), (0, "12*H*T^2 + V*T = 0 in (2,E)\n"));
    let (_, out, _) = run(&["ring", "reduce", "--preset", "bmu", "--n", "2", "T*U"]);
    assert!(out.contains("Z/8"), "{out}");
    let (_, out, _) = run(&["ring", "preset-list"]);
    for p in ["BGm", "Bmu(2n)", "MbarEll", "MEll", "MbarEll_I", "BGm_I"] {
        assert!(out.lines().any(|l| l == p), "{p}");
    }
}

#[test]
fn ring_table_from_file() {
    let dir = std::env::temp_dir().join(format!("chowwitt-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("p1.toml");
    std::fs::write(&path, "name = \"P1\"\ngenerators = [{ name = \"x\", codim = 1 }]\nrelations = [\"x^2\"]\ncoefficients = \"F5\"\n").unwrap();
    let (code, out, _) = run(&["ring", "table", "--file", path.to_str().unwrap(), "--max-degree", "2"]);
    assert_eq!(code, 0);
    assert!(out.contains("(1,O)  Z/2 + Z  [x]"), "{out}");
    assert!(out.contains("(2,O)  0  []"), "{out}");
}

#[test]
fn verify_bmu_over_f5() {
    let (code, out, _) = run(&["verify", "--suite", "bmu", "--n", "1", "--field", "F5", "--json"]);
    assert_eq!(code, 0, "{out}");
    let r: VerificationReport = serde_json::from_str(&out).unwrap();
    assert!(r.assumptions[0].contains("strictly commutative"));
    assert!(r.checks.iter().any(|c| c.id == "relations-bmu[n=1]" && c.anchor.contains("TU−2nT")));
    assert!(r.checks.iter().any(|c| c.id.starts_with("boundary-two-charts")));
    assert!(r.checks.iter().all(|c| c.status == chowwitt::Status::Pass));
    let (_, again, _) = run(&["verify", "--suite", "bmu", "--n", "1", "--field", "F5", "--json"]);
    assert_eq!(out, again);
}

#[test]
fn verify_failure_exit_code() {
    let (code, out, _) = run(&["verify", "--suite", "mbar", "--field", "R"]);
    assert_eq!(code, 1);
    assert!(out.contains("FAIL      i-cohomology-mbar"), "{out}");
}

#[test]
fn usage_errors() {
    assert_eq!(run(&["frobnicate"]).0, 64);
    assert_eq!(run(&["verify", "--suite", "nope"]).0, 64);
    let (code, _, err) = run(&["ring", "table", "--preset", "mbar", "--field", "Q"]);
    assert_eq!(code, 64);
    assert!(err.contains("not finitely generated"), "{err}");
    let (code, _, err) = run(&["mw", "eval", "[2"]);
    assert_eq!(code, 64);
    assert!(err.contains("error"), "{err}");
    assert_eq!(run(&["--help"]).0, 0);
}
