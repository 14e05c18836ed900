use farey_contact::cli::run;
use farey_contact::curves::CurveClass;
use farey_contact::slices::{SliceStack, Verdict};
use farey_contact::slopes::{FareyPath, Slope};
use farey_contact::trace::ProofTrace;

fn cli(args: &[&str]) -> (u8, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("farey-contact").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = cli(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out.trim_end().to_string()
}

#[test]
fn documented_examples() {
    assert_eq!(ok(&["bypass", "front", "2", "4/5"]), "1");
    assert_eq!(ok(&["bypass", "back", "0", "3"]), "1");
    assert_eq!(ok(&["curves", "int", "(5,4)", "(1,2)"]), "6");
    assert_eq!(ok(&["curves", "slope", "(5,4)"]), "4/5");
    assert_eq!(ok(&["monodromy", "apply", "phi", "(1,2)"]), "(4,3)");
    assert_eq!(ok(&["monodromy", "apply", "phi^-1", "(1,1)"]), "(0,1)");
    assert_eq!(ok(&["monodromy", "apply", "[[2,1],[1,1]]", "(1,-2)"]), "(0,1)");
    assert_eq!(ok(&["farey", "path", "-3", "-5"]), "-3 -> -4 -> -5");
    assert_eq!(ok(&["farey", "path", "-3", "inf"]), "-3 -> inf");
    assert_eq!(ok(&["farey", "mediant", "0", "1", "--half", "lower"]), "1/2");
    assert_eq!(ok(&["twist", "(5,4)", "2"]), "-6");
    assert_eq!(ok(&["twist", "(1,0)", "-3"]), "-3");
    assert_eq!(ok(&["imbalance", "-6", "-1"]), "true");
    assert_eq!(ok(&["legendrian", "range", "-5"]), "-2 0 2");
    assert_eq!(ok(&["chords", "count", "8"]), "1430");
    let out = ok(&["surgery", "classify", "--tb", "-3", "--rot", "0", "--coefficient", "1"]);
    assert!(out.starts_with("overtwisted"), "{out}");
    assert!(out.contains("surgery/embedding"));
    let out = ok(&["stack", "verdict", "-3 -[-]-> -4 -[+]-> inf"]);
    assert!(out.starts_with("overtwisted"));
    let out = ok(&["stack", "verdict", "-3 -[-]-> -4 -[-]-> inf", "--outer-sign", "-"]);
    assert!(out.starts_with("tight_candidate"));
}

#[test]
fn oracle_bound_cross_checks() {
    assert_eq!(ok(&["--oracle-bound", "8", "farey", "path", "2/5", "-3/7"]), "2/5 -> 1/3 -> 0 -> -1/2 -> -3/7");
    assert_eq!(ok(&["--oracle-bound", "10", "bypass", "front", "2", "4/5"]), "1");
    assert_eq!(ok(&["--oracle-bound", "12", "legendrian", "range", "-7"]), "-4 -2 0 2 4");
    assert_eq!(ok(&["--oracle-bound", "1", "chords", "count", "6"]), "132");
}

#[test]
fn json_output_reparses() {
    let path: FareyPath = serde_json::from_str(&ok(&["--json", "farey", "path", "-3", "-5"])).unwrap();
    assert_eq!(path.len(), 2);
    let s: Slope = serde_json::from_str(&ok(&["--json", "bypass", "front", "2", "4/5"])).unwrap();
    assert_eq!(s, Slope::integer(1));
    let c: CurveClass = serde_json::from_str(&ok(&["--json", "monodromy", "apply", "phi", "(1,2)"])).unwrap();
    assert_eq!(c, CurveClass::new(4, 3).unwrap());
    let n: u64 = serde_json::from_str(&ok(&["--json", "curves", "int", "(5,4)", "(4,3)"])).unwrap();
    assert_eq!(n, 1);
    let v: Verdict = serde_json::from_str(&ok(&["--json", "stack", "verdict", "-3 -[+]-> -4 -[-]-> inf"])).unwrap();
    assert!(v.is_overtwisted());
    let range: Vec<i64> = serde_json::from_str(&ok(&["--json", "legendrian", "range", "-4"])).unwrap();
    assert_eq!(range, vec![-1, 1]);
    let t: ProofTrace = serde_json::from_str(&ok(&["--json", "walkthrough"])).unwrap();
    assert!(t.is_sound());
    let both: serde_json::Value =
        serde_json::from_str(&ok(&["--json", "surgery", "classify", "--tb", "-5", "--rot", "2", "--coefficient", "3/2"]))
            .unwrap();
    let v: Verdict = serde_json::from_value(both["verdict"].clone()).unwrap();
    assert!(v.is_overtwisted());
    let _: ProofTrace = serde_json::from_value(both["trace"].clone()).unwrap();
    let stack: SliceStack = serde_json::from_value(
        serde_json::from_str::<serde_json::Value>(&ok(&["--json", "stack", "verdict", "-3 -[+]-> -4 -[-]-> inf"]))
            .unwrap()["witness"]["stack"]
            .clone(),
    )
    .unwrap();
    assert_eq!(stack.slices().len(), 2);
}

#[test]
fn exit_codes() {
    assert_eq!(cli(&["bogus"]).0, 2);
    assert_eq!(cli(&["farey"]).0, 2);
    assert_eq!(cli(&["bypass", "sideways", "1", "2"]).0, 2);
    assert_eq!(cli(&["bypass", "front", "x", "2"]).0, 1);
    assert_eq!(cli(&["curves", "int", "(2,4)", "(1,0)"]).0, 1);
    assert_eq!(cli(&["bypass", "front", "2", "2"]).0, 1);
    assert_eq!(cli(&["farey", "path", "inf", "inf"]).0, 1);
    assert_eq!(cli(&["legendrian", "range", "-2"]).0, 1);
    assert_eq!(cli(&["surgery", "classify", "--tb", "-3", "--rot", "0", "--coefficient", "-1"]).0, 1);
    assert_eq!(cli(&["surgery", "classify", "--tb", "-4", "--rot", "0", "--coefficient", "1"]).0, 1);
    let (code, _, err) = cli(&["twist", "(1,2)", "2"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error:"));
    assert_eq!(cli(&["--help"]).0, 0);
}

#[test]
fn walkthrough_trace_file_reverifies() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let p = path.to_str().unwrap();
    let (code, out, _) = cli(&["walkthrough", "--trace-file", p]);
    assert_eq!(code, 0);
    assert!(!out.contains("FAILED"));
    let (code, again, _) = cli(&["trace", "verify", p]);
    assert_eq!(code, 0);
    assert_eq!(again, out);

    // tamper with one frozen expectation
    let text = std::fs::read_to_string(&path).unwrap();
    let tampered = text.replacen("\"expected\": \"(4,3)\"", "\"expected\": \"(3,4)\"", 1);
    assert_ne!(tampered, text);
    std::fs::write(&path, tampered).unwrap();
    let (code, out, _) = cli(&["trace", "verify", p]);
    assert_eq!(code, 1);
    assert!(out.contains("FAILED"));
}
