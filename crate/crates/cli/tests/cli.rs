use std::path::{Path, PathBuf};
use std::process::Command;

use raddeg_cli::workspace::{emit, parse_file, parse_str, WorkspaceError};
use raddeg_cli::{exit_code, Cli};
use raddeg_core::degrees::{Check, TheoremReport, Verdict};
use clap::Parser;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn raddeg(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_raddeg")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn path_str(name: &str) -> String {
    fixture(name).to_string_lossy().into_owned()
}

const FIXTURES: [&str; 6] = [
    "dual_numbers.rdg",
    "truncated_cubic.rdg",
    "truncated_cubic_rationals.rdg",
    "a2.rdg",
    "a3_sink.rdg",
    "species.rdg",
];

#[test]
fn fixtures_round_trip() {
    for name in FIXTURES {
        let path = fixture(name);
        let ws = parse_file(&path).unwrap();
        let text = emit(&ws).unwrap();
        let again = parse_str(&text, path.parent()).unwrap();
        assert_eq!(emit(&again).unwrap(), text, "{name}");
        assert_eq!(again.algebra, ws.algebra);
        assert_eq!(again.modules.len(), ws.modules.len());
        for ((n1, m1), (n2, m2)) in ws.modules.iter().zip(&again.modules) {
            assert_eq!(n1, n2);
            assert_eq!(m1, m2);
        }
        for (a, b) in ws.morphisms.iter().zip(&again.morphisms) {
            assert_eq!(a.name, b.name);
            assert_eq!(a.morphism.matrix, b.morphism.matrix);
        }
        let (c1, c2) = (ws.catalogue().unwrap(), again.catalogue().unwrap());
        assert_eq!(c1.labels(), c2.labels());
        assert!(c1.members().iter().zip(c2.members()).all(|(a, b)| a == b));
    }
}

#[test]
fn truncated_cubic_has_three_members() {
    let ws = parse_file(&fixture("truncated_cubic.rdg")).unwrap();
    assert_eq!(ws.catalogue().unwrap().len(), 3);
}

#[test]
fn representation_modules_match_action_form() {
    let ws = parse_file(&fixture("a2.rdg")).unwrap();
    let text = emit(&ws).unwrap();
    assert!(text.contains("action a ="));
    assert!(!text.contains("vertex_dims"));
}

#[test]
fn empty_file_is_rejected() {
    let err = parse_str("", None).unwrap_err();
    assert!(err.to_string().contains("missing field block"), "{err}");
}

#[test]
fn non_admissible_relation_reports_its_line() {
    let src = "[field]\nkind = prime\np = 2\n\n[algebra]\npresentation = quiver\nvertices = 1 2\narrow a = 1 -> 2\nrelation = a\nnilpotency_cap = 2\n";
    match parse_str(src, None).unwrap_err() {
        WorkspaceError::Semantic { line, error: raddeg_core::Error::NotAdmissible(_) } => assert_eq!(line, 9),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn syntax_errors_carry_positions() {
    let src = "[field]\nkind = prime\np = 2\n[algebra]\npresentation = quiver\nvertices = 1\narrow x = 1 -> 1\nrelation = x x\nnilpotency_cap = 2\n[module M]\ndim = 1\naction e1 =\n[1]\naction x =\n[q]\n";
    match parse_str(src, None).unwrap_err() {
        WorkspaceError::Syntax { line, column, .. } => assert_eq!((line, column), (15, 2)),
        other => panic!("unexpected {other:?}"),
    }
    let err = parse_str("[field]\nkind prime\n", None).unwrap_err();
    assert!(matches!(err, WorkspaceError::Syntax { line: 2, .. }), "{err}");
}

#[test]
fn verify_theorem_b_on_truncated_cubic() {
    let (code, out, _) = raddeg(&["verify", &path_str("truncated_cubic.rdg"), "--theorem", "B"]);
    assert_eq!(code, 0);
    let epis: std::collections::BTreeSet<&str> = out
        .lines()
        .filter(|l| l.starts_with("theorem B") && l.ends_with(": verified"))
        .filter_map(|l| l.split_once('[').and_then(|(_, r)| r.split_once(']')).map(|(s, _)| s))
        .collect();
    assert_eq!(epis.into_iter().collect::<Vec<_>>(), ["M1+M3 -> M2", "M2 -> M1", "M3 -> M2"], "{out}");
    assert!(!out.contains("VIOLATION"));
}

#[test]
fn compose_iota_pi() {
    let (code, out, _) = raddeg(&["compose-path", &path_str("dual_numbers.rdg"), "--path", "iota,pi"]);
    assert_eq!(code, 0);
    assert!(out.contains("\"composite_depth\":\"infinite-at-bound\""), "{out}");
    assert!(out.contains("\"witness\":{"), "{out}");
}

#[test]
fn species_example_prints_both_facts() {
    let (code, out, _) = raddeg(&["compose-path", &path_str("species.rdg"), "--path", "f_prime,g"]);
    assert_eq!(code, 0);
    assert!(out.contains("\"composite_depth\":2"), "{out}");
    assert!(out.contains("\"parallel_zero_path\":\"S2 -> P1 -> P1/S2\""), "{out}");
}

#[test]
fn ar_quiver_dot_for_a2() {
    let (code, out, _) = raddeg(&["ar-quiver", &path_str("a2.rdg"), "--dot"]);
    assert_eq!(code, 0);
    assert_eq!(out.matches("[label=\"S").count() + out.matches("[label=\"P").count(), 3);
    assert_eq!(out.matches("[label=\"(1,1)\"]").count(), 2);
    assert_eq!(out.matches("style=dashed, constraint=false").count(), 1);
}

#[test]
fn degree_command() {
    let (code, out, _) = raddeg(&["degree", &path_str("dual_numbers.rdg"), "--morphism", "pi", "--side", "left"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("left degree of pi [M2 -> M1]: 1"), "{out}");
    let (_, out, _) = raddeg(&["degree", &path_str("dual_numbers.rdg"), "--morphism", "iota", "--side", "right"]);
    assert!(out.contains(": 1 "), "{out}");
}

#[test]
fn usage_and_lookup_errors_exit_one() {
    let (code, _, err) = raddeg(&["degree", &path_str("dual_numbers.rdg"), "--morphism", "nope"]);
    assert_eq!(code, 1);
    assert!(err.contains("unknown morphism"));
    assert_eq!(raddeg(&["verify", "--theorem", "B"]).0, 1);
    assert_eq!(raddeg(&["no-such-command"]).0, 1);
    assert_eq!(raddeg(&["radical-table", "/nonexistent.rdg"]).0, 1);
}

#[test]
fn cap_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_raddeg"))
        .args(["radical-table", &path_str("truncated_cubic.rdg")])
        .env("RADDEG_CAP", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not nilpotent below the cap 2"));
}

#[test]
fn violation_maps_to_exit_two() {
    let mut r = TheoremReport::new("B", "test");
    r.hypothesis(Check::new("h", true, serde_json::Value::Null));
    r.conclude(Check::new("c", false, serde_json::Value::Null));
    let r = r.finish();
    assert_eq!(r.status, Verdict::Violation);
    assert_eq!(exit_code(std::slice::from_ref(&r)), 2);
    let mut ok = TheoremReport::new("B", "test");
    ok.hypothesis(Check::new("h", false, serde_json::Value::Null));
    assert_eq!(exit_code(&[ok.finish()]), 0);
}

#[test]
fn json_records_have_fixed_keys() {
    let (code, out, _) = raddeg(&["verify", &path_str("dual_numbers.rdg"), "--theorem", "B", "--json"]);
    assert_eq!(code, 0);
    for line in out.lines() {
        assert!(line.starts_with("{\"theorem\":"), "{line}");
        let keys: Vec<usize> = ["\"theorem\"", "\"fixture\"", "\"clause\"", "\"status\"", "\"data\""]
            .iter()
            .map(|k| line.find(k).unwrap())
            .collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]), "{line}");
    }
}

#[test]
fn output_file_and_determinism() {
    let dir = std::env::temp_dir().join(format!("raddeg-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let f = dir.join("report.txt");
    let args = ["verify", &path_str("a3_sink.rdg"), "--theorem", "all", "--out", f.to_str().unwrap()];
    let (c1, o1, _) = raddeg(&args);
    let (c2, o2, _) = raddeg(&args);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(o1, o2);
    assert_eq!(std::fs::read_to_string(&f).unwrap(), o1);
    let d1 = raddeg(&["ar-quiver", &path_str("species.rdg"), "--dot"]).1;
    let d2 = raddeg(&["ar-quiver", &path_str("species.rdg"), "--dot"]).1;
    assert_eq!(d1, d2);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn fixture_command_emits_parsable_workspaces() {
    let (_, names, _) = raddeg(&["fixture"]);
    let first = names.lines().next().unwrap();
    let (code, text, _) = raddeg(&["fixture", first]);
    assert_eq!(code, 0);
    let ws = parse_str(&text, None).unwrap();
    assert!(ws.catalogue().is_some());
}

#[test]
fn clap_definition_is_consistent() {
    use clap::CommandFactory;
    Cli::command().debug_assert();
    assert!(Cli::try_parse_from(["raddeg", "verify", "--all-fixtures", "--theorem", "B,C"]).is_ok());
}
