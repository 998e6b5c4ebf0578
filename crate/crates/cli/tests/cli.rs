use std::process::{Command, Output};

fn hookpoly(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hookpoly"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn gpoly_of_single_box_is_x() {
    let o = hookpoly(&["gpoly", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("x"));
}

#[test]
fn gpoly_serialization_line() {
    let o = hookpoly(&["gpoly", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "x^2-x-2\n[(2,\"1/1\"),(1,\"-1/1\"),(0,\"-2/1\")]\n"
    );
}

#[test]
fn example_walkthrough_contains_worked_numbers() {
    let o = hookpoly(&["example-55331"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for needle in [
        "T={2,4,5}",
        "B={1,3,5,6}",
        "17x^2-38x-75",
        "96/12 = 8",
        "(x+5)(x+1)(x-3)(x-5) / (x+3)(x-2)(x-4)",
        "= 17\n",
    ] {
        assert!(text.contains(needle), "missing {needle:?} in\n{text}");
    }
}

#[test]
fn check_hook_ratio_sum_prints_seventeen() {
    let o = hookpoly(&["check", "COR_4_4", "5,5,3,3,1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("pass"));
    assert!(text.contains("lhs: 17"));
    assert!(text.contains("rhs: 17"));
}

#[test]
fn check_accepts_compact_form() {
    let a = hookpoly(&["check", "thm_4_2", "55331"]);
    let b = hookpoly(&["check", "THM_4_2", "5,5,3,3,1"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn per_corner_check_prints_one_outcome_per_corner() {
    let o = hookpoly(&["check", "CORNER_RATIO_2_2", "55331"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).matches(": pass").count(), 3);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["check", "NOT_AN_ID", "21"],
        vec!["hooks", "2,3"],
        vec!["hooks", "a"],
        vec!["gpoly", "1,0"],
        vec!["schur-lhs", "-1"],
        vec![],
        vec!["frobnicate"],
    ] {
        let o = hookpoly(&args);
        assert_eq!(o.status.code(), Some(2), "args {args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn check_on_empty_partition_is_a_usage_error() {
    let o = hookpoly(&["check", "THM_1_1", "0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn hooks_grid_and_product() {
    let o = hookpoly(&["hooks", "2,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "3 1\n1\nH = 3\n");
}

#[test]
fn corners_lists_sets_and_removals() {
    let o = hookpoly(&["corners", "55331"]);
    assert_eq!(
        stdout(&o),
        "T={2,4,5}\nB={1,3,5,6}\nremove row 2: 5,4,3,3,1\nremove row 4: 5,5,3,2,1\nremove row 5: 5,5,3,3\n"
    );
}

#[test]
fn syt_count() {
    let o = hookpoly(&["syt", "3,2"]);
    assert_eq!(stdout(&o), "5\n");
}

#[test]
fn schur_sides_agree_as_json() {
    for n in 0..=4 {
        let n = n.to_string();
        let l = hookpoly(&["schur-lhs", &n]);
        let r = hookpoly(&["schur-rhs", &n]);
        assert_eq!(l.status.code(), Some(0));
        assert_eq!(stdout(&l), stdout(&r));
    }
}

#[test]
fn computation_output_is_deterministic() {
    for args in [
        vec!["example-55331"],
        vec!["hooks", "4,4,2,1"],
        vec!["schur-rhs", "3"],
    ] {
        assert_eq!(stdout(&hookpoly(&args)), stdout(&hookpoly(&args)));
    }
}

#[test]
fn sweep_json_passes_and_has_schema_fields() {
    let o = hookpoly(&["sweep", "--max-n", "6", "--max-n-schur", "4", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for key in ["\"config\"", "\"identities\"", "\"theorem_1_2\"", "\"totals\"", "\"THM_1_1\""] {
        assert!(text.contains(key), "missing {key}");
    }
    assert!(text.contains("\"failed\":0") || text.contains("\"failed\": 0"));
}

#[test]
fn sweep_csv_to_file() {
    let dir = std::env::temp_dir().join(format!("hookpoly-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.csv");
    let o = hookpoly(&[
        "sweep",
        "--max-n",
        "5",
        "--identities",
        "THM_1_1,COR_4_4",
        "--jobs",
        "2",
        "--format",
        "csv",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let csv = std::fs::read_to_string(&path).unwrap();
    assert!(csv.starts_with("identity,n,checked,passed,failed\n"));
    assert!(csv.contains("THM_1_1,5,7,7,0"));
    assert!(csv.contains("COR_4_4,5,7,7,0"));
    assert!(!csv.contains("REC_1_2,"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn sweep_rejects_bad_flags() {
    for args in [
        vec!["sweep", "--format", "xml"],
        vec!["sweep", "--jobs", "0"],
        vec!["sweep", "--identities", "THM_9_9"],
        vec!["sweep", "--max-n", "0"],
    ] {
        assert_eq!(hookpoly(&args).status.code(), Some(2), "args {args:?}");
    }
}
