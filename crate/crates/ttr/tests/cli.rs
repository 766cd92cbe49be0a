//! End-to-end checks of the command-line interface: exit codes, report
//! format, and the generate→solve→verify round trip.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ttr"))
}

fn tmp(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn write(name: &str, contents: &str) -> PathBuf {
    let path = tmp(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

const FIG1_INSTANCE: &str = "\
n 5
delta 5
edge 0 1
edge 1 2
edge 2 3
edge 3 4
";

const FIG1_LABELING: &str = "\
label 0 1 3
label 1 2 3
label 2 3 4
label 3 4 1
";

#[test]
fn durations_prints_the_table() {
    let instance = write("fig1.ttr", FIG1_INSTANCE);
    let labeling = write("fig1.labels", FIG1_LABELING);
    let output = bin()
        .args(["durations", instance.to_str().unwrap(), labeling.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    assert!(text.contains("duration 0 4 9"));
    assert!(text.contains("duration 4 0 13"));
    assert!(text.contains("duration 0 1 1"));
}

#[test]
fn verify_reports_violations_with_exit_one() {
    let instance = write(
        "p3_tight.ttr",
        "n 3\ndelta 3\nedge 0 1\nedge 1 2\nbound 0 2 2\n",
    );
    let good = write("p3_good.labels", "label 0 1 1\nlabel 1 2 2\n");
    let bad = write("p3_bad.labels", "label 0 1 1\nlabel 1 2 1\n");

    let output = bin()
        .args(["verify", instance.to_str().unwrap(), good.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(0));
    assert!(stdout(&output).contains("valid yes"));

    let output = bin()
        .args(["verify", instance.to_str().unwrap(), bad.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(1));
    let text = stdout(&output);
    assert!(text.contains("valid no"));
    assert!(text.contains("violation 0 2 4 2"));
}

#[test]
fn solve_answers_with_witness_and_exit_codes() {
    let yes = write(
        "p3_yes.ttr",
        "n 3\ndelta 3\nedge 0 1\nedge 1 2\nbound 0 2 2\n",
    );
    let output = bin()
        .args(["solve", yes.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    assert!(text.contains("answer yes"));
    assert!(text.contains("algorithm fpt"));
    assert!(text.contains("label 0 1"));

    let no = write(
        "p3_no.ttr",
        "n 3\ndelta 3\nedge 0 1\nedge 1 2\nbound 0 2 2\nbound 2 0 2\n",
    );
    let output = bin().args(["solve", no.to_str().unwrap()]).output().unwrap();
    assert_eq!(output.status.code(), Some(1));
    assert!(stdout(&output).contains("answer no"));
}

#[test]
fn wrong_algorithm_for_the_period_is_a_usage_error() {
    let instance = write("p3_delta3.ttr", "n 3\ndelta 3\nedge 0 1\nedge 1 2\n");
    let output = bin()
        .args(["solve", instance.to_str().unwrap(), "--algo", "delta2"])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&output.stderr).contains("period 2"));
}

#[test]
fn malformed_files_exit_two_with_line_numbers() {
    let instance = write("selfloop.ttr", "n 2\ndelta 2\nedge 0 0\n");
    let output = bin().args(["solve", instance.to_str().unwrap()]).output().unwrap();
    assert_eq!(output.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&output.stderr).contains("line 3"));

    let cyclic = write(
        "cyclic.ttr",
        "n 3\ndelta 2\nedge 0 1\nedge 1 2\nedge 0 2\n",
    );
    let output = bin().args(["solve", cyclic.to_str().unwrap()]).output().unwrap();
    assert_eq!(output.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&output.stderr).contains("not a tree"));
}

#[test]
fn oracle_budget_exhaustion_exits_three() {
    let mut text = String::from("n 30\ndelta 5\n");
    for i in 0..29 {
        text.push_str(&format!("edge {i} {}\n", i + 1));
    }
    let instance = write("long_path.ttr", &text);
    let output = bin()
        .args(["oracle", instance.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&output.stderr).contains("budget"));
}

#[test]
fn generate_solve_round_trip_for_coloring() {
    let k4 = write(
        "k4.graph",
        "n 4\nedge 0 1\nedge 0 2\nedge 0 3\nedge 1 2\nedge 1 3\nedge 2 3\n",
    );
    let instance_path = tmp("k4_coloring.ttr");
    let output = bin()
        .args([
            "generate",
            "--from",
            "coloring",
            "--input",
            k4.to_str().unwrap(),
            "--delta",
            "3",
            "--output",
            instance_path.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(0));
    let rendered = std::fs::read_to_string(&instance_path).unwrap();
    assert!(rendered.contains("meta generator coloring"));

    // A clique on four vertices is not 3-colorable.
    let output = bin()
        .args(["solve", instance_path.to_str().unwrap(), "--algo", "auto"])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(1));
    assert!(stdout(&output).contains("answer no"));
}

#[test]
fn generate_solve_verify_round_trip_for_nae() {
    let formula = write("xyz.nae", "c clause (x, y, z)\np nae 3 1\n1 2 3 0\n");
    for layout in ["nae-diameter", "nae-degree"] {
        let instance_path = tmp(&format!("{layout}.ttr"));
        let output = bin()
            .args([
                "generate",
                "--from",
                layout,
                "--input",
                formula.to_str().unwrap(),
                "--output",
                instance_path.to_str().unwrap(),
            ])
            .output()
            .unwrap();
        assert_eq!(output.status.code(), Some(0), "{layout}");

        let output = bin()
            .args(["solve", instance_path.to_str().unwrap()])
            .output()
            .unwrap();
        assert_eq!(output.status.code(), Some(0), "{layout}");
        let text = stdout(&output);
        assert!(text.contains("answer yes"));
        assert!(text.contains("algorithm delta2"));

        // Feed the printed witness back through verify.
        let witness: String = text
            .lines()
            .filter(|l| l.starts_with("label "))
            .map(|l| format!("{l}\n"))
            .collect();
        let witness_path = write(&format!("{layout}.labels"), &witness);
        let output = bin()
            .args([
                "verify",
                instance_path.to_str().unwrap(),
                witness_path.to_str().unwrap(),
            ])
            .output()
            .unwrap();
        assert_eq!(output.status.code(), Some(0), "{layout}");
    }
}

#[test]
fn oracle_lists_all_witnesses() {
    let instance = write("p3_free.ttr", "n 3\ndelta 2\nedge 0 1\nedge 1 2\n");
    let output = bin()
        .args(["oracle", instance.to_str().unwrap(), "--all-witnesses"])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(0));
    assert!(stdout(&output).contains("witness_count 2"));
}
