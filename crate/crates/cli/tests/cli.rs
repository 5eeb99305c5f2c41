use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn walklab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_walklab")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

/// Set `WALKLAB_BLESS=1` to rewrite the golden files.
#[test]
fn invariants_match_golden_files() {
    let bless = std::env::var_os("WALKLAB_BLESS").is_some();
    let names = stdout(&walklab(&["fixtures", "list", "--format", "csv"]));
    let mut seen = 0;
    for line in names.lines().skip(1) {
        let name = line.split(',').next().unwrap();
        let out = walklab(&["invariants", "--fixture", name, "--format", "json"]);
        assert!(out.status.success(), "{name}");
        let path = golden_dir().join(format!("{name}.invariants.json"));
        if bless {
            fs::write(&path, &out.stdout).unwrap();
        }
        let want = fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden file {}", path.display()));
        assert_eq!(stdout(&out), want, "{name}");
        seen += 1;
    }
    assert_eq!(seen, 14);
}

#[test]
fn dist_t8_walk_row() {
    let out = walklab(&["invariants", "--fixture", "dist_T8", "--vertex", "x", "--k", "11"]);
    assert!(stdout(&out).contains("walks 1,2,5,8,20,32,80,128,320,512,1280,2048\n"));
}

#[test]
fn schwenk_pair_text() {
    let out = walklab(&["classify", "--fixture", "schwenk", "--pair", "x,y"]);
    let text = stdout(&out);
    assert!(text.contains("walk_eq=false closed_walk_eq=true"), "{text}");
}

#[test]
fn cross_graph_classification() {
    let out = walklab(&["classify", "--fixture", "p7", "--other-fixture", "y5", "--pair", "x,y", "--format", "csv"]);
    assert_eq!(
        stdout(&out).lines().nth(1).unwrap(),
        "p7,3,y5,1,false,true,false,false,false,false,true"
    );
}

#[test]
fn verify_exit_codes() {
    let ok = walklab(&["verify", "pn-yn", "--n", "5"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).starts_with("family=pn-yn n=5 agree_through=5 first_difference=6"));
    let bad = walklab(&["verify", "pn-yn", "--n", "4"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn usage_and_parse_errors_exit_2() {
    assert_eq!(walklab(&["frobnicate"]).status.code(), Some(2));
    let out = walklab(&["invariants", "--graph6", "D!c"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("at byte 1"));
    let out = walklab(&["invariants", "--fixture", "p7", "--graph6", "Dhc"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(walklab(&["trial", "triples", "--n", "10", "--trials", "5"]).status.code(), Some(2));
}

#[test]
fn budget_errors_exit_1() {
    let out = walklab(&["census", "graphs", "--mode", "decisive", "--n", "8"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
}

#[test]
fn trials_do_not_depend_on_thread_count() {
    let args = ["trial", "triples", "--n", "12,20", "--trials", "300", "--seed", "5", "--format", "json"];
    let one = walklab(&[&args[..], &["--threads", "1"]].concat());
    let four = walklab(&[&args[..], &["--threads", "4"]].concat());
    assert!(one.status.success());
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn config_supplies_defaults() {
    let dir = std::env::temp_dir().join(format!("walklab-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("config.json");
    fs::write(&cfg, r#"{"format": "csv", "seed": 3, "trials": 40}"#).unwrap();
    let cfg = cfg.to_str().unwrap();
    let out = walklab(&["trial", "tree-ambivalence", "--n", "9", "--config", cfg]);
    assert_eq!(stdout(&out), "n,trials,collisions,rate\n9,40,0,0\n");
    let out = walklab(&["trial", "tree-ambivalence", "--n", "9", "--config", cfg, "--format", "text"]);
    assert!(stdout(&out).starts_with("n=9 trials=40 seed=3"));
    fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn file_input_and_output() {
    let dir = std::env::temp_dir().join(format!("walklab-io-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let json = dir.join("y5.json");
    let emitted = walklab(&["fixtures", "emit", "y5", "--format", "json", "--output", json.to_str().unwrap()]);
    assert!(emitted.status.success() && emitted.stdout.is_empty());
    let g6 = dir.join("y5.g6");
    fs::write(&g6, stdout(&walklab(&["fixtures", "emit", "y5"]))).unwrap();
    let a = walklab(&["invariants", "--input", json.to_str().unwrap(), "--vertex", "u", "--format", "csv"]);
    let b = walklab(&["invariants", "--input", g6.to_str().unwrap(), "--vertex", "0", "--format", "csv"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    fs::remove_dir_all(&dir).unwrap();
}
