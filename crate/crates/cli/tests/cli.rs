use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gsdecode"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn spec(name: &str) -> String {
    fixture(name).to_str().unwrap().to_string()
}

#[test]
fn example_one_encode_matches_fixture() {
    let o = run(&[
        "encode",
        "--spec",
        &spec("example1.json"),
        "--message",
        "4,2,10",
        "--seed",
        "11",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o).trim(),
        "4,14,6,13,4,9,14,17,15,14,16,6,8,3,8,17,11,14,11,4,22,16,7"
    );
}

#[test]
fn example_one_decode_from_file() {
    let received = format!("@{}", spec("example1.received"));
    let o = run(&[
        "decode",
        "--spec",
        &spec("example1.json"),
        "--received",
        &received,
        "--tau",
        "11",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "4,2,10");

    let o = run(&[
        "decode",
        "--spec",
        &spec("example1.json"),
        "--received",
        &received,
        "--list",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines.len(), 2);
    assert!(lines.contains(&"4,2,10,11,8 distance=11 amd=accept".to_string()));
    assert!(lines.contains(&"22,1,9,15,12 distance=10 amd=reject".to_string()));
}

#[test]
fn radius_beyond_johnson_is_invalid_input() {
    let received = format!("@{}", spec("example1.received"));
    let o = run(&[
        "decode",
        "--spec",
        &spec("example1.json"),
        "--received",
        &received,
        "--tau",
        "12",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("largest feasible radius is 11"));
}

#[test]
fn malformed_input_exits_two() {
    let o = run(&["decode", "--spec", &spec("example1.json"), "--received", "1,2,3"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&[
        "encode",
        "--spec",
        &spec("example1.json"),
        "--message",
        "4,2,99",
        "--seed",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["encode", "--spec", &spec("nonexistent.json"), "--message", "1"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&[
        "encode",
        "--spec",
        &spec("rl_mds.json"),
        "--message",
        "1,2,3",
        "--seed",
        "4",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn errors_beyond_radius_exit_one() {
    let s = spec("tgrs_mds.json");
    let cw = stdout(&run(&["encode", "--spec", &s, "--message", "3,5"]));
    let mut r: Vec<u32> = cw.trim().split(',').map(|x| x.parse().unwrap()).collect();
    r[3] = (r[3] + 1) % 23;
    let r = r.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
    let o = run(&["decode", "--spec", &s, "--received", &r, "--tau", "0"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o).trim(), "FAIL");
}

#[test]
fn bare_code_round_trip() {
    for (name, msg) in [("tgrs_mds.json", "7,19"), ("rl_mds.json", "1,0,22")] {
        let s = spec(name);
        let cw = stdout(&run(&["encode", "--spec", &s, "--message", msg]));
        let mut r: Vec<u32> = cw.trim().split(',').map(|x| x.parse().unwrap()).collect();
        r[0] = (r[0] + 5) % 23;
        r[4] = (r[4] + 1) % 23;
        let r = r.iter().map(u32::to_string).collect::<Vec<_>>().join(" ");
        let o = run(&["decode", "--spec", &s, "--received", &r]);
        assert_eq!(o.status.code(), Some(0), "{name}");
        assert_eq!(stdout(&o).trim(), msg);
    }
}

#[test]
fn unseeded_codec_encode_decodes() {
    let s = spec("example1.json");
    let cw = stdout(&run(&["encode", "--spec", &s, "--message", "1,2,3"]));
    let o = run(&["decode", "--spec", &s, "--received", cw.trim()]);
    assert_eq!(stdout(&o).trim(), "1,2,3");
}

#[test]
fn paper_examples_match_transcripts() {
    for which in ["1", "2"] {
        let o = run(&["paper-example", "--which", which]);
        assert_eq!(o.status.code(), Some(0));
        let want = std::fs::read_to_string(fixture(&format!("example{which}.transcript"))).unwrap();
        assert_eq!(stdout(&o), want);
    }
    assert_eq!(run(&["paper-example", "--which", "3"]).status.code(), Some(2));
}

#[test]
fn trials_are_reproducible() {
    let cfg = spec("trials_codec.json");
    let a = stdout(&run(&["trials", "--config", &cfg]));
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out.csv");
    let o = run(&["trials", "--config", &cfg, "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(out).unwrap(), a);
    assert!(a.starts_with("weight,trials,successes,failures,ambiguous,mean_list,max_list,amd_false_accepts,seconds"));
}

#[test]
fn unique_trials_on_mds_code_always_succeed() {
    let csv = stdout(&run(&["trials", "--config", &spec("trials_unique.json")]));
    let rows: Vec<&str> = csv.lines().skip(1).collect();
    assert_eq!(rows.len(), 6);
    for row in rows {
        let f: Vec<&str> = row.split(',').collect();
        assert_eq!(f[1], f[2], "{row}");
    }
}

#[test]
fn empty_weights_exit_two() {
    let o = run(&["trials", "--config", &spec("trials_empty.json")]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn oracle_commands() {
    let o = run(&["oracle", "classify", "--spec", &spec("rl_mds.json")]);
    assert_eq!(stdout(&o).trim(), "n = 12, k = 3: MDS (d = 10)");
    let o = run(&["oracle", "min-distance", "--spec", &spec("tgrs_mds.json")]);
    assert_eq!(stdout(&o).trim(), "11");
    let o = Command::new(env!("CARGO_BIN_EXE_gsdecode"))
        .args(["oracle", "classify", "--spec", &spec("example1.json")])
        .env("GSDECODE_ENUM_CAP", "1000")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}
