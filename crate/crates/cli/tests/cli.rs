use std::io::Write;
use std::process::{Command, Output};

fn bott8(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bott8")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn classify_json_is_exact() {
    let o = bott8(&["classify", "1", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "{\"p\":1,\"q\":3,\"type\":6,\"ring\":\"H\",\"simple\":true,\"matrix_rank\":2}\n");
}

#[test]
fn classify_sweep_csv_has_a_row_per_algebra() {
    let o = bott8(&["classify", "--pmax", "3", "--qmax", "3", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("p,q,type,ring,simple,matrix_rank"));
    assert_eq!(lines.count(), 16);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["classify", "1"][..],
        &["bogus"],
        &["classify", "1", "3", "--format", "xml"],
        &["classify", "1", "3", "--frobnicate"],
        &["chain", "2", "1"],
        &["twistor", "--x", "1,2,3", "--pi", "1,0"],
    ] {
        assert_eq!(bott8(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn verify_theorem3_lists_sequences() {
    let o = bott8(&["verify", "theorem3", "--qmax", "24"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for s in ["0,0,0,1,1,2,3,4,4", "4,4,5,5,6,7,8,8", "8,8,9,9,10,11,12,12"] {
        assert!(text.contains(s), "{text}");
    }
}

#[test]
fn seeded_output_is_reproducible() {
    for args in [
        &["spinor", "--seed", "7", "--format", "json"][..],
        &["verify", "numeric", "--seed", "7", "--samples", "200"],
    ] {
        let (a, b) = (bott8(args), bott8(args));
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
    let a = bott8(&["spinor", "--seed", "7"]);
    let b = bott8(&["spinor", "--seed", "8"]);
    assert_ne!(a.stdout, b.stdout);
}

#[test]
fn config_file_and_output_path() {
    let dir = std::env::temp_dir().join(format!("bott8-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let config = dir.join("bott8.conf");
    let mut f = std::fs::File::create(&config).unwrap();
    writeln!(f, "# defaults\nformat = json\noutput_dir = {}", dir.display()).unwrap();
    drop(f);
    let o = bott8(&["--config", config.to_str().unwrap(), "--output", "c.json", "classify", "0", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let written = std::fs::read_to_string(dir.join("c.json")).unwrap();
    let v: serde_json::Value = serde_json::from_str(&written).unwrap();
    assert_eq!(v["ring"], "H");

    let o = bott8(&["--config", config.to_str().unwrap(), "--format", "text", "classify", "0", "2"]);
    assert!(!stdout(&o).starts_with('{'));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn bad_config_key_is_a_usage_error() {
    let path = std::env::temp_dir().join(format!("bott8-bad-{}.conf", std::process::id()));
    std::fs::write(&path, "colour = blue\n").unwrap();
    let o = bott8(&["--config", path.to_str().unwrap(), "clock"]);
    assert_eq!(o.status.code(), Some(2));
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn chessboard_and_clock_text() {
    let text = stdout(&bott8(&["chessboard", "--order", "1"]));
    let rows: Vec<&str> = text.lines().filter(|l| l.starts_with("  ")).collect();
    assert_eq!(rows.len(), 8);
    assert!(rows[0].contains("0#") && rows[0].contains("7."));
    let clock = stdout(&bott8(&["clock"]));
    assert_eq!(clock.lines().filter(|l| l.starts_with("hour ")).count(), 8);
    assert!(clock.contains("hour 3: Cl(0,2) H → Cl(0,3) H⊕H"));
}

#[test]
fn block_json_has_twenty_five_nodes() {
    let o = bott8(&["block", "--order", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["nodes"].as_array().unwrap().len(), 25);
}

#[test]
fn qubit_from_bloch() {
    let o = bott8(&["qubit", "--bloch", "0,0,1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["purity"], 1.0);
    let o = bott8(&["qubit", "--bloch", "1,1,1"]);
    assert_ne!(o.status.code(), Some(0));
}
