use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hzbounds"))
        .args(args)
        .env_remove("BC_GROUP_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let o = run(args);
    assert!(o.status.success(), "{}", stderr(&o));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn roots_g2() {
    let o = run(&["roots", "--type", "G", "--rank", "2"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("12 roots"), "{s}");
    assert!(s.contains("rho = 2e1 - e2 - e3"), "{s}");
}

#[test]
fn roots_a1_and_json() {
    let v = json(&["roots", "--type", "A", "--rank", "1", "--format", "json"]);
    assert_eq!(v["roots"].as_array().unwrap().len(), 2);
    let v = json(&["roots", "--type", "B", "--rank", "3", "--format", "json"]);
    assert_eq!(v["positive_roots"], 9);
    assert_eq!(v["highest_root"], serde_json::json!(["1/1", "1/1", "0/1"]));
    let o = run(&["roots", "--type", "B", "--rank", "3", "--format", "csv"]);
    assert_eq!(stdout(&o).lines().count(), 19);
}

#[test]
fn invalid_type_fails() {
    let o = run(&["roots", "--type", "E", "--rank", "5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("E5"));
    let o = run(&["roots", "--type", "Q", "--rank", "2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn graph_bruhat_counts() {
    let v = json(&["graph", "bruhat", "--type", "A", "--rank", "2", "--format", "json"]);
    assert_eq!(v["vertices"].as_array().unwrap().len(), 6);
    assert_eq!(v["edges"].as_array().unwrap().len(), 9);
    let v = json(&["graph", "bruhat", "--type", "A", "--rank", "3", "--lambda", "2,2,0,0", "--format", "json"]);
    assert_eq!(v["vertices"].as_array().unwrap().len(), 6);
    assert!(v["edges"].as_array().unwrap().iter().all(|e| e["area"] == "2/1"));
}

#[test]
fn graph_quantum_dot() {
    let o = run(&["graph", "quantum", "--type", "A", "--rank", "2", "--format", "dot"]);
    let s = stdout(&o);
    assert!(s.starts_with("digraph"));
    assert_eq!(s.matches(" -> ").count(), 15);
}

#[test]
fn graph_cayley() {
    let v = json(&["graph", "cayley", "--n", "4", "--lambda", "3,2,1,0", "--format", "json"]);
    assert_eq!(v["vertices"].as_array().unwrap().len(), 24);
    assert_eq!(v["edges"].as_array().unwrap().len(), 24 * 6 / 2);
    let o = run(&["graph", "cayley", "--n", "8"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn graph_e8_refused_by_name() {
    let o = run(&["graph", "quantum", "--type", "E", "--rank", "8"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("E8"));
}

#[test]
fn group_cap_from_env() {
    let o = Command::new(env!("CARGO_BIN_EXE_hzbounds"))
        .args(["graph", "bruhat", "--type", "B", "--rank", "3"])
        .env("BC_GROUP_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("cap 10"));
}

#[test]
fn capacity_examples() {
    let v = json(&["capacity", "--type", "C", "--rank", "3", "--lambda", "3,2,1"]);
    assert_eq!((v["lower"].as_str(), v["upper"].as_str()), (Some("6/1"), Some("6/1")));
    assert_eq!(v["checks"]["sharp"], true);
    let v = json(&["capacity", "--type", "A", "--rank", "3", "--lambda", "3,2,1,0"]);
    assert_eq!(v["exact"], "4/1");
    let v = json(&["capacity", "--type", "F", "--rank", "4", "--lambda", "10,3,2,1"]);
    assert_eq!((v["lower"].as_str(), v["upper"].as_str()), (Some("20/1"), Some("24/1")));
    let v = json(&["capacity", "--type", "A", "--rank", "2", "--lambda", "1/2,0,-1/3"]);
    assert_eq!(v["exact"], "5/6");
}

#[test]
fn capacity_rejects_non_dominant() {
    let o = run(&["capacity", "--type", "F", "--rank", "4", "--lambda", "4,3,2,1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("alpha_4"), "{}", stderr(&o));
    let o = run(&["capacity", "--type", "B", "--rank", "2", "--lambda", "1,2"]);
    assert!(stderr(&o).contains("alpha_1"));
}

#[test]
fn capacity_text_and_output_file() {
    let dir = std::env::temp_dir().join(format!("hzbounds-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("g2.txt");
    let o = run(&["capacity", "--type", "G", "--rank", "2", "--format", "text", "-o", path.to_str().unwrap()]);
    assert!(o.status.success());
    let s = std::fs::read_to_string(&path).unwrap();
    assert!(s.contains("ratio ok: yes"), "{s}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn table_default_all_match() {
    let o = run(&["table"]);
    assert!(o.status.success());
    let mut r = csv::Reader::from_reader(o.stdout.as_slice());
    let headers = r.headers().unwrap().clone();
    let col = |name: &str| headers.iter().position(|h| h == name).unwrap();
    let rows: Vec<csv::StringRecord> = r.records().map(|x| x.unwrap()).collect();
    assert_eq!(rows.len(), 24);
    for row in &rows {
        assert_eq!(&row[col("lower_match")], "true");
        assert_eq!(&row[col("upper_match")], "true");
        match &row[col("type")] {
            "C" => assert_eq!(&row[col("sharp")], "true"),
            "A" => assert!(!row[col("exact")].is_empty()),
            _ => assert!(row[col("exact")].is_empty()),
        }
    }
}

#[test]
fn table_is_deterministic_for_seed() {
    let a = run(&["table", "--type", "D", "--samples", "3", "--seed", "11"]);
    let b = run(&["table", "--type", "D", "--samples", "3", "--seed", "11"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_single_checks() {
    let o = run(&["verify", "--only", "height-lemma"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).starts_with("PASS height-lemma"));
    let o = run(&["verify", "--only", "postnikov", "--type", "B", "--rank", "3"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("B3"));
    let o = run(&["verify", "--only", "bogus"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn wrong_format_for_command() {
    let o = run(&["capacity", "--type", "C", "--rank", "2", "--format", "dot"]);
    assert_eq!(o.status.code(), Some(2));
}
