use std::process::{Command, Output};

fn partilog(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_partilog")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn eval_examples() {
    for (args, want) in [
        (&["eval", "gen=colored-primes", "k=6", "n=7"][..], "5"),
        (&["eval", "parts=1,1", "n=0"][..], "1"),
        (&["eval", "parts=1,2", "n=4"][..], "3"),
    ] {
        let o = partilog(args);
        assert_eq!(code(&o), 0);
        assert_eq!(stdout(&o).trim(), want);
    }
    assert_eq!(code(&partilog(&["eval", "parts=1,x", "n=3"])), 2);
    assert_eq!(code(&partilog(&["eval", "gen=ones", "n=3"])), 2);
    assert_eq!(code(&partilog(&["eval", "parts=1,2"])), 2);
}

#[test]
fn quasipoly_examples() {
    let o = partilog(&["quasipoly", "gen=colored-naturals", "k=10", "--residue", "0"]);
    assert_eq!(code(&o), 0);
    let row = stdout(&o);
    assert!(row.trim_end().ends_with("1703/2520*n + 1"), "{row}");
    let o = partilog(&["quasipoly", "gen=ones", "k=4"]);
    assert_eq!(stdout(&o).trim(), r#"{"period":1,"degree":3,"coeffs":[["1/1","11/6","1/1","1/6"]]}"#);
    let o = partilog(&["quasipoly", "parts=1,2"]);
    assert_eq!(stdout(&o).trim(), r#"{"period":2,"degree":1,"coeffs":[["1/1","1/2"],["1/2","1/2"]]}"#);
}

#[test]
fn budget_exit_code() {
    let o = Command::new(env!("CARGO_BIN_EXE_partilog"))
        .args(["quasipoly", "gen=colored-naturals", "k=10"])
        .env("PARTILOG_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("budget"));
}

#[test]
fn check_examples() {
    let o = partilog(&["check", "gen=naturals", "k=7", "--property", "scaled", "4.99"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains(r#""verdict":"holds-from-N""#));
    let o = partilog(&["check", "gen=colored-naturals", "k=11", "--property", "rlog", "2"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains(r#""threshold_n":11320"#));
    let o = partilog(&["check", "gen=ones", "k=2", "--property", "rlog", "2"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("fails-infinitely-often"));
    assert_eq!(code(&partilog(&["check", "gen=ones", "k=2", "--property", "scaled", "4,9"])), 2);
    assert_eq!(code(&partilog(&["check", "gen=ones", "k=2", "--property", "bogus"])), 2);
}

#[test]
fn check_unknown_at_short_horizon() {
    let o = partilog(&["check", "gen=naturals", "k=7", "--property", "scaled", "4.99", "--horizon", "150"]);
    assert_eq!(code(&o), 4);
}

#[test]
fn csv_round_trips_exact_values() {
    let dir = std::env::temp_dir().join(format!("partilog-csv-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("lc.csv");
    let o = partilog(&[
        "check",
        "parts=1,1,2,3",
        "--property",
        "logconcave",
        "--method",
        "empirical",
        "--horizon",
        "60",
        "--csv",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let mut rdr = csv::Reader::from_path(&path).unwrap();
    let mut counts = [0i64; 64];
    counts[0] = 1;
    for a in [1, 1, 2, 3] {
        for n in a..64 {
            counts[n] += counts[n - a];
        }
    }
    let p = |n: i64| counts[n as usize];
    let mut rows = 0;
    for (n, rec) in rdr.records().enumerate() {
        let rec = rec.unwrap();
        let n = n as i64;
        let want = p(n + 1) * p(n + 1) - p(n) * p(n + 2);
        assert_eq!(&rec[0], n.to_string());
        assert_eq!(&rec[1], format!("{want}/1"));
        assert_eq!(&rec[2], if want > 0 { "1" } else if want == 0 { "0" } else { "-1" });
        rows += 1;
    }
    assert_eq!(rows, 61);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn predict_examples() {
    let o = partilog(&["predict", "gen=colored-naturals", "k=10", "--property", "rlog", "2"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains(r#""witness":[2,2,4,4,4,4]"#), "{}", stdout(&o));
    let o = partilog(&["predict", "parts=1,2,3,4", "--property", "logconcave"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains(r#""witness":[2,4]"#));
    let o = partilog(&["predict", "--property", "logconcave", "parts=1,2,3,4"]);
    assert_eq!(code(&o), 1);
    let o = partilog(&["predict", "gen=ones", "k=3", "--property", "rlog", "99"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains(r#""verdict":true"#));
}

#[test]
fn series_examples() {
    let o = partilog(&["series", "gen=naturals", "k=7", "--level", "1", "--order", "2"]);
    assert_eq!(stdout(&o).trim(), "1 - 6/n^2 + o(n^-2)");
    let o = partilog(&["series", "--poly", "l=4", "--level", "2"]);
    assert_eq!(stdout(&o).trim(), "1 - 6/n^2 + o(n^-2)");
    let o = partilog(&["series", "--poly", "2", "--level", "1", "--order", "4"]);
    assert!(stdout(&o).starts_with("1 - 2/n^2"), "{}", stdout(&o));
    assert_eq!(code(&partilog(&["series", "--poly", "4", "--level", "2", "--order", "3"])), 2);
    let o = partilog(&["series", "--poly", "2,1,0,0", "--json"]);
    assert_eq!(stdout(&o).trim(), r#"{"denom":1,"terms":[[0,"1/1"],[2,"-2/1"]],"order":2}"#);
}

#[test]
fn reproduce_examples() {
    for ex in ["intro", "k10-table", "k10-l2", "k11-threshold"] {
        let o = partilog(&["reproduce", "--paper-example", ex]);
        assert_eq!(code(&o), 0, "{ex}: {}", stdout(&o));
        assert!(stdout(&o).contains(" 0 failed"));
    }
}

#[test]
fn reproduce_figures_writes_tables() {
    let dir = std::env::temp_dir().join(format!("partilog-fig-{}", std::process::id()));
    let o = partilog(&["reproduce", "--paper-example", "figures", "--max-n", "400", "--stride", "7", "--out", dir.to_str().unwrap()]);
    assert!(code(&o) == 0 || code(&o) == 1, "{}", stdout(&o));
    let files: Vec<_> = std::fs::read_dir(&dir).unwrap().collect();
    assert_eq!(files.len(), 12);
    let text = std::fs::read_to_string(dir.join("fig09_lhat2_k7.csv")).unwrap();
    assert!(text.starts_with("n,value,sign\n2,"));
    assert_eq!(text.lines().nth(2).unwrap().split(',').next(), Some("9"));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn output_independent_of_threads() {
    let args = ["check", "gen=colored-naturals", "k=8", "--property", "rlog", "2"];
    let one = partilog(&[&["--threads", "1"][..], &args[..]].concat());
    let many = partilog(&[&["--threads", "8"][..], &args[..]].concat());
    assert_eq!(code(&one), code(&many));
    assert_eq!(one.stdout, many.stdout);
}
