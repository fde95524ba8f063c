use std::process::{Command, Output};

use qtc::chains::f_stat;
use qtc::closed_forms::ABCParams;
use qtc::io::{parse_json, render_json};
use qtc::tableaux::f_tableaux;
use qtc::LaurentPoly;

fn qtc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qtc"))
        .args(args)
        .output()
        .expect("run qtc")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn exit_codes() {
    let cases: &[(&[&str], i32)] = &[
        (&["compute", "--method", "tableaux", "--a", "0,2"], 0),
        (&["compute", "--method", "tableaux", "--a", "0,,2"], 2),
        (&["compute", "--method", "chains", "--abc", "0,3,0"], 2),
        (&["compute", "--method", "two-step", "--abc", "1,1,0"], 2),
        (&["compute", "--method", "tesler", "--a", "1,-2"], 2),
        (&["compute", "--method", "carrier-pigeon", "--a", "1"], 2),
        (&["compute", "--method", "stat", "--a", "1,1,1", "--abc", "1,1,1"], 2),
        (&["decompose", "--abc", "2,5,0"], 2),
        (&["decompose", "--abc", "1,1,1", "--format", "json"], 2),
        (&["verify", "--n", "9", "--max", "1"], 2),
        (&["verify", "--n", "3", "--max", "1", "--jobs", "0"], 2),
        (&["verify", "--n", "4", "--max", "2"], 0),
        (&["scan", "--n", "4", "--max", "2", "--all"], 0),
        (&["scan", "--n", "6", "--max", "1"], 2),
        (&["rational", "--m", "0", "--n", "3"], 2),
        (&["rational", "--m", "5", "--n", "3"], 0),
        (&[], 2),
    ];
    for (args, code) in cases {
        assert_eq!(qtc(args).status.code(), Some(*code), "{args:?}");
    }
}

#[test]
fn jobs_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_qtc"))
        .args(["verify", "--n", "3", "--max", "2"])
        .env("QTC_JOBS", "0")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_qtc"))
        .args(["verify", "--n", "3", "--max", "2"])
        .env("QTC_JOBS", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("mismatches: 0"));
}

#[test]
fn json_round_trip_through_cli() {
    for args in [
        vec!["compute", "--method", "tableaux", "--a", "0,1,2"],
        vec!["compute", "--method", "recursion", "--a", "-3"],
        vec!["compute", "--method", "tesler", "--abc", "2,1,1", "--a1", "3"],
        vec!["compute", "--method", "stat", "--abc", "2,2,1"],
    ] {
        let mut a = args.clone();
        a.extend(["--format", "json"]);
        let text = stdout(&qtc(&a));
        let (params, p) = parse_json(&text).unwrap();
        assert_eq!(format!("{}\n", render_json(&params, &p)), text);
    }
}

#[test]
fn formats_agree() {
    let base = ["compute", "--method", "tableaux", "--a", "0,2", "--format"];
    let text = stdout(&qtc(&[&base[..], &["text"]].concat()));
    let latex = stdout(&qtc(&[&base[..], &["latex"]].concat()));
    let csv = stdout(&qtc(&[&base[..], &["csv"]].concat()));
    let f = f_tableaux(&[0, 2]).unwrap();
    assert_eq!(text.trim(), f.to_string());
    assert_eq!(latex.trim(), "q^4 + q^3t + q^2t + q^2t^2 - qt + qt^2 + qt^3 + t^4");
    let from_csv: LaurentPoly = csv
        .lines()
        .skip(1)
        .map(|l| {
            let v: Vec<i64> = l.split(',').map(|x| x.parse().unwrap()).collect();
            LaurentPoly::monomial(v[0], v[1], v[2])
        })
        .sum();
    assert_eq!(from_csv, f);
}

#[test]
fn decompose_sums_to_stat() {
    for abc in ["0,0,0", "1,1,1", "1,1,2", "3,2,2", "4,5,3"] {
        let csv = stdout(&qtc(&["decompose", "--abc", abc, "--format", "csv"]));
        let sum: LaurentPoly = csv
            .lines()
            .skip(1)
            .map(|l| {
                let f: Vec<&str> = l.split(',').collect();
                LaurentPoly::monomial(f[5].parse().unwrap(), f[6].parse().unwrap(), 1)
            })
            .sum();
        let stat_json = stdout(&qtc(&["compute", "--method", "stat", "--abc", abc, "--format", "json"]));
        assert_eq!(parse_json(&stat_json).unwrap().1, sum, "{abc}");
        let v: Vec<i64> = abc.split(',').map(|x| x.parse().unwrap()).collect();
        assert_eq!(sum, f_stat(&ABCParams::new(v[0], v[1], v[2]).unwrap()).unwrap());
    }
    let single = stdout(&qtc(&["decompose", "--abc", "0,0,0", "--format", "csv"]));
    assert_eq!(single.lines().count(), 2);
    let text = stdout(&qtc(&["decompose", "--abc", "1,1,1"]));
    assert!(text.contains("range [0,6]") && text.contains("range [1,4]") && text.contains("range [1,3]"));
}

#[test]
fn documented_examples() {
    let o = stdout(&qtc(&["compute", "--method", "tesler", "--a", "1,1"]));
    assert_eq!(o, "q + t\n");
    let chains = stdout(&qtc(&["compute", "--method", "chains", "--abc", "1,1,1"]));
    let tab = stdout(&qtc(&["compute", "--method", "tableaux", "--a", "1,1,1"]));
    assert_eq!(chains, tab);

    let o = qtc(&["scan", "--n", "4", "--max", "3", "--monotone"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("findings: 0"));
    let all = stdout(&qtc(&["scan", "--n", "4", "--max", "3", "--all"]));
    assert!(all.lines().any(|l| l.starts_with("(0,1,2):")));
    assert!(stdout(&qtc(&["scan", "--n", "2", "--max", "5"])).starts_with("findings: 0"));

    assert_eq!(
        stdout(&qtc(&["rational", "--m", "3", "--n", "2"])),
        "S = (2,1)\nf = q + t\n"
    );
    assert_eq!(stdout(&qtc(&["rational", "--m", "1", "--n", "1"])), "S = (1)\nf = 1\n");
    let c43 = stdout(&qtc(&["rational", "--m", "4", "--n", "3"]));
    assert_eq!(c43, "S = (2,1,1)\nf = q^3 + q^2*t + q*t + q*t^2 + t^3\n");

    for args in [
        &["verify", "--max", "3", "--n", "4"][..],
        &["verify", "--max", "2", "--n", "3"],
        &["verify", "--max", "0"],
    ] {
        let o = qtc(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        assert!(stdout(&o).contains("mismatches: 0"));
    }
}
