use std::fs;
use std::path::PathBuf;

use condevents::cli::run;

fn condev(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut all = vec!["condev"];
    all.extend_from_slice(args);
    let code = run(all, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn dist_file(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("condev-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path
}

#[test]
fn compile_formats() {
    let (code, dot, _) = condev(&["compile", "-e", "a b", "(a | b)", "--format", "dot"]);
    assert_eq!(code, 0);
    assert_eq!(dot.matches("shape=circle").count(), 3);
    let (code, json, _) = condev(&["compile", "-e", "a", "(a | true)", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["states"].as_array().unwrap().len(), 2);
}

#[test]
fn exit_codes() {
    assert_eq!(condev(&["compile", "-e", "a", "(a |)"]).0, 2);
    assert_eq!(condev(&["compile", "(a | b)"]).0, 2);
    assert_eq!(
        condev(&["connect", "-e", "a b", "xor", "(a|b)", "(b|a)"]).0,
        2
    );
    let d = dist_file("half.dist", "events a b\na = 1/2\nb = 1/2\n");
    assert_eq!(
        condev(&[
            "simulate",
            "-d",
            d.to_str().unwrap(),
            "(a|b)",
            "--samples",
            "0"
        ])
        .0,
        2
    );
    let bad = dist_file("bad.dist", "events a\nmode atoms\n{a} = 1/2\n{} = 1/3\n");
    let (code, _, err) = condev(&["prob", "-d", bad.to_str().unwrap(), "(a|true)"]);
    assert_eq!(code, 3, "{err}");
    let (code, _, _) = condev(&["prob", "-e", "a b c", "-d", d.to_str().unwrap(), "(a|b)"]);
    assert_eq!(code, 3);
    let (code, help, _) = condev(&["--help"]);
    assert_eq!(code, 0);
    assert!(help.contains("simulate"));
}

#[test]
fn prob_reports() {
    let pris = dist_file(
        "pris.dist",
        "events AB BC AC H T\nmode atoms\n{AB H} = 1/6\n{AB T} = 1/6\n{BC H} = 1/6\n{BC T} = 1/6\n{AC H} = 1/6\n{AC T} = 1/6\n",
    );
    let (code, out, _) = condev(&[
        "prob",
        "-d",
        pris.to_str().unwrap(),
        "(Y AB or Y AC | (Y AB and (H or T)) or (Y BC and H))",
    ]);
    assert_eq!(code, 0);
    assert!(
        out.contains("class: Regular\nverdict: Value 2/3\n"),
        "{out}"
    );

    let half = dist_file("a.dist", "events a\na = 1/2\n");
    let c1 = "(a | hist((Y a -> not a) and (Y not a -> a) and (not Y true -> a)))";
    let (_, out, _) = condev(&["prob", "-d", half.to_str().unwrap(), c1, "--table-n", "4"]);
    assert!(out.contains("class: Strange\nverdict: NoLimit\n"), "{out}");
    assert!(out.contains("[n≡0 → 0, n≡1 → 1]"));
    assert!(out.ends_with("1\t1\n2\t0\n3\t1\n4\t0\n"));

    let (_, out, _) = condev(&["prob", "-d", half.to_str().unwrap(), "(a | false)"]);
    assert!(out.contains("class: StrictlyDegenerate\nverdict: Undetermined\n"));

    let (_, json, _) = condev(&["prob", "-d", half.to_str().unwrap(), c1, "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["asymptotic"]["period"], 2);
    assert_eq!(v["pr_n_table"].as_array().unwrap().len(), 20);
}

#[test]
fn simulate_is_reproducible() {
    let d = dist_file("sim.dist", "events a b\na = 1/2\nb = 1/2\n");
    let args = [
        "simulate",
        "-d",
        d.to_str().unwrap(),
        "(a | b)",
        "--n",
        "10",
        "--samples",
        "20000",
        "--seed",
        "7",
    ];
    let (code, first, _) = condev(&args);
    assert_eq!(code, 0);
    assert_eq!(condev(&args).1, first);
    assert!(first.contains("exact: 1/2 (0.500000000000)"));
    assert!(first.contains("z: "));
    let (_, never, _) = condev(&[
        "simulate",
        "-d",
        d.to_str().unwrap(),
        "(a | false)",
        "--samples",
        "50",
    ]);
    assert!(never.contains("all samples undefined"));
}

#[test]
fn connect_prints_rules() {
    let (_, out, _) = condev(&["connect", "-e", "a b c d", "sac-and", "(a|b)", "(c|d)"]);
    assert_eq!(
        out,
        "((a and b and c and d) or (a and b and not d) or (c and d and not b) | b or d)\n"
    );
    let (_, out, _) = condev(&["connect", "-e", "a b c d", "star-and", "(a|b)", "(c|d)"]);
    assert_eq!(
        out,
        "((not b S (a and b)) and (not d S (c and d)) | b or d)\n"
    );
    let (_, out, _) = condev(&["connect", "-e", "a b", "neg", "(a|b)"]);
    assert_eq!(out, "(not a | b)\n");
    let (code, out, _) = condev(&["connect", "-e", "a b", "neg", "(a|b)", "--compile"]);
    assert_eq!(code, 0);
    assert!(out.contains("state 2"));
}

#[test]
fn small_commands() {
    let e = ["-e", "a b"];
    let with = |cmd: &[&str]| {
        let mut v = cmd.to_vec();
        v.extend_from_slice(&e);
        condev(&v).1
    };
    assert_eq!(with(&["trace", "(a|b)", "{a,b} {} {b}"]), "1 ⊥ 0\n");
    assert_eq!(with(&["eval", "(a|b)", "{a,b} {} {b}"]), "0\n");
    assert_eq!(
        with(&["parse", "not a and Y b S a"]),
        "not a and (Y b S a)\n"
    );
    assert!(with(&["counterfree", "(a S b | b)"]).starts_with("counter-free: true"));

    let path = dist_file("m.json", &with(&["export", "(a|b)", "--what", "machine"]));
    let (code, out, _) = condev(&["minimize", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.starts_with("events: a b\ninitial: 0\n"));
    let d = dist_file("e.dist", "events a b\na = 1/4\nb = 1/3\n");
    let (_, chain, _) = condev(&[
        "export",
        "-d",
        d.to_str().unwrap(),
        "(a|b)",
        "--what",
        "chain",
    ]);
    let v: serde_json::Value = serde_json::from_str(&chain).unwrap();
    assert_eq!(v["initial"][2], "1/12");
    let (_, class, _) = condev(&["classify", "-d", d.to_str().unwrap(), "(a|b)"]);
    assert_eq!(class, "Regular\n");
    let (_, prn, _) = condev(&[
        "prn",
        "-d",
        d.to_str().unwrap(),
        "(a|Y b)",
        "--table-n",
        "2",
    ]);
    assert_eq!(prn, "n\tPr_n\n1\tundef\n2\t1/4\n");
}
