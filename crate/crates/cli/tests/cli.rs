use std::process::{Command, Output};

fn matchnest(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_matchnest")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = matchnest(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn assert_error(args: &[&str], kind: &str) {
    let out = matchnest(args);
    assert_eq!(out.status.code(), Some(2), "{args:?}");
    let err = String::from_utf8(out.stderr).unwrap();
    assert_eq!(err.lines().count(), 1, "{err}");
    assert!(err.starts_with(&format!("error: {kind}:")), "{err}");
}

#[test]
fn enumerate() {
    assert_eq!(stdout(&["enumerate", "matchings", "3", "--filter", "no_left_nesting", "--count-only"]), "6\n");
    assert_eq!(stdout(&["enumerate", "matrices", "3", "--count-only"]), "5\n");
    assert_eq!(stdout(&["enumerate", "inversion_tables", "0"]), "[]\n");
    assert_eq!(
        stdout(&["enumerate", "matchings", "2"]),
        "{\"n\":2,\"arcs\":[[1,2],[3,4]]}\n{\"n\":2,\"arcs\":[[1,3],[2,4]]}\n{\"n\":2,\"arcs\":[[2,3],[1,4]]}\n"
    );
}

#[test]
fn convert() {
    assert_eq!(
        stdout(&["convert", "inversion_table", "matching", "[0,1,0,1]"]),
        "{\"n\":4,\"arcs\":[[1,3],[4,6],[2,7],[5,8]]}\n"
    );
    assert_eq!(stdout(&["convert", "permutation", "inversion_table", "[2,3,1]"]), "[0,0,1]\n");
    assert_eq!(
        stdout(&["convert", "matching", "matrix", "{\"arcs\":[[1,3],[2,5],[4,6]]}"]),
        "{\"k\":2,\"rows\":[[1,1],[0,1]]}\n"
    );
    assert_eq!(
        stdout(&["convert", "matrix", "matching_nc", "[[1,1],[0,1]]"]),
        "{\"n\":3,\"arcs\":[[2,3],[4,5],[1,6]]}\n"
    );
    assert_eq!(
        stdout(&["convert", "matrix", "matching", "[[1,1],[0,1]]", "--via", "zero_one"]),
        "{\"n\":3,\"arcs\":[[1,3],[4,5],[2,6]]}\n"
    );
    assert_eq!(
        stdout(&["convert", "poset", "matching", "{\"n\":4,\"less\":[[1,2],[1,4]]}"]),
        "{\"n\":4,\"arcs\":[[1,3],[4,6],[2,7],[5,8]]}\n"
    );
}

#[test]
fn convert_errors() {
    assert_error(&["convert", "matching", "inversion_table", "{\"arcs\":[[2,3],[1,4]]}"], "HasLeftNesting");
    assert_error(&["convert", "inversion_table", "matching", "[0,2]"], "EntryOutOfRange");
    assert_error(&["convert", "matrix", "matching", "[[2]]", "--via", "zero_one"], "NotZeroOne");
    assert_error(&["convert", "permutation", "matrix", "[1]"], "UnsupportedConversion");
    assert_error(&["convert", "matching", "matrix", "{\"arcs\":[[1,2],[2,3]]}"], "DuplicateEndpoint");
    assert_error(&["convert", "permutation", "inversion_table", "[1,"], "Json");
}

#[test]
fn stats() {
    assert_eq!(stdout(&["stats", "permutation", "[3,5,1,4,2,6]", "--stats", "p"]), "{\"p\":1}\n");
    let m: serde_json::Value =
        serde_json::from_str(&stdout(&["stats", "matching", "{\"arcs\":[[1,3],[2,7],[4,6],[5,8]]}"])).unwrap();
    assert_eq!((m["lne"].as_u64(), m["rne"].as_u64(), m["ne"].as_u64()), (Some(0), Some(1), Some(1)));
    let p: serde_json::Value =
        serde_json::from_str(&stdout(&["stats", "poset", "{\"n\":3,\"less\":[[1,2],[2,3]]}"])).unwrap();
    assert_eq!((p["ip"].as_u64(), p["lev"].as_u64()), (Some(0), Some(3)));
    assert_error(&["stats", "permutation", "[1,2]", "--stats", "emb"], "StatisticNotApplicable");
    assert_error(&["stats", "poset", "{\"n\":3,\"less\":[[1,3]],\"x\":0}", "--stats", "nope"], "UnknownStatistic");
}

#[test]
fn distribution_csv() {
    assert_eq!(stdout(&["distribution", "permutations", "3", "--stats", "inv"]), "inv,count\n0,1\n1,2\n2,2\n3,1\n");
    assert_eq!(
        stdout(&["distribution", "factorial_posets", "3", "--stats", "lev-1"]),
        "lev-1,count\n0,1\n1,4\n2,1\n"
    );
    assert_error(&["distribution", "permutations", "3", "--stats", "inv", "--filter", "no_nesting"], "PredicateNotApplicable");
}

#[test]
fn verify_exit_codes() {
    let ok = matchnest(&["verify", "--all", "--n-max", "4"]);
    assert_eq!(ok.status.code(), Some(0));
    let one = matchnest(&["verify", "conj1_equidistribution", "--n-max", "6", "--json"]);
    assert_eq!(one.status.code(), Some(0));
    let line = String::from_utf8(one.stdout).unwrap();
    assert!(line.contains("\"kind\":\"conjecture\""));
    assert_error(&["verify", "nonexistent_check"], "UnknownCheck");
    assert_eq!(matchnest(&["verify", "--bogus"]).status.code(), Some(2));
}
