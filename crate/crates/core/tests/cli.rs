//! The command-line contract: exit codes, output formats and stability.

use palper::cli::{run, CommandOutcome};

fn call(args: &str) -> CommandOutcome {
    run(std::iter::once("palper").chain(args.split_whitespace()))
}

#[test]
fn check_subcommands() {
    let cases = [
        ("check is-pp 121344312134", 0, "yes p=121 s=3443\n"),
        ("check is-pp 102", 1, "no\n"),
        ("check root 0100110", 0, "010011\n"),
        ("check symmetric 0100110", 0, "yes 010|0110\n"),
        ("check symmetric 010011", 1, "no\n"),
        ("check sturmian 010010", 0, "yes\n"),
        ("check sturmian 00001010", 1, "no 000 101\n"),
        ("check trapezoidal 0011", 0, "yes\n"),
        ("check rich 001001101011", 1, "no\n"),
        ("check closed 0101001", 1, "no\n"),
        ("check central 00100", 0, "yes\n"),
    ];
    for (args, code, out) in cases {
        let r = call(args);
        assert_eq!((r.code, r.stdout.as_str()), (code, out), "{args}");
    }
}

#[test]
fn bwt_and_generate() {
    assert_eq!(call("bwt 0120").stdout, "2001\n");
    let r = call("bwt 0101 --clustered 2");
    assert_eq!((r.code, r.stdout.as_str()), (0, "yes 1100\n"));
    assert_eq!(call("generate period_doubling --start 12 --len 9").stdout, "101110111\n");
    assert_eq!(call("generate nosuch --len 3").code, 2);
}

#[test]
fn census_formats() {
    let r = call("census thue_morse --from 3 --to 4 --csv");
    assert_eq!(r.stdout, "n,factors,pp,formula,match\n3,6,6,6,true\n4,10,10,10,true\n");
    let r = call("census period_doubling --to 2 --json");
    let v: serde_json::Value = serde_json::from_str(r.json.as_deref().unwrap()).unwrap();
    assert_eq!(v[1]["pp"], 3);
    assert_eq!(v[1]["match"], true);
    let keys: Vec<&String> = v[0].as_object().unwrap().keys().collect();
    assert_eq!(keys.len(), 5);
}

#[test]
fn inventory_bounds_and_search() {
    assert_eq!(call("inventory --periodic 012").stdout, "0\n1\n2\n01\n12\n20\n");
    assert_eq!(call("inventory tau_f").stdout.lines().count(), 9);
    assert_eq!(call("bounds period_doubling --to 48").code, 0);
    let r = call("search --threshold 5 --json");
    let v: serde_json::Value = serde_json::from_str(r.json.as_deref().unwrap()).unwrap();
    assert_eq!(v["length_reached"], 5);
    assert_eq!(v["closed"], true);
    assert_eq!(v["extremal"][0], "00000");
    let r = call("search --threshold 29 --alphabet 2 --deep");
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains(&"1".repeat(29)));
    let r = call("search --threshold 8 --forms ternary --min-len 9 --cap 12");
    assert_eq!(r.code, 0);
}

#[test]
fn counts() {
    assert_eq!(call("count-a374495 --max 6").stdout, "2\n4\n8\n16\n32\n58\n");
    assert!(call("count-a374495 --max 3 --csv").stdout.starts_with("n,count\n1,2\n"));
}

#[test]
fn verify_quick_passes() {
    let r = call("verify-paper --quick");
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert!(r.stdout.ends_with("13/13 criteria passed\n"));
}

#[test]
fn exit_codes() {
    assert_eq!(call("").code, 2);
    assert_eq!(call("check is-pp").code, 2);
    assert_eq!(call("check frob 0").code, 2);
    assert_eq!(call("census thue_morse --from 0").code, 2);
    assert_eq!(call("inventory --periodic 010").code, 3);
    assert_eq!(call("census thue_morse --to 40 --initial 64 --prefix-cap 64").code, 3);
}

#[test]
fn output_is_byte_stable() {
    for args in ["inventory rudin_shapiro", "search --threshold 8 --json", "census tribonacci --to 30 --csv"] {
        let a = call(args);
        let b = call(args);
        assert_eq!(a, b, "{args}");
    }
}
