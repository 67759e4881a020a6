//! Command-line contract: exit codes, formats and determinism.

use hypergrowth::cli::run_with;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("hypergrowth").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> serde_json::Value {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn series_json() {
    let v = json(&["series", "--l", "8", "--m", "8", "--kind", "vertices", "--json"]);
    assert_eq!(v["numerator"], serde_json::json!(["1", "2", "2", "2", "1"]));
    assert_eq!(v["denominator"], serde_json::json!(["1", "-6", "-6", "-6", "1"]));
    assert_eq!(v["closed_form"]["matches_grammar"], true);
}

#[test]
fn spherical_key_is_a_domain_error() {
    let (code, out, err) = run(&["series", "--l", "3", "--m", "3", "--kind", "vertices"]);
    assert_eq!(code, 3);
    assert!(out.is_empty());
    assert!(err.contains("spherical"));
}

#[test]
fn usage_errors() {
    assert_eq!(run(&["series", "--l", "8", "--m", "8", "--bogus"]).0, 2);
    assert_eq!(run(&["series", "--l", "8"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["series", "-l", "8", "-m", "8", "--json", "--format", "csv"]).0, 2);
    assert_eq!(run(&["radius", "-l", "8", "-m", "8", "--tol", "2"]).0, 2);
    assert_eq!(run(&["coeffs", "-l", "8", "-m", "8", "--kind", "holly", "--source", "closed"]).0, 2);
}

#[test]
fn every_subcommand_has_help() {
    for sub in ["series", "coeffs", "radius", "verify", "bounds", "ball", "dump-grammar", "errata"] {
        let (code, out, _) = run(&[sub, "--help"]);
        assert_eq!(code, 0, "{sub}");
        assert!(out.contains("Usage"), "{sub}");
    }
}

#[test]
fn verify_exit_codes() {
    let (code, out, _) = run(&["verify", "--l", "8", "--m", "8", "--depth", "5"]);
    assert_eq!(code, 0);
    assert!(out.contains("pairs"));
    let (code, _, err) = run(&["verify", "--l", "8", "--m", "8", "--depth", "5", "--kind", "pairs", "--printed"]);
    assert_eq!(code, 4);
    assert!(err.contains("pairs"));
}

#[test]
fn coefficient_sources_agree() {
    let pick = |src: &str| {
        json(&["coeffs", "-l", "6", "-m", "6", "--kind", "geodesics", "-n", "5", "--source", src, "--json"])
    };
    assert_eq!(pick("grammar")["coefficients"], pick("oracle")["coefficients"]);
    assert_eq!(pick("grammar")["coefficients"], pick("closed")["coefficients"]);
    let (code, out, _) = run(&["coeffs", "-l", "4", "-m", "4", "-n", "3", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(out, "n,coefficient\n0,1\n1,4\n2,8\n3,12\n");
}

#[test]
fn radius_of_pairs() {
    let v = json(&["radius", "-l", "8", "-m", "8", "--kind", "pairs", "--json"]);
    let lo = v["growth"]["lo"].as_f64().unwrap();
    assert!((lo - 7.0248).abs() < 1e-3);
    assert!((v["alpha"]["lo"].as_f64().unwrap() - 2.6504).abs() < 1e-3);
}

#[test]
fn bounds_schema_and_determinism() {
    let args = ["bounds", "-l", "8", "-m", "8", "--depth", "3", "--fekete", "3", "--json"];
    let (c1, a, _) = run(&args);
    let (c2, b, _) = run(&args);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["key"], serde_json::json!({"l": 8, "m": 8}));
    for e in v["entries"].as_array().unwrap() {
        for f in ["name", "lo", "hi", "kind", "provenance", "ref"] {
            assert!(e.get(f).is_some(), "{f}");
        }
    }
    let (_, threaded, _) =
        run(&["bounds", "-l", "8", "-m", "8", "--depth", "3", "--fekete", "3", "--json", "--threads", "4"]);
    assert_eq!(a, threaded);
    let (code, csv, _) = run(&["bounds", "-l", "4", "-m", "4", "--depth", "2", "--fekete", "2", "--format", "csv"]);
    assert_eq!(code, 0);
    assert!(csv.starts_with("name,lo,hi,kind,provenance,ref\n"));
    assert!(!csv.contains("pairs"));
}

#[test]
fn ball_export_lists_every_vertex() {
    let (code, out, _) = run(&["ball", "-l", "5", "-m", "4", "--depth", "3", "--export", "-"]);
    assert_eq!(code, 0);
    let v = json(&["ball", "-l", "5", "-m", "4", "--depth", "3", "--json"]);
    assert_eq!(out.lines().count() as u64, v["vertices"].as_u64().unwrap());
    assert!(out.starts_with("0 0 "));
}

#[test]
fn dump_grammar_lists_kinds() {
    let v = json(&["dump-grammar", "-l", "5", "-m", "5", "--json"]);
    let g = v["grammars"].as_object().unwrap();
    assert!(g.contains_key("pairs"));
    assert!(!g.contains_key("holly"));
    assert!(g["vertices"]["grammar"]["rules"].as_array().unwrap().len() > 1);
    let (code, text, _) = run(&["dump-grammar", "-l", "8", "-m", "8", "--kind", "holly"]);
    assert_eq!(code, 0);
    assert!(text.contains("e1^-1"));
}

#[test]
fn errata_markdown() {
    let (code, out, _) = run(&["errata", "-n", "6"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("# Errata"));
    assert_eq!(run(&["errata", "--json"]).0, 2);
}
