use postnikov::{run, Outcome, Report};
use serde_json::{json, Value};
use std::process::Command;

fn report(args: &[&str]) -> (Report, i32) {
    let argv = std::iter::once("postnikov").chain(args.iter().copied());
    match run(argv) {
        Outcome::Report(r, code) => (*r, code),
        Outcome::Text(t) => panic!("expected a report, got text {t}"),
    }
}

fn ok(args: &[&str]) -> Value {
    let (r, code) = report(args);
    assert_eq!(code, 0, "{args:?}: {:?}", r.error);
    r.result
}

fn data(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn homology_example() {
    let r = ok(&["homology", "--object", "sphere:2"]);
    assert_eq!(r["homology"], json!([[1, []], [0, []], [1, []]]));
    let r = ok(&["homology", "--object", "torus", "--reduced"]);
    assert_eq!(r["homology"], json!([[0, []], [2, []], [1, []]]));
}

#[test]
fn certify_examples() {
    let r = ok(&["certify-conn", "--object", "sphere:2", "--level", "1"]);
    assert_eq!(r["verdict"]["tag"], "Certified-Yes");
    let r = ok(&["certify-trunc", "--object", "cycle:3", "--level", "1"]);
    assert_eq!(r["verdict"]["tag"], "Certified-Yes");
    let r = ok(&["certify-conn", "--object", "sphere:0", "--level", "0"]);
    assert_eq!(r["verdict"]["tag"], "Certified-No");
    let r = ok(&[
        "certify-conn",
        "--map",
        "boundary-inclusion:3",
        "--level",
        "1",
    ]);
    assert_eq!(r["verdict"]["tag"], "Certified-Yes");
    let r = ok(&[
        "certify-conn",
        "--file",
        &data("sphere1.json"),
        "--level",
        "0",
    ]);
    assert_eq!(r["verdict"]["tag"], "Certified-Yes");
}

#[test]
fn filter_example() {
    let r = ok(&[
        "filter",
        "los-trunc",
        "--family",
        "spheres",
        "--level",
        "const:0",
        "--filter",
        "frechet",
    ]);
    assert_eq!(r["tag"], "Certified-No");
    let r = ok(&[
        "filter",
        "los-conn",
        "--family",
        "spheres",
        "--level",
        "affine:1,-1",
        "--filter",
        "frechet",
    ]);
    assert_eq!(r["tag"], "Certified-Yes");
    let r = ok(&[
        "filter",
        "los-trunc",
        "--germ",
        &data("germ.json"),
        "--level",
        "const:1",
        "--filter",
        "frechet",
    ]);
    assert_eq!(r["tag"], "Certified-Yes");
    let r = ok(&[
        "filter",
        "contains",
        "--filter",
        "principal:2,4",
        "--set",
        "periodic:/01",
    ]);
    assert_eq!(r["tag"], "Certified-No");
    let r = ok(&[
        "filter",
        "lt",
        "--a",
        "const:5",
        "--b",
        "affine:1,0",
        "--filter",
        "frechet",
    ]);
    assert_eq!(r["holds"], true);
    let r = ok(&[
        "filter",
        "witness",
        "--spheres-to-point",
        "--filter",
        "frechet",
    ]);
    assert_eq!(r["tau_equivalence"]["tag"], "Certified-No");
    let r = ok(&[
        "filter",
        "equivalence",
        "--map",
        "id:sphere:1",
        "--filter",
        "frechet",
    ]);
    assert_eq!(r["tag"], "Certified-Yes");
}

#[test]
fn groupoid_commands() {
    let r = ok(&["gpd", "levels", "--functor", "unit:bz:2"]);
    assert_eq!(r["levels"], json!({ "conn_level": 0, "trunc_level": 1 }));
    let r = ok(&["gpd", "levels", "--functor", &data("z2_to_point.json")]);
    assert_eq!(r["levels"]["trunc_level"], 1);
    let r = ok(&["gpd", "factorize", "--functor", "unit:bz:2", "--level", "0"]);
    assert_eq!(r["recomposes"], true);
    let r = ok(&[
        "gpd",
        "fiber",
        "--functor",
        "unit:codiscrete:2",
        "--over",
        "0",
    ]);
    assert_eq!(
        r["fiber"]["components"],
        json!([{ "objects": 2, "group_order": 1 }])
    );
    let r = ok(&[
        "gpd",
        "gap-map",
        "--f",
        "unit:discrete:2",
        "--g",
        "unit:bz:2",
        "--level",
        "1",
    ]);
    assert_eq!(r["agrees"], true);
    let r = ok(&[
        "gpd",
        "is-local",
        "--object",
        "discrete:2",
        "--against",
        "bz:2",
    ]);
    assert_eq!(r["local"], true);
    let r = ok(&[
        "gpd",
        "is-local",
        "--object",
        &data("z2.json"),
        "--against",
        "discrete:2",
    ]);
    assert_eq!(r["local"], false);
}

#[test]
fn pi1_and_join_commands() {
    let r = ok(&["pi1", "--object", "wedge:2"]);
    assert_eq!(r["simplified"]["presentation"]["gens"], 2);
    assert_eq!(r["abelianization"], "Z^2");
    let r = ok(&["join-power", "--object", "discrete:3", "--k", "3"]);
    assert_eq!(r["all_certified"], true);
    let r = ok(&["join-theorem", "--x", "sphere:1", "--y", "sphere:0"]);
    assert_eq!(r["level"], 1);
    assert_eq!(r["verdict"]["tag"], "Certified-Yes");
}

#[test]
fn suites_report_totals() {
    let r = ok(&["suite", "snf-oracle"]);
    assert_eq!(r["details"]["agree"], 500);
    assert_eq!(r["passed"], true);
}

#[test]
fn ingest_and_serialize() {
    let r = ok(&["ingest", &data("sphere1.json")]);
    assert_eq!(r["counts"], json!([2, 2]));
    let (r, code) = report(&["ingest", &data("walking_arrow.json")]);
    assert_eq!(code, 2);
    assert!(r.error.unwrap().contains("no inverse for morphism f"));
    let doc = ok(&["serialize", "--object", "boundary:2"]);
    assert_eq!(doc["kind"], "simplicial");
    assert_eq!(doc["simplices"], json!([[0, 1, 2], [0, 1, 2]]));
    let doc = ok(&["serialize", "--groupoid", "bz:3"]);
    assert_eq!(doc["morphisms"].as_array().unwrap().len(), 3);
}

#[test]
fn reports_are_deterministic() {
    for args in [
        &["suite", "los-agreement"][..],
        &["homology", "--object", "msphere:3"],
        &[
            "filter",
            "los-conn",
            "--family",
            "wedges",
            "--level",
            "const:0",
            "--filter",
            "principal:0,5",
        ],
    ] {
        let (mut a, _) = report(args);
        let (mut b, _) = report(args);
        a.wall_time_ms = 0;
        b.wall_time_ms = 0;
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
    }
    let (a, _) = report(&["suite", "los-agreement", "--seed", "1"]);
    let (b, _) = report(&["suite", "los-agreement", "--seed", "2"]);
    assert_ne!(a.inputs_digest, b.inputs_digest);
}

#[test]
fn digest_covers_file_contents() {
    let dir = std::env::temp_dir().join(format!("postnikov-digest-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("x.json");
    let p = path.to_str().unwrap();
    std::fs::write(&path, r#"{"kind": "simplicial", "facets": [[0, 1]]}"#).unwrap();
    let (a, _) = report(&["ingest", p]);
    std::fs::write(
        &path,
        r#"{"kind": "simplicial", "facets": [[0, 1], [1, 2]]}"#,
    )
    .unwrap();
    let (b, _) = report(&["ingest", p]);
    assert_ne!(a.inputs_digest, b.inputs_digest);
    std::fs::remove_dir_all(&dir).unwrap();
}

fn binary(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_postnikov"))
        .args(args)
        .output()
        .unwrap();
    let v = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), v)
}

#[test]
fn exit_codes() {
    let (code, v) = binary(&["suite", "unknown-name"]);
    assert_eq!(code, 2);
    assert_eq!(v["status"], "error");
    assert_eq!(binary(&["frobnicate"]).0, 2);
    assert_eq!(binary(&["homology", "--object", "sphere:-3"]).0, 2);
    assert_eq!(binary(&["homology"]).0, 2);
    assert_eq!(
        binary(&["certify-conn", "--object", "point", "--level", "-3"]).0,
        2
    );
    assert_eq!(binary(&["homology", "--object", "point"]).0, 0);
    // Without Tietze steps the join powers past the first two are not certified.
    let (code, v) = binary(&["suite", "join-growth", "--tietze-budget", "0"]);
    assert_eq!(code, 1);
    assert_eq!(v["result"]["passed"], false);
    let out = Command::new(env!("CARGO_BIN_EXE_postnikov"))
        .arg("--help")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}
