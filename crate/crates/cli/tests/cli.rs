use liftable_cli::{run, EXIT_OK, EXIT_REJECTED, EXIT_USAGE};
use serde_json::Value;

fn cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("liftable").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn cli_json(args: &[&str]) -> (i32, Value) {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let (code, out, err) = cli(&full);
    assert!(err.is_empty(), "{err}");
    (code, serde_json::from_str(&out).unwrap())
}

fn schema() -> Value {
    serde_json::from_str(include_str!("../schema/output.schema.json")).unwrap()
}

/// Structural validation against the subset of JSON Schema used by the
/// output schema; `pattern` is not interpreted.
fn check(root: &Value, schema: &Value, v: &Value, path: &str, errors: &mut Vec<String>) {
    let Some(s) = schema.as_object() else {
        if schema == &Value::Bool(false) {
            errors.push(format!("{path}: not allowed"));
        }
        return;
    };
    if let Some(r) = s.get("$ref").and_then(Value::as_str) {
        let name = r.strip_prefix("#/$defs/").expect("local ref");
        check(root, &root["$defs"][name], v, path, errors);
    }
    if let Some(t) = s.get("type") {
        let types: Vec<&str> = match t {
            Value::String(x) => vec![x.as_str()],
            Value::Array(xs) => xs.iter().filter_map(Value::as_str).collect(),
            _ => vec![],
        };
        let ok = types.iter().any(|t| match *t {
            "object" => v.is_object(),
            "array" => v.is_array(),
            "string" => v.is_string(),
            "integer" => v.is_i64() || v.is_u64(),
            "number" => v.is_number(),
            "boolean" => v.is_boolean(),
            "null" => v.is_null(),
            _ => false,
        });
        if !ok {
            errors.push(format!("{path}: expected {types:?}, got {v}"));
            return;
        }
    }
    if let Some(c) = s.get("const") {
        if c != v {
            errors.push(format!("{path}: expected const {c}"));
        }
    }
    if let Some(e) = s.get("enum").and_then(Value::as_array) {
        if !e.contains(v) {
            errors.push(format!("{path}: {v} not in enum"));
        }
    }
    if let Some(n) = v.as_i64() {
        if s.get("minimum")
            .and_then(Value::as_i64)
            .is_some_and(|m| n < m)
        {
            errors.push(format!("{path}: below minimum"));
        }
        if s.get("maximum")
            .and_then(Value::as_i64)
            .is_some_and(|m| n > m)
        {
            errors.push(format!("{path}: above maximum"));
        }
    }
    for (key, want_all) in [("anyOf", false), ("oneOf", true)] {
        if let Some(alts) = s.get(key).and_then(Value::as_array) {
            let passing = alts
                .iter()
                .filter(|a| {
                    let mut e = Vec::new();
                    check(root, a, v, path, &mut e);
                    e.is_empty()
                })
                .count();
            if passing == 0 || (want_all && passing != 1) {
                errors.push(format!("{path}: {passing} alternatives of {key} match"));
            }
        }
    }
    if let Some(obj) = v.as_object() {
        if let Some(req) = s.get("required").and_then(Value::as_array) {
            for r in req.iter().filter_map(Value::as_str) {
                if !obj.contains_key(r) {
                    errors.push(format!("{path}: missing {r}"));
                }
            }
        }
        let props = s.get("properties").and_then(Value::as_object);
        for (k, x) in obj {
            let sub = format!("{path}/{k}");
            match props.and_then(|p| p.get(k)) {
                Some(ps) => check(root, ps, x, &sub, errors),
                None => match s.get("additionalProperties") {
                    Some(Value::Bool(false)) => errors.push(format!("{sub}: unexpected")),
                    Some(ap @ Value::Object(_)) => check(root, ap, x, &sub, errors),
                    _ => {}
                },
            }
        }
    }
    if let Some(arr) = v.as_array() {
        if s.get("minItems")
            .and_then(Value::as_u64)
            .is_some_and(|m| (arr.len() as u64) < m)
        {
            errors.push(format!("{path}: too few items"));
        }
        if s.get("maxItems")
            .and_then(Value::as_u64)
            .is_some_and(|m| arr.len() as u64 > m)
        {
            errors.push(format!("{path}: too many items"));
        }
        let prefix = s
            .get("prefixItems")
            .and_then(Value::as_array)
            .map_or(&[][..], Vec::as_slice);
        for (i, x) in arr.iter().enumerate() {
            let sub = format!("{path}/{i}");
            match prefix.get(i) {
                Some(ps) => check(root, ps, x, &sub, errors),
                None => {
                    if let Some(items) = s.get("items") {
                        check(root, items, x, &sub, errors);
                    }
                }
            }
        }
    }
}

fn assert_conforms(def: &str, v: &Value) {
    let root = schema();
    let mut errors = Vec::new();
    check(&root, &root["$defs"][def], v, "", &mut errors);
    assert!(errors.is_empty(), "{def}: {errors:#?}");
    let mut errors = Vec::new();
    check(&root, &root, v, "", &mut errors);
    assert!(errors.is_empty(), "root: {errors:#?}");
}

#[test]
fn validator_detects_schema_violations() {
    let root = schema();
    let mut errors = Vec::new();
    let bad = serde_json::json!({ "schema": 2, "passed": "yes", "checks": [], "extra": 1 });
    check(&root, &root["$defs"]["verify"], &bad, "", &mut errors);
    assert_eq!(errors.len(), 3, "{errors:?}");
}

#[test]
fn every_verb_conforms_to_the_schema() {
    let cases: [(&str, &[&str]); 9] = [
        ("validate", &["validate", "(6,0;(1,2),(1,2),(1,3),(2,3))"]),
        ("validate", &["validate", "(4,0;(1,2),(1,4))"]),
        ("enumerate", &["enumerate", "2"]),
        ("analyze", &["analyze", "(6,0;(1,2),(1,2),(1,3),(2,3))"]),
        ("analyze", &["analyze", "(7,0;(1,7),(2,7),(4,7))"]),
        ("present", &["present", "(10,0;(1,5),(4,5),(1,10),(9,10))"]),
        ("classify", &["classify", "(12,0;(1,2),(1,12),(5,12))"]),
        ("table1", &["table1"]),
        ("verify", &["verify"]),
    ];
    for (def, args) in cases {
        let (_, v) = cli_json(args);
        assert_conforms(def, &v);
    }
}

#[test]
fn json_output_is_byte_stable() {
    for args in [
        &["analyze", "(8,0;(1,2),(1,2),(1,4),(3,4),(1,8),(7,8))"][..],
        &["present", "(6,0;(1,2),(1,2),(1,3),(2,3))"],
        &["enumerate", "3"],
        &["table1"],
    ] {
        let mut full = args.to_vec();
        full.extend(["--format", "json"]);
        let a = cli(&full);
        let b = cli(&full);
        assert_eq!(a, b);
        assert!(a.1.ends_with("}\n"));
    }
}

#[test]
fn validate_reports_violations_and_genus() {
    let (code, out, _) = cli(&["validate", "(6,0;(1,2),(1,2),(1,3),(2,3))"]);
    assert_eq!(code, EXIT_OK);
    assert!(
        out.contains("valid: yes") && out.contains("genus: 2"),
        "{out}"
    );

    let (code, v) = cli_json(&["validate", "(4,0;(1,2),(1,4))"]);
    assert_eq!(code, EXIT_REJECTED);
    let labels: Vec<&str> = v["violations"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x["label"].as_str().unwrap())
        .collect();
    assert_eq!(labels, ["cond_ii", "cond_iv", "rh_non_integer"]);
    assert_eq!(v["genus"], Value::Null);

    let (code, v) = cli_json(&["validate", "(3,0;(1,3),(1,3),(1,3))"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["genus"], 1);
    assert_eq!(v["flags"], serde_json::json!(["scope_genus"]));
}

#[test]
fn parse_errors_report_position_and_exit_one() {
    let (code, out, err) = cli(&["validate", "(6,0;(1,2),(1,2)x)"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(out.is_empty());
    assert!(err.contains("line 1") && err.contains("column 17"), "{err}");
    let (code, _, _) = cli(&["frobnicate"]);
    assert_eq!(code, EXIT_USAGE);
    let (code, _, _) = cli(&["enumerate", "2", "--jobs", "0"]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn analyze_rejects_out_of_scope_inputs() {
    for s in [
        "(2,1;(1,2),(1,2))",
        "(3,0;(1,3),(2,3))",
        "(4,0;(1,2),(1,4))",
    ] {
        let (code, out, err) = cli(&["analyze", s]);
        assert_eq!(code, EXIT_REJECTED, "{s}");
        assert!(out.is_empty() && err.starts_with("error:"), "{s}: {err}");
    }
}

#[test]
fn analyze_text_lines() {
    let (code, out, _) = cli(&["analyze", "(6,0;(1,2),(1,2),(1,3),(2,3))"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("[Mod:LMod] = 6"), "{out}");
    assert!(out.contains("[N(F):C(F)] = 2"), "{out}");
    let (_, out, _) = cli(&["analyze", "(2,0;(1,2),(1,2),(1,2),(1,2),(1,2),(1,2))"]);
    assert!(out.contains("LMod = Mod(S_{0,6})"), "{out}");
    assert!(out.contains("hyperelliptic"), "{out}");
}

#[test]
fn analyze_json_fields() {
    let (_, v) = cli_json(&["analyze", "(10,0;(1,5),(4,5),(1,10),(9,10))"]);
    assert_eq!(v["genus"], 8);
    assert_eq!(v["stabilizer"]["index_mod_lmod"], 12);
    assert_eq!(v["stabilizer"]["index_n_c"], 2);
    assert_eq!(v["lmod"]["abelianization"], "Z^2 ⊕ Z_2");
    assert_eq!(
        v["clmod"]["presentation"]["relators"],
        serde_json::json!([])
    );
    assert_eq!(v["cross_checked"], true);
    assert_eq!(v["families"], serde_json::json!(["doubled, case (ii)"]));
}

#[test]
fn present_free_centralizer_and_trivial_groups() {
    let (code, out, _) = cli(&["present", "(10,0;(1,5),(4,5),(1,10),(9,10))"]);
    assert_eq!(code, EXIT_OK);
    assert!(
        out.contains("<F, G1, G2 | F^10 = 1, G1*F*G1^-1*F^-1 = 1, G2*F*G2^-1*F^-1 = 1>"),
        "{out}"
    );
    let (_, out, _) = cli(&["present", "(7,0;(1,7),(2,7),(4,7))"]);
    assert!(
        out.contains("CLMod: <1>") || out.contains("< | >") || out.contains("<1>"),
        "{out}"
    );
}

#[test]
fn present_with_user_exponents() {
    let d = "(6,0;(1,2),(1,2),(1,3),(2,3))";
    let (_, v) = cli_json(&["present", d]);
    let count = |key: &str| v[key]["relators"].as_array().unwrap().len();
    let zeros = |m: usize| vec!["0"; m].join(",");
    let (lm, cm) = (zeros(count("lmod")), zeros(count("clmod")));
    let (code, v) = cli_json(&[
        "present",
        d,
        "--normalizer-exponents",
        &lm,
        "--centralizer-exponents",
        &cm,
    ]);
    assert_eq!(code, EXIT_OK, "{v}");
    assert_eq!(v["normalizer"]["provenance"], "user_supplied");
    assert_eq!(v["centralizer"]["provenance"], "user_supplied");
    assert_eq!(
        v["normalizer"]["presentation"]["symbolic"],
        serde_json::json!([])
    );
    let (code, _, err) = cli(&[
        "present",
        "(6,0;(1,2),(1,2),(1,3),(2,3))",
        "--normalizer-exponents",
        "1",
    ]);
    assert_eq!(code, EXIT_USAGE, "{err}");
}

#[test]
fn classify_irreducible_cases() {
    let (code, v) = cli_json(&["classify", "(8,0;(1,4),(1,8),(5,8))"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["case"], "(ii)(b)");
    assert_eq!(v["normalizer"], "Z_8 ⋊_5 Z_2");
    assert_eq!(v["centralizer"], "Z_8");
    let (code, _, _) = cli(&["classify", "(6,0;(1,2),(1,2),(1,3),(2,3))"]);
    assert_eq!(code, EXIT_REJECTED);
}

#[test]
fn table1_rows() {
    let (code, v) = cli_json(&["table1"]);
    assert_eq!(code, EXIT_OK);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 8);
    assert_eq!(rows[0]["normalizer"], "Z_7 ⋊_2 Z_3");
    assert_eq!(rows[7]["centralizer"], "Z_14");
    assert_eq!(v["D_G"], "out of scope");
}

#[test]
fn verify_passes() {
    let (code, out, _) = cli(&["verify"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("(G1*G2)^2 = F^4"), "{out}");
    let (_, v) = cli_json(&["verify"]);
    assert_eq!(v["passed"], true);
}

#[test]
fn enumerate_is_independent_of_jobs() {
    let (_, one) = cli_json(&["enumerate", "4"]);
    let (_, four) = cli_json(&["enumerate", "4", "--jobs", "4"]);
    assert_eq!(one, four);
    assert_eq!(one["count"], 23);
    let (code, out, _) = cli(&["enumerate", "2"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().count(), 8);
}

#[test]
fn out_writes_the_file() {
    let path = std::env::temp_dir().join(format!("liftable-cli-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    let (code, out, _) = cli(&["table1", "--format", "json", "--out", p]);
    assert_eq!(code, EXIT_OK);
    assert!(out.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    let (_, direct, _) = cli(&["table1", "--format", "json"]);
    assert_eq!(written, direct);
}
