//! Browser bindings. Every function takes plain strings and returns a JSON
//! document; errors come back as `{"error": ..., "message": ...}`.

use finlogic::catalog;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn cli(args: &[&str]) -> String {
    let mut argv = vec!["finlogic"];
    argv.extend_from_slice(args);
    argv.push("--json");
    let (_, out, err) = finlogic::cli::run(argv);
    if out.is_empty() {
        err
    } else {
        out
    }
}

fn error_doc(e: finlogic::Error) -> String {
    json!({"error": "input", "message": e.to_string()}).to_string()
}

/// Catalog names with their default parameter filled in.
#[wasm_bindgen]
pub fn catalog_names() -> String {
    Value::from(catalog::default_names()).to_string()
}

/// Classification of a catalog entry plus a Hasse layout: each node has a
/// rank (height above the bottom) and a slot within its rank.
#[wasm_bindgen]
pub fn describe(name: &str) -> String {
    let entry = match catalog::lookup(name) {
        Ok(e) => e,
        Err(e) => return error_doc(e),
    };
    let l = entry.structure.lattice();
    let ranks = l.poset().ranks();
    let mut seen = vec![0usize; l.len() + 1];
    let nodes: Vec<Value> = (0..l.len())
        .map(|i| {
            let slot = seen[ranks[i]];
            seen[ranks[i]] += 1;
            let neg = entry.structure.negation().map(|n| l.name(n[i]).to_string());
            json!({"label": l.name(i), "rank": ranks[i], "slot": slot, "negation": neg})
        })
        .collect();
    let width: Vec<usize> = seen.into_iter().take_while(|&w| w > 0).collect();
    let edges: Vec<Value> = l.covers().into_iter().map(|(a, b)| json!([a, b])).collect();
    let classify: Value = serde_json::from_str(&cli(&["classify", "--catalog", name])).unwrap_or(Value::Null);
    json!({"name": name, "nodes": nodes, "widths": width, "edges": edges, "classify": classify}).to_string()
}

/// Checks `lhs = rhs` over every assignment in a catalog entry. An empty
/// `rhs` checks `lhs = 1`.
#[wasm_bindgen]
pub fn check_identity(name: &str, lhs: &str, rhs: &str, semantics: &str) -> String {
    let mut args = vec!["eval", "--catalog", name, lhs];
    if !rhs.trim().is_empty() {
        args.extend(["--rhs", rhs]);
    }
    if !semantics.is_empty() {
        args.extend(["--semantics", semantics]);
    }
    cli(&args)
}

/// Fusion and implication tables of a t-norm on the chain 0, 1/n, ..., 1.
#[wasm_bindgen]
pub fn tnorm_tables(kind: &str, n: u32) -> String {
    let n = n.to_string();
    cli(&["tnorm", kind, "--n", &n])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: String) -> Value {
        serde_json::from_str(&s).unwrap()
    }

    #[test]
    fn describe_lays_out_m5() {
        let v = parse(describe("M5"));
        assert_eq!(v["nodes"].as_array().unwrap().len(), 5);
        assert_eq!(v["widths"], json!([1, 3, 1]));
        assert_eq!(v["edges"].as_array().unwrap().len(), 6);
        assert!(v["classify"]["label"].is_string());
        assert!(parse(describe("NOPE"))["error"].is_string());
    }

    #[test]
    fn identity_check_reports_a_witness() {
        let v = parse(check_identity("O6", "x | (~x & y)", "x | y", "ortho"));
        assert_eq!(v["holds"], false);
        let v = parse(check_identity("CUBE(2)", "x & (y | z)", "(x & y) | (x & z)", ""));
        assert_eq!(v["holds"], true);
    }

    #[test]
    fn tables_have_n_plus_one_rows() {
        let v = parse(tnorm_tables("goedel", 3));
        assert_eq!(v["fusion"].as_array().unwrap().len(), 4);
        assert!(parse(catalog_names()).as_array().unwrap().len() > 10);
    }
}
