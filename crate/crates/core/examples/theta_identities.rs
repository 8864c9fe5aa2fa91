//! Registry-driven verification of the finite theta-style identities:
//! Schur's bounded pentagonal sum, the bounded Rogers-Ramanujan chain,
//! Dyson's identity, and friends.
//!
//! Run with: cargo run --example theta_identities

use std::collections::BTreeMap;

use qverify::identities::{registry_list, verify};

fn run(id: &str, pairs: &[(&str, i64)]) {
    let params: BTreeMap<String, i64> = pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect();
    let report = verify(id, &params).unwrap();
    println!("  {}", report.text_line());
}

fn main() {
    println!("Registered finite identities:");
    for desc in registry_list() {
        let names: Vec<&str> = desc.params.iter().map(|p| p.name).collect();
        println!("  {:9} params {:?}  {}", desc.id, names, desc.summary);
    }

    println!("\nSpot checks:");
    run("eq2.13", &[("L", 25)]);
    run("eq3.3", &[("L", 0)]);
    run("eq3.3", &[("L", 17)]);
    run("eq3.4", &[("L", 12)]);
    run("eq3.5", &[("L", 12)]);
    run("eq3.9", &[("k", 23)]);
    run("eq3.24", &[("L", 15)]);
    run("eq3.10", &[("L", 9)]);
    run("eq3.25", &[("L", 9)]);

    println!("\nA report carries both rendered sides when they are small:");
    let params: BTreeMap<String, i64> = [("L".to_string(), 2)].into_iter().collect();
    let report = verify("eq2.16", &params).unwrap();
    println!("  lhs = {}", report.lhs.unwrap());
    println!("  rhs = {}", report.rhs.unwrap());
    println!("  JSON: {}", serde_json::to_string(&verify("eq2.16", &params).unwrap()).unwrap());
}
