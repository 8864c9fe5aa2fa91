//! Truncated verification of the infinite identities: multi-sum sides
//! against infinite-product sides, the triple-product theta expansion, and
//! the resolution of the two ambiguous exponent readings.
//!
//! Run with: cargo run --example series_limits

use qverify::series::{
    jtp_check, pochhammer_inf, product_side, series_registry_list, verify_series, ProductFactor,
    ProductSideSpec,
};

fn main() {
    println!("Euler product and the partition generating function (cap 10):");
    println!("  (q)_inf   = {}", pochhammer_inf(1, 1, 10).render());
    println!("  1/(q)_inf = {}", pochhammer_inf(1, 1, 10).invert().unwrap().render());

    let spec = ProductSideSpec {
        factors: vec![ProductFactor { exponents: vec![15], modulus: 15 }],
        euler_denominator: true,
    };
    println!("\nMod-15 product side to q^12:");
    println!("  {}", product_side(&spec, 12).render());

    println!("\nTriple-product expansion at monomial specializations:");
    for s in [-1, 0, 1] {
        println!("  z = q^{s}: agree to cap 60: {}", jtp_check(s, 60).unwrap());
    }

    println!("\nRegistered series identities at modest caps:");
    for id in ["eq2.17", "eq3.11", "eq3.20", "eq3.27"] {
        let report = verify_series(id, 60).unwrap();
        println!("  {}", report.text_line());
    }
    for id in ["eq3.12", "eq3.21"] {
        let report = verify_series(id, 30).unwrap();
        println!("  {}", report.text_line());
    }

    println!("\nBoth readings of the ambiguous exponents, resolved by truncation:");
    for id in ["eq3.14", "eq3.15"] {
        let report = verify_series(id, 60).unwrap();
        println!("  {}", report.text_line());
    }

    println!("\nRegistry contents:");
    for info in series_registry_list() {
        println!("  {:18} default cap {:>3}  {}", info.id, info.default_cap, info.summary);
    }
}
