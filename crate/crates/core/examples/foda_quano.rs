//! The finite Andrews-Gordon multi-sum, its alternating-sum form, and the
//! kernel-transformed family with its G cross-check.
//!
//! Run with: cargo run --example foda_quano

use std::collections::BTreeMap;

use qverify::identities::{
    foda_quano_lhs, theorem1_g_side, theorem1_lhs, theorem1_rhs, verify, FodaQuanoParams,
};

fn main() {
    println!("Multi-sum values (nu = 3, s = 1):");
    for l in 0..=8 {
        let p = FodaQuanoParams::new(3, 1, l).unwrap();
        println!("  L = {l}: {}", foda_quano_lhs(&p));
    }

    println!("\nTransformed family at nu = 2, s = 1, L = 5:");
    let p = FodaQuanoParams::new(2, 1, 5).unwrap();
    let lhs = theorem1_lhs(&p);
    let rhs = theorem1_rhs(&p).unwrap();
    let g = theorem1_g_side(&p).unwrap();
    println!("  kernel transform : {lhs}");
    println!("  alternating sum  : {rhs}");
    println!("  shifted G value  : {g}");
    println!("  all three equal  : {}", lhs == rhs && rhs == g);
    println!("  nonnegative      : {}", lhs.is_nonnegative());

    println!("\nFull verdicts through the registry:");
    for (nu, s, l) in [(1, 0, 10), (2, 0, 8), (3, 2, 6), (4, 3, 12)] {
        let params: BTreeMap<String, i64> = [
            ("nu".to_string(), nu),
            ("s".to_string(), s),
            ("L".to_string(), l),
        ]
        .into_iter()
        .collect();
        let report = verify("eq2.21", &params).unwrap();
        println!("  {}", report.text_line());
    }
}
