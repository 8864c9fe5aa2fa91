//! The Borwein polynomial triple (A_n, B_n, C_n) as instances of the
//! G family: coefficient positivity and the product decomposition
//! prod (1 - q^{3k-1})(1 - q^{3k-2}) = A_n(q^3) - q B_n(q^3) - q^2 C_n(q^3).
//!
//! Run with: cargo run --example borwein

use qverify::bressoud::{borwein_abc, borwein_decomposition, region_check, GParams};

fn main() {
    for n in 0..=6 {
        let (a, b, c) = borwein_abc(n);
        println!("n = {n}");
        println!("  A_{n} = {a}");
        println!("  B_{n} = {b}");
        println!("  C_{n} = {c}");
        println!(
            "  nonnegative: A {}, B {}, C {}; decomposition holds: {}",
            a.is_nonnegative(),
            b.is_nonnegative(),
            c.is_nonnegative(),
            borwein_decomposition(n),
        );
    }

    // The A-family parameters sit inside the admissible region.
    let params = GParams { n: 5, m: 5, alpha_k: 5, beta_k: 4, k: 3 };
    let verdict = region_check(&params);
    println!("\nG(5, 5, 5/3, 4/3, 3) in admissible region: {}", verdict.in_region);

    // A point that violates the region: alpha + beta = 0.
    let outside = GParams { n: 5, m: 5, alpha_k: 0, beta_k: 0, k: 3 };
    let verdict = region_check(&outside);
    println!("alpha = beta = 0 violates: {:?}", verdict.violated);
}
