//! Exhaustive positivity scan of the G family over the admissible region:
//! every integer (alphaK, betaK) point with K <= 4 and N + M bounded is
//! evaluated exactly and scanned for negative coefficients.
//!
//! Run with: cargo run --release --example conjecture_sweep

use qverify::bressoud::{g_poly, region_grid};

fn main() {
    let max_size = 10;
    let (inside, outside) = region_grid(2, 4, max_size);
    println!(
        "{} in-region instances with K in 2..=4, N+M <= {max_size} ({outside} grid points outside)",
        inside.len()
    );

    let mut negatives = 0usize;
    let mut largest = (0usize, String::new());
    for params in &inside {
        let g = g_poly(params).expect("exponents are integers on the integer grid");
        if g.first_negative().is_some() {
            negatives += 1;
            println!("  NEGATIVE at {params:?}");
        }
        if g.len() > largest.0 {
            largest = (g.len(), format!("{params:?}"));
        }
    }
    println!("instances with negative coefficients: {negatives}");
    println!("densest polynomial: {} stored terms at {}", largest.0, largest.1);

    // a couple of sample values
    for params in inside.iter().take(3) {
        println!("  {params:?} -> {}", g_poly(params).unwrap());
    }
}
