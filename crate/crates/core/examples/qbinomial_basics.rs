//! Tour of the exact building blocks: Gaussian binomials, Pochhammer
//! products, q-trinomials, and the polynomial text format.
//!
//! Run with: cargo run --example qbinomial_basics

use qverify::poly::IntLaurentPoly;
use qverify::qcomb::{pochhammer, qbinom, qbinom_top_bottom, triangular, trinomial_tm1, Sign};

fn main() {
    println!("Gaussian binomials (dense, exact, canonical):");
    for (m, n) in [(2, 2), (3, 2), (1, -2)] {
        println!("  qbinom({m}, {n})          = {}", qbinom(m, n));
    }
    println!("  [5; 2] (top/bottom form) = {}", qbinom_top_bottom(5, 2));

    println!("\nPalindromic coefficients and the ordinary binomial at q = 1:");
    let b = qbinom(3, 3);
    println!("  qbinom(3, 3) = {b}");
    println!("  value at q=1 = {} (binomial C(6,3) = 20)", b.eval_at_one());

    println!("\nFinite Pochhammer products:");
    println!("  (q)_4       = {}", pochhammer(Sign::Plus, 1, 1, 4));
    println!("  (-q)_3      = {}", pochhammer(Sign::Minus, 1, 1, 3));
    println!("  (-q; q^2)_3 = {}", pochhammer(Sign::Minus, 1, 2, 3));

    println!("\nq-trinomial coefficients T_-1(k, a):");
    for a in -2..=2 {
        println!("  T_-1(4, {a:>2}) = {}", trinomial_tm1(4, a));
    }

    println!("\nTriangular numbers are symmetric under j -> -1-j:");
    let js: Vec<String> = (-4..=4).map(|j| format!("T({j})={}", triangular(j))).collect();
    println!("  {}", js.join("  "));

    println!("\nThe text format round-trips exactly:");
    let rendered = qbinom(2, 3).shift(-2).render();
    println!("  rendered: {rendered}");
    let parsed = IntLaurentPoly::parse(&rendered).unwrap();
    println!("  parsed == original: {}", parsed == qbinom(2, 3).shift(-2));
}
