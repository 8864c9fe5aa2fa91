//! The three positivity-preserving kernels and their closed-form
//! summations. Every kernel entry is a polynomial with nonnegative
//! coefficients, so the transforms carry positivity from input to output.
//!
//! Run with: cargo run --example kernels

use qverify::poly::IntLaurentPoly;
use qverify::transforms::{
    apply_transform, kernel, kernel_row, verify_kernel_identity, verify_trinomial_identity,
    KernelKind,
};

fn main() {
    for kind in [KernelKind::C, KernelKind::W, KernelKind::O] {
        println!("{kind} kernel row at L = 4:");
        let row = kernel_row(kind, 4);
        for (k, entry) in row.entries.iter().enumerate() {
            println!("  {kind}_{{4,{k}}} = {entry}");
        }
    }

    println!("\nRow sums are nonnegative (transform of the constant family 1):");
    for l in 0..=6 {
        let sum = apply_transform(KernelKind::C, l, |_| IntLaurentPoly::one());
        println!("  L = {l}: {sum}");
    }

    println!("\nClosed-form summations hold across kinds and shifts:");
    let mut checked = 0u32;
    for kind in [KernelKind::C, KernelKind::W, KernelKind::O] {
        for l in 0..=10 {
            for a in -5..=5 {
                assert!(verify_kernel_identity(kind, l, a), "{kind} L={l} a={a}");
                checked += 1;
            }
        }
    }
    for l in 0..=10 {
        for a in -5..=5 {
            assert!(verify_trinomial_identity(l, a), "trinomial L={l} a={a}");
            checked += 1;
        }
    }
    println!("  {checked} instances verified exactly");

    println!("\nSingle entries outside the support vanish:");
    println!("  O_{{0,0}} = {}", kernel(KernelKind::O, 0, 0));
    println!("  C_{{3,7}} = {}", kernel(KernelKind::C, 3, 7));
}
