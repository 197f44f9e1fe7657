//! Whitney numbers two ways, and why the scrambling time jumps where it does.
//!
//! `W_2t` counts the order-t ideals of the fence poset `p1 < p2 > p3 < ...`
//! on 2t points. The same integers appear as the center-site phase exponents
//! of the evolved clock operator, so the simulator's scrambling-time jumps
//! land exactly where `6 * W_2t` first reaches N.
//!
//! This example evaluates the terminating hypergeometric series over exact
//! rationals, cross-checks it against brute-force ideal enumeration, and
//! prints the predicted jump boundaries.
//!
//! ```text
//! cargo run --release --example whitney_numbers
//! ```

use cqca::combinatorics::{whitney_hypergeometric, Fence, WhitneySequence};

fn main() -> Result<(), cqca::Error> {
    let t_max = 16;
    let seq = WhitneySequence::compute(t_max, 12)?;

    println!("{:>3} {:>14} {:>8} {:>14}", "t", "W_2t", "oracle", "t* jumps at N");
    for entry in &seq.values {
        let jump = 6u64 * u64::try_from(&entry.value).unwrap() + 1;
        println!(
            "{:>3} {:>14} {:>8} {:>14}",
            entry.t,
            entry.value.to_string(),
            if entry.oracle_checked { "checked" } else { "-" },
            jump
        );
    }

    // The enumeration itself, spelled out for one small fence.
    let fence = Fence::new(6);
    let counts: Vec<u64> = (0..=6).map(|i| fence.count_ideals(i).unwrap()).collect();
    println!("\nideal counts of the order-6 fence by size: {counts:?}");
    println!("middle entry = W_6 = {}", whitney_hypergeometric(3)?);
    Ok(())
}
