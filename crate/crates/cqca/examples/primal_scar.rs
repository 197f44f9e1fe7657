//! Primal scars: small-N patterns hiding inside composite-N dynamics.
//!
//! For composite N = kappa * p^ell with gcd(kappa, p) = 1, the operators
//! `Q^kappa, P^kappa` generate a closed subalgebra, so a run seeded with
//! kappa-scaled insertions replays prime-power dynamics inside the larger
//! system. The flagship case: N = 10 with Q^5 insertions reproduces the
//! binary N = 2 clock/clock pattern cell for cell.
//!
//! The sweep at the end maps out when the match is value-exact: precisely
//! when kappa = +/-1 (mod p^ell). For other kappa the zero cells still
//! coincide but the nonzero gradations are permuted by the multiplier.
//!
//! ```text
//! cargo run --release --example primal_scar
//! ```

use cqca::algebra::RuleFamily;
use cqca::analysis::primal_scar_check;
use cqca::dynamics::Insertion;

fn main() -> Result<(), cqca::Error> {
    let family = RuleFamily::Paper;

    println!("N = 10, insertions Q^5/Q^5 versus N = 2, Q/Q (L = T = 100):");
    let cmp = primal_scar_check(&family, 10, 5, 2, 1, Insertion::Q, 100, 100)?;
    println!(
        "  exact_match = {}, max cell deviation = {}",
        cmp.exact_match, cmp.max_cell_deviation
    );

    println!("\nsweep over composite factorizations (W base = Q, T = 64):");
    println!(
        "{:>4} {:>6} {:>7} {:>12} {:>10}",
        "N", "kappa", "p^ell", "exact match", "max dev"
    );
    for kappa in 1u64..=15 {
        for (p, ell) in [(2u64, 1u32), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (7, 1), (11, 1), (13, 1)] {
            let pp = p.pow(ell);
            let n = kappa * pp;
            if n > 30 || kappa % p == 0 {
                continue;
            }
            let cmp = primal_scar_check(&family, n, kappa, p, ell, Insertion::Q, 64, 64)?;
            println!(
                "{:>4} {:>6} {:>7} {:>12} {:>10.4}",
                n, kappa, pp, cmp.exact_match, cmp.max_cell_deviation
            );
        }
    }
    Ok(())
}
