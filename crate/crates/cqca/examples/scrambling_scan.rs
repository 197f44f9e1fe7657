//! Scrambling times across the local dimension N.
//!
//! The squared commutator at the insertion site first reaches 1 at the
//! scrambling time t*. Scanning N from 2 to 378 shows t* jumping by one at
//! specific values of N; the witnessing phase integers form the sequence
//! 1, 2, 5, 11, 26, 63: Whitney numbers of fences (see the
//! `whitney_numbers` example for the combinatorial side).
//!
//! ```text
//! cargo run --release --example scrambling_scan
//! ```

use cqca::algebra::RuleFamily;
use cqca::dynamics::{scan_scrambling_times, Insertion, ScrambleOutcome};

fn main() -> Result<(), cqca::Error> {
    let ns: Vec<u64> = (2..=378).collect();
    let scan = scan_scrambling_times(&RuleFamily::Paper, &ns, Insertion::Q, Insertion::Q, 64)?;

    // Collapse consecutive rows with equal t* into ranges.
    println!("{:>12} {:>4} {:>10}", "N range", "t*", "xi(0, t*)");
    let mut start = scan.rows[0].n;
    let mut current = scan.rows[0].outcome;
    let print_range = |from: u64, to: u64, outcome: ScrambleOutcome| match outcome {
        ScrambleOutcome::Found { t_star, xi_witness } => {
            println!("{:>12} {:>4} {:>10}", format!("[{from}, {to}]"), t_star, xi_witness);
        }
        ScrambleOutcome::NotFound { t_max } => {
            println!("{:>12} {:>4} {:>10}", format!("[{from}, {to}]"), "-", format!(">{t_max}"));
        }
    };
    for pair in scan.rows.windows(2) {
        if pair[1].outcome != current {
            print_range(start, pair[0].n, current);
            start = pair[1].n;
            current = pair[1].outcome;
        }
    }
    print_range(start, scan.rows.last().unwrap().n, current);

    println!("\njump boundaries: {:?}", scan.jump_boundaries());
    Ok(())
}
