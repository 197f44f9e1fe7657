//! Cone-edge geometry and the butterfly velocity.
//!
//! The scrambled region (`C >= 1`) forms a cone in space-time. Fitting a
//! line through the rightmost scrambled offset of each late-time row gives
//! the cone's spreading rate: one site per step for this nearest-neighbor
//! rule, regardless of N. Larger N delays the cone's onset (larger
//! scrambling time) without changing its asymptotic slope.
//!
//! ```text
//! cargo run --release --example butterfly_velocity
//! ```

use cqca::algebra::paper_rule;
use cqca::dynamics::{fit_butterfly_velocity, scrambling_time, HeatMap, Insertion};

fn main() -> Result<(), cqca::Error> {
    println!(
        "{:>6} {:>6} {:>8} {:>10} {:>12}",
        "N", "T", "v_B", "intercept", "t*"
    );
    for (n, t) in [(2u64, 100u32), (10, 100), (100, 200), (1000, 200)] {
        let rule = paper_rule(n)?;
        let map = HeatMap::compute(&rule, Insertion::Q, Insertion::Q, t, t)?;
        let fit = fit_butterfly_velocity(&map, 1.0)?;
        let t_star = scrambling_time(&rule, Insertion::Q, Insertion::Q, t)?
            .t_star()
            .map_or("-".into(), |v| v.to_string());
        println!(
            "{:>6} {:>6} {:>8.4} {:>10.2} {:>12}",
            n, t, fit.v_b, fit.intercept, t_star
        );
    }

    // A peek at the fitted edge points for N = 1000.
    let rule = paper_rule(1000)?;
    let map = HeatMap::compute(&rule, Insertion::Q, Insertion::Q, 200, 200)?;
    let fit = fit_butterfly_velocity(&map, 1.0)?;
    println!("\nN = 1000 cone edge (every 20th fitted row):");
    for (t, alpha) in fit.edge[fit.fit_start..].iter().step_by(20) {
        println!("  t = {t:>4}  alpha_max = {alpha:>4}");
    }
    Ok(())
}
