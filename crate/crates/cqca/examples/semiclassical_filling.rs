//! Cone filling in the large-N limit.
//!
//! As N grows the oscillation period of the squared commutator grows with
//! it, so values linger near their maxima and the cone interior loses its
//! sharp fractal structure. The fill fraction, the share of in-cone cells
//! with `C >= 1`, quantifies it: at large N it settles near 2/3, the
//! measure of the band where `|sin| >= 1/2`, as if the phase were uniform:
//! position independence in the ergodic sense. Small composite N can sit
//! above that level (N = 10 here), so the fraction is not monotone link by
//! link; the quantum-to-semiclassical contrast is between the endpoints.
//!
//! ```text
//! cargo run --release --example semiclassical_filling
//! ```

use cqca::algebra::paper_rule;
use cqca::analysis::cone_fill_fraction;
use cqca::dynamics::{HeatMap, Insertion};
use cqca::output::ascii_map;

fn main() -> Result<(), cqca::Error> {
    println!("cone fill fraction at threshold 1, T = 200:");
    println!("{:>8} {:>12}", "N", "fill");
    for n in [2u64, 4, 10, 100, 1000, 10_000] {
        let rule = paper_rule(n)?;
        let map = HeatMap::compute(&rule, Insertion::Q, Insertion::Q, 200, 200)?;
        println!("{:>8} {:>12.4}", n, cone_fill_fraction(&map, 1.0));
    }

    let rule = paper_rule(1000)?;
    let map = HeatMap::compute(&rule, Insertion::Q, Insertion::Q, 36, 36)?;
    println!("\nN = 1000 map (t downward; note the delayed, filled cone):\n");
    print!("{}", ascii_map(&map, 80));
    Ok(())
}
