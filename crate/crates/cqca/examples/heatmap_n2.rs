//! The nine N = 2 squared-commutator maps.
//!
//! At N = 2 the squared commutator takes only the values 0 and 4, so each
//! space-time map is a binary pattern: a sharp cone spreading one site per
//! step with a self-similar interior. This example renders the Q/Q map as
//! terminal art and summarizes all nine insertion pairs.
//!
//! ```text
//! cargo run --release --example heatmap_n2
//! ```

use cqca::algebra::paper_rule;
use cqca::analysis::cone_fill_fraction;
use cqca::dynamics::{scrambling_time, HeatMap, Insertion};
use cqca::output::ascii_map;

fn main() -> Result<(), cqca::Error> {
    let rule = paper_rule(2)?;

    let map = HeatMap::compute(&rule, Insertion::Q, Insertion::Q, 36, 36)?;
    println!("N = 2, W = Q, V = Q, t running downward:\n");
    print!("{}", ascii_map(&map, 80));

    println!("\nall nine insertion pairs over L = T = 100:");
    println!("{:>4} {:>4} {:>7} {:>12}", "W", "V", "t*", "cone fill");
    let pairs = [Insertion::Q, Insertion::P, Insertion::QP];
    for w in pairs {
        for v in pairs {
            let map = HeatMap::compute(&rule, w, v, 100, 100)?;
            let t_star = scrambling_time(&rule, w, v, 100)?
                .t_star()
                .map_or("-".to_string(), |t| t.to_string());
            println!(
                "{:>4} {:>4} {:>7} {:>12.4}",
                w.to_string(),
                v.to_string(),
                t_star,
                cone_fill_fraction(&map, 1.0)
            );
        }
    }
    Ok(())
}
