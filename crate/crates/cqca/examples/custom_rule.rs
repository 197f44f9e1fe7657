//! Defining and validating your own update rule.
//!
//! A rule is a 2x2 matrix of Laurent polynomials over Z_N acting on
//! (Q-exponent, P-exponent) pairs. Two properties matter:
//!
//! - reversible: the determinant is a unit monomial (required to construct
//!   a rule at all);
//! - palindromic: entries are symmetric under q -> 1/q (required by the
//!   squared-commutator machinery, which leans on reflection symmetry).
//!
//! This example builds a second palindromic rule from the JSON rule-file
//! format, inspects its validation report, and compares its center-column
//! phase sequence with the built-in rule's Whitney numbers: different
//! rules give different integer sequences, hence different jump patterns.
//!
//! ```text
//! cargo run --release --example custom_rule
//! ```

use cqca::algebra::{LaurentPoly, RuleFamily, RuleMatrix, RuleValidation};
use cqca::dynamics::{scrambling_time, xi, Insertion};

fn main() -> Result<(), cqca::Error> {
    // (q + 1/q) in place of (q + 1 + 1/q): still nearest-neighbor, still
    // palindromic, determinant 1.
    let json = r#"{
        "N": 101,
        "entries": [
            [[[-1, 1], [1, 1]], [[0, -1]]],
            [[[0, 1]], []]
        ],
        "name": "hollow"
    }"#;
    let family = RuleFamily::from_json(json, "hollow")?;
    let rule = family.instantiate(101)?;
    let report = rule.validate();
    println!("rule {} = {rule}", rule.name());
    println!(
        "reversible = {}, palindromic = {}, det = {}",
        report.reversible, report.palindromic, report.determinant
    );

    // A center-weighted variant: q + 3 + 1/q on the diagonal.
    let weighted = RuleFamily::from_json(
        r#"{
            "N": 101,
            "entries": [
                [[[-1, 1], [0, 3], [1, 1]], [[0, -1]]],
                [[[0, 1]], []]
            ],
            "name": "weighted"
        }"#,
        "weighted",
    )?
    .instantiate(101)?;

    println!("\ncenter-column phase sequence xi(0, t), Q/Q insertions, N = 101:");
    let paper = RuleFamily::Paper.instantiate(101)?;
    for (name, r) in [("built-in", &paper), ("weighted", &weighted), ("hollow", &rule)] {
        print!("  {name:>8}:");
        for t in 1..=8 {
            print!(" {}", xi(r, Insertion::Q, Insertion::Q, 0, t)?);
        }
        println!();
    }

    println!("\nscrambling times at N = 101 (t_max = 64):");
    for (name, r) in [("built-in", &paper), ("weighted", &weighted), ("hollow", &rule)] {
        let outcome = scrambling_time(r, Insertion::Q, Insertion::Q, 64)?;
        println!("  {name}: {outcome:?}");
    }

    // Non-palindromic rules are constructible but the commutator machinery
    // refuses them with a pointed error.
    let n = 7;
    let shift = RuleMatrix::new(
        "shift",
        [
            [LaurentPoly::monomial(1, 1, n)?, LaurentPoly::zero(n)?],
            [LaurentPoly::zero(n)?, LaurentPoly::constant(1, n)?],
        ],
    )?;
    println!(
        "\nshift rule: palindromic = {}, xi -> {}",
        shift.is_palindromic(),
        xi(&shift, Insertion::Q, Insertion::Q, 0, 1).unwrap_err()
    );

    // And a matrix with a binomial determinant cannot be built at all.
    let bad = RuleValidation::of_entries(&[
        [LaurentPoly::from_pairs(4, [(0, 1), (1, 1)])?, LaurentPoly::zero(4)?],
        [LaurentPoly::zero(4)?, LaurentPoly::constant(1, 4)?],
    ])?;
    println!(
        "binomial-det candidate: reversible = {}, det = {}",
        bad.reversible, bad.determinant
    );
    Ok(())
}
