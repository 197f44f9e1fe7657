//! Acceptance suite: one test per release criterion, each printing a
//! PASS line with the measured numbers (visible with `--nocapture`).
//!
//! Scope and tolerances are pinned in the assertions below: integer-exact
//! where stated, otherwise the quoted numeric windows. The extended scar
//! sweep is known-red; see its doc comment and the README.

use std::collections::BTreeMap;
use std::path::Path;
use std::process::Command;

use num_bigint::BigInt;
use num_integer::gcd;

use cqca::algebra::{paper_rule, RuleFamily};
use cqca::analysis::{box_count, cone_fill_fraction, primal_scar_check};
use cqca::combinatorics::{is_prime, whitney_hypergeometric, Fence};
use cqca::dynamics::{
    fit_butterfly_velocity, scan_scrambling_times, xi, HeatMap, Insertion, ScrambleOutcome,
};

/// Inclusive N ranges with their scrambling time and xi witness.
const SCRAMBLING_TABLE: [(u64, u64, u32, u64); 6] = [
    (2, 6, 1, 1),
    (7, 12, 2, 2),
    (13, 30, 3, 5),
    (31, 66, 4, 11),
    (67, 156, 5, 26),
    (157, 378, 6, 63),
];

#[test]
fn criterion_scrambling_time_table() {
    let ns: Vec<u64> = (2..=378).collect();
    let scan =
        scan_scrambling_times(&RuleFamily::Paper, &ns, Insertion::Q, Insertion::Q, 64).unwrap();
    for row in &scan.rows {
        let (_, _, t_want, xi_want) = *SCRAMBLING_TABLE
            .iter()
            .find(|(lo, hi, _, _)| (*lo..=*hi).contains(&row.n))
            .expect("every N in [2, 378] belongs to a table row");
        assert_eq!(
            row.outcome,
            ScrambleOutcome::Found { t_star: t_want, xi_witness: xi_want },
            "N = {}",
            row.n
        );
    }
    assert_eq!(scan.jump_boundaries(), vec![7, 13, 31, 67, 157]);
    println!(
        "PASS scrambling-time-table: 377 rows exact, jumps at {:?}",
        scan.jump_boundaries()
    );
}

#[test]
fn criterion_whitney_triple_agreement() {
    // Prime check modulus above W_24 = 14545 so no wraparound through t = 12.
    let w24 = u64::try_from(whitney_hypergeometric(12).unwrap()).unwrap();
    assert_eq!(w24, 14545);
    let mut n_check = w24 + 1;
    while !is_prime(n_check) {
        n_check += 1;
    }

    let rule = paper_rule(n_check).unwrap();
    for t in 1..=12u32 {
        let series = whitney_hypergeometric(t).unwrap();
        let ideals = Fence::new(2 * t as usize).count_ideals(t as usize).unwrap();
        let sim = xi(&rule, Insertion::Q, Insertion::Q, 0, t).unwrap();
        assert_eq!(series, BigInt::from(ideals), "series vs ideals at t = {t}");
        assert_eq!(series, BigInt::from(sim), "series vs simulator at t = {t}");
    }
    println!("PASS whitney-triple-agreement: t in [1, 12] at N_check = {n_check}");
}

#[test]
fn criterion_rule_action_unit_checks() {
    for n in [2u64, 3, 5, 10] {
        let rule = paper_rule(n).unwrap();
        let q0 = cqca::algebra::OperatorString::single_site(0, 1, 0, n).unwrap();
        let p0 = cqca::algebra::OperatorString::single_site(0, 0, 1, n).unwrap();

        let q1 = rule.apply(&q0).unwrap();
        assert_eq!(q1.exponents_at(-1), (1, 0), "N = {n}");
        assert_eq!(q1.exponents_at(0), (1, 1), "N = {n}");
        assert_eq!(q1.exponents_at(1), (1, 0), "N = {n}");
        assert_eq!(q1.support(), Some((-1, 1)), "N = {n}");

        let p1 = rule.apply(&p0).unwrap();
        assert_eq!(p1.exponents_at(0), (n - 1, 0), "N = {n}");
        assert_eq!(p1.support(), Some((0, 0)), "N = {n}");
    }
    println!("PASS rule-action-unit-checks: N in {{2, 3, 5, 10}} exact");
}

#[test]
fn criterion_n2_heat_maps() {
    let rule = paper_rule(2).unwrap();
    let pairs = [Insertion::Q, Insertion::P, Insertion::QP];
    for w in pairs {
        for v in pairs {
            let map = HeatMap::compute(&rule, w, v, 100, 100).unwrap();
            for t in 0..=100u32 {
                for alpha in map.alphas() {
                    let c = map.c_value(t, alpha);
                    assert!(c == 0.0 || c == 4.0, "W={w} V={v} t={t} a={alpha} c={c}");
                    assert_eq!(
                        map.xi_value(t, alpha),
                        map.xi_value(t, -alpha),
                        "reflection W={w} V={v} t={t} a={alpha}"
                    );
                    if alpha.unsigned_abs() as u32 > t {
                        assert_eq!(c, 0.0, "cone W={w} V={v} t={t} a={alpha}");
                    }
                }
            }
        }
    }
    println!("PASS n2-heat-maps: nine insertion pairs, cells in {{0, 4}}, symmetric, cone-bounded");
}

#[test]
fn criterion_fractal_dimension() {
    let generator = |t: u32| {
        let rule = paper_rule(2)?;
        HeatMap::compute(&rule, Insertion::Q, Insertion::Q, t, t)
    };
    let series = box_count(generator, &[64, 128, 256, 512, 1024], 1.0).unwrap();
    let target = ((3.0 + 17.0f64.sqrt()) / 2.0).log2();
    assert!(
        (series.dimension - target).abs() <= 0.05,
        "D = {} vs target {target}",
        series.dimension
    );
    println!(
        "PASS fractal-dimension: D = {:.4}, target {:.4} +/- 0.05",
        series.dimension, target
    );
}

#[test]
fn criterion_primal_scar_headline() {
    let cmp = primal_scar_check(&RuleFamily::Paper, 10, 5, 2, 1, Insertion::Q, 100, 100).unwrap();
    assert!(cmp.exact_match, "N = 10 Q^5 grid must equal the N = 2 Q grid");
    assert_eq!(cmp.max_cell_deviation, 0.0);
    println!("PASS primal-scar-headline: N = 10 = 5*2, exact over L = T = 100");
}

/// Known red. Value-level grid equality between the composite run
/// (insertions scaled by kappa at N = kappa * p^ell) and the prime-power run
/// holds precisely when kappa = +/-1 mod p^ell: the composite cells are
/// `4 sin^2(pi * kappa * k / p^ell)` against the base `4 sin^2(pi * k / p^ell)`,
/// i.e. the same pattern with its nonzero gradations permuted by the
/// multiplier kappa. Every pair with p^ell in {2, 3, 4} is value-exact (the
/// headline case among them); pairs like (kappa, p^ell) = (2, 5) or (3, 8)
/// are recolorings with identical zero sets, so the blanket assertion below
/// fails for them. Kept as stated deliberately; see README and the sweep
/// output for the per-pair table.
#[test]
fn criterion_primal_scar_extended() {
    let mut failures = Vec::new();
    let mut pairs = 0;
    for kappa in 1u64..=15 {
        for p in [2u64, 3, 5, 7, 11, 13] {
            for ell in 1u32..=4 {
                let Some(pp) = p.checked_pow(ell) else { continue };
                let n = kappa * pp;
                if n > 30 || pp > 30 || gcd(kappa, p) != 1 {
                    continue;
                }
                pairs += 1;
                for w in [Insertion::Q, Insertion::P, Insertion::QP] {
                    let cmp =
                        primal_scar_check(&RuleFamily::Paper, n, kappa, p, ell, w, 64, 64)
                            .unwrap();
                    if !cmp.exact_match {
                        failures.push(format!(
                            "kappa={kappa} p^ell={pp} W={w}: max dev {:.4} (kappa = {} mod {pp})",
                            cmp.max_cell_deviation,
                            kappa % pp
                        ));
                    }
                }
            }
        }
    }
    for line in &failures {
        println!("FAIL primal-scar-extended: {line}");
    }
    assert!(
        failures.is_empty(),
        "exact match fails for {} of {pairs} (kappa, p^ell) pairs; value-exact scars \
         require kappa = +/-1 mod p^ell, the rest are recolorings:\n{}",
        failures.len(),
        failures.join("\n")
    );
    println!("PASS primal-scar-extended: {pairs} pairs exact");
}

#[test]
fn criterion_semiclassical_filling() {
    let mut fills = BTreeMap::new();
    for n in [2u64, 4, 10, 1000] {
        let rule = paper_rule(n).unwrap();
        let map = HeatMap::compute(&rule, Insertion::Q, Insertion::Q, 200, 200).unwrap();
        fills.insert(n, cone_fill_fraction(&map, 1.0));
    }
    // The required comparison. The stricter monotone chain over {2, 4, 10,
    // 1000} was checked by simulation before this assertion was frozen and
    // does NOT hold (fill(10) = 0.732 exceeds fill(1000) = 0.659), so only
    // the endpoint comparison is asserted, per the gate.
    assert!(
        fills[&1000] > fills[&2],
        "fill(1000) = {} must exceed fill(2) = {}",
        fills[&1000],
        fills[&2]
    );
    println!(
        "PASS semiclassical-filling: fill(2) = {:.4} < fill(1000) = {:.4} (fill(4) = {:.4}, fill(10) = {:.4})",
        fills[&2], fills[&1000], fills[&4], fills[&10]
    );
}

#[test]
fn criterion_butterfly_velocity() {
    for (n, l, t) in [(2u64, 100u32, 100u32), (1000, 200, 200)] {
        let rule = paper_rule(n).unwrap();
        let map = HeatMap::compute(&rule, Insertion::Q, Insertion::Q, l, t).unwrap();
        let fit = fit_butterfly_velocity(&map, 1.0).unwrap();
        assert!(
            (fit.v_b - 1.0).abs() <= 0.05,
            "v_B = {} at N = {n}, T = {t}",
            fit.v_b
        );
        println!("PASS butterfly-velocity: N = {n}, T = {t}, v_B = {:.4} in 1.0 +/- 0.05", fit.v_b);
    }
}

fn run_cli(dir: &Path, args: &[&str]) {
    let status = Command::new(env!("CARGO_BIN_EXE_cqca"))
        .args(args)
        .current_dir(dir)
        .status()
        .expect("binary runs");
    assert!(status.success(), "cqca {args:?} failed");
}

fn dir_bytes(dir: &Path) -> BTreeMap<String, Vec<u8>> {
    let mut out = BTreeMap::new();
    for entry in std::fs::read_dir(dir).unwrap() {
        let entry = entry.unwrap();
        out.insert(
            entry.file_name().to_string_lossy().into_owned(),
            std::fs::read(entry.path()).unwrap(),
        );
    }
    out
}

#[test]
fn criterion_cli_determinism() {
    let cases: &[&[&str]] = &[
        &["heatmap", "--N", "2", "--W", "Q", "--V", "Q", "--L", "40", "--T", "40"],
        &["heatmap", "--N", "7", "--W", "QP", "--V", "P", "--L", "30", "--T", "30"],
        &["scan", "--N", "2..60"],
        &["whitney", "--t-max", "8"],
        &["fractal", "--N", "2", "--T", "16,32,64,128"],
        &["scar", "--N", "10", "--kappa", "5", "--prime", "2", "--ell", "1", "--L", "30", "--T", "30"],
    ];
    for args in cases {
        let tmp = tempfile::tempdir().unwrap();
        let (a, b) = (tmp.path().join("a"), tmp.path().join("b"));
        for out in ["a", "b"] {
            let mut full = args.to_vec();
            full.push("--out-dir");
            full.push(out);
            run_cli(tmp.path(), &full);
        }
        let (fa, fb) = (dir_bytes(&a), dir_bytes(&b));
        assert_eq!(
            fa.keys().collect::<Vec<_>>(),
            fb.keys().collect::<Vec<_>>(),
            "file sets differ for {args:?}"
        );
        for (name, bytes) in &fa {
            assert_eq!(bytes, &fb[name], "{name} differs between runs of {args:?}");
        }
    }
    println!("PASS cli-determinism: byte-identical outputs across repeated runs of all subcommands");
}
