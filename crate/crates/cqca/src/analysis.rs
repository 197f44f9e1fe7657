//! Post-processing of heat maps: box-counting fractal dimension, primal-scar
//! comparisons, and cone-fill statistics.

use num_integer::gcd;

use crate::algebra::RuleFamily;
use crate::combinatorics::is_prime;
use crate::dynamics::{HeatMap, Insertion};
use crate::error::{Error, Result};
use crate::fit::least_squares;

/// One horizon of a box-counting series: `sum_f` is the number of space-time
/// cells with `C >= threshold` up to time `T`.
#[derive(Clone, Copy, Debug)]
pub struct BoxCountPoint {
    pub horizon: u32,
    pub sum_f: u64,
    pub log_t: f64,
    pub log_sum_f: f64,
}

/// Box-counting data and the fitted fractal dimension.
///
/// With box size `1/T`, the covered-cell count is `sum_f`, so the dimension
/// is the slope of `log(sum_f)` against `log T`; the fit uses the upper half
/// of the points, where the scaling has settled.
#[derive(Clone, Debug)]
pub struct BoxCountSeries {
    pub points: Vec<BoxCountPoint>,
    pub threshold: f64,
    /// Index into `points` where the fitted window starts.
    pub fit_start: usize,
    pub dimension: f64,
    pub intercept: f64,
}

/// Runs the box count over the given horizons, building one heat map per
/// horizon through `generator`. Horizons must be positive, strictly
/// increasing, and at least 4; an empty pattern at any horizon is an error
/// since its log is undefined.
pub fn box_count<F>(generator: F, horizons: &[u32], threshold: f64) -> Result<BoxCountSeries>
where
    F: Fn(u32) -> Result<HeatMap>,
{
    if horizons.len() < 4
        || horizons.first() == Some(&0)
        || horizons.windows(2).any(|w| w[0] >= w[1])
    {
        return Err(Error::BadHorizons(horizons.to_vec()));
    }
    let mut points = Vec::with_capacity(horizons.len());
    for &t_max in horizons {
        let map = generator(t_max)?;
        let sum_f: u64 = (0..=t_max.min(map.horizon()))
            .map(|t| map.row_count_at_least(t, threshold) as u64)
            .sum();
        if sum_f == 0 {
            return Err(Error::EmptyPattern(t_max));
        }
        points.push(BoxCountPoint {
            horizon: t_max,
            sum_f,
            log_t: (t_max as f64).ln(),
            log_sum_f: (sum_f as f64).ln(),
        });
    }
    let fit_start = points.len() / 2;
    let pts: Vec<(f64, f64)> =
        points[fit_start..].iter().map(|p| (p.log_t, p.log_sum_f)).collect();
    let (dimension, intercept) = least_squares(&pts);
    Ok(BoxCountSeries { points, threshold, fit_start, dimension, intercept })
}

/// Outcome of a primal-scar comparison between a composite-modulus run and
/// its prime-power shadow.
#[derive(Clone, Debug)]
pub struct ScarComparison {
    pub n_composite: u64,
    pub kappa: u64,
    pub p: u64,
    pub ell: u32,
    pub prime_power: u64,
    /// Largest pointwise difference between the two C grids.
    pub max_cell_deviation: f64,
    /// True when every pair of cells carries the same exact value.
    pub exact_match: bool,
}

/// The canonical form of one cell value: `4 sin^2(pi k / m)` reduced to its
/// lowest-terms argument after folding by the `k <-> m - k` symmetry. Two
/// cells are mathematically equal iff their canonical forms are equal, which
/// sidesteps float rounding differences between code paths.
fn cell_key(xi: u64, n: u64) -> (u64, u64) {
    let x = xi % n;
    let folded = x.min(n - x);
    let g = gcd(folded, n);
    if folded == 0 {
        (0, 1)
    } else {
        (folded / g, n / g)
    }
}

/// Compares the heat map of `kappa`-scaled insertions at composite modulus
/// `N = kappa * p^ell` against the map of the unscaled insertions at modulus
/// `p^ell`. Both insertions (evolved and static) are `w_base`, scaled in the
/// composite run.
///
/// The factorization is validated first, and the rule is checked to preserve
/// the subalgebra of kappa-multiple exponents (it maps scaled generators to
/// operators whose exponents are again kappa-multiples) before any grid is
/// simulated.
#[allow(clippy::too_many_arguments)]
pub fn primal_scar_check(
    family: &RuleFamily,
    n_composite: u64,
    kappa: u64,
    p: u64,
    ell: u32,
    w_base: Insertion,
    half_width: u32,
    horizon: u32,
) -> Result<ScarComparison> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if ell == 0 {
        return Err(Error::BadFactorization { kappa, p, ell, n: n_composite });
    }
    let prime_power = p
        .checked_pow(ell)
        .filter(|pp| kappa.checked_mul(*pp) == Some(n_composite))
        .ok_or(Error::BadFactorization { kappa, p, ell, n: n_composite })?;
    if gcd(kappa, p) != 1 {
        return Err(Error::NotCoprime { kappa, p });
    }

    let composite_rule = family.instantiate(n_composite)?;
    // Subalgebra closure: the images of the scaled generators must have all
    // exponents divisible by kappa.
    for generator in [Insertion::Q, Insertion::P] {
        let scaled = generator.scaled(kappa, n_composite)?;
        let op = composite_rule.apply(&crate::algebra::OperatorString::single_site(
            0,
            scaled.q_exp() as i64,
            scaled.p_exp() as i64,
            n_composite,
        )?)?;
        let closed = op
            .qpart()
            .terms()
            .chain(op.ppart().terms())
            .all(|(_, c)| c % kappa == 0);
        if !closed {
            return Err(Error::SubalgebraNotClosed(composite_rule.name().to_string()));
        }
    }

    let scaled = w_base.scaled(kappa, n_composite)?;
    let composite_map = HeatMap::compute(&composite_rule, scaled, scaled, half_width, horizon)?;
    let base_rule = family.instantiate(prime_power)?;
    let base_map = HeatMap::compute(&base_rule, w_base, w_base, half_width, horizon)?;

    let mut exact_match = true;
    let mut max_cell_deviation = 0.0f64;
    for t in 0..=horizon {
        let (xa, xb) = (composite_map.xi_row(t), base_map.xi_row(t));
        let (ca, cb) = (composite_map.c_row(t), base_map.c_row(t));
        for i in 0..xa.len() {
            if cell_key(xa[i], n_composite) != cell_key(xb[i], prime_power) {
                exact_match = false;
            }
            max_cell_deviation = max_cell_deviation.max((ca[i] - cb[i]).abs());
        }
    }

    Ok(ScarComparison {
        n_composite,
        kappa,
        p,
        ell,
        prime_power,
        max_cell_deviation,
        exact_match,
    })
}

/// Fraction of cells inside the light cone (`|alpha| <= t`, clipped to the
/// window) whose squared commutator meets the threshold.
pub fn cone_fill_fraction(map: &HeatMap, threshold: f64) -> f64 {
    let mut in_cone = 0u64;
    let mut filled = 0u64;
    for t in 0..=map.horizon() {
        let row = map.c_row(t);
        for (alpha, &c) in map.alphas().zip(row.iter()) {
            if alpha.unsigned_abs() <= t as u64 {
                in_cone += 1;
                if c >= threshold {
                    filled += 1;
                }
            }
        }
    }
    if in_cone == 0 {
        0.0
    } else {
        filled as f64 / in_cone as f64
    }
}
