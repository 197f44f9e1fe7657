//! Squared-commutator space-time maps, scrambling times, and cone geometry.
//!
//! Everything here reduces to one integer per space-time cell: with the
//! evolved insertion carrying clock/shift exponents `(A, B)` at offset
//! `alpha` after `t` steps and the static insertion carrying `(C, D)`, the
//! phase exponent is
//!
//! ```text
//! xi(alpha, t) = A*C - B*D  (mod N)
//! ```
//!
//! and the squared commutator is `C_alpha(t) = 4 sin^2(pi * xi / N)`. The
//! `xi` grid is exact; every floating-point value is derived from it through
//! one canonical function, so maps are bit-reproducible.
//!
//! The reduction to a single evolved operator assumes a palindromic rule
//! (reflection symmetry lets the static insertion be translated to the
//! offset under examination); non-palindromic rules are rejected.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::algebra::{OperatorString, RuleFamily, RuleMatrix};
use crate::error::{Error, Result};
use crate::fit::least_squares;

/// A single-site generalized Pauli `Q^i P^j`, given by its exponent pair.
/// The identity `(0, 0)` is rejected: it commutes with everything, so a
/// commutator run with it is vacuous.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Insertion {
    q_exp: u64,
    p_exp: u64,
}

impl Insertion {
    /// The clock generator `Q`.
    pub const Q: Insertion = Insertion { q_exp: 1, p_exp: 0 };
    /// The shift generator `P`.
    pub const P: Insertion = Insertion { q_exp: 0, p_exp: 1 };
    /// The product `QP`.
    pub const QP: Insertion = Insertion { q_exp: 1, p_exp: 1 };

    pub fn new(q_exp: u64, p_exp: u64) -> Result<Self> {
        if q_exp == 0 && p_exp == 0 {
            return Err(Error::IdentityInsertion);
        }
        Ok(Self { q_exp, p_exp })
    }

    pub fn q_exp(&self) -> u64 {
        self.q_exp
    }

    pub fn p_exp(&self) -> u64 {
        self.p_exp
    }

    /// Validates the exponents against a modulus.
    fn checked(&self, n: u64) -> Result<(u64, u64)> {
        if self.q_exp >= n || self.p_exp >= n {
            return Err(Error::InsertionOutOfRange { q: self.q_exp, p: self.p_exp, n });
        }
        Ok((self.q_exp, self.p_exp))
    }

    /// The exponents scaled by `kappa` mod `n`, for subalgebra runs.
    /// Operands are reduced first so the product stays in 64 bits.
    pub fn scaled(&self, kappa: u64, n: u64) -> Result<Self> {
        let k = kappa % n;
        Self::new(self.q_exp % n * k % n, self.p_exp % n * k % n)
    }

    fn as_operator(&self, n: u64) -> Result<OperatorString> {
        let (q, p) = self.checked(n)?;
        OperatorString::single_site(0, q as i64, p as i64, n)
    }
}

impl fmt::Display for Insertion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.q_exp, self.p_exp) {
            (1, 0) => write!(f, "Q"),
            (0, 1) => write!(f, "P"),
            (1, 1) => write!(f, "QP"),
            (q, p) => write!(f, "{q},{p}"),
        }
    }
}

impl FromStr for Insertion {
    type Err = Error;

    /// Accepts `Q`, `P`, `QP`, or an explicit exponent pair `i,j`.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Q" => Ok(Self::Q),
            "P" => Ok(Self::P),
            "QP" => Ok(Self::QP),
            other => {
                let parse = || -> Option<(u64, u64)> {
                    let (a, b) = other.split_once(',')?;
                    Some((a.trim().parse().ok()?, b.trim().parse().ok()?))
                };
                let (q, p) = parse().ok_or_else(|| {
                    Error::Config(format!(
                        "insertion `{other}` is not Q, P, QP, or an exponent pair i,j"
                    ))
                })?;
                Self::new(q, p)
            }
        }
    }
}

fn require_palindromic(rule: &RuleMatrix) -> Result<()> {
    if rule.is_palindromic() {
        Ok(())
    } else {
        Err(Error::NotPalindromic(rule.name().to_string()))
    }
}

/// Reads `xi` for one cell from an already evolved operator.
fn xi_at(op: &OperatorString, v_q: u64, v_p: u64, alpha: i64) -> u64 {
    let n = op.modulus();
    let (a, b) = op.exponents_at(alpha);
    // Products stay below 2^62 because all factors are below 2^31.
    ((a * v_q) % n + n - (b * v_p) % n) % n
}

/// The integer phase exponent `xi(alpha, t)` for evolved insertion `w`
/// against static insertion `v`.
pub fn xi(rule: &RuleMatrix, w: Insertion, v: Insertion, alpha: i64, t: u32) -> Result<u64> {
    require_palindromic(rule)?;
    let n = rule.modulus();
    let (v_q, v_p) = v.checked(n)?;
    let op = rule.evolve(&w.as_operator(n)?, t)?;
    Ok(xi_at(&op, v_q, v_p, alpha))
}

/// `4 sin^2(pi * xi / N)`, the squared commutator for phase exponent `xi`.
/// `xi` is reduced mod N and folded onto `[0, N/2]` first (sin^2 is symmetric
/// about N/2), so periodicity and the `xi <-> N - xi` symmetry hold exactly,
/// not just up to rounding.
pub fn squared_commutator(xi: u64, n: u64) -> f64 {
    let x = xi % n;
    let folded = x.min(n - x) as f64;
    let s = (std::f64::consts::PI * folded / n as f64).sin();
    4.0 * s * s
}

/// Exact integer form of `4 sin^2(pi * xi / N) >= 1`: true iff
/// `xi / N` lies in `[1/6, 5/6]`, the band where `|sin|` is at least 1/2.
pub fn is_scrambled(xi: u64, n: u64) -> bool {
    let x = xi % n;
    6 * x >= n && 6 * x <= 5 * n
}

/// A dense space-time grid of squared-commutator values over the window
/// `alpha in [-L, L]`, `t in [0, T]`, along with the parallel exact `xi`
/// grid and the run metadata.
#[derive(Clone, Debug)]
pub struct HeatMap {
    n: u64,
    rule_name: String,
    w: Insertion,
    v: Insertion,
    half_width: u32,
    horizon: u32,
    xi: Vec<u64>,
    c: Vec<f64>,
    window_warning: bool,
}

impl HeatMap {
    /// Simulates the full map: one rule application per time step, then an
    /// embarrassingly parallel fill of the row's cells. When the window is
    /// narrower than the light cone (`L < radius * T`) the map is still
    /// produced but flagged, since cells outside the window are absent.
    pub fn compute(
        rule: &RuleMatrix,
        w: Insertion,
        v: Insertion,
        half_width: u32,
        horizon: u32,
    ) -> Result<Self> {
        require_palindromic(rule)?;
        let n = rule.modulus();
        let (v_q, v_p) = v.checked(n)?;
        let width = 2 * half_width as usize + 1;
        let rows = horizon as usize + 1;
        let mut xi = vec![0u64; width * rows];
        let mut c = vec![0f64; width * rows];
        let lo = -(half_width as i64);

        let mut op = w.as_operator(n)?;
        for t in 0..=horizon {
            if t > 0 {
                op = rule.apply(&op)?;
            }
            let base = t as usize * width;
            let (xi_row, c_row) = (
                &mut xi[base..base + width],
                &mut c[base..base + width],
            );
            xi_row
                .par_iter_mut()
                .zip(c_row.par_iter_mut())
                .enumerate()
                .for_each(|(i, (xi_cell, c_cell))| {
                    let alpha = lo + i as i64;
                    let x = xi_at(&op, v_q, v_p, alpha);
                    *xi_cell = x;
                    *c_cell = squared_commutator(x, n);
                });
        }

        let window_warning = (half_width as i64) < rule.radius() * horizon as i64;
        Ok(Self {
            n,
            rule_name: rule.name().to_string(),
            w,
            v,
            half_width,
            horizon,
            xi,
            c,
            window_warning,
        })
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    pub fn rule_name(&self) -> &str {
        &self.rule_name
    }

    pub fn evolved_insertion(&self) -> Insertion {
        self.w
    }

    pub fn static_insertion(&self) -> Insertion {
        self.v
    }

    /// Window half-width L: columns run over `alpha in [-L, L]`.
    pub fn half_width(&self) -> u32 {
        self.half_width
    }

    /// Horizon T: rows run over `t in [0, T]`.
    pub fn horizon(&self) -> u32 {
        self.horizon
    }

    /// True when the window could not contain the full light cone.
    pub fn window_warning(&self) -> bool {
        self.window_warning
    }

    fn index(&self, t: u32, alpha: i64) -> usize {
        assert!(t <= self.horizon, "row {t} beyond horizon {}", self.horizon);
        assert!(
            alpha.unsigned_abs() <= self.half_width as u64,
            "offset {alpha} outside window +/-{}",
            self.half_width
        );
        t as usize * (2 * self.half_width as usize + 1)
            + (alpha + self.half_width as i64) as usize
    }

    pub fn xi_value(&self, t: u32, alpha: i64) -> u64 {
        self.xi[self.index(t, alpha)]
    }

    pub fn c_value(&self, t: u32, alpha: i64) -> f64 {
        self.c[self.index(t, alpha)]
    }

    /// One row of squared-commutator values, `alpha` ascending.
    pub fn c_row(&self, t: u32) -> &[f64] {
        let width = 2 * self.half_width as usize + 1;
        let base = t as usize * width;
        &self.c[base..base + width]
    }

    pub fn xi_row(&self, t: u32) -> &[u64] {
        let width = 2 * self.half_width as usize + 1;
        let base = t as usize * width;
        &self.xi[base..base + width]
    }

    /// Column offsets, ascending (`-L..=L`).
    pub fn alphas(&self) -> impl Iterator<Item = i64> + '_ {
        -(self.half_width as i64)..=self.half_width as i64
    }

    /// Number of cells in row `t` with `C >= threshold`.
    pub fn row_count_at_least(&self, t: u32, threshold: f64) -> usize {
        self.c_row(t).iter().filter(|&&c| c >= threshold).count()
    }
}

/// Result of a scrambling-time search at a fixed modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScrambleOutcome {
    Found { t_star: u32, xi_witness: u64 },
    /// No time in `[1, t_max]` reached the threshold; reported explicitly
    /// rather than clamped to the horizon.
    NotFound { t_max: u32 },
}

impl ScrambleOutcome {
    pub fn t_star(&self) -> Option<u32> {
        match self {
            Self::Found { t_star, .. } => Some(*t_star),
            Self::NotFound { .. } => None,
        }
    }

    pub fn xi_witness(&self) -> Option<u64> {
        match self {
            Self::Found { xi_witness, .. } => Some(*xi_witness),
            Self::NotFound { .. } => None,
        }
    }
}

/// The minimal `t in [1, t_max]` with `C_0(t) >= 1`, together with the
/// witnessing `xi(0, t)`.
pub fn scrambling_time(
    rule: &RuleMatrix,
    w: Insertion,
    v: Insertion,
    t_max: u32,
) -> Result<ScrambleOutcome> {
    require_palindromic(rule)?;
    let n = rule.modulus();
    let (v_q, v_p) = v.checked(n)?;
    let mut op = w.as_operator(n)?;
    for t in 1..=t_max {
        op = rule.apply(&op)?;
        let x = xi_at(&op, v_q, v_p, 0);
        if is_scrambled(x, n) {
            return Ok(ScrambleOutcome::Found { t_star: t, xi_witness: x });
        }
    }
    Ok(ScrambleOutcome::NotFound { t_max })
}

/// One row of a [`ScanResult`].
#[derive(Clone, Copy, Debug)]
pub struct ScanRow {
    pub n: u64,
    pub outcome: ScrambleOutcome,
}

/// Scrambling times across a list of local dimensions N for one rule family.
#[derive(Clone, Debug)]
pub struct ScanResult {
    pub rule_name: String,
    pub w: Insertion,
    pub v: Insertion,
    pub t_max: u32,
    pub rows: Vec<ScanRow>,
}

impl ScanResult {
    /// The N values at which `t_star` increases relative to the previous
    /// found row, in scan order.
    pub fn jump_boundaries(&self) -> Vec<u64> {
        let mut jumps = Vec::new();
        let mut prev: Option<u32> = None;
        for row in &self.rows {
            if let ScrambleOutcome::Found { t_star, .. } = row.outcome {
                if let Some(p) = prev {
                    if t_star > p {
                        jumps.push(row.n);
                    }
                }
                prev = Some(t_star);
            }
        }
        jumps
    }
}

/// Runs [`scrambling_time`] for every modulus in `n_list`, instantiating the
/// rule family at each one. Not-found rows are carried through as explicit
/// sentinels.
pub fn scan_scrambling_times(
    family: &RuleFamily,
    n_list: &[u64],
    w: Insertion,
    v: Insertion,
    t_max: u32,
) -> Result<ScanResult> {
    let mut rows = Vec::with_capacity(n_list.len());
    for &n in n_list {
        let rule = family.instantiate(n)?;
        let outcome = scrambling_time(&rule, w, v, t_max)?;
        rows.push(ScanRow { n, outcome });
    }
    Ok(ScanResult { rule_name: family.name().to_string(), w, v, t_max, rows })
}

/// Butterfly-cone edge fit: the rightmost scrambled offset per row and the
/// least-squares line through the late-time portion of those points.
#[derive(Clone, Debug)]
pub struct ConeFit {
    /// `(t, alpha_max)` for every row with at least one qualifying cell.
    pub edge: Vec<(u32, i64)>,
    /// Index into `edge` where the fitted window starts (the late half).
    pub fit_start: usize,
    pub slope: f64,
    pub intercept: f64,
    /// The butterfly velocity: the slope of `alpha_max` against `t`.
    pub v_b: f64,
}

/// Fits the cone edge of a heat map at the given threshold. Rows with no
/// qualifying cell are skipped; the line is fitted over the last half of the
/// remaining points to suppress early-time transients.
pub fn fit_butterfly_velocity(map: &HeatMap, threshold: f64) -> Result<ConeFit> {
    let mut edge = Vec::new();
    for t in 0..=map.horizon() {
        let row = map.c_row(t);
        let alpha_max = map
            .alphas()
            .zip(row.iter())
            .filter(|(_, &c)| c >= threshold)
            .map(|(alpha, _)| alpha)
            .max();
        if let Some(alpha) = alpha_max {
            edge.push((t, alpha));
        }
    }
    if edge.len() < 2 {
        return Err(Error::TooFewConeRows(edge.len()));
    }
    let fit_start = (edge.len() / 2).min(edge.len() - 2);
    let pts: Vec<(f64, f64)> = edge[fit_start..]
        .iter()
        .map(|&(t, a)| (t as f64, a as f64))
        .collect();
    let (slope, intercept) = least_squares(&pts);
    Ok(ConeFit { edge, fit_start, slope, intercept, v_b: slope })
}
