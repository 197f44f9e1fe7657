//! Deterministic file writers: CSV grids, plain PGM images, JSON summaries.
//!
//! Identical inputs must produce byte-identical files, so every number is
//! printed through a fixed format: cell values with 9 significant digits,
//! integers as plain decimals, UTF-8 with LF line endings throughout.

use std::io::Write;

use serde::Serialize;

use crate::analysis::{BoxCountSeries, ScarComparison};
use crate::combinatorics::WhitneySequence;
use crate::dynamics::{ConeFit, HeatMap, ScanResult, ScrambleOutcome};
use crate::error::Result;

/// Nine significant digits, scientific notation.
fn sig9(v: f64) -> String {
    format!("{v:.8e}")
}

/// Writes the squared-commutator grid: one row per time step `t = 0..=T`,
/// columns `alpha = -L..=L` ascending.
pub fn write_heatmap_csv<W: Write>(map: &HeatMap, out: &mut W) -> Result<()> {
    for t in 0..=map.horizon() {
        let row = map.c_row(t);
        let mut line = String::with_capacity(row.len() * 16);
        for (i, &c) in row.iter().enumerate() {
            if i > 0 {
                line.push(',');
            }
            line.push_str(&sig9(c));
        }
        writeln!(out, "{line}")?;
    }
    Ok(())
}

/// Parses a grid written by [`write_heatmap_csv`].
pub fn read_csv_grid(text: &str) -> Result<Vec<Vec<f64>>> {
    let mut rows = Vec::new();
    for line in text.lines() {
        if line.is_empty() {
            continue;
        }
        let row: std::result::Result<Vec<f64>, _> =
            line.split(',').map(str::parse::<f64>).collect();
        rows.push(row.map_err(|e| crate::error::Error::Config(format!("bad csv cell: {e}")))?);
    }
    Ok(rows)
}

/// Writes the map as a plain (P2) 8-bit PGM, C linearly mapped from `[0, 4]`
/// to `[0, 255]`, row `t = 0` at the top.
pub fn write_heatmap_pgm<W: Write>(map: &HeatMap, out: &mut W) -> Result<()> {
    let width = 2 * map.half_width() as usize + 1;
    let height = map.horizon() as usize + 1;
    writeln!(out, "P2")?;
    writeln!(out, "{width} {height}")?;
    writeln!(out, "255")?;
    for t in 0..=map.horizon() {
        let mut line = String::with_capacity(4 * width);
        for (i, &c) in map.c_row(t).iter().enumerate() {
            if i > 0 {
                line.push(' ');
            }
            let pixel = (c * 255.0 / 4.0).round() as u8;
            line.push_str(&pixel.to_string());
        }
        writeln!(out, "{line}")?;
    }
    Ok(())
}

/// The `summary.json` payload for a heat-map run.
#[derive(Serialize)]
pub struct HeatMapSummary {
    pub n: u64,
    pub rule: String,
    pub w: String,
    pub v: String,
    pub half_width: u32,
    pub horizon: u32,
    pub threshold: f64,
    pub t_star: Option<u32>,
    pub xi_witness: Option<u64>,
    pub v_b: Option<f64>,
    pub fill_fraction: f64,
    pub window_warning: bool,
}

pub fn write_json<W: Write, T: Serialize>(value: &T, out: &mut W) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)
        .map_err(|e| crate::error::Error::Config(format!("json write failed: {e}")))?;
    writeln!(out)?;
    Ok(())
}

/// Writes `scan.csv`: `N,t_star,xi_witness`, with `NA` for rows where no
/// time within the horizon reached the threshold.
pub fn write_scan_csv<W: Write>(scan: &ScanResult, out: &mut W) -> Result<()> {
    writeln!(out, "N,t_star,xi_witness")?;
    for row in &scan.rows {
        match row.outcome {
            ScrambleOutcome::Found { t_star, xi_witness } => {
                writeln!(out, "{},{},{}", row.n, t_star, xi_witness)?;
            }
            ScrambleOutcome::NotFound { .. } => {
                writeln!(out, "{},NA,NA", row.n)?;
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
pub struct JumpsFile {
    pub rule: String,
    pub w: String,
    pub v: String,
    pub t_max: u32,
    /// N values at which the scrambling time increments.
    pub jumps: Vec<u64>,
}

/// Writes `whitney.csv`: `t,W_2t,oracle_checked`.
pub fn write_whitney_csv<W: Write>(seq: &WhitneySequence, out: &mut W) -> Result<()> {
    writeln!(out, "t,W_2t,oracle_checked")?;
    for entry in &seq.values {
        writeln!(out, "{},{},{}", entry.t, entry.value, entry.oracle_checked)?;
    }
    Ok(())
}

/// Writes `boxcount.csv`: `T,sum_f,log_T,log_sum_f`.
pub fn write_boxcount_csv<W: Write>(series: &BoxCountSeries, out: &mut W) -> Result<()> {
    writeln!(out, "T,sum_f,log_T,log_sum_f")?;
    for p in &series.points {
        writeln!(out, "{},{},{},{}", p.horizon, p.sum_f, sig9(p.log_t), sig9(p.log_sum_f))?;
    }
    Ok(())
}

#[derive(Serialize)]
pub struct FractalFit {
    pub dimension: f64,
    pub intercept: f64,
    pub threshold: f64,
    /// Horizons actually used in the fit (the upper half of the series).
    pub fit_window: Vec<u32>,
}

impl FractalFit {
    pub fn from_series(series: &BoxCountSeries) -> Self {
        Self {
            dimension: series.dimension,
            intercept: series.intercept,
            threshold: series.threshold,
            fit_window: series.points[series.fit_start..].iter().map(|p| p.horizon).collect(),
        }
    }
}

#[derive(Serialize)]
pub struct ScarFile {
    pub n_composite: u64,
    pub kappa: u64,
    pub p: u64,
    pub ell: u32,
    pub prime_power: u64,
    pub exact_match: bool,
    pub max_cell_deviation: f64,
}

impl From<&ScarComparison> for ScarFile {
    fn from(c: &ScarComparison) -> Self {
        Self {
            n_composite: c.n_composite,
            kappa: c.kappa,
            p: c.p,
            ell: c.ell,
            prime_power: c.prime_power,
            exact_match: c.exact_match,
            max_cell_deviation: c.max_cell_deviation,
        }
    }
}

#[derive(Serialize)]
pub struct ConeFitFile {
    pub v_b: f64,
    pub intercept: f64,
    pub rows_used: usize,
}

impl From<&ConeFit> for ConeFitFile {
    fn from(fit: &ConeFit) -> Self {
        Self { v_b: fit.v_b, intercept: fit.intercept, rows_used: fit.edge.len() - fit.fit_start }
    }
}

/// Renders a heat map as terminal art, one character per cell (`' '` for 0
/// up to `'@'` for 4), row `t = 0` first. Maps wider than `max_cols` are
/// column-subsampled to fit.
pub fn ascii_map(map: &HeatMap, max_cols: usize) -> String {
    const RAMP: [char; 10] = [' ', '.', ':', '-', '=', '+', '*', '#', '%', '@'];
    let width = 2 * map.half_width() as usize + 1;
    let step = width.div_ceil(max_cols.max(1));
    let mut out = String::new();
    for t in 0..=map.horizon() {
        let row = map.c_row(t);
        for (i, &c) in row.iter().enumerate() {
            if i % step == 0 {
                let idx = ((c / 4.0) * (RAMP.len() - 1) as f64).round() as usize;
                out.push(RAMP[idx.min(RAMP.len() - 1)]);
            }
        }
        out.push('\n');
    }
    out
}
