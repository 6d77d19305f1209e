//! Subcommand bodies. Each returns a [`Report`]: a table for CSV and a
//! document for JSON.

use std::f64::consts::{FRAC_PI_2, LN_2, PI};

use beamsplit_core::entanglement::von_neumann_entropy;
use beamsplit_core::fock::fock_output;
use beamsplit_core::gaussian::{CaseStudy, GaussianState};
use beamsplit_core::separability::{
    duan_separability, to_standard_form, Separability, SeparabilityVerdict,
};
use beamsplit_core::squeezed::{
    canonicalize_phases, effective_two_mode_squeezing, squeezed_output_entropy, SqueezeParams,
};
use beamsplit_core::{BeamSplitter, Error as CoreError};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::args::{self, Cli, Command, Format, Grid, Preset, SweepArgs, SweepVariable};
use crate::error::CliError;
use crate::table::{Cell, Column, Table};

/// Largest total photon number accepted by `fock`.
pub const MAX_PHOTONS: usize = 40;
/// `|R − 1/2|` below which a splitter counts as balanced.
const BALANCED_TOL: f64 = 1e-12;

#[derive(Debug, Clone)]
pub struct Report {
    pub default_format: Format,
    pub table: Table,
    pub document: Value,
}

impl Report {
    fn csv_first(table: Table) -> Self {
        let document = table.to_json();
        Self {
            default_format: Format::Csv,
            table,
            document,
        }
    }

    fn json_first(table: Table, document: Value) -> Self {
        Self {
            default_format: Format::Json,
            table,
            document,
        }
    }
}

/// Entropy in the requested unit.
#[derive(Debug, Clone, Copy)]
pub struct EntropyUnit {
    pub bits: bool,
}

impl EntropyUnit {
    pub fn column(&self) -> Column {
        if self.bits {
            Column::new("entropy_bits", "bits")
        } else {
            Column::new("entropy_nats", "nats")
        }
    }

    pub fn convert(&self, nats: f64) -> f64 {
        if self.bits {
            nats / LN_2
        } else {
            nats
        }
    }
}

#[derive(Debug, Serialize)]
struct Splitter {
    reflectance: f64,
    theta: f64,
    phi: f64,
}

impl From<&BeamSplitter> for Splitter {
    fn from(bs: &BeamSplitter) -> Self {
        Self {
            reflectance: bs.reflectance(),
            theta: bs.theta(),
            phi: bs.phi(),
        }
    }
}

pub fn run(cli: &Cli) -> Result<Report, CliError> {
    let unit = EntropyUnit { bits: cli.bits };
    match &cli.command {
        Command::Fock {
            n1,
            n2,
            reflectance,
            phase,
        } => {
            let bs =
                BeamSplitter::from_reflectance(args::reflectance(*reflectance)?, phase.radians()?);
            fock(*n1, *n2, &bs, unit)
        }
        Command::Figure2 {
            total,
            steps,
            phase,
        } => {
            if *total > MAX_PHOTONS {
                return Err(CliError::usage(format!(
                    "total must be at most {MAX_PHOTONS}"
                )));
            }
            let rows = figure2_rows(*total, &Grid::new(0.0, 1.0, *steps)?, phase.radians()?)?;
            let mut table = Table::new(vec![
                Column::new("k", "photons"),
                Column::new("R", "1"),
                unit.column(),
            ]);
            for (k, r, nats) in rows {
                table.push(vec![
                    Cell::from(k),
                    Cell::from(r),
                    Cell::from(unit.convert(nats)),
                ]);
            }
            Ok(Report::csv_first(table))
        }
        Command::Figure3 {
            s1,
            s2_min,
            s2_max,
            s2_steps,
            steps,
            phase,
        } => {
            let s2 = Grid::new(*s2_min, *s2_max, *s2_steps)?;
            let rows = figure3_rows(
                args::finite("s1", *s1)?,
                &s2,
                &Grid::new(0.0, 1.0, *steps)?,
                phase.radians()?,
            )?;
            let mut table = Table::new(vec![
                Column::new("s2", "1"),
                Column::new("R", "1"),
                unit.column(),
            ]);
            for (s2, r, nats) in rows {
                table.push(vec![
                    Cell::from(s2),
                    Cell::from(r),
                    Cell::from(unit.convert(nats)),
                ]);
            }
            Ok(Report::csv_first(table))
        }
        Command::Squeezed {
            s1,
            s2,
            varphi1,
            varphi2,
            reflectance,
            phase,
            sweep,
        } => {
            let params = SqueezeParams {
                s1: args::finite("s1", *s1)?,
                s2: args::finite("s2", *s2)?,
                varphi1: args::finite("varphi1", *varphi1)?,
                varphi2: args::finite("varphi2", *varphi2)?,
            };
            let bs =
                BeamSplitter::from_reflectance(args::reflectance(*reflectance)?, phase.radians()?);
            match sweep_grid(
                sweep,
                &[
                    SweepVariable::Reflectance,
                    SweepVariable::S2,
                    SweepVariable::Phi,
                ],
            )? {
                None => squeezed(params, bs, unit),
                Some((var, grid)) => squeezed_sweep(params, bs, var, &grid, unit),
            }
        }
        Command::Gaussian {
            preset,
            nbar,
            s,
            reflectance,
            phase,
            sweep,
        } => {
            let case = GaussianCase {
                preset: *preset,
                nbar: args::nbar(*nbar)?,
                s: args::finite("s", *s)?,
                reflectance: args::reflectance(*reflectance)?,
                phi: phase.radians()?,
            };
            match sweep_grid(
                sweep,
                &[
                    SweepVariable::Nbar,
                    SweepVariable::S,
                    SweepVariable::Reflectance,
                    SweepVariable::Phi,
                ],
            )? {
                None => gaussian(&case),
                Some((var, grid)) => gaussian_sweep(&case, var, &grid),
            }
        }
    }
}

fn sweep_grid(
    sweep: &SweepArgs,
    allowed: &[SweepVariable],
) -> Result<Option<(SweepVariable, Grid)>, CliError> {
    let Some(var) = sweep.sweep else {
        return Ok(None);
    };
    if !allowed.contains(&var) {
        return Err(CliError::usage(format!(
            "this subcommand cannot sweep {}",
            var.name()
        )));
    }
    let (lo, hi) = (sweep.from.unwrap_or(f64::NAN), sweep.to.unwrap_or(f64::NAN));
    let grid = Grid::new(lo, hi, sweep.sweep_steps)?;
    if var == SweepVariable::Reflectance && (lo < 0.0 || hi > 1.0) {
        return Err(CliError::usage("reflectance must lie in [0, 1]"));
    }
    if var == SweepVariable::Nbar && lo < 0.0 {
        return Err(CliError::usage("nbar must be non-negative"));
    }
    Ok(Some((var, grid)))
}

#[derive(Debug, Serialize)]
struct Amplitude {
    n1: usize,
    n2: usize,
    re: f64,
    im: f64,
    probability: f64,
}

#[derive(Debug, Serialize)]
struct FockReport {
    n1: usize,
    n2: usize,
    splitter: Splitter,
    amplitudes: Vec<Amplitude>,
    entropy_nats: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    entropy_bits: Option<f64>,
}

fn fock(n1: usize, n2: usize, bs: &BeamSplitter, unit: EntropyUnit) -> Result<Report, CliError> {
    let total = n1 + n2;
    if total > MAX_PHOTONS {
        return Err(CliError::usage(format!(
            "n1 + n2 must be at most {MAX_PHOTONS}"
        )));
    }
    let state = fock_output(n1, n2, bs, total)?;
    let nats = von_neumann_entropy(&state)?.nats;
    let amplitudes: Vec<Amplitude> = state
        .iter()
        .filter(|&(a, b, _)| a + b == total)
        .map(|(a, b, z)| Amplitude {
            n1: a,
            n2: b,
            re: z.re,
            im: z.im,
            probability: z.norm_sqr(),
        })
        .collect();
    let mut table = Table::new(vec![
        Column::new("out_n1", "photons"),
        Column::new("out_n2", "photons"),
        Column::new("re", "1"),
        Column::new("im", "1"),
        Column::new("probability", "1"),
    ]);
    for a in &amplitudes {
        table.push(vec![
            Cell::from(a.n1),
            Cell::from(a.n2),
            Cell::from(a.re),
            Cell::from(a.im),
            Cell::from(a.probability),
        ]);
    }
    let report = FockReport {
        n1,
        n2,
        splitter: bs.into(),
        amplitudes,
        entropy_nats: nats,
        entropy_bits: unit.bits.then(|| nats / LN_2),
    };
    Ok(Report::json_first(table, serde_json::to_value(report)?))
}

/// `(k, R, entropy in nats)` for inputs `|k, N−k⟩`, `k = 0..=N/2`, over the
/// reflectance grid; ordered by `k` then `R`.
pub fn figure2_rows(
    total: usize,
    grid: &Grid,
    phi: f64,
) -> Result<Vec<(usize, f64, f64)>, CoreError> {
    let points: Vec<(usize, f64)> = (0..=total / 2)
        .flat_map(|k| grid.points().into_iter().map(move |r| (k, r)))
        .collect();
    points
        .into_par_iter()
        .map(|(k, r)| {
            let state = fock_output(k, total - k, &BeamSplitter::from_reflectance(r, phi), total)?;
            Ok((k, r, von_neumann_entropy(&state)?.nats))
        })
        .collect()
}

/// `(s2, R, entropy in nats)` for squeezed-vacuum inputs `(s1, s2)`,
/// ordered by `s2` then `R`.
pub fn figure3_rows(
    s1: f64,
    s2: &Grid,
    reflectance: &Grid,
    phi: f64,
) -> Result<Vec<(f64, f64, f64)>, CoreError> {
    let points: Vec<(f64, f64)> = s2
        .points()
        .into_iter()
        .flat_map(|s| reflectance.points().into_iter().map(move |r| (s, r)))
        .collect();
    points
        .into_par_iter()
        .map(|(s2, r)| {
            let e = squeezed_output_entropy(s1, s2, &BeamSplitter::from_reflectance(r, phi))?;
            Ok((s2, r, e.nats))
        })
        .collect()
}

#[derive(Debug, Serialize)]
struct Squeezing {
    s1: f64,
    s2: f64,
    varphi1: f64,
    varphi2: f64,
}

#[derive(Debug, Serialize)]
struct CanonicalReport {
    s1: f64,
    s2: f64,
    phi: f64,
    local_rotations: [f64; 2],
}

#[derive(Debug, Serialize)]
struct ComplexReport {
    re: f64,
    im: f64,
    abs: f64,
}

#[derive(Debug, Serialize)]
struct SqueezedReport {
    input: Squeezing,
    splitter: Splitter,
    canonical: CanonicalReport,
    /// Only for balanced splitters with φ a multiple of π/2.
    effective_two_mode_squeezing: Option<ComplexReport>,
    entropy_nats: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    entropy_bits: Option<f64>,
}

/// `φ` reduced to `[0, 2π)` when it sits on the quarter grid.
fn quarter_phase(phi: f64) -> Option<f64> {
    let q = phi / FRAC_PI_2;
    ((q - q.round()).abs() < 1e-12).then(|| (q.round() as i64).rem_euclid(4) as f64 * FRAC_PI_2)
}

fn squeezed(
    params: SqueezeParams,
    bs: BeamSplitter,
    unit: EntropyUnit,
) -> Result<Report, CliError> {
    let c = canonicalize_phases(params, bs);
    let nats = squeezed_output_entropy(c.params.s1, c.params.s2, &c.bs)?.nats;
    let effective = match quarter_phase(c.bs.phi()) {
        Some(phi) if (c.bs.reflectance() - 0.5).abs() < BALANCED_TOL => {
            let z = effective_two_mode_squeezing(c.params.s1, c.params.s2, phi)?;
            Some(ComplexReport {
                re: z.re,
                im: z.im,
                abs: z.norm(),
            })
        }
        _ => None,
    };
    let mut table = Table::new(vec![
        Column::new("s1", "1"),
        Column::new("s2", "1"),
        Column::new("phi", "rad"),
        unit.column(),
    ]);
    table.push(vec![
        Cell::from(c.params.s1),
        Cell::from(c.params.s2),
        Cell::from(c.bs.phi()),
        Cell::from(unit.convert(nats)),
    ]);
    let report = SqueezedReport {
        input: Squeezing {
            s1: params.s1,
            s2: params.s2,
            varphi1: params.varphi1,
            varphi2: params.varphi2,
        },
        splitter: (&bs).into(),
        canonical: CanonicalReport {
            s1: c.params.s1,
            s2: c.params.s2,
            phi: c.bs.phi(),
            local_rotations: [c.local_rotations.0, c.local_rotations.1],
        },
        effective_two_mode_squeezing: effective,
        entropy_nats: nats,
        entropy_bits: unit.bits.then(|| nats / LN_2),
    };
    Ok(Report::json_first(table, serde_json::to_value(report)?))
}

fn squeezed_sweep(
    params: SqueezeParams,
    bs: BeamSplitter,
    var: SweepVariable,
    grid: &Grid,
    unit: EntropyUnit,
) -> Result<Report, CliError> {
    let rows: Result<Vec<(f64, f64)>, CoreError> = grid
        .points()
        .into_par_iter()
        .map(|x| {
            let (mut p, mut b) = (params, bs);
            let shown = match var {
                SweepVariable::Reflectance => {
                    b = BeamSplitter::from_reflectance(x, bs.phi());
                    x
                }
                SweepVariable::S2 => {
                    p.s2 = x;
                    x
                }
                _ => {
                    b = bs.with_phi(x * PI);
                    x * PI
                }
            };
            let c = canonicalize_phases(p, b);
            Ok((
                shown,
                squeezed_output_entropy(c.params.s1, c.params.s2, &c.bs)?.nats,
            ))
        })
        .collect();
    let mut table = Table::new(vec![Column::new(var.name(), var.unit()), unit.column()]);
    for (x, nats) in rows? {
        table.push(vec![Cell::from(x), Cell::from(unit.convert(nats))]);
    }
    let document = table.to_json();
    Ok(Report::json_first(table, document))
}

#[derive(Debug, Clone, Copy)]
struct GaussianCase {
    preset: Preset,
    nbar: f64,
    s: f64,
    reflectance: f64,
    phi: f64,
}

impl GaussianCase {
    fn study(&self) -> CaseStudy {
        match self.preset {
            Preset::SqThermalPair => CaseStudy::SqueezedThermalPair,
            Preset::SqThermalVacuum => CaseStudy::SqueezedThermalVacuum,
            Preset::SqVacuumThermal => CaseStudy::SqueezedVacuumThermal,
        }
    }

    fn splitter(&self) -> BeamSplitter {
        BeamSplitter::from_reflectance(self.reflectance, self.phi)
    }

    fn output(&self) -> Result<GaussianState, CoreError> {
        self.study().output(self.nbar, self.s, &self.splitter())
    }

    fn with(&self, var: SweepVariable, x: f64) -> Self {
        let mut c = *self;
        match var {
            SweepVariable::Nbar => c.nbar = x,
            SweepVariable::S | SweepVariable::S2 => c.s = x,
            SweepVariable::Reflectance => c.reflectance = x,
            SweepVariable::Phi => c.phi = x * PI,
        }
        c
    }
}

fn decision_name(d: Separability) -> &'static str {
    match d {
        Separability::Separable => "separable",
        Separability::Entangled => "entangled",
    }
}

#[derive(Debug, Serialize)]
struct VerdictReport {
    decision: &'static str,
    duan_lhs: f64,
    duan_rhs: f64,
    ppt_min_symplectic: f64,
}

impl From<&SeparabilityVerdict> for VerdictReport {
    fn from(v: &SeparabilityVerdict) -> Self {
        Self {
            decision: decision_name(v.decision),
            duan_lhs: v.duan_lhs,
            duan_rhs: v.duan_rhs,
            ppt_min_symplectic: v.ppt_min_symplectic,
        }
    }
}

#[derive(Debug, Serialize)]
struct FormReport {
    b1: f64,
    b2: f64,
    d1: f64,
    d2: f64,
    c1: f64,
    c2: f64,
}

#[derive(Debug, Serialize)]
struct GaussianReport {
    preset: &'static str,
    nbar: f64,
    s: f64,
    splitter: Splitter,
    /// Row-major output matrix in the (ζ_i, ζ_r, η_i, η_r) ordering.
    covariance: Vec<f64>,
    /// Absent for a product of vacuum-like marginals.
    standard_form: Option<FormReport>,
    verdict: VerdictReport,
}

fn preset_name(p: Preset) -> &'static str {
    match p {
        Preset::SqThermalPair => "sq-thermal-pair",
        Preset::SqThermalVacuum => "sq-thermal+vacuum",
        Preset::SqVacuumThermal => "sq-vacuum+thermal",
    }
}

fn verdict_columns() -> Vec<Column> {
    vec![
        Column::new("decision", "-"),
        Column::new("duan_lhs", "1"),
        Column::new("duan_rhs", "1"),
        Column::new("ppt_min_symplectic", "1"),
    ]
}

fn verdict_cells(v: &SeparabilityVerdict) -> Vec<Cell> {
    vec![
        Cell::from(decision_name(v.decision)),
        Cell::from(v.duan_lhs),
        Cell::from(v.duan_rhs),
        Cell::from(v.ppt_min_symplectic),
    ]
}

fn gaussian(case: &GaussianCase) -> Result<Report, CliError> {
    let out = case.output()?;
    let verdict = duan_separability(&out)?;
    let standard_form = match to_standard_form(&out) {
        Ok((f, _)) => Some(FormReport {
            b1: f.b1,
            b2: f.b2,
            d1: f.d1,
            d2: f.d2,
            c1: f.c1,
            c2: f.c2,
        }),
        Err(CoreError::Degenerate) => None,
        Err(e) => return Err(e.into()),
    };
    let mut table = Table::new(verdict_columns());
    table.push(verdict_cells(&verdict));
    let m = out.two_mode_matrix()?;
    let report = GaussianReport {
        preset: preset_name(case.preset),
        nbar: case.nbar,
        s: case.s,
        splitter: (&case.splitter()).into(),
        covariance: (0..4)
            .flat_map(|i| (0..4).map(move |j| m[(i, j)]))
            .collect(),
        standard_form,
        verdict: (&verdict).into(),
    };
    Ok(Report::json_first(table, serde_json::to_value(report)?))
}

fn gaussian_sweep(
    case: &GaussianCase,
    var: SweepVariable,
    grid: &Grid,
) -> Result<Report, CliError> {
    let rows: Result<Vec<(f64, SeparabilityVerdict)>, CoreError> = grid
        .points()
        .into_par_iter()
        .map(|x| {
            let c = case.with(var, x);
            let shown = if var == SweepVariable::Phi { c.phi } else { x };
            Ok((shown, duan_separability(&c.output()?)?))
        })
        .collect();
    let mut columns = vec![Column::new(var.name(), var.unit())];
    columns.extend(verdict_columns());
    let mut table = Table::new(columns);
    for (x, v) in rows? {
        let mut row = vec![Cell::from(x)];
        row.extend(verdict_cells(&v));
        table.push(row);
    }
    let document = table.to_json();
    Ok(Report::json_first(table, document))
}
