use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use tlt_core::circuit::RECONCILIATION_NOTES;
use tlt_core::majorana::degeneracy_scan;
use tlt_core::projection::table_rows;
use tlt_core::{
    CouplingEngine, CouplingReport, EnergyScales, MajoranaAlgebra, MajoranaConfig, ParitySector, TableRow,
};

use crate::config::{validate_cutoff, validate_table, OutputFormat, RunConfig, SweepRange, SweepVariable};
use crate::error::{CliError, CliResult};
use crate::format::{csv_string, fmt_ghz, fmt_parity, fmt_ratio};

/// Cutoff of the reference run used for the convergence drift diagnostic.
pub const CONVERGENCE_CUTOFF: usize = 20;

pub const TABLE_HEADER: [&str; 9] =
    ["config", "parity", "pauli_q", "pauli_r", "pauli_gamma", "analytic_GHz", "numeric_GHz", "ratio", "convention"];

fn scales_of(cfg: &RunConfig) -> CliResult<EnergyScales> {
    Ok(cfg.circuit_params()?.derive_scales()?)
}

fn engine(cfg: &RunConfig, scales: EnergyScales, cutoff: usize) -> CliResult<CouplingEngine> {
    Ok(CouplingEngine::new(scales, cutoff, cfg.potential_mode)?.with_offsets(cfg.ng_a, cfg.ng_b))
}

fn json_text(v: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable output");
    s.push('\n');
    s
}

pub fn cmd_scales(cfg: &RunConfig) -> CliResult<String> {
    cfg.validate()?;
    let s = scales_of(cfg)?;
    let zp = s.zero_point();
    let rows: Vec<(&str, f64, &str)> = vec![
        ("E_Cq", s.ecq, "GHz"),
        ("E_Cr", s.ecr, "GHz"),
        ("E_Lr", s.elr, "GHz"),
        ("E_Jq", s.ejq, "GHz"),
        ("E_Jq_tuned", s.ejq_tuned, "GHz"),
        ("E_Jq_star", s.ejq_star, "GHz"),
        ("E_J", s.ej, "GHz"),
        ("junction_count", f64::from(s.junction_count), "1"),
        ("omega_q", s.omega_q, "GHz"),
        ("omega_r", s.omega_r, "GHz"),
        ("delta", s.anharmonicity, "GHz"),
        ("gap", s.gap, "GHz"),
        ("phi_q_zpf", zp.phi_q, "rad"),
        ("N_q_zpf", zp.n_q, "1"),
        ("phi_r_zpf", zp.phi_r, "rad"),
        ("N_r_zpf", zp.n_r, "1"),
    ];
    match cfg.output_format {
        OutputFormat::Csv => {
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|(q, v, u)| {
                    let value = if *q == "junction_count" { s.junction_count.to_string() } else { fmt_ghz(*v) };
                    vec![q.to_string(), value, u.to_string()]
                })
                .collect();
            let mut out = csv_string(&["quantity", "value", "unit"], &body);
            out.push_str(&format!("# constants: {}\n# reconciliation\n", cfg.constants));
            for note in RECONCILIATION_NOTES {
                out.push_str(&format!("# {note}\n"));
            }
            Ok(out)
        }
        OutputFormat::Json => {
            let values: serde_json::Map<String, Value> =
                rows.iter().map(|(q, v, u)| (q.to_string(), json!({ "value": v, "unit": u }))).collect();
            Ok(json_text(&json!({
                "constants": cfg.constants,
                "scales": values,
                "reconciliation": RECONCILIATION_NOTES,
            })))
        }
    }
}

fn parity_filter(cfg: &RunConfig, reports: Vec<CouplingReport>) -> Vec<CouplingReport> {
    match cfg.parity {
        Some(p) => {
            let sign = ParitySector::from(p).sign();
            reports.into_iter().filter(|r| r.parity == sign).collect()
        }
        None => reports,
    }
}

/// Evaluated rows of `table` at the configured cutoff, in print order.
pub fn table_reports(cfg: &RunConfig, table: u8) -> CliResult<Vec<CouplingReport>> {
    cfg.validate()?;
    validate_table(table)?;
    let e = engine(cfg, scales_of(cfg)?, cfg.fock_cutoff)?;
    let reports = e.table(table).expect("validated table id")?;
    Ok(parity_filter(cfg, reports))
}

fn report_record(r: &CouplingReport) -> Vec<String> {
    let labels: Vec<String> =
        if r.decoupled { vec!["-".into(); 3] } else { r.labels.iter().map(|p| p.symbol().to_string()).collect() };
    let mut rec = vec![r.config.to_string(), fmt_parity(r.parity).to_owned()];
    rec.extend(labels);
    rec.push(r.analytic_ghz.map(fmt_ghz).unwrap_or_default());
    rec.push(fmt_ghz(r.numeric_ghz));
    rec.push(r.ratio.map(fmt_ratio).unwrap_or_default());
    rec.push(if r.decoupled { "decoupled".to_owned() } else { r.convention.name().to_owned() });
    rec
}

fn reports_csv(reports: &[CouplingReport]) -> String {
    csv_string(&TABLE_HEADER, &reports.iter().map(report_record).collect::<Vec<_>>())
}

#[derive(Serialize)]
struct JsonRow {
    config: String,
    parity: i8,
    term: &'static str,
    pauli_q: char,
    pauli_r: char,
    pauli_gamma: char,
    #[serde(rename = "analytic_GHz")]
    analytic_ghz: Option<f64>,
    #[serde(rename = "numeric_GHz")]
    numeric_ghz: f64,
    ratio: Option<f64>,
    convention: &'static str,
    #[serde(rename = "signed_coefficient_GHz")]
    signed_coefficient_ghz: f64,
    residual_pauli_weight: f64,
    flagged: bool,
    decoupled: bool,
    #[serde(rename = "convergence_drift_GHz", skip_serializing_if = "Option::is_none")]
    convergence_drift_ghz: Option<f64>,
}

fn json_row(r: &CouplingReport, drift: Option<f64>) -> JsonRow {
    JsonRow {
        config: r.config.to_string(),
        parity: r.parity,
        term: r.term.name(),
        pauli_q: r.labels[0].symbol(),
        pauli_r: r.labels[1].symbol(),
        pauli_gamma: r.labels[2].symbol(),
        analytic_ghz: r.analytic_ghz,
        numeric_ghz: r.numeric_ghz,
        ratio: r.ratio,
        convention: r.convention.name(),
        signed_coefficient_ghz: r.signed_coefficient,
        residual_pauli_weight: r.residual_weight,
        flagged: r.flagged,
        decoupled: r.decoupled,
        convergence_drift_ghz: drift,
    }
}

/// Coupling table in CSV (the golden format) or JSON with diagnostics:
/// residual Pauli weight and drift against a cutoff-20 rerun.
pub fn cmd_table(cfg: &RunConfig, table: u8) -> CliResult<String> {
    let reports = table_reports(cfg, table)?;
    match cfg.output_format {
        OutputFormat::Csv => Ok(reports_csv(&reports)),
        OutputFormat::Json => {
            let reference = table_reports(&RunConfig { fock_cutoff: CONVERGENCE_CUTOFF, ..cfg.clone() }, table)?;
            let rows: Vec<JsonRow> = reports
                .iter()
                .zip(&reference)
                .map(|(r, f)| json_row(r, Some(f.numeric_ghz - r.numeric_ghz)))
                .collect();
            Ok(json_text(&json!({
                "table": table,
                "cutoff": cfg.fock_cutoff,
                "convergence_cutoff": CONVERGENCE_CUTOFF,
                "potential_mode": cfg.potential_mode,
                "constants": cfg.constants,
                "rows": rows,
            })))
        }
    }
}

/// Every configuration in both parity sectors, sorted by configuration then parity.
pub fn cmd_selection(cfg: &RunConfig) -> CliResult<String> {
    cfg.validate()?;
    let e = engine(cfg, scales_of(cfg)?, cfg.fock_cutoff)?;
    let reports = parity_filter(cfg, e.parity_selection_table()?);
    match cfg.output_format {
        OutputFormat::Csv => Ok(reports_csv(&reports)),
        OutputFormat::Json => {
            let rows: Vec<JsonRow> = reports.iter().map(|r| json_row(r, None)).collect();
            Ok(json_text(&json!({ "cutoff": cfg.fock_cutoff, "potential_mode": cfg.potential_mode, "rows": rows })))
        }
    }
}

/// Sector splitting of `H_γ` over an `n_g^{(a)}` grid for configuration A or B.
pub fn degeneracy_points(cfg: &RunConfig, range: &SweepRange) -> CliResult<Vec<(f64, f64)>> {
    cfg.validate()?;
    let mcfg = MajoranaConfig::new(cfg.label);
    mcfg.require_charge()?;
    let sector: ParitySector = cfg.parity.map(Into::into).unwrap_or(ParitySector::Even);
    let s = scales_of(cfg)?;
    Ok(degeneracy_scan(&mcfg, &MajoranaAlgebra::default(), &s, sector, cfg.ng_b, &range.samples())?)
}

fn minimum(points: &[(f64, f64)]) -> (f64, f64) {
    points.iter().copied().fold(points[0], |best, p| if p.1 < best.1 { p } else { best })
}

pub fn cmd_degeneracy(cfg: &RunConfig) -> CliResult<String> {
    let range = cfg.sweep_range()?.unwrap_or(SweepRange { start: 0.0, end: 1.0, step: 0.05 });
    let points = degeneracy_points(cfg, &range)?;
    let (ng_min, split_min) = minimum(&points);
    let parity = cfg.parity.map(ParitySector::from).unwrap_or(ParitySector::Even);
    match cfg.output_format {
        OutputFormat::Csv => {
            let rows: Vec<Vec<String>> = points.iter().map(|(g, v)| vec![g.to_string(), fmt_ghz(*v)]).collect();
            let mut out = csv_string(&["ng_a", "splitting_GHz"], &rows);
            out.push_str(&format!(
                "# minimum: config={} parity={} ng_a={} splitting_GHz={}\n",
                cfg.label,
                fmt_parity(parity.sign()),
                ng_min,
                fmt_ghz(split_min)
            ));
            Ok(out)
        }
        OutputFormat::Json => {
            let samples: Vec<Value> =
                points.iter().map(|(g, v)| json!({ "ng_a": g, "splitting_GHz": v })).collect();
            Ok(json_text(&json!({
                "config": cfg.label,
                "parity": parity.sign(),
                "ng_b": cfg.ng_b,
                "samples": samples,
                "minimum": { "ng_a": ng_min, "splitting_GHz": split_min },
            })))
        }
    }
}

fn row_key(r: &TableRow) -> String {
    format!("{}{}_{}", r.config, fmt_parity(r.sector.sign()), r.term.name())
}

/// Coupling set of one table at a single sweep value.
pub fn sweep_point(cfg: &RunConfig, variable: SweepVariable, value: f64, table: u8) -> CliResult<Vec<CouplingReport>> {
    let mut point = cfg.clone();
    match variable {
        SweepVariable::FluxQ => point.flux_q = value,
        SweepVariable::Cutoff => {
            if value.fract() != 0.0 || value < 0.0 {
                return Err(CliError::Config(format!("cutoff sample {value} is not a non-negative integer")));
            }
            point.fock_cutoff = value as usize;
            validate_cutoff(point.fock_cutoff)?;
        }
        SweepVariable::Delta => {
            point.gap_uev = None;
            point.gap_ghz = Some(value);
        }
    }
    point.parity = None;
    table_reports(&point, table)
}

/// One line per sweep value; each table row contributes analytic, numeric
/// and ratio columns.
pub fn cmd_sweep(cfg: &RunConfig) -> CliResult<String> {
    cfg.validate()?;
    let variable =
        cfg.sweep_variable.ok_or_else(|| CliError::Config("sweep needs a variable (flux_q, cutoff or delta)".into()))?;
    let range = cfg.sweep_range()?.ok_or_else(|| CliError::Config("sweep needs a range start:end:step".into()))?;
    let table = cfg.table;
    let samples = range.samples();
    let results: Vec<CliResult<Vec<CouplingReport>>> =
        samples.par_iter().map(|&v| sweep_point(cfg, variable, v, table)).collect();
    let results: Vec<Vec<CouplingReport>> = results.into_iter().collect::<CliResult<_>>()?;
    let rows = table_rows(table).expect("validated table id");
    match cfg.output_format {
        OutputFormat::Csv => {
            let mut header = vec![variable.name().to_owned()];
            for r in &rows {
                let k = row_key(r);
                header.extend([format!("{k}_analytic_GHz"), format!("{k}_numeric_GHz"), format!("{k}_ratio")]);
            }
            let body: Vec<Vec<String>> = samples
                .iter()
                .zip(&results)
                .map(|(v, reports)| {
                    let mut rec = vec![match variable {
                        SweepVariable::Cutoff => format!("{}", *v as usize),
                        _ => v.to_string(),
                    }];
                    for r in reports {
                        rec.push(r.analytic_ghz.map(fmt_ghz).unwrap_or_default());
                        rec.push(fmt_ghz(r.numeric_ghz));
                        rec.push(r.ratio.map(fmt_ratio).unwrap_or_default());
                    }
                    rec
                })
                .collect();
            let header: Vec<&str> = header.iter().map(String::as_str).collect();
            Ok(csv_string(&header, &body))
        }
        OutputFormat::Json => {
            let points: Vec<Value> = samples
                .iter()
                .zip(&results)
                .map(|(v, reports)| {
                    let rows: Vec<JsonRow> = reports.iter().map(|r| json_row(r, None)).collect();
                    json!({ "value": v, "rows": rows })
                })
                .collect();
            Ok(json_text(&json!({ "variable": variable, "table": table, "points": points })))
        }
    }
}
