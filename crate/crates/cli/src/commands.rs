use std::io::Write;
use std::path::Path;

use fermisep::classify::{self, Tolerances};
use fermisep::search::{self, SearchConfig, SearchOutcome};
use fermisep::selftest::{self, SelftestConfig};
use fermisep::split::ModeBipartition;
use fermisep::xychain::{self, EofPoint, ScanRow};
use serde_json::{json, Map, Value};

use crate::state_file::StateFile;
use crate::{CliError, RunConfig};

pub fn validate(config: &RunConfig) -> Result<(), CliError> {
    if let Some(tol) = config.tol {
        if !(tol.is_finite() && tol > 0.0) {
            return Err(CliError::Parse(format!("--tol must be positive, got {tol}")));
        }
    }
    if config.quad_points < xychain::MIN_QUAD_POINTS || !config.quad_points.is_power_of_two() {
        return Err(CliError::Parse(format!("--quad-points must be a power of two >= 64, got {}", config.quad_points)));
    }
    if config.workers == Some(0) {
        return Err(CliError::Parse("--workers must be at least 1".into()));
    }
    Ok(())
}

fn emit(out: Option<&Path>, bytes: &[u8]) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, bytes).map_err(|e| CliError::io(path, e)),
        None => std::io::stdout().write_all(bytes).map_err(|e| CliError::Parse(format!("stdout: {e}"))),
    }
}

fn to_json(value: &Value) -> Vec<u8> {
    let mut bytes = serde_json::to_vec_pretty(value).expect("JSON values always serialize");
    bytes.push(b'\n');
    bytes
}

/// `start:stop:count` or a single number.
pub fn parse_range(text: &str) -> Result<Vec<f64>, CliError> {
    let bad = || CliError::Parse(format!("expected start:stop:count or a number, got {text:?}"));
    let parts: Vec<&str> = text.split(':').collect();
    let num = |s: &str| s.trim().parse::<f64>().map_err(|_| bad());
    let values = match parts.as_slice() {
        [single] => vec![num(single)?],
        [start, stop, count] => {
            let count: usize = count.trim().parse().map_err(|_| bad())?;
            if count == 0 {
                return Err(bad());
            }
            xychain::linspace(num(start)?, num(stop)?, count)
        }
        _ => return Err(bad()),
    };
    if values.iter().any(|v| !v.is_finite()) {
        return Err(bad());
    }
    Ok(values)
}

fn tolerances(config: &RunConfig) -> Tolerances {
    config.tol.map(Tolerances::uniform).unwrap_or_default()
}

pub fn classify(file: &Path, config: &RunConfig) -> Result<(), CliError> {
    let text = std::fs::read_to_string(file).map_err(|e| CliError::io(file, e))?;
    let state = StateFile::parse(&text)?;
    let (rho, split) = state.to_state()?;
    let tols = match config.tol {
        Some(tol) => Tolerances::uniform(tol),
        None => Tolerances { psd: state.tolerance(), ..Tolerances::default() },
    };
    let report = classify::classify(&rho, split, tols).map_err(CliError::invalid)?;
    let mut out = Map::new();
    out.insert("split".into(), json!(split.to_string()));
    out.insert("physical".into(), json!(report.physical));
    out.insert("parity_deviation".into(), json!(report.parity_deviation));
    out.insert("witness".into(), json!(report.ppt_witness));
    let mut tests = Map::new();
    for (label, test) in &report.entries {
        match test {
            Some(t) => {
                out.insert(label.as_str().into(), json!(t.verdict.as_str()));
                tests.insert(
                    label.as_str().into(),
                    json!({
                        "verdict": t.verdict.as_str(),
                        "witness": t.witness,
                        "tolerance": t.tolerance,
                        "strength": t.strength.as_str(),
                    }),
                );
            }
            None => {
                out.insert(label.as_str().into(), json!("not-evaluated"));
            }
        }
    }
    out.insert("tests".into(), Value::Object(tests));
    emit(config.out.as_deref(), &to_json(&Value::Object(out)))
}

fn csv_bytes<'a>(header: &[&str], rows: impl Iterator<Item = Vec<String>> + 'a) -> Result<Vec<u8>, CliError> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    let fail = |e: csv::Error| CliError::Parse(format!("CSV: {e}"));
    writer.write_record(header).map_err(fail)?;
    for row in rows {
        writer.write_record(&row).map_err(fail)?;
    }
    writer.into_inner().map_err(|e| CliError::Parse(format!("CSV: {e}")))
}

pub fn scan_xy(lambda: f64, gamma: &str, beta: &str, boundary: Option<&Path>, config: &RunConfig) -> Result<(), CliError> {
    let gammas = parse_range(gamma)?;
    let betas = parse_range(beta)?;
    let table = xychain::scan_regions(lambda, &gammas, &betas, config.quad_points, tolerances(config))?;
    let bytes = csv_bytes(&ScanRow::CSV_HEADER, table.rows.iter().map(ScanRow::csv_record))?;
    if let Some(path) = boundary {
        let mut rows = Vec::new();
        for b in &table.boundaries {
            let flag = if b.non_monotone() { "1" } else { "0" };
            if b.crossings.is_empty() {
                rows.push(vec![xychain::format_sig(b.gamma), "0".into(), String::new(), flag.into()]);
            }
            for (k, beta) in b.crossings.iter().enumerate() {
                rows.push(vec![xychain::format_sig(b.gamma), (k + 1).to_string(), xychain::format_sig(*beta), flag.into()]);
            }
        }
        let boundary_bytes = csv_bytes(&["gamma", "crossing", "beta", "non_monotone"], rows.into_iter())?;
        std::fs::write(path, boundary_bytes).map_err(|e| CliError::io(path, e))?;
    }
    emit(config.out.as_deref(), &bytes)
}

pub fn eof_curve(lambda: f64, gamma: f64, beta: &str, config: &RunConfig) -> Result<(), CliError> {
    let betas = parse_range(beta)?;
    let curve = xychain::eof_curve(lambda, gamma, &betas, config.quad_points)?;
    let bytes = csv_bytes(&EofPoint::CSV_HEADER, curve.iter().map(EofPoint::csv_record))?;
    emit(config.out.as_deref(), &bytes)
}

/// The report goes to standard output; a state found is written to
/// `--out` when given.
pub fn search(iters: usize, split: &str, config: &RunConfig) -> Result<(), CliError> {
    let split: ModeBipartition = split.parse().map_err(|e: fermisep::Error| CliError::Parse(e.to_string()))?;
    let mut search_config = SearchConfig::new(split, config.seed, iters);
    if let Some(tol) = config.tol {
        search_config.threshold = tol;
    }
    let outcome = search::search_p1_nppt(&search_config)?;
    let report = match &outcome {
        SearchOutcome::Found(ce) => {
            if let Some(path) = config.out.as_deref() {
                let file = serde_json::to_vec_pretty(&StateFile::from_matrix(&ce.state, split)).expect("state files serialize");
                std::fs::write(path, file).map_err(|e| CliError::io(path, e))?;
            }
            json!({
                "found": true,
                "split": split.to_string(),
                "seed": ce.seed,
                "iteration": ce.iteration,
                "witness": ce.witness,
                "p1_residual": ce.p1_residual,
                "epsilon": ce.epsilon,
            })
        }
        SearchOutcome::Exhausted { iterations, best_witness } => json!({
            "found": false,
            "split": split.to_string(),
            "seed": config.seed,
            "iterations": iterations,
            "best_witness": best_witness,
        }),
    };
    emit(None, &to_json(&report))
}

pub fn selftest(config: &RunConfig) -> Result<(), CliError> {
    let st = SelftestConfig { tol: config.tol.unwrap_or(fermisep::linalg::DEFAULT_TOL), quad_points: config.quad_points, seed: config.seed };
    let results = selftest::run_all(&st)?;
    let mut text = String::new();
    for r in &results {
        let status = if r.passed { "pass" } else { "FAIL" };
        text += &format!("{:<26} {status}  residual {:.3e}  threshold {:.3e}  ({})\n", r.name, r.residual, r.threshold, r.detail);
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    text += &format!("{} of {} suites passed\n", results.len() - failed, results.len());
    emit(config.out.as_deref(), text.as_bytes())?;
    if failed > 0 {
        return Err(CliError::SelftestFailed);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("0:1:3").unwrap(), vec![0.0, 0.5, 1.0]);
        assert_eq!(parse_range("2.5").unwrap(), vec![2.5]);
        assert!(parse_range("0:1").is_err());
        assert!(parse_range("0:1:0").is_err());
        assert!(parse_range("a:1:2").is_err());
    }
}
