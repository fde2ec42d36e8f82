//! Runs a scenario, writes its CSV tables and a JSON run manifest next to them.

use std::path::{Path, PathBuf};

use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::config::Config;
use crate::error::{Result, VsaError};
use crate::scenario::{run, Check, Report, ScenarioSpec};

#[derive(Debug, Clone, Serialize)]
pub struct Output {
    /// File name relative to the manifest.
    pub file: String,
    pub rows: usize,
    pub sha256: String,
}

#[derive(Debug)]
pub struct Outcome {
    pub report: Report,
    pub files: Vec<PathBuf>,
    pub manifest: PathBuf,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

/// `dir/stem-label.ext` for labelled tables, `out` itself otherwise.
pub fn table_path(out: &Path, label: Option<&str>) -> PathBuf {
    match label {
        None => out.to_path_buf(),
        Some(label) => {
            let stem = out.file_stem().and_then(|s| s.to_str()).unwrap_or("out");
            let name = match out.extension().and_then(|e| e.to_str()) {
                Some(ext) => format!("{stem}-{label}.{ext}"),
                None => format!("{stem}-{label}"),
            };
            out.with_file_name(name)
        }
    }
}

pub fn manifest_path(out: &Path) -> PathBuf {
    let stem = out.file_stem().and_then(|s| s.to_str()).unwrap_or("out");
    out.with_file_name(format!("{stem}.manifest.json"))
}

fn write(path: &Path, bytes: &[u8]) -> Result<()> {
    std::fs::write(path, bytes).map_err(|source| VsaError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn manifest(spec: &ScenarioSpec, cfg: &Config, outputs: &[Output], report: &Report) -> Value {
    json!({
        "scenario": spec.kind,
        "oracle": spec.oracle,
        "config": cfg,
        "outputs": outputs,
        "checks": report.checks,
        "passed": report.passed(),
        "summary": report.summary,
    })
}

/// Run `spec` and write every table plus the manifest. `out` defaults to
/// `<scenario>.csv` in the working directory.
pub fn execute(spec: &ScenarioSpec, cfg: &Config) -> Result<Outcome> {
    let report = run(spec, cfg)?;
    let out = spec
        .out
        .clone()
        .unwrap_or_else(|| PathBuf::from(format!("{}.csv", spec.kind.name())));
    let mut outputs = Vec::new();
    let mut files = Vec::new();
    for (label, table) in &report.tables {
        let path = table_path(&out, label.as_deref());
        let text = table.render();
        write(&path, text.as_bytes())?;
        outputs.push(Output {
            file: path
                .file_name()
                .map(|n| n.to_string_lossy().into_owned())
                .unwrap_or_default(),
            rows: table.rows.len(),
            sha256: sha256_hex(text.as_bytes()),
        });
        files.push(path);
    }
    let manifest_file = manifest_path(&out);
    let mut text = serde_json::to_string_pretty(&manifest(spec, cfg, &outputs, &report))
        .expect("manifest serializes");
    text.push('\n');
    write(&manifest_file, text.as_bytes())?;
    Ok(Outcome {
        report,
        files,
        manifest: manifest_file,
    })
}

pub fn format_check(c: &Check) -> String {
    let mark = if c.pass { "PASS" } else { "FAIL" };
    if c.detail.is_empty() {
        format!("{mark}  {}", c.name)
    } else {
        format!("{mark}  {} ({})", c.name, c.detail)
    }
}
