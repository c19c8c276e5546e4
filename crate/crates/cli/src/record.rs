//! The CSV row written for every solver run.

use std::fs::OpenOptions;
use std::path::Path;

use serde::Serialize;

use crate::failure::{Failure, IoContext};

/// Column order of every CSV file this tool writes.
pub const HEADER: [&str; 26] = [
    "instance_id",
    "objective",
    "polytope",
    "n",
    "solver",
    "alpha",
    "epsilon",
    "eta",
    "sigma",
    "delta_tol",
    "value_tol",
    "batch",
    "theta",
    "lipschitz",
    "diameter",
    "seed",
    "value",
    "opt_lower",
    "opt_upper",
    "opt_grid",
    "ratio_grid",
    "adaptive_rounds",
    "total_rounds",
    "value_queries",
    "gradient_queries",
    "wall_ms",
];

#[derive(Debug, Clone, Serialize, serde::Deserialize, PartialEq)]
pub struct RunRecord {
    pub instance_id: String,
    pub objective: String,
    pub polytope: String,
    pub n: usize,
    pub solver: String,
    pub alpha: f64,
    pub epsilon: f64,
    pub eta: f64,
    pub sigma: f64,
    pub delta_tol: f64,
    pub value_tol: f64,
    pub batch: usize,
    pub theta: f64,
    pub lipschitz: f64,
    pub diameter: f64,
    pub seed: u64,
    pub value: f64,
    pub opt_lower: f64,
    pub opt_upper: f64,
    pub opt_grid: Option<f64>,
    pub ratio_grid: Option<f64>,
    pub adaptive_rounds: u64,
    pub total_rounds: u64,
    pub value_queries: u64,
    pub gradient_queries: u64,
    pub wall_ms: f64,
}

pub fn writer_for(path: &Path, append: bool) -> Result<csv::Writer<std::fs::File>, Failure> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).io(format!("creating {}", dir.display()))?;
    }
    let fresh = !append
        || std::fs::metadata(path)
            .map(|m| m.len() == 0)
            .unwrap_or(true);
    let file = OpenOptions::new()
        .create(true)
        .write(true)
        .append(append)
        .truncate(!append)
        .open(path)
        .io(format!("opening {}", path.display()))?;
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(file);
    if fresh {
        w.write_record(HEADER).io("writing CSV header")?;
    }
    Ok(w)
}

pub fn write_rows(w: &mut csv::Writer<std::fs::File>, rows: &[RunRecord]) -> Result<(), Failure> {
    for r in rows {
        w.serialize(r).io("writing CSV row")?;
    }
    w.flush().io("flushing CSV")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> RunRecord {
        RunRecord {
            instance_id: "a".into(),
            objective: "coverage".into(),
            polytope: "box".into(),
            n: 3,
            solver: "jspg".into(),
            alpha: 0.05,
            epsilon: 0.1,
            eta: 0.0,
            sigma: 0.0,
            delta_tol: 1e-6,
            value_tol: 1e-9,
            batch: 64,
            theta: 0.0,
            lipschitz: 0.0,
            diameter: 0.0,
            seed: 1,
            value: 1.5,
            opt_lower: 1.0,
            opt_upper: 2.0,
            opt_grid: None,
            ratio_grid: None,
            adaptive_rounds: 4,
            total_rounds: 3,
            value_queries: 30,
            gradient_queries: 2,
            wall_ms: 0.1,
        }
    }

    #[test]
    fn header_matches_fields() {
        let mut w = csv::Writer::from_writer(vec![]);
        w.serialize(sample()).unwrap();
        let text = String::from_utf8(w.into_inner().unwrap()).unwrap();
        let first = text.lines().next().unwrap();
        assert_eq!(first, HEADER.join(","));
    }

    #[test]
    fn missing_grid_leaves_cells_empty() {
        let mut w = csv::WriterBuilder::new()
            .has_headers(false)
            .from_writer(vec![]);
        w.serialize(sample()).unwrap();
        let text = String::from_utf8(w.into_inner().unwrap()).unwrap();
        assert!(text.contains(",1.0,2.0,,,4,"), "{text}");
    }
}
