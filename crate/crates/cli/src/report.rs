use std::collections::BTreeMap;

use serde::Serialize;

use zariski_core::enumerate::ChamberReport;

pub const SCHEMA_VERSION: u32 = 1;

/// Machine-readable run report, schema-stable across the counting modes.
/// Counts are serialized as decimal strings so consumers never lose width.
#[derive(Debug, Serialize)]
pub struct Report {
    pub schema: u32,
    pub mode: &'static str,
    pub source: String,
    pub matrix_hash: String,
    pub n: usize,
    pub workers: usize,
    pub integer_backend: &'static str,
    pub posdef_count: String,
    pub total_chambers: String,
    pub histogram: BTreeMap<usize, String>,
    pub max_support: usize,
    pub elapsed_ms: u64,
    pub resumed_from: Option<String>,
    pub checkpoint_written: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subsets: Option<Vec<Vec<usize>>>,
}

impl Report {
    pub fn new(
        mode: &'static str,
        source: &str,
        hash: u64,
        workers: usize,
        backend: &'static str,
        chambers: &ChamberReport,
    ) -> Self {
        Self {
            schema: SCHEMA_VERSION,
            mode,
            source: source.to_string(),
            matrix_hash: format!("{hash:016x}"),
            n: chambers.matrix_dimension,
            workers,
            integer_backend: backend,
            posdef_count: chambers.posdef_submatrix_count.to_string(),
            total_chambers: chambers.total_chambers.to_string(),
            histogram: chambers
                .histogram
                .nonzero()
                .map(|(l, c)| (l, c.to_string()))
                .collect(),
            max_support: chambers.max_support,
            elapsed_ms: chambers.elapsed.as_millis() as u64,
            resumed_from: None,
            checkpoint_written: None,
            subsets: None,
        }
    }

    pub fn print_json(&self) {
        println!("{}", serde_json::to_string_pretty(self).expect("report serializes"));
    }

    /// Human rendering; the histogram is laid out as a support-size table.
    pub fn print_human(&self) {
        println!(
            "source: {}  (n = {}, hash = {})",
            self.source, self.n, self.matrix_hash
        );
        println!(
            "chambers: {}  (supports: {}, plus the nef chamber)",
            self.total_chambers, self.posdef_count
        );
        if !self.histogram.is_empty() {
            println!("  support   chambers");
            for (l, c) in &self.histogram {
                println!("  {l:>7}   {c}");
            }
            println!("max support: {}", self.max_support);
        }
        println!(
            "elapsed: {}  workers: {}  backend: {}",
            human_duration(self.elapsed_ms),
            self.workers,
            self.integer_backend
        );
        if let Some(from) = &self.resumed_from {
            println!("resumed from: {from}");
        }
        if let Some(path) = &self.checkpoint_written {
            println!("checkpoint written: {path}");
        }
    }
}

pub fn human_duration(ms: u64) -> String {
    if ms < 1_000 {
        format!("{ms} ms")
    } else if ms < 600_000 {
        format!("{:.2} s", ms as f64 / 1000.0)
    } else {
        format!("{:.1} min", ms as f64 / 60_000.0)
    }
}
