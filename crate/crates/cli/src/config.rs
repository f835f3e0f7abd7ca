use clap::ValueEnum;
use serde::Serialize;

pub const DEFAULT_PRIME: u64 = 1_000_003;
pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_TRIALS: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
    Csv,
    Off,
}

/// Everything that determines a run's output, embedded in every report.
#[derive(Debug, Clone, Default, Serialize)]
pub struct RunConfig {
    pub command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d_max: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub region: Option<String>,
    pub prime: u64,
    pub seed: u64,
    pub trials: usize,
    pub budget: u64,
    pub format: Option<Format>,
    pub output: Option<String>,
}

impl RunConfig {
    pub fn new(command: &'static str) -> Self {
        RunConfig {
            command,
            prime: DEFAULT_PRIME,
            seed: DEFAULT_SEED,
            trials: DEFAULT_TRIALS,
            budget: ahtoric::packing::DEFAULT_BUDGET,
            ..Default::default()
        }
    }
}

/// Wraps a report body with the tool version and run configuration.
pub fn envelope(cfg: &RunConfig, body: serde_json::Value) -> String {
    let mut v = serde_json::json!({
        "tool": "ahtoric",
        "version": env!("CARGO_PKG_VERSION"),
        "run_config": cfg,
    });
    if let (Some(map), serde_json::Value::Object(b)) = (v.as_object_mut(), body) {
        map.extend(b);
    }
    let mut s = serde_json::to_string_pretty(&v).expect("report serialises");
    s.push('\n');
    s
}
