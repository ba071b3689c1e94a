//! Versioned JSON run reports and their certificate re-checker.

use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::graph6::{emit_graph6, parse_graph6};
use crate::hamiltonian::PairWitness;
use crate::iso::IsoCertificate;
use crate::path::{verify_cycle, verify_path, VertexPath};

pub const SCHEMA_VERSION: u32 = 1;
pub const TOOL: &str = "hamlab";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_ok(ok: bool) -> Verdict {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

/// A checkable claim about the graph encoded in `graph6`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    HamiltonianPath {
        graph6: String,
        path: VertexPath,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        endpoints: Option<(usize, usize)>,
    },
    HamiltonianCycle {
        graph6: String,
        cycle: VertexPath,
    },
    /// One `u`-`v` Hamiltonian path for every pair `u < v`.
    HamiltonianConnected {
        graph6: String,
        witnesses: Vec<PairWitness>,
    },
    /// A proper coloring with exactly `k` colors.
    Coloring {
        graph6: String,
        k: usize,
        colors: Vec<usize>,
    },
    /// `perm` maps the graph onto its complement.
    SelfComplementary {
        graph6: String,
        perm: Vec<usize>,
    },
}

impl Certificate {
    pub fn graph6(&self) -> &str {
        match self {
            Certificate::HamiltonianPath { graph6, .. }
            | Certificate::HamiltonianCycle { graph6, .. }
            | Certificate::HamiltonianConnected { graph6, .. }
            | Certificate::Coloring { graph6, .. }
            | Certificate::SelfComplementary { graph6, .. } => graph6,
        }
    }

    /// Re-checks the claim from scratch.
    pub fn verify(&self) -> Result<(), String> {
        let g = parse_graph6(self.graph6()).map_err(|e| format!("bad graph6: {e}"))?;
        match self {
            Certificate::HamiltonianPath { path, endpoints, .. } => {
                verify_path(&g, path, true, *endpoints).map_err(|e| e.to_string())
            }
            Certificate::HamiltonianCycle { cycle, .. } => verify_cycle(&g, cycle).map_err(|e| e.to_string()),
            Certificate::HamiltonianConnected { witnesses, .. } => {
                let n = g.order();
                let want: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
                let have: Vec<(usize, usize)> = witnesses.iter().map(|w| (w.u, w.v)).collect();
                if have != want {
                    return Err(format!("witness pairs do not cover the {} pairs in order", want.len()));
                }
                for w in witnesses {
                    verify_path(&g, &w.path, true, Some((w.u, w.v)))
                        .map_err(|e| format!("pair ({}, {}): {e}", w.u, w.v))?;
                }
                Ok(())
            }
            Certificate::Coloring { k, colors, .. } => {
                let c = crate::coloring::ColoringCertificate { colors: colors.clone(), k: *k, optimal: false };
                if c.is_proper_for(&g) {
                    Ok(())
                } else {
                    Err(format!("not a proper coloring with exactly {k} colors"))
                }
            }
            Certificate::SelfComplementary { perm, .. } => {
                if (IsoCertificate { perm: perm.clone() }).verifies(&g, &g.complement()) {
                    Ok(())
                } else {
                    Err("permutation does not map the graph onto its complement".into())
                }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inputs {
    pub count: usize,
    pub source: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Instance {
    pub label: String,
    pub graph6: String,
    pub verdict: Verdict,
    /// Free-form facts established for this instance.
    #[serde(default)]
    pub facts: serde_json::Map<String, serde_json::Value>,
    #[serde(default)]
    pub certificates: Vec<Certificate>,
}

impl Instance {
    pub fn new(label: impl Into<String>, g: &Graph) -> Instance {
        Instance {
            label: label.into(),
            graph6: g6(g),
            verdict: Verdict::Pass,
            facts: serde_json::Map::new(),
            certificates: Vec::new(),
        }
    }

    pub fn fact(&mut self, key: &str, value: impl Serialize) {
        self.facts.insert(key.to_string(), serde_json::to_value(value).expect("plain data"));
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub graph6: String,
    /// Module whose check failed.
    pub module: String,
    pub check: String,
    pub detail: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pair: Option<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputError {
    pub line: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub schema: u32,
    pub tool: String,
    pub version: String,
    pub suite: String,
    pub inputs: Inputs,
    pub verdict: Verdict,
    #[serde(default)]
    pub summary: serde_json::Map<String, serde_json::Value>,
    pub instances: Vec<Instance>,
    pub counterexamples: Vec<Counterexample>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub input_errors: Vec<InputError>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
    /// Seconds since the Unix epoch.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<u64>,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>, source: impl Into<String>) -> SuiteReport {
        SuiteReport {
            schema: SCHEMA_VERSION,
            tool: TOOL.into(),
            version: env!("CARGO_PKG_VERSION").into(),
            suite: suite.into(),
            inputs: Inputs { count: 0, source: source.into() },
            verdict: Verdict::Pass,
            summary: serde_json::Map::new(),
            instances: Vec::new(),
            counterexamples: Vec::new(),
            input_errors: Vec::new(),
            wall_time_ms: None,
            timestamp: None,
        }
    }

    pub fn summary(&mut self, key: &str, value: impl Serialize) {
        self.summary.insert(key.to_string(), serde_json::to_value(value).expect("plain data"));
    }

    /// Sets the verdict from the counterexample list, and optionally stamps
    /// wall time and the current time.
    pub fn finish(&mut self, elapsed_ms: Option<u64>) {
        self.inputs.count = self.instances.len();
        self.verdict = Verdict::from_ok(self.counterexamples.is_empty());
        self.wall_time_ms = elapsed_ms;
        self.timestamp =
            elapsed_ms.map(|_| SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0));
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn certificate_count(&self) -> usize {
        self.instances.iter().map(|i| i.certificates.len()).sum()
    }
}

pub(crate) fn g6(g: &Graph) -> String {
    emit_graph6(g).unwrap_or_else(|_| format!("<order {} graph>", g.order()))
}

/// Re-verifies every certificate in `report`. Returns one message per failure.
pub fn verify_report(report: &SuiteReport) -> Vec<String> {
    let mut failures = Vec::new();
    if report.schema != SCHEMA_VERSION {
        failures.push(format!("unsupported schema {}", report.schema));
    }
    let verdict_ok = (report.verdict == Verdict::Pass) == report.counterexamples.is_empty();
    if !verdict_ok {
        failures.push("verdict disagrees with the counterexample list".into());
    }
    for (i, inst) in report.instances.iter().enumerate() {
        for (j, cert) in inst.certificates.iter().enumerate() {
            if let Err(e) = cert.verify() {
                failures.push(format!("instance {i} ({}), certificate {j}: {e}", inst.label));
            }
        }
    }
    failures
}
