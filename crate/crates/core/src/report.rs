//! Machine-readable reports. Every report type rejects unknown fields on
//! deserialization, so [`validate`] doubles as the schema check for the
//! CLI's `--json` output.

use serde::{Deserialize, Serialize};

use crate::adr::Label;
use crate::approx::{AddGAudit, CounterexampleReport, ExtTable, ResolutionReport};
use crate::error::{Error, Result};
use crate::strat::CheckResult;

/// A simple with a multiplicity. Vertices of `A` print as `3`, labels of
/// the ADR algebra as `(3,1)`.
pub type Count = (String, usize);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BuildReport {
    pub name: String,
    pub field: String,
    pub vertices: usize,
    pub arrows: Vec<String>,
    pub relations: Vec<String>,
    pub dim: usize,
    pub loewy_length: usize,
    pub basis: Vec<String>,
    pub projective_dims: Vec<usize>,
    pub projective_loewy_lengths: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleReport {
    pub expr: String,
    /// `"A"` or `"R"`.
    pub over: String,
    pub dim: usize,
    pub composition_factors: Vec<Count>,
    pub top: Vec<Count>,
    pub socle: Vec<Count>,
    pub loewy_length: usize,
    pub rigid: bool,
    pub radical_layers: Vec<Vec<Count>>,
    pub socle_layers: Vec<Vec<Count>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AdrReport {
    pub algebra: String,
    pub loewy_lengths: Vec<usize>,
    pub labels: Vec<Label>,
    pub dim_r: usize,
    pub dim_radical: usize,
    /// `(label, dim P_label, LL P_label)`.
    pub projectives: Vec<(Label, usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StandardEntry {
    pub label: Label,
    pub dim: usize,
    pub loewy_length: usize,
    /// Radical layers top to bottom; each is a single simple.
    pub factors: Vec<Label>,
    pub uniserial: bool,
    pub realizations_isomorphic: bool,
    /// Dimensions of `0 → Hom(G, rad G_s) → P_s → Δ_s → 0`.
    pub sequence_dims: (usize, usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StandardReport {
    pub algebra: String,
    pub standards: Vec<StandardEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FiltrationReport {
    pub expr: String,
    pub dim: usize,
    pub delta_good: bool,
    pub factor_count: usize,
    pub delta_semisimple: bool,
    pub length: usize,
    pub chain_dims: Vec<usize>,
    pub layers: Vec<Vec<(Label, usize)>>,
    /// Present when the module is `homG` of a module over `A`.
    pub socle_correspondence: Option<Vec<CheckResult>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ApproxReport {
    pub expr: String,
    pub rigid: bool,
    pub summands: Vec<(Label, usize)>,
    pub source_dim: usize,
    pub is_approximation: bool,
    pub is_right_minimal: bool,
    /// For rigid input: whether the cover modulo `rad^{LL}` gives the same
    /// summands.
    pub agrees_with_rigid_cover: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResolveReport {
    pub expr: String,
    pub resolution: ResolutionReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DllReport {
    pub expr: String,
    pub loewy_lengths: Vec<usize>,
    pub dll_ok: bool,
    pub first_violation: Option<usize>,
    pub addg: AddGAudit,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusEntry {
    pub algebra: String,
    pub expr: String,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusReport {
    pub seed: u64,
    pub items: Vec<CorpusEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ErrorReport {
    pub error: String,
    pub kind: String,
}

/// Report kinds by CLI verb.
pub const VERBS: [&str; 11] = [
    "build",
    "module",
    "adr",
    "standard",
    "filtration",
    "approx",
    "resolve",
    "ext-table",
    "dll-check",
    "counterexample",
    "corpus-dump",
];

fn round_trip<T: Serialize + for<'de> Deserialize<'de>>(json: &str) -> Result<()> {
    let value: serde_json::Value =
        serde_json::from_str(json).map_err(|e| Error::Input(format!("not valid JSON: {e}")))?;
    let parsed: T = serde_json::from_value(value.clone()).map_err(|e| Error::Input(format!("schema mismatch: {e}")))?;
    let again = serde_json::to_value(&parsed).map_err(|e| Error::Input(e.to_string()))?;
    if again != value {
        return Err(Error::Input("report does not round-trip through its schema".into()));
    }
    Ok(())
}

/// Checks that `json` is a well-formed report for `verb`.
pub fn validate(verb: &str, json: &str) -> Result<()> {
    match verb {
        "build" => round_trip::<BuildReport>(json),
        "module" => round_trip::<ModuleReport>(json),
        "adr" => round_trip::<AdrReport>(json),
        "standard" => round_trip::<StandardReport>(json),
        "filtration" => round_trip::<FiltrationReport>(json),
        "approx" => round_trip::<ApproxReport>(json),
        "resolve" => round_trip::<ResolveReport>(json),
        "ext-table" => round_trip::<ExtTable>(json),
        "dll-check" => round_trip::<DllReport>(json),
        "counterexample" => round_trip::<CounterexampleReport>(json),
        "corpus-dump" => round_trip::<CorpusReport>(json),
        "error" => round_trip::<ErrorReport>(json),
        other => Err(Error::Input(format!("unknown report kind '{other}'"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_unknown_fields() {
        let ok = r#"{"seed":1,"items":[{"algebra":"kx2","expr":"P(1)","dim":2}]}"#;
        assert!(validate("corpus-dump", ok).is_ok());
        let extra = r#"{"seed":1,"items":[],"extra":0}"#;
        assert!(validate("corpus-dump", extra).is_err());
        assert!(validate("corpus-dump", r#"{"seed":1}"#).is_err());
        assert!(validate("nope", ok).is_err());
    }
}
