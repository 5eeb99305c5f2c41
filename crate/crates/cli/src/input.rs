use std::fs;
use std::path::PathBuf;

use clap::Args;
use walklab::graph::{fixture, from_graph6, GraphJson};
use walklab::{Fixture, Graph};

use crate::CliError;

/// Where a graph comes from. Exactly one source must be given.
#[derive(Args, Debug, Clone, Default)]
pub struct GraphSource {
    /// Bundled fixture name (see `fixtures list`).
    #[arg(long)]
    pub fixture: Option<String>,
    /// Inline graph6 string.
    #[arg(long)]
    pub graph6: Option<String>,
    /// File holding graph6 text or the JSON graph schema.
    #[arg(long)]
    pub input: Option<PathBuf>,
}

/// The second graph of a pair; same options with an `other-` prefix.
#[derive(Args, Debug, Clone, Default)]
pub struct OtherSource {
    #[arg(long = "other-fixture", id = "other_fixture")]
    pub fixture: Option<String>,
    #[arg(long = "other-graph6", id = "other_graph6")]
    pub graph6: Option<String>,
    #[arg(long = "other-input", id = "other_input")]
    pub input: Option<PathBuf>,
}

impl OtherSource {
    pub fn as_source(&self) -> Option<GraphSource> {
        if self.fixture.is_none() && self.graph6.is_none() && self.input.is_none() {
            return None;
        }
        Some(GraphSource {
            fixture: self.fixture.clone(),
            graph6: self.graph6.clone(),
            input: self.input.clone(),
        })
    }
}

impl GraphSource {
    pub fn load(&self) -> Result<Fixture, CliError> {
        match (&self.fixture, &self.graph6, &self.input) {
            (Some(name), None, None) => Ok(fixture(name)?),
            (None, Some(g6), None) => Ok(Fixture::new("graph6", from_graph6(g6)?, &[])?),
            (None, None, Some(path)) => {
                let text = fs::read_to_string(path)?;
                let name = path.display().to_string();
                if text.trim_start().starts_with('{') {
                    let json: GraphJson = serde_json::from_str(&text)?;
                    Ok(json.to_fixture(&name)?)
                } else {
                    let line = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
                    Ok(Fixture::new(name, from_graph6(line.trim())?, &[])?)
                }
            }
            (None, None, None) => Err(CliError::Usage("give one of --fixture, --graph6 or --input".into())),
            _ => Err(CliError::Usage("--fixture, --graph6 and --input are exclusive".into())),
        }
    }
}

/// A vertex given as a mark name or as a 0-based index.
pub fn resolve_vertex(f: &Fixture, spec: &str) -> Result<usize, CliError> {
    let v = match spec.parse::<usize>() {
        Ok(v) => v,
        Err(_) => f.mark(spec)?,
    };
    check_vertex(&f.graph, v)?;
    Ok(v)
}

fn check_vertex(g: &Graph, v: usize) -> Result<(), CliError> {
    g.check_vertex(v).map_err(|e| CliError::Usage(e.to_string()))
}
