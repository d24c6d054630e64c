use std::path::PathBuf;

use lsk_core::input::{from_json, Family, Resolved};

use crate::commands::Failure;
use crate::InputArgs;

/// Exactly one input source.
pub enum Source {
    Family(String),
    Inline(String),
    File(PathBuf),
}

impl Source {
    pub fn from_args(a: &InputArgs) -> Result<Self, Failure> {
        match (&a.family, &a.input, &a.file) {
            (Some(f), None, None) => Ok(Source::Family(f.clone())),
            (None, Some(j), None) => Ok(Source::Inline(j.clone())),
            (None, None, Some(p)) => Ok(Source::File(p.clone())),
            _ => Err(Failure::usage("give exactly one of --family, --input or --file")),
        }
    }

    pub fn resolve(&self) -> Result<Resolved, Failure> {
        match self {
            Source::Family(f) => Ok(f.parse::<Family>()?.resolve()?),
            Source::Inline(j) => Ok(from_json(j)?),
            Source::File(p) => {
                let text = std::fs::read_to_string(p)
                    .map_err(|e| Failure::invalid(format!("cannot read {}: {e}", p.display())))?;
                Ok(from_json(&text)?)
            }
        }
    }
}
