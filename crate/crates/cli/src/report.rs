//! Ordered `key: value` reports.
//!
//! Scalars render as `key: value`. Blocks render as `key:` followed by their
//! lines indented by two spaces, so an embedded file can be cut out verbatim.

use std::fmt;

use derange_core::{AnalysisReport, ValencyProfile};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Entry {
    Scalar(String),
    Block(Vec<String>),
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    entries: Vec<(String, Entry)>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn field(&mut self, key: impl Into<String>, value: impl fmt::Display) -> &mut Self {
        self.entries
            .push((key.into(), Entry::Scalar(value.to_string())));
        self
    }

    pub fn block(&mut self, key: impl Into<String>, text: &str) -> &mut Self {
        let lines = text.lines().map(str::to_owned).collect();
        self.entries.push((key.into(), Entry::Block(lines)));
        self
    }

    pub fn valencies(&mut self, profile: &ValencyProfile) -> &mut Self {
        self.field("out_valencies", join(&profile.out_valencies))
            .field("in_valencies", join(&profile.in_valencies))
    }

    pub fn analysis(&mut self, r: &AnalysisReport) -> &mut Self {
        self.field("domain_size", r.domain_size)
            .field("set_size", r.set_size)
            .field("arc_count", r.arc_count)
            .field("multiplicity_free", r.multiplicity_free)
            .field("closed", r.closed)
            .field("self_inverse", r.self_inverse)
            .field("symmetric", r.symmetric)
            .field("regular_valency", optional(r.regular_valency))
            .valencies(&r.valency_profile)
            .field("max_multiplicity", r.max_multiplicity)
            .field("component_count", r.component_count)
    }
}

pub fn join(values: &[usize]) -> String {
    values
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn optional(value: Option<usize>) -> String {
    value.map_or_else(|| "none".to_owned(), |v| v.to_string())
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (key, entry) in &self.entries {
            match entry {
                Entry::Scalar(v) => writeln!(f, "{key}: {v}")?,
                Entry::Block(lines) => {
                    writeln!(f, "{key}:")?;
                    for line in lines {
                        writeln!(f, "  {line}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
