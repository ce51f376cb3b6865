//! Core signal types: labeled time series and dataset manifests.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Diagnostic class of a record.
///
/// The string forms `"H"`, `"M"`, `"N"` round-trip through
/// [`ClassLabel::as_str`] and [`FromStr`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ClassLabel {
    #[serde(rename = "H")]
    Healthy,
    #[serde(rename = "M")]
    Myopathy,
    #[serde(rename = "N")]
    Neuropathy,
}

impl ClassLabel {
    pub const ALL: [ClassLabel; 3] = [
        ClassLabel::Healthy,
        ClassLabel::Myopathy,
        ClassLabel::Neuropathy,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            ClassLabel::Healthy => "H",
            ClassLabel::Myopathy => "M",
            ClassLabel::Neuropathy => "N",
        }
    }

    /// Position in the canonical H, M, N ordering.
    pub fn index(&self) -> usize {
        match self {
            ClassLabel::Healthy => 0,
            ClassLabel::Myopathy => 1,
            ClassLabel::Neuropathy => 2,
        }
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClassLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "H" => Ok(ClassLabel::Healthy),
            "M" => Ok(ClassLabel::Myopathy),
            "N" => Ok(ClassLabel::Neuropathy),
            other => Err(Error::UnknownLabel(other.to_string())),
        }
    }
}

/// Uniformly sampled real-valued signal.
///
/// The time coordinate is the sample index; `sampling_rate` converts it to
/// seconds where needed. Amplitude is treated as unitless: source recordings
/// vary in their reported units, and every downstream consumer here (the
/// envelope chain, visibility criteria) is invariant to a fixed amplitude
/// scale.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeSeries {
    pub samples: Vec<f64>,
    pub sampling_rate: f64,
    pub source_id: String,
    pub label: Option<ClassLabel>,
}

impl TimeSeries {
    /// Builds a series, enforcing the type invariants: non-empty samples,
    /// positive sampling rate, all values finite.
    pub fn new(
        samples: Vec<f64>,
        sampling_rate: f64,
        source_id: impl Into<String>,
        label: Option<ClassLabel>,
    ) -> Result<Self> {
        let source_id = source_id.into();
        if samples.is_empty() {
            return Err(Error::EmptyInput(source_id));
        }
        if !(sampling_rate > 0.0) || !sampling_rate.is_finite() {
            return Err(Error::InvalidParams(format!(
                "sampling_rate must be positive and finite, got {sampling_rate}"
            )));
        }
        if let Some(i) = samples.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite(format!(
                "{source_id}: sample {i} is {}",
                samples[i]
            )));
        }
        Ok(Self {
            samples,
            sampling_rate,
            source_id,
            label,
        })
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    /// Same metadata, new sample values. Panics in debug builds if the
    /// replacement contains non-finite values.
    pub(crate) fn with_samples(&self, samples: Vec<f64>) -> TimeSeries {
        debug_assert!(samples.iter().all(|v| v.is_finite()));
        TimeSeries {
            samples,
            sampling_rate: self.sampling_rate,
            source_id: self.source_id.clone(),
            label: self.label,
        }
    }
}

/// One dataset entry: a series file plus its label and sampling rate.
#[derive(Debug, Clone, PartialEq)]
pub struct ManifestEntry {
    pub path: String,
    pub label: ClassLabel,
    pub sampling_rate: f64,
}

/// Ordered list of dataset entries with unique paths.
#[derive(Debug, Clone, Default)]
pub struct DatasetManifest {
    pub entries: Vec<ManifestEntry>,
}

impl DatasetManifest {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of entries carrying each label, in canonical H, M, N order.
    pub fn class_counts(&self) -> [usize; 3] {
        let mut counts = [0usize; 3];
        for e in &self.entries {
            counts[e.label.index()] += 1;
        }
        counts
    }
}
