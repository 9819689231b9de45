//! On-disk instance format: an input pair for one of the three operations,
//! optionally carrying the construction trace that produced it.
//!
//! The payload reuses the `PLFunction` and `SimplePolygon` serde forms, so a
//! file validates on load exactly as the in-memory constructors would.

use std::fs;
use std::io;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::constructions::ConstructionTrace;
use crate::plf::PLFunction;
use crate::polygon::SimplePolygon;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Instance {
    Envelope {
        f1: PLFunction,
        f2: PLFunction,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        trace: Option<ConstructionTrace>,
    },
    Union {
        p1: SimplePolygon,
        p2: SimplePolygon,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        trace: Option<ConstructionTrace>,
    },
    Intersection {
        p1: SimplePolygon,
        p2: SimplePolygon,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        trace: Option<ConstructionTrace>,
    },
}

#[derive(Debug, Error)]
pub enum InstanceError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: io::Error,
    },
    #[error("{path}: {source}")]
    Format {
        path: String,
        #[source]
        source: serde_json::Error,
    },
}

impl Instance {
    pub fn kind_name(&self) -> &'static str {
        match self {
            Instance::Envelope { .. } => "envelope",
            Instance::Union { .. } => "union",
            Instance::Intersection { .. } => "intersection",
        }
    }

    pub fn trace(&self) -> Option<&ConstructionTrace> {
        match self {
            Instance::Envelope { trace, .. }
            | Instance::Union { trace, .. }
            | Instance::Intersection { trace, .. } => trace.as_ref(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("instance serializes");
        out.push('\n');
        out
    }

    pub fn write_file(&self, path: &Path) -> Result<(), InstanceError> {
        fs::write(path, self.to_json()).map_err(|source| InstanceError::Io {
            path: path.display().to_string(),
            source,
        })
    }

    pub fn read_file(path: &Path) -> Result<Instance, InstanceError> {
        let text = fs::read_to_string(path).map_err(|source| InstanceError::Io {
            path: path.display().to_string(),
            source,
        })?;
        serde_json::from_str(&text).map_err(|source| InstanceError::Format {
            path: path.display().to_string(),
            source,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_envelope_extremal, build_union_extremal};
    use crate::rational::{Point2, Rational};

    #[test]
    fn envelope_instance_round_trips_bit_identically() {
        let (f1, f2, trace) = build_envelope_extremal(1, 2, 1, 0).unwrap();
        let inst = Instance::Envelope {
            f1,
            f2,
            trace: Some(trace),
        };
        let text = inst.to_json();
        let back: Instance = serde_json::from_str(&text).unwrap();
        assert_eq!(back, inst);
        assert_eq!(back.to_json(), text);
    }

    #[test]
    fn union_instance_round_trips_bit_identically() {
        let (p1, p2, trace) = build_union_extremal(3, 3, 1, 1).unwrap();
        let inst = Instance::Union {
            p1,
            p2,
            trace: Some(trace),
        };
        let text = inst.to_json();
        let back: Instance = serde_json::from_str(&text).unwrap();
        assert_eq!(back, inst);
        assert_eq!(back.to_json(), text);
    }

    #[test]
    fn missing_trace_field_reads_as_none() {
        let f = PLFunction::affine(Rational::from_int(1), Point2::from_ints(0, 0));
        let inst = Instance::Envelope {
            f1: f.clone(),
            f2: f,
            trace: None,
        };
        let text = inst.to_json();
        assert!(!text.contains("trace"));
        let back: Instance = serde_json::from_str(&text).unwrap();
        assert!(back.trace().is_none());
        assert_eq!(back.kind_name(), "envelope");
    }

    #[test]
    fn invalid_payload_is_rejected_on_read() {
        // Vertices out of x order must fail PLFunction validation during
        // deserialization, not surface as a usable instance.
        let text = r#"{
            "kind": "envelope",
            "f1": {
                "vertices": [["2", "0"], ["1", "1"]],
                "left_slope": "0",
                "right_slope": "0"
            },
            "f2": {
                "vertices": [],
                "left_slope": "0",
                "right_slope": "0",
                "anchor": ["0", "0"]
            }
        }"#;
        assert!(serde_json::from_str::<Instance>(text).is_err());
    }
}
