//! Serialised forms of weight distributions and enumerators.
//!
//! JSON:
//!
//! ```text
//! {"m": 9, "length": 19682, "dimension": 11,
//!  "weights": [[w, count], ...], "cwe": [[t0, t1, t2, count], ...]}
//! ```
//!
//! `weights` and `cwe` are optional and sorted ascending. CSV emits one table
//! per section with a header row.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::code::{CompleteWeightEnumerator, WeightDistribution};
use crate::gf3::pow3;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumeratorReport {
    pub m: usize,
    pub length: u64,
    pub dimension: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<[u64; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cwe: Option<Vec<[u64; 4]>>,
}

impl EnumeratorReport {
    pub fn new(
        m: usize,
        dimension: usize,
        weights: Option<&WeightDistribution>,
        cwe: Option<&CompleteWeightEnumerator>,
    ) -> EnumeratorReport {
        EnumeratorReport {
            m,
            length: pow3(m) as u64 - 1,
            dimension,
            weights: weights.map(|w| w.entries.iter().map(|(&k, &c)| [k, c]).collect()),
            cwe: cwe.map(|e| e.terms.iter().map(|(t, &c)| [t[0], t[1], t[2], c]).collect()),
        }
    }

    pub fn weight_distribution(&self) -> Option<WeightDistribution> {
        self.weights.as_ref().map(|w| WeightDistribution::from_pairs(w.iter().map(|&[k, c]| (k, c))))
    }

    pub fn complete_weight_enumerator(&self) -> Option<CompleteWeightEnumerator> {
        self.cwe
            .as_ref()
            .map(|e| CompleteWeightEnumerator::from_terms(e.iter().map(|&[a, b, c, n]| ([a, b, c], n))))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialises")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        if let Some(w) = &self.weights {
            out.push_str("weight,count\n");
            for [k, c] in w {
                writeln!(out, "{k},{c}").unwrap();
            }
        }
        if let Some(e) = &self.cwe {
            if !out.is_empty() {
                out.push('\n');
            }
            out.push_str("t0,t1,t2,count\n");
            for [a, b, c, n] in e {
                writeln!(out, "{a},{b},{c},{n}").unwrap();
            }
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("m = {}, length = {}, dimension = {}\n", self.m, self.length, self.dimension);
        if let Some(w) = &self.weights {
            out.push_str("weight distribution:\n");
            for [k, c] in w {
                writeln!(out, "  {k:>8}  x{c}").unwrap();
            }
        }
        if let Some(e) = &self.cwe {
            out.push_str("complete weight enumerator:\n");
            for [a, b, c, n] in e {
                writeln!(out, "  {n} w0^{a} w1^{b} w2^{c}").unwrap();
            }
        }
        out
    }
}
