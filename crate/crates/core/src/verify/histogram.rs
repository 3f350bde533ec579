use super::report::{fmt_degree, GradedReport, Table};
use crate::words::WordList;
use serde::Serialize;
use std::collections::BTreeMap;

/// Number of words of each length.
pub fn degree_histogram(words: &WordList) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for e in &words.entries {
        *h.entry(e.word.len()).or_default() += 1;
    }
    h
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HistogramRow {
    pub degree: Vec<u32>,
    pub required: u64,
    pub shipped: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HistogramReport {
    pub rows: Vec<HistogramRow>,
    pub mismatches: Vec<Vec<u32>>,
    pub ok: bool,
}

impl HistogramReport {
    pub fn table(&self) -> Table {
        let mut t = Table::new(&["degree", "required", "shipped", "status"]);
        for r in &self.rows {
            let st = if r.required == r.shipped as u64 { "OK" } else { "MISMATCH" };
            t.push(vec![fmt_degree(&r.degree), r.required.to_string(), r.shipped.to_string(), st.into()]);
        }
        t
    }
}

/// Compares the number of new generators each degree needs (from a
/// spanning report) with the number of shipped generators there.
/// Degrees where neither is positive are left out.
pub fn verify_generator_degree_histogram(report: &GradedReport) -> HistogramReport {
    let mut rows = Vec::new();
    let mut mismatches = Vec::new();
    for r in &report.rows {
        let (Some(required), Some(shipped)) = (r.new_needed, r.generators) else { continue };
        if required == 0 && shipped == 0 {
            continue;
        }
        if required != shipped as u64 {
            mismatches.push(r.degree.clone());
        }
        rows.push(HistogramRow { degree: r.degree.clone(), required, shipped });
    }
    let ok = report.ok && mismatches.is_empty();
    HistogramReport { rows, mismatches, ok }
}
