use super::grading::{coeff_u64, Grading};
use super::report::{DegreeRow, GradedReport, RemovalRow, Status};
use crate::error::Result;
use crate::invariant_eval::{trace_monomials, Evaluator, RankConfig};
use crate::poincare::{RationalSeries, SeriesTable};
use crate::words::WordList;

#[derive(Clone, Debug)]
pub struct MsgOptions {
    /// Largest total degree checked.
    pub bound: u32,
    /// Check single-generator removals for generators up to this total degree.
    pub minimality_bound: Option<u32>,
    pub rank: RankConfig,
}

/// Context shared by the spanning and removal checks.
pub struct MsgCheck {
    ev: Evaluator,
    grading: Grading,
    table: SeriesTable,
    degrees: Vec<Vec<u32>>,
    list: WordList,
}

impl MsgCheck {
    pub fn new(words: &WordList, series: &RationalSeries, bound: u32, rank: &RankConfig) -> Result<Self> {
        let grading = Grading::between(&words.alphabet, series)?;
        let ev = Evaluator::new(series.meta.n as usize, &words.alphabet, rank.slice, words.words())?;
        let degrees = ev.degrees().iter().map(|d| grading.degree(d)).collect();
        Ok(MsgCheck { ev, grading, table: series.taylor_expand(bound), degrees, list: words.clone() })
    }

    pub fn grading(&self) -> Grading {
        self.grading
    }

    pub fn generator_degree(&self, g: usize) -> &[u32] {
        &self.degrees[g]
    }

    fn expected(&self, degree: &[u32]) -> Result<u64> {
        coeff_u64(&self.table.get(degree))
    }

    pub fn row(&self, degree: &[u32], cfg: &RankConfig) -> Result<DegreeRow> {
        let expected = self.expected(degree)?;
        let cols = trace_monomials(&self.degrees, &self.grading.target(degree));
        let rank = self.ev.column_rank(&cols, cfg)?.rank;
        let gens = self.degrees.iter().filter(|d| d.as_slice() == degree).count();
        let singles = cols.iter().filter(|c| c.len() == 1).count();
        let dec_rank = if singles == 0 {
            rank
        } else {
            let dec: Vec<Vec<usize>> = cols.iter().filter(|c| c.len() != 1).cloned().collect();
            self.ev.column_rank(&dec, cfg)?.rank
        };
        Ok(DegreeRow {
            degree: degree.to_vec(),
            expected,
            columns: cols.len(),
            rank,
            new_needed: Some(expected.saturating_sub(dec_rank as u64)),
            generators: Some(gens),
            gap: expected as i64 - rank as i64,
            status: Status::compare(rank as u64, expected),
        })
    }

    /// Rank at the generator's own degree once it is dropped.
    pub fn removal(&self, g: usize, cfg: &RankConfig) -> Result<RemovalRow> {
        let degree = self.degrees[g].clone();
        let expected = self.expected(&degree)?;
        let cols: Vec<Vec<usize>> = trace_monomials(&self.degrees, &self.grading.target(&degree))
            .into_iter()
            .filter(|c| !c.contains(&g))
            .collect();
        let rank = self.ev.column_rank(&cols, cfg)?.rank;
        let entry = &self.list.entries[g];
        Ok(RemovalRow {
            generator: g + 1,
            word: entry.word.display(&self.list.alphabet).to_string(),
            degree,
            expected,
            rank_without: rank,
            needed: (rank as u64) < expected,
        })
    }
}

/// Spanning (and optionally minimality) of a generator set against a
/// Poincaré series.
pub fn verify_msg(words: &WordList, series: &RationalSeries, opts: &MsgOptions) -> Result<GradedReport> {
    let chk = MsgCheck::new(words, series, opts.bound, &opts.rank)?;
    let mut rows = Vec::new();
    for d in chk.grading.degrees(words.alphabet.len(), opts.bound) {
        rows.push(chk.row(&d, &opts.rank)?);
    }
    let mut removals = Vec::new();
    if let Some(mb) = opts.minimality_bound {
        for g in 0..words.len() {
            if chk.degrees[g].iter().sum::<u32>() <= mb.min(opts.bound) {
                removals.push(chk.removal(g, &opts.rank)?);
            }
        }
    }
    let ok = rows.iter().all(|r| r.status == Status::Ok) && removals.iter().all(|r| r.needed);
    Ok(GradedReport {
        check: format!("msg: {} words against {}", words.len(), series.name),
        grading: chk.grading.name().into(),
        rows,
        removals,
        notes: vec![],
        ok,
    })
}
