use super::gens::{expand_indices, fmt_gen_monomial, header, monomial_degree, parse_gen_monomial};
use super::grading::{coeff_u64, fits, Grading};
use super::report::{DegreeRow, GradedReport, Status};
use crate::error::{Error, Result};
use crate::invariant_eval::{default_samples, trace_monomials, Evaluator, RankConfig, Reducer};
use crate::algebra_core::PrimeField;
use crate::poincare::{Monomial, RationalSeries, SeriesTable};
use crate::words::WordList;
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BasisItem {
    /// Exponents over the generators.
    Product(Vec<u32>),
    /// `?`: an element whose degree is known only from the series.
    Unknown,
}

/// Candidate module basis: products of the traces of a word list.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuleBasis {
    pub generators: String,
    pub symbol: String,
    pub items: Vec<BasisItem>,
}

impl ModuleBasis {
    pub fn generators_file(text: &str) -> Result<String> {
        text.lines()
            .find_map(|l| header(l.trim(), "generators"))
            .map(str::to_string)
            .ok_or_else(|| Error::parse(0, "missing 'generators:' header"))
    }

    pub fn parse(text: &str, count: usize) -> Result<Self> {
        let mut generators = None;
        let mut symbol: Option<String> = None;
        let mut in_basis = false;
        let mut items = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let body = raw.split('#').next().unwrap().trim();
            if body.is_empty() {
                continue;
            }
            if in_basis {
                if body == "?" {
                    items.push(BasisItem::Unknown);
                } else {
                    let sym = symbol.as_deref().ok_or_else(|| Error::parse(line, "basis before 'symbol:'"))?;
                    items.push(BasisItem::Product(parse_gen_monomial(body, sym, count, line)?));
                }
            } else if let Some(v) = header(body, "generators") {
                generators = Some(v.to_string());
            } else if let Some(v) = header(body, "symbol") {
                symbol = Some(v.to_string());
            } else if body == "basis:" {
                in_basis = true;
            } else {
                return Err(Error::parse(line, format!("unexpected line '{body}'")));
            }
        }
        if items.is_empty() {
            return Err(Error::parse(0, "empty basis"));
        }
        Ok(ModuleBasis {
            generators: generators.ok_or_else(|| Error::parse(0, "missing 'generators:' header"))?,
            symbol: symbol.ok_or_else(|| Error::parse(0, "missing 'symbol:' header"))?,
            items,
        })
    }

    pub fn unknowns(&self) -> usize {
        self.items.iter().filter(|i| **i == BasisItem::Unknown).count()
    }
}

/// Degrees of the basis against the numerator, and of the parameters
/// against the denominator.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StaticCheck {
    pub items: usize,
    pub numerator_terms: u64,
    pub matched: usize,
    /// Basis degrees with no numerator monomial left to match.
    pub unmatched: Vec<Vec<u32>>,
    /// Numerator monomials no basis element accounts for.
    pub missing: Vec<Vec<u32>>,
    pub distinct: bool,
    pub denominator_matches: bool,
    /// Degree assigned to `?` entries from what the numerator leaves over.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub inferred: Vec<Vec<u32>>,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PlaceholderSearch {
    pub degree: Vec<u32>,
    pub expected: u64,
    pub known_rank: usize,
    pub tried: usize,
    /// Products of generators that complete the rank at this degree.
    pub completing: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ModuleReport {
    #[serde(rename = "static")]
    pub static_check: StaticCheck,
    pub spanning: GradedReport,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub searches: Vec<PlaceholderSearch>,
    pub ok: bool,
}

impl ModuleReport {
    pub fn text(&self) -> String {
        let s = &self.static_check;
        let mut out = format!(
            "static: {} elements, {}/{} numerator monomials matched, distinct {}, denominator {}\n",
            s.items,
            s.matched,
            s.numerator_terms,
            if s.distinct { "yes" } else { "no" },
            if s.denominator_matches { "matches" } else { "MISMATCH" }
        );
        for d in &s.unmatched {
            out += &format!("  unmatched basis degree {d:?}\n");
        }
        for d in &s.missing {
            out += &format!("  numerator monomial {d:?} not covered\n");
        }
        for d in &s.inferred {
            out += &format!("  placeholder degree {d:?}\n");
        }
        out += &self.spanning.text();
        for c in &self.searches {
            out += &format!(
                "placeholder at {:?}: known rank {}/{}, {} of {} candidates complete it\n",
                c.degree,
                c.known_rank,
                c.expected,
                c.completing.len(),
                c.tried
            );
            for w in &c.completing {
                out += &format!("  {w}\n");
            }
        }
        out
    }
}

fn multiset(series_poly: &crate::poincare::SparsePoly) -> Result<BTreeMap<Monomial, u64>> {
    series_poly.terms().map(|(m, c)| Ok((m.clone(), coeff_u64(c)?))).collect()
}

/// Free-module check of `basis` over the parameters `hsop`.
pub struct ModuleCheck {
    basis: ModuleBasis,
    grading: Grading,
    /// Letter multidegrees of the basis generators then the parameters.
    letter_degrees: Vec<Vec<u32>>,
    ngens: usize,
    /// Graded degree of every item; `None` for an unresolved `?`.
    item_degrees: Vec<Option<Vec<u32>>>,
    ev: Evaluator,
    table: SeriesTable,
    static_check: StaticCheck,
    symbol: String,
}

impl ModuleCheck {
    pub fn new(basis: &ModuleBasis, gens: &WordList, hsop: &WordList, series: &RationalSeries, bound: u32, rank: &RankConfig) -> Result<Self> {
        if gens.alphabet != hsop.alphabet {
            return Err(Error::Incompatible(format!("basis generators use '{}', parameters use '{}'", gens.alphabet, hsop.alphabet)));
        }
        let grading = Grading::between(&gens.alphabet, series)?;
        let k = gens.alphabet.len();
        let mut all = gens.words();
        all.extend(hsop.words());
        let letter_degrees: Vec<Vec<u32>> = all.iter().map(|w| w.multidegree(k)).collect();
        let ngens = gens.len();
        let mut item_degrees: Vec<Option<Vec<u32>>> = basis
            .items
            .iter()
            .map(|it| match it {
                BasisItem::Product(e) => Some(grading.degree(&monomial_degree(e, &letter_degrees[..ngens]))),
                BasisItem::Unknown => None,
            })
            .collect();

        let mut left = multiset(&series.numerator)?;
        let numerator_terms = left.values().sum();
        let mut unmatched = Vec::new();
        let mut matched = 0;
        for d in item_degrees.iter().flatten() {
            match left.get_mut(d) {
                Some(c) if *c > 0 => {
                    *c -= 1;
                    matched += 1;
                }
                _ => unmatched.push(d.clone()),
            }
        }
        let mut missing: Vec<Vec<u32>> = left.iter().flat_map(|(m, &c)| std::iter::repeat(m.clone()).take(c as usize)).collect();
        let mut inferred = Vec::new();
        if basis.unknowns() > 0 && basis.unknowns() == missing.len() && unmatched.is_empty() {
            let mut fill = missing.drain(..);
            for d in item_degrees.iter_mut().filter(|d| d.is_none()) {
                let m = fill.next().unwrap();
                inferred.push(m.clone());
                *d = Some(m);
            }
            matched += inferred.len();
        }
        let mut known: Vec<&Vec<u32>> = item_degrees.iter().flatten().collect();
        known.sort();
        let distinct = known.windows(2).all(|w| w[0] != w[1]);
        let mut den: Vec<Vec<u32>> = series.denominator.clone();
        den.sort();
        let mut par: Vec<Vec<u32>> = letter_degrees[ngens..].iter().map(|d| grading.degree(d)).collect();
        par.sort();
        let denominator_matches = den == par;
        let ok = unmatched.is_empty() && missing.is_empty() && denominator_matches;
        let static_check = StaticCheck { items: basis.items.len(), numerator_terms, matched, unmatched, missing, distinct, denominator_matches, inferred, ok };

        let ev = Evaluator::new(series.meta.n as usize, &gens.alphabet, rank.slice, all)?;
        let reach = static_check.inferred.iter().map(|d| d.iter().sum::<u32>()).fold(bound, u32::max);
        Ok(ModuleCheck {
            basis: basis.clone(),
            grading,
            letter_degrees,
            ngens,
            item_degrees,
            ev,
            table: series.taylor_expand(reach),
            static_check,
            symbol: basis.symbol.clone(),
        })
    }

    pub fn static_check(&self) -> &StaticCheck {
        &self.static_check
    }

    /// Columns at `degree` from the known items: item × parameter monomial.
    fn columns(&self, degree: &[u32]) -> Vec<Vec<usize>> {
        let par: Vec<Vec<u32>> = self.letter_degrees[self.ngens..].to_vec();
        let mut cols = Vec::new();
        for (it, d) in self.basis.items.iter().zip(&self.item_degrees) {
            let (BasisItem::Product(e), Some(d)) = (it, d) else { continue };
            if !fits(d, degree) {
                continue;
            }
            let rest: Vec<u32> = degree.iter().zip(d).map(|(a, b)| a - b).collect();
            let base = expand_indices(e);
            for m in trace_monomials(&par, &self.grading.target(&rest)) {
                let mut c = base.clone();
                c.extend(m.into_iter().map(|j| j + self.ngens));
                cols.push(c);
            }
        }
        cols
    }

    pub fn row(&self, degree: &[u32], cfg: &RankConfig) -> Result<DegreeRow> {
        let expected = coeff_u64(&self.table.get(degree))?;
        let cols = self.columns(degree);
        let rank = self.ev.column_rank(&cols, cfg)?.rank;
        Ok(DegreeRow {
            degree: degree.to_vec(),
            expected,
            columns: cols.len(),
            rank,
            new_needed: None,
            generators: None,
            gap: expected as i64 - rank as i64,
            status: Status::compare(rank as u64, expected),
        })
    }

    /// Degrees of the `?` entries, once inferred.
    pub fn unknown_degrees(&self) -> Vec<Vec<u32>> {
        self.basis
            .items
            .iter()
            .zip(&self.item_degrees)
            .filter(|(it, _)| **it == BasisItem::Unknown)
            .filter_map(|(_, d)| d.clone())
            .collect()
    }

    /// Products of generators of `degree` lying outside the span of the
    /// known columns, under every configured prime.
    pub fn search(&self, degree: &[u32], cfg: &RankConfig) -> Result<PlaceholderSearch> {
        let expected = coeff_u64(&self.table.get(degree))?;
        let known = self.columns(degree);
        let cands = trace_monomials(&self.letter_degrees[..self.ngens], &self.grading.target(degree));
        if let Some(limit) = cfg.max_columns {
            if known.len() + cands.len() > limit {
                return Err(Error::TooManyColumns { cols: known.len() + cands.len(), limit });
            }
        }
        let seed = *cfg.seeds.first().ok_or_else(|| Error::Config("need a seed".into()))?;
        let points = default_samples(expected as usize);
        let mut keep = vec![true; cands.len()];
        let mut known_rank = 0;
        for &p in &cfg.primes {
            let field = PrimeField::new(p)?;
            let vals: Vec<Vec<u64>> = (0..points as u64).map(|i| self.ev.generator_values(field, seed, i)).collect::<Result<_>>()?;
            let column = |c: &[usize]| -> Vec<u64> { vals.iter().map(|g| c.iter().fold(1u64, |a, &j| a * g[j] % p)).collect() };
            let mut red = Reducer::new(p, points);
            for c in &known {
                red.insert(column(c));
            }
            known_rank = red.rank();
            for (k, c) in cands.iter().enumerate() {
                if keep[k] {
                    keep[k] = red.is_independent(column(c));
                }
            }
        }
        let completing = cands
            .iter()
            .zip(&keep)
            .filter(|(_, &k)| k)
            .map(|(c, _)| {
                let mut e = vec![0u32; self.ngens];
                for &j in c {
                    e[j] += 1;
                }
                fmt_gen_monomial(&e, &self.symbol)
            })
            .collect();
        Ok(PlaceholderSearch { degree: degree.to_vec(), expected, known_rank, tried: cands.len(), completing })
    }
}

#[derive(Clone, Debug)]
pub struct ModuleOptions {
    pub bound: u32,
    /// Look for completions of `?` entries whose degree is known.
    pub search: bool,
    pub rank: RankConfig,
}

pub fn verify_module_basis(
    basis: &ModuleBasis,
    gens: &WordList,
    hsop: &WordList,
    series: &RationalSeries,
    opts: &ModuleOptions,
) -> Result<ModuleReport> {
    let chk = ModuleCheck::new(basis, gens, hsop, series, opts.bound, &opts.rank)?;
    let mut rows = Vec::new();
    for d in chk.grading.degrees(gens.alphabet.len(), opts.bound) {
        rows.push(chk.row(&d, &opts.rank)?);
    }
    let mut notes = Vec::new();
    let unknown = chk.unknown_degrees();
    if basis.unknowns() > unknown.len() {
        notes.push(format!("{} unresolved element(s) could not be placed from the numerator", basis.unknowns() - unknown.len()));
    }
    let mut searches = Vec::new();
    for d in &unknown {
        if opts.search {
            searches.push(chk.search(d, &opts.rank)?);
        } else {
            notes.push(format!("unresolved element of degree {}; columns for it are left out", super::report::fmt_degree(d)));
        }
    }
    let span_ok = rows.iter().all(|r| r.status == Status::Ok);
    let spanning = GradedReport {
        check: format!("module basis: {} elements over {} parameters against {}", basis.items.len(), hsop.len(), series.name),
        grading: chk.grading.name().into(),
        rows,
        removals: vec![],
        notes,
        ok: span_ok,
    };
    let ok = chk.static_check.ok && span_ok;
    Ok(ModuleReport { static_check: chk.static_check.clone(), spanning, searches, ok })
}
