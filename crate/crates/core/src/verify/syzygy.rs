use super::gens::{header, monomial_degree, parse_gen_monomial};
use super::grading::coeff_u64;
use super::report::{DegreeRow, GradedReport, Status};
use crate::algebra_core::{FieldOps, Mat, PrimeField};
use crate::error::{Error, Result};
use crate::invariant_eval::{trace_monomials, Evaluator, FastPoint, RankConfig, SamplePoint, Slice, Target};
use crate::poincare::RationalSeries;
use crate::words::WordList;
use num_bigint::BigInt;
use serde::Serialize;

/// Integer polynomial in the traces of a word list.
#[derive(Clone, Debug, PartialEq)]
pub struct SyzygyPolynomial {
    /// Word list the indices refer to, as named in the file.
    pub generators: String,
    pub symbol: String,
    /// Declared bidegree.
    pub degree: Vec<u32>,
    pub terms: Vec<(BigInt, Vec<u32>)>,
    /// Number of generators the file was parsed against.
    pub count: usize,
}

impl SyzygyPolynomial {
    /// Needs the generator count to size exponent vectors; read the
    /// `generators:` header with [`SyzygyPolynomial::generators_file`]
    /// first.
    pub fn parse(text: &str, count: usize) -> Result<Self> {
        let mut generators = None;
        let mut symbol = None;
        let mut degree = None;
        let mut in_rel = false;
        let mut terms = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let body = raw.split('#').next().unwrap().trim();
            if body.is_empty() {
                continue;
            }
            if in_rel {
                let (c, rest) = body.split_once(char::is_whitespace).ok_or_else(|| Error::parse(line, "expected 'coeff  monomial'"))?;
                let c: BigInt = c.parse().map_err(|_| Error::parse(line, format!("bad coefficient '{c}'")))?;
                let sym = symbol.as_deref().ok_or_else(|| Error::parse(line, "relation before 'symbol:'"))?;
                terms.push((c, parse_gen_monomial(rest, sym, count, line)?));
            } else if let Some(v) = header(body, "generators") {
                generators = Some(v.to_string());
            } else if let Some(v) = header(body, "symbol") {
                symbol = Some(v.to_string());
            } else if let Some(v) = header(body, "bidegree") {
                let d = v.split_whitespace().map(|x| x.parse::<u32>()).collect::<std::result::Result<Vec<_>, _>>();
                degree = Some(d.map_err(|_| Error::parse(line, "bad bidegree"))?);
            } else if body == "relation:" {
                in_rel = true;
            } else {
                return Err(Error::parse(line, format!("unexpected line '{body}'")));
            }
        }
        let missing = |k: &str| Error::parse(0, format!("missing '{k}:' header"));
        if terms.is_empty() {
            return Err(Error::parse(0, "empty relation"));
        }
        Ok(SyzygyPolynomial {
            generators: generators.ok_or_else(|| missing("generators"))?,
            symbol: symbol.ok_or_else(|| missing("symbol"))?,
            degree: degree.ok_or_else(|| missing("bidegree"))?,
            terms,
            count,
        })
    }

    /// The `generators:` header alone.
    pub fn generators_file(text: &str) -> Result<String> {
        text.lines()
            .find_map(|l| header(l.trim(), "generators"))
            .map(str::to_string)
            .ok_or_else(|| Error::parse(0, "missing 'generators:' header"))
    }

    /// Every term must have the declared degree under the generator
    /// degrees; a mismatch points at a transcription error.
    pub fn check_homogeneous(&self, degrees: &[Vec<u32>]) -> Result<()> {
        if degrees.len() != self.count {
            return Err(Error::Incompatible(format!("relation uses {} generators, word list has {}", self.count, degrees.len())));
        }
        for (c, m) in &self.terms {
            let d = monomial_degree(m, degrees);
            if d != self.degree {
                return Err(Error::Data(format!(
                    "term {c} {} has degree {d:?}, the relation is declared in degree {:?}",
                    super::gens::fmt_gen_monomial(m, &self.symbol),
                    self.degree
                )));
            }
        }
        Ok(())
    }

    /// Value mod p given generator values in [0, p).
    pub fn evaluate(&self, values: &[u64], p: u64) -> u64 {
        let pb = BigInt::from(p);
        let mut acc = 0u64;
        for (c, m) in &self.terms {
            let c = u64::try_from(((c % &pb) + &pb) % &pb).unwrap();
            let mut t = c;
            for (i, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    t = t * values[i] % p;
                }
            }
            acc = (acc + t) % p;
        }
        acc
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EvalWitness {
    pub prime: u64,
    pub seed: u64,
    pub index: u64,
    pub value: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EvalSummary {
    pub slice: String,
    pub points: usize,
    pub primes: Vec<u64>,
    pub nonzero: Vec<EvalWitness>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SyzygyReport {
    pub degree: Vec<u32>,
    pub terms: usize,
    pub traceless: EvalSummary,
    /// z − (tr z / 2n)·I for z on the untraced slice.
    pub shifted: EvalSummary,
    pub origin_zero: bool,
    pub ranks: GradedReport,
    pub ok: bool,
}

impl SyzygyReport {
    pub fn text(&self) -> String {
        let mut s = format!("relation: {} terms, degree {:?}\n", self.terms, self.degree);
        for e in [&self.traceless, &self.shifted] {
            s += &format!("{}: {} points x {} primes, {} nonzero\n", e.slice, e.points, e.primes.len(), e.nonzero.len());
            for w in &e.nonzero {
                s += &format!("  p={} seed={} index={} value={}\n", w.prime, w.seed, w.index, w.value);
            }
        }
        s += &format!("origin: {}\n", if self.origin_zero { "0" } else { "NONZERO" });
        s += &self.ranks.text();
        s
    }
}

#[derive(Clone, Debug)]
pub struct SyzygyOptions {
    pub points: usize,
    pub seed: u64,
    /// Independence of the monomials is checked for degrees 1..=this.
    pub independent_through: u32,
    /// Degree of the relation space check (deficiency must be exactly 1).
    pub relation_degree: Option<u32>,
    pub rank: RankConfig,
}

impl Default for SyzygyOptions {
    fn default() -> Self {
        SyzygyOptions { points: 100, seed: 1, independent_through: 12, relation_degree: Some(14), rank: RankConfig::default() }
    }
}

fn shift_traceless(pt: &SamplePoint, n: usize, field: PrimeField) -> SamplePoint {
    let mut mats = pt.mats.clone();
    let m = &mats[0];
    let s = m.trace() * field.from_u64(2 * n as u64).inv().expect("2n is a unit");
    let id = Mat::identity(2 * n, &field.zero()).scale(&s);
    mats[0] = m.clone() - id;
    SamplePoint { mats }
}

/// Checks a relation among trace generators: it vanishes on traceless
/// points of the slice (and after removing the trace from general
/// points), and its degree is the first where the generator monomials
/// stop being independent.
pub fn verify_syzygy(rel: &SyzygyPolynomial, words: &WordList, series: &RationalSeries, opts: &SyzygyOptions) -> Result<SyzygyReport> {
    let n = series.meta.n as usize;
    let traceless = Evaluator::new(n, &words.alphabet, Slice::TracelessPi, words.words())?;
    let degrees = traceless.degrees();
    rel.check_homogeneous(&degrees)?;

    let mut t_sum = EvalSummary { slice: Slice::TracelessPi.name().into(), points: opts.points, primes: opts.rank.primes.clone(), nonzero: vec![] };
    let mut s_sum = EvalSummary { slice: "pi, trace removed".into(), points: opts.points, primes: opts.rank.primes.clone(), nonzero: vec![] };
    let pi = Evaluator::new(n, &words.alphabet, Slice::PiSlice, words.words())?;
    for &p in &opts.rank.primes {
        let field = PrimeField::new(p)?;
        for i in 0..opts.points as u64 {
            let v = rel.evaluate(&traceless.generator_values(field, opts.seed, i)?, p);
            if v != 0 {
                t_sum.nonzero.push(EvalWitness { prime: p, seed: opts.seed, index: i, value: v });
            }
            let pt = shift_traceless(&pi.space().point(field, opts.seed, i)?, n, field);
            let fast = FastPoint::new(pi.space().ctx(), &pt)?;
            let vals: Vec<u64> = words.words().iter().map(|w| fast.trace(w)).collect();
            let v = rel.evaluate(&vals, p);
            if v != 0 {
                s_sum.nonzero.push(EvalWitness { prime: p, seed: opts.seed, index: i, value: v });
            }
        }
    }
    let origin_zero = rel.evaluate(&vec![0; degrees.len()], opts.rank.primes.first().copied().unwrap_or(2)) == 0;

    let total = rel.degree.iter().sum::<u32>();
    let table = series.taylor_expand(opts.independent_through.max(opts.relation_degree.unwrap_or(0)));
    let tdeg: Vec<Vec<u32>> = degrees.iter().map(|d| vec![d.iter().sum()]).collect();
    let cfg = RankConfig { slice: Slice::PiSlice, ..opts.rank.clone() };
    let mut rows = Vec::new();
    let mut notes = Vec::new();
    let mut ranks_ok = true;
    let mut check = |d: u32, want_deficiency: usize| -> Result<()> {
        let cols = trace_monomials(&tdeg, &Target::Total(d));
        let rank = pi.column_rank(&cols, &cfg)?.rank;
        let expected = coeff_u64(&table.get(&[d]))?;
        let status = Status::compare(rank as u64, expected);
        if status != Status::Ok || cols.len() - rank != want_deficiency {
            ranks_ok = false;
        }
        if want_deficiency > 0 {
            notes.push(format!("degree {d}: {} monomials, rank {rank}, {} relation(s)", cols.len(), cols.len() - rank));
        }
        rows.push(DegreeRow { degree: vec![d], expected, columns: cols.len(), rank, new_needed: None, generators: None, gap: expected as i64 - rank as i64, status });
        Ok(())
    };
    for d in 1..=opts.independent_through.min(total.saturating_sub(1)) {
        check(d, 0)?;
    }
    if let Some(d) = opts.relation_degree {
        check(d, if d == total { 1 } else { 0 })?;
    }
    let ok = t_sum.nonzero.is_empty() && s_sum.nonzero.is_empty() && origin_zero && ranks_ok;
    Ok(SyzygyReport {
        degree: rel.degree.clone(),
        terms: rel.terms.len(),
        traceless: t_sum,
        shifted: s_sum,
        origin_zero,
        ranks: GradedReport { check: format!("monomials in {} generators against {}", words.len(), series.name), grading: "total".into(), rows, removals: vec![], notes, ok: ranks_ok },
        ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const REL: &str = "generators: g.words\nsymbol: j\nbidegree: 2 2\nrelation:\n1  j1^2 j2\n-1  j3\n";

    #[test]
    fn parse_and_homogeneity() {
        let r = SyzygyPolynomial::parse(REL, 3).unwrap();
        assert_eq!(SyzygyPolynomial::generators_file(REL).unwrap(), "g.words");
        assert_eq!(r.terms.len(), 2);
        assert!(r.check_homogeneous(&[vec![1, 0], vec![0, 2], vec![2, 2]]).is_ok());
        let e = r.check_homogeneous(&[vec![1, 0], vec![0, 2], vec![2, 1]]).unwrap_err();
        assert!(matches!(e, Error::Data(_)));
        assert_eq!(r.evaluate(&[3, 2, 18], 101), 0);
        assert_eq!(r.evaluate(&[3, 2, 17], 101), 1);
        assert!(SyzygyPolynomial::parse("symbol: j\nrelation:\n", 3).is_err());
    }
}
