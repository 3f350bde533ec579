use super::config::{Format, RunConfig};
use super::{Command, DimsArgs, ExpandArgs, MsgArgs, VerifyCmd, WordsCmd};
use crate::data::DataDir;
use crate::error::{Error, Result};
use crate::invariant_eval::{dims_alphabet, empirical_dimension, Target};
use crate::poincare::{total, RationalSeries};
use crate::verify::*;
use crate::words::{canonicalize, enumerate_classes, parse_word, Alphabet, WordList};
use num_bigint::BigInt;
use serde_json::{json, Value};
use std::collections::BTreeMap;

/// A finished report in all three renderings.
pub struct Output {
    pub ok: bool,
    pub text: String,
    pub json: Value,
    pub table: Table,
}

impl Output {
    pub fn render(&self, f: Format) -> String {
        match f {
            Format::Text => self.text.clone(),
            Format::Json => serde_json::to_string_pretty(&self.json).expect("plain data") + "\n",
            Format::Csv => self.table.csv(),
        }
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("plain data")
}

fn with_ok(mut v: Value, ok: bool) -> Value {
    v["ok"] = json!(ok);
    v
}

fn data(cfg: &RunConfig) -> Result<DataDir> {
    match &cfg.data_dir {
        Some(d) => DataDir::open(d),
        None => DataDir::bundled(),
    }
}

fn words(d: &DataDir, name: &str) -> Result<WordList> {
    d.parse_with(name, WordList::parse)
}

pub fn dispatch(cmd: &Command, cfg: &RunConfig) -> Result<Output> {
    match cmd {
        Command::Expand(a) => expand(a, cfg),
        Command::Verify(v) => verify(v, cfg),
        Command::Dims(a) => dims(a, cfg),
        Command::Words(w) => words_cmd(w),
    }
}

fn expand(a: &ExpandArgs, cfg: &RunConfig) -> Result<Output> {
    let s = data(cfg)?.series(&a.fixture)?;
    let mut ok = true;
    let mut text = String::new();
    let mut j = json!({ "series": s.name, "vars": s.var_names(), "bound": a.max_degree });
    if a.check_functional_equation {
        let fe = s.check_functional_equation();
        ok &= fe.holds;
        text += &format!("# functional equation: {}", if fe.holds { "OK" } else { "FAILED" });
        if let (false, Some((sign, shift))) = (fe.holds, &fe.actual) {
            text += &format!(" (the series has sign {sign}, shift {shift:?})");
        }
        if let Some(w) = &fe.witness {
            text += &format!(" (first difference at {:?}: {} vs {})", w.monomial, w.lhs, w.rhs);
        }
        text += "\n";
        j["functional_equation"] = fe.to_json();
    }
    if a.check_palindrome {
        let p = s.numerator_palindrome();
        ok &= p.is_some();
        match p {
            Some(sign) => text += &format!("# palindromic numerator: OK (sign {sign}, degree {:?})\n", s.numerator.max_exponents()),
            None => text += "# palindromic numerator: FAILED\n",
        }
        j["palindrome"] = json!({ "ok": p.is_some(), "sign": p });
    }
    let table = s.taylor_expand(a.max_degree);
    let mut headers: Vec<&str> = s.vars.iter().map(|v| v.name.as_str()).collect();
    headers.push("coefficient");
    let mut t = Table::new(&headers);
    let mut coeffs = Vec::new();
    text += &format!("# {}: {}\n", s.name, headers.join(", "));
    for (m, c) in table.rows() {
        let mut cells: Vec<String> = m.iter().map(|e| e.to_string()).collect();
        cells.push(c.to_string());
        text += &(cells.join(", ") + "\n");
        t.push(cells);
        coeffs.push(json!({ "degree": m, "value": c.to_string() }));
    }
    j["coefficients"] = json!(coeffs);
    Ok(Output { ok, text, json: with_ok(j, ok), table: t })
}

fn msg_report(a: &MsgArgs, cfg: &RunConfig) -> Result<GradedReport> {
    let d = data(cfg)?;
    let w = words(&d, &a.words)?;
    let s = d.series(&a.series)?;
    verify_msg(&w, &s, &MsgOptions { bound: a.max_degree, minimality_bound: a.minimality, rank: cfg.rank() })
}

fn verify(v: &VerifyCmd, cfg: &RunConfig) -> Result<Output> {
    match v {
        VerifyCmd::Msg(a) => {
            let r = msg_report(a, cfg)?;
            Ok(Output { ok: r.ok, text: r.text(), json: to_json(&r), table: r.table() })
        }
        VerifyCmd::Histogram(a) => {
            let r = msg_report(a, cfg)?;
            let h = verify_generator_degree_histogram(&r);
            let mut text = h.table().text();
            if !r.ok {
                text += "note: the generators do not span; required counts are lower bounds\n";
            }
            text += if h.ok { "result: OK\n" } else { "result: FAILED\n" };
            Ok(Output { ok: h.ok, text, json: to_json(&h), table: h.table() })
        }
        VerifyCmd::HsopJacobian { words: wn, point } => {
            let d = data(cfg)?;
            let w = words(&d, wn)?;
            let z = d.parse_with(point, parse_qmat)?;
            let jw = verify_hsop_jacobian(&w, &z)?;
            let full = jw.functions().min(jw.parameters());
            let ok = jw.full_rank();
            let text = format!(
                "{} functions, {} parameters\nrank {}/{} {}\n",
                jw.functions(),
                jw.parameters(),
                jw.rank,
                full,
                if ok { "OK" } else { "DEFICIENT" }
            );
            let mut t = Table::new(&["functions", "parameters", "rank", "status"]);
            t.push(vec![jw.functions().to_string(), jw.parameters().to_string(), jw.rank.to_string(), if ok { "OK".into() } else { "DEFICIENT".into() }]);
            Ok(Output { ok, text, json: jw.to_json(), table: t })
        }
        VerifyCmd::ModuleBasis { basis, hsop, series, max_degree, search } => {
            let d = data(cfg)?;
            let (b, g) = d.parse_with(basis, |text| {
                let gname = ModuleBasis::generators_file(text)?;
                let g = words(&d, &gname)?;
                Ok((ModuleBasis::parse(text, g.len())?, g))
            })?;
            let h = words(&d, hsop)?;
            let s = d.series(series)?;
            let r = verify_module_basis(&b, &g, &h, &s, &ModuleOptions { bound: *max_degree, search: *search, rank: cfg.rank() })?;
            let mut text = r.text();
            text += if r.ok { "overall: OK\n" } else { "overall: FAILED\n" };
            Ok(Output { ok: r.ok, text, json: to_json(&r), table: r.spanning.table() })
        }
        VerifyCmd::Syzygy { relation, series, points, independent_through, relation_degree } => {
            let d = data(cfg)?;
            let (rel, w) = d.parse_with(relation, |text| {
                let w = words(&d, &SyzygyPolynomial::generators_file(text)?)?;
                Ok((SyzygyPolynomial::parse(text, w.len())?, w))
            })?;
            let s = d.series(series)?;
            let opts = SyzygyOptions {
                points: *points,
                seed: cfg.seed,
                independent_through: *independent_through,
                relation_degree: Some(*relation_degree),
                rank: cfg.rank(),
            };
            let r = verify_syzygy(&rel, &w, &s, &opts)?;
            let mut text = r.text();
            text += if r.ok { "overall: OK\n" } else { "overall: FAILED\n" };
            Ok(Output { ok: r.ok, text, json: to_json(&r), table: r.ranks.table() })
        }
        VerifyCmd::Gl2 { words: wn, degree } => {
            let w = words(&data(cfg)?, wn)?;
            if w.alphabet.len() != 2 {
                return Err(Error::Incompatible(format!("bidegrees need two letters, alphabet is {}", w.alphabet)));
            }
            let mut by: BTreeMap<u32, Vec<(u32, u32)>> = BTreeMap::new();
            for e in &w.entries {
                let m = e.word.multidegree(2);
                by.entry(m[0] + m[1]).or_default().push((m[0], m[1]));
            }
            if let Some(d) = degree {
                by.retain(|k, _| k == d);
            }
            let mut t = Table::new(&["degree", "weights", "decomposition"]);
            let mut rows = Vec::new();
            for (d, ws) in &by {
                let dec = decompose_gl2(ws, *d)?;
                t.push(vec![d.to_string(), ws.len().to_string(), dec.to_string()]);
                rows.push(to_json(&dec));
            }
            Ok(Output { ok: true, text: t.text(), json: json!({ "modules": rows, "ok": true }), table: t })
        }
    }
}

fn dims(a: &DimsArgs, cfg: &RunConfig) -> Result<Output> {
    let alphabet = dims_alphabet(a.k1, a.k2)?;
    let targets: Vec<Target> = if let Some(b) = &a.bidegree {
        vec![Target::Exact(b.clone())]
    } else if let Some(m) = &a.multidegree {
        vec![Target::Exact(m.clone())]
    } else if let Some(t) = a.total {
        vec![Target::Total(t)]
    } else if let Some(t) = a.max_total {
        (0..=t).map(Target::Total).collect()
    } else {
        return Err(Error::Config("give --bidegree, --multidegree, --total or --max-total".into()));
    };
    for t in &targets {
        if let Target::Exact(v) = t {
            if v.len() != alphabet.len() {
                return Err(Error::Incompatible(format!("degree {v:?} has {} entries, alphabet {alphabet} has {} letters", v.len(), alphabet.len())));
            }
        }
    }
    let series = a.series.as_deref().map(|s| data(cfg)?.series(s)).transpose()?;
    if let Some(s) = &series {
        if s.meta.n as usize != a.n {
            return Err(Error::Incompatible(format!("series '{}' is for n = {}", s.name, s.meta.n)));
        }
    }
    let bound = targets.iter().map(|t| t.total()).max().unwrap_or(0);
    let table = series.as_ref().map(|s| s.taylor_expand(bound));
    let expected = |t: &Target, s: &RationalSeries| -> Option<BigInt> {
        let tb = table.as_ref()?;
        match t {
            Target::Exact(v) if v.len() == s.nvars() => Some(tb.get(v)),
            Target::Exact(_) => None,
            Target::Total(d) => Some(tb.coeffs.iter().filter(|(m, _)| total(m) == *d).map(|(_, c)| c.clone()).sum()),
        }
    };
    let mut headers = vec!["degree", "columns", "rank"];
    if series.is_some() {
        headers.extend(["expected", "status"]);
    }
    let mut t = Table::new(&headers);
    let mut rows = Vec::new();
    let mut ok = true;
    let rank_cfg = cfg.rank();
    for target in &targets {
        let (cols, rep) = empirical_dimension(a.n, &alphabet, target, &rank_cfg)?;
        let label = target.to_string();
        let mut cells = vec![label.clone(), cols.to_string(), rep.rank.to_string()];
        let mut row = json!({ "degree": label, "columns": cols, "rank": rep.rank });
        if let Some(s) = &series {
            match expected(target, s) {
                Some(e) => {
                    let good = e == BigInt::from(rep.rank);
                    ok &= good;
                    cells.push(e.to_string());
                    cells.push(if good { "OK".into() } else { "MISMATCH".into() });
                    row["expected"] = json!(e.to_string());
                    row["ok"] = json!(good);
                }
                None => {
                    cells.extend(["-".to_string(), "-".to_string()]);
                }
            }
        }
        t.push(cells);
        rows.push(row);
    }
    let text = format!("n={} alphabet {}\n{}", a.n, alphabet, t.text());
    Ok(Output { ok, text, json: json!({ "n": a.n, "alphabet": alphabet.to_string(), "rows": rows, "ok": ok }), table: t })
}

fn words_cmd(w: &WordsCmd) -> Result<Output> {
    match w {
        WordsCmd::Enumerate { alphabet, max_degree, multidegree } => {
            let a = Alphabet::parse(alphabet)?;
            if let Some(m) = multidegree {
                if m.len() != a.len() {
                    return Err(Error::Incompatible(format!("multidegree needs {} entries", a.len())));
                }
            }
            let classes = enumerate_classes(&a, *max_degree, multidegree.as_deref());
            let mut t = Table::new(&["length", "word"]);
            let mut list = Vec::new();
            let mut text = String::new();
            for c in &classes {
                let s = c.canon.display(&a).to_string();
                text += &format!("{s}\n");
                t.push(vec![c.canon.len().to_string(), s.clone()]);
                list.push(s);
            }
            text += &format!("# {} classes\n", classes.len());
            Ok(Output { ok: true, text, json: json!({ "alphabet": a.to_string(), "words": list, "ok": true }), table: t })
        }
        WordsCmd::Canon { alphabet, words } => {
            let a = Alphabet::parse(alphabet)?;
            let mut t = Table::new(&["word", "canon", "sign"]);
            let mut rows = Vec::new();
            let mut text = String::new();
            for w in words {
                let c = canonicalize(&parse_word(w, &a)?, &a)?;
                let canon = c.canon.display(&a).to_string();
                let sign = if c.is_zero() { "zero".to_string() } else { c.sign.to_string() };
                text += &format!("{w} -> {canon} ({})\n", if c.is_zero() { "trace vanishes".to_string() } else { format!("sign {}", c.sign) });
                t.push(vec![w.clone(), canon.clone(), sign]);
                rows.push(json!({ "word": w, "canon": canon, "sign": c.sign }));
            }
            Ok(Output { ok: true, text, json: json!({ "alphabet": a.to_string(), "classes": rows, "ok": true }), table: t })
        }
    }
}
