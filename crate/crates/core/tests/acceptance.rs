//! One line per acceptance criterion; exits non-zero when any fails.

use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sptrace::algebra_core::{quat_embed, quat_trace, Fp, Mat, PrimeField, QuatMat, Quaternion, SymplecticContext, DEFAULT_PRIMES};
use sptrace::data::DataDir;
use sptrace::invariant_eval::{dims_alphabet, empirical_dimension, eval_trace, random_symplectic, RankConfig, RankReport, SampleSpace, Slice, Target};
use sptrace::poincare::{palindromic_complete, RationalSeries};
use sptrace::verify::*;
use sptrace::words::{canonicalize, Alphabet, Letter, Word, WordList};
use std::time::{Duration, Instant};

type Outcome = Result<String, String>;

const TABLE1: [&[i64]; 12] = [
    &[1],
    &[1],
    &[3, 3],
    &[4, 8],
    &[9, 17, 28],
    &[11, 33, 59],
    &[20, 58, 133, 156],
    &[25, 97, 238, 359],
    &[41, 153, 437, 730, 906],
    &[50, 233, 703, 1372, 1907],
    &[75, 342, 1143, 2398, 3806, 4335],
    &[91, 489, 1707, 3978, 6867, 8942],
];

fn data() -> DataDir {
    DataDir::bundled().expect("bundled data")
}

fn words(name: &str) -> Result<WordList, String> {
    data().parse_with(name, WordList::parse).map_err(|e| e.to_string())
}

fn series(name: &str) -> Result<RationalSeries, String> {
    data().series(name).map_err(|e| e.to_string())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

// A run that reaches full column rank stops there; a deficient one must
// show trailing rows with no increase.
fn stabilized(rep: &RankReport) -> bool {
    rep.runs.iter().all(|r| r.rank == rep.columns || r.last_increase.map_or(true, |i| i + 1 < r.rows))
}

fn table1() -> Outcome {
    let t = series("n2_k2_st.series")?.taylor_expand(11);
    let mut n = 0;
    for (k, row) in TABLE1.iter().enumerate() {
        for (i, &c) in row.iter().enumerate() {
            let j = k - i;
            for (a, b) in [(i, j), (j, i)] {
                let got = t.get(&[a as u32, b as u32]);
                ensure(got == BigInt::from(c), || format!("c{a},{b} = {got}, table has {c}"))?;
                n += 1;
            }
        }
    }
    Ok(format!("{n} coefficients, c5,6 = {}", t.get(&[5, 6])))
}

fn palindromes() -> Outcome {
    let s = series("n2_k2_st.series")?;
    ensure(s.numerator.len() == 284, || format!("N(C;s,t) has {} terms", s.numerator.len()))?;
    let again = palindromic_complete(&s.numerator, &[23, 23]).map_err(|e| e.to_string())?;
    ensure(again == s.numerator, || "completion is not stable".into())?;
    let t = series("n2_0p3k_t.series")?;
    for d in 0..=28u32 {
        ensure(t.numerator.coeff(&[d]) == t.numerator.coeff(&[28 - d]), || format!("N(0,3;t) asymmetric at t^{d}"))?;
    }
    Ok("284 terms; N(0,3;t) symmetric about 14".into())
}

fn functional_equation() -> Outcome {
    let names = ["n2_3p0k", "n2_2p1k", "n2_1p2k", "n3_2p0k", "n3_1p1k", "n3_0p2k", "n3_3p0k"];
    let mut failed = Vec::new();
    for name in names {
        let fe = series(&format!("{name}.series"))?.check_functional_equation();
        if !fe.holds {
            let actual = fe.actual.map(|(s, e)| format!("actual sign {s} shift {e:?}")).unwrap_or_else(|| "no reciprocity".into());
            failed.push(format!("{name} (expected sign {} shift {:?}, {actual})", fe.expected_sign, fe.expected_shift));
        }
    }
    if failed.is_empty() {
        Ok(format!("{} fixtures", names.len()))
    } else {
        Err(format!("{}/{} hold; fails on {}", names.len() - failed.len(), names.len(), failed.join(", ")))
    }
}

fn compare_dims(n: usize, k: usize, fixture: &str, targets: &[Vec<u32>], cfg: &RankConfig) -> Result<usize, String> {
    let alphabet = dims_alphabet(k, k).map_err(|e| e.to_string())?;
    let table = series(fixture)?.taylor_expand(targets.iter().flatten().copied().max().unwrap_or(0));
    for t in targets {
        let (_, rep) = empirical_dimension(n, &alphabet, &Target::Exact(t.clone()), cfg).map_err(|e| e.to_string())?;
        let want = table.get(t);
        ensure(BigInt::from(rep.rank) == want, || format!("n={n} degree {t:?}: rank {} vs {want}", rep.rank))?;
        ensure(rep.runs.len() == 4 && rep.runs.iter().all(|r| r.rank == rep.rank), || format!("n={n} degree {t:?}: runs disagree"))?;
        ensure(stabilized(&rep), || format!("n={n} degree {t:?}: rank still rising at the last row"))?;
    }
    Ok(targets.len())
}

fn empirical_dims() -> Outcome {
    let cfg = RankConfig::default();
    let six = words("six.words")?;
    let rep = verify_msg(&six, &series("n2_k1.series")?, &MsgOptions { bound: 8, minimality_bound: None, rank: cfg.clone() }).map_err(|e| e.to_string())?;
    ensure(rep.ok, || format!("six traces:\n{}", rep.text()))?;
    let single: Vec<Vec<u32>> = (0..=8).map(|d| vec![d]).collect();
    let mut checked = compare_dims(2, 1, "n2_k1.series", &single, &cfg)?;
    checked += compare_dims(3, 1, "n3_k1_star.series", &single, &cfg)?;
    let pairs: Vec<Vec<u32>> = (0..=5u32).flat_map(|k| (0..=k).map(move |i| vec![i, k - i])).collect();
    checked += compare_dims(2, 2, "n2_k2_st.series", &pairs, &cfg)?;
    Ok(format!("six traces span through 8; {checked} degrees agree over 2 primes x 2 seeds"))
}

fn msg() -> Outcome {
    let cfg = RankConfig::default();
    let w1 = words("w1.words")?;
    let r = verify_msg(&w1, &series("n3_k1_star.series")?, &MsgOptions { bound: 10, minimality_bound: Some(8), rank: cfg.clone() })
        .map_err(|e| e.to_string())?;
    ensure(r.ok, || r.text())?;
    let last = r.rows.last().ok_or("no rows")?;
    ensure(last.expected == 245 && last.rank == 245, || format!("degree 10: {} of {}", last.rank, last.expected))?;
    ensure(!r.removals.is_empty() && r.removals.iter().all(|x| x.needed), || "a generator of degree <= 8 is redundant".into())?;
    let m = words("msg136.words")?;
    let r2 = verify_msg(&m, &series("n2_k2_st.series")?, &MsgOptions { bound: 5, minimality_bound: None, rank: cfg }).map_err(|e| e.to_string())?;
    ensure(r2.ok, || r2.text())?;
    Ok(format!("W1 spans to 10 (245), {} removals needed; 136 traces span {} bidegrees", r.removals.len(), r2.rows.len()))
}

fn jacobian() -> Outcome {
    let w = words("w2_hash.words")?;
    let z = data().parse_with("hsop_point.qmat", parse_qmat).map_err(|e| e.to_string())?;
    let j = verify_hsop_jacobian(&w, &z).map_err(|e| e.to_string())?;
    ensure(j.rank == 15 && j.full_rank(), || format!("rank {}", j.rank))?;
    Ok(format!("rank {}/{}", j.rank, j.parameters()))
}

fn hironaka() -> Outcome {
    let text = data().read("j_basis.basis").map_err(|e| e.to_string())?;
    let gens = words(&ModuleBasis::generators_file(&text).map_err(|e| e.to_string())?)?;
    let basis = ModuleBasis::parse(&text, gens.len()).map_err(|e| e.to_string())?;
    let opts = ModuleOptions { bound: 10, search: false, rank: RankConfig::default() };
    let r = verify_module_basis(&basis, &gens, &words("w2_hash.words")?, &series("n3_1p1k_star.series")?, &opts).map_err(|e| e.to_string())?;
    ensure(r.ok, || r.text())?;
    let s = &r.static_check;
    ensure(s.items == 36 && s.matched == 36, || format!("{} of {} matched", s.matched, s.items))?;
    Ok(format!("36/36 matched; spanning over {} bidegrees", r.spanning.rows.len()))
}

fn syzygy() -> Outcome {
    let text = data().read("syzygy_6_8.poly").map_err(|e| e.to_string())?;
    let w = words(&SyzygyPolynomial::generators_file(&text).map_err(|e| e.to_string())?)?;
    let rel = SyzygyPolynomial::parse(&text, w.len()).map_err(|e| e.to_string())?;
    ensure(rel.degree == [6, 8], || format!("bidegree {:?}", rel.degree))?;
    let opts = SyzygyOptions::default();
    let r = verify_syzygy(&rel, &w, &series("n3_k1_star.series")?, &opts).map_err(|e| e.to_string())?;
    ensure(r.ok, || r.text())?;
    ensure(r.traceless.nonzero.is_empty(), || "nonzero at a traceless point".into())?;
    let last = r.ranks.rows.last().ok_or("no rows")?;
    ensure((last.columns, last.rank) == (1369, 1368), || format!("degree 14: {} columns, rank {}", last.columns, last.rank))?;
    for row in &r.ranks.rows[..r.ranks.rows.len() - 1] {
        ensure(row.rank == row.columns && row.rank as u64 == row.expected, || format!("degree {:?} not full rank", row.degree))?;
    }
    Ok(format!("{} terms vanish at {} points x 2 primes; degree 14 rank 1368/1369", rel.terms.len(), opts.points))
}

fn gl2() -> Outcome {
    let want = ["2^1", "3^2", "2^2·4^1", "1^4·3^2·5^2", "2^5·4^3", "1^3·3^7·5^2", "2^5·4^3·6^1", "1^1·3^2·5^1", "4^1"];
    let w = words("msg136.words")?;
    let mut rows: std::collections::BTreeMap<u32, Vec<(u32, u32)>> = Default::default();
    for e in &w.entries {
        let d = e.word.multidegree(2);
        rows.entry(d[0] + d[1]).or_default().push((d[0], d[1]));
    }
    ensure(rows.len() == 9, || format!("{} rows", rows.len()))?;
    for (d, weights) in rows {
        let dec = decompose_gl2(&weights, d).map_err(|e| e.to_string())?;
        let expect = want[d as usize - 1];
        ensure(dec.to_string() == expect, || format!("V{d} = {dec}, expected {expect}"))?;
    }
    Ok("V1..V9".into())
}

fn random_mat(f: PrimeField, d: usize, rng: &mut ChaCha8Rng) -> Mat<Fp> {
    Mat::from_fn(d, |_, _| f.random(rng))
}

fn random_qmat(f: PrimeField, n: usize, rng: &mut ChaCha8Rng) -> QuatMat<Fp> {
    Mat::from_fn(n, |_, _| Quaternion::new(f.random(rng), f.random(rng), f.random(rng), f.random(rng)))
}

fn all_words(letters: &[Letter], len: usize) -> Vec<Word> {
    let total = letters.len().pow(len as u32);
    (0..total)
        .map(|code| {
            let mut c = code;
            Word::new(
                (0..len)
                    .map(|_| {
                        let l = letters[c % letters.len()];
                        c /= letters.len();
                        l
                    })
                    .collect(),
            )
        })
        .collect()
}

fn properties() -> Outcome {
    let e = |e: sptrace::Error| e.to_string();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut cases = 0;
    for p in DEFAULT_PRIMES {
        let f = PrimeField::new(p).map_err(e)?;
        let iota = f.sqrt_neg_one().map_err(e)?;
        for n in 1..=3 {
            let ctx = SymplecticContext::new(n).map_err(e)?;
            for _ in 0..20 {
                let (x, y) = (random_mat(f, 2 * n, &mut rng), random_mat(f, 2 * n, &mut rng));
                let xs = ctx.adjoint(&x).map_err(e)?;
                ensure(ctx.adjoint(&xs).map_err(e)? == x, || "adjoint is not an involution".into())?;
                let lhs = ctx.adjoint(&x.mul_ref(&y)).map_err(e)?;
                ensure(lhs == ctx.adjoint(&y).map_err(e)?.mul_ref(&xs), || "adjoint is not an anti-homomorphism".into())?;
                let (z, w) = (random_qmat(f, n, &mut rng), random_qmat(f, n, &mut rng));
                let (pz, pw) = (quat_embed(&z, &iota), quat_embed(&w, &iota));
                ensure(quat_embed(&z.mul_ref(&w), &iota) == pz.mul_ref(&pw), || "phi is not multiplicative".into())?;
                ensure(quat_trace(&z) == pz.trace(), || "phi does not preserve the trace".into())?;
                cases += 1;
            }
        }
    }

    // Trace invariance of every generator under 20 conjugations.
    for (n, file) in [(2, "msg136.words"), (3, "w1.words")] {
        let w = words(file)?;
        let space = SampleSpace::new(n, &w.alphabet, Slice::Full).map_err(e)?;
        let f = PrimeField::new(DEFAULT_PRIMES[0]).map_err(e)?;
        let pt = space.point(f, 11, 0).map_err(e)?;
        let base: Vec<Fp> = w.entries.iter().map(|x| eval_trace(space.ctx(), &x.word, &pt)).collect::<Result<_, _>>().map_err(e)?;
        for _ in 0..20 {
            let a = random_symplectic(space.ctx(), f, &mut rng);
            let q = pt.conjugate(space.ctx(), &a).map_err(e)?;
            for (x, b) in w.entries.iter().zip(&base) {
                ensure(eval_trace(space.ctx(), &x.word, &q).map_err(e)? == *b, || format!("{file}: trace moved under conjugation"))?;
            }
        }
    }

    // Every word of length <= 6 over x, x*, y, y* lands on one class per orbit.
    for alphabet in ["x y", "x:p y:k"] {
        let a = Alphabet::parse(alphabet).map_err(e)?;
        let letters: Vec<Letter> = (0..2u16).flat_map(|m| [Letter::new(m, false), Letter::new(m, true)]).collect();
        for len in 1..=6 {
            for w in all_words(&letters, len) {
                let k = canonicalize(&w, &a).map_err(e)?;
                ensure(canonicalize(&k.canon, &a).map_err(e)?.canon == k.canon, || "canonical form not idempotent".into())?;
                ensure(canonicalize(&w.star_reverse(), &a).map_err(e)? == k, || "star-reversal changes the class".into())?;
                for r in 1..len {
                    ensure(canonicalize(&w.rotate(r), &a).map_err(e)? == k, || "rotation changes the class".into())?;
                }
            }
        }
    }

    // Worker count does not change any report.
    let alphabet = dims_alphabet(2, 2).map_err(e)?;
    let cfg = |k| RankConfig { workers: Some(k), ..RankConfig::default() };
    for t in [vec![2, 2], vec![2, 3]] {
        let one = empirical_dimension(2, &alphabet, &Target::Exact(t.clone()), &cfg(1)).map_err(e)?;
        let many = empirical_dimension(2, &alphabet, &Target::Exact(t.clone()), &cfg(3)).map_err(e)?;
        ensure(one == many, || format!("degree {t:?} differs across worker counts"))?;
    }
    Ok(format!("{cases} algebra cases, 2 conjugation suites, 2 canonicalization suites, worker determinism"))
}

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

fn main() {
    let secs = Duration::from_secs;
    let criteria = [
        Criterion { id: 1, name: "series regression", limit: secs(60), run: table1 },
        Criterion { id: 2, name: "palindromic completion", limit: secs(1), run: palindromes },
        Criterion { id: 3, name: "functional equation", limit: secs(60), run: functional_equation },
        Criterion { id: 4, name: "empirical dimensions", limit: secs(600), run: empirical_dims },
        Criterion { id: 5, name: "MSG verification", limit: secs(1800), run: msg },
        Criterion { id: 6, name: "HSOP Jacobian", limit: secs(1), run: jacobian },
        Criterion { id: 7, name: "Hironaka basis", limit: secs(600), run: hironaka },
        Criterion { id: 8, name: "syzygy", limit: secs(1800), run: syzygy },
        Criterion { id: 9, name: "GL2 decomposition", limit: secs(1), run: gl2 },
        Criterion { id: 10, name: "property suites", limit: Duration::MAX, run: properties },
    ];
    let mut failures = 0;
    for c in criteria {
        let start = Instant::now();
        let mut outcome = (c.run)();
        let took = start.elapsed();
        if outcome.is_ok() && took > c.limit {
            outcome = Err(format!("took {took:.1?}, limit {:?}", c.limit));
        }
        let (status, detail) = match outcome {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failures += 1;
                ("FAIL", d)
            }
        };
        println!("criterion {:>2} {status} {}: {detail} ({took:.2?})", c.id, c.name);
    }
    println!("{} passed, {failures} failed", 10 - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
