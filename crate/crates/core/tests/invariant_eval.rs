use sptrace::data::DataDir;
use sptrace::invariant_eval::{trace_monomials, Evaluator, RankConfig, Slice, Target};
use sptrace::words::WordList;

fn words(name: &str) -> WordList {
    DataDir::bundled().unwrap().parse_with(name, WordList::parse).unwrap()
}

#[test]
fn msg_low_degree_dimensions() {
    let w = words("msg136.words");
    assert_eq!(w.len(), 136);
    let ev = Evaluator::new(2, &w.alphabet, Slice::Full, w.words()).unwrap();
    let cfg = RankConfig::default();
    for (t, want) in [(vec![1, 0], 1), (vec![2, 0], 3), (vec![0, 1], 1), (vec![2, 2], 28)] {
        let (_, rep) = ev.graded_dimension(&Target::Exact(t.clone()), &cfg).unwrap();
        assert_eq!(rep.rank, want, "{t:?}");
        assert!(rep.runs.iter().all(|r| r.rank == want));
    }
}

#[test]
fn w2_degree_14_monomial_count() {
    let w = words("w2.words");
    let ev = Evaluator::new(3, &w.alphabet, Slice::Full, w.words()).unwrap();
    assert_eq!(trace_monomials(&ev.degrees(), &Target::Total(14)).len(), 1369);
}

#[test]
fn pi_slice_agrees_with_full_through_degree_6() {
    let w = words("w1.words");
    let cfg = RankConfig::default();
    let full = Evaluator::new(3, &w.alphabet, Slice::Full, w.words()).unwrap();
    let pi = Evaluator::new(3, &w.alphabet, Slice::PiSlice, w.words()).unwrap();
    for d in 1..=6 {
        let a = full.graded_dimension(&Target::Total(d), &cfg).unwrap().1.rank;
        let b = pi.graded_dimension(&Target::Total(d), &cfg).unwrap().1.rank;
        assert_eq!(a, b, "degree {d}");
    }
}

#[test]
fn refined_n2_slice_agrees_with_full_at_low_bidegree() {
    let w = words("msg136.words");
    let cfg = RankConfig::default();
    let full = Evaluator::new(2, &w.alphabet, Slice::Full, w.words()).unwrap();
    let tri = Evaluator::new(2, &w.alphabet, Slice::UpperTriangularFirst { refined: false }, w.words()).unwrap();
    let fine = Evaluator::new(2, &w.alphabet, Slice::UpperTriangularFirst { refined: true }, w.words()).unwrap();
    for t in [vec![2, 1], vec![2, 2], vec![3, 1], vec![1, 3]] {
        let t = Target::Exact(t);
        let a = full.graded_dimension(&t, &cfg).unwrap().1.rank;
        assert_eq!(tri.graded_dimension(&t, &cfg).unwrap().1.rank, a, "{t}");
        assert_eq!(fine.graded_dimension(&t, &cfg).unwrap().1.rank, a, "{t}");
    }
}
