use super::{canonicalize, Alphabet, Letter, LetterKind, TraceClass, Word};
use std::collections::BTreeSet;

/// Razmyslov's bound (2n)² on the length of generating words.
pub fn razmyslov_bound(n: usize) -> usize {
    4 * n * n
}

/// n(2n+1), conditional on Kuzmin's conjecture (proved for 2n ≤ 4).
pub fn kuzmin_bound(n: usize) -> usize {
    n * (2 * n + 1)
}

/// One representative per nonzero trace class, for every word length
/// 1..=max_total_degree (or only the given multidegree), sorted by
/// (total degree, multidegree, canon).
pub fn enumerate_classes(alphabet: &Alphabet, max_total_degree: usize, filter: Option<&[u32]>) -> Vec<TraceClass> {
    let m = alphabet.len();
    let letters: Vec<Letter> = (0..m)
        .flat_map(|i| {
            let id = i as u16;
            match alphabet.kind(i) {
                LetterKind::Generic => vec![Letter::new(id, false), Letter::new(id, true)],
                _ => vec![Letter::new(id, false)],
            }
        })
        .collect();
    let mut found: BTreeSet<(usize, Vec<u32>, TraceClass)> = BTreeSet::new();
    let targets: Vec<Vec<u32>> = match filter {
        Some(f) => {
            if f.iter().sum::<u32>() as usize <= max_total_degree && f.len() == m && f.iter().any(|&e| e > 0) {
                vec![f.to_vec()]
            } else {
                Vec::new()
            }
        }
        None => (1..=max_total_degree).flat_map(|d| compositions(d as u32, m)).collect(),
    };
    for target in targets {
        let mut remaining = target.clone();
        let mut cur = Vec::new();
        extend(&letters, &mut remaining, &mut cur, &mut |w: &Word| {
            let c = canonicalize(w, alphabet).expect("nonempty word over alphabet");
            if !c.is_zero() {
                let c = TraceClass { canon: c.canon, sign: 1 };
                found.insert((w.len(), target.clone(), c));
            }
        });
    }
    found.into_iter().map(|(_, _, c)| c).collect()
}

fn extend(letters: &[Letter], remaining: &mut [u32], cur: &mut Vec<Letter>, emit: &mut impl FnMut(&Word)) {
    if remaining.iter().all(|&r| r == 0) {
        if !cur.is_empty() {
            emit(&Word::new(cur.clone()));
        }
        return;
    }
    for &l in letters {
        let id = l.matrix_id as usize;
        if remaining[id] == 0 {
            continue;
        }
        // Every class has a representative starting with its least
        // letter; the first letter can be fixed to an unstarred letter
        // of the smallest matrix present.
        if cur.is_empty() {
            let first = remaining.iter().position(|&r| r > 0).unwrap();
            if id != first || l.starred {
                continue;
            }
        }
        remaining[id] -= 1;
        cur.push(l);
        extend(letters, remaining, cur, emit);
        cur.pop();
        remaining[id] += 1;
    }
}

/// All vectors of `parts` nonnegative integers summing to d, in
/// lexicographically decreasing order.
pub(crate) fn compositions(d: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 1 {
        return vec![vec![d]];
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in compositions(d - first, parts - 1) {
            let mut v = vec![first];
            v.append(&mut rest);
            out.push(v);
        }
    }
    out
}
