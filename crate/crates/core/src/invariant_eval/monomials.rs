use serde::Serialize;
use std::fmt;

/// A homogeneous component: an exact multidegree or a total degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Target {
    Exact(Vec<u32>),
    Total(u32),
}

impl Target {
    pub fn total(&self) -> u32 {
        match self {
            Target::Exact(v) => v.iter().sum(),
            Target::Total(d) => *d,
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::Exact(v) => {
                let s: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                write!(f, "({})", s.join(","))
            }
            Target::Total(d) => write!(f, "{d}"),
        }
    }
}

/// Multisets of generator indices (non-decreasing index lists, in
/// lexicographic order) whose degrees add up to the target. Degree-zero
/// generators are never used.
pub fn trace_monomials(degrees: &[Vec<u32>], target: &Target) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    match target {
        Target::Exact(t) => {
            let mut rest = t.clone();
            exact(degrees, 0, &mut rest, &mut cur, &mut out);
        }
        Target::Total(d) => {
            let tot: Vec<u32> = degrees.iter().map(|v| v.iter().sum()).collect();
            total(&tot, 0, *d, &mut cur, &mut out);
        }
    }
    out
}

fn exact(deg: &[Vec<u32>], from: usize, rest: &mut [u32], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if rest.iter().all(|&r| r == 0) {
        out.push(cur.clone());
        return;
    }
    for g in from..deg.len() {
        let d = &deg[g];
        if d.len() != rest.len() || d.iter().all(|&x| x == 0) || d.iter().zip(rest.iter()).any(|(a, b)| a > b) {
            continue;
        }
        rest.iter_mut().zip(d).for_each(|(r, x)| *r -= x);
        cur.push(g);
        exact(deg, g, rest, cur, out);
        cur.pop();
        rest.iter_mut().zip(d).for_each(|(r, x)| *r += x);
    }
}

fn total(deg: &[u32], from: usize, rest: u32, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if rest == 0 {
        out.push(cur.clone());
        return;
    }
    for g in from..deg.len() {
        if deg[g] == 0 || deg[g] > rest {
            continue;
        }
        cur.push(g);
        total(deg, g, rest - deg[g], cur, out);
        cur.pop();
    }
}
