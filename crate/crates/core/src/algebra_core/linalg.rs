use super::ring::FieldOps;

/// Rank of a list of rows by Gaussian elimination.
pub fn rank<R: FieldOps>(mut rows: Vec<Vec<R>>) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..ncols {
        let Some(piv) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, piv);
        let inv = rows[r][c].inv().expect("nonzero pivot");
        let pivot_row: Vec<R> = rows[r].iter().map(|v| v.clone() * inv.clone()).collect();
        for i in r + 1..rows.len() {
            if rows[i][c].is_zero() {
                continue;
            }
            let f = rows[i][c].clone();
            for k in c..ncols {
                let t = rows[i][k].clone() - f.clone() * pivot_row[k].clone();
                rows[i][k] = t;
            }
        }
        rows[r] = pivot_row;
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    #[test]
    fn rational_rank() {
        let rows = vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)], vec![q(0), q(1), q(1)]];
        assert_eq!(rank(rows), 2);
        assert_eq!(rank::<BigRational>(vec![]), 0);
        assert_eq!(rank(vec![vec![q(0), q(0)]]), 0);
    }
}
