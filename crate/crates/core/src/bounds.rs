//! Closed-form upper bounds on the supereulerian-type and Hamiltonian indices.

use serde::Serialize;

/// `ceil(log2(a / b))` computed exactly in integers; `a, b >= 1`.
pub fn ceil_lg_ratio(a: u64, b: u64) -> i64 {
    assert!(a >= 1 && b >= 1, "ratio operands must be positive");
    let (a, b) = (u128::from(a), u128::from(b));
    if a > b {
        // min m >= 1 with a <= b * 2^m
        let mut m = 0;
        while a > b << m {
            m += 1;
        }
        m
    } else {
        // -max m >= 0 with a * 2^m <= b
        let mut m = 0;
        while a << (m + 1) <= b {
            m += 1;
        }
        -m
    }
}

/// Upper bound on the `(s,t)`-supereulerian index.
pub fn ist_bound(delta: usize, d_tilde: usize, ell: usize, s: usize, t: usize) -> u64 {
    let st = (s + t) as u64;
    let delta = delta as u64;
    if delta <= 2 {
        if st == 0 {
            ell as u64
        } else {
            (d_tilde as i64 + 1 + ceil_lg_ratio(st + 1, 1)) as u64
        }
    } else if delta <= st + 2 {
        (1 + ceil_lg_ratio(st + 1, delta - 2)) as u64
    } else {
        1
    }
}

/// Upper bound on the `s`-Hamiltonian index.
pub fn hs_bound(delta: usize, d_tilde: usize, ell: usize, s: usize) -> u64 {
    let s64 = s as u64;
    let delta64 = delta as u64;
    if delta <= 2 {
        if s == 0 {
            ell as u64 + 1
        } else {
            (d_tilde as i64 + 2 + ceil_lg_ratio(s64 + 1, 1)) as u64
        }
    } else if delta64 <= s64 + 2 {
        (2 + ceil_lg_ratio(s64 + 1, delta64 - 2)) as u64
    } else {
        2
    }
}

/// The earlier bound `h_s <= l + s + 1`.
pub fn prior_bound(ell: usize, s: usize) -> u64 {
    (ell + s + 1) as u64
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComparisonRow {
    pub s: usize,
    pub new_bound: u64,
    pub prior_bound: u64,
    /// `prior - new`; negative when the new bound is weaker.
    pub difference: i64,
    /// For `s >= 6` the new bound must not exceed the prior one.
    pub sharpening_holds: bool,
}

/// Per-`s` comparison of [`hs_bound`] against [`prior_bound`].
pub fn prior_bound_comparison(
    delta: usize,
    d_tilde: usize,
    ell: usize,
    s_range: std::ops::RangeInclusive<usize>,
) -> Vec<ComparisonRow> {
    s_range
        .map(|s| {
            let new_bound = hs_bound(delta, d_tilde, ell, s);
            let prior = prior_bound(ell, s);
            ComparisonRow {
                s,
                new_bound,
                prior_bound: prior,
                difference: prior as i64 - new_bound as i64,
                sharpening_holds: s < 6 || new_bound <= prior,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Direct definition: the unique integer m with 2^(m-1) < a/b <= 2^m.
    fn ceil_lg_oracle(a: u64, b: u64) -> i64 {
        let a = a as f64 * 1.0;
        let b = b as f64 * 1.0;
        (-70..70)
            .find(|&m: &i64| a <= b * 2f64.powi(m as i32) && a > b * 2f64.powi(m as i32 - 1))
            .unwrap()
    }

    #[test]
    fn ceil_lg_matches_definition() {
        for a in 1..=200u64 {
            for b in 1..=40u64 {
                assert_eq!(ceil_lg_ratio(a, b), ceil_lg_oracle(a, b), "{a}/{b}");
            }
        }
        assert_eq!(ceil_lg_ratio(2, 1), 1);
        assert_eq!(ceil_lg_ratio(1, 1), 0);
        assert_eq!(ceil_lg_ratio(3, 2), 1);
        assert_eq!(ceil_lg_ratio(4, 1), 2);
        assert_eq!(ceil_lg_ratio(5, 1), 3);
        assert_eq!(ceil_lg_ratio(1, 3), -1);
    }

    #[test]
    fn ist_bound_branches() {
        assert_eq!(ist_bound(1, 3, 3, 0, 0), 3);
        assert_eq!(ist_bound(1, 3, 3, 0, 1), 5);
        assert_eq!(ist_bound(3, 0, 0, 1, 0), 2);
        assert_eq!(ist_bound(4, 0, 0, 1, 1), 2);
        assert_eq!(ist_bound(6, 0, 0, 1, 0), 1);
        assert_eq!(ist_bound(3, 0, 0, 0, 0), 1);
    }

    #[test]
    fn hs_bound_branches() {
        assert_eq!(hs_bound(1, 3, 3, 0), 4);
        assert_eq!(hs_bound(3, 0, 0, 1), 3);
        assert_eq!(hs_bound(7, 0, 0, 4), 2);
        assert_eq!(hs_bound(3, 0, 0, 0), 2);
        // first three branches are the (0, s) supereulerian bound plus one
        for delta in 1..8 {
            for s in 0..20 {
                if delta <= s + 2 {
                    assert_eq!(hs_bound(delta, 4, 5, s), ist_bound(delta, 4, 5, 0, s) + 1);
                }
            }
        }
    }

    #[test]
    fn comparison_rows() {
        let rows = prior_bound_comparison(1, 3, 3, 6..=6);
        assert_eq!((rows[0].new_bound, rows[0].prior_bound), (8, 10));
        // worst case d~ = l + 2 meets the prior bound exactly at s = 6
        let ell = 4;
        let rows = prior_bound_comparison(1, ell + 2, ell, 6..=6);
        assert_eq!(rows[0].new_bound, rows[0].prior_bound);
        assert!(rows[0].sharpening_holds);
        let rows = prior_bound_comparison(2, 3, 3, 0..=0);
        assert_eq!(rows[0].new_bound, rows[0].prior_bound);
    }
}
