//! Subset-sum and subset-product sets over a field, by dynamic programming
//! over (subset size, field value).

use crate::error::{Error, Result};
use crate::field::Field;

fn check_set(field: &Field, s: &[u32], m: usize) -> Result<()> {
    for (i, &x) in s.iter().enumerate() {
        if !field.contains(x) {
            return Err(Error::ElementOutOfRange {
                value: x,
                q: field.order(),
            });
        }
        if s[..i].contains(&x) {
            return Err(Error::DuplicateNode(x));
        }
    }
    if m > s.len() {
        return Err(Error::BadK {
            k: m,
            reason: format!("subset size exceeds the set size {}", s.len()),
        });
    }
    Ok(())
}

/// `reach[j][x]` is true iff some `j`-subset of `s` combines to `x`.
fn subset_dp(
    field: &Field,
    s: &[u32],
    m: usize,
    identity: u32,
    op: impl Fn(u32, u32) -> u32,
) -> Vec<bool> {
    let q = field.order() as usize;
    let mut reach = vec![vec![false; q]; m + 1];
    reach[0][identity as usize] = true;
    for (i, &x) in s.iter().enumerate() {
        for j in (1..=m.min(i + 1)).rev() {
            let (lower, upper) = reach.split_at_mut(j);
            for (y, _) in lower[j - 1].iter().enumerate().filter(|(_, &r)| r) {
                upper[0][op(y as u32, x) as usize] = true;
            }
        }
    }
    reach.swap_remove(m)
}

fn members(flags: &[bool]) -> Vec<u32> {
    flags
        .iter()
        .enumerate()
        .filter(|(_, &r)| r)
        .map(|(x, _)| x as u32)
        .collect()
}

/// All sums of `m` distinct elements of `s`, in increasing encoding order.
pub fn subset_sums(field: &Field, s: &[u32], m: usize) -> Result<Vec<u32>> {
    check_set(field, s, m)?;
    Ok(members(&subset_dp(field, s, m, 0, |a, b| field.add(a, b))))
}

/// True iff no `k` distinct elements of `s` sum to `delta`.
pub fn is_nk_delta_set(field: &Field, s: &[u32], k: usize, delta: u32) -> Result<bool> {
    check_set(field, s, k)?;
    Ok(!subset_dp(field, s, k, 0, |a, b| field.add(a, b))[delta as usize])
}

/// `{1 / prod_{i in I}(pi - a_i) : |I| = m}`, in increasing encoding order.
pub fn t_set(field: &Field, a: &[u32], pi: u32, m: usize) -> Result<Vec<u32>> {
    check_set(field, a, m)?;
    if !field.contains(pi) {
        return Err(Error::ElementOutOfRange {
            value: pi,
            q: field.order(),
        });
    }
    if a.contains(&pi) {
        return Err(Error::PoleCollision(pi));
    }
    let diffs: Vec<u32> = a.iter().map(|&x| field.sub(pi, x)).collect();
    // the differences are distinct, so they form a set for the DP
    let products = subset_dp(field, &diffs, m, 1, |y, x| field.mul(y, x));
    let mut out: Vec<u32> = members(&products)
        .into_iter()
        .map(|p| field.inv(p))
        .collect();
    out.sort_unstable();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;
    use proptest::prelude::*;

    fn brute_sums(f: &Field, s: &[u32], m: usize) -> Vec<u32> {
        s.iter()
            .combinations(m)
            .map(|c| f.sum(c.into_iter().copied()))
            .sorted()
            .dedup()
            .collect()
    }

    #[test]
    fn sums_examples() {
        let f = Field::prime(5).unwrap();
        let all: Vec<u32> = f.elements().collect();
        assert_eq!(subset_sums(&f, &all, 0).unwrap(), vec![0]);
        assert_eq!(subset_sums(&f, &all, 5).unwrap(), vec![0]);
        assert_eq!(subset_sums(&f, &all, 2).unwrap(), all);
        assert!(matches!(subset_sums(&f, &all, 6), Err(Error::BadK { .. })));
        assert_eq!(
            subset_sums(&f, &[1, 1], 1).unwrap_err(),
            Error::DuplicateNode(1)
        );
    }

    #[test]
    fn nk_delta_examples() {
        let f4 = Field::new(2, 2).unwrap();
        let g4: Vec<u32> = f4.elements().collect();
        assert!(is_nk_delta_set(&f4, &g4, 2, 0).unwrap());
        let f8 = Field::new(2, 3).unwrap();
        let g8: Vec<u32> = f8.elements().collect();
        assert!(is_nk_delta_set(&f8, &g8, 2, 0).unwrap());
        for d in f8.elements() {
            assert!(!is_nk_delta_set(&f8, &g8, 3, d).unwrap());
        }
    }

    #[test]
    fn t_set_examples() {
        let f = Field::prime(5).unwrap();
        assert_eq!(t_set(&f, &[0, 1, 2], 3, 0).unwrap(), vec![1]);
        assert_eq!(t_set(&f, &[0, 1, 2], 3, 2).unwrap(), vec![1, 2, 3]);
        // (3)(2)(1) = 6 = 1
        assert_eq!(t_set(&f, &[0, 1, 2], 3, 3).unwrap(), vec![1]);
        assert_eq!(
            t_set(&f, &[0, 1, 2], 1, 1).unwrap_err(),
            Error::PoleCollision(1)
        );
    }

    proptest! {
        #[test]
        fn dp_matches_enumeration(
            (p, m) in prop::sample::select(vec![(2u32, 3u32), (2, 4), (3, 2), (11, 1), (13, 1)]),
            mask in any::<u16>(),
            size in 0usize..13,
        ) {
            let f = Field::new(p, m).unwrap();
            let s: Vec<u32> = f.elements().filter(|&x| mask >> (x % 16) & 1 == 1).take(12).collect();
            let size = size.min(s.len());
            prop_assert_eq!(subset_sums(&f, &s, size).unwrap(), brute_sums(&f, &s, size));
        }
    }
}
