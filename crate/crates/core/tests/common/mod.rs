//! Brute-force oracles shared by the integration tests. They use only field
//! arithmetic from the library; everything else is recomputed here.
#![allow(dead_code)]

use std::collections::VecDeque;

use extcode::{Field, LinearCode};
use itertools::Itertools;

pub fn field_of_order(q: u32) -> Field {
    for p in 2..=q {
        if q % p == 0 {
            let mut m = 0;
            let mut r = q;
            while r % p == 0 {
                r /= p;
                m += 1;
            }
            assert_eq!(r, 1, "{q} is not a prime power");
            return Field::new(p, m).unwrap();
        }
    }
    panic!("no field of order {q}")
}

/// All vectors of `GF(q)^n` in lexicographic order.
pub fn all_vectors(q: u32, n: usize) -> Vec<Vec<u32>> {
    let mut out: Vec<Vec<u32>> = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..q).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

pub fn combine(f: &Field, coeffs: &[u32], rows: &[Vec<u32>], n: usize) -> Vec<u32> {
    let mut out = vec![0; n];
    for (c, row) in coeffs.iter().zip(rows) {
        for (o, &x) in out.iter_mut().zip(row) {
            *o = f.add(*o, f.mul(*c, x));
        }
    }
    out
}

/// Visits every combination of `rows` (with repetitions if the rows are
/// dependent).
pub fn for_each_in_span(f: &Field, rows: &[Vec<u32>], n: usize, mut visit: impl FnMut(&[u32])) {
    let q = f.order();
    let mut coeffs = vec![0u32; rows.len()];
    loop {
        visit(&combine(f, &coeffs, rows, n));
        let Some(i) = coeffs.iter().rposition(|&c| c + 1 < q) else {
            return;
        };
        coeffs[i] += 1;
        for c in &mut coeffs[i + 1..] {
            *c = 0;
        }
    }
}

pub fn weight(v: &[u32]) -> usize {
    v.iter().filter(|&&x| x != 0).count()
}

pub fn dist(a: &[u32], b: &[u32]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

/// Minimum nonzero weight by enumeration.
pub fn min_distance(f: &Field, rows: &[Vec<u32>], n: usize) -> usize {
    let mut best = usize::MAX;
    for_each_in_span(f, rows, n, |c| {
        let w = weight(c);
        if w > 0 {
            best = best.min(w);
        }
    });
    if best == usize::MAX {
        0
    } else {
        best
    }
}

/// Weight distribution by enumeration.
pub fn weights(f: &Field, rows: &[Vec<u32>], n: usize) -> Vec<u64> {
    let mut w = vec![0u64; n + 1];
    for_each_in_span(f, rows, n, |c| w[weight(c)] += 1);
    w
}

/// Rank by Gaussian elimination.
pub fn rank(f: &Field, rows: &[Vec<u32>]) -> usize {
    let mut m: Vec<Vec<u32>> = rows.to_vec();
    let cols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        let inv = f.inv(m[r][c]);
        let pivot: Vec<u32> = m[r].iter().map(|&x| f.mul(x, inv)).collect();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let t = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot) {
                    *x = f.sub(*x, f.mul(t, y));
                }
            }
        }
        m[r] = pivot;
        r += 1;
    }
    r
}

/// Do the two row sets span the same space?
pub fn same_span(f: &Field, a: &[Vec<u32>], b: &[Vec<u32>]) -> bool {
    let both: Vec<Vec<u32>> = a.iter().chain(b).cloned().collect();
    let r = rank(f, &both);
    rank(f, a) == r && rank(f, b) == r
}

pub fn rows(code: &LinearCode) -> Vec<Vec<u32>> {
    code.generator().row_vecs()
}

/// The second-kind extension `(c, <u, c>)` computed from generator rows.
pub fn extend_rows(f: &Field, rows: &[Vec<u32>], u: &[u32]) -> Vec<Vec<u32>> {
    rows.iter()
        .map(|r| {
            let mut r = r.clone();
            r.push(f.dot(&r, u));
            r
        })
        .collect()
}

/// MDS test straight from the definition: every set of `k` columns of the
/// generator is independent.
pub fn is_mds(f: &Field, rows: &[Vec<u32>], n: usize) -> bool {
    let k = rows.len();
    if k == 0 {
        return true;
    }
    (0..n).combinations(k).all(|cols| {
        let sub: Vec<Vec<u32>> = rows
            .iter()
            .map(|r| cols.iter().map(|&c| r[c]).collect())
            .collect();
        rank(f, &sub) == k
    })
}

/// Coset-leader weights by breadth-first search over syndromes, using a
/// parity-check matrix that is first checked against the generator.
pub struct CosetOracle {
    field: Field,
    h: Vec<Vec<u32>>,
    pub dist: Vec<u8>,
}

impl CosetOracle {
    pub fn new(code: &LinearCode) -> CosetOracle {
        let f = code.field().clone();
        let n = code.n();
        let h = code.parity().row_vecs();
        let g = rows(code);
        for gr in &g {
            for hr in &h {
                assert_eq!(f.dot(gr, hr), 0, "parity check is not orthogonal");
            }
        }
        assert_eq!(rank(&f, &h), n - code.k(), "parity check has wrong rank");
        let r = h.len();
        let q = f.order() as u64;
        let size = q.pow(r as u32) as usize;
        let moves: Vec<u64> = (0..n)
            .flat_map(|j| {
                let col: Vec<u32> = h.iter().map(|row| row[j]).collect();
                let f = f.clone();
                (1..f.order()).map(move |c| {
                    let v: Vec<u32> = col.iter().map(|&x| f.mul(c, x)).collect();
                    encode(q, &v)
                })
            })
            .collect();
        let mut dist = vec![u8::MAX; size];
        dist[0] = 0;
        let mut queue = VecDeque::from([0u64]);
        let char2 = f.characteristic() == 2;
        while let Some(s) = queue.pop_front() {
            let d = dist[s as usize];
            for &m in &moves {
                let t = if char2 {
                    s ^ m
                } else {
                    add_encoded(&f, q, r, s, m)
                };
                if dist[t as usize] == u8::MAX {
                    dist[t as usize] = d + 1;
                    queue.push_back(t);
                }
            }
        }
        assert!(dist.iter().all(|&d| d != u8::MAX), "syndromes unreachable");
        CosetOracle { field: f, h, dist }
    }

    pub fn rho(&self) -> usize {
        *self.dist.iter().max().unwrap() as usize
    }

    pub fn distance(&self, v: &[u32]) -> usize {
        let s: Vec<u32> = self.h.iter().map(|row| self.field.dot(row, v)).collect();
        self.dist[encode(self.field.order() as u64, &s) as usize] as usize
    }

    pub fn is_deep_hole(&self, v: &[u32]) -> bool {
        self.distance(v) == self.rho()
    }
}

fn encode(q: u64, v: &[u32]) -> u64 {
    v.iter().rev().fold(0, |acc, &x| acc * q + x as u64)
}

fn add_encoded(f: &Field, q: u64, r: usize, mut a: u64, mut b: u64) -> u64 {
    let mut out = 0;
    let mut scale = 1;
    for _ in 0..r {
        let s = f.add((a % q) as u32, (b % q) as u32) as u64;
        out += s * scale;
        scale *= q;
        a /= q;
        b /= q;
    }
    out
}

/// Sums of `m`-element subsets by explicit enumeration, sorted and
/// deduplicated.
pub fn subset_sums(f: &Field, s: &[u32], m: usize) -> Vec<u32> {
    let mut out: Vec<u32> = s
        .iter()
        .combinations(m)
        .map(|c| f.sum(c.into_iter().copied()))
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}
