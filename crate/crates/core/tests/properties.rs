//! Property tests for the invariants of codes, extensions, covering radii
//! and constructions, with brute-force oracles from `common`.

mod common;

use common::*;
use extcode::code::{extend_g, hamming_distance};
use extcode::codefile::CodeFile;
use extcode::constructions::{cyclic_spec, grs, grs_dual_weights, GrsSpec};
use extcode::covering::{covering_radius, distance_to_code};
use extcode::field::Poly;
use extcode::{Field, LinearCode, Matrix};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const ORDERS: [u32; 6] = [2, 3, 4, 5, 7, 8];

fn random_matrix(rng: &mut ChaCha8Rng, f: &Field, rows: usize, cols: usize) -> Vec<Vec<u32>> {
    (0..rows)
        .map(|_| (0..cols).map(|_| rng.random_range(0..f.order())).collect())
        .collect()
}

/// A random `[n, k]` code over `GF(q)`.
fn random_code(q: u32, n: usize, k: usize, seed: u64) -> LinearCode {
    let f = field_of_order(q);
    if k == 0 {
        return LinearCode::zero_code(&f, n);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let rows = random_matrix(&mut rng, &f, k, n);
        if rank(&f, &rows) == k {
            let g = Matrix::from_rows(&f, n, &rows).unwrap();
            return LinearCode::from_generator(&g).unwrap();
        }
    }
}

/// A GRS code with random nodes and multipliers.
fn random_grs(q: u32, n: usize, k: usize, seed: u64) -> (Field, Vec<u32>, Vec<u32>, LinearCode) {
    let f = field_of_order(q);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut all: Vec<u32> = f.elements().collect();
    all.shuffle(&mut rng);
    let a = all[..n].to_vec();
    let v: Vec<u32> = (0..n).map(|_| rng.random_range(1..q)).collect();
    let code = grs(&f, &a, &v, k).unwrap();
    (f, a, v, code)
}

fn code_params() -> impl Strategy<Value = (u32, usize, usize, u64)> {
    (0..ORDERS.len(), 1..=6usize, any::<u64>()).prop_flat_map(|(i, n, seed)| {
        let q = ORDERS[i];
        // keep codeword enumeration small
        let max_k = (0..=n)
            .take_while(|&k| (q as u64).pow(k as u32) <= 1 << 12)
            .last()
            .unwrap();
        (Just(q), Just(n), 0..=max_k, Just(seed))
    })
}

fn grs_params() -> impl Strategy<Value = (u32, usize, usize, u64)> {
    (0..ORDERS.len(), any::<u64>()).prop_flat_map(|(i, seed)| {
        let q = ORDERS[i];
        (2..=(q as usize).min(6)).prop_flat_map(move |n| (Just(q), Just(n), 1..n, Just(seed)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn generator_and_parity_are_complementary((q, n, k, seed) in code_params()) {
        let code = random_code(q, n, k, seed);
        let f = code.field().clone();
        let g = rows(&code);
        let h = code.parity().row_vecs();
        for gr in &g {
            for hr in &h {
                prop_assert_eq!(f.dot(gr, hr), 0);
            }
        }
        prop_assert_eq!(rank(&f, &g), k);
        prop_assert_eq!(rank(&f, &h), n - k);
        prop_assert_eq!(code.k() + code.dual().k(), n);
    }

    #[test]
    fn singleton_bound_and_distance((q, n, k, seed) in code_params()) {
        let code = random_code(q, n, k, seed);
        prop_assume!(k > 0);
        let d = code.min_distance().unwrap();
        prop_assert!(d >= 1 && d <= n - k + 1);
        prop_assert_eq!(d, min_distance(code.field(), &rows(&code), n));
    }

    #[test]
    fn extension_adds_at_most_one((q, n, k, seed) in code_params(), useed in any::<u64>()) {
        prop_assume!(k > 0);
        let code = random_code(q, n, k, seed);
        let f = code.field().clone();
        let mut rng = ChaCha8Rng::seed_from_u64(useed);
        let u: Vec<u32> = (0..n).map(|_| rng.random_range(0..q)).collect();
        let d = code.min_distance().unwrap();
        let ext = code.extend_u(&u).unwrap();
        let e = ext.min_distance().unwrap();
        prop_assert!(e == d || e == d + 1, "d = {}, extended d = {}", d, e);
        let col: Vec<u32> = rows(&code).iter().map(|r| f.dot(r, &u)).collect();
        let by_column = extend_g(code.generator(), &col).unwrap();
        prop_assert!(ext.same_code(&by_column).unwrap());
        prop_assert!(same_span(&f, &rows(&ext), &extend_rows(&f, &rows(&code), &u)));
    }

    #[test]
    fn mds_iff_dual_mds((q, n, k, seed) in code_params()) {
        let code = random_code(q, n, k, seed);
        let f = code.field().clone();
        let mds = is_mds(&f, &rows(&code), n);
        prop_assert_eq!(code.is_mds().unwrap(), mds);
        prop_assert_eq!(code.is_mds_by_minors(), mds);
        let dual = code.dual();
        prop_assert_eq!(is_mds(&f, &rows(&dual), n), mds);
        prop_assert_eq!(dual.is_mds_by_minors(), mds);
    }

    #[test]
    fn radius_matches_exhaustive_maximum((q, n, k, seed) in code_params()) {
        let code = random_code(q, n, k, seed);
        prop_assume!((q as u64).pow(n as u32) <= 1 << 14);
        let f = code.field().clone();
        let words: Vec<Vec<u32>> = {
            let mut w = Vec::new();
            for_each_in_span(&f, &rows(&code), n, |c| w.push(c.to_vec()));
            w
        };
        let exhaustive = all_vectors(q, n)
            .iter()
            .map(|v| words.iter().map(|c| dist(c, v)).min().unwrap())
            .max()
            .unwrap();
        let report = covering_radius(&code).unwrap();
        prop_assert_eq!(report.rho(), exhaustive);
        prop_assert_eq!(CosetOracle::new(&code).rho(), exhaustive);
    }

    #[test]
    fn radius_bounds_random_distances((q, n, k, seed) in code_params()) {
        let code = random_code(q, n, k, seed);
        let report = covering_radius(&code).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 1);
        for _ in 0..200 {
            let v: Vec<u32> = (0..n).map(|_| rng.random_range(0..q)).collect();
            let d = distance_to_code(&code, &v).unwrap();
            prop_assert!(d <= report.rho());
            prop_assert_eq!(d, report.distance(&v).unwrap());
        }
    }

    #[test]
    fn mds_radius_is_redundancy_or_one_less((q, n, k, seed) in grs_params()) {
        let (_, _, _, code) = random_grs(q, n, k, seed);
        prop_assume!((q as u64).pow((n - k) as u32) <= 1 << 16);
        let rho = covering_radius(&code).unwrap().rho();
        prop_assert!(rho == n - k || rho + 1 == n - k, "rho = {}, n - k = {}", rho, n - k);
    }

    #[test]
    fn deep_holes_are_unions_of_cosets((q, n, k, seed) in grs_params()) {
        let (f, _, _, code) = random_grs(q, n, k, seed);
        prop_assume!((q as u64).pow((n - k) as u32) <= 1 << 16);
        let report = covering_radius(&code).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for rep in report.representatives().take(5) {
            prop_assert!(report.is_deep_hole(rep).unwrap());
            let msg: Vec<u32> = (0..k).map(|_| rng.random_range(0..q)).collect();
            let c = code.encode(&msg).unwrap();
            let shifted: Vec<u32> = rep.iter().zip(&c).map(|(&x, &y)| f.add(x, y)).collect();
            prop_assert!(report.is_deep_hole(&shifted).unwrap());
            prop_assert_eq!(hamming_distance(&shifted, &c), hamming_distance(rep, &vec![0; n]));
        }
    }

    #[test]
    fn grs_dual_weights_give_the_dual((q, n, k, seed) in grs_params()) {
        let (f, a, v, code) = random_grs(q, n, k, seed);
        let w = grs_dual_weights(&f, &a, &v).unwrap();
        let dual = grs(&f, &a, &w, n - k).unwrap();
        prop_assert!(same_span(&f, &code.parity().row_vecs(), &rows(&dual)));
    }

    #[test]
    fn lagrange_interpolation_round_trips(i in 0..ORDERS.len(), seed in any::<u64>()) {
        let f = field_of_order(ORDERS[i]);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut xs: Vec<u32> = f.elements().collect();
        xs.shuffle(&mut rng);
        let m = rng.random_range(1..=xs.len());
        let points: Vec<(u32, u32)> = xs[..m].iter().map(|&x| (x, rng.random_range(0..f.order()))).collect();
        let p = Poly::lagrange_interpolate(&f, &points).unwrap();
        prop_assert!(p.degree().map_or(true, |d| d < m));
        for (x, y) in points {
            prop_assert_eq!(p.eval(x), y);
        }
    }

    #[test]
    fn code_files_round_trip((q, n, k, seed) in code_params()) {
        let code = random_code(q, n, k, seed);
        let text = serde_json::to_string(&CodeFile::from_code(&code)).unwrap();
        let back = CodeFile::parse(&text).unwrap().build(None).unwrap();
        prop_assert!(back.same_code(&code).unwrap());
    }
}

#[test]
fn grs_spec_round_trips() {
    let f = field_of_order(7);
    let spec = GrsSpec::rs(vec![1, 2, 3, 4, 5], 3);
    let text = serde_json::to_string(&spec).unwrap();
    let back: GrsSpec = serde_json::from_str(&text).unwrap();
    assert_eq!(back, spec);
    assert!(back
        .build(&f)
        .unwrap()
        .same_code(&spec.build(&f).unwrap())
        .unwrap());
}

#[test]
fn cyclic_generator_divides_x_to_the_q_plus_one_minus_one() {
    for m in 2..=4 {
        for u in 1..=(1u32 << m) / 2 {
            let spec = cyclic_spec(m, u).unwrap();
            let f = spec.field().unwrap();
            let q = f.order() as usize;
            let g = Poly::new(&f, spec.gen_poly.clone()).unwrap();
            let mut target = vec![0; q + 2];
            target[0] = f.neg(1);
            target[q + 1] = 1;
            let (_, r) = Poly::new(&f, target).unwrap().div_rem(&g).unwrap();
            assert!(
                r.is_zero(),
                "g_{u} does not divide x^{} - 1 over {f}",
                q + 1
            );
            assert_eq!(g.degree(), Some(q + 1 - (2 * u as usize - 1)));
        }
    }
}
