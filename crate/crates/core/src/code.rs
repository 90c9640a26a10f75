//! Linear codes, their duals and the two extension operations.
//!
//! A code is identified by the reduced row echelon form of its generator,
//! so two [`LinearCode`] values with equal generators have the same
//! codeword set.

use std::sync::OnceLock;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;

/// Default cap on enumeration sizes (codewords, syndromes, column subsets).
pub const DEFAULT_BUDGET: u64 = 1 << 24;

/// Number of steps `q^e`, saturating well above any budget.
pub(crate) fn power_count(q: u32, e: usize) -> u128 {
    let mut out: u128 = 1;
    for _ in 0..e {
        out = out.saturating_mul(q as u128);
        if out > u64::MAX as u128 {
            break;
        }
    }
    out
}

pub(crate) fn check_budget(needed: u128, budget: u64) -> Result<()> {
    if needed > budget as u128 {
        Err(Error::BudgetExceeded { needed, budget })
    } else {
        Ok(())
    }
}

pub fn weight(v: &[u32]) -> usize {
    v.iter().filter(|&&x| x != 0).count()
}

pub fn hamming_distance(a: &[u32], b: &[u32]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

#[derive(Debug, Clone)]
pub struct LinearCode {
    field: Field,
    n: usize,
    k: usize,
    generator: Matrix,
    parity: Matrix,
    distance: OnceLock<usize>,
}

impl LinearCode {
    /// The code spanned by the rows of `g`. Dependent rows are dropped and
    /// the generator is kept in reduced row echelon form.
    pub fn from_generator(g: &Matrix) -> Result<LinearCode> {
        if g.is_zero() {
            return Err(Error::ZeroMatrix);
        }
        Ok(Self::from_rows_unchecked(g))
    }

    fn from_rows_unchecked(g: &Matrix) -> LinearCode {
        let (r, pivots) = g.rref();
        let k = pivots.len();
        let generator = r.top_rows(k);
        let parity = generator.nullspace();
        LinearCode {
            field: g.field().clone(),
            n: g.cols(),
            k,
            generator,
            parity,
            distance: OnceLock::new(),
        }
    }

    /// The `[n, 0]` code.
    pub fn zero_code(field: &Field, n: usize) -> LinearCode {
        Self::from_rows_unchecked(&Matrix::zeros(field, 0, n))
    }

    /// The `[n, n, 1]` code.
    pub fn full_space(field: &Field, n: usize) -> LinearCode {
        Self::from_rows_unchecked(&Matrix::identity(field, n))
    }

    /// The code whose parity-check matrix is `h`.
    pub fn from_parity_check(h: &Matrix) -> LinearCode {
        Self::from_rows_unchecked(h).dual()
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Length.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Dimension.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn redundancy(&self) -> usize {
        self.n - self.k
    }

    /// Full-rank generator in reduced row echelon form.
    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    /// Full-rank parity-check matrix.
    pub fn parity(&self) -> &Matrix {
        &self.parity
    }

    pub fn dual(&self) -> LinearCode {
        Self::from_rows_unchecked(&self.parity)
    }

    fn check_len(&self, v: &[u32]) -> Result<()> {
        if v.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: v.len(),
            });
        }
        if let Some(&x) = v.iter().find(|&&x| !self.field.contains(x)) {
            return Err(Error::ElementOutOfRange {
                value: x,
                q: self.field.order(),
            });
        }
        Ok(())
    }

    /// `H v^T`.
    pub fn syndrome(&self, v: &[u32]) -> Result<Vec<u32>> {
        self.check_len(v)?;
        self.parity.mul_vec(v)
    }

    pub fn contains(&self, v: &[u32]) -> Result<bool> {
        Ok(self.syndrome(v)?.iter().all(|&x| x == 0))
    }

    /// `m G` for a message of length `k`.
    pub fn encode(&self, msg: &[u32]) -> Result<Vec<u32>> {
        self.generator.vec_mul(msg)
    }

    /// Calls `visit` on every codeword, the zero word first. The order is
    /// the lexicographic order of the messages.
    pub fn for_each_codeword(&self, mut visit: impl FnMut(&[u32])) {
        let f = &self.field;
        let q = f.order();
        let (n, k) = (self.n, self.k);
        // multiples[i][c] = c * row_i
        let multiples: Vec<Vec<Vec<u32>>> = (0..k)
            .map(|i| {
                let row = self.generator.row(i);
                (0..q)
                    .map(|c| row.iter().map(|&x| f.mul(c, x)).collect())
                    .collect()
            })
            .collect();
        let mut partial = vec![vec![0u32; n]; k + 1];
        fn rec(
            depth: usize,
            k: usize,
            q: u32,
            f: &Field,
            multiples: &[Vec<Vec<u32>>],
            partial: &mut [Vec<u32>],
            visit: &mut dyn FnMut(&[u32]),
        ) {
            if depth == k {
                visit(&partial[k]);
                return;
            }
            for c in 0..q {
                let (lo, hi) = partial.split_at_mut(depth + 1);
                let src = &lo[depth];
                let dst = &mut hi[0];
                for ((d, &s), &m) in dst.iter_mut().zip(src).zip(&multiples[depth][c as usize]) {
                    *d = f.add(s, m);
                }
                rec(depth + 1, k, q, f, multiples, partial, visit);
            }
        }
        rec(0, k, q, f, &multiples, &mut partial, &mut visit);
    }

    /// All codewords; only sensible for tiny codes.
    pub fn codewords(&self, budget: u64) -> Result<Vec<Vec<u32>>> {
        check_budget(power_count(self.field.order(), self.k), budget)?;
        let mut out = Vec::new();
        self.for_each_codeword(|c| out.push(c.to_vec()));
        Ok(out)
    }

    /// Exact minimum distance with the default budget, cached.
    pub fn min_distance(&self) -> Result<usize> {
        if let Some(&d) = self.distance.get() {
            return Ok(d);
        }
        let d = self.min_distance_with_budget(DEFAULT_BUDGET)?;
        let _ = self.distance.set(d);
        Ok(d)
    }

    /// Exact minimum distance. Enumerates codewords when `q^k` fits the
    /// budget, otherwise searches for the smallest linearly dependent set of
    /// parity-check columns.
    pub fn min_distance_with_budget(&self, budget: u64) -> Result<usize> {
        if self.k == 0 {
            return Err(Error::DegenerateCode);
        }
        if let Some(&d) = self.distance.get() {
            return Ok(d);
        }
        let d = if power_count(self.field.order(), self.k) <= budget as u128 {
            self.min_distance_by_enumeration()
        } else {
            self.min_distance_by_columns(budget)?
        };
        let _ = self.distance.set(d);
        Ok(d)
    }

    fn min_distance_by_enumeration(&self) -> usize {
        let mut best = usize::MAX;
        self.for_each_codeword(|c| {
            let w = weight(c);
            if w > 0 && w < best {
                best = w;
            }
        });
        best
    }

    pub(crate) fn min_distance_by_columns(&self, budget: u64) -> Result<usize> {
        let r = self.redundancy();
        let needed: u128 = (1..=(r + 1).min(self.n)).map(|t| binomial(self.n, t)).sum();
        check_budget(needed, budget)?;
        for t in 1..=self.n {
            if t > r {
                return Ok(t);
            }
            if (0..self.n)
                .combinations(t)
                .any(|cols| self.parity.select_columns(&cols).rank() < t)
            {
                return Ok(t);
            }
        }
        unreachable!("n + 1 columns are always dependent")
    }

    /// Entry `w` counts the codewords of Hamming weight `w`.
    pub fn weight_enumerator(&self, budget: u64) -> Result<Vec<u64>> {
        check_budget(power_count(self.field.order(), self.k), budget)?;
        let mut counts = vec![0u64; self.n + 1];
        self.for_each_codeword(|c| counts[weight(c)] += 1);
        Ok(counts)
    }

    /// `d = n - k + 1`. Codes of dimension 0 count as MDS.
    pub fn is_mds(&self) -> Result<bool> {
        if self.k == 0 {
            return Ok(true);
        }
        Ok(self.min_distance()? == self.n - self.k + 1)
    }

    pub fn is_mds_with_budget(&self, budget: u64) -> Result<bool> {
        if self.k == 0 {
            return Ok(true);
        }
        Ok(self.min_distance_with_budget(budget)? == self.n - self.k + 1)
    }

    /// MDS test through the generator: every `k` columns independent.
    pub fn is_mds_by_minors(&self) -> bool {
        self.generator
            .all_k_columns_independent(self.k)
            .expect("k never exceeds the generator shape")
    }

    /// Set equality of codewords.
    pub fn same_code(&self, other: &LinearCode) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        if self.field != other.field {
            return Err(Error::ContextMismatch);
        }
        Ok(self.k == other.k && self.generator == other.generator)
    }

    /// The `[n+1, k]` code `{(c, <u, c>) : c in C}`.
    pub fn extend_u(&self, u: &[u32]) -> Result<LinearCode> {
        self.check_len(u)?;
        let col = self.generator.mul_vec(u)?;
        let g = self.generator.append_column(&col)?;
        Ok(Self::from_rows_unchecked(&g))
    }

    /// Parity-check matrix of `extend_u(u)` built from this code's
    /// parity-check matrix.
    pub fn extension_parity_check_for(&self, u: &[u32]) -> Result<Matrix> {
        extension_parity_check(&self.parity, u)
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// The code generated by `(G | g)`.
pub fn extend_g(g: &Matrix, col: &[u32]) -> Result<LinearCode> {
    if g.rank() != g.rows() || g.rows() == 0 {
        return Err(Error::RankDeficient);
    }
    if col.len() != g.rows() {
        return Err(Error::LengthMismatch {
            expected: g.rows(),
            got: col.len(),
        });
    }
    LinearCode::from_generator(&g.append_column(col)?)
}

/// The block matrix `[[H, 0], [u, -1]]`.
pub fn extension_parity_check(h: &Matrix, u: &[u32]) -> Result<Matrix> {
    if u.len() != h.cols() {
        return Err(Error::LengthMismatch {
            expected: h.cols(),
            got: u.len(),
        });
    }
    let f = h.field();
    let bordered = h.append_column(&vec![0; h.rows()])?;
    let mut last = u.to_vec();
    last.push(f.neg(1));
    bordered.append_row(&last)
}

/// Every `u` with `G u^T = g`; there are `q^(n - rank G)` of them when the
/// system is consistent.
pub fn extension_fiber(g: &Matrix, col: &[u32], budget: u64) -> Result<Vec<Vec<u32>>> {
    let f = g.field();
    let particular = g.solve(col)?;
    let basis = g.nullspace();
    let dim = basis.rows();
    check_budget(power_count(f.order(), dim), budget)?;
    let q = f.order();
    let mut out = Vec::new();
    let mut coeffs = vec![0u32; dim];
    loop {
        let offset = basis.vec_mul(&coeffs)?;
        out.push(
            particular
                .iter()
                .zip(&offset)
                .map(|(&a, &b)| f.add(a, b))
                .collect(),
        );
        // odometer
        let mut i = 0;
        loop {
            if i == dim {
                return Ok(out);
            }
            coeffs[i] += 1;
            if coeffs[i] < q {
                break;
            }
            coeffs[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{egrs_generator, grs_generator};

    fn gf5() -> Field {
        Field::prime(5).unwrap()
    }

    fn rs42() -> LinearCode {
        let f = gf5();
        LinearCode::from_generator(&grs_generator(&f, &[0, 1, 2, 3], &[1; 4], 2).unwrap()).unwrap()
    }

    #[test]
    fn construction_and_parameters() {
        let f = gf5();
        let full = LinearCode::from_generator(&Matrix::identity(&f, 3)).unwrap();
        assert_eq!(
            (full.n(), full.k(), full.min_distance().unwrap()),
            (3, 3, 1)
        );

        let dep = Matrix::from_rows(&f, 3, &[vec![1, 2, 3], vec![2, 4, 1]]).unwrap();
        assert_eq!(LinearCode::from_generator(&dep).unwrap().k(), 1);

        let c = rs42();
        assert_eq!((c.n(), c.k(), c.min_distance().unwrap()), (4, 2, 3));
        assert!(c.is_mds().unwrap());
        assert!(c.is_mds_by_minors());

        assert_eq!(
            LinearCode::from_generator(&Matrix::zeros(&f, 2, 3)).unwrap_err(),
            Error::ZeroMatrix
        );
    }

    #[test]
    fn duals() {
        let f = gf5();
        let full = LinearCode::full_space(&f, 4);
        let z = full.dual();
        assert_eq!(z.k(), 0);
        assert_eq!(z.generator().rows(), 0);
        assert_eq!(z.min_distance().unwrap_err(), Error::DegenerateCode);
        assert!(z.is_mds().unwrap());
        assert_eq!(
            z.weight_enumerator(DEFAULT_BUDGET).unwrap(),
            vec![1, 0, 0, 0, 0]
        );

        let c = rs42();
        let d = c.dual();
        let expect = LinearCode::from_generator(
            &grs_generator(&f, &[0, 1, 2, 3], &[4, 3, 2, 1], 2).unwrap(),
        )
        .unwrap();
        assert!(d.same_code(&expect).unwrap());
        assert!(c
            .generator()
            .mul(&d.generator().transpose())
            .unwrap()
            .is_zero());
        assert!(c.same_code(&d.dual()).unwrap());
    }

    #[test]
    fn distances_and_weights() {
        let f = Field::new(2, 2).unwrap();
        let rep =
            LinearCode::from_generator(&Matrix::from_rows(&f, 5, &[vec![1; 5]]).unwrap()).unwrap();
        assert_eq!(rep.min_distance().unwrap(), 5);
        assert_eq!(
            rep.weight_enumerator(DEFAULT_BUDGET).unwrap(),
            vec![1, 0, 0, 0, 0, 3]
        );

        let b = Field::prime(2).unwrap();
        let c = LinearCode::from_generator(
            &Matrix::from_rows(&b, 4, &[vec![1, 1, 0, 0], vec![0, 0, 1, 1]]).unwrap(),
        )
        .unwrap();
        assert_eq!(c.min_distance().unwrap(), 2);
        assert!(!c.is_mds().unwrap());
        assert!(!c.is_mds_by_minors());

        let egrs =
            LinearCode::from_generator(&egrs_generator(&gf5(), &[0, 1, 2, 3], &[1; 4], 2).unwrap())
                .unwrap();
        assert_eq!(
            (egrs.n(), egrs.k(), egrs.min_distance().unwrap()),
            (5, 2, 4)
        );
        assert!(matches!(
            rs42().weight_enumerator(10),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn column_search_matches_enumeration() {
        let f = Field::new(2, 2).unwrap();
        for k in 1..5 {
            let g = grs_generator(&f, &[0, 1, 2, 3], &[1, 2, 3, 1], k).unwrap();
            let c = LinearCode::from_generator(&g).unwrap();
            let fresh = LinearCode::from_generator(&g).unwrap();
            assert_eq!(
                c.min_distance_by_enumeration(),
                fresh.min_distance_by_columns(DEFAULT_BUDGET).unwrap()
            );
        }
        let b = Field::prime(2).unwrap();
        let c = LinearCode::from_generator(
            &Matrix::from_rows(&b, 4, &[vec![1, 1, 0, 0], vec![0, 0, 1, 1]]).unwrap(),
        )
        .unwrap();
        assert_eq!(c.min_distance_with_budget(14).unwrap(), 2);
        assert!(matches!(
            c.dual().min_distance_with_budget(1),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn extensions() {
        let f = gf5();
        let c = rs42();
        // u in the dual: trivial extension
        let u = c.dual().generator().row(0).to_vec();
        let e = c.extend_u(&u).unwrap();
        e.for_each_codeword(|cw| assert_eq!(cw[4], 0));
        let z = c.extend_u(&[0; 4]).unwrap();
        assert!(z.generator().column(4).iter().all(|&x| x == 0));
        assert_eq!(
            c.extend_u(&[1, 2]).unwrap_err(),
            Error::LengthMismatch {
                expected: 4,
                got: 2
            }
        );

        // G_2 with (0, 1)^T is the extended GRS generator
        let g = grs_generator(&f, &[0, 1, 2, 3], &[1; 4], 2).unwrap();
        let ext = extend_g(&g, &[0, 1]).unwrap();
        let egrs =
            LinearCode::from_generator(&egrs_generator(&f, &[0, 1, 2, 3], &[1; 4], 2).unwrap())
                .unwrap();
        assert!(ext.same_code(&egrs).unwrap());
        let zero = extend_g(&g, &[0, 0]).unwrap();
        assert!(zero.generator().column(4).iter().all(|&x| x == 0));
        let deficient = Matrix::from_rows(&f, 2, &[vec![1, 1], vec![2, 2]]).unwrap();
        assert_eq!(
            extend_g(&deficient, &[1, 1]).unwrap_err(),
            Error::RankDeficient
        );

        // u = (0, 3, 3, 4) gives the extended GRS code too
        let u = [0, 3, 3, 4];
        assert_eq!(g.mul_vec(&u).unwrap(), vec![0, 1]);
        let ext = c.extend_u(&u).unwrap();
        assert!(ext.same_code(&egrs).unwrap());
        let h = c.extension_parity_check_for(&u).unwrap();
        assert_eq!((h.rows(), h.cols()), (3, 5));
        let gu = g.append_column(&g.mul_vec(&u).unwrap()).unwrap();
        assert!(gu.mul(&h.transpose()).unwrap().is_zero());
        assert!(egrs.generator().mul(&h.transpose()).unwrap().is_zero());
    }

    #[test]
    fn parity_check_of_full_space_extension() {
        let f = gf5();
        let full = LinearCode::full_space(&f, 3);
        let h = extension_parity_check(full.parity(), &[1, 2, 3]).unwrap();
        assert_eq!(h.row_vecs(), vec![vec![1, 2, 3, 4]]);
    }

    #[test]
    fn fiber_sizes() {
        let f = Field::prime(3).unwrap();
        let g = grs_generator(&f, &[0, 1, 2], &[1; 3], 2).unwrap();
        let fiber = extension_fiber(&g, &[1, 2], DEFAULT_BUDGET).unwrap();
        assert_eq!(fiber.len(), 3);
        let c = LinearCode::from_generator(&g).unwrap();
        let target = extend_g(&g, &[1, 2]).unwrap();
        for u in &fiber {
            assert_eq!(g.mul_vec(u).unwrap(), vec![1, 2]);
            assert!(c.extend_u(u).unwrap().same_code(&target).unwrap());
        }
        assert!(fiber.iter().all_unique());
    }

    #[test]
    fn same_code_checks() {
        let c = rs42();
        let swapped = Matrix::from_rows(
            c.field(),
            4,
            &[c.generator().row(1).to_vec(), c.generator().row(0).to_vec()],
        )
        .unwrap();
        assert!(c
            .same_code(&LinearCode::from_generator(&swapped).unwrap())
            .unwrap());
        let other = LinearCode::full_space(c.field(), 3);
        assert!(matches!(
            c.same_code(&other),
            Err(Error::LengthMismatch { .. })
        ));
    }
}
