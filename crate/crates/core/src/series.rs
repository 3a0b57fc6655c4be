//! Recurrence and power-series evaluation of the partition families.
//!
//! Every family is read off a generating function truncated at `q^n_max`:
//! infinite products are expanded factor by factor, and the rank and crank
//! distributions are expanded as two-variable series in `(z, q)` where the
//! exponent of `z` carries the statistic. Coefficients are exact big
//! integers.

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::involutions::pentagonal;
use crate::statistics::{Counter, SignedCounter, StatisticFamily};

/// `p(0..=n_max)` from Euler's pentagonal recurrence
/// `p(n) = Σ_{k≠0} (-1)^(k+1) p(n - k(3k-1)/2)`.
pub fn partition_numbers(n_max: u32) -> Vec<Counter> {
    let n_max = n_max as usize;
    let mut p: Vec<BigInt> = Vec::with_capacity(n_max + 1);
    p.push(BigInt::from(1));
    for n in 1..=n_max {
        let mut acc = BigInt::zero();
        for k in 1.. {
            let k = k as i64;
            let g1 = pentagonal(-k) as usize;
            if g1 > n {
                break;
            }
            let g2 = pentagonal(k) as usize;
            let mut term = p[n - g1].clone();
            if g2 <= n {
                term += &p[n - g2];
            }
            if k % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        p.push(acc);
    }
    p.into_iter()
        .map(|v| v.to_biguint().expect("partition numbers are nonnegative"))
        .collect()
}

/// `p(n)` by the pentagonal recurrence.
pub fn euler_p(n: u32) -> Counter {
    partition_numbers(n).pop().expect("nonempty table")
}

/// Truncated univariate power series with exact coefficients.
#[derive(Clone, Debug, PartialEq)]
struct Series(Vec<BigInt>);

impl Series {
    fn one(n_max: usize) -> Self {
        let mut c = vec![BigInt::zero(); n_max + 1];
        c[0] = BigInt::from(1);
        Series(c)
    }

    /// Multiplies by `(1 + sign q^k)`.
    fn mul_binomial(&mut self, k: usize, sign: i32) {
        for n in (k..self.0.len()).rev() {
            let prev = self.0[n - k].clone();
            if sign > 0 {
                self.0[n] += prev;
            } else {
                self.0[n] -= prev;
            }
        }
    }

    /// Divides by `(1 + sign q^k)`.
    fn div_binomial(&mut self, k: usize, sign: i32) {
        for n in k..self.0.len() {
            let prev = self.0[n - k].clone();
            if sign > 0 {
                self.0[n] -= prev;
            } else {
                self.0[n] += prev;
            }
        }
    }
}

/// Truncated series in `q` whose coefficients are Laurent polynomials in
/// `z`, stored densely over exponents `-n_max..=n_max`.
struct Bivariate {
    n_max: usize,
    coeffs: Vec<Vec<BigInt>>,
}

impl Bivariate {
    fn zero(n_max: usize) -> Self {
        Self {
            n_max,
            coeffs: vec![vec![BigInt::zero(); 2 * n_max + 1]; n_max + 1],
        }
    }

    fn monomial(n_max: usize, q_exp: usize) -> Self {
        let mut s = Self::zero(n_max);
        s.coeffs[q_exp][n_max] = BigInt::from(1);
        s
    }

    /// Divides by `(1 - z^dz q^k)` for `dz` in `{-1, 1}`. Only exponents
    /// with `|z| <= q-degree` can be nonzero, which bounds the inner loop.
    fn div_geometric(&mut self, k: usize, dz: i64) {
        let off = self.n_max as i64;
        for n in k..=self.n_max {
            let span = n as i64;
            for e in -span..=span {
                let src = e - dz;
                if src.abs() > (n - k) as i64 {
                    continue;
                }
                let (lo, hi) = self.coeffs.split_at_mut(n);
                let prev = &lo[n - k][(src + off) as usize];
                if !prev.is_zero() {
                    hi[0][(e + off) as usize] += prev;
                }
            }
        }
    }

    fn add_assign(&mut self, other: &Bivariate) {
        for (row, orow) in self.coeffs.iter_mut().zip(&other.coeffs) {
            for (c, o) in row.iter_mut().zip(orow) {
                if !o.is_zero() {
                    *c += o;
                }
            }
        }
    }

    /// Multiplies by a univariate series given as sparse `(q-exponent, coeff)`.
    fn mul_sparse(&self, terms: &[(usize, i64)]) -> Bivariate {
        let mut out = Bivariate::zero(self.n_max);
        for n in 0..=self.n_max {
            for &(shift, c) in terms {
                if shift > n {
                    continue;
                }
                for (dst, src) in out.coeffs[n].iter_mut().zip(&self.coeffs[n - shift]) {
                    if !src.is_zero() {
                        *dst += src * c;
                    }
                }
            }
        }
        out
    }

    /// Coefficients of `q^n` as `(z-exponent, value)` pairs.
    fn row(&self, n: usize) -> impl Iterator<Item = (i64, &BigInt)> {
        let off = self.n_max as i64;
        self.coeffs[n]
            .iter()
            .enumerate()
            .map(move |(i, c)| (i as i64 - off, c))
    }
}

/// `N(m, n)`: number of partitions of `n` with rank `m`, from
/// `1 + Σ_{k≥1} q^{k²} / ((zq;q)_k (q/z;q)_k)`.
fn rank_distribution(n_max: usize) -> Bivariate {
    let mut total = Bivariate::monomial(n_max, 0);
    for k in 1.. {
        if k * k > n_max {
            break;
        }
        let mut term = Bivariate::monomial(n_max, k * k);
        for i in 1..=k {
            term.div_geometric(i, 1);
            term.div_geometric(i, -1);
        }
        total.add_assign(&term);
    }
    total
}

/// `M(m, n)`: number of partitions of `n` with crank `m`, from
/// `(q;q)_∞ / ((zq;q)_∞ (q/z;q)_∞)`.
///
/// The generating function disagrees with the partition statistic only at
/// `n = 1`, where it gives `-1 + z + 1/z`; that row is replaced by the single
/// partition `(1)`, whose crank is `-1`.
fn crank_distribution(n_max: usize) -> Bivariate {
    let mut denom = Bivariate::monomial(n_max, 0);
    for i in 1..=n_max {
        denom.div_geometric(i, 1);
        denom.div_geometric(i, -1);
    }
    let mut euler = Vec::new();
    for k in 0i64.. {
        let a = pentagonal(k);
        if a as usize > n_max {
            break;
        }
        let sign = if k % 2 == 0 { 1 } else { -1 };
        euler.push((a as usize, sign));
        let b = pentagonal(-k);
        if k > 0 && (b as usize) <= n_max {
            euler.push((b as usize, sign));
        }
    }
    let mut out = denom.mul_sparse(&euler);
    if n_max >= 1 {
        let off = n_max as i64;
        for c in out.coeffs[1].iter_mut() {
            *c = BigInt::zero();
        }
        out.coeffs[1][(off - 1) as usize] = BigInt::from(1);
    }
    out
}

fn sum_row(dist: &Bivariate, n: usize, keep: impl Fn(i64) -> bool) -> BigInt {
    dist.row(n)
        .filter(|(e, _)| keep(*e))
        .map(|(_, c)| c)
        .sum()
}

/// All families tabulated for `0..=n_max` by series evaluation.
pub struct SeriesTables {
    n_max: u32,
    p: Vec<BigInt>,
    values: Vec<Vec<BigInt>>,
}

impl SeriesTables {
    pub fn new(n_max: u32) -> Self {
        let n = n_max as usize;
        let p: Vec<BigInt> = partition_numbers(n_max)
            .into_iter()
            .map(BigInt::from)
            .collect();
        let ranks = rank_distribution(n);
        let cranks = crank_distribution(n);

        let product = |build: &dyn Fn(&mut Series)| {
            let mut s = Series::one(n);
            build(&mut s);
            s.0
        };
        let triangular = |k: usize| k * (k + 1) / 2;

        let values = StatisticFamily::ALL
            .iter()
            .map(|family| match family {
                StatisticFamily::P => p.clone(),
                StatisticFamily::PEo => product(&|s| (1..=n).for_each(|k| s.div_binomial(k, 1))),
                StatisticFamily::PBarEo => product(&|s| {
                    for k in 1..=n {
                        s.mul_binomial(k, -1);
                        s.div_binomial(k, 1);
                    }
                }),
                StatisticFamily::Q => product(&|s| (1..=n).for_each(|k| s.mul_binomial(k, 1))),
                StatisticFamily::QOdd => {
                    product(&|s| (1..=n).step_by(2).for_each(|k| s.mul_binomial(k, 1)))
                }
                StatisticFamily::QEven => {
                    product(&|s| (2..=n).step_by(2).for_each(|k| s.mul_binomial(k, 1)))
                }
                StatisticFamily::PedEo => product(&|s| {
                    for k in 1..=n {
                        if k % 2 == 1 {
                            s.div_binomial(k, 1);
                        } else {
                            s.mul_binomial(k, -1);
                        }
                    }
                }),
                StatisticFamily::Pe2MinusPo2 => product(&|s| {
                    for k in 1..=n {
                        s.div_binomial(k, if k % 2 == 1 { -1 } else { 1 });
                    }
                }),
                StatisticFamily::NRank => (0..=n).map(|x| sum_row(&ranks, x, |e| e >= 0)).collect(),
                StatisticFamily::RRank => (0..=n).map(|x| sum_row(&ranks, x, |e| e > 0)).collect(),
                StatisticFamily::RankNegative => {
                    (0..=n).map(|x| sum_row(&ranks, x, |e| e < 0)).collect()
                }
                StatisticFamily::GEden => (0..=n).map(|x| sum_row(&ranks, x, |e| e <= -2)).collect(),
                StatisticFamily::CCrank => (0..=n).map(|x| sum_row(&cranks, x, |e| e >= 0)).collect(),
                StatisticFamily::DCrank => (0..=n).map(|x| sum_row(&cranks, x, |e| e > 0)).collect(),
                StatisticFamily::CrankNegative => {
                    (0..=n).map(|x| sum_row(&cranks, x, |e| e < 0)).collect()
                }
                // mex = k  <=>  contains 1..k-1 and not k: q^{T(k-1)} (1 - q^k) / (q;q)_∞
                StatisticFamily::MexOdd => (0..=n)
                    .map(|x| {
                        let at = |shift: usize| (shift <= x).then(|| &p[x - shift]);
                        let mut acc = BigInt::zero();
                        for k in (1..).step_by(2) {
                            let lo = triangular(k - 1);
                            if lo > x {
                                break;
                            }
                            acc += at(lo).unwrap();
                            if let Some(v) = at(triangular(k)) {
                                acc -= v;
                            }
                        }
                        acc
                    })
                    .collect(),
            })
            .collect();
        Self { n_max, p, values }
    }

    pub fn n_max(&self) -> u32 {
        self.n_max
    }

    fn check(&self, n: u32) -> Result<usize> {
        if n > self.n_max {
            return Err(Error::OutOfRange(n, self.n_max));
        }
        Ok(n as usize)
    }

    pub fn p(&self, n: u32) -> Result<&BigInt> {
        Ok(&self.p[self.check(n)?])
    }

    /// Value of `family` at `n` (signed families may be negative).
    pub fn value(&self, family: StatisticFamily, n: u32) -> Result<&SignedCounter> {
        let idx = StatisticFamily::ALL
            .iter()
            .position(|f| *f == family)
            .expect("family listed in ALL");
        Ok(&self.values[idx][self.check(n)?])
    }

    /// `a_{r,m}(n) = Σ_{j≥0} (mj + r) p(n - mj - r)`.
    pub fn stat_a(&self, r: u32, m: u32, n: u32) -> Result<Counter> {
        if m == 0 {
            return Err(Error::ZeroModulus);
        }
        if r >= m {
            return Err(Error::ResidueOutOfRange { r, m });
        }
        self.check(n)?;
        let mut acc = BigInt::zero();
        let mut part = r;
        while part <= n {
            acc += &self.p[(n - part) as usize] * part;
            part += m;
        }
        Ok(to_counter(acc))
    }

    /// `s_m(n) = Σ_{j≥0} j p(n - mj)`.
    pub fn stat_s(&self, m: u32, n: u32) -> Result<Counter> {
        if m == 0 {
            return Err(Error::ZeroModulus);
        }
        self.check(n)?;
        let mut acc = BigInt::zero();
        let mut j = 1;
        while m * j <= n {
            acc += &self.p[(n - m * j) as usize] * j;
            j += 1;
        }
        Ok(to_counter(acc))
    }
}

fn to_counter(v: BigInt) -> BigUint {
    debug_assert!(!v.is_negative());
    v.to_biguint().expect("nonnegative")
}
