//! Exact rational matrices: rank, column selection and random entries.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

pub type Rational = BigRational;

/// Dense row-major rational matrix.
pub type Matrix = Vec<Vec<Rational>>;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn zeros(rows: usize, cols: usize) -> Matrix {
    vec![vec![Rational::zero(); cols]; rows]
}

/// Rank by Gaussian elimination over `Q`.
#[allow(clippy::needless_range_loop)]
pub fn rank(m: &Matrix) -> usize {
    let mut a = m.clone();
    let rows = a.len();
    if rows == 0 {
        return 0;
    }
    let cols = a[0].len();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let pivot = a[r][c].clone();
        for i in r + 1..rows {
            if a[i][c].is_zero() {
                continue;
            }
            let factor = &a[i][c] / &pivot;
            for j in c..cols {
                let t = &factor * &a[r][j];
                a[i][j] -= t;
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// The submatrix on the given columns (in the given order).
pub fn columns(m: &Matrix, cols: &[usize]) -> Matrix {
    m.iter().map(|row| cols.iter().map(|&c| row[c].clone()).collect()).collect()
}

pub fn rank_of_columns(m: &Matrix, cols: &[usize]) -> usize {
    rank(&columns(m, cols))
}

/// A nonzero-biased rational with numerator in `[-9, 9]` and denominator in `[1, 4]`.
pub fn random_rational<R: Rng>(rng: &mut R) -> Rational {
    let num: i64 = rng.gen_range(-9..=9);
    let den: i64 = rng.gen_range(1..=4);
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Like [`random_rational`] but never zero.
pub fn random_nonzero_rational<R: Rng>(rng: &mut R) -> Rational {
    loop {
        let q = random_rational(rng);
        if !q.is_zero() {
            return q;
        }
    }
}

pub fn random_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize) -> Matrix {
    (0..rows).map(|_| (0..cols).map(|_| random_rational(rng)).collect()).collect()
}

/// `a · b`.
pub fn mul(a: &Matrix, b: &Matrix) -> Matrix {
    let inner = b.len();
    let cols = if inner == 0 { 0 } else { b[0].len() };
    a.iter()
        .map(|row| (0..cols).map(|j| (0..inner).fold(Rational::zero(), |acc, t| acc + &row[t] * &b[t][j])).collect())
        .collect()
}

pub fn identity(n: usize) -> Matrix {
    (0..n).map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect()).collect()
}
