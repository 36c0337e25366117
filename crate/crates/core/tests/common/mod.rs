#![allow(dead_code)]

use spinlab::matrix::{ComplexMatrix, C64};

/// Truncated power series, independent of the closed-form boosts.
pub fn expm_series(x: &ComplexMatrix, terms: usize) -> ComplexMatrix {
    let n = x.rows();
    let mut sum = ComplexMatrix::identity(n);
    let mut term = ComplexMatrix::identity(n);
    for k in 1..terms {
        term = (&term * x).scale_re(1.0 / k as f64);
        sum = &sum + &term;
    }
    sum
}

/// Permutation expansion of the determinant.
pub fn leibniz_det(m: &ComplexMatrix) -> C64 {
    let n = m.rows();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = C64::new(0.0, 0.0);
    permute(&mut perm, 0, m, &mut total);
    total
}

fn permute(perm: &mut Vec<usize>, k: usize, m: &ComplexMatrix, total: &mut C64) {
    let n = perm.len();
    if k == n {
        let mut inversions = 0;
        for i in 0..n {
            for j in i + 1..n {
                if perm[i] > perm[j] {
                    inversions += 1;
                }
            }
        }
        let sign = if inversions % 2 == 0 { 1.0 } else { -1.0 };
        let prod = (0..n).fold(C64::new(sign, 0.0), |acc, i| acc * m[(i, perm[i])]);
        *total += prod;
        return;
    }
    for i in k..n {
        perm.swap(k, i);
        permute(perm, k + 1, m, total);
        perm.swap(k, i);
    }
}

pub fn vec_diff(a: &[C64], b: &[C64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}
