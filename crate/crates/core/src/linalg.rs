//! Dense exact linear algebra over the rationals, plus the Smith normal form
//! of small integer matrices (used for class groups).

use num_traits::{One, Zero};

use crate::rational::{rat, QVec, Rat};

pub type QMat = Vec<QVec>;

pub fn int_matrix(rows: &[Vec<i64>]) -> QMat {
    rows.iter()
        .map(|r| r.iter().map(|&x| rat(x)).collect())
        .collect()
}

/// Reduced row echelon form. Returns the reduced matrix and its pivot columns.
pub fn rref(m: &[QVec], ncols: usize) -> (QMat, Vec<usize>) {
    let mut a: QMat = m.to_vec();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == a.len() {
            break;
        }
        let Some(p) = (row..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        let inv = a[row][col].recip();
        for x in a[row].iter_mut() {
            *x *= &inv;
        }
        let pivot = a[row].clone();
        for (r, target) in a.iter_mut().enumerate() {
            if r != row && !target[col].is_zero() {
                let f = target[col].clone();
                for (x, p) in target.iter_mut().zip(&pivot).take(ncols) {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    a.truncate(row);
    (a, pivots)
}

pub fn rank(m: &[QVec], ncols: usize) -> usize {
    rref(m, ncols).1.len()
}

/// Basis of `{x : m x = 0}`.
pub fn kernel(m: &[QVec], ncols: usize) -> Vec<QVec> {
    let (r, pivots) = rref(m, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rat::zero(); ncols];
            v[f] = Rat::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r[i][f].clone();
            }
            v
        })
        .collect()
}

pub fn det(m: &[QVec]) -> Rat {
    let n = m.len();
    let mut a = m.to_vec();
    let mut d = Rat::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Rat::zero();
        };
        if p != col {
            a.swap(p, col);
            d = -d;
        }
        d *= &a[col][col];
        let inv = a[col][col].recip();
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] * &inv;
            let pivot = a[col].clone();
            for (x, p) in a[r].iter_mut().zip(&pivot).skip(col) {
                *x -= &f * p;
            }
        }
    }
    d
}

/// Solves the square system `m x = b`; `None` when `m` is singular.
pub fn solve(m: &[QVec], b: &[Rat]) -> Option<QVec> {
    let n = m.len();
    let aug: QMat = m
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let (r, pivots) = rref(&aug, n + 1);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return None;
    }
    Some(r.iter().map(|row| row[n].clone()).collect())
}

pub fn transpose(m: &[QVec], ncols: usize) -> QMat {
    (0..ncols)
        .map(|c| m.iter().map(|row| row[c].clone()).collect())
        .collect()
}

pub fn mat_vec(m: &[QVec], v: &[Rat]) -> QVec {
    m.iter().map(|row| crate::rational::dot(row, v)).collect()
}

/// Smith normal form `p * a * q = d` of an integer matrix, with `p` and `q`
/// unimodular and `d` diagonal with `d[i] | d[i+1]`.
#[derive(Clone, Debug)]
pub struct Smith {
    pub p: Vec<Vec<i128>>,
    pub q: Vec<Vec<i128>>,
    pub diagonal: Vec<i128>,
}

pub fn smith_normal_form(a: &[Vec<i64>], ncols: usize) -> Smith {
    let m = a.len();
    let n = ncols;
    let mut d: Vec<Vec<i128>> = a
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut p = identity(m);
    let mut q = identity(n);
    let mut t = 0;
    while t < m.min(n) {
        // smallest nonzero entry in the trailing block becomes the pivot
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                if d[i][j] != 0 && best.is_none_or(|(bi, bj)| d[i][j].abs() < d[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        d.swap(t, pi);
        p.swap(t, pi);
        swap_cols(&mut d, t, pj);
        swap_cols(&mut q, t, pj);

        let mut clean = true;
        for i in t + 1..m {
            let f = d[i][t] / d[t][t];
            if f != 0 {
                row_axpy(&mut d, i, t, -f);
                row_axpy(&mut p, i, t, -f);
            }
            if d[i][t] != 0 {
                clean = false;
            }
        }
        for j in t + 1..n {
            let f = d[t][j] / d[t][t];
            if f != 0 {
                col_axpy(&mut d, j, t, -f);
                col_axpy(&mut q, j, t, -f);
            }
            if d[t][j] != 0 {
                clean = false;
            }
        }
        if !clean {
            continue;
        }
        // divisibility: fold any offending entry into row t and retry
        let offender = (t + 1..m)
            .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
            .find(|&(i, j)| d[i][j] % d[t][t] != 0);
        if let Some((i, _)) = offender {
            row_axpy(&mut d, t, i, 1);
            row_axpy(&mut p, t, i, 1);
            continue;
        }
        if d[t][t] < 0 {
            for x in d[t].iter_mut() {
                *x = -*x;
            }
            for x in p[t].iter_mut() {
                *x = -*x;
            }
        }
        t += 1;
    }
    let diagonal = (0..m.min(n)).map(|i| d[i][i]).collect();
    Smith { p, q, diagonal }
}

fn identity(n: usize) -> Vec<Vec<i128>> {
    (0..n)
        .map(|i| (0..n).map(|j| i128::from(i == j)).collect())
        .collect()
}

fn swap_cols(m: &mut [Vec<i128>], a: usize, b: usize) {
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}

/// row[dst] += f * row[src]
fn row_axpy(m: &mut [Vec<i128>], dst: usize, src: usize, f: i128) {
    let src_row = m[src].clone();
    for (x, s) in m[dst].iter_mut().zip(src_row) {
        *x += f * s;
    }
}

/// col[dst] += f * col[src]
fn col_axpy(m: &mut [Vec<i128>], dst: usize, src: usize, f: i128) {
    for row in m.iter_mut() {
        let s = row[src];
        row[dst] += f * s;
    }
}
