//! Incremental double description for pointed polyhedral cones
//! `{y : <row, y> >= 0 for every row}` over exact integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::linalg;
use crate::rational::Rat;

#[derive(Clone, Debug)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64).max(1)])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }
    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
    fn contains(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & b == *b)
    }
}

#[derive(Clone, Debug)]
struct Generator {
    v: Vec<BigInt>,
    zeros: Bits,
}

fn idot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn make_primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && g != BigInt::from(1) {
        for x in v.iter_mut() {
            *x /= &g;
        }
    }
    v
}

/// Extreme rays of the cone `{y in Q^d : rows * y >= 0}`, each as a primitive
/// integer vector. Returns `None` if the cone is not pointed, i.e. the rows do
/// not span `Q^d`.
pub(crate) fn extreme_rays(rows: &[Vec<BigInt>], d: usize) -> Option<Vec<Vec<BigInt>>> {
    let m = rows.len();
    let qrows: Vec<Vec<Rat>> = rows
        .iter()
        .map(|r| r.iter().map(|x| Rat::from_integer(x.clone())).collect())
        .collect();

    // greedy choice of d independent rows for the initial simplicial cone
    let mut basis: Vec<usize> = Vec::with_capacity(d);
    let mut acc: Vec<Vec<Rat>> = Vec::new();
    for (i, r) in qrows.iter().enumerate() {
        acc.push(r.clone());
        if linalg::rank(&acc, d) == acc.len() {
            basis.push(i);
            if basis.len() == d {
                break;
            }
        } else {
            acc.pop();
        }
    }
    if basis.len() < d {
        return None;
    }

    // generators of {B y >= 0} are the columns of B^{-1}
    let bmat: Vec<Vec<Rat>> = basis.iter().map(|&i| qrows[i].clone()).collect();
    let mut gens: Vec<Generator> = (0..d)
        .map(|j| {
            let mut e = vec![Rat::zero(); d];
            e[j] = Rat::from_integer(BigInt::from(1));
            let col = linalg::solve(&bmat, &e).expect("basis rows are independent");
            let v = crate::rational::primitive_bigint(&col);
            let mut zeros = Bits::new(m);
            for (k, &bi) in basis.iter().enumerate() {
                if k != j {
                    zeros.set(bi);
                }
            }
            Generator { v, zeros }
        })
        .collect();

    for (i, row) in rows.iter().enumerate() {
        if basis.contains(&i) {
            continue;
        }
        let vals: Vec<BigInt> = gens.iter().map(|g| idot(row, &g.v)).collect();
        let pos: Vec<usize> = (0..gens.len()).filter(|&k| vals[k].is_positive()).collect();
        let neg: Vec<usize> = (0..gens.len()).filter(|&k| vals[k].is_negative()).collect();

        let mut next: Vec<Generator> = Vec::with_capacity(gens.len());
        for k in 0..gens.len() {
            if !vals[k].is_negative() {
                let mut g = gens[k].clone();
                if vals[k].is_zero() {
                    g.zeros.set(i);
                }
                next.push(g);
            }
        }
        for &p in &pos {
            for &n in &neg {
                let common = gens[p].zeros.and(&gens[n].zeros);
                if d >= 2 && common.count() < d - 2 {
                    continue;
                }
                let adjacent = (0..gens.len())
                    .all(|k| k == p || k == n || !gens[k].zeros.contains(&common));
                if !adjacent {
                    continue;
                }
                let a = &vals[p];
                let b = -&vals[n];
                let v: Vec<BigInt> = gens[n]
                    .v
                    .iter()
                    .zip(&gens[p].v)
                    .map(|(x, y)| a * x + &b * y)
                    .collect();
                let mut zeros = common;
                zeros.set(i);
                next.push(Generator {
                    v: make_primitive(v),
                    zeros,
                });
            }
        }
        gens = next;
    }
    Some(gens.into_iter().map(|g| g.v).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    fn sorted(mut v: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
        v.sort();
        v
    }

    #[test]
    fn square_cone() {
        // cone over the square [-1,1]^2 at height 1 in homogeneous coordinates
        let rows = b(&[&[1, 0, 1], &[-1, 0, 1], &[0, 1, 1], &[0, -1, 1], &[0, 0, 1]]);
        let rays = sorted(extreme_rays(&rows, 3).unwrap());
        assert_eq!(
            rays,
            b(&[&[-1, -1, 1], &[-1, 1, 1], &[1, -1, 1], &[1, 1, 1]])
        );
    }

    #[test]
    fn not_pointed() {
        let rows = b(&[&[1, 0, 0], &[0, 1, 0]]);
        assert!(extreme_rays(&rows, 3).is_none());
    }

    #[test]
    fn collapsed_cone() {
        // x >= 0, -x >= 0, y >= 0 : a single ray
        let rows = b(&[&[1, 0], &[-1, 0], &[0, 1]]);
        assert_eq!(extreme_rays(&rows, 2).unwrap(), b(&[&[0, 1]]));
        // x >= 0, -x >= 0, y >= 0, -y >= 0 : the origin
        let rows = b(&[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]]);
        assert!(extreme_rays(&rows, 2).unwrap().is_empty());
    }
}
