//! Exact rational scalars and vectors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar used for every coordinate in the crate.
pub type Rat = BigRational;

/// A point or functional with rational coordinates.
pub type QVec = Vec<Rat>;

/// An integer vector (ray generators, primitive normals, class vectors).
pub type IVec = Vec<i64>;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn qvec(v: &[i64]) -> QVec {
    v.iter().map(|&x| rat(x)).collect()
}

pub fn zero_vec(n: usize) -> QVec {
    vec![Rat::zero(); n]
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).fold(Rat::zero(), |acc, (x, y)| acc + x * y)
}

/// `<a, u>` for a rational point and an integer functional.
pub fn dot_int(a: &[Rat], u: &[i64]) -> Rat {
    debug_assert_eq!(a.len(), u.len());
    a.iter()
        .zip(u)
        .fold(Rat::zero(), |acc, (x, &y)| acc + x * BigInt::from(y))
}

pub fn add(a: &[Rat], b: &[Rat]) -> QVec {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Rat], b: &[Rat]) -> QVec {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(a: &[Rat], c: &Rat) -> QVec {
    a.iter().map(|x| x * c).collect()
}

pub fn is_zero_vec(a: &[Rat]) -> bool {
    a.iter().all(Zero::is_zero)
}

/// Clears denominators and divides by the gcd, preserving direction.
/// The zero vector maps to the zero vector.
pub fn primitive_bigint(v: &[Rat]) -> Vec<BigInt> {
    let lcm = v
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &lcm).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

pub fn primitive_int(v: &[Rat]) -> IVec {
    primitive_bigint(v)
        .iter()
        .map(|x| x.to_i64().expect("primitive vector does not fit in i64"))
        .collect()
}

pub fn primitive_i64(v: &[i64]) -> IVec {
    let g = v.iter().fold(0i64, |acc, &x| acc.gcd(&x));
    if g == 0 {
        return v.to_vec();
    }
    v.iter().map(|x| x / g).collect()
}

pub fn is_primitive(v: &[i64]) -> bool {
    v.iter().fold(0i64, |acc, &x| acc.gcd(&x)) == 1
}

/// Parses `"p/q"`, `"p"` or a decimal-free integer string.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rat::new(p, q))
        }
        None => Ok(Rat::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Canonical `"p/q"` text, `"p"` when the denominator is one.
pub fn format_rat(r: &Rat) -> String {
    r.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primitive_clears_denominators() {
        let v = vec![ratio(1, 2), ratio(-3, 4), rat(0)];
        assert_eq!(primitive_int(&v), vec![2, -3, 0]);
        assert_eq!(primitive_int(&zero_vec(2)), vec![0, 0]);
        assert_eq!(primitive_i64(&[4, -6]), vec![2, -3]);
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rat("3/6").unwrap(), ratio(1, 2));
        assert_eq!(parse_rat("-7").unwrap(), rat(-7));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
        assert_eq!(format_rat(&ratio(-4, 6)), "-2/3");
        assert_eq!(format_rat(&rat(5)), "5");
    }
}
