//! Okounkov bodies of torus-invariant divisors with respect to
//! torus-invariant flags.
//!
//! A flag is a maximal cone with an ordering `(v_1, ..., v_n)` of its rays;
//! `Y_i` is the intersection of the first `i` prime divisors. For a big `D`
//! trivialized on the cone, the Okounkov body is the image of `P_D` under
//! `m -> (<m, v_1>, ..., <m, v_n>)`.

use crate::error::{Error, Result};
use crate::polyhedra::Polyhedron;
use crate::rational::IVec;
use crate::toric::{ToricDivisor, ToricVariety};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TFlag {
    cone: usize,
    order: Vec<usize>,
}

impl TFlag {
    /// `order` lists ray indices and must be a permutation of the rays of
    /// maximal cone `cone`.
    pub fn new(x: &ToricVariety, cone: usize, order: Vec<usize>) -> Result<Self> {
        let rays = x.cone(cone)?;
        let mut a = order.clone();
        a.sort_unstable();
        let mut b = rays.to_vec();
        b.sort_unstable();
        if a != b {
            return Err(Error::InvalidFlag(format!(
                "{order:?} is not an ordering of the rays {rays:?} of cone {cone}"
            )));
        }
        Ok(TFlag { cone, order })
    }

    /// The flag with the rays in the order the cone lists them.
    pub fn natural(x: &ToricVariety, cone: usize) -> Result<Self> {
        let order = x.cone(cone)?.to_vec();
        TFlag::new(x, cone, order)
    }

    pub fn cone(&self) -> usize {
        self.cone
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }
}

/// The unimodular matrix with rows `v_1, ..., v_n`.
pub fn flag_transform(x: &ToricVariety, flag: &TFlag) -> Vec<IVec> {
    flag.order.iter().map(|&r| x.rays()[r].clone()).collect()
}

/// `Delta(D) = A P_{D'}` where `D'` is `D` trivialized on the flag's cone.
/// Fails unless `P_D` is full-dimensional.
pub fn okounkov_body(x: &ToricVariety, d: &ToricDivisor, flag: &TFlag) -> Result<Polyhedron> {
    let body = okounkov_body_any(x, d, flag)?;
    if body.is_empty() {
        return Err(Error::NotPseudoEffective);
    }
    if !body.is_full_dimensional() {
        return Err(Error::NotBig {
            polytope_dim: body.affine_dim().unwrap_or(0),
            dim: x.dim(),
        });
    }
    Ok(body)
}

/// Same transform without the bigness requirement; used for summands of a
/// decomposition, which may be lower-dimensional.
pub(crate) fn okounkov_body_any(
    x: &ToricVariety,
    d: &ToricDivisor,
    flag: &TFlag,
) -> Result<Polyhedron> {
    let p = x.polytope_of(d)?;
    if p.is_empty() {
        return Ok(p);
    }
    let trivial = x.trivialize_on(d, flag.cone)?;
    x.polytope_of(&trivial)?
        .linear_image(&flag_transform(x, flag))
}
