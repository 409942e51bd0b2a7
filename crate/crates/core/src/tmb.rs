//! Enumeration of the movable Minkowski basis.
//!
//! For a maximal cone `sigma` the search starts from the dual cone and adds
//! the half-spaces `H_t(rho) = {m : <m, u_rho> >= -t}` of the remaining rays
//! one at a time, depth first. The first ray is cut at height one. Every later
//! ray is either cut at the smallest `t > 0` keeping all current vertices
//! (when such a cut exists) or at `t = 0`. Every bounded region that is the
//! polytope of a divisor is recorded. Running this over every maximal cone
//! and merging by divisor class gives the basis.

use std::collections::{BTreeMap, HashSet};

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::fans::{dual_cone, Cone};
use crate::parallel::{self, Execution};
use crate::polyhedra::{HalfSpace, Polyhedron};
use crate::rational::{self, IVec, Rat};
use crate::toric::{DivisorClass, ToricDivisor, ToricVariety};
use crate::typecone::is_indecomposable;

/// One half-space added during the search.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Step {
    pub ray: usize,
    pub offset: Rat,
}

/// A Minkowski basis element together with where it was found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisElement {
    /// Representative trivial on the discovering cone, scaled so that its
    /// class is primitive.
    pub divisor: ToricDivisor,
    pub polytope: Polyhedron,
    pub class: DivisorClass,
    pub cone: usize,
    pub steps: Vec<Step>,
}

impl BasisElement {
    /// Primitive integer vector of the class; the deduplication key.
    pub fn class_key(&self) -> IVec {
        self.class.primitive()
    }
}

/// Output of [`basis_all_flags`].
#[derive(Clone, Debug)]
pub struct BasisReport {
    /// Basis elements sorted by class.
    pub elements: Vec<BasisElement>,
    /// Candidates that failed the independent indecomposability check.
    pub rejected: Vec<BasisElement>,
    /// Extremal rays of the movable cone used as completeness oracle.
    pub movable_rays: Vec<IVec>,
}

/// The divisor whose polytope is `delta`, if any: coefficients are the
/// support values of `delta`, accepted when they reproduce it exactly.
pub fn corresponds_to_divisor(x: &ToricVariety, delta: &Polyhedron) -> Result<Option<ToricDivisor>> {
    if delta.is_empty() || !delta.is_bounded() || delta.affine_dim() == Some(0) {
        return Ok(None);
    }
    let coeffs = x
        .rays()
        .iter()
        .map(|u| delta.support_value(u))
        .collect::<Result<Vec<Rat>>>()?;
    let d = ToricDivisor::new(coeffs);
    Ok((x.polytope_of(&d)? == *delta).then_some(d))
}

struct Search<'a> {
    x: &'a ToricVariety,
    sigma: usize,
    seen: HashSet<(u64, Polyhedron)>,
    found: BTreeMap<IVec, BasisElement>,
}

impl Search<'_> {
    fn record(&mut self, delta: &Polyhedron, steps: &[Step]) -> Result<()> {
        let Some(d) = corresponds_to_divisor(self.x, delta)? else {
            return Ok(());
        };
        let class = self.x.class_of(&d)?;
        if class.is_zero() {
            return Ok(());
        }
        let key = class.primitive();
        if self.found.contains_key(&key) {
            return Ok(());
        }
        // rescale so that the class is the primitive vector
        let first = class
            .coords()
            .iter()
            .zip(&key)
            .find(|(_, k)| **k != 0)
            .expect("nonzero class");
        let factor = Rat::from_integer((*first.1).into()) / first.0;
        let divisor = d.scaled(&factor);
        let polytope = delta.scale(&factor);
        self.found.insert(
            key,
            BasisElement {
                class: class.scaled(&factor),
                divisor,
                polytope,
                cone: self.sigma,
                steps: steps.to_vec(),
            },
        );
        Ok(())
    }

    fn explore(&mut self, delta: Polyhedron, remaining: u64, steps: &mut Vec<Step>) -> Result<()> {
        for rho in 0..self.x.num_rays() {
            if remaining & (1 << rho) == 0 {
                continue;
            }
            let u = &self.x.rays()[rho];
            let t = delta
                .vertices()
                .iter()
                .map(|p| -rational::dot_int(p, u))
                .max()
                .expect("nonempty region");
            let mut offsets = Vec::with_capacity(2);
            if t.is_positive() {
                offsets.push(t);
            }
            offsets.push(Rat::zero());
            let rest = remaining & !(1 << rho);
            for offset in offsets {
                let next = delta.intersect(&[HalfSpace::new(u.clone(), offset.clone())?])?;
                if next.is_empty() || next.is_point() {
                    continue;
                }
                if !self.seen.insert((rest, next.clone())) {
                    continue;
                }
                steps.push(Step { ray: rho, offset });
                self.record(&next, steps)?;
                self.explore(next, rest, steps)?;
                steps.pop();
            }
        }
        Ok(())
    }
}

/// Runs the search for one maximal cone. Elements are deduplicated by class
/// and sorted by class.
pub fn tmb_run(x: &ToricVariety, sigma: usize) -> Result<Vec<BasisElement>> {
    let cone_rays = x.cone(sigma)?;
    assert!(x.num_rays() <= 64, "at most 64 rays are supported");
    let dual = dual_cone(&Cone::new(
        x.dim(),
        cone_rays.iter().map(|&r| x.rays()[r].clone()).collect(),
    )?)?;
    let start = Polyhedron::from_generators(
        x.dim(),
        vec![rational::zero_vec(x.dim())],
        dual.generators().to_vec(),
    )?;
    let others: Vec<usize> = (0..x.num_rays()).filter(|r| !cone_rays.contains(r)).collect();
    let mut search = Search {
        x,
        sigma,
        seen: HashSet::new(),
        found: BTreeMap::new(),
    };
    for &first in &others {
        let one = Rat::from_integer(1.into());
        let delta = start.intersect(&[HalfSpace::new(x.rays()[first].clone(), one.clone())?])?;
        let mut steps = vec![Step {
            ray: first,
            offset: one,
        }];
        search.record(&delta, &steps)?;
        let remaining = others
            .iter()
            .filter(|&&r| r != first)
            .fold(0u64, |acc, &r| acc | (1 << r));
        search.explore(delta, remaining, &mut steps)?;
    }
    Ok(search.found.into_values().collect())
}

/// Runs the search on every maximal cone, merges by class, re-checks
/// indecomposability, and certifies completeness against the extremal rays
/// of the movable cone.
pub fn basis_all_flags(x: &ToricVariety, exec: Execution) -> Result<BasisReport> {
    let cones: Vec<usize> = (0..x.num_cones()).collect();
    let runs = parallel::map(exec, &cones, |&sigma| tmb_run(x, sigma));
    let mut merged: BTreeMap<IVec, BasisElement> = BTreeMap::new();
    for run in runs {
        for e in run? {
            merged.entry(e.class_key()).or_insert(e);
        }
    }
    let candidates: Vec<BasisElement> = merged.into_values().collect();
    let checks = parallel::map(exec, &candidates, |e| is_indecomposable(&e.polytope));
    let mut elements = Vec::new();
    let mut rejected = Vec::new();
    for (e, ok) in candidates.into_iter().zip(checks) {
        if ok? {
            elements.push(e);
        } else {
            rejected.push(e);
        }
    }

    let movable_rays = x.movable_cone_generators()?;
    let missing: Vec<IVec> = movable_rays
        .iter()
        .filter(|r| !elements.iter().any(|e| e.class.lies_on_ray(r)))
        .cloned()
        .collect();
    if !missing.is_empty() {
        return Err(Error::IncompleteBasis { missing });
    }
    for r in &movable_rays {
        let d = x.lift_class(&DivisorClass::from_ints(r))?;
        if !is_indecomposable(&x.polytope_of(&d)?)? {
            return Err(Error::CertificateFailed { class: r.clone() });
        }
    }
    Ok(BasisReport {
        elements,
        rejected,
        movable_rays,
    })
}
