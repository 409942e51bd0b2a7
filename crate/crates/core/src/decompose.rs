//! Minkowski decomposition of divisor polytopes and Okounkov bodies into
//! basis elements.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::fans::{normal_fan, refines_polytope};
use crate::okounkov::{okounkov_body_any, TFlag};
use crate::polyhedra::{HalfSpace, Polyhedron};
use crate::rational::{self, QVec, Rat};
use crate::tmb::BasisElement;
use crate::toric::{DivisorClass, ToricDivisor, ToricVariety};

/// `P_M = sum_i a_i P_{B_i} + u`, verified exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coefficients {
    /// One coefficient per basis element (zero for non-candidates).
    pub coefficients: Vec<Rat>,
    pub translation: QVec,
    /// True when the coefficient vector is not unique.
    pub on_wall: bool,
}

/// Result of [`decompose`].
#[derive(Clone, Debug)]
pub struct DecomposeReport {
    pub fixed: ToricDivisor,
    pub movable: ToricDivisor,
    pub coefficients: Vec<Rat>,
    /// Translation `u` with `P_M = sum a_i P_{B_i} + u`.
    pub translation: QVec,
    pub on_wall: bool,
    /// Indices of the basis elements with positive coefficient.
    pub chamber: Vec<usize>,
    pub flag: TFlag,
    pub okounkov_body: Polyhedron,
    /// Okounkov bodies of the basis elements in the chamber.
    pub summands: Vec<(usize, Polyhedron)>,
    /// Translation `w` with `Delta(D) = sum a_i Delta(B_i) + w`.
    pub okounkov_translation: QVec,
}

/// Indices of the basis elements whose polytope is a Minkowski summand
/// candidate for `P_D`, i.e. whose normal fan is coarsened by that of `P_D`.
/// A lower-dimensional `P_D` is compared inside its affine hull; elements not
/// parallel to that hull are excluded.
pub fn summand_filter(
    x: &ToricVariety,
    d: &ToricDivisor,
    basis: &[BasisElement],
) -> Result<Vec<usize>> {
    let p = x.polytope_of(d)?;
    if p.is_empty() {
        return Err(Error::Empty);
    }
    if p.is_point() {
        return Ok(Vec::new());
    }
    let chart = p.chart().expect("nonempty");
    let fan = normal_fan(&chart.project(&p))?;
    let mut out = Vec::new();
    for (i, b) in basis.iter().enumerate() {
        if !chart.is_parallel_polyhedron(&b.polytope) {
            continue;
        }
        if refines_polytope(&fan, &chart.project(&b.polytope))? {
            out.push(i);
        }
    }
    Ok(out)
}

fn support_vector(x: &ToricVariety, p: &Polyhedron) -> Result<QVec> {
    x.rays().iter().map(|u| p.support_value(u)).collect()
}

/// `a_1 P_1 + ... + a_k P_k + u`, starting from the point `u`.
fn weighted_sum(parts: &[(&Rat, &Polyhedron)], u: &[Rat]) -> Result<Polyhedron> {
    let mut acc = Polyhedron::point(u.to_vec());
    for (a, p) in parts {
        if a.is_zero() {
            continue;
        }
        acc = acc.minkowski_sum(&p.scale(a))?;
    }
    Ok(acc)
}

/// Nonnegative `a` and a translation `u` with `P_M = sum a_i P_{B_i} + u`
/// over the given candidate indices. Support values of both sides are matched
/// on every ray; among the feasible coefficient vectors the lexicographically
/// smallest one passing exact verification is returned.
pub fn solve_coefficients(
    x: &ToricVariety,
    m: &ToricDivisor,
    basis: &[BasisElement],
    candidates: &[usize],
) -> Result<Coefficients> {
    let pm = x.polytope_of(m)?;
    if pm.is_empty() {
        return Err(Error::NotPseudoEffective);
    }
    let n = x.dim();
    let c = candidates.len();
    let target = support_vector(x, &pm)?;
    let supports: Vec<QVec> = candidates
        .iter()
        .map(|&i| support_vector(x, &basis[i].polytope))
        .collect::<Result<_>>()?;

    let dim = c + n;
    let mut hs = Vec::new();
    for (rho, u) in x.rays().iter().enumerate() {
        let mut row: QVec = supports.iter().map(|s| s[rho].clone()).collect();
        row.extend(u.iter().map(|&v| rational::rat(-v)));
        if rational::is_zero_vec(&row) {
            if !target[rho].is_zero() {
                return Err(Error::InfeasibleDecomposition(format!(
                    "no candidate reaches ray {}",
                    x.ray_labels()[rho]
                )));
            }
            continue;
        }
        let h = HalfSpace::from_rational(&row, -target[rho].clone())?;
        hs.push(h.negated());
        hs.push(h);
    }
    for i in 0..c {
        let mut e = vec![0i64; dim];
        e[i] = 1;
        hs.push(HalfSpace::new(e, Rat::zero())?);
    }
    let solutions = Polyhedron::intersect_halfspaces(&hs, dim)?;
    if solutions.is_empty() {
        return Err(Error::InfeasibleDecomposition(format!(
            "{} is not a nonnegative combination of the {c} candidate summands",
            x.format_divisor(m)
        )));
    }
    if !solutions.is_bounded() {
        return Err(Error::InfeasibleDecomposition(
            "coefficients are unbounded; a candidate has zero class".into(),
        ));
    }
    let on_wall = solutions.vertices().len() > 1;
    for v in solutions.vertices() {
        let a = &v[..c];
        let u = &v[c..];
        let parts: Vec<(&Rat, &Polyhedron)> = a
            .iter()
            .zip(candidates)
            .map(|(ai, &i)| (ai, &basis[i].polytope))
            .collect();
        if weighted_sum(&parts, u)? == pm {
            let mut coefficients = rational::zero_vec(basis.len());
            for (ai, &i) in a.iter().zip(candidates) {
                coefficients[i] = ai.clone();
            }
            return Ok(Coefficients {
                coefficients,
                translation: u.to_vec(),
                on_wall,
            });
        }
    }
    Err(Error::DecompositionMismatch(format!(
        "no feasible coefficient vector reproduces the polytope of {}",
        x.format_divisor(m)
    )))
}

/// Splits `D` into fixed and movable parts, decomposes the movable part over
/// the basis, and transports the identity to Okounkov bodies for `flag`.
pub fn decompose(
    x: &ToricVariety,
    d: &ToricDivisor,
    flag: &TFlag,
    basis: &[BasisElement],
) -> Result<DecomposeReport> {
    let (movable, fixed) = x.movable_fixed_split(d)?;
    let candidates = summand_filter(x, &movable, basis)?;
    let Coefficients {
        coefficients,
        translation,
        on_wall,
    } = solve_coefficients(x, &movable, basis, &candidates)?;

    let combined = coefficients
        .iter()
        .zip(basis)
        .fold(DivisorClass::new(rational::zero_vec(x.class_rank())), |acc, (a, b)| {
            &acc + &b.class.scaled(a)
        });
    if combined != x.class_of(&movable)? {
        return Err(Error::DecompositionMismatch(
            "coefficients do not reproduce the class of the movable part".into(),
        ));
    }

    let chamber: Vec<usize> = (0..basis.len())
        .filter(|&i| coefficients[i].is_positive())
        .collect();
    let okounkov_body = okounkov_body_any(x, d, flag)?;
    let summands: Vec<(usize, Polyhedron)> = chamber
        .iter()
        .map(|&i| Ok((i, okounkov_body_any(x, &basis[i].divisor, flag)?)))
        .collect::<Result<_>>()?;
    let parts: Vec<(&Rat, &Polyhedron)> = summands
        .iter()
        .map(|(i, p)| (&coefficients[*i], p))
        .collect();
    let unshifted = weighted_sum(&parts, &rational::zero_vec(x.dim()))?;
    let okounkov_translation = rational::sub(
        okounkov_body.lexmin_vertex().expect("nonempty"),
        unshifted.lexmin_vertex().expect("nonempty"),
    );
    if unshifted.translate(&okounkov_translation) != okounkov_body {
        return Err(Error::DecompositionMismatch(
            "Okounkov bodies do not add up".into(),
        ));
    }
    Ok(DecomposeReport {
        fixed,
        movable,
        coefficients,
        translation,
        on_wall,
        chamber,
        flag: flag.clone(),
        okounkov_body,
        summands,
        okounkov_translation,
    })
}
