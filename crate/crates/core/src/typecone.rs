//! Type cones of complete fans and the indecomposability test built on them.
//!
//! For a complete fan `F` with rays `u_rho`, a vector `t` defines the polytope
//! `P_t = {m : <m, u_rho> >= -t_rho}`. The type cone is the set of `t` whose
//! polytope has its normal fan coarsened by `F`, with every inequality
//! supporting. It is cut out by one convexity inequality per wall and ray and,
//! for non-simplicial cones, by the linear relations that make the Cartier data
//! well defined. Translations `t = (<m, u_rho>)_rho` form its lineality space.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::fans::{normal_fan, Fan};
use crate::linalg;
use crate::polyhedra::{HalfSpace, Polyhedron};
use crate::rational::{self, QVec, Rat};

#[derive(Clone, Debug)]
pub struct TypeCone {
    num_rays: usize,
    equations: Vec<QVec>,
    walls: Vec<QVec>,
    lineality: Vec<QVec>,
}

impl TypeCone {
    pub fn num_rays(&self) -> usize {
        self.num_rays
    }

    /// Rows `e` with `<e, t> = 0` on the type cone.
    pub fn equations(&self) -> &[QVec] {
        &self.equations
    }

    /// Rows `w` with `<w, t> >= 0` on the type cone.
    pub fn walls(&self) -> &[QVec] {
        &self.walls
    }

    /// A basis of the translation subspace `{(<m, u_rho>)_rho}`.
    pub fn lineality(&self) -> &[QVec] {
        &self.lineality
    }

    pub fn contains(&self, t: &[Rat]) -> bool {
        self.equations.iter().all(|e| rational::dot(e, t).is_zero())
            && self.walls.iter().all(|w| rational::dot(w, t) >= Rat::zero())
    }

    /// The type cone intersected with the orthogonal complement of its
    /// lineality space; a pointed cone.
    pub fn pointed_section(&self) -> Polyhedron {
        let r = self.num_rays;
        let mut hs = Vec::new();
        let push = |row: &QVec, both: bool, hs: &mut Vec<HalfSpace>| {
            if rational::is_zero_vec(row) {
                return;
            }
            let h = HalfSpace::from_rational(row, Rat::zero()).expect("nonzero row");
            if both {
                hs.push(h.negated());
            }
            hs.push(h);
        };
        for e in &self.equations {
            push(e, true, &mut hs);
        }
        for b in &self.lineality {
            push(b, true, &mut hs);
        }
        for w in &self.walls {
            push(w, false, &mut hs);
        }
        if hs.is_empty() {
            return Polyhedron::from_generators(r, vec![rational::zero_vec(r)], Vec::new())
                .expect("origin");
        }
        Polyhedron::intersect_halfspaces(&hs, r).expect("type cone modulo lineality is pointed")
    }

    /// Dimension of the type cone modulo translations.
    pub fn pointed_dimension(&self) -> usize {
        self.pointed_section().affine_dim().expect("contains the origin")
    }
}

/// Type cone of a complete fan.
pub fn type_cone(f: &Fan) -> Result<TypeCone> {
    let n = f.dim();
    let r = f.rays().len();
    let ray_q: Vec<QVec> = f.rays().iter().map(|u| rational::qvec(u)).collect();
    if linalg::rank(&ray_q, n) < n {
        return Err(Error::NotComplete("rays do not span the space".into()));
    }

    // for each maximal cone, a basis of its rays and coordinates of the rest
    let mut bases = Vec::with_capacity(f.max_cones().len());
    let mut equations = Vec::new();
    for (c, cone) in f.max_cones().iter().enumerate() {
        let mut basis: Vec<usize> = Vec::new();
        let mut rows: Vec<QVec> = Vec::new();
        for &rho in cone {
            rows.push(ray_q[rho].clone());
            if linalg::rank(&rows, n) == rows.len() {
                basis.push(rho);
            } else {
                rows.pop();
            }
        }
        if basis.len() != n {
            return Err(Error::NotComplete(format!("cone {c} is not full-dimensional")));
        }
        for &rho in cone {
            if !basis.contains(&rho) {
                equations.push(relation_row(r, &ray_q, &basis, rho));
            }
        }
        bases.push(basis);
    }

    let mut walls = Vec::new();
    for (i, j, _) in f.walls() {
        for (a, b) in [(i, j), (j, i)] {
            for &rho in &f.max_cones()[b] {
                if !f.max_cones()[a].contains(&rho) {
                    walls.push(relation_row(r, &ray_q, &bases[a], rho));
                }
            }
        }
    }
    walls.sort();
    walls.dedup();

    let lineality = (0..n)
        .map(|j| f.rays().iter().map(|u| rational::rat(u[j])).collect())
        .collect();

    Ok(TypeCone {
        num_rays: r,
        equations,
        walls,
        lineality,
    })
}

/// Row `t_rho - sum_b c_b t_b` where `u_rho = sum_b c_b u_b` over `basis`.
fn relation_row(r: usize, rays: &[QVec], basis: &[usize], rho: usize) -> QVec {
    let n = basis.len();
    let cols: Vec<QVec> = basis.iter().map(|&b| rays[b].clone()).collect();
    let m = linalg::transpose(&cols, n);
    let c = linalg::solve(&m, &rays[rho]).expect("basis rays are independent");
    let mut row = rational::zero_vec(r);
    row[rho] = Rat::from_integer(1.into());
    for (k, &b) in basis.iter().enumerate() {
        row[b] -= &c[k];
    }
    row
}

/// True iff every Minkowski decomposition of `p` uses only homothetic copies
/// of `p`. Segments are indecomposable; points are reported as decomposable
/// since their type cone is trivial. Lower-dimensional polytopes are tested
/// in a chart of their affine hull.
pub fn is_indecomposable(p: &Polyhedron) -> Result<bool> {
    if p.is_empty() {
        return Err(Error::Empty);
    }
    if !p.is_bounded() {
        return Err(Error::Unbounded);
    }
    match p.affine_dim() {
        Some(0) => return Ok(false),
        Some(1) => return Ok(true),
        _ => {}
    }
    let chart = p.chart().expect("nonempty");
    let q = chart.project(p);
    Ok(type_cone(&normal_fan(&q)?)?.pointed_dimension() == 1)
}
