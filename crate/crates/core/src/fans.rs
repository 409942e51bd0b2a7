//! Rational polyhedral cones and fans: validation, duals, normal fans,
//! refinement and common refinement.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg;
use crate::polyhedra::Polyhedron;
use crate::rational::{self, dot_int, is_primitive, IVec};

/// A cone generated by primitive integer vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone {
    dim: usize,
    generators: Vec<IVec>,
}

impl Cone {
    /// Normalizes generators to primitive vectors; zero vectors are dropped.
    pub fn new(dim: usize, generators: Vec<IVec>) -> Result<Self> {
        let mut gens = Vec::new();
        for g in generators {
            if g.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: g.len(),
                });
            }
            if g.iter().any(|&x| x != 0) {
                gens.push(rational::primitive_i64(&g));
            }
        }
        if gens.is_empty() {
            return Err(Error::ZeroCone);
        }
        Ok(Cone {
            dim,
            generators: gens,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[IVec] {
        &self.generators
    }

    /// The cone as a polyhedron with apex at the origin.
    pub fn polyhedron(&self) -> Result<Polyhedron> {
        Polyhedron::from_generators(
            self.dim,
            vec![rational::zero_vec(self.dim)],
            self.generators.clone(),
        )
    }

    /// Extremal generators in canonical (sorted) order.
    pub fn extremal_generators(&self) -> Result<Vec<IVec>> {
        Ok(self.polyhedron()?.rays().to_vec())
    }
}

/// `sigma^dual = {m : <m, v> >= 0 for all v in sigma}` for a full-dimensional
/// pointed cone; its generators are the inner facet normals of `sigma`.
pub fn dual_cone(c: &Cone) -> Result<Cone> {
    let p = c.polyhedron()?;
    if !p.is_full_dimensional() {
        return Err(Error::NotFullDimensional);
    }
    let gens = p.facets().iter().map(|h| h.normal().to_vec()).collect();
    Cone::new(c.dim, gens)
}

/// A fan given by its rays and its maximal cones as index sets into the rays.
#[derive(Clone, Debug)]
pub struct Fan {
    dim: usize,
    rays: Vec<IVec>,
    max_cones: Vec<Vec<usize>>,
}

impl PartialEq for Fan {
    fn eq(&self, other: &Self) -> bool {
        let a = self.canonical();
        let b = other.canonical();
        a.dim == b.dim && a.rays == b.rays && a.max_cones == b.max_cones
    }
}

impl Eq for Fan {}

/// Result of [`validate_fan`]. `problems` explains every failed property.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FanReport {
    pub is_fan: bool,
    pub is_complete: bool,
    pub is_smooth: bool,
    pub is_simplicial: bool,
    pub problems: Vec<String>,
}

impl Fan {
    /// Checks shapes and index ranges only; geometric properties are the job
    /// of [`validate_fan`].
    pub fn new(dim: usize, rays: Vec<IVec>, max_cones: Vec<Vec<usize>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::NotAFan("ambient dimension must be positive".into()));
        }
        for (i, r) in rays.iter().enumerate() {
            if r.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: r.len(),
                });
            }
            if !is_primitive(r) {
                return Err(Error::NotAFan(format!("ray {i} {r:?} is not primitive")));
            }
        }
        for (c, cone) in max_cones.iter().enumerate() {
            if cone.is_empty() {
                return Err(Error::NotAFan(format!("cone {c} has no rays")));
            }
            if let Some(&bad) = cone.iter().find(|&&i| i >= rays.len()) {
                return Err(Error::NotAFan(format!(
                    "cone {c} refers to ray {bad}, but there are {} rays",
                    rays.len()
                )));
            }
        }
        Ok(Fan {
            dim,
            rays,
            max_cones,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[IVec] {
        &self.rays
    }

    pub fn max_cones(&self) -> &[Vec<usize>] {
        &self.max_cones
    }

    pub fn cone(&self, i: usize) -> Result<Cone> {
        let idx = self.max_cones.get(i).ok_or(Error::InvalidCone(i))?;
        Cone::new(self.dim, idx.iter().map(|&r| self.rays[r].clone()).collect())
    }

    pub fn cone_polyhedron(&self, i: usize) -> Result<Polyhedron> {
        self.cone(i)?.polyhedron()
    }

    /// Rays sorted, cone index sets sorted, cones sorted.
    pub fn canonical(&self) -> Fan {
        let mut order: Vec<usize> = (0..self.rays.len()).collect();
        order.sort_by(|&a, &b| self.rays[a].cmp(&self.rays[b]));
        let mut new_index = vec![0; self.rays.len()];
        for (new, &old) in order.iter().enumerate() {
            new_index[old] = new;
        }
        let rays = order.iter().map(|&i| self.rays[i].clone()).collect();
        let mut max_cones: Vec<Vec<usize>> = self
            .max_cones
            .iter()
            .map(|c| {
                let mut c: Vec<usize> = c.iter().map(|&i| new_index[i]).collect();
                c.sort_unstable();
                c.dedup();
                c
            })
            .collect();
        max_cones.sort();
        max_cones.dedup();
        Fan {
            dim: self.dim,
            rays,
            max_cones,
        }
    }

    /// Pairs of maximal cones meeting in a common face of codimension one,
    /// with the rays of that face.
    pub fn walls(&self) -> Vec<(usize, usize, Vec<usize>)> {
        let mut out = Vec::new();
        for i in 0..self.max_cones.len() {
            for j in i + 1..self.max_cones.len() {
                let common: Vec<usize> = self.max_cones[i]
                    .iter()
                    .copied()
                    .filter(|r| self.max_cones[j].contains(r))
                    .collect();
                let rows: Vec<_> = common.iter().map(|&r| rational::qvec(&self.rays[r])).collect();
                if linalg::rank(&rows, self.dim) + 1 == self.dim {
                    out.push((i, j, common));
                }
            }
        }
        out
    }

    /// Index of a maximal cone containing `v` in its relative interior or
    /// boundary.
    pub fn find_cone_containing(&self, v: &[i64]) -> Option<usize> {
        let q = rational::qvec(v);
        (0..self.max_cones.len()).find(|&i| {
            self.cone_polyhedron(i)
                .map(|p| p.contains(&q))
                .unwrap_or(false)
        })
    }
}

/// Checks the fan axioms plus completeness, smoothness and simpliciality.
pub fn validate_fan(f: &Fan) -> FanReport {
    let n = f.dim;
    let mut problems = Vec::new();

    let mut seen = BTreeMap::new();
    for (i, r) in f.rays.iter().enumerate() {
        if let Some(j) = seen.insert(r.clone(), i) {
            problems.push(format!("rays {j} and {i} coincide"));
        }
    }
    for i in 0..f.rays.len() {
        if !f.max_cones.iter().any(|c| c.contains(&i)) {
            problems.push(format!("ray {i} lies in no maximal cone"));
        }
    }

    let mut cones: Vec<Option<Polyhedron>> = Vec::with_capacity(f.max_cones.len());
    for (c, idx) in f.max_cones.iter().enumerate() {
        let set: BTreeSet<usize> = idx.iter().copied().collect();
        if set.len() != idx.len() {
            problems.push(format!("cone {c} lists a ray twice"));
        }
        match f.cone_polyhedron(c) {
            Ok(p) => {
                for &r in idx {
                    if !p.rays().contains(&f.rays[r]) {
                        problems.push(format!("ray {r} is not extremal in cone {c}"));
                    }
                }
                cones.push(Some(p));
            }
            Err(_) => {
                problems.push(format!("cone {c} is not pointed"));
                cones.push(None);
            }
        }
    }

    for i in 0..cones.len() {
        for j in i + 1..cones.len() {
            let (Some(a), Some(b)) = (&cones[i], &cones[j]) else {
                continue;
            };
            let common: Vec<usize> = f.max_cones[i]
                .iter()
                .copied()
                .filter(|r| f.max_cones[j].contains(r))
                .collect();
            let inter = a.intersect(&b.halfspaces()).expect("cones are pointed");
            let mut expected: Vec<IVec> = common.iter().map(|&r| f.rays[r].clone()).collect();
            expected.sort();
            expected.dedup();
            if inter.rays() != expected.as_slice() {
                problems.push(format!("cones {i} and {j} overlap beyond their common rays"));
                continue;
            }
            for (k, p) in [(i, a), (j, b)] {
                if !is_face(f, k, p, &common) {
                    problems.push(format!(
                        "the intersection of cones {i} and {j} is not a face of cone {k}"
                    ));
                }
            }
        }
    }
    let is_fan = problems.is_empty();

    let is_simplicial = f.max_cones.iter().all(|c| {
        let rows: Vec<_> = c.iter().map(|&r| rational::qvec(&f.rays[r])).collect();
        linalg::rank(&rows, n) == c.len()
    });
    let is_smooth = is_simplicial
        && f.max_cones.iter().all(|c| {
            let rows: Vec<IVec> = c.iter().map(|&r| f.rays[r].clone()).collect();
            linalg::smith_normal_form(&rows, n)
                .diagonal
                .iter()
                .all(|&d| d == 1)
        });
    if !is_simplicial {
        problems.push("some maximal cone is not simplicial".into());
    } else if !is_smooth {
        problems.push("some maximal cone is not generated by part of a lattice basis".into());
    }

    let is_complete = is_fan && completeness_problem(f, &cones).is_none_or(|p| {
        problems.push(p);
        false
    });

    FanReport {
        is_fan,
        is_complete,
        is_smooth,
        is_simplicial,
        problems,
    }
}

/// `cone(common)` is a face of cone `k` iff the generators of cone `k` lying on
/// every facet tight at `common` are exactly `common`.
fn is_face(f: &Fan, k: usize, p: &Polyhedron, common: &[usize]) -> bool {
    let gens = &f.max_cones[k];
    let tight: Vec<_> = p
        .facets()
        .iter()
        .filter(|h| {
            common
                .iter()
                .all(|&r| dot_int(&rational::qvec(&f.rays[r]), h.normal()).is_zero())
        })
        .collect();
    gens.iter().all(|&r| {
        common.contains(&r)
            || tight
                .iter()
                .any(|h| !dot_int(&rational::qvec(&f.rays[r]), h.normal()).is_zero())
    })
}

fn completeness_problem(f: &Fan, cones: &[Option<Polyhedron>]) -> Option<String> {
    if f.max_cones.is_empty() {
        return Some("fan has no cones".into());
    }
    let mut ridges: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for (c, p) in cones.iter().enumerate() {
        let p = p.as_ref().expect("validated as pointed");
        if !p.is_full_dimensional() {
            return Some(format!("cone {c} is not full-dimensional"));
        }
        for h in p.facets() {
            let mut key: Vec<usize> = f.max_cones[c]
                .iter()
                .copied()
                .filter(|&r| dot_int(&rational::qvec(&f.rays[r]), h.normal()).is_zero())
                .collect();
            key.sort_unstable();
            ridges.entry(key).or_default().push(c);
        }
    }
    let mut adjacency = vec![Vec::new(); f.max_cones.len()];
    for (ridge, owners) in &ridges {
        if owners.len() != 2 {
            return Some(format!(
                "the ridge spanned by rays {ridge:?} lies in {} maximal cones",
                owners.len()
            ));
        }
        adjacency[owners[0]].push(owners[1]);
        adjacency[owners[1]].push(owners[0]);
    }
    let mut visited = vec![false; f.max_cones.len()];
    let mut stack = vec![0];
    visited[0] = true;
    while let Some(c) = stack.pop() {
        for &d in &adjacency[c] {
            if !visited[d] {
                visited[d] = true;
                stack.push(d);
            }
        }
    }
    if visited.iter().any(|v| !v) {
        return Some("maximal cones do not form a connected complex".into());
    }
    None
}

/// Normal fan of a bounded full-dimensional polytope: rays are the inner facet
/// normals, one maximal cone per vertex. The result is canonical.
pub fn normal_fan(p: &Polyhedron) -> Result<Fan> {
    if p.is_empty() {
        return Err(Error::Empty);
    }
    if !p.is_bounded() {
        return Err(Error::Unbounded);
    }
    if !p.is_full_dimensional() {
        return Err(Error::NotFullDimensional);
    }
    let rays: Vec<IVec> = p.facets().iter().map(|h| h.normal().to_vec()).collect();
    let cones = p
        .vertices()
        .iter()
        .map(|v| {
            (0..rays.len())
                .filter(|&i| p.facets()[i].is_tight(v))
                .collect()
        })
        .collect();
    Ok(Fan::new(p.dim(), rays, cones)?.canonical())
}

/// True iff every maximal cone of `f1` lies in some maximal cone of `f2`.
pub fn refines(f1: &Fan, f2: &Fan) -> Result<bool> {
    if f1.dim != f2.dim {
        return Err(Error::DimensionMismatch {
            expected: f1.dim,
            found: f2.dim,
        });
    }
    let targets: Vec<Polyhedron> = (0..f2.max_cones.len())
        .map(|i| f2.cone_polyhedron(i))
        .collect::<Result<_>>()?;
    Ok(f1.max_cones.iter().all(|c| {
        targets.iter().any(|t| {
            c.iter()
                .all(|&r| t.contains(&rational::qvec(&f1.rays[r])))
        })
    }))
}

/// True iff `f` refines the normal fan of the bounded polytope `q`, i.e. on
/// every maximal cone of `f` a single vertex of `q` minimizes all generators.
/// Unlike [`normal_fan`] this accepts polytopes of any dimension.
pub fn refines_polytope(f: &Fan, q: &Polyhedron) -> Result<bool> {
    if f.dim != q.dim() {
        return Err(Error::DimensionMismatch {
            expected: f.dim,
            found: q.dim(),
        });
    }
    if q.is_empty() {
        return Err(Error::Empty);
    }
    if !q.is_bounded() {
        return Err(Error::Unbounded);
    }
    let rays: Vec<_> = f.rays.iter().map(|r| rational::qvec(r)).collect();
    let minima: Vec<_> = rays
        .iter()
        .map(|u| q.min_value(u).expect("bounded"))
        .collect();
    Ok(f.max_cones.iter().all(|c| {
        q.vertices().iter().any(|v| {
            c.iter()
                .all(|&r| rational::dot(v, &rays[r]) == minima[r])
        })
    }))
}

/// Coarsest common refinement of two complete fans: all full-dimensional
/// intersections of their maximal cones. The result is canonical.
pub fn common_refinement(f1: &Fan, f2: &Fan) -> Result<Fan> {
    if f1.dim != f2.dim {
        return Err(Error::DimensionMismatch {
            expected: f1.dim,
            found: f2.dim,
        });
    }
    let a: Vec<Polyhedron> = (0..f1.max_cones.len())
        .map(|i| f1.cone_polyhedron(i))
        .collect::<Result<_>>()?;
    let b: Vec<Polyhedron> = (0..f2.max_cones.len())
        .map(|i| f2.cone_polyhedron(i))
        .collect::<Result<_>>()?;
    let mut pieces: Vec<Vec<IVec>> = Vec::new();
    for p in &a {
        for q in &b {
            let inter = p.intersect(&q.halfspaces())?;
            if inter.is_full_dimensional() {
                pieces.push(inter.rays().to_vec());
            }
        }
    }
    let ray_set: BTreeSet<IVec> = pieces.iter().flatten().cloned().collect();
    let rays: Vec<IVec> = ray_set.into_iter().collect();
    let cones = pieces
        .iter()
        .map(|gens| {
            gens.iter()
                .map(|g| rays.binary_search(g).expect("collected above"))
                .collect()
        })
        .collect();
    Ok(Fan::new(f1.dim, rays, cones)?.canonical())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fan(rays: &[&[i64]], cones: &[&[usize]]) -> Fan {
        Fan::new(
            rays[0].len(),
            rays.iter().map(|r| r.to_vec()).collect(),
            cones.iter().map(|c| c.to_vec()).collect(),
        )
        .unwrap()
    }

    fn bl2p2() -> Fan {
        fan(
            &[&[1, 0], &[0, 1], &[-1, 0], &[-1, -1], &[0, -1]],
            &[&[0, 1], &[1, 2], &[2, 3], &[3, 4], &[4, 0]],
        )
    }

    fn p2() -> Fan {
        fan(&[&[1, 0], &[0, 1], &[-1, -1]], &[&[0, 1], &[1, 2], &[2, 0]])
    }

    fn poly(v: &[&[i64]]) -> Polyhedron {
        Polyhedron::from_generators(
            v[0].len(),
            v.iter().map(|p| rational::qvec(p)).collect(),
            Vec::new(),
        )
        .unwrap()
    }

    #[test]
    fn validation_examples() {
        let r = validate_fan(&bl2p2());
        assert!(r.is_fan && r.is_complete && r.is_smooth && r.is_simplicial, "{r:?}");

        let p1 = fan(&[&[1], &[-1]], &[&[0], &[1]]);
        let r = validate_fan(&p1);
        assert!(r.is_complete && r.is_smooth, "{r:?}");

        let single = fan(&[&[1, 0], &[0, 1]], &[&[0, 1]]);
        let r = validate_fan(&single);
        assert!(r.is_fan && !r.is_complete);
    }

    #[test]
    fn overlapping_cones_are_not_a_fan() {
        let f = fan(&[&[1, 0], &[0, 1], &[1, 1]], &[&[0, 1], &[2, 1]]);
        let r = validate_fan(&f);
        assert!(!r.is_fan);
        assert!(!r.is_complete);
    }

    #[test]
    fn singular_cone_is_not_smooth() {
        let f = fan(&[&[1, 0], &[1, 2], &[-1, 0], &[0, -1]], &[&[0, 1], &[1, 2], &[2, 3], &[3, 0]]);
        let r = validate_fan(&f);
        assert!(r.is_fan && r.is_complete && r.is_simplicial && !r.is_smooth, "{r:?}");
    }

    #[test]
    fn missing_cone_is_not_complete() {
        let f = fan(
            &[&[1, 0], &[0, 1], &[-1, 0], &[-1, -1], &[0, -1]],
            &[&[0, 1], &[1, 2], &[2, 3], &[3, 4]],
        );
        let r = validate_fan(&f);
        assert!(r.is_fan && !r.is_complete);
    }

    #[test]
    fn duals() {
        let s = Cone::new(2, vec![vec![-1, -1], vec![0, -1]]).unwrap();
        let d = dual_cone(&s).unwrap();
        let mut g = d.generators().to_vec();
        g.sort();
        assert_eq!(g, vec![vec![-1, 0], vec![1, -1]]);

        let orthant = Cone::new(2, vec![vec![1, 0], vec![0, 1]]).unwrap();
        let mut g = dual_cone(&orthant).unwrap().generators().to_vec();
        g.sort();
        assert_eq!(g, vec![vec![0, 1], vec![1, 0]]);

        // dual basis of ((0,-1), (-1,-1)): <w_i, v_j> = delta_ij
        let s = Cone::new(2, vec![vec![0, -1], vec![-1, -1]]).unwrap();
        let d = dual_cone(&s).unwrap();
        for w in d.generators() {
            let vals: Vec<i64> = s
                .generators()
                .iter()
                .map(|v| v[0] * w[0] + v[1] * w[1])
                .collect();
            let mut sorted = vals.clone();
            sorted.sort();
            assert_eq!(sorted, vec![0, 1]);
        }
        assert_eq!(Cone::new(2, vec![vec![0, 0]]).unwrap_err(), Error::ZeroCone);
    }

    #[test]
    fn normal_fans() {
        let p = poly(&[&[-1, -1], &[0, -1], &[0, 0], &[-1, 1]]);
        let nf = normal_fan(&p).unwrap();
        let mut rays = nf.rays().to_vec();
        rays.sort();
        assert_eq!(rays, vec![vec![-1, -1], vec![-1, 0], vec![0, 1], vec![1, 0]]);
        assert!(validate_fan(&nf).is_complete);

        let square = poly(&[&[-1, -1], &[1, -1], &[-1, 1], &[1, 1]]);
        let nf = normal_fan(&square).unwrap();
        assert_eq!(nf.rays().len(), 4);
        assert_eq!(nf.max_cones().len(), 4);

        let simplex = poly(&[&[0, 0], &[1, 0], &[0, 1]]);
        let nf = normal_fan(&simplex).unwrap();
        assert_eq!(nf.rays(), &[vec![-1, -1], vec![0, 1], vec![1, 0]]);

        let seg = poly(&[&[0, 0], &[1, 0]]);
        assert_eq!(normal_fan(&seg).unwrap_err(), Error::NotFullDimensional);
    }

    #[test]
    fn refinement_examples() {
        let pd = poly(&[&[-1, -1], &[0, -1], &[0, 0], &[-1, 1]]);
        let nd = normal_fan(&pd).unwrap();
        let m1 = poly(&[&[0, 0], &[1, -1], &[0, -1]]);
        let m2 = poly(&[&[-1, 0], &[0, 0]]);
        let m3 = poly(&[&[0, 0], &[0, -1]]);
        assert!(refines(&nd, &normal_fan(&m1).unwrap()).unwrap());
        assert!(refines_polytope(&nd, &m1).unwrap());
        assert!(!refines_polytope(&nd, &m2).unwrap());
        assert!(refines_polytope(&nd, &m3).unwrap());
        assert!(refines(&nd, &nd).unwrap());
        assert!(refines(&bl2p2(), &p2()).unwrap());
        assert!(!refines(&p2(), &bl2p2()).unwrap());
    }

    #[test]
    fn common_refinement_examples() {
        let f = bl2p2();
        assert_eq!(common_refinement(&f, &f).unwrap(), f);
        // the normal fan of a segment plus a segment is the quadrant fan
        let square = poly(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let quadrants = normal_fan(&square).unwrap();
        let r = common_refinement(&p2(), &quadrants).unwrap();
        assert!(refines(&r, &p2()).unwrap());
        assert!(refines(&r, &quadrants).unwrap());
        assert!(validate_fan(&r).is_complete);
    }

    #[test]
    fn walls_of_blowup() {
        let w = bl2p2().walls();
        assert_eq!(w.len(), 5);
        assert!(w.contains(&(0, 4, vec![0])));
    }
}
