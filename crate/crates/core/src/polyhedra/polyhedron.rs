use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::dd;
use crate::error::{Error, Result};
use crate::linalg;
use crate::rational::{self, dot, dot_int, primitive_bigint, IVec, QVec, Rat};

/// The closed half-space `{x : <x, normal> >= -offset}` with a primitive
/// integer normal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfSpace {
    normal: IVec,
    offset: Rat,
}

impl HalfSpace {
    /// Builds `<x, normal> >= -offset`, dividing through by the gcd of the
    /// normal so that it becomes primitive.
    pub fn new(normal: IVec, offset: Rat) -> Result<Self> {
        let g = normal.iter().fold(0i64, |acc, &x| acc.gcd(&x));
        if g == 0 {
            return Err(Error::ZeroCone);
        }
        let normal = normal.iter().map(|x| x / g).collect();
        Ok(HalfSpace {
            normal,
            offset: offset / Rat::from_integer(BigInt::from(g)),
        })
    }

    /// Same as [`HalfSpace::new`] for a rational normal.
    pub fn from_rational(normal: &[Rat], offset: Rat) -> Result<Self> {
        let lcm = normal
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let lcm_r = Rat::from_integer(lcm);
        let ints: IVec = normal
            .iter()
            .map(|x| {
                (x * &lcm_r)
                    .to_integer()
                    .to_i64()
                    .expect("normal does not fit in i64")
            })
            .collect();
        HalfSpace::new(ints, offset * lcm_r)
    }

    pub fn normal(&self) -> &[i64] {
        &self.normal
    }

    pub fn offset(&self) -> &Rat {
        &self.offset
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    /// `<x, normal> + offset`; nonnegative exactly on the half-space.
    pub fn slack(&self, x: &[Rat]) -> Rat {
        dot_int(x, &self.normal) + &self.offset
    }

    pub fn contains(&self, x: &[Rat]) -> bool {
        !self.slack(x).is_negative()
    }

    pub fn is_tight(&self, x: &[Rat]) -> bool {
        self.slack(x).is_zero()
    }

    pub fn negated(&self) -> HalfSpace {
        HalfSpace {
            normal: self.normal.iter().map(|x| -x).collect(),
            offset: -self.offset.clone(),
        }
    }

    fn homogeneous_row(&self) -> Vec<BigInt> {
        let q = self.offset.denom().clone();
        let mut row: Vec<BigInt> = self.normal.iter().map(|&x| BigInt::from(x) * &q).collect();
        row.push(self.offset.numer().clone());
        row
    }
}

impl fmt::Display for HalfSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<x, {:?}> >= {}", self.normal, -self.offset.clone())
    }
}

/// A pointed polyhedron over the rationals.
///
/// Vertices are sorted lexicographically, recession rays are primitive and
/// sorted, facets and affine-hull equations are in canonical form. Two
/// polyhedra are equal iff their canonical vertex and ray lists agree.
#[derive(Clone, Debug)]
pub struct Polyhedron {
    dim: usize,
    vertices: Vec<QVec>,
    rays: Vec<IVec>,
    facets: Vec<HalfSpace>,
    /// Each entry `h` stands for the equation `<x, h.normal> = -h.offset`.
    equations: Vec<HalfSpace>,
}

impl PartialEq for Polyhedron {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.vertices == other.vertices && self.rays == other.rays
    }
}

impl Eq for Polyhedron {}

impl std::hash::Hash for Polyhedron {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.dim.hash(state);
        self.vertices.hash(state);
        self.rays.hash(state);
    }
}

impl PartialOrd for Polyhedron {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Polyhedron {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.dim, &self.vertices, &self.rays).cmp(&(other.dim, &other.vertices, &other.rays))
    }
}

struct Hrep {
    facets: Vec<HalfSpace>,
    equations: Vec<HalfSpace>,
}

/// Coordinate chart of an affine subspace: projecting onto `coords` is
/// injective on the subspace's direction space.
#[derive(Clone, Debug)]
pub struct AffineChart {
    dim: usize,
    coords: Vec<usize>,
    equations: Vec<HalfSpace>,
}

impl AffineChart {
    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn chart_dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[usize] {
        &self.coords
    }

    /// True iff the direction `d` is parallel to the subspace.
    pub fn is_parallel(&self, d: &[Rat]) -> bool {
        self.equations
            .iter()
            .all(|e| dot_int(d, e.normal()).is_zero())
    }

    /// True iff every edge direction of `p` (and every ray) is parallel to
    /// the subspace, i.e. `p` lies in a translate of it.
    pub fn is_parallel_polyhedron(&self, p: &Polyhedron) -> bool {
        let Some(v0) = p.vertices.first() else {
            return true;
        };
        p.vertices
            .iter()
            .all(|v| self.is_parallel(&rational::sub(v, v0)))
            && p.rays.iter().all(|r| self.is_parallel(&rational::qvec(r)))
    }

    pub fn project_point(&self, x: &[Rat]) -> QVec {
        self.coords.iter().map(|&c| x[c].clone()).collect()
    }

    /// Coordinate projection of `p`; a linear isomorphism onto its image when
    /// `p` is parallel to the chart's subspace.
    pub fn project(&self, p: &Polyhedron) -> Polyhedron {
        let k = self.coords.len();
        if p.is_empty() {
            return Polyhedron::empty(k);
        }
        let vertices: Vec<QVec> = p.vertices.iter().map(|v| self.project_point(v)).collect();
        let rays: Vec<IVec> = p
            .rays
            .iter()
            .map(|r| self.coords.iter().map(|&c| r[c]).collect())
            .collect();
        Polyhedron::from_generators(k, vertices, rays).expect("projection of a pointed polyhedron")
    }
}

impl Polyhedron {
    /// The empty polyhedron in `dim` dimensions.
    pub fn empty(dim: usize) -> Self {
        let mut facets = Vec::new();
        if dim > 0 {
            let mut e = vec![0; dim];
            e[0] = 1;
            let up = HalfSpace::new(e.clone(), rational::rat(-1)).unwrap();
            let down = HalfSpace::new(e.iter().map(|x| -x).collect(), Rat::zero()).unwrap();
            facets = vec![down, up];
            facets.sort();
        }
        Polyhedron {
            dim,
            vertices: Vec::new(),
            rays: Vec::new(),
            facets,
            equations: Vec::new(),
        }
    }

    /// The single point `p`.
    pub fn point(p: QVec) -> Self {
        let dim = p.len();
        Polyhedron::from_generators(dim, vec![p], Vec::new()).expect("a point is pointed")
    }

    /// Intersection of half-spaces, with both representations computed.
    pub fn intersect_halfspaces(hs: &[HalfSpace], dim: usize) -> Result<Self> {
        for h in hs {
            if h.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: h.dim(),
                });
            }
        }
        let (vertices, rays) = vrep_from_halfspaces(hs, dim)?;
        Polyhedron::assemble(dim, vertices, rays)
    }

    /// Convex hull of `vertices` plus the conic hull of `rays`.
    pub fn from_generators(dim: usize, vertices: Vec<QVec>, rays: Vec<IVec>) -> Result<Self> {
        for v in &vertices {
            if v.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: v.len(),
                });
            }
        }
        for r in &rays {
            if r.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: r.len(),
                });
            }
        }
        if vertices.is_empty() {
            return Ok(Polyhedron::empty(dim));
        }
        let rays: Vec<IVec> = rays.into_iter().filter(|r| r.iter().any(|&x| x != 0)).collect();
        let hrep = hull(dim, &vertices, &rays)?;
        let mut all = hrep.facets.clone();
        for e in &hrep.equations {
            all.push(e.clone());
            all.push(e.negated());
        }
        let (vertices, rays) = vrep_from_halfspaces(&all, dim)?;
        Ok(Polyhedron::finish(dim, vertices, rays, hrep))
    }

    fn assemble(dim: usize, vertices: Vec<QVec>, rays: Vec<IVec>) -> Result<Self> {
        if vertices.is_empty() {
            return Ok(Polyhedron::empty(dim));
        }
        let hrep = hull(dim, &vertices, &rays)?;
        Ok(Polyhedron::finish(dim, vertices, rays, hrep))
    }

    fn finish(dim: usize, mut vertices: Vec<QVec>, mut rays: Vec<IVec>, hrep: Hrep) -> Self {
        vertices.sort();
        vertices.dedup();
        rays.sort();
        rays.dedup();
        let Hrep {
            mut facets,
            mut equations,
        } = hrep;
        facets.sort();
        facets.dedup();
        equations.sort();
        Polyhedron {
            dim,
            vertices,
            rays,
            facets,
            equations,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[QVec] {
        &self.vertices
    }

    pub fn rays(&self) -> &[IVec] {
        &self.rays
    }

    /// Irredundant facet inequalities (relative to the affine hull).
    pub fn facets(&self) -> &[HalfSpace] {
        &self.facets
    }

    /// Equations of the affine hull, each `h` meaning `<x, h.normal> = -h.offset`.
    pub fn equations(&self) -> &[HalfSpace] {
        &self.equations
    }

    /// Full inequality description: facets plus both sides of every equation.
    pub fn halfspaces(&self) -> Vec<HalfSpace> {
        let mut all = self.facets.clone();
        for e in &self.equations {
            all.push(e.clone());
            all.push(e.negated());
        }
        all
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_bounded(&self) -> bool {
        self.rays.is_empty()
    }

    /// Dimension of the affine hull; `None` for the empty polyhedron.
    pub fn affine_dim(&self) -> Option<usize> {
        if self.is_empty() {
            None
        } else {
            Some(self.dim - self.equations.len())
        }
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.affine_dim() == Some(self.dim)
    }

    pub fn is_point(&self) -> bool {
        self.affine_dim() == Some(0)
    }

    pub fn contains(&self, x: &[Rat]) -> bool {
        !self.is_empty()
            && self.facets.iter().all(|h| h.contains(x))
            && self.equations.iter().all(|h| h.is_tight(x))
    }

    /// Lexicographically smallest vertex.
    pub fn lexmin_vertex(&self) -> Option<&QVec> {
        self.vertices.first()
    }

    /// Indices of vertices lying on each facet, in facet order.
    pub fn facet_vertex_incidence(&self) -> Vec<Vec<usize>> {
        self.facets
            .iter()
            .map(|h| {
                (0..self.vertices.len())
                    .filter(|&i| h.is_tight(&self.vertices[i]))
                    .collect()
            })
            .collect()
    }

    /// `min_{m in P} <m, u>`.
    pub fn min_value(&self, u: &[Rat]) -> Result<Rat> {
        if self.is_empty() {
            return Err(Error::Empty);
        }
        if self.rays.iter().any(|r| dot_int(u, r).is_negative()) {
            return Err(Error::Unbounded);
        }
        Ok(self
            .vertices
            .iter()
            .map(|v| dot(v, u))
            .min()
            .expect("nonempty"))
    }

    /// `-min_{m in P} <m, u>`: the smallest `a` with `P` inside `<m, u> >= -a`.
    pub fn support_value(&self, u: &[i64]) -> Result<Rat> {
        if u.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: u.len(),
            });
        }
        Ok(-self.min_value(&rational::qvec(u))?)
    }

    /// `P` intersected with further half-spaces.
    pub fn intersect(&self, extra: &[HalfSpace]) -> Result<Polyhedron> {
        if self.is_empty() {
            return Ok(self.clone());
        }
        let mut all = self.halfspaces();
        all.extend_from_slice(extra);
        Polyhedron::intersect_halfspaces(&all, self.dim)
    }

    pub fn translate(&self, v: &[Rat]) -> Polyhedron {
        let mut out = self.clone();
        for x in out.vertices.iter_mut() {
            *x = rational::add(x, v);
        }
        for h in out.facets.iter_mut().chain(out.equations.iter_mut()) {
            h.offset = &h.offset - dot_int(v, &h.normal);
        }
        out
    }

    /// `c * P` for `c >= 0`.
    pub fn scale(&self, c: &Rat) -> Polyhedron {
        assert!(!c.is_negative(), "negative dilation factor");
        if self.is_empty() {
            return self.clone();
        }
        if c.is_zero() {
            let cone_part = self.rays.clone();
            return Polyhedron::from_generators(self.dim, vec![rational::zero_vec(self.dim)], cone_part)
                .expect("pointed");
        }
        let mut out = self.clone();
        for x in out.vertices.iter_mut() {
            *x = rational::scale(x, c);
        }
        for h in out.facets.iter_mut().chain(out.equations.iter_mut()) {
            h.offset = &h.offset * c;
        }
        out
    }

    /// Exact Minkowski sum; generated by pairwise vertex sums and the union of
    /// recession rays.
    pub fn minkowski_sum(&self, other: &Polyhedron) -> Result<Polyhedron> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        if self.is_empty() || other.is_empty() {
            return Err(Error::Empty);
        }
        let mut vertices = Vec::with_capacity(self.vertices.len() * other.vertices.len());
        for a in &self.vertices {
            for b in &other.vertices {
                vertices.push(rational::add(a, b));
            }
        }
        vertices.sort();
        vertices.dedup();
        let mut rays = self.rays.clone();
        rays.extend(other.rays.iter().cloned());
        Polyhedron::from_generators(self.dim, vertices, rays)
    }

    /// Image under the integer matrix `a` (given by rows); `a` must be
    /// invertible over the rationals.
    pub fn linear_image(&self, a: &[IVec]) -> Result<Polyhedron> {
        if a.len() != self.dim || a.iter().any(|r| r.len() != self.dim) {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: a.len(),
            });
        }
        let qa = linalg::int_matrix(a);
        if linalg::det(&qa).is_zero() {
            return Err(Error::RankDeficient);
        }
        if self.is_empty() {
            return Ok(self.clone());
        }
        let vertices = self.vertices.iter().map(|v| linalg::mat_vec(&qa, v)).collect();
        let rays = self
            .rays
            .iter()
            .map(|r| rational::primitive_int(&linalg::mat_vec(&qa, &rational::qvec(r))))
            .collect();
        Polyhedron::from_generators(self.dim, vertices, rays)
    }

    /// Euclidean volume. Zero for empty or lower-dimensional polytopes.
    pub fn volume(&self) -> Result<Rat> {
        if self.is_empty() {
            return Ok(Rat::zero());
        }
        if !self.is_bounded() {
            return Err(Error::Unbounded);
        }
        if !self.is_full_dimensional() {
            return Ok(Rat::zero());
        }
        let n = self.dim;
        let factorial: BigInt = (1..=n).map(BigInt::from).product();
        let mut total = Rat::zero();
        for simplex in self.triangulate() {
            let rows: Vec<QVec> = simplex[1..]
                .iter()
                .map(|v| rational::sub(v, &simplex[0]))
                .collect();
            total += linalg::det(&rows).abs();
        }
        Ok(total / Rat::from_integer(factorial))
    }

    /// Pulling triangulation of a bounded nonempty polytope: cones from the
    /// first vertex over the triangulated facets not containing it.
    pub fn triangulate(&self) -> Vec<Vec<QVec>> {
        let Some(k) = self.affine_dim() else {
            return Vec::new();
        };
        assert!(self.is_bounded(), "triangulation of an unbounded polyhedron");
        let apex = &self.vertices[0];
        if k == 0 {
            return vec![vec![apex.clone()]];
        }
        let mut out = Vec::new();
        for (facet, incident) in self.facets.iter().zip(self.facet_vertex_incidence()) {
            if facet.is_tight(apex) {
                continue;
            }
            let verts: Vec<QVec> = incident.iter().map(|&i| self.vertices[i].clone()).collect();
            let face = Polyhedron::from_generators(self.dim, verts, Vec::new()).expect("face");
            for mut s in face.triangulate() {
                s.push(apex.clone());
                out.push(s);
            }
        }
        out
    }

    /// Chart of the affine hull; `None` for the empty polyhedron.
    pub fn chart(&self) -> Option<AffineChart> {
        let v0 = self.vertices.first()?;
        let mut dirs: Vec<QVec> = self
            .vertices
            .iter()
            .skip(1)
            .map(|v| rational::sub(v, v0))
            .collect();
        dirs.extend(self.rays.iter().map(|r| rational::qvec(r)));
        let (_, pivots) = linalg::rref(&dirs, self.dim);
        Some(AffineChart {
            dim: self.dim,
            coords: pivots,
            equations: self.equations.clone(),
        })
    }
}

impl fmt::Display for Polyhedron {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "empty polyhedron in dimension {}", self.dim);
        }
        write!(f, "conv{{")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let coords: Vec<String> = v.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", coords.join(","))?;
        }
        write!(f, "}}")?;
        if !self.rays.is_empty() {
            write!(f, " + cone{:?}", self.rays)?;
        }
        Ok(())
    }
}

/// Vertices and extreme rays of `{x : hs}` via the homogenized cone
/// `{(x, l) : <x, a> + t l >= 0, l >= 0}`.
fn vrep_from_halfspaces(hs: &[HalfSpace], dim: usize) -> Result<(Vec<QVec>, Vec<IVec>)> {
    let mut rows: Vec<Vec<BigInt>> = hs.iter().map(HalfSpace::homogeneous_row).collect();
    let mut lambda = vec![BigInt::zero(); dim + 1];
    lambda[dim] = BigInt::one();
    rows.push(lambda);
    let gens = dd::extreme_rays(&rows, dim + 1).ok_or(Error::NotPointed)?;
    let mut vertices = Vec::new();
    let mut rays = Vec::new();
    for g in gens {
        let l = &g[dim];
        if l.is_positive() {
            let lr = Rat::from_integer(l.clone());
            vertices.push(g[..dim].iter().map(|x| Rat::from_integer(x.clone()) / &lr).collect());
        } else {
            let q: QVec = g[..dim].iter().map(|x| Rat::from_integer(x.clone())).collect();
            rays.push(rational::primitive_int(&q));
        }
    }
    if vertices.is_empty() {
        rays.clear();
    }
    Ok((vertices, rays))
}

/// Facets and affine-hull equations of `conv(vertices) + cone(rays)`.
fn hull(dim: usize, vertices: &[QVec], rays: &[IVec]) -> Result<Hrep> {
    let v0 = &vertices[0];
    let mut dirs: Vec<QVec> = vertices.iter().skip(1).map(|v| rational::sub(v, v0)).collect();
    dirs.extend(rays.iter().map(|r| rational::qvec(r)));
    let (basis, coords) = linalg::rref(&dirs, dim);
    let k = coords.len();

    let mut equations = Vec::new();
    for c in linalg::kernel(&basis, dim) {
        let normal = rational::primitive_int(&c);
        let offset = -dot_int(v0, &normal);
        equations.push(HalfSpace::new(normal, offset)?);
    }

    let mut facets = Vec::new();
    if k > 0 {
        let mut rows: Vec<Vec<BigInt>> = Vec::new();
        for v in vertices {
            let mut row: QVec = coords.iter().map(|&c| v[c].clone()).collect();
            row.push(Rat::one());
            rows.push(primitive_bigint(&row));
        }
        for r in rays {
            let mut row: Vec<BigInt> = coords.iter().map(|&c| BigInt::from(r[c])).collect();
            row.push(BigInt::zero());
            rows.push(row);
        }
        let gens = dd::extreme_rays(&rows, k + 1).ok_or(Error::NotPointed)?;
        for g in gens {
            if g[..k].iter().all(Zero::is_zero) {
                continue;
            }
            let mut normal = vec![0i64; dim];
            for (j, &c) in coords.iter().enumerate() {
                normal[c] = g[j].to_i64().expect("facet normal does not fit in i64");
            }
            facets.push(HalfSpace::new(normal, Rat::from_integer(g[k].clone()))?);
        }
    }
    Ok(Hrep { facets, equations })
}
