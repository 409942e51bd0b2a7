//! Random instances and independent oracles shared by the integration tests.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use toric_core::catalog;
use toric_core::fans::Fan;
use toric_core::rational::{qvec, rat};
use toric_core::{
    ClassBasis, DivisorClass, IVec, Polyhedron, QVec, Rat, TFlag, ToricDivisor, ToricVariety,
};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A smooth complete surface: a minimal one blown up in up to `max_blowups`
/// torus-fixed points.
pub fn random_surface(rng: &mut ChaCha8Rng, max_blowups: usize) -> ToricVariety {
    let mut x = match rng.random_range(0..3) {
        0 => catalog::projective_space(2),
        1 => catalog::p1xp1(),
        _ => catalog::hirzebruch(rng.random_range(1..=3)),
    };
    for _ in 0..rng.random_range(0..=max_blowups) {
        let sigma = rng.random_range(0..x.num_cones());
        x = catalog::blow_up_point(&x, sigma).unwrap();
    }
    x
}

pub fn random_threefold(rng: &mut ChaCha8Rng) -> ToricVariety {
    match rng.random_range(0..4) {
        0 => catalog::projective_space(3),
        1 => catalog::product_of_lines(3),
        2 => catalog::bl_p3_two_lines(),
        _ => {
            let p3 = catalog::projective_space(3);
            catalog::blow_up_point(&p3, rng.random_range(0..4)).unwrap()
        }
    }
}

pub fn random_variety(rng: &mut ChaCha8Rng) -> ToricVariety {
    if rng.random_bool(0.6) {
        random_surface(rng, 2)
    } else {
        random_threefold(rng)
    }
}

/// Divisor with coefficients in `0..=max`.
pub fn random_effective(rng: &mut ChaCha8Rng, x: &ToricVariety, max: i64) -> ToricDivisor {
    let c: Vec<i64> = (0..x.num_rays()).map(|_| rng.random_range(0..=max)).collect();
    ToricDivisor::from_ints(&c)
}

/// Effective divisor with full-dimensional polytope.
pub fn random_big(rng: &mut ChaCha8Rng, x: &ToricVariety) -> ToricDivisor {
    loop {
        let d = random_effective(rng, x, 5);
        if x.polytope_of(&d).unwrap().is_full_dimensional() {
            return d;
        }
    }
}

/// Nonnegative combination, coefficients in `0..=max`, of lifts of the nef
/// cone generators.
pub fn random_nef(rng: &mut ChaCha8Rng, x: &ToricVariety, max: i64) -> ToricDivisor {
    let gens = x.nef_cone_generators().unwrap();
    let mut d = ToricDivisor::zero(x.num_rays());
    for g in gens {
        let c = rat(rng.random_range(0..=max));
        let lift = x.lift_class(&DivisorClass::from_ints(&g)).unwrap();
        d = &d + &(&c * &lift);
    }
    d
}

pub fn random_flag(rng: &mut ChaCha8Rng, x: &ToricVariety) -> TFlag {
    let sigma = rng.random_range(0..x.num_cones());
    let mut order = x.cone(sigma).unwrap().to_vec();
    order.shuffle(rng);
    TFlag::new(x, sigma, order).unwrap()
}

/// Hull of random integer points in `[-r, r]^dim`, retried until it is
/// full-dimensional.
pub fn random_polytope(rng: &mut ChaCha8Rng, dim: usize, r: i64, points: usize) -> Polyhedron {
    loop {
        let pts: Vec<QVec> = (0..points)
            .map(|_| (0..dim).map(|_| rat(rng.random_range(-r..=r))).collect())
            .collect();
        let p = Polyhedron::from_generators(dim, pts, Vec::new()).unwrap();
        if p.is_full_dimensional() {
            return p;
        }
    }
}

/// Same variety with ray `i` of the result equal to ray `perm[i]` of `x`.
/// Labels and the class basis travel with the rays.
pub fn permute_rays(x: &ToricVariety, perm: &[usize]) -> ToricVariety {
    let mut inverse = vec![0; perm.len()];
    for (new, &old) in perm.iter().enumerate() {
        inverse[old] = new;
    }
    let rays = perm.iter().map(|&o| x.rays()[o].clone()).collect();
    let cones = x
        .fan()
        .max_cones()
        .iter()
        .map(|c| c.iter().map(|&o| inverse[o]).collect())
        .collect();
    let labels = perm.iter().map(|&o| x.ray_labels()[o].clone()).collect();
    let basis = ClassBasis::new(
        x.class_basis().labels().to_vec(),
        perm.iter().map(|&o| x.class_basis().ray_classes()[o].clone()).collect(),
    );
    ToricVariety::with_labels(Fan::new(x.dim(), rays, cones).unwrap(), labels)
        .unwrap()
        .with_class_basis(basis)
        .unwrap()
}

/// Nefness from intersection numbers: for every wall `tau` between the
/// maximal cones `tau + a` and `tau + b`, the relation
/// `u_a + u_b + sum_k c_k u_k = 0` over the rays of `tau` gives
/// `D . C_tau = d_a + d_b + sum_k c_k d_k`; `D` is nef iff all are `>= 0`.
pub fn nef_by_intersection_numbers(x: &ToricVariety, d: &ToricDivisor) -> bool {
    let cones = x.fan().max_cones();
    let n = x.dim();
    for i in 0..cones.len() {
        for j in i + 1..cones.len() {
            let common: Vec<usize> = cones[i].iter().copied().filter(|r| cones[j].contains(r)).collect();
            if common.len() != n - 1 {
                continue;
            }
            let a = *cones[i].iter().find(|r| !common.contains(r)).unwrap();
            let b = *cones[j].iter().find(|r| !common.contains(r)).unwrap();
            let u = |r: usize| qvec(&x.rays()[r]);
            let rhs: QVec = (0..n).map(|k| -(u(a)[k].clone() + &u(b)[k])).collect();
            let cols: Vec<QVec> = common.iter().map(|&r| u(r)).collect();
            let c = solve_overdetermined(&cols, &rhs).expect("wall relation");
            let coeffs = d.coeffs();
            let mut dot = coeffs[a].clone() + &coeffs[b];
            for (k, &r) in common.iter().enumerate() {
                dot += &c[k] * &coeffs[r];
            }
            if dot < rat(0) {
                return false;
            }
        }
    }
    true
}

/// Exact solution `c` of `sum_k c_k cols[k] = rhs`, if consistent.
fn solve_overdetermined(cols: &[QVec], rhs: &[Rat]) -> Option<QVec> {
    let k = cols.len();
    let mut rows: Vec<QVec> = (0..rhs.len())
        .map(|i| {
            let mut row: QVec = cols.iter().map(|c| c[i].clone()).collect();
            row.push(rhs[i].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..k {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][col] != rat(0)) else {
            continue;
        };
        rows.swap(r, p);
        let lead = rows[r][col].clone();
        for v in rows[r].iter_mut() {
            *v = &*v / &lead;
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[col] != rat(0) {
                let f = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    if rows[r..].iter().any(|row| row[k] != rat(0)) {
        return None;
    }
    let mut c = vec![rat(0); k];
    for (i, &col) in pivots.iter().enumerate() {
        c[col] = rows[i][k].clone();
    }
    Some(c)
}

fn det2(a: &[i64], b: &[i64]) -> i64 {
    a[0] * b[1] - a[1] * b[0]
}

/// Segments and triangles whose edges are edges directions of the polygon
/// `p`, each given by the facet indices it uses and integer edge lengths.
fn circuit_summands(normals: &[IVec]) -> Vec<Vec<(usize, i64)>> {
    let e = normals.len();
    let mut out = Vec::new();
    for i in 0..e {
        for j in i + 1..e {
            if normals[i][0] == -normals[j][0] && normals[i][1] == -normals[j][1] {
                out.push(vec![(i, 1), (j, 1)]);
            }
            for k in j + 1..e {
                let (a, b, c) = (
                    det2(&normals[j], &normals[k]),
                    det2(&normals[k], &normals[i]),
                    det2(&normals[i], &normals[j]),
                );
                let same = (a > 0 && b > 0 && c > 0) || (a < 0 && b < 0 && c < 0);
                if same {
                    let g = gcd(gcd(a.abs(), b.abs()), c.abs());
                    out.push(vec![(i, a.abs() / g), (j, b.abs() / g), (k, c.abs() / g)]);
                }
            }
        }
    }
    out
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

/// The polygon with the given inner normals and lattice edge lengths.
fn realize(normals: &[IVec], circuit: &[(usize, i64)]) -> Polyhedron {
    let mut edges: Vec<(f64, [i64; 2])> = circuit
        .iter()
        .map(|&(i, k)| {
            let n = &normals[i];
            let d = [n[1] * k, -n[0] * k];
            ((d[1] as f64).atan2(d[0] as f64), d)
        })
        .collect();
    edges.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    let mut pts = vec![qvec(&[0, 0])];
    let mut cur = [0i64, 0];
    for (_, d) in &edges {
        cur = [cur[0] + d[0], cur[1] + d[1]];
        pts.push(qvec(&cur));
    }
    Polyhedron::from_generators(2, pts, Vec::new()).unwrap()
}

/// Brute-force summand search for a full-dimensional polygon: every segment
/// or triangle built from the polygon's edge directions is tested as a
/// Minkowski summand of `c P` for small integers `c`. Returns the summands
/// found that are not homothetic to `P`.
pub fn polygon_summands(p: &Polyhedron) -> Vec<Polyhedron> {
    let normals: Vec<IVec> = p.facets().iter().map(|h| h.normal().to_vec()).collect();
    let own = p.vertices().len();
    let mut found = Vec::new();
    for circuit in circuit_summands(&normals) {
        if circuit.len() == own {
            continue;
        }
        let q = realize(&normals, &circuit);
        let max_len = circuit.iter().map(|c| c.1).max().unwrap();
        for c in 1..=max_len.max(1) * 4 {
            let cp = p.scale(&rat(c));
            let rest: Vec<toric_core::HalfSpace> = normals
                .iter()
                .map(|u| {
                    let t: Rat = cp.support_value(u).unwrap() - q.support_value(u).unwrap();
                    toric_core::HalfSpace::new(u.clone(), t).unwrap()
                })
                .collect();
            let r = Polyhedron::intersect_halfspaces(&rest, 2).unwrap();
            if !r.is_empty() && q.minkowski_sum(&r).unwrap() == cp {
                found.push(q);
                break;
            }
        }
    }
    found
}
