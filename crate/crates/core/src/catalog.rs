//! Small smooth projective toric varieties with readable class bases.

use crate::error::Result;
use crate::fans::Fan;
use crate::rational::IVec;
use crate::toric::{ClassBasis, ToricVariety};

fn build(
    rays: &[&[i64]],
    cones: &[&[usize]],
    labels: &[&str],
    basis_labels: &[&str],
    classes: &[&[i64]],
) -> ToricVariety {
    let dim = rays[0].len();
    let fan = Fan::new(
        dim,
        rays.iter().map(|r| r.to_vec()).collect(),
        cones.iter().map(|c| c.to_vec()).collect(),
    )
    .expect("catalog fan");
    let basis = ClassBasis::new(
        basis_labels.iter().map(|s| s.to_string()).collect(),
        classes.iter().map(|c| c.to_vec()).collect(),
    );
    ToricVariety::with_labels(fan, labels.iter().map(|s| s.to_string()).collect())
        .and_then(|x| x.with_class_basis(basis))
        .expect("catalog variety")
}

/// `P^n` with rays `e_1, ..., e_n, -(e_1 + ... + e_n)` and class basis `H`.
pub fn projective_space(n: usize) -> ToricVariety {
    assert!(n >= 1, "projective space needs positive dimension");
    let mut rays: Vec<IVec> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    rays.push(vec![-1; n]);
    let cones: Vec<Vec<usize>> = (0..=n)
        .map(|skip| (0..=n).filter(|&i| i != skip).collect())
        .collect();
    let fan = Fan::new(n, rays, cones).expect("fan of projective space");
    let labels = (1..=n + 1).map(|i| format!("D{i}")).collect();
    let basis = ClassBasis::new(vec!["H".into()], vec![vec![1]; n + 1]);
    ToricVariety::with_labels(fan, labels)
        .and_then(|x| x.with_class_basis(basis))
        .expect("projective space")
}

/// `P^1 x P^1` with rulings `F1` (rays `+-e1`) and `F2` (rays `+-e2`).
pub fn p1xp1() -> ToricVariety {
    build(
        &[&[1, 0], &[0, 1], &[-1, 0], &[0, -1]],
        &[&[0, 1], &[1, 2], &[2, 3], &[3, 0]],
        &["D1", "D2", "D3", "D4"],
        &["F1", "F2"],
        &[&[1, 0], &[0, 1], &[1, 0], &[0, 1]],
    )
}

/// `P^2` blown up in one torus-fixed point; rays `D1, D2, D3, E1`.
pub fn bl1_p2() -> ToricVariety {
    build(
        &[&[1, 0], &[0, 1], &[-1, -1], &[0, -1]],
        &[&[0, 1], &[1, 2], &[2, 3], &[3, 0]],
        &["D1", "D2", "D3", "E1"],
        &["H", "E1"],
        &[&[1, -1], &[1, 0], &[1, -1], &[0, 1]],
    )
}

/// `P^2` blown up in two torus-fixed points; rays `D1, D2, E2, D3, E1`.
pub fn bl2_p2() -> ToricVariety {
    build(
        &[&[1, 0], &[0, 1], &[-1, 0], &[-1, -1], &[0, -1]],
        &[&[0, 1], &[1, 2], &[2, 3], &[3, 4], &[4, 0]],
        &["D1", "D2", "E2", "D3", "E1"],
        &["H", "E1", "E2"],
        &[&[1, -1, 0], &[1, 0, -1], &[0, 0, 1], &[1, -1, -1], &[0, 1, 0]],
    )
}

/// `P^3` blown up along two intersecting torus-invariant lines; rays
/// `D1, D2, D3, D4, E1, E2`.
pub fn bl_p3_two_lines() -> ToricVariety {
    build(
        &[
            &[1, 0, 0],
            &[0, 1, 0],
            &[0, 0, 1],
            &[-1, -1, -1],
            &[0, -1, -1],
            &[-1, 0, -1],
        ],
        &[
            &[0, 1, 2],
            &[0, 4, 1],
            &[4, 5, 1],
            &[4, 3, 5],
            &[0, 4, 2],
            &[4, 3, 2],
            &[3, 5, 2],
            &[5, 1, 2],
        ],
        &["D1", "D2", "D3", "D4", "E1", "E2"],
        &["H", "E1", "E2"],
        &[
            &[1, -1, 0],
            &[1, 0, -1],
            &[1, 0, 0],
            &[1, -1, -1],
            &[0, 1, 0],
            &[0, 0, 1],
        ],
    )
}

/// Hirzebruch surface `F_a` with rays `e1, e2, -e1 + a e2, -e2`; class basis
/// `F` (fibre) and `S` with `D2 = S`, `D4 = S + aF`.
pub fn hirzebruch(a: i64) -> ToricVariety {
    build(
        &[&[1, 0], &[0, 1], &[-1, a], &[0, -1]],
        &[&[0, 1], &[1, 2], &[2, 3], &[3, 0]],
        &["D1", "D2", "D3", "D4"],
        &["F", "S"],
        &[&[1, 0], &[0, 1], &[1, 0], &[a, 1]],
    )
}

/// `(P^1)^n` with rays `+-e_i` and class basis `F1, ..., Fn`.
pub fn product_of_lines(n: usize) -> ToricVariety {
    assert!(n >= 1, "need at least one factor");
    let mut rays = Vec::with_capacity(2 * n);
    for sign in [1, -1] {
        for i in 0..n {
            rays.push((0..n).map(|j| if i == j { sign } else { 0 }).collect::<IVec>());
        }
    }
    let cones = (0..1usize << n)
        .map(|mask| (0..n).map(|i| if mask >> i & 1 == 1 { i + n } else { i }).collect())
        .collect();
    let fan = Fan::new(n, rays, cones).expect("fan of a product of lines");
    let labels = (1..=2 * n).map(|i| format!("D{i}")).collect();
    let classes = (0..2 * n)
        .map(|r| (0..n).map(|j| i64::from(r % n == j)).collect())
        .collect();
    let basis = ClassBasis::new((1..=n).map(|i| format!("F{i}")).collect(), classes);
    ToricVariety::with_labels(fan, labels)
        .and_then(|x| x.with_class_basis(basis))
        .expect("product of lines")
}

/// Blow-up of the torus-fixed point of maximal cone `sigma`: the fan gains
/// the ray `sum of the rays of sigma` and `sigma` is replaced by its stellar
/// subdivision. The new ray gets the first free label `E1, E2, ...`; the
/// class basis is reset to the default one.
pub fn blow_up_point(x: &ToricVariety, sigma: usize) -> Result<ToricVariety> {
    let cone = x.cone(sigma)?.to_vec();
    let n = x.dim();
    let new_ray: IVec = (0..n).map(|j| cone.iter().map(|&r| x.rays()[r][j]).sum()).collect();
    let mut rays = x.rays().to_vec();
    let e = rays.len();
    rays.push(new_ray);
    let mut cones: Vec<Vec<usize>> = Vec::with_capacity(x.num_cones() + n - 1);
    for (i, c) in x.fan().max_cones().iter().enumerate() {
        if i == sigma {
            for k in 0..n {
                let mut sub = c.clone();
                sub[k] = e;
                cones.push(sub);
            }
        } else {
            cones.push(c.clone());
        }
    }
    let mut labels = x.ray_labels().to_vec();
    let fresh = (1..)
        .map(|i| format!("E{i}"))
        .find(|l| !labels.contains(l))
        .expect("unbounded search");
    labels.push(fresh);
    ToricVariety::with_labels(Fan::new(n, rays, cones)?, labels)
}
