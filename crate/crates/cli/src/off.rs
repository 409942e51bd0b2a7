//! OFF export of polytopes in dimension 2 or 3.

use std::fmt::Write;

use num_traits::ToPrimitive;

use toric_core::Polyhedron;

type P3 = [f64; 3];

fn sub(a: P3, b: P3) -> P3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn dot(a: P3, b: P3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross(a: P3, b: P3) -> P3 {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

/// Indices of `face` ordered counter-clockwise when seen from the side that
/// `outward` points to.
fn order_face(pts: &[P3], face: &[usize], outward: P3) -> Vec<usize> {
    let n = face.len() as f64;
    let mut c = [0.0; 3];
    for &i in face {
        for k in 0..3 {
            c[k] += pts[i][k] / n;
        }
    }
    let e1 = sub(pts[face[0]], c);
    let e2 = cross(outward, e1);
    let mut out = face.to_vec();
    out.sort_by(|&a, &b| {
        let (da, db) = (sub(pts[a], c), sub(pts[b], c));
        let ta = dot(da, e2).atan2(dot(da, e1));
        let tb = dot(db, e2).atan2(dot(db, e1));
        ta.total_cmp(&tb)
    });
    out
}

/// OFF text for a nonempty polytope. Full-dimensional polytopes in 3-space
/// get one face per facet, planar polygons a single face, anything else
/// only its vertices.
pub fn render(p: &Polyhedron) -> Result<String, String> {
    if p.is_empty() || !p.is_bounded() {
        return Err("off output needs a nonempty polytope".into());
    }
    if !(2..=3).contains(&p.dim()) {
        return Err(format!("off output needs dimension 2 or 3, got {}", p.dim()));
    }
    let pts: Vec<P3> = p
        .vertices()
        .iter()
        .map(|v| {
            let f = |k: usize| v.get(k).and_then(|x| x.to_f64()).unwrap_or(0.0);
            [f(0), f(1), f(2)]
        })
        .collect();
    let all: Vec<usize> = (0..pts.len()).collect();
    let faces: Vec<Vec<usize>> = match (p.dim(), p.affine_dim()) {
        (3, Some(3)) => p
            .facets()
            .iter()
            .zip(p.facet_vertex_incidence())
            .map(|(h, face)| {
                let n = h.normal();
                order_face(&pts, &face, [-(n[0] as f64), -(n[1] as f64), -(n[2] as f64)])
            })
            .collect(),
        (2, Some(2)) => vec![order_face(&pts, &all, [0.0, 0.0, 1.0])],
        _ => Vec::new(),
    };
    let mut out = String::from("OFF\n");
    writeln!(out, "{} {} 0", pts.len(), faces.len()).unwrap();
    for v in &pts {
        writeln!(out, "{} {} {}", v[0], v[1], v[2]).unwrap();
    }
    for f in &faces {
        let idx: Vec<String> = f.iter().map(usize::to_string).collect();
        writeln!(out, "{} {}", f.len(), idx.join(" ")).unwrap();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use toric_core::rational::qvec;

    #[test]
    fn cube_has_six_quadrilaterals() {
        let mut v = Vec::new();
        for m in 0..8i64 {
            v.push(qvec(&[m & 1, (m >> 1) & 1, (m >> 2) & 1]));
        }
        let cube = Polyhedron::from_generators(3, v, Vec::new()).unwrap();
        let off = render(&cube).unwrap();
        let lines: Vec<&str> = off.lines().collect();
        assert_eq!(lines[0], "OFF");
        assert_eq!(lines[1], "8 6 0");
        assert_eq!(lines.iter().filter(|l| l.starts_with("4 ")).count(), 6);
    }

    #[test]
    fn faces_are_oriented_outwards() {
        let t = Polyhedron::from_generators(
            3,
            vec![qvec(&[0, 0, 0]), qvec(&[1, 0, 0]), qvec(&[0, 1, 0]), qvec(&[0, 0, 1])],
            Vec::new(),
        )
        .unwrap();
        let off = render(&t).unwrap();
        let pts: Vec<P3> = off.lines().skip(2).take(4).map(|l| {
            let c: Vec<f64> = l.split(' ').map(|x| x.parse().unwrap()).collect();
            [c[0], c[1], c[2]]
        }).collect();
        let centre = [0.25, 0.25, 0.25];
        for line in off.lines().skip(6) {
            let idx: Vec<usize> = line.split(' ').skip(1).map(|x| x.parse().unwrap()).collect();
            let n = cross(sub(pts[idx[1]], pts[idx[0]]), sub(pts[idx[2]], pts[idx[0]]));
            assert!(dot(n, sub(pts[idx[0]], centre)) > 0.0);
        }
    }
}
