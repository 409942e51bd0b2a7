//! Smooth complete toric varieties and their torus-invariant divisors.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::fans::{validate_fan, Fan};
use crate::linalg::{self, Smith};
use crate::polyhedra::{HalfSpace, Polyhedron};
use crate::rational::{self, dot_int, parse_rat, primitive_int, IVec, QVec, Rat};

/// `D = sum_rho a_rho D_rho`, one rational coefficient per ray.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ToricDivisor {
    coeffs: Vec<Rat>,
}

impl ToricDivisor {
    pub fn new(coeffs: Vec<Rat>) -> Self {
        ToricDivisor { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        ToricDivisor::new(rational::qvec(coeffs))
    }

    pub fn zero(num_rays: usize) -> Self {
        ToricDivisor::new(rational::zero_vec(num_rays))
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        rational::is_zero_vec(&self.coeffs)
    }

    /// All coefficients nonnegative.
    pub fn is_effective(&self) -> bool {
        self.coeffs.iter().all(|a| !a.is_negative())
    }

    pub fn scaled(&self, c: &Rat) -> ToricDivisor {
        ToricDivisor::new(rational::scale(&self.coeffs, c))
    }
}

impl Add for &ToricDivisor {
    type Output = ToricDivisor;
    fn add(self, rhs: &ToricDivisor) -> ToricDivisor {
        ToricDivisor::new(rational::add(&self.coeffs, &rhs.coeffs))
    }
}

impl Sub for &ToricDivisor {
    type Output = ToricDivisor;
    fn sub(self, rhs: &ToricDivisor) -> ToricDivisor {
        ToricDivisor::new(rational::sub(&self.coeffs, &rhs.coeffs))
    }
}

impl Mul<&ToricDivisor> for &Rat {
    type Output = ToricDivisor;
    fn mul(self, rhs: &ToricDivisor) -> ToricDivisor {
        rhs.scaled(self)
    }
}

/// Coordinates of a divisor class in the variety's class-group basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DivisorClass {
    coords: Vec<Rat>,
}

impl DivisorClass {
    pub fn new(coords: Vec<Rat>) -> Self {
        DivisorClass { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        DivisorClass::new(rational::qvec(coords))
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        rational::is_zero_vec(&self.coords)
    }

    /// Primitive integer vector on the ray through this class.
    pub fn primitive(&self) -> IVec {
        primitive_int(&self.coords)
    }

    /// True iff the class is a nonnegative rational multiple of `ray`.
    pub fn lies_on_ray(&self, ray: &[i64]) -> bool {
        !self.is_zero() && self.primitive() == rational::primitive_i64(ray)
    }

    pub fn scaled(&self, c: &Rat) -> DivisorClass {
        DivisorClass::new(rational::scale(&self.coords, c))
    }
}

impl Add for &DivisorClass {
    type Output = DivisorClass;
    fn add(self, rhs: &DivisorClass) -> DivisorClass {
        DivisorClass::new(rational::add(&self.coords, &rhs.coords))
    }
}

/// A basis of the class group `Z^{Sigma(1)} / M`, given by the class of each
/// prime divisor `D_rho`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassBasis {
    labels: Vec<String>,
    ray_classes: Vec<IVec>,
}

impl ClassBasis {
    pub fn new(labels: Vec<String>, ray_classes: Vec<IVec>) -> Self {
        ClassBasis {
            labels,
            ray_classes,
        }
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn ray_classes(&self) -> &[IVec] {
        &self.ray_classes
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    /// Readable class such as `2H-E1-E2`; rational coefficients appear as
    /// `1/2*H`.
    pub fn format(&self, c: &DivisorClass) -> String {
        format_combination(c.coords(), &self.labels)
    }
}

/// A smooth complete toric variety `X_Sigma`.
#[derive(Clone, Debug)]
pub struct ToricVariety {
    fan: Fan,
    ray_labels: Vec<String>,
    basis: ClassBasis,
    /// Smith form of the class map, used to lift classes to divisors.
    lift: Smith,
}

impl ToricVariety {
    /// Validates the fan (complete and smooth) and equips the variety with
    /// default labels `D1, D2, ...` and a Smith-normal-form class basis.
    pub fn new(fan: Fan) -> Result<Self> {
        let labels = (1..=fan.rays().len()).map(|i| format!("D{i}")).collect();
        ToricVariety::with_labels(fan, labels)
    }

    pub fn with_labels(fan: Fan, ray_labels: Vec<String>) -> Result<Self> {
        let report = validate_fan(&fan);
        if !report.is_fan {
            return Err(Error::NotAFan(report.problems.join("; ")));
        }
        if !report.is_complete {
            return Err(Error::NotComplete(report.problems.join("; ")));
        }
        if !report.is_smooth {
            return Err(Error::NotSmooth(report.problems.join("; ")));
        }
        if ray_labels.len() != fan.rays().len() {
            return Err(Error::InvalidDivisor(format!(
                "{} ray labels for {} rays",
                ray_labels.len(),
                fan.rays().len()
            )));
        }
        let basis = default_class_basis(&fan);
        let lift = class_map_smith(&basis, fan.rays().len());
        Ok(ToricVariety {
            fan,
            ray_labels,
            basis,
            lift,
        })
    }

    /// Replaces the class basis. The classes of the `D_rho` must kill every
    /// principal divisor and generate the class group.
    pub fn with_class_basis(mut self, basis: ClassBasis) -> Result<Self> {
        let r = self.num_rays();
        let k = r - self.dim();
        if basis.ray_classes.len() != r {
            return Err(Error::InvalidClassBasis(format!(
                "{} ray classes for {r} rays",
                basis.ray_classes.len()
            )));
        }
        if basis.labels.len() != k || basis.ray_classes.iter().any(|c| c.len() != k) {
            return Err(Error::InvalidClassBasis(format!(
                "the class group has rank {k}"
            )));
        }
        for j in 0..self.dim() {
            for row in 0..k {
                let s: i64 = (0..r)
                    .map(|i| basis.ray_classes[i][row] * self.fan.rays()[i][j])
                    .sum();
                if s != 0 {
                    return Err(Error::InvalidClassBasis(format!(
                        "the principal divisor of the character e{} has nonzero class",
                        j + 1
                    )));
                }
            }
        }
        let lift = class_map_smith(&basis, r);
        if lift.diagonal.iter().any(|&d| d != 1) {
            return Err(Error::InvalidClassBasis(
                "the ray classes do not generate the class group".into(),
            ));
        }
        self.basis = basis;
        self.lift = lift;
        Ok(self)
    }

    pub fn fan(&self) -> &Fan {
        &self.fan
    }

    pub fn dim(&self) -> usize {
        self.fan.dim()
    }

    pub fn num_rays(&self) -> usize {
        self.fan.rays().len()
    }

    pub fn rays(&self) -> &[IVec] {
        self.fan.rays()
    }

    pub fn num_cones(&self) -> usize {
        self.fan.max_cones().len()
    }

    pub fn cone(&self, sigma: usize) -> Result<&[usize]> {
        self.fan
            .max_cones()
            .get(sigma)
            .map(Vec::as_slice)
            .ok_or(Error::InvalidCone(sigma))
    }

    pub fn ray_labels(&self) -> &[String] {
        &self.ray_labels
    }

    pub fn class_basis(&self) -> &ClassBasis {
        &self.basis
    }

    pub fn class_rank(&self) -> usize {
        self.basis.rank()
    }

    pub fn ray_index(&self, label: &str) -> Option<usize> {
        self.ray_labels.iter().position(|l| l == label)
    }

    /// Index of the maximal cone whose rays are exactly `rays` (any order).
    pub fn cone_index(&self, rays: &[usize]) -> Option<usize> {
        let mut want = rays.to_vec();
        want.sort_unstable();
        self.fan.max_cones().iter().position(|c| {
            let mut c = c.clone();
            c.sort_unstable();
            c == want
        })
    }

    fn check(&self, d: &ToricDivisor) -> Result<()> {
        if d.len() != self.num_rays() {
            return Err(Error::InvalidDivisor(format!(
                "{} coefficients for {} rays",
                d.len(),
                self.num_rays()
            )));
        }
        Ok(())
    }

    /// `div(chi^m) = sum_rho <m, u_rho> D_rho`.
    pub fn principal(&self, m: &[Rat]) -> ToricDivisor {
        ToricDivisor::new(self.rays().iter().map(|u| dot_int(m, u)).collect())
    }

    /// The prime divisor `D_rho`.
    pub fn prime(&self, rho: usize) -> ToricDivisor {
        let mut c = rational::zero_vec(self.num_rays());
        c[rho] = Rat::one();
        ToricDivisor::new(c)
    }

    /// `P_D = {m : <m, u_rho> >= -a_rho for every rho}`.
    pub fn polytope_of(&self, d: &ToricDivisor) -> Result<Polyhedron> {
        self.check(d)?;
        let hs: Vec<HalfSpace> = self
            .rays()
            .iter()
            .zip(d.coeffs())
            .map(|(u, a)| HalfSpace::new(u.clone(), a.clone()))
            .collect::<Result<_>>()?;
        Polyhedron::intersect_halfspaces(&hs, self.dim())
    }

    /// The `m_sigma` with `<m_sigma, u_rho> = -a_rho` for the rays of `sigma`.
    pub fn cartier_data(&self, d: &ToricDivisor, sigma: usize) -> Result<QVec> {
        self.check(d)?;
        let cone = self.cone(sigma)?;
        let rows: Vec<QVec> = cone.iter().map(|&r| rational::qvec(&self.rays()[r])).collect();
        let rhs: QVec = cone.iter().map(|&r| -d.coeffs()[r].clone()).collect();
        Ok(linalg::solve(&rows, &rhs).expect("smooth maximal cones are unimodular"))
    }

    /// Nef iff every `m_sigma` lies in `P_D`.
    pub fn is_nef(&self, d: &ToricDivisor) -> Result<bool> {
        self.check(d)?;
        for sigma in 0..self.num_cones() {
            let m = self.cartier_data(d, sigma)?;
            let inside = self
                .rays()
                .iter()
                .zip(d.coeffs())
                .all(|(u, a)| !(dot_int(&m, u) + a).is_negative());
            if !inside {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn class_of(&self, d: &ToricDivisor) -> Result<DivisorClass> {
        self.check(d)?;
        let k = self.class_rank();
        let coords = (0..k)
            .map(|row| {
                d.coeffs()
                    .iter()
                    .zip(&self.basis.ray_classes)
                    .fold(Rat::zero(), |acc, (a, c)| acc + a * rational::rat(c[row]))
            })
            .collect();
        Ok(DivisorClass::new(coords))
    }

    /// A divisor in the given class; integral whenever the class is.
    pub fn lift_class(&self, c: &DivisorClass) -> Result<ToricDivisor> {
        let k = self.class_rank();
        if c.coords().len() != k {
            return Err(Error::DimensionMismatch {
                expected: k,
                found: c.coords().len(),
            });
        }
        let r = self.num_rays();
        // P C Q = [I | 0], so a = Q (P c, 0) solves C a = c
        let pc: QVec = (0..k)
            .map(|i| {
                (0..k).fold(Rat::zero(), |acc, j| {
                    acc + rat128(self.lift.p[i][j]) * &c.coords()[j]
                })
            })
            .collect();
        let coeffs = (0..r)
            .map(|i| {
                (0..k).fold(Rat::zero(), |acc, j| acc + rat128(self.lift.q[i][j]) * &pc[j])
            })
            .collect();
        Ok(ToricDivisor::new(coeffs))
    }

    /// `D + div(chi^{m_sigma})`: linearly equivalent to `D` and zero on the
    /// rays of `sigma`. Its polytope is `P_D - m_sigma`.
    pub fn trivialize_on(&self, d: &ToricDivisor, sigma: usize) -> Result<ToricDivisor> {
        let m = self.cartier_data(d, sigma)?;
        let mut out = d + &self.principal(&m);
        for &r in self.cone(sigma)? {
            debug_assert!(out.coeffs[r].is_zero());
            out.coeffs[r] = Rat::zero();
        }
        Ok(out)
    }

    /// Splits `D = M + F` where `M` has the same polytope with every
    /// inequality supporting, and `F >= 0` is the fixed part.
    pub fn movable_fixed_split(&self, d: &ToricDivisor) -> Result<(ToricDivisor, ToricDivisor)> {
        let p = self.polytope_of(d)?;
        if p.is_empty() {
            return Err(Error::NotPseudoEffective);
        }
        let m = ToricDivisor::new(
            self.rays()
                .iter()
                .map(|u| p.support_value(u))
                .collect::<Result<_>>()?,
        );
        let f = d - &m;
        Ok((m, f))
    }

    /// Extremal rays of the movable cone, the intersection over `rho` of the
    /// cones spanned by the classes of all other prime divisors.
    pub fn movable_cone_generators(&self) -> Result<Vec<IVec>> {
        let r = self.num_rays();
        let groups: Vec<Vec<usize>> = (0..r)
            .map(|rho| (0..r).filter(|&x| x != rho).collect())
            .collect();
        self.intersect_class_cones(&groups)
    }

    /// Extremal rays of the nef cone, the intersection over maximal cones
    /// `sigma` of the cones spanned by the classes of `D_rho`, `rho` not in `sigma`.
    pub fn nef_cone_generators(&self) -> Result<Vec<IVec>> {
        let r = self.num_rays();
        let groups: Vec<Vec<usize>> = self
            .fan
            .max_cones()
            .iter()
            .map(|c| (0..r).filter(|x| !c.contains(x)).collect())
            .collect();
        self.intersect_class_cones(&groups)
    }

    fn intersect_class_cones(&self, groups: &[Vec<usize>]) -> Result<Vec<IVec>> {
        let k = self.class_rank();
        let origin = rational::zero_vec(k);
        let mut hs = Vec::new();
        for g in groups {
            let gens = g.iter().map(|&i| self.basis.ray_classes[i].clone()).collect();
            let cone = Polyhedron::from_generators(k, vec![origin.clone()], gens)?;
            hs.extend(cone.halfspaces());
        }
        Ok(Polyhedron::intersect_halfspaces(&hs, k)?.rays().to_vec())
    }

    /// Readable divisor such as `D1+2*D2`.
    pub fn format_divisor(&self, d: &ToricDivisor) -> String {
        format_combination(d.coeffs(), &self.ray_labels)
    }

    pub fn format_class(&self, c: &DivisorClass) -> String {
        self.basis.format(c)
    }

    /// Parses a combination of ray labels such as `3D1+4D2-E1` or `1/2*D3`.
    pub fn parse_divisor(&self, expr: &str) -> Result<ToricDivisor> {
        Ok(ToricDivisor::new(parse_combination(expr, &self.ray_labels)?))
    }

    /// Parses a combination of class-basis labels such as `7H-2E1-2E2`.
    pub fn parse_class(&self, expr: &str) -> Result<DivisorClass> {
        Ok(DivisorClass::new(parse_combination(expr, &self.basis.labels)?))
    }
}

fn rat128(x: i128) -> Rat {
    Rat::from_integer(x.into())
}

/// Class map from the last `r - n` rows of `P` in `P U Q = D`.
fn default_class_basis(fan: &Fan) -> ClassBasis {
    let n = fan.dim();
    let r = fan.rays().len();
    let smith = linalg::smith_normal_form(fan.rays(), n);
    let ray_classes = (0..r)
        .map(|rho| {
            (n..r)
                .map(|row| i64::try_from(smith.p[row][rho]).expect("class entry fits in i64"))
                .collect()
        })
        .collect();
    let labels = (1..=r - n).map(|i| format!("C{i}")).collect();
    ClassBasis::new(labels, ray_classes)
}

fn class_map_smith(basis: &ClassBasis, num_rays: usize) -> Smith {
    let k = basis.rank();
    let rows: Vec<IVec> = (0..k)
        .map(|row| (0..num_rays).map(|i| basis.ray_classes[i][row]).collect())
        .collect();
    linalg::smith_normal_form(&rows, num_rays)
}

fn format_combination(coeffs: &[Rat], labels: &[String]) -> String {
    let mut out = String::new();
    for (a, label) in coeffs.iter().zip(labels) {
        if a.is_zero() {
            continue;
        }
        let sign = if a.is_negative() { "-" } else { "+" };
        if !out.is_empty() || a.is_negative() {
            out.push_str(sign);
        }
        let abs = a.abs();
        if abs.is_one() {
            out.push_str(label);
        } else if abs.is_integer() {
            out.push_str(&format!("{abs}{label}"));
        } else {
            out.push_str(&format!("{abs}*{label}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn parse_combination(expr: &str, labels: &[String]) -> Result<Vec<Rat>> {
    let mut coeffs = rational::zero_vec(labels.len());
    let compact: String = expr.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    if compact == "0" {
        return Ok(coeffs);
    }
    let mut terms = Vec::new();
    let mut start = 0;
    for (i, ch) in compact.char_indices() {
        if (ch == '+' || ch == '-') && i > start {
            terms.push(&compact[start..i]);
            start = i;
        }
    }
    terms.push(&compact[start..]);
    for term in terms {
        let (negative, body) = match term.as_bytes().first() {
            Some(b'-') => (true, &term[1..]),
            Some(b'+') => (false, &term[1..]),
            _ => (false, term),
        };
        let split = body
            .find(|c: char| c.is_alphabetic() || c == '_')
            .ok_or_else(|| Error::Parse(format!("term {term:?} names no label")))?;
        let (coef, label) = body.split_at(split);
        let coef = coef.strip_suffix('*').unwrap_or(coef);
        let mut value = if coef.is_empty() {
            Rat::one()
        } else {
            parse_rat(coef)?
        };
        if negative {
            value = -value;
        }
        let idx = labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::Parse(format!("unknown label {label:?}")))?;
        coeffs[idx] += value;
    }
    Ok(coeffs)
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coords: Vec<String> = self.coords.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", coords.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::rational::{qvec, rat};

    fn pts(v: &[&[i64]]) -> Vec<QVec> {
        let mut out: Vec<QVec> = v.iter().map(|p| qvec(p)).collect();
        out.sort();
        out
    }

    #[test]
    fn polytopes() {
        let x = catalog::bl1_p2();
        let d = x.parse_divisor("D1+D2+D3+E1").unwrap();
        let p = x.polytope_of(&d).unwrap();
        assert_eq!(p.vertices(), pts(&[&[-1, 1], &[-1, -1], &[2, -1], &[0, 1]]).as_slice());
        let zero = x.polytope_of(&ToricDivisor::zero(4)).unwrap();
        assert_eq!(zero.vertices(), &[qvec(&[0, 0])]);

        let y = catalog::bl2_p2();
        let e1 = y.parse_divisor("E1").unwrap();
        assert_eq!(y.polytope_of(&e1).unwrap().vertices(), &[qvec(&[0, 0])]);
        assert!(x.polytope_of(&ToricDivisor::zero(3)).is_err());
    }

    #[test]
    fn cartier_and_nef() {
        let x = catalog::bl2_p2();
        let h = x.parse_divisor("D2+E2").unwrap();
        let s12 = x.cone_index(&[0, 1]).unwrap();
        assert_eq!(x.cartier_data(&h, s12).unwrap(), qvec(&[0, -1]));
        let e1 = x.parse_divisor("E1").unwrap();
        let s = x.cone_index(&[3, 4]).unwrap();
        assert_eq!(x.cartier_data(&e1, s).unwrap(), qvec(&[-1, 1]));
        assert_eq!(
            x.cartier_data(&ToricDivisor::zero(5), s).unwrap(),
            qvec(&[0, 0])
        );
        assert!(x.is_nef(&h).unwrap());
        assert!(!x.is_nef(&e1).unwrap());
        assert!(x.is_nef(&ToricDivisor::zero(5)).unwrap());
    }

    #[test]
    fn classes() {
        let x = catalog::bl2_p2();
        let d1 = x.parse_divisor("D1").unwrap();
        assert_eq!(x.class_of(&d1).unwrap(), x.parse_class("H-E1").unwrap());
        let principal = x.principal(&qvec(&[3, -7]));
        assert!(x.class_of(&principal).unwrap().is_zero());

        let y = catalog::bl_p3_two_lines();
        let d = y.parse_divisor("D4+D3").unwrap();
        assert_eq!(y.format_class(&y.class_of(&d).unwrap()), "2H-E1-E2");
    }

    #[test]
    fn default_basis_kills_principal_divisors() {
        let x = ToricVariety::new(catalog::bl2_p2().fan().clone()).unwrap();
        assert_eq!(x.class_rank(), 3);
        for m in [[1, 0], [0, 1], [2, -5]] {
            assert!(x.class_of(&x.principal(&qvec(&m))).unwrap().is_zero());
        }
        let c = DivisorClass::from_ints(&[1, -2, 3]);
        let d = x.lift_class(&c).unwrap();
        assert_eq!(x.class_of(&d).unwrap(), c);
    }

    #[test]
    fn bad_class_basis_is_rejected() {
        let x = catalog::bl2_p2();
        let wrong = ClassBasis::new(
            vec!["H".into(), "E1".into(), "E2".into()],
            vec![vec![1, 0, 0]; 5],
        );
        assert!(matches!(
            x.clone().with_class_basis(wrong),
            Err(Error::InvalidClassBasis(_))
        ));
        let doubled = ClassBasis::new(
            x.class_basis().labels().to_vec(),
            x.class_basis().ray_classes().iter().map(|c| c.iter().map(|v| 2 * v).collect()).collect(),
        );
        assert!(x.with_class_basis(doubled).is_err());
    }

    #[test]
    fn lifting_classes() {
        let x = catalog::bl2_p2();
        let c = x.parse_class("7H-2E1-2E2").unwrap();
        let d = x.lift_class(&c).unwrap();
        assert_eq!(x.class_of(&d).unwrap(), c);
        assert!(d.coeffs().iter().all(|a| a.is_integer()));
    }

    #[test]
    fn trivialization() {
        let x = catalog::bl1_p2();
        let d = x.parse_divisor("D1+D2+D3+E1").unwrap();
        let s = x.cone_index(&[2, 3]).unwrap();
        let t = x.trivialize_on(&d, s).unwrap();
        assert_eq!(t, ToricDivisor::from_ints(&[1, 2, 0, 0]));
        assert_eq!(x.trivialize_on(&t, s).unwrap(), t);
        let m = x.cartier_data(&d, s).unwrap();
        let shifted = x.polytope_of(&d).unwrap().translate(&rational::scale(&m, &rat(-1)));
        assert_eq!(x.polytope_of(&t).unwrap(), shifted);

        let y = catalog::bl2_p2();
        let e1 = y.parse_divisor("E1").unwrap();
        let s = y.cone_index(&[3, 4]).unwrap();
        let t = y.trivialize_on(&e1, s).unwrap();
        assert_eq!(t, &e1 + &y.principal(&qvec(&[-1, 1])));
    }

    #[test]
    fn movable_fixed() {
        let x = catalog::bl2_p2();
        let h = x.parse_divisor("D2+E2").unwrap();
        let (m, f) = x.movable_fixed_split(&h).unwrap();
        assert_eq!(m, h);
        assert!(f.is_zero());

        let e1 = x.parse_divisor("E1").unwrap();
        let (m, f) = x.movable_fixed_split(&e1).unwrap();
        assert!(m.is_zero());
        assert_eq!(f, e1);

        let d = x.parse_divisor("D3+2E1").unwrap();
        let (m, f) = x.movable_fixed_split(&d).unwrap();
        assert!(f.is_effective());
        assert!(f.coeffs()[4] > rat(0));
        assert_eq!(x.polytope_of(&m).unwrap(), x.polytope_of(&d).unwrap());
        let (_, again) = x.movable_fixed_split(&m).unwrap();
        assert!(again.is_zero());

        let neg = x.parse_divisor("-E1").unwrap();
        assert_eq!(x.movable_fixed_split(&neg).unwrap_err(), Error::NotPseudoEffective);
    }

    #[test]
    fn cones_of_classes() {
        let x = catalog::bl2_p2();
        let mut mov = x.movable_cone_generators().unwrap();
        mov.sort();
        let mut expected = vec![vec![1, 0, 0], vec![1, -1, 0], vec![1, 0, -1]];
        expected.sort();
        assert_eq!(mov, expected);
        let mut nef = x.nef_cone_generators().unwrap();
        nef.sort();
        assert_eq!(nef, expected);

        assert_eq!(catalog::projective_space(2).movable_cone_generators().unwrap(), vec![vec![1]]);

        let y = catalog::bl_p3_two_lines();
        let mut mov = y.movable_cone_generators().unwrap();
        mov.sort();
        let mut expected: Vec<IVec> = ["H", "H-E1", "H-E2"]
            .iter()
            .map(|s| y.parse_class(s).unwrap().primitive())
            .collect();
        expected.sort();
        assert_eq!(mov, expected);
        // 2H-E1-E2 = (H-E1) + (H-E2) is movable but not extremal in Mov;
        // it spans the wall between the nef cones of the two small resolutions
        let mut nef = y.nef_cone_generators().unwrap();
        nef.sort();
        let mut expected: Vec<IVec> = ["H", "H-E1", "2H-E1-E2"]
            .iter()
            .map(|s| y.parse_class(s).unwrap().primitive())
            .collect();
        expected.sort();
        assert_eq!(nef, expected);
        let h_e2 = y.lift_class(&y.parse_class("H-E2").unwrap()).unwrap();
        assert!(!y.is_nef(&h_e2).unwrap());
    }

    #[test]
    fn expressions() {
        let x = catalog::bl2_p2();
        let d = x.parse_divisor("3D1 + 4*D2 - E1 + 1/2*E2").unwrap();
        assert_eq!(d.coeffs(), &[rat(3), rat(4), crate::rational::ratio(1, 2), rat(0), rat(-1)]);
        assert_eq!(x.format_divisor(&d), "3D1+4D2+1/2*E2-E1");
        assert_eq!(x.format_divisor(&ToricDivisor::zero(5)), "0");
        assert!(x.parse_divisor("3X").is_err());
        assert!(x.parse_divisor("").is_err());
        assert_eq!(x.format_class(&x.parse_class("-E1").unwrap()), "-E1");
    }
}
