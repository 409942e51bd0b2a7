//! Output documents. Rationals are written as `"p/q"` strings (`"3"` for
//! integers) and every list is in a canonical order, so output is
//! byte-identical across runs.

use serde::Serialize;

use toric_core::fans::FanReport;
use toric_core::rational::format_rat;
use toric_core::tmb::{BasisElement, Step};
use toric_core::{HalfSpace, Polyhedron, Rat, ToricDivisor, ToricVariety};

pub fn q(r: &Rat) -> String {
    format_rat(r)
}

pub fn qv(v: &[Rat]) -> Vec<String> {
    v.iter().map(q).collect()
}

#[derive(Serialize)]
pub struct FanCheckDoc {
    pub is_fan: bool,
    pub is_complete: bool,
    pub is_smooth: bool,
    pub is_simplicial: bool,
    pub problems: Vec<String>,
}

impl From<FanReport> for FanCheckDoc {
    fn from(r: FanReport) -> Self {
        FanCheckDoc {
            is_fan: r.is_fan,
            is_complete: r.is_complete,
            is_smooth: r.is_smooth,
            is_simplicial: r.is_simplicial,
            problems: r.problems,
        }
    }
}

#[derive(Serialize)]
pub struct HalfSpaceDoc {
    pub normal: Vec<i64>,
    pub offset: String,
}

impl From<&HalfSpace> for HalfSpaceDoc {
    fn from(h: &HalfSpace) -> Self {
        HalfSpaceDoc {
            normal: h.normal().to_vec(),
            offset: q(h.offset()),
        }
    }
}

#[derive(Serialize)]
pub struct PolytopeDoc {
    pub ambient_dim: usize,
    /// `null` for the empty set.
    pub affine_dim: Option<usize>,
    pub vertices: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub rays: Vec<Vec<i64>>,
    /// `<x, normal> >= -offset`.
    pub facets: Vec<HalfSpaceDoc>,
    /// `<x, normal> = -offset`.
    pub equations: Vec<HalfSpaceDoc>,
    /// Euclidean volume in the ambient lattice, for full-dimensional
    /// polytopes.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub volume: Option<String>,
}

impl From<&Polyhedron> for PolytopeDoc {
    fn from(p: &Polyhedron) -> Self {
        let volume = (p.is_bounded() && p.is_full_dimensional())
            .then(|| p.volume().ok())
            .flatten()
            .map(|v| q(&v));
        PolytopeDoc {
            ambient_dim: p.dim(),
            affine_dim: p.affine_dim(),
            vertices: p.vertices().iter().map(|v| qv(v)).collect(),
            rays: p.rays().to_vec(),
            facets: p.facets().iter().map(HalfSpaceDoc::from).collect(),
            equations: p.equations().iter().map(HalfSpaceDoc::from).collect(),
            volume,
        }
    }
}

#[derive(Serialize)]
pub struct DivisorDoc {
    pub expression: String,
    pub coefficients: Vec<String>,
    pub class: String,
    pub class_coords: Vec<String>,
}

impl DivisorDoc {
    pub fn new(x: &ToricVariety, d: &ToricDivisor) -> Self {
        let c = x.class_of(d).expect("divisor matches the variety");
        DivisorDoc {
            expression: x.format_divisor(d),
            coefficients: qv(d.coeffs()),
            class: x.format_class(&c),
            class_coords: qv(c.coords()),
        }
    }
}

#[derive(Serialize)]
pub struct PolytopeOutput {
    pub divisor: DivisorDoc,
    pub polytope: PolytopeDoc,
}

#[derive(Serialize)]
pub struct CartierDoc {
    pub cone: usize,
    pub rays: Vec<String>,
    pub m: Vec<String>,
}

#[derive(Serialize)]
pub struct NefOutput {
    pub divisor: DivisorDoc,
    pub nef: bool,
    pub cartier_data: Vec<CartierDoc>,
}

#[derive(Serialize)]
pub struct FlagDoc {
    pub cone: usize,
    pub order: Vec<String>,
    pub transform: Vec<Vec<i64>>,
}

#[derive(Serialize)]
pub struct OkounkovOutput {
    pub divisor: DivisorDoc,
    pub flag: FlagDoc,
    pub body: PolytopeDoc,
}

#[derive(Serialize)]
pub struct StepDoc {
    pub ray: String,
    pub offset: String,
}

#[derive(Serialize)]
pub struct ElementDoc {
    pub class: String,
    pub divisor: DivisorDoc,
    pub cone: usize,
    pub steps: Vec<StepDoc>,
    pub polytope: PolytopeDoc,
}

impl ElementDoc {
    pub fn new(x: &ToricVariety, e: &BasisElement) -> Self {
        let step = |s: &Step| StepDoc {
            ray: x.ray_labels()[s.ray].clone(),
            offset: q(&s.offset),
        };
        ElementDoc {
            class: x.format_class(&e.class),
            divisor: DivisorDoc::new(x, &e.divisor),
            cone: e.cone,
            steps: e.steps.iter().map(step).collect(),
            polytope: PolytopeDoc::from(&e.polytope),
        }
    }
}

#[derive(Serialize)]
pub struct BasisOutput {
    /// `"all-flags"` or `"cone"`.
    pub mode: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cone: Option<usize>,
    pub elements: Vec<ElementDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rejected: Option<Vec<ElementDoc>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub movable_rays: Option<Vec<String>>,
}

#[derive(Serialize)]
pub struct CoefficientDoc {
    pub class: String,
    pub coefficient: String,
}

#[derive(Serialize)]
pub struct SummandDoc {
    pub class: String,
    pub coefficient: String,
    pub body: PolytopeDoc,
}

#[derive(Serialize)]
pub struct DecomposeOutput {
    pub divisor: DivisorDoc,
    pub fixed: DivisorDoc,
    pub movable: DivisorDoc,
    pub coefficients: Vec<CoefficientDoc>,
    /// `u` with `P_M = sum a_i P_{B_i} + u`.
    pub translation: Vec<String>,
    pub on_wall: bool,
    pub chamber: Vec<String>,
    pub flag: FlagDoc,
    pub okounkov_body: PolytopeDoc,
    pub okounkov_summands: Vec<SummandDoc>,
    /// `w` with `Delta(D) = sum a_i Delta(B_i) + w`.
    pub okounkov_translation: Vec<String>,
}

#[derive(Serialize)]
pub struct RayClassDoc {
    pub ray: String,
    pub class: String,
    pub coords: Vec<i64>,
}

#[derive(Serialize)]
pub struct ClassGroupOutput {
    pub rank: usize,
    pub labels: Vec<String>,
    pub rays: Vec<RayClassDoc>,
    pub nef_cone: Vec<String>,
    pub movable_cone: Vec<String>,
}

#[derive(Serialize)]
pub struct ErrorDoc {
    pub kind: String,
    pub message: String,
}

#[derive(Serialize)]
pub struct ErrorOutput {
    pub error: ErrorDoc,
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("outputs serialize") + "\n"
}
