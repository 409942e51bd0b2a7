//! Command-line front end: reads a fan description, runs one computation and
//! prints a JSON document (or an SVG/OFF drawing).
//!
//! Exit status: 0 on success, 2 when the input fails validation, 3 when a
//! computation on valid input is infeasible.

pub mod input;
pub mod off;
pub mod output;
pub mod svg;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use toric_core::decompose::decompose;
use toric_core::fans::validate_fan;
use toric_core::okounkov::{flag_transform, okounkov_body};
use toric_core::tmb::{basis_all_flags, tmb_run};
use toric_core::{DivisorClass, Error, Execution, Polyhedron, TFlag, ToricVariety};

use input::InputDocument;
use output::*;

pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_INFEASIBLE: i32 = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub kind: String,
    pub message: String,
    pub code: i32,
}

impl CliError {
    pub fn input(message: String) -> Self {
        CliError {
            kind: "invalid-input".into(),
            message,
            code: EXIT_VALIDATION,
        }
    }

    fn format(message: String) -> Self {
        CliError {
            kind: "unsupported-format".into(),
            message,
            code: EXIT_VALIDATION,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError {
            kind: e.kind().into(),
            message: e.to_string(),
            code: if e.is_infeasible() { EXIT_INFEASIBLE } else { EXIT_VALIDATION },
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    /// Planar polytopes only.
    Svg,
    /// A single polytope in dimension 2 or 3.
    Off,
}

#[derive(Debug, Parser)]
#[command(name = "toric", version, about = "Divisor polytopes, Okounkov bodies and Minkowski bases of smooth toric varieties")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct DivisorArgs {
    /// Input document (JSON).
    pub input: PathBuf,
    /// Named divisor, coefficient list `1,0,2`, or expression `3D1+4D2-E1`.
    pub divisor: String,
    /// Read the divisor as a class in the class basis and lift it.
    #[arg(long)]
    pub class: bool,
}

#[derive(Debug, Args)]
pub struct FlagArgs {
    /// Maximal cone of the flag.
    #[arg(long)]
    pub cone: usize,
    /// Ray order of the flag, as labels or indices; defaults to the order in
    /// which the cone lists its rays.
    #[arg(long, value_delimiter = ',')]
    pub order: Option<Vec<String>>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate the fan: fan axioms, completeness, smoothness.
    Check { input: PathBuf },
    /// Vertices and inequalities of the polytope of a divisor.
    Polytope(DivisorArgs),
    /// Whether a divisor is nef, with its Cartier data.
    Nef(DivisorArgs),
    /// Okounkov body of a big divisor for a torus-invariant flag.
    Okounkov {
        #[command(flatten)]
        divisor: DivisorArgs,
        #[command(flatten)]
        flag: FlagArgs,
    },
    /// Minkowski basis elements, for one maximal cone or for all of them.
    Basis {
        input: PathBuf,
        #[arg(long, conflicts_with = "all_flags")]
        cone: Option<usize>,
        /// Run every maximal cone and merge (the default).
        #[arg(long)]
        all_flags: bool,
        /// Do not use the thread pool.
        #[arg(long)]
        sequential: bool,
    },
    /// Decompose a divisor over the Minkowski basis.
    Decompose {
        #[command(flatten)]
        divisor: DivisorArgs,
        #[command(flatten)]
        flag: FlagArgs,
    },
    /// Class group basis, ray classes, nef and movable cones.
    Classgroup { input: PathBuf },
}

/// Runs a parsed command line; returns the exit status and the text for
/// standard output.
pub fn run(cli: &Cli) -> (i32, String) {
    match execute(cli) {
        Ok(out) => out,
        Err(e) => {
            let doc = ErrorOutput {
                error: ErrorDoc {
                    kind: e.kind,
                    message: e.message,
                },
            };
            (e.code, to_json(&doc))
        }
    }
}

fn load(path: &PathBuf) -> Result<InputDocument, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))?;
    InputDocument::from_json(&text)
}

fn json_only(format: Format) -> Result<(), CliError> {
    match format {
        Format::Json => Ok(()),
        other => Err(CliError::format(format!("{other:?} output is not available for this command"))),
    }
}

fn render_one(format: Format, caption: String, p: &Polyhedron, json: String) -> Result<String, CliError> {
    match format {
        Format::Json => Ok(json),
        Format::Svg => svg::render(&[(caption, p)]).map_err(CliError::format),
        Format::Off => off::render(p).map_err(CliError::format),
    }
}

fn resolve_flag(x: &ToricVariety, f: &FlagArgs) -> Result<TFlag, CliError> {
    let order = match &f.order {
        None => return Ok(TFlag::natural(x, f.cone)?),
        Some(tokens) => tokens
            .iter()
            .map(|t| {
                x.ray_index(t.trim())
                    .or_else(|| t.trim().parse::<usize>().ok().filter(|&i| i < x.num_rays()))
                    .ok_or_else(|| Error::InvalidFlag(format!("unknown ray {t:?}")))
            })
            .collect::<Result<Vec<usize>, Error>>()?,
    };
    Ok(TFlag::new(x, f.cone, order)?)
}

fn flag_doc(x: &ToricVariety, flag: &TFlag) -> FlagDoc {
    FlagDoc {
        cone: flag.cone(),
        order: flag.order().iter().map(|&r| x.ray_labels()[r].clone()).collect(),
        transform: flag_transform(x, flag),
    }
}

fn execute(cli: &Cli) -> Result<(i32, String), CliError> {
    let format = cli.format;
    match &cli.command {
        Command::Check { input } => {
            json_only(format)?;
            let report = validate_fan(&load(input)?.fan()?);
            let ok = report.is_fan && report.is_complete && report.is_smooth;
            let code = if ok { 0 } else { EXIT_VALIDATION };
            Ok((code, to_json(&FanCheckDoc::from(report))))
        }
        Command::Polytope(a) => {
            let doc = load(&a.input)?;
            let x = doc.variety()?;
            let d = doc.divisor(&x, &a.divisor, a.class)?;
            let p = x.polytope_of(&d)?;
            let out = PolytopeOutput {
                divisor: DivisorDoc::new(&x, &d),
                polytope: PolytopeDoc::from(&p),
            };
            let caption = format!("P({})", x.format_divisor(&d));
            Ok((0, render_one(format, caption, &p, to_json(&out))?))
        }
        Command::Nef(a) => {
            json_only(format)?;
            let doc = load(&a.input)?;
            let x = doc.variety()?;
            let d = doc.divisor(&x, &a.divisor, a.class)?;
            let cartier_data = (0..x.num_cones())
                .map(|s| {
                    Ok(CartierDoc {
                        cone: s,
                        rays: x.cone(s)?.iter().map(|&r| x.ray_labels()[r].clone()).collect(),
                        m: qv(&x.cartier_data(&d, s)?),
                    })
                })
                .collect::<Result<_, Error>>()?;
            let out = NefOutput {
                divisor: DivisorDoc::new(&x, &d),
                nef: x.is_nef(&d)?,
                cartier_data,
            };
            Ok((0, to_json(&out)))
        }
        Command::Okounkov { divisor: a, flag } => {
            let doc = load(&a.input)?;
            let x = doc.variety()?;
            let d = doc.divisor(&x, &a.divisor, a.class)?;
            let flag = resolve_flag(&x, flag)?;
            let body = okounkov_body(&x, &d, &flag)?;
            let out = OkounkovOutput {
                divisor: DivisorDoc::new(&x, &d),
                flag: flag_doc(&x, &flag),
                body: PolytopeDoc::from(&body),
            };
            let caption = format!("Delta({})", x.format_divisor(&d));
            Ok((0, render_one(format, caption, &body, to_json(&out))?))
        }
        Command::Basis {
            input,
            cone,
            all_flags: _,
            sequential,
        } => {
            if format == Format::Off {
                return Err(CliError::format("off output holds a single polytope".into()));
            }
            let x = load(input)?.variety()?;
            let out = match cone {
                Some(sigma) => {
                    let elements = tmb_run(&x, *sigma)?;
                    BasisOutput {
                        mode: "cone",
                        cone: Some(*sigma),
                        elements: elements.iter().map(|e| ElementDoc::new(&x, e)).collect(),
                        rejected: None,
                        movable_rays: None,
                    }
                }
                None => {
                    let exec = if *sequential { Execution::Sequential } else { Execution::default() };
                    let report = basis_all_flags(&x, exec)?;
                    BasisOutput {
                        mode: "all-flags",
                        cone: None,
                        elements: report.elements.iter().map(|e| ElementDoc::new(&x, e)).collect(),
                        rejected: Some(report.rejected.iter().map(|e| ElementDoc::new(&x, e)).collect()),
                        movable_rays: Some(
                            report
                                .movable_rays
                                .iter()
                                .map(|r| x.format_class(&DivisorClass::from_ints(r)))
                                .collect(),
                        ),
                    }
                }
            };
            if format == Format::Svg {
                let elements = match cone {
                    Some(sigma) => tmb_run(&x, *sigma)?,
                    None => basis_all_flags(&x, Execution::default())?.elements,
                };
                let panels: Vec<(String, &Polyhedron)> = elements
                    .iter()
                    .map(|e| (x.format_class(&e.class), &e.polytope))
                    .collect();
                return Ok((0, svg::render(&panels).map_err(CliError::format)?));
            }
            Ok((0, to_json(&out)))
        }
        Command::Decompose { divisor: a, flag } => {
            if format == Format::Off {
                return Err(CliError::format("off output holds a single polytope".into()));
            }
            let doc = load(&a.input)?;
            let x = doc.variety()?;
            let d = doc.divisor(&x, &a.divisor, a.class)?;
            let flag = resolve_flag(&x, flag)?;
            let basis = basis_all_flags(&x, Execution::default())?.elements;
            let r = decompose(&x, &d, &flag, &basis)?;
            let name = |i: usize| x.format_class(&basis[i].class);
            if format == Format::Svg {
                let mut panels = vec![(format!("Delta({})", x.format_divisor(&d)), &r.okounkov_body)];
                for (i, body) in &r.summands {
                    panels.push((format!("{} x Delta({})", q(&r.coefficients[*i]), name(*i)), body));
                }
                return Ok((0, svg::render(&panels).map_err(CliError::format)?));
            }
            let out = DecomposeOutput {
                divisor: DivisorDoc::new(&x, &d),
                fixed: DivisorDoc::new(&x, &r.fixed),
                movable: DivisorDoc::new(&x, &r.movable),
                coefficients: r
                    .coefficients
                    .iter()
                    .enumerate()
                    .map(|(i, a)| CoefficientDoc {
                        class: name(i),
                        coefficient: q(a),
                    })
                    .collect(),
                translation: qv(&r.translation),
                on_wall: r.on_wall,
                chamber: r.chamber.iter().map(|&i| name(i)).collect(),
                flag: flag_doc(&x, &r.flag),
                okounkov_body: PolytopeDoc::from(&r.okounkov_body),
                okounkov_summands: r
                    .summands
                    .iter()
                    .map(|(i, body)| SummandDoc {
                        class: name(*i),
                        coefficient: q(&r.coefficients[*i]),
                        body: PolytopeDoc::from(body),
                    })
                    .collect(),
                okounkov_translation: qv(&r.okounkov_translation),
            };
            Ok((0, to_json(&out)))
        }
        Command::Classgroup { input } => {
            json_only(format)?;
            let x = load(input)?.variety()?;
            let basis = x.class_basis();
            let fmt = |g: &Vec<i64>| x.format_class(&DivisorClass::from_ints(g));
            let out = ClassGroupOutput {
                rank: x.class_rank(),
                labels: basis.labels().to_vec(),
                rays: basis
                    .ray_classes()
                    .iter()
                    .zip(x.ray_labels())
                    .map(|(c, l)| RayClassDoc {
                        ray: l.clone(),
                        class: fmt(c),
                        coords: c.clone(),
                    })
                    .collect(),
                nef_cone: x.nef_cone_generators()?.iter().map(fmt).collect(),
                movable_cone: x.movable_cone_generators()?.iter().map(fmt).collect(),
            };
            Ok((0, to_json(&out)))
        }
    }
}
