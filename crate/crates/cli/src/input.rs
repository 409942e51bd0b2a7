//! Input documents: a fan, optional labels and class basis, named divisors.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use toric_core::fans::Fan;
use toric_core::rational::{format_rat, parse_rat};
use toric_core::{ClassBasis, DivisorClass, Error, Rat, ToricDivisor, ToricVariety};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassBasisDoc {
    pub labels: Vec<String>,
    /// Class of each ray divisor, in ray order.
    pub ray_classes: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub rays: Vec<Vec<i64>>,
    pub max_cones: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ray_labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class_basis: Option<ClassBasisDoc>,
    /// Named divisors as ray coefficients, each a rational `"p/q"` string.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub divisors: BTreeMap<String, Vec<String>>,
}

impl InputDocument {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::input(format!("invalid input document: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize") + "\n"
    }

    /// Document describing `x`, with its labels and class basis.
    pub fn from_variety(x: &ToricVariety, name: Option<&str>) -> Self {
        InputDocument {
            name: name.map(str::to_string),
            rays: x.rays().to_vec(),
            max_cones: x.fan().max_cones().to_vec(),
            ray_labels: Some(x.ray_labels().to_vec()),
            class_basis: Some(ClassBasisDoc {
                labels: x.class_basis().labels().to_vec(),
                ray_classes: x.class_basis().ray_classes().to_vec(),
            }),
            divisors: BTreeMap::new(),
        }
    }

    pub fn fan(&self) -> Result<Fan, CliError> {
        let dim = self
            .rays
            .first()
            .map(Vec::len)
            .ok_or_else(|| CliError::input("the fan has no rays".into()))?;
        Ok(Fan::new(dim, self.rays.clone(), self.max_cones.clone())?)
    }

    pub fn variety(&self) -> Result<ToricVariety, CliError> {
        let fan = self.fan()?;
        let mut x = match &self.ray_labels {
            Some(labels) => ToricVariety::with_labels(fan, labels.clone())?,
            None => ToricVariety::new(fan)?,
        };
        if let Some(b) = &self.class_basis {
            x = x.with_class_basis(ClassBasis::new(b.labels.clone(), b.ray_classes.clone()))?;
        }
        for (name, coeffs) in &self.divisors {
            if coeffs.len() != x.num_rays() {
                return Err(Error::InvalidDivisor(format!(
                    "divisor {name} has {} coefficients for {} rays",
                    coeffs.len(),
                    x.num_rays()
                ))
                .into());
            }
            for c in coeffs {
                parse_rat(c)?;
            }
        }
        Ok(x)
    }

    /// Resolves a divisor argument: a named divisor of the document, a
    /// comma-separated coefficient list, or an expression in the ray labels
    /// such as `3D1+4D2-E1`. With `as_class` the list or expression is read
    /// in the class basis and lifted to a representative.
    pub fn divisor(&self, x: &ToricVariety, arg: &str, as_class: bool) -> Result<ToricDivisor, CliError> {
        if !as_class {
            if let Some(coeffs) = self.divisors.get(arg) {
                return Ok(ToricDivisor::new(parse_list(&coeffs.join(","))?));
            }
        }
        let list = arg.contains(',') || parse_rat(arg).is_ok();
        if as_class {
            let c = if list {
                DivisorClass::new(parse_list(arg)?)
            } else {
                x.parse_class(arg)?
            };
            if c.coords().len() != x.class_rank() {
                return Err(Error::InvalidDivisor(format!(
                    "class has {} coordinates, the class group has rank {}",
                    c.coords().len(),
                    x.class_rank()
                ))
                .into());
            }
            return Ok(x.lift_class(&c)?);
        }
        if list {
            let coeffs = parse_list(arg)?;
            if coeffs.len() != x.num_rays() {
                return Err(Error::InvalidDivisor(format!(
                    "{} coefficients for {} rays",
                    coeffs.len(),
                    x.num_rays()
                ))
                .into());
            }
            return Ok(ToricDivisor::new(coeffs));
        }
        Ok(x.parse_divisor(arg)?)
    }
}

fn parse_list(s: &str) -> Result<Vec<Rat>, CliError> {
    Ok(s.split(',').map(parse_rat).collect::<Result<_, _>>()?)
}

/// Coefficient strings for storing a divisor in a document.
pub fn divisor_strings(d: &ToricDivisor) -> Vec<String> {
    d.coeffs().iter().map(format_rat).collect()
}
