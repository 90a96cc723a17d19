use std::fmt;

use serde::{Deserialize, Serialize};

use crate::boolfunc::FunctionSpec;
use crate::error::{Error, Result};
use crate::gf2m::{FieldCtx, FieldElement};

/// How a position set is cut out of the nonzero field elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Recipe {
    /// `{x != 0 : Tr(lambda f(x)) = nu}`.
    TraceOfF { function: FunctionSpec, lambda: FieldElement, nu: u8 },
    /// `{x != 0 : Tr(x) = 1}`.
    TraceSupport,
    /// The subgroup generated by `gamma^t`.
    Cyclotomic { t: u64 },
    /// Every nonzero element.
    Whole,
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Recipe::TraceOfF { function, lambda, nu } => {
                write!(f, "trace-of-f(f={}, lambda={}, nu={})", function.family, lambda.0, nu)
            }
            Recipe::TraceSupport => f.write_str("trace-support"),
            Recipe::Cyclotomic { t } => write!(f, "cyclotomic(t={t})"),
            Recipe::Whole => f.write_str("whole"),
        }
    }
}

/// Retained coordinates, ascending by encoding, without 0 or repeats.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositionSet {
    elements: Vec<FieldElement>,
    recipe: Recipe,
}

impl PositionSet {
    /// Wraps an explicit element list. Sorts it and rejects 0, repeats and
    /// the empty set.
    pub fn from_elements(mut elements: Vec<FieldElement>, recipe: Recipe) -> Result<Self> {
        elements.sort_unstable();
        if elements.is_empty() {
            return Err(Error::InvalidPositionSet("position set is empty".into()));
        }
        if elements[0].is_zero() {
            return Err(Error::InvalidPositionSet("0 is not a valid position".into()));
        }
        if elements.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidPositionSet("repeated position".into()));
        }
        Ok(PositionSet { elements, recipe })
    }

    pub fn elements(&self) -> &[FieldElement] {
        &self.elements
    }

    pub fn recipe(&self) -> &Recipe {
        &self.recipe
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

pub fn build_position_set(ctx: &FieldCtx, recipe: &Recipe) -> Result<PositionSet> {
    let elements: Vec<FieldElement> = match recipe {
        Recipe::TraceOfF { function, lambda, nu } => {
            if lambda.is_zero() || !ctx.contains(*lambda) {
                return Err(Error::InvalidPositionSet("lambda must be a nonzero field element".into()));
            }
            if *nu > 1 {
                return Err(Error::InvalidPositionSet(format!("nu must be 0 or 1, got {nu}")));
            }
            let values = function.value_table(ctx)?;
            ctx.nonzero()
                .filter(|x| ctx.trace(ctx.mul(*lambda, values[x.0 as usize])) == *nu as u32)
                .collect()
        }
        Recipe::TraceSupport => ctx.nonzero().filter(|&x| ctx.trace(x) == 1).collect(),
        Recipe::Cyclotomic { t } => {
            if *t == 0 || !ctx.order().is_multiple_of(*t) {
                return Err(Error::InvalidPositionSet(format!(
                    "t = {t} does not divide 2^{} - 1",
                    ctx.m()
                )));
            }
            (0..ctx.order() / t).map(|i| ctx.gamma_pow(i * t)).collect()
        }
        Recipe::Whole => ctx.nonzero().collect(),
    };
    PositionSet::from_elements(elements, recipe.clone())
}
