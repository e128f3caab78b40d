use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::pl::{Node, TrigKind, TropicalPL};
use crate::special;

/// Serializable description of a [`TropicalPL`] expression tree.
///
/// The schema is documented in `docs/SCHEMAS.md`; the `kind` tag selects the
/// node type.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FunctionSpec {
    /// `{"kind":"finite","points":[[x,y],...],"slope_left":s,"slope_right":s}`
    Finite {
        points: Vec<(f64, f64)>,
        slope_left: f64,
        slope_right: f64,
    },
    Constant {
        value: f64,
    },
    Linear {
        slope: f64,
        intercept: f64,
    },
    Max {
        args: Vec<FunctionSpec>,
    },
    Plus {
        args: Vec<FunctionSpec>,
    },
    Minus {
        lhs: Box<FunctionSpec>,
        rhs: Box<FunctionSpec>,
    },
    Negate {
        arg: Box<FunctionSpec>,
    },
    Scale {
        arg: Box<FunctionSpec>,
        alpha: f64,
    },
    Shift {
        arg: Box<FunctionSpec>,
        c: f64,
    },
    PositivePart {
        arg: Box<FunctionSpec>,
    },
    /// Periodic extension of cell anchors on `[0, period)`.
    Periodic {
        period: f64,
        points: Vec<(f64, f64)>,
    },
    /// Tropical exponential `e_α`.
    Exponential {
        alpha: f64,
    },
    /// Sawtooth block `π^(a,b)` (1-periodic, one root and one pole per period).
    Pi {
        a: f64,
        b: f64,
    },
    /// Cell solution of `y(x+1)+y(x-1) = 2cos(θ)y(x)`; `which` is 1 or 2.
    TrigSolution {
        theta: f64,
        which: u8,
    },
}

impl FunctionSpec {
    pub fn build(&self) -> Result<TropicalPL> {
        use FunctionSpec::*;
        Ok(match self {
            Finite {
                points,
                slope_left,
                slope_right,
            } => TropicalPL::from_points(points.clone(), *slope_left, *slope_right)?,
            Constant { value } => TropicalPL::constant(*value),
            Linear { slope, intercept } => TropicalPL::linear(*slope, *intercept),
            Max { args } => fold(args, |a, b| a.tropical_max(&b))?,
            Plus { args } => fold(args, |a, b| a.tropical_plus(&b))?,
            Minus { lhs, rhs } => lhs.build()?.tropical_minus(&rhs.build()?),
            Negate { arg } => arg.build()?.negate(),
            Scale { arg, alpha } => arg.build()?.tropical_scale(*alpha),
            Shift { arg, c } => arg.build()?.shift(*c),
            PositivePart { arg } => arg.build()?.positive_part(),
            Periodic { period, points } => TropicalPL::periodic(*period, points.clone())?,
            Exponential { alpha } => TropicalPL::exponential(*alpha)?,
            Pi { a, b } => special::make_pi(*a, *b)?,
            TrigSolution { theta, which } => {
                let kind = match which {
                    1 => TrigKind::Cos,
                    2 => TrigKind::Sin,
                    _ => {
                        return Err(crate::Error::InvalidSpec(format!(
                            "trig_solution `which` must be 1 or 2, got {which}"
                        )))
                    }
                };
                TropicalPL::trig_solution(*theta, kind)?
            }
        })
    }
}

fn fold(
    args: &[FunctionSpec],
    op: impl Fn(TropicalPL, TropicalPL) -> TropicalPL,
) -> Result<TropicalPL> {
    let mut iter = args.iter();
    let first = iter
        .next()
        .ok_or_else(|| crate::Error::InvalidSpec("combinator needs at least one arg".into()))?
        .build()?;
    iter.try_fold(first, |acc, s| Ok(op(acc, s.build()?)))
}

impl TropicalPL {
    /// Structural serialization of the expression tree.
    pub fn to_spec(&self) -> FunctionSpec {
        match &*self.node {
            Node::Finite(f) => FunctionSpec::Finite {
                points: f.xs.iter().copied().zip(f.ys.iter().copied()).collect(),
                slope_left: f.left_slope,
                slope_right: f.right_slope,
            },
            Node::Periodic(p) => FunctionSpec::Periodic {
                period: p.period,
                points: p.xs.iter().copied().zip(p.ys.iter().copied()).collect(),
            },
            Node::Exponential { alpha } => FunctionSpec::Exponential { alpha: *alpha },
            Node::Trig { theta, which } => FunctionSpec::TrigSolution {
                theta: *theta,
                which: match which {
                    TrigKind::Cos => 1,
                    TrigKind::Sin => 2,
                },
            },
            Node::Shift { inner, offset } => FunctionSpec::Shift {
                arg: Box::new(inner.to_spec()),
                c: *offset,
            },
            Node::Scale { inner, factor } => FunctionSpec::Scale {
                arg: Box::new(inner.to_spec()),
                alpha: *factor,
            },
            Node::Sum(f, g) => FunctionSpec::Plus {
                args: vec![f.to_spec(), g.to_spec()],
            },
            Node::Max(f, g) => FunctionSpec::Max {
                args: vec![f.to_spec(), g.to_spec()],
            },
        }
    }

    pub fn from_json(json: &str) -> Result<TropicalPL> {
        let spec: FunctionSpec =
            serde_json::from_str(json).map_err(|e| crate::Error::Parse(e.to_string()))?;
        spec.build()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_spec()).expect("function spec serializes")
    }
}
