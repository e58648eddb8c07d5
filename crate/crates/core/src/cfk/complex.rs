use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use super::CfkError;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub name: String,
    pub alexander: i32,
    pub maslov: i32,
}

impl Generator {
    pub fn new(name: impl Into<String>, alexander: i32, maslov: i32) -> Self {
        Self {
            name: name.into(),
            alexander,
            maslov,
        }
    }
}

/// Differential component `from -> U^u_power * to`, by generator index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arrow {
    pub from: usize,
    pub to: usize,
    pub u_power: u32,
}

/// Finitely generated model of the full knot Floer complex.
///
/// Each generator `x` sits at filtration level `(0, A(x))`; an arrow
/// `x -> U^n y` lands at `(-n, A(y) - n)`. The optional involution is the
/// symmetry exchanging the two filtrations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotComplex {
    name: String,
    generators: Vec<Generator>,
    arrows: Vec<Arrow>,
    involution: Option<Vec<usize>>,
}

/// A single violated condition found by [`KnotComplex::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Diagnostic {
    DuplicateArrow {
        from: String,
        to: String,
        u_power: u32,
    },
    FiltrationViolation {
        from: String,
        to: String,
        u_power: u32,
    },
    MaslovViolation {
        from: String,
        to: String,
        u_power: u32,
        expected: i32,
        found: i32,
    },
    BoundarySquareNonzero {
        from: String,
        to: String,
        u_power: u32,
    },
    InvolutionNotInvolutive {
        generator: String,
    },
    InvolutionAlexander {
        generator: String,
    },
    InvolutionArrowMissing {
        from: String,
        to: String,
        u_power: u32,
    },
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagnostic::DuplicateArrow { from, to, u_power } => {
                write!(f, "arrow {from} -> U^{u_power} {to} listed twice")
            }
            Diagnostic::FiltrationViolation { from, to, u_power } => write!(
                f,
                "arrow {from} -> U^{u_power} {to} raises the Alexander filtration"
            ),
            Diagnostic::MaslovViolation {
                from,
                to,
                u_power,
                expected,
                found,
            } => write!(
                f,
                "arrow {from} -> U^{u_power} {to} has Maslov grading {found} at its target, expected {expected}"
            ),
            Diagnostic::BoundarySquareNonzero { from, to, u_power } => write!(
                f,
                "boundary squared is nonzero: {from} reaches U^{u_power} {to} an odd number of times"
            ),
            Diagnostic::InvolutionNotInvolutive { generator } => {
                write!(f, "involution does not square to the identity at {generator}")
            }
            Diagnostic::InvolutionAlexander { generator } => write!(
                f,
                "involution does not negate the Alexander grading of {generator}"
            ),
            Diagnostic::InvolutionArrowMissing { from, to, u_power } => write!(
                f,
                "involution image of arrow {from} -> U^{u_power} {to} is not an arrow"
            ),
        }
    }
}

impl KnotComplex {
    /// Assembles a complex from labelled data. Labels must resolve and be
    /// unique; filtration and differential conditions are checked separately
    /// by [`validate`](Self::validate).
    pub fn from_labels(
        name: impl Into<String>,
        generators: Vec<Generator>,
        arrows: &[(&str, &str, u32)],
        involution: Option<&[(&str, &str)]>,
    ) -> Result<Self, CfkError> {
        let index = label_index(&generators)?;
        let lookup = |l: &str| {
            index
                .get(l)
                .copied()
                .ok_or_else(|| CfkError::UnknownGenerator(l.to_string()))
        };
        let arrows = arrows
            .iter()
            .map(|&(from, to, u_power)| {
                Ok(Arrow {
                    from: lookup(from)?,
                    to: lookup(to)?,
                    u_power,
                })
            })
            .collect::<Result<Vec<_>, CfkError>>()?;
        let involution = involution
            .map(|pairs| {
                let mut perm = vec![None; generators.len()];
                for &(a, b) in pairs {
                    let (ia, ib) = (lookup(a)?, lookup(b)?);
                    if perm[ia].replace(ib).is_some() {
                        return Err(CfkError::BadInvolution(format!("{a} is assigned twice")));
                    }
                }
                perm.into_iter()
                    .enumerate()
                    .map(|(i, p)| {
                        p.ok_or_else(|| {
                            CfkError::BadInvolution(format!(
                                "no image given for {}",
                                generators[i].name
                            ))
                        })
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .transpose()?;
        Self::from_indices(name, generators, arrows, involution)
    }

    pub fn from_indices(
        name: impl Into<String>,
        generators: Vec<Generator>,
        arrows: Vec<Arrow>,
        involution: Option<Vec<usize>>,
    ) -> Result<Self, CfkError> {
        label_index(&generators)?;
        let n = generators.len();
        if let Some(a) = arrows.iter().find(|a| a.from >= n || a.to >= n) {
            return Err(CfkError::UnknownGenerator(format!(
                "index {}",
                a.from.max(a.to)
            )));
        }
        if let Some(perm) = &involution {
            if perm.len() != n || perm.iter().any(|&i| i >= n) {
                return Err(CfkError::BadInvolution(
                    "involution is not a map on the generators".into(),
                ));
            }
        }
        Ok(Self {
            name: name.into(),
            generators,
            arrows,
            involution,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn involution(&self) -> Option<&[usize]> {
        self.involution.as_deref()
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn alexander(&self, i: usize) -> i32 {
        self.generators[i].alexander
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == label)
    }

    /// Largest absolute Alexander grading.
    pub fn width(&self) -> u32 {
        self.generators
            .iter()
            .map(|g| g.alexander.unsigned_abs())
            .max()
            .unwrap_or(0)
    }

    /// Checks every structural condition and reports each violation.
    pub fn validate(&self) -> Vec<Diagnostic> {
        let mut out = Vec::new();
        let label = |i: usize| self.generators[i].name.clone();

        let mut seen = BTreeSet::new();
        for a in &self.arrows {
            if !seen.insert(*a) {
                out.push(Diagnostic::DuplicateArrow {
                    from: label(a.from),
                    to: label(a.to),
                    u_power: a.u_power,
                });
            }
            let (x, y) = (&self.generators[a.from], &self.generators[a.to]);
            if i64::from(a.u_power) < i64::from(y.alexander) - i64::from(x.alexander) {
                out.push(Diagnostic::FiltrationViolation {
                    from: label(a.from),
                    to: label(a.to),
                    u_power: a.u_power,
                });
            }
            let expected = x.maslov - 1;
            let found = y.maslov - 2 * a.u_power as i32;
            if found != expected {
                out.push(Diagnostic::MaslovViolation {
                    from: label(a.from),
                    to: label(a.to),
                    u_power: a.u_power,
                    expected,
                    found,
                });
            }
        }

        for (from, to, u_power) in self.square_violations() {
            out.push(Diagnostic::BoundarySquareNonzero {
                from: label(from),
                to: label(to),
                u_power,
            });
        }

        if let Some(perm) = &self.involution {
            for (i, &j) in perm.iter().enumerate() {
                if perm[j] != i {
                    out.push(Diagnostic::InvolutionNotInvolutive {
                        generator: label(i),
                    });
                }
                if self.generators[j].alexander != -self.generators[i].alexander {
                    out.push(Diagnostic::InvolutionAlexander {
                        generator: label(i),
                    });
                }
            }
            for a in &self.arrows {
                if let Some(image) = self.flip_arrow(a) {
                    if !seen.contains(&image) {
                        out.push(Diagnostic::InvolutionArrowMissing {
                            from: label(a.from),
                            to: label(a.to),
                            u_power: a.u_power,
                        });
                    }
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    pub(crate) fn ensure_valid(&self) -> Result<(), CfkError> {
        let diagnostics = self.validate();
        if diagnostics.is_empty() {
            Ok(())
        } else {
            Err(CfkError::InvalidComplex(diagnostics))
        }
    }

    /// Image of an arrow under the filtration swap: `(ιx, ιy, n + A(x) - A(y))`.
    fn flip_arrow(&self, a: &Arrow) -> Option<Arrow> {
        let perm = self.involution.as_ref()?;
        let shifted = i64::from(a.u_power) + i64::from(self.alexander(a.from))
            - i64::from(self.alexander(a.to));
        Some(Arrow {
            from: perm[a.from],
            to: perm[a.to],
            u_power: u32::try_from(shifted).ok()?,
        })
    }

    fn square_violations(&self) -> Vec<(usize, usize, u32)> {
        let mut outgoing: Vec<Vec<&Arrow>> = vec![Vec::new(); self.len()];
        for a in &self.arrows {
            outgoing[a.from].push(a);
        }
        let mut violations = Vec::new();
        for x in 0..self.len() {
            let mut counts: BTreeMap<(usize, u32), u32> = BTreeMap::new();
            for first in &outgoing[x] {
                for second in &outgoing[first.to] {
                    *counts
                        .entry((second.to, first.u_power + second.u_power))
                        .or_default() += 1;
                }
            }
            violations.extend(
                counts
                    .into_iter()
                    .filter(|(_, c)| c % 2 == 1)
                    .map(|((z, n), _)| (x, z, n)),
            );
        }
        violations
    }

    /// Same complex with every generator label prefixed.
    pub fn prefixed(&self, prefix: &str) -> Self {
        let mut c = self.clone();
        for g in &mut c.generators {
            g.name = format!("{prefix}{}", g.name);
        }
        c
    }
}

fn label_index(generators: &[Generator]) -> Result<HashMap<&str, usize>, CfkError> {
    let mut index = HashMap::with_capacity(generators.len());
    for (i, g) in generators.iter().enumerate() {
        if index.insert(g.name.as_str(), i).is_some() {
            return Err(CfkError::DuplicateGenerator(g.name.clone()));
        }
    }
    Ok(index)
}
