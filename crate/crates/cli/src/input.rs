//! Input documents.
//!
//! Accepted shapes, all tagged by `kind`: `table`, `measure`, `associated`
//! and `fraction`. A report written by an earlier stage is also accepted;
//! its `artifact` field is read instead.

use serde::Deserialize;
use serde_json::Value;

use schur2d::fractions::ContinuedFraction;
use schur2d::moments::{AssociatedSequence, Atom, AtomicMeasure, Mode, MomentTable, SourceKind};
use schur2d::{parse_rational_function, BivarRational, Error, MainVar, Scalar};

#[derive(Debug, Clone)]
pub enum Input {
    Table(MomentTable),
    Measure(AtomicMeasure),
    Associated(AssociatedSequence),
    Fraction(ContinuedFraction<BivarRational>),
}

impl Input {
    pub fn kind(&self) -> &'static str {
        match self {
            Input::Table(_) => "table",
            Input::Measure(_) => "measure",
            Input::Associated(_) => "associated",
            Input::Fraction(_) => "fraction",
        }
    }

    /// The mode the document itself fixes, if any.
    pub fn mode(&self) -> Option<Mode> {
        match self {
            Input::Associated(a) => Some(a.mode()),
            Input::Fraction(f) => Some(f.mode),
            _ => None,
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Entry {
    Literal(String),
    Structured(BivarRational),
}

#[derive(Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum Raw {
    Table(MomentTable),
    Measure {
        atoms: Vec<Atom>,
    },
    Associated {
        mode: Mode,
        entries: Vec<Entry>,
    },
    Fraction {
        fraction: ContinuedFraction<BivarRational>,
    },
}

pub fn parse_input(text: &str, merge_duplicates: bool) -> Result<Input, Error> {
    let mut doc: Value =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("malformed JSON: {e}")))?;
    if let Some(artifact) = doc.get_mut("artifact") {
        doc = artifact.take();
    }
    let raw: Raw = serde_json::from_value(doc).map_err(|e| Error::Parse(e.to_string()))?;
    Ok(match raw {
        Raw::Table(t) => Input::Table(t),
        Raw::Measure { atoms } => Input::Measure(if merge_duplicates {
            AtomicMeasure::merge_duplicates(atoms)?
        } else {
            AtomicMeasure::new(atoms)?
        }),
        Raw::Associated { mode, entries } => {
            let var = mode.main_var();
            let entries = entries
                .into_iter()
                .map(|e| match e {
                    Entry::Literal(s) => parse_rational_function(&s, var),
                    Entry::Structured(r) => Ok(r),
                })
                .collect::<Result<Vec<_>, _>>()?;
            if entries.is_empty() {
                return Err(Error::InsufficientLength { needed: 1, got: 0 });
            }
            Input::Associated(AssociatedSequence::new(mode, entries, SourceKind::Table)?)
        }
        Raw::Fraction { fraction } => {
            if fraction.depth() == 0 {
                return Err(Error::InsufficientLength { needed: 1, got: 0 });
            }
            Input::Fraction(fraction)
        }
    })
}

/// `z0,zeta0` with each coordinate a constant literal.
pub fn parse_point(s: &str) -> Result<(Scalar, Scalar), Error> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(Error::Parse(format!("point must be `z0,zeta0`, got `{s}`")));
    }
    let coord = |p: &str| -> Result<Scalar, Error> {
        let v = parse_rational_function(p, MainVar::Z)?;
        if !v.is_constant() {
            return Err(Error::Parse(format!("point coordinate `{p}` is not a constant")));
        }
        v.eval(&Scalar::int(0), &Scalar::int(0))
    };
    Ok((coord(parts[0])?, coord(parts[1])?))
}
