use std::fmt;
use std::sync::Arc;

use crate::error::{FieldError, Result};

/// The constant fields. The two models use rational arithmetic: the real
/// model keeps signs meaningful, the closed model treats every nonzero
/// element as a square.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BaseField {
    Rationals,
    Prime(u64),
    RealModel,
    ComplexModel,
}

impl BaseField {
    pub fn characteristic(self) -> u64 {
        match self {
            BaseField::Prime(p) => p,
            _ => 0,
        }
    }

    pub fn parse(s: &str) -> Result<BaseField> {
        let bad = || FieldError::InvalidField(s.to_string());
        match s.trim() {
            "Q" => Ok(BaseField::Rationals),
            "R" => Ok(BaseField::RealModel),
            "C" => Ok(BaseField::ComplexModel),
            t => {
                let p: u64 = t.strip_prefix('F').ok_or_else(bad)?.parse().map_err(|_| bad())?;
                BaseField::prime(p)
            }
        }
    }

    pub fn prime(p: u64) -> Result<BaseField> {
        if p < 3 || p % 2 == 0 || (3..).step_by(2).take_while(|d| d * d <= p).any(|d| p % d == 0) {
            return Err(FieldError::InvalidField(format!("F{p}: need an odd prime")));
        }
        Ok(BaseField::Prime(p))
    }
}

impl fmt::Display for BaseField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseField::Rationals => write!(f, "Q"),
            BaseField::Prime(p) => write!(f, "F{p}"),
            BaseField::RealModel => write!(f, "R"),
            BaseField::ComplexModel => write!(f, "C"),
        }
    }
}

/// A base field or a rational function field over one.
///
/// `residue_of` marks the residue field of a non-coordinate divisor: its
/// elements are represented by units of the ambient field.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Field {
    pub base: BaseField,
    pub vars: Vec<String>,
    pub residue_of: Option<String>,
}

pub type FieldRef = Arc<Field>;

impl Field {
    pub fn new(base: BaseField, vars: &[&str]) -> Result<FieldRef> {
        let vars: Vec<String> = vars.iter().map(|v| v.to_string()).collect();
        for (i, v) in vars.iter().enumerate() {
            let ok = v.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !ok || vars[..i].contains(v) {
                return Err(FieldError::InvalidField(format!("bad variable list {vars:?}")));
            }
        }
        Ok(Arc::new(Field { base, vars, residue_of: None }))
    }

    pub fn base_only(base: BaseField) -> FieldRef {
        Arc::new(Field { base, vars: Vec::new(), residue_of: None })
    }

    /// Parses `Q`, `F5`, `R`, `C`, `Q(x,t)`, `F7(t)`.
    pub fn parse(s: &str) -> Result<FieldRef> {
        let s = s.trim();
        match s.find('(') {
            None => Ok(Field::base_only(BaseField::parse(s)?)),
            Some(i) => {
                let inner = s[i + 1..]
                    .strip_suffix(')')
                    .ok_or_else(|| FieldError::InvalidField(s.to_string()))?;
                let vars: Vec<&str> = inner.split(',').map(str::trim).collect();
                Field::new(BaseField::parse(&s[..i])?, &vars)
            }
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn is_function_field(&self) -> bool {
        !self.vars.is_empty() || self.residue_of.is_some()
    }

    /// The field with one variable removed.
    pub fn without(&self, name: &str) -> Result<FieldRef> {
        self.var_index(name).ok_or_else(|| FieldError::UnknownVariable(name.into()))?;
        Ok(Arc::new(Field {
            base: self.base,
            vars: self.vars.iter().filter(|v| *v != name).cloned().collect(),
            residue_of: self.residue_of.clone(),
        }))
    }

    /// The symbolic residue field along the divisor with the given label.
    pub fn residue_along(&self, label: &str) -> FieldRef {
        Arc::new(Field { base: self.base, vars: self.vars.clone(), residue_of: Some(label.to_string()) })
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.base)?;
        if !self.vars.is_empty() {
            write!(f, "({})", self.vars.join(","))?;
        }
        if let Some(l) = &self.residue_of {
            write!(f, "/({l})")?;
        }
        Ok(())
    }
}
