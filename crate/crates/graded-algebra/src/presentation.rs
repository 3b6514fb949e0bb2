use serde::{Deserialize, Serialize};

use crate::coeff::Coefficients;
use crate::error::{AlgebraError, Result};
use crate::expr::{parse_polynomial, Polynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Chow-Witt rings with GW(k) coefficients.
    #[default]
    Cw,
    /// I*-cohomology as a bigraded W(k)-algebra; each generator carries a
    /// weight j.
    I,
    /// Classical Chow rings with integer coefficients.
    Chow,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    pub name: String,
    pub codim: u32,
    /// Twist class in Pic/2: 0 for O, 1 for the generating line bundle.
    #[serde(default)]
    pub twist: u8,
    /// Weight in I*-cohomology.
    #[serde(default)]
    pub weight: Option<i32>,
    /// Image under the rank map to the Chow ring, for generators that do not
    /// survive as generators there.
    #[serde(default)]
    pub chow: Option<i64>,
}

/// File format of a presentation.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PresentationFile {
    pub name: String,
    #[serde(default)]
    pub mode: Mode,
    #[serde(default = "default_twist")]
    pub twist: String,
    pub generators: Vec<GeneratorSpec>,
    #[serde(default)]
    pub relations: Vec<String>,
    #[serde(default)]
    pub coefficients: Option<String>,
}

fn default_twist() -> String {
    "L".into()
}

#[derive(Clone, Debug)]
pub struct AlgebraPresentation {
    pub name: String,
    pub mode: Mode,
    /// Name of the nontrivial twist class.
    pub twist_name: String,
    pub generators: Vec<GeneratorSpec>,
    pub relations: Vec<Polynomial>,
    /// Default coefficients named in the file, if any.
    pub coefficients: Option<String>,
}

impl AlgebraPresentation {
    pub fn from_file(f: PresentationFile) -> Result<AlgebraPresentation> {
        let mut names: Vec<&str> = vec![];
        for g in &f.generators {
            if g.twist > 1 {
                return Err(AlgebraError::Presentation(format!("twist of {} must be 0 or 1", g.name)));
            }
            if ["h", "I"].contains(&g.name.as_str()) || names.contains(&g.name.as_str()) {
                return Err(AlgebraError::Presentation(format!("bad generator name {}", g.name)));
            }
            if f.mode == Mode::I && g.weight.is_none() {
                return Err(AlgebraError::Presentation(format!("generator {} needs a weight", g.name)));
            }
            names.push(&g.name);
        }
        let mut p = AlgebraPresentation {
            name: f.name,
            mode: f.mode,
            twist_name: f.twist,
            generators: f.generators,
            relations: vec![],
            coefficients: f.coefficients,
        };
        let names = p.names();
        for r in &f.relations {
            let poly = parse_polynomial(r, &names)?;
            p.bidegree(&poly)?;
            p.relations.push(poly);
        }
        Ok(p)
    }

    pub fn parse_toml(s: &str) -> Result<AlgebraPresentation> {
        let f: PresentationFile = toml::from_str(s).map_err(|e| AlgebraError::Presentation(e.to_string()))?;
        AlgebraPresentation::from_file(f)
    }

    pub fn to_file(&self) -> PresentationFile {
        let names = self.names();
        PresentationFile {
            name: self.name.clone(),
            mode: self.mode,
            twist: self.twist_name.clone(),
            generators: self.generators.clone(),
            relations: self.relations.iter().map(|r| r.display(&names).to_string()).collect(),
            coefficients: self.coefficients.clone(),
        }
    }

    pub fn names(&self) -> Vec<String> {
        self.generators.iter().map(|g| g.name.clone()).collect()
    }

    pub fn generator(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    pub fn parse(&self, s: &str) -> Result<Polynomial> {
        parse_polynomial(s, &self.names())
    }

    pub fn codim(&self, exps: &[u32]) -> u32 {
        exps.iter().zip(&self.generators).map(|(e, g)| e * g.codim).sum()
    }

    pub fn twist(&self, exps: &[u32]) -> u8 {
        (exps.iter().zip(&self.generators).map(|(e, g)| e * g.twist as u32).sum::<u32>() % 2) as u8
    }

    pub fn weight(&self, exps: &[u32]) -> i32 {
        exps.iter().zip(&self.generators).map(|(&e, g)| e as i32 * g.weight.unwrap_or(0)).sum()
    }

    pub fn twist_label(&self, t: u8) -> String {
        if t == 0 {
            "O".into()
        } else {
            self.twist_name.clone()
        }
    }

    /// Parses "O" or the twist name.
    pub fn parse_twist(&self, s: &str) -> Result<u8> {
        match s.trim() {
            "O" | "0" => Ok(0),
            "1" => Ok(1),
            t if t == self.twist_name => Ok(1),
            t => Err(AlgebraError::Presentation(format!("unknown twist {t}; use O or {}", self.twist_name))),
        }
    }

    /// The common (codim, twist) of the terms of a nonzero polynomial.
    pub fn bidegree(&self, p: &Polynomial) -> Result<Option<(u32, u8)>> {
        let mut out = None;
        for t in &p.terms {
            let d = (self.codim(&t.exps), self.twist(&t.exps));
            match out {
                Some(e) if e != d => {
                    return Err(AlgebraError::Inhomogeneous(p.display(&self.names()).to_string()));
                }
                _ => out = Some(d),
            }
        }
        Ok(out)
    }

    /// Coefficients to use when none are given explicitly.
    pub fn default_coefficients(&self) -> Result<Option<Coefficients>> {
        if self.mode == Mode::Chow {
            return Ok(Some(Coefficients::Integers));
        }
        self.coefficients.as_deref().map(Coefficients::parse).transpose()
    }
}
