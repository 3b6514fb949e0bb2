use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

pub const FIXTURES: &str = include_str!("../fixtures/tables.toml");

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Fixtures {
    pub check: Vec<Fixture>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Fixture {
    pub id: String,
    pub suite: String,
    pub tag: String,
    pub anchor: String,
    /// Values of n for entries mentioning Bmu({2n}).
    #[serde(default)]
    pub n: Option<Vec<u32>>,
    #[serde(flatten)]
    pub body: Body,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CellRule {
    pub degrees: String,
    #[serde(default)]
    pub twist: Option<String>,
    pub group: String,
    #[serde(default)]
    pub basis: Option<Vec<String>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EulerValue {
    pub m: i64,
    pub value: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ExtraCell {
    pub i: u32,
    pub twist: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Body {
    Coefficients { field: String, gw: String, w: String },
    Oracle { fields: Vec<String>, max_rank: usize },
    MwValue { field: String, expr: String, form: String },
    Residue {
        field: String,
        divisor: String,
        #[serde(default)]
        label: Option<String>,
        expr: String,
        value: String,
        twist: Vec<String>,
    },
    Boundary,
    Table { preset: String, cells: Vec<CellRule> },
    Relations { preset: String, zero: Vec<String>, nonzero: Vec<String> },
    Euler { preset: String, even: String, odd: String, range: u32, values: Vec<EulerValue> },
    EulerProduct { preset: String, factors: Vec<i64>, value: String },
    Localization {
        source: String,
        target: String,
        multiplier: String,
        degrees: String,
        twists: Vec<String>,
        #[serde(default)]
        extra: Vec<ExtraCell>,
    },
    Alternative { preset: String, replace: String, with: String },
    RankCollapse { preset: String, chow: String, cells: Vec<CellRule> },
    Itable { preset: String, weights: [i32; 2], cells: Vec<CellRule> },
    Pullback { source: String, target: String, rename: BTreeMap<String, String> },
}

pub fn parse_fixtures(text: &str) -> Result<Fixtures> {
    toml::from_str(text).map_err(|e| CliError::Fixture(e.to_string()))
}

pub fn builtin() -> Fixtures {
    parse_fixtures(FIXTURES).expect("built-in fixtures parse")
}
