use serde::{Deserialize, Serialize};

/// Recorded in every report: the rings are computed as strictly commutative
/// algebras, without graded-Picard signs.
pub const COMMUTATIVITY: &str = "products are treated as strictly commutative (no graded-Picard signs)";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Undecided,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Undecided => "UNDECIDED",
        }
    }

    /// Fail dominates undecided, which dominates pass.
    pub fn combine(self, other: Status) -> Status {
        match (self, other) {
            (Status::Fail, _) | (_, Status::Fail) => Status::Fail,
            (Status::Undecided, _) | (_, Status::Undecided) => Status::Undecided,
            _ => Status::Pass,
        }
    }

    /// 0 pass, 1 fail, 2 undecided only.
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Undecided => 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub anchor: String,
    pub tag: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Environment {
    pub field: String,
    pub n: Option<u32>,
    pub max_degree: u32,
    pub eps_commute: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub assumptions: Vec<String>,
    pub environment: Environment,
    pub checks: Vec<Check>,
    pub status: Status,
}

impl VerificationReport {
    pub fn render(&self) -> String {
        let e = &self.environment;
        let mut out = format!(
            "suite {}  field {}  n {}  max-degree {}  eps-commute {}\n",
            self.suite,
            e.field,
            e.n.map_or("default".to_string(), |n| n.to_string()),
            e.max_degree,
            if e.eps_commute { "on" } else { "off" }
        );
        for a in &self.assumptions {
            out += &format!("assumption: {a}\n");
        }
        for c in &self.checks {
            out += &format!("{:<9} {}  [{}]  {}\n", c.status.label(), c.id, c.anchor, c.detail);
        }
        out += &format!("result: {}\n", self.status.label());
        out
    }
}
