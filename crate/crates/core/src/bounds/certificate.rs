//! Machine-checkable records of a single inequality.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = "=")]
    Eq,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Le => "<=",
            Relation::Ge => ">=",
            Relation::Eq => "=",
        })
    }
}

/// `lhs relation rhs`, checked within `params["tol"]`.
///
/// `margin` is the signed slack in the direction of the relation
/// (`rhs − lhs` for `≤`, `lhs − rhs` for `≥`, `−|lhs − rhs|` for `=`), so a
/// certificate passes exactly when `margin ≥ −tol` (or `margin > 0` for
/// strict certificates).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundCertificate {
    pub name: String,
    pub params: BTreeMap<String, f64>,
    pub lhs: f64,
    pub rhs: f64,
    pub relation: Relation,
    pub margin: f64,
    pub pass: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub flags: Vec<String>,
}

impl BoundCertificate {
    pub fn new(name: impl Into<String>, lhs: f64, rhs: f64, relation: Relation, tol: f64) -> Self {
        let margin = match relation {
            Relation::Le => rhs - lhs,
            Relation::Ge => lhs - rhs,
            Relation::Eq => -(lhs - rhs).abs(),
        };
        let mut params = BTreeMap::new();
        params.insert("tol".to_string(), tol);
        Self {
            name: name.into(),
            params,
            lhs,
            rhs,
            relation,
            margin,
            pass: margin.is_finite() && margin >= -tol,
            flags: Vec::new(),
        }
    }

    /// Requires `margin > 0`; used where the argument needs a strict
    /// inequality.
    pub fn strict(name: impl Into<String>, lhs: f64, rhs: f64, relation: Relation) -> Self {
        let mut c = Self::new(name, lhs, rhs, relation, 0.0);
        c.pass = c.margin > 0.0;
        c.flags.push("strict".to_string());
        c
    }

    pub fn with_param(mut self, key: &str, value: f64) -> Self {
        self.params.insert(key.to_string(), value);
        self
    }

    pub fn with_flag(mut self, flag: impl Into<String>) -> Self {
        self.flags.push(flag.into());
        self
    }

    /// Marks certificates whose margin lies inside `±band`.
    pub fn flag_boundary(self, band: f64) -> Self {
        if self.margin.abs() < band {
            self.with_flag("boundary")
        } else {
            self
        }
    }

    /// Re-evaluates `pass` against a new tolerance (strict certificates
    /// keep requiring a positive margin).
    pub fn with_tol(mut self, tol: f64) -> Self {
        self.params.insert("tol".to_string(), tol);
        if !self.flags.iter().any(|f| f == "strict") {
            self.pass = self.margin.is_finite() && self.margin >= -tol;
        }
        self
    }

    pub fn tol(&self) -> f64 {
        self.params.get("tol").copied().unwrap_or(0.0)
    }

    /// `k=v;k=v` rendering of the parameters.
    pub fn params_string(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(";")
    }
}

impl fmt::Display for BoundCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} [{}] {:.9} {} {:.9} (margin {:+.3e}) {}",
            if self.pass { "PASS" } else { "FAIL" },
            self.name,
            self.lhs,
            self.relation,
            self.rhs,
            self.margin,
            self.params_string()
        )?;
        if !self.flags.is_empty() {
            write!(f, " flags={}", self.flags.join(","))?;
        }
        Ok(())
    }
}
