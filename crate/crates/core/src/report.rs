//! Structured outcomes of identity checks.

use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    Pass,
    Fail,
}

/// One identity checked at one parameter point.
///
/// Renders as a single machine-parseable line:
/// `PASS <identity> m=3 k=1` or `FAIL <identity> m=3: <detail>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub identity: String,
    pub params: Vec<(&'static str, i64)>,
    pub status: Status,
    pub detail: String,
}

impl VerifyReport {
    pub fn pass(identity: &str, params: &[(&'static str, i64)]) -> Self {
        VerifyReport {
            identity: identity.to_string(),
            params: params.to_vec(),
            status: Status::Pass,
            detail: String::new(),
        }
    }

    pub fn fail(identity: &str, params: &[(&'static str, i64)], detail: impl Into<String>) -> Self {
        VerifyReport {
            identity: identity.to_string(),
            params: params.to_vec(),
            status: Status::Fail,
            detail: detail.into().replace('\n', " "),
        }
    }

    /// `Pass` when `mismatch` is `None`, otherwise `Fail` carrying it as detail.
    pub fn from_mismatch(
        identity: &str,
        params: &[(&'static str, i64)],
        mismatch: Option<String>,
    ) -> Self {
        match mismatch {
            None => Self::pass(identity, params),
            Some(d) => Self::fail(identity, params, d),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn param(&self, name: &str) -> Option<i64> {
        self.params
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, v)| *v)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        };
        write!(f, "{tag} {}", self.identity)?;
        for (name, value) in &self.params {
            write!(f, " {name}={value}")?;
        }
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}
