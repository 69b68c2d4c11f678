use serde::{Deserialize, Serialize};

/// Outcome of a single verification.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckReport {
    pub fn pass(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Self { name: name.into(), passed: true, detail: detail.into() }
    }

    pub fn fail(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Self { name: name.into(), passed: false, detail: detail.into() }
    }

    pub fn from_bool(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Self { name: name.into(), passed, detail: detail.into() }
    }

    /// Folds several reports into one that passes only if all of them do.
    /// The detail keeps the first failure, or a count on success.
    pub fn all(name: impl Into<String>, reports: impl IntoIterator<Item = CheckReport>) -> Self {
        let mut count = 0usize;
        for r in reports {
            count += 1;
            if !r.passed {
                return Self::fail(name, format!("{}: {}", r.name, r.detail));
            }
        }
        Self::pass(name, format!("{count} sub-checks passed"))
    }
}

/// Describes the first coefficient at which two polynomials differ, or
/// `None` when they are equal.
pub fn first_difference<C: crate::exact::Coeff>(
    a: &crate::exact::MPoly<C>,
    b: &crate::exact::MPoly<C>,
) -> Option<String> {
    if a == b {
        return None;
    }
    let d = a - b;
    let (e, _) = d.terms().next_back()?;
    Some(format!("first differing monomial {:?}: lhs {} vs rhs {}", e, a.coeff(e), b.coeff(e)))
}
