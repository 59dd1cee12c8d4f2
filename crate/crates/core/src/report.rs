//! Outcome records shared by the identity checks.

use serde::Serialize;

/// Outcome of an identity between two computed objects.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub identity: String,
    pub pass: bool,
    pub checked: usize,
    pub witness: Option<String>,
}

impl IdentityReport {
    /// Passes exactly when there is no witness.
    pub fn new(identity: impl Into<String>, checked: usize, witness: Option<String>) -> Self {
        IdentityReport { identity: identity.into(), pass: witness.is_none(), checked, witness }
    }
}

/// First index where two sequences differ, rendered with both values.
pub fn first_mismatch<T: PartialEq>(a: &[T], b: &[T], show: impl Fn(&T) -> String) -> Option<String> {
    if a.len() != b.len() {
        return Some(format!("lengths {} and {}", a.len(), b.len()));
    }
    a.iter().zip(b).position(|(x, y)| x != y).map(|i| format!("index {i}: {} vs {}", show(&a[i]), show(&b[i])))
}
