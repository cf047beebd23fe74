//! Step budgets for the exponential searches (isomorphism, genus).

use serde::Serialize;

/// Counts work units and reports when the allowance is used up.
#[derive(Debug, Clone)]
pub struct Budget {
    limit: u64,
    spent: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, spent: 0 }
    }

    /// Charges `n` steps; false once the limit has been exceeded.
    #[inline]
    pub fn spend(&mut self, n: u64) -> bool {
        self.spent = self.spent.saturating_add(n);
        self.spent <= self.limit
    }

    pub fn exhausted(&self) -> bool {
        self.spent > self.limit
    }

    pub fn spent(&self) -> u64 {
        self.spent
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }
}

/// Outcome of an isomorphism search. `Indeterminate` means the budget ran out
/// before the search could decide.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum IsoResult<M> {
    Isomorphic(M),
    NotIsomorphic,
    Indeterminate,
}

impl<M> IsoResult<M> {
    /// `Some(answer)` when decided.
    pub fn decided(&self) -> Option<bool> {
        match self {
            IsoResult::Isomorphic(_) => Some(true),
            IsoResult::NotIsomorphic => Some(false),
            IsoResult::Indeterminate => None,
        }
    }

    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoResult::Isomorphic(_))
    }

    pub fn mapping(self) -> Option<M> {
        match self {
            IsoResult::Isomorphic(m) => Some(m),
            _ => None,
        }
    }
}
