use thiserror::Error;

use crate::geometry::EdgeLabeling;

/// Failures surfaced by the enumeration library.
///
/// Arithmetic and integrity failures are never recovered from internally: a
/// count that cannot be produced exactly is reported rather than approximated.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TetraError {
    #[error("edge lengths must be positive, got {0:?}")]
    NonPositiveEdge([u32; 6]),

    #[error("64-bit count overflow while accumulating {context}")]
    Overflow { context: &'static str },

    #[error("integrity check failed: {0}")]
    Integrity(String),

    #[error("representative set exceeded its capacity of {limit} labelings")]
    CapacityExceeded { limit: usize },

    #[error("perimeter {n} exceeds the oracle ceiling of {ceiling}")]
    CeilingExceeded { n: u64, ceiling: u64 },

    #[error("validators disagree on {labeling}: {detail}")]
    ValidatorDisagreement {
        labeling: EdgeLabeling,
        detail: String,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = TetraError> = std::result::Result<T, E>;

/// Running 64-bit total that refuses to wrap.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tally(u64);

impl Tally {
    pub const ZERO: Tally = Tally(0);

    pub fn new(value: u64) -> Self {
        Tally(value)
    }

    pub fn get(self) -> u64 {
        self.0
    }

    pub fn add(self, value: u64, context: &'static str) -> Result<Tally> {
        self.0
            .checked_add(value)
            .map(Tally)
            .ok_or(TetraError::Overflow { context })
    }

    /// Checked sum of an iterator of partial counts.
    pub fn sum<I>(values: I, context: &'static str) -> Result<u64>
    where
        I: IntoIterator<Item = u64>,
    {
        values
            .into_iter()
            .try_fold(Tally::ZERO, |acc, v| acc.add(v, context))
            .map(Tally::get)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tally_refuses_to_wrap() {
        let near_max = Tally::new(u64::MAX - 1);
        assert_eq!(near_max.add(1, "test").unwrap().get(), u64::MAX);
        assert_eq!(
            near_max.add(5, "synthetic"),
            Err(TetraError::Overflow { context: "synthetic" })
        );
        assert!(Tally::sum([u64::MAX, 1], "sum").is_err());
        assert_eq!(Tally::sum([1, 2, 3], "sum"), Ok(6));
    }
}
