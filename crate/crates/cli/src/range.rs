use std::fmt;
use std::str::FromStr;

/// Inclusive index range written `a..b`, `a..=b` or just `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IndexRange {
    pub start: u32,
    pub end: u32,
}

impl IndexRange {
    pub fn iter(self, step: u32) -> impl Iterator<Item = u32> {
        (self.start..=self.end).step_by(step.max(1) as usize)
    }
}

impl FromStr for IndexRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| t.trim().parse::<u32>().map_err(|e| format!("bad bound {t:?} in {s:?}: {e}"));
        let (start, end) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
            None => {
                let v = num(s)?;
                (v, v)
            }
        };
        if start > end {
            return Err(format!("empty range {s:?}"));
        }
        Ok(IndexRange { start, end })
    }
}

impl fmt::Display for IndexRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.start, self.end)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses() {
        assert_eq!("6..12".parse(), Ok(IndexRange { start: 6, end: 12 }));
        assert_eq!("6..=12".parse(), Ok(IndexRange { start: 6, end: 12 }));
        assert_eq!("30".parse(), Ok(IndexRange { start: 30, end: 30 }));
        assert!("12..6".parse::<IndexRange>().is_err());
        assert!("a..6".parse::<IndexRange>().is_err());
        let r: IndexRange = "100..300".parse().unwrap();
        assert_eq!(r.iter(100).collect::<Vec<_>>(), vec![100, 200, 300]);
    }
}
