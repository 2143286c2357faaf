use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A sequence of section lengths `(k_1, ..., k_t)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct PartSequence(Vec<usize>);

impl PartSequence {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::invalid("part sequence must be nonempty"));
        }
        if parts.contains(&0) {
            return Err(Error::invalid("parts must be positive"));
        }
        Ok(PartSequence(parts))
    }

    /// Builds a sequence from run-length pairs `(count, part)`, e.g. `[(1, 3), (1, 5), (2, 6)]`.
    pub fn from_runs(runs: &[(usize, usize)]) -> Result<Self> {
        let parts = runs
            .iter()
            .flat_map(|&(count, k)| std::iter::repeat(k).take(count))
            .collect();
        Self::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn max_part(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn runs(&self) -> Vec<(usize, usize)> {
        let mut runs: Vec<(usize, usize)> = Vec::new();
        for &k in &self.0 {
            match runs.last_mut() {
                Some((count, last)) if *last == k => *count += 1,
                _ => runs.push((1, k)),
            }
        }
        runs
    }

    pub fn rotated(&self, by: usize) -> PartSequence {
        let mut v = self.0.clone();
        let len = v.len();
        v.rotate_left(by % len);
        PartSequence(v)
    }

    /// Lexicographically smallest rotation.
    pub fn canonical_rotation(&self) -> PartSequence {
        (0..self.len())
            .map(|r| self.rotated(r))
            .min()
            .expect("nonempty")
    }
}

impl TryFrom<Vec<usize>> for PartSequence {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        PartSequence::new(v)
    }
}

impl From<PartSequence> for Vec<usize> {
    fn from(w: PartSequence) -> Self {
        w.0
    }
}

/// Run-length notation: `(3,5,[2]6)`.
impl fmt::Display for PartSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self
            .runs()
            .into_iter()
            .map(|(count, k)| {
                if count == 1 {
                    k.to_string()
                } else {
                    format!("[{count}]{k}")
                }
            })
            .collect();
        write!(f, "({})", items.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_uses_runs() {
        let w = PartSequence::new(vec![3, 5, 6, 6]).unwrap();
        assert_eq!(w.to_string(), "(3,5,[2]6)");
        assert_eq!(PartSequence::from_runs(&[(4, 5)]).unwrap().to_string(), "([4]5)");
    }

    #[test]
    fn rejects_empty_and_zero() {
        assert!(PartSequence::new(vec![]).is_err());
        assert!(PartSequence::new(vec![3, 0]).is_err());
    }

    #[test]
    fn canonical_rotation_is_smallest() {
        let w = PartSequence::new(vec![6, 3, 5, 6]).unwrap();
        assert_eq!(w.canonical_rotation().parts(), &[3, 5, 6, 6]);
        assert_eq!(w.total(), 20);
        assert_eq!(w.max_part(), 6);
    }
}
