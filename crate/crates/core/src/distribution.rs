use std::path::Path;

use crate::error::{Error, Result};
use crate::mass::{Exact, Mass};
use crate::outcome::OutcomeSet;

/// A probability vector over outcomes `0..n`, every entry strictly positive.
#[derive(Debug, Clone, PartialEq)]
pub struct Distribution<M = f64> {
    probs: Vec<M>,
}

impl<M: Mass> Distribution<M> {
    pub fn new(probs: Vec<M>) -> Result<Self> {
        if probs.is_empty() {
            return Err(Error::EmptyDistribution);
        }
        if let Some((index, p)) = probs.iter().enumerate().find(|(_, p)| !p.is_positive()) {
            return Err(Error::NonPositive { index, value: p.to_string() });
        }
        let sum = probs.iter().fold(M::zero(), |acc, &p| acc + p);
        if !sum.approx_eq(M::one()) {
            return Err(Error::BadSum { sum: sum.to_string() });
        }
        Ok(Self { probs })
    }

    /// Normalizes positive weights to sum to one.
    pub fn from_weights(weights: &[M]) -> Result<Self>
    where
        M: std::ops::Div<Output = M>,
    {
        if weights.is_empty() {
            return Err(Error::EmptyDistribution);
        }
        let total = weights.iter().fold(M::zero(), |acc, &w| acc + w);
        if !total.is_positive() {
            return Err(Error::BadSum { sum: total.to_string() });
        }
        let mut probs: Vec<M> = weights.iter().map(|&w| w / total).collect();
        // Absorb float rounding into the largest entry so the sum check holds.
        let sum = probs.iter().fold(M::zero(), |acc, &p| acc + p);
        if let Some(max) = probs.iter_mut().max_by(|a, b| a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal)) {
            *max = *max + (M::one() - sum);
        }
        Self::new(probs)
    }

    pub fn uniform(n: usize) -> Result<Self>
    where
        M: std::ops::Div<Output = M>,
    {
        Self::from_weights(&vec![M::one(); n])
    }

    /// Parses the line-oriented distribution format: one probability per
    /// line, plain decimal or `a/b`; blank lines and `#` comments skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut probs = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let p = M::parse_prob(line)
                .ok_or_else(|| Error::Parse { line: i + 1, msg: format!("not a probability: {line:?}") })?;
            if !p.is_positive() {
                return Err(Error::Parse { line: i + 1, msg: format!("probability must be positive, got {line}") });
            }
            probs.push(p);
        }
        Self::new(probs)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    pub fn probs(&self) -> &[M] {
        &self.probs
    }

    pub fn p(&self, outcome: usize) -> M {
        self.probs[outcome]
    }

    pub fn mass(&self, set: &OutcomeSet) -> M {
        set.iter().fold(M::zero(), |acc, i| acc + self.probs[i])
    }

    pub fn to_f64(&self) -> Distribution<f64> {
        Distribution { probs: self.probs.iter().map(|p| p.to_f64()).collect() }
    }
}

impl Distribution<Exact> {
    pub fn from_ratios(pairs: &[(i128, i128)]) -> Result<Self> {
        Self::new(pairs.iter().map(|&(a, b)| Exact::new(a, b)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_zero_and_bad_sum() {
        assert!(matches!(Distribution::new(vec![0.5, 0.5, 0.0]), Err(Error::NonPositive { index: 2, .. })));
        assert!(matches!(Distribution::new(vec![0.5, 0.4]), Err(Error::BadSum { .. })));
        assert!(matches!(Distribution::<f64>::new(vec![]), Err(Error::EmptyDistribution)));
        assert!(Distribution::new(vec![0.5, 0.5 + 1e-12]).is_ok());
        assert!(Distribution::<Exact>::from_ratios(&[(1, 3), (1, 3), (1, 3)]).is_ok());
        assert!(Distribution::<Exact>::from_ratios(&[(1, 3), (1, 3), (1, 4)]).is_err());
    }

    #[test]
    fn parses_file_format() {
        let text = "# example one\n8/23\n6/23\n4/23\n\n2/23\n2/23\n1/23\n";
        let d: Distribution<Exact> = Distribution::parse(text).unwrap();
        assert_eq!(d.len(), 6);
        assert_eq!(d.p(0), Exact::new(8, 23));
        let f: Distribution = Distribution::parse("0.1\n0.2\n0.3\n0.4\n").unwrap();
        assert_eq!(f.probs(), &[0.1, 0.2, 0.3, 0.4]);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = Distribution::<f64>::parse("# c\n0.5\nhalf\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
        let err = Distribution::<f64>::parse("0.5\n0\n0.5\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
    }

    #[test]
    fn normalizes_weights() {
        let d = Distribution::from_weights(&[1.0, 3.0]).unwrap();
        assert_eq!(d.probs(), &[0.25, 0.75]);
        let u = Distribution::<Exact>::uniform(3).unwrap();
        assert_eq!(u.p(1), Exact::new(1, 3));
    }
}
