//! Integer partitions and the classical hook formulas.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{HodgeError, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let valid = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if !valid {
            return Err(HodgeError::InvalidPartition(parts));
        }
        Ok(Self(parts))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// The one-row partition `(n)`; empty for `n = 0`.
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Self(vec![n])
        }
    }

    /// The one-column partition `(1, …, 1)`.
    pub fn column(n: u32) -> Self {
        Self(vec![1; n as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Self {
        let width = self.0.first().copied().unwrap_or(0);
        Self(
            (0..width)
                .map(|j| self.0.iter().filter(|&&p| p > j).count() as u32)
                .collect(),
        )
    }

    /// Cells `(row, col)` of the Young diagram, row-major.
    pub fn cells(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (0..len).map(move |j| (i as u32, j)))
    }

    pub fn hook_length(&self, row: u32, col: u32) -> u32 {
        let arm = self.0[row as usize] - col - 1;
        let leg = self.0[row as usize + 1..]
            .iter()
            .filter(|&&p| p > col)
            .count() as u32;
        arm + leg + 1
    }

    /// Number of standard Young tableaux `f^λ = |λ|! / Π hooks`.
    pub fn standard_tableaux(&self) -> u64 {
        let mut num: u128 = (1..=u128::from(self.size())).product();
        for (i, j) in self.cells() {
            num /= u128::from(self.hook_length(i, j));
        }
        u64::try_from(num).expect("standard tableau count overflow")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Partition {
    type Err = HodgeError;

    /// Parses a comma list such as `2,2` or `(3,1)`; the empty string is the
    /// empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if trimmed.is_empty() {
            return Ok(Self::empty());
        }
        let parts = trimmed
            .split(',')
            .map(|t| t.trim().parse::<u32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| HodgeError::InvalidPartition(Vec::new()))?;
        Self::new(parts)
    }
}

/// All partitions of `n` in reverse lexicographic order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    out
}

fn fill(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        current.push(part);
        fill(remaining - part, part, current, out);
        current.pop();
    }
}

/// Dimension of `S_λ(W)` for `dim W = n`, by the hook-content formula
/// `Π_{cells} (n + col − row) / hook`.
pub fn schur_dim_oracle(n: u64, lambda: &Partition) -> u64 {
    if lambda.len() as u64 > n {
        return 0;
    }
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for (i, j) in lambda.cells() {
        let content = n as i128 + i128::from(j) - i128::from(i);
        num = num
            .checked_mul(content as u128)
            .expect("hook-content numerator overflow");
        den = den
            .checked_mul(u128::from(lambda.hook_length(i, j)))
            .expect("hook-content denominator overflow");
    }
    debug_assert_eq!(num % den, 0);
    u64::try_from(num / den).expect("Schur dimension overflow")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn enumeration_order() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(
            partitions_of(4),
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
        assert_eq!(partitions_of(10).len(), 42);
    }

    #[test]
    fn validation() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!("2,2".parse::<Partition>().unwrap(), p(&[2, 2]));
        assert_eq!("(3, 1)".parse::<Partition>().unwrap(), p(&[3, 1]));
        assert!("1,x".parse::<Partition>().is_err());
        assert!("1,3".parse::<Partition>().is_err());
    }

    #[test]
    fn hooks_and_tableaux() {
        let l = p(&[3, 1]);
        assert_eq!(l.hook_length(0, 0), 4);
        assert_eq!(l.standard_tableaux(), 3);
        assert_eq!(p(&[2, 2]).standard_tableaux(), 2);
        assert_eq!(p(&[3, 2, 1]).standard_tableaux(), 16);
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(Partition::empty().standard_tableaux(), 1);
    }

    #[test]
    fn hook_content_dimensions() {
        assert_eq!(schur_dim_oracle(7, &p(&[1])), 7);
        assert_eq!(schur_dim_oracle(2, &p(&[1, 1, 1])), 0);
        assert_eq!(schur_dim_oracle(24, &p(&[2, 2])), 27600);
        assert_eq!(schur_dim_oracle(24, &p(&[2, 1])), 4600);
        assert_eq!(schur_dim_oracle(24, &p(&[5])), 98280);
        assert_eq!(schur_dim_oracle(5, &Partition::empty()), 1);
    }
}
