//! Structural checks on candidate hyper-Kähler diamonds. Each check reports
//! the quantities it compared, not just a verdict.

use serde::Serialize;

use crate::diamond::VirtualDiamond;

pub fn check_hodge_symmetry(a: &VirtualDiamond) -> bool {
    a.entries().all(|(p, q, m)| a.get(q, p) == m)
}

/// `h^{p,q} = h^{n−p, n−q}` for complex dimension `n`.
pub fn check_poincare(a: &VirtualDiamond, n: u32) -> bool {
    a.entries().all(|(p, q, m)| p <= n && q <= n && a.get(n - p, n - q) == m)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SalamonReport {
    pub n: u32,
    pub lhs: i64,
    pub rhs: i64,
    pub ok: bool,
}

/// `2 Σ_{i=1}^{2n} (−1)^i (3i² − n) b_{2n−i} = n b_{2n}`, odd Betti numbers
/// included.
pub fn check_salamon(a: &VirtualDiamond, n: u32) -> SalamonReport {
    let n64 = i64::from(n);
    let lhs = 2 * (1..=2 * n)
        .map(|i| {
            let i64_ = i64::from(i);
            let sign = if i % 2 == 0 { 1 } else { -1 };
            sign * (3 * i64_ * i64_ - n64) * a.betti(2 * n - i)
        })
        .sum::<i64>();
    let rhs = n64 * a.betti(2 * n);
    SalamonReport { n, lhs, rhs, ok: lhs == rhs }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EulerReport {
    pub expected: i64,
    pub actual: i64,
    pub ok: bool,
}

pub fn check_euler(a: &VirtualDiamond, expected: i64) -> EulerReport {
    let actual = a.euler();
    EulerReport { expected, actual, ok: actual == expected }
}

/// All checks for a diamond of complex dimension `2·half_dim`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub dim: u32,
    pub hodge_symmetry: bool,
    pub poincare: bool,
    /// Only computed for even `dim ≥ 2`.
    pub salamon: Option<SalamonReport>,
    pub euler: Option<EulerReport>,
    pub betti: Vec<i64>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.hodge_symmetry
            && self.poincare
            && self.salamon.is_none_or(|s| s.ok)
            && self.euler.is_none_or(|e| e.ok)
    }
}

pub fn validate(a: &VirtualDiamond, dim: u32, expected_euler: Option<i64>) -> ValidationReport {
    ValidationReport {
        dim,
        hodge_symmetry: check_hodge_symmetry(a),
        poincare: check_poincare(a, dim),
        salamon: (dim >= 2 && dim.is_multiple_of(2)).then(|| check_salamon(a, dim / 2)),
        euler: expected_euler.map(|e| check_euler(a, e)),
        betti: (0..=2 * dim).map(|d| a.betti(d)).collect(),
    }
}
