//! Plethystic evaluation of `Sym^n`, `∧^n` and Schur functors on the
//! bigraded dimension of a graded Hodge structure.
//!
//! `Sym` and `∧` follow the super sign rule, so odd-weight classes are
//! handled. Schur functors go through the Jacobi–Trudi determinant
//! `s_λ = det(h_{λ_i − i + j})`, expanded by Leibniz over the diamond ring,
//! and are only defined for even-concentrated inputs.

use itertools::Itertools;

use crate::diamond::{HodgeDiamond, VirtualDiamond};
use crate::error::{HodgeError, Result};
use crate::partition::Partition;
use crate::series::{exterior_algebra_series, symmetric_algebra_series, DiamondSeries};

/// `Σ_{k ≤ order} Sym^k(V) t^k`.
pub fn h_series(v: &HodgeDiamond, order: usize) -> DiamondSeries {
    symmetric_algebra_series(v.as_virtual(), order).expect("multiplicity overflow")
}

/// `Σ_{k ≤ order} ∧^k(V) t^k`.
pub fn e_series(v: &HodgeDiamond, order: usize) -> DiamondSeries {
    exterior_algebra_series(v.as_virtual(), order).expect("multiplicity overflow")
}

pub fn sym_power(v: &HodgeDiamond, n: usize) -> HodgeDiamond {
    h_series(v, n)
        .coeff(n)
        .to_diamond()
        .expect("symmetric power of a genuine diamond is nonnegative")
}

pub fn ext_power(v: &HodgeDiamond, n: usize) -> HodgeDiamond {
    e_series(v, n)
        .coeff(n)
        .to_diamond()
        .expect("exterior power of a genuine diamond is nonnegative")
}

/// Bigraded dimension of `S_λ(V)`.
pub fn schur(v: &HodgeDiamond, lambda: &Partition) -> Result<HodgeDiamond> {
    if let Some((p, q)) = v.first_odd() {
        return Err(HodgeError::OddClassesUnsupported { p, q });
    }
    let rows = lambda.len();
    if rows == 0 {
        return Ok(HodgeDiamond::unit());
    }
    let parts = lambda.parts();
    let top = parts[0] as usize + rows - 1;
    let h = symmetric_algebra_series(v.as_virtual(), top)?;
    // h_k with k < 0 is zero
    let entry = |i: usize, j: usize| -> Option<VirtualDiamond> {
        let k = parts[i] as i64 - i as i64 + j as i64;
        (k >= 0).then(|| h.coeff(k as usize))
    };

    let mut det = VirtualDiamond::zero();
    for perm in (0..rows).permutations(rows) {
        let mut term = VirtualDiamond::unit();
        let mut vanished = false;
        for (i, &j) in perm.iter().enumerate() {
            match entry(i, j) {
                Some(e) if !e.is_zero() => term = term.checked_tensor(&e)?,
                _ => {
                    vanished = true;
                    break;
                }
            }
        }
        if vanished {
            continue;
        }
        det = if permutation_is_even(&perm) {
            det.checked_add(&term)?
        } else {
            det.checked_sub(&term)?
        };
    }
    Ok(det
        .to_diamond()
        .expect("Jacobi-Trudi expansion of a Schur functor is nonnegative"))
}

fn permutation_is_even(perm: &[usize]) -> bool {
    let inversions = perm
        .iter()
        .enumerate()
        .flat_map(|(i, a)| perm[i + 1..].iter().filter(move |b| *b < a))
        .count();
    inversions % 2 == 0
}
