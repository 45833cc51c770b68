//! The OG10 computation over a degree-two K3 surface `S` with `V = H*(S)`.
//!
//! Every auxiliary space is built twice, once from its closed formula in
//! terms of `V` and once from an independent route (Göttsche's series, a
//! Künneth square, a symmetric square), and the two must agree exactly.
//! The OG10 diamond then comes from the Grothendieck-group identity
//!
//! `H(M̃) = H(N) + (2·H(Sym² M′) − H(M′²))⟨−1⟩ + H(M′)⟨−3⟩`
//!
//! which the Schur-functor formula for `H(M̃)` must reproduce.

use serde::Serialize;

use crate::diamond::{HodgeDiamond, VirtualDiamond};
use crate::error::{HodgeError, Result};
use crate::partition::{schur_dim_oracle, Partition};
use crate::series::goettsche;
use crate::symfunc::{schur, sym_power};

/// Shorthand `V^{(k)} = Sym^k V`.
fn sym(v: &HodgeDiamond, k: usize) -> HodgeDiamond {
    sym_power(v, k)
}

fn agree(name: &'static str, a: HodgeDiamond, b: &HodgeDiamond) -> Result<HodgeDiamond> {
    if &a == b {
        Ok(a)
    } else {
        Err(HodgeError::ConstructionMismatch(name))
    }
}

pub fn k3() -> HodgeDiamond {
    HodgeDiamond::k3()
}

/// `H*(M′) = V^{(2)} ⊕ V⟨−1⟩`, checked against `H*(S^{[2]})`.
pub fn m_prime() -> Result<HodgeDiamond> {
    let v = k3();
    let closed = &sym(&v, 2) + &v.lshift(1);
    agree("H*(M')", closed, &goettsche(&v, 2)?)
}

/// `H*(N) = V^{(5)} ⊕ V^{(3)}⊗V⟨−1⟩ ⊕ 2·V⊗V^{(2)}⟨−2⟩ ⊕ 2·V⊗V⟨−3⟩ ⊕ V⟨−4⟩`,
/// checked against `H*(S^{[5]})`.
pub fn n_space() -> Result<HodgeDiamond> {
    let v = k3();
    let closed = [
        sym(&v, 5),
        sym(&v, 3).tensor(&v).lshift(1),
        v.tensor(&sym(&v, 2)).lshift(2).scale(2),
        v.tensor(&v).lshift(3).scale(2),
        v.lshift(4),
    ]
    .into_iter()
    .sum();
    agree("H*(N)", closed, &goettsche(&v, 5)?)
}

/// `H*(M′²) = V^{(2)}⊗V^{(2)} ⊕ 2·V^{(2)}⊗V⟨−1⟩ ⊕ V⊗V⟨−2⟩`, checked against
/// the Künneth square of `H*(M′)`.
pub fn m_prime_sq() -> Result<HodgeDiamond> {
    let v = k3();
    let s2 = sym(&v, 2);
    let closed = [
        s2.tensor(&s2),
        s2.tensor(&v).lshift(1).scale(2),
        v.tensor(&v).lshift(2),
    ]
    .into_iter()
    .sum();
    let m = m_prime()?;
    agree("H*(M'^2)", closed, &m.tensor(&m))
}

/// `H*(Sym² M′) = Sym² V^{(2)} ⊕ V^{(2)}⊗V⟨−1⟩ ⊕ V^{(2)}⟨−2⟩`, checked against
/// the symmetric square of `H*(M′)`.
pub fn sym2_m_prime() -> Result<HodgeDiamond> {
    let v = k3();
    let s2 = sym(&v, 2);
    let closed = [sym(&s2, 2), s2.tensor(&v).lshift(1), s2.lshift(2)]
        .into_iter()
        .sum();
    agree("H*(Sym^2 M')", closed, &sym(&m_prime()?, 2))
}

/// The virtual difference `M̃ − N = (2·Sym² M′ − M′²)⟨−1⟩ + M′⟨−3⟩`.
pub fn og10_minus_n() -> Result<VirtualDiamond> {
    let sym2 = sym2_m_prime()?.into_virtual();
    let square = m_prime_sq()?.into_virtual();
    let sigma_difference = sym2.checked_scale(2)?.checked_sub(&square)?;
    sigma_difference
        .checked_lshift(1)?
        .checked_add(&m_prime()?.as_virtual().checked_lshift(3)?)
}

/// `H*(M̃)` for `M̃` in the OG10 deformation class.
pub fn og10_diamond() -> Result<HodgeDiamond> {
    n_space()?.as_virtual().checked_add(&og10_minus_n()?)?.to_diamond()
}

fn schur_k3(parts: &[u32]) -> VirtualDiamond {
    let lambda = Partition::new(parts.to_vec()).expect("static partition");
    schur(&k3(), &lambda)
        .expect("K3 is even-concentrated")
        .into_virtual()
}

/// The Schur-functor expression for `H*(M̃)`:
/// `S^{(5)} ⊕ 2·S^{(4)}⟨−1⟩ ⊕ S_{(2,2)}⟨−1⟩ ⊕ 2·S^{(3)}⟨−2⟩ ⊕ 2·S_{(2,1)}⟨−2⟩
///  ⊕ (S⊗S)⟨−3⟩ ⊕ 3·S^{(2)}⟨−3⟩ ⊕ 2·S⟨−4⟩`.
pub fn schur_formula_og10() -> VirtualDiamond {
    let v = k3().into_virtual();
    [
        schur_k3(&[5]),
        schur_k3(&[4]).lshift(1).scale(2),
        schur_k3(&[2, 2]).lshift(1),
        schur_k3(&[3]).lshift(2).scale(2),
        schur_k3(&[2, 1]).lshift(2).scale(2),
        v.tensor(&v).lshift(3),
        schur_k3(&[2]).lshift(3).scale(3),
        v.lshift(4).scale(2),
    ]
    .into_iter()
    .sum()
}

/// The Schur-functor expression for `H*(N)`:
/// `S^{(5)} ⊕ (S^{(3)}⊗S)⟨−1⟩ ⊕ 2·(S⊗S^{(2)})⟨−2⟩ ⊕ 2·(S⊗S)⟨−3⟩ ⊕ S⟨−4⟩`.
pub fn schur_formula_hilbert5() -> VirtualDiamond {
    let v = k3().into_virtual();
    [
        schur_k3(&[5]),
        schur_k3(&[3]).tensor(&v).lshift(1),
        v.tensor(&schur_k3(&[2])).lshift(2).scale(2),
        v.tensor(&v).lshift(3).scale(2),
        v.lshift(4),
    ]
    .into_iter()
    .sum()
}

/// One decomposition identity checked both as diamonds and by dimension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub lhs: VirtualDiamond,
    pub rhs: VirtualDiamond,
    pub holds: bool,
    /// `total(lhs)` from the diamond computation.
    pub lhs_dim: i64,
    /// The right-hand side's dimension from the hook-content formula alone.
    pub oracle_dim: u64,
    pub dims_match: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub identities: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_hold(&self) -> bool {
        self.identities.iter().all(|c| c.holds && c.dims_match)
    }
}

/// The four plethysm identities over `V = H*(S)`:
///
/// * `V^{(2)}⊗V = S_{(2,1)} ⊕ V^{(3)}`
/// * `V^{(3)}⊗V = S_{(3,1)} ⊕ V^{(4)}`
/// * `V^{(2)}⊗V^{(2)} = S_{(2,2)} ⊕ S_{(3,1)} ⊕ V^{(4)}`
/// * `Sym²(V^{(2)}) = S_{(2,2)} ⊕ V^{(4)}`
pub fn plethysm_identities() -> IdentityReport {
    let v = k3();
    let n = v.total_dim();
    let s2 = sym(&v, 2);
    let s3 = sym(&v, 3);
    let dim = |parts: &[u32]| schur_dim_oracle(n, &Partition::new(parts.to_vec()).unwrap());
    let rhs = |shapes: &[&[u32]]| -> (VirtualDiamond, u64) {
        (
            shapes.iter().map(|s| schur_k3(s)).sum(),
            shapes.iter().map(|s| dim(s)).sum(),
        )
    };

    let cases: [(&'static str, HodgeDiamond, &[&[u32]]); 4] = [
        ("Sym2(V) x V = S21(V) + Sym3(V)", s2.tensor(&v), &[&[2, 1], &[3]]),
        ("Sym3(V) x V = S31(V) + Sym4(V)", s3.tensor(&v), &[&[3, 1], &[4]]),
        (
            "Sym2(V) x Sym2(V) = S22(V) + S31(V) + Sym4(V)",
            s2.tensor(&s2),
            &[&[2, 2], &[3, 1], &[4]],
        ),
        ("Sym2(Sym2(V)) = S22(V) + Sym4(V)", sym(&s2, 2), &[&[2, 2], &[4]]),
    ];

    let identities = cases
        .into_iter()
        .map(|(name, lhs, shapes)| {
            let (rhs, oracle_dim) = rhs(shapes);
            let lhs = lhs.into_virtual();
            let lhs_dim = lhs.total();
            IdentityCheck {
                name,
                holds: lhs == rhs,
                dims_match: lhs_dim >= 0 && lhs_dim as u64 == oracle_dim,
                lhs,
                rhs,
                lhs_dim,
                oracle_dim,
            }
        })
        .collect();
    IdentityReport { identities }
}
