//! Truncated power series in `t` with diamond coefficients, and the two
//! closed-form generating series built from them: Göttsche's product for
//! Hilbert schemes of points on a surface and Macdonald's product for
//! symmetric products.

use crate::diamond::{Bidegree, HodgeDiamond, VirtualDiamond};
use crate::error::{HodgeError, Result};

/// `Σ_{k=0}^{N} c_k t^k` with the truncation order `N` carried explicitly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiamondSeries {
    coeffs: Vec<VirtualDiamond>,
}

impl DiamondSeries {
    /// The series `1 + 0·t + … + 0·t^order`.
    pub fn one(order: usize) -> Self {
        let mut coeffs = vec![VirtualDiamond::zero(); order + 1];
        coeffs[0] = VirtualDiamond::unit();
        Self { coeffs }
    }

    /// Builds a series from explicit coefficients; an empty list is treated
    /// as the zero series of order 0.
    pub fn from_coeffs(mut coeffs: Vec<VirtualDiamond>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(VirtualDiamond::zero());
        }
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `t^k`; zero past the truncation order.
    pub fn coeff(&self, k: usize) -> VirtualDiamond {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[VirtualDiamond] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<VirtualDiamond> {
        self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, VirtualDiamond::zero());
        Self { coeffs }
    }

    /// Cauchy product truncated at the smaller of the two orders.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let order = self.order().min(other.order());
        let mut coeffs = vec![VirtualDiamond::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].checked_add(&a.checked_tensor(b)?)?;
            }
        }
        Ok(Self { coeffs })
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.checked_mul(other).expect("multiplicity overflow")
    }
}

/// Sign inside a binomial factor `(1 + sign · x)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// Expands `(1 + sign · u^p v^q t^t_degree)^exponent` exactly to order `order`.
///
/// Positive exponents multiply the linear factor repeatedly; negative
/// exponents multiply the geometric series `(1 + sign · x)^{-1}` repeatedly.
/// Every coefficient stays integral either way.
pub fn binomial_factor(
    monomial: Bidegree,
    t_degree: usize,
    sign: Sign,
    exponent: i64,
    order: usize,
) -> Result<DiamondSeries> {
    assert!(t_degree >= 1, "t-degree of a binomial factor must be positive");
    let (p, q) = monomial;
    let base = if exponent >= 0 {
        // 1 + sign·x t^k
        let mut coeffs = vec![VirtualDiamond::zero(); order + 1];
        coeffs[0] = VirtualDiamond::unit();
        if t_degree <= order {
            coeffs[t_degree] = VirtualDiamond::monomial(p, q, sign.as_i64());
        }
        DiamondSeries { coeffs }
    } else {
        // Σ_j (−sign·x)^j t^{jk}
        let mut coeffs = vec![VirtualDiamond::zero(); order + 1];
        let step = -sign.as_i64();
        let mut j = 0u32;
        while (j as usize) * t_degree <= order {
            let mult = if step < 0 && j % 2 == 1 { -1 } else { 1 };
            let jp = p.checked_mul(j).ok_or(HodgeError::Overflow)?;
            let jq = q.checked_mul(j).ok_or(HodgeError::Overflow)?;
            coeffs[j as usize * t_degree] = VirtualDiamond::monomial(jp, jq, mult);
            j += 1;
        }
        DiamondSeries { coeffs }
    };
    let mut out = DiamondSeries::one(order);
    for _ in 0..exponent.unsigned_abs() {
        out = out.checked_mul(&base)?;
    }
    Ok(out)
}

/// The super generating function of the symmetric algebra of `v`:
/// `Π_{p+q even} (1 − x t)^{−h} · Π_{p+q odd} (1 + x t)^{h}`.
pub fn symmetric_algebra_series(v: &VirtualDiamond, order: usize) -> Result<DiamondSeries> {
    graded_algebra_series(v, order, false)
}

/// The super generating function of the exterior algebra of `v`: the
/// symmetric-algebra rule with even and odd classes exchanged.
pub fn exterior_algebra_series(v: &VirtualDiamond, order: usize) -> Result<DiamondSeries> {
    graded_algebra_series(v, order, true)
}

fn graded_algebra_series(
    v: &VirtualDiamond,
    order: usize,
    exterior: bool,
) -> Result<DiamondSeries> {
    let mut out = DiamondSeries::one(order);
    for (p, q, h) in v.entries() {
        let even = (p + q) % 2 == 0;
        let factor = if even != exterior {
            binomial_factor((p, q), 1, Sign::Minus, -h, order)?
        } else {
            binomial_factor((p, q), 1, Sign::Plus, h, order)?
        };
        out = out.checked_mul(&factor)?;
    }
    Ok(out)
}

fn check_surface(s: &HodgeDiamond) -> Result<()> {
    match s.entries().find(|&(p, q, _)| p > 2 || q > 2) {
        Some((p, q, _)) => Err(HodgeError::NotASurface { p, q }),
        None => Ok(()),
    }
}

/// The Göttsche series `Σ_n h(S^{[n]}) t^n` truncated at `order`:
///
/// `Π_{k≥1} Π_{p,q} (1 − (−1)^{p+q} u^{p+k−1} v^{q+k−1} t^k)^{−(−1)^{p+q} h^{p,q}(S)}`.
///
/// Factors with `k > order` contribute nothing below `t^{order+1}` and are
/// omitted.
pub fn goettsche_series(s: &HodgeDiamond, order: usize) -> Result<DiamondSeries> {
    check_surface(s)?;
    let mut out = DiamondSeries::one(order);
    for k in 1..=order {
        let lift = (k - 1) as u32;
        for (p, q, h) in s.entries() {
            let monomial = (p + lift, q + lift);
            let factor = if (p + q) % 2 == 0 {
                binomial_factor(monomial, k, Sign::Minus, -h, order)?
            } else {
                binomial_factor(monomial, k, Sign::Plus, h, order)?
            };
            out = out.checked_mul(&factor)?;
        }
    }
    Ok(out)
}

/// Hodge diamond of the Hilbert scheme of `n` points on the surface `s`.
pub fn goettsche(s: &HodgeDiamond, n: usize) -> Result<HodgeDiamond> {
    goettsche_series(s, n)?.coeff(n).to_diamond()
}

/// Hodge diamond of `Sym^n X` by Macdonald's formula.
///
/// Expands the product coefficientwise: a degree-`n` monomial picks `j_c`
/// factors from each class `c` of `X`, weighted by `C(h_c + j_c − 1, j_c)`
/// for even classes and `C(h_c, j_c)` for odd ones, and lands in bidegree
/// `Σ j_c · c`. This walks the compositions of `n` directly instead of
/// multiplying series, so it is an independent route to the symmetric
/// power computed in [`crate::symfunc::sym_power`].
pub fn macdonald_sym(x: &HodgeDiamond, n: usize) -> Result<HodgeDiamond> {
    let classes: Vec<(u32, u32, i64)> = x.entries().collect();
    let mut out = VirtualDiamond::zero();
    distribute(&classes, n as u32, (0, 0), 1, &mut out)?;
    out.to_diamond()
}

fn distribute(
    classes: &[(u32, u32, i64)],
    remaining: u32,
    at: Bidegree,
    weight: i64,
    out: &mut VirtualDiamond,
) -> Result<()> {
    let Some((&(p, q, h), rest)) = classes.split_first() else {
        if remaining == 0 {
            *out = out.checked_add(&VirtualDiamond::monomial(at.0, at.1, weight))?;
        }
        return Ok(());
    };
    let even = (p + q) % 2 == 0;
    for j in 0..=remaining {
        let ways = if even {
            binomial(h + i64::from(j) - 1, i64::from(j))?
        } else {
            binomial(h, i64::from(j))?
        };
        if ways == 0 {
            if even {
                continue;
            }
            break;
        }
        let next = (at.0 + j * p, at.1 + j * q);
        let w = weight.checked_mul(ways).ok_or(HodgeError::Overflow)?;
        distribute(rest, remaining - j, next, w, out)?;
    }
    Ok(())
}

/// `C(n, k)` for `n, k ≥ 0`, zero when `k > n`; `C(−1, 0) = 1`.
fn binomial(n: i64, k: i64) -> Result<i64> {
    if k < 0 {
        return Ok(0);
    }
    if k == 0 {
        return Ok(1);
    }
    if n < k {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * i128::from(n - i) / i128::from(i + 1);
    }
    i64::try_from(acc).map_err(|_| HodgeError::Overflow)
}
