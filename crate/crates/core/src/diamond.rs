//! Exact arithmetic of (virtual) Hodge diamonds.
//!
//! A [`VirtualDiamond`] is a finitely supported function `(p, q) -> Z`, i.e. a
//! class in the Grothendieck group of graded Hodge–Tate structures where the
//! simple objects are identified with bidegrees. A [`HodgeDiamond`] is the
//! same data restricted to nonnegative multiplicities, i.e. an honest graded
//! Hodge structure. The weight of the `(p, q)` piece is `p + q`.
//!
//! Zero entries are pruned on construction and after every operation, so
//! structural equality is mathematical equality.
//!
//! Operator impls (`+`, `-`, `*` for the Künneth/tensor product) panic on
//! `i64` overflow; the `checked_*` methods report it as
//! [`HodgeError::Overflow`] instead.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Deref, Mul, Neg, Sub};

use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

use crate::error::{HodgeError, Result};

/// Bidegree `(p, q)`.
pub type Bidegree = (u32, u32);

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VirtualDiamond {
    entries: BTreeMap<Bidegree, i64>,
}

impl VirtualDiamond {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The class of the one-dimensional weight-zero structure.
    pub fn unit() -> Self {
        Self::monomial(0, 0, 1)
    }

    pub fn monomial(p: u32, q: u32, mult: i64) -> Self {
        let mut entries = BTreeMap::new();
        if mult != 0 {
            entries.insert((p, q), mult);
        }
        Self { entries }
    }

    /// Builds a diamond from `(p, q, mult)` triples. Repeated bidegrees are
    /// rejected; zero multiplicities are dropped.
    pub fn from_entries<I>(entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u32, u32, i64)>,
    {
        let mut map = BTreeMap::new();
        for (p, q, mult) in entries {
            if map.insert((p, q), mult).is_some() {
                return Err(HodgeError::DuplicateEntry { p, q });
            }
        }
        map.retain(|_, m| *m != 0);
        Ok(Self { entries: map })
    }

    pub fn get(&self, p: u32, q: u32) -> i64 {
        self.entries.get(&(p, q)).copied().unwrap_or(0)
    }

    /// Stored entries in increasing `(p, q)` order.
    pub fn entries(&self) -> impl Iterator<Item = (u32, u32, i64)> + '_ {
        self.entries.iter().map(|(&(p, q), &m)| (p, q, m))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Highest weight `p + q` carrying a nonzero entry.
    pub fn max_weight(&self) -> Option<u32> {
        self.entries.keys().map(|&(p, q)| p + q).max()
    }

    pub fn is_even_concentrated(&self) -> bool {
        self.entries.keys().all(|&(p, q)| (p + q) % 2 == 0)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let mut entries = self.entries.clone();
        for (&key, &m) in &other.entries {
            accumulate(&mut entries, key, m)?;
        }
        entries.retain(|_, m| *m != 0);
        Ok(Self { entries })
    }

    pub fn checked_neg(&self) -> Result<Self> {
        self.checked_scale(-1)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.checked_neg()?)
    }

    pub fn checked_scale(&self, factor: i64) -> Result<Self> {
        if factor == 0 {
            return Ok(Self::zero());
        }
        let entries = self
            .entries
            .iter()
            .map(|(&k, &m)| m.checked_mul(factor).map(|v| (k, v)).ok_or(HodgeError::Overflow))
            .collect::<Result<_>>()?;
        Ok(Self { entries })
    }

    /// Künneth product: bidegree convolution of the two multiplicity tables.
    pub fn checked_tensor(&self, other: &Self) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for (&(a, b), &m) in &self.entries {
            for (&(c, d), &n) in &other.entries {
                let key = (
                    a.checked_add(c).ok_or(HodgeError::Overflow)?,
                    b.checked_add(d).ok_or(HodgeError::Overflow)?,
                );
                let value = m.checked_mul(n).ok_or(HodgeError::Overflow)?;
                accumulate(&mut entries, key, value)?;
            }
        }
        entries.retain(|_, m| *m != 0);
        Ok(Self { entries })
    }

    /// The combined shift-and-twist `⟨-k⟩ = [-2k](-k)`: `(p, q) -> (p + k, q + k)`.
    pub fn checked_lshift(&self, k: u32) -> Result<Self> {
        let entries = self
            .entries
            .iter()
            .map(|(&(p, q), &m)| match (p.checked_add(k), q.checked_add(k)) {
                (Some(p), Some(q)) => Ok(((p, q), m)),
                _ => Err(HodgeError::Overflow),
            })
            .collect::<Result<_>>()?;
        Ok(Self { entries })
    }

    pub fn scale(&self, factor: i64) -> Self {
        self.checked_scale(factor).expect("multiplicity overflow")
    }

    pub fn tensor(&self, other: &Self) -> Self {
        self.checked_tensor(other).expect("multiplicity overflow")
    }

    pub fn lshift(&self, k: u32) -> Self {
        self.checked_lshift(k).expect("bidegree overflow")
    }

    /// `b_d = Σ_{p+q=d} h^{p,q}`.
    pub fn betti(&self, d: u32) -> i64 {
        self.entries
            .iter()
            .filter(|(&(p, q), _)| p + q == d)
            .map(|(_, &m)| m)
            .sum()
    }

    /// Betti numbers `b_0 ..= b_top` where `top` is the highest weight present.
    pub fn betti_numbers(&self) -> Vec<i64> {
        match self.max_weight() {
            None => Vec::new(),
            Some(top) => (0..=top).map(|d| self.betti(d)).collect(),
        }
    }

    pub fn euler(&self) -> i64 {
        self.entries
            .iter()
            .map(|(&(p, q), &m)| if (p + q) % 2 == 0 { m } else { -m })
            .sum()
    }

    /// Signed total of all multiplicities.
    pub fn total(&self) -> i64 {
        self.entries.values().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.values().all(|&m| m >= 0)
    }

    pub fn to_diamond(&self) -> Result<HodgeDiamond> {
        if let Some((&(p, q), &mult)) = self.entries.iter().find(|(_, &m)| m < 0) {
            return Err(HodgeError::NegativeMultiplicity { p, q, mult });
        }
        Ok(HodgeDiamond(self.clone()))
    }

    /// Lists the first odd-weight bidegree, if any.
    pub(crate) fn first_odd(&self) -> Option<Bidegree> {
        self.entries.keys().copied().find(|&(p, q)| (p + q) % 2 == 1)
    }
}

fn accumulate(map: &mut BTreeMap<Bidegree, i64>, key: Bidegree, value: i64) -> Result<()> {
    let slot = map.entry(key).or_insert(0);
    *slot = slot.checked_add(value).ok_or(HodgeError::Overflow)?;
    Ok(())
}

impl fmt::Display for VirtualDiamond {
    /// One `p q mult` triple per line; the empty diamond prints nothing.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (p, q, m) in self.entries() {
            writeln!(f, "{p} {q} {m}")?;
        }
        Ok(())
    }
}

impl Serialize for VirtualDiamond {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.entries.len()))?;
        for (p, q, m) in self.entries() {
            seq.serialize_element(&[p as i64, q as i64, m])?;
        }
        seq.end()
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident, $msg:literal) => {
        impl $trait<&VirtualDiamond> for &VirtualDiamond {
            type Output = VirtualDiamond;
            fn $method(self, rhs: &VirtualDiamond) -> VirtualDiamond {
                self.$checked(rhs).expect($msg)
            }
        }
        impl $trait<VirtualDiamond> for VirtualDiamond {
            type Output = VirtualDiamond;
            fn $method(self, rhs: VirtualDiamond) -> VirtualDiamond {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&VirtualDiamond> for VirtualDiamond {
            type Output = VirtualDiamond;
            fn $method(self, rhs: &VirtualDiamond) -> VirtualDiamond {
                (&self).$method(rhs)
            }
        }
        impl $trait<VirtualDiamond> for &VirtualDiamond {
            type Output = VirtualDiamond;
            fn $method(self, rhs: VirtualDiamond) -> VirtualDiamond {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add, "multiplicity overflow");
forward_binop!(Sub, sub, checked_sub, "multiplicity overflow");
forward_binop!(Mul, mul, checked_tensor, "multiplicity overflow");

impl Neg for VirtualDiamond {
    type Output = VirtualDiamond;
    fn neg(self) -> VirtualDiamond {
        self.checked_neg().expect("multiplicity overflow")
    }
}

impl Neg for &VirtualDiamond {
    type Output = VirtualDiamond;
    fn neg(self) -> VirtualDiamond {
        self.checked_neg().expect("multiplicity overflow")
    }
}

impl std::iter::Sum for VirtualDiamond {
    fn sum<I: Iterator<Item = VirtualDiamond>>(iter: I) -> Self {
        iter.fold(VirtualDiamond::zero(), |acc, x| acc + x)
    }
}

/// A diamond with nonnegative multiplicities: the bigraded dimension of an
/// honest graded pure Hodge structure.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct HodgeDiamond(VirtualDiamond);

impl HodgeDiamond {
    pub fn zero() -> Self {
        Self(VirtualDiamond::zero())
    }

    pub fn unit() -> Self {
        Self(VirtualDiamond::unit())
    }

    /// Builds a diamond from signed `(p, q, mult)` triples, rejecting negative
    /// values and repeated bidegrees.
    pub fn new(entries: &[(i64, i64, i64)]) -> Result<Self> {
        let mut checked = Vec::with_capacity(entries.len());
        for &(p, q, value) in entries {
            if p < 0 || q < 0 || value < 0 {
                let value = if value < 0 { value } else { p.min(q) };
                return Err(HodgeError::NegativeValue { p, q, value });
            }
            let p = u32::try_from(p).map_err(|_| HodgeError::Overflow)?;
            let q = u32::try_from(q).map_err(|_| HodgeError::Overflow)?;
            checked.push((p, q, value));
        }
        VirtualDiamond::from_entries(checked).map(Self)
    }

    /// The Hodge diamond of a K3 surface.
    pub fn k3() -> Self {
        Self::new(&[(0, 0, 1), (2, 0, 1), (1, 1, 20), (0, 2, 1), (2, 2, 1)])
            .expect("static K3 diamond")
    }

    pub fn as_virtual(&self) -> &VirtualDiamond {
        &self.0
    }

    pub fn into_virtual(self) -> VirtualDiamond {
        self.0
    }

    pub fn total_dim(&self) -> u64 {
        self.0.entries.values().map(|&m| m as u64).sum()
    }

    pub fn tensor(&self, other: &Self) -> Self {
        Self(self.0.tensor(&other.0))
    }

    pub fn lshift(&self, k: u32) -> Self {
        Self(self.0.lshift(k))
    }

    pub fn scale(&self, factor: u32) -> Self {
        Self(self.0.scale(i64::from(factor)))
    }
}

impl Deref for HodgeDiamond {
    type Target = VirtualDiamond;
    fn deref(&self) -> &VirtualDiamond {
        &self.0
    }
}

impl From<HodgeDiamond> for VirtualDiamond {
    fn from(d: HodgeDiamond) -> Self {
        d.0
    }
}

impl TryFrom<VirtualDiamond> for HodgeDiamond {
    type Error = HodgeError;
    fn try_from(v: VirtualDiamond) -> Result<Self> {
        v.to_diamond()
    }
}

impl Add for &HodgeDiamond {
    type Output = HodgeDiamond;
    fn add(self, rhs: &HodgeDiamond) -> HodgeDiamond {
        HodgeDiamond(&self.0 + &rhs.0)
    }
}

impl Add for HodgeDiamond {
    type Output = HodgeDiamond;
    fn add(self, rhs: HodgeDiamond) -> HodgeDiamond {
        &self + &rhs
    }
}

impl Mul for &HodgeDiamond {
    type Output = HodgeDiamond;
    fn mul(self, rhs: &HodgeDiamond) -> HodgeDiamond {
        self.tensor(rhs)
    }
}

impl std::iter::Sum for HodgeDiamond {
    fn sum<I: Iterator<Item = HodgeDiamond>>(iter: I) -> Self {
        iter.fold(HodgeDiamond::zero(), |acc, x| acc + x)
    }
}

impl fmt::Display for HodgeDiamond {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
