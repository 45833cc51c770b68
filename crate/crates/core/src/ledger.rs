//! Rank-level bookkeeping for Ngô strings in the decomposition theorems of
//! the two Lagrangian fibrations `M̃ → B` and `N → B`.
//!
//! Strings are tracked as formal objects: per summand we record the support,
//! the index `b`, the rank `C(2g, b)` of `Λ^b`, the weight, the shift and the
//! twist. No intersection cohomology is computed. The ε-solver replays the
//! top-degree argument: it enumerates string multiplicities whose
//! contributions to `R^10` match the observed stratum ranks of both
//! fibrations.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::diamond::VirtualDiamond;
use crate::error::HodgeError;
use crate::pipeline;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LedgerError {
    #[error("genus parameter must be at least 1")]
    InvalidGenus,

    #[error("expected {expected} coefficient diamonds, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("string offset [-{shift}]({twist}) is not of the form <-k> = [-2k](-k)")]
    UnsupportedOffset { shift: u32, twist: u32 },

    #[error("no cohomology class supplied for string {0}")]
    MissingClass(StringKind),

    #[error("no string multiplicities reproduce both top-degree tables")]
    Inconsistent { mismatched: Vec<PairedAssignment> },

    #[error("consistent assignments disagree on epsilon")]
    EpsilonMismatch { mismatched: Vec<PairedAssignment> },

    #[error(transparent)]
    Hodge(#[from] HodgeError),
}

/// Support of a string: the whole base `B`, the divisor `Σ = Sym² B′`, or
/// its diagonal `Δ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Support {
    B,
    Sigma,
    Delta,
}

impl Support {
    /// `g` such that `Λ^•` on the support runs over `0..=2g`.
    pub fn genus(self) -> u32 {
        match self {
            Support::B => 5,
            Support::Sigma => 4,
            Support::Delta => 2,
        }
    }
}

impl fmt::Display for Support {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Support::B => "B",
            Support::Sigma => "Σ",
            Support::Delta => "Δ",
        })
    }
}

/// The coefficient system `L` twisting a string.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum LSystem {
    Trivial { rank: u32 },
    /// The rank-one local system on `Σ ∖ Δ` with monodromy −1 around `Δ`.
    Sign,
}

impl LSystem {
    pub fn rank(self) -> u32 {
        match self {
            LSystem::Trivial { rank } => rank,
            LSystem::Sign => 1,
        }
    }
}

/// String-level displacement `[−shift](−twist)`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize)]
pub struct Offset {
    pub shift: u32,
    pub twist: u32,
}

impl Offset {
    pub const NONE: Offset = Offset { shift: 0, twist: 0 };

    /// `⟨−k⟩ = [−2k](−k)`.
    pub fn angle(k: u32) -> Self {
        Self { shift: 2 * k, twist: k }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StringTerm {
    pub support: Support,
    pub b_index: u32,
    pub lambda_rank: u64,
    pub weight: u32,
    /// Total shift: the term carries `[−shift]`.
    pub shift: u32,
    /// The term carries the Tate twist `(−twist)`.
    pub twist: u32,
    pub l_rank: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NgoString {
    pub support: Support,
    pub g: u32,
    pub l_system: LSystem,
    pub offset: Offset,
    pub terms: Vec<StringTerm>,
}

fn binomial(n: u32, k: u32) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..u64::from(k)).fold(1u64, |acc, i| acc * (u64::from(n) - i) / (i + 1))
}

/// `⊕_{b=0}^{2g} IC(Λ^b ⊗ L)[−b]`, displaced by `offset`.
pub fn build_string(
    support: Support,
    g: u32,
    l_system: LSystem,
    offset: Offset,
) -> Result<NgoString, LedgerError> {
    if g == 0 {
        return Err(LedgerError::InvalidGenus);
    }
    let terms = (0..=2 * g)
        .map(|b| StringTerm {
            support,
            b_index: b,
            lambda_rank: binomial(2 * g, b),
            weight: b,
            shift: b + offset.shift,
            twist: offset.twist,
            l_rank: l_system.rank(),
        })
        .collect();
    Ok(NgoString { support, g, l_system, offset, terms })
}

/// The four strings `S_B`, `S_Σ^+`, `S_Σ^−`, `S_Δ` without displacement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum StringKind {
    B,
    SigmaPlus,
    SigmaMinus,
    Delta,
}

impl StringKind {
    pub const ALL: [StringKind; 4] = [
        StringKind::B,
        StringKind::SigmaPlus,
        StringKind::SigmaMinus,
        StringKind::Delta,
    ];

    pub fn support(self) -> Support {
        match self {
            StringKind::B => Support::B,
            StringKind::SigmaPlus | StringKind::SigmaMinus => Support::Sigma,
            StringKind::Delta => Support::Delta,
        }
    }

    pub fn l_system(self) -> LSystem {
        match self {
            StringKind::SigmaMinus => LSystem::Sign,
            _ => LSystem::Trivial { rank: 1 },
        }
    }

    /// `k` in the displacement `⟨−k⟩` with which the string enters both
    /// decompositions.
    pub fn decomposition_twist(self) -> u32 {
        match self {
            StringKind::B => 0,
            StringKind::SigmaPlus | StringKind::SigmaMinus => 1,
            StringKind::Delta => 3,
        }
    }

    pub fn build(self, offset: Offset) -> NgoString {
        let support = self.support();
        build_string(support, support.genus(), self.l_system(), offset)
            .expect("the four strings have positive genus")
    }
}

impl fmt::Display for StringKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StringKind::B => "S_B",
            StringKind::SigmaPlus => "S_Σ^+",
            StringKind::SigmaMinus => "S_Σ^-",
            StringKind::Delta => "S_Δ",
        })
    }
}

/// Rank-level relative Hard Lefschetz: `rank Λ^{g−k} = rank Λ^{g+k}`.
pub fn rhl_check(s: &NgoString) -> bool {
    let rank_at = |b: u32| {
        s.terms
            .iter()
            .find(|t| t.b_index == b)
            .map(|t| t.lambda_rank * u64::from(t.l_rank))
    };
    s.terms.len() == 2 * s.g as usize + 1
        && (0..=s.g).all(|k| {
            let lo = rank_at(s.g - k);
            lo.is_some() && lo == rank_at(s.g + k)
        })
}

/// Evaluates a string's cohomology from one coefficient diamond per `b`
/// (already carrying its `[−b]`), then applies the string offset.
pub fn string_cohomology_class(
    s: &NgoString,
    coefficients: &[VirtualDiamond],
) -> Result<VirtualDiamond, LedgerError> {
    if coefficients.len() != s.terms.len() {
        return Err(LedgerError::ArityMismatch {
            expected: s.terms.len(),
            got: coefficients.len(),
        });
    }
    if s.offset.shift != 2 * s.offset.twist {
        return Err(LedgerError::UnsupportedOffset {
            shift: s.offset.shift,
            twist: s.offset.twist,
        });
    }
    let mut total = VirtualDiamond::zero();
    for c in coefficients {
        total = total.checked_add(c)?;
    }
    Ok(total.checked_lshift(s.offset.twist)?)
}

/// Splits a diamond into `pieces` parts by holomorphic degree `p`; entries
/// with `p ≥ pieces` go to the last part. Used to feed
/// [`string_cohomology_class`] one diamond per `b`.
pub fn split_by_p(d: &VirtualDiamond, pieces: usize) -> Vec<VirtualDiamond> {
    let mut out = vec![VirtualDiamond::zero(); pieces];
    if pieces == 0 {
        return out;
    }
    for (p, q, m) in d.entries() {
        let slot = (p as usize).min(pieces - 1);
        out[slot] = &out[slot] + VirtualDiamond::monomial(p, q, m);
    }
    out
}

// ---------------------------------------------------------------------------
// Top-degree tables and the ε-solver

/// Strata of `B` on which the top direct image is a local system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Stratum {
    /// `B ∖ Σ`
    Open,
    /// `Σ ∖ Δ`
    SigmaOpen,
    /// `Δ`
    Delta,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct LocalRanks {
    pub trivial: u32,
    pub sign: u32,
}

/// Observed `R^10` on each stratum as `Q^trivial ⊕ L^sign`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct StratumRankTable {
    ranks: BTreeMap<Stratum, LocalRanks>,
}

impl StratumRankTable {
    pub fn new(open: (u32, u32), sigma_open: (u32, u32), delta: (u32, u32)) -> Self {
        let mut ranks = BTreeMap::new();
        for (stratum, (trivial, sign)) in [
            (Stratum::Open, open),
            (Stratum::SigmaOpen, sigma_open),
            (Stratum::Delta, delta),
        ] {
            ranks.insert(stratum, LocalRanks { trivial, sign });
        }
        Self { ranks }
    }

    pub fn get(&self, stratum: Stratum) -> LocalRanks {
        self.ranks.get(&stratum).copied().unwrap_or_default()
    }

    pub fn set(&mut self, stratum: Stratum, ranks: LocalRanks) {
        self.ranks.insert(stratum, ranks);
    }

    fn max_rank(&self) -> u32 {
        self.ranks
            .values()
            .map(|r| r.trivial.max(r.sign))
            .max()
            .unwrap_or(0)
    }

    /// `M̃`: `Q`, `Q^2`, `Q^4`.
    pub fn og10() -> Self {
        Self::new((1, 0), (2, 0), (4, 0))
    }

    /// `N`: `Q`, `Q ⊕ L`, `Q^2`.
    pub fn hilbert5() -> Self {
        Self::new((1, 0), (1, 1), (2, 0))
    }
}

/// Which fibration a rank assignment describes, and how many `S_Δ` copies
/// its decomposition carries before the indeterminacy: `r_Δ = baseline + ε`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Fibration {
    Og10,
    Hilbert5,
}

impl Fibration {
    pub fn delta_baseline(self) -> u32 {
        match self {
            Fibration::Og10 => 1,
            Fibration::Hilbert5 => 0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RankAssignment {
    pub r_b: u32,
    pub r_sigma_plus: u32,
    pub r_sigma_minus: u32,
    pub r_delta: u32,
    /// Extra `Q_Δ` inside the top-degree stalks of `S_B`.
    pub x: u32,
    pub epsilon: u32,
}

impl RankAssignment {
    /// Top-degree contribution of the strings on each stratum.
    ///
    /// `S_B` gives `Q` everywhere plus `x` extra copies on `Δ`; `S_Σ^+` gives
    /// `Q_Σ` with nothing extra on `Δ`; `S_Σ^−` gives `L` on `Σ ∖ Δ` and
    /// nothing on `Δ` (no local invariants there); `S_Δ` gives `Q_Δ`.
    pub fn contribution(&self) -> StratumRankTable {
        StratumRankTable::new(
            (self.r_b, 0),
            (self.r_b + self.r_sigma_plus, self.r_sigma_minus),
            (self.r_b * (1 + self.x) + self.r_sigma_plus + self.r_delta, 0),
        )
    }

    /// The decomposition as a formal sum of displaced strings.
    pub fn decomposition(&self) -> StringSum {
        let mut sum = StringSum::default();
        sum.add(StringKind::B, i64::from(self.r_b));
        sum.add(StringKind::SigmaPlus, i64::from(self.r_sigma_plus));
        sum.add(StringKind::SigmaMinus, i64::from(self.r_sigma_minus));
        sum.add(StringKind::Delta, i64::from(self.r_delta));
        sum
    }
}

/// Every assignment for one fibration whose contribution equals `observed`
/// and whose `S_Δ` multiplicity has the form `baseline + ε`, `ε ∈ {0, 1}`.
pub fn fibration_assignments(
    fibration: Fibration,
    observed: &StratumRankTable,
) -> Vec<RankAssignment> {
    let bound = observed.max_rank();
    let baseline = fibration.delta_baseline();
    let mut out = Vec::new();
    for x in 0..=1 {
        for r_b in 0..=bound {
            for r_sigma_plus in 0..=bound {
                for r_sigma_minus in 0..=bound {
                    for r_delta in 0..=bound {
                        let Some(epsilon) = r_delta.checked_sub(baseline) else {
                            continue;
                        };
                        if epsilon > 1 {
                            continue;
                        }
                        let a = RankAssignment {
                            r_b,
                            r_sigma_plus,
                            r_sigma_minus,
                            r_delta,
                            x,
                            epsilon,
                        };
                        if a.contribution() == *observed {
                            out.push(a);
                        }
                    }
                }
            }
        }
    }
    out
}

/// One assignment per fibration, sharing the `S_B` datum `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PairedAssignment {
    pub x: u32,
    pub og10: RankAssignment,
    pub hilbert5: RankAssignment,
}

impl PairedAssignment {
    pub fn epsilon_agrees(&self) -> bool {
        self.og10.epsilon == self.hilbert5.epsilon
    }

    /// `[M̃] − [N]` as a formal sum of strings.
    pub fn difference(&self) -> StringSum {
        self.og10.decomposition().sub(&self.hilbert5.decomposition())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EpsilonSolution {
    pub solutions: Vec<PairedAssignment>,
}

impl EpsilonSolution {
    pub fn epsilons(&self) -> Vec<u32> {
        self.solutions.iter().map(|s| s.og10.epsilon).collect()
    }
}

/// Enumerates string multiplicities for both fibrations. Pairs share `x`
/// because the string `S_B` is the same object in both decompositions.
///
/// Fails with [`LedgerError::Inconsistent`] when no pair has a common ε,
/// and with [`LedgerError::EpsilonMismatch`] when some do and others don't.
pub fn solve_epsilon(
    observed_og10: &StratumRankTable,
    observed_hilbert5: &StratumRankTable,
) -> Result<EpsilonSolution, LedgerError> {
    let og10 = fibration_assignments(Fibration::Og10, observed_og10);
    let hilbert5 = fibration_assignments(Fibration::Hilbert5, observed_hilbert5);
    let pairs: Vec<PairedAssignment> = og10
        .iter()
        .flat_map(|m| {
            hilbert5
                .iter()
                .filter(move |n| n.x == m.x)
                .map(move |n| PairedAssignment { x: m.x, og10: *m, hilbert5: *n })
        })
        .collect();
    let (solutions, mismatched): (Vec<_>, Vec<_>) =
        pairs.into_iter().partition(PairedAssignment::epsilon_agrees);
    if solutions.is_empty() {
        return Err(LedgerError::Inconsistent { mismatched });
    }
    if !mismatched.is_empty() {
        return Err(LedgerError::EpsilonMismatch { mismatched });
    }
    Ok(EpsilonSolution { solutions })
}

/// Formal integer combination of strings, each entering with its
/// decomposition displacement.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct StringSum {
    terms: BTreeMap<StringKind, i64>,
}

impl StringSum {
    pub fn add(&mut self, kind: StringKind, mult: i64) {
        let slot = self.terms.entry(kind).or_insert(0);
        *slot += mult;
        if *slot == 0 {
            self.terms.remove(&kind);
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&k, &m) in &other.terms {
            out.add(k, -m);
        }
        out
    }

    pub fn get(&self, kind: StringKind) -> i64 {
        self.terms.get(&kind).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (StringKind, i64)> + '_ {
        self.terms.iter().map(|(&k, &m)| (k, m))
    }

    /// `Σ mult · H(string)⟨−k_string⟩`, asking `class_of` only for strings
    /// with nonzero multiplicity.
    pub fn evaluate<F>(&self, mut class_of: F) -> Result<VirtualDiamond, LedgerError>
    where
        F: FnMut(StringKind) -> Option<VirtualDiamond>,
    {
        let mut total = VirtualDiamond::zero();
        for (kind, mult) in self.terms() {
            let class = class_of(kind).ok_or(LedgerError::MissingClass(kind))?;
            let term = class
                .checked_lshift(kind.decomposition_twist())?
                .checked_scale(mult)?;
            total = total.checked_add(&term)?;
        }
        Ok(total)
    }
}

/// Cohomology of the undisplaced strings `S_Σ^±` and `S_Δ` read off the
/// auxiliary spaces: `H(S_Δ) = H(M′)`, `H(S_Σ^+) = H(Sym² M′)` and
/// `H(S_Σ^+) + H(S_Σ^−) = H(M′²)`. `S_B` has no such description.
pub fn auxiliary_string_class(kind: StringKind) -> Result<Option<VirtualDiamond>, LedgerError> {
    let (target, string) = match kind {
        StringKind::B => return Ok(None),
        StringKind::Delta => (pipeline::m_prime()?.into_virtual(), kind.build(Offset::NONE)),
        StringKind::SigmaPlus => (
            pipeline::sym2_m_prime()?.into_virtual(),
            kind.build(Offset::NONE),
        ),
        StringKind::SigmaMinus => (
            pipeline::m_prime_sq()?.as_virtual().checked_sub(pipeline::sym2_m_prime()?.as_virtual())?,
            kind.build(Offset::NONE),
        ),
    };
    let pieces = split_by_p(&target, string.terms.len());
    string_cohomology_class(&string, &pieces).map(Some)
}

/// `[M̃] − [N]` computed from the string ledger: solve for ε, subtract the two
/// decompositions formally, then evaluate the surviving strings.
pub fn og10_minus_n_via_strings() -> Result<VirtualDiamond, LedgerError> {
    let solution = solve_epsilon(&StratumRankTable::og10(), &StratumRankTable::hilbert5())?;
    let mut classes = BTreeMap::new();
    for kind in StringKind::ALL {
        if let Some(c) = auxiliary_string_class(kind)? {
            classes.insert(kind, c);
        }
    }
    let mut result: Option<VirtualDiamond> = None;
    for pair in &solution.solutions {
        let value = pair.difference().evaluate(|k| classes.get(&k).cloned())?;
        match &result {
            Some(previous) if *previous != value => {
                return Err(LedgerError::EpsilonMismatch { mismatched: vec![*pair] })
            }
            _ => result = Some(value),
        }
    }
    Ok(result.expect("solve_epsilon returns at least one solution"))
}
