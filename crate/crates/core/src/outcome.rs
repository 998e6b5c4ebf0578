use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::error::Error;
use crate::partition::Partition;
use crate::poly::{rational_to_string, ExactPolynomial, Rational};

/// The per-partition identities that can be checked exactly.
///
/// The string names are the stable identifiers used on the command line and
/// in reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    /// `(g_λ(x+1) − g_λ(x))/H_λ = Σ_{μ∈λ\1} g_μ(x)/H_μ`
    DifferenceExpansion,
    /// `f_λ = Σ_{μ∈λ\1} f_μ`
    SytBranching,
    /// `n/H_λ = Σ_{μ∈λ\1} 1/H_μ`
    HookBranching,
    /// `D^n (g_λ/H_λ) = f_λ`
    IteratedDifference,
    /// `H_λ/H_μ = g_λ(i−λ_i+1)/g_μ(i−λ_i)` for each corner row `i`, `μ = λ^{i−}`
    CornerRatio,
    /// `g_{λ^{i−}}(x) = g_λ(x)(x+λ_i−i−1)/((x+λ_i−i)(x−n))` for each corner row `i`
    CornerQuotient,
    /// `Σ_{i∈T} (H_λ/H_{λ^{i−}})/(x+λ_i−i) = x − (x−n)g_λ(x+1)/g_λ(x)`
    PartialFractionG,
    /// `(x−n)g_λ(x+1)/g_λ(x) = ∏_{i∈B}(x+λ_i−i+1) / ∏_{i∈T}(x+λ_i−i)`
    ShiftRatio,
    /// `Σ_{i∈T} (H_λ/H_{λ^{i−}})/(x+λ_i−i) = x − ∏_B(x+λ_i−i+1)/∏_T(x+λ_i−i)`
    PartialFractionCorners,
    /// `Σ_{μ∈λ\1} H_λ/H_μ = n`
    HookRatioSum,
}

impl IdentityId {
    pub const ALL: [IdentityId; 10] = [
        IdentityId::DifferenceExpansion,
        IdentityId::SytBranching,
        IdentityId::HookBranching,
        IdentityId::IteratedDifference,
        IdentityId::CornerRatio,
        IdentityId::CornerQuotient,
        IdentityId::PartialFractionG,
        IdentityId::ShiftRatio,
        IdentityId::PartialFractionCorners,
        IdentityId::HookRatioSum,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::DifferenceExpansion => "THM_1_1",
            IdentityId::SytBranching => "REC_1_2",
            IdentityId::HookBranching => "REC_1_3",
            IdentityId::IteratedDifference => "REMARK_DN",
            IdentityId::CornerRatio => "CORNER_RATIO_2_2",
            IdentityId::CornerQuotient => "QUOTIENT_4_2",
            IdentityId::PartialFractionG => "THM_4_1",
            IdentityId::ShiftRatio => "EQ_4_6",
            IdentityId::PartialFractionCorners => "THM_4_2",
            IdentityId::HookRatioSum => "COR_4_4",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            IdentityId::DifferenceExpansion => "(g(x+1)-g(x))/H = sum over corner removals of g_mu(x)/H_mu",
            IdentityId::SytBranching => "f = sum over corner removals of f_mu",
            IdentityId::HookBranching => "n/H = sum over corner removals of 1/H_mu",
            IdentityId::IteratedDifference => "D^n (g/H) = f",
            IdentityId::CornerRatio => "H/H_mu = g(i-l_i+1)/g_mu(i-l_i) per corner row i",
            IdentityId::CornerQuotient => "g_mu(x)(x+l_i-i)(x-n) = g(x)(x+l_i-i-1) per corner row i",
            IdentityId::PartialFractionG => "sum_T (H/H_mu)/(x+l_i-i) = x - (x-n)g(x+1)/g(x)",
            IdentityId::ShiftRatio => "(x-n)g(x+1)/g(x) = prod_B (x+l_i-i+1) / prod_T (x+l_i-i)",
            IdentityId::PartialFractionCorners => "sum_T (H/H_mu)/(x+l_i-i) = x - prod_B/prod_T",
            IdentityId::HookRatioSum => "sum over corner removals of H/H_mu = n",
        }
    }

    /// Identities that yield one outcome per in-corner row.
    pub fn is_per_corner(self) -> bool {
        matches!(self, IdentityId::CornerRatio | IdentityId::CornerQuotient)
    }

    pub fn index(self) -> usize {
        Self::ALL.iter().position(|&id| id == self).unwrap()
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

impl Serialize for IdentityId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// Checks indexed by degree rather than by partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SchurCheck {
    /// `Σ_k C(x+k−1,k) p_1^k e_{n−k} = Σ_{λ⊢n} g_λ(x+n)/H_λ s_λ` in the Schur basis.
    Generating,
    /// `R_n(x) = R_n(x−1) + p_1 R_{n−1}(x)` for the right-hand side.
    RightRecurrence,
    /// `L_n(x) = L_n(x−1) + p_1 L_{n−1}(x)` for the left-hand side.
    LeftRecurrence,
    /// Both sides of the generating identity agree after expansion in
    /// monomials, with the left side built without Schur functions.
    MonomialCrossCheck,
}

impl SchurCheck {
    pub const ALL: [SchurCheck; 4] = [
        SchurCheck::Generating,
        SchurCheck::RightRecurrence,
        SchurCheck::LeftRecurrence,
        SchurCheck::MonomialCrossCheck,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SchurCheck::Generating => "THM_1_2",
            SchurCheck::RightRecurrence => "REC_3_1",
            SchurCheck::LeftRecurrence => "REC_3_2",
            SchurCheck::MonomialCrossCheck => "MONOMIAL_1_6",
        }
    }
}

impl fmt::Display for SchurCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for SchurCheck {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckId {
    Identity(IdentityId),
    Schur(SchurCheck),
}

impl CheckId {
    pub fn name(self) -> &'static str {
        match self {
            CheckId::Identity(id) => id.name(),
            CheckId::Schur(c) => c.name(),
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for CheckId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

/// One side of a checked equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Side {
    Rational(Rational),
    Poly(ExactPolynomial),
    /// Already-serialized JSON, used for symmetric-function expansions.
    Json(String),
    /// A value that could not be formed, e.g. a non-exact division.
    Invalid(String),
}

impl Side {
    pub fn integer(n: impl Into<BigInt>) -> Self {
        Side::Rational(Rational::from_integer(n.into()))
    }

    /// Report serialization: `"num/den"` for numbers, the polynomial list
    /// form for polynomials.
    pub fn serialize(&self) -> String {
        match self {
            Side::Rational(r) => rational_to_string(r),
            Side::Poly(p) => p.serialize(),
            Side::Json(s) | Side::Invalid(s) => s.clone(),
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Rational(r) if r.denom().is_one() => write!(f, "{}", r.numer()),
            Side::Rational(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Side::Poly(p) => write!(f, "{p}"),
            Side::Json(s) => f.write_str(s),
            Side::Invalid(s) => write!(f, "invalid: {s}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub lhs: Side,
    pub rhs: Side,
}

#[derive(Clone, Debug)]
pub struct VerificationOutcome {
    pub check: CheckId,
    /// `None` for degree-indexed checks.
    pub partition: Option<Partition>,
    pub n: usize,
    pub corner_index: Option<usize>,
    pub status: Status,
    /// Always present on failure.
    pub witness: Option<Witness>,
    pub elapsed: Duration,
}

impl VerificationOutcome {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub(crate) fn from_sides(
        check: CheckId,
        partition: Option<Partition>,
        n: usize,
        corner_index: Option<usize>,
        lhs: Side,
        rhs: Side,
        capture: bool,
    ) -> Self {
        let ok = lhs == rhs && !matches!(lhs, Side::Invalid(_)) && !matches!(rhs, Side::Invalid(_));
        let status = if ok { Status::Pass } else { Status::Fail };
        let witness = (!ok || capture).then_some(Witness { lhs, rhs });
        VerificationOutcome {
            check,
            partition,
            n,
            corner_index,
            status,
            witness,
            elapsed: Duration::ZERO,
        }
    }
}

impl fmt::Display for VerificationOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.check)?;
        match &self.partition {
            Some(p) => write!(f, " {p}")?,
            None => write!(f, " n={}", self.n)?,
        }
        if let Some(i) = self.corner_index {
            write!(f, " i={i}")?;
        }
        write!(f, ": {}", self.status)?;
        if let Some(w) = &self.witness {
            write!(f, "\n  lhs: {}\n  rhs: {}", w.lhs, w.rhs)?;
        }
        Ok(())
    }
}

/// Report form of a single outcome.
#[derive(Serialize)]
pub(crate) struct OutcomeRecord<'a> {
    pub identity: CheckId,
    pub partition: Option<&'a Partition>,
    pub n: usize,
    pub corner_index: Option<usize>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<String>,
}

impl<'a> From<&'a VerificationOutcome> for OutcomeRecord<'a> {
    fn from(o: &'a VerificationOutcome) -> Self {
        OutcomeRecord {
            identity: o.check,
            partition: o.partition.as_ref(),
            n: o.n,
            corner_index: o.corner_index,
            status: o.status,
            lhs: o.witness.as_ref().map(|w| w.lhs.serialize()),
            rhs: o.witness.as_ref().map(|w| w.rhs.serialize()),
        }
    }
}

impl Serialize for VerificationOutcome {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        OutcomeRecord::from(self).serialize(s)
    }
}
