//! The g-function `g_λ(x) = ∏_{i=1}^{n} (x + λ_i − i)` and the identities
//! relating it to hook lengths.
//!
//! The product runs over `i = 1..=n` with `n = |λ|`, not over the `ℓ(λ)`
//! nonzero parts: the trailing factors `x − i` for `ℓ(λ) < i ≤ n` matter.
//!
//! Every identity is checked after clearing denominators, as an equality of
//! polynomials or of rationals. Rational functions never appear.

use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::outcome::{CheckId, IdentityId, Side, VerificationOutcome};
use crate::partition::{factorial, syt_count_by_branching, Cell, CornerData, Partition};
use crate::poly::{rational, ExactPolynomial, Rational};

/// Default bound on `|λ|` for identity checks.
pub const DEFAULT_MAX_N: usize = 25;

/// `λ_i − i` for `i = 1..=n`; the constant terms of the g-factors.
pub fn shifted_parts(lambda: &Partition) -> Vec<i64> {
    (1..=lambda.size())
        .map(|i| lambda.part(i) as i64 - i as i64)
        .collect()
}

/// `g_λ(x)`, monic of degree `|λ|`. `g_∅ = 1`.
pub fn g_poly(lambda: &Partition) -> ExactPolynomial {
    product_of_linears(shifted_parts(lambda))
}

fn product_of_linears<I: IntoIterator<Item = i64>>(roots: I) -> ExactPolynomial {
    // Integer coefficients, converted to rationals once at the end.
    let mut coeffs: Vec<BigInt> = vec![BigInt::one()];
    for a in roots {
        let a = BigInt::from(a);
        coeffs.push(BigInt::zero());
        for k in (0..coeffs.len()).rev() {
            let lower = if k > 0 { coeffs[k - 1].clone() } else { BigInt::zero() };
            coeffs[k] = &coeffs[k] * &a + lower;
        }
    }
    ExactPolynomial::from_coeffs(coeffs.into_iter().map(Rational::from_integer).collect())
}

/// Linear factors of `(x−n) g_λ(x+1)/g_λ(x)` after cancellation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientFactors {
    pub numerator: Vec<ExactPolynomial>,
    pub denominator: Vec<ExactPolynomial>,
}

impl QuotientFactors {
    pub fn numerator_product(&self) -> ExactPolynomial {
        ExactPolynomial::product(&self.numerator)
    }

    pub fn denominator_product(&self) -> ExactPolynomial {
        ExactPolynomial::product(&self.denominator)
    }
}

/// `∏_{i∈B}(x+λ_i−i+1)` over `∏_{i∈T}(x+λ_i−i)`, factors in increasing index
/// order.
pub fn g_quotient_factors(lambda: &Partition) -> Result<QuotientFactors> {
    let corners = lambda.corners()?;
    Ok(corner_factors(lambda, &corners))
}

fn corner_factors(lambda: &Partition, corners: &CornerData) -> QuotientFactors {
    let shifted = |i: usize| lambda.part(i) as i64 - i as i64;
    QuotientFactors {
        numerator: corners
            .out_corners
            .iter()
            .map(|&i| ExactPolynomial::linear(shifted(i) + 1))
            .collect(),
        denominator: corners
            .in_corners
            .iter()
            .map(|&i| ExactPolynomial::linear(shifted(i)))
            .collect(),
    }
}

/// `g_λ(x+1)/g_{λ^{i−}}(x)` after cancelling common factors: numerator over
/// `B` as for [`g_quotient_factors`], denominator `(x + μ_j − j)` over `T`
/// where `μ = λ^{i−}`.
pub fn cancelled_corner_quotient(lambda: &Partition, row: usize) -> Result<QuotientFactors> {
    let corners = lambda.corners()?;
    let mu = corners.removal(row).ok_or_else(|| {
        Error::Inconsistent(format!("row {row} of {lambda} has no removable corner"))
    })?;
    let numerator = corner_factors(lambda, &corners).numerator;
    let denominator = corners
        .in_corners
        .iter()
        .map(|&j| ExactPolynomial::linear(mu.part(j) as i64 - j as i64))
        .collect();
    Ok(QuotientFactors {
        numerator,
        denominator,
    })
}

/// `x ∏_T(x+λ_i−i) − ∏_B(x+λ_i−i+1)`: the numerator of the right side of the
/// partial-fraction identity over the common denominator `∏_T`.
pub fn partial_fraction_numerator(lambda: &Partition) -> Result<ExactPolynomial> {
    let q = g_quotient_factors(lambda)?;
    Ok(&(&ExactPolynomial::x() * &q.denominator_product()) - &q.numerator_product())
}

/// Deliberate corruption of one input quantity, used to show that the
/// checks can fail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Fault {
    /// Add `delta` to the hook length of `cell` whenever `H` of `partition`
    /// is computed.
    Hook {
        partition: Partition,
        cell: Cell,
        delta: i64,
    },
    /// Add `delta` to the constant term of the `index`-th factor (1-based)
    /// of `g` of `partition`.
    GFactor {
        partition: Partition,
        index: usize,
        delta: i64,
    },
}

impl Fault {
    pub fn partition(&self) -> &Partition {
        match self {
            Fault::Hook { partition, .. } | Fault::GFactor { partition, .. } => partition,
        }
    }

    /// Errors if the fault does not address an existing hook or factor, or
    /// would make a hook length nonpositive.
    pub fn validate(&self) -> Result<()> {
        match self {
            Fault::Hook {
                partition,
                cell,
                delta,
            } => {
                let h = partition.hook_length(*cell)? as i64;
                if h + delta <= 0 {
                    return Err(Error::InvalidConfig(format!(
                        "hook fault leaves a nonpositive hook at {cell}"
                    )));
                }
            }
            Fault::GFactor {
                partition, index, ..
            } => {
                if *index == 0 || *index > partition.size() {
                    return Err(Error::InvalidConfig(format!(
                        "g-factor index {index} out of range for {partition}"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Checks identities for one partition at a time.
#[derive(Clone, Debug)]
pub struct IdentityChecker {
    max_n: usize,
    capture_witness: bool,
    fault: Option<Fault>,
}

impl Default for IdentityChecker {
    fn default() -> Self {
        IdentityChecker {
            max_n: DEFAULT_MAX_N,
            capture_witness: true,
            fault: None,
        }
    }
}

/// Hook products and g-functions of `λ` and of each `λ^{i−}`, computed once
/// per check.
struct Prepared {
    lambda: Partition,
    n: usize,
    corners: CornerData,
    hook: BigInt,
    g: ExactPolynomial,
    /// `(i, H_{λ^{i−}}, g_{λ^{i−}})` in the order of `corners.in_corners`.
    removals: Vec<(usize, BigInt, ExactPolynomial)>,
}

impl Prepared {
    fn shifted(&self, i: usize) -> i64 {
        self.lambda.part(i) as i64 - i as i64
    }

    fn removal_hooks(&self) -> impl Iterator<Item = &BigInt> {
        self.removals.iter().map(|(_, h, _)| h)
    }

    /// `∏_{μ∈λ\1} H_μ` with position `skip` left out.
    fn removal_hook_product(&self, skip: Option<usize>) -> BigInt {
        self.removal_hooks()
            .enumerate()
            .filter(|(k, _)| Some(*k) != skip)
            .fold(BigInt::one(), |acc, (_, h)| acc * h)
    }

    fn in_corner_product(&self, skip: Option<usize>) -> ExactPolynomial {
        let factors: Vec<ExactPolynomial> = self
            .corners
            .in_corners
            .iter()
            .filter(|&&i| Some(i) != skip)
            .map(|&i| ExactPolynomial::linear(self.shifted(i)))
            .collect();
        ExactPolynomial::product(&factors)
    }

    fn out_corner_product(&self) -> ExactPolynomial {
        let factors: Vec<ExactPolynomial> = self
            .corners
            .out_corners
            .iter()
            .map(|&i| ExactPolynomial::linear(self.shifted(i) + 1))
            .collect();
        ExactPolynomial::product(&factors)
    }

    /// `Σ_{i∈T} (H_λ/H_{λ^{i−}}) ∏_{k∈T, k≠i}(x+λ_k−k)`: the left side of
    /// both partial-fraction identities over the common denominator `∏_T`.
    fn partial_fraction_lhs(&self) -> ExactPolynomial {
        let hook = Rational::from_integer(self.hook.clone());
        self.removals
            .iter()
            .fold(ExactPolynomial::zero(), |acc, (i, h_mu, _)| {
                let ratio = &hook / Rational::from_integer(h_mu.clone());
                &acc + &self.in_corner_product(Some(*i)).scale(&ratio)
            })
    }
}

impl IdentityChecker {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_max_n(mut self, max_n: usize) -> Self {
        self.max_n = max_n;
        self
    }

    /// Keep both sides on passing outcomes too. Failures always keep them.
    pub fn with_witnesses(mut self, capture: bool) -> Self {
        self.capture_witness = capture;
        self
    }

    pub fn with_fault(mut self, fault: Option<Fault>) -> Self {
        self.fault = fault;
        self
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    /// `H_λ`, with the configured fault applied.
    pub fn hook_product(&self, lambda: &Partition) -> BigInt {
        let mut grid = lambda.hook_grid();
        if let Some(Fault::Hook {
            partition,
            cell,
            delta,
        }) = &self.fault
        {
            if partition == lambda && lambda.contains_cell(*cell) {
                let h = &mut grid[cell.row - 1][cell.col - 1];
                *h = (*h as i64 + delta).max(1) as usize;
            }
        }
        grid.into_iter()
            .flatten()
            .fold(BigInt::one(), |acc, h| acc * h)
    }

    /// `g_λ(x)`, with the configured fault applied.
    pub fn g_poly(&self, lambda: &Partition) -> ExactPolynomial {
        let mut roots = shifted_parts(lambda);
        if let Some(Fault::GFactor {
            partition,
            index,
            delta,
        }) = &self.fault
        {
            if partition == lambda && (1..=roots.len()).contains(index) {
                roots[index - 1] += delta;
            }
        }
        product_of_linears(roots)
    }

    fn prepare(&self, lambda: &Partition) -> Result<Prepared> {
        let corners = lambda.corners()?;
        let removals = corners
            .removals
            .iter()
            .map(|(i, mu)| (*i, self.hook_product(mu), self.g_poly(mu)))
            .collect();
        Ok(Prepared {
            lambda: lambda.clone(),
            n: lambda.size(),
            hook: self.hook_product(lambda),
            g: self.g_poly(lambda),
            corners,
            removals,
        })
    }

    /// Verifies `id` for `λ`. Per-corner identities give one outcome per
    /// in-corner row, the others exactly one.
    pub fn check(&self, id: IdentityId, lambda: &Partition) -> Result<Vec<VerificationOutcome>> {
        let n = lambda.size();
        if n > self.max_n {
            return Err(Error::BoundExceeded {
                what: "check_identity",
                n,
                bound: self.max_n,
            });
        }
        if lambda.is_empty() {
            return Err(Error::EmptyPartition {
                operation: "check_identity",
            });
        }
        let start = Instant::now();
        let p = self.prepare(lambda)?;
        let sides = match id {
            IdentityId::DifferenceExpansion => vec![(None, difference_expansion(&p))],
            IdentityId::SytBranching => vec![(None, syt_branching(&p))],
            IdentityId::HookBranching => vec![(None, hook_branching(&p))],
            IdentityId::IteratedDifference => vec![(None, iterated_difference(&p))],
            IdentityId::CornerRatio => corner_ratio(&p),
            IdentityId::CornerQuotient => corner_quotient(&p),
            IdentityId::PartialFractionG => vec![(None, partial_fraction_g(&p))],
            IdentityId::ShiftRatio => vec![(None, shift_ratio(&p))],
            IdentityId::PartialFractionCorners => vec![(None, partial_fraction_corners(&p))],
            IdentityId::HookRatioSum => vec![(None, hook_ratio_sum(&p))],
        };
        let elapsed = start.elapsed();
        Ok(sides
            .into_iter()
            .map(|(corner, (lhs, rhs))| {
                let mut o = VerificationOutcome::from_sides(
                    CheckId::Identity(id),
                    Some(lambda.clone()),
                    n,
                    corner,
                    lhs,
                    rhs,
                    self.capture_witness,
                );
                o.elapsed = elapsed;
                o
            })
            .collect())
    }

    /// `(g(x+1)−g(x))·∏H_μ − Σ_μ g_μ(x)·H_λ·∏_{ν≠μ}H_ν`, which the
    /// difference expansion says is zero.
    pub fn difference_expansion_cleared(&self, lambda: &Partition) -> Result<ExactPolynomial> {
        let p = self.prepare(lambda)?;
        let (lhs, rhs) = difference_expansion_sides(&p);
        Ok(&lhs - &rhs)
    }

    /// `H_λ/H_μ` for each `μ = λ^{i−}`, keyed by the corner row `i`.
    pub fn hook_ratios(&self, lambda: &Partition) -> Result<Vec<(usize, Rational)>> {
        let p = self.prepare(lambda)?;
        Ok(p.removals
            .iter()
            .map(|(i, h, _)| (*i, Rational::new(p.hook.clone(), h.clone())))
            .collect())
    }
}

/// Verifies `id` for `λ` with default settings.
pub fn check_identity(id: IdentityId, lambda: &Partition) -> Result<Vec<VerificationOutcome>> {
    IdentityChecker::default().check(id, lambda)
}

type Sides = (Side, Side);

fn difference_expansion_sides(p: &Prepared) -> (ExactPolynomial, ExactPolynomial) {
    let all = Rational::from_integer(p.removal_hook_product(None));
    let lhs = p.g.difference().scale(&all);
    let rhs = p
        .removals
        .iter()
        .enumerate()
        .fold(ExactPolynomial::zero(), |acc, (k, (_, _, g_mu))| {
            let c = Rational::from_integer(&p.hook * p.removal_hook_product(Some(k)));
            &acc + &g_mu.scale(&c)
        });
    (lhs, rhs)
}

fn difference_expansion(p: &Prepared) -> Sides {
    let (lhs, rhs) = difference_expansion_sides(p);
    (Side::Poly(lhs), Side::Poly(rhs))
}

/// `f = n!/H` as a rational, so a corrupted hook shows up as a mismatch
/// rather than an error.
fn hook_formula(n: usize, hook: &BigInt) -> Rational {
    Rational::new(BigInt::from(factorial(n)), hook.clone())
}

fn syt_branching(p: &Prepared) -> Sides {
    let f = hook_formula(p.n, &p.hook);
    let sum = p
        .removal_hooks()
        .fold(Rational::zero(), |acc, h| acc + hook_formula(p.n - 1, h));
    let integral = f.is_integer() && p.removal_hooks().all(|h| hook_formula(p.n - 1, h).is_integer());
    if !integral {
        return (
            Side::Rational(f),
            Side::Invalid(format!("n!/H is not integral; branching sum {sum}")),
        );
    }
    (Side::Rational(f), Side::Rational(sum))
}

fn hook_branching(p: &Prepared) -> Sides {
    let lhs = BigInt::from(p.n) * p.removal_hook_product(None);
    let sum = (0..p.removals.len()).fold(BigInt::zero(), |acc, k| acc + p.removal_hook_product(Some(k)));
    (Side::integer(lhs), Side::integer(&p.hook * sum))
}

fn iterated_difference(p: &Prepared) -> Sides {
    let mut poly = p.g.scale(&Rational::new(BigInt::one(), p.hook.clone()));
    for _ in 0..p.n {
        poly = poly.difference();
    }
    let f = syt_count_by_branching(&p.lambda);
    let expected = ExactPolynomial::constant(Rational::from_integer(BigInt::from(f)));
    (Side::Poly(poly), Side::Poly(expected))
}

fn corner_ratio(p: &Prepared) -> Vec<(Option<usize>, Sides)> {
    p.removals
        .iter()
        .map(|(i, h_mu, g_mu)| {
            let at = rational(*i as i64 - p.lambda.part(*i) as i64);
            let lhs = Rational::from_integer(p.hook.clone()) * g_mu.eval(&at);
            let rhs = Rational::from_integer(h_mu.clone()) * p.g.eval(&(at + Rational::one()));
            (Some(*i), (Side::Rational(lhs), Side::Rational(rhs)))
        })
        .collect()
}

fn corner_quotient(p: &Prepared) -> Vec<(Option<usize>, Sides)> {
    let x_minus_n = ExactPolynomial::linear(-(p.n as i64));
    p.removals
        .iter()
        .map(|(i, _, g_mu)| {
            let s = p.shifted(*i);
            let lhs = ExactPolynomial::product([g_mu, &ExactPolynomial::linear(s), &x_minus_n]);
            let rhs = &p.g * &ExactPolynomial::linear(s - 1);
            (Some(*i), (Side::Poly(lhs), Side::Poly(rhs)))
        })
        .collect()
}

fn partial_fraction_g(p: &Prepared) -> Sides {
    let lhs = p.partial_fraction_lhs();
    let in_prod = p.in_corner_product(None);
    let shifted_g = p.g.shift(&Rational::one());
    let numerator = ExactPolynomial::product([
        &ExactPolynomial::linear(-(p.n as i64)),
        &shifted_g,
        &in_prod,
    ]);
    let rhs = match numerator.div_exact(&p.g) {
        Some(q) => Side::Poly(&(&ExactPolynomial::x() * &in_prod) - &q),
        None => Side::Invalid(format!(
            "(x-n)g(x+1)prod_T / g(x) is not a polynomial: ({numerator})/({})",
            p.g
        )),
    };
    (Side::Poly(lhs), rhs)
}

fn shift_ratio(p: &Prepared) -> Sides {
    let lhs = ExactPolynomial::product([
        &ExactPolynomial::linear(-(p.n as i64)),
        &p.g.shift(&Rational::one()),
        &p.in_corner_product(None),
    ]);
    let rhs = &p.g * &p.out_corner_product();
    (Side::Poly(lhs), Side::Poly(rhs))
}

fn partial_fraction_corners(p: &Prepared) -> Sides {
    let lhs = p.partial_fraction_lhs();
    let rhs = &(&ExactPolynomial::x() * &p.in_corner_product(None)) - &p.out_corner_product();
    (Side::Poly(lhs), Side::Poly(rhs))
}

fn hook_ratio_sum(p: &Prepared) -> Sides {
    let sum = p
        .removal_hooks()
        .fold(Rational::zero(), |acc, h| acc + Rational::new(p.hook.clone(), h.clone()));
    (Side::Rational(sum), Side::integer(p.n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::outcome::Status;
    use crate::partition::enumerate_partitions;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn lin(a: i64) -> ExactPolynomial {
        ExactPolynomial::linear(a)
    }

    #[test]
    fn g_examples() {
        assert_eq!(g_poly(&Partition::empty()), ExactPolynomial::one());
        assert_eq!(g_poly(&p(&[1])), ExactPolynomial::x());
        assert_eq!(
            g_poly(&p(&[2, 1])),
            ExactPolynomial::product([&lin(1), &lin(-1), &lin(-3)])
        );
    }

    #[test]
    fn g_uses_size_not_length() {
        // (3) has one part but g has three factors: (x+2)(x-2)(x-3).
        let g = g_poly(&p(&[3]));
        assert_eq!(g.degree(), Some(3));
        assert_eq!(g, ExactPolynomial::product([&lin(2), &lin(-2), &lin(-3)]));
    }

    #[test]
    fn quotient_factors_55331() {
        let q = g_quotient_factors(&p(&[5, 5, 3, 3, 1])).unwrap();
        assert_eq!(q.numerator, vec![lin(5), lin(1), lin(-3), lin(-5)]);
        assert_eq!(q.denominator, vec![lin(3), lin(-1), lin(-4)]);
    }

    #[test]
    fn quotient_factors_single_box() {
        let q = g_quotient_factors(&p(&[1])).unwrap();
        assert_eq!(q.numerator, vec![lin(1), lin(-1)]);
        assert_eq!(q.denominator, vec![ExactPolynomial::x()]);
        // (x-1) g(x+1) / g(x) = (x-1)(x+1)/x
        let lhs = &lin(-1) * &g_poly(&p(&[1])).shift_int(1);
        assert_eq!(&lhs * &q.denominator_product(), &g_poly(&p(&[1])) * &q.numerator_product());
        assert!(matches!(
            g_quotient_factors(&Partition::empty()),
            Err(Error::EmptyPartition { .. })
        ));
    }

    #[test]
    fn cancelled_quotient_55331_row_4() {
        let lambda = p(&[5, 5, 3, 3, 1]);
        let q = cancelled_corner_quotient(&lambda, 4).unwrap();
        assert_eq!(q.numerator, vec![lin(5), lin(1), lin(-3), lin(-5)]);
        assert_eq!(q.denominator, vec![lin(3), lin(-2), lin(-4)]);
        let mu = p(&[5, 5, 3, 2, 1]);
        assert_eq!(
            &g_poly(&lambda).shift_int(1) * &q.denominator_product(),
            &g_poly(&mu) * &q.numerator_product()
        );
        assert!(cancelled_corner_quotient(&lambda, 3).is_err());
    }

    #[test]
    fn smallest_difference_expansion() {
        let out = check_identity(IdentityId::DifferenceExpansion, &p(&[1])).unwrap();
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].status, Status::Pass);
        let w = out[0].witness.as_ref().unwrap();
        assert_eq!(w.lhs, Side::Poly(ExactPolynomial::one()));
    }

    #[test]
    fn partial_fraction_numerator_55331() {
        let lambda = p(&[5, 5, 3, 3, 1]);
        let want = ExactPolynomial::from_int_coeffs(&[-75, -38, 17]);
        assert_eq!(partial_fraction_numerator(&lambda).unwrap(), want);
        let out = check_identity(IdentityId::PartialFractionCorners, &lambda).unwrap();
        assert_eq!(out[0].status, Status::Pass);
        assert_eq!(out[0].witness.as_ref().unwrap().rhs, Side::Poly(want));
    }

    #[test]
    fn corner_ratio_55331() {
        let out = check_identity(IdentityId::CornerRatio, &p(&[5, 5, 3, 3, 1])).unwrap();
        assert_eq!(
            out.iter().map(|o| o.corner_index).collect::<Vec<_>>(),
            vec![Some(2), Some(4), Some(5)]
        );
        assert!(out.iter().all(|o| o.passed()));
    }

    #[test]
    fn hook_ratio_sum_is_n() {
        let out = check_identity(IdentityId::HookRatioSum, &p(&[5, 5, 3, 3, 1])).unwrap();
        assert!(out[0].passed());
        assert_eq!(out[0].witness.as_ref().unwrap().lhs, Side::integer(17));
    }

    #[test]
    fn hook_ratios_need_not_be_integers() {
        let ratios = IdentityChecker::new().hook_ratios(&p(&[2, 1])).unwrap();
        let half = Rational::new(BigInt::from(3), BigInt::from(2));
        assert_eq!(ratios, vec![(1, half.clone()), (2, half)]);
    }

    #[test]
    fn rejects_empty_and_oversized() {
        assert!(matches!(
            check_identity(IdentityId::DifferenceExpansion, &Partition::empty()),
            Err(Error::EmptyPartition { .. })
        ));
        let checker = IdentityChecker::new().with_max_n(3);
        assert!(matches!(
            checker.check(IdentityId::HookRatioSum, &p(&[2, 2])),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn every_identity_holds_to_nine() {
        for n in 1..=9 {
            for lambda in enumerate_partitions(n) {
                for id in IdentityId::ALL {
                    for o in check_identity(id, &lambda).unwrap() {
                        assert!(o.passed(), "{o}");
                    }
                }
            }
        }
    }

    #[test]
    fn cleared_difference_vanishes_in_top_degrees() {
        for n in 1..=10 {
            for lambda in enumerate_partitions(n) {
                let poly = IdentityChecker::new()
                    .difference_expansion_cleared(&lambda)
                    .unwrap();
                assert!(poly.coeff(n).is_zero());
                assert!(poly.coeff(n - 1).is_zero());
                assert!(poly.is_zero(), "{lambda}");
            }
        }
    }

    #[test]
    fn epsilon_vanishes_at_shifted_parts() {
        // ε(x) = (g(x+1)-g(x))/H - Σ g_μ(x)/H_μ evaluated pointwise, with no
        // polynomial arithmetic beyond evaluation.
        for n in 2..=9 {
            for lambda in enumerate_partitions(n) {
                let g = g_poly(&lambda);
                let h = Rational::from_integer(BigInt::from(lambda.hook_product()));
                let mus = lambda.corner_removals().unwrap();
                for i in 1..n {
                    let at = rational(i as i64 - lambda.part(i) as i64);
                    let mut eps = (g.eval(&(&at + Rational::one())) - g.eval(&at)) / &h;
                    for mu in &mus {
                        let h_mu = Rational::from_integer(BigInt::from(mu.hook_product()));
                        eps -= g_poly(mu).eval(&at) / h_mu;
                    }
                    assert!(eps.is_zero(), "{lambda} at i={i}");
                }
            }
        }
    }

    #[test]
    fn partial_fraction_forms_share_lhs_and_degrees() {
        for n in 1..=9 {
            for lambda in enumerate_partitions(n) {
                let a = check_identity(IdentityId::PartialFractionG, &lambda).unwrap();
                let b = check_identity(IdentityId::PartialFractionCorners, &lambda).unwrap();
                let wa = a[0].witness.as_ref().unwrap();
                let wb = b[0].witness.as_ref().unwrap();
                assert_eq!(wa.lhs, wb.lhs);
                assert_eq!(wa.rhs, wb.rhs);
                let q = g_quotient_factors(&lambda).unwrap();
                let t = lambda.corners().unwrap().in_corners.len();
                assert_eq!(q.numerator_product().degree(), Some(t + 1));
                assert_eq!(q.denominator_product().degree(), Some(t));
            }
        }
    }

    #[test]
    fn hook_fault_is_detected() {
        let lambda = p(&[2, 1]);
        let fault = Fault::Hook {
            partition: lambda.clone(),
            cell: Cell::new(1, 1),
            delta: 1,
        };
        fault.validate().unwrap();
        let checker = IdentityChecker::new().with_fault(Some(fault));
        let out = checker.check(IdentityId::HookRatioSum, &lambda).unwrap();
        assert_eq!(out[0].status, Status::Fail);
        assert!(out[0].witness.is_some());
    }

    #[test]
    fn g_fault_is_detected() {
        let lambda = p(&[2, 1]);
        let fault = Fault::GFactor {
            partition: lambda.clone(),
            index: 3,
            delta: 1,
        };
        let checker = IdentityChecker::new().with_fault(Some(fault));
        let out = checker.check(IdentityId::DifferenceExpansion, &lambda).unwrap();
        assert_eq!(out[0].status, Status::Fail);
    }

    #[test]
    fn fault_validation() {
        let bad = Fault::Hook {
            partition: p(&[1]),
            cell: Cell::new(1, 1),
            delta: -1,
        };
        assert!(bad.validate().is_err());
        let bad = Fault::GFactor {
            partition: p(&[1]),
            index: 2,
            delta: 1,
        };
        assert!(bad.validate().is_err());
    }
}
