//! Symmetric functions in the Schur basis, multiplication by `p_1` through
//! Pieri's rule, and the generating identity
//!
//! ```text
//! Σ_{k=0}^{n} C(x+k−1, k) p_1^k e_{n−k} = Σ_{λ⊢n} g_λ(x+n)/H_λ s_λ
//! ```
//!
//! with coefficients in `ℚ[x]`. Schur functions are linearly independent, so
//! both sides are compared coefficient by coefficient.
//!
//! A monomial-basis oracle (Kostka numbers from semistandard tableaux, and
//! `p_1`-multiplication by brute force over exponent vectors) cross-checks
//! the Schur-basis computation for small degrees.

use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;
use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::outcome::{CheckId, SchurCheck, Side, VerificationOutcome};
use crate::partition::{enumerate_partitions, Partition};
use crate::poly::{rational_to_string, ExactPolynomial, Rational};
use crate::shifted::g_poly;

/// Default bound on `n` for the generating identity and its recurrences.
pub const DEFAULT_THEOREM_BOUND: usize = 9;
/// Default bound on `n` for the Kostka/monomial oracle.
pub const DEFAULT_ORACLE_BOUND: usize = 8;

/// Exact coefficient ring for symmetric-function expansions.
pub trait Coefficient: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn from_integer(n: BigInt) -> Self;
    /// Report form of the coefficient.
    fn serialize(&self) -> String;

    fn one() -> Self {
        Self::from_integer(BigInt::one())
    }
}

impl Coefficient for Rational {
    fn zero() -> Self {
        Zero::zero()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn from_integer(n: BigInt) -> Self {
        Rational::from_integer(n)
    }

    fn serialize(&self) -> String {
        rational_to_string(self)
    }
}

impl Coefficient for ExactPolynomial {
    fn zero() -> Self {
        ExactPolynomial::zero()
    }

    fn is_zero(&self) -> bool {
        ExactPolynomial::is_zero(self)
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn from_integer(n: BigInt) -> Self {
        ExactPolynomial::constant(Rational::from_integer(n))
    }

    fn serialize(&self) -> String {
        ExactPolynomial::serialize(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SchurBasis;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MonomialBasis;

/// A homogeneous finite linear combination of basis elements indexed by
/// partitions. Zero coefficients are never stored.
pub struct Expansion<B, R> {
    terms: BTreeMap<Partition, R>,
    basis: PhantomData<B>,
}

impl<B, R: Clone> Clone for Expansion<B, R> {
    fn clone(&self) -> Self {
        Expansion {
            terms: self.terms.clone(),
            basis: PhantomData,
        }
    }
}

impl<B, R: PartialEq> PartialEq for Expansion<B, R> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<B, R: fmt::Debug> fmt::Debug for Expansion<B, R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

pub type SchurExpansion<R> = Expansion<SchurBasis, R>;
pub type MonomialExpansion<R> = Expansion<MonomialBasis, R>;

impl<B, R: Coefficient> Default for Expansion<B, R> {
    fn default() -> Self {
        Expansion {
            terms: BTreeMap::new(),
            basis: PhantomData,
        }
    }
}

impl<B, R: Coefficient> Expansion<B, R> {
    pub fn new() -> Self {
        Self::default()
    }

    /// The single basis element indexed by `λ`, with coefficient 1.
    pub fn unit(lambda: Partition) -> Self {
        let mut e = Self::new();
        e.terms.insert(lambda, R::one());
        e
    }

    /// Builds an expansion from `(index, coefficient)` pairs, summing repeats.
    pub fn from_terms<I>(terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, R)>,
    {
        let mut e = Self::new();
        for (lambda, c) in terms {
            e.check_degree(&lambda)?;
            e.accumulate(lambda, &c);
        }
        Ok(e)
    }

    fn check_degree(&self, lambda: &Partition) -> Result<()> {
        match self.degree() {
            Some(d) if d != lambda.size() => Err(Error::DegreeMismatch {
                left: d,
                right: lambda.size(),
            }),
            _ => Ok(()),
        }
    }

    fn accumulate(&mut self, lambda: Partition, c: &R) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.get(&lambda) {
            Some(old) => old.add(c),
            None => c.clone(),
        };
        if sum.is_zero() {
            self.terms.remove(&lambda);
        } else {
            self.terms.insert(lambda, sum);
        }
    }

    /// Common size of the index partitions; `None` when empty.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next().map(Partition::size)
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, lambda: &Partition) -> Option<&R> {
        self.terms.get(lambda)
    }

    /// Terms in reverse-lexicographic order of the index.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &R)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if let (Some(a), Some(b)) = (self.degree(), other.degree()) {
            if a != b {
                return Err(Error::DegreeMismatch { left: a, right: b });
            }
        }
        let mut out = self.clone();
        for (lambda, c) in &other.terms {
            out.accumulate(lambda.clone(), c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &R) -> Self {
        let mut out = Self::new();
        for (lambda, a) in &self.terms {
            out.accumulate(lambda.clone(), &c.mul(a));
        }
        out
    }

    pub fn map_coefficients<F: Fn(&R) -> R>(&self, f: F) -> Self {
        let mut out = Self::new();
        for (lambda, a) in &self.terms {
            out.accumulate(lambda.clone(), &f(a));
        }
        out
    }

    /// `[{"partition": "a,b,c", "coefficient": ...}, ...]`, reverse-lex.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Term {
            partition: String,
            coefficient: String,
        }
        let terms: Vec<Term> = self
            .terms
            .iter()
            .map(|(lambda, c)| Term {
                partition: lambda.to_string(),
                coefficient: c.serialize(),
            })
            .collect();
        serde_json::to_string(&terms).expect("string-only terms always serialize")
    }
}

/// `s_λ` with coefficient 1.
pub fn schur_unit<R: Coefficient>(lambda: Partition) -> SchurExpansion<R> {
    SchurExpansion::unit(lambda)
}

/// `p_1 · a`: each `s_μ` goes to the sum of `s_λ` over all `λ` obtained from
/// `μ` by adding one box.
pub fn pieri_p1<R: Coefficient>(a: &SchurExpansion<R>) -> SchurExpansion<R> {
    let mut out = SchurExpansion::new();
    for (mu, c) in a.terms() {
        for lambda in mu.box_additions() {
            out.accumulate(lambda, c);
        }
    }
    out
}

fn column(k: usize) -> Partition {
    Partition::new(vec![1; k]).expect("a column of ones is a partition")
}

/// `e_k = s_{(1^k)}`.
pub fn elementary_as_schur<R: Coefficient>(k: usize) -> SchurExpansion<R> {
    SchurExpansion::unit(column(k))
}

/// `L_n(x) = Σ_{k=0}^{n} C(x+k−1, k) p_1^k e_{n−k}` in the Schur basis.
pub fn lhs_1_6(n: usize) -> SchurExpansion<ExactPolynomial> {
    let mut total = SchurExpansion::new();
    for k in 0..=n {
        let mut term = elementary_as_schur::<ExactPolynomial>(n - k);
        for _ in 0..k {
            term = pieri_p1(&term);
        }
        total = total
            .add(&term.scale(&ExactPolynomial::rising_binomial(k)))
            .expect("every term is homogeneous of degree n");
    }
    total
}

/// `R_n(x) = Σ_{λ⊢n} g_λ(x+n)/H_λ s_λ`.
pub fn rhs_1_6(n: usize) -> SchurExpansion<ExactPolynomial> {
    let terms = enumerate_partitions(n).into_iter().map(|lambda| {
        let h = Rational::from_integer(BigInt::from(lambda.hook_product()));
        let c = g_poly(&lambda)
            .shift_int(n as i64)
            .scale(&(<Rational as One>::one() / h));
        (lambda, c)
    });
    SchurExpansion::from_terms(terms).expect("all partitions of n have size n")
}

/// Substitutes `x → x + a` in every coefficient.
pub fn shift_coefficients<B>(
    a: &Expansion<B, ExactPolynomial>,
    by: i64,
) -> Expansion<B, ExactPolynomial> {
    a.map_coefficients(|c| c.shift_int(by))
}

fn check_bound(what: &'static str, n: usize, bound: usize) -> Result<()> {
    if n > bound {
        return Err(Error::BoundExceeded { what, n, bound });
    }
    Ok(())
}

fn outcome(check: SchurCheck, n: usize, lhs: String, rhs: String, start: Instant) -> VerificationOutcome {
    let mut o = VerificationOutcome::from_sides(
        CheckId::Schur(check),
        None,
        n,
        None,
        Side::Json(lhs),
        Side::Json(rhs),
        false,
    );
    o.elapsed = start.elapsed();
    o
}

/// Structural equality of [`lhs_1_6`] and [`rhs_1_6`].
pub fn check_theorem_1_2(n: usize, bound: usize) -> Result<VerificationOutcome> {
    check_bound("check_theorem_1_2", n, bound)?;
    let start = Instant::now();
    let lhs = lhs_1_6(n);
    let rhs = rhs_1_6(n);
    Ok(outcome(SchurCheck::Generating, n, lhs.to_json(), rhs.to_json(), start))
}

/// `R_n(x) = R_n(x−1) + p_1 R_{n−1}(x)` and the same recurrence for `L_n`.
/// Returns the right-side outcome first.
pub fn check_recurrences_3(n: usize, bound: usize) -> Result<Vec<VerificationOutcome>> {
    if n == 0 {
        return Err(Error::InvalidConfig("recurrences start at n = 1".into()));
    }
    check_bound("check_recurrences_3", n, bound)?;
    let recurrence = |check: SchurCheck, side: fn(usize) -> SchurExpansion<ExactPolynomial>| {
        let start = Instant::now();
        let current = side(n);
        let rebuilt = shift_coefficients(&current, -1)
            .add(&pieri_p1(&side(n - 1)))
            .expect("both summands have degree n");
        outcome(check, n, current.to_json(), rebuilt.to_json(), start)
    };
    Ok(vec![
        recurrence(SchurCheck::RightRecurrence, rhs_1_6),
        recurrence(SchurCheck::LeftRecurrence, lhs_1_6),
    ])
}

/// Number of semistandard tableaux of shape `λ` and content `μ`, by
/// placing the entries `1, 2, …` one horizontal strip at a time.
pub fn kostka(lambda: &Partition, mu: &Partition, bound: usize) -> Result<BigUint> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch {
            left: lambda.clone(),
            right: mu.clone(),
        });
    }
    check_bound("kostka", lambda.size(), bound)?;
    let shape = lambda.parts().to_vec();
    let start = vec![0; shape.len()];
    Ok(BigUint::from(count_strip_chains(&shape, &start, mu.parts())))
}

fn count_strip_chains(shape: &[usize], current: &[usize], content: &[usize]) -> u64 {
    let Some((&m, rest)) = content.split_first() else {
        return u64::from(current == shape);
    };
    let mut total = 0;
    let mut next = current.to_vec();
    add_strip(shape, current, 0, m, &mut next, &mut |grown| {
        total += count_strip_chains(shape, grown, rest);
    });
    total
}

/// Enumerates every way to add a horizontal strip of `remaining` boxes to
/// `current`, staying inside `shape`, row by row from `row` on.
fn add_strip(
    shape: &[usize],
    current: &[usize],
    row: usize,
    remaining: usize,
    next: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]),
) {
    if remaining == 0 {
        visit(next);
        return;
    }
    if row == shape.len() {
        return;
    }
    // A horizontal strip never puts two new boxes in one column, so row r
    // may grow at most to the old length of row r-1.
    let ceiling = if row == 0 {
        shape[0]
    } else {
        shape[row].min(current[row - 1])
    };
    let room = ceiling.saturating_sub(current[row]);
    for add in 0..=room.min(remaining) {
        next[row] = current[row] + add;
        add_strip(shape, current, row + 1, remaining - add, next, visit);
    }
    next[row] = current[row];
}

/// `s_λ = Σ_μ K_{λμ} m_μ`, extended linearly.
pub fn to_monomial<R: Coefficient>(
    a: &SchurExpansion<R>,
    bound: usize,
) -> Result<MonomialExpansion<R>> {
    let Some(n) = a.degree() else {
        return Ok(MonomialExpansion::new());
    };
    check_bound("to_monomial", n, bound)?;
    let shapes = enumerate_partitions(n);
    let mut out = MonomialExpansion::new();
    for (lambda, c) in a.terms() {
        for mu in &shapes {
            let k = kostka(lambda, mu, bound)?;
            if !k.is_zero() {
                out.accumulate(mu.clone(), &c.mul(&R::from_integer(BigInt::from(k))));
            }
        }
    }
    Ok(out)
}

/// `m_1 · a` in the monomial basis, by brute force: for every exponent
/// vector in the orbit of each `μ` (in `n + 1` variables) and every variable,
/// count the products that land on a sorted exponent vector.
pub fn monomial_times_p1<R: Coefficient>(a: &MonomialExpansion<R>) -> MonomialExpansion<R> {
    let Some(n) = a.degree() else {
        return MonomialExpansion::new();
    };
    let vars = n + 1;
    let mut out = MonomialExpansion::new();
    for (mu, c) in a.terms() {
        let mut counts: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
        let mut exps = mu.parts().to_vec();
        exps.resize(vars, 0);
        exps.sort_unstable();
        loop {
            for j in 0..vars {
                let mut product = exps.clone();
                product[j] += 1;
                if product.windows(2).all(|w| w[0] >= w[1]) {
                    *counts.entry(product).or_default() += 1;
                }
            }
            if !next_permutation(&mut exps) {
                break;
            }
        }
        for (exps, count) in counts {
            let parts: Vec<usize> = exps.into_iter().filter(|&e| e > 0).collect();
            let nu = Partition::new(parts).expect("sorted exponent vector");
            out.accumulate(nu, &c.mul(&R::from_integer(BigInt::from(count))));
        }
    }
    out
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v.iter().rposition(|&x| x > v[i]).expect("v[i+1] > v[i]");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// `L_n(x)` built directly in monomials: `e_j = m_{(1^j)}` and repeated
/// [`monomial_times_p1`]. No Schur functions are involved.
pub fn lhs_1_6_monomial(n: usize) -> MonomialExpansion<ExactPolynomial> {
    let mut total = MonomialExpansion::new();
    for k in 0..=n {
        let mut term = MonomialExpansion::<ExactPolynomial>::unit(column(n - k));
        for _ in 0..k {
            term = monomial_times_p1(&term);
        }
        total = total
            .add(&term.scale(&ExactPolynomial::rising_binomial(k)))
            .expect("every term is homogeneous of degree n");
    }
    total
}

/// Compares `to_monomial(rhs_1_6(n))` with [`lhs_1_6_monomial`], and also
/// requires `to_monomial(lhs_1_6(n))` to agree.
pub fn check_monomial_1_6(n: usize, bound: usize) -> Result<VerificationOutcome> {
    check_bound("check_monomial_1_6", n, bound)?;
    let start = Instant::now();
    let direct = lhs_1_6_monomial(n);
    let via_lhs = to_monomial(&lhs_1_6(n), bound)?;
    let via_rhs = to_monomial(&rhs_1_6(n), bound)?;
    let lhs = direct.to_json();
    let rhs = if via_lhs == via_rhs {
        via_rhs.to_json()
    } else {
        format!(
            "{{\"lhs_1_6\":{},\"rhs_1_6\":{}}}",
            via_lhs.to_json(),
            via_rhs.to_json()
        )
    };
    Ok(outcome(SchurCheck::MonomialCrossCheck, n, lhs, rhs, start))
}
