//! Integer partitions and their Ferrers diagrams.
//!
//! Diagrams are stored in English orientation: row 1 is on top and the leg of
//! a hook points down. The French picture (rows growing upward, legs pointing
//! up) is the mirror image, so every hook length and corner is the same under
//! either convention.
//!
//! Rows and columns are 1-based throughout, and `part(i)` returns 0 for
//! `i > len()`, so formulas that run an index past the last part work as
//! written.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Largest size accepted by [`syt_count_bruteforce`] unless a bound is given.
pub const DEFAULT_BRUTEFORCE_BOUND: usize = 10;

/// A weakly decreasing sequence of positive integers.
///
/// Ordering is by size first and then reverse-lexicographic, so that within
/// a fixed size the partition with the largest first part sorts first.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

/// A box of a Ferrers diagram, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::ZeroPart);
        }
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(Error::NotDecreasing {
                prev: w[0],
                next: w[1],
            });
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Parses the canonical text form only: comma-separated parts, or `0`
    /// for the empty partition.
    pub fn parse_canonical(text: &str) -> Result<Self> {
        if text == "0" || text.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = text
            .split(',')
            .map(parse_part)
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `λ_i`, 1-based, zero beyond the last part.
    pub fn part(&self, i: usize) -> usize {
        debug_assert!(i >= 1);
        self.parts.get(i.wrapping_sub(1)).copied().unwrap_or(0)
    }

    /// `|λ|`
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `ℓ(λ)`
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.part(cell.row)
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| Cell::new(r + 1, c)))
    }

    /// `λ'_j = #{ i : λ_i ≥ j }`.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        let parts = (1..=width)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Arm plus leg plus one.
    pub fn hook_length(&self, cell: Cell) -> Result<usize> {
        if !self.contains_cell(cell) {
            return Err(Error::CellOutside {
                cell,
                partition: self.clone(),
            });
        }
        let conj = self.conjugate();
        Ok(self.hook_with_conjugate(&conj, cell))
    }

    fn hook_with_conjugate(&self, conj: &Partition, cell: Cell) -> usize {
        let arm = self.part(cell.row) - cell.col;
        let leg = conj.part(cell.col) - cell.row;
        arm + leg + 1
    }

    /// Hook lengths laid out row by row, matching the diagram.
    pub fn hook_grid(&self) -> Vec<Vec<usize>> {
        let conj = self.conjugate();
        (1..=self.len())
            .map(|r| {
                (1..=self.part(r))
                    .map(|c| self.hook_with_conjugate(&conj, Cell::new(r, c)))
                    .collect()
            })
            .collect()
    }

    /// `H_λ`, the product of all hook lengths. `H_∅ = 1`.
    pub fn hook_product(&self) -> BigUint {
        self.hook_grid()
            .into_iter()
            .flatten()
            .fold(BigUint::one(), |acc, h| acc * h)
    }

    /// `f_λ = n!/H_λ`. Errors if the division is not exact.
    pub fn syt_count(&self) -> Result<BigUint> {
        exact_quotient(factorial(self.size()), self.hook_product())
    }

    /// Partition obtained by deleting the last box of row `row`, if that box
    /// is a corner.
    pub fn remove_corner(&self, row: usize) -> Option<Partition> {
        if row == 0 || row > self.len() || self.part(row) <= self.part(row + 1) {
            return None;
        }
        let mut parts = self.parts.clone();
        parts[row - 1] -= 1;
        if parts[row - 1] == 0 {
            parts.pop();
        }
        Some(Partition { parts })
    }

    /// Partition obtained by appending a box at the end of row `row`, if the
    /// result is still a partition. `row` may be `len() + 1`.
    pub fn add_box(&self, row: usize) -> Option<Partition> {
        if row == 0 || row > self.len() + 1 {
            return None;
        }
        if row > 1 && self.part(row - 1) <= self.part(row) {
            return None;
        }
        let mut parts = self.parts.clone();
        if row == parts.len() + 1 {
            parts.push(1);
        } else {
            parts[row - 1] += 1;
        }
        Some(Partition { parts })
    }

    /// All partitions with one more box, ordered by the row that grew.
    pub fn box_additions(&self) -> Vec<Partition> {
        (1..=self.len() + 1).filter_map(|r| self.add_box(r)).collect()
    }

    /// In-corner and out-corner index sets together with the corner removals.
    pub fn corners(&self) -> Result<CornerData> {
        if self.is_empty() {
            return Err(Error::EmptyPartition {
                operation: "corner_sets",
            });
        }
        // j > ℓ(λ) never satisfies λ_j > λ_{j+1}, so scanning the parts is enough.
        let in_corners: Vec<usize> = (1..=self.len())
            .filter(|&j| self.part(j) > self.part(j + 1))
            .collect();
        let out_corners = std::iter::once(1)
            .chain(in_corners.iter().map(|&i| i + 1))
            .collect();
        let removals = in_corners
            .iter()
            .map(|&i| {
                let mu = self
                    .remove_corner(i)
                    .expect("every in-corner row ends in a removable box");
                (i, mu)
            })
            .collect();
        Ok(CornerData {
            in_corners,
            out_corners,
            removals,
        })
    }

    /// The set `λ\1` of partitions obtained by erasing one corner.
    pub fn corner_removals(&self) -> Result<Vec<Partition>> {
        Ok(self
            .corners()?
            .removals
            .into_iter()
            .map(|(_, mu)| mu)
            .collect())
    }
}

/// `T`, `B` and the removals `λ^{i−}` for `i ∈ T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CornerData {
    /// `T = { j : λ_j > λ_{j+1} }`, increasing.
    pub in_corners: Vec<usize>,
    /// `B = {1} ∪ { i+1 : i ∈ T }`, increasing.
    pub out_corners: Vec<usize>,
    /// `(i, λ^{i−})` for each `i ∈ T`, in the order of `in_corners`.
    pub removals: Vec<(usize, Partition)>,
}

impl CornerData {
    pub fn removal(&self, row: usize) -> Option<&Partition> {
        self.removals
            .iter()
            .find(|(i, _)| *i == row)
            .map(|(_, mu)| mu)
    }
}

fn parse_part(token: &str) -> Result<usize> {
    if token.is_empty() {
        return Err(Error::InvalidToken {
            token: token.to_string(),
            reason: "empty part",
        });
    }
    if token.starts_with('-') {
        return Err(Error::ZeroPart);
    }
    if !token.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::InvalidToken {
            token: token.to_string(),
            reason: "not a decimal integer",
        });
    }
    let value: usize = token.parse().map_err(|_| Error::InvalidToken {
        token: token.to_string(),
        reason: "out of range",
    })?;
    if value == 0 {
        return Err(Error::ZeroPart);
    }
    Ok(value)
}

/// Parses `5,5,3,3,1`, the compact digit form `55331`, or `0`/empty for the
/// empty partition.
///
/// A string without commas and with more than one digit is read as compact
/// digits when every digit is nonzero and the digits weakly decrease;
/// otherwise it is read as a single part. So `55331` is `(5,5,3,3,1)` and
/// `12` is `(12)`, while `21` is `(2,1)`.
pub fn parse_partition(text: &str) -> Result<Partition> {
    let text = text.trim();
    if text.contains(',') || text.len() <= 1 || text.starts_with('-') {
        return Partition::parse_canonical(text);
    }
    if !text.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::InvalidToken {
            token: text.to_string(),
            reason: "not a decimal integer",
        });
    }
    let digits: Vec<usize> = text.bytes().map(|b| usize::from(b - b'0')).collect();
    if !digits.contains(&0) && digits.windows(2).all(|w| w[0] >= w[1]) {
        return Partition::new(digits);
    }
    Partition::parse_canonical(text)
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_partition(s)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("0");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({self})")
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl serde::Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        Partition::parse_canonical(&text).map_err(serde::de::Error::custom)
    }
}

/// Every partition of `n` exactly once, largest first part first.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill_partitions(n, n, &mut current, &mut out);
    out
}

fn fill_partitions(
    remaining: usize,
    max_part: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        current.push(part);
        fill_partitions(remaining - part, part, current, out);
        current.pop();
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

fn exact_quotient(num: BigUint, den: BigUint) -> Result<BigUint> {
    let (q, r) = num.div_rem(&den);
    if !r.is_zero() {
        return Err(Error::Inconsistent(format!(
            "{num} is not divisible by {den}"
        )));
    }
    Ok(q)
}

/// Exact division with a divisibility check, for callers holding their own
/// numerator and hook product.
pub fn divide_exact(num: BigUint, den: BigUint) -> Result<BigUint> {
    exact_quotient(num, den)
}

/// Counts standard Young tableaux by placing the largest entry in each corner
/// in turn and recursing, without memoization. Only for small shapes.
pub fn syt_count_bruteforce(lambda: &Partition, bound: usize) -> Result<BigUint> {
    if lambda.size() > bound {
        return Err(Error::BoundExceeded {
            what: "syt_count_bruteforce",
            n: lambda.size(),
            bound,
        });
    }
    fn count(lambda: &Partition) -> u64 {
        if lambda.is_empty() {
            return 1;
        }
        (1..=lambda.len())
            .filter_map(|r| lambda.remove_corner(r))
            .map(|mu| count(&mu))
            .sum()
    }
    Ok(BigUint::from(count(lambda)))
}

/// `f_λ` from the branching rule `f_λ = Σ_{μ∈λ\1} f_μ`, memoized. Does not
/// touch hook lengths.
pub fn syt_count_by_branching(lambda: &Partition) -> BigUint {
    fn go(lambda: &Partition, memo: &mut HashMap<Partition, BigUint>) -> BigUint {
        if lambda.is_empty() {
            return BigUint::one();
        }
        if let Some(v) = memo.get(lambda) {
            return v.clone();
        }
        let total = (1..=lambda.len())
            .filter_map(|r| lambda.remove_corner(r))
            .fold(BigUint::zero(), |acc, mu| acc + go(&mu, memo));
        memo.insert(lambda.clone(), total.clone());
        total
    }
    go(lambda, &mut HashMap::new())
}
