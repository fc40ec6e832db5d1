//! Signed sequences, partitions in the square, and their bijection.
//!
//! The alphabet is `⟨n⟩ = {-n,…,-1,1,…,n}` ordered by integer value.
//! A length-`n` strictly increasing sequence over `⟨n⟩` corresponds to a
//! partition inside the `n × n` square via a lattice path whose `i`-th step
//! (stepping through `⟨n⟩` in increasing order) is vertical exactly when `i`
//! belongs to the sequence.  Sequences fixed by the transpose are the
//! *admissible* ones; their partitions are symmetric about the diagonal.

use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Mul, Neg};

/// A sign, `+1` or `-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    /// Sign determined by the parity of `k`.
    pub fn from_parity(k: usize) -> Self {
        if k % 2 == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+1"),
            Sign::Minus => write!(f, "-1"),
        }
    }
}

/// Sign of the permutation sorting `items` into increasing order.
///
/// Items must be pairwise distinct; the sign is the parity of the inversion
/// count, by explicit counting.
pub fn sort_sign(items: &[i64]) -> Sign {
    let mut inversions = 0usize;
    for i in 0..items.len() {
        for j in (i + 1)..items.len() {
            debug_assert_ne!(items[i], items[j]);
            if items[i] > items[j] {
                inversions += 1;
            }
        }
    }
    Sign::from_parity(inversions)
}

/// A strictly increasing sequence over the alphabet `⟨n⟩`.
///
/// Length-`n` ("full") sequences index Plücker coordinates and partitions;
/// shorter sequences index wedge-basis vectors of lower degree.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SignedSequence {
    n: u32,
    entries: Vec<i32>,
}

impl SignedSequence {
    /// General constructor: a strictly increasing `k`-subset of `⟨n⟩`.
    pub fn new(n: u32, entries: Vec<i32>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Invalid("alphabet bound n must be positive".into()));
        }
        for &e in &entries {
            if e == 0 || e.unsigned_abs() > n {
                return Err(Error::Invalid(format!("entry {e} outside ⟨{n}⟩")));
            }
        }
        if !entries.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::Invalid(format!(
                "entries {entries:?} not strictly increasing"
            )));
        }
        Ok(SignedSequence { n, entries })
    }

    /// Full-length constructor: exactly `n` entries.
    pub fn full(n: u32, entries: Vec<i32>) -> Result<Self> {
        if entries.len() != n as usize {
            return Err(Error::Invalid(format!(
                "expected {n} entries, got {}",
                entries.len()
            )));
        }
        Self::new(n, entries)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.entries.len() == self.n as usize
    }

    pub fn entries(&self) -> &[i32] {
        &self.entries
    }

    pub fn contains(&self, e: i32) -> bool {
        self.entries.binary_search(&e).is_ok()
    }

    /// Position of `e` within `⟨n⟩` listed increasingly, 1-based.
    fn rank(n: u32, e: i32) -> i64 {
        let n = n as i64;
        let e = e as i64;
        if e < 0 {
            e + n + 1
        } else {
            e + n
        }
    }

    fn unrank(n: u32, r: i64) -> i32 {
        let n = n as i64;
        if r <= n {
            (r - n - 1) as i32
        } else {
            (r - n) as i32
        }
    }

    /// Positive entries, increasing.
    pub fn positive_part(&self) -> Vec<i32> {
        self.entries.iter().copied().filter(|&e| e > 0).collect()
    }

    /// Negative entries, increasing.
    pub fn negative_part(&self) -> Vec<i32> {
        self.entries.iter().copied().filter(|&e| e < 0).collect()
    }

    pub fn negatives_count(&self) -> usize {
        self.entries.iter().filter(|&&e| e < 0).count()
    }

    /// The partition bounded by the coordinate axes and the lattice path of
    /// this sequence.  Requires a full sequence.
    pub fn to_partition(&self) -> Partition {
        assert!(self.is_full(), "partition of a non-full sequence");
        let n = self.n as usize;
        let mut rows = vec![0u32; n];
        for (j, &e) in self.entries.iter().enumerate() {
            // the (j+1)-th vertical step bounds row n-j from the top
            let horizontal_before = Self::rank(self.n, e) - (j as i64 + 1);
            rows[n - 1 - j] = horizontal_before as u32;
        }
        Partition::new(self.n, rows).expect("path region is a partition")
    }

    /// Transpose: complement of the negated entry set; its partition is the
    /// diagonal reflection of this sequence's partition.
    pub fn transpose(&self) -> SignedSequence {
        assert!(self.is_full(), "transpose of a non-full sequence");
        let negated: BTreeSet<i32> = self.entries.iter().map(|&e| -e).collect();
        let mut out = Vec::with_capacity(self.n as usize);
        for r in 1..=(2 * self.n as i64) {
            let e = Self::unrank(self.n, r);
            if !negated.contains(&e) {
                out.push(e);
            }
        }
        SignedSequence {
            n: self.n,
            entries: out,
        }
    }

    /// Admissible means `i ∈ α ⟺ -i ∉ α`, equivalently `α = α^t`.
    pub fn is_admissible(&self) -> bool {
        if !self.is_full() {
            return false;
        }
        (1..=self.n as i32).all(|i| self.contains(i) != self.contains(-i))
    }

    /// The sign `σ_α = sgn(α_+^c, α_+) · sgn(α_-, α_-^c)`.
    ///
    /// Each block is listed by increasing absolute value; the concatenated
    /// lists are fed to an explicit inversion count.  `α_+^c` and `α_-^c` are
    /// the complements inside `[n]` of the positive entries and of the
    /// absolute values of the negative entries.
    pub fn sigma(&self) -> Sign {
        assert!(self.is_full(), "sigma of a non-full sequence");
        let pos: Vec<i64> = self.positive_part().iter().map(|&e| e as i64).collect();
        let mut neg_abs: Vec<i64> = self.negative_part().iter().map(|&e| (-e) as i64).collect();
        neg_abs.sort_unstable();
        let complement = |part: &[i64]| -> Vec<i64> {
            (1..=self.n as i64).filter(|v| !part.contains(v)).collect()
        };
        let mut first = complement(&pos);
        first.extend_from_slice(&pos);
        let mut second = neg_abs.clone();
        second.extend(complement(&neg_abs));
        sort_sign(&first) * sort_sign(&second)
    }

    /// Northeast: the below-diagonal part of the partition, reflected, fits
    /// inside the above-diagonal part.
    pub fn is_northeast(&self) -> bool {
        self.to_partition().is_northeast()
    }

    /// Southwest: the transpose is Northeast.
    pub fn is_southwest(&self) -> bool {
        self.transpose().is_northeast()
    }

    /// Componentwise comparison `α_i ≤ β_i`; both sequences full, same `n`.
    pub fn componentwise_leq(&self, other: &SignedSequence) -> bool {
        assert_eq!(self.n, other.n);
        assert_eq!(self.len(), other.len());
        self.entries
            .iter()
            .zip(other.entries.iter())
            .all(|(a, b)| a <= b)
    }

    /// Componentwise minimum (lattice meet within one level).
    pub fn meet(&self, other: &SignedSequence) -> SignedSequence {
        assert_eq!(self.n, other.n);
        assert_eq!(self.len(), other.len());
        let entries = self
            .entries
            .iter()
            .zip(other.entries.iter())
            .map(|(a, b)| *a.min(b))
            .collect();
        SignedSequence {
            n: self.n,
            entries,
        }
    }

    /// Componentwise maximum (lattice join within one level).
    pub fn join(&self, other: &SignedSequence) -> SignedSequence {
        assert_eq!(self.n, other.n);
        assert_eq!(self.len(), other.len());
        let entries = self
            .entries
            .iter()
            .zip(other.entries.iter())
            .map(|(a, b)| *a.max(b))
            .collect();
        SignedSequence {
            n: self.n,
            entries,
        }
    }

    /// `π(α) = (α ∧ α^t, α ∨ α^t)`, the admissible pair under this sequence.
    pub fn pi(&self) -> AdmissiblePair {
        let t = self.transpose();
        AdmissiblePair {
            lower: self.meet(&t),
            upper: self.join(&t),
        }
    }

    /// Parse either the bar form (`\bar4\bar213`, digits concatenated) or the
    /// comma form (`\bar12,\bar3,4`); `n` is the number of entries.
    pub fn parse_full(s: &str) -> Result<SignedSequence> {
        let entries = parse_entries(s)?;
        let n = entries.len() as u32;
        if n == 0 {
            return Err(Error::Invalid("empty sequence".into()));
        }
        SignedSequence::full(n, entries)
    }

    /// Parse with an explicit alphabet bound (accepts shorter subsets).
    pub fn parse_with_n(s: &str, n: u32) -> Result<SignedSequence> {
        SignedSequence::new(n, parse_entries(s)?)
    }
}

fn parse_entries(s: &str) -> Result<Vec<i32>> {
    let s = s.trim();
    let mut entries = Vec::new();
    if s.contains(',') {
        for tok in s.split(',') {
            let tok = tok.trim();
            let (neg, digits) = if let Some(rest) = tok.strip_prefix("\\bar") {
                (true, rest)
            } else if let Some(rest) = tok.strip_prefix('-') {
                (true, rest)
            } else {
                (false, tok)
            };
            let v: i32 = digits
                .parse()
                .map_err(|_| Error::Invalid(format!("bad token {tok:?}")))?;
            entries.push(if neg { -v } else { v });
        }
    } else {
        let mut rest = s;
        while !rest.is_empty() {
            let (neg, tail) = if let Some(t) = rest.strip_prefix("\\bar") {
                (true, t)
            } else {
                (false, rest)
            };
            let c = tail
                .chars()
                .next()
                .ok_or_else(|| Error::Invalid(format!("dangling bar in {s:?}")))?;
            let d = c
                .to_digit(10)
                .ok_or_else(|| Error::Invalid(format!("bad character {c:?} in {s:?}")))?;
            entries.push(if neg { -(d as i32) } else { d as i32 });
            rest = &tail[c.len_utf8()..];
        }
    }
    Ok(entries)
}

impl fmt::Display for SignedSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n <= 9 {
            for &e in &self.entries {
                if e < 0 {
                    write!(f, "\\bar{}", -e)?;
                } else {
                    write!(f, "{e}")?;
                }
            }
            Ok(())
        } else {
            let parts: Vec<String> = self
                .entries
                .iter()
                .map(|&e| {
                    if e < 0 {
                        format!("\\bar{}", -e)
                    } else {
                        format!("{e}")
                    }
                })
                .collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl fmt::Debug for SignedSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A partition inside the `n × n` square: weakly decreasing row lengths.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Partition {
    n: u32,
    rows: Vec<u32>,
}

impl Partition {
    /// Rows are validated weakly decreasing, at most `n` of them, each `≤ n`.
    /// Trailing zeros are stripped.
    pub fn new(n: u32, mut rows: Vec<u32>) -> Result<Self> {
        while rows.last() == Some(&0) {
            rows.pop();
        }
        if rows.len() > n as usize {
            return Err(Error::Invalid(format!(
                "partition {rows:?} has more than {n} rows"
            )));
        }
        if rows.iter().any(|&r| r > n) {
            return Err(Error::Invalid(format!(
                "partition {rows:?} exceeds width {n}"
            )));
        }
        if !rows.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::Invalid(format!("rows {rows:?} not decreasing")));
        }
        Ok(Partition { n, rows })
    }

    pub fn empty(n: u32) -> Self {
        Partition { n, rows: vec![] }
    }

    /// The full `n × n` square.
    pub fn square(n: u32) -> Self {
        Partition {
            n,
            rows: vec![n; n as usize],
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    /// Length of row `i` (1-based); zero beyond the last row.
    pub fn row(&self, i: u32) -> u32 {
        if i == 0 || i as usize > self.rows.len() {
            0
        } else {
            self.rows[i as usize - 1]
        }
    }

    /// Number of boxes.
    pub fn size(&self) -> u32 {
        self.rows.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// True when every box of `other` is a box of `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        (1..=other.rows.len() as u32).all(|i| self.row(i) >= other.row(i))
    }

    pub fn has_box(&self, r: u32, c: u32) -> bool {
        r >= 1 && c >= 1 && self.row(r) >= c
    }

    /// All boxes `(row, col)`, 1-based.
    pub fn boxes(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for (i, &len) in self.rows.iter().enumerate() {
            for c in 1..=len {
                out.push((i as u32 + 1, c));
            }
        }
        out
    }

    /// Column lengths (diagonal reflection).
    pub fn conjugate(&self) -> Partition {
        let mut rows = Vec::new();
        let mut c = 1;
        loop {
            let len = self.rows.iter().filter(|&&r| r >= c).count() as u32;
            if len == 0 {
                break;
            }
            rows.push(len);
            c += 1;
        }
        Partition { n: self.n, rows }
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.conjugate().rows
    }

    /// Side of the largest square subpartition `(p^p) ⊆ λ`.
    pub fn durfee(&self) -> u32 {
        let mut p = 0;
        while self.row(p + 1) >= p + 1 {
            p += 1;
        }
        p
    }

    /// The sequence whose lattice path bounds this partition.
    pub fn to_sequence(&self) -> SignedSequence {
        let n = self.n as usize;
        let mut entries = Vec::with_capacity(n);
        for j in 1..=n {
            // inverse of the path construction: the j-th vertical step
            let r = self.row((n - j + 1) as u32) as i64 + j as i64;
            entries.push(SignedSequence::unrank(self.n, r));
        }
        SignedSequence {
            n: self.n,
            entries,
        }
    }

    /// Northeast test on box halves: reflected strictly-below-diagonal boxes
    /// must lie in the partition.
    pub fn is_northeast(&self) -> bool {
        for (r, c) in self.boxes() {
            if r > c && !self.has_box(c, r) {
                return false;
            }
        }
        true
    }

    pub fn is_southwest(&self) -> bool {
        self.conjugate().is_northeast()
    }

    /// Strict partition of a symmetric diagram: left-justify the rows that
    /// remain after removing every box strictly below the diagonal.
    pub fn strict(&self) -> Result<Vec<u32>> {
        if !self.is_symmetric() {
            return Err(Error::Domain(format!(
                "strict form requires a symmetric partition, got {self}"
            )));
        }
        let mut out = Vec::new();
        for i in 1..=self.rows.len() as u32 {
            if self.row(i) >= i {
                out.push(self.row(i) - i + 1);
            }
        }
        Ok(out)
    }

    /// Inverse of [`Partition::strict`].
    pub fn from_strict(n: u32, strict: &[u32]) -> Result<Partition> {
        if !strict.windows(2).all(|w| w[0] > w[1]) {
            return Err(Error::Invalid(format!(
                "strict rows {strict:?} not strictly decreasing"
            )));
        }
        let mut boxes: BTreeSet<(u32, u32)> = BTreeSet::new();
        for (i, &len) in strict.iter().enumerate() {
            let r = i as u32 + 1;
            for c in r..(r + len) {
                boxes.insert((r, c));
                boxes.insert((c, r));
            }
        }
        partition_from_boxes(n, &boxes)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parse `[3,2,1]`, `3,2,1` or `[]`.
pub fn parse_partition(s: &str, n: u32) -> Result<Partition> {
    let s = s.trim();
    let inner = s
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .unwrap_or(s);
    if inner.trim().is_empty() {
        return Ok(Partition::empty(n));
    }
    let rows = inner
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| Error::Invalid(format!("bad row {t:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Partition::new(n, rows)
}

/// Rebuild a partition from an explicit box set; errors if the set is not
/// left-justified and top-justified.
pub fn partition_from_boxes(n: u32, boxes: &BTreeSet<(u32, u32)>) -> Result<Partition> {
    let mut rows = Vec::new();
    let max_row = boxes.iter().map(|&(r, _)| r).max().unwrap_or(0);
    for r in 1..=max_row {
        let len = boxes.iter().filter(|&&(br, _)| br == r).count() as u32;
        for c in 1..=len {
            if !boxes.contains(&(r, c)) {
                return Err(Error::Domain(format!(
                    "box set is not left-justified in row {r}"
                )));
            }
        }
        rows.push(len);
    }
    Partition::new(n, rows)
}

/// An admissible pair: two admissible sequences with `lower ≤ upper` and the
/// same number of negative entries (equivalently, equal Durfee squares).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct AdmissiblePair {
    lower: SignedSequence,
    upper: SignedSequence,
}

impl AdmissiblePair {
    pub fn new(lower: SignedSequence, upper: SignedSequence) -> Result<Self> {
        if lower.n() != upper.n() {
            return Err(Error::Domain("mismatched alphabet bounds".into()));
        }
        if !lower.is_admissible() || !upper.is_admissible() {
            return Err(Error::Domain(format!(
                "pair ({lower}, {upper}) has a non-admissible member"
            )));
        }
        if !lower.componentwise_leq(&upper) {
            return Err(Error::Domain(format!("{lower} is not ≤ {upper}")));
        }
        if lower.negatives_count() != upper.negatives_count() {
            return Err(Error::Domain(format!(
                "({lower}, {upper}) differ in negative count"
            )));
        }
        Ok(AdmissiblePair { lower, upper })
    }

    pub fn lower(&self) -> &SignedSequence {
        &self.lower
    }

    pub fn upper(&self) -> &SignedSequence {
        &self.upper
    }

    pub fn is_diagonal(&self) -> bool {
        self.lower == self.upper
    }
}

impl fmt::Display for AdmissiblePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.lower, self.upper)
    }
}

/// Connected components (edge adjacency) of a set of boxes.
fn components(boxes: &BTreeSet<(u32, u32)>) -> Vec<BTreeSet<(u32, u32)>> {
    let mut remaining = boxes.clone();
    let mut out = Vec::new();
    while let Some(&start) = remaining.iter().next() {
        let mut comp = BTreeSet::new();
        let mut stack = vec![start];
        remaining.remove(&start);
        while let Some((r, c)) = stack.pop() {
            comp.insert((r, c));
            let mut neighbors = vec![(r + 1, c), (r, c + 1)];
            if r > 1 {
                neighbors.push((r - 1, c));
            }
            if c > 1 {
                neighbors.push((r, c - 1));
            }
            for nb in neighbors {
                if remaining.remove(&nb) {
                    stack.push(nb);
                }
            }
        }
        out.push(comp);
    }
    out
}

/// Enumerate the fiber of `π` over an admissible pair.
///
/// Each element is obtained by choosing, for every connected component of the
/// above-diagonal boxes between the two paths, either the component or its
/// reflection; candidates are validated by re-applying `π`.
pub fn fiber(pair: &AdmissiblePair) -> Result<Vec<SignedSequence>> {
    let lower = pair.lower().to_partition();
    let upper = pair.upper().to_partition();
    let lower_boxes: BTreeSet<(u32, u32)> = lower.boxes().into_iter().collect();
    let upper_boxes: BTreeSet<(u32, u32)> = upper.boxes().into_iter().collect();
    let diff: BTreeSet<(u32, u32)> = upper_boxes.difference(&lower_boxes).copied().collect();
    if diff.iter().any(|&(r, c)| r == c) {
        return Err(Error::Domain(format!(
            "{pair} is not in the image of π: the paths differ on the diagonal"
        )));
    }
    let above: BTreeSet<(u32, u32)> = diff.iter().copied().filter(|&(r, c)| c > r).collect();
    let comps = components(&above);
    let k = comps.len();
    let n = pair.lower().n();
    let mut out = Vec::with_capacity(1 << k);
    for mask in 0u32..(1 << k) {
        let mut boxes = lower_boxes.clone();
        for (i, comp) in comps.iter().enumerate() {
            if mask & (1 << i) != 0 {
                boxes.extend(comp.iter().copied());
            } else {
                boxes.extend(comp.iter().map(|&(r, c)| (c, r)));
            }
        }
        let candidate = partition_from_boxes(n, &boxes)?.to_sequence();
        let back = candidate.pi();
        if back != *pair {
            return Err(Error::Domain(format!(
                "candidate {candidate} maps to {back}, not {pair}"
            )));
        }
        out.push(candidate);
    }
    out.sort();
    Ok(out)
}

/// All full sequences over `⟨n⟩` (size `binom(2n, n)`), sorted.
pub fn all_full_sequences(n: u32) -> Vec<SignedSequence> {
    let alphabet: Vec<i32> = (1..=n as i32).map(|i| -(n as i32 + 1 - i)).chain(1..=n as i32).collect();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n as usize);
    fn rec(
        alphabet: &[i32],
        start: usize,
        k: usize,
        n: u32,
        current: &mut Vec<i32>,
        out: &mut Vec<SignedSequence>,
    ) {
        if current.len() == k {
            out.push(SignedSequence {
                n,
                entries: current.clone(),
            });
            return;
        }
        let need = k - current.len();
        for i in start..=(alphabet.len().saturating_sub(need)) {
            current.push(alphabet[i]);
            rec(alphabet, i + 1, k, n, current, out);
            current.pop();
        }
    }
    rec(&alphabet, 0, n as usize, n, &mut current, &mut out);
    out.sort();
    out
}

/// All `k`-subsets of `⟨n⟩`, sorted.
pub fn all_subsets(n: u32, k: usize) -> Vec<SignedSequence> {
    let alphabet: Vec<i32> = (-(n as i32)..=n as i32).filter(|&e| e != 0).collect();
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    if k > alphabet.len() {
        return out;
    }
    loop {
        out.push(SignedSequence {
            n,
            entries: idx.iter().map(|&i| alphabet[i]).collect(),
        });
        // next combination
        let mut i = k;
        loop {
            if i == 0 {
                out.sort();
                return out;
            }
            i -= 1;
            if idx[i] != i + alphabet.len() - k {
                break;
            }
        }
        if idx[i] == i + alphabet.len() - k {
            out.sort();
            return out;
        }
        idx[i] += 1;
        for j in (i + 1)..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// The `2^n` admissible sequences for `⟨n⟩`, sorted.
pub fn admissible_sequences(n: u32) -> Vec<SignedSequence> {
    let mut out = Vec::with_capacity(1 << n);
    for mask in 0u32..(1 << n) {
        let mut entries: Vec<i32> = (1..=n as i32)
            .map(|i| if mask & (1 << (i - 1)) != 0 { i } else { -i })
            .collect();
        entries.sort_unstable();
        out.push(SignedSequence { n, entries });
    }
    out.sort();
    out
}
