//! The ranked lattice of level-tagged admissible sequences.
//!
//! Elements are `α^(a)` with `α` admissible over `⟨n⟩` and `0 ≤ a ≤ d`.
//! The order is `α^(a) ≤ β^(b)` iff `a ≤ b` and `α_i ≤ β_{(b-a)+i}` for all
//! valid `i`.  Covers come in three kinds:
//!
//! 1. same level, one symmetric off-diagonal box pair added;
//! 2. same level, one diagonal box added;
//! 3. level up by one, with the full-hook partition `(n, 1^{n-1})` removed —
//!    on sequences, drop `n` and prepend `-n`.

use crate::seq::{admissible_sequences, Partition, SignedSequence};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Classification of covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CoverType {
    /// Same level, symmetric box pair added; negative counts agree.
    SameLevelDoset = 1,
    /// Same level, diagonal box added; one fewer negative entry.
    SameLevelPlain = 2,
    /// Level up by one, hook removed; one more negative entry.
    LevelJump = 3,
}

impl CoverType {
    pub fn tag(self) -> u8 {
        self as u8
    }

    pub fn from_tag(tag: u8) -> Result<Self> {
        match tag {
            1 => Ok(CoverType::SameLevelDoset),
            2 => Ok(CoverType::SameLevelPlain),
            3 => Ok(CoverType::LevelJump),
            _ => Err(Error::Invalid(format!("unknown cover type {tag}"))),
        }
    }
}

/// An admissible sequence at a level.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PosetElement {
    seq: SignedSequence,
    level: u32,
}

impl PosetElement {
    pub fn new(seq: SignedSequence, level: u32) -> Result<Self> {
        if !seq.is_admissible() {
            return Err(Error::Domain(format!("{seq} is not admissible")));
        }
        Ok(PosetElement { seq, level })
    }

    pub fn seq(&self) -> &SignedSequence {
        &self.seq
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn n(&self) -> u32 {
        self.seq.n()
    }

    /// Minimum `∅^(0)` (the all-negative sequence).
    pub fn minimum(n: u32) -> Self {
        let entries: Vec<i32> = (-(n as i32)..=-1).collect();
        PosetElement {
            seq: SignedSequence::full(n, entries).unwrap(),
            level: 0,
        }
    }

    /// Maximum `(n^n)^(d)` (the all-positive sequence at top level).
    pub fn maximum(n: u32, d: u32) -> Self {
        PosetElement {
            seq: SignedSequence::full(n, (1..=n as i32).collect()).unwrap(),
            level: d,
        }
    }
}

impl fmt::Display for PosetElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^({})", self.seq, self.level)
    }
}

impl fmt::Debug for PosetElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Order test; errors on mismatched alphabet bounds.
pub fn leq(x: &PosetElement, y: &PosetElement) -> Result<bool> {
    if x.n() != y.n() {
        return Err(Error::Domain(format!(
            "mismatched contexts: n = {} vs {}",
            x.n(),
            y.n()
        )));
    }
    Ok(leq_unchecked(x, y))
}

pub(crate) fn leq_unchecked(x: &PosetElement, y: &PosetElement) -> bool {
    if x.level > y.level {
        return false;
    }
    let shift = (y.level - x.level) as usize;
    let n = x.n() as usize;
    let xe = x.seq.entries();
    let ye = y.seq.entries();
    for i in 0..n.saturating_sub(shift) {
        if xe[i] > ye[shift + i] {
            return false;
        }
    }
    true
}

/// Padded chain-product encoding: entry `i` of `α^(a)` sits at offset
/// `i + (m - a)` in a window of length `n + m`, with `MIN` before and `MAX`
/// after.  The order and the lattice operations become componentwise.
fn pad(x: &PosetElement, m: u32) -> Vec<i64> {
    debug_assert!(x.level <= m);
    let lead = (m - x.level) as usize;
    let mut v = vec![i64::MIN; lead];
    v.extend(x.seq.entries().iter().map(|&e| e as i64));
    v.resize((x.n() + m) as usize, i64::MAX);
    v
}

fn unpad(n: u32, m: u32, v: &[i64]) -> PosetElement {
    let lead = v.iter().take_while(|&&e| e == i64::MIN).count() as u32;
    let level = m - lead;
    let entries: Vec<i32> = v
        .iter()
        .filter(|&&e| e != i64::MIN && e != i64::MAX)
        .map(|&e| e as i32)
        .collect();
    PosetElement {
        seq: SignedSequence::full(n, entries).expect("padded decode"),
        level,
    }
}

/// Lattice meet, computed in the padded encoding.
pub fn meet(x: &PosetElement, y: &PosetElement) -> PosetElement {
    assert_eq!(x.n(), y.n());
    let m = x.level.max(y.level);
    let a = pad(x, m);
    let b = pad(y, m);
    let v: Vec<i64> = a.iter().zip(&b).map(|(p, q)| *p.min(q)).collect();
    let out = unpad(x.n(), m, &v);
    debug_assert!(out.seq.is_admissible());
    out
}

/// Lattice join, computed in the padded encoding.
pub fn join(x: &PosetElement, y: &PosetElement) -> PosetElement {
    assert_eq!(x.n(), y.n());
    let m = x.level.max(y.level);
    let a = pad(x, m);
    let b = pad(y, m);
    let v: Vec<i64> = a.iter().zip(&b).map(|(p, q)| *p.max(q)).collect();
    let out = unpad(x.n(), m, &v);
    debug_assert!(out.seq.is_admissible());
    out
}

/// Whether box `(r, c)` can be added to `rows` keeping a partition shape
/// inside the `n × n` square.
fn addable(rows: &[u32], n: u32, r: u32, c: u32) -> bool {
    if r > n || c > n || r == 0 || c == 0 {
        return false;
    }
    let row = |i: u32| -> u32 {
        if i == 0 {
            n
        } else if i as usize > rows.len() {
            0
        } else {
            rows[i as usize - 1]
        }
    };
    row(r) == c - 1 && row(r - 1) >= c
}

fn with_boxes(rows: &[u32], n: u32, add: &[(u32, u32)]) -> SignedSequence {
    let mut new_rows = rows.to_vec();
    for &(r, _) in add {
        if new_rows.len() < r as usize {
            new_rows.resize(r as usize, 0);
        }
    }
    for &(r, _) in add {
        new_rows[r as usize - 1] += 1;
    }
    Partition::new(n, new_rows).unwrap().to_sequence()
}

/// All covers of `x` in the level-`d` structure, with their types.
pub fn covers(x: &PosetElement, d: u32) -> Vec<(PosetElement, CoverType)> {
    let n = x.n();
    let rows = x.seq.to_partition().rows().to_vec();
    let mut out = Vec::new();
    for i in 1..=n {
        if addable(&rows, n, i, i) {
            out.push((
                PosetElement {
                    seq: with_boxes(&rows, n, &[(i, i)]),
                    level: x.level,
                },
                CoverType::SameLevelPlain,
            ));
        }
    }
    for r in 1..=n {
        for c in (r + 1)..=n {
            if addable(&rows, n, r, c) && addable(&rows, n, c, r) {
                out.push((
                    PosetElement {
                        seq: with_boxes(&rows, n, &[(r, c), (c, r)]),
                        level: x.level,
                    },
                    CoverType::SameLevelDoset,
                ));
            }
        }
    }
    // type 3: drop n, prepend -n, bump the level
    if x.level < d && x.seq.contains(n as i32) {
        let mut entries = vec![-(n as i32)];
        entries.extend(x.seq.entries().iter().copied().filter(|&e| e != n as i32));
        out.push((
            PosetElement {
                seq: SignedSequence::full(n, entries).unwrap(),
                level: x.level + 1,
            },
            CoverType::LevelJump,
        ));
    }
    out.sort_by(|a, b| (a.0.level, a.0.seq.clone()).cmp(&(b.0.level, b.0.seq.clone())));
    out
}

/// All of `P_{d,n}`, sorted by `(level, sequence)`; size `(d+1)·2^n`.
pub fn build_poset(d: u32, n: u32) -> Vec<PosetElement> {
    let mut out = Vec::with_capacity(((d + 1) as usize) << n);
    for level in 0..=d {
        for seq in admissible_sequences(n) {
            out.push(PosetElement { seq, level });
        }
    }
    out.sort_by(|a, b| (a.level, a.seq.clone()).cmp(&(b.level, b.seq.clone())));
    out
}

/// Rank of an element: `(|λ| + durfee(λ))/2 + a·(n+1)`; each cover raises it
/// by one.
pub fn rank(x: &PosetElement) -> u32 {
    let p = x.seq.to_partition();
    (p.size() + p.durfee()) / 2 + x.level * (x.n() + 1)
}

/// Rank of the whole structure: `n(n+1)/2 + d(n+1)`.
pub fn total_rank(d: u32, n: u32) -> u32 {
    n * (n + 1) / 2 + d * (n + 1)
}
