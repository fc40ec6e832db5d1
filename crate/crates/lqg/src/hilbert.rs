//! Chain enumeration over a finite doset and the derived Hilbert data.
//!
//! A chain is a set of doset elements whose endpoint pairs can be arranged
//! into a single weakly increasing run; equivalently, the elements are
//! pairwise comparable under `(α,β) ≤ (γ,δ) ⟺ β ≤ γ`.  Diagonal elements of
//! a chain may repeat in a monomial, off-diagonal ones may not, so the
//! counts `c_u^v` of chains with `u` diagonal and `v` off-diagonal members
//! determine the Hilbert series of the associated graded algebra.

use crate::doset::{Doset, DosetStructure};
use crate::poset::{self, PosetElement};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// The matrix `c[u][v]`: chains with `u` diagonal and `v` off-diagonal
/// elements, `u = 0…P+1`, `v = 0…D−P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainCountMatrix {
    rank_poset: u32,
    rank_doset: u32,
    entries: Vec<Vec<BigInt>>,
}

impl ChainCountMatrix {
    pub fn rank_poset(&self) -> u32 {
        self.rank_poset
    }

    pub fn rank_doset(&self) -> u32 {
        self.rank_doset
    }

    pub fn get(&self, u: usize, v: usize) -> &BigInt {
        &self.entries[u][v]
    }

    pub fn rows_u(&self) -> usize {
        self.entries.len()
    }

    pub fn cols_v(&self) -> usize {
        self.entries[0].len()
    }

    pub fn total_chains(&self) -> BigInt {
        self.entries.iter().flatten().sum()
    }

    /// Display layout matching the conventional tabulation: row `v`,
    /// column `u`.
    pub fn by_v_rows(&self) -> Vec<Vec<BigInt>> {
        let mut out = vec![vec![BigInt::zero(); self.rows_u()]; self.cols_v()];
        for (u, row) in self.entries.iter().enumerate() {
            for (v, c) in row.iter().enumerate() {
                out[v][u] = c.clone();
            }
        }
        out
    }
}

/// Count chains by dynamic programming on the last element; for small dosets
/// a full recursive enumeration runs as well and the two are cross-checked.
pub fn chain_count_matrix(doset: &Doset) -> Result<ChainCountMatrix> {
    let p = doset.rank_poset() as usize;
    let dmp = (doset.rank_doset() - doset.rank_poset()) as usize;
    let counts = count_by_dp(doset, p, dmp)?;
    if doset.len() <= 20 {
        let brute = count_by_enumeration(doset, p, dmp)?;
        if brute != counts {
            return Err(Error::Internal(
                "chain DP and enumeration disagree".into(),
            ));
        }
    }
    // top-row binomial identity: c_{P+1}^v = C(D−P, v) · c_{P+1}^0
    for v in 0..=dmp {
        let expect = binomial(dmp as u64, v as u64) * &counts[p + 1][0];
        if counts[p + 1][v] != expect {
            return Err(Error::Unranked(format!(
                "top-row identity fails at v = {v}: {} ≠ {}",
                counts[p + 1][v], expect
            )));
        }
    }
    Ok(ChainCountMatrix {
        rank_poset: doset.rank_poset(),
        rank_doset: doset.rank_doset(),
        entries: counts,
    })
}

/// Doset elements as `(start, end)` index pairs, diagonal included.
fn all_members(doset: &Doset) -> Vec<(usize, usize)> {
    let mut members: Vec<(usize, usize)> = (0..doset.len()).map(|i| (i, i)).collect();
    members.extend(doset.pairs().iter().copied());
    // sort by a linear extension so that chain predecessors come first
    let height = |i: usize| (0..doset.len()).filter(|&u| doset.leq(u, i)).count();
    members.sort_by_key(|&(a, b)| (height(a), height(b), a, b));
    members
}

fn count_by_dp(doset: &Doset, p: usize, dmp: usize) -> Result<Vec<Vec<BigInt>>> {
    let members = all_members(doset);
    let mut totals = vec![vec![BigInt::zero(); dmp + 1]; p + 2];
    totals[0][0] = BigInt::one(); // empty chain
    // f[k][u][v]: chains with maximum element members[k]
    let mut f: Vec<Vec<Vec<BigInt>>> = Vec::with_capacity(members.len());
    for (k, &(a, b)) in members.iter().enumerate() {
        let diagonal = a == b;
        let mut table = vec![vec![BigInt::zero(); dmp + 1]; p + 2];
        let (u0, v0) = if diagonal { (1, 0) } else { (0, 1) };
        table[u0][v0] = BigInt::one();
        for (j, &(c, d)) in members.iter().enumerate().take(k) {
            // members[j] can precede members[k] iff end(j) ≤ start(k),
            // excluding the equal element itself
            if (c, d) == (a, b) || !doset.leq(d, a) {
                continue;
            }
            for u in 0..=(p + 1 - u0) {
                for v in 0..=(dmp - v0) {
                    if !f[j][u][v].is_zero() {
                        let add = f[j][u][v].clone();
                        table[u + u0][v + v0] += add;
                    }
                }
            }
        }
        for u in 0..=(p + 1) {
            for v in 0..=dmp {
                if !table[u][v].is_zero() {
                    let add = table[u][v].clone();
                    totals[u][v] += add;
                }
            }
        }
        f.push(table);
    }
    Ok(totals)
}

fn count_by_enumeration(doset: &Doset, p: usize, dmp: usize) -> Result<Vec<Vec<BigInt>>> {
    let members = all_members(doset);
    let mut totals = vec![vec![BigInt::zero(); dmp + 1]; p + 2];
    fn rec(
        doset: &Doset,
        members: &[(usize, usize)],
        start: usize,
        last_end: Option<usize>,
        u: usize,
        v: usize,
        totals: &mut Vec<Vec<BigInt>>,
    ) {
        totals[u][v] += 1;
        for k in start..members.len() {
            let (a, b) = members[k];
            if let Some(e) = last_end {
                if !doset.leq(e, a) {
                    continue;
                }
            }
            let (du, dv) = if a == b { (1, 0) } else { (0, 1) };
            rec(doset, members, k + 1, Some(b), u + du, v + dv, totals);
        }
    }
    rec(doset, &members, 0, None, 0, 0, &mut totals);
    Ok(totals)
}

fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut out = BigInt::one();
    for i in 0..k {
        out = out * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    out
}

/// A univariate polynomial with rational coefficients, ascending order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertPolynomial {
    coeffs: Vec<BigRational>,
}

impl HilbertPolynomial {
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading_coefficient(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, w: i64) -> BigRational {
        let w = BigRational::from_integer(w.into());
        let mut out = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            out = out * &w + c;
        }
        out
    }

    fn trim(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        HilbertPolynomial { coeffs }
    }
}

impl fmt::Display for HilbertPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = !mag.is_one() || k == 0;
            if show_coeff {
                if mag.is_integer() {
                    write!(f, "{}", mag.numer())?;
                } else {
                    write!(f, "{}/{}", mag.numer(), mag.denom())?;
                }
            }
            match k {
                0 => {}
                1 => write!(f, "w")?,
                _ => write!(f, "w^{k}")?,
            }
        }
        Ok(())
    }
}

/// `HP(w) = Σ_{u=1}^{P+1} Σ_{v=0}^{D−P} c_u^v · C(w−v−1, u−1)`, expanded
/// exactly over the rationals.
pub fn hilbert_polynomial(c: &ChainCountMatrix) -> HilbertPolynomial {
    let mut coeffs = vec![BigRational::zero(); c.rows_u()];
    for u in 1..c.rows_u() {
        for v in 0..c.cols_v() {
            if c.get(u, v).is_zero() {
                continue;
            }
            let scale = BigRational::from_integer(c.get(u, v).clone());
            for (k, b) in falling_binomial(v as i64 + 1, u - 1).iter().enumerate() {
                coeffs[k] += b * &scale;
            }
        }
    }
    HilbertPolynomial::trim(coeffs)
}

/// Coefficients (ascending in `w`) of `C(w - shift, k) = Π_{i=0}^{k-1}
/// (w - shift - i) / k!`.
fn falling_binomial(shift: i64, k: usize) -> Vec<BigRational> {
    let mut poly = vec![BigRational::one()];
    for i in 0..k {
        let root = BigRational::from_integer((shift + i as i64).into());
        // multiply by (w - root)
        let mut next = vec![BigRational::zero(); poly.len() + 1];
        for (j, c) in poly.iter().enumerate() {
            next[j + 1] += c;
            next[j] -= c * &root;
        }
        poly = next;
    }
    let mut fact = BigRational::one();
    for i in 1..=k {
        fact *= BigRational::from_integer((i as i64).into());
    }
    for c in &mut poly {
        *c /= fact.clone();
    }
    poly
}

/// Degree of the projective scheme: `2^{D−P} · c_{P+1}^0`.
pub fn proj_degree(c: &ChainCountMatrix) -> BigInt {
    let dmp = c.rank_doset() - c.rank_poset();
    (BigInt::one() << dmp) * c.get(c.rank_poset() as usize + 1, 0)
}

/// Dimension of the projective scheme: the poset rank.
pub fn proj_dimension(c: &ChainCountMatrix) -> u32 {
    c.rank_poset()
}

/// Number of standard monomials of degree `w`, counted directly: exponent
/// vectors with off-diagonal exponents at most one whose support is a chain.
/// Independent of the chain-count pipeline; used as a test oracle.
pub fn standard_monomial_count(doset: &Doset, w: u32) -> BigInt {
    let members = all_members(doset);
    fn rec(
        doset: &Doset,
        members: &[(usize, usize)],
        start: usize,
        last_end: Option<usize>,
        remaining: u32,
        acc: &mut BigInt,
    ) {
        if remaining == 0 {
            *acc += 1;
            return;
        }
        for k in start..members.len() {
            let (a, b) = members[k];
            if let Some(e) = last_end {
                if !doset.leq(e, a) {
                    continue;
                }
            }
            if a == b {
                // diagonal variables may carry any positive exponent
                for e in 1..=remaining {
                    rec(doset, members, k + 1, Some(b), remaining - e, acc);
                }
            } else {
                rec(doset, members, k + 1, Some(b), remaining - 1, acc);
            }
        }
    }
    let mut acc = BigInt::zero();
    rec(doset, &members, 0, None, w, &mut acc);
    acc
}

/// Sub-doset of the Schubert variety at `x`: keep pairs `(β,γ)` with
/// `γ ≤ x`, or with `β ≥ x` for the dual variety.
pub fn schubert_subdoset(ds: &DosetStructure, x: &PosetElement, dual: bool) -> Result<Doset> {
    let idx = ds
        .element_index(x)
        .ok_or_else(|| Error::Domain(format!("{x} not in the structure")))?;
    let full = ds.to_doset()?;
    if dual {
        full.restrict(|i| full.leq(idx, i))
    } else {
        full.restrict(|i| full.leq(i, idx))
    }
}

/// Sum over saturated chains from `x` to the maximum of `2^{#doset covers}`.
pub fn weighted_maximal_chain_count(ds: &DosetStructure, x: &PosetElement) -> Result<BigInt> {
    if ds.element_index(x).is_none() {
        return Err(Error::Domain(format!("{x} not in the structure")));
    }
    let top = PosetElement::maximum(ds.n(), ds.d());
    fn weight(ds: &DosetStructure, z: &PosetElement, top: &PosetElement) -> BigInt {
        if z == top {
            return BigInt::one();
        }
        let mut total = BigInt::zero();
        for (y, t) in poset::covers(z, ds.d()) {
            let w = if t == poset::CoverType::SameLevelDoset {
                BigInt::from(2)
            } else {
                BigInt::one()
            };
            total += w * weight(ds, &y, top);
        }
        total
    }
    Ok(weight(ds, x, &top))
}
