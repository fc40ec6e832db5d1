//! The quadratic coordinate ideal and its straightening law.
//!
//! Coordinates `p_α^(a)` are indexed by all `n`-subsets of `⟨n⟩` at levels
//! `0…d`.  The evaluation map sends `p_α^(a)` to the coefficient of `t^a` in
//! the `α`-column minor of an `n × 2n` matrix whose rows carry polynomial
//! entries of prescribed degrees summing to `d`.  The degree-2 part of its
//! kernel is computed by exact linear algebra on random rational
//! specializations and re-verified symbolically, then reduced to Northeast
//! coordinates through the normal form of [`crate::exterior`] and presented
//! as straightening relations over the doset of admissible pairs.

use crate::doset::DosetStructure;
use crate::exterior::{northeast_normal_form, NormalFormTable};
use crate::hilbert::{chain_count_matrix, hilbert_polynomial};
use crate::linalg::{rat_display, row_reduce, Mat, Rat};
use crate::poset::{self, PosetElement};
use crate::seq::{all_full_sequences, SignedSequence};
use crate::{Error, Result};
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// A coordinate variable: sequence plus level.
pub type VarId = (SignedSequence, u32);

/// Level-aware order test on arbitrary (not necessarily admissible) indices.
fn big_leq(x: &VarId, y: &VarId) -> bool {
    if x.1 > y.1 {
        return false;
    }
    let shift = (y.1 - x.1) as usize;
    let n = x.0.n() as usize;
    let xe = x.0.entries();
    let ye = y.0.entries();
    (0..n.saturating_sub(shift)).all(|i| xe[i] <= ye[shift + i])
}

// ---------------------------------------------------------------------------
// polynomials in t over a generic coefficient ring
// ---------------------------------------------------------------------------

trait Coeff: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero_ref(&self) -> bool;
    fn add_ref(&mut self, other: &Self);
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
}

impl Coeff for Rat {
    fn zero() -> Self {
        <Rat as Zero>::zero()
    }
    fn one() -> Self {
        <Rat as One>::one()
    }
    fn is_zero_ref(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

/// A sparse polynomial in the matrix-entry unknowns, used for symbolic
/// verification of computed relations.  Monomial keys are sorted lists of
/// `(variable, exponent)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPoly {
    terms: BTreeMap<Vec<(XVar, u8)>, Rat>,
}

/// A matrix-entry unknown `x_{row, col}^{(t-degree)}`.
type XVar = (u8, u8, u8);

impl MPoly {
    pub fn var(v: XVar) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![(v, 1)], <Rat as One>::one());
        MPoly { terms }
    }

    pub fn is_zero_poly(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, key: Vec<(XVar, u8)>, coeff: Rat) {
        let slot = self.terms.entry(key.clone()).or_insert_with(<Rat as Zero>::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn scaled(&self, factor: &Rat) -> MPoly {
        let mut out = MPoly {
            terms: BTreeMap::new(),
        };
        for (k, c) in &self.terms {
            out.add_term(k.clone(), c * factor);
        }
        out
    }
}

impl Coeff for MPoly {
    fn zero() -> Self {
        MPoly {
            terms: BTreeMap::new(),
        }
    }
    fn one() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![], <Rat as One>::one());
        MPoly { terms }
    }
    fn is_zero_ref(&self) -> bool {
        self.terms.is_empty()
    }
    fn add_ref(&mut self, other: &Self) {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c.clone());
        }
    }
    fn mul_ref(&self, other: &Self) -> Self {
        let mut out = MPoly::zero();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let mut merged: BTreeMap<XVar, u8> = ka.iter().copied().collect();
                for &(v, e) in kb {
                    *merged.entry(v).or_insert(0) += e;
                }
                out.add_term(merged.into_iter().collect(), ca * cb);
            }
        }
        out
    }
    fn neg_ref(&self) -> Self {
        MPoly {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }
}

/// Coefficients of `t^0, t^1, …`.
type TPoly<T> = Vec<T>;

fn tp_mul<T: Coeff>(a: &TPoly<T>, b: &TPoly<T>) -> TPoly<T> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![T::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero_ref() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero_ref() {
                out[i + j].add_ref(&x.mul_ref(y));
            }
        }
    }
    out
}

fn tp_add_assign<T: Coeff>(a: &mut TPoly<T>, b: &TPoly<T>, negate: bool) {
    if a.len() < b.len() {
        a.resize(b.len(), T::zero());
    }
    for (i, y) in b.iter().enumerate() {
        if negate {
            a[i].add_ref(&y.neg_ref());
        } else {
            a[i].add_ref(y);
        }
    }
}

fn tp_coeff<T: Coeff>(a: &TPoly<T>, k: usize) -> T {
    a.get(k).cloned().unwrap_or_else(T::zero)
}

/// Determinant of a square matrix of `t`-polynomials by cofactor expansion.
fn det<T: Coeff>(m: &[Vec<TPoly<T>>]) -> TPoly<T> {
    fn rec<T: Coeff>(m: &[Vec<TPoly<T>>], row: usize, used: &mut Vec<bool>) -> TPoly<T> {
        let n = m.len();
        if row == n {
            return vec![T::one()];
        }
        let mut out: TPoly<T> = vec![];
        let mut ordinal = 0usize; // position among the still-unused columns
        for c in 0..n {
            if used[c] {
                continue;
            }
            if !m[row][c].iter().all(|x| x.is_zero_ref()) {
                used[c] = true;
                let sub = rec(m, row + 1, used);
                used[c] = false;
                let term = tp_mul(&m[row][c], &sub);
                tp_add_assign(&mut out, &term, ordinal % 2 == 1);
            }
            ordinal += 1;
        }
        out
    }
    let mut used = vec![false; m.len()];
    rec(m, 0, &mut used)
}

// ---------------------------------------------------------------------------
// the polynomial matrix behind the evaluation map
// ---------------------------------------------------------------------------

/// Row degree profile: `d = ℓn + q` with `0 ≤ q < n`; the first `q` rows get
/// degree `ℓ+1`, the rest `ℓ`.  (`q = 0` gives uniform degrees `ℓ`.)
pub fn row_degrees(d: u32, n: u32) -> Vec<u32> {
    let ell = d / n;
    let q = d % n;
    (1..=n).map(|i| if i <= q { ell + 1 } else { ell }).collect()
}

/// An `n × 2n` matrix with polynomial entries following the row-degree rule.
#[derive(Clone, Debug)]
pub struct PolyMatrix {
    n: u32,
    d: u32,
    entries: Vec<Vec<TPoly<Rat>>>,
}

impl PolyMatrix {
    /// Random integer specialization, coefficients drawn from `[-99, 99]`.
    pub fn random(n: u32, d: u32, rng: &mut StdRng) -> Self {
        let degs = row_degrees(d, n);
        let entries = (0..n as usize)
            .map(|i| {
                (0..2 * n as usize)
                    .map(|_| {
                        (0..=degs[i] as usize)
                            .map(|_| Rat::from_integer(rng.gen_range(-99i64..=99).into()))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        PolyMatrix { n, d, entries }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    /// Column of the basis letter `e`: negatives occupy the first block.
    fn column_of(n: u32, e: i32) -> usize {
        if e < 0 {
            (e + n as i32) as usize
        } else {
            (e + n as i32 - 1) as usize
        }
    }

    /// The minor on the columns selected by `alpha`, as a `t`-polynomial.
    pub fn minor(&self, alpha: &SignedSequence) -> TPoly<Rat> {
        let cols: Vec<usize> = alpha
            .entries()
            .iter()
            .map(|&e| Self::column_of(self.n, e))
            .collect();
        let sub: Vec<Vec<TPoly<Rat>>> = (0..self.n as usize)
            .map(|r| cols.iter().map(|&c| self.entries[r][c].clone()).collect())
            .collect();
        det(&sub)
    }

    /// `φ(p_α^{(a)})` at this specialization.
    pub fn phi_eval(&self, alpha: &SignedSequence, level: u32) -> Rat {
        tp_coeff(&self.minor(alpha), level as usize)
    }
}

/// The symbolic matrix with entry unknowns `x_{ij}^{(c)}`.
fn symbolic_matrix(d: u32, n: u32) -> Vec<Vec<TPoly<MPoly>>> {
    let degs = row_degrees(d, n);
    (0..n as usize)
        .map(|i| {
            (0..2 * n as usize)
                .map(|j| {
                    (0..=degs[i] as usize)
                        .map(|c| MPoly::var((i as u8, j as u8, c as u8)))
                        .collect()
                })
                .collect()
        })
        .collect()
}

/// Symbolic `φ` image of a monomial in the coordinates (degree ≤ 2 in
/// practice): the product of coefficient-extracted symbolic minors.
pub fn phi_image(d: u32, n: u32, monomial: &[VarId]) -> MPoly {
    let sym = symbolic_matrix(d, n);
    let mut out = MPoly::one();
    for (alpha, level) in monomial {
        let cols: Vec<usize> = alpha
            .entries()
            .iter()
            .map(|&e| PolyMatrix::column_of(n, e))
            .collect();
        let sub: Vec<Vec<TPoly<MPoly>>> = (0..n as usize)
            .map(|r| cols.iter().map(|&c| sym[r][c].clone()).collect())
            .collect();
        let minor = det(&sub);
        out = out.mul_ref(&tp_coeff(&minor, *level as usize));
    }
    out
}

// ---------------------------------------------------------------------------
// term orders
// ---------------------------------------------------------------------------

/// A linear order on all coordinate indices refining the coordinate order,
/// with the Northeast representative minimal inside every fiber and ties
/// broken by the `(meet, join)` pair, positive-part order, then level.
#[derive(Clone, Debug)]
pub struct TermOrder {
    position: BTreeMap<VarId, usize>,
}

impl TermOrder {
    pub fn new(d: u32, n: u32) -> Self {
        // linear extension of the admissible lattice, by (level, size, rows)
        let mut linext: BTreeMap<PosetElement, usize> = BTreeMap::new();
        let mut adm = poset::build_poset(d, n);
        adm.sort_by_key(|e| {
            let p = e.seq().to_partition();
            (e.level(), p.size(), p.rows().to_vec())
        });
        for (i, e) in adm.into_iter().enumerate() {
            linext.insert(e, i);
        }
        let mut vars: Vec<VarId> = Vec::new();
        for level in 0..=d {
            for s in all_full_sequences(n) {
                vars.push((s, level));
            }
        }
        vars.sort_by_key(|(s, level)| {
            let pair = s.pi();
            let hat = PosetElement::new(pair.lower().clone(), *level).expect("meet admissible");
            let check = PosetElement::new(pair.upper().clone(), *level).expect("join admissible");
            (
                linext[&hat],
                linext[&check],
                !s.is_northeast(),
                s.positive_part(),
                s.entries().to_vec(),
            )
        });
        let position = vars.into_iter().enumerate().map(|(i, v)| (v, i)).collect();
        TermOrder { position }
    }

    pub fn position(&self, v: &VarId) -> usize {
        self.position[v]
    }

    /// Degree-reverse-lexicographic comparison of two quadratic monomials,
    /// each given as an ordered pair of variable positions.
    pub fn cmp_quadratic(&self, a: (usize, usize), b: (usize, usize)) -> Ordering {
        if a == b {
            return Ordering::Equal;
        }
        // scan variables from the smallest: the first differing exponent
        // decides, with the smaller exponent on the larger monomial
        let mut probes: Vec<usize> = vec![a.0, a.1, b.0, b.1];
        probes.sort_unstable();
        probes.dedup();
        for v in probes {
            let ea = usize::from(a.0 == v) + usize::from(a.1 == v);
            let eb = usize::from(b.0 == v) + usize::from(b.1 == v);
            match ea.cmp(&eb) {
                Ordering::Equal => continue,
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }
}

// ---------------------------------------------------------------------------
// the degree-2 kernel of the evaluation map
// ---------------------------------------------------------------------------

/// A relation among degree-2 monomials in the full coordinate set.
#[derive(Clone, Debug)]
pub struct QuadricRelation {
    /// Leading monomial (largest in the term order), coefficient `1`.
    pub lead: (VarId, VarId),
    /// Remaining terms: `lead + Σ coeff·monomial = 0`.
    pub terms: Vec<(Rat, (VarId, VarId))>,
}

/// Degree-2 part of the evaluation-map kernel.
#[derive(Clone, Debug)]
pub struct QuadricIdeal {
    pub d: u32,
    pub n: u32,
    /// All coordinate variables, ascending in the term order.
    pub vars: Vec<VarId>,
    /// Relations in reduced row echelon form over the monomial basis,
    /// leading monomials strictly decreasing.
    pub relations: Vec<QuadricRelation>,
    /// Number of order-comparable coordinate pairs (the expected rank).
    pub comparable_pairs: usize,
}

/// Compute the degree-2 kernel of the evaluation map by exact linear algebra
/// on random specializations.  The rank is checked against the comparable-
/// pair count and against a second independent batch; callers may then
/// re-verify relations symbolically via [`phi_image`].
pub fn ideal_quadrics(d: u32, n: u32, seed: u64, max_monomials: usize) -> Result<QuadricIdeal> {
    let order = TermOrder::new(d, n);
    let mut vars: Vec<VarId> = Vec::new();
    for level in 0..=d {
        for s in all_full_sequences(n) {
            vars.push((s, level));
        }
    }
    vars.sort_by_key(|v| order.position(v));
    let nv = vars.len();
    let monomial_count = nv * (nv + 1) / 2;
    if monomial_count > max_monomials {
        return Err(Error::ResourceLimit {
            needed: monomial_count as u64,
            cap: max_monomials as u64,
        });
    }
    // monomials in decreasing term order
    let mut monomials: Vec<(usize, usize)> = Vec::with_capacity(monomial_count);
    for i in 0..nv {
        for j in i..nv {
            monomials.push((i, j));
        }
    }
    monomials.sort_by(|&a, &b| order.cmp_quadratic(b, a));
    let comparable_pairs = {
        let mut count = 0usize;
        for i in 0..nv {
            for j in 0..nv {
                if big_leq(&vars[i], &vars[j]) {
                    count += 1;
                }
            }
        }
        count - nv + nv // x ≤ y pairs plus the diagonal squares, already included
    };
    let expected_rank = comparable_pairs;
    let points = expected_rank + 8;
    let build_rows = |seed: u64, count: usize| -> Vec<Vec<num_bigint::BigInt>> {
        let mut rng = StdRng::seed_from_u64(seed);
        (0..count)
            .map(|_| {
                let pm = PolyMatrix::random(n, d, &mut rng);
                let values: Vec<num_bigint::BigInt> = vars
                    .iter()
                    .map(|(s, a)| {
                        let v = pm.phi_eval(s, *a);
                        debug_assert!(v.is_integer());
                        v.to_integer()
                    })
                    .collect();
                monomials
                    .iter()
                    .map(|&(i, j)| &values[i] * &values[j])
                    .collect()
            })
            .collect()
    };
    let (rank, kernel) =
        crate::linalg::IntMat::from_rows(build_rows(seed, points)).rank_and_nullspace();
    if rank != expected_rank {
        return Err(Error::Internal(format!(
            "evaluation rank instability: got {rank}, expected {expected_rank}"
        )));
    }
    // second independent batch: every kernel vector must vanish on it, which
    // certifies the rank did not collapse by coincidence of the first sample
    let witness = build_rows(seed.wrapping_add(0x9e3779b97f4a7c15), 8);
    for row in &witness {
        for v in &kernel {
            let dot: Rat = row
                .iter()
                .zip(v)
                .map(|(a, b)| Rat::from_integer(a.clone()) * b)
                .sum();
            if !Zero::is_zero(&dot) {
                return Err(Error::Internal(
                    "kernel vector fails on the witness batch".into(),
                ));
            }
        }
    }
    let (_, reduced) = row_reduce(kernel);
    let mut relations = Vec::new();
    for row in reduced {
        let mut nonzero: Vec<(Rat, (usize, usize))> = row
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (c.clone(), monomials[k]))
            .collect();
        let (lead_coeff, lead) = nonzero.remove(0);
        debug_assert!(lead_coeff.is_one());
        relations.push(QuadricRelation {
            lead: (vars[lead.0].clone(), vars[lead.1].clone()),
            terms: nonzero
                .into_iter()
                .map(|(c, (i, j))| (c, (vars[i].clone(), vars[j].clone())))
                .collect(),
        });
    }
    Ok(QuadricIdeal {
        d,
        n,
        vars,
        relations,
        comparable_pairs,
    })
}

/// Symbolically verify that a relation lies in the kernel of `φ`.
pub fn verify_relation_symbolically(d: u32, n: u32, rel: &QuadricRelation) -> bool {
    let mut acc = phi_image(d, n, &[rel.lead.0.clone(), rel.lead.1.clone()]);
    for (c, (x, y)) in &rel.terms {
        let img = phi_image(d, n, &[x.clone(), y.clone()]);
        acc.add_ref(&img.scaled(c));
    }
    acc.is_zero_poly()
}

// ---------------------------------------------------------------------------
// straightening over the doset
// ---------------------------------------------------------------------------

/// A monomial in Northeast (doset) coordinates: an ordered variable pair.
pub type DosetMonomial = (VarId, VarId);

/// A straightening relation: the non-standard `lead` rewrites into the
/// standard combination `rhs`.
#[derive(Clone, Debug)]
pub struct QuadraticRelation {
    pub lead: DosetMonomial,
    pub rhs: Vec<(Rat, DosetMonomial)>,
}

/// The full straightening data for one `(d, n)`.
#[derive(Debug)]
pub struct StraighteningSystem {
    pub d: u32,
    pub n: u32,
    pub order: TermOrder,
    /// Northeast variables, ascending in the term order.
    pub ne_vars: Vec<VarId>,
    pub relations: Vec<QuadraticRelation>,
    rewrite: BTreeMap<DosetMonomial, Vec<(Rat, DosetMonomial)>>,
}

impl StraighteningSystem {
    /// Admissible pair attached to a Northeast variable.
    pub fn doset_pair(v: &VarId) -> (PosetElement, PosetElement) {
        let pair = v.0.pi();
        (
            PosetElement::new(pair.lower().clone(), v.1).expect("meet admissible"),
            PosetElement::new(pair.upper().clone(), v.1).expect("join admissible"),
        )
    }

    /// Standard means the four endpoints chain up in some order.
    pub fn is_standard(&self, m: &DosetMonomial) -> bool {
        let (h1, c1) = Self::doset_pair(&m.0);
        let (h2, c2) = Self::doset_pair(&m.1);
        poset::leq_unchecked(&c1, &h2) || poset::leq_unchecked(&c2, &h1)
    }

    fn canonical(&self, a: &VarId, b: &VarId) -> DosetMonomial {
        if self.order.position(a) <= self.order.position(b) {
            (a.clone(), b.clone())
        } else {
            (b.clone(), a.clone())
        }
    }

    /// Rewrite a degree-2 monomial into standard form.  Terminates because
    /// every rewrite strictly lowers the leading monomial; an iteration cap
    /// guards against construction bugs.
    pub fn straighten(&self, m: &DosetMonomial) -> Result<Vec<(Rat, DosetMonomial)>> {
        let mon_key = |mm: &DosetMonomial| {
            (
                self.order.position(&mm.0),
                self.order.position(&mm.1),
            )
        };
        let mut acc: BTreeMap<DosetMonomial, Rat> = BTreeMap::new();
        acc.insert(self.canonical(&m.0, &m.1), <Rat as One>::one());
        let mut budget = 100_000usize;
        loop {
            let target = acc
                .iter()
                .filter(|(mm, c)| !Zero::is_zero(*c) && !self.is_standard(mm))
                .max_by(|(a, _), (b, _)| {
                    self.order
                        .cmp_quadratic(mon_key(a), mon_key(b))
                })
                .map(|(mm, c)| (mm.clone(), c.clone()));
            let Some((mm, coeff)) = target else { break };
            budget = budget.checked_sub(1).ok_or_else(|| {
                Error::Internal("straightening did not terminate".into())
            })?;
            let rhs = self.rewrite.get(&mm).ok_or_else(|| {
                Error::Verification(format!(
                    "no relation for non-standard monomial ({}^({}), {}^({}))",
                    mm.0 .0, mm.0 .1, mm.1 .0, mm.1 .1
                ))
            })?;
            acc.remove(&mm);
            for (c, t) in rhs {
                let slot = acc.entry(t.clone()).or_insert_with(<Rat as Zero>::zero);
                *slot += c * &coeff;
                if Zero::is_zero(slot) {
                    acc.remove(t);
                }
            }
        }
        let mut out: Vec<(Rat, DosetMonomial)> = acc.into_iter().map(|(k, c)| (c, k)).collect();
        out.sort_by(|(_, a), (_, b)| self.order.cmp_quadratic(mon_key(b), mon_key(a)));
        Ok(out)
    }

    pub fn json(&self) -> serde_json::Value {
        let var = |v: &VarId| serde_json::json!({ "seq": v.0.entries(), "level": v.1 });
        let rels: Vec<serde_json::Value> = self
            .relations
            .iter()
            .map(|r| {
                serde_json::json!({
                    "lead": [var(&r.lead.0), var(&r.lead.1)],
                    "terms": r
                        .rhs
                        .iter()
                        .map(|(c, (x, y))| {
                            serde_json::json!([rat_display(c), var(x), var(y)])
                        })
                        .collect::<Vec<_>>(),
                })
            })
            .collect();
        serde_json::json!({ "d": self.d, "n": self.n, "relations": rels })
    }
}

/// Build the straightening relations by reducing the quadratic ideal through
/// the Northeast normal form and row-reducing over doset monomials.
pub fn straightening_relations(
    d: u32,
    n: u32,
    nf: &NormalFormTable,
    ideal: &QuadricIdeal,
) -> Result<StraighteningSystem> {
    let order = TermOrder::new(d, n);
    let mut ne_vars: Vec<VarId> = Vec::new();
    for level in 0..=d {
        for s in all_full_sequences(n) {
            if s.is_northeast() {
                ne_vars.push((s, level));
            }
        }
    }
    ne_vars.sort_by_key(|v| order.position(v));
    let ne_index: BTreeMap<&VarId, usize> =
        ne_vars.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let k = ne_vars.len();
    // doset monomials in decreasing term order
    let mut monomials: Vec<(usize, usize)> = Vec::new();
    for i in 0..k {
        for j in i..k {
            monomials.push((i, j));
        }
    }
    let mon_pos = |&(i, j): &(usize, usize)| {
        (
            order.position(&ne_vars[i]),
            order.position(&ne_vars[j]),
        )
    };
    monomials.sort_by(|a, b| order.cmp_quadratic(mon_pos(b), mon_pos(a)));
    let mon_index: BTreeMap<(usize, usize), usize> = monomials
        .iter()
        .enumerate()
        .map(|(pos, &m)| (m, pos))
        .collect();
    // substitute the normal form into each kernel relation
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for rel in &ideal.relations {
        let mut row = vec![<Rat as Zero>::zero(); monomials.len()];
        let emit = |coeff: &Rat, x: &VarId, y: &VarId, row: &mut Vec<Rat>| {
            let ex = nf.expression(&x.0, x.1).expect("normal form entry");
            let ey = nf.expression(&y.0, y.1).expect("normal form entry");
            for (cx, tx) in ex {
                for (cy, ty) in ey {
                    let vx = (tx.clone(), x.1);
                    let vy = (ty.clone(), y.1);
                    let (i, j) = (ne_index[&vx], ne_index[&vy]);
                    let key = if i <= j { (i, j) } else { (j, i) };
                    row[mon_index[&key]] += coeff * cx * cy;
                }
            }
        };
        emit(&<Rat as One>::one(), &rel.lead.0, &rel.lead.1, &mut row);
        for (c, (x, y)) in &rel.terms {
            emit(c, x, y, &mut row);
        }
        if row.iter().any(|c| !Zero::is_zero(c)) {
            rows.push(row);
        }
    }
    let (pivots, reduced) = row_reduce(rows);
    let mut relations = Vec::new();
    let mut rewrite = BTreeMap::new();
    for (row, &pc) in reduced.iter().zip(&pivots) {
        let (i, j) = monomials[pc];
        let lead: DosetMonomial = (ne_vars[i].clone(), ne_vars[j].clone());
        let mut rhs = Vec::new();
        for (pos, c) in row.iter().enumerate() {
            if pos == pc || Zero::is_zero(c) {
                continue;
            }
            let (a, b) = monomials[pos];
            rhs.push((-c.clone(), (ne_vars[a].clone(), ne_vars[b].clone())));
        }
        rewrite.insert(lead.clone(), rhs.clone());
        relations.push(QuadraticRelation { lead, rhs });
    }
    let system = StraighteningSystem {
        d,
        n,
        order,
        ne_vars,
        relations,
        rewrite,
    };
    // completeness: pivots are exactly the non-standard monomials
    let non_standard: BTreeSet<usize> = monomials
        .iter()
        .enumerate()
        .filter(|(_, &(i, j))| {
            !system.is_standard(&(system.ne_vars[i].clone(), system.ne_vars[j].clone()))
        })
        .map(|(pos, _)| pos)
        .collect();
    let pivot_set: BTreeSet<usize> = pivots.iter().copied().collect();
    if pivot_set != non_standard {
        return Err(Error::Verification(format!(
            "straightening leads do not match the non-standard monomials: {} pivots vs {} non-standard",
            pivot_set.len(),
            non_standard.len()
        )));
    }
    for rel in &system.relations {
        for (_, m) in &rel.rhs {
            if !system.is_standard(m) {
                return Err(Error::Verification(format!(
                    "relation tail contains the non-standard monomial ({}^({}), {}^({}))",
                    m.0 .0, m.0 .1, m.1 .0, m.1 .1
                )));
            }
        }
    }
    Ok(system)
}

// ---------------------------------------------------------------------------
// random points on the isotropic locus
// ---------------------------------------------------------------------------

/// Values of every coordinate at one point of the degree-`d` isotropic
/// quasimap locus.
#[derive(Clone, Debug)]
pub struct LagrangianPoint {
    n: u32,
    d: u32,
    values: BTreeMap<VarId, Rat>,
}

impl LagrangianPoint {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn value(&self, alpha: &SignedSequence, level: u32) -> Rat {
        self.values
            .get(&(alpha.clone(), level))
            .cloned()
            .unwrap_or_else(<Rat as Zero>::zero)
    }

    pub fn values(&self) -> &BTreeMap<VarId, Rat> {
        &self.values
    }

    /// Evaluate a functional-style combination `Σ c·p_α^{(a)}`.
    pub fn eval_combination(&self, terms: &BTreeMap<VarId, Rat>) -> Rat {
        let mut out = <Rat as Zero>::zero();
        for (v, c) in terms {
            out += c * self.value(&v.0, v.1);
        }
        out
    }

    pub fn json(&self) -> serde_json::Value {
        let values: Vec<serde_json::Value> = self
            .values
            .iter()
            .map(|((s, a), c)| {
                serde_json::json!({ "seq": s.entries(), "level": a, "value": rat_display(c) })
            })
            .collect();
        serde_json::json!({ "d": self.d, "n": self.n, "values": values })
    }
}

/// Build the row space `(I | X(t))` with `X` symmetric about its
/// antidiagonal, entry degrees bounded by a random row profile summing to
/// `d`; every minor then has degree at most `d` and the row space is
/// isotropic for all `t`.
pub fn lagrangian_point(n: u32, d: u32, seed: u64) -> LagrangianPoint {
    let mut rng = StdRng::seed_from_u64(seed);
    // random composition of d into n parts
    let mut profile = vec![0u32; n as usize];
    for _ in 0..d {
        profile[rng.gen_range(0..n as usize)] += 1;
    }
    let nn = n as usize;
    let mut x: Vec<Vec<TPoly<Rat>>> = vec![vec![vec![]; nn]; nn];
    for i in 0..nn {
        for j in 0..nn {
            let (mi, mj) = (nn - 1 - j, nn - 1 - i); // antidiagonal mirror
            if (mi, mj) < (i, j) {
                continue; // orbit already sampled
            }
            let cap = profile[i].min(profile[mi]) as usize;
            let poly: TPoly<Rat> = (0..=cap)
                .map(|_| Rat::from_integer(rng.gen_range(-99i64..=99).into()))
                .collect();
            x[i][j] = poly.clone();
            x[mi][mj] = poly;
        }
    }
    lagrangian_point_from_block(n, d, &x)
}

/// The degenerate point with `X = 0`: only the all-negative coordinate at
/// level zero is nonzero.
pub fn lagrangian_point_zero(n: u32, d: u32) -> LagrangianPoint {
    let x = vec![vec![vec![]; n as usize]; n as usize];
    lagrangian_point_from_block(n, d, &x)
}

fn lagrangian_point_from_block(n: u32, d: u32, x: &[Vec<TPoly<Rat>>]) -> LagrangianPoint {
    let nn = n as usize;
    // assemble (I | X) and take all minors
    let mut full: Vec<Vec<TPoly<Rat>>> = vec![vec![vec![]; 2 * nn]; nn];
    for i in 0..nn {
        full[i][i] = vec![<Rat as One>::one()];
        for j in 0..nn {
            full[i][nn + j] = x[i][j].clone();
        }
    }
    let pm = PolyMatrix {
        n,
        d,
        entries: full,
    };
    let mut values = BTreeMap::new();
    for alpha in all_full_sequences(n) {
        let minor = pm.minor(&alpha);
        assert!(
            minor.len() <= d as usize + 1 || minor[d as usize + 1..].iter().all(Zero::is_zero),
            "minor degree exceeds d"
        );
        for level in 0..=d {
            values.insert((alpha.clone(), level), tp_coeff(&minor, level as usize));
        }
    }
    LagrangianPoint { n, d, values }
}

// ---------------------------------------------------------------------------
// the verification report
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct AslCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug)]
pub struct AslReport {
    pub d: u32,
    pub n: u32,
    pub checks: Vec<AslCheck>,
    pub system: StraighteningSystem,
}

impl AslReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for AslReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "straightening verification at (d, n) = ({}, {})", self.d, self.n)?;
        for c in &self.checks {
            writeln!(
                f,
                "  [{}] {}: {}",
                if c.passed { "pass" } else { "FAIL" },
                c.name,
                c.detail
            )?;
        }
        Ok(())
    }
}

/// Run the full verification: basis counts against the Hilbert pipeline, the
/// lexicographic condition, the two-leading-term shape, and vanishing on
/// random isotropic points.
pub fn verify_asl(d: u32, n: u32, seed: u64, max_monomials: usize) -> Result<AslReport> {
    let nf = northeast_normal_form(d, n)?;
    let ideal = ideal_quadrics(d, n, seed, max_monomials)?;
    let system = straightening_relations(d, n, &nf, &ideal)?;
    let mut checks = Vec::new();

    // (a) standard monomials form a basis of the degree-2 quotient and
    // their count matches the Hilbert polynomial at 2
    let k = system.ne_vars.len();
    let total = k * (k + 1) / 2;
    let standard = (0..k)
        .flat_map(|i| (i..k).map(move |j| (i, j)))
        .filter(|&(i, j)| {
            system.is_standard(&(system.ne_vars[i].clone(), system.ne_vars[j].clone()))
        })
        .count();
    let ds = DosetStructure::build(d, n, u64::MAX)?;
    let hp = hilbert_polynomial(&chain_count_matrix(&ds.to_doset()?)?);
    let hp2 = hp.eval(2);
    let basis_ok = system.relations.len() == total - standard
        && hp2 == Rat::from_integer((standard as i64).into());
    checks.push(AslCheck {
        name: "degree-2 standard basis",
        passed: basis_ok,
        detail: format!(
            "{} relations, {} standard of {} monomials, HP(2) = {}",
            system.relations.len(),
            standard,
            total,
            hp2
        ),
    });

    // (b) every reduced tail is lexicographically smaller than its lead
    let mut lex_ok = true;
    let mut lex_detail = String::from("all tails lexicographically smaller");
    'outer: for rel in &system.relations {
        let lead_tuple = endpoint_tuple(&system, &rel.lead);
        for (_, m) in &rel.rhs {
            let tup = endpoint_tuple(&system, m);
            match lex_compare(&tup, &lead_tuple) {
                Some(Ordering::Less) => {}
                _ => {
                    lex_ok = false;
                    lex_detail = format!(
                        "tail ({}^({}), {}^({})) not below lead ({}^({}), {}^({}))",
                        m.0 .0, m.0 .1, m.1 .0, m.1 .1, rel.lead.0 .0, rel.lead.0 .1,
                        rel.lead.1 .0, rel.lead.1 .1
                    );
                    break 'outer;
                }
            }
        }
    }
    checks.push(AslCheck {
        name: "lexicographic descent",
        passed: lex_ok,
        detail: lex_detail,
    });

    // (c) two-leading-term shape on chained endpoint quadruples
    let (shape_ok, shape_detail) = check_two_leading_terms(&system);
    checks.push(AslCheck {
        name: "two-leading-term shape",
        passed: shape_ok,
        detail: shape_detail,
    });

    // (d) every relation vanishes at random isotropic points
    let mut eval_ok = true;
    let mut eval_detail = String::from("all relations vanish at 20 isotropic points");
    'eval: for k in 0..20u64 {
        let pt = lagrangian_point(n, d, seed.wrapping_add(k));
        for rel in &system.relations {
            let mut acc = pt.value(&rel.lead.0 .0, rel.lead.0 .1)
                * pt.value(&rel.lead.1 .0, rel.lead.1 .1);
            for (c, (x, y)) in &rel.rhs {
                // lead = Σ rhs, so subtract
                acc -= c * pt.value(&x.0, x.1) * pt.value(&y.0, y.1);
            }
            if !Zero::is_zero(&acc) {
                eval_ok = false;
                eval_detail = format!(
                    "relation led by ({}^({}), {}^({})) nonzero at point {k}",
                    rel.lead.0 .0, rel.lead.0 .1, rel.lead.1 .0, rel.lead.1 .1
                );
                break 'eval;
            }
        }
    }
    checks.push(AslCheck {
        name: "vanishing on isotropic points",
        passed: eval_ok,
        detail: eval_detail,
    });

    Ok(AslReport {
        d,
        n,
        checks,
        system,
    })
}

/// Endpoint tuple of a doset monomial, factors ordered by the term order.
fn endpoint_tuple(system: &StraighteningSystem, m: &DosetMonomial) -> Vec<PosetElement> {
    let first = &m.0;
    let second = &m.1;
    let (a, b) = if system.order.position(first) <= system.order.position(second) {
        (first, second)
    } else {
        (second, first)
    };
    let (h1, c1) = StraighteningSystem::doset_pair(a);
    let (h2, c2) = StraighteningSystem::doset_pair(b);
    vec![h1, c1, h2, c2]
}

/// Position-wise comparison in the coordinate order; `None` when some
/// differing position is incomparable.
fn lex_compare(a: &[PosetElement], b: &[PosetElement]) -> Option<Ordering> {
    for (x, y) in a.iter().zip(b) {
        if x == y {
            continue;
        }
        if poset::leq_unchecked(x, y) {
            return Some(Ordering::Less);
        }
        if poset::leq_unchecked(y, x) {
            return Some(Ordering::Greater);
        }
        return None;
    }
    Some(Ordering::Equal)
}

fn check_two_leading_terms(system: &StraighteningSystem) -> (bool, String) {
    let rewrite: BTreeMap<&DosetMonomial, &Vec<(Rat, DosetMonomial)>> = system
        .relations
        .iter()
        .map(|r| (&r.lead, &r.rhs))
        .collect();
    let mut checked = 0usize;
    for (i, v) in system.ne_vars.iter().enumerate() {
        for w in &system.ne_vars[i..] {
            let m = (v.clone(), w.clone());
            if system.is_standard(&m) {
                continue;
            }
            // hypothesis of the shape condition: the four endpoints chain up
            let (h1, c1) = StraighteningSystem::doset_pair(v);
            let (h2, c2) = StraighteningSystem::doset_pair(w);
            let mut endpoints = vec![h1, c1, h2, c2];
            let chained = {
                let mut ok = true;
                'sortcheck: for a in 0..4 {
                    for b in (a + 1)..4 {
                        if !poset::leq_unchecked(&endpoints[a], &endpoints[b])
                            && !poset::leq_unchecked(&endpoints[b], &endpoints[a])
                        {
                            ok = false;
                            break 'sortcheck;
                        }
                    }
                }
                ok
            };
            if !chained {
                continue;
            }
            endpoints.sort_by(|x, y| {
                if x == y {
                    Ordering::Equal
                } else if poset::leq_unchecked(x, y) {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            });
            // the sorted pairing must itself consist of doset members
            let sorted_pair = |lo: &PosetElement, hi: &PosetElement| -> Option<VarId> {
                if !crate::doset::is_admissible_pair(lo, hi) {
                    return None;
                }
                let pair = crate::seq::AdmissiblePair::new(lo.seq().clone(), hi.seq().clone())
                    .ok()?;
                let fiber = crate::seq::fiber(&pair).ok()?;
                let ne = fiber.into_iter().find(|s| s.is_northeast())?;
                Some((ne, lo.level()))
            };
            let Some(first) = sorted_pair(&endpoints[0], &endpoints[1]) else {
                return (
                    false,
                    format!("sorted pair ({}, {}) not admissible", endpoints[0], endpoints[1]),
                );
            };
            let Some(second) = sorted_pair(&endpoints[2], &endpoints[3]) else {
                return (
                    false,
                    format!("sorted pair ({}, {}) not admissible", endpoints[2], endpoints[3]),
                );
            };
            let Some(rhs) = rewrite.get(&m) else {
                return (
                    false,
                    format!("missing relation for ({}^({}), {}^({}))", v.0, v.1, w.0, w.1),
                );
            };
            let target = system.canonical(&first, &second);
            let coeff = rhs
                .iter()
                .find(|(_, t)| *t == target)
                .map(|(c, _)| c.clone());
            let ok = matches!(&coeff, Some(c) if c.abs() == <Rat as One>::one())
                // degenerate quadruples can collapse the second monomial
                // into the lead itself; then nothing is required
                || target == m;
            if !ok {
                return (
                    false,
                    format!(
                        "second term of ({}^({}), {}^({})) is not ±({}^({}), {}^({}))",
                        v.0, v.1, w.0, w.1, target.0 .0, target.0 .1, target.1 .0, target.1 .1
                    ),
                );
            }
            checked += 1;
        }
    }
    (true, format!("{checked} chained non-standard products verified"))
}

use num_traits::Signed;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seq::admissible_sequences;

    fn seq(s: &str) -> SignedSequence {
        SignedSequence::parse_full(s).unwrap()
    }

    fn rat(v: i64) -> Rat {
        Rat::from_integer(v.into())
    }

    #[test]
    fn row_degree_profile() {
        assert_eq!(row_degrees(0, 3), vec![0, 0, 0]);
        assert_eq!(row_degrees(1, 2), vec![1, 0]);
        assert_eq!(row_degrees(2, 2), vec![1, 1]);
        assert_eq!(row_degrees(5, 3), vec![2, 2, 1]);
    }

    #[test]
    fn phi_smoke_tests() {
        // d = 0: the minor of a constant matrix
        let mut rng = StdRng::seed_from_u64(1);
        let pm = PolyMatrix::random(2, 0, &mut rng);
        let alpha = seq("\\bar2\\bar1");
        let v = pm.phi_eval(&alpha, 0);
        let direct = &pm.entries[0][0] [0] * &pm.entries[1][1][0]
            - &pm.entries[0][1][0] * &pm.entries[1][0][0];
        assert_eq!(v, direct);
        // d = 1, n = 1: a single 1×1 "minor" reproduces the entry
        let pm = PolyMatrix::random(1, 1, &mut rng);
        let a = SignedSequence::full(1, vec![1]).unwrap();
        assert_eq!(pm.phi_eval(&a, 0), pm.entries[0][1][0]);
        assert_eq!(pm.phi_eval(&a, 1), pm.entries[0][1][1]);
    }

    #[test]
    fn phi_symbolic_matches_numeric() {
        let mut rng = StdRng::seed_from_u64(9);
        let pm = PolyMatrix::random(2, 1, &mut rng);
        for alpha in all_full_sequences(2) {
            for level in 0..=1u32 {
                let sym = phi_image(1, 2, &[(alpha.clone(), level)]);
                // substitute the numeric entries into the symbolic answer
                let mut num = rat(0);
                for (key, c) in &sym.terms {
                    let mut prod = c.clone();
                    for &((i, j, t), e) in key {
                        for _ in 0..e {
                            prod *= pm.entries[i as usize][j as usize][t as usize].clone();
                        }
                    }
                    num += prod;
                }
                assert_eq!(num, pm.phi_eval(&alpha, level));
            }
        }
    }

    #[test]
    fn gr24_kernel_is_the_three_term_relation() {
        let ideal = ideal_quadrics(0, 2, 42, 10_000).unwrap();
        assert_eq!(ideal.relations.len(), 1);
        let rel = &ideal.relations[0];
        // lead: the incomparable product p_{\bar11} p_{\bar22}
        let lead_set: BTreeSet<&SignedSequence> = [&rel.lead.0 .0, &rel.lead.1 .0].into();
        let expect: BTreeSet<SignedSequence> =
            [seq("\\bar11"), seq("\\bar22")].into_iter().collect();
        assert_eq!(lead_set, expect.iter().collect());
        assert_eq!(rel.terms.len(), 2);
        // tails: ± p_{\bar2\bar1} p_{12} and ± p_{\bar21} p_{\bar12}
        for (c, _) in &rel.terms {
            assert_eq!(c.abs(), rat(1).abs());
        }
        assert!(verify_relation_symbolically(0, 2, rel));
    }

    #[test]
    fn kernel_dimension_counts() {
        // #monomials − #comparable pairs
        let ideal = ideal_quadrics(0, 2, 7, 10_000).unwrap();
        let nv = ideal.vars.len();
        assert_eq!(nv, 6);
        assert_eq!(ideal.relations.len(), nv * (nv + 1) / 2 - ideal.comparable_pairs);
        assert_eq!(ideal.relations.len(), 1);
    }

    #[test]
    fn kernel_relations_symbolic_and_interval_shape() {
        for (d, n) in [(0u32, 2u32), (1, 2)] {
            let ideal = ideal_quadrics(d, n, 5, 10_000).unwrap();
            let order = TermOrder::new(d, n);
            for rel in &ideal.relations {
                assert!(verify_relation_symbolically(d, n, rel), "({d},{n})");
                // lead is incomparable, tails comparable pairs within range
                assert!(
                    !big_leq(&rel.lead.0, &rel.lead.1) && !big_leq(&rel.lead.1, &rel.lead.0),
                    "lead of a kernel relation must be incomparable"
                );
                let (lo, hi) = (&rel.lead.0, &rel.lead.1);
                for (_, (x, y)) in &rel.terms {
                    let (a, b) = if order.position(x) <= order.position(y) {
                        (x, y)
                    } else {
                        (y, x)
                    };
                    assert!(big_leq(a, b), "tail monomials are chains");
                    // the incomparable pair lies in the interval [a, b]
                    assert!(big_leq(a, lo) && big_leq(a, hi));
                    assert!(big_leq(lo, b) && big_leq(hi, b));
                }
            }
        }
    }

    #[test]
    fn term_order_refines_poset() {
        for (d, n) in [(1u32, 2u32), (0, 3), (2, 2)] {
            let order = TermOrder::new(d, n);
            for x in poset::build_poset(d, n) {
                for (y, _) in poset::covers(&x, d) {
                    let vx = (x.seq().clone(), x.level());
                    let vy = (y.seq().clone(), y.level());
                    assert!(order.position(&vx) < order.position(&vy));
                }
            }
            // Northeast minimal within each fiber
            for s in all_full_sequences(n) {
                if s.is_northeast() {
                    continue;
                }
                let fiber = crate::seq::fiber(&s.pi()).unwrap();
                let ne = fiber.iter().find(|g| g.is_northeast()).unwrap();
                assert!(order.position(&(ne.clone(), 0)) < order.position(&(s.clone(), 0)));
            }
        }
    }

    #[test]
    fn lg2_straightening() {
        let nf = northeast_normal_form(0, 2).unwrap();
        let ideal = ideal_quadrics(0, 2, 11, 10_000).unwrap();
        let system = straightening_relations(0, 2, &nf, &ideal).unwrap();
        assert_eq!(system.ne_vars.len(), 5);
        assert_eq!(system.relations.len(), 1);
        let rel = &system.relations[0];
        // lead: the square of the off-diagonal variable p_{\bar22}
        assert_eq!(rel.lead.0 .0, seq("\\bar22"));
        assert_eq!(rel.lead.1 .0, seq("\\bar22"));
        // rhs: ± p_{\bar21} p_{\bar12} and ± p_{\bar2\bar1} p_{12}
        assert_eq!(rel.rhs.len(), 2);
        let supports: BTreeSet<BTreeSet<String>> = rel
            .rhs
            .iter()
            .map(|(_, (x, y))| {
                [x.0.to_string(), y.0.to_string()]
                    .into_iter()
                    .collect::<BTreeSet<_>>()
            })
            .collect();
        assert!(supports.contains(&["\\bar21".to_string(), "\\bar12".to_string()].into()));
        assert!(supports.contains(&["\\bar2\\bar1".to_string(), "12".to_string()].into()));
    }

    #[test]
    fn straighten_is_idempotent_and_fixes_standard() {
        for (d, n) in [(0u32, 2u32), (1, 2)] {
            let nf = northeast_normal_form(d, n).unwrap();
            let ideal = ideal_quadrics(d, n, 3, 10_000).unwrap();
            let system = straightening_relations(d, n, &nf, &ideal).unwrap();
            let k = system.ne_vars.len();
            for i in 0..k {
                for j in i..k {
                    let m = (system.ne_vars[i].clone(), system.ne_vars[j].clone());
                    let out = system.straighten(&m).unwrap();
                    for (_, t) in &out {
                        assert!(system.is_standard(t));
                    }
                    if system.is_standard(&m) {
                        assert_eq!(out.len(), 1);
                        assert_eq!(out[0].0, rat(1));
                        assert_eq!(out[0].1, m);
                    } else {
                        // idempotence: straightening the output is a no-op
                        for (_, t) in &out {
                            let again = system.straighten(t).unwrap();
                            assert_eq!(again.len(), 1);
                            assert_eq!(again[0].1, *t);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn verify_asl_small_cases() {
        for (d, n) in [(0u32, 2u32), (1, 2)] {
            let report = verify_asl(d, n, 17, 10_000).unwrap();
            assert!(report.passed(), "{report}");
        }
    }

    #[test]
    fn lagrangian_point_zero_matrix() {
        let pt = lagrangian_point_zero(3, 1);
        let bottom = SignedSequence::full(3, vec![-3, -2, -1]).unwrap();
        assert_eq!(pt.value(&bottom, 0), rat(1));
        for ((s, a), v) in pt.values() {
            if (s.clone(), *a) != (bottom.clone(), 0) {
                assert!(Zero::is_zero(v), "{s}^({a})");
            }
        }
    }

    #[test]
    fn involution_identity_on_points() {
        // p_α = σ_α p_{α^t} at 50 seeded points for n ≤ 4, d ≤ 1
        for n in 1..=4u32 {
            for d in 0..=1u32 {
                for seed in 0..(50 / 4) as u64 {
                    let pt = lagrangian_point(n, d, 1000 * u64::from(n) + seed);
                    for alpha in all_full_sequences(n) {
                        let t = alpha.transpose();
                        let sigma = rat(alpha.sigma().value());
                        for a in 0..=d {
                            assert_eq!(
                                pt.value(&alpha, a),
                                sigma.clone() * pt.value(&t, a),
                                "α = {alpha}, a = {a}, n = {n}, d = {d}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn linear_forms_vanish_on_points() {
        // every relation generator vanishes at isotropic points (n = 4, d = 1)
        let forms = crate::exterior::linear_forms(1, 4);
        for seed in 0..3u64 {
            let pt = lagrangian_point(4, 1, 777 + seed);
            for f in &forms {
                let terms: BTreeMap<VarId, Rat> = f
                    .terms()
                    .iter()
                    .map(|(k, c)| ((k.clone(), f.level()), c.clone()))
                    .collect();
                assert!(Zero::is_zero(&pt.eval_combination(&terms)));
            }
        }
    }

    #[test]
    fn quadric_resource_guard() {
        match ideal_quadrics(0, 3, 1, 10) {
            Err(Error::ResourceLimit { .. }) => {}
            other => panic!("expected resource error, got {other:?}"),
        }
    }

    #[test]
    fn degenerate_pieces_have_no_doset_relations_at_n1() {
        // n = 1: two coordinates per level, no linear forms, everything NE
        let nf = northeast_normal_form(1, 1).unwrap();
        let ideal = ideal_quadrics(1, 1, 2, 10_000).unwrap();
        let system = straightening_relations(1, 1, &nf, &ideal).unwrap();
        // binom(2,1)_1 is a chain, so every monomial is standard
        assert!(system.relations.is_empty());
        let _ = system.json();
        let _ = admissible_sequences(1);
    }
}
