//! Exact models of `∧^k C^{2n}` and its dual.
//!
//! The symplectic form is `Ω = Σ_i e*_{-i} ∧ e*_i`.  Contraction against Ω
//! drops a `{-k, k}` pair from a basis vector with the sign of the
//! permutation moving the pair to the front; wedging a dual basis vector
//! with Ω inserts such pairs with the sorting sign.  On top of these sit the
//! spaces of linear coefficient relations, the hypercube kernel elements of
//! the contraction, and the Northeast reduced normal form obtained by exact
//! elimination in each weight space.

use crate::linalg::{row_reduce, Mat, Rat};
use crate::seq::{all_full_sequences, all_subsets, Sign, SignedSequence};
use crate::{Error, Result};
use num_traits::{One, Zero};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// Sort a list of distinct `⟨n⟩` letters, returning the sorted sequence and
/// the sign of the sorting permutation; `None` when letters repeat.
pub fn sort_with_sign(n: u32, letters: &[i32]) -> Option<(SignedSequence, Sign)> {
    let set: BTreeSet<i32> = letters.iter().copied().collect();
    if set.len() != letters.len() {
        return None;
    }
    let as64: Vec<i64> = letters.iter().map(|&e| e as i64).collect();
    let sign = crate::seq::sort_sign(&as64);
    let sorted: Vec<i32> = set.into_iter().collect();
    Some((SignedSequence::new(n, sorted).expect("sorted letters"), sign))
}

/// An element of `∧^k C^{2n}` with exact rational coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiVector {
    n: u32,
    k: usize,
    terms: BTreeMap<SignedSequence, Rat>,
}

impl MultiVector {
    pub fn zero(n: u32, k: usize) -> Self {
        MultiVector {
            n,
            k,
            terms: BTreeMap::new(),
        }
    }

    /// The basis vector `e_{α_1} ∧ … ∧ e_{α_k}` for an increasing `α`.
    pub fn basis(alpha: SignedSequence) -> Self {
        let n = alpha.n();
        let k = alpha.len();
        let mut terms = BTreeMap::new();
        terms.insert(alpha, Rat::one());
        MultiVector { n, k, terms }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn terms(&self) -> &BTreeMap<SignedSequence, Rat> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, key: &SignedSequence) -> Rat {
        self.terms.get(key).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add_term(&mut self, key: SignedSequence, coeff: Rat) {
        debug_assert_eq!(key.len(), self.k);
        debug_assert_eq!(key.n(), self.n);
        let slot = self.terms.entry(key.clone()).or_insert_with(Rat::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&mut self, other: &MultiVector) {
        assert_eq!((self.n, self.k), (other.n, other.k));
        for (key, c) in &other.terms {
            self.add_term(key.clone(), c.clone());
        }
    }

    pub fn scale(&mut self, factor: &Rat) {
        if factor.is_zero() {
            self.terms.clear();
            return;
        }
        for c in self.terms.values_mut() {
            *c *= factor.clone();
        }
    }
}

impl fmt::Debug for MultiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| format!("{}·v[{}]", crate::linalg::rat_display(c), k))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A functional on `∧^k C^{2n}`, tagged with a level for the graded setting.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearFunctional {
    n: u32,
    k: usize,
    level: u32,
    terms: BTreeMap<SignedSequence, Rat>,
}

impl LinearFunctional {
    pub fn zero(n: u32, k: usize, level: u32) -> Self {
        LinearFunctional {
            n,
            k,
            level,
            terms: BTreeMap::new(),
        }
    }

    /// The dual basis vector `e*_{α_1} ∧ … ∧ e*_{α_k}`.
    pub fn basis(alpha: SignedSequence, level: u32) -> Self {
        let n = alpha.n();
        let k = alpha.len();
        let mut terms = BTreeMap::new();
        terms.insert(alpha, Rat::one());
        LinearFunctional {
            n,
            k,
            level,
            terms,
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn terms(&self) -> &BTreeMap<SignedSequence, Rat> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, key: &SignedSequence) -> Rat {
        self.terms.get(key).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add_term(&mut self, key: SignedSequence, coeff: Rat) {
        debug_assert_eq!(key.len(), self.k);
        let slot = self.terms.entry(key.clone()).or_insert_with(Rat::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// Dual pairing against a multivector of the same degree.
    pub fn eval(&self, v: &MultiVector) -> Rat {
        assert_eq!((self.n, self.k), (v.n, v.k));
        let mut out = Rat::zero();
        for (key, c) in &self.terms {
            if let Some(d) = v.terms.get(key) {
                out += c * d;
            }
        }
        out
    }

    /// Wedge with `Ω` on the left: inserts every disjoint `{-i, i}` pair,
    /// with sorting signs.
    pub fn omega_wedge(&self) -> LinearFunctional {
        let mut out = LinearFunctional::zero(self.n, self.k + 2, self.level);
        for (key, c) in &self.terms {
            for i in 1..=self.n as i32 {
                if key.contains(i) || key.contains(-i) {
                    continue;
                }
                let mut letters = vec![-i, i];
                letters.extend_from_slice(key.entries());
                let (sorted, sign) = sort_with_sign(self.n, &letters).expect("disjoint letters");
                out.add_term(sorted, c * Rat::from_integer(sign.value().into()));
            }
        }
        out
    }
}

impl fmt::Debug for LinearFunctional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| format!("{}·p[{}]^({})", crate::linalg::rat_display(c), k, self.level))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Contraction `Ω ⌟ v`: drops each `{-k, k}` pair of letters with the sign
/// of the permutation moving the pair to the front.
pub fn contract_omega(v: &MultiVector) -> Result<MultiVector> {
    if v.degree() < 2 {
        return Err(Error::Domain(format!(
            "contraction needs degree ≥ 2, got {}",
            v.degree()
        )));
    }
    let mut out = MultiVector::zero(v.n(), v.degree() - 2);
    for (key, c) in v.terms() {
        let entries = key.entries();
        for i in 0..entries.len() {
            for j in (i + 1)..entries.len() {
                if entries[i] != -entries[j] {
                    continue;
                }
                let sign = Sign::from_parity(i + j + 1);
                let rest: Vec<i32> = entries
                    .iter()
                    .enumerate()
                    .filter(|&(t, _)| t != i && t != j)
                    .map(|(_, &e)| e)
                    .collect();
                let reduced = SignedSequence::new(v.n(), rest).expect("subsequence");
                out.add_term(reduced, c * Rat::from_integer(sign.value().into()));
            }
        }
    }
    Ok(out)
}

/// The linear forms spanning the space of coefficient relations:
/// `ℓ_α^(a) = Ω ∧ e*_α` for `α` over `(n-2)`-subsets and each level.
/// Empty for `n < 2`.
pub fn linear_forms(d: u32, n: u32) -> Vec<LinearFunctional> {
    if n < 2 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for level in 0..=d {
        for alpha in all_subsets(n, n as usize - 2) {
            let form = LinearFunctional::basis(alpha, level).omega_wedge();
            out.push(form);
        }
    }
    out
}

/// Weight of a coordinate index: the toral part as a vector over `[n]` and
/// the extra `d - 2a` part tracking the level.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    h: Vec<i32>,
    big_h: i64,
}

impl Weight {
    pub fn h(&self) -> &[i32] {
        &self.h
    }

    pub fn big_h(&self) -> i64 {
        self.big_h
    }

    pub fn is_toral_zero(&self) -> bool {
        self.h.iter().all(|&x| x == 0)
    }
}

/// Weight of `p_α^(a)`: letters whose negative also appears contribute
/// nothing; the rest contribute `±1` at their absolute value.
pub fn weight_of(alpha: &SignedSequence, level: u32, d: u32) -> Weight {
    let mut h = vec![0i32; alpha.n() as usize];
    for &e in alpha.entries() {
        if !alpha.contains(-e) {
            h[e.unsigned_abs() as usize - 1] += e.signum();
        }
    }
    Weight {
        h,
        big_h: d as i64 - 2 * level as i64,
    }
}

/// A matching of a half-size positive index `α ⊆ [2m]` with its complement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    alpha: Vec<u32>,
    image: Vec<u32>,
}

impl Matching {
    /// `image[i]` is the partner of `alpha[i]`; it must enumerate the
    /// complement of `alpha` in `[2m]`.
    pub fn new(alpha: Vec<u32>, image: Vec<u32>) -> Result<Self> {
        let m = alpha.len();
        if image.len() != m {
            return Err(Error::Invalid("matching arity mismatch".into()));
        }
        if !alpha.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::Invalid("matching domain not increasing".into()));
        }
        let max = 2 * m as u32;
        let domain: BTreeSet<u32> = alpha.iter().copied().collect();
        let range: BTreeSet<u32> = image.iter().copied().collect();
        if range.len() != m
            || alpha.iter().chain(&image).any(|&x| x == 0 || x > max)
            || !domain.is_disjoint(&range)
        {
            return Err(Error::Invalid(format!(
                "{image:?} is not a matching of {alpha:?} with its complement"
            )));
        }
        Ok(Matching { alpha, image })
    }

    /// The componentwise matching `α_i ↦ (α^c)_i`; descending exactly when
    /// the index is Northeast.
    pub fn canonical(alpha: &[u32]) -> Result<Self> {
        let m = alpha.len();
        let set: BTreeSet<u32> = alpha.iter().copied().collect();
        let image: Vec<u32> = (1..=2 * m as u32).filter(|x| !set.contains(x)).collect();
        Matching::new(alpha.to_vec(), image)
    }

    pub fn domain(&self) -> &[u32] {
        &self.alpha
    }

    pub fn is_descending(&self) -> bool {
        self.alpha.iter().zip(&self.image).all(|(a, b)| b < a)
    }

    fn apply(&self, subset: u32) -> Vec<u32> {
        // swap alpha[i] with image[i] for each bit i of subset
        let mut out = Vec::with_capacity(self.alpha.len());
        for (i, &a) in self.alpha.iter().enumerate() {
            out.push(if subset & (1 << i) != 0 {
                self.image[i]
            } else {
                a
            });
        }
        out.sort_unstable();
        out
    }
}

/// The weight-zero sequence `(-β_m, …, -β_1, β_1, …, β_m)` over `⟨2m⟩`.
fn zero_weight_full(m: usize, beta: &[u32]) -> SignedSequence {
    let mut entries: Vec<i32> = beta.iter().map(|&b| -(b as i32)).collect();
    entries.extend(beta.iter().map(|&b| b as i32));
    entries.sort_unstable();
    SignedSequence::full(2 * m as u32, entries).expect("zero-weight sequence")
}

/// The alternating hypercube sum `K_α = Σ_{I} (-1)^{|I|} v_{I·α}` over the
/// vertices of the matching hypercube; annihilated by the contraction.
pub fn kernel_element(alpha: &[u32], matching: &Matching) -> Result<MultiVector> {
    if matching.domain() != alpha {
        return Err(Error::Domain("matching does not belong to this index".into()));
    }
    let m = alpha.len();
    let mut out = MultiVector::zero(2 * m as u32, 2 * m);
    for subset in 0u32..(1 << m) {
        let beta = matching.apply(subset);
        let sign = Sign::from_parity(subset.count_ones() as usize);
        out.add_term(
            zero_weight_full(m, &beta),
            Rat::from_integer(sign.value().into()),
        );
    }
    Ok(out)
}

/// Hypercube kernel element in an arbitrary weight slice, normalized by the
/// paired-block arrangement `(e_{-k_1} ∧ e_{k_1}) ∧ … ∧ e_{fixed}`.
///
/// `alpha` is any full sequence; its paired letters are flattened onto
/// `[2m']`, matched canonically (which requires the flattened index to be
/// descending-matchable), and the hypercube is summed with the block signs.
pub fn slice_kernel_element(alpha: &SignedSequence) -> Result<MultiVector> {
    let n = alpha.n();
    let fixed: Vec<i32> = alpha
        .entries()
        .iter()
        .copied()
        .filter(|&e| !alpha.contains(-e))
        .collect();
    let paired: Vec<u32> = alpha
        .entries()
        .iter()
        .copied()
        .filter(|&e| e > 0 && alpha.contains(-e))
        .map(|e| e as u32)
        .collect();
    let letters: Vec<u32> = (1..=n)
        .filter(|&l| !fixed.iter().any(|&e| e.unsigned_abs() == l))
        .collect();
    // flatten the available letters onto 1..2m'
    let flat: BTreeMap<u32, u32> = letters
        .iter()
        .enumerate()
        .map(|(i, &l)| (l, i as u32 + 1))
        .collect();
    let unflat: BTreeMap<u32, u32> = flat.iter().map(|(&l, &f)| (f, l)).collect();
    let beta_flat: Vec<u32> = paired.iter().map(|&b| flat[&b]).collect();
    let matching = Matching::canonical(&beta_flat)?;
    if !matching.is_descending() {
        return Err(Error::Domain(format!(
            "{alpha} has no descending canonical matching in its slice"
        )));
    }
    let m = beta_flat.len();
    let mut out = MultiVector::zero(n, n as usize);
    for subset in 0u32..(1 << m) {
        let gamma_flat = matching.apply(subset);
        let gamma: Vec<u32> = gamma_flat.iter().map(|&f| unflat[&f]).collect();
        // block arrangement: (-k₁, k₁, -k₂, k₂, …, fixed…)
        let mut letters_arranged: Vec<i32> = Vec::with_capacity(n as usize);
        for &k in &gamma {
            letters_arranged.push(-(k as i32));
            letters_arranged.push(k as i32);
        }
        letters_arranged.extend_from_slice(&fixed);
        let (sorted, block_sign) =
            sort_with_sign(n, &letters_arranged).expect("distinct letters");
        let sign = Sign::from_parity(subset.count_ones() as usize) * block_sign;
        out.add_term(sorted, Rat::from_integer(sign.value().into()));
    }
    Ok(out)
}

/// Exact dimension of the contraction kernel on the zero-weight slice of
/// `∧^{2m} C^{4m}`; equals `binom(2m, m)/(m+1)`.
pub fn zero_weight_dimension(m: usize) -> usize {
    let sources: Vec<Vec<u32>> = positive_subsets(2 * m as u32, m);
    let targets: Vec<Vec<u32>> = positive_subsets(2 * m as u32, m - 1);
    let target_index: BTreeMap<Vec<u32>, usize> = targets
        .iter()
        .enumerate()
        .map(|(i, t)| (t.clone(), i))
        .collect();
    let mut mat = Mat::zero(sources.len(), targets.len());
    for (row, beta) in sources.iter().enumerate() {
        let v = MultiVector::basis(zero_weight_full(m, beta));
        let image = contract_omega(&v).expect("degree ≥ 2");
        for (key, c) in image.terms() {
            // keys of the image on the zero-weight slice are again paired
            let gamma: Vec<u32> = key
                .entries()
                .iter()
                .copied()
                .filter(|&e| e > 0)
                .map(|e| e as u32)
                .collect();
            if gamma.len() == m - 1 && key.entries().iter().all(|&e| key.contains(-e)) {
                mat.data[row][target_index[&gamma]] += c;
            }
        }
    }
    sources.len() - mat.rank()
}

fn positive_subsets(bound: u32, k: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(bound: u32, k: usize, start: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for v in start..=bound {
            current.push(v);
            rec(bound, k, v + 1, current, out);
            current.pop();
        }
    }
    rec(bound, k, 1, &mut current, &mut out);
    out
}

/// The reduced normal form: every coordinate rewritten over Northeast
/// indices, computed per weight space by exact elimination.
#[derive(Clone, Debug)]
pub struct NormalFormTable {
    n: u32,
    d: u32,
    map: BTreeMap<(SignedSequence, u32), Vec<(Rat, SignedSequence)>>,
}

impl NormalFormTable {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    /// Expression of `p_α^(a)` over Northeast coordinates (identity on
    /// Northeast indices).
    pub fn expression(&self, alpha: &SignedSequence, level: u32) -> Option<&[(Rat, SignedSequence)]> {
        self.map
            .get(&(alpha.clone(), level))
            .map(|v| v.as_slice())
    }

    pub fn entries(&self) -> &BTreeMap<(SignedSequence, u32), Vec<(Rat, SignedSequence)>> {
        &self.map
    }

    pub fn json(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = self
            .map
            .iter()
            .map(|((alpha, level), combo)| {
                serde_json::json!({
                    "index": { "seq": alpha.entries(), "level": level },
                    "combination": combo
                        .iter()
                        .map(|(c, s)| {
                            serde_json::json!([crate::linalg::rat_display(c), s.entries()])
                        })
                        .collect::<Vec<_>>(),
                })
            })
            .collect();
        serde_json::json!({ "d": self.d, "n": self.n, "table": rows })
    }
}

/// Column order inside a weight slice: non-Northeast first, each block by
/// `(positive part, entries)`.
fn slice_columns(slice: &[SignedSequence]) -> Vec<SignedSequence> {
    let key = |s: &SignedSequence| (s.positive_part(), s.entries().to_vec());
    let mut non_ne: Vec<SignedSequence> = slice
        .iter()
        .filter(|s| !s.is_northeast())
        .cloned()
        .collect();
    non_ne.sort_by_key(&key);
    let mut ne: Vec<SignedSequence> = slice.iter().filter(|s| s.is_northeast()).cloned().collect();
    ne.sort_by_key(&key);
    non_ne.into_iter().chain(ne).collect()
}

/// Compute the Northeast reduced normal form for all levels `0…d`.
///
/// The elimination is performed once per toral weight (levels share the same
/// coefficient matrix); pivots must land exactly on the non-Northeast
/// columns, otherwise an internal error is raised.
pub fn northeast_normal_form(d: u32, n: u32) -> Result<NormalFormTable> {
    let forms = linear_forms(0, n);
    let mut slices: BTreeMap<Vec<i32>, Vec<SignedSequence>> = BTreeMap::new();
    for s in all_full_sequences(n) {
        let w = weight_of(&s, 0, 0);
        slices.entry(w.h().to_vec()).or_default().push(s);
    }
    let mut forms_by_weight: BTreeMap<Vec<i32>, Vec<&LinearFunctional>> = BTreeMap::new();
    for f in &forms {
        let mut weights: BTreeSet<Vec<i32>> = BTreeSet::new();
        for key in f.terms().keys() {
            weights.insert(weight_of(key, 0, 0).h().to_vec());
        }
        if f.is_zero() {
            continue;
        }
        if weights.len() != 1 {
            return Err(Error::Internal("linear form is not weight-homogeneous".into()));
        }
        forms_by_weight
            .entry(weights.into_iter().next().unwrap())
            .or_default()
            .push(f);
    }
    let mut map: BTreeMap<(SignedSequence, u32), Vec<(Rat, SignedSequence)>> = BTreeMap::new();
    for (weight, slice) in &slices {
        let columns = slice_columns(slice);
        let col_index: BTreeMap<&SignedSequence, usize> =
            columns.iter().enumerate().map(|(i, s)| (s, i)).collect();
        let non_ne_count = columns.iter().filter(|s| !s.is_northeast()).count();
        let mut expressions: BTreeMap<SignedSequence, Vec<(Rat, SignedSequence)>> =
            BTreeMap::new();
        if let Some(slice_forms) = forms_by_weight.get(weight) {
            let rows: Vec<Vec<Rat>> = slice_forms
                .iter()
                .map(|f| {
                    let mut row = vec![Rat::zero(); columns.len()];
                    for (key, c) in f.terms() {
                        row[col_index[key]] = c.clone();
                    }
                    row
                })
                .collect();
            let (pivots, reduced) = row_reduce(rows);
            if pivots != (0..non_ne_count).collect::<Vec<_>>() {
                return Err(Error::Internal(format!(
                    "elimination pivots {pivots:?} do not match the {non_ne_count} non-Northeast columns"
                )));
            }
            for (row, &pc) in reduced.iter().zip(&pivots) {
                let mut combo = Vec::new();
                for (j, col) in columns.iter().enumerate().skip(non_ne_count) {
                    if !row[j].is_zero() {
                        combo.push((-row[j].clone(), col.clone()));
                    }
                }
                expressions.insert(columns[pc].clone(), combo);
            }
        } else if non_ne_count != 0 {
            return Err(Error::Internal(
                "slice has non-Northeast members but no relations".into(),
            ));
        }
        for s in slice {
            let combo = if s.is_northeast() {
                vec![(Rat::one(), s.clone())]
            } else {
                expressions
                    .remove(s)
                    .ok_or_else(|| Error::Internal(format!("no expression for {s}")))?
            };
            for level in 0..=d {
                map.insert((s.clone(), level), combo.clone());
            }
        }
    }
    Ok(NormalFormTable { n, d, map })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seq::admissible_sequences;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn seq(s: &str) -> SignedSequence {
        SignedSequence::parse_full(s).unwrap()
    }

    fn sub(n: u32, entries: &[i32]) -> SignedSequence {
        SignedSequence::new(n, entries.to_vec()).unwrap()
    }

    fn rat(v: i64) -> Rat {
        Rat::from_integer(v.into())
    }

    #[test]
    fn contraction_of_a_single_pair() {
        let v = MultiVector::basis(sub(4, &[-4, 4]));
        let c = contract_omega(&v).unwrap();
        assert_eq!(c.degree(), 0);
        assert_eq!(c.coefficient(&sub(4, &[])), rat(1));
    }

    #[test]
    fn contraction_worked_example() {
        let v = MultiVector::basis(seq("\\bar4\\bar224"));
        let c = contract_omega(&v).unwrap();
        assert_eq!(c.coefficient(&sub(4, &[-4, 4])), rat(1));
        assert_eq!(c.coefficient(&sub(4, &[-2, 2])), rat(1));
        assert_eq!(c.terms().len(), 2);
    }

    #[test]
    fn contraction_domain_error() {
        assert!(contract_omega(&MultiVector::basis(sub(2, &[1]))).is_err());
    }

    #[test]
    fn contraction_wedge_duality() {
        // ⟨Ω ∧ φ, v⟩ = ⟨φ, Ω ⌟ v⟩ on random rational pairs
        let mut rng = StdRng::seed_from_u64(7);
        for n in [3u32, 4] {
            for _ in 0..100 {
                let k = n as usize - 2;
                let mut phi = LinearFunctional::zero(n, k, 0);
                for key in all_subsets(n, k) {
                    phi.add_term(key, rat(rng.gen_range(-9i64..=9)));
                }
                let mut v = MultiVector::zero(n, n as usize);
                for key in all_full_sequences(n) {
                    v.add_term(key, rat(rng.gen_range(-9i64..=9)));
                }
                let lhs = phi.omega_wedge().eval(&v);
                let rhs = phi.eval(&contract_omega(&v).unwrap());
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn weight_zero_generators_at_n4() {
        // the four weight-zero relation generators
        let forms = linear_forms(0, 4);
        let zero: Vec<&LinearFunctional> = forms
            .iter()
            .filter(|f| {
                f.terms()
                    .keys()
                    .all(|k| weight_of(k, 0, 0).is_toral_zero())
            })
            .collect();
        assert_eq!(zero.len(), 4);
        let find = |gen: &SignedSequence| -> &LinearFunctional {
            zero.iter()
                .find(|f| {
                    // Ω ∧ p_{\bar ii} is supported on keys containing ±i
                    f.terms().keys().all(|k| {
                        k.contains(gen.entries()[0]) && k.contains(gen.entries()[1])
                    })
                })
                .unwrap()
        };
        let l11 = find(&sub(4, &[-1, 1]));
        assert_eq!(l11.coefficient(&seq("\\bar4\\bar114")), rat(1));
        assert_eq!(l11.coefficient(&seq("\\bar3\\bar113")), rat(1));
        assert_eq!(l11.coefficient(&seq("\\bar2\\bar112")), rat(1));
        assert_eq!(l11.terms().len(), 3);
        let l22 = find(&sub(4, &[-2, 2]));
        assert_eq!(l22.coefficient(&seq("\\bar4\\bar224")), rat(1));
        assert_eq!(l22.coefficient(&seq("\\bar3\\bar223")), rat(1));
        assert_eq!(l22.coefficient(&seq("\\bar2\\bar112")), rat(1));
        let l33 = find(&sub(4, &[-3, 3]));
        assert_eq!(l33.coefficient(&seq("\\bar4\\bar334")), rat(1));
        assert_eq!(l33.coefficient(&seq("\\bar3\\bar223")), rat(1));
        assert_eq!(l33.coefficient(&seq("\\bar3\\bar113")), rat(1));
        let l44 = find(&sub(4, &[-4, 4]));
        assert_eq!(l44.coefficient(&seq("\\bar4\\bar334")), rat(1));
        assert_eq!(l44.coefficient(&seq("\\bar4\\bar224")), rat(1));
        assert_eq!(l44.coefficient(&seq("\\bar4\\bar114")), rat(1));
    }

    #[test]
    fn six_letter_form_example() {
        // ℓ for α = \bar6136: terms p_{\bar6\bar51356} + p_{\bar6\bar41346} - p_{\bar6\bar21236}
        let alpha = sub(6, &[-6, 1, 3, 6]);
        let l = LinearFunctional::basis(alpha, 0).omega_wedge();
        assert_eq!(l.coefficient(&seq("\\bar6\\bar51356")), rat(1));
        assert_eq!(l.coefficient(&seq("\\bar6\\bar41346")), rat(1));
        assert_eq!(l.coefficient(&seq("\\bar6\\bar21236")), rat(-1));
        assert_eq!(l.terms().len(), 3);
    }

    #[test]
    fn every_form_term_contains_a_pair() {
        for f in linear_forms(1, 3) {
            for key in f.terms().keys() {
                assert!(key.entries().iter().any(|&e| key.contains(-e)));
            }
        }
    }

    #[test]
    fn forms_are_weight_homogeneous() {
        for f in linear_forms(1, 4) {
            let weights: BTreeSet<Vec<i32>> = f
                .terms()
                .keys()
                .map(|k| weight_of(k, f.level(), 1).h().to_vec())
                .collect();
            assert_eq!(weights.len(), 1, "{f:?}");
        }
    }

    #[test]
    fn weight_examples() {
        // paired letters contribute nothing
        let w = weight_of(&seq("\\bar4\\bar114"), 0, 0);
        assert!(w.is_toral_zero());
        let w = weight_of(&seq("\\bar4\\bar334"), 0, 0);
        assert!(w.is_toral_zero());
        let w = weight_of(&seq("\\bar4\\bar214"), 0, 0);
        assert_eq!(w.h(), &[1, -1, 0, 0]);
        // direct evaluation at level 1, d = 2
        let w = weight_of(&seq("\\bar4\\bar123"), 1, 2);
        assert_eq!(w.big_h(), 0);
        assert_eq!(w.h(), &[-1, 1, 1, -1]);
        assert!(weight_of(&seq("\\bar4\\bar224"), 0, 0).is_toral_zero());
    }

    #[test]
    fn matching_validation() {
        assert!(Matching::new(vec![2, 4], vec![1, 3]).unwrap().is_descending());
        assert!(!Matching::new(vec![1, 3], vec![2, 4]).unwrap().is_descending());
        assert!(Matching::new(vec![2, 4], vec![1, 1]).is_err());
        assert!(Matching::new(vec![2, 4], vec![2, 3]).is_err());
        // canonical matching is descending iff the index is Northeast
        for m in 1..=4usize {
            for beta in positive_subsets(2 * m as u32, m) {
                let full = zero_weight_full(m, &beta);
                assert_eq!(
                    Matching::canonical(&beta).unwrap().is_descending(),
                    full.is_northeast(),
                    "beta = {beta:?}"
                );
            }
        }
    }

    #[test]
    fn kernel_elements_worked_examples() {
        let k1 = kernel_element(&[2, 4], &Matching::canonical(&[2, 4]).unwrap()).unwrap();
        assert_eq!(k1.coefficient(&seq("\\bar4\\bar224")), rat(1));
        assert_eq!(k1.coefficient(&seq("\\bar4\\bar114")), rat(-1));
        assert_eq!(k1.coefficient(&seq("\\bar3\\bar223")), rat(-1));
        assert_eq!(k1.coefficient(&seq("\\bar3\\bar113")), rat(1));
        assert_eq!(k1.terms().len(), 4);
        assert!(contract_omega(&k1).unwrap().is_zero());

        let k2 = kernel_element(&[3, 4], &Matching::canonical(&[3, 4]).unwrap()).unwrap();
        assert_eq!(k2.coefficient(&seq("\\bar4\\bar334")), rat(1));
        assert_eq!(k2.coefficient(&seq("\\bar4\\bar114")), rat(-1));
        assert_eq!(k2.coefficient(&seq("\\bar3\\bar223")), rat(-1));
        assert_eq!(k2.coefficient(&seq("\\bar2\\bar112")), rat(1));
        assert!(contract_omega(&k2).unwrap().is_zero());

        // smallest case
        let k0 = kernel_element(&[2], &Matching::canonical(&[2]).unwrap()).unwrap();
        assert_eq!(k0.terms().len(), 2);
        assert!(contract_omega(&k0).unwrap().is_zero());
    }

    #[test]
    fn kernel_annihilation_up_to_m4() {
        for m in 1..=4usize {
            for beta in positive_subsets(2 * m as u32, m) {
                let full = zero_weight_full(m, &beta);
                if !full.is_northeast() {
                    continue;
                }
                let k = kernel_element(&beta, &Matching::canonical(&beta).unwrap()).unwrap();
                assert!(contract_omega(&k).unwrap().is_zero(), "K for {beta:?}");
            }
        }
    }

    #[test]
    fn zero_weight_dimensions() {
        assert_eq!(zero_weight_dimension(1), 1);
        assert_eq!(zero_weight_dimension(2), 2);
        assert_eq!(zero_weight_dimension(3), 5);
        assert_eq!(zero_weight_dimension(4), 14);
    }

    #[test]
    fn zero_weight_dimension_matches_counts() {
        for m in 1..=4usize {
            let dim = zero_weight_dimension(m);
            // Catalan form
            let binom: usize = {
                let mut b = 1usize;
                for i in 0..m {
                    b = b * (2 * m - i) / (i + 1);
                }
                b
            };
            assert_eq!(dim, binom / (m + 1));
            // count of Northeast zero-weight sequences
            let ne = positive_subsets(2 * m as u32, m)
                .into_iter()
                .filter(|beta| zero_weight_full(m, beta).is_northeast())
                .count();
            assert_eq!(dim, ne);
        }
    }

    /// All weight slices of `∧^n C^{2n}` as (weight, members).
    fn slices(n: u32) -> BTreeMap<Vec<i32>, Vec<SignedSequence>> {
        let mut out: BTreeMap<Vec<i32>, Vec<SignedSequence>> = BTreeMap::new();
        for s in all_full_sequences(n) {
            out.entry(weight_of(&s, 0, 0).h().to_vec()).or_default().push(s);
        }
        out
    }

    #[test]
    fn northeast_kernel_basis_on_all_slices_n4() {
        for (_, members) in slices(4) {
            let index: BTreeMap<&SignedSequence, usize> =
                members.iter().enumerate().map(|(i, s)| (s, i)).collect();
            // kernel dimension of the contraction restricted to the slice
            let mut images: Vec<MultiVector> = Vec::new();
            for s in &members {
                images.push(contract_omega(&MultiVector::basis(s.clone())).unwrap());
            }
            let mut keys: BTreeSet<SignedSequence> = BTreeSet::new();
            for im in &images {
                keys.extend(im.terms().keys().cloned());
            }
            let keys: Vec<SignedSequence> = keys.into_iter().collect();
            let rows: Vec<Vec<Rat>> = images
                .iter()
                .map(|im| keys.iter().map(|k| im.coefficient(k)).collect())
                .collect();
            let rank = if keys.is_empty() {
                0
            } else {
                Mat::from_rows(rows).rank()
            };
            let kernel_dim = members.len() - rank;
            let ne: Vec<&SignedSequence> =
                members.iter().filter(|s| s.is_northeast()).collect();
            assert_eq!(kernel_dim, ne.len(), "slice of {:?}", members[0]);
            // the hypercube elements for the NE members are a basis
            let mut kvecs: Vec<Vec<Rat>> = Vec::new();
            for s in &ne {
                let k = slice_kernel_element(s).unwrap();
                assert!(contract_omega(&k).unwrap().is_zero(), "K for {s}");
                let mut row = vec![Rat::zero(); members.len()];
                for (key, c) in k.terms() {
                    row[index[key]] = c.clone();
                }
                kvecs.push(row);
            }
            if !kvecs.is_empty() {
                assert_eq!(Mat::from_rows(kvecs).rank(), ne.len());
            }
        }
    }

    #[test]
    fn northeast_kernel_basis_zero_weight_n6() {
        let members: Vec<SignedSequence> = positive_subsets(6, 3)
            .into_iter()
            .map(|b| zero_weight_full(3, &b))
            .collect();
        let ne: Vec<&SignedSequence> = members.iter().filter(|s| s.is_northeast()).collect();
        assert_eq!(ne.len(), 5);
        let index: BTreeMap<&SignedSequence, usize> =
            members.iter().enumerate().map(|(i, s)| (s, i)).collect();
        let mut kvecs = Vec::new();
        for s in &ne {
            let k = slice_kernel_element(s).unwrap();
            assert!(contract_omega(&k).unwrap().is_zero());
            let mut row = vec![Rat::zero(); members.len()];
            for (key, c) in k.terms() {
                row[index[key]] = c.clone();
            }
            kvecs.push(row);
        }
        assert_eq!(Mat::from_rows(kvecs).rank(), 5);
    }

    #[test]
    fn normal_form_lg4_binomials() {
        let nf = northeast_normal_form(0, 4).unwrap();
        let expr = |s: &str| nf.expression(&seq(s), 0).unwrap().to_vec();
        // the four-term relation: p_{\bar4\bar114} = -p_{\bar4\bar224} - p_{\bar4\bar334}
        assert_eq!(
            expr("\\bar4\\bar114"),
            vec![
                (rat(-1), seq("\\bar4\\bar224")),
                (rat(-1), seq("\\bar4\\bar334"))
            ]
        );
        // binomials pair each coordinate with its transpose, coefficient σ_α
        assert_eq!(expr("\\bar2\\bar112"), vec![(rat(1), seq("\\bar4\\bar334"))]);
        assert_eq!(expr("\\bar3\\bar113"), vec![(rat(1), seq("\\bar4\\bar224"))]);
        assert_eq!(
            expr("\\bar3\\bar223"),
            vec![
                (rat(-1), seq("\\bar4\\bar224")),
                (rat(-1), seq("\\bar4\\bar334"))
            ]
        );
        // a Northeast index maps to itself
        assert_eq!(expr("\\bar4\\bar224"), vec![(rat(1), seq("\\bar4\\bar224"))]);
    }

    #[test]
    fn normal_form_triangularity() {
        // the fiber representative appears with coefficient ±1 and the rest
        // of the support is strictly larger in the positive-part order
        for n in [4u32, 6] {
            let nf = northeast_normal_form(0, n).unwrap();
            for s in all_full_sequences(n) {
                if n == 6 && !weight_of(&s, 0, 0).is_toral_zero() {
                    continue; // n = 6 checked on the zero-weight slice only
                }
                if s.is_northeast() {
                    continue;
                }
                let fiber = crate::seq::fiber(&s.pi()).unwrap();
                let rep = fiber.iter().find(|g| g.is_northeast()).unwrap();
                let expr = nf.expression(&s, 0).unwrap();
                let rep_coeff = expr
                    .iter()
                    .find(|(_, t)| t == rep)
                    .map(|(c, _)| c.clone())
                    .expect("representative in support");
                assert!(rep_coeff == rat(1) || rep_coeff == rat(-1));
                for (c, t) in expr {
                    if t == rep || c.is_zero() {
                        continue;
                    }
                    let tp = t.positive_part();
                    let rp = rep.positive_part();
                    assert!(
                        tp.iter().zip(&rp).all(|(a, b)| a >= b) && tp != rp,
                        "support {t} not above {rep} for {s}"
                    );
                }
            }
        }
    }

    #[test]
    fn normal_form_representative_sign_matches_hypercube_parity() {
        // coefficient of the representative is (-1)^{|I|} where I is the
        // swap set taking the index to its Northeast representative
        let nf = northeast_normal_form(0, 4).unwrap();
        for beta in positive_subsets(4, 2) {
            let s = zero_weight_full(2, &beta);
            if s.is_northeast() {
                continue;
            }
            let fiber = crate::seq::fiber(&s.pi()).unwrap();
            let rep = fiber.iter().find(|g| g.is_northeast()).unwrap();
            let rep_pos: Vec<u32> = rep.positive_part().iter().map(|&e| e as u32).collect();
            let matching = Matching::canonical(&rep_pos).unwrap();
            // find I with I·rep = s
            let m = rep_pos.len();
            let spos: Vec<u32> = s.positive_part().iter().map(|&e| e as u32).collect();
            let swaps = (0u32..(1 << m))
                .find(|&i| matching.apply(i) == spos)
                .expect("fiber member reachable by swaps");
            let parity = Sign::from_parity(swaps.count_ones() as usize);
            let expr = nf.expression(&s, 0).unwrap();
            let coeff = expr.iter().find(|(_, t)| t == rep).map(|(c, _)| c.clone()).unwrap();
            assert_eq!(coeff, rat(parity.value()), "{s}");
        }
    }

    #[test]
    fn normal_form_levels_replicate() {
        let nf = northeast_normal_form(2, 3).unwrap();
        for s in all_full_sequences(3) {
            let e0 = nf.expression(&s, 0).unwrap().to_vec();
            for level in 1..=2 {
                assert_eq!(nf.expression(&s, level).unwrap(), &e0[..]);
            }
        }
    }

    #[test]
    fn normal_form_kills_every_linear_form() {
        // substituting the normal form into any relation gives zero
        for n in [3u32, 4] {
            let nf = northeast_normal_form(0, n).unwrap();
            for f in linear_forms(0, n) {
                let mut reduced: BTreeMap<SignedSequence, Rat> = BTreeMap::new();
                for (key, c) in f.terms() {
                    for (e, t) in nf.expression(key, 0).unwrap() {
                        let slot = reduced.entry(t.clone()).or_insert_with(Rat::zero);
                        *slot += c * e;
                    }
                }
                assert!(reduced.values().all(|v| v.is_zero()), "{f:?}");
            }
        }
    }
}
