//! Schubert-class arithmetic: Pieri products as weighted cover sums.
//!
//! Classes are indexed by symmetric partitions in the `n × n` square, with a
//! formal variable `q` tracking the level.  Multiplication by the simple
//! class is a sum over covers of the level-tagged lattice: same-level cover
//! pairs that stay admissible contribute with coefficient 2, diagonal-box
//! covers with coefficient 1, and the level jump contributes the
//! hook-removal term with one extra power of `q`.

use crate::doset::is_admissible_pair;
use crate::hilbert::{chain_count_matrix, proj_degree, schubert_subdoset};
use crate::poset::{self, CoverType, PosetElement};
use crate::seq::Partition;
use crate::{doset::DosetStructure, Error, Result};
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

/// A finitely supported `Z[q]`-combination of classes `σ_λ q^e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QhElement {
    n: u32,
    terms: BTreeMap<(Partition, u32), BigInt>,
}

impl QhElement {
    pub fn zero(n: u32) -> Self {
        QhElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    /// The single class `σ_λ q^e`.
    pub fn class(lambda: Partition, q_exp: u32) -> Result<Self> {
        if !lambda.is_symmetric() {
            return Err(Error::Domain(format!("{lambda} is not symmetric")));
        }
        let n = lambda.n();
        let mut terms = BTreeMap::new();
        terms.insert((lambda, q_exp), BigInt::from(1));
        Ok(QhElement { n, terms })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<(Partition, u32), BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, lambda: &Partition, q_exp: u32) -> BigInt {
        self.terms
            .get(&(lambda.clone(), q_exp))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    fn add_term(&mut self, key: (Partition, u32), coeff: BigInt) {
        let slot = self.terms.entry(key.clone()).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|((p, e), c)| {
                serde_json::json!({
                    "coeff": c.to_string(),
                    "partition": p.rows(),
                    "q": e,
                })
            })
            .collect();
        serde_json::json!({ "n": self.n, "terms": terms })
    }
}

impl fmt::Display for QhElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((p, e), c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}·σ{p}")?;
            if *e > 0 {
                write!(f, "·q^{e}")?;
            }
        }
        Ok(())
    }
}

/// Classical product with the simple class: sum over same-level covers of
/// the Bruhat order with coefficient 2 on admissible (box-pair) covers.
pub fn classical_pieri(lambda: &Partition, n: u32) -> Result<QhElement> {
    if lambda.n() != n || !lambda.is_symmetric() {
        return Err(Error::Domain(format!("{lambda} is not symmetric in ({n}^{n})")));
    }
    let x = PosetElement::new(lambda.to_sequence(), 0)?;
    let mut out = QhElement::zero(n);
    for (y, t) in poset::covers(&x, 0) {
        let coeff = match t {
            CoverType::SameLevelDoset => {
                debug_assert!(is_admissible_pair(&x, &y));
                BigInt::from(2)
            }
            CoverType::SameLevelPlain => BigInt::from(1),
            CoverType::LevelJump => unreachable!("no level jumps at d = 0"),
        };
        out.add_term((y.seq().to_partition(), 0), coeff);
    }
    Ok(out)
}

/// Remove the full hook `(n, 1^{n-1})` if it fits; the result is again
/// symmetric.
pub fn hook_removal(lambda: &Partition, n: u32) -> Result<Option<Partition>> {
    if lambda.n() != n || !lambda.is_symmetric() {
        return Err(Error::Domain(format!("{lambda} is not symmetric in ({n}^{n})")));
    }
    let mut hook = vec![1u32; n as usize];
    hook[0] = n;
    let hook = Partition::new(n, hook)?;
    if !lambda.contains(&hook) {
        return Ok(None);
    }
    let rows: Vec<u32> = (2..=n).map(|i| lambda.row(i).saturating_sub(1)).collect();
    Ok(Some(Partition::new(n, rows)?))
}

/// Quantum product with the simple class, extended linearly.  Terms whose
/// `q`-exponent would exceed `d` are dropped when `d` is given.
pub fn quantum_pieri(x: &QhElement, n: u32, d: Option<u32>) -> Result<QhElement> {
    if x.n() != n {
        return Err(Error::Domain("mismatched n".into()));
    }
    let mut out = QhElement::zero(n);
    for ((lambda, a), coeff) in x.terms() {
        if let Some(d) = d {
            if *a > d {
                return Err(Error::Domain(format!("q-exponent {a} exceeds d = {d}")));
            }
        }
        // covers are level-local; allot one extra level so the jump is visible
        let elt = PosetElement::new(lambda.to_sequence(), 0)?;
        for (y, t) in poset::covers(&elt, 1) {
            let (factor, q_exp) = match t {
                CoverType::SameLevelDoset => (BigInt::from(2), *a),
                CoverType::SameLevelPlain => (BigInt::from(1), *a),
                CoverType::LevelJump => (BigInt::from(1), *a + 1),
            };
            if d.is_some_and(|d| q_exp > d) {
                continue;
            }
            out.add_term((y.seq().to_partition(), q_exp), coeff * factor);
        }
    }
    Ok(out)
}

/// `p`-fold iterated product with the simple class.
pub fn quantum_pieri_power(x: &QhElement, n: u32, d: Option<u32>, p: u32) -> Result<QhElement> {
    let mut acc = x.clone();
    for _ in 0..p {
        acc = quantum_pieri(&acc, n, d)?;
    }
    Ok(acc)
}

/// The 180°-rotated complement inside `(n^n)`; an order-reversing involution
/// on symmetric partitions.
pub fn dual_partition(lambda: &Partition, n: u32) -> Result<Partition> {
    if lambda.n() != n || !lambda.is_symmetric() {
        return Err(Error::Domain(format!("{lambda} is not symmetric in ({n}^{n})")));
    }
    let rows: Vec<u32> = (1..=n).map(|i| n - lambda.row(n + 1 - i)).collect();
    Partition::new(n, rows)
}

/// Corank of `λ^(0)` in the level-`d` lattice.
pub fn corank(lambda: &Partition, d: u32, n: u32) -> Result<u32> {
    let x = PosetElement::new(lambda.to_sequence(), 0)?;
    Ok(poset::total_rank(d, n) - poset::rank(&x))
}

/// Degree of the dual Schubert variety at `λ^(0)`, read off as the
/// coefficient of `σ_{(n^n)} q^d` in `σ_λ · σ_□^corank`.
pub fn schubert_variety_degree(lambda: &Partition, d: u32, n: u32) -> Result<BigInt> {
    let pi = corank(lambda, d, n)?;
    let product = quantum_pieri_power(&QhElement::class(lambda.clone(), 0)?, n, Some(d), pi)?;
    // after corank-many steps every surviving term sits at the top class
    for ((p, e), _) in product.terms() {
        if *p != Partition::square(n) || *e != d {
            return Err(Error::Internal(format!(
                "stray term σ{p}·q^{e} after {pi} simple-class products"
            )));
        }
    }
    Ok(product.coefficient(&Partition::square(n), d))
}

/// The three degree computations side by side; used by callers that want the
/// cross-check rather than a single number.
pub struct DegreeTriple {
    pub hilbert: BigInt,
    pub weighted_chains: BigInt,
    pub quantum: BigInt,
}

pub fn degree_triple(ds: &DosetStructure, lambda: &Partition) -> Result<DegreeTriple> {
    let x = PosetElement::new(lambda.to_sequence(), 0)?;
    let sub = schubert_subdoset(ds, &x, true)?;
    let c = chain_count_matrix(&sub)?;
    Ok(DegreeTriple {
        hilbert: proj_degree(&c),
        weighted_chains: crate::hilbert::weighted_maximal_chain_count(ds, &x)?,
        quantum: schubert_variety_degree(lambda, ds.d(), ds.n())?,
    })
}
