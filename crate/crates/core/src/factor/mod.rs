//! Factorization of polynomials with constant coefficients.
//!
//! [`factor_bidegree`] handles one degree split, [`factor_all`] runs every
//! split that survives the commutative-image filter, and
//! [`factor_completely`] recurses into the factors.

mod bidegree;
mod knapsack;
mod pivot;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

pub use bidegree::{assemble_constraints, factor_bidegree};
pub use knapsack::{divisor_degrees, knapsack_splits};
pub use pivot::{admissible_pivots, select_factor_pivots, Pivots, WordOrder};

use crate::commalg::{Assignment, CPoly, ConstraintSystem, DEFAULT_ENUMERATION_CAP};
use crate::freealg::NcPoly;
use crate::Error;

/// Degrees `(h, k)` of the left and right factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DegreeSplit {
    pub h: usize,
    pub k: usize,
}

impl DegreeSplit {
    pub fn new(h: usize, k: usize) -> Self {
        DegreeSplit { h, k }
    }
}

impl fmt::Display for DegreeSplit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.h, self.k)
    }
}

/// Shared work counter; every enumerated candidate point costs one unit.
#[derive(Debug)]
pub struct Budget {
    limit: u64,
    used: AtomicU64,
}

impl Budget {
    pub fn new(limit: u64) -> Arc<Self> {
        Arc::new(Budget { limit, used: AtomicU64::new(0) })
    }

    pub fn used(&self) -> u64 {
        self.used.load(Ordering::Relaxed)
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }
}

#[derive(Clone, Debug)]
pub struct FactorOptions {
    /// Largest number of points searched per split over F_p.
    pub enumeration_cap: u64,
    /// Compute the reduced Gröbner basis even when it is not needed.
    pub groebner: bool,
    /// Skip degree splits ruled out by the commutative image.
    pub knapsack: bool,
    pub budget: Option<Arc<Budget>>,
}

impl Default for FactorOptions {
    fn default() -> Self {
        FactorOptions {
            enumeration_cap: DEFAULT_ENUMERATION_CAP,
            groebner: false,
            knapsack: true,
            budget: None,
        }
    }
}

impl FactorOptions {
    /// Records `units` of work against the budget, failing once it would
    /// be exceeded.
    pub fn charge(&self, units: u64) -> Result<(), Error> {
        let Some(b) = &self.budget else { return Ok(()) };
        let before = b.used.fetch_add(units, Ordering::Relaxed);
        if before.saturating_add(units) > b.limit {
            return Err(Error::BudgetExhausted(b.limit));
        }
        Ok(())
    }
}

/// One symbolic factorization at a split, with its constraint system and,
/// when known, a solution and the concrete factors it yields.
#[derive(Clone, Debug)]
pub struct SymbolicFactorization {
    pub split: DegreeSplit,
    pub g: NcPoly,
    pub h: NcPoly,
    pub system: ConstraintSystem,
    pub reduced_basis: Option<Vec<CPoly>>,
    pub solution: Option<Assignment>,
    pub factors: Option<(NcPoly, NcPoly)>,
}

/// Every degree split of `F` (after filtering, if enabled) mapped to its
/// factorizations. Splits without any are left out, so an empty map means
/// `F` is irreducible.
pub fn factor_all(f: &NcPoly, opts: &FactorOptions) -> Result<BTreeMap<DegreeSplit, Vec<SymbolicFactorization>>, Error> {
    let f = bidegree::prepare_input(f)?;
    let n = f.degree()?;
    let splits = if opts.knapsack {
        knapsack_splits(&f)?
    } else {
        (1..n).map(|h| DegreeSplit::new(h, n - h)).collect()
    };
    let mut out = BTreeMap::new();
    for s in splits {
        let found = factor_bidegree(&f, s, opts)?;
        if !found.is_empty() {
            out.insert(s, found);
        }
    }
    Ok(out)
}

/// A factorization into several factors. All factors but the last are
/// monic. `truncated` marks chains where some factor was not split further:
/// the depth limit was reached, or (over Q) it factors in infinitely many
/// ways.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorChain {
    pub factors: Vec<NcPoly>,
    pub truncated: bool,
}

impl FactorChain {
    pub fn product(&self) -> NcPoly {
        let first = self.factors[0].clone();
        self.factors[1..].iter().fold(first, |acc, p| &acc * p)
    }

    fn normalized(mut self) -> Result<Self, Error> {
        for i in 0..self.factors.len() - 1 {
            let (m, lc) = self.factors[i].monic()?;
            self.factors[i] = m;
            self.factors[i + 1] = self.factors[i + 1].scale_const(&lc);
        }
        Ok(self)
    }
}

/// All factorizations of `F` into factors that do not split further,
/// exploring at most `depth_cap` levels of splitting (default: `deg F`,
/// which is enough to reach irreducible factors). Chains are distinct after
/// normalization; an irreducible `F` gives the single chain `[F]`.
pub fn factor_completely(f: &NcPoly, depth_cap: Option<usize>, opts: &FactorOptions) -> Result<Vec<FactorChain>, Error> {
    let f = bidegree::prepare_input(f)?;
    let depth = depth_cap.unwrap_or(f.degree()?);
    let mut memo = HashMap::new();
    chains(&f, depth, opts, &mut memo)
}

type Memo = HashMap<(NcPoly, usize), Vec<FactorChain>>;

fn chains(f: &NcPoly, depth: usize, opts: &FactorOptions, memo: &mut Memo) -> Result<Vec<FactorChain>, Error> {
    let (monic, lc) = f.monic()?;
    let key = (monic.clone(), depth);
    let base = match memo.get(&key) {
        Some(c) => c.clone(),
        None => {
            let c = monic_chains(&monic, depth, opts, memo)?;
            memo.insert(key, c.clone());
            c
        }
    };
    Ok(base
        .into_iter()
        .map(|mut c| {
            let last = c.factors.len() - 1;
            c.factors[last] = c.factors[last].scale_const(&lc);
            c
        })
        .collect())
}

fn monic_chains(f: &NcPoly, depth: usize, opts: &FactorOptions, memo: &mut Memo) -> Result<Vec<FactorChain>, Error> {
    let n = f.degree()?;
    let single = |truncated| vec![FactorChain { factors: vec![f.clone()], truncated }];
    if n <= 1 {
        return Ok(single(false));
    }
    if depth == 0 {
        return Ok(single(true));
    }
    let all = factor_all(f, opts)?;
    if all.is_empty() {
        return Ok(single(false));
    }
    let mut out: Vec<FactorChain> = Vec::new();
    let mut unexpanded = false;
    for entry in all.values().flatten() {
        let Some((g, h)) = &entry.factors else {
            unexpanded = true;
            continue;
        };
        let left = chains(g, depth - 1, opts, memo)?;
        let right = chains(h, depth - 1, opts, memo)?;
        for l in &left {
            for r in &right {
                let mut factors = l.factors.clone();
                factors.extend(r.factors.iter().cloned());
                let c = FactorChain { factors, truncated: l.truncated || r.truncated }.normalized()?;
                if !out.contains(&c) {
                    out.push(c);
                }
            }
        }
    }
    if unexpanded {
        out.push(FactorChain { factors: vec![f.clone()], truncated: true });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::commalg::Field;
    use crate::freealg::Alphabet;

    fn xy() -> Arc<Alphabet> {
        Arc::new(Alphabet::new(["x", "y"]).unwrap())
    }

    #[test]
    fn budget_is_shared_and_enforced() {
        let opts = FactorOptions { budget: Some(Budget::new(10)), ..Default::default() };
        let copy = opts.clone();
        assert!(opts.charge(6).is_ok());
        assert_eq!(copy.charge(6), Err(Error::BudgetExhausted(10)));
        assert!(FactorOptions::default().charge(u64::MAX).is_ok());
    }

    #[test]
    fn linear_polynomial_is_its_own_chain() {
        let f = NcPoly::from_int_terms(&xy(), Field::Prime(3), &[(2, "x"), (1, "")]).unwrap();
        let c = factor_completely(&f, None, &FactorOptions::default()).unwrap();
        assert_eq!(c, vec![FactorChain { factors: vec![f], truncated: false }]);
    }

    #[test]
    fn monomial_chain() {
        let f = NcPoly::from_int_terms(&xy(), Field::Prime(3), &[(2, "xyx")]).unwrap();
        let c = factor_completely(&f, None, &FactorOptions::default()).unwrap();
        assert_eq!(c.len(), 1);
        let rendered: Vec<String> = c[0].factors.iter().map(|p| p.to_string()).collect();
        assert_eq!(rendered, vec!["x", "y", "2*x"]);
        assert_eq!(c[0].product(), f);
    }

    #[test]
    fn depth_cap_truncates() {
        let f = NcPoly::from_int_terms(&xy(), Field::Prime(3), &[(1, "xyx")]).unwrap();
        let c = factor_completely(&f, Some(1), &FactorOptions::default()).unwrap();
        assert!(c.iter().any(|ch| ch.truncated));
        assert!(c.iter().all(|ch| ch.product() == f));
    }
}
