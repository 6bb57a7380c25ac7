//! Two-factor factorization of an inhomogeneous polynomial at one degree
//! split.
//!
//! With `F = G·H`, `deg G = h`, `deg H = k`, `n = h + k`, comparing
//! homogeneous parts gives
//!
//! ```text
//! F_n                                   = G_h·H_k
//! F_{n-j} - Σ_{i=1}^{j-1} G_{h-i}·H_{k-j+i} = G_h·H_{k-j} + G_{h-j}·H_k
//! ```
//!
//! The head is factored by [`factor_homogeneous`]; each later level is
//! solved for the pair `(H_{k-j}, G_{h-j})` by repeatedly matching the
//! largest remaining word against the pivots `Ĝ`, `Ĥ`. When `Ĝ` and `Ĥ`
//! overlap by `j` letters, the word `Ĝ·w = b·Ĥ` can come from either side
//! and its coefficient is split with a fresh symbol. Words matching neither
//! pivot can no longer be cancelled and turn into constraints. The closing
//! system is the coefficient comparison of `G·H` against `F`.

use super::pivot::{select_factor_pivots, Pivots};
use super::{DegreeSplit, FactorOptions, SymbolicFactorization};
use crate::commalg::{CPoly, CRing, ConstraintSystem, Field, FieldElement, Monomial};
use crate::freealg::{overlap_lengths, NcPoly, Word};
use crate::homog::factor_homogeneous;
use crate::Error;

/// Validated constant-coefficient input of the factorization routines,
/// moved into a ring without symbols.
pub(crate) fn prepare_input(f: &NcPoly) -> Result<NcPoly, Error> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    f.constant_part()
}

/// Extension symbol names that cannot be confused with letters.
fn symbol_names(f: &NcPoly, count: usize) -> Vec<String> {
    let letters = f.alphabet().names();
    let mut base = String::from("a");
    loop {
        let names: Vec<String> = (1..=count).map(|i| format!("{base}{i}")).collect();
        if names.iter().all(|n| !letters.contains(n)) {
            return names;
        }
        base.push('_');
    }
}

/// Coefficient-matching system for `F = G·H`: one equation (made monic)
/// per word where `G·H - F` has a nonzero coefficient.
pub fn assemble_constraints(f: &NcPoly, g: &NcPoly, h: &NcPoly) -> Result<ConstraintSystem, Error> {
    let ring = g.coeff_ring().clone();
    let f = f.with_coeff_ring(&ring)?;
    let diff = g.try_mul(h)?.try_sub(&f)?;
    let mut eqs: Vec<CPoly> = Vec::new();
    for (_, c) in diff.terms() {
        let e = c.monic();
        if !eqs.contains(&e) {
            eqs.push(e);
        }
    }
    ConstraintSystem::new(ring, eqs)
}

/// Symbolic factors of `F` at one split, before solving.
#[derive(Clone, Debug)]
pub(crate) struct Candidate {
    pub g: NcPoly,
    pub h: NcPoly,
    pub pivots: Pivots,
    pub symbols: usize,
    /// Constraints met while peeling levels; implied by the final system.
    pub level_constraints: Vec<CPoly>,
}

pub(crate) fn symbolic_candidate(f: &NcPoly, split: DegreeSplit) -> Result<Option<Candidate>, Error> {
    let (h, k) = (split.h, split.k);
    let n = f.degree()?;
    if h + k != n || h == 0 || k == 0 {
        return Err(Error::InvalidInput(format!("degree {n} does not split as ({h},{k})")));
    }
    let Some((g_head, h_head)) = factor_homogeneous(&f.homogeneous_part(n), h, k)? else {
        return Ok(None);
    };
    let pivots = select_factor_pivots(&g_head, &h_head);
    let overlaps = overlap_lengths(&pivots.g_hat, &pivots.h_hat);

    let ring = CRing::new(f.field(), symbol_names(f, overlaps.len()));
    let field = ring.field;
    let f = f.with_coeff_ring(&ring)?;
    let g_head = g_head.with_coeff_ring(&ring)?;
    let h_head = h_head.with_coeff_ring(&ring)?;
    let lambda_g = g_head.coeff(&pivots.g_hat).as_constant().expect("constant head");
    let lambda_h = h_head.coeff(&pivots.h_hat).as_constant().expect("constant head");
    let inv_g = field.inv(&lambda_g).expect("pivot in support");
    let inv_h = field.inv(&lambda_h).expect("pivot in support");

    let mut g_parts: Vec<NcPoly> = vec![f.zero_like(); h + 1];
    let mut h_parts: Vec<NcPoly> = vec![f.zero_like(); k + 1];
    g_parts[h] = g_head.clone();
    h_parts[k] = h_head.clone();
    let mut level_constraints = Vec::new();
    let empty = Word::empty();

    for j in 1..=n {
        let mut rest = f.homogeneous_part(n - j);
        for i in 1..j {
            if i <= h && j - i <= k {
                rest = &rest - &(&g_parts[h - i] * &h_parts[k + i - j]);
            }
        }
        let mut g_new = f.zero_like();
        let mut h_new = f.zero_like();

        // the fused word of an overlap of length j, with its two readings
        let mut collision = overlaps.iter().position(|&o| o == j).map(|idx| {
            let w_star = pivots.h_hat.suffix(k - j);
            let b_star = pivots.g_hat.prefix(h - j);
            (pivots.g_hat.concat(&w_star), b_star, w_star, ring.var(idx))
        });

        loop {
            let top = pivots.order.max(rest.words()).cloned();
            let take_collision = match (&top, &collision) {
                (_, None) => false,
                (None, Some(_)) => true,
                (Some(t), Some((fused, ..))) => pivots.order.cmp(fused, t).is_ge(),
            };
            if take_collision {
                let (fused, b_star, w_star, alpha) = collision.take().unwrap();
                let c = rest.coeff(&fused);
                let g_coeff = alpha.scale(&inv_h);
                let h_coeff = (&c - &alpha).scale(&inv_g);
                g_new = &g_new + &NcPoly::term(f.alphabet().clone(), ring.clone(), b_star.clone(), g_coeff.clone());
                h_new = &h_new + &NcPoly::term(f.alphabet().clone(), ring.clone(), w_star.clone(), h_coeff.clone());
                rest = &rest - &h_head.sandwich(&g_coeff, &b_star, &empty);
                rest = &rest - &g_head.sandwich(&h_coeff, &empty, &w_star);
                continue;
            }
            let Some(m) = top else { break };
            let c = rest.coeff(&m);
            if let Some(w) = m.left_quotient(&pivots.g_hat) {
                let a = c.scale(&inv_g);
                h_new = &h_new + &NcPoly::term(f.alphabet().clone(), ring.clone(), w.clone(), a.clone());
                rest = &rest - &g_head.sandwich(&a, &empty, &w);
            } else if let Some(b) = m.right_quotient(&pivots.h_hat) {
                let a = c.scale(&inv_h);
                g_new = &g_new + &NcPoly::term(f.alphabet().clone(), ring.clone(), b.clone(), a.clone());
                rest = &rest - &h_head.sandwich(&a, &b, &empty);
            } else {
                level_constraints.push(c.clone());
                rest = &rest - &NcPoly::term(f.alphabet().clone(), ring.clone(), m, c);
            }
        }
        if j <= h {
            g_parts[h - j] = g_new;
        }
        if j <= k {
            h_parts[k - j] = h_new;
        }
    }

    let g = g_parts.iter().fold(f.zero_like(), |acc, p| &acc + p);
    let hh = h_parts.iter().fold(f.zero_like(), |acc, p| &acc + p);
    Ok(Some(Candidate {
        g,
        h: hh,
        pivots,
        symbols: overlaps.len(),
        level_constraints,
    }))
}

/// Reads off the point of a reduced lex basis of the form
/// `{s_1 - c_1, …, s_m - c_m}`, when it has that shape.
fn unique_point(basis: &[CPoly], nsyms: usize) -> Option<Vec<FieldElement>> {
    if basis.len() != nsyms {
        return None;
    }
    let field = basis.first()?.field();
    let mut point = vec![field.zero(); nsyms];
    let mut seen = vec![false; nsyms];
    for b in basis {
        let (lm, _) = b.leading_term()?;
        if lm.degree() != 1 || b.terms().filter(|(m, _)| !m.is_one()).count() != 1 {
            return None;
        }
        let i = lm.0.iter().position(|&e| e == 1)?;
        let c = b.coeff(&Monomial::one(nsyms));
        point[i] = field.neg(&c);
        seen[i] = true;
    }
    seen.iter().all(|&s| s).then_some(point)
}

/// All factorizations `F = G·H` with `deg G = split.h`, `deg H = split.k`.
///
/// Over F_p every solution of the symbol system is substituted, giving one
/// concrete entry per solution. Over Q the entry stays symbolic and carries
/// the reduced lex Gröbner basis, unless the system has a single rational
/// point. An empty list means no factorization at this split.
pub fn factor_bidegree(
    f: &NcPoly,
    split: DegreeSplit,
    opts: &FactorOptions,
) -> Result<Vec<SymbolicFactorization>, Error> {
    let f = prepare_input(f)?;
    let Some(cand) = symbolic_candidate(&f, split)? else {
        return Ok(Vec::new());
    };
    debug_assert_eq!(cand.symbols, overlap_lengths(&cand.pivots.g_hat, &cand.pivots.h_hat).len());
    if cand.level_constraints.iter().any(|c| c.as_constant().is_some_and(|v| !f.field().is_zero(&v))) {
        return Ok(Vec::new());
    }
    let system = assemble_constraints(&f, &cand.g, &cand.h)?;
    if system.is_trivially_inconsistent() {
        return Ok(Vec::new());
    }
    let field = f.field();
    let nsyms = cand.symbols;
    let reduced_basis = if opts.groebner || (field == Field::Rational && nsyms > 0) {
        Some(system.reduced_basis()?)
    } else {
        None
    };
    let entry = |solution: Option<Vec<FieldElement>>| {
        let factors = solution.as_ref().map(|s| {
            let (g, h) = (cand.g.substitute(s), cand.h.substitute(s));
            assert_eq!(&g * &h, f, "substituted factors must multiply back to F");
            (g, h)
        });
        SymbolicFactorization {
            split,
            g: cand.g.clone(),
            h: cand.h.clone(),
            system: system.clone(),
            reduced_basis: reduced_basis.clone(),
            solution,
            factors,
        }
    };

    let mut out: Vec<SymbolicFactorization> = Vec::new();
    match field {
        Field::Prime(p) => {
            let size = (p as u64).checked_pow(nsyms as u32).unwrap_or(u64::MAX);
            opts.charge(size)?;
            for sol in system.enumerate_solutions(opts.enumeration_cap)? {
                let e = entry(Some(sol));
                if !out.iter().any(|o| o.factors == e.factors) {
                    out.push(e);
                }
            }
        }
        Field::Rational => {
            if nsyms == 0 {
                out.push(entry(Some(Vec::new())));
            } else {
                let basis = reduced_basis.as_ref().expect("computed over Q");
                let unit = basis.len() == 1 && basis[0].is_constant();
                if !unit {
                    out.push(entry(unique_point(basis, nsyms)));
                }
            }
        }
    }
    Ok(out)
}
