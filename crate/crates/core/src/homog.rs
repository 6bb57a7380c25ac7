//! Factorization of homogeneous polynomials at a fixed degree split.
//!
//! In a homogeneous product `G·H` with `deg G = h`, every word splits
//! uniquely as (word of `G`)·(word of `H`), so nothing cancels. Picking one
//! word `Ĝ·Ĥ` of `F`, the terms of `F` starting with `Ĝ` spell out `H` and
//! the terms ending with `Ĥ` spell out `G`, each up to a scalar.

use crate::freealg::{overlap_lengths, NcPoly, Word};
use crate::Error;

fn check_split(f: &NcPoly, h: usize, k: usize) -> Result<(), Error> {
    if h == 0 || k == 0 {
        return Err(Error::InvalidInput(format!("degree split ({h},{k}) has a trivial factor")));
    }
    let n = f.degree()?;
    if !f.is_homogeneous() {
        return Err(Error::InvalidInput("polynomial is not homogeneous".into()));
    }
    if n != h + k {
        return Err(Error::InvalidInput(format!("degree {n} does not split as ({h},{k})")));
    }
    Ok(())
}

/// Splits a word of `f` into a length-`h` prefix and length-`k` suffix,
/// choosing the word whose split has the fewest self-overlaps; ties go to
/// the deglex-smallest word.
pub fn select_pivot(f: &NcPoly, h: usize, k: usize) -> Result<(Word, Word), Error> {
    check_split(f, h, k)?;
    let mut best: Option<(usize, Word, Word)> = None;
    for w in f.words() {
        let (g, hh) = (w.prefix(h), w.suffix(k));
        let count = overlap_lengths(&g, &hh).len();
        if best.as_ref().is_none_or(|(c, _, _)| count < *c) {
            best = Some((count, g, hh));
        }
    }
    let (_, g, hh) = best.expect("nonzero polynomial");
    Ok((g, hh))
}

/// Factors a homogeneous constant-coefficient `f` as `G·H` with
/// `deg G = h`, `deg H = k`, or returns `None` when no such factorization
/// exists. `G` is monic in its leading word; the pair is unique.
pub fn factor_homogeneous(f: &NcPoly, h: usize, k: usize) -> Result<Option<(NcPoly, NcPoly)>, Error> {
    check_split(f, h, k)?;
    if !f.has_constant_coeffs() {
        return Err(Error::SymbolicCoefficients);
    }
    let field = f.field();
    let (g_hat, h_hat) = select_pivot(f, h, k)?;

    // G' = η·G and H' = γ·H where γ, η are the pivot coefficients in G, H
    let mut g = f.zero_like();
    let mut hh = f.zero_like();
    for (m, c) in f.terms() {
        if let Some(r) = m.left_quotient(&g_hat) {
            hh = &hh + &NcPoly::term(f.alphabet().clone(), f.coeff_ring().clone(), r, c.clone());
        }
        if let Some(l) = m.right_quotient(&h_hat) {
            g = &g + &NcPoly::term(f.alphabet().clone(), f.coeff_ring().clone(), l, c.clone());
        }
    }
    // G'·H' = γη·F and γη is the coefficient of the pivot word in F
    let pivot = f.coeff(&g_hat.concat(&h_hat)).as_constant().expect("constant");
    let (g, lc) = g.monic()?;
    let hh = hh.scale_const(&field.div(&lc, &pivot).expect("pivot word occurs in F"));
    Ok((&g * &hh == *f).then_some((g, hh)))
}

/// Given homogeneous `G1·H1 = G2·H2` with `deg G1 < deg G2`, returns `J`
/// with `G2 = G1·J` and `H1 = J·H2`.
///
/// `J` is read off from the terms of `G2` that begin with the leading word
/// of `G1`.
pub fn refine(g1: &NcPoly, h1: &NcPoly, g2: &NcPoly, h2: &NcPoly) -> Result<NcPoly, Error> {
    let (d1, d2) = (g1.degree()?, g2.degree()?);
    if d1 >= d2 {
        return Err(Error::InvalidInput(format!("refinement needs deg G1 < deg G2, got {d1} and {d2}")));
    }
    if [g1, h1, g2, h2].iter().any(|p| !p.is_homogeneous()) {
        return Err(Error::InvalidInput("refinement needs homogeneous factors".into()));
    }
    if (g1 * h1) != (g2 * h2) {
        return Err(Error::InvalidInput("the two factorizations have different products".into()));
    }
    let lead = g1.leading_word().expect("nonzero").clone();
    let lc = g1
        .leading_coeff()
        .and_then(|c| c.as_constant())
        .ok_or(Error::SymbolicCoefficients)?;
    let field = g1.field();
    let inv = field.inv(&lc).expect("nonzero");
    let mut j = g1.zero_like();
    for (m, c) in g2.terms() {
        if let Some(r) = m.left_quotient(&lead) {
            j = &j + &NcPoly::term(g1.alphabet().clone(), g1.coeff_ring().clone(), r, c.scale(&inv));
        }
    }
    if &(g1 * &j) != g2 || &(&j * h2) != h1 {
        return Err(Error::InvalidInput("factorizations have no common refinement".into()));
    }
    Ok(j)
}
