//! Reference implementations for testing.
//!
//! [`brute_force_factor`] searches coefficient assignments directly, using
//! its own word/coefficient arithmetic so that it shares no code with the
//! factorization algorithm. The generators build polynomials with known
//! factorizations.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::commalg::{CRing, Field, FieldElement};
use crate::factor::DegreeSplit;
use crate::freealg::{Alphabet, NcPoly, Word};
use crate::Error;

/// Candidate words for the factors in [`brute_force_factor`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    /// `G` is supported on prefixes of words of `F`, `H` on suffixes.
    Restricted,
    /// Every word of the right length or shorter.
    Exhaustive,
}

type Dense = HashMap<Vec<u8>, u64>;

fn dense_mul(a: &Dense, b: &Dense, p: u64) -> Dense {
    let mut out = Dense::new();
    for (u, x) in a {
        for (v, y) in b {
            let mut w = u.clone();
            w.extend_from_slice(v);
            let e = out.entry(w).or_insert(0);
            *e = (*e + x * y) % p;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn dense_sub_scaled(a: &mut Dense, b: &Dense, c: u64, p: u64) {
    for (w, y) in b {
        let e = a.entry(w.clone()).or_insert(0);
        *e = (*e + p - c * y % p) % p;
    }
    a.retain(|_, c| *c != 0);
}

fn modinv(a: u64, p: u64) -> u64 {
    (1..p).find(|x| a * x % p == 1).expect("nonzero residue")
}

fn deglex_key(w: &[u8]) -> (usize, &[u8]) {
    (w.len(), w)
}

/// Exact division in the free algebra: `Q` with `D·Q = F` (`left`) or
/// `Q·D = F`, if it exists. Uses that the leading word of a product is the
/// product of the leading words.
fn exact_divide(f: &Dense, d: &Dense, p: u64, left: bool) -> Option<Dense> {
    let lead = d.keys().max_by_key(|w| deglex_key(w))?;
    let inv = modinv(d[lead], p);
    let mut rest = f.clone();
    let mut q = Dense::new();
    while let Some(top) = rest.keys().max_by_key(|w| deglex_key(w)).cloned() {
        let w = if left {
            top.strip_prefix(lead.as_slice())?
        } else {
            top.strip_suffix(lead.as_slice())?
        }
        .to_vec();
        let c = rest[&top] * inv % p;
        let mono: Dense = [(w.clone(), c)].into_iter().collect();
        let product = if left { dense_mul(d, &mono, p) } else { dense_mul(&mono, d, p) };
        dense_sub_scaled(&mut rest, &product, 1, p);
        q.insert(w, c);
    }
    Some(q)
}

fn scale(d: &Dense, c: u64, p: u64) -> Dense {
    d.iter().map(|(w, x)| (w.clone(), x * c % p)).collect()
}

fn all_words(nletters: u8, max_len: usize) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w: &Vec<u8>| {
                (0..nletters).map(move |l| {
                    let mut v = w.clone();
                    v.push(l);
                    v
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

fn to_ncpoly(template: &NcPoly, d: &Dense) -> NcPoly {
    let ring = template.coeff_ring();
    d.iter().fold(template.zero_like(), |acc, (w, c)| {
        let c = ring.constant(FieldElement::Mod(*c as u32));
        &acc + &NcPoly::term(template.alphabet().clone(), ring.clone(), Word(w.clone()), c)
    })
}

/// Every factorization `F = G·H` at `split` over a small prime field with
/// `G` monic in its deglex-leading word, sorted by printed form.
///
/// The factor of smaller degree ranges over all coefficient vectors on its
/// candidate words with leading coefficient 1; the other factor is then
/// forced by exact division. `support_cap` bounds the number of candidate
/// words and `budget` the total number of candidates.
pub fn brute_force_factor(
    f: &NcPoly,
    split: DegreeSplit,
    support_cap: usize,
    mode: SearchMode,
    budget: u64,
) -> Result<Vec<(NcPoly, NcPoly)>, Error> {
    let Field::Prime(p) = f.field() else {
        return Err(Error::UnsupportedField);
    };
    let f = f.constant_part()?;
    if f.degree()? != split.h + split.k || split.h == 0 || split.k == 0 {
        return Err(Error::InvalidInput(format!("split {split} does not match the degree")));
    }
    let p = p as u64;
    let fd: Dense = f
        .terms()
        .map(|(w, c)| match c.as_constant() {
            Some(FieldElement::Mod(v)) => (w.letters().to_vec(), v as u64),
            _ => unreachable!("constant prime-field coefficients"),
        })
        .collect();

    // enumerate G when it is the shorter factor, H otherwise
    let left = split.h <= split.k;
    let (deg_enum, deg_other) = if left { (split.h, split.k) } else { (split.k, split.h) };
    let (enum_words, other_words): (BTreeSet<Vec<u8>>, Option<BTreeSet<Vec<u8>>>) = match mode {
        SearchMode::Exhaustive => (all_words(f.alphabet().len() as u8, deg_enum).into_iter().collect(), None),
        SearchMode::Restricted => {
            let mut prefixes = BTreeSet::new();
            let mut suffixes = BTreeSet::new();
            for w in fd.keys() {
                for i in 0..=split.h.min(w.len()) {
                    prefixes.insert(w[..i].to_vec());
                }
                for i in 0..=split.k.min(w.len()) {
                    suffixes.insert(w[w.len() - i..].to_vec());
                }
            }
            if left {
                (prefixes, Some(suffixes))
            } else {
                (suffixes, Some(prefixes))
            }
        }
    };
    if enum_words.len() > support_cap {
        return Err(Error::SearchSpaceTooLarge {
            needed: format!("{} candidate words", enum_words.len()),
            cap: support_cap as u64,
        });
    }
    let mut enum_words: Vec<Vec<u8>> = enum_words.into_iter().collect();
    enum_words.sort_by(|a, b| deglex_key(a).cmp(&deglex_key(b)));

    let mut spent: u64 = 0;
    let mut found: Vec<(String, String, NcPoly, NcPoly)> = Vec::new();
    for (li, lead) in enum_words.iter().enumerate() {
        if lead.len() != deg_enum {
            continue;
        }
        let below = &enum_words[..li];
        let count = p.checked_pow(below.len() as u32).unwrap_or(u64::MAX);
        spent = spent.saturating_add(count);
        if spent > budget {
            return Err(Error::BudgetExhausted(budget));
        }
        let mut digits = vec![0u64; below.len()];
        loop {
            let mut d: Dense = below
                .iter()
                .zip(&digits)
                .filter(|(_, c)| **c != 0)
                .map(|(w, c)| (w.clone(), *c))
                .collect();
            d.insert(lead.clone(), 1);
            if let Some(q) = exact_divide(&fd, &d, p, left) {
                let deg_ok = q.keys().map(Vec::len).max() == Some(deg_other);
                let support_ok = other_words.as_ref().is_none_or(|ws| q.keys().all(|w| ws.contains(w)));
                if deg_ok && support_ok {
                    let (g, h) = if left {
                        (d, q)
                    } else {
                        let lead_g = q.keys().max_by_key(|w| deglex_key(w)).expect("nonzero");
                        let c = q[lead_g];
                        (scale(&q, modinv(c, p), p), scale(&d, c, p))
                    };
                    debug_assert_eq!(dense_mul(&g, &h, p), fd);
                    let (gp, hp) = (to_ncpoly(&f, &g), to_ncpoly(&f, &h));
                    found.push((gp.to_string(), hp.to_string(), gp, hp));
                }
            }
            // odometer over the coefficients below the leading word
            let Some(i) = digits.iter().rposition(|&c| c + 1 < p) else { break };
            digits[i] += 1;
            for c in &mut digits[i + 1..] {
                *c = 0;
            }
        }
    }
    found.sort_by(|a, b| (&a.0, &a.1).cmp(&(&b.0, &b.1)));
    found.dedup_by(|a, b| a.0 == b.0 && a.1 == b.1);
    Ok(found.into_iter().map(|(_, _, g, h)| (g, h)).collect())
}

/// `F = y·f(xy)` for `f(t) = Π(t - r_i)` over the alphabet `{x, y}`, with
/// the chains `f_1(yx)⋯f_i(yx)·y·f_{i+1}(xy)⋯f_k(xy)` for `i = 0..=k`.
pub fn mora_family(field: Field, roots: &[FieldElement]) -> Result<(NcPoly, Vec<Vec<NcPoly>>), Error> {
    for (i, r) in roots.iter().enumerate() {
        if !field.contains(r) {
            return Err(Error::ContextMismatch);
        }
        if roots[..i].contains(r) {
            return Err(Error::InvalidInput(format!("repeated root {r}")));
        }
    }
    let alphabet = Arc::new(Alphabet::new(["x", "y"])?);
    let ring = CRing::new(field, Vec::<String>::new());
    let word = |s: &str| NcPoly::term(alphabet.clone(), ring.clone(), alphabet.word(s).unwrap(), ring.one());
    let y = word("y");
    let linear = |w: &str, r: &FieldElement| &word(w) - &word("").scale_const(r);

    let mut f_xy = word("");
    for r in roots {
        f_xy = &f_xy * &linear("xy", r);
    }
    let f = &y * &f_xy;

    let mut chains = Vec::with_capacity(roots.len() + 1);
    for i in 0..=roots.len() {
        let mut chain: Vec<NcPoly> = roots[..i].iter().map(|r| linear("yx", r)).collect();
        chain.push(y.clone());
        chain.extend(roots[i..].iter().map(|r| linear("xy", r)));
        let product = chain[1..].iter().fold(chain[0].clone(), |acc, c| &acc * c);
        assert_eq!(product, f, "predicted chain must multiply back to F");
        chains.push(chain);
    }
    Ok((f, chains))
}

fn random_coeff(rng: &mut ChaCha8Rng, field: Field, nonzero: bool) -> FieldElement {
    loop {
        let c = match field {
            Field::Prime(p) => field.from_i64(rng.gen_range(0..p as i64)),
            Field::Rational => field.from_i64(rng.gen_range(-3..=3)),
        };
        if !nonzero || !field.is_zero(&c) {
            return c;
        }
    }
}

fn random_word(rng: &mut ChaCha8Rng, alphabet: &Alphabet, len: usize) -> Word {
    Word((0..len).map(|_| rng.gen_range(0..alphabet.len() as u8)).collect())
}

fn random_poly(rng: &mut ChaCha8Rng, alphabet: &Arc<Alphabet>, field: Field, degree: usize, term_cap: usize, homogeneous: bool) -> NcPoly {
    let ring = CRing::new(field, Vec::<String>::new());
    let term = |w: Word, c: FieldElement| NcPoly::term(alphabet.clone(), ring.clone(), w, ring.constant(c));
    let lead = random_word(rng, alphabet, degree);
    let c = random_coeff(rng, field, true);
    let mut poly = term(lead, c);
    for _ in 1..term_cap.max(1) {
        let len = if homogeneous { degree } else { rng.gen_range(0..=degree) };
        let w = random_word(rng, alphabet, len);
        let c = random_coeff(rng, field, false);
        let candidate = &poly + &term(w, c);
        // never cancel the top degree away
        if candidate.degree().ok() == Some(degree) {
            poly = candidate;
        }
    }
    poly
}

/// Seeded random `(F, G, H)` over `{x, y}` with `F = G·H`,
/// `deg G = deg_g`, `deg H = deg_h` and at most `term_cap` terms per factor.
pub fn random_factorable(seed: u64, field: Field, deg_g: usize, deg_h: usize, term_cap: usize) -> (NcPoly, NcPoly, NcPoly) {
    random_product(seed, field, deg_g, deg_h, term_cap, false)
}

/// Like [`random_factorable`] with homogeneous factors.
pub fn random_homogeneous_factorable(seed: u64, field: Field, deg_g: usize, deg_h: usize, term_cap: usize) -> (NcPoly, NcPoly, NcPoly) {
    random_product(seed, field, deg_g, deg_h, term_cap, true)
}

fn random_product(seed: u64, field: Field, deg_g: usize, deg_h: usize, term_cap: usize, homogeneous: bool) -> (NcPoly, NcPoly, NcPoly) {
    assert!(deg_g >= 1 && deg_h >= 1, "factor degrees must be positive");
    let alphabet = Arc::new(Alphabet::new(["x", "y"]).expect("valid alphabet"));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = random_poly(&mut rng, &alphabet, field, deg_g, term_cap, homogeneous);
    let h = random_poly(&mut rng, &alphabet, field, deg_h, term_cap, homogeneous);
    (&g * &h, g, h)
}
