//! Buchberger's algorithm and reduced Gröbner bases under pure lex order.

use super::cpoly::CPoly;
use crate::Error;

fn check_ring(f: &CPoly, basis: &[CPoly]) -> Result<(), Error> {
    if basis.iter().all(|g| g.ring().same_as(f.ring())) {
        Ok(())
    } else {
        Err(Error::ContextMismatch)
    }
}

/// Remainder of multivariate division of `f` by `basis`.
///
/// No monomial of the result is divisible by the leading monomial of any
/// (nonzero) basis element.
pub fn normal_form(f: &CPoly, basis: &[CPoly]) -> Result<CPoly, Error> {
    check_ring(f, basis)?;
    let ring = f.ring().clone();
    let field = ring.field;
    let mut p = f.clone();
    let mut rem = ring.zero();
    while let Some((lm, lc)) = p.leading_term() {
        let (lm, lc) = (lm.clone(), lc.clone());
        let divisor = basis
            .iter()
            .filter(|g| !g.is_zero())
            .find(|g| g.leading_monomial().unwrap().divides(&lm));
        match divisor {
            Some(g) => {
                let (glm, glc) = g.leading_term().unwrap();
                let q = glm.quotient_of(&lm);
                let c = field.div(&lc, glc).unwrap();
                p = &p - &g.mul_term(&q, &c);
            }
            None => {
                let t = ring.term(lm, lc);
                rem = &rem + &t;
                p = &p - &t;
            }
        }
    }
    Ok(rem)
}

pub fn s_polynomial(f: &CPoly, g: &CPoly) -> CPoly {
    let field = f.field();
    let (fm, fc) = f.leading_term().expect("nonzero polynomial");
    let (gm, gc) = g.leading_term().expect("nonzero polynomial");
    let l = fm.lcm(gm);
    let a = f.mul_term(&fm.quotient_of(&l), &field.inv(fc).unwrap());
    let b = g.mul_term(&gm.quotient_of(&l), &field.inv(gc).unwrap());
    &a - &b
}

/// Gröbner basis of the ideal generated by `gens`.
///
/// Plain pair queue with the coprime-leading-monomial criterion. Zero
/// generators are dropped; an all-zero input yields an empty basis.
pub fn buchberger(gens: &[CPoly]) -> Result<Vec<CPoly>, Error> {
    let mut basis: Vec<CPoly> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if let Some(first) = basis.first() {
        check_ring(first, &basis)?;
    }
    let mut pairs: Vec<(usize, usize)> = (0..basis.len())
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .collect();
    while let Some((i, j)) = pairs.pop() {
        let (fi, fj) = (&basis[i], &basis[j]);
        if fi.leading_monomial().unwrap().coprime(fj.leading_monomial().unwrap()) {
            continue;
        }
        let r = normal_form(&s_polynomial(fi, fj), &basis)?;
        if !r.is_zero() {
            let n = basis.len();
            basis.push(r);
            pairs.extend((0..n).map(|i| (i, n)));
        }
    }
    Ok(basis)
}

/// Checks that every S-polynomial of `basis` reduces to zero.
pub fn is_groebner(basis: &[CPoly]) -> Result<bool, Error> {
    let nz: Vec<&CPoly> = basis.iter().filter(|g| !g.is_zero()).collect();
    let owned: Vec<CPoly> = nz.iter().map(|g| (*g).clone()).collect();
    for j in 0..nz.len() {
        for i in 0..j {
            if !normal_form(&s_polynomial(nz[i], nz[j]), &owned)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The unique reduced Gröbner basis: monic, inter-reduced, sorted by
/// increasing leading monomial.
pub fn reduce_gb(basis: &[CPoly]) -> Result<Vec<CPoly>, Error> {
    if !is_groebner(basis)? {
        return Err(Error::NotGroebner);
    }
    let mut g: Vec<CPoly> = basis.iter().filter(|p| !p.is_zero()).map(CPoly::monic).collect();
    g.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
    g.dedup_by(|a, b| a.leading_monomial() == b.leading_monomial());

    // minimal: drop elements whose leading monomial another element divides
    let minimal: Vec<CPoly> = g
        .iter()
        .enumerate()
        .filter(|(i, p)| {
            let lm = p.leading_monomial().unwrap();
            !g.iter()
                .enumerate()
                .any(|(j, q)| j != *i && q.leading_monomial().unwrap().divides(lm))
        })
        .map(|(_, p)| p.clone())
        .collect();

    let mut reduced = Vec::with_capacity(minimal.len());
    for (i, p) in minimal.iter().enumerate() {
        let others: Vec<CPoly> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, q)| q.clone())
            .collect();
        let (lm, lc) = p.leading_term().unwrap();
        let head = p.ring().term(lm.clone(), lc.clone());
        let tail = normal_form(&(p - &head), &others)?;
        reduced.push(&head + &tail);
    }
    reduced.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
    Ok(reduced)
}

/// `reduce_gb(buchberger(gens))`.
pub fn reduced_groebner_basis(gens: &[CPoly]) -> Result<Vec<CPoly>, Error> {
    reduce_gb(&buchberger(gens)?)
}
