//! Degree-split filter from the commutative image.
//!
//! Letting the letters commute is a ring homomorphism, so `F = G·H` maps to
//! `im F = im G · im H`. If `im F` keeps the full degree `n`, `deg im G = h`
//! and `h` must be the degree of a divisor of `im F`, i.e. a subset sum of
//! its irreducible factor degrees. If the image loses `δ = n - deg im F`
//! degrees, `im G` still divides `im F` and has degree between `h - δ` and
//! `h`. A zero image says nothing.
//!
//! Divisor degrees of the multivariate image are over-approximated by
//! restricting to lines `x_i = a_i·t + b_i` whose direction keeps the top
//! form nonzero: a divisor of degree `d` restricts to a univariate divisor
//! of degree `d`. Intersecting over many lines keeps the filter sound.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::DegreeSplit;
use crate::commalg::{CPoly, Field, FieldElement};
use crate::freealg::NcPoly;
use crate::Error;

const EXHAUSTIVE_LINES: u64 = 4096;
const SAMPLED_LINES: usize = 64;

/// Dense univariate polynomials over F_p, lowest degree first, no
/// trailing zeros.
mod upoly {
    pub type UPoly = Vec<u64>;

    pub fn trim(mut a: UPoly) -> UPoly {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn deg(a: &UPoly) -> Option<usize> {
        a.len().checked_sub(1)
    }

    fn inv(a: u64, p: u64) -> u64 {
        pow(a, p - 2, p)
    }

    fn pow(mut b: u64, mut e: u64, p: u64) -> u64 {
        let mut acc = 1;
        b %= p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        acc
    }

    pub fn sub(a: &UPoly, b: &UPoly, p: u64) -> UPoly {
        let n = a.len().max(b.len());
        trim(
            (0..n)
                .map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p)
                .collect(),
        )
    }

    pub fn mul(a: &UPoly, b: &UPoly, p: u64) -> UPoly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
        trim(out)
    }

    pub fn divrem(a: &UPoly, b: &UPoly, p: u64) -> (UPoly, UPoly) {
        let db = deg(b).expect("division by zero polynomial");
        let lc_inv = inv(*b.last().unwrap(), p);
        let mut r = a.clone();
        if r.len() < b.len() {
            return (Vec::new(), r);
        }
        let mut q = vec![0; r.len() - db];
        while let Some(dr) = deg(&r) {
            if dr < db {
                break;
            }
            let c = r[dr] * lc_inv % p;
            q[dr - db] = c;
            for (i, bi) in b.iter().enumerate() {
                let idx = dr - db + i;
                r[idx] = (r[idx] + p - c * bi % p) % p;
            }
            r = trim(r);
        }
        (trim(q), r)
    }

    pub fn monic(a: &UPoly, p: u64) -> UPoly {
        match a.last() {
            Some(&lc) => {
                let i = inv(lc, p);
                a.iter().map(|c| c * i % p).collect()
            }
            None => Vec::new(),
        }
    }

    pub fn gcd(a: &UPoly, b: &UPoly, p: u64) -> UPoly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_empty() {
            let r = divrem(&a, &b, p).1;
            a = b;
            b = r;
        }
        monic(&a, p)
    }

    pub fn derivative(a: &UPoly, p: u64) -> UPoly {
        trim(a.iter().enumerate().skip(1).map(|(i, c)| (i as u64 % p) * c % p).collect())
    }

    fn powmod(base: &UPoly, mut e: u64, m: &UPoly, p: u64) -> UPoly {
        let mut acc: UPoly = vec![1];
        let mut b = divrem(base, m, p).1;
        while e > 0 {
            if e & 1 == 1 {
                acc = divrem(&mul(&acc, &b, p), m, p).1;
            }
            b = divrem(&mul(&b, &b, p), m, p).1;
            e >>= 1;
        }
        acc
    }

    /// `a(t^(1/p))` for `a` with only exponents divisible by `p`.
    fn pth_root(a: &UPoly, p: u64) -> UPoly {
        a.iter().step_by(p as usize).copied().collect()
    }

    /// Squarefree decomposition: pairs (squarefree monic factor, multiplicity).
    pub fn squarefree(f: &UPoly, p: u64) -> Vec<(UPoly, u32)> {
        let f = monic(f, p);
        if deg(&f).unwrap_or(0) == 0 {
            return Vec::new();
        }
        let d = derivative(&f, p);
        if d.is_empty() {
            return squarefree(&pth_root(&f, p), p)
                .into_iter()
                .map(|(g, m)| (g, m * p as u32))
                .collect();
        }
        let mut out = Vec::new();
        let mut c = gcd(&f, &d, p);
        let mut w = divrem(&f, &c, p).0;
        let mut i = 1;
        while deg(&w).unwrap_or(0) > 0 {
            let y = gcd(&w, &c, p);
            let fac = divrem(&w, &y, p).0;
            if deg(&fac).unwrap_or(0) > 0 {
                out.push((fac, i));
            }
            i += 1;
            w = y;
            c = divrem(&c, &w, p).0;
        }
        if deg(&c).unwrap_or(0) > 0 {
            out.extend(
                squarefree(&pth_root(&c, p), p)
                    .into_iter()
                    .map(|(g, m)| (g, m * p as u32)),
            );
        }
        out
    }

    /// Irreducible factor degrees of a squarefree monic polynomial
    /// (distinct-degree factorization).
    pub fn ddf_degrees(f: &UPoly, p: u64) -> Vec<usize> {
        let mut out = Vec::new();
        let mut f = f.clone();
        let x: UPoly = vec![0, 1];
        let mut h = x.clone();
        let mut i = 1;
        while deg(&f).unwrap_or(0) >= 2 * i {
            h = powmod(&h, p, &f, p);
            let g = gcd(&sub(&h, &x, p), &f, p);
            let dg = deg(&g).unwrap_or(0);
            if dg > 0 {
                out.extend(std::iter::repeat_n(i, dg / i));
                f = divrem(&f, &g, p).0;
                h = divrem(&h, &f, p).1;
            }
            i += 1;
        }
        if let Some(d) = deg(&f).filter(|&d| d > 0) {
            out.push(d);
        }
        out
    }

    /// Irreducible factor degrees with multiplicity.
    pub fn factor_degrees(f: &UPoly, p: u64) -> Vec<usize> {
        let mut out = Vec::new();
        for (g, m) in squarefree(f, p) {
            for d in ddf_degrees(&g, p) {
                out.extend(std::iter::repeat_n(d, m as usize));
            }
        }
        out
    }
}

/// All subset sums of `parts`, as a membership table over `0..=total`.
fn subset_sums(parts: &[usize], total: usize) -> Vec<bool> {
    let mut can = vec![false; total + 1];
    can[0] = true;
    for &d in parts {
        for s in (d..=total).rev() {
            if can[s - d] {
                can[s] = true;
            }
        }
    }
    can
}

fn restrict_to_line(f: &CPoly, dir: &[u64], offset: &[u64], p: u64) -> upoly::UPoly {
    let mut acc: upoly::UPoly = Vec::new();
    let lines: Vec<upoly::UPoly> = dir
        .iter()
        .zip(offset)
        .map(|(&a, &b)| upoly::trim(vec![b, a]))
        .collect();
    for (m, c) in f.terms() {
        let FieldElement::Mod(c) = c else { unreachable!("prime field") };
        let mut t: upoly::UPoly = vec![*c as u64];
        for (l, &e) in lines.iter().zip(&m.0) {
            for _ in 0..e {
                t = upoly::mul(&t, l, p);
            }
        }
        let n = acc.len().max(t.len());
        acc = upoly::trim(
            (0..n)
                .map(|i| (acc.get(i).copied().unwrap_or(0) + t.get(i).copied().unwrap_or(0)) % p)
                .collect(),
        );
    }
    acc
}

/// Degrees of possible divisors of a nonzero polynomial over F_p, as a
/// table over `0..=deg f`. Always a superset of the true divisor degrees.
pub fn divisor_degrees(f: &CPoly) -> Vec<bool> {
    let n = f.total_degree().expect("nonzero polynomial") as usize;
    let Field::Prime(p) = f.field() else {
        return vec![true; n + 1];
    };
    let p = p as u64;
    let v = f.ring().nvars();
    let top_terms: Vec<_> = f.terms().filter(|(m, _)| m.degree() as usize == n).collect();
    let top_at = |dir: &[u64]| -> bool {
        let point: Vec<FieldElement> = dir.iter().map(|&a| FieldElement::Mod(a as u32)).collect();
        let field = f.field();
        let mut acc = field.zero();
        for (m, c) in &top_terms {
            let mut t = (*c).clone();
            for (x, &e) in point.iter().zip(&m.0) {
                t = field.mul(&t, &field.pow(x, e as u64));
            }
            acc = field.add(&acc, &t);
        }
        !field.is_zero(&acc)
    };

    let mut allowed = vec![true; n + 1];
    let mut tried = 0;
    // None when the line loses degree, otherwise whether the table is exhausted
    let consider = |dir: Vec<u64>, off: Vec<u64>, allowed: &mut Vec<bool>| -> Option<bool> {
        if !top_at(&dir) {
            return None;
        }
        let u = restrict_to_line(f, &dir, &off, p);
        debug_assert_eq!(upoly::deg(&u), Some(n));
        let sums = subset_sums(&upoly::factor_degrees(&u, p), n);
        for (a, s) in allowed.iter_mut().zip(sums) {
            *a &= s;
        }
        // nothing left to rule out
        Some(allowed.iter().filter(|&&a| a).count() == 2.min(n + 1))
    };

    let lines = p.checked_pow(2 * v as u32).filter(|&c| c <= EXHAUSTIVE_LINES);
    if let Some(count) = lines {
        for idx in 0..count {
            let mut rest = idx;
            let mut digits = Vec::with_capacity(2 * v);
            for _ in 0..2 * v {
                digits.push(rest % p);
                rest /= p;
            }
            let (dir, off) = digits.split_at(v);
            if let Some(done) = consider(dir.to_vec(), off.to_vec(), &mut allowed) {
                tried += 1;
                if done {
                    break;
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(0x6b6e_6170);
        for _ in 0..SAMPLED_LINES * 4 {
            let dir: Vec<u64> = (0..v).map(|_| rng.gen_range(0..p)).collect();
            let off: Vec<u64> = (0..v).map(|_| rng.gen_range(0..p)).collect();
            if let Some(done) = consider(dir, off, &mut allowed) {
                tried += 1;
                if done || tried >= SAMPLED_LINES {
                    break;
                }
            }
        }
    }
    if tried == 0 {
        return vec![true; n + 1];
    }
    allowed
}

/// Degree splits compatible with the commutative image of `F`.
///
/// A necessary condition only: every split at which `F` factors is
/// returned, possibly with others. Over Q, or when the image vanishes,
/// every split is returned.
pub fn knapsack_splits(f: &NcPoly) -> Result<Vec<DegreeSplit>, Error> {
    let f = super::bidegree::prepare_input(f)?;
    let n = f.degree()?;
    let all: Vec<DegreeSplit> = (1..n).map(|h| DegreeSplit::new(h, n - h)).collect();
    if f.field() == Field::Rational {
        return Ok(all);
    }
    let image = f.commutative_image()?;
    let Some(m) = image.total_degree() else {
        return Ok(all);
    };
    let m = m as usize;
    let delta = n - m;
    let divisors = divisor_degrees(&image);
    Ok(all
        .into_iter()
        .filter(|s| {
            let lo = s.h.saturating_sub(delta);
            (lo..=s.h.min(m)).any(|d| divisors[d])
        })
        .collect())
}
