//! Pivot words for the general algorithm.
//!
//! Peeling off the lower homogeneous parts works like a two-sided division:
//! the largest remaining word is matched against `Ĝ·w` (a word of
//! `G_h·H_{k-j}`) or `b·Ĥ` (a word of `G_{h-j}·H_k`). That is exact only if
//! `Ĝ` and `Ĥ` are the leading words of `G_h` and `H_k` for one word order
//! compatible with concatenation. Every letter ranking, read left-to-right
//! or right-to-left, gives such an order on words of equal length, so the
//! admissible pivots are the leading-word pairs over those orders. Among
//! them we take the pair with the fewest overlaps, since each overlap costs
//! an extension symbol.

use std::cmp::Ordering;

use crate::freealg::{overlap_lengths, NcPoly, Word};

/// Total order on words of equal length: lexicographic under a letter
/// ranking, compared from the left or from the right end.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordOrder {
    rank: Vec<u8>,
    from_right: bool,
}

impl WordOrder {
    pub fn natural(nletters: usize) -> Self {
        WordOrder {
            rank: (0..nletters as u8).collect(),
            from_right: false,
        }
    }

    pub fn cmp(&self, a: &Word, b: &Word) -> Ordering {
        let key = |l: &u8| self.rank[*l as usize];
        a.len().cmp(&b.len()).then_with(|| {
            if self.from_right {
                a.letters().iter().rev().map(key).cmp(b.letters().iter().rev().map(key))
            } else {
                a.letters().iter().map(key).cmp(b.letters().iter().map(key))
            }
        })
    }

    pub fn max<'a>(&self, words: impl Iterator<Item = &'a Word>) -> Option<&'a Word> {
        words.max_by(|a, b| self.cmp(a, b))
    }
}

/// Orders tried for pivot selection, natural order first.
///
/// All letter rankings for alphabets up to five letters; beyond that only
/// the natural and reversed rankings.
fn candidate_orders(nletters: usize) -> Vec<WordOrder> {
    let mut rankings: Vec<Vec<u8>> = Vec::new();
    if nletters <= 5 {
        let mut perm: Vec<u8> = (0..nletters as u8).collect();
        loop {
            rankings.push(perm.clone());
            // next lexicographic permutation
            let Some(i) = (1..perm.len()).rev().find(|&i| perm[i - 1] < perm[i]) else {
                break;
            };
            let j = (i..perm.len()).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
            perm.swap(i - 1, j);
            perm[i..].reverse();
        }
    } else {
        rankings.push((0..nletters as u8).collect());
        rankings.push((0..nletters as u8).rev().collect());
    }
    let mut out = Vec::with_capacity(rankings.len() * 2);
    for from_right in [false, true] {
        for rank in &rankings {
            out.push(WordOrder {
                rank: rank.clone(),
                from_right,
            });
        }
    }
    out
}

/// Chosen pivot pair together with the order that makes it leading.
#[derive(Clone, Debug)]
pub struct Pivots {
    pub g_hat: Word,
    pub h_hat: Word,
    pub order: WordOrder,
}

/// Every (leading word of `g_head`, leading word of `h_head`) pair
/// realized by some candidate order, deduplicated.
pub fn admissible_pivots(g_head: &NcPoly, h_head: &NcPoly) -> Vec<(Word, Word)> {
    let mut out: Vec<(Word, Word)> = Vec::new();
    for order in candidate_orders(g_head.alphabet().len()) {
        let pair = leading_pair(&order, g_head, h_head);
        if !out.contains(&pair) {
            out.push(pair);
        }
    }
    out
}

fn leading_pair(order: &WordOrder, g_head: &NcPoly, h_head: &NcPoly) -> (Word, Word) {
    (
        order.max(g_head.words()).expect("nonzero head").clone(),
        order.max(h_head.words()).expect("nonzero head").clone(),
    )
}

/// The admissible pivot pair with the fewest overlaps; ties keep the
/// earliest candidate order.
pub fn select_factor_pivots(g_head: &NcPoly, h_head: &NcPoly) -> Pivots {
    let mut best: Option<(usize, Pivots)> = None;
    for order in candidate_orders(g_head.alphabet().len()) {
        let (g_hat, h_hat) = leading_pair(&order, g_head, h_head);
        let count = overlap_lengths(&g_hat, &h_hat).len();
        if best.as_ref().is_none_or(|(c, _)| count < *c) {
            best = Some((count, Pivots { g_hat, h_hat, order }));
        }
        if count == 0 {
            break;
        }
    }
    best.expect("at least one order").1
}
