//! The normal-form language: one canonical geodesic word per group element.
//!
//! There are ten types of normal-form word, falling into five shape
//! families:
//!
//! * a^i with |i| <= 3;
//! * t^k (N-run) t^m with k >= 1, m >= 0, l >= k+m (types X, XN, XNP);
//! * (N-run) t^k with 0 <= k <= l (types N, NP<=);
//! * t^-k (P-run) with 0 <= k < l (types P, NP>);
//! * t^-k (P-run) t^-m with k >= 0, m >= 1, k+m < l (types PX, NPX);
//!
//! where l counts the t-letters of the run, a trailing/leading t-power next
//! to an a^0 boundary entry is forbidden, and the run entries obey the
//! discipline of [`crate::rewriting::n_run_entries_ok`]. The last two
//! families are exactly the inverses of words from the middle two with
//! strictly negative t-exponent, which is how this module checks and
//! enumerates them.

pub mod tables;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::group::{eval_word, GroupElement};
use crate::rewriting::n_run_entries_ok;
use crate::words::{Letter, Word};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NfError {
    /// Surjectivity and uniqueness guarantee exactly one candidate; anything
    /// else signals an implementation bug.
    #[error("internal consistency failure: {candidates} normal-form candidates survive for {element}")]
    Inconsistent { element: String, candidates: usize },
}

/// True iff `w` is a normal-form word.
pub fn is_normal_form(w: &Word) -> bool {
    is_e_form(w) || n_side_member(w, false) || n_side_member(&w.inverse(), true)
}

fn is_e_form(w: &Word) -> bool {
    w.len() <= 3
        && (w.letters().iter().all(|&l| l == Letter::A)
            || w.letters().iter().all(|&l| l == Letter::AInv))
}

/// Splits a word as t^lead (N-run) t^trail, returning the run entries in
/// written order. Fails on anything not of that shape (including words whose
/// a-blocks mix signs, which cannot be powers).
fn parse_n_shape(w: &Word) -> Option<(i64, Vec<i64>, i64)> {
    let ls = w.letters();
    let mut i = 0usize;

    fn a_block(ls: &[Letter], i: &mut usize) -> Option<i64> {
        let mut e = 0i64;
        let mut sign = 0i64;
        while *i < ls.len() {
            let s = ls[*i].a_step();
            if s == 0 {
                break;
            }
            if sign == 0 {
                sign = s;
            } else if sign != s {
                return None;
            }
            e += s;
            *i += 1;
        }
        Some(e)
    }

    let mut lead = 0i64;
    while i < ls.len() && ls[i] == Letter::T {
        lead += 1;
        i += 1;
    }
    let first = a_block(ls, &mut i)?;
    if i >= ls.len() || ls[i] != Letter::TInv {
        return None;
    }
    let mut entries = vec![first];
    while i < ls.len() && ls[i] == Letter::TInv {
        i += 1;
        entries.push(a_block(ls, &mut i)?);
    }
    let mut trail = 0i64;
    while i < ls.len() && ls[i] == Letter::T {
        trail += 1;
        i += 1;
    }
    if i != ls.len() {
        return None;
    }
    Some((lead, entries, trail))
}

/// Membership in the two N-run families. With `strict` the t-exponent must
/// be strictly negative, which characterises the words whose inverses form
/// the P-run families.
fn n_side_member(w: &Word, strict: bool) -> bool {
    let Some((lead, entries, trail)) = parse_n_shape(w) else {
        return false;
    };
    let l = (entries.len() - 1) as i64;
    let last = *entries.last().unwrap();
    if lead >= 1 {
        let (k, m) = (lead, trail);
        let bound = if strict { l > k + m } else { l >= k + m };
        bound && (m == 0 || last != 0) && n_run_entries_ok(&entries, true)
    } else {
        let k = trail;
        let bound = if strict { k < l } else { k <= l };
        bound && (k == 0 || last != 0) && n_run_entries_ok(&entries, false)
    }
}

/// a^{e_0} t^-1 a^{e_1} ... with entries in written order.
fn word_from_n_run(entries: &[i64]) -> Word {
    let mut w = Word::empty();
    if let Some((&first, rest)) = entries.split_first() {
        w = w.concat(&Word::a_pow(first));
        for &e in rest {
            w.push(Letter::TInv);
            w = w.concat(&Word::a_pow(e));
        }
    }
    w
}

fn assemble_n_word(lead: i64, entries: &[i64], trail: i64) -> Word {
    Word::t_pow(lead)
        .concat(&word_from_n_run(entries))
        .concat(&Word::t_pow(trail))
}

/// All digit vectors (d_0 .. d_l, least significant first) with
/// sum d_i 2^i = s, interior digits in {0, ±1} with no two adjacent nonzero,
/// and |d_l| <= 3 (|d_l| in {2, 3} when `big_top`).
fn digit_expansions(s: &BigInt, l: usize, big_top: bool) -> Vec<Vec<i64>> {
    fn rec(
        rem: BigInt,
        pos: usize,
        l: usize,
        big_top: bool,
        prev_nonzero: bool,
        acc: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
    ) {
        if pos == l {
            if let Some(top) = rem.to_i64() {
                if top.abs() <= 3 && (!big_top || top.abs() >= 2) {
                    acc.push(top);
                    out.push(acc.clone());
                    acc.pop();
                }
            }
            return;
        }
        // |remaining| can never exceed 2^{l-pos+2}
        if rem.magnitude().bits() > (l - pos) as u64 + 3 {
            return;
        }
        if !rem.bit(0) {
            acc.push(0);
            rec(rem >> 1, pos + 1, l, big_top, false, acc, out);
            acc.pop();
        } else if !prev_nonzero {
            for d in [1i64, -1] {
                acc.push(d);
                rec((&rem - d) >> 1, pos + 1, l, big_top, true, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut acc = Vec::with_capacity(l + 1);
    rec(s.clone(), 0, l, big_top, false, &mut acc, &mut out);
    out
}

fn reversed(mut digits: Vec<i64>) -> Vec<i64> {
    digits.reverse();
    digits
}

/// Candidate normal forms for an element with t-exponent <= 0, drawn from the
/// two N-run families. The run entries come from signed-digit expansions of
/// the integer S determined by each (k, m) choice; over-generation is fine
/// because the caller filters through `is_normal_form` and eval-equality.
fn n_side_candidates(g: &GroupElement) -> Vec<Word> {
    let n = g.texp();
    let dexp = i64::from(g.dexp());
    let num = g.num();
    let mut out = Vec::new();

    if num.is_zero() {
        if n <= -1 {
            out.push(Word::t_pow(n));
        }
        return out;
    }
    let bits = num.magnitude().bits() as i64;

    // t^k (run), q = S * 2^{k-l}: S fixed once l-k is, feasible only while
    // 2^{l+1} stays comparable to |S|
    if -n >= dexp {
        let s: BigInt = num << ((-n - dexp) as u64);
        let sbits = s.magnitude().bits() as i64;
        let mut k = 1i64;
        loop {
            let l = k - n;
            if l > sbits + 1 {
                break;
            }
            if l >= 1 {
                for digits in digit_expansions(&s, l as usize, true) {
                    out.push(assemble_n_word(k, &reversed(digits), 0));
                }
            }
            k += 1;
        }
    }
    // t^k (run) t^m with m > 0 forces an odd S, so l - k = dexp
    if num.bit(0) {
        let m = n + dexp;
        if m >= 1 {
            let mut k = 1i64;
            loop {
                let l = k + dexp;
                if l > bits + 1 {
                    break;
                }
                for digits in digit_expansions(num, l as usize, true) {
                    out.push(assemble_n_word(k, &reversed(digits), m));
                }
                k += 1;
            }
        }
    }
    // (run) t^0: l = -n
    let l = -n;
    if l >= 1 && l >= dexp {
        let s: BigInt = num << ((l - dexp) as u64);
        for digits in digit_expansions(&s, l as usize, false) {
            out.push(assemble_n_word(0, &reversed(digits), 0));
        }
    }
    // (run) t^k with k > 0 forces an odd S, so l = dexp
    if num.bit(0) {
        let (l, k) = (dexp, n + dexp);
        if l >= 1 && k >= 1 {
            for digits in digit_expansions(num, l as usize, false) {
                out.push(assemble_n_word(0, &reversed(digits), k));
            }
        }
    }
    out
}

/// The unique normal-form word representing `g`.
pub fn nf_of_element(g: &GroupElement) -> Result<Word, NfError> {
    let mut cands: Vec<Word> = Vec::new();
    if g.dexp() == 0 && g.texp() == 0 {
        if let Some(i) = g.num().to_i64() {
            if i.abs() <= 3 {
                cands.push(Word::a_pow(i));
            }
        }
    }
    if g.texp() <= 0 {
        cands.extend(n_side_candidates(g));
    }
    if g.texp() >= 1 {
        cands.extend(
            n_side_candidates(&g.inverse())
                .into_iter()
                .map(|w| w.inverse()),
        );
    }
    let mut survivors: Vec<Word> = cands
        .into_iter()
        .filter(|w| is_normal_form(w) && eval_word(w) == *g)
        .collect();
    survivors.sort();
    survivors.dedup();
    if survivors.len() == 1 {
        Ok(survivors.pop().unwrap())
    } else {
        Err(NfError::Inconsistent {
            element: g.to_string(),
            candidates: survivors.len(),
        })
    }
}

/// The normal form of the element `w` represents; never longer than `w`.
pub fn normalize(w: &Word) -> Result<Word, NfError> {
    nf_of_element(&eval_word(w))
}

/// Geodesic length of `g`, i.e. the length of its normal form.
pub fn geodesic_length(g: &GroupElement) -> Result<usize, NfError> {
    Ok(nf_of_element(g)?.len())
}

/// Every normal-form word of length at most `max_len`, each exactly once, in
/// (length, lexicographic) order. Words are built directly from the shape
/// grammars, not by filtering all words.
pub fn enumerate_nf(max_len: usize) -> Vec<Word> {
    let mut out: Vec<Word> = Vec::new();
    for i in -3i64..=3 {
        if i.unsigned_abs() as usize <= max_len {
            out.push(Word::a_pow(i));
        }
    }

    // X side: t^k (run) t^m, plus inverses (PX/NPX) when t-exponent < 0
    for entries in generate_runs(true, max_len.saturating_sub(1)) {
        let l = entries.len() - 1;
        let cost = l + entries.iter().map(|e| e.unsigned_abs() as usize).sum::<usize>();
        let last = *entries.last().unwrap();
        for k in 1..=l.min(max_len - cost) {
            let w = assemble_n_word(k as i64, &entries, 0);
            out.push(w.clone());
            if k < l {
                out.push(w.inverse());
            }
            if last != 0 {
                for m in 1..=(l - k) {
                    if cost + k + m > max_len {
                        break;
                    }
                    let w = assemble_n_word(k as i64, &entries, m as i64);
                    out.push(w.clone());
                    if k + m < l {
                        out.push(w.inverse());
                    }
                }
            }
        }
    }
    // N side: (run) t^k, plus inverses (P/NP>) when t-exponent < 0
    for entries in generate_runs(false, max_len) {
        let l = entries.len() - 1;
        let cost = l + entries.iter().map(|e| e.unsigned_abs() as usize).sum::<usize>();
        let last = *entries.last().unwrap();
        let w0 = word_from_n_run(&entries);
        out.push(w0.clone());
        out.push(w0.inverse());
        if last != 0 {
            for k in 1..=l {
                if cost + k > max_len {
                    break;
                }
                let w = assemble_n_word(0, &entries, k as i64);
                out.push(w.clone());
                if k < l {
                    out.push(w.inverse());
                }
            }
        }
    }

    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// All entry vectors of valid runs with l >= 1 whose decoded run costs at
/// most `budget` letters (t-steps plus a-letters).
pub(crate) fn generate_runs(xside: bool, budget: usize) -> Vec<Vec<i64>> {
    fn extend(
        acc: &mut Vec<i64>,
        cost: usize,
        budget: usize,
        xside: bool,
        out: &mut Vec<Vec<i64>>,
    ) {
        if acc.len() >= 2 && n_run_entries_ok(acc, xside) {
            out.push(acc.clone());
        }
        if cost + 1 > budget {
            return;
        }
        for e in [0i64, 1, -1] {
            let c = cost + 1 + e.unsigned_abs() as usize;
            if c > budget {
                continue;
            }
            if e != 0 && *acc.last().unwrap() != 0 && !(acc.len() == 1 && e == acc[0].signum()) {
                continue;
            }
            acc.push(e);
            extend(acc, c, budget, xside, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    let firsts: Vec<i64> = if xside {
        vec![2, 3, -2, -3]
    } else {
        (-3..=3).collect()
    };
    for e0 in firsts {
        let c0 = e0.unsigned_abs() as usize;
        if c0 > budget {
            continue;
        }
        let mut acc = vec![e0];
        extend(&mut acc, c0, budget, xside, &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::eval_word;
    use crate::oracle;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn membership_examples() {
        assert!(is_normal_form(&w("ta^2t^-1")));
        assert!(!is_normal_form(&w("t^2a^2t^-2a^-1")));
        assert!(!is_normal_form(&w("tat^-1")));
        assert!(is_normal_form(&Word::empty()));
        assert!(is_normal_form(&w("a^3")));
        assert!(!is_normal_form(&w("a^4")));
        assert!(is_normal_form(&w("t")));
        assert!(is_normal_form(&w("t^-1")));
        assert!(is_normal_form(&w("at^-1at")));
        assert!(!is_normal_form(&w("t^-1ata")));
        assert!(is_normal_form(&w("t^2a^2t^-1")));
        assert!(!is_normal_form(&w("ta^4t^-1")));
        // 30(-1) prefix is allowed with a leading t, 20(-1) is not
        assert!(is_normal_form(&w("t^2a^3t^-2a^-1")));
        assert!(!is_normal_form(&w("t^-1a^2")));
    }

    #[test]
    fn nf_of_element_examples() {
        let a4 = eval_word(&w("a^4"));
        assert_eq!(nf_of_element(&a4).unwrap(), w("ta^2t^-1"));
        assert_eq!(nf_of_element(&GroupElement::identity()).unwrap(), Word::empty());
        let a6 = eval_word(&w("a^6"));
        assert_eq!(nf_of_element(&a6).unwrap(), w("ta^3t^-1"));
        assert_eq!(nf_of_element(&a6).unwrap().len(), 5);
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(normalize(&w("a^5")).unwrap(), w("ta^2t^-1a"));
        assert_eq!(normalize(&w("tt^-1")).unwrap(), Word::empty());
        assert_eq!(normalize(&w("t^-1a^2")).unwrap(), w("at^-1"));
    }

    #[test]
    fn geodesic_length_examples() {
        assert_eq!(geodesic_length(&GroupElement::identity()).unwrap(), 0);
        assert_eq!(geodesic_length(&GroupElement::from_i64(2, 0, 0)).unwrap(), 2);
        assert_eq!(geodesic_length(&GroupElement::from_i64(6, 0, 0)).unwrap(), 5);
    }

    #[test]
    fn enumerate_small() {
        assert_eq!(enumerate_nf(0), vec![Word::empty()]);
        let one = enumerate_nf(1);
        let mut expect = vec![Word::empty(), w("a"), w("a^-1"), w("t"), w("t^-1")];
        expect.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        assert_eq!(one, expect);
    }

    /// Direct enumeration agrees with filtering all words by membership.
    #[test]
    fn enumerate_matches_filter() {
        let enumerated = enumerate_nf(7);
        let mut filtered: Vec<Word> = crate::group::tests::all_words(7)
            .into_iter()
            .filter(is_normal_form)
            .collect();
        filtered.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        assert_eq!(enumerated, filtered);
    }

    /// normalize is idempotent on all words of length <= 8... checked here on
    /// length <= 6 for test-time reasons; the acceptance suite covers 8.
    #[test]
    fn normalize_idempotent() {
        for word in crate::group::tests::all_words(6) {
            let once = normalize(&word).unwrap();
            assert!(once.len() <= word.len());
            assert_eq!(normalize(&once).unwrap(), once);
            assert!(is_normal_form(&once));
        }
    }

    /// Surjectivity, uniqueness and geodesicity against the BFS oracle at a
    /// small radius (the acceptance suite runs radius 10).
    #[test]
    fn oracle_trichotomy_radius_6() {
        let ball = oracle::bfs_ball(6).unwrap();
        let words = enumerate_nf(6);
        let mut seen = std::collections::HashMap::new();
        for word in &words {
            let g = eval_word(word);
            let d = ball
                .distance(&g)
                .unwrap_or_else(|| panic!("{word} evaluates outside the ball"));
            assert_eq!(d as usize, word.len(), "{word} is not geodesic");
            assert!(seen.insert(g, word.clone()).is_none(), "duplicate element for {word}");
        }
        assert_eq!(seen.len(), ball.len(), "normal forms missing for some elements");
    }
}
