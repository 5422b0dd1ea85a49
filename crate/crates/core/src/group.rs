//! Exact arithmetic in BS(1,2) = <a, t | tat^-1 = a^2>.
//!
//! Elements are stored through the faithful representation as Z[1/2] ⋊ Z:
//! a pair (q, n) with q a dyadic rational and n the t-exponent, multiplied by
//! (q1, n1)(q2, n2) = (q1 + 2^{n1} q2, n1 + n2). The generators map to
//! a = (1, 0) and t = (0, 1), under which the relator holds by construction.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::words::{Letter, Word};

/// An element of BS(1,2), held as num / 2^dexp together with the t-exponent.
///
/// Canonical form: `dexp == 0` or `num` is odd, so equality of elements is
/// component-wise equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    num: BigInt,
    dexp: u32,
    texp: i64,
}

impl GroupElement {
    pub fn identity() -> GroupElement {
        GroupElement {
            num: BigInt::zero(),
            dexp: 0,
            texp: 0,
        }
    }

    /// Builds the element num / 2^dexp with the given t-exponent, reducing to
    /// canonical form.
    pub fn new(num: BigInt, dexp: u32, texp: i64) -> GroupElement {
        let mut g = GroupElement { num, dexp, texp };
        g.canonicalize();
        g
    }

    pub fn from_i64(num: i64, dexp: u32, texp: i64) -> GroupElement {
        GroupElement::new(BigInt::from(num), dexp, texp)
    }

    pub fn generator(l: Letter) -> GroupElement {
        match l {
            Letter::A => GroupElement::from_i64(1, 0, 0),
            Letter::AInv => GroupElement::from_i64(-1, 0, 0),
            Letter::T => GroupElement::from_i64(0, 0, 1),
            Letter::TInv => GroupElement::from_i64(0, 0, -1),
        }
    }

    pub fn num(&self) -> &BigInt {
        &self.num
    }

    pub fn dexp(&self) -> u32 {
        self.dexp
    }

    pub fn texp(&self) -> i64 {
        self.texp
    }

    pub fn is_identity(&self) -> bool {
        self.num.is_zero() && self.texp == 0
    }

    pub fn is_canonical(&self) -> bool {
        self.dexp == 0 || self.num.is_odd()
    }

    fn canonicalize(&mut self) {
        if self.num.is_zero() {
            self.dexp = 0;
            return;
        }
        while self.dexp > 0 && !self.num.is_odd() {
            self.num >>= 1;
            self.dexp -= 1;
        }
    }

    /// Semidirect-product multiplication (q1 + 2^{n1} q2, n1 + n2).
    pub fn multiply(&self, other: &GroupElement) -> GroupElement {
        // 2^{n1} * num2 / 2^{d2}  =  num2 / 2^{d2'} after shifting.
        let shift = self.texp - i64::from(other.dexp);
        let (num2, d2) = if shift >= 0 {
            (&other.num << shift as u64, 0u32)
        } else {
            (other.num.clone(), (-shift) as u32)
        };
        let d = self.dexp.max(d2);
        let num = (&self.num << u64::from(d - self.dexp)) + (num2 << u64::from(d - d2));
        GroupElement::new(num, d, self.texp + other.texp)
    }

    pub fn inverse(&self) -> GroupElement {
        // (q, n)^-1 = (-2^{-n} q, -n).
        let shift = -self.texp - i64::from(self.dexp);
        let (num, dexp) = if shift >= 0 {
            (-(&self.num) << shift as u64, 0u32)
        } else {
            (-(&self.num), (-shift) as u32)
        };
        GroupElement::new(num, dexp, -self.texp)
    }

    /// Right-multiplication by one generator; the hot path of BFS and eval.
    pub fn mul_letter(&self, l: Letter) -> GroupElement {
        match l {
            Letter::T => GroupElement {
                num: self.num.clone(),
                dexp: self.dexp,
                texp: self.texp + 1,
            },
            Letter::TInv => GroupElement {
                num: self.num.clone(),
                dexp: self.dexp,
                texp: self.texp - 1,
            },
            Letter::A | Letter::AInv => {
                // q ± 2^{texp}
                let sign = if l == Letter::A { 1 } else { -1 };
                let shift = self.texp + i64::from(self.dexp);
                if shift >= 0 {
                    let mut unit = BigInt::one() << shift as u64;
                    if sign < 0 {
                        unit = -unit;
                    }
                    GroupElement::new(&self.num + unit, self.dexp, self.texp)
                } else {
                    let extra = (-shift) as u32;
                    let mut unit = BigInt::one();
                    if sign < 0 {
                        unit = -unit;
                    }
                    GroupElement::new((&self.num << u64::from(extra)) + unit, self.dexp + extra, self.texp)
                }
            }
        }
    }

    /// JSON form {"num": "<decimal>", "dexp": d, "texp": n}.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "num": self.num.to_string(),
            "dexp": self.dexp,
            "texp": self.texp,
        })
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}/2^{}, t^{})", self.num, self.dexp, self.texp)
    }
}

/// Evaluates a word to the group element it represents.
pub fn eval_word(w: &Word) -> GroupElement {
    let mut g = GroupElement::identity();
    for &l in w.letters() {
        g = g.mul_letter(l);
    }
    g
}

/// The integer N with t^k a^j t^-1 a^{e_{k-1}} ... t^-1 a^{e_0} = a^N, i.e.
/// N = 2^k j + sum_i 2^i e_i. `entries` lists (e_0, ..., e_{k-1}).
pub fn x_word_value(j: i64, entries: &[i64]) -> BigInt {
    assert!(!entries.is_empty(), "x_word_value needs k >= 1");
    let k = entries.len() as u64;
    let mut n = BigInt::from(j) << k;
    for (i, &e) in entries.iter().enumerate() {
        n += BigInt::from(e) << i as u64;
    }
    n
}

/// Assembles the X word t^k a^j t^-1 a^{e_{k-1}} ... t^-1 a^{e_0} used by
/// `x_word_value`.
pub fn assemble_x_word(j: i64, entries: &[i64]) -> Word {
    let mut w = Word::t_pow(entries.len() as i64);
    w = w.concat(&Word::a_pow(j));
    for &e in entries.iter().rev() {
        w = w.concat(&Word::t_pow(-1));
        w = w.concat(&Word::a_pow(e));
    }
    w
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn ge(num: i64, dexp: u32, texp: i64) -> GroupElement {
        GroupElement::from_i64(num, dexp, texp)
    }

    #[test]
    fn semidirect_law() {
        let t = GroupElement::generator(Letter::T);
        let a = GroupElement::generator(Letter::A);
        assert_eq!(t.multiply(&a), ge(2, 0, 1));
        let g = ge(3, 1, -2);
        assert_eq!(g.multiply(&GroupElement::identity()), g);
        assert_eq!(eval_word(&w("tat^-1")), eval_word(&w("a^2")));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(GroupElement::identity().inverse(), GroupElement::identity());
        assert_eq!(ge(1, 0, 0).inverse(), ge(-1, 0, 0));
        let g = ge(1, 1, -1);
        assert!(g.multiply(&g.inverse()).is_identity());
        assert!(g.inverse().multiply(&g).is_identity());
    }

    #[test]
    fn eval_examples() {
        assert_eq!(eval_word(&w("tat^-1")), ge(2, 0, 0));
        assert_eq!(eval_word(&w("t^-1at")), ge(1, 1, 0));
        assert_eq!(eval_word(&w("at")), ge(1, 0, 1));
    }

    /// All canonical elements keep dexp = 0 or num odd through arithmetic.
    #[test]
    fn canonical_everywhere() {
        let samples = [
            ge(0, 0, 0),
            ge(1, 0, 0),
            ge(3, 2, -1),
            ge(-5, 3, 2),
            ge(7, 0, 4),
        ];
        for g in &samples {
            assert!(g.is_canonical());
            assert!(g.inverse().is_canonical());
            for h in &samples {
                assert!(g.multiply(h).is_canonical());
            }
        }
        // 4/2^2 reduces to 1/2^0.
        assert_eq!(GroupElement::new(BigInt::from(4), 2, 0), ge(1, 0, 0));
    }

    /// eval(uv) = eval(u) * eval(v) for all words of length <= 5.
    #[test]
    fn eval_is_homomorphic_exhaustive() {
        let words = all_words(5);
        let evals: Vec<GroupElement> = words.iter().map(eval_word).collect();
        for (u, eu) in words.iter().zip(&evals) {
            for (v, ev) in words.iter().zip(&evals) {
                assert_eq!(eval_word(&u.concat(v)), eu.multiply(ev));
            }
        }
    }

    /// eval(free_reduce(w)) = eval(w) for all words of length <= 8.
    #[test]
    fn free_reduce_preserves_eval() {
        for word in all_words(8) {
            let r = word.free_reduce();
            assert!(r.len() <= word.len());
            assert!(r.is_freely_reduced());
            assert_eq!(eval_word(&r), eval_word(&word));
        }
    }

    /// eval(u tat^-1 v) = eval(u a^2 v) for all u, v of length <= 4.
    #[test]
    fn relator_insertion() {
        let words = all_words(4);
        let rel = w("tat^-1");
        let sq = w("a^2");
        for u in &words {
            for v in &words {
                assert_eq!(
                    eval_word(&u.concat(&rel).concat(v)),
                    eval_word(&u.concat(&sq).concat(v))
                );
            }
        }
    }

    /// t_exponent is an invariant of the element (length <= 6, exhaustive).
    #[test]
    fn t_exponent_matches_element() {
        for word in all_words(6) {
            assert_eq!(word.t_exponent(), eval_word(&word).texp());
        }
    }

    #[test]
    fn x_word_value_examples() {
        assert_eq!(x_word_value(2, &[0]), BigInt::from(4));
        assert_eq!(x_word_value(3, &[0, 1]), BigInt::from(14));
        assert_eq!(x_word_value(2, &[-1, 0]), BigInt::from(7));
    }

    /// x_word_value agrees with eval of the assembled word over the full box
    /// |j| <= 3, entries in {-1,0,1}^k, k <= 6.
    #[test]
    fn x_word_value_matches_eval() {
        for j in -3i64..=3 {
            for k in 1..=6usize {
                let mut entries = vec![-1i64; k];
                loop {
                    let n = x_word_value(j, &entries);
                    let g = eval_word(&assemble_x_word(j, &entries));
                    assert_eq!(g.texp(), 0);
                    assert_eq!(g.dexp(), 0);
                    assert_eq!(g.num(), &n);
                    // odometer over {-1,0,1}^k
                    let mut i = 0;
                    loop {
                        if i == k {
                            break;
                        }
                        entries[i] += 1;
                        if entries[i] <= 1 {
                            break;
                        }
                        entries[i] = -1;
                        i += 1;
                    }
                    if i == k {
                        break;
                    }
                }
            }
        }
    }

    pub(crate) fn all_words(max_len: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        let mut layer = vec![Word::empty()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for word in &layer {
                for l in Letter::ALL {
                    let mut v = word.letters().to_vec();
                    v.push(l);
                    next.push(Word::new(v));
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }
}
