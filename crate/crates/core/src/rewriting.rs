//! Runs, the ten word types, and the length-preserving rewrite moves.
//!
//! An N-run is a word a^{e_l} t^-1 a^{e_{l-1}} ... t^-1 a^{e_0}; a P-run is
//! its mirror image with t in place of t^-1. Runs are written in shorthand by
//! listing the a-exponents, e.g. a^2 t^-1 a t^-1 t^-1 a t^-1 a^-1 is
//! 2101(-1). Entries are stored in written order, so `entries[0]` is the
//! start of an N-run and the end of a P-run is `entries[len-1]`.

use std::fmt;

use thiserror::Error;

use crate::words::{Letter, Word};

/// Direction of a run: N-runs descend (t^-1 steps), P-runs ascend.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RunDirection {
    N,
    P,
}

impl RunDirection {
    fn step_letter(self) -> Letter {
        match self {
            RunDirection::N => Letter::TInv,
            RunDirection::P => Letter::T,
        }
    }
}

/// A word of shape t^pre (run) t^post with the run given by its entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunForm {
    pub pre_t: i64,
    pub direction: RunDirection,
    pub entries: Vec<i64>,
    pub post_t: i64,
}

/// The ten geodesic word types. Types E..XNP have t-exponent <= 0, the rest
/// have t-exponent > 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WordType {
    E,
    X,
    N,
    Xn,
    NpLe,
    Xnp,
    P,
    Px,
    NpGt,
    Npx,
}

impl fmt::Display for WordType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            WordType::E => "E",
            WordType::X => "X",
            WordType::N => "N",
            WordType::Xn => "XN",
            WordType::NpLe => "NP<=",
            WordType::Xnp => "XNP",
            WordType::P => "P",
            WordType::Px => "PX",
            WordType::NpGt => "NP>",
            WordType::Npx => "NPX",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RewriteError {
    #[error("word is not of run shape (an a-block mixes signs)")]
    NotRunShape,
    #[error("word contains more than one run")]
    MultipleRuns,
    #[error("word fits none of the ten types")]
    Untyped,
}

/// Maximal segments of a word: an a-power or a signed t-block.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Seg {
    A(i64),
    T(i64),
}

fn segment(w: &Word) -> Result<Vec<Seg>, RewriteError> {
    let mut segs: Vec<Seg> = Vec::new();
    for &l in w.letters() {
        let (is_t, step) = (l.is_t(), if l.is_t() { l.t_step() } else { l.a_step() });
        match segs.last_mut() {
            Some(Seg::A(e)) if !is_t => {
                // a maximal a-block must be a genuine power
                if (*e > 0 && step < 0) || (*e < 0 && step > 0) {
                    return Err(RewriteError::NotRunShape);
                }
                *e += step;
            }
            Some(Seg::T(b)) if is_t && (*b > 0) == (step > 0) => *b += step,
            _ => segs.push(if is_t { Seg::T(step) } else { Seg::A(step) }),
        }
    }
    Ok(segs)
}

fn t_blocks(w: &Word) -> Vec<i64> {
    let mut blocks: Vec<i64> = Vec::new();
    for &l in w.letters() {
        let s = l.t_step();
        if s == 0 {
            continue;
        }
        match blocks.last_mut() {
            Some(b) if (*b > 0) == (s > 0) => *b += s,
            _ => blocks.push(s),
        }
    }
    blocks
}

/// Classifies a freely reduced word into one of the ten types, or `None` for
/// shapes (such as NPN with non-positive t-exponent) that fit no type.
pub fn classify_type(w: &Word) -> Option<WordType> {
    let blocks = t_blocks(w);
    let texp = w.t_exponent();
    match blocks.len() {
        0 => Some(WordType::E),
        1 => Some(if blocks[0] < 0 { WordType::N } else { WordType::P }),
        2 => {
            if blocks[0] > 0 {
                // PN shape
                Some(match texp.cmp(&0) {
                    std::cmp::Ordering::Equal => WordType::X,
                    std::cmp::Ordering::Less => WordType::Xn,
                    std::cmp::Ordering::Greater => WordType::Px,
                })
            } else {
                // NP shape
                Some(if texp <= 0 { WordType::NpLe } else { WordType::NpGt })
            }
        }
        3 => {
            if blocks[0] > 0 {
                // PNP shape
                if texp <= 0 {
                    Some(WordType::Xnp)
                } else {
                    None
                }
            } else {
                // NPN shape
                if texp > 0 {
                    Some(WordType::Npx)
                } else {
                    None
                }
            }
        }
        _ => None,
    }
}

/// Splits a one-run word t^p (run) t^q into its `RunForm`.
///
/// Canonical split: t-powers of the run's own direction belong to the run,
/// opposite-direction powers become `pre_t`/`post_t`. When the region between
/// the first and last a carries no t at all, the direction is N whenever a
/// t^-1 block is adjacent, P otherwise.
pub fn encode_run(w: &Word) -> Result<RunForm, RewriteError> {
    let segs = segment(w)?;
    let a_idx: Vec<usize> = segs
        .iter()
        .enumerate()
        .filter_map(|(i, s)| matches!(s, Seg::A(_)).then_some(i))
        .collect();

    if a_idx.is_empty() {
        let blocks: Vec<i64> = segs
            .iter()
            .map(|s| match s {
                Seg::T(b) => *b,
                Seg::A(_) => unreachable!(),
            })
            .collect();
        return match blocks.len() {
            0 => Ok(RunForm {
                pre_t: 0,
                direction: RunDirection::N,
                entries: vec![0],
                post_t: 0,
            }),
            1 => Ok(RunForm {
                pre_t: blocks[0],
                direction: RunDirection::N,
                entries: vec![0],
                post_t: 0,
            }),
            2 => Ok(RunForm {
                pre_t: blocks[0],
                direction: RunDirection::N,
                entries: vec![0],
                post_t: blocks[1],
            }),
            _ => Err(RewriteError::MultipleRuns),
        };
    }

    let mut lo = *a_idx.first().unwrap();
    let mut hi = *a_idx.last().unwrap();

    // direction from t-blocks strictly inside the a-region
    let mut inner_sign = 0i64;
    for seg in &segs[lo..=hi] {
        if let Seg::T(b) = seg {
            let s = if *b > 0 { 1 } else { -1 };
            if inner_sign == 0 {
                inner_sign = s;
            } else if inner_sign != s {
                return Err(RewriteError::MultipleRuns);
            }
        }
    }
    let dir = if inner_sign != 0 {
        if inner_sign < 0 {
            RunDirection::N
        } else {
            RunDirection::P
        }
    } else {
        // single a-block; prefer the N side when one is adjacent
        let right_neg = matches!(segs.get(hi + 1), Some(Seg::T(b)) if *b < 0);
        let left_neg = lo > 0 && matches!(segs.get(lo - 1), Some(Seg::T(b)) if *b < 0);
        if right_neg || left_neg {
            RunDirection::N
        } else {
            RunDirection::P
        }
    };
    let run_sign = match dir {
        RunDirection::N => -1i64,
        RunDirection::P => 1i64,
    };

    // absorb adjacent same-direction t-blocks into the run
    while lo > 0 && matches!(segs.get(lo - 1), Some(Seg::T(b)) if (*b > 0) == (run_sign > 0)) {
        lo -= 1;
    }
    while matches!(segs.get(hi + 1), Some(Seg::T(b)) if (*b > 0) == (run_sign > 0)) {
        hi += 1;
    }

    // at most one opposite-direction block may remain on each side
    let pre_t = match lo {
        0 => 0,
        1 => match segs[0] {
            Seg::T(b) => b,
            Seg::A(_) => unreachable!(),
        },
        _ => return Err(RewriteError::MultipleRuns),
    };
    let post_t = match segs.len() - 1 - hi {
        0 => 0,
        1 => match segs[segs.len() - 1] {
            Seg::T(b) => b,
            Seg::A(_) => unreachable!(),
        },
        _ => return Err(RewriteError::MultipleRuns),
    };

    let mut entries = Vec::new();
    let mut cur = 0i64;
    for seg in &segs[lo..=hi] {
        match seg {
            Seg::A(e) => cur = *e,
            Seg::T(b) => {
                for _ in 0..b.unsigned_abs() {
                    entries.push(cur);
                    cur = 0;
                }
            }
        }
    }
    entries.push(cur);

    Ok(RunForm {
        pre_t,
        direction: dir,
        entries,
        post_t,
    })
}

/// Inverse of `encode_run`.
pub fn decode_run(r: &RunForm) -> Word {
    let mut w = Word::t_pow(r.pre_t);
    if let Some((&first, rest)) = r.entries.split_first() {
        w = w.concat(&Word::a_pow(first));
        for &e in rest {
            w.push(r.direction.step_letter());
            w = w.concat(&Word::a_pow(e));
        }
    }
    w.concat(&Word::t_pow(r.post_t))
}

/// Entry discipline for a run inside a geodesic normal-form word, with
/// entries in written start-to-end order for an N-run (pass the reversed
/// sequence to check a P-run).
///
/// `xside` selects the stricter rules that apply when the run is preceded by
/// a t-power (types X/XN/XNP, and mirrored PX/NPX): the start entry must be
/// ±2 or ±3, and the start pattern (±2)0(∓1) is rejected because
/// t^2 a^{±2} t^-2 a^{∓1} is not geodesic.
pub fn n_run_entries_ok(entries: &[i64], xside: bool) -> bool {
    if entries.len() < 2 {
        return false;
    }
    let e0 = entries[0];
    if xside {
        if !matches!(e0.abs(), 2 | 3) {
            return false;
        }
    } else if e0.abs() > 3 {
        return false;
    }
    if entries[1..].iter().any(|e| e.abs() > 1) {
        return false;
    }
    // the start pair may be (i, sign(i)); later pairs may not both be nonzero
    if e0 != 0 && entries[1] != 0 && entries[1] != e0.signum() {
        return false;
    }
    if entries[1..].windows(2).any(|w| w[0] != 0 && w[1] != 0) {
        return false;
    }
    if xside && entries.len() >= 3 && e0.abs() == 2 && entries[1] == 0 && entries[2] == -e0.signum()
    {
        return false;
    }
    true
}

/// Admissible first-three-entry patterns of an N-run (Lemma PrefSuff,
/// expanded). `xside = true` gives the X/XN/XNP table, otherwise N/NP<=.
pub fn n_prefix_patterns(xside: bool) -> Vec<[i64; 3]> {
    let mut out = Vec::new();
    for e0 in -3i64..=3 {
        for e1 in -1i64..=1 {
            for e2 in -1i64..=1 {
                if n_run_entries_ok(&[e0, e1, e2], xside) {
                    out.push([e0, e1, e2]);
                }
            }
        }
    }
    out
}

/// A constraint violated by a run, as reported by [`run_violations`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// |entry| >= 6 can never occur in a geodesic (a^6 = t a^3 t^-1).
    EntryTooLarge { index: usize, value: i64 },
    /// |entry| >= 2 off the start of an N-run / end of a P-run.
    BigEntryOffPrivileged { index: usize, value: i64 },
    /// 1(-1) or (-1)1 cannot occur anywhere in a geodesic run.
    OppositeAdjacent { index: usize },
    /// 11 or (-1)(-1) off the first two entries of an N-run / last two of a
    /// P-run.
    SameAdjacentOffPrivileged { index: usize },
    /// The first three entries (last three for a P-run) fall outside the
    /// admissible pattern set for the word type.
    ForbiddenBoundary { triple: [i64; 3] },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn fmt_entry(v: i64) -> String {
            if v < 0 {
                format!("({v})")
            } else {
                v.to_string()
            }
        }
        match self {
            Violation::EntryTooLarge { index, value } => {
                write!(f, "entry {} at position {index} has |e| >= 6", fmt_entry(*value))
            }
            Violation::BigEntryOffPrivileged { index, value } => write!(
                f,
                "entry {} at position {index} is off the privileged position",
                fmt_entry(*value)
            ),
            Violation::OppositeAdjacent { index } => {
                write!(f, "1(-1) adjacency at position {index}")
            }
            Violation::SameAdjacentOffPrivileged { index } => {
                write!(f, "11/(-1)(-1) adjacency at position {index}")
            }
            Violation::ForbiddenBoundary { triple } => {
                let s: String = triple.iter().map(|&v| fmt_entry(v)).collect();
                write!(f, "prefix {s} forbidden")
            }
        }
    }
}

fn boundary_rules(context: WordType) -> Option<(RunDirection, bool)> {
    match context {
        WordType::X | WordType::Xn | WordType::Xnp => Some((RunDirection::N, true)),
        WordType::N | WordType::NpLe => Some((RunDirection::N, false)),
        WordType::P | WordType::NpGt => Some((RunDirection::P, false)),
        WordType::Px | WordType::Npx => Some((RunDirection::P, true)),
        WordType::E => None,
    }
}

/// Reports every geodesic-run constraint the entries violate, in the given
/// word-type context.
pub fn run_violations(r: &RunForm, context: WordType) -> Vec<Violation> {
    // orient so that index 0 is the privileged position
    let oriented: Vec<i64> = match r.direction {
        RunDirection::N => r.entries.clone(),
        RunDirection::P => r.entries.iter().rev().copied().collect(),
    };
    let n = oriented.len();
    let orig_index = |i: usize| match r.direction {
        RunDirection::N => i,
        RunDirection::P => n - 1 - i,
    };

    let mut out = Vec::new();
    for (i, &e) in oriented.iter().enumerate() {
        if e.abs() >= 6 {
            out.push(Violation::EntryTooLarge {
                index: orig_index(i),
                value: e,
            });
        }
        if e.abs() >= 2 && i != 0 {
            out.push(Violation::BigEntryOffPrivileged {
                index: orig_index(i),
                value: e,
            });
        }
    }
    for i in 0..n.saturating_sub(1) {
        let (x, y) = (oriented[i], oriented[i + 1]);
        if x.abs() == 1 && y.abs() == 1 {
            let at = orig_index(i).min(orig_index(i + 1));
            if x == -y {
                out.push(Violation::OppositeAdjacent { index: at });
            } else if i != 0 {
                out.push(Violation::SameAdjacentOffPrivileged { index: at });
            }
        }
    }
    if let Some((dir, xside)) = boundary_rules(context) {
        if dir == r.direction && n >= 3 && !n_run_entries_ok(&oriented[..3], xside) {
            out.push(Violation::ForbiddenBoundary {
                triple: [oriented[0], oriented[1], oriented[2]],
            });
        }
    }
    out
}

/// The length-preserving No11 rewrites: for N-runs, scanning right to left,
/// i11 -> (i+1)0(-1) and i(-1)(-1) -> (i-1)01; for P-runs, scanning left to
/// right, 11i -> (-1)0(i+1) and (-1)(-1)i -> 10(i-1).
///
/// On a geodesic run (one without 1(-1) or (-1)1) this removes every pair of
/// adjacent nonzero entries except at the start of an N-run / end of a P-run,
/// never increasing decoded length.
pub fn apply_no11(r: &RunForm) -> RunForm {
    let mut e = r.entries.clone();
    match r.direction {
        RunDirection::N => {
            if e.len() >= 3 {
                for p in (0..=e.len() - 3).rev() {
                    if e[p + 1] == 1 && e[p + 2] == 1 {
                        e[p] += 1;
                        e[p + 1] = 0;
                        e[p + 2] = -1;
                    } else if e[p + 1] == -1 && e[p + 2] == -1 {
                        e[p] -= 1;
                        e[p + 1] = 0;
                        e[p + 2] = 1;
                    }
                }
            }
        }
        RunDirection::P => {
            if e.len() >= 3 {
                for p in 0..=e.len() - 3 {
                    if e[p] == 1 && e[p + 1] == 1 {
                        e[p] = -1;
                        e[p + 1] = 0;
                        e[p + 2] += 1;
                    } else if e[p] == -1 && e[p + 1] == -1 {
                        e[p] = 1;
                        e[p + 1] = 0;
                        e[p + 2] -= 1;
                    }
                }
            }
        }
    }
    RunForm {
        pre_t: r.pre_t,
        direction: r.direction,
        entries: e,
        post_t: r.post_t,
    }
}

/// Commutes all a-letters of a typed word to one side so that it becomes a
/// concatenation of runs with at most one non-trivial run, preserving both
/// the element represented and the letter count.
///
/// The pushing direction per type follows the one-run lemma: words with an X
/// part push across it (X/XN into the N-run, PX into the P-run), NP words
/// with non-positive exponent push left, with positive exponent push right,
/// and XNP/NPX push both outer parts into the middle run.
pub fn push_one_run(w: &Word) -> Result<Word, RewriteError> {
    let ty = classify_type(w).ok_or(RewriteError::Untyped)?;

    // lead exponent plus one (sign, following a-exponent) pair per t-step
    let mut lead = 0i64;
    let mut steps: Vec<(i64, i64)> = Vec::new();
    for &l in w.letters() {
        if l.is_t() {
            steps.push((l.t_step(), 0));
        } else if let Some(last) = steps.last_mut() {
            last.1 += l.a_step();
        } else {
            lead += l.a_step();
        }
    }
    let n = steps.len();
    let a = |i: usize| -> i64 {
        if i == 0 {
            lead
        } else {
            steps[i - 1].1
        }
    };
    let block_len = |from: usize| -> usize {
        let sign = steps[from].0;
        steps[from..].iter().take_while(|s| s.0 == sign).count()
    };

    let mut out: Vec<i64> = Vec::new(); // a-exponent chunks, in emission order
    let mut letters: Vec<Letter> = Vec::new();
    let mut emit_a = |chunks: &mut Vec<i64>, letters: &mut Vec<Letter>| {
        for &c in chunks.iter() {
            let l = if c >= 0 { Letter::A } else { Letter::AInv };
            for _ in 0..c.unsigned_abs() {
                letters.push(l);
            }
        }
        chunks.clear();
    };

    match ty {
        WordType::E | WordType::N | WordType::P => return Ok(w.clone()),
        WordType::X | WordType::Xn => {
            // blocks +k, -l with l >= k; everything moves into the N-run
            let k = block_len(0);
            let l = n - k;
            for _ in 0..k {
                letters.push(Letter::T);
            }
            out.push(a(k));
            emit_a(&mut out, &mut letters);
            for j in 1..=l {
                letters.push(Letter::TInv);
                if j <= k {
                    out.push(a(k - j));
                }
                out.push(a(k + j));
                emit_a(&mut out, &mut letters);
            }
        }
        WordType::Px => {
            // blocks +k, -l with k > l; the N-side a's move into the P-run
            let k = block_len(0);
            let l = n - k;
            out.push(a(0));
            emit_a(&mut out, &mut letters);
            for i in 1..=k {
                letters.push(Letter::T);
                out.push(a(i));
                let j = k as i64 - i as i64;
                if j >= 1 && j <= l as i64 {
                    out.push(a(k + j as usize));
                }
                emit_a(&mut out, &mut letters);
            }
            for _ in 0..l {
                letters.push(Letter::TInv);
            }
        }
        WordType::NpLe => {
            // blocks -l, +k with k <= l; everything moves into the N-run
            let l = block_len(0);
            let k = n - l;
            out.push(a(0));
            if k == l {
                // the a-block at level 0 after the last t commutes to the front
                out.push(a(l + k));
            }
            emit_a(&mut out, &mut letters);
            for j in 1..=l {
                letters.push(Letter::TInv);
                out.push(a(j));
                let i = l as i64 - j as i64;
                if i >= 1 && i <= k as i64 {
                    out.push(a(l + i as usize));
                }
                emit_a(&mut out, &mut letters);
            }
            for _ in 0..k {
                letters.push(Letter::T);
            }
        }
        WordType::NpGt => {
            // blocks -l, +k with k > l; everything moves into the P-run
            let l = block_len(0);
            let k = n - l;
            for _ in 0..l {
                letters.push(Letter::TInv);
            }
            out.push(a(l));
            emit_a(&mut out, &mut letters);
            for i in 1..=k {
                letters.push(Letter::T);
                let j = l as i64 - i as i64;
                if j >= 0 && j <= l as i64 - 1 {
                    out.push(a(j as usize));
                }
                out.push(a(l + i));
                emit_a(&mut out, &mut letters);
            }
        }
        WordType::Xnp => {
            // blocks +k1, -l, +k2; outer parts push into the N-run
            let k1 = block_len(0);
            let l = block_len(k1);
            let k2 = n - k1 - l;
            for _ in 0..k1 {
                letters.push(Letter::T);
            }
            out.push(a(k1));
            emit_a(&mut out, &mut letters);
            for j in 1..=l {
                letters.push(Letter::TInv);
                // up1 contribution at level k1 - j
                let i = k1 as i64 - j as i64;
                if i >= 0 && i < k1 as i64 {
                    out.push(a(i as usize));
                }
                out.push(a(k1 + j));
                let i2 = l as i64 - j as i64;
                if i2 >= 1 && i2 <= k2 as i64 {
                    out.push(a(k1 + l + i2 as usize));
                }
                emit_a(&mut out, &mut letters);
            }
            for _ in 0..k2 {
                letters.push(Letter::T);
            }
        }
        WordType::Npx => {
            // blocks -k1, +l, -k2; outer parts push into the P-run
            let k1 = block_len(0);
            let l = block_len(k1);
            let k2 = n - k1 - l;
            for _ in 0..k1 {
                letters.push(Letter::TInv);
            }
            out.push(a(k1));
            emit_a(&mut out, &mut letters);
            for i in 1..=l {
                letters.push(Letter::T);
                let j = k1 as i64 - i as i64;
                if j >= 0 && j < k1 as i64 {
                    out.push(a(j as usize));
                }
                out.push(a(k1 + i));
                let j2 = l as i64 - i as i64;
                if j2 >= 1 && j2 <= k2 as i64 {
                    out.push(a(k1 + l + j2 as usize));
                }
                emit_a(&mut out, &mut letters);
            }
            for _ in 0..k2 {
                letters.push(Letter::TInv);
            }
        }
    }
    Ok(Word::new(letters))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::eval_word;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify_type(&w("a^2")), Some(WordType::E));
        assert_eq!(classify_type(&w("")), Some(WordType::E));
        assert_eq!(classify_type(&w("t^2a^2t^-2")), Some(WordType::X));
        assert_eq!(classify_type(&w("at^-1at")), Some(WordType::NpLe));
        assert_eq!(classify_type(&w("t^-1a^2")), Some(WordType::N));
        assert_eq!(classify_type(&w("ta")), Some(WordType::P));
        assert_eq!(classify_type(&w("ta^2t^-2")), Some(WordType::Xn));
        assert_eq!(classify_type(&w("t^2at^-1")), Some(WordType::Px));
        assert_eq!(classify_type(&w("t^-1at^2")), Some(WordType::NpGt));
        assert_eq!(classify_type(&w("tat^-1at")), Some(WordType::Xnp));
        assert_eq!(classify_type(&w("t^-1atat^-2")), None); // NPN, texp < 0
        assert_eq!(classify_type(&w("t^-2atat^-1")), None); // NPN, texp < 0
        assert_eq!(classify_type(&w("tat^-1at^2")), None); // PNP, texp > 0
        assert_eq!(classify_type(&w("tat^-2at")), Some(WordType::Xnp));
    }

    #[test]
    fn encode_examples() {
        // 2101(-1) from the worked run example
        let r = encode_run(&w("a^2t^-1at^-1a^0t^-1at^-1a^-1")).unwrap();
        assert_eq!(r.direction, RunDirection::N);
        assert_eq!(r.entries, vec![2, 1, 0, 1, -1]);
        assert_eq!((r.pre_t, r.post_t), (0, 0));

        // canonical split: trailing t^-1 joins the run, leading t^2 does not
        let r = encode_run(&w("t^2 a^2 t^-1 a t^-2")).unwrap();
        assert_eq!(r.pre_t, 2);
        assert_eq!(r.direction, RunDirection::N);
        assert_eq!(r.entries, vec![2, 1, 0, 0]);
        assert_eq!(r.post_t, 0);

        let r = encode_run(&w("t^3")).unwrap();
        assert_eq!((r.pre_t, r.post_t), (3, 0));
        assert_eq!(r.entries, vec![0]);

        assert_eq!(
            encode_run(&w("atat^-1a")).unwrap_err(),
            RewriteError::MultipleRuns
        );
    }

    #[test]
    fn decode_examples() {
        let r = RunForm {
            pre_t: 0,
            direction: RunDirection::N,
            entries: vec![2, 1, 0, 1, -1],
            post_t: 0,
        };
        assert_eq!(decode_run(&r), w("a^2t^-1at^-1t^-1at^-1a^-1"));

        let r = RunForm {
            pre_t: 0,
            direction: RunDirection::P,
            entries: vec![1, 0, 2],
            post_t: 0,
        };
        assert_eq!(decode_run(&r), w("atta^2"));

        let r = RunForm {
            pre_t: -2,
            direction: RunDirection::N,
            entries: vec![],
            post_t: 0,
        };
        assert_eq!(decode_run(&r), w("t^-2"));
    }

    /// encode/decode round-trip on every one-run word of length <= 10.
    #[test]
    fn encode_decode_round_trip() {
        let mut count = 0usize;
        for word in crate::group::tests::all_words(10) {
            if let Ok(r) = encode_run(&word) {
                assert_eq!(decode_run(&r), word, "round trip of {word}");
                count += 1;
            }
        }
        assert!(count > 100_000);
    }

    #[test]
    fn push_examples() {
        // already one run
        let x = w("t^2at^-1at^-1a");
        assert_eq!(push_one_run(&x).unwrap(), x);

        // the worked pushing instance
        let lhs = w("atata^2t^-1at^-1a");
        let rhs = w("t^2a^2t^-1a^2t^-1a^2");
        let pushed = push_one_run(&lhs).unwrap();
        assert_eq!(pushed, rhs);
    }

    /// Pushing preserves the element and the letter count on all typed words
    /// of length <= 10 (exhaustive over freely reduced words).
    #[test]
    fn push_preserves_eval_and_length() {
        for word in crate::group::tests::all_words(10) {
            if !word.is_freely_reduced() {
                continue;
            }
            if classify_type(&word).is_none() {
                assert!(push_one_run(&word).is_err());
                continue;
            }
            let pushed = push_one_run(&word).unwrap();
            assert_eq!(pushed.len(), word.len(), "length changed for {word}");
            assert_eq!(eval_word(&pushed), eval_word(&word), "eval changed for {word}");
        }
    }

    #[test]
    fn no11_examples() {
        let n = |entries: Vec<i64>| RunForm {
            pre_t: 0,
            direction: RunDirection::N,
            entries,
            post_t: 0,
        };
        let p = |entries: Vec<i64>| RunForm {
            pre_t: 0,
            direction: RunDirection::P,
            entries,
            post_t: 0,
        };
        assert_eq!(apply_no11(&n(vec![0, 1, 1])).entries, vec![1, 0, -1]);
        assert_eq!(apply_no11(&n(vec![2, 0, 0])).entries, vec![2, 0, 0]);
        assert_eq!(apply_no11(&p(vec![1, 1, 0])).entries, vec![-1, 0, 1]);
        // 11 at the start of an N-run is left alone
        assert_eq!(apply_no11(&n(vec![1, 1, 0])).entries, vec![1, 1, 0]);
    }

    /// apply_no11 preserves eval and never increases decoded length over the
    /// full box of runs with entries in {-3..3} and length <= 7.
    #[test]
    fn no11_exhaustive_box() {
        for dir in [RunDirection::N, RunDirection::P] {
            for len in 1..=7usize {
                let mut entries = vec![-3i64; len];
                loop {
                    let r = RunForm {
                        pre_t: 0,
                        direction: dir,
                        entries: entries.clone(),
                        post_t: 0,
                    };
                    let before = decode_run(&r);
                    let after = decode_run(&apply_no11(&r));
                    assert_eq!(eval_word(&after), eval_word(&before));
                    assert!(after.len() <= before.len());

                    // geodesic-style inputs end with no adjacent nonzeros off
                    // the privileged pair
                    let opposite = entries
                        .windows(2)
                        .any(|w| w[0].abs() == 1 && w[1].abs() == 1 && w[0] == -w[1]);
                    if !opposite {
                        let out = apply_no11(&r).entries;
                        let bad = |oriented: &[i64]| {
                            oriented[1..]
                                .windows(2)
                                .any(|w| w[0].abs() == 1 && w[1].abs() == 1 && w[0] == w[1])
                        };
                        match dir {
                            RunDirection::N => assert!(!bad(&out), "{entries:?} -> {out:?}"),
                            RunDirection::P => {
                                let rev: Vec<i64> = out.iter().rev().copied().collect();
                                assert!(!bad(&rev), "{entries:?} -> {out:?}");
                            }
                        }
                    }

                    let mut i = 0;
                    loop {
                        if i == len {
                            break;
                        }
                        entries[i] += 1;
                        if entries[i] <= 3 {
                            break;
                        }
                        entries[i] = -3;
                        i += 1;
                    }
                    if i == len {
                        break;
                    }
                }
            }
        }
    }

    /// Every rewrite pair quoted in the no-1(-1) and no-11 lemmas is
    /// eval-equal with the right side no longer than the left.
    #[test]
    fn quoted_rewrite_pairs() {
        let pairs = [
            // N-run 1(-1) / (-1)1 (length-reducing)
            ("at^-1a^-1", "t^-1a"),
            ("a^-1t^-1a", "t^-1a^-1"),
            // P-run
            ("ata^-1", "a^-1t"),
            ("a^-1ta", "at"),
            // N-run i11 / i(-1)(-1), i = 0..3 (length-preserving)
            ("t^-1at^-1a", "at^-2a^-1"),
            ("at^-1at^-1a", "a^2t^-2a^-1"),
            ("a^2t^-1at^-1a", "a^3t^-2a^-1"),
            ("t^-1a^-1t^-1a^-1", "a^-1t^-2a"),
            ("a^-1t^-1a^-1t^-1a^-1", "a^-2t^-2a"),
            // P-run 11i / (-1)(-1)i
            ("atata", "a^-1t^2a^2"),
            ("atat", "a^-1t^2a"),
            ("a^-1ta^-1t", "at^2a^-1"),
        ];
        for (lhs, rhs) in pairs {
            let (l, r) = (w(lhs), w(rhs));
            assert_eq!(eval_word(&l), eval_word(&r), "{lhs} vs {rhs}");
            assert!(r.len() <= l.len(), "{lhs} -> {rhs} grew");
        }
    }

    #[test]
    fn violation_examples() {
        let run = |entries: Vec<i64>| RunForm {
            pre_t: 0,
            direction: RunDirection::N,
            entries,
            post_t: 0,
        };
        // 20(-1) is forbidden in an X context but fine in an N context
        let v = run_violations(&run(vec![2, 0, -1]), WordType::X);
        assert!(matches!(v.as_slice(), [Violation::ForbiddenBoundary { .. }]));
        assert!(run_violations(&run(vec![2, 0, -1]), WordType::N).is_empty());
        assert!(run_violations(&run(vec![3, 0, -1]), WordType::X).is_empty());
        let v = run_violations(&run(vec![0, 1, -1, 0]), WordType::N);
        assert!(v.contains(&Violation::OppositeAdjacent { index: 1 }));
        let v = run_violations(&run(vec![0, 0, 7, 0]), WordType::N);
        assert!(v.contains(&Violation::EntryTooLarge { index: 2, value: 7 }));
        assert!(v.contains(&Violation::BigEntryOffPrivileged { index: 2, value: 7 }));
    }

    #[test]
    fn prefix_pattern_counts() {
        assert_eq!(n_prefix_patterns(true).len(), 14);
        assert_eq!(n_prefix_patterns(false).len(), 29);
    }
}
