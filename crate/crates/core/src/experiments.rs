//! Word-combinatorics experiments: square-free Thue-Morse words, the
//! swapping-lemma variant generator, t-encodings, and the mesa construction
//! that witnesses why the full geodesic language cannot be counter.

use serde::Serialize;
use thiserror::Error;

use crate::normal_form::{is_normal_form, normalize, NfError};
use crate::rewriting::push_one_run;
use crate::words::{Letter, Word};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExperimentsError {
    #[error("iteration count {0} exceeds the guard ({MAX_TM_ITER})")]
    IterationGuard(u32),
    #[error("word contains a^-1, which t-encodings cannot express")]
    NegativeA,
    #[error("t-letters between a's do not form a single power")]
    MixedTBlock,
    #[error("word is not of the shape (t^s a^[0|1])* t^s: {0}")]
    MesaShape(String),
    #[error(transparent)]
    Nf(#[from] NfError),
}

pub const MAX_TM_ITER: u32 = 20;

/// f^i(a) for the square-free morphism f(a) = abc, f(b) = ac, f(c) = b.
pub fn thue_morse(i: u32) -> Result<String, ExperimentsError> {
    if i > MAX_TM_ITER {
        return Err(ExperimentsError::IterationGuard(i));
    }
    let mut s = String::from("a");
    for _ in 0..i {
        let mut next = String::with_capacity(s.len() * 3);
        for c in s.chars() {
            next.push_str(match c {
                'a' => "abc",
                'b' => "ac",
                'c' => "b",
                _ => unreachable!(),
            });
        }
        s = next;
    }
    Ok(s)
}

/// True iff some nonempty factor ww occurs contiguously.
pub fn has_square(s: &str) -> bool {
    let b = s.as_bytes();
    for len in 1..=b.len() / 2 {
        for start in 0..=b.len() - 2 * len {
            if b[start..start + len] == b[start + len..start + 2 * len] {
                return true;
            }
        }
    }
    false
}

/// All words uyxz over decompositions w = uxyz with |uxy| <= 2s+1 and
/// |x|, |y| > 0 (the swapping-lemma moves with swapping length `s`).
pub fn swap_variants<T: Clone + Ord>(w: &[T], s: usize) -> Vec<Vec<T>> {
    let window = (2 * s + 1).min(w.len());
    let mut out = std::collections::BTreeSet::new();
    for u in 0..window {
        for x_end in u + 1..window {
            for y_end in x_end + 1..=window {
                let mut v = w[..u].to_vec();
                v.extend_from_slice(&w[x_end..y_end]);
                v.extend_from_slice(&w[u..x_end]);
                v.extend_from_slice(&w[y_end..]);
                out.insert(v);
            }
        }
    }
    out.into_iter().collect()
}

/// The t-encoding n_1 n_2 ... n_k of w = t^{n_1} a t^{n_2} ... a t^{n_k}.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TEncoding(pub Vec<i64>);

/// Encodes an a^-1-free word by the t-powers between consecutive a's; a
/// leading or trailing a contributes a 0 entry.
pub fn t_encode(w: &Word) -> Result<TEncoding, ExperimentsError> {
    let mut values = Vec::new();
    let mut cur = 0i64;
    let mut cur_set = false;
    for &l in w.letters() {
        match l {
            Letter::AInv => return Err(ExperimentsError::NegativeA),
            Letter::A => {
                values.push(cur);
                cur = 0;
                cur_set = false;
            }
            Letter::T | Letter::TInv => {
                let step = l.t_step();
                if cur_set && (cur > 0) != (step > 0) {
                    return Err(ExperimentsError::MixedTBlock);
                }
                cur += step;
                cur_set = true;
            }
        }
    }
    values.push(cur);
    Ok(TEncoding(values))
}

/// Inverse of [`t_encode`].
pub fn t_decode(e: &TEncoding) -> Word {
    let mut w = Word::empty();
    for (i, &n) in e.0.iter().enumerate() {
        if i > 0 {
            w.push(Letter::A);
        }
        w = w.concat(&Word::t_pow(n));
    }
    w
}

/// Parses u = t^s a^{e_1} t^s ... a^{e_{c-1}} t^s with e_i in {0, 1},
/// returning (c, e).
fn parse_mesa_p_word(u: &Word, s: i64) -> Result<(usize, Vec<u8>), ExperimentsError> {
    if s < 1 {
        return Err(ExperimentsError::MesaShape("spacing must be positive".into()));
    }
    let ls = u.letters();
    let mut i = 0usize;
    let mut blocks = 0usize;
    let mut eps: Vec<u8> = Vec::new();
    loop {
        for _ in 0..s {
            if i >= ls.len() || ls[i] != Letter::T {
                return Err(ExperimentsError::MesaShape(format!(
                    "expected t^{s} block at letter {i}"
                )));
            }
            i += 1;
        }
        blocks += 1;
        if i == ls.len() {
            break;
        }
        match ls[i] {
            Letter::A => {
                eps.push(1);
                i += 1;
            }
            Letter::T => eps.push(0),
            _ => {
                return Err(ExperimentsError::MesaShape(format!(
                    "unexpected letter at {i}"
                )))
            }
        }
        if i == ls.len() {
            return Err(ExperimentsError::MesaShape("word ends with an a".into()));
        }
    }
    if blocks < 2 {
        return Err(ExperimentsError::MesaShape(
            "need at least two t^s blocks".into(),
        ));
    }
    if eps.len() != blocks - 1 {
        return Err(ExperimentsError::MesaShape("block bookkeeping broke".into()));
    }
    Ok((blocks, eps))
}

/// The "reverse" v of a mesa P word u: reverse the block structure, swap
/// a^0 with a^1, and negate every t-power. The t-exponent of v is the
/// negative of u's.
pub fn build_reverse_v(u: &Word, s: i64) -> Result<Word, ExperimentsError> {
    let (_, eps) = parse_mesa_p_word(u, s)?;
    let mut v = Word::t_pow(-s);
    for &e in eps.iter().rev() {
        v = v.concat(&Word::a_pow(i64::from(1 - e)));
        v = v.concat(&Word::t_pow(-s));
    }
    Ok(v)
}

/// w = u a^2 v: an X word with exactly one a at every s-th level, whose
/// pushed form t^{sc} a^2 t^-s (a t^-s)^{c-1} is in normal form.
pub fn mesa_word(u: &Word, s: i64) -> Result<Word, ExperimentsError> {
    let v = build_reverse_v(u, s)?;
    Ok(u.concat(&Word::a_pow(2)).concat(&v))
}

/// Report of the swapped-mesa experiment.
#[derive(Debug, Clone, Serialize)]
pub struct SwapReport {
    /// Whether the mesa word itself is geodesic (it must be).
    pub geodesic_base: bool,
    /// Swap variants of the t-encoding within the window.
    pub variants_total: usize,
    /// Variants differing from the original encoding.
    pub variants_differing: usize,
    /// Differing variants whose decoded word is still geodesic; the paper's
    /// argument predicts this list stays empty.
    pub variants_geodesic: Vec<String>,
}

/// Builds the mesa word from the i-th Thue-Morse word over the t-encoding
/// alphabet {s, 2s, 3s} and applies every swapping-lemma move with swapping
/// length `swap_len` to its t-encoding, checking that the base word is
/// geodesic and every differing variant is not.
pub fn swap_experiment(i: u32, s: i64, swap_len: usize) -> Result<SwapReport, ExperimentsError> {
    let tm = thue_morse(i)?;
    let enc_u: Vec<i64> = tm
        .chars()
        .map(|c| match c {
            'a' => s,
            'b' => 2 * s,
            'c' => 3 * s,
            _ => unreachable!(),
        })
        .collect();
    let u = t_decode(&TEncoding(enc_u));
    let w = mesa_word(&u, s)?;
    let geodesic_base = normalize(&w)?.len() == w.len();

    let enc_w = t_encode(&w)?;
    let variants = swap_variants(&enc_w.0, swap_len);
    let variants_total = variants.len();
    let mut variants_differing = 0usize;
    let mut variants_geodesic = Vec::new();
    for var in &variants {
        if var == &enc_w.0 {
            continue;
        }
        variants_differing += 1;
        let word = t_decode(&TEncoding(var.clone()));
        if normalize(&word)?.len() == word.len() {
            variants_geodesic.push(
                var.iter()
                    .map(i64::to_string)
                    .collect::<Vec<_>>()
                    .join(","),
            );
        }
    }
    Ok(SwapReport {
        geodesic_base,
        variants_total,
        variants_differing,
        variants_geodesic,
    })
}

/// Report of the palindrome swap demonstration.
#[derive(Debug, Clone, Serialize)]
pub struct PalindromeReport {
    pub accepted_base: bool,
    pub variants_total: usize,
    pub variants_differing: usize,
    /// Differing variants the w w^R machine still accepts; expected empty.
    pub variants_accepted: Vec<String>,
}

/// Builds w w^R from the i-th Thue-Morse word, checks the zoo PDA accepts
/// it, and verifies every differing swap variant inside the first half
/// leaves the language.
pub fn palindrome_swap_demo(i: u32) -> Result<PalindromeReport, ExperimentsError> {
    let w = thue_morse(i)?;
    let chars: Vec<char> = w.chars().chain(w.chars().rev()).collect();
    let zoo = crate::automata::machines::zoo();
    let crate::automata::machines::ZooMachine::Pda(pda) = &zoo["pda_ww_reverse"] else {
        unreachable!("pda_ww_reverse is a PDA");
    };
    let accepts = |cs: &[char]| pda.accepts(cs).expect("alphabet is a,b,c");
    let accepted_base = accepts(&chars);
    // keep |uxy| inside the first half
    let swap_len = (w.len().saturating_sub(1)) / 2;
    let variants = swap_variants(&chars, swap_len);
    let variants_total = variants.len();
    let mut variants_differing = 0usize;
    let mut variants_accepted = Vec::new();
    for var in &variants {
        if var == &chars {
            continue;
        }
        variants_differing += 1;
        if accepts(var) {
            variants_accepted.push(var.iter().collect::<String>());
        }
    }
    Ok(PalindromeReport {
        accepted_base,
        variants_total,
        variants_differing,
        variants_accepted,
    })
}
