//! The finite word tables behind the normal-form language.
//!
//! L1..L4 hold the normal-form words whose run has at most two t-letters
//! (one table per shape family); L1'..L4' hold the three-t-letter words whose
//! boundary pattern the long-run counter machines cannot express. The
//! prefix/suffix sections list the admissible first-three (last-three) entry
//! patterns of long runs.
//!
//! The tables ship as data in `data/nf_tables.txt` and every entry is checked
//! against the brute-force oracle by the test suite.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::rewriting::n_prefix_patterns;
use crate::words::Word;

use super::{assemble_n_word, generate_runs, is_normal_form, word_from_n_run};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NfTables {
    /// The seven E-type words: the empty word and a^{±1..±3}.
    pub nf_e: Vec<Word>,
    /// Short-run words of types X/XN/XNP.
    pub l1: Vec<Word>,
    /// Short-run words of types N/NP<=.
    pub l2: Vec<Word>,
    /// Short-run words of types P/NP>.
    pub l3: Vec<Word>,
    /// Short-run words of types PX/NPX.
    pub l4: Vec<Word>,
    /// Three-t-letter X/XN words with an a at the second-to-last level.
    pub l1p: Vec<Word>,
    /// Three-t-letter N/NP<= words with an a at the second-to-last level.
    pub l2p: Vec<Word>,
    /// Mirrors of `l2p` (types P/NP>).
    pub l3p: Vec<Word>,
    /// Mirrors of `l1p` (types PX/NPX).
    pub l4p: Vec<Word>,
    /// Admissible N-run prefixes for X/XN/XNP words.
    pub prefix_x: Vec<[i64; 3]>,
    /// Admissible N-run prefixes for N/NP<= words.
    pub prefix_n: Vec<[i64; 3]>,
    /// Admissible P-run suffixes for P/NP> words.
    pub suffix_p: Vec<[i64; 3]>,
    /// Admissible P-run suffixes for PX/NPX words.
    pub suffix_px: Vec<[i64; 3]>,
}

#[derive(Debug, Error)]
pub enum TablesError {
    #[error("line {0}: {1}")]
    Line(usize, String),
    #[error("unknown section header {0:?}")]
    UnknownSection(String),
}

const SECTIONS: [&str; 13] = [
    "NF_E", "L1", "L2", "L3", "L4", "L1'", "L2'", "L3'", "L4'", "PREFIX_X", "PREFIX_N",
    "SUFFIX_P", "SUFFIX_PX",
];

impl NfTables {
    /// The tables shipped with the crate.
    pub fn load_default() -> NfTables {
        NfTables::parse(include_str!("../../data/nf_tables.txt"))
            .expect("bundled nf_tables.txt is well-formed")
    }

    pub fn parse(text: &str) -> Result<NfTables, TablesError> {
        let mut words: Vec<Vec<Word>> = vec![Vec::new(); 9];
        let mut pats: Vec<Vec<[i64; 3]>> = vec![Vec::new(); 4];
        let mut section: Option<usize> = None;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(name) = line.strip_prefix('[').and_then(|s| s.strip_suffix(']')) {
                section = Some(
                    SECTIONS
                        .iter()
                        .position(|&s| s == name)
                        .ok_or_else(|| TablesError::UnknownSection(name.to_string()))?,
                );
                continue;
            }
            let idx = section
                .ok_or_else(|| TablesError::Line(lineno + 1, "entry before any section".into()))?;
            if idx < 9 {
                let word: Word = line
                    .parse()
                    .map_err(|e| TablesError::Line(lineno + 1, format!("{e}")))?;
                words[idx].push(word);
            } else {
                let nums: Result<Vec<i64>, _> =
                    line.split_whitespace().map(str::parse::<i64>).collect();
                let nums =
                    nums.map_err(|e| TablesError::Line(lineno + 1, format!("{e}")))?;
                if nums.len() != 3 {
                    return Err(TablesError::Line(
                        lineno + 1,
                        "pattern lines carry exactly three integers".into(),
                    ));
                }
                pats[idx - 9].push([nums[0], nums[1], nums[2]]);
            }
        }
        let mut it = words.into_iter();
        let mut pit = pats.into_iter();
        Ok(NfTables {
            nf_e: it.next().unwrap(),
            l1: it.next().unwrap(),
            l2: it.next().unwrap(),
            l3: it.next().unwrap(),
            l4: it.next().unwrap(),
            l1p: it.next().unwrap(),
            l2p: it.next().unwrap(),
            l3p: it.next().unwrap(),
            l4p: it.next().unwrap(),
            prefix_x: pit.next().unwrap(),
            prefix_n: pit.next().unwrap(),
            suffix_p: pit.next().unwrap(),
            suffix_px: pit.next().unwrap(),
        })
    }

    /// Derives the tables from the shape rules. The bundled data file is this
    /// expansion, and a test pins the two against each other.
    pub fn generated() -> NfTables {
        let sorted = |mut v: Vec<Word>| {
            v.sort_by(|a: &Word, b: &Word| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
            v.dedup();
            v
        };

        let nf_e = sorted((-3..=3).map(Word::a_pow).collect());

        // Short runs: at most two t-letters in the run.
        let mut l1 = Vec::new();
        let mut l4 = Vec::new();
        for entries in generate_runs(true, 12) {
            let l = entries.len() - 1;
            if l > 2 {
                continue;
            }
            let last = *entries.last().unwrap();
            for k in 1..=l as i64 {
                for m in 0..=(l as i64 - k) {
                    if m > 0 && last == 0 {
                        continue;
                    }
                    let w = assemble_n_word(k, &entries, m);
                    l1.push(w.clone());
                    if k + m < l as i64 {
                        l4.push(w.inverse());
                    }
                }
            }
        }
        let mut l2 = Vec::new();
        let mut l3 = Vec::new();
        for entries in generate_runs(false, 12) {
            let l = entries.len() - 1;
            if l > 2 {
                continue;
            }
            let last = *entries.last().unwrap();
            for k in 0..=l as i64 {
                if k > 0 && last == 0 {
                    continue;
                }
                let w = assemble_n_word(0, &entries, k);
                l2.push(w.clone());
                if k < l as i64 {
                    l3.push(w.inverse());
                }
            }
        }

        // Three-t-letter runs whose boundary carries an a at the inner level:
        // entries (e, 0, s, 0).
        let mut l1p = Vec::new();
        let mut l4p = Vec::new();
        let mut l2p = Vec::new();
        let mut l3p = Vec::new();
        for e0 in -3i64..=3 {
            for s in [1i64, -1] {
                let entries = vec![e0, 0, s, 0];
                if crate::rewriting::n_run_entries_ok(&entries, true) {
                    for k in 1..=3i64 {
                        let w = assemble_n_word(k, &entries, 0);
                        l1p.push(w.clone());
                        if k < 3 {
                            l4p.push(w.inverse());
                        }
                    }
                }
                if crate::rewriting::n_run_entries_ok(&entries, false) {
                    let w = assemble_n_word(0, &entries, 0);
                    l2p.push(w.clone());
                    l3p.push(w.inverse());
                }
            }
        }

        let rev = |pats: Vec<[i64; 3]>| -> Vec<[i64; 3]> {
            let set: BTreeSet<[i64; 3]> = pats.into_iter().map(|p| [p[2], p[1], p[0]]).collect();
            set.into_iter().collect()
        };
        let norm = |mut pats: Vec<[i64; 3]>| -> Vec<[i64; 3]> {
            pats.sort();
            pats
        };

        let tables = NfTables {
            nf_e,
            l1: sorted(l1),
            l2: sorted(l2),
            l3: sorted(l3),
            l4: sorted(l4),
            l1p: sorted(l1p),
            l2p: sorted(l2p),
            l3p: sorted(l3p),
            l4p: sorted(l4p),
            prefix_x: norm(n_prefix_patterns(true)),
            prefix_n: norm(n_prefix_patterns(false)),
            suffix_p: rev(n_prefix_patterns(false)),
            suffix_px: rev(n_prefix_patterns(true)),
        };
        debug_assert!(tables.all_words().iter().all(is_normal_form));
        tables
    }

    /// All words across the nine word sections.
    pub fn all_words(&self) -> Vec<Word> {
        let mut v = Vec::new();
        for part in [
            &self.nf_e, &self.l1, &self.l2, &self.l3, &self.l4, &self.l1p, &self.l2p, &self.l3p,
            &self.l4p,
        ] {
            v.extend(part.iter().cloned());
        }
        v
    }

    /// Renders the tables in the data-file format.
    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str("# Normal-form word tables and run boundary patterns.\n");
        out.push_str("# Words use the CLI grammar; `1` denotes the empty word.\n");
        let word_sections: [(&str, &Vec<Word>); 9] = [
            ("NF_E", &self.nf_e),
            ("L1", &self.l1),
            ("L2", &self.l2),
            ("L3", &self.l3),
            ("L4", &self.l4),
            ("L1'", &self.l1p),
            ("L2'", &self.l2p),
            ("L3'", &self.l3p),
            ("L4'", &self.l4p),
        ];
        for (name, words) in word_sections {
            out.push_str(&format!("\n[{name}]\n"));
            for w in words {
                out.push_str(&format!("{w}\n"));
            }
        }
        let pat_sections: [(&str, &Vec<[i64; 3]>); 4] = [
            ("PREFIX_X", &self.prefix_x),
            ("PREFIX_N", &self.prefix_n),
            ("SUFFIX_P", &self.suffix_p),
            ("SUFFIX_PX", &self.suffix_px),
        ];
        for (name, pats) in pat_sections {
            out.push_str(&format!("\n[{name}]\n"));
            for p in pats {
                out.push_str(&format!("{} {} {}\n", p[0], p[1], p[2]));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::eval_word;
    use crate::oracle;

    #[test]
    fn bundled_tables_match_generated() {
        assert_eq!(NfTables::load_default(), NfTables::generated());
    }

    #[test]
    fn table_shapes_and_counts() {
        let t = NfTables::generated();
        assert_eq!(t.nf_e.len(), 7);
        assert_eq!(t.prefix_x.len(), 14);
        assert_eq!(t.prefix_n.len(), 29);
        assert_eq!(t.suffix_p.len(), 29);
        assert_eq!(t.suffix_px.len(), 14);
        assert_eq!(t.l1p.len(), 18); // k = 1..3 over six boundary patterns
        assert_eq!(t.l2p.len(), 14);
        assert_eq!(t.l3p.len(), 14);
        assert_eq!(t.l4p.len(), 12); // k = 3 would have t-exponent 0
        assert_eq!(t.l4.len(), 14);
    }

    /// Every table word is geodesic (length equals BFS distance) and in
    /// normal form.
    #[test]
    fn table_words_are_geodesic_normal_forms() {
        let t = NfTables::generated();
        let words = t.all_words();
        let radius = words.iter().map(Word::len).max().unwrap() as u32;
        let ball = oracle::bfs_ball(radius).unwrap();
        for w in &words {
            assert!(is_normal_form(w), "{w} not in normal form");
            assert_eq!(
                ball.distance(&eval_word(w)),
                Some(w.len() as u32),
                "{w} is not geodesic"
            );
        }
    }

    #[test]
    fn render_parse_round_trip() {
        let t = NfTables::generated();
        let parsed = NfTables::parse(&t.render()).unwrap();
        assert_eq!(parsed, t);
    }
}
