//! Lexical (shared substring) and phonetic (shared syllable) expansion.
//!
//! All string measurements are in Unicode scalar values.

use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::lexicon::{PhoneticLexicon, ToneMode};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommonSubstring {
    pub text: String,
    /// Length in characters.
    pub len: usize,
}

/// Longest contiguous common substring of `a` and `b`.
///
/// Among several of maximal length, the one starting earliest in `a` wins,
/// then the one starting earliest in `b`.
pub fn longest_common_substring(a: &str, b: &str) -> CommonSubstring {
    let a: Vec<char> = a.chars().collect();
    let b: Vec<char> = b.chars().collect();
    // run[j + 1] = length of the common run ending at a[i], b[j]
    let mut prev = vec![0usize; b.len() + 1];
    let mut cur = vec![0usize; b.len() + 1];
    let (mut best_len, mut best_end) = (0usize, 0usize);
    for (i, &ca) in a.iter().enumerate() {
        for (j, &cb) in b.iter().enumerate() {
            cur[j + 1] = if ca == cb { prev[j] + 1 } else { 0 };
            if cur[j + 1] > best_len {
                best_len = cur[j + 1];
                best_end = i + 1;
            }
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    CommonSubstring {
        text: a[best_end - best_len..best_end].iter().collect(),
        len: best_len,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexicalMatch {
    pub word: String,
    pub shared: String,
    pub shared_len: usize,
}

/// Vocabulary words sharing a substring of at least `min_shared` characters
/// with `seed`, longest first, then by code point.
pub fn lexical_candidates(
    vocab: &[String],
    seed: &str,
    min_shared: usize,
    k: usize,
) -> Vec<LexicalMatch> {
    lexical_candidates_with(vocab, seed, min_shared, k, Execution::default())
}

pub fn lexical_candidates_with(
    vocab: &[String],
    seed: &str,
    min_shared: usize,
    k: usize,
    exec: Execution,
) -> Vec<LexicalMatch> {
    let min_shared = min_shared.max(1);
    if k == 0 || seed.chars().count() < min_shared {
        return Vec::new();
    }
    let seed_chars: HashSet<char> = seed.chars().collect();
    let mut hits = exec.filter_map(vocab, |word| {
        if word == seed || !word.chars().any(|c| seed_chars.contains(&c)) {
            return None;
        }
        let lcs = longest_common_substring(seed, word);
        (lcs.len >= min_shared).then(|| LexicalMatch {
            word: word.clone(),
            shared: lcs.text,
            shared_len: lcs.len,
        })
    });
    hits.sort_by(|a, b| {
        b.shared_len
            .cmp(&a.shared_len)
            .then_with(|| a.word.cmp(&b.word))
    });
    hits.dedup_by(|a, b| a.word == b.word);
    hits.truncate(k);
    hits
}

/// How much of the pronunciation must coincide for two words to count as
/// homophones.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HomophoneMode {
    /// At least one syllable in common.
    #[default]
    AnySyllable,
    /// Identical syllable sequence.
    WholeWord,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomophoneMatch {
    pub word: String,
    /// Syllable keys shared with the seed, sorted.
    pub shared: Vec<String>,
}

/// Words sharing pronunciation with `seed`, most shared syllables first, then
/// by code point.
pub fn homophone_candidates(
    lexicon: &PhoneticLexicon,
    seed: &str,
    tone_mode: ToneMode,
    mode: HomophoneMode,
    k: usize,
) -> Result<Vec<HomophoneMatch>> {
    let syllables = lexicon
        .syllables(seed)
        .ok_or_else(|| Error::OutOfLexicon(seed.to_string()))?;
    let seed_keys = lexicon.keys(seed, tone_mode);
    let seed_seq: Vec<String> = syllables.iter().map(|s| s.key(tone_mode)).collect();

    let mut shared: BTreeMap<&str, Vec<String>> = BTreeMap::new();
    for key in &seed_keys {
        if let Some(words) = lexicon.words_with(key, tone_mode) {
            for w in words {
                if w != seed {
                    shared.entry(w.as_str()).or_default().push(key.clone());
                }
            }
        }
    }
    let mut hits: Vec<HomophoneMatch> = shared
        .into_iter()
        .filter(|(w, _)| match mode {
            HomophoneMode::AnySyllable => true,
            HomophoneMode::WholeWord => lexicon.syllables(w).is_some_and(|ss| {
                ss.iter()
                    .map(|s| s.key(tone_mode))
                    .eq(seed_seq.iter().cloned())
            }),
        })
        .map(|(w, keys)| HomophoneMatch {
            word: w.to_string(),
            shared: keys,
        })
        .collect();
    // BTreeMap iteration already gives code-point order; the sort is stable.
    hits.sort_by_key(|h| std::cmp::Reverse(h.shared.len()));
    hits.truncate(k);
    Ok(hits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexicon::Syllable;

    fn lcs(a: &str, b: &str) -> (String, usize) {
        let r = longest_common_substring(a, b);
        (r.text, r.len)
    }

    #[test]
    fn lcs_examples() {
        assert_eq!(lcs("医院", "住院"), ("院".into(), 1));
        assert_eq!(lcs("abc", "abc"), ("abc".into(), 3));
        assert_eq!(lcs("abcdef", "zabcy"), ("abc".into(), 3));
        assert_eq!(lcs("", "abc"), ("".into(), 0));
        assert_eq!(lcs("abc", "xyz"), ("".into(), 0));
    }

    #[test]
    fn lcs_tie_prefers_earliest_in_first_argument() {
        // "ab" and "cd" both length 2; "ab" starts first in a.
        assert_eq!(lcs("abxcd", "cdyab"), ("ab".into(), 2));
        assert_eq!(lcs("cdxab", "abycd"), ("cd".into(), 2));
    }

    fn v(words: &[&str]) -> Vec<String> {
        words.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn lexical_examples() {
        let vocab = v(&["住院", "医生", "公园"]);
        let hits = lexical_candidates(&vocab, "医院", 1, 10);
        let words: Vec<_> = hits.iter().map(|m| m.word.as_str()).collect();
        // both share one character; code-point order: 住 (U+4F4F) < 医 (U+533B)
        assert_eq!(words, ["住院", "医生"]);
        assert_eq!(hits[0].shared, "院");
        assert_eq!(hits[1].shared, "医");

        assert!(lexical_candidates(&vocab, "医院", 3, 10).is_empty());

        let vocab = v(&["医院", "住院"]);
        let hits = lexical_candidates(&vocab, "医院", 1, 10);
        assert!(hits.iter().all(|m| m.word != "医院"));
    }

    #[test]
    fn lexical_ranks_longer_matches_first() {
        let vocab = v(&["a", "abc", "ab", "zzz"]);
        let hits = lexical_candidates(&vocab, "abcd", 1, 2);
        let words: Vec<_> = hits.iter().map(|m| m.word.as_str()).collect();
        assert_eq!(words, ["abc", "ab"]);
    }

    fn shu() -> PhoneticLexicon {
        let s = |b: &str, t| Syllable {
            base: b.into(),
            tone: t,
        };
        PhoneticLexicon::from_entries([
            ("树".to_string(), vec![s("shu", 4)]),
            ("书".to_string(), vec![s("shu", 1)]),
            ("数".to_string(), vec![s("shu", 4)]),
        ])
    }

    fn words(hits: &[HomophoneMatch]) -> Vec<&str> {
        hits.iter().map(|h| h.word.as_str()).collect()
    }

    #[test]
    fn homophone_examples() {
        let lex = shu();
        let sensitive = homophone_candidates(
            &lex,
            "树",
            ToneMode::Sensitive,
            HomophoneMode::AnySyllable,
            10,
        )
        .unwrap();
        assert_eq!(words(&sensitive), ["数"]);
        let loose = homophone_candidates(
            &lex,
            "树",
            ToneMode::Insensitive,
            HomophoneMode::AnySyllable,
            10,
        )
        .unwrap();
        // 书 U+4E66 precedes 数 U+6570
        assert_eq!(words(&loose), ["书", "数"]);
        assert!(matches!(
            homophone_candidates(
                &lex,
                "天",
                ToneMode::Insensitive,
                HomophoneMode::AnySyllable,
                10
            ),
            Err(Error::OutOfLexicon(_))
        ));
    }

    #[test]
    fn whole_word_mode_is_stricter() {
        let s = |b: &str, t| Syllable {
            base: b.into(),
            tone: t,
        };
        let lex = PhoneticLexicon::from_entries([
            ("公式".to_string(), vec![s("gong", 1), s("shi", 4)]),
            ("攻势".to_string(), vec![s("gong", 1), s("shi", 4)]),
            ("公园".to_string(), vec![s("gong", 1), s("yuan", 2)]),
        ]);
        let any = homophone_candidates(
            &lex,
            "公式",
            ToneMode::Sensitive,
            HomophoneMode::AnySyllable,
            10,
        )
        .unwrap();
        assert_eq!(words(&any), ["攻势", "公园"]);
        let whole = homophone_candidates(
            &lex,
            "公式",
            ToneMode::Sensitive,
            HomophoneMode::WholeWord,
            10,
        )
        .unwrap();
        assert_eq!(words(&whole), ["攻势"]);
    }
}
