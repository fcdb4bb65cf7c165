//! Side lexicons: phonetic syllables, part-of-speech tags and topical-domain
//! tags, each loaded from a two-column TSV file.

use std::collections::{BTreeSet, HashMap};
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Syllable {
    pub base: String,
    /// 1–5 for toned syllables, 0 when the source gave no tone digit.
    pub tone: u8,
}

impl Syllable {
    /// Parses `shu4` / `shu`. Returns `None` for an empty base or a tone
    /// digit above 5.
    pub fn parse(token: &str) -> Option<Syllable> {
        let (base, tone) = match token.char_indices().last() {
            Some((i, c)) if c.is_ascii_digit() => (&token[..i], c.to_digit(10)? as u8),
            _ => (token, 0),
        };
        if base.is_empty() || tone > 5 {
            return None;
        }
        Some(Syllable {
            base: base.to_string(),
            tone,
        })
    }

    pub fn key(&self, mode: ToneMode) -> String {
        match mode {
            ToneMode::Sensitive => format!("{}{}", self.base, self.tone),
            ToneMode::Insensitive => self.base.clone(),
        }
    }
}

/// Whether homophone matching compares tones.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ToneMode {
    Sensitive,
    #[default]
    Insensitive,
}

fn for_each_tsv_line<F>(path: &Path, mut f: F) -> Result<()>
where
    F: FnMut(usize, &str, &str) -> Result<()>,
{
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    for (i, line) in BufReader::new(file).lines().enumerate() {
        let line = line.map_err(|e| Error::io(path, e))?;
        let line = line.trim_end_matches('\r');
        if line.trim().is_empty() {
            continue;
        }
        let Some((word, rest)) = line.split_once('\t') else {
            return Err(Error::format(path, i + 1, "expected `word<TAB>value`"));
        };
        let (word, rest) = (word.trim(), rest.trim());
        if word.is_empty() || rest.is_empty() {
            return Err(Error::format(path, i + 1, "empty word or value"));
        }
        f(i + 1, word, rest)?;
    }
    Ok(())
}

/// Word → syllables, plus reverse indexes for both tone modes.
#[derive(Debug, Clone, Default)]
pub struct PhoneticLexicon {
    entries: HashMap<String, Vec<Syllable>>,
    by_toned: HashMap<String, BTreeSet<String>>,
    by_base: HashMap<String, BTreeSet<String>>,
}

impl PhoneticLexicon {
    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let mut entries = Vec::new();
        for_each_tsv_line(path, |lineno, word, rest| {
            let syllables = rest
                .split_whitespace()
                .map(|tok| {
                    Syllable::parse(tok)
                        .ok_or_else(|| Error::format(path, lineno, format!("bad syllable `{tok}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            entries.push((word.to_string(), syllables));
            Ok(())
        })?;
        Ok(Self::from_entries(entries))
    }

    /// Later entries for the same word replace earlier ones. Entries with no
    /// syllables are ignored.
    pub fn from_entries<I>(entries: I) -> Self
    where
        I: IntoIterator<Item = (String, Vec<Syllable>)>,
    {
        let mut lex = PhoneticLexicon::default();
        for (word, syllables) in entries {
            if syllables.is_empty() {
                continue;
            }
            if lex.entries.insert(word.clone(), syllables).is_some() {
                log::warn!("phonetic lexicon: duplicate entry for `{word}`, keeping the last");
            }
        }
        for (word, syllables) in &lex.entries {
            for s in syllables {
                lex.by_toned
                    .entry(s.key(ToneMode::Sensitive))
                    .or_default()
                    .insert(word.clone());
                lex.by_base
                    .entry(s.key(ToneMode::Insensitive))
                    .or_default()
                    .insert(word.clone());
            }
        }
        lex
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains(&self, word: &str) -> bool {
        self.entries.contains_key(word)
    }

    pub fn syllables(&self, word: &str) -> Option<&[Syllable]> {
        self.entries.get(word).map(Vec::as_slice)
    }

    /// Distinct syllable keys of `word` under `mode`; empty if unknown.
    pub fn keys(&self, word: &str, mode: ToneMode) -> BTreeSet<String> {
        self.syllables(word)
            .map(|ss| ss.iter().map(|s| s.key(mode)).collect())
            .unwrap_or_default()
    }

    /// Words containing the syllable `key` (as produced by [`Syllable::key`]).
    pub fn words_with(&self, key: &str, mode: ToneMode) -> Option<&BTreeSet<String>> {
        match mode {
            ToneMode::Sensitive => self.by_toned.get(key),
            ToneMode::Insensitive => self.by_base.get(key),
        }
    }

    pub fn shares_syllable(&self, a: &str, b: &str, mode: ToneMode) -> bool {
        let ka = self.keys(a, mode);
        !ka.is_empty() && self.keys(b, mode).iter().any(|k| ka.contains(k))
    }
}

/// Part-of-speech and topical-domain tags. Lookups on untagged words return
/// `None`.
#[derive(Debug, Clone, Default)]
pub struct TagLexicon {
    pos: HashMap<String, String>,
    domain: HashMap<String, String>,
}

impl TagLexicon {
    pub fn load(pos_path: impl AsRef<Path>, domain_path: impl AsRef<Path>) -> Result<Self> {
        let mut lex = TagLexicon::default();
        for (path, map, kind) in [
            (pos_path.as_ref(), &mut lex.pos, "POS"),
            (domain_path.as_ref(), &mut lex.domain, "domain"),
        ] {
            for_each_tsv_line(path, |lineno, word, tag| {
                if let Some(old) = map.insert(word.to_string(), tag.to_string()) {
                    if old != tag {
                        log::warn!(
                            "{}:{lineno}: {kind} tag for `{word}` changed from `{old}` to `{tag}`",
                            path.display()
                        );
                    }
                }
                Ok(())
            })?;
        }
        Ok(lex)
    }

    pub fn from_maps(pos: HashMap<String, String>, domain: HashMap<String, String>) -> Self {
        TagLexicon { pos, domain }
    }

    pub fn pos(&self, word: &str) -> Option<&str> {
        self.pos.get(word).map(String::as_str)
    }

    pub fn domain(&self, word: &str) -> Option<&str> {
        self.domain.get(word).map(String::as_str)
    }

    pub fn pos_count(&self) -> usize {
        self.pos.len()
    }

    pub fn domain_count(&self) -> usize {
        self.domain.len()
    }
}
