//! The shared analysis record and its rule-trace replay.
//!
//! Every analyse/generate path produces an [`Analysis`]: the lemma, the
//! feature tag string, an ordered morph segmentation, and the sandhi rules
//! that fired between the morphs. [`replay`] folds the segmentation back
//! through [`crate::sandhi::apply_rule`]; equality with the original token
//! is the system-wide soundness law.

use thiserror::Error;

use crate::lexicon::{Pos, Rationality};
use crate::sandhi::{self, SandhiError};
use crate::word::Word;

/// One underlying morph with its gloss tag.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct Morph {
    pub surface: String,
    pub tag: String,
}

/// The feature bundle behind an analysis, by part of speech.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Features {
    Noun(crate::noun::NounFeatures),
    Verb(crate::verb::VerbFeatures),
    /// A verb chain: (lemma, unit features), main verb first.
    VerbChain(Vec<(String, crate::verb::VerbFeatures)>),
    /// Adjectives, adverbs, particles and their derivations.
    Word(crate::adjadv::WordFeatures),
    /// Single-token noun+verb composites (தடியைக்கொண்டு).
    Compound(Vec<Analysis>),
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct Analysis {
    pub lemma: String,
    pub pos: Pos,
    /// Dot-separated feature tags; '+' joins chain links.
    pub tag: String,
    pub features: Features,
    /// Underlying morphs, left to right.
    pub segmentation: Vec<Morph>,
    /// Junction rules, one per adjacent morph pair.
    pub rules_fired: Vec<String>,
    /// The exact token this analysis accounts for.
    pub surface: String,
    /// Carried on every analysis so agreement can enforce object marking.
    pub rationality: Option<Rationality>,
}

impl Analysis {
    pub fn surface_word(&self) -> Word {
        Word::parse(&self.surface).expect("analysis surface is valid text")
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ReplayError {
    #[error("segmentation has {morphs} morphs but {rules} junction rules")]
    ArityMismatch { morphs: usize, rules: usize },
    #[error("morph {index} is not valid text: {source}")]
    BadMorph { index: usize, source: crate::script::ScriptError },
    #[error("junction {index}: {source}")]
    Junction { index: usize, source: SandhiError },
}

/// Rebuild the surface form from segmentation plus rule ids alone.
pub fn replay(analysis: &Analysis) -> Result<String, ReplayError> {
    let morphs = &analysis.segmentation;
    if morphs.is_empty() {
        return Ok(String::new());
    }
    if analysis.rules_fired.len() != morphs.len() - 1 {
        return Err(ReplayError::ArityMismatch {
            morphs: morphs.len(),
            rules: analysis.rules_fired.len(),
        });
    }
    let mut acc = Word::parse(&morphs[0].surface)
        .map_err(|source| ReplayError::BadMorph { index: 0, source })?;
    for (i, morph) in morphs.iter().enumerate().skip(1) {
        let right = Word::parse(&morph.surface)
            .map_err(|source| ReplayError::BadMorph { index: i, source })?;
        acc = sandhi::apply_rule(&analysis.rules_fired[i - 1], &acc, &right)
            .map_err(|source| ReplayError::Junction { index: i - 1, source })?;
    }
    Ok(acc.text())
}

/// Incremental builder used by every generation path: accumulates the
/// surface word, the morph list, and the fired rules together so they can
/// never drift apart.
#[derive(Debug, Clone)]
pub struct Chain {
    word: Word,
    morphs: Vec<Morph>,
    rules: Vec<String>,
}

impl Chain {
    pub fn start(word: Word, tag: &str) -> Self {
        Chain {
            morphs: vec![Morph { surface: word.text(), tag: tag.to_string() }],
            rules: Vec::new(),
            word,
        }
    }

    /// Append a morph via a generic sandhi junction.
    pub fn join(&mut self, suffix: &Word, tag: &str, opts: sandhi::JoinOpts) {
        let joined = sandhi::join(&self.word, suffix, opts);
        self.push_joined(joined, suffix, tag);
    }

    /// Append the plural கள் with the class-conditioned junction.
    pub fn join_plural(&mut self, class: Option<u8>) {
        let kal = Word::parse("கள்").expect("கள்");
        let joined = sandhi::join_plural(&self.word, class);
        self.push_joined(joined, &kal, "pl");
    }

    /// Append a morph with an explicit, already-decided rule.
    pub fn apply(&mut self, rule: sandhi::RuleId, suffix: &Word, tag: &str) {
        let word = sandhi::apply_rule(rule, &self.word, suffix)
            .expect("generation applies only applicable rules");
        self.word = word;
        self.morphs.push(Morph { surface: suffix.text(), tag: tag.to_string() });
        self.rules.push(rule.to_string());
    }

    fn push_joined(&mut self, joined: sandhi::Joined, suffix: &Word, tag: &str) {
        self.word = joined.word;
        self.morphs.push(Morph { surface: suffix.text(), tag: tag.to_string() });
        self.rules.push(joined.rule.to_string());
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn finish(self) -> (Word, Vec<Morph>, Vec<String>) {
        (self.word, self.morphs, self.rules)
    }
}
