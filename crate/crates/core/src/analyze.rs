//! Whole-token analysis and generation across all parts of speech.

use thiserror::Error;

use crate::adjadv::{self, Derivation, WordFeatures};
use crate::clitic;
use crate::lexicon::{Lexicon, Pos};
use crate::noun;
use crate::sandhi::{self, JoinOpts};
use crate::tags::{self, ParsedTag, TagError};
use crate::trace::{Analysis, Features};
use crate::verb::{self, VerbIndex};
use crate::word::Word;

/// Lexicon plus the precomputed stem indices; build once, analyse many.
pub struct Analyzer<'a> {
    pub lexicon: &'a Lexicon,
    verb_index: VerbIndex,
    noun_index: noun::NounIndex,
    pub enable_ee_clitic: bool,
}

impl<'a> Analyzer<'a> {
    pub fn new(lexicon: &'a Lexicon) -> Self {
        Analyzer {
            lexicon,
            verb_index: VerbIndex::build(lexicon),
            noun_index: noun::NounIndex::build(lexicon),
            enable_ee_clitic: false,
        }
    }

    /// Every analysis of one token, across all parts of speech, sorted by
    /// tag string for deterministic output.
    pub fn analyze(&self, token: &Word) -> Vec<Analysis> {
        let mut out = Vec::new();
        out.extend(noun::analyze_with_index(
            token,
            self.lexicon,
            &self.noun_index,
            self.enable_ee_clitic,
        ));
        out.extend(verb::analyze_with_index(
            token,
            self.lexicon,
            &self.verb_index,
            self.enable_ee_clitic,
        ));
        self.analyze_fixed_words(token, &mut out);
        self.analyze_derived(token, &mut out);
        self.analyze_noun_verb(token, &mut out);
        out.sort_by(|a, b| a.tag.cmp(&b.tag).then_with(|| a.lemma.cmp(&b.lemma)));
        out.dedup_by(|a, b| a.tag == b.tag && a.lemma == b.lemma);
        out
    }

    /// Adjectives, adverbs, particles, and pronouns listed as fixed forms,
    /// with optional clitic and augment.
    fn analyze_fixed_words(&self, token: &Word, out: &mut Vec<Analysis>) {
        for split in clitic::strip(token, self.enable_ee_clitic) {
            let mut bases = vec![(split.stem.clone(), None)];
            if split.clitic.is_none() {
                if let Some(aug) = sandhi::final_augment(&split.stem) {
                    bases.push((split.stem.slice(0, split.stem.len() - 1), Some(aug)));
                }
            }
            for (base, augment) in bases {
                for entry in self.lexicon.lookup(&base.text()) {
                    if !matches!(entry.pos, Pos::Adjective | Pos::Adverb | Pos::Particle) {
                        continue;
                    }
                    let features = WordFeatures {
                        derivation: None,
                        reduplicated: false,
                        augment,
                        clitic: split.clitic,
                    };
                    let candidate = render_word(entry, &features);
                    if let Ok(analysis) = candidate {
                        if analysis.surface == token.text()
                            && !out.iter().any(|a| a.tag == analysis.tag && a.lemma == analysis.lemma)
                        {
                            out.push(analysis);
                        }
                    }
                }
            }
        }
    }

    /// Noun-derived adjectives and adverbs (உயரமான, வேகமாக), the benefactive
    /// excluded here since the noun layer owns it.
    fn analyze_derived(&self, token: &Word, out: &mut Vec<Analysis>) {
        for split in clitic::strip(token, self.enable_ee_clitic) {
            let mut bases = vec![(split.stem.clone(), None)];
            if split.clitic.is_none() {
                if let Some(aug) = sandhi::final_augment(&split.stem) {
                    bases.push((split.stem.slice(0, split.stem.len() - 1), Some(aug)));
                }
            }
            for (base, augment) in bases {
                for kind in [
                    Derivation::AdjAana,
                    Derivation::AdjUlla,
                    Derivation::AdvAaka,
                    Derivation::AdvAay,
                ] {
                    for candidate in sandhi::un_join(&base, &kind.form()) {
                        for entry in self.lexicon.lookup_pos(&candidate.word.text(), Pos::Noun) {
                            if let Ok(analysis) =
                                adjadv::derive_with(entry, kind, augment, split.clitic)
                            {
                                if analysis.surface == token.text()
                                    && !out
                                        .iter()
                                        .any(|a| a.tag == analysis.tag && a.lemma == analysis.lemma)
                                {
                                    out.push(analysis);
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    /// Single-token noun + verb composites: an accusative or dative noun
    /// with its augment glued to a following verb form (தடியைக்கொண்டு).
    fn analyze_noun_verb(&self, token: &Word, out: &mut Vec<Analysis>) {
        for k in 2..token.len() {
            let boundary = token.chars()[k];
            if !boundary.is_pure_consonant() {
                continue;
            }
            let Some(aug) = boundary.base().and_then(sandhi::Augment::from_consonant) else {
                continue;
            };
            let left = token.slice(0, k + 1);
            let right = token.slice(k + 1, token.len());
            if right.is_empty() {
                continue;
            }
            let noun_readings: Vec<Analysis> =
                noun::analyze_with_index(&left, self.lexicon, &self.noun_index, false)
                .into_iter()
                .filter(|a| a.tag.contains(".acc") || a.tag.contains(".dat"))
                .filter(|a| a.tag.ends_with(aug.tag()))
                .collect();
            if noun_readings.is_empty() {
                continue;
            }
            let verb_readings = verb::analyze_with_index(
                &right,
                self.lexicon,
                &self.verb_index,
                self.enable_ee_clitic,
            );
            for n in &noun_readings {
                for v in &verb_readings {
                    let mut segmentation = n.segmentation.clone();
                    let mut rules = n.rules_fired.clone();
                    segmentation.extend(v.segmentation.iter().cloned());
                    rules.push(sandhi::PLAIN.to_string());
                    rules.extend(v.rules_fired.iter().cloned());
                    let analysis = Analysis {
                        lemma: n.lemma.clone(),
                        pos: Pos::Noun,
                        tag: format!("{}+{}.{}", n.tag, v.lemma, &v.tag[2..]),
                        features: Features::Compound(vec![n.clone(), v.clone()]),
                        segmentation,
                        rules_fired: rules,
                        surface: token.text(),
                        rationality: n.rationality,
                    };
                    if !out.iter().any(|a| a.tag == analysis.tag && a.lemma == analysis.lemma) {
                        out.push(analysis);
                    }
                }
            }
        }
    }
}

#[derive(Debug, Error)]
pub enum GenerateError {
    #[error("unknown lemma {0:?}")]
    UnknownLemma(String),
    #[error("tag error: {0}")]
    Tag(#[from] TagError),
    #[error("noun error: {0}")]
    Noun(#[from] noun::NounError),
    #[error("verb error: {0}")]
    Verb(#[from] verb::VerbError),
    #[error("derivation error: {0}")]
    Derive(#[from] adjadv::DeriveError),
    #[error("a fixed word takes no derivation")]
    FixedWord,
}

/// Inverse of analysis: lemma + tag string → surface.
pub fn generate(lexicon: &Lexicon, lemma: &str, tag: &str) -> Result<Analysis, GenerateError> {
    match tags::parse(tag)? {
        ParsedTag::Noun(features) => {
            let entry = lexicon
                .lookup_pos(lemma, Pos::Noun)
                .next()
                .ok_or_else(|| GenerateError::UnknownLemma(lemma.to_string()))?;
            // explicit oblique tags pick the class that owns that oblique
            if features.oblique != noun::Oblique::None {
                for &class in &entry.noun_classes {
                    if noun::class_oblique(class) == features.oblique {
                        return Ok(noun::inflect_with_class(entry, class, &features)?);
                    }
                }
            }
            Ok(noun::inflect(entry, &features)?)
        }
        ParsedTag::Verb(main, tail) => {
            if tail.is_empty() {
                let entry = lexicon
                    .lookup_pos(lemma, Pos::Verb)
                    .next()
                    .ok_or_else(|| GenerateError::UnknownLemma(lemma.to_string()))?;
                return Ok(verb::conjugate(entry, &main)?);
            }
            let mut units = vec![(lemma.to_string(), main)];
            units.extend(tail);
            Ok(verb::compose_chain(lexicon, &units)?)
        }
        ParsedTag::Word(pos, features) => {
            if let Some(kind) = features.derivation {
                let entry = lexicon
                    .lookup_pos(lemma, Pos::Noun)
                    .next()
                    .ok_or_else(|| GenerateError::UnknownLemma(lemma.to_string()))?;
                return Ok(adjadv::derive_with(
                    entry,
                    kind,
                    features.augment,
                    features.clitic,
                )?);
            }
            let entry = lexicon
                .lookup_pos(lemma, pos)
                .next()
                .ok_or_else(|| GenerateError::UnknownLemma(lemma.to_string()))?;
            Ok(render_word(entry, &features)?)
        }
        ParsedTag::NounVerb(noun_features, verb_units) => {
            let entry = lexicon
                .lookup_pos(lemma, Pos::Noun)
                .next()
                .ok_or_else(|| GenerateError::UnknownLemma(lemma.to_string()))?;
            let head = noun::inflect(entry, &noun_features)?;
            let tail = verb::compose_chain(lexicon, &verb_units)?;
            let mut segmentation = head.segmentation.clone();
            let mut rules = head.rules_fired.clone();
            segmentation.extend(tail.segmentation.iter().cloned());
            rules.push(sandhi::PLAIN.to_string());
            rules.extend(tail.rules_fired.iter().cloned());
            let surface = head.surface_word().concat(&tail.surface_word());
            Ok(Analysis {
                lemma: head.lemma.clone(),
                pos: Pos::Noun,
                tag: format!("{}+{}.{}", head.tag, tail.lemma, &tail.tag[2..]),
                features: Features::Compound(vec![head.clone(), tail.clone()]),
                segmentation,
                rules_fired: rules,
                surface: surface.text(),
                rationality: head.rationality,
            })
        }
    }
}

/// Render a lexicon-listed adjective/adverb/particle with optional augment
/// and clitic.
fn render_word(
    entry: &crate::lexicon::LexEntry,
    features: &WordFeatures,
) -> Result<Analysis, adjadv::DeriveError> {
    let mut chain = crate::trace::Chain::start(entry.lemma.clone(), &entry.lemma.text());
    if let Some(a) = features.augment {
        chain.apply(sandhi::AUG, &a.as_word(), a.tag());
    }
    if let Some(c) = features.clitic {
        let joined = clitic::attach(chain.word(), c)?;
        chain.apply(joined.rule, &c.form(), c.tag());
    }
    let (word, morphs, rules) = chain.finish();
    Ok(Analysis {
        lemma: entry.lemma.text(),
        pos: entry.pos,
        tag: features.tag(entry.pos),
        features: Features::Word(features.clone()),
        segmentation: morphs,
        rules_fired: rules,
        surface: word.text(),
        rationality: entry.rationality,
    })
}

/// Two-pass help for the CLI: a token ending in an augment anticipates the
/// next token; parsing them joined recovers the single-token reading.
pub fn join_token_pair(analyzer: &Analyzer, left: &Word, right: &Word) -> Vec<Analysis> {
    if sandhi::final_augment(left).is_none() {
        return Vec::new();
    }
    let joined = sandhi::join(left, right, JoinOpts::default()).word;
    analyzer
        .analyze(&joined)
        .into_iter()
        .filter(|a| matches!(a.features, Features::VerbChain(_) | Features::Compound(_)))
        .collect()
}

/// Reduplicated adjective phrase (two tokens).
pub fn reduplication_of(analyzer: &Analyzer, first: &Word, second: &Word) -> Option<String> {
    if first != second {
        return None;
    }
    let is_adj = analyzer
        .analyze(first)
        .iter()
        .any(|a| a.pos == Pos::Adjective);
    if is_adj {
        Some(adjadv::reduplicate(first))
    } else {
        None
    }
}
