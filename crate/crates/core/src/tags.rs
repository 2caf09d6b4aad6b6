//! The feature tag strings shared between the library and the CLI.
//!
//! A tag is dot-separated features headed by the part of speech
//! (`n.pl.euph_in.ins`, `v.past.3sm`); verb chains join unit tags with `+`,
//! each non-initial unit naming its lemma (`v.vpart.aug_k+கொடு.past.3sm`).

use thiserror::Error;

use crate::adjadv::{Derivation, WordFeatures};
use crate::clitic::Clitic;
use crate::lexicon::Pos;
use crate::noun::{Case, Euphonic, NounFeatures, Number, Oblique};
use crate::sandhi::Augment;
use crate::verb::{self, Finiteness, Modal, PartNoun, Png, Polarity, Pronominal, VerbFeatures};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TagError {
    #[error("empty tag")]
    Empty,
    #[error("unknown part of speech {0:?}")]
    BadPos(String),
    #[error("unknown tag component {0:?}")]
    Unknown(String),
    #[error("tag violates an invariant: {0}")]
    Invariant(String),
    #[error("a chain unit needs a lemma: {0:?}")]
    ChainLemma(String),
}

/// A parsed tag string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParsedTag {
    Noun(NounFeatures),
    /// Units after the first carry their own lemma.
    Verb(VerbFeatures, Vec<(String, VerbFeatures)>),
    Word(Pos, WordFeatures),
    /// noun head + verb units written as one token (தடியைக்கொண்டு)
    NounVerb(NounFeatures, Vec<(String, VerbFeatures)>),
}

pub fn parse(tag: &str) -> Result<ParsedTag, TagError> {
    let mut segments = tag.split('+');
    let head = segments.next().ok_or(TagError::Empty)?;
    let mut parts = head.split('.');
    let pos = parts.next().ok_or(TagError::Empty)?;
    let rest: Vec<&str> = parts.collect();

    let tail_units = segments
        .map(|segment| {
            let mut parts = segment.split('.');
            let lemma = parts.next().filter(|l| !l.is_empty()).ok_or_else(|| {
                TagError::ChainLemma(segment.to_string())
            })?;
            let features = parse_verb_body(&parts.collect::<Vec<_>>())?;
            Ok((lemma.to_string(), features))
        })
        .collect::<Result<Vec<_>, TagError>>()?;

    match pos {
        "n" => {
            let features = parse_noun_body(&rest)?;
            if tail_units.is_empty() {
                Ok(ParsedTag::Noun(features))
            } else {
                Ok(ParsedTag::NounVerb(features, tail_units))
            }
        }
        "v" => Ok(ParsedTag::Verb(parse_verb_body(&rest)?, tail_units)),
        "adj" | "adv" | "part" => {
            if !tail_units.is_empty() {
                return Err(TagError::Invariant("only verbs and nouns chain".into()));
            }
            let pos = Pos::parse(pos).expect("checked");
            Ok(ParsedTag::Word(pos, parse_word_body(&rest)?))
        }
        other => Err(TagError::BadPos(other.to_string())),
    }
}

pub fn parse_noun_tag(tag: &str) -> Result<NounFeatures, TagError> {
    match parse(tag)? {
        ParsedTag::Noun(f) => Ok(f),
        _ => Err(TagError::Invariant("expected a noun tag".into())),
    }
}

fn parse_noun_body(parts: &[&str]) -> Result<NounFeatures, TagError> {
    let mut features = NounFeatures::new(Number::Sg, Case::Nom);
    let mut saw_number = false;
    for part in parts {
        match *part {
            "sg" => saw_number = true,
            "pl" => {
                features.number = Number::Pl;
                saw_number = true;
            }
            "hon" => features.honorific_pl = true,
            "ben" => features.benefactive = true,
            _ => {
                if let Some(oblique) = Oblique::from_tag(part) {
                    features.oblique = oblique;
                } else if let Some(e) = Euphonic::from_tag(part) {
                    features.euphonics.push(e);
                } else if let Some((case, index)) = Case::from_tag(part) {
                    features.case = case;
                    features.case_allomorph = index;
                } else if let Some(a) = parse_augment(part) {
                    features.augment = Some(a);
                } else if let Some(c) = Clitic::from_tag(part) {
                    features.clitic = Some(c);
                } else {
                    return Err(TagError::Unknown(part.to_string()));
                }
            }
        }
    }
    let _ = saw_number;
    Ok(features)
}

fn parse_augment(part: &str) -> Option<Augment> {
    Some(match part {
        "aug_k" => Augment::K,
        "aug_c" => Augment::C,
        "aug_t" => Augment::T,
        "aug_p" => Augment::P,
        _ => return None,
    })
}

fn parse_verb_body(parts: &[&str]) -> Result<VerbFeatures, TagError> {
    let mut f = VerbFeatures::bare(Finiteness::Finite);
    let mut saw_form = false;
    for part in parts {
        match *part {
            "caus" => f.causative = true,
            "pass" => f.passive = true,
            "neg_aa" => f.polarity = Polarity::NegAa,
            "neg_maattu" => f.polarity = Polarity::NegMaattu,
            "neg_illai" => f.polarity = Polarity::NegIllai,
            "inf" => {
                f.finiteness = Finiteness::Infinitive;
                saw_form = true;
            }
            "vpart" => {
                f.finiteness = Finiteness::Vpart;
                saw_form = true;
            }
            "cond" => {
                f.finiteness = Finiteness::Conditional;
                saw_form = true;
            }
            "rel" => {
                f.finiteness = Finiteness::RelParticiple;
                saw_form = true;
            }
            "vn" => {
                f.finiteness = Finiteness::VerbalNoun;
                saw_form = true;
            }
            "imp" => {
                f.finiteness = Finiteness::Imperative;
                saw_form = true;
            }
            "hort" => {
                f.finiteness = Finiteness::Hortative;
                saw_form = true;
            }
            "euph_an" => f.euphonic_an = true,
            _ => {
                if let Some((tense, allo)) = verb::tense_from_tag(part) {
                    f.tense = Some(tense);
                    f.pres_allomorph = allo;
                } else if let Some(png) = Png::from_tag(part) {
                    f.png = Some(png);
                } else if let Some(m) = Modal::from_tag(part) {
                    f.modal = Some(m);
                } else if let Some(p) = Pronominal::from_tag(part) {
                    f.partnoun = Some(PartNoun { pronominal: p, case: Case::Nom, case_allomorph: 0 });
                    f.finiteness = Finiteness::RelParticiple;
                } else if let Some((case, index)) = Case::from_tag(part) {
                    match &mut f.partnoun {
                        Some(pn) => {
                            pn.case = case;
                            pn.case_allomorph = index;
                        }
                        None => {
                            return Err(TagError::Invariant(format!(
                                "case tag {part} outside a participial noun"
                            )))
                        }
                    }
                } else if let Some(a) = parse_augment(part) {
                    f.augment = Some(a);
                } else if let Some(c) = Clitic::from_tag(part) {
                    f.clitic = Some(c);
                } else {
                    return Err(TagError::Unknown(part.to_string()));
                }
            }
        }
    }
    // a tensed tag without an explicit form is a finite or relative form
    if !saw_form && f.partnoun.is_none() {
        f.finiteness = Finiteness::Finite;
    }
    Ok(f)
}

fn parse_word_body(parts: &[&str]) -> Result<WordFeatures, TagError> {
    let mut f = WordFeatures::plain();
    for part in parts {
        if let Some(d) = Derivation::from_tag(part) {
            f.derivation = Some(d);
        } else if *part == "redup" {
            f.reduplicated = true;
        } else if let Some(a) = parse_augment(part) {
            f.augment = Some(a);
        } else if let Some(c) = Clitic::from_tag(part) {
            f.clitic = Some(c);
        } else {
            return Err(TagError::Unknown(part.to_string()));
        }
    }
    Ok(f)
}
