//! Adjective and adverb derivation from nouns, plus reduplication.

use thiserror::Error;

use crate::clitic::{self, Clitic};
use crate::lexicon::{LexEntry, Pos};
use crate::sandhi::{self, Augment, JoinOpts};
use crate::trace::{Analysis, Chain, Features};
use crate::word::{w, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Derivation {
    /// ஆன adjectiviser (உயரமான). From ஆகு 'become'.
    AdjAana,
    /// உள்ள adjectiviser.
    AdjUlla,
    /// ஆக adverbialiser (வேகமாக).
    AdvAaka,
    /// ஆய் adverbialiser.
    AdvAay,
}

impl Derivation {
    pub fn form(self) -> Word {
        match self {
            Derivation::AdjAana => w("ஆன"),
            Derivation::AdjUlla => w("உள்ள"),
            Derivation::AdvAaka => w("ஆக"),
            Derivation::AdvAay => w("ஆய்"),
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Derivation::AdjAana => "adj_aana",
            Derivation::AdjUlla => "adj_ulla",
            Derivation::AdvAaka => "adv_aaka",
            Derivation::AdvAay => "adv_aay",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        Some(match tag {
            "adj_aana" => Derivation::AdjAana,
            "adj_ulla" => Derivation::AdjUlla,
            "adv_aaka" => Derivation::AdvAaka,
            "adv_aay" => Derivation::AdvAay,
            _ => return None,
        })
    }

    pub fn pos(self) -> Pos {
        match self {
            Derivation::AdjAana | Derivation::AdjUlla => Pos::Adjective,
            Derivation::AdvAaka | Derivation::AdvAay => Pos::Adverb,
        }
    }
}

/// Features of underived words and noun-derived modifiers.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct WordFeatures {
    pub derivation: Option<Derivation>,
    pub reduplicated: bool,
    pub augment: Option<Augment>,
    pub clitic: Option<Clitic>,
}

impl WordFeatures {
    pub fn plain() -> Self {
        WordFeatures { derivation: None, reduplicated: false, augment: None, clitic: None }
    }

    pub fn tag(&self, pos: Pos) -> String {
        let mut parts = vec![pos.tag().to_string()];
        if let Some(d) = self.derivation {
            parts.push(d.tag().to_string());
        }
        if self.reduplicated {
            parts.push("redup".to_string());
        }
        if let Some(a) = self.augment {
            parts.push(a.tag().to_string());
        }
        if let Some(c) = self.clitic {
            parts.push(c.tag().to_string());
        }
        parts.join(".")
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DeriveError {
    #[error("derivation applies to nouns")]
    NotANoun,
    #[error("clitic error: {0}")]
    Clitic(#[from] clitic::CliticError),
}

/// Derive an adjective or adverb from a noun, sandhi at the junction.
pub fn derive(entry: &LexEntry, kind: Derivation) -> Result<Analysis, DeriveError> {
    derive_with(entry, kind, None, None)
}

pub fn derive_with(
    entry: &LexEntry,
    kind: Derivation,
    augment: Option<Augment>,
    clitic: Option<Clitic>,
) -> Result<Analysis, DeriveError> {
    if entry.pos != Pos::Noun {
        return Err(DeriveError::NotANoun);
    }
    let mut chain = Chain::start(entry.lemma.clone(), &entry.lemma.text());
    chain.join(&kind.form(), kind.tag(), JoinOpts::default());
    if let Some(a) = augment {
        chain.apply(sandhi::AUG, &a.as_word(), a.tag());
    }
    if let Some(c) = clitic {
        let joined = clitic::attach(chain.word(), c)?;
        chain.apply(joined.rule, &c.form(), c.tag());
    }
    let (word, morphs, rules) = chain.finish();
    let features = WordFeatures { derivation: Some(kind), reduplicated: false, augment, clitic };
    Ok(Analysis {
        lemma: entry.lemma.text(),
        pos: kind.pos(),
        tag: features.tag(kind.pos()),
        features: Features::Word(features),
        segmentation: morphs,
        rules_fired: rules,
        surface: word.text(),
        rationality: entry.rationality,
    })
}

/// Shorthand for the two adjectivisers.
pub fn adjectivize(entry: &LexEntry, ulla: bool) -> Result<Analysis, DeriveError> {
    derive(entry, if ulla { Derivation::AdjUlla } else { Derivation::AdjAana })
}

/// Shorthand for the two adverbialisers.
pub fn adverbialize(entry: &LexEntry, aay: bool) -> Result<Analysis, DeriveError> {
    derive(entry, if aay { Derivation::AdvAay } else { Derivation::AdvAaka })
}

/// Reduplicate an adjective to modify plural nouns: token doubled with a
/// space. Fused superlatives (சின்னஞ்சிறிய) are lexicon-listed, not derived.
pub fn reduplicate(adj: &Word) -> String {
    format!("{} {}", adj.text(), adj.text())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexicon::Lexicon;

    fn lex() -> Lexicon {
        Lexicon::load(concat!(
            "உயரம்\tnoun\tauto\tirrational\tneuter\theight\n",
            "அமைதி\tnoun\tauto\tirrational\tneuter\tpeace\n",
            "பூ\tnoun\tauto\tirrational\tneuter\tflower\n",
            "வேகம்\tnoun\tauto\tirrational\tneuter\tspeed\n",
            "தலைவன்\tnoun\tauto\trational\tmasc\tleader\n",
            "கதிரை\tnoun\tauto\tirrational\tneuter\tchair\n",
        ))
        .unwrap()
    }

    fn entry<'a>(lex: &'a Lexicon, lemma: &str) -> &'a LexEntry {
        lex.lookup_pos(lemma, Pos::Noun).next().unwrap()
    }

    #[test]
    fn adjectivise() {
        let lex = lex();
        assert_eq!(adjectivize(entry(&lex, "உயரம்"), false).unwrap().surface, "உயரமான");
        // பூ takes the glide வ்
        assert_eq!(adjectivize(entry(&lex, "பூ"), false).unwrap().surface, "பூவான");
        assert_eq!(adjectivize(entry(&lex, "உயரம்"), true).unwrap().surface, "உயரமுள்ள");
    }

    #[test]
    fn nominal_modifier_with_augment() {
        let lex = lex();
        // அமைதிப் படை: the bare noun with an anticipating ப்
        let analysis = derive_with(entry(&lex, "அமைதி"), Derivation::AdjAana, None, None).unwrap();
        assert_eq!(analysis.surface, "அமைதியான");
    }

    #[test]
    fn adverbialise() {
        let lex = lex();
        assert_eq!(adverbialize(entry(&lex, "வேகம்"), false).unwrap().surface, "வேகமாக");
        assert_eq!(adverbialize(entry(&lex, "தலைவன்"), false).unwrap().surface, "தலைவனாக");
        assert_eq!(adverbialize(entry(&lex, "கதிரை"), false).unwrap().surface, "கதிரையாக");
        assert_eq!(adverbialize(entry(&lex, "வேகம்"), true).unwrap().surface, "வேகமாய்");
    }

    #[test]
    fn reduplication_doubles_with_space() {
        assert_eq!(reduplicate(&w("சிறிய")), "சிறிய சிறிய");
    }
}
