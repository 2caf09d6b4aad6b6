//! Lemma entries, the TSV loader, and shape-based noun classification.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::script;
use crate::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Pos {
    Noun,
    Verb,
    Adjective,
    Adverb,
    Particle,
}

impl Pos {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "noun" | "n" => Some(Pos::Noun),
            "verb" | "v" => Some(Pos::Verb),
            "adjective" | "adj" => Some(Pos::Adjective),
            "adverb" | "adv" => Some(Pos::Adverb),
            "particle" | "part" => Some(Pos::Particle),
            _ => None,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Pos::Noun => "n",
            Pos::Verb => "v",
            Pos::Adjective => "adj",
            Pos::Adverb => "adv",
            Pos::Particle => "part",
        }
    }
}

/// Table-II nominal paradigm class, 1–16.
pub type NounClass = u8;

/// The Graul-style verbal classes of Table IV plus the five irregulars.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum VerbClass {
    C1,
    C2,
    C3,
    C4,
    C5,
    C6_1,
    C6_2,
    C6_3,
    C7,
    C8,
    C9,
    C10,
    C11,
    C12,
    Irregular(IrregularVerb),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum IrregularVerb {
    /// காண் 'see'
    Kaan,
    /// வா 'come'
    Vaa,
    /// சா 'die'
    Saa,
    /// தா 'give'
    Taa,
    /// வே 'boil'
    Vee,
}

impl VerbClass {
    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "1" => VerbClass::C1,
            "2" => VerbClass::C2,
            "3" => VerbClass::C3,
            "4" => VerbClass::C4,
            "5" => VerbClass::C5,
            "6.1" => VerbClass::C6_1,
            "6.2" => VerbClass::C6_2,
            "6.3" => VerbClass::C6_3,
            "7" => VerbClass::C7,
            "8" => VerbClass::C8,
            "9" => VerbClass::C9,
            "10" => VerbClass::C10,
            "11" => VerbClass::C11,
            "12" => VerbClass::C12,
            _ => return None,
        })
    }

    pub fn label(self) -> &'static str {
        match self {
            VerbClass::C1 => "1",
            VerbClass::C2 => "2",
            VerbClass::C3 => "3",
            VerbClass::C4 => "4",
            VerbClass::C5 => "5",
            VerbClass::C6_1 => "6.1",
            VerbClass::C6_2 => "6.2",
            VerbClass::C6_3 => "6.3",
            VerbClass::C7 => "7",
            VerbClass::C8 => "8",
            VerbClass::C9 => "9",
            VerbClass::C10 => "10",
            VerbClass::C11 => "11",
            VerbClass::C12 => "12",
            VerbClass::Irregular(_) => "irregular",
        }
    }
}

impl IrregularVerb {
    pub fn for_lemma(lemma: &str) -> Option<Self> {
        match lemma {
            "காண்" => Some(IrregularVerb::Kaan),
            "வா" => Some(IrregularVerb::Vaa),
            "சா" => Some(IrregularVerb::Saa),
            "தா" => Some(IrregularVerb::Taa),
            "வே" => Some(IrregularVerb::Vee),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Rationality {
    Rational,
    Irrational,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Gender {
    Masc,
    Fem,
    Neuter,
    Epicene,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct LexEntry {
    #[serde(serialize_with = "ser_word")]
    pub lemma: Word,
    pub pos: Pos,
    /// Nominal classes; usually one, more for pōli lemmas like நாள்.
    pub noun_classes: Vec<NounClass>,
    pub verb_class: Option<VerbClass>,
    pub rationality: Option<Rationality>,
    pub gender: Option<Gender>,
    pub gloss: String,
    /// Source line for diagnostics.
    pub line: usize,
}

fn ser_word<S: serde::Serializer>(w: &Word, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&w.text())
}

impl LexEntry {
    pub fn is_rational(&self) -> bool {
        self.rationality == Some(Rationality::Rational)
    }
}

#[derive(Debug, Error)]
pub enum LexiconError {
    #[error("line {line}: expected 6 tab-separated columns, found {found}")]
    BadColumns { line: usize, found: usize },
    #[error("line {line}: unreadable lemma: {source}")]
    BadLemma { line: usize, source: crate::script::ScriptError },
    #[error("line {line}: unknown part of speech {pos:?}")]
    BadPos { line: usize, pos: String },
    #[error("line {line}: unknown class token {class:?}")]
    BadClass { line: usize, class: String },
    #[error("line {line}: verb classes are lexical; \"auto\" is only valid for nouns")]
    AutoVerb { line: usize },
    #[error("line {line}: nouns must carry a rationality")]
    MissingRationality { line: usize },
    #[error("line {line}: unknown rationality {value:?}")]
    BadRationality { line: usize, value: String },
    #[error("line {line}: unknown gender {value:?}")]
    BadGender { line: usize, value: String },
    #[error("line {line}: duplicate entry for ({lemma}, {pos}, {class})")]
    Duplicate { line: usize, lemma: String, pos: &'static str, class: String },
    #[error("classify: empty lemma")]
    EmptyLemma,
}

/// Immutable, indexed lemma store.
#[derive(Debug, Default)]
pub struct Lexicon {
    entries: Vec<LexEntry>,
    by_lemma: HashMap<String, Vec<usize>>,
}

impl Lexicon {
    /// Load a TSV stream: lemma, pos, class (or "auto" for nouns),
    /// rationality, gender, gloss. '#'-prefixed lines are comments.
    pub fn load(source: &str) -> Result<Self, LexiconError> {
        let mut lex = Lexicon::default();
        for (i, raw_line) in source.lines().enumerate() {
            let line = i + 1;
            let trimmed = raw_line.trim_end_matches(['\r', '\n']);
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let cols: Vec<&str> = trimmed.split('\t').collect();
            if cols.len() != 6 {
                return Err(LexiconError::BadColumns { line, found: cols.len() });
            }
            let lemma = Word::parse(cols[0].trim())
                .map_err(|source| LexiconError::BadLemma { line, source })?;
            let pos = Pos::parse(cols[1].trim())
                .ok_or_else(|| LexiconError::BadPos { line, pos: cols[1].to_string() })?;
            let class_token = cols[2].trim();
            let rationality = match cols[3].trim() {
                "" | "-" => None,
                "rational" | "rat" => Some(Rationality::Rational),
                "irrational" | "irrat" => Some(Rationality::Irrational),
                other => {
                    return Err(LexiconError::BadRationality { line, value: other.to_string() })
                }
            };
            let gender = match cols[4].trim() {
                "" | "-" => None,
                "m" | "masc" => Some(Gender::Masc),
                "f" | "fem" => Some(Gender::Fem),
                "n" | "neuter" => Some(Gender::Neuter),
                "e" | "epicene" => Some(Gender::Epicene),
                other => return Err(LexiconError::BadGender { line, value: other.to_string() }),
            };
            let gloss = cols[5].trim().to_string();

            let mut noun_classes = Vec::new();
            let mut verb_class = None;
            match pos {
                Pos::Noun => {
                    if rationality.is_none() {
                        return Err(LexiconError::MissingRationality { line });
                    }
                    if class_token == "auto" {
                        noun_classes = classify_noun(&lemma)?;
                    } else {
                        for piece in class_token.split(',') {
                            let n: u8 = piece.trim().parse().map_err(|_| {
                                LexiconError::BadClass { line, class: class_token.to_string() }
                            })?;
                            if !(1..=16).contains(&n) {
                                return Err(LexiconError::BadClass {
                                    line,
                                    class: class_token.to_string(),
                                });
                            }
                            noun_classes.push(n);
                        }
                    }
                }
                Pos::Verb => {
                    if class_token == "auto" {
                        return Err(LexiconError::AutoVerb { line });
                    }
                    verb_class = if class_token == "irregular" {
                        let irr = IrregularVerb::for_lemma(&lemma.text()).ok_or_else(|| {
                            LexiconError::BadClass { line, class: class_token.to_string() }
                        })?;
                        Some(VerbClass::Irregular(irr))
                    } else {
                        Some(VerbClass::parse(class_token).ok_or_else(|| {
                            LexiconError::BadClass { line, class: class_token.to_string() }
                        })?)
                    };
                }
                _ => {
                    if !class_token.is_empty() && class_token != "-" {
                        return Err(LexiconError::BadClass {
                            line,
                            class: class_token.to_string(),
                        });
                    }
                }
            }

            let entry = LexEntry {
                lemma,
                pos,
                noun_classes,
                verb_class,
                rationality,
                gender,
                gloss,
                line,
            };
            lex.insert(entry)?;
        }
        Ok(lex)
    }

    fn insert(&mut self, entry: LexEntry) -> Result<(), LexiconError> {
        let key = entry.lemma.text();
        if let Some(existing) = self.by_lemma.get(&key) {
            for &i in existing {
                let old = &self.entries[i];
                if old.pos == entry.pos
                    && old.noun_classes == entry.noun_classes
                    && old.verb_class == entry.verb_class
                {
                    return Err(LexiconError::Duplicate {
                        line: entry.line,
                        lemma: key,
                        pos: entry.pos.tag(),
                        class: match entry.pos {
                            Pos::Noun => format!("{:?}", entry.noun_classes),
                            Pos::Verb => entry
                                .verb_class
                                .map(|c| c.label().to_string())
                                .unwrap_or_default(),
                            _ => String::new(),
                        },
                    });
                }
            }
        }
        let idx = self.entries.len();
        self.by_lemma.entry(key).or_default().push(idx);
        self.entries.push(entry);
        Ok(())
    }

    pub fn entries(&self) -> &[LexEntry] {
        &self.entries
    }

    pub fn lookup(&self, lemma: &str) -> impl Iterator<Item = &LexEntry> {
        self.by_lemma
            .get(lemma)
            .into_iter()
            .flatten()
            .map(move |&i| &self.entries[i])
    }

    pub fn lookup_pos(&self, lemma: &str, pos: Pos) -> impl Iterator<Item = &LexEntry> {
        self.lookup(lemma).filter(move |e| e.pos == pos)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Serialize back to the TSV format, "auto" classes resolved.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for entry in &self.entries {
            let class = match entry.pos {
                Pos::Noun => entry
                    .noun_classes
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
                Pos::Verb => entry
                    .verb_class
                    .map(|c| c.label().to_string())
                    .unwrap_or_default(),
                _ => "-".to_string(),
            };
            let rationality = match entry.rationality {
                Some(Rationality::Rational) => "rational",
                Some(Rationality::Irrational) => "irrational",
                None => "-",
            };
            let gender = match entry.gender {
                Some(Gender::Masc) => "m",
                Some(Gender::Fem) => "f",
                Some(Gender::Neuter) => "n",
                Some(Gender::Epicene) => "e",
                None => "-",
            };
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\t{}\n",
                entry.lemma.text(),
                entry.pos.tag(),
                class,
                rationality,
                gender,
                entry.gloss
            ));
        }
        out
    }
}

impl fmt::Display for Lexicon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "lexicon of {} entries", self.entries.len())
    }
}

/// Assign Table-II classes from surface shape alone.
///
/// The decision features are the final letter, word length, and the length
/// of the first syllable. Shapes the table genuinely leaves ambiguous
/// (நாள்-type) return both candidates; human-collective class 5 is never
/// returned, it must be listed.
pub fn classify_noun(lemma: &Word) -> Result<Vec<NounClass>, LexiconError> {
    let Some(last) = lemma.last() else {
        return Err(LexiconError::EmptyLemma);
    };
    let first_is_long = lemma
        .first()
        .and_then(|c| c.vowel())
        .map(script::is_long_vowel)
        .unwrap_or(false);
    let two_letter = lemma.len() == 2;

    // Single long-vowel letter: ஈ 'house fly', ஆ 'cow', பூ 'flower'.
    if lemma.len() == 1 && last.ends_in_vowel() {
        return Ok(vec![3]);
    }

    if last.is_pure_consonant() {
        let b = last.base().expect("pure consonant");
        return Ok(match b {
            'ம' => vec![15],
            'ண' => vec![9],
            'ன' => {
                if two_letter {
                    vec![10]
                } else {
                    vec![11]
                }
            }
            'ல' => {
                if two_letter && !first_is_long {
                    vec![12]
                } else {
                    vec![4]
                }
            }
            'ள' => {
                if two_letter && !first_is_long {
                    vec![13]
                } else if two_letter {
                    // நாள்-type pōli: conjugates in both class 4 and 14.
                    vec![4, 14]
                } else {
                    vec![14]
                }
            }
            'ர' => {
                if two_letter {
                    vec![4]
                } else {
                    vec![16]
                }
            }
            'ய' => vec![2],
            _ => vec![4],
        });
    }

    if let Some(v) = last.vowel() {
        if last.base() == Some('ட') && v == 'உ' {
            return Ok(if first_is_long { vec![6] } else { vec![7] });
        }
        if last.base() == Some('ற') && v == 'உ' {
            return Ok(vec![8]);
        }
        if v == 'உ' && lemma.ends_in_overshort_u() {
            // Other overshort-u stems behave like வண்டு: plain உ-elision.
            return Ok(vec![7]);
        }
        return Ok(match v {
            'அ' | 'ஆ' | 'உ' | 'ஊ' | 'ஒ' | 'ஓ' | 'ஔ' => vec![1],
            _ => vec![2],
        });
    }

    // aytham, grantha or foreign finals: attach suffixes directly.
    Ok(vec![4])
}
