//! Verbal inflection and analysis: the twelve-class tense marker table,
//! the five irregular verbs, finite and non-finite forms, negation,
//! causatives, passives, auxiliary chains, and participial nouns.

use thiserror::Error;

use crate::clitic::{self, Clitic};
use crate::lexicon::{IrregularVerb, LexEntry, Lexicon, Pos, VerbClass};
use crate::noun::Case;
use crate::sandhi::{self, Augment, JoinOpts, RuleId};
use crate::trace::{Analysis, Chain, Features};
use crate::word::{w, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Tense {
    Past,
    Pres,
    Fut,
    /// The future -உம் form, neuter or relative.
    FutUm,
}

/// Person–number–gender portmanteau keys. The suffix is unsegmentable;
/// each key maps to exactly one terminal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Png {
    P1s,
    P1p,
    P2s,
    /// Polite singular ஈர் (நடந்தீர்).
    P2h,
    P2p,
    P3sm,
    P3sf,
    /// Honorific singular ஆர்.
    P3sh,
    /// Rational plural ஆர்கள் (epicene).
    P3pe,
    /// Honorific plural; same surface as [`Png::P3pe`].
    P3ph,
    P3sn,
    P3pn,
    /// Archaic -அனன் masculine.
    Arch3smAnan,
    /// Archaic -அனள் feminine.
    Arch3sfAnal,
    /// Archaic -அன் (first person with present stems, masculine with
    /// future stems).
    ArchAn,
    /// Archaic rational plural -அர் on future stems.
    ArchAr,
}

impl Png {
    pub const ALL: [Png; 16] = [
        Png::P1s,
        Png::P1p,
        Png::P2s,
        Png::P2h,
        Png::P2p,
        Png::P3sm,
        Png::P3sf,
        Png::P3sh,
        Png::P3pe,
        Png::P3ph,
        Png::P3sn,
        Png::P3pn,
        Png::Arch3smAnan,
        Png::Arch3sfAnal,
        Png::ArchAn,
        Png::ArchAr,
    ];

    pub fn suffix(self) -> Word {
        match self {
            Png::P1s => w("ஏன்"),
            Png::P1p => w("ஓம்"),
            Png::P2s => w("ஆய்"),
            Png::P2h => w("ஈர்"),
            Png::P2p => w("ஈர்கள்"),
            Png::P3sm => w("ஆன்"),
            Png::P3sf => w("ஆள்"),
            Png::P3sh => w("ஆர்"),
            Png::P3pe | Png::P3ph => w("ஆர்கள்"),
            Png::P3sn => w("அது"),
            Png::P3pn => w("அன"),
            Png::Arch3smAnan => w("அனன்"),
            Png::Arch3sfAnal => w("அனள்"),
            Png::ArchAn => w("அன்"),
            Png::ArchAr => w("அர்"),
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Png::P1s => "1s",
            Png::P1p => "1p",
            Png::P2s => "2s",
            Png::P2h => "2sh",
            Png::P2p => "2p",
            Png::P3sm => "3sm",
            Png::P3sf => "3sf",
            Png::P3sh => "3sh",
            Png::P3pe => "3pe",
            Png::P3ph => "3ph",
            Png::P3sn => "3sn",
            Png::P3pn => "3pn",
            Png::Arch3smAnan => "3sm_arch",
            Png::Arch3sfAnal => "3sf_arch",
            Png::ArchAn => "arch_an",
            Png::ArchAr => "3pe_short",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        Png::ALL.into_iter().find(|p| p.tag() == tag)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Finiteness {
    Finite,
    Infinitive,
    Vpart,
    Conditional,
    RelParticiple,
    VerbalNoun,
    Imperative,
    Hortative,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Polarity {
    Pos,
    NegAa,
    NegMaattu,
    NegIllai,
}

/// Modal endings attested on the infinitive stem.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Modal {
    Mudiyum,
    Laam,
    Veendum,
    Laakaathu,
}

impl Modal {
    pub const ALL: [Modal; 4] = [Modal::Mudiyum, Modal::Laam, Modal::Veendum, Modal::Laakaathu];

    pub fn form(self) -> Word {
        match self {
            Modal::Mudiyum => w("முடியும்"),
            Modal::Laam => w("லாம்"),
            Modal::Veendum => w("வேண்டும்"),
            Modal::Laakaathu => w("லாகாது"),
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Modal::Mudiyum => "modal_mudiyum",
            Modal::Laam => "modal_laam",
            Modal::Veendum => "modal_veendum",
            Modal::Laakaathu => "modal_laakaathu",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        Modal::ALL.into_iter().find(|m| m.tag() == tag)
    }
}

/// Pronominal bases fused onto relative participles (நடந்த + அவன்).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Pronominal {
    Avan,
    Aval,
    Avar,
    Avarkal,
    Avaar,
    Avaarkal,
}

impl Pronominal {
    pub const ALL: [Pronominal; 6] = [
        Pronominal::Avan,
        Pronominal::Aval,
        Pronominal::Avar,
        Pronominal::Avarkal,
        Pronominal::Avaar,
        Pronominal::Avaarkal,
    ];

    pub fn form(self) -> Word {
        match self {
            Pronominal::Avan => w("அவன்"),
            Pronominal::Aval => w("அவள்"),
            Pronominal::Avar => w("அவர்"),
            Pronominal::Avarkal => w("அவர்கள்"),
            Pronominal::Avaar => w("அவார்"),
            Pronominal::Avaarkal => w("அவார்கள்"),
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Pronominal::Avan => "pn_3sm",
            Pronominal::Aval => "pn_3sf",
            Pronominal::Avar => "pn_3sh",
            Pronominal::Avarkal => "pn_3pe",
            Pronominal::Avaar => "pn_hon",
            Pronominal::Avaarkal => "pn_hon_pl",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        Pronominal::ALL.into_iter().find(|p| p.tag() == tag)
    }
}

/// Case marking on a participial noun.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct PartNoun {
    pub pronominal: Pronominal,
    pub case: Case,
    pub case_allomorph: u8,
}

/// One verbal unit's features. Chains carry one bundle per unit.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct VerbFeatures {
    pub finiteness: Finiteness,
    pub tense: Option<Tense>,
    /// 0 selects கிற், 1 selects கின்ற்.
    pub pres_allomorph: u8,
    pub png: Option<Png>,
    pub polarity: Polarity,
    pub causative: bool,
    pub passive: bool,
    pub modal: Option<Modal>,
    pub partnoun: Option<PartNoun>,
    pub euphonic_an: bool,
    pub augment: Option<Augment>,
    pub clitic: Option<Clitic>,
}

impl VerbFeatures {
    pub fn finite(tense: Tense, png: Png) -> Self {
        VerbFeatures { tense: Some(tense), png: Some(png), ..VerbFeatures::bare(Finiteness::Finite) }
    }

    pub fn bare(finiteness: Finiteness) -> Self {
        VerbFeatures {
            finiteness,
            tense: None,
            pres_allomorph: 0,
            png: None,
            polarity: Polarity::Pos,
            causative: false,
            passive: false,
            modal: None,
            partnoun: None,
            euphonic_an: false,
            augment: None,
            clitic: None,
        }
    }

    /// Tag without the leading "v"; the caller prepends "v" or a chain link.
    pub fn tag_body(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        if self.causative {
            parts.push("caus".into());
        }
        if self.passive {
            parts.push("pass".into());
        }
        match self.polarity {
            Polarity::Pos => {}
            Polarity::NegAa => parts.push("neg_aa".into()),
            Polarity::NegMaattu => parts.push("neg_maattu".into()),
            Polarity::NegIllai => parts.push("neg_illai".into()),
        }
        match self.finiteness {
            Finiteness::Finite => {
                if let Some(t) = self.tense {
                    parts.push(tense_tag(t, self.pres_allomorph).into());
                }
            }
            Finiteness::Infinitive => parts.push("inf".into()),
            Finiteness::Vpart => parts.push("vpart".into()),
            Finiteness::Conditional => parts.push("cond".into()),
            Finiteness::RelParticiple => {
                if let Some(t) = self.tense {
                    parts.push(tense_tag(t, self.pres_allomorph).into());
                }
                if self.partnoun.is_none() {
                    parts.push("rel".into());
                }
            }
            Finiteness::VerbalNoun => {
                if let Some(t) = self.tense {
                    parts.push(tense_tag(t, self.pres_allomorph).into());
                }
                parts.push("vn".into());
            }
            Finiteness::Imperative => parts.push("imp".into()),
            Finiteness::Hortative => parts.push("hort".into()),
        }
        if let Some(m) = self.modal {
            parts.push(m.tag().into());
        }
        if let Some(pn) = &self.partnoun {
            parts.push(pn.pronominal.tag().into());
            if pn.case != Case::Nom {
                parts.push(pn.case.allomorph_tag(pn.case_allomorph));
            }
        }
        if self.euphonic_an {
            parts.push("euph_an".into());
        }
        // the -um future is a tense-and-agreement portmanteau; no PNG tag
        if let Some(p) = self.png {
            if self.tense != Some(Tense::FutUm) {
                parts.push(p.tag().into());
            }
        }
        if let Some(a) = self.augment {
            parts.push(a.tag().into());
        }
        if let Some(c) = self.clitic {
            parts.push(c.tag().into());
        }
        parts.join(".")
    }

    pub fn tag(&self) -> String {
        format!("v.{}", self.tag_body())
    }
}

pub fn tense_tag(tense: Tense, pres_allomorph: u8) -> &'static str {
    match (tense, pres_allomorph) {
        (Tense::Past, _) => "past",
        (Tense::Pres, 1) => "pres_kinr",
        (Tense::Pres, _) => "pres",
        (Tense::Fut, _) => "fut",
        (Tense::FutUm, _) => "fut_um",
    }
}

pub fn tense_from_tag(tag: &str) -> Option<(Tense, u8)> {
    Some(match tag {
        "past" => (Tense::Past, 0),
        "pres" => (Tense::Pres, 0),
        "pres_kinr" => (Tense::Pres, 1),
        "fut" => (Tense::Fut, 0),
        "fut_um" => (Tense::FutUm, 0),
        _ => return None,
    })
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum VerbError {
    #[error("entry is not a verb")]
    NotAVerb,
    #[error("verb entry carries no class")]
    NoClass,
    #[error("finite forms need a person-number-gender key")]
    NeedsPng,
    #[error("{0}")]
    BadCombination(String),
    #[error("the future neuter uses the -um form; select fut_um")]
    FutNeuter,
    #[error("augments attach to infinitives, participles, and acc/dat participial nouns")]
    AugmentNotAllowed,
    #[error("மாட்டு negation is future-oriented; it rejects tense marking")]
    MaattuTense,
    #[error("{aux} is a {kind} and follows a {required}; got {found}")]
    ChainForm { aux: String, kind: &'static str, required: &'static str, found: &'static str },
    #[error("unknown auxiliary {0}")]
    UnknownAux(String),
    #[error("clitic error: {0}")]
    Clitic(#[from] clitic::CliticError),
    #[error("augment error: {0}")]
    Augment(#[from] sandhi::SandhiError),
}

/// A verb's stem set, normal or causative-derived.
#[derive(Debug, Clone)]
pub struct VerbStem {
    pub lemma: Word,
    pub class: VerbClass,
    pub irregular: Option<IrregularVerb>,
    pub causative: bool,
    /// Morphs already accumulated (lemma, plus the causative morph).
    base_morphs: Vec<(String, String)>,
    base_rules: Vec<RuleId>,
    base: Word,
}

impl VerbStem {
    pub fn of(entry: &LexEntry) -> Result<Self, VerbError> {
        if entry.pos != Pos::Verb {
            return Err(VerbError::NotAVerb);
        }
        let class = entry.verb_class.ok_or(VerbError::NoClass)?;
        let irregular = match class {
            VerbClass::Irregular(i) => Some(i),
            _ => None,
        };
        Ok(VerbStem {
            lemma: entry.lemma.clone(),
            class,
            irregular,
            causative: false,
            base_morphs: vec![(entry.lemma.text(), entry.lemma.text())],
            base_rules: Vec::new(),
            base: entry.lemma.clone(),
        })
    }

    /// Derive the causative stem: வி/பி/ப்பி before the tense slot, after
    /// which the verb conjugates like class 11 (நடப்பித்தான்).
    pub fn causativize(&self) -> VerbStem {
        let morph = causative_morph(self);
        let base = self.base.concat(&morph);
        let mut morphs = self.base_morphs.clone();
        morphs.push((morph.text(), "caus".into()));
        let mut rules = self.base_rules.clone();
        rules.push(sandhi::PLAIN);
        VerbStem {
            lemma: self.lemma.clone(),
            class: VerbClass::C11,
            irregular: None,
            causative: true,
            base_morphs: morphs,
            base_rules: rules,
            base,
        }
    }

    fn chain(&self) -> Chain {
        let mut chain = Chain::start(
            Word::parse(&self.base_morphs[0].0).expect("lemma"),
            &self.base_morphs[0].1,
        );
        for (i, (surface, tag)) in self.base_morphs.iter().enumerate().skip(1) {
            chain.apply(self.base_rules[i - 1], &Word::parse(surface).expect("morph"), tag);
        }
        chain
    }
}

/// The phonologically conditioned causative morph.
fn causative_morph(stem: &VerbStem) -> Word {
    match stem.class {
        VerbClass::C11 | VerbClass::C12 => w("ப்பி"),
        _ => {
            let last = stem.lemma.last();
            match last {
                Some(c) if c.is_pure_consonant() && !matches!(c.base(), Some('ய') | Some('ர') | Some('ழ')) => {
                    w("பி")
                }
                _ => w("வி"),
            }
        }
    }
}

/// Irregular stem table: past stem, present base, future stem, infinitive
/// base, verbal participle.
fn irregular_stems(v: IrregularVerb) -> (&'static str, &'static str, &'static str, &'static str, &'static str) {
    match v {
        IrregularVerb::Vaa => ("வந்த்", "வரு", "வருவ்", "வர்", "வந்து"),
        IrregularVerb::Taa => ("தந்த்", "தரு", "தருவ்", "தர்", "தந்து"),
        IrregularVerb::Kaan => ("கண்ட்", "காண்", "காண்ப்", "காண்", "கண்டு"),
        IrregularVerb::Saa => ("செத்த்", "சா", "சாவ்", "சாக்", "செத்து"),
        IrregularVerb::Vee => ("வெந்த்", "வே", "வேவ்", "வேக்", "வெந்து"),
    }
}

/// Past marker and its junction rule, per Table IV with the alternation
/// rules the classes require.
fn past_marker(class: VerbClass) -> (&'static str, RuleId) {
    match class {
        VerbClass::C1 => ("த்", sandhi::PLAIN),
        VerbClass::C2 | VerbClass::C9 => ("ட்", sandhi::ASSIM_LL_NT),
        VerbClass::C3 | VerbClass::C10 => ("ற்", sandhi::ASSIM_L_NR),
        VerbClass::C4 | VerbClass::C11 => ("த்த்", sandhi::PLAIN),
        VerbClass::C5 => ("இன்", sandhi::PLAIN), // junction resolved per stem shape
        VerbClass::C6_1 => ("ட்", sandhi::UDEL),
        VerbClass::C6_2 => ("க்", sandhi::UDEL),
        VerbClass::C6_3 => ("ற்", sandhi::UDEL),
        VerbClass::C7 => ("ட்", sandhi::PLAIN),
        VerbClass::C8 => ("ற்", sandhi::PLAIN),
        VerbClass::C12 => ("ந்த்", sandhi::PLAIN),
        VerbClass::Irregular(_) => ("", sandhi::PLAIN),
    }
}

fn pres_marker(class: VerbClass, allomorph: u8) -> &'static str {
    let strong = matches!(class, VerbClass::C11 | VerbClass::C12);
    match (strong, allomorph) {
        (false, 0) => "கிற்",
        (false, _) => "கின்ற்",
        (true, 0) => "க்கிற்",
        (true, _) => "க்கின்ற்",
    }
}

fn fut_marker(class: VerbClass) -> &'static str {
    match class {
        VerbClass::C1
        | VerbClass::C2
        | VerbClass::C3
        | VerbClass::C4
        | VerbClass::C5
        | VerbClass::C6_1
        | VerbClass::C6_2
        | VerbClass::C6_3 => "வ்",
        VerbClass::C7 | VerbClass::C8 | VerbClass::C9 | VerbClass::C10 => "ப்",
        VerbClass::C11 | VerbClass::C12 => "ப்ப்",
        VerbClass::Irregular(_) => "",
    }
}

/// The infinitive extension: what sits between the lemma and -அ.
/// Strong verbs take க்க (நடக்க), நில்-type verbs take க with ல்→ற்.
fn inf_suffix(class: VerbClass, long_vowel_5: bool) -> (&'static str, Option<RuleId>) {
    match class {
        VerbClass::C11 | VerbClass::C12 => ("க்க", Some(sandhi::PLAIN)),
        VerbClass::C10 => ("க", Some(sandhi::ASSIM_L_R)),
        VerbClass::C5 if long_vowel_5 => ("க", Some(sandhi::PLAIN)),
        _ => ("அ", None), // generic join: doubling, glide, or உ-elision
    }
}

fn is_long_vowel_stem(word: &Word) -> bool {
    word.last()
        .and_then(|c| c.vowel())
        .map(crate::script::is_long_vowel)
        .unwrap_or(false)
        && word.last().map(|c| c.base().is_none() || word.len() == 1 || !word.ends_in_overshort_u()).unwrap_or(false)
        && !word.ends_in_overshort_u()
}

/// The tense-marked stem ready for a terminal suffix.
pub fn tense_stem(entry: &LexEntry, tense: Tense) -> Result<Word, VerbError> {
    let stem = VerbStem::of(entry)?;
    let chain = tense_chain(&stem, tense, 0)?;
    Ok(chain.word().clone())
}

/// The periphrastic இல்லை negation: verbal noun plus the free particle,
/// two tokens (எழும்புவது இல்லை 'does not get up').
pub fn negate_periphrastic(entry: &LexEntry, tense: Tense) -> Result<String, VerbError> {
    let mut features = VerbFeatures::bare(Finiteness::VerbalNoun);
    features.tense = Some(tense);
    let vn = conjugate(entry, &features)?;
    Ok(format!("{} இல்லை", vn.surface))
}

fn tense_chain(stem: &VerbStem, tense: Tense, pres_allomorph: u8) -> Result<Chain, VerbError> {
    let mut chain = stem.chain();
    if let Some(irr) = stem.irregular {
        let (past, pres_base, fut, _inf, _vpart) = irregular_stems(irr);
        match tense {
            Tense::Past => {
                // suppletive stem, recorded as one morph
                return Ok(Chain::start(w(past), &format!("{}.past", stem.lemma.text())));
            }
            Tense::Pres => {
                let mut c = Chain::start(w(pres_base), &stem.lemma.text());
                c.join(&w(pres_marker(VerbClass::C1, pres_allomorph)), "pres", JoinOpts::default());
                return Ok(c);
            }
            Tense::Fut => {
                return Ok(Chain::start(w(fut), &format!("{}.fut", stem.lemma.text())));
            }
            Tense::FutUm => unreachable!("fut_um handled by futum_chain"),
        }
    }
    match tense {
        Tense::Past => {
            let (marker, rule) = past_marker(stem.class);
            if stem.class == VerbClass::C5 {
                if is_long_vowel_stem(chain.word()) {
                    chain.apply(sandhi::VCONTRACT, &w("இன்"), "past");
                } else {
                    chain.join(&w("இன்"), "past", JoinOpts { force_udel: true, ..JoinOpts::default() });
                }
            } else if rule == sandhi::PLAIN {
                chain.join(&w(marker), "past", JoinOpts::default());
            } else {
                chain.apply(rule, &w(marker), "past");
            }
        }
        Tense::Pres => {
            let marker = pres_marker(stem.class, pres_allomorph);
            if stem.class == VerbClass::C10 {
                chain.apply(sandhi::ASSIM_L_R, &w(marker), "pres");
            } else {
                chain.join(&w(marker), "pres", JoinOpts::default());
            }
        }
        Tense::Fut => {
            let marker = fut_marker(stem.class);
            if stem.class == VerbClass::C10 {
                chain.apply(sandhi::ASSIM_L_R, &w(marker), "fut");
            } else {
                chain.join(&w(marker), "fut", JoinOpts::default());
            }
        }
        Tense::FutUm => unreachable!("fut_um handled by futum_chain"),
    }
    Ok(chain)
}

/// The base onto which -அ, -உம் and the negative ஆ-series attach.
fn inf_base_chain(stem: &VerbStem) -> Chain {
    let mut chain = stem.chain();
    if let Some(irr) = stem.irregular {
        let (_, _, _, inf, _) = irregular_stems(irr);
        return Chain::start(w(inf), &format!("{}.stem", stem.lemma.text()));
    }
    let long5 = stem.class == VerbClass::C5 && is_long_vowel_stem(&stem.base);
    let (ext, rule) = inf_suffix(stem.class, long5);
    match rule {
        Some(r) if ext != "அ" => {
            // strip the vowel off the extension: க்க / க stored with its அ
            let ext_word = w(ext);
            let mut bare = Word::new();
            for (i, c) in ext_word.chars().iter().enumerate() {
                if i + 1 == ext_word.len() {
                    if let Some(p) = c.to_pure() {
                        bare.push(p);
                    }
                } else {
                    bare.push(*c);
                }
            }
            chain.apply(r, &bare, "inf_ext");
        }
        _ => {}
    }
    chain
}

fn join_inf_vowel(stem: &VerbStem, chain: &mut Chain, suffix: &Word, tag: &str) {
    // -அ and its kin double a short monosyllabic root (செய்ய, உண்ண); the
    // உ-final classes elide their உ whatever the word shape (விடு → விட)
    let allow_double = chain.word().is_short_monosyllable();
    let force_udel = matches!(
        stem.class,
        VerbClass::C5 | VerbClass::C6_1 | VerbClass::C6_2 | VerbClass::C6_3
    ) && chain.word().last().map(|c| c.vowel() == Some('உ') && c.base().is_some()).unwrap_or(false);
    chain.join(suffix, tag, JoinOpts { allow_double, force_udel, ..JoinOpts::default() });
}

fn vpart_chain(stem: &VerbStem) -> Result<Chain, VerbError> {
    if let Some(irr) = stem.irregular {
        let (_, _, _, _, vpart) = irregular_stems(irr);
        return Ok(Chain::start(w(vpart), &format!("{}.vpart", stem.lemma.text())));
    }
    if stem.class == VerbClass::C5 {
        let mut chain = stem.chain();
        if is_long_vowel_stem(chain.word()) {
            chain.join(&w("ய்"), "vpart", JoinOpts::default());
        } else {
            chain.join(&w("இ"), "vpart", JoinOpts { force_udel: true, ..JoinOpts::default() });
        }
        return Ok(chain);
    }
    let mut chain = tense_chain(stem, Tense::Past, 0)?;
    chain.join(&w("உ"), "vpart", JoinOpts::default());
    Ok(chain)
}

/// class-5 past forms whose ending begins with அ use the -இ participle
/// plus a glide: வாங்கியது, வாங்கிய.
fn class5_i_chain(stem: &VerbStem) -> Result<Chain, VerbError> {
    let mut chain = stem.chain();
    chain.join(&w("இ"), "past", JoinOpts { force_udel: true, ..JoinOpts::default() });
    Ok(chain)
}

fn uses_i_past(stem: &VerbStem) -> bool {
    stem.class == VerbClass::C5 && !is_long_vowel_stem(&stem.base)
}

fn validate(features: &VerbFeatures) -> Result<VerbFeatures, VerbError> {
    let mut f = features.clone();
    let archaic = |p: Png| {
        matches!(p, Png::Arch3smAnan | Png::Arch3sfAnal | Png::ArchAn | Png::ArchAr)
    };
    // the future relative participle is the -um form with a null relativiser
    if f.finiteness == Finiteness::RelParticiple
        && f.tense == Some(Tense::Fut)
        && f.partnoun.is_none()
    {
        f.tense = Some(Tense::FutUm);
    }
    // the future neuter is always the -um form, passive included
    if f.finiteness == Finiteness::Finite
        && f.tense == Some(Tense::Fut)
        && f.png.map(|p| matches!(p, Png::P3sn | Png::P3pn)).unwrap_or(false)
        && f.passive
    {
        f.tense = Some(Tense::FutUm);
    }
    if let Some(pn) = &f.partnoun {
        if f.png.is_some() {
            return Err(VerbError::BadCombination(
                "participial nouns take case, not a terminal".into(),
            ));
        }
        if !matches!(pn.case, Case::Nom | Case::Acc | Case::Inst | Case::Dat | Case::Soc)
            || pn.case_allomorph != 0
        {
            return Err(VerbError::BadCombination(
                "participial nouns take the bare, accusative, instrumental, dative or sociative cells".into(),
            ));
        }
        return Ok(f);
    }
    if f.modal.is_some() {
        if f.finiteness != Finiteness::Finite
            || f.polarity != Polarity::Pos
            || f.tense.is_some()
            || f.png.is_some()
        {
            return Err(VerbError::BadCombination(
                "modal endings sit on the bare infinitive".into(),
            ));
        }
        return Ok(f);
    }
    match f.polarity {
        Polarity::NegIllai => {
            if f.png.is_some() || f.tense.is_some() {
                return Err(VerbError::BadCombination("இல்லை negation is tenseless".into()));
            }
        }
        Polarity::NegMaattu => {
            if f.png.map(archaic).unwrap_or(false) {
                return Err(VerbError::BadCombination(
                    "மாட்டு composes with the plain terminals".into(),
                ));
            }
        }
        Polarity::NegAa => {
            if f.finiteness == Finiteness::Finite {
                match f.png {
                    None => f.png = Some(Png::P3sn),
                    Some(Png::P3sn) => {}
                    Some(_) => {
                        return Err(VerbError::BadCombination(
                            "ஆ-negation is neuter; use மாட்டு or இல்லை".into(),
                        ))
                    }
                }
            } else if f.finiteness != Finiteness::Imperative && f.png.is_some() {
                return Err(VerbError::BadCombination(
                    "only negative imperatives carry a person".into(),
                ));
            }
        }
        Polarity::Pos => {
            let png_ok = f.finiteness == Finiteness::Finite;
            if f.png.is_some() && !png_ok {
                return Err(VerbError::BadCombination(
                    "terminals attach to finite forms".into(),
                ));
            }
        }
    }
    if f.passive && f.finiteness != Finiteness::Finite {
        return Err(VerbError::BadCombination("passives are finite here".into()));
    }
    if f.euphonic_an {
        let plain_finite = f.finiteness == Finiteness::Finite
            && f.polarity == Polarity::Pos
            && !f.passive
            && f.modal.is_none()
            && f.tense != Some(Tense::FutUm);
        if !plain_finite || f.png.map(archaic).unwrap_or(true) {
            return Err(VerbError::BadCombination(
                "the euphonic அன் sits between a tense stem and a plain terminal".into(),
            ));
        }
    }
    Ok(f)
}

/// Conjugate a single verbal unit.
pub fn conjugate(entry: &LexEntry, features: &VerbFeatures) -> Result<Analysis, VerbError> {
    let features = validate(features)?;
    let mut stem = VerbStem::of(entry)?;
    if features.causative {
        stem = stem.causativize();
    }
    let chain = conjugate_stem(&stem, &features)?;
    finish_unit(entry, &stem, &features, chain)
}

fn finish_unit(
    entry: &LexEntry,
    _stem: &VerbStem,
    features: &VerbFeatures,
    mut chain: Chain,
) -> Result<Analysis, VerbError> {
    if let Some(augment) = features.augment {
        let ok_plain = matches!(features.finiteness, Finiteness::Infinitive | Finiteness::Vpart);
        let ok_partnoun = features
            .partnoun
            .as_ref()
            .map(|pn| matches!(pn.case, Case::Acc | Case::Dat))
            .unwrap_or(false);
        if !(ok_plain || ok_partnoun) {
            return Err(VerbError::AugmentNotAllowed);
        }
        sandhi::external_augment(chain.word(), augment)?;
        chain.apply(sandhi::AUG, &augment.as_word(), augment.tag());
    }
    if let Some(c) = features.clitic {
        let joined = clitic::attach(chain.word(), c)?;
        chain.apply(joined.rule, &c.form(), c.tag());
    }
    let (word, morphs, rules) = chain.finish();
    Ok(Analysis {
        lemma: entry.lemma.text(),
        pos: Pos::Verb,
        tag: features.tag(),
        features: Features::Verb(features.clone()),
        segmentation: morphs,
        rules_fired: rules,
        surface: word.text(),
        rationality: None,
    })
}

fn conjugate_stem(stem: &VerbStem, features: &VerbFeatures) -> Result<Chain, VerbError> {
    if features.passive {
        return passive_chain(stem, features);
    }
    match features.polarity {
        Polarity::Pos => {}
        Polarity::NegAa => return neg_aa_chain(stem, features),
        Polarity::NegMaattu => return neg_maattu_chain(stem, features),
        Polarity::NegIllai => {
            if features.tense.is_some() {
                return Err(VerbError::BadCombination(
                    "இல்லை negation is tenseless".into(),
                ));
            }
            let mut chain = inf_base_chain(stem);
            join_inf_vowel(stem, &mut chain, &w("அ"), "inf");
            chain.join(&w("இல்லை"), "neg_illai", JoinOpts::default());
            return Ok(chain);
        }
    }
    if let Some(modal) = features.modal {
        let mut chain = inf_base_chain(stem);
        join_inf_vowel(stem, &mut chain, &w("அ"), "inf");
        chain.join(&modal.form(), modal.tag(), JoinOpts::default());
        return Ok(chain);
    }
    if let Some(pn) = &features.partnoun {
        return partnoun_chain(stem, features, pn);
    }
    match features.finiteness {
        Finiteness::Finite => {
            let tense = features.tense.ok_or_else(|| {
                VerbError::BadCombination("finite forms need a tense".into())
            })?;
            if tense == Tense::FutUm {
                if features.png.map(|p| !matches!(p, Png::P3sn | Png::P3pn)).unwrap_or(false) {
                    return Err(VerbError::BadCombination(
                        "the -um future is neuter only".into(),
                    ));
                }
                return futum_chain(stem);
            }
            let png = features.png.ok_or(VerbError::NeedsPng)?;
            if tense == Tense::Fut && matches!(png, Png::P3sn | Png::P3pn) {
                return Err(VerbError::FutNeuter);
            }
            let mut chain =
                if tense == Tense::Past && uses_i_past(stem) && png == Png::P3sn {
                    class5_i_chain(stem)?
                } else {
                    tense_chain(stem, tense, features.pres_allomorph)?
                };
            // இன்-past haplology: the 3pn ending shares the ன் (வாங்கின)
            let haplology = tense == Tense::Past
                && png == Png::P3pn
                && stem.irregular.is_none()
                && stem.class == VerbClass::C5;
            if features.euphonic_an {
                if haplology {
                    return Err(VerbError::BadCombination(
                        "the euphonic அன் is swallowed by the இன்-past neuter plural".into(),
                    ));
                }
                chain.join(&w("அன்"), "euph_an", JoinOpts::default());
            }
            let suffix = if haplology { w("அ") } else { png.suffix() };
            chain.join(&suffix, png.tag(), JoinOpts::default());
            Ok(chain)
        }
        Finiteness::Infinitive => {
            let mut chain = inf_base_chain(stem);
            join_inf_vowel(stem, &mut chain, &w("அ"), "inf");
            Ok(chain)
        }
        Finiteness::Vpart => vpart_chain(stem),
        Finiteness::Conditional => {
            let mut chain = tense_chain(stem, Tense::Past, 0)?;
            chain.join(&w("ஆல்"), "cond", JoinOpts::default());
            Ok(chain)
        }
        Finiteness::RelParticiple => {
            let tense = features.tense.ok_or_else(|| {
                VerbError::BadCombination("relative participles carry a tense".into())
            })?;
            rel_chain(stem, tense, features.pres_allomorph)
        }
        Finiteness::VerbalNoun => {
            let tense = features.tense.ok_or_else(|| {
                VerbError::BadCombination("verbal nouns carry a tense".into())
            })?;
            let mut chain = if tense == Tense::Past && uses_i_past(stem) {
                class5_i_chain(stem)?
            } else if tense == Tense::FutUm {
                return Err(VerbError::BadCombination(
                    "the -um future has no verbal noun".into(),
                ));
            } else {
                tense_chain(stem, tense, features.pres_allomorph)?
            };
            chain.join(&w("அது"), "vn", JoinOpts::default());
            Ok(chain)
        }
        Finiteness::Imperative => {
            let chain = stem.chain();
            Ok(chain)
        }
        Finiteness::Hortative => {
            let mut chain = inf_base_chain(stem);
            join_inf_vowel(stem, &mut chain, &w("அ"), "inf");
            chain.join(&w("ட்டும்"), "hort", JoinOpts::default());
            Ok(chain)
        }
    }
}

fn rel_chain(stem: &VerbStem, tense: Tense, pres_allomorph: u8) -> Result<Chain, VerbError> {
    match tense {
        Tense::FutUm | Tense::Fut => futum_chain(stem),
        Tense::Past if uses_i_past(stem) => {
            let mut chain = class5_i_chain(stem)?;
            chain.join(&w("அ"), "rel", JoinOpts::default());
            Ok(chain)
        }
        _ => {
            let mut chain = tense_chain(stem, tense, pres_allomorph)?;
            chain.join(&w("அ"), "rel", JoinOpts::default());
            Ok(chain)
        }
    }
}

fn futum_chain(stem: &VerbStem) -> Result<Chain, VerbError> {
    let mut chain = inf_base_chain(stem);
    join_inf_vowel(stem, &mut chain, &w("உம்"), "fut_um");
    Ok(chain)
}

fn neg_aa_chain(stem: &VerbStem, features: &VerbFeatures) -> Result<Chain, VerbError> {
    let mut chain = inf_base_chain(stem);
    match features.finiteness {
        Finiteness::Finite => {
            // habitual/neuter ஆது
            if features.png.map(|p| !matches!(p, Png::P3sn | Png::P3pn)).unwrap_or(false) {
                return Err(VerbError::BadCombination(
                    "ஆ-negation is neuter; use மாட்டு or இல்லை".into(),
                ));
            }
            join_inf_vowel(stem, &mut chain, &w("ஆது"), "neg_aa");
        }
        Finiteness::RelParticiple => join_inf_vowel(stem, &mut chain, &w("ஆத"), "neg_aa"),
        Finiteness::Vpart => join_inf_vowel(stem, &mut chain, &w("ஆமல்"), "neg_aa"),
        Finiteness::Conditional => {
            join_inf_vowel(stem, &mut chain, &w("ஆ"), "neg_aa");
            chain.join(&w("விட்ட்"), "விடு.past", JoinOpts::default());
            chain.join(&w("ஆல்"), "cond", JoinOpts::default());
        }
        Finiteness::Imperative => match features.png {
            Some(Png::P2p) => join_inf_vowel(stem, &mut chain, &w("ஆதீர்கள்"), "neg_aa"),
            _ => join_inf_vowel(stem, &mut chain, &w("ஆதே"), "neg_aa"),
        },
        _ => {
            return Err(VerbError::BadCombination(
                "ஆ-negation covers finite-neuter, relative, participle, conditional and imperative forms".into(),
            ))
        }
    }
    Ok(chain)
}

fn neg_maattu_chain(stem: &VerbStem, features: &VerbFeatures) -> Result<Chain, VerbError> {
    if features.tense.is_some() {
        return Err(VerbError::MaattuTense);
    }
    let png = features.png.ok_or(VerbError::NeedsPng)?;
    let mut chain = inf_base_chain(stem);
    join_inf_vowel(stem, &mut chain, &w("அ"), "inf");
    chain.join(&w("மாட்டு"), "neg_maattu", JoinOpts::default());
    chain.join(&png.suffix(), png.tag(), JoinOpts::default());
    Ok(chain)
}

fn passive_chain(stem: &VerbStem, features: &VerbFeatures) -> Result<Chain, VerbError> {
    let tense = features.tense.ok_or_else(|| {
        VerbError::BadCombination("passives carry the tense of படு".into())
    })?;
    let mut chain = inf_base_chain(stem);
    join_inf_vowel(stem, &mut chain, &w("அ"), "inf");
    // படு geminates after the infinitive's final அ
    let padu = padu_stem(tense, features.pres_allomorph);
    chain.apply(sandhi::AUG, &w("ப்"), "pass");
    chain.join(&padu.0, &padu.1, JoinOpts::default());
    if tense == Tense::FutUm {
        return Ok(chain);
    }
    let png = features.png.ok_or(VerbError::NeedsPng)?;
    chain.join(&png.suffix(), png.tag(), JoinOpts::default());
    Ok(chain)
}

fn padu_stem(tense: Tense, pres_allomorph: u8) -> (Word, String) {
    match tense {
        Tense::Past => (w("பட்ட்"), "படு.past".into()),
        Tense::Pres => (
            if pres_allomorph == 0 { w("படுகிற்") } else { w("படுகின்ற்") },
            "படு.pres".into(),
        ),
        Tense::Fut => (w("படுவ்"), "படு.fut".into()),
        Tense::FutUm => (w("படும்"), "படு.fut_um".into()),
    }
}

fn partnoun_chain(
    stem: &VerbStem,
    features: &VerbFeatures,
    pn: &PartNoun,
) -> Result<Chain, VerbError> {
    let tense = features.tense.ok_or_else(|| {
        VerbError::BadCombination("participial nouns carry a tense".into())
    })?;
    let mut chain = match tense {
        Tense::Fut | Tense::FutUm => tense_chain(stem, Tense::Fut, 0)?,
        Tense::Past if uses_i_past(stem) => class5_i_chain(stem)?,
        _ => tense_chain(stem, tense, features.pres_allomorph)?,
    };
    if features.polarity == Polarity::NegAa {
        chain = inf_base_chain(stem);
        join_inf_vowel(stem, &mut chain, &w("ஆத்"), "neg_aa");
    }
    chain.join(&pn.pronominal.form(), pn.pronominal.tag(), JoinOpts::default());
    if pn.case != Case::Nom {
        let allomorph = pn
            .case
            .allomorphs()
            .get(pn.case_allomorph as usize)
            .ok_or_else(|| VerbError::BadCombination("bad participial case".into()))?;
        chain.join(
            &w(allomorph),
            &pn.case.allomorph_tag(pn.case_allomorph),
            JoinOpts::default(),
        );
    }
    Ok(chain)
}

// ---------------------------------------------------------------------------
// chains

/// Table III auxiliary inventory: which form the preceding verb takes.
/// விடு and the light verbs accept both shapes the corpus shows.
pub fn aux_required_form(lemma: &str) -> Option<&'static [Finiteness]> {
    const VPART: &[Finiteness] = &[Finiteness::Vpart];
    const INF: &[Finiteness] = &[Finiteness::Infinitive];
    const BOTH: &[Finiteness] = &[Finiteness::Vpart, Finiteness::Infinitive];
    Some(match lemma {
        "இரு" | "கொண்டிரு" => VPART,
        "விடு" | "முடி" => BOTH,
        "போ" | "போடு" | "தள்ளு" | "தீர்" | "தொலை" => VPART,
        "இடு" | "கொடு" | "பார்" | "வா" => BOTH,
        "வேண்டு" | "கூடு" => INF,
        "பண்ணு" | "செய்" | "வை" => INF,
        "படு" | "பெறு" => INF,
        _ => return None,
    })
}

pub fn aux_kind_name(lemma: &str) -> &'static str {
    match lemma {
        "இரு" | "கொண்டிரு" | "விடு" | "முடி" => "aspectual verb",
        "போ" | "போடு" | "தள்ளு" | "தீர்" | "தொலை" => "attitude verb",
        "இடு" | "கொடு" | "பார்" | "வா" => "light verb",
        "வேண்டு" | "கூடு" => "modal verb",
        "பண்ணு" | "செய்" | "வை" => "causative verb",
        "படு" | "பெறு" => "passiviser",
        _ => "verb",
    }
}

/// Compose a verb chain: the main unit plus auxiliaries, each unit in the
/// form its successor requires, the last carrying the functional load.
pub fn compose_chain(
    lexicon: &Lexicon,
    units: &[(String, VerbFeatures)],
) -> Result<Analysis, VerbError> {
    assert!(!units.is_empty());
    let mut rendered: Vec<Analysis> = Vec::new();
    for (i, (lemma, features)) in units.iter().enumerate() {
        let entry = lexicon
            .lookup_pos(lemma, Pos::Verb)
            .next()
            .ok_or_else(|| VerbError::UnknownAux(lemma.clone()))?;
        if i + 1 < units.len() {
            // non-final units must be participles or infinitives, and must
            // satisfy the next auxiliary's Table III requirement
            let next = &units[i + 1].0;
            let required = aux_required_form(next)
                .ok_or_else(|| VerbError::UnknownAux(next.clone()))?;
            if !required.contains(&features.finiteness) {
                return Err(VerbError::ChainForm {
                    aux: next.clone(),
                    kind: aux_kind_name(next),
                    required: if required.contains(&Finiteness::Vpart) {
                        "verbal participle"
                    } else {
                        "infinitive"
                    },
                    found: match features.finiteness {
                        Finiteness::Vpart => "verbal participle",
                        Finiteness::Infinitive => "infinitive",
                        _ => "finite form",
                    },
                });
            }
        }
        rendered.push(conjugate(entry, features)?);
    }
    if rendered.len() == 1 {
        return Ok(rendered.pop().expect("one unit"));
    }

    // stitch units together; augments on the left unit make the junction
    let mut word = rendered[0].surface_word();
    let mut morphs = rendered[0].segmentation.clone();
    let mut rules = rendered[0].rules_fired.clone();
    for unit in &rendered[1..] {
        let right = unit.surface_word();
        let joined = sandhi::join(&word, &right, JoinOpts::default());
        word = joined.word;
        rules.push(joined.rule.to_string());
        morphs.extend(unit.segmentation.iter().cloned());
        rules.extend(unit.rules_fired.iter().cloned());
    }

    let mut tag = format!("v.{}", units[0].1.tag_body());
    for (lemma, features) in &units[1..] {
        tag.push('+');
        tag.push_str(lemma);
        tag.push('.');
        tag.push_str(&features.tag_body());
    }
    Ok(Analysis {
        lemma: units[0].0.clone(),
        pos: Pos::Verb,
        tag,
        features: Features::VerbChain(units.to_vec()),
        segmentation: morphs,
        rules_fired: rules,
        surface: word.text(),
        rationality: None,
    })
}

// ---------------------------------------------------------------------------
// paradigm

/// Order of the finite-cell bitmask: one bit per PNG key.
const FIN_ORDER: [Png; 15] = [
    Png::P1s,
    Png::P1p,
    Png::P2s,
    Png::P2h,
    Png::P2p,
    Png::P3sm,
    Png::P3sf,
    Png::P3sh,
    Png::P3pe,
    Png::P3sn,
    Png::P3pn,
    Png::Arch3smAnan,
    Png::Arch3sfAnal,
    Png::ArchAn,
    Png::ArchAr,
];

/// Order of the participial-noun case-cell bitmask.
/// bare, acc(+4 augments), inst, dat(+4 augments), soc.
const PN_CELLS: [(Case, Option<Augment>); 13] = [
    (Case::Nom, None),
    (Case::Acc, None),
    (Case::Acc, Some(Augment::K)),
    (Case::Acc, Some(Augment::C)),
    (Case::Acc, Some(Augment::T)),
    (Case::Acc, Some(Augment::P)),
    (Case::Inst, None),
    (Case::Dat, None),
    (Case::Dat, Some(Augment::K)),
    (Case::Dat, Some(Augment::C)),
    (Case::Dat, Some(Augment::T)),
    (Case::Dat, Some(Augment::P)),
    (Case::Soc, None),
];

struct FamilyRecipe {
    causative: bool,
    tense: Tense,
    pres_allomorph: u8,
    fin: u16,
    rel: bool,
    verbal_noun: bool,
    /// Participial-noun cell masks per pronominal, in [`Pronominal::ALL`] order.
    pn: [u16; 6],
}

/// The conjugational cells the paradigm enumerates, mirroring the cells the
/// reference corpus attests per tense family. Any other cell remains
/// reachable through explicit feature bundles.
const RECIPE: [FamilyRecipe; 8] = [
    FamilyRecipe { causative: false, tense: Tense::Past, pres_allomorph: 0, fin: 0x1FFF, rel: true, verbal_noun: false, pn: [0x1FBF, 0x1FFF, 0x1EFF, 0x1FFF, 0x1, 0x1] },
    FamilyRecipe { causative: false, tense: Tense::Pres, pres_allomorph: 0, fin: 0x3FFF, rel: true, verbal_noun: false, pn: [0x1FFF, 0x1FFF, 0x1FFF, 0x1FFF, 0x1, 0x1] },
    FamilyRecipe { causative: false, tense: Tense::Pres, pres_allomorph: 1, fin: 0x3FFF, rel: true, verbal_noun: false, pn: [0x103F, 0x0, 0x1FCE, 0x1, 0x1, 0x0] },
    FamilyRecipe { causative: false, tense: Tense::Fut, pres_allomorph: 0, fin: 0x61FF, rel: false, verbal_noun: true, pn: [0x1FFF, 0x1C7F, 0x1FFF, 0x1FFF, 0x1, 0x1] },
    FamilyRecipe { causative: true, tense: Tense::Past, pres_allomorph: 0, fin: 0x1E84, rel: true, verbal_noun: false, pn: [0x1FFF, 0x1EFF, 0x1FFF, 0x1FFF, 0x1, 0x1] },
    FamilyRecipe { causative: true, tense: Tense::Pres, pres_allomorph: 0, fin: 0x3FFF, rel: true, verbal_noun: false, pn: [0x1FFF, 0x39, 0x0, 0x0, 0x1, 0x1] },
    FamilyRecipe { causative: true, tense: Tense::Pres, pres_allomorph: 1, fin: 0x37FF, rel: true, verbal_noun: false, pn: [0x1FBF, 0x1FFF, 0x1FFF, 0x1FFF, 0x1, 0x1] },
    FamilyRecipe { causative: true, tense: Tense::Fut, pres_allomorph: 0, fin: 0x21FF, rel: false, verbal_noun: false, pn: [0x1FBF, 0x1FFF, 0x0, 0x1, 0x1, 0x1] },
];

/// The canonical verbal paradigm: finite forms, relative participles,
/// participial nouns with their case grids, non-finite forms, the negation
/// series, modal compounds, and the causative block.
pub fn paradigm(entry: &LexEntry) -> Result<Vec<Analysis>, VerbError> {
    let mut out: Vec<Analysis> = Vec::new();
    let mut push = |analysis: Result<Analysis, VerbError>| -> Result<(), VerbError> {
        let analysis = analysis?;
        if !out.iter().any(|a| a.surface == analysis.surface && a.tag == analysis.tag) {
            out.push(analysis);
        }
        Ok(())
    };

    // bare lemma (imperative)
    push(conjugate(entry, &VerbFeatures::bare(Finiteness::Imperative)))?;
    // infinitive, bare and augmented
    push(conjugate(entry, &VerbFeatures::bare(Finiteness::Infinitive)))?;
    for augment in Augment::ALL {
        let mut f = VerbFeatures::bare(Finiteness::Infinitive);
        f.augment = Some(augment);
        push(conjugate(entry, &f))?;
    }
    // hortative and the modal compounds
    push(conjugate(entry, &VerbFeatures::bare(Finiteness::Hortative)))?;
    for modal in Modal::ALL {
        let mut f = VerbFeatures::bare(Finiteness::Finite);
        f.modal = Some(modal);
        push(conjugate(entry, &f))?;
    }
    {
        let mut f = VerbFeatures::bare(Finiteness::Finite);
        f.polarity = Polarity::NegIllai;
        push(conjugate(entry, &f))?;
    }
    // the ஆ-negation series
    for (finiteness, png) in [
        (Finiteness::Finite, Some(Png::P3sn)),
        (Finiteness::RelParticiple, None),
        (Finiteness::Vpart, None),
        (Finiteness::Conditional, None),
        (Finiteness::Imperative, None),
        (Finiteness::Imperative, Some(Png::P2p)),
    ] {
        let mut f = VerbFeatures::bare(finiteness);
        f.polarity = Polarity::NegAa;
        f.png = png;
        push(conjugate(entry, &f))?;
    }
    // past participle, with and without the inclusive உம், and conditional
    push(conjugate(entry, &VerbFeatures::bare(Finiteness::Vpart)))?;
    {
        let mut f = VerbFeatures::bare(Finiteness::Vpart);
        f.clitic = Some(Clitic::Um);
        push(conjugate(entry, &f))?;
    }
    push(conjugate(entry, &VerbFeatures::bare(Finiteness::Conditional)))?;
    // future -um form, plain and causative
    push(conjugate(entry, &VerbFeatures::finite(Tense::FutUm, Png::P3sn)))?;
    {
        let mut f = VerbFeatures::finite(Tense::FutUm, Png::P3sn);
        f.causative = true;
        push(conjugate(entry, &f))?;
    }

    for family in &RECIPE {
        for (bit, png) in FIN_ORDER.iter().enumerate() {
            if family.fin & (1 << bit) == 0 {
                continue;
            }
            let mut f = VerbFeatures::finite(family.tense, *png);
            f.pres_allomorph = family.pres_allomorph;
            f.causative = family.causative;
            push(conjugate(entry, &f))?;
        }
        if family.rel {
            let mut f = VerbFeatures::bare(Finiteness::RelParticiple);
            f.tense = Some(family.tense);
            f.pres_allomorph = family.pres_allomorph;
            f.causative = family.causative;
            push(conjugate(entry, &f))?;
        }
        if family.verbal_noun {
            let mut f = VerbFeatures::bare(Finiteness::VerbalNoun);
            f.tense = Some(family.tense);
            f.causative = family.causative;
            push(conjugate(entry, &f))?;
        }
        for (pi, pronominal) in Pronominal::ALL.iter().enumerate() {
            let mask = family.pn[pi];
            for (bit, (case, augment)) in PN_CELLS.iter().enumerate() {
                if mask & (1 << bit) == 0 {
                    continue;
                }
                let mut f = VerbFeatures::bare(Finiteness::RelParticiple);
                f.tense = Some(family.tense);
                f.pres_allomorph = family.pres_allomorph;
                f.causative = family.causative;
                f.partnoun = Some(PartNoun {
                    pronominal: *pronominal,
                    case: *case,
                    case_allomorph: 0,
                });
                f.augment = *augment;
                push(conjugate(entry, &f))?;
            }
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// analysis

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum StemKind {
    Lemma,
    Past,
    Pres(u8),
    Fut,
    InfBase,
    Vpart,
}

/// Precomputed attachment stems for every verb in a lexicon.
pub struct VerbIndex {
    items: Vec<(String, usize, bool, StemKind)>,
}

impl VerbIndex {
    pub fn build(lexicon: &Lexicon) -> Self {
        let mut items = Vec::new();
        for (idx, entry) in lexicon.entries().iter().enumerate() {
            if entry.pos != Pos::Verb {
                continue;
            }
            let Ok(base) = VerbStem::of(entry) else { continue };
            for causative in [false, true] {
                let stem = if causative { base.causativize() } else { base.clone() };
                let mut add = |word: Word, kind: StemKind| {
                    items.push((word.text(), idx, causative, kind));
                };
                if !causative {
                    add(stem.base.clone(), StemKind::Lemma);
                }
                if let Ok(chain) = tense_chain(&stem, Tense::Past, 0) {
                    add(chain.word().clone(), StemKind::Past);
                }
                for allo in 0..2u8 {
                    if let Ok(chain) = tense_chain(&stem, Tense::Pres, allo) {
                        add(chain.word().clone(), StemKind::Pres(allo));
                    }
                }
                if let Ok(chain) = tense_chain(&stem, Tense::Fut, 0) {
                    add(chain.word().clone(), StemKind::Fut);
                }
                add(inf_base_chain(&stem).word().clone(), StemKind::InfBase);
                if let Ok(chain) = vpart_chain(&stem) {
                    add(chain.word().clone(), StemKind::Vpart);
                }
            }
        }
        VerbIndex { items }
    }

    fn matching(&self, text: &str) -> impl Iterator<Item = (usize, bool, StemKind)> + '_ {
        let text = text.to_string();
        self.items
            .iter()
            .filter(move |(stem, _, _, _)| *stem == text)
            .map(|(_, idx, caus, kind)| (*idx, *caus, *kind))
    }
}

/// All lexicon-consistent verb readings of one token, chains included.
pub fn analyze(surface: &Word, lexicon: &Lexicon, enable_ee: bool) -> Vec<Analysis> {
    let index = VerbIndex::build(lexicon);
    analyze_with_index(surface, lexicon, &index, enable_ee)
}

pub fn analyze_with_index(
    surface: &Word,
    lexicon: &Lexicon,
    index: &VerbIndex,
    enable_ee: bool,
) -> Vec<Analysis> {
    let mut out: Vec<Analysis> = Vec::new();
    let target = surface.text();
    for split in clitic::strip(surface, enable_ee) {
        let mut bases = vec![(split.stem.clone(), None)];
        if let Some(aug) = sandhi::final_augment(&split.stem) {
            bases.push((split.stem.slice(0, split.stem.len() - 1), Some(aug)));
        }
        for (base, augment) in bases {
            for units in parse_chain(&base, lexicon, index, 0) {
                let units = fold_passive(units);
                let mut units = units;
                if let Some(first) = units.first_mut() {
                    first.1.augment = augment.or(first.1.augment);
                }
                if units.len() == 1 {
                    units[0].1.clitic = split.clitic;
                } else if let Some(last) = units.last_mut() {
                    last.1.clitic = split.clitic;
                }
                if let Ok(analysis) = compose_chain(lexicon, &units) {
                    if analysis.surface == target
                        && !out.iter().any(|a| a.tag == analysis.tag && a.lemma == analysis.lemma)
                    {
                        out.push(analysis);
                    }
                }
            }
        }
    }
    out.sort_by(|a, b| a.tag.cmp(&b.tag).then_with(|| a.lemma.cmp(&b.lemma)));
    out
}

/// Parse a token as one verbal unit or a chain of up to four.
fn parse_chain(
    word: &Word,
    lexicon: &Lexicon,
    index: &VerbIndex,
    depth: usize,
) -> Vec<Vec<(String, VerbFeatures)>> {
    let mut out: Vec<Vec<(String, VerbFeatures)>> = Vec::new();
    for (lemma, features) in parse_unit(word, lexicon, index) {
        out.push(vec![(lemma, features)]);
    }
    if depth >= 3 {
        return out;
    }
    for k in 1..word.len() {
        let mut rights: Vec<Word> = vec![word.slice(k, word.len())];
        let boundary = word.chars()[k];
        if let (Some(_), Some(v)) = (boundary.base(), boundary.vowel()) {
            // the junction may hide inside this composite
            if let Ok(vl) = crate::script::TamilChar::vowel_letter(v) {
                let mut split = Word::new();
                split.push(vl);
                for c in &word.chars()[k + 1..] {
                    split.push(*c);
                }
                rights.push(split);
            }
        }
        for right in rights {
            let tails = parse_chain(&right, lexicon, index, depth + 1);
            if tails.is_empty() {
                continue;
            }
            let mut lefts: Vec<(Word, Option<Augment>)> = Vec::new();
            for candidate in sandhi::un_join(word, &right) {
                if candidate.rule == sandhi::PLAIN || candidate.rule == sandhi::FUSE
                    || candidate.rule == sandhi::UDEL
                {
                    let base = candidate.word;
                    if let Some(aug) = sandhi::final_augment(&base) {
                        lefts.push((base.slice(0, base.len() - 1), Some(aug)));
                    }
                    lefts.push((base, None));
                }
            }
            for (left, augment) in lefts {
                for (lemma, mut features) in parse_unit(&left, lexicon, index) {
                    if !matches!(features.finiteness, Finiteness::Vpart | Finiteness::Infinitive)
                        || features.clitic.is_some()
                    {
                        continue;
                    }
                    features.augment = augment;
                    for tail in &tails {
                        // the unit after this one must be a known auxiliary
                        if aux_required_form(&tail[0].0).is_none() && tail[0].0 != "படு" {
                            continue;
                        }
                        let mut units = vec![(lemma.clone(), features.clone())];
                        units.extend(tail.iter().cloned());
                        if units.len() <= 4 {
                            out.push(units);
                        }
                    }
                }
            }
        }
    }
    out
}

/// Fold a trailing படு unit into a passive feature on its host.
fn fold_passive(mut units: Vec<(String, VerbFeatures)>) -> Vec<(String, VerbFeatures)> {
    if units.len() >= 2 {
        let last = units.last().expect("non-empty");
        if last.0 == "படு"
            && last.1.finiteness == Finiteness::Finite
            && !last.1.passive
        {
            let (tense, png, allo) = (last.1.tense, last.1.png, last.1.pres_allomorph);
            let host_idx = units.len() - 2;
            if units[host_idx].1.finiteness == Finiteness::Infinitive
                && units[host_idx].1.augment == Some(Augment::P)
            {
                units.pop();
                let host = &mut units[host_idx].1;
                host.finiteness = Finiteness::Finite;
                host.passive = true;
                host.tense = tense;
                host.png = png;
                host.pres_allomorph = allo;
                host.augment = None;
            }
        }
    }
    units
}

fn tense_of(kind: StemKind) -> Option<(Tense, u8)> {
    match kind {
        StemKind::Past => Some((Tense::Past, 0)),
        StemKind::Pres(a) => Some((Tense::Pres, a)),
        StemKind::Fut => Some((Tense::Fut, 0)),
        _ => None,
    }
}

/// What a word-final suffix pattern means, interpreted per stem kind.
#[derive(Debug, Clone, Copy)]
enum Ending {
    Terminal(Png),
    /// Euphonic அன் fused with a plain terminal.
    EuphAn(Png),
    /// அ: relative participle on a tensed stem, the infinitive on the
    /// infinitive base, and the haplological past 3pn (வாங்கின).
    A,
    Cond,
    FutUm,
    Hort,
    NegAa(Finiteness, Option<Png>),
    Modal(Modal),
    NegIllai,
    Maattu(Png),
    PartNoun(Pronominal, Case),
}

fn interpret(kind: StemKind, ending: Ending) -> Vec<VerbFeatures> {
    match ending {
        Ending::Terminal(png) => match kind {
            StemKind::Past | StemKind::Pres(_) | StemKind::Fut => {
                let (tense, allo) = tense_of(kind).expect("tensed");
                let mut v = Vec::new();
                if png == Png::P3sn {
                    // the -அது ending is also the verbal noun (நடப்பது)
                    let mut vn = VerbFeatures::bare(Finiteness::VerbalNoun);
                    vn.tense = Some(tense);
                    vn.pres_allomorph = allo;
                    v.push(vn);
                }
                if tense == Tense::Fut && matches!(png, Png::P3sn | Png::P3pn) {
                    return v; // finite future neuter is the -um form
                }
                let mut f = VerbFeatures::finite(tense, png);
                f.pres_allomorph = allo;
                v.push(f);
                v
            }
            // class-5 -இ participle plus glide: வாங்கியது
            StemKind::Vpart if png == Png::P3sn => {
                let f = VerbFeatures::finite(Tense::Past, Png::P3sn);
                let mut vn = VerbFeatures::bare(Finiteness::VerbalNoun);
                vn.tense = Some(Tense::Past);
                vec![f, vn]
            }
            _ => Vec::new(),
        },
        Ending::EuphAn(png) => match kind {
            StemKind::Past | StemKind::Pres(_) | StemKind::Fut => {
                let (tense, allo) = tense_of(kind).expect("tensed");
                if tense == Tense::Fut && matches!(png, Png::P3sn | Png::P3pn) {
                    return Vec::new();
                }
                let mut f = VerbFeatures::finite(tense, png);
                f.pres_allomorph = allo;
                f.euphonic_an = true;
                vec![f]
            }
            _ => Vec::new(),
        },
        Ending::A => match kind {
            StemKind::Past | StemKind::Pres(_) => {
                let (tense, allo) = tense_of(kind).expect("tensed");
                let mut rel = VerbFeatures::bare(Finiteness::RelParticiple);
                rel.tense = Some(tense);
                rel.pres_allomorph = allo;
                let mut v = vec![rel];
                if kind == StemKind::Past {
                    v.push(VerbFeatures::finite(Tense::Past, Png::P3pn));
                }
                v
            }
            StemKind::Vpart => {
                let mut rel = VerbFeatures::bare(Finiteness::RelParticiple);
                rel.tense = Some(Tense::Past);
                vec![rel]
            }
            StemKind::InfBase => vec![VerbFeatures::bare(Finiteness::Infinitive)],
            _ => Vec::new(),
        },
        Ending::Cond => match kind {
            StemKind::Past => vec![VerbFeatures::bare(Finiteness::Conditional)],
            _ => Vec::new(),
        },
        Ending::FutUm => match kind {
            StemKind::InfBase => {
                let finite = VerbFeatures::finite(Tense::FutUm, Png::P3sn);
                let mut rel = VerbFeatures::bare(Finiteness::RelParticiple);
                rel.tense = Some(Tense::FutUm);
                vec![finite, rel]
            }
            _ => Vec::new(),
        },
        Ending::Hort => match kind {
            StemKind::InfBase => vec![VerbFeatures::bare(Finiteness::Hortative)],
            _ => Vec::new(),
        },
        Ending::NegAa(finiteness, png) => match kind {
            StemKind::InfBase => {
                let mut f = VerbFeatures::bare(finiteness);
                f.polarity = Polarity::NegAa;
                f.png = png;
                vec![f]
            }
            _ => Vec::new(),
        },
        Ending::Modal(modal) => match kind {
            StemKind::InfBase => {
                let mut f = VerbFeatures::bare(Finiteness::Finite);
                f.modal = Some(modal);
                vec![f]
            }
            _ => Vec::new(),
        },
        Ending::NegIllai => match kind {
            StemKind::InfBase => {
                let mut f = VerbFeatures::bare(Finiteness::Finite);
                f.polarity = Polarity::NegIllai;
                vec![f]
            }
            _ => Vec::new(),
        },
        Ending::Maattu(png) => match kind {
            StemKind::InfBase => {
                let mut f = VerbFeatures::bare(Finiteness::Finite);
                f.polarity = Polarity::NegMaattu;
                f.png = Some(png);
                vec![f]
            }
            _ => Vec::new(),
        },
        Ending::PartNoun(pronominal, case) => match kind {
            StemKind::Past | StemKind::Pres(_) | StemKind::Fut | StemKind::Vpart => {
                let (tense, allo) = match kind {
                    StemKind::Vpart => (Tense::Past, 0),
                    _ => tense_of(kind).expect("tensed"),
                };
                let mut f = VerbFeatures::bare(Finiteness::RelParticiple);
                f.tense = Some(tense);
                f.pres_allomorph = allo;
                f.partnoun = Some(PartNoun { pronominal, case, case_allomorph: 0 });
                vec![f]
            }
            _ => Vec::new(),
        },
    }
}

fn ending_patterns() -> &'static [(Word, Ending)] {
    use std::sync::OnceLock;
    static PATTERNS: OnceLock<Vec<(Word, Ending)>> = OnceLock::new();
    PATTERNS.get_or_init(|| {
        let mut patterns: Vec<(Word, Ending)> = Vec::new();
        for png in Png::ALL {
            if png == Png::P3ph {
                continue; // same surface as 3pe
            }
            patterns.push((png.suffix(), Ending::Terminal(png)));
        }
        // euphonic அன் before a plain terminal (நடந்தனான்)
        for png in [
            Png::P1s,
            Png::P1p,
            Png::P2s,
            Png::P2h,
            Png::P2p,
            Png::P3sm,
            Png::P3sf,
            Png::P3sh,
            Png::P3pe,
            Png::P3sn,
            Png::P3pn,
        ] {
            let pattern = sandhi::join(&w("அன்"), &png.suffix(), JoinOpts::default()).word;
            patterns.push((pattern, Ending::EuphAn(png)));
        }
        patterns.push((w("அ"), Ending::A));
        patterns.push((w("ஆல்"), Ending::Cond));
        patterns.push((w("உம்"), Ending::FutUm));
        patterns.push((w("அட்டும்"), Ending::Hort));
        patterns.push((w("ஆது"), Ending::NegAa(Finiteness::Finite, Some(Png::P3sn))));
        patterns.push((w("ஆத"), Ending::NegAa(Finiteness::RelParticiple, None)));
        patterns.push((w("ஆமல்"), Ending::NegAa(Finiteness::Vpart, None)));
        patterns.push((w("ஆதே"), Ending::NegAa(Finiteness::Imperative, None)));
        patterns.push((w("ஆதீர்கள்"), Ending::NegAa(Finiteness::Imperative, Some(Png::P2p))));
        patterns.push((w("ஆவிட்டால்"), Ending::NegAa(Finiteness::Conditional, None)));
        patterns.push((w("அமுடியும்"), Ending::Modal(Modal::Mudiyum)));
        patterns.push((w("அலாம்"), Ending::Modal(Modal::Laam)));
        patterns.push((w("அவேண்டும்"), Ending::Modal(Modal::Veendum)));
        patterns.push((w("அலாகாது"), Ending::Modal(Modal::Laakaathu)));
        patterns.push((w("அவில்லை"), Ending::NegIllai));
        for png in [
            Png::P1s,
            Png::P1p,
            Png::P2s,
            Png::P2h,
            Png::P2p,
            Png::P3sm,
            Png::P3sf,
            Png::P3sh,
            Png::P3pe,
        ] {
            let maattu = sandhi::join(&w("மாட்டு"), &png.suffix(), JoinOpts::default()).word;
            patterns.push((w("அ").concat(&maattu), Ending::Maattu(png)));
        }
        for pronominal in Pronominal::ALL {
            patterns.push((pronominal.form(), Ending::PartNoun(pronominal, Case::Nom)));
            for case in [Case::Acc, Case::Inst, Case::Dat, Case::Soc] {
                let case_word = w(case.allomorphs()[0]);
                let pattern =
                    sandhi::join(&pronominal.form(), &case_word, JoinOpts::default()).word;
                patterns.push((pattern, Ending::PartNoun(pronominal, case)));
            }
        }
        patterns
    })
}

/// One verbal unit: stem match plus ending parse; the caller validates
/// every candidate by regeneration.
fn parse_unit(word: &Word, lexicon: &Lexicon, index: &VerbIndex) -> Vec<(String, VerbFeatures)> {
    let mut out: Vec<(String, VerbFeatures)> = Vec::new();
    let mut push = |idx: usize, caus: bool, mut f: VerbFeatures| {
        f.causative = caus;
        let entry = &lexicon.entries()[idx];
        out.push((entry.lemma.text(), f));
    };

    // bare stems
    for (idx, caus, kind) in index.matching(&word.text()) {
        match kind {
            StemKind::Lemma if !caus => {
                push(idx, caus, VerbFeatures::bare(Finiteness::Imperative))
            }
            StemKind::Vpart => push(idx, caus, VerbFeatures::bare(Finiteness::Vpart)),
            _ => {}
        }
    }

    // suffix patterns over each stem kind
    for (suffix, ending) in ending_patterns() {
        for candidate in sandhi::un_join(word, suffix) {
            for (idx, caus, kind) in index.matching(&candidate.word.text()) {
                for f in interpret(kind, *ending) {
                    push(idx, caus, f);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexicon::Lexicon;

    fn lex() -> Lexicon {
        Lexicon::load(concat!(
            "நட\tverb\t12\t\t\twalk\n",
            "செய்\tverb\t1\t\t\tdo\n",
            "ஆள்\tverb\t2\t\t\trule\n",
            "கொல்\tverb\t3\t\t\tkill\n",
            "கடி\tverb\t4\t\t\tbite\n",
            "அஞ்சு\tverb\t5\t\t\tfear\n",
            "வாங்கு\tverb\t5\t\t\tbuy\n",
            "போ\tverb\t5\t\t\tgo\n",
            "அடு\tverb\t6.1\t\t\tcook\n",
            "விடு\tverb\t6.1\t\t\tleave\n",
            "நகு\tverb\t6.2\t\t\tlaugh\n",
            "உறு\tverb\t6.3\t\t\texperience\n",
            "பெறு\tverb\t6.3\t\t\tget\n",
            "உண்\tverb\t7\t\t\teat\n",
            "தின்\tverb\t8\t\t\teat\n",
            "கொள்\tverb\t9\t\t\thold\n",
            "நில்\tverb\t10\t\t\tstand\n",
            "அபகரி\tverb\t11\t\t\tusurp\n",
            "கொடு\tverb\t11\t\t\tgive\n",
            "இரு\tverb\t12\t\t\tbe\n",
            "கொண்டிரு\tverb\t12\t\t\tkeep on\n",
            "தெரி\tverb\t4\t\t\tknow\n",
            "வா\tverb\tirregular\t\t\tcome\n",
            "தா\tverb\tirregular\t\t\tgive\n",
            "சா\tverb\tirregular\t\t\tdie\n",
            "காண்\tverb\tirregular\t\t\tsee\n",
            "வே\tverb\tirregular\t\t\tboil\n",
            "படு\tverb\t6.1\t\t\tsuffer\n",
            "எழும்பு\tverb\t5\t\t\tget up\n",
            "முன்னெடு\tverb\t11\t\t\tforward-take\n",
        ))
        .unwrap()
    }

    fn entry<'a>(lex: &'a Lexicon, lemma: &str) -> &'a LexEntry {
        lex.lookup_pos(lemma, Pos::Verb).next().unwrap()
    }

    fn gen(lex: &Lexicon, lemma: &str, features: &VerbFeatures) -> String {
        match conjugate(entry(lex, lemma), features) {
            Ok(a) => a.surface,
            Err(e) => panic!("conjugate({lemma}, {features:?}): {e}"),
        }
    }

    #[test]
    fn past_stems_per_class() {
        let lex = lex();
        let past3sm = VerbFeatures::finite(Tense::Past, Png::P3sm);
        assert_eq!(gen(&lex, "செய்", &past3sm), "செய்தான்");
        assert_eq!(gen(&lex, "ஆள்", &past3sm), "ஆண்டான்");
        assert_eq!(gen(&lex, "கொல்", &past3sm), "கொன்றான்");
        assert_eq!(gen(&lex, "கடி", &past3sm), "கடித்தான்");
        assert_eq!(gen(&lex, "அஞ்சு", &past3sm), "அஞ்சினான்");
        assert_eq!(gen(&lex, "வாங்கு", &past3sm), "வாங்கினான்");
        assert_eq!(gen(&lex, "போ", &past3sm), "போனான்");
        assert_eq!(gen(&lex, "அடு", &past3sm), "அட்டான்");
        assert_eq!(gen(&lex, "நகு", &past3sm), "நக்கான்");
        assert_eq!(gen(&lex, "உறு", &past3sm), "உற்றான்");
        assert_eq!(gen(&lex, "உண்", &past3sm), "உண்டான்");
        assert_eq!(gen(&lex, "தின்", &past3sm), "தின்றான்");
        assert_eq!(gen(&lex, "கொள்", &past3sm), "கொண்டான்");
        assert_eq!(gen(&lex, "நில்", &past3sm), "நின்றான்");
        assert_eq!(gen(&lex, "அபகரி", &past3sm), "அபகரித்தான்");
        assert_eq!(gen(&lex, "நட", &past3sm), "நடந்தான்");
    }

    #[test]
    fn present_and_future_stems() {
        let lex = lex();
        let pres = VerbFeatures::finite(Tense::Pres, Png::P3sm);
        assert_eq!(gen(&lex, "செய்", &pres), "செய்கிறான்");
        assert_eq!(gen(&lex, "நட", &pres), "நடக்கிறான்");
        assert_eq!(gen(&lex, "நில்", &pres), "நிற்கிறான்");
        assert_eq!(gen(&lex, "போ", &pres), "போகிறான்");
        let mut kinr = VerbFeatures::finite(Tense::Pres, Png::P3sm);
        kinr.pres_allomorph = 1;
        assert_eq!(gen(&lex, "நட", &kinr), "நடக்கின்றான்");
        let fut = VerbFeatures::finite(Tense::Fut, Png::P3sm);
        assert_eq!(gen(&lex, "செய்", &fut), "செய்வான்");
        assert_eq!(gen(&lex, "உண்", &fut), "உண்பான்");
        assert_eq!(gen(&lex, "நில்", &fut), "நிற்பான்");
        assert_eq!(gen(&lex, "நட", &fut), "நடப்பான்");
        assert_eq!(gen(&lex, "போ", &fut), "போவான்");
    }

    #[test]
    fn futum_and_infinitives() {
        let lex = lex();
        let futum = VerbFeatures::finite(Tense::FutUm, Png::P3sn);
        assert_eq!(gen(&lex, "தெரி", &futum), "தெரியும்");
        assert_eq!(gen(&lex, "நட", &futum), "நடக்கும்");
        assert_eq!(gen(&lex, "செய்", &futum), "செய்யும்");
        assert_eq!(gen(&lex, "உண்", &futum), "உண்ணும்");
        assert_eq!(gen(&lex, "வாங்கு", &futum), "வாங்கும்");
        assert_eq!(gen(&lex, "போ", &futum), "போகும்");
        let inf = VerbFeatures::bare(Finiteness::Infinitive);
        assert_eq!(gen(&lex, "நட", &inf), "நடக்க");
        assert_eq!(gen(&lex, "செய்", &inf), "செய்ய");
        assert_eq!(gen(&lex, "கொல்", &inf), "கொல்ல");
        assert_eq!(gen(&lex, "வாங்கு", &inf), "வாங்க");
        assert_eq!(gen(&lex, "உண்", &inf), "உண்ண");
        assert_eq!(gen(&lex, "நில்", &inf), "நிற்க");
        assert_eq!(gen(&lex, "போ", &inf), "போக");
        assert_eq!(gen(&lex, "வா", &inf), "வர");
        assert_eq!(gen(&lex, "விடு", &inf), "விட");
    }

    #[test]
    fn irregular_verbs_never_take_the_regular_path() {
        let lex = lex();
        let past3sm = VerbFeatures::finite(Tense::Past, Png::P3sm);
        assert_eq!(gen(&lex, "வா", &past3sm), "வந்தான்");
        assert_eq!(gen(&lex, "தா", &past3sm), "தந்தான்");
        assert_eq!(gen(&lex, "சா", &past3sm), "செத்தான்");
        assert_eq!(gen(&lex, "காண்", &past3sm), "கண்டான்");
        let past3sn = VerbFeatures::finite(Tense::Past, Png::P3sn);
        assert_eq!(gen(&lex, "வே", &past3sn), "வெந்தது");
        let vpart = VerbFeatures::bare(Finiteness::Vpart);
        assert_eq!(gen(&lex, "வா", &vpart), "வந்து");
        let pres = VerbFeatures::finite(Tense::Pres, Png::P1s);
        assert_eq!(gen(&lex, "வா", &pres), "வருகிறேன்");
    }

    #[test]
    fn vparts_and_conditionals() {
        let lex = lex();
        let vpart = VerbFeatures::bare(Finiteness::Vpart);
        assert_eq!(gen(&lex, "நட", &vpart), "நடந்து");
        assert_eq!(gen(&lex, "செய்", &vpart), "செய்து");
        assert_eq!(gen(&lex, "வாங்கு", &vpart), "வாங்கி");
        assert_eq!(gen(&lex, "கொடு", &vpart), "கொடுத்து");
        assert_eq!(gen(&lex, "கொள்", &vpart), "கொண்டு");
        assert_eq!(gen(&lex, "போ", &vpart), "போய்");
        let mut cond = VerbFeatures::bare(Finiteness::Conditional);
        assert_eq!(gen(&lex, "நட", &cond), "நடந்தால்");
        assert_eq!(gen(&lex, "வா", &cond), "வந்தால்");
        cond.polarity = Polarity::NegAa;
        assert_eq!(gen(&lex, "நட", &cond), "நடக்காவிட்டால்");
    }

    #[test]
    fn class5_past_uses_i_forms_before_a() {
        let lex = lex();
        assert_eq!(gen(&lex, "வாங்கு", &VerbFeatures::finite(Tense::Past, Png::P3sn)), "வாங்கியது");
        assert_eq!(gen(&lex, "வாங்கு", &VerbFeatures::finite(Tense::Past, Png::P3pn)), "வாங்கின");
        let mut rel = VerbFeatures::bare(Finiteness::RelParticiple);
        rel.tense = Some(Tense::Past);
        assert_eq!(gen(&lex, "வாங்கு", &rel), "வாங்கிய");
        assert_eq!(gen(&lex, "நட", &rel), "நடந்த");
    }

    #[test]
    fn negation_forms() {
        let lex = lex();
        let mut neg = VerbFeatures::bare(Finiteness::Finite);
        neg.polarity = Polarity::NegAa;
        neg.png = Some(Png::P3sn);
        assert_eq!(gen(&lex, "நட", &neg), "நடக்காது");
        let mut rel = VerbFeatures::bare(Finiteness::RelParticiple);
        rel.polarity = Polarity::NegAa;
        assert_eq!(gen(&lex, "நட", &rel), "நடக்காத");
        let mut vp = VerbFeatures::bare(Finiteness::Vpart);
        vp.polarity = Polarity::NegAa;
        assert_eq!(gen(&lex, "நட", &vp), "நடக்காமல்");
        assert_eq!(gen(&lex, "வா", &vp), "வராமல்");
        let mut imp = VerbFeatures::bare(Finiteness::Imperative);
        imp.polarity = Polarity::NegAa;
        assert_eq!(gen(&lex, "நட", &imp), "நடக்காதே");
        imp.png = Some(Png::P2p);
        assert_eq!(gen(&lex, "நட", &imp), "நடக்காதீர்கள்");
        let mut maattu = VerbFeatures::bare(Finiteness::Finite);
        maattu.polarity = Polarity::NegMaattu;
        maattu.png = Some(Png::P1s);
        assert_eq!(gen(&lex, "நட", &maattu), "நடக்கமாட்டேன்");
        let mut illai = VerbFeatures::bare(Finiteness::Finite);
        illai.polarity = Polarity::NegIllai;
        assert_eq!(gen(&lex, "நட", &illai), "நடக்கவில்லை");
    }

    #[test]
    fn modals_and_hortative() {
        let lex = lex();
        let mut f = VerbFeatures::bare(Finiteness::Finite);
        f.modal = Some(Modal::Mudiyum);
        assert_eq!(gen(&lex, "நட", &f), "நடக்கமுடியும்");
        f.modal = Some(Modal::Laam);
        assert_eq!(gen(&lex, "நட", &f), "நடக்கலாம்");
        f.modal = Some(Modal::Veendum);
        assert_eq!(gen(&lex, "நட", &f), "நடக்கவேண்டும்");
        f.modal = Some(Modal::Laakaathu);
        assert_eq!(gen(&lex, "நட", &f), "நடக்கலாகாது");
        let hort = VerbFeatures::bare(Finiteness::Hortative);
        assert_eq!(gen(&lex, "நட", &hort), "நடக்கட்டும்");
    }

    #[test]
    fn causative_series() {
        let lex = lex();
        let mut f = VerbFeatures::finite(Tense::Past, Png::P3sm);
        f.causative = true;
        assert_eq!(gen(&lex, "வாங்கு", &f), "வாங்குவித்தான்");
        assert_eq!(gen(&lex, "நட", &f), "நடப்பித்தான்");
        let mut pres = VerbFeatures::finite(Tense::Pres, Png::P3sm);
        pres.causative = true;
        assert_eq!(gen(&lex, "நட", &pres), "நடப்பிக்கிறான்");
        let mut fut = VerbFeatures::finite(Tense::Fut, Png::P3sm);
        fut.causative = true;
        assert_eq!(gen(&lex, "நட", &fut), "நடப்பிப்பான்");
    }

    #[test]
    fn passive_series() {
        let lex = lex();
        let mut f = VerbFeatures::finite(Tense::Past, Png::P3sn);
        f.passive = true;
        assert_eq!(gen(&lex, "வாங்கு", &f), "வாங்கப்பட்டது");
        let mut pn = VerbFeatures::finite(Tense::Past, Png::P3pn);
        pn.passive = true;
        assert_eq!(gen(&lex, "முன்னெடு", &pn), "முன்னெடுக்கப்பட்டன");
    }

    #[test]
    fn participial_nouns_feed_the_nominal_paradigm() {
        let lex = lex();
        let mut f = VerbFeatures::bare(Finiteness::RelParticiple);
        f.tense = Some(Tense::Past);
        f.partnoun = Some(PartNoun { pronominal: Pronominal::Avan, case: Case::Nom, case_allomorph: 0 });
        assert_eq!(gen(&lex, "நட", &f), "நடந்தவன்");
        f.partnoun = Some(PartNoun { pronominal: Pronominal::Avarkal, case: Case::Dat, case_allomorph: 0 });
        assert_eq!(gen(&lex, "நட", &f), "நடந்தவர்களுக்கு");
        f.partnoun = Some(PartNoun { pronominal: Pronominal::Aval, case: Case::Acc, case_allomorph: 0 });
        assert_eq!(gen(&lex, "நட", &f), "நடந்தவளை");
        f.tense = Some(Tense::Fut);
        f.partnoun = Some(PartNoun { pronominal: Pronominal::Avan, case: Case::Nom, case_allomorph: 0 });
        assert_eq!(gen(&lex, "நட", &f), "நடப்பவன்");
    }

    #[test]
    fn chains_compose_per_table_iii() {
        let lex = lex();
        // ex (5): வந்துகொண்டிருந்திருக்கிறான்
        let units = vec![
            ("வா".to_string(), VerbFeatures::bare(Finiteness::Vpart)),
            ("கொண்டிரு".to_string(), VerbFeatures::bare(Finiteness::Vpart)),
            ("இரு".to_string(), VerbFeatures::finite(Tense::Pres, Png::P3sm)),
        ];
        let analysis = compose_chain(&lex, &units).unwrap();
        assert_eq!(analysis.surface, "வந்துகொண்டிருந்திருக்கிறான்");
        // ex (8): வாங்கிக்கொடுத்தான் with the augment on the participle
        let mut vpart_k = VerbFeatures::bare(Finiteness::Vpart);
        vpart_k.augment = Some(Augment::K);
        let units = vec![
            ("வாங்கு".to_string(), vpart_k),
            ("கொடு".to_string(), VerbFeatures::finite(Tense::Past, Png::P3sm)),
        ];
        let analysis = compose_chain(&lex, &units).unwrap();
        assert_eq!(analysis.surface, "வாங்கிக்கொடுத்தான்");
        assert_eq!(analysis.tag, "v.vpart.aug_k+கொடு.past.3sm");
        // ex (7): வாங்கச்செய்தான்
        let mut inf_c = VerbFeatures::bare(Finiteness::Infinitive);
        inf_c.augment = Some(Augment::C);
        let units = vec![
            ("வாங்கு".to_string(), inf_c.clone()),
            ("செய்".to_string(), VerbFeatures::finite(Tense::Past, Png::P3sm)),
        ];
        assert_eq!(compose_chain(&lex, &units).unwrap().surface, "வாங்கச்செய்தான்");
        // modal after a participle is a Table III violation
        let units = vec![
            ("வாங்கு".to_string(), VerbFeatures::bare(Finiteness::Vpart)),
            ("வேண்டு".to_string(), VerbFeatures::finite(Tense::Pres, Png::P3sn)),
        ];
        assert!(matches!(compose_chain(&lex, &units), Err(VerbError::ChainForm { .. })));
    }


    #[test]
    fn analyze_simple_forms() {
        let lex = lex();
        for (token, lemma, tag) in [
            ("நடந்தான்", "நட", "v.past.3sm"),
            ("நடக்கிறான்", "நட", "v.pres.3sm"),
            ("நடக்க", "நட", "v.inf"),
            ("நடந்து", "நட", "v.vpart"),
            ("நடக்காது", "நட", "v.neg_aa.3sn"),
            ("நடக்கும்", "நட", "v.fut_um"),
            ("தெரியும்", "தெரி", "v.fut_um"),
            ("வந்தேன்", "வா", "v.past.1s"),
            ("போனான்", "போ", "v.past.3sm"),
            ("வாங்கினேன்", "வாங்கு", "v.past.1s"),
            ("வாங்கியது", "வாங்கு", "v.past.3sn"),
            ("நட", "நட", "v.imp"),
            ("நடக்கட்டும்", "நட", "v.hort"),
            ("நடக்கவில்லை", "நட", "v.neg_illai"),
            ("நடக்கலாம்", "நட", "v.modal_laam"),
            ("நடந்தவர்களுக்கு", "நட", "v.past.pn_3pe.dat"),
            ("நடப்பித்தான்", "நட", "v.caus.past.3sm"),
            ("வாங்குவித்தான்", "வாங்கு", "v.caus.past.3sm"),
            ("நடக்கமாட்டேன்", "நட", "v.neg_maattu.1s"),
        ] {
            let analyses = analyze(&w(token), &lex, false);
            assert!(
                analyses.iter().any(|a| a.lemma == lemma && a.tag == tag),
                "{token}: expected ({lemma}, {tag}), got {:?}",
                analyses.iter().map(|a| (&a.lemma, &a.tag)).collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn analyze_chains() {
        let lex = lex();
        // ex (5)
        let analyses = analyze(&w("வந்துகொண்டிருந்திருக்கிறான்"), &lex, false);
        assert!(
            analyses.iter().any(|a| a.lemma == "வா"
                && a.tag == "v.vpart+கொண்டிரு.vpart+இரு.pres.3sm"),
            "got {:?}",
            analyses.iter().map(|a| (&a.lemma, &a.tag)).collect::<Vec<_>>()
        );
        // ex (8)
        let analyses = analyze(&w("வாங்கிக்கொடுத்தான்"), &lex, false);
        assert!(
            analyses.iter().any(|a| a.lemma == "வாங்கு" && a.tag == "v.vpart.aug_k+கொடு.past.3sm"),
            "got {:?}",
            analyses.iter().map(|a| (&a.lemma, &a.tag)).collect::<Vec<_>>()
        );
        // ex (43): single-token permissive + மாட்டு
        let analyses = analyze(&w("போகவிடமாட்டேன்"), &lex, false);
        assert!(
            analyses.iter().any(|a| a.lemma == "போ" && a.tag == "v.inf+விடு.neg_maattu.1s"),
            "got {:?}",
            analyses.iter().map(|a| (&a.lemma, &a.tag)).collect::<Vec<_>>()
        );
    }

    #[test]
    fn analyze_passives() {
        let lex = lex();
        let analyses = analyze(&w("வாங்கப்பட்டது"), &lex, false);
        assert!(
            analyses.iter().any(|a| a.lemma == "வாங்கு" && a.tag == "v.pass.past.3sn"),
            "got {:?}",
            analyses.iter().map(|a| (&a.lemma, &a.tag)).collect::<Vec<_>>()
        );
        let analyses = analyze(&w("முன்னெடுக்கப்பட்டன"), &lex, false);
        assert!(
            analyses.iter().any(|a| a.lemma == "முன்னெடு" && a.tag == "v.pass.past.3pn"),
            "got {:?}",
            analyses.iter().map(|a| (&a.lemma, &a.tag)).collect::<Vec<_>>()
        );
        // the passiviser suffixes to the terminal light verb of a chain
        let analyses = analyze(&w("வாங்கிக்கொடுக்கப்பட்டது"), &lex, false);
        assert!(
            analyses
                .iter()
                .any(|a| a.lemma == "வாங்கு" && a.tag == "v.vpart.aug_k+கொடு.pass.past.3sn"),
            "got {:?}",
            analyses.iter().map(|a| (&a.lemma, &a.tag)).collect::<Vec<_>>()
        );
    }

    #[test]
    fn analyze_generate_round_trip() {
        let lex = lex();
        let entry_nata = entry(&lex, "நட");
        let forms = paradigm(entry_nata).unwrap();
        assert!(forms.len() > 400, "paradigm size {}", forms.len());
        for analysis in forms.iter().take(80) {
            let token = w(&analysis.surface);
            let analyses = analyze(&token, &lex, false);
            assert!(
                analyses.iter().any(|a| a.tag == analysis.tag && a.lemma == analysis.lemma),
                "round trip failed for {} ({}): got {:?}",
                analysis.surface,
                analysis.tag,
                analyses.iter().map(|a| (&a.lemma, &a.tag)).collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn euphonic_an_before_terminal() {
        let lex = lex();
        let mut f = VerbFeatures::finite(Tense::Past, Png::P3pn);
        assert_eq!(gen(&lex, "நட", &f), "நடந்தன");
        f.png = Some(Png::Arch3smAnan);
        assert_eq!(gen(&lex, "நட", &f), "நடந்தனன்");
    }

    #[test]
    fn verbal_nouns() {
        let lex = lex();
        let mut f = VerbFeatures::bare(Finiteness::VerbalNoun);
        f.tense = Some(Tense::Fut);
        assert_eq!(gen(&lex, "நட", &f), "நடப்பது");
        assert_eq!(gen(&lex, "எழும்பு", &f), "எழும்புவது");
        f.tense = Some(Tense::Past);
        assert_eq!(gen(&lex, "செய்", &f), "செய்தது");
    }

    #[test]
    fn tense_stems_ready_for_terminals() {
        let lex = lex();
        assert_eq!(tense_stem(entry(&lex, "நட"), Tense::Past).unwrap().text(), "நடந்த்");
        assert_eq!(tense_stem(entry(&lex, "செய்"), Tense::Past).unwrap().text(), "செய்த்");
        assert_eq!(tense_stem(entry(&lex, "நட"), Tense::Pres).unwrap().text(), "நடக்கிற்");
    }

    #[test]
    fn periphrastic_illai_is_two_tokens() {
        let lex = lex();
        assert_eq!(
            negate_periphrastic(entry(&lex, "எழும்பு"), Tense::Fut).unwrap(),
            "எழும்புவது இல்லை"
        );
    }
}
