//! Nominal inflection and analysis: oblique stems, plural, euphonic
//! increments, the nine cases, external augments, and their inverses.

use std::collections::HashSet;

use thiserror::Error;

use crate::clitic::{self, Clitic};
use crate::lexicon::{LexEntry, Lexicon, NounClass, Pos};
use crate::sandhi::{self, Augment, JoinOpts};
use crate::trace::{Analysis, Chain, Features};
use crate::word::{w, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Number {
    Sg,
    Pl,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Case {
    Nom,
    Acc,
    Inst,
    Soc,
    Dat,
    Abl,
    Gen,
    Loc,
    Voc,
}

impl Case {
    pub const ALL: [Case; 9] = [
        Case::Nom,
        Case::Acc,
        Case::Inst,
        Case::Soc,
        Case::Dat,
        Case::Abl,
        Case::Gen,
        Case::Loc,
        Case::Voc,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Case::Nom => "nom",
            Case::Acc => "acc",
            Case::Inst => "ins",
            Case::Soc => "soc",
            Case::Dat => "dat",
            Case::Abl => "abl",
            Case::Gen => "gen",
            Case::Loc => "loc",
            Case::Voc => "voc",
        }
    }

    /// The Table-I suffix inventory. Index 0 is the canonical allomorph the
    /// paradigm uses; the rest are attested variants selectable by tag.
    pub fn allomorphs(self) -> &'static [&'static str] {
        match self {
            Case::Nom => &[""],
            Case::Acc => &["ஐ"],
            Case::Inst => &["ஆல்"],
            Case::Soc => &["உடன்", "ஓடு"],
            Case::Dat => &["உக்கு", "க்கு", "கு", "அக்கு"],
            Case::Abl => &["இலிருந்து", "இனிருந்து", "இடமிருந்து"],
            Case::Gen => &["இன்", "அது", "உடைய"],
            Case::Loc => &["இல்", "இடம்"],
            Case::Voc => &["ஏ", "ஆ", "ஈ"],
        }
    }

    /// Tag for a given allomorph: the bare case tag for the canonical one,
    /// a suffixed variant otherwise (dat_kku, gen_atu, ...).
    pub fn allomorph_tag(self, index: u8) -> String {
        if index == 0 {
            return self.tag().to_string();
        }
        let suffix = match (self, index) {
            (Case::Soc, 1) => "oodu",
            (Case::Dat, 1) => "kku",
            (Case::Dat, 2) => "ku",
            (Case::Dat, 3) => "akku",
            (Case::Abl, 1) => "in",
            (Case::Abl, 2) => "idam",
            (Case::Gen, 1) => "atu",
            (Case::Gen, 2) => "udaiya",
            (Case::Loc, 1) => "idam",
            (Case::Voc, 1) => "aa",
            (Case::Voc, 2) => "ii",
            _ => "x",
        };
        format!("{}_{}", self.tag(), suffix)
    }

    pub fn from_tag(tag: &str) -> Option<(Case, u8)> {
        for case in Case::ALL {
            for index in 0..case.allomorphs().len() as u8 {
                if case.allomorph_tag(index) == tag {
                    return Some((case, index));
                }
            }
        }
        None
    }
}

/// The compulsory oblique (cāriyai) shapes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Oblique {
    None,
    /// அம், seen in compounds; never auto-selected.
    Am,
    /// அத்து — மரம் → மரத்து.
    Attu,
    /// அற்று — சுவர் → சுவற்று.
    Arru,
    /// Last-consonant doubling with உ-elision — காடு → காட்ட்-.
    Doubled,
}

impl Oblique {
    pub fn tag(self) -> Option<&'static str> {
        match self {
            Oblique::None => None,
            Oblique::Am => Some("obl_am"),
            Oblique::Attu => Some("obl_attu"),
            Oblique::Arru => Some("obl_arru"),
            Oblique::Doubled => Some("obl_dbl"),
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        Some(match tag {
            "obl_am" => Oblique::Am,
            "obl_attu" => Oblique::Attu,
            "obl_arru" => Oblique::Arru,
            "obl_dbl" => Oblique::Doubled,
            _ => return None,
        })
    }
}

/// The class's oblique, applied before singular case suffixes.
pub fn class_oblique(class: NounClass) -> Oblique {
    match class {
        6 | 8 => Oblique::Doubled,
        15 => Oblique::Attu,
        16 => Oblique::Arru,
        _ => Oblique::None,
    }
}

/// The euphonic increments of formula (2b).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Euphonic {
    An,
    In,
    U,
}

impl Euphonic {
    pub const ALL: [Euphonic; 3] = [Euphonic::An, Euphonic::In, Euphonic::U];

    pub fn form(self) -> Word {
        match self {
            Euphonic::An => w("அன்"),
            Euphonic::In => w("இன்"),
            Euphonic::U => w("உ"),
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Euphonic::An => "euph_an",
            Euphonic::In => "euph_in",
            Euphonic::U => "euph_u",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        Some(match tag {
            "euph_an" => Euphonic::An,
            "euph_in" => Euphonic::In,
            "euph_u" => Euphonic::U,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct NounFeatures {
    pub number: Number,
    pub case: Case,
    pub case_allomorph: u8,
    pub oblique: Oblique,
    pub euphonics: Vec<Euphonic>,
    pub augment: Option<Augment>,
    /// Benefactive ஆக stacked on a dative (நாட்டுக்காக).
    pub benefactive: bool,
    pub honorific_pl: bool,
    pub clitic: Option<Clitic>,
}

impl NounFeatures {
    pub fn new(number: Number, case: Case) -> Self {
        NounFeatures {
            number,
            case,
            case_allomorph: 0,
            oblique: Oblique::None,
            euphonics: Vec::new(),
            augment: None,
            benefactive: false,
            honorific_pl: false,
            clitic: None,
        }
    }

    pub fn tag(&self) -> String {
        let mut parts = vec!["n".to_string()];
        parts.push(
            match self.number {
                Number::Sg => "sg",
                Number::Pl => "pl",
            }
            .to_string(),
        );
        if let Some(t) = self.oblique.tag() {
            parts.push(t.to_string());
        }
        for e in &self.euphonics {
            parts.push(e.tag().to_string());
        }
        parts.push(self.case.allomorph_tag(self.case_allomorph));
        if self.benefactive {
            parts.push("ben".to_string());
        }
        if let Some(a) = self.augment {
            parts.push(a.tag().to_string());
        }
        if self.honorific_pl {
            parts.push("hon".to_string());
        }
        if let Some(c) = self.clitic {
            parts.push(c.tag().to_string());
        }
        parts.join(".")
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NounError {
    #[error("entry is not a noun")]
    NotANoun,
    #[error("noun entry carries no class")]
    NoClass,
    #[error("augments attach only to accusative or dative forms")]
    AugmentCase,
    #[error("class 5 nouns have no plural")]
    NoPlural,
    #[error("at most two euphonic increments are allowed")]
    EuphonicOverflow,
    #[error("honorific கள் needs a rational noun in the plural")]
    BadHonorific,
    #[error("the {0:?} oblique does not belong to class {1}")]
    ObliqueMismatch(Oblique, NounClass),
    #[error("case allomorph index {index} out of range for {case:?}")]
    BadAllomorph { case: Case, index: u8 },
    #[error("benefactive ஆக stacks only on a dative")]
    BadBenefactive,
    #[error("clitic error: {0}")]
    Clitic(#[from] clitic::CliticError),
    #[error("augment error: {0}")]
    Augment(#[from] sandhi::SandhiError),
}

/// The case-ready stem: identity for classes without an oblique, the
/// class's cāriyai shape otherwise (மரம் → மரத்து, சுவர் → சுவற்று,
/// காடு → காட்ட்-).
pub fn oblique_stem(entry: &LexEntry, class: NounClass) -> Word {
    match class_oblique(class) {
        Oblique::Attu => sandhi::apply_rule(sandhi::OBL_ATTU, &entry.lemma, &w("அத்து"))
            .unwrap_or_else(|_| entry.lemma.clone()),
        Oblique::Arru => sandhi::apply_rule(sandhi::OBL_ARRU, &entry.lemma, &w("அற்று"))
            .unwrap_or_else(|_| entry.lemma.clone()),
        Oblique::Doubled => {
            if entry.lemma.ends_in_overshort_u() {
                let mut word = entry.lemma.clone();
                let last = word.pop().expect("non-empty");
                let pure = last.to_pure().expect("composite");
                word.push(pure);
                word.push(pure);
                word
            } else {
                entry.lemma.clone()
            }
        }
        _ => entry.lemma.clone(),
    }
}

/// Inflect using the entry's first class; pōli entries pick other classes
/// through [`inflect_with_class`].
pub fn inflect(entry: &LexEntry, features: &NounFeatures) -> Result<Analysis, NounError> {
    let class = entry.noun_classes.first().copied().ok_or(NounError::NoClass)?;
    inflect_with_class(entry, class, features)
}

pub fn inflect_with_class(
    entry: &LexEntry,
    class: NounClass,
    features: &NounFeatures,
) -> Result<Analysis, NounError> {
    if entry.pos != Pos::Noun {
        return Err(NounError::NotANoun);
    }
    if features.euphonics.len() > 2 {
        return Err(NounError::EuphonicOverflow);
    }
    // Augments ride on accusative and dative forms; a bare nominative also
    // takes one as a nominal modifier anticipating its head (அமைதிப் படை).
    let modifier_augment = features.case == Case::Nom
        && features.number == Number::Sg
        && features.euphonics.is_empty()
        && !features.benefactive;
    if features.augment.is_some()
        && !matches!(features.case, Case::Acc | Case::Dat)
        && !modifier_augment
    {
        return Err(NounError::AugmentCase);
    }
    if features.case_allomorph as usize >= features.case.allomorphs().len() {
        return Err(NounError::BadAllomorph {
            case: features.case,
            index: features.case_allomorph,
        });
    }
    if features.benefactive && features.case != Case::Dat {
        return Err(NounError::BadBenefactive);
    }
    if features.number == Number::Pl && class == 5 {
        return Err(NounError::NoPlural);
    }
    if features.honorific_pl && (features.number != Number::Pl || !entry.is_rational()) {
        return Err(NounError::BadHonorific);
    }

    // The oblique sits between a singular stem and a following suffix.
    let takes_suffix = !matches!(features.case, Case::Nom | Case::Voc)
        || !features.euphonics.is_empty();
    let oblique = if features.number == Number::Sg && takes_suffix {
        class_oblique(class)
    } else {
        Oblique::None
    };
    if features.oblique != Oblique::None && features.oblique != oblique {
        return Err(NounError::ObliqueMismatch(features.oblique, class));
    }

    let mut chain = Chain::start(entry.lemma.clone(), &entry.lemma.text());
    let mut first_junction = true;

    match oblique {
        Oblique::Attu => {
            chain.apply(sandhi::OBL_ATTU, &w("அத்து"), "obl_attu");
            first_junction = false;
        }
        Oblique::Arru => {
            chain.apply(sandhi::OBL_ARRU, &w("அற்று"), "obl_arru");
            first_junction = false;
        }
        _ => {}
    }

    if features.number == Number::Pl {
        chain.join_plural(Some(class));
        first_junction = false;
    }

    let opts_for = |first: bool| JoinOpts {
        allow_double: first && matches!(class, 9 | 10 | 12 | 13),
        force_udel: first && class == 7,
        udel_double: first && matches!(class, 6 | 8),
        geminate: false,
    };

    for e in &features.euphonics {
        chain.join(&e.form(), e.tag(), opts_for(first_junction));
        first_junction = false;
    }

    let case_text = features.case.allomorphs()[features.case_allomorph as usize];
    if !case_text.is_empty() {
        let tag = features.case.allomorph_tag(features.case_allomorph);
        match (features.case, features.case_allomorph) {
            // bare dative கு assimilates a preceding இன் (மரத்திற்கு) and
            // geminates after a vowel (ஆவினுக்கு)
            (Case::Dat, 2) => {
                let word_text = chain.word().text();
                if word_text.ends_with("ன்") {
                    chain.apply(sandhi::ASSIM_N_RK, &w("கு"), &tag);
                } else {
                    let opts = JoinOpts { geminate: true, ..opts_for(first_junction) };
                    chain.join(&w("கு"), &tag, opts);
                }
            }
            // ablative is locative base + இருந்து, two morphs
            (Case::Abl, 0) => {
                chain.join(&w("இல்"), "loc", opts_for(first_junction));
                chain.join(&w("இருந்து"), "abl", JoinOpts::default());
            }
            (Case::Abl, 1) => {
                chain.join(&w("இன்"), "euph_in", opts_for(first_junction));
                chain.join(&w("இருந்து"), "abl", JoinOpts::default());
            }
            (Case::Abl, 2) => {
                chain.join(&w("இடம்"), "loc_idam", opts_for(first_junction));
                chain.join(&w("இருந்து"), "abl", JoinOpts::default());
            }
            _ => {
                chain.join(&w(case_text), &tag, opts_for(first_junction));
            }
        }
    }

    if features.benefactive {
        chain.join(&w("ஆக"), "ben", JoinOpts::default());
    }

    if let Some(augment) = features.augment {
        sandhi::external_augment(chain.word(), augment)?;
        chain.apply(sandhi::AUG, &augment.as_word(), augment.tag());
    }

    if let Some(c) = features.clitic {
        let joined = clitic::attach(chain.word(), c)?;
        chain.apply(joined.rule, &c.form(), c.tag());
    }

    let (word, morphs, rules) = chain.finish();
    let mut resolved = features.clone();
    resolved.oblique = oblique;
    Ok(Analysis {
        lemma: entry.lemma.text(),
        pos: Pos::Noun,
        tag: resolved.tag(),
        features: Features::Noun(resolved),
        segmentation: morphs,
        rules_fired: rules,
        surface: word.text(),
        rationality: entry.rationality,
    })
}

/// The canonical paradigm: 9 cases × both numbers with canonical
/// allomorphs, plus the four augments on accusative and dative forms.
pub fn decline(entry: &LexEntry) -> Result<Vec<Analysis>, NounError> {
    let mut out: Vec<Analysis> = Vec::new();
    for &class in &entry.noun_classes {
        let numbers: &[Number] =
            if class == 5 { &[Number::Sg] } else { &[Number::Sg, Number::Pl] };
        for &number in numbers {
            for case in Case::ALL {
                let features = NounFeatures::new(number, case);
                let analysis = inflect_with_class(entry, class, &features)?;
                push_unique(&mut out, analysis);
                if matches!(case, Case::Acc | Case::Dat) {
                    for augment in Augment::ALL {
                        let mut f = NounFeatures::new(number, case);
                        f.augment = Some(augment);
                        push_unique(&mut out, inflect_with_class(entry, class, &f)?);
                    }
                }
            }
        }
    }
    Ok(out)
}

fn push_unique(out: &mut Vec<Analysis>, analysis: Analysis) {
    if !out.iter().any(|a| a.surface == analysis.surface && a.tag == analysis.tag) {
        out.push(analysis);
    }
}

/// Attachment-stem index over a lexicon's nouns: lemma and oblique shapes.
pub struct NounIndex {
    stems: std::collections::HashMap<String, Vec<(usize, NounClass, bool)>>,
}

impl NounIndex {
    pub fn build(lexicon: &Lexicon) -> Self {
        let mut stems: std::collections::HashMap<String, Vec<(usize, NounClass, bool)>> =
            std::collections::HashMap::new();
        for (idx, entry) in lexicon.entries().iter().enumerate() {
            if entry.pos != Pos::Noun {
                continue;
            }
            for &class in &entry.noun_classes {
                stems.entry(entry.lemma.text()).or_default().push((idx, class, false));
                if class_oblique(class) != Oblique::None {
                    let oblique = oblique_stem(entry, class);
                    if oblique != entry.lemma {
                        stems.entry(oblique.text()).or_default().push((idx, class, true));
                    }
                }
            }
        }
        NounIndex { stems }
    }

    fn get(&self, text: &str) -> &[(usize, NounClass, bool)] {
        self.stems.get(text).map(Vec::as_slice).unwrap_or(&[])
    }
}

/// All lexicon-consistent noun readings of one token.
///
/// Suffixes are stripped right to left (clitic, augment, case, euphonics,
/// plural), every surviving stem is looked up, and each candidate bundle is
/// validated by regenerating the full token; only exact matches survive, so
/// analyse∘generate is the identity by construction.
pub fn analyze(surface: &Word, lexicon: &Lexicon, enable_ee: bool) -> Vec<Analysis> {
    let index = NounIndex::build(lexicon);
    analyze_with_index(surface, lexicon, &index, enable_ee)
}

pub fn analyze_with_index(
    surface: &Word,
    lexicon: &Lexicon,
    index: &NounIndex,
    enable_ee: bool,
) -> Vec<Analysis> {
    let target = surface.text();
    let mut out: Vec<Analysis> = Vec::new();
    let mut seen: HashSet<(String, String)> = HashSet::new();

    let mut candidates: Vec<(usize, NounClass, NounFeatures)> = Vec::new();
    for split in clitic::strip(surface, enable_ee) {
        let mut bases = vec![(split.stem.clone(), None)];
        if let Some(aug) = sandhi::final_augment(&split.stem) {
            bases.push((split.stem.slice(0, split.stem.len() - 1), Some(aug)));
        }
        for (base, augment) in bases {
            enumerate_bundles(&base, index, augment, split.clitic, &mut candidates);
        }
    }

    for (entry_idx, class, features) in candidates {
        let entry = &lexicon.entries()[entry_idx];
        if let Ok(analysis) = inflect_with_class(entry, class, &features) {
            if analysis.surface == target
                && seen.insert((analysis.lemma.clone(), analysis.tag.clone()))
            {
                out.push(analysis);
            }
        }
    }
    out.sort_by(|a, b| a.tag.cmp(&b.tag).then_with(|| a.lemma.cmp(&b.lemma)));
    out
}

fn enumerate_bundles(
    base: &Word,
    noun_index: &NounIndex,
    augment: Option<Augment>,
    clitic: Option<Clitic>,
    candidates: &mut Vec<(usize, NounClass, NounFeatures)>,
) {
    let mut push_case = |case: Case, index: u8, stem: &Word, benefactive: bool| {
        for (word, euphonics) in euphonic_strips(stem) {
            lookup_stems(&word, noun_index, &mut |entry_idx, class, number, honorific| {
                let features = NounFeatures {
                    number,
                    case,
                    case_allomorph: index,
                    oblique: Oblique::None,
                    euphonics: euphonics.clone(),
                    augment,
                    benefactive,
                    honorific_pl: honorific,
                    clitic,
                };
                candidates.push((entry_idx, class, features));
            });
        }
    };

    for case in Case::ALL {
        for (index, allomorph) in case.allomorphs().iter().enumerate() {
            let index = index as u8;
            if allomorph.is_empty() {
                push_case(case, index, base, false);
                continue;
            }
            for stem in strip_case(base, allomorph) {
                push_case(case, index, &stem, false);
            }
        }
    }

    // benefactive: ஆக over a dative
    for candidate in sandhi::un_join(base, &w("ஆக")) {
        let inner = candidate.word;
        for (index, allomorph) in Case::Dat.allomorphs().iter().enumerate() {
            for stem in strip_case(&inner, allomorph) {
                push_case(Case::Dat, index as u8, &stem, true);
            }
        }
    }
}

/// Undo one case suffix, including the இன்+கு → இற்கு junction.
fn strip_case(base: &Word, allomorph: &str) -> Vec<Word> {
    let mut out: Vec<Word> =
        sandhi::un_join(base, &w(allomorph)).into_iter().map(|c| c.word).collect();
    if allomorph == "கு" {
        if let Some(stem) = base.strip_suffix_fused(&w("கு")) {
            if stem.text().ends_with("ற்") {
                let mut with_n = stem.slice(0, stem.len() - 1);
                with_n.push(crate::script::TamilChar::pure_consonant('ன').expect("ன"));
                out.push(with_n);
            }
        }
    }
    out
}

/// 0, 1 or 2 euphonic increments stripped from the right; inner increment
/// first in the resulting list, as generation applies them.
fn euphonic_strips(word: &Word) -> Vec<(Word, Vec<Euphonic>)> {
    let mut result = vec![(word.clone(), Vec::new())];
    let mut frontier = vec![(word.clone(), Vec::<Euphonic>::new())];
    for _ in 0..2 {
        let mut next = Vec::new();
        for (current, chain) in &frontier {
            for e in Euphonic::ALL {
                for candidate in sandhi::un_join(current, &e.form()) {
                    let mut inner_first = vec![e];
                    inner_first.extend(chain.iter().copied());
                    next.push((candidate.word, inner_first));
                }
            }
        }
        result.extend(next.iter().cloned());
        frontier = next;
    }
    result
}

fn lookup_stems(
    stem: &Word,
    index: &NounIndex,
    found: &mut impl FnMut(usize, NounClass, Number, bool),
) {
    for &(idx, class, _oblique) in index.get(&stem.text()) {
        found(idx, class, Number::Sg, false);
    }
    for (plural_stem, _rule) in sandhi::un_plural(stem) {
        for &(idx, class, oblique) in index.get(&plural_stem.text()) {
            if oblique {
                continue; // the plural attaches to the lemma, not the oblique
            }
            found(idx, class, Number::Pl, false);
            found(idx, class, Number::Pl, true);
        }
    }
}
