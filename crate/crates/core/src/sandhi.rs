//! Morphophonological joins: glide insertion, stop insertion, assimilation,
//! final-consonant doubling, overshort-u elision, and the word-final
//! external augments.
//!
//! Every join reports the rule that fired as a stable id. Traces replay
//! those ids through [`apply_rule`], which is the crate-wide soundness
//! check: a surface form must be reproducible from its segmentation plus
//! its rule ids alone.

use thiserror::Error;

use crate::script::{self, TamilChar};
use crate::word::{w, Word};

pub type RuleId = &'static str;

/// Plain concatenation, reported when no rule fires.
pub const PLAIN: RuleId = "plain";
pub const FUSE: RuleId = "fuse";
pub const GLIDE_Y: RuleId = "glide.y";
pub const GLIDE_V: RuleId = "glide.v";
pub const UDEL: RuleId = "udel";
pub const DOUBLE: RuleId = "double";
pub const STOP_K: RuleId = "stop.k";
pub const ASSIM_M_NG: RuleId = "assim.m-ng";
pub const ASSIM_L_RR: RuleId = "assim.l-rr";
pub const ASSIM_LL_TK: RuleId = "assim.ll-tk";
pub const ASSIM_N_R: RuleId = "assim.n-r";
pub const ASSIM_N_RK: RuleId = "assim.n-rk";
pub const GEM: RuleId = "gem";
pub const AUG: RuleId = "aug";
pub const OBL_ATTU: RuleId = "obl.attu";
pub const OBL_ARRU: RuleId = "obl.arru";
pub const UDEL_DBL: RuleId = "udel.dbl";
pub const ASSIM_LL_NT: RuleId = "assim.ll-nt";
pub const ASSIM_L_NR: RuleId = "assim.l-nr";
pub const ASSIM_L_R: RuleId = "assim.l-r";
pub const VCONTRACT: RuleId = "vcontract";

/// Every junction rule with a one-line description, for the diagnostic dump.
pub const RULES: &[(&str, &str)] = &[
    (PLAIN, "no change at the junction"),
    (FUSE, "final pure consonant + initial vowel written as one unit"),
    (GLIDE_Y, "glide ய் inserted after a front vowel before a vowel"),
    (GLIDE_V, "glide வ் inserted after a back vowel before a vowel"),
    (UDEL, "overshort final உ elides before a vowel"),
    (DOUBLE, "final consonant of a short monosyllable doubles before a vowel"),
    (STOP_K, "stop க் inserted before கள் after a long-vowel stem"),
    (ASSIM_M_NG, "final ம் becomes ங் before கள்"),
    (ASSIM_L_RR, "final ல் becomes ற் before கள்"),
    (ASSIM_LL_TK, "final ள் becomes ட் before கள்"),
    (ASSIM_N_R, "final ன் becomes ர் before கள்"),
    (ASSIM_N_RK, "euphonic இன் becomes இற் before the dative கு"),
    (GEM, "initial hard consonant of the suffix geminates after a vowel"),
    (AUG, "external sandhi augment க்/ச்/த்/ப் appended word-finally"),
    (OBL_ATTU, "final ம் deleted before the oblique அத்து, whose அ elides"),
    (OBL_ARRU, "final ர் deleted before the oblique அற்று, whose அ elides"),
    (UDEL_DBL, "overshort உ elides and the freed consonant doubles before a vowel"),
    (ASSIM_LL_NT, "final ள் becomes ண் before the past marker ட்"),
    (ASSIM_L_NR, "final ல் becomes ன் before the past marker ற்"),
    (ASSIM_L_R, "final ல் becomes ற் before a க/ப-initial marker"),
    (VCONTRACT, "a long-vowel stem absorbs the இ of a following suffix"),
];

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SandhiError {
    #[error("word already ends in the augment {0}")]
    AlreadyAugmented(char),
    #[error("augments attach to vowel-final forms")]
    AugmentHost,
    #[error("rule {0:?} does not apply at this junction")]
    RuleNotApplicable(RuleId),
    #[error("unknown rule id {0:?}")]
    UnknownRule(String),
}

/// A join result: the surface word plus the rule that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Joined {
    pub word: Word,
    pub rule: RuleId,
}

/// Context for a generic junction.
#[derive(Debug, Clone, Copy, Default)]
pub struct JoinOpts {
    /// Final-consonant doubling is a property of lexical stems; suffixes
    /// never double even when they look like short monosyllables (கள்).
    pub allow_double: bool,
    /// Force உ-elision even when the stem shape alone would not license it
    /// (lexically marked nouns like அது).
    pub force_udel: bool,
    /// Geminate a hard suffix-initial consonant after a vowel (the internal
    /// counterpart of the external augment: வாங்க + செய் → வாங்கச்செய்).
    pub geminate: bool,
    /// Overshort உ elides *and* the freed consonant doubles (the காடு-class
    /// oblique: காடு + ஐ → காட்டை).
    pub udel_double: bool,
}

/// Join a stem and a suffix, applying at most one junction rule.
pub fn join(stem: &Word, suffix: &Word, opts: JoinOpts) -> Joined {
    if stem.is_empty() || suffix.is_empty() {
        return Joined { word: stem.concat(suffix), rule: PLAIN };
    }
    let left = stem.last().expect("non-empty");
    let right = suffix.first().expect("non-empty");

    if right.is_vowel() {
        if opts.udel_double && stem.ends_in_overshort_u() {
            let mut base = stem.clone();
            let last = base.pop().expect("non-empty");
            let pure = last.to_pure().expect("composite has base");
            base.push(pure);
            base.push(pure);
            return Joined { word: base.append_fused(suffix), rule: UDEL_DBL };
        }
        if opts.force_udel || stem.ends_in_overshort_u() {
            let mut base = stem.clone();
            let last = base.pop().expect("non-empty");
            base.push(last.to_pure().expect("composite has base"));
            return Joined { word: base.append_fused(suffix), rule: UDEL };
        }
        if let Some(v) = left.vowel() {
            let glide = if script::is_front_vowel(v) {
                (w("ய்"), GLIDE_Y)
            } else {
                (w("வ்"), GLIDE_V)
            };
            let word = stem.concat(&glide.0).append_fused(suffix);
            return Joined { word, rule: glide.1 };
        }
        if left.is_pure_consonant() {
            if opts.allow_double && stem.is_short_monosyllable() {
                let mut word = stem.clone();
                word.push(left);
                return Joined { word: word.append_fused(suffix), rule: DOUBLE };
            }
            return Joined { word: stem.append_fused(suffix), rule: FUSE };
        }
        // aytham or non-Tamil boundary: leave untouched
        return Joined { word: stem.concat(suffix), rule: PLAIN };
    }

    if opts.geminate && left.ends_in_vowel() {
        if let Some(b) = right.base() {
            if script::is_hard(b) && !right.is_pure_consonant() {
                let mut word = stem.clone();
                word.push(TamilChar::pure_consonant(b).expect("hard consonant"));
                return Joined { word: word.concat(suffix), rule: GEM };
            }
        }
    }

    Joined { word: stem.concat(suffix), rule: PLAIN }
}

/// Attach the plural கள் with the class-conditioned junction shape.
/// `class` is a Table-II nominal class number (1–16); verbs and derived
/// stems pass `None` and get the plain shapes.
pub fn join_plural(stem: &Word, class: Option<u8>) -> Joined {
    let kal = w("கள்");
    let last_base = stem.last().and_then(|c| c.base());
    match (class, last_base) {
        (Some(1) | Some(3), _) => {
            let mut word = stem.clone();
            word.push(TamilChar::pure_consonant('க').expect("க"));
            Joined { word: word.concat(&kal), rule: STOP_K }
        }
        (Some(11), Some('ன')) => replace_final(stem, 'ர', &kal, ASSIM_N_R),
        (Some(12), Some('ல')) => replace_final(stem, 'ற', &kal, ASSIM_L_RR),
        (Some(13) | Some(14), Some('ள')) => replace_final(stem, 'ட', &kal, ASSIM_LL_TK),
        (Some(15), Some('ம')) => replace_final(stem, 'ங', &kal, ASSIM_M_NG),
        _ => Joined { word: stem.concat(&kal), rule: PLAIN },
    }
}

fn replace_final(stem: &Word, new_base: char, suffix: &Word, rule: RuleId) -> Joined {
    let mut word = stem.clone();
    let last = word.pop().expect("non-empty stem");
    word.push(last.with_base(new_base).expect("alphabet consonant"));
    Joined { word: word.concat(suffix), rule }
}

/// The four external sandhi augments.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum Augment {
    K,
    C,
    T,
    P,
}

impl Augment {
    pub const ALL: [Augment; 4] = [Augment::K, Augment::C, Augment::T, Augment::P];

    pub fn consonant(self) -> char {
        match self {
            Augment::K => 'க',
            Augment::C => 'ச',
            Augment::T => 'த',
            Augment::P => 'ப',
        }
    }

    pub fn from_consonant(c: char) -> Option<Self> {
        match c {
            'க' => Some(Augment::K),
            'ச' => Some(Augment::C),
            'த' => Some(Augment::T),
            'ப' => Some(Augment::P),
            _ => None,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Augment::K => "aug_k",
            Augment::C => "aug_c",
            Augment::T => "aug_t",
            Augment::P => "aug_p",
        }
    }

    pub fn as_word(self) -> Word {
        let mut word = Word::new();
        word.push(TamilChar::pure_consonant(self.consonant()).expect("hard consonant"));
        word
    }
}

/// Word-final augment candidate on `word`, if any.
pub fn final_augment(word: &Word) -> Option<Augment> {
    let last = word.last()?;
    if !last.is_pure_consonant() {
        return None;
    }
    Augment::from_consonant(last.base()?)
}

/// Append a pure க்/ச்/த்/ப் to a fully inflected form. Applying a second
/// augment is an error: the first already anticipates the following word.
pub fn external_augment(word: &Word, augment: Augment) -> Result<Joined, SandhiError> {
    if let Some(existing) = final_augment(word) {
        return Err(SandhiError::AlreadyAugmented(existing.consonant()));
    }
    if !word.last().map(|c| c.ends_in_vowel()).unwrap_or(false) {
        return Err(SandhiError::AugmentHost);
    }
    Ok(Joined { word: word.concat(&augment.as_word()), rule: AUG })
}

/// Re-apply a named rule at a junction; the replay half of every trace.
pub fn apply_rule(rule: &str, left: &Word, right: &Word) -> Result<Word, SandhiError> {
    let known = RULES.iter().any(|(id, _)| *id == rule);
    if !known {
        return Err(SandhiError::UnknownRule(rule.to_string()));
    }
    let fail = || SandhiError::RuleNotApplicable(RULES.iter().find(|(id, _)| *id == rule).expect("known").0);
    match rule {
        "plain" => Ok(left.concat(right)),
        "fuse" => {
            let l = left.last().ok_or_else(fail)?;
            let r = right.first().ok_or_else(fail)?;
            if l.is_pure_consonant() && r.is_vowel() {
                Ok(left.append_fused(right))
            } else {
                Err(fail())
            }
        }
        "glide.y" | "glide.v" => {
            let l = left.last().ok_or_else(fail)?;
            let v = l.vowel().ok_or_else(fail)?;
            let glide = if rule == "glide.y" { 'ய' } else { 'வ' };
            let licensed = if glide == 'ய' {
                script::is_front_vowel(v)
            } else {
                script::is_back_vowel(v)
            };
            if !licensed || !right.first().map(|c| c.is_vowel()).unwrap_or(false) {
                return Err(fail());
            }
            let mut word = left.clone();
            word.push(TamilChar::pure_consonant(glide).expect("glide"));
            Ok(word.append_fused(right))
        }
        "udel" => {
            let l = left.last().ok_or_else(fail)?;
            if l.vowel() != Some('உ') || l.base().is_none() {
                return Err(fail());
            }
            let mut word = left.clone();
            let last = word.pop().expect("non-empty");
            word.push(last.to_pure().expect("has base"));
            Ok(word.append_fused(right))
        }
        "double" => {
            let l = left.last().ok_or_else(fail)?;
            if !l.is_pure_consonant() {
                return Err(fail());
            }
            let mut word = left.clone();
            word.push(l);
            Ok(word.append_fused(right))
        }
        "stop.k" => {
            let mut word = left.clone();
            word.push(TamilChar::pure_consonant('க').expect("க"));
            Ok(word.concat(right))
        }
        "assim.m-ng" => apply_replace(left, right, 'ம', 'ங').ok_or_else(fail),
        "assim.l-rr" => apply_replace(left, right, 'ல', 'ற').ok_or_else(fail),
        "assim.ll-tk" => apply_replace(left, right, 'ள', 'ட').ok_or_else(fail),
        "assim.n-r" => apply_replace(left, right, 'ன', 'ர').ok_or_else(fail),
        "assim.n-rk" => apply_replace(left, right, 'ன', 'ற').ok_or_else(fail),
        "gem" => {
            let b = right.first().and_then(|c| c.base()).ok_or_else(fail)?;
            if !script::is_hard(b) {
                return Err(fail());
            }
            let mut word = left.clone();
            word.push(TamilChar::pure_consonant(b).expect("hard consonant"));
            Ok(word.concat(right))
        }
        "aug" => Ok(left.concat(right)),
        "obl.attu" => apply_oblique(left, right, 'ம').ok_or_else(fail),
        "obl.arru" => apply_oblique(left, right, 'ர').ok_or_else(fail),
        "assim.ll-nt" => apply_replace(left, right, 'ள', 'ண').ok_or_else(fail),
        "assim.l-nr" => apply_replace(left, right, 'ல', 'ன').ok_or_else(fail),
        "assim.l-r" => apply_replace(left, right, 'ல', 'ற').ok_or_else(fail),
        "vcontract" => {
            let l = left.last().ok_or_else(fail)?;
            let v = l.vowel().ok_or_else(fail)?;
            if !script::is_long_vowel(v) || right.first().map(|c| c.vowel() != Some('இ')).unwrap_or(true) {
                return Err(fail());
            }
            Ok(left.concat(&right.slice(1, right.len())))
        }
        "udel.dbl" => {
            let l = left.last().ok_or_else(fail)?;
            if l.vowel() != Some('உ') || l.base().is_none() {
                return Err(fail());
            }
            if !right.first().map(|c| c.is_vowel()).unwrap_or(false) {
                return Err(fail());
            }
            let mut word = left.clone();
            let last = word.pop().expect("non-empty");
            let pure = last.to_pure().expect("has base");
            word.push(pure);
            word.push(pure);
            Ok(word.append_fused(right))
        }
        _ => Err(SandhiError::UnknownRule(rule.to_string())),
    }
}

/// Oblique attachment: delete the stem-final consonant, elide the அ of the
/// suffix, concatenate (மரம் + அத்து → மரத்து).
fn apply_oblique(left: &Word, right: &Word, deleted: char) -> Option<Word> {
    let last = left.last()?;
    if !last.is_pure_consonant() || last.base() != Some(deleted) {
        return None;
    }
    if right.first()?.vowel() != Some('அ') || right.first()?.base().is_some() {
        return None;
    }
    let stem = left.slice(0, left.len() - 1);
    let tail = right.slice(1, right.len());
    Some(stem.concat(&tail))
}

fn apply_replace(left: &Word, right: &Word, from: char, to: char) -> Option<Word> {
    let last = left.last()?;
    if last.base() != Some(from) || !last.is_pure_consonant() {
        return None;
    }
    let mut word = left.clone();
    let last = word.pop().expect("non-empty");
    word.push(last.with_base(to).ok()?);
    Some(word.concat(right))
}

/// Inverse join for the analyser: given a surface word and the underlying
/// suffix, propose every (stem, rule) split the rules license. Callers
/// validate candidates against the lexicon and by regeneration.
pub fn un_join(surface: &Word, suffix: &Word) -> Vec<Joined> {
    let mut out = Vec::new();
    if suffix.is_empty() {
        return out;
    }
    let first = suffix.first().expect("non-empty");

    if first.is_vowel() {
        if let Some(stem) = surface.strip_suffix_fused(suffix) {
            match stem.last() {
                Some(l) if l.is_pure_consonant() => {
                    // The same split may be a fuse, a doubling, or an elided உ.
                    out.push(Joined { word: stem.clone(), rule: FUSE });
                    if let Some(b) = stem.last().and_then(|c| c.base()) {
                        // double: surface stem ends CC with identical C
                        if stem.len() >= 2 {
                            let prev = stem.chars()[stem.len() - 2];
                            if prev.base() == Some(b) && prev.is_pure_consonant() {
                                let undoubled = stem.slice(0, stem.len() - 1);
                                if undoubled.is_short_monosyllable() {
                                    out.push(Joined { word: undoubled, rule: DOUBLE });
                                }
                            }
                        }
                        // udel: restore the elided உ
                        if let Ok(restored) = script::compose(b, 'உ') {
                            let mut with_u = stem.slice(0, stem.len() - 1);
                            with_u.push(restored);
                            out.push(Joined { word: with_u, rule: UDEL });
                            // udel.dbl: the same உ restored after undoubling
                            if stem.len() >= 2 {
                                let prev = stem.chars()[stem.len() - 2];
                                if prev.is_pure_consonant() && prev.base() == Some(b) {
                                    let mut undoubled = stem.slice(0, stem.len() - 2);
                                    undoubled.push(restored);
                                    out.push(Joined { word: undoubled, rule: UDEL_DBL });
                                }
                            }
                        }
                    }
                    // glide: a trailing ய்/வ் licensed by the preceding vowel
                    if let Some(b) = stem.last().and_then(|c| c.base()) {
                        if (b == 'ய' || b == 'வ') && stem.len() >= 2 {
                            let prev = stem.chars()[stem.len() - 2];
                            if let Some(v) = prev.vowel() {
                                let licensed = if b == 'ய' {
                                    script::is_front_vowel(v)
                                } else {
                                    script::is_back_vowel(v)
                                };
                                if licensed {
                                    out.push(Joined {
                                        word: stem.slice(0, stem.len() - 1),
                                        rule: if b == 'ய' { GLIDE_Y } else { GLIDE_V },
                                    });
                                }
                            }
                        }
                    }
                }
                _ => out.push(Joined { word: stem, rule: PLAIN }),
            }
        }
    } else if let Some(stem) = surface.strip_suffix_fused(suffix) {
        out.push(Joined { word: stem.clone(), rule: PLAIN });
        // gem: a pure copy of the suffix-initial hard consonant
        if let Some(b) = first.base() {
            if script::is_hard(b)
                && stem.last().map(|c| c.is_pure_consonant() && c.base() == Some(b)).unwrap_or(false)
            {
                out.push(Joined { word: stem.slice(0, stem.len() - 1), rule: GEM });
            }
        }
    }
    out
}

/// Inverse of [`join_plural`]: strip கள் and undo the junction, returning
/// candidate stems with the class constraint implied by the rule.
pub fn un_plural(surface: &Word) -> Vec<(Word, RuleId)> {
    let kal = w("கள்");
    let mut out = Vec::new();
    let Some(stem) = surface.strip_suffix_fused(&kal) else {
        return out;
    };
    if stem.last().map(|c| c.is_pure_consonant()).unwrap_or(false) {
        let b = stem.last().and_then(|c| c.base()).expect("pure consonant");
        match b {
            'க' => {
                // stop insertion: remove the inserted க்
                out.push((stem.slice(0, stem.len() - 1), STOP_K));
            }
            'ங' => out.push((undo_replace(&stem, 'ம'), ASSIM_M_NG)),
            'ற' => out.push((undo_replace(&stem, 'ல'), ASSIM_L_RR)),
            'ட' => out.push((undo_replace(&stem, 'ள'), ASSIM_LL_TK)),
            'ர' => out.push((undo_replace(&stem, 'ன'), ASSIM_N_R)),
            _ => {}
        }
        out.push((stem, PLAIN));
    } else {
        out.push((stem, PLAIN));
    }
    out
}

fn undo_replace(stem: &Word, original: char) -> Word {
    let mut word = stem.clone();
    let last = word.pop().expect("non-empty");
    word.push(last.with_base(original).expect("alphabet consonant"));
    word
}
