//! Decomposition of raw Tamil text into logical letters and back.
//!
//! Tamil is written in an abugida: a pure consonant and a vowel are written
//! together as one unit (த + உ = து), and Unicode encodes that unit as a
//! consonant code point plus a dependent vowel sign. Every rule in this
//! crate operates on [`TamilChar`] values, never on raw code points, so the
//! rest of the engine can say "the stem ends in a short u" without caring
//! how many code points that takes.

use std::fmt;

use thiserror::Error;
use unicode_normalization::{is_nfc, UnicodeNormalization};

/// The pulli (virama) sign that strips the inherent vowel from a consonant.
pub const PULLI: char = '\u{0BCD}';

/// The 12 independent vowels, in alphabet order.
pub const VOWELS: [char; 12] = [
    'அ', 'ஆ', 'இ', 'ஈ', 'உ', 'ஊ', 'எ', 'ஏ', 'ஐ', 'ஒ', 'ஓ', 'ஔ',
];

/// Dependent vowel signs for ஆ..ஔ (அ is inherent and has no sign).
pub const VOWEL_SIGNS: [char; 11] = [
    '\u{0BBE}', '\u{0BBF}', '\u{0BC0}', '\u{0BC1}', '\u{0BC2}', '\u{0BC6}', '\u{0BC7}',
    '\u{0BC8}', '\u{0BCA}', '\u{0BCB}', '\u{0BCC}',
];

/// The 18 native consonants, in alphabet order.
pub const CONSONANTS: [char; 18] = [
    'க', 'ங', 'ச', 'ஞ', 'ட', 'ண', 'த', 'ந', 'ப', 'ம', 'ய', 'ர', 'ல', 'வ', 'ழ', 'ள',
    'ற', 'ன',
];

/// Grantha consonants accepted alongside the native alphabet.
pub const GRANTHA: [char; 5] = ['ஜ', 'ஶ', 'ஷ', 'ஸ', 'ஹ'];

/// The aytham ஃ, neither vowel nor consonant.
pub const AYTHAM: char = 'ஃ';

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ScriptError {
    #[error("dependent vowel sign at offset {0} has no preceding consonant")]
    OrphanVowelSign(usize),
    #[error("pulli at offset {0} has no preceding consonant")]
    OrphanPulli(usize),
    #[error("compose: {0:?} is not a Tamil consonant")]
    NotAConsonant(char),
    #[error("compose: {0:?} is not a Tamil vowel")]
    NotAVowel(char),
}

/// What sort of logical letter a [`TamilChar`] is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CharKind {
    /// Independent vowel (அ, ஆ, ...).
    Vowel,
    /// Pure consonant, written consonant + pulli (க், த், ...).
    Consonant,
    /// Consonant carrying a vowel, written as one unit (க, கா, கி, ...).
    Composite,
    /// The letter ஃ.
    Aytham,
    /// A grantha letter, pure or vowelled; passes through rules untouched.
    Grantha,
    /// Anything outside the Tamil alphabet (Latin, digits, punctuation).
    NonTamil,
}

/// One logical Tamil letter.
///
/// `base` is the consonant code point (without pulli) when present, `vowel`
/// the independent vowel the letter carries. A composite has both; a pure
/// consonant has only `base`; a plain vowel has only `vowel`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct TamilChar {
    kind: CharKind,
    base: Option<char>,
    vowel: Option<char>,
    /// The original code point for aytham / non-Tamil input.
    other: Option<char>,
}

impl TamilChar {
    pub fn vowel_letter(v: char) -> Result<Self, ScriptError> {
        if !VOWELS.contains(&v) {
            return Err(ScriptError::NotAVowel(v));
        }
        Ok(TamilChar { kind: CharKind::Vowel, base: None, vowel: Some(v), other: None })
    }

    pub fn pure_consonant(c: char) -> Result<Self, ScriptError> {
        let kind = if CONSONANTS.contains(&c) {
            CharKind::Consonant
        } else if GRANTHA.contains(&c) {
            CharKind::Grantha
        } else {
            return Err(ScriptError::NotAConsonant(c));
        };
        Ok(TamilChar { kind, base: Some(c), vowel: None, other: None })
    }

    pub fn aytham() -> Self {
        TamilChar { kind: CharKind::Aytham, base: None, vowel: None, other: Some(AYTHAM) }
    }

    pub fn non_tamil(c: char) -> Self {
        TamilChar { kind: CharKind::NonTamil, base: None, vowel: None, other: Some(c) }
    }

    pub fn kind(&self) -> CharKind {
        self.kind
    }

    /// The consonant code point, if this letter has one.
    pub fn base(&self) -> Option<char> {
        self.base
    }

    /// The independent vowel this letter carries, if any.
    pub fn vowel(&self) -> Option<char> {
        self.vowel
    }

    pub fn is_vowel(&self) -> bool {
        self.kind == CharKind::Vowel
    }

    /// True for a pure consonant (native or grantha) with no vowel.
    pub fn is_pure_consonant(&self) -> bool {
        self.base.is_some() && self.vowel.is_none()
    }

    /// True for any letter that ends in a vowel sound (vowel or composite).
    pub fn ends_in_vowel(&self) -> bool {
        self.vowel.is_some()
    }

    pub fn is_tamil(&self) -> bool {
        self.kind != CharKind::NonTamil
    }

    /// Original code points of this letter, in NFC.
    pub fn raw(&self) -> String {
        let mut s = String::new();
        self.write_raw(&mut s);
        s
    }

    pub(crate) fn write_raw(&self, out: &mut String) {
        match (self.base, self.vowel, self.other) {
            (Some(b), None, _) => {
                out.push(b);
                out.push(PULLI);
            }
            (Some(b), Some(v), _) => {
                out.push(b);
                if let Some(sign) = sign_for(v) {
                    out.push(sign);
                }
            }
            (None, Some(v), _) => out.push(v),
            (None, None, Some(c)) => out.push(c),
            (None, None, None) => unreachable!("empty TamilChar"),
        }
    }

    /// Replace the consonant while keeping the vowel (assimilation helper).
    pub fn with_base(&self, base: char) -> Result<Self, ScriptError> {
        if !CONSONANTS.contains(&base) && !GRANTHA.contains(&base) {
            return Err(ScriptError::NotAConsonant(base));
        }
        let mut c = *self;
        c.base = Some(base);
        Ok(c)
    }

    /// Strip the vowel, leaving the pure consonant, if there is a base.
    pub fn to_pure(&self) -> Option<Self> {
        self.base.map(|b| TamilChar {
            kind: if GRANTHA.contains(&b) { CharKind::Grantha } else { CharKind::Consonant },
            base: Some(b),
            vowel: None,
            other: None,
        })
    }
}

impl fmt::Display for TamilChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.raw())
    }
}

impl fmt::Debug for TamilChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "'{}'", self.raw())
    }
}

/// Fuse a consonant and a vowel into one composite letter.
///
/// `compose(த், உ)` is து; the inherent-vowel form `compose(த், அ)` renders
/// with no visible sign. Grantha consonants compose the same way but keep
/// kind [`CharKind::Grantha`].
pub fn compose(base: char, vowel: char) -> Result<TamilChar, ScriptError> {
    let kind = if CONSONANTS.contains(&base) {
        CharKind::Composite
    } else if GRANTHA.contains(&base) {
        CharKind::Grantha
    } else {
        return Err(ScriptError::NotAConsonant(base));
    };
    if !VOWELS.contains(&vowel) {
        return Err(ScriptError::NotAVowel(vowel));
    }
    Ok(TamilChar { kind, base: Some(base), vowel: Some(vowel), other: None })
}

fn sign_for(vowel: char) -> Option<char> {
    if vowel == 'அ' {
        return None; // inherent vowel, no sign
    }
    VOWELS
        .iter()
        .position(|&v| v == vowel)
        .map(|i| VOWEL_SIGNS[i - 1])
}

fn vowel_for_sign(sign: char) -> Option<char> {
    VOWEL_SIGNS.iter().position(|&s| s == sign).map(|i| VOWELS[i + 1])
}

fn is_consonant_char(c: char) -> bool {
    CONSONANTS.contains(&c) || GRANTHA.contains(&c)
}

/// Split NFC text into logical letters.
///
/// Joining the [`TamilChar::raw`] of every returned letter reproduces the
/// input exactly. Non-Tamil code points pass through one per letter.
pub fn segment(text: &str) -> Result<Vec<TamilChar>, ScriptError> {
    let mut out: Vec<TamilChar> = Vec::new();
    for (offset, ch) in text.char_indices() {
        if VOWELS.contains(&ch) {
            out.push(TamilChar { kind: CharKind::Vowel, base: None, vowel: Some(ch), other: None });
        } else if is_consonant_char(ch) {
            // Inherent-vowel reading until a sign or pulli revises it.
            out.push(compose(ch, 'அ').expect("consonant"));
        } else if ch == PULLI {
            match out.last_mut() {
                Some(last) if last.base.is_some() && last.vowel == Some('அ') => {
                    *last = last.to_pure().expect("base present");
                }
                _ => return Err(ScriptError::OrphanPulli(offset)),
            }
        } else if let Some(v) = vowel_for_sign(ch) {
            match out.last_mut() {
                Some(last) if last.base.is_some() && last.vowel == Some('அ') => {
                    let base = last.base.expect("base present");
                    *last = compose(base, v).expect("checked");
                }
                _ => return Err(ScriptError::OrphanVowelSign(offset)),
            }
        } else if ch == AYTHAM {
            out.push(TamilChar::aytham());
        } else {
            out.push(TamilChar::non_tamil(ch));
        }
    }
    Ok(out)
}

/// Normalize to NFC, then segment.
pub fn segment_normalized(text: &str) -> Result<Vec<TamilChar>, ScriptError> {
    if is_nfc(text) {
        segment(text)
    } else {
        let nfc: String = text.nfc().collect();
        segment(&nfc)
    }
}

// Letter-class predicates used by the sandhi rules. These are stated over
// independent vowels / bare consonant code points.

/// Front vowels select the glide ய்.
pub fn is_front_vowel(v: char) -> bool {
    matches!(v, 'இ' | 'ஈ' | 'எ' | 'ஏ' | 'ஐ')
}

/// Back and central vowels select the glide வ்.
pub fn is_back_vowel(v: char) -> bool {
    matches!(v, 'அ' | 'ஆ' | 'உ' | 'ஊ' | 'ஒ' | 'ஓ' | 'ஔ')
}

pub fn is_long_vowel(v: char) -> bool {
    matches!(v, 'ஆ' | 'ஈ' | 'ஊ' | 'ஏ' | 'ஐ' | 'ஓ' | 'ஔ')
}

pub fn is_short_vowel(v: char) -> bool {
    matches!(v, 'அ' | 'இ' | 'உ' | 'எ' | 'ஒ')
}

/// The hard stops (vallinam): க ச ட த ப ற.
pub fn is_hard(c: char) -> bool {
    matches!(c, 'க' | 'ச' | 'ட' | 'த' | 'ப' | 'ற')
}

/// The nasals (mellinam): ங ஞ ண ந ம ன.
pub fn is_nasal(c: char) -> bool {
    matches!(c, 'ங' | 'ஞ' | 'ண' | 'ந' | 'ம' | 'ன')
}
