//! Letter-level word values.
//!
//! A [`Word`] is a sequence of [`TamilChar`]s. Morph boundaries in Tamil
//! often fall *inside* a written unit (மரத்தை splits as மரத்த் + ஐ), so the
//! type carries the split-aware prefix/suffix operations the analyser needs.

use std::fmt;

use crate::script::{self, compose, ScriptError, TamilChar};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<TamilChar>);

impl Word {
    pub fn new() -> Self {
        Word(Vec::new())
    }

    /// Parse NFC text into a word. Errors on stray signs.
    pub fn parse(text: &str) -> Result<Self, ScriptError> {
        Ok(Word(script::segment_normalized(text)?))
    }

    pub fn from_chars(chars: Vec<TamilChar>) -> Self {
        Word(chars)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn chars(&self) -> &[TamilChar] {
        &self.0
    }

    pub fn first(&self) -> Option<TamilChar> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<TamilChar> {
        self.0.last().copied()
    }

    pub fn push(&mut self, c: TamilChar) {
        self.0.push(c);
    }

    pub fn pop(&mut self) -> Option<TamilChar> {
        self.0.pop()
    }

    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    pub fn text(&self) -> String {
        let mut s = String::new();
        for c in &self.0 {
            c.write_raw(&mut s);
        }
        s
    }

    pub fn is_all_tamil(&self) -> bool {
        self.0.iter().all(|c| c.is_tamil())
    }

    /// Append `other`, fusing a trailing pure consonant with a leading vowel
    /// into one composite, as the script requires at every junction.
    pub fn append_fused(&self, other: &Word) -> Word {
        let mut out = self.0.clone();
        let mut rest = other.0.as_slice();
        if let (Some(last), Some(first)) = (out.last().copied(), rest.first()) {
            if last.is_pure_consonant() && first.is_vowel() {
                let fused = compose(last.base().expect("pure consonant"), first.vowel().expect("vowel"))
                    .expect("alphabet letters");
                *out.last_mut().expect("non-empty") = fused;
                rest = &rest[1..];
            }
        }
        out.extend_from_slice(rest);
        Word(out)
    }

    /// Plain concatenation without fusion.
    pub fn concat(&self, other: &Word) -> Word {
        let mut out = self.0.clone();
        out.extend_from_slice(&other.0);
        Word(out)
    }

    /// Does this word end with `suffix`, allowing the boundary to fall
    /// inside a composite? Returns the remaining stem on success.
    ///
    /// மரத்தை ends with ஐ: the final தை splits into த் + ஐ, leaving மரத்த்.
    pub fn strip_suffix_fused(&self, suffix: &Word) -> Option<Word> {
        if suffix.is_empty() {
            return Some(self.clone());
        }
        if suffix.len() > self.len() {
            return None;
        }
        let tail_start = self.len() - suffix.len();
        // All but the first suffix letter must match exactly.
        if self.0[tail_start + 1..] != suffix.0[1..] {
            return None;
        }
        let boundary = self.0[tail_start];
        let first = suffix.0[0];
        if boundary == first {
            return Some(self.slice(0, tail_start));
        }
        // Boundary composite carrying the suffix-initial vowel splits.
        if first.is_vowel()
            && boundary.base().is_some()
            && boundary.vowel() == first.vowel()
        {
            let mut stem = self.slice(0, tail_start);
            stem.push(boundary.to_pure().expect("base present"));
            return Some(stem);
        }
        None
    }

    /// Does this word start with `prefix`, allowing the boundary to fall
    /// inside a composite? Returns the remainder.
    ///
    /// நடந்தான் starts with the stem நடந்த்; the remainder is ஆன்.
    pub fn strip_prefix_fused(&self, prefix: &Word) -> Option<Word> {
        if prefix.is_empty() {
            return Some(self.clone());
        }
        if prefix.len() > self.len() {
            return None;
        }
        let head_end = prefix.len() - 1;
        if self.0[..head_end] != prefix.0[..head_end] {
            return None;
        }
        let boundary = self.0[head_end];
        let last = prefix.0[head_end];
        if boundary == last {
            return Some(self.slice(prefix.len(), self.len()));
        }
        // Prefix ends in a pure consonant that the text fused with the
        // following vowel: split it back out.
        if last.is_pure_consonant()
            && boundary.base() == last.base()
            && boundary.vowel().is_some()
        {
            let mut rest = Word::new();
            rest.push(
                TamilChar::vowel_letter(boundary.vowel().expect("has vowel"))
                    .expect("alphabet vowel"),
            );
            for c in &self.0[prefix.len()..] {
                rest.push(*c);
            }
            return Some(rest);
        }
        None
    }

    pub fn ends_with(&self, suffix: &Word) -> bool {
        self.len() >= suffix.len() && self.0[self.len() - suffix.len()..] == suffix.0
    }

    /// Final letter is a composite carrying உ on a hard consonant, in a word
    /// where that உ is overshort (kurriyal ukaram) and elides before vowels.
    /// Single short-letter + Cu words (பசு) keep their full உ.
    pub fn ends_in_overshort_u(&self) -> bool {
        let Some(last) = self.last() else { return false };
        let (Some(base), Some('உ')) = (last.base(), last.vowel()) else {
            return false;
        };
        if !script::is_hard(base) {
            return false;
        }
        match self.len() {
            0 | 1 => false,
            2 => {
                let first = self.0[0];
                match first.vowel() {
                    // கா-டு is overshort, ப-சு is not.
                    Some(v) => script::is_long_vowel(v),
                    None => true,
                }
            }
            _ => true,
        }
    }

    /// Two letters, short vowel, ending in a pure consonant: the shape whose
    /// final consonant doubles before vowel-initial suffixes (கண், புல், செய்).
    /// ர் and ழ் never geminate in the orthography.
    pub fn is_short_monosyllable(&self) -> bool {
        if self.len() != 2 {
            return false;
        }
        let head = self.0[0];
        let last = self.0[1];
        last.is_pure_consonant()
            && !matches!(last.base(), Some('ர') | Some('ழ'))
            && head.vowel().map(script::is_short_vowel).unwrap_or(false)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{}\"", self.text())
    }
}

impl std::str::FromStr for Word {
    type Err = ScriptError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Word::parse(s)
    }
}

/// Parse a rule-table literal; panics on invalid text, which would be a bug
/// in the tables, not in user input.
pub(crate) fn w(text: &str) -> Word {
    Word::parse(text).expect("rule-table literal")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_text() {
        for t in ["மரம்", "கதிரையுடன்", "வந்துகொண்டிருந்திருக்கிறான்", "abc மரம்!"] {
            assert_eq!(Word::parse(t).unwrap().text(), t);
        }
    }

    #[test]
    fn append_fuses_consonant_and_vowel() {
        let stem = w("மரத்த்");
        let suffix = w("ஐ");
        assert_eq!(stem.append_fused(&suffix).text(), "மரத்தை");
        // No fusion when the suffix starts with a consonant.
        assert_eq!(w("மரம்").append_fused(&w("கள்")).text(), "மரம்கள்");
    }

    #[test]
    fn strip_suffix_splits_composites() {
        let word = w("மரத்தை");
        let stem = word.strip_suffix_fused(&w("ஐ")).unwrap();
        assert_eq!(stem.text(), "மரத்த்");
        assert!(word.strip_suffix_fused(&w("ஆல்")).is_none());
    }

    #[test]
    fn strip_prefix_splits_composites() {
        let word = w("நடந்தான்");
        let rest = word.strip_prefix_fused(&w("நடந்த்")).unwrap();
        assert_eq!(rest.text(), "ஆன்");
        assert!(word.strip_prefix_fused(&w("நடப்ப்")).is_none());
    }

    #[test]
    fn overshort_u_shapes() {
        assert!(w("காடு").ends_in_overshort_u());
        assert!(w("வண்டு").ends_in_overshort_u());
        assert!(w("கொழும்பு").ends_in_overshort_u());
        assert!(!w("பசு").ends_in_overshort_u()); // full u, takes a glide
        assert!(!w("பூ").ends_in_overshort_u());
        assert!(!w("கதவு").ends_in_overshort_u()); // வ is not a hard stop
    }

    #[test]
    fn short_monosyllables() {
        assert!(w("கண்").is_short_monosyllable());
        assert!(w("புல்").is_short_monosyllable());
        assert!(w("செய்").is_short_monosyllable());
        assert!(!w("நாள்").is_short_monosyllable());
        assert!(!w("மாணவன்").is_short_monosyllable());
    }
}
