//! Rule-based morphological analyser and generator for written Tamil.
//!
//! The crate decomposes Tamil text into logical letters ([`script`]), joins
//! morphs through an explicit sandhi rule table ([`sandhi`]), inflects and
//! analyses nouns and verbs against the nominal and verbal paradigms
//! ([`noun`], [`verb`]), derives adjectives and adverbs ([`adjadv`]),
//! strips and attaches clitics ([`clitic`]), and checks subject–verb
//! agreement ([`agreement`]). Every analysis carries a morph segmentation
//! and the sandhi rules that fired, and can be replayed back to the exact
//! surface form ([`trace`]).

pub mod adjadv;
pub mod agreement;
pub mod analyze;
pub mod clitic;
pub mod lexicon;
pub mod noun;
pub mod sandhi;
pub mod tags;
pub mod script;
pub mod trace;
pub mod verb;
pub mod word;

pub use script::{compose, segment, CharKind, TamilChar};
pub use word::Word;
