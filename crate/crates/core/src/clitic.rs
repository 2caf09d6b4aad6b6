//! Word-final clitics: strip them from tokens and attach them to stems.

use thiserror::Error;

use crate::sandhi::{self, JoinOpts};
use crate::word::{w, Word};

/// The clitic inventory. ஏ is provisional and sits behind a flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum Clitic {
    /// ஆ — interrogative.
    Aa,
    /// தான் — emphatic (only when written together with its host).
    Taan,
    /// உம் — inclusive / conjunctive.
    Um,
    /// ஓ — disjunctive / doubt.
    Oo,
    /// ஏ — emphatic, provisional.
    Ee,
}

impl Clitic {
    pub fn inventory(enable_ee: bool) -> &'static [Clitic] {
        if enable_ee {
            &[Clitic::Aa, Clitic::Taan, Clitic::Um, Clitic::Oo, Clitic::Ee]
        } else {
            &[Clitic::Aa, Clitic::Taan, Clitic::Um, Clitic::Oo]
        }
    }

    pub fn form(self) -> Word {
        match self {
            Clitic::Aa => w("ஆ"),
            Clitic::Taan => w("தான்"),
            Clitic::Um => w("உம்"),
            Clitic::Oo => w("ஓ"),
            Clitic::Ee => w("ஏ"),
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Clitic::Aa => "q_aa",
            Clitic::Taan => "emph_taan",
            Clitic::Um => "incl_um",
            Clitic::Oo => "disj_oo",
            Clitic::Ee => "emph_ee",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        Some(match tag {
            "q_aa" => Clitic::Aa,
            "emph_taan" => Clitic::Taan,
            "incl_um" => Clitic::Um,
            "disj_oo" => Clitic::Oo,
            "emph_ee" => Clitic::Ee,
            _ => return None,
        })
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CliticError {
    #[error("a clitic cannot follow the augment {0:?}: augments anticipate a following word")]
    OnAugment(char),
}

/// Attach a clitic. Vowel-final stems take a glide; an overshort final உ
/// fuses instead (கொழும்புக்கு + ஆ → கொழும்புக்கா).
pub fn attach(stem: &Word, clitic: Clitic) -> Result<sandhi::Joined, CliticError> {
    if let Some(aug) = sandhi::final_augment(stem) {
        return Err(CliticError::OnAugment(aug.consonant()));
    }
    Ok(sandhi::join(stem, &clitic.form(), JoinOpts::default()))
}

/// One clitic-split hypothesis: the remaining stem and the clitic taken.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliticSplit {
    pub stem: Word,
    pub clitic: Option<Clitic>,
    pub rule: Option<sandhi::RuleId>,
}

/// All splits of a token into stem + optional clitic. The no-clitic
/// hypothesis always comes first; whether a stem survives analysis is the
/// caller's business.
pub fn strip(token: &Word, enable_ee: bool) -> Vec<CliticSplit> {
    let mut out = vec![CliticSplit { stem: token.clone(), clitic: None, rule: None }];
    for &clitic in Clitic::inventory(enable_ee) {
        for candidate in sandhi::un_join(token, &clitic.form()) {
            if candidate.word.is_empty() {
                continue; // the bare clitic is not a host
            }
            out.push(CliticSplit {
                stem: candidate.word,
                clitic: Some(clitic),
                rule: Some(candidate.rule),
            });
        }
    }
    out
}
