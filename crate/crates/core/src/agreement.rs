//! Subject–verb agreement: expected terminals, coordination resolution,
//! the shallow checker with its plurality leniency, and differential
//! object marking.

use thiserror::Error;

use crate::lexicon::{Gender, Rationality};
use crate::noun::{Case, Number};
use crate::trace::{Analysis, Features};
use crate::verb::{Finiteness, Png, Tense};

/// A resolved subject NP: person, number, gender, rationality.
///
/// The five traditional gender values map onto these triples: āṇpāl is
/// (masc, sg, rational), peṇpāl (fem, sg, rational), palarpāl (epicene,
/// pl, rational), onranpāl (neuter, sg, irrational), palavinpāl (neuter,
/// pl, irrational).
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct AgrBundle {
    pub person: u8,
    pub number: Number,
    pub gender: Gender,
    pub rationality: Rationality,
    pub honorific: bool,
    pub case: Case,
}

impl AgrBundle {
    pub fn new(person: u8, number: Number, gender: Gender, rationality: Rationality) -> Self {
        AgrBundle { person, number, gender, rationality, honorific: false, case: Case::Nom }
    }

    /// The five-way gender value this bundle realises.
    pub fn paal(&self) -> &'static str {
        match (self.rationality, self.gender, self.number) {
            (Rationality::Rational, Gender::Masc, Number::Sg) => "āṇpāl",
            (Rationality::Rational, Gender::Fem, Number::Sg) => "peṇpāl",
            (Rationality::Rational, _, _) => "palarpāl",
            (Rationality::Irrational, _, Number::Sg) => "onranpāl",
            (Rationality::Irrational, _, Number::Pl) => "palavinpāl",
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AgreementError {
    #[error("cannot resolve agreement over an empty subject list")]
    EmptySubjects,
    #[error("disjoined subjects have no determined agreement")]
    Disjunction,
}

/// What the verb's terminal should be for a subject, with the dative-
/// subject default and the honorific override applied.
pub fn expected_terminal(subject: &AgrBundle) -> (Png, Option<Tense>) {
    if subject.case == Case::Dat {
        // default agreement: third person neuter with the -um medial
        return (Png::P3sn, Some(Tense::FutUm));
    }
    if subject.honorific {
        // the plural suffix marks honorifics whatever the semantic number
        return (Png::P3ph, None);
    }
    let png = match (subject.person, subject.number) {
        (1, Number::Sg) => Png::P1s,
        (1, Number::Pl) => Png::P1p,
        (2, Number::Sg) => Png::P2s,
        (2, Number::Pl) => Png::P2p,
        (_, Number::Sg) => match (subject.rationality, subject.gender) {
            (Rationality::Rational, Gender::Masc) => Png::P3sm,
            (Rationality::Rational, Gender::Fem) => Png::P3sf,
            (Rationality::Rational, _) => Png::P3sh,
            (Rationality::Irrational, _) => Png::P3sn,
        },
        (_, Number::Pl) => match subject.rationality {
            Rationality::Rational => Png::P3pe,
            Rationality::Irrational => Png::P3pn,
        },
    };
    (png, None)
}

/// Resolve conjoined subjects by the precedence rules: rationality always
/// takes precedence, and the lowest rational person wins; irrational
/// conjuncts never raise person or rationality.
pub fn resolve_coordination(subjects: &[AgrBundle]) -> Result<AgrBundle, AgreementError> {
    if subjects.is_empty() {
        return Err(AgreementError::EmptySubjects);
    }
    if subjects.len() == 1 {
        return Ok(subjects[0]);
    }
    let rational: Vec<&AgrBundle> =
        subjects.iter().filter(|s| s.rationality == Rationality::Rational).collect();
    if rational.is_empty() {
        return Ok(AgrBundle::new(3, Number::Pl, Gender::Neuter, Rationality::Irrational));
    }
    let person = rational.iter().map(|s| s.person).min().expect("non-empty");
    Ok(AgrBundle::new(person, Number::Pl, Gender::Epicene, Rationality::Rational))
}

/// Disjoined subjects (ஓ, அல்லது) have no determined agreement; callers
/// get the fact, not a guess.
pub fn resolve_disjunction(subjects: &[AgrBundle]) -> Result<AgrBundle, AgreementError> {
    if subjects.is_empty() {
        return Err(AgreementError::EmptySubjects);
    }
    if subjects.len() == 1 {
        return Ok(subjects[0]);
    }
    Err(AgreementError::Disjunction)
}

/// Null-copula equatives (கண்ணன் ஒரு மாணவன்) have no verb to agree with;
/// the check is NP–NP compatibility: both phrases nominative.
pub fn check_equative(subject_case: Case, predicate_case: Case) -> CheckOutcome {
    if subject_case == Case::Nom && predicate_case == Case::Nom {
        CheckOutcome::Ok
    } else {
        CheckOutcome::Mismatch(MismatchReport {
            slot: "case",
            expected: "nom nom".into(),
            found: format!("{} {}", subject_case.tag(), predicate_case.tag()),
            leniency_applied: false,
        })
    }
}

/// Outcome of checking one verb against one subject.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub enum CheckOutcome {
    Ok,
    /// Accepted under the corpus-attested leniency: neuter singular agreement on a
    /// plural irrational subject.
    OkWithLeniency,
    NotApplicable(String),
    Mismatch(MismatchReport),
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct MismatchReport {
    pub slot: &'static str,
    pub expected: String,
    pub found: String,
    pub leniency_applied: bool,
}

/// Check a finite verb analysis against a subject bundle.
pub fn check(subject: &AgrBundle, verb: &Analysis, lenient_plural: bool) -> CheckOutcome {
    let features = match &verb.features {
        Features::Verb(f) => f.clone(),
        Features::VerbChain(units) => units.last().expect("non-empty chain").1.clone(),
        _ => return CheckOutcome::NotApplicable("not a verb".into()),
    };
    if features.finiteness != Finiteness::Finite {
        return CheckOutcome::NotApplicable("verb is not finite".into());
    }
    let (expected, expected_tense) = expected_terminal(subject);

    if let Some(required) = expected_tense {
        if subject.case == Case::Dat {
            if features.tense == Some(required) {
                return CheckOutcome::Ok;
            }
            return CheckOutcome::Mismatch(MismatchReport {
                slot: "medial",
                expected: "fut_um".into(),
                found: features
                    .tense
                    .map(|t| crate::verb::tense_tag(t, features.pres_allomorph).to_string())
                    .unwrap_or_else(|| "none".into()),
                leniency_applied: false,
            });
        }
    }

    // the -um future agrees with any neuter subject
    if features.tense == Some(Tense::FutUm) {
        if matches!(expected, Png::P3sn | Png::P3pn) {
            return CheckOutcome::Ok;
        }
        return CheckOutcome::Mismatch(MismatchReport {
            slot: "terminal",
            expected: expected.tag().into(),
            found: "fut_um".into(),
            leniency_applied: false,
        });
    }

    let Some(found) = features.png else {
        return CheckOutcome::NotApplicable("verb carries no terminal".into());
    };
    if terminals_match(expected, found, subject) {
        return CheckOutcome::Ok;
    }
    if lenient_plural
        && expected == Png::P3pn
        && found == Png::P3sn
        && subject.rationality == Rationality::Irrational
    {
        return CheckOutcome::OkWithLeniency;
    }
    let slot = match (expected, found) {
        (Png::P3sm, Png::P3sf) | (Png::P3sf, Png::P3sm) => "gender",
        (e, f) if suffix_person(e) != suffix_person(f) => "person",
        (e, f) if suffix_number(e) != suffix_number(f) => "number",
        _ => "terminal",
    };
    CheckOutcome::Mismatch(MismatchReport {
        slot,
        expected: expected.tag().into(),
        found: found.tag().into(),
        leniency_applied: false,
    })
}

fn terminals_match(expected: Png, found: Png, subject: &AgrBundle) -> bool {
    if expected == found {
        return true;
    }
    // ஆர்கள் serves both the epicene plural and the honorific plural, and
    // honorific ஆர் vs ஆர்கள் selection is free for honorific subjects.
    match (expected, found) {
        (Png::P3pe, Png::P3ph) | (Png::P3ph, Png::P3pe) => true,
        (Png::P3ph, Png::P3sh) | (Png::P3sh, Png::P3ph) => subject.honorific,
        _ => false,
    }
}

fn suffix_number(png: Png) -> Number {
    match png {
        Png::P1p | Png::P2p | Png::P3pe | Png::P3ph | Png::P3pn | Png::ArchAr => Number::Pl,
        _ => Number::Sg,
    }
}

fn suffix_person(png: Png) -> u8 {
    match png {
        Png::P1s | Png::P1p => 1,
        Png::P2s | Png::P2h | Png::P2p => 2,
        _ => 3,
    }
}

/// Differential object marking: the accusative is obligatory on rational
/// objects; on irrationals it marks definiteness.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub enum DomOutcome {
    Ok,
    OkDefinite,
    OkIndefinite,
    Violation(String),
}

pub fn check_dom(rationality: Rationality, case: Case) -> DomOutcome {
    match (rationality, case) {
        (Rationality::Rational, Case::Acc) => DomOutcome::Ok,
        (Rationality::Rational, _) => DomOutcome::Violation(
            "rational objects must carry the accusative case".into(),
        ),
        (Rationality::Irrational, Case::Acc) => DomOutcome::OkDefinite,
        (Rationality::Irrational, _) => DomOutcome::OkIndefinite,
    }
}
