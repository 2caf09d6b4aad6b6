//! Property tests: random feature bundles round-trip through
//! generation and analysis, and every trace replays to its own surface.

use proptest::prelude::*;

use tamil_morph::analyze::Analyzer;
use tamil_morph::lexicon::{Lexicon, Pos};
use tamil_morph::noun::{self, Case, Euphonic, NounFeatures, Number};
use tamil_morph::sandhi::Augment;
use tamil_morph::trace;
use tamil_morph::verb::{self, Finiteness, Png, Tense, VerbFeatures};
use tamil_morph::word::Word;

const LEXICON: &str = include_str!("../fixtures/lexicon.tsv");

fn lexicon() -> &'static Lexicon {
    use std::sync::OnceLock;
    static LEX: OnceLock<Lexicon> = OnceLock::new();
    LEX.get_or_init(|| Lexicon::load(LEXICON).expect("fixture lexicon"))
}

fn analyzer() -> &'static Analyzer<'static> {
    use std::sync::OnceLock;
    static A: OnceLock<Analyzer<'static>> = OnceLock::new();
    A.get_or_init(|| Analyzer::new(lexicon()))
}

fn noun_features() -> impl Strategy<Value = NounFeatures> {
    let case = prop_oneof![
        Just(Case::Nom),
        Just(Case::Acc),
        Just(Case::Inst),
        Just(Case::Soc),
        Just(Case::Dat),
        Just(Case::Abl),
        Just(Case::Gen),
        Just(Case::Loc),
        Just(Case::Voc),
    ];
    (
        prop::bool::ANY,
        case,
        0u8..4,
        prop::collection::vec(
            prop_oneof![Just(Euphonic::An), Just(Euphonic::In), Just(Euphonic::U)],
            0..=2,
        ),
        prop::option::weighted(
            0.2,
            prop_oneof![Just(Augment::K), Just(Augment::C), Just(Augment::T), Just(Augment::P)],
        ),
    )
        .prop_map(|(plural, case, allo, euphonics, augment)| {
            let mut f = NounFeatures::new(
                if plural { Number::Pl } else { Number::Sg },
                case,
            );
            f.case_allomorph = allo % case.allomorphs().len() as u8;
            f.euphonics = euphonics;
            f.augment = augment;
            f
        })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, ..ProptestConfig::default() })]

    /// analyse(generate(entry, features)) contains (entry, features).
    #[test]
    fn noun_generate_analyze_round_trip(
        entry_pick in 0usize..1000,
        features in noun_features(),
    ) {
        let lex = lexicon();
        let nouns: Vec<_> = lex.entries().iter().filter(|e| e.pos == Pos::Noun).collect();
        let entry = nouns[entry_pick % nouns.len()];
        let Ok(analysis) = noun::inflect(entry, &features) else {
            // the bundle violates an invariant for this entry; that is the
            // generator refusing, not a round-trip failure
            return Ok(());
        };
        let word = Word::parse(&analysis.surface).unwrap();
        let back = analyzer().analyze(&word);
        prop_assert!(
            back.iter().any(|a| a.lemma == analysis.lemma && a.tag == analysis.tag),
            "{} [{} {}] not among {:?}",
            analysis.surface,
            analysis.lemma,
            analysis.tag,
            back.iter().map(|a| format!("{} {}", a.lemma, a.tag)).collect::<Vec<_>>()
        );
    }

    /// Every generated analysis replays to its own surface through the
    /// recorded segmentation and rule ids alone.
    #[test]
    fn noun_traces_replay(
        entry_pick in 0usize..1000,
        features in noun_features(),
    ) {
        let lex = lexicon();
        let nouns: Vec<_> = lex.entries().iter().filter(|e| e.pos == Pos::Noun).collect();
        let entry = nouns[entry_pick % nouns.len()];
        let Ok(analysis) = noun::inflect(entry, &features) else {
            return Ok(());
        };
        prop_assert_eq!(trace::replay(&analysis).unwrap(), analysis.surface);
    }

    /// Finite verbs round-trip across tense, agreement and voice.
    #[test]
    fn verb_generate_analyze_round_trip(
        entry_pick in 0usize..1000,
        tense_pick in 0usize..4,
        png_pick in 0usize..11,
        causative in prop::bool::ANY,
        passive in prop::bool::weighted(0.2),
    ) {
        let lex = lexicon();
        let verbs: Vec<_> = lex.entries().iter().filter(|e| e.pos == Pos::Verb).collect();
        let entry = verbs[entry_pick % verbs.len()];
        let tenses = [Tense::Past, Tense::Pres, Tense::Fut, Tense::FutUm];
        let pngs = [
            Png::P1s, Png::P1p, Png::P2s, Png::P2h, Png::P2p, Png::P3sm,
            Png::P3sf, Png::P3sh, Png::P3pe, Png::P3sn, Png::P3pn,
        ];
        let mut features = VerbFeatures::finite(tenses[tense_pick], pngs[png_pick]);
        features.causative = causative;
        features.passive = passive;
        let Ok(analysis) = verb::conjugate(entry, &features) else {
            return Ok(());
        };
        let word = Word::parse(&analysis.surface).unwrap();
        let back = analyzer().analyze(&word);
        prop_assert!(
            back.iter().any(|a| a.lemma == analysis.lemma && a.tag == analysis.tag),
            "{} [{} {}] not among {:?}",
            analysis.surface,
            analysis.lemma,
            analysis.tag,
            back.iter().map(|a| format!("{} {}", a.lemma, a.tag)).collect::<Vec<_>>()
        );
    }

    /// Verb traces replay, non-finite forms included.
    #[test]
    fn verb_traces_replay(
        entry_pick in 0usize..1000,
        shape in 0usize..6,
    ) {
        let lex = lexicon();
        let verbs: Vec<_> = lex.entries().iter().filter(|e| e.pos == Pos::Verb).collect();
        let entry = verbs[entry_pick % verbs.len()];
        let features = match shape {
            0 => VerbFeatures::finite(Tense::Past, Png::P3sm),
            1 => VerbFeatures::bare(Finiteness::Infinitive),
            2 => VerbFeatures::bare(Finiteness::Vpart),
            3 => VerbFeatures::bare(Finiteness::Conditional),
            4 => VerbFeatures::bare(Finiteness::Hortative),
            _ => {
                let mut f = VerbFeatures::bare(Finiteness::RelParticiple);
                f.tense = Some(Tense::Past);
                f
            }
        };
        let Ok(analysis) = verb::conjugate(entry, &features) else {
            return Ok(());
        };
        prop_assert_eq!(trace::replay(&analysis).unwrap(), analysis.surface);
    }

    /// Clitic attach/strip is a section/retraction pair.
    #[test]
    fn clitic_round_trip(
        stem_pick in 0usize..1000,
        clitic_pick in 0usize..4,
    ) {
        use tamil_morph::clitic::{attach, strip, Clitic};
        let lex = lexicon();
        let entries: Vec<_> = lex.entries().iter().collect();
        let entry = entries[stem_pick % entries.len()];
        let clitic = [Clitic::Aa, Clitic::Taan, Clitic::Um, Clitic::Oo][clitic_pick];
        let Ok(joined) = attach(&entry.lemma, clitic) else {
            return Ok(());
        };
        let splits = strip(&joined.word, false);
        prop_assert!(
            splits.iter().any(|s| s.stem == entry.lemma && s.clitic == Some(clitic)),
            "strip({}) lost ({}, {:?})",
            joined.word.text(),
            entry.lemma.text(),
            clitic
        );
    }
}

/// Replay identity over a thousand deterministic (entry, features) pairs.
#[test]
fn replay_identity_over_generated_pairs() {
    let lex = lexicon();
    let nouns: Vec<_> = lex.entries().iter().filter(|e| e.pos == Pos::Noun).collect();
    let verbs: Vec<_> = lex.entries().iter().filter(|e| e.pos == Pos::Verb).collect();
    let mut state = 0x5eedu64;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    let mut checked = 0usize;
    while checked < 1000 {
        let r = next();
        let analysis = if r % 2 == 0 {
            let entry = nouns[(r / 2) as usize % nouns.len()];
            let case = Case::ALL[(r / 16) as usize % 9];
            let mut f = NounFeatures::new(
                if r & 4 == 0 { Number::Sg } else { Number::Pl },
                case,
            );
            f.case_allomorph = ((r / 256) % case.allomorphs().len() as u64) as u8;
            match noun::inflect(entry, &f) {
                Ok(a) => a,
                Err(_) => continue,
            }
        } else {
            let entry = verbs[(r / 2) as usize % verbs.len()];
            let tense = [Tense::Past, Tense::Pres, Tense::Fut, Tense::FutUm][(r / 8) as usize % 4];
            let png = [
                Png::P1s, Png::P1p, Png::P2s, Png::P2p, Png::P3sm, Png::P3sf,
                Png::P3sh, Png::P3pe, Png::P3sn, Png::P3pn,
            ][(r / 64) as usize % 10];
            match verb::conjugate(entry, &VerbFeatures::finite(tense, png)) {
                Ok(a) => a,
                Err(_) => continue,
            }
        };
        assert_eq!(
            trace::replay(&analysis).expect("replayable"),
            analysis.surface,
            "replay of {} [{}]",
            analysis.surface,
            analysis.tag
        );
        checked += 1;
    }
    assert_eq!(checked, 1000);
}

/// The analyser never accepts a segmentation it cannot replay.
#[test]
fn analyses_replay_to_their_token() {
    let analyzer = analyzer();
    for token in [
        "மரங்களினால்",
        "மரத்தினுக்கு",
        "வந்துகொண்டிருந்திருக்கிறான்",
        "வாங்கிக்கொடுத்தான்",
        "நடப்பித்தவர்களுக்குப்",
        "கொழும்புக்கா",
        "தடியைக்கொண்டு",
        "நடக்காவிட்டால்",
    ] {
        let analyses = analyzer.analyze(&Word::parse(token).unwrap());
        assert!(!analyses.is_empty(), "{token} should analyse");
        for analysis in analyses {
            assert_eq!(
                trace::replay(&analysis).expect("replayable"),
                token,
                "replay of {} [{}]",
                analysis.surface,
                analysis.tag
            );
        }
    }
}
