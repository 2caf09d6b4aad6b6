//! Batch command-line front end over the analyser and generator.

use std::io::{Read, Write};
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use tamil_morph::agreement::{self, AgrBundle};
use tamil_morph::analyze::{generate, join_token_pair, Analyzer};
use tamil_morph::lexicon::{Gender, Lexicon, Pos, Rationality};
use tamil_morph::noun::{Case, Number};
use tamil_morph::word::Word;
use tamil_morph::{adjadv, lexicon, noun, sandhi, verb};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Analyze,
    Generate,
    Paradigm,
    Classify,
    Agree,
    Selftest,
    Rules,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    JsonLines,
}

#[derive(Parser, Debug)]
#[command(name = "tamil-morph", about = "Morphological analyser and generator for written Tamil")]
struct Args {
    /// Lexicon TSV: lemma, pos, class (or auto), rationality, gender, gloss
    #[arg(long)]
    lexicon: std::path::PathBuf,
    #[arg(long, value_enum, default_value_t = Mode::Analyze)]
    mode: Mode,
    #[arg(long, value_enum, default_value_t = Format::Tsv)]
    format: Format,
    /// Accept neuter-singular agreement on plural irrational subjects
    #[arg(long)]
    lenient_plural: bool,
    /// Enable the provisional emphatic ஏ clitic
    #[arg(long)]
    enable_ee_clitic: bool,
    /// Mode-specific positional input (lemma, tags, tokens)
    rest: Vec<String>,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let source = match std::fs::read_to_string(&args.lexicon) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("cannot read lexicon {}: {e}", args.lexicon.display());
            return ExitCode::from(2);
        }
    };
    let lexicon = match Lexicon::load(&source) {
        Ok(l) => l,
        Err(e) => {
            eprintln!("lexicon error: {e}");
            return ExitCode::from(2);
        }
    };
    let mut analyzer = Analyzer::new(&lexicon);
    analyzer.enable_ee_clitic = args.enable_ee_clitic;

    match args.mode {
        Mode::Analyze => run_analyze(&args, &analyzer),
        Mode::Generate => run_generate(&args, &lexicon),
        Mode::Paradigm => run_paradigm(&args, &lexicon),
        Mode::Classify => run_classify(&args),
        Mode::Agree => run_agree(&args, &analyzer),
        Mode::Selftest => run_selftest(&lexicon, &analyzer),
        Mode::Rules => {
            for (id, description) in sandhi::RULES {
                println!("{id}\t{description}");
            }
            ExitCode::SUCCESS
        }
    }
}

fn read_stdin() -> Result<String, ExitCode> {
    let mut buf = Vec::new();
    if std::io::stdin().read_to_end(&mut buf).is_err() {
        eprintln!("cannot read stdin");
        return Err(ExitCode::from(2));
    }
    match String::from_utf8(buf) {
        Ok(s) => Ok(s),
        Err(e) => {
            eprintln!("input is not valid UTF-8 at byte {}", e.utf8_error().valid_up_to());
            Err(ExitCode::from(2))
        }
    }
}

fn print_analysis(
    out: &mut impl Write,
    format: Format,
    token: &str,
    analysis: &tamil_morph::trace::Analysis,
) {
    match format {
        Format::Tsv => {
            let _ = writeln!(out, "{token}\t{}\t{}", analysis.lemma, analysis.tag);
        }
        Format::JsonLines => {
            let _ = writeln!(out, "{}", serde_json::to_string(analysis).expect("serializable"));
        }
    }
}

fn run_analyze(args: &Args, analyzer: &Analyzer) -> ExitCode {
    let input = if args.rest.is_empty() {
        match read_stdin() {
            Ok(s) => s,
            Err(code) => return code,
        }
    } else {
        args.rest.join(" ")
    };
    let tokens: Vec<&str> = input.split_whitespace().collect();
    let mut unknown = false;
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    for (i, token) in tokens.iter().enumerate() {
        let word = match Word::parse(token) {
            Ok(w) => w,
            Err(e) => {
                eprintln!("cannot segment {token:?}: {e}");
                return ExitCode::from(2);
            }
        };
        let analyses = analyzer.analyze(&word);
        if analyses.is_empty() {
            unknown = true;
            let _ = writeln!(out, "{token}\t?");
        } else {
            for analysis in &analyses {
                print_analysis(&mut out, args.format, token, analysis);
            }
        }
        // second pass: an augment-final token anticipates its successor,
        // and a doubled adjective is reduplication
        if let Some(next) = tokens.get(i + 1) {
            if let Ok(right) = Word::parse(next) {
                for joined in join_token_pair(analyzer, &word, &right) {
                    let pair = format!("{token}⁺{next}");
                    print_analysis(&mut out, args.format, &pair, &joined);
                }
                if let Some(phrase) =
                    tamil_morph::analyze::reduplication_of(analyzer, &word, &right)
                {
                    let _ = writeln!(out, "{phrase}\t{token}\tadj.redup");
                }
            }
        }
    }
    if unknown {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn run_generate(args: &Args, lexicon: &Lexicon) -> ExitCode {
    let pairs: Vec<(String, String)> = if args.rest.len() >= 2 {
        vec![(args.rest[0].clone(), args.rest[1].clone())]
    } else {
        let input = match read_stdin() {
            Ok(s) => s,
            Err(code) => return code,
        };
        input
            .lines()
            .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
            .filter_map(|l| {
                let mut cols = l.split('\t');
                Some((cols.next()?.trim().to_string(), cols.next()?.trim().to_string()))
            })
            .collect()
    };
    for (lemma, tag) in pairs {
        match generate(lexicon, &lemma, &tag) {
            Ok(analysis) => println!("{}\t{}\t{}", lemma, tag, analysis.surface),
            Err(e) => {
                eprintln!("generate {lemma} {tag}: {e}");
                return ExitCode::from(2);
            }
        }
    }
    ExitCode::SUCCESS
}

fn run_paradigm(args: &Args, lexicon: &Lexicon) -> ExitCode {
    let Some(lemma) = args.rest.first() else {
        eprintln!("paradigm needs a lemma argument");
        return ExitCode::from(2);
    };
    let mut printed = false;
    for entry in lexicon.lookup(lemma) {
        match entry.pos {
            Pos::Noun => match noun::decline(entry) {
                Ok(forms) => {
                    let base = forms.iter().filter(|a| !a.tag.contains("aug_")).count();
                    let augmented = forms.len() - base;
                    println!(
                        "# {lemma} nominal paradigm: {} forms = {base} case-number cells + {augmented} augmented accusative/dative variants (the grammar counts 36 declension forms; this enumeration reaches {})",
                        forms.len(),
                        forms.len(),
                    );
                    for analysis in forms {
                        println!("{}\t{}", analysis.surface, analysis.tag);
                    }
                    printed = true;
                }
                Err(e) => {
                    eprintln!("paradigm {lemma}: {e}");
                    return ExitCode::from(2);
                }
            },
            Pos::Verb => match verb::paradigm(entry) {
                Ok(forms) => {
                    println!(
                        "# {lemma} verbal paradigm: {} forms; the reference list for a full verb reports 582, which also counts auxiliary compounds this enumeration leaves to explicit tags",
                        forms.len()
                    );
                    for analysis in forms {
                        println!("{}\t{}", analysis.surface, analysis.tag);
                    }
                    printed = true;
                }
                Err(e) => {
                    eprintln!("paradigm {lemma}: {e}");
                    return ExitCode::from(2);
                }
            },
            _ => {}
        }
    }
    if !printed {
        eprintln!("no noun or verb entry for {lemma}");
        return ExitCode::from(1);
    }
    ExitCode::SUCCESS
}

fn run_classify(args: &Args) -> ExitCode {
    let Some(lemma) = args.rest.first() else {
        eprintln!("classify needs a lemma argument");
        return ExitCode::from(2);
    };
    let word = match Word::parse(lemma) {
        Ok(w) => w,
        Err(e) => {
            eprintln!("cannot segment {lemma:?}: {e}");
            return ExitCode::from(2);
        }
    };
    match lexicon::classify_noun(&word) {
        Ok(classes) => {
            let rendered: Vec<String> = classes.iter().map(|c| c.to_string()).collect();
            println!("{}\t{}", lemma, rendered.join(","));
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("classify {lemma}: {e}");
            ExitCode::from(2)
        }
    }
}

fn parse_subject_tags(tags: &str) -> Option<AgrBundle> {
    let mut person = 3u8;
    let mut number = Number::Sg;
    let mut gender = Gender::Neuter;
    let mut rationality = Rationality::Irrational;
    let mut honorific = false;
    let mut case = Case::Nom;
    for part in tags.split('.') {
        match part {
            "1" => person = 1,
            "2" => person = 2,
            "3" => person = 3,
            "sg" => number = Number::Sg,
            "pl" => number = Number::Pl,
            "masc" | "m" => gender = Gender::Masc,
            "fem" | "f" => gender = Gender::Fem,
            "neuter" | "n" => gender = Gender::Neuter,
            "epicene" | "e" => gender = Gender::Epicene,
            "rat" | "rational" => rationality = Rationality::Rational,
            "irrat" | "irrational" => rationality = Rationality::Irrational,
            "hon" => honorific = true,
            other => {
                if let Some((c, 0)) = Case::from_tag(other) {
                    case = c;
                } else {
                    return None;
                }
            }
        }
    }
    let mut bundle = AgrBundle::new(person, number, gender, rationality);
    bundle.honorific = honorific;
    bundle.case = case;
    Some(bundle)
}

fn run_agree(args: &Args, analyzer: &Analyzer) -> ExitCode {
    let pairs: Vec<(String, String)> = if args.rest.len() >= 2 {
        vec![(args.rest[0].clone(), args.rest[1].clone())]
    } else {
        let input = match read_stdin() {
            Ok(s) => s,
            Err(code) => return code,
        };
        input
            .lines()
            .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
            .filter_map(|l| {
                let mut cols = l.split('\t');
                Some((cols.next()?.trim().to_string(), cols.next()?.trim().to_string()))
            })
            .collect()
    };
    for (subject_tags, token) in pairs {
        // conjoined subjects come '+'-joined and resolve by precedence
        let bundles: Option<Vec<AgrBundle>> =
            subject_tags.split('+').map(parse_subject_tags).collect();
        let Some(bundles) = bundles else {
            eprintln!("bad subject tags {subject_tags:?}");
            return ExitCode::from(2);
        };
        let subject = match agreement::resolve_coordination(&bundles) {
            Ok(s) => s,
            Err(e) => {
                eprintln!("cannot resolve subject {subject_tags:?}: {e}");
                return ExitCode::from(2);
            }
        };
        let word = match Word::parse(&token) {
            Ok(w) => w,
            Err(e) => {
                eprintln!("cannot segment {token:?}: {e}");
                return ExitCode::from(2);
            }
        };
        let analyses = analyzer.analyze(&word);
        if analyses.is_empty() {
            println!("{subject_tags}\t{token}\tunknown-verb");
            continue;
        }
        let rank = |o: &agreement::CheckOutcome| match o {
            agreement::CheckOutcome::Ok => 0,
            agreement::CheckOutcome::OkWithLeniency => 1,
            agreement::CheckOutcome::Mismatch(_) => 2,
            agreement::CheckOutcome::NotApplicable(_) => 3,
        };
        let best = analyses
            .iter()
            .map(|a| agreement::check(&subject, a, args.lenient_plural))
            .min_by_key(rank)
            .expect("non-empty analyses");
        match best {
            agreement::CheckOutcome::Ok => println!("{subject_tags}\t{token}\tok"),
            agreement::CheckOutcome::OkWithLeniency => {
                println!("{subject_tags}\t{token}\tok-with-leniency")
            }
            agreement::CheckOutcome::NotApplicable(reason) => {
                println!("{subject_tags}\t{token}\tnot-applicable: {reason}")
            }
            agreement::CheckOutcome::Mismatch(report) => println!(
                "{subject_tags}\t{token}\tmismatch slot={} expected={} found={}",
                report.slot, report.expected, report.found
            ),
        }
    }
    ExitCode::SUCCESS
}

const APPENDIX_NATA: &str = include_str!("../fixtures/appendix_nata.txt");
const TABLE1: &str = include_str!("../fixtures/table1_cases.tsv");
const TABLE2: &str = include_str!("../fixtures/table2_classes.tsv");
const TABLE4: &str = include_str!("../fixtures/table4_verbs.tsv");
const PAPER_EXAMPLES: &str = include_str!("../fixtures/paper_examples.tsv");

fn data_lines(fixture: &str) -> impl Iterator<Item = &str> {
    fixture.lines().filter(|l| !l.starts_with('#') && !l.trim().is_empty())
}

fn run_selftest(lexicon: &Lexicon, analyzer: &Analyzer) -> ExitCode {
    if lexicon.is_empty() {
        eprintln!("selftest: the supplied lexicon is empty; the golden fixtures need their lemmas");
        return ExitCode::from(3);
    }
    let mut all_ok = true;
    let mut check = |name: &str, ok: bool, detail: String| {
        println!("{}\t{}\t{}", if ok { "PASS" } else { "FAIL" }, name, detail);
        all_ok &= ok;
    };

    // Table I: the case forms of மரம்
    {
        let mut ok = true;
        let mut misses = Vec::new();
        for line in data_lines(TABLE1) {
            let cols: Vec<&str> = line.split('\t').collect();
            let tag = format!("n.sg.{}", cols[0]);
            match generate(lexicon, "மரம்", &tag) {
                Ok(a) if a.surface == cols[1] => {}
                Ok(a) => {
                    ok = false;
                    misses.push(format!("{}: {} != {}", tag, a.surface, cols[1]));
                }
                Err(e) => {
                    ok = false;
                    misses.push(format!("{tag}: {e}"));
                }
            }
        }
        check("table1-cases", ok, misses.join("; "));
    }

    // Table II: plural and case junctions for all sixteen classes
    {
        let mut ok = true;
        let mut misses = Vec::new();
        for line in data_lines(TABLE2) {
            let cols: Vec<&str> = line.split('\t').collect();
            let (class, lemma) = (cols[0].parse::<u8>().unwrap_or(0), cols[1]);
            let Some(entry) = lexicon
                .lookup_pos(lemma, Pos::Noun)
                .find(|e| e.noun_classes.contains(&class))
            else {
                ok = false;
                misses.push(format!("lexicon lacks {lemma} class {class}"));
                continue;
            };
            let checks: [(usize, noun::NounFeatures); 4] = [
                (2, noun::NounFeatures::new(Number::Pl, Case::Nom)),
                (3, noun::NounFeatures::new(Number::Sg, Case::Acc)),
                (4, noun::NounFeatures::new(Number::Sg, Case::Inst)),
                (5, noun::NounFeatures::new(Number::Sg, Case::Dat)),
            ];
            for (col, features) in checks {
                if cols[col] == "-" {
                    continue;
                }
                match noun::inflect_with_class(entry, class, &features) {
                    Ok(a) if a.surface == cols[col] => {}
                    Ok(a) => {
                        ok = false;
                        misses.push(format!("{lemma}/{class}: {} != {}", a.surface, cols[col]));
                    }
                    Err(e) => {
                        ok = false;
                        misses.push(format!("{lemma}/{class}: {e}"));
                    }
                }
            }
        }
        check("table2-classes", ok, misses.join("; "));
    }

    // Table IV: tense markers for every class representative
    {
        let mut ok = true;
        let mut misses = Vec::new();
        for line in data_lines(TABLE4) {
            let cols: Vec<&str> = line.split('\t').collect();
            let lemma = cols[1];
            for (col, tag) in
                [(2, "v.past.3sm"), (3, "v.pres.3sm"), (4, "v.fut.3sm"), (5, "v.fut_um")]
            {
                match generate(lexicon, lemma, tag) {
                    Ok(a) if a.surface == cols[col] => {}
                    Ok(a) => {
                        ok = false;
                        misses.push(format!("{lemma} {tag}: {} != {}", a.surface, cols[col]));
                    }
                    Err(e) => {
                        ok = false;
                        misses.push(format!("{lemma} {tag}: {e}"));
                    }
                }
            }
        }
        check("table4-verbs", ok, misses.join("; "));
    }

    // glossed example corpus: the gold analysis must be among the analyses
    {
        let mut total = 0usize;
        let mut hit = 0usize;
        let mut misses = Vec::new();
        for line in data_lines(PAPER_EXAMPLES) {
            let cols: Vec<&str> = line.split('\t').collect();
            let (token, lemma, tag) = (cols[1], cols[2], cols[3]);
            total += 1;
            let word = Word::parse(token).expect("fixture token");
            let analyses = analyzer.analyze(&word);
            if analyses.iter().any(|a| a.lemma == lemma && a.tag == tag) {
                hit += 1;
            } else {
                misses.push(token.to_string());
            }
        }
        let ratio = hit as f64 / total.max(1) as f64;
        check(
            "example-corpus",
            ratio >= 0.95,
            format!("{hit}/{total} ({:.1}%){}{}", 100.0 * ratio,
                if misses.is_empty() { "" } else { " missing: " },
                misses.join(" ")),
        );
    }

    // reference verb-form list: coverage and precision of the நட paradigm
    {
        match lexicon.lookup_pos("நட", Pos::Verb).next() {
            Some(entry) => {
                let forms = verb::paradigm(entry).expect("paradigm");
                let generated: std::collections::HashSet<&str> =
                    forms.iter().map(|a| a.surface.as_str()).collect();
                let curated_set: std::collections::HashSet<&str> =
                    data_lines(APPENDIX_NATA).collect();
                let hit = generated.intersection(&curated_set).count();
                let recall = hit as f64 / curated_set.len() as f64;
                let precision = hit as f64 / generated.len() as f64;
                check(
                    "reference-verb-forms",
                    recall >= 0.90 && precision >= 0.99,
                    format!(
                        "recall {:.4} precision {:.4}; {} generated vs {} curated rows (published count 582; delta {})",
                        recall,
                        precision,
                        generated.len(),
                        curated_set.len(),
                        582 - curated_set.len() as i64
                    ),
                );
            }
            None => check("reference-verb-forms", false, "lexicon lacks நட".into()),
        }
    }

    // generation inverts analysis for every fixture token
    {
        let mut ok = true;
        let mut misses = Vec::new();
        for line in data_lines(PAPER_EXAMPLES) {
            let cols: Vec<&str> = line.split('\t').collect();
            let (token, lemma, tag) = (cols[1], cols[2], cols[3]);
            match generate(lexicon, lemma, tag) {
                Ok(a) if a.surface == token => {}
                Ok(a) => {
                    ok = false;
                    misses.push(format!("{lemma}+{tag}: {} != {token}", a.surface));
                }
                Err(e) => {
                    ok = false;
                    misses.push(format!("{lemma}+{tag}: {e}"));
                }
            }
        }
        check("generate-inverts-analyze", ok, misses.join("; "));
    }

    // derivation spot checks
    {
        let mut ok = true;
        let mut detail = String::new();
        for (lemma, kind, expected) in [
            ("உயரம்", adjadv::Derivation::AdjAana, "உயரமான"),
            ("வேகம்", adjadv::Derivation::AdvAaka, "வேகமாக"),
        ] {
            match lexicon.lookup_pos(lemma, Pos::Noun).next() {
                Some(entry) => match adjadv::derive(entry, kind) {
                    Ok(a) if a.surface == expected => {}
                    Ok(a) => {
                        ok = false;
                        detail = format!("{lemma}: {} != {expected}", a.surface);
                    }
                    Err(e) => {
                        ok = false;
                        detail = format!("{lemma}: {e}");
                    }
                },
                None => {
                    ok = false;
                    detail = format!("lexicon lacks {lemma}");
                }
            }
        }
        check("derivations", ok, detail);
    }

    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(3)
    }
}
