use clap::{Args, ValueEnum};
use levixi::ximap::{
    diagram_test_characters, verify_borel_anchor, verify_cayley_agreement,
    verify_commutative_diagram, verify_lambda_generation, verify_lemma_so, verify_negative_irreps,
    verify_properties, verify_proposition, verify_springer_examples, verify_theorem3,
    PropertyConfig, Proposition,
};
use levixi::{build_root_system, Family, ParabolicSubset, Result, VerificationReport, XiContext};
use serde_json::json;

use crate::commands::{emit, parabolic};
use crate::{Cli, Failure};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// ξ on Grassmannians against the classical map and Littlewood-Richardson.
    Thm3,
    /// Sp(2n), maximal parabolics.
    Prop8,
    /// SO(2n+1), maximal parabolics.
    Prop9,
    /// SO(2n), maximal parabolics including r = n-1, n.
    Prop10,
    /// ξ on G/B for types B, C, D.
    Sec10,
    /// Restriction against pullback for P ⊆ Q.
    Diagram,
    /// Π(t_i - t_i^-1) as a virtual character of SO(2n).
    LemmaSo,
    /// No nontrivial irreducible is a polynomial character.
    NegativeIrreps,
    /// Seeded randomized properties.
    Properties,
    /// Springer morphism on the SL2 torus.
    Springer,
    /// Trace-form solve against the Cayley transform.
    Cayley,
    /// λ-operations generating the polynomial characters.
    Lambda,
    /// Borel map on fundamental weights.
    Anchor,
    /// Every suite at its default range.
    All,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long)]
    pub rank: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Smaller parabolic for the diagram suite (the larger one is `--outer`).
    #[arg(long)]
    pub parabolic: Option<String>,
    #[arg(long)]
    pub outer: Option<String>,
    /// Largest fundamental-weight coefficient in the irreducible scan.
    #[arg(long, default_value_t = 2)]
    pub max_coeff: i64,
    #[arg(long, default_value_t = 0x5eed)]
    pub seed: u64,
    #[arg(long, default_value_t = 200)]
    pub cases: usize,
}

fn family(args: &VerifyArgs) -> Result<Option<Family>> {
    args.family.as_deref().map(str::parse).transpose()
}

/// `(family, rank)` pairs: the flags if given, else the defaults.
fn groups(args: &VerifyArgs, defaults: &[(Family, usize)]) -> Result<Vec<(Family, usize)>> {
    Ok(match (family(args)?, args.rank) {
        (Some(f), Some(n)) => vec![(f, n)],
        (Some(f), None) => defaults.iter().copied().filter(|(g, _)| *g == f).collect(),
        (None, Some(n)) => defaults.iter().copied().filter(|(_, m)| *m == n).collect(),
        (None, None) => defaults.to_vec(),
    })
}

fn maximal_cases(
    args: &VerifyArgs,
    ranks: &[usize],
    rs: impl Fn(usize) -> Vec<usize>,
) -> Vec<(usize, usize)> {
    let ranks: Vec<usize> = args
        .rank
        .or(args.n)
        .map(|n| vec![n])
        .unwrap_or_else(|| ranks.to_vec());
    ranks
        .into_iter()
        .flat_map(|n| {
            let r = args.r.map(|r| vec![r]).unwrap_or_else(|| rs(n));
            r.into_iter().map(move |r| (n, r))
        })
        .collect()
}

fn collect(
    parts: impl IntoIterator<Item = Result<VerificationReport>>,
) -> Result<VerificationReport> {
    let mut out = VerificationReport::new();
    for p in parts {
        out.extend(p?);
    }
    Ok(out)
}

fn suite_report(suite: Suite, args: &VerifyArgs) -> Result<VerificationReport> {
    match suite {
        Suite::Thm3 => {
            let cases = match (args.r, args.n) {
                (Some(r), Some(n)) => vec![(r, n)],
                _ => vec![(1, 3), (2, 4), (2, 5), (3, 5)],
            };
            collect(cases.into_iter().map(|(r, n)| verify_theorem3(r, n)))
        }
        Suite::Prop8 => collect(
            maximal_cases(args, &[2, 3], |n| (1..=n).collect())
                .into_iter()
                .map(|(n, r)| verify_proposition(Proposition::Symplectic, n, r)),
        ),
        Suite::Prop9 => collect(
            maximal_cases(args, &[2, 3], |n| (1..=n).collect())
                .into_iter()
                .map(|(n, r)| verify_proposition(Proposition::OddOrthogonal, n, r)),
        ),
        Suite::Prop10 => collect(
            maximal_cases(args, &[4], |n| (1..=n).collect())
                .into_iter()
                .map(|(n, r)| {
                    let prop = if r + 1 >= n {
                        Proposition::EvenOrthogonalTop
                    } else {
                        Proposition::EvenOrthogonal
                    };
                    verify_proposition(prop, n, r)
                }),
        ),
        Suite::Sec10 => {
            let defaults = [
                (Family::C, 2),
                (Family::C, 3),
                (Family::B, 2),
                (Family::B, 3),
                (Family::D, 4),
            ];
            collect(
                groups(args, &defaults)?
                    .into_iter()
                    .map(|(f, n)| verify_proposition(Proposition::Borel(f), n, 0)),
            )
        }
        Suite::Diagram => {
            let mut out = VerificationReport::new();
            for (f, n) in groups(args, &[(Family::C, 2), (Family::A, 2)])? {
                let rs = build_root_system(f, n)?;
                let p = parabolic(args.parabolic.as_deref().unwrap_or("borel"), n)?;
                let q = match &args.outer {
                    Some(s) => parabolic(s, n)?,
                    None => ParabolicSubset::maximal(n, 1)?,
                };
                let ctx_p = XiContext::new(&rs, &p)?;
                let ctx_q = XiContext::new(&rs, &q)?;
                let chars = diagram_test_characters(&rs, &q)?;
                out.extend(verify_commutative_diagram(&ctx_p, &ctx_q, &chars)?);
            }
            Ok(out)
        }
        Suite::LemmaSo => {
            let ns: Vec<usize> = args
                .rank
                .or(args.n)
                .map(|n| vec![n])
                .unwrap_or(vec![2, 3, 4]);
            collect(ns.into_iter().map(verify_lemma_so))
        }
        Suite::NegativeIrreps => collect(
            groups(args, &[(Family::C, 2), (Family::B, 2), (Family::D, 4)])?
                .into_iter()
                .map(|(f, n)| verify_negative_irreps(f, n, args.max_coeff)),
        ),
        Suite::Properties => verify_properties(PropertyConfig {
            seed: args.seed,
            cases: args.cases,
        }),
        Suite::Springer => verify_springer_examples(),
        Suite::Cayley => {
            let defaults = [
                (Family::C, 2),
                (Family::C, 3),
                (Family::B, 2),
                (Family::B, 3),
                (Family::D, 4),
            ];
            collect(
                groups(args, &defaults)?
                    .into_iter()
                    .map(|(f, n)| verify_cayley_agreement(f, n)),
            )
        }
        Suite::Lambda => collect(
            groups(args, &[(Family::C, 2), (Family::B, 2)])?
                .into_iter()
                .map(|(f, n)| verify_lambda_generation(f, n)),
        ),
        Suite::Anchor => {
            let defaults = [
                (Family::A, 3),
                (Family::B, 3),
                (Family::C, 3),
                (Family::D, 4),
            ];
            collect(
                groups(args, &defaults)?
                    .into_iter()
                    .map(|(f, n)| verify_borel_anchor(&build_root_system(f, n)?)),
            )
        }
        Suite::All => {
            let all = [
                Suite::Anchor,
                Suite::Thm3,
                Suite::Prop8,
                Suite::Prop9,
                Suite::Prop10,
                Suite::Sec10,
                Suite::Springer,
                Suite::Cayley,
                Suite::LemmaSo,
                Suite::NegativeIrreps,
                Suite::Lambda,
                Suite::Diagram,
                Suite::Properties,
            ];
            collect(all.into_iter().map(|s| suite_report(s, args)))
        }
    }
}

pub fn run(cli: &Cli, args: &VerifyArgs) -> std::result::Result<(), Failure> {
    let report = suite_report(args.suite, args)?;
    let name = args
        .suite
        .to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string();
    let inputs = json!({
        "suite": name,
        "family": args.family,
        "rank": args.rank,
        "r": args.r,
        "n": args.n,
        "seed": args.seed,
        "cases": args.cases,
    });
    let passed = report.passed();
    let mut text = report.to_table();
    text.push_str(&format!(
        "{}: {} of {} claims passed\n",
        if passed { "pass" } else { "FAIL" },
        report.claims.iter().filter(|c| c.passed).count(),
        report.len()
    ));
    let result = json!({"status": if passed { "pass" } else { "fail" }, "claims": report.len()});
    emit(cli, "verify", inputs, result, &text, Some(report.to_json()));
    if passed {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}
