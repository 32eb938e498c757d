//! Command-line front end: input resolution, one function per
//! subcommand, and the exit-code contract (0 success, 1 negative
//! verdict, 2 input error, 3 guard or budget refusal).

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::algebra::{reduce_to_residue, LieAlgebra};
use crate::catalog::catalog;
use crate::complex::{cohomology, AdForm, Coefficients};
use crate::document::{from_document, parse_document, render_document, to_document};
use crate::error::{Error, Result};
use crate::lifting::{lift_family, lift_tower, obstruction};
use crate::report::{
    digest_text, render_json, render_text, CheckPayload, FormPayload, LiftMemberPayload,
    LiftsPayload, ObstructionPayload, Payload, ReportDocument, StructurePayload,
    TowerBlockPayload, TowerPayload, TowerStepPayload, VerifyPayload,
};
use crate::ring::{RingFamily, RingSpec};
use crate::structure;

#[derive(Parser, Debug)]
#[command(
    name = "lieobstruct",
    version,
    about = "Cohomology, lifting obstructions, and lift classification for Lie algebras over Z/p^k and F_p[x]/(x^k)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum CoeffChoice {
    /// Adjoint coefficients: the algebra acting on itself.
    Ad,
    /// Trivial coefficients: scalars with zero action.
    Trivial,
}

impl From<CoeffChoice> for Coefficients {
    fn from(c: CoeffChoice) -> Coefficients {
        match c {
            CoeffChoice::Ad => Coefficients::Adjoint,
            CoeffChoice::Trivial => Coefficients::Trivial,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatChoice {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyChoice {
    Padic,
    #[value(name = "power-series")]
    PowerSeries,
}

impl From<FamilyChoice> for RingFamily {
    fn from(f: FamilyChoice) -> RingFamily {
        match f {
            FamilyChoice::Padic => RingFamily::PadicQuotient,
            FamilyChoice::PowerSeries => RingFamily::PowerSeriesQuotient,
        }
    }
}

/// Where the algebra comes from: a JSON document or a catalog entry.
#[derive(Args, Debug)]
pub struct InputArgs {
    /// Algebra document (UTF-8 JSON).
    #[arg(long, value_name = "FILE")]
    pub input: Option<PathBuf>,

    /// Catalog name: abelian, heisenberg, nilpotent-triangular, sl, psl.
    #[arg(long, value_name = "NAME", conflicts_with = "input")]
    pub catalog: Option<String>,

    /// Rank parameter for catalog families that take one.
    #[arg(long, value_name = "N", requires = "catalog")]
    pub n: Option<usize>,

    /// Prime for catalog input.
    #[arg(long, value_name = "P", requires = "catalog")]
    pub p: Option<u64>,

    /// Ring level for catalog input.
    #[arg(long, value_name = "K", default_value_t = 1, requires = "catalog")]
    pub k: u32,

    /// Ring family for catalog input.
    #[arg(long, value_enum, default_value_t = FamilyChoice::Padic, requires = "catalog")]
    pub family: FamilyChoice,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Per-degree cohomology table with class representatives.
    Cohomology {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = CoeffChoice::Ad)]
        coeffs: CoeffChoice,
        #[arg(long, value_enum, default_value_t = FormatChoice::Text)]
        format: FormatChoice,
    },
    /// Obstruction class for lifting one ring level.
    Obstruct {
        #[command(flatten)]
        input: InputArgs,
        /// Must be the input level plus one; defaults to it.
        #[arg(long, value_name = "LEVEL")]
        target_level: Option<u32>,
        #[arg(long, value_enum, default_value_t = FormatChoice::Text)]
        format: FormatChoice,
    },
    /// Classify the lifts one level up by degree-2 cohomology.
    Lifts {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = FormatChoice::Text)]
        format: FormatChoice,
    },
    /// Iterate lifting toward the requested level.
    Tower {
        #[command(flatten)]
        input: InputArgs,
        /// Target level.
        #[arg(long, value_name = "N")]
        levels: u32,
        #[arg(long, value_enum, default_value_t = FormatChoice::Text)]
        format: FormatChoice,
    },
    /// Center, perfectness, simplicity, Killing form, unimodularity,
    /// and invariant 3-form dimensions.
    Structure {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = FormatChoice::Text)]
        format: FormatChoice,
    },
    /// Run the bundled reference-value suite and print a pass/fail table.
    VerifyPaper {
        #[arg(long, value_enum, default_value_t = FormatChoice::Text)]
        format: FormatChoice,
    },
}

/// A finished run: text for stdout and stderr plus the process code.
#[derive(Debug)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

struct ResolvedInput {
    algebra: LieAlgebra,
    echo: String,
    digest: String,
    notices: Vec<String>,
}

fn resolve(args: &InputArgs) -> Result<ResolvedInput> {
    let (algebra, echo) = if let Some(path) = &args.input {
        let text = std::fs::read_to_string(path)?;
        let algebra = from_document(&parse_document(&text)?)?;
        (algebra, format!("--input {}", path.display()))
    } else if let Some(name) = &args.catalog {
        let p = args.p.ok_or_else(|| {
            Error::Document("catalog input needs --p".into())
        })?;
        let ring = RingSpec::new(args.family.into(), p, args.k)?;
        let algebra = catalog(name, args.n, ring)?;
        let mut echo = format!("--catalog {name}");
        if let Some(n) = args.n {
            write!(echo, " --n {n}").unwrap();
        }
        write!(echo, " --p {p} --k {} --family {}", args.k, ring.family()).unwrap();
        (algebra, echo)
    } else {
        return Err(Error::Document(
            "one of --input or --catalog is required".into(),
        ));
    };
    let digest = digest_text(&render_document(&to_document(&algebra)));
    Ok(ResolvedInput {
        algebra,
        echo,
        digest,
        notices: Vec::new(),
    })
}

/// Drops a higher-level input to its residue algebra, with a notice.
fn reduce_for_residue_analysis(input: &mut ResolvedInput) {
    let level = input.algebra.ring().level();
    if level > 1 {
        input.notices.push(format!(
            "input is at level {level}; analysis runs on its residue algebra over F_{}",
            input.algebra.ring().p()
        ));
        input.algebra = reduce_to_residue(&input.algebra);
    }
}

fn form_payload(form: &AdForm) -> FormPayload {
    FormPayload::new(
        form.base().rank(),
        form.kind(),
        form.degree(),
        form.coords().to_vec(),
    )
}

/// Negative-verdict marker: the command ran but the mathematical answer
/// is "no", which exits 1.
struct Verdict {
    report: ReportDocument,
    negative: bool,
}

fn cmd_cohomology(mut input: ResolvedInput, kind: Coefficients) -> Result<Verdict> {
    reduce_for_residue_analysis(&mut input);
    let report = cohomology(&input.algebra, kind)?;
    let command = format!(
        "cohomology {} --coeffs {}",
        input.echo,
        match kind {
            Coefficients::Adjoint => "ad",
            Coefficients::Trivial => "trivial",
        }
    );
    Ok(Verdict {
        report: ReportDocument::new(
            command,
            input.digest,
            input.notices,
            Payload::Cohomology(report),
        ),
        negative: false,
    })
}

fn cmd_obstruct(input: ResolvedInput, target_level: Option<u32>) -> Result<Verdict> {
    let level = input.algebra.ring().level();
    if let Some(t) = target_level {
        if t != level + 1 {
            return Err(Error::Document(format!(
                "obstruction handles one level step: input is at level {level}, so --target-level must be {}",
                level + 1
            )));
        }
    }
    let report = obstruction(&input.algebra)?;
    let lifts = report.lifts();
    let payload = ObstructionPayload {
        ring: input.algebra.ring().to_string(),
        target_ring: input.algebra.ring().raised()?.to_string(),
        verdict: if lifts { "lifts" } else { "obstructed" }.into(),
        class_is_zero: lifts,
        jacobi_failure: form_payload(report.j()),
        witness: report.witness().map(form_payload),
        lifted: report.lifted_algebra().map(to_document),
    };
    let command = format!(
        "obstruct {} --target-level {}",
        input.echo,
        level + 1
    );
    Ok(Verdict {
        report: ReportDocument::new(
            command,
            input.digest,
            input.notices,
            Payload::Obstruction(payload),
        ),
        negative: !lifts,
    })
}

fn cmd_lifts(input: ResolvedInput) -> Result<Verdict> {
    let family = lift_family(&input.algebra)?;
    let payload = match &family {
        None => LiftsPayload {
            verdict: "no lifts: the obstruction class is nonzero".into(),
            dim_h2: None,
            member_count: None,
            materialized: false,
            members: Vec::new(),
        },
        Some(f) => LiftsPayload {
            verdict: "classified".into(),
            dim_h2: Some(f.dim_h2()),
            member_count: f.member_count(),
            materialized: f.is_materialized(),
            members: f
                .members()
                .iter()
                .map(|(coords, member)| LiftMemberPayload {
                    coordinates: coords.clone(),
                    algebra: to_document(member),
                })
                .collect(),
        },
    };
    let negative = family.is_none();
    let command = format!("lifts {}", input.echo);
    Ok(Verdict {
        report: ReportDocument::new(command, input.digest, input.notices, Payload::Lifts(payload)),
        negative,
    })
}

fn cmd_tower(mut input: ResolvedInput, levels: u32) -> Result<Verdict> {
    reduce_for_residue_analysis(&mut input);
    let report = lift_tower(&input.algebra, levels)?;
    let payload = TowerPayload {
        target_level: report.target_level(),
        reached_level: report.reached_level(),
        reached: report.reached(),
        steps: report
            .steps()
            .iter()
            .map(|s| TowerStepPayload {
                from_level: s.from_level(),
                witness: form_payload(s.witness()),
            })
            .collect(),
        obstruction: report.obstruction().map(|b| TowerBlockPayload {
            at_level: b.at_level(),
            class: form_payload(b.class()),
        }),
        top: to_document(report.top()),
    };
    let negative = !report.reached();
    let command = format!("tower {} --levels {levels}", input.echo);
    Ok(Verdict {
        report: ReportDocument::new(command, input.digest, input.notices, Payload::Tower(payload)),
        negative,
    })
}

fn cmd_structure(mut input: ResolvedInput) -> Result<Verdict> {
    reduce_for_residue_analysis(&mut input);
    let a = &input.algebra;
    let payload = StructurePayload {
        ring: a.ring().to_string(),
        rank: a.rank(),
        center_dim: structure::center(a)?.len(),
        perfect: structure::is_perfect(a)?,
        simple: structure::is_simple(a)?,
        killing_rank: structure::killing_form(a)?.rank(),
        killing_zero: structure::is_killing_zero(a)?,
        unimodular: structure::is_unimodular(a)?,
        invariant_symmetric_3form_dim: structure::invariant_symmetric_3forms(a)?.len(),
        invariant_alternating_3form_dim: structure::invariant_alternating_3forms(a)?.len(),
    };
    let command = format!("structure {}", input.echo);
    Ok(Verdict {
        report: ReportDocument::new(
            command,
            input.digest,
            input.notices,
            Payload::Structure(payload),
        ),
        negative: false,
    })
}

fn check(name: &str, expected: impl ToString, computed: impl ToString) -> CheckPayload {
    let expected = expected.to_string();
    let computed = computed.to_string();
    let pass = expected == computed;
    CheckPayload {
        name: name.into(),
        expected,
        computed,
        pass,
    }
}

/// The reference-value regression suite behind `verify-paper`. Every row
/// states a bundled expectation; rows whose computed value differs fail
/// the run, and the table prints both numbers either way.
fn cmd_verify_paper() -> Result<Verdict> {
    let field3 = RingSpec::new(RingFamily::PadicQuotient, 3, 1)?;
    let psl = catalog("psl", Some(3), field3)?;
    let sl3 = catalog("sl", Some(3), field3)?;
    let trivial = cohomology(&psl, Coefficients::Trivial)?.dims();
    let adjoint = cohomology(&psl, Coefficients::Adjoint)?.dims();

    let mut checks = vec![
        check("trivial H^1 of psl(3) over F_3", 0, trivial[1]),
        check("trivial H^2 of psl(3) over F_3", 6, trivial[2]),
        check("trivial H^3 of psl(3) over F_3", 0, trivial[3]),
        check("adjoint H^0 of psl(3) over F_3", 0, adjoint[0]),
        check("adjoint H^1 of psl(3) over F_3", 7, adjoint[1]),
        check("center dimension of sl(3) over F_3", 1, structure::center(&sl3)?.len()),
        check("psl(3) over F_3 is perfect", true, structure::is_perfect(&psl)?),
        check("psl(3) over F_3 is simple", true, structure::is_simple(&psl)?),
        check(
            "killing form of psl(3) over F_3 vanishes identically",
            true,
            structure::is_killing_zero(&psl)?,
        ),
        check("psl(3) over F_3 is unimodular", true, structure::is_unimodular(&psl)?),
        check(
            "invariant symmetric 3-forms on psl(3) over F_3",
            1,
            structure::invariant_symmetric_3forms(&psl)?.len(),
        ),
        check(
            "invariant alternating 3-forms on psl(3) over F_3",
            1,
            structure::invariant_alternating_3forms(&psl)?.len(),
        ),
        check(
            "psl(3) over F_3 lifts to Z/9",
            false,
            obstruction(&psl)?.lifts(),
        ),
        check(
            "sl(3) over F_3 lifts to Z/9",
            true,
            obstruction(&sl3)?.lifts(),
        ),
    ];
    let series2 = RingSpec::new(RingFamily::PowerSeriesQuotient, 2, 1)?;
    let heis = catalog("heisenberg", None, series2)?;
    checks.push(check(
        "heisenberg over F_2[x]/(x) lifts one level",
        true,
        obstruction(&heis)?.lifts(),
    ));
    let sl2 = catalog("sl", Some(2), field3)?;
    checks.push(check(
        "sl(2) over F_3 tower reaches Z/81",
        true,
        lift_tower(&sl2, 4)?.reached(),
    ));

    let passed = checks.iter().filter(|c| c.pass).count();
    let failed = checks.len() - passed;
    let payload = VerifyPayload {
        checks,
        passed,
        failed,
    };
    Ok(Verdict {
        report: ReportDocument::new(
            "verify-paper".into(),
            digest_text(""),
            Vec::new(),
            Payload::VerifyPaper(payload),
        ),
        negative: failed > 0,
    })
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::GuardExceeded { .. } | Error::BudgetExceeded { .. } => 3,
        _ => 2,
    }
}

/// Runs one parsed command to a finished outcome. Never panics on user
/// input; every error maps to stderr text and the exit-code contract.
pub fn execute(cli: Cli) -> Outcome {
    let result = match &cli.command {
        Command::Cohomology { input, coeffs, .. } => {
            resolve(input).and_then(|r| cmd_cohomology(r, (*coeffs).into()))
        }
        Command::Obstruct {
            input,
            target_level,
            ..
        } => resolve(input).and_then(|r| cmd_obstruct(r, *target_level)),
        Command::Lifts { input, .. } => resolve(input).and_then(cmd_lifts),
        Command::Tower { input, levels, .. } => {
            resolve(input).and_then(|r| cmd_tower(r, *levels))
        }
        Command::Structure { input, .. } => resolve(input).and_then(cmd_structure),
        Command::VerifyPaper { .. } => cmd_verify_paper(),
    };
    let format = match &cli.command {
        Command::Cohomology { format, .. }
        | Command::Obstruct { format, .. }
        | Command::Lifts { format, .. }
        | Command::Tower { format, .. }
        | Command::Structure { format, .. }
        | Command::VerifyPaper { format } => *format,
    };
    match result {
        Ok(v) => Outcome {
            stdout: match format {
                FormatChoice::Text => render_text(&v.report),
                FormatChoice::Json => render_json(&v.report),
            },
            stderr: String::new(),
            code: if v.negative { 1 } else { 0 },
        },
        Err(e) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: exit_code(&e),
        },
    }
}
