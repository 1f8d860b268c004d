use std::io::Read;

use serde::Serialize;
use serde_json::{json, Map, Value};

use schur2d::fractions::{
    convergence_test, convergents, parametrized_solution, Atoms, ContinuedFraction,
};
use schur2d::moments::{
    associate_nonsymmetric, associate_symmetric, moments_of_atomic, AssociatedSequence,
    Completeness, Mode, MomentSource, MomentTable,
};
use schur2d::schur::{jfraction, regularity_report, sfraction, RegularityKind, RegularityReport};
use schur2d::verify::{check_truncated_contract, ray_diagnostic, MatchReport};
use schur2d::{parse_x_fraction, series_of_rational, BivarRational, Error, Scalar};

use crate::args::{Cli, FormArg, ModeArg, Pipeline, Verbosity};
use crate::input::{parse_input, parse_point, Input};

/// Maps a pipeline error to its exit code.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::LeadingMomentZero { depth } if *depth > 1 => 2,
        Error::PlusRegularityFailure { .. } => 2,
        Error::Parse(_)
        | Error::InvalidTable(_)
        | Error::InvalidMeasure(_)
        | Error::IncompleteTable { .. }
        | Error::ModeMismatch(_)
        | Error::OddLength { .. }
        | Error::InsufficientLength { .. }
        | Error::DepthExceeded { .. }
        | Error::NotStrictlyProper => 3,
        Error::LeadingMomentZero { .. }
        | Error::EvaluationPole
        | Error::DegenerateComposition { .. }
        | Error::DivisionByZero
        | Error::LeadingCoefficientZero => 4,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::DivisionByZero => "DivisionByZero",
        Error::LeadingCoefficientZero => "LeadingCoefficientZero",
        Error::NotStrictlyProper => "NotStrictlyProper",
        Error::IncompleteTable { .. } => "IncompleteTable",
        Error::InvalidTable(_) => "InvalidTable",
        Error::InvalidMeasure(_) => "InvalidMeasure",
        Error::LeadingMomentZero { .. } => "LeadingMomentZero",
        Error::PlusRegularityFailure { .. } => "PlusRegularityFailure",
        Error::OddLength { .. } => "OddLength",
        Error::InsufficientLength { .. } => "InsufficientLength",
        Error::DepthExceeded { .. } => "DepthExceeded",
        Error::DegenerateComposition { .. } => "DegenerateComposition",
        Error::EvaluationPole => "EvaluationPole",
        Error::ModeMismatch(_) => "ModeMismatch",
        Error::Parse(_) => "Parse",
    }
}

fn error_depth(e: &Error) -> Option<usize> {
    match e {
        Error::LeadingMomentZero { depth } | Error::PlusRegularityFailure { depth } => Some(*depth),
        _ => None,
    }
}

enum Failure {
    Io(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type Step<T> = std::result::Result<T, Failure>;

/// Sorted-key JSON report under construction.
struct Report(Map<String, Value>);

impl Report {
    fn set(&mut self, key: &str, v: impl Serialize) {
        let v = serde_json::to_value(v).expect("report values serialize");
        self.0.insert(key.to_owned(), v);
    }

    fn diagnostic(&mut self, v: Value) {
        match self.0.get_mut("diagnostics") {
            Some(Value::Array(a)) => a.push(v),
            _ => {
                self.0.insert("diagnostics".into(), Value::Array(vec![v]));
            }
        }
    }

    fn set_match<R: Serialize>(&mut self, rep: &MatchReport<R>) {
        let v = serde_json::to_value(rep).expect("match reports serialize");
        self.0.insert("match".into(), v["match"].clone());
        self.set(
            "contract",
            json!({ "order": v["order"], "pass": v["pass"], "first_failure": v["first_failure"] }),
        );
    }
}

/// Runs one job; returns the exit code and the report to write.
pub fn run(cli: &Cli) -> (i32, Value) {
    let mut report = Report(Map::new());
    report.set("pipeline", cli.pipeline.name());
    report.set("depth", cli.job.depth);
    let code = match execute(cli, &mut report) {
        Ok(code) => {
            report.set("status", if code == 0 { "PASS" } else { "FAIL" });
            code
        }
        Err(Failure::Io(message)) => {
            report.set("status", "ERROR");
            report.set("error", json!({ "code": 1, "kind": "Io", "message": message }));
            1
        }
        Err(Failure::Core(e)) => {
            let code = exit_code(&e);
            report.set("status", "ERROR");
            let mut err = json!({ "code": code, "kind": error_kind(&e), "message": e.to_string() });
            if let Some(d) = error_depth(&e) {
                err["depth"] = d.into();
            }
            report.set("error", err);
            code
        }
    };
    let mut out = report.0;
    if cli.job.verbosity == Verbosity::Brief {
        let failing = |entries: &mut Value| {
            if let Value::Array(entries) = entries {
                entries.retain(|c| c["equal"] == Value::Bool(false));
            }
        };
        if let Some(m) = out.get_mut("match") {
            failing(m);
        }
        if let Some(Value::Array(diags)) = out.get_mut("diagnostics") {
            for d in diags {
                if let Some(m) = d.pointer_mut("/report/match") {
                    failing(m);
                }
            }
        }
    }
    (code, Value::Object(out))
}

fn read_input(cli: &Cli) -> Step<String> {
    let path = &cli.job.input;
    let mut text = String::new();
    let res = if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    Ok(text)
}

fn resolve_mode(cli: &Cli, input: &Input) -> Step<Mode> {
    let requested = cli.job.mode.map(|m| match m {
        ModeArg::Sym => Mode::Sym,
        ModeArg::Nonsym => Mode::NonSym,
    });
    let recorded = match input {
        Input::Table(t) => Some(match t.completeness() {
            Completeness::Square => Mode::Sym,
            Completeness::Triangular => Mode::NonSym,
        }),
        other => other.mode(),
    };
    Ok(match (requested, recorded) {
        (Some(r), Some(i)) if r != i => {
            return Err(Error::ModeMismatch(format!(
                "requested {} but the {} input is {}",
                mode_name(r),
                input.kind(),
                mode_name(i)
            ))
            .into())
        }
        (Some(m), _) | (None, Some(m)) => m,
        (None, None) => Mode::Sym,
    })
}

fn mode_name(m: Mode) -> &'static str {
    match m {
        Mode::Sym => "SYM",
        Mode::NonSym => "NONSYM",
    }
}

fn completeness(mode: Mode) -> Completeness {
    match mode {
        Mode::Sym => Completeness::Square,
        Mode::NonSym => Completeness::Triangular,
    }
}

struct Job<'a> {
    cli: &'a Cli,
    input: Input,
    mode: Mode,
    n: usize,
}

impl Job<'_> {
    fn wrong_input(&self, needs: &str) -> Failure {
        Error::ModeMismatch(format!(
            "{} needs {needs}, got a {} document",
            self.cli.pipeline.name(),
            self.input.kind()
        ))
        .into()
    }

    fn table(&self) -> Step<MomentTable> {
        let want = completeness(self.mode);
        match &self.input {
            Input::Table(t) if t.completeness() == want => Ok(t.clone()),
            Input::Table(_) => Err(Error::ModeMismatch(format!(
                "{} mode needs a {} table",
                mode_name(self.mode),
                serde_json::to_value(want).expect("enum serializes").as_str().unwrap_or("")
            ))
            .into()),
            Input::Measure(mu) => Ok(moments_of_atomic(mu, 2 * self.n - 1, want)),
            _ => Err(self.wrong_input("a table or a measure")),
        }
    }

    fn source(&self) -> Option<&dyn MomentSource> {
        match &self.input {
            Input::Table(t) => Some(t),
            Input::Measure(mu) => Some(mu),
            _ => None,
        }
    }

    fn assoc(&self) -> Step<AssociatedSequence> {
        if let Input::Associated(a) = &self.input {
            let need = 2 * self.n;
            if a.len() < need {
                return Err(Error::InsufficientLength { needed: need, got: a.len() }.into());
            }
            return Ok(a.prefix(need));
        }
        let table = self.table()?;
        Ok(match self.mode {
            Mode::Sym => associate_symmetric(&table, self.n)?,
            Mode::NonSym => associate_nonsymmetric(&table, self.n)?,
        })
    }

    fn fraction(&self) -> Step<ContinuedFraction<BivarRational>> {
        if let Input::Fraction(cf) = &self.input {
            if cf.depth() < self.n {
                return Err(Error::DepthExceeded {
                    requested: self.n,
                    available: cf.depth(),
                }
                .into());
            }
            return Ok(cf.prefix(self.n));
        }
        let assoc = self.assoc()?;
        Ok(match self.cli.job.form {
            FormArg::J => ContinuedFraction::j(self.mode, jfraction(&assoc)?)?,
            FormArg::S => ContinuedFraction::s(self.mode, sfraction(&assoc)?)?,
        })
    }

    fn point(&self) -> Step<Option<(Scalar, Scalar)>> {
        Ok(self.cli.job.point.as_deref().map(parse_point).transpose()?)
    }
}

fn fraction_artifact(cf: &ContinuedFraction<BivarRational>) -> Value {
    json!({ "kind": "fraction", "fraction": cf })
}

fn atoms_value(cf: &ContinuedFraction<BivarRational>) -> Value {
    match &cf.atoms {
        Atoms::J(a) => serde_json::to_value(a.atoms()),
        Atoms::S(a) => serde_json::to_value(a.atoms()),
    }
    .expect("atoms serialize")
}

fn tagged(kind: &str, v: impl Serialize) -> Value {
    let mut v = serde_json::to_value(v).expect("artifacts serialize");
    v["kind"] = kind.into();
    v
}

/// First failing Hankel index as a pipeline error.
fn regularity_error(rep: &RegularityReport) -> Error {
    let failing = rep.entries.iter().filter(|e| e.identically_zero);
    let (depth, plus) = failing
        .map(|e| (e.i, e.plus))
        .min()
        .unwrap_or((rep.first_failure.unwrap_or(1), false));
    if plus {
        Error::PlusRegularityFailure { depth }
    } else {
        Error::LeadingMomentZero { depth }
    }
}

fn execute(cli: &Cli, report: &mut Report) -> Step<i32> {
    let text = read_input(cli)?;
    let input = parse_input(&text, cli.job.merge_duplicates)?;
    let mode = resolve_mode(cli, &input)?;
    report.set("mode", mode);
    let n = cli.job.depth;
    if n == 0 {
        return Err(Error::Parse("depth must be at least 1".into()).into());
    }
    let job = Job { cli, input, mode, n };

    match cli.pipeline {
        Pipeline::Moments => {
            if !matches!(job.input, Input::Measure(_)) {
                return Err(job.wrong_input("a measure"));
            }
            report.set("artifact", tagged("table", job.table()?));
        }
        Pipeline::Associate => {
            report.set("artifact", tagged("associated", job.assoc()?));
        }
        Pipeline::Hankel => {
            let assoc = job.assoc()?;
            let kind = match cli.job.form {
                FormArg::J => RegularityKind::Plain,
                FormArg::S => RegularityKind::Plus,
            };
            let point = job.point()?;
            let rep = regularity_report(&assoc, kind, point.as_ref().map(|(z, w)| (z, w)))?;
            report.set("artifact", tagged("hankel", &rep));
            if !rep.regular {
                return Err(regularity_error(&rep).into());
            }
        }
        Pipeline::Jfrac | Pipeline::Sfrac => {
            let assoc = job.assoc()?;
            let cf = if cli.pipeline == Pipeline::Jfrac {
                ContinuedFraction::j(mode, jfraction(&assoc)?)?
            } else {
                ContinuedFraction::s(mode, sfraction(&assoc)?)?
            };
            report.set("atoms", atoms_value(&cf));
            report.set("artifact", fraction_artifact(&cf));
        }
        Pipeline::Convergent => {
            let cf = job.fraction()?;
            let pair = convergents(&cf, n)?;
            report.set("atoms", atoms_value(&cf));
            report.set("convergent", json!({ "P": pair.p, "Q": pair.q }));
            let value = match &cli.job.tail {
                Some(tail) => {
                    let tail = parse_x_fraction(tail, cf.main_var())?;
                    if !tail.is_strictly_proper() {
                        return Err(Error::NotStrictlyProper.into());
                    }
                    parametrized_solution(&cf, &tail)?
                }
                None => pair.value(),
            };
            report.set("artifact", json!({ "kind": "convergent", "pair": pair, "value": value }));
            report.set("value", value.substitute(cf.main_var())?);
        }
        Pipeline::Verify => {
            let assoc = job.assoc()?;
            let cf = job.fraction()?;
            let rep = check_truncated_contract(&assoc, &cf, n)?;
            report.set("atoms", atoms_value(&cf));
            report.set_match(&rep);
            report.set("artifact", fraction_artifact(&cf));
            if let Some((z0, w0)) = job.point()? {
                let window = cli.job.window.unwrap_or(2 * n);
                let diag = match job.source() {
                    Some(src) => {
                        let ray = ray_diagnostic(src, &cf, n, &z0, &w0, window)?;
                        json!({ "check": "ray", "point": [z0, w0], "report": ray })
                    }
                    None => json!({ "check": "ray", "skipped": "needs moment data" }),
                };
                report.diagnostic(diag);
            }
            if let Some(tail) = &cli.job.tail {
                let tail = parse_x_fraction(tail, cf.main_var())?;
                if !tail.is_strictly_proper() {
                    return Err(Error::NotStrictlyProper.into());
                }
                let family = parametrized_solution(&cf, &tail)?;
                let order = 2 * n - 1;
                let actual = series_of_rational(cf.main_var(), &family.num, &family.den, order)?;
                let expected = assoc.function_series();
                let rep = MatchReport::compare(expected.coeffs(), actual.coeffs(), order)?;
                report.diagnostic(json!({ "check": "tail", "report": rep }));
            }
            return Ok(if rep.pass { 0 } else { 5 });
        }
        Pipeline::Eval => {
            let Some((z0, w0)) = job.point()? else {
                return Err(Error::Parse("eval needs --point z0,zeta0".into()).into());
            };
            let cf = job.fraction()?;
            let value = convergents(&cf, n)?.value().eval_at(cf.main_var(), &z0, &w0)?;
            report.set("atoms", atoms_value(&cf));
            let mut artifact = json!({ "kind": "evaluation", "point": [z0, w0], "value": value });
            if let Atoms::J(a) = &cf.atoms {
                artifact["convergence"] =
                    serde_json::to_value(convergence_test(a, cf.main_var(), &z0, &w0)?)
                        .expect("reports serialize");
            }
            report.set("artifact", artifact);
        }
    }
    Ok(0)
}
