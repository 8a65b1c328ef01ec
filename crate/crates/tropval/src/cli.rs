//! Command-line front end.
//!
//! Every library capability is reachable from exactly one subcommand:
//! `canon`/`factor`/`eval`/`equiv` cover Q_max\[T\], `ratify` the fraction
//! semifield, `valuate`/`classify`/`curve` the valuation theory, and
//! `hcheck`/`quotient`/`iso` the hyperstructure engine. Value-producing
//! commands print the bare exact value; structural ones print
//! deterministic line-oriented `key=value` output. Exit codes: 0 success
//! (including `false`/`result=fail` answers), 1 domain error, 2 syntax.

use std::io::Read as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::expr::eval_str;
use crate::hyper::{
    check_hyperfield, check_hypergroup, check_hyperring, full_unit_group, iso_search, krasner,
    quotient_hyperring, rval_axiom_check, signs, FiniteHyperstructure,
};
use crate::poly::{canonicalize, factor, func_equiv, poly_degree, poly_eval, t_order, TropPoly};
use crate::ratfunc::rat_eq;
use crate::report::AxiomReport;
use crate::scalar::{parse_scalar, TropScalar};
use crate::valuation::{
    abstract_curve, ff_classify, ff_val_eval, parse_valuation_spec, qmax_classify, qmax_val_eval,
    ExtVal, FFValuation, QmaxValuation, Valuation, ValuationKind,
};

#[derive(Debug, Parser)]
#[command(
    name = "tropval",
    version,
    about = "Exact tropical algebra, valuation classification, and finite hyperstructures",
    after_help = "Surface syntax note: '+', '*', '^' are the TROPICAL operations \
                  (max, plus, repeated plus); '/' forms a fraction in Qmax(T). \
                  An adjacent p/q is a rational literal; a spaced or parenthesized \
                  slash divides."
)]
pub struct Cli {
    /// Output layout: one record per line, or one key=value per line
    #[arg(long, global = true, value_enum, default_value_t = Format::Compact)]
    pub format: Format,

    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Compact,
    Records,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Level {
    Group,
    Ring,
    Field,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Classical,
    Strict,
    Hyper,
}

impl From<KindArg> for ValuationKind {
    fn from(k: KindArg) -> ValuationKind {
        match k {
            KindArg::Classical => ValuationKind::Classical,
            KindArg::Strict => ValuationKind::Strict,
            KindArg::Hyper => ValuationKind::HyperValued,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Cmd {
    /// Canonical form of a polynomial: coefficients (exponent 0 upward), t-order, degree
    Canon {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Unique factorization: unit, T-power, roots in non-increasing order
    Factor {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Evaluate an expression at a scalar point
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Scalar point, e.g. 3/2 or -inf
        #[arg(allow_hyphen_values = true)]
        at: String,
    },
    /// Functional equivalence of polynomials (or equality of fractions)
    Equiv {
        #[arg(allow_hyphen_values = true)]
        lhs: String,
        #[arg(allow_hyphen_values = true)]
        rhs: String,
    },
    /// Normal form of a fraction in Qmax(T), printed as (num)/(den)
    Ratify {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Apply a valuation to an expression and print the exact value
    Valuate {
        /// Full spec, e.g. 'kind=strict; base=qmax(T); param=-1' (overrides the flags)
        #[arg(long)]
        spec: Option<String>,
        #[arg(long, value_enum)]
        kind: Option<KindArg>,
        /// Family parameter (nu at the rational 1, or nu(T))
        #[arg(long, allow_hyphen_values = true)]
        param: Option<String>,
        /// Carrier: qmax or qmax(T)
        #[arg(long, default_value = "qmax(T)")]
        carrier: String,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// List the equivalence classes of valuations for a kind and carrier
    Classify {
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Carrier: qmax or qmax(T)
        #[arg(long, default_value = "qmax")]
        carrier: String,
    },
    /// The abstract curve attached to Qmax(T): three points, two closed
    Curve,
    /// Check hyperstructure axioms on a table (path, '-', 'krasner', 'signs')
    Hcheck {
        #[arg(required_unless_present = "rval", conflicts_with = "rval")]
        target: Option<String>,
        /// Axiom set to check
        #[arg(long, value_enum, default_value_t = Level::Field)]
        level: Level,
        /// Check R_{+,val} on comma-separated scalar samples instead of a table
        #[arg(long, allow_hyphen_values = true)]
        rval: Option<String>,
    },
    /// Build the quotient hyperring (Z/modulus)/G and print its table
    Quotient {
        #[arg(long)]
        modulus: u64,
        /// Comma-separated generators of the unit subgroup G, or 'full'
        #[arg(long)]
        units: String,
        /// Write the table to a file instead of stdout
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Search for a hyperstructure isomorphism between two tables
    Iso { left: String, right: String },
}

/// Run a parsed command and return its full stdout text.
pub fn execute(cli: Cli) -> Result<String> {
    let mut out = String::new();
    let format = cli.format;
    match cli.cmd {
        Cmd::Canon { expr } => cmd_canon(&expr, format, &mut out)?,
        Cmd::Factor { expr } => cmd_factor(&expr, format, &mut out)?,
        Cmd::Eval { expr, at } => cmd_eval(&expr, &at, &mut out)?,
        Cmd::Equiv { lhs, rhs } => cmd_equiv(&lhs, &rhs, &mut out)?,
        Cmd::Ratify { expr } => {
            let r = eval_str(&expr)?.to_frac();
            out.push_str(&format!("{r}\n"));
        }
        Cmd::Valuate {
            spec,
            kind,
            param,
            carrier,
            expr,
        } => cmd_valuate(spec, kind, param, &carrier, &expr, &mut out)?,
        Cmd::Classify { kind, carrier } => cmd_classify(kind.into(), &carrier, &mut out)?,
        Cmd::Curve => cmd_curve(&mut out),
        Cmd::Hcheck {
            target,
            level,
            rval,
        } => cmd_hcheck(target.as_deref(), level, rval.as_deref(), format, &mut out)?,
        Cmd::Quotient {
            modulus,
            units,
            output,
        } => cmd_quotient(modulus, &units, output, &mut out)?,
        Cmd::Iso { left, right } => cmd_iso(&left, &right, &mut out)?,
    }
    Ok(out)
}

/// Evaluate to a polynomial, accepting fractions whose denominator
/// normalized away.
fn poly_operand(src: &str, cmd: &'static str) -> Result<TropPoly> {
    eval_str(src)?.as_poly().ok_or_else(|| Error::InvalidParameter {
        reason: format!("{cmd} expects a polynomial, but this is a genuine fraction (see ratify)"),
    })
}

fn cmd_canon(expr: &str, format: Format, out: &mut String) -> Result<()> {
    let c = canonicalize(&poly_operand(expr, "canon")?);
    let coeffs = c
        .coeffs()
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",");
    let (torder, degree) = if c.is_zero_poly() {
        ("none".to_string(), "none".to_string())
    } else {
        (t_order(&c)?.to_string(), poly_degree(&c)?.to_string())
    };
    match format {
        Format::Compact => {
            out.push_str(&format!("coeffs=[{coeffs}] torder={torder} degree={degree}\n"))
        }
        Format::Records => out.push_str(&format!(
            "coeffs=[{coeffs}]\ntorder={torder}\ndegree={degree}\n"
        )),
    }
    Ok(())
}

fn cmd_factor(expr: &str, format: Format, out: &mut String) -> Result<()> {
    let fac = factor(&canonicalize(&poly_operand(expr, "factor")?))?;
    match format {
        Format::Compact => out.push_str(&format!("{fac}\n")),
        Format::Records => {
            let roots = fac
                .roots()
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",");
            out.push_str(&format!(
                "unit={}\ntpower={}\nroots=[{roots}]\n",
                fac.unit(),
                fac.t_power()
            ));
        }
    }
    Ok(())
}

fn cmd_eval(expr: &str, at: &str, out: &mut String) -> Result<()> {
    let point = parse_scalar(at)?;
    let value = match eval_str(expr)? {
        crate::expr::PolyValue::Poly(p) => poly_eval(&p, &point),
        crate::expr::PolyValue::Frac(r) => r.eval(&point)?,
    };
    out.push_str(&format!("{value}\n"));
    Ok(())
}

fn cmd_equiv(lhs: &str, rhs: &str, out: &mut String) -> Result<()> {
    let (a, b) = (eval_str(lhs)?, eval_str(rhs)?);
    let equal = match (a.as_poly(), b.as_poly()) {
        (Some(p), Some(q)) => func_equiv(&p, &q),
        _ => rat_eq(&a.to_frac(), &b.to_frac()),
    };
    out.push_str(if equal { "true\n" } else { "false\n" });
    Ok(())
}

fn build_valuation(
    spec: Option<String>,
    kind: Option<KindArg>,
    param: Option<String>,
    carrier: &str,
) -> Result<Valuation> {
    if let Some(s) = spec {
        return parse_valuation_spec(&s);
    }
    let missing = |flag: &str| Error::InvalidParameter {
        reason: format!("{flag} is required unless --spec is given"),
    };
    let kind: ValuationKind = kind.ok_or_else(|| missing("--kind"))?.into();
    let param = parse_scalar(&param.ok_or_else(|| missing("--param"))?)?;
    let param = param
        .as_rat()
        .cloned()
        .ok_or_else(|| Error::InvalidParameter {
            reason: "valuation parameter must be a finite rational".into(),
        })?;
    match carrier {
        "qmax" => Ok(Valuation::Qmax(QmaxValuation::new(kind, param)?)),
        "qmax(T)" | "qmax(t)" => Ok(Valuation::FunctionField(FFValuation::new(kind, param)?)),
        other => Err(Error::InvalidParameter {
            reason: format!("unknown carrier {other:?} (qmax|qmax(T))"),
        }),
    }
}

fn cmd_valuate(
    spec: Option<String>,
    kind: Option<KindArg>,
    param: Option<String>,
    carrier: &str,
    expr: &str,
    out: &mut String,
) -> Result<()> {
    let val = build_valuation(spec, kind, param, carrier)?;
    let operand = eval_str(expr)?;
    let value: ExtVal = match &val {
        Valuation::Qmax(q) => {
            let constant = operand
                .as_poly()
                .filter(|p| p.coeffs().len() <= 1)
                .ok_or_else(|| Error::InvalidParameter {
                    reason: "a qmax valuation applies to scalars; this expression involves T"
                        .into(),
                })?;
            qmax_val_eval(q, &constant.coeff(0))
        }
        Valuation::FunctionField(v) => ff_val_eval(v, &operand.to_frac()),
    };
    out.push_str(&format!("{value}\n"));
    Ok(())
}

fn cmd_classify(kind: ValuationKind, carrier: &str, out: &mut String) -> Result<()> {
    let rows = match carrier {
        "qmax" => qmax_classify(kind),
        "qmax(T)" | "qmax(t)" => ff_classify(kind)?,
        other => {
            return Err(Error::InvalidParameter {
                reason: format!("unknown carrier {other:?} (qmax|qmax(T))"),
            })
        }
    };
    for row in rows {
        out.push_str(&format!("{row}\n"));
    }
    Ok(())
}

fn cmd_curve(out: &mut String) {
    let curve = abstract_curve();
    for p in curve.points() {
        out.push_str(&format!(
            "point={} valuation={} ideal={} closed={}\n",
            p.point, p.valuation, p.ideal, p.closed
        ));
    }
    out.push_str(&format!(
        "points={} closed_points={}\n",
        curve.points().len(),
        curve.closed_point_count()
    ));
}

fn load_table(target: &str) -> Result<FiniteHyperstructure> {
    match target {
        "krasner" => Ok(krasner()),
        "signs" => Ok(signs()),
        "-" => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Error::BadTable(format!("cannot read stdin: {e}")))?;
            FiniteHyperstructure::parse(&text)
        }
        path => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::BadTable(format!("cannot read {path}: {e}")))?;
            FiniteHyperstructure::parse(&text)
        }
    }
}

fn write_report(report: &AxiomReport, format: Format, out: &mut String) {
    match format {
        Format::Compact => out.push_str(&format!("{report}\n")),
        Format::Records => {
            for check in report.checks() {
                out.push_str(&format!("{check}\n"));
            }
            out.push_str(&format!(
                "result={}\n",
                if report.passed() { "pass" } else { "fail" }
            ));
        }
    }
}

fn cmd_hcheck(
    target: Option<&str>,
    level: Level,
    rval: Option<&str>,
    format: Format,
    out: &mut String,
) -> Result<()> {
    let report = match rval {
        Some(samples) => {
            let samples: Vec<TropScalar> = samples
                .split(',')
                .map(|s| parse_scalar(s.trim()))
                .collect::<Result<_>>()?;
            rval_axiom_check(&samples)
        }
        None => {
            let table = load_table(target.expect("clap enforces target without --rval"))?;
            match level {
                Level::Group => check_hypergroup(&table),
                Level::Ring => check_hyperring(&table),
                Level::Field => check_hyperfield(&table),
            }
        }
    };
    write_report(&report, format, out);
    Ok(())
}

fn cmd_quotient(
    modulus: u64,
    units: &str,
    output: Option<PathBuf>,
    out: &mut String,
) -> Result<()> {
    let gens: Vec<u64> = if units == "full" {
        full_unit_group(modulus)
    } else {
        units
            .split(',')
            .map(|s| {
                s.trim().parse().map_err(|_| Error::InvalidParameter {
                    reason: format!("--units expects residues or 'full', got {s:?}"),
                })
            })
            .collect::<Result<_>>()?
    };
    let table = quotient_hyperring(modulus, &gens)?;
    // The construction theorem guarantees a hyperring; re-verify anyway.
    let report = check_hyperring(&table);
    if !report.passed() {
        return Err(Error::BadTable(format!(
            "quotient failed hyperring re-verification: {report}"
        )));
    }
    let text = table.serialize();
    match output {
        None => out.push_str(&text),
        Some(path) => {
            std::fs::write(&path, text).map_err(|e| Error::InvalidParameter {
                reason: format!("cannot write {}: {e}", path.display()),
            })?;
            out.push_str(&format!("wrote={}\n", path.display()));
        }
    }
    Ok(())
}

fn cmd_iso(left: &str, right: &str, out: &mut String) -> Result<()> {
    let (a, b) = (load_table(left)?, load_table(right)?);
    match iso_search(&a, &b)? {
        Some(map) => {
            out.push_str("iso=true\n");
            for (x, y) in map {
                out.push_str(&format!("map={x}:{y}\n"));
            }
        }
        None => out.push_str("iso=false\n"),
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> Result<String> {
        let mut argv = vec!["tropval"];
        argv.extend_from_slice(args);
        execute(Cli::try_parse_from(argv).expect("valid argv"))
    }

    #[test]
    fn factor_matches_the_published_line() {
        assert_eq!(
            run(&["factor", "T^2 + T + 3"]).unwrap(),
            "unit=0 tpower=0 roots=[3/2,3/2]\n"
        );
        assert_eq!(
            run(&["--format", "records", "factor", "T^2+T+3"]).unwrap(),
            "unit=0\ntpower=0\nroots=[3/2,3/2]\n"
        );
    }

    #[test]
    fn canon_reports_hull_torder_degree() {
        assert_eq!(
            run(&["canon", "T^2+T+3"]).unwrap(),
            "coeffs=[3,3/2,0] torder=0 degree=2\n"
        );
        assert_eq!(
            run(&["canon", "2*T^2+3*T"]).unwrap(),
            "coeffs=[-inf,3,2] torder=1 degree=2\n"
        );
        assert_eq!(
            run(&["canon", "-inf"]).unwrap(),
            "coeffs=[] torder=none degree=none\n"
        );
        assert_eq!(
            run(&["--format", "records", "canon", "T"]).unwrap(),
            "coeffs=[-inf,0]\ntorder=1\ndegree=1\n"
        );
    }

    #[test]
    fn eval_equiv_ratify() {
        assert_eq!(run(&["eval", "T^2+T+3", "3/2"]).unwrap(), "3\n");
        assert_eq!(run(&["eval", "T", "-inf"]).unwrap(), "-inf\n");
        assert_eq!(
            run(&["eval", "(0)/(T)", "-inf"]),
            Err(Error::DivisionByBottom)
        );
        assert_eq!(run(&["equiv", "T^2+T+3", "T^2+3/2*T+3"]).unwrap(), "true\n");
        assert_eq!(run(&["equiv", "T", "T+0"]).unwrap(), "false\n");
        assert_eq!(
            run(&["equiv", "(T)/(T+1)", "(T+0)/(T+1)"]).unwrap(),
            "false\n"
        );
        assert_eq!(
            run(&["ratify", "(T^2+3/2*T+3)/(T+3/2)"]).unwrap(),
            "(T+3/2)/(0)\n"
        );
    }

    #[test]
    fn valuate_golden_and_spec_path() {
        assert_eq!(
            run(&["valuate", "--kind", "strict", "--param", "-1", "2*T^2 + 3*T"]).unwrap(),
            "-1\n"
        );
        assert_eq!(
            run(&["valuate", "--kind", "strict", "--param", "1", "2*T^2 + 3*T"]).unwrap(),
            "2\n"
        );
        assert_eq!(
            run(&[
                "valuate",
                "--spec",
                "kind=classical; base=qmax; param=-1",
                "3",
            ])
            .unwrap(),
            "-3\n"
        );
        assert_eq!(
            run(&["valuate", "--spec", "kind=classical; base=qmax; param=-1", "-inf"]).unwrap(),
            "inf\n"
        );
        assert!(matches!(
            run(&["valuate", "--kind", "strict", "--param", "1", "--carrier", "qmax", "T"]),
            Err(Error::InvalidParameter { .. })
        ));
        // Constraint violations surface as domain errors.
        assert!(matches!(
            run(&["valuate", "--kind", "strict", "--param", "-1", "--carrier", "qmax", "3"]),
            Err(Error::InvalidParameter { .. })
        ));
    }

    #[test]
    fn classify_tables() {
        assert_eq!(
            run(&["classify", "--kind", "strict", "--carrier", "qmax(T)"]).unwrap(),
            "label=nu_minus param=-1\nlabel=nu_zero param=0\nlabel=nu_plus param=1\n"
        );
        assert_eq!(
            run(&["classify", "--kind", "classical"]).unwrap(),
            "label=negative param=-1\nlabel=trivial param=0\nlabel=positive param=1\n"
        );
        assert_eq!(
            run(&["classify", "--kind", "hyper"]).unwrap(),
            "label=trivial param=0\nlabel=positive param=1\n"
        );
        assert_eq!(
            run(&["classify", "--kind", "classical", "--carrier", "qmax(T)"]),
            Err(Error::ClassicalNotClassified)
        );
    }

    #[test]
    fn curve_prints_three_points() {
        assert_eq!(
            run(&["curve"]).unwrap(),
            "point=c_plus valuation=nu_plus ideal={t,...} closed=true\n\
             point=c_zero valuation=nu_zero ideal=generic closed=false\n\
             point=c_minus valuation=nu_minus ideal={t^-1,...} closed=true\n\
             points=3 closed_points=2\n"
        );
    }

    #[test]
    fn hcheck_builtins_and_rval() {
        let k = run(&["hcheck", "krasner"]).unwrap();
        assert!(k.ends_with("result=pass\n"), "{k}");
        assert!(k.contains("reversibility=pass"));
        assert!(k.contains("nonzero_group=pass"));

        let s = run(&["--format", "records", "hcheck", "signs", "--level", "ring"]).unwrap();
        assert!(s.lines().all(|l| l.ends_with("=pass") || l == "result=pass"));

        let r = run(&["hcheck", "--rval", "-inf, 0, 1, 5/2"]).unwrap();
        assert!(r.ends_with("result=pass\n"), "{r}");
    }

    #[test]
    fn quotient_and_iso_round_trip() {
        let table = run(&["quotient", "--modulus", "5", "--units", "full"]).unwrap();
        assert!(table.contains("carrier 0 1.2.3.4"), "{table}");
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("f5.hyp");
        std::fs::write(&path, &table).unwrap();
        let out = run(&["iso", path.to_str().unwrap(), "krasner"]).unwrap();
        assert_eq!(out, "iso=true\nmap=0:0\nmap=1.2.3.4:1\n");

        let no = run(&["iso", "krasner", "signs"]).unwrap();
        assert_eq!(no, "iso=false\n");

        assert!(matches!(
            run(&["quotient", "--modulus", "12", "--units", "2"]),
            Err(Error::NotAUnit { .. })
        ));
    }

    #[test]
    fn quotient_output_flag_writes_a_parseable_table() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("z4.hyp");
        let msg = run(&[
            "quotient",
            "--modulus",
            "4",
            "--units",
            "3",
            "--output",
            path.to_str().unwrap(),
        ])
        .unwrap();
        assert_eq!(msg, format!("wrote={}\n", path.display()));
        let text = std::fs::read_to_string(&path).unwrap();
        let parsed = FiniteHyperstructure::parse(&text).unwrap();
        assert_eq!(parsed.serialize(), text);
        assert_eq!(parsed.carrier(), &["0", "1.3", "2"]);
    }

    #[test]
    fn syntax_and_domain_errors_map_to_exit_codes() {
        let syntax = run(&["canon", "T ^"]).unwrap_err();
        assert_eq!(syntax.exit_code(), 2);
        let domain = run(&["factor", "-inf"]).unwrap_err();
        assert_eq!(domain.exit_code(), 1);
        let missing = run(&["hcheck", "/no/such/file.hyp"]).unwrap_err();
        assert_eq!(missing.exit_code(), 1);
    }
}
