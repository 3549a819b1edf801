use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use idealkit::encoding::{decode_ideal, encode_ideal, IdealCode};
use idealkit::groebner::{groebner_basis, normal_form};
use idealkit::polyarith::{scan_variables, Coeff};
use idealkit::predicates::{
    complexity, dimension, height_in_quotient, height_poly, prime_probe, radical_equals,
    rational_maximal, ProbeReport, RadicalReport,
};
use idealkit::transfer::{
    reduce_witness_mod_p, search_witness_points, sweep, verify_witness, Caps, PrimeSelection,
    SweepOutcome, Witness,
};
use idealkit::{Error, Field, IdealPresentation, MonomialOrder, Polynomial, Ring};
use serde::Serialize;
use serde_json::json;

use crate::casefile::CaseFile;
use crate::{CapsArgs, CliError, Command, OrderArg, RingArgs};

/// A JSON document and the exit code that goes with it.
#[derive(Debug)]
pub struct Outcome {
    pub body: String,
    pub exit: i32,
    pub path: Option<PathBuf>,
}

impl Outcome {
    fn new<T: Serialize>(value: &T, pass: bool) -> Outcome {
        Outcome {
            body: to_json(value),
            exit: if pass { 0 } else { 1 },
            path: None,
        }
    }

    pub(crate) fn emit(&self, stdout: &mut dyn Write) -> Result<(), CliError> {
        match &self.path {
            Some(p) => std::fs::write(p, &self.body)
                .map_err(|e| CliError::Io(format!("{}: {e}", p.display()))),
            None => stdout
                .write_all(self.body.as_bytes())
                .map_err(|e| CliError::Io(e.to_string())),
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

pub(crate) fn error_json(e: &CliError) -> String {
    let kind = match e {
        CliError::Core(Error::NotContained) => "not_contained",
        CliError::Core(Error::UnitIdeal) => "unit_ideal",
        _ => "error",
    };
    serde_json::to_string_pretty(&json!({"passed": false, "error": kind, "message": e.to_string()}))
        .expect("plain json")
}

impl From<&CapsArgs> for Caps {
    fn from(c: &CapsArgs) -> Caps {
        Caps {
            exponent_cap: c.exponent_cap,
            probe_trials: c.probe_trials,
            probe_degree: c.probe_degree,
            seed: c.seed,
        }
    }
}

pub(crate) fn execute(cmd: &Command) -> Result<Outcome, CliError> {
    match cmd {
        Command::Verify {
            case,
            prime,
            char0,
            caps,
        } => verify(case, *prime, *char0, &caps.into()),
        Command::Sweep {
            case,
            primes,
            jobs,
            output,
            caps,
        } => {
            let (sys, w) = CaseFile::load(case)?.to_problem()?;
            let sel = parse_primes(primes)?;
            let mut out = match sweep(&sys, &w, &sel, &caps.into(), *jobs)? {
                SweepOutcome::Completed(rep) => Outcome::new(&rep, rep.all_passed),
                SweepOutcome::Refused(res) => {
                    Outcome::new(&json!({"refused": true, "char0": res}), false)
                }
            };
            out.path = output.clone();
            Ok(out)
        }
        Command::Gb { ideal, ring } => {
            let (r, [i]) = ideals(ring, [ideal])?;
            let gb = groebner_basis(&i)?;
            let basis: Vec<String> = gb.basis().iter().map(Polynomial::render).collect();
            Ok(Outcome::new(
                &json!({"ring": describe(&r), "basis": basis}),
                true,
            ))
        }
        Command::Member { f, ideal, ring } => {
            let r = ambient(ring, &[ideal, f])?;
            let i = IdealPresentation::parse(&r, &operand(ideal)?)?;
            let f = Polynomial::parse(&r, &operand(f)?)?;
            let gb = groebner_basis(&i)?;
            let nf = normal_form(&f, gb.basis())?;
            let member = nf.is_zero();
            Ok(Outcome::new(
                &json!({"member": member, "normal_form": nf.render()}),
                member,
            ))
        }
        Command::Dim { ideal, ring } => {
            let (_, [i]) = ideals(ring, [ideal])?;
            dimension(&i)?;
            Ok(Outcome::new(&height_poly(&i)?, true))
        }
        Command::Height {
            ideal,
            within,
            ring,
        } => match within {
            None => {
                let (_, [i]) = ideals(ring, [ideal])?;
                Ok(Outcome::new(&height_poly(&i)?, true))
            }
            Some(within) => {
                let (_, [m, i]) = ideals(ring, [ideal, within])?;
                let h = height_in_quotient(&m, &i)?;
                Ok(Outcome::new(
                    &json!({"height": h, "convention": "codimension"}),
                    true,
                ))
            }
        },
        Command::RadicalEq {
            ideal,
            prime_ideal,
            exponent_cap,
            ring,
        } => {
            let (_, [i, p]) = ideals(ring, [ideal, prime_ideal])?;
            let o = radical_equals(&i, &p, *exponent_cap)?;
            Ok(Outcome::new(&RadicalReport::from(&o), o.is_equal()))
        }
        Command::PrimeProbe {
            ideal,
            degree,
            trials,
            seed,
            ring,
        } => {
            let (_, [i]) = ideals(ring, [ideal])?;
            let rep = ProbeReport::from(&prime_probe(&i, *degree, *trials, *seed)?);
            let pass = matches!(rep, ProbeReport::ProbablyPrime { .. });
            Ok(Outcome::new(&rep, pass))
        }
        Command::Maximal { ideal, point, ring } => {
            let (r, [m]) = ideals(ring, [ideal])?;
            let b = parse_point(r.field(), point)?;
            let ok = rational_maximal(&m, &b)?;
            let coords: Vec<String> = b.iter().map(Coeff::to_exact_string).collect();
            Ok(Outcome::new(
                &json!({"rational_maximal": ok, "point": coords}),
                ok,
            ))
        }
        Command::Encode { ideal, d, ring } => {
            let (_, [i]) = ideals(ring, [ideal])?;
            let code = encode_ideal(&i, *d)?;
            let mut body = code.to_json();
            body.push('\n');
            Ok(Outcome {
                body,
                exit: 0,
                path: None,
            })
        }
        Command::Decode { code } => {
            let text = read(code)?;
            let code = IdealCode::from_json(&text)?;
            let i = decode_ideal(&code)?;
            let gens: Vec<String> = i.nonzero_generators().map(Polynomial::render).collect();
            Ok(Outcome::new(
                &json!({"ring": describe(i.ring()), "generators": gens}),
                true,
            ))
        }
        Command::Complexity { ideal, ring } => {
            let (_, [i]) = ideals(ring, [ideal])?;
            Ok(Outcome::new(&complexity(&i), true))
        }
        Command::Points {
            ideal,
            budget,
            ring,
        } => {
            let (r, [i]) = ideals(ring, [ideal])?;
            let Field::Prime(p) = r.field() else {
                return Err(CliError::Usage(
                    "points needs --field set to a prime".into(),
                ));
            };
            let pts: Vec<Vec<String>> = search_witness_points(&i, p, *budget)?
                .iter()
                .map(|b| b.iter().map(Coeff::to_exact_string).collect())
                .collect();
            Ok(Outcome::new(
                &json!({"ring": describe(&r), "points": pts}),
                true,
            ))
        }
    }
}

fn verify(case: &Path, prime: Option<u64>, char0: bool, caps: &Caps) -> Result<Outcome, CliError> {
    let (sys, w) = CaseFile::load(case)?.to_problem()?;
    let rational = w.ring.field() == Field::Rational;
    if char0 && !rational {
        return Err(CliError::Usage("--char0 needs a rational witness".into()));
    }
    let w: Witness = match prime {
        Some(p) if rational => reduce_witness_mod_p(&w, p)?,
        Some(p) if w.ring.field() != Field::prime(p)? => {
            return Err(CliError::Usage(format!(
                "witness lives over {}, not F_{p}",
                w.ring.field()
            )))
        }
        _ => w,
    };
    let res = verify_witness(&sys, &w, caps)?;
    Ok(Outcome::new(&res, res.passed))
}

fn describe(r: &Ring) -> serde_json::Value {
    json!({"field": r.field().to_string(), "vars": r.names(), "order": r.order().to_string()})
}

/// Inline text, or the contents of a file when prefixed with `@`.
fn operand(s: &str) -> Result<String, CliError> {
    match s.strip_prefix('@') {
        Some(path) => Ok(read(Path::new(path))?.trim().to_string()),
        None => Ok(s.to_string()),
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn parse_field(s: &str) -> Result<Field, CliError> {
    let s = s.trim();
    if s == "Q" {
        return Ok(Field::Rational);
    }
    let digits = s
        .strip_prefix("F_")
        .or_else(|| s.strip_prefix("Fp"))
        .unwrap_or(s);
    let p: u64 = digits
        .parse()
        .map_err(|_| CliError::Usage(format!("field must be Q or a prime, got {s:?}")))?;
    Ok(Field::prime(p)?)
}

fn ambient(args: &RingArgs, operands: &[&String]) -> Result<Arc<Ring>, CliError> {
    let names = match &args.vars {
        Some(v) => v.split(',').map(|s| s.trim().to_string()).collect(),
        None => {
            let mut names: Vec<String> = Vec::new();
            for op in operands {
                for n in scan_variables(&operand(op)?)? {
                    if !names.contains(&n) {
                        names.push(n);
                    }
                }
            }
            names
        }
    };
    let order = match args.order {
        OrderArg::Grevlex => MonomialOrder::grevlex(),
        OrderArg::Lex => MonomialOrder::lex(),
    };
    Ok(Ring::new(parse_field(&args.field)?, names, order)?)
}

fn ideals<const N: usize>(
    args: &RingArgs,
    texts: [&String; N],
) -> Result<(Arc<Ring>, [IdealPresentation; N]), CliError> {
    let ring = ambient(args, &texts)?;
    let mut out = Vec::with_capacity(N);
    for t in texts {
        out.push(IdealPresentation::parse(&ring, &operand(t)?)?);
    }
    let out: [IdealPresentation; N] = out.try_into().expect("one per operand");
    Ok((ring, out))
}

fn parse_point(field: Field, s: &str) -> Result<Vec<Coeff>, CliError> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    Ok(s.split(',')
        .map(|c| field.parse_coeff(c.trim()))
        .collect::<Result<Vec<_>, _>>()?)
}

fn parse_primes(s: &str) -> Result<PrimeSelection, CliError> {
    let bad = || CliError::Usage(format!("primes must be LO..HI or a list, got {s:?}"));
    if let Some((lo, hi)) = s.split_once("..") {
        let lo = lo.trim().parse().map_err(|_| bad())?;
        let hi = hi.trim().parse().map_err(|_| bad())?;
        return Ok(PrimeSelection::Range { lo, hi });
    }
    let list = s
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse::<u64>().map_err(|_| bad()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PrimeSelection::List(list))
}
