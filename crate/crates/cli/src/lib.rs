//! Command-line front end for the exact Bernoulli/zeta library.
//!
//! Every subcommand writes one deterministic result to stdout in the
//! requested format and exits 0; bad command lines exit 1 with a usage
//! message on stderr; mathematically out-of-domain requests (such as
//! `zeta 3`) exit 2 with the reason.

pub mod args;
pub mod render;
pub mod verify;

use std::io::Write;

use args::{Command, Format, Invocation};
use basel_core::{
    bernoulli_number, bernoulli_polynomial, fourier_coeff_closed, inner_product_closed, pi_digits,
    power_sum_polynomial, zeta_even, zeta_even_decimal, zeta_negative, Error, FourierCoeff,
    Rational, MAX_DIGITS,
};
use render::{
    fourier_coeff_latex, fourier_terms_json, json_string, parseval_report_json, poly_coeffs_json,
    poly_latex, rational_json, rational_latex, zeta_latex,
};

/// Exit code for success.
pub const EXIT_OK: i32 = 0;
/// Exit code for usage errors (bad flags or arguments).
pub const EXIT_USAGE: i32 = 1;
/// Exit code for domain errors (mathematically out-of-range requests).
pub const EXIT_DOMAIN: i32 = 2;

/// Runs one invocation. `argv` excludes the program name. Output goes to
/// `out`, error messages to `err`; the return value is the process exit
/// code.
pub fn run(argv: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let invocation = match args::parse(argv) {
        Ok(invocation) => invocation,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    match execute(&invocation) {
        Ok(output) => {
            let _ = out.write_all(output.as_bytes());
            EXIT_OK
        }
        Err(e) if e.is_usage() => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
        Err(e) => {
            let _ = writeln!(err, "domain error: {e}");
            EXIT_DOMAIN
        }
    }
}

/// Produces the full stdout payload for an invocation, or the error that
/// decides the exit code.
pub fn execute(invocation: &Invocation) -> Result<String, Error> {
    let format = invocation.format;
    match &invocation.command {
        Command::Number { j } => {
            let value = bernoulli_number(*j);
            Ok(match format {
                Format::Text => format!("{value}\n"),
                Format::Json => format!("{{\"j\":{j},\"value\":{}}}\n", rational_json(&value)),
                Format::Latex => format!("{}\n", rational_latex(&value)),
            })
        }
        Command::Poly { p } => {
            let poly = bernoulli_polynomial(*p);
            Ok(match format {
                Format::Text => format!("{poly}\n"),
                Format::Json => {
                    format!("{{\"p\":{p},\"coeffs\":{}}}\n", poly_coeffs_json(&poly))
                }
                Format::Latex => format!("{}\n", poly_latex(&poly)),
            })
        }
        Command::PowerSum { p, eval_at } => {
            let poly = power_sum_polynomial(*p);
            match eval_at {
                None => Ok(match format {
                    Format::Text => format!("{poly}\n"),
                    Format::Json => {
                        format!("{{\"p\":{p},\"coeffs\":{}}}\n", poly_coeffs_json(&poly))
                    }
                    Format::Latex => format!("{}\n", poly_latex(&poly)),
                }),
                Some(m) => {
                    let value = poly.eval(&Rational::from_integer(*m));
                    Ok(match format {
                        Format::Text => format!("{value}\n"),
                        Format::Json => format!(
                            "{{\"p\":{p},\"m\":{m},\"value\":{}}}\n",
                            rational_json(&value)
                        ),
                        Format::Latex => format!("{}\n", rational_latex(&value)),
                    })
                }
            }
        }
        Command::Zeta { s, digits } => zeta_command(*s, *digits, format),
        Command::Fourier { k, n } => {
            let coeff = fourier_coeff_closed(*k, *n)?;
            Ok(match format {
                Format::Text => format!("{coeff}\n"),
                Format::Json => match &coeff {
                    FourierCoeff::Rational(r) => {
                        format!("{{\"k\":{k},\"n\":{n},\"value\":{}}}\n", rational_json(r))
                    }
                    FourierCoeff::Exact(f) => format!(
                        "{{\"k\":{k},\"n\":{n},\"terms\":{}}}\n",
                        fourier_terms_json(f)
                    ),
                },
                Format::Latex => format!("{}\n", fourier_coeff_latex(&coeff)),
            })
        }
        Command::InnerProduct { k, l } => {
            let value = inner_product_closed(*k, *l)?;
            Ok(match format {
                Format::Text => format!("{value}\n"),
                Format::Json => format!(
                    "{{\"k\":{k},\"l\":{l},\"value\":{}}}\n",
                    rational_json(&value)
                ),
                Format::Latex => format!("{}\n", rational_latex(&value)),
            })
        }
        Command::Pi { digits } => {
            let value = pi_digits(*digits)?;
            Ok(match format {
                Format::Json => format!(
                    "{{\"digits\":{digits},\"value\":{}}}\n",
                    json_string(&value)
                ),
                Format::Text | Format::Latex => format!("{value}\n"),
            })
        }
        Command::Verify { max_k, terms } => {
            let report = verify::verify_all(*max_k, *terms);
            Ok(render_verify(&report, format))
        }
    }
}

/// zeta dispatch: even s >= 2 has the exact pi-power form, negative integers
/// are exact rationals, and s in {0, 1} or odd s >= 3 are out of the exact
/// domain.
fn zeta_command(s: i64, digits: Option<usize>, format: Format) -> Result<String, Error> {
    if let Some(d) = digits {
        if d > MAX_DIGITS {
            return Err(Error::DigitsOutOfRange(d));
        }
    }
    if s >= 2 && s % 2 == 0 {
        let k = (s / 2) as usize;
        let value = zeta_even(k);
        let decimal = digits.map(|d| zeta_even_decimal(k, d)).transpose()?;
        return Ok(match format {
            Format::Text => match &decimal {
                Some(d) => format!("{value}\n{d}\n"),
                None => format!("{value}\n"),
            },
            Format::Json => {
                let decimal_field = decimal
                    .as_ref()
                    .map(|d| format!(",\"decimal\":{}", json_string(d)))
                    .unwrap_or_default();
                format!(
                    "{{\"s\":{s},\"coeff\":{},\"pi_power\":{}{decimal_field}}}\n",
                    rational_json(&value.coeff),
                    value.pi_power
                )
            }
            Format::Latex => match &decimal {
                Some(d) => format!("{}\n{d}\n", zeta_latex(&value)),
                None => format!("{}\n", zeta_latex(&value)),
            },
        });
    }
    if s <= -1 {
        let value = zeta_negative((-s) as usize);
        let decimal = digits.map(|d| value.to_decimal(d));
        return Ok(match format {
            Format::Text => match &decimal {
                Some(d) => format!("{value}\n{d}\n"),
                None => format!("{value}\n"),
            },
            Format::Json => {
                let decimal_field = decimal
                    .as_ref()
                    .map(|d| format!(",\"decimal\":{}", json_string(d)))
                    .unwrap_or_default();
                format!(
                    "{{\"s\":{s},\"value\":{}{decimal_field}}}\n",
                    rational_json(&value)
                )
            }
            Format::Latex => match &decimal {
                Some(d) => format!("{}\n{d}\n", rational_latex(&value)),
                None => format!("{}\n", rational_latex(&value)),
            },
        });
    }
    Err(match s {
        1 => Error::ZetaPole,
        0 => Error::ZetaAtZero,
        _ => Error::ZetaOddArgument(s),
    })
}

fn render_verify(report: &verify::VerifyReport, format: Format) -> String {
    match format {
        Format::Json => {
            let checks: Vec<String> = report
                .checks
                .iter()
                .map(|c| format!("{{\"name\":{},\"pass\":{}}}", json_string(&c.name), c.pass))
                .collect();
            let parseval: Vec<String> = report.parseval.iter().map(parseval_report_json).collect();
            format!(
                "{{\"max_k\":{},\"terms\":{},\"checks\":[{}],\"parseval\":[{}],\"pass\":{}}}\n",
                report.max_k,
                report.terms,
                checks.join(","),
                parseval.join(","),
                report.pass()
            )
        }
        Format::Text | Format::Latex => {
            let mut out = String::new();
            for check in &report.checks {
                let status = if check.pass { "ok" } else { "FAIL" };
                out.push_str(&format!("{status} {}\n", check.name));
            }
            for r in &report.parseval {
                let status = if r.pass { "ok" } else { "FAIL" };
                out.push_str(&format!(
                    "{status} parseval tail bound for k = {}, N = {} (lhs = {})\n",
                    r.k, r.terms, r.lhs
                ));
            }
            let total = report.checks.len() + report.parseval.len();
            if report.pass() {
                out.push_str(&format!("all {total} checks passed\n"));
            } else {
                let failed = report.checks.iter().filter(|c| !c.pass).count()
                    + report.parseval.iter().filter(|r| !r.pass).count();
                out.push_str(&format!("{failed} of {total} checks FAILED\n"));
            }
            out
        }
    }
}
