//! Rendering of exact values in the three output formats.
//!
//! Text and LaTeX forms are the canonical contracts ("t^2 - t + 1/6",
//! "\frac{\pi^2}{6}"); JSON is built by hand so field order and byte output
//! never depend on library internals.

use basel_core::{FourierCoeff, FourierExact, ParsevalReport, Polynomial, Rational, ZetaValue};
use num_bigint::BigInt;

/// Escapes a string for a JSON literal. Values here are plain ASCII digits
/// and punctuation, but escaping is cheap and total.
pub fn json_string(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

/// {"num":"1","den":"42"} with both parts as strings, since they are
/// arbitrary precision.
pub fn rational_json(r: &Rational) -> String {
    format!(
        "{{\"num\":{},\"den\":{}}}",
        json_string(&r.numer().to_string()),
        json_string(&r.denom().to_string())
    )
}

/// \frac{1}{42}, -\frac{1}{30}, or a bare integer.
pub fn rational_latex(r: &Rational) -> String {
    if r.is_integer() {
        return r.numer().to_string();
    }
    let sign = if r.is_negative() { "-" } else { "" };
    format!("{sign}\\frac{{{}}}{{{}}}", r.numer().magnitude(), r.denom())
}

/// JSON list of ascending-power coefficients.
pub fn poly_coeffs_json(p: &Polynomial) -> String {
    let coeffs: Vec<String> = p.coeffs().iter().map(rational_json).collect();
    format!("[{}]", coeffs.join(","))
}

/// Descending powers with \frac coefficients, e.g.
/// "t^3 - \frac{3}{2}t^2 + \frac{1}{2}t".
pub fn poly_latex(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    let mut first = true;
    for (i, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        if first {
            if c.is_negative() {
                out.push('-');
            }
            first = false;
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let mag = c.abs();
        let coeff = if mag == Rational::one() && i > 0 {
            String::new()
        } else if mag.is_integer() {
            mag.numer().to_string()
        } else {
            format!("\\frac{{{}}}{{{}}}", mag.numer(), mag.denom())
        };
        out.push_str(&coeff);
        match i {
            0 => {}
            1 => out.push('t'),
            _ => out.push_str(&format!("t^{}", latex_exponent(i))),
        }
    }
    out
}

/// Single-character exponents stay bare as in "t^2"; longer ones get
/// braces, "t^{12}".
fn latex_exponent(e: usize) -> String {
    if e < 10 {
        e.to_string()
    } else {
        format!("{{{e}}}")
    }
}

/// \frac{\pi^2}{6} or 691\pi^{12}/... style for exact zeta values.
pub fn zeta_latex(z: &ZetaValue) -> String {
    let pi_part = format!("\\pi^{}", latex_exponent(z.pi_power));
    let num = z.coeff.numer();
    let den = z.coeff.denom();
    let one = BigInt::from(1u32);
    let numerator = if num.magnitude() == one.magnitude() {
        let sign = if z.coeff.is_negative() { "-" } else { "" };
        format!("{sign}{pi_part}")
    } else {
        format!("{num}{pi_part}")
    };
    if den == &one {
        numerator
    } else {
        format!("\\frac{{{numerator}}}{{{den}}}")
    }
}

/// Sum of \frac{q}{(2\pi i n)^m} terms in increasing m; the coefficients of
/// the Bernoulli closed form are the integers -k!.
pub fn fourier_latex(f: &FourierExact) -> String {
    if f.is_zero() {
        return "0".into();
    }
    f.terms()
        .iter()
        .map(|(&m, q)| format!("\\frac{{{q}}}{{(2\\pi i n)^{}}}", latex_exponent(m)))
        .collect::<Vec<_>>()
        .join(" + ")
}

/// JSON term list, e.g. [{"m":2,"q":{"num":"-2","den":"1"}}].
pub fn fourier_terms_json(f: &FourierExact) -> String {
    let terms: Vec<String> = f
        .terms()
        .iter()
        .map(|(&m, q)| format!("{{\"m\":{m},\"q\":{}}}", rational_json(q)))
        .collect();
    format!("[{}]", terms.join(","))
}

pub fn fourier_coeff_latex(c: &FourierCoeff) -> String {
    match c {
        FourierCoeff::Rational(r) => rational_latex(r),
        FourierCoeff::Exact(f) => fourier_latex(f),
    }
}

/// The report object, with fixed key order:
/// {"k":1,"terms":1,"lhs":"1/12","partial":"...","residual":"...",
///  "tail_bound":"...","pass":true}
pub fn parseval_report_json(report: &ParsevalReport) -> String {
    format!(
        "{{\"k\":{},\"terms\":{},\"lhs\":{},\"partial\":{},\"residual\":{},\"tail_bound\":{},\"pass\":{}}}",
        report.k,
        report.terms,
        json_string(&report.lhs.to_string()),
        json_string(&report.partial),
        json_string(&report.residual),
        json_string(&report.tail_bound),
        report.pass
    )
}
