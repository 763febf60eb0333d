//! Flag-driven argument parsing. No configuration files, no environment
//! variables; identical argv must always produce identical behavior.

use std::fmt;

/// Output format, selectable on every subcommand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
    Latex,
}

/// One fully-parsed invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Invocation {
    pub command: Command,
    pub format: Format,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Number { j: usize },
    Poly { p: usize },
    PowerSum { p: usize, eval_at: Option<i64> },
    Zeta { s: i64, digits: Option<usize> },
    Fourier { k: usize, n: i64 },
    InnerProduct { k: usize, l: usize },
    Pi { digits: usize },
    Verify { max_k: usize, terms: u64 },
}

/// A bad command line: unknown subcommand or flag, wrong arity, or an
/// argument that does not parse. The message always names the valid flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub const USAGE: &str = "usage: basel <subcommand> [args] [--format text|json|latex]
subcommands:
  number <j>                     Bernoulli number B_j
  poly <p>                       Bernoulli polynomial B_p(t)
  powersum <p> [--eval <m>]      power-sum polynomial S_p(t), optionally evaluated
  zeta <s> [--digits <D>]        exact zeta value at an integer argument
  fourier <k> <n>                Fourier coefficient c_n(B_k)
  innerproduct <k> <l>           integral of B_k(t) B_l(t) over [0, 1]
  pi --digits <D>                pi truncated to D decimal digits
  verify [--max-k <K>] [--terms <N>]  run the cross-oracle verification suite";

fn usage_for(subcommand: &str) -> &'static str {
    match subcommand {
        "number" => "usage: basel number <j> [--format text|json|latex]",
        "poly" => "usage: basel poly <p> [--format text|json|latex]",
        "powersum" => "usage: basel powersum <p> [--eval <m>] [--format text|json|latex]",
        "zeta" => "usage: basel zeta <s> [--digits <D>] [--format text|json|latex]",
        "fourier" => "usage: basel fourier <k> <n> [--format text|json|latex]",
        "innerproduct" => "usage: basel innerproduct <k> <l> [--format text|json|latex]",
        "pi" => "usage: basel pi --digits <D> [--format text|json|latex]",
        "verify" => "usage: basel verify [--max-k <K>] [--terms <N>] [--format text|json|latex]",
        _ => USAGE,
    }
}

struct Parser<'a> {
    subcommand: &'a str,
    positionals: Vec<&'a str>,
    format: Option<Format>,
    eval_at: Option<&'a str>,
    digits: Option<&'a str>,
    max_k: Option<&'a str>,
    terms: Option<&'a str>,
}

impl<'a> Parser<'a> {
    fn scan(subcommand: &'a str, rest: &'a [String], flags: &[&str]) -> Result<Self, UsageError> {
        let mut parser = Parser {
            subcommand,
            positionals: Vec::new(),
            format: None,
            eval_at: None,
            digits: None,
            max_k: None,
            terms: None,
        };
        let mut iter = rest.iter();
        while let Some(token) = iter.next() {
            if let Some(flag) = token.strip_prefix("--") {
                if flag != "format" && !flags.contains(&flag) {
                    return Err(UsageError(format!(
                        "unknown flag --{flag} for '{subcommand}'\n{}",
                        usage_for(subcommand)
                    )));
                }
                let value = iter.next().ok_or_else(|| {
                    UsageError(format!(
                        "flag --{flag} needs a value\n{}",
                        usage_for(subcommand)
                    ))
                })?;
                if flag == "format" {
                    let parsed = match value.as_str() {
                        "text" => Format::Text,
                        "json" => Format::Json,
                        "latex" => Format::Latex,
                        other => {
                            return Err(UsageError(format!(
                                "--format must be text, json or latex, got {other:?}"
                            )))
                        }
                    };
                    if parser.format.replace(parsed).is_some() {
                        return Err(UsageError("flag --format given twice".into()));
                    }
                    continue;
                }
                let slot = match flag {
                    "eval" => &mut parser.eval_at,
                    "digits" => &mut parser.digits,
                    "max-k" => &mut parser.max_k,
                    "terms" => &mut parser.terms,
                    _ => unreachable!("flag list is checked above"),
                };
                if slot.replace(value).is_some() {
                    return Err(UsageError(format!("flag --{flag} given twice")));
                }
            } else {
                parser.positionals.push(token);
            }
        }
        Ok(parser)
    }

    fn positional<T: std::str::FromStr>(&self, index: usize, name: &str) -> Result<T, UsageError> {
        let raw = self.positionals.get(index).ok_or_else(|| {
            UsageError(format!(
                "missing argument <{name}>\n{}",
                usage_for(self.subcommand)
            ))
        })?;
        raw.parse().map_err(|_| {
            UsageError(format!(
                "argument <{name}> must be an integer in range, got {raw:?}"
            ))
        })
    }

    fn no_extra_positionals(&self, expected: usize) -> Result<(), UsageError> {
        if self.positionals.len() > expected {
            return Err(UsageError(format!(
                "unexpected argument {:?}\n{}",
                self.positionals[expected],
                usage_for(self.subcommand)
            )));
        }
        Ok(())
    }

    fn flag_value<T: std::str::FromStr>(
        &self,
        raw: Option<&str>,
        name: &str,
    ) -> Result<Option<T>, UsageError> {
        match raw {
            None => Ok(None),
            Some(raw) => raw.parse().map(Some).map_err(|_| {
                UsageError(format!(
                    "flag --{name} must be an integer in range, got {raw:?}"
                ))
            }),
        }
    }
}

/// Parses a full argv (without the program name).
pub fn parse(args: &[String]) -> Result<Invocation, UsageError> {
    let (subcommand, rest) = args
        .split_first()
        .ok_or_else(|| UsageError(format!("no subcommand given\n{USAGE}")))?;
    match subcommand.as_str() {
        "number" => {
            let p = Parser::scan(subcommand, rest, &[])?;
            p.no_extra_positionals(1)?;
            let command = Command::Number {
                j: p.positional(0, "j")?,
            };
            Ok(Invocation {
                command,
                format: p.format.unwrap_or_default(),
            })
        }
        "poly" => {
            let p = Parser::scan(subcommand, rest, &[])?;
            p.no_extra_positionals(1)?;
            let command = Command::Poly {
                p: p.positional(0, "p")?,
            };
            Ok(Invocation {
                command,
                format: p.format.unwrap_or_default(),
            })
        }
        "powersum" => {
            let p = Parser::scan(subcommand, rest, &["eval"])?;
            p.no_extra_positionals(1)?;
            let command = Command::PowerSum {
                p: p.positional(0, "p")?,
                eval_at: p.flag_value(p.eval_at, "eval")?,
            };
            Ok(Invocation {
                command,
                format: p.format.unwrap_or_default(),
            })
        }
        "zeta" => {
            let p = Parser::scan(subcommand, rest, &["digits"])?;
            p.no_extra_positionals(1)?;
            let command = Command::Zeta {
                s: p.positional(0, "s")?,
                digits: p.flag_value(p.digits, "digits")?,
            };
            Ok(Invocation {
                command,
                format: p.format.unwrap_or_default(),
            })
        }
        "fourier" => {
            let p = Parser::scan(subcommand, rest, &[])?;
            p.no_extra_positionals(2)?;
            let command = Command::Fourier {
                k: p.positional(0, "k")?,
                n: p.positional(1, "n")?,
            };
            Ok(Invocation {
                command,
                format: p.format.unwrap_or_default(),
            })
        }
        "innerproduct" => {
            let p = Parser::scan(subcommand, rest, &[])?;
            p.no_extra_positionals(2)?;
            let command = Command::InnerProduct {
                k: p.positional(0, "k")?,
                l: p.positional(1, "l")?,
            };
            Ok(Invocation {
                command,
                format: p.format.unwrap_or_default(),
            })
        }
        "pi" => {
            let p = Parser::scan(subcommand, rest, &["digits"])?;
            p.no_extra_positionals(0)?;
            let digits = p.flag_value(p.digits, "digits")?.ok_or_else(|| {
                UsageError(format!("pi requires --digits <D>\n{}", usage_for("pi")))
            })?;
            Ok(Invocation {
                command: Command::Pi { digits },
                format: p.format.unwrap_or_default(),
            })
        }
        "verify" => {
            let p = Parser::scan(subcommand, rest, &["max-k", "terms"])?;
            p.no_extra_positionals(0)?;
            let max_k = p.flag_value(p.max_k, "max-k")?.unwrap_or(5);
            let terms = p.flag_value(p.terms, "terms")?.unwrap_or(10_000);
            if max_k == 0 {
                return Err(UsageError("--max-k must be at least 1".into()));
            }
            if terms == 0 {
                return Err(UsageError("--terms must be at least 1".into()));
            }
            Ok(Invocation {
                command: Command::Verify { max_k, terms },
                format: p.format.unwrap_or_default(),
            })
        }
        other => Err(UsageError(format!("unknown subcommand {other:?}\n{USAGE}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse_ok(args: &[&str]) -> Invocation {
        parse(&args.iter().map(|s| s.to_string()).collect::<Vec<_>>()).unwrap()
    }

    fn parse_err(args: &[&str]) -> UsageError {
        parse(&args.iter().map(|s| s.to_string()).collect::<Vec<_>>()).unwrap_err()
    }

    #[test]
    fn parses_each_subcommand() {
        assert_eq!(parse_ok(&["number", "6"]).command, Command::Number { j: 6 });
        assert_eq!(parse_ok(&["poly", "3"]).command, Command::Poly { p: 3 });
        assert_eq!(
            parse_ok(&["powersum", "2", "--eval", "4"]).command,
            Command::PowerSum {
                p: 2,
                eval_at: Some(4)
            }
        );
        assert_eq!(
            parse_ok(&["zeta", "-1"]).command,
            Command::Zeta {
                s: -1,
                digits: None
            }
        );
        assert_eq!(
            parse_ok(&["zeta", "2", "--digits", "15"]).command,
            Command::Zeta {
                s: 2,
                digits: Some(15)
            }
        );
        assert_eq!(
            parse_ok(&["fourier", "2", "-3"]).command,
            Command::Fourier { k: 2, n: -3 }
        );
        assert_eq!(
            parse_ok(&["innerproduct", "1", "1"]).command,
            Command::InnerProduct { k: 1, l: 1 }
        );
        assert_eq!(
            parse_ok(&["pi", "--digits", "5"]).command,
            Command::Pi { digits: 5 }
        );
        assert_eq!(
            parse_ok(&["verify"]).command,
            Command::Verify {
                max_k: 5,
                terms: 10_000
            }
        );
        assert_eq!(
            parse_ok(&["verify", "--max-k", "2", "--terms", "100"]).command,
            Command::Verify {
                max_k: 2,
                terms: 100
            }
        );
    }

    #[test]
    fn format_flag_is_global_and_positional_order_free() {
        assert_eq!(parse_ok(&["number", "6"]).format, Format::Text);
        assert_eq!(
            parse_ok(&["number", "--format", "json", "6"]).format,
            Format::Json
        );
        assert_eq!(
            parse_ok(&["zeta", "2", "--format", "latex"]).format,
            Format::Latex
        );
    }

    #[test]
    fn rejects_unknown_flags_and_subcommands() {
        let e = parse_err(&["number", "6", "--frmt", "json"]);
        assert!(e.0.contains("unknown flag --frmt"), "{}", e.0);
        assert!(e.0.contains("usage: basel number"), "{}", e.0);
        assert!(parse_err(&["frobnicate"]).0.contains("unknown subcommand"));
        assert!(parse_err(&[]).0.contains("no subcommand"));
        assert!(parse_err(&["zeta", "2", "--eval", "3"])
            .0
            .contains("unknown flag --eval"));
    }

    #[test]
    fn rejects_malformed_arguments() {
        assert!(parse_err(&["number"]).0.contains("missing argument <j>"));
        assert!(parse_err(&["number", "x"]).0.contains("<j>"));
        assert!(parse_err(&["number", "-3"]).0.contains("<j>"));
        assert!(parse_err(&["fourier", "2"])
            .0
            .contains("missing argument <n>"));
        assert!(parse_err(&["pi"]).0.contains("requires --digits"));
        assert!(parse_err(&["number", "6", "7"])
            .0
            .contains("unexpected argument"));
        assert!(parse_err(&["zeta", "2", "--format", "yaml"])
            .0
            .contains("--format must be"));
        assert!(parse_err(&["verify", "--terms", "0"]).0.contains("--terms"));
        assert!(parse_err(&["zeta", "2", "--digits", "15", "--digits", "9"])
            .0
            .contains("twice"));
        assert!(
            parse_err(&["zeta", "2", "--format", "json", "--format", "text"])
                .0
                .contains("twice")
        );
    }
}
