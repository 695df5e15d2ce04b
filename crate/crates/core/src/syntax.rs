//! Concrete syntax.
//!
//! ```text
//! Term  ::= Lam | App
//! Lam   ::= ("\" | "λ") VarTok "." Term
//! App   ::= Atom { Atom }
//! Atom  ::= VarTok | "(" Term ")"
//! VarTok ::= "x" digits
//! ```
//!
//! Application associates to the left and a lambda body extends as far to
//! the right as possible. The printer emits the fewest parentheses this
//! grammar allows and always writes `\` for lambda.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::term::{Term, Var};

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}", self.0)
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(x) => write!(f, "{x}"),
            Term::Abs(x, body) => write!(f, "\\{x}. {body}"),
            Term::App(fun, arg) => {
                if fun.is_abstraction() {
                    write!(f, "({fun})")?;
                } else {
                    write!(f, "{fun}")?;
                }
                match arg.as_ref() {
                    Term::Var(x) => write!(f, " {x}"),
                    _ => write!(f, " ({arg})"),
                }
            }
        }
    }
}

pub fn print_term(m: &Term) -> String {
    m.to_string()
}

impl FromStr for Term {
    type Err = Error;

    fn from_str(s: &str) -> Result<Term> {
        parse_term(s)
    }
}

pub fn parse_term(text: &str) -> Result<Term> {
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
    };
    let term = p.term()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.error(&["variable", "\"(\"", "end of input"]));
    }
    Ok(term)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn error(&self, expected: &[&str]) -> Error {
        Error::Parse {
            position: self.pos,
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn term(&mut self) -> Result<Term> {
        self.skip_ws();
        match self.peek() {
            Some('\\' | 'λ') => {
                self.pos += 1;
                self.skip_ws();
                let binder = self.var()?;
                self.skip_ws();
                if self.peek() != Some('.') {
                    return Err(self.error(&["\".\""]));
                }
                self.pos += 1;
                let body = self.term()?;
                Ok(Term::Abs(binder, Box::new(body)))
            }
            _ => self.app(),
        }
    }

    fn app(&mut self) -> Result<Term> {
        let mut acc = match self.atom()? {
            Some(t) => t,
            None => return Err(self.error(&["variable", "\"(\"", "lambda"])),
        };
        while let Some(arg) = self.atom()? {
            acc = Term::app(acc, arg);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Option<Term>> {
        self.skip_ws();
        match self.peek() {
            Some('x') => Ok(Some(Term::Var(self.var()?))),
            Some('(') => {
                self.pos += 1;
                let inner = self.term()?;
                self.skip_ws();
                if self.peek() != Some(')') {
                    return Err(self.error(&["\")\""]));
                }
                self.pos += 1;
                Ok(Some(inner))
            }
            _ => Ok(None),
        }
    }

    fn var(&mut self) -> Result<Var> {
        if self.peek() != Some('x') {
            return Err(self.error(&["variable"]));
        }
        self.pos += 1;
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error(&["digit"]));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits.parse().map(Var).map_err(|_| Error::Parse {
            position: start,
            expected: vec!["variable index that fits in 64 bits".into()],
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(i: u64) -> Term {
        Term::var(i)
    }

    #[test]
    fn parse_examples() {
        assert_eq!(parse_term("x0"), Ok(v(0)));
        assert_eq!(
            parse_term("\\x0. x0 x1"),
            Ok(Term::abs(0, Term::app(v(0), v(1))))
        );
        assert_eq!(
            parse_term("(\\x0. x0) x1 x2"),
            Ok(Term::apps(Term::abs(0, v(0)), [v(1), v(2)]))
        );
        assert_eq!(parse_term("λx3.x3"), Ok(Term::abs(3, v(3))));
        assert_eq!(parse_term("  ( ( x7 ) )  "), Ok(v(7)));
    }

    #[test]
    fn print_examples() {
        assert_eq!(print_term(&v(0)), "x0");
        assert_eq!(
            print_term(&Term::app(v(0), Term::app(v(1), v(2)))),
            "x0 (x1 x2)"
        );
        assert_eq!(
            print_term(&Term::abs(0, Term::app(v(0), v(0)))),
            "\\x0. x0 x0"
        );
        assert_eq!(
            print_term(&Term::app(Term::abs(0, v(0)), Term::abs(1, v(1)))),
            "(\\x0. x0) (\\x1. x1)"
        );
        assert_eq!(print_term(&Term::apps(v(0), [v(1), v(2)])), "x0 x1 x2");
    }

    #[test]
    fn parse_errors_carry_position() {
        assert_eq!(
            parse_term(""),
            Err(Error::Parse {
                position: 0,
                expected: vec!["variable".into(), "\"(\"".into(), "lambda".into()]
            })
        );
        assert!(matches!(
            parse_term("\\x0 x0"),
            Err(Error::Parse { position: 4, .. })
        ));
        assert!(matches!(
            parse_term("(x0"),
            Err(Error::Parse { position: 3, .. })
        ));
        assert!(matches!(
            parse_term("x0 )"),
            Err(Error::Parse { position: 3, .. })
        ));
        assert!(matches!(
            parse_term("y"),
            Err(Error::Parse { position: 0, .. })
        ));
        assert!(matches!(
            parse_term("x"),
            Err(Error::Parse { position: 1, .. })
        ));
        assert!(parse_term("x99999999999999999999999").is_err());
        // a lambda is not an atom
        assert!(parse_term("x0 \\x1. x1").is_err());
    }

    #[test]
    fn print_is_canonical() {
        let text = "((x01))   (\\x2.(x2))";
        let once = print_term(&parse_term(text).unwrap());
        assert_eq!(once, "x1 (\\x2. x2)");
        assert_eq!(print_term(&parse_term(&once).unwrap()), once);
    }
}
